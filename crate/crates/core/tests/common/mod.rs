//! Helpers shared by the integration tests.
#![allow(dead_code)]

use std::sync::Arc;

use gt_core::coxeter::{CoxeterGroup, RootSystem};
use gt_core::galois::GaloisConfig;
use gt_core::polyring::{LinearForm, Monomial, Polynomial, Shape, StructuredFraction};
use gt_core::rational::{frac, int, Rational};
use rand::Rng;

pub fn group(mu: &[usize]) -> Arc<CoxeterGroup> {
    Arc::new(CoxeterGroup::new(RootSystem::type_a(&Shape::new(mu))).unwrap())
}

/// S₂, S₃, S₂×S₂ and S₄, the groups named by the acceptance criteria.
pub fn small_groups() -> Vec<(&'static str, Vec<usize>)> {
    vec![("S2", vec![2]), ("S3", vec![3]), ("S2xS2", vec![2, 2]), ("S4", vec![4])]
}

pub fn random_rational(rng: &mut impl Rng) -> Rational {
    frac(rng.gen_range(-5..=5), rng.gen_range(1..=3))
}

/// A random polynomial with at most `terms` monomials of degree ≤ `deg`.
pub fn random_poly(rng: &mut impl Rng, shape: &Shape, deg: u32, terms: usize) -> Polynomial {
    let n = shape.nvars();
    let all: Vec<Monomial> = (0..=deg).flat_map(|d| Monomial::of_degree(n, &(0..n).collect::<Vec<_>>(), d)).collect();
    let picks = (0..rng.gen_range(1..=terms)).map(|_| (all[rng.gen_range(0..all.len())].clone(), random_rational(rng)));
    Polynomial::from_terms(shape, picks.collect::<Vec<_>>())
}

/// A random fraction p / ∏(x_a − x_b + c) with c ≠ 0, regular at 0.
pub fn random_fraction(rng: &mut impl Rng, shape: &Shape, deg: u32) -> StructuredFraction {
    let n = shape.nvars();
    let num = random_poly(rng, shape, deg, 4);
    if n < 2 {
        return num.into();
    }
    let den: Vec<LinearForm> = (0..rng.gen_range(1..=2))
        .map(|_| {
            let a = rng.gen_range(0..n);
            let b = (a + rng.gen_range(1..n)) % n;
            let mut l = LinearForm::root(n, a, b);
            let c = [-2, -1, 1, 2, 3][rng.gen_range(0..5)];
            l.set_constant(int(c));
            l
        })
        .collect();
    StructuredFraction::new(num, den).unwrap()
}

/// A random element of the algebra generated by `gens`.
pub fn random_invariant(rng: &mut impl Rng, gens: &[Polynomial], max_factors: usize) -> Polynomial {
    let shape = gens[0].shape().clone();
    let mut acc = Polynomial::constant(&shape, random_rational(rng));
    for _ in 0..rng.gen_range(1..=3) {
        let mut term = Polynomial::constant(&shape, random_rational(rng));
        for _ in 0..rng.gen_range(1..=max_factors) {
            term = &term * &gens[rng.gen_range(0..gens.len())];
        }
        acc = &acc + &term;
    }
    acc
}

pub fn config(src: &str) -> GaloisConfig {
    GaloisConfig::from_json(&serde_json::from_str(src).unwrap()).unwrap()
}

pub const TOY: &str = include_str!("../../configs/toy_mu2.json");
pub const GL12: &str = include_str!("../../configs/gl_mu12.json");
pub const GL123: &str = include_str!("../../configs/gl_mu123.json");
pub const BLOCKING: &str = include_str!("../../configs/blocking_mu1.json");
