//! Divided differences, normalized Schubert polynomials, structure constants,
//! the harmonic dual basis and the evaluated operators 𝔇_σ^v, 𝔇_{τ,σ}^v.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::coxeter::{CoxeterGroup, Elem, Root};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::polyring::{elementary_symmetric, LinearForm, Monomial, Perm, Point, Polynomial, StructuredFraction};
use crate::rational::{self, Rational};

/// Values on which reflections and divided differences act.
pub trait Operand: Clone {
    fn act(&self, p: &Perm) -> Self;
    /// (f − s·f)/α where `s` is the reflection of the root α.
    fn difference_quotient(&self, root: Root, s: &Perm) -> Result<Self>;
}

impl Operand for Polynomial {
    fn act(&self, p: &Perm) -> Self {
        self.permute(p)
    }

    fn difference_quotient(&self, root: Root, s: &Perm) -> Result<Self> {
        let diff = self - &self.permute(s);
        let form = root.linear_form(self.nvars());
        diff.exact_divide(&form)
            .ok_or_else(|| Error::InternalNonDivisible(format!("{diff} by {}", root.display(self.shape()))))
    }
}

impl Operand for StructuredFraction {
    fn act(&self, p: &Perm) -> Self {
        self.permute(p)
    }

    fn difference_quotient(&self, root: Root, s: &Perm) -> Result<Self> {
        let diff = self - &self.permute(s);
        diff.divide_by(&root.linear_form(self.shape().nvars()))
    }
}

/// ∇_s f = (f − s·f)/α_s for the simple reflection with index `s`.
pub fn nabla<T: Operand>(group: &CoxeterGroup, s: usize, f: &T) -> Result<T> {
    f.difference_quotient(group.root_system().simple()[s], group.simple_perm(s))
}

/// ∂ along the word s_1 ⋯ s_ℓ, i.e. ∇_{s_1} ∘ ⋯ ∘ ∇_{s_ℓ}.
pub fn divided_difference_word<T: Operand>(group: &CoxeterGroup, word: &[usize], f: &T) -> Result<T> {
    let mut g = f.clone();
    for &s in word.iter().rev() {
        g = nabla(group, s, &g)?;
    }
    Ok(g)
}

/// ∂_σ along the canonical reduced word of σ.
pub fn divided_difference<T: Operand>(group: &CoxeterGroup, w: Elem, f: &T) -> Result<T> {
    divided_difference_word(group, group.word(w), f)
}

/// ∂_σ f for every σ, indexed by element, sharing work along words.
pub fn all_divided_differences<T: Operand>(group: &CoxeterGroup, f: &T) -> Result<Vec<T>> {
    let mut out: Vec<Option<T>> = vec![None; group.order()];
    out[0] = Some(f.clone());
    // Elements are enumerated in non-decreasing length.
    for w in group.elements().skip(1) {
        let s = group.word(w)[0];
        let shorter = group.left_mul(s, w);
        let prev = out[shorter.index()].as_ref().expect("shorter element computed first");
        out[w.index()] = Some(nabla(group, s, prev)?);
    }
    Ok(out.into_iter().map(|x| x.expect("every element computed")).collect())
}

/// Rewrites f as N / D where D is the product of the group orbits of the
/// denominator forms, each raised to the largest multiplicity it needs.
fn invariant_denominator(group: &CoxeterGroup, f: &StructuredFraction) -> (Polynomial, Polynomial) {
    let shape = f.shape();
    let mut orbits: Vec<(Vec<LinearForm>, usize)> = Vec::new();
    let mut counts: BTreeMap<&LinearForm, usize> = BTreeMap::new();
    for l in f.denominator() {
        *counts.entry(l).or_default() += 1;
    }
    for (l, m) in counts {
        if let Some(entry) =
            orbits.iter_mut().find(|(o, _)| o.iter().any(|x| x.normalized().map(|(_, n)| &n == l).unwrap_or(false)))
        {
            entry.1 = entry.1.max(m);
            continue;
        }
        let mut orbit: Vec<LinearForm> = group.elements().map(|w| l.permute(group.perm(w))).collect();
        orbit.sort();
        orbit.dedup();
        orbits.push((orbit, m));
    }
    let mut num = f.numerator().clone();
    let mut den = Polynomial::one(shape);
    for (orbit, m) in &orbits {
        for x in orbit {
            let p = x.to_polynomial(shape);
            for _ in 0..*m {
                num = &num * &p;
                den = &den * &p;
            }
        }
    }
    for l in f.denominator() {
        num = num.exact_divide(l).expect("denominator form lies in its own orbit");
    }
    (num, den)
}

/// True when σ·f = f for every simple reflection of the group.
pub fn is_invariant(group: &CoxeterGroup, f: &Polynomial) -> bool {
    (0..group.num_simple()).all(|s| &f.permute(group.simple_perm(s)) == f)
}

/// Elementary symmetric polynomials of each orbit of the group on the
/// variables; together they generate the invariant ring.
pub fn invariant_generators(group: &CoxeterGroup) -> Vec<Polynomial> {
    let shape = group.shape();
    let mut out = Vec::new();
    for orbit in group.root_system().orbits() {
        for d in 1..=orbit.len() {
            out.push(elementary_symmetric(shape, &orbit, d));
        }
    }
    out
}

type LrTable = HashMap<(Elem, Elem), Vec<(Elem, Rational)>>;

/// Schubert data of a finite reflection group: 𝔖_σ, the dual harmonic basis
/// P_σ and the structure constants c^ρ_{σ,τ}.
#[derive(Debug)]
pub struct SchubertCalculus {
    group: Arc<CoxeterGroup>,
    delta: Polynomial,
    schubert: Vec<Polynomial>,
    dual: Vec<Polynomial>,
    by_length: Vec<Vec<Elem>>,
    lr: OnceLock<LrTable>,
}

impl SchubertCalculus {
    pub fn new(group: Arc<CoxeterGroup>) -> Result<Self> {
        let shape = group.shape().clone();
        let n = shape.nvars();
        let delta = group
            .root_system()
            .positive()
            .iter()
            .fold(Polynomial::one(&shape), |acc, r| &acc * &r.linear_form(n).to_polynomial(&shape));
        let diffs = all_divided_differences(group.as_ref(), &delta)?;
        let inv_order = Rational::new(BigInt::one(), BigInt::from(group.order()));
        let w0 = group.longest();
        let schubert: Vec<Polynomial> =
            group.elements().map(|w| diffs[group.mul(group.inverse(w), w0).index()].scale(&inv_order)).collect();
        let top = group.length(w0);
        let mut by_length = vec![Vec::new(); top + 1];
        for w in group.elements() {
            by_length[group.length(w)].push(w);
        }
        let dual = dual_basis(&group, &schubert, &by_length)?;
        Ok(SchubertCalculus { group, delta, schubert, dual, by_length, lr: OnceLock::new() })
    }

    pub fn group(&self) -> &Arc<CoxeterGroup> {
        &self.group
    }

    /// Δ(Φ) = ∏_{α∈Φ⁺} α.
    pub fn delta(&self) -> &Polynomial {
        &self.delta
    }

    /// 𝔖_σ = (1/|W|) ∂_{σ⁻¹ω₀} Δ(Φ).
    pub fn schubert_poly(&self, w: Elem) -> &Polynomial {
        &self.schubert[w.index()]
    }

    /// P_σ, the harmonic polynomial with (P_σ, 𝔖_τ) = δ_{σ,τ}.
    pub fn ps_poly(&self, w: Elem) -> &Polynomial {
        &self.dual[w.index()]
    }

    pub fn elements_of_length(&self, l: usize) -> &[Elem] {
        self.by_length.get(l).map_or(&[], Vec::as_slice)
    }

    fn lr_table(&self) -> &HashMap<(Elem, Elem), Vec<(Elem, Rational)>> {
        self.lr.get_or_init(|| {
            let g = &self.group;
            let top = g.length(g.longest());
            let mut table = HashMap::new();
            let elems: Vec<Elem> = g.elements().collect();
            for (i, &a) in elems.iter().enumerate() {
                for &b in &elems[i..] {
                    let l = g.length(a) + g.length(b);
                    if l > top {
                        continue;
                    }
                    let prod = self.schubert_poly(a) * self.schubert_poly(b);
                    let coeffs: Vec<(Elem, Rational)> = self
                        .elements_of_length(l)
                        .iter()
                        .map(|&r| (r, self.ps_poly(r).theta_pair(&prod)))
                        .filter(|(_, c)| !c.is_zero())
                        .collect();
                    table.insert((b, a), coeffs.clone());
                    table.insert((a, b), coeffs);
                }
            }
            table
        })
    }

    /// c^ρ_{σ,τ}: coefficient of 𝔖_ρ in 𝔖_σ𝔖_τ modulo I_W.
    pub fn lr_coeff(&self, sigma: Elem, tau: Elem, rho: Elem) -> Rational {
        let g = &self.group;
        if g.length(sigma) + g.length(tau) != g.length(rho) {
            return Rational::zero();
        }
        self.lr_table()
            .get(&(sigma, tau))
            .and_then(|v| v.iter().find(|(r, _)| *r == rho))
            .map_or_else(Rational::zero, |(_, c)| c.clone())
    }

    /// Nonzero c^ρ_{σ,τ} over ρ.
    pub fn lr_expansion(&self, sigma: Elem, tau: Elem) -> &[(Elem, Rational)] {
        self.lr_table().get(&(sigma, tau)).map_or(&[], Vec::as_slice)
    }

    /// Nonzero c^σ_{τ,ρ} over ρ, the coefficients of 𝔇_{τ,σ} in the 𝔇_ρ.
    pub fn pair_coefficients(&self, tau: Elem, sigma: Elem) -> Vec<(Elem, Rational)> {
        let g = &self.group;
        let (lt, ls) = (g.length(tau), g.length(sigma));
        if lt > ls {
            return Vec::new();
        }
        self.elements_of_length(ls - lt)
            .iter()
            .map(|&r| (r, self.lr_coeff(tau, r, sigma)))
            .filter(|(_, c)| !c.is_zero())
            .collect()
    }

    /// P_{σ,τ} = (1/(ℓ(τ)−ℓ(σ))!) Σ over saturated chains of the product of
    /// cover weights.
    pub fn ps_chain_poly(&self, sigma: Elem, tau: Elem) -> Result<Polynomial> {
        let g = &self.group;
        if !g.bruhat_leq(sigma, tau) {
            return Err(Error::NotComparable(format!("{} is not below {}", g.word_string(sigma), g.word_string(tau))));
        }
        let shape = g.shape();
        let n = shape.nvars();
        let mut total = Polynomial::zero(shape);
        for chain in g.saturated_chains(sigma, tau)? {
            let m = chain
                .weights
                .iter()
                .fold(Polynomial::one(shape), |acc, r| &acc * &r.linear_form(n).to_polynomial(shape));
            total = &total + &m;
        }
        let steps = (g.length(tau) - g.length(sigma)) as u32;
        Ok(total.scale(&Rational::new(BigInt::one(), rational::factorial(steps))))
    }

    /// 𝔇_σ^v(f) = Θ(P_σ)(t_v f)(0) for a polynomial f.
    pub fn d_at(&self, w: Elem, v: &Point, f: &Polynomial) -> Rational {
        let d = self.group.length(w) as u32;
        let shifted = f.translate(v).homogeneous_part(d);
        self.ps_poly(w).theta_pair(&shifted)
    }

    /// 𝔇_σ^v(f) for every σ, for a polynomial f.
    pub fn d_at_all(&self, v: &Point, f: &Polynomial) -> Vec<Rational> {
        let shifted = f.translate(v);
        self.group.elements().map(|w| self.ps_poly(w).theta_pair(&shifted)).collect()
    }

    /// 𝔇_σ^v(f) = (∂_σ t_v f)(0) for a fraction regular at v.
    pub fn d_at_fraction(&self, w: Elem, v: &Point, f: &StructuredFraction) -> Result<Rational> {
        let zero = Point::zero(v.shape());
        divided_difference(&self.group, w, &f.translate(v))?.eval(&zero)
    }

    /// 𝔇_σ^v(f) for every σ, for a fraction regular at v.
    pub fn d_at_all_fraction(&self, v: &Point, f: &StructuredFraction) -> Result<Vec<Rational>> {
        let zero = Point::zero(v.shape());
        let g = f.translate(v);
        if let Some(p) = g.as_polynomial() {
            return Ok(self.d_at_all(&zero, p));
        }
        // Write g = N / D with D invariant. The divided differences are linear
        // over invariants, so ∂_σ g = (∂_σ N) / D and only polynomials remain.
        let (num, den) = invariant_denominator(&self.group, &g);
        let d0 = den.eval(&zero)?;
        if d0.is_zero() {
            return Err(Error::PoleAt(format!("{} at {}", f, v)));
        }
        Ok(self.d_at_all(&zero, &num).into_iter().map(|x| x / &d0).collect())
    }

    /// 𝔇_{τ,σ} = Σ_ρ c^σ_{τ,ρ} 𝔇_ρ applied to precomputed values 𝔇_ρ(f).
    pub fn d_pair_from_values(&self, tau: Elem, sigma: Elem, values: &[Rational]) -> Rational {
        self.pair_coefficients(tau, sigma).iter().map(|(r, c)| c * &values[r.index()]).sum()
    }

    /// 𝔇_{τ,σ}^v(f) for a polynomial f.
    pub fn d_pair_at(&self, tau: Elem, sigma: Elem, v: &Point, f: &Polynomial) -> Rational {
        self.d_pair_from_values(tau, sigma, &self.d_at_all(v, f))
    }

    /// 𝔇_{τ,σ}^v(f) for a fraction regular at v.
    pub fn d_pair_at_fraction(&self, tau: Elem, sigma: Elem, v: &Point, f: &StructuredFraction) -> Result<Rational> {
        Ok(self.d_pair_from_values(tau, sigma, &self.d_at_all_fraction(v, f)?))
    }

    /// Coefficients f_(σ) evaluated at `at`, computed as (∂_σ t_at f)(0).
    pub fn schubert_expand(&self, f: &StructuredFraction, at: &Point) -> Result<BTreeMap<Elem, Rational>> {
        let vals = self.d_at_all_fraction(at, f)?;
        Ok(self.group.elements().zip(vals).collect())
    }

    /// Invariant coefficients f_(σ) with f = Σ_σ f_(σ) 𝔖_σ exactly.
    pub fn schubert_expand_symbolic(&self, f: &Polynomial) -> Result<Vec<Polynomial>> {
        let g = &self.group;
        let diffs = all_divided_differences(g.as_ref(), f)?;
        let mut coeffs: Vec<Option<Polynomial>> = vec![None; g.order()];
        for l in (0..self.by_length.len()).rev() {
            for &w in self.elements_of_length(l) {
                // ∂_σ f = Σ_τ f_(τ) 𝔖_{τσ⁻¹} over τ with ℓ(τσ⁻¹) = ℓ(τ) − ℓ(σ).
                let mut c = diffs[w.index()].clone();
                let winv = g.inverse(w);
                for longer in (l + 1)..self.by_length.len() {
                    for &t in self.elements_of_length(longer) {
                        let q = g.mul(t, winv);
                        if g.length(q) == longer - l {
                            let ft = coeffs[t.index()].as_ref().expect("longer coefficients computed first");
                            c = &c - &(ft * self.schubert_poly(q));
                        }
                    }
                }
                coeffs[w.index()] = Some(c);
            }
        }
        Ok(coeffs.into_iter().map(|c| c.expect("every coefficient computed")).collect())
    }

    /// Class of f modulo I_W in the Schubert basis: the values 𝔇_σ^0(f).
    pub fn class_coordinates(&self, f: &Polynomial) -> Vec<Rational> {
        self.group.elements().map(|w| self.ps_poly(w).theta_pair(f)).collect()
    }
}

/// Solves (P_σ, 𝔖_τ) = δ inside the harmonic subspace of each degree.
fn dual_basis(group: &CoxeterGroup, schubert: &[Polynomial], by_length: &[Vec<Elem>]) -> Result<Vec<Polynomial>> {
    let shape = group.shape();
    let n = shape.nvars();
    let moved = group.root_system().moved_vars();
    let gens: Vec<Polynomial> = group
        .root_system()
        .orbits()
        .into_iter()
        .filter(|o| o.len() > 1)
        .flat_map(|o| (1..=o.len()).map(move |d| (o.clone(), d)))
        .map(|(o, d)| elementary_symmetric(shape, &o, d))
        .collect();
    let mut dual = vec![Polynomial::zero(shape); group.order()];
    for (d, elems) in by_length.iter().enumerate() {
        let monos = Monomial::of_degree(n, &moved, d as u32);
        // Rows: coefficients of Θ(γ_j)(x^m) for every generator γ_j.
        let mut row_index: HashMap<(usize, Monomial), usize> = HashMap::new();
        let mut entries: Vec<(usize, usize, Rational)> = Vec::new();
        for (col, m) in monos.iter().enumerate() {
            let xm = Polynomial::monomial(shape, m.clone(), Rational::one());
            for (j, gamma) in gens.iter().enumerate() {
                for (rm, c) in gamma.theta_apply(&xm).terms() {
                    let next = row_index.len();
                    let row = *row_index.entry((j, rm.clone())).or_insert(next);
                    entries.push((row, col, c.clone()));
                }
            }
        }
        let mut constraints = Matrix::zeros(row_index.len(), monos.len());
        for (r, c, v) in entries {
            let cur = constraints.get(r, c) + v;
            constraints.set(r, c, cur);
        }
        let harmonic: Vec<Polynomial> = constraints
            .nullspace()
            .into_iter()
            .map(|vec| Polynomial::from_terms(shape, monos.iter().cloned().zip(vec)))
            .collect();
        if harmonic.len() != elems.len() {
            return Err(Error::SingularGram(format!(
                "harmonic space of degree {d} has dimension {}, expected {}",
                harmonic.len(),
                elems.len()
            )));
        }
        let gram = Matrix::from_rows(
            elems.iter().map(|&t| harmonic.iter().map(|h| h.theta_pair(&schubert[t.index()])).collect()).collect(),
        );
        let inv = gram.inverse().ok_or_else(|| Error::SingularGram(format!("pairing singular in degree {d}")))?;
        for (k, &w) in elems.iter().enumerate() {
            let mut p = Polynomial::zero(shape);
            for (j, h) in harmonic.iter().enumerate() {
                let c = inv.get(j, k);
                if !c.is_zero() {
                    p = &p + &h.scale(c);
                }
            }
            dual[w.index()] = p;
        }
    }
    Ok(dual)
}
