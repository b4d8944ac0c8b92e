//! The Γ-module spanned by the evaluated operators 𝔇_σ^v: action matrices,
//! invariant preimages, Jordan profiles, and cyclicity and kernel tests.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::coxeter::{CoxeterGroup, Elem, ParabolicSet};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, SpanBasis};
use crate::polyring::{elementary_symmetric, Point, Polynomial};
use crate::rational::{self, Rational};
use crate::schubert::SchubertCalculus;

/// An ambient group G with a standard parabolic subgroup W and the invariant
/// ring Γ of G.
#[derive(Debug)]
pub struct SubsystemFrame {
    ambient: Arc<CoxeterGroup>,
    calc: Arc<SchubertCalculus>,
    omega: Vec<usize>,
    generators: Vec<Polynomial>,
}

impl SubsystemFrame {
    /// W is generated by the ambient simple reflections with indices `omega`.
    pub fn new(ambient: Arc<CoxeterGroup>, omega: &[usize]) -> Result<Self> {
        let rs = ambient.root_system().subsystem(omega)?;
        let w = CoxeterGroup::new(rs)?;
        let calc = Arc::new(SchubertCalculus::new(Arc::new(w))?);
        let shape = ambient.shape().clone();
        let generators = ambient
            .root_system()
            .orbits()
            .into_iter()
            .flat_map(|o| (1..=o.len()).map(move |d| (o.clone(), d)))
            .map(|(o, d)| elementary_symmetric(&shape, &o, d))
            .collect();
        let mut omega = omega.to_vec();
        omega.sort_unstable();
        omega.dedup();
        Ok(SubsystemFrame { ambient, calc, omega, generators })
    }

    /// The frame with W = G.
    pub fn full(ambient: Arc<CoxeterGroup>) -> Result<Self> {
        let all: Vec<usize> = (0..ambient.num_simple()).collect();
        Self::new(ambient, &all)
    }

    pub fn ambient(&self) -> &Arc<CoxeterGroup> {
        &self.ambient
    }

    /// The subgroup W.
    pub fn group(&self) -> &Arc<CoxeterGroup> {
        self.calc.group()
    }

    pub fn calculus(&self) -> &Arc<SchubertCalculus> {
        &self.calc
    }

    /// Ambient indices of the simple roots of W.
    pub fn omega(&self) -> &[usize] {
        &self.omega
    }

    /// Elementary symmetric polynomials of every G-orbit; they generate Γ.
    pub fn invariant_generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn check_invariant(&self, gamma: &Polynomial) -> Result<()> {
        for s in 0..self.ambient.num_simple() {
            if &gamma.permute(self.ambient.simple_perm(s)) != gamma {
                let label = self.ambient.root_system().labels()[s];
                return Err(Error::NotInvariant(format!("{gamma} is moved by s{label}")));
            }
        }
        Ok(())
    }

    /// The simple reflections of W fixing v; fails unless v is standard for W.
    pub fn stabilizer(&self, v: &Point) -> Result<ParabolicSet> {
        let w = self.group();
        let data = w.stabilizer_data(v);
        if data.is_standard {
            return Ok(data.theta);
        }
        let suggestion = data.conjugator.map(|c| {
            let u = v.permuted(w.perm(c));
            format!("conjugate by {} to reach {u}", w.word_string(c))
        });
        Err(Error::NotStandard { detail: format!("{v}"), suggestion })
    }

    /// W^v ordered by decreasing length, ties broken by canonical word.
    pub fn basis(&self, v: &Point) -> Result<Vec<Elem>> {
        let theta = self.stabilizer(v)?;
        let w = self.group();
        let mut reps = w.min_coset_reps(&theta);
        reps.sort_by(|&a, &b| w.length(b).cmp(&w.length(a)).then_with(|| w.word(a).cmp(w.word(b))));
        Ok(reps)
    }

    /// ω₀^v, the longest element of W^v.
    pub fn longest_rep(&self, v: &Point) -> Result<Elem> {
        Ok(self.basis(v)?[0])
    }

    /// Simple reflections of W outside the stabilizer of v.
    pub fn moving_simples(&self, v: &Point) -> Result<Vec<Elem>> {
        let theta = self.stabilizer(v)?;
        let w = self.group();
        Ok((0..w.num_simple()).filter(|&s| !theta.contains(s)).map(|s| w.simple_reflection(s)).collect())
    }
}

/// An element Σ a_σ 𝔇_σ^v of the module, σ ∈ W^v.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GammaVector {
    v: Point,
    coeffs: BTreeMap<Elem, Rational>,
}

impl GammaVector {
    /// Terms with σ outside W^v are dropped: those operators vanish on Γ.
    pub fn new(frame: &SubsystemFrame, v: &Point, coeffs: impl IntoIterator<Item = (Elem, Rational)>) -> Result<Self> {
        let theta = frame.stabilizer(v)?;
        let w = frame.group();
        let mut map = BTreeMap::new();
        for (s, c) in coeffs {
            if w.is_min_coset_rep(s, &theta) && !c.is_zero() {
                let e: &mut Rational = map.entry(s).or_insert_with(Rational::zero);
                *e += c;
            }
        }
        map.retain(|_, c| !c.is_zero());
        Ok(GammaVector { v: v.clone(), coeffs: map })
    }

    pub fn basis_vector(frame: &SubsystemFrame, v: &Point, sigma: Elem) -> Result<Self> {
        Self::new(frame, v, [(sigma, Rational::one())])
    }

    pub fn point(&self) -> &Point {
        &self.v
    }

    pub fn coeff(&self, sigma: Elem) -> Rational {
        self.coeffs.get(&sigma).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (Elem, &Rational)> {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coordinates in the ordered basis `basis`.
    pub fn to_vec(&self, basis: &[Elem]) -> Vec<Rational> {
        basis.iter().map(|&b| self.coeff(b)).collect()
    }

    pub fn from_vec(frame: &SubsystemFrame, v: &Point, basis: &[Elem], x: &[Rational]) -> Result<Self> {
        Self::new(frame, v, basis.iter().copied().zip(x.iter().cloned()))
    }
}

/// γ·Σ a_σ 𝔇_σ^v = Σ a_σ (γ(v) 𝔇_σ^v + Σ_{τ<σ} 𝔇_{τ,σ}^v(γ) 𝔇_τ^v).
pub fn gamma_action(frame: &SubsystemFrame, gamma: &Polynomial, x: &GammaVector) -> Result<GammaVector> {
    frame.check_invariant(gamma)?;
    let v = &x.v;
    let basis = frame.basis(v)?;
    let values = frame.calc.d_at_all(v, gamma);
    let w = frame.group();
    let mut out: Vec<(Elem, Rational)> = Vec::new();
    for (sigma, a) in x.terms() {
        for &tau in &basis {
            if w.length(tau) > w.length(sigma) {
                continue;
            }
            let c = frame.calc.d_pair_from_values(tau, sigma, &values);
            if !c.is_zero() {
                out.push((tau, a * c));
            }
        }
    }
    GammaVector::new(frame, v, out)
}

/// The matrix [γ] of the action on 𝒟(Ω, v) in the basis ordered by
/// decreasing length; entry (τ, σ) is the coefficient of 𝔇_τ^v in γ·𝔇_σ^v.
#[derive(Clone, Debug)]
pub struct ActionMatrix {
    pub basis: Vec<Elem>,
    pub matrix: Matrix,
    pub eigenvalue: Rational,
}

pub fn action_matrix(frame: &SubsystemFrame, gamma: &Polynomial, v: &Point) -> Result<ActionMatrix> {
    frame.check_invariant(gamma)?;
    let basis = frame.basis(v)?;
    let values = frame.calc.d_at_all(v, gamma);
    let w = frame.group();
    let n = basis.len();
    let mut m = Matrix::zeros(n, n);
    for (j, &sigma) in basis.iter().enumerate() {
        for (i, &tau) in basis.iter().enumerate() {
            if w.length(tau) <= w.length(sigma) {
                m.set(i, j, frame.calc.d_pair_from_values(tau, sigma, &values));
            }
        }
    }
    Ok(ActionMatrix { basis, matrix: m, eigenvalue: gamma.eval(v)? })
}

/// Products of the invariant generators, grouped by weighted degree.
struct InvariantMonomials<'a> {
    gens: Vec<&'a Polynomial>,
    degrees: Vec<usize>,
    /// (product, index of its largest generator) per degree.
    by_degree: Vec<Vec<(Polynomial, usize)>>,
}

impl<'a> InvariantMonomials<'a> {
    fn new(frame: &'a SubsystemFrame) -> Self {
        let moved = frame.group().root_system().moved_vars();
        // Invariants of orbits that W does not move are constant modulo I_W
        // after translation, so only orbits meeting moved variables matter.
        let gens: Vec<&Polynomial> =
            frame.generators.iter().filter(|g| g.support_vars().iter().any(|a| moved.contains(a))).collect();
        let degrees = gens.iter().map(|g| g.degree().unwrap_or(0) as usize).collect();
        let one = Polynomial::one(frame.ambient.shape());
        InvariantMonomials { gens, degrees, by_degree: vec![vec![(one, 0)]] }
    }

    /// Products of weighted degree exactly d.
    fn degree(&mut self, d: usize) -> &[(Polynomial, usize)] {
        while self.by_degree.len() <= d {
            let e = self.by_degree.len();
            let mut layer = Vec::new();
            for (i, (g, &dg)) in self.gens.iter().zip(&self.degrees).enumerate() {
                if dg == 0 || dg > e {
                    continue;
                }
                for (p, last) in &self.by_degree[e - dg] {
                    if *last <= i {
                        layer.push((p * *g, i));
                    }
                }
            }
            self.by_degree.push(layer);
        }
        &self.by_degree[d]
    }
}

/// A G-invariant γ with 𝔇_τ^v(γ) equal to `target` (zero where absent) for
/// every τ ∈ W^v, i.e. t_v(γ) ≡ Σ target_τ 𝔖_τ modulo I_W.
pub fn invariant_preimage_class(
    frame: &SubsystemFrame,
    v: &Point,
    target: &BTreeMap<Elem, Rational>,
) -> Result<Polynomial> {
    let basis = frame.basis(v)?;
    if let Some(bad) = target.keys().find(|t| !basis.contains(t)) {
        return Err(Error::NoSolution(format!(
            "{} is not a minimal coset representative",
            frame.group().word_string(*bad)
        )));
    }
    let w = frame.group();
    let top = target.keys().map(|&t| w.length(t)).max().unwrap_or(0);
    let cap = top + frame.ambient.length(frame.ambient.longest()) + 1;
    let rhs: Vec<Rational> = basis.iter().map(|b| target.get(b).cloned().unwrap_or_else(Rational::zero)).collect();
    let mut mons = InvariantMonomials::new(frame);
    let mut cols: Vec<Polynomial> = Vec::new();
    let mut col_values: Vec<Vec<Rational>> = Vec::new();
    for d in 0..=cap {
        let layer: Vec<Polynomial> = mons.degree(d).iter().map(|(p, _)| p.clone()).collect();
        if layer.is_empty() {
            continue;
        }
        for p in layer {
            let vals = frame.calc.d_at_all(v, &p);
            col_values.push(basis.iter().map(|b| vals[b.index()].clone()).collect());
            cols.push(p);
        }
        if d < top {
            continue;
        }
        let a =
            Matrix::from_rows((0..basis.len()).map(|i| col_values.iter().map(|c| c[i].clone()).collect()).collect());
        if let Some(x) = a.solve(&rhs) {
            let mut gamma = Polynomial::zero(frame.ambient.shape());
            for (c, p) in x.iter().zip(&cols) {
                if !c.is_zero() {
                    gamma = &gamma + &p.scale(c);
                }
            }
            let check = frame.calc.d_at_all(v, &gamma);
            if basis.iter().zip(&rhs).any(|(b, r)| &check[b.index()] != r) {
                return Err(Error::NoSolution("duality check failed after solve".into()));
            }
            return Ok(gamma);
        }
    }
    Err(Error::NoSolution(format!("no invariant preimage up to degree {cap}")))
}

/// γ_σ with 𝔇_τ^v(γ_σ) = δ_{τ,σ} for all τ ∈ W^v.
pub fn invariant_preimage(frame: &SubsystemFrame, sigma: Elem, v: &Point) -> Result<Polynomial> {
    invariant_preimage_class(frame, v, &BTreeMap::from([(sigma, Rational::one())]))
}

/// Block sizes of the single-eigenvalue Jordan form of [γ].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct JordanProfile {
    /// Block sizes in decreasing order.
    pub blocks: Vec<usize>,
    /// ℓ(ω₀^v) + 1, the largest size allowed.
    pub bound: usize,
    pub eigenvalue: Rational,
}

impl JordanProfile {
    pub fn max_block(&self) -> usize {
        self.blocks.first().copied().unwrap_or(0)
    }

    pub fn has_max_block(&self) -> bool {
        self.max_block() == self.bound
    }
}

/// Jordan blocks from the rank sequence of powers of N = [γ] − γ(v).
pub fn jordan_blocks(m: &Matrix, eigenvalue: &Rational) -> Vec<usize> {
    let n = m.rows();
    let nil = m - &Matrix::identity(n).scale(eigenvalue);
    let mut ranks = vec![n];
    let mut power = Matrix::identity(n);
    while *ranks.last().expect("nonempty") > 0 {
        power = &power * &nil;
        let r = power.rank();
        if r == *ranks.last().expect("nonempty") {
            break;
        }
        ranks.push(r);
    }
    ranks.push(0);
    // Blocks of size ≥ k number ranks[k−1] − ranks[k].
    let at_least: Vec<usize> = ranks.windows(2).map(|w| w[0] - w[1]).collect();
    let mut blocks = Vec::new();
    for k in (1..=at_least.len()).rev() {
        let exact = at_least[k - 1] - at_least.get(k).copied().unwrap_or(0);
        blocks.extend(std::iter::repeat_n(k, exact));
    }
    blocks
}

pub fn jordan_profile(frame: &SubsystemFrame, gamma: &Polynomial, v: &Point) -> Result<JordanProfile> {
    let am = action_matrix(frame, gamma, v)?;
    let w = frame.group();
    let bound = w.length(am.basis[0]) + 1;
    let blocks = jordan_blocks(&am.matrix, &am.eigenvalue);
    let max = blocks.first().copied().unwrap_or(0);
    if max > bound {
        return Err(Error::JordanBound(format!("block of size {max} exceeds {bound}")));
    }
    if max == bound && blocks.iter().filter(|&&b| b == max).count() > 1 {
        return Err(Error::JordanBound(format!("more than one block of maximal size {bound}")));
    }
    Ok(JordanProfile { blocks, bound, eigenvalue: am.eigenvalue })
}

/// An invariant γ with t_v(γ) ≡ Σ_{s∈S_v} 𝔖_s modulo I_W, where S_v are the
/// simple reflections outside the stabilizer of v; its matrix has a Jordan
/// block of the maximal size.
pub fn max_block_witness(frame: &SubsystemFrame, v: &Point) -> Result<Polynomial> {
    let target = frame.moving_simples(v)?.into_iter().map(|s| (s, Rational::one())).collect();
    invariant_preimage_class(frame, v, &target)
}

/// 𝔇_{ω₀^v}^0(f^r) for f = t_v(γ) − γ(v) and r = ℓ(ω₀^v).
pub fn top_power_value(frame: &SubsystemFrame, gamma: &Polynomial, v: &Point) -> Result<Rational> {
    let top = frame.longest_rep(v)?;
    let r = frame.group().length(top) as u32;
    let shifted = gamma.translate(v);
    let f = &shifted - &Polynomial::constant(gamma.shape(), shifted.constant_term());
    Ok(frame.calc.d_at(top, &Point::zero(v.shape()), &f.pow(r)))
}

/// Γ·x = 𝒟(Ω, v) exactly when the coefficient of 𝔇_{ω₀^v}^v is nonzero.
pub fn cyclicity_check(frame: &SubsystemFrame, x: &GammaVector) -> Result<bool> {
    Ok(!x.coeff(frame.longest_rep(&x.v)?).is_zero())
}

/// (γ − γ(v))x = 0 for all γ exactly when x is a multiple of 𝔇_e^v.
pub fn kernel_check(frame: &SubsystemFrame, x: &GammaVector) -> bool {
    let e = frame.group().identity();
    x.terms().all(|(s, _)| s == e)
}

/// Dimension of Γ·x, computed as the closure of x under the matrices of the
/// invariant generators.
pub fn span_dimension(frame: &SubsystemFrame, x: &GammaVector) -> Result<usize> {
    let v = &x.v;
    let mats: Vec<ActionMatrix> = frame.generators.iter().map(|g| action_matrix(frame, g, v)).collect::<Result<_>>()?;
    let basis = frame.basis(v)?;
    let mut span = SpanBasis::new();
    let start = x.to_vec(&basis);
    let mut queue = vec![start.clone()];
    span.insert(&start);
    while let Some(y) = queue.pop() {
        for m in &mats {
            let z = m.matrix.apply(&y);
            if span.insert(&z) {
                queue.push(z);
            }
        }
    }
    Ok(span.dim())
}

/// True when every invariant generator acts on x by its value at v.
pub fn is_common_eigenvector(frame: &SubsystemFrame, x: &GammaVector) -> Result<bool> {
    for g in &frame.generators {
        let gx = gamma_action(frame, g, x)?;
        let c = g.eval(&x.v)?;
        let expect = GammaVector::new(frame, &x.v, x.terms().map(|(s, a)| (s, a * &c)))?;
        if gx != expect {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Text form of a matrix with exact entries.
pub fn matrix_strings(m: &Matrix) -> Vec<Vec<String>> {
    m.to_rows().iter().map(|r| r.iter().map(rational::to_string).collect()).collect()
}
