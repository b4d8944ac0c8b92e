//! Standard Galois orders of type A and the Gelfand-Tsetlin modules
//! V(Ω, T(v̂)): configurations, seeds, the shift cone Z(v̂), generator
//! actions in the basis 𝔇_σ^{v̂+z}, and the simplicity criterion.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::bggmod::{action_matrix, gamma_action, GammaVector, SubsystemFrame};
use crate::coxeter::{CoxeterGroup, Elem, ParabolicSet, RootSystem, DEFAULT_GROUP_BOUND};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, SpanBasis};
use crate::polyring::{parse_poly, LinearForm, Perm, Point, Polynomial, Shape, StructuredFraction, VarIndex};
use crate::rational::{self, Rational};
use crate::schubert::{all_divided_differences, divided_difference};

/// Which generator of a pair: X_k^+ shifts by +e_{k,1}, X_k^- by −e_{k,1}.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl Sign {
    pub const BOTH: [Sign; 2] = [Sign::Plus, Sign::Minus];

    /// +1 or −1, the direction of the generator's own shift.
    pub fn unit(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s.trim() {
            "+" | "plus" => Ok(Sign::Plus),
            "-" | "minus" => Ok(Sign::Minus),
            other => Err(Error::InvalidConfig(format!("sign must be \"+\" or \"-\", got {other:?}"))),
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

/// The term c·t_y of an element of the skew ring, y an integer shift.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ShiftTerm {
    pub coef: StructuredFraction,
    pub shift: Vec<i64>,
}

fn shift_point(shape: &Shape, y: &[i64]) -> Point {
    Point::zero(shape).add_ints(y)
}

fn unit_shift(n: usize, a: usize, c: i64) -> Vec<i64> {
    let mut y = vec![0; n];
    y[a] = c;
    y
}

/// (Σ c t_y)† = Σ t_{−y}(c) t_{−y}.
pub fn dagger_of(terms: &[ShiftTerm]) -> Vec<ShiftTerm> {
    let mut out: Vec<ShiftTerm> = terms
        .iter()
        .map(|t| {
            let neg: Vec<i64> = t.shift.iter().map(|x| -x).collect();
            ShiftTerm { coef: t.coef.translate(&shift_point(t.coef.shape(), &neg)), shift: neg }
        })
        .collect();
    out.sort_by(|a, b| a.shift.cmp(&b.shift));
    out
}

/// Σ c·t_y(f) for f a fraction.
pub fn apply_terms(terms: &[ShiftTerm], f: &StructuredFraction) -> StructuredFraction {
    let mut acc = StructuredFraction::zero(f.shape());
    for t in terms {
        acc = &acc + &(&t.coef * &f.translate(&shift_point(f.shape(), &t.shift)));
    }
    acc
}

/// Generator data: the shape μ, the number r′ of generator pairs and the
/// numerators f_k^±.
#[derive(Clone, Debug)]
pub struct GaloisConfig {
    shape: Shape,
    rprime: usize,
    numerators: BTreeMap<(usize, Sign), Polynomial>,
}

impl GaloisConfig {
    pub fn new(mu: &[usize], rprime: usize, generators: Vec<(usize, Sign, Polynomial)>) -> Result<Self> {
        let shape = Shape::new(mu);
        if rprime > shape.blocks() {
            return Err(Error::InvalidConfig(format!(
                "rprime {rprime} exceeds the number of blocks {}",
                shape.blocks()
            )));
        }
        if let Some(k) = (1..=rprime).find(|&k| mu[k - 1] == 0) {
            return Err(Error::InvalidConfig(format!("block {k} is empty")));
        }
        let mut numerators = BTreeMap::new();
        for (k, sign, f) in generators {
            if k == 0 || k > rprime {
                return Err(Error::InvalidConfig(format!("generator block {k} outside 1..={rprime}")));
            }
            if f.shape() != &shape {
                return Err(Error::ShapeMismatch(format!("numerator for block {k} has a different shape")));
            }
            if numerators.insert((k, sign), f).is_some() {
                return Err(Error::InvalidConfig(format!("generator ({k}, {sign}) given twice")));
            }
        }
        for k in 1..=rprime {
            for sign in Sign::BOTH {
                if !numerators.contains_key(&(k, sign)) {
                    return Err(Error::InvalidConfig(format!("missing generator ({k}, {sign})")));
                }
            }
        }
        let cfg = GaloisConfig { shape, rprime, numerators };
        for ((k, sign), f) in &cfg.numerators {
            cfg.check_stabilizer_invariance(*k, f).map_err(|e| match e {
                Error::NotInvariant(d) => Error::NotInvariant(format!("numerator ({k}, {sign}): {d}")),
                other => other,
            })?;
        }
        Ok(cfg)
    }

    /// f must be fixed by the stabilizer of e_{k,1}, which is generated by
    /// every adjacent transposition except the one moving (k,1).
    fn check_stabilizer_invariance(&self, k: usize, f: &Polynomial) -> Result<()> {
        let n = self.shape.nvars();
        let first = self.shape.block_range(k).start;
        for b in 1..=self.shape.blocks() {
            let r = self.shape.block_range(b);
            for a in r.start..r.end.saturating_sub(1) {
                if a == first {
                    continue;
                }
                if &f.permute(&Perm::transposition(n, a, a + 1)) != f {
                    return Err(Error::NotInvariant(format!(
                        "{f} is moved by swapping {} and {}",
                        self.shape.var(a),
                        self.shape.var(a + 1)
                    )));
                }
            }
        }
        Ok(())
    }

    /// Parses {"mu": [..], "rprime": n, "generators": [{"k", "sign", "f"}]}.
    pub fn from_json(v: &Value) -> Result<Self> {
        let bad = |m: &str| Error::InvalidConfig(m.to_string());
        let mu: Vec<usize> = v
            .get("mu")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("missing \"mu\" list"))?
            .iter()
            .map(|x| x.as_u64().map(|x| x as usize).ok_or_else(|| bad("\"mu\" entries must be non-negative integers")))
            .collect::<Result<_>>()?;
        let shape = Shape::new(&mu);
        let rprime = v.get("rprime").and_then(Value::as_u64).ok_or_else(|| bad("missing integer \"rprime\""))? as usize;
        let gens = v.get("generators").and_then(Value::as_array).ok_or_else(|| bad("missing \"generators\" list"))?;
        let mut out = Vec::new();
        for g in gens {
            let k = g.get("k").and_then(Value::as_u64).ok_or_else(|| bad("generator without integer \"k\""))? as usize;
            let sign =
                Sign::parse(g.get("sign").and_then(Value::as_str).ok_or_else(|| bad("generator without \"sign\""))?)?;
            let f = parse_poly(
                g.get("f").and_then(Value::as_str).ok_or_else(|| bad("generator without \"f\" string"))?,
                &shape,
            )?;
            out.push((k, sign, f));
        }
        Self::new(&mu, rprime, out)
    }

    pub fn to_json(&self) -> Value {
        let gens: Vec<Value> = self
            .numerators
            .iter()
            .map(|((k, s), f)| json!({"k": k, "sign": s.to_string(), "f": f.to_string()}))
            .collect();
        json!({"mu": self.shape.parts(), "rprime": self.rprime, "generators": gens})
    }

    pub fn shape(&self) -> &Shape {
        &self.shape
    }

    pub fn rprime(&self) -> usize {
        self.rprime
    }

    pub fn generators(&self) -> impl Iterator<Item = (usize, Sign)> + '_ {
        self.numerators.keys().copied()
    }

    pub fn numerator(&self, k: usize, sign: Sign) -> &Polynomial {
        &self.numerators[&(k, sign)]
    }

    /// Variables of the blocks 1..=r′, the coordinates that shifts may move.
    pub fn shifted_vars(&self) -> Vec<usize> {
        (1..=self.rprime).flat_map(|k| self.shape.block_range(k)).collect()
    }

    /// f_{k,i}^± = (1 i)·f_k^±/μ_k for the variable `a` = (k,i).
    pub fn numerator_at(&self, k: usize, sign: Sign, a: usize) -> Polynomial {
        let r = self.shape.block_range(k);
        assert!(r.contains(&a), "variable outside block {k}");
        let inv = Rational::new(BigInt::one(), BigInt::from(r.len()));
        self.numerator(k, sign).permute(&Perm::transposition(self.shape.nvars(), r.start, a)).scale(&inv)
    }

    /// The generator X_k^± = Σ_i t_{±e_{k,i}}(c_i) t_{±e_{k,i}} where
    /// c_i = f_{k,i}^± / ∏_{j≠i}(x_{k,i} − x_{k,j}).
    pub fn generator_terms(&self, k: usize, sign: Sign) -> Vec<ShiftTerm> {
        dagger_of(&self.dagger(k, sign))
    }

    /// (X_k^±)† = Σ_i c_i t_{∓e_{k,i}}.
    pub fn dagger(&self, k: usize, sign: Sign) -> Vec<ShiftTerm> {
        let n = self.shape.nvars();
        let r = self.shape.block_range(k);
        let mut out: Vec<ShiftTerm> = r
            .clone()
            .map(|a| {
                let den = r.clone().filter(|&j| j != a).map(|j| LinearForm::root(n, a, j)).collect();
                let coef =
                    StructuredFraction::new(self.numerator_at(k, sign, a), den).expect("roots are nonzero forms");
                ShiftTerm { coef, shift: unit_shift(n, a, -sign.unit()) }
            })
            .collect();
        out.sort_by(|a, b| a.shift.cmp(&b.shift));
        out
    }
}

/// A seed v̂ = σ(v) + z reached from an input point v.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Seed {
    pub point: Point,
    pub sigma: Perm,
    pub shift: Vec<i64>,
}

fn integer_difference(a: &Rational, b: &Rational) -> bool {
    rational::is_integer(&(a - b))
}

/// Clusters of a block by integer difference, in order of first appearance.
fn clusters(v: &Point, range: std::ops::Range<usize>) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = Vec::new();
    for a in range {
        match out.iter_mut().find(|c| integer_difference(v.coord(c[0]), v.coord(a))) {
            Some(c) => c.push(a),
            None => out.push(vec![a]),
        }
    }
    out
}

/// Reorders each shifted block so integer-difference clusters are contiguous
/// (in order of first appearance) and moves every cluster member to the
/// cluster minimum.
pub fn seed_normalize(v: &Point, cfg: &GaloisConfig) -> Seed {
    let shape = cfg.shape();
    let n = shape.nvars();
    let mut images: Vec<usize> = (0..n).collect();
    for k in 1..=cfg.rprime() {
        let r = shape.block_range(k);
        let order: Vec<usize> = clusters(v, r.clone()).into_iter().flatten().collect();
        for (slot, &a) in r.clone().zip(&order) {
            images[a] = slot;
        }
    }
    let sigma = Perm::from_images(images);
    let moved = v.permuted(&sigma);
    let mut z = vec![0i64; n];
    for k in 1..=cfg.rprime() {
        for c in clusters(&moved, shape.block_range(k)) {
            let min = c.iter().map(|&a| moved.coord(a)).min().expect("clusters are nonempty").clone();
            for a in c {
                let d = &min - moved.coord(a);
                z[a] = i64::try_from(d.to_integer()).expect("shift fits in i64");
            }
        }
    }
    Seed { point: moved.add_ints(&z), sigma, shift: z }
}

/// Integer differences inside each shifted block are zero and the equal
/// coordinates are contiguous.
pub fn is_seed(v: &Point, cfg: &GaloisConfig) -> bool {
    (1..=cfg.rprime()).all(|k| {
        let r = cfg.shape().block_range(k);
        clusters(v, r.clone())
            .iter()
            .all(|c| c.windows(2).all(|w| w[1] == w[0] + 1) && c.iter().all(|&a| v.coord(a) == v.coord(c[0])))
    })
}

/// A class of ∼_z: the positions start..=end of block k with equal
/// coordinates in v̂ + z.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct EquivClass {
    pub k: usize,
    pub start: usize,
    pub end: usize,
}

impl EquivClass {
    /// a⁺(I), the first position.
    pub fn a_plus(&self) -> usize {
        self.start
    }

    /// a⁻(I), the last position.
    pub fn a_minus(&self) -> usize {
        self.end
    }

    pub fn contains(&self, a: usize) -> bool {
        (self.start..=self.end).contains(&a)
    }

    pub fn len(&self) -> usize {
        self.end - self.start + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

/// One class term of the divided-difference form of (X_k^±)†:
/// ∂_ω(F t_y) with ω = σ^∓(I).
#[derive(Clone, Debug)]
pub struct DdTerm {
    pub class: EquivClass,
    pub omega: Elem,
    pub coef: StructuredFraction,
    pub shift: Vec<i64>,
}

/// Key of a generalized weight space: per-block sorted coordinates of v̂+z.
pub type CharacterKey = Vec<Vec<Rational>>;

/// Outcome of the simplicity criterion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// No f_{k,i}^± vanishes anywhere on v̂ + Z(v̂).
    HoldsEverywhere,
    /// No vanishing with |z|∞ ≤ window; beyond that nothing was decided.
    HoldsOnWindow(u32),
    /// f_{k,i}^± vanishes at v̂ + z, so the criterion does not apply.
    Fails { z: Vec<i64>, k: usize, i: usize, sign: Sign, value: Rational },
}

/// A finitely supported combination of the basis 𝔇_σ^{v̂+z}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OperatorVector {
    terms: BTreeMap<(Vec<i64>, Elem), Rational>,
}

impl Default for OperatorVector {
    fn default() -> Self {
        Self::new()
    }
}

impl OperatorVector {
    pub fn new() -> Self {
        OperatorVector { terms: BTreeMap::new() }
    }

    pub fn basis(z: Vec<i64>, sigma: Elem) -> Self {
        let mut v = Self::new();
        v.add_term(z, sigma, Rational::one());
        v
    }

    pub fn add_term(&mut self, z: Vec<i64>, sigma: Elem, c: Rational) {
        if c.is_zero() {
            return;
        }
        let key = (z, sigma);
        let e = self.terms.entry(key.clone()).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn coeff(&self, z: &[i64], sigma: Elem) -> Rational {
        self.terms.get(&(z.to_vec(), sigma)).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[i64], Elem, &Rational)> {
        self.terms.iter().map(|((z, s), c)| (z.as_slice(), *s, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn support(&self) -> BTreeSet<Vec<i64>> {
        self.terms.keys().map(|(z, _)| z.clone()).collect()
    }

    /// π^z, the component in 𝒟(Ω, v̂ + z).
    pub fn project(&self, z: &[i64]) -> OperatorVector {
        OperatorVector {
            terms: self.terms.iter().filter(|((y, _), _)| y == z).map(|(k, c)| (k.clone(), c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> OperatorVector {
        let mut out = Self::new();
        for ((z, s), a) in &self.terms {
            out.add_term(z.clone(), *s, a * c);
        }
        out
    }

    pub fn add(&self, other: &OperatorVector) -> OperatorVector {
        let mut out = self.clone();
        for ((z, s), a) in &other.terms {
            out.add_term(z.clone(), *s, a.clone());
        }
        out
    }
}

type CacheKey = (Vec<i64>, usize, Sign, usize);

/// The module V(Ω, T(v̂)) over a configured standard Galois order.
#[derive(Debug)]
pub struct GtModule {
    cfg: GaloisConfig,
    seed: Point,
    frame: SubsystemFrame,
    shifted: Vec<usize>,
    /// ∂_u(t_{v̂+z} F) evaluated at 0 for each class term, or the pole.
    values: Mutex<HashMap<CacheKey, Arc<Vec<Result<Rational>>>>>,
    matrices: Mutex<HashMap<Vec<i64>, Arc<Vec<Matrix>>>>,
}

impl GtModule {
    pub fn new(cfg: GaloisConfig, seed: Point) -> Result<Self> {
        Self::with_group_bound(cfg, seed, DEFAULT_GROUP_BOUND)
    }

    pub fn with_group_bound(cfg: GaloisConfig, seed: Point, bound: usize) -> Result<Self> {
        if seed.shape() != cfg.shape() {
            return Err(Error::ShapeMismatch(format!("seed {seed} does not match shape {:?}", cfg.shape().parts())));
        }
        if !is_seed(&seed, &cfg) {
            let s = seed_normalize(&seed, &cfg);
            return Err(Error::NotStandard {
                detail: format!("{seed} is not a seed"),
                suggestion: Some(format!("use the seed {}", s.point)),
            });
        }
        let shape = cfg.shape().clone();
        let ambient = Arc::new(CoxeterGroup::with_bound(RootSystem::type_a(&shape), bound)?);
        let shifted = cfg.shifted_vars();
        let omega: Vec<usize> = ambient
            .root_system()
            .simple()
            .iter()
            .enumerate()
            .filter(|(_, r)| shifted.contains(&r.plus) && r.eval(&seed).is_zero())
            .map(|(s, _)| s)
            .collect();
        let frame = SubsystemFrame::new(ambient, &omega)?;
        Ok(GtModule { cfg, seed, frame, shifted, values: Mutex::default(), matrices: Mutex::default() })
    }

    pub fn config(&self) -> &GaloisConfig {
        &self.cfg
    }

    pub fn seed(&self) -> &Point {
        &self.seed
    }

    pub fn frame(&self) -> &SubsystemFrame {
        &self.frame
    }

    pub fn group(&self) -> &Arc<CoxeterGroup> {
        self.frame.group()
    }

    pub fn nvars(&self) -> usize {
        self.cfg.shape().nvars()
    }

    pub fn zero_shift(&self) -> Vec<i64> {
        vec![0; self.nvars()]
    }

    pub fn point_at(&self, z: &[i64]) -> Point {
        self.seed.add_ints(z)
    }

    /// z ∈ Z(v̂): supported on the shifted blocks and α(z) ≥ 0 for α ∈ Ω.
    pub fn zset_member(&self, z: &[i64]) -> bool {
        if z.len() != self.nvars() {
            return false;
        }
        if z.iter().enumerate().any(|(a, &x)| x != 0 && !self.shifted.contains(&a)) {
            return false;
        }
        self.group().root_system().simple().iter().all(|r| z[r.plus] >= z[r.minus])
    }

    /// Classes of ∼_z in block k.
    pub fn classes_in_block(&self, z: &[i64], k: usize) -> Vec<EquivClass> {
        let p = self.point_at(z);
        let r = self.cfg.shape().block_range(k);
        let mut out: Vec<EquivClass> = Vec::new();
        for a in r {
            match out.last_mut() {
                Some(c) if p.coord(c.end) == p.coord(a) => c.end = a,
                _ => out.push(EquivClass { k, start: a, end: a }),
            }
        }
        out
    }

    /// 𝕀(μ̄, z), the classes of every shifted block.
    pub fn classes(&self, z: &[i64]) -> Vec<EquivClass> {
        (1..=self.cfg.rprime()).flat_map(|k| self.classes_in_block(z, k)).collect()
    }

    /// z ± δ_a stays in the cone (sign + adds, sign − subtracts).
    pub fn shift_legal(&self, z: &[i64], a: usize, sign: Sign) -> bool {
        let mut y = z.to_vec();
        y[a] += sign.unit();
        self.zset_member(&y)
    }

    /// W^z, the minimal coset representatives for the stabilizer of v̂+z.
    pub fn basis_at(&self, z: &[i64]) -> Result<Vec<Elem>> {
        self.frame.basis(&self.point_at(z))
    }

    /// ω₀ of the permutations of a set of consecutive positions.
    fn longest_on(&self, positions: std::ops::RangeInclusive<usize>) -> Elem {
        let g = self.group();
        let theta = ParabolicSet::new(
            g.root_system()
                .simple()
                .iter()
                .enumerate()
                .filter(|(_, r)| positions.contains(&r.plus) && positions.contains(&r.minus))
                .map(|(s, _)| s),
        );
        g.longest_in(&theta)
    }

    /// σ^∓(I) = ω₀(I)·ω₀(I∖a)⁻¹ where a = a^∓(I) is the shifted position.
    pub fn class_cycle(&self, class: &EquivClass, sign: Sign) -> Elem {
        let g = self.group();
        let rest = match sign {
            Sign::Plus => class.start..=class.end.saturating_sub(1),
            Sign::Minus => (class.start + 1)..=class.end,
        };
        let rest_longest = if class.len() == 1 { g.identity() } else { self.longest_on(rest) };
        g.mul(self.longest_on(class.start..=class.end), g.inverse(rest_longest))
    }

    /// The divided-difference form of (X_k^±)† relative to the classes of z:
    /// per class I, the term ∂_ω(F t_y) with a = a^∓(I), y = ∓e_a and
    /// F = ε f_{k,a}^± / ∏_{j∉I}(x_a − x_j), ε = (−1)^{#{p∈I : p<a}}.
    pub fn generator_forms(&self, k: usize, sign: Sign, z: &[i64]) -> Vec<DdTerm> {
        let n = self.nvars();
        let block = self.cfg.shape().block_range(k);
        self.classes_in_block(z, k)
            .into_iter()
            .map(|class| {
                let a = match sign {
                    Sign::Plus => class.a_minus(),
                    Sign::Minus => class.a_plus(),
                };
                let before = (class.start..a).count();
                let mut num = self.cfg.numerator_at(k, sign, a);
                if before % 2 == 1 {
                    num = -num;
                }
                let den = block.clone().filter(|&j| !class.contains(j)).map(|j| LinearForm::root(n, a, j)).collect();
                let coef = StructuredFraction::new(num, den).expect("roots are nonzero forms");
                DdTerm { class, omega: self.class_cycle(&class, sign), coef, shift: unit_shift(n, a, -sign.unit()) }
            })
            .collect()
    }

    /// Σ_I ∂_ω(F · t_y f), which equals (X_k^±)†(f) for G-invariant f.
    pub fn apply_dd_form(&self, k: usize, sign: Sign, z: &[i64], f: &StructuredFraction) -> Result<StructuredFraction> {
        let mut acc = StructuredFraction::zero(f.shape());
        for t in self.generator_forms(k, sign, z) {
            let shifted = f.translate(&shift_point(f.shape(), &t.shift));
            acc = &acc + &divided_difference(self.group(), t.omega, &(&t.coef * &shifted))?;
        }
        Ok(acc)
    }

    /// (X_k^±)†(f) from the expanded dagger sum.
    pub fn apply_dagger(&self, k: usize, sign: Sign, f: &StructuredFraction) -> StructuredFraction {
        apply_terms(&self.cfg.dagger(k, sign), f)
    }

    fn class_values(&self, z: &[i64], k: usize, sign: Sign, term: &DdTerm) -> Result<Arc<Vec<Result<Rational>>>> {
        let key = (z.to_vec(), k, sign, term.class.start);
        if let Some(v) = self.values.lock().expect("cache lock").get(&key) {
            return Ok(v.clone());
        }
        let p = self.point_at(z);
        let zero = Point::zero(p.shape());
        let diffs = all_divided_differences(self.group(), &term.coef.translate(&p))?;
        let vals = Arc::new(diffs.iter().map(|d| d.eval(&zero)).collect::<Vec<_>>());
        self.values.lock().expect("cache lock").insert(key, vals.clone());
        Ok(vals)
    }

    /// X_k^± · x, using 𝔇_σ^{v̂+z} ∘ (X_k^±)† = Σ_I Σ_τ 𝔇_{τ,σω}^{v̂+z}(F) 𝔇_τ^{v̂+z+y}
    /// over classes I with ℓ(σω) = ℓ(σ) + ℓ(ω).
    pub fn act_generator(&self, k: usize, sign: Sign, x: &OperatorVector) -> Result<OperatorVector> {
        if k == 0 || k > self.cfg.rprime() {
            return Err(Error::InvalidConfig(format!("no generator for block {k}")));
        }
        let g = self.group();
        let calc = self.frame.calculus();
        let mut out = OperatorVector::new();
        let mut forms: HashMap<Vec<i64>, Vec<DdTerm>> = HashMap::new();
        for (z, sigma, a) in x.terms() {
            let terms = forms.entry(z.to_vec()).or_insert_with(|| self.generator_forms(k, sign, z));
            for t in terms.iter() {
                let target = g.mul(sigma, t.omega);
                if g.length(target) != g.length(sigma) + g.length(t.omega) {
                    continue;
                }
                let z2: Vec<i64> = z.iter().zip(&t.shift).map(|(p, q)| p + q).collect();
                if !self.zset_member(&z2) {
                    return Err(Error::AxiomViolation(format!("shift left the cone at {z2:?}")));
                }
                let vals = self.class_values(z, k, sign, t)?;
                for tau in self.basis_at(&z2)? {
                    if g.length(tau) > g.length(target) {
                        continue;
                    }
                    let mut c = Rational::zero();
                    for (rho, lr) in calc.pair_coefficients(tau, target) {
                        c += lr * vals[rho.index()].clone()?;
                    }
                    out.add_term(z2.clone(), tau, a * c);
                }
            }
        }
        Ok(out)
    }

    /// γ·x for γ ∈ Γ, block by block.
    pub fn act_gamma(&self, gamma: &Polynomial, x: &OperatorVector) -> Result<OperatorVector> {
        self.frame.check_invariant(gamma)?;
        let mut out = OperatorVector::new();
        for z in x.support() {
            let p = self.point_at(&z);
            let part = GammaVector::new(&self.frame, &p, x.project(&z).terms().map(|(_, s, c)| (s, c.clone())))?;
            for (s, c) in gamma_action(&self.frame, gamma, &part)?.terms() {
                out.add_term(z.clone(), s, c.clone());
            }
        }
        Ok(out)
    }

    pub fn character_key(&self, z: &[i64]) -> CharacterKey {
        let p = self.point_at(z);
        let shape = self.cfg.shape();
        (1..=shape.blocks())
            .map(|k| {
                let mut c: Vec<Rational> = shape.block_range(k).map(|a| p.coord(a).clone()).collect();
                c.sort();
                c
            })
            .collect()
    }

    /// Splits x into its generalized Γ-weight components.
    pub fn character_decompose(&self, x: &OperatorVector) -> BTreeMap<CharacterKey, OperatorVector> {
        let mut out: BTreeMap<CharacterKey, OperatorVector> = BTreeMap::new();
        for (z, s, c) in x.terms() {
            out.entry(self.character_key(z)).or_default().add_term(z.to_vec(), s, c.clone());
        }
        out
    }

    /// Elements of Z(v̂) with |z|∞ ≤ r, by max-norm then lexicographically.
    pub fn cone_window(&self, r: u32) -> Vec<Vec<i64>> {
        let r = r as i64;
        let mut out = vec![self.zero_shift()];
        for &a in &self.shifted {
            let mut next = Vec::with_capacity(out.len() * (2 * r as usize + 1));
            for z in &out {
                for x in -r..=r {
                    let mut y = z.clone();
                    y[a] = x;
                    next.push(y);
                }
            }
            out = next;
        }
        out.retain(|z| self.zset_member(z));
        out.sort_by(|a, b| max_norm(a).cmp(&max_norm(b)).then_with(|| a.cmp(b)));
        out
    }

    /// Checks f_{k,i}^±(v̂ + z) ≠ 0 over the window, then decides all of
    /// Z(v̂) exactly when the numerators split into root-like linear factors.
    pub fn simplicity_check(&self, window: u32) -> Result<Verdict> {
        let numerators: Vec<(usize, Sign, usize, Polynomial)> = self
            .cfg
            .generators()
            .flat_map(|(k, sign)| self.cfg.shape().block_range(k).map(move |a| (k, sign, a)))
            .map(|(k, sign, a)| (k, sign, a, self.cfg.numerator_at(k, sign, a)))
            .collect();
        for z in self.cone_window(window) {
            let p = self.point_at(&z);
            for (k, sign, a, f) in &numerators {
                let value = f.eval(&p)?;
                if value.is_zero() {
                    return Ok(self.failure(z, *k, *sign, *a, value));
                }
            }
        }
        let mut witnesses = Vec::new();
        for (k, sign) in self.cfg.generators() {
            let Some((_, factors)) = linear_factors(self.cfg.numerator(k, sign)) else {
                return Ok(Verdict::HoldsOnWindow(window));
            };
            let first = self.cfg.shape().block_range(k).start;
            for a in self.cfg.shape().block_range(k) {
                let swap = Perm::transposition(self.nvars(), first, a);
                for l in &factors {
                    match self.vanishing_witness(&l.permute(&swap)) {
                        FactorStatus::Never => {}
                        FactorStatus::Unknown => return Ok(Verdict::HoldsOnWindow(window)),
                        FactorStatus::Vanishes(z) => witnesses.push((z, k, sign, a)),
                    }
                }
            }
        }
        match witnesses.into_iter().min_by(|a, b| max_norm(&a.0).cmp(&max_norm(&b.0)).then_with(|| a.0.cmp(&b.0))) {
            None => Ok(Verdict::HoldsEverywhere),
            Some((z, k, sign, a)) => Ok(self.failure(z, k, sign, a, Rational::zero())),
        }
    }

    fn failure(&self, z: Vec<i64>, k: usize, sign: Sign, a: usize, value: Rational) -> Verdict {
        let i = a - self.cfg.shape().block_range(k).start + 1;
        Verdict::Fails { z, k, i, sign, value }
    }

    /// Decides whether the linear form vanishes at some v̂ + z, z ∈ Z(v̂).
    fn vanishing_witness(&self, l: &LinearForm) -> FactorStatus {
        let target = -l.eval(&self.seed);
        let support: Vec<usize> = self.shifted.iter().copied().filter(|&a| !l.coeff(a).is_zero()).collect();
        let clusters = self.group().root_system().orbits();
        let cluster_of = |a: usize| clusters.iter().position(|c| c.contains(&a)).expect("every variable has an orbit");
        let mut prescribed: BTreeMap<usize, i64> = BTreeMap::new();
        let as_int = |q: &Rational| rational::is_integer(q).then(|| i64::try_from(q.to_integer()).ok()).flatten();
        match support.as_slice() {
            [] => {
                if !target.is_zero() {
                    return FactorStatus::Never;
                }
            }
            [a] => match as_int(&(&target / l.coeff(*a))) {
                Some(x) => {
                    prescribed.insert(*a, x);
                }
                None => return FactorStatus::Never,
            },
            [a, b] => {
                let (ca, cb) = (l.coeff(*a), l.coeff(*b));
                if ca.abs() != cb.abs() {
                    return FactorStatus::Unknown;
                }
                // z_a + r z_b = u with r = ±1.
                let Some(u) = as_int(&(&target / ca)) else { return FactorStatus::Never };
                let same_sign = (cb / ca).is_positive();
                if cluster_of(*a) != cluster_of(*b) {
                    prescribed.insert(*a, u);
                    prescribed.insert(*b, 0);
                } else if same_sign {
                    // a < b, so z_a ≥ z_b is required.
                    let zb = Integer::div_floor(&u, &2);
                    prescribed.insert(*a, u - zb);
                    prescribed.insert(*b, zb);
                } else if u >= 0 {
                    prescribed.insert(*a, u);
                    prescribed.insert(*b, 0);
                } else {
                    return FactorStatus::Never;
                }
            }
            _ => return FactorStatus::Unknown,
        }
        let mut z = self.zero_shift();
        for c in &clusters {
            let vals: Vec<(usize, i64)> = c.iter().filter_map(|a| prescribed.get(a).map(|&x| (*a, x))).collect();
            let Some(&(_, first)) = vals.first() else { continue };
            let mut current = first;
            for &a in c {
                if let Some(&x) = prescribed.get(&a) {
                    current = x;
                }
                z[a] = current;
            }
        }
        let p = self.point_at(&z);
        if self.zset_member(&z) && l.eval(&p).is_zero() {
            FactorStatus::Vanishes(z)
        } else {
            FactorStatus::Unknown
        }
    }

    fn gamma_matrices(&self, z: &[i64]) -> Result<Arc<Vec<Matrix>>> {
        if let Some(m) = self.matrices.lock().expect("cache lock").get(z) {
            return Ok(m.clone());
        }
        let p = self.point_at(z);
        let mats = self
            .frame
            .invariant_generators()
            .iter()
            .map(|g| action_matrix(&self.frame, g, &p).map(|a| a.matrix))
            .collect::<Result<Vec<_>>>()?;
        let mats = Arc::new(mats);
        self.matrices.lock().expect("cache lock").insert(z.to_vec(), mats.clone());
        Ok(mats)
    }

    /// Whether repeated generator and Γ actions, with projections onto
    /// weight components, carry 𝔇_from to a vector with a nonzero 𝔇_to
    /// coefficient within `max_steps` generator applications.
    pub fn reachability_probe(&self, from: (&[i64], Elem), to: (&[i64], Elem), max_steps: usize) -> Result<bool> {
        for (z, s) in [from, to] {
            if !self.zset_member(z) || !self.basis_at(z)?.contains(&s) {
                return Err(Error::UnknownElement(format!(
                    "({z:?}, {}) is not a basis element",
                    self.group().word_string(s)
                )));
            }
        }
        let mut blocks: BTreeMap<Vec<i64>, (Vec<Elem>, SpanBasis)> = BTreeMap::new();
        let mut frontier: Vec<(Vec<i64>, Vec<Rational>)> = Vec::new();
        let start = OperatorVector::basis(from.0.to_vec(), from.1);
        self.absorb(&start, &mut blocks, &mut frontier)?;
        let reached = |blocks: &BTreeMap<Vec<i64>, (Vec<Elem>, SpanBasis)>| {
            blocks.get(to.0).is_some_and(|(basis, span)| {
                let i = basis.iter().position(|&b| b == to.1).expect("target in basis");
                span.vectors().any(|v| !v[i].is_zero())
            })
        };
        for _ in 0..max_steps {
            if reached(&blocks) {
                return Ok(true);
            }
            let current = std::mem::take(&mut frontier);
            if current.is_empty() {
                return Ok(false);
            }
            for (z, vec) in current {
                let basis = blocks[&z].0.clone();
                let mut x = OperatorVector::new();
                for (s, c) in basis.iter().zip(vec) {
                    x.add_term(z.clone(), *s, c);
                }
                for (k, sign) in self.cfg.generators().collect::<Vec<_>>() {
                    let y = self.act_generator(k, sign, &x)?;
                    self.absorb(&y, &mut blocks, &mut frontier)?;
                }
            }
        }
        Ok(reached(&blocks))
    }

    /// Adds each weight component of y to its block and closes under Γ.
    fn absorb(
        &self,
        y: &OperatorVector,
        blocks: &mut BTreeMap<Vec<i64>, (Vec<Elem>, SpanBasis)>,
        frontier: &mut Vec<(Vec<i64>, Vec<Rational>)>,
    ) -> Result<()> {
        for z in y.support() {
            if !blocks.contains_key(&z) {
                blocks.insert(z.clone(), (self.basis_at(&z)?, SpanBasis::new()));
            }
            let mats = self.gamma_matrices(&z)?;
            let (basis, span) = blocks.get_mut(&z).expect("block inserted");
            let part = y.project(&z);
            let v: Vec<Rational> = basis.iter().map(|&s| part.coeff(&z, s)).collect();
            let mut queue = VecDeque::from([v]);
            while let Some(w) = queue.pop_front() {
                if span.insert(&w) {
                    for m in mats.iter() {
                        queue.push_back(m.apply(&w));
                    }
                    frontier.push((z.clone(), w));
                }
            }
        }
        Ok(())
    }

    /// JSON form {"seed": [..], "terms": [{"z", "sigma", "coef"}]}.
    pub fn vector_to_json(&self, x: &OperatorVector) -> Value {
        let terms: Vec<Value> = x
            .terms()
            .map(|(z, s, c)| json!({"z": z, "sigma": self.group().word_string(s), "coef": rational::to_string(c)}))
            .collect();
        let seed: Vec<String> = self.seed.coords().iter().map(rational::to_string).collect();
        json!({"seed": seed, "terms": terms})
    }

    pub fn vector_from_json(&self, v: &Value) -> Result<OperatorVector> {
        let bad = |m: &str| Error::InvalidConfig(m.to_string());
        if let Some(seed) = v.get("seed").and_then(Value::as_array) {
            let coords = seed
                .iter()
                .map(|c| c.as_str().ok_or_else(|| bad("seed coordinates must be strings")).and_then(rational::parse))
                .collect::<Result<Vec<_>>>()?;
            if coords != self.seed.coords() {
                return Err(Error::ShapeMismatch("vector belongs to a different seed".into()));
            }
        }
        let terms = v.get("terms").and_then(Value::as_array).ok_or_else(|| bad("missing \"terms\" list"))?;
        let mut out = OperatorVector::new();
        for t in terms {
            let z: Vec<i64> = t
                .get("z")
                .and_then(Value::as_array)
                .ok_or_else(|| bad("term without \"z\" list"))?
                .iter()
                .map(|x| x.as_i64().ok_or_else(|| bad("z entries must be integers")))
                .collect::<Result<_>>()?;
            let s = self.group().parse_word(t.get("sigma").and_then(Value::as_str).unwrap_or("e"))?;
            let c =
                rational::parse(t.get("coef").and_then(Value::as_str).ok_or_else(|| bad("term without \"coef\""))?)?;
            if !self.zset_member(&z) || !self.basis_at(&z)?.contains(&s) {
                return Err(Error::UnknownElement(format!(
                    "({z:?}, {}) is not a basis element",
                    self.group().word_string(s)
                )));
            }
            out.add_term(z, s, c);
        }
        Ok(out)
    }

    /// Text name of the variable at a position, for reports.
    pub fn var_name(&self, a: usize) -> VarIndex {
        self.cfg.shape().var(a)
    }
}

fn max_norm(z: &[i64]) -> i64 {
    z.iter().map(|x| x.abs()).max().unwrap_or(0)
}

enum FactorStatus {
    Never,
    Vanishes(Vec<i64>),
    Unknown,
}

/// Splits p into a constant times monic root-like factors x_a − x_b + c or
/// x_a + c, when possible.
pub fn linear_factors(p: &Polynomial) -> Option<(Rational, Vec<LinearForm>)> {
    if p.is_zero() {
        return None;
    }
    let n = p.nvars();
    let mut parts: Vec<Vec<Rational>> = Vec::new();
    for a in 0..n {
        let mut e = vec![Rational::zero(); n];
        e[a] = Rational::one();
        parts.push(e.clone());
        for b in (a + 1)..n {
            let mut d = e.clone();
            d[b] = -Rational::one();
            parts.push(d);
        }
    }
    let mut rest = p.clone();
    let mut factors = Vec::new();
    'outer: while rest.degree().unwrap_or(0) > 0 {
        for lin in &parts {
            for c in line_roots(&rest, lin) {
                let l = LinearForm::new(lin.clone(), c);
                if let Some(q) = rest.exact_divide(&l) {
                    factors.push(l);
                    rest = q;
                    continue 'outer;
                }
            }
        }
        return None;
    }
    Some((rest.constant_term(), factors))
}

/// Candidate constants c for which L + c may divide p: rational roots of p
/// restricted to lines along which L decreases with unit speed.
fn line_roots(p: &Polynomial, lin: &[Rational]) -> Vec<Rational> {
    let n = lin.len();
    let a = lin.iter().position(|x| !x.is_zero()).expect("nonzero linear part");
    for base in 0..3i64 {
        // x_b = base point, x_a = base_a − t, so L = L(base) − t.
        let coords: Vec<i64> = (0..n as i64).map(|b| (b + 2) * (b + 3 + base) + base).collect();
        let pt = Point::from_ints(p.shape(), &coords).expect("point matches shape");
        let moved = p.translate(&pt);
        let mut uni: BTreeMap<u32, Rational> = BTreeMap::new();
        for (m, c) in moved.terms() {
            let e = m.exponents();
            if e.iter().enumerate().all(|(b, &x)| b == a || x == 0) {
                let sign = if e[a] % 2 == 1 { -Rational::one() } else { Rational::one() };
                *uni.entry(e[a]).or_insert_with(Rational::zero) += c * sign;
            }
        }
        uni.retain(|_, c| !c.is_zero());
        if uni.is_empty() {
            continue;
        }
        let l_base: Rational = lin.iter().zip(&coords).map(|(x, &y)| x * Rational::from_integer(BigInt::from(y))).sum();
        return rational_roots(&uni).into_iter().map(|t| t - &l_base).collect();
    }
    Vec::new()
}

/// Rational roots of Σ c_e t^e by the rational root theorem; gives up on
/// coefficients too large to factor by trial division.
fn rational_roots(poly: &BTreeMap<u32, Rational>) -> Vec<Rational> {
    let denom = poly.values().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let low = *poly.keys().next().expect("nonzero polynomial");
    let high = *poly.keys().last().expect("nonzero polynomial");
    let mut roots = Vec::new();
    if low > 0 {
        roots.push(Rational::zero());
    }
    if high == low {
        return roots;
    }
    let a0 = (&poly[&low] * Rational::from_integer(denom.clone())).to_integer();
    let an = (&poly[&high] * Rational::from_integer(denom)).to_integer();
    let (Some(ps), Some(qs)) = (divisors(&a0), divisors(&an)) else { return roots };
    let eval = |t: &Rational| poly.iter().map(|(&e, c)| c * num_traits::pow(t.clone(), e as usize)).sum::<Rational>();
    for p in &ps {
        for q in &qs {
            for cand in [Rational::new(p.clone(), q.clone()), -Rational::new(p.clone(), q.clone())] {
                if !roots.contains(&cand) && eval(&cand).is_zero() {
                    roots.push(cand);
                }
            }
        }
    }
    roots
}

fn divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let n = n.abs();
    let limit = BigInt::from(1_000_000_000_000i64);
    if n > limit || n.is_zero() {
        return None;
    }
    let m: u64 = u64::try_from(&n).expect("bounded");
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= m {
        if m.is_multiple_of(d) {
            out.push(BigInt::from(d));
            if d * d != m {
                out.push(BigInt::from(m / d));
            }
        }
        d += 1;
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    fn toy() -> GtModule {
        let shape = Shape::new(&[2]);
        let one = Polynomial::one(&shape);
        let cfg = GaloisConfig::new(&[2], 1, vec![(1, Sign::Plus, one.clone()), (1, Sign::Minus, one)]).unwrap();
        GtModule::new(cfg, Point::zero(&shape)).unwrap()
    }

    #[test]
    fn seeds() {
        let shape = Shape::new(&[2]);
        let one = Polynomial::one(&shape);
        let cfg = GaloisConfig::new(&[2], 1, vec![(1, Sign::Plus, one.clone()), (1, Sign::Minus, one)]).unwrap();
        let s = seed_normalize(&Point::from_ints(&shape, &[0, 1]).unwrap(), &cfg);
        assert_eq!(s.point, Point::zero(&shape));
        assert_eq!(s.shift, vec![0, -1]);
        assert!(s.sigma.is_identity());
        let shape3 = Shape::new(&[3]);
        let one3 = Polynomial::one(&shape3);
        let cfg3 = GaloisConfig::new(&[3], 1, vec![(1, Sign::Plus, one3.clone()), (1, Sign::Minus, one3)]).unwrap();
        let v = Point::new(&shape3, vec![int(0), frac(1, 2), int(1)]).unwrap();
        let s = seed_normalize(&v, &cfg3);
        assert_eq!(s.point, Point::new(&shape3, vec![int(0), int(0), frac(1, 2)]).unwrap());
        assert!(is_seed(&s.point, &cfg3));
        assert_eq!(seed_normalize(&s.point, &cfg3).point, s.point);
        assert!(!is_seed(&v, &cfg3));
    }

    #[test]
    fn cone_and_classes() {
        let m = toy();
        assert!(m.zset_member(&[0, 0]));
        assert!(m.zset_member(&[1, 0]));
        assert!(!m.zset_member(&[0, 1]));
        assert_eq!(m.classes(&[2, 2]), vec![EquivClass { k: 1, start: 0, end: 1 }]);
        assert!(m.shift_legal(&[0, 0], 0, Sign::Plus));
        assert!(!m.shift_legal(&[0, 0], 1, Sign::Plus));
        assert!(m.shift_legal(&[0, 0], 1, Sign::Minus));
    }

    #[test]
    fn dagger_terms() {
        let m = toy();
        let d = m.config().dagger(1, Sign::Plus);
        assert_eq!(d.len(), 2);
        assert_eq!(d[0].shift, vec![-1, 0]);
        assert_eq!(dagger_of(&dagger_of(&d)), d);
        let gens = m.config().generator_terms(1, Sign::Plus);
        assert_eq!(dagger_of(&gens), d);
        assert!(gens.iter().all(|t| t.shift.iter().sum::<i64>() == 1));
    }

    #[test]
    fn toy_generator_step() {
        let m = toy();
        let g = m.group();
        let x = OperatorVector::basis(vec![0, 0], g.identity());
        let s = g.simple_reflection(0);
        let plus = m.act_generator(1, Sign::Plus, &x).unwrap();
        assert_eq!(plus.coeff(&[0, -1], s), frac(-1, 2));
        let minus = m.act_generator(1, Sign::Minus, &x).unwrap();
        assert_eq!(minus.coeff(&[1, 0], s), frac(1, 2));
        let shape = m.config().shape().clone();
        let gamma: StructuredFraction = parse_poly("x[1,1]^2*x[1,2] + x[1,1]*x[1,2]^2 + 3*x[1,1]", &shape)
            .map(|p| &p + &p.permute(&Perm::transposition(2, 0, 1)))
            .unwrap()
            .into();
        for z in [[0, 0], [1, 0], [2, -1]] {
            for sign in Sign::BOTH {
                let a = m.apply_dd_form(1, sign, &z, &gamma).unwrap();
                assert_eq!(a, m.apply_dagger(1, sign, &gamma));
            }
        }
    }

    #[test]
    fn simplicity_verdicts() {
        assert_eq!(toy().simplicity_check(2).unwrap(), Verdict::HoldsEverywhere);
        let shape = Shape::new(&[1]);
        let one = Polynomial::one(&shape);
        let f = parse_poly("x[1,1] - 1", &shape).unwrap();
        let cfg = GaloisConfig::new(&[1], 1, vec![(1, Sign::Plus, one), (1, Sign::Minus, f)]).unwrap();
        let m = GtModule::new(cfg, Point::zero(&shape)).unwrap();
        assert!(
            matches!(m.simplicity_check(3).unwrap(), Verdict::Fails { ref z, sign: Sign::Minus, .. } if z == &vec![1])
        );
        assert!(matches!(m.simplicity_check(0).unwrap(), Verdict::Fails { ref z, .. } if z == &vec![1]));
        let g = m.group().identity();
        assert!(m.reachability_probe((&[0], g), (&[1], g), 4).unwrap());
        assert!(!m.reachability_probe((&[0], g), (&[2], g), 6).unwrap());
    }

    #[test]
    fn half_shift_never_vanishes() {
        let shape = Shape::new(&[2]);
        let f = parse_poly("x[1,1] - 1/2", &shape).unwrap();
        let sym = &f + &f.permute(&Perm::transposition(2, 0, 1));
        let _ = sym;
        // Block size 2 requires invariance under the trivial stabilizer only.
        let cfg = GaloisConfig::new(&[2], 1, vec![(1, Sign::Plus, f.clone()), (1, Sign::Minus, f)]).unwrap();
        let m = GtModule::new(cfg, Point::zero(&shape)).unwrap();
        assert_eq!(m.simplicity_check(2).unwrap(), Verdict::HoldsEverywhere);
    }

    #[test]
    fn factorization() {
        let shape = Shape::new(&[1, 2]);
        let p = parse_poly("-1*(x[1,1] - x[2,1] + 2)*(x[1,1] - x[2,2])*(x[2,1] + 1/3)", &shape).unwrap();
        let (c, fs) = linear_factors(&p).unwrap();
        assert_eq!(fs.len(), 3);
        let prod = fs.iter().fold(Polynomial::constant(&shape, c), |acc, l| &acc * &l.to_polynomial(&shape));
        assert_eq!(prod, p);
        assert!(linear_factors(&parse_poly("x[1,1]^2 + 1", &shape).unwrap()).is_none());
    }
}
