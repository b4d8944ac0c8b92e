//! Finite reflection groups generated by roots x_a − x_b: enumeration,
//! length, reduced words, Bruhat order, saturated chains, parabolic
//! subgroups, coset decompositions and stabilizers of points.
//!
//! Every root accepted here is a difference of two coordinates, whose
//! reflection for the standard inner product is a transposition, so group
//! elements are stored as permutations of the variable positions.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt;

use num_traits::Zero;
use serde_json::Value;

use crate::error::{Error, Result};
use crate::polyring::{LinearForm, Perm, Point, Shape, VarIndex};

/// Default cap on the number of enumerated group elements.
pub const DEFAULT_GROUP_BOUND: usize = 1_000_000;
/// Default cap on |W| for saturated chain enumeration.
pub const DEFAULT_CHAIN_LIMIT: usize = 120;

/// The root x_plus − x_minus.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Root {
    pub plus: usize,
    pub minus: usize,
}

impl Root {
    pub fn new(plus: usize, minus: usize) -> Self {
        Root { plus, minus }
    }

    pub fn opposite(self) -> Root {
        Root { plus: self.minus, minus: self.plus }
    }

    pub fn act(self, p: &Perm) -> Root {
        Root { plus: p.apply(self.plus), minus: p.apply(self.minus) }
    }

    pub fn reflection(self, n: usize) -> Perm {
        Perm::transposition(n, self.plus, self.minus)
    }

    pub fn linear_form(self, n: usize) -> LinearForm {
        LinearForm::root(n, self.plus, self.minus)
    }

    pub fn eval(self, v: &Point) -> crate::rational::Rational {
        v.coord(self.plus) - v.coord(self.minus)
    }

    pub fn display(self, shape: &Shape) -> String {
        format!("{} - {}", shape.var(self.plus), shape.var(self.minus))
    }
}

/// A root system of differences of coordinates with a chosen base.
#[derive(Clone, Debug)]
pub struct RootSystem {
    shape: Shape,
    simple: Vec<Root>,
    labels: Vec<usize>,
    positive: Vec<Root>,
    coords: Vec<Vec<i64>>,
}

impl RootSystem {
    /// Builds and validates the system with base `simple`. Labels name the
    /// simple reflections on output ("s<label>").
    pub fn with_labels(shape: &Shape, simple: Vec<Root>, labels: Vec<usize>) -> Result<Self> {
        let n = shape.nvars();
        assert_eq!(simple.len(), labels.len(), "one label per simple root");
        for r in &simple {
            if r.plus >= n || r.minus >= n {
                return Err(Error::AxiomViolation(format!("root indices {r:?} outside {n} variables")));
            }
            if r.plus == r.minus {
                return Err(Error::AxiomViolation("a root must involve two distinct variables".into()));
            }
        }
        // Differences of coordinates are independent iff their graph is a forest.
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], a: usize) -> usize {
            let mut a = a;
            while parent[a] != a {
                parent[a] = parent[parent[a]];
                a = parent[a];
            }
            a
        }
        for r in &simple {
            let (a, b) = (find(&mut parent, r.plus), find(&mut parent, r.minus));
            if a == b {
                return Err(Error::AxiomViolation(format!(
                    "simple root {} is linearly dependent on the others",
                    r.display(shape)
                )));
            }
            parent[a] = b;
        }
        // Close the simple roots under the simple reflections.
        let refl: Vec<Perm> = simple.iter().map(|r| r.reflection(n)).collect();
        let mut all: BTreeSet<Root> = BTreeSet::new();
        let mut queue: VecDeque<Root> = VecDeque::new();
        for r in &simple {
            for x in [*r, r.opposite()] {
                if all.insert(x) {
                    queue.push_back(x);
                }
            }
        }
        while let Some(r) = queue.pop_front() {
            for p in &refl {
                let t = r.act(p);
                if all.insert(t) {
                    queue.push_back(t);
                }
            }
        }
        let mut positive = Vec::new();
        let mut coords = Vec::new();
        for r in all {
            let c = path_coordinates(&simple, r).ok_or_else(|| {
                Error::AxiomViolation(format!("root {} is not in the span of the base", r.display(shape)))
            })?;
            let nonneg = c.iter().all(|&x| x >= 0);
            let nonpos = c.iter().all(|&x| x <= 0);
            if !nonneg && !nonpos {
                return Err(Error::AxiomViolation(format!(
                    "root {} has mixed-sign coordinates in the base",
                    r.display(shape)
                )));
            }
            if nonneg {
                positive.push(r);
                coords.push(c);
            }
        }
        Ok(RootSystem { shape: shape.clone(), simple, labels, positive, coords })
    }

    pub fn new(shape: &Shape, simple: Vec<Root>) -> Result<Self> {
        let labels = (1..=simple.len()).collect();
        Self::with_labels(shape, simple, labels)
    }

    /// Full type A system Σ = {x_{k,i} − x_{k,i+1}}.
    pub fn type_a(shape: &Shape) -> Self {
        let mut simple = Vec::new();
        for k in 1..=shape.blocks() {
            let r = shape.block_range(k);
            for a in r.start..r.end.saturating_sub(1) {
                simple.push(Root::new(a, a + 1));
            }
        }
        Self::new(shape, simple).expect("type A base is valid")
    }

    /// Subsystem spanned by the simple roots with the given indices, keeping
    /// their labels.
    pub fn subsystem(&self, indices: &[usize]) -> Result<Self> {
        let mut idx: Vec<usize> = indices.to_vec();
        idx.sort_unstable();
        idx.dedup();
        if let Some(&bad) = idx.iter().find(|&&i| i >= self.simple.len()) {
            return Err(Error::AxiomViolation(format!("no simple root with index {bad}")));
        }
        let simple = idx.iter().map(|&i| self.simple[i]).collect();
        let labels = idx.iter().map(|&i| self.labels[i]).collect();
        Self::with_labels(&self.shape, simple, labels)
    }

    /// Parses {"mu": [..], "simple_roots": [[k,i,k',j'], ...]}.
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
        let roots =
            v.get("simple_roots").and_then(Value::as_array).ok_or_else(|| bad("missing \"simple_roots\" list"))?;
        let mut simple = Vec::new();
        for r in roots {
            let q: Vec<usize> = r
                .as_array()
                .filter(|a| a.len() == 4)
                .ok_or_else(|| bad("each simple root is [k,i,k',j']"))?
                .iter()
                .map(|x| x.as_u64().map(|x| x as usize).ok_or_else(|| bad("root indices must be positive integers")))
                .collect::<Result<_>>()?;
            let a = shape.index(VarIndex::new(q[0], q[1]))?;
            let b = shape.index(VarIndex::new(q[2], q[3]))?;
            simple.push(Root::new(a, b));
        }
        Self::new(&shape, simple)
    }

    pub fn shape(&self) -> &Shape {
        &self.shape
    }

    pub fn nvars(&self) -> usize {
        self.shape.nvars()
    }

    pub fn simple(&self) -> &[Root] {
        &self.simple
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn positive(&self) -> &[Root] {
        &self.positive
    }

    /// Coordinates of each positive root in the base.
    pub fn positive_coordinates(&self) -> &[Vec<i64>] {
        &self.coords
    }

    pub fn is_positive(&self, r: Root) -> bool {
        self.positive.binary_search(&r).is_ok()
    }

    /// Orbits of the group on variable positions, singletons included.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let n = self.nvars();
        let mut comp: Vec<usize> = (0..n).collect();
        let mut changed = true;
        while changed {
            changed = false;
            for r in &self.simple {
                let m = comp[r.plus].min(comp[r.minus]);
                for x in [r.plus, r.minus] {
                    if comp[x] != m {
                        comp[x] = m;
                        changed = true;
                    }
                }
            }
        }
        let mut groups: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
        for (a, c) in comp.into_iter().enumerate() {
            groups.entry(c).or_default().push(a);
        }
        groups.into_values().collect()
    }

    /// Variables moved by some reflection.
    pub fn moved_vars(&self) -> Vec<usize> {
        self.orbits().into_iter().filter(|o| o.len() > 1).flatten().collect()
    }
}

/// Coordinates of the root `r` in the base, following the unique path in
/// the forest of simple roots from r.plus to r.minus.
fn path_coordinates(simple: &[Root], r: Root) -> Option<Vec<i64>> {
    let mut prev: HashMap<usize, (usize, usize, i64)> = HashMap::new();
    let mut queue = VecDeque::from([r.plus]);
    let mut seen = HashSet::from([r.plus]);
    while let Some(a) = queue.pop_front() {
        if a == r.minus {
            break;
        }
        for (j, s) in simple.iter().enumerate() {
            let step = if s.plus == a {
                Some((s.minus, 1))
            } else if s.minus == a {
                Some((s.plus, -1))
            } else {
                None
            };
            if let Some((b, sign)) = step {
                if seen.insert(b) {
                    prev.insert(b, (a, j, sign));
                    queue.push_back(b);
                }
            }
        }
    }
    if !seen.contains(&r.minus) {
        return None;
    }
    let mut c = vec![0i64; simple.len()];
    let mut cur = r.minus;
    while cur != r.plus {
        let (p, j, sign) = prev[&cur];
        c[j] += sign;
        cur = p;
    }
    Some(c)
}

/// Handle of an element of a [`CoxeterGroup`].
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Elem(usize);

impl Elem {
    pub fn index(self) -> usize {
        self.0
    }
}

/// A subset θ of the simple reflections (by index).
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct ParabolicSet(BTreeSet<usize>);

impl ParabolicSet {
    pub fn new(indices: impl IntoIterator<Item = usize>) -> Self {
        ParabolicSet(indices.into_iter().collect())
    }

    pub fn contains(&self, s: usize) -> bool {
        self.0.contains(&s)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// One saturated chain σ_0 ⋖ σ_1 ⋖ ⋯ ⋖ σ_r with the cover weights.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Chain {
    pub elements: Vec<Elem>,
    pub weights: Vec<Root>,
}

/// Roots vanishing at a point and the resulting stabilizer data.
#[derive(Clone, Debug)]
pub struct StabilizerData {
    /// Positive roots α with α(v) = 0.
    pub vanishing: Vec<Root>,
    /// Simple reflections whose roots vanish at v.
    pub theta: ParabolicSet,
    pub is_standard: bool,
    /// Shortest σ with σ(v) standard, when v itself is not.
    pub conjugator: Option<Elem>,
}

/// Fully enumerated finite reflection group.
#[derive(Debug)]
pub struct CoxeterGroup {
    rs: RootSystem,
    simple_perms: Vec<Perm>,
    perms: Vec<Perm>,
    index: HashMap<Perm, usize>,
    length: Vec<usize>,
    right: Vec<Vec<usize>>,
    left: Vec<Vec<usize>>,
    inverse: Vec<usize>,
    words: Vec<Vec<usize>>,
    longest: usize,
    chain_limit: usize,
}

impl CoxeterGroup {
    pub fn new(rs: RootSystem) -> Result<Self> {
        Self::with_bound(rs, DEFAULT_GROUP_BOUND)
    }

    /// Enumerates the group by breadth-first search over right
    /// multiplication by simple reflections, failing past `bound` elements.
    pub fn with_bound(rs: RootSystem, bound: usize) -> Result<Self> {
        let n = rs.nvars();
        let simple_perms: Vec<Perm> = rs.simple.iter().map(|r| r.reflection(n)).collect();
        let ns = simple_perms.len();
        let mut perms = vec![Perm::identity(n)];
        let mut index = HashMap::from([(Perm::identity(n), 0usize)]);
        let mut length = vec![0usize];
        let mut right: Vec<Vec<usize>> = Vec::new();
        let mut head = 0;
        while head < perms.len() {
            let mut row = Vec::with_capacity(ns);
            for s in &simple_perms {
                let p = perms[head].compose(s);
                let id = match index.get(&p) {
                    Some(&id) => id,
                    None => {
                        let id = perms.len();
                        if id >= bound {
                            return Err(Error::NotFinite(bound));
                        }
                        index.insert(p.clone(), id);
                        perms.push(p);
                        length.push(length[head] + 1);
                        id
                    }
                };
                row.push(id);
            }
            right.push(row);
            head += 1;
        }
        let left: Vec<Vec<usize>> =
            perms.iter().map(|p| simple_perms.iter().map(|s| index[&s.compose(p)]).collect()).collect();
        let inverse: Vec<usize> = perms.iter().map(|p| index[&p.inverse()]).collect();
        // Elements are in non-decreasing length order, so the tail of each
        // canonical word is available when it is needed.
        let mut words: Vec<Vec<usize>> = vec![Vec::new(); perms.len()];
        for w in 1..perms.len() {
            let s = (0..ns).find(|&s| length[left[w][s]] < length[w]).expect("non-identity element has a left descent");
            let mut word = vec![s];
            word.extend_from_slice(&words[left[w][s]]);
            words[w] = word;
        }
        let longest = (0..perms.len()).max_by_key(|&w| length[w]).expect("group is non-empty");
        Ok(CoxeterGroup {
            rs,
            simple_perms,
            perms,
            index,
            length,
            right,
            left,
            inverse,
            words,
            longest,
            chain_limit: DEFAULT_CHAIN_LIMIT,
        })
    }

    pub fn set_chain_limit(&mut self, limit: usize) {
        self.chain_limit = limit;
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn shape(&self) -> &Shape {
        self.rs.shape()
    }

    pub fn order(&self) -> usize {
        self.perms.len()
    }

    pub fn num_simple(&self) -> usize {
        self.simple_perms.len()
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> + '_ {
        (0..self.perms.len()).map(Elem)
    }

    pub fn identity(&self) -> Elem {
        Elem(0)
    }

    pub fn longest(&self) -> Elem {
        Elem(self.longest)
    }

    pub fn simple_reflection(&self, s: usize) -> Elem {
        Elem(self.right[0][s])
    }

    pub fn simple_perm(&self, s: usize) -> &Perm {
        &self.simple_perms[s]
    }

    pub fn length(&self, w: Elem) -> usize {
        self.length[w.0]
    }

    pub fn perm(&self, w: Elem) -> &Perm {
        &self.perms[w.0]
    }

    /// Canonical (lexicographically least) reduced word, as simple indices.
    pub fn word(&self, w: Elem) -> &[usize] {
        &self.words[w.0]
    }

    pub fn right_mul(&self, w: Elem, s: usize) -> Elem {
        Elem(self.right[w.0][s])
    }

    pub fn left_mul(&self, s: usize, w: Elem) -> Elem {
        Elem(self.left[w.0][s])
    }

    pub fn inverse(&self, w: Elem) -> Elem {
        Elem(self.inverse[w.0])
    }

    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.word(b).iter().fold(a, |acc, &s| self.right_mul(acc, s))
    }

    pub fn find(&self, p: &Perm) -> Option<Elem> {
        self.index.get(p).map(|&i| Elem(i))
    }

    pub fn from_word(&self, word: &[usize]) -> Elem {
        word.iter().fold(self.identity(), |acc, &s| self.right_mul(acc, s))
    }

    /// Formats as '*'-joined labels, "e" for the identity.
    pub fn word_string(&self, w: Elem) -> String {
        if w.0 == 0 {
            return "e".into();
        }
        self.word(w).iter().map(|&s| format!("s{}", self.rs.labels[s])).collect::<Vec<_>>().join("*")
    }

    /// Parses "e" or "s1*s2*..." using the labels of the simple reflections.
    pub fn parse_word(&self, src: &str) -> Result<Elem> {
        let t = src.trim();
        if t.is_empty() || t == "e" {
            return Ok(self.identity());
        }
        let mut word = Vec::new();
        for part in t.split('*') {
            let p = part.trim();
            let label: usize = p
                .strip_prefix('s')
                .and_then(|x| x.parse().ok())
                .ok_or_else(|| Error::UnknownElement(format!("bad simple reflection {p:?} in {src:?}")))?;
            let s =
                self.rs.labels.iter().position(|&l| l == label).ok_or_else(|| {
                    Error::UnknownElement(format!("s{label} is not a simple reflection of this group"))
                })?;
            word.push(s);
        }
        Ok(self.from_word(&word))
    }

    /// ℓ(σ) computed as |σ(Φ⁺) ∩ −Φ⁺|.
    pub fn inversion_count(&self, w: Elem) -> usize {
        let p = self.perm(w);
        self.rs.positive.iter().filter(|r| !self.rs.is_positive(r.act(p))).count()
    }

    /// All reduced words of `w`, in lexicographic order.
    pub fn reduced_words(&self, w: Elem) -> Vec<Vec<usize>> {
        if w.0 == 0 {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for s in 0..self.num_simple() {
            let t = self.left_mul(s, w);
            if self.length(t) < self.length(w) {
                for rest in self.reduced_words(t) {
                    let mut word = vec![s];
                    word.extend(rest);
                    out.push(word);
                }
            }
        }
        out
    }

    /// Pairs (σ s_α, α) with α positive and ℓ(σ s_α) = ℓ(σ) + 1.
    pub fn bruhat_covers(&self, w: Elem) -> Vec<(Elem, Root)> {
        let n = self.rs.nvars();
        let p = self.perm(w);
        let mut out = Vec::new();
        for &r in &self.rs.positive {
            let t = self.find(&p.compose(&r.reflection(n))).expect("group is closed under reflections");
            if self.length(t) == self.length(w) + 1 {
                out.push((t, r));
            }
        }
        out
    }

    pub fn bruhat_leq(&self, a: Elem, b: Elem) -> bool {
        if a == b {
            return true;
        }
        let top = self.length(b);
        if self.length(a) >= top {
            return false;
        }
        let mut seen = vec![false; self.order()];
        let mut frontier = vec![a];
        seen[a.0] = true;
        while let Some(x) = frontier.pop() {
            for (y, _) in self.bruhat_covers(x) {
                if y == b {
                    return true;
                }
                if self.length(y) < top && !seen[y.0] {
                    seen[y.0] = true;
                    frontier.push(y);
                }
            }
        }
        false
    }

    /// Every saturated chain from `a` to `b`. Limited to groups of order at
    /// most the chain limit.
    pub fn saturated_chains(&self, a: Elem, b: Elem) -> Result<Vec<Chain>> {
        if self.order() > self.chain_limit {
            return Err(Error::LimitExceeded(format!(
                "saturated chains are enumerated only for |W| <= {} (this group has {})",
                self.chain_limit,
                self.order()
            )));
        }
        let mut out = Vec::new();
        let mut elements = vec![a];
        let mut weights = Vec::new();
        self.chains_rec(b, &mut elements, &mut weights, &mut out);
        Ok(out)
    }

    fn chains_rec(&self, target: Elem, elements: &mut Vec<Elem>, weights: &mut Vec<Root>, out: &mut Vec<Chain>) {
        let cur = *elements.last().expect("chain is non-empty");
        if cur == target {
            out.push(Chain { elements: elements.clone(), weights: weights.clone() });
            return;
        }
        if self.length(cur) >= self.length(target) {
            return;
        }
        for (next, r) in self.bruhat_covers(cur) {
            if !self.bruhat_leq(next, target) {
                continue;
            }
            elements.push(next);
            weights.push(r);
            self.chains_rec(target, elements, weights, out);
            elements.pop();
            weights.pop();
        }
    }

    /// Elements of the parabolic subgroup W_θ.
    pub fn parabolic_elements(&self, theta: &ParabolicSet) -> Vec<Elem> {
        let mut seen = vec![false; self.order()];
        let mut out = vec![self.identity()];
        seen[0] = true;
        let mut head = 0;
        while head < out.len() {
            let w = out[head];
            for s in theta.iter() {
                let t = self.right_mul(w, s);
                if !seen[t.0] {
                    seen[t.0] = true;
                    out.push(t);
                }
            }
            head += 1;
        }
        out
    }

    /// ω₀(θ), the longest element of W_θ.
    pub fn longest_in(&self, theta: &ParabolicSet) -> Elem {
        self.parabolic_elements(theta).into_iter().max_by_key(|&w| self.length(w)).expect("W_θ contains e")
    }

    /// W^θ = {σ : ℓ(σs) > ℓ(σ) for s ∈ θ}, sorted by (length, word).
    pub fn min_coset_reps(&self, theta: &ParabolicSet) -> Vec<Elem> {
        let mut reps: Vec<Elem> = self
            .elements()
            .filter(|&w| theta.iter().all(|s| self.length(self.right_mul(w, s)) > self.length(w)))
            .collect();
        reps.sort_by(|&a, &b| self.length(a).cmp(&self.length(b)).then_with(|| self.word(a).cmp(self.word(b))));
        reps
    }

    pub fn is_min_coset_rep(&self, w: Elem, theta: &ParabolicSet) -> bool {
        theta.iter().all(|s| self.length(self.right_mul(w, s)) > self.length(w))
    }

    /// σ = σ^θ σ_θ with σ^θ ∈ W^θ and σ_θ ∈ W_θ.
    pub fn coset_decompose(&self, w: Elem, theta: &ParabolicSet) -> (Elem, Elem) {
        let mut rep = w;
        while let Some(s) = theta.iter().find(|&s| self.length(self.right_mul(rep, s)) < self.length(rep)) {
            rep = self.right_mul(rep, s);
        }
        (rep, self.mul(self.inverse(rep), w))
    }

    /// Φ₀(v), the simple reflections fixing v, standardness, and a
    /// conjugating element when v is not standard.
    pub fn stabilizer_data(&self, v: &Point) -> StabilizerData {
        let vanishing: Vec<Root> = self.rs.positive.iter().copied().filter(|r| r.eval(v).is_zero()).collect();
        let theta = ParabolicSet::new((0..self.num_simple()).filter(|&s| self.rs.simple[s].eval(v).is_zero()));
        let is_standard = self.is_standard_with(&vanishing, &theta);
        let conjugator =
            if is_standard { None } else { self.elements().find(|&w| self.is_standard(&v.permuted(self.perm(w)))) };
        StabilizerData { vanishing, theta, is_standard, conjugator }
    }

    pub fn is_standard(&self, v: &Point) -> bool {
        let vanishing: Vec<Root> = self.rs.positive.iter().copied().filter(|r| r.eval(v).is_zero()).collect();
        let theta = ParabolicSet::new((0..self.num_simple()).filter(|&s| self.rs.simple[s].eval(v).is_zero()));
        self.is_standard_with(&vanishing, &theta)
    }

    fn is_standard_with(&self, vanishing: &[Root], theta: &ParabolicSet) -> bool {
        // Positive roots of the subsystem generated by θ are those supported on θ.
        let generated =
            self.rs.coords.iter().filter(|c| c.iter().enumerate().all(|(j, &x)| x == 0 || theta.contains(j))).count();
        generated == vanishing.len()
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn group(mu: &[usize]) -> CoxeterGroup {
        CoxeterGroup::new(RootSystem::type_a(&Shape::new(mu))).unwrap()
    }

    #[test]
    fn orders_and_longest() {
        let a1 = group(&[2]);
        assert_eq!(a1.order(), 2);
        assert_eq!(a1.length(a1.longest()), 1);
        let s3 = group(&[3]);
        assert_eq!(s3.order(), 6);
        assert_eq!(s3.length(s3.longest()), 3);
        assert_eq!(s3.reduced_words(s3.longest()).len(), 2);
        assert_eq!(group(&[2, 2]).order(), 4);
        assert_eq!(group(&[4]).order(), 24);
    }

    #[test]
    fn lengths_match_inversions() {
        let g = group(&[4]);
        for w in g.elements() {
            assert_eq!(g.length(w), g.inversion_count(w));
            assert_eq!(g.word(w).len(), g.length(w));
            assert_eq!(g.from_word(g.word(w)), w);
        }
        assert_eq!(g.length(g.longest()), g.root_system().positive().len());
    }

    #[test]
    fn canonical_word_is_lex_least() {
        let g = group(&[4]);
        for w in g.elements() {
            let words = g.reduced_words(w);
            assert_eq!(words.iter().min().unwrap().as_slice(), g.word(w));
        }
    }

    #[test]
    fn covers_of_s1_in_s3() {
        let g = group(&[3]);
        let s1 = g.parse_word("s1").unwrap();
        let covers: BTreeSet<String> = g.bruhat_covers(s1).into_iter().map(|(t, _)| g.word_string(t)).collect();
        assert_eq!(covers, BTreeSet::from(["s1*s2".to_string(), "s2*s1".to_string()]));
        assert!(g.bruhat_covers(g.longest()).is_empty());
    }

    #[test]
    fn coset_examples() {
        let g = group(&[3]);
        let theta = ParabolicSet::new([0]);
        let reps: Vec<String> = g.min_coset_reps(&theta).into_iter().map(|w| g.word_string(w)).collect();
        assert_eq!(reps, ["e", "s2", "s1*s2"]);
        let (rep, rest) = g.coset_decompose(g.longest(), &theta);
        assert_eq!(rep, g.mul(g.longest(), g.inverse(g.longest_in(&theta))));
        assert_eq!(g.length(rep) + g.length(rest), g.length(g.longest()));
    }

    #[test]
    fn stabilizer_examples() {
        let shape = Shape::new(&[3]);
        let g = group(&[3]);
        let v = Point::from_ints(&shape, &[0, 0, 5]).unwrap();
        let d = g.stabilizer_data(&v);
        assert!(d.is_standard);
        assert_eq!(d.vanishing, vec![Root::new(0, 1)]);
        assert_eq!(g.parabolic_elements(&d.theta).len(), 2);
        let w = Point::from_ints(&shape, &[0, 5, 0]).unwrap();
        let d = g.stabilizer_data(&w);
        assert!(!d.is_standard);
        let c = d.conjugator.unwrap();
        assert!(g.is_standard(&w.permuted(g.perm(c))));
        let generic = Point::new(&shape, vec![int(0), int(1), int(3)]).unwrap();
        assert!(g.stabilizer_data(&generic).vanishing.is_empty());
    }

    #[test]
    fn rejects_bad_bases() {
        let shape = Shape::new(&[3]);
        assert!(matches!(
            RootSystem::new(&shape, vec![Root::new(0, 1), Root::new(2, 1)]),
            Err(Error::AxiomViolation(_))
        ));
        assert!(matches!(
            RootSystem::new(&shape, vec![Root::new(0, 1), Root::new(1, 2), Root::new(0, 2)]),
            Err(Error::AxiomViolation(_))
        ));
    }

    #[test]
    fn enumeration_bound() {
        let rs = RootSystem::type_a(&Shape::new(&[4]));
        assert!(matches!(CoxeterGroup::with_bound(rs, 10), Err(Error::NotFinite(10))));
    }
}
