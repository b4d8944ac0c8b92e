use std::fmt;
use std::ops::Range;
use std::sync::Arc;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::rational::{self, Rational};

/// Composition μ = (μ_1, ..., μ_r) describing the variable blocks.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Shape {
    parts: Arc<[usize]>,
    offsets: Arc<[usize]>,
}

/// Variable label x_{k,i}, both indices 1-based. Ordered lexicographically.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct VarIndex {
    pub k: usize,
    pub i: usize,
}

impl VarIndex {
    pub fn new(k: usize, i: usize) -> Self {
        VarIndex { k, i }
    }
}

impl fmt::Display for VarIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x[{},{}]", self.k, self.i)
    }
}

impl Shape {
    pub fn new(parts: &[usize]) -> Self {
        let mut offsets = Vec::with_capacity(parts.len() + 1);
        let mut acc = 0;
        offsets.push(0);
        for &p in parts {
            acc += p;
            offsets.push(acc);
        }
        Shape { parts: parts.into(), offsets: offsets.into() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn blocks(&self) -> usize {
        self.parts.len()
    }

    pub fn nvars(&self) -> usize {
        self.offsets[self.parts.len()]
    }

    /// Linear positions of the variables of block `k` (1-based).
    pub fn block_range(&self, k: usize) -> Range<usize> {
        self.offsets[k - 1]..self.offsets[k]
    }

    pub fn index(&self, v: VarIndex) -> Result<usize> {
        if v.k == 0 || v.k > self.parts.len() || v.i == 0 || v.i > self.parts[v.k - 1] {
            return Err(Error::OutOfShape(format!("{v} not in shape {:?}", self.parts())));
        }
        Ok(self.offsets[v.k - 1] + v.i - 1)
    }

    pub fn var(&self, idx: usize) -> VarIndex {
        let k = self.block_of(idx);
        VarIndex { k, i: idx - self.offsets[k - 1] + 1 }
    }

    /// Block number (1-based) containing linear position `idx`.
    pub fn block_of(&self, idx: usize) -> usize {
        assert!(idx < self.nvars(), "variable position {idx} out of range");
        self.offsets.partition_point(|&o| o <= idx)
    }
}

/// Permutation of the linear variable positions. Acts on variables by
/// x_a ↦ x_{p(a)}; composition is `(p ∘ q)(a) = p(q(a))`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Perm(Vec<usize>);

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm((0..n).collect())
    }

    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut p: Vec<usize> = (0..n).collect();
        p.swap(a, b);
        Perm(p)
    }

    pub fn from_images(images: Vec<usize>) -> Self {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            assert!(i < images.len() && !seen[i], "not a permutation: {images:?}");
            seen[i] = true;
        }
        Perm(images)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn apply(&self, a: usize) -> usize {
        self.0[a]
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn compose(&self, other: &Perm) -> Perm {
        Perm(other.0.iter().map(|&a| self.0[a]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.0.len()];
        for (a, &b) in self.0.iter().enumerate() {
            inv[b] = a;
        }
        Perm(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(a, &b)| a == b)
    }
}

/// A rational point of ℚ^𝕀.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Point {
    shape: Shape,
    coords: Vec<Rational>,
}

impl Point {
    pub fn new(shape: &Shape, coords: Vec<Rational>) -> Result<Self> {
        if coords.len() != shape.nvars() {
            return Err(Error::ShapeMismatch(format!(
                "point has {} coordinates, shape {:?} needs {}",
                coords.len(),
                shape.parts(),
                shape.nvars()
            )));
        }
        Ok(Point { shape: shape.clone(), coords })
    }

    pub fn from_ints(shape: &Shape, coords: &[i64]) -> Result<Self> {
        Point::new(shape, coords.iter().map(|&c| rational::int(c)).collect())
    }

    pub fn zero(shape: &Shape) -> Self {
        Point { shape: shape.clone(), coords: vec![Rational::zero(); shape.nvars()] }
    }

    pub fn shape(&self) -> &Shape {
        &self.shape
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn coord(&self, idx: usize) -> &Rational {
        &self.coords[idx]
    }

    /// σ(v), so that (σ·f)(σ(v)) = f(v).
    pub fn permuted(&self, p: &Perm) -> Point {
        let mut out = vec![Rational::zero(); self.coords.len()];
        for (a, c) in self.coords.iter().enumerate() {
            out[p.apply(a)] = c.clone();
        }
        Point { shape: self.shape.clone(), coords: out }
    }

    pub fn add(&self, other: &Point) -> Point {
        assert_eq!(self.shape, other.shape, "point shapes differ");
        let coords = self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect();
        Point { shape: self.shape.clone(), coords }
    }

    pub fn add_ints(&self, z: &[i64]) -> Point {
        assert_eq!(z.len(), self.coords.len(), "shift length differs from point length");
        let coords = self.coords.iter().zip(z).map(|(a, &b)| a + rational::int(b)).collect();
        Point { shape: self.shape.clone(), coords }
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(rational::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}
