use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::linear::LinearForm;
use super::shape::{Perm, Point, Shape};
use crate::error::{Error, Result};
use crate::rational::{self, Rational};

/// Exponent vector over the linear variable positions. Ordered by total
/// degree first, then lexicographically with x_{1,1} largest.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    pub fn var(n: usize, idx: usize) -> Self {
        let mut e = vec![0; n];
        e[idx] = 1;
        Monomial(e)
    }

    pub fn from_exponents(e: Vec<u32>) -> Self {
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Product of the factorials of the exponents.
    pub fn factorial(&self) -> BigInt {
        self.0.iter().map(|&e| rational::factorial(e)).product()
    }

    /// All monomials of total degree `d` in the variables listed in `vars`,
    /// in decreasing monomial order.
    pub fn of_degree(n: usize, vars: &[usize], d: u32) -> Vec<Monomial> {
        fn rec(vars: &[usize], d: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
            match vars.split_first() {
                None => {
                    if d == 0 {
                        out.push(Monomial(cur.clone()));
                    }
                }
                Some((&v, rest)) => {
                    let top = if rest.is_empty() { d } else { 0 };
                    for e in (top..=d).rev() {
                        cur[v] = e;
                        rec(rest, d - e, cur, out);
                    }
                    cur[v] = 0;
                }
            }
        }
        let mut out = Vec::new();
        if vars.is_empty() {
            if d == 0 {
                out.push(Monomial::one(n));
            }
            return out;
        }
        rec(vars, d, &mut vec![0; n], &mut out);
        out
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial with exact rational coefficients in the variables of a
/// shape. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Polynomial {
    shape: Shape,
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero(shape: &Shape) -> Self {
        Polynomial { shape: shape.clone(), terms: BTreeMap::new() }
    }

    pub fn one(shape: &Shape) -> Self {
        Self::constant(shape, Rational::one())
    }

    pub fn constant(shape: &Shape, c: Rational) -> Self {
        let mut p = Self::zero(shape);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(shape.nvars()), c);
        }
        p
    }

    /// The variable at linear position `idx`.
    pub fn var(shape: &Shape, idx: usize) -> Self {
        Self::monomial(shape, Monomial::var(shape.nvars(), idx), Rational::one())
    }

    pub fn monomial(shape: &Shape, m: Monomial, c: Rational) -> Self {
        assert_eq!(m.0.len(), shape.nvars(), "monomial length differs from shape");
        let mut p = Self::zero(shape);
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn from_terms(shape: &Shape, terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut p = Self::zero(shape);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn shape(&self) -> &Shape {
        &self.shape
    }

    pub fn nvars(&self) -> usize {
        self.shape.nvars()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Iterates terms in increasing monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(&Monomial::one(self.nvars()))
    }

    /// Total degree; `None` stands for the degree −∞ of the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn homogeneous_part(&self, d: u32) -> Polynomial {
        Polynomial {
            shape: self.shape.clone(),
            terms: self.terms.iter().filter(|(m, _)| m.degree() == d).map(|(m, c)| (m.clone(), c.clone())).collect(),
        }
    }

    /// Linear positions of variables that occur in some term.
    pub fn support_vars(&self) -> Vec<usize> {
        (0..self.nvars()).filter(|&a| self.terms.keys().any(|m| m.0[a] > 0)).collect()
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn check_shape(&self, other: &Polynomial) {
        assert_eq!(self.shape, other.shape, "polynomial shapes differ");
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Self::zero(&self.shape);
        }
        Polynomial { shape: self.shape.clone(), terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect() }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Self::one(&self.shape);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn eval(&self, v: &Point) -> Result<Rational> {
        if v.shape() != &self.shape {
            return Err(Error::ShapeMismatch(format!(
                "point of shape {:?} for polynomial of shape {:?}",
                v.shape().parts(),
                self.shape.parts()
            )));
        }
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (a, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    t *= num_traits::pow(v.coord(a).clone(), e as usize);
                }
            }
            total += t;
        }
        Ok(total)
    }

    /// t_v(f) = f(x + v).
    pub fn translate(&self, v: &Point) -> Polynomial {
        assert_eq!(v.shape(), &self.shape, "translation point shape differs");
        let n = self.nvars();
        let mut out = Self::zero(&self.shape);
        for (m, c) in &self.terms {
            // Expand the product of (x_a + v_a)^{e_a} variable by variable.
            let mut partial: Vec<(Vec<u32>, Rational)> = vec![(vec![0; n], c.clone())];
            for (a, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let va = v.coord(a);
                if va.is_zero() {
                    for (exps, _) in partial.iter_mut() {
                        exps[a] = e;
                    }
                    continue;
                }
                let mut next = Vec::with_capacity(partial.len() * (e as usize + 1));
                let mut binom = BigInt::one();
                for j in 0..=e {
                    // Term x_a^j v_a^{e-j} with binomial coefficient C(e, j).
                    let w = Rational::from_integer(binom.clone()) * num_traits::pow(va.clone(), (e - j) as usize);
                    for (exps, coef) in &partial {
                        let mut ex = exps.clone();
                        ex[a] = j;
                        next.push((ex, coef * &w));
                    }
                    binom = binom * BigInt::from(e - j) / BigInt::from(j + 1);
                }
                partial = next;
            }
            for (ex, coef) in partial {
                out.add_term(Monomial(ex), coef);
            }
        }
        out
    }

    /// σ·f for the permutation σ, i.e. x_a ↦ x_{σ(a)}.
    pub fn permute(&self, p: &Perm) -> Polynomial {
        let n = self.nvars();
        assert_eq!(p.len(), n, "permutation size differs from variable count");
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut e = vec![0; n];
                for (a, &x) in m.0.iter().enumerate() {
                    e[p.apply(a)] = x;
                }
                (Monomial(e), c.clone())
            })
            .collect();
        Polynomial { shape: self.shape.clone(), terms }
    }

    pub fn partial(&self, idx: usize) -> Polynomial {
        let mut out = Self::zero(&self.shape);
        for (m, c) in &self.terms {
            let e = m.0[idx];
            if e > 0 {
                let mut ex = m.0.clone();
                ex[idx] = e - 1;
                out.add_term(Monomial(ex), c * rational::int(e as i64));
            }
        }
        out
    }

    /// Θ(self)(g): the constant coefficient differential operator obtained by
    /// substituting ∂/∂x_a for x_a, applied to `g`.
    pub fn theta_apply(&self, g: &Polynomial) -> Polynomial {
        self.check_shape(g);
        let mut out = Self::zero(&self.shape);
        for (mf, cf) in &self.terms {
            for (mg, cg) in &g.terms {
                if mf.0.iter().zip(&mg.0).any(|(a, b)| a > b) {
                    continue;
                }
                let mut w = BigInt::one();
                let mut ex = mg.0.clone();
                for (a, (&ea, &eb)) in mf.0.iter().zip(&mg.0).enumerate() {
                    for t in 0..ea {
                        w *= BigInt::from(eb - t);
                    }
                    ex[a] = eb - ea;
                }
                out.add_term(Monomial(ex), cf * cg * Rational::from_integer(w));
            }
        }
        out
    }

    /// (f, g) = Θ(f)(g)(0) = Σ_m f_m g_m m!.
    pub fn theta_pair(&self, g: &Polynomial) -> Rational {
        self.check_shape(g);
        let (small, large) = if self.terms.len() <= g.terms.len() { (self, g) } else { (g, self) };
        let mut total = Rational::zero();
        for (m, c) in &small.terms {
            if let Some(d) = large.terms.get(m) {
                total += c * d * Rational::from_integer(m.factorial());
            }
        }
        total
    }

    /// Like `exact_divide`, but first checks that the polynomial vanishes at
    /// one point of the hyperplane l = 0, which is much cheaper and rules
    /// out most non-divisors.
    pub fn divide_if_vanishing(&self, l: &LinearForm) -> Option<Polynomial> {
        if let Some(p) = l.leading_index() {
            let n = self.nvars();
            let mut coords: Vec<Rational> = (0..n).map(|a| rational::frac(2 * a as i64 + 3, a as i64 + 2)).collect();
            coords[p] = Rational::zero();
            let rest = l.eval_linear(&coords);
            coords[p] = -rest / l.coeff(p);
            let pt = Point::new(&self.shape, coords).expect("point matches shape");
            if !self.eval(&pt).expect("point matches shape").is_zero() {
                return None;
            }
        }
        self.exact_divide(l)
    }

    /// Exact quotient by a linear form, or `None` when the form does not
    /// divide.
    pub fn exact_divide(&self, l: &LinearForm) -> Option<Polynomial> {
        let n = self.nvars();
        assert_eq!(l.len(), n, "linear form length differs from variable count");
        let Some(p) = l.leading_index() else {
            // Constant form.
            let c = l.constant();
            if c.is_zero() {
                return None;
            }
            return Some(self.scale(&(Rational::one() / c)));
        };
        if self.is_zero() {
            return Some(self.clone());
        }
        let lead = l.coeff(p).clone();
        // rest = l − lead·x_p, free of x_p.
        let mut rest_terms = Vec::new();
        for a in 0..n {
            if a != p && !l.coeff(a).is_zero() {
                rest_terms.push((Monomial::var(n, a), l.coeff(a).clone()));
            }
        }
        rest_terms.push((Monomial::one(n), l.constant().clone()));
        let rest = Polynomial::from_terms(&self.shape, rest_terms);
        // Split f = Σ_k f_k x_p^k with f_k free of x_p.
        let top = self.terms.keys().map(|m| m.0[p]).max().unwrap_or(0) as usize;
        let mut parts = vec![Self::zero(&self.shape); top + 1];
        for (m, c) in &self.terms {
            let k = m.0[p] as usize;
            let mut ex = m.0.clone();
            ex[p] = 0;
            parts[k].add_term(Monomial(ex), c.clone());
        }
        if top == 0 {
            return None;
        }
        let inv = Rational::one() / lead;
        // Synthetic division: q_{k-1} = (f_k − rest·q_k)/lead.
        let mut q = vec![Self::zero(&self.shape); top];
        q[top - 1] = parts[top].scale(&inv);
        for k in (1..top).rev() {
            q[k - 1] = (&parts[k] - &(&rest * &q[k])).scale(&inv);
        }
        let remainder = &parts[0] - &(&rest * &q[0]);
        if !remainder.is_zero() {
            return None;
        }
        let mut out = Self::zero(&self.shape);
        for (k, qk) in q.into_iter().enumerate() {
            for (m, c) in qk.terms {
                let mut ex = m.0;
                ex[p] = k as u32;
                out.add_term(Monomial(ex), c);
            }
        }
        Some(out)
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.check_shape(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.check_shape(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.check_shape(rhs);
        let mut out = Polynomial::zero(&self.shape);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            shape: self.shape.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $f(self, rhs: Polynomial) -> Polynomial {
                (&self).$f(&rhs)
            }
        }
        impl $tr<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $f(self, rhs: &Polynomial) -> Polynomial {
                (&self).$f(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

/// Elementary symmetric polynomial of degree `d` in the variables `vars`.
pub fn elementary_symmetric(shape: &Shape, vars: &[usize], d: usize) -> Polynomial {
    let n = shape.nvars();
    let mut out = Polynomial::zero(shape);
    fn rec(vars: &[usize], d: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if d == 0 {
            out.push(cur.clone());
            return;
        }
        for (j, &v) in vars.iter().enumerate() {
            if vars.len() - j < d {
                break;
            }
            cur[v] = 1;
            rec(&vars[j + 1..], d - 1, cur, out);
            cur[v] = 0;
        }
    }
    let mut mons = Vec::new();
    rec(vars, d, &mut vec![0; n], &mut mons);
    for e in mons {
        out.add_term(Monomial(e), Rational::one());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    fn x(s: &Shape, a: usize) -> Polynomial {
        Polynomial::var(s, a)
    }

    #[test]
    fn degree_conventions() {
        let s = Shape::new(&[2]);
        assert_eq!(Polynomial::zero(&s).degree(), None);
        assert_eq!(Polynomial::one(&s).degree(), Some(0));
        let f = &(&x(&s, 0) * &x(&s, 0)) + &x(&s, 1);
        assert_eq!(f.degree(), Some(2));
        assert!(!f.is_homogeneous());
    }

    #[test]
    fn translate_example() {
        // t_{(1,0)}(x1 x2) = x1 x2 + x2.
        let s = Shape::new(&[2]);
        let v = Point::from_ints(&s, &[1, 0]).unwrap();
        let f = &x(&s, 0) * &x(&s, 1);
        assert_eq!(f.translate(&v), &f + &x(&s, 1));
        let g = x(&s, 0).pow(3);
        let v = Point::from_ints(&s, &[2, 5]).unwrap();
        let expect = (&x(&s, 0) + &Polynomial::constant(&s, int(2))).pow(3);
        assert_eq!(g.translate(&v), expect);
    }

    #[test]
    fn theta_pair_is_weighted_coefficient_product() {
        let s = Shape::new(&[2]);
        let f = x(&s, 0).pow(2);
        assert_eq!(f.theta_pair(&f), int(2));
        let d = &x(&s, 0) - &x(&s, 1);
        assert_eq!(d.theta_pair(&d), int(2));
        assert_eq!(d.theta_apply(&(&x(&s, 0) * &x(&s, 1))), &x(&s, 1) - &x(&s, 0));
    }

    #[test]
    fn exact_division() {
        let s = Shape::new(&[2]);
        let root = LinearForm::root(2, 0, 1);
        let f = &x(&s, 0).pow(2) - &x(&s, 1).pow(2);
        assert_eq!(f.exact_divide(&root).unwrap(), &x(&s, 0) + &x(&s, 1));
        assert!(x(&s, 0).exact_divide(&root).is_none());
        let mut aff = LinearForm::root(2, 0, 1);
        aff.set_constant(frac(1, 2));
        let g = &f * &aff.to_polynomial(&s);
        assert_eq!(g.exact_divide(&aff).unwrap(), f);
    }

    #[test]
    fn monomials_of_degree() {
        let ms = Monomial::of_degree(3, &[0, 1, 2], 2);
        assert_eq!(ms.len(), 6);
        assert!(ms.windows(2).all(|w| w[0] > w[1]));
        assert_eq!(Monomial::of_degree(3, &[1], 0).len(), 1);
    }

    #[test]
    fn elementary() {
        let s = Shape::new(&[3]);
        let e2 = elementary_symmetric(&s, &[0, 1, 2], 2);
        assert_eq!(e2.len(), 3);
        assert_eq!(elementary_symmetric(&s, &[0, 1, 2], 3), &(&x(&s, 0) * &x(&s, 1)) * &x(&s, 2));
    }
}
