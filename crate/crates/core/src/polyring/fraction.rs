use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::linear::LinearForm;
use super::poly::Polynomial;
use super::shape::{Perm, Point, Shape};
use crate::error::{Error, Result};
use crate::rational::Rational;

/// A polynomial divided by a product of linear forms. The denominator is kept
/// as a sorted multiset of monic forms and no form divides the numerator, so
/// the representation is canonical.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct StructuredFraction {
    num: Polynomial,
    den: Vec<LinearForm>,
}

impl From<Polynomial> for StructuredFraction {
    fn from(p: Polynomial) -> Self {
        StructuredFraction { num: p, den: Vec::new() }
    }
}

impl StructuredFraction {
    /// Builds and reduces num / ∏ den. Fails when a factor is identically zero.
    pub fn new(num: Polynomial, den: Vec<LinearForm>) -> Result<Self> {
        let mut num = num;
        let mut forms = Vec::with_capacity(den.len());
        for l in den {
            match l.normalized() {
                Some((scale, monic)) => {
                    num = num.scale(&(Rational::one() / scale));
                    forms.push(monic);
                }
                None => {
                    if l.constant().is_zero() {
                        return Err(Error::PoleAt("zero linear form in denominator".into()));
                    }
                    num = num.scale(&(Rational::one() / l.constant()));
                }
            }
        }
        forms.sort();
        Ok(StructuredFraction { num, den: forms }.reduced())
    }

    pub fn zero(shape: &Shape) -> Self {
        Polynomial::zero(shape).into()
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.num
    }

    pub fn denominator(&self) -> &[LinearForm] {
        &self.den
    }

    pub fn shape(&self) -> &Shape {
        self.num.shape()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The polynomial, when the denominator is empty.
    pub fn as_polynomial(&self) -> Option<&Polynomial> {
        self.den.is_empty().then_some(&self.num)
    }

    /// Cancels every denominator factor that divides the numerator.
    pub fn reduced(mut self) -> Self {
        if self.num.is_zero() {
            self.den.clear();
            return self;
        }
        let mut kept = Vec::with_capacity(self.den.len());
        for l in std::mem::take(&mut self.den) {
            match self.num.divide_if_vanishing(&l) {
                Some(q) => self.num = q,
                None => kept.push(l),
            }
        }
        self.den = kept;
        self
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.shape());
        }
        StructuredFraction { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn permute(&self, p: &Perm) -> Self {
        let mut num = self.num.permute(p);
        let mut den = Vec::with_capacity(self.den.len());
        for l in &self.den {
            let (s, monic) = l.permute(p).normalized().expect("permuted form keeps its linear part");
            num = num.scale(&(Rational::one() / s));
            den.push(monic);
        }
        den.sort();
        StructuredFraction { num, den }
    }

    /// t_v(f) = f(x + v); denominator roots become affine forms.
    pub fn translate(&self, v: &Point) -> Self {
        let mut den: Vec<LinearForm> = self.den.iter().map(|l| l.translate(v)).collect();
        den.sort();
        StructuredFraction { num: self.num.translate(v), den }
    }

    pub fn eval(&self, v: &Point) -> Result<Rational> {
        let mut d = Rational::one();
        for l in &self.den {
            let x = l.eval(v);
            if x.is_zero() {
                return Err(Error::PoleAt(format!("{} at {v}", l.display(self.shape()))));
            }
            d *= x;
        }
        Ok(self.num.eval(v)? / d)
    }

    /// Multiplies every denominator factor out as a polynomial.
    pub fn denominator_polynomial(&self) -> Polynomial {
        let shape = self.shape();
        self.den.iter().fold(Polynomial::one(shape), |acc, l| &acc * &l.to_polynomial(shape))
    }

    /// Divides by one more linear form. Only the new factor can cancel,
    /// since the existing ones already do not divide the numerator.
    pub fn divide_by(&self, l: &LinearForm) -> Result<Self> {
        let Some((scale, monic)) = l.normalized() else {
            if l.constant().is_zero() {
                return Err(Error::PoleAt("zero linear form in denominator".into()));
            }
            return Ok(self.scale(&(Rational::one() / l.constant())));
        };
        let num = self.num.scale(&(Rational::one() / scale));
        if let Some(q) = num.divide_if_vanishing(&monic) {
            return Ok(StructuredFraction { num: q, den: self.den.clone() });
        }
        let mut den = self.den.clone();
        let pos = den.partition_point(|x| x < &monic);
        den.insert(pos, monic);
        Ok(StructuredFraction { num, den })
    }

    /// True when a ⋅ D_b = b ⋅ D_a, independent of representation.
    pub fn equals(&self, other: &Self) -> bool {
        &self.num * &other.denominator_polynomial() == &other.num * &self.denominator_polynomial()
    }

    fn combine(&self, other: &Self, negate: bool) -> Self {
        assert_eq!(self.shape(), other.shape(), "fraction shapes differ");
        // Least common multiple of the two sorted multisets.
        let (mut i, mut j) = (0, 0);
        let mut lcm = Vec::new();
        let mut extra_a = Vec::new();
        let mut extra_b = Vec::new();
        while i < self.den.len() || j < other.den.len() {
            let ord = match (self.den.get(i), other.den.get(j)) {
                (Some(a), Some(b)) => a.cmp(b),
                (Some(_), None) => std::cmp::Ordering::Less,
                (None, Some(_)) => std::cmp::Ordering::Greater,
                (None, None) => unreachable!(),
            };
            match ord {
                std::cmp::Ordering::Equal => {
                    lcm.push(self.den[i].clone());
                    i += 1;
                    j += 1;
                }
                std::cmp::Ordering::Less => {
                    lcm.push(self.den[i].clone());
                    extra_b.push(self.den[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    lcm.push(other.den[j].clone());
                    extra_a.push(other.den[j].clone());
                    j += 1;
                }
            }
        }
        let shape = self.shape();
        let mul_all =
            |p: &Polynomial, ls: &[LinearForm]| ls.iter().fold(p.clone(), |acc, l| &acc * &l.to_polynomial(shape));
        let a = mul_all(&self.num, &extra_a);
        let b = mul_all(&other.num, &extra_b);
        let num = if negate { &a - &b } else { &a + &b };
        StructuredFraction { num, den: lcm }.reduced()
    }
}

impl Add for &StructuredFraction {
    type Output = StructuredFraction;
    fn add(self, rhs: &StructuredFraction) -> StructuredFraction {
        self.combine(rhs, false)
    }
}

impl Sub for &StructuredFraction {
    type Output = StructuredFraction;
    fn sub(self, rhs: &StructuredFraction) -> StructuredFraction {
        self.combine(rhs, true)
    }
}

impl Mul for &StructuredFraction {
    type Output = StructuredFraction;
    fn mul(self, rhs: &StructuredFraction) -> StructuredFraction {
        let mut den = self.den.clone();
        den.extend(rhs.den.iter().cloned());
        den.sort();
        StructuredFraction { num: &self.num * &rhs.num, den }.reduced()
    }
}

impl Neg for &StructuredFraction {
    type Output = StructuredFraction;
    fn neg(self) -> StructuredFraction {
        StructuredFraction { num: -&self.num, den: self.den.clone() }
    }
}

impl fmt::Display for StructuredFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_empty() {
            return write!(f, "{}", self.num);
        }
        let parts: Vec<String> = self.den.iter().map(|l| format!("({})", l.display(self.shape()))).collect();
        write!(f, "({}) / ({})", self.num, parts.join("*"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    #[test]
    fn sum_cancels_common_factor() {
        // 1/(x1−x2) + 1/(x2−x1) = 0 and x1/(x1−x2) − x2/(x1−x2) = 1.
        let s = Shape::new(&[2]);
        let r = LinearForm::root(2, 0, 1);
        let one = Polynomial::one(&s);
        let a = StructuredFraction::new(one.clone(), vec![r.clone()]).unwrap();
        let b = StructuredFraction::new(one.clone(), vec![r.neg()]).unwrap();
        assert!((&a + &b).is_zero());
        let c = StructuredFraction::new(Polynomial::var(&s, 0), vec![r.clone()]).unwrap();
        let d = StructuredFraction::new(Polynomial::var(&s, 1), vec![r]).unwrap();
        assert_eq!(&c - &d, StructuredFraction::from(one));
    }

    #[test]
    fn pole_detection() {
        let s = Shape::new(&[2]);
        let f = StructuredFraction::new(Polynomial::var(&s, 0), vec![LinearForm::root(2, 0, 1)]).unwrap();
        let v = Point::from_ints(&s, &[3, 3]).unwrap();
        assert!(matches!(f.eval(&v), Err(Error::PoleAt(_))));
        let w = Point::from_ints(&s, &[3, 1]).unwrap();
        assert_eq!(f.eval(&w).unwrap(), crate::rational::frac(3, 2));
    }

    #[test]
    fn translation_creates_affine_factor() {
        let s = Shape::new(&[2]);
        let f = StructuredFraction::new(Polynomial::one(&s), vec![LinearForm::root(2, 0, 1)]).unwrap();
        let v = Point::from_ints(&s, &[1, 0]).unwrap();
        let g = f.translate(&v);
        assert_eq!(g.eval(&Point::zero(&s)).unwrap(), int(1));
    }
}
