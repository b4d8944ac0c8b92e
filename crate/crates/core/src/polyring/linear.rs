use std::fmt;

use num_traits::{One, Zero};

use super::poly::{Monomial, Polynomial};
use super::shape::{Perm, Point, Shape};
use crate::rational::{self, Rational};

/// Affine linear form Σ c_a x_a + c. Roots are the forms x_a − x_b with
/// zero constant; translated roots acquire a constant.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct LinearForm {
    coeffs: Vec<Rational>,
    constant: Rational,
}

impl LinearForm {
    pub fn new(coeffs: Vec<Rational>, constant: Rational) -> Self {
        LinearForm { coeffs, constant }
    }

    /// x_a − x_b over `n` variables.
    pub fn root(n: usize, a: usize, b: usize) -> Self {
        assert_ne!(a, b, "a root needs two distinct variables");
        let mut coeffs = vec![Rational::zero(); n];
        coeffs[a] = Rational::one();
        coeffs[b] = -Rational::one();
        LinearForm { coeffs, constant: Rational::zero() }
    }

    pub fn variable(n: usize, a: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); n];
        coeffs[a] = Rational::one();
        LinearForm { coeffs, constant: Rational::zero() }
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, a: usize) -> &Rational {
        &self.coeffs[a]
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn constant(&self) -> &Rational {
        &self.constant
    }

    pub fn set_constant(&mut self, c: Rational) {
        self.constant = c;
    }

    /// First variable with nonzero coefficient.
    pub fn leading_index(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn eval(&self, v: &Point) -> Rational {
        let mut t = self.constant.clone();
        for (a, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                t += c * v.coord(a);
            }
        }
        t
    }

    /// Evaluates the linear part only, as a root acts on a vector.
    pub fn eval_linear(&self, v: &[Rational]) -> Rational {
        self.coeffs.iter().zip(v).filter(|(c, _)| !c.is_zero()).map(|(c, x)| c * x).sum()
    }

    pub fn permute(&self, p: &Perm) -> LinearForm {
        let mut coeffs = vec![Rational::zero(); self.coeffs.len()];
        for (a, c) in self.coeffs.iter().enumerate() {
            coeffs[p.apply(a)] = c.clone();
        }
        LinearForm { coeffs, constant: self.constant.clone() }
    }

    /// l(x + v).
    pub fn translate(&self, v: &Point) -> LinearForm {
        LinearForm { coeffs: self.coeffs.clone(), constant: self.eval(v) }
    }

    pub fn scale(&self, c: &Rational) -> LinearForm {
        LinearForm { coeffs: self.coeffs.iter().map(|a| a * c).collect(), constant: &self.constant * c }
    }

    pub fn neg(&self) -> LinearForm {
        self.scale(&-Rational::one())
    }

    /// Splits the form as `scale · monic` with the leading coefficient of
    /// `monic` equal to one. `None` for a form without linear part.
    pub fn normalized(&self) -> Option<(Rational, LinearForm)> {
        let p = self.leading_index()?;
        let lead = self.coeffs[p].clone();
        Some((lead.clone(), self.scale(&(Rational::one() / lead))))
    }

    pub fn to_polynomial(&self, shape: &Shape) -> Polynomial {
        let n = shape.nvars();
        assert_eq!(n, self.coeffs.len(), "linear form length differs from shape");
        let mut terms: Vec<(Monomial, Rational)> =
            self.coeffs.iter().enumerate().map(|(a, c)| (Monomial::var(n, a), c.clone())).collect();
        terms.push((Monomial::one(n), self.constant.clone()));
        Polynomial::from_terms(shape, terms)
    }

    pub fn display<'a>(&'a self, shape: &'a Shape) -> impl fmt::Display + 'a {
        DisplayForm { form: self, shape }
    }
}

struct DisplayForm<'a> {
    form: &'a LinearForm,
    shape: &'a Shape,
}

impl fmt::Display for DisplayForm<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.form.to_polynomial(self.shape))
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (a, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                parts.push(format!("{}*x{}", rational::to_string(c), a));
            }
        }
        if !self.constant.is_zero() || parts.is_empty() {
            parts.push(rational::to_string(&self.constant));
        }
        write!(f, "{}", parts.join(" + "))
    }
}
