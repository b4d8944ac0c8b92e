//! Exact polynomial ring ℚ[x_{k,i}] over a shape μ, linear forms, and
//! fractions whose denominators are products of linear forms.

mod expr;
mod fraction;
mod linear;
mod poly;
mod shape;

pub use expr::{parse_poly, poly_from_json, poly_to_json};
pub use fraction::StructuredFraction;
pub use linear::LinearForm;
pub use poly::{elementary_symmetric, Monomial, Polynomial};
pub use shape::{Perm, Point, Shape, VarIndex};
