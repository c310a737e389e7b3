//! Gröbner bases, syzygies, presentations, Tor and Ext over bijective skew
//! PBW extensions of ℚ.

pub mod algebra;
pub mod applications;
pub mod cli;
pub mod division;
pub mod error;
pub mod groebner;
pub mod homological;
pub mod matrix;
pub mod order;
pub mod poly;
pub mod render;
pub mod session;
pub mod syzygy;

pub use algebra::{Algebra, AlgebraBuilder, Side};
pub use error::{Error, Result};
pub use matrix::{kron, Matrix, Vector};
pub use poly::{Monomial, Poly, Rational, Term};
