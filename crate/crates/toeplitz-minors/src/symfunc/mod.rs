//! Exact symmetric-function layer: the sparse polynomial ring in the
//! power-sum variables of two alphabets, its inner product and
//! differential operators, and the classical bases built on top.

mod bases;
mod det;
mod poly;

pub use bases::{complete_h, jacobi_trudi, schur, skew_schur};
pub use det::determinant;
pub use poly::{delta, inner_product, perp, Monomial, SymPoly, SymbolSpec};
