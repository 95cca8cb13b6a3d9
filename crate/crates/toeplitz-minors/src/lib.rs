//! Exact and numeric computation of the limiting ratio of Toeplitz minor
//! determinants to the plain Toeplitz determinant, for a symbol with
//! given log-Fourier coefficients and a pair of partitions shifting the
//! rows and columns.
//!
//! The same limit is computed three independent ways:
//!
//! - **bd**: a double class sum over two symmetric groups with character
//!   weights and per-cycle-length Laguerre-type factors, assembled as an
//!   exact polynomial in the power-sum variables.
//! - **tw**: the determinant of a finite matrix of half-strip inner
//!   products of complete homogeneous functions, in the same ring.
//! - **numeric**: plain floating-point determinants of the finite minor
//!   matrices, via LU factorization in log scale.
//!
//! The first two agree as polynomials. That identity, its two
//! derivative refinements under the cross differential operator, and the
//! supporting classical facts (Jacobi-Trudi, Cauchy, the Giambelli-type
//! minor relations) are verified exactly by the test suite; the numeric
//! channel then confirms the common value against actual determinants.
//!
//! Entry points: [`bd::bd_poly`], [`tw::tw_poly`], [`symfunc::delta`],
//! [`numeric::cross_check`]. Each major capability also has a runnable
//! example under `examples/`, and the `toeplitz-minors` binary exposes
//! everything as subcommands.

pub mod bd;
pub mod character;
pub mod cli;
mod error;
pub mod numeric;
pub mod partition;
pub mod symfunc;
pub mod tw;

pub use bd::{bd_poly, f_factor, laguerre, CycleCounts};
pub use character::{character, CharacterCache};
pub use error::Error;
pub use numeric::{
    cross_check, d_coeffs, h_coeffs, minor_matrix, ratio_sequence, CrossCheckReport, FourierData,
};
pub use partition::{partitions_of, Partition};
pub use symfunc::{
    complete_h, delta, inner_product, jacobi_trudi, perp, schur, skew_schur, Monomial, SymPoly,
    SymbolSpec,
};
pub use tw::{default_dim, tw_entry, tw_poly, tw_poly_auto, tw_relation_check, TwMatrix};
