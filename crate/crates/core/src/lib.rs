//! Exact computer algebra for unbounded Toeplitz-like operators `T_ω` on Hardy
//! spaces, where the rational symbol ω = s/q may have poles on the unit circle.
//!
//! The library computes, in exact Gaussian-rational arithmetic wherever the
//! mathematics is exact:
//!
//! * polynomial root counts relative to the unit circle and the factorization
//!   of a polynomial by root location ([`rootloc`]);
//! * symbol transforms: reduction to coprime form, the boundary conjugate ω*,
//!   Wiener–Hopf style splitting, the Cayley correspondence with real rational
//!   functions ([`symbol`]);
//! * structural profiles of `T_ω` and its adjoint: kernel bases, domain and
//!   range descriptors, Fredholm data ([`profile`]);
//! * application of the operators to concrete rational Hardy-space elements
//!   with exact verification of the adjoint pairing, finite Toeplitz
//!   compressions, and the Szegő-kernel eigenrelation ([`apply`]);
//! * symmetry of the adjoint, deficiency indices, and selfadjoint-extension
//!   certificates ([`selfadjoint`]);
//! * Smirnov-class canonical forms by Fejér–Riesz spectral factorization
//!   ([`smirnov`]).

pub mod apply;
pub mod error;
pub mod linalg;
pub mod poly;
pub mod profile;
pub mod report;
pub mod rootloc;
pub mod scalar;
pub mod selfadjoint;
pub mod smirnov;
pub mod symbol;
pub mod verify;

mod aberth;
mod sturm;

pub use error::Error;
pub use poly::Poly;
pub use scalar::GaussianRational;
pub use symbol::RationalSymbol;

pub(crate) fn aberth_roots(p: &poly::Poly) -> Vec<num::complex::Complex64> {
    aberth::roots(&p.coeffs_c64())
}

/// Library-wide result type.
pub type Result<T> = std::result::Result<T, Error>;

/// Diagnostic helper: numeric roots of a polynomial (not part of the API).
#[doc(hidden)]
pub fn debug_roots(p: &poly::Poly) -> Vec<num::complex::Complex64> {
    aberth_roots(p)
}
