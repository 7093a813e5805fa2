//! Spectral covers of commuting matrix tuples.
//!
//! A Higgs field over a base chart is modelled pointwise as a tuple of
//! pairwise-commuting `n × n` complex matrices `Φ_1, …, Φ_d`. This crate
//! computes the joint spectrum of such a tuple (the fiber of the spectral
//! cover), the pencil hypersurface `det(ξ⁰·I + Σ ξʲ·Φ_j) = 0` in `P^d`, and
//! checks that the Gauss map of that hypersurface lands exactly on the
//! spectral points `[1 : w₁ : … : w_d]`.
//!
//! Module map:
//!
//! * [`matkernel`]: dense complex matrices, LU, Schur decomposition.
//! * [`poly`]: sparse homogeneous polynomials, univariate roots,
//!   discriminants and interpolation from evaluations.
//! * [`higgs`]: commuting tuples, joint spectra, pencil determinants and
//!   characteristic invariants.
//! * [`duality`]: hyperplanes, the Gauss map, hypersurface sampling and the
//!   dual-cover verification.
//! * [`cover`]: polynomial families over a base chart, grid sweeps and
//!   ramification detection.

pub mod cover;
pub mod duality;
pub mod higgs;
pub mod matkernel;
pub mod poly;
pub mod seed;

pub use num_complex::Complex64;

/// Shorthand used throughout the crate.
pub type C64 = Complex64;
