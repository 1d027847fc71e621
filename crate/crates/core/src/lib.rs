//! Computational checks for Cartan-type identities of curvature-adapted
//! isoparametric hypersurfaces in symmetric spaces.
//!
//! A hypersurface is represented at a single point by its simultaneous
//! eigenblocks `(lambda, mu, mult)` of the shape operator `A` and the normal
//! Jacobi operator `R(v)`. From that block model the crate enumerates real
//! and complex focal radii, evaluates the Cartan sums at every radius, and
//! checks the structural statements about principal-curvature counts and
//! totally geodesic focal sets. The [`rootsys`] module carries the restricted
//! root systems of the irreducible non-compact symmetric spaces and produces
//! the `m_{G/K}` census.
//!
//! The crate is `no_std` and only needs `alloc`; file formats and the command
//! line live in the companion `isocartan` crate.
#![no_std]

extern crate alloc;

pub mod cartan;
pub mod cmath;
mod error;
pub mod fixtures;
pub mod focal;
pub mod model;
pub mod rootsys;
pub mod scan;

pub use error::{Error, Result};
pub use num_complex::Complex64;
pub use num_rational::Ratio;

/// Exact rational scalar used for root pairings.
pub type Rational = Ratio<i128>;
