//! Exact-arithmetic graded commutative algebra over `Q` and `F_p`.
//!
//! The crate is organised around a small number of layers:
//!
//! * [`ring`]: graded polynomial rings, monomial orders and polynomial
//!   arithmetic with exact coefficients;
//! * [`groebner`]: Buchberger engine, ideal operations (quotients, powers,
//!   intersections, Fitting ideals) and Hilbert series;
//! * [`resolve`]: graded free modules, syzygies, minimal free resolutions,
//!   Betti tables, regularity, depth and Ext;
//! * [`koszul`]: Koszul complexes, cycle/homology modules and the sliding
//!   depth condition checkers;
//! * [`residual`]: construction of `J = a : I` together with hypothesis and
//!   conclusion verification, and the complex-shape bookkeeping;
//! * [`en`]: the height-2 perfect-ideal pipeline: Hilbert-Burch data,
//!   mapping cones, Eagon-Northcott complexes and the associated
//!   combinatorics.
//!
//! All state is immutable after construction and every operation is a pure
//! function, so values can be shared freely across threads.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod en;
pub mod error;
pub mod field;
pub mod groebner;
pub mod hilbert;
pub mod koszul;
pub mod modgb;
pub mod monomial;
pub mod poly;
pub mod residual;
pub mod resolve;
pub mod ring;

pub use error::{Budget, Error, Result};
pub use field::{Coeff, Field};
pub use monomial::{Monomial, MonomialOrder};
pub use poly::Polynomial;
pub use ring::GradedRing;
