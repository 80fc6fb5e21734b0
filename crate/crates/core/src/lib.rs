//! Exact construction of generalized Hermite polynomials, their Mellin
//! transforms, and zero-free-of-floats certification that every zero of the
//! transform's polynomial factor lies on the critical line Re s = 1/2.
//!
//! The crate is split into two strictly separated halves:
//!
//! * an exact half (`scalar`, `poly`, `series`, `roots`, `orthopoly`,
//!   `mellin`, `critline`) that works only with arbitrary-precision rational
//!   and Gaussian-rational arithmetic, and
//! * a floating half (`oracle`) providing independent multiprecision
//!   cross-checks (direct quadrature of the defining integral, convergent
//!   series limits). Nothing in the exact half depends on `oracle`.
//!
//! Certification is by Sturm theory: the factor is mapped onto the line
//! `s = 1/2 + it`, the surviving real polynomial `g(t)` is proved squarefree
//! with exactly `deg g` real roots, and the roots are isolated into disjoint
//! rational intervals.

pub mod critline;
pub mod error;
pub mod mellin;
pub(crate) mod multipoly;
pub mod oracle;
pub mod orthopoly;
pub mod poly;
pub mod report;
pub mod roots;
pub mod scalar;
pub mod series;
pub mod suites;

pub use error::{Error, Result};
pub use poly::DensePoly;
pub use roots::RootInterval;
pub use scalar::{GaussRat, Rat};
