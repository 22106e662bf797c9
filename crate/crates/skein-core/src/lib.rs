//! Exact computation of two-variable skein-type knot polynomials and the
//! degree bounds derived from them.
//!
//! The crate is organized around a small set of building blocks:
//!
//! * [`poly`] — sparse bivariate Laurent polynomials over arbitrary-precision
//!   integers, with the degree/span/coefficient extractors and exact division
//!   the invariant formulas need.
//! * [`diagram`] — oriented link diagrams, the PD/DT/Gauss/braid code
//!   parsers, the Seifert algorithm, and parametric diagram families.
//! * [`homfly`] — the skein polynomial `P` in `(l, m)`.
//! * [`kauffman`] — the two-variable Kauffman polynomial `F` in `(a, z)`.
//! * [`bounds`] — braid-index, genus and Legendrian bounds, twist-box
//!   extension, and the coefficient-boundedness experiment.

pub mod bounds;
pub mod diagram;
mod engine;
pub mod homfly;
pub mod kauffman;
pub mod poly;

pub use bounds::BoundsReport;
pub use diagram::{Diagram, SeifertData};
pub use engine::{SkeinCache, SkeinError, SkeinOptions, DEFAULT_NODE_BUDGET};
pub use poly::Laurent2;
