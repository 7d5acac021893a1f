//! Exact computation with quasi-modular forms for `SL2(Z)`, `Γ0(2)` and `Γ0(3)`.
//!
//! Every object is a truncated q-series with exact rational coefficients.
//! On top of that sit named forms, Ramanujan-type systems as polynomial
//! vector fields, Rankin–Cohen brackets and Serre derivatives, tau
//! functions with congruence scans, and dimension and Sturm-bound tools.
//!
//! ```
//! use quasimodular::forms::{catalog, FormName};
//!
//! let delta = catalog(FormName::Delta, 4).unwrap().series;
//! assert_eq!(delta.to_string(), "q - 24q^2 + 252q^3 + O(q^4)");
//! ```

pub mod arith;
pub mod calculus;
pub mod error;
pub mod forms;
pub mod kernel;
pub mod modspace;
pub mod qseries;
pub mod symalg;
pub mod tau;
pub mod verify;

pub use error::{Error, Result};
pub use qseries::{int, rat, QSeries, Rat, Sign};
