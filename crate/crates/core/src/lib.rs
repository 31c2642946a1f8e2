//! Exact q-binomial (Gaussian) coefficients for every pair of integer
//! arguments, represented as Laurent polynomials in `q`, together with a
//! checker for the classical transformation and summation identities.
//!
//! ```
//! use qbinom_core::qbinom;
//!
//! let p = qbinom(-3, -5).unwrap();
//! assert_eq!(p.to_string(), "q^-7 + q^-6 + 2*q^-5 + q^-4 + q^-3");
//! ```

pub mod cli;
pub mod error;
pub mod identities;
pub mod laurent;
pub mod qbinom;
pub mod qseries;

pub use error::{Error, Result};
pub use identities::{
    run_grid, BinomialSource, Checker, GridSpec, Identity, IdentityReport, ParamRange, XSeries,
};
pub use laurent::{LaurentPoly, Rational};
pub use qbinom::{qbinom, qbinom_oracle, reciprocal, trans1, trans2, QBinomArgs, Transform};
pub use qseries::{pochhammer, pochhammer_reversed, tri, QMonomial};
