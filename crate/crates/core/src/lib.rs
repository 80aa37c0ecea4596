//! Sharp constants, explicit optimizers, and dual optimizers of the
//! generalized three-lines problem on the unit strip, together with the
//! kernel and special-function machinery they rest on and a verification
//! suite that checks every computable identity at machine precision.
//!
//! Modules:
//! - [`domain`]: exponents (stored as reciprocals), strip geometry, tolerances
//! - [`special`]: complex dilogarithm and Clausen function with identity suite
//! - [`quad`]: adaptive line quadrature, Lp norms, supremum scans
//! - [`kernels`]: Poisson kernel (real/meromorphic/Fourier), harmonic
//!   conjugate kernel, Blaschke factor
//! - [`three_lines`]: optimal values by closed-form and quadrature routes,
//!   duality and log-linearity
//! - [`optimizer`]: the explicit optimizer h = e^phi and the dual
//!   meromorphic optimizer m, with the Euler-Lagrange, product-formula,
//!   and duality-gap certificates
//! - [`lieb_thirring`]: CLR/LT bound ratios and small-alpha asymptotics
//! - [`verify`]: the composed invariant suite behind `verify`

pub mod domain;
pub mod error;
pub mod kernels;
pub mod lieb_thirring;
pub mod optimizer;
pub mod quad;
pub mod special;
pub mod three_lines;
pub mod verify;

pub use domain::{conjugate, interpolate_exponent, Alpha, Exponent, StripPoint, Tolerance};
pub use error::{Error, Result};
pub use three_lines::{duality_target, log_h, log_i, OptimalValue, Route};
