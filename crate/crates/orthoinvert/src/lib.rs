//! Exact construction and mechanical verification of classical orthogonal
//! polynomial identities, built on arbitrary-precision rational arithmetic.
//!
//! The crate provides four layers:
//!
//! * construction of Jacobi, Laguerre, Charlier and generalized
//!   ultraspherical polynomials with exact rational coefficients
//!   ([`families`]), plus independent alternative constructions used as
//!   oracles;
//! * a catalog of summation, expansion and inversion identities, each
//!   checked by computing an exact residual at concrete rational parameters
//!   ([`identities`], [`hypersum`], [`inversion`]);
//! * a solver for triangular operator systems built from derivatives of
//!   Jacobi polynomials, together with residual certificates
//!   ([`solver`]);
//! * synthesis and verification of the coefficients of the infinite-order
//!   differential equation satisfied by symmetric generalized
//!   ultraspherical polynomials ([`ultrade`]).
//!
//! Nothing here is numerical: every check either passes with residual zero,
//! fails with an exact nonzero witness, or reports a parameter point where a
//! denominator vanishes. Identity tags like `Eq31` name entries in the
//! crate's own catalog and appear verbatim in reports and on the command
//! line.

pub mod error;
pub mod families;
pub mod hypersum;
pub mod identities;
pub mod inversion;
pub mod poly;
pub mod rational;
pub mod report;
pub mod solver;
pub mod ultrade;

pub use error::{Error, Result};
pub use poly::Poly;
pub use rational::Rational;
pub use report::{CheckReport, CheckStatus};
