//! Triangular operator systems
//!
//!   sum_{i=1}^{N} A_i(x) D^i P_n^{(alpha,beta)}(x) = F_n(x),   n = 1..N,
//!
//! solved in closed form by the Jacobi inversion formula:
//!
//!   A_i(x) = 2^i sum_{j=1}^{i} [(alpha+beta+2j+1) / ((alpha+beta+j+1)_{i+1})]
//!                * P_{i-j}^{(-alpha-i-1,-beta-i-1)}(x) * F_j(x).
//!
//! The system is triangular because D^i P_n vanishes for i > n, so A_n
//! enters the n-th equation through the scalar diagonal (n+alpha+beta+1)_n / 2^n.
//! A forward-elimination solver over that matrix is kept as an independent
//! oracle, and `residual_check` certifies any proposed solution by direct
//! back-substitution.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::families::jacobi;
use crate::poly::Poly;
use crate::rational::{format_rational, int, pochhammer, pochhammer_nonzero, Rational};
use crate::report::{params, CheckReport};

/// A right-hand-side sequence F_1..F_N at fixed (alpha, beta). `F[0]` is F_1.
#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct TriangularSystem {
    #[serde(with = "crate::rational::serde_str")]
    pub alpha: Rational,
    #[serde(with = "crate::rational::serde_str")]
    pub beta: Rational,
    #[serde(rename = "F")]
    pub f: Vec<Poly>,
}

impl TriangularSystem {
    pub fn len(&self) -> usize {
        self.f.len()
    }

    pub fn is_empty(&self) -> bool {
        self.f.is_empty()
    }
}

/// D^i P_n^{(alpha,beta)} = ((n+alpha+beta+1)_i / 2^i) P_{n-i}^{(alpha+i,beta+i)} for i <= n.
/// This is the matrix the solver inverts; exposed for oracles and tests.
pub fn operator_entry(n: usize, i: usize, alpha: &Rational, beta: &Rational) -> Poly {
    if i > n {
        return Poly::zero();
    }
    let factor = pochhammer(&(alpha + beta + int(n as i64 + 1)), i) / int(2).pow(i as i32);
    let shift = int(i as i64);
    jacobi(n - i, &(alpha + &shift), &(beta + &shift)).scale(&factor)
}

/// The closed-form solution A_1..A_N.
pub fn solve_triangular(sys: &TriangularSystem) -> Result<Vec<Poly>> {
    let s = &sys.alpha + &sys.beta + int(1);
    let mut out = Vec::with_capacity(sys.len());
    for i in 1..=sys.len() {
        let neg_alpha = -(&sys.alpha + int(i as i64 + 1));
        let neg_beta = -(&sys.beta + int(i as i64 + 1));
        let mut acc = Poly::zero();
        for j in 1..=i {
            let den = pochhammer_nonzero(&(&s + int(j as i64)), i + 1)?;
            let coeff = (&s + int(2 * j as i64)) / den;
            acc = &acc + &(&jacobi(i - j, &neg_alpha, &neg_beta) * &sys.f[j - 1]).scale(&coeff);
        }
        out.push(acc.scale(&int(2).pow(i as i32)));
    }
    Ok(out)
}

/// Forward elimination over the triangular operator matrix; the independent
/// cross-check for `solve_triangular`.
pub fn solve_by_elimination(sys: &TriangularSystem) -> Result<Vec<Poly>> {
    let mut out: Vec<Poly> = Vec::with_capacity(sys.len());
    for n in 1..=sys.len() {
        let mut rhs = sys.f[n - 1].clone();
        for (i, a) in out.iter().enumerate() {
            rhs = &rhs - &(a * &operator_entry(n, i + 1, &sys.alpha, &sys.beta));
        }
        // Diagonal: D^n P_n is the constant (n+alpha+beta+1)_n / 2^n.
        let base = &sys.alpha + &sys.beta + int(n as i64 + 1);
        let diag = pochhammer_nonzero(&base, n)? / int(2).pow(n as i32);
        out.push(rhs.scale(&(int(1) / diag)));
    }
    Ok(out)
}

/// Back-substitution certificate: one report per n with residual
/// sum_{i=1}^{n} A_i * D^i P_n - F_n.
pub fn residual_check(sys: &TriangularSystem, a: &[Poly]) -> Result<Vec<CheckReport>> {
    if a.len() < sys.len() {
        return Err(Error::arity(format!(
            "residual check needs {} coefficients, got {}",
            sys.len(),
            a.len()
        )));
    }
    let mut reports = Vec::with_capacity(sys.len());
    for n in 1..=sys.len() {
        let mut lhs = Poly::zero();
        for i in 1..=n {
            lhs = &lhs + &(&a[i - 1] * &operator_entry(n, i, &sys.alpha, &sys.beta));
        }
        reports.push(CheckReport::from_residual(
            "SolverResidual",
            params(&[
                ("n", n.to_string()),
                ("alpha", format_rational(&sys.alpha)),
                ("beta", format_rational(&sys.beta)),
            ]),
            &lhs - &sys.f[n - 1],
        ));
    }
    Ok(reports)
}

/// F_n from a known coefficient sequence; the round-trip partner of the
/// solvers in tests.
pub fn forward_apply(alpha: &Rational, beta: &Rational, a: &[Poly]) -> Vec<Poly> {
    (1..=a.len())
        .map(|n| {
            let mut acc = Poly::zero();
            for i in 1..=n {
                acc = &acc + &(&a[i - 1] * &operator_entry(n, i, alpha, beta));
            }
            acc
        })
        .collect()
}
