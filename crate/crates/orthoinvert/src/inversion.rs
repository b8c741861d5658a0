//! Inversion and product formulas for the Charlier, Laguerre, and Jacobi
//! families, each verified as a finite polynomial identity.
//!
//! The catalog:
//!
//!   Eq33   sum_{k=j}^{i} C_{i-k}^{(-a)}(-x) C_{k-j}^{(a)}(x) = delta_{ij}
//!   Eq30   sum_{k=0}^{i-j} L_k^{(alpha+j)}(x) L_{i-j-k}^{(-alpha-i-1)}(-x) = delta_{ij}
//!   Eq34   sum_{k=0}^{n} L_k^{(alpha+p)}(x) L_{n-k}^{(-alpha-q)}(-x) = (p-q+2)_n / n!
//!   Eq35   sum_{k=0}^{n} [(alpha+beta+2k+1)(alpha+beta+1)_k / (alpha+beta+1)_{n+k+1}]
//!              * P_k^{(alpha,beta)}(x) P_{n-k}^{(-n-alpha-1,-n-beta-1)}(y)
//!            = (1/n!) ((x-y)/2)^n
//!   Eq31   sum_{k=j}^{i} [(alpha+beta+2k+1) / ((alpha+beta+k+j+1)_{i-j+1})]
//!              * P_{i-k}^{(-alpha-i-1,-beta-i-1)}(x) P_{k-j}^{(alpha+j,beta+j)}(x) = delta_{ij}
//!   Eq37   the same sum with the first factor taken at -x equals
//!            x^{i-j} / (i-j)!
//!   Eq57   sum_{k=0}^{n} L_k^{(alpha)}(x) L_{n-k}^{(-n-alpha-1)}(-y) = (y-x)^n / n!
//!
//! Eq35 absorbs the usual Gamma prefactors into the single Pochhammer ratio
//! (alpha+beta+1)_k / (alpha+beta+1)_{n+k+1}; parameter points where a denominator
//! Pochhammer vanishes are reported as `ZeroDenominator` errors and are
//! never papered over by continuity.
//!
//! Two-variable identities (Eq35, Eq57, the Laguerre convolution) keep x
//! symbolic and bind y to a supplied rational; scanning y over more values
//! than the y-degree certifies the bivariate identity.
//!
//! Eq33 and Eq30 are the entry-wise statements that two explicit triangular
//! matrices are mutually inverse; `build_inversion_matrices` materializes
//! those matrices at a rational point and multiplies them out.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::families::{charlier, jacobi, laguerre};
use crate::poly::Poly;
use crate::rational::{
    factorial, format_rational, int, pochhammer, pochhammer_nonzero, rat, Rational,
};
use crate::report::{params, CheckReport};

fn delta(i: usize, j: usize) -> Poly {
    if i == j {
        Poly::one()
    } else {
        Poly::zero()
    }
}

/// Eq33: the Charlier inversion formula, as an exact polynomial identity.
pub fn charlier_inversion_check(i: usize, j: usize, a: &Rational) -> Result<CheckReport> {
    if j > i {
        return Err(Error::arity("charlier inversion requires j <= i"));
    }
    let neg_a = -a;
    let mut sum = Poly::zero();
    for k in j..=i {
        sum = &sum + &(&charlier(i - k, &neg_a).reflect() * &charlier(k - j, a));
    }
    let residual = &sum - &delta(i, j);
    Ok(CheckReport::from_residual(
        "Eq33",
        params(&[
            ("i", i.to_string()),
            ("j", j.to_string()),
            ("a", format_rational(a)),
        ]),
        residual,
    ))
}

/// Eq30: the Laguerre inversion formula with the column-shifted parameters.
pub fn laguerre_inversion_check(i: usize, j: usize, alpha: &Rational) -> Result<CheckReport> {
    if j > i {
        return Err(Error::arity("laguerre inversion requires j <= i"));
    }
    let row_param = -(alpha + int(i as i64 + 1));
    let col_param = alpha + int(j as i64);
    let mut sum = Poly::zero();
    for k in 0..=(i - j) {
        sum = &sum + &(&laguerre(k, &col_param) * &laguerre(i - j - k, &row_param).reflect());
    }
    let residual = &sum - &delta(i, j);
    Ok(CheckReport::from_residual(
        "Eq30",
        params(&[
            ("i", i.to_string()),
            ("j", j.to_string()),
            ("alpha", format_rational(alpha)),
        ]),
        residual,
    ))
}

/// Eq34: the two-parameter Laguerre sum. The sum collapses to the constant
/// (p-q+2)_n / n!, which vanishes exactly on the inversion window.
pub fn gen_laguerre_sum(n: usize, alpha: &Rational, p: &Rational, q: &Rational) -> CheckReport {
    let up = alpha + p;
    let down = -(alpha + q);
    let mut sum = Poly::zero();
    for k in 0..=n {
        sum = &sum + &(&laguerre(k, &up) * &laguerre(n - k, &down).reflect());
    }
    let rhs = pochhammer(&(p - q + int(2)), n) / factorial(n);
    let residual = &sum - &Poly::constant(rhs.clone());
    let mut report = CheckReport::from_residual(
        "Eq34",
        params(&[
            ("n", n.to_string()),
            ("alpha", format_rational(alpha)),
            ("p", format_rational(p)),
            ("q", format_rational(q)),
        ]),
        residual,
    );
    report.rhs = Some(format_rational(&rhs));
    report
}

/// Whether (p, q) makes Eq34 an inversion formula at degree n, i.e. whether
/// the constant (p-q+2)_n vanishes. Equivalent to p-q in {-n-1, ..., -2}.
pub fn gen_laguerre_is_inversion_point(n: usize, p: &Rational, q: &Rational) -> bool {
    use num_traits::Zero;
    pochhammer(&(p - q + int(2)), n).is_zero()
}

/// Eq35: the Jacobi product formula with y bound to a rational point,
/// normalized so every prefactor is the Pochhammer ratio
/// (alpha+beta+1)_k / (alpha+beta+1)_{n+k+1}.
pub fn jacobi_product_formula(
    n: usize,
    alpha: &Rational,
    beta: &Rational,
    y0: &Rational,
) -> Result<CheckReport> {
    let s = alpha + beta + int(1);
    let neg_alpha = -(alpha + int(n as i64 + 1));
    let neg_beta = -(beta + int(n as i64 + 1));
    let mut sum = Poly::zero();
    for k in 0..=n {
        let den = pochhammer_nonzero(&s, n + k + 1)?;
        let coeff = (&s + int(2 * k as i64)) * pochhammer(&s, k) / den;
        let weight = jacobi(n - k, &neg_alpha, &neg_beta).evaluate(y0) * coeff;
        sum = &sum + &jacobi(k, alpha, beta).scale(&weight);
    }
    let base = Poly::from_coeffs(vec![-y0 / int(2), rat(1, 2)]);
    let rhs = base.pow(n).scale(&(int(1) / factorial(n)));
    Ok(CheckReport::from_residual(
        "Eq35",
        params(&[
            ("n", n.to_string()),
            ("alpha", format_rational(alpha)),
            ("beta", format_rational(beta)),
            ("y0", format_rational(y0)),
        ]),
        &sum - &rhs,
    ))
}

/// Eq36: the y = x diagonal of Eq35, which collapses to delta_{n0}. Both
/// factors are bound to the same rational point, so the check is scalar.
pub fn jacobi_product_diagonal(
    n: usize,
    alpha: &Rational,
    beta: &Rational,
    x0: &Rational,
) -> Result<CheckReport> {
    let s = alpha + beta + int(1);
    let neg_alpha = -(alpha + int(n as i64 + 1));
    let neg_beta = -(beta + int(n as i64 + 1));
    let mut sum = int(0);
    for k in 0..=n {
        let den = pochhammer_nonzero(&s, n + k + 1)?;
        let coeff = (&s + int(2 * k as i64)) * pochhammer(&s, k) / den;
        sum += jacobi(n - k, &neg_alpha, &neg_beta).evaluate(x0)
            * jacobi(k, alpha, beta).evaluate(x0)
            * coeff;
    }
    let rhs = if n == 0 { int(1) } else { int(0) };
    let mut report = CheckReport::from_residual(
        "Eq36",
        params(&[
            ("n", n.to_string()),
            ("alpha", format_rational(alpha)),
            ("beta", format_rational(beta)),
            ("x0", format_rational(x0)),
        ]),
        Poly::constant(&sum - &rhs),
    );
    report.lhs = Some(format_rational(&sum));
    report.rhs = Some(format_rational(&rhs));
    Ok(report)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum JacobiInversionVariant {
    /// Eq31: the sum collapses to delta_{ij}.
    Delta31,
    /// Eq37: first factor at -x, the sum collapses to x^{i-j}/(i-j)!.
    Monomial37,
}

/// Eq31 / Eq37: the Jacobi inversion formula and its monomial companion.
/// The ultraspherical forms Eq46 / Eq49 are the beta = alpha instances.
pub fn jacobi_inversion_check(
    i: usize,
    j: usize,
    alpha: &Rational,
    beta: &Rational,
    variant: JacobiInversionVariant,
) -> Result<CheckReport> {
    if j > i {
        return Err(Error::arity("jacobi inversion requires j <= i"));
    }
    let s = alpha + beta + int(1);
    let neg_alpha = -(alpha + int(i as i64 + 1));
    let neg_beta = -(beta + int(i as i64 + 1));
    let col_alpha = alpha + int(j as i64);
    let col_beta = beta + int(j as i64);
    let mut sum = Poly::zero();
    for k in j..=i {
        let den = pochhammer_nonzero(&(&s + int((k + j) as i64)), i - j + 1)?;
        let coeff = (&s + int(2 * k as i64)) / den;
        let mut outer = jacobi(i - k, &neg_alpha, &neg_beta);
        if variant == JacobiInversionVariant::Monomial37 {
            outer = outer.reflect();
        }
        sum = &sum + &(&outer * &jacobi(k - j, &col_alpha, &col_beta)).scale(&coeff);
    }
    let rhs = match variant {
        JacobiInversionVariant::Delta31 => delta(i, j),
        JacobiInversionVariant::Monomial37 => {
            Poly::x().pow(i - j).scale(&(int(1) / factorial(i - j)))
        }
    };
    let tag = match variant {
        JacobiInversionVariant::Delta31 => "Eq31",
        JacobiInversionVariant::Monomial37 => "Eq37",
    };
    Ok(CheckReport::from_residual(
        tag,
        params(&[
            ("i", i.to_string()),
            ("j", j.to_string()),
            ("alpha", format_rational(alpha)),
            ("beta", format_rational(beta)),
        ]),
        &sum - &rhs,
    ))
}

#[derive(Clone, PartialEq, Debug)]
pub enum InversionMatrixKind {
    Charlier { a: Rational },
    Laguerre { alpha: Rational },
}

/// A mutually inverse pair of lower-triangular matrices, entries evaluated
/// at a rational point and kept as constant polynomials.
#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct InversionMatrixPair {
    pub size: usize,
    #[serde(rename = "T")]
    pub t: Vec<Vec<Poly>>,
    #[serde(rename = "U")]
    pub u: Vec<Vec<Poly>>,
}

impl InversionMatrixPair {
    pub fn product(&self) -> Vec<Vec<Poly>> {
        let n = self.size;
        self.u
            .iter()
            .map(|row| {
                (0..n)
                    .map(|j| {
                        row.iter()
                            .zip(&self.t)
                            .fold(Poly::zero(), |acc, (entry, t_row)| {
                                &acc + &(entry * &t_row[j])
                            })
                    })
                    .collect()
            })
            .collect()
    }

    /// U*T = I, exactly.
    pub fn is_inverse_pair(&self) -> bool {
        let prod = self.product();
        (0..self.size).all(|i| (0..self.size).all(|j| prod[i][j] == delta(i, j)))
    }
}

/// The matrix reading of Eq33 / Eq30: T holds the family itself, U the
/// parameter-negated reflected family, both evaluated at x0.
pub fn build_inversion_matrices(
    kind: &InversionMatrixKind,
    n_max: usize,
    x0: &Rational,
) -> InversionMatrixPair {
    let size = n_max + 1;
    let mut t = vec![vec![Poly::zero(); size]; size];
    let mut u = vec![vec![Poly::zero(); size]; size];
    for i in 0..size {
        for j in 0..=i {
            let (tv, uv) = match kind {
                InversionMatrixKind::Charlier { a } => (
                    charlier(i - j, a).evaluate(x0),
                    charlier(i - j, &-a).evaluate(&-x0),
                ),
                InversionMatrixKind::Laguerre { alpha } => (
                    laguerre(i - j, &(alpha + int(j as i64))).evaluate(x0),
                    laguerre(i - j, &-(alpha + int(i as i64 + 1))).evaluate(&-x0),
                ),
            };
            t[i][j] = Poly::constant(tv);
            u[i][j] = Poly::constant(uv);
        }
    }
    InversionMatrixPair { size, t, u }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum LaguerreConvolutionVariant {
    /// sum_k L_k^{(alpha)}(x) L_{n-k}^{(beta)}(y) = L_n^{(alpha+beta+1)}(x+y).
    General,
    /// Eq57: beta = -n-alpha-1 and y negated, so the right side is (y-x)^n/n!.
    Eq57,
}

/// The Laguerre convolution formula with y bound to a rational point.
pub fn laguerre_convolution_check(
    n: usize,
    alpha: &Rational,
    beta: &Rational,
    y0: &Rational,
    variant: LaguerreConvolutionVariant,
) -> CheckReport {
    let (second_param, second_arg, rhs, tag) = match variant {
        LaguerreConvolutionVariant::General => (
            beta.clone(),
            y0.clone(),
            laguerre(n, &(alpha + beta + int(1))).shift(y0),
            "LaguerreConvolution",
        ),
        LaguerreConvolutionVariant::Eq57 => (
            -(alpha + int(n as i64 + 1)),
            -y0,
            Poly::from_coeffs(vec![y0.clone(), int(-1)])
                .pow(n)
                .scale(&(int(1) / factorial(n))),
            "Eq57",
        ),
    };
    let mut sum = Poly::zero();
    for k in 0..=n {
        let scalar = laguerre(n - k, &second_param).evaluate(&second_arg);
        sum = &sum + &laguerre(k, alpha).scale(&scalar);
    }
    let mut pairs = vec![
        ("n", n.to_string()),
        ("alpha", format_rational(alpha)),
        ("y0", format_rational(y0)),
    ];
    if variant == LaguerreConvolutionVariant::General {
        pairs.push(("beta", format_rational(beta)));
    }
    CheckReport::from_residual(tag, params(&pairs), &sum - &rhs)
}
