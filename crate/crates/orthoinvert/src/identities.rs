//! Mechanical checks of the structural identities of the families.
//!
//! Each checker builds both sides of an identity as exact polynomials,
//! subtracts, and reports pass/fail through a `CheckReport`; the residual
//! polynomial is the failure witness. Identity tags (`Eq5`, `Eq17`, ...)
//! are the catalog ids used on the wire and by the command-line runner.
//!
//! The catalog:
//!
//!   Eq5    d^i/dx^i L_n^{(alpha)} = (-1)^i L_{n-i}^{(alpha+i)}
//!   Eq6    x y'' + (alpha+1-x) y' + n y = 0 for y = L_n^{(alpha)}
//!   Eq7    x^n/n! = sum_k (-1)^k C(n+alpha, n-k) L_k^{(alpha)}
//!   Eq11   d^i/dx^i P_n^{(alpha,beta)} = ((n+alpha+beta+1)_i / 2^i) P_{n-i}^{(alpha+i,beta+i)}
//!   Eq12   P_n^{(alpha,beta)}(-x) = (-1)^n P_n^{(beta,alpha)}(x)
//!   Eq13   (1-x^2) y'' + [beta-alpha-(alpha+beta+2)x] y' + n(n+alpha+beta+1) y = 0 for y = P_n^{(alpha,beta)}
//!   Eq14   ((1-x)/2)^n expanded in P_k^{(alpha,beta)}, valid for alpha+beta+1 > 0
//!   Eq15   the same expansion in ratio form, valid wherever no denominator
//!          Pochhammer symbol vanishes
//!   Eq17   (x-1) DP_n^{(alpha,beta)} = n P_n^{(alpha,beta)} - (n+alpha) P_{n-1}^{(alpha,beta+1)}
//!   Eq18   (x+1) DP_n^{(alpha,beta)} = n P_n^{(alpha,beta)} + (n+beta) P_{n-1}^{(alpha+1,beta)}
//!   Eq19   P_n^{(alpha+1,beta)} - P_n^{(alpha,beta+1)} = P_{n-1}^{(alpha+1,beta+1)}
//!   Eq20   2x DP_n^{(alpha,alpha)} = 2n P_n^{(alpha,alpha)} + (n+alpha) P_{n-2}^{(alpha+1,alpha+1)}
//!   Eq21   (n+2alpha+1)(n+2alpha+2) P_n^{(alpha+1,alpha+1)} - (n+alpha)(n+alpha+1) P_{n-2}^{(alpha+1,alpha+1)}
//!            = 2(n+alpha+1)(2n+2alpha+1) P_n^{(alpha,alpha)}
//!   Eq22   (alpha+1) P_n^{(alpha+1,alpha+1)} - (n+alpha+1) P_n^{(alpha,alpha)}
//!            = (1/4)(n+alpha+1)(1-x^2) P_{n-2}^{(alpha+2,alpha+2)}
//!   Eq56   L_n^{(-n)} = (-1)^n x^n / n!

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::families::{jacobi, laguerre, FamilySpec};
use crate::poly::Poly;
use crate::rational::{binom_rat, factorial, format_rational, int, pochhammer, rat, Rational};
use crate::report::{params, CheckReport};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum IdentityId {
    LaguerreDerivative,
    LaguerreOde,
    LaguerreMonomial,
    JacobiDerivative,
    JacobiSymmetry,
    JacobiOde,
    JacobiMonomial,
    JacobiMonomialRatio,
    DerivTimesXMinusOne,
    DerivTimesXPlusOne,
    ParamShiftDifference,
    UltraDerivRelation,
    UltraThreeTerm,
    UltraQuadraticSplit,
    LaguerreDegenerate,
}

impl IdentityId {
    pub fn tag(&self) -> &'static str {
        match self {
            IdentityId::LaguerreDerivative => "Eq5",
            IdentityId::LaguerreOde => "Eq6",
            IdentityId::LaguerreMonomial => "Eq7",
            IdentityId::JacobiDerivative => "Eq11",
            IdentityId::JacobiSymmetry => "Eq12",
            IdentityId::JacobiOde => "Eq13",
            IdentityId::JacobiMonomial => "Eq14",
            IdentityId::JacobiMonomialRatio => "Eq15",
            IdentityId::DerivTimesXMinusOne => "Eq17",
            IdentityId::DerivTimesXPlusOne => "Eq18",
            IdentityId::ParamShiftDifference => "Eq19",
            IdentityId::UltraDerivRelation => "Eq20",
            IdentityId::UltraThreeTerm => "Eq21",
            IdentityId::UltraQuadraticSplit => "Eq22",
            IdentityId::LaguerreDegenerate => "Eq56",
        }
    }

    pub const ALL: [IdentityId; 15] = [
        IdentityId::LaguerreDerivative,
        IdentityId::LaguerreOde,
        IdentityId::LaguerreMonomial,
        IdentityId::JacobiDerivative,
        IdentityId::JacobiSymmetry,
        IdentityId::JacobiOde,
        IdentityId::JacobiMonomial,
        IdentityId::JacobiMonomialRatio,
        IdentityId::DerivTimesXMinusOne,
        IdentityId::DerivTimesXPlusOne,
        IdentityId::ParamShiftDifference,
        IdentityId::UltraDerivRelation,
        IdentityId::UltraThreeTerm,
        IdentityId::UltraQuadraticSplit,
        IdentityId::LaguerreDegenerate,
    ];
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for IdentityId {
    type Err = Error;

    /// Case-insensitive catalog lookup, e.g. `eq17`.
    fn from_str(s: &str) -> Result<Self> {
        IdentityId::ALL
            .iter()
            .copied()
            .find(|id| id.tag().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::parse(format!("unknown identity id `{s}`")))
    }
}

/// Derivative rules Eq5 (Laguerre) and Eq11 (Jacobi): the i-th derivative of
/// the degree-n member is an explicit member with shifted parameters.
pub fn check_derivative_rule(family: &FamilySpec, n: usize, i: usize) -> Result<CheckReport> {
    if i > n {
        return Err(Error::arity(format!(
            "derivative order {i} exceeds degree {n}"
        )));
    }
    match family {
        FamilySpec::Laguerre { alpha } => {
            let lhs = laguerre(n, alpha).differentiate(i);
            let mut rhs = laguerre(n - i, &(alpha + int(i as i64)));
            if i % 2 == 1 {
                rhs = -&rhs;
            }
            let p = params(&[
                ("n", n.to_string()),
                ("i", i.to_string()),
                ("alpha", format_rational(alpha)),
            ]);
            Ok(CheckReport::from_residual("Eq5", p, &lhs - &rhs))
        }
        FamilySpec::Jacobi { alpha, beta } => {
            let lhs = jacobi(n, alpha, beta).differentiate(i);
            let scale = pochhammer(&(alpha + beta + int(n as i64 + 1)), i) / int(2).pow(i as i32);
            let rhs =
                jacobi(n - i, &(alpha + int(i as i64)), &(beta + int(i as i64))).scale(&scale);
            let p = params(&[
                ("n", n.to_string()),
                ("i", i.to_string()),
                ("alpha", format_rational(alpha)),
                ("beta", format_rational(beta)),
            ]);
            Ok(CheckReport::from_residual("Eq11", p, &lhs - &rhs))
        }
        _ => Err(Error::arity(
            "derivative rules apply to the Laguerre and Jacobi families",
        )),
    }
}

/// Second-order differential equations Eq6 (Laguerre) and Eq13 (Jacobi).
pub fn check_ode(family: &FamilySpec, n: usize) -> Result<CheckReport> {
    match family {
        FamilySpec::Laguerre { alpha } => {
            let y = laguerre(n, alpha);
            let y1 = y.differentiate(1);
            let y2 = y.differentiate(2);
            // x y'' + (alpha+1-x) y' + n y
            let residual = &(&(&Poly::x() * &y2)
                + &(&Poly::from_coeffs(vec![alpha + int(1), int(-1)]) * &y1))
                + &y.scale(&int(n as i64));
            let p = params(&[("n", n.to_string()), ("alpha", format_rational(alpha))]);
            Ok(CheckReport::from_residual("Eq6", p, residual))
        }
        FamilySpec::Jacobi { alpha, beta } => {
            let y = jacobi(n, alpha, beta);
            let y1 = y.differentiate(1);
            let y2 = y.differentiate(2);
            let one_minus_x2 = Poly::from_coeffs(vec![int(1), int(0), int(-1)]);
            let linear = Poly::from_coeffs(vec![beta - alpha, -(alpha + beta + int(2))]);
            let eig = int(n as i64) * (alpha + beta + int(n as i64 + 1));
            let residual = &(&(&one_minus_x2 * &y2) + &(&linear * &y1)) + &y.scale(&eig);
            let p = params(&[
                ("n", n.to_string()),
                ("alpha", format_rational(alpha)),
                ("beta", format_rational(beta)),
            ]);
            Ok(CheckReport::from_residual("Eq13", p, residual))
        }
        _ => Err(Error::arity(
            "differential equations apply to the Laguerre and Jacobi families",
        )),
    }
}

/// Reflection symmetry Eq12: P_n^{(alpha,beta)}(-x) = (-1)^n P_n^{(beta,alpha)}(x).
pub fn check_symmetry(n: usize, alpha: &Rational, beta: &Rational) -> CheckReport {
    let lhs = jacobi(n, alpha, beta).reflect();
    let mut rhs = jacobi(n, beta, alpha);
    if n % 2 == 1 {
        rhs = -&rhs;
    }
    let p = params(&[
        ("n", n.to_string()),
        ("alpha", format_rational(alpha)),
        ("beta", format_rational(beta)),
    ]);
    CheckReport::from_residual("Eq12", p, &lhs - &rhs)
}

/// Which basis a monomial is expanded in.
#[derive(Clone, PartialEq, Debug)]
pub enum MonomialBasis {
    /// Eq7: x^n/n! over L_k^{(alpha)}.
    Laguerre { alpha: Rational },
    /// Eq14: ((1-x)/2)^n over P_k^{(alpha,beta)}, restricted to alpha+beta+1 > 0.
    Jacobi { alpha: Rational, beta: Rational },
    /// Eq15: the same expansion with ratio coefficients, valid at every
    /// parameter point where no denominator Pochhammer symbol vanishes.
    JacobiRatio { alpha: Rational, beta: Rational },
}

/// Finite expansions of monomials in a family basis; the residual is the
/// monomial minus the combination.
pub fn check_monomial_expansion(basis: &MonomialBasis, n: usize) -> Result<CheckReport> {
    match basis {
        MonomialBasis::Laguerre { alpha } => {
            let monomial = Poly::from_coeffs(
                (0..n)
                    .map(|_| Rational::zero())
                    .chain([Rational::one() / factorial(n)])
                    .collect(),
            );
            let mut sum = Poly::zero();
            let mut sign = Rational::one();
            for k in 0..=n {
                let c = binom_rat(&(alpha + int(n as i64)), n - k) * &sign;
                sum = &sum + &laguerre(k, alpha).scale(&c);
                sign = -sign;
            }
            let p = params(&[("n", n.to_string()), ("alpha", format_rational(alpha))]);
            Ok(CheckReport::from_residual("Eq7", p, &monomial - &sum))
        }
        MonomialBasis::Jacobi { alpha, beta } => {
            let s = alpha + beta + Rational::one();
            if s <= Rational::zero() {
                return Err(Error::domain(format!(
                    "expansion requires alpha + beta + 1 > 0, got {}",
                    format_rational(&s)
                )));
            }
            let monomial = half_one_minus_x().pow(n);
            let mut sum = Poly::zero();
            for k in 0..=n {
                let den_base = alpha + beta + int(k as i64 + 1);
                let den = pochhammer(&den_base, n + 1);
                if den.is_zero() {
                    return Err(Error::ZeroDenominator {
                        base: den_base,
                        len: n + 1,
                    });
                }
                let c = pochhammer(&int(-(n as i64)), k)
                    * pochhammer(&(alpha + int(k as i64 + 1)), n - k)
                    * (alpha + beta + int(2 * k as i64 + 1))
                    / den;
                sum = &sum + &jacobi(k, alpha, beta).scale(&c);
            }
            let p = params(&[
                ("n", n.to_string()),
                ("alpha", format_rational(alpha)),
                ("beta", format_rational(beta)),
            ]);
            Ok(CheckReport::from_residual("Eq14", p, &monomial - &sum))
        }
        MonomialBasis::JacobiRatio { alpha, beta } => {
            let s = alpha + beta + Rational::one();
            let monomial = half_one_minus_x().pow(n);
            let mut sum = Poly::zero();
            for k in 0..=n {
                let den = pochhammer(&s, n + k + 1);
                if den.is_zero() {
                    return Err(Error::ZeroDenominator {
                        base: s,
                        len: n + k + 1,
                    });
                }
                let c = pochhammer(&int(-(n as i64)), k)
                    * pochhammer(&s, k)
                    * pochhammer(&(alpha + int(k as i64 + 1)), n - k)
                    * (&s + int(2 * k as i64))
                    / den;
                sum = &sum + &jacobi(k, alpha, beta).scale(&c);
            }
            let p = params(&[
                ("n", n.to_string()),
                ("alpha", format_rational(alpha)),
                ("beta", format_rational(beta)),
            ]);
            Ok(CheckReport::from_residual("Eq15", p, &monomial - &sum))
        }
    }
}

/// Eq56: the degenerate Laguerre parameter alpha = -n collapses L_n to a
/// monomial, (-1)^n x^n / n!.
pub fn check_laguerre_degenerate(n: usize) -> CheckReport {
    let lhs = laguerre(n, &int(-(n as i64)));
    let sign = if n % 2 == 1 { int(-1) } else { int(1) };
    let rhs = Poly::from_coeffs(
        (0..n)
            .map(|_| Rational::zero())
            .chain([sign / factorial(n)])
            .collect(),
    );
    CheckReport::from_residual("Eq56", params(&[("n", n.to_string())]), &lhs - &rhs)
}

/// ((1-x)/2) as a polynomial.
fn half_one_minus_x() -> Poly {
    Poly::from_coeffs(vec![rat(1, 2), rat(-1, 2)])
}

/// Contiguous recurrences Eq17-Eq19 and the ultraspherical relations
/// Eq20-Eq22. The ultraspherical ones require beta = alpha and n >= 2.
pub fn check_recurrence(
    id: IdentityId,
    n: usize,
    alpha: &Rational,
    beta: &Rational,
) -> Result<CheckReport> {
    use IdentityId::*;
    let ultra = matches!(
        id,
        UltraDerivRelation | UltraThreeTerm | UltraQuadraticSplit
    );
    if ultra && alpha != beta {
        return Err(Error::arity(format!(
            "{} requires beta = alpha, got alpha={alpha}, beta={beta}",
            id.tag()
        )));
    }
    let min_n = if ultra { 2 } else { 1 };
    if n < min_n {
        return Err(Error::arity(format!(
            "{} requires n >= {min_n}, got n={n}",
            id.tag()
        )));
    }
    let nn = int(n as i64);
    let residual = match id {
        DerivTimesXMinusOne => {
            let pn = jacobi(n, alpha, beta);
            let lhs = &Poly::from_coeffs(vec![int(-1), int(1)]) * &pn.differentiate(1);
            let rhs =
                &pn.scale(&nn) - &jacobi(n - 1, alpha, &(beta + int(1))).scale(&(&nn + alpha));
            &lhs - &rhs
        }
        DerivTimesXPlusOne => {
            let pn = jacobi(n, alpha, beta);
            let lhs = &Poly::from_coeffs(vec![int(1), int(1)]) * &pn.differentiate(1);
            let rhs = &pn.scale(&nn) + &jacobi(n - 1, &(alpha + int(1)), beta).scale(&(&nn + beta));
            &lhs - &rhs
        }
        ParamShiftDifference => {
            let lhs = &jacobi(n, &(alpha + int(1)), beta) - &jacobi(n, alpha, &(beta + int(1)));
            &lhs - &jacobi(n - 1, &(alpha + int(1)), &(beta + int(1)))
        }
        UltraDerivRelation => {
            let pn = jacobi(n, alpha, alpha);
            let lhs = &Poly::x().scale(&int(2)) * &pn.differentiate(1);
            let up = alpha + int(1);
            let rhs = &pn.scale(&(int(2) * &nn)) + &jacobi(n - 2, &up, &up).scale(&(&nn + alpha));
            &lhs - &rhs
        }
        UltraThreeTerm => {
            let up = alpha + int(1);
            let s = int(2) * alpha + &nn; // n + 2alpha
            let lhs = &jacobi(n, &up, &up).scale(&((&s + int(1)) * (&s + int(2))))
                - &jacobi(n - 2, &up, &up).scale(&((&nn + alpha) * (&nn + alpha + int(1))));
            let rhs = jacobi(n, alpha, alpha).scale(
                &(int(2) * (&nn + alpha + int(1)) * (int(2) * &nn + int(2) * alpha + int(1))),
            );
            &lhs - &rhs
        }
        UltraQuadraticSplit => {
            let up = alpha + int(1);
            let upp = alpha + int(2);
            let lhs = &jacobi(n, &up, &up).scale(&(alpha + int(1)))
                - &jacobi(n, alpha, alpha).scale(&(&nn + alpha + int(1)));
            let weight = Poly::from_coeffs(vec![int(1), int(0), int(-1)]);
            let rhs =
                (&weight * &jacobi(n - 2, &upp, &upp)).scale(&((&nn + alpha + int(1)) * rat(1, 4)));
            &lhs - &rhs
        }
        _ => {
            return Err(Error::arity(format!(
                "{} is not a recurrence relation",
                id.tag()
            )))
        }
    };
    let p = params(&[
        ("n", n.to_string()),
        ("alpha", format_rational(alpha)),
        ("beta", format_rational(beta)),
    ]);
    Ok(CheckReport::from_residual(id.tag(), p, residual))
}
