//! Construction of the polynomial families as exact coefficient vectors.
//!
//! All constructors are explicit finite sums over the scalar primitives; no
//! recurrences and no floating point anywhere.
//!
//! Jacobi polynomials use the expansion around x = 1,
//!
//!   P_n^{(alpha,beta)}(x) = sum_{k=0}^{n} (n+alpha+beta+1)_k (alpha+k+1)_{n-k} / (k! (n-k)!) * ((x-1)/2)^k,
//!
//! which is defined for every rational alpha, beta, including the negative-integer
//! parameters that the inversion formulas depend on. Two alternative
//! expansions of the same polynomial are provided as cross-check oracles.
//!
//! Laguerre polynomials:
//!
//!   L_n^{(alpha)}(x) = sum_{k=0}^{n} (-1)^k C(n+alpha, n-k) x^k / k!.
//!
//! Charlier polynomials come from the degree-n truncation of the generating
//! function product e^{-at} (1+t)^x: the coefficient of t^n is
//!
//!   C_n^{(a)}(x) = sum_{k=0}^{n} C(x, k) (-a)^{n-k} / (n-k)!,
//!
//! with C(x, k) the falling-factorial polynomial (x-k+1)_k / k!.
//!
//! Generalized ultraspherical polynomials, for alpha > -1 and mass M >= 0, are
//! the combination c0 * P_n^{(alpha,alpha)}(x) - c1 * x * d/dx P_n^{(alpha,alpha)}(x) with
//!
//!   c0 = 1 + (2Mn/(alpha+1)) C(n+2alpha+1, n) + 4M^2 C(n+2alpha+1, n-1)^2,
//!   c1 = (2M/(2alpha+1)) C(n+2alpha, n) + (2M^2/(alpha+1)) C(n+2alpha, n-1) C(n+2alpha+1, n).
//!
//! The first c1 term is computed in the cancelled form 2M (2alpha+2)_{n-1} / n!,
//! which is identical as a rational function and stays exact at alpha = -1/2.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::rational::{binom_rat, binom_rat_signed, factorial, int, pochhammer, rat, Rational};

/// A family member selector, serializable as
/// `{"kind": "Jacobi", "params": {"alpha": "1/2", "beta": "-1/3"}}`.
#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", content = "params")]
pub enum FamilySpec {
    Jacobi {
        #[serde(with = "crate::rational::serde_str")]
        alpha: Rational,
        #[serde(with = "crate::rational::serde_str")]
        beta: Rational,
    },
    Laguerre {
        #[serde(with = "crate::rational::serde_str")]
        alpha: Rational,
    },
    Charlier {
        #[serde(with = "crate::rational::serde_str")]
        a: Rational,
    },
    GenUltra {
        #[serde(with = "crate::rational::serde_str")]
        alpha: Rational,
        #[serde(rename = "M", with = "crate::rational::serde_str")]
        mass: Rational,
    },
}

impl FamilySpec {
    /// Degree-n member of the family.
    pub fn construct(&self, n: usize) -> Result<Poly> {
        match self {
            FamilySpec::Jacobi { alpha, beta } => Ok(jacobi(n, alpha, beta)),
            FamilySpec::Laguerre { alpha } => Ok(laguerre(n, alpha)),
            FamilySpec::Charlier { a } => Ok(charlier(n, a)),
            FamilySpec::GenUltra { alpha, mass } => gen_ultraspherical(n, alpha, mass),
        }
    }
}

/// ((x-1)/2) as a polynomial.
fn half_shift() -> Poly {
    Poly::from_coeffs(vec![rat(-1, 2), rat(1, 2)])
}

/// P_n^{(alpha,beta)} via the canonical expansion around x = 1.
pub fn jacobi(n: usize, alpha: &Rational, beta: &Rational) -> Poly {
    let s = alpha + beta + int(n as i64 + 1); // n+alpha+beta+1
    let u = half_shift();
    let mut upow = Poly::one();
    let mut sum = Poly::zero();
    for k in 0..=n {
        let c = pochhammer(&s, k) * pochhammer(&(alpha + int(k as i64 + 1)), n - k)
            / (factorial(k) * factorial(n - k));
        sum = &sum + &upow.scale(&c);
        upow = &upow * &u;
    }
    sum
}

/// The same polynomial from the negated-parameter expansion
/// (-1)^n sum_k (-n-k-alpha-beta)_k (-n-alpha)_{n-k} / (k!(n-k)!) ((x-1)/2)^k;
/// kept as an independent oracle for `jacobi`.
pub fn jacobi_negated_sum(n: usize, alpha: &Rational, beta: &Rational) -> Poly {
    let u = half_shift();
    let mut upow = Poly::one();
    let mut sum = Poly::zero();
    for k in 0..=n {
        let base = -(alpha + beta + int((n + k) as i64));
        let c = pochhammer(&base, k) * pochhammer(&-(alpha + int(n as i64)), n - k)
            / (factorial(k) * factorial(n - k));
        sum = &sum + &upow.scale(&c);
        upow = &upow * &u;
    }
    if n % 2 == 1 {
        -&sum
    } else {
        sum
    }
}

/// The same polynomial from the two-sided binomial expansion
/// 2^{-n} sum_k C(n+alpha, n-k) C(n+beta, k) (x-1)^k (x+1)^{n-k};
/// kept as an independent oracle for `jacobi`.
pub fn jacobi_binomial_product(n: usize, alpha: &Rational, beta: &Rational) -> Poly {
    let xm1 = Poly::from_coeffs(vec![int(-1), int(1)]);
    let xp1 = Poly::from_coeffs(vec![int(1), int(1)]);
    let mut sum = Poly::zero();
    for k in 0..=n {
        let c = binom_rat(&(alpha + int(n as i64)), n - k) * binom_rat(&(beta + int(n as i64)), k);
        let term = &xm1.pow(k) * &xp1.pow(n - k);
        sum = &sum + &term.scale(&c);
    }
    sum.scale(&rat(1, 2).pow(n as i32))
}

/// L_n^{(alpha)}.
pub fn laguerre(n: usize, alpha: &Rational) -> Poly {
    let mut coeffs = Vec::with_capacity(n + 1);
    let mut sign = Rational::one();
    for k in 0..=n {
        coeffs.push(binom_rat(&(alpha + int(n as i64)), n - k) * &sign / factorial(k));
        sign = -sign;
    }
    Poly::from_coeffs(coeffs)
}

/// C_n^{(a)}, the t^n coefficient of the truncated product e^{-at} (1+t)^x.
pub fn charlier(n: usize, a: &Rational) -> Poly {
    // Degree-n truncations of both factors: e^{-at} has t^m coefficient
    // (-a)^m/m!, and (1+t)^x has t^k coefficient C(x, k).
    let mut exp_part = Vec::with_capacity(n + 1);
    let mut pow = Rational::one();
    for m in 0..=n {
        exp_part.push(&pow / factorial(m));
        pow *= &-a.clone();
    }
    let mut binom_part = Vec::with_capacity(n + 1);
    let mut g = Poly::one();
    for k in 0..=n {
        binom_part.push(g.scale(&(Rational::one() / factorial(k))));
        // multiply the falling-factorial product by the next (x - k) factor
        g = &g * &Poly::from_coeffs(vec![int(-(k as i64)), int(1)]);
    }
    let mut sum = Poly::zero();
    for k in 0..=n {
        sum = &sum + &binom_part[k].scale(&exp_part[n - k]);
    }
    sum
}

/// Orthonormalizing constants of the generalized ultraspherical family.
/// c1 is only meaningful for n >= 1; at n = 0 the derivative term vanishes
/// and this returns c1 = 0.
fn gen_ultra_constants(n: usize, alpha: &Rational, mass: &Rational) -> (Rational, Rational) {
    let two_m = int(2) * mass;
    let ap1 = alpha + Rational::one();
    let c0 = Rational::one()
        + &two_m * int(n as i64) / &ap1 * binom_rat(&(int(n as i64 + 1) + int(2) * alpha), n)
        + int(4)
            * mass
            * mass
            * binom_rat_signed(&(int(n as i64 + 1) + int(2) * alpha), n as i64 - 1).pow(2);
    if n == 0 {
        return (c0, Rational::zero());
    }
    let c1 = &two_m * pochhammer(&(int(2) * alpha + int(2)), n - 1) / factorial(n)
        + int(2) * mass * mass / &ap1
            * binom_rat(&(int(n as i64) + int(2) * alpha), n - 1)
            * binom_rat(&(int(n as i64 + 1) + int(2) * alpha), n);
    (c0, c1)
}

/// Generalized ultraspherical polynomial for alpha > -1, M >= 0.
pub fn gen_ultraspherical(n: usize, alpha: &Rational, mass: &Rational) -> Result<Poly> {
    if alpha <= &int(-1) {
        return Err(Error::domain(format!("need alpha > -1, got {alpha}")));
    }
    if mass < &Rational::zero() {
        return Err(Error::domain(format!("need M >= 0, got {mass}")));
    }
    let p = jacobi(n, alpha, alpha);
    let (c0, c1) = gen_ultra_constants(n, alpha, mass);
    if n == 0 {
        return Ok(p.scale(&c0));
    }
    let xdp = &Poly::x() * &p.differentiate(1);
    Ok(&p.scale(&c0) - &xdp.scale(&c1))
}
