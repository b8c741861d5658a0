//! Terminating hypergeometric summation identities, checked exactly.
//!
//! Each function evaluates a finite sum by an explicit term loop, updating
//! the term through the ratio term_{k+1}/term_k, and compares against the
//! closed form. Both sides are returned in a `SumCheck` so callers (and the
//! JSON output) can show the exact values, not just a verdict.
//!
//! The catalog:
//!
//!   Eq23   sum_{k=0}^{n} (a+1)_k / k! = (a+2)_n / n!
//!   Eq24   _2F_1(-n, b; c; 1) = (c-b)_n / (c)_n                 (Vandermonde)
//!   Eq25   sum_{k=0}^{n} [(-n)_k (b)_k / ((b+n+1)_k k!)] (b+2k) = 0, n >= 1
//!   Eq27   _3F_2(-n, a, n+b+c-1; b, a+c; 1)
//!            = (b-a)_n (c)_n / ((b)_n (a+c)_n)                (Saalschutz)
//!   Eq28   the a = (b-c)/2 case: _3F_2(...) = (c)_n / (b)_n
//!   Eq29   sum_{k=0}^{n} [(-n)_k (b)_k (c)_k / ((b+n+1)_k (b-c+1)_k k!)] (b+2k)
//!            = (b)_{n+1} (b/2-c+1/2)_n / ((b-c+1)_n (b/2+1/2)_n)
//!
//! A denominator factor that hits zero while terms remain is reported as
//! `ZeroDenominator`; closed-form denominators are checked the same way.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{factorial, int, pochhammer, rat, Rational};

/// Exact left/right values of a scalar summation identity.
#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct SumCheck {
    #[serde(with = "crate::rational::serde_str")]
    pub lhs: Rational,
    #[serde(with = "crate::rational::serde_str")]
    pub rhs: Rational,
    pub equal: bool,
}

impl SumCheck {
    pub fn new(lhs: Rational, rhs: Rational) -> Self {
        let equal = lhs == rhs;
        SumCheck { lhs, rhs, equal }
    }
}

fn zero_den(base: &Rational, len: usize) -> Error {
    Error::ZeroDenominator {
        base: base.clone(),
        len,
    }
}

/// Eq23: partial sums of the binomial series.
pub fn sum_1f0_partial(a: &Rational, n: usize) -> SumCheck {
    let mut term = Rational::one();
    let mut lhs = Rational::one();
    for k in 0..n {
        term = term * (a + int(k as i64 + 1)) / int(k as i64 + 1);
        lhs += &term;
    }
    SumCheck::new(lhs, pochhammer(&(a + int(2)), n) / factorial(n))
}

/// Eq24: Vandermonde summation. Requires (c)_k != 0 up through k = n.
pub fn vandermonde(b: &Rational, c: &Rational, n: usize) -> Result<SumCheck> {
    let mut term = Rational::one();
    let mut lhs = Rational::one();
    for k in 0..n {
        let den = c + int(k as i64);
        if den.is_zero() {
            return Err(zero_den(c, k + 1));
        }
        term = term * (int(k as i64) - int(n as i64)) * (b + int(k as i64))
            / (den * int(k as i64 + 1));
        lhs += &term;
    }
    let rhs = pochhammer(&(c - b), n) / pochhammer(c, n);
    Ok(SumCheck::new(lhs, rhs))
}

/// Eq25: the weighted Vandermonde combination that sums to zero, n >= 1.
pub fn weighted_zero_sum(b: &Rational, n: usize) -> Result<SumCheck> {
    if n == 0 {
        return Err(Error::arity("the weighted zero sum requires n >= 1"));
    }
    let shifted = b + int(n as i64 + 1);
    let mut base = Rational::one();
    let mut lhs = b.clone(); // k = 0 term: 1 * (b + 0)
    for k in 0..n {
        let den = &shifted + int(k as i64);
        if den.is_zero() {
            return Err(zero_den(&shifted, k + 1));
        }
        base = base * (int(k as i64) - int(n as i64)) * (b + int(k as i64))
            / (den * int(k as i64 + 1));
        lhs += &base * (b + int(2 * (k as i64 + 1)));
    }
    Ok(SumCheck::new(lhs, Rational::zero()))
}

/// Shared _3F_2(-n, a, n+b+c-1; b, a+c; 1) term loop.
fn saalschutz_lhs(a: &Rational, b: &Rational, c: &Rational, n: usize) -> Result<Rational> {
    let top = b + c + int(n as i64 - 1);
    let ac = a + c;
    let mut term = Rational::one();
    let mut lhs = Rational::one();
    for k in 0..n {
        let kk = int(k as i64);
        let den1 = b + &kk;
        if den1.is_zero() {
            return Err(zero_den(b, k + 1));
        }
        let den2 = &ac + &kk;
        if den2.is_zero() {
            return Err(zero_den(&ac, k + 1));
        }
        term = term * (&kk - int(n as i64)) * (a + &kk) * (&top + &kk)
            / (den1 * den2 * int(k as i64 + 1));
        lhs += &term;
    }
    Ok(lhs)
}

/// Eq27: Saalschutz summation.
pub fn saalschutz(a: &Rational, b: &Rational, c: &Rational, n: usize) -> Result<SumCheck> {
    let lhs = saalschutz_lhs(a, b, c, n)?;
    let den = pochhammer(b, n) * pochhammer(&(a + c), n);
    // the term loop already rejected every vanishing factor of `den`
    let rhs = pochhammer(&(b - a), n) * pochhammer(c, n) / den;
    Ok(SumCheck::new(lhs, rhs))
}

/// Eq28: the Saalschutz specialization a = (b-c)/2, whose value is a plain
/// Pochhammer ratio (c)_n / (b)_n.
pub fn saalschutz_ratio(b: &Rational, c: &Rational, n: usize) -> Result<SumCheck> {
    let a = (b - c) / int(2);
    let lhs = saalschutz_lhs(&a, b, c, n)?;
    let rhs = pochhammer(c, n) / pochhammer(b, n);
    Ok(SumCheck::new(lhs, rhs))
}

/// Eq29: the well-poised weighted sum.
pub fn wellpoised(b: &Rational, c: &Rational, n: usize) -> Result<SumCheck> {
    let shifted = b + int(n as i64 + 1);
    let cshift = b - c + int(1);
    let mut base = Rational::one();
    let mut lhs = b.clone();
    for k in 0..n {
        let kk = int(k as i64);
        let den1 = &shifted + &kk;
        if den1.is_zero() {
            return Err(zero_den(&shifted, k + 1));
        }
        let den2 = &cshift + &kk;
        if den2.is_zero() {
            return Err(zero_den(&cshift, k + 1));
        }
        base = base * (&kk - int(n as i64)) * (b + &kk) * (c + &kk)
            / (den1 * den2 * int(k as i64 + 1));
        lhs += &base * (b + int(2 * (k as i64 + 1)));
    }
    let half = b / int(2) + rat(1, 2);
    let den = pochhammer(&half, n);
    if den.is_zero() {
        return Err(zero_den(&half, n));
    }
    let rhs = pochhammer(b, n + 1) * pochhammer(&(&half - c), n) / (pochhammer(&cshift, n) * den);
    Ok(SumCheck::new(lhs, rhs))
}
