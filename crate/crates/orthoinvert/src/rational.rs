//! Exact rational scalars and the combinatorial primitives built on them.
//!
//! Every quantity in this crate is a `Rational`: an arbitrary-precision
//! fraction kept in lowest terms with a positive denominator. The text form
//! is `p/q`, or just `p` when the denominator is 1, with the sign always on
//! the numerator.
//!
//! On top of the scalar sit the three building blocks the rest of the crate
//! is phrased in:
//!
//!   pochhammer(a, k)              (a)_k = a(a+1)***(a+k-1), (a)_0 = 1
//!   binom_rat(a, k)               C(a, k) = (a-k+1)_k / k!
//!   pochhammer_ratio(a, n, d)     (a)_n / (a)_d, error when (a)_d = 0
//!
//! Gamma-function ratios never appear: they are always rewritten as
//! Pochhammer ratios, so a vanishing denominator is an explicit error value
//! rather than a silent infinity.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

/// Rational from a signed integer.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Rational `p/q`. Panics if `q == 0`; intended for literals in code.
pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Parse `p` or `p/q` with an optional leading minus on the numerator.
///
/// Anything else (decimals, signs on the denominator, empty parts) is a
/// `Parse` error; `q = 0` is rejected as well.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::parse(format!("expected `p` or `p/q`, got `{s}`"));
    let (numer, denom) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let parse_part = |part: &str, allow_sign: bool| -> Result<BigInt> {
        let digits = match part.strip_prefix('-') {
            Some(rest) if allow_sign => rest,
            Some(_) => return Err(bad()),
            None => part,
        };
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        part.parse::<BigInt>().map_err(|_| bad())
    };
    let p = parse_part(numer, true)?;
    let q = match denom {
        Some(d) => parse_part(d, false)?,
        None => BigInt::one(),
    };
    if q.is_zero() {
        return Err(Error::parse(format!("zero denominator in `{s}`")));
    }
    Ok(Rational::new(p, q))
}

/// Canonical text form: `p/q`, or `p` when the denominator is 1.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

/// Serde adapter serializing a `Rational` as its canonical string.
pub mod serde_str {
    use serde::{de::Error as _, Deserialize, Deserializer, Serializer};

    use super::{format_rational, parse_rational, Rational};

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        parse_rational(&s).map_err(D::Error::custom)
    }
}

/// k! as a Rational.
pub fn factorial(k: usize) -> Rational {
    let mut acc = BigInt::one();
    for m in 2..=k {
        acc *= BigInt::from(m);
    }
    Rational::from_integer(acc)
}

/// Rising factorial (a)_k = a(a+1)***(a+k-1); (a)_0 = 1.
pub fn pochhammer(a: &Rational, k: usize) -> Rational {
    let mut acc = Rational::one();
    let mut factor = a.clone();
    for _ in 0..k {
        acc *= &factor;
        factor += Rational::one();
    }
    acc
}

/// Generalized binomial coefficient C(a, k) = (a-k+1)_k / k! for rational a.
pub fn binom_rat(a: &Rational, k: usize) -> Rational {
    pochhammer(&(a - int(k as i64 - 1)), k) / factorial(k)
}

/// C(a, k) extended to signed lower index: zero whenever k < 0.
pub fn binom_rat_signed(a: &Rational, k: i64) -> Rational {
    if k < 0 {
        Rational::zero()
    } else {
        binom_rat(a, k as usize)
    }
}

/// (a)_num_len / (a)_den_len, exactly.
///
/// Errors with `ZeroDenominator` when `(a)_den_len = 0`; a vanishing
/// numerator is fine and simply yields zero.
pub fn pochhammer_ratio(a: &Rational, num_len: usize, den_len: usize) -> Result<Rational> {
    let den = pochhammer(a, den_len);
    if den.is_zero() {
        return Err(Error::ZeroDenominator {
            base: a.clone(),
            len: den_len,
        });
    }
    Ok(pochhammer(a, num_len) / den)
}

/// (a)_k where the value is about to be used as a denominator.
///
/// Errors with `ZeroDenominator` at the shortest vanishing length, so the
/// report names the first offending factor rather than the full product.
pub fn pochhammer_nonzero(a: &Rational, k: usize) -> Result<Rational> {
    let mut acc = Rational::one();
    for m in 0..k {
        let factor = a + int(m as i64);
        if factor.is_zero() {
            return Err(Error::ZeroDenominator {
                base: a.clone(),
                len: m + 1,
            });
        }
        acc *= factor;
    }
    Ok(acc)
}
