//! Exact rational helpers on top of `num_rational::BigRational`.

use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always stored reduced with a positive denominator.
pub type Rational = num_rational::BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn from_big(n: BigInt) -> Rational {
    Rational::from_integer(n)
}

/// Parses `"p"`, `"-p"` or `"p/q"`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim();
    let bad = || Error::Parse {
        pos: 0,
        msg: format!("not a rational number: {t:?}"),
    };
    if t.is_empty() {
        return Err(bad());
    }
    match t.split_once('/') {
        Some((p, q)) => {
            let p = BigInt::from_str(p.trim()).map_err(|_| bad())?;
            let q = BigInt::from_str(q.trim()).map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(p, q))
        }
        None => Ok(Rational::from_integer(
            BigInt::from_str(t).map_err(|_| bad())?,
        )),
    }
}

/// Checks the Jack parameter and hands it back.
pub fn positive_alpha(alpha: &Rational) -> Result<&Rational> {
    if alpha.is_positive() {
        Ok(alpha)
    } else {
        Err(Error::NonPositiveAlpha(alpha.to_string()))
    }
}

/// `x^e` for any integer exponent (x must be nonzero when e < 0).
pub fn pow(x: &Rational, e: i64) -> Rational {
    if e >= 0 {
        num_traits::pow(x.clone(), e as usize)
    } else {
        num_traits::pow(x.recip(), e.unsigned_abs() as usize)
    }
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

pub fn double_factorial_odd(n: usize) -> BigInt {
    // (2n-1)!!
    (1..=n).fold(BigInt::one(), |acc, k| acc * (2 * k - 1))
}

/// Binomial coefficient, zero outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Falling factorial `a (a-1) ... (a-k+1)`.
pub fn falling(a: &Rational, k: usize) -> Rational {
    let mut acc = Rational::one();
    let mut cur = a.clone();
    for _ in 0..k {
        acc *= &cur;
        cur -= Rational::one();
    }
    acc
}

pub fn catalan(k: usize) -> BigInt {
    binomial(2 * k as i64, k as i64) / (k + 1)
}

/// Stirling numbers of the second kind S(k, m).
pub fn stirling2(k: usize, m: usize) -> BigInt {
    let mut row = vec![BigInt::zero(); m + 1];
    row[0] = BigInt::one();
    for i in 1..=k {
        for j in (1..=m.min(i)).rev() {
            row[j] = &row[j] * j + &row[j - 1];
        }
        row[0] = BigInt::zero();
    }
    row[m].clone()
}

pub fn is_integer(x: &Rational) -> bool {
    x.denom().is_one()
}

/// gcd-free check that a rational is a nonnegative integer.
pub fn is_nonneg_integer(x: &Rational) -> bool {
    is_integer(x) && !x.is_negative()
}

pub fn lcm_of_denoms<'a>(xs: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    xs.into_iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
}
