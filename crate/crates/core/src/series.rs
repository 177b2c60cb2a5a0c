//! Truncated formal power series with exact rational coefficients.

use std::ops::{Add, Mul};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// a_0 + a_1 x + … + a_{len-1} x^{len-1} + O(x^len).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PowerSeries {
    coeffs: Vec<Rational>,
}

impl PowerSeries {
    /// Truncates or zero-pads `coeffs` to `len` terms.
    pub fn new(mut coeffs: Vec<Rational>, len: usize) -> Self {
        coeffs.resize(len, Rational::zero());
        PowerSeries { coeffs }
    }

    pub fn one(len: usize) -> Self {
        PowerSeries::new(vec![Rational::one()], len)
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        PowerSeries {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Quotient by a series with nonzero constant term.
    pub fn div(&self, den: &PowerSeries) -> Result<PowerSeries> {
        let d0 = den.coeff(0);
        if d0.is_zero() {
            return Err(Error::OutOfRange {
                what: "series divisor",
                detail: "constant term is zero".into(),
            });
        }
        let len = self.len();
        let mut q: Vec<Rational> = Vec::with_capacity(len);
        for k in 0..len {
            let mut acc = self.coeff(k);
            for i in 1..=k {
                let d = den.coeff(i);
                if !d.is_zero() {
                    acc -= d * &q[k - i];
                }
            }
            q.push(acc / &d0);
        }
        Ok(PowerSeries { coeffs: q })
    }
}

impl Add for &PowerSeries {
    type Output = PowerSeries;
    fn add(self, rhs: &PowerSeries) -> PowerSeries {
        let len = self.len().min(rhs.len());
        PowerSeries {
            coeffs: (0..len).map(|k| self.coeff(k) + rhs.coeff(k)).collect(),
        }
    }
}

impl Mul for &PowerSeries {
    type Output = PowerSeries;
    fn mul(self, rhs: &PowerSeries) -> PowerSeries {
        let len = self.len().min(rhs.len());
        let mut out = vec![Rational::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate().take(len) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(len - i) {
                out[i + j] += a * b;
            }
        }
        PowerSeries { coeffs: out }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn geometric_series() {
        let den = PowerSeries::new(vec![rat(1), rat(-1)], 6);
        let q = PowerSeries::one(6).div(&den).unwrap();
        assert_eq!(q.coeffs(), &[rat(1), rat(1), rat(1), rat(1), rat(1), rat(1)]);
        let back = &q * &den;
        assert_eq!(back, PowerSeries::one(6));
        let bad = PowerSeries::new(vec![rat(0), rat(1)], 3);
        assert!(q.div(&bad).is_err());
    }

    #[test]
    fn sum_truncates_to_shorter() {
        let a = PowerSeries::new(vec![rat(1), rat(2)], 4);
        let b = PowerSeries::new(vec![rat(3)], 2);
        assert_eq!((&a + &b).coeffs(), &[rat(4), rat(2)]);
    }
}
