//! Truncated formal power series with exact rational coefficients.
//!
//! A [`PowerSeries`] of order `N` stores the coefficients of `t^0 .. t^N`
//! and nothing beyond. The truncation order is part of the value: arithmetic
//! between series of different orders truncates to the shorter one, so a
//! result never claims more precision than its inputs carried.

use crate::rational::ExactRational;
use std::fmt;

/// Error from inverting a series whose constant term is zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NonInvertibleSeries;

impl fmt::Display for NonInvertibleSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "series has zero constant term and no reciprocal")
    }
}

impl std::error::Error for NonInvertibleSeries {}

/// A formal power series truncated at an explicit order (inclusive).
#[derive(Clone, PartialEq, Eq)]
pub struct PowerSeries {
    coeffs: Vec<ExactRational>,
}

impl PowerSeries {
    /// The zero series of the given order.
    pub fn zero(order: usize) -> Self {
        PowerSeries {
            coeffs: vec![ExactRational::zero(); order + 1],
        }
    }

    /// The constant series 1 of the given order.
    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = ExactRational::one();
        s
    }

    /// Builds a series from coefficients `c_0 .. c_N`; the order is `N`.
    ///
    /// Panics on an empty coefficient list (a series always carries at
    /// least its constant term).
    pub fn from_coeffs(coeffs: Vec<ExactRational>) -> Self {
        assert!(!coeffs.is_empty(), "a power series needs a constant term");
        PowerSeries { coeffs }
    }

    /// Truncation order `N`; `coeffs().len() == N + 1`.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `t^k`. Panics beyond the truncation order.
    pub fn coeff(&self, k: usize) -> &ExactRational {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[ExactRational] {
        &self.coeffs
    }

    /// Cauchy product, truncated to the shorter of the two orders.
    pub fn mul(&self, other: &PowerSeries) -> PowerSeries {
        let order = self.order().min(other.order());
        let mut coeffs = vec![ExactRational::zero(); order + 1];
        for (n, c) in coeffs.iter_mut().enumerate() {
            let mut acc = ExactRational::zero();
            for i in 0..=n {
                let term = self.coeff(i) * other.coeff(n - i);
                acc = &acc + &term;
            }
            *c = acc;
        }
        PowerSeries { coeffs }
    }

    /// Multiplicative inverse through the same order: `self * r = 1 + O(t^{N+1})`.
    ///
    /// Requires a nonzero constant term. Coefficients follow the usual
    /// recursion `r_n = -(1/a_0) * sum_{i=1..n} a_i r_{n-i}` with `r_0 = 1/a_0`.
    pub fn reciprocal(&self) -> Result<PowerSeries, NonInvertibleSeries> {
        let a0 = self.coeff(0);
        if a0.is_zero() {
            return Err(NonInvertibleSeries);
        }
        let inv_a0 = a0.recip().expect("nonzero constant term");
        let mut r = Vec::with_capacity(self.order() + 1);
        r.push(inv_a0.clone());
        for n in 1..=self.order() {
            let mut acc = ExactRational::zero();
            for i in 1..=n {
                acc = &acc + &(self.coeff(i) * &r[n - i]);
            }
            r.push(-&(&inv_a0 * &acc));
        }
        Ok(PowerSeries { coeffs: r })
    }
}

impl fmt::Debug for PowerSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PowerSeries[")?;
        for (k, c) in self.coeffs.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})t^{k}")?;
        }
        write!(f, "]")
    }
}
