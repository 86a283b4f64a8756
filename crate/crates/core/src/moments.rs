//! Moments and MGF of the random series `Y = sum_{k>=1} X_k/(2k pi)`
//! with i.i.d. `X_k ~ Laplace(0, 1)`.
//!
//! Everything here rests on the identity
//!
//! ```text
//! E[e^{tY}] = prod_{k>=1} 1/(1 - (t/(2 pi k))^2) = (t/2)/sin(t/2),   |t| < 2 pi,
//! ```
//!
//! which gives the even moments in closed form two different ways:
//!
//! * [`even_moment_theorem`]: `E[Y^{2n}] = (-1)^n (2n/2^{2n} E_{2n-1} + B_{2n})`
//! * [`even_moment_remark`]:  `E[Y^{2n}] = (1 - 1/2^{2n-1}) |B_{2n}|`
//!
//! and exactly once more through the power-series route
//! ([`mgf_series_coefficients`]), whose `t^{2n}` coefficient must equal
//! `E[Y^{2n}]/(2n)!`. The theorem form is the production formula; the other
//! two are independent verification paths. All odd moments are exactly zero
//! by symmetry and are returned as such without any floating arithmetic.

use crate::rational::{factorial, ExactRational};
use crate::series::PowerSeries;
use crate::special;
use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;
use std::f64::consts::PI;
use std::fmt;

/// Domain errors for the floating-point evaluations in this module.
#[derive(Debug, Clone, PartialEq)]
pub enum MomentError {
    /// The MGF only exists on the open interval `(-2 pi, 2 pi)`.
    MgfOutOfDomain { t: f64 },
    /// Laplace scale parameter must be strictly positive.
    InvalidScale { b: f64 },
}

impl fmt::Display for MomentError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MomentError::MgfOutOfDomain { t } => {
                write!(f, "mgf point t = {t} outside the open interval (-2pi, 2pi)")
            }
            MomentError::InvalidScale { b } => {
                write!(f, "Laplace scale b = {b} must be > 0")
            }
        }
    }
}

impl std::error::Error for MomentError {}

/// Location/scale parameters of a Laplace distribution, with `b > 0`
/// enforced at construction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LaplaceParams {
    a: f64,
    b: f64,
}

impl LaplaceParams {
    pub fn new(a: f64, b: f64) -> Result<Self, MomentError> {
        if !(b > 0.0) {
            return Err(MomentError::InvalidScale { b });
        }
        Ok(LaplaceParams { a, b })
    }

    /// The `(0, 1)` parameters used by the series `Y`.
    pub fn standard() -> Self {
        LaplaceParams { a: 0.0, b: 1.0 }
    }

    pub fn location(&self) -> f64 {
        self.a
    }

    pub fn scale(&self) -> f64 {
        self.b
    }
}

/// One row of the moment table: `E[Y^order]` exactly and as nearest float.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MomentEntry {
    pub order: u32,
    pub exact: ExactRational,
    pub approx: f64,
}

/// `E[Y^{2n}] = (-1)^n (2n/2^{2n} * E_{2n-1} + B_{2n})`, exactly.
pub fn even_moment_theorem(n: u32) -> ExactRational {
    assert!(n >= 1, "even moments are indexed by n >= 1");
    let e = special::euler(2 * n - 1);
    let b = special::bernoulli(2 * n);
    let scale = ExactRational::new(BigInt::from(2 * n), BigInt::one() << (2 * n as usize))
        .expect("power of two");
    let inner = &(&scale * &e) + &b;
    if n % 2 == 0 {
        inner
    } else {
        -&inner
    }
}

/// `E[Y^{2n}] = (1 - 1/2^{2n-1}) * |B_{2n}|`, exactly.
pub fn even_moment_remark(n: u32) -> ExactRational {
    assert!(n >= 1, "even moments are indexed by n >= 1");
    let b = special::bernoulli(2 * n).abs();
    let pow = BigInt::one() << (2 * n as usize - 1);
    let factor = ExactRational::new(&pow - BigInt::one(), pow).expect("power of two");
    &factor * &b
}

/// `E[Y^m]` for any `m >= 1`; odd orders are exactly zero.
pub fn moment(m: u32) -> MomentEntry {
    assert!(m >= 1, "moment order must be >= 1");
    let exact = if m % 2 == 0 {
        even_moment_theorem(m / 2)
    } else {
        ExactRational::zero()
    };
    let approx = exact.to_f64();
    MomentEntry {
        order: m,
        exact,
        approx,
    }
}

/// Moment table for orders `1..=max_order`.
pub fn moment_table(max_order: u32) -> Vec<MomentEntry> {
    assert!(max_order >= 1, "table needs at least one order");
    (1..=max_order).map(moment).collect()
}

/// `E[Y^{2n}] / |B_{2n}| = 1 - 2^{1-2n}`, exactly.
///
/// This ratio increases strictly to 1, which is the quantitative content of
/// `E[Y^{2n}] ~ |B_{2n}|` as `n` grows.
pub fn asymptotic_ratio(n: u32) -> ExactRational {
    assert!(n >= 1, "ratio is indexed by n >= 1");
    let pow = BigInt::one() << (2 * n as usize - 1);
    ExactRational::new(&pow - BigInt::one(), pow).expect("power of two")
}

/// The MGF `(t/2)/sin(t/2)` on its open interval of existence `(-2 pi, 2 pi)`.
///
/// `t = 0` is a removable singularity and returns exactly 1.
pub fn mgf_closed(t: f64) -> Result<f64, MomentError> {
    check_mgf_domain(t)?;
    if t == 0.0 {
        return Ok(1.0);
    }
    let half = t / 2.0;
    Ok(half / half.sin())
}

/// Truncated product form of the MGF: `prod_{k=1..K} 1/(1 - (t/(2 pi k))^2)`.
///
/// Every omitted factor exceeds 1, so the value increases with `K` toward
/// [`mgf_closed`], with relative truncation error on the order of
/// `(t/(2 pi))^2 / K`.
pub fn mgf_product(t: f64, terms: u64) -> Result<f64, MomentError> {
    check_mgf_domain(t)?;
    assert!(terms >= 1, "product needs at least one factor");
    let mut acc = 1.0;
    for k in 1..=terms {
        let r = t / (2.0 * PI * k as f64);
        acc /= 1.0 - r * r;
    }
    Ok(acc)
}

fn check_mgf_domain(t: f64) -> Result<(), MomentError> {
    if t.is_finite() && t.abs() < 2.0 * PI {
        Ok(())
    } else {
        Err(MomentError::MgfOutOfDomain { t })
    }
}

/// Exact Taylor expansion of `(t/2)/sin(t/2)` through degree `order`.
///
/// Computed as the reciprocal of the series of `sin(t/2)/(t/2)`, whose
/// `t^{2m}` coefficient is `(-1)^m / (4^m (2m+1)!)`. The result's `t^{2n}`
/// coefficient equals `E[Y^{2n}]/(2n)!` and every odd coefficient is zero,
/// which is exactly what the moment formulas assert — so this series is the
/// independent oracle for both closed forms.
pub fn mgf_series_coefficients(order: u32) -> PowerSeries {
    let order = order as usize;
    let mut coeffs = vec![ExactRational::zero(); order + 1];
    for m in 0..=(order / 2) {
        let denom = (BigInt::one() << (2 * m)) * factorial(2 * m as u64 + 1);
        let numer = if m % 2 == 0 { BigInt::one() } else { -BigInt::one() };
        coeffs[2 * m] = ExactRational::new(numer, denom).expect("factorial > 0");
    }
    PowerSeries::from_coeffs(coeffs)
        .reciprocal()
        .expect("constant term is 1")
}

/// Laplace density `(1/(2b)) exp(-|x - a|/b)`.
pub fn laplace_pdf(x: f64, params: &LaplaceParams) -> f64 {
    (-(x - params.a).abs() / params.b).exp() / (2.0 * params.b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(p: i64, q: i64) -> ExactRational {
        ExactRational::from_ratio(p, q).unwrap()
    }

    #[test]
    fn first_even_moment_is_one_twelfth() {
        assert_eq!(even_moment_theorem(1), rat(1, 12));
    }

    #[test]
    fn sixth_even_moment_matches_order_twelve() {
        assert_eq!(even_moment_theorem(6), rat(1414477, 5591040));
    }

    #[test]
    fn tenth_even_moment_matches_order_twenty() {
        assert_eq!(even_moment_theorem(10), rat(91546277357, 173015040));
    }

    #[test]
    fn remark_form_small_cases() {
        assert_eq!(even_moment_remark(1), rat(1, 12));
        assert_eq!(even_moment_remark(2), rat(7, 240));
    }

    #[test]
    fn both_closed_forms_agree_through_n_50() {
        for n in 1..=50 {
            assert_eq!(even_moment_theorem(n), even_moment_remark(n), "n = {n}");
        }
    }

    #[test]
    fn odd_moments_are_exactly_zero() {
        assert_eq!(moment(3).exact, ExactRational::zero());
        assert_eq!(moment(5).exact, ExactRational::zero());
        assert_eq!(moment(1).approx, 0.0);
    }

    #[test]
    fn specific_moments() {
        assert_eq!(moment(8).exact, rat(127, 3840));
        assert_eq!(moment(18).exact, rat(5749691557, 104595456));
    }

    #[test]
    fn moment_table_shape() {
        let t = moment_table(4);
        assert_eq!(t.len(), 4);
        assert_eq!(t[0].exact, ExactRational::zero());
        assert_eq!(t[1].exact, rat(1, 12));
        assert_eq!(t[2].exact, ExactRational::zero());
        assert_eq!(t[3].exact, rat(7, 240));

        let single = moment_table(1);
        assert_eq!(single.len(), 1);
        assert_eq!(single[0].order, 1);
        assert_eq!(single[0].exact, ExactRational::zero());
    }

    #[test]
    fn even_moments_are_positive() {
        for n in 1..=30 {
            assert!(moment(2 * n).exact.is_positive(), "order {}", 2 * n);
        }
    }

    #[test]
    fn asymptotic_ratio_values_and_monotonicity() {
        assert_eq!(asymptotic_ratio(1), rat(1, 2));
        assert_eq!(asymptotic_ratio(5), rat(511, 512));
        let mut prev = ExactRational::zero();
        for n in 1..=50 {
            let r = asymptotic_ratio(n);
            assert!(r > prev, "not increasing at n = {n}");
            assert!(r < ExactRational::one());
            prev = r;
        }
    }

    #[test]
    fn mgf_closed_values() {
        assert_eq!(mgf_closed(0.0).unwrap(), 1.0);
        assert!((mgf_closed(PI).unwrap() - PI / 2.0).abs() < 1e-15);
        // 0.5/sin(0.5), frozen from a 50-digit evaluation.
        assert!((mgf_closed(1.0).unwrap() - 1.0429148214667441).abs() < 1e-15);
    }

    #[test]
    fn mgf_closed_is_even() {
        for t in [0.25, 1.0, 2.0, 3.5, 5.9] {
            assert_eq!(mgf_closed(t).unwrap(), mgf_closed(-t).unwrap());
        }
    }

    #[test]
    fn mgf_domain_is_open() {
        assert!(mgf_closed(2.0 * PI).is_err());
        assert!(mgf_closed(-2.0 * PI).is_err());
        assert!(mgf_closed(7.0).is_err());
        assert!(mgf_closed(f64::NAN).is_err());
        assert!(mgf_product(2.0 * PI, 10).is_err());
        assert!(mgf_closed(2.0 * PI - 1e-9).is_ok());
    }

    #[test]
    fn mgf_product_at_zero_is_one() {
        for k in [1, 10, 1000] {
            assert_eq!(mgf_product(0.0, k).unwrap(), 1.0);
        }
    }

    #[test]
    fn mgf_product_increases_toward_closed_form() {
        let closed = mgf_closed(3.0).unwrap();
        let mut prev = 0.0;
        for k in [100, 1_000, 10_000] {
            let p = mgf_product(3.0, k).unwrap();
            assert!(p > prev, "not increasing at K = {k}");
            assert!(p < closed, "overshoot at K = {k}");
            prev = p;
        }
    }

    #[test]
    fn mgf_series_low_coefficients() {
        let s = mgf_series_coefficients(6);
        assert_eq!(*s.coeff(0), ExactRational::one());
        assert_eq!(*s.coeff(1), ExactRational::zero());
        assert_eq!(*s.coeff(2), rat(1, 24));
        assert_eq!(*s.coeff(3), ExactRational::zero());
        assert_eq!(*s.coeff(4), rat(7, 5760));
        assert_eq!(*s.coeff(6), rat(31, 967680));
    }

    #[test]
    fn laplace_params_reject_bad_scale() {
        assert!(LaplaceParams::new(0.0, 0.0).is_err());
        assert!(LaplaceParams::new(0.0, -1.0).is_err());
        assert!(LaplaceParams::new(0.0, f64::NAN).is_err());
        assert!(LaplaceParams::new(1.5, 2.0).is_ok());
    }

    #[test]
    fn laplace_pdf_values() {
        let std = LaplaceParams::standard();
        assert_eq!(laplace_pdf(0.0, &std), 0.5);
        let shifted = LaplaceParams::new(3.0, 0.25).unwrap();
        assert_eq!(laplace_pdf(3.0, &shifted), 2.0);
        assert!((laplace_pdf(1.0, &std) - 0.5 * (-1.0f64).exp()).abs() < 1e-16);
    }
}
