//! Bernoulli numbers and (rational) Euler numbers.
//!
//! Both families are defined by exponential generating functions:
//!
//! ```text
//! t/(e^t - 1) = sum_n B_n t^n/n!        2/(e^t + 1) = sum_n E_n t^n/n!
//! ```
//!
//! so `B_1 = -1/2`, and the `E_n` here are rationals with vanishing even
//! indices (`E_2 = E_4 = ... = 0`) — *not* the classical integer secant
//! numbers, whose odd indices vanish instead.
//!
//! Production values come from the recurrences
//!
//! ```text
//! B_0 = 1,  B_n = -(1/(n+1)) * sum_{k<n} C(n+1,k) B_k
//! E_0 = 1,  E_n = -(1/2)     * sum_{k<n} C(n,k)   E_k
//! ```
//!
//! Each family is computed by its own recurrence so that the identity
//! `E_n = -2(2^{n+1}-1)/(n+1) * B_{n+1}` stays a falsifiable cross-check
//! (see [`check_identity_eq8`]) instead of a definition.
//!
//! Values are memoized in a process-wide [`NumberCache`]: tables only ever
//! grow, an entry once computed is never rewritten, and concurrent fills of
//! the same index produce identical values, so reads may race with fills
//! safely. Indices up to 1000 are supported; the recurrences are quadratic,
//! so far larger indices get slow.

use crate::rational::ExactRational;
use num_bigint::BigInt;
use num_traits::One;
use std::sync::RwLock;

/// Growable memo tables for both number families.
///
/// The high-water mark of each table is its length: entries `0..len` are
/// final and identical to what any recomputation would produce.
pub struct NumberCache {
    bernoulli: RwLock<Vec<ExactRational>>,
    euler: RwLock<Vec<ExactRational>>,
}

impl NumberCache {
    pub const fn new() -> Self {
        NumberCache {
            bernoulli: RwLock::new(Vec::new()),
            euler: RwLock::new(Vec::new()),
        }
    }

    /// `B_n` in the convention with `B_1 = -1/2`.
    pub fn bernoulli(&self, n: u32) -> ExactRational {
        let n = n as usize;
        {
            let table = self.bernoulli.read().unwrap();
            if let Some(v) = table.get(n) {
                return v.clone();
            }
        }
        let mut table = self.bernoulli.write().unwrap();
        while table.len() <= n {
            let m = table.len();
            table.push(next_bernoulli(&table, m));
        }
        table[n].clone()
    }

    /// `E_n` from `2/(e^t + 1)`; rational, with `E_{2k} = 0` for `k >= 1`.
    pub fn euler(&self, n: u32) -> ExactRational {
        let n = n as usize;
        {
            let table = self.euler.read().unwrap();
            if let Some(v) = table.get(n) {
                return v.clone();
            }
        }
        let mut table = self.euler.write().unwrap();
        while table.len() <= n {
            let m = table.len();
            table.push(next_euler(&table, m));
        }
        table[n].clone()
    }

    /// Highest Bernoulli index already computed, if any.
    pub fn bernoulli_high_water(&self) -> Option<u32> {
        let len = self.bernoulli.read().unwrap().len();
        len.checked_sub(1).map(|n| n as u32)
    }

    /// Highest Euler index already computed, if any.
    pub fn euler_high_water(&self) -> Option<u32> {
        let len = self.euler.read().unwrap().len();
        len.checked_sub(1).map(|n| n as u32)
    }
}

impl Default for NumberCache {
    fn default() -> Self {
        Self::new()
    }
}

/// `B_m` given the finished prefix `B_0 .. B_{m-1}`.
///
/// The binomial row `C(m+1, k)` is maintained incrementally: one exact
/// multiply-divide per term instead of a fresh binomial each time.
fn next_bernoulli(prefix: &[ExactRational], m: usize) -> ExactRational {
    if m == 0 {
        return ExactRational::one();
    }
    let m = m as u64;
    let mut acc = ExactRational::zero();
    let mut binom = BigInt::one(); // C(m+1, 0)
    for k in 0..m {
        let term = &ExactRational::from(binom.clone()) * &prefix[k as usize];
        acc = &acc + &term;
        // C(m+1, k+1) = C(m+1, k) * (m+1-k) / (k+1), exact at every step.
        binom = binom * BigInt::from(m + 1 - k) / BigInt::from(k + 1);
    }
    -&acc
        .checked_div(&ExactRational::from_integer(m as i64 + 1))
        .expect("m+1 > 0")
}

/// `E_m` given the finished prefix `E_0 .. E_{m-1}`.
fn next_euler(prefix: &[ExactRational], m: usize) -> ExactRational {
    if m == 0 {
        return ExactRational::one();
    }
    let m = m as u64;
    let mut acc = ExactRational::zero();
    let mut binom = BigInt::one(); // C(m, 0)
    for k in 0..m {
        let term = &ExactRational::from(binom.clone()) * &prefix[k as usize];
        acc = &acc + &term;
        binom = binom * BigInt::from(m - k) / BigInt::from(k + 1);
    }
    let half = ExactRational::from_ratio(-1, 2).unwrap();
    &half * &acc
}

static CACHE: NumberCache = NumberCache::new();

/// `B_n` from the shared process-wide cache.
pub fn bernoulli(n: u32) -> ExactRational {
    CACHE.bernoulli(n)
}

/// `E_n` from the shared process-wide cache.
pub fn euler(n: u32) -> ExactRational {
    CACHE.euler(n)
}

/// Verifies `E_n = -2(2^{n+1} - 1)/(n+1) * B_{n+1}` exactly at index `n`.
///
/// Both sides come from their own recurrences, so this is a genuine
/// cross-check between the two families, not a tautology.
pub fn check_identity_eq8(n: u32) -> bool {
    let lhs = euler(n);
    let pow = (BigInt::one() << (n as usize + 1)) - BigInt::one();
    let factor = ExactRational::new(BigInt::from(-2) * pow, BigInt::from(n + 1))
        .expect("n+1 > 0");
    let rhs = &factor * &bernoulli(n + 1);
    lhs == rhs
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(p: i64, q: i64) -> ExactRational {
        ExactRational::from_ratio(p, q).unwrap()
    }

    #[test]
    fn bernoulli_small_values() {
        assert_eq!(bernoulli(0), rat(1, 1));
        assert_eq!(bernoulli(1), rat(-1, 2));
        assert_eq!(bernoulli(2), rat(1, 6));
        assert_eq!(bernoulli(7), ExactRational::zero());
        assert_eq!(bernoulli(12), rat(-691, 2730));
    }

    #[test]
    fn euler_small_values() {
        assert_eq!(euler(0), rat(1, 1));
        assert_eq!(euler(1), rat(-1, 2));
        assert_eq!(euler(4), ExactRational::zero());
        assert_eq!(euler(7), rat(17, 8));
    }

    #[test]
    fn identity_eq8_holds_at_small_indices() {
        // n = 1: -2(3)/2 * B_2 = -3 * 1/6 = -1/2 = E_1.
        assert!(check_identity_eq8(1));
        // n = 0: -2(1)/1 * B_1 = -2 * (-1/2) = 1 = E_0.
        assert!(check_identity_eq8(0));
    }

    #[test]
    fn cache_is_shared_and_idempotent() {
        let a = bernoulli(30);
        let b = bernoulli(30);
        assert_eq!(a, b);
        let cache = NumberCache::new();
        assert_eq!(cache.bernoulli_high_water(), None);
        assert_eq!(cache.bernoulli(30), a);
        assert_eq!(cache.bernoulli_high_water(), Some(30));
        assert_eq!(cache.euler_high_water(), None);
    }

    #[test]
    fn concurrent_fills_agree() {
        let cache = NumberCache::new();
        std::thread::scope(|scope| {
            let handles: Vec<_> = (0..4)
                .map(|_| scope.spawn(|| cache.bernoulli(60)))
                .collect();
            let values: Vec<_> = handles.into_iter().map(|h| h.join().unwrap()).collect();
            assert!(values.windows(2).all(|w| w[0] == w[1]));
        });
        assert_eq!(cache.bernoulli(60), bernoulli(60));
    }

    #[test]
    #[ignore = "quadratic recurrence; takes a while — run with --ignored"]
    fn supported_range_completes() {
        let cache = NumberCache::new();
        let b = cache.bernoulli(1000);
        assert!(!b.is_zero());
        let e = cache.euler(999);
        assert!(!e.is_zero());
    }
}
