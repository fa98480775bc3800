//! Binomial coefficients, Macaulay representations and the shift operator.
//!
//! Every integer `A >= 0` has, for each `n >= 1`, a unique `n`-th Macaulay
//! representation
//!
//! ```text
//! A = C(a_n, n) + C(a_{n-1}, n-1) + ... + C(a_δ, δ),   a_n > ... > a_δ >= δ >= 1.
//! ```
//!
//! The shift operator `A_(n)|_s^t` replaces every `C(a_j, j)` by
//! `C(a_j + t, j + s)`. Shifted terms follow the total binomial convention of
//! [`binom_coeff`]: zero when the lower index is negative or exceeds the upper
//! one, one when the lower index is zero.

use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// `C(a, b)` for arbitrary integers, extended as a total function.
///
/// Returns 0 when `b < 0` or `a < b`, and 1 when `b == 0 <= a`.
pub fn binom_coeff(a: &BigInt, b: i64) -> BigUint {
    if b < 0 || *a < BigInt::from(b) {
        return BigUint::zero();
    }
    let a = a.to_biguint().expect("a >= b >= 0");
    let b = b as u64;
    // C(a, b) = C(a, a - b); iterate over the smaller of the two.
    let complement = &a - b;
    let k = match complement.to_u64() {
        Some(c) if c < b => c,
        _ => b,
    };
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= &a - i;
        acc /= i + 1;
    }
    acc
}

/// `C(a, b)` on machine integers.
pub fn binom(a: i64, b: i64) -> BigUint {
    binom_coeff(&BigInt::from(a), b)
}

/// One summand `C(upper, lower)` of a Macaulay representation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BinomialTerm {
    #[serde(with = "crate::io::decimal")]
    pub upper: BigUint,
    pub lower: u32,
}

impl BinomialTerm {
    pub fn new(upper: impl Into<BigUint>, lower: u32) -> Self {
        BinomialTerm {
            upper: upper.into(),
            lower,
        }
    }

    pub fn value(&self) -> BigUint {
        binom_coeff(&BigInt::from(self.upper.clone()), self.lower as i64)
    }

    pub fn shifted(&self, shift: Shift) -> BigUint {
        let upper = BigInt::from_biguint(Sign::Plus, self.upper.clone()) + shift.upper;
        binom_coeff(&upper, self.lower as i64 + shift.lower)
    }
}

impl fmt::Display for BinomialTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "C({},{})", self.upper, self.lower)
    }
}

/// The `n`-th Macaulay representation of an integer.
///
/// Terms are stored with strictly decreasing `lower` index starting at `n`
/// and strictly decreasing `upper` index. Zero has no terms.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MacaulayRep {
    pub n: u32,
    pub terms: Vec<BinomialTerm>,
}

/// The pair `(s, t)` of the shift operator `A_(n)|_s^t`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Shift {
    /// Added to every lower index (`s`).
    pub lower: i64,
    /// Added to every upper index (`t`).
    pub upper: i64,
}

impl Shift {
    pub const IDENTITY: Shift = Shift { lower: 0, upper: 0 };

    pub const fn new(lower: i64, upper: i64) -> Self {
        Shift { lower, upper }
    }
}

impl MacaulayRep {
    /// Greedy construction: at each index take the largest upper entry whose
    /// binomial still fits in the remainder.
    pub fn of(value: &BigUint, n: u32) -> Self {
        assert!(n >= 1, "Macaulay representation index must be positive");
        let mut rem = value.clone();
        let mut terms = Vec::new();
        let mut j = n;
        while !rem.is_zero() && j >= 1 {
            let upper = largest_upper_fitting(&rem, j);
            let term = BinomialTerm::new(upper, j);
            rem -= term.value();
            terms.push(term);
            j -= 1;
        }
        debug_assert!(rem.is_zero());
        MacaulayRep { n, terms }
    }

    pub fn value(&self) -> BigUint {
        self.terms.iter().map(BinomialTerm::value).sum()
    }

    pub fn shifted(&self, shift: Shift) -> BigUint {
        self.terms.iter().map(|t| t.shifted(shift)).sum()
    }

    /// Smallest lower index `δ`, or `None` for the empty representation.
    pub fn delta(&self) -> Option<u32> {
        self.terms.last().map(|t| t.lower)
    }

    /// Checks the structural invariants: lower indices run `n, n-1, ..., δ >= 1`,
    /// upper indices strictly decrease, and `upper >= lower` termwise.
    pub fn is_well_formed(&self) -> bool {
        let indices_ok = self
            .terms
            .iter()
            .enumerate()
            .all(|(i, t)| t.lower as usize + i == self.n as usize && t.lower >= 1);
        let upper_ok = self.terms.iter().all(|t| t.upper >= BigUint::from(t.lower));
        let decreasing = self.terms.windows(2).all(|w| w[0].upper > w[1].upper);
        indices_ok && upper_ok && decreasing
    }

    /// Upper entries `(a_n, a_{n-1}, ...)`, the key for lexicographic comparison.
    pub fn uppers(&self) -> Vec<BigUint> {
        self.terms.iter().map(|t| t.upper.clone()).collect()
    }
}

impl fmt::Display for MacaulayRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

/// Largest `a >= j` with `C(a, j) <= rem`, for `rem >= 1`.
fn largest_upper_fitting(rem: &BigUint, j: u32) -> BigUint {
    let fits = |a: &BigUint| binom_coeff(&BigInt::from(a.clone()), j as i64) <= *rem;
    let mut lo = BigUint::from(j);
    let mut step = BigUint::one();
    // exponential search for an upper bound that does not fit
    let mut hi = &lo + &step;
    while fits(&hi) {
        lo = hi;
        step <<= 1;
        hi = &lo + &step;
    }
    // invariant: fits(lo), !fits(hi)
    while &hi - &lo > BigUint::one() {
        let mid = (&lo + &hi) >> 1;
        if fits(&mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

pub fn macaulay_rep(value: &BigUint, n: u32) -> MacaulayRep {
    MacaulayRep::of(value, n)
}

pub fn rep_value(rep: &MacaulayRep) -> BigUint {
    rep.value()
}

/// `A_(n)|_s^t`.
pub fn shift_apply(value: &BigUint, n: u32, shift: Shift) -> BigUint {
    if value.is_zero() {
        return BigUint::zero();
    }
    MacaulayRep::of(value, n).shifted(shift)
}

/// `A_(n)|_s^t` for machine-sized `A`.
pub fn shift_u64(value: u64, n: u32, shift: Shift) -> BigUint {
    shift_apply(&BigUint::from(value), n, shift)
}

/// Checks `A_(m)|_0^s + B_(d)|_s^s = C(m + d + s, d + s)` for a split
/// `A + B = C(m + d, d)`.
pub fn splitting_identity_check(a: &BigUint, b: &BigUint, m: u32, d: u32, s: u32) -> Result<bool> {
    if m == 0 || d == 0 || s == 0 {
        return Err(Error::Precondition("m, d and s must be positive".into()));
    }
    let total = binom((m + d) as i64, d as i64);
    if a + b != total {
        return Err(Error::Precondition(format!(
            "A + B = {} but C({}, {}) = {}",
            a + b,
            m + d,
            d,
            total
        )));
    }
    let s = s as i64;
    let lhs = shift_apply(a, m, Shift::new(0, s)) + shift_apply(b, d, Shift::new(s, s));
    Ok(lhs == binom(m as i64 + d as i64 + s, d as i64 + s))
}

/// `m_(n)|_0^l - m >= m_(n)|_{-1}^{l-1}`.
pub fn shift_excess_check(m: u64, n: u32, l: u32) -> bool {
    let l = l as i64;
    let lhs = BigInt::from(shift_u64(m, n, Shift::new(0, l))) - BigInt::from(m);
    lhs >= BigInt::from(shift_u64(m, n, Shift::new(-1, l - 1)))
}

/// `m_(n)|_{-1}^k >= (m-1)_(n)|_{-1}^k`.
pub fn lowered_shift_monotone_check(m: u64, n: u32, k: u32) -> bool {
    assert!(m >= 1, "lowered_shift_monotone_check needs m >= 1");
    let shift = Shift::new(-1, k as i64);
    shift_u64(m, n, shift) >= shift_u64(m - 1, n, shift)
}

/// Outcome of an exhaustive scan of one of the identities above.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanSummary {
    pub checked: u64,
    /// Parameter tuples for which the check returned false.
    pub failures: Vec<Vec<u64>>,
}

impl ScanSummary {
    pub fn all_ok(&self) -> bool {
        self.failures.is_empty()
    }

    fn record(&mut self, ok: bool, params: impl FnOnce() -> Vec<u64>) {
        self.checked += 1;
        if !ok {
            self.failures.push(params());
        }
    }
}

/// Every split `A + B = C(m + d, d)` for `1 <= m <= m_max`, `1 <= d <= d_max`,
/// `1 <= s <= s_max`. Failure tuples are `(A, B, m, d, s)`.
pub fn splitting_identity_scan(m_max: u32, d_max: u32, s_max: u32) -> ScanSummary {
    let mut summary = ScanSummary::default();
    for m in 1..=m_max {
        for d in 1..=d_max {
            let total = binom((m + d) as i64, d as i64);
            let total_u = total.to_u64().expect("scan totals fit in u64");
            for s in 1..=s_max {
                for a in 0..=total_u {
                    let a_big = BigUint::from(a);
                    let b_big = &total - &a_big;
                    let ok = splitting_identity_check(&a_big, &b_big, m, d, s).unwrap_or(false);
                    summary.record(ok, || vec![a, total_u - a, m as u64, d as u64, s as u64]);
                }
            }
        }
    }
    summary
}

/// [`shift_excess_check`] and [`lowered_shift_monotone_check`] over
/// `1 <= m <= m_max`, `1 <= n <= n_max`, `1 <= l <= l_max`. Failure tuples are
/// `(which, m, n, l)` with `which` 1 for the excess check, 2 for monotonicity.
pub fn shift_inequalities_scan(m_max: u64, n_max: u32, l_max: u32) -> ScanSummary {
    let mut summary = ScanSummary::default();
    for m in 1..=m_max {
        for n in 1..=n_max {
            for l in 1..=l_max {
                summary.record(shift_excess_check(m, n, l), || vec![1, m, n as u64, l as u64]);
                summary.record(lowered_shift_monotone_check(m, n, l), || vec![2, m, n as u64, l as u64]);
            }
        }
    }
    summary
}
