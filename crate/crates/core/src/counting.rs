//! Exact counts of mesosome-free binary words.
//!
//! Closed forms are generic over the count type so callers can pick a
//! machine integer or an arbitrary-precision one. Every division in a closed
//! form is checked to be exact.

use std::fmt::{Debug, Display};

use num_integer::Integer;
use num_traits::FromPrimitive;
use serde::Serialize;

use crate::classifier::is_mesosome_free;
use crate::error::{Error, Result};
use crate::word::enumerate_words;

/// An exact, nonnegative-valued integer usable as a count.
///
/// Implemented for every unsigned primitive and for `BigUint`. Narrow types
/// overflow (and panic) for large arguments.
pub trait Count: Integer + Clone + FromPrimitive + Debug + Display {}

impl<T: Integer + Clone + FromPrimitive + Debug + Display> Count for T {}

fn lift<T: Count>(v: u64) -> T {
    T::from_u64(v).unwrap_or_else(|| panic!("{v} does not fit the count type"))
}

/// Evaluates `(positive - negative) / divisor`, asserting the numerator is
/// nonnegative and divisible.
fn exact_quotient<T: Count>(positive: T, negative: T, divisor: u64) -> T {
    assert!(positive >= negative, "closed form numerator went negative");
    let (q, r) = (positive - negative).div_rem(&lift(divisor));
    assert!(
        r.is_zero(),
        "closed form numerator not divisible by {divisor}"
    );
    q
}

/// `a·k³ + b·k² + c·k` for nonnegative coefficients.
fn cubic<T: Count>(k: &T, a: u64, b: u64, c: u64) -> T {
    let k2 = k.clone() * k.clone();
    let k3 = k2.clone() * k.clone();
    lift::<T>(a) * k3 + lift::<T>(b) * k2 + lift::<T>(c) * k.clone()
}

/// Number of pairs `(i, k)` with `i, k >= 1`, `i < k`, `k` odd and
/// `i + k = r`. This is `floor(r / 4)`.
pub fn f<T: Count>(r: u64) -> T {
    lift(r / 4)
}

/// `sum_{r=0}^{n} f(r) f(n - r)` by direct summation: the number of
/// four-run words `0^i 1^j 0^k 1^l` of length `n` with `i < k`, `j > l`,
/// `j, k` odd.
pub fn g<T: Count>(n: u64) -> T {
    (0..=n).fold(T::zero(), |acc, r| acc + f::<T>(r) * f::<T>(n - r))
}

/// `g(n)` from its four cubic closed forms by residue of `n` mod 4.
pub fn g_closed_form<T: Count>(n: u64) -> T {
    let q: T = lift(n / 4);
    match n % 4 {
        // 2q³/3 - 3q²/2 + 5q/6
        0 => exact_quotient(cubic(&q, 4, 0, 5), cubic(&q, 0, 9, 0), 6),
        // 2q³/3 - q² + q/3
        1 => exact_quotient(cubic(&q, 2, 0, 1), cubic(&q, 0, 3, 0), 3),
        // 2q³/3 - q²/2 - q/6
        2 => exact_quotient(cubic(&q, 4, 0, 0), cubic(&q, 0, 3, 1), 6),
        // 2q³/3 - 2q/3
        _ => exact_quotient(cubic(&q, 2, 0, 0), cubic(&q, 0, 0, 2), 3),
    }
}

/// Number of mesosome-free words of length `n` with three runs starting
/// with 0: `n(n-2)/4` for even `n`, `(n-1)²/4` for odd `n`.
pub fn three_run_count<T: Count>(n: u64) -> T {
    if n < 3 {
        return T::zero();
    }
    let n_t: T = lift(n);
    if n.is_multiple_of(2) {
        exact_quotient(n_t.clone() * (n_t - lift(2)), T::zero(), 4)
    } else {
        let m = n_t - T::one();
        exact_quotient(m.clone() * m, T::zero(), 4)
    }
}

/// Per-run-count tally of mesosome-free words of length `n` that start
/// with 0. `total` counts both starting symbols.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CountBreakdown<T> {
    pub n: u64,
    pub one_run: T,
    pub two_runs: T,
    pub three_runs: T,
    pub four_runs_case_a: T,
    pub four_runs_case_b: T,
    pub five_plus_runs: T,
    pub total: T,
}

impl<T: Count> CountBreakdown<T> {
    pub fn subtotal(&self) -> T {
        self.one_run.clone()
            + self.two_runs.clone()
            + self.three_runs.clone()
            + self.four_runs_case_a.clone()
            + self.four_runs_case_b.clone()
            + self.five_plus_runs.clone()
    }
}

/// Breakdown of `m(n)` by run count. For `n = 0` all subtotals are zero and
/// `total` is 1 (the empty word).
pub fn count_by_runs<T: Count>(n: u64) -> CountBreakdown<T> {
    let when = |cond: bool, v: T| if cond { v } else { T::zero() };
    let mut b = CountBreakdown {
        n,
        one_run: when(n >= 1, T::one()),
        two_runs: when(n >= 2, lift(n.saturating_sub(1))),
        three_runs: three_run_count(n),
        four_runs_case_a: when(n >= 4, lift(n.saturating_sub(3))),
        four_runs_case_b: g(n),
        five_plus_runs: when(n >= 5, T::one()),
        total: T::zero(),
    };
    b.total = if n == 0 {
        T::one()
    } else {
        lift::<T>(2) * b.subtotal()
    };
    b
}

const SMALL_M: [u64; 5] = [1, 2, 4, 8, 14];

/// `m(n)`, the number of mesosome-free binary words of length `n`.
///
/// Uses the four cubics in `k = floor(n/4)` for `n >= 5` and the tabulated
/// values below that (the `n = 4k` cubic gives 16 at `n = 4`, not 14).
pub fn m_closed_form<T: Count>(n: u64) -> T {
    if n < 5 {
        return lift(SMALL_M[n as usize]);
    }
    let k: T = lift(n / 4);
    match n % 4 {
        0 => exact_quotient(cubic(&k, 4, 15, 41), lift(12), 3),
        1 => exact_quotient(cubic(&k, 4, 18, 50), T::zero(), 3),
        2 => exact_quotient(cubic(&k, 4, 21, 59) + lift(12), T::zero(), 3),
        _ => exact_quotient(cubic(&k, 4, 24, 68) + lift(30), T::zero(), 3),
    }
}

/// Upper bound on word lengths for exhaustive enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerationCap(pub usize);

impl EnumerationCap {
    pub const DEFAULT: EnumerationCap = EnumerationCap(24);
    pub const ENV_VAR: &'static str = "MESOLIB_ENUM_CAP";

    /// Reads `MESOLIB_ENUM_CAP`, falling back to the default when unset.
    /// Returns `None` if the variable is set but not a nonnegative integer.
    pub fn from_env() -> Option<Self> {
        match std::env::var(Self::ENV_VAR) {
            Ok(v) => v.trim().parse().ok().map(EnumerationCap),
            Err(_) => Some(Self::DEFAULT),
        }
    }

    pub fn check(&self, n: usize) -> Result<()> {
        if n > self.0 {
            Err(Error::BoundExceeded {
                requested: n,
                cap: self.0,
            })
        } else {
            Ok(())
        }
    }
}

impl Default for EnumerationCap {
    fn default() -> Self {
        Self::DEFAULT
    }
}

/// `m(n)` by testing all `2^n` words with the classifier.
pub fn m_enumerate(n: usize, cap: EnumerationCap) -> Result<u64> {
    cap.check(n)?;
    Ok(enumerate_words(n).filter(is_mesosome_free).count() as u64)
}
