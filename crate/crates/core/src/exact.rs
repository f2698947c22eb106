//! Exact integer and rational arithmetic.
//!
//! Counts grow like `2^(c-2)`, so every count is a [`BigInt`] and every
//! ratio a [`BigRational`] kept in lowest terms with a positive denominator.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision signed integer.
pub type ExactInt = BigInt;

/// Reduced fraction of two [`ExactInt`]s.
pub type ExactRational = BigRational;

/// `n choose k`, with the vanishing convention: zero whenever `n < 0`,
/// `k < 0` or `k > n`.
pub fn binomial(n: i64, k: i64) -> ExactInt {
    if n < 0 || k < 0 || k > n {
        return ExactInt::zero();
    }
    let k = k.min(n - k);
    // running product stays integral: acc * (n-k+i) / i = C(n-k+i, i)
    let mut acc = ExactInt::one();
    for i in 1..=k {
        acc *= n - k + i;
        acc /= i;
    }
    acc
}

/// Sum of `binomial(top(i), bottom(i))` for `i` in `0..=upper`; an empty
/// range (`upper < 0`) sums to zero.
pub fn column_sum(upper: i64, top: impl Fn(i64) -> i64, bottom: impl Fn(i64) -> i64) -> ExactInt {
    (0..=upper).map(|i| binomial(top(i), bottom(i))).sum()
}

/// Pascal's triangle rows `0..=n_max`, for evaluating many column sums
/// without recomputing each coefficient.
#[derive(Debug, Clone)]
pub struct PascalTable {
    rows: Vec<Vec<ExactInt>>,
    zero: ExactInt,
}

impl PascalTable {
    pub fn new(n_max: usize) -> Self {
        let mut rows: Vec<Vec<ExactInt>> = Vec::with_capacity(n_max + 1);
        for n in 0..=n_max {
            let mut row = Vec::with_capacity(n + 1);
            row.push(ExactInt::one());
            if n > 0 {
                let prev = &rows[n - 1];
                for k in 1..n {
                    row.push(&prev[k - 1] + &prev[k]);
                }
                row.push(ExactInt::one());
            }
            rows.push(row);
        }
        Self { rows, zero: ExactInt::zero() }
    }

    pub fn n_max(&self) -> usize {
        self.rows.len() - 1
    }

    /// Same convention as [`binomial`]. Panics if `n` exceeds the table.
    pub fn get(&self, n: i64, k: i64) -> &ExactInt {
        if n < 0 || k < 0 || k > n {
            return &self.zero;
        }
        &self.rows[n as usize][k as usize]
    }
}

/// Builds `num / den`. Panics if `den` is zero.
pub fn ratio(num: impl Into<ExactInt>, den: impl Into<ExactInt>) -> ExactRational {
    ExactRational::new(num.into(), den.into())
}

/// Fixed-point decimal expansion of `q` with exactly `places` fractional
/// digits, rounding half away from zero.
pub fn decimal_render(q: &ExactRational, places: usize) -> String {
    let scale = num_traits::pow(ExactInt::from(10u8), places);
    let (quot, rem) = (q.numer().abs() * &scale).div_rem(q.denom());
    let rounded = if rem * 2u8 >= *q.denom() { quot + 1u8 } else { quot };

    let digits = rounded.to_string();
    let digits =
        if digits.len() <= places { format!("{}{digits}", "0".repeat(places + 1 - digits.len())) } else { digits };
    let (int_part, frac_part) = digits.split_at(digits.len() - places);

    let sign = if q.is_negative() && !rounded_is_zero(&digits) { "-" } else { "" };
    if places == 0 {
        format!("{sign}{int_part}")
    } else {
        format!("{sign}{int_part}.{frac_part}")
    }
}

fn rounded_is_zero(digits: &str) -> bool {
    digits.bytes().all(|b| b == b'0')
}

/// True when `q` sits exactly on a rounding tie at `places` fractional digits.
pub fn is_rounding_tie(q: &ExactRational, places: usize) -> bool {
    let scale = num_traits::pow(ExactInt::from(10u8), places);
    let rem = (q.numer().abs() * scale).mod_floor(q.denom());
    rem * 2u8 == *q.denom()
}

/// Nearest `f64` to `q`, computed from the exact value so huge numerators
/// and denominators do not overflow.
pub fn to_f64(q: &ExactRational) -> f64 {
    use num_traits::ToPrimitive;
    if let Some(v) = q.to_f64() {
        if v.is_finite() {
            return v;
        }
    }
    // fall back to a 20-digit decimal expansion
    decimal_render(q, 20).parse().unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> ExactRational {
        ratio(n, d)
    }

    #[test]
    fn binomial_small_values() {
        assert_eq!(binomial(6, 3), 20.into());
        assert_eq!(binomial(0, 0), 1.into());
        assert_eq!(binomial(5, 2), 10.into());
        assert_eq!(binomial(-1, 0), 0.into());
        assert_eq!(binomial(4, -1), 0.into());
        assert_eq!(binomial(4, 5), 0.into());
    }

    #[test]
    fn binomial_large() {
        let v = binomial(100, 50);
        assert_eq!(v.to_string(), "100891344545564193334812497256");
    }

    #[test]
    fn pascal_rule_with_vanishing_convention() {
        for n in 1..=64 {
            for k in -2..=n + 2 {
                assert_eq!(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn binomial_symmetry() {
        for n in 0..=40 {
            for k in 0..=n {
                assert_eq!(binomial(n, k), binomial(n, n - k));
            }
        }
    }

    #[test]
    fn pascal_table_matches_binomial() {
        let table = PascalTable::new(40);
        for n in -2..=40 {
            for k in -2..=n + 2 {
                assert_eq!(*table.get(n, k), binomial(n, k));
            }
        }
    }

    #[test]
    fn empty_column_sum_is_zero() {
        assert!(column_sum(-1, |i| i, |i| i).is_zero());
        assert_eq!(column_sum(3, |i| 6 - 2 * i, |i| 3 - i), 29.into());
    }

    #[test]
    fn render_table_values() {
        assert_eq!(decimal_render(&q(24, 7), 9), "3.428571429");
        assert_eq!(decimal_render(&q(456, 85), 9), "5.364705882");
        assert_eq!(decimal_render(&q(8, 5), 9), "1.600000000");
        assert_eq!(decimal_render(&q(8, 5), 1), "1.6");
    }

    #[test]
    fn render_rounding_and_sign() {
        assert_eq!(decimal_render(&q(1, 2), 0), "1");
        assert_eq!(decimal_render(&q(-1, 2), 0), "-1");
        assert_eq!(decimal_render(&q(5, 1000), 2), "0.01");
        assert_eq!(decimal_render(&q(-5, 1000), 2), "-0.01");
        assert_eq!(decimal_render(&q(-1, 1000), 2), "0.00");
        assert_eq!(decimal_render(&q(-7, 3), 3), "-2.333");
        assert_eq!(decimal_render(&q(1, 3), 0), "0");
        assert_eq!(decimal_render(&q(123, 1), 2), "123.00");
    }

    #[test]
    fn ties_detected() {
        assert!(is_rounding_tie(&q(1, 8), 2));
        assert!(!is_rounding_tie(&q(1, 3), 9));
    }

    #[test]
    fn rationals_stay_reduced() {
        let a = q(6, -4);
        assert_eq!(*a.numer(), (-3).into());
        assert_eq!(*a.denom(), 2.into());
        let b = a.clone() + q(3, 2);
        assert!(b.is_zero());
        assert_eq!(*b.denom(), 1.into());
    }

    #[test]
    fn to_f64_huge() {
        let big = ExactInt::from(2u8).pow(2000u32);
        let v = to_f64(&ExactRational::new(big.clone() * 3, big));
        assert_eq!(v, 3.0);
    }
}
