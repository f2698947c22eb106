//! Structural identities of the signature triangle, checked row by row.

use std::fmt;

use serde::Serialize;

use crate::exact::{binomial, ExactInt};
use crate::triangle::{t_count, SignatureRow, Triangle};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Identity {
    /// Row total equals `|T(c)|`.
    RowSum,
    /// Even c: `s(c, sigma) = s(c, -sigma)`.
    EvenReflection,
    /// Odd c: `s(c, 2) = s(c, 4) + 1`.
    OddTwoFour,
    /// Odd c: `s(c, sigma) = s(c, 6 - sigma)` for `sigma >= 6` or `sigma <= 0`.
    OddReflection,
    /// `s(2m+1, sigma) + s(2m+2, sigma) = C(2m-1, m-1+sigma/2)`.
    OddEvenPascal,
    /// `s(2m, sigma) + s(2m+1, sigma) = C(2m-2, m-2+sigma/2)`.
    EvenOddPascal,
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Identity::RowSum => "row_sum",
            Identity::EvenReflection => "even_reflection",
            Identity::OddTwoFour => "odd_two_four",
            Identity::OddReflection => "odd_reflection",
            Identity::OddEvenPascal => "odd_even_pascal",
            Identity::EvenOddPascal => "even_odd_pascal",
        })
    }
}

/// Outcome of one identity on one row (or row pair, keyed by the lower c).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub identity: Identity,
    pub c: i64,
    /// Signatures where the identity fails; empty means pass.
    pub failures: Vec<i64>,
}

impl IdentityCheck {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub checks: Vec<IdentityCheck>,
}

impl IdentityReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(IdentityCheck::passed)
    }

    /// `(identity, c, sigma)` for every failing cell. Row-sum failures carry
    /// `sigma = None`.
    pub fn failures(&self) -> impl Iterator<Item = (Identity, i64, Option<i64>)> + '_ {
        self.checks.iter().flat_map(|chk| {
            let cells: Vec<_> = if chk.identity == Identity::RowSum {
                (!chk.passed()).then_some((chk.identity, chk.c, None)).into_iter().collect()
            } else {
                chk.failures.iter().map(|&s| (chk.identity, chk.c, Some(s))).collect()
            };
            cells
        })
    }

    pub fn count(&self, identity: Identity) -> usize {
        self.checks.iter().filter(|chk| chk.identity == identity).count()
    }
}

/// Even signatures wide enough to cover the support of rows up to `c + 2`.
fn sigma_window(c: i64) -> impl Iterator<Item = i64> {
    (-(c + 4)..=(c + 4)).filter(|s| s % 2 == 0)
}

fn check<F>(identity: Identity, c: i64, sigmas: impl Iterator<Item = i64>, holds: F) -> IdentityCheck
where
    F: Fn(i64) -> bool,
{
    IdentityCheck { identity, c, failures: sigmas.filter(|&s| !holds(s)).collect() }
}

fn row_checks(row: &SignatureRow) -> Vec<IdentityCheck> {
    let c = row.c();
    let mut out = Vec::new();

    let sum_ok = t_count(c).map(|t| t == row.total()).unwrap_or(false);
    out.push(IdentityCheck { identity: Identity::RowSum, c, failures: if sum_ok { vec![] } else { vec![0] } });

    if c % 2 == 0 {
        out.push(check(Identity::EvenReflection, c, sigma_window(c), |s| row.get(s) == row.get(-s)));
    } else {
        out.push(check(Identity::OddTwoFour, c, std::iter::once(2), |_| row.get(2) == row.get(4) + 1));
        out.push(check(Identity::OddReflection, c, sigma_window(c).filter(|&s| s >= 6 || s <= 0), |s| {
            row.get(s) == row.get(6 - s)
        }));
    }
    out
}

fn pair_check(lower: &SignatureRow, upper: &SignatureRow) -> IdentityCheck {
    let c = lower.c();
    // lower = 2m+1 pairs with C(2m-1, .), lower = 2m pairs with C(2m-2, .)
    let (identity, top, shift) = if c % 2 == 1 {
        let m = (c - 1) / 2;
        (Identity::OddEvenPascal, 2 * m - 1, m - 1)
    } else {
        let m = c / 2;
        (Identity::EvenOddPascal, 2 * m - 2, m - 2)
    };
    check(identity, c, sigma_window(c), |s| {
        let sum: ExactInt = lower.get(s) + upper.get(s);
        sum == binomial(top, shift + s / 2)
    })
}

/// Runs every applicable identity on every row and consecutive row pair.
pub fn check_identities(tri: &Triangle) -> IdentityReport {
    let rows = tri.rows();
    let mut checks: Vec<IdentityCheck> = rows.iter().flat_map(row_checks).collect();
    checks.extend(rows.windows(2).map(|w| pair_check(&w[0], &w[1])));
    IdentityReport { checks }
}
