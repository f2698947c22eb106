//! End-to-end self check: golden rows, the two construction routes against
//! each other, census identities, triangle identities and the printed
//! moment tables.

use std::fmt;

use num_traits::Signed;
use serde::Serialize;

use crate::error::{require_c, Result};
use crate::exact::is_rounding_tie;
use crate::golden::{golden_table, printed_moments, printed_places, GOLDEN_C_MAX};
use crate::identities::check_identities;
use crate::stats::{moments, Convention, MOMENT_PLACES};
use crate::triangle::{census, triangle, Method, Triangle};

pub const DEFAULT_VERIFY_C_MAX: i64 = 50;

/// Named failure location.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub check: String,
    pub c: i64,
    pub sigma: Option<i64>,
    pub detail: String,
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} c={}", self.check, self.c)?;
        if let Some(s) = self.sigma {
            write!(f, " sigma={s}")?;
        }
        if !self.detail.is_empty() {
            write!(f, ": {}", self.detail)?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: String,
    /// Number of individual comparisons made.
    pub cases: usize,
    pub failures: Vec<Failure>,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// A printed moment that disagrees with the exact value from the triangle.
/// Reported but not counted against the exit status: both construction
/// routes agree on the rows it is derived from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PublishedDiscrepancy {
    pub c: i64,
    pub printed: String,
    pub computed: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub c_max: i64,
    pub checks: Vec<CheckResult>,
    pub discrepancies: Vec<PublishedDiscrepancy>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckResult::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Failure> {
        self.checks.iter().flat_map(|c| &c.failures)
    }

    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            0
        } else {
            1
        }
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "verify c_max={}", self.c_max)?;
        for check in &self.checks {
            let status = if check.passed() { "PASS" } else { "FAIL" };
            writeln!(f, "{status} {} ({} cases)", check.name, check.cases)?;
            for failure in &check.failures {
                writeln!(f, "  {failure}")?;
            }
        }
        for d in &self.discrepancies {
            writeln!(f, "NOTE printed moment c={} is {}, exact value renders as {}", d.c, d.printed, d.computed)?;
        }
        write!(f, "{}", if self.passed() { "all checks passed" } else { "verification FAILED" })
    }
}

/// Runs every check against the built-in golden table.
pub fn run_verify(c_max: i64) -> Result<VerifyReport> {
    run_verify_against(c_max, &golden_table())
}

/// Same as [`run_verify`] with a caller-supplied golden table.
pub fn run_verify_against(c_max: i64, golden: &Triangle) -> Result<VerifyReport> {
    require_c(c_max, GOLDEN_C_MAX)?;
    let recursive = triangle(c_max, Method::Recursive)?;
    let closed = triangle(c_max, Method::Closed)?;

    let mut checks = vec![
        golden_check("golden_table_recursive", golden, &recursive),
        golden_check("golden_table_closed", golden, &closed),
        oracle_check(&recursive, &closed),
        census_check(c_max)?,
    ];
    checks.extend(identity_checks(&recursive));
    let (moment_check, tie_check, discrepancies) = moment_checks(&recursive)?;
    checks.push(moment_check);
    checks.push(tie_check);

    Ok(VerifyReport { c_max, checks, discrepancies })
}

fn sigma_span(c: i64) -> impl Iterator<Item = i64> {
    (-(c / 2 + 2)..=(c / 2 + 2)).map(|n| 2 * n)
}

fn golden_check(name: &str, golden: &Triangle, computed: &Triangle) -> CheckResult {
    let mut cases = 0;
    let mut failures = Vec::new();
    for g in golden.rows() {
        let c = g.c();
        let Some(row) = computed.row(c) else {
            failures.push(Failure { check: name.into(), c, sigma: None, detail: "row not computed".into() });
            continue;
        };
        for sigma in sigma_span(c) {
            cases += 1;
            let (want, got) = (g.get(sigma), row.get(sigma));
            if want != got {
                failures.push(Failure {
                    check: name.into(),
                    c,
                    sigma: Some(sigma),
                    detail: format!("golden {want}, computed {got}"),
                });
            }
        }
    }
    CheckResult { name: name.into(), cases, failures }
}

fn oracle_check(recursive: &Triangle, closed: &Triangle) -> CheckResult {
    let name = "oracle_equivalence";
    let mut cases = 0;
    let mut failures = Vec::new();
    for (r, k) in recursive.rows().iter().zip(closed.rows()) {
        for sigma in sigma_span(r.c()) {
            cases += 1;
            let (a, b) = (r.get(sigma), k.get(sigma));
            if a != b {
                failures.push(Failure {
                    check: name.into(),
                    c: r.c(),
                    sigma: Some(sigma),
                    detail: format!("recurrence {a}, closed form {b}"),
                });
            }
        }
    }
    CheckResult { name: name.into(), cases, failures }
}

fn census_check(c_max: i64) -> Result<CheckResult> {
    let name = "census_identity";
    let mut failures = Vec::new();
    for c in 3..=c_max {
        let k = census(c)?;
        if k.tp_count.is_negative() || &k.k_count * 2 != &k.t_count + &k.tp_count {
            failures.push(Failure {
                check: name.into(),
                c,
                sigma: None,
                detail: format!("T={} K={} Tp={}", k.t_count, k.k_count, k.tp_count),
            });
        }
    }
    Ok(CheckResult { name: name.into(), cases: (c_max - 2) as usize, failures })
}

fn identity_checks(tri: &Triangle) -> Vec<CheckResult> {
    use crate::identities::Identity::*;
    let report = check_identities(tri);
    let groups = [
        ("row_sum", vec![RowSum]),
        ("symmetry", vec![EvenReflection, OddTwoFour, OddReflection]),
        ("consecutive_rows_pascal", vec![OddEvenPascal, EvenOddPascal]),
    ];
    groups
        .into_iter()
        .map(|(name, ids)| {
            let cases = report.checks.iter().filter(|c| ids.contains(&c.identity)).count();
            let failures = report
                .failures()
                .filter(|(id, _, _)| ids.contains(id))
                .map(|(id, c, sigma)| Failure { check: name.into(), c, sigma, detail: id.to_string() })
                .collect();
            CheckResult { name: name.into(), cases, failures }
        })
        .collect()
}

fn moment_checks(tri: &Triangle) -> Result<(CheckResult, CheckResult, Vec<PublishedDiscrepancy>)> {
    let mut table = CheckResult { name: "moment_tables".into(), cases: 0, failures: vec![] };
    let mut ties = CheckResult { name: "rounding_tie_free".into(), cases: 0, failures: vec![] };
    let mut discrepancies = Vec::new();

    for (c, printed) in printed_moments() {
        let Some(row) = tri.row(c) else { continue };
        let report = moments(row, Convention::PaperCenter)?;

        ties.cases += 1;
        if is_rounding_tie(&report.second_moment, MOMENT_PLACES) {
            ties.failures.push(Failure {
                check: ties.name.clone(),
                c,
                sigma: None,
                detail: format!("{} is a rounding tie", report.second_moment),
            });
        }

        let computed = crate::exact::decimal_render(&report.second_moment, printed_places(printed));
        if computed == printed {
            table.cases += 1;
        } else if c <= GOLDEN_C_MAX {
            table.cases += 1;
            table.failures.push(Failure {
                check: table.name.clone(),
                c,
                sigma: None,
                detail: format!("printed {printed}, computed {computed}"),
            });
        } else {
            discrepancies.push(PublishedDiscrepancy { c, printed: printed.into(), computed });
        }
    }
    Ok((table, ties, discrepancies))
}
