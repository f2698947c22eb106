//! Moments and distribution diagnostics for signature rows.
//!
//! Everything stays exact until a value meets the Gaussian CDF, which is
//! the only floating-point quantity here.

use std::f64::consts::{FRAC_1_SQRT_2, PI};
use std::fmt;

use num_traits::Zero;
use serde::Serialize;

use crate::error::{require_c, Error, Result};
use crate::exact::{decimal_render, to_f64, ExactInt, ExactRational};
use crate::triangle::{census, k_row_even, row, t_count, Method, SignatureRow, Triangle};

/// Fractional digits used when rendering moments.
pub const MOMENT_PLACES: usize = 9;

/// Where a row's second moment is taken.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Convention {
    /// About the row's symmetry center: 0 for even c, 3 for odd c. This is
    /// the quantity in the published variance tables.
    #[default]
    PaperCenter,
    /// About the row mean (the ordinary variance).
    TrueCentral,
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Convention::PaperCenter => "paper_center",
            Convention::TrueCentral => "true_central",
        })
    }
}

/// Symmetry center of row `c`.
pub fn row_center(c: i64) -> i64 {
    if c % 2 == 0 {
        0
    } else {
        3
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MomentReport {
    pub c: i64,
    pub convention: Convention,
    pub center: ExactRational,
    pub mean: ExactRational,
    pub second_moment: ExactRational,
    pub rendered: String,
}

pub fn moments(row: &SignatureRow, convention: Convention) -> Result<MomentReport> {
    if row.is_empty() {
        return Err(Error::EmptyRow(row.c()));
    }
    let total = row.total();
    let mean = ExactRational::new(row.iter().map(|(s, v)| v * s.value()).sum(), total.clone());
    let center = match convention {
        Convention::PaperCenter => ExactRational::from_integer(row_center(row.c()).into()),
        Convention::TrueCentral => mean.clone(),
    };
    let weighted: ExactRational = row
        .iter()
        .map(|(s, v)| {
            let d = ExactRational::from_integer(s.value().into()) - &center;
            &d * &d * ExactRational::from_integer(v.clone())
        })
        .sum();
    let second_moment = weighted / ExactRational::from_integer(total);
    let rendered = decimal_render(&second_moment, MOMENT_PLACES);
    Ok(MomentReport { c: row.c(), convention, center, mean, second_moment, rendered })
}

/// Below this, erf comes from its positive-term series; above, erfc from
/// its continued fraction.
const SERIES_CUTOFF: f64 = 3.0;

/// `erf(x) = 2/sqrt(pi) e^{-x^2} sum_n 2^n x^{2n+1} / (2n+1)!!`, all terms
/// positive, for `0 <= x <= SERIES_CUTOFF`.
fn erf_series(x: f64) -> f64 {
    let x2 = x * x;
    let mut term = x;
    let mut sum = x;
    let mut n = 0.0;
    while term > sum * 1e-17 {
        n += 1.0;
        term *= 2.0 * x2 / (2.0 * n + 1.0);
        sum += term;
    }
    std::f64::consts::FRAC_2_SQRT_PI * (-x2).exp() * sum
}

/// `erfc(x) = e^{-x^2}/sqrt(pi) / (x + (1/2)/(x + 1/(x + (3/2)/(x + ...))))`
/// evaluated bottom-up, for `x >= SERIES_CUTOFF`.
fn erfc_continued_fraction(x: f64) -> f64 {
    let mut f = x;
    for k in (1..=60).rev() {
        f = x + (k as f64 / 2.0) / f;
    }
    (-x * x).exp() / (PI.sqrt() * f)
}

/// Upper tail `1 - Phi(t)` for `t >= 0`.
fn upper_tail(t: f64) -> f64 {
    let x = t * FRAC_1_SQRT_2;
    if x < SERIES_CUTOFF {
        0.5 - 0.5 * erf_series(x)
    } else {
        0.5 * erfc_continued_fraction(x)
    }
}

/// Beyond this the CDF is clamped to exactly 0 or 1.
pub const PHI_CLAMP: f64 = 8.0;

/// Standard normal CDF, absolute error under `1e-12`.
pub fn phi(t: f64) -> Result<f64> {
    if !t.is_finite() {
        return Err(Error::NonFinite(t));
    }
    Ok(if t > PHI_CLAMP {
        1.0
    } else if t < -PHI_CLAMP {
        0.0
    } else if t >= 0.0 {
        1.0 - upper_tail(t)
    } else {
        upper_tail(-t)
    })
}

fn phi_finite(t: f64) -> f64 {
    phi(t).expect("breakpoints are finite")
}

/// `s(c, <= x) / |T(c)|` for a given row.
pub fn row_cdf(row: &SignatureRow, x: f64) -> ExactRational {
    ExactRational::new(row.cumulative(x), row.total())
}

/// `s(c, <= x) / |T(c)|`.
pub fn cdf_t(c: i64, x: f64) -> Result<ExactRational> {
    Ok(row_cdf(&row(c, Method::Both)?, x))
}

/// How signatures are scaled onto the standard normal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Normalization {
    /// `t = sigma / sqrt(c)`.
    #[default]
    SqrtC,
    /// `t = (sigma - center) / sqrt(m2)` with the measured paper-center
    /// second moment `m2`.
    Measured,
}

impl fmt::Display for Normalization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Normalization::SqrtC => "sqrt_c",
            Normalization::Measured => "measured",
        })
    }
}

/// One step of the normalized CDF.
#[derive(Clone, Debug, PartialEq)]
pub struct CltPoint {
    pub sigma: i64,
    pub t: f64,
    /// Left limit `F(t-)`.
    pub f_before: ExactRational,
    /// Value `F(t)` after the jump.
    pub f: ExactRational,
    pub phi: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CltReport {
    pub c: i64,
    pub normalization: Normalization,
    pub points: Vec<CltPoint>,
    pub sup_distance: f64,
}

/// Kolmogorov distance between the normalized signature law of one row and
/// the standard normal, evaluated at both sides of every jump.
pub fn clt_report_for_row(row: &SignatureRow, normalization: Normalization) -> Result<CltReport> {
    let c = row.c();
    let (shift, scale) = match normalization {
        Normalization::SqrtC => (0.0, (c as f64).sqrt()),
        Normalization::Measured => {
            let m2 = moments(row, Convention::PaperCenter)?.second_moment;
            (row_center(c) as f64, to_f64(&m2).sqrt())
        }
    };
    let total = row.total();
    let mut cum = ExactInt::zero();
    let mut points = Vec::with_capacity(row.len());
    let mut sup = 0.0f64;
    for (sigma, count) in row.iter() {
        let t = (sigma.value() as f64 - shift) / scale;
        let f_before = ExactRational::new(cum.clone(), total.clone());
        cum += count;
        let f = ExactRational::new(cum.clone(), total.clone());
        let p = phi_finite(t);
        sup = sup.max((to_f64(&f_before) - p).abs()).max((to_f64(&f) - p).abs());
        points.push(CltPoint { sigma: sigma.value(), t, f_before, f, phi: p });
    }
    Ok(CltReport { c, normalization, points, sup_distance: sup })
}

pub fn clt_report(c: i64) -> Result<CltReport> {
    clt_report_with(c, Normalization::SqrtC)
}

pub fn clt_report_with(c: i64, normalization: Normalization) -> Result<CltReport> {
    clt_report_for_row(&row(c, Method::Both)?, normalization)
}

/// Bracket on `k(c, <= x) / |K(c)|` from the T-side count, plus the exact
/// value at even c.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KCdfBounds {
    pub c: i64,
    pub lower: ExactRational,
    pub upper: ExactRational,
    pub exact: Option<ExactRational>,
}

impl KCdfBounds {
    /// `|T_p(c)| / (2 |K(c)|)`.
    pub fn width(&self) -> ExactRational {
        &self.upper - &self.lower
    }
}

pub fn k_cdf_bounds_for_row(row: &SignatureRow, x: f64) -> Result<KCdfBounds> {
    let c = row.c();
    let counts = census(c)?;
    let two_k: ExactInt = &counts.k_count * 2;
    let below = row.cumulative(x);
    let lower = ExactRational::new(below.clone(), two_k.clone());
    let upper = ExactRational::new(below + &counts.tp_count, two_k);
    let exact = if c % 2 == 0 && c >= 4 {
        let k_row = k_row_even(c)?;
        Some(k_row.cumulative(x) / ExactRational::from_integer(counts.k_count.clone()))
    } else {
        None
    };
    Ok(KCdfBounds { c, lower, upper, exact })
}

pub fn k_cdf_bounds(c: i64, x: f64) -> Result<KCdfBounds> {
    require_c(c, 3)?;
    k_cdf_bounds_for_row(&row(c, Method::Both)?, x)
}

/// Finite-c views of three limits: `2^c / |T(c)| -> 12`,
/// `|T(c)| / (2|K(c)|) -> 1`, and the gap `c - E[(sigma - center)^2]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LimitRow {
    pub c: i64,
    pub two_pow_over_t: ExactRational,
    pub t_over_2k: ExactRational,
    pub moment_gap: ExactRational,
}

pub fn limit_rows(tri: &Triangle, c_min: i64) -> Result<Vec<LimitRow>> {
    tri.rows()
        .iter()
        .filter(|r| r.c() >= c_min)
        .map(|r| {
            let c = r.c();
            let t = t_count(c)?;
            let two_pow = ExactInt::from(1u8) << (c as usize);
            let m2 = moments(r, Convention::PaperCenter)?.second_moment;
            Ok(LimitRow {
                c,
                two_pow_over_t: ExactRational::new(two_pow, t),
                t_over_2k: census(c)?.t_over_2k(),
                moment_gap: ExactRational::from_integer(c.into()) - m2,
            })
        })
        .collect()
}

/// Limit diagnostics for `6 <= c <= c_max`.
pub fn limit_diagnostics(c_max: i64) -> Result<Vec<LimitRow>> {
    require_c(c_max, 6)?;
    limit_rows(&crate::triangle::triangle(c_max, Method::Both)?, 6)
}
