//! The signature triangle `s(c, sigma)`: the number of words in the
//! partially-double-counted set `T(c)` whose 2-bridge knot has crossing
//! number `c` and signature `sigma`.
//!
//! Rows are produced two ways that never share code: the four-case
//! recurrence from row `c - 1`, and the closed column sums of binomial
//! coefficients. [`triangle`] with [`Method::Both`] runs them side by side.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{require_c, Error, Result};
use crate::exact::{ExactInt, ExactRational, PascalTable};

/// Knot signature. Always even.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Signature(i64);

impl Signature {
    pub fn new(sigma: i64) -> Result<Self> {
        if sigma % 2 != 0 {
            return Err(Error::OddSignature(sigma));
        }
        Ok(Self(sigma))
    }

    /// Signature `2n` from its half `n`.
    pub fn from_half(n: i64) -> Self {
        Self(2 * n)
    }

    pub fn value(self) -> i64 {
        self.0
    }

    pub fn half(self) -> i64 {
        self.0 / 2
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// One row of the triangle: `sigma -> s(c, sigma)`, nonzero entries only.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignatureRow {
    c: i64,
    counts: BTreeMap<Signature, ExactInt>,
}

impl SignatureRow {
    /// Builds a row from `(sigma, count)` pairs, dropping zeros.
    /// Negative counts are rejected.
    pub fn from_counts<I>(c: i64, cells: I) -> Result<Self>
    where
        I: IntoIterator<Item = (i64, ExactInt)>,
    {
        let mut counts = BTreeMap::new();
        for (sigma, count) in cells {
            let sigma = Signature::new(sigma)?;
            if count.is_negative() {
                return Err(Error::Range(format!("negative count {count} at c = {c}, sigma = {sigma}")));
            }
            if !count.is_zero() {
                counts.insert(sigma, count);
            }
        }
        Ok(Self { c, counts })
    }

    pub fn c(&self) -> i64 {
        self.c
    }

    /// `s(c, sigma)`; zero outside the support, including for odd `sigma`.
    pub fn get(&self, sigma: i64) -> ExactInt {
        self.counts.get(&Signature(sigma)).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Signature, &ExactInt)> + '_ {
        self.counts.iter().map(|(s, v)| (*s, v))
    }

    pub fn len(&self) -> usize {
        self.counts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    pub fn min_signature(&self) -> Option<Signature> {
        self.counts.keys().next().copied()
    }

    pub fn max_signature(&self) -> Option<Signature> {
        self.counts.keys().next_back().copied()
    }

    /// Sum over the row, which is `|T(c)|`.
    pub fn total(&self) -> ExactInt {
        self.counts.values().sum()
    }

    /// `s(c, <= x)`: mass at signatures not exceeding `x`.
    pub fn cumulative(&self, x: f64) -> ExactInt {
        self.counts.iter().take_while(|(s, _)| (s.0 as f64) <= x).map(|(_, v)| v).sum()
    }
}

/// Rows `3..=c_max` in order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Triangle {
    rows: Vec<SignatureRow>,
}

impl Triangle {
    /// Rows must be consecutive starting at `c = 3`.
    pub fn from_rows(rows: Vec<SignatureRow>) -> Result<Self> {
        for (i, row) in rows.iter().enumerate() {
            let expected = 3 + i as i64;
            if row.c != expected {
                return Err(Error::RowMismatch { expected, found: row.c });
            }
        }
        Ok(Self { rows })
    }

    pub fn row(&self, c: i64) -> Option<&SignatureRow> {
        usize::try_from(c - 3).ok().and_then(|i| self.rows.get(i))
    }

    pub fn rows(&self) -> &[SignatureRow] {
        &self.rows
    }

    pub fn c_max(&self) -> i64 {
        2 + self.rows.len() as i64
    }

    #[cfg(test)]
    pub(crate) fn rows_mut(&mut self) -> &mut Vec<SignatureRow> {
        &mut self.rows
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Recursive,
    Closed,
    #[default]
    Both,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Recursive => "recursive",
            Method::Closed => "closed",
            Method::Both => "both",
        })
    }
}

fn pow2(e: i64) -> ExactInt {
    ExactInt::one() << (e as usize)
}

/// `|T(c)| = (2^(c-2) - (-1)^c) / 3`, the Jacobsthal number `J(c-2)`.
pub fn t_count(c: i64) -> Result<ExactInt> {
    require_c(c, 2)?;
    let sign = if c % 2 == 0 { 1 } else { -1 };
    Ok((pow2(c - 2) - sign) / 3)
}

/// `|K(c)|`: 2-bridge knots with `c` crossings, chiral pairs counted once
/// (Ernst-Sumners).
pub fn k_count(c: i64) -> Result<ExactInt> {
    require_c(c, 3)?;
    let n = match c % 4 {
        0 => pow2(c - 3) + pow2((c - 4) / 2),
        1 => pow2(c - 3) + pow2((c - 3) / 2),
        2 => pow2(c - 3) + pow2((c - 4) / 2) - 1,
        _ => pow2(c - 3) + pow2((c - 3) / 2) + 1,
    };
    Ok(n / 3)
}

/// `|T(c)|`, `|K(c)|` and the palindromic count `|T_p(c)|`, tied by
/// `2 |K| = |T| + |T_p|`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusCounts {
    pub c: i64,
    pub t_count: ExactInt,
    pub k_count: ExactInt,
    pub tp_count: ExactInt,
}

impl CensusCounts {
    /// `|T(c)| / (2 |K(c)|)`, which tends to 1.
    pub fn t_over_2k(&self) -> ExactRational {
        ExactRational::new(self.t_count.clone(), &self.k_count * 2)
    }
}

pub fn census(c: i64) -> Result<CensusCounts> {
    let t = t_count(c)?;
    let k = k_count(c)?;
    let tp = &k * 2 - &t;
    Ok(CensusCounts { c, t_count: t, k_count: k, tp_count: tp })
}

/// Closed form for `s(c, sigma)` as a column sum in Pascal's triangle.
pub fn s_closed(c: i64, sigma: i64) -> Result<ExactInt> {
    require_c(c, 3)?;
    let sigma = Signature::new(sigma)?;
    Ok(closed_cell(c, sigma.half(), &crate::exact::binomial))
}

fn closed_cell<F, B>(c: i64, n: i64, choose: &F) -> ExactInt
where
    F: Fn(i64, i64) -> B,
    B: std::borrow::Borrow<ExactInt>,
{
    let m = c / 2;
    let mut acc = ExactInt::zero();
    if c % 2 == 0 {
        // sum_{i=0}^{m-|n|-2} C(2m-4-2i, m+n-2-i)
        for i in 0..=(m - n.abs() - 2) {
            acc += choose(2 * m - 4 - 2 * i, m + n - 2 - i).borrow();
        }
    } else {
        // sum_{i=0}^{min(m+n-3, m-n)} C(2m-3-2i, m+n-3-i), plus one at n = 1
        for i in 0..=(m + n - 3).min(m - n) {
            acc += choose(2 * m - 3 - 2 * i, m + n - 3 - i).borrow();
        }
        if n == 1 {
            acc += 1;
        }
    }
    acc
}

/// Full row by closed form, using a shared binomial table.
fn closed_row_with(c: i64, table: &PascalTable) -> SignatureRow {
    // every nonzero closed-form range forces |sigma| <= c
    let cells = (-(c / 2)..=c / 2).map(|n| (2 * n, closed_cell(c, n, &|a, b| table.get(a, b))));
    SignatureRow::from_counts(c, cells).expect("closed-form cells are even and nonnegative")
}

pub fn closed_row(c: i64) -> Result<SignatureRow> {
    require_c(c, 3)?;
    Ok(closed_row_with(c, &PascalTable::new(c.max(0) as usize)))
}

/// Advances the triangle one row by the four-case recurrence. `c = 3` takes
/// no previous row and yields the trefoil row `{2: 1}`.
pub fn row_recursive(c: i64, previous: Option<&SignatureRow>) -> Result<SignatureRow> {
    require_c(c, 3)?;
    let prev = match (c, previous) {
        (3, None) => return SignatureRow::from_counts(3, [(2, ExactInt::one())]),
        (3, Some(p)) => return Err(Error::RowMismatch { expected: 2, found: p.c }),
        (_, None) => return Err(Error::RowMismatch { expected: c - 1, found: 0 }),
        (_, Some(p)) if p.c != c - 1 => return Err(Error::RowMismatch { expected: c - 1, found: p.c }),
        (_, Some(p)) => p,
    };

    let lo = prev.min_signature().map_or(0, Signature::value) - 4;
    let hi = prev.max_signature().map_or(0, Signature::value) + 4;
    let odd = c % 2 == 1;
    let mut counts = BTreeMap::new();
    for sigma in (lo..=hi).step_by(2) {
        let mut v =
            if odd { prev.get(sigma - 2) + prev.get(sigma - 4) } else { prev.get(sigma + 2) + prev.get(sigma + 4) };
        if odd && sigma == 2 {
            v += 1;
        }
        if !odd && sigma == -2 {
            v -= 1;
        }
        if v.is_negative() {
            return Err(Error::Range(format!("recurrence produced {v} at c = {c}, sigma = {sigma}")));
        }
        if !v.is_zero() {
            counts.insert(Signature(sigma), v);
        }
    }
    Ok(SignatureRow { c, counts })
}

/// Rows `3..=c_max`. With [`Method::Both`] every cell of the two routes is
/// compared and the first disagreement is an [`Error::Integrity`].
pub fn triangle(c_max: i64, method: Method) -> Result<Triangle> {
    require_c(c_max, 3)?;
    let recursive = || -> Result<Vec<SignatureRow>> {
        let mut rows: Vec<SignatureRow> = Vec::new();
        for c in 3..=c_max {
            let row = row_recursive(c, rows.last())?;
            rows.push(row);
        }
        Ok(rows)
    };
    let closed = || -> Vec<SignatureRow> {
        let table = PascalTable::new(c_max as usize);
        (3..=c_max).map(|c| closed_row_with(c, &table)).collect()
    };

    let rows = match method {
        Method::Recursive => recursive()?,
        Method::Closed => closed(),
        Method::Both => {
            let (rec, clo) = std::thread::scope(|s| {
                let handle = s.spawn(closed);
                let rec = recursive();
                (rec, handle.join().expect("closed-form worker panicked"))
            });
            let rec = rec?;
            compare_rows(&rec, &clo)?;
            rec
        }
    };
    Triangle::from_rows(rows)
}

/// The single row `c` by the given method.
pub fn row(c: i64, method: Method) -> Result<SignatureRow> {
    match method {
        Method::Closed => closed_row(c),
        _ => {
            let mut tri = triangle(c, method)?;
            Ok(tri.rows.pop().expect("triangle has at least one row"))
        }
    }
}

fn compare_rows(recursive: &[SignatureRow], closed: &[SignatureRow]) -> Result<()> {
    for (r, k) in recursive.iter().zip(closed) {
        if r == k {
            continue;
        }
        let sigmas = r.counts.keys().chain(k.counts.keys());
        for s in sigmas {
            let (a, b) = (r.get(s.0), k.get(s.0));
            if a != b {
                return Err(Error::Integrity { c: r.c, sigma: s.0, recursive: a, closed: b });
            }
        }
    }
    Ok(())
}

/// Signature distribution over `K(c)` for even `c`, as exact weights.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KWeightedRow {
    pub c: i64,
    pub weights: BTreeMap<Signature, ExactRational>,
}

impl KWeightedRow {
    pub fn total(&self) -> ExactRational {
        self.weights.values().sum()
    }

    /// `k(c, <= x)`.
    pub fn cumulative(&self, x: f64) -> ExactRational {
        self.weights.iter().take_while(|(s, _)| (s.0 as f64) <= x).map(|(_, v)| v).sum()
    }
}

/// `k(c, sigma) = (s(c, sigma) + s_p(c, sigma)) / 2` for even `c`, where
/// every palindromic knot has signature zero.
pub fn k_row_even(c: i64) -> Result<KWeightedRow> {
    require_c(c, 4)?;
    if c % 2 != 0 {
        return Err(Error::OddCrossingNumber(c));
    }
    let row = closed_row(c)?;
    let tp = census(c)?.tp_count;
    let mut weights: BTreeMap<Signature, ExactRational> =
        row.iter().map(|(s, v)| (s, ExactRational::new(v.clone(), 2.into()))).collect();
    *weights.entry(Signature(0)).or_insert_with(ExactRational::zero) += ExactRational::new(tp, 2.into());
    weights.retain(|_, w| !w.is_zero());
    Ok(KWeightedRow { c, weights })
}
