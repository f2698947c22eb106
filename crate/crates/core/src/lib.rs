//! Exact signature distributions of 2-bridge knots.
//!
//! For each crossing number `c`, [`triangle`] builds the row
//! `sigma -> s(c, sigma)` both from a Pascal-like recurrence and from closed
//! binomial column sums, and refuses to return anything when the two
//! disagree. On top of that sit census counts (`|T(c)|`, `|K(c)|`,
//! `|T_p(c)|`), the structural identities of the triangle, exact moments,
//! and Kolmogorov-distance diagnostics against the standard normal.
//!
//! ```
//! use signature_triangle::{triangle, Method};
//!
//! let tri = triangle(10, Method::Both).unwrap();
//! assert_eq!(tri.row(10).unwrap().get(0), 29.into());
//! ```

pub mod error;
pub mod exact;
pub mod golden;
pub mod identities;
pub mod output;
pub mod stats;
pub mod triangle;
pub mod verify;

pub use error::{Error, Result};
pub use exact::{binomial, decimal_render, ExactInt, ExactRational};
pub use golden::golden_table;
pub use identities::{check_identities, Identity, IdentityReport};
pub use stats::{cdf_t, clt_report, k_cdf_bounds, limit_diagnostics, moments, phi, Convention, Normalization};
pub use triangle::{
    census, closed_row, k_count, k_row_even, row, row_recursive, s_closed, t_count, triangle, CensusCounts,
    KWeightedRow, Method, Signature, SignatureRow, Triangle,
};
