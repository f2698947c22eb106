//! Signature distribution over K(c) at even c, where chiral pairs are
//! counted once and palindromic knots all sit at signature zero.
//!
//!     cargo run --example k_distribution -- 10

use signature_triangle::{k_count, k_row_even};

fn main() -> signature_triangle::Result<()> {
    let c: i64 = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(10);
    let row = k_row_even(c)?;
    for (sigma, weight) in &row.weights {
        println!("k({c}, {sigma:>3}) = {weight}");
    }
    println!("total {} = |K({c})| = {}", row.total(), k_count(c)?);
    Ok(())
}
