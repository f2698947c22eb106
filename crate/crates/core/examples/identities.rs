//! Check row sums, the reflection symmetries and the consecutive-row
//! binomial identities on a large triangle.
//!
//!     cargo run --release --example identities -- 200

use signature_triangle::{check_identities, triangle, Method};

fn main() -> signature_triangle::Result<()> {
    let c_max: i64 = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(100);
    let tri = triangle(c_max, Method::Both)?;
    let report = check_identities(&tri);
    println!("{} identity checks over c = 3..={c_max}", report.checks.len());
    let failures: Vec<_> = report.failures().collect();
    if failures.is_empty() {
        println!("all identities hold");
    } else {
        for (identity, c, sigma) in failures {
            println!("FAIL {identity} c={c} sigma={sigma:?}");
        }
        std::process::exit(1);
    }
    Ok(())
}
