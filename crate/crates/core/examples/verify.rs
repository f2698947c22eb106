//! Full self-check, then the same check against a tampered golden table.
//!
//!     cargo run --example verify

use signature_triangle::golden::GOLDEN_C_MAX;
use signature_triangle::verify::{run_verify, run_verify_against};
use signature_triangle::{golden_table, SignatureRow, Triangle};

fn main() -> signature_triangle::Result<()> {
    let report = run_verify(30)?;
    println!("{report}\n");

    let mut rows = golden_table().rows().to_vec();
    let row = &rows[11 - 3];
    let cells: Vec<_> = row.iter().map(|(s, v)| (s.value(), if s.value() == 2 { v + 1 } else { v.clone() })).collect();
    rows[11 - 3] = SignatureRow::from_counts(11, cells)?;
    let tampered = run_verify_against(GOLDEN_C_MAX, &Triangle::from_rows(rows)?)?;
    println!("tampered golden table, exit code {}:", tampered.exit_code());
    for failure in tampered.failures() {
        println!("  {failure}");
    }
    Ok(())
}
