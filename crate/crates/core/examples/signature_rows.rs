//! Build the signature triangle two ways and print a few rows.
//!
//!     cargo run --example signature_rows -- 16

use signature_triangle::{row_recursive, s_closed, triangle, Method};

fn main() -> signature_triangle::Result<()> {
    let c_max: i64 = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(14);

    // Method::Both checks every cell of the recurrence against the closed form.
    let tri = triangle(c_max, Method::Both)?;
    for row in tri.rows() {
        let cells: Vec<String> = row.iter().map(|(s, v)| format!("{s}:{v}")).collect();
        println!("c={:>3}  {}", row.c(), cells.join(" "));
    }

    // single cells and single recurrence steps
    println!("s(10, 0) = {}", s_closed(10, 0)?);
    let r3 = row_recursive(3, None)?;
    let r4 = row_recursive(4, Some(&r3))?;
    println!("row 4 from row 3: {:?}", r4.iter().map(|(s, v)| (s.value(), v.to_string())).collect::<Vec<_>>());
    Ok(())
}
