//! Kolmogorov distance between the normalized signature distribution and
//! the standard normal, with the K(c)-side bracket width.
//!
//!     cargo run --release --example clt

use signature_triangle::exact::to_f64;
use signature_triangle::stats::{clt_report_for_row, k_cdf_bounds_for_row};
use signature_triangle::{triangle, Method, Normalization};

fn main() -> signature_triangle::Result<()> {
    let cs = [10, 20, 40, 80, 160, 320];
    let tri = triangle(*cs.iter().max().unwrap(), Method::Both)?;
    println!("{:>4}  {:>12}  {:>12}  {:>12}", "c", "sup (sqrt c)", "sup (meas.)", "K width");
    for c in cs {
        let row = tri.row(c).unwrap();
        let plain = clt_report_for_row(row, Normalization::SqrtC)?;
        let measured = clt_report_for_row(row, Normalization::Measured)?;
        let width = k_cdf_bounds_for_row(row, 0.0)?.width();
        println!("{c:>4}  {:>12.6}  {:>12.6}  {:>12.3e}", plain.sup_distance, measured.sup_distance, to_f64(&width));
    }
    Ok(())
}
