//! Exact second moments under both centering conventions, and the gap
//! c - E[(sigma - center)^2].
//!
//!     cargo run --example moments

use signature_triangle::exact::{decimal_render, ExactRational};
use signature_triangle::{moments, triangle, Convention, Method};

fn main() -> signature_triangle::Result<()> {
    let tri = triangle(60, Method::Both)?;
    println!("{:>3}  {:>14}  {:>14}  {:>12}", "c", "paper_center", "true_central", "gap");
    for row in tri.rows().iter().filter(|r| r.c() >= 6) {
        let centered = moments(row, Convention::PaperCenter)?;
        let central = moments(row, Convention::TrueCentral)?;
        let gap = ExactRational::from_integer(row.c().into()) - &centered.second_moment;
        println!(
            "{:>3}  {:>14}  {:>14}  {:>12}",
            row.c(),
            centered.rendered,
            central.rendered,
            decimal_render(&gap, 9)
        );
    }
    Ok(())
}
