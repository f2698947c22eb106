//! |T(c)|, |K(c)| and the palindromic count |T_p(c)|, and how fast
//! |T(c)| / (2|K(c)|) and 2^c / |T(c)| approach their limits.
//!
//!     cargo run --example census

use signature_triangle::exact::decimal_render;
use signature_triangle::{census, limit_diagnostics};

fn main() -> signature_triangle::Result<()> {
    for c in 3..=12 {
        let k = census(c)?;
        println!("c={c:>2}  T={:>4}  K={:>4}  Tp={:>3}", k.t_count, k.k_count, k.tp_count);
    }
    println!();
    for row in limit_diagnostics(40)?.iter().filter(|r| r.c % 8 == 0) {
        println!(
            "c={:>2}  2^c/T = {}  T/(2K) = {}",
            row.c,
            decimal_render(&row.two_pow_over_t, 9),
            decimal_render(&row.t_over_2k, 9)
        );
    }
    Ok(())
}
