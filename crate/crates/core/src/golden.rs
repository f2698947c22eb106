//! Published reference values, embedded as fixtures.

use crate::exact::ExactInt;
use crate::triangle::{SignatureRow, Triangle};

/// Columns of the printed signature table, sigma = -10..=12.
const GOLDEN_SIGMAS: [i64; 12] = [-10, -8, -6, -4, -2, 0, 2, 4, 6, 8, 10, 12];

/// Printed rows c = 3..=14; zero marks a blank cell.
#[rustfmt::skip]
const GOLDEN_ROWS: [[u32; 12]; 12] = [
    [0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 2, 1, 0, 0, 0, 0],
    [0, 0, 0, 0, 1, 3, 1, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 1, 5, 4, 1, 0, 0, 0],
    [0, 0, 0, 1, 5, 9, 5, 1, 0, 0, 0, 0],
    [0, 0, 0, 0, 1, 6, 15, 14, 6, 1, 0, 0],
    [0, 0, 1, 7, 20, 29, 20, 7, 1, 0, 0, 0],
    [0, 0, 0, 1, 8, 27, 50, 49, 27, 8, 1, 0],
    [0, 1, 9, 35, 76, 99, 76, 35, 9, 1, 0, 0],
    [0, 0, 1, 10, 44, 111, 176, 175, 111, 44, 10, 1],
    [1, 11, 54, 155, 286, 351, 286, 155, 54, 11, 1, 0],
];

/// Largest crossing number in the printed signature table.
pub const GOLDEN_C_MAX: i64 = 14;

/// The printed signature table, rows c = 3..=14.
pub fn golden_table() -> Triangle {
    let rows = GOLDEN_ROWS
        .iter()
        .enumerate()
        .map(|(i, cells)| {
            let pairs = GOLDEN_SIGMAS.iter().zip(cells).map(|(&s, &v)| (s, ExactInt::from(v)));
            SignatureRow::from_counts(3 + i as i64, pairs).expect("fixture cells are valid")
        })
        .collect();
    Triangle::from_rows(rows).expect("fixture rows are consecutive")
}

/// Printed second moments about the row center for even c = 6..=20,
/// verbatim.
pub const PRINTED_EVEN_MOMENTS: [(i64, &str); 8] = [
    (6, "1.6"),
    (8, "3.428571429"),
    (10, "5.364705882"),
    (12, "7.343108504"),
    (14, "9.336263736"),
    (16, "11.33626374"),
    (18, "13.33626374"),
    (20, "15.33626374"),
];

/// Printed second moments about sigma = 3 for odd c = 7..=19, verbatim.
pub const PRINTED_ODD_MOMENTS: [(i64, &str); 7] = [
    (7, "2.454545455"),
    (9, "4.348837209"),
    (11, "6.333333333"),
    (13, "8.332357247"),
    (15, "10.33663004"),
    (17, "12.33635531"),
    (19, "14.33628663"),
];

/// Both printed moment tables, ordered by c.
pub fn printed_moments() -> Vec<(i64, &'static str)> {
    let mut all: Vec<_> = PRINTED_EVEN_MOMENTS.iter().chain(&PRINTED_ODD_MOMENTS).copied().collect();
    all.sort_by_key(|&(c, _)| c);
    all
}

/// Fractional digits carried by a printed decimal string.
pub fn printed_places(printed: &str) -> usize {
    printed.split_once('.').map_or(0, |(_, frac)| frac.len())
}

/// Pads a printed decimal with trailing zeros to `places` fractional digits.
pub fn pad_places(printed: &str, places: usize) -> String {
    let have = printed_places(printed);
    let mut out = printed.to_string();
    if have == 0 && places > 0 {
        out.push('.');
    }
    out.extend(std::iter::repeat_n('0', places.saturating_sub(have)));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn golden_spot_values() {
        let t = golden_table();
        assert_eq!(t.c_max(), GOLDEN_C_MAX);
        assert_eq!(t.row(14).unwrap().get(0), 351.into());
        assert_eq!(t.row(11).unwrap().get(10), 1.into());
        let r5: Vec<_> = t.row(5).unwrap().iter().map(|(s, v)| (s.value(), v.clone())).collect();
        assert_eq!(r5, vec![(2, 2.into()), (4, 1.into())]);
    }

    #[test]
    fn padding() {
        assert_eq!(pad_places("1.6", 9), "1.600000000");
        assert_eq!(pad_places("3.428571429", 9), "3.428571429");
        assert_eq!(pad_places("7", 2), "7.00");
        assert_eq!(printed_places("11.33626374"), 8);
    }
}
