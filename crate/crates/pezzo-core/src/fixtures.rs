//! Embedded reference data and parsers for its line-oriented format.
//!
//! Every fixture is text with `#` comment lines and one record per line:
//!
//! ```text
//! LABEL : tok tok tok ... ;
//! ```
//!
//! Tokens are either integers or line labels depending on the file.  The
//! embedded copies keep the library self-contained; callers may substitute
//! file contents read from a directory override.

use crate::schlaefli::LineLabel;

pub const LINES27: &str = include_str!("../fixtures/lines27.txt");
pub const PLANE_CURVES: &str = include_str!("../fixtures/plane_curves.txt");
pub const CIRCULAR_ORDERS: &str = include_str!("../fixtures/circular_orders.txt");
pub const EXPOSED_TRIANGLES: &str = include_str!("../fixtures/exposed_triangles.txt");
pub const REGION_QUADRILATERALS: &str = include_str!("../fixtures/region_quadrilaterals.txt");
pub const REGION_PENTAGONS: &str = include_str!("../fixtures/region_pentagons.txt");
pub const DOUBLE_SIX: &str = include_str!("../fixtures/double_six.txt");
pub const YOSHIDA: &str = include_str!("../fixtures/yoshida.txt");
pub const ECKARDT_POLYS: &str = include_str!("../fixtures/eckardt_polys.txt");
pub const G_EXPONENTS: &str = include_str!("../fixtures/g_exponents.txt");
pub const U_SUPPORTS: &str = include_str!("../fixtures/u_supports.txt");
pub const ABCD_EXPONENTS: &str = include_str!("../fixtures/abcd_exponents.txt");
pub const AMPLITUDE_QUADRUPLES: &str = include_str!("../fixtures/amplitude_quadruples.txt");

/// Split fixture text into `(label, tokens)` records.
pub fn parse_records(text: &str) -> Vec<(String, Vec<String>)> {
    let mut out = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (label, rest) = line
            .split_once(':')
            .unwrap_or_else(|| panic!("fixture line {}: missing ':'", lineno + 1));
        let rest = rest
            .trim()
            .strip_suffix(';')
            .unwrap_or_else(|| panic!("fixture line {}: missing ';'", lineno + 1));
        let toks = rest.split_whitespace().map(str::to_string).collect();
        out.push((label.trim().to_string(), toks));
    }
    out
}

/// Records whose tokens are integers.
pub fn parse_int_records(text: &str) -> Vec<(String, Vec<i64>)> {
    parse_records(text)
        .into_iter()
        .map(|(label, toks)| {
            let ints = toks
                .iter()
                .map(|t| t.parse::<i64>().unwrap_or_else(|_| panic!("bad integer {t:?}")))
                .collect();
            (label, ints)
        })
        .collect()
}

/// Records whose tokens are line labels.
pub fn parse_label_records(text: &str) -> Vec<(String, Vec<LineLabel>)> {
    parse_records(text)
        .into_iter()
        .map(|(label, toks)| {
            let labels = toks
                .iter()
                .map(|t| LineLabel::parse(t).unwrap_or_else(|| panic!("bad label {t:?}")))
                .collect();
            (label, labels)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn embedded_fixtures_parse() {
        assert_eq!(parse_int_records(LINES27).len(), 27);
        assert_eq!(parse_int_records(PLANE_CURVES).len(), 27);
        assert_eq!(parse_label_records(CIRCULAR_ORDERS).len(), 27);
        assert_eq!(parse_label_records(EXPOSED_TRIANGLES).len(), 10);
        assert_eq!(parse_label_records(REGION_QUADRILATERALS).len(), 90);
        assert_eq!(parse_label_records(REGION_PENTAGONS).len(), 30);
        assert_eq!(parse_label_records(DOUBLE_SIX).len(), 2);
        assert_eq!(parse_records(YOSHIDA).len(), 40);
        assert_eq!(parse_int_records(ECKARDT_POLYS).len(), 10);
        assert_eq!(parse_int_records(G_EXPONENTS).len(), 20);
        assert_eq!(parse_int_records(U_SUPPORTS).len(), 15);
        assert_eq!(parse_int_records(ABCD_EXPONENTS).len(), 4);
        assert_eq!(parse_int_records(AMPLITUDE_QUADRUPLES).len(), 45);
        for (_, toks) in parse_int_records(ECKARDT_POLYS) {
            assert_eq!(toks.len() % 5, 0);
        }
        for (_, toks) in parse_int_records(AMPLITUDE_QUADRUPLES) {
            assert_eq!(toks.len(), 4);
        }
        for (_, toks) in parse_int_records(LINES27) {
            assert_eq!(toks.len(), 8);
        }
        for (_, toks) in parse_label_records(CIRCULAR_ORDERS) {
            assert_eq!(toks.len(), 10);
        }
    }
}
