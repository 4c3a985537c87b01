//! Reference parameter rows shipped with the crate, and the diff of a search
//! table against them.

use serde::Serialize;

use crate::code::TableRow;
use crate::error::{Error, Result};

const GOLDEN_TEXT: &str = include_str!("../data/golden_tables.txt");

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GoldenRow {
    pub row: TableRow,
    pub annotation: Option<String>,
}

/// Parse the table format: `p n k_dim d linear [annotation...]`, `#` comments.
pub fn parse_golden(text: &str) -> Result<Vec<GoldenRow>> {
    let mut out = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut parts = line.splitn(6, char::is_whitespace);
        let mut num = |what: &str| -> Result<u64> {
            parts
                .next()
                .and_then(|s| s.parse().ok())
                .ok_or_else(|| Error::Parse(format!("line {}: bad {what}", lineno + 1)))
        };
        let (p, n, k_dim, d, linear) = (
            num("p")?,
            num("n")?,
            num("k_dim")?,
            num("d")?,
            num("linear")?,
        );
        if linear > 1 {
            return Err(Error::Parse(format!(
                "line {}: linear must be 0 or 1",
                lineno + 1
            )));
        }
        let annotation = parts
            .next()
            .map(|s| s.trim().to_string())
            .filter(|s| !s.is_empty());
        out.push(GoldenRow {
            row: TableRow {
                p: p as u32,
                n: n as usize,
                k_dim: k_dim as usize,
                d,
                linear: linear == 1,
            },
            annotation,
        });
    }
    Ok(out)
}

/// All shipped rows.
pub fn golden_rows() -> Vec<GoldenRow> {
    parse_golden(GOLDEN_TEXT).expect("shipped table parses")
}

/// Shipped rows for one characteristic.
pub fn golden_rows_for(p: u32) -> Vec<GoldenRow> {
    golden_rows().into_iter().filter(|g| g.row.p == p).collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct GoldenDiff {
    pub matched: Vec<GoldenRow>,
    pub missing: Vec<GoldenRow>,
    /// Rows found by the search but absent from the reference table.
    pub extra: Vec<TableRow>,
}

impl GoldenDiff {
    pub fn is_complete(&self) -> bool {
        self.missing.is_empty()
    }
}

/// Compare search rows with reference rows of the same characteristic.
pub fn diff(found: &[TableRow], golden: &[GoldenRow]) -> GoldenDiff {
    let (matched, missing) = golden.iter().cloned().partition(|g| found.contains(&g.row));
    let extra = found
        .iter()
        .filter(|r| !golden.iter().any(|g| &g.row == *r))
        .copied()
        .collect();
    GoldenDiff {
        matched,
        missing,
        extra,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shipped_table_shape() {
        let rows = golden_rows();
        assert_eq!(rows.len(), 39);
        assert_eq!(golden_rows_for(3).len(), 14);
        assert_eq!(golden_rows_for(5).len(), 14);
        assert_eq!(golden_rows_for(7).len(), 11);
        let annotated: Vec<_> = rows.iter().filter(|r| r.annotation.is_some()).collect();
        assert_eq!(annotated.len(), 1);
        assert_eq!(
            (
                annotated[0].row.p,
                annotated[0].row.n,
                annotated[0].row.k_dim
            ),
            (5, 42, 18)
        );
    }

    #[test]
    fn parse_errors() {
        assert!(parse_golden("3 10 2").is_err());
        assert!(parse_golden("3 10 2 3 7").is_err());
        assert_eq!(parse_golden("# only a comment\n").unwrap(), vec![]);
    }

    #[test]
    fn diff_reports_missing_rows() {
        let golden = parse_golden("3 10 2 3 1\n3 28 4 3 0\n").unwrap();
        let found = [golden[0].row];
        let d = diff(&found, &golden);
        assert_eq!(d.matched.len(), 1);
        assert_eq!(d.missing.len(), 1);
        assert!(!d.is_complete());
    }
}
