//! Multiplication-table files: a first line `n`, then `n` rows of `n`
//! space-separated element indices, identity at index 0.

use std::fs;
use std::path::Path;

use powmon_core::{GroundError, GroundMonoid};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum TableFileError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error(transparent)]
    Ground(#[from] GroundError),
}

fn syntax(line: usize, msg: impl Into<String>) -> TableFileError {
    TableFileError::Syntax { line, msg: msg.into() }
}

/// Parses table text into rows without validating the algebra.
pub fn parse_rows(text: &str) -> Result<Vec<Vec<usize>>, TableFileError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (first, header) = lines.next().ok_or_else(|| syntax(1, "missing size line"))?;
    let n: usize = header
        .parse()
        .map_err(|_| syntax(first, format!("expected table size, found `{header}`")))?;
    let mut rows = Vec::with_capacity(n);
    for (line, text) in lines {
        let row = text
            .split_whitespace()
            .map(|t| t.parse::<usize>().map_err(|_| syntax(line, format!("bad entry `{t}`"))))
            .collect::<Result<Vec<_>, _>>()?;
        if row.len() != n {
            return Err(syntax(line, format!("expected {n} entries, found {}", row.len())));
        }
        rows.push(row);
    }
    if rows.len() != n {
        return Err(syntax(first, format!("expected {n} rows, found {}", rows.len())));
    }
    Ok(rows)
}

pub fn parse_table(text: &str) -> Result<GroundMonoid, TableFileError> {
    Ok(GroundMonoid::from_table(&parse_rows(text)?)?)
}

pub fn load_table(path: &Path) -> Result<GroundMonoid, TableFileError> {
    let text = fs::read_to_string(path).map_err(|source| TableFileError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_table(&text)
}

pub fn format_table(rows: &[Vec<usize>]) -> String {
    let mut out = format!("{}\n", rows.len());
    for row in rows {
        let cells: Vec<String> = row.iter().map(usize::to_string).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let rows = vec![vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 1]];
        let text = format_table(&rows);
        assert_eq!(parse_rows(&text).unwrap(), rows);
        assert!(parse_table(&text).unwrap().is_group());
    }

    #[test]
    fn rejects_malformed_files() {
        assert!(matches!(parse_rows(""), Err(TableFileError::Syntax { .. })));
        assert!(matches!(parse_rows("2\n0 1\n"), Err(TableFileError::Syntax { .. })));
        assert!(matches!(parse_rows("2\n0 1\n1 x\n"), Err(TableFileError::Syntax { line: 3, .. })));
        assert!(matches!(parse_table("2\n0 0\n1 1\n"), Err(TableFileError::Ground(_))));
    }
}
