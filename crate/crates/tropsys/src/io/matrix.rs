//! Matrix files: a header `rows cols system`, then one line per row of element literals.
//!
//! ```text
//! 2 2 sign
//! 1  -1
//! 1   1
//! ```
//!
//! The system is a built-in id or a path to a `.sys`/`.hyp` file, relative to the matrix file.

use std::path::Path;

use super::lex::tokenize;
use crate::core::SystemHandle;
use crate::error::{Error, Result};
use crate::matrices::Matrix;

/// Parses a matrix; `resolve` maps the header's system token to a system.
pub fn parse_matrix(text: &str, resolve: impl FnOnce(&str) -> Result<SystemHandle>) -> Result<Matrix> {
    let lines = tokenize(text)?;
    let Some((head, rows)) = lines.split_first() else {
        return Err(Error::parse(1, 1, "empty matrix file"));
    };
    if head.toks.len() != 3 {
        return Err(head.err(head.toks[0].col, "header is `rows cols system`"));
    }
    let dim = |i: usize| {
        let t = &head.toks[i];
        t.text.parse::<usize>().ok().filter(|&d| d > 0).ok_or_else(|| head.err(t.col, "expected a positive size"))
    };
    let (r, c) = (dim(0)?, dim(1)?);
    let sys = resolve(&head.toks[2].text).map_err(|e| match e {
        Error::Unsupported(m) => head.err(head.toks[2].col, m),
        other => other,
    })?;
    if rows.len() != r {
        let at = rows.get(r).map_or(head.no + rows.len() + 1, |l| l.no);
        return Err(Error::parse(at, 1, format!("expected {r} rows, found {}", rows.len())));
    }
    let mut entries = Vec::with_capacity(r * c);
    for row in rows {
        if row.toks.len() != c {
            return Err(row.err(row.toks[0].col, format!("expected {c} entries, found {}", row.toks.len())));
        }
        for t in &row.toks {
            let e = sys.parse(&t.text).map_err(|e| row.err(t.col, format!("bad element `{}`: {e}", t.text)))?;
            entries.push(e);
        }
    }
    Matrix::new(&sys, r, c, entries)
}

/// Reads a matrix file, resolving file-backed systems next to it.
pub fn read_matrix(path: &Path) -> Result<Matrix> {
    let text = super::read(path)?;
    let dir = path.parent().map(Path::to_path_buf).unwrap_or_default();
    parse_matrix(&text, |id| super::load_system_ref(id, &dir))
}

/// Renders a matrix in the format read by [`parse_matrix`], given the system's id.
pub fn write_matrix(m: &Matrix, system_id: &str) -> String {
    let mut out = format!("{} {} {system_id}\n", m.rows, m.cols);
    for i in 0..m.rows {
        let row: Vec<String> = m.row(i).iter().map(|e| m.sys.format(e)).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}
