//! Text formats: finite system files (`.sys`), hypergroup files (`.hyp`) and matrix files.

pub mod hyp;
pub mod lex;
pub mod matrix;
pub mod sys;
mod table;

use std::path::{Path, PathBuf};

pub use hyp::{load_hypergroup, parse_hypergroup, write_hypergroup};
pub use matrix::{parse_matrix, read_matrix, write_matrix};
pub use sys::{load_system, parse_system, write_system};

use crate::core::SystemHandle;

/// Aligned text table with a header row, as used in the file formats.
pub fn render_table(key: &str, carrier: &[String], cells: &[Vec<String>]) -> String {
    let mut out = String::new();
    table::write_table(&mut out, key, carrier, cells);
    out
}
use crate::error::{Error, Result};

pub(crate) fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Io { path: path.display().to_string(), msg: e.to_string() })
}

/// Parse errors are re-labelled with the file they came from; other errors pass through.
fn in_file<T>(path: &Path, r: Result<T>) -> Result<T> {
    r.map_err(|e| match e {
        Error::Parse { line, col, msg } => Error::Parse { line, col, msg: format!("{}: {msg}", path.display()) },
        other => other,
    })
}

/// Loads a `.sys` or `.hyp` file, chosen by extension.
pub fn load_system_file(path: &Path) -> Result<SystemHandle> {
    let text = read(path)?;
    match path.extension().and_then(|e| e.to_str()) {
        Some("sys") => in_file(path, load_system(&text)),
        Some("hyp") => in_file(path, load_hypergroup(&text)),
        _ => Err(Error::Unsupported(format!("{}: expected a .sys or .hyp file", path.display()))),
    }
}

/// A built-in id, or a path (relative to `base`) when it ends in `.sys`/`.hyp`.
pub fn load_system_ref(target: &str, base: &Path) -> Result<SystemHandle> {
    if target.ends_with(".sys") || target.ends_with(".hyp") {
        let p = PathBuf::from(target);
        load_system_file(&if p.is_absolute() { p } else { base.join(p) })
    } else {
        crate::registry::builtin(target)
    }
}
