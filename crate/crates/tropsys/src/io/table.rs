//! Square operation tables: a header row of column labels, then one labelled row per element.

use super::lex::{tokenize_line, Line, Section, Tok};
use crate::error::{Error, Result};

/// Carrier names with whitespace-insensitive lookup.
pub struct Names<'a>(pub &'a [String]);

fn squash(s: &str) -> String {
    s.chars().filter(|c| !c.is_whitespace()).collect()
}

impl Names<'_> {
    pub fn find(&self, name: &str) -> Option<usize> {
        let key = squash(name);
        self.0.iter().position(|c| squash(c) == key)
    }

    pub fn resolve(&self, line: &Line, tok: &Tok) -> Result<usize> {
        self.find(&tok.text).ok_or_else(|| line.err(tok.col, format!("unknown element `{}`", tok.text)))
    }
}

/// Parses the body of a table section. `cell` turns one token into a value.
pub fn parse_table<T: Clone>(
    sec: &Section,
    names: &Names,
    mut cell: impl FnMut(&Line, &Tok) -> Result<T>,
) -> Result<Vec<Vec<T>>> {
    let n = names.0.len();
    if let Some(t) = sec.args().first() {
        return Err(sec.head.err(t.col, "table rows must be on the following indented lines"));
    }
    let Some((header, rows)) = sec.body.split_first() else {
        return Err(sec.head.err(sec.head.end_col(), format!("`{}` table is empty", sec.key())));
    };
    if header.toks.len() != n {
        return Err(
            header.err(header.toks[0].col, format!("header needs {n} column labels, found {}", header.toks.len()))
        );
    }
    let mut cols = vec![usize::MAX; n];
    for (j, tok) in header.toks.iter().enumerate() {
        let c = names.resolve(header, tok)?;
        if cols.contains(&c) {
            return Err(header.err(tok.col, format!("column `{}` repeated", tok.text)));
        }
        cols[j] = c;
    }
    let mut out: Vec<Option<Vec<T>>> = vec![None; n];
    for row in rows {
        if row.toks.len() != n + 1 {
            return Err(
                row.err(row.toks[0].col, format!("row needs a label and {n} cells, found {} tokens", row.toks.len()))
            );
        }
        let r = names.resolve(row, &row.toks[0])?;
        if out[r].is_some() {
            return Err(row.err(row.toks[0].col, format!("row `{}` repeated", row.toks[0].text)));
        }
        let mut vals: Vec<Option<T>> = vec![None; n];
        for (j, tok) in row.toks[1..].iter().enumerate() {
            vals[cols[j]] = Some(cell(row, tok)?);
        }
        out[r] = Some(vals.into_iter().map(|v| v.expect("every column assigned")).collect());
    }
    out.into_iter()
        .enumerate()
        .map(|(i, r)| {
            r.ok_or_else(|| sec.head.err(1, format!("`{}` table has no row for `{}`", sec.key(), names.0[i])))
        })
        .collect()
}

/// Checks that `name` reads back as a single token.
pub fn check_name(name: &str) -> Result<()> {
    match tokenize_line(1, name) {
        Ok(l) if l.toks.len() == 1 && l.toks[0].text == name && !l.indented => Ok(()),
        _ => Err(Error::Unsupported(format!("element name `{name}` cannot be written as a single token"))),
    }
}

/// Renders a table with aligned columns.
pub fn write_table(out: &mut String, key: &str, carrier: &[String], cells: &[Vec<String>]) {
    let w = carrier.iter().chain(cells.iter().flatten()).map(|s| s.chars().count()).max().unwrap_or(1);
    let pad = |s: &str| format!("{s:<w$}");
    out.push_str(key);
    out.push('\n');
    let header: Vec<String> = carrier.iter().map(|c| pad(c)).collect();
    out.push_str(format!("  {} {}\n", pad(""), header.join(" ")).trim_end());
    out.push('\n');
    for (name, row) in carrier.iter().zip(cells) {
        let row: Vec<String> = row.iter().map(|c| pad(c)).collect();
        out.push_str(format!("  {} {}", pad(name), row.join(" ")).trim_end());
        out.push('\n');
    }
}
