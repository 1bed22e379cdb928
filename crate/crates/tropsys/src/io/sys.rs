//! Finite system descriptions.
//!
//! ```text
//! name sign
//! carrier 0 1 -1 inf
//! tangibles 1 -1
//! zero 0
//! one 1
//! neg 0 -1 1 inf      # images in carrier order; identity when omitted
//! add
//!        0   1   -1  inf
//!   0    0   1   -1  inf
//!   ...
//! mul
//!   ...
//! ```
//!
//! Optional keys: `level triple|pseudo`, `surpass circ|equality`.

use std::collections::HashSet;

use super::lex::{sections, tokenize, Section, Tok};
use super::table::{check_name, parse_table, write_table, Names};
use crate::core::{SystemHandle, TripleLevel};
use crate::error::{Error, Result};
use crate::instances::{load_finite_system, FiniteSurpass, FiniteTable};

const KEYS: &[&str] = &["name", "carrier", "tangibles", "zero", "one", "neg", "add", "mul", "level", "surpass"];

/// Splits `text` into sections keyed by the allowed keywords, rejecting repeats.
pub(crate) fn keyed_sections(text: &str, keys: &[&str]) -> Result<Vec<Section>> {
    let secs = sections(tokenize(text)?)?;
    let mut seen = HashSet::new();
    for s in &secs {
        let t = &s.head.toks[0];
        if !keys.contains(&s.key()) {
            return Err(s
                .head
                .err(t.col, format!("unknown keyword `{}` (expected one of {})", t.text, keys.join(", "))));
        }
        if !seen.insert(s.key().to_string()) {
            return Err(s.head.err(t.col, format!("`{}` given twice", t.text)));
        }
        if !s.body.is_empty() && !matches!(s.key(), "add" | "mul") {
            let l = &s.body[0];
            return Err(l.err(l.toks[0].col, format!("unexpected indented line after `{}`", s.key())));
        }
    }
    Ok(secs)
}

pub(crate) fn eof_error(text: &str, what: &str) -> Error {
    Error::parse(text.lines().count() + 1, 1, format!("missing `{what}`"))
}

pub(crate) fn single(s: &Section) -> Result<&Tok> {
    match s.args() {
        [t] => Ok(t),
        [] => Err(s.head.err(s.head.end_col(), format!("`{}` needs a value", s.key()))),
        [_, t, ..] => Err(s.head.err(t.col, format!("`{}` takes one value", s.key()))),
    }
}

pub(crate) fn carrier_of(text: &str, secs: &[Section]) -> Result<Vec<String>> {
    let sec = secs.iter().find(|s| s.key() == "carrier").ok_or_else(|| eof_error(text, "carrier"))?;
    let mut carrier: Vec<String> = Vec::new();
    for t in sec.args() {
        if Names(&carrier).find(&t.text).is_some() {
            return Err(sec.head.err(t.col, format!("`{}` listed twice", t.text)));
        }
        carrier.push(t.text.clone());
    }
    if carrier.is_empty() {
        return Err(sec.head.err(sec.head.end_col(), "empty carrier"));
    }
    Ok(carrier)
}

pub(crate) fn neg_of(sec: &Section, names: &Names) -> Result<Vec<usize>> {
    let n = names.0.len();
    if sec.args().len() != n {
        return Err(sec.head.err(sec.head.end_col(), format!("`neg` lists {n} images, found {}", sec.args().len())));
    }
    sec.args().iter().map(|t| names.resolve(&sec.head, t)).collect()
}

/// Parses a system description without checking any axiom.
pub fn parse_system(text: &str) -> Result<FiniteTable> {
    let secs = keyed_sections(text, KEYS)?;
    let carrier = carrier_of(text, &secs)?;
    let names = Names(&carrier);
    let mut t = FiniteTable::new("unnamed", carrier.clone());
    let mut have_add = false;
    let mut have_tangibles = false;
    for s in &secs {
        match s.key() {
            "name" => {
                if s.args().is_empty() {
                    return Err(s.head.err(s.head.end_col(), "`name` needs a value"));
                }
                t.name = s.args().iter().map(|a| a.text.as_str()).collect::<Vec<_>>().join(" ");
            }
            "carrier" => {}
            "tangibles" => {
                have_tangibles = true;
                let mut tans = Vec::new();
                for a in s.args() {
                    let i = names.resolve(&s.head, a)?;
                    if !tans.contains(&i) {
                        tans.push(i);
                    }
                }
                tans.sort_unstable();
                t.tangibles = tans;
            }
            "zero" => t.zero = Some(names.resolve(&s.head, single(s)?)?),
            "one" => t.one = Some(names.resolve(&s.head, single(s)?)?),
            "neg" => t.neg = neg_of(s, &names)?,
            "level" => {
                let v = single(s)?;
                t.level = match v.text.as_str() {
                    "triple" => TripleLevel::Triple,
                    "pseudo" => TripleLevel::Pseudo,
                    _ => return Err(s.head.err(v.col, "level is `triple` or `pseudo`")),
                };
            }
            "surpass" => {
                let v = single(s)?;
                t.surpass = match v.text.as_str() {
                    "circ" => FiniteSurpass::Circ,
                    "equality" => FiniteSurpass::Equality,
                    _ => return Err(s.head.err(v.col, "surpass is `circ` or `equality`")),
                };
            }
            "add" => {
                have_add = true;
                t.add = parse_table(s, &names, |l, tok| names.resolve(l, tok))?;
            }
            "mul" => t.mul = Some(parse_table(s, &names, |l, tok| names.resolve(l, tok))?),
            _ => unreachable!("filtered by keyed_sections"),
        }
    }
    if !have_add {
        return Err(eof_error(text, "add"));
    }
    if !have_tangibles {
        return Err(eof_error(text, "tangibles"));
    }
    Ok(t)
}

/// Parses and verifies; axiom failures surface as `Error::Axiom`.
pub fn load_system(text: &str) -> Result<SystemHandle> {
    load_finite_system(parse_system(text)?)
}

/// Writes a table in the format read by [`parse_system`].
pub fn write_system(t: &FiniteTable) -> Result<String> {
    let surpass = match t.surpass {
        FiniteSurpass::Circ => "circ",
        FiniteSurpass::Equality => "equality",
        FiniteSurpass::Subset { .. } => {
            return Err(Error::Unsupported("subset-ordered tables are written as hypergroups".into()))
        }
    };
    t.carrier.iter().try_for_each(|c| check_name(c))?;
    let c = |i: usize| t.carrier[i].clone();
    let mut out = format!("name {}\ncarrier {}\n", t.name, t.carrier.join(" "));
    out.push_str(&format!("tangibles {}\n", t.tangibles.iter().map(|&i| c(i)).collect::<Vec<_>>().join(" ")));
    if let Some(z) = t.zero {
        out.push_str(&format!("zero {}\n", c(z)));
    }
    if let Some(o) = t.one {
        out.push_str(&format!("one {}\n", c(o)));
    }
    if t.level == TripleLevel::Pseudo {
        out.push_str("level pseudo\n");
    }
    if surpass != "circ" {
        out.push_str(&format!("surpass {surpass}\n"));
    }
    if t.neg.iter().enumerate().any(|(i, &j)| i != j) {
        out.push_str(&format!("neg {}\n", t.neg.iter().map(|&i| c(i)).collect::<Vec<_>>().join(" ")));
    }
    let names = |m: &Vec<Vec<usize>>| m.iter().map(|r| r.iter().map(|&i| c(i)).collect()).collect::<Vec<Vec<String>>>();
    write_table(&mut out, "add", &t.carrier, &names(&t.add));
    if let Some(m) = &t.mul {
        write_table(&mut out, "mul", &t.carrier, &names(m));
    }
    Ok(out)
}
