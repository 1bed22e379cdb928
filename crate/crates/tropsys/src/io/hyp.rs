//! Finite hypergroup descriptions. Same layout as system files, but `add` cells are
//! sets written `{a,b}` (a bare name is a singleton) and `tangibles` is not used.
//!
//! ```text
//! name krasner
//! carrier 0 1
//! zero 0
//! one 1
//! add
//!        0  1
//!   0    0  1
//!   1    1  {0,1}
//! mul
//!        0  1
//!   0    0  0
//!   1    0  1
//! ```
//!
//! `canonical no` skips the unique-hypernegative check.

use super::lex::{Line, Tok};
use super::sys::{carrier_of, eof_error, keyed_sections, neg_of, single};
use super::table::{check_name, parse_table, write_table, Names};
use crate::core::SystemHandle;
use crate::error::{Error, Result};
use crate::hypersystems::{powerset_system, FiniteHypergroup};

const KEYS: &[&str] = &["name", "carrier", "zero", "one", "neg", "add", "mul", "canonical"];

fn set_cell(names: &Names, line: &Line, tok: &Tok) -> Result<u128> {
    let inner = match tok.text.strip_prefix('{') {
        Some(rest) => rest.strip_suffix('}').ok_or_else(|| line.err(tok.col, "set cell must end with '}'"))?,
        None => {
            let i = names.resolve(line, tok)?;
            return Ok(1u128 << i);
        }
    };
    let mut mask = 0u128;
    for part in inner.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let i = names.find(part).ok_or_else(|| line.err(tok.col, format!("unknown element `{part}` in set")))?;
        mask |= 1u128 << i;
    }
    if mask == 0 {
        return Err(line.err(tok.col, "empty set"));
    }
    Ok(mask)
}

pub fn parse_hypergroup(text: &str) -> Result<FiniteHypergroup> {
    let secs = keyed_sections(text, KEYS)?;
    let carrier = carrier_of(text, &secs)?;
    if carrier.len() > 128 {
        let s = secs.iter().find(|s| s.key() == "carrier").expect("carrier present");
        return Err(s.head.err(s.args()[128].col, "at most 128 elements"));
    }
    let names = Names(&carrier);
    let n = carrier.len();
    let mut h = FiniteHypergroup {
        name: "unnamed".into(),
        carrier: carrier.clone(),
        zero: usize::MAX,
        neg: (0..n).collect(),
        add: Vec::new(),
        mul: None,
        one: None,
        non_canonical: false,
    };
    for s in &secs {
        match s.key() {
            "name" => h.name = single(s)?.text.clone(),
            "carrier" => {}
            "zero" => h.zero = names.resolve(&s.head, single(s)?)?,
            "one" => h.one = Some(names.resolve(&s.head, single(s)?)?),
            "neg" => h.neg = neg_of(s, &names)?,
            "canonical" => {
                let v = single(s)?;
                h.non_canonical = match v.text.as_str() {
                    "yes" => false,
                    "no" => true,
                    _ => return Err(s.head.err(v.col, "canonical is `yes` or `no`")),
                };
            }
            "add" => h.add = parse_table(s, &names, |l, t| set_cell(&names, l, t))?,
            "mul" => h.mul = Some(parse_table(s, &names, |l, t| names.resolve(l, t))?),
            _ => unreachable!("filtered by keyed_sections"),
        }
    }
    if h.zero == usize::MAX {
        return Err(eof_error(text, "zero"));
    }
    if h.add.is_empty() {
        return Err(eof_error(text, "add"));
    }
    Ok(h)
}

/// Parses, verifies the hypergroup axioms and builds the power-set system.
pub fn load_hypergroup(text: &str) -> Result<SystemHandle> {
    let h = parse_hypergroup(text)?;
    h.verify()?;
    powerset_system(&h)
}

pub fn write_hypergroup(h: &FiniteHypergroup) -> Result<String> {
    h.carrier.iter().try_for_each(|c| check_name(c))?;
    if h.carrier.iter().any(|c| c.contains(',') || c.starts_with('{')) {
        return Err(Error::Unsupported("hypergroup element names may not contain ',' or start with '{'".into()));
    }
    let c = |i: usize| h.carrier[i].clone();
    let mut out = format!("name {}\ncarrier {}\nzero {}\n", h.name, h.carrier.join(" "), c(h.zero));
    if let Some(o) = h.one {
        out.push_str(&format!("one {}\n", c(o)));
    }
    if h.neg.iter().enumerate().any(|(i, &j)| i != j) {
        out.push_str(&format!("neg {}\n", h.neg.iter().map(|&i| c(i)).collect::<Vec<_>>().join(" ")));
    }
    if h.non_canonical {
        out.push_str("canonical no\n");
    }
    let set = |m: u128| {
        let members: Vec<String> = crate::hypersystems::hypergroup::bits(m).map(c).collect();
        if members.len() == 1 {
            members[0].clone()
        } else {
            format!("{{{}}}", members.join(","))
        }
    };
    let add: Vec<Vec<String>> = h.add.iter().map(|r| r.iter().map(|&m| set(m)).collect()).collect();
    write_table(&mut out, "add", &h.carrier, &add);
    if let Some(m) = &h.mul {
        let mul: Vec<Vec<String>> = m.iter().map(|r| r.iter().map(|&i| c(i)).collect()).collect();
        write_table(&mut out, "mul", &h.carrier, &mul);
    }
    Ok(out)
}
