//! Text form of commutative symmetrized polynomials, as printed by `SymPoly::render`:
//! `(1,0)a*b^2 + (0,1)c + 3*d - e`. A leading `-` swaps the pair; a bare integer scales it.

use crate::error::{Error, Result};
use crate::transfer::sympoly::SymPoly;

type Term = ((u64, u64), Vec<(String, u32)>);

struct Cursor {
    /// (line, column, char, preceded by whitespace)
    chars: Vec<(usize, usize, char, bool)>,
    pos: usize,
}

impl Cursor {
    fn new(src: &str) -> Self {
        let mut chars = Vec::new();
        for (i, line) in src.lines().enumerate() {
            let body = line.split('#').next().unwrap_or("");
            let mut gap = true;
            for (j, c) in body.chars().enumerate() {
                if c.is_whitespace() {
                    gap = true;
                } else {
                    chars.push((i + 1, j + 1, c, gap));
                    gap = false;
                }
            }
        }
        Cursor { chars, pos: 0 }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|c| c.2)
    }

    /// Next char, unless whitespace separates it from the previous one.
    fn peek_joined(&self) -> Option<char> {
        self.chars.get(self.pos).filter(|c| !c.3 || self.pos == 0).map(|c| c.2)
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        let (l, c) = self
            .chars
            .get(self.pos)
            .map_or_else(|| self.chars.last().map_or((1, 1), |&(l, c, _, _)| (l, c + 1)), |&(l, c, _, _)| (l, c));
        Error::parse(l, c, msg)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.err(format!("expected '{c}'")))
        }
    }

    fn number(&mut self) -> Result<u64> {
        let start = self.pos;
        let mut s = String::new();
        while let Some(c) = if s.is_empty() { self.peek() } else { self.peek_joined() }.filter(char::is_ascii_digit) {
            s.push(c);
            self.pos += 1;
        }
        if s.is_empty() {
            return Err(self.err("expected a number"));
        }
        s.parse().map_err(|_| {
            self.pos = start;
            self.err("number too large")
        })
    }

    fn ident(&mut self) -> Result<String> {
        let mut s = String::new();
        while let Some(c) = if s.is_empty() { self.peek() } else { self.peek_joined() }
            .filter(|c| c.is_ascii_alphanumeric() || *c == '_')
        {
            if s.is_empty() && !c.is_ascii_alphabetic() {
                break;
            }
            s.push(c);
            self.pos += 1;
        }
        if s.is_empty() {
            return Err(self.err("expected a variable name"));
        }
        Ok(s)
    }
}

fn scale(c: (u64, u64), k: u64) -> Result<(u64, u64)> {
    Ok((c.0.checked_mul(k).ok_or(Error::Overflow)?, c.1.checked_mul(k).ok_or(Error::Overflow)?))
}

fn terms(src: &str) -> Result<Vec<Term>> {
    let mut cur = Cursor::new(src);
    let mut out = Vec::new();
    if cur.peek().is_none() {
        return Err(cur.err("empty polynomial"));
    }
    let mut first = true;
    while cur.peek().is_some() {
        let mut negate = cur.eat('-');
        if !first && !negate {
            cur.expect('+')?;
            negate = cur.eat('-');
        }
        first = false;
        let mut coeff = (1u64, 0u64);
        let mut bare = false;
        if cur.eat('(') {
            let a = cur.number()?;
            cur.expect(',')?;
            let b = cur.number()?;
            cur.expect(')')?;
            coeff = (a, b);
            bare = !cur.eat('*') && matches!(cur.peek(), None | Some('+' | '-'));
        }
        let mut factors = Vec::new();
        while !bare {
            match cur.peek() {
                Some(c) if c.is_ascii_digit() => coeff = scale(coeff, cur.number()?)?,
                Some(c) if c.is_ascii_alphabetic() => {
                    let name = cur.ident()?;
                    let e = if cur.eat('^') {
                        u32::try_from(cur.number()?).map_err(|_| cur.err("exponent too large"))?
                    } else {
                        1
                    };
                    factors.push((name, e));
                }
                _ => return Err(cur.err("expected a coefficient or variable")),
            }
            bare = !cur.eat('*');
        }
        if negate {
            coeff = (coeff.1, coeff.0);
        }
        out.push((coeff, factors));
    }
    Ok(out)
}

/// Parses several polynomials over one shared, first-appearance-ordered variable list.
pub fn parse_sym_polys(texts: &[&str]) -> Result<Vec<SymPoly>> {
    let parsed = texts.iter().map(|t| terms(t)).collect::<Result<Vec<_>>>()?;
    let mut names: Vec<String> = Vec::new();
    for (_, fs) in parsed.iter().flatten() {
        for (n, _) in fs {
            if !names.contains(n) {
                names.push(n.clone());
            }
        }
    }
    let nv = names.len();
    parsed
        .into_iter()
        .map(|ts| {
            let mut p = SymPoly::zero(nv, true).with_names(names.clone());
            for (c, fs) in ts {
                let mut mono = vec![0u32; nv];
                for (n, e) in fs {
                    let i = names.iter().position(|x| *x == n).expect("collected above");
                    mono[i] = mono[i].checked_add(e).ok_or(Error::Overflow)?;
                }
                let mut t = SymPoly::zero(nv, true).with_names(names.clone());
                if c != (0, 0) {
                    t.terms.insert(mono, c);
                }
                p = p.add(&t)?;
            }
            Ok(p)
        })
        .collect()
}
