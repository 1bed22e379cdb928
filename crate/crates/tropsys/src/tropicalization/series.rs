//! Finite Puiseux series over ℚ.

use std::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{fmt_q, parse_q, Q};

/// Σ cᵢ t^eᵢ with strictly increasing exponents and nonzero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PuiseuxSeries {
    terms: Vec<(Q, Q)>,
}

impl PuiseuxSeries {
    pub fn zero() -> Self {
        PuiseuxSeries { terms: Vec::new() }
    }

    pub fn monomial(coeff: Q, exp: Q) -> Self {
        Self::from_terms(vec![(exp, coeff)])
    }

    /// Build from (exponent, coefficient) pairs in any order; like exponents are merged.
    pub fn from_terms(mut raw: Vec<(Q, Q)>) -> Self {
        raw.sort_by(|a, b| a.0.cmp(&b.0));
        let mut terms: Vec<(Q, Q)> = Vec::with_capacity(raw.len());
        for (e, c) in raw {
            match terms.last_mut() {
                Some(last) if last.0 == e => last.1 += c,
                _ => terms.push((e, c)),
            }
        }
        terms.retain(|(_, c)| !c.is_zero());
        PuiseuxSeries { terms }
    }

    /// (exponent, coefficient) pairs, exponents increasing.
    pub fn terms(&self) -> &[(Q, Q)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Least common denominator N of the exponents, so the series lives in ℚ[t^{±1/N}].
    pub fn denominator(&self) -> num_bigint::BigInt {
        self.terms.iter().fold(num_bigint::BigInt::one(), |n, (e, _)| n.lcm(e.denom()))
    }

    /// Lowest exponent and its coefficient.
    pub fn leading(&self) -> Result<(Q, Q)> {
        self.terms.first().cloned().ok_or_else(|| Error::Precondition("the zero series has no leading term".into()))
    }

    /// Tropical magnitude: minus the lowest exponent.
    pub fn magnitude(&self) -> Result<Q> {
        Ok(-self.leading()?.0)
    }

    pub fn parse(s: &str) -> Result<Self> {
        let src = s.trim();
        if src == "0" {
            return Ok(Self::zero());
        }
        let mut raw = Vec::new();
        let mut start = 0usize;
        let mut depth = 0i32;
        let bytes: Vec<(usize, char)> = src.char_indices().collect();
        for (k, &(i, ch)) in bytes.iter().enumerate() {
            match ch {
                '(' => depth += 1,
                ')' => depth -= 1,
                '+' | '-' if depth == 0 && k > 0 => {
                    let prev = src[..i].trim_end();
                    if !prev.ends_with(['*', '^']) && i > start {
                        raw.push(parse_term(&src[start..i], start)?);
                        start = i;
                    }
                }
                _ => {}
            }
        }
        raw.push(parse_term(&src[start..], start)?);
        Ok(Self::from_terms(raw))
    }
}

fn parse_term(t: &str, col: usize) -> Result<(Q, Q)> {
    let err = |m: &str| Error::parse(1, col + 1, format!("{m} in term '{}'", t.trim()));
    let mut t = t.trim();
    let mut sign = Q::one();
    if let Some(rest) = t.strip_prefix('+') {
        t = rest.trim();
    } else if let Some(rest) = t.strip_prefix('-') {
        sign = -sign;
        t = rest.trim();
    }
    let (coeff_s, var_s) = match t.find('t') {
        Some(i) => (t[..i].trim().trim_end_matches('*').trim(), Some(t[i + 1..].trim())),
        None => (t, None),
    };
    let coeff = if coeff_s.is_empty() {
        if var_s.is_none() {
            return Err(err("empty term"));
        }
        Q::one()
    } else {
        parse_q(coeff_s.trim_start_matches('(').trim_end_matches(')')).ok_or_else(|| err("bad coefficient"))?
    };
    let exp = match var_s {
        None => Q::zero(),
        Some("") => Q::one(),
        Some(v) => {
            let e = v.strip_prefix('^').ok_or_else(|| err("expected '^'"))?.trim();
            let e = e.strip_prefix('(').and_then(|x| x.strip_suffix(')')).unwrap_or(e);
            parse_q(e).ok_or_else(|| err("bad exponent"))?
        }
    };
    Ok((exp, sign * coeff))
}

impl fmt::Display for PuiseuxSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let mag = fmt_q(&c.abs());
            match (i, c.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            write!(f, "{mag}*t^({})", fmt_q(e))?;
        }
        Ok(())
    }
}

pub fn series_add(f: &PuiseuxSeries, g: &PuiseuxSeries) -> PuiseuxSeries {
    PuiseuxSeries::from_terms(f.terms.iter().chain(&g.terms).cloned().collect())
}

pub fn series_negate(f: &PuiseuxSeries) -> PuiseuxSeries {
    PuiseuxSeries { terms: f.terms.iter().map(|(e, c)| (e.clone(), -c)).collect() }
}

pub fn series_mul(f: &PuiseuxSeries, g: &PuiseuxSeries) -> PuiseuxSeries {
    let mut raw = Vec::with_capacity(f.terms.len() * g.terms.len());
    for (e1, c1) in &f.terms {
        for (e2, c2) in &g.terms {
            raw.push((e1 + e2, c1 * c2));
        }
    }
    PuiseuxSeries::from_terms(raw)
}
