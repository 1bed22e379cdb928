//! Sparse polynomials with coefficients in a system.

use std::collections::BTreeMap;

use crate::core::{Element, EltVal, LayerVal, SuperVal, SystemHandle, Val};
use crate::error::{Error, Result};
use crate::rational::{q, Q};

/// Largest degree accepted by [`systemic_roots`].
pub const ROOT_DEGREE_CAP: u32 = 8;

#[derive(Clone, Debug)]
pub struct Polynomial {
    pub sys: SystemHandle,
    pub nvars: usize,
    /// Exponent vector ↦ coefficient; zero coefficients are never stored.
    pub terms: BTreeMap<Vec<u32>, Element>,
}

impl PartialEq for Polynomial {
    fn eq(&self, o: &Self) -> bool {
        self.sys.same(&o.sys) && self.nvars == o.nvars && self.terms == o.terms
    }
}

impl Polynomial {
    pub fn zero(sys: &SystemHandle, nvars: usize) -> Self {
        Polynomial { sys: sys.clone(), nvars, terms: BTreeMap::new() }
    }

    pub fn from_terms(sys: &SystemHandle, nvars: usize, terms: Vec<(Vec<u32>, Element)>) -> Result<Self> {
        let mut p = Polynomial::zero(sys, nvars);
        for (e, c) in terms {
            if e.len() != nvars {
                return Err(Error::Dimension(format!("monomial with {} exponents in {nvars} variables", e.len())));
            }
            p.add_term(e, c)?;
        }
        Ok(p)
    }

    /// Univariate from (exponent, literal) pairs.
    pub fn univariate(sys: &SystemHandle, terms: &[(u32, &str)]) -> Result<Self> {
        let t = terms.iter().map(|(k, l)| Ok((vec![*k], sys.parse(l)?))).collect::<Result<Vec<_>>>()?;
        Polynomial::from_terms(sys, 1, t)
    }

    fn add_term(&mut self, e: Vec<u32>, c: Element) -> Result<()> {
        let s = self.sys.clone();
        let new = match self.terms.remove(&e) {
            Some(old) => s.add(&old, &c)?,
            None => c,
        };
        if Some(&new) != s.zero().as_ref() {
            self.terms.insert(e, new);
        }
        Ok(())
    }

    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    pub fn coefficient(&self, e: &[u32]) -> Option<&Element> {
        self.terms.get(e)
    }

    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return self.sys.zero().map(|z| self.sys.format(&z)).unwrap_or_else(|| "0".into());
        }
        let var = |i: usize| if self.nvars == 1 { "λ".to_string() } else { format!("x{i}") };
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(e, c)| {
                let mono: Vec<String> = e
                    .iter()
                    .enumerate()
                    .filter(|(_, &k)| k > 0)
                    .map(|(i, &k)| if k == 1 { var(i) } else { format!("{}^{k}", var(i)) })
                    .collect();
                let cs = self.sys.format(c);
                if mono.is_empty() {
                    cs
                } else {
                    format!("{cs}·{}", mono.join("·"))
                }
            })
            .collect();
        parts.join(" + ")
    }
}

fn check_same(p: &Polynomial, q: &Polynomial) -> Result<()> {
    if !p.sys.same(&q.sys) {
        return Err(Error::CrossSystem(q.sys.id(), p.sys.id()));
    }
    if p.nvars != q.nvars {
        return Err(Error::Dimension("polynomials in different numbers of variables".into()));
    }
    Ok(())
}

pub fn poly_add(p: &Polynomial, q: &Polynomial) -> Result<Polynomial> {
    check_same(p, q)?;
    let mut r = p.clone();
    for (e, c) in &q.terms {
        r.add_term(e.clone(), c.clone())?;
    }
    Ok(r)
}

pub fn poly_negate(p: &Polynomial) -> Result<Polynomial> {
    let mut r = Polynomial::zero(&p.sys, p.nvars);
    for (e, c) in &p.terms {
        r.terms.insert(e.clone(), p.sys.negate(c)?);
    }
    Ok(r)
}

pub fn poly_mul(p: &Polynomial, q: &Polynomial) -> Result<Polynomial> {
    check_same(p, q)?;
    if !p.sys.has_mul() {
        return Err(Error::NoMultiplication(p.sys.name()));
    }
    let mut r = Polynomial::zero(&p.sys, p.nvars);
    for (e1, c1) in &p.terms {
        for (e2, c2) in &q.terms {
            let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
            r.add_term(e, p.sys.mul(c1, c2)?)?;
        }
    }
    Ok(r)
}

fn power(s: &SystemHandle, a: &Element, k: u32) -> Result<Option<Element>> {
    let mut acc: Option<Element> = None;
    for _ in 0..k {
        acc = Some(match acc {
            None => a.clone(),
            Some(x) => s.mul(&x, a)?,
        });
    }
    Ok(acc)
}

pub fn eval(p: &Polynomial, point: &[Element]) -> Result<Element> {
    let s = &p.sys;
    if point.len() != p.nvars {
        return Err(Error::Dimension(format!("{} values for {} variables", point.len(), p.nvars)));
    }
    let mut total: Option<Element> = None;
    for (e, c) in &p.terms {
        let mut t = c.clone();
        for (x, &k) in point.iter().zip(e) {
            if let Some(pw) = power(s, x, k)? {
                t = s.mul(&t, &pw)?;
            }
        }
        total = Some(match total {
            None => t,
            Some(acc) => s.add(&acc, &t)?,
        });
    }
    match total {
        Some(t) => Ok(t),
        None => s.require_zero(),
    }
}

/// Tangible `a` with f(a) ⪰ 𝟘. Finite systems are scanned completely; parametric
/// magnitude systems use the tie points of pairs of monomials as candidates.
pub fn systemic_roots(p: &Polynomial) -> Result<Vec<Element>> {
    if p.nvars != 1 {
        return Err(Error::Unsupported("roots of multivariate polynomials".into()));
    }
    if p.degree() > ROOT_DEGREE_CAP {
        return Err(Error::Unsupported(format!("degree {} exceeds the cap {ROOT_DEGREE_CAP}", p.degree())));
    }
    let s = &p.sys;
    let cands = match s.tangibles() {
        Some(t) => t,
        None => tie_candidates(p)?,
    };
    let mut out = Vec::new();
    for a in cands {
        if s.surpasses_zero(&eval(p, std::slice::from_ref(&a))?)? && !out.contains(&a) {
            out.push(a);
        }
    }
    out.sort();
    Ok(out)
}

fn magnitude_and_sign(v: &Val) -> Option<(Q, Option<Q>)> {
    match v {
        Val::MaxPlus(Some(m)) => Some((m.clone(), None)),
        Val::Super(SuperVal::Tan(m) | SuperVal::Ghost(m)) => Some((m.clone(), None)),
        Val::Layer(LayerVal::At(_, m)) => Some((m.clone(), None)),
        Val::Elt(EltVal::At(c, m)) => Some((m.clone(), Some(c.clone()))),
        _ => None,
    }
}

fn tie_candidates(p: &Polynomial) -> Result<Vec<Element>> {
    let s = &p.sys;
    let info: Vec<(u32, Q, Option<Q>)> =
        p.terms.iter().filter_map(|(e, c)| magnitude_and_sign(&c.val).map(|(m, sg)| (e[0], m, sg))).collect();
    let one = s.require_one()?;
    let mut out = Vec::new();
    for (i, (ei, mi, ci)) in info.iter().enumerate() {
        for (ej, mj, cj) in info.iter().skip(i + 1) {
            if ei == ej {
                continue;
            }
            let mag = (mi - mj) / q(*ej as i64 - *ei as i64);
            let mut coeffs = vec![q(1), q(-1)];
            if let (Some(a), Some(b)) = (ci, cj) {
                if ej.abs_diff(*ei) == 1 {
                    coeffs.push(a / b);
                    coeffs.push(-(a / b));
                }
            }
            for v in with_magnitude(&one.val, &mag, &coeffs) {
                let e = s.elem(v);
                if s.is_tangible(&e)? {
                    out.push(e);
                }
            }
        }
    }
    Ok(out)
}

fn with_magnitude(one: &Val, mag: &Q, coeffs: &[Q]) -> Vec<Val> {
    match one {
        Val::MaxPlus(_) => vec![Val::MaxPlus(Some(mag.clone()))],
        Val::Super(_) => vec![Val::Super(SuperVal::Tan(mag.clone()))],
        Val::Layer(LayerVal::At(l, _)) => {
            vec![Val::Layer(LayerVal::At(*l, mag.clone())), Val::Layer(LayerVal::At(-*l, mag.clone()))]
        }
        Val::Elt(_) => coeffs.iter().map(|c| Val::Elt(EltVal::At(c.clone(), mag.clone()))).collect(),
        _ => vec![],
    }
}
