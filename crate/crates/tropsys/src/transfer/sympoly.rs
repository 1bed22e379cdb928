//! Polynomials with coefficients in the symmetrized naturals: pairs (a, b) read as a − b,
//! multiplied by (a, b)(c, d) = (ac + bd, ad + bc), negated by swapping.

use std::collections::BTreeMap;
use std::fmt::Write;

use crate::error::{Error, Result};

/// Exponent vector (commutative) or word of variable indices (non-commutative).
pub type Monomial = Vec<u32>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymPoly {
    pub nvars: usize,
    pub commutative: bool,
    pub terms: BTreeMap<Monomial, (u64, u64)>,
    pub names: Option<Vec<String>>,
}

fn ck(x: Option<u64>) -> Result<u64> {
    x.ok_or(Error::Overflow)
}

impl SymPoly {
    pub fn zero(nvars: usize, commutative: bool) -> Self {
        SymPoly { nvars, commutative, terms: BTreeMap::new(), names: None }
    }

    pub fn with_names(mut self, names: Vec<String>) -> Self {
        self.names = Some(names);
        self
    }

    pub fn constant(nvars: usize, commutative: bool, c: (u64, u64)) -> Self {
        let mut p = SymPoly::zero(nvars, commutative);
        if c != (0, 0) {
            p.terms.insert(if commutative { vec![0; nvars] } else { vec![] }, c);
        }
        p
    }

    pub fn var(nvars: usize, commutative: bool, i: usize) -> Self {
        let mut p = SymPoly::zero(nvars, commutative);
        let m = if commutative {
            let mut e = vec![0; nvars];
            e[i] = 1;
            e
        } else {
            vec![i as u32]
        };
        p.terms.insert(m, (1, 0));
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn get(&self, m: &Monomial) -> (u64, u64) {
        self.terms.get(m).copied().unwrap_or((0, 0))
    }

    fn compatible(&self, o: &SymPoly) -> Result<()> {
        if self.nvars != o.nvars || self.commutative != o.commutative {
            return Err(Error::Dimension("incompatible symbolic polynomials".into()));
        }
        Ok(())
    }

    fn insert_add(&mut self, m: Monomial, c: (u64, u64)) -> Result<()> {
        if c == (0, 0) {
            return Ok(());
        }
        let e = self.terms.entry(m).or_insert((0, 0));
        e.0 = ck(e.0.checked_add(c.0))?;
        e.1 = ck(e.1.checked_add(c.1))?;
        Ok(())
    }

    pub fn add(&self, o: &SymPoly) -> Result<SymPoly> {
        self.compatible(o)?;
        let mut r = self.clone();
        for (m, c) in &o.terms {
            r.insert_add(m.clone(), *c)?;
        }
        Ok(r)
    }

    pub fn neg(&self) -> SymPoly {
        let mut r = self.clone();
        for c in r.terms.values_mut() {
            *c = (c.1, c.0);
        }
        r
    }

    pub fn mul(&self, o: &SymPoly) -> Result<SymPoly> {
        self.compatible(o)?;
        let mut r = SymPoly { terms: BTreeMap::new(), ..self.clone() };
        for (m1, (a, b)) in &self.terms {
            for (m2, (c, d)) in &o.terms {
                let m: Monomial = if self.commutative {
                    m1.iter().zip(m2).map(|(x, y)| x + y).collect()
                } else {
                    m1.iter().chain(m2).copied().collect()
                };
                let p0 = ck(ck(a.checked_mul(*c))?.checked_add(ck(b.checked_mul(*d))?))?;
                let p1 = ck(ck(a.checked_mul(*d))?.checked_add(ck(b.checked_mul(*c))?))?;
                r.insert_add(m, (p0, p1))?;
            }
        }
        Ok(r)
    }

    /// Image under (a, b) ↦ a − b, zero terms dropped.
    pub fn classicalize(&self) -> BTreeMap<Monomial, i128> {
        self.terms.iter().map(|(m, (a, b))| (m.clone(), *a as i128 - *b as i128)).filter(|(_, v)| *v != 0).collect()
    }

    /// Lift an integer polynomial: n ↦ (n, 0) for n ≥ 0 and (0, −n) otherwise.
    pub fn lift(nvars: usize, commutative: bool, classical: &BTreeMap<Monomial, i128>) -> Result<SymPoly> {
        let mut p = SymPoly::zero(nvars, commutative);
        for (m, &v) in classical {
            let c = if v >= 0 { (v as u64, 0) } else { (0, v.unsigned_abs() as u64) };
            if v.unsigned_abs() > u64::MAX as u128 {
                return Err(Error::Overflow);
            }
            p.insert_add(m.clone(), c)?;
        }
        Ok(p)
    }

    pub fn render_monomial(&self, m: &Monomial) -> String {
        let name = |i: usize| self.names.as_ref().and_then(|n| n.get(i).cloned()).unwrap_or_else(|| format!("x{i}"));
        if self.commutative {
            let parts: Vec<String> = m
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(i, &k)| if k == 1 { name(i) } else { format!("{}^{k}", name(i)) })
                .collect();
            if parts.is_empty() {
                "1".into()
            } else {
                parts.join("*")
            }
        } else if m.is_empty() {
            "1".into()
        } else {
            m.iter().map(|&i| name(i as usize)).collect::<Vec<_>>().join("*")
        }
    }

    pub fn render(&self) -> String {
        let mut s = String::new();
        for (i, (m, (a, b))) in self.terms.iter().enumerate() {
            if i > 0 {
                s.push_str(" + ");
            }
            let _ = write!(s, "({a},{b}){}", self.render_monomial(m));
        }
        if s.is_empty() {
            s.push_str("(0,0)");
        }
        s
    }
}

/// Determinant of a square matrix of symbolic polynomials.
pub fn sym_det(m: &[Vec<SymPoly>]) -> Result<SymPoly> {
    let n = m.len();
    let (nv, comm) = (m[0][0].nvars, m[0][0].commutative);
    let mut total = SymPoly::zero(nv, comm);
    for (p, even) in crate::matrices::permutations(n) {
        let mut prod = SymPoly::constant(nv, comm, (1, 0));
        for (i, &j) in p.iter().enumerate() {
            prod = prod.mul(&m[i][j])?;
        }
        total = total.add(&if even { prod } else { prod.neg() })?;
    }
    Ok(total)
}

pub fn sym_matmul(a: &[Vec<SymPoly>], b: &[Vec<SymPoly>]) -> Result<Vec<Vec<SymPoly>>> {
    let n = a.len();
    let (nv, comm) = (a[0][0].nvars, a[0][0].commutative);
    let mut out = vec![vec![SymPoly::zero(nv, comm); n]; n];
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                out[i][j] = out[i][j].add(&a[i][k].mul(&b[k][j])?)?;
            }
        }
    }
    Ok(out)
}

pub fn sym_adjoint(a: &[Vec<SymPoly>]) -> Result<Vec<Vec<SymPoly>>> {
    let n = a.len();
    let (nv, comm) = (a[0][0].nvars, a[0][0].commutative);
    if n == 1 {
        return Ok(vec![vec![SymPoly::constant(nv, comm, (1, 0))]]);
    }
    let mut out = vec![vec![SymPoly::zero(nv, comm); n]; n];
    for i in 0..n {
        for j in 0..n {
            let minor: Vec<Vec<SymPoly>> = (0..n)
                .filter(|&r| r != j)
                .map(|r| (0..n).filter(|&c| c != i).map(|c| a[r][c].clone()).collect())
                .collect();
            let d = sym_det(&minor)?;
            out[i][j] = if (i + j) % 2 == 0 { d } else { d.neg() };
        }
    }
    Ok(out)
}
