use crate::core::{Element, SystemHandle};
use crate::error::{Error, Result};
use crate::matrices::matrix::Matrix;

/// All permutations of 0..n with their parity (true = even).
pub fn permutations(n: usize) -> Vec<(Vec<usize>, bool)> {
    fn rec(cur: &mut Vec<usize>, used: &mut [bool], inv: usize, out: &mut Vec<(Vec<usize>, bool)>) {
        let n = used.len();
        if cur.len() == n {
            out.push((cur.clone(), inv.is_multiple_of(2)));
            return;
        }
        for v in 0..n {
            if !used[v] {
                let add = cur.iter().filter(|&&x| x > v).count();
                used[v] = true;
                cur.push(v);
                rec(cur, used, inv + add, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], 0, &mut out);
    out
}

/// Sums over even and odd permutations; `None` for an empty sum.
#[derive(Clone, Debug, PartialEq)]
pub struct DetParts {
    pub even: Option<Element>,
    pub odd: Option<Element>,
}

pub fn det_parts(m: &Matrix) -> Result<DetParts> {
    if !m.is_square() {
        return Err(Error::NotSquare(m.rows, m.cols));
    }
    let s = &m.sys;
    if !s.has_mul() {
        return Err(Error::NoMultiplication(s.name()));
    }
    let mut even: Option<Element> = None;
    let mut odd: Option<Element> = None;
    for (p, is_even) in permutations(m.rows) {
        let mut prod: Option<Element> = None;
        for (i, &j) in p.iter().enumerate() {
            let x = m.get(i, j);
            prod = Some(match prod {
                None => x.clone(),
                Some(acc) => s.mul(&acc, x)?,
            });
        }
        let Some(prod) = prod else { continue };
        let slot = if is_even { &mut even } else { &mut odd };
        *slot = Some(match slot.take() {
            None => prod,
            Some(acc) => s.add(&acc, &prod)?,
        });
    }
    Ok(DetParts { even, odd })
}

/// |A| = (even part) + (−)(odd part); the empty matrix has determinant 𝟙.
pub fn det(m: &Matrix) -> Result<Element> {
    let s = &m.sys;
    if m.rows == 0 && m.cols == 0 {
        return s.require_one();
    }
    let p = det_parts(m)?;
    combine(s, p)
}

fn combine(s: &SystemHandle, p: DetParts) -> Result<Element> {
    match (p.even, p.odd) {
        (Some(e), Some(o)) => s.sub(&e, &o),
        (Some(e), None) => Ok(e),
        (None, Some(o)) => s.negate(&o),
        (None, None) => s.require_zero(),
    }
}

/// adj(A)_{ij} = (−)^{i+j} |A with row j and column i deleted|.
pub fn adjoint(m: &Matrix) -> Result<Matrix> {
    if !m.is_square() {
        return Err(Error::NotSquare(m.rows, m.cols));
    }
    let s = &m.sys;
    let n = m.rows;
    let mut e = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let d = det(&m.minor(j, i))?;
            e.push(if (i + j) % 2 == 0 { d } else { s.negate(&d)? });
        }
    }
    Matrix::new(s, n, n, e)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Singularity {
    /// Tangible determinant.
    Nonsingular,
    /// Determinant is a quasi-zero.
    CircSingular,
    /// Determinant surpasses 𝟘 without being a quasi-zero.
    SingularOnly,
    /// None of the above.
    TangiblyIndeterminate,
}

impl Singularity {
    pub fn label(&self) -> &'static str {
        match self {
            Singularity::Nonsingular => "nonsingular",
            Singularity::CircSingular => "circ_singular",
            Singularity::SingularOnly => "singular_only",
            Singularity::TangiblyIndeterminate => "tangibly_indeterminate",
        }
    }
}

pub fn singularity_class(m: &Matrix) -> Result<Singularity> {
    let d = det(m)?;
    classify_det(&m.sys, &d)
}

pub fn classify_det(s: &SystemHandle, d: &Element) -> Result<Singularity> {
    Ok(if s.is_tangible(d)? {
        Singularity::Nonsingular
    } else if s.is_quasi_zero(d)? || Some(d) == s.zero().as_ref() {
        Singularity::CircSingular
    } else if s.surpasses_zero(d)? {
        Singularity::SingularOnly
    } else {
        Singularity::TangiblyIndeterminate
    })
}
