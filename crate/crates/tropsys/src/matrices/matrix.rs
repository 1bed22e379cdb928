use std::fmt::Write;

use crate::core::{Element, SystemHandle};
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct Matrix {
    pub sys: SystemHandle,
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Element>,
}

impl PartialEq for Matrix {
    fn eq(&self, other: &Self) -> bool {
        self.sys.same(&other.sys) && self.rows == other.rows && self.cols == other.cols && self.entries == other.entries
    }
}

impl Matrix {
    pub fn new(sys: &SystemHandle, rows: usize, cols: usize, entries: Vec<Element>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Dimension(format!("{} entries for a {rows}x{cols} matrix", entries.len())));
        }
        if let Some(e) = entries.iter().find(|e| e.sys != sys.id()) {
            return Err(Error::CrossSystem(e.sys, sys.id()));
        }
        Ok(Matrix { sys: sys.clone(), rows, cols, entries })
    }

    pub fn from_rows(sys: &SystemHandle, rows: Vec<Vec<Element>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        if rows.iter().any(|x| x.len() != c) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        Matrix::new(sys, r, c, rows.into_iter().flatten().collect())
    }

    pub fn parse(sys: &SystemHandle, rows: &[&[&str]]) -> Result<Self> {
        let parsed = rows
            .iter()
            .map(|r| r.iter().map(|s| sys.parse(s)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Matrix::from_rows(sys, parsed)
    }

    pub fn identity(sys: &SystemHandle, n: usize) -> Result<Self> {
        let (z, o) = (sys.require_zero()?, sys.require_one()?);
        let entries = (0..n * n).map(|k| if k / n == k % n { o.clone() } else { z.clone() }).collect();
        Matrix::new(sys, n, n, entries)
    }

    pub fn get(&self, i: usize, j: usize) -> &Element {
        &self.entries[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> Vec<Element> {
        self.entries[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn row_vectors(&self) -> Vec<Vec<Element>> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Matrix {
        let entries =
            (0..self.cols).flat_map(|j| (0..self.rows).map(move |i| (i, j))).map(|(i, j)| self.get(i, j).clone());
        Matrix { sys: self.sys.clone(), rows: self.cols, cols: self.rows, entries: entries.collect() }
    }

    /// Delete row `i` and column `j`.
    pub fn minor(&self, i: usize, j: usize) -> Matrix {
        let mut e = Vec::new();
        for r in (0..self.rows).filter(|&r| r != i) {
            for c in (0..self.cols).filter(|&c| c != j) {
                e.push(self.get(r, c).clone());
            }
        }
        Matrix { sys: self.sys.clone(), rows: self.rows - 1, cols: self.cols - 1, entries: e }
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Matrix {
        let e =
            rows.iter().flat_map(|&r| cols.iter().map(move |&c| (r, c))).map(|(r, c)| self.get(r, c).clone()).collect();
        Matrix { sys: self.sys.clone(), rows: rows.len(), cols: cols.len(), entries: e }
    }

    pub fn map(&self, f: impl Fn(&Element) -> Result<Element>) -> Result<Matrix> {
        Ok(Matrix { entries: self.entries.iter().map(f).collect::<Result<_>>()?, ..self.clone() })
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if !self.sys.same(&other.sys) {
            return Err(Error::CrossSystem(other.sys.id(), self.sys.id()));
        }
        if self.cols != other.rows {
            return Err(Error::Dimension(format!("{}x{} times {}x{}", self.rows, self.cols, other.rows, other.cols)));
        }
        let s = &self.sys;
        let mut e = Vec::with_capacity(self.rows * other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let terms =
                    (0..self.cols).map(|k| s.mul(self.get(i, k), other.get(k, j))).collect::<Result<Vec<_>>>()?;
                e.push(match s.sum(terms.iter())? {
                    Some(x) => x,
                    None => s.require_zero()?,
                });
            }
        }
        Matrix::new(s, self.rows, other.cols, e)
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::Dimension("sum of differently shaped matrices".into()));
        }
        let e = self.entries.iter().zip(&other.entries).map(|(a, b)| self.sys.add(a, b)).collect::<Result<_>>()?;
        Matrix::new(&self.sys, self.rows, self.cols, e)
    }

    pub fn scale(&self, a: &Element) -> Result<Matrix> {
        self.map(|x| self.sys.mul(a, x))
    }

    /// Entrywise `other ⪯ self`.
    pub fn surpasses(&self, other: &Matrix) -> Result<bool> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::Dimension("comparison of differently shaped matrices".into()));
        }
        for (a, b) in self.entries.iter().zip(&other.entries) {
            if !self.sys.surpasses(a, b)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn is_tangible(&self) -> bool {
        self.entries.iter().all(|e| self.sys.is_tangible(e).unwrap_or(false))
    }

    pub fn render(&self) -> String {
        let cells: Vec<String> = self.entries.iter().map(|e| self.sys.format(e)).collect();
        let w = cells.iter().map(|c| c.chars().count()).max().unwrap_or(1);
        let mut out = String::new();
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| format!("{:>w$}", cells[i * self.cols + j])).collect();
            let _ = writeln!(out, "[ {} ]", row.join("  "));
        }
        out
    }
}

/// Which involution to apply.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Involution {
    Transpose,
    /// Blocks [[P, Q], [R, S]] ↦ [[Sᵗ, (−)Qᵗ], [(−)Rᵗ, Pᵗ]]; even order only.
    Symplectic,
}

pub fn involution(m: &Matrix, kind: Involution) -> Result<Matrix> {
    match kind {
        Involution::Transpose => Ok(m.transpose()),
        Involution::Symplectic => {
            if !m.is_square() || !m.rows.is_multiple_of(2) {
                return Err(Error::Dimension("symplectic involution needs even square order".into()));
            }
            let k = m.rows / 2;
            let s = &m.sys;
            let mut e = Vec::with_capacity(m.rows * m.rows);
            for i in 0..m.rows {
                for j in 0..m.rows {
                    let (bi, bj) = (i / k, j / k);
                    let (ii, jj) = (i % k, j % k);
                    // transpose within the opposite block
                    let src = match (bi, bj) {
                        (0, 0) => m.get(k + jj, k + ii).clone(),
                        (0, 1) => s.negate(m.get(jj, k + ii))?,
                        (1, 0) => s.negate(m.get(k + jj, ii))?,
                        _ => m.get(jj, ii).clone(),
                    };
                    e.push(src);
                }
            }
            Matrix::new(s, m.rows, m.cols, e)
        }
    }
}
