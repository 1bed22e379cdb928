use std::collections::BTreeSet;

use crate::core::{Element, SystemHandle};
use crate::error::{Error, Result};
use crate::matrices::det::det;
use crate::matrices::matrix::Matrix;

/// Default cap on generated coefficient pools.
pub const DEFAULT_POOL_CAP: usize = 512;

/// Where coefficients for dependence searches come from.
#[derive(Clone, Debug)]
pub enum Pool {
    /// Every tangible of a finite system.
    Tangibles,
    /// Quotients of tangible parts of the entries, closed once under products, capped.
    Differences {
        cap: usize,
    },
    Explicit(Vec<Element>),
}

impl Default for Pool {
    fn default() -> Self {
        Pool::Differences { cap: DEFAULT_POOL_CAP }
    }
}

/// Coefficients plus a flag telling whether they cover every tangible.
#[derive(Clone, Debug)]
pub struct ResolvedPool {
    pub coeffs: Vec<Element>,
    pub exhaustive: bool,
}

fn tangible_parts(s: &SystemHandle, x: &Element) -> Vec<Element> {
    if s.is_tangible(x).unwrap_or(false) {
        return vec![x.clone()];
    }
    s.decompose(x).ok().flatten().unwrap_or_default()
}

pub fn resolve_pool(s: &SystemHandle, entries: &[Element], pool: &Pool) -> Result<ResolvedPool> {
    let all_t = s.tangibles();
    let mut coeffs = match pool {
        Pool::Tangibles => {
            all_t.clone().ok_or_else(|| Error::Unsupported("tangible pool needs a finite system".into()))?
        }
        Pool::Explicit(v) => v.clone(),
        Pool::Differences { cap } => {
            if let Some(t) = &all_t {
                if t.len() <= *cap {
                    return Ok(ResolvedPool { coeffs: t.clone(), exhaustive: true });
                }
            }
            let parts: BTreeSet<Element> = entries.iter().flat_map(|e| tangible_parts(s, e)).collect();
            let mut d1: BTreeSet<Element> = BTreeSet::new();
            if let Some(o) = s.one() {
                d1.insert(o);
            }
            for a in &parts {
                for b in &parts {
                    if let Some(q) = s.imp().tangible_div(&a.val, &b.val) {
                        d1.insert(s.elem(q));
                    }
                }
            }
            let mut d2 = d1.clone();
            for a in &d1 {
                for b in &d1 {
                    if let Ok(p) = s.mul(a, b) {
                        if s.is_tangible(&p)? {
                            d2.insert(p);
                        }
                    }
                }
            }
            d2.into_iter().take(*cap).collect()
        }
    };
    coeffs.sort();
    coeffs.dedup();
    let exhaustive = match &all_t {
        Some(t) => t.iter().all(|x| coeffs.contains(x)),
        None => false,
    };
    Ok(ResolvedPool { coeffs, exhaustive })
}

#[derive(Clone, Debug)]
pub struct Dependence {
    pub dependent: bool,
    /// Indices of the vectors taking part, with their coefficients.
    pub rows: Vec<usize>,
    pub coeffs: Vec<Element>,
    /// A negative answer is conclusive only when the pool covered every tangible.
    pub exhaustive: bool,
}

fn is_circ_vector(s: &SystemHandle, v: &[Element]) -> Result<bool> {
    for x in v {
        if !(s.is_quasi_zero(x)? || Some(x) == s.zero().as_ref()) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Search for tangible α with Σ αⱼ vⱼ quasi-zero in every coordinate, over a fixed subset.
/// The first coefficient is normalised to 𝟙 when 𝟙 is in the pool.
fn subset_dependence(s: &SystemHandle, vs: &[&Vec<Element>], pool: &[Element]) -> Result<Option<Vec<Element>>> {
    let one = s.one().filter(|o| pool.contains(o));
    let first: Vec<Element> = match &one {
        Some(o) => vec![o.clone()],
        None => pool.to_vec(),
    };
    let k = vs.len();
    let mut idx = vec![0usize; k];
    loop {
        let coeffs: Vec<&Element> = (0..k).map(|j| if j == 0 { &first[idx[0]] } else { &pool[idx[j]] }).collect();
        let dim = vs[0].len();
        let mut sum: Vec<Element> = Vec::with_capacity(dim);
        for c in 0..dim {
            let terms = (0..k).map(|j| s.mul(coeffs[j], &vs[j][c])).collect::<Result<Vec<_>>>()?;
            sum.push(s.sum(terms.iter())?.unwrap());
        }
        if is_circ_vector(s, &sum)? {
            return Ok(Some(coeffs.into_iter().cloned().collect()));
        }
        // odometer
        let mut j = k;
        loop {
            if j == 0 {
                return Ok(None);
            }
            j -= 1;
            let lim = if j == 0 { first.len() } else { pool.len() };
            idx[j] += 1;
            if idx[j] < lim {
                break;
            }
            idx[j] = 0;
        }
    }
}

fn subsets_by_size(n: usize) -> Vec<Vec<usize>> {
    let mut v: Vec<Vec<usize>> = (1u32..(1 << n)).map(|m| (0..n).filter(|i| m >> i & 1 == 1).collect()).collect();
    v.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
    v
}

/// Whether some nonempty subset of the vectors has a quasi-zero tangible combination.
pub fn circ_dependent(s: &SystemHandle, vectors: &[Vec<Element>], pool: &ResolvedPool) -> Result<Dependence> {
    if vectors.is_empty() {
        return Ok(Dependence { dependent: false, rows: vec![], coeffs: vec![], exhaustive: pool.exhaustive });
    }
    for sub in subsets_by_size(vectors.len()) {
        let vs: Vec<&Vec<Element>> = sub.iter().map(|&i| &vectors[i]).collect();
        if let Some(c) = subset_dependence(s, &vs, &pool.coeffs)? {
            return Ok(Dependence { dependent: true, rows: sub, coeffs: c, exhaustive: pool.exhaustive });
        }
    }
    Ok(Dependence { dependent: false, rows: vec![], coeffs: vec![], exhaustive: pool.exhaustive })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Rank {
    pub rank: usize,
    /// When false, missed dependences could make the true rank smaller.
    pub exact: bool,
}

/// Largest set of rows with no dependent nonempty subset.
pub fn row_rank(m: &Matrix, pool: &Pool) -> Result<Rank> {
    let rows = m.row_vectors();
    let rp = resolve_pool(&m.sys, &m.entries, pool)?;
    let n = rows.len();
    let mut dep = vec![false; 1 << n];
    for mask in 1usize..(1 << n) {
        let sub: Vec<&Vec<Element>> = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| &rows[i]).collect();
        dep[mask] = subset_dependence(&m.sys, &sub, &rp.coeffs)?.is_some();
    }
    // a set is independent when no nonempty subset is dependent
    let mut indep = vec![true; 1 << n];
    let mut best = 0;
    for mask in 1usize..(1 << n) {
        let mut ok = !dep[mask];
        let mut sub = (mask - 1) & mask;
        while ok && sub > 0 {
            if !indep[sub] {
                ok = false;
            }
            sub = (sub - 1) & mask;
        }
        indep[mask] = ok;
        if ok {
            best = best.max(mask.count_ones() as usize);
        }
    }
    Ok(Rank { rank: best, exact: rp.exhaustive })
}

pub fn column_rank(m: &Matrix, pool: &Pool) -> Result<Rank> {
    row_rank(&m.transpose(), pool)
}

/// Largest k with a k×k minor of tangible determinant.
pub fn submatrix_rank(m: &Matrix) -> Result<usize> {
    let kmax = m.rows.min(m.cols);
    for k in (1..=kmax).rev() {
        for rs in combinations(m.rows, k) {
            for cs in combinations(m.cols, k) {
                let d = det(&m.submatrix(&rs, &cs))?;
                if m.sys.is_tangible(&d)? {
                    return Ok(k);
                }
            }
        }
    }
    Ok(0)
}

pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}
