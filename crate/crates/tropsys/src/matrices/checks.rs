//! Batch checks of determinant and adjoint inequalities.

use crate::core::{Element, SystemHandle};
use crate::error::Result;
use crate::matrices::dependence::{circ_dependent, ResolvedPool};
use crate::matrices::det::{adjoint, classify_det, det, Singularity};
use crate::matrices::matrix::Matrix;

/// All n×n matrices with entries drawn from `entries`, in lexicographic order.
pub fn enumerate_matrices(s: &SystemHandle, n: usize, entries: &[Element]) -> Result<Vec<Matrix>> {
    let cells = n * n;
    let total = entries.len().pow(cells as u32);
    let mut out = Vec::with_capacity(total);
    for mut code in 0..total {
        let mut e = vec![entries[0].clone(); cells];
        for c in (0..cells).rev() {
            e[c] = entries[code % entries.len()].clone();
            code /= entries.len();
        }
        out.push(Matrix::new(s, n, n, e)?);
    }
    Ok(out)
}

#[derive(Clone, Debug, Default)]
pub struct IdentityReport {
    pub pairs: usize,
    pub matrices: usize,
    /// |A||B| ⪯ |AB|
    pub det_mult_failures: usize,
    /// adj(B) adj(A) ⪯ adj(AB)
    pub adj_mult_failures: usize,
    /// |A| I ⪯ A adj(A)
    pub laplace_failures: usize,
    pub first_failure: Option<String>,
}

impl IdentityReport {
    pub fn ok(&self) -> bool {
        self.det_mult_failures == 0 && self.adj_mult_failures == 0 && self.laplace_failures == 0
    }
}

/// Check the three multiplicativity inequalities over all ordered pairs of `ms`.
pub fn check_det_identities(s: &SystemHandle, ms: &[Matrix]) -> Result<IdentityReport> {
    let mut rep = IdentityReport { matrices: ms.len(), ..Default::default() };
    let dets: Vec<Element> = ms.iter().map(det).collect::<Result<_>>()?;
    let adjs: Vec<Matrix> = ms.iter().map(adjoint).collect::<Result<_>>()?;
    for (i, a) in ms.iter().enumerate() {
        let n = a.rows;
        let lap_rhs = a.mul(&adjs[i])?;
        let lap_lhs = Matrix::identity(s, n)?.scale(&dets[i])?;
        if !lap_rhs.surpasses(&lap_lhs)? {
            rep.laplace_failures += 1;
            rep.first_failure.get_or_insert_with(|| format!("laplace_adj at\n{}", a.render()));
        }
        for (j, b) in ms.iter().enumerate() {
            rep.pairs += 1;
            let ab = a.mul(b)?;
            let dab = det(&ab)?;
            if !s.surpasses(&dab, &s.mul(&dets[i], &dets[j])?)? {
                rep.det_mult_failures += 1;
                rep.first_failure.get_or_insert_with(|| format!("det_mult at\n{}{}", a.render(), b.render()));
            }
            let lhs = adjs[j].mul(&adjs[i])?;
            if !adjoint(&ab)?.surpasses(&lhs)? {
                rep.adj_mult_failures += 1;
                rep.first_failure.get_or_insert_with(|| format!("adj_mult at\n{}{}", a.render(), b.render()));
            }
        }
    }
    Ok(rep)
}

#[derive(Clone, Debug, Default)]
pub struct DependenceReport {
    pub matrices: usize,
    pub dependent: usize,
    /// Dependent rows but determinant not a quasi-zero.
    pub violations: usize,
    pub first_violation: Option<String>,
}

/// Tangible matrices with dependent rows should have quasi-zero determinant.
pub fn check_dependence_vs_det(s: &SystemHandle, ms: &[Matrix], pool: &ResolvedPool) -> Result<DependenceReport> {
    let mut rep = DependenceReport::default();
    for m in ms {
        rep.matrices += 1;
        let d = circ_dependent(s, &m.row_vectors(), pool)?;
        if !d.dependent {
            continue;
        }
        rep.dependent += 1;
        if classify_det(s, &det(m)?)? != Singularity::CircSingular {
            rep.violations += 1;
            rep.first_violation.get_or_insert_with(|| m.render());
        }
    }
    Ok(rep)
}
