//! Certificates that one symbolic polynomial surpasses another.

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::transfer::sympoly::{sym_adjoint, sym_det, sym_matmul, Monomial, SymPoly};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertRow {
    pub monomial: Monomial,
    pub p: (u64, u64),
    pub q: (u64, u64),
    /// P's coefficient equals Q's plus (k, k).
    pub k: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub rows: Vec<CertRow>,
    /// Some coefficient has a component above 1.
    pub large_coefficients: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RefusalReason {
    /// The two polynomials differ after classicalization.
    ClassicalMismatch,
    /// Q's coefficient exceeds P's.
    Deficit,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Refusal {
    pub monomial: Monomial,
    pub p: (u64, u64),
    pub q: (u64, u64),
    pub reason: RefusalReason,
}

/// Decide `Q ⪯ P`: equal classical images and componentwise P ≥ Q, so P = Q + Σ (kᵢ, kᵢ) mᵢ.
pub fn transfer_check(p: &SymPoly, q: &SymPoly) -> Result<std::result::Result<Certificate, Refusal>> {
    if p.nvars != q.nvars || p.commutative != q.commutative {
        return Err(Error::Dimension("incompatible symbolic polynomials".into()));
    }
    let mut monos: Vec<&Monomial> = p.terms.keys().chain(q.terms.keys()).collect();
    monos.sort();
    monos.dedup();
    let mut rows = Vec::new();
    let mut large = false;
    for m in monos {
        let (pc, qc) = (p.get(m), q.get(m));
        large |= pc.0 > 1 || pc.1 > 1 || qc.0 > 1 || qc.1 > 1;
        let refuse = |reason| Refusal { monomial: m.clone(), p: pc, q: qc, reason };
        if pc.0 as i128 - pc.1 as i128 != qc.0 as i128 - qc.1 as i128 {
            return Ok(Err(refuse(RefusalReason::ClassicalMismatch)));
        }
        if pc.0 < qc.0 {
            return Ok(Err(refuse(RefusalReason::Deficit)));
        }
        rows.push(CertRow { monomial: m.clone(), p: pc, q: qc, k: pc.0 - qc.0 });
    }
    let cert = Certificate { rows, large_coefficients: large };
    if !reverify(p, q, &cert)? {
        return Err(Error::Precondition("certificate failed re-verification".into()));
    }
    Ok(Ok(cert))
}

/// Rebuild P from Q and the certificate using the polynomial arithmetic itself.
pub fn reverify(p: &SymPoly, q: &SymPoly, cert: &Certificate) -> Result<bool> {
    let mut acc = q.clone();
    for r in &cert.rows {
        if r.k == 0 {
            continue;
        }
        let mut t = SymPoly::zero(q.nvars, q.commutative);
        t.terms.insert(r.monomial.clone(), (r.k, r.k));
        acc = acc.add(&t)?;
    }
    Ok(acc.terms == p.terms)
}

pub fn render_certificate(p: &SymPoly, cert: &Certificate) -> String {
    let mut s = String::from("monomial\tP\tQ\tk\n");
    for r in &cert.rows {
        let _ =
            writeln!(s, "{}\t({},{})\t({},{})\t{}", p.render_monomial(&r.monomial), r.p.0, r.p.1, r.q.0, r.q.1, r.k);
    }
    if cert.large_coefficients {
        s.push_str("note: coefficients beyond ±1 occur; the inequality transfers only to systems where these multiples behave as in ℕ\n");
    }
    s
}

/// Identities among n×n generic matrices A = (aᵢⱼ), B = (bᵢⱼ).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DetIdentity {
    /// |A||B| ⪯ |AB|
    DetMult,
    /// adj(B) adj(A) ⪯ adj(AB), entrywise
    AdjMult,
    /// |A| I ⪯ A adj(A), entrywise
    LaplaceAdj,
}

impl DetIdentity {
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "det_mult" => Some(DetIdentity::DetMult),
            "adj_mult" => Some(DetIdentity::AdjMult),
            "laplace_adj" => Some(DetIdentity::LaplaceAdj),
            _ => None,
        }
    }
}

#[derive(Clone, Debug)]
pub struct EntryCertificate {
    /// Matrix entry, or None for a scalar identity.
    pub entry: Option<(usize, usize)>,
    pub p: SymPoly,
    pub q: SymPoly,
    pub outcome: std::result::Result<Certificate, Refusal>,
}

fn generic(n: usize, offset: usize, nv: usize, names: &[String]) -> Vec<Vec<SymPoly>> {
    (0..n)
        .map(|i| (0..n).map(|j| SymPoly::var(nv, true, offset + i * n + j).with_names(names.to_vec())).collect())
        .collect()
}

pub fn symbolic_det_identity(n: usize, id: DetIdentity) -> Result<Vec<EntryCertificate>> {
    if !(2..=4).contains(&n) {
        return Err(Error::Precondition("symbolic identities are generated for 2 ≤ n ≤ 4".into()));
    }
    let nv = 2 * n * n;
    let names: Vec<String> = (0..nv)
        .map(|k| {
            let (letter, r) = if k < n * n { ('a', k) } else { ('b', k - n * n) };
            format!("{letter}{}{}", r / n + 1, r % n + 1)
        })
        .collect();
    let a = generic(n, 0, nv, &names);
    let b = generic(n, n * n, nv, &names);
    let named = |p: SymPoly| p.with_names(names.clone());
    let mut out = Vec::new();
    match id {
        DetIdentity::DetMult => {
            let p = named(sym_det(&sym_matmul(&a, &b)?)?);
            let q = named(sym_det(&a)?.mul(&sym_det(&b)?)?);
            let outcome = transfer_check(&p, &q)?;
            out.push(EntryCertificate { entry: None, p, q, outcome });
        }
        DetIdentity::AdjMult => {
            let lhs = sym_matmul(&sym_adjoint(&b)?, &sym_adjoint(&a)?)?;
            let rhs = sym_adjoint(&sym_matmul(&a, &b)?)?;
            for i in 0..n {
                for j in 0..n {
                    let (p, q) = (named(rhs[i][j].clone()), named(lhs[i][j].clone()));
                    let outcome = transfer_check(&p, &q)?;
                    out.push(EntryCertificate { entry: Some((i, j)), p, q, outcome });
                }
            }
        }
        DetIdentity::LaplaceAdj => {
            let d = sym_det(&a)?;
            let rhs = sym_matmul(&a, &sym_adjoint(&a)?)?;
            for i in 0..n {
                for j in 0..n {
                    let q = named(if i == j { d.clone() } else { SymPoly::zero(nv, true) });
                    let p = named(rhs[i][j].clone());
                    let outcome = transfer_check(&p, &q)?;
                    out.push(EntryCertificate { entry: Some((i, j)), p, q, outcome });
                }
            }
        }
    }
    Ok(out)
}
