//! The triangle hyperfield on ℚ≥0: a ⊞ b = [|a - b|, a + b], closed under sums as intervals.

use std::sync::Arc;

use num_traits::Zero;

use crate::core::{Family, Height, SurpassKind, SystemHandle, SystemImpl, TriVal, Val};
use crate::error::{Error, Result};
use crate::hypersystems::hypergroup::ProductMode;
use crate::rational::{fmt_q, parse_q, q, qf, Q};

pub struct Triangle {
    pub product: ProductMode,
}

fn tv(v: &Val) -> &TriVal {
    match v {
        Val::Tri(t) => t,
        o => panic!("triangle received {o:?}"),
    }
}

pub fn interval(lo: Q, hi: Q) -> Val {
    Val::Tri(TriVal { lo, hi })
}

fn maxq(a: Q, b: Q) -> Q {
    if a > b {
        a
    } else {
        b
    }
}

pub fn triangle_add(x: &TriVal, y: &TriVal) -> TriVal {
    let gap = maxq(maxq(Q::zero(), &x.lo - &y.hi), &y.lo - &x.hi);
    TriVal { lo: gap, hi: &x.hi + &y.hi }
}

fn centre_radius(x: &TriVal) -> (Q, Q) {
    let two = q(2);
    ((&x.lo + &x.hi) / &two, (&x.hi - &x.lo) / two)
}

impl SystemImpl for Triangle {
    fn name(&self) -> String {
        "triangle".into()
    }
    fn family(&self) -> Family {
        Family::Hyper
    }
    fn surpass_kind(&self) -> SurpassKind {
        SurpassKind::Subset
    }
    fn has_mul(&self) -> bool {
        true
    }
    fn zero(&self) -> Option<Val> {
        Some(interval(q(0), q(0)))
    }
    fn one(&self) -> Option<Val> {
        Some(interval(q(1), q(1)))
    }
    fn add(&self, a: &Val, b: &Val) -> Result<Val> {
        Ok(Val::Tri(triangle_add(tv(a), tv(b))))
    }
    fn neg(&self, a: &Val) -> Val {
        a.clone()
    }
    fn mul(&self, a: &Val, b: &Val) -> Result<Val> {
        let (x, y) = (tv(a), tv(b));
        Ok(match self.product {
            ProductMode::Pointwise => interval(&x.lo * &y.lo, &x.hi * &y.hi),
            ProductMode::Generated => {
                // x = m ⊞ r, so x·y = m·y ⊞ r·y
                let (m, r) = centre_radius(x);
                interval(maxq(Q::zero(), &m * &y.lo - &r * &y.hi), &x.hi * &y.hi)
            }
        })
    }
    fn is_tangible(&self, a: &Val) -> bool {
        let x = tv(a);
        x.lo == x.hi && !x.lo.is_zero()
    }
    fn is_quasi_zero(&self, a: &Val) -> bool {
        tv(a).lo.is_zero()
    }
    fn surpasses(&self, a: &Val, b: &Val) -> bool {
        let (x, y) = (tv(a), tv(b));
        x.lo <= y.lo && y.hi <= x.hi
    }
    fn surpasses_zero(&self, a: &Val) -> bool {
        tv(a).lo.is_zero()
    }
    fn height(&self, a: &Val, _bound: u32) -> Height {
        Height::Exact(self.decompose(a).map(|d| d.len() as u32).unwrap_or(0))
    }
    fn decompose(&self, a: &Val) -> Option<Vec<Val>> {
        let x = tv(a);
        if x.hi.is_zero() {
            return Some(vec![]);
        }
        if x.lo == x.hi {
            return Some(vec![a.clone()]);
        }
        let (m, r) = centre_radius(x);
        let pt = |v: Q| interval(v.clone(), v);
        Some(if x.lo.is_zero() { vec![pt(m.clone()), pt(m)] } else { vec![pt(m), pt(r)] })
    }
    fn probe(&self) -> Vec<Val> {
        let ends: Vec<Q> = (0..=4).map(|k| qf(k, 2)).collect();
        let mut v = Vec::new();
        for (i, lo) in ends.iter().enumerate() {
            for hi in &ends[i..] {
                v.push(interval(lo.clone(), hi.clone()));
            }
        }
        v
    }
    fn tangible_div(&self, a: &Val, b: &Val) -> Option<Val> {
        if self.is_tangible(a) && self.is_tangible(b) {
            let r = &tv(a).lo / &tv(b).lo;
            Some(interval(r.clone(), r))
        } else {
            None
        }
    }
    fn characteristic_hint(&self) -> Option<u64> {
        Some(0)
    }
    fn max_height_hint(&self) -> Option<Height> {
        Some(Height::Exact(2))
    }
    fn format(&self, a: &Val) -> String {
        let x = tv(a);
        if x.lo == x.hi {
            fmt_q(&x.lo)
        } else {
            format!("[{},{}]", fmt_q(&x.lo), fmt_q(&x.hi))
        }
    }
    fn parse(&self, s: &str) -> Result<Val> {
        let err = || Error::parse(1, 1, format!("`{s}` is not a triangle literal"));
        let t = s.trim();
        if let Some(body) = t.strip_prefix('[').and_then(|b| b.strip_suffix(']')) {
            let (a, b) = body.split_once(',').ok_or_else(err)?;
            let (lo, hi) = (parse_q(a).ok_or_else(err)?, parse_q(b).ok_or_else(err)?);
            if lo < Q::zero() || hi < lo {
                return Err(err());
            }
            return Ok(interval(lo, hi));
        }
        let v = parse_q(t).ok_or_else(err)?;
        if v < Q::zero() {
            return Err(err());
        }
        Ok(interval(v.clone(), v))
    }
}

pub fn make_triangle() -> SystemHandle {
    make_triangle_with(ProductMode::Pointwise)
}

pub fn make_triangle_with(product: ProductMode) -> SystemHandle {
    SystemHandle::new(Arc::new(Triangle { product }))
}
