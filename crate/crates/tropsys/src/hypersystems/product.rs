//! Distributivity checks and the product obtained by expanding into tangibles.

use std::sync::Arc;

use crate::core::{Element, Family, Height, SurpassKind, SystemHandle, SystemImpl, TripleLevel, Val};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DistMode {
    /// a(b + c) = ab + ac on both sides, for all a, b, c.
    Full,
    /// (a1 + … + ak) b ⪯ a1 b + … + ak b for tangible ai (k ≤ 3), both sides.
    WeakT,
}

#[derive(Clone, Debug)]
pub struct DistReport {
    pub mode: DistMode,
    pub holds: bool,
    pub witness: Option<Vec<Element>>,
    /// True when every element of the carrier was used, false for probe samples.
    pub exhaustive: bool,
    pub checked: usize,
}

pub fn check_distributivity(s: &SystemHandle, mode: DistMode) -> Result<DistReport> {
    if !s.has_mul() {
        return Err(Error::NoMultiplication(s.name()));
    }
    let exhaustive = s.enumerable();
    let elems = s.probe();
    let mut checked = 0;
    let report = |holds, witness| DistReport { mode, holds, witness, exhaustive, checked: 0 };
    match mode {
        DistMode::Full => {
            for a in &elems {
                for b in &elems {
                    let ab = s.mul(a, b)?;
                    let ba = s.mul(b, a)?;
                    for c in &elems {
                        checked += 1;
                        let bc = s.add(b, c)?;
                        let l = s.mul(a, &bc)?;
                        let r = s.add(&ab, &s.mul(a, c)?)?;
                        let l2 = s.mul(&bc, a)?;
                        let r2 = s.add(&ba, &s.mul(c, a)?)?;
                        if l != r || l2 != r2 {
                            let mut rep = report(false, Some(vec![a.clone(), b.clone(), c.clone()]));
                            rep.checked = checked;
                            return Ok(rep);
                        }
                    }
                }
            }
        }
        DistMode::WeakT => {
            let tans: Vec<&Element> = elems.iter().filter(|e| s.is_tangible(e).unwrap_or(false)).collect();
            let mut tuples: Vec<Vec<&Element>> = Vec::new();
            for (i, a) in tans.iter().enumerate() {
                for (j, b) in tans.iter().enumerate().skip(i) {
                    tuples.push(vec![a, b]);
                    for c in tans.iter().skip(j) {
                        tuples.push(vec![a, b, c]);
                    }
                }
            }
            for tup in &tuples {
                let sum = s.sum(tup.iter().copied())?.unwrap();
                for b in &elems {
                    checked += 1;
                    let l = s.mul(&sum, b)?;
                    let parts: Vec<Element> = tup.iter().map(|a| s.mul(a, b)).collect::<Result<_>>()?;
                    let r = s.sum(parts.iter())?.unwrap();
                    let l2 = s.mul(b, &sum)?;
                    let parts2: Vec<Element> = tup.iter().map(|a| s.mul(b, a)).collect::<Result<_>>()?;
                    let r2 = s.sum(parts2.iter())?.unwrap();
                    if !s.surpasses(&r, &l)? || !s.surpasses(&r2, &l2)? {
                        let mut w: Vec<Element> = tup.iter().map(|e| (*e).clone()).collect();
                        w.push(b.clone());
                        let mut rep = report(false, Some(w));
                        rep.checked = checked;
                        return Ok(rep);
                    }
                }
            }
        }
    }
    let mut rep = report(true, None);
    rep.checked = checked;
    Ok(rep)
}

struct Generated {
    base: SystemHandle,
}

impl Generated {
    fn product(&self, x: &Val, y: &Val) -> Result<Val> {
        let imp = self.base.imp();
        let zero = imp.zero();
        if Some(x) == zero.as_ref() || Some(y) == zero.as_ref() {
            return zero.ok_or_else(|| Error::Absent(self.base.name(), "zero".into()));
        }
        let parts = imp
            .decompose(x)
            .ok_or_else(|| Error::Unsupported(format!("no tangible decomposition of {}", imp.format(x))))?;
        let mut acc: Option<Val> = None;
        for t in &parts {
            let p = imp.mul(t, y)?;
            acc = Some(match acc {
                None => p,
                Some(a) => imp.add(&a, &p)?,
            });
        }
        acc.ok_or_else(|| Error::Unsupported("empty decomposition".into()))
    }
}

impl SystemImpl for Generated {
    fn name(&self) -> String {
        format!("{}[generated product]", self.base.name())
    }
    fn family(&self) -> Family {
        self.base.family()
    }
    fn surpass_kind(&self) -> SurpassKind {
        self.base.surpass_kind()
    }
    fn level(&self) -> TripleLevel {
        self.base.level()
    }
    fn has_mul(&self) -> bool {
        true
    }
    fn zero(&self) -> Option<Val> {
        self.base.imp().zero()
    }
    fn one(&self) -> Option<Val> {
        self.base.imp().one()
    }
    fn add(&self, a: &Val, b: &Val) -> Result<Val> {
        self.base.imp().add(a, b)
    }
    fn neg(&self, a: &Val) -> Val {
        self.base.imp().neg(a)
    }
    fn mul(&self, a: &Val, b: &Val) -> Result<Val> {
        self.product(a, b)
    }
    fn is_tangible(&self, a: &Val) -> bool {
        self.base.imp().is_tangible(a)
    }
    fn is_quasi_zero(&self, a: &Val) -> bool {
        self.base.imp().is_quasi_zero(a)
    }
    fn surpasses(&self, a: &Val, b: &Val) -> bool {
        self.base.imp().surpasses(a, b)
    }
    fn surpasses_zero(&self, a: &Val) -> bool {
        self.base.imp().surpasses_zero(a)
    }
    fn height(&self, a: &Val, bound: u32) -> Height {
        self.base.imp().height(a, bound)
    }
    fn decompose(&self, a: &Val) -> Option<Vec<Val>> {
        self.base.imp().decompose(a)
    }
    fn tangible_div(&self, a: &Val, b: &Val) -> Option<Val> {
        self.base.imp().tangible_div(a, b)
    }
    fn carrier(&self) -> Option<Vec<Val>> {
        self.base.imp().carrier()
    }
    fn probe(&self) -> Vec<Val> {
        self.base.imp().probe()
    }
    fn characteristic_hint(&self) -> Option<u64> {
        self.base.imp().characteristic_hint()
    }
    fn max_height_hint(&self) -> Option<Height> {
        self.base.imp().max_height_hint()
    }
    fn format(&self, a: &Val) -> String {
        self.base.imp().format(a)
    }
    fn parse(&self, s: &str) -> Result<Val> {
        self.base.imp().parse(s)
    }
}

/// Redefine multiplication by writing the left factor as a sum of tangibles a1 + … + ak and
/// taking a1·y + … + ak·y. The new handle is a distinct system.
pub fn generated_product(s: &SystemHandle) -> SystemHandle {
    SystemHandle::new(Arc::new(Generated { base: s.clone() }))
}
