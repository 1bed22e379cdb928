//! Structural classification of a system by exhaustive quantifier checks.

use std::collections::HashMap;

use crate::analysis::ctx::{Ctx, Flag};
use crate::core::{Element, Height, SystemHandle, Val};
use crate::error::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    First,
    Second,
    /// Some tangibles are fixed by the negation map and others are not.
    Mixed,
}

impl Kind {
    pub fn label(self) -> &'static str {
        match self {
            Kind::First => "first",
            Kind::Second => "second",
            Kind::Mixed => "mixed",
        }
    }
}

/// How a reported value was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Basis {
    Exhaustive,
    Probe,
    ClosedForm,
}

impl Basis {
    pub fn label(self) -> &'static str {
        match self {
            Basis::Exhaustive => "exhaustive",
            Basis::Probe => "probe",
            Basis::ClosedForm => "closed_form",
        }
    }
}

/// Which branch of the bipotence dichotomy a meta-tangible system with 𝟙 falls into.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DichotomyCase {
    Bipotent,
    /// e′ = 𝟙, identity negation on tangibles, characteristic 2.
    UnitFirstKind,
    /// e′ = 𝟙 with a negation of the second kind.
    UnitSecondKind,
    /// Meta-tangible with 𝟙 but in neither branch.
    Unmatched,
    NotApplicable,
}

impl DichotomyCase {
    pub fn label(self) -> &'static str {
        match self {
            DichotomyCase::Bipotent => "bipotent",
            DichotomyCase::UnitFirstKind => "unit-first-kind",
            DichotomyCase::UnitSecondKind => "unit-second-kind",
            DichotomyCase::Unmatched => "unmatched",
            DichotomyCase::NotApplicable => "n/a",
        }
    }
}

#[derive(Clone, Debug)]
pub struct ClassificationReport {
    pub system: String,
    pub kind: Kind,
    pub characteristic: u64,
    pub height: Height,
    pub meta_tangible: Flag,
    pub neg_bipotent: Flag,
    pub idempotent: Flag,
    pub unique_quasi_negatives: Flag,
    pub t_reversible: Flag,
    pub t_strongly_negated: Flag,
    pub fuzzy_property: Flag,
    pub circ_ub: Flag,
    pub e: Option<Element>,
    pub e_prime: Option<Element>,
    pub dichotomy_case: DichotomyCase,
    /// `None` when the system has no full product.
    pub absorbing_elements: Option<Vec<Element>>,
    /// Per-field provenance, in report order.
    pub basis: Vec<(&'static str, Basis)>,
}

pub fn kind(cx: &Ctx) -> Result<Kind> {
    let mut fixed = 0;
    for t in &cx.tans {
        if &cx.neg(t)? == t {
            fixed += 1;
        }
    }
    Ok(if fixed == cx.tans.len() {
        Kind::First
    } else if fixed == 0 {
        Kind::Second
    } else {
        Kind::Mixed
    })
}

/// Tangible sums stay tangible or land among the quasi-zeros.
pub fn meta_tangible(cx: &Ctx) -> Result<Flag> {
    for a in &cx.tans {
        for b in &cx.tans {
            let s = cx.add(a, b)?;
            if !cx.tangible(&s)? && !cx.in_circ(&s)? {
                return Ok(Flag::no(vec![("a", a.clone()), ("b", b.clone())]));
            }
        }
    }
    Ok(Flag::yes())
}

/// a + b ∈ {a, b} for tangibles with b ≠ (−)a.
pub fn neg_bipotent(cx: &Ctx) -> Result<Flag> {
    for a in &cx.tans {
        for b in &cx.tans {
            if b == &cx.neg(a)? {
                continue;
            }
            let s = cx.add(a, b)?;
            if &s != a && &s != b {
                return Ok(Flag::no(vec![("a", a.clone()), ("b", b.clone())]));
            }
        }
    }
    Ok(Flag::yes())
}

pub fn idempotent(cx: &Ctx) -> Result<Flag> {
    for a in &cx.elems {
        if &cx.add(a, a)? != a {
            return Ok(Flag::no(vec![("a", a.clone())]));
        }
    }
    Ok(Flag::yes())
}

/// For tangibles, a + b quasi-zero forces b = (−)a.
pub fn unique_quasi_negatives(cx: &Ctx) -> Result<Flag> {
    for a in &cx.tans {
        for b in &cx.tans {
            if cx.in_circ(&cx.add(a, b)?)? && b != &cx.neg(a)? {
                return Ok(Flag::no(vec![("a", a.clone()), ("b", b.clone())]));
            }
        }
    }
    Ok(Flag::yes())
}

/// a ⪯ b + c implies b ⪯ a (−) c, for tangible a, b.
pub fn t_reversible(cx: &Ctx) -> Result<Flag> {
    for a in &cx.tans {
        for b in &cx.tans {
            for c in &cx.elems {
                if cx.surp(&cx.add(b, c)?, a)? && !cx.surp(&cx.s.sub(a, c)?, b)? {
                    return Ok(Flag::no(vec![("a", a.clone()), ("b", b.clone()), ("c", c.clone())]));
                }
            }
        }
    }
    Ok(Flag::yes())
}

/// c + d ⪰ 𝟘 implies (−)c ⪯ d, for tangible c.
pub fn t_strongly_negated(cx: &Ctx) -> Result<Flag> {
    for c in &cx.tans {
        let nc = cx.neg(c)?;
        for d in &cx.elems {
            if cx.surp_zero(&cx.add(c, d)?)? && !cx.surp(d, &nc)? {
                return Ok(Flag::no(vec![("c", c.clone()), ("d", d.clone())]));
            }
        }
    }
    Ok(Flag::yes())
}

/// c + d ⪰ 𝟘 implies both surpass 𝟘, or one surpasses the negative of the other.
pub fn strongly_negated(cx: &Ctx) -> Result<Flag> {
    for c in &cx.elems {
        let nc = cx.neg(c)?;
        for d in &cx.elems {
            if !cx.surp_zero(&cx.add(c, d)?)? {
                continue;
            }
            let ok = (cx.surp_zero(c)? && cx.surp_zero(d)?) || cx.surp(d, &nc)? || cx.surp(c, &cx.neg(d)?)?;
            if !ok {
                return Ok(Flag::no(vec![("c", c.clone()), ("d", d.clone())]));
            }
        }
    }
    Ok(Flag::yes())
}

/// a₁ (−) a′₁ and a₂ (−) a′₂ quasi-zero imply a₁a₂ (−) a′₁a′₂ quasi-zero.
pub fn fuzzy_property(cx: &Ctx) -> Result<Flag> {
    if !cx.s.has_mul() {
        return Ok(Flag::unknown());
    }
    let n = cx.elems.len();
    let prod: Vec<Vec<Option<Element>>> =
        cx.elems.iter().map(|a| cx.elems.iter().map(|b| cx.mul(a, b)).collect()).collect();
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if cx.in_circ(&cx.s.sub(&cx.elems[i], &cx.elems[j])?)? {
                pairs.push((i, j));
            }
        }
    }
    let mut memo: HashMap<(Val, Val), bool> = HashMap::new();
    for &(a1, b1) in &pairs {
        for &(a2, b2) in &pairs {
            let (Some(p), Some(q)) = (&prod[a1][a2], &prod[b1][b2]) else { continue };
            let key = (p.val.clone(), q.val.clone());
            let ok = match memo.get(&key) {
                Some(&ok) => ok,
                None => {
                    let ok = cx.in_circ(&cx.s.sub(p, q)?)?;
                    memo.insert(key, ok);
                    ok
                }
            };
            if !ok {
                let e = |i: usize| cx.elems[i].clone();
                return Ok(Flag::no(vec![("a1", e(a1)), ("a1'", e(b1)), ("a2", e(a2)), ("a2'", e(b2))]));
            }
        }
    }
    Ok(Flag::yes())
}

/// a + b + c = a implies a + b = a, for quasi-zero b, c.
pub fn circ_ub(cx: &Ctx) -> Result<Flag> {
    let mut qz = Vec::new();
    for e in &cx.elems {
        if cx.in_circ(e)? {
            qz.push(e);
        }
    }
    for a in &cx.elems {
        for b in &qz {
            let ab = cx.add(a, b)?;
            if &ab == a {
                continue;
            }
            for c in &qz {
                if &cx.add(&ab, c)? == a {
                    return Ok(Flag::no(vec![("a", a.clone()), ("b", (*b).clone()), ("c", (*c).clone())]));
                }
            }
        }
    }
    Ok(Flag::yes())
}

/// Tangibles c with a·c = c for every nonzero a.
pub fn absorbing_elements(cx: &Ctx) -> Result<Option<Vec<Element>>> {
    if !cx.s.has_mul() {
        return Ok(None);
    }
    let mut out = Vec::new();
    'c: for c in &cx.tans {
        for a in cx.nonzero() {
            if cx.mul(a, c).as_ref() != Some(c) {
                continue 'c;
            }
        }
        out.push(c.clone());
    }
    Ok(Some(out))
}

/// e = 𝟙 (−) 𝟙 and e′ = e + 𝟙.
pub fn e_elements(s: &SystemHandle) -> Result<(Option<Element>, Option<Element>)> {
    let Some(one) = s.one() else { return Ok((None, None)) };
    let e = s.circ(&one)?;
    let ep = s.add(&e, &one)?;
    Ok((Some(e), Some(ep)))
}

/// Largest element height: closed form when the system documents one, else a sweep.
pub fn system_height(cx: &Ctx) -> Result<(Height, Basis)> {
    if let Some(h) = cx.s.imp().max_height_hint() {
        return Ok((h, Basis::ClosedForm));
    }
    let mut best = Height::Exact(0);
    for a in &cx.elems {
        let h = cx.height(a)?;
        if h > best {
            best = h;
        }
    }
    Ok((best, if cx.exhaustive { Basis::Exhaustive } else { Basis::Probe }))
}

pub fn dichotomy_case(
    cx: &Ctx,
    meta: &Flag,
    bip: &Flag,
    kind: Kind,
    e_prime: Option<&Element>,
) -> Result<DichotomyCase> {
    let (Some(one), Some(ep)) = (cx.s.one(), e_prime) else { return Ok(DichotomyCase::NotApplicable) };
    if !meta.is_true() {
        return Ok(DichotomyCase::NotApplicable);
    }
    if bip.is_true() {
        return Ok(DichotomyCase::Bipotent);
    }
    if ep == &one {
        return Ok(match kind {
            Kind::First if cx.s.characteristic() == 2 => DichotomyCase::UnitFirstKind,
            Kind::Second => DichotomyCase::UnitSecondKind,
            _ => DichotomyCase::Unmatched,
        });
    }
    Ok(DichotomyCase::Unmatched)
}

pub fn classify(s: &SystemHandle) -> Result<ClassificationReport> {
    classify_bounded(s, crate::core::DEFAULT_HEIGHT_BOUND)
}

pub fn classify_bounded(s: &SystemHandle, bound: u32) -> Result<ClassificationReport> {
    let cx = Ctx::with_bound(s, bound)?;
    let sweep = if cx.exhaustive { Basis::Exhaustive } else { Basis::Probe };
    let kind = kind(&cx)?;
    let (height, hb) = system_height(&cx)?;
    let char_basis = if s.imp().characteristic_hint().is_some() { Basis::ClosedForm } else { sweep };
    let meta = meta_tangible(&cx)?;
    let bip = neg_bipotent(&cx)?;
    let (e, e_prime) = e_elements(s)?;
    let case = dichotomy_case(&cx, &meta, &bip, kind, e_prime.as_ref())?;
    let report = ClassificationReport {
        system: s.name(),
        kind,
        characteristic: s.characteristic(),
        height,
        idempotent: idempotent(&cx)?,
        unique_quasi_negatives: unique_quasi_negatives(&cx)?,
        t_reversible: t_reversible(&cx)?,
        t_strongly_negated: t_strongly_negated(&cx)?,
        fuzzy_property: fuzzy_property(&cx)?,
        circ_ub: circ_ub(&cx)?,
        absorbing_elements: absorbing_elements(&cx)?,
        meta_tangible: meta,
        neg_bipotent: bip,
        e,
        e_prime,
        dichotomy_case: case,
        basis: vec![("kind", sweep), ("characteristic", char_basis), ("height", hb), ("flags", sweep)],
    };
    Ok(report)
}

impl ClassificationReport {
    /// Flat key/value pairs in a fixed order.
    pub fn pairs(&self, s: &SystemHandle) -> Vec<(String, String)> {
        let fmt_opt = |e: &Option<Element>| e.as_ref().map(|x| s.format(x)).unwrap_or_else(|| "n/a".into());
        let flags: [(&str, &Flag); 8] = [
            ("meta_tangible", &self.meta_tangible),
            ("neg_bipotent", &self.neg_bipotent),
            ("idempotent", &self.idempotent),
            ("unique_quasi_negatives", &self.unique_quasi_negatives),
            ("t_reversible", &self.t_reversible),
            ("t_strongly_negated", &self.t_strongly_negated),
            ("fuzzy_property", &self.fuzzy_property),
            ("circ_ub", &self.circ_ub),
        ];
        let mut out: Vec<(String, String)> = vec![
            ("system".into(), self.system.clone()),
            ("kind".into(), self.kind.label().into()),
            ("characteristic".into(), self.characteristic.to_string()),
            ("height".into(), self.height.to_string()),
        ];
        for (k, f) in flags {
            out.push((k.into(), f.render().into()));
        }
        out.push(("e".into(), fmt_opt(&self.e)));
        out.push(("e_prime".into(), fmt_opt(&self.e_prime)));
        out.push(("dichotomy_case".into(), self.dichotomy_case.label().into()));
        let abs = match &self.absorbing_elements {
            None => "n/a".to_string(),
            Some(v) => format!("[{}]", v.iter().map(|x| s.format(x)).collect::<Vec<_>>().join(", ")),
        };
        out.push(("absorbing_elements".into(), abs));
        for (k, f) in flags {
            if let Some(w) = &f.witness {
                out.push((format!("witness.{k}"), w.render(s)));
            }
        }
        for (k, b) in &self.basis {
            out.push((format!("basis.{k}"), b.label().into()));
        }
        out
    }
}
