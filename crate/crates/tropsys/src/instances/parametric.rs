//! Infinite instances with magnitudes in ℚ (max-plus convention: larger wins, product adds).

use std::sync::Arc;

use num_traits::{Signed, Zero};

use crate::core::{
    EltVal, Family, Height, LayerVal, SuperVal, SurpassKind, SystemHandle, SystemImpl, TripleLevel, Val,
};
use crate::error::{Error, Result};
use crate::rational::{fmt_q, parse_q, q, Q};

fn perr(s: &str, what: &str) -> Error {
    Error::parse(1, 1, format!("`{s}` is not a {what} literal"))
}

fn is_neg_inf(s: &str) -> bool {
    matches!(s.trim(), "-inf" | "−∞" | "-∞" | "𝟘" | "zero")
}

fn grid() -> Vec<Q> {
    (-1..=2).map(q).collect()
}

// ---------- max-plus ----------

pub struct MaxPlus;

fn mp(v: &Val) -> &Option<Q> {
    match v {
        Val::MaxPlus(x) => x,
        o => panic!("max-plus received {o:?}"),
    }
}

impl SystemImpl for MaxPlus {
    fn name(&self) -> String {
        "maxplus".into()
    }
    fn family(&self) -> Family {
        Family::Parametric
    }
    fn surpass_kind(&self) -> SurpassKind {
        SurpassKind::Circ
    }
    fn level(&self) -> TripleLevel {
        TripleLevel::Pseudo
    }
    fn has_mul(&self) -> bool {
        true
    }
    fn zero(&self) -> Option<Val> {
        Some(Val::MaxPlus(None))
    }
    fn one(&self) -> Option<Val> {
        Some(Val::MaxPlus(Some(q(0))))
    }
    fn add(&self, a: &Val, b: &Val) -> Result<Val> {
        Ok(Val::MaxPlus(mp(a).clone().max(mp(b).clone())))
    }
    fn neg(&self, a: &Val) -> Val {
        a.clone()
    }
    fn mul(&self, a: &Val, b: &Val) -> Result<Val> {
        Ok(Val::MaxPlus(match (mp(a), mp(b)) {
            (Some(x), Some(y)) => Some(x + y),
            _ => None,
        }))
    }
    fn is_tangible(&self, a: &Val) -> bool {
        mp(a).is_some()
    }
    fn is_quasi_zero(&self, _a: &Val) -> bool {
        true
    }
    fn surpasses(&self, a: &Val, b: &Val) -> bool {
        mp(b) <= mp(a)
    }
    fn height(&self, a: &Val, _bound: u32) -> Height {
        Height::Exact(if mp(a).is_some() { 1 } else { 0 })
    }
    fn decompose(&self, a: &Val) -> Option<Vec<Val>> {
        Some(if mp(a).is_some() { vec![a.clone()] } else { vec![] })
    }
    fn probe(&self) -> Vec<Val> {
        let mut v = vec![Val::MaxPlus(None)];
        v.extend(grid().into_iter().map(|x| Val::MaxPlus(Some(x))));
        v
    }
    fn characteristic_hint(&self) -> Option<u64> {
        Some(1)
    }
    fn max_height_hint(&self) -> Option<Height> {
        Some(Height::Exact(1))
    }
    fn tangible_div(&self, a: &Val, b: &Val) -> Option<Val> {
        Some(Val::MaxPlus(Some(mp(a).as_ref()? - mp(b).as_ref()?)))
    }
    fn format(&self, a: &Val) -> String {
        match mp(a) {
            None => "-inf".into(),
            Some(x) => fmt_q(x),
        }
    }
    fn parse(&self, s: &str) -> Result<Val> {
        if is_neg_inf(s) {
            return Ok(Val::MaxPlus(None));
        }
        parse_q(s).map(|x| Val::MaxPlus(Some(x))).ok_or_else(|| perr(s, "max-plus"))
    }
}

pub fn make_maxplus() -> SystemHandle {
    SystemHandle::new(Arc::new(MaxPlus))
}

// ---------- supertropical ----------

pub struct Supertropical;

fn sv(v: &Val) -> &SuperVal {
    match v {
        Val::Super(x) => x,
        o => panic!("supertropical received {o:?}"),
    }
}

fn smag(v: &SuperVal) -> Option<&Q> {
    match v {
        SuperVal::Zero => None,
        SuperVal::Tan(m) | SuperVal::Ghost(m) => Some(m),
    }
}

impl SystemImpl for Supertropical {
    fn name(&self) -> String {
        "supertropical".into()
    }
    fn family(&self) -> Family {
        Family::Parametric
    }
    fn surpass_kind(&self) -> SurpassKind {
        SurpassKind::Circ
    }
    fn has_mul(&self) -> bool {
        true
    }
    fn zero(&self) -> Option<Val> {
        Some(Val::Super(SuperVal::Zero))
    }
    fn one(&self) -> Option<Val> {
        Some(Val::Super(SuperVal::Tan(q(0))))
    }
    fn add(&self, a: &Val, b: &Val) -> Result<Val> {
        let (x, y) = (sv(a), sv(b));
        Ok(match (smag(x), smag(y)) {
            (None, _) => b.clone(),
            (_, None) => a.clone(),
            (Some(m), Some(n)) if m > n => a.clone(),
            (Some(m), Some(n)) if n > m => b.clone(),
            (Some(m), _) => Val::Super(SuperVal::Ghost(m.clone())),
        })
    }
    fn neg(&self, a: &Val) -> Val {
        a.clone()
    }
    fn mul(&self, a: &Val, b: &Val) -> Result<Val> {
        let (x, y) = (sv(a), sv(b));
        Ok(Val::Super(match (x, y) {
            (SuperVal::Zero, _) | (_, SuperVal::Zero) => SuperVal::Zero,
            (SuperVal::Tan(m), SuperVal::Tan(n)) => SuperVal::Tan(m + n),
            _ => SuperVal::Ghost(smag(x).unwrap() + smag(y).unwrap()),
        }))
    }
    fn is_tangible(&self, a: &Val) -> bool {
        matches!(sv(a), SuperVal::Tan(_))
    }
    fn is_quasi_zero(&self, a: &Val) -> bool {
        !self.is_tangible(a)
    }
    fn surpasses(&self, a: &Val, b: &Val) -> bool {
        if a == b {
            return true;
        }
        match sv(a) {
            SuperVal::Ghost(x) => smag(sv(b)).is_none_or(|m| m <= x),
            _ => false,
        }
    }
    fn height(&self, a: &Val, _bound: u32) -> Height {
        Height::Exact(match sv(a) {
            SuperVal::Zero => 0,
            SuperVal::Tan(_) => 1,
            SuperVal::Ghost(_) => 2,
        })
    }
    fn decompose(&self, a: &Val) -> Option<Vec<Val>> {
        Some(match sv(a) {
            SuperVal::Zero => vec![],
            SuperVal::Tan(_) => vec![a.clone()],
            SuperVal::Ghost(m) => vec![Val::Super(SuperVal::Tan(m.clone())); 2],
        })
    }
    fn probe(&self) -> Vec<Val> {
        let mut v = vec![Val::Super(SuperVal::Zero)];
        for x in grid() {
            v.push(Val::Super(SuperVal::Tan(x.clone())));
            v.push(Val::Super(SuperVal::Ghost(x)));
        }
        v
    }
    fn characteristic_hint(&self) -> Option<u64> {
        Some(0)
    }
    fn max_height_hint(&self) -> Option<Height> {
        Some(Height::Exact(2))
    }
    fn tangible_div(&self, a: &Val, b: &Val) -> Option<Val> {
        Some(Val::Super(SuperVal::Tan(smag(sv(a))? - smag(sv(b))?)))
    }
    fn format(&self, a: &Val) -> String {
        match sv(a) {
            SuperVal::Zero => "-inf".into(),
            SuperVal::Tan(m) => fmt_q(m),
            SuperVal::Ghost(m) => format!("{}ν", fmt_q(m)),
        }
    }
    fn parse(&self, s: &str) -> Result<Val> {
        let t = s.trim();
        if is_neg_inf(t) {
            return Ok(Val::Super(SuperVal::Zero));
        }
        for suf in ["^ν", "ν", "^nu", "nu"] {
            if let Some(body) = t.strip_suffix(suf) {
                return parse_q(body).map(|m| Val::Super(SuperVal::Ghost(m))).ok_or_else(|| perr(s, "supertropical"));
            }
        }
        parse_q(t).map(|m| Val::Super(SuperVal::Tan(m))).ok_or_else(|| perr(s, "supertropical"))
    }
}

pub fn make_supertropical() -> SystemHandle {
    SystemHandle::new(Arc::new(Supertropical))
}

// ---------- layered ----------

/// The semiring of layers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LayerSemiring {
    /// Positive integers; tangibles on layer 1, identity negation.
    N,
    /// Integers; tangibles on layers ±1, negation ℓ ↦ -ℓ.
    Z,
    /// ℤ/n; tangibles on layers ±1, negation ℓ ↦ -ℓ.
    Zn(u32),
    /// {1..n} with saturation; tangibles on layer 1, identity negation.
    Truncated(u32),
}

pub struct Layered {
    pub layers: LayerSemiring,
    pub rel: SurpassKind,
}

fn lv(v: &Val) -> &LayerVal {
    match v {
        Val::Layer(x) => x,
        o => panic!("layered received {o:?}"),
    }
}

impl Layered {
    fn ladd(&self, a: i64, b: i64) -> i64 {
        match self.layers {
            LayerSemiring::N | LayerSemiring::Z => a + b,
            LayerSemiring::Zn(n) => (a + b).rem_euclid(n as i64),
            LayerSemiring::Truncated(n) => (a + b).min(n as i64),
        }
    }
    fn lmul(&self, a: i64, b: i64) -> i64 {
        match self.layers {
            LayerSemiring::N | LayerSemiring::Z => a * b,
            LayerSemiring::Zn(n) => (a * b).rem_euclid(n as i64),
            LayerSemiring::Truncated(n) => (a * b).min(n as i64),
        }
    }
    fn lneg(&self, a: i64) -> i64 {
        match self.layers {
            LayerSemiring::N | LayerSemiring::Truncated(_) => a,
            LayerSemiring::Z => -a,
            LayerSemiring::Zn(n) => (-a).rem_euclid(n as i64),
        }
    }
    fn tangible_layer(&self, l: i64) -> bool {
        match self.layers {
            LayerSemiring::N | LayerSemiring::Truncated(_) => l == 1,
            LayerSemiring::Z => l == 1 || l == -1,
            LayerSemiring::Zn(n) => l == 1 % n as i64 || l == (n as i64 - 1) % n as i64,
        }
    }
    fn qz_layer(&self, l: i64) -> bool {
        match self.layers {
            LayerSemiring::N => l >= 2 && l % 2 == 0,
            LayerSemiring::Z | LayerSemiring::Zn(_) => l == 0,
            LayerSemiring::Truncated(n) => (l % 2 == 0 && l >= 2) || l == n as i64,
        }
    }
    /// Whether layer `la` equals `lb ⊕ λ` for some quasi-zero layer λ.
    fn reach_by_qz(&self, la: i64, lb: i64) -> bool {
        match self.layers {
            LayerSemiring::N => la > lb && (la - lb) % 2 == 0,
            LayerSemiring::Z | LayerSemiring::Zn(_) => la == lb,
            LayerSemiring::Truncated(n) => la == n as i64 || (la > lb && (la - lb) % 2 == 0),
        }
    }
    fn layer_height(&self, l: i64, bound: u32) -> Height {
        match self.layers {
            LayerSemiring::N | LayerSemiring::Truncated(_) => Height::Exact(l as u32),
            LayerSemiring::Z => Height::Exact(if l == 0 { 2 } else { l.unsigned_abs() as u32 }),
            LayerSemiring::Zn(n) => {
                let n = n as i64;
                let mut cur = vec![1 % n, (n - 1) % n];
                for h in 1..=bound {
                    if cur.contains(&l) {
                        return Height::Exact(h);
                    }
                    let mut next = Vec::new();
                    for c in &cur {
                        for s in [1, -1] {
                            let x = (c + s).rem_euclid(n);
                            if !next.contains(&x) {
                                next.push(x);
                            }
                        }
                    }
                    cur = next;
                }
                Height::Beyond(bound)
            }
        }
    }
    fn layer_grid(&self) -> Vec<i64> {
        match self.layers {
            LayerSemiring::N => (1..=4).collect(),
            LayerSemiring::Z => (-2..=2).collect(),
            LayerSemiring::Zn(n) => (0..n as i64).collect(),
            LayerSemiring::Truncated(n) => (1..=(n as i64).min(5)).collect(),
        }
    }
}

impl SystemImpl for Layered {
    fn name(&self) -> String {
        let base = match self.layers {
            LayerSemiring::N => "layered-N".to_string(),
            LayerSemiring::Z => "layered-Z".to_string(),
            LayerSemiring::Zn(n) => format!("layered-Z{n}"),
            LayerSemiring::Truncated(n) => format!("layered-trunc{n}"),
        };
        if self.rel == SurpassKind::LayeredStrict {
            format!("{base}-strict")
        } else {
            base
        }
    }
    fn family(&self) -> Family {
        Family::Parametric
    }
    fn surpass_kind(&self) -> SurpassKind {
        self.rel
    }
    fn level(&self) -> TripleLevel {
        if self.layers == LayerSemiring::Zn(1) {
            TripleLevel::Pseudo
        } else {
            TripleLevel::Triple
        }
    }
    fn has_mul(&self) -> bool {
        true
    }
    fn zero(&self) -> Option<Val> {
        Some(Val::Layer(LayerVal::Zero))
    }
    fn one(&self) -> Option<Val> {
        let l = match self.layers {
            LayerSemiring::Zn(n) => 1 % n as i64,
            _ => 1,
        };
        Some(Val::Layer(LayerVal::At(l, q(0))))
    }
    fn add(&self, a: &Val, b: &Val) -> Result<Val> {
        Ok(match (lv(a), lv(b)) {
            (LayerVal::Zero, _) => b.clone(),
            (_, LayerVal::Zero) => a.clone(),
            (LayerVal::At(la, ma), LayerVal::At(lb, mb)) => {
                if ma > mb {
                    a.clone()
                } else if mb > ma {
                    b.clone()
                } else {
                    Val::Layer(LayerVal::At(self.ladd(*la, *lb), ma.clone()))
                }
            }
        })
    }
    fn neg(&self, a: &Val) -> Val {
        match lv(a) {
            LayerVal::Zero => a.clone(),
            LayerVal::At(l, m) => Val::Layer(LayerVal::At(self.lneg(*l), m.clone())),
        }
    }
    fn mul(&self, a: &Val, b: &Val) -> Result<Val> {
        Ok(match (lv(a), lv(b)) {
            (LayerVal::At(la, ma), LayerVal::At(lb, mb)) => Val::Layer(LayerVal::At(self.lmul(*la, *lb), ma + mb)),
            _ => Val::Layer(LayerVal::Zero),
        })
    }
    fn is_tangible(&self, a: &Val) -> bool {
        matches!(lv(a), LayerVal::At(l, _) if self.tangible_layer(*l))
    }
    fn is_quasi_zero(&self, a: &Val) -> bool {
        match lv(a) {
            LayerVal::Zero => true,
            LayerVal::At(l, _) => self.qz_layer(*l),
        }
    }
    fn surpasses(&self, a: &Val, b: &Val) -> bool {
        if a == b {
            return true;
        }
        let (la, ma) = match lv(a) {
            LayerVal::Zero => return false,
            LayerVal::At(l, m) => (*l, m),
        };
        if self.rel == SurpassKind::LayeredStrict {
            return match lv(b) {
                LayerVal::Zero => la > 1,
                LayerVal::At(lb, mb) => (ma > mb && la > 1) || (ma == mb && la > *lb),
            };
        }
        match lv(b) {
            LayerVal::Zero => self.qz_layer(la),
            LayerVal::At(lb, mb) => (ma > mb && self.qz_layer(la)) || (ma == mb && self.reach_by_qz(la, *lb)),
        }
    }
    fn surpasses_zero(&self, a: &Val) -> bool {
        self.surpasses(a, &Val::Layer(LayerVal::Zero))
    }
    fn height(&self, a: &Val, bound: u32) -> Height {
        match lv(a) {
            LayerVal::Zero => Height::Exact(0),
            LayerVal::At(l, _) => self.layer_height(*l, bound),
        }
    }
    fn decompose(&self, a: &Val) -> Option<Vec<Val>> {
        let (l, m) = match lv(a) {
            LayerVal::Zero => return Some(vec![]),
            LayerVal::At(l, m) => (*l, m.clone()),
        };
        let Height::Exact(h) = self.layer_height(l, 64) else { return None };
        let one = |s: i64| Val::Layer(LayerVal::At(s, m.clone()));
        match self.layers {
            LayerSemiring::N | LayerSemiring::Truncated(_) => Some(vec![one(1); h as usize]),
            LayerSemiring::Z => Some(if l == 0 { vec![one(1), one(-1)] } else { vec![one(l.signum()); h as usize] }),
            LayerSemiring::Zn(n) => {
                let n = n as i64;
                for plus in 0..=h as i64 {
                    let minus = h as i64 - plus;
                    if (plus - minus).rem_euclid(n) == l {
                        let mut v = vec![one(1 % n); plus as usize];
                        v.extend(vec![one((n - 1) % n); minus as usize]);
                        return Some(v);
                    }
                }
                None
            }
        }
    }
    fn probe(&self) -> Vec<Val> {
        let mut v = vec![Val::Layer(LayerVal::Zero)];
        for l in self.layer_grid() {
            for m in [q(0), q(1)] {
                v.push(Val::Layer(LayerVal::At(l, m)));
            }
        }
        v
    }
    fn characteristic_hint(&self) -> Option<u64> {
        Some(match self.layers {
            LayerSemiring::Zn(n) => n as u64,
            _ => 0,
        })
    }
    fn max_height_hint(&self) -> Option<Height> {
        match self.layers {
            LayerSemiring::Truncated(n) => Some(Height::Exact(n)),
            LayerSemiring::Zn(n) => {
                let n = n as i64;
                (0..n).map(|l| self.layer_height(l, 64)).max()
            }
            _ => None,
        }
    }
    fn tangible_div(&self, a: &Val, b: &Val) -> Option<Val> {
        match (lv(a), lv(b)) {
            (LayerVal::At(la, ma), LayerVal::At(lb, mb)) if self.tangible_layer(*la) && self.tangible_layer(*lb) => {
                Some(Val::Layer(LayerVal::At(self.lmul(*la, *lb), ma - mb)))
            }
            _ => None,
        }
    }
    fn format(&self, a: &Val) -> String {
        match lv(a) {
            LayerVal::Zero => "-inf".into(),
            LayerVal::At(l, m) => format!("({l}, {})", fmt_q(m)),
        }
    }
    fn parse(&self, s: &str) -> Result<Val> {
        if is_neg_inf(s) {
            return Ok(Val::Layer(LayerVal::Zero));
        }
        let (a, b) = parse_pair(s, ',').ok_or_else(|| perr(s, "layered"))?;
        let l: i64 = a.trim().parse().map_err(|_| perr(s, "layered"))?;
        let m = parse_q(b).ok_or_else(|| perr(s, "layered"))?;
        Ok(Val::Layer(LayerVal::At(l, m)))
    }
}

pub fn parse_pair(s: &str, sep: char) -> Option<(&str, &str)> {
    let t = s.trim().strip_prefix('(')?.strip_suffix(')')?;
    t.split_once(sep)
}

pub fn make_layered(layers: LayerSemiring) -> SystemHandle {
    SystemHandle::new(Arc::new(Layered { layers, rel: SurpassKind::Circ }))
}

/// ℕ-layered semiring ordered by the layer-increasing relation instead of ⪯₀.
pub fn make_layered_strict() -> SystemHandle {
    SystemHandle::new(Arc::new(Layered { layers: LayerSemiring::N, rel: SurpassKind::LayeredStrict }))
}

// ---------- ELT ----------

pub struct Elt;

fn ev(v: &Val) -> &EltVal {
    match v {
        Val::Elt(x) => x,
        o => panic!("ELT received {o:?}"),
    }
}

impl SystemImpl for Elt {
    fn name(&self) -> String {
        "elt".into()
    }
    fn family(&self) -> Family {
        Family::Parametric
    }
    fn surpass_kind(&self) -> SurpassKind {
        SurpassKind::Circ
    }
    fn has_mul(&self) -> bool {
        true
    }
    fn zero(&self) -> Option<Val> {
        Some(Val::Elt(EltVal::Zero))
    }
    fn one(&self) -> Option<Val> {
        Some(Val::Elt(EltVal::At(q(1), q(0))))
    }
    fn add(&self, a: &Val, b: &Val) -> Result<Val> {
        Ok(match (ev(a), ev(b)) {
            (EltVal::Zero, _) => b.clone(),
            (_, EltVal::Zero) => a.clone(),
            (EltVal::At(ca, ma), EltVal::At(cb, mb)) => {
                if ma > mb {
                    a.clone()
                } else if mb > ma {
                    b.clone()
                } else {
                    Val::Elt(EltVal::At(ca + cb, ma.clone()))
                }
            }
        })
    }
    fn neg(&self, a: &Val) -> Val {
        match ev(a) {
            EltVal::Zero => a.clone(),
            EltVal::At(c, m) => Val::Elt(EltVal::At(-c, m.clone())),
        }
    }
    fn mul(&self, a: &Val, b: &Val) -> Result<Val> {
        Ok(match (ev(a), ev(b)) {
            (EltVal::At(ca, ma), EltVal::At(cb, mb)) => Val::Elt(EltVal::At(ca * cb, ma + mb)),
            _ => Val::Elt(EltVal::Zero),
        })
    }
    fn is_tangible(&self, a: &Val) -> bool {
        matches!(ev(a), EltVal::At(c, _) if !c.is_zero())
    }
    fn is_quasi_zero(&self, a: &Val) -> bool {
        !self.is_tangible(a)
    }
    fn surpasses(&self, a: &Val, b: &Val) -> bool {
        if a == b {
            return true;
        }
        match (ev(a), ev(b)) {
            (EltVal::At(ca, _), EltVal::Zero) => ca.is_zero(),
            (EltVal::At(ca, ma), EltVal::At(_, mb)) => ca.is_zero() && ma > mb,
            _ => false,
        }
    }
    fn height(&self, a: &Val, _bound: u32) -> Height {
        Height::Exact(match ev(a) {
            EltVal::Zero => 0,
            EltVal::At(c, _) if c.is_zero() => 2,
            _ => 1,
        })
    }
    fn decompose(&self, a: &Val) -> Option<Vec<Val>> {
        Some(match ev(a) {
            EltVal::Zero => vec![],
            EltVal::At(c, m) if c.is_zero() => {
                vec![Val::Elt(EltVal::At(q(1), m.clone())), Val::Elt(EltVal::At(q(-1), m.clone()))]
            }
            _ => vec![a.clone()],
        })
    }
    fn probe(&self) -> Vec<Val> {
        let mut v = vec![Val::Elt(EltVal::Zero)];
        for c in [-1, 0, 1, 2] {
            for m in [0, 1] {
                v.push(Val::Elt(EltVal::At(q(c), q(m))));
            }
        }
        v
    }
    fn characteristic_hint(&self) -> Option<u64> {
        Some(0)
    }
    fn max_height_hint(&self) -> Option<Height> {
        Some(Height::Exact(2))
    }
    fn tangible_div(&self, a: &Val, b: &Val) -> Option<Val> {
        match (ev(a), ev(b)) {
            (EltVal::At(ca, ma), EltVal::At(cb, mb)) if !cb.is_zero() && !ca.is_zero() => {
                Some(Val::Elt(EltVal::At(ca / cb, ma - mb)))
            }
            _ => None,
        }
    }
    fn format(&self, a: &Val) -> String {
        match ev(a) {
            EltVal::Zero => "-inf".into(),
            EltVal::At(c, m) => format!("({}, {})", fmt_q(c), fmt_q(m)),
        }
    }
    fn parse(&self, s: &str) -> Result<Val> {
        if is_neg_inf(s) {
            return Ok(Val::Elt(EltVal::Zero));
        }
        let (a, b) = parse_pair(s, ',').ok_or_else(|| perr(s, "ELT"))?;
        match (parse_q(a), parse_q(b)) {
            (Some(c), Some(m)) => Ok(Val::Elt(EltVal::At(c, m))),
            _ => Err(perr(s, "ELT")),
        }
    }
}

pub fn make_elt() -> SystemHandle {
    SystemHandle::new(Arc::new(Elt))
}

// ---------- symmetrized ----------

pub struct Symmetrized {
    base: SystemHandle,
}

fn sym(v: &Val) -> (&Val, &Val) {
    match v {
        Val::Sym(a, b) => (a, b),
        o => panic!("symmetrized received {o:?}"),
    }
}

fn mk(a: Val, b: Val) -> Val {
    Val::Sym(Box::new(a), Box::new(b))
}

impl Symmetrized {
    fn bz(&self) -> Val {
        self.base.imp().zero().expect("symmetrized base needs a zero")
    }
    fn badd(&self, a: &Val, b: &Val) -> Result<Val> {
        self.base.imp().add(a, b)
    }
}

impl SystemImpl for Symmetrized {
    fn name(&self) -> String {
        format!("symmetrized-{}", self.base.name())
    }
    fn family(&self) -> Family {
        self.base.family()
    }
    fn surpass_kind(&self) -> SurpassKind {
        SurpassKind::Circ
    }
    fn has_mul(&self) -> bool {
        self.base.has_mul()
    }
    fn zero(&self) -> Option<Val> {
        Some(mk(self.bz(), self.bz()))
    }
    fn one(&self) -> Option<Val> {
        self.base.imp().one().map(|o| mk(o, self.bz()))
    }
    fn add(&self, a: &Val, b: &Val) -> Result<Val> {
        let ((a0, a1), (b0, b1)) = (sym(a), sym(b));
        Ok(mk(self.badd(a0, b0)?, self.badd(a1, b1)?))
    }
    fn neg(&self, a: &Val) -> Val {
        let (a0, a1) = sym(a);
        mk(a1.clone(), a0.clone())
    }
    fn mul(&self, a: &Val, b: &Val) -> Result<Val> {
        let ((a0, a1), (b0, b1)) = (sym(a), sym(b));
        let m = |x: &Val, y: &Val| self.base.imp().mul(x, y);
        Ok(mk(self.badd(&m(a0, b0)?, &m(a1, b1)?)?, self.badd(&m(a0, b1)?, &m(a1, b0)?)?))
    }
    fn is_tangible(&self, a: &Val) -> bool {
        let (a0, a1) = sym(a);
        let z = self.bz();
        (self.base.imp().is_tangible(a0) && *a1 == z) || (*a0 == z && self.base.imp().is_tangible(a1))
    }
    fn is_quasi_zero(&self, a: &Val) -> bool {
        let (a0, a1) = sym(a);
        a0 == a1
    }
    fn surpasses(&self, a: &Val, b: &Val) -> bool {
        if a == b {
            return true;
        }
        let ((a0, a1), (b0, b1)) = (sym(a), sym(b));
        let cands = self.base.imp().carrier().unwrap_or_else(|| vec![self.bz(), a0.clone(), a1.clone()]);
        cands.iter().any(|c| self.badd(b0, c).ok().as_ref() == Some(a0) && self.badd(b1, c).ok().as_ref() == Some(a1))
    }
    fn height(&self, a: &Val, bound: u32) -> Height {
        let (a0, a1) = sym(a);
        match (self.base.imp().height(a0, bound), self.base.imp().height(a1, bound)) {
            (Height::Exact(x), Height::Exact(y)) => Height::Exact(x + y),
            _ => Height::Beyond(bound),
        }
    }
    fn decompose(&self, a: &Val) -> Option<Vec<Val>> {
        let (a0, a1) = sym(a);
        let z = self.bz();
        let mut v: Vec<Val> = self.base.imp().decompose(a0)?.into_iter().map(|t| mk(t, z.clone())).collect();
        v.extend(self.base.imp().decompose(a1)?.into_iter().map(|t| mk(z.clone(), t)));
        Some(v)
    }
    fn carrier(&self) -> Option<Vec<Val>> {
        let c = self.base.imp().carrier()?;
        Some(c.iter().flat_map(|x| c.iter().map(move |y| mk(x.clone(), y.clone()))).collect())
    }
    fn probe(&self) -> Vec<Val> {
        if let Some(c) = self.carrier() {
            return c;
        }
        let mut comps = vec![self.bz()];
        comps.extend(self.base.imp().probe().into_iter().filter(|v| self.base.imp().is_tangible(v)).take(3));
        comps.iter().flat_map(|x| comps.iter().map(move |y| mk(x.clone(), y.clone()))).collect()
    }
    fn characteristic_hint(&self) -> Option<u64> {
        if self.base.enumerable() {
            None
        } else {
            Some(self.base.characteristic())
        }
    }
    fn max_height_hint(&self) -> Option<Height> {
        match self.base.imp().max_height_hint()? {
            Height::Exact(h) => Some(Height::Exact(2 * h)),
            b => Some(b),
        }
    }
    fn tangible_div(&self, a: &Val, b: &Val) -> Option<Val> {
        let z = self.bz();
        let split = |v: &Val| {
            let (x0, x1) = sym(v);
            if *x1 == z {
                Some((x0.clone(), false))
            } else if *x0 == z {
                Some((x1.clone(), true))
            } else {
                None
            }
        };
        let ((ma, na), (mb, nb)) = (split(a)?, split(b)?);
        let d = self.base.imp().tangible_div(&ma, &mb)?;
        Some(if na != nb { mk(z, d) } else { mk(d, z) })
    }
    fn format(&self, a: &Val) -> String {
        let (a0, a1) = sym(a);
        format!("({} | {})", self.base.imp().format(a0), self.base.imp().format(a1))
    }
    fn parse(&self, s: &str) -> Result<Val> {
        let (a, b) = parse_pair(s, '|').ok_or_else(|| perr(s, "symmetrized"))?;
        Ok(mk(self.base.imp().parse(a)?, self.base.imp().parse(b)?))
    }
}

/// Pairs over `base` with swap negation and the twisted product.
pub fn make_symmetrized(base: &SystemHandle) -> Result<SystemHandle> {
    if !base.has_zero() {
        return Err(Error::Absent(base.name(), "zero".into()));
    }
    Ok(SystemHandle::new(Arc::new(Symmetrized { base: base.clone() })))
}

// ---------- classical ----------

/// ℚ with ordinary arithmetic and equality as the surpassing relation.
pub struct Classical;

fn cv(v: &Val) -> &Q {
    match v {
        Val::Classical(x) => x,
        o => panic!("classical received {o:?}"),
    }
}

impl SystemImpl for Classical {
    fn name(&self) -> String {
        "rationals".into()
    }
    fn family(&self) -> Family {
        Family::Parametric
    }
    fn surpass_kind(&self) -> SurpassKind {
        SurpassKind::Equality
    }
    fn has_mul(&self) -> bool {
        true
    }
    fn zero(&self) -> Option<Val> {
        Some(Val::Classical(q(0)))
    }
    fn one(&self) -> Option<Val> {
        Some(Val::Classical(q(1)))
    }
    fn add(&self, a: &Val, b: &Val) -> Result<Val> {
        Ok(Val::Classical(cv(a) + cv(b)))
    }
    fn neg(&self, a: &Val) -> Val {
        Val::Classical(-cv(a))
    }
    fn mul(&self, a: &Val, b: &Val) -> Result<Val> {
        Ok(Val::Classical(cv(a) * cv(b)))
    }
    fn is_tangible(&self, a: &Val) -> bool {
        !cv(a).is_zero()
    }
    fn is_quasi_zero(&self, a: &Val) -> bool {
        cv(a).is_zero()
    }
    fn surpasses(&self, a: &Val, b: &Val) -> bool {
        a == b
    }
    fn height(&self, a: &Val, _bound: u32) -> Height {
        Height::Exact(if cv(a).is_zero() { 0 } else { 1 })
    }
    fn decompose(&self, a: &Val) -> Option<Vec<Val>> {
        Some(if cv(a).is_zero() { vec![] } else { vec![a.clone()] })
    }
    fn probe(&self) -> Vec<Val> {
        (-2..=2).map(|x| Val::Classical(q(x))).collect()
    }
    fn characteristic_hint(&self) -> Option<u64> {
        Some(0)
    }
    fn max_height_hint(&self) -> Option<Height> {
        Some(Height::Exact(1))
    }
    fn tangible_div(&self, a: &Val, b: &Val) -> Option<Val> {
        if cv(b).is_zero() {
            None
        } else {
            Some(Val::Classical(cv(a) / cv(b)))
        }
    }
    fn format(&self, a: &Val) -> String {
        fmt_q(cv(a))
    }
    fn parse(&self, s: &str) -> Result<Val> {
        parse_q(s).map(Val::Classical).ok_or_else(|| perr(s, "rational"))
    }
}

pub fn make_classical() -> SystemHandle {
    SystemHandle::new(Arc::new(Classical))
}

/// Magnitude of a tangible parametric value, if it has one.
pub fn magnitude(v: &Val) -> Option<Q> {
    match v {
        Val::MaxPlus(x) => x.clone(),
        Val::Super(s) => smag(s).cloned(),
        Val::Layer(LayerVal::At(_, m)) | Val::Elt(EltVal::At(_, m)) => Some(m.clone()),
        Val::Classical(x) => Some(x.abs()),
        _ => None,
    }
}
