//! Elements, system handles and the trait every system implements.

pub mod axioms;

use std::collections::HashSet;
use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::rational::Q;

/// Default bound for height searches.
pub const DEFAULT_HEIGHT_BOUND: u32 = 6;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SuperVal {
    Zero,
    Tan(Q),
    Ghost(Q),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LayerVal {
    Zero,
    /// (layer, magnitude)
    At(i64, Q),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EltVal {
    Zero,
    /// (coefficient, magnitude)
    At(Q, Q),
}

/// Subsets of the phase hyperfield S^1 ∪ {0}; angles are measured in turns.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PhaseVal {
    Zero,
    Point(Q),
    /// Open arc starting at the first angle, of the given length (0 < len < 1/2), counter-clockwise.
    Arc(Q, Q),
    /// {θ, θ + 1/2, 0} with θ in [0, 1/2).
    Triple(Q),
    /// Open half circle from θ counter-clockwise to θ + 1/2.
    Semi(Q),
    Full,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TriVal {
    pub lo: Q,
    pub hi: Q,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Val {
    Idx(u32),
    MaxPlus(Option<Q>),
    Super(SuperVal),
    Layer(LayerVal),
    Elt(EltVal),
    Sym(Box<Val>, Box<Val>),
    Phase(PhaseVal),
    Tri(TriVal),
    Classical(Q),
}

/// The relation used to decide `b ⪯ a`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SurpassKind {
    /// b ⪯ a iff a = b + c for some quasi-zero c.
    Circ,
    /// Set inclusion (hyper systems).
    Subset,
    /// Equality (classical systems).
    Equality,
    /// Layer-increasing relation on the ℕ-layered semiring: a strictly higher layer at the
    /// same magnitude, or a higher magnitude on a layer above 1.
    LayeredStrict,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Finite,
    Parametric,
    Hyper,
}

/// Whether tangibles avoid the quasi-zeros (`Triple`) or not (`Pseudo`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TripleLevel {
    Triple,
    Pseudo,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Height {
    Exact(u32),
    /// The search stopped at the bound without finding a decomposition.
    Beyond(u32),
}

impl fmt::Display for Height {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Height::Exact(h) => write!(f, "{h}"),
            Height::Beyond(b) => write!(f, "unbounded(>{b})"),
        }
    }
}

/// Behaviour shared by every system. Values are only meaningful for the system that made them.
pub trait SystemImpl: Send + Sync {
    fn name(&self) -> String;
    fn family(&self) -> Family;
    fn surpass_kind(&self) -> SurpassKind;
    fn level(&self) -> TripleLevel {
        TripleLevel::Triple
    }
    fn has_mul(&self) -> bool;
    fn zero(&self) -> Option<Val>;
    fn one(&self) -> Option<Val>;
    fn add(&self, a: &Val, b: &Val) -> Result<Val>;
    fn neg(&self, a: &Val) -> Val;
    /// Full product. Implementations may allow tangible-by-anything products even without
    /// `has_mul`; callers check `has_mul` first.
    fn mul(&self, a: &Val, b: &Val) -> Result<Val>;
    fn is_tangible(&self, a: &Val) -> bool;
    fn is_quasi_zero(&self, a: &Val) -> bool;
    /// `b ⪯ a`.
    fn surpasses(&self, a: &Val, b: &Val) -> bool;
    /// `a ⪰ 𝟘`.
    fn surpasses_zero(&self, a: &Val) -> bool {
        match self.surpass_kind() {
            SurpassKind::Equality => Some(a) == self.zero().as_ref(),
            _ => Some(a) == self.zero().as_ref() || self.is_quasi_zero(a),
        }
    }
    fn height(&self, a: &Val, bound: u32) -> Height;
    /// A list of tangibles summing to `a` (empty for zero).
    fn decompose(&self, _a: &Val) -> Option<Vec<Val>> {
        None
    }
    /// Every element, when the carrier is finite.
    fn carrier(&self) -> Option<Vec<Val>> {
        None
    }
    /// A finite sample used by checks on infinite systems.
    fn probe(&self) -> Vec<Val> {
        self.carrier().unwrap_or_default()
    }
    /// Closed-form characteristic if known.
    fn characteristic_hint(&self) -> Option<u64> {
        None
    }
    /// Closed-form maximal height if known.
    fn max_height_hint(&self) -> Option<Height> {
        None
    }
    fn format(&self, a: &Val) -> String;
    fn parse(&self, s: &str) -> Result<Val>;
    /// For tangibles a, b: some tangible t with t·b = a.
    fn tangible_div(&self, a: &Val, b: &Val) -> Option<Val> {
        if !self.has_mul() {
            return None;
        }
        self.carrier()?.into_iter().find(|t| self.is_tangible(t) && self.mul(t, b).ok().as_ref() == Some(a))
    }
    /// The underlying table, for table-driven systems.
    fn finite(&self) -> Option<&crate::instances::finite::FiniteTable> {
        None
    }
}

static NEXT_ID: AtomicU64 = AtomicU64::new(1);

/// An element tagged with the id of the system it lives in.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Element {
    pub sys: u64,
    pub val: Val,
}

/// Shared handle to a system.
#[derive(Clone)]
pub struct SystemHandle {
    id: u64,
    imp: Arc<dyn SystemImpl>,
}

impl fmt::Debug for SystemHandle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SystemHandle({}#{})", self.imp.name(), self.id)
    }
}

impl SystemHandle {
    pub fn new(imp: Arc<dyn SystemImpl>) -> Self {
        SystemHandle { id: NEXT_ID.fetch_add(1, Ordering::Relaxed), imp }
    }

    pub fn id(&self) -> u64 {
        self.id
    }

    pub fn imp(&self) -> &Arc<dyn SystemImpl> {
        &self.imp
    }

    pub fn name(&self) -> String {
        self.imp.name()
    }

    pub fn family(&self) -> Family {
        self.imp.family()
    }

    pub fn surpass_kind(&self) -> SurpassKind {
        self.imp.surpass_kind()
    }

    pub fn level(&self) -> TripleLevel {
        self.imp.level()
    }

    pub fn has_mul(&self) -> bool {
        self.imp.has_mul()
    }

    pub fn has_zero(&self) -> bool {
        self.imp.zero().is_some()
    }

    pub fn enumerable(&self) -> bool {
        self.imp.carrier().is_some()
    }

    pub fn elem(&self, val: Val) -> Element {
        Element { sys: self.id, val }
    }

    fn own(&self, a: &Element) -> Result<()> {
        if a.sys == self.id {
            Ok(())
        } else {
            Err(Error::CrossSystem(a.sys, self.id))
        }
    }

    pub fn parse(&self, s: &str) -> Result<Element> {
        Ok(self.elem(self.imp.parse(s)?))
    }

    pub fn format(&self, a: &Element) -> String {
        self.imp.format(&a.val)
    }

    pub fn add(&self, a: &Element, b: &Element) -> Result<Element> {
        self.own(a)?;
        self.own(b)?;
        Ok(self.elem(self.imp.add(&a.val, &b.val)?))
    }

    pub fn negate(&self, a: &Element) -> Result<Element> {
        self.own(a)?;
        Ok(self.elem(self.imp.neg(&a.val)))
    }

    /// Product; without a multiplication only a tangible left factor is accepted.
    pub fn mul(&self, a: &Element, b: &Element) -> Result<Element> {
        self.own(a)?;
        self.own(b)?;
        if !self.imp.has_mul() && !self.imp.is_tangible(&a.val) {
            return Err(Error::NoMultiplication(self.name()));
        }
        Ok(self.elem(self.imp.mul(&a.val, &b.val)?))
    }

    /// `a (−) b`.
    pub fn sub(&self, a: &Element, b: &Element) -> Result<Element> {
        let nb = self.negate(b)?;
        self.add(a, &nb)
    }

    /// `a° = a (−) a`.
    pub fn circ(&self, a: &Element) -> Result<Element> {
        self.sub(a, a)
    }

    pub fn sum<'a, I: IntoIterator<Item = &'a Element>>(&self, items: I) -> Result<Option<Element>> {
        let mut acc: Option<Element> = None;
        for x in items {
            acc = Some(match acc {
                None => {
                    self.own(x)?;
                    x.clone()
                }
                Some(s) => self.add(&s, x)?,
            });
        }
        Ok(acc)
    }

    /// `k·a`, the k-fold sum (k ≥ 1).
    pub fn times(&self, k: u64, a: &Element) -> Result<Element> {
        self.own(a)?;
        let mut acc = a.clone();
        for _ in 1..k {
            acc = self.add(&acc, a)?;
        }
        Ok(acc)
    }

    pub fn is_tangible(&self, a: &Element) -> Result<bool> {
        self.own(a)?;
        Ok(self.imp.is_tangible(&a.val))
    }

    pub fn is_quasi_zero(&self, a: &Element) -> Result<bool> {
        self.own(a)?;
        Ok(self.imp.is_quasi_zero(&a.val))
    }

    /// `b ⪯ a`.
    pub fn surpasses(&self, a: &Element, b: &Element) -> Result<bool> {
        self.own(a)?;
        self.own(b)?;
        Ok(self.imp.surpasses(&a.val, &b.val))
    }

    pub fn surpasses_zero(&self, a: &Element) -> Result<bool> {
        self.own(a)?;
        Ok(self.imp.surpasses_zero(&a.val))
    }

    pub fn height(&self, a: &Element) -> Result<Height> {
        self.height_bounded(a, DEFAULT_HEIGHT_BOUND)
    }

    pub fn height_bounded(&self, a: &Element, bound: u32) -> Result<Height> {
        self.own(a)?;
        Ok(self.imp.height(&a.val, bound))
    }

    pub fn decompose(&self, a: &Element) -> Result<Option<Vec<Element>>> {
        self.own(a)?;
        Ok(self.imp.decompose(&a.val).map(|v| v.into_iter().map(|x| self.elem(x)).collect()))
    }

    pub fn zero(&self) -> Option<Element> {
        self.imp.zero().map(|v| self.elem(v))
    }

    pub fn one(&self) -> Option<Element> {
        self.imp.one().map(|v| self.elem(v))
    }

    pub fn require_zero(&self) -> Result<Element> {
        self.zero().ok_or_else(|| Error::Absent(self.name(), "zero".into()))
    }

    pub fn require_one(&self) -> Result<Element> {
        self.one().ok_or_else(|| Error::Absent(self.name(), "one".into()))
    }

    /// Named constants: `zero`, `one`, `e` (= 𝟙°), `e'` (= e + 𝟙), `m<k>` (k-fold sum of 𝟙).
    pub fn distinguished(&self, name: &str) -> Result<Element> {
        match name {
            "zero" | "0" => self.require_zero(),
            "one" | "1" => self.require_one(),
            "e" => self.circ(&self.require_one()?),
            "e'" | "e_prime" => {
                let one = self.require_one()?;
                let e = self.circ(&one)?;
                self.add(&e, &one)
            }
            s if s.starts_with('m') => {
                let k: u64 = s[1..].parse().map_err(|_| Error::Absent(self.name(), s.into()))?;
                if k == 0 {
                    return self.require_zero();
                }
                self.times(k, &self.require_one()?)
            }
            other => Err(Error::Absent(self.name(), other.into())),
        }
    }

    pub fn elements(&self) -> Option<Vec<Element>> {
        self.imp.carrier().map(|c| c.into_iter().map(|v| self.elem(v)).collect())
    }

    pub fn tangibles(&self) -> Option<Vec<Element>> {
        self.imp.carrier().map(|c| c.into_iter().filter(|v| self.imp.is_tangible(v)).map(|v| self.elem(v)).collect())
    }

    /// The carrier if finite, else a fixed sample.
    pub fn probe(&self) -> Vec<Element> {
        self.imp.probe().into_iter().map(|v| self.elem(v)).collect()
    }

    /// Least k ≥ 1 with (k+1)a = a for all a, or 0 when none exists up to the carrier size.
    pub fn characteristic(&self) -> u64 {
        if let Some(c) = self.imp.characteristic_hint() {
            return c;
        }
        let Some(carrier) = self.imp.carrier() else { return 0 };
        let n = carrier.len() as u64;
        'k: for k in 1..=n.max(1) {
            for a in &carrier {
                let mut acc = a.clone();
                for _ in 0..k {
                    match self.imp.add(&acc, a) {
                        Ok(s) => acc = s,
                        Err(_) => continue 'k,
                    }
                }
                if &acc != a {
                    continue 'k;
                }
            }
            return k;
        }
        0
    }

    /// Same system (same handle id).
    pub fn same(&self, other: &SystemHandle) -> bool {
        self.id == other.id
    }
}

/// Breadth-first height search over sums of candidate tangibles.
pub fn bfs_height(imp: &dyn SystemImpl, target: &Val, cands: &[Val], bound: u32) -> Height {
    if Some(target) == imp.zero().as_ref() {
        return Height::Exact(0);
    }
    let mut frontier: Vec<Val> = cands.to_vec();
    let mut seen: HashSet<Val> = frontier.iter().cloned().collect();
    for h in 1..=bound {
        if frontier.iter().any(|v| v == target) {
            return Height::Exact(h);
        }
        if h == bound {
            break;
        }
        let mut next = Vec::new();
        for f in &frontier {
            for c in cands {
                if let Ok(s) = imp.add(f, c) {
                    if seen.insert(s.clone()) {
                        next.push(s);
                    }
                }
            }
        }
        frontier = next;
    }
    Height::Beyond(bound)
}
