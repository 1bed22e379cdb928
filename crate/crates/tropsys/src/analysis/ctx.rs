//! Shared enumeration state for the classifier and the theorem suite.

use crate::core::{Element, Height, SystemHandle, DEFAULT_HEIGHT_BOUND};
use crate::error::Result;

/// Named elements that witness a failing property.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness(pub Vec<(&'static str, Element)>);

impl Witness {
    pub fn get(&self, key: &str) -> Option<&Element> {
        self.0.iter().find(|(k, _)| *k == key).map(|(_, e)| e)
    }

    pub fn render(&self, s: &SystemHandle) -> String {
        self.0.iter().map(|(k, e)| format!("{k}={}", s.format(e))).collect::<Vec<_>>().join(" ")
    }
}

/// Outcome of a universally quantified check. `None` means the property was not evaluated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Flag {
    pub holds: Option<bool>,
    pub witness: Option<Witness>,
}

impl Flag {
    pub fn yes() -> Self {
        Flag { holds: Some(true), witness: None }
    }
    pub fn no(w: Vec<(&'static str, Element)>) -> Self {
        Flag { holds: Some(false), witness: Some(Witness(w)) }
    }
    pub fn unknown() -> Self {
        Flag { holds: None, witness: None }
    }
    pub fn is_true(&self) -> bool {
        self.holds == Some(true)
    }
    pub fn render(&self) -> &'static str {
        match self.holds {
            Some(true) => "true",
            Some(false) => "false",
            None => "n/a",
        }
    }
}

pub struct Ctx<'a> {
    pub s: &'a SystemHandle,
    pub elems: Vec<Element>,
    pub tans: Vec<Element>,
    /// The whole carrier is enumerated (as opposed to a probe sample).
    pub exhaustive: bool,
    pub bound: u32,
}

impl<'a> Ctx<'a> {
    pub fn new(s: &'a SystemHandle) -> Result<Self> {
        Self::with_bound(s, DEFAULT_HEIGHT_BOUND)
    }

    pub fn with_bound(s: &'a SystemHandle, bound: u32) -> Result<Self> {
        let (elems, exhaustive) = match s.elements() {
            Some(e) => (e, true),
            None => (s.probe(), false),
        };
        let mut tans = Vec::new();
        for e in &elems {
            if s.is_tangible(e)? {
                tans.push(e.clone());
            }
        }
        Ok(Ctx { s, elems, tans, exhaustive, bound })
    }

    pub fn add(&self, a: &Element, b: &Element) -> Result<Element> {
        self.s.add(a, b)
    }

    pub fn neg(&self, a: &Element) -> Result<Element> {
        self.s.negate(a)
    }

    pub fn circ(&self, a: &Element) -> Result<Element> {
        self.s.circ(a)
    }

    pub fn is_zero(&self, a: &Element) -> bool {
        self.s.zero().as_ref() == Some(a)
    }

    /// Membership in the set of quasi-zeros (𝟘 included).
    pub fn in_circ(&self, a: &Element) -> Result<bool> {
        Ok(self.is_zero(a) || self.s.is_quasi_zero(a)?)
    }

    pub fn tangible(&self, a: &Element) -> Result<bool> {
        self.s.is_tangible(a)
    }

    /// `b ⪯ a`.
    pub fn surp(&self, a: &Element, b: &Element) -> Result<bool> {
        self.s.surpasses(a, b)
    }

    pub fn surp_zero(&self, a: &Element) -> Result<bool> {
        self.s.surpasses_zero(a)
    }

    pub fn height(&self, a: &Element) -> Result<Height> {
        self.s.height_bounded(a, self.bound)
    }

    /// Elements other than 𝟘.
    pub fn nonzero(&self) -> impl Iterator<Item = &Element> {
        self.elems.iter().filter(move |e| !self.is_zero(e))
    }

    /// Product when defined (tangible left factor or full multiplication).
    pub fn mul(&self, a: &Element, b: &Element) -> Option<Element> {
        self.s.mul(a, b).ok()
    }

    /// m·a for m ≥ 1.
    pub fn times(&self, m: u64, a: &Element) -> Result<Element> {
        self.s.times(m, a)
    }
}
