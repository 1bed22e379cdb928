//! Hypergroups from meta-tangible systems, table isomorphism, and fuzzy-ring data.

use crate::analysis::classify;
use crate::analysis::ctx::{Ctx, Witness};
use crate::core::{Element, SystemHandle};
use crate::error::{AxiomViolation, Error, Result};
use crate::hypersystems::FiniteHypergroup;
use crate::instances::finite::{finite_table, load_finite_system, FiniteSurpass, FiniteTable};

/// Hypergroup on the tangibles and 𝟘: a ⊞ b = {a + b} unless b = (−)a, and a ⊞ (−)a is
/// the set of a′ with a′ + a° = a°.
pub fn system_to_hypergroup(s: &SystemHandle) -> Result<FiniteHypergroup> {
    let cx = Ctx::new(s)?;
    if !cx.exhaustive {
        return Err(Error::Precondition("carrier is not enumerable".into()));
    }
    if !classify::meta_tangible(&cx)?.is_true() {
        return Err(Error::Precondition(format!("{} is not meta-tangible", s.name())));
    }
    let zero = s.require_zero()?;
    let mut pts: Vec<Element> = vec![zero.clone()];
    pts.extend(cx.tans.iter().cloned());
    if pts.len() > 128 {
        return Err(Error::Unsupported("more than 127 tangibles".into()));
    }
    let idx = |e: &Element| pts.iter().position(|p| p == e);
    let n = pts.len();
    let mut add = vec![vec![0u128; n]; n];
    let mut neg = vec![0usize; n];
    for i in 0..n {
        neg[i] = idx(&s.negate(&pts[i])?).ok_or_else(|| Error::Precondition("negation leaves the tangibles".into()))?;
    }
    for i in 0..n {
        for j in 0..n {
            add[i][j] = if i == 0 {
                1 << j
            } else if j == 0 {
                1 << i
            } else if neg[i] == j {
                let ac = s.circ(&pts[i])?;
                let mut m = 0u128;
                for (k, p) in pts.iter().enumerate() {
                    if s.add(p, &ac)? == ac {
                        m |= 1 << k;
                    }
                }
                m
            } else {
                let sum = s.add(&pts[i], &pts[j])?;
                let k = idx(&sum).ok_or_else(|| {
                    Error::Precondition(format!("{} + {} is not tangible", s.format(&pts[i]), s.format(&pts[j])))
                })?;
                1 << k
            };
        }
    }
    let mul = if s.has_mul() {
        let mut m = vec![vec![0usize; n]; n];
        for i in 0..n {
            for j in 0..n {
                let p = s.mul(&pts[i], &pts[j])?;
                m[i][j] = idx(&p).ok_or_else(|| Error::Precondition("tangible products leave the tangibles".into()))?;
            }
        }
        Some(m)
    } else {
        None
    };
    let one = s.one().and_then(|o| idx(&o));
    let h = FiniteHypergroup {
        name: format!("H({})", s.name()),
        carrier: pts.iter().map(|p| s.format(p)).collect(),
        zero: 0,
        neg,
        add,
        mul,
        one,
        non_canonical: false,
    };
    h.verify()?;
    Ok(h)
}

/// Search for a bijection between two finite systems preserving 𝟘, 𝟙, tangibles, negation,
/// addition, multiplication and the surpassing relation. Returns the image of each index.
pub fn find_isomorphism(a: &SystemHandle, b: &SystemHandle) -> Result<Option<Vec<usize>>> {
    let ta = finite_table(a).ok_or_else(|| Error::Precondition(format!("{} is not finite", a.name())))?;
    let tb = finite_table(b).ok_or_else(|| Error::Precondition(format!("{} is not finite", b.name())))?;
    let n = ta.carrier.len();
    if n != tb.carrier.len() || ta.tangibles.len() != tb.tangibles.len() || ta.mul.is_some() != tb.mul.is_some() {
        return Ok(None);
    }
    let ea = a.elements().expect("finite");
    let eb = b.elements().expect("finite");
    let sa: Vec<Vec<bool>> =
        ea.iter().map(|x| ea.iter().map(|y| a.surpasses(x, y)).collect()).collect::<Result<_>>()?;
    let sb: Vec<Vec<bool>> =
        eb.iter().map(|x| eb.iter().map(|y| b.surpasses(x, y)).collect()).collect::<Result<_>>()?;
    let ist_a: Vec<bool> = (0..n).map(|i| ta.tangibles.contains(&i)).collect();
    let ist_b: Vec<bool> = (0..n).map(|i| tb.tangibles.contains(&i)).collect();
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    let fixed = [(ta.zero, tb.zero), (ta.one, tb.one)];
    for (x, y) in fixed {
        match (x, y) {
            (Some(x), Some(y)) => {
                if map[x] != usize::MAX && map[x] != y {
                    return Ok(None);
                }
                map[x] = y;
                used[y] = true;
            }
            (None, None) => {}
            _ => return Ok(None),
        }
    }
    let ctx = IsoCtx { ta: &ta, tb: &tb, sa: &sa, sb: &sb, ist_a: &ist_a, ist_b: &ist_b };
    if ctx.consistent(&map) && ctx.extend(&mut map, &mut used, 0) {
        Ok(Some(map))
    } else {
        Ok(None)
    }
}

struct IsoCtx<'a> {
    ta: &'a FiniteTable,
    tb: &'a FiniteTable,
    sa: &'a [Vec<bool>],
    sb: &'a [Vec<bool>],
    ist_a: &'a [bool],
    ist_b: &'a [bool],
}

impl IsoCtx<'_> {
    fn consistent(&self, map: &[usize]) -> bool {
        let n = map.len();
        let m = |i: usize| map[i];
        for i in 0..n {
            if m(i) == usize::MAX {
                continue;
            }
            if self.ist_a[i] != self.ist_b[m(i)] {
                return false;
            }
            let ni = self.ta.neg[i];
            if m(ni) != usize::MAX && m(ni) != self.tb.neg[m(i)] {
                return false;
            }
            for j in 0..n {
                if m(j) == usize::MAX {
                    continue;
                }
                if self.sa[i][j] != self.sb[m(i)][m(j)] {
                    return false;
                }
                let s = self.ta.add[i][j];
                if m(s) != usize::MAX && m(s) != self.tb.add[m(i)][m(j)] {
                    return false;
                }
                if let (Some(ma), Some(mb)) = (&self.ta.mul, &self.tb.mul) {
                    let p = ma[i][j];
                    if m(p) != usize::MAX && m(p) != mb[m(i)][m(j)] {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn extend(&self, map: &mut Vec<usize>, used: &mut Vec<bool>, i: usize) -> bool {
        let n = map.len();
        if i == n {
            return true;
        }
        if map[i] != usize::MAX {
            return self.extend(map, used, i + 1);
        }
        for y in 0..n {
            if used[y] {
                continue;
            }
            map[i] = y;
            used[y] = true;
            if self.consistent(map) && self.extend(map, used, i + 1) {
                return true;
            }
            map[i] = usize::MAX;
            used[y] = false;
        }
        false
    }
}

pub fn isomorphic(a: &SystemHandle, b: &SystemHandle) -> Result<bool> {
    Ok(find_isomorphism(a, b)?.is_some())
}

/// a ⪯ a + b whenever a + b is not tangible, for tangible a, b: the hyperfield condition
/// "a ∈ a ⊞ b when the sum is not a singleton", read through the surpassing relation.
pub fn property_p(s: &SystemHandle) -> Result<Option<Witness>> {
    let cx = Ctx::new(s)?;
    for a in &cx.tans {
        for b in &cx.tans {
            let sum = cx.add(a, b)?;
            if !cx.tangible(&sum)? && !cx.surp(&sum, a)? {
                return Ok(Some(Witness(vec![("a", a.clone()), ("b", b.clone())])));
            }
        }
    }
    Ok(None)
}

/// A distinguished tangible ε and an ideal A₀.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FuzzyData {
    pub epsilon: Element,
    pub ideal: Vec<Element>,
}

fn fuzzy_fail(axiom: &str, witness: String) -> Error {
    Error::Axiom(AxiomViolation::Fuzzy { axiom: axiom.into(), witness })
}

/// ε² = 𝟙, ε tangible, A₀ a proper ideal disjoint from the tangibles, and a + b ∈ A₀ iff a = εb.
pub fn verify_fuzzy(base: &SystemHandle, d: &FuzzyData) -> Result<()> {
    let cx = Ctx::new(base)?;
    let one = base.require_one()?;
    let inz = |x: &Element| d.ideal.contains(x);
    if !cx.tangible(&d.epsilon)? {
        return Err(fuzzy_fail("epsilon tangible", base.format(&d.epsilon)));
    }
    if base.mul(&d.epsilon, &d.epsilon)? != one {
        return Err(fuzzy_fail("epsilon squared is one", base.format(&d.epsilon)));
    }
    if inz(&one) {
        return Err(fuzzy_fail("ideal proper", base.format(&one)));
    }
    for x in &d.ideal {
        if cx.tangible(x)? {
            return Err(fuzzy_fail("tangibles avoid the ideal", base.format(x)));
        }
        for y in &d.ideal {
            if !inz(&base.add(x, y)?) {
                return Err(fuzzy_fail("ideal closed under sums", format!("{} + {}", base.format(x), base.format(y))));
            }
        }
        for t in &cx.tans {
            if !inz(&base.mul(t, x)?) {
                return Err(fuzzy_fail("ideal absorbs tangibles", format!("{}·{}", base.format(t), base.format(x))));
            }
        }
    }
    for a in &cx.tans {
        for b in &cx.tans {
            let lhs = inz(&base.add(a, b)?);
            let rhs = a == &base.mul(&d.epsilon, b)?;
            if lhs != rhs {
                return Err(fuzzy_fail(
                    "sum in ideal iff a = εb",
                    format!("a={} b={}", base.format(a), base.format(b)),
                ));
            }
        }
    }
    Ok(())
}

/// ε = (−)𝟙 and A₀ = the quasi-zeros.
pub fn to_fuzzy(s: &SystemHandle) -> Result<FuzzyData> {
    let cx = Ctx::new(s)?;
    if !cx.exhaustive {
        return Err(Error::Precondition("carrier is not enumerable".into()));
    }
    if !s.has_mul() {
        return Err(Error::Precondition("no full product".into()));
    }
    if !classify::unique_quasi_negatives(&cx)?.is_true() {
        return Err(Error::Precondition("quasi-negatives are not unique".into()));
    }
    let one = s.require_one()?;
    for a in &cx.tans {
        for (i, b) in cx.elems.iter().enumerate() {
            for c in &cx.elems[i + 1..] {
                if s.mul(a, b)? == s.mul(a, c)? {
                    return Err(Error::Precondition("not cancelative".into()));
                }
            }
        }
    }
    let mut ideal = Vec::new();
    for e in &cx.elems {
        if cx.in_circ(e)? {
            ideal.push(e.clone());
        }
    }
    let d = FuzzyData { epsilon: s.negate(&one)?, ideal };
    verify_fuzzy(s, &d)?;
    Ok(d)
}

/// Rebuild a system from fuzzy data over `base`: same sum and product, negation a ↦ εa.
pub fn from_fuzzy(d: &FuzzyData, base: &SystemHandle) -> Result<SystemHandle> {
    verify_fuzzy(base, d)?;
    let mut t = finite_table(base).ok_or_else(|| Error::Precondition("base is not finite".into()))?;
    let elems = base.elements().expect("finite");
    for (i, a) in elems.iter().enumerate() {
        let img = base.mul(&d.epsilon, a)?;
        t.neg[i] = elems.iter().position(|x| x == &img).expect("closed");
    }
    t.name = format!("fuzzy({})", base.name());
    t.surpass = FiniteSurpass::Circ;
    let out = load_finite_system(t)?;
    let cx = Ctx::new(&out)?;
    for e in &cx.elems {
        if cx.in_circ(e)? && !d.ideal.iter().any(|x| x.val == e.val) {
            return Err(fuzzy_fail("quasi-zeros inside the ideal", out.format(e)));
        }
    }
    Ok(out)
}
