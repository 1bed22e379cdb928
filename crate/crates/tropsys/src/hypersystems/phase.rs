//! The phase hyperfield S¹ ∪ {0} and its closure under hyperaddition.
//!
//! Two distinct non-antipodal points add to the open short arc between them, antipodes add
//! to {a, 0, -a}. Closed arcs would break associativity, so arcs are open throughout.
//! Every subset reachable from points is one of six shapes (see [`PhaseVal`]).

use std::sync::Arc;

use num_traits::Zero;

use crate::core::{bfs_height, Family, Height, PhaseVal, SurpassKind, SystemHandle, SystemImpl, Val};
use crate::error::{Error, Result};
use crate::hypersystems::hypergroup::ProductMode;
use crate::rational::{fmt_q, half, parse_q, qf, wrap_turn, Q};

pub struct Phase {
    pub product: ProductMode,
    /// Denominator of the probe grid.
    pub grid: i64,
}

fn pv(v: &Val) -> &PhaseVal {
    match v {
        Val::Phase(p) => p,
        o => panic!("phase received {o:?}"),
    }
}

fn w(x: Q) -> Q {
    wrap_turn(&x)
}

/// Counter-clockwise distance from `a` to `b`, in [0, 1).
fn ccw(a: &Q, b: &Q) -> Q {
    w(b - a)
}

fn anti(a: &Q) -> Q {
    w(a + half())
}

pub fn point(t: Q) -> PhaseVal {
    PhaseVal::Point(w(t))
}

pub fn triple(t: Q) -> PhaseVal {
    let t = w(t);
    PhaseVal::Triple(if t >= half() { t - half() } else { t })
}

pub fn semi(t: Q) -> PhaseVal {
    PhaseVal::Semi(w(t))
}

/// Open short arc from `a` counter-clockwise by `len` (0 < len < 1/2).
pub fn arc(a: Q, len: Q) -> PhaseVal {
    PhaseVal::Arc(w(a), len)
}

fn short_arc(a: &Q, c: &Q) -> PhaseVal {
    let d = ccw(a, c);
    if d < half() {
        arc(a.clone(), d)
    } else {
        arc(c.clone(), ccw(c, a))
    }
}

/// `shape ⊞ c` for a point c on the circle.
pub fn add_point(s: &PhaseVal, c: &Q) -> PhaseVal {
    match s {
        PhaseVal::Zero => point(c.clone()),
        PhaseVal::Point(a) => {
            if a == c {
                s.clone()
            } else if *a == anti(c) {
                triple(a.clone())
            } else {
                short_arc(a, c)
            }
        }
        PhaseVal::Arc(st, len) => {
            let d = ccw(st, c);
            let h = half();
            if d <= *len {
                s.clone()
            } else if d < h {
                arc(st.clone(), d)
            } else if d == h {
                semi(st.clone())
            } else if d < len + &h {
                PhaseVal::Full
            } else if d == len + &h {
                semi(c.clone())
            } else {
                arc(c.clone(), len + Q::from_integer(1.into()) - d)
            }
        }
        PhaseVal::Triple(a) => {
            if a == c || anti(a) == *c {
                s.clone()
            } else if ccw(a, c) < half() {
                semi(a.clone())
            } else {
                semi(anti(a))
            }
        }
        PhaseVal::Semi(st) => {
            if ccw(st, c) <= half() {
                s.clone()
            } else {
                PhaseVal::Full
            }
        }
        PhaseVal::Full => PhaseVal::Full,
    }
}

/// Points whose hypersum is the shape (minimal length).
pub fn points_of(s: &PhaseVal) -> Vec<Q> {
    match s {
        PhaseVal::Zero => vec![],
        PhaseVal::Point(a) => vec![a.clone()],
        PhaseVal::Arc(a, l) => vec![a.clone(), w(a + l)],
        PhaseVal::Triple(a) => vec![a.clone(), anti(a)],
        PhaseVal::Semi(a) => vec![a.clone(), anti(a), w(a + qf(1, 4))],
        PhaseVal::Full => vec![Q::zero(), qf(1, 3), qf(2, 3)],
    }
}

pub fn phase_add(x: &PhaseVal, y: &PhaseVal) -> PhaseVal {
    points_of(y).iter().fold(x.clone(), |acc, c| add_point(&acc, c))
}

fn rotate(s: &PhaseVal, t: &Q) -> PhaseVal {
    match s {
        PhaseVal::Zero => PhaseVal::Zero,
        PhaseVal::Point(a) => point(a + t),
        PhaseVal::Arc(a, l) => arc(a + t, l.clone()),
        PhaseVal::Triple(a) => triple(a + t),
        PhaseVal::Semi(a) => semi(a + t),
        PhaseVal::Full => PhaseVal::Full,
    }
}

fn contains_zero(s: &PhaseVal) -> bool {
    matches!(s, PhaseVal::Zero | PhaseVal::Triple(_) | PhaseVal::Full)
}

fn contains_point(s: &PhaseVal, t: &Q) -> bool {
    match s {
        PhaseVal::Zero => false,
        PhaseVal::Point(a) => a == t,
        PhaseVal::Arc(a, l) => {
            let d = ccw(a, t);
            !d.is_zero() && d < *l
        }
        PhaseVal::Triple(a) => a == t || anti(a) == *t,
        PhaseVal::Semi(a) => {
            let d = ccw(a, t);
            !d.is_zero() && d < half()
        }
        PhaseVal::Full => true,
    }
}

/// Open arc (start, len) as a subset test against `big`.
fn contains_arc(big: &PhaseVal, a: &Q, l: &Q) -> bool {
    let inside = |st: &Q, len: &Q| ccw(st, a) + l <= *len;
    match big {
        PhaseVal::Full => true,
        PhaseVal::Arc(st, len) => inside(st, len),
        PhaseVal::Semi(st) => inside(st, &half()),
        _ => false,
    }
}

/// `small ⊆ big`.
pub fn phase_contains(big: &PhaseVal, small: &PhaseVal) -> bool {
    if contains_zero(small) && !contains_zero(big) {
        return false;
    }
    match small {
        PhaseVal::Zero => true,
        PhaseVal::Point(a) => contains_point(big, a),
        PhaseVal::Triple(a) => contains_point(big, a) && contains_point(big, &anti(a)),
        PhaseVal::Arc(a, l) => contains_arc(big, a, l),
        PhaseVal::Semi(a) => contains_arc(big, a, &half()),
        PhaseVal::Full => matches!(big, PhaseVal::Full),
    }
}

fn pointwise(x: &PhaseVal, y: &PhaseVal) -> Option<PhaseVal> {
    use PhaseVal::*;
    Some(match (x, y) {
        (Zero, _) | (_, Zero) => Zero,
        (Point(a), s) | (s, Point(a)) => rotate(s, a),
        (Full, _) | (_, Full) => Full,
        (Triple(a), Triple(b)) => triple(a + b),
        (Arc(a, l), Arc(b, m)) => {
            let len = l + m;
            if len < half() {
                arc(a + b, len)
            } else if len == half() {
                semi(a + b)
            } else {
                return None;
            }
        }
        _ => return None,
    })
}

impl Phase {
    fn fmt(&self, s: &PhaseVal) -> String {
        match s {
            PhaseVal::Zero => "0".into(),
            PhaseVal::Point(a) => format!("point({})", fmt_q(a)),
            PhaseVal::Arc(a, l) => format!("arc({},{})", fmt_q(a), fmt_q(&w(a + l))),
            PhaseVal::Triple(a) => format!("antipodal_triple({})", fmt_q(a)),
            PhaseVal::Semi(a) => format!("semicircle({},{})", fmt_q(a), fmt_q(&anti(a))),
            PhaseVal::Full => "full_circle".into(),
        }
    }
}

impl SystemImpl for Phase {
    fn name(&self) -> String {
        "phase".into()
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
        Some(Val::Phase(PhaseVal::Zero))
    }
    fn one(&self) -> Option<Val> {
        Some(Val::Phase(point(Q::zero())))
    }
    fn add(&self, a: &Val, b: &Val) -> Result<Val> {
        Ok(Val::Phase(phase_add(pv(a), pv(b))))
    }
    fn neg(&self, a: &Val) -> Val {
        Val::Phase(rotate(pv(a), &half()))
    }
    fn mul(&self, a: &Val, b: &Val) -> Result<Val> {
        let (x, y) = (pv(a), pv(b));
        match self.product {
            ProductMode::Generated => {
                if *x == PhaseVal::Zero || *y == PhaseVal::Zero {
                    return Ok(Val::Phase(PhaseVal::Zero));
                }
                let parts: Vec<PhaseVal> = points_of(x).iter().map(|p| rotate(y, p)).collect();
                Ok(Val::Phase(parts.iter().skip(1).fold(parts[0].clone(), |acc, s| phase_add(&acc, s))))
            }
            ProductMode::Pointwise => {
                pointwise(x, y).map(Val::Phase).ok_or_else(|| Error::UndefinedProduct(self.fmt(x), self.fmt(y)))
            }
        }
    }
    fn is_tangible(&self, a: &Val) -> bool {
        matches!(pv(a), PhaseVal::Point(_))
    }
    fn is_quasi_zero(&self, a: &Val) -> bool {
        contains_zero(pv(a))
    }
    fn surpasses(&self, a: &Val, b: &Val) -> bool {
        phase_contains(pv(a), pv(b))
    }
    fn surpasses_zero(&self, a: &Val) -> bool {
        contains_zero(pv(a))
    }
    fn height(&self, a: &Val, bound: u32) -> Height {
        let pts = points_of(pv(a));
        let mut cands: Vec<Val> = Vec::new();
        for p in &pts {
            for c in [p.clone(), anti(p)] {
                let v = Val::Phase(point(c));
                if !cands.contains(&v) {
                    cands.push(v);
                }
            }
        }
        bfs_height(self, a, &cands, bound)
    }
    fn decompose(&self, a: &Val) -> Option<Vec<Val>> {
        Some(points_of(pv(a)).into_iter().map(|p| Val::Phase(point(p))).collect())
    }
    fn probe(&self) -> Vec<Val> {
        let g = self.grid;
        let t = |k: i64| qf(k, g);
        let mut v = vec![PhaseVal::Zero, PhaseVal::Full];
        for k in 0..g {
            v.push(point(t(k)));
            v.push(semi(t(k)));
            for l in 1..g {
                if 2 * l < g {
                    v.push(arc(t(k), t(l)));
                }
            }
            if 2 * k < g {
                v.push(triple(t(k)));
            }
        }
        v.into_iter().map(Val::Phase).collect()
    }
    fn tangible_div(&self, a: &Val, b: &Val) -> Option<Val> {
        match (pv(a), pv(b)) {
            (PhaseVal::Point(x), PhaseVal::Point(y)) => Some(Val::Phase(point(x - y))),
            _ => None,
        }
    }
    fn characteristic_hint(&self) -> Option<u64> {
        Some(0)
    }
    fn max_height_hint(&self) -> Option<Height> {
        Some(Height::Exact(3))
    }
    fn format(&self, a: &Val) -> String {
        self.fmt(pv(a))
    }
    fn parse(&self, s: &str) -> Result<Val> {
        let err = || Error::parse(1, 1, format!("`{s}` is not a phase literal"));
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if t == "0" || t == "zero" {
            return Ok(Val::Phase(PhaseVal::Zero));
        }
        if t == "full_circle" || t == "full" {
            return Ok(Val::Phase(PhaseVal::Full));
        }
        let (head, rest) = t.split_once('(').ok_or_else(err)?;
        let args: Vec<Q> = rest
            .strip_suffix(')')
            .ok_or_else(err)?
            .split(',')
            .map(parse_q)
            .collect::<Option<Vec<_>>>()
            .ok_or_else(err)?;
        let v = match (head, args.as_slice()) {
            ("point", [a]) => point(a.clone()),
            ("antipodal_triple" | "triple", [a]) => triple(a.clone()),
            ("semicircle" | "semi", [a]) => semi(a.clone()),
            ("semicircle" | "semi", [a, b]) if ccw(a, b) == half() => semi(a.clone()),
            ("arc", [a, b]) => {
                let d = ccw(a, b);
                if d.is_zero() || d >= half() {
                    return Err(err());
                }
                arc(a.clone(), d)
            }
            _ => return Err(err()),
        };
        Ok(Val::Phase(v))
    }
}

pub fn make_phase() -> SystemHandle {
    make_phase_with(ProductMode::Generated)
}

pub fn make_phase_with(product: ProductMode) -> SystemHandle {
    SystemHandle::new(Arc::new(Phase { product, grid: 8 }))
}
