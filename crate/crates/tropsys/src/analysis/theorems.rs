//! Structural statements about meta-tangible systems, each checked exhaustively with its hypotheses.

use crate::analysis::classify::{self, Kind};
use crate::analysis::ctx::{Ctx, Flag, Witness};
use crate::core::{Element, Family, Height, SurpassKind, SystemHandle, TripleLevel};
use crate::error::{Error, Result};
use crate::instances::finite::{build_unchecked, finite_table, FiniteSurpass};

/// Identifiers accepted by [`run_theorems`], in default run order.
pub const THEOREM_IDS: &[&str] = &[
    "e-prime-trichotomy",
    "tangible-trichotomy",
    "absorbed-negation",
    "circ-preorder",
    "circ-congruence",
    "height-two-equivalence",
    "bipotent-dichotomy",
    "uniform-presentation",
    "presentation-uniqueness",
    "distributivity",
    "circ-surpassing",
    "fuzzy-property",
    "height-two-strongly-negated",
    "reversibility",
    "negated-implies-reversible",
    "powerset-negated",
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail { witness: Witness, detail: String },
    HypothesesNotMet(String),
}

impl Verdict {
    pub fn is_pass(&self) -> bool {
        matches!(self, Verdict::Pass)
    }
    pub fn is_fail(&self) -> bool {
        matches!(self, Verdict::Fail { .. })
    }
}

#[derive(Clone, Debug)]
pub struct TheoremResult {
    pub id: &'static str,
    pub verdict: Verdict,
    /// Hypotheses that could not be checked on the table and were taken as given.
    pub assumed: Vec<String>,
}

impl TheoremResult {
    pub fn render(&self, s: &SystemHandle) -> String {
        let mut line = match &self.verdict {
            Verdict::Pass => format!("{}: PASS", self.id),
            Verdict::Fail { witness, detail } => format!("{}: FAIL ({}) {}", self.id, witness.render(s), detail),
            Verdict::HypothesesNotMet(why) => format!("{}: hypotheses not met ({why})", self.id),
        };
        if !self.assumed.is_empty() && !matches!(self.verdict, Verdict::HypothesesNotMet(_)) {
            line.push_str(&format!(" [assumed: {}]", self.assumed.join("; ")));
        }
        line.trim_end().to_string()
    }
}

const NO_PRODUCT: &str = "table has no full product; multiplicative hypotheses taken from the ambient model";

/// Lazily computed facts shared by several statements.
struct Facts<'a> {
    cx: Ctx<'a>,
    meta: Flag,
    bip: Flag,
    kind: Kind,
    height: Height,
}

enum Hyp {
    Met(Vec<String>),
    NotMet(String),
}

impl<'a> Facts<'a> {
    fn require_meta(&self) -> Option<String> {
        if self.cx.s.level() == TripleLevel::Pseudo {
            return Some("pseudo-triple: tangibles meet the quasi-zeros".into());
        }
        (!self.meta.is_true()).then(|| "not meta-tangible".to_string())
    }

    fn one(&self) -> std::result::Result<Element, String> {
        self.cx.s.one().ok_or_else(|| "no unit element".to_string())
    }

    /// Tangibles form a multiplicative group acting on the carrier.
    fn group_module(&self) -> Result<Hyp> {
        if !self.cx.s.has_mul() {
            return Ok(Hyp::Met(vec![NO_PRODUCT.into()]));
        }
        let Some(one) = self.cx.s.one() else { return Ok(Hyp::NotMet("no unit element".into())) };
        for a in &self.cx.tans {
            let mut has_inv = false;
            for b in &self.cx.tans {
                match self.cx.mul(a, b) {
                    Some(p) if self.cx.tangible(&p)? => has_inv |= p == one,
                    _ => return Ok(Hyp::NotMet("tangibles not closed under products".into())),
                }
            }
            if !has_inv {
                return Ok(Hyp::NotMet(format!("{} has no tangible inverse", self.cx.s.format(a))));
            }
        }
        Ok(Hyp::Met(vec![]))
    }

    /// a·b = a·c forces b = c for tangible a.
    fn cancelative(&self) -> Result<Hyp> {
        if !self.cx.s.has_mul() {
            return Ok(Hyp::Met(vec![NO_PRODUCT.into()]));
        }
        for a in &self.cx.tans {
            for (i, b) in self.cx.elems.iter().enumerate() {
                for c in &self.cx.elems[i + 1..] {
                    if self.cx.mul(a, b).is_some() && self.cx.mul(a, b) == self.cx.mul(a, c) {
                        return Ok(Hyp::NotMet(format!("not cancelative at {}", self.cx.s.format(a))));
                    }
                }
            }
        }
        Ok(Hyp::Met(vec![]))
    }
}

fn fail(w: Vec<(&'static str, Element)>, detail: impl Into<String>) -> Verdict {
    Verdict::Fail { witness: Witness(w), detail: detail.into() }
}

fn from_flag(f: &Flag, detail: &str) -> Verdict {
    match (&f.holds, &f.witness) {
        (Some(true), _) => Verdict::Pass,
        (Some(false), Some(w)) => Verdict::Fail { witness: w.clone(), detail: detail.into() },
        (Some(false), None) => fail(vec![], detail),
        (None, _) => Verdict::HypothesesNotMet("property not evaluable".into()),
    }
}

pub fn run_theorems(s: &SystemHandle, ids: &[&str]) -> Result<Vec<TheoremResult>> {
    run_theorems_bounded(s, ids, crate::core::DEFAULT_HEIGHT_BOUND)
}

pub fn run_theorems_bounded(s: &SystemHandle, ids: &[&str], bound: u32) -> Result<Vec<TheoremResult>> {
    for id in ids {
        if !THEOREM_IDS.contains(id) {
            return Err(Error::Unsupported(format!("unknown theorem id '{id}'")));
        }
    }
    let ids: Vec<&str> = if ids.is_empty() { THEOREM_IDS.to_vec() } else { ids.to_vec() };
    let cx = Ctx::with_bound(s, bound)?;
    if !cx.exhaustive {
        return Ok(ids
            .iter()
            .map(|id| TheoremResult {
                id: THEOREM_IDS.iter().find(|x| *x == id).expect("validated"),
                verdict: Verdict::HypothesesNotMet("carrier is not enumerable".into()),
                assumed: vec![],
            })
            .collect());
    }
    let facts = Facts {
        meta: classify::meta_tangible(&cx)?,
        bip: classify::neg_bipotent(&cx)?,
        kind: classify::kind(&cx)?,
        height: classify::system_height(&cx)?.0,
        cx,
    };
    let mut out = Vec::new();
    for id in ids {
        let id: &'static str = THEOREM_IDS.iter().find(|x| **x == id).expect("validated");
        let (verdict, assumed) = run_one(&facts, id)?;
        out.push(TheoremResult { id, verdict, assumed });
    }
    Ok(out)
}

macro_rules! need {
    ($e:expr) => {
        if let Some(why) = $e {
            return Ok((Verdict::HypothesesNotMet(why), vec![]));
        }
    };
}

macro_rules! hyp {
    ($assumed:ident, $e:expr) => {
        match $e? {
            Hyp::Met(a) => $assumed.extend(a),
            Hyp::NotMet(why) => return Ok((Verdict::HypothesesNotMet(why), vec![])),
        }
    };
}

fn run_one(f: &Facts, id: &str) -> Result<(Verdict, Vec<String>)> {
    let cx = &f.cx;
    let s = cx.s;
    let mut assumed: Vec<String> = Vec::new();
    let v = match id {
        "e-prime-trichotomy" => {
            need!(f.require_meta());
            let one = match f.one() {
                Ok(o) => o,
                Err(why) => return Ok((Verdict::HypothesesNotMet(why), vec![])),
            };
            let (e, ep) = classify::e_elements(s)?;
            let (e, ep) = (e.expect("unit"), ep.expect("unit"));
            let in_t_circ = cx.tans.iter().map(|t| cx.circ(t)).collect::<Result<Vec<_>>>()?.contains(&ep);
            if cx.tangible(&ep)? {
                if ep == one {
                    Verdict::Pass
                } else {
                    fail(vec![("e'", ep)], "tangible e' differs from 1")
                }
            } else if in_t_circ {
                if ep == e {
                    Verdict::Pass
                } else {
                    fail(vec![("e'", ep)], "e' is a quasi-zero other than e")
                }
            } else {
                let three = cx.times(3, &one)?;
                let tall = !matches!(cx.height(&ep)?, Height::Exact(h) if h < 3);
                if cx.neg(&one)? == one && ep == three && tall {
                    Verdict::Pass
                } else {
                    fail(vec![("e'", ep)], "e' outside T ∪ T° without (−)1 = 1 and e' = 3 of height ≥ 3")
                }
            }
        }
        "tangible-trichotomy" => {
            need!(f.require_meta());
            let mut v = Verdict::Pass;
            'outer: for a in &cx.tans {
                let ac = cx.circ(a)?;
                for b in &cx.tans {
                    let i = a == &cx.neg(b)?;
                    let ii = &cx.add(a, b)? == a;
                    let iii = &cx.add(&ac, b)? == b;
                    if !(i || ii || iii) {
                        v = fail(vec![("a", a.clone()), ("b", b.clone())], "none of the three cases");
                        break 'outer;
                    }
                    if ii && iii {
                        v = fail(vec![("a", a.clone()), ("b", b.clone())], "two cases at once");
                        break 'outer;
                    }
                }
            }
            v
        }
        "absorbed-negation" => {
            need!(f.require_meta());
            let mut v = Verdict::Pass;
            'o: for a1 in &cx.tans {
                for a2 in &cx.tans {
                    if a1 != a2 && &cx.add(a1, a2)? == a2 && &s.sub(a2, a1)? != a2 {
                        v = fail(vec![("a1", a1.clone()), ("a2", a2.clone())], "a2 (−) a1 differs from a2");
                        break 'o;
                    }
                }
            }
            v
        }
        "circ-preorder" => {
            need!(f.require_meta());
            let circs: Vec<Element> = cx.elems.iter().map(|a| cx.circ(a)).collect::<Result<_>>()?;
            let le = |i: usize, j: usize| -> Result<bool> {
                Ok(circs[i] == circs[j] || cx.add(&circs[i], &circs[j])? == circs[j])
            };
            let n = cx.elems.len();
            let mut v = Verdict::Pass;
            'o: for i in 0..n {
                for j in 0..n {
                    if !le(i, j)? {
                        continue;
                    }
                    for k in 0..n {
                        if le(j, k)? && !le(i, k)? {
                            let w = vec![
                                ("a1", cx.elems[i].clone()),
                                ("a2", cx.elems[j].clone()),
                                ("a3", cx.elems[k].clone()),
                            ];
                            v = fail(w, "not transitive");
                            break 'o;
                        }
                    }
                }
            }
            if v.is_pass() {
                'p: for a1 in &cx.tans {
                    for a2 in &cx.tans {
                        let (c1, c2) = (cx.circ(a1)?, cx.circ(a2)?);
                        let sum = cx.add(&c1, &c2)?;
                        if sum != c1 && sum != c2 {
                            let pm = a1 == a2 || a1 == &cx.neg(a2)?;
                            if !pm || sum != cx.add(&c1, &c1)? {
                                v = fail(
                                    vec![("a1", a1.clone()), ("a2", a2.clone())],
                                    "sum of quasi-zeros out of range",
                                );
                                break 'p;
                            }
                        }
                    }
                }
            }
            v
        }
        "circ-congruence" => {
            need!(f.require_meta());
            let circs: Vec<Element> = cx.elems.iter().map(|a| cx.circ(a)).collect::<Result<_>>()?;
            let n = cx.elems.len();
            let mut v = Verdict::Pass;
            'o: for i in 0..n {
                for j in 0..n {
                    if circs[i] != circs[j] {
                        continue;
                    }
                    for k in 0..n {
                        for l in 0..n {
                            if circs[k] != circs[l] {
                                continue;
                            }
                            let (a1, a2, b1, b2) = (&cx.elems[i], &cx.elems[j], &cx.elems[k], &cx.elems[l]);
                            let w =
                                || vec![("a1", a1.clone()), ("a2", a2.clone()), ("b1", b1.clone()), ("b2", b2.clone())];
                            if cx.circ(&cx.add(a1, b1)?)? != cx.circ(&cx.add(a2, b2)?)? {
                                v = fail(w(), "sums not congruent");
                                break 'o;
                            }
                            if s.has_mul() {
                                if let (Some(p), Some(q)) = (cx.mul(a1, b1), cx.mul(a2, b2)) {
                                    if cx.circ(&p)? != cx.circ(&q)? {
                                        v = fail(w(), "products not congruent");
                                        break 'o;
                                    }
                                }
                            }
                        }
                    }
                }
            }
            if v.is_pass() {
                'q: for a in &cx.tans {
                    for b in &cx.tans {
                        let (ca, cb) = (cx.circ(a)?, cx.circ(b)?);
                        if ca == cb {
                            continue;
                        }
                        let cs = cx.circ(&cx.add(a, b)?)?;
                        if cs != ca && cs != cb {
                            v = fail(vec![("a", a.clone()), ("b", b.clone())], "quotient not bipotent");
                            break 'q;
                        }
                    }
                }
            }
            v
        }
        "height-two-equivalence" => {
            let one = match f.one() {
                Ok(o) => o,
                Err(why) => return Ok((Verdict::HypothesesNotMet(why), vec![])),
            };
            let t_circ: Vec<Element> = cx.tans.iter().map(|t| cx.circ(t)).collect::<Result<_>>()?;
            let mut covers = true;
            for a in &cx.elems {
                if !(cx.is_zero(a) || cx.tangible(a)? || t_circ.contains(a)) {
                    covers = false;
                }
            }
            let meta = f.meta.is_true();
            let h2 = meta && matches!(f.height, Height::Exact(h) if h <= 2);
            let (e, ep) = classify::e_elements(s)?;
            let e3 = meta && (ep.as_ref() == Some(&one) || ep == e);
            if covers == h2 && h2 == e3 {
                Verdict::Pass
            } else {
                fail(
                    vec![],
                    format!("T∪T°=A: {covers}, meta-tangible of height 2: {h2}, meta-tangible with e'∈{{1,e}}: {e3}"),
                )
            }
        }
        "bipotent-dichotomy" => {
            need!(f.require_meta());
            if let Err(why) = f.one() {
                return Ok((Verdict::HypothesesNotMet(why), vec![]));
            }
            hyp!(assumed, f.group_module());
            let (_, ep) = classify::e_elements(s)?;
            match classify::dichotomy_case(cx, &f.meta, &f.bip, f.kind, ep.as_ref())? {
                classify::DichotomyCase::Bipotent | classify::DichotomyCase::UnitSecondKind => Verdict::Pass,
                classify::DichotomyCase::UnitFirstKind => {
                    if matches!(f.height, Height::Exact(h) if h <= 2) {
                        Verdict::Pass
                    } else {
                        fail(vec![], "first kind with e' = 1 but height above 2")
                    }
                }
                _ => fail(f.bip.witness.clone().map(|w| w.0).unwrap_or_default(), "neither bipotent nor e' = 1"),
            }
        }
        "uniform-presentation" => {
            need!(f.require_meta());
            hyp!(assumed, f.group_module());
            let mut v = Verdict::Pass;
            for c in cx.nonzero() {
                let m = match cx.height(c)? {
                    Height::Exact(m) => m,
                    Height::Beyond(b) => {
                        v = fail(vec![("c", c.clone())], format!("height above search bound {b}"));
                        break;
                    }
                };
                let ok = match m {
                    1 => true,
                    2 => {
                        let mut found = false;
                        for t in &cx.tans {
                            found |= &cx.circ(t)? == c;
                        }
                        found
                    }
                    _ => {
                        let mut found = false;
                        for t in &cx.tans {
                            if &cx.times(m as u64, t)? == c && cx.times(3, t)? != *t {
                                found = true;
                            }
                        }
                        found && f.kind == Kind::First
                    }
                };
                if !ok {
                    v = fail(vec![("c", c.clone())], format!("no uniform presentation at height {m}"));
                    break;
                }
            }
            v
        }
        "presentation-uniqueness" => {
            if !f.bip.is_true() {
                return Ok((Verdict::HypothesesNotMet("not (−)-bipotent".into()), vec![]));
            }
            hyp!(assumed, f.cancelative());
            let mut v = Verdict::Pass;
            'o: for c in cx.nonzero() {
                let Height::Exact(m) = cx.height(c)? else { continue };
                if m == 2 {
                    continue;
                }
                let mut reps = Vec::new();
                for t in &cx.tans {
                    let mut acc = t.clone();
                    for k in 1..=cx.bound.max(m) {
                        if &acc == c {
                            reps.push((t.clone(), k));
                            break;
                        }
                        acc = cx.add(&acc, t)?;
                    }
                }
                if reps.len() != 1 || reps[0].1 != m {
                    let w = reps.iter().take(2).map(|(t, _)| ("t", t.clone()));
                    let mut wv = vec![("c", c.clone())];
                    wv.extend(w);
                    v = fail(wv, format!("{} presentations", reps.len()));
                    break 'o;
                }
            }
            v
        }
        "distributivity" => {
            need!(f.require_meta());
            if !s.has_mul() {
                return Ok((Verdict::HypothesesNotMet("no full product".into()), vec![]));
            }
            hyp!(assumed, f.cancelative());
            let mut v = Verdict::Pass;
            'o: for a in &cx.elems {
                for b in &cx.elems {
                    for c in &cx.elems {
                        let l = s.mul(a, &cx.add(b, c)?)?;
                        let r = cx.add(&s.mul(a, b)?, &s.mul(a, c)?)?;
                        let l2 = s.mul(&cx.add(a, b)?, c)?;
                        let r2 = cx.add(&s.mul(a, c)?, &s.mul(b, c)?)?;
                        if l != r || l2 != r2 {
                            v = fail(
                                vec![("a", a.clone()), ("b", b.clone()), ("c", c.clone())],
                                "product does not distribute",
                            );
                            break 'o;
                        }
                    }
                }
            }
            v
        }
        "circ-surpassing" => {
            need!(f.require_meta());
            hyp!(assumed, f.group_module());
            let view = if s.surpass_kind() == SurpassKind::Circ {
                s.clone()
            } else {
                let mut t = finite_table(s).ok_or_else(|| Error::Unsupported("no table view".into()))?;
                t.surpass = FiniteSurpass::Circ;
                build_unchecked(t)
            };
            let elems = view.elements().expect("finite");
            match crate::core::axioms::verify_surpassing(&view, &elems) {
                Ok(()) => Verdict::Pass,
                Err(e) => fail(vec![], e.to_string()),
            }
        }
        "fuzzy-property" => {
            need!(f.require_meta());
            if !s.has_mul() {
                return Ok((Verdict::HypothesesNotMet("no full product".into()), vec![]));
            }
            from_flag(&classify::fuzzy_property(cx)?, "quasi-zero differences not closed under products")
        }
        "height-two-strongly-negated" => {
            need!(f.require_meta());
            if !matches!(f.height, Height::Exact(h) if h <= 2) {
                return Ok((Verdict::HypothesesNotMet(format!("height {}", f.height)), vec![]));
            }
            from_flag(&classify::strongly_negated(cx)?, "not strongly negated")
        }
        "reversibility" => {
            need!(f.require_meta());
            hyp!(assumed, f.cancelative());
            let flag = classify::t_reversible(cx)?;
            match flag.witness {
                None => Verdict::Pass,
                Some(w) => {
                    let (b, c) = (w.get("b").expect("b").clone(), w.get("c").expect("c").clone());
                    let a = w.get("a").expect("a").clone();
                    let mut mult = None;
                    for m in 2..=cx.bound as u64 {
                        if cx.times(m, &b)? == c {
                            mult = Some(m);
                            break;
                        }
                    }
                    let excepted = mult.is_some() && cx.add(&a, &c)? == c;
                    let detail = match mult {
                        Some(m) if excepted => format!("c = {m}·b and a + c = c (the excepted parity case)"),
                        _ => "b does not lie below a (−) c".to_string(),
                    };
                    Verdict::Fail { witness: w, detail }
                }
            }
        }
        "negated-implies-reversible" => {
            let sn = classify::t_strongly_negated(cx)?;
            if !sn.is_true() {
                return Ok((Verdict::HypothesesNotMet("not T-strongly negated".into()), vec![]));
            }
            from_flag(&classify::t_reversible(cx)?, "strongly negated but not reversible")
        }
        "powerset-negated" => {
            if s.family() != Family::Hyper {
                return Ok((Verdict::HypothesesNotMet("not a power-set system".into()), vec![]));
            }
            let sn = classify::t_strongly_negated(cx)?;
            if !sn.is_true() {
                from_flag(&sn, "not T-strongly negated")
            } else {
                from_flag(&classify::t_reversible(cx)?, "not T-reversible")
            }
        }
        _ => unreachable!("validated id"),
    };
    if matches!(v, Verdict::HypothesesNotMet(_)) {
        assumed.clear();
    }
    Ok((v, assumed))
}
