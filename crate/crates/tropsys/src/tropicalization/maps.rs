//! Leading-term maps from Puiseux series into tropical systems, and a sampled morphism check.

use std::fmt::Write;

use num_traits::Signed;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::core::{Element, EltVal, LayerVal, SuperVal, SystemHandle, Val};
use crate::error::{Error, Result};
use crate::instances::{
    make_elt, make_layered, make_layered_strict, make_maxplus, make_supertropical, make_symmetrized, LayerSemiring,
};
use crate::rational::{qf, Q};
use crate::tropicalization::series::{series_add, series_mul, series_negate, PuiseuxSeries};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TropTarget {
    MaxPlus,
    Supertropical,
    Layered,
    Elt,
    SignSymmetrized,
}

impl TropTarget {
    pub const ALL: [TropTarget; 5] = [
        TropTarget::MaxPlus,
        TropTarget::Supertropical,
        TropTarget::Layered,
        TropTarget::Elt,
        TropTarget::SignSymmetrized,
    ];

    pub fn parse(s: &str) -> Result<Self> {
        Ok(match s {
            "maxplus" | "max-plus" => TropTarget::MaxPlus,
            "supertropical" => TropTarget::Supertropical,
            "layered" => TropTarget::Layered,
            "elt" => TropTarget::Elt,
            "sign_symmetrized" | "symmetrized" => TropTarget::SignSymmetrized,
            other => return Err(Error::Unsupported(format!("tropicalization target '{other}'"))),
        })
    }

    pub fn id(self) -> &'static str {
        match self {
            TropTarget::MaxPlus => "maxplus",
            TropTarget::Supertropical => "supertropical",
            TropTarget::Layered => "layered",
            TropTarget::Elt => "elt",
            TropTarget::SignSymmetrized => "sign_symmetrized",
        }
    }

    /// The system the map lands in. The layered map uses the layer-increasing relation.
    pub fn system(self) -> SystemHandle {
        match self {
            TropTarget::MaxPlus => make_maxplus(),
            TropTarget::Supertropical => make_supertropical(),
            TropTarget::Layered => make_layered_strict(),
            TropTarget::Elt => make_elt(),
            TropTarget::SignSymmetrized => make_symmetrized(&make_maxplus()).expect("max-plus has a zero"),
        }
    }
}

fn mp(x: Option<Q>) -> Val {
    Val::MaxPlus(x)
}

/// Image value of `f`, independent of any particular handle.
pub fn tropicalize_val(f: &PuiseuxSeries, target: TropTarget) -> Val {
    let lead = f.leading().ok();
    match (target, lead) {
        (TropTarget::MaxPlus, None) => mp(None),
        (TropTarget::MaxPlus, Some((e, _))) => mp(Some(-e)),
        (TropTarget::Supertropical, None) => Val::Super(SuperVal::Zero),
        (TropTarget::Supertropical, Some((e, _))) => Val::Super(SuperVal::Tan(-e)),
        (TropTarget::Layered, None) => Val::Layer(LayerVal::Zero),
        (TropTarget::Layered, Some((e, _))) => Val::Layer(LayerVal::At(1, -e)),
        (TropTarget::Elt, None) => Val::Elt(EltVal::Zero),
        (TropTarget::Elt, Some((e, c))) => Val::Elt(EltVal::At(c, -e)),
        (TropTarget::SignSymmetrized, None) => Val::Sym(Box::new(mp(None)), Box::new(mp(None))),
        (TropTarget::SignSymmetrized, Some((e, c))) => {
            if c.is_positive() {
                Val::Sym(Box::new(mp(Some(-e))), Box::new(mp(None)))
            } else {
                Val::Sym(Box::new(mp(None)), Box::new(mp(Some(-e))))
            }
        }
    }
}

/// Image of `f` as an element of `sys`, which must be the target's system.
pub fn tropicalize(sys: &SystemHandle, f: &PuiseuxSeries, target: TropTarget) -> Element {
    sys.elem(tropicalize_val(f, target))
}

fn random_series(rng: &mut ChaCha8Rng) -> PuiseuxSeries {
    let n = rng.gen_range(1..=3);
    let raw = (0..n)
        .map(|_| {
            let den = rng.gen_range(1..=3);
            let exp = qf(rng.gen_range(-6..=6), den);
            let mut c = qf(rng.gen_range(1..=4), rng.gen_range(1..=2));
            if rng.gen_bool(0.5) {
                c = -c;
            }
            (exp, c)
        })
        .collect();
    PuiseuxSeries::from_terms(raw)
}

/// A pair of series, biased so that leading terms often tie or cancel.
fn random_pair(rng: &mut ChaCha8Rng) -> (PuiseuxSeries, PuiseuxSeries) {
    let f = random_series(rng);
    let tail = random_series(rng);
    let g = match rng.gen_range(0..6) {
        0 => series_negate(&f),
        1 if !f.is_zero() => {
            let (e, c) = f.leading().expect("nonzero");
            let shifted: Vec<(Q, Q)> =
                tail.terms().iter().map(|(te, tc)| (te.abs() + &e + qf(1, 2), tc.clone())).collect();
            series_add(&PuiseuxSeries::monomial(-c, e), &PuiseuxSeries::from_terms(shifted))
        }
        2 if !f.is_zero() => {
            let (e, _) = f.leading().expect("nonzero");
            let c = qf(rng.gen_range(1..=3), 1);
            series_add(&PuiseuxSeries::monomial(c, e), &tail)
        }
        3 => PuiseuxSeries::zero(),
        _ => tail,
    };
    (f, g)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub check: &'static str,
    pub f: String,
    pub g: String,
}

#[derive(Clone, Debug)]
pub struct MorphismReport {
    pub target: TropTarget,
    pub samples: usize,
    pub seed: u64,
    /// (check id, count) in fixed order.
    pub counts: Vec<(&'static str, usize)>,
    pub violations: Vec<Violation>,
    /// Layered target only: sum-condition failures if the ordinary ⪯₀ relation were used instead.
    pub circ_sum_failures: Option<usize>,
}

impl MorphismReport {
    pub fn total(&self) -> usize {
        self.counts.iter().map(|(_, n)| n).sum()
    }

    pub fn render(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "target={}", self.target.id());
        let _ = writeln!(s, "samples={}", self.samples);
        let _ = writeln!(s, "seed={}", self.seed);
        for (k, n) in &self.counts {
            let _ = writeln!(s, "{k}={n}");
        }
        let _ = writeln!(s, "violations={}", self.total());
        if let Some(c) = self.circ_sum_failures {
            let _ = writeln!(s, "info.circ_sum_failures={c}");
        }
        for v in self.violations.iter().take(5) {
            let _ = writeln!(s, "witness.{}=f:{} g:{}", v.check, v.f, v.g);
        }
        s
    }
}

const CHECKS: [&str; 6] = ["tangible", "zero", "sum", "product", "negation", "dominance"];

/// Sample pairs of series and test that the map is a ⪯-morphism and a valuation.
pub fn check_morphism(target: TropTarget, samples: usize, seed: u64) -> Result<MorphismReport> {
    let sys = target.system();
    let circ_sys = (target == TropTarget::Layered).then(|| make_layered(LayerSemiring::N));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut counts: Vec<(&'static str, usize)> = CHECKS.iter().map(|c| (*c, 0)).collect();
    let mut violations = Vec::new();
    let mut circ_fail = 0usize;
    let v = |f: &PuiseuxSeries| tropicalize(&sys, f, target);

    if v(&PuiseuxSeries::zero()) != sys.require_zero()? {
        counts[1].1 += 1;
        violations.push(Violation { check: "zero", f: "0".into(), g: "0".into() });
    }

    for _ in 0..samples {
        let (f, g) = random_pair(&mut rng);
        let (vf, vg) = (v(&f), v(&g));
        let mut fails: Vec<usize> = Vec::new();

        for (s, vs) in [(&f, &vf), (&g, &vg)] {
            if !s.is_zero() && !sys.is_tangible(vs)? {
                fails.push(0);
            }
        }
        let sum = series_add(&f, &g);
        let vsum = v(&sum);
        let rhs = sys.add(&vf, &vg)?;
        if !sys.surpasses(&rhs, &vsum)? {
            fails.push(2);
        }
        if let Some(cs) = &circ_sys {
            let conv = |e: &Element| cs.elem(e.val.clone());
            if !cs.surpasses(&conv(&rhs), &conv(&vsum))? {
                circ_fail += 1;
            }
        }
        if v(&series_mul(&f, &g)) != sys.mul(&vf, &vg)? {
            fails.push(3);
        }
        if v(&series_negate(&f)) != sys.negate(&vf)? {
            fails.push(4);
        }
        let dominant = match (f.magnitude().ok(), g.magnitude().ok()) {
            (Some(a), Some(b)) => a > b,
            (Some(_), None) => true,
            _ => false,
        };
        if dominant && vsum != vf {
            fails.push(5);
        }
        fails.dedup();
        for i in fails {
            counts[i].1 += 1;
            if violations.len() < 20 {
                violations.push(Violation { check: CHECKS[i], f: f.to_string(), g: g.to_string() });
            }
        }
    }
    Ok(MorphismReport { target, samples, seed, counts, violations, circ_sum_failures: circ_sys.map(|_| circ_fail) })
}
