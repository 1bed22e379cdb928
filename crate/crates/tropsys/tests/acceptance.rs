//! Acceptance gate: one PASS/FAIL line per criterion; exits nonzero if any fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tropsys::analysis::*;
use tropsys::core::axioms::verify_system;
use tropsys::hypersystems::*;
use tropsys::instances::*;
use tropsys::matrices::*;
use tropsys::registry::{builtin, bundled};
use tropsys::transfer::{reverify, symbolic_det_identity, DetIdentity};
use tropsys::tropicalization::{check_morphism, TropTarget};
use tropsys::{Element, Height, SystemHandle};

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn e<T, E: std::fmt::Display>(r: Result<T, E>) -> Result<T, String> {
    r.map_err(|x| x.to_string())
}

fn within(start: Instant, limit: Duration, what: &str) -> Result<Duration, String> {
    let took = start.elapsed();
    ensure!(took < limit, "{what} took {took:.1?}, limit {limit:?}");
    Ok(took)
}

fn instance_axioms() -> Outcome {
    let start = Instant::now();
    let systems = e(bundled())?;
    let mut total = 0;
    for (id, s) in &systems {
        let elems = s.elements().unwrap_or_else(|| s.probe());
        total += elems.len();
        e(verify_system(s, &elems)).map_err(|m| format!("{id}: {m}"))?;
    }
    let took = within(start, Duration::from_secs(10), "axiom checks")?;
    Ok(format!("{} systems, {total} elements, {took:.2?}", systems.len()))
}

fn classification() -> Outcome {
    let get = |id: &str| -> Result<(SystemHandle, ClassificationReport), String> {
        let s = e(builtin(id))?;
        let r = e(classify(&s))?;
        Ok((s, r))
    };
    let (_, sign) = get("sign")?;
    ensure!(
        sign.kind == Kind::Second
            && sign.characteristic == 1
            && sign.height == Height::Exact(2)
            && sign.neg_bipotent.is_true(),
        "sign: {:?} char {} height {}",
        sign.kind,
        sign.characteristic,
        sign.height
    );
    let (k, kr) = get("krasner")?;
    ensure!(kr.kind == Kind::First && kr.height == Height::Exact(2), "krasner: {:?} {}", kr.kind, kr.height);
    ensure!(e(isomorphic(&k, &e(make_boolean_supertropical())?))?, "krasner not isomorphic to boolean supertropical");
    let (_, ph) = get("phase")?;
    ensure!(
        ph.height == Height::Exact(3)
            && ph.kind == Kind::Second
            && !ph.meta_tangible.is_true()
            && ph.t_strongly_negated.is_true()
            && ph.t_reversible.is_true(),
        "phase: {:?} {} meta={} sn={} rev={}",
        ph.kind,
        ph.height,
        ph.meta_tangible.render(),
        ph.t_strongly_negated.render(),
        ph.t_reversible.render()
    );
    let (_, tr) = get("triangle")?;
    ensure!(
        tr.height == Height::Exact(2) && tr.kind == Kind::First && !tr.meta_tangible.is_true(),
        "triangle: {:?} {}",
        tr.kind,
        tr.height
    );
    let (_, z3) = get("zn-3")?;
    ensure!(z3.characteristic == 3, "zn-3 characteristic {}", z3.characteristic);
    let (_, t9) = get("truncated-9")?;
    ensure!(
        t9.characteristic == 0 && t9.height == Height::Exact(9),
        "truncated-9: char {} height {}",
        t9.characteristic,
        t9.height
    );
    Ok("sign, krasner, phase, triangle, zn-3, truncated-9 match".into())
}

fn counterexamples() -> Outcome {
    let s = e(builtin("truncated-5x2"))?;
    let res = e(run_theorems(&s, &["reversibility"]))?;
    let Verdict::Fail { witness, .. } = &res[0].verdict else {
        return Err(format!("reversibility on truncated-5x2: {}", res[0].render(&s)));
    };
    let w = |k: &str| witness.get(k).cloned().ok_or(format!("witness lacks {k}"));
    let (a, b, c) = (w("a")?, w("b")?, w("c")?);
    let tangible = |x: &Element| e(s.is_tangible(x));
    ensure!(tangible(&a)? && tangible(&b)?, "a, b must be tangible");
    ensure!(e(s.surpasses(&e(s.add(&b, &c))?, &a))?, "a ⪯ b + c does not hold");
    ensure!(!e(s.surpasses(&e(s.sub(&a, &c))?, &b))?, "b ⪯ a (-) c holds, so no failure");
    ensure!(e(s.times(4, &b))? == c && e(s.add(&a, &c))? == c, "witness is not of the excepted parity shape");
    let t5 = witness.render(&s);

    let s9 = e(builtin("truncated-9"))?;
    let flag = e(classify(&s9))?.t_strongly_negated;
    ensure!(flag.holds == Some(false), "truncated-9 reported strongly negated");
    let w9 = flag.witness.ok_or("no witness for truncated-9")?;
    let (c9, d9) = (w9.get("c").ok_or("no c")?, w9.get("d").ok_or("no d")?);
    ensure!(e(s9.surpasses_zero(&e(s9.add(c9, d9))?))?, "c + d is not ⪰ 0");
    ensure!(!e(s9.surpasses(d9, &e(s9.negate(c9))?))?, "d ⪰ (-)c holds");
    Ok(format!("truncated-5x2 reversibility: {t5}; truncated-9 strong negation: {}", w9.render(&s9)))
}

const CORE: [&str; 7] = [
    "bipotent-dichotomy",
    "uniform-presentation",
    "presentation-uniqueness",
    "distributivity",
    "circ-surpassing",
    "fuzzy-property",
    "height-two-equivalence",
];

fn theorem_suites() -> Outcome {
    let mut systems = 0;
    let mut passes = [0usize; CORE.len()];
    for (id, s) in e(bundled())? {
        if !s.enumerable() || !e(classify(&s))?.meta_tangible.is_true() {
            continue;
        }
        systems += 1;
        for r in e(run_theorems(&s, &CORE))? {
            ensure!(!r.verdict.is_fail(), "{id}: {}", r.render(&s));
            if r.verdict.is_pass() {
                passes[CORE.iter().position(|c| *c == r.id).unwrap()] += 1;
            }
        }
    }
    for (id, n) in CORE.iter().zip(passes) {
        ensure!(n > 0, "{id} never applied");
    }
    Ok(format!("{systems} meta-tangible systems, 0 violations, applicable runs per check {passes:?}"))
}

/// Integer determinant by cofactor expansion.
fn int_det(m: &[Vec<i64>]) -> i64 {
    let n = m.len();
    if n == 1 {
        return m[0][0];
    }
    (0..n)
        .map(|j| {
            let minor: Vec<Vec<i64>> = m[1..]
                .iter()
                .map(|r| r.iter().enumerate().filter(|(k, _)| *k != j).map(|(_, x)| *x).collect())
                .collect();
            let sign = if j % 2 == 0 { 1 } else { -1 };
            sign * m[0][j] * int_det(&minor)
        })
        .sum()
}

fn matrix_theorems() -> Outcome {
    let start = Instant::now();
    let mut notes = Vec::new();
    let sign = e(make_sign_system())?;
    let sup = make_supertropical();
    let lits = |s: &SystemHandle, xs: &[&str]| xs.iter().map(|x| e(s.parse(x))).collect::<Result<Vec<_>, _>>();
    let cases = [(&sign, lits(&sign, &["0", "1", "-1"])?), (&sup, lits(&sup, &["-inf", "0", "1", "2"])?)];
    let mut det_evals = 0;
    for (s, entries) in &cases {
        let ms = e(enumerate_matrices(s, 2, entries))?;
        let rep = e(check_det_identities(s, &ms))?;
        ensure!(rep.ok(), "{}: {:?}", s.name(), rep.first_failure);
        det_evals += rep.pairs * 4;
        let pool = e(resolve_pool(s, entries, &Pool::Differences { cap: usize::MAX }))?;
        let dep = e(check_dependence_vs_det(s, &ms, &pool))?;
        ensure!(dep.violations == 0, "{} 2x2 dependence: {:?}", s.name(), dep.first_violation);
        notes.push(format!("{}: {} pairs, {} dependent", s.name(), rep.pairs, dep.dependent));
    }
    ensure!(det_evals <= 1_000_000, "{det_evals} determinant evaluations");

    let mut rng = ChaCha8Rng::seed_from_u64(94);
    for (s, entries) in &cases {
        let mut dependent = 0;
        for _ in 0..1000 {
            let cells = (0..9).map(|_| entries[rng.gen_range(0..entries.len())].clone()).collect();
            let m = e(Matrix::new(s, 3, 3, cells))?;
            let pool = e(resolve_pool(s, &m.entries, &Pool::Differences { cap: usize::MAX }))?;
            let rep = e(check_dependence_vs_det(s, std::slice::from_ref(&m), &pool))?;
            ensure!(rep.violations == 0, "{} 3x3 dependence: {:?}", s.name(), rep.first_violation);
            dependent += rep.dependent;
        }
        notes.push(format!("{} 3x3: 1000 sampled, {dependent} dependent", s.name()));
    }

    let pm = lits(&sign, &["1", "-1"])?;
    let mut zero_det = 0;
    for code in 0u32..512 {
        let ints: Vec<Vec<i64>> =
            (0..3).map(|i| (0..3).map(|j| if code >> (3 * i + j) & 1 == 1 { -1 } else { 1 }).collect()).collect();
        if int_det(&ints) != 0 {
            continue;
        }
        zero_det += 1;
        let cells = ints.iter().flatten().map(|&x| pm[usize::from(x < 0)].clone()).collect();
        let m = e(Matrix::new(&sign, 3, 3, cells))?;
        let d = e(det(&m))?;
        ensure!(e(sign.surpasses_zero(&d))?, "±1 matrix {ints:?} has sign determinant {}", sign.format(&d));
    }
    ensure!(zero_det > 0, "no singular ±1 matrices found");
    notes.push(format!("{zero_det} singular ±1 3x3 matrices"));
    let took = within(start, Duration::from_secs(60), "matrix checks")?;
    Ok(format!("{}; about {det_evals} determinants (4 per pair), {took:.1?}", notes.join("; ")))
}

fn transfer() -> Outcome {
    let mut notes = Vec::new();
    for (id, n) in [
        (DetIdentity::DetMult, 2),
        (DetIdentity::DetMult, 3),
        (DetIdentity::AdjMult, 2),
        (DetIdentity::LaplaceAdj, 2),
        (DetIdentity::LaplaceAdj, 3),
    ] {
        let start = Instant::now();
        let certs = e(symbolic_det_identity(n, id))?;
        for c in &certs {
            let cert = c.outcome.as_ref().map_err(|r| format!("{id:?} n={n} refused: {r:?}"))?;
            ensure!(e(reverify(&c.p, &c.q, cert))?, "{id:?} n={n}: re-verification failed");
        }
        if (id, n) == (DetIdentity::DetMult, 3) {
            within(start, Duration::from_secs(30), "det_mult n=3")?;
        }
        notes.push(format!("{id:?}/{n} {:.2?}", start.elapsed()));
    }
    Ok(notes.join(", "))
}

fn tropicalization() -> Outcome {
    let mut notes = Vec::new();
    for t in TropTarget::ALL {
        let a = e(check_morphism(t, 1000, 2024))?;
        let b = e(check_morphism(t, 1000, 2024))?;
        ensure!(a.total() == 0, "{}: {}", t.id(), a.render());
        ensure!(a.render() == b.render(), "{}: reports differ between runs", t.id());
        notes.push(t.id());
    }
    Ok(format!("1000 samples each for {}; 0 violations, reports identical", notes.join(", ")))
}

fn same_negation(s: &SystemHandle, back: &SystemHandle) -> Result<bool, String> {
    for t in s.tangibles().ok_or("not enumerable")? {
        if e(back.negate(&back.elem(t.val.clone())))?.val != e(s.negate(&t))?.val {
            return Ok(false);
        }
    }
    Ok(true)
}

fn round_trips() -> Outcome {
    let sign = e(make_sign_system())?;
    ensure!(e(isomorphic(&e(powerset_system(&e(system_to_hypergroup(&sign))?))?, &sign))?, "sign round trip");
    for k in 1..=4 {
        let chain = e(powerset_system(&tropical_chain(k)))?;
        let back = e(powerset_system(&e(system_to_hypergroup(&chain))?))?;
        ensure!(e(isomorphic(&back, &chain))?, "tropical chain {k} round trip");
    }
    let mut fuzzy = Vec::new();
    for (id, s) in e(bundled())? {
        let Ok(d) = to_fuzzy(&s) else { continue };
        let back = e(from_fuzzy(&d, &s))?;
        ensure!(same_negation(&s, &back)?, "{id}: negation not recovered");
        fuzzy.push(id);
    }
    ensure!(fuzzy.len() >= 3, "only {} cancelative instances", fuzzy.len());
    Ok(format!("hypergroup: sign, tropical chains 1..4; fuzzy: {}", fuzzy.join(", ")))
}

fn distributivity() -> Outcome {
    let t = make_triangle();
    let full = e(check_distributivity(&t, DistMode::Full))?;
    ensure!(!full.holds, "pointwise triangle product reported distributive");
    let w = full.witness.ok_or("no counterexample")?;
    let (a, b, c) = (&w[0], &w[1], &w[2]);
    let lhs = e(t.mul(a, &e(t.add(b, c))?))?;
    let rhs = e(t.add(&e(t.mul(a, b))?, &e(t.mul(a, c))?))?;
    ensure!(lhs != rhs, "counterexample does not re-evaluate");
    let fmt = |x: &Element| t.format(x);
    ensure!(e(check_distributivity(&t, DistMode::WeakT))?.holds, "weak-T distributivity fails");
    let fixed = e(check_distributivity(&generated_product(&t), DistMode::Full))?;
    ensure!(fixed.holds, "generated product not distributive: {:?}", fixed.witness);
    Ok(format!(
        "pointwise fails at a={} b={} c={} ({} vs {}); weak-T holds; generated product holds on {} triples",
        fmt(a),
        fmt(b),
        fmt(c),
        fmt(&lhs),
        fmt(&rhs),
        fixed.checked
    ))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("instance axioms", instance_axioms),
        ("classification ground truth", classification),
        ("counterexample reproduction", counterexamples),
        ("theorem suites", theorem_suites),
        ("matrix theorems", matrix_theorems),
        ("transfer certificates", transfer),
        ("tropicalization morphisms", tropicalization),
        ("round trips", round_trips),
        ("hypersystem distributivity", distributivity),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let out = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            Err(p
                .downcast_ref::<String>()
                .cloned()
                .or(p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default())
        });
        match out {
            Ok(detail) => println!("PASS {} {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {} {name}: {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
