use proptest::prelude::*;
use tropsys::analysis::*;
use tropsys::core::{Height, SystemHandle};
use tropsys::hypersystems::*;
use tropsys::instances::*;

fn report(s: &SystemHandle) -> ClassificationReport {
    classify(s).unwrap()
}

fn get(pairs: &[(String, String)], k: &str) -> String {
    pairs.iter().find(|(a, _)| a == k).map(|(_, v)| v.clone()).unwrap_or_else(|| panic!("missing {k}"))
}

#[test]
fn sign_system_ground_truth() {
    let s = make_sign_system().unwrap();
    let r = report(&s);
    assert_eq!(r.kind, Kind::Second);
    assert_eq!(r.characteristic, 1);
    assert_eq!(r.height, Height::Exact(2));
    assert!(r.meta_tangible.is_true() && r.neg_bipotent.is_true() && r.t_reversible.is_true());
    let p = r.pairs(&s);
    assert_eq!(get(&p, "characteristic"), "1");
    assert_eq!(get(&p, "e"), "inf");
}

#[test]
fn boolean_supertropical_and_krasner() {
    let b = make_boolean_supertropical().unwrap();
    let r = report(&b);
    assert_eq!((r.kind, r.height), (Kind::First, Height::Exact(2)));
    assert!(r.meta_tangible.is_true());
    let k = powerset_system(&krasner()).unwrap();
    let rk = report(&k);
    assert_eq!((rk.kind, rk.height), (Kind::First, Height::Exact(2)));
    assert!(isomorphic(&k, &b).unwrap());
    assert!(!isomorphic(&k, &make_sign_system().unwrap()).unwrap());
}

#[test]
fn phase_and_triangle_ground_truth() {
    let p = report(&make_phase());
    assert_eq!((p.kind, p.height), (Kind::Second, Height::Exact(3)));
    assert!(!p.meta_tangible.is_true());
    assert!(p.t_strongly_negated.is_true() && p.t_reversible.is_true() && p.idempotent.is_true());
    let t = report(&make_triangle());
    assert_eq!((t.kind, t.height), (Kind::First, Height::Exact(2)));
    assert!(!t.meta_tangible.is_true());
}

#[test]
fn layered_ground_truth() {
    assert_eq!(report(&make_zn_layered(3, 1).unwrap()).characteristic, 3);
    let t9 = report(&make_truncated_layered(9, 1).unwrap());
    assert_eq!((t9.characteristic, t9.height), (0, Height::Exact(9)));
    let g = report(&make_gf4_layered(1).unwrap());
    assert!(g.meta_tangible.is_true() && !g.neg_bipotent.is_true());
    assert_eq!((g.kind, g.characteristic), (Kind::First, 2));
    assert_eq!(g.dichotomy_case, DichotomyCase::UnitFirstKind);
}

#[test]
fn reversibility_fails_on_truncated_five_with_parity_witness() {
    let s = make_truncated_layered(5, 2).unwrap();
    let res = run_theorems(&s, &["reversibility"]).unwrap();
    let Verdict::Fail { witness, .. } = &res[0].verdict else { panic!("{:?}", res[0].verdict) };
    let (a, b, c) = (witness.get("a").unwrap(), witness.get("b").unwrap(), witness.get("c").unwrap());
    assert_eq!([a, b, c].map(|x| s.format(x)), ["(1,1)", "(1,2)", "(4,2)"]);
    // a ⪯ b + c but b ⋠ a (−) c, recomputed from the tables.
    assert!(s.surpasses(&s.add(b, c).unwrap(), a).unwrap());
    assert!(!s.surpasses(&s.sub(a, c).unwrap(), b).unwrap());
    assert_eq!(&s.times(4, b).unwrap(), c);
    assert_eq!(&s.add(a, c).unwrap(), c);
}

#[test]
fn strong_negation_fails_on_truncated_nine() {
    let s = make_truncated_layered(9, 1).unwrap();
    let r = report(&s);
    let w = r.t_strongly_negated.witness.clone().unwrap();
    let (c, d) = (w.get("c").unwrap(), w.get("d").unwrap());
    assert_eq!((s.format(c).as_str(), s.format(d).as_str()), ("(1,1)", "(8,1)"));
    assert!(s.surpasses_zero(&s.add(c, d).unwrap()).unwrap());
    assert!(!s.surpasses(d, &s.negate(c).unwrap()).unwrap());
}

fn meta_instances() -> Vec<SystemHandle> {
    vec![
        make_boolean_supertropical().unwrap(),
        make_supertropical_chain(2).unwrap(),
        make_supertropical_chain(3).unwrap(),
        make_supertropical_chain(4).unwrap(),
        make_sign_system().unwrap(),
        powerset_system(&krasner()).unwrap(),
        powerset_system(&sign_hyperfield()).unwrap(),
        powerset_system(&tropical_chain(3)).unwrap(),
        make_zn_layered(2, 1).unwrap(),
        make_zn_layered(3, 1).unwrap(),
        make_zn_layered(3, 2).unwrap(),
        make_truncated_layered(2, 1).unwrap(),
        make_truncated_layered(9, 1).unwrap(),
        make_gf4_layered(1).unwrap(),
        make_gf4_layered(2).unwrap(),
    ]
}

#[test]
fn theorem_suite_passes_where_hypotheses_hold() {
    let core = [
        "bipotent-dichotomy",
        "uniform-presentation",
        "presentation-uniqueness",
        "distributivity",
        "circ-surpassing",
        "fuzzy-property",
        "height-two-equivalence",
    ];
    let mut passes = 0;
    for s in meta_instances() {
        for r in run_theorems(&s, &[]).unwrap() {
            assert!(!r.verdict.is_fail(), "{} on {}", r.render(&s), s.name());
            if core.contains(&r.id) && r.verdict.is_pass() {
                passes += 1;
            }
        }
    }
    assert!(passes >= 40, "only {passes} applicable core checks");
}

#[test]
fn unknown_theorem_id_is_rejected() {
    assert!(run_theorems(&make_sign_system().unwrap(), &["7.44"]).is_err());
}

#[test]
fn hypergroup_from_chain_matches_tropical_hyperfield() {
    let s = make_supertropical_chain(3).unwrap();
    let h = system_to_hypergroup(&s).unwrap();
    let t2 = h.carrier.iter().position(|c| c == "t2").unwrap();
    assert_eq!(h.fmt_set(h.add[t2][t2]), "{0,t1,t2}");
    let sign = system_to_hypergroup(&make_sign_system().unwrap()).unwrap();
    let one = sign.carrier.iter().position(|c| c == "1").unwrap();
    assert_eq!(sign.add[one][sign.neg[one]].count_ones(), 3);
}

#[test]
fn round_trips_through_hypergroups() {
    let sign = make_sign_system().unwrap();
    let back = powerset_system(&system_to_hypergroup(&sign).unwrap()).unwrap();
    assert!(isomorphic(&back, &sign).unwrap());
    for k in 1..=3 {
        let chain = powerset_system(&tropical_chain(k)).unwrap();
        let again = powerset_system(&system_to_hypergroup(&chain).unwrap()).unwrap();
        assert!(isomorphic(&again, &chain).unwrap(), "k={k}");
    }
}

#[test]
fn non_meta_tangible_input_is_refused() {
    assert!(system_to_hypergroup(&make_zn_layered(4, 1).unwrap()).is_err());
}

#[test]
fn fuzzy_data_of_the_sign_system() {
    let s = make_sign_system().unwrap();
    let d = to_fuzzy(&s).unwrap();
    assert_eq!(s.format(&d.epsilon), "-1");
    let ideal: Vec<String> = d.ideal.iter().map(|x| s.format(x)).collect();
    assert_eq!(ideal, ["0", "inf"]);
    let back = from_fuzzy(&d, &s).unwrap();
    for t in s.tangibles().unwrap() {
        assert_eq!(back.negate(&back.elem(t.val.clone())).unwrap().val, s.negate(&t).unwrap().val);
    }
    let bad = FuzzyData { epsilon: s.parse("inf").unwrap(), ideal: d.ideal.clone() };
    assert!(verify_fuzzy(&s, &bad).is_err());
}

#[test]
fn property_p_holds_on_finite_hyperfields_only() {
    for h in [krasner(), sign_hyperfield(), tropical_chain(3)] {
        assert!(h.property_p().is_ok());
        assert!(property_p(&powerset_system(&h).unwrap()).unwrap().is_none());
    }
    assert!(property_p(&make_phase()).unwrap().is_some());
    let t = make_triangle();
    let w = property_p(&t).unwrap().unwrap();
    let (a, b) = (w.get("a").unwrap(), w.get("b").unwrap());
    assert!(!t.surpasses(&t.add(a, b).unwrap(), a).unwrap());
}

#[test]
fn machine_rendering_is_stable() {
    let s = make_sign_system().unwrap();
    assert_eq!(report(&s).pairs(&s), report(&s).pairs(&s));
}

fn family() -> impl Strategy<Value = SystemHandle> {
    prop_oneof![
        (1usize..5).prop_map(|k| make_supertropical_chain(k).unwrap()),
        (2usize..6, 1usize..3).prop_map(|(n, g)| make_zn_layered(n, g).unwrap()),
        (2usize..8, 1usize..3).prop_map(|(n, g)| make_truncated_layered(n, g).unwrap()),
        (1usize..3).prop_map(|g| make_gf4_layered(g).unwrap()),
        (1usize..4).prop_map(|k| powerset_system(&tropical_chain(k)).unwrap()),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]
    #[test]
    fn classification_flags_are_consistent(s in family()) {
        let r = report(&s);
        if r.neg_bipotent.is_true() && s.level() == tropsys::TripleLevel::Triple {
            prop_assert!(r.meta_tangible.is_true());
        }
        if r.t_strongly_negated.is_true() {
            prop_assert!(r.t_reversible.is_true());
        }
        if r.meta_tangible.is_true() && s.one().is_some() {
            prop_assert_ne!(r.dichotomy_case, DichotomyCase::Unmatched);
        }
        for res in run_theorems(&s, &["height-two-equivalence", "e-prime-trichotomy", "circ-congruence"]).unwrap() {
            prop_assert!(!res.verdict.is_fail(), "{}", res.render(&s));
        }
    }
}
