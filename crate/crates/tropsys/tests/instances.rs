use tropsys::core::axioms::verify_system;
use tropsys::instances::*;
use tropsys::{Height, SystemHandle, TripleLevel};

fn loads(h: tropsys::Result<SystemHandle>) -> SystemHandle {
    match h {
        Ok(h) => h,
        Err(e) => panic!("load failed: {e}"),
    }
}

#[test]
fn finite_builders_load() {
    loads(make_boolean());
    loads(make_boolean_supertropical());
    loads(make_sign_system());
    for k in 1..=4 {
        loads(make_supertropical_chain(k));
    }
    for n in [2, 5, 9] {
        for g in [1, 2] {
            loads(make_truncated_layered(n, g));
        }
    }
    for n in 1..=4 {
        loads(make_zn_layered(n, 1));
        if n > 1 {
            loads(make_zn_layered(n, 2));
        }
    }
    loads(make_gf4_layered(1));
    loads(make_gf4_layered(2));
}

#[test]
fn parametric_probes_satisfy_axioms() {
    let maxplus = make_maxplus();
    let systems = vec![
        make_supertropical(),
        make_elt(),
        make_layered(LayerSemiring::N),
        make_layered(LayerSemiring::Z),
        make_layered(LayerSemiring::Zn(3)),
        make_layered(LayerSemiring::Truncated(5)),
        make_layered_strict(),
        make_symmetrized(&maxplus).unwrap(),
        make_classical(),
    ];
    for s in systems {
        if let Err(e) = verify_system(&s, &s.probe()) {
            panic!("{}: {e}", s.name());
        }
    }
}

#[test]
fn boolean_is_only_pseudo() {
    let mut t = boolean_table();
    assert_eq!(t.level, TripleLevel::Pseudo);
    t.level = TripleLevel::Triple;
    let err = load_finite_system(t).unwrap_err();
    assert!(err.is_axiom());
}

#[test]
fn heights_match_layer_counts() {
    let s = make_truncated_layered(5, 1).unwrap();
    for (i, e) in s.elements().unwrap().iter().enumerate() {
        assert_eq!(s.height(e).unwrap(), Height::Exact(i as u32 + 1));
    }
}
