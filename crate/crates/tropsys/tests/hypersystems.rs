use tropsys::core::axioms::verify_system;
use tropsys::hypersystems::*;
use tropsys::Height;

#[test]
fn powersets_have_expected_sizes() {
    assert_eq!(powerset_system(&krasner()).unwrap().elements().unwrap().len(), 3);
    assert_eq!(powerset_system(&sign_hyperfield()).unwrap().elements().unwrap().len(), 4);
    assert_eq!(powerset_system(&tropical_chain(2)).unwrap().elements().unwrap().len(), 5);
}

#[test]
fn sign_hyperfield_sum_of_opposites_is_everything() {
    let s = powerset_system(&sign_hyperfield()).unwrap();
    let a = s.parse("1").unwrap();
    let b = s.parse("-1").unwrap();
    assert_eq!(s.format(&s.add(&a, &b).unwrap()), "{0,1,-1}");
}

#[test]
fn phase_examples() {
    let p = make_phase();
    let x = p.parse("point(0)").unwrap();
    let y = p.parse("point(1/2)").unwrap();
    assert_eq!(p.format(&p.add(&x, &y).unwrap()), "antipodal_triple(0)");
    let t0 = p.parse("antipodal_triple(0)").unwrap();
    let t1 = p.parse("antipodal_triple(1/4)").unwrap();
    assert_eq!(p.format(&p.add(&t0, &t1).unwrap()), "full_circle");
    let q = p.parse("point(1/4)").unwrap();
    let arc = p.add(&x, &q).unwrap();
    assert_eq!(p.format(&arc), "arc(0,1/4)");
    assert_eq!(p.height(&arc).unwrap(), Height::Exact(2));
    let semi = p.add(&t0, &q).unwrap();
    assert_eq!(p.format(&semi), "semicircle(0,1/2)");
    assert_eq!(p.height(&semi).unwrap(), Height::Exact(3));
    assert_eq!(p.height(&p.parse("full_circle").unwrap()).unwrap(), Height::Exact(3));
}

#[test]
fn phase_probe_is_a_system() {
    let p = make_phase();
    verify_system(&p, &p.probe()).unwrap();
}

#[test]
fn triangle_probe_is_a_system() {
    let t = make_triangle();
    verify_system(&t, &t.probe()).unwrap();
}

#[test]
fn triangle_sum_example() {
    let t = make_triangle();
    let a = t.parse("[1,2]").unwrap();
    let b = t.parse("[5,6]").unwrap();
    assert_eq!(t.format(&t.add(&a, &b).unwrap()), "[3,8]");
}

#[test]
fn triangle_pointwise_product_is_not_distributive() {
    let t = make_triangle();
    let rep = check_distributivity(&t, DistMode::Full).unwrap();
    assert!(!rep.holds);
    let (a, b, c) = (t.parse("1").unwrap(), t.parse("2").unwrap(), t.parse("[1,2]").unwrap());
    let lhs = t.mul(&t.add(&a, &b).unwrap(), &c).unwrap();
    let rhs = t.add(&t.mul(&a, &c).unwrap(), &t.mul(&b, &c).unwrap()).unwrap();
    assert_eq!(t.format(&lhs), "[1,6]");
    assert_eq!(t.format(&rhs), "[0,6]");
    assert!(check_distributivity(&t, DistMode::WeakT).unwrap().holds);
}

#[test]
fn generated_product_restores_distributivity() {
    for s in [make_triangle(), make_phase_with(ProductMode::Pointwise)] {
        let g = generated_product(&s);
        let rep = check_distributivity(&g, DistMode::Full).unwrap();
        assert!(
            rep.holds,
            "{}: {:?}",
            g.name(),
            rep.witness.map(|w| w.iter().map(|e| g.format(e)).collect::<Vec<_>>())
        );
    }
}

#[test]
fn generated_product_keeps_distributive_products() {
    let s = powerset_system(&sign_hyperfield()).unwrap();
    let g = generated_product(&s);
    let (es, eg) = (s.elements().unwrap(), g.elements().unwrap());
    for (i, a) in es.iter().enumerate() {
        for (j, b) in es.iter().enumerate() {
            assert_eq!(s.mul(a, b).unwrap().val, g.mul(&eg[i], &eg[j]).unwrap().val);
        }
    }
}

#[test]
fn pointwise_phase_product_can_be_undefined() {
    let p = make_phase_with(ProductMode::Pointwise);
    let a = p.parse("arc(0,3/8)").unwrap();
    assert!(p.mul(&a, &a).is_err());
}
