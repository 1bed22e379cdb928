use std::collections::BTreeMap;

use proptest::prelude::*;
use tropsys::transfer::*;

fn eval_classical(p: &SymPoly, x: &[i128]) -> i128 {
    p.classicalize().iter().map(|(m, c)| c * m.iter().enumerate().map(|(i, &k)| x[i].pow(k)).product::<i128>()).sum()
}

fn int_det(m: &[Vec<i128>]) -> i128 {
    let n = m.len();
    if n == 1 {
        return m[0][0];
    }
    (0..n)
        .map(|j| {
            let minor: Vec<Vec<i128>> = m[1..]
                .iter()
                .map(|r| r.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, v)| *v).collect())
                .collect();
            let s = if j % 2 == 0 { 1 } else { -1 };
            s * m[0][j] * int_det(&minor)
        })
        .sum()
}

#[test]
fn determinant_identities_certify_for_small_n() {
    for n in 2..=3 {
        for id in [DetIdentity::DetMult, DetIdentity::AdjMult, DetIdentity::LaplaceAdj] {
            let certs = symbolic_det_identity(n, id).unwrap();
            for c in &certs {
                let cert = c.outcome.as_ref().unwrap_or_else(|r| panic!("n={n} {id:?} refused at {:?}", r.monomial));
                assert!(reverify(&c.p, &c.q, cert).unwrap());
            }
        }
    }
}

#[test]
fn det_mult_n4_certifies() {
    let certs = symbolic_det_identity(4, DetIdentity::DetMult).unwrap();
    assert!(certs[0].outcome.is_ok());
}

#[test]
fn det_mult_sides_agree_classically_at_integer_points() {
    let n = 3;
    let c = &symbolic_det_identity(n, DetIdentity::DetMult).unwrap()[0];
    let mut state = 7i128;
    for _ in 0..20 {
        let x: Vec<i128> = (0..2 * n * n)
            .map(|_| {
                state = (state * 1103515245 + 12345) % 2147483648;
                state % 7 - 3
            })
            .collect();
        let a: Vec<Vec<i128>> = (0..n).map(|i| x[i * n..i * n + n].to_vec()).collect();
        let b: Vec<Vec<i128>> = (0..n).map(|i| x[n * n + i * n..n * n + i * n + n].to_vec()).collect();
        let expected = int_det(&a) * int_det(&b);
        assert_eq!(eval_classical(&c.q, &x), expected);
        assert_eq!(eval_classical(&c.p, &x), expected);
    }
}

#[test]
fn n2_det_mult_has_exactly_the_two_cross_quasi_zeros() {
    // Expanding (a11b11+a12b21)(a21b12+a22b22) − (a11b12+a12b22)(a21b11+a22b21)
    // by hand: a11a21b11b12 and a12a22b21b22 appear with both signs.
    let c = &symbolic_det_identity(2, DetIdentity::DetMult).unwrap()[0];
    let cert = c.outcome.as_ref().unwrap();
    let extra: Vec<String> = cert.rows.iter().filter(|r| r.k > 0).map(|r| c.p.render_monomial(&r.monomial)).collect();
    assert_eq!(extra, vec!["a12*a22*b21*b22", "a11*a21*b11*b12"]);
    assert!(cert.rows.iter().all(|r| r.k <= 1));
    assert!(!cert.large_coefficients);
}

#[test]
fn refusals_name_the_monomial() {
    let x = SymPoly::var(2, true, 0);
    let y = SymPoly::var(2, true, 1);
    let q = x.add(&y).unwrap();
    let r = transfer_check(&x, &q).unwrap().unwrap_err();
    assert_eq!(r.reason, RefusalReason::ClassicalMismatch);
    assert_eq!(r.monomial, vec![0, 1]);

    // P = x, Q = x + (1,1)x: same classical image but Q is larger.
    let q2 = x.add(&x).unwrap().add(&x.neg()).unwrap();
    let r2 = transfer_check(&x, &q2).unwrap().unwrap_err();
    assert_eq!(r2.reason, RefusalReason::Deficit);
}

#[test]
fn noncommutative_words_keep_order() {
    let x = SymPoly::var(2, false, 0);
    let y = SymPoly::var(2, false, 1);
    let xy = x.mul(&y).unwrap();
    let yx = y.mul(&x).unwrap();
    assert_ne!(xy, yx);
    assert!(transfer_check(&xy, &yx).unwrap().is_err());
}

#[test]
fn overflow_is_reported() {
    let mut p = SymPoly::zero(1, true);
    p.terms.insert(vec![0], (u64::MAX, 0));
    assert!(matches!(p.add(&p), Err(tropsys::Error::Overflow)));
}

fn arb_poly() -> impl Strategy<Value = SymPoly> {
    prop::collection::btree_map(prop::collection::vec(0u32..3, 2), (0u64..4, 0u64..4), 0..5).prop_map(|terms| {
        let mut p = SymPoly::zero(2, true);
        p.terms = terms.into_iter().filter(|(_, c)| *c != (0, 0)).collect();
        p
    })
}

proptest! {
    #[test]
    fn classicalize_is_a_ring_map(p in arb_poly(), q in arb_poly()) {
        let lift = |m: BTreeMap<Vec<u32>, i128>| SymPoly::lift(2, true, &m).unwrap().classicalize();
        let sum = p.add(&q).unwrap().classicalize();
        let mut expect: BTreeMap<Vec<u32>, i128> = p.classicalize();
        for (m, v) in q.classicalize() { *expect.entry(m).or_insert(0) += v; }
        expect.retain(|_, v| *v != 0);
        prop_assert_eq!(&sum, &expect);
        prop_assert_eq!(lift(sum.clone()), sum);
        prop_assert_eq!(p.neg().neg(), p.clone());
        let x = [2i128, -3];
        prop_assert_eq!(eval_classical(&p.mul(&q).unwrap(), &x), eval_classical(&p, &x) * eval_classical(&q, &x));
    }

    #[test]
    fn adding_quasi_zeros_is_certified(q in arb_poly(), ks in prop::collection::btree_map(prop::collection::vec(0u32..3, 2), 1u64..3, 0..4)) {
        let mut p = q.clone();
        for (m, k) in &ks {
            let mut t = SymPoly::zero(2, true);
            t.terms.insert(m.clone(), (*k, *k));
            p = p.add(&t).unwrap();
        }
        let cert = transfer_check(&p, &q).unwrap().unwrap();
        for r in &cert.rows {
            prop_assert_eq!(r.k, ks.get(&r.monomial).copied().unwrap_or(0));
        }
        prop_assert!(reverify(&p, &q, &cert).unwrap());
    }
}

#[test]
fn polynomial_text_parses() {
    let ps = parse_sym_polys(&["a*b - a*b + 2*c^2", "(0,1)1 + (1,0)"]).unwrap();
    assert_eq!(ps[0].names.as_deref().unwrap(), ["a", "b", "c"]);
    assert_eq!(ps[0].render(), "(2,0)c^2 + (1,1)a*b");
    assert_eq!(ps[1].render(), "(1,1)1");
    let [p, q] = &parse_sym_polys(&["(1,1)x*y + z", "z"]).unwrap()[..] else { unreachable!() };
    assert_eq!(transfer_check(p, q).unwrap().unwrap().rows.iter().map(|r| r.k).sum::<u64>(), 1);
}

#[test]
fn polynomial_text_errors() {
    let at = |s: &str| match parse_sym_polys(&[s]) {
        Err(tropsys::Error::Parse { line, col, .. }) => (line, col),
        other => panic!("{other:?}"),
    };
    assert_eq!(at("x + * y"), (1, 5));
    assert_eq!(at("x\n  + (1,y)"), (2, 8));
    assert_eq!(at("x y"), (1, 3));
    assert_eq!(at(""), (1, 1));
}

proptest! {
    #[test]
    fn rendered_polynomials_parse_back(p in arb_poly()) {
        let named = p.clone().with_names(vec!["x".into(), "y".into()]);
        let back = parse_sym_polys(&["x*y", &named.render()]).unwrap().pop().unwrap();
        prop_assert_eq!(back.terms, p.terms);
    }
}
