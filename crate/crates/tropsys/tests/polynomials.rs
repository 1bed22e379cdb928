use tropsys::instances::*;
use tropsys::polynomials::*;

#[test]
fn product_of_linear_factors_over_signs() {
    let s = make_sign_system().unwrap();
    let a = Polynomial::univariate(&s, &[(1, "1"), (0, "1")]).unwrap();
    let b = Polynomial::univariate(&s, &[(1, "1"), (0, "-1")]).unwrap();
    let p = poly_mul(&a, &b).unwrap();
    assert_eq!(s.format(p.coefficient(&[2]).unwrap()), "1");
    assert_eq!(s.format(p.coefficient(&[1]).unwrap()), "inf");
    assert_eq!(s.format(p.coefficient(&[0]).unwrap()), "-1");
    let roots: Vec<String> = systemic_roots(&p).unwrap().iter().map(|r| s.format(r)).collect();
    assert_eq!(roots, vec!["1", "-1"]);
}

#[test]
fn maxplus_evaluation() {
    let s = make_maxplus();
    let f = Polynomial::univariate(&s, &[(2, "0"), (0, "3")]).unwrap();
    assert_eq!(s.format(&eval(&f, &[s.parse("5").unwrap()]).unwrap()), "10");
}

#[test]
fn supertropical_corner_roots() {
    let s = make_supertropical();
    // λ² + 1λ + 0 has corners at 1 and -1
    let f = Polynomial::univariate(&s, &[(2, "0"), (1, "1"), (0, "0")]).unwrap();
    let roots: Vec<String> = systemic_roots(&f).unwrap().iter().map(|r| s.format(r)).collect();
    assert_eq!(roots, vec!["-1", "1"]);
}

#[test]
fn zero_terms_are_dropped() {
    let s = make_supertropical();
    let f = Polynomial::univariate(&s, &[(2, "-inf"), (0, "1")]).unwrap();
    assert_eq!(f.terms.len(), 1);
    let g = poly_negate(&f).unwrap();
    assert_eq!(poly_add(&f, &g).unwrap().render(), "1ν");
}
