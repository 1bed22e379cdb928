use tropsys::instances::*;
use tropsys::matrices::*;
use tropsys::SystemHandle;

fn elems(s: &SystemHandle, lits: &[&str]) -> Vec<tropsys::Element> {
    lits.iter().map(|l| s.parse(l).unwrap()).collect()
}

#[test]
fn permutation_parities() {
    let ps = permutations(3);
    assert_eq!(ps.len(), 6);
    assert_eq!(ps.iter().filter(|p| p.1).count(), 3);
    assert_eq!(ps[0], (vec![0, 1, 2], true));
    assert_eq!(ps[1], (vec![0, 2, 1], false));
}

#[test]
fn one_by_one_parts() {
    let s = make_sign_system().unwrap();
    let m = Matrix::parse(&s, &[&["-1"]]).unwrap();
    let p = det_parts(&m).unwrap();
    assert_eq!(s.format(p.even.as_ref().unwrap()), "-1");
    assert!(p.odd.is_none());
    assert_eq!(s.format(&adjoint(&m).unwrap().entries[0]), "1");
}

#[test]
fn sign_two_by_two_singular() {
    let s = make_sign_system().unwrap();
    let m = Matrix::parse(&s, &[&["1", "1"], &["1", "1"]]).unwrap();
    assert_eq!(s.format(&det(&m).unwrap()), "inf");
    assert_eq!(singularity_class(&m).unwrap(), Singularity::CircSingular);
    let m = Matrix::parse(&s, &[&["1", "-1"], &["1", "1"]]).unwrap();
    assert_eq!(singularity_class(&m).unwrap(), Singularity::Nonsingular);
}

#[test]
fn maxplus_permanent_style_determinant() {
    let s = make_supertropical();
    let m = Matrix::parse(&s, &[&["3", "1"], &["2", "0"]]).unwrap();
    // even: 3+0 = 3, odd: 1+2 = 3, so the determinant is the ghost 3
    assert_eq!(s.format(&det(&m).unwrap()), "3ν");
    let m = Matrix::parse(&s, &[&["3", "1"], &["1", "0"]]).unwrap();
    assert_eq!(s.format(&det(&m).unwrap()), "3");
}

#[test]
fn sign_identities_exhaustive() {
    let s = make_sign_system().unwrap();
    let ms = enumerate_matrices(&s, 2, &elems(&s, &["0", "1", "-1"])).unwrap();
    assert_eq!(ms.len(), 81);
    let rep = check_det_identities(&s, &ms).unwrap();
    assert_eq!(rep.pairs, 6561);
    assert!(rep.ok(), "{:?}", rep.first_failure);
}

#[test]
fn symplectic_is_an_involution() {
    let s = make_elt();
    let m = Matrix::parse(
        &s,
        &[
            &["(1, 0)", "(2, 1)", "(-1, 0)", "(3, 2)"],
            &["(1, 1)", "(1, 0)", "(1, 5)", "(2, 0)"],
            &["-inf", "(1, 0)", "(4, 0)", "(1, 1)"],
            &["(1, 0)", "(1, 3)", "(1, 0)", "(-2, 0)"],
        ],
    )
    .unwrap();
    let t = involution(&m, Involution::Symplectic).unwrap();
    assert_eq!(involution(&t, Involution::Symplectic).unwrap(), m);
    assert_eq!(involution(&involution(&m, Involution::Transpose).unwrap(), Involution::Transpose).unwrap(), m);
}

#[test]
fn sign_rank_and_dependence() {
    let s = make_sign_system().unwrap();
    let m = Matrix::parse(&s, &[&["1", "1", "0"], &["1", "-1", "1"], &["0", "1", "1"]]).unwrap();
    let pool = resolve_pool(&s, &m.entries, &Pool::Tangibles).unwrap();
    assert!(pool.exhaustive);
    // rows: no pair is dependent, the full set is? row1 + row3 = (1, inf, 1) is not quasi-zero
    let r = row_rank(&m, &Pool::Tangibles).unwrap();
    assert!(r.exact);
    assert!(r.rank <= 3);
    let dup = Matrix::parse(&s, &[&["1", "-1"], &["-1", "1"]]).unwrap();
    let d = circ_dependent(&s, &dup.row_vectors(), &pool).unwrap();
    assert!(d.dependent);
    assert_eq!(d.rows, vec![0, 1]);
    assert_eq!(row_rank(&dup, &Pool::Tangibles).unwrap().rank, 1);
    assert_eq!(submatrix_rank(&dup).unwrap(), 1);
}

#[test]
fn supertropical_difference_pool() {
    let s = make_supertropical();
    let m = Matrix::parse(&s, &[&["0", "1"], &["1", "2"]]).unwrap();
    let pool = resolve_pool(&s, &m.entries, &Pool::default()).unwrap();
    assert!(!pool.exhaustive);
    let d = circ_dependent(&s, &m.row_vectors(), &pool).unwrap();
    assert!(d.dependent);
    assert_eq!(s.format(&d.coeffs[1]), "-1");
    assert_eq!(singularity_class(&m).unwrap(), Singularity::CircSingular);
}

fn int_det3(m: &[i64]) -> i64 {
    m[0] * (m[4] * m[8] - m[5] * m[7]) - m[1] * (m[3] * m[8] - m[5] * m[6]) + m[2] * (m[3] * m[7] - m[4] * m[6])
}

proptest::proptest! {
    #[test]
    fn tangible_sign_determinant_matches_integer_sign(cells in proptest::collection::vec(-1i64..=1, 9)) {
        let s = make_sign_system().unwrap();
        let lit = |x: i64| match x { 1 => "1", -1 => "-1", _ => "0" };
        let m = Matrix::new(&s, 3, 3, cells.iter().map(|&x| s.parse(lit(x)).unwrap()).collect()).unwrap();
        let d = det(&m).unwrap();
        let z = int_det3(&cells);
        match s.format(&d).as_str() {
            "1" => proptest::prop_assert!(z > 0),
            "-1" => proptest::prop_assert!(z < 0),
            "0" => proptest::prop_assert_eq!(z, 0),
            _ => {}
        }
        if z == 0 {
            proptest::prop_assert!(s.surpasses_zero(&d).unwrap());
        }
    }
}
