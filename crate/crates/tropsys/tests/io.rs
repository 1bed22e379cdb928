use std::path::{Path, PathBuf};

use proptest::prelude::*;
use tropsys::analysis::isomorphic;
use tropsys::hypersystems::*;
use tropsys::instances::*;
use tropsys::io::*;
use tropsys::{AxiomViolation, Error, SystemHandle};

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("data").join(name)
}

fn parse_err(r: tropsys::Result<impl std::fmt::Debug>) -> (usize, usize, String) {
    match r {
        Err(Error::Parse { line, col, msg }) => (line, col, msg),
        other => panic!("expected a parse error, got {other:?}"),
    }
}

#[test]
fn bundled_files_match_their_builders() {
    let pairs: Vec<(&str, SystemHandle)> = vec![
        ("boolean.sys", make_boolean().unwrap()),
        ("boolean_supertropical.sys", make_boolean_supertropical().unwrap()),
        ("sign.sys", make_sign_system().unwrap()),
        ("supertropical_chain3.sys", make_supertropical_chain(3).unwrap()),
        ("truncated5.sys", make_truncated_layered(5, 2).unwrap()),
        ("truncated9.sys", make_truncated_layered(9, 1).unwrap()),
        ("zn3.sys", make_zn_layered(3, 1).unwrap()),
        ("gf4_layered.sys", make_gf4_layered(1).unwrap()),
        ("krasner.hyp", powerset_system(&krasner()).unwrap()),
        ("signs.hyp", powerset_system(&sign_hyperfield()).unwrap()),
        ("tropical_chain.hyp", powerset_system(&tropical_chain(3)).unwrap()),
    ];
    for (file, built) in pairs {
        let loaded = load_system_file(&data(file)).unwrap_or_else(|e| panic!("{file}: {e}"));
        assert!(isomorphic(&loaded, &built).unwrap(), "{file}");
    }
}

#[test]
fn non_associative_table_is_an_axiom_error() {
    let err = load_system_file(&data("nonassociative.sys")).unwrap_err();
    assert!(err.is_axiom(), "{err}");
    let Error::Axiom(AxiomViolation::AddNotAssociative(a, b, c)) = &err else { panic!("{err}") };
    let names = [a.as_str(), b.as_str(), c.as_str()];
    assert!(names.iter().all(|n| ["x", "y"].contains(n)), "{names:?}");
}

const SIGN: &str = "name s\ncarrier 0 1\ntangibles 1\nzero 0\nadd\n     0 1\n  0  0 1\n  1  1 1\n";

#[test]
fn parse_errors_carry_positions() {
    let bad_cell = SIGN.replace("  1  1 1", "  1  1 q");
    assert_eq!(parse_err(parse_system(&bad_cell)), (8, 8, "unknown element `q`".into()));
    let short = SIGN.replace("  1  1 1", "  1  1");
    assert_eq!(parse_err(parse_system(&short)).0, 8);
    let (l, c, m) = parse_err(parse_system(&format!("{SIGN}bogus 1\n")));
    assert_eq!((l, c), (9, 1));
    assert!(m.contains("unknown keyword"));
    let (l, c, _) = parse_err(parse_system("carrier 0 (1\n"));
    assert_eq!((l, c), (1, 11));
    let (l, _, m) = parse_err(parse_system("carrier 0 1\ntangibles 1\n"));
    assert_eq!(l, 3);
    assert!(m.contains("`add`"));
    let (l, c, _) = parse_err(parse_system(&format!("{SIGN}zero 1\n")));
    assert_eq!((l, c), (9, 1));
    let (l, c, _) = parse_err(parse_system(&SIGN.replace("zero 0", "zero 0 1")));
    assert_eq!((l, c), (4, 8));
}

#[test]
fn file_errors_name_the_file() {
    let dir = std::env::temp_dir().join(format!("tropsys-io-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join("bad.sys");
    std::fs::write(&p, "carrier 0\ntangibles z\n").unwrap();
    let msg = load_system_file(&p).unwrap_err().to_string();
    assert!(msg.contains("line 2, column 11") && msg.contains("bad.sys"), "{msg}");
    assert!(matches!(load_system_file(&dir.join("missing.sys")), Err(Error::Io { .. })));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn hypergroup_cells_and_errors() {
    let h = parse_hypergroup(&std::fs::read_to_string(data("signs.hyp")).unwrap()).unwrap();
    assert_eq!(h.add[1][2], 0b111);
    let text = "carrier 0 1\nzero 0\nadd\n     0 1\n  0  0 1\n  1  1 {0,2}\n";
    assert_eq!(parse_err(parse_hypergroup(text)), (6, 8, "unknown element `2` in set".into()));
    let not_assoc = "carrier 0 a b\nzero 0\nadd\n    0 a b\n  0 0 a b\n  a a a {0,a,b}\n  b b {0,a,b} 0\n";
    assert!(load_hypergroup(not_assoc).unwrap_err().is_axiom());
}

#[test]
fn matrix_files() {
    let m = read_matrix(&data("sign_2x2.mat")).unwrap();
    assert_eq!((m.rows, m.cols), (2, 2));
    assert_eq!(m.sys.format(m.get(0, 1)), "-1");
    let s = read_matrix(&data("symmetrized_2x2.mat")).unwrap();
    assert_eq!(s.sys.format(s.get(0, 1)), "(-inf | 1)");
    let f = read_matrix(&data("sign_file_2x3.mat")).unwrap();
    assert_eq!((f.sys.name().as_str(), f.cols), ("sign", 3));
    let t = read_matrix(&data("supertropical_3x3.mat")).unwrap();
    assert_eq!(write_matrix(&t, "supertropical"), "3 3 supertropical\n0 1 2\n1 2 3\n2 3 4\n");
    let (l, c, m) = parse_err(parse_matrix("1 2 sign\n1 nope\n", tropsys::registry::builtin));
    assert_eq!((l, c), (2, 3));
    assert!(m.contains("nope"));
    assert_eq!(parse_err(parse_matrix("1 1 nosuch\n0\n", tropsys::registry::builtin)).1, 5);
    assert_eq!(parse_err(parse_matrix("2 1 sign\n0\n", tropsys::registry::builtin)).0, 3);
}

#[test]
fn registry_ids_resolve() {
    for (id, s) in tropsys::registry::bundled().unwrap() {
        assert!(!s.name().is_empty(), "{id}");
    }
    assert!(tropsys::registry::builtin("truncated-0").is_err());
    assert_eq!(tropsys::registry::builtin("zn-3x2").unwrap().name(), "zn-layered-3x2");
}

fn tables() -> impl Strategy<Value = FiniteTable> {
    prop_oneof![
        Just(boolean_table()),
        Just(sign_table()),
        (1usize..5).prop_map(supertropical_chain_table),
        (1usize..7, 1usize..3).prop_map(|(n, g)| truncated_layered_table(n, g)),
        (2usize..5, 1usize..3).prop_map(|(n, g)| zn_layered_table(n, g)),
        (1usize..3).prop_map(gf4_layered_table),
    ]
}

proptest! {
    #[test]
    fn system_files_round_trip(t in tables()) {
        let back = parse_system(&write_system(&t).unwrap()).unwrap();
        prop_assert_eq!(&back.name, &t.name);
        prop_assert_eq!(&back.carrier, &t.carrier);
        prop_assert_eq!(&back.add, &t.add);
        prop_assert_eq!(&back.mul, &t.mul);
        prop_assert_eq!(&back.neg, &t.neg);
        prop_assert_eq!(&back.tangibles, &t.tangibles);
        prop_assert_eq!((back.zero, back.one, back.level), (t.zero, t.one, t.level));
    }

    #[test]
    fn hypergroup_files_round_trip(k in 1usize..8) {
        let h = tropical_chain(k);
        let back = parse_hypergroup(&write_hypergroup(&h).unwrap()).unwrap();
        prop_assert_eq!(back.add, h.add);
        prop_assert_eq!(back.zero, h.zero);
    }

    #[test]
    fn bracketed_tokens_survive(parts in prop::collection::vec("[a-z0-9]{1,3}|\\([0-9], ?[0-9]\\)|\\{[a-z],[a-z]\\}", 1..8)) {
        let line = tropsys::io::lex::tokenize_line(1, &parts.join("  ")).unwrap();
        let got: Vec<String> = line.toks.into_iter().map(|t| t.text).collect();
        prop_assert_eq!(got, parts);
    }
}
