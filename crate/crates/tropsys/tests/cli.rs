use std::path::Path;
use std::process::{Command, Output};

fn data(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("data").join(name).display().to_string()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tropsys")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let o = run(args);
    assert!(o.status.success(), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    String::from_utf8(o.stdout).unwrap()
}

#[test]
fn classify_sign_file() {
    let out = stdout(&["classify", &data("sign.sys")]);
    assert!(out.lines().any(|l| l == "characteristic: 1"), "{out}");
    assert!(out.lines().any(|l| l == "kind: second"));
}

#[test]
fn machine_format_is_stable_key_value() {
    let a = stdout(&["--format", "machine", "classify", "truncated-9"]);
    let b = stdout(&["classify", "truncated-9", "--format=machine"]);
    assert_eq!(a, b);
    assert!(a.lines().all(|l| l.contains('=') && !l.contains(": ")), "{a}");
    assert!(a.contains("\nheight=9\n") && a.contains("\ncharacteristic=0\n"));
}

#[test]
fn malformed_table_exits_with_two() {
    let o = run(&["classify", &data("nonassociative.sys")]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("not associative at (x, x, y)"), "{err}");
}

#[test]
fn parse_errors_exit_with_one_and_a_position() {
    let dir = std::env::temp_dir().join(format!("tropsys-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join("typo.sys");
    std::fs::write(&p, "carrier 0 1\ntangibles 1\nadd\n    0 1\n  0 0 1\n  1 1 z\n").unwrap();
    let o = run(&["classify", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 6, column 7"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn trop_elt_example() {
    let out = stdout(&["trop", "3*t^(-2)+1*t^(1)", "elt"]);
    assert!(out.contains("value: (3, 2)"), "{out}");
}

#[test]
fn trop_check_is_reproducible() {
    let args = ["--samples", "200", "--seed", "9", "--format", "machine", "trop", "--check", "all"];
    let a = stdout(&args);
    assert_eq!(a, stdout(&args));
    assert_eq!(a.lines().filter(|l| l.ends_with(".violations=0")).count(), 5, "{a}");
}

#[test]
fn transfer_det_mult() {
    let out = stdout(&["transfer", "det_mult", "--n", "2"]);
    assert!(out.starts_with("result: CERTIFIED\n"), "{out}");
    assert!(out.contains("a11*a21*b11*b12\t(1,1)\t(0,0)\t1"));
    assert_eq!(run(&["transfer", "cube_root"]).status.code(), Some(1));
}

#[test]
fn theorems_on_truncated_five() {
    let out = stdout(&["theorems", &data("truncated5.sys"), "reversibility"]);
    assert!(out.contains("reversibility: FAIL"), "{out}");
    assert!(out.contains("reversibility.witness: a=(1,1) b=(1,2) c=(4,2)"));
    let all = stdout(&["--format", "machine", "theorems", "sign"]);
    assert!(all.contains("\nfailed=0\n"), "{all}");
}

#[test]
fn det_and_rank_on_matrix_files() {
    let d = stdout(&["det", &data("supertropical_3x3.mat")]);
    assert!(d.contains("det: 6ν") && d.contains("class: circ_singular"), "{d}");
    let r = stdout(&["rank", &data("sign_2x2.mat")]);
    assert!(r.contains("row_rank: 2") && r.contains("exact: true"), "{r}");
}

#[test]
fn hyper_and_fuzzy() {
    let h = stdout(&["hyper", &data("krasner.hyp")]);
    assert!(h.contains("carrier: 0 1 {0,1}") && h.contains("property_p: true"), "{h}");
    let f = stdout(&["fuzzy", &data("sign.sys")]);
    assert!(f.contains("epsilon: -1") && f.contains("round_trip_negation: true"), "{f}");
}

#[test]
fn every_bundled_file_loads() {
    for entry in std::fs::read_dir(Path::new(env!("CARGO_MANIFEST_DIR")).join("data")).unwrap() {
        let p = entry.unwrap().path();
        let name = p.file_name().unwrap().to_str().unwrap().to_string();
        let ext = p.extension().and_then(|e| e.to_str()).unwrap_or("");
        let o = match ext {
            "sys" | "hyp" => run(&["classify", p.to_str().unwrap()]),
            "mat" => run(&["rank", p.to_str().unwrap()]),
            _ => continue,
        };
        let expect = if name.starts_with("nonassociative") { Some(2) } else { Some(0) };
        assert_eq!(o.status.code(), expect, "{name}: {}", String::from_utf8_lossy(&o.stderr));
    }
}

#[test]
fn bounds_must_be_positive() {
    assert_eq!(run(&["--bound", "0", "classify", "sign"]).status.code(), Some(1));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}
