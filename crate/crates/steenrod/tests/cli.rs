use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_steenrod"))
}

fn run(args: &[&str], cache: &Path) -> Output {
    bin().args(args).arg("--cache-dir").arg(cache).output().expect("spawn steenrod")
}

fn golden(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)
}

const GOLDEN: &[(&str, &[&str])] = &[
    ("ext_a1.tsv", &["chart", "ext", "--algebra", "A(1)", "--smax", "6", "--range", "8"]),
    ("ext_a1.json", &["chart", "ext", "--algebra", "A(1)", "--smax", "6", "--range", "8", "--format", "json"]),
    ("ext_a1.svg", &["chart", "ext", "--algebra", "A(1)", "--smax", "6", "--range", "8", "--format", "svg"]),
    ("ext_a2_moore.tsv", &["chart", "ext", "--algebra", "A(2)", "--coeffs", "moore", "--smax", "4", "--range", "10"]),
    (
        "ext_a1_random3.tsv",
        &["chart", "ext", "--algebra", "A(1)", "--coeffs", "random:3", "--smax", "4", "--range", "6", "--seed", "3"],
    ),
    ("cotor_exterior.tsv", &["chart", "cotor", "--coalgebra", "A*//A(1)*", "--smax", "4", "--tmax", "20"]),
    ("ce_e2.json", &["chart", "ss-page", "--page", "2", "--format", "json"]),
    ("ce_e2.svg", &["chart", "ss-page", "--page", "2", "--format", "svg"]),
    ("poincare_a1.txt", &["verify", "poincare", "--n", "1"]),
];

#[test]
fn outputs_match_golden_files() {
    let dir = tempfile::tempdir().unwrap();
    for (name, args) in GOLDEN {
        let out = run(args, dir.path());
        assert!(out.status.success(), "{}: {}", name, String::from_utf8_lossy(&out.stderr));
        let expect = std::fs::read(golden(name)).unwrap();
        assert!(out.stdout == expect, "{} differs from its golden file", name);
    }
}

#[test]
fn cached_and_fresh_runs_are_identical() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["chart", "ext", "--algebra", "A(2)", "--smax", "5", "--range", "10", "--format", "json"];
    let first = run(&args, dir.path());
    let second = run(&args, dir.path());
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);
    let listed = run(&["cache", "list"], dir.path());
    assert_eq!(String::from_utf8_lossy(&listed.stdout).lines().count(), 1);
}

#[test]
fn out_flag_writes_the_same_bytes() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("chart.tsv");
    let args = ["chart", "ext", "--algebra", "A(1)", "--smax", "6", "--range", "8"];
    let out = bin().args(args).arg("--cache-dir").arg(dir.path()).arg("--out").arg(&path).output().unwrap();
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    assert_eq!(std::fs::read(&path).unwrap(), std::fs::read(golden("ext_a1.tsv")).unwrap());
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let code = |args: &[&str]| run(args, dir.path()).status.code().unwrap();
    assert_eq!(code(&["verify", "palg-finite", "--module", "moore", "--window", "16"]), 0);
    assert_eq!(code(&["verify", "palg-finite", "--module", "k", "--window", "16", "--degenerate-from", "4"]), 1);
    assert_eq!(code(&["verify", "a-leqk", "--k", "1"]), 0);
    assert_eq!(code(&["verify", "a-leqk", "--k", "1", "--mutate", "trivialize-source"]), 1);
    assert_eq!(code(&["verify", "poincare", "--n", "9"]), 2);
    assert_eq!(code(&["chart", "ext", "--algebra", "B(1)"]), 2);
    assert_eq!(code(&["chart", "ext", "--format", "png"]), 2);
    assert_eq!(code(&["chart", "cotor", "--coeffs", "file:/nonexistent.json"]), 2);
    assert_eq!(code(&["mul", "Sq(2"]), 2);
}

#[test]
fn headers_carry_the_window_and_seed() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(&["chart", "ext", "--algebra", "E(1)", "--smax", "3", "--seed", "42"], dir.path());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("# steenrod "));
    assert!(text.contains("# seed: 42\n"));
    assert!(text.contains("s_max=3"));
    assert!(text.contains("# tag: ext-chart\n"));
}

#[test]
fn mul_prints_products() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(&["mul", "Sq(2)*Sq(2)"], dir.path());
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "Sq(1,1)\n");
    let out = run(&["mul", "Sq(1)*Sq(2)"], dir.path());
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "Sq(3)\n");
}
