use std::path::{Path, PathBuf};
use std::process::Command;

use quasiaffine::poly::{MonomialOrder, Polynomial};
use quasiaffine::worked::df_dataset;

const BIN: &str = env!("CARGO_BIN_EXE_quasiaffine");

fn sessions() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("examples/sessions")
}

fn session(name: &str) -> String {
    sessions().join(name).to_string_lossy().into_owned()
}

fn scratch(name: &str) -> PathBuf {
    Path::new(env!("CARGO_TARGET_TMPDIR")).join(name)
}

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(BIN).args(args).output().expect("binary runs");
    (
        out.status.code().expect("exited normally"),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn gb_prints_reduced_basis() {
    let (code, out, _) = run(&["gb", "--input", &session("ideals.session"), "cubic", "--order", "lex"]);
    assert_eq!(code, 0);
    assert!(out.lines().any(|l| l == "y^3 - z^2"), "{out}");
    for line in out.lines() {
        assert!(Polynomial::parse(line, &quasiaffine::Ring::new(["x", "y", "z"]).unwrap()).is_ok());
    }
}

#[test]
fn gb_zero_ideal_and_errors() {
    let (code, out, _) = run(&["gb", "--input", &session("ideals.session"), "zero"]);
    assert_eq!((code, out.as_str()), (0, ""));
    let (code, _, err) = run(&["gb", "--input", &session("ideals.session"), "missing"]);
    assert_eq!(code, 2);
    assert!(err.contains("missing"));
    let (code, _, _) = run(&["gb", "--input", &session("ideals.session"), "cubic", "--order", "weird"]);
    assert_eq!(code, 2);
    let (code, _, _) = run(&["gb", "--input", &session("ideals.session"), "cubic", "--order", "block:9"]);
    assert_eq!(code, 2);
}

#[test]
fn malformed_session_is_an_input_error() {
    let path = scratch("malformed.session");
    std::fs::write(&path, "ring R : x\nideal I : [x +]\n").unwrap();
    let (code, _, err) = run(&["gb", "--input", path.to_str().unwrap(), "I"]);
    assert_eq!(code, 2);
    assert!(err.contains("line 2"), "{err}");
}

#[test]
fn transform_levels() {
    let (code, out, _) = run(&["transform", "--input", &session("ideals.session"), "line", "1"]);
    assert_eq!(code, 0);
    assert!(out.contains("numerator: (1)"));
    assert!(out.contains("denominator: x"));
    assert!(out.contains("stabilized: false"));
    let (_, out, _) = run(&["transform", "--input", &session("ideals.session"), "origin", "1"]);
    assert!(out.contains("base ring: true") && out.contains("stabilized: true"), "{out}");
    let (_, out, _) = run(&["transform", "--input", &session("ideals.session"), "line", "0"]);
    assert!(out.contains("base ring: true"));
}

#[test]
fn derive_subcommands() {
    let df = session("df.session");
    let (code, out, _) = run(&["derive", "--input", &df, "D", "exp"]);
    assert_eq!(code, 0);
    assert!(out.contains("u -> 1/6*x^3*r^3 + 1/2*s*r^2 + t*r + u"), "{out}");
    assert!(out.contains("s -> x^3*r + s"));

    let (_, out, _) = run(&["derive", "--input", &df, "D", "kernel", "2"]);
    let mut lines: Vec<&str> = out.lines().collect();
    lines.sort();
    assert_eq!(lines, vec!["1", "x", "x*v - s", "x^2"]);

    let (code, out, _) = run(&["derive", "--input", &df, "D", "invariant", "s"]);
    assert_eq!(code, 1);
    assert!(out.contains("D(s) = x^3"));
    let (code, _, _) = run(&["derive", "--input", &df, "D", "invariant", "phi2*phi3 + phi4^2"]);
    assert_eq!(code, 0);
    let (code, out, _) = run(&["derive", "--input", &df, "D", "apply", "u"]);
    assert_eq!((code, out.trim()), (0, "t"));
    let (code, out, _) = run(&["derive", "--input", &session("sl2.session"), "T", "kernel", "1", "--modulo", "sl2"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().collect::<Vec<_>>(), vec!["a", "c", "1"]);
}

#[test]
fn quotient_subcommands() {
    let q = session("quotient.session");
    let (code, out, _) = run(&["quotient", "--input", &q, "cone", "extend", "y3", "y1", "1"]);
    assert_eq!(code, 0);
    assert!(out.contains("invariant: yes"));
    let ring = quasiaffine::Ring::new(["y1", "y2", "y3", "y4", "a", "b", "c", "d"]).unwrap();
    let lift = Polynomial::parse(out.lines().next().unwrap(), &ring).unwrap();
    assert_eq!(lift, Polynomial::parse("d*y3 - b*y4", &ring).unwrap());

    let (code, out, _) = run(&["quotient", "--input", &q, "sl2", "build"]);
    assert_eq!(code, 0);
    assert!(out.contains("unit relation d*f1 - b*f2 = 1: pass"));

    let (code, _, err) = run(&["quotient", "--input", &q, "sl2", "extend", "1", "y1", "1"]);
    assert_eq!(code, 1);
    assert!(err.contains("numerator*(y2)"), "{err}");

    let (code, out, _) = run(&["quotient", "--input", &q, "sl2", "slice", "2"]);
    assert_eq!(code, 0);
    assert!(out.contains("6 invariants, 0 unexplained"), "{out}");

    let (code, _, _) = run(&["quotient", "--input", &q, "nope", "build"]);
    assert_eq!(code, 2);
}

#[test]
fn verify_targets_pass() {
    for target in ["df", "appendix"] {
        let (code, out, _) = run(&["verify", target]);
        assert_eq!(code, 0, "{out}");
    }
    let (code, _, _) = run(&["verify", "df", "--points", &session("points.txt")]);
    assert_eq!(code, 0);
}

fn untimed(path: &Path) -> serde_json::Value {
    let mut v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    for c in v["checks"].as_array_mut().unwrap() {
        c["duration_ms"] = serde_json::json!(0);
    }
    v
}

#[test]
fn verify_all_report_is_deterministic() {
    let a = scratch("report_a.json");
    let b = scratch("report_b.json");
    assert_eq!(run(&["verify", "all", "--report", a.to_str().unwrap()]).0, 0);
    assert_eq!(run(&["verify", "all", "--report", b.to_str().unwrap()]).0, 0);
    let (va, vb) = (untimed(&a), untimed(&b));
    assert_eq!(va, vb);
    assert_eq!(va["status"], "pass");
    let ids: Vec<&str> = va["checks"].as_array().unwrap().iter().map(|c| c["id"].as_str().unwrap()).collect();
    let mut sorted = ids.clone();
    sorted.sort();
    assert_eq!(ids, sorted);
    for c in va["checks"].as_array().unwrap() {
        let keys: Vec<&str> = c.as_object().unwrap().keys().map(String::as_str).collect();
        assert_eq!(keys.len(), 4, "{keys:?}");
    }
}

#[test]
fn corrupting_any_phi_coefficient_fails() {
    let data = df_dataset();
    for i in 1..=6 {
        let phi = data.phi(i);
        let (m, c) = phi.leading_term(&MonomialOrder::Grevlex).unwrap();
        let corrupted = phi + &Polynomial::monomial(phi.ring(), m, c);
        let path = scratch(&format!("corrupt_phi{i}.session"));
        std::fs::write(&path, format!("ring R : x, s, t, u, v\npoly phi{i} : {corrupted}\n")).unwrap();
        let (code, _, err) = run(&["verify", "all", "--input", path.to_str().unwrap()]);
        assert_eq!(code, 1, "phi{i}");
        assert!(err.contains("df."), "phi{i}: {err}");
    }
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&[]).0, 2);
    assert_eq!(run(&["verify", "everything"]).0, 2);
    assert_eq!(run(&["transform", "--input", &session("ideals.session"), "line", "-1"]).0, 2);
    assert_eq!(run(&["--help"]).0, 0);
    assert_eq!(run(&["verify", "df", "--points", "/no/such/file"]).0, 2);
}
