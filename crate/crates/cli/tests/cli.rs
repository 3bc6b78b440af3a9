use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use symcirc_core::{exp_generator, random_invariant, Circuit, ComplexMatrix, PauliSum, SymmetryGroup};

fn symcirc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_symcirc")).args(args).env_remove("SYMCIRC_OUT_DIR").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn write_matrix(path: &Path, m: &ComplexMatrix) {
    fs::write(path, m.to_json()).unwrap();
}

#[test]
fn basis_lists_elements_and_dimension() {
    let o = symcirc(&["basis", "--n", "2", "--no-header"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 10);
    assert_eq!(*lines.last().unwrap(), "dim 9");
    assert!(lines.contains(&"(1,0) IX + (1,0) XI"));
    for line in &lines[..9] {
        let s = PauliSum::from_text(line).unwrap();
        assert!(s.is_hermitian() && !s.has_identity_term());
    }
}

#[test]
fn header_is_on_by_default_and_suppressible() {
    let with = stdout(&symcirc(&["basis", "--n", "1"]));
    assert!(with.starts_with("# symcirc "));
    let without = stdout(&symcirc(&["basis", "--n", "1", "--no-header"]));
    assert!(!without.starts_with('#'));
    assert_eq!(with.lines().skip(1).collect::<Vec<_>>(), without.lines().collect::<Vec<_>>());
}

#[test]
fn dim_table_over_a_range() {
    let o = symcirc(&["dim", "--n", "5", "--from", "1", "--no-header"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "n,group,dimension,burnside\n1,full_swap,3,3\n2,full_swap,9,9\n3,full_swap,19,19\n4,full_swap,34,34\n5,full_swap,55,55\n"
    );
    let d4 = stdout(&symcirc(&["dim", "--n", "4", "--symmetry", "dihedral", "--no-header", "--format", "json"]));
    let v: serde_json::Value = serde_json::from_str(&d4).unwrap();
    assert_eq!(v[0]["dimension"], 54);
}

#[test]
fn random_is_deterministic_per_seed() {
    let a = symcirc(&["random", "--n", "3", "--seed", "11", "--format", "json"]);
    let b = symcirc(&["random", "--n", "3", "--seed", "11", "--format", "json"]);
    let c = symcirc(&["random", "--n", "3", "--seed", "12", "--format", "json"]);
    assert_eq!(a.stdout, b.stdout);
    assert_ne!(a.stdout, c.stdout);
    let m = ComplexMatrix::from_json(&stdout(&a)).unwrap();
    let lib = random_invariant(3, &SymmetryGroup::preset("full_swap", 3).unwrap(), 11, 8).unwrap();
    assert_eq!(&m, lib.matrix());
}

#[test]
fn check_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let invariant = dir.path().join("u.json");
    let g = SymmetryGroup::preset("cyclic", 3).unwrap();
    write_matrix(&invariant, random_invariant(3, &g, 4, 8).unwrap().matrix());
    let o = symcirc(&["check", "--n", "3", "--symmetry", "cyclic", "--matrix", invariant.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let out = stdout(&o);
    assert!(out.lines().any(|l| l == "verdict,invariant"));
    assert_eq!(out.lines().filter(|l| l.starts_with(|c: char| c.is_ascii_digit())).count(), 3);

    // Z on qubit 0 alone is not swap invariant.
    let z0 = dir.path().join("z0.json");
    write_matrix(&z0, &PauliSum::from_letter_terms("IZ").unwrap().to_matrix().unwrap());
    let o = symcirc(&["check", "--n", "2", "--matrix", z0.to_str().unwrap(), "--format", "json"]);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["invariant"], false);
    assert!((v["max_defect"].as_f64().unwrap() - 2.0 * 2f64.sqrt()).abs() < 1e-12);

    // Non-unitary input only warns.
    let h = dir.path().join("h.json");
    write_matrix(&h, &PauliSum::from_letter_terms("XI IX").unwrap().to_matrix().unwrap());
    let o = symcirc(&["check", "--n", "2", "--matrix", h.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stderr(&o).contains("not unitary"));

    let o = symcirc(&["check", "--n", "3", "--matrix", h.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn path_rows_and_non_unitary_rejection() {
    let dir = tempfile::tempdir().unwrap();
    let u = dir.path().join("u.json");
    write_matrix(&u, random_invariant(2, &SymmetryGroup::preset("full_swap", 2).unwrap(), 9, 8).unwrap().matrix());
    let o = symcirc(&["path", "--n", "2", "--matrix", u.to_str().unwrap(), "--samples", "4", "--no-header"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let rows: Vec<Vec<f64>> = out.lines().skip(1).map(|l| l.split(',').map(|x| x.parse().unwrap()).collect()).collect();
    assert_eq!(rows.len(), 5);
    assert_eq!(rows.iter().map(|r| r[0]).collect::<Vec<_>>(), [0.0, 0.25, 0.5, 0.75, 1.0]);
    assert!(rows.iter().all(|r| r[1] < 1e-8 && r[2] < 1e-9));

    let h = dir.path().join("h.json");
    write_matrix(&h, &PauliSum::from_letter_terms("XI IX").unwrap().to_matrix().unwrap());
    let o = symcirc(&["path", "--n", "2", "--matrix", h.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn synth_and_eval_agree_with_exponential() {
    let dir = tempfile::tempdir().unwrap();
    let circuit = dir.path().join("c.txt");
    let o = symcirc(&["synth", "--pauli", "ZZ", "--alpha", "0.7853981633974483", "--no-header"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "QUBITS 2\nCNOT 0 1\nRZ 1 0.7853981633974483\nCNOT 0 1\n");
    fs::write(&circuit, stdout(&o)).unwrap();
    let o = symcirc(&["synth", "--eval", circuit.to_str().unwrap(), "--no-header"]);
    assert_eq!(o.status.code(), Some(0));
    let m = ComplexMatrix::from_json(&stdout(&o)).unwrap();
    let reference = exp_generator(&PauliSum::from_letter_terms("ZZ").unwrap(), std::f64::consts::FRAC_PI_4).unwrap();
    assert!(m.distance(reference.matrix()).unwrap() < 1e-12);
}

#[test]
fn synth_sum_file_and_negative_alpha() {
    let dir = tempfile::tempdir().unwrap();
    let sum = dir.path().join("s.txt");
    fs::write(&sum, "(1,0) XX\n(1,0) ZZ\n").unwrap();
    let o = symcirc(&["synth", "--sum", sum.to_str().unwrap(), "--alpha", "-0.3", "--no-header"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let c = Circuit::from_text(&stdout(&o)).unwrap();
    assert_eq!(c.counts().cnot, 4);
}

#[test]
fn synth_refusals_exit_one() {
    let basis = symcirc_core::build_basis(3, &SymmetryGroup::preset("full_swap", 3).unwrap()).unwrap();
    let index = basis.elements().iter().position(|e| e.letters_used().len() == 3).unwrap();
    let o = symcirc(&["synth", "--n", "3", "--element", &index.to_string()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("refused"));

    // The identity string is an input error, not a refusal.
    let o = symcirc(&["synth", "--pauli", "III"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn out_dir_override() {
    let dir = tempfile::tempdir().unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_symcirc"))
        .args(["dim", "--n", "3", "--out", "dims.csv", "--no-header"])
        .env("SYMCIRC_OUT_DIR", dir.path())
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    assert_eq!(
        fs::read_to_string(dir.path().join("dims.csv")).unwrap(),
        "n,group,dimension,burnside\n3,full_swap,19,19\n"
    );
}

#[test]
fn symmetry_spec_files() {
    let dir = tempfile::tempdir().unwrap();
    let spec = dir.path().join("ring.json");
    fs::write(&spec, r#"{"n": 4, "generators": [{"perm": [1,2,3,0]}]}"#).unwrap();
    let o = symcirc(&["dim", "--symmetry", spec.to_str().unwrap(), "--no-header"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "n,group,dimension,burnside\n4,ring,69,69\n");

    let o = symcirc(&["dim", "--n", "3", "--symmetry", spec.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(symcirc(&["basis"]).status.code(), Some(2));
    assert_eq!(symcirc(&["basis", "--n", "2", "--symmetry", "octahedral"]).status.code(), Some(2));
    assert_eq!(symcirc(&["basis", "--n", "2", "--tol", "-1"]).status.code(), Some(2));
    assert_eq!(symcirc(&["basis", "--n", "9"]).status.code(), Some(2));
    assert_eq!(symcirc(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(symcirc(&["check", "--n", "2", "--matrix", "/nonexistent.json"]).status.code(), Some(2));
}

#[test]
fn verify_reports_every_suite() {
    for (n, preset) in [("2", "full_swap"), ("4", "dihedral"), ("1", "trivial")] {
        let o = symcirc(&["verify", "--n", n, "--symmetry", preset, "--format", "json"]);
        assert_eq!(o.status.code(), Some(0), "{n} {preset}: {}", stdout(&o));
        let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
        let suites: Vec<&str> = v["suites"].as_array().unwrap().iter().map(|s| s["suite"].as_str().unwrap()).collect();
        assert_eq!(suites, ["composition", "closure", "commuting_diagram", "path"]);
    }
    let text = stdout(&symcirc(&["verify", "--n", "2", "--no-header"]));
    assert!(text.ends_with("overall,PASS\n"));
}
