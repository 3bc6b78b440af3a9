use std::path::Path;

use serde_json::json;
use symcirc_core::symmetry::{is_invariant_with_mode, SymmetrySpec};
use symcirc_core::verify::{run_all, VerifyConfig};
use symcirc_core::{
    build_basis, burnside_dimension, circuit_to_matrix, random_invariant, synthesize_pauli_exponential,
    synthesize_sum_exponential, Circuit, ComplexMatrix, Error, InvarianceMode, PauliString, PauliSum, SymmetryGroup,
    Unitary, UnitaryPath,
};

use crate::{CommonArgs, Format, Outcome};

type CmdResult = Result<Outcome, String>;

fn err(e: Error) -> String {
    e.to_string()
}

/// Validated command configuration.
pub struct RunConfig {
    pub n: usize,
    pub group: SymmetryGroup,
    pub group_name: String,
    pub tol: f64,
    pub seed: u64,
    pub format: Format,
}

fn resolve(common: &CommonArgs) -> Result<RunConfig, String> {
    if common.tol.is_nan() || common.tol <= 0.0 {
        return Err(format!("tolerance must be positive, got {}", common.tol));
    }
    let path = Path::new(&common.symmetry);
    let (spec, group_name) = if path.is_file() {
        let text = std::fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
        let spec = SymmetrySpec::from_json(&text).map_err(err)?;
        if let Some(n) = common.n {
            if n != spec.n {
                return Err(format!("--n {n} disagrees with n = {} in {}", spec.n, path.display()));
            }
        }
        let name = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
        (spec, name)
    } else {
        let n = common.n.ok_or("--n is required with a symmetry preset")?;
        (SymmetrySpec::from_preset(&common.symmetry, n), common.symmetry.clone())
    };
    let group = spec.resolve().map_err(err)?;
    Ok(RunConfig { n: spec.n, group, group_name, tol: common.tol, seed: common.seed, format: common.format })
}

fn read_matrix(path: &Path, n: usize) -> Result<ComplexMatrix, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    let m = ComplexMatrix::from_json(&text).map_err(err)?;
    if m.dim() != 1 << n {
        return Err(format!("matrix is {0}x{0} but the symmetry acts on {n} qubits", m.dim()));
    }
    Ok(m)
}

pub fn basis(common: &CommonArgs) -> CmdResult {
    let cfg = resolve(common)?;
    let basis = build_basis(cfg.n, &cfg.group).map_err(err)?;
    let body = match cfg.format {
        Format::Text => {
            let mut out: String = basis.elements().iter().map(|e| format!("{e}\n")).collect();
            out.push_str(&format!("dim {}\n", basis.len()));
            out
        }
        Format::Csv => {
            let mut out = String::from("element,re,im,pauli\n");
            for (i, e) in basis.elements().iter().enumerate() {
                for (p, c) in e.terms() {
                    out.push_str(&format!("{i},{},{},{}\n", c.re, c.im, p.to_letters()));
                }
            }
            out
        }
        Format::Json => {
            let elements: Vec<_> = basis
                .elements()
                .iter()
                .map(|e| e.terms().map(|(p, c)| json!({"coeff": [c.re, c.im], "pauli": p.to_letters()})).collect())
                .collect::<Vec<Vec<_>>>();
            json!({"n": cfg.n, "group_order": cfg.group.order(), "dimension": basis.len(), "elements": elements})
                .to_string()
                + "\n"
        }
    };
    Ok(Outcome::ok(body))
}

pub fn dim(common: &CommonArgs, from: Option<usize>) -> CmdResult {
    let cfg = resolve(common)?;
    let rows: Vec<(usize, SymmetryGroup)> = match from {
        Some(start) => {
            if start == 0 || start > cfg.n {
                return Err(format!("--from must lie in 1..={}", cfg.n));
            }
            (start..=cfg.n)
                .map(|k| Ok((k, SymmetrySpec::from_preset(&common.symmetry, k).resolve().map_err(err)?)))
                .collect::<Result<_, String>>()?
        }
        None => vec![(cfg.n, cfg.group.clone())],
    };
    let mut records = Vec::new();
    for (k, g) in &rows {
        let dimension = build_basis(*k, g).map_err(err)?.len();
        let burnside = burnside_dimension(*k, g).map_err(err)?;
        records.push((*k, dimension, burnside));
    }
    let body = match cfg.format {
        Format::Json => {
            let rows: Vec<_> = records
                .iter()
                .map(|(k, d, b)| json!({"n": k, "group": cfg.group_name, "dimension": d, "burnside": b.to_string()}))
                .collect();
            serde_json::Value::from(rows).to_string() + "\n"
        }
        _ => {
            let mut out = String::from("n,group,dimension,burnside\n");
            for (k, d, b) in &records {
                out.push_str(&format!("{k},{},{d},{b}\n", cfg.group_name));
            }
            out
        }
    };
    let code = if records.iter().all(|(_, d, b)| *d as u128 == *b) { 0 } else { 1 };
    Ok(Outcome { body, code })
}

pub fn check(common: &CommonArgs, matrix: &Path, generators_only: bool) -> CmdResult {
    let cfg = resolve(common)?;
    let m = read_matrix(matrix, cfg.n)?;
    let residual = m.unitarity_residual();
    if residual >= symcirc_core::group_ops::UNITARITY_TOL {
        eprintln!("warning: input is not unitary (‖UU†−1‖_F = {residual}); reporting defects anyway");
    }
    let mode = if generators_only { InvarianceMode::GeneratorsOnly } else { InvarianceMode::Full };
    let report = is_invariant_with_mode(&m, &cfg.group, cfg.tol, mode).map_err(err)?;
    let checked = match mode {
        InvarianceMode::Full => cfg.group.elements(),
        InvarianceMode::GeneratorsOnly => cfg.group.generators(),
    };
    let verdict = if report.invariant { "invariant" } else { "not-invariant" };
    let body = match cfg.format {
        Format::Json => {
            let defects: Vec<_> = checked
                .iter()
                .zip(&report.residuals)
                .map(|(e, d)| json!({"element": e.label(), "defect": d}))
                .collect();
            json!({
                "invariant": report.invariant,
                "max_defect": report.max_residual,
                "tolerance": cfg.tol,
                "unitarity_residual": residual,
                "defects": defects,
            })
            .to_string()
                + "\n"
        }
        _ => {
            let mut out = String::from("index,element,defect\n");
            for (i, (e, d)) in checked.iter().zip(&report.residuals).enumerate() {
                out.push_str(&format!("{i},{},{d:e}\n", e.label()));
            }
            out.push_str(&format!("max_defect,{:e}\nverdict,{verdict}\n", report.max_residual));
            out
        }
    };
    Ok(Outcome { body, code: if report.invariant { 0 } else { 1 } })
}

pub fn path(common: &CommonArgs, matrix: &Path, samples: usize) -> CmdResult {
    let cfg = resolve(common)?;
    if samples == 0 {
        return Err("--samples must be at least 1".into());
    }
    let a = Unitary::new(read_matrix(matrix, cfg.n)?).map_err(err)?;
    let path = UnitaryPath::new(&a).map_err(err)?;
    let mut rows = Vec::with_capacity(samples + 1);
    for k in 0..=samples {
        let t = k as f64 / samples as f64;
        let at = path.at(t).map_err(err)?;
        let defect = symcirc_core::is_invariant(at.matrix(), &cfg.group, cfg.tol).map_err(err)?.max_residual;
        rows.push((t, defect, at.unitarity_residual()));
    }
    let body = match cfg.format {
        Format::Json => {
            let rows: Vec<_> =
                rows.iter().map(|(t, d, u)| json!({"t": t, "invariance_defect": d, "unitarity_residual": u})).collect();
            serde_json::Value::from(rows).to_string() + "\n"
        }
        _ => {
            let mut out = String::from("t,invariance_defect,unitarity_residual\n");
            for (t, d, u) in rows {
                out.push_str(&format!("{t},{d:e},{u:e}\n"));
            }
            out
        }
    };
    Ok(Outcome::ok(body))
}

pub fn synth(
    common: &CommonArgs,
    element: Option<usize>,
    pauli: Option<&str>,
    sum: Option<&Path>,
    eval: Option<&Path>,
    alpha: f64,
) -> CmdResult {
    if let Some(file) = eval {
        let text = std::fs::read_to_string(file).map_err(|e| format!("cannot read {}: {e}", file.display()))?;
        let circuit = Circuit::from_text(&text).map_err(err)?;
        let u = circuit_to_matrix(&circuit).map_err(err)?;
        return Ok(Outcome::ok(u.matrix().to_json() + "\n"));
    }
    let circuit = if let Some(letters) = pauli {
        let p: PauliString = letters.parse().map_err(err)?;
        synthesize_pauli_exponential(&p, alpha)
    } else {
        let target = match (element, sum) {
            (Some(index), _) => {
                let cfg = resolve(common)?;
                let basis = build_basis(cfg.n, &cfg.group).map_err(err)?;
                basis
                    .elements()
                    .get(index)
                    .cloned()
                    .ok_or_else(|| format!("element {index} out of range (dimension {})", basis.len()))?
            }
            (None, Some(file)) => {
                let text = std::fs::read_to_string(file).map_err(|e| format!("cannot read {}: {e}", file.display()))?;
                PauliSum::from_text(&text).map_err(err)?
            }
            (None, None) => return Err("one of --element, --pauli, --sum or --eval is required".into()),
        };
        synthesize_sum_exponential(&target, alpha)
    };
    match circuit {
        Ok(c) => {
            let body = match common.format {
                Format::Json => {
                    let gates: Vec<String> = c.gates().iter().map(|g| g.to_string()).collect();
                    json!({"qubits": c.num_qubits(), "gates": gates}).to_string() + "\n"
                }
                _ => c.to_text(),
            };
            Ok(Outcome::ok(body))
        }
        Err(e @ (Error::ProductFormulaInapplicable(_) | Error::Convention(_))) => {
            eprintln!("refused: {e}");
            Ok(Outcome { body: String::new(), code: 1 })
        }
        Err(e) => Err(err(e)),
    }
}

pub fn random(common: &CommonArgs, depth: usize) -> CmdResult {
    let cfg = resolve(common)?;
    let u = random_invariant(cfg.n, &cfg.group, cfg.seed, depth).map_err(err)?;
    Ok(Outcome::ok(u.matrix().to_json() + "\n"))
}

pub fn verify(common: &CommonArgs, pairs: usize, paths: usize) -> CmdResult {
    let cfg = resolve(common)?;
    let config = VerifyConfig {
        tol: cfg.tol,
        seed: cfg.seed,
        composition_pairs: pairs,
        path_samples: paths,
        ..VerifyConfig::default()
    };
    let results = run_all(cfg.n, &cfg.group, &config).map_err(err)?;
    let all = results.iter().all(|r| r.passed);
    let body = match cfg.format {
        Format::Json => {
            let rows: Vec<_> = results
                .iter()
                .map(|r| {
                    json!({
                        "suite": r.suite.name(),
                        "passed": r.passed,
                        "checks": r.checks,
                        "max_residual": r.max_residual,
                        "threshold": r.threshold,
                    })
                })
                .collect();
            json!({"n": cfg.n, "group": cfg.group_name, "passed": all, "suites": rows}).to_string() + "\n"
        }
        _ => {
            let mut out = String::from("suite,status,checks,max_residual,threshold\n");
            for r in &results {
                out.push_str(&format!("{r}\n"));
            }
            out.push_str(&format!("overall,{}\n", if all { "PASS" } else { "FAIL" }));
            out
        }
    };
    Ok(Outcome { body, code: if all { 0 } else { 1 } })
}
