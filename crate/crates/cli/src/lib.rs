//! Suite runner and basis export behind the `sostar` binary.

use std::fmt;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::ValueEnum;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use sostar_core::clifford::{dictionary_matrix, spin26_generators, spin_pairs, Chirality};
use sostar_core::isogeny::{verify_sostar2, verify_sostar4, verify_sostar6, verify_tables};
use sostar_core::liealg::{
    basis_sostar4_a, basis_sostar6_complex, basis_sostar6_quat, basis_su2_sl2_s, basis_su31,
    basis_su31_twisted, generic_basis, invariant_signature, killing, structure_constants,
    Family, Generators, LieBasis, Realization, StructureEntry,
};
use sostar_core::report::SuiteReport;
use sostar_core::triality::{triality_bases, triality_setup};
use sostar_core::{CMatrix, DEFAULT_TOL};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    All,
    Sostar2,
    Sostar4,
    Sostar6,
    Sostar8,
    Tables,
    Triality,
}

impl Suite {
    const EACH: [Suite; 6] = [
        Suite::Sostar2,
        Suite::Sostar4,
        Suite::Sostar6,
        Suite::Sostar8,
        Suite::Tables,
        Suite::Triality,
    ];

    pub fn expand(self) -> Vec<Suite> {
        match self {
            Suite::All => Self::EACH.to_vec(),
            s => vec![s],
        }
    }

    pub fn run(self, tol: f64) -> Vec<SuiteReport> {
        match self {
            Suite::All => Self::EACH.par_iter().flat_map(|s| s.run(tol)).collect(),
            Suite::Sostar2 => vec![verify_sostar2(tol)],
            Suite::Sostar4 => vec![verify_sostar4(tol)],
            Suite::Sostar6 => vec![verify_sostar6(tol)],
            Suite::Sostar8 => vec![sostar_core::clifford::verify_sostar8()],
            Suite::Tables => vec![verify_tables()],
            Suite::Triality => vec![sostar_core::triality::verify_triality()],
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SuiteSelector {
    pub suite: Suite,
    pub tol: f64,
    pub output_path: Option<PathBuf>,
}

impl Default for SuiteSelector {
    fn default() -> Self {
        Self {
            suite: Suite::All,
            tol: DEFAULT_TOL,
            output_path: None,
        }
    }
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        EXIT_USAGE
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage error: {m}"),
            CliError::Io(m) => write!(f, "i/o error: {m}"),
        }
    }
}

impl std::error::Error for CliError {}

#[derive(Serialize)]
pub struct RunReport {
    pub suites: Vec<SuiteReport>,
    pub tool_version: &'static str,
}

impl RunReport {
    pub fn passed(&self) -> bool {
        self.suites.iter().all(SuiteReport::passed)
    }
}

pub fn parse_tol(s: &str) -> Result<f64, String> {
    let t: f64 = s.parse().map_err(|e| format!("{e}"))?;
    if t.is_finite() && t > 0.0 {
        Ok(t)
    } else {
        Err(format!("tolerance must be a positive number, got {s}"))
    }
}

pub fn collect(selector: &SuiteSelector) -> Result<RunReport, CliError> {
    if !(selector.tol.is_finite() && selector.tol > 0.0) {
        return Err(CliError::Usage(format!("tolerance must be positive, got {}", selector.tol)));
    }
    Ok(RunReport {
        suites: selector.suite.run(selector.tol),
        tool_version: env!("CARGO_PKG_VERSION"),
    })
}

pub fn write_summary(report: &RunReport, out: &mut dyn Write) -> std::io::Result<()> {
    let width = report
        .suites
        .iter()
        .flat_map(|s| s.claims.iter().map(|c| c.claim_id.len()))
        .max()
        .unwrap_or(5)
        .max(5);
    writeln!(out, "{:<6}  {:<width$}  {:>9}", "result", "claim", "witnesses")?;
    let (mut passed, mut failed) = (0, 0);
    for s in &report.suites {
        for c in &s.claims {
            if c.passed {
                passed += 1;
            } else {
                failed += 1;
            }
            let tag = if c.passed { "PASS" } else { "FAIL" };
            writeln!(out, "{tag:<6}  {:<width$}  {:>9}", c.claim_id, c.witnesses.len())?;
            if !c.passed {
                for w in c.witnesses.iter().filter(|w| !w.ok) {
                    writeln!(out, "        - {}: {}", w.description, w.value)?;
                }
            }
        }
    }
    writeln!(out, "{} claims: {passed} passed, {failed} failed", passed + failed)
}

pub fn report_json(report: &RunReport) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("report serializes");
    s.push('\n');
    s
}

/// Runs the selected suites, prints the summary and optionally writes the
/// JSON report. Returns the process exit code.
pub fn run(selector: &SuiteSelector, out: &mut dyn Write) -> i32 {
    let report = match collect(selector) {
        Ok(r) => r,
        Err(e) => {
            let _ = writeln!(out, "{e}");
            return e.exit_code();
        }
    };
    if write_summary(&report, out).is_err() {
        return EXIT_USAGE;
    }
    if let Some(path) = &selector.output_path {
        if let Err(e) = fs::write(path, report_json(&report)) {
            let _ = writeln!(out, "{}", CliError::Io(format!("{}: {e}", path.display())));
            return EXIT_USAGE;
        }
    }
    if report.passed() {
        EXIT_OK
    } else {
        EXIT_FAILED
    }
}

pub const EXPORT_FAMILIES: [&str; 13] = [
    "su31",
    "su31-twisted",
    "sostar",
    "spstar",
    "slh",
    "sostar4-a",
    "su2-sl2-s",
    "sostar6",
    "sostar6-complex",
    "spin26-l",
    "spin26-r",
    "spin26-v",
    "theta-dictionary",
];

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ExportRequest {
    pub family: String,
    pub n: Option<usize>,
    pub p: Option<usize>,
    pub q: Option<usize>,
}

#[derive(Serialize)]
pub struct ExportedBasis {
    pub name: String,
    pub realization: Realization,
    pub dimension: usize,
    pub labels: Vec<String>,
    pub generators: Vec<Value>,
    pub structure_constants: Vec<StructureEntry>,
    pub killing_signature: [usize; 3],
    pub invariant_signature: [usize; 3],
}

pub fn describe(basis: &LieBasis) -> Result<ExportedBasis, CliError> {
    let fail = |e: sostar_core::Error| CliError::Usage(e.to_string());
    let f = structure_constants(basis).map_err(fail)?;
    let k = killing(basis).map_err(fail)?;
    let inv = invariant_signature(basis).map_err(fail)?;
    let generators = match basis.generators() {
        Generators::Quaternionic(g) => g.iter().map(|m| serde_json::to_value(m).expect("serializes")).collect(),
        Generators::Complex(g) => g
            .iter()
            .map(|m| serde_json::to_value(CMatrix::Exact(m.clone())).expect("serializes"))
            .collect(),
    };
    Ok(ExportedBasis {
        name: basis.name().to_string(),
        realization: basis.realization(),
        dimension: basis.dim(),
        labels: basis.labels().to_vec(),
        generators,
        structure_constants: f.sparse(),
        killing_signature: [k.signature.0, k.signature.1, k.signature.2],
        invariant_signature: [inv.0, inv.1, inv.2],
    })
}

fn family_dims(req: &ExportRequest, family: Family) -> Result<(usize, usize, usize), CliError> {
    let missing = || CliError::Usage(format!("--n is required for family {}", req.family));
    match family {
        Family::SpStar => {
            let (p, q) = match (req.n, req.p, req.q) {
                (_, Some(p), Some(q)) => (p, q),
                (Some(n), Some(p), None) if p <= n => (p, n - p),
                (Some(n), None, Some(q)) if q <= n => (n - q, q),
                (Some(n), None, None) => (n, 0),
                _ => return Err(CliError::Usage("sp* needs --n and/or --p/--q with p + q = n".into())),
            };
            let n = req.n.unwrap_or(p + q);
            if p + q != n {
                return Err(CliError::Usage(format!("p + q = {} but n = {n}", p + q)));
            }
            Ok((n, p, q))
        }
        _ => Ok((req.n.ok_or_else(missing)?, 0, 0)),
    }
}

fn spin_basis(which: &str) -> Result<LieBasis, CliError> {
    let fail = |e: sostar_core::Error| CliError::Usage(e.to_string());
    let set = spin26_generators().map_err(fail)?;
    let labels = |prefix: &str| -> Vec<String> {
        spin_pairs().iter().map(|(i, j)| format!("{prefix}{i}{j}")).collect()
    };
    match which {
        "spin26-l" => set.basis(Chirality::Left).map_err(fail),
        "spin26-r" => set.basis(Chirality::Right).map_err(fail),
        _ => {
            let b = triality_bases(&set, &triality_setup()).map_err(fail)?;
            LieBasis::new("spin(2,6) vector", Generators::Complex(b.v), labels("V")).map_err(fail)
        }
    }
}

fn dictionary_json() -> Value {
    let m = dictionary_matrix();
    let rows: Vec<Vec<i64>> = (0..m.rows())
        .map(|r| {
            (0..m.cols())
                .map(|c| {
                    let v = m.get(r, c);
                    if v.is_zero() {
                        0
                    } else if v.is_positive() {
                        1
                    } else {
                        -1
                    }
                })
                .collect()
        })
        .collect();
    json!({
        "name": "theta-to-a dictionary",
        "rows": (1..=28).map(|k| format!("a{k}")).collect::<Vec<_>>(),
        "columns": spin_pairs().iter().map(|(i, j)| format!("theta{i}{j}")).collect::<Vec<_>>(),
        "matrix": rows,
    })
}

pub fn export(req: &ExportRequest) -> Result<Value, CliError> {
    let fail = |e: sostar_core::Error| CliError::Usage(e.to_string());
    let basis = match req.family.as_str() {
        "su31" => basis_su31(),
        "su31-twisted" => basis_su31_twisted(),
        "sostar4-a" => basis_sostar4_a(),
        "su2-sl2-s" => basis_su2_sl2_s(),
        "sostar6" => basis_sostar6_quat(),
        "sostar6-complex" => basis_sostar6_complex(),
        "spin26-l" | "spin26-r" | "spin26-v" => spin_basis(&req.family)?,
        "theta-dictionary" => return Ok(dictionary_json()),
        other => {
            let family: Family = other.parse().map_err(|_| {
                CliError::Usage(format!(
                    "unknown family {other:?}; expected one of {}",
                    EXPORT_FAMILIES.join(", ")
                ))
            })?;
            let (n, p, q) = family_dims(req, family)?;
            generic_basis(family, n, p, q).map_err(fail)?
        }
    };
    Ok(serde_json::to_value(describe(&basis)?).expect("serializes"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn req(family: &str, n: Option<usize>) -> ExportRequest {
        ExportRequest {
            family: family.into(),
            n,
            ..Default::default()
        }
    }

    #[test]
    fn suite_expansion_order() {
        assert_eq!(Suite::All.expand().len(), 6);
        assert_eq!(Suite::Tables.expand(), vec![Suite::Tables]);
    }

    #[test]
    fn tolerance_parsing() {
        assert_eq!(parse_tol("1e-9"), Ok(1e-9));
        assert!(parse_tol("0").is_err());
        assert!(parse_tol("-1").is_err());
        assert!(parse_tol("nan").is_err());
    }

    #[test]
    fn nonpositive_tolerance_is_usage_error() {
        let sel = SuiteSelector {
            suite: Suite::Sostar2,
            tol: 0.0,
            output_path: None,
        };
        let mut out = Vec::new();
        assert_eq!(run(&sel, &mut out), EXIT_USAGE);
    }

    #[test]
    fn sostar6_summary() {
        let sel = SuiteSelector {
            suite: Suite::Sostar6,
            ..Default::default()
        };
        let mut out = Vec::new();
        assert_eq!(run(&sel, &mut out), EXIT_OK);
        let text = String::from_utf8(out).unwrap();
        assert!(text.ends_with("5 claims: 5 passed, 0 failed\n"), "{text}");
    }

    #[test]
    fn export_sizes() {
        assert_eq!(export(&req("su31", None)).unwrap()["generators"].as_array().unwrap().len(), 15);
        assert_eq!(export(&req("sostar", Some(4))).unwrap()["dimension"], 28);
        assert_eq!(export(&req("sostar", Some(1))).unwrap()["dimension"], 1);
        let sp = ExportRequest {
            family: "spstar".into(),
            n: Some(2),
            p: Some(1),
            q: Some(1),
        };
        assert_eq!(export(&sp).unwrap()["killing_signature"], json!([6, 4, 0]));
    }

    #[test]
    fn export_errors() {
        assert!(matches!(export(&req("nope", None)), Err(CliError::Usage(_))));
        assert!(matches!(export(&req("sostar", None)), Err(CliError::Usage(_))));
        let sp = ExportRequest {
            family: "spstar".into(),
            n: Some(3),
            p: Some(1),
            q: Some(1),
        };
        assert!(export(&sp).is_err());
    }

    #[test]
    fn dictionary_export() {
        let d = export(&req("theta-dictionary", None)).unwrap();
        assert_eq!(d["matrix"][0][0], 1);
        assert_eq!(d["matrix"].as_array().unwrap().len(), 28);
    }
}
