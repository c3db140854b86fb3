//! Structured command reports shared by the `mam` binary and any embedding:
//! every subcommand is a function from a parsed configuration (plus options)
//! to a JSON payload, human-readable text lines, and warnings.
//!
//! Determinism contract: for a fixed input, fixed options, and fixed seed
//! the `payload` serializes to byte-identical JSON. Wall-clock timing lives
//! outside the payload for exactly that reason.

use std::collections::BTreeMap;
use std::path::Path;

use num_bigint::BigInt;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::classify::{self, Flavor, HypothesisStatus};
use crate::config::{
    check_condition_k, check_weak_hyperbolicity, derive, Configuration, DeriveAction, WhReport,
};
use crate::contact::{ContactAnalyzer, EscapeDirection, SampleRegion};
use crate::cyclic::{cyclic_partition, CyclicError};
use crate::fixtures;
use crate::homology::{homology_z, Half, HomologyError};
use crate::oracle::brute_force_homology;
use crate::polytope::{build_face_lattice, verify_simple, FaceLattice};

/// Version stamp of the report JSON layout.
pub const SCHEMA_VERSION: u64 = 1;

/// Failure classes, mapped one-to-one onto process exit codes.
#[derive(Debug, Error)]
pub enum CliError {
    /// Bad invocation: unknown file, malformed flag value, index range.
    #[error("usage: {0}")]
    Usage(String),
    /// The input configuration fails validation.
    #[error("validation: {0}")]
    Validation(String),
    /// A computation refused to run within its resource cap.
    #[error("resource: {0}")]
    Resource(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Validation(_) => 3,
            CliError::Resource(_) => 4,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "usage",
            CliError::Validation(_) => "validation",
            CliError::Resource(_) => "resource",
        }
    }
}

/// What one subcommand produced before wrapping into a `Report`.
#[derive(Debug, Clone)]
pub struct CommandOutput {
    pub payload: Value,
    pub text: Vec<String>,
    pub warnings: Vec<String>,
    /// Process exit code; `check` reports inadmissible inputs with code 3
    /// while still emitting a full payload.
    pub exit_code: i32,
}

impl CommandOutput {
    fn ok(payload: Value, text: Vec<String>) -> Self {
        CommandOutput { payload, text, warnings: Vec::new(), exit_code: 0 }
    }
}

/// Finished report: the envelope the CLI prints.
#[derive(Debug, Clone)]
pub struct Report {
    pub command: String,
    pub input_digest: Option<String>,
    pub payload: Value,
    pub warnings: Vec<String>,
    pub timing_ms: u128,
}

impl Report {
    pub fn new(
        command: String,
        input: Option<&[u8]>,
        out: &CommandOutput,
        timing_ms: u128,
    ) -> Self {
        Report {
            command,
            input_digest: input.map(digest_hex),
            payload: out.payload.clone(),
            warnings: out.warnings.clone(),
            timing_ms,
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "schema": SCHEMA_VERSION,
            "command": self.command,
            "input_digest": self.input_digest,
            "payload": self.payload,
            "warnings": self.warnings,
            "timing_ms": self.timing_ms,
        })
    }

    pub fn render_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_json()).expect("report serializes");
        s.push('\n');
        s
    }
}

/// SHA-256 of the raw input bytes, hex encoded.
pub fn digest_hex(bytes: &[u8]) -> String {
    let mut h = Sha256::new();
    h.update(bytes);
    format!("{:x}", h.finalize())
}

/// Error envelope for failed runs (printed in `--json` mode).
pub fn error_json(command: &str, err: &CliError) -> Value {
    json!({
        "schema": SCHEMA_VERSION,
        "command": command,
        "error": { "kind": err.kind(), "message": err.to_string() },
    })
}

fn json_bigint(v: &BigInt) -> Value {
    match i64::try_from(v.clone()) {
        Ok(i) => json!(i),
        Err(_) => json!(v.to_string()),
    }
}

fn one_based(indices: &[usize]) -> Vec<usize> {
    indices.iter().map(|&i| i + 1).collect()
}

fn set_text(indices: &[usize]) -> String {
    let inner: Vec<String> = indices.iter().map(|i| (i + 1).to_string()).collect();
    format!("{{{}}}", inner.join(", "))
}

fn flavor_name(f: Flavor) -> &'static str {
    match f {
        Flavor::Real => "real",
        Flavor::Complex => "complex",
    }
}

fn status_json(st: &HypothesisStatus) -> Value {
    json!({
        "dim_ok": st.dim_ok,
        "h1_zero": st.h1_zero,
        "verdict": st.verdict.to_string(),
        "notes": st.notes,
    })
}

/// Shared gate for the commands that need an admissible, nonempty manifold.
fn validated_lattice(cfg: &Configuration) -> Result<FaceLattice, CliError> {
    if let WhReport::Violated { witness } = check_weak_hyperbolicity(cfg) {
        return Err(CliError::Validation(format!(
            "weak_hyperbolicity: witness {}",
            set_text(&witness)
        )));
    }
    let lat = build_face_lattice(cfg)
        .map_err(|e| CliError::Validation(e.to_string()))?;
    if lat.empty_manifold {
        return Err(CliError::Validation(
            "empty_manifold: the origin is not in the hull of the vectors".into(),
        ));
    }
    Ok(lat)
}

fn require_k2(cfg: &Configuration) -> Result<(), CliError> {
    if cfg.k != 2 {
        return Err(CliError::Validation(format!("not_k2: k = {} (need k = 2)", cfg.k)));
    }
    Ok(())
}

fn partition_for(cfg: &Configuration) -> Result<crate::cyclic::CyclicPartition, CliError> {
    cyclic_partition(cfg).map_err(|e| match e {
        CyclicError::NotK2(_) | CyclicError::EmptyOrDegenerate | CyclicError::EvenClasses(_) => {
            CliError::Validation(e.to_string())
        }
    })
}

/// `check`: admissibility report. Inadmissible inputs still produce a full
/// payload; the exit code alone distinguishes them.
pub fn run_check(cfg: &Configuration) -> Result<CommandOutput, CliError> {
    let wh = check_weak_hyperbolicity(cfg);
    let ck = check_condition_k(cfg);
    let (witness, wh_ok) = match &wh {
        WhReport::Ok => (Value::Null, true),
        WhReport::Violated { witness } => (json!(one_based(witness)), false),
    };
    let (empty, polytope_dim) = if wh_ok {
        match build_face_lattice(cfg) {
            Ok(lat) => (lat.empty_manifold, lat.dim_p),
            Err(_) => (true, None),
        }
    } else {
        (true, None)
    };
    let n = cfg.n();
    let admissible = wh_ok && !empty;
    let reason = if !wh_ok {
        json!("weak_hyperbolicity")
    } else if empty {
        json!("empty_manifold")
    } else {
        Value::Null
    };
    let payload = json!({
        "k": cfg.k,
        "n": n,
        "weakly_hyperbolic": wh_ok,
        "witness": witness,
        "condition_k": {
            "holds": ck.holds,
            "solution_dim": ck.solution_dim,
            "basis": ck.basis.iter()
                .map(|row| row.iter().map(json_bigint).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
        },
        "empty_manifold": empty,
        "polytope_dim": polytope_dim,
        "dim_real": if admissible { json!(n - cfg.k - 1) } else { Value::Null },
        "dim_complex": if admissible { json!(2 * n - cfg.k - 1) } else { Value::Null },
        "admissible": admissible,
        "reason": reason,
    });
    let mut text = vec![format!("weakly hyperbolic: {wh_ok}")];
    if let WhReport::Violated { witness } = &wh {
        text.push(format!("witness: {}", set_text(witness)));
    }
    text.push(format!(
        "condition K: {} (solution dim {})",
        if ck.holds { "holds" } else { "fails" },
        ck.solution_dim
    ));
    text.push(format!("empty manifold: {empty}"));
    if admissible {
        text.push(format!(
            "dimensions: real {} / complex {}",
            n - cfg.k - 1,
            2 * n - cfg.k - 1
        ));
        text.push("admissible: true".into());
    } else {
        text.push("admissible: false".into());
    }
    let mut out = CommandOutput::ok(payload, text);
    if !admissible {
        out.exit_code = 3;
    }
    Ok(out)
}

/// `lattice`: face counts of the simple polytope P.
pub fn run_lattice(cfg: &Configuration) -> Result<CommandOutput, CliError> {
    let lat = validated_lattice(cfg)?;
    let dim = lat.dim_p.expect("nonempty manifold has a polytope dimension");
    let mut counts = vec![0usize; dim + 1];
    for f in &lat.faces {
        counts[f.dim] += 1;
    }
    let simple = verify_simple(&lat);
    let payload = json!({
        "polytope_dim": dim,
        "face_counts_by_dim": counts,
        "total_faces": lat.faces.len(),
        "cover_relations": lat.covers.len(),
        "simple": simple,
        "euler_characteristic": lat.euler_characteristic(),
    });
    let text = vec![
        format!("polytope dimension: {dim}"),
        format!("face counts by dimension: {counts:?}"),
        format!("simple: {simple}"),
    ];
    Ok(CommandOutput::ok(payload, text))
}

/// Options for `homology`.
#[derive(Debug, Clone)]
pub struct HomologyOptions {
    /// Complexify (double) the configuration first.
    pub complex: bool,
    /// 1-based facet index whose half-space is removed (half manifold Z₊).
    pub exclude: Option<usize>,
    /// Also run the reflected-cell oracle and compare.
    pub oracle: bool,
    /// Simplex cap for the oracle's order complex.
    pub cap: usize,
}

/// `homology`: integer homology of Z (or Z₊) with an optional oracle check.
pub fn run_homology(cfg: &Configuration, opts: &HomologyOptions) -> Result<CommandOutput, CliError> {
    let cfg = if opts.complex {
        derive(cfg, DeriveAction::Complexify).map_err(|e| CliError::Validation(e.to_string()))?
    } else {
        cfg.clone()
    };
    let lat = validated_lattice(&cfg)?;
    let n = cfg.n();
    let half = match opts.exclude {
        None => Half::None,
        Some(i) => {
            if i == 0 || i > n {
                return Err(CliError::Usage(format!(
                    "--index {i} out of range 1..={n} (after any complexification)"
                )));
            }
            Half::Exclude(i - 1)
        }
    };
    let g = homology_z(&lat, half);
    let mut payload = json!({
        "flavor": if opts.complex { "complex" } else { "real" },
        "exclude": opts.exclude,
        "homology": g.to_json(),
        "euler_characteristic": g.euler(),
    });
    let mut text = vec![
        format!("ranks: {:?}", g.ranks()),
        format!(
            "torsion: {}",
            if g.is_torsion_free() { "none".to_string() } else { format!("{:?}", g.torsion()) }
        ),
        format!("euler characteristic: {}", g.euler()),
    ];
    if opts.oracle {
        if n > 12 {
            return Err(CliError::Resource(format!(
                "too_large: oracle supports n <= 12, got n = {n}"
            )));
        }
        let oracle = brute_force_homology(&lat, half, opts.cap).map_err(|e| match e {
            HomologyError::TooLarge { .. } => CliError::Resource(e.to_string()),
            HomologyError::Unsupported(_) => CliError::Validation(e.to_string()),
        })?;
        let agrees = oracle == g;
        payload["oracle"] = json!({ "agrees": agrees, "homology": oracle.to_json() });
        text.push(format!("formula == oracle: {agrees}"));
    }
    Ok(CommandOutput::ok(payload, text))
}

/// `partition`: the odd cyclic class partition of a plane configuration.
pub fn run_partition(cfg: &Configuration) -> Result<CommandOutput, CliError> {
    require_k2(cfg)?;
    let _ = validated_lattice(cfg)?;
    let part = partition_for(cfg)?;
    let sizes = part.sizes();
    let payload = json!({
        "sizes": sizes,
        "class_count": part.class_count(),
        "ell": part.ell(),
        "d": part.spans(),
        "classes": part.classes.iter().map(|c| one_based(c)).collect::<Vec<_>>(),
    });
    let classes_text: Vec<String> = part.classes.iter().map(|c| set_text(c)).collect();
    let text = vec![
        format!("class sizes: {sizes:?}"),
        format!("ell: {}", part.ell()),
        format!("d: {:?}", part.spans()),
        format!("classes: [{}]", classes_text.join(", ")),
    ];
    Ok(CommandOutput::ok(payload, text))
}

/// Options for `classify`.
#[derive(Debug, Clone)]
pub struct ClassifyOptions {
    pub complex: bool,
    /// Number of extra real quadric variables; switches to the extended
    /// variety (implies the complex model).
    pub s: Option<usize>,
}

/// `classify`: symbolic diffeomorphism type of Z, Z^C, or the extended
/// variety.
pub fn run_classify(cfg: &Configuration, opts: &ClassifyOptions) -> Result<CommandOutput, CliError> {
    require_k2(cfg)?;
    let _ = validated_lattice(cfg)?;
    let part = partition_for(cfg)?;
    if let Some(s) = opts.s {
        if s == 0 {
            return Err(CliError::Usage("--s must be at least 1".into()));
        }
        if cfg.n() <= 3 {
            return Err(CliError::Validation(format!(
                "extended classification needs n > 3, got n = {}",
                cfg.n()
            )));
        }
        let expr = classify::classify_z_s(&part, s);
        let payload = json!({
            "variety": "extended",
            "s": s,
            "expression": expr.to_string(),
            "dim": expr.dim(),
            "closed": expr.is_closed(),
        });
        let text = vec![
            format!("type: {expr}"),
            format!("dimension: {}", expr.dim()),
            "verdict: unconditional".into(),
        ];
        return Ok(CommandOutput::ok(payload, text));
    }
    let flavor = if opts.complex { Flavor::Complex } else { Flavor::Real };
    let (expr, status) = classify::classify_z(&part, flavor);
    let payload = json!({
        "variety": "closed",
        "flavor": flavor_name(flavor),
        "expression": expr.to_string(),
        "dim": expr.dim(),
        "closed": expr.is_closed(),
        "status": status_json(&status),
    });
    let mut text = vec![
        format!("type: {expr}"),
        format!("dimension: {}", expr.dim()),
        format!("verdict: {}", status.verdict),
    ];
    if !status.notes.is_empty() {
        text.push(format!("notes: {}", status.notes));
    }
    Ok(CommandOutput::ok(payload, text))
}

/// `openbook`: binding, page, and monodromy for the open book at one
/// coordinate.
pub fn run_openbook(
    cfg: &Configuration,
    index: usize,
    complex: bool,
) -> Result<CommandOutput, CliError> {
    require_k2(cfg)?;
    let _ = validated_lattice(cfg)?;
    let n = cfg.n();
    if index == 0 || index > n {
        return Err(CliError::Usage(format!("--index {index} out of range 1..={n}")));
    }
    let flavor = if complex { Flavor::Complex } else { Flavor::Real };
    let ob = classify::open_book_report(cfg, index - 1, flavor)
        .map_err(|e| CliError::Validation(e.to_string()))?;
    let binding_vectors: Vec<Vec<String>> = ob
        .binding_cfg
        .vectors
        .iter()
        .map(|v| v.iter().map(crate::rat::rational_to_string).collect())
        .collect();
    let payload = json!({
        "flavor": flavor_name(flavor),
        "index": index,
        "total": ob.total.to_string(),
        "binding": ob.binding.to_string(),
        "page": ob.page.to_string(),
        "monodromy": ob.monodromy,
        "status": status_json(&ob.status),
        "binding_cfg": { "k": ob.binding_cfg.k, "n": ob.binding_cfg.n(), "vectors": binding_vectors },
    });
    let mut text = vec![
        format!("total: {}", ob.total),
        format!("binding: {}", ob.binding),
        format!("page: {}", ob.page),
        format!("monodromy: {}", ob.monodromy),
        format!("verdict: {}", ob.status.verdict),
    ];
    if !ob.status.notes.is_empty() {
        text.push(format!("notes: {}", ob.status.notes));
    }
    Ok(CommandOutput::ok(payload, text))
}

/// Options for `contact`.
#[derive(Debug, Clone)]
pub struct ContactOptions {
    pub s: usize,
    pub samples: usize,
    pub seed: u64,
    pub tol: f64,
}

fn histogram_json(h: &BTreeMap<(usize, usize), usize>) -> Value {
    let mut m = serde_json::Map::new();
    for (&(a, b), &c) in h {
        m.insert(format!("({a},{b})"), json!(c));
    }
    Value::Object(m)
}

/// `contact`: seeded confoliation samples off and on `W`, plus Legendrian
/// escape paths from `W`.
pub fn run_contact(cfg: &Configuration, opts: &ContactOptions) -> Result<CommandOutput, CliError> {
    let analyzer = ContactAnalyzer::new(cfg, opts.s).map_err(|e| CliError::Validation(e.to_string()))?;
    let mut warnings = Vec::new();

    let run_region = |region: SampleRegion, warnings: &mut Vec<String>| {
        let mut ratios: Vec<f64> = Vec::new();
        let mut hist: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        let mut failures = 0usize;
        for i in 0..opts.samples {
            let seed = opts.seed.wrapping_add(i as u64);
            let weights = analyzer.seeded_weights(seed);
            match analyzer.analyze(seed, region, &weights, opts.tol) {
                Ok(sample) => {
                    ratios.push(sample.confoliation_value / sample.scale);
                    *hist.entry((sample.ker_dalpha_dim, sample.ker_both_dim)).or_insert(0) += 1;
                }
                Err(e) => {
                    failures += 1;
                    if failures <= 3 {
                        warnings.push(format!("{region:?} sample {i}: {e}"));
                    }
                }
            }
        }
        (ratios, hist, failures)
    };

    let (off_ratios, off_hist, off_failed) = run_region(SampleRegion::Generic, &mut warnings);
    let (on_ratios, on_hist, on_failed) = run_region(SampleRegion::OnW, &mut warnings);
    if off_ratios.is_empty() || on_ratios.is_empty() {
        return Err(CliError::Validation(
            "contact sampling failed on every draw; see warnings".into(),
        ));
    }

    let min_off = off_ratios.iter().cloned().fold(f64::INFINITY, f64::min);
    let max_off = off_ratios.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let max_abs_on = on_ratios.iter().fold(0.0f64, |m, r| m.max(r.abs()));

    let escapes = opts.samples.min(20);
    let mut escape_steps = Vec::new();
    let mut max_defect = 0.0f64;
    let mut escape_failed = 0usize;
    for i in 0..escapes {
        let seed = opts.seed.wrapping_add(i as u64);
        let weights = analyzer.seeded_weights(seed);
        let res = analyzer.sample(seed, SampleRegion::OnW).and_then(|pt| {
            analyzer.escape_path(&pt, &weights, 1e-3, 50, EscapeDirection::Transverse, 1e-6)
        });
        match res {
            Ok(rep) => {
                escape_steps.push(rep.steps);
                max_defect = max_defect.max(rep.legendrian_defect);
            }
            Err(e) => {
                escape_failed += 1;
                if escape_failed <= 3 {
                    warnings.push(format!("escape {i}: {e}"));
                }
            }
        }
    }

    let payload = json!({
        "s": opts.s,
        "n": analyzer.n,
        "samples": opts.samples,
        "seed": opts.seed,
        "tol": opts.tol,
        "off_w": {
            "count": off_ratios.len(),
            "failed": off_failed,
            "min_value_ratio": min_off,
            "max_value_ratio": max_off,
            "all_positive": min_off > 0.0,
            "kernel_dims": histogram_json(&off_hist),
        },
        "on_w": {
            "count": on_ratios.len(),
            "failed": on_failed,
            "max_abs_value_ratio": max_abs_on,
            "kernel_dims": histogram_json(&on_hist),
        },
        "escapes": {
            "count": escape_steps.len(),
            "failed": escape_failed,
            "max_steps": escape_steps.iter().max().copied(),
            "max_legendrian_defect": if escape_steps.is_empty() { Value::Null } else { json!(max_defect) },
        },
    });
    let text = vec![
        format!("off W: {} samples, value/scale in [{min_off:.3e}, {max_off:.3e}], all positive: {}", off_ratios.len(), min_off > 0.0),
        format!("on W: {} samples, max |value|/scale = {max_abs_on:.3e}", on_ratios.len()),
        format!(
            "escapes: {} paths, max steps {:?}, max Legendrian defect {max_defect:.3e}",
            escape_steps.len(),
            escape_steps.iter().max().copied()
        ),
    ];
    let mut out = CommandOutput::ok(payload, text);
    out.warnings = warnings;
    Ok(out)
}

/// `fixtures`: writes the bundled corpus to a directory.
pub fn run_fixtures(dir: &Path) -> Result<CommandOutput, CliError> {
    let written = fixtures::emit_fixture_suite(dir)
        .map_err(|e| CliError::Usage(format!("cannot write {}: {e}", dir.display())))?;
    let names: Vec<String> = written
        .iter()
        .map(|p| p.file_name().unwrap_or_default().to_string_lossy().into_owned())
        .collect();
    let payload = json!({
        "dir": dir.display().to_string(),
        "files": names,
        "count": names.len(),
    });
    let text = vec![format!("wrote {} files to {}", names.len(), dir.display())];
    Ok(CommandOutput::ok(payload, text))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::parse_configuration;
    use crate::fixtures::builtin;

    fn cfg(name: &str) -> Configuration {
        parse_configuration(builtin(name).expect(name).text).unwrap()
    }

    #[test]
    fn check_reports_admissibility_and_witnesses() {
        let out = run_check(&cfg("pentagon")).unwrap();
        assert_eq!(out.exit_code, 0);
        assert_eq!(out.payload["admissible"], json!(true));
        assert_eq!(out.payload["dim_real"], json!(2));

        let out = run_check(&cfg("negative_antipodal")).unwrap();
        assert_eq!(out.exit_code, 3);
        assert_eq!(out.payload["witness"], json!([1, 2]));
        assert_eq!(out.payload["reason"], json!("weak_hyperbolicity"));

        let out = run_check(&cfg("negative_zero")).unwrap();
        assert_eq!(out.exit_code, 3);
        assert_eq!(out.payload["witness"], json!([1]));

        let out = run_check(&cfg("negative_outside")).unwrap();
        assert_eq!(out.exit_code, 3);
        assert_eq!(out.payload["reason"], json!("empty_manifold"));
    }

    #[test]
    fn homology_command_matches_oracle_on_the_pentagon() {
        let opts = HomologyOptions { complex: false, exclude: None, oracle: true, cap: 2_000_000 };
        let out = run_homology(&cfg("pentagon"), &opts).unwrap();
        assert_eq!(out.payload["homology"]["ranks"], json!([1, 10, 1]));
        assert_eq!(out.payload["oracle"]["agrees"], json!(true));
        assert!(out.text.iter().any(|l| l == "formula == oracle: true"));
    }

    #[test]
    fn classify_and_partition_payloads() {
        let opts = ClassifyOptions { complex: true, s: None };
        let out = run_classify(&cfg("pentagon"), &opts).unwrap();
        assert_eq!(out.payload["expression"], json!("#_5 (S^3 x S^4)"));

        let out = run_partition(&cfg("quint_pairs")).unwrap();
        assert_eq!(out.payload["sizes"], json!([2, 1, 2]));
        assert_eq!(out.payload["classes"], json!([[1, 2], [3], [4, 5]]));

        let err = run_partition(&cfg("simplex3")).unwrap_err();
        assert_eq!(err.exit_code(), 3);
    }

    #[test]
    fn openbook_payload_for_the_tripled_pentagon() {
        let out = run_openbook(&cfg("pentagon_third_tripled"), 1, true).unwrap();
        assert_eq!(out.payload["binding"], json!("S^1 x S^1 x S^7"));
        assert_eq!(
            out.payload["page"],
            json!("((S^3 x S^7) \\ D^10) [+] (Ext(S^1 x S^1 in S^10))")
        );
        assert!(run_openbook(&cfg("pentagon"), 9, true).is_err());
    }

    #[test]
    fn payload_is_deterministic() {
        let opts = ContactOptions { s: 1, samples: 4, seed: 7, tol: 1e-8 };
        let a = run_contact(&cfg("pentagon"), &opts).unwrap();
        let b = run_contact(&cfg("pentagon"), &opts).unwrap();
        assert_eq!(
            serde_json::to_string(&a.payload).unwrap(),
            serde_json::to_string(&b.payload).unwrap()
        );
        assert_eq!(a.payload["off_w"]["all_positive"], json!(true));
    }

    #[test]
    fn report_envelope_has_schema_and_digest() {
        let out = run_lattice(&cfg("pentagon")).unwrap();
        let report = Report::new("lattice pentagon.cfg".into(), Some(b"demo"), &out, 12);
        let v = report.to_json();
        assert_eq!(v["schema"], json!(1));
        assert_eq!(
            v["input_digest"],
            json!("2a97516c354b68848cdbd8f54a226a0a55b21ed138e207ad6c5cbb9c00aa5aea")
        );
    }
}
