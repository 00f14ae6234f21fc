//! The `splitalg` command line.
//!
//! Exit codes: 0 when every check passes, 1 when violations were found,
//! 2 on input or usage errors (unreadable file, unknown object, failed
//! construction precondition, exceeded search cap).

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use serde::Serialize;

use crate::algebra::{ActionSpec, AlgebraSpec, LinearMapSpec, MapEnd, RepresentationSpec, Signature};
use crate::constructions::{
    action_semidirect, aguiar_dendriform, aguiar_diassociative, differential_quadri, dual_extension,
    hemisemidirect, induced_quadri, induced_six, semidirect, sum_collapse_quadri, sum_collapse_six,
    DifferentialDendriformSpec,
};
use crate::document::{Document, ObjectRef};
use crate::error::{Error, Result};
use crate::identity::{check, check_morphism, identity_pairing, CheckOptions, ViolationReport, DEFAULT_CAP, CATALOG_NAMES};
use crate::linalg::{format_rational, parse_rational, Rational};
use crate::operators::{
    check_dend_averaging, check_homomorphic_relative, check_operator, check_relative_averaging, search_operators,
    OperatorKind, OperatorVerdict, Subject, DEFAULT_SEARCH_CAP,
};
use crate::quotients::{embed_averaging, quadri_to_relative_setup, quotient_algebra, six_to_homomorphic_setup, splitting_ideal};

/// Environment variable selecting the number of worker threads.
pub const THREADS_ENV: &str = "SPLITALG_THREADS";

pub const RECIPES: [&str; 15] = [
    "semidirect",
    "hemisemidirect",
    "action-semidirect",
    "aguiar-dendriform",
    "aguiar-diass",
    "induced-quadri",
    "induced-six",
    "differential-quadri",
    "dual-extension",
    "sum-diass",
    "sum-triass",
    "quotient-dend",
    "embed-averaging",
    "quadri-to-relative",
    "six-to-homomorphic",
];

#[derive(Debug, Parser)]
#[command(name = "splitalg", version, about = "Check and construct dendriform-type algebras over the rationals")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check an object against an identity catalog.
    Check {
        file: PathBuf,
        #[arg(long)]
        object: String,
        #[arg(long)]
        catalog: String,
        /// Also check every redundant pair of each chain.
        #[arg(long)]
        paranoid: bool,
        #[arg(long)]
        json: bool,
        /// Maximum number of violations reported.
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
    },
    /// Check a linear map against an operator definition.
    CheckOperator {
        file: PathBuf,
        #[arg(long)]
        map: String,
        /// rota-baxter, averaging, assoc-averaging, dend-averaging,
        /// relative-averaging, homomorphic-relative or graph.
        #[arg(long)]
        kind: String,
        /// Object the operator acts on; defaults to the map's target.
        #[arg(long)]
        on: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Run a construction and write the result as a document.
    Construct {
        file: PathBuf,
        #[arg(long)]
        recipe: String,
        /// Output document; `-` writes to standard output.
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        object: Option<String>,
        #[arg(long)]
        map: Option<String>,
        /// Skip re-verification of the output.
        #[arg(long)]
        no_verify: bool,
        #[arg(long)]
        json: bool,
    },
    /// Enumerate all operators with entries from a grid that pass a check.
    Search {
        file: PathBuf,
        #[arg(long)]
        object: String,
        #[arg(long)]
        kind: String,
        /// Comma-separated rationals, e.g. `-1,0,1/2`.
        #[arg(long, allow_hyphen_values = true)]
        grid: String,
        #[arg(long, default_value_t = DEFAULT_SEARCH_CAP)]
        cap: u64,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommandOutcome {
    pub exit_code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl CommandOutcome {
    fn usage(message: impl Into<String>) -> Self {
        CommandOutcome {
            exit_code: 2,
            stdout: String::new(),
            stderr: message.into(),
        }
    }

    fn verdict(passed: bool, stdout: String) -> Self {
        CommandOutcome {
            exit_code: if passed { 0 } else { 1 },
            stdout,
            stderr: String::new(),
        }
    }
}

/// Applies the worker-count environment variable to the global pool.
pub fn configure_threads() {
    if let Some(n) = std::env::var(THREADS_ENV).ok().and_then(|v| v.parse::<usize>().ok()) {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
}

/// Runs one invocation; `args` includes the program name.
pub fn run<I, T>(args: I) -> CommandOutcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    CommandOutcome { exit_code: 0, stdout: text, stderr: String::new() }
                }
                _ => CommandOutcome::usage(text),
            };
        }
    };
    let result = match cli.command {
        Command::Check { file, object, catalog, paranoid, json, cap } => {
            cmd_check(&file, &object, &catalog, CheckOptions { paranoid, cap }, json)
        }
        Command::CheckOperator { file, map, kind, on, json } => cmd_check_operator(&file, &map, &kind, on.as_deref(), json),
        Command::Construct { file, recipe, out, object, map, no_verify, json } => {
            cmd_construct(&file, &recipe, &out, object.as_deref(), map.as_deref(), !no_verify, json)
        }
        Command::Search { file, object, kind, grid, cap, json } => cmd_search(&file, &object, &kind, &grid, cap, json),
    };
    result.unwrap_or_else(|e| match e {
        Error::Precondition { what, report } => {
            CommandOutcome::usage(format!("error: {what}\n{}", report.render_text()))
        }
        other => CommandOutcome::usage(format!("error: {other}\n")),
    })
}

fn load(file: &PathBuf) -> Result<Document> {
    let text = fs::read_to_string(file)
        .map_err(|e| Error::Invalid(format!("cannot read {}: {e}", file.display())))?;
    Document::parse(&text)
}

fn run_check(object: ObjectRef<'_>, catalog: &str, options: CheckOptions) -> Result<ViolationReport> {
    match object {
        ObjectRef::Algebra(a) => check(a, catalog, options),
        ObjectRef::Representation(r) => check(r, catalog, options),
        ObjectRef::Action(a) => check(a, catalog, options),
    }
}

fn cmd_check(file: &PathBuf, object: &str, catalog: &str, options: CheckOptions, json: bool) -> Result<CommandOutcome> {
    let doc = load(file)?;
    if !CATALOG_NAMES.contains(&catalog) {
        return Err(Error::UnknownCatalog(catalog.to_string()));
    }
    let report = run_check(doc.object(object)?, catalog, options)?;
    let out = if json {
        format!("{}\n", report.to_json())
    } else {
        format!("check {object} against {catalog}\n{}", report.render_text())
    };
    Ok(CommandOutcome::verdict(report.passed(), out))
}

fn subject<'a>(object: ObjectRef<'a>) -> Subject<'a> {
    match object {
        ObjectRef::Algebra(a) => Subject::Algebra(a),
        ObjectRef::Representation(r) => Subject::Representation(r),
        ObjectRef::Action(a) => Subject::Action(a),
    }
}

/// Maps the CLI kind vocabulary to a checker; `averaging` picks the
/// variant matching the subject.
fn resolve_kind(kind: &str, subject: Subject<'_>) -> Result<OperatorKind> {
    match kind {
        "averaging" => Ok(match subject {
            Subject::Algebra(a) if a.signature() == Signature::Associative => OperatorKind::AssocAveraging,
            Subject::Algebra(_) => OperatorKind::DendAveraging,
            Subject::Representation(_) | Subject::Action(_) => OperatorKind::RelativeAveraging,
        }),
        "graph" => Ok(OperatorKind::GraphSubalgebra),
        other => other.parse(),
    }
}

fn cmd_check_operator(file: &PathBuf, map: &str, kind: &str, on: Option<&str>, json: bool) -> Result<CommandOutcome> {
    let doc = load(file)?;
    let t = doc.map(map)?;
    let on = match (on, t.target(), t.source()) {
        (Some(name), _, _) => name.to_string(),
        (None, MapEnd::Named(name), _) | (None, MapEnd::Dim, MapEnd::Named(name)) => name.clone(),
        (None, MapEnd::Dim, MapEnd::Dim) => {
            return Err(Error::Invalid(format!("map `{map}` names no algebra; pass --on")))
        }
    };
    let subj = subject(doc.object(&on)?);
    let verdict = check_operator(subj, resolve_kind(kind, subj)?, t)?;
    let out = if json {
        format!("{}\n", verdict.to_json())
    } else {
        format!("map {map} on {on}\n{}", verdict.render_text())
    };
    Ok(CommandOutcome::verdict(verdict.passed(), out))
}

#[derive(Serialize)]
struct VerificationEntry<'a> {
    label: &'a str,
    passed: bool,
    report: &'a ViolationReport,
}

#[derive(Serialize)]
struct ConstructSummary<'a> {
    recipe: &'a str,
    objects: Vec<String>,
    passed: bool,
    verification: Vec<VerificationEntry<'a>>,
}

/// Output of a recipe: the document to write and the re-verification
/// reports for it.
struct Built {
    doc: Document,
    checks: Vec<(String, ViolationReport)>,
}

fn catalog_check<T>(label: &str, object: &T, catalog: &str) -> Result<(String, ViolationReport)>
where
    T: crate::identity::OperationTable + Sync,
{
    Ok((format!("{label}: {catalog}"), check(object, catalog, CheckOptions::default())?))
}

fn operator_check(label: &str, verdict: OperatorVerdict) -> (String, ViolationReport) {
    (format!("{label}: {}", verdict.kind), verdict.report)
}

/// Tensor equality of two algebras' operations, phrased as the identity
/// map being a morphism with the identity pairing.
fn same_operations(label: &str, original: &AlgebraSpec, rebuilt: &AlgebraSpec) -> Result<(String, ViolationReport)> {
    let id = LinearMapSpec::identity(original.dimension());
    let report = check_morphism(&id, original, rebuilt, &identity_pairing(original), DEFAULT_CAP)?;
    Ok((format!("{label}: round trip"), report))
}

fn need<'a>(value: Option<&'a str>, flag: &str, recipe: &str) -> Result<&'a str> {
    value.ok_or_else(|| Error::Invalid(format!("recipe {recipe} needs --{flag}")))
}

fn representation_for(doc: &Document, name: &str) -> Result<(String, RepresentationSpec)> {
    match doc.object(name)? {
        ObjectRef::Representation(r) => Ok((doc.representations[name].base.clone(), r.clone())),
        ObjectRef::Algebra(a) => Ok((name.to_string(), RepresentationSpec::adjoint(a)?)),
        ObjectRef::Action(_) => Err(Error::Invalid(format!("`{name}` is an action, expected a representation"))),
    }
}

fn action_for(doc: &Document, name: &str) -> Result<(String, String, ActionSpec)> {
    match doc.object(name)? {
        ObjectRef::Action(a) => {
            let e = &doc.actions[name];
            Ok((e.base.clone(), e.target.clone(), a.clone()))
        }
        ObjectRef::Algebra(a) => Ok((name.to_string(), name.to_string(), ActionSpec::adjoint(a)?)),
        ObjectRef::Representation(_) => Err(Error::Invalid(format!("`{name}` is a representation, expected an action"))),
    }
}

fn build(doc: &Document, recipe: &str, object: Option<&str>, map: Option<&str>) -> Result<Built> {
    let name = need(object, "object", recipe)?;
    let mut out = Document::default();
    let mut checks = Vec::new();
    let derived = |suffix: &str| format!("{name}_{suffix}");
    match recipe {
        "semidirect" | "hemisemidirect" => {
            let (_, rep) = representation_for(doc, name)?;
            let (algebra, catalog) = if recipe == "semidirect" {
                (semidirect(&rep)?, "dendriform")
            } else {
                (hemisemidirect(&rep)?, "quadri")
            };
            checks.push(catalog_check(&derived(recipe), &algebra, catalog)?);
            out.insert_algebra(derived(recipe), algebra)?;
        }
        "action-semidirect" => {
            let (_, _, act) = action_for(doc, name)?;
            let algebra = action_semidirect(&act)?;
            checks.push(catalog_check(&derived("semidirect"), &algebra, "dendriform")?);
            out.insert_algebra(derived("semidirect"), algebra)?;
        }
        "aguiar-dendriform" | "aguiar-diass" => {
            let a = doc.algebra(name)?;
            let t = doc.map(need(map, "map", recipe)?)?;
            let (algebra, catalog, suffix) = if recipe == "aguiar-dendriform" {
                (aguiar_dendriform(a, t)?, "dendriform", "dendriform")
            } else {
                (aguiar_diassociative(a, t)?, "diassociative", "diassociative")
            };
            checks.push(catalog_check(&derived(suffix), &algebra, catalog)?);
            out.insert_algebra(derived(suffix), algebra)?;
        }
        "induced-quadri" => {
            let (_, rep) = representation_for(doc, name)?;
            let t = doc.map(need(map, "map", recipe)?)?;
            let q = induced_quadri(&rep, t)?;
            checks.push(catalog_check(&derived("quadri"), &q, "quadri")?);
            let collapse = check_morphism(t, &q, rep.base(), &crate::identity::QUADRI_COLLAPSE, DEFAULT_CAP)?;
            checks.push((format!("{}: collapse morphism", derived("quadri")), collapse));
            out.insert_algebra(derived("quadri"), q)?;
        }
        "induced-six" => {
            let (_, _, act) = action_for(doc, name)?;
            let t = doc.map(need(map, "map", recipe)?)?;
            let s = induced_six(&act, t)?;
            let label = derived("six");
            checks.push(catalog_check(&label, &s, "six")?);
            checks.push(catalog_check(&label, &s, "quadri")?);
            let perp = s.relabel(&[("prec_perp", "prec"), ("succ_perp", "succ")])?;
            checks.push(catalog_check(&format!("{label} perp"), &perp, "dendriform")?);
            out.insert_algebra(label, s)?;
        }
        "differential-quadri" => {
            let d = doc.algebra(name)?;
            let t = doc.map(need(map, "map", recipe)?)?;
            let dd = DifferentialDendriformSpec::new(d.clone(), t.clone())?;
            let q = differential_quadri(&dd)?;
            checks.push(catalog_check(&derived("quadri"), &q, "quadri")?);
            checks.push(operator_check(&derived("differential"), check_dend_averaging(d, t)?));
            out.insert_algebra(derived("quadri"), q)?;
        }
        "dual-extension" => {
            let d = doc.algebra(name)?;
            let (act, t) = dual_extension(d)?;
            let label = derived("dual");
            checks.push(catalog_check(&label, &act, "dend-action")?);
            checks.push(operator_check(&derived("projection"), check_homomorphic_relative(&act, &t)?));
            out.insert_action(label, name, derived("dual_target"), act)?;
            out.insert_map(derived("projection"), t.between(derived("dual_target"), name));
        }
        "sum-diass" => {
            let q = sum_collapse_quadri(doc.algebra(name)?)?;
            checks.push(catalog_check(&derived("diassociative"), &q, "diassociative")?);
            out.insert_algebra(derived("diassociative"), q)?;
        }
        "sum-triass" => {
            let s = sum_collapse_six(doc.algebra(name)?)?;
            checks.push(catalog_check(&derived("triassociative"), &s, "triassociative")?);
            out.insert_algebra(derived("triassociative"), s)?;
        }
        "quotient-dend" => {
            let q = doc.algebra(name)?;
            let ideal = splitting_ideal(q)?;
            let quotient = quotient_algebra(q, &ideal, &crate::identity::QUADRI_COLLAPSE)?;
            checks.push(catalog_check(&derived("dend"), &quotient.algebra, "dendriform")?);
            out.insert_algebra(name, q.clone())?;
            out.insert_algebra(derived("dend"), quotient.algebra)?;
            out.insert_map(derived("quotient_map"), quotient.map.between(name, derived("dend")));
        }
        "quadri-to-relative" => {
            let q = doc.algebra(name)?;
            let (rep, t) = quadri_to_relative_setup(q)?;
            let label = derived("rep");
            checks.push(catalog_check(&label, &rep, "dend-representation")?);
            checks.push(operator_check(&derived("quotient_map"), check_relative_averaging(&rep, &t)?));
            checks.push(same_operations(name, q, &induced_quadri(&rep, &t)?)?);
            out.insert_representation(label, derived("dend"), rep)?;
            out.insert_map(derived("quotient_map"), t.between(name, derived("dend")));
            out.insert_algebra(name, q.clone())?;
        }
        "six-to-homomorphic" => {
            let s = doc.algebra(name)?;
            let (act, t) = six_to_homomorphic_setup(s)?;
            let label = derived("action");
            checks.push(catalog_check(&label, &act, "dend-action")?);
            checks.push(operator_check(&derived("quotient_map"), check_homomorphic_relative(&act, &t)?));
            checks.push(same_operations(name, s, &induced_six(&act, &t)?)?);
            out.insert_action(label, derived("dend"), derived("perp"), act)?;
            out.insert_map(derived("quotient_map"), t.between(derived("perp"), derived("dend")));
        }
        "embed-averaging" => {
            let q = doc.algebra(name)?;
            let e = embed_averaging(q)?;
            let label = derived("ambient");
            checks.push(catalog_check(&label, &e.ambient, "dendriform")?);
            checks.push(operator_check(&derived("averaging"), check_dend_averaging(&e.ambient, &e.operator)?));
            checks.push((format!("{}: embedding", derived("inclusion")), e.fidelity(q)?));
            if !e.inclusion.is_injective() {
                return Err(Error::Invalid("inclusion is not injective".into()));
            }
            out.insert_algebra(name, q.clone())?;
            out.insert_algebra(label.clone(), e.ambient)?;
            out.insert_map(derived("averaging"), e.operator.between(label.clone(), label.clone()));
            out.insert_map(derived("inclusion"), e.inclusion.between(name, label));
        }
        other => {
            return Err(Error::Invalid(format!(
                "unknown recipe `{other}`; expected one of {}",
                RECIPES.join(", ")
            )))
        }
    }
    Ok(Built { doc: out, checks })
}

fn cmd_construct(
    file: &PathBuf,
    recipe: &str,
    out: &PathBuf,
    object: Option<&str>,
    map: Option<&str>,
    verify: bool,
    json: bool,
) -> Result<CommandOutcome> {
    let doc = load(file)?;
    let built = build(&doc, recipe, object, map)?;
    let text = built.doc.to_canonical_string();
    let to_stdout = out.as_os_str() == "-";
    if !to_stdout {
        fs::write(out, &text).map_err(|e| Error::Invalid(format!("cannot write {}: {e}", out.display())))?;
    }
    let checks: &[(String, ViolationReport)] = if verify { &built.checks } else { &[] };
    let passed = checks.iter().all(|(_, r)| r.passed());
    let mut stdout = String::new();
    if to_stdout {
        stdout.push_str(&text);
    }
    if json {
        let summary = ConstructSummary {
            recipe,
            objects: built
                .doc
                .algebras
                .keys()
                .chain(built.doc.maps.keys())
                .chain(built.doc.representations.keys())
                .chain(built.doc.actions.keys())
                .cloned()
                .collect(),
            passed,
            verification: checks
                .iter()
                .map(|(label, report)| VerificationEntry { label, passed: report.passed(), report })
                .collect(),
        };
        stdout.push_str(&serde_json::to_string_pretty(&summary).expect("summary serializes"));
        stdout.push('\n');
    } else {
        let _ = writeln!(stdout, "recipe {recipe}");
        if !verify {
            stdout.push_str("verification skipped\n");
        }
        for (label, report) in checks {
            let status = if report.passed() { "PASS" } else { "FAIL" };
            let _ = writeln!(stdout, "verify {label}: {status} ({} evaluations)", report.checked);
            if !report.passed() {
                stdout.push_str(&report.render_text());
            }
        }
    }
    Ok(CommandOutcome::verdict(passed, stdout))
}

fn parse_grid(text: &str) -> Result<Vec<Rational>> {
    text.split(',')
        .map(|s| {
            parse_rational(s.trim()).ok_or_else(|| Error::Invalid(format!("invalid grid value `{}`", s.trim())))
        })
        .collect()
}

#[derive(Serialize)]
struct SearchSummary {
    kind: OperatorKind,
    count: usize,
    maps: Vec<Vec<Vec<String>>>,
}

fn cmd_search(file: &PathBuf, object: &str, kind: &str, grid: &str, cap: u64, json: bool) -> Result<CommandOutcome> {
    let doc = load(file)?;
    let grid = parse_grid(grid)?;
    let subj = subject(doc.object(object)?);
    let kind = resolve_kind(kind, subj)?;
    let found = search_operators(subj, kind, &grid, cap)?;
    let rows = |m: &LinearMapSpec| -> Vec<Vec<String>> {
        (0..m.target_dim())
            .map(|r| m.matrix().row(r).iter().map(format_rational).collect())
            .collect()
    };
    let stdout = if json {
        let summary = SearchSummary {
            kind,
            count: found.len(),
            maps: found.iter().map(rows).collect(),
        };
        format!("{}\n", serde_json::to_string_pretty(&summary).expect("summary serializes"))
    } else {
        let mut s = String::new();
        for m in &found {
            let text: Vec<String> = rows(m).iter().map(|r| format!("[{}]", r.join(", "))).collect();
            let _ = writeln!(s, "[{}]", text.join(", "));
        }
        let _ = writeln!(s, "{} operator(s) of kind {kind} on {object}", found.len());
        s
    };
    Ok(CommandOutcome::verdict(true, stdout))
}
