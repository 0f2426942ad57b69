//! Command surface: every capability of the library behind one argv entry
//! point, with text or JSON reports and contract exit codes (0 = pass,
//! 1 = some check failed, 2 = usage or input error).

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use crate::algebra::{phi_to_mbe, psi_to_be, FiniteAlgebra};
use crate::axioms::{check_axiom, AxiomId, CheckStatus, ClassId};
use crate::center::center;
use crate::classify::{classify, verify_meta_theorems};
use crate::effect::effect_report;
use crate::fixtures;
use crate::io::{self, Loaded};
use crate::search::{enumerate, find_counterexample, EnumerationConfig};
use crate::terms::{check_statement, parse};

#[derive(Parser)]
#[command(name = "qwalg", about = "finite-model workbench for implication algebras")]
struct Cli {
    /// Emit a structured JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check named axioms (all of them by default) on an algebra file.
    Check {
        file: PathBuf,
        /// Axiom id; repeatable.
        #[arg(long = "axiom")]
        axioms: Vec<String>,
    },
    /// Decide every class on an algebra file.
    Classify {
        file: PathBuf,
        /// Fail (exit 1) unless the algebra belongs to this class.
        #[arg(long)]
        expect: Option<String>,
    },
    /// Compute the commutative center and its subalgebra report.
    Center { file: PathBuf },
    /// Build the partial-addition view and check its axioms.
    Effect { file: PathBuf },
    /// Search for a counterexample to a statement within a size bound.
    Refute {
        statement: String,
        #[arg(long)]
        class: String,
        #[arg(long = "max-size")]
        max_size: usize,
    },
    /// Enumerate algebras of one size, up to isomorphism by default.
    Enumerate {
        #[arg(long)]
        size: usize,
        #[arg(long)]
        class: Option<String>,
        #[arg(long = "count-only")]
        count_only: bool,
        /// Keep isomorphic copies.
        #[arg(long = "no-iso")]
        no_iso: bool,
    },
    /// Translate between the implicational and product signatures.
    Transform {
        file: PathBuf,
        /// Target signature: `mbe` or `be`.
        #[arg(long)]
        to: String,
    },
    /// Check the cross-class structure theorems on all models up to a size.
    VerifyTheorems {
        #[arg(long)]
        size: usize,
    },
    /// Run the built-in identity suites on an algebra file.
    Fixtures {
        file: PathBuf,
        /// Run only the suite assuming this class.
        #[arg(long)]
        class: Option<String>,
    },
}

#[derive(Serialize)]
struct OutcomeRow {
    id: String,
    status: CheckStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<Vec<String>>,
}

#[derive(Serialize)]
struct Report {
    command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    model: Option<String>,
    outcomes: Vec<OutcomeRow>,
    #[serde(skip_serializing_if = "Option::is_none")]
    counts: Option<serde_json::Value>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    notes: Vec<String>,
}

impl Report {
    fn new(command: &str, model: Option<String>) -> Report {
        Report {
            command: command.to_string(),
            model,
            outcomes: Vec::new(),
            counts: None,
            notes: Vec::new(),
        }
    }

    fn push(&mut self, id: impl Into<String>, status: CheckStatus, witness: Option<Vec<String>>) {
        self.outcomes.push(OutcomeRow {
            id: id.into(),
            status,
            witness,
        });
    }

    fn print(&self, as_json: bool) {
        if as_json {
            println!("{}", serde_json::to_string_pretty(self).unwrap());
            return;
        }
        for row in &self.outcomes {
            let mark = match row.status {
                CheckStatus::Pass => "\u{2713}",
                CheckStatus::Fail => "\u{2717}",
                CheckStatus::PrereqFailed => "prereq failed",
            };
            match &row.witness {
                Some(w) => println!("{} {} at ({})", row.id, mark, w.join(", ")),
                None => println!("{} {}", row.id, mark),
            }
        }
        if let Some(serde_json::Value::Object(counts)) = &self.counts {
            for (k, v) in counts {
                println!("{k}: {v}");
            }
        }
        for note in &self.notes {
            println!("{note}");
        }
    }
}

fn names(a: &FiniteAlgebra, w: &[usize]) -> Vec<String> {
    w.iter().map(|&x| a.name(x).to_string()).collect()
}

fn usage_error(message: impl std::fmt::Display) -> i32 {
    eprintln!("error: {message}");
    2
}

fn parse_class(s: &str) -> Result<ClassId, i32> {
    // accept the involutive base class under its plain alias too
    let normalized = if s == "be" { "involutive-be" } else { s };
    normalized.parse().map_err(usage_error)
}

/// Run one invocation. The first argv entry is the program name.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            // clap renders --help/--version through the error path with exit 0
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli) {
        Ok(code) => code,
        Err(code) => code,
    }
}

fn load(path: &PathBuf) -> Result<FiniteAlgebra, i32> {
    io::load(path).map_err(|e| usage_error(format!("{}: {e}", path.display())))
}

fn dispatch(cli: Cli) -> Result<i32, i32> {
    let json = cli.json;
    match cli.command {
        Command::Check { file, axioms } => {
            let a = load(&file)?;
            let ids: Vec<AxiomId> = if axioms.is_empty() {
                AxiomId::ALL.to_vec()
            } else {
                axioms
                    .iter()
                    .map(|s| s.parse().map_err(usage_error))
                    .collect::<Result<_, _>>()?
            };
            let mut report = Report::new("check", Some(file.display().to_string()));
            let mut failed = false;
            for id in ids {
                let out = check_axiom(&a, id);
                failed |= !out.passed();
                report.push(
                    id.as_str(),
                    out.status,
                    out.witness.as_deref().map(|w| names(&a, w)),
                );
            }
            report.print(json);
            Ok(if failed { 1 } else { 0 })
        }
        Command::Classify { file, expect } => {
            let a = load(&file)?;
            let expect = expect.map(|s| parse_class(&s)).transpose()?;
            let r = classify(&a);
            let mut report = Report::new("classify", Some(file.display().to_string()));
            for out in &r.outcomes {
                let witness = out.failed.as_ref().map(|f| {
                    let mut w = vec![format!("{}", f.axiom)];
                    if let Some(ws) = &f.witness {
                        w.extend(names(&a, ws));
                    }
                    w
                });
                report.push(out.class.as_str(), out.status, witness);
            }
            report.notes.push(format!(
                "leq antisymmetric: {}; implicative: {}; commutative: {}",
                r.leq_antisymmetric, r.implicative, r.commutative
            ));
            report.print(json);
            Ok(match expect {
                Some(c) if !r.is(c) => 1,
                _ => 0,
            })
        }
        Command::Center { file } => {
            let a = load(&file)?;
            let r = center(&a);
            let mut report = Report::new("center", Some(file.display().to_string()));
            report.notes.push(format!(
                "center = {{{}}}",
                r.center
                    .iter()
                    .map(|&x| a.name(x))
                    .collect::<Vec<_>>()
                    .join(", ")
            ));
            let mut failed = false;
            for c in r.closure_report.iter().chain(&r.wajsberg_report) {
                failed |= !c.passed();
                report.push(
                    c.id,
                    c.status,
                    c.witness.as_deref().map(|w| names(&a, w)),
                );
            }
            report.print(json);
            Ok(if failed { 1 } else { 0 })
        }
        Command::Effect { file } => {
            let a = load(&file)?;
            let (_, r) = effect_report(&a).map_err(usage_error)?;
            let mut report = Report::new("effect", Some(file.display().to_string()));
            for out in &r.outcomes {
                let status = if out.passed() { CheckStatus::Pass } else { CheckStatus::Fail };
                let witness = out.witness.as_deref().map(|w| {
                    let mut w = names(&a, w);
                    if let Some(kind) = out.kind {
                        w.push(format!("{kind:?}"));
                    }
                    w
                });
                report.push(out.axiom.id(), status, witness);
            }
            report.print(json);
            Ok(if r.passed() { 0 } else { 1 })
        }
        Command::Refute { statement, class, max_size } => {
            let s = parse(&statement).map_err(usage_error)?;
            let class = parse_class(&class)?;
            let found = find_counterexample(&s, class, max_size).map_err(usage_error)?;
            let mut report = Report::new("refute", None);
            match &found {
                Some(cx) => {
                    let witness = cx
                        .assignment
                        .iter()
                        .map(|(v, e)| format!("{v}={}", cx.algebra.name(*e)))
                        .collect();
                    report.push("counterexample", CheckStatus::Fail, Some(witness));
                    report.notes.push(io::render_algebra_file(&io::AlgebraFile {
                        algebra: cx.algebra.clone(),
                        declared: vec![],
                    }));
                }
                None => report.push("counterexample", CheckStatus::Pass, None),
            }
            report.print(json);
            Ok(if found.is_some() { 1 } else { 0 })
        }
        Command::Enumerate { size, class, count_only, no_iso } => {
            let mut cfg = EnumerationConfig::new(size);
            if let Some(c) = class {
                cfg = cfg.with_class(parse_class(&c)?);
            }
            if no_iso {
                cfg = cfg.without_iso_reject();
            }
            let models = enumerate(&cfg).map_err(usage_error)?;
            if json {
                let mut report = Report::new("enumerate", None);
                report.counts = Some(json!({ "models": models.len() }));
                if !count_only {
                    for m in &models {
                        report.notes.push(io::render_algebra_file(&io::AlgebraFile {
                            algebra: m.clone(),
                            declared: vec![],
                        }));
                    }
                }
                report.print(true);
            } else if count_only {
                println!("{}", models.len());
            } else {
                for m in &models {
                    println!(
                        "{}",
                        io::render_algebra_file(&io::AlgebraFile {
                            algebra: m.clone(),
                            declared: vec![],
                        })
                    );
                }
                println!("{} models", models.len());
            }
            Ok(0)
        }
        Command::Transform { file, to } => {
            let loaded = io::load_any(&file).map_err(|e| usage_error(format!("{}: {e}", file.display())))?;
            match (loaded, to.as_str()) {
                (Loaded::Be(f), "mbe") => {
                    let m = phi_to_mbe(&f.algebra).map_err(|e| {
                        eprintln!("error: {e}");
                        1
                    })?;
                    print!("{}", io::render_mbe(&m));
                    Ok(0)
                }
                (Loaded::Mbe(m), "be") => {
                    let a = psi_to_be(&m).map_err(|e| {
                        eprintln!("error: {e}");
                        1
                    })?;
                    print!(
                        "{}",
                        io::render_algebra_file(&io::AlgebraFile {
                            algebra: a,
                            declared: vec![],
                        })
                    );
                    Ok(0)
                }
                (_, "mbe" | "be") => Err(usage_error(
                    "file signature does not match the requested direction",
                )),
                _ => Err(usage_error("--to must be `mbe` or `be`")),
            }
        }
        Command::VerifyTheorems { size } => {
            let mut models = Vec::new();
            for n in 1..=size {
                models.extend(enumerate(&EnumerationConfig::new(n)).map_err(usage_error)?);
            }
            let r = verify_meta_theorems(models.iter()).map_err(usage_error)?;
            let mut report = Report::new("verify-theorems", None);
            report.counts = Some(json!({ "models": r.models_checked }));
            if r.passed() {
                report.push("meta-theorems", CheckStatus::Pass, None);
            } else {
                for v in &r.violations {
                    report.push(
                        v.theorem.id(),
                        CheckStatus::Fail,
                        Some(vec![format!("model {}", v.model_index)]),
                    );
                }
            }
            report.print(json);
            Ok(if r.passed() { 0 } else { 1 })
        }
        Command::Fixtures { file, class } => {
            let a = load(&file)?;
            let suites: Vec<(ClassId, &[fixtures::Fixture])> = match class {
                Some(c) => {
                    let c = parse_class(&c)?;
                    match fixtures::fixture_suite(c) {
                        Some(s) => vec![(c, s)],
                        None => return Err(usage_error(format!("no fixture suite for class {c}"))),
                    }
                }
                None => fixtures::suites()
                    .into_iter()
                    .filter(|(c, _)| crate::axioms::check_class(&a, *c).passed())
                    .collect(),
            };
            let mut report = Report::new("fixtures", Some(file.display().to_string()));
            let mut failed = false;
            let mut total = 0usize;
            for (_, suite) in &suites {
                for f in *suite {
                    total += 1;
                    let out = check_statement(&a, &f.statement())
                        .map_err(usage_error)?;
                    failed |= !out.passed();
                    let witness = out
                        .witness
                        .map(|w| w.iter().map(|(v, e)| format!("{v}={}", a.name(*e))).collect());
                    let status = if witness.is_none() { CheckStatus::Pass } else { CheckStatus::Fail };
                    report.push(f.id, status, witness);
                }
            }
            report.counts = Some(json!({ "statements": total }));
            report.print(json);
            Ok(if failed { 1 } else { 0 })
        }
    }
}
