//! Command-line surface. [`run`] does all the work and returns the exit code
//! with the text to print, so tests can drive it without a process.

mod format;

pub use format::{parse_morse, print_morse, DiagramFile, LoadError, ParseError, ParseErrorKind};

use std::io::Read;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use rayon::prelude::*;
use serde::Serialize;

use crate::diagram::OrientedDiagram;
use crate::engine::{contract, enumerate_oracle, verify_model, EngineError};
use crate::invariants::{self, InvariantError};
use crate::models::ModelId;
use crate::moves::random_equivalent;
use crate::scalar::{Matrix, Ring};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_MODEL: i32 = 3;
pub const EXIT_INTERNAL: i32 = 4;

#[derive(Parser, Debug)]
#[command(
    name = "knotoid",
    version,
    about = "Quantum invariants of Morse knotoid diagrams"
)]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Parse and validate a .morse file.
    Validate { file: PathBuf },
    /// Rotation number.
    Rot { file: PathBuf },
    /// Bracket matrix (engine and state expansion, cross-checked).
    Bracket { file: PathBuf },
    /// Rotational bracket in A and λ.
    Rotbracket { file: PathBuf },
    /// Binary bracket by colorings, cross-checked against the engine.
    Binary {
        file: PathBuf,
        /// Multiply by A^{-writhe}.
        #[arg(long)]
        normalized: bool,
    },
    /// Alexander matrix and polynomial.
    Alexander { file: PathBuf },
    /// Two-variable σ, τ matrix and its trace.
    Sawollek { file: PathBuf },
    /// Homflypt specialisation with n+1 labels.
    Homflypt {
        file: PathBuf,
        #[arg(long)]
        n: usize,
    },
    /// Check the identities a model needs to give an invariant.
    VerifyModel {
        #[arg(long)]
        model: ModelId,
    },
    /// Compare the contraction with brute-force enumeration.
    OracleCheck {
        file: PathBuf,
        /// Defaults to every small model.
        #[arg(long)]
        model: Option<ModelId>,
    },
    /// Print a Morse-isotopic diagram reached by random moves.
    Moves {
        file: PathBuf,
        #[arg(long, default_value_t = 20)]
        steps: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Contract every .morse file in a directory.
    Batch {
        dir: PathBuf,
        #[arg(long)]
        model: ModelId,
    },
}

/// Exit code and text of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliOutput {
    pub code: i32,
    pub text: String,
}

impl CliOutput {
    fn ok(text: String) -> Self {
        CliOutput {
            code: EXIT_OK,
            text,
        }
    }

    fn fail(code: i32, text: impl Into<String>) -> Self {
        let mut text = text.into();
        if !text.ends_with('\n') {
            text.push('\n');
        }
        CliOutput { code, text }
    }
}

/// Runs the command line `args` (the first item is the program name).
pub fn run<I, S>(args: I) -> CliOutput
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            return CliOutput::fail(code, e.render().to_string());
        }
    };
    match dispatch(&cli) {
        Ok(out) => out,
        Err(out) => out,
    }
}

type Outcome = Result<CliOutput, CliOutput>;

fn load(path: &Path) -> Result<DiagramFile, CliOutput> {
    if path == Path::new("-") {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| CliOutput::fail(EXIT_INVALID, format!("stdin: {e}")))?;
        return DiagramFile::from_text("stdin", &text)
            .map_err(|e| CliOutput::fail(EXIT_INVALID, format!("stdin: {e}")));
    }
    DiagramFile::load(path).map_err(|e| CliOutput::fail(EXIT_INVALID, e.to_string()))
}

fn invariant_failure(name: &str, e: InvariantError) -> CliOutput {
    let code = match e {
        InvariantError::Engine(_) | InvariantError::Division(_) => EXIT_INTERNAL,
        _ => EXIT_INVALID,
    };
    CliOutput::fail(code, format!("{name}: {e}"))
}

fn engine_failure(name: &str, e: EngineError) -> CliOutput {
    let code = match e {
        EngineError::OracleBound { .. } | EngineError::TooManyEndpoints => EXIT_INVALID,
        _ => EXIT_INTERNAL,
    };
    CliOutput::fail(code, format!("{name}: {e}"))
}

/// One invariant value in the shared report schema.
#[derive(Serialize, Clone, Debug)]
struct Report {
    diagram: String,
    model: String,
    matrix: Vec<Vec<String>>,
    scalar: Option<String>,
    writhe: i64,
    odd_writhe: Option<i64>,
    rotation: String,
}

impl Report {
    fn new(f: &DiagramFile, od: &OrientedDiagram, model: &str) -> Self {
        Report {
            diagram: f.name.clone(),
            model: model.to_string(),
            matrix: Vec::new(),
            scalar: None,
            writhe: od.writhe(),
            odd_writhe: od.odd_writhe().ok(),
            rotation: format!("{}/2", od.rotation_number().doubled()),
        }
    }

    fn with_matrix<T: Ring + std::fmt::Display>(mut self, m: &Matrix<T>) -> Self {
        self.matrix = m
            .to_rows()
            .iter()
            .map(|r| r.iter().map(|x| x.to_string()).collect())
            .collect();
        self
    }

    fn with_scalar(mut self, s: impl ToString) -> Self {
        self.scalar = Some(s.to_string());
        self
    }

    fn render(&self, json: bool) -> String {
        if json {
            return to_json(self);
        }
        let mut out = format!("diagram {}\nmodel {}\n", self.diagram, self.model);
        out += &format!(
            "rotation {}\nwrithe {}\n",
            half(&self.rotation),
            self.writhe
        );
        if let Some(j) = self.odd_writhe {
            out += &format!("odd writhe {j}\n");
        }
        if !self.matrix.is_empty() {
            out += "matrix\n";
            for row in &self.matrix {
                out += &format!("  [{}]\n", row.join(", "));
            }
        }
        if let Some(s) = &self.scalar {
            out += &format!("value {s}\n");
        }
        out
    }
}

/// "−3/2" stays, "4/2" becomes "2".
fn half(doubled: &str) -> String {
    let n: i64 = doubled.trim_end_matches("/2").parse().unwrap_or(0);
    crate::diagram::HalfInt(n).to_string()
}

/// Pretty JSON with sorted keys (serde_json maps are ordered).
fn to_json<T: Serialize>(v: &T) -> String {
    let value = serde_json::to_value(v).expect("report serializes");
    serde_json::to_string_pretty(&value).expect("value prints") + "\n"
}

fn dispatch(cli: &Cli) -> Outcome {
    let json = cli.json;
    match &cli.command {
        Command::Validate { file } => {
            let f = load(file)?;
            let od = OrientedDiagram::new(&f.diagram);
            let d = &f.diagram;
            let components = od.components().len();
            if json {
                let v = serde_json::json!({
                    "diagram": f.name,
                    "valid": true,
                    "events": d.len(),
                    "crossings": d.crossing_count(),
                    "max_width": d.max_width(),
                    "components": components,
                    "knotoid": d.is_knotoid(),
                });
                return Ok(CliOutput::ok(to_json(&v)));
            }
            Ok(CliOutput::ok(format!(
                "{}: ok, {} events, {} crossings, width {}, {} components\n",
                f.name,
                d.len(),
                d.crossing_count(),
                d.max_width(),
                components
            )))
        }
        Command::Rot { file } => {
            let f = load(file)?;
            let od = OrientedDiagram::new(&f.diagram);
            if json {
                return Ok(CliOutput::ok(Report::new(&f, &od, "rotation").render(true)));
            }
            Ok(CliOutput::ok(format!("{}\n", od.rotation_number())))
        }
        Command::Bracket { file } => {
            let f = load(file)?;
            let od = OrientedDiagram::new(&f.diagram);
            let m = invariants::bracket_matrix(&od).map_err(|e| invariant_failure(&f.name, e))?;
            let s = invariants::bracket_matrix_states(&od)
                .map_err(|e| invariant_failure(&f.name, e))?;
            if m != s {
                return Err(CliOutput::fail(
                    EXIT_INTERNAL,
                    format!("{}: engine and state expansion disagree\n", f.name),
                ));
            }
            let mut r = Report::new(&f, &od, "bracket").with_matrix(&m);
            if !f.diagram.is_knotoid() {
                r = r.with_scalar(m.get(0, 0));
            }
            Ok(CliOutput::ok(r.render(json)))
        }
        Command::Rotbracket { file } => {
            let f = load(file)?;
            let od = OrientedDiagram::new(&f.diagram);
            let v =
                invariants::rotational_bracket(&od).map_err(|e| invariant_failure(&f.name, e))?;
            Ok(CliOutput::ok(
                Report::new(&f, &od, "rotbracket")
                    .with_scalar(v)
                    .render(json),
            ))
        }
        Command::Binary { file, normalized } => {
            let f = load(file)?;
            let od = OrientedDiagram::new(&f.diagram);
            let c = invariants::binary_bracket(&od).map_err(|e| invariant_failure(&f.name, e))?;
            let e = invariants::binary_bracket_engine(&od)
                .map_err(|e| invariant_failure(&f.name, e))?;
            if c.value != e {
                return Err(CliOutput::fail(
                    EXIT_INTERNAL,
                    format!("{}: coloring sum and engine disagree\n", f.name),
                ));
            }
            let (model, v) = if *normalized {
                let n = invariants::binary_normalized(&od)
                    .map_err(|e| invariant_failure(&f.name, e))?;
                ("binary:normalized", n)
            } else {
                ("binary", c.value)
            };
            Ok(CliOutput::ok(
                Report::new(&f, &od, model).with_scalar(v).render(json),
            ))
        }
        Command::Alexander { file } => {
            let f = load(file)?;
            let od = OrientedDiagram::new(&f.diagram);
            let a = invariants::alexander(&od).map_err(|e| invariant_failure(&f.name, e))?;
            let r = Report::new(&f, &od, "alexander")
                .with_matrix(&a.normalized)
                .with_scalar(&a.polynomial);
            Ok(CliOutput::ok(r.render(json)))
        }
        Command::Sawollek { file } => {
            let f = load(file)?;
            let od = OrientedDiagram::new(&f.diagram);
            let s = invariants::sawollek(&od).map_err(|e| invariant_failure(&f.name, e))?;
            let r = Report::new(&f, &od, "sawollek")
                .with_matrix(&s.w)
                .with_scalar(&s.polynomial);
            Ok(CliOutput::ok(r.render(json)))
        }
        Command::Homflypt { file, n } => {
            if *n == 0 {
                return Err(CliOutput::fail(
                    EXIT_USAGE,
                    "homflypt: --n must be at least 1\n",
                ));
            }
            let f = load(file)?;
            let od = OrientedDiagram::new(&f.diagram);
            let h = invariants::homflypt(&od, *n).map_err(|e| invariant_failure(&f.name, e))?;
            let mut r = Report::new(&f, &od, &format!("homflypt:{n}")).with_matrix(&h.normalized);
            if let Some(p) = &h.polynomial {
                r = r.with_scalar(p);
            }
            Ok(CliOutput::ok(r.render(json)))
        }
        Command::VerifyModel { model } => {
            let report = verify_model(&model.build());
            let code = if report.passed() { EXIT_OK } else { EXIT_MODEL };
            let text = if json {
                let checks: Vec<_> = report
                    .checks
                    .iter()
                    .map(|c| {
                        serde_json::json!({
                            "name": c.name,
                            "passed": c.passed,
                            "cases": c.cases,
                            "witness": c.witness,
                        })
                    })
                    .collect();
                to_json(&serde_json::json!({
                    "model": report.model,
                    "passed": report.passed(),
                    "checks": checks,
                }))
            } else {
                let verdict = if report.passed() { "PASS" } else { "FAIL" };
                format!("{report}{verdict}\n")
            };
            Ok(CliOutput { code, text })
        }
        Command::OracleCheck { file, model } => {
            let f = load(file)?;
            let od = OrientedDiagram::new(&f.diagram);
            let models = model.map_or_else(ModelId::all_small, |m| vec![m]);
            let mut lines = Vec::new();
            let mut results = Vec::new();
            let mut all_ok = true;
            for id in models {
                let m = id.build();
                let engine = contract(&od, &m)
                    .map_err(|e| engine_failure(&f.name, e))?
                    .matrix;
                let oracle = enumerate_oracle(&od, &m).map_err(|e| engine_failure(&f.name, e))?;
                let ok = engine == oracle;
                all_ok &= ok;
                lines.push(format!("{id}: {}", if ok { "agree" } else { "MISMATCH" }));
                results.push(serde_json::json!({ "model": id.to_string(), "agree": ok }));
            }
            let text = if json {
                to_json(&serde_json::json!({ "diagram": f.name, "results": results }))
            } else {
                lines.join("\n") + "\n"
            };
            let code = if all_ok { EXIT_OK } else { EXIT_INTERNAL };
            Ok(CliOutput { code, text })
        }
        Command::Moves { file, steps, seed } => {
            let f = load(file)?;
            let out = random_equivalent(&f.diagram, *steps, *seed);
            if json {
                let events: Vec<String> = out.events().iter().map(|e| e.to_string()).collect();
                return Ok(CliOutput::ok(to_json(&serde_json::json!({
                    "diagram": f.name,
                    "steps": steps,
                    "seed": seed,
                    "events": events,
                }))));
            }
            Ok(CliOutput::ok(format!(
                "# {} after {steps} random moves, seed {seed}\n{}",
                f.name,
                print_morse(&out)
            )))
        }
        Command::Batch { dir, model } => batch(dir, *model, json),
    }
}

fn batch_one(path: &Path, model: ModelId) -> Result<Report, String> {
    let f = DiagramFile::load(path).map_err(|e| e.to_string())?;
    let od = OrientedDiagram::new(&f.diagram);
    let m = contract(&od, &model.build())
        .map_err(|e| format!("{}: {e}", f.name))?
        .matrix;
    let mut r = Report::new(&f, &od, &model.to_string()).with_matrix(&m);
    if !f.diagram.is_knotoid() {
        r = r.with_scalar(m.get(0, 0));
    }
    Ok(r)
}

fn batch(dir: &Path, model: ModelId, json: bool) -> Outcome {
    let entries = std::fs::read_dir(dir)
        .map_err(|e| CliOutput::fail(EXIT_INVALID, format!("{}: {e}\n", dir.display())))?;
    let mut paths: Vec<PathBuf> = entries
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "morse"))
        .collect();
    paths.sort();
    let results: Vec<Result<Report, String>> =
        paths.par_iter().map(|p| batch_one(p, model)).collect();
    let failed = results.iter().any(|r| r.is_err());
    let text = if json {
        let items: Vec<serde_json::Value> = results
            .iter()
            .map(|r| match r {
                Ok(rep) => serde_json::to_value(rep).expect("report serializes"),
                Err(e) => serde_json::json!({ "error": e }),
            })
            .collect();
        to_json(&items)
    } else {
        let mut out = String::new();
        for r in &results {
            match r {
                Ok(rep) => out += &rep.render(false),
                Err(e) => out += &format!("error {e}\n"),
            }
            out += "\n";
        }
        out
    };
    let code = if failed { EXIT_INVALID } else { EXIT_OK };
    Ok(CliOutput { code, text })
}
