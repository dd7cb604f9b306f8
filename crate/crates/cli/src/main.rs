use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use vacuity::fol3::{
    eval3_fol_explain, eval_classical_fol, FolError, Interpretation, Semantics, DEFAULT_MAX_DOMAIN,
};
use vacuity::goedel::{
    build_fixed_point, closure_summary, default_sample, eval_g_unrolled, eval_j, full_report,
    FixedPoint, FixedPointSummary, GoedelError, InstanceReport, JReport, ToySystem, Unrolling,
    DEFAULT_MAX_N,
};
use vacuity::prop3::{classical_eval, is_classical_tautology, truth_table3, PropError};
use vacuity::syllogistics::{audit_moods, audit_square, MoodAudit, Scheme, SquareReport};
use vacuity::{parse_formula, render, Formula, TruthValue3};

mod text;

#[derive(Parser)]
#[command(
    name = "vacuity",
    version,
    about = "Truth-value gaps, syllogisms and Gödel's sentence"
)]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Propositional checks under the vacuity rule
    Prop {
        #[arg(value_enum)]
        mode: PropMode,
        formula: String,
    },
    /// Evaluate a formula in a model file
    Fol {
        model: PathBuf,
        formula: String,
        #[arg(long, value_enum, default_value_t = SemanticsArg::Presup)]
        semantics: SemanticsArg,
    },
    /// Audit the square of opposition or the 256 moods
    Syllogism {
        #[arg(value_enum)]
        audit: Audit,
        #[arg(long, value_enum, default_value_t = SchemeArg::Presup)]
        scheme: SchemeArg,
        #[arg(long, default_value_t = DEFAULT_MAX_DOMAIN)]
        max_domain: usize,
    },
    /// The diagonal construction over a toy system
    Godel {
        #[arg(value_enum)]
        action: GodelAction,
        /// System file; the shipped system when omitted
        system: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_MAX_N)]
        max_n: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum PropMode {
    Taut,
    Table,
}

#[derive(Clone, Copy, ValueEnum)]
enum SemanticsArg {
    Presup,
    Classical,
}

#[derive(Clone, Copy, ValueEnum)]
enum SchemeArg {
    Table1,
    Table2,
    Presup,
}

impl From<SchemeArg> for Scheme {
    fn from(s: SchemeArg) -> Self {
        match s {
            SchemeArg::Table1 => Scheme::Table1,
            SchemeArg::Table2 => Scheme::Table2,
            SchemeArg::Presup => Scheme::Presup,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Audit {
    Square,
    Moods,
}

#[derive(Clone, Copy, ValueEnum)]
enum GodelAction {
    Build,
    Unroll,
    Report,
}

const OK: u8 = 0;
const NEGATIVE: u8 = 1;
const USAGE: u8 = 2;
const CAP: u8 = 3;
const SELF_CHECK: u8 = 4;

/// A failed run: message and exit code.
struct Failure(String, u8);

impl From<PropError> for Failure {
    fn from(e: PropError) -> Self {
        let code = match e {
            PropError::AtomCap { .. } => CAP,
            _ => USAGE,
        };
        Failure(e.to_string(), code)
    }
}

impl From<FolError> for Failure {
    fn from(e: FolError) -> Self {
        let code = match e {
            FolError::CapExceeded { .. } | FolError::TooLarge { .. } => CAP,
            FolError::Prop(PropError::AtomCap { .. }) => CAP,
            _ => USAGE,
        };
        Failure(e.to_string(), code)
    }
}

impl From<GoedelError> for Failure {
    fn from(e: GoedelError) -> Self {
        match e {
            GoedelError::SelfCheck(_) => Failure(e.to_string(), SELF_CHECK),
            GoedelError::Fol(e) => e.into(),
            _ => Failure(e.to_string(), USAGE),
        }
    }
}

struct Output {
    format: Format,
    text: String,
    json: serde_json::Value,
    code: u8,
}

fn emit(format: Format, text: String, json: impl Serialize, code: u8) -> Result<Output, Failure> {
    Ok(Output {
        format,
        text,
        json: serde_json::to_value(json).expect("report serializes"),
        code,
    })
}

fn parse(text: &str) -> Result<Formula, Failure> {
    parse_formula(text).map_err(|e| Failure(format!("parse error: {e}"), USAGE))
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path)
        .map_err(|e| Failure(format!("cannot read {}: {e}", path.display()), USAGE))
}

fn cmd_prop(format: Format, mode: PropMode, formula: &str) -> Result<Output, Failure> {
    let f = parse(formula)?;
    let table = truth_table3(&f)?;
    let classical: Vec<bool> = table
        .rows
        .iter()
        .map(|r| {
            let v = table
                .atoms
                .iter()
                .cloned()
                .zip(r.assignment.iter().copied())
                .collect();
            classical_eval(&f, &v)
        })
        .collect::<Result<_, _>>()?;
    let trt = table.all(TruthValue3::T);
    let classically = is_classical_tautology(&f)?;
    let rows: Vec<_> = table
        .rows
        .iter()
        .zip(&classical)
        .map(|(r, c)| {
            let assignment: serde_json::Map<_, _> = table
                .atoms
                .iter()
                .zip(&r.assignment)
                .map(|(a, v)| (a.clone(), json!(v)))
                .collect();
            json!({"assignment": assignment, "classical": c, "value": r.value})
        })
        .collect();
    let report = json!({
        "formula": render(&f),
        "atoms": table.atoms,
        "rows": rows,
        "truth_relevant_tautology": trt,
        "classical_tautology": classically,
    });
    match mode {
        PropMode::Taut => {
            let code = if trt { OK } else { NEGATIVE };
            emit(format, text::tautology(&table, classically), report, code)
        }
        PropMode::Table => emit(format, text::truth_table(&table, &classical), report, OK),
    }
}

fn cmd_fol(
    format: Format,
    model: &Path,
    formula: &str,
    semantics: SemanticsArg,
) -> Result<Output, Failure> {
    let m = Interpretation::from_json(&read(model)?)
        .map_err(|e| Failure(format!("{}: {e}", model.display()), USAGE))?;
    let f = parse(formula)?;
    let (value, gap) = match semantics {
        SemanticsArg::Classical => (eval_classical_fol(&f, &m)?.into(), None),
        SemanticsArg::Presup => {
            let e = eval3_fol_explain(&f, &m)?;
            (e.value, e.gap)
        }
    };
    let semantics = match semantics {
        SemanticsArg::Classical => Semantics::Classical,
        SemanticsArg::Presup => Semantics::Presup,
    };
    let text = match &gap {
        Some(reason) => format!("{value} ({reason})"),
        None => value.to_string(),
    };
    let report = json!({
        "formula": render(&f),
        "semantics": semantics,
        "value": value,
        "gap": gap.map(|g| g.to_string()),
    });
    emit(format, text, report, OK)
}

fn cmd_syllogism(
    format: Format,
    audit: Audit,
    scheme: Scheme,
    max_domain: usize,
) -> Result<Output, Failure> {
    if max_domain == 0 {
        return Err(Failure("--max-domain must be at least 1".into(), USAGE));
    }
    match audit {
        Audit::Square => {
            let r: SquareReport = audit_square(scheme, max_domain)?;
            let code = if r.matches_expected() { OK } else { NEGATIVE };
            emit(format, text::square(&r), &r, code)
        }
        Audit::Moods => {
            let r: MoodAudit = audit_moods(scheme, max_domain)?;
            let code = if r.matches_expected() { OK } else { NEGATIVE };
            emit(format, text::moods(&r), &r, code)
        }
    }
}

fn load_system(path: Option<&Path>) -> Result<ToySystem, Failure> {
    match path {
        None => Ok(ToySystem::default_system()),
        Some(p) => ToySystem::from_json(&read(p)?)
            .map_err(|e| Failure(format!("{}: {e}", p.display()), USAGE)),
    }
}

fn unroll(fp: &FixedPoint, sys: &ToySystem, max_n: u64) -> Result<Unrolling, Failure> {
    Ok(eval_g_unrolled(fp, sys, &default_sample(fp, sys, max_n))?)
}

fn cmd_godel(
    format: Format,
    action: GodelAction,
    system: Option<&Path>,
    max_n: u64,
) -> Result<Output, Failure> {
    let sys = load_system(system)?;
    let fp = build_fixed_point(&sys)?;
    match action {
        GodelAction::Build => {
            let summary = FixedPointSummary::new(&fp);
            let report = json!({
                "axioms": sys.axioms().iter().map(render).collect::<Vec<_>>(),
                "closure": closure_summary(&sys),
                "fixed_point": summary,
            });
            emit(format, text::build(&sys, &summary), report, OK)
        }
        GodelAction::Unroll => {
            let u = unroll(&fp, &sys, max_n)?;
            if !u.model_check_agrees {
                return Err(Failure(
                    "finite-model evaluation disagrees with the instance reports".into(),
                    SELF_CHECK,
                ));
            }
            let (range, special): (Vec<&InstanceReport>, Vec<&InstanceReport>) =
                u.instances.iter().partition(|r| r.n <= max_n.into());
            emit(format, text::unroll(&u, &range, &special), &u, OK)
        }
        GodelAction::Report => {
            let report = full_report(&sys, max_n)?;
            let j: &JReport = &report.j;
            let again = eval_j(&fp, &sys, &report.unrolling);
            if &again != j || !report.unrolling.model_check_agrees {
                return Err(Failure("report is not reproducible".into(), SELF_CHECK));
            }
            emit(format, text::report(&report), &report, OK)
        }
    }
}

fn run(cli: Cli) -> Result<Output, Failure> {
    let format = cli.format;
    match cli.command {
        Command::Prop { mode, formula } => cmd_prop(format, mode, &formula),
        Command::Fol {
            model,
            formula,
            semantics,
        } => cmd_fol(format, &model, &formula, semantics),
        Command::Syllogism {
            audit,
            scheme,
            max_domain,
        } => cmd_syllogism(format, audit, scheme.into(), max_domain),
        Command::Godel {
            action,
            system,
            max_n,
        } => cmd_godel(format, action, system.as_deref(), max_n),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { USAGE } else { OK };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let format = cli.format;
    match run(cli) {
        Ok(out) => {
            let body = match out.format {
                Format::Text => out.text.trim_end().to_string(),
                Format::Json => serde_json::to_string_pretty(&out.json).expect("json value prints"),
            };
            // a closed pipe is not an error worth reporting
            let _ = writeln!(std::io::stdout().lock(), "{body}");
            ExitCode::from(out.code)
        }
        Err(Failure(message, code)) => {
            match format {
                Format::Text => eprintln!("error: {message}"),
                Format::Json => println!("{}", json!({"error": message, "exit_code": code})),
            }
            ExitCode::from(code)
        }
    }
}
