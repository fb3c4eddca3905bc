mod format;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use qls_core::catalog::{self, CatalogSource};
use qls_core::constructions::{achievable_set, execute, maximal_qls, plan_cardinality, Method, Parameters};
use qls_core::io::{load_document, load_latin, save_qls, Metadata, QlsDocument};
use qls_core::latin::{cyclic_ls, idempotent_ls};
use qls_core::square::classical_qls;
use qls_core::{qls_cardinality, verify_qls, Error, Qls, Tolerance};

#[derive(Parser)]
#[command(name = "qls", version, about = "Build and check quantum Latin squares of prescribed cardinality")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Plan and build a square of order v with cardinality c.
    Construct {
        #[arg(long)]
        order: usize,
        #[arg(long)]
        cardinality: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build the square with every entry distinct (c = v^2).
    ConstructMaximal {
        #[arg(long)]
        order: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build a square of computational basis vectors (c = v).
    ConstructClassical {
        #[arg(long)]
        order: usize,
        /// `cyclic`, `idempotent` or `file:PATH`.
        #[arg(long, default_value = "cyclic")]
        latin: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check orthonormality of every row and column, then measure the cardinality.
    Verify {
        file: PathBuf,
        #[command(flatten)]
        tol: TolArgs,
        /// Print a JSON report instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Measure the cardinality of a square and report the numerical margins.
    Cardinality {
        file: PathBuf,
        #[command(flatten)]
        tol: TolArgs,
        #[arg(long)]
        json: bool,
    },
    /// List the status of every cardinality for one order.
    Plan {
        #[arg(long)]
        order: usize,
        #[arg(long)]
        json: bool,
    },
    /// Fetch a square from the order-8 catalog, or print its audit log.
    Catalog {
        #[arg(long, default_value_t = 8)]
        order: usize,
        #[arg(long, required_unless_present = "audit")]
        cardinality: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Print every correction and convention the catalog applies.
        #[arg(long)]
        audit: bool,
    },
    /// Summarize achievable cardinalities for every order up to N.
    Table {
        #[arg(long)]
        max_order: usize,
        #[arg(long, value_enum, default_value_t = TableFormat::Md)]
        format: TableFormat,
    },
}

#[derive(clap::Args)]
struct TolArgs {
    /// Allowed deviation from orthonormality.
    #[arg(long)]
    tol_unit: Option<f64>,
    /// Overlap at or above which two entries share a phase class.
    #[arg(long)]
    tau_same: Option<f64>,
    /// Width of the band below 1 in which overlaps are refused as ambiguous.
    #[arg(long)]
    band_low: Option<f64>,
}

impl TolArgs {
    fn tolerance(&self) -> Result<Tolerance, Error> {
        let d = Tolerance::default();
        Tolerance::new(
            self.tol_unit.unwrap_or(d.eps_unit),
            self.tau_same.unwrap_or(d.tau_same),
            self.band_low.unwrap_or(d.band_low),
        )
    }
}

#[derive(Clone, Copy, ValueEnum)]
pub enum TableFormat {
    Csv,
    Md,
}

/// A failure with the process exit status it maps to.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::InvalidQls(_) => 2,
            Error::Unachievable { .. } => 3,
            Error::UnknownAchievability { .. } => 4,
            Error::NotInCatalog { cardinality, .. } if catalog::OPEN_VALUES.contains(cardinality) => 4,
            Error::NotInCatalog { .. } => 3,
            Error::AmbiguousPhase { .. } | Error::InconsistentGrouping { .. } | Error::InconsistentCardinality { .. } => 5,
            _ => 1,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

type CmdResult = Result<(), Failure>;

/// Writes the square to `out`, or prints it as JSON when no path is given.
/// The summary goes to stdout in the first case and stderr in the second so
/// stdout stays machine-readable.
fn emit(q: &Qls, meta: Metadata, summary: &[String], out: Option<&PathBuf>) -> CmdResult {
    match out {
        Some(path) => {
            save_qls(q, Some(meta), path)?;
            for line in summary {
                println!("{line}");
            }
            println!("written: {}", path.display());
        }
        None => {
            for line in summary {
                eprintln!("{line}");
            }
            println!("{}", QlsDocument::from_qls(q, Some(meta)).to_json());
        }
    }
    Ok(())
}

fn measured(q: &Qls) -> Result<usize, Failure> {
    Ok(qls_cardinality(q, &Tolerance::default())?.c)
}

fn construct(order: usize, c: usize, out: Option<&PathBuf>) -> CmdResult {
    let plan = plan_cardinality(order, c)?;
    let q = execute(&plan)?;
    let got = measured(&q)?;
    let params = match plan.parameters.to_string() {
        p if p.is_empty() => "none".to_string(),
        p => p,
    };
    let summary = vec![
        format!("method: {}", plan.method),
        format!("parameters: {params}"),
        format!("provenance: {}", plan.provenance()),
        format!("predicted c: {}", plan.predicted_c()),
        format!("measured c: {got}"),
    ];
    let meta = Metadata {
        method: Some(plan.method),
        parameters: Some(plan.parameters),
        claimed_cardinality: Some(plan.predicted_c()),
    };
    emit(&q, meta, &summary, out)?;
    if got != plan.predicted_c() {
        return Err(Failure {
            code: 5,
            message: format!("measured cardinality {got} differs from the plan's {}", plan.predicted_c()),
        });
    }
    Ok(())
}

fn construct_simple(q: Qls, method: Method, out: Option<&PathBuf>) -> CmdResult {
    let got = measured(&q)?;
    let meta = Metadata {
        method: Some(method),
        parameters: None,
        claimed_cardinality: Some(got),
    };
    emit(&q, meta, &[format!("method: {method}"), format!("measured c: {got}")], out)
}

fn classical(order: usize, latin: &str, out: Option<&PathBuf>) -> CmdResult {
    let l = match latin {
        "cyclic" => cyclic_ls(order),
        "idempotent" => idempotent_ls(order)?,
        other => match other.strip_prefix("file:") {
            Some(path) => {
                let l = load_latin(path)?;
                if l.order() != order {
                    return Err(Error::DimensionMismatch { expected: order, found: l.order() }.into());
                }
                l
            }
            None => {
                return Err(Failure {
                    code: 1,
                    message: format!("--latin must be cyclic, idempotent or file:PATH, not {other:?}"),
                })
            }
        },
    };
    construct_simple(classical_qls(&l), Method::Classical, out)
}

fn verify(file: &PathBuf, tol: &TolArgs, json: bool) -> CmdResult {
    let tol = tol.tolerance()?;
    let doc = load_document(file)?;
    let grid = doc.to_grid()?;
    let rep = verify_qls(&grid, &tol)?;
    let card = if rep.pass {
        Some(qls_cardinality(&Qls::new(grid, &tol)?, &tol))
    } else {
        None
    };
    if json {
        let value = serde_json::json!({
            "verification": rep,
            "cardinality": card.as_ref().map(|r| r.as_ref().ok()),
            "error": card.as_ref().and_then(|r| r.as_ref().err().map(ToString::to_string)),
        });
        println!("{}", serde_json::to_string_pretty(&value).expect("serializable"));
    } else {
        print!("{}", format::verification(&rep));
        if let Some(Ok(r)) = &card {
            print!("{}", format::cardinality(r, &tol));
        }
    }
    if !rep.pass {
        return Err(Failure {
            code: 2,
            message: "not a quantum Latin square".into(),
        });
    }
    match card {
        Some(Err(e)) => Err(e.into()),
        _ => Ok(()),
    }
}

fn cardinality(file: &PathBuf, tol: &TolArgs, json: bool) -> CmdResult {
    let tol = tol.tolerance()?;
    let q = load_document(file)?.to_qls(&tol)?;
    let r = qls_cardinality(&q, &tol)?;
    if json {
        println!("{}", serde_json::to_string_pretty(&r).expect("serializable"));
    } else {
        print!("{}", format::cardinality(&r, &tol));
    }
    Ok(())
}

fn plan(order: usize, json: bool) -> CmdResult {
    let set = achievable_set(order)?;
    if json {
        println!("{}", serde_json::to_string_pretty(&set).expect("serializable"));
    } else {
        print!("{}", format::plan(order, &set));
    }
    Ok(())
}

fn catalog_cmd(order: usize, c: Option<usize>, out: Option<&PathBuf>, audit: bool) -> CmdResult {
    if order != 8 {
        return Err(Failure {
            code: 1,
            message: format!("the catalog holds order 8 only, not {order}"),
        });
    }
    if audit {
        for e in catalog::audit_log()? {
            let case = e.case_id.map_or_else(|| "all".to_string(), |c| format!("case {c}"));
            println!("{case}: {}", e.message);
        }
        if c.is_none() {
            return Ok(());
        }
    }
    let c = c.expect("clap requires --cardinality without --audit");
    let sq = catalog::catalog_qls8(c)?;
    let got = measured(&sq.qls)?;
    let (method, parameters, source) = match sq.source {
        CatalogSource::Explicit { case_id } => (
            Method::Catalog,
            Parameters { case_id: Some(case_id), ..Default::default() },
            format!("explicit case {case_id}"),
        ),
        CatalogSource::DirectProduct { m, t } => (
            Method::DirectProduct,
            Parameters { m: Some(m), t: Some(t), ..Default::default() },
            format!("direct product m={m} t={t}"),
        ),
        CatalogSource::Maximal => (Method::Maximal, Parameters::default(), "maximal construction".into()),
    };
    let meta = Metadata {
        method: Some(method),
        parameters: Some(parameters),
        claimed_cardinality: Some(c),
    };
    emit(&sq.qls, meta, &[format!("source: {source}"), format!("measured c: {got}")], out)
}

fn table(max_order: usize, fmt: TableFormat) -> CmdResult {
    let mut rows = Vec::new();
    for v in 2..=max_order {
        rows.push((v, achievable_set(v)?));
    }
    print!("{}", format::table(&rows, fmt));
    Ok(())
}

fn run(cli: Cli) -> CmdResult {
    match cli.command {
        Command::Construct { order, cardinality, out } => construct(order, cardinality, out.as_ref()),
        Command::ConstructMaximal { order, out } => construct_simple(maximal_qls(order)?, Method::Maximal, out.as_ref()),
        Command::ConstructClassical { order, latin, out } => classical(order, &latin, out.as_ref()),
        Command::Verify { file, tol, json } => verify(&file, &tol, json),
        Command::Cardinality { file, tol, json } => cardinality(&file, &tol, json),
        Command::Plan { order, json } => plan(order, json),
        Command::Catalog { order, cardinality, out, audit } => catalog_cmd(order, cardinality, out.as_ref(), audit),
        Command::Table { max_order, format } => table(max_order, format),
    }
}

fn main() -> ExitCode {
    // Usage errors exit with 1 so that 2 keeps meaning "verification failed".
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
