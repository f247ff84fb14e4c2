use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use enl_core::io::bundle::{raw_operator, RawTask};
use enl_core::io::{
    emit_report, exit_code, parse_bundle, run_all, run_task, serialize_bundle, Bundle, Format, RawBundle,
};
use enl_core::operators::centroid_basis;

#[derive(Parser)]
#[command(
    name = "enl",
    version,
    about = "Check and construct equivariant Nijenhuis structures from JSON bundles"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Run every task of a bundle, or one named task.
    Check {
        bundle: PathBuf,
        #[arg(long)]
        task: Option<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
    },
    /// Build an object and write it as a bundle fragment.
    ///
    /// Arguments are `key=value` pairs; a bare word binds to the kind's main
    /// input (e.g. `enl construct double enl_bialg bundle.json --out d.json`).
    Construct {
        kind: String,
        /// Task arguments followed by the bundle path.
        #[arg(required = true, num_args = 1..)]
        rest: Vec<String>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Solve a linear system attached to an algebra.
    Solve {
        #[arg(value_enum)]
        what: Solve,
        #[arg(long)]
        algebra: String,
        bundle: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Solve {
    Centroid,
}

fn load(path: &Path) -> Result<Bundle, ExitCode> {
    let text = std::fs::read_to_string(path).map_err(|e| {
        eprintln!("error: cannot read {}: {e}", path.display());
        ExitCode::from(2)
    })?;
    parse_bundle(&text).map_err(|e| {
        eprintln!("error: {e}");
        ExitCode::from(2)
    })
}

fn primary_key(kind: &str) -> &'static str {
    match kind {
        "double" | "quasitriangular" => "bialgebra",
        "bicross" => "matched_pair",
        "semidirect" => "representation",
        "descendent" | "rk_lift" | "prelie_from_relrb" | "transport" => "relative_rb",
        "canonical_r" | "subadjacent" | "prelie_deform" => "prelie",
        "dualize" => "cobracket",
        "coboundary" => "rmatrix",
        _ => "algebra",
    }
}

fn construct(kind: String, mut rest: Vec<String>, out: &Path) -> Result<ExitCode, ExitCode> {
    let bundle_path = PathBuf::from(rest.pop().expect("clap requires one value"));
    let mut bundle = load(&bundle_path)?;
    let mut task = RawTask {
        kind: kind.clone(),
        args: Default::default(),
    };
    for arg in rest {
        let (key, value) = match arg.split_once('=') {
            Some((k, v)) => (k.to_string(), v.to_string()),
            None => (primary_key(&kind).to_string(), arg),
        };
        let value = match value.parse::<u64>() {
            Ok(n) if key == "depth" => serde_json::Value::from(n),
            _ if value == "true" || value == "false" => serde_json::Value::Bool(value == "true"),
            _ => serde_json::Value::String(value),
        };
        task.args.insert(key, value);
    }
    let name = format!("construct {kind}");
    bundle.tasks.clear();
    bundle.tasks.insert(name.clone(), task);
    let report = run_task(&bundle, &name);
    print!("{}", emit_report(std::slice::from_ref(&report), Format::Text));
    for note in &report.notes {
        println!("  {note}");
    }
    let fragment = report.outputs.clone().unwrap_or_default();
    std::fs::write(out, serialize_bundle(&fragment) + "\n").map_err(|e| {
        eprintln!("error: cannot write {}: {e}", out.display());
        ExitCode::from(2)
    })?;
    Ok(ExitCode::from(exit_code(&[report]) as u8))
}

fn run(cli: Cli) -> Result<ExitCode, ExitCode> {
    match cli.command {
        Command::Check { bundle, task, format } => {
            let b = load(&bundle)?;
            let reports = match task {
                Some(t) => vec![run_task(&b, &t)],
                None => run_all(&b),
            };
            let format = match format {
                OutputFormat::Text => Format::Text,
                OutputFormat::Json => Format::Json,
            };
            print!("{}", emit_report(&reports, format));
            Ok(ExitCode::from(exit_code(&reports) as u8))
        }
        Command::Construct { kind, rest, out } => construct(kind, rest, &out),
        Command::Solve {
            what: Solve::Centroid,
            algebra,
            bundle,
        } => {
            let b = load(&bundle)?;
            let Some(g) = b.lie_algebras.get(&algebra) else {
                eprintln!("error: unknown Lie algebra `{algebra}`");
                return Err(ExitCode::from(2));
            };
            let mut fragment = RawBundle::default();
            for (k, e) in centroid_basis(g).iter().enumerate() {
                fragment
                    .operators
                    .insert(format!("centroid_{}", k + 1), raw_operator(Some(&algebra), e));
            }
            println!("{}", serialize_bundle(&fragment));
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    run(Cli::parse()).unwrap_or_else(|code| code)
}
