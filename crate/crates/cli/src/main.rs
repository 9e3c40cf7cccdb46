use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};
use gkm_core::corpus;
use gkm_core::document::{load_document, parse_covector, GraphDocument};
use gkm_core::render::render_svg;
use gkm_core::report::{build_report, orient_for_report};
use gkm_core::WeightVector;

/// Exact GKM graph computations for Hamiltonian torus actions.
#[derive(Parser)]
#[command(name = "gkm", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the GKM axioms on a graph file.
    Validate { file: PathBuf },
    /// Orient, compute cohomology and Thom classes, and decide hard Lefschetz.
    Report {
        file: PathBuf,
        /// Covector such as `1/2,3`; overrides the file's `xi`.
        #[arg(long, value_parser = parse_xi, allow_hyphen_values = true)]
        xi: Option<WeightVector>,
        #[arg(long)]
        json: bool,
    },
    /// Draw the moment graph as SVG.
    Render {
        file: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
        #[arg(long, value_parser = parse_xi, allow_hyphen_values = true)]
        xi: Option<WeightVector>,
    },
    /// List the built-in instances, or print one as JSON.
    Corpus { name: Option<String> },
}

fn parse_xi(s: &str) -> std::result::Result<WeightVector, String> {
    parse_covector(s).map_err(|e| e.to_string())
}

/// Writes to stdout, staying quiet when the reader has gone away (`| head`).
fn emit(text: &str) {
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

fn load(path: &Path) -> Result<GraphDocument> {
    load_document(path).with_context(|| format!("reading {}", path.display()))
}

fn validate(file: &Path) -> Result<bool> {
    let g = load(file)?.to_graph()?;
    let report = g.validate();
    emit(&report.to_string());
    if report.is_valid() {
        emit(&format!("valid GKM graph: {} vertices, {} edges\n", g.vertex_count(), g.edges().len()));
    }
    Ok(report.is_valid())
}

fn report(file: &Path, xi: Option<WeightVector>, json: bool) -> Result<bool> {
    let doc = load(file)?;
    let g = doc.to_validated_graph()?;
    let (og, source) = orient_for_report(&g, doc.xi()?, xi)?;
    let report = build_report(&og, source);
    if json {
        emit(&(report.to_json() + "\n"));
    } else {
        emit(&report.to_text());
    }
    Ok(report.ok)
}

fn render(file: &Path, output: &Path, xi: Option<WeightVector>) -> Result<bool> {
    let doc = load(file)?;
    let g = doc.to_validated_graph()?;
    let (og, _) = orient_for_report(&g, doc.xi()?, xi)?;
    let svg = render_svg(&og)?;
    std::fs::write(output, svg).with_context(|| format!("writing {}", output.display()))?;
    emit(&format!("wrote {}\n", output.display()));
    Ok(true)
}

fn list_corpus(name: Option<&str>) -> Result<bool> {
    match name {
        Some(name) => emit(corpus::instance(name)?.source),
        None => {
            for inst in corpus::instances() {
                let mark = if inst.enabled { "" } else { " (disabled)" };
                emit(&format!("{:<16} {}{mark}\n", inst.name, inst.summary));
            }
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Validate { file } => validate(file),
        Command::Report { file, xi, json } => report(file, xi.clone(), *json),
        Command::Render { file, output, xi } => render(file, output, xi.clone()),
        Command::Corpus { name } => list_corpus(name.as_deref()),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
