mod numfmt;
mod report;
mod sweep;

use clap::{Parser, Subcommand, ValueEnum};
use enclose_core::{
    figure_filename, min_enclosing_triangle, render_figure, render_scene, ConvexPolygon,
    Error as CoreError, Scene, Shape, SideContact, SolverConfig,
};
use numfmt::sig9;
use std::path::PathBuf;
use std::process::ExitCode;

// Exit codes: 0 ok, 1 verification failure, 2 parse, 3 validation,
// 4 convergence, 5 unknown figure.
const EXIT_VERIFY: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_VALIDATION: u8 = 3;
const EXIT_CONVERGENCE: u8 = 4;
const EXIT_UNKNOWN_FIGURE: u8 = 5;

/// Minimum-area enclosing triangles of convex polygons.
///
/// The ENCLOSE_TRI_SEED environment variable is reserved and unused; all
/// solvers are deterministic.
#[derive(Parser)]
#[command(name = "enclose", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Recompute every registered worked value and report match status.
    VerifyPaper {
        /// Emit the report as JSON instead of an aligned table.
        #[arg(long)]
        json: bool,
        /// Compare discrepancy-flagged cases against the printed values.
        #[arg(long)]
        strict_paper: bool,
        /// Override the per-case tolerance.
        #[arg(long)]
        tolerance: Option<f64>,
    },
    /// Tabulate closed-form vs numeric area over a height range.
    Sweep {
        #[arg(long)]
        shape: String,
        #[arg(long)]
        h_min: f64,
        #[arg(long)]
        h_max: f64,
        #[arg(long)]
        steps: usize,
        #[arg(long, value_enum)]
        format: OutputFormat,
        #[arg(long)]
        out: PathBuf,
    },
    /// Solve an arbitrary convex polygon read from a JSON file.
    Solve {
        #[arg(long)]
        polygon: PathBuf,
        /// Also render the polygon and its minimal triangle as SVG.
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Emit one of the 14 registered construction figures as SVG.
    Figure {
        #[arg(long)]
        id: u32,
        #[arg(long)]
        out: PathBuf,
    },
}

fn exit_for(err: &CoreError) -> u8 {
    match err {
        CoreError::ConvergenceFailure { .. } => EXIT_CONVERGENCE,
        CoreError::UnknownFigure(_) => EXIT_UNKNOWN_FIGURE,
        _ => EXIT_VALIDATION,
    }
}

fn fail(code: u8, msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(code)
}

fn cmd_verify(json: bool, strict: bool, tolerance: Option<f64>) -> ExitCode {
    let report = report::verify_paper(strict, tolerance);
    if json {
        println!(
            "{}",
            serde_json::to_string_pretty(&report).expect("report serializes")
        );
    } else {
        print!("{}", report::format_text(&report));
    }
    if report.has_failures() {
        ExitCode::from(EXIT_VERIFY)
    } else {
        ExitCode::SUCCESS
    }
}

fn cmd_sweep(
    shape: &str,
    h_min: f64,
    h_max: f64,
    steps: usize,
    format: OutputFormat,
    out: &PathBuf,
) -> ExitCode {
    let Some(shape) = Shape::parse(shape) else {
        return fail(
            EXIT_VALIDATION,
            format!("unknown shape {shape:?}; expected square, pentagon or hexagon"),
        );
    };
    if steps < 2 || !h_min.is_finite() || !h_max.is_finite() || h_min >= h_max {
        return fail(EXIT_VALIDATION, "need steps >= 2 and h-min < h-max");
    }
    let rows = match sweep::run(shape, h_min, h_max, steps) {
        Ok(rows) => rows,
        Err(e) => return fail(exit_for(&e), e),
    };
    let text = match format {
        OutputFormat::Csv => sweep::to_csv(&rows),
        OutputFormat::Json => sweep::to_json(&rows),
    };
    if let Err(e) = std::fs::write(out, text) {
        return fail(
            EXIT_VALIDATION,
            format!("cannot write {}: {e}", out.display()),
        );
    }
    println!("wrote {} rows to {}", rows.len(), out.display());
    ExitCode::SUCCESS
}

fn contact_text(poly: &ConvexPolygon, c: SideContact) -> String {
    let n = poly.len();
    match c {
        SideContact::Flush(i) => format!("flush with polygon edge {i}-{}", (i + 1) % n),
        SideContact::Vertex(i) => format!("touches polygon vertex {i}"),
        SideContact::None => "no contact".to_string(),
    }
}

fn cmd_solve(polygon: &PathBuf, svg: Option<&PathBuf>) -> ExitCode {
    let raw = match std::fs::read_to_string(polygon) {
        Ok(s) => s,
        Err(e) => {
            return fail(
                EXIT_PARSE,
                format!("cannot read {}: {e}", polygon.display()),
            )
        }
    };
    #[derive(serde::Deserialize)]
    struct RawPolygon {
        vertices: Vec<[f64; 2]>,
    }
    let parsed: RawPolygon = match serde_json::from_str(&raw) {
        Ok(p) => p,
        Err(e) => return fail(EXIT_PARSE, format!("invalid polygon JSON: {e}")),
    };
    let vertices = parsed
        .vertices
        .into_iter()
        .map(|[x, y]| enclose_core::Point2::new(x, y))
        .collect();
    let poly = match ConvexPolygon::new(vertices) {
        Ok(p) => p,
        Err(e) => return fail(EXIT_VALIDATION, e),
    };
    let result = match min_enclosing_triangle(&poly, &SolverConfig::default()) {
        Ok(r) => r,
        Err(e) => return fail(exit_for(&e), e),
    };
    println!("minimum enclosing triangle area: {}", sig9(result.area));
    let t = result.triangle;
    for (name, v) in [("A", t.a), ("B", t.b), ("C", t.c)] {
        println!("  {name} = ({}, {})", sig9(v.x), sig9(v.y));
    }
    for (side, c) in ["AB", "BC", "CA"].iter().zip(result.contacts) {
        println!("  side {side}: {}", contact_text(&poly, c));
    }
    if let Some(path) = svg {
        let scene = Scene {
            polygon: Some(poly),
            triangles: vec![t],
            ..Scene::default()
        };
        match render_scene(&scene, 800) {
            Ok(doc) => {
                if let Err(e) = std::fs::write(path, doc) {
                    return fail(
                        EXIT_VALIDATION,
                        format!("cannot write {}: {e}", path.display()),
                    );
                }
                println!("wrote {}", path.display());
            }
            Err(e) => return fail(exit_for(&e), e),
        }
    }
    ExitCode::SUCCESS
}

fn cmd_figure(id: u32, out: &PathBuf) -> ExitCode {
    match render_figure(id, 800) {
        Ok(doc) => {
            if let Err(e) = std::fs::write(out, doc) {
                return fail(
                    EXIT_VALIDATION,
                    format!("cannot write {}: {e}", out.display()),
                );
            }
            println!("wrote {} ({})", out.display(), figure_filename(id));
            ExitCode::SUCCESS
        }
        Err(e) => fail(exit_for(&e), e),
    }
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::VerifyPaper {
            json,
            strict_paper,
            tolerance,
        } => cmd_verify(json, strict_paper, tolerance),
        Command::Sweep {
            shape,
            h_min,
            h_max,
            steps,
            format,
            out,
        } => cmd_sweep(&shape, h_min, h_max, steps, format, &out),
        Command::Solve { polygon, svg } => cmd_solve(&polygon, svg.as_ref()),
        Command::Figure { id, out } => cmd_figure(id, &out),
    }
}
