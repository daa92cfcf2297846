//! Command-line front end.
//!
//! Exit codes: 0 success, 1 malformed input, 2 infeasible input or failed
//! precondition, 3 I/O failure. Reports go to standard output, diagnostics
//! to standard error.

mod render;
mod report;

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Deserialize;

use crate::error::Error;
use crate::lengths::SideLengths;
use crate::pipeline::{choose_tangents, solve, RootSelection};
use crate::radius::all_radii;
use crate::tangents::{check_feasible, feasibility_interval_even};
use crate::tolerance::Tolerance;

pub const EXIT_OK: i32 = 0;
pub const EXIT_MALFORMED: i32 = 1;
pub const EXIT_INFEASIBLE: i32 = 2;
pub const EXIT_IO: i32 = 3;

const MAX_SWEEP_SAMPLES: usize = 1_000_000;

#[derive(Debug, Parser)]
#[command(
    name = "tangential",
    version,
    about = "Polygons circumscribed about a circle, from ordered side lengths"
)]
pub struct Cli {
    /// Relative tolerance for approximate comparisons (scaled by the perimeter).
    #[arg(long, global = true)]
    tolerance: Option<f64>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Structured,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decide whether a tangential polygon with these sides exists.
    Check(InputArgs),
    /// Tangent lengths, every incircle radius, areas and vertices.
    Solve {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, allow_negative_numbers = true)]
        t1: Option<f64>,
        /// `all` or a winding index.
        #[arg(long, default_value = "all")]
        roots: String,
    },
    /// Draw the solved polygons as SVG.
    Render {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, allow_negative_numbers = true)]
        t1: Option<f64>,
        #[arg(long, default_value = "all")]
        roots: String,
        #[arg(long)]
        out: PathBuf,
        /// Also draw the Poncelet chain starting at this angle (bicentric quadrilaterals).
        #[arg(long, allow_negative_numbers = true)]
        poncelet: Option<f64>,
    },
    /// Sample the even-n family over t1 and print CSV.
    Sweep {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, allow_negative_numbers = true)]
        from: Option<f64>,
        #[arg(long, allow_negative_numbers = true)]
        to: Option<f64>,
        #[arg(long)]
        step: Option<f64>,
    },
}

#[derive(Debug, Args)]
struct InputArgs {
    /// Comma-separated side lengths, e.g. "3,4,5".
    sides: Option<String>,
    /// JSON file with `sides` and optional `t1` and `tolerance`.
    #[arg(long, conflicts_with = "sides")]
    input: Option<PathBuf>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct InputFile {
    sides: Vec<f64>,
    t1: Option<f64>,
    tolerance: Option<f64>,
}

/// A failure mapped to an exit code and a one-line diagnostic.
#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn malformed(message: impl Into<String>) -> Self {
        Failure { code: EXIT_MALFORMED, message: message.into() }
    }

    fn precondition(message: impl Into<String>) -> Self {
        Failure { code: EXIT_INFEASIBLE, message: message.into() }
    }

    fn io(message: impl Into<String>) -> Self {
        Failure { code: EXIT_IO, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::TooFewSides(_) => Failure::malformed("need at least 3 sides"),
            Error::NonpositiveSide { .. } => Failure::malformed(e.to_string()),
            _ => Failure::precondition(e.to_string()),
        }
    }
}

struct Request {
    sides: SideLengths,
    t1: Option<f64>,
    tol: Tolerance,
}

fn parse_sides(text: &str) -> Result<Vec<f64>, Failure> {
    text.split(',')
        .map(|part| {
            let part = part.trim();
            part.parse::<f64>()
                .map_err(|_| Failure::malformed(format!("cannot parse side length {part:?}")))
        })
        .collect()
}

fn load_request(
    input: &InputArgs,
    t1: Option<f64>,
    tolerance: Option<f64>,
) -> Result<Request, Failure> {
    let (values, file_t1, file_tol) = match (&input.sides, &input.input) {
        (Some(text), _) => (parse_sides(text)?, None, None),
        (None, Some(path)) => {
            let text = fs::read_to_string(path)
                .map_err(|e| Failure::io(format!("cannot read {}: {e}", path.display())))?;
            let file: InputFile = serde_json::from_str(&text)
                .map_err(|e| Failure::malformed(format!("bad input file: {e}")))?;
            (file.sides, file.t1, file.tolerance)
        }
        (None, None) => return Err(Failure::malformed("no side lengths given")),
    };
    let epsilon = tolerance.or(file_tol).unwrap_or(crate::tolerance::DEFAULT_EPSILON);
    if !(epsilon.is_finite() && epsilon > 0.0) {
        return Err(Failure::malformed(format!("tolerance must be positive, got {epsilon}")));
    }
    let sides = SideLengths::new(values)?;
    Ok(Request { sides, t1: t1.or(file_t1), tol: Tolerance::new(epsilon) })
}

fn parse_roots(text: &str) -> Result<RootSelection, Failure> {
    if text == "all" {
        return Ok(RootSelection::All);
    }
    text.parse::<usize>()
        .map(RootSelection::Winding)
        .map_err(|_| Failure::malformed(format!("--roots expects `all` or a winding index, got {text:?}")))
}

/// Run the CLI on `args` (including the program name) and return the exit
/// code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    return EXIT_OK;
                }
                _ => EXIT_MALFORMED,
            };
            let _ = write!(err, "{e}");
            return code;
        }
    };
    match dispatch(&cli, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Result<i32, Failure> {
    let io = |e: std::io::Error| Failure::io(format!("write failed: {e}"));
    match &cli.command {
        Command::Check(input) => {
            let req = load_request(input, None, cli.tolerance)?;
            let report = check_feasible(&req.sides, req.tol);
            let text = match cli.format {
                Format::Text => report::check_text(&req.sides, &report),
                Format::Structured => report::to_json(&report::CheckResponse::new(&req.sides, &report)),
            };
            out.write_all(text.as_bytes()).map_err(io)?;
            Ok(if report.feasible { EXIT_OK } else { EXIT_INFEASIBLE })
        }
        Command::Solve { input, t1, roots } => {
            let req = load_request(input, *t1, cli.tolerance)?;
            let selection = parse_roots(roots)?;
            let solved = solve(&req.sides, req.t1, selection, req.tol)?;
            let text = match cli.format {
                Format::Text => report::solve_text(&solved),
                Format::Structured => report::to_json(&report::SolveResponse::new(&solved)),
            };
            out.write_all(text.as_bytes()).map_err(io)?;
            Ok(EXIT_OK)
        }
        Command::Render { input, t1, roots, out: path, poncelet } => {
            let req = load_request(input, *t1, cli.tolerance)?;
            let selection = parse_roots(roots)?;
            let solved = solve(&req.sides, req.t1, selection, req.tol)?;
            let chain = match poncelet {
                None => None,
                Some(theta) => {
                    let quad = solved.bicentric.as_ref().ok_or_else(|| {
                        Failure::precondition("--poncelet requires a bicentric quadrilateral (n = 4, a1 + a3 = a2 + a4, no --t1)")
                    })?;
                    Some(crate::bicentric::poncelet_family(quad, *theta, req.tol)?)
                }
            };
            let svg = render::svg(&solved, chain.as_ref());
            write_file(path, &svg)?;
            if cli.format == Format::Text {
                writeln!(out, "wrote {}", path.display()).map_err(io)?;
            }
            Ok(EXIT_OK)
        }
        Command::Sweep { input, from, to, step } => {
            let req = load_request(input, None, cli.tolerance)?;
            let csv = sweep_csv(&req, *from, *to, *step)?;
            out.write_all(csv.as_bytes()).map_err(io)?;
            Ok(EXIT_OK)
        }
    }
}

fn write_file(path: &Path, contents: &str) -> Result<(), Failure> {
    fs::write(path, contents)
        .map_err(|e| Failure::io(format!("cannot write {}: {e}", path.display())))
}

fn sweep_csv(
    req: &Request,
    from: Option<f64>,
    to: Option<f64>,
    step: Option<f64>,
) -> Result<String, Failure> {
    let sides = &req.sides;
    if sides.is_odd() {
        return Err(Failure::precondition("sweep requires even n"));
    }
    let interval = feasibility_interval_even(sides, req.tol)?;
    let from = from.unwrap_or(interval.lo);
    let to = to.unwrap_or(interval.hi);
    let step = step.unwrap_or(interval.width() / 10.0);
    if !(from.is_finite() && to.is_finite() && step.is_finite() && step > 0.0) {
        return Err(Failure::malformed("sweep needs finite --from/--to and a positive --step"));
    }
    let samples = ((to - from) / step).floor();
    if samples >= MAX_SWEEP_SAMPLES as f64 {
        return Err(Failure::malformed(format!("sweep would take more than {MAX_SWEEP_SAMPLES} samples")));
    }
    let n = sides.len();
    let mut csv = String::from("t1");
    for j in 1..=n {
        csv.push_str(&format!(",t_{j}"));
    }
    csv.push_str(",winding,radius,area\n");
    if samples < 0.0 {
        return Ok(csv);
    }
    for i in 0..=samples as usize {
        let t1 = from + i as f64 * step;
        // the open interval clips the range
        let Ok((_, tangents)) = choose_tangents(sides, Some(t1), req.tol) else {
            continue;
        };
        let tangent_cols: String = tangents.values().iter().map(|t| format!(",{t}")).collect();
        for sol in all_radii(&tangents)? {
            csv.push_str(&format!(
                "{t1}{tangent_cols},{},{},{}\n",
                sol.winding, sol.radius, sol.area
            ));
        }
    }
    Ok(csv)
}
