//! Command implementations behind the `cliquehole` binary.
//!
//! Every command writes its primary output to `out` (or to `--out`), notes and
//! diagnostics to `err`, and returns the process exit code.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use cliquehole::io::{
    emit_diagram, emit_trace, emit_trace_json, parse_coloring, parse_instance,
    parse_instance_unvalidated, serialize_coloring, serialize_instance,
};
use cliquehole::oracle::{
    chromatic_number, graph_of_hole, is_k_colorable, verify_coloring, SearchLimits,
    DEFAULT_MAX_VERTICES,
};
use cliquehole::{
    color_hole, decide_hole, extract_ring, hole_from_profile, random_ring_profile, CliqueHole,
    ColoringOptions, Error, GeneratorSpec, HoleColoring, Picker, RingRoute,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "cliquehole", version, about = "Colouring m-clique holes")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Validate an instance and decide m-colourability.
    Check(CheckArgs),
    /// Construct and verify an m-colouring.
    Color(ColorArgs),
    /// Check a colouring against an instance.
    Verify(VerifyArgs),
    /// Generate an instance from a profile or at random.
    Gen(GenArgs),
    /// Exact k-colourability or chromatic number by search.
    Oracle(OracleArgs),
    /// Graphviz diagram of the family cycle for odd m.
    Diagram(DiagramArgs),
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    pub instance: PathBuf,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct ColorArgs {
    pub instance: PathBuf,
    /// Write the balancing table here (TSV) and beside it as `<path>.json`.
    #[arg(long)]
    pub trace: Option<PathBuf>,
    /// 1-based receiver per iteration, e.g. `7,2,5,5`.
    #[arg(long, value_delimiter = ',')]
    pub i_sequence: Option<Vec<usize>>,
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Vertex guard for the exact-search fallback.
    #[arg(long, default_value_t = DEFAULT_MAX_VERTICES)]
    pub max_vertices: usize,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    pub instance: PathBuf,
    #[arg(long)]
    pub coloring: PathBuf,
    /// Allowed colours are `0..k`; defaults to m.
    #[arg(long)]
    pub k: Option<usize>,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[arg(long)]
    pub m: usize,
    #[arg(long, value_delimiter = ',', conflicts_with_all = ["sum", "seed"])]
    pub profile: Option<Vec<usize>>,
    /// Clique sizes `|Phi_i|`, padded with private vertices.
    #[arg(long, value_delimiter = ',', requires = "profile")]
    pub phi: Option<Vec<usize>>,
    #[arg(long, required_unless_present = "profile")]
    pub sum: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    pub instance: PathBuf,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long, default_value_t = DEFAULT_MAX_VERTICES)]
    pub max_vertices: usize,
}

#[derive(Debug, Args)]
pub struct DiagramArgs {
    #[arg(long)]
    pub m: usize,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// Exit code for a library error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::NotColorable(_) => EXIT_NEGATIVE,
        Error::InternalInvariant(_) | Error::Unresolved { .. } | Error::CoverageMismatch(_) => {
            EXIT_INTERNAL
        }
        _ => EXIT_INPUT,
    }
}

struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let message = match &e {
            Error::InvalidHole(report) => format!("invalid clique hole:\n{report}"),
            Error::Unresolved {
                profile,
                stuck_at,
                reason,
            } => format!(
                "unresolved: padding stuck\n  profile:  {}\n  stuck at: {}\n  sum {} < bound {}\n  {reason}",
                one_line(profile),
                one_line(stuck_at),
                stuck_at.iter().sum::<usize>(),
                profile.len() * (profile.len() / 2)
            ),
            other => other.to_string(),
        };
        Self {
            code: exit_code(&e),
            message,
        }
    }
}

fn input_failure(message: String) -> Failure {
    Failure {
        code: EXIT_INPUT,
        message,
    }
}

type CmdResult = std::result::Result<i32, Failure>;

fn one_line(v: &[usize]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(","))
}

fn read(path: &Path) -> std::result::Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| input_failure(format!("{}: {e}", path.display())))
}

fn write_to(path: &Path, text: &str) -> std::result::Result<(), Failure> {
    fs::write(path, text).map_err(|e| input_failure(format!("{}: {e}", path.display())))
}

fn emit(out: &mut dyn Write, path: Option<&Path>, text: &str) -> std::result::Result<(), Failure> {
    match path {
        Some(p) => write_to(p, text),
        None => out
            .write_all(text.as_bytes())
            .map_err(|e| input_failure(e.to_string())),
    }
}

fn load_hole(path: &Path) -> std::result::Result<CliqueHole, Failure> {
    Ok(parse_instance(&read(path)?)?)
}

/// Runs one command. Nothing here calls `process::exit`.
pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let result = match &cli.command {
        Command::Check(a) => check(a, out),
        Command::Color(a) => color(a, out, err),
        Command::Verify(a) => verify(a, out),
        Command::Gen(a) => gen(a, out),
        Command::Oracle(a) => oracle(a, out),
        Command::Diagram(a) => diagram(a, out),
    };
    match result {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn check(a: &CheckArgs, out: &mut dyn Write) -> CmdResult {
    let hole = parse_instance_unvalidated(&read(&a.instance)?)?;
    let report = hole.validate();
    if !report.is_valid() {
        if a.json {
            let violations: Vec<String> =
                report.violations.iter().map(ToString::to_string).collect();
            let doc = json!({ "valid": false, "m": hole.m(), "violations": violations });
            let _ = writeln!(out, "{}", serde_json::to_string_pretty(&doc).unwrap());
        }
        return Err(Error::InvalidHole(report).into());
    }
    let ring = extract_ring(&hole)?;
    let verdict = decide_hole(&hole)?;
    let code = if verdict.colorable {
        EXIT_OK
    } else {
        EXIT_NEGATIVE
    };
    if a.json {
        let doc = json!({
            "valid": true,
            "m": verdict.m,
            "profile": ring.profile().sizes(),
            "intersection_sum": verdict.intersection_sum,
            "bound": verdict.bound,
            "slack": verdict.slack,
            "colorable": verdict.colorable,
        });
        let _ = writeln!(out, "{}", serde_json::to_string_pretty(&doc).unwrap());
    } else {
        let _ = writeln!(out, "valid {}-clique hole", verdict.m);
        let _ = writeln!(out, "profile {}", ring.profile());
        let _ = writeln!(out, "{verdict}");
        let _ = writeln!(out, "slack {}", verdict.slack);
    }
    Ok(code)
}

fn color(a: &ColorArgs, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    let hole = load_hole(&a.instance)?;
    let picker = match &a.i_sequence {
        Some(seq) => Picker::scripted_one_based(seq)?,
        None => Picker::default(),
    };
    let options = ColoringOptions {
        picker,
        fallback_limits: SearchLimits {
            max_vertices: a.max_vertices,
        },
    };
    let result = match color_hole(&hole, &options) {
        Ok(r) => r,
        Err(Error::NotColorable(v)) => {
            let _ = writeln!(err, "{v}");
            return Ok(EXIT_NEGATIVE);
        }
        Err(e) => return Err(e.into()),
    };
    report_route(&result, err);

    // checked again here against the instance as read, independent of the
    // check inside the library
    let m = hole.m();
    let report = verify_coloring(&graph_of_hole(&hole), &result.coloring, m);
    if !report.proper {
        return Err(
            Error::InternalInvariant(format!("colouring failed verification:\n{report}")).into(),
        );
    }

    if let Some(path) = &a.trace {
        match &result.ring.trace {
            Some(trace) => {
                write_to(path, &emit_trace(trace))?;
                let mut json_path = path.clone().into_os_string();
                json_path.push(".json");
                write_to(Path::new(&json_path), &emit_trace_json(trace))?;
            }
            None => {
                let _ = writeln!(
                    err,
                    "note: no balancing trace for this route; {} not written",
                    path.display()
                );
            }
        }
    }
    emit(
        out,
        a.out.as_deref(),
        &serialize_coloring(m, &result.coloring),
    )?;
    Ok(EXIT_OK)
}

fn report_route(result: &HoleColoring, err: &mut dyn Write) {
    let ring = &result.ring;
    match ring.route {
        RingRoute::Even => {
            let _ = writeln!(err, "route: even alternating scheme");
        }
        RingRoute::Balanced => {
            if let Some(plan) = &ring.padding {
                if !plan.is_identity() {
                    let _ = writeln!(
                        err,
                        "padded {} -> {} ({} virtual vertices)",
                        plan.original,
                        plan.padded,
                        plan.virtual_count()
                    );
                }
            }
            if let Some(trace) = &ring.trace {
                let _ = writeln!(err, "route: balancing, {} iterations", trace.iterations());
                for t in &trace.negative_transients {
                    let _ = writeln!(
                        err,
                        "note: s{} = {} after iteration {} (final counts are non-negative)",
                        t.family + 1,
                        t.value,
                        t.iteration
                    );
                }
            }
        }
        RingRoute::SearchFallback => {
            let stuck = ring.stuck_at.as_deref().unwrap_or(&[]);
            let _ = writeln!(
                err,
                "padding stuck at {}; coloured by exact search fallback",
                one_line(stuck)
            );
        }
    }
    let _ = writeln!(err, "verified: proper {}-colouring", result.verdict.m);
}

fn verify(a: &VerifyArgs, out: &mut dyn Write) -> CmdResult {
    let hole = load_hole(&a.instance)?;
    let doc = parse_coloring(&read(&a.coloring)?)?;
    let k = a.k.unwrap_or(hole.m());
    let report = verify_coloring(&graph_of_hole(&hole), &doc.colors, k);
    let _ = writeln!(out, "{report}");
    Ok(if report.proper {
        EXIT_OK
    } else {
        EXIT_NEGATIVE
    })
}

fn gen(a: &GenArgs, out: &mut dyn Write) -> CmdResult {
    let spec = match &a.profile {
        Some(profile) => {
            if profile.len() != a.m {
                return Err(input_failure(format!(
                    "--m {} but the profile has {} entries",
                    a.m,
                    profile.len()
                )));
            }
            let spec = GeneratorSpec::new(profile.clone());
            match &a.phi {
                Some(phi) => spec.with_clique_sizes(phi.clone()),
                None => spec,
            }
        }
        None => {
            let sum = a.sum.expect("clap requires --sum without --profile");
            let p = random_ring_profile(a.m, sum, a.seed)?;
            GeneratorSpec::new(p.sizes().to_vec())
        }
    };
    let hole = hole_from_profile(&spec)?;
    emit(out, a.out.as_deref(), &serialize_instance(&hole))?;
    Ok(EXIT_OK)
}

fn oracle(a: &OracleArgs, out: &mut dyn Write) -> CmdResult {
    let hole = load_hole(&a.instance)?;
    let g = graph_of_hole(&hole);
    let limits = SearchLimits {
        max_vertices: a.max_vertices,
    };
    match a.k {
        Some(k) => {
            let found = is_k_colorable(&g, k, &limits)?.is_some();
            let _ = writeln!(out, "{k}-colorable: {found}");
            Ok(if found { EXIT_OK } else { EXIT_NEGATIVE })
        }
        None => {
            let (chi, _) = chromatic_number(&g, &limits)?;
            let m = hole.m();
            let _ = writeln!(out, "chromatic number: {chi}");
            let _ = writeln!(out, "{m}-colorable: {}", chi <= m);
            Ok(if chi <= m { EXIT_OK } else { EXIT_NEGATIVE })
        }
    }
}

fn diagram(a: &DiagramArgs, out: &mut dyn Write) -> CmdResult {
    let text = emit_diagram(a.m)?;
    emit(out, a.out.as_deref(), &text)?;
    Ok(EXIT_OK)
}
