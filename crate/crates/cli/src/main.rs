//! `zdgpoly`: independent domination polynomials of zero-divisor graphs of Z_n.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use zdgpoly::driver::{compute, scan_csv, scan_range, verify_range, Engine};
use zdgpoly::engines::DEFAULT_BRUTE_CAP;
use zdgpoly::plot::{roots_csv, roots_svg};
use zdgpoly::roots::{DEFAULT_MAX_ITER, DEFAULT_TOL};
use zdgpoly::{analyze, roots_report, Error, PolynomialFile};

const EXIT_EMPTY_GRAPH: u8 = 2;
const EXIT_CAP: u8 = 3;
const EXIT_NO_CONVERGENCE: u8 = 4;
const EXIT_MISMATCH: u8 = 5;

#[derive(Parser)]
#[command(
    name = "zdgpoly",
    version,
    about = "Independent domination polynomials of zero-divisor graphs of Z_n"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the polynomial for Z_N.
    Dipoly {
        n: u64,
        #[arg(long, default_value = "auto")]
        engine: Engine,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Unimodality, log-concavity, Newton and oscillation verdicts.
    Props {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Numeric zeros plus an exact count of distinct real zeros.
    Roots {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
        #[arg(long = "max-iter", default_value_t = DEFAULT_MAX_ITER)]
        max_iter: usize,
        /// Write `re,im,residual` rows, origin copies included.
        #[arg(long)]
        csv: Option<PathBuf>,
        /// Write a scatter plot of the zeros.
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Cross-check the engines and closed forms over a range of n.
    Verify {
        #[command(flatten)]
        range: RangeArg,
    },
    /// Tabulate invariants and verdicts over a range of n as CSV.
    Scan {
        #[command(flatten)]
        range: RangeArg,
        #[arg(long)]
        out: PathBuf,
        /// Also certify the number of distinct real zeros.
        #[arg(long)]
        roots: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Input {
    n: Option<u64>,
    /// Read the polynomial from a JSON polynomial file.
    #[arg(long)]
    poly: Option<PathBuf>,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct RangeArg {
    /// Inclusive range `A..B`.
    #[arg(value_name = "A..B", value_parser = parse_range)]
    positional: Option<(u64, u64)>,
    #[arg(long, value_name = "A..B", value_parser = parse_range)]
    range: Option<(u64, u64)>,
}

impl RangeArg {
    fn bounds(&self) -> (u64, u64) {
        self.range
            .or(self.positional)
            .expect("clap enforces one of the two")
    }
}

fn parse_range(s: &str) -> Result<(u64, u64), String> {
    let (a, b) = s.split_once("..").ok_or("expected A..B")?;
    let a: u64 = a
        .trim()
        .parse()
        .map_err(|e| format!("bad lower bound: {e}"))?;
    let b: u64 = b
        .trim()
        .parse()
        .map_err(|e| format!("bad upper bound: {e}"))?;
    if a > b {
        return Err(format!("empty range {a}..{b}"));
    }
    Ok((a, b))
}

/// Polynomial plus whatever metadata the input carried.
fn load(input: &Input) -> anyhow::Result<PolynomialFile> {
    match (input.n, &input.poly) {
        (Some(n), _) => {
            let c = compute(n, Engine::Auto)?;
            Ok(PolynomialFile {
                n: Some(n),
                engine: Some(c.engine.name().to_string()),
                family: Some(c.family.to_string()),
                polynomial: c.polynomial,
            })
        }
        (None, Some(path)) => {
            let text =
                fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            Ok(PolynomialFile::parse(&text)?)
        }
        (None, None) => bail!("either N or --poly is required"),
    }
}

fn label(file: &PolynomialFile) -> String {
    match file.n {
        Some(n) => format!("Z_{n}"),
        None => "polynomial".to_string(),
    }
}

fn write_file(path: &Path, contents: &str) -> anyhow::Result<()> {
    fs::write(path, contents).with_context(|| format!("writing {}", path.display()))
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map_or_else(|| "-".to_string(), |v| v.to_string())
}

fn list(v: &[usize]) -> String {
    if v.is_empty() {
        return "-".to_string();
    }
    v.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
}

fn cmd_dipoly(out: &mut impl Write, n: u64, engine: Engine, format: Format) -> anyhow::Result<u8> {
    let c = compute(n, engine)?;
    match format {
        Format::Text => writeln!(out, "{}", c.polynomial)?,
        Format::Json => {
            let file = PolynomialFile {
                n: Some(n),
                engine: Some(c.engine.name().to_string()),
                family: Some(c.family.to_string()),
                polynomial: c.polynomial,
            };
            writeln!(out, "{}", file.to_json())?;
        }
    }
    Ok(0)
}

fn cmd_props(out: &mut impl Write, input: &Input, format: Format) -> anyhow::Result<u8> {
    let file = load(input)?;
    let r = analyze(&file.polynomial)?;
    match format {
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&r)?)?,
        Format::Text => {
            writeln!(out, "{}: {}", label(&file), file.polynomial)?;
            if let Some(family) = &file.family {
                writeln!(out, "family              {family}")?;
            }
            writeln!(out, "unimodal            {}", r.unimodal)?;
            writeln!(out, "mode_index          {}", opt(r.mode_index))?;
            writeln!(out, "logconcave          {}", r.logconcave)?;
            writeln!(out, "logconcave_witness  {}", opt(r.logconcave_witness))?;
            writeln!(
                out,
                "logconcave_viol     {}",
                list(&r.logconcave_violations)
            )?;
            writeln!(out, "newton              {}", r.newton)?;
            writeln!(out, "newton_witness      {}", opt(r.newton_witness))?;
            writeln!(out, "newton_viol         {}", list(&r.newton_violations))?;
            writeln!(out, "inc_runs            {}", r.inc_runs)?;
            writeln!(out, "dec_runs            {}", r.dec_runs)?;
            writeln!(out, "direction_changes   {}", r.direction_changes)?;
            writeln!(out, "eta                 {}", r.eta)?;
            writeln!(out, "internal_zeros      {}", r.has_internal_zeros)?;
        }
    }
    Ok(0)
}

fn cmd_roots(
    out: &mut impl Write,
    input: &Input,
    tol: f64,
    max_iter: usize,
    csv: Option<&Path>,
    svg: Option<&Path>,
) -> anyhow::Result<u8> {
    let file = load(input)?;
    let r = roots_report(&file.polynomial, tol, max_iter)?;
    writeln!(out, "{}: {}", label(&file), file.polynomial)?;
    writeln!(
        out,
        "degree {}, zero at origin x{}, distinct real {} (exact), distinct non-real {} (exact)",
        r.degree, r.origin_multiplicity, r.distinct_real_exact, r.distinct_nonreal_exact
    )?;
    for _ in 0..r.origin_multiplicity {
        writeln!(out, "{:+.12} {:+.12}i  residual 0", 0.0, 0.0)?;
    }
    for z in &r.numeric_roots {
        writeln!(
            out,
            "{:+.12} {:+.12}i  residual {:.2e}",
            z.re, z.im, z.residual
        )?;
    }
    if let Some(path) = csv {
        write_file(path, &roots_csv(&r))?;
    }
    if let Some(path) = svg {
        write_file(path, &roots_svg(&r, &format!("zeros of {}", label(&file))))?;
    }
    if r.converged {
        writeln!(out, "converged after {} iterations", r.iterations)?;
        Ok(0)
    } else {
        writeln!(
            out,
            "did not converge within {max_iter} iterations (tol {tol:e})"
        )?;
        Ok(EXIT_NO_CONVERGENCE)
    }
}

fn cmd_verify(out: &mut impl Write, (lo, hi): (u64, u64)) -> anyhow::Result<u8> {
    let entries = verify_range(lo, hi, DEFAULT_BRUTE_CAP);
    let (mut checked, mut known, mut unexpected) = (0, 0, 0);
    for e in &entries {
        writeln!(out, "{e}")?;
        if e.has_unexpected_mismatch() {
            unexpected += 1;
        } else if e.has_mismatch() {
            known += 1;
        }
        checked += 1;
    }
    writeln!(out, "summary: {checked} composite n, {known} known discrepancies, {unexpected} unexpected mismatches")?;
    Ok(if unexpected == 0 { 0 } else { EXIT_MISMATCH })
}

fn cmd_scan(
    out: &mut impl Write,
    (lo, hi): (u64, u64),
    path: &Path,
    with_roots: bool,
) -> anyhow::Result<u8> {
    let rows = scan_range(lo, hi, with_roots);
    write_file(path, &scan_csv(&rows))?;
    writeln!(out, "wrote {} rows to {}", rows.len(), path.display())?;
    Ok(0)
}

fn run(cli: Cli) -> anyhow::Result<u8> {
    let mut out = std::io::stdout().lock();
    match cli.command {
        Command::Dipoly { n, engine, format } => cmd_dipoly(&mut out, n, engine, format),
        Command::Props { input, format } => cmd_props(&mut out, &input, format),
        Command::Roots {
            input,
            tol,
            max_iter,
            csv,
            svg,
        } => cmd_roots(
            &mut out,
            &input,
            tol,
            max_iter,
            csv.as_deref(),
            svg.as_deref(),
        ),
        Command::Verify { range } => cmd_verify(&mut out, range.bounds()),
        Command::Scan {
            range,
            out: path,
            roots,
        } => cmd_scan(&mut out, range.bounds(), &path, roots),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            let code = match err.downcast_ref::<Error>() {
                Some(Error::EmptyGraph(_)) => EXIT_EMPTY_GRAPH,
                Some(Error::SizeCap { .. }) => EXIT_CAP,
                _ => 1,
            };
            ExitCode::from(code)
        }
    }
}
