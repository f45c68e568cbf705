use std::io::{self, BufWriter, Read, Write};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use serde::Serialize;

use hypdet::bundle::{constant_rank_check, fiber_at, sample_pairs};
use hypdet::exactmath::parse_rational;
use hypdet::sl2::{equivariant_basis, is_equivariant, multiplication_tensor, verify_theorem_streaming, TheoremOptions, TheoremSummary};
use hypdet::tensor::{decide, random_tensor, DecideOptions};
use hypdet::{Error, ModuleSpec, Result, Tensor3, Verdict};

#[derive(Parser)]
#[command(name = "hypdet", version, about = "Exact nondegeneracy checks for boundary-format tensors")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze a tensor given as JSON (a path, or stdin when omitted or "-").
    Analyze {
        input: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        /// Module structure "A;B;C", e.g. "S1;S1;S2".
        #[arg(long)]
        specs: Option<String>,
    },
    /// Write a tensor as JSON.
    Generate {
        #[command(subcommand)]
        kind: Generator,
    },
    /// Check the classification of nondegenerate equivariant tensors up to
    /// the given dimensions. Prints one JSON line per case and a summary.
    Verify {
        max_dim_a: usize,
        max_dim_b: usize,
        #[arg(long, default_value_t = 5)]
        samples: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

#[derive(Subcommand)]
enum Generator {
    /// Multiplication S_n ⊗ S_m → S_{n+m}.
    Schwarzenberger { n: usize, m: usize },
    /// Combination of the equivariant basis for A ⊗ B → C*.
    Equivariant {
        a: ModuleSpec,
        b: ModuleSpec,
        c: ModuleSpec,
        #[arg(allow_hyphen_values = true)]
        coeffs: Vec<String>,
    },
    /// Integer entries drawn uniformly from [-height, height].
    Random {
        dim_a: usize,
        dim_b: usize,
        dim_c: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 5)]
        height: u32,
    },
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct Timings {
    parse: f64,
    decide: f64,
    fibers: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    equivariance: Option<f64>,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct AnalysisReport {
    format: [usize; 3],
    boundary: bool,
    surjective: bool,
    verdict: Verdict,
    fiber_dim_sample: usize,
    constant_rank: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    equivariance: Option<bool>,
    seed: u64,
    samples: usize,
    timings: Timings,
}

#[derive(Serialize)]
struct ErrorBody<'a> {
    kind: &'a str,
    message: String,
}

#[derive(Serialize)]
struct ErrorReport<'a> {
    error: ErrorBody<'a>,
}

#[derive(Serialize)]
struct SummaryLine<'a> {
    summary: &'a TheoremSummary,
}

fn ms(t: Instant) -> f64 {
    t.elapsed().as_secs_f64() * 1e3
}

fn read_input(input: Option<&str>) -> Result<String> {
    let mut s = String::new();
    match input {
        None | Some("-") => io::stdin().read_to_string(&mut s).map(|_| ()),
        Some(path) => std::fs::read_to_string(path).map(|t| s = t),
    }
    .map_err(|e| Error::Input(e.to_string()))?;
    Ok(s)
}

fn parse_specs(s: &str) -> Result<[ModuleSpec; 3]> {
    let parts: Vec<&str> = s.split(';').map(str::trim).collect();
    let [a, b, c] = parts[..] else {
        return Err(Error::Parse(format!("expected \"A;B;C\", got {s:?}")));
    };
    Ok([a.parse()?, b.parse()?, c.parse()?])
}

fn analyze(input: Option<&str>, seed: u64, samples: usize, specs: Option<&str>) -> Result<AnalysisReport> {
    let t = Instant::now();
    let phi = Tensor3::from_json(&read_input(input)?)?;
    let specs = specs.map(parse_specs).transpose()?;
    if samples == 0 {
        return Err(Error::Input("samples must be at least 1".into()));
    }
    let parse = ms(t);

    let t = Instant::now();
    let verdict = decide(&phi, &DecideOptions::default());
    let decide_ms = ms(t);

    let t = Instant::now();
    let (da, db, dc) = phi.dims();
    let (a, b) = sample_pairs(&phi, da * db + 1, seed).pop().expect("one sample");
    let fiber_dim_sample = fiber_at(&phi, &a, &b)?.len();
    let constant_rank = constant_rank_check(&phi, samples, seed);
    let fibers = ms(t);

    let (equivariance, equivariance_ms) = match specs {
        Some([sa, sb, sc]) => {
            let t = Instant::now();
            let eq = is_equivariant(&phi, &sa, &sb, &sc)?;
            (Some(eq), Some(ms(t)))
        }
        None => (None, None),
    };

    Ok(AnalysisReport {
        format: [da, db, dc],
        boundary: phi.is_boundary_format(),
        surjective: phi.is_surjective(),
        verdict,
        fiber_dim_sample,
        constant_rank,
        equivariance,
        seed,
        samples,
        timings: Timings { parse, decide: decide_ms, fibers, equivariance: equivariance_ms },
    })
}

fn plural(n: usize, word: &str) -> String {
    if n == 1 { format!("{n} {word}") } else { format!("{n} {word}s") }
}

fn generate(kind: &Generator) -> Result<Tensor3> {
    match kind {
        Generator::Schwarzenberger { n, m } => Ok(multiplication_tensor(*n, *m)),
        Generator::Equivariant { a, b, c, coeffs } => {
            let basis = equivariant_basis(a, b, c);
            if coeffs.len() != basis.len() {
                return Err(Error::Input(format!(
                    "expected {}, got {} ({a} ⊗ {b} → {c})",
                    plural(basis.len(), "coefficient"),
                    coeffs.len()
                )));
            }
            if basis.is_empty() {
                return Ok(Tensor3::zeros(a.dim(), b.dim(), c.dim()));
            }
            let coeffs = coeffs.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>>>()?;
            Tensor3::combination(&coeffs, &basis)
        }
        Generator::Random { dim_a, dim_b, dim_c, seed, height } => {
            random_tensor(*dim_a, *dim_b, *dim_c, *seed, *height)
        }
    }
}

fn emit<T: Serialize>(value: &T) {
    let mut out = io::stdout().lock();
    serde_json::to_writer(&mut out, value).expect("stdout");
    writeln!(out).expect("stdout");
}

fn fail(e: &Error) -> ExitCode {
    emit(&ErrorReport { error: ErrorBody { kind: e.kind(), message: e.to_string() } });
    ExitCode::FAILURE
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Analyze { input, seed, samples, specs } => {
            match analyze(input.as_deref(), seed, samples, specs.as_deref()) {
                Ok(report) => {
                    emit(&report);
                    ExitCode::SUCCESS
                }
                Err(e) => fail(&e),
            }
        }
        Command::Generate { kind } => match generate(&kind) {
            Ok(t) => {
                println!("{}", t.to_json());
                ExitCode::SUCCESS
            }
            Err(e) => fail(&e),
        },
        Command::Verify { max_dim_a, max_dim_b, samples, seed } => {
            if max_dim_a < 2 || max_dim_b < 2 {
                return fail(&Error::Input("dimension bounds must be at least 2".into()));
            }
            let opts = TheoremOptions::new(max_dim_a, max_dim_b, samples, seed);
            let mut out = BufWriter::new(io::stdout().lock());
            let summary = verify_theorem_streaming(&opts, |r| {
                serde_json::to_writer(&mut out, r).expect("stdout");
                writeln!(out).expect("stdout");
                out.flush().expect("stdout");
            });
            serde_json::to_writer(&mut out, &SummaryLine { summary: &summary }).expect("stdout");
            writeln!(out).expect("stdout");
            if summary.counterexamples == 0 { ExitCode::SUCCESS } else { ExitCode::FAILURE }
        }
    }
}
