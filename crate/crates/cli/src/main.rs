use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use subres_core::experiments::{self, ExperimentConfig, ExperimentKind};
use subres_core::poly::{parse_fixture, BallPoly, FlatPoly};
use subres_core::prs::{extended_euclid, prs_ball, prs_flat, stabilized_prs, Lift, StableOptions, SubresTranscript};
use subres_core::Error;

#[derive(Parser)]
#[command(name = "subres", version, about = "p-adic gcds and subresultants with tracked precision")]
struct Cli {
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Args)]
struct Input {
    /// Fixture file: a `p = <prime>` line, then `NAME = polynomial` lines.
    file: PathBuf,
    /// Name of the first polynomial in the fixture.
    #[arg(long, default_value = "A")]
    a: String,
    /// Name of the second polynomial in the fixture.
    #[arg(long, default_value = "B")]
    b: String,
}

#[derive(Subcommand)]
enum Command {
    /// Extended Euclidean algorithm over balls.
    Euclid {
        #[command(flatten)]
        input: Input,
    },
    /// Subresultant sequence with per-coefficient precision (or the flat model).
    Subres {
        #[command(flatten)]
        input: Input,
        /// Track one precision per polynomial instead of one per coefficient.
        #[arg(long)]
        flat: bool,
        /// Write the per-step CSV (j, N_j, V_j, W_j, delta_j) to this file.
        #[arg(long)]
        trace: Option<PathBuf>,
    },
    /// Stabilized subresultant sequence: every R_j is returned at O(p^N).
    SubresStable {
        #[command(flatten)]
        input: Input,
        /// Target precision N (default: the smallest input precision).
        #[arg(long)]
        prec: Option<i64>,
        /// Lift with random digits from this seed instead of zeros.
        #[arg(long)]
        random_lift: Option<u64>,
        /// Accept deg A >= deg B with a unit leading coefficient of B.
        #[arg(long)]
        general: bool,
        #[arg(long)]
        trace: Option<PathBuf>,
    },
    /// Monte Carlo experiment; writes a CSV summary.
    Experiment {
        /// One of: loss, vj, deltaj, residue, joint, float-compare, maxvj.
        name: String,
        #[arg(long)]
        p: Option<u64>,
        /// Comma-separated degrees.
        #[arg(long, value_delimiter = ',')]
        deg: Option<Vec<usize>>,
        /// Input precision N (number of sampled digits for the valuation laws).
        #[arg(long)]
        prec: Option<i64>,
        #[arg(long)]
        trials: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
        /// Largest m for the deltaj experiment.
        #[arg(long)]
        m_max: Option<u32>,
        /// Output CSV (standard output when absent).
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn load(input: &Input) -> Result<(BallPoly, BallPoly), Error> {
    let text = fs::read_to_string(&input.file)
        .map_err(|e| Error::InvalidInput(format!("{}: {e}", input.file.display())))?;
    let fx = parse_fixture(&text)?;
    let get = |n: &str| fx.get(n).cloned().ok_or_else(|| Error::InvalidInput(format!("no polynomial named {n}")));
    Ok((get(&input.a)?, get(&input.b)?))
}

fn write_trace(path: &PathBuf, t: &SubresTranscript) -> Result<(), Error> {
    let mut s = String::from("j,N_j,V_j,W_j,delta_j\n");
    for st in &t.steps {
        s.push_str(&format!("{},{},{},{},{}\n", st.j, st.n, st.v, st.w, st.delta));
    }
    fs::write(path, s).map_err(|e| Error::Output(format!("{}: {e}", path.display())))
}

fn print_transcript(out: &mut impl Write, t: &SubresTranscript) -> io::Result<()> {
    for st in &t.steps {
        writeln!(out, "R{} = {}", st.j, st.poly)?;
    }
    for st in &t.steps {
        writeln!(out, "# j = {}: N_j = {}, V_j = {}, W_j = {}, delta_j = {}", st.j, st.n, st.v, st.w, st.delta)?;
    }
    if let Some(e) = &t.failure {
        writeln!(out, "# stopped: {e}")?;
    }
    if t.is_complete() {
        writeln!(out, "# loss N - N_0 = {}", t.loss().unwrap())?;
    }
    writeln!(out, "# max working precision = {}", t.max_working_prec)
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    let mut out = io::stdout().lock();
    let io_err = |e: io::Error| Error::Output(e.to_string());
    match cli.cmd {
        Command::Euclid { input } => {
            let (a, b) = load(&input)?;
            let r = extended_euclid(&a, &b)?;
            for (k, s) in r.trace.iter().enumerate() {
                writeln!(out, "S{} = {}", k + 1, s.s).map_err(io_err)?;
                writeln!(out, "U{} = {}", k + 1, s.u).map_err(io_err)?;
                writeln!(out, "V{} = {}", k + 1, s.v).map_err(io_err)?;
            }
            writeln!(out, "D = {}", r.d).map_err(io_err)?;
        }
        Command::Subres { input, flat, trace } => {
            let (a, b) = load(&input)?;
            let t = if flat { prs_flat(&FlatPoly::flatten(&a), &FlatPoly::flatten(&b))? } else { prs_ball(&a, &b)? };
            print_transcript(&mut out, &t).map_err(io_err)?;
            if let Some(path) = trace {
                write_trace(&path, &t)?;
            }
        }
        Command::SubresStable { input, prec, random_lift, general, trace } => {
            let (a, b) = load(&input)?;
            let prec = match prec {
                Some(n) => n,
                None => a.min_prec().unwrap().min(b.min_prec().unwrap()),
            };
            let lift = random_lift.map_or(Lift::Zero, Lift::Random);
            let t = stabilized_prs(&a, &b, prec, StableOptions { lift, general_degrees: general })?;
            print_transcript(&mut out, &t).map_err(io_err)?;
            if let Some(path) = trace {
                write_trace(&path, &t)?;
            }
        }
        Command::Experiment { name, p, deg, prec, trials, seed, m_max, out: path } => {
            let kind: ExperimentKind = name.parse()?;
            let mut cfg = ExperimentConfig::new(kind);
            cfg.p = p.unwrap_or(cfg.p);
            cfg.degrees = deg.unwrap_or(cfg.degrees);
            cfg.prec = prec.unwrap_or(cfg.prec);
            cfg.trials = trials.unwrap_or(cfg.trials);
            cfg.seed = seed.unwrap_or(cfg.seed);
            cfg.m_max = m_max.unwrap_or(cfg.m_max);
            let rep = experiments::run(&cfg)?;
            match path {
                Some(path) => {
                    let f = fs::File::create(&path).map_err(|e| Error::Output(format!("{}: {e}", path.display())))?;
                    rep.write_csv(io::BufWriter::new(f))?;
                }
                None => rep.write_csv(&mut out)?,
            }
            let mut err = io::stderr().lock();
            for c in &rep.checks {
                let tag = if c.passed { "PASS" } else { "FAIL" };
                writeln!(err, "{tag} {}: {}", c.name, c.detail).map_err(io_err)?;
            }
            if !rep.passed() {
                return Ok(ExitCode::from(2));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
