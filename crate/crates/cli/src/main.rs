use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use schurpos::classify::{classify, Side, Variant};
use schurpos::cover::{check_lexmin, covers, covers_exact, lexmin_actual, lexmin_conjectured, verify_conjecture, LexminResult};
use schurpos::inject::{verify_injection, Algorithm};
use schurpos::schur::{
    difference, difference_exact, kronecker_hook_square, product_conj_comp, product_exact, stable_bound,
};
use schurpos::Partition;

mod cache;

use cache::{Cache, Entry};

#[derive(Parser)]
#[command(name = "schurpos", version, about = "Schur expansions of s_{μ'} s_{μ^c} and the cover relation")]
struct Cli {
    /// Side of the square in which complements are taken.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    m: Option<u64>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Worker threads (defaults to available parallelism).
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    jobs: Option<u64>,

    #[arg(long, global = true, env = "SCHURPOS_CACHE")]
    cache_dir: Option<PathBuf>,

    /// Allow m below μ_1 + ℓ(μ), using direct multiplication.
    #[arg(long, global = true)]
    unsafe_m: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Tsv,
}

#[derive(Subcommand)]
enum Command {
    /// Type 1 / type 2 reading of a partition.
    Classify { nu: Partition },
    /// Expansion of s_{μ'} s_{μ^c}.
    Expand { mu: Partition },
    /// Expansion of s_{μ'} s_{μ^c} − s_{ν'} s_{ν^c}.
    Diff { mu: Partition, nu: Partition },
    /// Whether μ covers ν.
    Covers { mu: Partition, nu: Partition },
    /// Compare actual and predicted covers for every partition of n.
    Verify { n: usize },
    /// Lexicographically least η against the conjectured formula.
    Lexmin { nu: Partition },
    /// Exhaustively check an injection on ν.
    Inject {
        nu: Partition,
        /// type1-rect, width4 or type2-col1; chosen from ν when omitted.
        #[arg(long)]
        algorithm: Option<String>,
    },
    /// Kronecker product s_{(m²−k,1^k)} * s_{(m^m)}.
    Kron {
        #[arg(value_name = "M")]
        side: usize,
        k: usize,
    },
}

/// Output and exit status of one command.
struct Outcome {
    status: i32,
    output: String,
}

fn ok(output: String) -> Outcome {
    Outcome { status: 0, output }
}

type Run = Result<Outcome, String>;

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn side_name(s: Option<Side>) -> &'static str {
    match s {
        Some(Side::Direct) => "direct",
        Some(Side::Conjugate) => "conjugate",
        Some(Side::Both) => "both",
        None => "-",
    }
}

impl Cli {
    fn m_for(&self, mu: &Partition) -> Result<usize, String> {
        let bound = stable_bound(mu).max(1);
        match self.m {
            None => Ok(bound),
            Some(m) => {
                let m = m as usize;
                if m < bound && !self.unsafe_m {
                    Err(format!(
                        "m={} is below the stable bound {} for {} (pass --unsafe-m to allow)",
                        m, bound, mu
                    ))
                } else {
                    Ok(m)
                }
            }
        }
    }

    fn no_m(&self, verb: &str) -> Result<(), String> {
        match self.m {
            Some(_) => Err(format!("--m does not apply to {}", verb)),
            None => Ok(()),
        }
    }

    /// Canonical key of the invocation for the cache.
    fn key(&self) -> Vec<String> {
        let mut key = match &self.command {
            Command::Classify { nu } => vec!["classify".into(), nu.to_string()],
            Command::Expand { mu } => vec!["expand".into(), mu.to_string()],
            Command::Diff { mu, nu } => vec!["diff".into(), mu.to_string(), nu.to_string()],
            Command::Covers { mu, nu } => vec!["covers".into(), mu.to_string(), nu.to_string()],
            Command::Verify { n } => vec!["verify".into(), n.to_string()],
            Command::Lexmin { nu } => vec!["lexmin".into(), nu.to_string()],
            Command::Inject { nu, algorithm } => vec![
                "inject".into(),
                nu.to_string(),
                algorithm.clone().unwrap_or_else(|| "auto".into()),
            ],
            Command::Kron { side, k } => vec!["kron".into(), side.to_string(), k.to_string()],
        };
        key.push(self.m.map_or_else(|| "m=auto".into(), |m| format!("m={}", m)));
        key.push(if self.unsafe_m { "unsafe" } else { "safe" }.into());
        key.push(match self.format {
            Format::Text => "text".into(),
            Format::Tsv => "tsv".into(),
        });
        key
    }

    fn run(&self) -> Run {
        let tsv = self.format == Format::Tsv;
        match &self.command {
            Command::Classify { nu } => {
                self.no_m("classify")?;
                let c = classify(nu).map_err(err)?;
                if !tsv {
                    return Ok(ok(format!("{}\n", c)));
                }
                let side = side_name(c.side);
                let line = match &c.variant {
                    Variant::Type1 { beta } => format!("type1\t{}\t-\t-\t{}", beta, side),
                    Variant::Type2 { beta, s, alpha } => format!("type2\t{}\t{}\t{}\t{}", beta, s, alpha, side),
                    Variant::NotC1 => "none\t-\t-\t-\t-".into(),
                };
                Ok(ok(line + "\n"))
            }
            Command::Expand { mu } => {
                let m = self.m_for(mu)?;
                let e = if m < stable_bound(mu) { product_exact(mu, m) } else { product_conj_comp(mu, m) };
                Ok(ok(e.map_err(err)?.to_string()))
            }
            Command::Diff { mu, nu } => {
                let m = self.m_for(mu)?;
                let e = if m < stable_bound(mu) { difference_exact(mu, nu, m) } else { difference(mu, nu, m) };
                Ok(ok(e.map_err(err)?.to_string()))
            }
            Command::Covers { mu, nu } => {
                let m = self.m_for(mu)?;
                let v = if m < stable_bound(mu) { covers_exact(mu, nu, m) } else { covers(mu, nu, Some(m)) };
                let v = v.map_err(err)?;
                let line = match (&v.witness, tsv) {
                    (_, false) => v.to_string(),
                    (None, true) => "positive\t-".into(),
                    (Some(w), true) => format!("negative\t{}", w),
                };
                Ok(ok(line + "\n"))
            }
            Command::Verify { n } => {
                self.no_m("verify")?;
                let r = verify_conjecture(*n).map_err(err)?;
                let output = if tsv {
                    r.violations
                        .iter()
                        .map(|v| {
                            let w = v.witness.as_ref().map_or_else(|| "-".into(), |p| p.to_string());
                            format!("{}\t{}\t{}\t{}\t{}\n", v.nu, v.mu, v.predicted as u8, v.actual as u8, w)
                        })
                        .collect()
                } else {
                    r.to_string()
                };
                let status = if r.violations.is_empty() { 0 } else { 2 };
                Ok(Outcome { status, output })
            }
            Command::Lexmin { nu } => {
                let r = match self.m {
                    None => check_lexmin(nu).map_err(err)?,
                    Some(_) => {
                        let m = self.m_for(nu)?;
                        let (eta, coefficient) = lexmin_actual(nu, m).map_err(err)?;
                        LexminResult {
                            eta,
                            coefficient,
                            conjectured: lexmin_conjectured(nu).map_err(err)?,
                        }
                    }
                };
                let line = if tsv {
                    format!("{}\t{}\t{}", r.eta, r.conjectured, r.matches() as u8)
                } else {
                    r.to_string()
                };
                Ok(Outcome {
                    status: if r.matches() { 0 } else { 2 },
                    output: line + "\n",
                })
            }
            Command::Inject { nu, algorithm } => {
                self.no_m("inject")?;
                let alg = match algorithm {
                    Some(name) => Algorithm::parse(name).ok_or_else(|| {
                        format!("unknown algorithm {} (expected type1-rect, width4 or type2-col1)", name)
                    })?,
                    None => Algorithm::select(nu)
                        .ok_or_else(|| format!("no injection algorithm applies to {}", nu))?,
                };
                let r = verify_injection(nu, alg).map_err(err)?;
                let output = if tsv {
                    r.failures
                        .iter()
                        .map(|f| {
                            format!("{}\t{}\t{}\t{}\n", f.index.eta, f.index.gamma, f.index.sigma, f.reason)
                        })
                        .collect()
                } else {
                    r.to_string()
                };
                Ok(Outcome {
                    status: if r.passed() { 0 } else { 2 },
                    output,
                })
            }
            Command::Kron { side, k } => {
                self.no_m("kron")?;
                Ok(ok(kronecker_hook_square(*side, *k).map_err(err)?.to_string()))
            }
        }
    }
}

/// Runs the command through the cache. `verify` is always recomputed and
/// compared with the stored report.
fn run_cached(cli: &Cli) -> Run {
    let Some(dir) = &cli.cache_dir else {
        return cli.run();
    };
    let cache = Cache::new(dir);
    let key = cli.key();
    let stored = cache.load(&key);
    let recompute = matches!(cli.command, Command::Verify { .. });
    if let (Some(entry), false) = (&stored, recompute) {
        return Ok(Outcome {
            status: entry.status,
            output: entry.output.clone(),
        });
    }
    let out = cli.run()?;
    if let Some(entry) = stored {
        if entry.output != out.output || entry.status != out.status {
            return Err(format!("cached report in {} differs from the recomputed one", dir.display()));
        }
        return Ok(out);
    }
    let entry = Entry {
        status: out.status,
        output: out.output,
    };
    cache.store(&key, &entry).map_err(|e| format!("cannot write cache: {}", e))?;
    Ok(Outcome {
        status: entry.status,
        output: entry.output,
    })
}

fn configure_jobs(jobs: Option<u64>) -> Result<(), String> {
    #[cfg(feature = "parallel")]
    if let Some(n) = jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n as usize)
            .build_global()
            .map_err(err)?;
    }
    #[cfg(not(feature = "parallel"))]
    let _ = jobs;
    Ok(())
}

fn fail(msg: &str) -> ExitCode {
    eprintln!("error: {}", msg.lines().next().unwrap_or(msg).trim_start_matches("error: "));
    ExitCode::from(1)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{}", e);
                return ExitCode::SUCCESS;
            }
            if e.kind() == ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand {
                eprint!("{}", e);
                return ExitCode::from(1);
            }
            return fail(&e.to_string());
        }
    };
    if let Err(e) = configure_jobs(cli.jobs) {
        return fail(&e);
    }
    match run_cached(&cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(out.output.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::from(1);
            }
            ExitCode::from(out.status as u8)
        }
        Err(e) => fail(&e),
    }
}
