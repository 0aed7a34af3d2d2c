use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use qc_cli::{format_report, run_suite, OutputFormat, Overrides, Selection, SuiteConfig};
use qc_core::qobjects::{cyclotomic, q_binomial};

#[derive(Parser)]
#[command(name = "qc")]
#[command(about = "Exact verification of q-supercongruences, q-WZ pairs and related claims")]
#[command(version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the n-th cyclotomic polynomial
    Cyclotomic {
        #[arg(long)]
        n: i64,
        /// Print the JSON serialization instead of the formula
        #[arg(long)]
        json: bool,
    },
    /// Print the Gaussian binomial coefficient [n, k]
    Qbinom {
        #[arg(long)]
        n: i64,
        #[arg(long, allow_negative_numbers = true)]
        k: i64,
        #[arg(long)]
        json: bool,
    },
    /// Symbolic identities and congruences
    Verify {
        #[command(subcommand)]
        what: Verify,
    },
    /// Numeric claims and the Laurent-polynomial conjecture
    Check {
        #[command(subcommand)]
        what: Check,
    },
    /// Run a suite described by a JSON config file
    Suite {
        #[arg(long)]
        config: PathBuf,
        #[command(flatten)]
        run: RunOpts,
    },
}

#[derive(Subcommand)]
enum Verify {
    /// Auxiliary congruences (fermat, mod_n, mod_n_new, mod_n_identity, mod_n_2)
    Lemma {
        #[arg(long)]
        id: String,
        #[arg(long, value_delimiter = ',')]
        n_list: Option<Vec<i64>>,
        #[command(flatten)]
        run: RunOpts,
    },
    /// Pair identity on the grid 0..=n_max x k_min..=k_max
    Wz {
        #[arg(long)]
        n_max: Option<i64>,
        #[arg(long, allow_negative_numbers = true)]
        k_min: Option<i64>,
        #[arg(long, allow_negative_numbers = true)]
        k_max: Option<i64>,
        #[command(flatten)]
        run: RunOpts,
    },
    /// Telescoped pair identity for m in 1..=m_max
    Telescope {
        #[arg(long)]
        m_max: Option<i64>,
        #[arg(long, allow_negative_numbers = true)]
        k_min: Option<i64>,
        #[arg(long, allow_negative_numbers = true)]
        k_max: Option<i64>,
        #[command(flatten)]
        run: RunOpts,
    },
    /// Truncated-sum congruence modulo [n] Φ_n^3
    Theorem {
        #[arg(long)]
        id: String,
        #[arg(long, value_delimiter = ',')]
        n_list: Option<Vec<i64>>,
        #[command(flatten)]
        run: RunOpts,
    },
    /// Congruences for G(m, k) at the boundary values of k
    Boundary {
        #[arg(long)]
        id: String,
        #[arg(long, value_delimiter = ',')]
        m_list: Option<Vec<i64>>,
        #[command(flatten)]
        run: RunOpts,
    },
    /// Reindexing identities (sum_F_n1, sum_F_nneg1, summand_vanishing)
    Reindex {
        #[arg(long)]
        id: String,
        #[arg(long, value_delimiter = ',')]
        m_list: Option<Vec<i64>>,
        #[command(flatten)]
        run: RunOpts,
    },
}

#[derive(Subcommand)]
enum Check {
    /// Supercongruence modulo a prime power
    Super {
        #[arg(long)]
        id: String,
        #[arg(long, value_delimiter = ',')]
        p: Option<Vec<u64>>,
        #[arg(long)]
        r: Option<u32>,
        #[command(flatten)]
        run: RunOpts,
    },
    /// Integer divisibility for 2 <= n <= n_max
    Divisibility {
        #[arg(long)]
        id: String,
        #[arg(long)]
        n_max: Option<i64>,
        #[command(flatten)]
        run: RunOpts,
    },
    /// Laurent-polynomial property for 1 <= n <= n_max
    Conjecture {
        #[arg(long)]
        n_max: Option<i64>,
        #[command(flatten)]
        run: RunOpts,
    },
}

#[derive(Args, Clone)]
struct RunOpts {
    /// Output format; overrides the config file
    #[arg(long, value_enum)]
    format: Option<OutputFormat>,
    #[arg(long)]
    fail_fast: bool,
    /// Worker threads, 0 for one per core
    #[arg(long)]
    parallelism: Option<usize>,
    /// Allow parameters beyond the documented suite bounds
    #[arg(long)]
    unsafe_extended: bool,
    /// Directory for witnesses of failing checks
    #[arg(long)]
    detail_dir: Option<PathBuf>,
}

impl RunOpts {
    fn apply(&self, cfg: &mut SuiteConfig) {
        if let Some(f) = self.format {
            cfg.output_format = f;
        }
        cfg.fail_fast |= self.fail_fast;
        cfg.unsafe_extended |= self.unsafe_extended;
        if let Some(p) = self.parallelism {
            cfg.parallelism = p;
        }
        if let Some(d) = &self.detail_dir {
            cfg.detail_dir = d.clone();
        }
    }
}

fn single(check_id: String, overrides: Overrides, run: &RunOpts) -> SuiteConfig {
    let mut cfg = SuiteConfig { selected_checks: Selection::One(check_id), overrides, ..SuiteConfig::default() };
    run.apply(&mut cfg);
    cfg
}

fn execute(cfg: &SuiteConfig) -> ExitCode {
    let run = run_suite(cfg);
    print!("{}", format_report(&run.reports, cfg.output_format));
    if let Some(e) = &run.error {
        eprintln!("error: {e}");
    }
    ExitCode::from(run.exit_code as u8)
}

fn usage_error(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cfg = match cli.command {
        Command::Cyclotomic { n, json } => {
            return match cyclotomic(n) {
                Ok(p) if json => {
                    println!("{}", serde_json::to_string(&p).expect("polynomials always serialize"));
                    ExitCode::SUCCESS
                }
                Ok(p) => {
                    println!("{p}");
                    ExitCode::SUCCESS
                }
                Err(e) => usage_error(e),
            };
        }
        Command::Qbinom { n, k, json } => {
            let p = q_binomial(n, k);
            if json {
                println!("{}", serde_json::to_string(&p).expect("polynomials always serialize"));
            } else {
                println!("{p}");
            }
            return ExitCode::SUCCESS;
        }
        Command::Suite { config, run } => match SuiteConfig::from_file(&config) {
            Ok(mut cfg) => {
                run.apply(&mut cfg);
                cfg
            }
            Err(e) => return usage_error(e),
        },
        Command::Verify { what } => match what {
            Verify::Lemma { id, n_list, run } => single(format!("lemma.{id}"), Overrides { n_list, ..Default::default() }, &run),
            Verify::Wz { n_max, k_min, k_max, run } => {
                single("wz.pair".into(), Overrides { n_max, k_min, k_max, ..Default::default() }, &run)
            }
            Verify::Telescope { m_max, k_min, k_max, run } => {
                single("wz.telescope".into(), Overrides { m_max, k_min, k_max, ..Default::default() }, &run)
            }
            Verify::Theorem { id, n_list, run } => {
                single(format!("theorem.{id}"), Overrides { n_list, ..Default::default() }, &run)
            }
            Verify::Boundary { id, m_list, run } => {
                single(format!("boundary.{id}"), Overrides { m_list, ..Default::default() }, &run)
            }
            Verify::Reindex { id, m_list, run } => {
                single(format!("reindex.{id}"), Overrides { m_list, ..Default::default() }, &run)
            }
        },
        Command::Check { what } => match what {
            Check::Super { id, p, r, run } => {
                single(format!("super.{id}"), Overrides { primes: p, r, ..Default::default() }, &run)
            }
            Check::Divisibility { id, n_max, run } => {
                single(format!("divisibility.{id}"), Overrides { n_max, ..Default::default() }, &run)
            }
            Check::Conjecture { n_max, run } => {
                single("conjecture.laurent".into(), Overrides { n_max, ..Default::default() }, &run)
            }
        },
    };
    execute(&cfg)
}
