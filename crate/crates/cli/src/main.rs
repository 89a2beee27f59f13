use std::fmt::Display;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand};
use itertools::Itertools;

use einfty::algebras::{LoadedAlgebra, SurjAlgebra};
use einfty::bar::{admissible_surjections, Bar, BarWord};
use einfty::barratt_eccles::{self, PermSimplex, TensorPair};
use einfty::f2chain::{FormalSum, Grade};
use einfty::perm::Permutation;
use einfty::surjection::{self, Surjection};
use einfty::table_reduction::tr_sum;
use einfty::{verify, Error};

/// Surjection and Barratt-Eccles operads over F2, table reduction, and the
/// bar construction with its E-infinity Hopf structure.
#[derive(Parser)]
#[command(name = "einfty", version)]
struct Cli {
    /// Worker threads for parallel kernels (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Surjection operad operations.
    #[command(subcommand)]
    Surj(SurjCmd),
    /// Barratt-Eccles operad operations.
    #[command(subcommand)]
    Be(BeCmd),
    /// Table reduction of a Barratt-Eccles simplex, e.g. "1 2 | 2 1".
    Tr { simplex: String },
    /// Bar construction operations.
    #[command(subcommand)]
    Bar(BarCmd),
    /// Run invariant sweeps: operads, tr, bar, hopf or all.
    Verify {
        suite: String,
        /// Random trials per sampled check.
        #[arg(long, default_value_t = 200)]
        trials: usize,
        #[arg(long, default_value_t = 2024)]
        seed: u64,
    },
}

#[derive(Subcommand)]
enum SurjCmd {
    /// Differential of a sum of surjections, e.g. "1,2,1".
    Diff { sum: String },
    /// Table arrangement: rows, then caesura positions.
    Table { word: String },
    /// Composition u o_k v.
    Compose { u: String, k: usize, v: String },
    /// Relabel values by a permutation, e.g. "2 1".
    Act { perm: String, sum: String },
}

#[derive(Subcommand)]
enum BeCmd {
    Diff {
        simplex: String,
    },
    /// Alexander-Whitney diagonal.
    Diag {
        simplex: String,
    },
    Compose {
        x: String,
        k: usize,
        y: String,
    },
    /// The alternating simplex with d + 1 levels.
    Theta {
        d: usize,
    },
    Act {
        perm: String,
        simplex: String,
    },
}

#[derive(Subcommand)]
enum BarCmd {
    /// Admissible surjections for a simplex and input sizes.
    Admissible {
        #[arg(long)]
        w: String,
        #[arg(long, value_delimiter = ',')]
        sizes: Vec<usize>,
    },
    /// The operation of a simplex on bar words such as "[a|b]".
    Op {
        #[arg(long)]
        algebra: PathBuf,
        #[arg(long)]
        w: String,
        #[arg(long, num_args = 1.., required = true)]
        words: Vec<String>,
    },
    /// The product c1 cup_d c2.
    Cup {
        #[arg(long)]
        algebra: PathBuf,
        #[arg(long)]
        d: usize,
        c1: String,
        c2: String,
    },
    /// Bar differential of a word.
    Diff {
        #[arg(long)]
        algebra: PathBuf,
        word: String,
    },
    /// Homology dimensions in cohomological degrees 0..=max-grade.
    Homology {
        #[arg(long)]
        algebra: PathBuf,
        #[arg(long)]
        max_grade: usize,
    },
}

fn print_sum<K: Ord + Display>(s: &FormalSum<K>) {
    println!("{s}");
}

fn parse_or<T: std::str::FromStr<Err = Error>>(s: &str) -> Result<T, Error> {
    s.parse()
}

fn load_bar(path: &std::path::Path) -> anyhow::Result<Bar> {
    let alg = LoadedAlgebra::load(path).with_context(|| format!("loading {}", path.display()))?;
    let alg: Arc<dyn SurjAlgebra> = match alg {
        LoadedAlgebra::Commutative(a) => Arc::new(a),
        LoadedAlgebra::Cochains(a) => Arc::new(a),
    };
    Ok(Bar::new(alg)?)
}

fn run(cli: Cli) -> anyhow::Result<bool> {
    match cli.command {
        Command::Surj(cmd) => match cmd {
            SurjCmd::Diff { sum } => print_sum(&surjection::differential_of_sum(
                &surjection::parse_sum(&sum)?,
            )),
            SurjCmd::Table { word } => {
                let table = parse_or::<Surjection>(&word)?.table();
                println!("{table}");
                println!("caesuras: {}", table.caesuras.iter().join(","));
            }
            SurjCmd::Compose { u, k, v } => {
                let (u, v) = (surjection::parse_sum(&u)?, surjection::parse_sum(&v)?);
                print_sum(&surjection::compose_sums(&u, k, &v)?);
            }
            SurjCmd::Act { perm, sum } => {
                let sigma: Permutation = parse_or(&perm)?;
                let sum = surjection::parse_sum(&sum)?;
                print_sum(&sum.try_map_linear(|u| u.permute(&sigma).map(FormalSum::single))?);
            }
        },
        Command::Be(cmd) => match cmd {
            BeCmd::Diff { simplex } => {
                print_sum(&parse_or::<PermSimplex>(&simplex)?.differential())
            }
            BeCmd::Diag { simplex } => {
                let d = parse_or::<PermSimplex>(&simplex)?.diagonal();
                println!(
                    "{}",
                    d.iter().map(|p| TensorPair(p).to_string()).join(" + ")
                );
            }
            BeCmd::Compose { x, k, y } => {
                let (x, y) = (parse_or::<PermSimplex>(&x)?, parse_or::<PermSimplex>(&y)?);
                print_sum(&barratt_eccles::compose_sums(
                    &FormalSum::single(x),
                    k,
                    &FormalSum::single(y),
                )?);
            }
            BeCmd::Theta { d } => println!("{}", PermSimplex::theta(d)),
            BeCmd::Act { perm, simplex } => {
                let sigma: Permutation = parse_or(&perm)?;
                println!("{}", parse_or::<PermSimplex>(&simplex)?.permute(&sigma)?);
            }
        },
        Command::Tr { simplex } => print_sum(&tr_sum(&FormalSum::single(parse_or(&simplex)?))),
        Command::Bar(cmd) => match cmd {
            BarCmd::Admissible { w, sizes } => {
                let w: PermSimplex = parse_or(&w)?;
                for u in admissible_surjections(&w, &sizes)? {
                    println!("{u}");
                }
            }
            BarCmd::Op { algebra, w, words } => {
                let bar = load_bar(&algebra)?;
                let w: PermSimplex = parse_or(&w)?;
                let words: Vec<BarWord> = words.iter().map(|c| bar.parse_word(c)).try_collect()?;
                print_sum(&bar.full_op(&w, &words)?);
            }
            BarCmd::Cup { algebra, d, c1, c2 } => {
                let bar = load_bar(&algebra)?;
                let (c1, c2) = (bar.parse_word(&c1)?, bar.parse_word(&c2)?);
                print_sum(&bar.cup(d, &c1, &c2)?);
            }
            BarCmd::Diff { algebra, word } => {
                let bar = load_bar(&algebra)?;
                print_sum(&bar.differential(&bar.parse_word(&word)?)?);
            }
            BarCmd::Homology { algebra, max_grade } => {
                let bar = load_bar(&algebra)?;
                let h = bar.homology(max_grade)?;
                for n in 0..=max_grade as i64 {
                    let dim = h.dim(Grade::from_cohomological(n)).unwrap_or(0);
                    println!("{n} {dim}");
                }
            }
        },
        Command::Verify {
            suite,
            trials,
            seed,
        } => {
            let reports = match suite.as_str() {
                "operads" => verify::operads(),
                "tr" => verify::table_reduction(trials, seed),
                "bar" => verify::bar(trials, seed),
                "hopf" => verify::hopf(trials, seed),
                "all" => verify::all(trials, seed),
                other => bail!(Error::InvalidInput(format!(
                    "unknown suite `{other}` (expected operads, tr, bar, hopf or all)"
                ))),
            };
            for r in &reports {
                println!("{r}");
            }
            return Ok(reports.iter().all(|r| r.passed()));
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    }
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            let parse = e
                .chain()
                .any(|c| c.downcast_ref::<Error>().is_some_and(Error::is_parse));
            ExitCode::from(if parse { 2 } else { 1 })
        }
    }
}
