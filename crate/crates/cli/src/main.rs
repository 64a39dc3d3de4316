//! `raag`: build flag complexes, compute their homology, classify the
//! minimal volume entropy of the associated right-angled Artin group, and run
//! mod-p homology growth experiments over finite abelian covers.

mod commands;
mod pipeline;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{CommandFactory, FromArgMatches, Parser, Subcommand};
use raag_core::classify::DEFAULT_BUDGET;

use pipeline::{Source, Transforms};

const PIPELINE_HELP: &str = "\
Inputs and transforms form a small pipeline. The input is a facet-list JSON
file or --fixture NAME (fixtures: simplex, simplex_boundary, cycle, path,
discrete, octahedron, icosahedron, rp2_6, rp2_flag, moore, moore_flag,
disk_flag, annulus_flag, filled_annulus_flag; parameters via --n/--q or
inline as `cycle(5)`). Transforms apply left to right in the order given:

  raag build --fixture rp2_6 --sd --cone      cone(sd(RP^2))
  raag build a.json --join b.json --sd        sd(a * b)
  raag build --join a.json b.json             a * b

Exit codes: 0 success (classify: classified), 3 undetermined,
10 usage or input error, 11 non-flag input, 12 witness rejected,
13 precondition violated, 14 internal consistency failure.
Set RAAG_THREADS to cap the number of worker threads.";

#[derive(Parser, Debug)]
#[command(name = "raag", version, about = "Right-angled Artin groups from flag complexes", after_help = PIPELINE_HELP)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a complex, print its f-vector and flag status, write canonical JSON.
    Build {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        transforms: Transforms,
        /// Output file (default: stdout).
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Integral, rational and mod-p homology with a universal-coefficient self-check.
    Homology {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        transforms: Transforms,
        /// Primes for F_p coefficients.
        #[arg(long, short, value_delimiter = ',', default_value = "2")]
        primes: Vec<u64>,
        /// Reduced homology (augmented chain complex).
        #[arg(long)]
        reduced: bool,
        /// Write the summary as JSON to this file.
        #[arg(long, short)]
        output: Option<PathBuf>,
        /// Write the boundary matrices as sparse triplets to this file.
        #[arg(long, value_name = "FILE")]
        dump_matrices: Option<PathBuf>,
    },
    /// Decide whether the RAAG has positive or zero minimal volume entropy.
    Classify {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        transforms: Transforms,
        /// Embedding witness JSON: {"supercomplex": {...}, "embedding": [...]}.
        #[arg(long, short)]
        witness: Option<PathBuf>,
        /// Randomized collapse restarts after the deterministic pass.
        #[arg(long, short, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        /// Write the verdict JSON here instead of stdout.
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Mod-p Betti numbers of finite abelian covers of the Salvetti complex.
    Growth {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        transforms: Transforms,
        /// Coefficient prime.
        #[arg(long, default_value_t = 2)]
        prime: u64,
        /// Uniform covers (Z/k)^n, one per k, ascending.
        #[arg(long, short, value_delimiter = ',')]
        moduli: Vec<u64>,
        /// JSON array of quotient specs [{"moduli": [...], "images": [[...], ...]}].
        #[arg(long, value_name = "FILE")]
        specs: Option<PathBuf>,
        /// CSV output file (default: stdout, with the report on stderr).
        #[arg(long, short)]
        output: Option<PathBuf>,
        /// Write per-cover cell counts as JSON.
        #[arg(long, value_name = "FILE")]
        cells_json: Option<PathBuf>,
    },
}

fn configure_threads() -> anyhow::Result<()> {
    if let Ok(v) = std::env::var("RAAG_THREADS") {
        let n: usize = v.parse().map_err(|_| anyhow::anyhow!("RAAG_THREADS must be a positive integer, got `{v}`"))?;
        if n == 0 {
            anyhow::bail!("RAAG_THREADS must be positive");
        }
        rayon::ThreadPoolBuilder::new().num_threads(n).build_global()?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let matches = match Cli::command().try_get_matches() {
        Ok(m) => m,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { commands::EXIT_USAGE } else { 0 });
        }
    };
    let cli = match Cli::from_arg_matches(&matches) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(commands::EXIT_USAGE);
        }
    };
    let sub = matches.subcommand().expect("subcommand is required").1;
    let result = configure_threads().and_then(|()| match cli.command {
        Command::Build { source, transforms: _, output } => commands::build(&source, sub, output.as_deref()),
        Command::Homology { source, transforms: _, primes, reduced, output, dump_matrices } => commands::homology(
            &source,
            sub,
            &primes,
            reduced,
            output.as_deref(),
            dump_matrices.as_deref(),
        ),
        Command::Classify { source, transforms: _, witness, budget, output } => {
            commands::classify(&source, sub, witness.as_deref(), budget, output.as_deref())
        }
        Command::Growth { source, transforms: _, prime, moduli, specs, output, cells_json } => commands::growth(
            &source,
            sub,
            prime,
            &moduli,
            specs.as_deref(),
            output.as_deref(),
            cells_json.as_deref(),
        ),
    });
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(commands::exit_code(&e))
        }
    }
}
