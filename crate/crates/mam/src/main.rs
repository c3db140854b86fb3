//! `mam`: exact calculator for intersections of quadrics and their
//! moment-angle models. Thin argument layer over `mam::report`.
//!
//! Exit codes: 0 success, 2 usage, 3 validation failure, 4 resource cap.

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};

use mam::config::{parse_configuration, Configuration};
use mam::contact::DEFAULT_RANK_TOL;
use mam::homology::DEFAULT_SIMPLEX_CAP;
use mam::report::{
    error_json, run_check, run_classify, run_contact, run_fixtures, run_homology, run_lattice,
    run_openbook, run_partition, ClassifyOptions, CliError, CommandOutput, ContactOptions,
    HomologyOptions, Report,
};

#[derive(Parser)]
#[command(
    name = "mam",
    version,
    about = "Exact calculator for intersections of quadrics (moment-angle manifolds)",
    after_help = "Configuration files: first line `k n`, then n vector lines; for k = 2 the\nGaussian shorthand `a+bi` is accepted. `#` starts a comment.\n\nExit codes: 0 ok, 2 usage, 3 validation failure, 4 resource cap."
)]
struct Cli {
    /// Print the full report as JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Validate a configuration: weak hyperbolicity, integrality, emptiness.
    Check { path: PathBuf },
    /// Face counts of the associated simple polytope.
    Lattice { path: PathBuf },
    /// Integer homology of the manifold (optionally of its bounded half).
    Homology {
        path: PathBuf,
        /// Double the configuration first (complex model).
        #[arg(long)]
        complex: bool,
        /// 1-based facet index whose half-space is removed (counted after
        /// any complexification).
        #[arg(long)]
        index: Option<usize>,
        /// Cross-check against the reflected-cell oracle (n <= 12).
        #[arg(long)]
        oracle: bool,
        /// Simplex cap for the oracle triangulation.
        #[arg(long, default_value_t = DEFAULT_SIMPLEX_CAP)]
        cap: usize,
    },
    /// Odd cyclic class partition of a plane (k = 2) configuration.
    Partition { path: PathBuf },
    /// Symbolic diffeomorphism type of the manifold.
    Classify {
        path: PathBuf,
        /// Classify the complex model instead of the real one.
        #[arg(long)]
        complex: bool,
        /// Extra real quadric variables: classify the extended variety.
        #[arg(long)]
        s: Option<usize>,
    },
    /// Open book decomposition at one coordinate: binding, page, monodromy.
    Openbook {
        path: PathBuf,
        /// 1-based coordinate at which the book is opened.
        #[arg(long, default_value_t = 1)]
        index: usize,
        /// Use the complex model.
        #[arg(long)]
        complex: bool,
    },
    /// Numerical confoliation certificate for the extended variety.
    Contact {
        path: PathBuf,
        /// Number of extra real quadric variables (s >= 1).
        #[arg(long, default_value_t = 1)]
        s: usize,
        /// Seeded samples per region.
        #[arg(long, default_value_t = 20)]
        samples: usize,
        /// Base RNG seed.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Relative rank tolerance for kernel dimensions.
        #[arg(long, default_value_t = DEFAULT_RANK_TOL)]
        tol: f64,
    },
    /// Write the bundled fixture corpus to a directory.
    Fixtures {
        /// Output directory.
        #[arg(long, default_value = "fixtures")]
        out: PathBuf,
    },
}

fn load(path: &PathBuf) -> Result<(Configuration, Vec<u8>), CliError> {
    let bytes = std::fs::read(path)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
    let text = std::str::from_utf8(&bytes)
        .map_err(|_| CliError::Validation(format!("{} is not UTF-8", path.display())))?;
    let cfg = parse_configuration(text).map_err(|e| CliError::Validation(e.to_string()))?;
    Ok((cfg, bytes))
}

fn run(cmd: &Cmd) -> Result<(CommandOutput, Option<Vec<u8>>), CliError> {
    match cmd {
        Cmd::Check { path } => {
            let (cfg, bytes) = load(path)?;
            Ok((run_check(&cfg)?, Some(bytes)))
        }
        Cmd::Lattice { path } => {
            let (cfg, bytes) = load(path)?;
            Ok((run_lattice(&cfg)?, Some(bytes)))
        }
        Cmd::Homology { path, complex, index, oracle, cap } => {
            let (cfg, bytes) = load(path)?;
            let opts = HomologyOptions {
                complex: *complex,
                exclude: *index,
                oracle: *oracle,
                cap: *cap,
            };
            Ok((run_homology(&cfg, &opts)?, Some(bytes)))
        }
        Cmd::Partition { path } => {
            let (cfg, bytes) = load(path)?;
            Ok((run_partition(&cfg)?, Some(bytes)))
        }
        Cmd::Classify { path, complex, s } => {
            let (cfg, bytes) = load(path)?;
            let opts = ClassifyOptions { complex: *complex, s: *s };
            Ok((run_classify(&cfg, &opts)?, Some(bytes)))
        }
        Cmd::Openbook { path, index, complex } => {
            let (cfg, bytes) = load(path)?;
            Ok((run_openbook(&cfg, *index, *complex)?, Some(bytes)))
        }
        Cmd::Contact { path, s, samples, seed, tol } => {
            let (cfg, bytes) = load(path)?;
            let opts = ContactOptions { s: *s, samples: *samples, seed: *seed, tol: *tol };
            Ok((run_contact(&cfg, &opts)?, Some(bytes)))
        }
        Cmd::Fixtures { out } => Ok((run_fixtures(out)?, None)),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let command: String = std::env::args().skip(1).collect::<Vec<_>>().join(" ");
    let started = Instant::now();
    match run(&cli.cmd) {
        Ok((out, input)) => {
            let report = Report::new(
                command,
                input.as_deref(),
                &out,
                started.elapsed().as_millis(),
            );
            if cli.json {
                print!("{}", report.render_json());
            } else {
                for line in &out.text {
                    println!("{line}");
                }
                for w in &report.warnings {
                    eprintln!("warning: {w}");
                }
            }
            ExitCode::from(out.exit_code as u8)
        }
        Err(e) => {
            if cli.json {
                let mut s =
                    serde_json::to_string_pretty(&error_json(&command, &e)).expect("error json");
                s.push('\n');
                print!("{s}");
            } else {
                eprintln!("error: {e}");
            }
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
