use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand};

use z4class::classify::{classify_cell, classify_length, duality_check, ClassifyOptions, LengthCounts};
use z4class::enumeration::CandidateSpace;
use z4class::format::{format_generator, read_generator_file};
use z4class::store::{check_length, read_counts, CheckpointStore};
use z4class::weights::{enumerator, weight_profile, EnumeratorKind};
use z4class::{are_equivalent, dual, residue, Result};

#[derive(Parser)]
#[command(name = "z4class", version, about = "Classify Z4-linear codes up to monomial equivalence")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct RunArgs {
    /// Worker threads (default: Z4CLASS_THREADS or all cores)
    #[arg(long)]
    threads: Option<usize>,
    /// Give up on a cell after this many seconds
    #[arg(long)]
    time_limit: Option<f64>,
    /// Use closed-form constructions where available
    #[arg(long)]
    fast: bool,
    /// Print progress to stderr
    #[arg(long, short)]
    verbose: bool,
}

impl RunArgs {
    fn options(&self, checkpoint: Option<PathBuf>) -> ClassifyOptions {
        ClassifyOptions {
            fast: self.fast,
            threads: self.threads,
            time_limit: self.time_limit.map(Duration::from_secs_f64),
            checkpoint,
            verbose: self.verbose,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Classify one cell (n, k1, k2)
    Cell {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k1: usize,
        #[arg(long)]
        k2: usize,
        /// Write the manifest and generator files under this directory
        #[arg(long)]
        out: Option<PathBuf>,
        /// Print the candidate filter counts as JSON
        #[arg(long)]
        report_filters: bool,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Classify every cell of one length and check duality
    Length {
        #[arg(long)]
        n: usize,
        /// Counts for length n-1: a results directory or a counts.json file
        #[arg(long)]
        prior: Option<PathBuf>,
        /// Results directory; finished cells found here are reused
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Test two codes for monomial equivalence
    Equiv { a: PathBuf, b: PathBuf },
    /// Standard generator matrix of the dual code
    Dual { file: PathBuf },
    /// Generator matrix of the binary residue code
    Residue { file: PathBuf },
    /// Weight enumerators and minimum weights
    Weights { file: PathBuf },
    /// Re-verify stored results for one length
    Check {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        dir: PathBuf,
    },
}

fn load_prior(path: &Path, n: usize) -> Result<Option<LengthCounts>> {
    if path.is_file() {
        return read_counts(path).map(Some);
    }
    CheckpointStore::new(path).load_counts(n)
}

/// Counts for `n - 1`, from `prior` when given, otherwise computed.
fn prior_counts(n: usize, prior: Option<&Path>, opts: &ClassifyOptions) -> Result<Option<LengthCounts>> {
    if n <= 1 {
        return Ok(None);
    }
    if let Some(path) = prior {
        if let Some(counts) = load_prior(path, n - 1)? {
            return Ok(Some(counts));
        }
    }
    if let Some(dir) = &opts.checkpoint {
        if let Some(counts) = CheckpointStore::new(dir).load_counts(n - 1)? {
            return Ok(Some(counts));
        }
    }
    let before = prior_counts(n - 1, prior, opts)?;
    Ok(Some(classify_length(n - 1, before.as_ref(), opts)?.counts))
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Cell { n, k1, k2, out, report_filters, run } => {
            if report_filters {
                let report = CandidateSpace::new(n, k1, k2)?.filter_report();
                println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
            }
            let cell = classify_cell(n, k1, k2, &run.options(None))?;
            println!(
                "N'({n},{k1},{k2}) = {}  [{}, {} candidates, {:.3}s]",
                cell.n_prime,
                cell.method,
                cell.candidates,
                cell.elapsed.as_secs_f64()
            );
            if let Some(dir) = out {
                let path = CheckpointStore::new(dir).save_cell(&cell)?;
                println!("wrote {}", path.display());
            }
        }
        Command::Length { n, prior, out, run } => {
            let opts = run.options(out.clone());
            let prior = prior_counts(n, prior.as_deref(), &opts)?;
            let table = classify_length(n, prior.as_ref(), &opts)?;
            println!("k1 k2 N' N");
            for c in &table.counts.cells {
                println!("{} {} {} {}", c.k1, c.k2, c.n_prime, c.n);
            }
            println!("N'({n}) = {}", table.n_prime_total());
            println!("N({n}) = {}", table.n_total());
            match duality_check(&table.counts) {
                Ok(report) => println!("duality: ok ({} cells)", report.pairs.len()),
                Err(e) => {
                    println!("duality: FAILED: {e}");
                    return Ok(ExitCode::FAILURE);
                }
            }
        }
        Command::Equiv { a, b } => {
            let (ca, cb) = (read_generator_file(&a)?.code()?, read_generator_file(&b)?.code()?);
            match are_equivalent(&ca, &cb)? {
                Some(p) => println!("equivalent\nwitness: {p}"),
                None => {
                    println!("inequivalent");
                    return Ok(ExitCode::FAILURE);
                }
            }
        }
        Command::Dual { file } => {
            let norm = read_generator_file(&file)?.normalized()?;
            let d = dual(&norm.generator);
            // Coordinates of the dual refer to the input's standard form.
            let order: Vec<usize> = d.coordinate_order.iter().map(|&i| norm.coordinate_order[i] + 1).collect();
            println!("# coordinate order: {}", order.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(" "));
            print!("{}", format_generator(&d.generator));
        }
        Command::Residue { file } => {
            let norm = read_generator_file(&file)?.normalized()?;
            let res = residue(&norm.generator);
            println!("# dimension {}", res.dimension());
            print!("{res}");
        }
        Command::Weights { file } => {
            let code = read_generator_file(&file)?.code()?;
            println!("hwe: {}", enumerator(&code, EnumeratorKind::Hamming));
            println!("lwe: {}", enumerator(&code, EnumeratorKind::Lee));
            println!("swe: {}", enumerator(&code, EnumeratorKind::Symmetrized));
            println!("{}", weight_profile(&code));
        }
        Command::Check { n, dir } => {
            let items = check_length(&CheckpointStore::new(dir), n)?;
            let mut ok = true;
            for item in &items {
                println!("{} {}: {}", if item.ok { "PASS" } else { "FAIL" }, item.name, item.detail);
                ok &= item.ok;
            }
            if !ok {
                return Ok(ExitCode::FAILURE);
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
            ExitCode::from(2)
        }
    }
}
