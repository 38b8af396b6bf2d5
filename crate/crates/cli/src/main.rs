use std::path::PathBuf;
use std::process;

use clap::{Parser, Subcommand};
use serde::Serialize;

use schur_cli::campaign::{FAST_PRIMES, FULL_PRIMES};
use schur_cli::json::{GroupJson, ScanJson};
use schur_cli::{run_campaign, table, CampaignOptions, ExitCode};
use schur_core::bounds::{green_exponent, group_report, improved_exponent, niroomand_exponent, quotient_scan};
use schur_core::catalog::{self, GroupSpec};
use schur_core::multiplier::{h2_bar_oracle, schur_multiplier, ORACLE_CAP, ORACLE_CAP_MAX};
use schur_core::pcgroup::MultiplicationTable;
use schur_core::{Error, PcPresentation};

#[derive(Parser)]
#[command(name = "schur", version, about = "Schur multipliers of finite p-groups")]
struct Cli {
    /// Worker threads for the campaign.
    #[arg(long, global = true, env = "SCHUR_THREADS")]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Invariants, multiplier and bound status of one group.
    Info {
        /// Group spec, e.g. `g3@5`, `g1@3,n=4`, `es@3 x elemab@3,rank=2`, `file:group.pcp`.
        spec: String,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Runs every check of the verification campaign.
    VerifyPaper {
        /// Comma-separated primes.
        #[arg(long, value_delimiter = ',')]
        primes: Option<Vec<u32>>,
        /// Small prime set {3,5,7}; drops p = 17 from an explicit list.
        #[arg(long)]
        fast: bool,
        #[arg(long, default_value_t = ORACLE_CAP)]
        oracle_cap: usize,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Every central subgroup K of order p and the quotient G/K.
    Scan {
        spec: String,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// H_2 from the bar resolution, compared with the tails computation.
    Oracle {
        spec: String,
        #[arg(long, default_value_t = ORACLE_CAP)]
        oracle_cap: usize,
    },
    /// Bound exponents for |G| = p^n, |G'| = p^k.
    Bounds { n: u64, k: u64 },
}

fn fail(e: &Error) -> ExitCode {
    eprintln!("error: {e}");
    ExitCode::of_error(e)
}

fn load(text: &str) -> Result<(String, PcPresentation), Error> {
    let spec: GroupSpec = text.parse()?;
    let g = catalog::build(&spec)?;
    Ok((spec.to_string(), g))
}

fn write_json<T: Serialize>(path: &PathBuf, value: &T) -> Result<(), Error> {
    let text = serde_json::to_string_pretty(value).map_err(|e| Error::Internal(e.to_string()))?;
    std::fs::write(path, text + "\n").map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn info(text: &str, json: Option<&PathBuf>) -> Result<ExitCode, Error> {
    let (name, g) = load(text)?;
    let r = group_report(&g)?;
    print!("{}", table::group_report(&name, &r));
    if let Some(path) = json {
        write_json(path, &GroupJson::new(&name, &r))?;
    }
    Ok(ExitCode::Ok)
}

fn scan(text: &str, json: Option<&PathBuf>) -> Result<ExitCode, Error> {
    let (name, g) = load(text)?;
    let s = quotient_scan(&g)?;
    print!("{}", table::scan(&name, &s));
    if let Some(path) = json {
        write_json(path, &ScanJson::new(&name, &s))?;
    }
    Ok(ExitCode::Ok)
}

fn oracle(text: &str, cap: usize) -> Result<ExitCode, Error> {
    if cap > ORACLE_CAP_MAX {
        return Err(Error::Parse {
            pos: 0,
            msg: format!("--oracle-cap may be at most {ORACLE_CAP_MAX}"),
        });
    }
    let (name, g) = load(text)?;
    let h2 = h2_bar_oracle(&MultiplicationTable::from_pcp(&g, cap)?, cap)?;
    let tails = schur_multiplier(&g)?.multiplier;
    let same = h2 == tails;
    println!("group    {name}");
    println!("H2 (bar) {}", table::invariants(&h2));
    println!("M(tails) {}", table::invariants(&tails));
    println!("match    {same}");
    Ok(if same { ExitCode::Ok } else { ExitCode::CheckFailed })
}

fn bounds(n: u64, k: u64) -> Result<ExitCode, Error> {
    let b = niroomand_exponent(n, k)?;
    println!("n = {n}, k = {k}");
    println!("general bound       log|M| <= {}", green_exponent(n));
    println!("non-abelian bound   log|M| <= {b}");
    println!("class >= 3, p != 3  log|M| <= {}", improved_exponent(n, k)?);
    Ok(ExitCode::Ok)
}

fn verify(primes: Option<Vec<u32>>, fast: bool, cap: usize, json: Option<&PathBuf>) -> Result<ExitCode, Error> {
    if cap > ORACLE_CAP_MAX {
        return Err(Error::Parse {
            pos: 0,
            msg: format!("--oracle-cap may be at most {ORACLE_CAP_MAX}"),
        });
    }
    let mut primes = match primes {
        Some(list) => list,
        None if fast => FAST_PRIMES.to_vec(),
        None => FULL_PRIMES.to_vec(),
    };
    if fast {
        primes.retain(|&p| p < 17);
    }
    for &p in &primes {
        if !schur_core::pcgroup::is_prime(p as u64) {
            return Err(Error::NotPrime(p as u64));
        }
    }
    primes.sort_unstable();
    primes.dedup();
    let report = run_campaign(&CampaignOptions { primes, oracle_cap: cap });
    print!("{}", table::campaign(&report));
    if let Some(path) = json {
        write_json(path, &report)?;
    }
    Ok(if report.all_passed() { ExitCode::Ok } else { ExitCode::CheckFailed })
}

fn main() {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t).build_global() {
            eprintln!("warning: could not size the thread pool: {e}");
        }
    }
    let outcome = match &cli.command {
        Command::Info { spec, json } => info(spec, json.as_ref()),
        Command::VerifyPaper {
            primes,
            fast,
            oracle_cap,
            json,
        } => verify(primes.clone(), *fast, *oracle_cap, json.as_ref()),
        Command::Scan { spec, json } => scan(spec, json.as_ref()),
        Command::Oracle { spec, oracle_cap } => oracle(spec, *oracle_cap),
        Command::Bounds { n, k } => bounds(*n, *k),
    };
    let code = outcome.unwrap_or_else(|e| fail(&e));
    process::exit(code as i32);
}
