//! `stemcalc`: command-line front end for the stems-core computations.
//!
//! Results go to standard output (or `--out`); diagnostics go to standard
//! error. Exit codes: 0 success, 1 usage error, 2 data/validation failure,
//! 3 resource budget exceeded.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use sha2::{Digest, Sha256};

use stems_core::error::ResourceLimit;
use stems_core::ext::{
    classical_cobar, emit_chart, ext_chart, h_multiplication_lines, minimal_resolution,
    motivic_cobar, Budget, ChartFormat, MotivicCobar,
};
use stems_core::imj::{v1_periodic, v1_periodic_all};
use stems_core::motivic::{
    motivic_basis, motivic_coproduct, normalize, RawMotivicMonomial,
};
use stems_core::steenrod::{adem_reduce, coproduct, DualMonomial, SqWord};
use stems_core::stems::{
    assemble_group, check_consistency, cumulative_growth, StemTable, STEMS_TABLE_SOURCE,
};

const EXIT_USAGE: u8 = 1;
const EXIT_DATA: u8 = 2;
const EXIT_RESOURCE: u8 = 3;

fn long_version() -> &'static str {
    let digest = Sha256::digest(STEMS_TABLE_SOURCE.as_bytes());
    let text = format!(
        "{}\nstems.tbl sha256: {:x}",
        env!("CARGO_PKG_VERSION"),
        digest
    );
    Box::leak(text.into_boxed_str())
}

#[derive(Parser)]
#[command(name = "stemcalc", version, long_version = long_version(), about = "Stable-stem computations: Steenrod algebra arithmetic, Adams E2 charts, v1-periodic groups, and the stems table")]
struct Cli {
    /// Resource budget: maximum matrix block dimension for ext computations
    /// (overrides the STEMCALC_BUDGET environment variable).
    #[arg(long, global = true)]
    budget: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Mod-2 Steenrod algebra operations
    #[command(subcommand)]
    Steenrod(SteenrodCommand),
    /// C-motivic dual Steenrod algebra operations
    #[command(subcommand)]
    Motivic(MotivicCommand),
    /// Adams E2 charts by minimal resolution and cobar complexes
    #[command(subcommand)]
    Ext(ExtCommand),
    /// v1-periodic (image-of-J) group in a stem
    Imj(ImjArgs),
    /// Queries against the stems table (dimensions 1-90)
    #[command(subcommand)]
    Stems(StemsCommand),
}

#[derive(Subcommand)]
enum SteenrodCommand {
    /// Reduce a product of Sq operations to admissible normal form
    Adem {
        /// Whitespace-separated Sq<n> tokens, e.g. "Sq3 Sq2"
        word: String,
    },
    /// Coproduct of a dual Steenrod monomial
    Coproduct {
        /// z<i>^<e> factors joined by '*', e.g. "z2" or "z1^2*z2"
        monomial: String,
    },
}

#[derive(Subcommand)]
enum MotivicCommand {
    /// Coproduct of a motivic dual Steenrod monomial
    Coproduct {
        /// t / t<i> / x<i> factors with '^' exponents joined by '*'
        monomial: String,
    },
    /// Rewrite a monomial to its normal form under t<i>^2 = t*x<i+1>
    Normalize {
        monomial: String,
    },
    /// Monomial basis of one bidegree
    Basis {
        #[arg(long)]
        deg: u32,
        #[arg(long)]
        weight: i64,
    },
}

#[derive(Subcommand)]
enum ExtCommand {
    /// Compute an Ext chart by minimal free resolution
    Resolve(ResolveArgs),
    /// Compute cohomology of the reduced cobar complex
    Cobar(CobarArgs),
    /// GF(2)[t]-module structure of the motivic cobar cohomology
    TauHomology(TauHomologyArgs),
}

#[derive(Args)]
struct ResolveArgs {
    #[arg(long)]
    max_s: u32,
    #[arg(long)]
    max_t: u32,
    /// Output file (standard output when omitted)
    #[arg(long)]
    out: Option<String>,
    #[arg(long, default_value = "csv")]
    format: String,
    /// Include h0, h1, h2 multiplication lines (svg only)
    #[arg(long)]
    h_lines: bool,
}

#[derive(Args)]
struct CobarArgs {
    /// Classical cobar complex over the mod-2 dual Steenrod algebra
    #[arg(long, conflicts_with = "motivic")]
    classical: bool,
    /// Motivic cobar complex over GF(2)[t]
    #[arg(long)]
    motivic: bool,
    #[arg(long)]
    max_s: u32,
    #[arg(long)]
    max_stem: u32,
    #[arg(long)]
    out: Option<String>,
}

#[derive(Args)]
struct TauHomologyArgs {
    #[arg(long)]
    max_s: u32,
    #[arg(long)]
    max_stem: u32,
}

#[derive(Args)]
struct ImjArgs {
    /// Stem dimension
    #[arg(long)]
    k: u64,
    /// Restrict to one prime (all primes when omitted)
    #[arg(long)]
    prime: Option<u64>,
}

#[derive(Subcommand)]
enum StemsCommand {
    /// Print one row of the table
    Query {
        k: u32,
        /// Also print each alternative in invariant-factor form
        #[arg(long)]
        assemble: bool,
    },
    /// Run all consistency checks on the shipped table
    Validate,
    /// Cumulative 2-primary growth curve as CSV
    Growth {
        /// Append the least-squares fit of log2 f(k) against k^2
        #[arg(long)]
        fit: bool,
        #[arg(long)]
        out: Option<String>,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }

    fn data(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_DATA,
            message: message.into(),
        }
    }
}

impl From<ResourceLimit> for Failure {
    fn from(limit: ResourceLimit) -> Self {
        Failure {
            code: EXIT_RESOURCE,
            message: limit.to_string(),
        }
    }
}

fn budget(cli: &Cli) -> Result<Budget, Failure> {
    if let Some(max_block_dim) = cli.budget {
        if max_block_dim == 0 {
            return Err(Failure::usage("--budget must be positive"));
        }
        return Ok(Budget { max_block_dim });
    }
    match std::env::var("STEMCALC_BUDGET") {
        Ok(text) => {
            let max_block_dim: usize = text.parse().map_err(|_| {
                Failure::usage(format!("STEMCALC_BUDGET must be a positive integer, got {text:?}"))
            })?;
            if max_block_dim == 0 {
                return Err(Failure::usage("STEMCALC_BUDGET must be positive"));
            }
            Ok(Budget { max_block_dim })
        }
        Err(_) => Ok(Budget::default()),
    }
}

fn write_output(out: &Option<String>, data: &str) -> Result<(), Failure> {
    match out {
        Some(path) => std::fs::write(path, data)
            .map_err(|e| Failure::data(format!("cannot write {path}: {e}"))),
        None => {
            print!("{data}");
            Ok(())
        }
    }
}

fn run(cli: &Cli) -> Result<(), Failure> {
    match &cli.command {
        Command::Steenrod(cmd) => run_steenrod(cmd),
        Command::Motivic(cmd) => run_motivic(cmd),
        Command::Ext(cmd) => run_ext(cli, cmd),
        Command::Imj(args) => run_imj(args),
        Command::Stems(cmd) => run_stems(cmd),
    }
}

fn run_steenrod(cmd: &SteenrodCommand) -> Result<(), Failure> {
    match cmd {
        SteenrodCommand::Adem { word } => {
            let word: SqWord = word.parse().map_err(|e| Failure::usage(format!("{e}")))?;
            println!("{}", adem_reduce(&word));
        }
        SteenrodCommand::Coproduct { monomial } => {
            let m: DualMonomial = monomial
                .parse()
                .map_err(|e| Failure::usage(format!("{e}")))?;
            println!("{}", coproduct(&m));
        }
    }
    Ok(())
}

fn run_motivic(cmd: &MotivicCommand) -> Result<(), Failure> {
    match cmd {
        MotivicCommand::Coproduct { monomial } => {
            let raw: RawMotivicMonomial = monomial
                .parse()
                .map_err(|e| Failure::usage(format!("{e}")))?;
            println!("{}", motivic_coproduct(&normalize(&raw)));
        }
        MotivicCommand::Normalize { monomial } => {
            let raw: RawMotivicMonomial = monomial
                .parse()
                .map_err(|e| Failure::usage(format!("{e}")))?;
            println!("{}", normalize(&raw));
        }
        MotivicCommand::Basis { deg, weight } => {
            for m in motivic_basis(*deg, *weight) {
                println!("{m}");
            }
        }
    }
    Ok(())
}

fn run_ext(cli: &Cli, cmd: &ExtCommand) -> Result<(), Failure> {
    let budget = budget(cli)?;
    match cmd {
        ExtCommand::Resolve(args) => {
            let format: ChartFormat = args
                .format
                .parse()
                .map_err(|e| Failure::usage(format!("{e}")))?;
            let resolution = minimal_resolution(args.max_s, args.max_t, budget)?;
            let mut chart = ext_chart(&resolution, args.max_t);
            if args.h_lines {
                let mut lines = Vec::new();
                for j in 0..=2 {
                    lines.extend(h_multiplication_lines(&resolution, j));
                }
                chart.h_lines = Some(lines);
            }
            write_output(&args.out, &emit_chart(&chart, format))?;
        }
        ExtCommand::Cobar(args) => {
            if args.classical == args.motivic {
                return Err(Failure::usage(
                    "pass exactly one of --classical or --motivic",
                ));
            }
            let data = if args.classical {
                classical_cobar_csv(args, budget)?
            } else {
                motivic_cobar_csv(args, budget)?
            };
            write_output(&args.out, &data)?;
        }
        ExtCommand::TauHomology(args) => {
            let cobar = motivic_cobar(args.max_s + 1, args.max_stem, budget)?;
            print!("{}", tau_homology_report(&cobar, args));
        }
    }
    Ok(())
}

/// `s,t,dim` rows of the classical cobar cohomology, sorted by (stem, s).
fn classical_cobar_csv(args: &CobarArgs, budget: Budget) -> Result<String, Failure> {
    let max_t = args.max_stem + args.max_s;
    let cobar = classical_cobar(args.max_s + 1, max_t, budget)?;
    let mut rows: Vec<(u32, u32, usize)> = Vec::new();
    for s in 0..=args.max_s {
        for stem in 0..=args.max_stem {
            let d = cobar.homology_dim(s, s + stem);
            if d > 0 {
                rows.push((s, s + stem, d));
            }
        }
    }
    rows.sort_by_key(|&(s, t, _)| (t - s, s));
    let mut out = String::from("s,t,dim\n");
    for (s, t, d) in rows {
        writeln!(out, "{s},{t},{d}").unwrap();
    }
    Ok(out)
}

/// `s,stem,free_rank` rows of the motivic cobar cohomology over GF(2)[t].
fn motivic_cobar_csv(args: &CobarArgs, budget: Budget) -> Result<String, Failure> {
    let cobar = motivic_cobar(args.max_s + 1, args.max_stem, budget)?;
    let mut out = String::from("s,stem,free_rank\n");
    for s in 0..=args.max_s {
        for stem in 0..=args.max_stem {
            let rank = stems_core::ext::tau_free_rank_in_stem(&cobar, s, stem);
            if rank > 0 {
                writeln!(out, "{s},{stem},{rank}").unwrap();
            }
        }
    }
    Ok(out)
}

fn tau_homology_report(cobar: &MotivicCobar, args: &TauHomologyArgs) -> String {
    let mut out = String::new();
    for s in 0..=args.max_s {
        for degree in s..=args.max_stem + s {
            let blocks: BTreeMap<i64, _> = stems_core::ext::tau_homology_block(cobar, s, degree);
            for (weight, descriptor) in blocks {
                if descriptor.free_rank == 0 && descriptor.torsion_exponents.is_empty() {
                    continue;
                }
                let torsion: Vec<String> = descriptor
                    .torsion_exponents
                    .iter()
                    .map(|e| e.to_string())
                    .collect();
                writeln!(
                    out,
                    "{s},({degree},{weight}),{},[{}]",
                    descriptor.free_rank,
                    torsion.join(" ")
                )
                .unwrap();
            }
        }
    }
    out
}

fn run_imj(args: &ImjArgs) -> Result<(), Failure> {
    let group = match args.prime {
        Some(p) => v1_periodic(p, args.k),
        None => v1_periodic_all(args.k),
    }
    .map_err(|e| Failure::usage(format!("{e}")))?;
    println!("{group}");
    Ok(())
}

fn run_stems(cmd: &StemsCommand) -> Result<(), Failure> {
    let table = StemTable::shipped();
    match cmd {
        StemsCommand::Query { k, assemble } => {
            let entry = table
                .query(*k)
                .map_err(|e| Failure::usage(format!("{e}")))?;
            let two: Vec<String> = entry
                .two_torsion_alternatives
                .iter()
                .map(|g| g.to_string())
                .collect();
            println!(
                "{}|{}|{}|{}",
                entry.k,
                two.join("/"),
                entry.odd_torsion,
                entry.v1_periodic
            );
            if entry.is_uncertain() {
                eprintln!("note: row {} is uncertain ({} alternatives)", entry.k, two.len());
            }
            if *assemble {
                for group in assemble_group(entry) {
                    println!("{group}");
                }
            }
        }
        StemsCommand::Validate => {
            let violations = check_consistency(table.entries());
            if !violations.is_empty() {
                for v in &violations {
                    eprintln!("{v}");
                }
                return Err(Failure::data(format!(
                    "{} consistency violation(s)",
                    violations.len()
                )));
            }
            println!("ok: 90 rows, 0 violations");
        }
        StemsCommand::Growth { fit, out } => {
            let growth = cumulative_growth(table.entries());
            let mut data = String::new();
            let rows: Vec<String> = growth
                .first_alternative_rows
                .iter()
                .map(|k| k.to_string())
                .collect();
            writeln!(data, "# first alternative used for rows: {}", rows.join(",")).unwrap();
            if *fit {
                writeln!(
                    data,
                    "# fit log2f ~ slope*k^2 + intercept: slope={:.6}, intercept={:.6}, r2={:.6}",
                    growth.slope, growth.intercept, growth.r_squared
                )
                .unwrap();
            }
            data.push_str("k,log2f\n");
            for (k, log2f) in &growth.points {
                writeln!(data, "{k},{log2f}").unwrap();
            }
            write_output(out, &data)?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // --help and --version are successful exits; real parse errors
            // are usage errors (exit 1)
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return ExitCode::SUCCESS;
            }
            eprint!("{e}");
            return ExitCode::from(EXIT_USAGE);
        }
    };
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}
