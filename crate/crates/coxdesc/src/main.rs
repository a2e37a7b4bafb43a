use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use coxdesc::cache::GroupCache;
use coxdesc::commands;
use coxdesc::spec_input::parse_spec_arg;
use coxdesc::table::Format;
use coxdesc::weights::{load_weight_file, preset_element, random_element, Preset};
use coxdesc::{CliError, CliResult};
use coxdesc_core::arith::DEFAULT_PRIMES;
use coxdesc_core::coxeter::CoxeterSpec;
use coxdesc_core::descent::{AjkkMode, DescentAlgebra, DescentElement};
use coxdesc_core::oracle::MAX_REGULAR_ORDER;

/// Descent algebras of finite Coxeter groups: structure constants, spectra,
/// and a brute-force check against the regular representation.
///
/// SPEC is a type name (A1-A6, B2-B4, D4, H3, F4, I2(m)) or @file.json.
/// Groups are cached under $COXDESC_CACHE (default .coxdesc-cache).
#[derive(Parser, Debug)]
#[command(name = "coxdesc", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum What {
    Ajkk,
    AjkkNaive,
    AjkkCounted,
    Structure,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OutputFormat {
    Json,
    Csv,
    Text,
}

impl From<OutputFormat> for Format {
    fn from(f: OutputFormat) -> Format {
        match f {
            OutputFormat::Json => Format::Json,
            OutputFormat::Csv => Format::Csv,
            OutputFormat::Text => Format::Text,
        }
    }
}

#[derive(Args, Debug)]
struct WeightArgs {
    /// JSON weight file ({"basis": "x"|"y", "weights": {"s1,s3": "3/2", ...}})
    #[arg(long, conflicts_with = "preset")]
    weights: Option<PathBuf>,
    /// uniform, qmaj:Q or desx:X1,...,Xn (the last two for type A only)
    #[arg(long)]
    preset: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Order, parabolic classes, normalizer sizes and multiplicities.
    Group {
        spec: String,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
    },
    /// a_JKK over class representatives (closed formula, naive formula, or
    /// counted), or every nonzero a_JKL.
    Table {
        spec: String,
        #[arg(long, value_enum, default_value = "ajkk")]
        what: What,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
    },
    /// Eigenvalues and multiplicities of left multiplication by d.
    Spectrum {
        spec: String,
        #[command(flatten)]
        weights: WeightArgs,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
    },
    /// Compare the predicted spectrum with the characteristic polynomial of
    /// the regular representation modulo primes. Without weights, random
    /// weights are drawn from --seed.
    Verify {
        spec: String,
        #[command(flatten)]
        weights: WeightArgs,
        /// Comma-separated primes above 2^20
        #[arg(long, value_delimiter = ',')]
        primes: Option<Vec<u64>>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Add primes until agreement implies equality over the integers
        #[arg(long)]
        certify: bool,
    },
    /// The H3 tables for the naive and corrected a_JKK formulas side by side.
    Counterexample {
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
    },
}

fn weights_for(spec: &CoxeterSpec, args: &WeightArgs, seed: Option<u64>) -> CliResult<DescentElement> {
    match (&args.weights, &args.preset) {
        (Some(path), _) => load_weight_file(path, spec.rank()),
        (None, Some(p)) => preset_element(&p.parse::<Preset>()?, spec),
        (None, None) => match seed {
            Some(s) => Ok(random_element(spec.rank(), s)),
            None => Err(CliError::Usage("give --weights FILE or --preset NAME".into())),
        },
    }
}

/// Writes to stdout; a closed pipe ends output quietly.
fn emit(text: &str) {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    if let Err(e) = out.write_all(text.as_bytes()).and_then(|_| out.flush()) {
        if e.kind() != std::io::ErrorKind::BrokenPipe {
            eprintln!("error: writing output: {e}");
        }
    }
}

fn print_json(v: &serde_json::Value) {
    emit(&format!("{}\n", serde_json::to_string_pretty(v).expect("values serialize")));
}

fn run(cli: Cli) -> CliResult<u8> {
    let cache = GroupCache::from_env();
    match cli.command {
        Command::Group { spec, format } => {
            let spec = parse_spec_arg(&spec)?;
            let alg = commands::build_algebra(&spec, &cache)?;
            emit(&commands::group_info(&alg).render(format.into()));
        }
        Command::Table { spec, what, format } => {
            let spec = parse_spec_arg(&spec)?;
            let alg = commands::build_algebra(&spec, &cache)?;
            let table = match what {
                What::Ajkk => commands::ajkk_table(&alg, AjkkMode::Corrected),
                What::AjkkNaive => commands::ajkk_table(&alg, AjkkMode::BbhtNaive),
                What::AjkkCounted => commands::ajkk_table(&alg, AjkkMode::Counted),
                What::Structure => commands::structure_table(&alg),
            };
            emit(&table.render(format.into()));
        }
        Command::Spectrum { spec, weights, format } => {
            let spec = parse_spec_arg(&spec)?;
            let d = weights_for(&spec, &weights, None)?;
            let alg = commands::build_algebra(&spec, &cache)?;
            emit(&commands::spectrum_table(&alg, &d)?.render(format.into()));
        }
        Command::Verify {
            spec,
            weights,
            primes,
            seed,
            certify,
        } => {
            let spec = parse_spec_arg(&spec)?;
            let d = weights_for(&spec, &weights, Some(seed))?;
            let group = cache.load_or_build(&spec)?;
            if group.order() > MAX_REGULAR_ORDER {
                return Err(coxdesc_core::Error::ResourceLimit {
                    order: group.order(),
                    limit: MAX_REGULAR_ORDER,
                }
                .into());
            }
            let alg = DescentAlgebra::new(group);
            let primes = primes.unwrap_or_else(|| DEFAULT_PRIMES.to_vec());
            let start = Instant::now();
            let verdict = commands::run_verify(&alg, &d, &primes, certify)?;
            print_json(&commands::verdict_json(&alg, &d, &verdict));
            let mode = if verdict.certified {
                "certified".to_string()
            } else {
                format!("probabilistic at {} primes", verdict.checks.len())
            };
            eprintln!(
                "{}: {} ({}), {:.2?}",
                spec.label(),
                if verdict.matched() { "match" } else { "MISMATCH" },
                mode,
                start.elapsed()
            );
            if !verdict.matched() {
                return Ok(1);
            }
        }
        Command::Counterexample { format } => {
            let c = commands::counterexample(&cache)?;
            match format {
                OutputFormat::Json => print_json(&c.to_json()),
                OutputFormat::Csv => emit(&c.to_csv()),
                OutputFormat::Text => emit(&c.to_text()),
            }
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
