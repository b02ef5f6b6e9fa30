use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use binform::report::{to_json_lines, to_table, Status};
use binform::{suite, Cache, Engine};
use binform_core::covariants::{cayley_sylvester, Covariant, ThetaName};
use binform_core::forms::{transvectant, Form, Pair};
use binform_core::ring::parse_poly;

#[derive(Parser)]
#[command(name = "binform", version, about = "Exact invariant theory of binary forms")]
struct Cli {
    /// Cache directory for heavy covariants (default: $BINFORM_CACHE_DIR or the platform cache dir).
    #[arg(long, global = true, value_name = "PATH")]
    cache_dir: Option<PathBuf>,
    /// Compute everything in memory without reading or writing the cache.
    #[arg(long, global = true)]
    no_cache: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// The r-th transvectant of two forms in x1, x2.
    Transvect { a: String, b: String, r: u32 },
    /// Dimension of the covariants of degree m and order q of binary d-ics.
    Dim { d: u32, m: u32, q: u32 },
    /// A catalog covariant of the generic quintic (F, theta22 .. theta82, H, E_H).
    Covariant {
        name: String,
        /// Evaluate at this quintic instead of printing the generic expression.
        #[arg(long, value_name = "FORM")]
        at: Option<String>,
    },
    /// The Hermite invariant: summary, or its value at a quintic.
    Hermite {
        #[arg(long, value_name = "FORM")]
        at: Option<String>,
    },
    /// Run the acceptance suite.
    Verify {
        /// Comma-separated check ids.
        #[arg(long, value_delimiter = ',', value_name = "ID")]
        only: Vec<String>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Structured,
}

fn parse_form(text: &str) -> Result<Form, String> {
    let p = parse_poly(text).map_err(|e| format!("`{}`: {}", text, e))?;
    Form::parse_order(&p, Pair::X).map_err(|e| format!("`{}`: {}", text, e))
}

fn parse_quintic(text: &str) -> Result<Form, String> {
    let f = parse_form(text)?;
    if f.order() != 5 {
        return Err(format!("`{}` has order {}, expected a quintic", text, f.order()));
    }
    Ok(f)
}

fn engine(cli: &Cli) -> Result<Engine, String> {
    if cli.no_cache {
        return Ok(Engine::new(None));
    }
    let dir = cli.cache_dir.clone().or_else(Cache::default_dir);
    let cache = match dir {
        Some(d) => Some(Cache::open(&d).map_err(|e| format!("cache dir {}: {}", d.display(), e))?),
        None => None,
    };
    Ok(Engine::new(cache))
}

fn lookup<'a>(e: &'a Engine, name: &str) -> Result<&'a Covariant, String> {
    match name {
        "F" | "f" => Ok(e.catalog().f()),
        "H" | "hermite" => Ok(e.hermite()),
        "E_H" | "EH" => Ok(e.hermite_evectant()),
        other => other.parse::<ThetaName>().map(|t| e.catalog().theta(t)),
    }
}

fn show(c: &Covariant, at: Option<&str>) -> Result<String, String> {
    match at {
        Some(text) => Ok(c.at(&parse_quintic(text)?).body().to_string()),
        None => Ok(c.form().body().to_string()),
    }
}

fn run(cli: &Cli) -> Result<ExitCode, String> {
    match &cli.command {
        Command::Transvect { a, b, r } => {
            let (a, b) = (parse_form(a)?, parse_form(b)?);
            println!("{}", transvectant(&a, &b, *r).body());
        }
        Command::Dim { d, m, q } => println!("{}", cayley_sylvester(*d, *m, *q)),
        Command::Covariant { name, at } => {
            let e = engine(cli)?;
            println!("{}", show(lookup(&e, name)?, at.as_deref())?);
        }
        Command::Hermite { at } => {
            let e = engine(cli)?;
            let h = e.hermite();
            match at {
                Some(_) => println!("{}", show(h, at.as_deref())?),
                None => println!(
                    "degree {} order {} weight {} monomials {}",
                    h.degree(),
                    h.order(),
                    h.weight().unwrap_or_default(),
                    h.form().term_count()
                ),
            }
        }
        Command::Verify { only, jobs, format } => {
            let e = engine(cli)?;
            let records = suite::run(&e, only, *jobs)?;
            match format {
                Format::Text => print!("{}", to_table(&records)),
                Format::Structured => print!("{}", to_json_lines(&records)),
            }
            let ok = records.iter().all(|r| r.status == Status::Pass);
            return Ok(if ok { ExitCode::SUCCESS } else { ExitCode::FAILURE });
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {}", msg);
            ExitCode::from(2)
        }
    }
}
