use std::io::Read;
use std::process::ExitCode;
use std::sync::Arc;

use anyhow::{anyhow, Context};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use surface_vassiliev::braid_words::{parse_singular, resolve_singular, SingularWord};
use surface_vassiliev::diagram_algebra::{first_difference, UElem, UniversalInvariant, DEFAULT_DEGREE, MAX_DEGREE};
use surface_vassiliev::par;
use surface_vassiliev::surface_group::{Surface, DEFAULT_FUEL};

mod selfcheck;

#[derive(Parser, Debug)]
#[command(name = "sbv", version, about = "Universal Vassiliev invariant of surface braids")]
struct Cli {
    /// Number of strands.
    #[arg(short = 'n', global = true, default_value_t = 2)]
    n: usize,
    /// Genus of the surface.
    #[arg(short = 'g', global = true, default_value_t = 1)]
    g: usize,
    /// Truncation degree.
    #[arg(short = 'N', global = true)]
    degree: Option<usize>,
    /// Step budget for surface group normal forms.
    #[arg(long, global = true, default_value_t = DEFAULT_FUEL)]
    fuel: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Check every free basis rewrite against its substitution oracle.
    #[arg(long, global = true)]
    verify_oracles: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the invariant of a word; singular words are resolved first.
    Eval { word: String },
    /// Report the lowest degree at which two words differ.
    Compare { first: String, second: String },
    /// List the signed resolutions of a singular word.
    Resolve { word: String },
    /// Run the consistency suites for the configured n, g and N.
    Selfcheck {
        /// Tamper with the relation table to check that failures are reported.
        #[arg(long)]
        corrupt_table: bool,
    },
}

/// A failure and the exit code it maps to.
struct Failure {
    code: u8,
    err: anyhow::Error,
}

fn usage(err: anyhow::Error) -> Failure {
    Failure { code: 2, err }
}

fn pipeline(err: impl Into<anyhow::Error>) -> Failure {
    Failure { code: 3, err: err.into() }
}

struct Config {
    n: usize,
    g: usize,
    degree: usize,
    fuel: usize,
    format: Format,
    verify: bool,
}

impl Config {
    fn invariant(&self) -> Result<UniversalInvariant, Failure> {
        let surf = Arc::new(Surface::with_fuel(self.g, self.fuel));
        Ok(UniversalInvariant::new(surf, self.degree).map_err(pipeline)?.with_verification(self.verify))
    }

    fn parse(&self, text: &str) -> Result<SingularWord, Failure> {
        let text = if text == "-" {
            let mut buf = String::new();
            std::io::stdin().read_to_string(&mut buf).context("reading stdin").map_err(usage)?;
            buf
        } else {
            text.to_string()
        };
        parse_singular(&text, self.n, self.g).map_err(|e| usage(e.into()))
    }
}

fn render(x: &UElem, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(&x.to_json()).expect("json values serialize"),
        Format::Text => x.to_string(),
    }
}

fn run(cli: Cli) -> Result<ExitCode, Failure> {
    let degree = cli.degree.unwrap_or(DEFAULT_DEGREE);
    if cli.n == 0 || cli.g == 0 || cli.fuel == 0 {
        return Err(usage(anyhow!("-n, -g and --fuel must be positive")));
    }
    if degree > MAX_DEGREE {
        return Err(usage(anyhow!("-N {degree} exceeds the maximum {MAX_DEGREE}")));
    }
    let cfg = Config { n: cli.n, g: cli.g, degree, fuel: cli.fuel, format: cli.format, verify: cli.verify_oracles };
    match cli.command {
        Command::Eval { word } => {
            let w = cfg.parse(&word)?;
            let u = cfg.invariant()?.u_singular(&w).map_err(pipeline)?;
            println!("{}", render(&u, cfg.format));
            Ok(ExitCode::SUCCESS)
        }
        Command::Compare { first, second } => {
            let (a, b) = (cfg.parse(&first)?, cfg.parse(&second)?);
            let inv = cfg.invariant()?;
            let mut us = par::map(&[a, b], |w| inv.u_singular(w)).into_iter();
            let (ua, ub) = (us.next().unwrap().map_err(pipeline)?, us.next().unwrap().map_err(pipeline)?);
            let diff = first_difference(&ua, &ub);
            match cfg.format {
                Format::Json => println!("{}", json!({ "N": degree, "distinguished": diff.is_some(), "degree": diff })),
                Format::Text => match diff {
                    Some(d) => println!("distinguished at degree {d}"),
                    None => println!("indistinguishable up to {degree}"),
                },
            }
            Ok(if diff.is_some() { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Resolve { word } => {
            let w = cfg.parse(&word)?;
            let branches = resolve_singular(&w);
            let u = match cli.degree {
                Some(_) => Some(cfg.invariant()?.u_linear(&branches).map_err(pipeline)?),
                None => None,
            };
            match cfg.format {
                Format::Json => {
                    let listing: Vec<_> =
                        branches.iter().map(|(c, b)| json!({ "coeff": c, "word": b.to_string() })).collect();
                    let mut out = json!({ "resolutions": listing });
                    if let Some(u) = &u {
                        out["u"] = u.to_json();
                    }
                    println!("{}", serde_json::to_string_pretty(&out).expect("json values serialize"));
                }
                Format::Text => {
                    for (c, b) in &branches {
                        println!("{}{} {b}", if *c > 0 { "+" } else { "-" }, c.abs());
                    }
                    if let Some(u) = &u {
                        for d in 0..=degree {
                            println!("degree {d}: {}", u.graded_part(d));
                        }
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Selfcheck { corrupt_table } => {
            let suites = selfcheck::run(cfg.n, cfg.g, degree, cfg.fuel, corrupt_table).map_err(pipeline)?;
            let mut failed = 0;
            for s in &suites {
                failed += s.failed;
                println!("{}: {} passed, {} failed", s.name, s.passed, s.failed);
            }
            Ok(if failed == 0 { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(Failure { code, err }) => {
            eprintln!("error: {err:#}");
            ExitCode::from(code)
        }
    }
}
