//! `quadcross` command-line tool.
//!
//! Exit codes: 0 = YES (or success), 1 = NO, 2 = error.

use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};

use quadcross::bench::{run_scaling, BenchConfig, BenchTarget};
use quadcross::gen::{generate, GenKind, GenSpec, Generated};
use quadcross::io::{self, CougFormat, Format};
use quadcross::oracle::{oracle_centers, oracle_subsets};
use quadcross::reductions::{
    reduce_cns_to_4cc, reduce_coug_to_cns, solve_2cns, solve_2coug, CnsInstance,
};
use quadcross::svg::emit_svg;
use quadcross::{decide, Cross, Error, PointSet};

#[derive(Parser)]
#[command(
    name = "quadcross",
    version,
    about = "Four colored cross decision tool"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Format {
        match f {
            FormatArg::Json => Format::Json,
            FormatArg::Csv => Format::Csv,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Centers,
    Subsets,
}

#[derive(Clone, Copy, ValueEnum)]
enum Reduction {
    #[value(name = "coug2cns")]
    CougToCns,
    #[value(name = "cns24cc")]
    CnsTo4cc,
}

#[derive(Clone, Copy, ValueEnum)]
enum Problem {
    #[value(name = "2coug")]
    Coug,
    #[value(name = "2cns")]
    Cns,
}

#[derive(Subcommand)]
enum Command {
    /// Decide an instance with the O(n log n) sweep.
    Decide {
        /// Instance file, or `-` for stdin.
        file: PathBuf,
        #[arg(long, value_enum)]
        format: Option<FormatArg>,
    },
    /// Decide an instance with a brute-force oracle.
    Oracle {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "centers")]
        method: Method,
        #[arg(long, value_enum)]
        format: Option<FormatArg>,
    },
    /// Generate a seeded instance.
    Gen {
        #[arg(long)]
        kind: String,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 4)]
        k: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Coordinate range `lo,hi`.
        #[arg(long, value_parser = parse_bbox)]
        bbox: Option<(i64, i64)>,
        #[arg(short = 'o', long)]
        output: Option<PathBuf>,
    },
    /// Apply one step of the reduction chain.
    Reduce {
        #[arg(value_enum)]
        reduction: Reduction,
        #[arg(short = 'i', long)]
        input: PathBuf,
        #[arg(short = 'o', long)]
        output: Option<PathBuf>,
    },
    /// Solve a gap or negative-slope instance directly.
    Solve {
        #[arg(long, value_enum)]
        problem: Problem,
        file: PathBuf,
    },
    /// Run the doubling scaling harness and write a CSV report.
    Bench {
        /// Comma-separated targets: `uniform`, `decide/<kind>`, `oracle/<kind>`, `reduce`.
        #[arg(long, value_delimiter = ',', default_value = "uniform")]
        kinds: Vec<String>,
        #[arg(long, default_value_t = 1 << 10)]
        min_n: usize,
        #[arg(long, default_value_t = 1 << 16)]
        max_n: usize,
        #[arg(long, default_value_t = 5)]
        reps: usize,
        #[arg(long, default_value_t = 8)]
        colors: u32,
        #[arg(long, default_value_t = 1 << 8)]
        oracle_max_n: usize,
        #[arg(long, default_value_t = 0x5eed)]
        seed: u64,
        /// Per-cell warm-up budget in seconds.
        #[arg(long, default_value_t = 30.0)]
        budget: f64,
        #[arg(short = 'o', long)]
        output: Option<PathBuf>,
    },
    /// Render an instance as SVG.
    Plot {
        file: PathBuf,
        /// Overlay the cross found by the decider, if any.
        #[arg(long)]
        witness: bool,
        #[arg(long, value_enum)]
        format: Option<FormatArg>,
        #[arg(short = 'o', long)]
        output: Option<PathBuf>,
    },
}

fn parse_bbox(s: &str) -> Result<(i64, i64), String> {
    let (lo, hi) = s.split_once(',').ok_or("expected lo,hi")?;
    let lo = lo.trim().parse::<i64>().map_err(|e| e.to_string())?;
    let hi = hi.trim().parse::<i64>().map_err(|e| e.to_string())?;
    Ok((lo, hi))
}

fn is_stdio(path: &Path) -> bool {
    path.as_os_str() == "-"
}

fn read_input(path: &Path) -> Result<Vec<u8>, Error> {
    if is_stdio(path) {
        let mut buf = Vec::new();
        std::io::stdin().read_to_end(&mut buf)?;
        Ok(buf)
    } else {
        std::fs::read(path).map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))
    }
}

fn write_output(path: Option<&Path>, bytes: &[u8]) -> Result<(), Error> {
    match path {
        Some(p) if !is_stdio(p) => std::fs::write(p, bytes)
            .map_err(|e| Error::InvalidInput(format!("{}: {e}", p.display()))),
        _ => {
            std::io::stdout().write_all(bytes)?;
            Ok(())
        }
    }
}

fn output_format(path: Option<&Path>) -> Format {
    match path {
        Some(p) if !is_stdio(p) => Format::from_path(p),
        _ => Format::Json,
    }
}

fn load_instance(path: &Path, format: Option<FormatArg>) -> Result<PointSet, Error> {
    let bytes = read_input(path)?;
    let format = match format {
        Some(f) => f.into(),
        None if is_stdio(path) => Format::sniff(&bytes),
        None => Format::from_path(path),
    };
    io::parse_instance(&bytes, format)
        .map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))
}

fn load_cns(path: &Path) -> Result<CnsInstance, Error> {
    CnsInstance::try_from(load_instance(path, None)?)
}

fn report_cross(cross: Option<Cross>) -> Result<ExitCode, Error> {
    match cross {
        Some(c) => {
            let json = serde_json::to_string_pretty(&io::cross_to_json(&c)).expect("serializable");
            println!("YES\n{json}");
            Ok(ExitCode::SUCCESS)
        }
        None => {
            println!("NO");
            Ok(ExitCode::from(1))
        }
    }
}

fn report_bool(answer: bool) -> ExitCode {
    if answer {
        println!("YES");
        ExitCode::SUCCESS
    } else {
        println!("NO");
        ExitCode::from(1)
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Decide { file, format } => {
            let set = load_instance(&file, format)?;
            report_cross(decide(&set))
        }
        Command::Oracle {
            file,
            method,
            format,
        } => {
            let set = load_instance(&file, format)?;
            report_cross(match method {
                Method::Centers => oracle_centers(&set),
                Method::Subsets => oracle_subsets(&set),
            })
        }
        Command::Gen {
            kind,
            n,
            k,
            seed,
            bbox,
            output,
        } => {
            let mut spec = GenSpec::new(kind.parse::<GenKind>()?, n, k, seed);
            if let Some((lo, hi)) = bbox {
                spec = spec.with_bbox(lo, hi);
            }
            let bytes = match generate(&spec)? {
                Generated::Points(p) => {
                    io::serialize_instance(&p, output_format(output.as_deref()))
                }
                Generated::Coug(c) => {
                    let fmt = match output
                        .as_deref()
                        .and_then(|p| p.extension())
                        .and_then(|e| e.to_str())
                    {
                        Some(ext) if ext.eq_ignore_ascii_case("json") => CougFormat::Json,
                        _ => CougFormat::Text,
                    };
                    io::serialize_coug(&c, fmt)
                }
            };
            write_output(output.as_deref(), &bytes)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Reduce {
            reduction,
            input,
            output,
        } => {
            let out = match reduction {
                Reduction::CougToCns => {
                    let inst = io::parse_coug(&read_input(&input)?)
                        .map_err(|e| Error::InvalidInput(format!("{}: {e}", input.display())))?;
                    reduce_coug_to_cns(&inst).into_point_set()
                }
                Reduction::CnsTo4cc => reduce_cns_to_4cc(&load_cns(&input)?)?,
            };
            write_output(
                output.as_deref(),
                &io::serialize_instance(&out, output_format(output.as_deref())),
            )?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Solve { problem, file } => {
            let answer = match problem {
                Problem::Coug => solve_2coug(
                    &io::parse_coug(&read_input(&file)?)
                        .map_err(|e| Error::InvalidInput(format!("{}: {e}", file.display())))?,
                ),
                Problem::Cns => solve_2cns(&load_cns(&file)?),
            };
            Ok(report_bool(answer))
        }
        Command::Bench {
            kinds,
            min_n,
            max_n,
            reps,
            colors,
            oracle_max_n,
            seed,
            budget,
            output,
        } => {
            let targets = kinds
                .iter()
                .map(|k| k.trim().parse::<BenchTarget>())
                .collect::<Result<Vec<_>, _>>()?;
            let cfg = BenchConfig {
                targets,
                min_n,
                max_n,
                reps,
                seed,
                colors,
                oracle_max_n,
                time_budget: Some(Duration::from_secs_f64(budget.max(0.0))),
            };
            let report = run_scaling(&cfg)?;
            write_output(output.as_deref(), report.to_csv().as_bytes())?;
            for family in report.families() {
                let ratios: Vec<String> = report
                    .doubling_ratios(family)
                    .iter()
                    .map(|(n, r)| format!("{n}:{r:.2}"))
                    .collect();
                eprintln!("{family} doubling ratios {}", ratios.join(" "));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Plot {
            file,
            witness,
            format,
            output,
        } => {
            let set = load_instance(&file, format)?;
            let cross = if witness { decide(&set) } else { None };
            write_output(output.as_deref(), emit_svg(&set, cross.as_ref()).as_bytes())?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
