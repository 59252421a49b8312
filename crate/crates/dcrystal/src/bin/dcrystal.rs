//! Command-line surface: insertion, shape, graph export, verification.

use clap::{Parser, Subcommand, ValueEnum};
use dcrystal::burge;
use dcrystal::kr::{self, GraphSide};
use dcrystal::pbw::LusztigDatum;
use dcrystal::tableaux::Tableau;
use dcrystal::verify::{self, RunConfig};
use std::io::Read;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "dcrystal", version, about = "Crystal combinatorics for type D")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Direction {
    Se,
    Nw,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum Side {
    Lusztig,
    Tableau,
}

#[derive(Subcommand)]
enum Command {
    /// Insert a triangle datum into a tableau (or invert a tableau).
    Burge {
        /// triangle rows like [[2],[1,0],[1,2,1],[2,1,0,1]], or - for stdin
        input: Option<String>,
        #[arg(long, value_enum, default_value = "se")]
        direction: Direction,
        /// interpret the input as tableau JSON and recover the datum
        #[arg(long)]
        inverse: bool,
        /// rank of the recovered datum (inferred from the letters if absent)
        #[arg(long)]
        n: Option<u8>,
        /// print every intermediate tableau of the insertion
        #[arg(long)]
        trace: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Compute the tableau shape by insertion and by path maximization.
    Shape {
        input: Option<String>,
        /// also emit the maximizing path tuples, overlaid on the triangle
        #[arg(long)]
        paths: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Export the level-s crystal graph.
    Graph {
        #[arg(long)]
        n: u8,
        #[arg(long)]
        s: u64,
        #[arg(long, value_enum, default_value = "lusztig")]
        side: Side,
        #[arg(long, value_enum, default_value = "dot")]
        format: Format,
    },
    /// Run a verification suite; exits 0 only if every case passes.
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(long, default_value_t = 4)]
        n: u8,
        #[arg(long, default_value_t = 1)]
        s: u64,
        #[arg(long, default_value_t = 2)]
        bound: u32,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

fn read_input(arg: Option<String>) -> Result<String, String> {
    match arg {
        Some(s) if s != "-" => Ok(s),
        _ => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| format!("cannot read stdin: {e}"))?;
            Ok(buf)
        }
    }
}

fn parse_datum(text: &str) -> Result<LusztigDatum, String> {
    LusztigDatum::from_triangle_string(text.trim()).map_err(|e| e.to_string())
}

fn run() -> Result<bool, String> {
    let cli = Cli::parse();
    match cli.command {
        Command::Burge {
            input,
            direction,
            inverse,
            n,
            trace,
            format,
        } => {
            let text = read_input(input)?;
            if inverse {
                let v: serde_json::Value =
                    serde_json::from_str(text.trim()).map_err(|e| e.to_string())?;
                let t = if v.get("rows").is_some() {
                    Tableau::from_json(&v)
                } else {
                    Tableau::from_json(&serde_json::json!({ "rows": v }))
                }
                .map_err(|e| e.to_string())?;
                let n = match n {
                    Some(n) if n >= 4 => n,
                    Some(n) => return Err(format!("rank {n} is below the minimum rank 4")),
                    None => t
                        .rows()
                        .iter()
                        .flatten()
                        .map(|x| x.value())
                        .max()
                        .ok_or("cannot infer the rank of an empty tableau; pass --n")?
                        .max(4),
                };
                let c = match direction {
                    Direction::Se => burge::kappa_se_inv(&t, n)?,
                    Direction::Nw => burge::kappa_nw_inv(&t, n)?,
                };
                match format {
                    Format::Json => println!("{}", c.to_flat_json()),
                    _ => println!("{}", c.to_triangle_string()),
                }
                return Ok(true);
            }
            let c = parse_datum(&text)?;
            let steps = match direction {
                Direction::Se => burge::kappa_se_trace(&c),
                Direction::Nw => burge::kappa_nw_trace(&c),
            };
            if trace {
                for (k, t) in steps.iter().enumerate() {
                    println!("step {}:", k + 1);
                    println!("{}", t.render_text());
                }
            }
            let result = steps.into_iter().last().unwrap_or_else(Tableau::empty);
            print!(
                "{}",
                verify::tableau_output(&result, matches!(format, Format::Json))
            );
            if matches!(format, Format::Json) {
                println!();
            }
            Ok(true)
        }
        Command::Shape {
            input,
            paths,
            format,
        } => {
            let c = parse_datum(&read_input(input)?)?;
            let (by_insertion, by_paths, agree) = verify::shape_both_ways(&c);
            let tuples: Vec<Vec<dcrystal::paths::DoublePath>> = if paths {
                (1..=c.rank() as usize / 2)
                    .map(|l| dcrystal::paths::max_nonintersecting_tuple(&c, l))
                    .collect::<Result<_, _>>()?
            } else {
                Vec::new()
            };
            match format {
                Format::Json => {
                    let tuple_json: Vec<serde_json::Value> = tuples
                        .iter()
                        .map(|t| serde_json::Value::Array(t.iter().map(|p| p.to_json()).collect()))
                        .collect();
                    let mut out = serde_json::json!({
                        "insertion": by_insertion,
                        "paths": by_paths,
                        "agree": agree,
                    });
                    if paths {
                        out["tuples"] = serde_json::Value::Array(tuple_json);
                    }
                    println!("{out}");
                }
                _ => {
                    println!("insertion: {by_insertion:?}");
                    println!("paths:     {by_paths:?}");
                    for (l, tuple) in tuples.iter().enumerate() {
                        println!("maximizing tuple for l = {}:", l + 1);
                        print!("{}", dcrystal::paths::render_overlay(&c, tuple));
                    }
                    if !agree {
                        println!("MISMATCH");
                    }
                }
            }
            Ok(agree)
        }
        Command::Graph { n, s, side, format } => {
            if n < 4 {
                return Err("rank must be at least 4".to_string());
            }
            let side = match side {
                Side::Lusztig => GraphSide::Lusztig,
                Side::Tableau => GraphSide::Tableau,
            };
            let graph = kr::crystal_graph(n, s, side);
            match format {
                Format::Json => println!("{}", graph.to_json()),
                _ => print!("{}", graph.to_dot()),
            }
            Ok(true)
        }
        Command::Verify {
            suite,
            n,
            s,
            bound,
            seed,
            jobs,
            format,
        } => {
            if n < 4 {
                return Err("rank must be at least 4".to_string());
            }
            let cfg = RunConfig {
                n,
                s,
                bound,
                seed,
                jobs,
            };
            let report = verify::run_suite(&suite, &cfg)?;
            match format {
                Format::Json => println!("{}", report.to_json()),
                _ => print!("{}", report.render_text()),
            }
            Ok(report.passed)
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
