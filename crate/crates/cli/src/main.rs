mod render;

use std::io::IsTerminal;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::Value;
use surgery_core::dsl::{self, parse_int_set, SlopeSpec};
use surgery_core::engine::{self, EngineError, Flags, Query};
use surgery_core::farey;
use surgery_core::knot::KnotExpr;
use surgery_core::report::{self, BatchEntry, ErrorKind};
use surgery_core::slope::Slope;

use render::Style;

/// Classify Dehn surgeries on knots: LO, NLS, CTF, L-space, reducibility and toroidality.
#[derive(Parser)]
#[command(name = "surgery", version)]
struct Cli {
    /// Print the versioned JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Show the rule trace behind each value.
    #[arg(long, global = true)]
    trace: bool,
    /// Recursion budget for sub-queries (default: expression height + 2).
    #[arg(long, global = true, value_name = "N")]
    depth: Option<usize>,
    /// Assume CTF detection of the meridional family for all knots.
    #[arg(long = "assume-conjecture-1.6", global = true)]
    assume_conjecture: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify K(r).
    Classify {
        expr: String,
        #[arg(allow_hyphen_values = true)]
        slope: String,
    },
    /// Classify K(p/q) over a grid of reduced slopes.
    Scan {
        expr: String,
        /// Numerators: `a..b` or `a,b,c`.
        #[arg(long, allow_hyphen_values = true)]
        p: String,
        /// Denominators: `a..b` or `a,b,c`; zero is skipped.
        #[arg(long, allow_hyphen_values = true)]
        q: String,
    },
    /// Farey graph queries.
    Farey {
        #[command(subcommand)]
        command: FareyCommand,
    },
    /// Run the queries of a DSL document.
    Batch { file: std::path::PathBuf },
}

#[derive(Subcommand)]
enum FareyCommand {
    /// Slopes within distance k of 0/1, with |p| and q at most qmax.
    Ball {
        k: u32,
        #[arg(long)]
        qmax: u64,
    },
    /// Farey distance between two slopes.
    Dist {
        #[arg(allow_hyphen_values = true)]
        r: String,
        #[arg(allow_hyphen_values = true)]
        s: String,
    },
}

enum Failure {
    Input(String),
    Inconsistency(String),
}

impl From<EngineError> for Failure {
    fn from(e: EngineError) -> Failure {
        if e.is_inconsistency() {
            Failure::Inconsistency(e.to_string())
        } else {
            Failure::Input(e.to_string())
        }
    }
}

fn input<E: std::fmt::Display>(e: E) -> Failure {
    Failure::Input(e.to_string())
}

struct Output {
    json: Value,
    text: String,
}

fn parse_knot(text: &str) -> Result<KnotExpr, Failure> {
    dsl::parse_expr(text).map_err(input)
}

fn parse_slope(text: &str) -> Result<Slope, Failure> {
    text.parse::<Slope>().map_err(input)
}

fn run(cli: &Cli, style: &Style) -> Result<Output, Failure> {
    let flags = Flags {
        assume_conjecture: cli.assume_conjecture,
    };
    match &cli.command {
        Command::Classify { expr, slope } => {
            let knot = parse_knot(expr)?;
            let slope = parse_slope(slope)?;
            let q = Query {
                knot: knot.clone(),
                slope,
                depth: cli.depth,
                flags,
            };
            let v = engine::classify(&q)?;
            Ok(Output {
                json: report::classify_json(&knot, slope, flags, &v),
                text: format!("{knot} at {slope}\n{}", render::verdict(style, &v)),
            })
        }
        Command::Scan { expr, p, q } => {
            let knot = parse_knot(expr)?;
            let spec = SlopeSpec::Grid {
                p: parse_int_set(p).map_err(Failure::Input)?,
                q: parse_int_set(q).map_err(Failure::Input)?,
            };
            let slopes = spec.slopes().map_err(input)?;
            let results = engine::scan(&knot, &slopes, cli.depth, flags)?;
            Ok(Output {
                json: report::scan_json(&knot, flags, &results),
                text: format!("{knot}\n{}", render::table(style, &results)),
            })
        }
        Command::Farey { command } => match command {
            FareyCommand::Ball { k, qmax } => {
                let slopes = farey::ball_enumerate(*k, *qmax);
                let items: Vec<String> = slopes.iter().map(Slope::to_string).collect();
                Ok(Output {
                    json: report::farey_ball_json(*k, *qmax, &slopes),
                    text: format!("{}\n", items.join(" ")),
                })
            }
            FareyCommand::Dist { r, s } => {
                let (r, s) = (parse_slope(r)?, parse_slope(s)?);
                let d = farey::fg_distance(r, s);
                Ok(Output {
                    json: report::farey_dist_json(r, s, d),
                    text: format!("{d}\n"),
                })
            }
        },
        Command::Batch { file } => {
            let text = std::fs::read_to_string(file)
                .map_err(|e| Failure::Input(format!("{}: {e}", file.display())))?;
            let doc = dsl::parse(&text).map_err(input)?;
            let mut entries = Vec::new();
            let mut out = String::new();
            for q in &doc.queries {
                let knot = doc.get(&q.name).expect("checked by the parser").clone();
                let flags = Flags {
                    assume_conjecture: flags.assume_conjecture || q.assume_conjecture,
                };
                let slopes = q.slopes.slopes().map_err(input)?;
                let results = engine::scan(&knot, &slopes, cli.depth, flags)?;
                out.push_str(&format!("query {} (line {}): {knot}\n", q.name, q.line));
                out.push_str(&render::table(style, &results));
                entries.push(BatchEntry {
                    name: q.name.clone(),
                    line: q.line,
                    knot,
                    flags,
                    results,
                });
            }
            Ok(Output {
                json: report::batch_json(&entries),
                text: out,
            })
        }
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Classify { .. } => "classify",
        Command::Scan { .. } => "scan",
        Command::Farey {
            command: FareyCommand::Ball { .. },
        } => "farey-ball",
        Command::Farey {
            command: FareyCommand::Dist { .. },
        } => "farey-dist",
        Command::Batch { .. } => "batch",
    }
}

fn emit(text: &str) {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(text.as_bytes()).and_then(|_| out.flush());
}

fn json_text(doc: &Value) -> String {
    format!(
        "{}\n",
        serde_json::to_string_pretty(doc).expect("serializable")
    )
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let style = Style {
        color: std::env::var_os("NO_COLOR").is_none()
            && std::io::stdout().is_terminal()
            && !cli.json,
        trace: cli.trace,
    };
    let (kind, code, message) = match run(&cli, &style) {
        Ok(out) => {
            if cli.json {
                emit(&json_text(&out.json));
            } else {
                emit(&out.text);
            }
            return ExitCode::SUCCESS;
        }
        Err(Failure::Input(m)) => (ErrorKind::Input, 1, m),
        Err(Failure::Inconsistency(m)) => (ErrorKind::Inconsistency, 2, m),
    };
    eprintln!("error: {message}");
    if cli.json {
        let doc = report::error_json(command_name(&cli.command), kind, &message);
        emit(&json_text(&doc));
    }
    ExitCode::from(code)
}
