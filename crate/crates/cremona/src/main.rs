use std::process::ExitCode;

use clap::{Parser, Subcommand};
use cremona::eval::{EvalOptions, Value};
use cremona::json::report_json;
use cremona::suites::{build, default_threads, run, DEFAULT_SEED, SUITES};
use cremona::{eval_str, report_text, wrap};
use cremona_core::gizatullin::REGISTRY;

#[derive(Parser)]
#[command(name = "cremona", version, about = "Evaluate rational maps and run verification suites")]
struct Cli {
    /// Machine-readable output.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Read `a . b` as "a first, then b".
    #[arg(long, global = true)]
    pipeline: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a map expression and print the reduced map.
    Eval {
        expr: String,
        /// Restrict to the affine chart where this coordinate is 1.
        #[arg(long)]
        chart: Option<String>,
        /// Print only the degree.
        #[arg(long)]
        degree: bool,
        /// Print the degrees of the first N iterates.
        #[arg(long, value_name = "N")]
        degree_seq: Option<usize>,
        /// Take the N-th iterate first.
        #[arg(long, value_name = "N")]
        iterate: Option<u32>,
    },
    /// Run a verification suite; exit status 0 iff every check passes.
    Verify {
        suite: String,
        /// Worker threads; defaults to the number of cores.
        #[arg(long)]
        threads: Option<usize>,
    },
    /// List registered maps, functions and suites.
    List,
}

/// Writes to stdout; a closed pipe is not an error.
fn emit(s: &str) {
    use std::io::Write;
    let _ = std::io::stdout().lock().write_all(s.as_bytes());
}

fn width() -> usize {
    std::env::var("CREMONA_WIDTH").ok().and_then(|w| w.parse().ok()).filter(|&w| w >= 20).unwrap_or(100)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run_cli(&cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run_cli(cli: &Cli) -> Result<ExitCode, String> {
    match &cli.command {
        Command::List => {
            list(cli.json);
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { suite, threads } => {
            let s = build(suite, cli.seed).ok_or_else(|| {
                let known: Vec<&str> = SUITES.iter().map(|(n, _)| *n).collect();
                format!("unknown suite `{suite}`; known: {}", known.join(", "))
            })?;
            let r = run(&s, threads.unwrap_or_else(default_threads));
            if cli.json {
                emit(&format!("{}\n", report_json(&r, true)));
            } else {
                emit(&report_text(&r, width()));
            }
            Ok(if r.failed() == 0 { ExitCode::SUCCESS } else { ExitCode::FAILURE })
        }
        Command::Eval { expr, chart, degree, degree_seq, iterate } => {
            let v = eval_str(expr, EvalOptions { pipeline: cli.pipeline }).map_err(|e| e.to_string())?;
            let out = eval_output(v, chart.as_deref(), *degree, *degree_seq, *iterate).map_err(|e| e.to_string())?;
            if cli.json {
                emit(&format!("{}\n", serde_json::json!({ "expr": expr, "result": out })));
            } else {
                emit(&wrap(&out, width(), "    "));
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn eval_output(
    v: Value,
    chart: Option<&str>,
    degree: bool,
    degree_seq: Option<usize>,
    iterate: Option<u32>,
) -> Result<String, Box<dyn std::error::Error>> {
    let v = match iterate {
        None => v,
        Some(k) => match v {
            Value::Word(w) => Value::Word(w.pow(k as i32)),
            Value::Proj(m) => Value::Proj(m.pow(k)?),
            Value::Affine(m) => Value::Affine(m.pow(k)?),
            v => return Err(format!("cannot iterate a {}", v.space()).into()),
        },
    };
    if let Some(n) = degree_seq {
        let degrees = match &v {
            Value::Affine(m) => {
                let mut out = Vec::new();
                let mut acc = m.clone();
                for _ in 0..n {
                    out.push(acc.degree()?);
                    acc = acc.compose(m)?;
                }
                out
            }
            v => match v.to_projective()? {
                Some(m) if m.is_self_map() => m.degree_sequence(n)?.degrees,
                _ => return Err(format!("degree sequence needs a self-map, found a {}", v.space()).into()),
            },
        };
        let d: Vec<String> = degrees.iter().map(u32::to_string).collect();
        return Ok(d.join(" "));
    }
    let v = match chart {
        None => v,
        Some(name) => {
            let m = v.to_projective()?.ok_or_else(|| format!("--chart needs a projective map, found a {}", v.space()))?;
            let idx = m
                .ring()
                .coord_names()
                .iter()
                .position(|c| c == name)
                .ok_or_else(|| format!("no coordinate `{name}`"))?;
            Value::Affine(m.to_affine_chart(idx)?)
        }
    };
    if degree {
        return Ok(match &v {
            Value::Affine(m) => m.degree()?.to_string(),
            Value::Multi(m) => {
                let d: Vec<String> = (0..m.blocks().len()).map(|i| format!("{:?}", m.multidegree(i))).collect();
                d.join(" ")
            }
            v => match v.to_projective()? {
                Some(m) => m.degree().to_string(),
                None => return Err(format!("a {} has no degree", v.space()).into()),
            },
        });
    }
    Ok(v.render()?)
}

fn list(json: bool) {
    let functions = cremona::expr::FUNCTIONS;
    if json {
        let pairs = |xs: &[(&str, &str)]| -> Vec<serde_json::Value> {
            xs.iter().map(|(n, d)| serde_json::json!({ "name": n, "anchor": d })).collect()
        };
        let j = serde_json::json!({
            "maps": pairs(REGISTRY),
            "functions": pairs(functions),
            "suites": pairs(SUITES),
        });
        emit(&format!("{}\n", serde_json::to_string_pretty(&j).expect("plain data serializes")));
        return;
    }
    for (title, xs) in [("maps", REGISTRY), ("functions", functions), ("suites", SUITES)] {
        emit(&format!("{title}:\n"));
        for (n, d) in xs {
            emit(&format!("  {n:<20} {d}\n"));
        }
    }
}
