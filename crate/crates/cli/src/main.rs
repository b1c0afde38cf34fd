use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::mpsc;
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use quandle_lab::braid::{
    parse_expected, parse_knot_table, ring_modulus, state_sum, table_harness, BraidWord, Verdict,
};
use quandle_lab::cohomology::{
    cocycle_basis, cohomology_dim, cohomology_group_integral, cohomology_group_mod, is_prime,
};
use quandle_lab::data::{self, load_cocycle, NamedCocycle};
use quandle_lab::surface::{deform_spun_fig8, twist_spin_chart, twist_spin_movie, Fig8Colors};
use quandle_lab::tables::{reproduce_table, TableKind};
use quandle_lab::torus::{color_period, default_cap, torus_invariant};
use quandle_lab::{quandle_from_spec, Error};

#[derive(Parser, Debug)]
#[command(
    name = "quandle-lab",
    version,
    about = "Quandle cohomology and cocycle invariants"
)]
struct Cli {
    /// Emit one JSON object instead of text
    #[arg(long, global = true)]
    json: bool,

    /// Give up after this many seconds
    #[arg(long, global = true, default_value_t = 600, value_parser = clap::value_parser!(u64).range(1..))]
    time_budget: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print a quandle's operation table, optionally comparing with another
    Quandle {
        #[arg(long)]
        quandle: String,
        /// Use the dual quandle
        #[arg(long)]
        dual: bool,
        /// Test isomorphism with this quandle
        #[arg(long)]
        compare: Option<String>,
    },
    /// Quandle cohomology in degree 1 to 3
    Cohomology {
        #[arg(long)]
        quandle: String,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..=3))]
        degree: u32,
        /// Coefficients Z_m (prime or prime power); omit for Z
        #[arg(long = "mod")]
        modulus: Option<u64>,
        /// Rational coefficients (free rank of the integral group)
        #[arg(long, conflicts_with = "modulus")]
        rational: bool,
    },
    /// Emit a cocycle basis, or validate a cocycle
    Cocycle {
        #[arg(long)]
        quandle: Option<String>,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..=3))]
        degree: Option<u32>,
        #[arg(long = "mod")]
        modulus: Option<u64>,
        /// Builtin name or file to validate instead
        #[arg(long)]
        check: Option<String>,
    },
    /// Evaluate a cocycle invariant
    #[command(subcommand)]
    Invariant(Invariant),
    /// Coloring period of the torus block map
    Period {
        #[arg(long)]
        quandle: String,
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        cap: Option<u64>,
    },
    /// Regenerate a result table and compare with the expected values
    Table {
        #[arg(long, value_enum)]
        which: Which,
    },
}

#[derive(Args, Debug)]
struct CocycleArgs {
    /// Builtin cocycle name (optionally `k*name`) or file
    #[arg(long)]
    cocycle: String,
    /// Override the coefficient group Z_m (0 for Z)
    #[arg(long = "mod")]
    modulus: Option<u64>,
}

#[derive(Subcommand, Debug)]
enum Invariant {
    /// Closed braid, or a whole knot table
    Knot {
        #[arg(long)]
        quandle: String,
        #[command(flatten)]
        cocycle: CocycleArgs,
        /// Comma-separated signed generator indices
        #[arg(
            long,
            allow_hyphen_values = true,
            requires = "strands",
            conflicts_with = "table"
        )]
        braid: Option<String>,
        #[arg(long)]
        strands: Option<usize>,
        /// Knot table TSV (name, strands, letters)
        #[arg(long, required_unless_present = "braid")]
        table: Option<PathBuf>,
        /// Expected values TSV to compare against
        #[arg(long, requires = "table")]
        expected: Option<PathBuf>,
    },
    /// Torus link T(n,k)
    Torus {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        quandle: String,
        #[command(flatten)]
        cocycle: CocycleArgs,
    },
    /// k-twist-spun torus knot T(2,m)
    Twistspin {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        quandle: String,
        #[command(flatten)]
        cocycle: CocycleArgs,
        #[arg(long, value_enum, default_value_t = Method::Movie)]
        method: Method,
    },
    /// Deform-spun figure-eight knot
    Fig8 {
        #[command(flatten)]
        cocycle: CocycleArgs,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Movie,
    Chart,
    Both,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Which {
    Cohomology,
    Knots,
    Torus,
    Twistspin,
    Fig8,
    All,
}

/// What a command produced: text for humans, a JSON value, and whether it
/// found a mismatch.
struct Outcome {
    command: &'static str,
    inputs: Value,
    text: String,
    value: Value,
    colorings: Option<usize>,
    mismatch: bool,
}

impl Outcome {
    fn new(command: &'static str, inputs: Value, text: String, value: Value) -> Self {
        Outcome {
            command,
            inputs,
            text,
            value,
            colorings: None,
            mismatch: false,
        }
    }
}

type Res<T> = std::result::Result<T, Error>;

fn cocycle(args: &CocycleArgs, quandle: Option<&str>) -> Res<NamedCocycle> {
    load_cocycle(&args.cocycle, quandle, args.modulus)
}

fn run(cmd: Command) -> Res<Outcome> {
    match cmd {
        Command::Quandle {
            quandle,
            dual,
            compare,
        } => {
            let mut q = quandle_from_spec(&quandle)?;
            if dual {
                q = q.dual();
            }
            let table = q.table();
            let mut text = format!("{} (order {})\n", q.label(), q.order());
            for row in &table {
                let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
                text.push_str(&cells.join(" "));
                text.push('\n');
            }
            let mut value = json!({ "order": q.order(), "table": table });
            if let Some(other) = &compare {
                let o = quandle_from_spec(other)?;
                let iso = q.is_isomorphic(&o);
                match &iso {
                    Some(map) => text.push_str(&format!("isomorphic to {other} via {map:?}\n")),
                    None => text.push_str(&format!("not isomorphic to {other}\n")),
                }
                value["isomorphism"] = json!(iso);
            }
            let inputs = json!({ "quandle": quandle, "dual": dual, "compare": compare });
            Ok(Outcome::new(
                "quandle",
                inputs,
                text.trim_end().to_string(),
                value,
            ))
        }
        Command::Cohomology {
            quandle,
            degree,
            modulus,
            rational,
        } => {
            let q = quandle_from_spec(&quandle)?;
            let n = degree as usize;
            let inputs = json!({ "quandle": quandle, "degree": degree, "mod": modulus, "rational": rational });
            let (text, value) = match modulus {
                Some(p) if is_prime(p) => {
                    let d = cohomology_dim(&q, n, p)?;
                    (format!("dim = {d}"), json!({ "dim": d }))
                }
                Some(m) => {
                    let g = cohomology_group_mod(&q, n, m)?;
                    (format!("H^{n} = {g}"), json!({ "group": g.to_string() }))
                }
                None => {
                    let g = cohomology_group_integral(&q, n)?;
                    if rational {
                        (
                            format!("dim = {}", g.free_rank),
                            json!({ "dim": g.free_rank }),
                        )
                    } else {
                        (
                            format!("H^{n} = {g}"),
                            json!({ "group": g.to_string(), "free_rank": g.free_rank }),
                        )
                    }
                }
            };
            Ok(Outcome::new("cohomology", inputs, text, value))
        }
        Command::Cocycle {
            quandle,
            degree,
            modulus,
            check,
        } => {
            if let Some(src) = check {
                let c = load_cocycle(&src, quandle.as_deref(), modulus)?;
                let text = format!(
                    "{} is a {}-cocycle over {} on {}",
                    c.name,
                    c.cochain.degree(),
                    c.cochain.ring(),
                    c.quandle_spec
                );
                let inputs = json!({ "check": src, "quandle": quandle, "mod": modulus });
                let value = json!({ "cocycle": true, "text": c.cochain.to_text() });
                return Ok(Outcome::new("cocycle", inputs, text, value));
            }
            let (Some(spec), Some(degree), Some(p)) = (quandle.as_deref(), degree, modulus) else {
                return Err(Error::InvalidArgument(
                    "cocycle needs --check, or --quandle, --degree and --mod".into(),
                ));
            };
            let q = quandle_from_spec(spec)?;
            let basis = cocycle_basis(&q, degree as usize, p)?;
            let mut text = format!(
                "# quandle: {spec}\n# coefficients: {p}\n# {} cocycles",
                basis.len()
            );
            for (i, c) in basis.iter().enumerate() {
                text.push_str(&format!(
                    "\n# cocycle {}\n{}",
                    i + 1,
                    c.to_text().trim_end()
                ));
            }
            let inputs = json!({ "quandle": spec, "degree": degree, "mod": p });
            let value = json!(basis.iter().map(|c| c.to_text()).collect::<Vec<_>>());
            Ok(Outcome::new("cocycle", inputs, text, value))
        }
        Command::Invariant(inv) => invariant(inv),
        Command::Period { quandle, n, cap } => {
            let q = quandle_from_spec(&quandle)?;
            let cap = cap
                .map(|c| c as usize)
                .unwrap_or_else(|| default_cap(&q, n));
            let r = color_period(&q, n, cap)?;
            let text = match r.period {
                Some(p) => format!("period = {p}"),
                None => format!("period exceeds cap {cap}"),
            };
            let inputs = json!({ "quandle": quandle, "n": n, "cap": cap });
            Ok(Outcome::new(
                "period",
                inputs,
                text,
                json!({ "period": r.period }),
            ))
        }
        Command::Table { which } => {
            let kinds: Vec<TableKind> = match which {
                Which::Cohomology => vec![TableKind::Cohomology],
                Which::Knots => vec![TableKind::Knots],
                Which::Torus => vec![TableKind::Torus],
                Which::Twistspin => vec![TableKind::Twistspin],
                Which::Fig8 => vec![TableKind::Fig8],
                Which::All => TableKind::ALL.to_vec(),
            };
            let mut texts = Vec::new();
            let mut rows = Vec::new();
            let mut mismatch = false;
            for k in kinds {
                let r = reproduce_table(k)?;
                mismatch |= !r.ok();
                texts.push(r.to_string());
                rows.extend(r.rows.iter().map(|row| {
                    json!({
                        "table": k.to_string(),
                        "key": row.key,
                        "computed": row.computed,
                        "expected": row.expected,
                        "verdict": row.verdict().to_string(),
                        "elapsed_ms": row.elapsed.as_millis() as u64,
                    })
                }));
            }
            let inputs = json!({ "which": format!("{which:?}").to_lowercase() });
            let mut out = Outcome::new("table", inputs, texts.join("\n"), Value::Array(rows));
            out.mismatch = mismatch;
            Ok(out)
        }
    }
}

fn invariant(inv: Invariant) -> Res<Outcome> {
    match inv {
        Invariant::Knot {
            quandle,
            cocycle: cargs,
            braid,
            strands,
            table,
            expected,
        } => {
            let c = cocycle(&cargs, Some(&quandle))?;
            let inputs = json!({
                "kind": "knot", "quandle": quandle, "cocycle": cargs.cocycle, "mod": cargs.modulus,
                "braid": braid, "strands": strands, "table": table, "expected": expected,
            });
            if let (Some(letters), Some(m)) = (&braid, strands) {
                let w = BraidWord::parse(m, letters)?;
                let s = state_sum(&c.quandle, &c.cochain, &w)?;
                let mut out =
                    Outcome::new("invariant", inputs, s.value.to_string(), s.value.to_json());
                out.colorings = Some(s.colorings);
                return Ok(out);
            }
            let path = table.expect("clap requires --table without --braid");
            let text =
                std::fs::read_to_string(&path).map_err(|source| Error::Io { path, source })?;
            let records = parse_knot_table(&text)?;
            let exp = match expected {
                Some(path) => {
                    let t = std::fs::read_to_string(&path)
                        .map_err(|source| Error::Io { path, source })?;
                    Some(parse_expected(&t, ring_modulus(c.cochain.ring()))?)
                }
                None => None,
            };
            let rows = table_harness(&c.quandle, &c.cochain, &records, exp.as_ref())?;
            let mut lines = Vec::new();
            let mut values = Vec::new();
            let mut mismatch = false;
            for r in &rows {
                let v = r.verdict();
                mismatch |= v == Verdict::Fail;
                lines.push(match v {
                    Verdict::Unchecked => format!("{}\t{}", r.name, r.value),
                    _ => format!("{}\t{}\t{v}", r.name, r.value),
                });
                values.push(json!({
                    "name": r.name, "value": r.value.to_json(),
                    "colorings": r.colorings, "verdict": v.to_string(),
                }));
            }
            let mut out = Outcome::new("invariant", inputs, lines.join("\n"), Value::Array(values));
            out.mismatch = mismatch;
            Ok(out)
        }
        Invariant::Torus {
            n,
            k,
            quandle,
            cocycle: cargs,
        } => {
            let c = cocycle(&cargs, Some(&quandle))?;
            let s = torus_invariant(&c.quandle, &c.cochain, n, k)?;
            let inputs = json!({
                "kind": "torus", "n": n, "k": k, "quandle": quandle,
                "cocycle": cargs.cocycle, "mod": cargs.modulus,
            });
            let mut out = Outcome::new("invariant", inputs, s.value.to_string(), s.value.to_json());
            out.colorings = Some(s.colorings);
            Ok(out)
        }
        Invariant::Twistspin {
            m,
            k,
            quandle,
            cocycle: cargs,
            method,
        } => {
            let c = cocycle(&cargs, Some(&quandle))?;
            if method != Method::Movie && k != 2 {
                return Err(Error::InvalidArgument(
                    "the chart method needs --k 2".into(),
                ));
            }
            let inputs = json!({
                "kind": "twistspin", "m": m, "k": k, "quandle": quandle, "cocycle": cargs.cocycle,
                "mod": cargs.modulus, "method": format!("{method:?}").to_lowercase(),
            });
            match method {
                Method::Movie | Method::Chart => {
                    let s = if method == Method::Movie {
                        twist_spin_movie(&c.quandle, &c.cochain, m, k)?
                    } else {
                        twist_spin_chart(&c.quandle, &c.cochain, m)?
                    };
                    let mut out =
                        Outcome::new("invariant", inputs, s.value.to_string(), s.value.to_json());
                    out.colorings = Some(s.colorings);
                    Ok(out)
                }
                Method::Both => {
                    let movie = twist_spin_movie(&c.quandle, &c.cochain, m, k)?;
                    let chart = twist_spin_chart(&c.quandle, &c.cochain, m)?;
                    let holds = movie.value.conjugate() == chart.value;
                    let text = format!(
                        "movie = {}\nchart = {}\nconjugate(movie) = chart: {}",
                        movie.value,
                        chart.value,
                        if holds { "yes" } else { "no" }
                    );
                    let value = json!({
                        "movie": movie.value.to_json(),
                        "chart": chart.value.to_json(),
                        "conjugate": holds,
                    });
                    let mut out = Outcome::new("invariant", inputs, text, value);
                    out.colorings = Some(movie.colorings);
                    out.mismatch = !holds;
                    Ok(out)
                }
            }
        }
        Invariant::Fig8 { cocycle: cargs } => {
            let c = cocycle(&cargs, None)?;
            let s = deform_spun_fig8(&c.quandle, &c.cochain, Fig8Colors::DStarBIsA)?;
            let inputs = json!({ "kind": "fig8", "cocycle": cargs.cocycle, "mod": cargs.modulus });
            let mut out = Outcome::new("invariant", inputs, s.value.to_string(), s.value.to_json());
            out.colorings = Some(s.colorings);
            Ok(out)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let budget = Duration::from_secs(cli.time_budget);
    let json_out = cli.json;
    // Touch the override variable early so a bad path fails before any work.
    if let Some(dir) = std::env::var_os(data::DATA_ENV) {
        if !PathBuf::from(&dir).is_dir() {
            eprintln!("error: {} is not a directory", PathBuf::from(dir).display());
            return ExitCode::from(2);
        }
    }

    let start = Instant::now();
    let (tx, rx) = mpsc::channel();
    std::thread::spawn(move || {
        let _ = tx.send(run(cli.command));
    });
    let result = match rx.recv_timeout(budget) {
        Ok(r) => r,
        Err(_) => {
            eprintln!(
                "error: computation exceeds the time budget of {} s",
                budget.as_secs()
            );
            return ExitCode::from(2);
        }
    };
    let elapsed = start.elapsed();

    match result {
        Ok(out) => {
            if json_out {
                let doc = json!({
                    "command": out.command,
                    "inputs": out.inputs,
                    "value": out.value,
                    "colorings": out.colorings,
                    "elapsed_ms": elapsed.as_millis() as u64,
                });
                println!("{doc}");
            } else {
                println!("{}", out.text);
            }
            if out.mismatch {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
