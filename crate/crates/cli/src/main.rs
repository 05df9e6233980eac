//! `kzd`: compute polynomials, reductions and duality tables, and run the
//! verification suites.
//!
//! Exit status is 0 when every requested check passes, 1 when a check fails
//! (the witness is written to stderr as JSON) and 2 when the request itself is
//! invalid.

mod config;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use kzduality::asep_poly::{f_delta_rank2_closed, f_delta_sum_rank_r, mpa_f_rank2, mpa_f_rank_r, verify_cyclic, verify_exchange};
use kzduality::combinatorics::staircase;
use kzduality::hecke::{random_samples, verify_hecke_relations, Hecke};
use kzduality::masep::{h_global_sweep, h_on_window, verify_global_duality, verify_local_duality, Config};
use kzduality::reduction::{conjecture_probe, h_exponent, positions_by_species, psi_table, reduce_expand, verify_intertwining, ConjectureOutcome};
use kzduality::serialize::{psi_table_pretty, psi_table_to_json, reduction_to_json, to_canonical_string, zpoly_to_json};
use kzduality::suite::{run_criterion, TITLES};
use kzduality::{Composition, Engine, Report, ZPoly};

use config::{FileConfig, Overrides, Settings};

#[derive(Debug, Parser)]
#[command(name = "kzd", version, about = "Exact Macdonald/ASEP polynomials and multi-species ASEP duality")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    global: GlobalArgs,
}

#[derive(Debug, Args)]
struct GlobalArgs {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Config file; defaults to ./kzduality.toml when present.
    #[arg(long, global = true, env = "KZD_CONFIG")]
    config: Option<PathBuf>,
    #[arg(long, global = true, env = "KZD_MAX_N")]
    max_n: Option<usize>,
    #[arg(long, global = true, env = "KZD_MAX_WEIGHT")]
    max_weight: Option<u32>,
    /// Worker threads; 0 means one per core.
    #[arg(long, global = true, env = "KZD_THREADS")]
    threads: Option<usize>,
    /// Widest window tried by global-duality checks.
    #[arg(long, global = true, env = "KZD_WINDOW_CAP")]
    window_cap: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Pretty,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    /// Exchange recursion from the Macdonald polynomial.
    Recursion,
    /// Matrix product formula, checked against the recursion.
    Mpa,
    /// Closed form for anti-partitions, checked against the recursion.
    Closed,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Non-symmetric Macdonald polynomial E_μ.
    Emu(CompositionArgs),
    /// ASEP polynomial f_μ.
    Fmu {
        #[command(flatten)]
        mu: CompositionArgs,
        #[arg(long, value_enum, default_value_t = Method::Recursion)]
        method: Method,
    },
    /// Coefficient of the pole of order p of f_μ at q = t^{-m}, expanded in
    /// the resonant sector.
    Reduce {
        #[command(flatten)]
        mu: CompositionArgs,
        #[arg(long)]
        m: u32,
        #[arg(long, default_value_t = 1)]
        p: u32,
    },
    /// Duality coefficients ψ(ν, μ) of a sector at q = t^{-m}.
    PsiTable {
        #[arg(long)]
        delta: Composition,
        #[arg(long)]
        m: u32,
        #[arg(long, default_value_t = 1)]
        p: u32,
    },
    /// Indicator-free observable H(ν, μ) on a common window.
    HEval {
        #[arg(long)]
        nu: Composition,
        #[arg(long)]
        mu: Composition,
    },
    /// m-staircase of μ.
    Staircase {
        #[command(flatten)]
        mu: CompositionArgs,
        #[arg(long)]
        m: i32,
    },
    /// Run one family of exact checks.
    #[command(subcommand)]
    Verify(Verify),
    /// Run the acceptance criteria.
    Suite {
        /// Run only these criteria (1 to 10).
        #[arg(long, value_delimiter = ',')]
        criterion: Vec<u32>,
    },
}

#[derive(Debug, Subcommand)]
enum Verify {
    /// Hecke, braid and inverse relations on random polynomials.
    Hecke {
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long, default_value_t = 3)]
        degree: u32,
        #[arg(long, default_value_t = 8)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Check a deliberately wrong generator instead (t² in place of t);
        /// this must fail.
        #[arg(long)]
        corrupted: bool,
    },
    /// Exchange relations on the sector of δ.
    Exchange {
        #[arg(long)]
        delta: Composition,
    },
    /// Cyclic condition for f_μ.
    Cyclic(CompositionArgs),
    /// Matrix product formulas against the recursion on the sector of δ.
    Mpa {
        #[arg(long)]
        delta: Composition,
    },
    /// Local duality and intertwining of the computed ψ table.
    LocalDuality {
        #[arg(long)]
        delta: Composition,
        #[arg(long)]
        m: u32,
        #[arg(long, default_value_t = 1)]
        p: u32,
    },
    /// Global duality of H: one pair with --nu/--mu, else a window sweep.
    GlobalDuality {
        #[arg(long, requires = "mu")]
        nu: Option<Composition>,
        #[arg(long, requires = "nu")]
        mu: Option<Composition>,
        /// Offset of ν's window relative to μ's.
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        shift: i64,
        #[arg(long, default_value_t = 2)]
        r: u32,
        #[arg(long, default_value_t = 6)]
        width: usize,
        #[arg(long, default_value_t = 2)]
        per_species: usize,
    },
    /// Whether Coeff_p E_μ at q = t^{-m} is proportional to a single
    /// specialized E_ν.
    Conjecture {
        #[command(flatten)]
        mu: CompositionArgs,
        #[arg(long)]
        m: u32,
        #[arg(long, default_value_t = 1)]
        p: u32,
    },
}

#[derive(Debug, Args)]
struct CompositionArgs {
    /// Number of variables; must match the length of --mu when given.
    #[arg(long)]
    n: Option<usize>,
    /// Composition, e.g. 0,2,1.
    #[arg(long)]
    mu: Composition,
}

impl CompositionArgs {
    fn parts(&self) -> Result<&[u32], Failure> {
        match self.n {
            Some(n) if n != self.mu.n() => Err(Failure::Invalid(format!("--n {n} but --mu has {} parts", self.mu.n()))),
            _ => Ok(self.mu.parts()),
        }
    }
}

enum Failure {
    /// Bad request: exit 2.
    Invalid(String),
    /// A check failed: exit 1, with the output produced so far.
    Check { output: Value, witness: Value },
}

fn invalid(e: impl std::fmt::Display) -> Failure {
    Failure::Invalid(e.to_string())
}

/// JSON payload and its human-readable form.
struct Output {
    json: Value,
    pretty: String,
}

impl Output {
    fn json(json: Value) -> Self {
        let pretty = serde_json::to_string_pretty(&json).expect("JSON values always serialize");
        Self { json, pretty }
    }

    fn poly(f: &ZPoly) -> Self {
        Self { json: zpoly_to_json(f), pretty: f.to_string() }
    }
}

fn report_output(report: Report) -> Result<Output, Failure> {
    let json = report.to_json();
    match report.witness {
        Some(w) => Err(Failure::Check { output: json, witness: w }),
        None => Ok(Output { pretty: report.to_string(), json }),
    }
}

fn run(command: &Command, settings: &Settings) -> Result<Output, Failure> {
    let engine = Engine::with_limits(settings.limits);
    match command {
        Command::Emu(args) => Ok(Output::poly(&*engine.e(args.parts()?).map_err(invalid)?)),
        Command::Fmu { mu: args, method } => {
            let mu = args.parts()?;
            let f = engine.f(mu).map_err(invalid)?;
            let other = match method {
                Method::Recursion => return Ok(Output::poly(&f)),
                Method::Mpa if mu.iter().all(|&v| v <= 2) => mpa_f_rank2(mu),
                Method::Mpa => mpa_f_rank_r(mu, mu.iter().copied().max().unwrap_or(0)),
                Method::Closed => closed_form(mu)?,
            }
            .map_err(invalid)?;
            if other == *f {
                Ok(Output::poly(&f))
            } else {
                let witness = json!({ "mu": Composition::from(mu).to_string(), "recursion": zpoly_to_json(&f), "other": zpoly_to_json(&other) });
                Err(Failure::Check { output: zpoly_to_json(&f), witness })
            }
        }
        Command::Reduce { mu, m, p } => {
            let red = reduce_expand(&engine, mu.parts()?, *m, *p).map_err(invalid)?;
            let pretty = red.entries.iter().map(|(nu, c)| format!("{nu}: {c}\n")).collect();
            Ok(Output { json: reduction_to_json(&red), pretty })
        }
        Command::PsiTable { delta, m, p } => {
            let table = psi_table(&engine, delta.parts(), *m, *p).map_err(invalid)?;
            Ok(Output { json: psi_table_to_json(&table), pretty: psi_table_pretty(&table) })
        }
        Command::HEval { nu, mu } => {
            let (nu, mu) = (nu.parts(), mu.parts());
            if nu.len() != mu.len() {
                return Err(invalid("--nu and --mu must have the same length"));
            }
            if nu.iter().any(|&v| v > 1) {
                return Err(invalid("--nu must be a rank-one configuration"));
            }
            let r = mu.iter().copied().max().unwrap_or(0);
            let k = h_exponent(nu, &positions_by_species(mu, r)).map_err(invalid)?;
            Ok(Output::json(json!({ "exponent": k, "value": h_on_window(nu, mu).to_string() })))
        }
        Command::Staircase { mu, m } => Ok(Output::json(json!(staircase(mu.parts()?, *m)))),
        Command::Verify(v) => verify(v, &engine, settings),
        Command::Suite { criterion } => suite(&engine, criterion),
    }
}

fn closed_form(mu: &[u32]) -> Result<Result<ZPoly, kzduality::asep_poly::AsepError>, Failure> {
    let c = Composition::from(mu);
    if !c.is_anti_partition() {
        return Err(invalid("closed forms exist only for anti-partitions"));
    }
    if c.rank() <= 2 {
        let count = |v| c.multiplicity(v);
        return Ok(f_delta_rank2_closed(mu.len(), count(1), count(2)));
    }
    Ok(f_delta_sum_rank_r(mu))
}

fn verify(v: &Verify, engine: &Engine, settings: &Settings) -> Result<Output, Failure> {
    match v {
        Verify::Hecke { n, degree, samples, seed, corrupted } => {
            if *n < 2 || *n > settings.limits.max_n {
                return Err(invalid(format!("--n must lie in 2..={}", settings.limits.max_n)));
            }
            let polys = random_samples(*n, *degree, *samples, *seed);
            let h = if *corrupted { Hecke::corrupted() } else { Hecke::standard() };
            report_output(verify_hecke_relations(&h, *n, &polys))
        }
        Verify::Exchange { delta } => {
            let delta = delta.parts();
            engine.f(delta).map_err(invalid)?;
            report_output(verify_exchange(engine, delta))
        }
        Verify::Cyclic(args) => {
            let mu = args.parts()?;
            let mut report = Report::new(format!("cyclic condition {}", Composition::from(mu)));
            let ok = verify_cyclic(engine, mu).map_err(invalid)?;
            report.record(ok, || json!({ "mu": Composition::from(mu).to_string() }));
            report_output(report)
        }
        Verify::Mpa { delta } => {
            let mut report = Report::new(format!("matrix product formulas on {delta}"));
            let delta = delta.parts();
            let rank = delta.iter().copied().max().unwrap_or(0);
            for mu in kzduality::combinatorics::sector_enumerate(delta) {
                let f = engine.f(mu.parts()).map_err(invalid)?;
                let trace = if rank <= 2 { mpa_f_rank2(mu.parts()) } else { mpa_f_rank_r(mu.parts(), rank) };
                match trace {
                    Ok(g) => {
                        report.record(g == *f, || json!({ "mu": mu.to_string() }));
                    }
                    // sectors outside the matrix product families have nothing to compare
                    Err(kzduality::asep_poly::AsepError::Shape(_)) => {}
                    Err(e) => return Err(invalid(e)),
                }
            }
            report_output(report)
        }
        Verify::LocalDuality { delta, m, p } => {
            let table = psi_table(engine, delta.parts(), *m, *p).map_err(invalid)?;
            let psi = |nu: &[u32], mu: &[u32]| table.get(nu, mu);
            let mut report = verify_local_duality(&psi, table.delta.parts(), table.epsilon.parts());
            report.absorb(verify_intertwining(&table));
            report_output(report)
        }
        Verify::GlobalDuality { nu, mu, shift, r, width, per_species } => match (nu, mu) {
            (Some(nu), Some(mu)) => {
                let (nu, mu) = (nu.parts(), mu.parts());
                if nu.iter().any(|&v| v > 1) {
                    return Err(invalid("--nu must be a rank-one configuration"));
                }
                let h = |a: &[u32], b: &[u32]| h_on_window(a, b);
                let (nu_cfg, mu_cfg) = (Config::new(1 + shift, nu.to_vec()), Config::new(1, mu.to_vec()));
                let ok = verify_global_duality(&h, &nu_cfg, &mu_cfg, settings.window_cap).map_err(invalid)?;
                let mut report = Report::new("global duality of H");
                report.record(ok, || json!({ "nu": nu, "mu": mu, "shift": shift }));
                report_output(report)
            }
            _ => {
                if *width > 12 || *r == 0 {
                    return Err(invalid("--width must be at most 12 and --r positive"));
                }
                report_output(h_global_sweep(*r, *width, *per_species))
            }
        },
        Verify::Conjecture { mu, m, p } => {
            let mu = mu.parts()?;
            let outcome = conjecture_probe(engine, mu, *m, *p).map_err(invalid)?;
            let json = match &outcome {
                ConjectureOutcome::NoPole => json!({ "outcome": "no pole" }),
                ConjectureOutcome::Proportional { nu, ratio } => {
                    json!({ "outcome": "proportional", "nu": nu.to_string(), "ratio": ratio.to_string() })
                }
                ConjectureOutcome::Ambiguous(nus) => {
                    json!({ "outcome": "ambiguous", "candidates": nus.iter().map(ToString::to_string).collect::<Vec<_>>() })
                }
                ConjectureOutcome::NoMatch => json!({ "outcome": "no match" }),
            };
            match outcome {
                ConjectureOutcome::NoMatch | ConjectureOutcome::Ambiguous(_) => {
                    Err(Failure::Check { output: json.clone(), witness: json!({ "mu": Composition::from(mu).to_string(), "m": m, "p": p, "result": json }) })
                }
                _ => Ok(Output::json(json)),
            }
        }
    }
}

fn suite(engine: &Engine, ids: &[u32]) -> Result<Output, Failure> {
    let ids: Vec<u32> = if ids.is_empty() { (1..=TITLES.len() as u32).collect() } else { ids.to_vec() };
    if let Some(bad) = ids.iter().find(|&&id| id == 0 || id as usize > TITLES.len()) {
        return Err(invalid(format!("no criterion {bad}")));
    }
    let mut rows = Vec::new();
    let mut pretty = String::new();
    let mut witness = Vec::new();
    for id in ids {
        let c = run_criterion(engine, id).expect("id checked above");
        let verdict = if c.report.passed() { "PASS" } else { "FAIL" };
        pretty.push_str(&format!("criterion {id} {verdict}: {} ({} checks)\n", c.title, c.report.checked));
        if let Some(w) = &c.report.witness {
            witness.push(json!({ "criterion": id, "witness": w }));
        }
        rows.push(json!({ "criterion": id, "title": c.title, "report": c.report.to_json() }));
    }
    let json = Value::Array(rows);
    if witness.is_empty() {
        Ok(Output { json, pretty })
    } else {
        Err(Failure::Check { output: json, witness: Value::Array(witness) })
    }
}

fn emit(output: &Value, pretty: Option<&str>, format: Format) {
    match (format, pretty) {
        (Format::Pretty, Some(p)) => print!("{}", if p.ends_with('\n') { p.to_string() } else { format!("{p}\n") }),
        (Format::Pretty, None) => println!("{}", serde_json::to_string_pretty(output).expect("JSON values always serialize")),
        (Format::Json, _) => println!("{}", to_canonical_string(output)),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let g = &cli.global;
    let file = match FileConfig::load(g.config.as_deref()) {
        Ok(f) => f,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let overrides = Overrides { max_n: g.max_n, max_weight: g.max_weight, threads: g.threads, window_cap: g.window_cap };
    let settings = config::resolve(overrides, &file);
    if settings.threads > 0 {
        // only fails if a pool already exists, which cannot happen this early
        let _ = rayon::ThreadPoolBuilder::new().num_threads(settings.threads).build_global();
    }
    match run(&cli.command, &settings) {
        Ok(out) => {
            emit(&out.json, Some(&out.pretty), g.format);
            ExitCode::SUCCESS
        }
        Err(Failure::Check { output, witness }) => {
            emit(&output, None, g.format);
            eprintln!("{}", to_canonical_string(&witness));
            ExitCode::from(1)
        }
        Err(Failure::Invalid(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
