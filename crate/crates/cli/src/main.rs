use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use forestalg::coalgebra::{coproduct, counit};
use forestalg::dualprod::{star, star_weighted};
use forestalg::forest::{enumerate_forests, graft, parse_forest, Alphabet, Forest};
use forestalg::freemod::{parse_rational, Basis, Coefficient, LinComb, Rational};
use forestalg::morphisms::{phi, theta};
use forestalg::prelie::{bracket, prelie_closed};
use forestalg::verify::{run_suite, Output, RunConfig, Suite, SuiteReport};

#[derive(Parser)]
#[command(name = "forestalg", version, about = "Exact algebra on decorated planar rooted forests")]
struct Cli {
    #[command(flatten)]
    opts: Opts,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct Opts {
    /// Comma-separated Ω symbols (may decorate any vertex)
    #[arg(long, global = true, value_delimiter = ',', default_value = "a,b")]
    omega: Vec<String>,
    /// Comma-separated X symbols (leaves only)
    #[arg(long, global = true, value_delimiter = ',', default_value = "x")]
    xset: Vec<String>,
    #[arg(long, global = true, default_value_t = 4)]
    max_vertices: usize,
    #[arg(long, global = true, value_parser = rational_arg, allow_hyphen_values = true)]
    eval_lambda: Option<Rational>,
    #[arg(long, global = true, value_parser = rational_arg, allow_hyphen_values = true)]
    eval_mu: Option<Rational>,
    #[arg(long, global = true, value_parser = rational_arg, allow_hyphen_values = true)]
    eval_nu: Option<Rational>,
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads for verification; 0 uses every core
    #[arg(long, global = true, default_value_t = 0)]
    workers: usize,
}

#[derive(Subcommand)]
enum Cmd {
    /// Δ(F)
    Coproduct { forest: String },
    /// ε(F)
    Counit { forest: String },
    /// F ⋆ G
    Star { left: String, right: String },
    /// F ⋆_{λ,μ} G over the declared alphabet
    StarWeighted { left: String, right: String },
    /// F ⊳ G
    Prelie { left: String, right: String },
    /// [F, G]
    Bracket { left: String, right: String },
    /// φ_ν(F)
    Phi { forest: String },
    /// θ_ν(F)
    Theta { forest: String },
    /// F G
    Concat { left: String, right: String },
    /// B⁺_w(F)
    Graft { symbol: String, forest: String },
    /// Lists every forest up to --max-vertices
    Enumerate,
    /// Runs a verification suite, or `all`
    Verify { suite: String },
}

fn rational_arg(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

type Fallible<T> = Result<T, String>;

impl Opts {
    fn config(&self) -> RunConfig {
        RunConfig {
            omega: self.omega.clone(),
            xset: self.xset.clone(),
            max_vertices: self.max_vertices,
            eval_lambda: self.eval_lambda.clone(),
            eval_mu: self.eval_mu.clone(),
            eval_nu: self.eval_nu.clone(),
            output: if self.json { Output::Json } else { Output::Text },
            workers: self.workers,
            seed: None,
        }
        .seed_from_env()
    }
}

struct Session {
    config: RunConfig,
    alphabet: Alphabet,
}

impl Session {
    fn parse(&self, text: &str) -> Fallible<Forest> {
        parse_forest(text, &self.alphabet).map_err(|e| format!("`{text}`: {e}"))
    }

    fn print<B: Basis>(&self, x: &LinComb<B>) -> Fallible<()> {
        let x = self.config.evaluate(x).map_err(|e| e.to_string())?;
        if self.config.output == Output::Json {
            println!("{}", x.to_json());
        } else {
            println!("{x}");
        }
        Ok(())
    }

    fn print_scalar(&self, c: &Coefficient) -> Fallible<()> {
        let cfg = &self.config;
        let c = c
            .eval_partial(cfg.eval_lambda.as_ref(), cfg.eval_mu.as_ref(), cfg.eval_nu.as_ref())
            .map_err(|e| e.to_string())?;
        if cfg.output == Output::Json {
            println!("{}", json!({ "coeff": c.to_json() }));
        } else {
            println!("{c}");
        }
        Ok(())
    }
}

fn basis(f: Forest) -> LinComb<Forest> {
    LinComb::basis(f)
}

fn run(cli: Cli) -> Fallible<ExitCode> {
    let config = cli.opts.config();
    let alphabet = config.alphabet().map_err(|e| e.to_string())?;
    let s = Session { config, alphabet };
    match &cli.cmd {
        Cmd::Coproduct { forest } => s.print(&coproduct(&s.parse(forest)?))?,
        Cmd::Counit { forest } => s.print_scalar(&counit(&s.parse(forest)?))?,
        Cmd::Star { left, right } => s.print(&star(&s.parse(left)?, &s.parse(right)?))?,
        Cmd::StarWeighted { left, right } => {
            let (f, g) = (basis(s.parse(left)?), basis(s.parse(right)?));
            s.print(&star_weighted(&f, &g, &s.alphabet))?
        }
        Cmd::Prelie { left, right } => s.print(&prelie_closed(&s.parse(left)?, &s.parse(right)?))?,
        Cmd::Bracket { left, right } => s.print(&bracket(&s.parse(left)?, &s.parse(right)?))?,
        Cmd::Phi { forest } => s.print(&phi(&basis(s.parse(forest)?)))?,
        Cmd::Theta { forest } => s.print(&theta(&basis(s.parse(forest)?)))?,
        Cmd::Concat { left, right } => s.print(&basis(s.parse(left)?.concat(&s.parse(right)?)))?,
        Cmd::Graft { symbol, forest } => {
            let d = s
                .alphabet
                .lookup(symbol)
                .ok_or_else(|| format!("unknown symbol `{symbol}`"))?;
            let t = graft(d, &s.parse(forest)?).map_err(|e| e.to_string())?;
            s.print(&basis(Forest::single(t)))?
        }
        Cmd::Enumerate => enumerate(&s),
        Cmd::Verify { suite } => return verify(&s, suite),
    }
    Ok(ExitCode::SUCCESS)
}

fn enumerate(s: &Session) {
    let n = s.config.max_vertices;
    let forests = enumerate_forests(n, &s.alphabet);
    let mut counts = vec![0usize; n + 1];
    for f in &forests {
        counts[f.nvertices()] += 1;
    }
    if s.config.output == Output::Json {
        let texts: Vec<String> = forests.iter().map(ToString::to_string).collect();
        println!("{}", json!({ "forests": texts, "counts": counts, "total": forests.len() }));
        return;
    }
    for f in &forests {
        println!("{f}");
    }
    let by_size: Vec<String> = counts.iter().enumerate().map(|(k, c)| format!("{k}:{c}")).collect();
    println!("counts by vertices: {} total {}", by_size.join(" "), forests.len());
}

fn verify(s: &Session, name: &str) -> Fallible<ExitCode> {
    let suites = if name == "all" {
        Suite::ALL.to_vec()
    } else {
        vec![name.parse::<Suite>().map_err(|e| e.to_string())?]
    };
    let mut reports: Vec<SuiteReport> = Vec::new();
    for suite in suites {
        reports.push(run_suite(suite, &s.config).map_err(|e| e.to_string())?);
    }
    if s.config.output == Output::Json {
        let values: Vec<_> = reports.iter().map(SuiteReport::to_json).collect();
        match values.as_slice() {
            [one] => println!("{one}"),
            _ => println!("{}", serde_json::Value::Array(values)),
        }
    } else {
        for r in &reports {
            print!("{}", r.render());
        }
    }
    Ok(if reports.iter().all(SuiteReport::ok) {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
