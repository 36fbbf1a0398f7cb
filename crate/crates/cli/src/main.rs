use std::path::Path;
use std::process::ExitCode;

use bialg::matrix_eval::{normal_form_to_matrix, term_to_matrix, BialgebraTable, DEFAULT_DIM_BOUND};
use bialg::normalize::{
    decide_equal, normalize_functorial, normalize_rewrite_with, normalize_trace, RewriteOptions,
    Strategy,
};
use bialg::perm::format_cycles;
use bialg::{fgfmon, HatArrow, NormalForm, Term};
use clap::{Parser, Subcommand};

mod suites;

const EXIT_INPUT: u8 = 2;
const EXIT_DISAGREE: u8 = 3;

#[derive(Parser)]
#[command(name = "bialg", version, about = "Normal forms and equality for bialgebra morphisms")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Cross-check the result with every independent method.
    #[arg(long, global = true)]
    verify: bool,

    /// Seed for randomized strategies and suites.
    #[arg(long, global = true)]
    seed: Option<u64>,

    /// Budget of elementary reductions for the rewrite engine.
    #[arg(long, global = true, default_value_t = 1_000_000)]
    max_steps: usize,

    /// Largest matrix side length accepted by `eval-matrix`.
    #[arg(long, global = true, default_value_t = DEFAULT_DIM_BOUND)]
    dim_bound: u128,

    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Print the normal form of a term.
    Normalize { term: String },
    /// Decide whether two terms denote the same morphism.
    Equal { left: String, right: String },
    /// Compose two decorated arrows given as JSON text or files: OUTER ∘ INNER.
    Compose { outer: String, inner: String },
    /// Run the invariant suites.
    Check,
    /// Print the matrix of a term over Sweedler's four-dimensional bialgebra.
    EvalMatrix { term: String },
}

enum Failure {
    Input(String),
    Disagree(String),
}

impl From<bialg::Error> for Failure {
    fn from(e: bialg::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

type Outcome = Result<ExitCode, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Normalize { term } => normalize(&cli, term),
        Command::Equal { left, right } => equal(&cli, left, right),
        Command::Compose { outer, inner } => compose(outer, inner),
        Command::Check => check(&cli),
        Command::EvalMatrix { term } => eval_matrix(&cli, term),
    };
    match outcome {
        Ok(code) => code,
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_INPUT)
        }
        Err(Failure::Disagree(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(EXIT_DISAGREE)
        }
    }
}

fn rewrite_options(cli: &Cli) -> RewriteOptions {
    RewriteOptions {
        strategy: cli.seed.map_or(Strategy::LeftmostInnermost, Strategy::Random),
        max_steps: cli.max_steps,
    }
}

/// Normal form by evaluation, checked against the other two methods when asked.
fn normal_form(cli: &Cli, t: &Term) -> Result<NormalForm, Failure> {
    let nf = normalize_functorial(t)?;
    if cli.verify {
        let rewrite = normalize_rewrite_with(t, &rewrite_options(cli))?;
        let trace = normalize_trace(t)?;
        if rewrite != nf || trace != nf {
            return Err(Failure::Disagree(format!(
                "`{t}`: functorial {nf:?}, rewrite {rewrite:?}, trace {trace:?}"
            )));
        }
    }
    Ok(nf)
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("serializable")
}

fn normalize(cli: &Cli, text: &str) -> Outcome {
    let t = Term::parse(text)?;
    let nf = normal_form(cli, &t)?;
    if cli.json {
        println!("{}", to_json(&nf));
    } else {
        let tuple = |v: &[usize]| {
            let parts: Vec<String> = v.iter().map(usize::to_string).collect();
            format!("({})", parts.join(","))
        };
        println!("p = {}", tuple(&nf.p));
        println!(
            "sigma = {:?} = {}",
            nf.sigma.one_line(),
            match format_cycles(&nf.sigma).as_str() {
                "" => "id".to_string(),
                c => c.to_string(),
            }
        );
        println!("q = {}", tuple(&nf.q));
        println!("{}", nf.sweedler());
    }
    Ok(ExitCode::SUCCESS)
}

fn equal(cli: &Cli, left: &str, right: &str) -> Outcome {
    let a = Term::parse(left)?;
    let b = Term::parse(right)?;
    let verdict = decide_equal(&a, &b)?;
    if cli.verify && a.arity()? == b.arity()? {
        let same = normal_form(cli, &a)? == normal_form(cli, &b)?;
        if same != verdict.equal {
            return Err(Failure::Disagree(format!("decision {} vs {same}", verdict.equal)));
        }
    }
    if cli.json {
        println!(
            "{}",
            serde_json::json!({ "equal": verdict.equal, "witness": verdict.witness })
        );
    } else if verdict.equal {
        println!("equal");
    } else {
        println!("not equal: {}", verdict.witness.as_deref().unwrap_or(""));
    }
    Ok(if verdict.equal {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    })
}

fn read_arrow(arg: &str) -> Result<HatArrow, Failure> {
    let text = if arg.trim_start().starts_with('{') {
        arg.to_string()
    } else {
        std::fs::read_to_string(Path::new(arg))
            .map_err(|e| Failure::Input(format!("{arg}: {e}")))?
    };
    serde_json::from_str(&text).map_err(|e| Failure::Input(format!("{arg}: {e}")))
}

fn compose(outer: &str, inner: &str) -> Outcome {
    let g = read_arrow(outer)?;
    let f = read_arrow(inner)?;
    let gf = fgfmon::compose_hat(&g, &f)?;
    println!("{}", to_json(&gf));
    Ok(ExitCode::SUCCESS)
}

fn check(cli: &Cli) -> Outcome {
    let settings = suites::Settings {
        seed: cli.seed.unwrap_or(0),
        max_steps: cli.max_steps,
        dim_bound: cli.dim_bound,
    };
    let reports = suites::run_all(&settings);
    let passed = reports.iter().all(|r| r.result.is_ok());
    if cli.json {
        let rows: Vec<_> = reports
            .iter()
            .map(|r| {
                let (ok, detail) = match &r.result {
                    Ok(d) => (true, d),
                    Err(d) => (false, d),
                };
                serde_json::json!({ "name": r.name, "passed": ok, "detail": detail })
            })
            .collect();
        println!("{}", serde_json::json!({ "passed": passed, "suites": rows }));
    } else {
        for r in &reports {
            match &r.result {
                Ok(d) => println!("PASS {:<14} {d}", r.name),
                Err(d) => println!("FAIL {:<14} {d}", r.name),
            }
        }
    }
    Ok(if passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    })
}

fn eval_matrix(cli: &Cli, text: &str) -> Outcome {
    let t = Term::parse(text)?;
    let h4 = BialgebraTable::sweedler_h4();
    let m = term_to_matrix(&t, &h4, cli.dim_bound)?;
    if cli.verify {
        let nf = normal_form(cli, &t)?;
        if normal_form_to_matrix(&nf, &h4, cli.dim_bound)? != m {
            return Err(Failure::Disagree(format!("matrix of `{t}` differs from its normal form")));
        }
    }
    if cli.json {
        println!("{}", m.to_json());
    } else {
        print!("{m}");
    }
    Ok(ExitCode::SUCCESS)
}
