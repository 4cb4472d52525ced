//! `lsdgla`: command-line front end for the interval DGLA.
//!
//! Exit status is 0 on success, 1 when `verify` finds a failing check and 2
//! on usage, parse or construction errors.

use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use lsdgla::export::structure_table;
use lsdgla::expr::parse_element;
use lsdgla::rational::{parse_rational, to_pq};
use lsdgla::serialize::{element_to_json, monomial_to_json};
use lsdgla::verify::run_verification;
use lsdgla::{
    basis_enumerate, bernoulli_upto, curvature, ls_differential_with, Alphabet, BernoulliTable,
    Derivation, Error, FlowProblem, LieElement, Rational, RationalTime, TruncationContext,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "lsdgla", version, about = "Exact computations in the free DGLA of the interval")]
struct Cli {
    /// Drop brackets of word length greater than N.
    #[arg(long = "max-len", value_name = "N", default_value_t = 6, global = true)]
    max_len: usize,

    #[arg(long, value_enum, default_value_t = Format::Human, global = true)]
    format: Format,

    /// Replace the i-th series coefficient of ∂e, e.g. `2=1/10`. Repeatable.
    #[arg(long = "perturb-bernoulli", value_name = "I=P/Q", value_parser = parse_override, global = true)]
    perturb_bernoulli: Vec<(usize, Rational)>,

    /// Generators as `name:degree` pairs in basis order.
    #[arg(long, default_value = "a:-1,b:-1,e:0", global = true)]
    alphabet: String,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the normal form of an expression.
    Normalize {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Apply the differential to an expression.
    Diff {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Run every check; exit 1 if any fails.
    Verify,
    /// Evaluate the gauge flow du/dt = ∂v − [v,u] at a rational time.
    Flow {
        #[arg(long, value_name = "P/Q", default_value = "1", allow_hyphen_values = true)]
        t: String,
        /// Degree 0 generator of the flow.
        #[arg(long, default_value = "e", allow_hyphen_values = true)]
        v: String,
        /// Degree −1 initial value.
        #[arg(long, default_value = "a", allow_hyphen_values = true)]
        u0: String,
    },
    /// List the basis monomials of a given length and degree.
    Basis {
        #[arg(long)]
        length: usize,
        #[arg(long, allow_hyphen_values = true)]
        degree: i64,
    },
    /// Print B_0 ..= B_n.
    Bernoulli {
        #[arg(long, default_value_t = 20)]
        n: usize,
    },
    /// Emit the bracket and differential of every basis monomial.
    Export,
}

fn parse_override(s: &str) -> Result<(usize, Rational), String> {
    let (i, v) = s
        .split_once('=')
        .ok_or_else(|| format!("expected I=P/Q, got `{s}`"))?;
    let i = i.trim().parse().map_err(|_| format!("bad index `{i}`"))?;
    let v = parse_rational(v).map_err(|e| e.to_string())?;
    Ok((i, v))
}

struct Session {
    ctx: TruncationContext,
    format: Format,
    table: BernoulliTable,
}

impl Session {
    fn from_cli(cli: &Cli) -> lsdgla::Result<Self> {
        let alphabet = Arc::new(Alphabet::parse(&cli.alphabet)?);
        let ctx = TruncationContext::new(alphabet, cli.max_len)?;
        let top = cli
            .perturb_bernoulli
            .iter()
            .map(|(i, _)| *i)
            .max()
            .unwrap_or(0)
            .max(cli.max_len);
        let mut table = bernoulli_upto(top);
        for (i, v) in &cli.perturb_bernoulli {
            table = table.with_override(*i, v.clone());
        }
        Ok(Session {
            ctx,
            format: cli.format,
            table,
        })
    }

    fn differential(&self) -> lsdgla::Result<Derivation> {
        ls_differential_with(&self.ctx, &self.table)
    }

    fn element(&self, s: &str) -> lsdgla::Result<LieElement> {
        parse_element(s, &self.ctx)
    }

    fn print_element(&self, x: &LieElement) {
        match self.format {
            Format::Human => println!("{x}"),
            Format::Json => print_json(&element_to_json(x)),
        }
    }
}

fn print_json(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("JSON values always serialize"));
}

fn run(cli: &Cli) -> lsdgla::Result<ExitCode> {
    let s = Session::from_cli(cli)?;
    match &cli.command {
        Command::Normalize { expr } => s.print_element(&s.element(expr)?),
        Command::Diff { expr } => {
            let x = s.element(expr)?;
            s.print_element(&s.differential()?.apply(&x)?);
        }
        Command::Verify => {
            let report = run_verification(&s.ctx, &s.table)?;
            match s.format {
                Format::Human => print!("{}", report.to_human()),
                Format::Json => print_json(&report.to_json()),
            }
            if !report.all_passed() {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Flow { t, v, u0 } => {
            let t = RationalTime(parse_rational(t)?);
            let d = s.differential()?;
            let p = FlowProblem::new(s.element(v)?, s.element(u0)?, d.clone())?;
            let traj = p.trajectory()?;
            let u = traj.at(&t);
            let residual = p.residual_of(&traj, &t)?;
            let curv = curvature(&d, &u)?;
            match s.format {
                Format::Human => {
                    println!("u({t}) = {u}");
                    println!("residual = {residual}");
                    println!("curvature = {curv}");
                }
                Format::Json => print_json(&json!({
                    "t": to_pq(t.value()),
                    "u": element_to_json(&u),
                    "residual": element_to_json(&residual),
                    "curvature": element_to_json(&curv),
                })),
            }
        }
        Command::Basis { length, degree } => {
            let al = s.ctx.alphabet();
            let basis = basis_enumerate(&s.ctx, *length, *degree)?;
            match s.format {
                Format::Human => {
                    for m in &basis {
                        println!("{}", m.display(al));
                    }
                }
                Format::Json => print_json(&Value::Array(
                    basis
                        .iter()
                        .map(|m| {
                            json!({
                                "tree": monomial_to_json(m, al),
                                "length": m.len(),
                                "degree": m.degree(),
                            })
                        })
                        .collect(),
                )),
            }
        }
        Command::Bernoulli { n } => {
            let mut table = bernoulli_upto(*n);
            for (i, v) in &cli.perturb_bernoulli {
                if *i <= *n {
                    table = table.with_override(*i, v.clone());
                }
            }
            match s.format {
                Format::Human => {
                    for (i, b) in table.values().iter().enumerate() {
                        println!("{i} {}", to_pq(b));
                    }
                }
                Format::Json => print_json(&Value::Array(
                    table
                        .values()
                        .iter()
                        .enumerate()
                        .map(|(i, b)| json!({ "index": i, "value": to_pq(b) }))
                        .collect(),
                )),
            }
        }
        Command::Export => {
            let d = s.differential()?;
            let table = structure_table(&d)?;
            match s.format {
                Format::Human => print!("{}", table.to_human(&d)),
                Format::Json => print_json(&table.to_json(&d)),
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            if let Error::Parse { .. } = e {
                eprintln!("hint: expressions look like `1/2*[a,[b,e]] - b`");
            }
            ExitCode::from(2)
        }
    }
}
