//! Command-line front end for the monomial ideal calculus.
//!
//! Exit codes: 0 success or true, 1 false, 2 parse error, 3 dimension error.

use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use midr::decomposition::{contains, decompose, equal, is_m_irreducible, recompose, remove_redundant, Containment, Irreducibility};
use midr::error::Error;
use midr::ideal::{AfgIdeal, Decomposition};
use midr::json::{intersection_to_json, sum_to_json, witness_to_json};
use midr::staircase::staircase_2d;
use midr::syntax::{parse_expr, parse_monomial, print_intersection, print_sum, Expr, ParseError};

#[derive(Parser)]
#[command(name = "midr", version, about = "Monomial ideals with rational exponents: decompositions, containment, staircases")]
struct Cli {
    /// Number of variables (required).
    #[arg(long, global = true)]
    dim: Option<usize>,
    /// Machine-readable JSON output.
    #[arg(long, global = true)]
    json: bool,
    /// Print nothing; report through the exit code only.
    #[arg(long, global = true)]
    quiet: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Irredundant m-irreducible decomposition of an ideal.
    Decompose { expr: String },
    /// Sum of boxes equal to an ideal (typically a `cap(...)` of irreducibles).
    Recompose { expr: String },
    /// Whether a monomial lies in an ideal.
    Member { monomial: String, expr: String },
    /// Whether the second ideal is contained in the first.
    Contains { outer: String, inner: String },
    /// Whether two ideals are equal.
    Equal { a: String, b: String },
    /// Whether an ideal is m-irreducible, with a factorization if not.
    Irreducible { expr: String },
    /// Canonical sum of boxes with redundant boxes removed.
    Simplify { expr: String },
    /// Corners of a two-variable ideal's staircase.
    Staircase {
        expr: String,
        /// Emit an SVG drawing instead of text.
        #[arg(long)]
        svg: bool,
    },
}

enum Failure {
    Parse(ParseError),
    Dimension(String),
    Other(String),
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        if e.is_dimension_error() {
            Failure::Dimension(e.to_string())
        } else {
            Failure::Parse(e)
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::DimensionMismatch { .. } | Error::ZeroDimension | Error::VariableIndex { .. } => Failure::Dimension(e.to_string()),
            other => Failure::Other(other.to_string()),
        }
    }
}

struct Output {
    text: String,
    json: Value,
    truth: bool,
}

impl Output {
    fn value(text: String, json: Value) -> Self {
        Output { text, json, truth: true }
    }
}

fn raw(s: String) -> Value {
    serde_json::from_str(&s).expect("library JSON is valid")
}

fn containment_output(c: &Containment) -> Output {
    match c {
        Containment::Holds => Output { text: "true".into(), json: json!({ "contains": true }), truth: true },
        Containment::Fails(w) => Output {
            text: format!("false\nwitness: {w}"),
            json: json!({ "contains": false, "witness": raw(witness_to_json(w)) }),
            truth: false,
        },
    }
}

fn run(cli: &Cli, dim: usize) -> Result<Output, Failure> {
    let ideal = |text: &str| -> Result<(Expr, AfgIdeal), Failure> {
        let e = parse_expr(text, dim)?;
        let a = e.elaborate(dim);
        Ok((e, a))
    };
    Ok(match &cli.command {
        Command::Decompose { expr } => {
            let d = remove_redundant(&decompose(&ideal(expr)?.1));
            Output::value(print_intersection(&d), raw(intersection_to_json(&d)))
        }
        Command::Recompose { expr } => {
            let (e, a) = ideal(expr)?;
            let a = match e.as_decomposition(dim) {
                Some(d) => recompose(&d),
                None => a,
            };
            Output::value(print_sum(&a), raw(sum_to_json(&a)))
        }
        Command::Member { monomial, expr } => {
            let m = parse_monomial(monomial, dim)?;
            let truth = ideal(expr)?.1.member(&m)?;
            Output { text: truth.to_string(), json: json!({ "member": truth }), truth }
        }
        Command::Contains { outer, inner } => containment_output(&contains(&ideal(outer)?.1, &ideal(inner)?.1)?),
        Command::Equal { a, b } => {
            let (a, b) = (ideal(a)?.1, ideal(b)?.1);
            if equal(&a, &b)? {
                Output { text: "true".into(), json: json!({ "equal": true }), truth: true }
            } else {
                let c = contains(&a, &b)?;
                let c = if c.holds() { contains(&b, &a)? } else { c };
                let w = c.witness().expect("unequal ideals have a witness");
                Output {
                    text: format!("false\nwitness: {w}"),
                    json: json!({ "equal": false, "witness": raw(witness_to_json(w)) }),
                    truth: false,
                }
            }
        }
        Command::Irreducible { expr } => match is_m_irreducible(&ideal(expr)?.1) {
            Irreducibility::Irreducible(j) => {
                let d = Decomposition::new(dim, vec![j])?;
                Output {
                    text: format!("true\n{}", print_intersection(&d)),
                    json: json!({ "irreducible": true, "ideal": raw(intersection_to_json(&d)) }),
                    truth: true,
                }
            }
            Irreducibility::Reducible { first, rest } => {
                let first = Decomposition::new(dim, vec![first])?;
                Output {
                    text: format!("false\nfactors: {} and {}", print_intersection(&first), print_intersection(&rest)),
                    json: json!({
                        "irreducible": false,
                        "factors": [raw(intersection_to_json(&first)), raw(intersection_to_json(&rest))],
                    }),
                    truth: false,
                }
            }
        },
        Command::Simplify { expr } => {
            let a = ideal(expr)?.1.simplified();
            Output::value(print_sum(&a), raw(sum_to_json(&a)))
        }
        Command::Staircase { expr, svg } => {
            let path = staircase_2d(&ideal(expr)?.1)?;
            let text = if *svg {
                path.to_svg().trim_end().to_owned()
            } else {
                path.corners()
                    .iter()
                    .map(|c| {
                        let mark = |open: bool| if open { "+" } else { "" };
                        format!("({}{}, {}{})", midr::exponent::format_rational(&c.x), mark(c.x_open), midr::exponent::format_rational(&c.y), mark(c.y_open))
                    })
                    .collect::<Vec<_>>()
                    .join("\n")
            };
            Output::value(text, raw(path.to_json()))
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let Some(dim) = cli.dim else {
        eprintln!("error: --dim <d> is required");
        return ExitCode::from(2);
    };
    match run(&cli, dim) {
        Ok(out) => {
            if !cli.quiet {
                let svg = matches!(cli.command, Command::Staircase { svg: true, .. });
                if cli.json && !svg {
                    println!("{}", out.json);
                } else {
                    println!("{}", out.text);
                }
            }
            ExitCode::from(if out.truth { 0 } else { 1 })
        }
        Err(Failure::Parse(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(Failure::Dimension(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
        Err(Failure::Other(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
