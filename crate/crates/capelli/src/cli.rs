//! The `capelli` command line.

use std::io::Write;

use capelli_core::fusion::{fusion_limit, phi_lambda_mu, pole_order_phi, upsilon_limit, verify_transposition_sum};
use capelli_core::ring::rat;
use capelli_core::tensormat::{e_lambda, e_lambda_poly, quantum_determinant};
use capelli_core::weyl::{c_lambda, capelli_product, ugl_to_weyl, DeltaReading};
use capelli_core::YoungDiagram;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::json::{render, ToJson};
use crate::sweep::{self, Suite, SweepConfig};

/// Hard caps for single computations.
const MAX_SHAPE: usize = 7;
const MAX_PAIR_TOTAL: usize = 8;
const MAX_GL: usize = 4;

#[derive(Parser, Debug)]
#[command(name = "capelli", version, about = "Fusion procedure, Yangian evaluation modules and higher Capelli identities in exact arithmetic")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
    /// Worker threads for sweeps.
    #[arg(long, env = "CAPELLI_JOBS", global = true)]
    pub jobs: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Formula {
    /// Character sum over `S_n`.
    #[value(alias = "1.1")]
    Character,
    /// Ordered product with the coefficients `y_σ`.
    #[value(alias = "1.3")]
    Product,
    /// Image of `e_λ` under the `gl_N` action.
    Image,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    Fusion,
    Pole,
    Rtt,
    Capelli,
    All,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Fusion limit of the ordered product of `φ_ij` for a diagram.
    Fusion {
        #[arg(long, value_parser = parse_shape)]
        shape: YoungDiagram,
    },
    /// Limit of the `𝒜`-part of the reordered product, `Q_λ P_λ`.
    Upsilon {
        #[arg(long, value_parser = parse_shape)]
        shape: YoungDiagram,
    },
    /// Closed form `Q_λ P_λ Q_λ / ∏ λ'_s!`.
    Symmetrizer {
        #[arg(long, value_parser = parse_shape)]
        shape: YoungDiagram,
    },
    /// `Φ_λμ(z)`, or only its pole order at zero.
    PhiPair {
        #[arg(long, value_parser = parse_shape)]
        lambda: YoungDiagram,
        #[arg(long, value_parser = parse_shape)]
        mu: YoungDiagram,
        #[arg(long)]
        pole_order: bool,
    },
    /// Checks `∏ φ_{1,k+1}(u, c_k)·Φ = (1 - Σ (1,k+1)/u)·Φ`.
    #[command(alias = "prop212")]
    TranspositionSum {
        #[arg(long, value_parser = parse_shape)]
        shape: YoungDiagram,
    },
    /// Coefficients `D_1, …, D_N` of the quantum determinant in `U(gl_N)`.
    Qdet {
        #[arg(long = "N")]
        n: usize,
    },
    /// The quantum immanant `e_λ`, or all coefficients of `e_λ(z)`.
    Elambda {
        #[arg(long, value_parser = parse_shape)]
        shape: YoungDiagram,
        #[arg(long = "N")]
        n: usize,
        #[arg(long)]
        z_poly: bool,
    },
    /// A higher Capelli operator on `C^N ⊗ C^M`.
    Capelli {
        #[arg(long, value_parser = parse_shape)]
        shape: YoungDiagram,
        #[arg(long = "N")]
        n: usize,
        #[arg(long = "M")]
        m: usize,
        #[arg(long, value_enum, default_value_t = Formula::Character)]
        formula: Formula,
    },
    /// Runs verification sweeps.
    Verify {
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        #[arg(long)]
        max_n: Option<usize>,
        /// `n,m` caps for the pole suite.
        #[arg(long, value_parser = parse_pair)]
        max_pair: Option<(usize, usize)>,
        #[arg(long)]
        gl_n: Option<usize>,
        #[arg(long)]
        gl_m: Option<usize>,
        #[arg(long)]
        tensor_n: Option<usize>,
        #[arg(long)]
        capelli_n: Option<usize>,
    },
}

fn parse_shape(s: &str) -> Result<YoungDiagram, String> {
    s.parse::<YoungDiagram>().map_err(|e| e.to_string())
}

fn parse_pair(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s.split_once(',').ok_or_else(|| format!("expected n,m, got {s:?}"))?;
    let parse = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("{t:?}: {e}"));
    Ok((parse(a)?, parse(b)?))
}

/// Failure of a command after argument parsing.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Compute(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

fn cap(name: &str, value: usize, max: usize) -> Result<(), CliError> {
    if value > max {
        return Err(CliError::Usage(format!("{name} = {value} exceeds the cap {max}")));
    }
    Ok(())
}

fn positive(name: &str, value: usize) -> Result<(), CliError> {
    if value == 0 {
        return Err(CliError::Usage(format!("{name} must be at least 1")));
    }
    Ok(())
}

struct Output {
    json: Value,
    text: String,
    ok: bool,
}

impl Output {
    fn value(json: Value, text: impl ToString) -> Self {
        Output { json, text: text.to_string(), ok: true }
    }
}

fn execute(command: &Command, jobs: Option<usize>, err: &mut dyn Write) -> Result<Output, CliError> {
    let compute = |e: &dyn std::fmt::Display| CliError::Compute(e.to_string());
    Ok(match command {
        Command::Fusion { shape } => {
            cap("shape size", shape.size(), MAX_SHAPE)?;
            let x = fusion_limit(shape).map_err(|e| compute(&e))?;
            Output::value(x.to_json(), &x)
        }
        Command::Upsilon { shape } => {
            cap("shape size", shape.size(), MAX_SHAPE)?;
            let x = upsilon_limit(shape).map_err(|e| compute(&e))?;
            Output::value(x.to_json(), &x)
        }
        Command::Symmetrizer { shape } => {
            cap("shape size", shape.size(), MAX_SHAPE)?;
            let x = shape.symmetrizers().phi;
            Output::value(x.to_json(), &x)
        }
        Command::PhiPair { lambda, mu, pole_order } => {
            cap("total size", lambda.size() + mu.size(), MAX_PAIR_TOTAL)?;
            if *pole_order {
                let order = pole_order_phi(lambda, mu);
                Output::value(json!(order), order)
            } else {
                let x = phi_lambda_mu(lambda, mu);
                Output::value(x.to_json(), &x)
            }
        }
        Command::TranspositionSum { shape } => {
            cap("shape size", shape.size(), MAX_SHAPE)?;
            let holds = verify_transposition_sum(shape).map_err(|e| compute(&e))?;
            let text = if holds { "holds" } else { "FAILS" };
            Output { json: json!({"shape": shape.to_string(), "holds": holds}), text: format!("({shape}): {text}"), ok: holds }
        }
        Command::Qdet { n } => {
            positive("N", *n)?;
            cap("N", *n, MAX_GL)?;
            let qd = quantum_determinant(*n);
            let text: Vec<String> = qd.coefficients.iter().enumerate().map(|(k, c)| format!("D_{} = {c}", k + 1)).collect();
            Output::value(qd.coefficients.to_json(), text.join("\n"))
        }
        Command::Elambda { shape, n, z_poly } => {
            positive("N", *n)?;
            cap("N", *n, MAX_GL)?;
            cap("shape size", shape.size(), 4)?;
            if *z_poly {
                let p = e_lambda_poly(shape, *n);
                let text: Vec<String> = p.coeffs().iter().enumerate().map(|(k, c)| format!("z^{k}: {c}")).collect();
                Output::value(p.to_json(), text.join("\n"))
            } else {
                let x = e_lambda(shape, *n, &rat(0));
                Output::value(x.to_json(), &x)
            }
        }
        Command::Capelli { shape, n, m, formula } => {
            positive("N", *n)?;
            positive("M", *m)?;
            cap("N", *n, MAX_GL)?;
            cap("M", *m, MAX_GL)?;
            cap("shape size", shape.size(), 4)?;
            let x = match formula {
                Formula::Character => c_lambda(shape, *n, *m),
                Formula::Product => capelli_product(shape, *n, *m, DeltaReading::PerFactor),
                Formula::Image => ugl_to_weyl(&e_lambda(shape, *n, &rat(0)), *n, *m).map_err(|e| compute(&e))?,
            };
            Output::value(x.to_json(), &x)
        }
        Command::Verify { suite, max_n, max_pair, gl_n, gl_m, tensor_n, capelli_n } => {
            let d = SweepConfig::default();
            let config = SweepConfig {
                max_n: max_n.unwrap_or(d.max_n),
                max_pair: max_pair.unwrap_or(d.max_pair),
                gl_n: gl_n.unwrap_or(d.gl_n),
                gl_m: gl_m.unwrap_or(d.gl_m),
                tensor_n: tensor_n.unwrap_or(d.tensor_n),
                capelli_n: capelli_n.unwrap_or(d.capelli_n),
            };
            config.validate().map_err(|e| CliError::Usage(e.to_string()))?;
            let enlarged = config.enlarged();
            if !enlarged.is_empty() {
                writeln!(err, "warning: {} beyond the default ranges; this may take a long time", enlarged.join(", "))?;
            }
            let suites: Vec<Suite> = match suite {
                SuiteArg::Fusion => vec![Suite::Fusion],
                SuiteArg::Pole => vec![Suite::Pole],
                SuiteArg::Rtt => vec![Suite::Rtt],
                SuiteArg::Capelli => vec![Suite::Capelli],
                SuiteArg::All => Suite::ALL.to_vec(),
            };
            let report = match jobs {
                Some(0) => return Err(CliError::Usage("--jobs must be at least 1".into())),
                Some(j) => rayon::ThreadPoolBuilder::new()
                    .num_threads(j)
                    .build()
                    .map_err(|e| compute(&e))?
                    .install(|| sweep::run(&suites, &config)),
                None => sweep::run(&suites, &config),
            };
            Output { json: report.to_json(), text: report.to_text().trim_end().to_string(), ok: report.passed() }
        }
    })
}

/// Runs the program on `args` (including the program name) and returns the
/// exit code: 0 on success, 1 on a failed verification, 2 on a usage error.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if code == 0 { out } else { err };
            let _ = write!(sink, "{rendered}");
            return if code == 0 { 0 } else { 2 };
        }
    };
    match execute(&cli.command, cli.jobs, err) {
        Ok(output) => {
            let written = match cli.format {
                Format::Json => writeln!(out, "{}", render(&output.json)),
                Format::Text => writeln!(out, "{}", output.text),
            };
            if written.is_err() {
                return 2;
            }
            if output.ok {
                0
            } else {
                1
            }
        }
        Err(CliError::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let mut argv = vec!["capelli"];
        argv.extend_from_slice(args);
        let code = run(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn fusion_matches_symmetrizer() {
        let (c1, a, _) = call(&["fusion", "--shape", "2,1"]);
        let (c2, b, _) = call(&["symmetrizer", "--shape", "2,1"]);
        assert_eq!((c1, c2), (0, 0));
        assert_eq!(a, b);
    }

    #[test]
    fn pole_order_of_single_boxes() {
        let (code, out, _) = call(&["phi-pair", "--lambda", "1", "--mu", "1", "--pole-order"]);
        assert_eq!(code, 0);
        assert_eq!(out.trim(), "1");
    }

    #[test]
    fn usage_errors() {
        assert_eq!(call(&["fusion", "--shape", "1,2"]).0, 2);
        assert_eq!(call(&["fusion", "--shape", "9"]).0, 2);
        assert_eq!(call(&["qdet", "--N", "0"]).0, 2);
        assert_eq!(call(&["bogus"]).0, 2);
        assert_eq!(call(&["verify", "--max-n", "0"]).0, 2);
        assert_eq!(call(&["--help"]).0, 0);
    }

    #[test]
    fn formula_aliases() {
        let (_, a, _) = call(&["capelli", "--shape", "1,1", "--N", "2", "--M", "2", "--formula", "1.1"]);
        let (_, b, _) = call(&["capelli", "--shape", "1,1", "--N", "2", "--M", "2", "--formula", "1.3"]);
        let (_, c, _) = call(&["capelli", "--shape", "1,1", "--N", "2", "--M", "2", "--formula", "image"]);
        assert_eq!(a, b);
        assert_eq!(a, c);
        let (code, out, _) = call(&["prop212", "--shape", "2,1"]);
        assert_eq!(code, 0);
        assert_eq!(out.trim(), r#"{"holds":true,"shape":"2,1"}"#);
    }
}
