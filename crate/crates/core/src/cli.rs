//! Command-line front end.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::braiding::verify_braid_calculus;
use crate::free_algebra::{
    element_to_json, parse_element, render, render_tensor, tensor_to_json, verify_tau_star,
    FreeElement, TensorElement,
};
use crate::hopf::{verify_hopf_axioms, HopfSuite};
use crate::sabinin::{
    verify_primitive_operations, verify_sabinin_identities, CyclicScope, SabininReading, SwapRange,
};
use crate::{Braiding, Error, HopfContext, MultilinearOp, Report, SabininContext};

#[derive(Debug, Parser)]
#[command(
    name = "nahopf",
    version,
    about = "Exact computations in the free nonassociative algebra over a braided space"
)]
pub struct Cli {
    /// Braiding definition (JSON).
    #[arg(long, global = true, env = "NAHOPF_BRAIDING")]
    pub braiding: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Load a braiding file and check the Yang-Baxter equation.
    CheckBraiding { file: PathBuf },
    /// The coproduct of an element.
    Coproduct { expr: String },
    /// The counit of an element.
    Counit { expr: String },
    /// `(a ⊗ b)τ*`.
    Tau { a: String, b: String },
    /// `left U Y` computes U\Y, `right Y U` computes Y/U.
    Divide {
        side: Side,
        first: String,
        second: String,
    },
    /// Evaluate a braided operation.
    Op {
        #[command(subcommand)]
        op: OpCommand,
    },
    /// A basis of the primitive elements of a given degree.
    Primitives {
        #[arg(long)]
        degree: usize,
        /// Comma separated generator counts, e.g. `1,1,1`.
        #[arg(long)]
        multidegree: Option<String>,
    },
    /// Run a verification suite.
    Verify {
        suite: Suite,
        #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u64).range(1..=12))]
        max_degree: u64,
        /// Range of the transposed position in the swap identity.
        #[arg(long, value_enum, default_value_t = SwapArg::Classical)]
        swap_range: SwapArg,
        /// Terms the cyclic sum of the cyclic identity acts on.
        #[arg(long, value_enum, default_value_t = CyclicArg::Whole)]
        cyclic: CyclicArg,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Side {
    Left,
    Right,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    /// Braid-word identities and the braid relation of τ*.
    Braid,
    /// Coproduct, counit and division axioms.
    Hopf,
    /// Primitivity of the commutator and of P(m,n), m+n ≤ max degree.
    Primitivity,
    /// Sabinin identities for m ≤ max degree - 2.
    Sabinin,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SwapArg {
    Classical,
    Shifted,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CyclicArg {
    Whole,
    Head,
}

#[derive(Debug, Subcommand)]
pub enum OpCommand {
    /// P(m,n) on m+n+1 arguments.
    #[command(name = "P")]
    P {
        m: usize,
        n: usize,
        args: Vec<String>,
    },
    /// S(m,2) on m+2 arguments.
    #[command(name = "S")]
    S { m: usize, args: Vec<String> },
    /// Phi(m,n) on m+n arguments.
    #[command(name = "Phi")]
    Phi {
        m: usize,
        n: usize,
        args: Vec<String>,
    },
    /// The braided commutator.
    Commutator { x: String, y: String },
}

#[derive(Serialize)]
struct BraidingStatus {
    pass: bool,
    dim: Option<usize>,
    involutive: Option<bool>,
    error: Option<String>,
}

fn load(cli: &Cli) -> Result<Braiding, Error> {
    let path = cli.braiding.as_ref().ok_or_else(|| {
        Error::InvalidBraiding("no braiding given; use --braiding FILE or NAHOPF_BRAIDING".into())
    })?;
    Braiding::from_path(path)
}

fn write_element(out: &mut dyn Write, format: Format, a: &FreeElement) -> Result<(), Error> {
    match format {
        Format::Text => writeln!(out, "{}", render(a))?,
        Format::Json => writeln!(
            out,
            "{}",
            serde_json::to_string_pretty(&element_to_json(a))?
        )?,
    }
    Ok(())
}

fn write_tensor(out: &mut dyn Write, format: Format, t: &TensorElement) -> Result<(), Error> {
    match format {
        Format::Text => writeln!(out, "{}", render_tensor(t))?,
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&tensor_to_json(t))?)?,
    }
    Ok(())
}

fn write_report(out: &mut dyn Write, format: Format, r: &Report) -> Result<bool, Error> {
    match format {
        Format::Text => write!(out, "{}", r.to_text())?,
        Format::Json => writeln!(out, "{}", r.to_json())?,
    }
    Ok(r.all_pass())
}

fn parse_multidegree(text: &str) -> Result<Vec<usize>, Error> {
    text.split(',')
        .map(|p| {
            p.trim()
                .parse()
                .map_err(|_| Error::Parse(format!("invalid multidegree `{text}`")))
        })
        .collect()
}

fn check_braiding(file: &PathBuf, format: Format, out: &mut dyn Write) -> Result<bool, Error> {
    let status = match Braiding::from_path(file) {
        Ok(b) => BraidingStatus {
            pass: true,
            dim: Some(b.dim()),
            involutive: Some(b.is_involutive()),
            error: None,
        },
        Err(e @ (Error::YangBaxter { .. } | Error::InvalidBraiding(_))) => BraidingStatus {
            pass: false,
            dim: None,
            involutive: None,
            error: Some(e.to_string()),
        },
        Err(e) => return Err(e),
    };
    match format {
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&status)?)?,
        Format::Text if status.pass => writeln!(
            out,
            "PASS dim={} involutive={}",
            status.dim.unwrap_or_default(),
            status.involutive.unwrap_or_default()
        )?,
        Format::Text => writeln!(out, "FAIL {}", status.error.as_deref().unwrap_or_default())?,
    }
    Ok(status.pass)
}

fn run_op(ctx: &SabininContext, op: &OpCommand) -> Result<FreeElement, Error> {
    let (op, args): (MultilinearOp, Vec<&String>) = match op {
        OpCommand::P { m, n, args } => (MultilinearOp::P(*m, *n), args.iter().collect()),
        OpCommand::S { m, args } => (MultilinearOp::S(*m), args.iter().collect()),
        OpCommand::Phi { m, n, args } => (MultilinearOp::Phi(*m, *n), args.iter().collect()),
        OpCommand::Commutator { x, y } => (MultilinearOp::Commutator, vec![x, y]),
    };
    let op = op.checked()?;
    let args = args
        .into_iter()
        .map(|a| parse_element(a, ctx.dim()))
        .collect::<Result<Vec<_>, _>>()?;
    ctx.evaluate(&op, &args)
}

/// Runs one command, writing its output to `out`. Returns whether every
/// requested check passed.
pub fn execute(cli: &Cli, out: &mut dyn Write) -> Result<bool, Error> {
    let format = cli.format;
    if let Command::CheckBraiding { file } = &cli.command {
        return check_braiding(file, format, out);
    }
    let braiding = load(cli)?;
    let dim = braiding.dim();
    let parse = |s: &str| parse_element(s, dim);
    match &cli.command {
        Command::CheckBraiding { .. } => unreachable!("handled above"),
        Command::Coproduct { expr } => {
            let ctx = HopfContext::new(braiding);
            write_tensor(out, format, &ctx.coproduct(&parse(expr)?))?;
        }
        Command::Counit { expr } => {
            let ctx = HopfContext::new(braiding);
            let value = FreeElement::basis(crate::Tree::UNIT).scale(&ctx.counit(&parse(expr)?));
            write_element(out, format, &value)?;
        }
        Command::Tau { a, b } => {
            let ctx = HopfContext::new(braiding);
            write_tensor(
                out,
                format,
                &ctx.algebra().tau_star_elements(&parse(a)?, &parse(b)?),
            )?;
        }
        Command::Divide {
            side,
            first,
            second,
        } => {
            let ctx = HopfContext::new(braiding);
            let (a, b) = (parse(first)?, parse(second)?);
            let value = match side {
                Side::Left => ctx.left_divide(&a, &b),
                Side::Right => ctx.right_divide(&a, &b),
            };
            write_element(out, format, &value)?;
        }
        Command::Op { op } => {
            let ctx = SabininContext::new(braiding)?;
            write_element(out, format, &run_op(&ctx, op)?)?;
        }
        Command::Primitives {
            degree,
            multidegree,
        } => {
            let ctx = HopfContext::new(braiding);
            let counts = multidegree.as_deref().map(parse_multidegree).transpose()?;
            let basis = ctx.primitive_subspace(*degree, counts.as_deref())?;
            match format {
                Format::Text => {
                    writeln!(out, "dimension {}", basis.len())?;
                    for b in &basis {
                        writeln!(out, "{}", render(b))?;
                    }
                }
                Format::Json => {
                    let json: Vec<_> = basis.iter().map(element_to_json).collect();
                    writeln!(out, "{}", serde_json::to_string_pretty(&json)?)?;
                }
            }
        }
        Command::Verify {
            suite,
            max_degree,
            swap_range,
            cyclic,
        } => {
            let d = *max_degree as usize;
            let report = match suite {
                Suite::Braid => {
                    let mut r = verify_braid_calculus(&braiding, d + 2)?;
                    let ctx = HopfContext::new(braiding);
                    r.extend(verify_tau_star(ctx.algebra(), d));
                    r
                }
                Suite::Hopf => {
                    let ctx = HopfContext::new(braiding);
                    verify_hopf_axioms(&ctx, HopfSuite::up_to(d), None)
                }
                Suite::Primitivity => {
                    let ctx = SabininContext::new(braiding)?;
                    verify_primitive_operations(&ctx, d)
                }
                Suite::Sabinin => {
                    let ctx = SabininContext::new(braiding)?;
                    let reading = SabininReading {
                        swap: match swap_range {
                            SwapArg::Classical => SwapRange::Classical,
                            SwapArg::Shifted => SwapRange::Shifted,
                        },
                        cyclic: match cyclic {
                            CyclicArg::Whole => CyclicScope::Whole,
                            CyclicArg::Head => CyclicScope::Head,
                        },
                    };
                    verify_sabinin_identities(&ctx, d.saturating_sub(2), reading)
                }
            };
            return write_report(out, format, &report);
        }
    }
    Ok(true)
}

/// Entry point of the `nahopf` binary. Exit status 0 when every check
/// passes, 1 when a check fails, 2 on errors.
pub fn main_with_args<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match execute(&cli, &mut out) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Error::Io(e)) if e.kind() == std::io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(e) => {
            let _ = out.flush();
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(args: &[&str]) -> (Result<bool, Error>, String) {
        let cli =
            Cli::try_parse_from(std::iter::once("nahopf").chain(args.iter().copied())).unwrap();
        let mut out = Vec::new();
        let r = execute(&cli, &mut out);
        (r, String::from_utf8(out).unwrap())
    }

    fn flip_file() -> tempfile::NamedTempFile {
        let f = tempfile::NamedTempFile::new().unwrap();
        std::fs::write(f.path(), Braiding::flip(3).to_json()).unwrap();
        f
    }

    #[test]
    fn coproduct_and_division() {
        let f = flip_file();
        let b = f.path().to_str().unwrap();
        let (r, out) = run(&["--braiding", b, "coproduct", "(x1 x2)"]);
        assert!(r.unwrap());
        assert_eq!(
            out,
            "1*[1 | (x1 x2)] + 1*[x1 | x2] + 1*[x2 | x1] + 1*[(x1 x2) | 1]\n"
        );
        let (_, out) = run(&["--braiding", b, "divide", "left", "x1", "x2"]);
        assert_eq!(out, "-1*(x1 x2)\n");
    }

    #[test]
    fn multidegree_and_missing_braiding() {
        assert_eq!(parse_multidegree("1, 2,0").unwrap(), vec![1, 2, 0]);
        assert!(parse_multidegree("1,a").is_err());
        let cli = Cli::try_parse_from(["nahopf", "coproduct", "x1"]).unwrap();
        if cli.braiding.is_none() {
            assert!(execute(&cli, &mut Vec::new()).is_err());
        }
    }
}
