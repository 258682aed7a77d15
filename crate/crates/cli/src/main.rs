use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use nambu_core::flows::{integrate, FlowSpec, IntegrationError};
use nambu_core::hamfields::{hamiltonian_kvector, liouville_check, nambu_bracket, NambuSystem};
use nambu_core::random::random_polynomial;
use nambu_core::{Coords, QForm, QPoly};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

#[derive(Parser)]
#[command(name = "nambu", version, about = "Exact Nambu-Hamiltonian field calculus")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check that X_H^k preserves the volume form; prints one JSON certificate per line.
    Verify(VerifyArgs),
    /// Evaluate {H, F1, ..., Fk}.
    Bracket(BracketArgs),
    /// Print the Hamiltonian k-vector of H as JSON.
    Field(FieldArgs),
    /// Print a primitive K(ω) of a closed form read from a JSON file.
    Potential(PotentialArgs),
    /// Integrate the flow of n-1 Hamiltonians and write a CSV trajectory.
    Integrate(IntegrateArgs),
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    dim: usize,
    #[arg(long)]
    grade: usize,
    #[arg(long, conflicts_with = "random", required_unless_present = "random")]
    hamiltonian: Option<String>,
    /// Number of random Hamiltonians to check.
    #[arg(long)]
    random: Option<usize>,
    #[arg(long, default_value_t = 3)]
    degree: u32,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct BracketArgs {
    #[arg(long)]
    dim: usize,
    /// "H;F1;...;Fk", separated by semicolons.
    #[arg(long)]
    hamiltonians: String,
    /// Appended as the last function argument.
    #[arg(long)]
    target: Option<String>,
}

#[derive(Args)]
struct FieldArgs {
    #[arg(long)]
    dim: usize,
    #[arg(long)]
    grade: usize,
    #[arg(long)]
    hamiltonian: String,
}

#[derive(Args)]
struct PotentialArgs {
    #[arg(long)]
    dim: usize,
    #[arg(long)]
    form: PathBuf,
}

#[derive(Args)]
struct IntegrateArgs {
    #[arg(long)]
    dim: usize,
    #[arg(long)]
    hamiltonians: String,
    /// Comma-separated initial state.
    #[arg(long)]
    init: String,
    #[arg(long = "t-end")]
    t_end: f64,
    #[arg(long)]
    step: f64,
    #[arg(long)]
    out: PathBuf,
}

enum Failure {
    Verification,
    Usage(String),
    Precondition(String),
}

impl Failure {
    fn report(self) -> ExitCode {
        match self {
            Failure::Verification => ExitCode::from(1),
            Failure::Usage(msg) => {
                eprintln!("error: {msg}");
                ExitCode::from(2)
            }
            Failure::Precondition(msg) => {
                eprintln!("error: {msg}");
                ExitCode::from(3)
            }
        }
    }
}

impl From<nambu_core::Error> for Failure {
    fn from(e: nambu_core::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Verify(a) => verify(a),
        Command::Bracket(a) => bracket(a),
        Command::Field(a) => field(a),
        Command::Potential(a) => potential(a),
        Command::Integrate(a) => run_integrate(a),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => f.report(),
    }
}

fn check_dim(n: usize) -> Outcome {
    if (2..=8).contains(&n) {
        Ok(())
    } else {
        Err(Failure::Usage(format!("--dim must be between 2 and 8, got {n}")))
    }
}

fn check_grade(n: usize, k: usize) -> Outcome {
    if (1..n).contains(&k) {
        Ok(())
    } else {
        Err(Failure::Usage(format!("--grade must be between 1 and {}, got {k}", n - 1)))
    }
}

/// Parses every expression over `x0..x{n-1}`; on three coordinates the
/// names `x, y, z` are accepted too and become the printed names whenever
/// the input uses them.
fn parse_all(n: usize, exprs: &[&str]) -> Result<Vec<QPoly>, Failure> {
    let indexed = Coords::indexed(n)?;
    let strict: Result<Vec<_>, _> = exprs.iter().map(|e| QPoly::parse(e, &indexed)).collect();
    match strict {
        Ok(ps) => Ok(ps),
        Err(_) if n == 3 => {
            let c = Coords::with_aliases(&["x", "y", "z"], &["x0", "x1", "x2"])?;
            Ok(exprs.iter().map(|e| QPoly::parse(e, &c)).collect::<Result<_, _>>()?)
        }
        Err(e) => Err(e.into()),
    }
}

fn split_list(list: &str) -> Vec<&str> {
    list.split(';').map(str::trim).collect()
}

fn verify(a: VerifyArgs) -> Outcome {
    check_dim(a.dim)?;
    check_grade(a.dim, a.grade)?;
    let hs = match (&a.hamiltonian, a.random) {
        (Some(expr), _) => parse_all(a.dim, &[expr])?,
        (None, Some(count)) => {
            let c: Arc<Coords> = Coords::indexed(a.dim)?;
            let mut rng = ChaCha8Rng::seed_from_u64(a.seed);
            (0..count).map(|_| random_polynomial(&mut rng, &c, a.degree, 6)).collect()
        }
        (None, None) => return Err(Failure::Usage("give --hamiltonian or --random".into())),
    };
    let certificates: Vec<_> = hs.par_iter().map(|h| liouville_check(h, a.grade)).collect::<Result<_, _>>()?;
    let mut all = true;
    for cert in &certificates {
        println!("{}", cert.to_json());
        all &= cert.pass();
    }
    if all {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn bracket(a: BracketArgs) -> Outcome {
    check_dim(a.dim)?;
    let mut exprs = split_list(&a.hamiltonians);
    if let Some(t) = &a.target {
        exprs.push(t);
    }
    let k = exprs.len() - 1;
    if !(1..a.dim).contains(&k) {
        return Err(Failure::Usage(format!(
            "a bracket on {} coordinates takes H and 1 to {} functions, got {k}",
            a.dim,
            a.dim - 1
        )));
    }
    let ps = parse_all(a.dim, &exprs)?;
    println!("{}", nambu_bracket(&ps[0], &ps[1..])?);
    Ok(())
}

fn field(a: FieldArgs) -> Outcome {
    check_dim(a.dim)?;
    check_grade(a.dim, a.grade)?;
    let h = parse_all(a.dim, &[&a.hamiltonian])?.remove(0);
    println!("{}", hamiltonian_kvector(&h, a.grade)?.to_json());
    Ok(())
}

fn potential(a: PotentialArgs) -> Outcome {
    check_dim(a.dim)?;
    let text = fs::read_to_string(&a.form).map_err(|e| Failure::Usage(format!("{}: {e}", a.form.display())))?;
    let form = QForm::from_json(&text)?;
    if form.dim() != a.dim {
        return Err(Failure::Usage(format!("form has {} coordinates, --dim is {}", form.dim(), a.dim)));
    }
    if form.grade() == 0 {
        return Err(Failure::Usage("a potential needs a form of grade at least 1".into()));
    }
    let residual = form.d();
    if !residual.is_zero() {
        return Err(Failure::Precondition(format!("form is not closed, d(form) = {residual}")));
    }
    println!("{}", form.homotopy()?.to_json());
    Ok(())
}

fn run_integrate(a: IntegrateArgs) -> Outcome {
    check_dim(a.dim)?;
    let hs = parse_all(a.dim, &split_list(&a.hamiltonians))?;
    let init = a
        .init
        .split(',')
        .map(|v| v.trim().parse::<f64>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| Failure::Usage(format!("--init: {e}")))?;
    let spec = FlowSpec { system: NambuSystem::new(hs)?, initial_state: init, t_end: a.t_end, step: a.step };
    let (trajectory, blew_up) = match integrate(&spec) {
        Ok(t) => (t, false),
        Err(IntegrationError::Spec(e)) => return Err(e.into()),
        Err(IntegrationError::NonFinite { partial }) => (partial, true),
    };
    let file = fs::File::create(&a.out).map_err(|e| Failure::Usage(format!("{}: {e}", a.out.display())))?;
    trajectory
        .write_csv(std::io::BufWriter::new(file))
        .map_err(|e| Failure::Usage(format!("{}: {e}", a.out.display())))?;
    let last = trajectory.last();
    println!("samples = {}", trajectory.samples.len());
    println!("t = {:.16e}", last.t);
    for (j, d) in trajectory.drift.iter().enumerate() {
        println!("drift I{} = {d:.16e}", j + 1);
    }
    if blew_up {
        eprintln!("error: state became non-finite after t = {:.16e}", last.t);
        return Err(Failure::Verification);
    }
    Ok(())
}
