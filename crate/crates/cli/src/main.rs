use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;

use charsym::FieldDescriptor;
use commands::Failure;

/// Symmetric matrices with a prescribed minimal polynomial in characteristic two.
#[derive(Parser, Debug)]
#[command(name = "charsym", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// gf2, gf(2^m)[:modulus-bits], f2(t) or gf(2^m)(t)
    #[arg(long, default_value = "gf2")]
    pub field: String,
    /// Emit JSON instead of text.
    #[arg(long)]
    pub json: bool,
}

#[derive(Args, Debug, Clone)]
pub struct Target {
    /// Monic polynomial in x, e.g. "(x^2+x+t)^3".
    #[arg(long)]
    pub poly: String,
    /// Factorization into pairwise coprime irreducible powers, e.g.
    /// "(x+1)^2*(x^2+t)". Required over function fields.
    #[arg(long)]
    pub factors: Option<String>,
    /// Seed for equal-degree splitting over finite fields.
    #[arg(long)]
    pub seed: Option<u64>,
}

#[derive(Args, Debug, Clone)]
pub struct Build {
    /// Reduce each unit block separately, the last together with the even block.
    #[arg(long = "paper-pairing")]
    pub per_block: bool,
    /// Use a unit form on the even block when it is a square with nonzero constant term.
    #[arg(long)]
    pub square_even_block: bool,
}

#[derive(ValueEnum, Debug, Clone, Copy)]
pub enum Mode {
    MinPoly,
    CharPoly,
    Eigen,
}

#[derive(ValueEnum, Debug, Clone, Copy)]
pub enum FormKind {
    /// k[X]/(π^m), π separable.
    SepPower,
    /// k[X]/(π(X^{2^n})^m), π separable.
    InsepPower,
    /// k[X]/((X − a)^m).
    SepLocal,
    /// k[X]/((X^{2^n} − a)^m), a not a square.
    InsepLocal,
    /// Hyperbolic form on k[X]/(g), g ∈ k[X²].
    Even,
    /// Unit form on k[X]/(h²), h(0) ≠ 0.
    Square,
    /// k[X]/(X).
    Point,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Decide whether f is the minimal polynomial of a symmetric matrix.
    Check {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        target: Target,
    },
    /// Build a symmetric matrix with minimal and characteristic polynomial f.
    Realize {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        target: Target,
        #[command(flatten)]
        build: Build,
    },
    /// Build a symmetric matrix having a root of the irreducible f as eigenvalue.
    Eigen {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        target: Target,
        #[command(flatten)]
        build: Build,
    },
    /// Check a matrix from a JSON file against f.
    Verify {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        poly: String,
        #[arg(long)]
        matrix: PathBuf,
        #[arg(long, value_enum, default_value = "min-poly")]
        mode: Mode,
    },
    /// Print the Gram matrix of a transfer form.
    Gram {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum)]
        form: FormKind,
        /// π for the power forms, g for even and square forms.
        #[arg(long)]
        poly: Option<String>,
        /// Parameter a of the local forms.
        #[arg(long)]
        param: Option<String>,
        #[arg(long, default_value_t = 1)]
        mult: u32,
        #[arg(long, default_value_t = 0)]
        depth: u32,
    },
    /// Orthonormalize a symmetric Gram matrix read from a JSON file.
    Reduce {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        matrix: PathBuf,
    },
}

impl Command {
    fn common(&self) -> &Common {
        match self {
            Command::Check { common, .. }
            | Command::Realize { common, .. }
            | Command::Eigen { common, .. }
            | Command::Verify { common, .. }
            | Command::Gram { common, .. }
            | Command::Reduce { common, .. } => common,
        }
    }
}

fn run(cli: &Cli) -> Result<String, Failure> {
    let descriptor: FieldDescriptor = cli
        .command
        .common()
        .field
        .parse()
        .map_err(|e: charsym::Error| Failure::Parse(anyhow::anyhow!(e)))?;
    match descriptor {
        FieldDescriptor::Binary(k) => commands::run(&k, &cli.command),
        FieldDescriptor::Function(k) => commands::run(&k, &cli.command),
    }
}

// a closed pipe is not an error worth a panic
fn emit(out: &str) {
    let _ = writeln!(std::io::stdout(), "{out}");
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 3 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(out) => {
            emit(&out);
            ExitCode::SUCCESS
        }
        Err(Failure::NotRealizable(out)) => {
            emit(&out);
            ExitCode::from(2)
        }
        Err(Failure::Rejected(out)) => {
            emit(&out);
            ExitCode::from(4)
        }
        Err(Failure::Parse(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(3)
        }
        Err(Failure::Invalid(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(4)
        }
    }
}
