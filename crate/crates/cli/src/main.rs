use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use hgl::commands::{run, Command, Options};
use hgl::CliError;
use hopf_galois::exactla::enumerate::DEFAULT_CAP;

/// Galois connections between subalgebras of comodule algebras and
/// generalised quotients of finite-dimensional Hopf algebras.
#[derive(Debug, Parser)]
#[command(name = "hgl", version)]
struct Cli {
    command: Command,
    /// A Hopf file, or a comodule file with a `hopf` key.
    file: PathBuf,
    /// Subspace file with the ideal I of Q = H/I.
    #[arg(long)]
    ideal: Option<PathBuf>,
    /// Subspace file with a subalgebra.
    #[arg(long)]
    subalgebra: Option<PathBuf>,
    /// Use H coacting on itself, ignoring any coaction in the file.
    #[arg(long)]
    regular: bool,
    /// Algebra file for B; use A = B ⊗ H.
    #[arg(long, value_name = "ALGEBRA")]
    cleft: Option<PathBuf>,
    /// Largest dimension to enumerate subspaces of.
    #[arg(long, default_value_t = DEFAULT_CAP)]
    cap: usize,
    /// Use the coopposite Hopf algebra; comodule files are read as left coactions.
    #[arg(long)]
    mirror: bool,
    /// Emit a Hasse diagram in DOT.
    #[arg(long)]
    dot: bool,
    /// Accepted for symmetry with `quotients`; enumeration is the only mode.
    #[arg(long)]
    enumerate: bool,
    /// Worker threads for enumeration.
    #[arg(long)]
    jobs: Option<usize>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let opts = Options {
        ideal: cli.ideal,
        subalgebra: cli.subalgebra,
        regular: cli.regular,
        cleft: cli.cleft,
        cap: cli.cap,
        mirror: cli.mirror,
        dot: cli.dot,
    };
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = cli.jobs {
        builder = builder.num_threads(n);
    }
    let pool = match builder.build() {
        Ok(p) => p,
        Err(e) => {
            eprintln!("hgl: {e}");
            return ExitCode::from(2);
        }
    };
    match pool.install(|| run(cli.command, &cli.file, &opts)) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(out.text.as_bytes());
            ExitCode::from(out.status as u8)
        }
        Err(e) => report(&e),
    }
}

fn report(e: &CliError) -> ExitCode {
    eprintln!("hgl: {e}");
    ExitCode::from(e.exit_code() as u8)
}
