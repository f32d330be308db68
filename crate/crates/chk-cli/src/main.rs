use clap::{Args, Parser, Subcommand};
use std::io::Write;
use std::process::ExitCode;

mod commands;
mod sweep;

use commands::{Failure, Outcome};

/// Exact checks for cyclic Cherednik algebras and cyclic quiver varieties.
#[derive(Parser)]
#[command(name = "chk", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Default)]
pub struct Common {
    /// Rank (number of vertices); inferred from --theta or --lambda when omitted.
    #[arg(long)]
    pub l: Option<usize>,
    /// Deformation parameter, comma separated rationals summing to 1.
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: Option<String>,
    /// Stability parameter, comma separated integers summing to 0.
    #[arg(long, allow_hyphen_values = true)]
    pub theta: Option<String>,
    #[arg(long, allow_negative_numbers = true)]
    pub m: Option<i64>,
    /// Bidegree cap `A,B`.
    #[arg(long)]
    pub cap: Option<String>,
    #[arg(long)]
    pub window: Option<usize>,
    #[arg(long)]
    pub seed: Option<u64>,
    /// Write the JSON report here instead of stdout.
    #[arg(long)]
    pub out: Option<std::path::PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Orders, η-sequence and alcove membership.
    Order(Common),
    /// Homomorphisms between standard modules.
    Homs(Common),
    /// Torus-fixed points and curves.
    FixedPoints(Common),
    /// Toric charts.
    Charts(Common),
    /// Global sections: g-basis and polytope counts.
    Sections(Common),
    /// Character identity for the tautological bundle twisted by O(m).
    AblVerify(Common),
    /// Shift-functor images of standard modules and the q-dimension identity.
    ShiftVerify(Common),
    /// Graded comparison of B·e_0T with semi-invariants.
    GrVerify(Common),
    /// Characteristic cycles of standard and simple modules.
    ChCycles(Common),
    /// All of the above over every alcove, with seeded random λ.
    Sweep(Common),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (common, result) = match cli.command {
        Command::Order(c) => (c.clone(), commands::order(&c)),
        Command::Homs(c) => (c.clone(), commands::homs(&c)),
        Command::FixedPoints(c) => (c.clone(), commands::fixed_points(&c)),
        Command::Charts(c) => (c.clone(), commands::charts(&c)),
        Command::Sections(c) => (c.clone(), commands::sections(&c)),
        Command::AblVerify(c) => (c.clone(), commands::abl_verify(&c)),
        Command::ShiftVerify(c) => (c.clone(), commands::shift_verify(&c)),
        Command::GrVerify(c) => (c.clone(), commands::gr_verify(&c)),
        Command::ChCycles(c) => (c.clone(), commands::ch_cycles(&c)),
        Command::Sweep(c) => (c.clone(), sweep::run(&c)),
    };
    let (report, code) = match result {
        Ok(Outcome { report, ok }) => (report, if ok { 0 } else { 1 }),
        Err(Failure::Regime(msg)) => (serde_json::json!({ "error": msg }), 2),
        Err(Failure::Io(msg)) => (serde_json::json!({ "error": msg }), 2),
    };
    let report = commands::with_schema(report);
    let text = serde_json::to_string(&report).expect("reports serialize");
    match &common.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, text + "\n") {
                eprintln!("cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => {
            // a closed pipe downstream is not an error of ours
            let _ = writeln!(std::io::stdout().lock(), "{text}");
        }
    }
    ExitCode::from(code)
}
