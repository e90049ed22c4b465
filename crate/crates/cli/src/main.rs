use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use quartics_cli::commands::{self, CliError, Outcome, DEFAULT_DELETION};
use quartics_cli::{
    find_check, registry, render_summary, run_all, run_selected, FieldMode, Format, RunConfig, Summary,
};

/// Exact audit of plane quartics, their Hessians, bitangents and free line
/// arrangements.
///
/// Curves and lines are read from files in the input grammar or named by
/// fixture: c48, c96, c168, c24a, c16delta, c9, dual12, bitangents28.
#[derive(Parser)]
#[command(name = "quartics", version)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Coefficient arithmetic for Hilbert-function ranks.
    #[arg(long, value_enum, default_value_t = FieldMode::Auto, global = true)]
    field_mode: FieldMode,
    /// Bit size of the primes used in modular mode.
    #[arg(long, default_value_t = 24, global = true)]
    prime_bits: u32,
    #[arg(long, default_value_t = 7, global = true)]
    seed: u64,
    /// Budget for the radical-membership stage of thm23.
    #[arg(long, default_value_t = 1800, global = true)]
    budget_secs: u64,
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Checks run concurrently by check-all.
    #[arg(long, default_value_t = 1, global = true)]
    jobs: usize,
    /// Equal consecutive Hilbert values required for stabilization.
    #[arg(long, global = true)]
    window: Option<usize>,
    /// First degree examined when stabilizing a Hilbert function.
    #[arg(long, global = true)]
    start_degree: Option<u32>,
}

#[derive(Subcommand)]
enum Command {
    /// Hessian determinant of a curve, or `generic` for the invariant quartic.
    Hessian { curve: String },
    /// Degree, reducedness, invariance and freeness data of a curve.
    Invariants { curve: String },
    /// Tjurina number, or the degree of the scheme of higher partials.
    Tjurina {
        curve: String,
        #[arg(long, default_value_t = 1)]
        order: u32,
    },
    /// Minimal degree of a Jacobian syzygy and the syzygy dimensions.
    Mdr {
        curve: String,
        #[arg(long)]
        table: Option<u32>,
    },
    /// Freeness test from mdr and the Tjurina number.
    Freeness { curve: String },
    /// Multiple points of a line arrangement.
    Combinatorics { lines: String },
    /// Contact of each line with a quartic.
    Tangency { curve: String, lines: String },
    /// Flexes and hyperflexes of a smooth quartic.
    Flexes { curve: String },
    /// Whether a degree d(d-1) curve vanishes on the gradient image.
    DualCheck { curve: String, dual: String },
    /// Singularity profiles of a quartic plus lines with given total tau.
    Diophantine {
        #[arg(long = "tau", required = true)]
        taus: Vec<u32>,
        #[arg(long, default_value_t = 4)]
        lines: u32,
        #[arg(long, default_value_t = 4)]
        quartic_degree: u32,
        #[arg(long, default_value_t = 4)]
        hyperflex_lines: u32,
    },
    /// Classification of invariant quartics with Hessian x^2 y^2 z^2.
    Thm23,
    /// Freeness after deleting each selected line in turn.
    DeletionStudy {
        #[arg(long, default_value = DEFAULT_DELETION.0)]
        curve: String,
        #[arg(long, default_value = DEFAULT_DELETION.1)]
        lines: String,
        /// One-based labels of the lines to use.
        #[arg(long, value_delimiter = ',', default_values_t = DEFAULT_DELETION.2)]
        select: Vec<usize>,
    },
    /// Run one named check.
    Check {
        name: Option<String>,
        /// List the registered checks.
        #[arg(long)]
        list: bool,
    },
    /// Run every registered check.
    CheckAll,
}

fn config(g: &Global) -> RunConfig {
    let mut c = RunConfig {
        field_mode: g.field_mode,
        prime_bits: g.prime_bits,
        seed: g.seed,
        budget_secs: g.budget_secs,
        format: g.format,
        jobs: g.jobs,
        ..RunConfig::default()
    };
    if let Some(w) = g.window {
        c.policy.window = w;
    }
    c.policy.start = g.start_degree;
    c
}

fn print(text: &str) {
    let _ = writeln!(std::io::stdout().lock(), "{text}");
}

fn emit_summary(s: &Summary, format: Format) -> ExitCode {
    match format {
        Format::Text => print(&render_summary(s)),
        Format::Json => print(&serde_json::to_string_pretty(s).expect("serializable")),
    }
    if s.all_passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn emit(outcome: Result<Outcome, CliError>, format: Format) -> ExitCode {
    match outcome {
        Ok(o) => {
            match format {
                Format::Text => print(&o.to_text()),
                Format::Json => print(&serde_json::to_string_pretty(&o.to_json()).expect("serializable")),
            }
            if o.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(CliError::Usage(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(CliError::Failed(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cfg = config(&cli.global);
    let format = cfg.format;
    let outcome = match cli.command {
        Command::Hessian { curve } => commands::hessian(&curve),
        Command::Invariants { curve } => commands::invariants(&curve, &cfg),
        Command::Tjurina { curve, order } => commands::tjurina(&curve, order, &cfg),
        Command::Mdr { curve, table } => commands::mdr_command(&curve, table, &cfg),
        Command::Freeness { curve } => commands::freeness(&curve, &cfg),
        Command::Combinatorics { lines } => commands::combinatorics(&lines),
        Command::Tangency { curve, lines } => commands::tangency(&curve, &lines),
        Command::Flexes { curve } => commands::flexes(&curve),
        Command::DualCheck { curve, dual } => commands::dual_check(&curve, &dual),
        Command::Diophantine { taus, lines, quartic_degree, hyperflex_lines } => {
            Ok(commands::diophantine(&taus, lines, quartic_degree, hyperflex_lines))
        }
        Command::Thm23 => Ok(commands::thm23(&cfg)),
        Command::DeletionStudy { curve, lines, select } => {
            commands::deletion_study_command(&curve, &lines, &select, &cfg)
        }
        Command::Check { list: true, .. } => {
            for c in registry() {
                print(&format!("{:<18}{:>3}  {}", c.name, c.criterion, c.summary));
            }
            return ExitCode::SUCCESS;
        }
        Command::Check { name: None, .. } => Err(CliError::Usage("name a check, or pass --list".into())),
        Command::Check { name: Some(name), .. } => match find_check(&name) {
            Some(check) => {
                let i = registry().iter().position(|c| c.name == check.name).expect("registered");
                return emit_summary(&run_selected(&registry()[i..=i], &cfg), format);
            }
            None => Err(CliError::Usage(quartics_cli::run_check(&name, &cfg).err().unwrap_or_default())),
        },
        Command::CheckAll => return emit_summary(&run_all(&cfg), format),
    };
    emit(outcome, format)
}
