use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use elchi_core::workbench::{self, emit, Format, Side, StateKind, Suite, SuiteConfig, Windows};
use elchi_core::{Error, Result};

/// Exact checks of the deformed Euclidean group E_l(2) and its free particle states.
#[derive(Parser, Debug)]
#[command(name = "elchi", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum FormatArg {
    Json,
    Csv,
    Text,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Json => Format::Json,
            FormatArg::Csv => Format::Csv,
            FormatArg::Text => Format::Text,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum SideArg {
    Lambda,
    Ell,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum KindArg {
    Plane,
    Angular,
}

impl From<KindArg> for StateKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Plane => StateKind::Plane,
            KindArg::Angular => StateKind::Angular,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run a verification suite (or `all`).
    Verify {
        suite: String,
        #[arg(long)]
        degree: Option<u32>,
        #[arg(long)]
        order: Option<u32>,
        #[arg(long)]
        r_max: Option<u32>,
        #[arg(long)]
        l_max: Option<u32>,
        /// Double one state coefficient, given as "m,n" (plane) or "l,r" (angular).
        #[arg(long, value_parser = parse_pair)]
        corrupt: Option<(u32, u32)>,
        #[arg(long, value_enum, default_value = "json")]
        format: FormatArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Apply lambda(u) or ell(u) to a function-algebra element.
    Act {
        #[arg(long, value_enum)]
        side: SideArg,
        #[arg(long)]
        element: String,
        #[arg(long)]
        on: String,
        #[arg(long, value_enum, default_value = "json")]
        format: FormatArg,
    },
    /// Evaluate the duality pairing <u, f>.
    Pair {
        #[arg(long)]
        u: String,
        #[arg(long)]
        f: String,
        #[arg(long, value_enum, default_value = "json")]
        format: FormatArg,
    },
    /// Print a truncated eigenstate in the chi^p chibar^q basis.
    State {
        #[arg(value_enum)]
        kind: KindArg,
        #[arg(long)]
        order: u32,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        r: i64,
        #[arg(long, value_enum, default_value = "json")]
        format: FormatArg,
    },
    /// Classical z -> 0 limit of a state, checked against its oracle.
    Limit {
        #[arg(value_enum)]
        kind: KindArg,
        #[arg(long, default_value_t = 8)]
        order: u32,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        r: i64,
        /// Top rho index of the angular state; defaults to `order`.
        #[arg(long)]
        l_max: Option<u32>,
        #[arg(long, value_enum, default_value = "json")]
        format: FormatArg,
    },
}

fn parse_pair(s: &str) -> std::result::Result<(u32, u32), String> {
    let (a, b) = s.split_once(',').ok_or("expected two comma-separated integers")?;
    let parse = |t: &str| t.trim().parse::<u32>().map_err(|e| format!("`{t}`: {e}"));
    Ok((parse(a)?, parse(b)?))
}

/// Output and exit status of a successful command.
fn execute(cmd: Command) -> Result<(String, u8)> {
    match cmd {
        Command::Verify { suite, degree, order, r_max, l_max, corrupt, format, out } => {
            let cfg = SuiteConfig {
                suite: Suite::from_str(&suite)?,
                windows: Windows { degree, order, r_max, l_max, corrupt },
                format: format.into(),
                out: out.clone(),
            };
            let outcome = workbench::run_suite(&cfg)?;
            let shown = if out.is_some() { String::new() } else { outcome.rendered };
            Ok((shown, outcome.exit_code as u8))
        }
        Command::Act { side, element, on, format } => {
            let side = match side {
                SideArg::Lambda => Side::Lambda,
                SideArg::Ell => Side::Ell,
            };
            Ok((emit::render_element(&workbench::act(side, &element, &on)?, format.into()), 0))
        }
        Command::Pair { u, f, format } => Ok((emit::render_scalar(&workbench::pair(&u, &f)?, format.into()), 0)),
        Command::State { kind, order, r, format } => {
            Ok((emit::render_element(&workbench::state(kind.into(), order, r), format.into()), 0))
        }
        Command::Limit { kind, order, r, l_max, format } => {
            if order == 0 {
                return Err(Error::InvalidArgument("--order must be positive".into()));
            }
            let (lim, rep) = workbench::limit(kind.into(), order, r, l_max.unwrap_or(order))?;
            let code = if rep.pass() { 0 } else { 1 };
            Ok((emit::render_limit(&lim, &rep, format.into()), code))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli.command) {
        Ok((text, code)) => {
            print!("{text}");
            ExitCode::from(code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
