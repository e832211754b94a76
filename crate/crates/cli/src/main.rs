use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use linesplit_cli::commands::EXIT_ERROR;
use linesplit_cli::format::parse_rational;
use linesplit_cli::svg::Window;
use linesplit_cli::{
    cmd_analyze, cmd_examples, cmd_fan, cmd_gpp, cmd_oka, cmd_render, cmd_resonance, CliError,
    ExamplesAction, Outcome, OutputFormat,
};

/// Decide whether a complex line arrangement can split as a product.
///
/// Inputs are arrangement files or `builtin:NAME` (see `linesplit examples list`).
#[derive(Parser)]
#[command(name = "linesplit", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Full report; exit 0 = ProductPossible, 1 = NotAProduct, 2 = error
    Analyze {
        path: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Smallest multiplicity listed under `points`
        #[arg(long = "min-mult", default_value_t = 2)]
        min_mult: usize,
    },
    /// Search for a decone with a general position partition
    Gpp { path: String },
    /// Local resonance components and the span-disjoint bipartition search
    Resonance { path: String },
    /// Graph of Fan type
    Fan {
        path: String,
        /// Emit Graphviz DOT
        #[arg(long)]
        dot: bool,
        /// List up to N Fan graphs
        #[arg(long, value_name = "N")]
        enumerate: Option<usize>,
    },
    /// Check that two affine arrangements meet in distinct double points
    Oka { path1: String, path2: String },
    /// Draw the real part as SVG
    Render {
        path: String,
        #[arg(short = 'o', value_name = "OUT")]
        output: Option<PathBuf>,
        #[arg(
            long,
            num_args = 4,
            value_names = ["X0", "Y0", "X1", "Y1"],
            allow_hyphen_values = true,
            default_values = ["-3", "-3", "3", "3"]
        )]
        window: Vec<String>,
        /// Line sent to infinity (projective input)
        #[arg(long, value_name = "LABEL")]
        infinity: Option<String>,
    },
    /// Builtin examples
    Examples {
        #[command(subcommand)]
        action: ExamplesCommand,
    },
}

#[derive(Subcommand)]
enum ExamplesCommand {
    List,
    Emit { name: String },
}

fn window(values: &[String]) -> Result<Window, CliError> {
    let parsed: Vec<_> = values
        .iter()
        .map(|v| {
            parse_rational(v).ok_or_else(|| CliError::Usage(format!("`{v}` is not a rational")))
        })
        .collect::<Result<_, _>>()?;
    let [x0, y0, x1, y1]: [_; 4] = parsed.try_into().expect("clap enforces four values");
    Window::new(x0, y0, x1, y1)
}

fn run(cli: Cli) -> Result<Outcome, CliError> {
    match cli.command {
        Command::Analyze {
            path,
            format,
            min_mult,
        } => {
            let format = match format {
                Format::Text => OutputFormat::Text,
                Format::Json => OutputFormat::Json,
            };
            cmd_analyze(&path, format, min_mult)
        }
        Command::Gpp { path } => cmd_gpp(&path),
        Command::Resonance { path } => cmd_resonance(&path),
        Command::Fan {
            path,
            dot,
            enumerate,
        } => cmd_fan(&path, dot, enumerate),
        Command::Oka { path1, path2 } => cmd_oka(&path1, &path2),
        Command::Render {
            path,
            output,
            window: w,
            infinity,
        } => cmd_render(&path, output.as_deref(), window(&w)?, infinity.as_deref()),
        Command::Examples { action } => cmd_examples(match &action {
            ExamplesCommand::List => ExamplesAction::List,
            ExamplesCommand::Emit { name } => ExamplesAction::Emit(name),
        }),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { 0 };
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };
    match run(cli) {
        Ok(outcome) => {
            print!("{}", outcome.stdout);
            ExitCode::from(outcome.exit_code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_ERROR as u8)
        }
    }
}
