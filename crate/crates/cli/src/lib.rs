//! File format, reports and subcommands for the `linesplit` binary.

pub mod builtin;
pub mod commands;
pub mod dot;
pub mod error;
pub mod format;
pub mod report;
pub mod svg;

pub use commands::{
    cmd_analyze, cmd_examples, cmd_fan, cmd_gpp, cmd_oka, cmd_render, cmd_resonance, load,
    ExamplesAction, Outcome, OutputFormat,
};
pub use error::{CliError, Result};
pub use format::{parse, ParsedArrangement};
pub use report::Report;
