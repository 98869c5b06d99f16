//! Command-line frontend: argument parsing, dispatch, and the stable text,
//! JSON, and CSV output formats. The heavy lifting lives in `evsym-core`;
//! this crate only shapes inputs and outputs, which keeps every renderer
//! testable in-process.

pub mod app;
pub mod families;
pub mod payload;
pub mod render;

pub use app::{exit_code_for, run, Cli, CmdOutput, Command, Format, Method};
