//! Library behind the `cremona-lab` binary: parameter expressions, the
//! report format, the verification suite and the subcommands.

pub mod commands;
pub mod expr;
pub mod report;
pub mod suite;
