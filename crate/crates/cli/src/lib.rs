//! Library half of the `lsfan` command-line tool: argument resolution, the
//! JSON/DOT/CSV formats, and the built-in verification suite. The binary in
//! `main.rs` is a thin dispatcher over these modules.

pub mod error;
pub mod formats;
pub mod job;
pub mod verify;

pub use error::CliError;
