//! Library side of the `acyclo` command-line tool: input parsing, presets,
//! output rendering, and the paper-verification suite. The binary in
//! `main.rs` is a thin dispatcher over these.

pub mod input;
pub mod output;
pub mod parse;
pub mod presets;
pub mod verify;
