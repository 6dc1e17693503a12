//! Command-line front end for `malcev-core`.

pub mod app;
pub mod expr;
pub mod output;

pub use app::{run, Cli};
pub use expr::{parse, ParseError};
