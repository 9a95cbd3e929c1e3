//! Command-line front end for `cyclic-moduli`: a small quiver DSL, section
//! literals, and commands that print either text or canonical JSON.

pub mod parse;
pub mod run;

pub use parse::{parse_profile, parse_rep, parse_section, parse_spec, ParseError, ProfileArg, QuiverSpec, SectionLiteral};
pub use run::{configure_threads, run, CliError, Command, Options, Outcome};
