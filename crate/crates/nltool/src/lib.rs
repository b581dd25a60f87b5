//! Command-line front end for Boolean function nonlinearity: input parsing,
//! method dispatch, sweeps, and benchmarks. The binary in this crate wires
//! these pieces to a clap interface.

pub mod bench;
pub mod format;
pub mod report;
pub mod spec;
pub mod sweep;

pub use report::{run_method, Counters, Method, RunReport};
pub use spec::{format_anf, format_tt_hex, parse_anf, parse_tt_hex, FunctionSpec, ParseError};
