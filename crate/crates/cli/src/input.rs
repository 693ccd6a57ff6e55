use std::io::Read;
use std::path::Path;

use coxlink_core::fixtures;
use coxlink_core::graph::parse_graph;
use coxlink_core::numeric::parse_rational;
use coxlink_core::{BigRational, MixedSignGraph};

pub const EXIT_VIOLATION: u8 = 1;
pub const EXIT_INPUT: u8 = 2;
pub const EXIT_CONTRACT: u8 = 3;

#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub message: String,
    /// Report text still worth printing, e.g. a failing summary.
    pub stdout: Option<String>,
}

impl CliError {
    pub fn input(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_INPUT,
            message: message.into(),
            stdout: None,
        }
    }

    pub fn contract(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_CONTRACT,
            message: message.into(),
            stdout: None,
        }
    }

    pub fn violation(message: impl Into<String>, stdout: String) -> Self {
        Self {
            code: EXIT_VIOLATION,
            message: message.into(),
            stdout: Some(stdout),
        }
    }
}

/// `-` reads standard input; an existing path is read as a graph file;
/// otherwise the argument is looked up among the built-in examples.
pub fn load_graph(arg: &str) -> Result<MixedSignGraph, CliError> {
    let (text, origin) = if arg == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| CliError::input(format!("reading standard input: {e}")))?;
        (s, "<stdin>".to_string())
    } else if Path::new(arg).exists() {
        let s = std::fs::read_to_string(arg).map_err(|e| CliError::input(format!("{arg}: {e}")))?;
        (s, arg.to_string())
    } else if let Some(g) = fixtures::by_name(arg) {
        return Ok(g);
    } else {
        return Err(CliError::input(format!(
            "{arg}: no such file or example (examples: {})",
            fixtures::NAMES.join(", ")
        )));
    };
    parse_graph(&text).map_err(|e| CliError::input(format!("{origin}: {e}")))
}

pub fn parse_epsilon(s: &str) -> Result<BigRational, CliError> {
    let eps = parse_rational(s).map_err(|e| CliError::input(format!("--epsilon: {e}")))?;
    if eps <= BigRational::from_integer(0.into()) {
        return Err(CliError::contract("--epsilon must be positive"));
    }
    Ok(eps)
}

pub fn check_nmax(nmax: usize) -> Result<(), CliError> {
    if nmax < 2 {
        Err(CliError::contract(format!(
            "--nmax {nmax} out of range (need at least 2)"
        )))
    } else {
        Ok(())
    }
}
