use std::fmt;

use thiserror::Error;

use crate::algebra::Kind;

/// A single failed constraint on a Kupisch series. Indices are 1-based vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    Empty,
    EntryTooSmall {
        index: usize,
        value: usize,
        min: usize,
    },
    /// `c_next >= c_index - 1` fails.
    Decrease {
        index: usize,
        next: usize,
        value: usize,
        next_value: usize,
    },
    LastNotOne {
        index: usize,
        value: usize,
    },
    /// Linear series only: `c_index <= N - index + 1` fails.
    RunsOffEnd {
        index: usize,
        value: usize,
        max: usize,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Violation::Empty => f.write_str("Kupisch series is empty"),
            Violation::EntryTooSmall { index, value, min } => {
                write!(f, "c_{index} = {value} < {min}")
            }
            Violation::Decrease {
                index,
                next,
                value,
                next_value,
            } => write!(f, "c_{next} = {next_value} < c_{index} - 1 = {}", value - 1),
            Violation::LastNotOne { index, value } => {
                write!(f, "linear series must end in 1, but c_{index} = {value}")
            }
            Violation::RunsOffEnd { index, value, max } => {
                write!(f, "c_{index} = {value} > N - {index} + 1 = {max}")
            }
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid {kind} Kupisch series: {}", join(.violations))]
    InvalidKupisch {
        kind: Kind,
        violations: Vec<Violation>,
    },
    #[error("invalid relation system: {0}")]
    InvalidRelations(String),
    #[error("M({top},{length}) is not a module over this algebra")]
    InvalidModule { top: usize, length: usize },
    #[error("operation requires a cyclic algebra")]
    NotCyclic,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid enumeration budget: {0}")]
    Budget(String),
}

fn join(violations: &[Violation]) -> String {
    violations
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join("; ")
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
