use alloc::string::String;
use core::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Havel-Hakimi was asked to realize a non-graphical sequence.
    NotGraphical,
    MalformedGraph6(&'static str),
    OrderTooLarge {
        order: usize,
    },
    InvalidEdge {
        u: usize,
        v: usize,
    },
    EmptySequence,
    ParseSequence(String),
    ApexPreconditionViolated,
    ParamOutOfRange(String),
    InvalidPlacement(String),
    RecipeNotApplicable(String),
    /// A construction produced graphs that fail their own postcondition.
    ConstructionFailed(String),
    UnknownFamily(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotGraphical => write!(f, "sequence is not graphical"),
            Error::MalformedGraph6(why) => write!(f, "malformed graph6: {why}"),
            Error::OrderTooLarge { order } => {
                write!(f, "graph order {order} exceeds the supported maximum of {}", crate::graph::MAX_ORDER)
            }
            Error::InvalidEdge { u, v } => write!(f, "invalid edge ({u}, {v})"),
            Error::EmptySequence => write!(f, "degree sequence must have at least one term"),
            Error::ParseSequence(msg) => write!(f, "cannot parse degree sequence: {msg}"),
            Error::ApexPreconditionViolated => {
                write!(f, "apex enumeration needs a largest degree equal to p-2")
            }
            Error::ParamOutOfRange(msg) => write!(f, "parameter out of range: {msg}"),
            Error::InvalidPlacement(msg) => write!(f, "invalid placement: {msg}"),
            Error::RecipeNotApplicable(msg) => write!(f, "recipe not applicable: {msg}"),
            Error::ConstructionFailed(msg) => write!(f, "construction failed: {msg}"),
            Error::UnknownFamily(name) => write!(f, "unknown family `{name}`"),
        }
    }
}

impl core::error::Error for Error {}
