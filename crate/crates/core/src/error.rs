use thiserror::Error;

/// Errors raised while parsing, validating, or processing automata, trees and games.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("line {line}: unknown state `{name}`")]
    UnknownState { name: String, line: usize },

    #[error("line {line}: unknown symbol `{name}`")]
    UnknownSymbol { name: String, line: usize },

    #[error("line {line}: dangling reference to undeclared node `{name}`")]
    UnknownNode { name: String, line: usize },

    #[error("duplicate {kind} `{name}`")]
    Duplicate { kind: &'static str, name: String },

    #[error("invalid identifier `{0}` (identifiers must be non-empty and contain no whitespace, `:` or `#`)")]
    InvalidName(String),

    #[error("missing {0}")]
    Missing(&'static str),

    #[error("node `{0}` has no `edges:` line")]
    MissingEdges(String),

    #[error("{what} index {index} out of range")]
    IndexOutOfRange { what: &'static str, index: usize },

    #[error("automaton is incomplete: no transition for ({state}, {symbol})")]
    Incomplete { state: String, symbol: String },

    #[error("automaton is nondeterministic at ({state}, {symbol})")]
    Nondeterministic { state: String, symbol: String },

    #[error("tree label `{0}` is not in the automaton alphabet")]
    AlphabetMismatch(String),

    #[error("{0}")]
    InvalidGame(String),

    #[error("game has {vertices} vertices, brute-force bound is {bound}")]
    BoundExceeded { vertices: usize, bound: usize },

    #[error("flat colour {flat} at vertex {vertex} is below original colour {original}")]
    FlatBelowOriginal {
        vertex: usize,
        flat: u32,
        original: u32,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
