//! Tree automata over infinite binary trees with relaxed acceptance
//! semantics: counting constraints on accepting or rejecting branches, and
//! topological largeness of the accepting branch set.
//!
//! Membership over regular trees and emptiness are decided by parity games.
//! Each relaxed semantics has both a dedicated acceptance game and a
//! construction of an equivalent classical parity automaton.

pub mod automaton;
pub mod colour;
pub mod constructions;
pub mod corpus;
pub mod deciders;
pub mod error;
pub mod fuzz;
pub mod games;
pub mod graph;
pub mod oracle;
pub mod random;
pub mod semantics;
pub mod text;
pub mod tree;

pub use automaton::{
    buchi_to_parity, cobuchi_to_parity, complete_with_sink, AutomatonShell, BuchiSpec,
    CoBuchiSpec, ParityTreeAutomaton, StateId, SymbolId, Transition,
};
pub use colour::{Colour, Player};
pub use error::{Error, Result};
pub use semantics::Semantics;
pub use text::{parse_automaton, parse_automaton_spec, parse_tree, serialize_automaton, serialize_tree};
pub use tree::{NodeId, RegularTree};
