//! Small hand-checkable automata and trees.

use crate::automaton::ParityTreeAutomaton;
use crate::semantics::Semantics;
use crate::text::{parse_automaton, parse_tree};
use crate::tree::RegularTree;

pub const AUTOMATA: [(&str, &str); 5] = [
    ("A1", include_str!("../corpus/A1.aut")),
    ("A0", include_str!("../corpus/A0.aut")),
    ("AR", include_str!("../corpus/AR.aut")),
    ("ABinf", include_str!("../corpus/ABinf.aut")),
    ("Aseen", include_str!("../corpus/Aseen.aut")),
];

pub const TREES: [(&str, &str); 4] = [
    ("Ta", include_str!("../corpus/Ta.tree")),
    ("Tb", include_str!("../corpus/Tb.tree")),
    ("TL", include_str!("../corpus/TL.tree")),
    ("T00", include_str!("../corpus/T00.tree")),
];

/// The corpus automaton called `name`.
pub fn automaton(name: &str) -> ParityTreeAutomaton {
    let text = AUTOMATA
        .iter()
        .find(|(n, _)| *n == name)
        .unwrap_or_else(|| panic!("no corpus automaton {name}"))
        .1;
    parse_automaton(text).expect("corpus automaton parses")
}

/// The corpus tree called `name`.
pub fn tree(name: &str) -> RegularTree {
    let text = TREES
        .iter()
        .find(|(n, _)| *n == name)
        .unwrap_or_else(|| panic!("no corpus tree {name}"))
        .1;
    parse_tree(text).expect("corpus tree parses")
}

/// Expected membership per semantics, in the order of [`Semantics::ALL`].
pub const TABLE: [(&str, &str, [bool; 6]); 6] = [
    ("AR", "Ta", [true, true, true, true, true, true]),
    ("AR", "Tb", [false, false, false, false, false, false]),
    ("AR", "TL", [false, false, false, true, false, false]),
    ("ABinf", "TL", [false, false, true, true, true, true]),
    ("Aseen", "TL", [false, true, true, true, true, true]),
    ("AR", "T00", [false, false, false, true, true, false]),
];

/// Expected membership of one table row under `s`.
pub fn expected(row: &[bool; 6], s: Semantics) -> bool {
    row[Semantics::ALL.iter().position(|&x| x == s).unwrap()]
}
