//! Constructions of classical parity (or Büchi) tree automata that accept,
//! under the classical semantics, exactly the relaxed language of their
//! input.

mod acc_inf;
mod acc_unc;
mod large;
mod rej_count;
mod rej_fin;

pub use acc_inf::build_acc_inf;
pub use acc_unc::build_acc_unc;
pub use large::build_large;
pub use rej_count::build_rej_count;
pub use rej_fin::build_rej_fin;

use std::collections::{HashMap, HashSet};
use std::hash::Hash;

use serde::{Deserialize, Serialize};

use crate::automaton::{fresh_name_in, AutomatonShell, ParityTreeAutomaton, StateId, SymbolId, Transition};
use crate::colour::{self, Colour};
use crate::semantics::Semantics;

/// Sizes of a construction's input and output, and the bound it must meet.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructionReport {
    pub semantics: Semantics,
    pub input_states: usize,
    pub input_colours: usize,
    pub output_states: usize,
    pub output_colours: usize,
    pub bound_ok: bool,
    pub bound_expr: String,
}

/// Maximum output size allowed for a construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bound {
    pub states: usize,
    pub colours: usize,
}

/// The size bound of each construction, for an input with `n` states and
/// `d` distinct colours.
pub fn bound(s: Semantics, n: usize, d: usize) -> (Bound, String) {
    match s {
        Semantics::Classical => (Bound { states: n, colours: d }, format!("|Q| = {n} states, d = {d} colours")),
        Semantics::RejCount => (
            Bound {
                states: 2 * d * n,
                colours: d + 1,
            },
            format!("2·d·|Q| = {} states, d+1 = {} colours", 2 * d * n, d + 1),
        ),
        Semantics::RejFin => (
            Bound { states: 3 * n, colours: d },
            format!("3·|Q| = {} states, d = {d} colours", 3 * n),
        ),
        Semantics::AccInf => {
            let st = (d / 2 + 4) * n + 2;
            (
                Bound { states: st, colours: 2 },
                format!("(⌊d/2⌋+4)·|Q|+2 = {st} states, Büchi colours {{0,1}}"),
            )
        }
        Semantics::AccUnc => {
            let st = (4 * (d / 2 + 1) + 1) * n + 2;
            (
                Bound { states: st, colours: 2 },
                format!("(4·(⌊d/2⌋+1)+1)·|Q|+2 = {st} states, Büchi colours {{0,1}}"),
            )
        }
        Semantics::Large => (
            Bound {
                states: 3 * d * n,
                colours: d + 2,
            },
            format!("3·d·|Q| = {} states, d+2 = {} colours", 3 * d * n, d + 2),
        ),
    }
}

/// The automaton whose classical language is the `s`-language of `a`,
/// together with a size report. `Classical` returns `a` itself.
pub fn transform(a: &ParityTreeAutomaton, s: Semantics) -> (ParityTreeAutomaton, ConstructionReport) {
    let out = match s {
        Semantics::Classical => a.clone(),
        Semantics::RejFin => build_rej_fin(a),
        Semantics::RejCount => build_rej_count(a),
        Semantics::AccInf => build_acc_inf(a),
        Semantics::AccUnc => build_acc_unc(a),
        Semantics::Large => build_large(a),
    };
    let report = report(a, &out, s);
    (out, report)
}

pub fn report(input: &ParityTreeAutomaton, output: &ParityTreeAutomaton, s: Semantics) -> ConstructionReport {
    let d = input.distinct_colours().len();
    let (b, bound_expr) = bound(s, input.num_states(), d);
    let output_colours = output.distinct_colours();
    let buchi_ok = match s {
        Semantics::AccInf | Semantics::AccUnc => output_colours.iter().all(|c| c.0 <= 1),
        _ => true,
    };
    ConstructionReport {
        semantics: s,
        input_states: input.num_states(),
        input_colours: d,
        output_states: output.num_states(),
        output_colours: output_colours.len(),
        bound_ok: buchi_ok && output.num_states() <= b.states && output_colours.len() <= b.colours,
        bound_expr,
    }
}

/// Breadth-first construction of the reachable part of an automaton whose
/// states are keys of type `K`.
///
/// `step(key, a, out)` pushes the `(left, right)` key pairs of every
/// transition of `key` on symbol `a`; it must push at least one.
pub(crate) fn explore<K, N, C, S>(symbols: &[String], init: K, name: N, colour: C, mut step: S) -> ParityTreeAutomaton
where
    K: Hash + Eq + Clone,
    N: Fn(&K) -> String,
    C: Fn(&K) -> Colour,
    S: FnMut(&K, SymbolId, &mut Vec<(K, K)>),
{
    let mut index: HashMap<K, StateId> = HashMap::new();
    let mut keys: Vec<K> = Vec::new();
    let mut names: Vec<String> = Vec::new();
    let mut taken: HashSet<String> = HashSet::new();
    let mut colours: Vec<Colour> = Vec::new();
    let mut transitions: Vec<Transition> = Vec::new();

    let mut intern = |k: K, keys: &mut Vec<K>| -> StateId {
        if let Some(&id) = index.get(&k) {
            return id;
        }
        let id = keys.len();
        let n = fresh_name_in(&name(&k), &taken);
        taken.insert(n.clone());
        names.push(n);
        colours.push(colour(&k));
        index.insert(k.clone(), id);
        keys.push(k);
        id
    };

    let initial = intern(init, &mut keys);
    let mut buf = Vec::new();
    let mut head = 0;
    while head < keys.len() {
        let key = keys[head].clone();
        for a in 0..symbols.len() {
            buf.clear();
            step(&key, a, &mut buf);
            debug_assert!(!buf.is_empty(), "construction step without transitions");
            for (l, r) in buf.drain(..) {
                let l = intern(l, &mut keys);
                let r = intern(r, &mut keys);
                transitions.push(Transition::new(head, a, l, r));
            }
        }
        head += 1;
    }
    let shell = AutomatonShell::new(symbols.to_vec(), names, initial, transitions)
        .expect("constructed shell is well formed");
    ParityTreeAutomaton::new(shell, colours).expect("constructed automaton is complete")
}

/// A one-state automaton of colour `c` looping on every symbol.
pub(crate) fn constant_automaton(symbols: &[String], name: &str, c: Colour) -> ParityTreeAutomaton {
    explore(symbols, (), |_| name.to_string(), |_| c, |_, _, out| out.push(((), ())))
}

/// `E`, an even colour above every colour of `a`.
pub(crate) fn fresh_even(a: &ParityTreeAutomaton) -> Colour {
    colour::fresh_even_above(a.max_colour())
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    pub fn a1() -> ParityTreeAutomaton {
        ParityTreeAutomaton::from_names(&["a"], &[("q0", 0)], "q0", &[("q0", "a", "q0", "q0")]).unwrap()
    }

    pub fn ar() -> ParityTreeAutomaton {
        ParityTreeAutomaton::from_names(
            &["a", "b"],
            &[("p", 2), ("f", 1)],
            "p",
            &[("p", "a", "p", "p"), ("p", "b", "f", "f"), ("f", "a", "p", "p"), ("f", "b", "f", "f")],
        )
        .unwrap()
    }

    #[test]
    fn classical_is_identity() {
        let (out, rep) = transform(&ar(), Semantics::Classical);
        assert_eq!(out, ar());
        assert!(rep.bound_ok);
    }

    #[test]
    fn reports_on_ar_respect_bounds() {
        for s in Semantics::ALL {
            let (_, rep) = transform(&ar(), s);
            assert!(rep.bound_ok, "{s}: {rep:?}");
        }
        let (_, rej_fin) = transform(&ar(), Semantics::RejFin);
        assert!(rej_fin.output_states <= 6 && rej_fin.output_colours <= 2);
        let (_, large) = transform(&ar(), Semantics::Large);
        assert!(large.output_colours <= 4);
        let (_, rej_count) = transform(&ar(), Semantics::RejCount);
        assert!(rej_count.output_states <= 8 && rej_count.output_colours <= 3);
    }

    #[test]
    fn constant_automaton_is_complete() {
        let c = constant_automaton(&["a".into(), "b".into()], "all", Colour(0));
        assert_eq!(c.num_states(), 1);
        assert_eq!(c.transitions().len(), 2);
    }
}
