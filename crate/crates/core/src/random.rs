//! Random automata, trees and games for differential testing.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::automaton::{AutomatonShell, ParityTreeAutomaton, Transition};
use crate::colour::{Colour, Player};
use crate::games::{latch_reduce, LatchClass, ParityGame};
use crate::tree::RegularTree;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AutomatonParams {
    pub max_states: usize,
    /// Colours are drawn from `0..max_colours`, so at most this many are
    /// distinct.
    pub max_colours: u32,
    pub max_symbols: usize,
    pub deterministic: bool,
    /// Upper bound on transitions per `(state, symbol)`.
    pub max_branching: usize,
}

impl AutomatonParams {
    pub fn deterministic(max_states: usize, max_colours: u32) -> Self {
        AutomatonParams {
            max_states,
            max_colours,
            max_symbols: 2,
            deterministic: true,
            max_branching: 1,
        }
    }

    pub fn nondeterministic(max_states: usize, max_colours: u32) -> Self {
        AutomatonParams {
            max_states,
            max_colours,
            max_symbols: 2,
            deterministic: false,
            max_branching: 3,
        }
    }
}

pub fn symbol_names(n: usize) -> Vec<String> {
    (0..n).map(|i| ((b'a' + i as u8) as char).to_string()).collect()
}

/// A random complete automaton with exactly `states` states and `symbols`
/// symbols.
pub fn random_automaton_sized<R: Rng + ?Sized>(
    rng: &mut R,
    states: usize,
    symbols: usize,
    max_colours: u32,
    max_branching: usize,
) -> ParityTreeAutomaton {
    let names: Vec<String> = (0..states).map(|i| format!("q{i}")).collect();
    let colours: Vec<Colour> = (0..states).map(|_| Colour(rng.gen_range(0..max_colours))).collect();
    let mut transitions = Vec::new();
    for q in 0..states {
        for a in 0..symbols {
            let k = rng.gen_range(1..=max_branching);
            for _ in 0..k {
                transitions.push(Transition::new(q, a, rng.gen_range(0..states), rng.gen_range(0..states)));
            }
        }
    }
    let shell = AutomatonShell::new(symbol_names(symbols), names, 0, transitions).expect("random shell is valid");
    ParityTreeAutomaton::new(shell, colours).expect("random automaton is complete")
}

pub fn random_automaton<R: Rng + ?Sized>(rng: &mut R, p: &AutomatonParams) -> ParityTreeAutomaton {
    let states = rng.gen_range(1..=p.max_states);
    let symbols = rng.gen_range(1..=p.max_symbols);
    let branching = if p.deterministic { 1 } else { p.max_branching };
    random_automaton_sized(rng, states, symbols, p.max_colours, branching)
}

/// A random regular tree with at most `max_nodes` nodes over the first
/// `symbols` symbol names.
pub fn random_tree<R: Rng + ?Sized>(rng: &mut R, max_nodes: usize, symbols: usize) -> RegularTree {
    let n = rng.gen_range(1..=max_nodes);
    random_tree_sized(rng, n, symbols)
}

pub fn random_tree_sized<R: Rng + ?Sized>(rng: &mut R, n: usize, symbols: usize) -> RegularTree {
    let alphabet = symbol_names(symbols);
    let names = (0..n).map(|i| format!("n{i}")).collect();
    let labels = (0..n).map(|_| alphabet.choose(rng).unwrap().clone()).collect();
    let succ = (0..n).map(|_| [rng.gen_range(0..n), rng.gen_range(0..n)]).collect();
    RegularTree::new(names, labels, succ, 0).expect("random tree is valid")
}

/// A random game with `1..=max_vertices` vertices, colours in
/// `0..max_colour` and out-degree `1..=max_degree`.
pub fn random_game<R: Rng + ?Sized>(rng: &mut R, max_vertices: usize, max_colour: u32, max_degree: usize) -> ParityGame {
    let n = rng.gen_range(1..=max_vertices);
    let owner = (0..n)
        .map(|_| if rng.gen_bool(0.5) { Player::Eloise } else { Player::Abelard })
        .collect();
    let colour = (0..n).map(|_| Colour(rng.gen_range(0..max_colour))).collect();
    let mut edges = Vec::new();
    for u in 0..n {
        for _ in 0..rng.gen_range(1..=max_degree) {
            edges.push((u, rng.gen_range(0..n)));
        }
    }
    ParityGame::from_parts(owner, colour, &edges, 0).expect("random game has no dead ends")
}

/// A random game with a latch classification whose flat colours lie above
/// every original colour.
pub fn random_latch_instance<R: Rng + ?Sized>(rng: &mut R, max_vertices: usize) -> (ParityGame, Vec<LatchClass>) {
    let g = random_game(rng, max_vertices, 6, 3);
    let e = crate::colour::fresh_even_above(g.max_colour());
    let cls = (0..g.num_vertices())
        .map(|_| match rng.gen_range(0..3) {
            0 => LatchClass::Track,
            1 => LatchClass::Flat(e),
            _ => LatchClass::Flat(Colour(e.0 + 1)),
        })
        .collect();
    (g, cls)
}

/// A random lasso `prefix · cycle^ω` through `g` from its start vertex:
/// a walk that stops at the first repeated vertex-and-position pair.
pub fn random_lasso<R: Rng + ?Sized>(rng: &mut R, g: &ParityGame, max_len: usize) -> (Vec<usize>, Vec<usize>) {
    // pick a walk of random length, then close it at a vertex repeated on it
    let mut walk = vec![g.start()];
    let len = rng.gen_range(1..=max_len);
    loop {
        let v = *walk.last().unwrap();
        let w = *g.successors(v).choose(rng).unwrap();
        if walk.len() >= len {
            if let Some(i) = walk.iter().position(|&x| x == w) {
                return (walk[..i].to_vec(), walk[i..].to_vec());
            }
        }
        walk.push(w);
    }
}

/// Checks the latch contract on one lasso: the output play, started at
/// the output start vertex and driven by the input lasso, has the expected
/// least recurring colour. Returns `(expected, actual)`.
pub fn latch_lasso_check(g: &ParityGame, cls: &[LatchClass], prefix: &[usize], cycle: &[usize]) -> (Colour, Colour) {
    let red = latch_reduce(g, cls).expect("valid latch instance");
    let out = &red.game;
    let lookup = |v: usize, m: Colour| {
        red.origin
            .iter()
            .position(|&o| o == (v, m))
            .expect("reachable latch state")
    };
    let expected = if cycle.iter().any(|&v| cls[v] == LatchClass::Track) {
        cycle.iter().map(|&v| g.original_colour(v)).min().unwrap()
    } else {
        cycle
            .iter()
            .map(|&v| match cls[v] {
                LatchClass::Flat(c) => c,
                LatchClass::Track => unreachable!(),
            })
            .min()
            .unwrap()
    };
    // Walk the output play until the output vertex at the start of a cycle
    // iteration repeats; the colours after the first occurrence are the
    // recurring ones.
    let mut cur = lookup(g.start(), g.original_colour(g.start()));
    let step = |cur: usize, to: usize| -> usize {
        let (v, m) = red.origin[cur];
        let m2 = crate::games::next_tracker(g, cls, v, m, to);
        let next = lookup(to, m2);
        debug_assert!(out.has_edge(cur, next));
        next
    };
    let path: Vec<usize> = prefix.iter().chain(cycle).copied().collect();
    for &v in &path[1..] {
        cur = step(cur, v);
    }
    // cur is now the output vertex at cycle's last input vertex; continue
    let mut starts: Vec<usize> = Vec::new();
    let mut colours_per_iteration: Vec<Vec<Colour>> = Vec::new();
    loop {
        // one iteration: move to cycle[0], then through cycle[1..]
        let mut it_colours = Vec::with_capacity(cycle.len());
        cur = step(cur, cycle[0]);
        let it_start = cur;
        if let Some(i) = starts.iter().position(|&s| s == it_start) {
            let actual = colours_per_iteration[i..].iter().flatten().copied().min().unwrap();
            return (expected, actual);
        }
        it_colours.push(out.colour(cur));
        for &v in &cycle[1..] {
            cur = step(cur, v);
            it_colours.push(out.colour(cur));
        }
        starts.push(it_start);
        colours_per_iteration.push(it_colours);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn generators_produce_valid_objects() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let a = random_automaton(&mut rng, &AutomatonParams::deterministic(3, 4));
            assert!(a.is_deterministic());
            let t = random_tree(&mut rng, 4, a.num_symbols());
            assert!(t.symbol_ids(&a).is_ok());
        }
    }

    #[test]
    fn lassos_close() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..50 {
            let (g, cls) = random_latch_instance(&mut rng, 6);
            let (prefix, cycle) = random_lasso(&mut rng, &g, 10);
            assert!(!cycle.is_empty());
            assert!(g.has_edge(*cycle.last().unwrap(), cycle[0]));
            let (e, a) = latch_lasso_check(&g, &cls, &prefix, &cycle);
            assert_eq!(e, a);
        }
    }
}
