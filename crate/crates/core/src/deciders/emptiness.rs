use std::collections::HashMap;

use crate::automaton::{ParityTreeAutomaton, StateId};
use crate::colour::{self, Player};
use crate::constructions::transform;
use crate::games::{solve_parity, GameBuilder, ParityGame, Solution};
use crate::semantics::Semantics;
use crate::tree::RegularTree;

/// The emptiness game of `a`: Eloise vertex `q` (colour `Col(q)`) picks a
/// symbol and a transition, i.e. a pair `(q0, q1)`; Abelard picks one of
/// the two. Vertices `0..|Q|` are the states, in order; pair vertices
/// follow. Eloise wins from `q_ini` iff `L(a)` is non-empty.
pub fn build_emptiness_game(a: &ParityTreeAutomaton) -> ParityGame {
    pair_game(a).0
}

fn pair_game(a: &ParityTreeAutomaton) -> (ParityGame, Vec<(StateId, StateId)>) {
    let n = a.num_states();
    let neutral = colour::even_at_least(a.max_colour());
    let mut b = GameBuilder::new();
    for q in 0..n {
        b.add_vertex(Player::Eloise, a.colour(q));
    }
    let mut pairs: HashMap<(StateId, StateId), usize> = HashMap::new();
    let mut pair_list = Vec::new();
    for t in a.transitions() {
        let id = *pairs.entry((t.left, t.right)).or_insert_with(|| {
            pair_list.push((t.left, t.right));
            b.add_vertex(Player::Abelard, neutral)
        });
        b.add_edge(t.state, id);
    }
    for (k, &(l, r)) in pair_list.iter().enumerate() {
        b.add_edge(n + k, l);
        b.add_edge(n + k, r);
    }
    let g = b.build(a.initial()).expect("complete automaton gives a game without dead ends");
    (g, pair_list)
}

/// Whether `L_s(a)` is empty.
pub fn emptiness(a: &ParityTreeAutomaton, s: Semantics) -> bool {
    let (out, _) = transform(a, s);
    let g = build_emptiness_game(&out);
    solve_parity(&g).winner(g.start()) == Player::Abelard
}

/// A regular tree in a non-empty language, read off Eloise's winning
/// strategy in the emptiness game of the transformed automaton.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub tree: RegularTree,
    /// For each tree node, in order: `(state of the transformed automaton,
    /// symbol, left state, right state)`.
    pub strategy: Vec<(String, String, String, String)>,
}

/// A witness tree for `L_s(a)`, or `None` if the language is empty. The
/// tree has one node per state of the transformed automaton visited by
/// Eloise's strategy, so at most as many nodes as that automaton has
/// states.
pub fn extract_witness_tree(a: &ParityTreeAutomaton, s: Semantics) -> Option<Witness> {
    let (out, _) = transform(a, s);
    let (g, pairs) = pair_game(&out);
    let sol: Solution = solve_parity(&g);
    if sol.winner(g.start()) != Player::Eloise {
        return None;
    }
    let n = out.num_states();
    let strat = sol.strategy(Player::Eloise);

    let mut node_of: Vec<Option<usize>> = vec![None; n];
    let mut order: Vec<StateId> = vec![out.initial()];
    node_of[out.initial()] = Some(0);
    let mut head = 0;
    while head < order.len() {
        let q = order[head];
        head += 1;
        let pair = strat.get(q).expect("winning Eloise vertex has a move") - n;
        let (l, r) = pairs[pair];
        for c in [l, r] {
            if node_of[c].is_none() {
                node_of[c] = Some(order.len());
                order.push(c);
            }
        }
    }

    let mut names = Vec::with_capacity(order.len());
    let mut labels = Vec::with_capacity(order.len());
    let mut succ = Vec::with_capacity(order.len());
    let mut strategy = Vec::with_capacity(order.len());
    for (k, &q) in order.iter().enumerate() {
        let (l, r) = pairs[strat.get(q).expect("strategy defined") - n];
        let symbol = out
            .transitions()
            .iter()
            .filter(|t| t.state == q && t.left == l && t.right == r)
            .map(|t| out.symbol_name(t.symbol))
            .min()
            .expect("strategy move comes from a transition");
        names.push(format!("n{k}"));
        labels.push(symbol.to_string());
        succ.push([node_of[l].unwrap(), node_of[r].unwrap()]);
        strategy.push((
            out.state_name(q).to_string(),
            symbol.to_string(),
            out.state_name(l).to_string(),
            out.state_name(r).to_string(),
        ));
    }
    let tree = RegularTree::new(names, labels, succ, 0).expect("witness nodes are well formed");
    Some(Witness { tree, strategy })
}
