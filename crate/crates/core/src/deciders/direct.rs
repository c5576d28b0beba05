//! Acceptance games over the product of an automaton with a regular tree.
//!
//! Main vertices `(q, n, mode)` belong to Eloise, who picks a transition
//! for the label of `n`; auxiliary vertices carry the chosen transition and
//! the per-semantics decorations. Only the part reachable from
//! `(q_ini, root, initial mode)` is built.

use crate::automaton::{ParityTreeAutomaton, StateId, SymbolId, Transition};
use crate::colour::{self, Colour, Player};
use crate::deciders::{AcceptanceGame, GameVertex, Mode, VertexKind};
use crate::error::Result;
use crate::games::{latch_reduce, GameBuilder, LatchClass, VertexId};
use crate::semantics::Semantics;
use crate::tree::{NodeId, RegularTree};

fn mode_slot(m: Mode) -> usize {
    match m {
        Mode::Plain | Mode::Wait | Mode::Star => 0,
        Mode::Path | Mode::Circle => 1,
        Mode::Check | Mode::Square => 2,
    }
}

struct Arena<'a, F> {
    a: &'a ParityTreeAutomaton,
    t: &'a RegularTree,
    labels: Vec<SymbolId>,
    index: Vec<usize>,
    b: GameBuilder,
    kinds: Vec<VertexKind>,
    class: Vec<LatchClass>,
    todo: Vec<VertexId>,
    /// Colour and latch class of a main vertex.
    main_style: F,
}

impl<'a, F: Fn(StateId, Mode) -> (Colour, LatchClass)> Arena<'a, F> {
    fn new(a: &'a ParityTreeAutomaton, t: &'a RegularTree, main_style: F) -> Result<Self> {
        let labels = t.symbol_ids(a)?;
        Ok(Arena {
            a,
            t,
            labels,
            index: vec![usize::MAX; a.num_states() * t.num_nodes() * 3],
            b: GameBuilder::new(),
            kinds: Vec::new(),
            class: Vec::new(),
            todo: Vec::new(),
            main_style,
        })
    }

    fn main(&mut self, state: StateId, node: NodeId, mode: Mode) -> VertexId {
        let key = (state * self.t.num_nodes() + node) * 3 + mode_slot(mode);
        if self.index[key] == usize::MAX {
            let (c, cls) = (self.main_style)(state, mode);
            let id = self.b.add_vertex_with_original(Player::Eloise, c, self.a.colour(state));
            self.kinds.push(VertexKind::Main { state, node, mode });
            self.class.push(cls);
            self.index[key] = id;
            self.todo.push(id);
        }
        self.index[key]
    }

    /// The main vertex of the `dir`-child under transition `t`.
    fn child(&mut self, t: &Transition, node: NodeId, dir: usize, mode: Mode) -> VertexId {
        let n = self.t.succ(node, dir);
        self.main(t.child(dir), n, mode)
    }

    fn aux(&mut self, kind: VertexKind, owner: Player, colour: Colour, original: Colour, cls: LatchClass) -> VertexId {
        let id = self.b.add_vertex_with_original(owner, colour, original);
        self.kinds.push(kind);
        self.class.push(cls);
        id
    }

    fn edge(&mut self, u: VertexId, v: VertexId) {
        self.b.add_edge(u, v);
    }

    /// Runs `expand` on every main vertex until no new one appears.
    fn explore(&mut self, start: (StateId, Mode), mut expand: impl FnMut(&mut Self, VertexId, StateId, NodeId, Mode)) {
        let root = self.t.root();
        self.main(start.0, root, start.1);
        while let Some(v) = self.todo.pop() {
            if let VertexKind::Main { state, node, mode } = self.kinds[v] {
                expand(self, v, state, node, mode);
            }
        }
    }

    fn transitions(&self, q: StateId, n: NodeId) -> Vec<Transition> {
        self.a.transitions_from(q, self.labels[n]).to_vec()
    }

    fn finish(self, latch: bool) -> Result<AcceptanceGame> {
        let game = self.b.build(0)?;
        if !latch {
            let vertices = self.kinds.into_iter().map(|kind| GameVertex { kind, tracked: None }).collect();
            return Ok(AcceptanceGame { game, vertices });
        }
        let reduced = latch_reduce(&game, &self.class)?;
        let vertices = reduced
            .origin
            .iter()
            .map(|&(v, m)| GameVertex {
                kind: self.kinds[v],
                tracked: Some(m),
            })
            .collect();
        Ok(AcceptanceGame {
            game: reduced.game,
            vertices,
        })
    }
}

fn transition_kind(t: &Transition, node: NodeId) -> VertexKind {
    VertexKind::Transition {
        state: t.state,
        node,
        left: t.left,
        right: t.right,
        modes: None,
        direction: None,
        marked: None,
    }
}

/// The classical acceptance game: Eloise picks transitions, Abelard
/// directions, main vertices carry the state colours.
pub fn build_acceptance_game(a: &ParityTreeAutomaton, t: &RegularTree) -> Result<AcceptanceGame> {
    let neutral = colour::even_at_least(a.max_colour());
    let mut ar = Arena::new(a, t, |q, _| (a.colour(q), LatchClass::Track))?;
    ar.explore((a.initial(), Mode::Plain), |ar, v, q, n, _| {
        for tr in ar.transitions(q, n) {
            let x = ar.aux(transition_kind(&tr, n), Player::Abelard, neutral, neutral, LatchClass::Track);
            ar.edge(v, x);
            for dir in 0..2 {
                let c = ar.child(&tr, n, dir, Mode::Plain);
                ar.edge(x, c);
            }
        }
    });
    ar.finish(false)
}

/// The acceptance game of semantics `s`, built directly on `a`.
pub fn build_direct_game(a: &ParityTreeAutomaton, t: &RegularTree, s: Semantics) -> Result<AcceptanceGame> {
    let maxcol = a.max_colour();
    let e = colour::fresh_even_above(maxcol);
    let e1 = Colour(e.0 + 1);
    match s {
        Semantics::Classical => build_acceptance_game(a, t),
        Semantics::RejCount => rej_count(a, t, maxcol, e),
        Semantics::RejFin => rej_fin(a, t, e),
        Semantics::AccInf => acc_inf(a, t, e),
        Semantics::AccUnc => acc_unc(a, t, maxcol, e1),
        Semantics::Large => large(a, t, maxcol, e),
    }
}

/// Abelard picks a direction or lets Eloise pick it. Eloise wins if the
/// parity condition holds or she picks only finitely often: latch with the
/// choice vertices tracking and `E` elsewhere.
fn rej_count(a: &ParityTreeAutomaton, t: &RegularTree, maxcol: Colour, e: Colour) -> Result<AcceptanceGame> {
    let mut ar = Arena::new(a, t, |q, _| (a.colour(q), LatchClass::Flat(e)))?;
    ar.explore((a.initial(), Mode::Plain), |ar, v, q, n, _| {
        for tr in ar.transitions(q, n) {
            let x = ar.aux(transition_kind(&tr, n), Player::Abelard, maxcol, maxcol, LatchClass::Flat(e));
            let choice = VertexKind::Choice {
                state: q,
                node: n,
                left: tr.left,
                right: tr.right,
                chooser: Player::Eloise,
            };
            let c = ar.aux(choice, Player::Eloise, maxcol, maxcol, LatchClass::Track);
            ar.edge(v, x);
            ar.edge(x, c);
            for dir in 0..2 {
                let child = ar.child(&tr, n, dir, Mode::Plain);
                ar.edge(x, child);
                ar.edge(c, child);
            }
        }
    });
    ar.finish(true)
}

/// Wait, path and check modes. Wait is coloured `E+1` (must be left), path
/// `E` (a single branch, accepted), check keeps the state colour.
fn rej_fin(a: &ParityTreeAutomaton, t: &RegularTree, e: Colour) -> Result<AcceptanceGame> {
    let e1 = Colour(e.0 + 1);
    let neutral = Colour(e.0 + 2);
    let style = |q: StateId, m: Mode| {
        let c = match m {
            Mode::Wait => e1,
            Mode::Path => e,
            _ => a.colour(q),
        };
        (c, LatchClass::Track)
    };
    let mut ar = Arena::new(a, t, style)?;
    ar.explore((a.initial(), Mode::Wait), |ar, v, q, n, mode| {
        use Mode::{Check, Path, Wait};
        let pairs: &[(Mode, Mode)] = match mode {
            Wait => &[(Wait, Wait), (Wait, Check), (Check, Wait), (Check, Check), (Path, Check), (Check, Path)],
            Path => &[(Path, Check), (Check, Path)],
            _ => &[(Check, Check)],
        };
        for tr in ar.transitions(q, n) {
            for &(m0, m1) in pairs {
                let kind = VertexKind::Transition {
                    state: q,
                    node: n,
                    left: tr.left,
                    right: tr.right,
                    modes: Some((m0, m1)),
                    direction: None,
                    marked: None,
                };
                let x = ar.aux(kind, Player::Abelard, neutral, neutral, LatchClass::Track);
                ar.edge(v, x);
                let c0 = ar.child(&tr, n, 0, m0);
                let c1 = ar.child(&tr, n, 1, m1);
                ar.edge(x, c0);
                ar.edge(x, c1);
            }
        }
    });
    ar.finish(false)
}

/// Eloise walks a spine in path mode and may offer side children; Abelard
/// either accepts an offer (the play moves to check mode on that child) or
/// refuses. Path vertices are `E+1`, offers `E`: infinitely many offers
/// win. In check mode Eloise follows one branch under the parity condition.
fn acc_inf(a: &ParityTreeAutomaton, t: &RegularTree, e: Colour) -> Result<AcceptanceGame> {
    let e1 = Colour(e.0 + 1);
    let style = |q: StateId, m: Mode| {
        let c = if m == Mode::Path { e1 } else { a.colour(q) };
        (c, LatchClass::Track)
    };
    let mut ar = Arena::new(a, t, style)?;
    ar.explore((a.initial(), Mode::Path), |ar, v, q, n, mode| {
        for tr in ar.transitions(q, n) {
            for i in 0..2 {
                if mode == Mode::Check {
                    let c = ar.child(&tr, n, i, Mode::Check);
                    ar.edge(v, c);
                    continue;
                }
                let spine = ar.child(&tr, n, i, Mode::Path);
                ar.edge(v, spine);
                let kind = VertexKind::Offer {
                    state: q,
                    node: n,
                    left: tr.left,
                    right: tr.right,
                    direction: i as u8,
                };
                let o = ar.aux(kind, Player::Abelard, e, e, LatchClass::Track);
                ar.edge(v, o);
                ar.edge(o, spine);
                let tooth = ar.child(&tr, n, 1 - i, Mode::Check);
                ar.edge(o, tooth);
            }
        }
    });
    ar.finish(false)
}

/// Eloise picks a transition and a direction, or lets Abelard pick the
/// direction. She wins if the parity condition holds and Abelard picks
/// infinitely often: latch with Abelard's choice vertices tracking and
/// `E+1` elsewhere.
fn acc_unc(a: &ParityTreeAutomaton, t: &RegularTree, maxcol: Colour, e1: Colour) -> Result<AcceptanceGame> {
    let mut ar = Arena::new(a, t, |q, _| (a.colour(q), LatchClass::Flat(e1)))?;
    ar.explore((a.initial(), Mode::Plain), |ar, v, q, n, _| {
        for tr in ar.transitions(q, n) {
            let choice = VertexKind::Choice {
                state: q,
                node: n,
                left: tr.left,
                right: tr.right,
                chooser: Player::Abelard,
            };
            let l = ar.aux(choice, Player::Abelard, maxcol, maxcol, LatchClass::Track);
            ar.edge(v, l);
            for dir in 0..2 {
                let c = ar.child(&tr, n, dir, Mode::Plain);
                ar.edge(v, c);
                ar.edge(l, c);
            }
        }
    });
    ar.finish(true)
}

/// Eloise picks a transition, a proposed direction `i` and a set `S` of
/// marked children; Abelard picks the child. Marked children track the
/// parity condition, unmarked children in direction `i` are `E+1` and the
/// others `E`.
fn large(a: &ParityTreeAutomaton, t: &RegularTree, maxcol: Colour, e: Colour) -> Result<AcceptanceGame> {
    let e1 = Colour(e.0 + 1);
    let style = |q: StateId, m: Mode| {
        let cls = match m {
            Mode::Star => LatchClass::Track,
            Mode::Square => LatchClass::Flat(e),
            _ => LatchClass::Flat(e1),
        };
        (a.colour(q), cls)
    };
    let mut ar = Arena::new(a, t, style)?;
    ar.explore((a.initial(), Mode::Circle), |ar, v, q, n, _| {
        for tr in ar.transitions(q, n) {
            for i in 0..2u8 {
                for marked in 0..4u8 {
                    if marked == 3 && i == 1 {
                        // direction is irrelevant when both children are marked
                        continue;
                    }
                    let kind = VertexKind::Transition {
                        state: q,
                        node: n,
                        left: tr.left,
                        right: tr.right,
                        modes: None,
                        direction: Some(i),
                        marked: Some(marked),
                    };
                    let x = ar.aux(kind, Player::Abelard, maxcol, maxcol, LatchClass::Flat(e1));
                    ar.edge(v, x);
                    for j in 0..2usize {
                        let symb = if marked >> j & 1 == 1 {
                            Mode::Star
                        } else if j == usize::from(i) {
                            Mode::Circle
                        } else {
                            Mode::Square
                        };
                        let c = ar.child(&tr, n, j, symb);
                        ar.edge(x, c);
                    }
                }
            }
        }
    });
    ar.finish(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::deciders::{membership, Via};

    fn a1() -> ParityTreeAutomaton {
        ParityTreeAutomaton::from_names(&["a"], &[("q0", 0)], "q0", &[("q0", "a", "q0", "q0")]).unwrap()
    }

    fn a0() -> ParityTreeAutomaton {
        ParityTreeAutomaton::from_names(&["a"], &[("q0", 1)], "q0", &[("q0", "a", "q0", "q0")]).unwrap()
    }

    fn ta() -> RegularTree {
        RegularTree::from_names(&[("N", "a", "N", "N")], "N").unwrap()
    }

    #[test]
    fn classical_game_on_single_node() {
        let g = build_acceptance_game(&a1(), &ta()).unwrap();
        assert_eq!(g.game.num_vertices(), 2);
        assert!(membership(&a1(), &ta(), Semantics::Classical, Via::Direct).unwrap());
        assert!(!membership(&a0(), &ta(), Semantics::Classical, Via::Direct).unwrap());
    }

    #[test]
    fn a1_accepted_everywhere_a0_nowhere() {
        for s in Semantics::ALL {
            for via in [Via::Direct, Via::Transform] {
                assert!(membership(&a1(), &ta(), s, via).unwrap(), "{s} {via}");
                assert!(!membership(&a0(), &ta(), s, via).unwrap(), "{s} {via}");
            }
        }
    }

    #[test]
    fn product_size_bound() {
        let a = a1();
        let g = build_acceptance_game(&a, &ta()).unwrap();
        assert!(g.game.num_vertices() <= (a.num_states() + a.transitions().len()) * ta().num_nodes());
    }
}
