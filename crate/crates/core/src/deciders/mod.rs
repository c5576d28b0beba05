//! Membership of regular trees and emptiness, decided by parity games.

mod direct;
mod emptiness;

pub use direct::{build_acceptance_game, build_direct_game};
pub use emptiness::{build_emptiness_game, emptiness, extract_witness_tree, Witness};

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::automaton::{ParityTreeAutomaton, StateId};
use crate::colour::{Colour, Player};
use crate::constructions::transform;
use crate::error::Result;
use crate::games::{solve_parity, ParityGame, Solution, VertexId};
use crate::semantics::Semantics;
use crate::tree::{NodeId, RegularTree};

/// Mode component of a main vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    Plain,
    Wait,
    Path,
    Check,
    Star,
    Circle,
    Square,
}

impl Mode {
    fn tag(self) -> &'static str {
        match self {
            Mode::Plain => "",
            Mode::Wait => ",wait",
            Mode::Path => ",path",
            Mode::Check => ",check",
            Mode::Star => ",*",
            Mode::Circle => ",o",
            Mode::Square => ",b",
        }
    }
}

/// What a vertex of an acceptance game stands for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum VertexKind {
    /// The automaton is in `state` at `node`; Eloise picks a transition.
    Main { state: StateId, node: NodeId, mode: Mode },
    /// A transition `(state, label(node), left, right)` was chosen. The
    /// decorations record the per-semantics extra choices.
    Transition {
        state: StateId,
        node: NodeId,
        left: StateId,
        right: StateId,
        modes: Option<(Mode, Mode)>,
        direction: Option<u8>,
        marked: Option<u8>,
    },
    /// The direction is chosen by `chooser` instead of the usual player.
    Choice {
        state: StateId,
        node: NodeId,
        left: StateId,
        right: StateId,
        chooser: Player,
    },
    /// Eloise offers the `1 - direction` child as a tooth.
    Offer {
        state: StateId,
        node: NodeId,
        left: StateId,
        right: StateId,
        direction: u8,
    },
}

/// A vertex's meaning, plus the tracked colour if the game went through the
/// latch reduction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GameVertex {
    pub kind: VertexKind,
    pub tracked: Option<Colour>,
}

/// A parity game together with the meaning of each vertex.
#[derive(Debug, Clone)]
pub struct AcceptanceGame {
    pub game: ParityGame,
    pub vertices: Vec<GameVertex>,
}

impl AcceptanceGame {
    /// Human-readable description of vertex `v`.
    pub fn describe(&self, v: VertexId, a: &ParityTreeAutomaton, t: &RegularTree) -> String {
        let gv = self.vertices[v];
        let q = |s: StateId| a.state_name(s);
        let mut s = match gv.kind {
            VertexKind::Main { state, node, mode } => format!("({},{}{})", q(state), t.name(node), mode.tag()),
            VertexKind::Transition {
                state,
                node,
                left,
                right,
                modes,
                direction,
                marked,
            } => {
                let mut s = format!("({},{},{},{}", q(state), t.name(node), q(left), q(right));
                if let Some((m0, m1)) = modes {
                    s.push_str(&format!("{}{}", m0.tag(), m1.tag()));
                }
                if let Some(d) = direction {
                    s.push_str(&format!(",dir={d}"));
                }
                if let Some(m) = marked {
                    let set: Vec<String> = (0..2).filter(|j| m >> j & 1 == 1).map(|j| j.to_string()).collect();
                    s.push_str(&format!(",marked={{{}}}", set.join(",")));
                }
                s.push(')');
                s
            }
            VertexKind::Choice {
                state,
                node,
                left,
                right,
                chooser,
            } => format!("{chooser}-choice({},{},{},{})", q(state), t.name(node), q(left), q(right)),
            VertexKind::Offer {
                state,
                node,
                left,
                right,
                direction,
            } => format!("offer({},{},{},{},dir={direction})", q(state), t.name(node), q(left), q(right)),
        };
        if let Some(m) = gv.tracked {
            s.push_str(&format!("/{m}"));
        }
        s
    }
}

/// How membership is decided.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Via {
    /// Solve the semantics' own acceptance game.
    Direct,
    /// Transform to a classical automaton and solve its acceptance game.
    Transform,
}

impl fmt::Display for Via {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Via::Direct => "direct",
            Via::Transform => "transform",
        })
    }
}

impl FromStr for Via {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "direct" => Ok(Via::Direct),
            "transform" => Ok(Via::Transform),
            _ => Err(format!("unknown method `{s}` (expected direct or transform)")),
        }
    }
}

/// A solved membership game.
#[derive(Debug, Clone)]
pub struct Decision {
    pub accepted: bool,
    /// The automaton whose game was solved: the input for `Direct`, the
    /// construction's output for `Transform`.
    pub automaton: ParityTreeAutomaton,
    pub game: AcceptanceGame,
    pub solution: Solution,
}

impl Decision {
    /// Eloise's moves on vertices reachable from the start under her
    /// strategy, in vertex order. Empty when she loses.
    pub fn eloise_strategy(&self) -> Vec<(VertexId, VertexId)> {
        if !self.accepted {
            return Vec::new();
        }
        let g = &self.game.game;
        let s = self.solution.strategy(Player::Eloise);
        let mut seen = vec![false; g.num_vertices()];
        let mut todo = vec![g.start()];
        seen[g.start()] = true;
        let mut moves = Vec::new();
        while let Some(v) = todo.pop() {
            let next: Vec<VertexId> = if g.owner(v) == Player::Eloise {
                let w = s.get(v).expect("winning Eloise vertex has a move");
                moves.push((v, w));
                vec![w]
            } else {
                g.successors(v).to_vec()
            };
            for w in next {
                if !seen[w] {
                    seen[w] = true;
                    todo.push(w);
                }
            }
        }
        moves.sort_unstable();
        moves
    }
}

/// Decides `t ∈ L_s(a)` and keeps the solved game.
pub fn decide(a: &ParityTreeAutomaton, t: &RegularTree, s: Semantics, via: Via) -> Result<Decision> {
    let (automaton, game) = match via {
        Via::Direct => (a.clone(), build_direct_game(a, t, s)?),
        Via::Transform => {
            let (out, _) = transform(a, s);
            let game = build_acceptance_game(&out, t)?;
            (out, game)
        }
    };
    let solution = solve_parity(&game.game);
    let accepted = solution.winner(game.game.start()) == Player::Eloise;
    Ok(Decision {
        accepted,
        automaton,
        game,
        solution,
    })
}

/// Whether `t` is accepted by `a` under `s`.
pub fn membership(a: &ParityTreeAutomaton, t: &RegularTree, s: Semantics, via: Via) -> Result<bool> {
    Ok(decide(a, t, s, via)?.accepted)
}
