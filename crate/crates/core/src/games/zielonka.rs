//! Zielonka's recursive algorithm for min-parity games.
//!
//! The recursion peels off the attractor of the least colour. Its tail call
//! (the second recursive call on `G \ B`) is turned into a loop, so the
//! recursion depth is bounded by the number of distinct colours.

use crate::colour::{Colour, Player};
use crate::games::{ParityGame, PositionalStrategy, Solution, VertexId};

const NONE: usize = usize::MAX;

struct Solver<'g> {
    g: &'g ParityGame,
    pred_off: Vec<usize>,
    pred: Vec<VertexId>,
    alive: Vec<bool>,
    winner: Vec<Player>,
    strategy: Vec<usize>,
    // attractor scratch
    stamp: Vec<u32>,
    count: Vec<u32>,
    in_attr: Vec<u32>,
    generation: u32,
}

/// Solves `g` completely: every vertex gets a winner and each player a
/// positional strategy that wins from every vertex of its region.
pub fn solve_parity(g: &ParityGame) -> Solution {
    let n = g.num_vertices();
    let (pred_off, pred) = g.predecessors();
    let mut s = Solver {
        g,
        pred_off,
        pred,
        alive: vec![true; n],
        winner: vec![Player::Eloise; n],
        strategy: vec![NONE; n],
        stamp: vec![0; n],
        count: vec![0; n],
        in_attr: vec![0; n],
        generation: 0,
    };
    let all: Vec<VertexId> = (0..n).collect();
    s.solve(all);

    let mut strategies = [PositionalStrategy::empty(n), PositionalStrategy::empty(n)];
    for v in 0..n {
        let p = s.winner[v];
        if g.owner(v) == p {
            debug_assert_ne!(s.strategy[v], NONE, "winning vertex {v} without a move");
            strategies[p.index()].set(v, s.strategy[v]);
        }
    }
    Solution {
        winner: s.winner,
        strategies,
    }
}

impl Solver<'_> {
    fn next_generation(&mut self) -> u32 {
        self.generation = self.generation.wrapping_add(1);
        if self.generation == 0 {
            self.stamp.iter_mut().for_each(|x| *x = 0);
            self.in_attr.iter_mut().for_each(|x| *x = 0);
            self.generation = 1;
        }
        self.generation
    }

    /// Attractor of `target` for `p` inside the alive subgame. Records an
    /// attracting move for every `p` vertex added. Returns the attractor,
    /// targets first; membership is `in_attr[v] == generation`.
    fn attractor(&mut self, target: &[VertexId], p: Player) -> (Vec<VertexId>, u32) {
        let gen = self.next_generation();
        let mut attr: Vec<VertexId> = Vec::with_capacity(target.len());
        for &v in target {
            if self.in_attr[v] != gen {
                self.in_attr[v] = gen;
                attr.push(v);
            }
        }
        let mut head = 0;
        while head < attr.len() {
            let v = attr[head];
            head += 1;
            for k in self.pred_off[v]..self.pred_off[v + 1] {
                let u = self.pred[k];
                if !self.alive[u] || self.in_attr[u] == gen {
                    continue;
                }
                if self.g.owner(u) == p {
                    self.in_attr[u] = gen;
                    self.strategy[u] = v;
                    attr.push(u);
                } else {
                    if self.stamp[u] != gen {
                        self.stamp[u] = gen;
                        let alive = &self.alive;
                        self.count[u] = self.g.successors(u).iter().filter(|&&w| alive[w]).count() as u32;
                    }
                    self.count[u] -= 1;
                    if self.count[u] == 0 {
                        self.in_attr[u] = gen;
                        attr.push(u);
                    }
                }
            }
        }
        (attr, gen)
    }

    /// Solves the subgame on `vertices` (all alive, closed under the
    /// subgame discipline). Writes `winner` and `strategy` for them.
    fn solve(&mut self, mut vertices: Vec<VertexId>) {
        let mut removed: Vec<VertexId> = Vec::new();
        loop {
            if vertices.is_empty() {
                break;
            }
            let p: Colour = vertices.iter().map(|&v| self.g.colour(v)).min().unwrap();
            let alpha = Player::favoured_by(p);
            let top: Vec<VertexId> = vertices.iter().copied().filter(|&v| self.g.colour(v) == p).collect();
            let (a, gen_a) = self.attractor(&top, alpha);
            let a_mark: Vec<bool> = {
                let mut m = Vec::with_capacity(vertices.len());
                for &v in &vertices {
                    m.push(self.in_attr[v] == gen_a);
                }
                m
            };
            let rest: Vec<VertexId> = vertices
                .iter()
                .zip(&a_mark)
                .filter(|(_, &inside)| !inside)
                .map(|(&v, _)| v)
                .collect();
            for &v in &a {
                self.alive[v] = false;
            }
            self.solve(rest.clone());
            for &v in &a {
                self.alive[v] = true;
            }
            let opponent_region: Vec<VertexId> =
                rest.iter().copied().filter(|&v| self.winner[v] != alpha).collect();

            if opponent_region.is_empty() {
                for &v in &a {
                    self.winner[v] = alpha;
                }
                for &v in &top {
                    if self.g.owner(v) == alpha {
                        let alive = &self.alive;
                        self.strategy[v] = *self
                            .g
                            .successors(v)
                            .iter()
                            .find(|&&w| alive[w])
                            .expect("subgame vertex without successor");
                    }
                }
                for &v in &rest {
                    self.winner[v] = alpha;
                }
                break;
            }

            let beta = alpha.opponent();
            let (b, _) = self.attractor(&opponent_region, beta);
            for &v in &b {
                self.winner[v] = beta;
                self.alive[v] = false;
            }
            removed.extend_from_slice(&b);
            let alive = &self.alive;
            vertices.retain(|&v| alive[v]);
        }
        for &v in &removed {
            self.alive[v] = true;
        }
    }
}
