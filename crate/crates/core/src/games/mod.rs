//! Finite two-player parity games under the min-parity condition.

mod brute;
mod dot;
mod latch;
mod verify;
mod zielonka;

pub use brute::{solve_parity_bruteforce, solve_parity_bruteforce_with_bound, BRUTE_FORCE_BOUND};
pub use dot::game_to_dot;
pub use latch::{latch_reduce, LatchClass, LatchGame};
pub(crate) use latch::next_tracker;
pub use verify::verify_strategy;
pub use zielonka::solve_parity;

use serde::{Deserialize, Serialize};

use crate::colour::{Colour, Player};
use crate::error::{Error, Result};

pub type VertexId = usize;

/// A finite arena with owners and colours, stored in CSR form.
///
/// `original_colour` is the colour a vertex carried before any colour
/// rewriting (the latch reduction reads it); for plain games it equals
/// `colour`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParityGame {
    owner: Vec<Player>,
    colour: Vec<Colour>,
    original: Vec<Colour>,
    offsets: Vec<usize>,
    targets: Vec<VertexId>,
    start: VertexId,
}

impl ParityGame {
    /// Builds a game from vertex data and an edge list. Duplicate edges are
    /// merged; successors are kept in increasing order.
    pub fn new(
        owner: Vec<Player>,
        colour: Vec<Colour>,
        original: Vec<Colour>,
        edges: &[(VertexId, VertexId)],
        start: VertexId,
    ) -> Result<Self> {
        let n = owner.len();
        if colour.len() != n || original.len() != n {
            return Err(Error::InvalidGame("vertex tables differ in length".into()));
        }
        if start >= n {
            return Err(Error::InvalidGame(format!("start vertex {start} out of range")));
        }
        let mut offsets = vec![0usize; n + 1];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidGame(format!("edge ({u}, {v}) out of range")));
            }
            offsets[u + 1] += 1;
        }
        for i in 0..n {
            offsets[i + 1] += offsets[i];
        }
        let mut fill = offsets.clone();
        let mut targets = vec![0; edges.len()];
        for &(u, v) in edges {
            targets[fill[u]] = v;
            fill[u] += 1;
        }
        // sort and dedup each adjacency list, compacting in place
        let mut write = 0;
        let mut new_offsets = vec![0usize; n + 1];
        for u in 0..n {
            let (lo, hi) = (offsets[u], offsets[u + 1]);
            targets[lo..hi].sort_unstable();
            let mut last = usize::MAX;
            for k in lo..hi {
                let v = targets[k];
                if v != last {
                    targets[write] = v;
                    write += 1;
                    last = v;
                }
            }
            new_offsets[u + 1] = write;
            if write == new_offsets[u] {
                return Err(Error::InvalidGame(format!("vertex {u} has no successor")));
            }
        }
        targets.truncate(write);
        Ok(ParityGame {
            owner,
            colour,
            original,
            offsets: new_offsets,
            targets,
            start,
        })
    }

    /// A game whose original colours equal its colours.
    pub fn from_parts(
        owner: Vec<Player>,
        colour: Vec<Colour>,
        edges: &[(VertexId, VertexId)],
        start: VertexId,
    ) -> Result<Self> {
        let original = colour.clone();
        ParityGame::new(owner, colour, original, edges, start)
    }

    pub fn num_vertices(&self) -> usize {
        self.owner.len()
    }

    pub fn num_edges(&self) -> usize {
        self.targets.len()
    }

    pub fn start(&self) -> VertexId {
        self.start
    }

    #[inline]
    pub fn owner(&self, v: VertexId) -> Player {
        self.owner[v]
    }

    #[inline]
    pub fn colour(&self, v: VertexId) -> Colour {
        self.colour[v]
    }

    #[inline]
    pub fn original_colour(&self, v: VertexId) -> Colour {
        self.original[v]
    }

    #[inline]
    pub fn successors(&self, v: VertexId) -> &[VertexId] {
        &self.targets[self.offsets[v]..self.offsets[v + 1]]
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.successors(u).binary_search(&v).is_ok()
    }

    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        (0..self.num_vertices()).flat_map(move |u| self.successors(u).iter().map(move |&v| (u, v)))
    }

    pub fn max_colour(&self) -> Colour {
        self.colour.iter().copied().max().unwrap_or_default()
    }

    pub(crate) fn predecessors(&self) -> (Vec<usize>, Vec<VertexId>) {
        let n = self.num_vertices();
        let mut offsets = vec![0usize; n + 1];
        for &v in &self.targets {
            offsets[v + 1] += 1;
        }
        for i in 0..n {
            offsets[i + 1] += offsets[i];
        }
        let mut fill = offsets.clone();
        let mut sources = vec![0; self.targets.len()];
        for u in 0..n {
            for &v in self.successors(u) {
                sources[fill[v]] = u;
                fill[v] += 1;
            }
        }
        (offsets, sources)
    }
}

/// Incremental construction of a [`ParityGame`].
#[derive(Debug, Default, Clone)]
pub struct GameBuilder {
    owner: Vec<Player>,
    colour: Vec<Colour>,
    original: Vec<Colour>,
    edges: Vec<(VertexId, VertexId)>,
}

impl GameBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_capacity(vertices: usize, edges: usize) -> Self {
        GameBuilder {
            owner: Vec::with_capacity(vertices),
            colour: Vec::with_capacity(vertices),
            original: Vec::with_capacity(vertices),
            edges: Vec::with_capacity(edges),
        }
    }

    pub fn add_vertex(&mut self, owner: Player, colour: Colour) -> VertexId {
        self.add_vertex_with_original(owner, colour, colour)
    }

    pub fn add_vertex_with_original(&mut self, owner: Player, colour: Colour, original: Colour) -> VertexId {
        self.owner.push(owner);
        self.colour.push(colour);
        self.original.push(original);
        self.owner.len() - 1
    }

    pub fn add_edge(&mut self, u: VertexId, v: VertexId) {
        self.edges.push((u, v));
    }

    pub fn num_vertices(&self) -> usize {
        self.owner.len()
    }

    pub fn build(self, start: VertexId) -> Result<ParityGame> {
        ParityGame::new(self.owner, self.colour, self.original, &self.edges, start)
    }
}

/// A positional strategy: a chosen successor for some vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PositionalStrategy {
    choice: Vec<Option<VertexId>>,
}

impl PositionalStrategy {
    pub fn empty(n: usize) -> Self {
        PositionalStrategy {
            choice: vec![None; n],
        }
    }

    pub fn from_choices(choice: Vec<Option<VertexId>>) -> Self {
        PositionalStrategy { choice }
    }

    #[inline]
    pub fn get(&self, v: VertexId) -> Option<VertexId> {
        self.choice.get(v).copied().flatten()
    }

    pub fn set(&mut self, v: VertexId, w: VertexId) {
        self.choice[v] = Some(w);
    }

    /// Defined `(vertex, successor)` pairs in vertex order.
    pub fn iter(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.choice.iter().enumerate().filter_map(|(v, c)| c.map(|w| (v, w)))
    }
}

/// Winning regions and winning positional strategies of both players.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution {
    winner: Vec<Player>,
    strategies: [PositionalStrategy; 2],
}

impl Solution {
    pub fn winner(&self, v: VertexId) -> Player {
        self.winner[v]
    }

    pub fn winners(&self) -> &[Player] {
        &self.winner
    }

    /// Vertices won by `p`, in increasing order.
    pub fn region(&self, p: Player) -> Vec<VertexId> {
        (0..self.winner.len()).filter(|&v| self.winner[v] == p).collect()
    }

    /// `p`'s strategy, defined on `p`'s vertices in `p`'s region.
    pub fn strategy(&self, p: Player) -> &PositionalStrategy {
        &self.strategies[p.index()]
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    pub fn game(spec: &[(Player, u32)], edges: &[(usize, usize)]) -> ParityGame {
        let owner = spec.iter().map(|s| s.0).collect();
        let colour = spec.iter().map(|s| Colour(s.1)).collect();
        ParityGame::from_parts(owner, colour, edges, 0).unwrap()
    }

    #[test]
    fn rejects_dead_ends() {
        let err = ParityGame::from_parts(vec![Player::Eloise; 2], vec![Colour(0); 2], &[(0, 1)], 0);
        assert!(matches!(err, Err(Error::InvalidGame(_))));
    }

    #[test]
    fn merges_duplicate_edges() {
        let g = game(&[(Player::Eloise, 0), (Player::Abelard, 1)], &[(0, 1), (0, 1), (1, 0), (0, 0)]);
        assert_eq!(g.successors(0), &[0, 1]);
        assert_eq!(g.num_edges(), 3);
        let (off, src) = g.predecessors();
        assert_eq!(&src[off[0]..off[1]], &[0, 1]);
    }
}
