//! Latch reduction: parity combined with recurrence of a vertex set, as
//! pure parity.
//!
//! Each output vertex `(v, m)` pairs an input vertex with the least original
//! colour seen since the last TRACK vertex. Leaving a TRACK vertex resets
//! the tracker to that vertex's own original colour, so a segment between
//! consecutive TRACK visits includes both endpoints. TRACK vertices are
//! coloured with their tracker, FLAT vertices with their fixed colour.
//!
//! Hence a play visiting TRACK infinitely often keeps its original liminf,
//! and any other play ends up with the least FLAT colour it sees infinitely
//! often.

use serde::{Deserialize, Serialize};

use crate::colour::{self, Colour};
use crate::error::{Error, Result};
use crate::games::{GameBuilder, ParityGame, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum LatchClass {
    Track,
    Flat(Colour),
}

/// The reduced game and, for each of its vertices, the input vertex and
/// tracked colour it stands for.
#[derive(Debug, Clone)]
pub struct LatchGame {
    pub game: ParityGame,
    pub origin: Vec<(VertexId, Colour)>,
}

/// Tracker after moving from `v` (with tracker `m`) to `w`.
#[inline]
pub(crate) fn next_tracker(g: &ParityGame, cls: &[LatchClass], v: VertexId, m: Colour, w: VertexId) -> Colour {
    let base = match cls[v] {
        LatchClass::Track => g.original_colour(v),
        LatchClass::Flat(_) => m,
    };
    base.min(g.original_colour(w))
}

/// Builds the reachable part of the latch product from `(start, orig(start))`.
pub fn latch_reduce(g: &ParityGame, cls: &[LatchClass]) -> Result<LatchGame> {
    let n = g.num_vertices();
    if cls.len() != n {
        return Err(Error::InvalidGame(format!(
            "latch class has {} entries for {} vertices",
            cls.len(),
            n
        )));
    }
    let originals: Vec<Colour> = colour::distinct(&(0..n).map(|v| g.original_colour(v)).collect::<Vec<_>>());
    let max_original = originals.last().copied().unwrap_or_default();
    for (v, c) in cls.iter().enumerate() {
        if let LatchClass::Flat(f) = *c {
            if f < max_original {
                return Err(Error::FlatBelowOriginal {
                    vertex: v,
                    flat: f.0,
                    original: max_original.0,
                });
            }
        }
    }
    let rank = |c: Colour| originals.binary_search(&c).expect("tracker is an original colour");
    let k = originals.len();
    let mut index = vec![usize::MAX; n * k];
    let mut origin: Vec<(VertexId, Colour)> = Vec::new();
    let mut b = GameBuilder::new();
    let mut todo: Vec<usize> = Vec::new();

    let mut intern = |v: VertexId, m: Colour, b: &mut GameBuilder, origin: &mut Vec<_>, todo: &mut Vec<usize>| {
        let key = v * k + rank(m);
        if index[key] == usize::MAX {
            let colour = match cls[v] {
                LatchClass::Track => m,
                LatchClass::Flat(f) => f,
            };
            let id = b.add_vertex_with_original(g.owner(v), colour, g.original_colour(v));
            index[key] = id;
            origin.push((v, m));
            todo.push(id);
        }
        index[key]
    };

    let s = g.start();
    let start = intern(s, g.original_colour(s), &mut b, &mut origin, &mut todo);
    while let Some(id) = todo.pop() {
        let (v, m) = origin[id];
        for &w in g.successors(v) {
            let m2 = next_tracker(g, cls, v, m, w);
            let to = intern(w, m2, &mut b, &mut origin, &mut todo);
            b.add_edge(id, to);
        }
    }
    let game = b.build(start)?;
    Ok(LatchGame { game, origin })
}
