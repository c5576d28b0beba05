//! Colours and the min-parity convention.
//!
//! An infinite colour word is accepting iff the least colour occurring
//! infinitely often is even. This is the only parity convention in the crate.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(
    Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize,
)]
#[serde(transparent)]
pub struct Colour(pub u32);

impl Colour {
    pub const ZERO: Colour = Colour(0);
    pub const ONE: Colour = Colour(1);

    #[inline]
    pub fn is_even(self) -> bool {
        self.0 % 2 == 0
    }

    #[inline]
    pub fn is_odd(self) -> bool {
        !self.is_even()
    }

    #[inline]
    pub fn value(self) -> u32 {
        self.0
    }
}

impl fmt::Display for Colour {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl From<u32> for Colour {
    fn from(v: u32) -> Self {
        Colour(v)
    }
}

/// The two players of every game in this crate. Eloise wins plays whose
/// least recurring colour is even.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Player {
    Eloise,
    Abelard,
}

impl Player {
    pub fn opponent(self) -> Player {
        match self {
            Player::Eloise => Player::Abelard,
            Player::Abelard => Player::Eloise,
        }
    }

    /// The player favoured by a colour: Eloise for even, Abelard for odd.
    pub fn favoured_by(c: Colour) -> Player {
        if c.is_even() {
            Player::Eloise
        } else {
            Player::Abelard
        }
    }

    pub fn index(self) -> usize {
        match self {
            Player::Eloise => 0,
            Player::Abelard => 1,
        }
    }
}

impl fmt::Display for Player {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Player::Eloise => f.write_str("Eloise"),
            Player::Abelard => f.write_str("Abelard"),
        }
    }
}

/// Returns true iff the ultimately periodic word `prefix · cycle^ω` is
/// accepting under min-parity. Only the cycle matters.
pub fn lasso_accepting(cycle: &[Colour]) -> bool {
    cycle
        .iter()
        .min()
        .map(|c| c.is_even())
        .expect("cycle must be non-empty")
}

/// The sorted set of distinct colours in `colours`.
pub fn distinct(colours: &[Colour]) -> Vec<Colour> {
    colours
        .iter()
        .copied()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect()
}

/// An even colour strictly above every colour up to `max`: `2·(1 + max)`.
pub fn fresh_even_above(max: Colour) -> Colour {
    Colour(2 * (1 + max.0))
}

/// The smallest even colour that is `>= max`.
pub fn even_at_least(max: Colour) -> Colour {
    if max.is_even() {
        max
    } else {
        Colour(max.0 + 1)
    }
}

/// Order- and parity-preserving compression of a colour set.
///
/// Adjacent colours of equal parity are merged and the result starts at 0
/// or 1 depending on the parity of the least colour. The map is monotone and
/// preserves parity, so `liminf` of every colour word keeps its parity.
#[derive(Debug, Clone)]
pub struct Compression {
    from: Vec<Colour>,
    to: Vec<Colour>,
}

impl Compression {
    pub fn new(colours: &[Colour]) -> Self {
        let from = distinct(colours);
        let mut to = Vec::with_capacity(from.len());
        for (i, c) in from.iter().enumerate() {
            let image = if i == 0 {
                Colour(c.0 % 2)
            } else {
                let prev: Colour = to[i - 1];
                if prev.is_even() == c.is_even() {
                    prev
                } else {
                    Colour(prev.0 + 1)
                }
            };
            to.push(image);
        }
        Compression { from, to }
    }

    pub fn apply(&self, c: Colour) -> Colour {
        let i = self
            .from
            .binary_search(&c)
            .expect("colour outside the compressed set");
        self.to[i]
    }

    /// The even colours of the compressed range.
    pub fn even_image(&self) -> Vec<Colour> {
        let mut evens: Vec<Colour> = self.to.iter().copied().filter(|c| c.is_even()).collect();
        evens.dedup();
        evens
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compression_merges_same_parity_neighbours() {
        let cs = [Colour(2), Colour(4), Colour(5), Colour(9), Colour(10)];
        let comp = Compression::new(&cs);
        let image: Vec<u32> = cs.iter().map(|&c| comp.apply(c).0).collect();
        assert_eq!(image, vec![0, 0, 1, 1, 2]);
        assert_eq!(comp.even_image(), vec![Colour(0), Colour(2)]);
    }

    #[test]
    fn compression_of_odd_start() {
        let comp = Compression::new(&[Colour(3), Colour(7), Colour(8)]);
        assert_eq!(comp.apply(Colour(3)), Colour(1));
        assert_eq!(comp.apply(Colour(7)), Colour(1));
        assert_eq!(comp.apply(Colour(8)), Colour(2));
    }

    #[test]
    fn fresh_and_neutral() {
        assert_eq!(fresh_even_above(Colour(3)), Colour(8));
        assert_eq!(even_at_least(Colour(3)), Colour(4));
        assert_eq!(even_at_least(Colour(4)), Colour(4));
    }

    #[test]
    fn lasso_parity() {
        assert!(lasso_accepting(&[Colour(3), Colour(2)]));
        assert!(!lasso_accepting(&[Colour(1), Colour(2)]));
    }
}
