use crate::automaton::{ParityTreeAutomaton, StateId};
use crate::colour::Colour;
use crate::constructions::{explore, fresh_even};

/// Position of a node relative to the choices made at its parent.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum Symb {
    /// Marked.
    Star,
    /// Unmarked, in the proposed direction.
    Circle,
    /// Unmarked, off the proposed direction.
    Square,
}

/// Large set of accepting branches.
///
/// At each node the automaton chooses a transition, a direction and a set
/// of marked children. A branch through infinitely many marked nodes is
/// judged by parity on the minimum colour tracked between marks. Other
/// branches are accepted iff they leave the proposed direction infinitely
/// often (colour `E` against `E+1` for following it).
///
/// States are `(q, symb, m)`: at most `3·d·|Q|` states and `d+2` colours.
pub fn build_large(a: &ParityTreeAutomaton) -> ParityTreeAutomaton {
    let e = fresh_even(a);
    let q0 = a.initial();
    type Key = (StateId, Symb, Colour);
    explore(
        a.symbols(),
        (q0, Symb::Circle, a.colour(q0)),
        |&(q, s, m): &Key| {
            let tag = match s {
                Symb::Star => "*",
                Symb::Circle => "o",
                Symb::Square => "b",
            };
            format!("<{},{},{}>", a.state_name(q), tag, m)
        },
        |&(_, s, m): &Key| match s {
            Symb::Star => m,
            Symb::Square => e,
            Symb::Circle => Colour(e.0 + 1),
        },
        |&(q, s, m): &Key, sym, out| {
            let base = if s == Symb::Star { a.colour(q) } else { m };
            for t in a.transitions_from(q, sym) {
                let m0 = base.min(a.colour(t.left));
                let m1 = base.min(a.colour(t.right));
                for i in 0..2 {
                    for marked in 0..4u8 {
                        let symb = |j: usize| {
                            if marked >> j & 1 == 1 {
                                Symb::Star
                            } else if j == i {
                                Symb::Circle
                            } else {
                                Symb::Square
                            }
                        };
                        out.push(((t.left, symb(0), m0), (t.right, symb(1), m1)));
                    }
                }
            }
        },
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::tests::{a1, ar};

    #[test]
    fn colours_within_d_plus_two() {
        let out = build_large(&ar());
        assert!(out.distinct_colours().len() <= 4);
        assert!(out.num_states() <= 12);
        let out = build_large(&a1());
        assert_eq!(out.distinct_colours(), vec![Colour(0), Colour(2), Colour(3)]);
    }
}
