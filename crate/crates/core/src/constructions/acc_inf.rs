use crate::automaton::{ParityTreeAutomaton, StateId};
use crate::colour::{Colour, Compression};
use crate::constructions::explore;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum Key {
    Top,
    Bottom,
    Path { q: StateId, offered: bool },
    Pending(StateId),
    /// Checking that the least recurring compressed colour is `k`.
    Check { q: StateId, k: Colour },
}

/// Infinitely many accepting branches, as a Büchi automaton.
///
/// A path (the spine of a comb) is followed from the root. At every step
/// the automaton may offer the side child as a tooth; the spine is
/// accepting iff offers happen infinitely often. A tooth is one branch in
/// check mode: it first stays pending, then commits to an even colour `k`
/// and must from there on see no colour below `k` and `k` itself infinitely
/// often. Children off the spine or tooth go to the accepting sink.
///
/// Colours are first compressed (order and parity preserved) so that at
/// most `⌊d/2⌋+1` values of `k` exist.
pub fn build_acc_inf(a: &ParityTreeAutomaton) -> ParityTreeAutomaton {
    let comp = Compression::new(a.colours());
    let col: Vec<Colour> = a.colours().iter().map(|&c| comp.apply(c)).collect();
    let evens = comp.even_image();
    let check = |q: StateId, k: Colour| if col[q] >= k { Key::Check { q, k } } else { Key::Bottom };
    explore(
        a.symbols(),
        Key::Path {
            q: a.initial(),
            offered: false,
        },
        |key| match *key {
            Key::Top => "top".to_string(),
            Key::Bottom => "bot".to_string(),
            Key::Path { q, offered } => format!("<{},path,{}>", a.state_name(q), if offered { "y" } else { "n" }),
            Key::Pending(q) => format!("<{},pend>", a.state_name(q)),
            Key::Check { q, k } => format!("<{},k{}>", a.state_name(q), k),
        },
        |key| match *key {
            Key::Top => Colour(0),
            Key::Bottom | Key::Pending(_) => Colour(1),
            Key::Path { offered, .. } => Colour(u32::from(!offered)),
            Key::Check { q, k } => Colour(u32::from(col[q] != k)),
        },
        |key, sym, out| {
            let along = |i: usize, spine: Key, side: Key| if i == 0 { (spine, side) } else { (side, spine) };
            match *key {
                Key::Top | Key::Bottom => out.push((*key, *key)),
                Key::Path { q, .. } => {
                    for t in a.transitions_from(q, sym) {
                        for i in 0..2 {
                            let qi = t.child(i);
                            let other = t.child(1 - i);
                            out.push(along(i, Key::Path { q: qi, offered: false }, Key::Top));
                            out.push(along(i, Key::Path { q: qi, offered: true }, Key::Pending(other)));
                        }
                    }
                }
                Key::Pending(q) => {
                    for t in a.transitions_from(q, sym) {
                        for i in 0..2 {
                            let qi = t.child(i);
                            out.push(along(i, Key::Pending(qi), Key::Top));
                            for &k in &evens {
                                out.push(along(i, check(qi, k), Key::Top));
                            }
                        }
                    }
                }
                Key::Check { q, k } => {
                    for t in a.transitions_from(q, sym) {
                        for i in 0..2 {
                            out.push(along(i, check(t.child(i), k), Key::Top));
                        }
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
    fn buchi_shaped() {
        for a in [a1(), ar()] {
            let out = build_acc_inf(&a);
            assert!(out.distinct_colours().iter().all(|c| c.0 <= 1));
        }
    }

    #[test]
    fn all_odd_input_has_no_check_states() {
        let a0 = ParityTreeAutomaton::from_names(&["a"], &[("q0", 1)], "q0", &[("q0", "a", "q0", "q0")]).unwrap();
        let out = build_acc_inf(&a0);
        assert!(out.states().iter().all(|s| !s.contains(",k")));
    }
}
