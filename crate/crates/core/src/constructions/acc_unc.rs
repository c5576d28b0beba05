use crate::automaton::{ParityTreeAutomaton, StateId};
use crate::colour::{Colour, Compression};
use crate::constructions::explore;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum Key {
    Top,
    Bottom,
    Wait(StateId),
    Check {
        q: StateId,
        k: Colour,
        seen: bool,
        choice: bool,
    },
}

/// Uncountably many accepting branches, as a Büchi automaton.
///
/// The run first follows one branch in wait mode, then commits to an even
/// colour `k` and embeds a binary tree of choice points: between two
/// consecutive choice points the colours stay `≥ k` and `k` is seen. Every
/// branch of that embedded tree has least recurring colour `k`, and there
/// are uncountably many of them. Children not followed go to the accepting
/// sink, colour violations to the rejecting sink.
///
/// `seen` starts as true after the commitment: only segments between two
/// choice points are constrained. Colours are compressed first.
pub fn build_acc_unc(a: &ParityTreeAutomaton) -> ParityTreeAutomaton {
    let comp = Compression::new(a.colours());
    let col: Vec<Colour> = a.colours().iter().map(|&c| comp.apply(c)).collect();
    let evens = comp.even_image();
    let check = |q: StateId, k: Colour, seen: bool, choice: bool| {
        if col[q] >= k {
            Key::Check { q, k, seen, choice }
        } else {
            Key::Bottom
        }
    };
    explore(
        a.symbols(),
        Key::Wait(a.initial()),
        |key| match *key {
            Key::Top => "top".to_string(),
            Key::Bottom => "bot".to_string(),
            Key::Wait(q) => format!("<{},wait>", a.state_name(q)),
            Key::Check { q, k, seen, choice } => format!(
                "<{},k{},{},{}>",
                a.state_name(q),
                k,
                if seen { "s" } else { "-" },
                if choice { "c" } else { "-" }
            ),
        },
        |key| match *key {
            Key::Top => Colour(0),
            Key::Bottom | Key::Wait(_) => Colour(1),
            Key::Check { choice, .. } => Colour(u32::from(!choice)),
        },
        |key, sym, out| {
            let along = |i: usize, follow: Key, side: Key| if i == 0 { (follow, side) } else { (side, follow) };
            match *key {
                Key::Top | Key::Bottom => out.push((*key, *key)),
                Key::Wait(q) => {
                    for t in a.transitions_from(q, sym) {
                        for i in 0..2 {
                            let qi = t.child(i);
                            out.push(along(i, Key::Wait(qi), Key::Top));
                            for &k in &evens {
                                out.push(along(i, check(qi, k, true, false), Key::Top));
                            }
                        }
                    }
                }
                Key::Check { q, k, seen, .. } => {
                    for t in a.transitions_from(q, sym) {
                        for i in 0..2 {
                            let qi = t.child(i);
                            out.push(along(i, check(qi, k, seen || col[qi] == k, false), Key::Top));
                        }
                        if seen {
                            let (l, r) = (t.left, t.right);
                            out.push((check(l, k, col[l] == k, true), check(r, k, col[r] == k, true)));
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
            let out = build_acc_unc(&a);
            assert!(out.distinct_colours().iter().all(|c| c.0 <= 1));
        }
    }

    #[test]
    fn a1_reaches_choice_points() {
        let out = build_acc_unc(&a1());
        assert!(out.states().iter().any(|s| s == "<q0,k0,s,c>"));
    }
}
