use crate::automaton::{ParityTreeAutomaton, StateId};
use crate::colour::Colour;
use crate::constructions::{explore, fresh_even};

/// Countably many rejecting branches.
///
/// At every node the automaton guesses a direction; that child is starred,
/// the other plain. A branch taking starred steps infinitely often must
/// satisfy the parity condition, read through the minimum colour seen
/// since the previous starred state. Branches that are eventually always
/// plain are determined by a finite prefix, hence countably many, and get
/// the even colour `E`.
///
/// States are `(q, starred, m)` with `m` the tracked minimum: at most
/// `2·d·|Q|` states and `d+1` colours.
pub fn build_rej_count(a: &ParityTreeAutomaton) -> ParityTreeAutomaton {
    let e = fresh_even(a);
    let q0 = a.initial();
    type Key = (StateId, bool, Colour);
    explore(
        a.symbols(),
        (q0, true, a.colour(q0)),
        |&(q, star, m): &Key| format!("<{},{},{}>", a.state_name(q), if star { "*" } else { "-" }, m),
        |&(_, star, m): &Key| if star { m } else { e },
        |&(q, star, m): &Key, sym, out| {
            let base = if star { a.colour(q) } else { m };
            for t in a.transitions_from(q, sym) {
                let m0 = base.min(a.colour(t.left));
                let m1 = base.min(a.colour(t.right));
                out.push(((t.left, true, m0), (t.right, false, m1)));
                out.push(((t.left, false, m0), (t.right, true, m1)));
            }
        },
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::tests::{a1, ar};

    #[test]
    fn a1_stays_small() {
        let out = build_rej_count(&a1());
        // <q0,*,0> and <q0,-,0>
        assert_eq!(out.num_states(), 2);
        assert_eq!(out.distinct_colours(), vec![Colour(0), Colour(2)]);
    }

    #[test]
    fn ar_within_bounds() {
        let out = build_rej_count(&ar());
        assert!(out.num_states() <= 8);
        assert!(out.distinct_colours().len() <= 3);
    }
}
