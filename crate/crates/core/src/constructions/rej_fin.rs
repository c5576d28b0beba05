use crate::automaton::{ParityTreeAutomaton, StateId};
use crate::constructions::{constant_automaton, explore};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum Mode {
    Wait,
    Path,
    Check,
}

/// Finitely many rejecting branches.
///
/// A run starts in wait mode, which carries the least odd colour and so
/// must be left on every branch: the wait region is finite. Leaving it, a
/// node either enters check mode (ordinary parity from there on) or starts
/// a path, a single branch coloured with the least even colour along which
/// every side child is checked. Paths cover the finitely many rejecting
/// branches.
///
/// States are `(q, mode)`: at most `3·|Q|` states and `d` colours. With no
/// odd colour every run is accepting; with no even colour none is; both
/// degenerate cases return a one-state automaton.
pub fn build_rej_fin(a: &ParityTreeAutomaton) -> ParityTreeAutomaton {
    let colours = a.distinct_colours();
    let odd = colours.iter().copied().find(|c| c.is_odd());
    let even = colours.iter().copied().find(|c| c.is_even());
    let (odd, even) = match (odd, even) {
        (None, _) => return constant_automaton(a.symbols(), "accept", colours[0]),
        (_, None) => return constant_automaton(a.symbols(), "reject", colours[0]),
        (Some(o), Some(e)) => (o, e),
    };
    use Mode::*;
    type Key = (StateId, Mode);
    explore(
        a.symbols(),
        (a.initial(), Wait),
        |&(q, m): &Key| {
            let tag = match m {
                Wait => "w",
                Path => "p",
                Check => "c",
            };
            format!("<{},{}>", a.state_name(q), tag)
        },
        |&(q, m): &Key| match m {
            Wait => odd,
            Path => even,
            Check => a.colour(q),
        },
        |&(q, m): &Key, sym, out| {
            let pairs: &[(Mode, Mode)] = match m {
                Wait => &[(Wait, Wait), (Wait, Check), (Check, Wait), (Check, Check), (Path, Check), (Check, Path)],
                Path => &[(Path, Check), (Check, Path)],
                Check => &[(Check, Check)],
            };
            for t in a.transitions_from(q, sym) {
                for &(m0, m1) in pairs {
                    out.push(((t.left, m0), (t.right, m1)));
                }
            }
        },
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colour::Colour;
    use crate::constructions::tests::ar;

    #[test]
    fn degenerate_inputs() {
        let even = ParityTreeAutomaton::from_names(
            &["a"],
            &[("x", 2), ("y", 4)],
            "x",
            &[("x", "a", "y", "x"), ("y", "a", "y", "y")],
        )
        .unwrap();
        let out = build_rej_fin(&even);
        assert_eq!(out.num_states(), 1);
        assert_eq!(out.colour(0), Colour(2));

        let odd = ParityTreeAutomaton::from_names(&["a"], &[("x", 3)], "x", &[("x", "a", "x", "x")]).unwrap();
        let out = build_rej_fin(&odd);
        assert_eq!(out.num_states(), 1);
        assert_eq!(out.colour(0), Colour(3));
    }

    #[test]
    fn ar_within_bounds() {
        let out = build_rej_fin(&ar());
        assert!(out.num_states() <= 6);
        assert_eq!(out.distinct_colours(), vec![Colour(1), Colour(2)]);
    }
}
