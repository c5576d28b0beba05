use crate::colour::{Colour, Player};
use crate::games::{ParityGame, PositionalStrategy, VertexId};
use crate::graph;

/// Checks that `s` wins for `player` from every vertex of `region`.
///
/// In the graph where `player` follows `s` and the opponent keeps every
/// edge, no play may leave `region` and every cycle inside it must have a
/// minimum colour of `player`'s parity.
pub fn verify_strategy(g: &ParityGame, s: &PositionalStrategy, player: Player, region: &[VertexId]) -> bool {
    let n = g.num_vertices();
    let mut inside = vec![false; n];
    for &v in region {
        if v >= n {
            return false;
        }
        inside[v] = true;
    }
    for &v in region {
        if g.owner(v) == player {
            match s.get(v) {
                Some(w) if g.has_edge(v, w) && inside[w] => {}
                _ => return false,
            }
        } else if g.successors(v).iter().any(|&w| !inside[w]) {
            return false;
        }
    }
    let succ = |v: usize| -> Vec<usize> {
        if g.owner(v) == player {
            s.get(v).into_iter().collect()
        } else {
            g.successors(v).to_vec()
        }
    };
    let mut bad: Vec<Colour> = region
        .iter()
        .map(|&v| g.colour(v))
        .filter(|&c| Player::favoured_by(c) != player)
        .collect();
    bad.sort_unstable();
    bad.dedup();
    for k in bad {
        let keep = |v: usize| inside[v] && g.colour(v) >= k;
        let (comp, ncomp) = graph::scc(n, succ, keep);
        let cyclic = graph::nontrivial_components(n, &comp, ncomp, |v| {
            succ(v).into_iter().filter(|&w| keep(w)).collect::<Vec<_>>()
        });
        if region
            .iter()
            .any(|&v| g.colour(v) == k && comp[v] != usize::MAX && cyclic[comp[v]])
        {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::games::tests::game;
    use Player::{Abelard, Eloise};

    #[test]
    fn rejects_losing_loop() {
        let g = game(&[(Eloise, 1), (Abelard, 0)], &[(0, 0), (0, 1), (1, 0)]);
        let mut s = PositionalStrategy::empty(2);
        s.set(0, 0);
        assert!(!verify_strategy(&g, &s, Eloise, &[0, 1]));
        s.set(0, 1);
        assert!(verify_strategy(&g, &s, Eloise, &[0, 1]));
    }

    #[test]
    fn rejects_leaving_region() {
        let g = game(&[(Eloise, 0), (Eloise, 1)], &[(0, 0), (0, 1), (1, 1)]);
        let mut s = PositionalStrategy::empty(2);
        s.set(0, 1);
        assert!(!verify_strategy(&g, &s, Eloise, &[0]));
        s.set(0, 0);
        assert!(verify_strategy(&g, &s, Eloise, &[0]));
    }
}
