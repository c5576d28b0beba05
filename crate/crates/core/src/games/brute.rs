//! Reference solver: enumerate Eloise's positional strategies.

use crate::colour::Player;
use crate::error::{Error, Result};
use crate::games::ParityGame;

pub const BRUTE_FORCE_BOUND: usize = 12;

/// Winner of every vertex, by exhaustive search over Eloise's positional
/// strategies. A vertex is won by Eloise iff some strategy makes every
/// cycle reachable from it (Abelard keeping all his edges) have an even
/// minimum colour.
pub fn solve_parity_bruteforce(g: &ParityGame) -> Result<Vec<Player>> {
    solve_parity_bruteforce_with_bound(g, BRUTE_FORCE_BOUND)
}

pub fn solve_parity_bruteforce_with_bound(g: &ParityGame, bound: usize) -> Result<Vec<Player>> {
    let n = g.num_vertices();
    if n > bound || n > 64 {
        return Err(Error::BoundExceeded {
            vertices: n,
            bound: bound.min(64),
        });
    }
    let eloise: Vec<usize> = (0..n).filter(|&v| g.owner(v) == Player::Eloise).collect();
    let mut choice = vec![0usize; eloise.len()];
    let mut odd_colours: Vec<u32> = (0..n).map(|v| g.colour(v).0).filter(|c| c % 2 == 1).collect();
    odd_colours.sort_unstable();
    odd_colours.dedup();

    let mut won: u64 = 0;
    loop {
        let mut succ = vec![0u64; n];
        for v in 0..n {
            succ[v] = g.successors(v).iter().fold(0, |m, &w| m | (1 << w));
        }
        for (k, &v) in eloise.iter().enumerate() {
            succ[v] = 1 << g.successors(v)[choice[k]];
        }
        won |= !losing_vertices(g, &succ, &odd_colours) & mask(n);

        // next strategy in mixed-radix order
        let mut k = 0;
        loop {
            if k == eloise.len() {
                return Ok((0..n)
                    .map(|v| if won >> v & 1 == 1 { Player::Eloise } else { Player::Abelard })
                    .collect());
            }
            choice[k] += 1;
            if choice[k] < g.successors(eloise[k]).len() {
                break;
            }
            choice[k] = 0;
            k += 1;
        }
    }
}

fn mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Transitive closure (paths of length ≥ 1) restricted to `keep`.
fn closure(succ: &[u64], keep: u64) -> Vec<u64> {
    let n = succ.len();
    let mut reach: Vec<u64> = (0..n)
        .map(|v| if keep >> v & 1 == 1 { succ[v] & keep } else { 0 })
        .collect();
    for k in 0..n {
        let bit = 1u64 << k;
        for v in 0..n {
            if reach[v] & bit != 0 {
                reach[v] |= reach[k];
            }
        }
    }
    reach
}

/// Vertices that can reach a cycle whose minimum colour is odd.
fn losing_vertices(g: &ParityGame, succ: &[u64], odd_colours: &[u32]) -> u64 {
    let n = succ.len();
    let mut bad: u64 = 0;
    for &k in odd_colours {
        let keep = (0..n)
            .filter(|&v| g.colour(v).0 >= k)
            .fold(0u64, |m, v| m | (1 << v));
        let reach = closure(succ, keep);
        for v in 0..n {
            if g.colour(v).0 == k && reach[v] >> v & 1 == 1 {
                bad |= 1 << v;
            }
        }
    }
    let all = closure(succ, mask(n));
    let mut losing = bad;
    for v in 0..n {
        if all[v] & bad != 0 {
            losing |= 1 << v;
        }
    }
    losing
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::games::tests::game;
    use Player::{Abelard, Eloise};

    #[test]
    fn small_games() {
        assert_eq!(solve_parity_bruteforce(&game(&[(Eloise, 0)], &[(0, 0)])).unwrap(), vec![Eloise]);
        assert_eq!(solve_parity_bruteforce(&game(&[(Abelard, 1)], &[(0, 0)])).unwrap(), vec![Abelard]);
        let g = game(&[(Eloise, 1), (Abelard, 0)], &[(0, 0), (0, 1), (1, 0)]);
        assert_eq!(solve_parity_bruteforce(&g).unwrap(), vec![Eloise, Eloise]);
    }

    #[test]
    fn uniform_parity_games() {
        let edges = [(0, 1), (1, 0), (1, 2), (2, 2), (2, 0)];
        let even = game(&[(Abelard, 0), (Eloise, 2), (Abelard, 4)], &edges);
        assert!(solve_parity_bruteforce(&even).unwrap().iter().all(|&p| p == Eloise));
        let odd = game(&[(Eloise, 1), (Eloise, 3), (Eloise, 5)], &edges);
        assert!(solve_parity_bruteforce(&odd).unwrap().iter().all(|&p| p == Abelard));
    }

    #[test]
    fn bound_is_enforced() {
        let spec = vec![(Eloise, 0); 13];
        let edges: Vec<(usize, usize)> = (0..13).map(|v| (v, v)).collect();
        assert_eq!(
            solve_parity_bruteforce(&game(&spec, &edges)).unwrap_err(),
            Error::BoundExceeded {
                vertices: 13,
                bound: 12
            }
        );
    }
}
