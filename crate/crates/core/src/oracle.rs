//! Branch-set classification for deterministic automata on regular trees.
//!
//! A deterministic automaton has one run on a tree; on a regular tree that
//! run is the unfolding of a finite graph, and its branches are the
//! infinite paths from the root (each path also records its direction
//! sequence). The cardinality and largeness of the accepting and rejecting
//! branch sets are graph properties decided here without any game.

use serde::{Deserialize, Serialize};

use crate::automaton::{ParityTreeAutomaton, StateId};
use crate::colour::{self, Colour};
use crate::error::Result;
use crate::graph;
use crate::semantics::Semantics;
use crate::tree::{NodeId, RegularTree};

/// The reachable product of a deterministic automaton with a regular tree.
/// Vertex 0 is the root `(q_ini, root)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunGraph {
    pub vertices: Vec<(StateId, NodeId)>,
    pub colours: Vec<Colour>,
    pub succ: Vec<[usize; 2]>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Target {
    Accepting,
    Rejecting,
}

impl Target {
    fn wants(self, c: Colour) -> bool {
        match self {
            Target::Accepting => c.is_even(),
            Target::Rejecting => c.is_odd(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Cardinality {
    None,
    Finite,
    CountablyInfinite,
    Uncountable,
}

/// Where a cardinality verdict comes from.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct TargetWitness {
    /// A vertex `w` on a cycle through one successor whose other successor,
    /// in direction `d`, reaches a target branch: `(w, d)`.
    pub splitting: Option<(usize, u8)>,
    /// A vertex `s` whose both successors stay in a strongly connected part
    /// of colours `≥ k` containing colour `k`: `(s, k)`.
    pub branching: Option<(usize, Colour)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BranchClassification {
    pub rejecting: Cardinality,
    pub accepting: Cardinality,
    pub accepting_large: bool,
    pub rejecting_witness: TargetWitness,
    pub accepting_witness: TargetWitness,
    /// A reachable bottom component with odd minimum colour, if any.
    pub offending_bscc: Option<Vec<usize>>,
}

impl RunGraph {
    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    fn all_succ(&self) -> impl Fn(usize) -> [usize; 2] + '_ {
        move |v| self.succ[v]
    }

    /// Vertices from which some path has least recurring colour of the
    /// target parity.
    fn good_sources(&self, target: Target) -> Vec<bool> {
        let n = self.num_vertices();
        let mut good = vec![false; n];
        for k in colour::distinct(&self.colours) {
            if !target.wants(k) {
                continue;
            }
            for v in self.cycle_vertices_of_colour(k) {
                good[v] = true;
            }
        }
        graph::backward_reach(n, &good, self.all_succ())
    }

    /// Vertices of colour exactly `k` lying on a cycle within colours `≥ k`.
    fn cycle_vertices_of_colour(&self, k: Colour) -> Vec<usize> {
        let n = self.num_vertices();
        let keep = |v: usize| self.colours[v] >= k;
        let (comp, ncomp) = graph::scc(n, self.all_succ(), keep);
        let cyclic = graph::nontrivial_components(n, &comp, ncomp, |v| {
            self.succ[v].into_iter().filter(|&w| keep(w)).collect::<Vec<_>>()
        });
        (0..n)
            .filter(|&v| self.colours[v] == k && comp[v] != usize::MAX && cyclic[comp[v]])
            .collect()
    }
}

/// The unique run of deterministic `a` on `t`, as a finite graph.
pub fn build_run_graph(a: &ParityTreeAutomaton, t: &RegularTree) -> Result<RunGraph> {
    if let Some(e) = a.first_nondeterminism() {
        return Err(e);
    }
    let labels = t.symbol_ids(a)?;
    let nn = t.num_nodes();
    let mut index = vec![usize::MAX; a.num_states() * nn];
    let mut g = RunGraph {
        vertices: Vec::new(),
        colours: Vec::new(),
        succ: Vec::new(),
    };
    let root = (a.initial(), t.root());
    index[root.0 * nn + root.1] = 0;
    g.vertices.push(root);
    let mut head = 0;
    while head < g.vertices.len() {
        let (q, n) = g.vertices[head];
        let tr = a.transitions_from(q, labels[n])[0];
        let mut s = [0; 2];
        for (d, slot) in s.iter_mut().enumerate() {
            let (q2, n2) = (tr.child(d), t.succ(n, d));
            let key = q2 * nn + n2;
            if index[key] == usize::MAX {
                index[key] = g.vertices.len();
                g.vertices.push((q2, n2));
            }
            *slot = index[key];
        }
        g.colours.push(a.colour(q));
        g.succ.push(s);
        head += 1;
    }
    Ok(g)
}

/// Some branch has least recurring colour of the target parity.
pub fn branch_exists(g: &RunGraph, target: Target) -> bool {
    g.good_sources(target)[0]
}

fn splitting_pair(g: &RunGraph, target: Target) -> Option<(usize, u8)> {
    // Every vertex of the graph is reachable from the root.
    let n = g.num_vertices();
    let good = g.good_sources(target);
    let (comp, _) = graph::scc(n, g.all_succ(), |_| true);
    for w in 0..n {
        for d in 0..2 {
            let other = g.succ[w][1 - d];
            if comp[other] == comp[w] && good[g.succ[w][d]] {
                return Some((w, d as u8));
            }
        }
    }
    None
}

/// The target branch set is infinite.
///
/// Sound: with `w` on a cycle through its `(1-d)`-successor, the branches
/// `prefix · cycle^i · d · tail_i` are pairwise distinct. Complete: among
/// infinitely many target branches, König's lemma gives a limit branch
/// visiting some vertex infinitely often from which target branches split
/// off at ever deeper positions; the pigeonhole principle on the finitely
/// many vertices yields such a `w` and `d`.
pub fn branches_infinite(g: &RunGraph, target: Target) -> bool {
    splitting_pair(g, target).is_some()
}

fn branching_pair(g: &RunGraph, target: Target) -> Option<(usize, Colour)> {
    let n = g.num_vertices();
    for k in colour::distinct(&g.colours) {
        if !target.wants(k) {
            continue;
        }
        let keep = |v: usize| g.colours[v] >= k;
        let (comp, ncomp) = graph::scc(n, g.all_succ(), keep);
        let mut has_k = vec![false; ncomp];
        for v in 0..n {
            if g.colours[v] == k {
                has_k[comp[v]] = true;
            }
        }
        for s in 0..n {
            let c = comp[s];
            if c != usize::MAX && has_k[c] && g.succ[s].iter().all(|&w| comp[w] == c) {
                return Some((s, k));
            }
        }
    }
    None
}

/// The target branch set is uncountable.
///
/// Sound: if `s` has both successors inside a strongly connected part of
/// colours `≥ k` containing colour `k`, returning to `s` through a
/// colour-`k` vertex after either choice embeds a binary tree of branches,
/// each of least recurring colour `k`. Complete: an uncountable set of
/// target branches contains, for some `k`, an embedded binary tree in which
/// every segment between branching nodes has minimum exactly `k`;
/// infinitely many of its branching nodes map to one graph vertex, and that
/// vertex is such an `s`.
pub fn branches_uncountable(g: &RunGraph, target: Target) -> bool {
    branching_pair(g, target).is_some()
}

fn odd_bscc(g: &RunGraph) -> Option<Vec<usize>> {
    let n = g.num_vertices();
    let (comp, ncomp) = graph::scc(n, g.all_succ(), |_| true);
    let mut bottom = vec![true; ncomp];
    let mut min = vec![Colour(u32::MAX); ncomp];
    for v in 0..n {
        min[comp[v]] = min[comp[v]].min(g.colours[v]);
        if g.succ[v].iter().any(|&w| comp[w] != comp[v]) {
            bottom[comp[v]] = false;
        }
    }
    (0..ncomp)
        .find(|&c| bottom[c] && min[c].is_odd())
        .map(|c| (0..n).filter(|&v| comp[v] == c).collect())
}

/// The accepting branch set is topologically large.
///
/// For a finite graph whose branches are chosen uniformly at random, almost
/// every branch ends in a bottom component and visits all of it infinitely
/// often; for such path properties, probability one and co-meagreness
/// coincide. So the accepting set is large iff every bottom component has
/// an even minimum colour.
pub fn branches_large(g: &RunGraph) -> bool {
    odd_bscc(g).is_none()
}

fn cardinality(g: &RunGraph, target: Target) -> (Cardinality, TargetWitness) {
    let branching = branching_pair(g, target);
    let splitting = splitting_pair(g, target);
    let card = if branching.is_some() {
        Cardinality::Uncountable
    } else if splitting.is_some() {
        Cardinality::CountablyInfinite
    } else if branch_exists(g, target) {
        Cardinality::Finite
    } else {
        Cardinality::None
    };
    (card, TargetWitness { splitting, branching })
}

pub fn classify(g: &RunGraph) -> BranchClassification {
    let (rejecting, rejecting_witness) = cardinality(g, Target::Rejecting);
    let (accepting, accepting_witness) = cardinality(g, Target::Accepting);
    let offending_bscc = odd_bscc(g);
    BranchClassification {
        rejecting,
        accepting,
        accepting_large: offending_bscc.is_none(),
        rejecting_witness,
        accepting_witness,
        offending_bscc,
    }
}

/// Reads the membership of every semantics off the classification.
pub fn membership_from_classification(c: &BranchClassification, s: Semantics) -> bool {
    match s {
        Semantics::Classical => c.rejecting == Cardinality::None,
        Semantics::RejFin => c.rejecting <= Cardinality::Finite,
        Semantics::RejCount => c.rejecting != Cardinality::Uncountable,
        Semantics::AccInf => c.accepting >= Cardinality::CountablyInfinite,
        Semantics::AccUnc => c.accepting == Cardinality::Uncountable,
        Semantics::Large => c.accepting_large,
    }
}

/// Membership for a deterministic automaton, decided on its unique run.
pub fn deterministic_membership(a: &ParityTreeAutomaton, t: &RegularTree, s: Semantics) -> Result<bool> {
    let g = build_run_graph(a, t)?;
    Ok(membership_from_classification(&classify(&g), s))
}

/// Fails with the offending pair if `a` is not deterministic.
pub fn require_deterministic(a: &ParityTreeAutomaton) -> Result<()> {
    match a.first_nondeterminism() {
        Some(e) => Err(e),
        None => Ok(()),
    }
}

impl From<Cardinality> for &'static str {
    fn from(c: Cardinality) -> Self {
        match c {
            Cardinality::None => "none",
            Cardinality::Finite => "finite",
            Cardinality::CountablyInfinite => "countably-infinite",
            Cardinality::Uncountable => "uncountable",
        }
    }
}

impl std::fmt::Display for Cardinality {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str((*self).into())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    fn ar() -> ParityTreeAutomaton {
        ParityTreeAutomaton::from_names(
            &["a", "b"],
            &[("p", 2), ("f", 1)],
            "p",
            &[("p", "a", "p", "p"), ("p", "b", "f", "f"), ("f", "a", "p", "p"), ("f", "b", "f", "f")],
        )
        .unwrap()
    }

    fn tl() -> RegularTree {
        RegularTree::from_names(&[("Na", "a", "Nb", "Na"), ("Nb", "b", "Nb", "Na")], "Na").unwrap()
    }

    fn t00() -> RegularTree {
        RegularTree::from_names(
            &[("N1", "a", "N0", "N1"), ("N0", "a", "N00", "N1"), ("N00", "b", "N00", "N1")],
            "N1",
        )
        .unwrap()
    }

    #[test]
    fn ar_on_tl() {
        let g = build_run_graph(&ar(), &tl()).unwrap();
        assert!(g.num_vertices() <= 4);
        // a state is fixed by the parent's label: below every b-node sits f
        let nb = tl().names().iter().position(|n| n == "Nb").unwrap();
        for v in 0..g.num_vertices() {
            if g.vertices[v].1 == nb {
                assert!(g.succ[v].iter().all(|&w| g.colours[w] == Colour(1)));
            }
        }
        assert!(branch_exists(&g, Target::Accepting));
        assert!(branch_exists(&g, Target::Rejecting));
        assert!(branches_infinite(&g, Target::Accepting));
        assert!(!branches_uncountable(&g, Target::Accepting));
        assert!(branches_uncountable(&g, Target::Rejecting));
        let c = classify(&g);
        assert_eq!(c.rejecting, Cardinality::Uncountable);
        assert_eq!(c.accepting, Cardinality::CountablyInfinite);
        assert!(!c.accepting_large);
    }

    #[test]
    fn ar_on_t00() {
        let g = build_run_graph(&ar(), &t00()).unwrap();
        let (_, k) = branching_pair(&g, Target::Accepting).unwrap();
        assert_eq!(k, Colour(2));
        assert!(!branches_large(&g));
    }

    #[test]
    fn nondeterministic_input_is_refused() {
        let a = ParityTreeAutomaton::from_names(
            &["a"],
            &[("q", 0)],
            "q",
            &[("q", "a", "q", "q"), ("q", "a", "q", "q"), ("q", "a", "q", "q")],
        )
        .unwrap();
        assert!(a.is_deterministic());
        let b = ParityTreeAutomaton::from_names(
            &["a"],
            &[("q", 0), ("r", 1)],
            "q",
            &[("q", "a", "q", "q"), ("q", "a", "r", "q"), ("r", "a", "r", "r")],
        )
        .unwrap();
        assert!(matches!(
            build_run_graph(&b, &RegularTree::from_names(&[("N", "a", "N", "N")], "N").unwrap()),
            Err(Error::Nondeterministic { .. })
        ));
    }
}
