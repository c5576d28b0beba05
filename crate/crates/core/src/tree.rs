//! Regular infinite binary trees, given as finite rooted graphs.

use std::collections::HashMap;

use crate::automaton::{validate_name, ParityTreeAutomaton, SymbolId};
use crate::error::{Error, Result};

pub type NodeId = usize;

/// A finite graph whose unfolding from `root` is an infinite binary tree.
///
/// Node `n` carries `labels[n]` and has successors `succ[n][0]` and
/// `succ[n][1]`. The label of a tree position `u ∈ {0,1}*` is the label of
/// the node reached by following `u` from the root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegularTree {
    names: Vec<String>,
    labels: Vec<String>,
    succ: Vec<[NodeId; 2]>,
    root: NodeId,
}

impl RegularTree {
    pub fn new(
        names: Vec<String>,
        labels: Vec<String>,
        succ: Vec<[NodeId; 2]>,
        root: NodeId,
    ) -> Result<Self> {
        if names.is_empty() {
            return Err(Error::Missing("nodes"));
        }
        if labels.len() != names.len() || succ.len() != names.len() {
            return Err(Error::IndexOutOfRange {
                what: "node table length",
                index: labels.len().max(succ.len()),
            });
        }
        let mut seen = HashMap::new();
        for n in &names {
            validate_name(n)?;
            if seen.insert(n.as_str(), ()).is_some() {
                return Err(Error::Duplicate {
                    kind: "node",
                    name: n.clone(),
                });
            }
        }
        for l in &labels {
            validate_name(l)?;
        }
        if root >= names.len() {
            return Err(Error::IndexOutOfRange {
                what: "root",
                index: root,
            });
        }
        for s in &succ {
            for &m in s {
                if m >= names.len() {
                    return Err(Error::IndexOutOfRange {
                        what: "node",
                        index: m,
                    });
                }
            }
        }
        Ok(RegularTree {
            names,
            labels,
            succ,
            root,
        })
    }

    /// Builds a tree from `(name, label, succ0, succ1)` rows.
    pub fn from_names(nodes: &[(&str, &str, &str, &str)], root: &str) -> Result<Self> {
        let names: Vec<String> = nodes.iter().map(|n| n.0.to_string()).collect();
        let id = |n: &str| {
            names
                .iter()
                .position(|m| m == n)
                .ok_or_else(|| Error::UnknownNode {
                    name: n.to_string(),
                    line: 0,
                })
        };
        let succ = nodes
            .iter()
            .map(|&(_, _, l, r)| Ok([id(l)?, id(r)?]))
            .collect::<Result<Vec<_>>>()?;
        let labels = nodes.iter().map(|n| n.1.to_string()).collect();
        let root = id(root)?;
        RegularTree::new(names, labels, succ, root)
    }

    pub fn num_nodes(&self) -> usize {
        self.names.len()
    }

    pub fn root(&self) -> NodeId {
        self.root
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, n: NodeId) -> &str {
        &self.names[n]
    }

    pub fn label(&self, n: NodeId) -> &str {
        &self.labels[n]
    }

    #[inline]
    pub fn succ(&self, n: NodeId, dir: usize) -> NodeId {
        self.succ[n][dir]
    }

    pub fn successors(&self, n: NodeId) -> [NodeId; 2] {
        self.succ[n]
    }

    /// The graph node reached from the root along `path`.
    pub fn node_at(&self, path: &[u8]) -> NodeId {
        path.iter()
            .fold(self.root, |n, &d| self.succ[n][usize::from(d != 0)])
    }

    /// The label of the tree position `path`.
    pub fn label_at(&self, path: &[u8]) -> &str {
        self.label(self.node_at(path))
    }

    /// Label indices in the automaton's alphabet.
    pub fn symbol_ids(&self, a: &ParityTreeAutomaton) -> Result<Vec<SymbolId>> {
        let index: HashMap<&str, SymbolId> = a
            .symbols()
            .iter()
            .enumerate()
            .map(|(i, s)| (s.as_str(), i))
            .collect();
        self.labels
            .iter()
            .map(|l| {
                index
                    .get(l.as_str())
                    .copied()
                    .ok_or_else(|| Error::AlphabetMismatch(l.clone()))
            })
            .collect()
    }

    /// Same tree with nodes in lexicographic name order.
    pub fn canonical(&self) -> RegularTree {
        let mut order: Vec<NodeId> = (0..self.num_nodes()).collect();
        order.sort_by(|&a, &b| self.names[a].cmp(&self.names[b]));
        let mut rank = vec![0; order.len()];
        for (k, &i) in order.iter().enumerate() {
            rank[i] = k;
        }
        RegularTree {
            names: order.iter().map(|&i| self.names[i].clone()).collect(),
            labels: order.iter().map(|&i| self.labels[i].clone()).collect(),
            succ: order
                .iter()
                .map(|&i| [rank[self.succ[i][0]], rank[self.succ[i][1]]])
                .collect(),
            root: rank[self.root],
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tl() -> RegularTree {
        RegularTree::from_names(&[("Na", "a", "Nb", "Na"), ("Nb", "b", "Nb", "Na")], "Na").unwrap()
    }

    #[test]
    fn single_node() {
        let t = RegularTree::from_names(&[("N", "a", "N", "N")], "N").unwrap();
        assert_eq!(t.num_nodes(), 1);
        assert_eq!(t.label_at(&[0, 1, 1, 0]), "a");
    }

    #[test]
    fn tl_labels_b_iff_last_direction_is_zero() {
        let t = tl();
        for depth in 0..=4u32 {
            for bits in 0..(1u32 << depth) {
                let path: Vec<u8> = (0..depth).map(|i| ((bits >> i) & 1) as u8).collect();
                let expected = if path.last() == Some(&0) { "b" } else { "a" };
                assert_eq!(t.label_at(&path), expected, "path {path:?}");
            }
        }
    }

    #[test]
    fn dangling_successor() {
        let err = RegularTree::from_names(&[("Na", "a", "Nx", "Na")], "Na").unwrap_err();
        assert!(matches!(err, Error::UnknownNode { .. }));
    }

    #[test]
    fn alphabet_mismatch() {
        let a = ParityTreeAutomaton::from_names(&["a"], &[("q", 0)], "q", &[("q", "a", "q", "q")]).unwrap();
        assert_eq!(tl().symbol_ids(&a).unwrap_err(), Error::AlphabetMismatch("b".into()));
    }
}
