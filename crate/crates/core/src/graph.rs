//! Small graph algorithms over index graphs given by closures.

/// Strongly connected components of the subgraph induced by `include`.
///
/// Returns a component id per vertex (`usize::MAX` for excluded vertices)
/// and the number of components. Components are numbered in reverse
/// topological order (sinks first), as produced by Tarjan's algorithm.
pub fn scc<S, I>(n: usize, successors: S, include: impl Fn(usize) -> bool) -> (Vec<usize>, usize)
where
    S: Fn(usize) -> I,
    I: IntoIterator<Item = usize>,
{
    const UNSEEN: usize = usize::MAX;
    let mut index = vec![UNSEEN; n];
    let mut low = vec![0usize; n];
    let mut on_stack = vec![false; n];
    let mut comp = vec![UNSEEN; n];
    let mut stack: Vec<usize> = Vec::new();
    let mut next_index = 0;
    let mut ncomp = 0;

    // Explicit call stack: (vertex, successor list, position).
    let mut call: Vec<(usize, Vec<usize>, usize)> = Vec::new();

    for root in 0..n {
        if !include(root) || index[root] != UNSEEN {
            continue;
        }
        let succ: Vec<usize> = successors(root).into_iter().filter(|&w| include(w)).collect();
        index[root] = next_index;
        low[root] = next_index;
        next_index += 1;
        stack.push(root);
        on_stack[root] = true;
        call.push((root, succ, 0));

        while let Some((v, succ, pos)) = call.last_mut() {
            let v = *v;
            if *pos < succ.len() {
                let w = succ[*pos];
                *pos += 1;
                if index[w] == UNSEEN {
                    let wsucc: Vec<usize> =
                        successors(w).into_iter().filter(|&x| include(x)).collect();
                    index[w] = next_index;
                    low[w] = next_index;
                    next_index += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    call.push((w, wsucc, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
            } else {
                call.pop();
                if let Some((parent, _, _)) = call.last() {
                    let parent = *parent;
                    low[parent] = low[parent].min(low[v]);
                }
                if low[v] == index[v] {
                    loop {
                        let w = stack.pop().expect("tarjan stack underflow");
                        on_stack[w] = false;
                        comp[w] = ncomp;
                        if w == v {
                            break;
                        }
                    }
                    ncomp += 1;
                }
            }
        }
    }
    (comp, ncomp)
}

/// Vertices reachable from `sources` (inclusive) inside `include`.
pub fn forward_reach<S, I>(
    n: usize,
    sources: impl IntoIterator<Item = usize>,
    successors: S,
    include: impl Fn(usize) -> bool,
) -> Vec<bool>
where
    S: Fn(usize) -> I,
    I: IntoIterator<Item = usize>,
{
    let mut seen = vec![false; n];
    let mut todo = Vec::new();
    for s in sources {
        if include(s) && !seen[s] {
            seen[s] = true;
            todo.push(s);
        }
    }
    while let Some(v) = todo.pop() {
        for w in successors(v) {
            if include(w) && !seen[w] {
                seen[w] = true;
                todo.push(w);
            }
        }
    }
    seen
}

/// Vertices that can reach some vertex of `targets` (inclusive).
pub fn backward_reach<S, I>(n: usize, targets: &[bool], successors: S) -> Vec<bool>
where
    S: Fn(usize) -> I,
    I: IntoIterator<Item = usize>,
{
    let mut preds: Vec<Vec<usize>> = vec![Vec::new(); n];
    for v in 0..n {
        for w in successors(v) {
            preds[w].push(v);
        }
    }
    let mut seen = targets.to_vec();
    let mut todo: Vec<usize> = (0..n).filter(|&v| targets[v]).collect();
    while let Some(v) = todo.pop() {
        for &u in &preds[v] {
            if !seen[u] {
                seen[u] = true;
                todo.push(u);
            }
        }
    }
    seen
}

/// For each component, whether it contains a cycle (more than one vertex, or
/// a self-loop) within the included subgraph.
pub fn nontrivial_components<S, I>(
    n: usize,
    comp: &[usize],
    ncomp: usize,
    successors: S,
) -> Vec<bool>
where
    S: Fn(usize) -> I,
    I: IntoIterator<Item = usize>,
{
    let mut size = vec![0usize; ncomp];
    let mut cyclic = vec![false; ncomp];
    for v in 0..n {
        if comp[v] == usize::MAX {
            continue;
        }
        size[comp[v]] += 1;
        if successors(v).into_iter().any(|w| w == v) {
            cyclic[comp[v]] = true;
        }
    }
    for c in 0..ncomp {
        if size[c] > 1 {
            cyclic[c] = true;
        }
    }
    cyclic
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scc_of_two_cycles_and_a_tail() {
        // 0 -> 1 -> 0, 1 -> 2, 2 -> 3 -> 2, 4 -> 4
        let adj: Vec<Vec<usize>> = vec![vec![1], vec![0, 2], vec![3], vec![2], vec![4]];
        let (comp, n) = scc(adj.len(), |v| adj[v].clone(), |_| true);
        assert_eq!(n, 3);
        assert_eq!(comp[0], comp[1]);
        assert_eq!(comp[2], comp[3]);
        assert_ne!(comp[0], comp[2]);
        // sinks first
        assert!(comp[2] < comp[0]);
        let cyc = nontrivial_components(adj.len(), &comp, n, |v| adj[v].clone());
        assert!(cyc.iter().all(|&c| c));
    }

    #[test]
    fn scc_respects_filter() {
        let adj: Vec<Vec<usize>> = vec![vec![1], vec![2], vec![0]];
        let (comp, n) = scc(3, |v| adj[v].clone(), |v| v != 2);
        assert_eq!(n, 2);
        assert_eq!(comp[2], usize::MAX);
        let cyc = nontrivial_components(3, &comp, n, |v| {
            adj[v].iter().copied().filter(|&w| w != 2).collect::<Vec<_>>()
        });
        assert!(cyc.iter().all(|&c| !c));
    }

    #[test]
    fn reachability() {
        let adj: Vec<Vec<usize>> = vec![vec![1], vec![2], vec![2], vec![0]];
        let fwd = forward_reach(4, [0], |v| adj[v].clone(), |_| true);
        assert_eq!(fwd, vec![true, true, true, false]);
        let bwd = backward_reach(4, &[false, false, true, false], |v| adj[v].clone());
        assert_eq!(bwd, vec![true, true, true, true]);
    }
}
