//! Graph corpora for the suites.

use std::collections::BTreeMap;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::graph::{all_labeled_graphs_up_to, Graph, MAX_LABELED_ORDER};
use crate::vertex_set::VertexSet;

/// Every labeled graph of order `min_n..=max_n`, smallest order first.
pub fn labeled(min_n: usize, max_n: usize) -> Result<Vec<Graph>> {
    Ok(all_labeled_graphs_up_to(max_n)?
        .into_iter()
        .filter(|g| g.order() >= min_n)
        .collect())
}

/// Upper-triangle adjacency bits of `g` with vertex `v` renamed `perm[v]`.
fn edge_code(g: &Graph, perm: &[usize]) -> u64 {
    let mut code = 0u64;
    for (u, v) in g.edges() {
        let (a, b) = (perm[u].min(perm[v]), perm[u].max(perm[v]));
        code |= 1 << (b * (b - 1) / 2 + a);
    }
    code
}

/// Smallest edge code over all relabelings: equal exactly for isomorphic
/// graphs of the same order.
pub fn canonical_code(g: &Graph) -> u64 {
    let n = g.order();
    (0..n)
        .permutations(n)
        .map(|p| edge_code(g, &p))
        .min()
        .unwrap_or(0)
}

/// One graph per isomorphism class of order `min_n..=max_n`, ordered by
/// order and then canonical code. Each representative is the canonical
/// relabeling.
pub fn isomorphism_classes(min_n: usize, max_n: usize, connected_only: bool) -> Result<Vec<Graph>> {
    if max_n > MAX_LABELED_ORDER {
        return Err(Error::OrderBudgetExceeded {
            n: max_n,
            budget: MAX_LABELED_ORDER,
        });
    }
    let mut classes: BTreeMap<(usize, u64), Graph> = BTreeMap::new();
    for g in labeled(min_n, max_n)? {
        if connected_only && !g.is_connected() {
            continue;
        }
        classes.entry((g.order(), canonical_code(&g))).or_insert(g);
    }
    Ok(classes.into_values().collect())
}

/// A 2-coloring of `g`, if it is bipartite.
pub fn bipartition(g: &Graph) -> Option<(VertexSet, VertexSet)> {
    let mut side = vec![None; g.order()];
    for start in 0..g.order() {
        if side[start].is_some() {
            continue;
        }
        side[start] = Some(false);
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            let s = side[u].expect("colored on push");
            for w in g.neighbors(u).iter() {
                match side[w] {
                    None => {
                        side[w] = Some(!s);
                        stack.push(w);
                    }
                    Some(t) if t == s => return None,
                    Some(_) => {}
                }
            }
        }
    }
    let a: VertexSet = (0..g.order()).filter(|&v| side[v] == Some(false)).collect();
    Some((a, a.complement(g.order())))
}

/// A permutation `p` of `0..n` with `{p(S) : S ∈ from} = to`, if one exists.
/// Both lists must be sorted.
pub fn relabeling_between(n: usize, from: &[VertexSet], to: &[VertexSet]) -> Option<Vec<usize>> {
    if from.len() != to.len() {
        return None;
    }
    (0..n).permutations(n).find(|p| {
        let mut mapped: Vec<VertexSet> = from.iter().map(|s| s.map(p)).collect();
        mapped.sort();
        mapped == to
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::FamilySpec;

    #[test]
    fn class_counts() {
        let counts: Vec<usize> = (1..=5)
            .map(|n| isomorphism_classes(n, n, false).unwrap().len())
            .collect();
        assert_eq!(counts, [1, 2, 4, 11, 34]);
        let connected: Vec<usize> = (1..=5)
            .map(|n| isomorphism_classes(n, n, true).unwrap().len())
            .collect();
        assert_eq!(connected, [1, 1, 2, 6, 21]);
    }

    #[test]
    fn bipartitions() {
        let c6 = FamilySpec::parse("cycle:6").unwrap().build().unwrap();
        let (a, b) = bipartition(&c6).unwrap();
        assert_eq!((a.len(), b.len()), (3, 3));
        let c5 = FamilySpec::parse("cycle:5").unwrap().build().unwrap();
        assert!(bipartition(&c5).is_none());
    }

    #[test]
    fn relabeling_search() {
        let from = [VertexSet::from_vertices([0]), VertexSet::from_vertices([1, 2])];
        let mut to = vec![VertexSet::from_vertices([2]), VertexSet::from_vertices([0, 1])];
        to.sort();
        let p = relabeling_between(3, &from, &to).unwrap();
        assert_eq!(p[0], 2);
        assert!(relabeling_between(3, &from, &[VertexSet::from_vertices([0])]).is_none());
    }
}
