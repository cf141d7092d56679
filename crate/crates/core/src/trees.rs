//! Tree corpora: labeled trees from Prüfer sequences and one representative
//! per isomorphism class.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order for which every labeled tree is streamed (`n^(n-2)` of them).
pub const MAX_LABELED_TREE_ORDER: usize = 10;

/// Largest order accepted by [`unlabeled_trees`].
pub const MAX_UNLABELED_TREE_ORDER: usize = 16;

/// The tree with the given Prüfer sequence on `seq.len() + 2` vertices.
pub fn prufer_decode(seq: &[usize]) -> Result<Graph> {
    let n = seq.len() + 2;
    if let Some(&v) = seq.iter().find(|&&v| v >= n) {
        return Err(Error::EndpointOutOfRange { v, n });
    }
    let mut degree = vec![1usize; n];
    for &v in seq {
        degree[v] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &v in seq {
        let leaf = (0..n).find(|&u| degree[u] == 1).expect("a leaf remains");
        edges.push((leaf, v));
        degree[leaf] -= 1;
        degree[v] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&u| degree[u] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::build(n, &edges)
}

/// Every labeled tree on `n` vertices, `n^(n-2)` in all.
pub fn labeled_trees(n: usize) -> Result<Box<dyn Iterator<Item = Graph>>> {
    if n == 0 || n > MAX_LABELED_TREE_ORDER {
        return Err(Error::OrderBudgetExceeded {
            n,
            budget: MAX_LABELED_TREE_ORDER,
        });
    }
    if n == 1 {
        return Ok(Box::new(std::iter::once(Graph::empty(1)?)));
    }
    let len = n - 2;
    let total = n.pow(len as u32);
    Ok(Box::new((0..total).map(move |mut code| {
        let mut seq = vec![0; len];
        for slot in seq.iter_mut().rev() {
            *slot = code % n;
            code /= n;
        }
        prufer_decode(&seq).expect("digits are in range")
    })))
}

/// Labeled trees of every order `1..=max_n`.
pub fn generate_trees(max_n: usize) -> Result<impl Iterator<Item = Graph>> {
    if max_n > MAX_LABELED_TREE_ORDER {
        return Err(Error::OrderBudgetExceeded {
            n: max_n,
            budget: MAX_LABELED_TREE_ORDER,
        });
    }
    let streams = (1..=max_n).map(labeled_trees).collect::<Result<Vec<_>>>()?;
    Ok(streams.into_iter().flatten())
}

/// Centers of a tree: the one or two vertices left after repeatedly
/// stripping all leaves.
fn centers(t: &Graph) -> Vec<usize> {
    let n = t.order();
    let mut degree: Vec<usize> = (0..n).map(|v| t.degree(v)).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] <= 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &leaf in &layer {
            for u in t.neighbors(leaf).iter() {
                degree[u] -= 1;
                if degree[u] == 1 {
                    next.push(u);
                }
            }
        }
        layer = next;
    }
    layer.sort_unstable();
    layer
}

fn rooted_code(t: &Graph, v: usize, parent: Option<usize>) -> String {
    let mut kids: Vec<String> = t
        .neighbors(v)
        .iter()
        .filter(|&u| Some(u) != parent)
        .map(|u| rooted_code(t, u, Some(v)))
        .collect();
    kids.sort();
    format!("({})", kids.concat())
}

/// A string equal for two trees exactly when they are isomorphic.
pub fn canonical_tree_code(t: &Graph) -> Option<String> {
    if !t.is_tree() {
        return None;
    }
    centers(t).into_iter().map(|c| rooted_code(t, c, None)).min()
}

/// One tree per isomorphism class on `n` vertices, grown leaf by leaf from
/// the smaller classes. Sorted by canonical code.
pub fn unlabeled_trees(n: usize) -> Result<Vec<Graph>> {
    if n == 0 || n > MAX_UNLABELED_TREE_ORDER {
        return Err(Error::OrderBudgetExceeded {
            n,
            budget: MAX_UNLABELED_TREE_ORDER,
        });
    }
    let mut current = vec![Graph::empty(1)?];
    for k in 1..n {
        let mut next: BTreeMap<String, Graph> = BTreeMap::new();
        for t in &current {
            let edges = t.edges();
            for v in 0..k {
                let mut grown = edges.clone();
                grown.push((v, k));
                let g = Graph::build(k + 1, &grown)?;
                let code = canonical_tree_code(&g).expect("adding a leaf keeps a tree");
                next.entry(code).or_insert(g);
            }
        }
        current = next.into_values().collect();
    }
    Ok(current)
}
