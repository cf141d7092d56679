use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

pub const MAX_ORDER: usize = 64;

/// Largest order accepted by [`all_labeled_graphs`].
pub const MAX_LABELED_ORDER: usize = 6;

/// Default order cap for brute-force [`isomorphism`].
pub const DEFAULT_ISO_CAP: usize = 10;

/// Simple undirected graph on vertices `0..n`, stored as open neighborhoods.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<VertexSet>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.order(), self.edges())
    }
}

fn check_order(n: usize) -> Result<()> {
    if n == 0 || n > MAX_ORDER {
        Err(Error::OrderOutOfRange { n, max: MAX_ORDER })
    } else {
        Ok(())
    }
}

impl Graph {
    pub fn build(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        check_order(n)?;
        let mut adj = vec![VertexSet::EMPTY; n];
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::EndpointOutOfRange { v: u, n });
            }
            if v >= n {
                return Err(Error::EndpointOutOfRange { v, n });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Graph { adj })
    }

    /// Edgeless graph of order `n`.
    pub fn empty(n: usize) -> Result<Graph> {
        Graph::build(n, &[])
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.order())
    }

    /// Open neighborhood `N(v)`.
    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    #[inline]
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn min_degree(&self) -> usize {
        (0..self.order()).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.order() {
            for v in self.adj[u].iter().filter(|&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    /// Closed neighborhood `N[v]`.
    #[inline]
    pub fn closed_nbhd(&self, v: usize) -> VertexSet {
        self.adj[v].with(v)
    }

    /// `N[S]`, the union of closed neighborhoods of `s`.
    pub fn closed_nbhd_set(&self, s: VertexSet) -> VertexSet {
        s.iter().fold(s, |acc, v| acc.union(self.adj[v]))
    }

    /// Union of open neighborhoods of `s`.
    pub fn open_nbhd_set(&self, s: VertexSet) -> VertexSet {
        s.iter().fold(VertexSet::EMPTY, |acc, v| acc.union(self.adj[v]))
    }

    pub fn isolated_vertices(&self) -> VertexSet {
        (0..self.order()).filter(|&v| self.adj[v].is_empty()).collect()
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.adj.iter().any(|s| s.is_empty())
    }

    /// Connected component of `G[within]` containing `start`.
    pub fn component_within(&self, start: usize, within: VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let reach = self.open_nbhd_set(frontier).intersection(within);
            frontier = reach.difference(seen);
            seen = seen.union(frontier);
        }
        seen
    }

    /// Vertex sets of the components of `G[within]`, ordered by minimum vertex.
    pub fn components_within(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut rest = within;
        let mut out = Vec::new();
        while let Some(v) = rest.first() {
            let c = self.component_within(v, rest);
            rest = rest.difference(c);
            out.push(c);
        }
        out
    }

    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(self.vertices())
    }

    pub fn is_connected(&self) -> bool {
        self.component_within(0, self.vertices()) == self.vertices()
    }

    /// True iff `G[s]` is connected (the empty set is not).
    pub fn induces_connected(&self, s: VertexSet) -> bool {
        match s.first() {
            Some(v) => self.component_within(v, s) == s,
            None => false,
        }
    }

    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.edge_count() + 1 == self.order()
    }

    pub fn is_independent(&self, s: VertexSet) -> bool {
        s.iter().all(|v| !self.adj[v].intersects(s))
    }

    /// `G[s]` relabeled ascending to `0..|s|`.
    pub fn induced(&self, s: VertexSet) -> Result<Induced> {
        if s.is_empty() {
            return Err(Error::EmptyInducedSet);
        }
        let mapping = s.to_vec();
        let mut index = [usize::MAX; MAX_ORDER];
        for (i, &v) in mapping.iter().enumerate() {
            index[v] = i;
        }
        let adj = mapping
            .iter()
            .map(|&v| self.adj[v].intersection(s).iter().map(|w| index[w]).collect())
            .collect();
        Ok(Induced {
            graph: Graph { adj },
            mapping,
        })
    }

    /// `G - s`, relabeled; `None` when nothing remains.
    pub fn delete(&self, s: VertexSet) -> Option<Induced> {
        self.induced(self.vertices().difference(s)).ok()
    }

    /// Graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        let mut adj = vec![VertexSet::EMPTY; self.order()];
        for v in 0..self.order() {
            adj[perm[v]] = self.adj[v].map(perm);
        }
        Graph { adj }
    }

    fn combine(g: &Graph, h: &Graph, cross: bool) -> Result<Graph> {
        let n = g.order() + h.order();
        if n > MAX_ORDER {
            return Err(Error::OrderOutOfRange { n, max: MAX_ORDER });
        }
        let shift = g.order();
        let g_all = g.vertices();
        let h_all = VertexSet(h.vertices().bits() << shift);
        let mut adj = Vec::with_capacity(n);
        for v in 0..g.order() {
            adj.push(if cross { g.adj[v].union(h_all) } else { g.adj[v] });
        }
        for v in 0..h.order() {
            let shifted = VertexSet(h.adj[v].bits() << shift);
            adj.push(if cross { shifted.union(g_all) } else { shifted });
        }
        Ok(Graph { adj })
    }

    /// `G ∨ H`: disjoint union plus every cross edge; `h` follows `g`.
    pub fn join(g: &Graph, h: &Graph) -> Result<Graph> {
        Graph::combine(g, h, true)
    }

    /// `G ⊔ H`; `h` follows `g`.
    pub fn disjoint_union(g: &Graph, h: &Graph) -> Result<Graph> {
        Graph::combine(g, h, false)
    }

    /// Sorted degree sequence, largest first.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.order()).map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }
}

/// An induced subgraph together with the original vertex of each new index.
#[derive(Debug, Clone)]
pub struct Induced {
    pub graph: Graph,
    pub mapping: Vec<usize>,
}

impl Induced {
    /// Map a set of the induced graph back to the parent's labels.
    pub fn lift(&self, s: VertexSet) -> VertexSet {
        s.map(&self.mapping)
    }
}

/// The pair `(i, j)`, `i < j`, for each bit of a labeled-graph edge mask, in
/// graph6 column order.
fn pair_order(n: usize) -> Vec<(usize, usize)> {
    let mut pairs = Vec::with_capacity(n * (n.saturating_sub(1)) / 2);
    for j in 1..n {
        for i in 0..j {
            pairs.push((i, j));
        }
    }
    pairs
}

/// Every labeled simple graph on `n` vertices, in increasing edge-mask order.
pub fn all_labeled_graphs(n: usize) -> Result<impl Iterator<Item = Graph>> {
    if n == 0 || n > MAX_LABELED_ORDER {
        return Err(Error::OrderOutOfRange {
            n,
            max: MAX_LABELED_ORDER,
        });
    }
    let pairs = pair_order(n);
    let count = 1u64 << pairs.len();
    Ok((0..count).map(move |mask| labeled_graph(n, &pairs, mask)))
}

fn labeled_graph(n: usize, pairs: &[(usize, usize)], mask: u64) -> Graph {
    let mut adj = vec![VertexSet::EMPTY; n];
    for (k, &(i, j)) in pairs.iter().enumerate() {
        if mask >> k & 1 == 1 {
            adj[i].insert(j);
            adj[j].insert(i);
        }
    }
    Graph { adj }
}

/// Labeled graphs of every order `1..=max_n`, smallest order first.
pub fn all_labeled_graphs_up_to(max_n: usize) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        out.extend(all_labeled_graphs(n)?);
    }
    Ok(out)
}

pub fn isomorphism(g: &Graph, h: &Graph) -> Result<Option<Vec<usize>>> {
    isomorphism_with_cap(g, h, DEFAULT_ISO_CAP)
}

/// Adjacency-preserving bijection `perm` with `perm[v_g] = v_h`, if one exists.
///
/// Candidates are pruned by degree and by the multiset of neighbor degrees
/// before the backtracking search.
pub fn isomorphism_with_cap(g: &Graph, h: &Graph, cap: usize) -> Result<Option<Vec<usize>>> {
    for n in [g.order(), h.order()] {
        if n > cap {
            return Err(Error::OrderOutOfRange { n, max: cap });
        }
    }
    if g.order() != h.order()
        || g.edge_count() != h.edge_count()
        || g.degree_sequence() != h.degree_sequence()
    {
        return Ok(None);
    }
    let sig = |x: &Graph, v: usize| {
        let mut nd: Vec<usize> = x.neighbors(v).iter().map(|w| x.degree(w)).collect();
        nd.sort_unstable();
        nd
    };
    let n = g.order();
    let g_sig: Vec<Vec<usize>> = (0..n).map(|v| sig(g, v)).collect();
    let h_sig: Vec<Vec<usize>> = (0..n).map(|v| sig(h, v)).collect();
    let candidates: Vec<Vec<usize>> = (0..n)
        .map(|v| (0..n).filter(|&w| g_sig[v] == h_sig[w]).collect())
        .collect();
    if candidates.iter().any(|c| c.is_empty()) {
        return Ok(None);
    }
    // Most constrained vertices first.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (candidates[v].len(), std::cmp::Reverse(g.degree(v))));

    let mut perm = vec![usize::MAX; n];
    let mut used = VertexSet::EMPTY;
    if extend_iso(g, h, &order, 0, &candidates, &mut perm, &mut used) {
        Ok(Some(perm))
    } else {
        Ok(None)
    }
}

fn extend_iso(
    g: &Graph,
    h: &Graph,
    order: &[usize],
    depth: usize,
    candidates: &[Vec<usize>],
    perm: &mut [usize],
    used: &mut VertexSet,
) -> bool {
    if depth == order.len() {
        return true;
    }
    let v = order[depth];
    'cand: for &w in &candidates[v] {
        if used.contains(w) {
            continue;
        }
        for &u in &order[..depth] {
            if g.adjacent(u, v) != h.adjacent(perm[u], w) {
                continue 'cand;
            }
        }
        perm[v] = w;
        used.insert(w);
        if extend_iso(g, h, order, depth + 1, candidates, perm, used) {
            return true;
        }
        used.remove(w);
        perm[v] = usize::MAX;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::FamilySpec;

    fn p(n: usize) -> Graph {
        FamilySpec::Path(n).build().unwrap()
    }

    #[test]
    fn build_examples() {
        let p4 = Graph::build(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(p4, p(4));
        let k1 = Graph::build(1, &[]).unwrap();
        assert_eq!(k1.order(), 1);
        assert_eq!(k1.edge_count(), 0);
        let c3 = Graph::build(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(c3, FamilySpec::Complete(3).build().unwrap());
    }

    #[test]
    fn build_errors() {
        assert_eq!(
            Graph::build(0, &[]),
            Err(Error::OrderOutOfRange { n: 0, max: 64 })
        );
        assert!(matches!(Graph::build(65, &[]), Err(Error::OrderOutOfRange { .. })));
        assert_eq!(Graph::build(3, &[(1, 1)]), Err(Error::SelfLoop(1)));
        assert_eq!(
            Graph::build(3, &[(0, 3)]),
            Err(Error::EndpointOutOfRange { v: 3, n: 3 })
        );
    }

    #[test]
    fn join_and_union() {
        let c4 = FamilySpec::Cycle(4).build().unwrap();
        let k2 = FamilySpec::Complete(2).build().unwrap();
        let j = Graph::join(&c4, &k2).unwrap();
        assert_eq!(j.order(), 6);
        assert_eq!(j.edge_count(), 13);

        let du = Graph::disjoint_union(&k2, &k2).unwrap();
        assert_eq!(du.edges(), vec![(0, 1), (2, 3)]);

        let e2 = Graph::empty(2).unwrap();
        let e3 = Graph::empty(3).unwrap();
        let k23 = FamilySpec::CompleteBipartite(2, 3).build().unwrap();
        assert_eq!(Graph::join(&e2, &e3).unwrap(), k23);

        let big = Graph::empty(40).unwrap();
        assert!(matches!(
            Graph::join(&big, &big),
            Err(Error::OrderOutOfRange { n: 80, .. })
        ));
    }

    #[test]
    fn components_examples() {
        let k2 = FamilySpec::Complete(2).build().unwrap();
        let du = Graph::disjoint_union(&k2, &k2).unwrap();
        assert_eq!(
            du.components(),
            vec![VertexSet::from_vertices([0, 1]), VertexSet::from_vertices([2, 3])]
        );
        assert_eq!(p(5).components(), vec![VertexSet::full(5)]);
        assert_eq!(
            Graph::empty(3).unwrap().components(),
            vec![
                VertexSet::singleton(0),
                VertexSet::singleton(1),
                VertexSet::singleton(2)
            ]
        );
    }

    #[test]
    fn neighborhoods() {
        let p3 = p(3);
        assert_eq!(p3.closed_nbhd(1), VertexSet::full(3));
        for n in 3..9 {
            assert_eq!(FamilySpec::Cycle(n).build().unwrap().min_degree(), 2);
        }
        let ind = p(4).induced(VertexSet::from_vertices([1, 3])).unwrap();
        assert_eq!(ind.graph.edge_count(), 0);
        assert_eq!(ind.mapping, vec![1, 3]);
        assert_eq!(p(4).induced(VertexSet::EMPTY).unwrap_err(), Error::EmptyInducedSet);
    }

    #[test]
    fn labeled_graph_counts() {
        assert_eq!(all_labeled_graphs(2).unwrap().count(), 2);
        assert_eq!(all_labeled_graphs(3).unwrap().count(), 8);
        assert_eq!(all_labeled_graphs(5).unwrap().count(), 1024);
        assert!(all_labeled_graphs(7).is_err());
        assert!(all_labeled_graphs(0).is_err());
        let first: Vec<Graph> = all_labeled_graphs(3).unwrap().take(2).collect();
        assert_eq!(first[0].edge_count(), 0);
        assert_eq!(first[1].edges(), vec![(0, 1)]);
    }

    #[test]
    fn isomorphism_examples() {
        let p3 = p(3);
        let relabeled = p3.relabel(&[1, 0, 2]);
        let perm = isomorphism(&p3, &relabeled).unwrap().unwrap();
        assert_eq!(p3.relabel(&perm), relabeled);

        let star = FamilySpec::CompleteBipartite(1, 3).build().unwrap();
        assert_eq!(isomorphism(&p(4), &star).unwrap(), None);

        let c6 = FamilySpec::Cycle(6).build().unwrap();
        let k33 = FamilySpec::CompleteBipartite(3, 3).build().unwrap();
        // K_{3,3} minus the matching 0-3, 1-4, 2-5.
        let edges: Vec<(usize, usize)> = k33
            .edges()
            .into_iter()
            .filter(|&(a, b)| b != a + 3)
            .collect();
        let crown = Graph::build(6, &edges).unwrap();
        let perm = isomorphism(&c6, &crown).unwrap().unwrap();
        assert_eq!(c6.relabel(&perm), crown);

        let big = Graph::empty(11).unwrap();
        assert!(isomorphism(&big, &big).is_err());
    }
}
