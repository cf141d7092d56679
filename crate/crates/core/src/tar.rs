//! Token addition/removal (TAR) reconfiguration graphs: nodes are the
//! qualifying vertex sets, edges join sets differing in one vertex.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::blocking::designated_family;
use crate::closure::{x_set_table, ClosureRule};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::to_graph6;
use crate::irredundance::xir_table;
use crate::vertex_set::{subsets, VertexSet};
use crate::{Budget, SCHEMA_VERSION};

/// Node budget for [`tar_isomorphic`]; adjacency rows are single words.
pub const DEFAULT_TAR_ISO_CAP: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TarKind {
    XSets,
    XirSets,
    IndependentSets,
}

impl std::str::FromStr for TarKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_lowercase().replace('-', "_").as_str() {
            "x_sets" | "xsets" | "x" => Ok(TarKind::XSets),
            "xir_sets" | "xirsets" | "xir" => Ok(TarKind::XirSets),
            "independent_sets" | "independent" => Ok(TarKind::IndependentSets),
            other => Err(format!("unknown TAR kind `{other}`")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TarGraph {
    pub schema: u32,
    pub base_g6: String,
    pub kind: TarKind,
    pub parameter: Option<ClosureRule>,
    /// Sorted by bitmask.
    pub nodes: Vec<VertexSet>,
    /// Index pairs `(i, j)` with `i < j`, sorted.
    pub edges: Vec<(usize, usize)>,
}

impl TarGraph {
    pub fn from_sets(
        base_g6: String,
        kind: TarKind,
        parameter: Option<ClosureRule>,
        mut nodes: Vec<VertexSet>,
    ) -> TarGraph {
        nodes.sort();
        nodes.dedup();
        let index: HashMap<VertexSet, usize> = nodes.iter().enumerate().map(|(i, &s)| (s, i)).collect();
        let span = nodes.iter().fold(VertexSet::EMPTY, |acc, s| acc.union(*s));
        let top = span.iter().last().map_or(0, |v| v + 1);
        let mut edges = Vec::new();
        for (i, s) in nodes.iter().enumerate() {
            for v in 0..top {
                let t = if s.contains(v) { s.without(v) } else { s.with(v) };
                if let Some(&j) = index.get(&t) {
                    if i < j {
                        edges.push((i, j));
                    }
                }
            }
        }
        edges.sort();
        TarGraph {
            schema: SCHEMA_VERSION,
            base_g6,
            kind,
            parameter,
            nodes,
            edges,
        }
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn index_of(&self, s: VertexSet) -> Option<usize> {
        self.nodes.binary_search(&s).ok()
    }

    /// Edges as pairs of node sets, smaller bitmask first.
    pub fn edge_sets(&self) -> Vec<(VertexSet, VertexSet)> {
        self.edges.iter().map(|&(i, j)| (self.nodes[i], self.nodes[j])).collect()
    }

    /// Node set and edge set are those of `other` restricted to the nodes
    /// of `self`.
    pub fn is_induced_in(&self, other: &TarGraph) -> bool {
        let Some(map) = self
            .nodes
            .iter()
            .map(|&s| other.index_of(s))
            .collect::<Option<Vec<usize>>>()
        else {
            return false;
        };
        let mine: HashSet<(usize, usize)> = self.edges.iter().map(|&(i, j)| (map[i], map[j])).collect();
        let theirs: HashSet<(usize, usize)> = other
            .edges
            .iter()
            .copied()
            .filter(|&(a, b)| self.index_of(other.nodes[a]).is_some() && self.index_of(other.nodes[b]).is_some())
            .collect();
        mine == theirs
    }

    fn adjacency(&self) -> Vec<u64> {
        let mut adj = vec![0u64; self.nodes.len()];
        for &(i, j) in &self.edges {
            adj[i] |= 1 << j;
            adj[j] |= 1 << i;
        }
        adj
    }
}

/// The TAR graph of the X-sets, the XIr-sets (over the designated family,
/// all of them, not only the maximal ones), or the independent sets.
pub fn build_tar(g: &Graph, kind: TarKind, parameter: Option<ClosureRule>, budget: Budget) -> Result<TarGraph> {
    budget.check(g.order())?;
    let need = || {
        parameter.ok_or_else(|| Error::InvalidFamilyParams(format!("TAR kind {kind:?} needs a parameter")))
    };
    let nodes: Vec<VertexSet> = match kind {
        TarKind::XSets => {
            let table = x_set_table(need()?, g, budget)?;
            subsets(g.order()).filter(|s| table[s.bits() as usize]).collect()
        }
        TarKind::XirSets => {
            let family = designated_family(need()?, g, budget)?;
            let table = xir_table(&family, budget)?;
            subsets(g.order()).filter(|s| table[s.bits() as usize]).collect()
        }
        TarKind::IndependentSets => subsets(g.order()).filter(|&s| g.is_independent(s)).collect(),
    };
    let parameter = if kind == TarKind::IndependentSets { None } else { parameter };
    Ok(TarGraph::from_sets(to_graph6(g), kind, parameter, nodes))
}

/// Stable DOT text; labels list the vertices of each node set.
pub fn export_dot(t: &TarGraph) -> String {
    let mut out = String::new();
    let param = t.parameter.map_or("none".to_string(), |p| p.to_string());
    let kind = serde_json::to_value(t.kind).unwrap();
    let _ = writeln!(out, "graph tar {{");
    let _ = writeln!(
        out,
        "  // base {} kind {} parameter {}",
        t.base_g6,
        kind.as_str().unwrap_or(""),
        param
    );
    for (i, s) in t.nodes.iter().enumerate() {
        let _ = writeln!(out, "  n{i} [label=\"{s}\"];");
    }
    for (i, j) in &t.edges {
        let _ = writeln!(out, "  n{i} -- n{j};");
    }
    out.push_str("}\n");
    out
}

pub fn tar_isomorphic(t1: &TarGraph, t2: &TarGraph) -> Result<Option<Vec<usize>>> {
    tar_isomorphic_with_cap(t1, t2, DEFAULT_TAR_ISO_CAP)
}

/// An adjacency-preserving bijection `map[i] = j` from the nodes of `t1`
/// to those of `t2`, found by color refinement then backtracking.
pub fn tar_isomorphic_with_cap(t1: &TarGraph, t2: &TarGraph, cap: usize) -> Result<Option<Vec<usize>>> {
    let size = t1.node_count().max(t2.node_count());
    let cap = cap.min(64);
    if size > cap {
        return Err(Error::BudgetExceeded { size, budget: cap });
    }
    if t1.node_count() != t2.node_count() || t1.edge_count() != t2.edge_count() {
        return Ok(None);
    }
    Ok(find_isomorphism(&t1.adjacency(), &t2.adjacency()))
}

/// Refines degree colors on both graphs together until stable.
fn refine(a1: &[u64], a2: &[u64]) -> (Vec<usize>, Vec<usize>) {
    let mut c1: Vec<usize> = a1.iter().map(|r| r.count_ones() as usize).collect();
    let mut c2: Vec<usize> = a2.iter().map(|r| r.count_ones() as usize).collect();
    let mut classes = usize::MAX;
    loop {
        let signature = |adj: &[u64], col: &[usize], v: usize| {
            let mut nb: Vec<usize> = VertexSet(adj[v]).iter().map(|u| col[u]).collect();
            nb.sort_unstable();
            (col[v], nb)
        };
        let s1: Vec<_> = (0..a1.len()).map(|v| signature(a1, &c1, v)).collect();
        let s2: Vec<_> = (0..a2.len()).map(|v| signature(a2, &c2, v)).collect();
        let mut ids = BTreeMap::new();
        for s in s1.iter().chain(&s2) {
            let next = ids.len();
            ids.entry(s.clone()).or_insert(next);
        }
        c1 = s1.iter().map(|s| ids[s]).collect();
        c2 = s2.iter().map(|s| ids[s]).collect();
        if ids.len() == classes {
            return (c1, c2);
        }
        classes = ids.len();
    }
}

fn find_isomorphism(a1: &[u64], a2: &[u64]) -> Option<Vec<usize>> {
    let n = a1.len();
    let (c1, c2) = refine(a1, a2);
    let histogram = |c: &[usize]| {
        let mut h = c.to_vec();
        h.sort_unstable();
        h
    };
    if histogram(&c1) != histogram(&c2) {
        return None;
    }
    let class_size = |c: usize| c1.iter().filter(|&&x| x == c).count();
    // Visit order: rarest color first, then vertices with most visited
    // neighbors, so adjacency constraints bite early.
    let mut order: Vec<usize> = Vec::with_capacity(n);
    let mut placed = 0u64;
    while order.len() < n {
        let next = (0..n)
            .filter(|&v| placed & (1 << v) == 0)
            .max_by_key(|&v| {
                (
                    (a1[v] & placed).count_ones(),
                    std::cmp::Reverse(class_size(c1[v])),
                    std::cmp::Reverse(v),
                )
            })
            .unwrap();
        order.push(next);
        placed |= 1 << next;
    }
    let mut map = vec![usize::MAX; n];
    let mut used = 0u64;
    fn extend(
        k: usize,
        order: &[usize],
        a1: &[u64],
        a2: &[u64],
        c1: &[usize],
        c2: &[usize],
        map: &mut [usize],
        used: &mut u64,
    ) -> bool {
        if k == order.len() {
            return true;
        }
        let v = order[k];
        for w in 0..a2.len() {
            if *used & (1 << w) != 0 || c2[w] != c1[v] {
                continue;
            }
            let consistent = order[..k]
                .iter()
                .all(|&u| (a1[v] >> u & 1) == (a2[w] >> map[u] & 1));
            if !consistent {
                continue;
            }
            map[v] = w;
            *used |= 1 << w;
            if extend(k + 1, order, a1, a2, c1, c2, map, used) {
                return true;
            }
            *used &= !(1 << w);
            map[v] = usize::MAX;
        }
        false
    }
    extend(0, &order, a1, a2, &c1, &c2, &mut map, &mut used).then_some(map)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::FamilySpec;
    use crate::fixtures;

    fn build(spec: &str) -> Graph {
        FamilySpec::parse(spec).unwrap().build().unwrap()
    }

    fn tar(g: &Graph, kind: TarKind, p: ClosureRule) -> TarGraph {
        build_tar(g, kind, Some(p), Budget::default()).unwrap()
    }

    fn assert_iso(t1: &TarGraph, t2: &TarGraph, map: &[usize]) {
        let mut image: Vec<(usize, usize)> = t1
            .edges
            .iter()
            .map(|&(i, j)| (map[i].min(map[j]), map[i].max(map[j])))
            .collect();
        image.sort();
        assert_eq!(image, t2.edges);
    }

    #[test]
    fn star_tars_match_drawing() {
        let star = fixtures::get("fig1").unwrap().graph;
        for (name, kind) in [("fig1_z", TarKind::XSets), ("fig1_zir", TarKind::XirSets)] {
            let t = tar(&star, kind, ClosureRule::Standard);
            let drawn = fixtures::tar_drawing(name).unwrap();
            assert_eq!(t.nodes, drawn.node_sets());
            assert_eq!(t.edge_sets(), drawn.edge_sets());
            assert_eq!((t.node_count(), t.edge_count()), (8, 10));
        }
    }

    #[test]
    fn hypercube_edges() {
        let g = build("cbip:2,3");
        let t = tar(&g, TarKind::XirSets, ClosureRule::VertexCover);
        for (a, b) in t.edge_sets() {
            assert_eq!(a.symmetric_difference(b).len(), 1);
        }
        for i in 0..t.node_count() {
            for j in i + 1..t.node_count() {
                if t.nodes[i].symmetric_difference(t.nodes[j]).len() == 1 {
                    assert!(t.edges.binary_search(&(i, j)).is_ok());
                }
            }
        }
    }

    #[test]
    fn dot_output() {
        let star = fixtures::get("fig1").unwrap().graph;
        let dot = export_dot(&tar(&star, TarKind::XirSets, ClosureRule::Standard));
        assert!(dot.starts_with("graph tar {\n"));
        assert_eq!(dot.matches(" -- ").count(), 10);
        assert_eq!(dot.matches("[label=").count(), 8);
        assert!(dot.contains("n0 [label=\"{}\"];"));

        let empty = TarGraph::from_sets("@".into(), TarKind::XSets, Some(ClosureRule::Standard), vec![]);
        assert_eq!(export_dot(&empty).lines().count(), 3);
        let k1 = build("complete:1");
        let single = tar(&k1, TarKind::XSets, ClosureRule::Standard);
        assert_eq!(single.node_count(), 1);
        assert_eq!(export_dot(&single).matches("[label=").count(), 1);
    }

    #[test]
    fn isomorphism_examples() {
        let two_k2 = build("du(complete:2,complete:2)");
        let p4 = build("path:4");
        let a = tar(&two_k2, TarKind::XirSets, ClosureRule::VertexCover);
        let b = tar(&p4, TarKind::XirSets, ClosureRule::VertexCover);
        let map = tar_isomorphic(&a, &b).unwrap().expect("isomorphic");
        assert_iso(&a, &b, &map);
        let c = tar(&p4, TarKind::XSets, ClosureRule::VertexCover);
        assert_eq!(tar_isomorphic(&b, &c).unwrap(), None);
        let id = tar_isomorphic(&b, &b).unwrap().unwrap();
        assert_iso(&b, &b, &id);
    }

    #[test]
    fn isomorphism_budget() {
        let g = build("empty:7");
        let t = tar(&g, TarKind::XirSets, ClosureRule::VertexCover);
        assert_eq!(t.node_count(), 1);
        let big = build_tar(&g, TarKind::IndependentSets, None, Budget::default()).unwrap();
        assert_eq!(big.node_count(), 128);
        assert!(matches!(tar_isomorphic(&big, &big), Err(Error::BudgetExceeded { size: 128, budget: 64 })));
    }

    #[test]
    fn json_round_trip() {
        let t = tar(&build("path:3"), TarKind::XSets, ClosureRule::Standard);
        let v = serde_json::to_value(&t).unwrap();
        assert_eq!(v["schema"], 1);
        assert_eq!(v["kind"], "x_sets");
        let back: TarGraph = serde_json::from_value(v).unwrap();
        assert_eq!(back, t);
    }
}
