//! Private blocking sets, XIr-sets, and the parameter chain
//! `xir <= X <= upper X <= XIR` with witnesses.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::blocking::{designated_family, BlockingFamily};
use crate::closure::{x_set_table, ClosureRule};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::to_graph6;
use crate::vertex_set::{subsets, VertexSet};
use crate::{Budget, SCHEMA_VERSION};

/// A parameter value with a set attaining it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Witnessed {
    pub value: usize,
    pub witness: VertexSet,
}

impl Witnessed {
    fn of(witness: VertexSet) -> Witnessed {
        Witnessed {
            value: witness.len(),
            witness,
        }
    }
}

/// Smallest and largest sets, ties broken by lowest bitmask.
fn extremes(sets: impl IntoIterator<Item = VertexSet>) -> Option<(Witnessed, Witnessed)> {
    let mut lo: Option<VertexSet> = None;
    let mut hi: Option<VertexSet> = None;
    for s in sets {
        if lo.is_none_or(|l| s.len() < l.len() || (s.len() == l.len() && s < l)) {
            lo = Some(s);
        }
        if hi.is_none_or(|h| s.len() > h.len() || (s.len() == h.len() && s < h)) {
            hi = Some(s);
        }
    }
    Some((Witnessed::of(lo?), Witnessed::of(hi?)))
}

/// The lowest-bitmask member `R` with `S ∩ R = {u}`.
pub fn private_set(family: &BlockingFamily, s: VertexSet, u: usize) -> Result<Option<VertexSet>> {
    if !s.contains(u) {
        return Err(Error::VertexNotInSet(u));
    }
    let target = VertexSet::singleton(u);
    Ok(family.iter().find(|r| r.intersection(s) == target))
}

/// Vertices of `s` that have a private member.
fn privately_blocked(family: &BlockingFamily, s: VertexSet) -> VertexSet {
    let mut marked = VertexSet::EMPTY;
    for r in family.iter() {
        let hit = r.intersection(s);
        if hit.len() == 1 {
            marked = marked.union(hit);
            if marked == s {
                break;
            }
        }
    }
    marked
}

/// Every element of `s` has a private member. The empty set qualifies.
pub fn is_xir_set(family: &BlockingFamily, s: VertexSet) -> bool {
    privately_blocked(family, s) == s
}

/// XIr and no single-vertex extension is XIr. XIr-sets are closed under
/// subsets, so this is maximality under inclusion.
pub fn is_maximal_xir_set(family: &BlockingFamily, s: VertexSet) -> bool {
    is_xir_set(family, s)
        && VertexSet::full(family.order())
            .difference(s)
            .iter()
            .all(|v| !is_xir_set(family, s.with(v)))
}

/// `is_xir_set` for every subset, indexed by bitmask.
pub fn xir_table(family: &BlockingFamily, budget: Budget) -> Result<Vec<bool>> {
    let n = family.order();
    budget.check(n)?;
    let mut table = vec![false; 1 << n];
    table[0] = true;
    for bits in 1u64..(1 << n) {
        // Every subset of an XIr-set is one, so test the largest proper
        // subset obtained by dropping the top vertex first.
        let top = 63 - bits.leading_zeros() as u64;
        if !table[(bits & !(1 << top)) as usize] {
            continue;
        }
        table[bits as usize] = is_xir_set(family, VertexSet(bits));
    }
    Ok(table)
}

fn maximal_in_table(table: &[bool], n: usize) -> Vec<VertexSet> {
    subsets(n)
        .filter(|s| {
            table[s.bits() as usize]
                && s.complement(n)
                    .iter()
                    .all(|v| !table[s.with(v).bits() as usize])
        })
        .collect()
}

pub fn enumerate_maximal_xir_sets(family: &BlockingFamily, budget: Budget) -> Result<Vec<VertexSet>> {
    let table = xir_table(family, budget)?;
    Ok(maximal_in_table(&table, family.order()))
}

/// X-sets none of whose single-vertex deletions is an X-set.
pub fn minimal_x_sets(rule: ClosureRule, g: &Graph, budget: Budget) -> Result<Vec<VertexSet>> {
    let table = x_set_table(rule, g, budget)?;
    Ok(minimal_in_table(&table, g.order()))
}

fn minimal_in_table(table: &[bool], n: usize) -> Vec<VertexSet> {
    subsets(n)
        .filter(|s| table[s.bits() as usize] && s.iter().all(|v| !table[s.without(v).bits() as usize]))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParameterReport {
    pub graph_g6: String,
    pub parameter: ClosureRule,
    pub xir: Witnessed,
    pub x: Witnessed,
    pub x_upper: Witnessed,
    pub xir_upper: Witnessed,
}

impl ParameterReport {
    pub fn values(&self) -> [usize; 4] {
        [self.xir.value, self.x.value, self.x_upper.value, self.xir_upper.value]
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("report serializes")
    }
}

#[derive(Serialize)]
struct ReportWitnesses {
    xir: VertexSet,
    x: VertexSet,
    x_upper: VertexSet,
    xir_upper: VertexSet,
}

#[derive(Serialize)]
struct ReportDoc<'a> {
    schema: u32,
    graph_g6: &'a str,
    parameter: ClosureRule,
    xir: usize,
    x: usize,
    x_upper: usize,
    xir_upper: usize,
    witnesses: ReportWitnesses,
}

impl Serialize for ParameterReport {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ReportDoc {
            schema: SCHEMA_VERSION,
            graph_g6: &self.graph_g6,
            parameter: self.parameter,
            xir: self.xir.value,
            x: self.x.value,
            x_upper: self.x_upper.value,
            xir_upper: self.xir_upper.value,
            witnesses: ReportWitnesses {
                xir: self.xir.witness,
                x: self.x.witness,
                x_upper: self.x_upper.witness,
                xir_upper: self.xir_upper.witness,
            },
        }
        .serialize(s)
    }
}

/// The four numbers for `parameter`, using its designated blocking family.
pub fn report(g: &Graph, parameter: ClosureRule, budget: Budget) -> Result<ParameterReport> {
    let family = designated_family(parameter, g, budget)?;
    report_with_family(g, &family, budget)
}

/// As [`report`] but with the irredundance numbers taken over `family`.
pub fn report_with_family(g: &Graph, family: &BlockingFamily, budget: Budget) -> Result<ParameterReport> {
    let parameter = family.parameter();
    let (x, x_upper) = extremes(minimal_x_sets(parameter, g, budget)?).expect("V is always an X-set");
    let (xir, xir_upper) =
        extremes(enumerate_maximal_xir_sets(family, budget)?).expect("some XIr-set is maximal");
    debug_assert!(is_maximal_xir_set(family, xir.witness));
    debug_assert!(is_maximal_xir_set(family, xir_upper.witness));
    Ok(ParameterReport {
        graph_g6: to_graph6(g),
        parameter,
        xir,
        x,
        x_upper,
        xir_upper,
    })
}

/// The Extended Domination Chain
/// `dir <= gamma <= lower alpha <= alpha <= upper gamma <= DIR <= VCIR`,
/// plus `tau`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainReport {
    pub graph_g6: String,
    pub dir: Witnessed,
    pub gamma: Witnessed,
    pub lower_alpha: Witnessed,
    pub alpha: Witnessed,
    pub gamma_upper: Witnessed,
    pub dir_upper: Witnessed,
    pub vcir_upper: Witnessed,
    pub tau: Witnessed,
    /// The chain only holds without isolated vertices.
    pub has_isolated_vertices: bool,
}

impl ChainReport {
    /// The seven chain entries in order.
    pub fn chain(&self) -> [usize; 7] {
        [
            self.dir.value,
            self.gamma.value,
            self.lower_alpha.value,
            self.alpha.value,
            self.gamma_upper.value,
            self.dir_upper.value,
            self.vcir_upper.value,
        ]
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("report serializes")
    }
}

impl Serialize for ChainReport {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let entries = [
            ("dir", self.dir),
            ("gamma", self.gamma),
            ("lower_alpha", self.lower_alpha),
            ("alpha", self.alpha),
            ("gamma_upper", self.gamma_upper),
            ("DIR", self.dir_upper),
            ("VCIR", self.vcir_upper),
            ("tau", self.tau),
        ];
        let mut m = s.serialize_map(None)?;
        m.serialize_entry("schema", &SCHEMA_VERSION)?;
        m.serialize_entry("graph_g6", &self.graph_g6)?;
        for (k, w) in entries {
            m.serialize_entry(k, &w.value)?;
        }
        m.serialize_entry("has_isolated_vertices", &self.has_isolated_vertices)?;
        let witnesses: serde_json::Map<String, serde_json::Value> = entries
            .iter()
            .map(|(k, w)| (k.to_string(), serde_json::to_value(w.witness).unwrap()))
            .collect();
        m.serialize_entry("witnesses", &witnesses)?;
        m.end()
    }
}

pub fn domination_chain(g: &Graph, budget: Budget) -> Result<ChainReport> {
    budget.check(g.order())?;
    let dom = report(g, ClosureRule::Domination, budget)?;
    let vc = report(g, ClosureRule::VertexCover, budget)?;
    let maximal_independent = subsets(g.order()).filter(|&s| {
        g.is_independent(s) && g.closed_nbhd_set(s) == g.vertices()
    });
    let (lower_alpha, _) = extremes(maximal_independent).expect("some independent set is maximal");
    let (_, alpha) = extremes(subsets(g.order()).filter(|&s| g.is_independent(s))).expect("the empty set is independent");
    Ok(ChainReport {
        graph_g6: dom.graph_g6,
        dir: dom.xir,
        gamma: dom.x,
        lower_alpha,
        alpha,
        gamma_upper: dom.x_upper,
        dir_upper: dom.xir_upper,
        vcir_upper: vc.xir_upper,
        tau: vc.x,
        has_isolated_vertices: g.has_isolated_vertex(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AuxDomination {
    /// `G[D]` connected and every vertex outside `D` has two neighbors in it.
    Connected2Dom,
    /// Every vertex has two neighbors in `D`.
    Total2Dom,
}

impl fmt::Display for AuxDomination {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AuxDomination::Connected2Dom => "connected_2_dom",
            AuxDomination::Total2Dom => "total_2_dom",
        })
    }
}

impl FromStr for AuxDomination {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.replace('-', "_").as_str() {
            "connected_2_dom" => Ok(AuxDomination::Connected2Dom),
            "total_2_dom" => Ok(AuxDomination::Total2Dom),
            other => Err(format!("unknown domination variant `{other}`")),
        }
    }
}

pub fn is_aux_dominating(g: &Graph, kind: AuxDomination, d: VertexSet) -> bool {
    let two_in_d = |v: usize| g.neighbors(v).intersection(d).len() >= 2;
    match kind {
        AuxDomination::Connected2Dom => {
            !d.is_empty() && g.induces_connected(d) && g.vertices().difference(d).iter().all(two_in_d)
        }
        AuxDomination::Total2Dom => (0..g.order()).all(two_in_d),
    }
}

/// Minimum size of a set of the given kind, or `None` when no set
/// qualifies.
pub fn aux_domination(g: &Graph, kind: AuxDomination, budget: Budget) -> Result<Option<Witnessed>> {
    budget.check(g.order())?;
    Ok(extremes(subsets(g.order()).filter(|&d| is_aux_dominating(g, kind, d))).map(|(lo, _)| lo))
}

pub fn is_vertex_cover(g: &Graph, s: VertexSet) -> bool {
    g.edges().iter().all(|&(u, v)| s.contains(u) || s.contains(v))
}

/// Turns a smallest maximal VCIr-set into a vertex cover of the same size.
///
/// While an edge `xy` is uncovered, some `z ∈ S ∩ N(x)` has `zx` as its
/// only private edge, and `S` may become `(S ∪ {x}) ∖ {z}`. Not every such
/// exchange keeps `S` maximal, so only exchanges that do are taken, with
/// backtracking when one leads nowhere. Fails with
/// [`Error::NoCoverOfVcirSize`] when no cover of size `vcir` exists, as for
/// the triangular prism.
pub fn vcir_to_cover(g: &Graph, s: VertexSet, budget: Budget) -> Result<VertexSet> {
    let family = designated_family(ClosureRule::VertexCover, g, budget)?;
    let maximal = enumerate_maximal_xir_sets(&family, budget)?;
    let vcir = maximal.iter().map(|m| m.len()).min().unwrap_or(0);
    if s.len() != vcir || !maximal.contains(&s) {
        return Err(Error::NotAVcirSet);
    }
    let uncovered = |s: VertexSet| {
        g.edges()
            .into_iter()
            .filter(|&(u, v)| !s.contains(u) && !s.contains(v))
            .collect::<Vec<_>>()
    };
    let mut seen = std::collections::HashSet::from([s]);
    let mut stack = vec![s];
    while let Some(s) = stack.pop() {
        let open = uncovered(s);
        if open.is_empty() {
            return Ok(s);
        }
        for &(a, b) in open.iter().rev() {
            for x in [b, a] {
                for z in g.neighbors(x).intersection(s).iter() {
                    if g.neighbors(z).difference(s) != VertexSet::singleton(x) {
                        continue;
                    }
                    let next = s.with(x).without(z);
                    if uncovered(next).len() < open.len() && is_xir_set(&family, next) && seen.insert(next) {
                        stack.push(next);
                    }
                }
            }
        }
    }
    Err(Error::NoCoverOfVcirSize(vcir))
}
