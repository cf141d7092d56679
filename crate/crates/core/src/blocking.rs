//! Blocking families defined directly: forts of the three forcing rules,
//! closed neighborhoods, and edges.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::closure::{self, ClosureRule};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::{subsets, VertexSet};
use crate::{Budget, SCHEMA_VERSION};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    EnumeratedForts,
    ConnectedPsdForts,
    Neighborhoods,
    Edges,
    ClosureDerived,
    Generators,
    MinimalSets,
}

impl Provenance {
    pub fn name(self) -> &'static str {
        match self {
            Provenance::EnumeratedForts => "enumerated_forts",
            Provenance::ConnectedPsdForts => "connected_psd_forts",
            Provenance::Neighborhoods => "neighborhoods",
            Provenance::Edges => "edges",
            Provenance::ClosureDerived => "closure_derived",
            Provenance::Generators => "generators",
            Provenance::MinimalSets => "minimal_sets",
        }
    }
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Provenance {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Ok(match s.to_ascii_lowercase().replace('-', "_").as_str() {
            "enumerated_forts" | "forts" => Provenance::EnumeratedForts,
            "connected_psd_forts" | "connected" => Provenance::ConnectedPsdForts,
            "neighborhoods" => Provenance::Neighborhoods,
            "edges" => Provenance::Edges,
            "closure_derived" | "derived" => Provenance::ClosureDerived,
            "generators" => Provenance::Generators,
            "minimal_sets" | "minimal" => Provenance::MinimalSets,
            other => return Err(format!("unknown provenance `{other}`")),
        })
    }
}

/// A sorted, deduplicated list of blocking sets for one parameter.
///
/// `complete` records whether the list is an entire family for its
/// provenance (every enumerated family is) or an arbitrary user-supplied list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockingFamily {
    parameter: ClosureRule,
    provenance: Provenance,
    n: usize,
    members: Vec<VertexSet>,
    complete: bool,
}

#[derive(Serialize, Deserialize)]
struct FamilyDoc {
    schema: u32,
    parameter: ClosureRule,
    provenance: Provenance,
    n: usize,
    members: Vec<VertexSet>,
}

impl BlockingFamily {
    pub(crate) fn new_complete(
        parameter: ClosureRule,
        provenance: Provenance,
        n: usize,
        members: Vec<VertexSet>,
    ) -> BlockingFamily {
        let mut fam = BlockingFamily::from_members(parameter, provenance, n, members);
        fam.complete = true;
        fam
    }

    /// Wraps an arbitrary list; empty sets are dropped.
    pub fn from_members(
        parameter: ClosureRule,
        provenance: Provenance,
        n: usize,
        mut members: Vec<VertexSet>,
    ) -> BlockingFamily {
        members.retain(|m| !m.is_empty());
        members.sort();
        members.dedup();
        BlockingFamily {
            parameter,
            provenance,
            n,
            members,
            complete: false,
        }
    }

    pub fn parameter(&self) -> ClosureRule {
        self.parameter
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn members(&self) -> &[VertexSet] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn is_complete(&self) -> bool {
        self.complete
    }

    pub fn contains(&self, s: VertexSet) -> bool {
        self.members.binary_search(&s).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = VertexSet> + '_ {
        self.members.iter().copied()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(FamilyDoc {
            schema: SCHEMA_VERSION,
            parameter: self.parameter,
            provenance: self.provenance,
            n: self.n,
            members: self.members.clone(),
        })
        .expect("family serializes")
    }

    /// Parses the JSON form. The result is never marked complete.
    pub fn from_json(value: &serde_json::Value) -> Result<BlockingFamily> {
        let doc: FamilyDoc =
            serde_json::from_value(value.clone()).map_err(|e| Error::Json(e.to_string()))?;
        if doc.schema != SCHEMA_VERSION {
            return Err(Error::Json(format!("unsupported schema {}", doc.schema)));
        }
        if let Some(m) = doc.members.iter().find(|m| !m.is_subset(VertexSet::full(doc.n))) {
            return Err(Error::Json(format!("member {m} exceeds order {}", doc.n)));
        }
        Ok(BlockingFamily::from_members(
            doc.parameter,
            doc.provenance,
            doc.n,
            doc.members,
        ))
    }
}

impl Serialize for BlockingFamily {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        FamilyDoc {
            schema: SCHEMA_VERSION,
            parameter: self.parameter,
            provenance: self.provenance,
            n: self.n,
            members: self.members.clone(),
        }
        .serialize(s)
    }
}

/// Nonempty, and no vertex outside `f` has exactly one neighbor in `f`.
pub fn is_standard_fort(g: &Graph, f: VertexSet) -> bool {
    !f.is_empty()
        && g.vertices()
            .difference(f)
            .iter()
            .all(|v| g.neighbors(v).intersection(f).len() != 1)
}

/// Nonempty, and every component of `G[f]` is a standard fort.
pub fn is_psd_fort(g: &Graph, f: VertexSet) -> bool {
    !f.is_empty()
        && g
            .components_within(f)
            .into_iter()
            .all(|c| is_standard_fort(g, c))
}

pub fn is_connected_psd_fort(g: &Graph, f: VertexSet) -> bool {
    !f.is_empty() && g.induces_connected(f) && is_standard_fort(g, f)
}

/// Nonempty, and no vertex at all, inside `f` or not, has exactly one
/// neighbor in `f`.
pub fn is_skew_fort(g: &Graph, f: VertexSet) -> bool {
    !f.is_empty() && (0..g.order()).all(|v| g.neighbors(v).intersection(f).len() != 1)
}

/// `R` is a blocking set when `V ∖ R` is not an X-set.
pub fn is_blocking_set(rule: ClosureRule, g: &Graph, r: VertexSet) -> bool {
    !r.is_empty()
        && r.is_subset(g.vertices())
        && !closure::is_x_set(rule, g, g.vertices().difference(r))
}

fn unsupported(parameter: ClosureRule, provenance: Provenance) -> Error {
    Error::UnsupportedFamily {
        parameter: parameter.to_string(),
        provenance: provenance.to_string(),
    }
}

fn scan(g: &Graph, budget: Budget, pred: impl Fn(&Graph, VertexSet) -> bool) -> Result<Vec<VertexSet>> {
    budget.check(g.order())?;
    Ok(subsets(g.order()).filter(|&f| pred(g, f)).collect())
}

/// The complete family of the requested kind.
///
/// Forts exist for the three forcing rules (`ConnectedPsdForts` only for
/// PSD), neighborhoods only for domination, edges only for vertex cover.
/// `ClosureDerived`, `Generators` and `MinimalSets` work for every rule.
pub fn enumerate(
    parameter: ClosureRule,
    provenance: Provenance,
    g: &Graph,
    budget: Budget,
) -> Result<BlockingFamily> {
    use ClosureRule as R;
    use Provenance as P;
    let members = match (provenance, parameter) {
        (P::EnumeratedForts, R::Standard) => scan(g, budget, is_standard_fort)?,
        (P::EnumeratedForts, R::Psd) => scan(g, budget, is_psd_fort)?,
        (P::EnumeratedForts, R::Skew) => scan(g, budget, is_skew_fort)?,
        (P::ConnectedPsdForts, R::Psd) => scan(g, budget, is_connected_psd_fort)?,
        (P::Neighborhoods, R::Domination) => (0..g.order()).map(|v| g.closed_nbhd(v)).collect(),
        (P::Edges, R::VertexCover) => g
            .edges()
            .into_iter()
            .map(|(u, v)| VertexSet::from_vertices([u, v]))
            .collect(),
        (P::ClosureDerived, _) => return closure::derived_blocking_family(parameter, g, budget),
        (P::Generators, _) => {
            let derived = closure::derived_blocking_family(parameter, g, budget)?;
            return closure::generators(&derived, true);
        }
        (P::MinimalSets, _) => return minimal_members(&designated_family(parameter, g, budget)?),
        _ => return Err(unsupported(parameter, provenance)),
    };
    Ok(BlockingFamily::new_complete(parameter, provenance, g.order(), members))
}

/// The family used for irredundance: all forts for standard and skew,
/// connected PSD forts for PSD, closed neighborhoods, edges.
pub fn designated_provenance(parameter: ClosureRule) -> Provenance {
    match parameter {
        ClosureRule::Standard | ClosureRule::Skew => Provenance::EnumeratedForts,
        ClosureRule::Psd => Provenance::ConnectedPsdForts,
        ClosureRule::Domination => Provenance::Neighborhoods,
        ClosureRule::VertexCover => Provenance::Edges,
    }
}

pub fn designated_family(parameter: ClosureRule, g: &Graph, budget: Budget) -> Result<BlockingFamily> {
    enumerate(parameter, designated_provenance(parameter), g, budget)
}

/// Members with no other member as a proper subset.
///
/// Only meaningful for a complete family: every blocking set then contains a
/// member, so the result is the set of minimal blocking sets.
pub fn minimal_members(family: &BlockingFamily) -> Result<BlockingFamily> {
    if !family.is_complete() {
        return Err(Error::IncompleteFamily);
    }
    let members = family.members();
    let minimal = members
        .iter()
        .copied()
        .filter(|&r| !members.iter().any(|m| m.is_proper_subset(r)))
        .collect();
    Ok(BlockingFamily::new_complete(
        family.parameter(),
        Provenance::MinimalSets,
        family.order(),
        minimal,
    ))
}

/// Distinct closed neighborhoods containing no other closed neighborhood.
/// Equal neighborhoods count once, so `K_n` yields the single set `V`.
pub fn minimal_closed_neighborhoods(g: &Graph) -> BlockingFamily {
    let nbhds: Vec<VertexSet> = (0..g.order()).map(|v| g.closed_nbhd(v)).collect();
    let minimal = nbhds
        .iter()
        .copied()
        .filter(|&r| !nbhds.iter().any(|m| m.is_proper_subset(r)))
        .collect();
    BlockingFamily::new_complete(
        ClosureRule::Domination,
        Provenance::MinimalSets,
        g.order(),
        minimal,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::FamilySpec;
    use crate::fixtures;

    fn vs(v: &[usize]) -> VertexSet {
        VertexSet::from_vertices(v.iter().copied())
    }

    fn build(spec: &str) -> Graph {
        FamilySpec::parse(spec).unwrap().build().unwrap()
    }

    #[test]
    fn standard_fort_examples() {
        let star = fixtures::get("fig1").unwrap();
        assert!(is_standard_fort(&star.graph, star.set(&[2, 3])));
        assert!(!is_standard_fort(&star.graph, VertexSet::EMPTY));
        let p3 = build("path:3");
        assert!(is_standard_fort(&p3, vs(&[0, 2])));
        assert!(!is_standard_fort(&p3, vs(&[0])));
    }

    #[test]
    fn psd_fort_examples() {
        let t = fixtures::get("fig4").unwrap().graph;
        let fam = enumerate(ClosureRule::Psd, Provenance::EnumeratedForts, &t, Budget::default()).unwrap();
        assert_eq!(fam.members(), &[t.vertices()]);
        for n in 3..8 {
            let c = build(&format!("cycle:{n}"));
            for v in 0..n {
                assert!(is_psd_fort(&c, c.vertices().without(v)));
            }
        }
        let g = fixtures::get("fig5").unwrap();
        let f = g.set(&[3, 4, 5, 6]);
        assert!(is_psd_fort(&g.graph, f));
        assert!(!is_connected_psd_fort(&g.graph, f));
    }

    #[test]
    fn skew_fort_examples() {
        for n in [4, 6, 8] {
            let c = build(&format!("cycle:{n}"));
            let even: VertexSet = (0..n).step_by(2).collect();
            let odd = even.complement(n);
            assert!(is_skew_fort(&c, even));
            assert!(is_skew_fort(&c, odd));
            assert!(is_skew_fort(&c, c.vertices()));
        }
        for n in [3, 5, 7] {
            let p = build(&format!("path:{n}"));
            let fam = enumerate(ClosureRule::Skew, Provenance::EnumeratedForts, &p, Budget::default()).unwrap();
            let alternate: VertexSet = (0..n).step_by(2).collect();
            assert_eq!(fam.members(), &[alternate]);
        }
        let k3 = build("complete:3");
        assert!(!is_skew_fort(&k3, vs(&[0, 1])));
        assert!(is_skew_fort(&k3, vs(&[0, 1, 2])));
    }

    #[test]
    fn figure_fort_lists() {
        let t = fixtures::get("fig4").unwrap();
        let forts = enumerate(ClosureRule::Standard, Provenance::EnumeratedForts, &t.graph, Budget::default()).unwrap();
        assert_eq!(forts.len(), 10);
        let g5 = fixtures::get("fig5").unwrap();
        let forts = enumerate(ClosureRule::Standard, Provenance::EnumeratedForts, &g5.graph, Budget::default()).unwrap();
        assert_eq!(forts.len(), 18);
        let g7 = fixtures::get("fig7").unwrap();
        let skew = enumerate(ClosureRule::Skew, Provenance::EnumeratedForts, &g7.graph, Budget::default()).unwrap();
        assert_eq!(skew.len(), 14);
    }

    #[test]
    fn bull_neighborhoods() {
        let bull = fixtures::get("bull").unwrap();
        let fam = enumerate(ClosureRule::Domination, Provenance::Neighborhoods, &bull.graph, Budget::default()).unwrap();
        assert_eq!(fam.len(), 5);
    }

    #[test]
    fn unsupported_combinations() {
        let p = build("path:3");
        assert!(matches!(
            enumerate(ClosureRule::Domination, Provenance::Edges, &p, Budget::default()),
            Err(Error::UnsupportedFamily { .. })
        ));
        assert!(matches!(
            enumerate(ClosureRule::Standard, Provenance::ConnectedPsdForts, &p, Budget::default()),
            Err(Error::UnsupportedFamily { .. })
        ));
    }

    #[test]
    fn minimal_member_examples() {
        let star = fixtures::get("fig1").unwrap();
        let forts = enumerate(ClosureRule::Standard, Provenance::EnumeratedForts, &star.graph, Budget::default()).unwrap();
        let min = minimal_members(&forts).unwrap();
        assert_eq!(min.members(), star.family(&[&[2, 3], &[2, 4], &[3, 4]]).as_slice());

        let g = build("cycle:5");
        let edges = enumerate(ClosureRule::VertexCover, Provenance::Edges, &g, Budget::default()).unwrap();
        assert_eq!(minimal_members(&edges).unwrap().members(), edges.members());

        for n in 3..7 {
            let k = build(&format!("complete:{n}"));
            let skew = enumerate(ClosureRule::Skew, Provenance::EnumeratedForts, &k, Budget::default()).unwrap();
            let min = minimal_members(&skew).unwrap();
            assert!(min.iter().all(|m| m.len() == 3));
            assert_eq!(min.len(), n * (n - 1) * (n - 2) / 6);
        }

        let loose = BlockingFamily::from_members(ClosureRule::Standard, Provenance::EnumeratedForts, 3, vec![vs(&[0])]);
        assert_eq!(minimal_members(&loose), Err(Error::IncompleteFamily));
    }

    #[test]
    fn minimal_closed_neighborhood_examples() {
        assert_eq!(minimal_closed_neighborhoods(&build("complete:4")).members(), &[VertexSet::full(4)]);
        assert_eq!(minimal_closed_neighborhoods(&build("path:3")).members(), &[vs(&[0, 1]), vs(&[1, 2])]);
        assert_eq!(minimal_closed_neighborhoods(&build("cycle:5")).len(), 5);
    }

    #[test]
    fn json_round_trip() {
        let star = fixtures::get("fig1").unwrap();
        let forts = enumerate(ClosureRule::Standard, Provenance::EnumeratedForts, &star.graph, Budget::default()).unwrap();
        let json = forts.to_json();
        assert_eq!(json["schema"], 1);
        assert_eq!(json["members"][0], serde_json::json!([1, 2]));
        let back = BlockingFamily::from_json(&json).unwrap();
        assert_eq!(back.members(), forts.members());
        assert!(!back.is_complete());
        assert_eq!(serde_json::to_value(&forts).unwrap(), json);
    }

    #[test]
    fn blocking_predicate() {
        let p4 = build("path:4");
        assert!(is_blocking_set(ClosureRule::VertexCover, &p4, vs(&[1, 2])));
        assert!(!is_blocking_set(ClosureRule::VertexCover, &p4, vs(&[0])));
        assert!(!is_blocking_set(ClosureRule::Skew, &p4, vs(&[0, 1, 2, 3])));
    }
}
