//! Closure operators for the five parameters, the blocking families they
//! induce, and generators of union-closed families.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::blocking::{BlockingFamily, Provenance};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::{subsets, VertexSet};
use crate::Budget;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ClosureRule {
    Standard,
    Psd,
    Skew,
    Domination,
    VertexCover,
}

impl ClosureRule {
    pub const ALL: [ClosureRule; 5] = [
        ClosureRule::Standard,
        ClosureRule::Psd,
        ClosureRule::Skew,
        ClosureRule::Domination,
        ClosureRule::VertexCover,
    ];

    pub const FORCING: [ClosureRule; 3] = [ClosureRule::Standard, ClosureRule::Psd, ClosureRule::Skew];

    pub fn is_forcing(self) -> bool {
        matches!(self, ClosureRule::Standard | ClosureRule::Psd | ClosureRule::Skew)
    }

    pub fn name(self) -> &'static str {
        match self {
            ClosureRule::Standard => "standard",
            ClosureRule::Psd => "psd",
            ClosureRule::Skew => "skew",
            ClosureRule::Domination => "domination",
            ClosureRule::VertexCover => "vertex_cover",
        }
    }
}

impl fmt::Display for ClosureRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ClosureRule {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Ok(match s.to_ascii_lowercase().replace('-', "_").as_str() {
            "standard" | "z" | "zero_forcing" => ClosureRule::Standard,
            "psd" | "zplus" | "z+" => ClosureRule::Psd,
            "skew" | "zminus" | "z-" => ClosureRule::Skew,
            "domination" | "dom" | "d" => ClosureRule::Domination,
            "vertex_cover" | "vc" | "tau" => ClosureRule::VertexCover,
            other => return Err(format!("unknown parameter `{other}`")),
        })
    }
}

/// `φ(S)` for the given rule: the final coloring for the forcing rules,
/// `{v : N[v] ⊆ N[S]}` for domination, `S ∪ {v : N(v) ⊆ S}` for vertex cover.
pub fn close(rule: ClosureRule, g: &Graph, s: VertexSet) -> VertexSet {
    let s = s.intersection(g.vertices());
    match rule {
        ClosureRule::Standard => force_to_fixpoint(g, s, false),
        ClosureRule::Skew => force_to_fixpoint(g, s, true),
        ClosureRule::Psd => psd_close(g, s),
        ClosureRule::Domination => {
            let dominated = g.closed_nbhd_set(s);
            (0..g.order())
                .filter(|&v| g.closed_nbhd(v).is_subset(dominated))
                .collect()
        }
        ClosureRule::VertexCover => {
            let absorbed: VertexSet = (0..g.order())
                .filter(|&v| g.neighbors(v).is_subset(s))
                .collect();
            s.union(absorbed)
        }
    }
}

/// Standard rule: a blue vertex with exactly one white neighbor forces it.
/// Skew rule: any vertex may force.
fn force_to_fixpoint(g: &Graph, s: VertexSet, any_vertex: bool) -> VertexSet {
    let n = g.order();
    let mut blue = s;
    loop {
        let mut changed = false;
        for u in 0..n {
            if !any_vertex && !blue.contains(u) {
                continue;
            }
            let white = g.neighbors(u).difference(blue);
            if white.len() == 1 {
                blue = blue.union(white);
                changed = true;
            }
        }
        if !changed {
            return blue;
        }
    }
}

/// PSD rule: with `W_1..W_k` the components of `G - B`, a blue `u` forces
/// `w ∈ W_i` when `w` is its only white neighbor inside `W_i`. Components
/// are recomputed after every force.
fn psd_close(g: &Graph, s: VertexSet) -> VertexSet {
    let all = g.vertices();
    let mut blue = s;
    'next_force: loop {
        let white = all.difference(blue);
        if white.is_empty() {
            return blue;
        }
        let comps = g.components_within(white);
        for u in blue.iter() {
            let nbrs = g.neighbors(u).intersection(white);
            if nbrs.is_empty() {
                continue;
            }
            for &c in &comps {
                let in_c = nbrs.intersection(c);
                if in_c.len() == 1 {
                    blue = blue.union(in_c);
                    continue 'next_force;
                }
            }
        }
        return blue;
    }
}

/// `S` is an X-set iff its closure is all of `V`.
pub fn is_x_set(rule: ClosureRule, g: &Graph, s: VertexSet) -> bool {
    close(rule, g, s) == g.vertices()
}

/// `is_x_set` for every subset, indexed by bitmask.
pub fn x_set_table(rule: ClosureRule, g: &Graph, budget: Budget) -> Result<Vec<bool>> {
    budget.check(g.order())?;
    let n = g.order();
    let all = g.vertices();
    let mut table = vec![false; 1 << n];
    // X-sets are upward closed: once S qualifies, every superset does too.
    for s in subsets(n) {
        let idx = s.bits() as usize;
        if table[idx] {
            continue;
        }
        if close(rule, g, s) == all {
            mark_supersets(&mut table, s, n);
        }
    }
    Ok(table)
}

fn mark_supersets(table: &mut [bool], s: VertexSet, n: usize) {
    let free = s.complement(n).bits();
    let mut sub = free;
    loop {
        table[(s.bits() | sub) as usize] = true;
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & free;
    }
}

/// A member of a closure-derived blocking family with the closed set it
/// complements.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DerivedBlockingSet {
    pub set: VertexSet,
    pub fixed_point_complement: VertexSet,
}

/// `V ∖ A` for every fixed point `A = φ(A)` that is not an X-set.
pub fn derived_blocking_sets(
    rule: ClosureRule,
    g: &Graph,
    budget: Budget,
) -> Result<Vec<DerivedBlockingSet>> {
    budget.check(g.order())?;
    let all = g.vertices();
    let mut out: Vec<DerivedBlockingSet> = subsets(g.order())
        .filter(|&a| a != all && close(rule, g, a) == a)
        .map(|a| DerivedBlockingSet {
            set: a.complement(g.order()),
            fixed_point_complement: a,
        })
        .collect();
    out.sort_by_key(|d| d.set);
    Ok(out)
}

pub fn derived_blocking_family(rule: ClosureRule, g: &Graph, budget: Budget) -> Result<BlockingFamily> {
    let members = derived_blocking_sets(rule, g, budget)?
        .into_iter()
        .map(|d| d.set)
        .collect();
    Ok(BlockingFamily::new_complete(
        rule,
        Provenance::ClosureDerived,
        g.order(),
        members,
    ))
}

/// Members that are not the union of two members each a proper subset.
///
/// With `strict`, the family must be union-closed.
pub fn generators(family: &BlockingFamily, strict: bool) -> Result<BlockingFamily> {
    let members = family.members();
    if strict {
        check_union_closed(family)?;
    }
    let gens = members
        .iter()
        .copied()
        .filter(|&r| {
            let subs: Vec<VertexSet> = members
                .iter()
                .copied()
                .filter(|m| m.is_proper_subset(r))
                .collect();
            !subs
                .iter()
                .enumerate()
                .any(|(i, a)| subs[i..].iter().any(|b| a.union(*b) == r))
        })
        .collect();
    Ok(BlockingFamily::new_complete(
        family.parameter(),
        Provenance::Generators,
        family.order(),
        gens,
    ))
}

pub fn check_union_closed(family: &BlockingFamily) -> Result<()> {
    let members = family.members();
    for (i, a) in members.iter().enumerate() {
        for b in &members[i + 1..] {
            if !family.contains(a.union(*b)) {
                return Err(Error::NotUnionClosed {
                    a: a.to_vec(),
                    b: b.to_vec(),
                });
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::FamilySpec;
    use crate::fixtures;

    fn vs(v: &[usize]) -> VertexSet {
        VertexSet::from_vertices(v.iter().copied())
    }

    #[test]
    fn skew_from_empty_on_even_path() {
        let p4 = FamilySpec::Path(4).build().unwrap();
        assert_eq!(close(ClosureRule::Skew, &p4, VertexSet::EMPTY), p4.vertices());
        assert!(is_x_set(ClosureRule::Skew, &p4, VertexSet::EMPTY));
        let p2 = FamilySpec::Path(2).build().unwrap();
        assert_eq!(close(ClosureRule::Skew, &p2, VertexSet::EMPTY), p2.vertices());
        assert_eq!(close(ClosureRule::Standard, &p2, VertexSet::EMPTY), VertexSet::EMPTY);
        let p3 = FamilySpec::Path(3).build().unwrap();
        assert_eq!(close(ClosureRule::Skew, &p3, VertexSet::EMPTY), vs(&[1]));
        assert!(!is_x_set(ClosureRule::Skew, &p3, VertexSet::EMPTY));
    }

    #[test]
    fn full_set_is_fixed() {
        let g = fixtures::get("fig5").unwrap().graph;
        for rule in ClosureRule::ALL {
            assert_eq!(close(rule, &g, g.vertices()), g.vertices());
        }
    }

    #[test]
    fn domination_closure_on_bull() {
        let bull = fixtures::get("bull").unwrap();
        let a = bull.set(&[2]);
        assert_eq!(close(ClosureRule::Domination, &bull.graph, a), bull.set(&[1, 2, 3]));
        // Its complement is one of the listed derived blocking sets.
        let fam = derived_blocking_family(ClosureRule::Domination, &bull.graph, Budget::default()).unwrap();
        assert!(fam.contains(bull.set(&[4, 5])));
    }

    #[test]
    fn psd_on_trees_from_any_vertex() {
        let t = fixtures::get("fig4").unwrap().graph;
        for v in 0..t.order() {
            assert_eq!(close(ClosureRule::Psd, &t, VertexSet::singleton(v)), t.vertices());
        }
        let p5 = FamilySpec::Path(5).build().unwrap();
        assert_eq!(close(ClosureRule::Psd, &p5, vs(&[2])), p5.vertices());
        assert_eq!(close(ClosureRule::Standard, &p5, vs(&[2])), vs(&[2]));
    }

    #[test]
    fn x_set_examples() {
        let star = FamilySpec::Star(3).build().unwrap();
        assert!(is_x_set(ClosureRule::Standard, &star, vs(&[1, 2])));
        assert!(!is_x_set(ClosureRule::Standard, &star, vs(&[0, 1])));
        let p4 = FamilySpec::Path(4).build().unwrap();
        assert!(!is_x_set(ClosureRule::VertexCover, &p4, vs(&[0, 3])));
        assert!(is_x_set(ClosureRule::VertexCover, &p4, vs(&[1, 3])));
    }

    #[test]
    fn vc_closure_of_empty_is_isolated() {
        let g = Graph::build(4, &[(0, 1)]).unwrap();
        assert_eq!(close(ClosureRule::VertexCover, &g, VertexSet::EMPTY), vs(&[2, 3]));
    }

    #[test]
    fn bull_domination_families() {
        let bull = fixtures::get("bull").unwrap();
        let fam = derived_blocking_family(ClosureRule::Domination, &bull.graph, Budget::default()).unwrap();
        let expected = bull.family(&[
            &[1, 2],
            &[4, 5],
            &[2, 3, 4],
            &[1, 2, 3, 4],
            &[1, 2, 4, 5],
            &[2, 3, 4, 5],
            &[1, 2, 3, 4, 5],
        ]);
        assert_eq!(fam.members(), expected.as_slice());
        let gens = generators(&fam, false).unwrap();
        assert_eq!(gens.members(), bull.family(&[&[1, 2], &[4, 5], &[2, 3, 4]]).as_slice());
    }

    #[test]
    fn paw_vertex_cover_families() {
        let paw = fixtures::get("paw").unwrap();
        let fam = derived_blocking_family(ClosureRule::VertexCover, &paw.graph, Budget::default()).unwrap();
        let expected = paw.family(&[
            &[1, 4],
            &[2, 3],
            &[2, 4],
            &[3, 4],
            &[1, 2, 4],
            &[1, 3, 4],
            &[2, 3, 4],
            &[1, 2, 3, 4],
        ]);
        assert_eq!(fam.members(), expected.as_slice());
        let gens = generators(&fam, true).unwrap();
        assert_eq!(gens.members(), paw.family(&[&[1, 4], &[2, 3], &[2, 4], &[3, 4]]).as_slice());
    }

    #[test]
    fn star_standard_derived_equals_forts() {
        let star = FamilySpec::Star(3).build().unwrap();
        let fam = derived_blocking_family(ClosureRule::Standard, &star, Budget::default()).unwrap();
        let expected: Vec<VertexSet> = {
            let mut v = vec![vs(&[1, 2]), vs(&[1, 3]), vs(&[2, 3]), vs(&[1, 2, 3]), vs(&[0, 1, 2, 3])];
            v.sort();
            v
        };
        assert_eq!(fam.members(), expected.as_slice());
    }

    #[test]
    fn generators_of_small_families() {
        let fam = BlockingFamily::from_members(
            ClosureRule::Standard,
            Provenance::EnumeratedForts,
            2,
            vec![vs(&[0]), vs(&[1]), vs(&[0, 1])],
        );
        let gens = generators(&fam, true).unwrap();
        assert_eq!(gens.members(), &[vs(&[0]), vs(&[1])]);

        let not_closed = BlockingFamily::from_members(
            ClosureRule::Standard,
            Provenance::EnumeratedForts,
            3,
            vec![vs(&[0]), vs(&[1])],
        );
        assert!(matches!(generators(&not_closed, true), Err(Error::NotUnionClosed { .. })));
        assert_eq!(generators(&not_closed, false).unwrap().len(), 2);
    }

    #[test]
    fn budget_guard() {
        let g = FamilySpec::Path(17).build().unwrap();
        assert!(matches!(
            derived_blocking_family(ClosureRule::Standard, &g, Budget::default()),
            Err(Error::OrderBudgetExceeded { n: 17, budget: 16 })
        ));
        assert!(derived_blocking_family(ClosureRule::Standard, &g, Budget::new(17)).is_ok());
    }

    #[test]
    fn parse_rule_names() {
        assert_eq!("vc".parse::<ClosureRule>().unwrap(), ClosureRule::VertexCover);
        assert_eq!("vertex-cover".parse::<ClosureRule>().unwrap(), ClosureRule::VertexCover);
        assert_eq!("PSD".parse::<ClosureRule>().unwrap(), ClosureRule::Psd);
        assert!("bogus".parse::<ClosureRule>().is_err());
    }
}
