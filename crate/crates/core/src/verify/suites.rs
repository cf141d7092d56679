use rayon::prelude::*;

use super::corpus::{self, bipartition, relabeling_between};
use super::{over_graphs, Checker, SuiteResult};
use crate::blocking::{designated_family, enumerate, is_connected_psd_fort, Provenance};
use crate::closure::{check_union_closed, close, derived_blocking_family, generators, is_x_set, ClosureRule};
use crate::error::Result;
use crate::graph::Graph;
use crate::graph6::to_graph6;
use crate::irredundance::{
    aux_domination, domination_chain, is_maximal_xir_set, is_vertex_cover, is_xir_set, minimal_x_sets, report,
    vcir_to_cover, xir_table, AuxDomination, ParameterReport,
};
use crate::tar::{build_tar, tar_isomorphic, TarGraph, TarKind};
use crate::trees::{labeled_trees, unlabeled_trees};
use crate::vertex_set::{subsets, VertexSet};
use crate::Budget;

use ClosureRule::{Domination, Psd, Skew, Standard, VertexCover};

const B: Budget = Budget {
    max_order: Budget::DEFAULT_MAX_ORDER,
};

/// Largest order checked with every labeled tree rather than one per class.
const LABELED_TREE_ORDER: usize = 7;

fn nondecreasing(v: &[usize]) -> bool {
    v.windows(2).all(|w| w[0] <= w[1])
}

fn reports(g: &Graph, c: &mut Checker, rules: &[ClosureRule]) -> Option<Vec<ParameterReport>> {
    rules
        .iter()
        .map(|&r| c.ok(&format!("report/{r}"), report(g, r, B)))
        .collect()
}

pub fn hitting(max_n: usize) -> Result<SuiteResult> {
    let graphs = corpus::labeled(1, max_n)?;
    Ok(over_graphs("hitting", max_n, &graphs, |g, c| {
        let mut families = Vec::new();
        for rule in ClosureRule::FORCING {
            if let Some(f) = c.ok("forts", enumerate(rule, Provenance::EnumeratedForts, g, B)) {
                families.push((format!("hitting/{rule}"), rule, f));
            }
        }
        if let Some(f) = c.ok("forts", enumerate(Psd, Provenance::ConnectedPsdForts, g, B)) {
            families.push(("hitting/psd_connected".to_string(), Psd, f));
        }
        for (property, rule, forts) in &families {
            if let Some(s) = subsets(g.order())
                .find(|&s| is_x_set(*rule, g, s) != forts.iter().all(|f| f.intersects(s)))
            {
                c.fail(property, format!("S={s}: x_set={}", is_x_set(*rule, g, s)));
            }
        }
    }))
}

pub fn fort_relations(max_n: usize) -> Result<SuiteResult> {
    let graphs = corpus::labeled(1, max_n)?;
    Ok(over_graphs("fort-relations", max_n, &graphs, |g, c| {
        let fam = |c: &mut Checker, rule| c.ok("forts", enumerate(rule, Provenance::EnumeratedForts, g, B));
        let (Some(standard), Some(psd), Some(skew)) = (fam(c, Standard), fam(c, Psd), fam(c, Skew)) else {
            return;
        };
        for f in skew.iter() {
            c.check(standard.contains(f), "skew_fort_is_standard", || format!("F={f}"));
        }
        for f in psd.iter() {
            c.check(standard.contains(f), "psd_fort_is_standard", || format!("F={f}"));
            for part in g.components_within(f) {
                c.check(is_connected_psd_fort(g, part), "psd_fort_components", || {
                    format!("F={f}, component {part}")
                });
            }
        }
        for (i, &f1) in psd.members().iter().enumerate() {
            for &f2 in &psd.members()[i + 1..] {
                let u = f1.union(f2);
                c.check(psd.contains(u), "psd_fort_unions", || format!("{f1} + {f2}"));
            }
        }
        if let Some((a, b)) = bipartition(g) {
            for f in skew.iter() {
                for side in [f.intersection(a), f.intersection(b)] {
                    c.check(side.is_empty() || skew.contains(side), "skew_fort_bipartite_split", || {
                        format!("F={f}, part {side}")
                    });
                }
            }
        }
        let z_minus_zero = is_x_set(Skew, g, VertexSet::EMPTY);
        c.check(z_minus_zero == skew.is_empty(), "skew_zero_no_forts", || {
            format!("Z-=0 is {z_minus_zero}, {} skew forts", skew.len())
        });
    }))
}

pub fn chain(max_n: usize) -> Result<SuiteResult> {
    let graphs = corpus::labeled(1, max_n)?;
    Ok(over_graphs("chain", max_n, &graphs, |g, c| {
        for rule in ClosureRule::ALL {
            let Some(r) = c.ok("report", report(g, rule, B)) else { continue };
            let v = r.values();
            c.check(nondecreasing(&v), &format!("chain/{rule}"), || format!("{v:?}"));
            let Some(family) = c.ok("family", designated_family(rule, g, B)) else { continue };
            for w in [r.xir, r.xir_upper] {
                c.check(is_maximal_xir_set(&family, w.witness), &format!("witness/{rule}"), || {
                    format!("{} is not a maximal XIr-set", w.witness)
                });
            }
            for w in [r.x, r.x_upper] {
                c.check(is_x_set(rule, g, w.witness), &format!("witness/{rule}"), || {
                    format!("{} is not an X-set", w.witness)
                });
            }
            if rule == Psd {
                let full = c.ok("forts", enumerate(Psd, Provenance::EnumeratedForts, g, B));
                let tables = full.map(|full| (xir_table(&family, B), xir_table(&full, B)));
                if let Some((Ok(connected), Ok(all))) = tables {
                    if let Some(bits) = (0..connected.len()).find(|&i| connected[i] != all[i]) {
                        c.fail("psd_connected_forts_suffice", format!("S={}", VertexSet(bits as u64)));
                    }
                }
            }
            if rule == Skew && r.x.value == 0 {
                c.check_eq("skew_zero_all_zero", v, [0; 4]);
            }
            if let Some(minimal) = c.ok("minimal_x_sets", minimal_x_sets(rule, g, B)) {
                if let Some(s) = minimal.into_iter().find(|&s| !is_maximal_xir_set(&family, s)) {
                    c.fail(&format!("minimal_x_set_is_maximal_xir/{rule}"), format!("S={s}"));
                }
            }
        }
    }))
}

pub fn vcir_eq_tau(max_n: usize) -> Result<SuiteResult> {
    let graphs = corpus::labeled(1, max_n)?;
    Ok(over_graphs("vcir-eq-tau", max_n, &graphs, |g, c| {
        let Some(r) = c.ok("report", report(g, VertexCover, B)) else { return };
        if r.xir.value != r.x.value {
            c.fail(
                "vcir_eq_tau",
                format!("vcir {} (witness {}), tau {}", r.xir.value, r.xir.witness, r.x.value),
            );
            return;
        }
        if let Some(cover) = c.ok("vcir_to_cover", vcir_to_cover(g, r.xir.witness, B)) {
            c.check(is_vertex_cover(g, cover), "vcir_to_cover", || format!("{cover} is not a cover"));
            c.check_eq("vcir_to_cover_size", cover.len(), r.xir.value);
        }
    }))
}

pub fn ext_dom_chain(max_n: usize) -> Result<SuiteResult> {
    let graphs: Vec<Graph> = corpus::labeled(2, max_n)?
        .into_iter()
        .filter(|g| !g.has_isolated_vertex())
        .collect();
    Ok(over_graphs("ext-dom-chain", max_n, &graphs, |g, c| {
        let Some(r) = c.ok("chain", domination_chain(g, B)) else { return };
        let v = r.chain();
        c.check(nondecreasing(&v), "ext_dom_chain", || format!("{v:?}"));
        let (Some(dom), Some(vc)) = (
            c.ok("family", designated_family(Domination, g, B)),
            c.ok("family", designated_family(VertexCover, g, B)),
        ) else {
            return;
        };
        if let Some(s) = subsets(g.order()).find(|&s| is_xir_set(&dom, s) && !is_xir_set(&vc, s)) {
            c.fail("dir_set_is_vcir_set", format!("S={s}"));
        }
    }))
}

/// The final coloring by rounds of simultaneous forces, written
/// independently of [`close`].
fn simulate(rule: ClosureRule, g: &Graph, s: VertexSet) -> VertexSet {
    let all = g.vertices();
    let mut blue = s;
    loop {
        let white = all.difference(blue);
        let mut forced = VertexSet::EMPTY;
        match rule {
            Standard | Skew => {
                for u in 0..g.order() {
                    if rule == Standard && !blue.contains(u) {
                        continue;
                    }
                    let w = g.neighbors(u).intersection(white);
                    if w.len() == 1 {
                        forced = forced.union(w);
                    }
                }
            }
            Psd => {
                let parts = g.components_within(white);
                for u in blue.iter() {
                    for &part in &parts {
                        let w = g.neighbors(u).intersection(part);
                        if w.len() == 1 {
                            forced = forced.union(w);
                        }
                    }
                }
            }
            Domination | VertexCover => unreachable!("not a forcing rule"),
        }
        if forced.is_empty() {
            return blue;
        }
        blue = blue.union(forced);
    }
}

fn x_set_by_definition(rule: ClosureRule, g: &Graph, s: VertexSet) -> bool {
    match rule {
        Domination => g.closed_nbhd_set(s) == g.vertices(),
        VertexCover => is_vertex_cover(g, s),
        _ => simulate(rule, g, s) == g.vertices(),
    }
}

pub fn closure_laws(max_n: usize) -> Result<SuiteResult> {
    let graphs = corpus::labeled(1, max_n)?;
    Ok(over_graphs("closure-laws", max_n, &graphs, |g, c| {
        let n = g.order();
        for rule in ClosureRule::ALL {
            let phi: Vec<VertexSet> = subsets(n).map(|s| close(rule, g, s)).collect();
            let at = |s: VertexSet| phi[s.bits() as usize];
            for s in subsets(n) {
                let p = at(s);
                c.check(s.is_subset(p), &format!("extensive/{rule}"), || format!("S={s}"));
                c.check(at(p) == p, &format!("idempotent/{rule}"), || format!("S={s}"));
                let mut sub = s.bits();
                loop {
                    let t = VertexSet(sub);
                    if !at(t).is_subset(p) {
                        c.fail(&format!("monotone/{rule}"), format!("{t} within {s}"));
                        break;
                    }
                    if sub == 0 {
                        break;
                    }
                    sub = (sub - 1) & s.bits();
                }
                let (x, def) = (is_x_set(rule, g, s), x_set_by_definition(rule, g, s));
                c.check(x == def, &format!("x_compliance/{rule}"), || {
                    format!("S={s}: closure says {x}, rule says {def}")
                });
            }
            let parts = g.components();
            if parts.len() < 2 {
                continue;
            }
            let leak = parts.iter().find_map(|&part| {
                subsets(n)
                    .filter(|a| a.is_subset(part))
                    .find(|&a| !at(a).is_subset(part))
                    .map(|a| (a, part))
            });
            if let Some((a, part)) = leak {
                let detail = format!("A={a} in component {part}, closure {}", at(a));
                match rule {
                    Skew | VertexCover => c.observe(&format!("not_component_consistent/{rule}"), detail),
                    _ => c.fail(&format!("component_consistent/{rule}"), detail),
                }
            }
        }
        c.check_eq("vc_closure_of_empty", close(VertexCover, g, VertexSet::EMPTY), g.isolated_vertices());
    }))
}

pub fn derived_families(max_n: usize) -> Result<SuiteResult> {
    let graphs = corpus::labeled(1, max_n)?;
    Ok(over_graphs("derived-families", max_n, &graphs, |g, c| {
        let all = g.vertices();
        for rule in ClosureRule::ALL {
            let Some(derived) = c.ok("derived", derived_blocking_family(rule, g, B)) else { continue };
            let fixed: Vec<VertexSet> = subsets(g.order())
                .filter(|&r| !r.is_empty() && close(rule, g, all.difference(r)) == all.difference(r))
                .collect();
            c.check(derived.members() == fixed.as_slice(), &format!("fixed_point_form/{rule}"), || {
                format!("{} derived, {} fixed-point complements", derived.len(), fixed.len())
            });
            if rule.is_forcing() {
                if let Some(forts) = c.ok("forts", enumerate(rule, Provenance::EnumeratedForts, g, B)) {
                    c.check(derived.members() == forts.members(), &format!("derived_eq_forts/{rule}"), || {
                        format!("{} derived, {} forts", derived.len(), forts.len())
                    });
                }
            }
            if let Err(e) = check_union_closed(&derived) {
                c.fail(&format!("union_closed/{rule}"), e.to_string());
                continue;
            }
            let Some(gens) = c.ok("generators", generators(&derived, true)) else { continue };
            match rule {
                Domination => {
                    let Some(bd) = c.ok("family", designated_family(Domination, g, B)) else { continue };
                    for r in gens.iter() {
                        c.check(bd.contains(r), "dom_generators_in_neighborhoods", || format!("{r}"));
                    }
                    for r in bd.iter() {
                        c.check(derived.contains(r), "dom_neighborhoods_in_derived", || format!("{r}"));
                    }
                }
                VertexCover => {
                    let Some(edges) = c.ok("family", designated_family(VertexCover, g, B)) else { continue };
                    c.check(gens.members() == edges.members(), "vc_generators_are_edges", || {
                        format!("{} generators, {} edges", gens.len(), edges.len())
                    });
                    for w in derived.iter() {
                        let covered = w.iter().all(|v| g.neighbors(v).intersects(w));
                        c.check(covered, "vc_derived_union_of_edges", || format!("{w}"));
                    }
                }
                _ => {}
            }
            if let Some(s) = subsets(g.order()).find(|&s| is_xir_set(&derived, s) != is_xir_set(&gens, s)) {
                c.fail(&format!("irredundance_equivalence/{rule}"), format!("S={s}"));
            }
        }
    }))
}

/// `V = A ⊔ B ⊔ C` with `A`, `B` nonempty independent and all three parts
/// joined to each other.
pub fn skew_join_partition(g: &Graph) -> Option<(VertexSet, VertexSet, VertexSet)> {
    let all = g.vertices();
    let complete_to = |part: VertexSet, target: VertexSet| part.iter().all(|v| target.is_subset(g.neighbors(v)));
    for a in subsets(g.order()) {
        if a.is_empty() || !g.is_independent(a) || !complete_to(a, all.difference(a)) {
            continue;
        }
        let rest = all.difference(a);
        let mut sub = rest.bits();
        while sub != 0 {
            let b = VertexSet(sub);
            let cpart = rest.difference(b);
            if g.is_independent(b) && complete_to(b, all.difference(b)) && complete_to(cpart, a.union(b)) {
                return Some((a, b, cpart));
            }
            sub = (sub - 1) & rest.bits();
        }
    }
    None
}

/// `K_{n-r} ⊔ r K_1` with `n - r >= 2`.
fn clique_plus_isolated(g: &Graph) -> bool {
    let core = g.vertices().difference(g.isolated_vertices());
    core.len() >= 2 && core.iter().all(|v| core.without(v).is_subset(g.neighbors(v)))
}

pub fn characterizations(max_n: usize) -> Result<SuiteResult> {
    let graphs: Vec<Graph> = corpus::labeled(2, max_n)?
        .into_iter()
        .filter(|g| g.edge_count() > 0)
        .collect();
    Ok(over_graphs("characterizations", max_n, &graphs, |g, c| {
        let n = g.order();
        let Some(psd) = c.ok("report", report(g, Psd, B)) else { return };
        let tree = g.is_tree();
        for (name, v) in ["zpir", "Z+", "upper_Z+", "ZpIR"].iter().zip(psd.values()) {
            c.check((v == 1) == tree, "tree_iff_psd_one", || format!("tree={tree}, {name}={v}"));
        }
        let near_complete = clique_plus_isolated(g);
        for (name, v) in ["zpir", "Z+", "upper_Z+", "ZpIR"].iter().zip(psd.values()) {
            c.check((v == n - 1) == near_complete, "clique_iff_psd_n_minus_1", || {
                format!("K_(n-r)+rK_1={near_complete}, {name}={v}")
            });
        }
        if !g.is_connected() {
            return;
        }
        let Some(skew) = c.ok("report", report(g, Skew, B)) else { return };
        let join = skew_join_partition(g);
        let flags = [join.is_some(), skew.x_upper.value == n - 2, skew.xir_upper.value == n - 2];
        c.check(flags.iter().all(|&f| f == flags[0]), "skew_n_minus_2", || {
            format!(
                "partition={:?}, upper_Z-={}, ZsIR={}",
                join,
                skew.x_upper.value,
                skew.xir_upper.value
            )
        });
    }))
}

pub fn bounds(max_n: usize) -> Result<SuiteResult> {
    let graphs = corpus::labeled(1, max_n)?;
    Ok(over_graphs("bounds", max_n, &graphs, |g, c| {
        let n = g.order();
        let Some(r) = reports(g, c, &[Standard, Psd, Skew, Domination, VertexCover]) else { return };
        let (zir, zpir, zsir, gamma, vcir) = (
            r[0].xir_upper.value,
            r[1].xir_upper.value,
            r[2].xir_upper.value,
            r[3].x.value,
            r[4].xir_upper.value,
        );
        let zpir_lower = r[1].xir.value;
        c.check(zpir <= zir, "ZpIR_le_ZIR", || format!("{zpir} > {zir}"));
        c.check(zsir <= zir, "ZsIR_le_ZIR", || format!("{zsir} > {zir}"));
        c.check(n - gamma <= vcir, "n_minus_gamma_le_VCIR", || format!("n={n}, gamma={gamma}, VCIR={vcir}"));
        c.check((vcir == n - 1) == (gamma == 1), "VCIR_n_minus_1_iff_gamma_1", || {
            format!("VCIR={vcir}, gamma={gamma}")
        });
        if g.min_degree() >= 2 {
            c.check(zpir_lower >= 2, "min_degree_2_zpir", || format!("zpir={zpir_lower}"));
        }
        if g.has_isolated_vertex() {
            return;
        }
        c.check(2 * vcir >= n, "VCIR_ge_half_n", || format!("n={n}, VCIR={vcir}"));
        for (name, v) in [("ZIR", zir), ("ZpIR", zpir), ("ZsIR", zsir)] {
            c.check(v <= vcir, &format!("{name}_le_VCIR"), || format!("{v} > {vcir}"));
        }
        if n < 3 {
            return;
        }
        c.check(zpir <= n - gamma, "ZpIR_le_n_minus_gamma", || format!("ZpIR={zpir}, gamma={gamma}"));
        c.check(zsir <= n - gamma, "ZsIR_le_n_minus_gamma", || format!("ZsIR={zsir}, gamma={gamma}"));
        if let Some(Some(d)) = c.ok("aux", aux_domination(g, AuxDomination::Connected2Dom, B)) {
            c.check(n - d.value <= zpir, "n_minus_connected_2dom_le_ZpIR", || {
                format!("gamma_c2={}, ZpIR={zpir}", d.value)
            });
        }
        if let Some(Some(d)) = c.ok("aux", aux_domination(g, AuxDomination::Total2Dom, B)) {
            c.check(n - d.value <= zsir, "n_minus_total_2dom_le_ZsIR", || {
                format!("gamma_t2={}, ZsIR={zsir}", d.value)
            });
        }
    }))
}

pub fn component_additivity(max_n: usize) -> Result<SuiteResult> {
    let classes = corpus::isomorphism_classes(1, max_n.saturating_sub(1).max(1), true)?;
    let base: Vec<Option<Vec<[usize; 2]>>> = classes
        .par_iter()
        .map(|g| {
            ClosureRule::ALL
                .iter()
                .map(|&r| report(g, r, B).ok().map(|x| [x.xir.value, x.xir_upper.value]))
                .collect()
        })
        .collect();
    let mut pairs = Vec::new();
    for i in 0..classes.len() {
        for j in i..classes.len() {
            if classes[i].order() + classes[j].order() <= max_n {
                pairs.push((i, j));
            }
        }
    }
    let checkers: Vec<Checker> = pairs
        .par_iter()
        .map(|&(i, j)| {
            let (g, h) = (&classes[i], &classes[j]);
            let u = Graph::disjoint_union(g, h).expect("orders are small");
            let mut c = Checker::for_graph(&u);
            let (Some(bg), Some(bh)) = (&base[i], &base[j]) else {
                c.fail("report", "engine error on a component");
                return c;
            };
            for (k, rule) in ClosureRule::ALL.into_iter().enumerate() {
                if let Some(r) = c.ok("report", report(&u, rule, B)) {
                    let expected = [bg[k][0] + bh[k][0], bg[k][1] + bh[k][1]];
                    c.check_eq(&format!("additive/{rule}"), [r.xir.value, r.xir_upper.value], expected);
                }
            }
            c
        })
        .collect();
    Ok(SuiteResult::from_checkers("component-additivity", max_n, checkers))
}

/// `h` with a copy of `t` glued on by identifying `t`'s vertex `root` with
/// `h`'s vertex `x`. The tree's other vertices follow `h`'s.
fn attach_tree(h: &Graph, x: usize, t: &Graph, root: usize) -> Graph {
    let m = h.order();
    let index = |v: usize| -> usize {
        match v.cmp(&root) {
            std::cmp::Ordering::Equal => x,
            std::cmp::Ordering::Less => m + v,
            std::cmp::Ordering::Greater => m + v - 1,
        }
    };
    let mut edges = h.edges();
    edges.extend(t.edges().into_iter().map(|(a, b)| (index(a), index(b))));
    Graph::build(m + t.order() - 1, &edges).expect("glued graph is simple")
}

pub fn tree_strip(max_n: usize) -> Result<SuiteResult> {
    let bases = corpus::isomorphism_classes(1, max_n.saturating_sub(1).max(1), true)?;
    let mut items = Vec::new();
    for h in &bases {
        for k in 2..=(max_n + 1).saturating_sub(h.order()) {
            for t in unlabeled_trees(k)? {
                for x in 0..h.order() {
                    for root in 0..k {
                        items.push((h.clone(), attach_tree(h, x, &t, root)));
                    }
                }
            }
        }
    }
    let checkers: Vec<Checker> = items
        .par_iter()
        .map(|(h, g)| {
            let mut c = Checker::for_graph(g);
            if let (Some(a), Some(b)) = (c.ok("report", report(g, Psd, B)), c.ok("report", report(h, Psd, B))) {
                c.check_eq("strip_zpir", a.xir.value, b.xir.value);
                c.check_eq("strip_ZpIR", a.xir_upper.value, b.xir_upper.value);
            }
            c
        })
        .collect();
    Ok(SuiteResult::from_checkers("tree-strip", max_n, checkers))
}

fn check_tree(t: &Graph, c: &mut Checker) {
    let Some(r) = reports(t, c, &[Skew, Psd]) else { return };
    let skew = r[0].values();
    c.check(skew.iter().all(|&v| v == skew[0]), "tree_skew_equal", || format!("{skew:?}"));
    c.check_eq("tree_psd_one", [r[1].xir.value, r[1].xir_upper.value], [1, 1]);
}

/// Every labeled tree through order 7; above that one tree per isomorphism
/// class, which covers every labeled tree since the parameters are
/// invariant under relabeling.
pub fn trees(max_n: usize) -> Result<SuiteResult> {
    let mut corpus: Vec<Graph> = Vec::new();
    for n in 1..=max_n {
        if n <= LABELED_TREE_ORDER {
            corpus.extend(labeled_trees(n)?);
        } else {
            corpus.extend(unlabeled_trees(n)?);
        }
    }
    Ok(over_graphs("trees", max_n, &corpus, check_tree))
}

fn hypercube_consistent(t: &TarGraph) -> bool {
    let mut expected = Vec::new();
    for (i, a) in t.nodes.iter().enumerate() {
        for (j, b) in t.nodes.iter().enumerate().skip(i + 1) {
            if a.symmetric_difference(*b).len() == 1 {
                expected.push((i, j));
            }
        }
    }
    expected == t.edges
}

fn edge_preserving(t1: &TarGraph, t2: &TarGraph, map: &[usize]) -> bool {
    let mut image: Vec<(usize, usize)> = t1
        .edges
        .iter()
        .map(|&(i, j)| (map[i].min(map[j]), map[i].max(map[j])))
        .collect();
    image.sort();
    image == t2.edges
}

fn isomorphism_examples(c: &mut Checker) -> Option<()> {
    let p4 = Graph::build(4, &[(0, 1), (1, 2), (2, 3)]).ok()?;
    let two_k2 = Graph::build(4, &[(0, 1), (2, 3)]).ok()?;
    let cir_p4 = c.ok("tar", build_tar(&p4, TarKind::XirSets, Some(VertexCover), B))?;
    let cir_2k2 = c.ok("tar", build_tar(&two_k2, TarKind::XirSets, Some(VertexCover), B))?;
    let c_p4 = c.ok("tar", build_tar(&p4, TarKind::XSets, Some(VertexCover), B))?;
    match c.ok("iso", tar_isomorphic(&cir_2k2, &cir_p4))? {
        Some(map) => c.check(edge_preserving(&cir_2k2, &cir_p4, &map), "vcir_tar_2K2_P4", || {
            "returned bijection does not preserve edges".into()
        }),
        None => c.fail("vcir_tar_2K2_P4", "no isomorphism found"),
    }
    let iso = c.ok("iso", tar_isomorphic(&cir_p4, &c_p4))?;
    c.check(iso.is_none(), "vcir_tar_vs_vc_tar_P4", || "unexpected isomorphism".into());
    Some(())
}

/// Isomorphic XIr-TAR graphs on connected base graphs force equal orders
/// and relabeled-equal XIr-set families.
fn main_theorem_scan(max_n: usize) -> Result<Vec<Checker>> {
    let classes = corpus::isomorphism_classes(2, max_n, true)?;
    let mut out = Vec::new();
    for rule in [Standard, Psd, VertexCover] {
        let tars: Vec<Option<TarGraph>> = classes
            .par_iter()
            .map(|g| build_tar(g, TarKind::XirSets, Some(rule), B).ok())
            .collect();
        let mut pairs = Vec::new();
        for i in 0..classes.len() {
            for j in i + 1..classes.len() {
                pairs.push((i, j));
            }
        }
        let checked: Vec<Checker> = pairs
            .par_iter()
            .map(|&(i, j)| {
                let (g, h) = (&classes[i], &classes[j]);
                let mut c = Checker::new(format!("{}|{}", to_graph6(g), to_graph6(h)));
                let (Some(tg), Some(th)) = (&tars[i], &tars[j]) else {
                    c.fail("tar", "engine error");
                    return c;
                };
                let Some(iso) = c.ok("iso", tar_isomorphic(tg, th)) else { return c };
                if iso.is_none() {
                    return c;
                }
                c.observe(&format!("isomorphic_xir_tars/{rule}"), "non-isomorphic bases");
                let property = format!("main_theorem/{rule}");
                if g.order() != h.order() {
                    c.fail(&property, format!("orders {} and {}", g.order(), h.order()));
                } else if relabeling_between(g.order(), &th.nodes, &tg.nodes).is_none() {
                    c.fail(&property, "no relabeling matches the XIr-sets");
                }
                c
            })
            .collect();
        out.extend(checked);
    }
    Ok(out)
}

pub fn tar(max_n: usize) -> Result<SuiteResult> {
    let graphs = corpus::labeled(1, max_n)?;
    let mut result = over_graphs("tar", max_n, &graphs, |g, c| {
        for rule in ClosureRule::ALL {
            for kind in [TarKind::XSets, TarKind::XirSets] {
                if let Some(t) = c.ok("tar", build_tar(g, kind, Some(rule), B)) {
                    c.check(hypercube_consistent(&t), &format!("hypercube/{kind:?}/{rule}"), || {
                        format!("{} nodes, {} edges", t.node_count(), t.edge_count())
                    });
                }
            }
        }
        if g.has_isolated_vertex() {
            return;
        }
        let alpha = c.ok("tar", build_tar(g, TarKind::IndependentSets, None, B));
        let dir = c.ok("tar", build_tar(g, TarKind::XirSets, Some(Domination), B));
        let vcir = c.ok("tar", build_tar(g, TarKind::XirSets, Some(VertexCover), B));
        if let (Some(alpha), Some(dir), Some(vcir)) = (alpha, dir, vcir) {
            c.check(alpha.is_induced_in(&dir), "alpha_tar_in_dir_tar", String::new);
            c.check(dir.is_induced_in(&vcir), "dir_tar_in_vcir_tar", String::new);
        }
    });
    let mut examples = Checker::new("P4/2K2");
    isomorphism_examples(&mut examples);
    result = result.merge(SuiteResult::from_checkers("tar", max_n, vec![examples]));
    result = result.merge(SuiteResult::from_checkers("tar", max_n, main_theorem_scan(max_n)?));
    Ok(result)
}

pub fn delta_zpir(max_n: usize) -> Result<SuiteResult> {
    let graphs = corpus::labeled(1, max_n)?;
    Ok(over_graphs("delta-zpir", max_n, &graphs, |g, c| {
        if let Some(r) = c.ok("report", report(g, Psd, B)) {
            let (delta, zpir) = (g.min_degree(), r.xir.value);
            if delta > zpir {
                c.observe("min_degree_exceeds_zpir", format!("delta={delta}, zpir={zpir}"));
            }
        }
    }))
}

pub fn forests(max_n: usize) -> Result<SuiteResult> {
    let graphs: Vec<Graph> = corpus::labeled(1, max_n)?
        .into_iter()
        .filter(|g| g.edge_count() + g.components().len() == g.order())
        .collect();
    Ok(over_graphs("forests", max_n, &graphs, |g, c| {
        if let Some(r) = c.ok("report", report(g, Skew, B)) {
            let v = r.values();
            if v.iter().any(|&x| x != v[0]) {
                c.observe("skew_parameters_differ_on_forest", format!("{v:?}"));
            }
        }
    }))
}
