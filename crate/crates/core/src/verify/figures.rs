//! The worked examples, checked against the transcribed figure graphs.

use super::{Checker, SuiteResult};
use crate::blocking::{enumerate, is_psd_fort, Provenance};
use crate::closure::{derived_blocking_family, generators, ClosureRule};
use crate::fixtures::{self, Fixture};
use crate::irredundance::{
    aux_domination, domination_chain, is_maximal_xir_set, is_xir_set, minimal_x_sets, private_set, report,
    AuxDomination,
};
use crate::blocking::designated_family;
use crate::tar::{build_tar, TarKind};
use crate::vertex_set::VertexSet;
use crate::Budget;

use ClosureRule::{Domination, Psd, Skew, Standard, VertexCover};

const B: Budget = Budget {
    max_order: Budget::DEFAULT_MAX_ORDER,
};

type Sets<'a> = &'a [&'a [u32]];

type Example = fn(&mut Checker) -> Option<()>;

const FIG4_FORTS: Sets = &[
    &[1, 2],
    &[5, 6],
    &[1, 2, 3, 5],
    &[1, 2, 3, 6],
    &[1, 2, 5, 6],
    &[1, 4, 5, 6],
    &[2, 4, 5, 6],
    &[1, 2, 3, 5, 6],
    &[1, 2, 4, 5, 6],
    &[1, 2, 3, 4, 5, 6],
];

const FIG5_FORTS: Sets = &[
    &[3, 4],
    &[5, 6],
    &[1, 2, 3, 5],
    &[1, 2, 3, 6],
    &[1, 2, 4, 5],
    &[1, 2, 4, 6],
    &[1, 3, 5, 6],
    &[1, 4, 5, 6],
    &[2, 3, 4, 5],
    &[2, 3, 4, 6],
    &[3, 4, 5, 6],
    &[1, 2, 3, 4, 5],
    &[1, 2, 3, 4, 6],
    &[1, 2, 3, 5, 6],
    &[1, 2, 4, 5, 6],
    &[1, 3, 4, 5, 6],
    &[2, 3, 4, 5, 6],
    &[1, 2, 3, 4, 5, 6],
];

const FIG5_CONNECTED_PSD_FORTS: Sets = &[
    &[3, 4],
    &[5, 6],
    &[1, 2, 3, 5],
    &[1, 2, 3, 6],
    &[1, 2, 4, 5],
    &[1, 2, 4, 6],
    &[1, 2, 3, 4, 5],
    &[1, 2, 3, 4, 6],
    &[1, 2, 3, 5, 6],
    &[1, 2, 4, 5, 6],
    &[1, 2, 3, 4, 5, 6],
];

const FIG7_SKEW_FORTS: Sets = &[
    &[1, 2],
    &[4, 6],
    &[1, 2, 4, 6],
    &[0, 1, 3, 4, 5],
    &[0, 1, 3, 5, 6],
    &[0, 2, 3, 4, 5],
    &[0, 2, 3, 5, 6],
    &[1, 2, 3, 4, 6],
    &[0, 1, 2, 3, 4, 5],
    &[0, 1, 2, 3, 5, 6],
    &[0, 1, 2, 4, 5, 6],
    &[0, 1, 3, 4, 5, 6],
    &[0, 2, 3, 4, 5, 6],
    &[0, 1, 2, 3, 4, 5, 6],
];

const BULL_NEIGHBORHOODS: Sets = &[&[1, 2], &[1, 2, 3, 4], &[2, 3, 4], &[2, 3, 4, 5], &[4, 5]];

const BULL_DERIVED: Sets = &[
    &[1, 2],
    &[4, 5],
    &[2, 3, 4],
    &[1, 2, 3, 4],
    &[1, 2, 4, 5],
    &[2, 3, 4, 5],
];

const BULL_GENERATORS: Sets = &[&[1, 2], &[4, 5], &[2, 3, 4]];

const PAW_DERIVED: Sets = &[
    &[1, 4],
    &[2, 3],
    &[2, 4],
    &[3, 4],
    &[1, 2, 4],
    &[1, 3, 4],
    &[2, 3, 4],
];

fn load(c: &mut Checker, name: &str) -> Option<Fixture> {
    c.ok("fixture", fixtures::get(name))
}

fn values(c: &mut Checker, f: &Fixture, rule: ClosureRule) -> Option<[usize; 4]> {
    c.ok(&format!("{}/report", f.name), report(&f.graph, rule, B)).map(|r| r.values())
}

fn listed(f: &Fixture, sets: Sets) -> Vec<VertexSet> {
    f.family(sets)
}

fn family_matches(c: &mut Checker, f: &Fixture, property: &str, got: &[VertexSet], expected: Sets) {
    let expected = listed(f, expected);
    if got == expected.as_slice() {
        return;
    }
    let show = |sets: &[VertexSet]| sets.iter().map(|&s| f.format_set(s)).collect::<Vec<_>>().join(" ");
    let extra: Vec<VertexSet> = got.iter().copied().filter(|s| !expected.contains(s)).collect();
    let missing: Vec<VertexSet> = expected.iter().copied().filter(|s| !got.contains(s)).collect();
    c.fail(
        property,
        format!(
            "{} computed, {} listed; extra [{}], missing [{}]",
            got.len(),
            expected.len(),
            show(&extra),
            show(&missing)
        ),
    );
}

fn check_tar(c: &mut Checker, drawing: &str, kind: TarKind, rule: Option<ClosureRule>) -> Option<crate::tar::TarGraph> {
    let d = c.ok("drawing", fixtures::tar_drawing(drawing))?;
    let base = c.ok("fixture", fixtures::get(&d.fixture))?;
    let t = c.ok(drawing, build_tar(&base.graph, kind, rule, B))?;
    c.check(t.nodes == d.node_sets(), &format!("{drawing}/nodes"), || {
        format!("{} computed, {} drawn", t.node_count(), d.nodes.len())
    });
    c.check(t.edge_sets() == d.edge_sets(), &format!("{drawing}/edges"), || {
        format!("{} computed, {} drawn", t.edge_count(), d.edge_sets().len())
    });
    Some(t)
}

fn figure1(c: &mut Checker) -> Option<()> {
    check_tar(c, "fig1_z", TarKind::XSets, Some(Standard))?;
    check_tar(c, "fig1_zir", TarKind::XirSets, Some(Standard))?;
    Some(())
}

fn figure2(c: &mut Checker) -> Option<()> {
    let l = load(c, "fig2")?;
    let v = values(c, &l, Psd)?;
    c.check_eq("fig2/zpir_Z+", [v[0], v[1]], [3, 4]);
    let family = c.ok("family", designated_family(Psd, &l.graph, B))?;
    let s = l.set(&[2, 3, 6]);
    c.check(is_maximal_xir_set(&family, s), "fig2/maximal_set", || "{2,3,6}".into());
    for (u, fort) in [(2, [2, 1, 4, 7].as_slice()), (3, &[3, 1, 4, 7, 8]), (6, &[6, 1, 4, 5, 7])] {
        let f = l.set(fort);
        let private = f.intersection(s) == l.set(&[u]);
        c.check(is_psd_fort(&l.graph, f) && private, "fig2/private_forts", || l.format_set(f));
    }
    Some(())
}

fn figure3(c: &mut Checker) -> Option<()> {
    let bc = load(c, "fig3")?;
    let v = values(c, &bc, Psd)?;
    c.check_eq("fig3/Z+_upper_Z+", [v[1], v[2]], [4, 5]);
    Some(())
}

fn figure4(c: &mut Checker) -> Option<()> {
    let t = load(c, "fig4")?;
    let psd = values(c, &t, Psd)?;
    let std = values(c, &t, Standard)?;
    c.check_eq("fig4/zpir_zir", [psd[0], std[0]], [1, 2]);
    let forts = c.ok("forts", enumerate(Standard, Provenance::EnumeratedForts, &t.graph, B))?;
    family_matches(c, &t, "fig4/forts", forts.members(), FIG4_FORTS);
    c.check(is_maximal_xir_set(&forts, t.set(&[3, 4])), "fig4/maximal_set", || "{3,4}".into());
    Some(())
}

fn figure5(c: &mut Checker) -> Option<()> {
    let g = load(c, "fig5")?;
    let psd = values(c, &g, Psd)?;
    let std = values(c, &g, Standard)?;
    c.check_eq("fig5/zpir_zir", [psd[0], std[0]], [3, 2]);
    let forts = c.ok("forts", enumerate(Standard, Provenance::EnumeratedForts, &g.graph, B))?;
    family_matches(c, &g, "fig5/forts", forts.members(), FIG5_FORTS);
    let s = g.set(&[1, 2]);
    c.check(is_maximal_xir_set(&forts, s), "fig5/maximal_set", || "{1,2}".into());
    let connected = c.ok("forts", enumerate(Psd, Provenance::ConnectedPsdForts, &g.graph, B))?;
    family_matches(c, &g, "fig5/connected_psd_forts", connected.members(), FIG5_CONNECTED_PSD_FORTS);
    let split = g.set(&[3, 4, 5, 6]);
    c.check(is_psd_fort(&g.graph, split) && !connected.contains(split), "fig5/disconnected_psd_fort", || {
        "{3,4,5,6}".into()
    });
    Some(())
}

fn figure6(c: &mut Checker) -> Option<()> {
    let fan = load(c, "fig6")?;
    let v = values(c, &fan, Skew)?;
    c.check_eq("fig6/upper_Z-_ZsIR", [v[2], v[3]], [1, 2]);
    let minimal = c.ok("minimal", minimal_x_sets(Skew, &fan.graph, B))?;
    family_matches(c, &fan, "fig6/minimal_skew_sets", &minimal, &[&[0], &[3], &[4]]);
    let forts = c.ok("forts", enumerate(Skew, Provenance::EnumeratedForts, &fan.graph, B))?;
    c.check(is_xir_set(&forts, fan.set(&[1, 2])), "fig6/irredundant_pair", || "{1,2}".into());
    Some(())
}

fn figure7(c: &mut Checker) -> Option<()> {
    let g = load(c, "fig7")?;
    let v = values(c, &g, Skew)?;
    c.check_eq("fig7/z-ir_Z-", [v[0], v[1]], [2, 3]);
    let forts = c.ok("forts", enumerate(Skew, Provenance::EnumeratedForts, &g.graph, B))?;
    family_matches(c, &g, "fig7/skew_forts", forts.members(), FIG7_SKEW_FORTS);
    let s = g.set(&[3, 5]);
    c.check(is_maximal_xir_set(&forts, s), "fig7/maximal_set", || "{3,5}".into());
    let private3 = c.ok("private", private_set(&forts, s, g.vertex("3")?))?;
    c.check_eq("fig7/private_fort_3", private3, Some(g.set(&[1, 2, 3, 4, 6])));
    Some(())
}

fn paw(c: &mut Checker) -> Option<()> {
    let p = load(c, "paw")?;
    let chain = c.ok("chain", domination_chain(&p.graph, B))?;
    c.check_eq(
        "paw/dir_tau_DIR_VCIR",
        [chain.dir.value, chain.tau.value, chain.dir_upper.value, chain.vcir_upper.value],
        [1, 2, 2, 3],
    );
    let vc = c.ok("family", designated_family(VertexCover, &p.graph, B))?;
    let dom = c.ok("family", designated_family(Domination, &p.graph, B))?;
    c.check(is_maximal_xir_set(&vc, p.set(&[1, 2, 3])), "paw/maximal_vcir_set", || "{1,2,3}".into());
    c.check(!is_xir_set(&dom, p.set(&[1, 2, 3])), "paw/not_dir_set", || "{1,2,3}".into());
    c.check(!is_maximal_xir_set(&vc, p.set(&[4])), "paw/extendable", || "{4}".into());
    c.check(is_xir_set(&vc, p.set(&[2, 4])), "paw/vcir_pair", || "{2,4}".into());
    let derived = c.ok("derived", derived_blocking_family(VertexCover, &p.graph, B))?;
    family_matches(c, &p, "paw/derived_vc_family", derived.members(), PAW_DERIVED);
    let gens = c.ok("generators", generators(&derived, true))?;
    c.check(gens.members() == vc.members(), "paw/generators_are_edges", || format!("{} generators", gens.len()));
    Some(())
}

fn bull(c: &mut Checker) -> Option<()> {
    let b = load(c, "bull")?;
    let nbhds = c.ok("family", designated_family(Domination, &b.graph, B))?;
    family_matches(c, &b, "bull/neighborhoods", nbhds.members(), BULL_NEIGHBORHOODS);
    let derived = c.ok("derived", derived_blocking_family(Domination, &b.graph, B))?;
    family_matches(c, &b, "bull/derived_dom_family", derived.members(), BULL_DERIVED);
    let gens = c.ok("generators", generators(&derived, true))?;
    family_matches(c, &b, "bull/generators", gens.members(), BULL_GENERATORS);
    Some(())
}

fn figure9(c: &mut Checker) -> Option<()> {
    let alpha = check_tar(c, "fig9_alpha", TarKind::IndependentSets, None)?;
    let dir = check_tar(c, "fig9_dir", TarKind::XirSets, Some(Domination))?;
    let vcir = check_tar(c, "fig9_vcir", TarKind::XirSets, Some(VertexCover))?;
    c.check_eq(
        "fig9/node_counts",
        [alpha.node_count(), dir.node_count(), vcir.node_count()],
        [11, 17, 23],
    );
    c.check(alpha.is_induced_in(&dir), "fig9/alpha_in_dir", String::new);
    c.check(dir.is_induced_in(&vcir), "fig9/dir_in_vcir", String::new);
    Some(())
}

fn total_two_domination(c: &mut Checker) -> Option<()> {
    let g = load(c, "dt2")?;
    let d = c.ok("aux", aux_domination(&g.graph, AuxDomination::Total2Dom, B))?;
    c.check_eq("dt2/gamma_t2", d.map(|w| w.value), Some(3));
    let x = g.set(&["0", "1", "2"]);
    c.check(
        crate::irredundance::is_aux_dominating(&g.graph, AuxDomination::Total2Dom, x),
        "dt2/x_set_dominates",
        String::new,
    );
    let v = values(c, &g, Skew)?;
    c.check_eq("dt2/ZsIR", v[3], g.graph.order() - 3);
    Some(())
}

/// Runs every worked-example check; one item per example.
pub fn verify_figures() -> SuiteResult {
    let examples: [(&str, Example); 11] = [
        ("fig1", figure1),
        ("fig2", figure2),
        ("fig3", figure3),
        ("fig4", figure4),
        ("fig5", figure5),
        ("fig6", figure6),
        ("fig7", figure7),
        ("paw", paw),
        ("bull", bull),
        ("fig9", figure9),
        ("dt2", total_two_domination),
    ];
    let checkers = examples
        .into_iter()
        .map(|(name, run)| {
            let g6 = fixtures::get(name).map(|f| f.g6).unwrap_or_else(|_| name.to_string());
            let mut c = Checker::new(g6);
            if run(&mut c).is_none() && c.passed() {
                c.fail(name, "example could not be evaluated");
            }
            c
        })
        .collect();
    SuiteResult::from_checkers("figures", 0, checkers)
}
