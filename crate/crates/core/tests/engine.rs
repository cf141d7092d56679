use uirred::blocking::{designated_family, enumerate, BlockingFamily};
use uirred::fixtures;
use uirred::irredundance::{domination_chain, report, vcir_to_cover};
use uirred::tar::{build_tar, export_dot, TarKind};
use uirred::{Budget, ClosureRule, Error, FamilySpec, Graph, Provenance, VertexSet};

fn build(spec: &str) -> Graph {
    FamilySpec::parse(spec).unwrap().build().unwrap()
}

fn b() -> Budget {
    Budget::new(Budget::DEFAULT_MAX_ORDER)
}

#[test]
fn odd_path_skew_values_are_one() {
    let r = report(&build("path:7"), ClosureRule::Skew, b()).unwrap();
    assert_eq!(r.values(), [1, 1, 1, 1]);
    let json = r.to_json();
    assert_eq!(json["schema"], 1);
    assert_eq!(json["xir_upper"], 1);
}

#[test]
fn star_has_five_forts() {
    let forts = enumerate(ClosureRule::Standard, Provenance::EnumeratedForts, &build("star:1,3"), b()).unwrap();
    let members: Vec<Vec<usize>> = forts.iter().map(VertexSet::to_vec).collect();
    assert_eq!(members, [vec![1, 2], vec![1, 3], vec![2, 3], vec![1, 2, 3], vec![0, 1, 2, 3]]);
}

#[test]
fn family_json_round_trip() {
    let g = fixtures::get("fig4").unwrap().graph;
    let forts = designated_family(ClosureRule::Standard, &g, b()).unwrap();
    let back = BlockingFamily::from_json(&forts.to_json()).unwrap();
    assert_eq!(back.members(), forts.members());
    assert!(!back.is_complete());
}

#[test]
fn budget_guard() {
    let big = build("path:17");
    assert_eq!(
        report(&big, ClosureRule::Standard, b()),
        Err(Error::OrderBudgetExceeded { n: 17, budget: 16 })
    );
    assert!(report(&build("path:12"), ClosureRule::Standard, Budget::new(11)).is_err());
}

#[test]
fn fixtures_are_reachable_by_name_and_alias() {
    for name in ["fig2", "fig3", "fig4", "fig5", "fig6", "fig7", "bull", "paw", "bc"] {
        assert!(fixtures::get(name).is_ok(), "{name}");
    }
    assert_eq!(fixtures::get("bc").unwrap().name, "fig3");
}

#[test]
fn chain_on_paw() {
    let c = domination_chain(&fixtures::get("paw").unwrap().graph, b()).unwrap();
    assert_eq!(c.chain(), [1, 1, 1, 2, 2, 2, 3]);
    assert_eq!(c.tau.value, 2);
}

#[test]
fn cover_from_vcir_set_on_cycle() {
    let c6 = build("cycle:6");
    let r = report(&c6, ClosureRule::VertexCover, b()).unwrap();
    let cover = vcir_to_cover(&c6, r.xir.witness, b()).unwrap();
    assert_eq!(cover.len(), 3);
    assert!(c6.edges().iter().all(|&(u, v)| cover.contains(u) || cover.contains(v)));
}

#[test]
fn star_tar_dot() {
    let t = build_tar(&build("star:1,3"), TarKind::XSets, Some(ClosureRule::Standard), b()).unwrap();
    assert_eq!((t.node_count(), t.edge_count()), (8, 10));
    let dot = export_dot(&t);
    assert!(dot.starts_with("graph"));
    assert_eq!(dot, export_dot(&t.clone()));
}
