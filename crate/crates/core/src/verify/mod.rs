//! Verification suites: exhaustive property checks over small graphs, the
//! closed-form tables for standard families, and the worked examples.
//!
//! Every suite returns a [`SuiteResult`]. A failure names the graph (as
//! graph6), the property and what went wrong; failures are sorted by graph
//! and property so that results are identical from run to run regardless of
//! how the work was split across threads. Observational suites record
//! [`Observation`]s, which never fail a suite.

pub mod corpus;
mod figures;
mod suites;
mod tables;

use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::to_graph6;
use crate::SCHEMA_VERSION;

pub use crate::trees::generate_trees;
pub use figures::verify_figures;
pub use tables::{table_rows, verify_family_tables, TableRow};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Failure {
    pub graph_g6: String,
    pub property: String,
    pub detail: String,
}

/// A property that was tallied rather than asserted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Observation {
    pub property: String,
    pub count: u64,
    /// First graph in enumeration order showing the property.
    pub first_graph_g6: String,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteResult {
    pub schema: u32,
    pub suite: String,
    pub max_n: usize,
    pub graphs_checked: u64,
    pub failures: Vec<Failure>,
    pub observations: Vec<Observation>,
}

impl SuiteResult {
    pub fn new(suite: &str, max_n: usize) -> SuiteResult {
        SuiteResult {
            schema: SCHEMA_VERSION,
            suite: suite.to_string(),
            max_n,
            graphs_checked: 0,
            failures: Vec::new(),
            observations: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Combines two partial results of the same suite. Associative; the
    /// left operand's observation witnesses win.
    pub fn merge(mut self, other: SuiteResult) -> SuiteResult {
        self.graphs_checked += other.graphs_checked;
        self.failures.extend(other.failures);
        self.failures.sort();
        self.failures.dedup();
        for o in other.observations {
            self.add_observation(o);
        }
        self
    }

    fn add_observation(&mut self, o: Observation) {
        match self.observations.iter_mut().find(|x| x.property == o.property) {
            Some(x) => x.count += o.count,
            None => self.observations.push(o),
        }
    }

    /// Folds per-graph checkers, in enumeration order, into a result.
    pub fn from_checkers(suite: &str, max_n: usize, checkers: Vec<Checker>) -> SuiteResult {
        let mut r = SuiteResult::new(suite, max_n);
        for c in checkers {
            r.graphs_checked += 1;
            r.failures.extend(c.failures);
            for (property, detail) in c.observations {
                r.add_observation(Observation {
                    property,
                    count: 1,
                    first_graph_g6: c.g6.clone(),
                    detail,
                });
            }
        }
        r.failures.sort();
        r.failures.dedup();
        r
    }

    pub fn first_failure(&self) -> Option<&Failure> {
        self.failures.first()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("suite result serializes")
    }

    /// A short human-readable report; at most `limit` failures are listed.
    pub fn to_text(&self, limit: usize) -> String {
        let mut out = String::new();
        let status = if self.passed() { "PASS" } else { "FAIL" };
        let _ = writeln!(
            out,
            "{status} {} (max_n {}): {} checked, {} failures",
            self.suite,
            self.max_n,
            self.graphs_checked,
            self.failures.len()
        );
        for f in self.failures.iter().take(limit) {
            let _ = writeln!(out, "  fail {:<12} {:<36} {}", f.graph_g6, f.property, f.detail);
        }
        if self.failures.len() > limit {
            let _ = writeln!(out, "  ... {} more", self.failures.len() - limit);
        }
        for o in &self.observations {
            let _ = writeln!(
                out,
                "  note {:<36} {} graphs, first {}: {}",
                o.property, o.count, o.first_graph_g6, o.detail
            );
        }
        out
    }
}

/// Collects failures and observations for one graph (or one item).
#[derive(Debug, Clone)]
pub struct Checker {
    g6: String,
    failures: Vec<Failure>,
    observations: Vec<(String, String)>,
}

impl Checker {
    pub fn new(label: impl Into<String>) -> Checker {
        Checker {
            g6: label.into(),
            failures: Vec::new(),
            observations: Vec::new(),
        }
    }

    pub fn for_graph(g: &Graph) -> Checker {
        Checker::new(to_graph6(g))
    }

    pub fn fail(&mut self, property: &str, detail: impl Into<String>) {
        self.failures.push(Failure {
            graph_g6: self.g6.clone(),
            property: property.to_string(),
            detail: detail.into(),
        });
    }

    pub fn check(&mut self, ok: bool, property: &str, detail: impl FnOnce() -> String) {
        if !ok {
            self.fail(property, detail());
        }
    }

    pub fn check_eq<T: PartialEq + std::fmt::Debug>(&mut self, property: &str, got: T, expected: T) {
        if got != expected {
            self.fail(property, format!("got {got:?}, expected {expected:?}"));
        }
    }

    /// Unwraps an engine result, recording an error as a failure.
    pub fn ok<T>(&mut self, property: &str, r: Result<T>) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.fail(property, format!("engine error: {e}"));
                None
            }
        }
    }

    pub fn observe(&mut self, property: &str, detail: impl Into<String>) {
        self.observations.push((property.to_string(), detail.into()));
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Runs `check` on every graph in parallel.
pub(crate) fn over_graphs<F>(suite: &str, max_n: usize, graphs: &[Graph], check: F) -> SuiteResult
where
    F: Fn(&Graph, &mut Checker) + Sync,
{
    let checkers: Vec<Checker> = graphs
        .par_iter()
        .map(|g| {
            let mut c = Checker::for_graph(g);
            check(g, &mut c);
            c
        })
        .collect();
    SuiteResult::from_checkers(suite, max_n, checkers)
}

/// Name, largest accepted `max_n`, default `max_n`, and a one-line summary
/// for every suite.
pub const SUITES: &[(&str, usize, usize, &str)] = &[
    ("hitting", 6, 5, "X-sets are exactly the sets meeting every fort"),
    ("fort-relations", 6, 5, "containments among standard, PSD and skew forts"),
    ("chain", 6, 5, "xir <= X <= upper X <= XIR for all five parameters"),
    ("vcir-eq-tau", 6, 6, "vcir = tau, with an exchange-built cover"),
    ("ext-dom-chain", 6, 5, "the extended domination chain without isolated vertices"),
    ("closure-laws", 6, 5, "closure axioms, X-compliance, component consistency"),
    ("derived-families", 6, 5, "closure-derived families, generators, irredundance"),
    ("characterizations", 6, 6, "trees, near-complete graphs, skew n-2 joins"),
    ("bounds", 6, 6, "domination-type bounds on the upper irredundance numbers"),
    ("component-additivity", 6, 6, "xir and XIR add over disjoint unions"),
    ("tree-strip", 6, 6, "deleting a pendant tree keeps zpir and ZpIR"),
    ("trees", 12, 10, "skew parameters agree on trees; PSD ones are 1"),
    ("tar", 5, 5, "reconfiguration graph structure and isomorphism"),
    ("delta-zpir", 6, 6, "observational: min degree versus zpir"),
    ("forests", 6, 6, "observational: skew parameters on forests"),
    ("tables", 12, 11, "closed forms for paths, cycles, K_pq, K_n, empty graphs"),
    ("figures", 0, 0, "the worked examples"),
];

pub fn suite_names() -> Vec<&'static str> {
    SUITES.iter().map(|s| s.0).collect()
}

pub fn default_max_n(name: &str) -> Result<usize> {
    SUITES
        .iter()
        .find(|s| s.0 == name)
        .map(|s| s.2)
        .ok_or_else(|| Error::UnknownSuite(name.to_string()))
}

/// Runs one suite. `figures` ignores `max_n`.
pub fn run_suite(name: &str, max_n: usize) -> Result<SuiteResult> {
    let &(_, limit, _, _) = SUITES
        .iter()
        .find(|s| s.0 == name)
        .ok_or_else(|| Error::UnknownSuite(name.to_string()))?;
    if name != "figures" && max_n > limit {
        return Err(Error::OrderBudgetExceeded { n: max_n, budget: limit });
    }
    match name {
        "hitting" => suites::hitting(max_n),
        "fort-relations" => suites::fort_relations(max_n),
        "chain" => suites::chain(max_n),
        "vcir-eq-tau" => suites::vcir_eq_tau(max_n),
        "ext-dom-chain" => suites::ext_dom_chain(max_n),
        "closure-laws" => suites::closure_laws(max_n),
        "derived-families" => suites::derived_families(max_n),
        "characterizations" => suites::characterizations(max_n),
        "bounds" => suites::bounds(max_n),
        "component-additivity" => suites::component_additivity(max_n),
        "tree-strip" => suites::tree_strip(max_n),
        "trees" => suites::trees(max_n),
        "tar" => suites::tar(max_n),
        "delta-zpir" => suites::delta_zpir(max_n),
        "forests" => suites::forests(max_n),
        "tables" => verify_family_tables(max_n),
        "figures" => Ok(verify_figures()),
        _ => unreachable!("every listed suite is dispatched"),
    }
}
