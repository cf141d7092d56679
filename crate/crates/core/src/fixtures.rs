//! Named graphs from the worked examples, with their printed vertex labels,
//! and transcriptions of the drawn reconfiguration graphs.
//!
//! The data lives in `fixtures/figures.json`. Each graph is stored both as an
//! edge list in printed labels and as graph6; loading checks that they agree.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use serde::Deserialize;

use crate::closure::ClosureRule;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::parse_graph6;
use crate::tar::TarKind;
use crate::vertex_set::VertexSet;

const DATA: &str = include_str!("../fixtures/figures.json");

#[derive(Debug, Clone)]
pub struct Fixture {
    pub name: String,
    pub figure: Option<u32>,
    pub aliases: Vec<String>,
    /// `labels[i]` is the printed label of vertex `i`.
    pub labels: Vec<String>,
    pub graph: Graph,
    pub g6: String,
    pub note: Option<String>,
}

impl Fixture {
    pub fn vertex(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn try_set<L: ToString>(&self, labels: &[L]) -> Result<VertexSet> {
        labels
            .iter()
            .map(|l| {
                let l = l.to_string();
                self.vertex(&l)
                    .ok_or_else(|| Error::MalformedFixture(format!("{}: no vertex labeled {l}", self.name)))
            })
            .collect()
    }

    /// Panics on an unknown label.
    pub fn set<L: ToString>(&self, labels: &[L]) -> VertexSet {
        self.try_set(labels).unwrap()
    }

    /// Sorted by bitmask, matching `BlockingFamily::members`.
    pub fn family<L: ToString>(&self, sets: &[&[L]]) -> Vec<VertexSet> {
        let mut out: Vec<VertexSet> = sets.iter().map(|s| self.set(s)).collect();
        out.sort();
        out
    }

    pub fn labels_of(&self, s: VertexSet) -> Vec<&str> {
        s.iter().map(|v| self.labels[v].as_str()).collect()
    }

    pub fn format_set(&self, s: VertexSet) -> String {
        format!("{{{}}}", self.labels_of(s).join(","))
    }
}

/// A reconfiguration graph as drawn: node ids are the drawing's own ids.
#[derive(Debug, Clone)]
pub struct TarDrawing {
    pub name: String,
    pub fixture: String,
    pub kind: TarKind,
    pub parameter: Option<ClosureRule>,
    pub nodes: BTreeMap<String, VertexSet>,
    pub edges: Vec<(String, String)>,
}

impl TarDrawing {
    pub fn node_sets(&self) -> Vec<VertexSet> {
        let mut v: Vec<VertexSet> = self.nodes.values().copied().collect();
        v.sort();
        v
    }

    /// Edges as sorted pairs of vertex sets.
    pub fn edge_sets(&self) -> Vec<(VertexSet, VertexSet)> {
        let mut v: Vec<(VertexSet, VertexSet)> = self
            .edges
            .iter()
            .map(|(a, b)| {
                let (a, b) = (self.nodes[a], self.nodes[b]);
                (a.min(b), a.max(b))
            })
            .collect();
        v.sort();
        v.dedup();
        v
    }
}

#[derive(Deserialize)]
struct RawFixture {
    name: String,
    figure: Option<u32>,
    aliases: Vec<String>,
    labels: Vec<String>,
    edges: Vec<(String, String)>,
    g6: String,
    note: Option<String>,
}

#[derive(Deserialize)]
struct RawTar {
    name: String,
    fixture: String,
    kind: TarKind,
    parameter: Option<ClosureRule>,
    nodes: BTreeMap<String, Vec<String>>,
    edges: Vec<(String, String)>,
}

#[derive(Deserialize)]
struct RawData {
    fixtures: Vec<RawFixture>,
    tars: Vec<RawTar>,
}

struct Data {
    fixtures: Vec<Fixture>,
    tars: Vec<TarDrawing>,
}

fn load() -> Result<Data> {
    let raw: RawData = serde_json::from_str(DATA).map_err(|e| Error::MalformedFixture(e.to_string()))?;
    let mut fixtures = Vec::new();
    for f in raw.fixtures {
        let graph = parse_graph6(&f.g6)?;
        let index = |l: &str| {
            f.labels
                .iter()
                .position(|x| x == l)
                .ok_or_else(|| Error::MalformedFixture(format!("{}: unknown label {l}", f.name)))
        };
        let edges = f
            .edges
            .iter()
            .map(|(a, b)| Ok((index(a)?, index(b)?)))
            .collect::<Result<Vec<_>>>()?;
        if graph.order() != f.labels.len() || Graph::build(f.labels.len(), &edges)? != graph {
            return Err(Error::MalformedFixture(format!("{}: edge list disagrees with graph6", f.name)));
        }
        fixtures.push(Fixture {
            name: f.name,
            figure: f.figure,
            aliases: f.aliases,
            labels: f.labels,
            graph,
            g6: f.g6,
            note: f.note,
        });
    }
    let mut tars = Vec::new();
    for t in raw.tars {
        let base = fixtures
            .iter()
            .find(|f| f.name == t.fixture)
            .ok_or_else(|| Error::UnknownFixture(t.fixture.clone()))?;
        let nodes = t
            .nodes
            .iter()
            .map(|(id, labels)| Ok((id.clone(), base.try_set(labels)?)))
            .collect::<Result<BTreeMap<_, _>>>()?;
        if let Some((a, b)) = t.edges.iter().find(|(a, b)| !nodes.contains_key(a) || !nodes.contains_key(b)) {
            return Err(Error::MalformedFixture(format!("{}: edge {a}-{b} has an undrawn end", t.name)));
        }
        tars.push(TarDrawing {
            name: t.name,
            fixture: t.fixture,
            kind: t.kind,
            parameter: t.parameter,
            nodes,
            edges: t.edges,
        });
    }
    Ok(Data { fixtures, tars })
}

fn data() -> Result<&'static Data> {
    static DATA: OnceLock<Result<Data>> = OnceLock::new();
    DATA.get_or_init(load).as_ref().map_err(Clone::clone)
}

pub fn all() -> Result<Vec<Fixture>> {
    Ok(data()?.fixtures.clone())
}

pub fn names() -> Vec<String> {
    data()
        .map(|d| d.fixtures.iter().map(|f| f.name.clone()).collect())
        .unwrap_or_default()
}

/// Looks up a fixture by name or alias.
pub fn get(name: &str) -> Result<Fixture> {
    data()?
        .fixtures
        .iter()
        .find(|f| f.name == name || f.aliases.iter().any(|a| a == name))
        .cloned()
        .ok_or_else(|| Error::UnknownFixture(name.to_string()))
}

pub fn tar_drawings() -> Result<Vec<TarDrawing>> {
    Ok(data()?.tars.clone())
}

pub fn tar_drawing(name: &str) -> Result<TarDrawing> {
    data()?
        .tars
        .iter()
        .find(|t| t.name == name)
        .cloned()
        .ok_or_else(|| Error::UnknownFixture(name.to_string()))
}
