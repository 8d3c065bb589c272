//! Undirected simple graphs stored as bit-vector adjacency rows.
//!
//! Vertices are `0..order` internally. Every external format (JSON, DOT,
//! reports) uses 1-based labels `x_1..x_m`.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;
use crate::MAX_VERTICES;

#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<VertexSet>,
    labels: Option<Vec<String>>,
}

/// Interchange format shared by the CLI and all report writers.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub order: usize,
    /// 1-based endpoint pairs.
    pub edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl Graph {
    /// Builds a graph from 0-based edges. Parallel edges collapse.
    pub fn from_edges(order: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if order == 0 {
            return Err(Error::EmptyGraph);
        }
        if order > MAX_VERTICES {
            return Err(Error::TooManyVertices(order));
        }
        let mut adj = vec![VertexSet::EMPTY; order];
        for (u, v) in edges {
            if u == v || u >= order || v >= order {
                return Err(Error::InvalidEdge(u + 1, v + 1));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Graph { adj, labels: None })
    }

    /// Builds a graph from symmetric adjacency rows. Used by builders that
    /// already hold rows; rejects asymmetric rows and loops.
    pub fn from_rows(rows: Vec<VertexSet>) -> Result<Self> {
        let order = rows.len();
        if order == 0 {
            return Err(Error::EmptyGraph);
        }
        if order > MAX_VERTICES {
            return Err(Error::TooManyVertices(order));
        }
        let all = VertexSet::full(order);
        for (u, row) in rows.iter().enumerate() {
            if row.contains(u) || !row.is_subset(all) {
                return Err(Error::InvalidEdge(u + 1, u + 1));
            }
            if let Some(v) = row.iter().find(|&v| !rows[v].contains(u)) {
                return Err(Error::InvalidEdge(u + 1, v + 1));
            }
        }
        Ok(Graph { adj: rows, labels: None })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.order(), "one label per vertex");
        self.labels = Some(labels);
        self
    }

    pub fn complete(order: usize) -> Result<Self> {
        let mut edges = Vec::new();
        for u in 0..order {
            for v in u + 1..order {
                edges.push((u, v));
            }
        }
        Graph::from_edges(order, edges)
    }

    pub fn cycle(order: usize) -> Result<Self> {
        Graph::from_edges(order, (0..order).map(|v| (v, (v + 1) % order)))
    }

    pub fn path(order: usize) -> Result<Self> {
        Graph::from_edges(order, (1..order).map(|v| (v - 1, v)))
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.order())
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    #[inline]
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        self.adj[v].with(v)
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn rows(&self) -> &[VertexSet] {
        &self.adj
    }

    /// Edges as 0-based pairs `(u, v)` with `u < v`, in row order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, row)| row.iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.len()).sum::<usize>() / 2
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.order()).map(|v| self.degree(v)).collect()
    }

    /// The common degree, if every vertex has the same degree.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.degree(0);
        (1..self.order()).all(|v| self.degree(v) == d).then_some(d)
    }

    /// Vertices reachable from `v` (including `v`).
    pub fn component_of(&self, v: usize) -> VertexSet {
        let mut seen = VertexSet::singleton(v);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for u in frontier {
                next = next.union(self.adj[u]);
            }
            frontier = next.difference(seen);
            seen = seen.union(frontier);
        }
        seen
    }

    /// Connected components, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut rest = self.vertices();
        let mut out = Vec::new();
        while let Some(v) = rest.first() {
            let c = self.component_of(v);
            rest = rest.difference(c);
            out.push(c);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.component_of(0) == self.vertices()
    }

    /// Display label of vertex `v` (`x_{v+1}` unless custom labels are set).
    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => format!("x_{}", v + 1),
        }
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn to_json(&self) -> GraphJson {
        GraphJson {
            order: self.order(),
            edges: self.edges().map(|(u, v)| [u + 1, v + 1]).collect(),
            labels: self.labels.clone(),
        }
    }

    pub fn from_json(json: &GraphJson) -> Result<Self> {
        let mut edges = Vec::with_capacity(json.edges.len());
        for &[a, b] in &json.edges {
            if a == 0 || b == 0 {
                return Err(Error::InvalidEdge(a, b));
            }
            edges.push((a - 1, b - 1));
        }
        let g = Graph::from_edges(json.order, edges)?;
        match &json.labels {
            Some(l) if l.len() != json.order => Err(Error::Json(format!(
                "{} labels given for {} vertices",
                l.len(),
                json.order
            ))),
            Some(l) => Ok(g.with_labels(l.clone())),
            None => Ok(g),
        }
    }

    pub fn from_json_str(text: &str) -> Result<Self> {
        let json: GraphJson = serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))?;
        Graph::from_json(&json)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&self.to_json()).expect("graph JSON is always serializable")
    }

    /// Graphviz DOT text; nodes are named by their labels.
    pub fn to_dot(&self, name: &str) -> String {
        let mut out = String::new();
        writeln!(out, "graph \"{}\" {{", name.replace('"', "\\\"")).unwrap();
        for v in 0..self.order() {
            writeln!(out, "  \"{}\";", self.label(v)).unwrap();
        }
        for (u, v) in self.edges() {
            writeln!(out, "  \"{}\" -- \"{}\";", self.label(u), self.label(v)).unwrap();
        }
        out.push_str("}\n");
        out
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("order", &self.order())
            .field("edges", &self.edges().map(|(u, v)| (u + 1, v + 1)).collect::<Vec<_>>())
            .finish()
    }
}
