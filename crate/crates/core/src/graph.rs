//! Simple undirected graphs with positive integer edge weights.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Vertices carry names; vertex order is the insertion order and is part of
/// the graph's identity (it fixes serialization and generator output).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledGraph {
    names: Vec<String>,
    adj: Vec<BTreeMap<usize, u64>>,
}

impl LabeledGraph {
    pub fn new(names: Vec<String>) -> Result<Self> {
        let mut seen = std::collections::BTreeSet::new();
        for n in &names {
            if !seen.insert(n.as_str()) {
                return Err(Error::InvalidGraph(format!("duplicate vertex `{n}`")));
            }
        }
        let adj = vec![BTreeMap::new(); names.len()];
        Ok(Self { names, adj })
    }

    /// Builds from named edges `(u, v, weight)`.
    pub fn from_named_edges(names: Vec<String>, edges: &[(String, String, u64)]) -> Result<Self> {
        let mut g = Self::new(names)?;
        for (u, v, w) in edges {
            let a = g.index_of(u).ok_or_else(|| Error::UnknownLabel(u.clone()))?;
            let b = g.index_of(v).ok_or_else(|| Error::UnknownLabel(v.clone()))?;
            g.add_edge(a, b, *w)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize, weight: u64) -> Result<()> {
        let n = self.names.len();
        if u >= n || v >= n {
            return Err(Error::InvalidGraph(format!("vertex index out of range ({u}, {v})")));
        }
        if u == v {
            return Err(Error::InvalidGraph(format!("self-loop at `{}`", self.names[u])));
        }
        if weight == 0 {
            return Err(Error::InvalidGraph("edge weight must be positive".into()));
        }
        self.adj[u].insert(v, weight);
        self.adj[v].insert(u, weight);
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(BTreeMap::len).sum::<usize>() / 2
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Edge weight, zero when not adjacent.
    pub fn weight(&self, u: usize, v: usize) -> u64 {
        self.adj[u].get(&v).copied().unwrap_or(0)
    }

    pub fn neighbours(&self, v: usize) -> impl Iterator<Item = (usize, u64)> + '_ {
        self.adj[v].iter().map(|(&u, &w)| (u, w))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Edges `(u, v, w)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize, u64)> {
        let mut out = Vec::new();
        for (u, m) in self.adj.iter().enumerate() {
            for (&v, &w) in m {
                if u < v {
                    out.push((u, v, w));
                }
            }
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        if self.names.is_empty() {
            return true;
        }
        let mut seen = vec![false; self.names.len()];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for (u, _) in self.neighbours(v) {
                if !seen[u] {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Graphviz source: undirected, `label=<weight>` on every edge.
    pub fn to_dot(&self, name: &str) -> String {
        self.to_dot_with(name, |_| None)
    }

    /// Like [`to_dot`](Self::to_dot), with an optional per-vertex label.
    pub fn to_dot_with(&self, name: &str, vertex_label: impl Fn(usize) -> Option<String>) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "graph \"{name}\" {{");
        for (v, n) in self.names.iter().enumerate() {
            match vertex_label(v) {
                Some(l) => {
                    let _ = writeln!(s, "  \"{n}\" [label=\"{l}\"];");
                }
                None => {
                    let _ = writeln!(s, "  \"{n}\";");
                }
            }
        }
        for (u, v, w) in self.edges() {
            let _ = writeln!(s, "  \"{}\" -- \"{}\" [label={w}];", self.names[u], self.names[v]);
        }
        s.push_str("}\n");
        s
    }

    pub fn to_file_format(&self) -> GraphFile {
        GraphFile {
            vertices: self.names.clone(),
            edges: self
                .edges()
                .into_iter()
                .map(|(u, v, w)| (self.names[u].clone(), self.names[v].clone(), w))
                .collect(),
        }
    }
}

/// On-disk graph description:
/// `{"vertices": ["a", "b"], "edges": [["a", "b", 1]]}`.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct GraphFile {
    pub vertices: Vec<String>,
    pub edges: Vec<(String, String, u64)>,
}

impl GraphFile {
    pub fn parse(text: &str) -> Result<LabeledGraph> {
        let f: GraphFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        LabeledGraph::from_named_edges(f.vertices, &f.edges)
    }
}

/// The Petersen graph built as the generalized Petersen graph `GP(5, 2)`:
/// outer 5-cycle, inner pentagram, five spokes.
pub fn generalized_petersen_5_2() -> LabeledGraph {
    let names = (0..5)
        .map(|i| format!("u{i}"))
        .chain((0..5).map(|i| format!("v{i}")))
        .collect();
    let mut g = LabeledGraph::new(names).expect("distinct names");
    for i in 0..5 {
        g.add_edge(i, (i + 1) % 5, 1).expect("valid edge");
        g.add_edge(5 + i, 5 + (i + 2) % 5, 1).expect("valid edge");
        g.add_edge(i, 5 + i, 1).expect("valid edge");
    }
    g
}

/// Replaces every edge `u -- v` by a path `u -- m -- v` through a new vertex.
pub fn subdivide(g: &LabeledGraph) -> LabeledGraph {
    let edges = g.edges();
    let mut names = g.names().to_vec();
    names.extend(edges.iter().map(|&(u, v, _)| format!("{}~{}", g.name(u), g.name(v))));
    let mut out = LabeledGraph::new(names).expect("fresh names");
    let n = g.vertex_count();
    for (k, &(u, v, _)) in edges.iter().enumerate() {
        out.add_edge(u, n + k, 1).expect("valid edge");
        out.add_edge(v, n + k, 1).expect("valid edge");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gp52_is_cubic_with_fifteen_edges() {
        let g = generalized_petersen_5_2();
        assert_eq!(g.edge_count(), 15);
        assert!((0..10).all(|v| g.degree(v) == 3));
        assert!(g.is_connected());
    }

    #[test]
    fn subdivision_counts() {
        let s = subdivide(&generalized_petersen_5_2());
        assert_eq!((s.vertex_count(), s.edge_count()), (25, 30));
    }

    #[test]
    fn dot_output_lists_weights() {
        let mut g = LabeledGraph::new(vec!["a".into(), "b".into()]).unwrap();
        g.add_edge(0, 1, 2).unwrap();
        let dot = g.to_dot("t");
        assert!(dot.contains("\"a\" -- \"b\" [label=2];"));
    }

    #[test]
    fn graph_file_round_trip_and_errors() {
        let g = generalized_petersen_5_2();
        let text = serde_json::to_string(&g.to_file_format()).unwrap();
        assert_eq!(GraphFile::parse(&text).unwrap(), g);
        assert!(matches!(GraphFile::parse("{\"vertices\": [}"), Err(Error::Parse(_))));
        let loop_edge = r#"{"vertices": ["a"], "edges": [["a", "a", 1]]}"#;
        assert!(matches!(GraphFile::parse(loop_edge), Err(Error::InvalidGraph(_))));
    }
}
