//! Simple undirected graphs with labeled vertices.

use std::collections::HashMap;

use crate::error::{Error, Result};

pub type VertexId = usize;
pub type EdgeId = usize;

/// A simple undirected graph. Vertices carry unique string labels; edges are
/// stored with `u < v` and indexed in insertion order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<String>,
    by_label: HashMap<String, VertexId>,
    edges: Vec<(VertexId, VertexId)>,
    by_pair: HashMap<(VertexId, VertexId), EdgeId>,
}

impl Graph {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_vertex(&mut self, label: impl Into<String>) -> Result<VertexId> {
        let label = label.into();
        if self.by_label.contains_key(&label) {
            return Err(Error::Graph(format!("duplicate vertex label {label}")));
        }
        let id = self.labels.len();
        self.by_label.insert(label.clone(), id);
        self.labels.push(label);
        Ok(id)
    }

    pub fn add_edge(&mut self, u: VertexId, v: VertexId) -> Result<EdgeId> {
        let n = self.labels.len();
        if u >= n || v >= n {
            return Err(Error::Graph(format!("edge ({u},{v}) references a missing vertex")));
        }
        if u == v {
            return Err(Error::Graph(format!("self-loop at {}", self.labels[u])));
        }
        let key = (u.min(v), u.max(v));
        if self.by_pair.contains_key(&key) {
            return Err(Error::Graph(format!("parallel edge {}-{}", self.labels[key.0], self.labels[key.1])));
        }
        let id = self.edges.len();
        self.edges.push(key);
        self.by_pair.insert(key, id);
        Ok(id)
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn label(&self, v: VertexId) -> &str {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn vertex(&self, label: &str) -> Option<VertexId> {
        self.by_label.get(label).copied()
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn edge(&self, e: EdgeId) -> (VertexId, VertexId) {
        self.edges[e]
    }

    pub fn edge_between(&self, u: VertexId, v: VertexId) -> Option<EdgeId> {
        self.by_pair.get(&(u.min(v), u.max(v))).copied()
    }

    /// Human-readable `a-b` key used by the JSON drawing format.
    pub fn edge_key(&self, e: EdgeId) -> String {
        let (u, v) = self.edges[e];
        format!("{}|{}", self.labels[u], self.labels[v])
    }

    pub fn adjacent(&self, e: EdgeId, f: EdgeId) -> bool {
        let (a, b) = self.edges[e];
        let (c, d) = self.edges[f];
        a == c || a == d || b == c || b == d
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n()];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    /// Subgraph on the kept vertices and edges. Returns the graph together with
    /// old-to-new vertex and edge maps.
    pub fn induced(
        &self,
        keep_vertex: &[bool],
        keep_edge: &[bool],
    ) -> (Graph, Vec<Option<VertexId>>, Vec<Option<EdgeId>>) {
        let mut g = Graph::new();
        let mut vmap = vec![None; self.n()];
        for (v, &keep) in keep_vertex.iter().enumerate() {
            if keep {
                vmap[v] = Some(g.add_vertex(self.labels[v].clone()).expect("labels are unique"));
            }
        }
        let mut emap = vec![None; self.m()];
        for (e, &(u, v)) in self.edges.iter().enumerate() {
            if keep_edge[e] {
                if let (Some(a), Some(b)) = (vmap[u], vmap[v]) {
                    emap[e] = Some(g.add_edge(a, b).expect("subgraph of a simple graph"));
                }
            }
        }
        (g, vmap, emap)
    }

    /// Complete graph on `n` vertices labeled `0..n`.
    pub fn complete(n: usize) -> Graph {
        let mut g = Graph::new();
        for i in 0..n {
            g.add_vertex(i.to_string()).unwrap();
        }
        for i in 0..n {
            for j in i + 1..n {
                g.add_edge(i, j).unwrap();
            }
        }
        g
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_loops_and_parallels() {
        let mut g = Graph::new();
        let a = g.add_vertex("a").unwrap();
        let b = g.add_vertex("b").unwrap();
        assert!(g.add_vertex("a").is_err());
        assert!(g.add_edge(a, a).is_err());
        g.add_edge(a, b).unwrap();
        assert!(g.add_edge(b, a).is_err());
        assert!(g.add_edge(a, 7).is_err());
        assert_eq!(g.edge_between(b, a), Some(0));
    }

    #[test]
    fn complete_graph_counts() {
        let g = Graph::complete(7);
        assert_eq!((g.n(), g.m()), (7, 21));
        assert!(g.degrees().iter().all(|&d| d == 6));
    }
}
