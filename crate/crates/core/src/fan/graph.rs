//! The exchange graph: full cones joined along common facets.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt::Write;

use serde::Serialize;

use super::tree::{enumerate_trees, tilting_of_tree, PlaneTree};
use crate::error::Result;
use crate::model::{Multisegment, Segment};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Edge {
    pub a: usize,
    pub b: usize,
    /// Exchanged segments, ordered so the first extends by the second.
    pub pair: (Segment, Segment),
}

#[derive(Debug, Clone)]
pub struct ExchangeGraph {
    pub t: usize,
    pub trees: Vec<PlaneTree>,
    pub tiltings: Vec<Multisegment>,
    pub edges: Vec<Edge>,
}

impl ExchangeGraph {
    pub fn vertex_count(&self) -> usize {
        self.trees.len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.trees.len()];
        for e in &self.edges {
            deg[e.a] += 1;
            deg[e.b] += 1;
        }
        deg
    }

    pub fn is_regular(&self, k: usize) -> bool {
        self.degrees().iter().all(|&x| x == k)
    }

    pub fn is_connected(&self) -> bool {
        let n = self.trees.len();
        if n == 0 {
            return true;
        }
        let mut adj = vec![Vec::new(); n];
        for e in &self.edges {
            adj[e.a].push(e.b);
            adj[e.b].push(e.a);
        }
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        while let Some(v) = queue.pop_front() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    pub fn to_dot(&self) -> String {
        let mut out = format!("graph exchange_{} {{\n", self.t);
        for (k, m) in self.tiltings.iter().enumerate() {
            writeln!(out, "  v{k} [label=\"{m}\"];").unwrap();
        }
        for e in &self.edges {
            writeln!(
                out,
                "  v{} -- v{} [label=\"{} {}\"];",
                e.a, e.b, e.pair.0, e.pair.1
            )
            .unwrap();
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> GraphJson {
        GraphJson {
            t: self.t,
            vertices: self
                .trees
                .iter()
                .zip(&self.tiltings)
                .enumerate()
                .map(|(id, (tree, m))| VertexJson {
                    id,
                    tree: tree.to_string(),
                    tilting: m.to_string(),
                })
                .collect(),
            edges: self.edges.clone(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct VertexJson {
    pub id: usize,
    pub tree: String,
    pub tilting: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct GraphJson {
    pub t: usize,
    pub vertices: Vec<VertexJson>,
    pub edges: Vec<Edge>,
}

/// `Γ_t` on all trees with `t + 1` leaves; one edge per unordered neighbor pair.
pub fn exchange_graph(t: usize, tree_t_max: usize) -> Result<ExchangeGraph> {
    let trees = enumerate_trees(t, tree_t_max)?;
    let index: HashMap<&PlaneTree, usize> =
        trees.iter().enumerate().map(|(k, tr)| (tr, k)).collect();
    let mut seen = BTreeSet::new();
    let mut edges = Vec::new();
    for (a, tree) in trees.iter().enumerate() {
        for n in tree.neighbors() {
            let b = index[&n.tree];
            if seen.insert((a.min(b), a.max(b))) {
                edges.push(Edge {
                    a: a.min(b),
                    b: a.max(b),
                    pair: n.pair,
                });
            }
        }
    }
    let tiltings = trees.iter().map(tilting_of_tree).collect();
    Ok(ExchangeGraph {
        t,
        trees,
        tiltings,
        edges,
    })
}
