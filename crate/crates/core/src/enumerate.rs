//! Small-graph generators for exhaustive sweeps.

use std::collections::BTreeMap;

use rand::Rng;
use rayon::prelude::*;

use crate::canon::{canonical_graph, graph_code};
use crate::graph::Graph;

/// One representative of every isomorphism class on exactly `n` vertices,
/// each in canonical labelling, ordered by canonical code.
///
/// Built by vertex augmentation: every graph on `n` vertices is some graph
/// on `n - 1` vertices plus a vertex joined to a subset.
pub fn nonisomorphic_graphs(n: usize) -> Vec<Graph> {
    if n == 0 {
        return vec![Graph::empty(0)];
    }
    nonisomorphic_graphs_up_to(n)
        .into_iter()
        .filter(|g| g.n() == n)
        .collect()
}

/// Every isomorphism class with `1 ≤ n ≤ max_n` vertices, by increasing `n`.
pub fn nonisomorphic_graphs_up_to(max_n: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    let mut layer = vec![Graph::empty(0)];
    for n in 1..=max_n {
        let mut found: BTreeMap<Vec<u64>, Graph> = BTreeMap::new();
        let next: Vec<(Vec<u64>, Graph)> = layer
            .par_iter()
            .flat_map_iter(|h| {
                (0u64..1 << (n - 1)).map(move |mask| {
                    let edges = h
                        .edges()
                        .into_iter()
                        .chain((0..n - 1).filter(|&i| mask >> i & 1 == 1).map(|i| (i, n - 1)));
                    let g = Graph::from_edges(n, edges);
                    (graph_code(&g), g)
                })
            })
            .collect();
        for (code, g) in next {
            found.entry(code).or_insert(g);
        }
        layer = found.into_values().map(|g| canonical_graph(&g)).collect();
        out.extend(layer.iter().cloned());
    }
    out
}

/// All `2^(n choose 2)` labelled graphs on `n` vertices.
pub fn labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let total = 1u64 << pairs.len();
    (0..total).map(move |mask| {
        Graph::from_edges(
            n,
            pairs
                .iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .map(|(_, &e)| e),
        )
    })
}

/// Random connected bipartite graph on `n` vertices: a random spanning tree
/// plus each remaining cross pair with probability `p`.
pub fn random_connected_bipartite(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    assert!(n >= 1);
    let mut side = vec![0u8; n];
    let mut edges = Vec::new();
    for v in 1..n {
        let u = rng.gen_range(0..v);
        side[v] = 1 - side[u];
        edges.push((u, v));
    }
    for u in 0..n {
        for v in u + 1..n {
            if side[u] != side[v] && !edges.contains(&(u, v)) && rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges)
}

/// Erdős–Rényi `G(n, p)`.
pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges)
}
