//! Simple undirected graphs on dense vertex ids `0..n`.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{input, Result};
use crate::perm::Permutation;

/// An undirected simple graph with vertices `0..n`.
///
/// The adjacency matrix is symmetric with an empty diagonal; neighbor lists
/// are kept sorted. Optional labels ride along untouched by all algorithms.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<bool>,
    nbrs: Vec<Vec<usize>>,
    labels: Option<Vec<String>>,
}

impl Graph {
    /// Builds a graph, rejecting self-loops, repeated edges and bad ids.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj = vec![false; n * n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return input(format!("edge ({u}, {v}) references a vertex outside 0..{n}"));
            }
            if u == v {
                return input(format!("self-loop at vertex {u}"));
            }
            if adj[u * n + v] {
                return input(format!("repeated edge ({u}, {v})"));
            }
            adj[u * n + v] = true;
            adj[v * n + u] = true;
        }
        Ok(Self::from_matrix(n, adj))
    }

    /// Builds a graph from a symmetric matrix; the diagonal is ignored.
    pub(crate) fn from_matrix(n: usize, mut adj: Vec<bool>) -> Self {
        debug_assert_eq!(adj.len(), n * n);
        for v in 0..n {
            adj[v * n + v] = false;
        }
        let nbrs = (0..n)
            .map(|u| (0..n).filter(|&v| adj[u * n + v]).collect())
            .collect();
        Graph {
            n,
            adj,
            nbrs,
            labels: None,
        }
    }

    /// Like [`Graph::new`] but for edge lists produced internally.
    pub(crate) fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut adj = vec![false; n * n];
        for (u, v) in edges {
            adj[u * n + v] = true;
            adj[v * n + u] = true;
        }
        Self::from_matrix(n, adj)
    }

    pub fn empty(n: usize) -> Self {
        Self::from_matrix(n, vec![false; n * n])
    }

    pub fn complete(n: usize) -> Self {
        Self::from_matrix(n, vec![true; n * n])
    }

    pub fn path(n: usize) -> Self {
        Self::from_edges(n, (1..n).map(|i| (i - 1, i)))
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycles need at least three vertices");
        Self::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    /// `K_{a,b}` with parts `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        Self::from_edges(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))))
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n {
            return input(format!(
                "{} labels given for {} vertices",
                labels.len(),
                self.n
            ));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.nbrs.iter().map(Vec::len).sum::<usize>() / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u * self.n + v]
    }

    pub fn neighbors(&self, u: usize) -> &[usize] {
        &self.nbrs[u]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.nbrs[u].len()
    }

    pub(crate) fn matrix(&self) -> &[bool] {
        &self.adj
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|u| self.nbrs[u].iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
            .collect()
    }

    pub fn complement(&self) -> Graph {
        let adj = self.adj.iter().map(|&b| !b).collect();
        let mut g = Self::from_matrix(self.n, adj);
        g.labels = self.labels.clone();
        g
    }

    /// The subgraph induced by `vertices`, renumbered in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let k = vertices.len();
        let mut adj = vec![false; k * k];
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate() {
                adj[i * k + j] = self.has_edge(u, v);
            }
        }
        Self::from_matrix(k, adj)
    }

    /// The image `π(g)`: `π(u)π(v)` is an edge iff `uv` is.
    pub fn relabel(&self, pi: &Permutation) -> Graph {
        assert_eq!(pi.degree(), self.n, "permutation degree mismatch");
        Self::from_edges(self.n, self.edges().into_iter().map(|(u, v)| (pi.apply(u), pi.apply(v))))
    }

    pub fn is_automorphism(&self, pi: &Permutation) -> bool {
        pi.degree() == self.n
            && self
                .edges()
                .into_iter()
                .all(|(u, v)| self.has_edge(pi.apply(u), pi.apply(v)))
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &v in &self.nbrs[u] {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                        queue.push_back(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    /// BFS distances from `s`; unreachable vertices get `None`.
    pub fn distances_from(&self, s: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[s] = Some(0);
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap();
            for &v in &self.nbrs[u] {
                if dist[v].is_none() {
                    dist[v] = Some(d + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// Two-colouring by BFS; in each component the smallest vertex gets side 0.
    /// Returns `None` when the graph has an odd cycle.
    pub fn two_coloring(&self) -> Option<Vec<u8>> {
        let mut side: Vec<Option<u8>> = vec![None; self.n];
        for s in 0..self.n {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(0);
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                let su = side[u].unwrap();
                for &v in &self.nbrs[u] {
                    match side[v] {
                        None => {
                            side[v] = Some(1 - su);
                            queue.push_back(v);
                        }
                        Some(sv) if sv == su => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(side.into_iter().map(Option::unwrap).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        self.two_coloring().is_some()
    }

    /// True when the graph is a single cycle `C_n` (n ≥ 3).
    pub fn is_cycle(&self) -> bool {
        self.n >= 3 && self.is_connected() && (0..self.n).all(|v| self.degree(v) == 2)
    }

    /// Checks that every vertex outside `set` sees all of it or none of it.
    pub fn is_module(&self, set: &[usize]) -> Result<bool> {
        let mut inside = vec![false; self.n];
        for &v in set {
            if v >= self.n {
                return input(format!("vertex {v} is outside 0..{}", self.n));
            }
            inside[v] = true;
        }
        Ok(self.is_module_mask(&inside))
    }

    pub(crate) fn is_module_mask(&self, inside: &[bool]) -> bool {
        let members: Vec<usize> = (0..self.n).filter(|&v| inside[v]).collect();
        let Some(&first) = members.first() else {
            return true;
        };
        (0..self.n)
            .filter(|&x| !inside[x])
            .all(|x| members.iter().all(|&v| self.has_edge(x, v) == self.has_edge(x, first)))
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n;
        Self::from_edges(
            self.n + other.n,
            self.edges()
                .into_iter()
                .chain(other.edges().into_iter().map(|(u, v)| (u + shift, v + shift))),
        )
    }

    /// Replaces every vertex `v` of `self` by the graph `parts[v]`, joining
    /// parts completely wherever `self` has an edge. Vertices of part `v`
    /// are numbered consecutively, parts in order.
    pub fn substitute(&self, parts: &[&Graph]) -> Graph {
        assert_eq!(parts.len(), self.n, "one part per vertex is required");
        let mut offset = Vec::with_capacity(self.n);
        let mut total = 0;
        for p in parts {
            offset.push(total);
            total += p.n;
        }
        let mut edges = Vec::new();
        for (v, p) in parts.iter().enumerate() {
            edges.extend(p.edges().into_iter().map(|(a, b)| (a + offset[v], b + offset[v])));
        }
        for (u, v) in self.edges() {
            for a in 0..parts[u].n {
                for b in 0..parts[v].n {
                    edges.push((offset[u] + a, offset[v] + b));
                }
            }
        }
        Self::from_edges(total, edges)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

#[derive(Serialize, Deserialize)]
struct GraphRepr {
    n: usize,
    edges: Vec<(usize, usize)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
}

impl Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        GraphRepr {
            n: self.n,
            edges: self.edges(),
            labels: self.labels.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = GraphRepr::deserialize(d)?;
        let g = Graph::new(r.n, &r.edges).map_err(serde::de::Error::custom)?;
        match r.labels {
            Some(l) => g.with_labels(l).map_err(serde::de::Error::custom),
            None => Ok(g),
        }
    }
}

/// `X̄`: the same vertices, with exactly the missing edges.
pub fn complement(g: &Graph) -> Graph {
    g.complement()
}

/// Free-function form of [`Graph::is_module`].
pub fn is_module(g: &Graph, set: &[usize]) -> Result<bool> {
    g.is_module(set)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_loops_and_multi_edges() {
        assert!(Graph::new(3, &[(0, 0)]).is_err());
        assert!(Graph::new(3, &[(0, 1), (1, 0)]).is_err());
        assert!(Graph::new(3, &[(0, 3)]).is_err());
    }

    #[test]
    fn complement_of_triangle_is_empty() {
        let c = complement(&Graph::complete(3));
        assert_eq!(c, Graph::empty(3));
    }

    #[test]
    fn complement_of_p4() {
        let p4 = Graph::path(4);
        assert_eq!(p4.complement().edges(), vec![(0, 2), (0, 3), (1, 3)]);
    }

    #[test]
    fn module_examples() {
        let p3 = Graph::path(3);
        assert!(is_module(&p3, &[0, 2]).unwrap());
        let p4 = Graph::path(4);
        assert!(!is_module(&p4, &[1, 2]).unwrap());
        assert!(is_module(&p4, &[0, 1, 2, 3]).unwrap());
        for v in 0..4 {
            assert!(is_module(&p4, &[v]).unwrap());
        }
        assert!(is_module(&p4, &[4]).is_err());
    }

    #[test]
    fn substitution_blows_up_vertices() {
        // K2[K2, K1] is a triangle
        let k2 = Graph::complete(2);
        let k1 = Graph::complete(1);
        assert_eq!(k2.substitute(&[&k2, &k1]), Graph::complete(3));
    }

    #[test]
    fn cycle_detection() {
        assert!(Graph::cycle(5).is_cycle());
        assert!(!Graph::path(5).is_cycle());
        assert!(!Graph::cycle(3).disjoint_union(&Graph::cycle(3)).is_cycle());
    }

    #[test]
    fn serde_roundtrip_rejects_bad_edges() {
        let g: Graph = serde_json::from_str(r#"{"n":3,"edges":[[0,1],[1,2]]}"#).unwrap();
        assert_eq!(g, Graph::path(3));
        assert!(serde_json::from_str::<Graph>(r#"{"n":2,"edges":[[0,0]]}"#).is_err());
    }
}
