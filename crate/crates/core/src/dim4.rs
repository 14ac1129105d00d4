//! The subdivision gadget `C_X`, its four-chain realization for bipartite
//! `X`, and the isomorphism reduction through incidence graphs.
//!
//! Vertex ids in `C_X`: `p_i = i` for `i < n`; for the `k`-th edge
//! `{i, j}` (`i < j`, edges in lexicographic order) `q_ik = n + 2k` and
//! `q_jk = n + 2k + 1`; `r_k = n + 2m + k`.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{domain, input, Result};
use crate::graph::Graph;
use crate::oracle::Oracle;
use crate::perm::Permutation;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Part {
    P,
    Q,
    R,
}

/// `C_X` together with the graph it was built from.
#[derive(Clone, Debug)]
pub struct GadgetGraph {
    pub x: Graph,
    pub graph: Graph,
    /// Edges of `x` in index order.
    pub x_edges: Vec<(usize, usize)>,
}

impl GadgetGraph {
    fn n(&self) -> usize {
        self.x.n()
    }

    pub fn p(&self, i: usize) -> usize {
        i
    }

    /// `q_ik` for an endpoint `i` of edge `k`.
    pub fn q(&self, i: usize, k: usize) -> usize {
        let (a, b) = self.x_edges[k];
        debug_assert!(i == a || i == b);
        self.n() + 2 * k + usize::from(i == b)
    }

    pub fn r(&self, k: usize) -> usize {
        self.n() + 2 * self.x_edges.len() + k
    }

    pub fn part(&self, v: usize) -> Part {
        let (n, m) = (self.n(), self.x_edges.len());
        if v < n {
            Part::P
        } else if v < n + 2 * m {
            Part::Q
        } else {
            Part::R
        }
    }

    /// `(i, k)` for the incidence vertex `q_ik`.
    pub fn incidence(&self, q: usize) -> (usize, usize) {
        let t = q - self.n();
        let (a, b) = self.x_edges[t / 2];
        (if t.is_multiple_of(2) { a } else { b }, t / 2)
    }

    pub fn p_set(&self) -> Vec<usize> {
        (0..self.graph.n()).filter(|&v| self.part(v) == Part::P).collect()
    }

    pub fn q_set(&self) -> Vec<usize> {
        (0..self.graph.n()).filter(|&v| self.part(v) == Part::Q).collect()
    }

    pub fn r_set(&self) -> Vec<usize> {
        (0..self.graph.n()).filter(|&v| self.part(v) == Part::R).collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "n": self.graph.n(),
            "edges": self.graph.edges(),
            "p": self.p_set(),
            "q": self.q_set(),
            "r": self.r_set(),
        })
    }

    /// Graphviz rendering with P, Q and R in different colours.
    pub fn to_dot(&self) -> String {
        let colors: Vec<&str> = (0..self.graph.n())
            .map(|v| match self.part(v) {
                Part::P => "lightblue",
                Part::Q => "white",
                Part::R => "salmon",
            })
            .collect();
        crate::io::to_dot(&self.graph, Some(&colors))
    }
}

/// `E(C_X) = {p_i q_ik, q_ik r_k : x_i in e_k}`.
pub fn construct_cx(x: &Graph) -> GadgetGraph {
    let x_edges = x.edges();
    let (n, m) = (x.n(), x_edges.len());
    let mut edges = Vec::with_capacity(4 * m);
    for (k, &(i, j)) in x_edges.iter().enumerate() {
        let (qi, qj, r) = (n + 2 * k, n + 2 * k + 1, n + 2 * m + k);
        edges.extend([(i, qi), (qi, r), (j, qj), (qj, r)]);
    }
    GadgetGraph {
        x: x.clone(),
        graph: Graph::from_edges(n + 3 * m, edges),
        x_edges,
    }
}

/// Bipartite graph on `V(X)` followed by `E(X)` (lexicographic), joining
/// each vertex to the edges containing it.
pub fn incidence_graph(x: &Graph) -> Result<Graph> {
    if !x.is_connected() {
        return input("incidence graph requires a connected input");
    }
    let n = x.n();
    Ok(Graph::from_edges(
        n + x.m(),
        x.edges().into_iter().enumerate().flat_map(|(k, (i, j))| [(i, n + k), (j, n + k)]),
    ))
}

/// Four vertex sequences over `V(C_X)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChainSet {
    pub chains: Vec<Vec<usize>>,
}

impl ChainSet {
    /// Pairs appearing in the same relative order in every chain.
    pub fn comparable_in_all(&self) -> Graph {
        let n = self.chains.first().map_or(0, Vec::len);
        let pos: Vec<Vec<usize>> = self
            .chains
            .iter()
            .map(|c| {
                let mut p = vec![0; n];
                for (i, &v) in c.iter().enumerate() {
                    p[v] = i;
                }
                p
            })
            .collect();
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|&(u, v)| {
            let first = pos[0][u] < pos[0][v];
            pos.iter().all(|p| (p[u] < p[v]) == first)
        });
        Graph::from_edges(n, edges)
    }

    /// One chain per line, ids separated by spaces.
    pub fn to_text(&self) -> String {
        self.chains
            .iter()
            .map(|c| c.iter().map(usize::to_string).collect::<Vec<_>>().join(" ") + "\n")
            .collect()
    }
}

/// The bipartition with vertex 0's side as `A` (`true` marks `A`).
pub fn default_bipartition(x: &Graph) -> Result<Vec<bool>> {
    match x.two_coloring() {
        Some(side) => Ok(side.into_iter().map(|s| s == 0).collect()),
        None => domain("graph is not bipartite"),
    }
}

/// The four chains for a bipartite `X` with parts `A` (`in_a[i]`) and `B`.
///
/// Unordered concatenations use ascending index.
pub fn four_chains(cx: &GadgetGraph, in_a: &[bool]) -> Result<ChainSet> {
    let n = cx.x.n();
    if in_a.len() != n {
        return input(format!("bipartition has {} entries for {n} vertices", in_a.len()));
    }
    if let Some(&(i, j)) = cx.x_edges.iter().find(|&&(i, j)| in_a[i] == in_a[j]) {
        return input(format!("edge {{{i}, {j}}} lies inside one part"));
    }
    let m = cx.x_edges.len();
    let side = |a: bool| (0..n).filter(move |&i| in_a[i] == a);
    let incident: Vec<Vec<usize>> = (0..n)
        .map(|i| (0..m).filter(|&k| cx.x_edges[k].0 == i || cx.x_edges[k].1 == i).collect())
        .collect();
    let end_in = |k: usize, a: bool| {
        let (i, j) = cx.x_edges[k];
        if in_a[i] == a { i } else { j }
    };
    let chain = |first: bool, up: bool| -> Vec<usize> {
        let mut c: Vec<usize> = side(first).map(|i| cx.p(i)).collect();
        let ks: Vec<usize> = if up { (0..m).collect() } else { (0..m).rev().collect() };
        for k in ks {
            c.push(cx.r(k));
            c.push(cx.q(end_in(k, first), k));
        }
        let mut others: Vec<usize> = side(!first).collect();
        if !up {
            others.reverse();
        }
        for i in others {
            c.push(cx.p(i));
            c.extend(incident[i].iter().map(|&k| cx.q(i, k)));
        }
        c
    };
    let chains = vec![chain(true, true), chain(true, false), chain(false, true), chain(false, false)];
    for c in &chains {
        debug_assert_eq!(c.len(), cx.graph.n());
    }
    Ok(ChainSet { chains })
}

/// Discrepancies between comparable-in-all pairs and `E(C_X)`, split by
/// where the pair lies.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ChainReport {
    pub missing_qr: Vec<(usize, usize)>,
    pub extra_qr: Vec<(usize, usize)>,
    pub missing_p: Vec<(usize, usize)>,
    pub extra_p: Vec<(usize, usize)>,
    pub missing_p_qr: Vec<(usize, usize)>,
    pub extra_p_qr: Vec<(usize, usize)>,
}

impl ChainReport {
    pub fn is_exact(&self) -> bool {
        *self == ChainReport::default()
    }

    pub fn discrepancies(&self) -> usize {
        [
            &self.missing_qr,
            &self.extra_qr,
            &self.missing_p,
            &self.extra_p,
            &self.missing_p_qr,
            &self.extra_p_qr,
        ]
        .iter()
        .map(|v| v.len())
        .sum()
    }
}

/// Compares the comparable-in-all relation of `cs` with `E(C_X)`.
pub fn verify_chain_intersection(cs: &ChainSet, cx: &GadgetGraph) -> Result<ChainReport> {
    let n = cx.graph.n();
    let all: BTreeSet<usize> = (0..n).collect();
    for (t, c) in cs.chains.iter().enumerate() {
        if c.len() != n || c.iter().copied().collect::<BTreeSet<_>>() != all {
            return input(format!("chain {} is not an ordering of the {n} gadget vertices", t + 1));
        }
    }
    let comp = cs.comparable_in_all();
    let mut report = ChainReport::default();
    for u in 0..n {
        for v in u + 1..n {
            let (want, got) = (cx.graph.has_edge(u, v), comp.has_edge(u, v));
            if want == got {
                continue;
            }
            let in_p = |w: usize| cx.part(w) == Part::P;
            let bucket = match (in_p(u), in_p(v), want) {
                (true, true, true) => &mut report.missing_p,
                (true, true, false) => &mut report.extra_p,
                (false, false, true) => &mut report.missing_qr,
                (false, false, false) => &mut report.extra_qr,
                (_, _, true) => &mut report.missing_p_qr,
                (_, _, false) => &mut report.extra_p_qr,
            };
            bucket.push((u, v));
        }
    }
    Ok(report)
}

/// Recovers `(P, Q, R)` from the bare graph of some `C_X` by distances from
/// the lowest vertex whose degree is not two.
pub fn recover_pqr(g: &Graph) -> Result<(Vec<usize>, Vec<usize>, Vec<usize>)> {
    let Some(anchor) = (0..g.n()).find(|&v| g.degree(v) != 2) else {
        return domain("every vertex has degree two; the source graph cannot be recovered");
    };
    let dist = g.distances_from(anchor);
    let (mut p, mut q, mut r) = (Vec::new(), Vec::new(), Vec::new());
    for (v, d) in dist.into_iter().enumerate() {
        match d {
            None => return domain("graph is disconnected"),
            Some(d) if d % 4 == 0 => p.push(v),
            Some(d) if d % 2 == 1 => q.push(v),
            Some(_) => r.push(v),
        }
    }
    Ok((p, q, r))
}

/// Reads `X` back from `C_X`: vertices are `P` in id order, and each `r`
/// joins the `P`-neighbours of its two `Q`-neighbours.
pub fn reconstruct_source(g: &Graph) -> Result<Graph> {
    let (p, q, r) = recover_pqr(g)?;
    let mut index = vec![usize::MAX; g.n()];
    for (i, &v) in p.iter().enumerate() {
        index[v] = i;
    }
    let is_q: BTreeSet<usize> = q.iter().copied().collect();
    let p_of = |qv: usize| -> Result<usize> {
        let ps: Vec<usize> = g.neighbors(qv).iter().copied().filter(|&w| index[w] != usize::MAX).collect();
        match ps.as_slice() {
            [w] if g.degree(qv) == 2 => Ok(index[*w]),
            _ => domain(format!("vertex {qv} is not an incidence vertex")),
        }
    };
    let mut edges = Vec::new();
    for &rv in &r {
        match g.neighbors(rv) {
            [a, b] if is_q.contains(a) && is_q.contains(b) => {
                let (i, j) = (p_of(*a)?, p_of(*b)?);
                if i == j {
                    return domain(format!("edge vertex {rv} joins a vertex to itself"));
                }
                edges.push((i, j));
            }
            _ => return domain(format!("vertex {rv} is not an edge vertex")),
        }
    }
    Graph::new(p.len(), &edges).map_err(|_| crate::error::Error::Domain("parallel edge vertices".into()))
}

fn require_reducible(x: &Graph, name: &str) -> Result<()> {
    if x.n() == 0 || !x.is_connected() {
        return input(format!("{name} must be connected"));
    }
    if x.is_cycle() {
        return input(format!("{name} is a cycle"));
    }
    Ok(())
}

/// Outcome of comparing `Aut(C_X)` with `Aut(X)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AutPreservation {
    pub x_order: usize,
    pub cx_order: usize,
    /// Every automorphism of `C_X` maps `P` onto itself.
    pub preserves_p: bool,
    /// Restriction to `P` is a bijection onto `Aut(X)`.
    pub restriction_bijective: bool,
}

impl AutPreservation {
    pub fn holds(&self) -> bool {
        self.x_order == self.cx_order && self.preserves_p && self.restriction_bijective
    }
}

/// Brute-force comparison of `Aut(C_X)` restricted to `P` with `Aut(X)`.
pub fn aut_preservation_check(x: &Graph, oracle: &Oracle) -> Result<AutPreservation> {
    require_reducible(x, "input")?;
    let cx = construct_cx(x);
    let ax = oracle.automorphisms(x)?;
    let acx = oracle.automorphisms(&cx.graph)?;
    let n = x.n();
    let mut preserves_p = true;
    let mut restricted = BTreeSet::new();
    for pi in acx.elements() {
        if (0..n).any(|v| pi.apply(v) >= n) {
            preserves_p = false;
            continue;
        }
        restricted.insert(Permutation::from_images_unchecked((0..n).map(|v| pi.apply(v)).collect()));
    }
    Ok(AutPreservation {
        x_order: ax.order_usize(),
        cx_order: acx.order_usize(),
        preserves_p,
        restriction_bijective: preserves_p
            && restricted.len() == acx.elements().len()
            && restricted == ax.element_set(),
    })
}

/// `X -> C_{Y(X)}` where `Y(X)` is the incidence graph.
pub fn reduction_image(x: &Graph) -> Result<GadgetGraph> {
    require_reducible(x, "input")?;
    Ok(construct_cx(&incidence_graph(x)?))
}

/// Maps a pair of graphs to gadgets that are isomorphic exactly when the
/// inputs are.
pub fn gi_reduction(x1: &Graph, x2: &Graph) -> Result<(Graph, Graph)> {
    require_reducible(x1, "first input")?;
    require_reducible(x2, "second input")?;
    Ok((reduction_image(x1)?.graph, reduction_image(x2)?.graph))
}
