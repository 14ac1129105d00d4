//! Modular decomposition and the modular tree.
//!
//! The decomposition follows Gallai's rules: stop on prime or degenerate
//! graphs, split a disconnected graph into components, a graph with a
//! disconnected complement into co-components, and otherwise into its
//! inclusion-maximal proper modules. Maximal modules are found by closing
//! vertex pairs under splitters, which is polynomial but far from linear.

use std::collections::VecDeque;
use std::fmt::Write as _;

use serde::Serialize;

use crate::canon::{for_each_isomorphism, graph_code, Relation};
use crate::error::{input, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PartitionKind {
    MaximalModules,
    Components,
    CoComponents,
    /// The graph is prime or degenerate; blocks are singletons.
    Stop,
}

/// A partition of the vertex set into modules.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ModularPartition {
    pub blocks: Vec<Vec<usize>>,
    pub kind: PartitionKind,
}

/// Smallest module containing `seed`, as a membership mask.
///
/// Grows the set one vertex at a time: an outside vertex that agreed with
/// the first member on all current members becomes a splitter exactly when
/// it disagrees with the newly added one.
pub(crate) fn module_closure(g: &Graph, seed: &[usize]) -> Vec<bool> {
    let n = g.n();
    let mut inside = vec![false; n];
    let Some(&first) = seed.first() else {
        return inside;
    };
    let mut queued = vec![false; n];
    let mut pending: Vec<usize> = seed.to_vec();
    for &s in seed {
        queued[s] = true;
    }
    while let Some(w) = pending.pop() {
        if inside[w] {
            continue;
        }
        inside[w] = true;
        for (x, q) in queued.iter_mut().enumerate() {
            if !*q && g.has_edge(x, w) != g.has_edge(x, first) {
                *q = true;
                pending.push(x);
            }
        }
    }
    inside
}

pub fn is_complete(g: &Graph) -> bool {
    g.m() == g.n() * g.n().saturating_sub(1) / 2
}

pub fn is_edgeless(g: &Graph) -> bool {
    g.m() == 0
}

/// `K_n` or its complement.
pub fn is_degenerate(g: &Graph) -> bool {
    is_complete(g) || is_edgeless(g)
}

/// True iff every module is trivial (size 1 or the whole vertex set).
pub fn is_prime(g: &Graph) -> bool {
    let n = g.n();
    if n <= 2 {
        return true;
    }
    (0..n).all(|u| (u + 1..n).all(|v| module_closure(g, &[u, v]).iter().all(|&b| b)))
}

/// One step of the modular decomposition.
pub fn decomposition_step(g: &Graph) -> ModularPartition {
    let n = g.n();
    let stop = || ModularPartition {
        blocks: (0..n).map(|v| vec![v]).collect(),
        kind: PartitionKind::Stop,
    };
    if n <= 1 || is_degenerate(g) {
        return stop();
    }
    let comps = g.components();
    if comps.len() > 1 {
        return ModularPartition {
            blocks: comps,
            kind: PartitionKind::Components,
        };
    }
    let cocomps = g.complement().components();
    if cocomps.len() > 1 {
        return ModularPartition {
            blocks: cocomps,
            kind: PartitionKind::CoComponents,
        };
    }
    // both connected: maximal proper modules are disjoint and cover V
    let mut owner: Vec<Option<usize>> = vec![None; n];
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for u in 0..n {
        if owner[u].is_some() {
            continue;
        }
        let mut block = vec![u];
        for v in 0..n {
            if v != u && !module_closure(g, &[u, v]).iter().all(|&b| b) {
                block.push(v);
            }
        }
        block.sort_unstable();
        for &v in &block {
            owner[v] = Some(blocks.len());
        }
        blocks.push(block);
    }
    if blocks.len() == n {
        return stop();
    }
    ModularPartition {
        blocks,
        kind: PartitionKind::MaximalModules,
    }
}

fn validate_partition(g: &Graph, p: &ModularPartition) -> Result<()> {
    let mut seen = vec![false; g.n()];
    for block in &p.blocks {
        if block.is_empty() {
            return input("empty block in modular partition");
        }
        for &v in block {
            if v >= g.n() {
                return input(format!("vertex {v} is outside 0..{}", g.n()));
            }
            if seen[v] {
                return input(format!("vertex {v} appears in two blocks"));
            }
            seen[v] = true;
        }
        if !g.is_module(block)? {
            return input(format!("block {block:?} is not a module"));
        }
    }
    if let Some(v) = seen.iter().position(|&s| !s) {
        return input(format!("vertex {v} is not covered by the partition"));
    }
    Ok(())
}

/// `X/P`: one vertex per block, adjacent iff the blocks are.
pub fn quotient(g: &Graph, p: &ModularPartition) -> Result<Graph> {
    validate_partition(g, p)?;
    let reps: Vec<usize> = p.blocks.iter().map(|b| b[0]).collect();
    Ok(g.induced(&reps))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum NodeKind {
    Prime,
    Complete,
    Independent,
    /// A single vertex, `K_1`.
    Single,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "role", rename_all = "snake_case")]
pub enum VertexKind {
    Original,
    /// `m_i`: a member of an inner node standing for one child module.
    Quotient { node: usize },
    /// `m'_i`: the marker above a child subtree, adjacent to its root node.
    Attachment { node: usize },
}

#[derive(Clone, Debug, Serialize)]
pub struct Node {
    pub kind: NodeKind,
    /// Vertex ids; either all original vertices or all quotient markers.
    pub members: Vec<usize>,
    /// Node graph, vertex `i` standing for `members[i]`.
    #[serde(skip)]
    pub graph: Graph,
    /// For inner nodes, the child node of each member.
    pub children: Vec<usize>,
    pub parent: Option<usize>,
    /// The attachment marker `m'` above this node, absent for the root.
    pub attachment: Option<usize>,
    /// Original vertices of the subtree, sorted; this is the module.
    pub leaves: Vec<usize>,
}

impl Node {
    pub fn is_inner(&self) -> bool {
        !self.children.is_empty()
    }
}

/// Gallai's decomposition encoded as a graph with normal and marker
/// vertices, normal edges and directed tree edges `m_i -> m'_i`.
#[derive(Clone, Debug)]
pub struct ModularTree {
    n: usize,
    kinds: Vec<VertexKind>,
    nodes: Vec<Node>,
    normal: Vec<Vec<usize>>,
    tree_partner: Vec<Option<usize>>,
    tree_edges: Vec<(usize, usize)>,
}

fn classify_leaf(g: &Graph) -> NodeKind {
    if g.n() == 1 {
        NodeKind::Single
    } else if is_complete(g) {
        NodeKind::Complete
    } else if is_edgeless(g) {
        NodeKind::Independent
    } else {
        NodeKind::Prime
    }
}

struct Builder<'a> {
    g: &'a Graph,
    kinds: Vec<VertexKind>,
    nodes: Vec<Node>,
    tree_edges: Vec<(usize, usize)>,
}

impl Builder<'_> {
    fn fresh(&mut self, kind: VertexKind) -> usize {
        self.kinds.push(kind);
        self.kinds.len() - 1
    }

    fn build(&mut self, module: Vec<usize>, parent: Option<usize>, attachment: Option<usize>) -> usize {
        let sub = self.g.induced(&module);
        let step = decomposition_step(&sub);
        let id = self.nodes.len();
        if step.kind == PartitionKind::Stop {
            self.nodes.push(Node {
                kind: classify_leaf(&sub),
                members: module.clone(),
                graph: sub,
                children: Vec::new(),
                parent,
                attachment,
                leaves: module,
            });
            return id;
        }
        let mut blocks: Vec<Vec<usize>> = step
            .blocks
            .iter()
            .map(|b| b.iter().map(|&i| module[i]).collect())
            .collect();
        blocks.sort_by_cached_key(|b| (b.len(), graph_code(&self.g.induced(b)), b[0]));
        let kind = match step.kind {
            PartitionKind::Components => NodeKind::Independent,
            PartitionKind::CoComponents => NodeKind::Complete,
            _ => NodeKind::Prime,
        };
        let reps: Vec<usize> = blocks.iter().map(|b| b[0]).collect();
        let members: Vec<usize> = blocks
            .iter()
            .map(|_| self.fresh(VertexKind::Quotient { node: id }))
            .collect();
        self.nodes.push(Node {
            kind,
            members: members.clone(),
            graph: self.g.induced(&reps),
            children: Vec::new(),
            parent,
            attachment,
            leaves: {
                let mut l = module.clone();
                l.sort_unstable();
                l
            },
        });
        let mut children = Vec::new();
        for (block, &m) in blocks.into_iter().zip(&members) {
            let child_id = self.nodes.len();
            let att = self.fresh(VertexKind::Attachment { node: child_id });
            self.tree_edges.push((m, att));
            let c = self.build(block, Some(id), Some(att));
            debug_assert_eq!(c, child_id);
            children.push(c);
        }
        self.nodes[id].children = children;
        id
    }
}

impl ModularTree {
    /// Builds the unique modular tree of `g` (`g` must be non-empty).
    pub fn build(g: &Graph) -> Result<Self> {
        if g.n() == 0 {
            return input("the modular tree of the empty graph is undefined");
        }
        let mut b = Builder {
            g,
            kinds: vec![VertexKind::Original; g.n()],
            nodes: Vec::new(),
            tree_edges: Vec::new(),
        };
        b.build((0..g.n()).collect(), None, None);
        let total = b.kinds.len();
        let mut normal = vec![Vec::new(); total];
        for node in &b.nodes {
            for (i, j) in node.graph.edges() {
                let (u, v) = (node.members[i], node.members[j]);
                normal[u].push(v);
                normal[v].push(u);
            }
            if let Some(a) = node.attachment {
                for &u in &node.members {
                    normal[u].push(a);
                    normal[a].push(u);
                }
            }
        }
        for list in &mut normal {
            list.sort_unstable();
        }
        let mut tree_partner = vec![None; total];
        for &(m, a) in &b.tree_edges {
            tree_partner[m] = Some(a);
            tree_partner[a] = Some(m);
        }
        Ok(ModularTree {
            n: g.n(),
            kinds: b.kinds,
            nodes: b.nodes,
            normal,
            tree_partner,
            tree_edges: b.tree_edges,
        })
    }

    /// Number of original vertices.
    pub fn original_count(&self) -> usize {
        self.n
    }

    /// Original plus marker vertices.
    pub fn vertex_count(&self) -> usize {
        self.kinds.len()
    }

    pub fn vertex_kind(&self, v: usize) -> VertexKind {
        self.kinds[v]
    }

    pub fn is_marker(&self, v: usize) -> bool {
        self.kinds[v] != VertexKind::Original
    }

    /// Nodes in preorder; the root is node 0.
    pub fn nodes(&self) -> &[Node] {
        &self.nodes
    }

    pub fn root(&self) -> &Node {
        &self.nodes[0]
    }

    pub fn node(&self, id: usize) -> &Node {
        &self.nodes[id]
    }

    pub fn normal_neighbors(&self, v: usize) -> &[usize] {
        &self.normal[v]
    }

    pub fn normal_edges(&self) -> Vec<(usize, usize)> {
        (0..self.vertex_count())
            .flat_map(|u| self.normal[u].iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
            .collect()
    }

    /// Directed tree edges `(m_i, m'_i)`.
    pub fn tree_edges(&self) -> &[(usize, usize)] {
        &self.tree_edges
    }

    /// Vertices of the subtree rooted at `node`, the attachment excluded.
    pub fn subtree_vertices(&self, node: usize) -> Vec<usize> {
        let mut out = Vec::new();
        let mut stack = vec![node];
        while let Some(id) = stack.pop() {
            let nd = &self.nodes[id];
            out.extend(&nd.members);
            for &c in &nd.children {
                out.push(self.nodes[c].attachment.unwrap());
                stack.push(c);
            }
        }
        out.sort_unstable();
        out
    }

    /// Original vertices represented by a member of `node`: the vertex itself
    /// in a leaf node, or the child module for a marker.
    pub fn member_leaves(&self, node: usize, index: usize) -> &[usize] {
        let nd = &self.nodes[node];
        if nd.is_inner() {
            &self.nodes[nd.children[index]].leaves
        } else {
            std::slice::from_ref(&nd.members[index])
        }
    }

    /// Searches for an alternating path `x m_1 ... m_k y` whose interior is
    /// all markers and whose edges alternate normal, tree, normal, ...,
    /// normal.
    pub fn alternating_path(&self, x: usize, y: usize) -> Result<Option<Vec<usize>>> {
        for v in [x, y] {
            if v >= self.vertex_count() {
                return input(format!("vertex {v} is not in the tree"));
            }
            if self.is_marker(v) {
                return input(format!("vertex {v} is a marker vertex"));
            }
        }
        if x == y {
            return input("endpoints of an alternating path must differ");
        }
        // state: (vertex, next edge must be a tree edge)
        let total = self.vertex_count();
        let idx = |v: usize, tree: bool| 2 * v + usize::from(tree);
        let mut prev: Vec<Option<usize>> = vec![None; 2 * total];
        let start = idx(x, false);
        prev[start] = Some(start);
        let mut queue = VecDeque::from([(x, false)]);
        while let Some((v, need_tree)) = queue.pop_front() {
            let here = idx(v, need_tree);
            if need_tree {
                let w = self.tree_partner[v].expect("markers carry exactly one tree edge");
                let s = idx(w, false);
                if prev[s].is_none() {
                    prev[s] = Some(here);
                    queue.push_back((w, false));
                }
                continue;
            }
            for &w in &self.normal[v] {
                if w == y {
                    let mut path = vec![y, v];
                    let mut cur = here;
                    while cur != start {
                        cur = prev[cur].unwrap();
                        path.push(cur / 2);
                    }
                    path.reverse();
                    return Ok(Some(path));
                }
                if !self.is_marker(w) {
                    continue;
                }
                let s = idx(w, true);
                if prev[s].is_none() {
                    prev[s] = Some(here);
                    queue.push_back((w, true));
                }
            }
        }
        Ok(None)
    }

    /// The graph on original vertices recovered from alternating paths.
    pub fn reconstruct(&self) -> Graph {
        let mut edges = Vec::new();
        for x in 0..self.n {
            for y in x + 1..self.n {
                if self.alternating_path(x, y).unwrap().is_some() {
                    edges.push((x, y));
                }
            }
        }
        Graph::from_edges(self.n, edges)
    }

    fn typed_relation(&self) -> (Relation, Vec<usize>) {
        let total = self.vertex_count();
        let mut m = vec![false; total * total];
        for u in 0..total {
            for &v in &self.normal[u] {
                m[u * total + v] = true;
            }
        }
        for &(a, b) in &self.tree_edges {
            m[a * total + b] = true;
        }
        let colors = self
            .kinds
            .iter()
            .map(|k| match k {
                VertexKind::Original => 0,
                VertexKind::Quotient { .. } => 1,
                VertexKind::Attachment { .. } => 2,
            })
            .collect();
        (Relation::new(total, m), colors)
    }

    /// Isomorphism of modular trees respecting vertex and edge types.
    pub fn is_isomorphic_to(&self, other: &ModularTree) -> bool {
        if self.vertex_count() != other.vertex_count() {
            return false;
        }
        let (a, ca) = self.typed_relation();
        let (b, cb) = other.typed_relation();
        let mut found = false;
        for_each_isomorphism(&a, &ca, &b, &cb, &mut |_| {
            found = true;
            false
        });
        found
    }

    pub fn to_json(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct NodeOut<'a> {
            id: usize,
            #[serde(flatten)]
            node: &'a Node,
            inner: bool,
            edges: Vec<(usize, usize)>,
        }
        #[derive(Serialize)]
        struct MarkerOut {
            id: usize,
            #[serde(flatten)]
            kind: VertexKind,
        }
        let nodes: Vec<NodeOut> = self
            .nodes
            .iter()
            .enumerate()
            .map(|(id, node)| NodeOut {
                id,
                node,
                inner: node.is_inner(),
                edges: node
                    .graph
                    .edges()
                    .into_iter()
                    .map(|(i, j)| (node.members[i], node.members[j]))
                    .collect(),
            })
            .collect();
        let markers: Vec<MarkerOut> = (self.n..self.vertex_count())
            .map(|id| MarkerOut {
                id,
                kind: self.kinds[id],
            })
            .collect();
        serde_json::json!({
            "original_vertices": self.n,
            "vertex_count": self.vertex_count(),
            "root": 0,
            "nodes": nodes,
            "markers": markers,
            "normal_edges": self.normal_edges(),
            "tree_edges": self.tree_edges,
        })
    }

    /// Graphviz rendering: markers hollow, tree edges dashed and directed.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph modular_tree {\n  node [shape=circle];\n");
        for (id, node) in self.nodes.iter().enumerate() {
            let _ = writeln!(s, "  subgraph cluster_{id} {{\n    label=\"{:?}\";", node.kind);
            for &v in &node.members {
                let style = if self.is_marker(v) {
                    "style=solid, fillcolor=white"
                } else {
                    "style=filled, fillcolor=black, fontcolor=white"
                };
                let _ = writeln!(s, "    {v} [{style}];");
            }
            s.push_str("  }\n");
        }
        for (v, kind) in self.kinds.iter().enumerate() {
            if matches!(kind, VertexKind::Attachment { .. }) {
                let _ = writeln!(s, "  {v} [style=solid, fillcolor=white];");
            }
        }
        for (u, v) in self.normal_edges() {
            let _ = writeln!(s, "  {u} -> {v} [dir=none];");
        }
        for &(m, a) in &self.tree_edges {
            let _ = writeln!(s, "  {m} -> {a} [style=dashed];");
        }
        s.push_str("}\n");
        s
    }
}

/// Free-function form of [`ModularTree::build`].
pub fn build_modular_tree(g: &Graph) -> Result<ModularTree> {
    ModularTree::build(g)
}

/// True iff `x` and `y` are joined by an alternating path in `t`.
pub fn alternating_path_adjacent(t: &ModularTree, x: usize, y: usize) -> Result<bool> {
    Ok(t.alternating_path(x, y)?.is_some())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::labeled_graphs;

    /// Literal subset oracle: all non-trivial modules.
    fn nontrivial_modules(g: &Graph) -> Vec<Vec<usize>> {
        let n = g.n();
        (0u32..1 << n)
            .map(|mask| (0..n).filter(|&v| mask >> v & 1 == 1).collect::<Vec<_>>())
            .filter(|s| s.len() > 1 && s.len() < n && g.is_module(s).unwrap())
            .collect()
    }

    #[test]
    fn step_examples() {
        let p3 = Graph::path(3);
        let s = decomposition_step(&p3);
        assert_eq!(s.kind, PartitionKind::CoComponents);
        assert_eq!(s.blocks, vec![vec![0, 2], vec![1]]);

        let two_k2 = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        let s = decomposition_step(&two_k2);
        assert_eq!(s.kind, PartitionKind::Components);
        assert_eq!(s.blocks, vec![vec![0, 1], vec![2, 3]]);

        let p4 = Graph::path(4);
        assert!(nontrivial_modules(&p4).is_empty());
        assert_eq!(decomposition_step(&p4).kind, PartitionKind::Stop);
        assert_eq!(decomposition_step(&Graph::complete(1)).kind, PartitionKind::Stop);
    }

    #[test]
    fn maximal_modules_match_subset_oracle() {
        for g in labeled_graphs(5) {
            let step = decomposition_step(&g);
            if step.kind != PartitionKind::MaximalModules {
                continue;
            }
            let mods = nontrivial_modules(&g);
            let mut maximal: Vec<Vec<usize>> = mods
                .iter()
                .filter(|m| {
                    !mods
                        .iter()
                        .any(|o| o.len() > m.len() && m.iter().all(|v| o.contains(v)))
                })
                .cloned()
                .collect();
            for v in 0..g.n() {
                if !maximal.iter().any(|m| m.contains(&v)) {
                    maximal.push(vec![v]);
                }
            }
            maximal.sort();
            let mut blocks = step.blocks.clone();
            blocks.sort();
            assert_eq!(blocks, maximal, "{g:?}");
            assert!(is_prime(&quotient(&g, &step).unwrap()));
        }
    }

    #[test]
    fn prime_agrees_with_subset_oracle() {
        for g in labeled_graphs(5) {
            assert_eq!(is_prime(&g), nontrivial_modules(&g).is_empty(), "{g:?}");
        }
    }

    #[test]
    fn quotient_examples() {
        let p3 = Graph::path(3);
        let p = ModularPartition {
            blocks: vec![vec![0, 2], vec![1]],
            kind: PartitionKind::CoComponents,
        };
        assert_eq!(quotient(&p3, &p).unwrap(), Graph::complete(2));

        let two_k2 = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        let q = quotient(&two_k2, &decomposition_step(&two_k2)).unwrap();
        assert_eq!(q, Graph::empty(2));

        let k4 = Graph::complete(4);
        let p = ModularPartition {
            blocks: vec![vec![0, 1], vec![2], vec![3]],
            kind: PartitionKind::CoComponents,
        };
        assert_eq!(quotient(&k4, &p).unwrap(), Graph::complete(3));
    }

    #[test]
    fn quotient_rejects_bad_partitions() {
        let p4 = Graph::path(4);
        let not_module = ModularPartition {
            blocks: vec![vec![1, 2], vec![0], vec![3]],
            kind: PartitionKind::MaximalModules,
        };
        assert!(matches!(quotient(&p4, &not_module), Err(crate::Error::Input(_))));
        let overlap = ModularPartition {
            blocks: vec![vec![0], vec![0, 1, 2, 3]],
            kind: PartitionKind::MaximalModules,
        };
        assert!(quotient(&p4, &overlap).is_err());
        let gap = ModularPartition {
            blocks: vec![vec![0], vec![1]],
            kind: PartitionKind::MaximalModules,
        };
        assert!(quotient(&p4, &gap).is_err());
    }

    #[test]
    fn tree_of_prime_graph_is_a_single_leaf() {
        let t = build_modular_tree(&Graph::path(4)).unwrap();
        assert_eq!(t.nodes().len(), 1);
        assert_eq!(t.root().kind, NodeKind::Prime);
        assert_eq!(t.vertex_count(), 4);
        assert!(t.tree_edges().is_empty());
    }

    #[test]
    fn tree_of_p3() {
        let t = build_modular_tree(&Graph::path(3)).unwrap();
        let root = t.root();
        assert_eq!(root.kind, NodeKind::Complete);
        assert!(root.is_inner());
        assert_eq!(root.members, vec![3, 4]);
        // children ordered by size: {1} then {0, 2}
        let kids: Vec<&Node> = root.children.iter().map(|&c| t.node(c)).collect();
        assert_eq!(kids[0].kind, NodeKind::Single);
        assert_eq!(kids[0].leaves, vec![1]);
        assert_eq!(kids[1].kind, NodeKind::Independent);
        assert_eq!(kids[1].leaves, vec![0, 2]);
        assert_eq!(t.tree_edges().len(), 2);
        for kid in kids {
            let a = kid.attachment.unwrap();
            assert_eq!(t.normal_neighbors(a), kid.members.as_slice());
        }
        assert_eq!(t.vertex_count(), 3 + 2 + 2);
    }

    #[test]
    fn alternating_paths_in_small_trees() {
        let t = build_modular_tree(&Graph::path(4)).unwrap();
        assert_eq!(t.alternating_path(0, 1).unwrap(), Some(vec![0, 1]));
        assert!(!alternating_path_adjacent(&t, 0, 2).unwrap());

        let t = build_modular_tree(&Graph::path(3)).unwrap();
        let path = t.alternating_path(0, 1).unwrap().unwrap();
        assert_eq!(path.len(), 6);
        assert_eq!((path[0], path[5]), (0, 1));
        assert!(path[1..5].iter().all(|&m| t.is_marker(m)));
        assert!(!alternating_path_adjacent(&t, 0, 2).unwrap());
        assert!(alternating_path_adjacent(&t, 0, 3).is_err());
        assert!(alternating_path_adjacent(&t, 1, 1).is_err());
    }

    #[test]
    fn invariants_hold_for_all_small_graphs() {
        for n in 1..=5 {
            for g in labeled_graphs(n) {
                let t = build_modular_tree(&g).unwrap();
                assert_eq!(t.reconstruct(), g);
                let mut originals: Vec<usize> = t
                    .nodes()
                    .iter()
                    .filter(|nd| !nd.is_inner())
                    .flat_map(|nd| nd.members.clone())
                    .collect();
                originals.sort_unstable();
                assert_eq!(originals, (0..n).collect::<Vec<_>>());
                for nd in t.nodes() {
                    let markers = nd.members.iter().filter(|&&v| t.is_marker(v)).count();
                    assert!(markers == 0 || markers == nd.members.len());
                    assert_eq!(nd.is_inner(), markers > 0);
                    if nd.is_inner() {
                        assert_eq!(nd.children.len(), nd.members.len());
                    }
                    match nd.kind {
                        NodeKind::Prime => {
                            assert!(nd.graph.n() >= 4 && is_prime(&nd.graph));
                            assert!(!is_degenerate(&nd.graph));
                        }
                        NodeKind::Complete => assert!(is_complete(&nd.graph) && nd.graph.n() >= 2),
                        NodeKind::Independent => assert!(is_edgeless(&nd.graph) && nd.graph.n() >= 2),
                        NodeKind::Single => assert_eq!(nd.graph.n(), 1),
                    }
                    assert!(g.is_module(&nd.leaves).unwrap());
                }
            }
        }
    }

    #[test]
    fn dot_marks_tree_edges_dashed() {
        let t = build_modular_tree(&Graph::path(3)).unwrap();
        let dot = t.to_dot();
        assert!(dot.contains("style=dashed"));
        let json = t.to_json();
        assert_eq!(json["tree_edges"].as_array().unwrap().len(), 2);
    }
}
