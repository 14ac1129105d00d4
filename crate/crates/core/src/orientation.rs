//! Transitive orientations: recognition, enumeration through the modular
//! tree, and the action of automorphisms on them.

use std::fmt;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{domain, input, Error, Result};
use crate::graph::Graph;
use crate::modular::{is_prime, ModularTree, NodeKind};
use crate::oracle::Oracle;
use crate::perm::{Permutation, PermutationGroup};

/// A directed simple graph with no anti-parallel arcs.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Orientation {
    n: usize,
    arcs: Vec<bool>,
}

impl Orientation {
    pub fn from_arcs(n: usize, arcs: &[(usize, usize)]) -> Result<Self> {
        let mut m = vec![false; n * n];
        for &(u, v) in arcs {
            if u >= n || v >= n {
                return input(format!("arc ({u}, {v}) is outside 0..{n}"));
            }
            if u == v {
                return input(format!("loop at vertex {u}"));
            }
            if m[u * n + v] {
                return input(format!("arc ({u}, {v}) listed twice"));
            }
            if m[v * n + u] {
                return input(format!("arcs ({u}, {v}) and ({v}, {u}) are anti-parallel"));
            }
            m[u * n + v] = true;
        }
        Ok(Orientation { n, arcs: m })
    }

    pub(crate) fn from_matrix(n: usize, arcs: Vec<bool>) -> Self {
        debug_assert_eq!(arcs.len(), n * n);
        Orientation { n, arcs }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub(crate) fn matrix(&self) -> &[bool] {
        &self.arcs
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.arcs[u * self.n + v]
    }

    /// Arcs in lexicographic order.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        let n = self.n;
        (0..n)
            .flat_map(|u| (0..n).filter(move |&v| self.arcs[u * n + v]).map(move |v| (u, v)))
            .collect()
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.iter().filter(|&&a| a).count()
    }

    pub fn reversed(&self) -> Orientation {
        let n = self.n;
        let mut m = vec![false; n * n];
        for (u, v) in self.arcs() {
            m[v * n + u] = true;
        }
        Orientation { n, arcs: m }
    }

    /// The undirected graph underneath.
    pub fn underlying(&self) -> Graph {
        Graph::from_edges(self.n, self.arcs())
    }

    /// True iff every edge of `g` carries exactly one arc and nothing else does.
    pub fn covers(&self, g: &Graph) -> bool {
        self.n == g.n()
            && (0..self.n).all(|u| {
                (0..self.n).all(|v| g.has_edge(u, v) == (self.has_arc(u, v) || self.has_arc(v, u)))
            })
    }

    /// True iff the arc relation is transitive.
    pub fn is_transitive(&self) -> bool {
        let n = self.n;
        (0..n).all(|y| {
            (0..n)
                .filter(|&x| self.has_arc(x, y))
                .all(|x| (0..n).filter(|&z| self.has_arc(y, z)).all(|z| self.has_arc(x, z)))
        })
    }
}

impl fmt::Debug for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Orientation(n={}, {:?})", self.n, self.arcs())
    }
}

impl Serialize for Orientation {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.arcs().serialize(s)
    }
}

/// True iff `o` is a transitive orientation of `g`.
pub fn is_transitive(g: &Graph, o: &Orientation) -> Result<bool> {
    if !o.covers(g) {
        return input("orientation does not cover the edges of the graph exactly");
    }
    Ok(o.is_transitive())
}

/// Orients `g` by propagating forcing: `u -> v` forces `u -> w` whenever `uw`
/// is an edge and `vw` is not, and `w -> v` whenever `wv` is an edge and `uw`
/// is not. Unforced edges are seeded low to high in edge order.
///
/// Returns `None` when some edge is forced both ways, which rules out any
/// transitive orientation. A returned orientation may still be
/// intransitive if more than one seed was needed.
fn forcing_orientation(g: &Graph) -> Option<Orientation> {
    let n = g.n();
    let mut arcs = vec![false; n * n];
    let mut stack = Vec::new();
    for (s, t) in g.edges() {
        if arcs[s * n + t] || arcs[t * n + s] {
            continue;
        }
        arcs[s * n + t] = true;
        stack.push((s, t));
        while let Some((u, v)) = stack.pop() {
            let forced = g
                .neighbors(u)
                .iter()
                .filter(|&&w| w != v && !g.has_edge(v, w))
                .map(|&w| (u, w))
                .chain(
                    g.neighbors(v)
                        .iter()
                        .filter(|&&w| w != u && !g.has_edge(u, w))
                        .map(|&w| (w, v)),
                );
            for (a, b) in forced.collect::<Vec<_>>() {
                if arcs[b * n + a] {
                    return None;
                }
                if !arcs[a * n + b] {
                    arcs[a * n + b] = true;
                    stack.push((a, b));
                }
            }
        }
    }
    Some(Orientation::from_matrix(n, arcs))
}

/// Some transitive orientation of a graph whose modules are all trivial
/// (forcing first, exhaustive search as the fallback).
fn orient_node(g: &Graph, oracle: &Oracle) -> Result<Option<Orientation>> {
    match forcing_orientation(g) {
        None => Ok(None),
        Some(o) if o.is_transitive() => Ok(Some(o)),
        Some(_) => Ok(oracle.transitive_orientations(g)?.into_iter().next()),
    }
}

/// The two transitive orientations of a prime comparability graph, the first
/// one orienting the lexicographically smallest edge low to high.
pub fn prime_orientations(g: &Graph) -> Result<(Orientation, Orientation)> {
    prime_orientations_with(g, &Oracle::default())
}

pub fn prime_orientations_with(g: &Graph, oracle: &Oracle) -> Result<(Orientation, Orientation)> {
    if !is_prime(g) {
        return input("graph has a non-trivial module");
    }
    let Some(&(u, v)) = g.edges().first() else {
        return input("graph has no edges to orient");
    };
    let Some(o) = orient_node(g, oracle)? else {
        return domain("graph is not a comparability graph");
    };
    let o = if o.has_arc(u, v) { o } else { o.reversed() };
    let r = o.reversed();
    Ok((o, r))
}

/// Transitive orientations of each prime node graph (`None` elsewhere), or
/// a domain error naming the first node that cannot be oriented.
fn prime_node_orientations(t: &ModularTree, oracle: &Oracle) -> Result<Vec<Option<(Orientation, Orientation)>>> {
    t.nodes()
        .iter()
        .enumerate()
        .map(|(id, nd)| {
            if nd.kind != NodeKind::Prime {
                return Ok(None);
            }
            match prime_orientations_with(&nd.graph, oracle) {
                Ok(pair) => Ok(Some(pair)),
                Err(Error::Domain(_)) => domain(format!("prime node {id} is not a comparability graph")),
                Err(e) => Err(e),
            }
        })
        .collect()
}

/// True iff every node of the modular tree is a comparability graph.
pub fn is_comparability(g: &Graph) -> Result<bool> {
    is_comparability_with(g, &Oracle::default())
}

pub fn is_comparability_with(g: &Graph, oracle: &Oracle) -> Result<bool> {
    if g.n() == 0 {
        return Ok(true);
    }
    let t = ModularTree::build(g)?;
    for nd in t.nodes() {
        if nd.kind == NodeKind::Prime && orient_node(&nd.graph, oracle)?.is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// One orientation decision for a node of the modular tree.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NodeChoice {
    /// Independent and single-vertex nodes.
    Nothing,
    /// Which of the two orientations of a prime node; `false` is the one
    /// returned first by [`prime_orientations`].
    Prime(bool),
    /// A linear order of the members of a complete node, earliest first.
    Linear(Vec<usize>),
}

/// One [`NodeChoice`] per node, indexed by node id.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OrientationChoice(pub Vec<NodeChoice>);

/// Expands node choices into orientations of the original graph.
pub struct Composer<'a> {
    tree: &'a ModularTree,
    primes: Vec<Option<(Orientation, Orientation)>>,
}

impl<'a> Composer<'a> {
    pub fn new(tree: &'a ModularTree) -> Result<Self> {
        Self::with_oracle(tree, &Oracle::default())
    }

    pub fn with_oracle(tree: &'a ModularTree, oracle: &Oracle) -> Result<Self> {
        Ok(Composer {
            tree,
            primes: prime_node_orientations(tree, oracle)?,
        })
    }

    /// Orients `X[M_i] -> X[M_j]` whenever `m_i -> m_j` in the chosen
    /// orientation of a node, for every node.
    pub fn compose(&self, c: &OrientationChoice) -> Result<Orientation> {
        let t = self.tree;
        if c.0.len() != t.nodes().len() {
            return input(format!("expected {} node choices, got {}", t.nodes().len(), c.0.len()));
        }
        let n = t.original_count();
        let mut arcs = vec![false; n * n];
        for (id, (nd, choice)) in t.nodes().iter().zip(&c.0).enumerate() {
            let local: Vec<(usize, usize)> = match (nd.kind, choice) {
                (NodeKind::Independent | NodeKind::Single, NodeChoice::Nothing) => Vec::new(),
                (NodeKind::Prime, NodeChoice::Prime(rev)) => {
                    let (a, b) = self.primes[id].as_ref().expect("prime nodes are pre-oriented");
                    if *rev { b.arcs() } else { a.arcs() }
                }
                (NodeKind::Complete, NodeChoice::Linear(order)) => {
                    let pos: Vec<usize> = order
                        .iter()
                        .map(|v| nd.members.iter().position(|m| m == v))
                        .collect::<Option<Vec<_>>>()
                        .filter(|p| {
                            let mut s = p.clone();
                            s.sort_unstable();
                            s == (0..nd.members.len()).collect::<Vec<_>>()
                        })
                        .ok_or_else(|| {
                            Error::Input(format!("node {id}: {order:?} does not order its members"))
                        })?;
                    (0..pos.len())
                        .flat_map(|i| (i + 1..pos.len()).map(move |j| (i, j)))
                        .map(|(i, j)| (pos[i], pos[j]))
                        .collect()
                }
                (kind, choice) => return input(format!("node {id} is {kind:?} but got {choice:?}")),
            };
            for (i, j) in local {
                for &a in t.member_leaves(id, i) {
                    for &b in t.member_leaves(id, j) {
                        arcs[a * n + b] = true;
                    }
                }
            }
        }
        Ok(Orientation::from_matrix(n, arcs))
    }

    /// The first choice in enumeration order.
    fn first_choice(&self) -> OrientationChoice {
        OrientationChoice(
            self.tree
                .nodes()
                .iter()
                .map(|nd| match nd.kind {
                    NodeKind::Prime => NodeChoice::Prime(false),
                    NodeKind::Complete => NodeChoice::Linear(nd.members.clone()),
                    _ => NodeChoice::Nothing,
                })
                .collect(),
        )
    }

    /// Lazy stream of every choice: prime bits form the fastest-moving
    /// digits, then complete-node orders advance in lexicographic order, each
    /// group in node order.
    pub fn choices(&self) -> ChoiceIter {
        ChoiceIter {
            next: Some(self.first_choice()),
            members: self.tree.nodes().iter().map(|nd| nd.members.clone()).collect(),
        }
    }

    /// Lazy stream of every transitive orientation, each produced once.
    pub fn orientations(&self) -> impl Iterator<Item = Orientation> + '_ {
        self.choices()
            .map(|c| self.compose(&c).expect("enumerated choices are valid"))
    }
}

pub struct ChoiceIter {
    next: Option<OrientationChoice>,
    members: Vec<Vec<usize>>,
}

fn next_permutation(order: &mut [usize], rank: impl Fn(usize) -> usize) -> bool {
    let k = order.len();
    if k < 2 {
        return false;
    }
    let mut i = k - 1;
    while i > 0 && rank(order[i - 1]) >= rank(order[i]) {
        i -= 1;
    }
    if i == 0 {
        order.reverse();
        return false;
    }
    let mut j = k - 1;
    while rank(order[j]) <= rank(order[i - 1]) {
        j -= 1;
    }
    order.swap(i - 1, j);
    order[i..].reverse();
    true
}

impl Iterator for ChoiceIter {
    type Item = OrientationChoice;

    fn next(&mut self) -> Option<OrientationChoice> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        let mut advanced = false;
        for c in succ.0.iter_mut() {
            if let NodeChoice::Prime(b) = c {
                *b = !*b;
                if *b {
                    advanced = true;
                    break;
                }
            }
        }
        if !advanced {
            for (id, c) in succ.0.iter_mut().enumerate() {
                if let NodeChoice::Linear(order) = c {
                    let members = &self.members[id];
                    let rank = |v: usize| members.iter().position(|&m| m == v).unwrap();
                    if next_permutation(order, rank) {
                        advanced = true;
                        break;
                    }
                }
            }
        }
        if advanced {
            self.next = Some(succ);
        }
        Some(current)
    }
}

/// Builds the orientation for a choice vector.
pub fn compose_orientation(t: &ModularTree, c: &OrientationChoice) -> Result<Orientation> {
    Composer::new(t)?.compose(c)
}

/// Every transitive orientation of `g`, in enumeration order.
pub fn transitive_orientations(g: &Graph) -> Result<Vec<Orientation>> {
    let t = ModularTree::build(g)?;
    let composer = Composer::new(&t)?;
    Ok(composer.orientations().collect())
}

/// Number of transitive orientations: the product of 2 per prime node and
/// `k!` per complete node on `k` members.
pub fn count_orientations(t: &ModularTree) -> Result<BigUint> {
    prime_node_orientations(t, &Oracle::default())?;
    let mut total = BigUint::from(1u32);
    for nd in t.nodes() {
        match nd.kind {
            NodeKind::Prime => total *= 2u32,
            NodeKind::Complete => {
                for i in 2..=nd.members.len() {
                    total *= i;
                }
            }
            _ => {}
        }
    }
    Ok(total)
}

/// `pi(O) = {(pi(x), pi(y)) : x -> y in O}`; `pi` must preserve the
/// underlying graph.
pub fn act(pi: &Permutation, o: &Orientation) -> Result<Orientation> {
    if pi.degree() != o.n() {
        return input(format!("permutation of degree {} acting on {} vertices", pi.degree(), o.n()));
    }
    if !o.underlying().is_automorphism(pi) {
        return input("permutation is not an automorphism of the underlying graph");
    }
    let arcs: Vec<(usize, usize)> = o.arcs().into_iter().map(|(x, y)| (pi.apply(x), pi.apply(y))).collect();
    Orientation::from_arcs(o.n(), &arcs)
}

/// Automorphisms of `g` that map `o` to itself.
pub fn orientation_stabilizer(g: &Graph, o: &Orientation) -> Result<PermutationGroup> {
    orientation_stabilizer_with(g, o, &Oracle::default())
}

pub fn orientation_stabilizer_with(g: &Graph, o: &Orientation, oracle: &Oracle) -> Result<PermutationGroup> {
    if !is_transitive(g, o)? {
        return input("orientation is not transitive");
    }
    let aut = oracle.automorphisms(g)?;
    Ok(aut.filter(|pi| act(pi, o).as_ref() == Ok(o)))
}
