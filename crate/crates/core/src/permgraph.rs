//! Permutation graphs: recognition, two-order representations, the action
//! of automorphisms on orientation pairs, symmetry classes of prime
//! permutation graphs, and gadgets realizing the closure operations on
//! automorphism groups.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use serde::Serialize;

use crate::canon::{canonical_graph, graph_code};
use crate::error::{domain, input, Result};
use crate::graph::Graph;
use crate::io::parse_edge_list;
use crate::modular::is_prime;
use crate::oracle::Oracle;
use crate::orientation::{is_comparability_with, is_transitive, transitive_orientations, Orientation};
use crate::perm::{Permutation, PermutationGroup};

/// Two vertex sequences; `u` and `v` are comparable when they appear in
/// the same relative order in both.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LinearOrderPair {
    pub l1: Vec<usize>,
    pub l2: Vec<usize>,
}

fn positions(order: &[usize]) -> Vec<usize> {
    let mut pos = vec![0; order.len()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    pos
}

impl LinearOrderPair {
    /// Pairs ordered the same way in both sequences.
    pub fn double_comparability_graph(&self) -> Graph {
        let (p1, p2) = (positions(&self.l1), positions(&self.l2));
        let n = self.l1.len();
        let edges = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|&(u, v)| (p1[u] < p1[v]) == (p2[u] < p2[v]));
        Graph::from_edges(n, edges)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({"l1": self.l1, "l2": self.l2})
    }

    /// Two horizontal lines carrying `l1` (top) and `l2` (bottom); vertex `u`
    /// is the segment joining its two positions.
    pub fn to_svg(&self) -> String {
        let n = self.l1.len();
        let step = 40;
        let width = step * (n + 1);
        let (top, bottom) = (30, 170);
        let x = |i: usize| step * (i + 1);
        let (p1, p2) = (positions(&self.l1), positions(&self.l2));
        let mut s = format!(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width}\" height=\"200\" viewBox=\"0 0 {width} 200\">\n"
        );
        let _ = writeln!(s, "  <line x1=\"0\" y1=\"{top}\" x2=\"{width}\" y2=\"{top}\" stroke=\"gray\"/>");
        let _ = writeln!(s, "  <line x1=\"0\" y1=\"{bottom}\" x2=\"{width}\" y2=\"{bottom}\" stroke=\"gray\"/>");
        for u in 0..n {
            let _ = writeln!(
                s,
                "  <line x1=\"{}\" y1=\"{top}\" x2=\"{}\" y2=\"{bottom}\" stroke=\"black\"/>",
                x(p1[u]),
                x(p2[u])
            );
            let _ = writeln!(s, "  <text x=\"{}\" y=\"{}\" text-anchor=\"middle\">{u}</text>", x(p1[u]), top - 8);
            let _ = writeln!(s, "  <text x=\"{}\" y=\"{}\" text-anchor=\"middle\">{u}</text>", x(p2[u]), bottom + 20);
        }
        s.push_str("</svg>\n");
        s
    }
}

/// A transitive orientation of a graph together with one of its complement.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct OrientationPair {
    pub o: Orientation,
    pub o_bar: Orientation,
}

/// Comparability of both the graph and its complement.
pub fn is_permutation_graph(g: &Graph) -> Result<bool> {
    is_permutation_graph_with(g, &Oracle::default())
}

pub fn is_permutation_graph_with(g: &Graph, oracle: &Oracle) -> Result<bool> {
    Ok(is_comparability_with(g, oracle)? && is_comparability_with(&g.complement(), oracle)?)
}

/// The graph whose edges are the inversions of `sigma`: `i < j` with
/// `sigma(i) > sigma(j)`.
pub fn permutation_diagram_graph(sigma: &Permutation) -> Graph {
    let n = sigma.degree();
    Graph::from_edges(
        n,
        (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&(i, j)| sigma.apply(i) > sigma.apply(j)),
    )
}

/// Every pair of transitive orientations of `g` and its complement.
pub fn orientation_pairs(g: &Graph) -> Result<Vec<OrientationPair>> {
    if g.n() == 0 {
        return input("graph has no vertices");
    }
    if !is_permutation_graph(g)? {
        return domain("not a permutation graph");
    }
    let os = transitive_orientations(g)?;
    let obs = transitive_orientations(&g.complement())?;
    Ok(os
        .iter()
        .flat_map(|o| {
            obs.iter().map(move |ob| OrientationPair {
                o: o.clone(),
                o_bar: ob.clone(),
            })
        })
        .collect())
}

/// Reads a tournament as a linear order. Returns `None` on a cycle.
fn tournament_order(n: usize, before: impl Fn(usize, usize) -> bool) -> Option<Vec<usize>> {
    let mut rank: Vec<(usize, usize)> = (0..n)
        .map(|v| ((0..n).filter(|&u| u != v && before(u, v)).count(), v))
        .collect();
    rank.sort_unstable();
    if rank.iter().enumerate().any(|(i, &(r, _))| r != i) {
        return None;
    }
    let order: Vec<usize> = rank.into_iter().map(|(_, v)| v).collect();
    let pos = positions(&order);
    let consistent = (0..n).all(|u| (0..n).all(|v| u == v || before(u, v) == (pos[u] < pos[v])));
    consistent.then_some(order)
}

/// `L1 = O ∪ Ō` and `L2 = O ∪ Ō_R`, each read off as a vertex sequence.
pub fn build_representation(g: &Graph, p: &OrientationPair) -> Result<LinearOrderPair> {
    if !is_transitive(g, &p.o)? {
        return input("first orientation is not transitive");
    }
    if !is_transitive(&g.complement(), &p.o_bar)? {
        return input("second orientation is not a transitive orientation of the complement");
    }
    let n = g.n();
    let l1 = tournament_order(n, |u, v| p.o.has_arc(u, v) || p.o_bar.has_arc(u, v))
        .expect("union of transitive orientations of a graph and its complement is acyclic");
    let l2 = tournament_order(n, |u, v| p.o.has_arc(u, v) || p.o_bar.has_arc(v, u))
        .expect("union with the reversed complement orientation is acyclic");
    Ok(LinearOrderPair { l1, l2 })
}

/// Representation from the first orientation pair in enumeration order.
pub fn representation(g: &Graph) -> Result<LinearOrderPair> {
    let pairs = orientation_pairs(g)?;
    build_representation(g, &pairs[0])
}

/// True iff `pi` maps every arc of `o` onto an arc of `o`.
fn fixes(pi: &Permutation, o: &Orientation) -> bool {
    o.arcs().into_iter().all(|(x, y)| o.has_arc(pi.apply(x), pi.apply(y)))
}

/// Orbits of `Aut(g)` acting simultaneously on both orientations.
#[derive(Clone, Debug)]
pub struct PairOrbits {
    pub pairs: Vec<OrientationPair>,
    /// Indices into `pairs`, each orbit sorted, ordered by first index.
    pub orbits: Vec<Vec<usize>>,
    pub aut_order: usize,
    /// `(automorphism, pair index)` for every non-identity automorphism
    /// fixing a pair; empty exactly when the action is semiregular.
    pub fixed: Vec<(Permutation, usize)>,
}

impl PairOrbits {
    pub fn is_semiregular(&self) -> bool {
        self.fixed.is_empty()
    }
}

pub fn pair_action_orbits(g: &Graph) -> Result<PairOrbits> {
    pair_action_orbits_with(g, &Oracle::default())
}

pub fn pair_action_orbits_with(g: &Graph, oracle: &Oracle) -> Result<PairOrbits> {
    let aut = oracle.automorphisms(g)?;
    let pairs = orientation_pairs(g)?;
    let index: BTreeMap<&OrientationPair, usize> = pairs.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let mut fixed = Vec::new();
    for pi in aut.elements().iter().filter(|p| !p.is_identity()) {
        for (i, p) in pairs.iter().enumerate() {
            if fixes(pi, &p.o) && fixes(pi, &p.o_bar) {
                fixed.push((pi.clone(), i));
            }
        }
    }
    let mut seen = vec![false; pairs.len()];
    let mut orbits = Vec::new();
    for start in 0..pairs.len() {
        if seen[start] {
            continue;
        }
        let mut orbit = BTreeSet::new();
        for pi in aut.elements() {
            let image = OrientationPair {
                o: crate::orientation::act(pi, &pairs[start].o)?,
                o_bar: crate::orientation::act(pi, &pairs[start].o_bar)?,
            };
            let j = index[&image];
            seen[j] = true;
            orbit.insert(j);
        }
        orbits.push(orbit.into_iter().collect());
    }
    Ok(PairOrbits {
        pairs,
        orbits,
        aut_order: aut.order_usize(),
        fixed,
    })
}

/// The three involutions of a symmetric permutation diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Symmetry {
    /// Mirror across the vertical axis: reverses both orientations.
    Vertical,
    /// Mirror across the horizontal axis: reverses the complement orientation.
    Horizontal,
    /// Half turn: reverses the graph orientation only.
    Rotation,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SymmetrySubgroup {
    Trivial,
    Vertical,
    Horizontal,
    Rotation,
    Klein,
}

/// Automorphism group of a prime permutation graph read through its
/// permutation diagram.
#[derive(Clone, Debug, Serialize)]
pub struct PrimeSymmetryClass {
    pub subgroup: SymmetrySubgroup,
    pub order: usize,
    /// Every non-identity automorphism with its label.
    pub involutions: Vec<(Permutation, Symmetry)>,
    pub orbits_of_size_4: usize,
    /// Orbits of size two counted by the label of their stabilizer
    /// (`None` when the stabilizer is trivial, i.e. the group has order two).
    #[serde(serialize_with = "serialize_orbit_types")]
    pub orbits_of_size_2: BTreeMap<Option<Symmetry>, usize>,
    pub orbits_of_size_1: usize,
    /// Largest number of vertices fixed by the vertical mirror, if present.
    pub vertical_fixed_points: Option<usize>,
}

fn serialize_orbit_types<S: serde::Serializer>(
    m: &BTreeMap<Option<Symmetry>, usize>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    m.iter().collect::<Vec<_>>().serialize(s)
}

pub fn prime_symmetry_class(g: &Graph) -> Result<PrimeSymmetryClass> {
    prime_symmetry_class_with(g, &Oracle::default())
}

pub fn prime_symmetry_class_with(g: &Graph, oracle: &Oracle) -> Result<PrimeSymmetryClass> {
    if !is_prime(g) {
        return input("graph has a non-trivial module");
    }
    if !is_permutation_graph_with(g, oracle)? {
        return input("graph is not a permutation graph");
    }
    let aut = oracle.automorphisms(g)?;
    let o = transitive_orientations(g)?.swap_remove(0);
    let o_bar = transitive_orientations(&g.complement())?.swap_remove(0);
    let mut involutions = Vec::new();
    for pi in aut.elements().iter().filter(|p| !p.is_identity()) {
        if pi.order() != 2 {
            return domain(format!("automorphism {pi} of a prime permutation graph is not an involution"));
        }
        let label = match (fixes(pi, &o), fixes(pi, &o_bar)) {
            (false, false) => Symmetry::Vertical,
            (true, false) => Symmetry::Horizontal,
            (false, true) => Symmetry::Rotation,
            (true, true) => return domain(format!("automorphism {pi} fixes an orientation pair")),
        };
        involutions.push((pi.clone(), label));
    }
    let subgroup = match involutions.as_slice() {
        [] => SymmetrySubgroup::Trivial,
        [(_, Symmetry::Vertical)] => SymmetrySubgroup::Vertical,
        [(_, Symmetry::Horizontal)] => SymmetrySubgroup::Horizontal,
        [(_, Symmetry::Rotation)] => SymmetrySubgroup::Rotation,
        [_, _, _] => SymmetrySubgroup::Klein,
        _ => return domain(format!("automorphism group of order {} exceeds four", aut.order_usize())),
    };
    let mut class = PrimeSymmetryClass {
        subgroup,
        order: aut.order_usize(),
        involutions: involutions.clone(),
        orbits_of_size_4: 0,
        orbits_of_size_2: BTreeMap::new(),
        orbits_of_size_1: 0,
        vertical_fixed_points: None,
    };
    for orbit in aut.orbits() {
        match orbit.len() {
            1 => class.orbits_of_size_1 += 1,
            2 => {
                let label = involutions
                    .iter()
                    .find(|(pi, _)| pi.apply(orbit[0]) == orbit[0])
                    .map(|(_, l)| *l);
                *class.orbits_of_size_2.entry(label).or_insert(0) += 1;
            }
            4 => class.orbits_of_size_4 += 1,
            k => return domain(format!("orbit of size {k}")),
        }
    }
    class.vertical_fixed_points = involutions
        .iter()
        .find(|(_, l)| *l == Symmetry::Vertical)
        .map(|(pi, _)| pi.fixed_points().count());
    Ok(class)
}

/// Smallest asymmetric prime permutation graph, frozen from
/// [`find_asymmetric_spine`].
pub fn asymmetric_spine() -> Graph {
    parse_edge_list(include_str!("../fixtures/asymmetric_spine.txt")).expect("fixture parses")
}

/// Prime permutation graph with automorphism group `Z2^2`, an orbit of size
/// four and orbits of size two with two different stabilizers, frozen from
/// [`find_rectangle_spine`].
pub fn rectangle_spine() -> Graph {
    parse_edge_list(include_str!("../fixtures/rectangle_spine.txt")).expect("fixture parses")
}

/// First graph, by vertex count then canonical code, that is prime, a
/// permutation graph and asymmetric.
pub fn find_asymmetric_spine(max_n: usize) -> Option<Graph> {
    let oracle = Oracle::default();
    crate::enumerate::nonisomorphic_graphs_up_to(max_n).into_iter().find(|g| {
        g.n() >= 4
            && is_prime(g)
            && is_permutation_graph(g).unwrap_or(false)
            && oracle.automorphisms(g).map(|a| a.order_usize() == 1).unwrap_or(false)
    })
}

/// Orbits used by the rectangle gadget: one of size four and one of size
/// two for each of two stabilizers, or `None` if `g` lacks them.
pub fn rectangle_orbits(g: &Graph) -> Option<(Vec<usize>, Vec<usize>, Vec<usize>)> {
    let aut = Oracle::with_max_vertices(12).automorphisms(g).ok()?;
    if aut.order_usize() != 4 || aut.elements().iter().any(|p| p.order() > 2) {
        return None;
    }
    let orbits = aut.orbits();
    let four = orbits.iter().find(|o| o.len() == 4)?.clone();
    let mut by_stab: BTreeMap<Permutation, Vec<usize>> = BTreeMap::new();
    for o in orbits.iter().filter(|o| o.len() == 2) {
        let stab = aut.elements().iter().find(|p| !p.is_identity() && p.apply(o[0]) == o[0])?;
        by_stab.entry(stab.clone()).or_insert_with(|| o.clone());
    }
    let mut types = by_stab.into_values();
    Some((four, types.next()?, types.next()?))
}

/// Involutions of `0..n` commuting with `i -> n-1-i`: diagrams symmetric
/// under both mirrors.
fn symmetric_involutions(n: usize) -> Vec<Permutation> {
    fn fill(i: usize, n: usize, s: &mut Vec<Option<usize>>, out: &mut Vec<Permutation>) {
        if i == n {
            out.push(Permutation::from_images_unchecked(s.iter().map(|x| x.unwrap()).collect()));
            return;
        }
        if s[i].is_some() {
            fill(i + 1, n, s, out);
            return;
        }
        for j in 0..n {
            let w = |x: usize| n - 1 - x;
            let forced = [(i, j), (j, i), (w(i), w(j)), (w(j), w(i))];
            let ok = forced.iter().all(|&(a, b)| {
                s[a].is_none_or(|x| x == b)
                    && forced.iter().all(|&(c, d)| (a == c) == (b == d))
                    && (0..n).all(|c| c == a || s[c] != Some(b))
            });
            if !ok {
                continue;
            }
            let saved = s.clone();
            for (a, b) in forced {
                s[a] = Some(b);
            }
            fill(i + 1, n, s, out);
            *s = saved;
        }
    }
    let mut out = Vec::new();
    fill(0, n, &mut vec![None; n], &mut out);
    out
}

/// Searches symmetric diagrams on at most `max_n` points for a prime
/// graph with the orbit structure of [`rectangle_orbits`]; returns the one
/// with the smallest canonical code at the smallest size, canonically
/// labelled.
pub fn find_rectangle_spine(max_n: usize) -> Option<Graph> {
    for n in 4..=max_n {
        let mut found: BTreeMap<Vec<u64>, Graph> = BTreeMap::new();
        for sigma in symmetric_involutions(n) {
            let g = permutation_diagram_graph(&sigma);
            if is_prime(&g) && rectangle_orbits(&g).is_some() {
                found.entry(graph_code(&g)).or_insert(g);
            }
        }
        if let Some((_, g)) = found.into_iter().next() {
            return Some(canonical_graph(&g));
        }
    }
    None
}

fn require_permutation(g: &Graph, name: &str) -> Result<()> {
    if g.n() == 0 {
        return input(format!("{name} has no vertices"));
    }
    if !is_permutation_graph(g)? {
        return input(format!("{name} is not a permutation graph"));
    }
    Ok(())
}

fn substitute_into(spine: &Graph, slots: &[(&[usize], &Graph)]) -> Graph {
    let k1 = Graph::empty(1);
    let mut parts: Vec<&Graph> = vec![&k1; spine.n()];
    for (vertices, g) in slots {
        for &v in *vertices {
            parts[v] = g;
        }
    }
    spine.substitute(&parts)
}

/// Substitutes `x1` and `x2` for two vertices of the asymmetric spine, so
/// the automorphism group is `Aut(x1) x Aut(x2)`.
pub fn gadget_product(x1: &Graph, x2: &Graph) -> Result<Graph> {
    require_permutation(x1, "first input")?;
    require_permutation(x2, "second input")?;
    Ok(substitute_into(&asymmetric_spine(), &[(&[0], x1), (&[1], x2)]))
}

/// `k` disjoint copies of a connected `y`: `Aut(y) wr S_k`.
pub fn gadget_wreath(y: &Graph, k: usize) -> Result<Graph> {
    require_permutation(y, "input")?;
    if !y.is_connected() {
        return input("input must be connected");
    }
    if k == 0 {
        return input("need at least one copy");
    }
    Ok((1..k).fold(y.clone(), |acc, _| acc.disjoint_union(y)))
}

/// Substitutes `x1` into an orbit of size four of the rectangle spine and
/// `x2`, `x3` into orbits of size two with different stabilizers:
/// `(Aut(x1)^4 x Aut(x2)^2 x Aut(x3)^2) ⋊ Z2^2`.
pub fn gadget_rectangle(x1: &Graph, x2: &Graph, x3: &Graph) -> Result<Graph> {
    require_permutation(x1, "first input")?;
    require_permutation(x2, "second input")?;
    require_permutation(x3, "third input")?;
    let spine = rectangle_spine();
    let (four, a, b) = rectangle_orbits(&spine).expect("fixture has the required orbits");
    Ok(substitute_into(&spine, &[(&four, x1), (&a, x2), (&b, x3)]))
}

/// Brute-force automorphism group of a gadget, with a bound large enough
/// for the gadgets over small inputs.
pub fn gadget_automorphisms(g: &Graph) -> Result<PermutationGroup> {
    Oracle::with_max_vertices(64).automorphisms(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::nonisomorphic_graphs;
    use crate::oracle::brute_force_aut;

    #[test]
    fn recognition_examples() {
        assert!(is_permutation_graph(&Graph::path(4)).unwrap());
        assert!(!is_permutation_graph(&Graph::cycle(5)).unwrap());
        assert!(!is_permutation_graph(&Graph::cycle(6)).unwrap());
    }

    #[test]
    fn diagram_graphs_are_permutation_graphs() {
        let sigma = Permutation::from_images(vec![2, 0, 3, 1]).unwrap();
        let g = permutation_diagram_graph(&sigma);
        assert!(is_permutation_graph(&g).unwrap());
        let id = LinearOrderPair {
            l1: (0..4).collect(),
            l2: (0..4).map(|i| sigma.apply(i)).collect(),
        };
        // reading sigma as l2 positions: comparable iff not inverted
        let comp = id.double_comparability_graph();
        assert_eq!(comp.complement().m(), g.m());
    }

    #[test]
    fn representation_examples() {
        let k2 = Graph::complete(2);
        let pairs = orientation_pairs(&k2).unwrap();
        let forward = pairs.iter().find(|p| p.o.has_arc(0, 1)).unwrap();
        let r = build_representation(&k2, forward).unwrap();
        assert_eq!(r.l1, vec![0, 1]);
        assert_eq!(r.l2, vec![0, 1]);

        let e2 = Graph::empty(2);
        let pairs = orientation_pairs(&e2).unwrap();
        let forward = pairs.iter().find(|p| p.o_bar.has_arc(0, 1)).unwrap();
        let r = build_representation(&e2, forward).unwrap();
        assert_eq!(r.l1, vec![0, 1]);
        assert_eq!(r.l2, vec![1, 0]);

        let p4 = Graph::path(4);
        for p in orientation_pairs(&p4).unwrap() {
            let r = build_representation(&p4, &p).unwrap();
            assert_eq!(r.double_comparability_graph(), p4);
        }
        assert!(r.to_svg().contains("<line"));
    }

    #[test]
    fn representation_rejects_foreign_pairs() {
        let p4 = Graph::path(4);
        let pair = orientation_pairs(&p4).unwrap().swap_remove(0);
        assert!(build_representation(&Graph::complete(4), &pair).is_err());
    }

    #[test]
    fn pair_orbit_examples() {
        let p4 = pair_action_orbits(&Graph::path(4)).unwrap();
        assert_eq!(p4.pairs.len(), 4);
        assert_eq!(p4.orbits.len(), 2);
        assert!(p4.orbits.iter().all(|o| o.len() == 2));
        assert!(p4.is_semiregular());

        let k2 = pair_action_orbits(&Graph::complete(2)).unwrap();
        assert_eq!(k2.pairs.len(), 2);
        assert_eq!(k2.orbits, vec![vec![0, 1]]);
        assert!(pair_action_orbits(&Graph::cycle(5)).is_err());
    }

    #[test]
    fn semiregular_up_to_six() {
        for n in 1..=6 {
            for g in nonisomorphic_graphs(n) {
                if !is_permutation_graph(&g).unwrap() {
                    continue;
                }
                let r = pair_action_orbits(&g).unwrap();
                assert!(r.is_semiregular(), "{g:?}");
                assert!(r.orbits.iter().all(|o| o.len() == r.aut_order));
            }
        }
    }

    #[test]
    fn symmetry_class_examples() {
        let c = prime_symmetry_class(&Graph::path(4)).unwrap();
        assert_eq!(c.order, 2);
        assert_eq!(c.orbits_of_size_2.values().sum::<usize>(), 2);
        assert!(prime_symmetry_class(&Graph::path(3)).is_err());
        let c = prime_symmetry_class(&asymmetric_spine()).unwrap();
        assert_eq!(c.subgroup, SymmetrySubgroup::Trivial);
    }

    #[test]
    fn rectangle_spine_class() {
        let c = prime_symmetry_class(&rectangle_spine()).unwrap();
        assert_eq!(c.subgroup, SymmetrySubgroup::Klein);
        assert!(c.orbits_of_size_4 >= 1);
        assert_eq!(c.orbits_of_size_2.len(), 2);
        assert!(!c.orbits_of_size_2.contains_key(&Some(Symmetry::Vertical)));
        assert!(!c.orbits_of_size_2.contains_key(&None));
        assert!(c.vertical_fixed_points.unwrap() <= 1);
    }

    #[test]
    fn fixtures_match_discovery() {
        let spine = asymmetric_spine();
        assert_eq!(find_asymmetric_spine(spine.n()).unwrap(), spine);
        assert!(find_asymmetric_spine(spine.n() - 1).is_none());
        let rect = rectangle_spine();
        assert_eq!(find_rectangle_spine(rect.n()).unwrap(), rect);
    }

    #[test]
    fn gadget_examples() {
        let w = gadget_wreath(&Graph::empty(1), 3).unwrap();
        assert_eq!(w, Graph::empty(3));
        assert_eq!(brute_force_aut(&w).unwrap().order_usize(), 6);

        let g = gadget_product(&Graph::complete(2), &Graph::complete(2)).unwrap();
        assert!(is_permutation_graph(&g).unwrap());
        assert_eq!(gadget_automorphisms(&g).unwrap().order_usize(), 4);

        let g = gadget_rectangle(&Graph::empty(1), &Graph::empty(1), &Graph::empty(1)).unwrap();
        assert!(is_permutation_graph(&g).unwrap());
        assert_eq!(gadget_automorphisms(&g).unwrap().order_usize(), 4);

        assert!(gadget_wreath(&Graph::empty(2), 2).is_err());
        assert!(gadget_product(&Graph::cycle(5), &Graph::empty(1)).is_err());
    }
}
