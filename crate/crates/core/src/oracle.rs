//! Exhaustive-search oracles.
//!
//! These are the reference answers every structural module is checked
//! against. They are exact but exponential, so each refuses inputs above a
//! configurable bound instead of running forever.

use crate::canon::{compress, for_each_isomorphism, Relation};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::orientation::Orientation;
use crate::perm::{Permutation, PermutationGroup};

/// Size limits for the exhaustive oracles.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Oracle {
    /// Largest vertex count accepted by automorphism and isomorphism search.
    pub max_vertices: usize,
    /// Largest edge count accepted by orientation enumeration.
    pub max_edges: usize,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle {
            max_vertices: 10,
            max_edges: 20,
        }
    }
}

impl Oracle {
    pub fn new(max_vertices: usize, max_edges: usize) -> Self {
        Oracle {
            max_vertices,
            max_edges,
        }
    }

    pub fn with_max_vertices(max_vertices: usize) -> Self {
        Oracle {
            max_vertices,
            ..Self::default()
        }
    }

    pub(crate) fn check_vertices(&self, what: &'static str, n: usize) -> Result<()> {
        if n > self.max_vertices {
            return Err(Error::OracleBound {
                what,
                actual: n,
                bound: self.max_vertices,
            });
        }
        Ok(())
    }

    /// Every automorphism of `g`, materialized in lexicographic order.
    pub fn automorphisms(&self, g: &Graph) -> Result<PermutationGroup> {
        self.colored_automorphisms(g, &vec![0; g.n()])
    }

    /// Automorphisms of `g` that also preserve the vertex colouring.
    pub fn colored_automorphisms(&self, g: &Graph, colors: &[usize]) -> Result<PermutationGroup> {
        self.check_vertices("vertex count", g.n())?;
        assert_eq!(colors.len(), g.n(), "one colour per vertex");
        let rel = Relation::from_graph(g);
        Ok(all_maps(&rel, colors, &rel, colors))
    }

    /// A witness isomorphism `g1 -> g2`, if one exists.
    pub fn isomorphism(&self, g1: &Graph, g2: &Graph) -> Result<Option<Permutation>> {
        self.check_vertices("vertex count", g1.n().max(g2.n()))?;
        if g1.n() != g2.n() || g1.m() != g2.m() {
            return Ok(None);
        }
        let (a, b) = (Relation::from_graph(g1), Relation::from_graph(g2));
        let zeros = vec![0; g1.n()];
        let mut found = None;
        for_each_isomorphism(&a, &zeros, &b, &zeros, &mut |m| {
            found = Some(Permutation::from_images_unchecked(m.to_vec()));
            false
        });
        Ok(found)
    }

    /// All transitive orientations, found by trying all `2^|E|` orientations.
    /// Edge `k` (in lexicographic order) points low→high when bit `k` of the
    /// counter is clear; results come out in counter order.
    pub fn transitive_orientations(&self, g: &Graph) -> Result<Vec<Orientation>> {
        let edges = g.edges();
        if edges.len() > self.max_edges {
            return Err(Error::OracleBound {
                what: "edge count",
                actual: edges.len(),
                bound: self.max_edges,
            });
        }
        let n = g.n();
        let mut out = Vec::new();
        let mut arcs = vec![false; n * n];
        for mask in 0u64..(1u64 << edges.len()) {
            arcs.iter_mut().for_each(|a| *a = false);
            for (k, &(u, v)) in edges.iter().enumerate() {
                if mask >> k & 1 == 0 {
                    arcs[u * n + v] = true;
                } else {
                    arcs[v * n + u] = true;
                }
            }
            if literally_transitive(n, &arcs) {
                out.push(Orientation::from_matrix(n, arcs.clone()));
            }
        }
        Ok(out)
    }

    /// Automorphisms of the poset given by a transitive orientation, found by
    /// searching directly on the directed relation.
    pub fn poset_automorphisms(&self, o: &Orientation) -> Result<PermutationGroup> {
        self.check_vertices("vertex count", o.n())?;
        let rel = Relation::new(o.n(), o.matrix().to_vec());
        let zeros = vec![0; o.n()];
        Ok(all_maps(&rel, &zeros, &rel, &zeros))
    }
}

fn literally_transitive(n: usize, arcs: &[bool]) -> bool {
    for x in 0..n {
        for y in 0..n {
            if !arcs[x * n + y] {
                continue;
            }
            for z in 0..n {
                if arcs[y * n + z] && !arcs[x * n + z] {
                    return false;
                }
            }
        }
    }
    true
}

fn all_maps(a: &Relation, ca: &[usize], b: &Relation, cb: &[usize]) -> PermutationGroup {
    let (ca, cb) = (compress(ca), compress(cb));
    let mut elements = Vec::new();
    for_each_isomorphism(a, &ca, b, &cb, &mut |m| {
        elements.push(Permutation::from_images_unchecked(m.to_vec()));
        true
    });
    PermutationGroup::from_elements(ca.len(), elements)
}

/// [`Oracle::automorphisms`] with the default bounds.
pub fn brute_force_aut(g: &Graph) -> Result<PermutationGroup> {
    Oracle::default().automorphisms(g)
}

/// [`Oracle::isomorphism`] with the default bounds.
pub fn brute_force_iso(g1: &Graph, g2: &Graph) -> Result<Option<Permutation>> {
    Oracle::default().isomorphism(g1, g2)
}

/// [`Oracle::transitive_orientations`] with the default bounds.
pub fn brute_force_transitive_orientations(g: &Graph) -> Result<Vec<Orientation>> {
    Oracle::default().transitive_orientations(g)
}
