//! Permutations and permutation groups.
//!
//! Groups are stored by generators. A stabilizer chain (Schreier–Sims) is
//! built on demand for orders and membership; the full element list is
//! materialized only when asked for, which is meant for desk-scale groups.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{input, Result};

/// A bijection on `0..n` in one-line notation. The derived ordering is the
/// lexicographic order of the one-line images.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return input(format!("{images:?} is not a permutation of 0..{n}"));
            }
            seen[x] = true;
        }
        Ok(Permutation(images))
    }

    pub(crate) fn from_images_unchecked(images: Vec<usize>) -> Self {
        debug_assert!(Self::from_images(images.clone()).is_ok());
        Permutation(images)
    }

    /// The transposition `(a b)` on `0..n`.
    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut p = Self::identity(n);
        p.0.swap(a, b);
        p
    }

    /// The cycle `c[0] -> c[1] -> ... -> c[0]` on `0..n`.
    pub fn cycle(n: usize, c: &[usize]) -> Self {
        let mut p = Self::identity(n);
        for (i, &x) in c.iter().enumerate() {
            p.0[x] = c[(i + 1) % c.len()];
        }
        p
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.0[x]
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    /// `self ∘ other`: apply `other` first, then `self`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation(other.0.iter().map(|&x| self.0[x]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x] = i;
        }
        Permutation(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// Order of the permutation as a group element.
    pub fn order(&self) -> usize {
        fn gcd(a: usize, b: usize) -> usize {
            if b == 0 {
                a
            } else {
                gcd(b, a % b)
            }
        }
        self.cycles()
            .iter()
            .map(Vec::len)
            .fold(1, |acc, len| acc / gcd(acc, len) * len)
    }

    /// Non-trivial cycles, each starting at its smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.0.len()];
        let mut out = Vec::new();
        for s in 0..self.0.len() {
            if seen[s] || self.0[s] == s {
                continue;
            }
            let mut c = vec![s];
            seen[s] = true;
            let mut x = self.0[s];
            while x != s {
                seen[x] = true;
                c.push(x);
                x = self.0[x];
            }
            out.push(c);
        }
        out
    }

    pub fn fixed_points(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.0.len()).filter(move |&i| self.0[i] == i)
    }

    /// Extends to degree `n`, acting on `offset..offset+self.degree()` and
    /// fixing everything else.
    pub fn embed(&self, n: usize, offset: usize) -> Permutation {
        let mut p = Self::identity(n);
        for (i, &x) in self.0.iter().enumerate() {
            p.0[offset + i] = offset + x;
        }
        p
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let parts: Vec<String> = c.iter().map(ToString::to_string).collect();
            write!(f, "({})", parts.join(" "))?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug)]
struct Level {
    base: usize,
    gens: Vec<Permutation>,
    /// `transversal[b]` maps the base point to `b`.
    transversal: Vec<Option<Permutation>>,
}

/// Base and strong generating set, built by deterministic Schreier–Sims.
#[derive(Clone, Debug)]
pub(crate) struct StabChain {
    degree: usize,
    levels: Vec<Level>,
}

impl StabChain {
    pub(crate) fn new(degree: usize) -> Self {
        StabChain {
            degree,
            levels: Vec::new(),
        }
    }

    fn sift_from(&self, g: &Permutation, start: usize) -> (Permutation, usize) {
        let mut h = g.clone();
        for (i, lvl) in self.levels.iter().enumerate().skip(start) {
            let b = h.apply(lvl.base);
            match &lvl.transversal[b] {
                Some(u) => h = u.inverse().compose(&h),
                None => return (h, i),
            }
        }
        (h, self.levels.len())
    }

    pub(crate) fn contains(&self, g: &Permutation) -> bool {
        g.degree() == self.degree && self.sift_from(g, 0).0.is_identity()
    }

    /// Adds `g` to the group; returns whether the group grew.
    pub(crate) fn insert(&mut self, g: &Permutation) -> bool {
        self.insert_at(g, 0)
    }

    fn insert_at(&mut self, g: &Permutation, start: usize) -> bool {
        let (h, j) = self.sift_from(g, start);
        if h.is_identity() {
            return false;
        }
        if j == self.levels.len() {
            let base = (0..self.degree).find(|&x| h.apply(x) != x).unwrap();
            let mut transversal = vec![None; self.degree];
            transversal[base] = Some(Permutation::identity(self.degree));
            self.levels.push(Level {
                base,
                gens: Vec::new(),
                transversal,
            });
        }
        for k in start..=j {
            self.levels[k].gens.push(h.clone());
        }
        for k in (start..=j).rev() {
            self.rebuild_orbit(k);
            let lvl = &self.levels[k];
            let mut schreier = Vec::new();
            for b in 0..self.degree {
                let Some(ub) = &lvl.transversal[b] else { continue };
                for s in &lvl.gens {
                    let sb = s.apply(b);
                    let usb = lvl.transversal[sb].as_ref().unwrap();
                    let sg = usb.inverse().compose(&s.compose(ub));
                    if !sg.is_identity() {
                        schreier.push(sg);
                    }
                }
            }
            for sg in schreier {
                self.insert_at(&sg, k + 1);
            }
        }
        true
    }

    fn rebuild_orbit(&mut self, k: usize) {
        let lvl = &mut self.levels[k];
        let mut transversal = vec![None; self.degree];
        transversal[lvl.base] = Some(Permutation::identity(self.degree));
        let mut queue = vec![lvl.base];
        while let Some(p) = queue.pop() {
            for s in &lvl.gens {
                let q = s.apply(p);
                if transversal[q].is_none() {
                    transversal[q] = Some(s.compose(transversal[p].as_ref().unwrap()));
                    queue.push(q);
                }
            }
        }
        lvl.transversal = transversal;
    }

    pub(crate) fn order(&self) -> BigUint {
        self.levels
            .iter()
            .map(|l| BigUint::from(l.transversal.iter().flatten().count()))
            .product()
    }

    /// Every element, as products of one transversal element per level.
    fn elements(&self) -> Vec<Permutation> {
        let mut acc = vec![Permutation::identity(self.degree)];
        for lvl in self.levels.iter().rev() {
            let reps: Vec<&Permutation> = lvl.transversal.iter().flatten().collect();
            acc = reps
                .iter()
                .flat_map(|u| acc.iter().map(move |x| u.compose(x)))
                .collect();
        }
        acc
    }
}

/// A permutation group given by generators.
#[derive(Debug)]
pub struct PermutationGroup {
    degree: usize,
    generators: Vec<Permutation>,
    chain: OnceLock<StabChain>,
    elements: OnceLock<Vec<Permutation>>,
}

impl Clone for PermutationGroup {
    fn clone(&self) -> Self {
        PermutationGroup {
            degree: self.degree,
            generators: self.generators.clone(),
            chain: self.chain.clone(),
            elements: self.elements.clone(),
        }
    }
}

impl PermutationGroup {
    pub fn trivial(degree: usize) -> Self {
        Self::from_generators(degree, Vec::new())
    }

    /// Identity generators are dropped; degrees must all equal `degree`.
    pub fn from_generators(degree: usize, generators: Vec<Permutation>) -> Self {
        assert!(generators.iter().all(|g| g.degree() == degree), "generator degree mismatch");
        let mut gens: Vec<Permutation> = generators.into_iter().filter(|g| !g.is_identity()).collect();
        gens.sort();
        gens.dedup();
        PermutationGroup {
            degree,
            generators: gens,
            chain: OnceLock::new(),
            elements: OnceLock::new(),
        }
    }

    /// Wraps a complete, closed element list (as produced by an exhaustive
    /// search). A small generating set is extracted greedily in element order.
    pub fn from_elements(degree: usize, mut elements: Vec<Permutation>) -> Self {
        elements.sort();
        elements.dedup();
        let mut chain = StabChain::new(degree);
        let mut generators = Vec::new();
        for e in &elements {
            if !chain.contains(e) {
                chain.insert(e);
                generators.push(e.clone());
            }
        }
        let group = PermutationGroup {
            degree,
            generators,
            chain: OnceLock::new(),
            elements: OnceLock::new(),
        };
        let _ = group.chain.set(chain);
        let _ = group.elements.set(elements);
        group
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    fn chain(&self) -> &StabChain {
        self.chain.get_or_init(|| {
            let mut c = StabChain::new(self.degree);
            for g in &self.generators {
                c.insert(g);
            }
            c
        })
    }

    pub fn order(&self) -> BigUint {
        self.chain().order()
    }

    /// Order as a machine integer; panics if it does not fit.
    pub fn order_usize(&self) -> usize {
        let o = self.order();
        usize::try_from(&o).unwrap_or_else(|_| panic!("group order {o} overflows usize"))
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.chain().contains(p)
    }

    /// All elements in lexicographic one-line order.
    pub fn elements(&self) -> &[Permutation] {
        self.elements.get_or_init(|| {
            let mut e = self.chain().elements();
            e.sort();
            e
        })
    }

    pub fn element_set(&self) -> BTreeSet<Permutation> {
        self.elements().iter().cloned().collect()
    }

    /// Orbits on `0..degree`, each sorted, ordered by smallest point.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut parent: Vec<usize> = (0..self.degree).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let next = p[y];
                p[y] = r;
                y = next;
            }
            r
        }
        for g in &self.generators {
            for x in 0..self.degree {
                let (a, b) = (find(&mut parent, x), find(&mut parent, g.apply(x)));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        let mut groups: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
        for x in 0..self.degree {
            let r = find(&mut parent, x);
            groups.entry(r).or_default().push(x);
        }
        groups.into_values().collect()
    }

    /// The subgroup of elements satisfying `keep`, by filtering the
    /// materialized element list.
    pub fn filter(&self, keep: impl Fn(&Permutation) -> bool) -> PermutationGroup {
        let kept = self.elements().iter().filter(|p| keep(p)).cloned().collect();
        PermutationGroup::from_elements(self.degree, kept)
    }

    /// Group axioms checked literally on the element list.
    pub fn is_closed(&self) -> bool {
        let set = self.element_set();
        set.contains(&Permutation::identity(self.degree))
            && set.iter().all(|a| {
                set.contains(&a.inverse()) && set.iter().all(|b| set.contains(&a.compose(b)))
            })
    }
}

impl PartialEq for PermutationGroup {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree
            && self.order() == other.order()
            && other.generators.iter().all(|g| self.contains(g))
    }
}

impl Eq for PermutationGroup {}
