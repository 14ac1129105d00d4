//! Group expressions and the recursive assembly of `Aut(T)` from a
//! modular tree.
//!
//! Expression grammar, as printed by `Display`:
//!
//! ```text
//! expr := "1"                                   trivial group
//!       | "S" k                                 symmetric group on k points
//!       | factor " x " factor ...               direct product
//!       | factor " wr S" k                      wreath product with S_k
//!       | "Z2^2-semidirect[" e "; " e "; " e "; " e "]"
//!                                               (G1^4 x G2^2 x G3^2 x G4) by Z2^2
//!       | "Opaque(" order ")"                   outside the grammar
//! ```
//!
//! Compound factors of a product or wreath base are parenthesised.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;

use crate::canon::{canonical_form, compress, Relation};
use crate::error::{input, Result};
use crate::graph::Graph;
use crate::modular::{ModularTree, NodeKind};
use crate::oracle::Oracle;
use crate::perm::{Permutation, PermutationGroup};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GroupExpr {
    Trivial,
    Sym(usize),
    DirectProduct(Vec<GroupExpr>),
    Wreath(Box<GroupExpr>, usize),
    /// `(G1^4 x G2^2 x G3^2 x G4) ⋊ Z2^2`.
    SemidirectZ22 {
        g1: Box<GroupExpr>,
        g2: Box<GroupExpr>,
        g3: Box<GroupExpr>,
        fixed: Box<GroupExpr>,
    },
    /// A group of known order with no expression in the grammar.
    Opaque(BigUint),
}

fn factorial(k: usize) -> BigUint {
    (2..=k).fold(BigUint::from(1u32), |acc, i| acc * i)
}

impl GroupExpr {
    pub fn semidirect(g1: GroupExpr, g2: GroupExpr, g3: GroupExpr, fixed: GroupExpr) -> Self {
        GroupExpr::SemidirectZ22 {
            g1: Box::new(g1),
            g2: Box::new(g2),
            g3: Box::new(g3),
            fixed: Box::new(fixed),
        }
    }

    pub fn wreath(base: GroupExpr, k: usize) -> Self {
        GroupExpr::Wreath(Box::new(base), k)
    }

    /// Order computed from the structure alone.
    pub fn order(&self) -> BigUint {
        match self {
            GroupExpr::Trivial => BigUint::from(1u32),
            GroupExpr::Sym(k) => factorial(*k),
            GroupExpr::DirectProduct(fs) => fs.iter().map(GroupExpr::order).product(),
            GroupExpr::Wreath(g, k) => g.order().pow(*k as u32) * factorial(*k),
            GroupExpr::SemidirectZ22 { g1, g2, g3, fixed } => {
                g1.order().pow(4) * g2.order().pow(2) * g3.order().pow(2) * fixed.order() * 4u32
            }
            GroupExpr::Opaque(o) => o.clone(),
        }
    }

    pub fn is_trivial(&self) -> bool {
        matches!(self, GroupExpr::Trivial)
    }

    /// Flattens products, drops trivial factors, sorts factors by
    /// (order, printed form) and folds the degenerate wreath cases.
    pub fn normalize(self) -> GroupExpr {
        match self {
            GroupExpr::Sym(k) if k <= 1 => GroupExpr::Trivial,
            GroupExpr::Opaque(o) if o == BigUint::from(1u32) => GroupExpr::Trivial,
            GroupExpr::DirectProduct(fs) => {
                let mut flat = Vec::new();
                for f in fs {
                    match f.normalize() {
                        GroupExpr::Trivial => {}
                        GroupExpr::DirectProduct(inner) => flat.extend(inner),
                        other => flat.push(other),
                    }
                }
                flat.sort_by_cached_key(|f| (f.order(), f.to_string()));
                match flat.len() {
                    0 => GroupExpr::Trivial,
                    1 => flat.pop().unwrap(),
                    _ => GroupExpr::DirectProduct(flat),
                }
            }
            GroupExpr::Wreath(g, k) => {
                let g = g.normalize();
                match (g, k) {
                    (_, 0) => GroupExpr::Trivial,
                    (g, 1) => g,
                    (GroupExpr::Trivial, k) => GroupExpr::Sym(k),
                    (g, k) => GroupExpr::wreath(g, k),
                }
            }
            GroupExpr::SemidirectZ22 { g1, g2, g3, fixed } => {
                GroupExpr::semidirect(g1.normalize(), g2.normalize(), g3.normalize(), fixed.normalize())
            }
            other => other,
        }
    }

    fn is_compound(&self) -> bool {
        matches!(self, GroupExpr::DirectProduct(_) | GroupExpr::Wreath(..))
    }

    pub fn to_json(&self) -> serde_json::Value {
        use serde_json::json;
        match self {
            GroupExpr::Trivial => json!({"type": "trivial"}),
            GroupExpr::Sym(k) => json!({"type": "sym", "k": k}),
            GroupExpr::DirectProduct(fs) => {
                json!({"type": "direct_product", "factors": fs.iter().map(GroupExpr::to_json).collect::<Vec<_>>()})
            }
            GroupExpr::Wreath(g, k) => json!({"type": "wreath", "base": g.to_json(), "k": k}),
            GroupExpr::SemidirectZ22 { g1, g2, g3, fixed } => json!({
                "type": "semidirect_z2z2",
                "g1": g1.to_json(),
                "g2": g2.to_json(),
                "g3": g3.to_json(),
                "fixed": fixed.to_json(),
            }),
            GroupExpr::Opaque(o) => json!({"type": "opaque", "order": o.to_string()}),
        }
    }

    /// The natural faithful permutation action: `S_k` on `k` points, products
    /// on disjoint domains, wreath products imprimitively, and the
    /// semidirect product on nine blocks permuted by `Z2^2`.
    pub fn permutation_group(&self) -> Result<PermutationGroup> {
        let (degree, gens) = self.action()?;
        Ok(PermutationGroup::from_generators(degree, gens))
    }

    fn action(&self) -> Result<(usize, Vec<Permutation>)> {
        Ok(match self {
            GroupExpr::Trivial => (1, Vec::new()),
            GroupExpr::Sym(k) => {
                let k = (*k).max(1);
                let mut gens = Vec::new();
                if k >= 2 {
                    gens.push(Permutation::transposition(k, 0, 1));
                    gens.push(Permutation::cycle(k, &(0..k).collect::<Vec<_>>()));
                }
                (k, gens)
            }
            GroupExpr::DirectProduct(fs) => {
                let parts = fs.iter().map(GroupExpr::action).collect::<Result<Vec<_>>>()?;
                let degree = parts.iter().map(|p| p.0).sum();
                let mut gens = Vec::new();
                let mut offset = 0;
                for (d, gs) in parts {
                    gens.extend(gs.iter().map(|g| g.embed(degree, offset)));
                    offset += d;
                }
                (degree, gens)
            }
            GroupExpr::Wreath(g, k) => {
                let (d, base) = g.action()?;
                let blocks = vec![d; *k];
                let degree = d * k;
                let mut gens: Vec<Permutation> = base.iter().map(|b| b.embed(degree, 0)).collect();
                if *k >= 2 {
                    gens.push(block_permutation(&blocks, &Permutation::transposition(*k, 0, 1)));
                    gens.push(block_permutation(&blocks, &Permutation::cycle(*k, &(0..*k).collect::<Vec<_>>())));
                }
                (degree, gens)
            }
            GroupExpr::SemidirectZ22 { g1, g2, g3, fixed } => {
                let r = SemidirectZ22::new(g1, g2, g3, fixed)?;
                let mut gens: Vec<Permutation> = Vec::new();
                for c in [0, 4, 6, 8] {
                    for g in r.components[c].generators() {
                        gens.push(g.embed(r.degree, r.offsets[c]));
                    }
                }
                gens.push(r.tau((true, false)));
                gens.push(r.tau((false, true)));
                (r.degree, gens)
            }
            GroupExpr::Opaque(o) => return input(format!("Opaque({o}) has no natural action")),
        })
    }
}

/// Moves block `i` onto block `sigma(i)` identically; blocks are consecutive
/// and must have equal sizes wherever `sigma` moves them.
fn block_permutation(sizes: &[usize], sigma: &Permutation) -> Permutation {
    let offsets: Vec<usize> = sizes
        .iter()
        .scan(0, |acc, &s| {
            let o = *acc;
            *acc += s;
            Some(o)
        })
        .collect();
    let degree = sizes.iter().sum();
    let mut images = vec![0; degree];
    for (i, &s) in sizes.iter().enumerate() {
        let j = sigma.apply(i);
        debug_assert_eq!(s, sizes[j]);
        for t in 0..s {
            images[offsets[i] + t] = offsets[j] + t;
        }
    }
    Permutation::from_images_unchecked(images)
}

impl fmt::Display for GroupExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let factor = |e: &GroupExpr| {
            if e.is_compound() {
                format!("({e})")
            } else {
                e.to_string()
            }
        };
        match self {
            GroupExpr::Trivial => write!(f, "1"),
            GroupExpr::Sym(k) => write!(f, "S{k}"),
            GroupExpr::DirectProduct(fs) => {
                let parts: Vec<String> = fs.iter().map(factor).collect();
                write!(f, "{}", parts.join(" x "))
            }
            GroupExpr::Wreath(g, k) => write!(f, "{} wr S{k}", factor(g)),
            GroupExpr::SemidirectZ22 { g1, g2, g3, fixed } => {
                write!(f, "Z2^2-semidirect[{g1}; {g2}; {g3}; {fixed}]")
            }
            GroupExpr::Opaque(o) => write!(f, "Opaque({o})"),
        }
    }
}

/// Structural order of an expression.
pub fn realize(expr: &GroupExpr) -> BigUint {
    expr.order()
}

/// A concrete `(G1^4 x G2^2 x G3^2 x G4) ⋊ Z2^2` acting on nine consecutive
/// blocks: four copies of G1's domain, two of G2's, two of G3's, one of G4's.
///
/// `Z2^2` permutes the blocks: `(1,0)` swaps G1 copies as `(0 1)(2 3)` and
/// the two G2 copies, `(0,1)` swaps G1 copies as `(0 2)(1 3)` and the two G3
/// copies. G4 is never moved.
#[derive(Clone, Debug)]
pub struct SemidirectZ22 {
    pub components: Vec<PermutationGroup>,
    pub offsets: Vec<usize>,
    pub sizes: Vec<usize>,
    pub degree: usize,
}

/// Element `h` of `Z2^2` written as a pair of bits.
pub type Z22 = (bool, bool);

impl SemidirectZ22 {
    pub fn new(g1: &GroupExpr, g2: &GroupExpr, g3: &GroupExpr, fixed: &GroupExpr) -> Result<Self> {
        let groups = [g1, g2, g3, fixed].map(|g| g.permutation_group());
        let [a, b, c, d] = groups;
        let (a, b, c, d) = (a?, b?, c?, d?);
        let components = vec![
            a.clone(),
            a.clone(),
            a.clone(),
            a,
            b.clone(),
            b,
            c.clone(),
            c,
            d,
        ];
        let sizes: Vec<usize> = components.iter().map(PermutationGroup::degree).collect();
        let mut offsets = Vec::new();
        let mut acc = 0;
        for s in &sizes {
            offsets.push(acc);
            acc += s;
        }
        Ok(SemidirectZ22 {
            components,
            offsets,
            sizes,
            degree: acc,
        })
    }

    /// How `h` permutes the nine component indices.
    pub fn phi_on_components(h: Z22) -> Permutation {
        let mut images: Vec<usize> = (0..9).collect();
        if h.0 {
            images = [1, 0, 3, 2, 5, 4, 6, 7, 8].iter().map(|&i| images[i]).collect();
        }
        if h.1 {
            images = [2, 3, 0, 1, 4, 5, 7, 6, 8].iter().map(|&i| images[i]).collect();
        }
        Permutation::from_images_unchecked(images)
    }

    /// `phi(h)(n)`: component `c` of `n` becomes component `phi(h)(c)`.
    pub fn phi(h: Z22, n: &[Permutation]) -> Vec<Permutation> {
        let p = Self::phi_on_components(h);
        let mut out = n.to_vec();
        for (c, g) in n.iter().enumerate() {
            out[p.apply(c)] = g.clone();
        }
        out
    }

    /// The block permutation realizing `h`.
    pub fn tau(&self, h: Z22) -> Permutation {
        block_permutation(&self.sizes, &Self::phi_on_components(h))
    }

    /// The permutation realizing `(n, h)`: first `h` moves blocks, then `n`
    /// acts inside each block.
    pub fn embed(&self, n: &[Permutation], h: Z22) -> Permutation {
        let mut images: Vec<usize> = (0..self.degree).collect();
        for (c, g) in n.iter().enumerate() {
            for t in 0..self.sizes[c] {
                images[self.offsets[c] + t] = self.offsets[c] + g.apply(t);
            }
        }
        Permutation::from_images_unchecked(images).compose(&self.tau(h))
    }

    /// Product rule `(n1, h1)(n2, h2) = (n1 · phi(h1)(n2), h1 h2)`.
    pub fn multiply(
        n1: &[Permutation],
        h1: Z22,
        n2: &[Permutation],
        h2: Z22,
    ) -> (Vec<Permutation>, Z22) {
        let moved = Self::phi(h1, n2);
        let n: Vec<Permutation> = n1.iter().zip(&moved).map(|(a, b)| a.compose(b)).collect();
        (n, (h1.0 ^ h2.0, h1.1 ^ h2.1))
    }
}

/// A graph with one colour per vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoredGraph {
    pub graph: Graph,
    pub colors: Vec<usize>,
}

/// Canonical data for every node of a modular tree.
struct TreeCanon {
    /// Equal iff the subtrees are isomorphic as typed trees.
    codes: Vec<Vec<u64>>,
    /// Original vertices of each subtree in canonical order; equal-code
    /// subtrees are isomorphic via position-wise matching.
    leaf_order: Vec<Vec<usize>>,
    /// Colour classes of each node's members (ranks of child codes).
    colors: Vec<Vec<usize>>,
}

fn kind_tag(kind: NodeKind) -> u64 {
    match kind {
        NodeKind::Prime => 1,
        NodeKind::Complete => 2,
        NodeKind::Independent => 3,
        NodeKind::Single => 4,
    }
}

fn canonize_tree(t: &ModularTree) -> TreeCanon {
    let count = t.nodes().len();
    let mut codes = vec![Vec::new(); count];
    let mut leaf_order = vec![Vec::new(); count];
    let mut colors = vec![Vec::new(); count];
    // children always have larger ids than their parent
    for id in (0..count).rev() {
        let nd = t.node(id);
        let k = nd.members.len();
        let mut code = vec![kind_tag(nd.kind), u64::from(nd.is_inner()), k as u64];
        let cols: Vec<usize> = if nd.is_inner() {
            compress(&nd.children.iter().map(|&c| codes[c].clone()).collect::<Vec<_>>())
        } else {
            vec![0; k]
        };
        let canon = canonical_form(&Relation::from_graph(&nd.graph), &cols);
        let mut order = vec![0; k];
        for (v, &p) in canon.labeling.iter().enumerate() {
            order[p] = v;
        }
        if nd.is_inner() {
            let mut distinct: Vec<&Vec<u64>> = nd.children.iter().map(|&c| &codes[c]).collect();
            distinct.sort();
            distinct.dedup();
            code.push(distinct.len() as u64);
            for d in distinct {
                code.push(d.len() as u64);
                code.extend(d);
            }
            leaf_order[id] = order.iter().flat_map(|&i| leaf_order[nd.children[i]].clone()).collect();
        } else {
            leaf_order[id] = order.iter().map(|&i| nd.members[i]).collect();
        }
        code.extend(canon.code);
        codes[id] = code;
        colors[id] = cols;
    }
    TreeCanon {
        codes,
        leaf_order,
        colors,
    }
}

/// The root node graph with each member coloured by the isomorphism class of
/// the subtree below it (all one colour when the root is a leaf node).
pub fn subtree_isomorphism_classes(t: &ModularTree) -> ColoredGraph {
    let tc = canonize_tree(t);
    ColoredGraph {
        graph: t.root().graph.clone(),
        colors: tc.colors[0].clone(),
    }
}

/// Canonical code of the modular tree; equal iff the trees are isomorphic.
pub fn tree_code(t: &ModularTree) -> Vec<u64> {
    canonize_tree(t).codes[0].clone()
}

/// Colour-preserving automorphisms of `r`.
pub fn color_preserving_aut(r: &ColoredGraph, oracle: &Oracle) -> Result<PermutationGroup> {
    oracle.colored_automorphisms(&r.graph, &r.colors)
}

/// Which assembly rule produced a node's group.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AssemblyCase {
    /// `K_1`.
    Single,
    /// Complete or independent node: a product of wreath products.
    Degenerate,
    /// Prime node without colour-preserving symmetry: plain product.
    PrimeRigid,
    /// Prime node whose colour-preserving group is `Z2`.
    PrimeInvolution,
    /// Prime node whose colour-preserving group is `Z2^2` with at most two
    /// stabilizer types among orbits of size two.
    PrimeKlein,
    /// Prime node whose colour-preserving group falls outside the grammar.
    Opaque,
}

#[derive(Clone, Debug)]
pub struct NodeGroup {
    pub node: usize,
    pub expr: GroupExpr,
    pub case: AssemblyCase,
    /// Order of the colour-preserving automorphism group of the node.
    pub node_aut_order: usize,
}

/// `Aut(T)` as an expression and as a concrete group on the original
/// vertices.
#[derive(Clone, Debug)]
pub struct AutTree {
    pub expr: GroupExpr,
    pub group: PermutationGroup,
    pub nodes: Vec<NodeGroup>,
}

fn product(fs: impl IntoIterator<Item = GroupExpr>) -> GroupExpr {
    GroupExpr::DirectProduct(fs.into_iter().collect()).normalize()
}

/// Orbits of `h` on member indices with the non-identity elements fixing
/// each orbit pointwise.
fn orbit_stabilizers(h: &PermutationGroup) -> Vec<(Vec<usize>, Vec<Permutation>)> {
    h.orbits()
        .into_iter()
        .map(|orbit| {
            let stab = h
                .elements()
                .iter()
                .filter(|g| !g.is_identity() && orbit.iter().all(|&x| g.apply(x) == x))
                .cloned()
                .collect();
            (orbit, stab)
        })
        .collect()
}

fn prime_expr(h: &PermutationGroup, child: &[GroupExpr], subtree_order: impl Fn() -> BigUint) -> (GroupExpr, AssemblyCase) {
    let order = h.order_usize();
    let opaque = || (GroupExpr::Opaque(subtree_order()), AssemblyCase::Opaque);
    if order == 1 {
        return (product(child.iter().cloned()), AssemblyCase::PrimeRigid);
    }
    if h.elements().iter().any(|g| g.order() > 2) || order > 4 {
        return opaque();
    }
    let orbits = orbit_stabilizers(h);
    let reps = |size: usize| -> Vec<(usize, Vec<Permutation>)> {
        orbits
            .iter()
            .filter(|(o, _)| o.len() == size)
            .map(|(o, s)| (o[0], s.clone()))
            .collect()
    };
    let fixed = product(reps(1).into_iter().map(|(i, _)| child[i].clone()));
    if order == 2 {
        let swapped = product(reps(2).into_iter().map(|(i, _)| child[i].clone()));
        return (
            product([GroupExpr::wreath(swapped, 2).normalize(), fixed]),
            AssemblyCase::PrimeInvolution,
        );
    }
    let g1 = product(reps(4).into_iter().map(|(i, _)| child[i].clone()));
    let mut by_type: BTreeMap<Permutation, Vec<usize>> = BTreeMap::new();
    for (i, stab) in reps(2) {
        by_type.entry(stab[0].clone()).or_default().push(i);
    }
    if by_type.len() > 2 {
        return opaque();
    }
    let mut types: Vec<GroupExpr> = by_type
        .values()
        .map(|idx| product(idx.iter().map(|&i| child[i].clone())))
        .collect();
    types.sort_by_cached_key(|g| (g.order(), g.to_string()));
    types.resize(2, GroupExpr::Trivial);
    let g3 = types.pop().unwrap();
    let g2 = types.pop().unwrap();
    let (g2, g3) = if g2.is_trivial() { (g3, g2) } else { (g2, g3) };
    (GroupExpr::semidirect(g1, g2, g3, fixed), AssemblyCase::PrimeKlein)
}

/// Builds `Aut(T)` bottom-up: children's groups plus lifts of the node's
/// colour-preserving automorphisms, moving isomorphic subtrees onto each
/// other along their canonical leaf orders.
pub fn aut_tree(t: &ModularTree) -> Result<AutTree> {
    aut_tree_with(t, &Oracle::default())
}

pub fn aut_tree_with(t: &ModularTree, oracle: &Oracle) -> Result<AutTree> {
    let n = t.original_count();
    let tc = canonize_tree(t);
    let count = t.nodes().len();
    let mut exprs = vec![GroupExpr::Trivial; count];
    let mut gens: Vec<Vec<Permutation>> = vec![Vec::new(); count];
    let mut reports = Vec::with_capacity(count);
    for id in (0..count).rev() {
        let nd = t.node(id);
        let colors = &tc.colors[id];
        let k = nd.members.len();
        let lift = |sigma: &Permutation| -> Permutation {
            let mut images: Vec<usize> = (0..n).collect();
            for i in 0..k {
                let j = sigma.apply(i);
                if nd.is_inner() {
                    let (from, to) = (&tc.leaf_order[nd.children[i]], &tc.leaf_order[nd.children[j]]);
                    for (&a, &b) in from.iter().zip(to) {
                        images[a] = b;
                    }
                } else {
                    images[nd.members[i]] = nd.members[j];
                }
            }
            Permutation::from_images_unchecked(images)
        };
        let child_exprs: Vec<GroupExpr> = if nd.is_inner() {
            nd.children.iter().map(|&c| exprs[c].clone()).collect()
        } else {
            vec![GroupExpr::Trivial; k]
        };
        let mut node_gens: Vec<Permutation> = nd.children.iter().flat_map(|&c| gens[c].clone()).collect();
        let (expr, case, node_aut_order) = match nd.kind {
            NodeKind::Single => (GroupExpr::Trivial, AssemblyCase::Single, 1),
            NodeKind::Complete | NodeKind::Independent => {
                let mut classes: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
                for (i, &c) in colors.iter().enumerate() {
                    classes.entry(c).or_default().push(i);
                }
                let mut order = 1usize;
                let mut factors = Vec::new();
                for members in classes.values() {
                    for w in members.windows(2) {
                        node_gens.push(lift(&Permutation::transposition(k, w[0], w[1])));
                    }
                    order = order.saturating_mul((1..=members.len()).product());
                    factors.push(GroupExpr::wreath(child_exprs[members[0]].clone(), members.len()));
                }
                (product(factors), AssemblyCase::Degenerate, order)
            }
            NodeKind::Prime => {
                let h = oracle.colored_automorphisms(&nd.graph, colors)?;
                node_gens.extend(h.generators().iter().map(&lift));
                let subtree_order = || PermutationGroup::from_generators(n, node_gens.clone()).order();
                let (expr, case) = prime_expr(&h, &child_exprs, subtree_order);
                (expr, case, h.order_usize())
            }
        };
        reports.push(NodeGroup {
            node: id,
            expr: expr.clone(),
            case,
            node_aut_order,
        });
        exprs[id] = expr;
        gens[id] = node_gens;
    }
    reports.reverse();
    Ok(AutTree {
        expr: exprs[0].clone(),
        group: PermutationGroup::from_generators(n, std::mem::take(&mut gens[0])),
        nodes: reports,
    })
}

/// Shortcut: decompose `g` and assemble its automorphism group.
pub fn automorphism_group(g: &Graph) -> Result<AutTree> {
    aut_tree(&ModularTree::build(g)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::nonisomorphic_graphs;
    use crate::modular::build_modular_tree;
    use crate::oracle::{brute_force_aut, brute_force_iso};

    fn aut_of(g: &Graph) -> AutTree {
        aut_tree(&build_modular_tree(g).unwrap()).unwrap()
    }

    #[test]
    fn realize_examples() {
        assert_eq!(realize(&GroupExpr::wreath(GroupExpr::Sym(2), 3)), BigUint::from(48u32));
        let z = GroupExpr::semidirect(GroupExpr::Trivial, GroupExpr::Trivial, GroupExpr::Trivial, GroupExpr::Trivial);
        assert_eq!(realize(&z), BigUint::from(4u32));
        let p = GroupExpr::DirectProduct(vec![GroupExpr::Sym(3), GroupExpr::Sym(2)]);
        assert_eq!(realize(&p), BigUint::from(12u32));
    }

    #[test]
    fn normalization_and_printing() {
        let e = GroupExpr::DirectProduct(vec![
            GroupExpr::Sym(2),
            GroupExpr::Trivial,
            GroupExpr::DirectProduct(vec![GroupExpr::wreath(GroupExpr::Sym(3), 2), GroupExpr::Sym(1)]),
        ])
        .normalize();
        assert_eq!(e.to_string(), "S2 x (S3 wr S2)");
        assert_eq!(GroupExpr::wreath(GroupExpr::Trivial, 4).normalize(), GroupExpr::Sym(4));
        assert_eq!(GroupExpr::wreath(GroupExpr::Sym(3), 1).normalize(), GroupExpr::Sym(3));
        assert_eq!(GroupExpr::DirectProduct(vec![]).normalize().to_string(), "1");
        let z = GroupExpr::semidirect(GroupExpr::Sym(2), GroupExpr::Trivial, GroupExpr::Trivial, GroupExpr::Trivial);
        assert_eq!(z.to_string(), "Z2^2-semidirect[S2; 1; 1; 1]");
        assert_eq!(z.to_json()["type"], "semidirect_z2z2");
    }

    #[test]
    fn natural_actions_have_structural_orders() {
        let exprs = [
            GroupExpr::Sym(4),
            GroupExpr::wreath(GroupExpr::Sym(2), 3),
            GroupExpr::wreath(GroupExpr::wreath(GroupExpr::Sym(2), 2), 2),
            GroupExpr::DirectProduct(vec![GroupExpr::Sym(3), GroupExpr::wreath(GroupExpr::Sym(2), 2)]),
            GroupExpr::semidirect(GroupExpr::Sym(2), GroupExpr::Sym(2), GroupExpr::Trivial, GroupExpr::Sym(3)),
            GroupExpr::semidirect(GroupExpr::Trivial, GroupExpr::Trivial, GroupExpr::Trivial, GroupExpr::Trivial),
        ];
        for e in exprs {
            assert_eq!(e.permutation_group().unwrap().order(), e.order(), "{e}");
        }
        assert!(GroupExpr::Opaque(BigUint::from(3u32)).permutation_group().is_err());
    }

    fn component_elements(g: &PermutationGroup) -> Vec<Permutation> {
        g.elements().to_vec()
    }

    #[test]
    fn semidirect_product_rule_on_all_pairs() {
        let r = SemidirectZ22::new(&GroupExpr::Sym(2), &GroupExpr::Sym(2), &GroupExpr::Sym(2), &GroupExpr::Trivial).unwrap();
        // every element of N = G1^4 x G2^2 x G3^2 x G4
        let mut all_n: Vec<Vec<Permutation>> = vec![Vec::new()];
        for c in &r.components {
            let choices = component_elements(c);
            all_n = all_n
                .into_iter()
                .flat_map(|prefix| {
                    choices.iter().map(move |g| {
                        let mut p = prefix.clone();
                        p.push(g.clone());
                        p
                    })
                })
                .collect();
        }
        assert_eq!(all_n.len(), 256);
        let hs = [(false, false), (true, false), (false, true), (true, true)];
        let sample: Vec<&Vec<Permutation>> = all_n.iter().step_by(7).collect();
        for n1 in &sample {
            for &h1 in &hs {
                for n2 in &sample {
                    for &h2 in &hs {
                        let (n, h) = SemidirectZ22::multiply(n1, h1, n2, h2);
                        assert_eq!(r.embed(n1, h1).compose(&r.embed(n2, h2)), r.embed(&n, h));
                    }
                }
            }
        }
        let group = GroupExpr::semidirect(GroupExpr::Sym(2), GroupExpr::Sym(2), GroupExpr::Sym(2), GroupExpr::Trivial)
            .permutation_group()
            .unwrap();
        assert_eq!(group.order(), BigUint::from(1024u32));
    }

    #[test]
    fn phi_moves_the_stated_components() {
        let r = SemidirectZ22::new(&GroupExpr::Sym(2), &GroupExpr::Sym(2), &GroupExpr::Sym(2), &GroupExpr::Sym(2)).unwrap();
        let swap = Permutation::transposition(2, 0, 1);
        let id = Permutation::identity(2);
        for c in 0..9 {
            let mut n = vec![id.clone(); 9];
            n[c] = swap.clone();
            let elem = r.embed(&n, (false, false));
            for (h, images) in [
                ((true, false), [1, 0, 3, 2, 5, 4, 6, 7, 8]),
                ((false, true), [2, 3, 0, 1, 4, 5, 7, 6, 8]),
            ] {
                let tau = r.tau(h);
                let conj = tau.compose(&elem).compose(&tau.inverse());
                let mut expected = vec![id.clone(); 9];
                expected[images[c]] = swap.clone();
                assert_eq!(conj, r.embed(&expected, (false, false)), "component {c}, h = {h:?}");
            }
        }
    }

    #[test]
    fn coloring_examples() {
        let two_k2 = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        let c = subtree_isomorphism_classes(&build_modular_tree(&two_k2).unwrap());
        assert_eq!(c.colors[0], c.colors[1]);
        let k1k2 = Graph::new(3, &[(1, 2)]).unwrap();
        let c = subtree_isomorphism_classes(&build_modular_tree(&k1k2).unwrap());
        assert_ne!(c.colors[0], c.colors[1]);
        let c = subtree_isomorphism_classes(&build_modular_tree(&Graph::path(3)).unwrap());
        assert_eq!(c.graph, Graph::complete(2));
        assert_ne!(c.colors[0], c.colors[1]);
    }

    #[test]
    fn colors_match_module_isomorphism() {
        for g in nonisomorphic_graphs(6) {
            let t = build_modular_tree(&g).unwrap();
            let c = subtree_isomorphism_classes(&t);
            let root = t.root();
            for i in 0..root.children.len() {
                for j in 0..root.children.len() {
                    let a = g.induced(&t.node(root.children[i]).leaves);
                    let b = g.induced(&t.node(root.children[j]).leaves);
                    let iso = brute_force_iso(&a, &b).unwrap().is_some();
                    assert_eq!(c.colors[i] == c.colors[j], iso);
                }
            }
        }
    }

    #[test]
    fn color_preserving_examples() {
        let oracle = Oracle::default();
        let k2 = |colors: Vec<usize>| ColoredGraph {
            graph: Graph::complete(2),
            colors,
        };
        assert_eq!(color_preserving_aut(&k2(vec![0, 1]), &oracle).unwrap().order_usize(), 1);
        assert_eq!(color_preserving_aut(&k2(vec![0, 0]), &oracle).unwrap().order_usize(), 2);
        let c4 = ColoredGraph {
            graph: Graph::cycle(4),
            colors: vec![0, 1, 0, 1],
        };
        assert_eq!(color_preserving_aut(&c4, &oracle).unwrap().order_usize(), 4);
    }

    #[test]
    fn aut_tree_examples() {
        let a = aut_of(&Graph::complete(3));
        assert_eq!(a.expr, GroupExpr::Sym(3));
        assert_eq!(a.group.order_usize(), 6);

        let a = aut_of(&Graph::new(4, &[(0, 1), (2, 3)]).unwrap());
        assert_eq!(a.expr.to_string(), "S2 wr S2");
        assert_eq!(a.group.order_usize(), 8);

        let a = aut_of(&Graph::path(4));
        assert_eq!(a.group.order_usize(), 2);
        assert_eq!(a.expr.order(), BigUint::from(2u32));
        assert_eq!(a.nodes[0].case, AssemblyCase::PrimeInvolution);
    }

    #[test]
    fn aut_tree_matches_oracle_up_to_six() {
        for n in 1..=6 {
            for g in nonisomorphic_graphs(n) {
                let a = aut_of(&g);
                let oracle = brute_force_aut(&g).unwrap();
                assert_eq!(a.group.element_set(), oracle.element_set(), "{g:?}");
                assert_eq!(a.expr.order(), a.group.order(), "{g:?}: {}", a.expr);
            }
        }
    }

    #[test]
    fn tree_codes_identify_isomorphic_trees() {
        let p = Permutation::from_images(vec![4, 2, 0, 1, 3]).unwrap();
        for g in nonisomorphic_graphs(5) {
            let t1 = build_modular_tree(&g).unwrap();
            let t2 = build_modular_tree(&g.relabel(&p)).unwrap();
            assert_eq!(tree_code(&t1), tree_code(&t2));
            assert!(t1.is_isomorphic_to(&t2));
        }
    }
}
