//! Colour refinement, canonical forms and backtracking isomorphism search.
//!
//! Everything here works on a binary relation given as a dense matrix, so the
//! same code serves undirected graphs and directed ones (posets). Vertex
//! colours are caller supplied and always respected.

/// A binary relation on `0..n`, stored densely, plus neighbour lists of its
/// symmetric closure.
pub(crate) struct Relation {
    n: usize,
    m: Vec<bool>,
    symmetric: bool,
    out: Vec<Vec<usize>>,
    inc: Vec<Vec<usize>>,
    sym: Vec<Vec<usize>>,
}

impl Relation {
    pub(crate) fn new(n: usize, m: Vec<bool>) -> Self {
        assert_eq!(m.len(), n * n);
        let symmetric = (0..n).all(|i| (0..n).all(|j| m[i * n + j] == m[j * n + i]));
        let out: Vec<Vec<usize>> = (0..n).map(|i| (0..n).filter(|&j| m[i * n + j]).collect()).collect();
        let inc: Vec<Vec<usize>> = (0..n).map(|j| (0..n).filter(|&i| m[i * n + j]).collect()).collect();
        let sym = (0..n)
            .map(|i| (0..n).filter(|&j| i != j && (m[i * n + j] || m[j * n + i])).collect())
            .collect();
        Relation {
            n,
            m,
            symmetric,
            out,
            inc,
            sym,
        }
    }

    pub(crate) fn from_graph(g: &crate::graph::Graph) -> Self {
        Self::new(g.n(), g.matrix().to_vec())
    }

    #[inline]
    fn get(&self, i: usize, j: usize) -> bool {
        self.m[i * self.n + j]
    }

    fn disjoint_union(&self, other: &Relation) -> Relation {
        let n = self.n + other.n;
        let mut m = vec![false; n * n];
        for i in 0..self.n {
            for j in 0..self.n {
                m[i * n + j] = self.get(i, j);
            }
        }
        for i in 0..other.n {
            for j in 0..other.n {
                m[(i + self.n) * n + j + self.n] = other.get(i, j);
            }
        }
        Relation::new(n, m)
    }
}

/// Replaces colour values by their ranks, preserving order.
pub(crate) fn compress<T: Ord + Clone>(values: &[T]) -> Vec<usize> {
    let mut sorted: Vec<T> = values.to_vec();
    sorted.sort();
    sorted.dedup();
    values
        .iter()
        .map(|v| sorted.binary_search(v).unwrap())
        .collect()
}

/// Refines an ordered colouring to the coarsest equitable one below it.
/// New colours are ranks of (old colour, neighbour counts per colour), so
/// the result is invariant under relabelling.
pub(crate) fn refine(rel: &Relation, colors: &[usize]) -> Vec<usize> {
    let mut colors = compress(colors);
    let mut k = colors.iter().max().map_or(0, |&c| c + 1);
    loop {
        let sigs: Vec<(usize, Vec<u32>)> = (0..rel.n)
            .map(|v| {
                let width = if rel.symmetric { k } else { 2 * k };
                let mut counts = vec![0u32; width];
                for &w in &rel.out[v] {
                    counts[colors[w]] += 1;
                }
                if !rel.symmetric {
                    for &w in &rel.inc[v] {
                        counts[k + colors[w]] += 1;
                    }
                }
                (colors[v], counts)
            })
            .collect();
        let next = compress(&sigs);
        let nk = next.iter().max().map_or(0, |&c| c + 1);
        colors = next;
        if nk == k {
            return colors;
        }
        k = nk;
    }
}

fn individualize(colors: &[usize], v: usize) -> Vec<usize> {
    let split: Vec<usize> = colors
        .iter()
        .enumerate()
        .map(|(u, &c)| 2 * c + usize::from(u != v))
        .collect();
    compress(&split)
}

/// Canonical labelling of a coloured relation.
#[derive(Clone, Debug)]
pub(crate) struct Canon {
    /// `labeling[v]` is the canonical position of vertex `v`.
    pub labeling: Vec<usize>,
    /// Equal codes iff the coloured relations are isomorphic.
    pub code: Vec<u64>,
}

struct CanonSearch<'a> {
    rel: &'a Relation,
    initial: Vec<usize>,
    best: Option<Canon>,
    autos: Vec<Vec<usize>>,
}

impl CanonSearch<'_> {
    fn leaf_code(&self, labeling: &[usize]) -> Vec<u64> {
        let n = self.rel.n;
        let mut order = vec![0; n];
        for (v, &p) in labeling.iter().enumerate() {
            order[p] = v;
        }
        let mut code: Vec<u64> = order.iter().map(|&v| self.initial[v] as u64).collect();
        let mut word = 0u64;
        let mut bits = 0;
        for i in 0..n {
            let start = if self.rel.symmetric { i + 1 } else { 0 };
            for j in start..n {
                word = (word << 1) | u64::from(self.rel.get(order[i], order[j]));
                bits += 1;
                if bits == 64 {
                    code.push(word);
                    word = 0;
                    bits = 0;
                }
            }
        }
        if bits > 0 {
            code.push(word << (64 - bits));
        }
        code
    }

    fn same_orbit_as_tried(&self, v: usize, tried: &[usize], path: &[usize]) -> bool {
        let n = self.rel.n;
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            p[x] = r;
            r
        }
        let mut any = false;
        for a in &self.autos {
            if path.iter().any(|&x| a[x] != x) {
                continue;
            }
            any = true;
            for (x, &ax) in a.iter().enumerate() {
                let (r1, r2) = (find(&mut parent, x), find(&mut parent, ax));
                if r1 != r2 {
                    parent[r1] = r2;
                }
            }
        }
        if !any {
            return false;
        }
        let rv = find(&mut parent, v);
        tried.iter().any(|&t| find(&mut parent, t) == rv)
    }

    fn search(&mut self, colors: Vec<usize>, path: &mut Vec<usize>) {
        let n = self.rel.n;
        let k = colors.iter().max().map_or(0, |&c| c + 1);
        if k == n {
            let code = self.leaf_code(&colors);
            match &self.best {
                Some(b) if code > b.code => {}
                Some(b) if code == b.code => {
                    let mut inv = vec![0; n];
                    for (v, &p) in b.labeling.iter().enumerate() {
                        inv[p] = v;
                    }
                    let auto: Vec<usize> = colors.iter().map(|&p| inv[p]).collect();
                    if auto.iter().enumerate().any(|(i, &x)| i != x) {
                        self.autos.push(auto);
                    }
                }
                _ => {
                    self.best = Some(Canon {
                        labeling: colors,
                        code,
                    })
                }
            }
            return;
        }
        let mut size = vec![0usize; k];
        for &c in &colors {
            size[c] += 1;
        }
        let target = (0..k).find(|&c| size[c] > 1).unwrap();
        let cell: Vec<usize> = (0..n).filter(|&v| colors[v] == target).collect();
        let mut tried = Vec::new();
        for v in cell {
            if !tried.is_empty() && self.same_orbit_as_tried(v, &tried, path) {
                continue;
            }
            path.push(v);
            let next = refine(self.rel, &individualize(&colors, v));
            self.search(next, path);
            path.pop();
            tried.push(v);
        }
    }
}

/// Canonical form by individualisation–refinement with automorphism pruning.
pub(crate) fn canonical_form(rel: &Relation, colors: &[usize]) -> Canon {
    assert_eq!(colors.len(), rel.n);
    if rel.n == 0 {
        return Canon {
            labeling: Vec::new(),
            code: Vec::new(),
        };
    }
    let initial = compress(colors);
    let mut s = CanonSearch {
        rel,
        initial: colors.to_vec(),
        best: None,
        autos: Vec::new(),
    };
    let start = refine(rel, &initial);
    s.search(start, &mut Vec::new());
    s.best.unwrap()
}

/// Canonical code of a plain graph.
pub fn graph_code(g: &crate::graph::Graph) -> Vec<u64> {
    let mut code = vec![g.n() as u64];
    code.extend(canonical_form(&Relation::from_graph(g), &vec![0; g.n()]).code);
    code
}

/// Canonically relabelled copy of a graph.
pub fn canonical_graph(g: &crate::graph::Graph) -> crate::graph::Graph {
    let c = canonical_form(&Relation::from_graph(g), &vec![0; g.n()]);
    crate::graph::Graph::from_edges(
        g.n(),
        g.edges().into_iter().map(|(u, v)| (c.labeling[u], c.labeling[v])),
    )
}

/// Enumerates colour-preserving isomorphisms `a -> b` by backtracking.
/// `visit` receives each map (indexed by vertices of `a`) and returns
/// `false` to stop the search.
pub(crate) fn for_each_isomorphism(
    a: &Relation,
    ca: &[usize],
    b: &Relation,
    cb: &[usize],
    visit: &mut dyn FnMut(&[usize]) -> bool,
) {
    if a.n != b.n {
        return;
    }
    let n = a.n;
    if n == 0 {
        visit(&[]);
        return;
    }
    // joint refinement keeps colour names comparable across both sides
    let union = a.disjoint_union(b);
    let mut init: Vec<(usize, usize)> = Vec::with_capacity(2 * n);
    init.extend(ca.iter().map(|&c| (c, 0)));
    init.extend(cb.iter().map(|&c| (c, 0)));
    let joint = refine(&union, &compress(&init));
    let (ra, rb) = joint.split_at(n);
    let mut hist_a = ra.to_vec();
    let mut hist_b = rb.to_vec();
    hist_a.sort_unstable();
    hist_b.sort_unstable();
    if hist_a != hist_b {
        return;
    }
    let mut class_size = vec![0usize; 2 * n];
    for &c in ra {
        class_size[c] += 1;
    }

    // search order: grow a connected frontier from the most constrained vertex
    let mut order = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    let mut links = vec![0usize; n];
    while order.len() < n {
        let v = (0..n)
            .filter(|&v| !placed[v])
            .min_by_key(|&v| (std::cmp::Reverse(links[v]), class_size[ra[v]], v))
            .unwrap();
        placed[v] = true;
        order.push(v);
        for &w in &a.sym[v] {
            links[w] += 1;
        }
    }
    let anchor: Vec<Option<usize>> = order
        .iter()
        .enumerate()
        .map(|(d, &v)| order[..d].iter().copied().find(|&u| a.sym[v].contains(&u)))
        .collect();

    struct St<'a> {
        a: &'a Relation,
        b: &'a Relation,
        ra: &'a [usize],
        rb: &'a [usize],
        order: Vec<usize>,
        anchor: Vec<Option<usize>>,
        map: Vec<usize>,
        used: Vec<bool>,
        stop: bool,
    }

    fn go(st: &mut St, d: usize, visit: &mut dyn FnMut(&[usize]) -> bool) {
        let n = st.a.n;
        if d == n {
            if !visit(&st.map) {
                st.stop = true;
            }
            return;
        }
        let v = st.order[d];
        let candidates: Vec<usize> = match st.anchor[d] {
            Some(u) => st.b.sym[st.map[u]].clone(),
            None => (0..n).collect(),
        };
        for w in candidates {
            if st.used[w] || st.rb[w] != st.ra[v] {
                continue;
            }
            let consistent = st.order[..d].iter().all(|&x| {
                let y = st.map[x];
                st.a.get(x, v) == st.b.get(y, w) && st.a.get(v, x) == st.b.get(w, y)
            });
            if !consistent {
                continue;
            }
            st.map[v] = w;
            st.used[w] = true;
            go(st, d + 1, visit);
            st.used[w] = false;
            if st.stop {
                return;
            }
        }
    }

    let mut st = St {
        a,
        b,
        ra,
        rb,
        order,
        anchor,
        map: vec![usize::MAX; n],
        used: vec![false; n],
        stop: false,
    };
    go(&mut st, 0, visit);
}
