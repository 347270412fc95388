//! Weight-preserving graph automorphisms by equitable refinement and
//! individualization.
//!
//! A node of the search tree is an ordered partition of the vertices, refined
//! until every vertex in a cell sees the same multiset of `(cell, weight)`
//! among its neighbours. Cells are split in place and the pieces ordered by
//! signature, so refinement commutes with isomorphisms. Leaves are discrete
//! partitions, read as vertex orderings.

use num_bigint::BigInt;
use num_traits::One;

use super::perm::{all_permutations, Perm, PermutationGroup};
use crate::graph::LabeledGraph;

type Partition = Vec<Vec<usize>>;

fn refine(g: &LabeledGraph, mut cells: Partition) -> Partition {
    let n = g.vertex_count();
    loop {
        let mut cell_of = vec![0usize; n];
        for (i, c) in cells.iter().enumerate() {
            for &v in c {
                cell_of[v] = i;
            }
        }
        let mut next: Partition = Vec::with_capacity(cells.len());
        for c in &cells {
            if c.len() == 1 {
                next.push(c.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<(usize, u64)>, usize)> = c
                .iter()
                .map(|&v| {
                    let mut sig: Vec<(usize, u64)> = g.neighbours(v).map(|(u, w)| (cell_of[u], w)).collect();
                    sig.sort_unstable();
                    (sig, v)
                })
                .collect();
            keyed.sort();
            let mut start = 0;
            for k in 1..=keyed.len() {
                if k == keyed.len() || keyed[k].0 != keyed[start].0 {
                    let mut piece: Vec<usize> = keyed[start..k].iter().map(|(_, v)| *v).collect();
                    piece.sort_unstable();
                    next.push(piece);
                    start = k;
                }
            }
        }
        if next.len() == cells.len() {
            return next;
        }
        cells = next;
    }
}

fn individualize(g: &LabeledGraph, p: &Partition, cell: usize, v: usize) -> Partition {
    let mut out = Vec::with_capacity(p.len() + 1);
    for (i, c) in p.iter().enumerate() {
        if i == cell {
            out.push(vec![v]);
            out.push(c.iter().copied().filter(|&x| x != v).collect());
        } else {
            out.push(c.clone());
        }
    }
    refine(g, out)
}

fn target_cell(p: &Partition) -> Option<usize> {
    p.iter().position(|c| c.len() > 1)
}

/// Cell sizes, an isomorphism invariant of a node.
fn shape(p: &Partition) -> Vec<usize> {
    p.iter().map(|c| c.len()).collect()
}

fn leaf_order(p: &Partition) -> Vec<usize> {
    p.iter().map(|c| c[0]).collect()
}

/// The permutation sending `from[k]` to `to[k]`, when it preserves weights.
fn leaf_map(g: &LabeledGraph, from: &[usize], to: &[usize]) -> Option<Perm> {
    let mut img = vec![0usize; from.len()];
    for (a, b) in from.iter().zip(to) {
        img[*a] = *b;
    }
    let p = Perm::from_images(img).ok()?;
    is_automorphism(g, &p).then_some(p)
}

/// Whether `p` maps every weighted edge onto a weighted edge of equal weight.
pub fn is_automorphism(g: &LabeledGraph, p: &Perm) -> bool {
    p.degree() == g.vertex_count()
        && g.edges().iter().all(|&(u, v, w)| g.weight(p.apply(u), p.apply(v)) == w)
}

/// Result of the search: the group and the orbit-stabilizer data along the
/// first path of the tree.
#[derive(Clone, Debug)]
pub struct AutomorphismSearch {
    pub group: PermutationGroup,
    /// Individualized vertices along the first path.
    pub base: Vec<usize>,
    /// Orbit length of each base vertex under its predecessors' stabilizer.
    pub orbit_lengths: Vec<usize>,
}

impl AutomorphismSearch {
    pub fn order(&self) -> BigInt {
        self.orbit_lengths
            .iter()
            .fold(BigInt::one(), |a, &b| a * BigInt::from(b))
    }
}

/// Weight-preserving automorphisms. Generators are found level by level
/// along the first path of the search tree, deepest first, so the group order
/// is the product of the basic orbit lengths. The order is cross-checked
/// against Schreier-Sims on the generators found.
pub fn graph_automorphisms(g: &LabeledGraph) -> AutomorphismSearch {
    let n = g.vertex_count();
    let root = refine(g, vec![(0..n).collect()]);

    // first path
    let mut path = vec![root];
    let mut cells = Vec::new();
    let mut base = Vec::new();
    while let Some(t) = target_cell(path.last().expect("nonempty path")) {
        let node = path.last().expect("nonempty path");
        let v = node[t][0];
        cells.push(t);
        base.push(v);
        let child = individualize(g, node, t, v);
        path.push(child);
    }
    let first_leaf = leaf_order(path.last().expect("nonempty path"));
    let shapes: Vec<Vec<usize>> = path.iter().map(shape).collect();

    let mut gens: Vec<Perm> = Vec::new();
    let mut orbit_lengths = vec![0usize; base.len()];
    for level in (0..base.len()).rev() {
        let node = &path[level];
        let cell = &node[cells[level]];
        // every generator found so far fixes base[..level]
        let mut orbit = orbit_of(base[level], &gens, n);
        for &w in cell {
            if orbit[w] {
                continue;
            }
            let child = individualize(g, node, cells[level], w);
            if let Some(p) = find_equivalent(g, &child, level + 1, &shapes, &first_leaf) {
                gens.push(p);
                orbit = orbit_of(base[level], &gens, n);
            }
        }
        orbit_lengths[level] = orbit.iter().filter(|&&b| b).count();
    }

    let group = PermutationGroup::new(n, gens).expect("generators have the graph's degree");
    let search = AutomorphismSearch {
        group,
        base,
        orbit_lengths,
    };
    debug_assert_eq!(search.group.order(), search.order());
    search
}

fn orbit_of(v: usize, gens: &[Perm], n: usize) -> Vec<bool> {
    let mut seen = vec![false; n];
    seen[v] = true;
    let mut stack = vec![v];
    while let Some(x) = stack.pop() {
        for g in gens {
            let y = g.apply(x);
            if !seen[y] {
                seen[y] = true;
                stack.push(y);
            }
        }
    }
    seen
}

/// Depth-first search below `node` for a leaf equivalent to `first_leaf`.
/// Nodes whose shape differs from the first path at the same depth cannot
/// lead to one.
fn find_equivalent(
    g: &LabeledGraph,
    node: &Partition,
    depth: usize,
    shapes: &[Vec<usize>],
    first_leaf: &[usize],
) -> Option<Perm> {
    if shapes.get(depth) != Some(&shape(node)) {
        return None;
    }
    match target_cell(node) {
        None => leaf_map(g, first_leaf, &leaf_order(node)),
        Some(t) => node[t].iter().find_map(|&w| {
            let child = individualize(g, node, t, w);
            find_equivalent(g, &child, depth + 1, shapes, first_leaf)
        }),
    }
}

/// Sorted relabelled edge list, minimized over all leaves of the search tree.
/// Two graphs are isomorphic exactly when their certificates agree.
pub fn canonical_certificate(g: &LabeledGraph) -> Vec<(usize, usize, u64)> {
    let n = g.vertex_count();
    let root = refine(g, vec![(0..n).collect()]);
    let edges = g.edges();
    let mut best: Option<Vec<(usize, usize, u64)>> = None;
    let mut stack = vec![root];
    while let Some(node) = stack.pop() {
        match target_cell(&node) {
            None => {
                let order = leaf_order(&node);
                let mut pos = vec![0usize; n];
                for (k, &v) in order.iter().enumerate() {
                    pos[v] = k;
                }
                let mut relabelled: Vec<(usize, usize, u64)> = edges
                    .iter()
                    .map(|&(u, v, w)| {
                        let (a, b) = (pos[u], pos[v]);
                        (a.min(b), a.max(b), w)
                    })
                    .collect();
                relabelled.sort_unstable();
                if best.as_ref().is_none_or(|b| relabelled < *b) {
                    best = Some(relabelled);
                }
            }
            Some(t) => {
                for &w in node[t].iter().rev() {
                    stack.push(individualize(g, &node, t, w));
                }
            }
        }
    }
    let mut cert = best.unwrap_or_default();
    // vertex count disambiguates isolated vertices
    cert.insert(0, (n, n, 0));
    cert
}

/// Every weight-preserving permutation, by filtering all `n!` candidates.
pub fn brute_force_automorphisms(g: &LabeledGraph) -> Vec<Perm> {
    all_permutations(g.vertex_count())
        .into_iter()
        .map(|img| Perm::from_images(img).expect("permutation"))
        .filter(|p| is_automorphism(g, p))
        .collect()
}
