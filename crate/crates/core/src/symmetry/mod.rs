//! Symmetries of the configuration graphs and their lattice-level shadow.
//!
//! `Σ5` acts on the ten pairs of `{0..4}` and hence on the curve labels of
//! `Y4`. At the graph level the automorphisms of the extended Petersen graph
//! restrict to exactly this action on the branch vertices; at the lattice
//! level every label permutation is induced by a unique isometry of
//! `Pic(Y4)` fixing `K`.

mod perm;
mod search;

pub use perm::{all_permutations, Perm, PermutationGroup};
pub use search::{
    brute_force_automorphisms, canonical_certificate, graph_automorphisms, is_automorphism, AutomorphismSearch,
};

use crate::blowup::Configuration;
use crate::error::{Error, Result};
use crate::graph::LabeledGraph;
use crate::labels::Pair;
use crate::lattice::{IntMatrix, Isometry, QMatrix};

/// A permutation of `{0..4}` as `tau[i]`.
pub type Tau = [u8; 5];

pub fn tau_from_perm(p: &Perm) -> Result<Tau> {
    if p.degree() != 5 {
        return Err(Error::InvalidPermutation(format!("degree {} instead of 5", p.degree())));
    }
    let mut t = [0u8; 5];
    for (i, x) in t.iter_mut().enumerate() {
        *x = p.apply(i) as u8;
    }
    Ok(t)
}

pub fn validate_tau(tau: &Tau) -> Result<()> {
    Perm::from_images(tau.iter().map(|&x| x as usize).collect()).map(|_| ())
}

/// All 120 elements of `Σ5` in lexicographic order.
pub fn symmetric_group_5() -> Vec<Tau> {
    all_permutations(5)
        .into_iter()
        .map(|v| {
            let mut t = [0u8; 5];
            for (x, y) in t.iter_mut().zip(v) {
                *x = y as u8;
            }
            t
        })
        .collect()
}

/// The permutation `{i, j} -> {tau(i), tau(j)}` of the pairs, indexed as in
/// [`Pair::all`].
pub fn pair_action(tau: &Tau) -> Result<Perm> {
    validate_tau(tau)?;
    Perm::from_images(Pair::all().into_iter().map(|p| p.map(tau).index()).collect())
}

/// The subgroup of permutations of the ten pairs generated by the images of
/// a transposition and a 5-cycle.
pub fn pair_action_group() -> PermutationGroup {
    let gens = [[1, 0, 2, 3, 4], [1, 2, 3, 4, 0]]
        .iter()
        .map(|t| pair_action(t).expect("valid tau"))
        .collect();
    PermutationGroup::new(10, gens).expect("degree ten")
}

/// The isometry of the configuration lattice permuting the curve classes by
/// `label -> label.map(tau)`. Solves `M·A = B` where the columns of `A` are
/// the curve classes and those of `B` their prescribed images, then checks
/// integrality, the Gram form and `M·K = K`.
pub fn induced_lattice_isometry(tau: &Tau, c: &Configuration) -> Result<Isometry> {
    validate_tau(tau)?;
    let n = c.lattice().rank();
    let mut src = Vec::with_capacity(c.curves().len());
    let mut dst = Vec::with_capacity(c.curves().len());
    for r in c.curves() {
        src.push(r.class.0.clone());
        dst.push(c.curve(&r.label.map(tau))?.class.0.clone());
    }
    let a = QMatrix::from_int(&IntMatrix::from_columns(&src, n)?);
    let b = QMatrix::from_int(&IntMatrix::from_columns(&dst, n)?);
    if a.row_echelon().1.len() != n {
        return Err(Error::Inconsistent("curve classes do not span the lattice".into()));
    }
    let m = a
        .solve_left(&b)
        .ok_or_else(|| Error::Inconsistent(format!("no linear map realizes {tau:?} on the curve classes")))?;
    let m = m
        .to_int()
        .ok_or_else(|| Error::Inconsistent(format!("the map realizing {tau:?} is not integral")))?;
    let iso = Isometry::new(c.lattice(), m)?;
    if &iso.apply(c.canonical_class())? != c.canonical_class() {
        return Err(Error::Inconsistent(format!("the map realizing {tau:?} moves K")));
    }
    Ok(iso)
}

/// Restricts a group of graph automorphisms to the vertices in `subset`
/// (in the given order). Every generator must map the subset to itself.
pub fn restriction_image(group: &PermutationGroup, g: &LabeledGraph, subset: &[usize]) -> Result<PermutationGroup> {
    let mut pos = vec![None; g.vertex_count()];
    for (k, &v) in subset.iter().enumerate() {
        pos[v] = Some(k);
    }
    let mut gens = Vec::with_capacity(group.generators().len());
    for p in group.generators() {
        let mut img = Vec::with_capacity(subset.len());
        for &v in subset {
            let w = p.apply(v);
            match pos[w] {
                Some(k) => img.push(k),
                None => {
                    return Err(Error::ImpossibleRestriction {
                        from: g.name(v).to_string(),
                        to: g.name(w).to_string(),
                    })
                }
            }
        }
        gens.push(Perm::from_images(img)?);
    }
    PermutationGroup::new(subset.len(), gens)
}
