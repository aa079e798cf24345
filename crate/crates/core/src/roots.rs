//! Roots of negative definite lattices and ADE classification.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use crate::arith::Int;
use crate::error::{Error, Result};
use crate::lattice::{AdeType, Embedding, IntegerLattice};
use crate::matrix::{self, IntMatrix};
use crate::shortvec;
use crate::Limits;

#[derive(Clone, Debug)]
pub struct RootSystem {
    pub parent: IntegerLattice,
    /// All norm `-2` vectors, sorted.
    pub roots: Vec<Vec<Int>>,
    /// Simple roots grouped by component, each group in the crate's ADE
    /// basis order.
    pub simple_roots: Vec<Vec<Int>>,
    pub components: Vec<AdeType>,
    /// `component_ranges[k]` indexes the slice of `simple_roots` of component `k`.
    pub component_ranges: Vec<core::ops::Range<usize>>,
}

impl RootSystem {
    pub fn count(&self) -> usize {
        self.roots.len()
    }

    pub fn rank(&self) -> usize {
        self.simple_roots.len()
    }

    pub fn component_simple_roots(&self, k: usize) -> &[Vec<Int>] {
        &self.simple_roots[self.component_ranges[k].clone()]
    }
}

pub fn enumerate_roots(l: &IntegerLattice, limits: &Limits) -> Result<RootSystem> {
    enumerate_roots_with(l, None, limits)
}

/// As [`enumerate_roots`], with positivity decided by the sign of `w . r`
/// first (ties broken lexicographically). Only the simple roots depend on `w`.
pub fn enumerate_roots_with(l: &IntegerLattice, weights: Option<&[Int]>, limits: &Limits) -> Result<RootSystem> {
    if l.rank() > limits.max_rank {
        return Err(Error::Resource {
            what: "rank for root enumeration",
            required: l.rank() as u64,
            cap: limits.max_rank as u64,
        });
    }
    if !l.is_negative_definite() {
        return Err(Error::domain(format!(
            "root enumeration needs a negative definite lattice, signature is {}",
            l.signature()
        )));
    }
    if weights.is_some_and(|w| w.len() != l.rank()) {
        return Err(Error::domain("weight vector length does not match the rank"));
    }
    let roots = shortvec::vectors_of_norm(l.gram(), -2, limits)?;
    let positive = |r: &[Int]| -> bool {
        if let Some(w) = weights {
            let s: Int = w.iter().zip(r).map(|(a, b)| a * b).sum();
            if !s.is_zero() {
                return s.is_positive();
            }
        }
        r.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_positive())
    };
    let pos: Vec<&Vec<Int>> = roots.iter().filter(|r| positive(r)).collect();
    let pos_set: BTreeSet<&Vec<Int>> = pos.iter().copied().collect();
    let mut simple: Vec<Vec<Int>> = Vec::new();
    for r in &pos {
        let decomposable = pos.iter().any(|a| {
            let diff: Vec<Int> = r.iter().zip(a.iter()).map(|(x, y)| x - y).collect();
            pos_set.contains(&diff)
        });
        if !decomposable {
            simple.push((*r).clone());
        }
    }
    let n = simple.len();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let p = l.pair(&simple[i], &simple[j]);
            if p.is_zero() {
                continue;
            }
            if !p.is_one() {
                return Err(Error::internal(format!("simple roots with product {p}")));
            }
            edges.push((i, j));
        }
    }
    let comps = dynkin_components(n, &edges)
        .ok_or_else(|| Error::internal("simple roots do not form a Dynkin diagram"))?;
    let mut simple_roots = Vec::new();
    let mut components = Vec::new();
    let mut component_ranges = Vec::new();
    for (t, order) in comps {
        let start = simple_roots.len();
        simple_roots.extend(order.iter().map(|&i| simple[i].clone()));
        component_ranges.push(start..simple_roots.len());
        components.push(t);
    }
    Ok(RootSystem {
        parent: l.clone(),
        roots,
        simple_roots,
        components,
        component_ranges,
    })
}

pub fn ade_classify(rs: &RootSystem) -> Vec<AdeType> {
    rs.components.clone()
}

/// The sublattice generated by all roots, with the simple roots as basis.
pub fn root_span(l: &IntegerLattice, limits: &Limits) -> Result<Embedding> {
    let rs = enumerate_roots(l, limits)?;
    Embedding::new(l.clone(), rs.simple_roots)
}

/// Index of the root span in `l`, or `None` when the roots do not span a
/// full-rank sublattice.
pub fn root_span_index(l: &IntegerLattice, limits: &Limits) -> Result<Option<Int>> {
    let rs = enumerate_roots(l, limits)?;
    if rs.rank() < l.rank() {
        return Ok(None);
    }
    if l.rank() == 0 {
        return Ok(Some(Int::one()));
    }
    let b = IntMatrix::from_rows(rs.simple_roots)?;
    Ok(Some(b.determinant()?.abs()))
}

pub fn is_root_lattice(l: &IntegerLattice, limits: &Limits) -> Result<bool> {
    Ok(root_span_index(l, limits)? == Some(Int::one()))
}

fn adjacency(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    for a in adj.iter_mut() {
        a.sort_unstable();
    }
    adj
}

/// Connected components, each sorted, ordered by smallest vertex.
pub fn connected_components(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let adj = adjacency(n, edges);
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        let mut comp = vec![s];
        seen[s] = true;
        let mut k = 0;
        while k < comp.len() {
            for &w in &adj[comp[k]] {
                if !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                }
            }
            k += 1;
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Walks from `start` away from `from` along a path of degree-2 vertices,
/// returning the visited vertices (including `start`).
fn arm(adj: &[Vec<usize>], from: usize, start: usize) -> Vec<usize> {
    let mut out = vec![start];
    let (mut prev, mut cur) = (from, start);
    loop {
        let next: Vec<usize> = adj[cur].iter().copied().filter(|&w| w != prev).collect();
        if next.len() != 1 {
            return out;
        }
        prev = cur;
        cur = next[0];
        out.push(cur);
    }
}

/// Classifies a connected simple graph as a Dynkin diagram; returns the
/// type and the vertices in the crate's basis order.
pub fn classify_dynkin_component(vertices: &[usize], adj: &[Vec<usize>]) -> Option<(AdeType, Vec<usize>)> {
    let n = vertices.len();
    let edge_count: usize = vertices.iter().map(|&v| adj[v].len()).sum::<usize>() / 2;
    if edge_count + 1 != n {
        return None; // not a tree
    }
    if n == 1 {
        return Some((AdeType::a(1).ok()?, vertices.to_vec()));
    }
    let branch: Vec<usize> = vertices.iter().copied().filter(|&v| adj[v].len() >= 3).collect();
    if branch.is_empty() {
        let ends: Vec<usize> = vertices.iter().copied().filter(|&v| adj[v].len() == 1).collect();
        let start = *ends.iter().min()?;
        let path = arm(adj, usize::MAX, start);
        return Some((AdeType::a(n).ok()?, path));
    }
    if branch.len() > 1 || adj[branch[0]].len() != 3 {
        return None;
    }
    let b = branch[0];
    let mut arms: Vec<Vec<usize>> = adj[b].iter().map(|&s| arm(adj, b, s)).collect();
    // shortest first; ties by the first vertex
    arms.sort_by(|x, y| x.len().cmp(&y.len()).then(x[0].cmp(&y[0])));
    let lens = (arms[0].len(), arms[1].len(), arms[2].len());
    match lens {
        (1, 1, c) => {
            // path from the far end of the long arm to the branch, then the forks
            let mut order: Vec<usize> = arms[2].iter().rev().copied().collect();
            order.push(b);
            order.push(arms[0][0]);
            order.push(arms[1][0]);
            Some((AdeType::d(c + 3).ok()?, order))
        }
        (1, 2, c) if (2..=4).contains(&c) => {
            // path: arm of length 2 reversed, branch, the long arm, then the leaf
            let mut order: Vec<usize> = arms[1].iter().rev().copied().collect();
            order.push(b);
            order.extend(arms[2].iter().copied());
            order.push(arms[0][0]);
            Some((AdeType::e(c + 4).ok()?, order))
        }
        _ => None,
    }
}

/// Splits a graph into Dynkin components, sorted by type and then by
/// smallest vertex; `None` if some component is not a Dynkin diagram.
pub fn dynkin_components(n: usize, edges: &[(usize, usize)]) -> Option<Vec<(AdeType, Vec<usize>)>> {
    let adj = adjacency(n, edges);
    let mut out = Vec::new();
    for comp in connected_components(n, edges) {
        let (t, order) = classify_dynkin_component(&comp, &adj)?;
        out.push((t, order, comp[0]));
    }
    out.sort_by(|a, b| a.0.cmp(&b.0).then(a.2.cmp(&b.2)));
    Some(out.into_iter().map(|(t, o, _)| (t, o)).collect())
}

/// ADE type of a negative definite Gram matrix whose basis vectors are
/// roots with pairwise products in `{0, 1}`; `None` otherwise.
pub fn classify_root_basis(gram: &IntMatrix) -> Option<Vec<(AdeType, Vec<usize>)>> {
    let n = gram.rows();
    let mut edges = Vec::new();
    for i in 0..n {
        if gram[(i, i)] != Int::from(-2) {
            return None;
        }
        for j in i + 1..n {
            let g = &gram[(i, j)];
            if g.is_one() {
                edges.push((i, j));
            } else if !g.is_zero() {
                return None;
            }
        }
    }
    dynkin_components(n, &edges)
}

/// Whether the Gram matrix is exactly that of the given ADE sum in the
/// crate's basis order.
pub fn gram_is_ade_sum(gram: &IntMatrix, types: &[AdeType]) -> bool {
    let target = crate::lattice::make_root_lattice(types);
    target.gram() == gram
}

/// Same multiset of components as `types`, up to reordering of basis vectors.
pub fn root_basis_has_type(gram: &IntMatrix, types: &[AdeType]) -> bool {
    let Some(c) = classify_root_basis(gram) else { return false };
    let mut got: Vec<AdeType> = c.into_iter().map(|(t, _)| t).collect();
    let mut want = types.to_vec();
    got.sort();
    want.sort();
    got == want
}

/// Closed-form root count of an ADE sum.
pub fn closed_form_root_count(types: &[AdeType]) -> usize {
    types.iter().map(AdeType::root_count).sum()
}

/// Products `s_i . s_j` of the simple roots, as a matrix.
pub fn simple_root_gram(rs: &RootSystem) -> IntMatrix {
    if rs.simple_roots.is_empty() {
        return IntMatrix::zeros(0, 0);
    }
    let b = IntMatrix::from_rows(rs.simple_roots.clone()).expect("equal lengths");
    matrix::congruence(rs.parent.gram(), &b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{make_ade, make_root_lattice};

    fn t(s: &str) -> AdeType {
        s.parse().unwrap()
    }

    #[test]
    fn classification_of_pure_types() {
        for ty in AdeType::all_up_to_rank(9) {
            let rs = enumerate_roots(&make_ade(ty), &Limits::default()).unwrap();
            assert_eq!(rs.count(), ty.root_count(), "{ty}");
            assert_eq!(ade_classify(&rs), vec![ty]);
            assert!(gram_is_ade_sum(&simple_root_gram(&rs), &[ty]), "{ty}");
        }
    }

    #[test]
    fn sums_are_classified() {
        let types = [t("A2"), t("D4"), t("A1")];
        let l = make_root_lattice(&types);
        let rs = enumerate_roots(&l, &Limits::default()).unwrap();
        assert_eq!(rs.count(), 6 + 24 + 2);
        assert_eq!(ade_classify(&rs), vec![t("A1"), t("A2"), t("D4")]);
    }

    #[test]
    fn rootless_lattice() {
        let l = IntegerLattice::from_i64(&[&[-4]]).unwrap();
        let rs = enumerate_roots(&l, &Limits::default()).unwrap();
        assert_eq!(rs.count(), 0);
        assert_eq!(root_span(&l, &Limits::default()).unwrap().rank(), 0);
        assert!(!is_root_lattice(&l, &Limits::default()).unwrap());
    }

    #[test]
    fn indefinite_is_rejected() {
        let u = crate::lattice::make_hyperbolic();
        assert!(matches!(enumerate_roots(&u, &Limits::default()), Err(Error::Domain(_))));
    }

    #[test]
    fn weights_only_move_simple_roots() {
        let l = make_ade(t("E6"));
        let a = enumerate_roots(&l, &Limits::default()).unwrap();
        let w: Vec<Int> = (0..6).map(|i| Int::from(if i % 2 == 0 { -1 } else { 3 })).collect();
        let b = enumerate_roots_with(&l, Some(&w), &Limits::default()).unwrap();
        assert_eq!(a.roots, b.roots);
        assert_eq!(a.components, b.components);
    }
}
