//! Dual graphs of (-2)-curves and the elliptic configurations they carry.
//!
//! A configuration is a connected vertex set inducing an extended Dynkin
//! diagram; its class `F = sum m_i v_i` (with the primitive positive kernel
//! vector as multiplicities) has `F.F = 0`. Fibres with fewer than two
//! reduced components (`I_0`, `I_1`, `II`, `III`, `IV` as one or two curves
//! meeting non-transversally) are not seen.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{Signed, Zero};

use crate::arith::Int;
use crate::error::{Error, Result};
use crate::lattice::{direct_sum, make_ade, make_hyperbolic, AdeType, Embedding, IntegerLattice, LatticeVector};
use crate::matrix::{self, IntMatrix};
use crate::roots;
use crate::Limits;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vertex {
    pub label: String,
    pub self_intersection: i64,
    pub bold: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveGraph {
    vertices: Vec<Vertex>,
    /// `(u, v, weight)` with `u < v`, sorted.
    edges: Vec<(usize, usize, i64)>,
}

impl CurveGraph {
    pub fn new(vertices: Vec<Vertex>, edges: Vec<(usize, usize, i64)>) -> Result<Self> {
        let n = vertices.len();
        let labels: BTreeSet<&str> = vertices.iter().map(|v| v.label.as_str()).collect();
        if labels.len() != n {
            return Err(Error::domain("vertex labels are not distinct"));
        }
        let mut seen = BTreeSet::new();
        let mut norm = Vec::with_capacity(edges.len());
        for (u, v, w) in edges {
            if u >= n || v >= n {
                return Err(Error::domain(format!("edge ({u}, {v}) out of range")));
            }
            if u == v {
                return Err(Error::domain(format!("self-loop at {}", vertices[u].label)));
            }
            if w < 1 {
                return Err(Error::domain(format!("edge weight {w} is not positive")));
            }
            let (a, b) = (u.min(v), u.max(v));
            if !seen.insert((a, b)) {
                return Err(Error::domain(format!(
                    "duplicate edge {} - {}",
                    vertices[a].label, vertices[b].label
                )));
            }
            norm.push((a, b, w));
        }
        norm.sort_unstable();
        Ok(CurveGraph { vertices, edges: norm })
    }

    /// Builds a graph from labels; bold vertices are listed separately and
    /// every vertex has self-intersection `-2`.
    pub fn from_labels(labels: &[&str], bold: &[&str], edges: &[(&str, &str, i64)]) -> Result<Self> {
        let vertices: Vec<Vertex> = labels
            .iter()
            .map(|l| Vertex {
                label: l.to_string(),
                self_intersection: -2,
                bold: bold.contains(l),
            })
            .collect();
        if let Some(b) = bold.iter().find(|b| !labels.contains(b)) {
            return Err(Error::domain(format!("unknown bold vertex {b}")));
        }
        let idx = |s: &str| -> Result<usize> {
            labels
                .iter()
                .position(|l| *l == s)
                .ok_or_else(|| Error::domain(format!("unknown vertex {s}")))
        };
        let e = edges
            .iter()
            .map(|&(a, b, w)| Ok((idx(a)?, idx(b)?, w)))
            .collect::<Result<Vec<_>>>()?;
        CurveGraph::new(vertices, e)
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize, i64)] {
        &self.edges
    }

    pub fn label(&self, i: usize) -> &str {
        &self.vertices[i].label
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v.label == label)
    }

    pub fn bold_vertices(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.vertices[i].bold).collect()
    }

    pub fn gram(&self) -> IntMatrix {
        let n = self.len();
        let mut g = IntMatrix::zeros(n, n);
        for (i, v) in self.vertices.iter().enumerate() {
            g[(i, i)] = Int::from(v.self_intersection);
        }
        for &(a, b, w) in &self.edges {
            g[(a, b)] = Int::from(w);
            g[(b, a)] = Int::from(w);
        }
        g
    }

    fn neighbour_masks(&self) -> Vec<u64> {
        let mut m = vec![0u64; self.len()];
        for &(a, b, _) in &self.edges {
            m[a] |= 1 << b;
            m[b] |= 1 << a;
        }
        m
    }
}

/// Gram matrix of the curve classes; degenerate results are allowed.
pub fn lattice_from_graph(g: &CurveGraph) -> Result<IntegerLattice> {
    let l = IntegerLattice::span(g.gram())?;
    l.with_labels(g.vertices.iter().map(|v| v.label.clone()).collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum KodairaType {
    /// `I_n`, `n >= 2`: a cycle of `n` curves (two curves meeting twice for `n = 2`).
    I(usize),
    /// `I_n^*`: affine `D_{n+4}`.
    IStar(usize),
    IIStar,
    IIIStar,
    IVStar,
}

impl KodairaType {
    /// Number of components.
    pub fn components(&self) -> usize {
        match *self {
            KodairaType::I(n) => n,
            KodairaType::IStar(n) => n + 5,
            KodairaType::IIStar => 9,
            KodairaType::IIIStar => 8,
            KodairaType::IVStar => 7,
        }
    }

    /// Multiplicities as a sorted list, from the standard tables.
    pub fn multiplicity_profile(&self) -> Vec<i64> {
        let mut m = match *self {
            KodairaType::I(n) => vec![1; n],
            KodairaType::IStar(n) => {
                let mut v = vec![1, 1, 1, 1];
                v.extend(core::iter::repeat(2).take(n + 1));
                v
            }
            KodairaType::IIStar => vec![1, 2, 2, 3, 3, 4, 4, 5, 6],
            KodairaType::IIIStar => vec![1, 1, 2, 2, 2, 3, 3, 4],
            KodairaType::IVStar => vec![1, 1, 1, 2, 2, 2, 3],
        };
        m.sort_unstable();
        m
    }
}

impl fmt::Display for KodairaType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KodairaType::I(n) => write!(f, "I{n}"),
            KodairaType::IStar(n) => write!(f, "I{n}*"),
            KodairaType::IIStar => f.write_str("II*"),
            KodairaType::IIIStar => f.write_str("III*"),
            KodairaType::IVStar => f.write_str("IV*"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EllipticConfiguration {
    /// Sorted vertex indices.
    pub support: Vec<usize>,
    /// Parallel to `support`.
    pub multiplicities: Vec<i64>,
    pub kodaira: KodairaType,
}

impl EllipticConfiguration {
    /// `F` as a vector over all vertices of the graph.
    pub fn class(&self, n: usize) -> Vec<Int> {
        let mut v = vec![Int::zero(); n];
        for (&i, &m) in self.support.iter().zip(&self.multiplicities) {
            v[i] = Int::from(m);
        }
        v
    }
}

enum Shape {
    Dynkin,
    Affine(KodairaType),
    Other,
}

fn shape(g: &CurveGraph, gram: &IntMatrix, nb: &[u64], mask: u64) -> Shape {
    let verts: Vec<usize> = (0..g.len()).filter(|&i| mask >> i & 1 == 1).collect();
    let k = verts.len();
    if verts.iter().any(|&i| gram[(i, i)] != Int::from(-2)) {
        return Shape::Other;
    }
    let mut heavy = false;
    for (a, &i) in verts.iter().enumerate() {
        for &j in &verts[a + 1..] {
            let w = &gram[(i, j)];
            if *w > Int::from(2) || w.is_negative() {
                return Shape::Other;
            }
            if *w == Int::from(2) {
                heavy = true;
            }
        }
    }
    if heavy {
        return if k == 2 { Shape::Affine(KodairaType::I(2)) } else { Shape::Other };
    }
    let local: Vec<Vec<usize>> = verts
        .iter()
        .map(|&i| {
            verts
                .iter()
                .enumerate()
                .filter(|&(_, &j)| nb[i] >> j & 1 == 1)
                .map(|(b, _)| b)
                .collect()
        })
        .collect();
    let ids: Vec<usize> = (0..k).collect();
    if roots::classify_dynkin_component(&ids, &local).is_some() {
        return Shape::Dynkin;
    }
    let deg: Vec<usize> = local.iter().map(Vec::len).collect();
    let edges: usize = deg.iter().sum::<usize>() / 2;
    if edges == k && k >= 3 && deg.iter().all(|&d| d == 2) {
        return Shape::Affine(KodairaType::I(k));
    }
    if edges + 1 != k {
        return Shape::Other;
    }
    let branch: Vec<usize> = (0..k).filter(|&i| deg[i] >= 3).collect();
    let leaf_count = |b: usize| local[b].iter().filter(|&&x| deg[x] == 1).count();
    match branch.as_slice() {
        [b] if deg[*b] == 4 && k == 5 => Shape::Affine(KodairaType::IStar(0)),
        [b] if deg[*b] == 3 => {
            let mut arms: Vec<usize> = local[*b]
                .iter()
                .map(|&s| {
                    let (mut prev, mut cur, mut len) = (*b, s, 1);
                    while deg[cur] == 2 {
                        let next = *local[cur].iter().find(|&&x| x != prev).expect("degree 2");
                        prev = cur;
                        cur = next;
                        len += 1;
                    }
                    len
                })
                .collect();
            arms.sort_unstable();
            match arms.as_slice() {
                [2, 2, 2] => Shape::Affine(KodairaType::IVStar),
                [1, 3, 3] => Shape::Affine(KodairaType::IIIStar),
                [1, 2, 5] => Shape::Affine(KodairaType::IIStar),
                _ => Shape::Other,
            }
        }
        [a, b] if deg[*a] == 3 && deg[*b] == 3 && leaf_count(*a) == 2 && leaf_count(*b) == 2 => {
            Shape::Affine(KodairaType::IStar(k - 5))
        }
        _ => Shape::Other,
    }
}

fn multiplicities(gram: &IntMatrix, support: &[usize]) -> Result<Vec<i64>> {
    let sub = gram.submatrix(support, support);
    let ker = sub.integer_kernel();
    if ker.rows() != 1 {
        return Err(Error::internal("affine diagram with kernel of rank other than one"));
    }
    let v = crate::lattice::primitive_part(ker.row(0));
    if v.iter().any(|x| !x.is_positive()) {
        return Err(Error::internal("kernel vector of an affine diagram is not positive"));
    }
    Ok(v.iter().map(|x| i64::try_from(x).expect("small")).collect())
}

/// All elliptic configurations of the graph, sorted by support.
///
/// Connected vertex sets are grown one neighbour at a time; a set keeps
/// growing while it induces a Dynkin diagram, is recorded and not grown
/// further once it induces an extended one, and is dropped otherwise. Every
/// proper connected subset of an extended diagram is a Dynkin diagram, so
/// this reaches every configuration.
pub fn find_elliptic_configurations(g: &CurveGraph, limits: &Limits) -> Result<Vec<EllipticConfiguration>> {
    let n = g.len();
    if n > limits.max_graph.min(64) {
        return Err(Error::Resource {
            what: "curve graph size",
            required: n as u64,
            cap: limits.max_graph.min(64) as u64,
        });
    }
    let gram = g.gram();
    let nb = g.neighbour_masks();
    let mut seen: BTreeSet<u64> = BTreeSet::new();
    let mut stack: Vec<u64> = (0..n).map(|i| 1u64 << i).collect();
    let mut found: Vec<EllipticConfiguration> = Vec::new();
    while let Some(mask) = stack.pop() {
        if !seen.insert(mask) {
            continue;
        }
        match shape(g, &gram, &nb, mask) {
            Shape::Other => {}
            Shape::Affine(kodaira) => {
                let support: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
                let multiplicities = multiplicities(&gram, &support)?;
                let c = EllipticConfiguration {
                    support,
                    multiplicities,
                    kodaira,
                };
                verify_configuration(&gram, &c)?;
                found.push(c);
            }
            Shape::Dynkin => {
                let mut frontier = 0u64;
                for i in 0..n {
                    if mask >> i & 1 == 1 {
                        frontier |= nb[i];
                    }
                }
                frontier &= !mask;
                while frontier != 0 {
                    let j = frontier.trailing_zeros() as usize;
                    frontier &= frontier - 1;
                    let next = mask | 1 << j;
                    if !seen.contains(&next) {
                        stack.push(next);
                    }
                }
            }
        }
    }
    found.sort_by(|a, b| a.support.cmp(&b.support));
    Ok(found)
}

/// `F.F = 0`, `F.v = 0` on the support, and the Kodaira multiplicity profile.
fn verify_configuration(gram: &IntMatrix, c: &EllipticConfiguration) -> Result<()> {
    let f = c.class(gram.rows());
    if !matrix::bilinear_int(gram, &f, &f).is_zero() {
        return Err(Error::internal("configuration class has non-zero square"));
    }
    for &i in &c.support {
        let mut e = vec![Int::zero(); gram.rows()];
        e[i] = Int::from(1);
        if !matrix::bilinear_int(gram, &f, &e).is_zero() {
            return Err(Error::internal("configuration class meets its own support"));
        }
    }
    let mut m = c.multiplicities.clone();
    m.sort_unstable();
    if m != c.kodaira.multiplicity_profile() {
        return Err(Error::internal(format!("multiplicities do not match {}", c.kodaira)));
    }
    Ok(())
}

#[derive(Clone, Debug)]
pub struct OverExceptionalVertexSet {
    pub vertices: Vec<usize>,
    pub lattice: IntegerLattice,
}

/// Vertices orthogonal to every given configuration class.
pub fn orthogonal_vertex_set(g: &CurveGraph, configs: &[EllipticConfiguration]) -> Result<OverExceptionalVertexSet> {
    if configs.is_empty() {
        return Err(Error::domain("no configurations given"));
    }
    let gram = g.gram();
    let n = g.len();
    let classes: Vec<Vec<Int>> = configs.iter().map(|c| c.class(n)).collect();
    let vertices: Vec<usize> = (0..n)
        .filter(|&v| {
            classes.iter().all(|f| {
                (0..n).all(|j| f[j].is_zero() || gram[(v, j)].is_zero()) || {
                    let s: Int = (0..n).map(|j| &f[j] * &gram[(v, j)]).sum();
                    s.is_zero()
                }
            })
        })
        .collect();
    let lattice = lattice_from_graph(g)?.restrict(&vertices)?;
    Ok(OverExceptionalVertexSet { vertices, lattice })
}

/// At most `8 + s` components in `s` disjoint fibres of one fibration.
pub fn component_bound_check(fibres: &[EllipticConfiguration]) -> Result<bool> {
    let mut used = BTreeSet::new();
    let mut total = 0;
    for f in fibres {
        for &v in &f.support {
            if !used.insert(v) {
                return Err(Error::domain("fibre supports overlap"));
            }
        }
        total += f.support.len();
    }
    Ok(total <= 8 + fibres.len())
}

#[derive(Clone, Debug)]
pub struct NamedGraph {
    pub name: &'static str,
    pub graph: CurveGraph,
}

fn labels(prefix: &str, range: core::ops::RangeInclusive<usize>) -> Vec<String> {
    range.map(|i| format!("{prefix}{i}")).collect()
}

fn build(ls: &[String], bold: &[&str], edges: &[(&str, &str, i64)]) -> CurveGraph {
    let refs: Vec<&str> = ls.iter().map(String::as_str).collect();
    CurveGraph::from_labels(&refs, bold, edges).expect("catalog graphs are well formed")
}

fn path_edges<'a>(ls: &'a [&'a str]) -> Vec<(&'a str, &'a str, i64)> {
    ls.windows(2).map(|w| (w[0], w[1], 1)).collect()
}

pub fn e8_a1_a1_graph() -> CurveGraph {
    let ls = labels("R", 0..=10);
    let mut e = path_edges(&["R0", "R1", "R2", "R3", "R4", "R5", "R6", "R7", "R8"]);
    e.extend([("R3", "R10", 1), ("R7", "R9", 1), ("R0", "R7", 1), ("R8", "R9", 2)]);
    build(&ls, &[], &e)
}

pub fn e7_a1_a1_graph() -> CurveGraph {
    let ls = labels("R", 0..=9);
    let mut e = path_edges(&["R0", "R1", "R2", "R3", "R4", "R5", "R6"]);
    e.extend([("R3", "R8", 1), ("R5", "R7", 1), ("R5", "R9", 1), ("R1", "R9", 1), ("R6", "R7", 2)]);
    build(&ls, &[], &e)
}

pub fn d5_d5_a1_graph() -> CurveGraph {
    let ls = labels("R", 1..=11);
    let e = [
        ("R1", "R3", 1),
        ("R2", "R3", 1),
        ("R3", "R4", 1),
        ("R4", "R5", 1),
        ("R5", "R7", 1),
        ("R4", "R6", 1),
        ("R6", "R7", 1),
        ("R7", "R8", 1),
        ("R8", "R9", 1),
        ("R9", "R11", 1),
        ("R8", "R10", 1),
        ("R10", "R11", 1),
        ("R7", "R11", 1),
    ];
    build(&ls, &["R1", "R2"], &e)
}

pub fn dm_iii_star_graph() -> CurveGraph {
    let ls = labels("R", 1..=11);
    let mut e = vec![("R1", "R2", 1), ("R2", "R3", 1), ("R2", "R4", 1)];
    e.extend(path_edges(&["R4", "R5", "R6", "R7", "R8"]));
    e.extend([("R7", "R9", 1), ("R7", "R10", 1), ("R3", "R11", 1), ("R11", "R8", 1), ("R9", "R10", 2)]);
    build(&ls, &[], &e)
}

/// The `I*`-case graph with `extra` vertices `X1..` on the dashed chain
/// between the bold branch vertex `R2` and `R`.
pub fn dm_i_star_graph(extra: usize) -> CurveGraph {
    let mut ls: Vec<String> = ["R1", "R2", "R3"].iter().map(|s| s.to_string()).collect();
    let xs = labels("X", 1..=extra);
    ls.extend(xs.iter().cloned());
    ls.extend(["R", "R4", "R5", "R6", "R7", "R8", "R9"].iter().map(|s| s.to_string()));
    let mut chain: Vec<&str> = vec!["R2"];
    chain.extend(xs.iter().map(String::as_str));
    chain.push("R");
    let mut e = vec![("R1", "R2", 1), ("R2", "R3", 1)];
    e.extend(path_edges(&chain));
    e.extend(path_edges(&["R", "R4", "R5", "R6"]));
    e.extend([("R5", "R7", 1), ("R5", "R8", 1), ("R", "R9", 1), ("R9", "R5", 1), ("R7", "R8", 2)]);
    build(&ls, &["R1", "R2", "R3"], &e)
}

/// Number of chain vertices used for the dashed edge of the `I*`-case graph.
pub const I_STAR_CHAIN: usize = 1;

/// The 19-vertex graph on `U + E8 + E8`. `R1`, `S0`, `R2` are the labelled
/// curves; the other sixteen are `C2..C8`, `C9` (on `C3`), `C11..C17`, `C19`
/// (on `C16`).
pub fn k3_u_e8_e8_graph() -> CurveGraph {
    let ls: Vec<String> = [
        "R1", "C2", "C3", "C4", "C5", "C6", "C7", "C8", "C9", "S0", "C11", "C12", "C13", "C14", "C15", "C16", "C17",
        "R2", "C19",
    ]
    .iter()
    .map(|s| s.to_string())
    .collect();
    let mut e = path_edges(&[
        "R1", "C2", "C3", "C4", "C5", "C6", "C7", "C8", "S0", "C11", "C12", "C13", "C14", "C15", "C16", "C17", "R2",
    ]);
    e.extend([("C3", "C9", 1), ("C16", "C19", 1)]);
    build(&ls, &["C4", "C6", "C8", "C9", "C11", "C13", "C15", "C19"], &e)
}

pub fn figure_catalog() -> Vec<NamedGraph> {
    vec![
        NamedGraph { name: "E8+A1+A1", graph: e8_a1_a1_graph() },
        NamedGraph { name: "E7+A1+A1", graph: e7_a1_a1_graph() },
        NamedGraph { name: "D5+D5+A1", graph: d5_d5_a1_graph() },
        NamedGraph { name: "Dm+A1+A1 III*", graph: dm_iii_star_graph() },
        NamedGraph { name: "Dm+A1+A1 I*", graph: dm_i_star_graph(I_STAR_CHAIN) },
        NamedGraph { name: "U+E8+E8", graph: k3_u_e8_e8_graph() },
    ]
}

/// Curve classes of a graph written in the standard basis of `U + E8^k`.
#[derive(Clone, Debug)]
pub struct Realization {
    pub ambient: IntegerLattice,
    /// One row per vertex, in ambient coordinates.
    pub classes: Vec<Vec<Int>>,
}

impl Realization {
    pub fn embedding_of(&self, vertices: &[usize]) -> Result<Embedding> {
        Embedding::new_unchecked_form(
            self.ambient.clone(),
            vertices.iter().map(|&v| self.classes[v].clone()).collect(),
        )
    }
}

/// Writes the curve classes of `g` in the basis `u1, u2, E8, ..., E8` of an
/// even unimodular lattice, when the classes span one of signature
/// `(1, 8k + 1)`.
///
/// The span `N = Z^V / ker` is computed by Smith reduction. A configuration
/// class `F` and a curve `s` with `s.F = 1` give the hyperbolic pair
/// `e = F`, `f = s + F`; the orthogonal complement of `<e, f>` is classified
/// through its roots, which yields simple roots in the standard `E8` order.
/// With `swap` the `E8` summands are taken in the opposite order.
pub fn realize_in_unimodular(
    g: &CurveGraph,
    fibre: &EllipticConfiguration,
    swap: bool,
    limits: &Limits,
) -> Result<Realization> {
    let gram = g.gram();
    let n = g.len();
    let snf = gram.smith();
    let r = snf.rank();
    if snf.diag[..r].iter().any(|d| *d != Int::from(1)) {
        return Err(Error::domain("curve classes do not span a unimodular lattice"));
    }
    let cols: Vec<usize> = (0..r).collect();
    let all: Vec<usize> = (0..n).collect();
    let vt = snf.right.transpose();
    let full = matrix::congruence(&gram, &vt);
    let n_gram = full.submatrix(&cols, &cols);
    let nl = IntegerLattice::new(n_gram)?;
    let sig = nl.signature();
    if !nl.is_even() || !nl.is_unimodular() || sig.n_plus != 1 || (sig.n_minus - 1) % 8 != 0 {
        return Err(Error::domain(format!("span has signature {sig}, not that of U + E8^k")));
    }
    let k = (sig.n_minus - 1) / 8;
    // vertex i in N coordinates: column i of V^{-1}, first r entries
    let vert: Vec<Vec<Int>> = all
        .iter()
        .map(|&i| (0..r).map(|a| snf.right_inverse[(a, i)].clone()).collect())
        .collect();
    let fvec = fibre.class(n);
    let in_n = |v: &[Int]| -> Vec<Int> {
        (0..r)
            .map(|a| (0..n).map(|i| &v[i] * &vert[i][a]).sum())
            .collect()
    };
    let e = in_n(&fvec);
    let s = (0..n)
        .find(|&i| matrix::bilinear_int(&gram, &fvec, &unit(n, i)) == Int::from(1))
        .ok_or_else(|| Error::domain("configuration has no section among the vertices"))?;
    let f: Vec<Int> = vert[s].iter().zip(&e).map(|(a, b)| a + b).collect();
    let hyp = Embedding::new(nl.clone(), vec![e.clone(), f.clone()])?;
    let comp = hyp.orthogonal_complement()?;
    let w = comp.sublattice()?;
    let rs = roots::enumerate_roots(&w, limits)?;
    let e8 = AdeType::e(8)?;
    if rs.components != vec![e8; k] || rs.rank() != 8 * k {
        return Err(Error::domain("complement of the hyperbolic pair is not E8^k"));
    }
    let mut comp_order: Vec<usize> = (0..k).collect();
    if swap {
        comp_order.reverse();
    }
    let mut images: Vec<Vec<Int>> = vec![e, f];
    let cb = comp.basis();
    for c in comp_order {
        for sr in rs.component_simple_roots(c) {
            images.push(
                (0..r)
                    .map(|a| (0..cb.rows()).map(|b| &sr[b] * &cb[(b, a)]).sum())
                    .collect(),
            );
        }
    }
    let p = IntMatrix::from_rows(images)?;
    let mut parts = vec![make_hyperbolic()];
    parts.extend((0..k).map(|_| make_ade(e8)));
    let ambient = direct_sum(&parts)?;
    if matrix::congruence(nl.gram(), &p) != *ambient.gram() {
        return Err(Error::internal("constructed isometry does not preserve the form"));
    }
    // ambient coordinates y with y^t P = w, i.e. y = P^{-t} w
    let pt_inv = p.transpose().unimodular_inverse()?;
    let classes: Vec<Vec<Int>> = vert
        .iter()
        .map(|w| (0..r).map(|a| (0..r).map(|b| &pt_inv[(a, b)] * &w[b]).sum()).collect())
        .collect();
    for i in 0..n {
        for j in 0..n {
            if ambient.pair(&classes[i], &classes[j]) != gram[(i, j)] {
                return Err(Error::internal("realized classes do not reproduce the graph"));
            }
        }
    }
    Ok(Realization { ambient, classes })
}

fn unit(n: usize, i: usize) -> Vec<Int> {
    (0..n).map(|j| Int::from((i == j) as i64)).collect()
}

/// Names of the given vertices.
pub fn vertex_labels(g: &CurveGraph, vs: &[usize]) -> Vec<String> {
    vs.iter().map(|&v| g.label(v).to_string()).collect()
}

/// ADE type of the lattice spanned by a vertex set of `-2` curves, when it
/// is a Dynkin diagram.
pub fn vertex_set_type(g: &CurveGraph, vs: &[usize]) -> Option<Vec<AdeType>> {
    let sub = g.gram().submatrix(vs, vs);
    roots::classify_root_basis(&sub).map(|c| c.into_iter().map(|(t, _)| t).collect())
}

/// Half of a class, when every coordinate is even.
pub fn halve_if_divisible(v: &LatticeVector) -> Option<LatticeVector> {
    let ints = v.to_ints()?;
    crate::lattice::divide_exact(&ints, &Int::from(2)).map(|h| LatticeVector::from_ints(&h))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> CurveGraph {
        let ls: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
        let e: Vec<(usize, usize, i64)> = (0..n).map(|i| (i, (i + 1) % n, 1)).collect();
        let vs = ls
            .into_iter()
            .map(|label| Vertex { label, self_intersection: -2, bold: false })
            .collect();
        CurveGraph::new(vs, e).unwrap()
    }

    #[test]
    fn graph_validation() {
        let v = |s: &str| Vertex { label: s.into(), self_intersection: -2, bold: false };
        assert!(CurveGraph::new(vec![v("a")], vec![(0, 0, 1)]).is_err());
        assert!(CurveGraph::new(vec![v("a"), v("b")], vec![(0, 1, 1), (1, 0, 1)]).is_err());
        assert!(CurveGraph::new(vec![v("a"), v("b")], vec![(0, 1, 0)]).is_err());
        assert!(CurveGraph::new(vec![v("a"), v("a")], vec![]).is_err());
    }

    #[test]
    fn small_lattices_from_graphs() {
        let p = CurveGraph::from_labels(&["a", "b"], &[], &[("a", "b", 1)]).unwrap();
        assert_eq!(lattice_from_graph(&p).unwrap().gram(), make_ade(AdeType::a(2).unwrap()).gram());
        let d = CurveGraph::from_labels(&["a", "b"], &[], &[("a", "b", 2)]).unwrap();
        let l = lattice_from_graph(&d).unwrap();
        assert!(l.is_degenerate());
        assert_eq!(l.gram(), &IntMatrix::from_i64(&[&[-2, 2], &[2, -2]]));
    }

    #[test]
    fn cycles_and_double_edges() {
        let c = find_elliptic_configurations(&cycle(3), &Limits::default()).unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(c[0].kodaira, KodairaType::I(3));
        let d = CurveGraph::from_labels(&["a", "b"], &[], &[("a", "b", 2)]).unwrap();
        let c = find_elliptic_configurations(&d, &Limits::default()).unwrap();
        assert_eq!(c[0].kodaira, KodairaType::I(2));
        assert_eq!(c[0].multiplicities, vec![1, 1]);
    }

    #[test]
    fn affine_e_templates() {
        // affine E6: arms of length 2 on a centre
        let g = CurveGraph::from_labels(
            &["c", "a1", "a2", "b1", "b2", "d1", "d2"],
            &[],
            &[("c", "a1", 1), ("a1", "a2", 1), ("c", "b1", 1), ("b1", "b2", 1), ("c", "d1", 1), ("d1", "d2", 1)],
        )
        .unwrap();
        let c = find_elliptic_configurations(&g, &Limits::default()).unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(c[0].kodaira, KodairaType::IVStar);
        assert_eq!(c[0].multiplicities.iter().sum::<i64>(), 12);
    }

    #[test]
    fn component_bound() {
        let two = cycle(5);
        let c = find_elliptic_configurations(&two, &Limits::default()).unwrap();
        let mut other = c[0].clone();
        other.support = other.support.iter().map(|v| v + 5).collect();
        assert!(component_bound_check(&[c[0].clone(), other]).unwrap());
        let ten = find_elliptic_configurations(&cycle(10), &Limits::default()).unwrap();
        assert!(!component_bound_check(&ten).unwrap());
        assert!(component_bound_check(&[]).unwrap());
        assert!(component_bound_check(&[c[0].clone(), c[0].clone()]).is_err());
    }

    #[test]
    fn orthogonal_set_needs_configurations() {
        assert!(orthogonal_vertex_set(&cycle(3), &[]).is_err());
    }

    #[test]
    fn catalog_sizes() {
        let cat = figure_catalog();
        assert_eq!(cat.len(), 6);
        let sizes: Vec<(usize, usize)> = cat.iter().map(|n| (n.graph.len(), n.graph.bold_vertices().len())).collect();
        assert_eq!(sizes, vec![(11, 0), (10, 0), (11, 2), (11, 0), (11, 3), (19, 8)]);
    }
}
