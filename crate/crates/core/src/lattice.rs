//! Integer lattices given by Gram matrices, and sublattice embeddings.
//!
//! ADE basis ordering (shared by every table and glue coordinate in the
//! crate):
//!
//! * `A_n`: path `e1 - e2 - ... - en`.
//! * `D_n`: path `e1 - ... - e(n-2)`, with `e(n-1)` and `e(n)` both attached
//!   to `e(n-2)`.
//! * `E_n`: path `e1 - ... - e(n-1)`, with `e(n)` attached to `e3`.
//!
//! All ADE lattices are negative definite.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::{abs_int, lcm_of_denominators, Int, Rat};
use crate::error::{Error, Result};
use crate::matrix::{self, IntMatrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum AdeFamily {
    A,
    D,
    E,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AdeType {
    family: AdeFamily,
    index: usize,
}

impl AdeType {
    pub fn new(family: AdeFamily, index: usize) -> Result<Self> {
        let ok = match family {
            AdeFamily::A => index >= 1,
            AdeFamily::D => index >= 4,
            AdeFamily::E => (6..=8).contains(&index),
        };
        if ok {
            Ok(AdeType { family, index })
        } else {
            Err(Error::domain(format!("no ADE type {family:?}{index}")))
        }
    }

    pub fn a(n: usize) -> Result<Self> {
        Self::new(AdeFamily::A, n)
    }

    pub fn d(n: usize) -> Result<Self> {
        Self::new(AdeFamily::D, n)
    }

    pub fn e(n: usize) -> Result<Self> {
        Self::new(AdeFamily::E, n)
    }

    pub fn family(&self) -> AdeFamily {
        self.family
    }

    pub fn index(&self) -> usize {
        self.index
    }

    pub fn rank(&self) -> usize {
        self.index
    }

    /// Number of roots: `n(n+1)`, `2n(n-1)`, or 72 / 126 / 240.
    pub fn root_count(&self) -> usize {
        let n = self.index;
        match self.family {
            AdeFamily::A => n * (n + 1),
            AdeFamily::D => 2 * n * (n - 1),
            AdeFamily::E => match n {
                6 => 72,
                7 => 126,
                _ => 240,
            },
        }
    }

    /// Discriminant, i.e. the order of the discriminant group.
    pub fn discriminant(&self) -> u64 {
        match self.family {
            AdeFamily::A => self.index as u64 + 1,
            AdeFamily::D => 4,
            AdeFamily::E => 9 - self.index as u64,
        }
    }

    /// Edges of the Dynkin diagram on `0..rank` in the crate's basis order.
    pub fn dynkin_edges(&self) -> Vec<(usize, usize)> {
        let n = self.index;
        match self.family {
            AdeFamily::A => (1..n).map(|i| (i - 1, i)).collect(),
            AdeFamily::D => {
                let mut e: Vec<_> = (1..n - 2).map(|i| (i - 1, i)).collect();
                e.push((n - 3, n - 2));
                e.push((n - 3, n - 1));
                e
            }
            AdeFamily::E => {
                let mut e: Vec<_> = (1..n - 1).map(|i| (i - 1, i)).collect();
                e.push((2, n - 1));
                e
            }
        }
    }

    /// All types of rank at most `max_rank`, ordered by family then index.
    pub fn all_up_to_rank(max_rank: usize) -> Vec<AdeType> {
        let mut out = Vec::new();
        for n in 1..=max_rank {
            out.push(AdeType { family: AdeFamily::A, index: n });
        }
        for n in 4..=max_rank {
            out.push(AdeType { family: AdeFamily::D, index: n });
        }
        for n in 6..=max_rank.min(8) {
            out.push(AdeType { family: AdeFamily::E, index: n });
        }
        out
    }
}

impl fmt::Display for AdeType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.family, self.index)
    }
}

impl FromStr for AdeType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let family = match s.chars().next() {
            Some('A' | 'a') => AdeFamily::A,
            Some('D' | 'd') => AdeFamily::D,
            Some('E' | 'e') => AdeFamily::E,
            _ => return Err(Error::domain(format!("cannot parse ADE type {s:?}"))),
        };
        let n: usize = s[1..]
            .parse()
            .map_err(|_| Error::domain(format!("cannot parse ADE type {s:?}")))?;
        AdeType::new(family, n)
    }
}

/// Formats a multiset of ADE types as e.g. `"D8+D8"`; the empty multiset is `"0"`.
pub fn fmt_ade_multiset(types: &[AdeType]) -> String {
    if types.is_empty() {
        return "0".into();
    }
    types.iter().map(ToString::to_string).collect::<Vec<_>>().join("+")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Signature {
    pub n_plus: usize,
    pub n_minus: usize,
    /// Dimension of the radical; zero for honest lattices.
    pub nullity: usize,
}

impl Signature {
    pub fn is_negative_definite(&self) -> bool {
        self.n_plus == 0 && self.nullity == 0
    }

    pub fn is_positive_definite(&self) -> bool {
        self.n_minus == 0 && self.nullity == 0
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.n_plus, self.n_minus)?;
        if self.nullity > 0 {
            write!(f, " + {} null", self.nullity)?;
        }
        Ok(())
    }
}

/// A vector of `L (x) Q`, in coordinates relative to the basis of `L`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticeVector {
    coords: Vec<Rat>,
    denominator_lcm: Int,
}

impl LatticeVector {
    pub fn new(coords: Vec<Rat>) -> Self {
        let denominator_lcm = lcm_of_denominators(&coords);
        LatticeVector {
            coords,
            denominator_lcm,
        }
    }

    pub fn from_ints(coords: &[Int]) -> Self {
        Self::new(coords.iter().cloned().map(Rat::from_integer).collect())
    }

    pub fn from_i64(coords: &[i64]) -> Self {
        Self::new(coords.iter().map(|&c| Rat::from_integer(Int::from(c))).collect())
    }

    pub fn zero(n: usize) -> Self {
        Self::new(vec![Rat::zero(); n])
    }

    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = vec![Rat::zero(); n];
        v[i] = Rat::one();
        Self::new(v)
    }

    pub fn coords(&self) -> &[Rat] {
        &self.coords
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn denominator_lcm(&self) -> &Int {
        &self.denominator_lcm
    }

    pub fn is_integral(&self) -> bool {
        self.denominator_lcm.is_one()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    /// Integer coordinates, if integral.
    pub fn to_ints(&self) -> Option<Vec<Int>> {
        self.is_integral()
            .then(|| self.coords.iter().map(|c| c.to_integer()).collect())
    }

    pub fn scale(&self, k: &Rat) -> Self {
        Self::new(self.coords.iter().map(|c| c * k).collect())
    }

    pub fn add(&self, other: &LatticeVector) -> Self {
        Self::new(self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &LatticeVector) -> Self {
        Self::new(self.coords.iter().zip(&other.coords).map(|(a, b)| a - b).collect())
    }

    /// Indices of non-zero coordinates.
    pub fn support(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| !self.coords[i].is_zero()).collect()
    }
}

impl fmt::Display for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str(&crate::arith::fmt_rat(c))?;
        }
        f.write_str(")")
    }
}

/// A free Z-module with a symmetric integral bilinear form.
///
/// Constructed through [`IntegerLattice::new`] the form is non-degenerate.
/// [`IntegerLattice::span`] also admits degenerate forms, used for lattices
/// spanned by curve classes whose graph contains a full fibre; the result is
/// flagged and rejected by operations that need a non-degenerate form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegerLattice {
    gram: IntMatrix,
    labels: Vec<String>,
    degenerate: bool,
}

impl IntegerLattice {
    pub fn new(gram: IntMatrix) -> Result<Self> {
        let l = Self::span(gram)?;
        if l.degenerate {
            return Err(Error::domain("Gram matrix is degenerate"));
        }
        Ok(l)
    }

    pub fn span(gram: IntMatrix) -> Result<Self> {
        if !gram.is_symmetric() {
            return Err(Error::domain("Gram matrix is not symmetric"));
        }
        let degenerate = gram.determinant()?.is_zero();
        let labels = (1..=gram.rows()).map(|i| format!("e{i}")).collect();
        Ok(IntegerLattice {
            gram,
            labels,
            degenerate,
        })
    }

    pub fn from_i64(rows: &[&[i64]]) -> Result<Self> {
        Self::new(IntMatrix::from_i64(rows))
    }

    /// The lattice of rank zero.
    pub fn zero() -> Self {
        IntegerLattice {
            gram: IntMatrix::zeros(0, 0),
            labels: Vec::new(),
            degenerate: false,
        }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.rank() {
            return Err(Error::domain(format!(
                "{} labels for a rank-{} lattice",
                labels.len(),
                self.rank()
            )));
        }
        self.labels = labels;
        Ok(self)
    }

    pub fn rank(&self) -> usize {
        self.gram.rows()
    }

    pub fn gram(&self) -> &IntMatrix {
        &self.gram
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn is_degenerate(&self) -> bool {
        self.degenerate
    }

    pub fn is_even(&self) -> bool {
        (0..self.rank()).all(|i| self.gram[(i, i)].is_even())
    }

    pub fn determinant(&self) -> Int {
        self.gram.determinant().expect("square by construction")
    }

    /// `|det(gram)|`; zero for degenerate spans.
    pub fn discriminant(&self) -> Int {
        abs_int(&self.determinant())
    }

    pub fn is_unimodular(&self) -> bool {
        self.discriminant().is_one()
    }

    pub fn signature(&self) -> Signature {
        let (n_plus, n_minus, nullity) = matrix::inertia(&self.gram).expect("symmetric by construction");
        Signature {
            n_plus,
            n_minus,
            nullity,
        }
    }

    pub fn is_negative_definite(&self) -> bool {
        self.signature().is_negative_definite()
    }

    /// The same module with the form negated; converts between the negative
    /// definite convention used here and positive definite references.
    pub fn negated(&self) -> IntegerLattice {
        let gram = IntMatrix::from_fn(self.rank(), self.rank(), |i, j| -&self.gram[(i, j)]);
        IntegerLattice {
            gram,
            labels: self.labels.clone(),
            degenerate: self.degenerate,
        }
    }

    pub fn inner_product(&self, v: &LatticeVector, w: &LatticeVector) -> Result<Rat> {
        if v.len() != self.rank() || w.len() != self.rank() {
            return Err(Error::domain(format!(
                "vector lengths {} and {} do not match rank {}",
                v.len(),
                w.len(),
                self.rank()
            )));
        }
        Ok(matrix::bilinear(&self.gram, v.coords(), w.coords()))
    }

    pub fn norm(&self, v: &LatticeVector) -> Result<Rat> {
        self.inner_product(v, v)
    }

    /// Products of integer coordinate vectors.
    pub fn pair(&self, v: &[Int], w: &[Int]) -> Int {
        matrix::bilinear_int(&self.gram, v, w)
    }

    /// Membership in the dual lattice: `v . e_i` integral for every basis vector.
    pub fn is_in_dual(&self, v: &LatticeVector) -> bool {
        (0..self.rank()).all(|i| {
            let e = LatticeVector::unit(self.rank(), i);
            self.inner_product(v, &e).map_or(false, |x| x.is_integer())
        })
    }

    /// Sublattice spanned by the given basis vectors, with their labels.
    pub fn restrict(&self, indices: &[usize]) -> Result<IntegerLattice> {
        let g = self.gram.submatrix(indices, indices);
        let l = IntegerLattice::span(g)?;
        let labels = indices.iter().map(|&i| self.labels[i].clone()).collect();
        l.with_labels(labels)
    }
}

/// Negative definite Gram matrix of an ADE type in the crate's basis order.
pub fn make_ade(t: AdeType) -> IntegerLattice {
    let n = t.rank();
    let mut g = IntMatrix::zeros(n, n);
    for i in 0..n {
        g[(i, i)] = Int::from(-2);
    }
    for (a, b) in t.dynkin_edges() {
        g[(a, b)] = Int::one();
        g[(b, a)] = Int::one();
    }
    IntegerLattice::new(g).expect("ADE Gram matrices are non-degenerate")
}

/// The hyperbolic plane `U`.
pub fn make_hyperbolic() -> IntegerLattice {
    IntegerLattice::from_i64(&[&[0, 1], &[1, 0]])
        .expect("U is non-degenerate")
        .with_labels(vec!["u1".into(), "u2".into()])
        .expect("rank 2")
}

/// Orthogonal direct sum; labels are prefixed by the summand position.
pub fn direct_sum(ls: &[IntegerLattice]) -> Result<IntegerLattice> {
    if ls.is_empty() {
        return Err(Error::domain("direct sum of an empty list"));
    }
    let grams: Vec<&IntMatrix> = ls.iter().map(|l| &l.gram).collect();
    let gram = IntMatrix::block_diagonal(&grams);
    let labels = ls
        .iter()
        .enumerate()
        .flat_map(|(k, l)| l.labels.iter().map(move |s| format!("{}.{}", k + 1, s)))
        .collect();
    IntegerLattice {
        degenerate: ls.iter().any(|l| l.degenerate),
        gram,
        labels: Vec::new(),
    }
    .with_labels(labels)
}

/// Direct sum of ADE lattices; `&[]` gives the zero lattice.
pub fn make_root_lattice(types: &[AdeType]) -> IntegerLattice {
    if types.is_empty() {
        return IntegerLattice::zero();
    }
    let parts: Vec<_> = types.iter().map(|&t| make_ade(t)).collect();
    direct_sum(&parts).expect("non-empty")
}

/// A sublattice given by integer coordinate vectors in an ambient basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Embedding {
    ambient: IntegerLattice,
    basis: IntMatrix,
}

impl Embedding {
    /// Validates independence and non-degeneracy of the induced form.
    pub fn new(ambient: IntegerLattice, basis_images: Vec<Vec<Int>>) -> Result<Self> {
        let e = Self::new_unchecked_form(ambient, basis_images)?;
        if e.rank() > 0 && e.induced_gram().determinant()?.is_zero() {
            return Err(Error::domain("induced Gram matrix is degenerate"));
        }
        Ok(e)
    }

    /// Like [`Embedding::new`] but only requires independence.
    pub fn new_unchecked_form(ambient: IntegerLattice, basis_images: Vec<Vec<Int>>) -> Result<Self> {
        let n = ambient.rank();
        if basis_images.iter().any(|v| v.len() != n) {
            return Err(Error::domain(format!(
                "basis images must have length {n} (ambient rank)"
            )));
        }
        let k = basis_images.len();
        let basis = if k == 0 {
            IntMatrix::zeros(0, n)
        } else {
            IntMatrix::from_rows(basis_images)?
        };
        if basis.rank() != k {
            return Err(Error::domain("basis images are linearly dependent"));
        }
        Ok(Embedding { ambient, basis })
    }

    pub fn from_i64(ambient: IntegerLattice, rows: &[&[i64]]) -> Result<Self> {
        let v = rows
            .iter()
            .map(|r| r.iter().map(|&x| Int::from(x)).collect())
            .collect();
        Self::new(ambient, v)
    }

    /// The ambient basis vectors with the given indices.
    pub fn coordinate(ambient: IntegerLattice, indices: &[usize]) -> Result<Self> {
        let n = ambient.rank();
        let rows = indices
            .iter()
            .map(|&i| (0..n).map(|j| Int::from((i == j) as i64)).collect())
            .collect();
        Self::new(ambient, rows)
    }

    pub fn ambient(&self) -> &IntegerLattice {
        &self.ambient
    }

    /// Basis images as rows.
    pub fn basis(&self) -> &IntMatrix {
        &self.basis
    }

    pub fn basis_images(&self) -> Vec<Vec<Int>> {
        self.basis.row_vecs()
    }

    pub fn rank(&self) -> usize {
        self.basis.rows()
    }

    pub fn induced_gram(&self) -> IntMatrix {
        matrix::congruence(self.ambient.gram(), &self.basis)
    }

    /// The embedded lattice with its induced form.
    pub fn sublattice(&self) -> Result<IntegerLattice> {
        if self.rank() == 0 {
            return Ok(IntegerLattice::zero());
        }
        IntegerLattice::span(self.induced_gram())
    }

    /// Image of a vector given in sublattice coordinates, in ambient coordinates.
    pub fn image(&self, v: &LatticeVector) -> LatticeVector {
        let n = self.ambient.rank();
        let mut out = vec![Rat::zero(); n];
        for (i, c) in v.coords().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (j, o) in out.iter_mut().enumerate() {
                *o += c * Rat::from_integer(self.basis[(i, j)].clone());
            }
        }
        LatticeVector::new(out)
    }

    /// Orthogonal complement in the ambient lattice: a basis of the integer
    /// kernel of `v -> (v . s_i)_i`. The kernel is saturated, so the result is
    /// always primitive.
    pub fn orthogonal_complement(&self) -> Result<Embedding> {
        let n = self.ambient.rank();
        if self.rank() == 0 {
            return Embedding::coordinate(self.ambient.clone(), &(0..n).collect::<Vec<_>>());
        }
        let pairing = self.basis.mul(self.ambient.gram())?;
        let k = pairing.integer_kernel();
        Embedding::new_unchecked_form(self.ambient.clone(), k.row_vecs())
    }

    /// Replaces the ambient by an isometric copy given through the images of
    /// its basis vectors in a new ambient.
    pub fn push_forward(&self, target: &Embedding) -> Result<Embedding> {
        if target.rank() != self.ambient.rank() {
            return Err(Error::domain("push-forward through an embedding of the wrong rank"));
        }
        let b = if self.rank() == 0 {
            IntMatrix::zeros(0, target.ambient.rank())
        } else {
            self.basis.mul(&target.basis)?
        };
        Embedding::new_unchecked_form(target.ambient.clone(), b.row_vecs())
    }
}

/// Orthogonal complement of `sub` in its ambient lattice.
pub fn orthogonal_complement(sub: &Embedding) -> Result<Embedding> {
    sub.orthogonal_complement()
}

/// Whether two integer vectors are proportional with an integer factor
/// (used to test divisibility of classes).
pub fn divide_exact(v: &[Int], k: &Int) -> Option<Vec<Int>> {
    if k.is_zero() {
        return None;
    }
    v.iter()
        .map(|x| x.is_multiple_of(k).then(|| x / k))
        .collect()
}

/// Removes the content (gcd) of an integer vector and makes the first
/// non-zero entry positive.
pub fn primitive_part(v: &[Int]) -> Vec<Int> {
    let g = v.iter().fold(Int::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return v.to_vec();
    }
    let sign = v.iter().find(|x| !x.is_zero()).map_or(false, |x| x.is_negative());
    v.iter()
        .map(|x| if sign { -(x / &g) } else { x / &g })
        .collect()
}
