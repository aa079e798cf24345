//! Overlattices, saturation and glue.
//!
//! Overlattices of `L` correspond to isotropic subgroups `H` of `A_L`; the
//! overlattice is `L + (lifts of H)`, with `disc(L) = [L':L]^2 disc(L')`.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::arith::{is_prime, lcm_of_denominators, Int, Rat};
use crate::discform::{DiscriminantGroup, Element};
use crate::error::{Error, Result};
use crate::lattice::{fmt_ade_multiset, make_root_lattice, AdeType, Embedding, IntegerLattice, LatticeVector};
use crate::matrix::IntMatrix;
use crate::roots;
use crate::shortvec;
use crate::Limits;

/// Isotropic elements of `A_L` in lexicographic order, identity first.
pub fn isotropic_elements(g: &DiscriminantGroup, limits: &Limits) -> Result<Vec<Element>> {
    Ok(g.elements(limits)?
        .into_iter()
        .filter(|x| g.is_isotropic(x))
        .collect())
}

#[derive(Clone, Debug)]
pub struct IsotropicSubgroup {
    parent: Arc<DiscriminantGroup>,
    generators: Vec<Element>,
    /// Sorted.
    elements: Vec<Element>,
}

impl IsotropicSubgroup {
    /// The subgroup generated by `gens`; fails unless `q` vanishes on it.
    pub fn generated_by(parent: Arc<DiscriminantGroup>, gens: &[Element], limits: &Limits) -> Result<Self> {
        parent.check_cap(limits)?;
        for x in gens {
            if x.len() != parent.length() || x.iter().zip(parent.invariant_factors()).any(|(a, d)| a >= d) {
                return Err(Error::domain("element is not a residue tuple of this group"));
            }
        }
        let elements = span(&parent, gens);
        if let Some(x) = elements.iter().find(|x| !parent.is_isotropic(x)) {
            return Err(Error::domain(format!(
                "subgroup is not isotropic: q{} = {}",
                crate::discform::fmt_element(x),
                parent.q_value(x)
            )));
        }
        let generators = canonical_generators(&parent, &elements);
        Ok(IsotropicSubgroup {
            parent,
            generators,
            elements,
        })
    }

    pub fn parent(&self) -> &DiscriminantGroup {
        &self.parent
    }

    pub fn generators(&self) -> &[Element] {
        &self.generators
    }

    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }
}

/// Subgroup generated by `gens`, sorted.
fn span(g: &DiscriminantGroup, gens: &[Element]) -> Vec<Element> {
    let mut set: BTreeSet<Element> = BTreeSet::new();
    set.insert(g.identity());
    for x in gens {
        if set.contains(x) {
            continue;
        }
        let current: Vec<Element> = set.iter().cloned().collect();
        let mut m = x.clone();
        while m != g.identity() {
            for h in &current {
                set.insert(g.add(h, &m));
            }
            m = g.add(&m, x);
        }
    }
    set.into_iter().collect()
}

/// Greedy lexicographic generating set, then redundant generators removed.
fn canonical_generators(g: &DiscriminantGroup, elements: &[Element]) -> Vec<Element> {
    let mut gens: Vec<Element> = Vec::new();
    let mut current: BTreeSet<Element> = [g.identity()].into_iter().collect();
    for x in elements {
        if current.contains(x) {
            continue;
        }
        gens.push(x.clone());
        current = span(g, &gens).into_iter().collect();
        if current.len() == elements.len() {
            break;
        }
    }
    let mut i = 0;
    while i < gens.len() {
        let mut rest = gens.clone();
        rest.remove(i);
        if span(g, &rest).len() == elements.len() {
            gens = rest;
        } else {
            i += 1;
        }
    }
    gens
}

/// Every isotropic subgroup, ordered by (order, canonical generators).
pub fn isotropic_subgroups(g: &Arc<DiscriminantGroup>, limits: &Limits) -> Result<Vec<IsotropicSubgroup>> {
    let iso = isotropic_elements(g, limits)?;
    let key = |els: &[Element]| -> Vec<u64> { els.iter().map(|x| g.index_of(x)).collect() };
    let trivial = vec![g.identity()];
    let mut seen: BTreeSet<Vec<u64>> = BTreeSet::new();
    seen.insert(key(&trivial));
    let mut queue = vec![trivial];
    let mut k = 0;
    while k < queue.len() {
        let h = queue[k].clone();
        k += 1;
        let members: BTreeSet<&Element> = h.iter().collect();
        for x in &iso {
            if members.contains(x) {
                continue;
            }
            if h.iter().any(|y| g.b_scaled(x, y) != 0) {
                continue;
            }
            let mut bigger: BTreeSet<Element> = BTreeSet::new();
            let mut m = g.identity();
            loop {
                for y in &h {
                    bigger.insert(g.add(y, &m));
                }
                m = g.add(&m, x);
                if m == g.identity() {
                    break;
                }
            }
            let bigger: Vec<Element> = bigger.into_iter().collect();
            if seen.insert(key(&bigger)) {
                queue.push(bigger);
            }
        }
    }
    let mut out: Vec<IsotropicSubgroup> = queue
        .into_iter()
        .map(|elements| IsotropicSubgroup {
            generators: canonical_generators(g, &elements),
            parent: g.clone(),
            elements,
        })
        .collect();
    out.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.generators.cmp(&b.generators)));
    Ok(out)
}

#[derive(Clone, Debug)]
pub struct OverlatticeResult {
    pub lattice: IntegerLattice,
    pub index: u64,
    /// Lifts of the subgroup generators, in coordinates of the old basis.
    pub glue_lifts: Vec<LatticeVector>,
    /// Rows are the new basis vectors in old coordinates.
    pub change_of_basis: Vec<Vec<Rat>>,
    /// The old lattice inside the new one.
    pub inclusion: Embedding,
}

impl OverlatticeResult {
    /// `disc(L) = [L':L]^2 disc(L')`.
    pub fn index_formula_holds(&self, old: &IntegerLattice) -> bool {
        let i = Int::from(self.index);
        old.discriminant() == &i * &i * self.lattice.discriminant()
    }
}

pub fn overlattice_from(h: &IsotropicSubgroup) -> Result<OverlatticeResult> {
    let g = h.parent();
    let l = g.parent();
    if let Some(x) = h.elements().iter().find(|x| !g.is_isotropic(x)) {
        return Err(Error::domain(format!(
            "subgroup is not isotropic at {}",
            crate::discform::fmt_element(x)
        )));
    }
    let n = l.rank();
    let glue_lifts: Vec<LatticeVector> = h.generators().iter().map(|x| g.lift(x)).collect();
    let d = glue_lifts
        .iter()
        .fold(Int::one(), |acc, v| acc.lcm(v.denominator_lcm()));
    let mut rows: Vec<Vec<Int>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { d.clone() } else { Int::zero() }).collect())
        .collect();
    for v in &glue_lifts {
        rows.push(v.coords().iter().map(|c| (c * Rat::from_integer(d.clone())).to_integer()).collect());
    }
    let hnf = if n == 0 {
        IntMatrix::zeros(0, 0)
    } else {
        IntMatrix::from_rows(rows)?.hermite_rows()
    };
    if hnf.rows() != n {
        return Err(Error::internal("overlattice basis has the wrong rank"));
    }
    let change_of_basis: Vec<Vec<Rat>> = (0..n)
        .map(|i| (0..n).map(|j| Rat::new(hnf[(i, j)].clone(), d.clone())).collect())
        .collect();
    let mut gram = IntMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            let v = crate::matrix::bilinear(l.gram(), &change_of_basis[i], &change_of_basis[j]);
            if !v.is_integer() {
                return Err(Error::internal("overlattice form is not integral"));
            }
            gram[(i, j)] = v.to_integer();
        }
    }
    let lattice = IntegerLattice::new(gram)?;
    if l.is_even() && !lattice.is_even() {
        return Err(Error::internal("overlattice of an even lattice is odd"));
    }
    // old basis in new coordinates: rows of (change_of_basis)^{-1} = d * hnf^{-1}
    let inv = hnf
        .rational_inverse()
        .ok_or_else(|| Error::internal("overlattice basis is singular"))?;
    let incl_rows: Vec<Vec<Int>> = inv
        .iter()
        .map(|row| {
            row.iter()
                .map(|x| {
                    let y = x * Rat::from_integer(d.clone());
                    if y.is_integer() {
                        Ok(y.to_integer())
                    } else {
                        Err(Error::internal("old basis is not integral in the overlattice"))
                    }
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;
    let inclusion = Embedding::new(lattice.clone(), incl_rows)?;
    let result = OverlatticeResult {
        lattice,
        index: h.order() as u64,
        glue_lifts,
        change_of_basis,
        inclusion,
    };
    if !result.index_formula_holds(l) {
        return Err(Error::internal("index formula fails for a constructed overlattice"));
    }
    Ok(result)
}

/// All overlattices of `l`, one per isotropic subgroup, in subgroup order.
pub fn overlattices(l: &IntegerLattice, limits: &Limits) -> Result<Vec<(IsotropicSubgroup, OverlatticeResult)>> {
    let g = Arc::new(DiscriminantGroup::new(l)?);
    isotropic_subgroups(&g, limits)?
        .into_iter()
        .map(|h| {
            let o = overlattice_from(&h)?;
            Ok((h, o))
        })
        .collect()
}

/// The subgroup `L'/L` of `A_L` cut out by an overlattice, recovered from its
/// basis vectors (in old coordinates).
pub fn subgroup_of_overlattice(g: &Arc<DiscriminantGroup>, o: &OverlatticeResult, limits: &Limits) -> Result<IsotropicSubgroup> {
    let gens = o
        .change_of_basis
        .iter()
        .map(|row| g.class_of(&LatticeVector::new(row.clone())))
        .collect::<Result<Vec<_>>>()?;
    IsotropicSubgroup::generated_by(g.clone(), &gens, limits)
}

#[derive(Clone, Debug)]
pub struct Saturation {
    /// `(L (x) Q) cap M`, with an integral basis.
    pub embedding: Embedding,
    pub index: Int,
    /// Invariant factors of `L_sat / L`.
    pub quotient: Vec<Int>,
    /// Generators of `L_sat / L` in coordinates of the basis of `L`.
    pub glue: Vec<LatticeVector>,
}

pub fn saturation(e: &Embedding) -> Result<Saturation> {
    let k = e.rank();
    if k == 0 {
        return Ok(Saturation {
            embedding: e.clone(),
            index: Int::one(),
            quotient: vec![],
            glue: vec![],
        });
    }
    let snf = e.basis().smith();
    let rows: Vec<Vec<Int>> = (0..k).map(|i| snf.right_inverse.row(i).to_vec()).collect();
    let embedding = Embedding::new_unchecked_form(e.ambient().clone(), rows)?;
    let mut index = Int::one();
    let mut quotient = Vec::new();
    let mut glue = Vec::new();
    for i in 0..k {
        let d = &snf.diag[i];
        index *= d;
        if d.is_one() {
            continue;
        }
        quotient.push(d.clone());
        glue.push(LatticeVector::new(
            snf.left.row(i).iter().map(|u| Rat::new(u.clone(), d.clone())).collect(),
        ));
    }
    Ok(Saturation {
        embedding,
        index,
        quotient,
        glue,
    })
}

pub fn is_primitive(e: &Embedding) -> Result<bool> {
    Ok(saturation(e)?.index.is_one())
}

/// Reduces a glue vector modulo `L` to coefficients `alpha_i / p` with
/// `0 <= alpha_i < p`.
pub fn minimal_glue_vector(v: &LatticeVector, p: u64) -> Result<LatticeVector> {
    if !is_prime(p) {
        return Err(Error::domain(format!("{p} is not prime")));
    }
    let pr = Rat::from_integer(Int::from(p));
    if !v.scale(&pr).is_integral() {
        return Err(Error::domain(format!("{p} v is not in the lattice")));
    }
    Ok(LatticeVector::new(v.coords().iter().map(|c| c - c.floor()).collect()))
}

/// The sublattice spanned by the basis vectors on which a minimal glue
/// vector is non-zero.
pub fn concentration_support(l: &IntegerLattice, v: &LatticeVector) -> Result<Embedding> {
    if v.len() != l.rank() {
        return Err(Error::domain("glue vector length does not match the rank"));
    }
    Embedding::new_unchecked_form(
        l.clone(),
        v.support()
            .into_iter()
            .map(|i| (0..l.rank()).map(|j| Int::from((i == j) as i64)).collect())
            .collect(),
    )
}

/// `Some(r)` when the support Gram is that of `A_{p-1}^r`.
pub fn concentration_rank(support: &Embedding, p: u64) -> Option<usize> {
    let gram = support.induced_gram();
    let comps = roots::classify_root_basis(&gram)?;
    let target = AdeType::a(p as usize - 1).ok()?;
    (!comps.is_empty() && comps.iter().all(|(t, _)| *t == target)).then_some(comps.len())
}

/// Divides a class by `k` when all its coordinates are multiples of `k`;
/// with `k = 2` this tells a half-fibre class from a fibre class numerically.
pub fn divide_if_divisible(v: &[Int], k: i64) -> Option<Vec<Int>> {
    crate::lattice::divide_exact(v, &Int::from(k))
}

/// Whether the coset of `x` contains a vector of norm `-2`.
pub fn has_root_lift(g: &DiscriminantGroup, x: &[u64], limits: &Limits) -> Result<bool> {
    let l = g.parent();
    let lift = g.lift(x);
    let two = Rat::from_integer(Int::from(2));
    let vs = shortvec::short_vectors(l.gram(), lift.coords(), &two, limits)?;
    Ok(vs
        .iter()
        .any(|v| crate::matrix::bilinear(l.gram(), v, v) == -two.clone()))
}

/// Classes in `H` that admit a norm `-2` lift.
pub fn root_classes(h: &IsotropicSubgroup, limits: &Limits) -> Result<Vec<Element>> {
    let g = h.parent();
    let mut out = Vec::new();
    for x in h.elements() {
        if x.iter().all(|&a| a == 0) {
            continue;
        }
        if has_root_lift(g, x, limits)? {
            out.push(x.clone());
        }
    }
    Ok(out)
}

/// Whether the overlattice defined by `h` is a root lattice, for `h` over a
/// root lattice. Decided by whether the classes with norm `-2` lifts
/// generate `h`, and cross-checked against the root span of the constructed
/// overlattice.
pub fn overlattice_is_root_lattice(h: &IsotropicSubgroup, limits: &Limits) -> Result<bool> {
    let g = h.parent();
    let rc = root_classes(h, limits)?;
    let by_lifts = span(g, &rc).len() == h.order();
    let o = overlattice_from(h)?;
    let by_span = roots::is_root_lattice(&o.lattice, limits)?;
    if by_lifts != by_span {
        return Err(Error::internal(format!(
            "root-overlattice routes disagree (lifts: {by_lifts}, span: {by_span})"
        )));
    }
    Ok(by_lifts)
}

/// Memoized root-class lookup over a whole discriminant group.
struct RootClassCache<'a> {
    g: &'a DiscriminantGroup,
    known: BTreeMap<u64, bool>,
}

impl<'a> RootClassCache<'a> {
    fn new(g: &'a DiscriminantGroup) -> Self {
        RootClassCache { g, known: BTreeMap::new() }
    }

    fn get(&mut self, x: &[u64], limits: &Limits) -> Result<bool> {
        let k = self.g.index_of(x);
        if let Some(&b) = self.known.get(&k) {
            return Ok(b);
        }
        let b = has_root_lift(self.g, x, limits)?;
        self.known.insert(k, b);
        Ok(b)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OverlatticeSurvey {
    pub admits_overlattice: bool,
    /// An isotropic element whose cyclic overlattice is not a root lattice.
    pub non_root_witness: Option<Element>,
}

/// Decides whether a root lattice admits an overlattice, and one that is
/// not a root lattice.
///
/// If `L'` is a non-root overlattice with subgroup `H`, any `x` in `H`
/// outside the span of the root classes gives a non-root overlattice
/// `L + <x>`. So it suffices to scan cyclic subgroups: `<x>` is a witness
/// when the multiples of `x` with norm `-2` lifts do not generate `<x>`.
pub fn survey_overlattices(l: &IntegerLattice, limits: &Limits) -> Result<OverlatticeSurvey> {
    let g = DiscriminantGroup::new(l)?;
    let iso = isotropic_elements(&g, limits)?;
    let mut cache = RootClassCache::new(&g);
    let mut witness = None;
    for x in iso.iter().skip(1) {
        let ord = g.order_of(x);
        // the root classes k x generate <gcd(ord, k, ...) x>
        let mut sub = ord;
        for k in 1..ord {
            let y = g.scale(x, k);
            if cache.get(&y, limits)? {
                sub = sub.gcd(&k);
                if sub == 1 {
                    break;
                }
            }
        }
        if sub != 1 {
            witness = Some(x.clone());
            break;
        }
    }
    Ok(OverlatticeSurvey {
        admits_overlattice: iso.len() > 1,
        non_root_witness: witness,
    })
}

#[derive(Clone, Debug)]
pub struct ThresholdRow {
    pub r: usize,
    pub admits_overlattice: bool,
    pub admits_non_root: bool,
    /// Group too large for the cap; the row carries no information.
    pub skipped: bool,
}

#[derive(Clone, Debug)]
pub struct ThresholdReport {
    pub p: u64,
    pub rows: Vec<ThresholdRow>,
    pub overlattice_threshold: Option<usize>,
    pub non_root_threshold: Option<usize>,
    pub passed: bool,
    pub partial: bool,
}

/// Known thresholds `(r_overlattice, r_non_root)` for `A_{p-1}^r`.
pub fn expected_thresholds(p: u64) -> Option<(usize, usize)> {
    match p {
        2 => Some((4, 8)),
        3 => Some((3, 6)),
        5 => Some((2, 4)),
        _ => None,
    }
}

/// Scans `A_{p-1}^r` for `r = 1..=r_max`.
pub fn lemma45_scan(p: u64, r_max: usize, limits: &Limits) -> Result<ThresholdReport> {
    if !is_prime(p) {
        return Err(Error::domain(format!("{p} is not prime")));
    }
    let a = AdeType::a(p as usize - 1)?;
    let mut rows = Vec::new();
    for r in 1..=r_max {
        let l = make_root_lattice(&vec![a; r]);
        match survey_overlattices(&l, limits) {
            Ok(s) => rows.push(ThresholdRow {
                r,
                admits_overlattice: s.admits_overlattice,
                admits_non_root: s.non_root_witness.is_some(),
                skipped: false,
            }),
            Err(Error::Resource { .. }) => rows.push(ThresholdRow {
                r,
                admits_overlattice: false,
                admits_non_root: false,
                skipped: true,
            }),
            Err(e) => return Err(e),
        }
    }
    let partial = rows.iter().any(|r| r.skipped);
    let passed = match expected_thresholds(p) {
        Some((t1, t2)) => rows
            .iter()
            .filter(|row| !row.skipped)
            .all(|row| row.admits_overlattice == (row.r >= t1) && row.admits_non_root == (row.r >= t2)),
        None => true,
    };
    let (t1, t2) = expected_thresholds(p).unzip();
    Ok(ThresholdReport {
        p,
        rows,
        overlattice_threshold: t1,
        non_root_threshold: t2,
        passed,
        partial,
    })
}

#[derive(Clone, Debug)]
pub struct NoOverlatticeRow {
    pub name: String,
    pub isotropic_nonzero: usize,
}

#[derive(Clone, Debug)]
pub struct NoOverlatticeReport {
    pub rows: Vec<NoOverlatticeRow>,
}

impl NoOverlatticeReport {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(|r| r.isotropic_nonzero == 0)
    }
}

/// `A6`, `A6+A6`, `A10`, `A12` have no non-zero isotropic element.
pub fn no_overlattice_check(limits: &Limits) -> Result<NoOverlatticeReport> {
    let cases: [&[usize]; 4] = [&[6], &[6, 6], &[10], &[12]];
    let mut rows = Vec::new();
    for c in cases {
        let types: Vec<AdeType> = c.iter().map(|&n| AdeType::a(n)).collect::<Result<_>>()?;
        let g = DiscriminantGroup::new(&make_root_lattice(&types))?;
        let iso = isotropic_elements(&g, limits)?;
        rows.push(NoOverlatticeRow {
            name: fmt_ade_multiset(&types),
            isotropic_nonzero: iso.len() - 1,
        });
    }
    Ok(NoOverlatticeReport { rows })
}

/// All multisets of ADE types with total rank in `1..=max_rank`, each sorted.
pub fn ade_multisets(max_rank: usize) -> Vec<Vec<AdeType>> {
    let types = AdeType::all_up_to_rank(max_rank);
    let mut out = Vec::new();
    fn rec(types: &[AdeType], start: usize, left: usize, cur: &mut Vec<AdeType>, out: &mut Vec<Vec<AdeType>>) {
        if !cur.is_empty() {
            out.push(cur.clone());
        }
        for i in start..types.len() {
            if types[i].rank() <= left {
                cur.push(types[i]);
                rec(types, i, left - types[i].rank(), cur, out);
                cur.pop();
            }
        }
    }
    rec(&types, 0, max_rank, &mut Vec::new(), &mut out);
    out.sort_by(|a, b| {
        let ra: usize = a.iter().map(|t| t.rank()).sum();
        let rb: usize = b.iter().map(|t| t.rank()).sum();
        ra.cmp(&rb).then_with(|| a.cmp(b))
    });
    out
}

#[derive(Clone, Debug)]
pub struct CatalogSweep {
    pub lattices_checked: usize,
    pub with_overlattice: usize,
    /// Root lattices of rank below 8 with a non-root overlattice.
    pub counterexamples: Vec<String>,
    /// Rank at least 8 with a non-root overlattice (expected, not failures).
    pub boundary_cases: Vec<String>,
}

impl CatalogSweep {
    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

/// Checks that every overlattice of every root lattice of rank at most
/// `max_rank` (capped at 12) is again a root lattice below rank 8.
pub fn prop47_catalog_check(max_rank: usize, limits: &Limits) -> Result<CatalogSweep> {
    let max_rank = max_rank.min(12);
    let mut sweep = CatalogSweep {
        lattices_checked: 0,
        with_overlattice: 0,
        counterexamples: vec![],
        boundary_cases: vec![],
    };
    for m in ade_multisets(max_rank) {
        let l = make_root_lattice(&m);
        let s = match survey_overlattices(&l, limits) {
            Ok(s) => s,
            Err(Error::Resource { .. }) => continue,
            Err(e) => return Err(e),
        };
        sweep.lattices_checked += 1;
        if s.admits_overlattice {
            sweep.with_overlattice += 1;
        }
        if s.non_root_witness.is_some() {
            let rank: usize = m.iter().map(|t| t.rank()).sum();
            if rank < 8 {
                sweep.counterexamples.push(fmt_ade_multiset(&m));
            } else {
                sweep.boundary_cases.push(fmt_ade_multiset(&m));
            }
        }
    }
    Ok(sweep)
}

/// The overlattice obtained by adjoining explicit glue vectors (in
/// coordinates of `l`).
pub fn overlattice_by_glue(l: &IntegerLattice, glue: &[LatticeVector], limits: &Limits) -> Result<(IsotropicSubgroup, OverlatticeResult)> {
    let g = Arc::new(DiscriminantGroup::new(l)?);
    let gens = glue.iter().map(|v| g.class_of(v)).collect::<Result<Vec<_>>>()?;
    let h = IsotropicSubgroup::generated_by(g, &gens, limits)?;
    let o = overlattice_from(&h)?;
    Ok((h, o))
}

/// Whether `v` (integer ambient coordinates) is divisible by `k` in the
/// ambient lattice.
pub fn is_divisible(v: &[Int], k: i64) -> bool {
    divide_if_divisible(v, k).is_some()
}

/// Common denominator of a list of glue vectors.
pub fn glue_exponent(glue: &[LatticeVector]) -> Int {
    lcm_of_denominators(glue.iter().flat_map(|v| v.coords()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use crate::lattice::make_ade;

    fn t(s: &str) -> AdeType {
        s.parse().unwrap()
    }

    fn group(types: &[AdeType]) -> Arc<DiscriminantGroup> {
        Arc::new(DiscriminantGroup::new(&make_root_lattice(types)).unwrap())
    }

    #[test]
    fn isotropic_elements_of_small_groups() {
        let lim = Limits::default();
        let g = group(&[t("A1"); 4]);
        assert_eq!(isotropic_elements(&g, &lim).unwrap(), vec![vec![0; 4], vec![1; 4]]);
        let g = group(&[t("A6")]);
        assert_eq!(isotropic_elements(&g, &lim).unwrap().len(), 1);
        let u = DiscriminantGroup::new(&crate::lattice::make_hyperbolic()).unwrap();
        assert_eq!(isotropic_elements(&u, &lim).unwrap(), vec![Vec::<u64>::new()]);
    }

    #[test]
    fn a2_e6_has_two_order_three_subgroups() {
        let lim = Limits::default();
        let g = group(&[t("A2"), t("E6")]);
        let hs = isotropic_subgroups(&g, &lim).unwrap();
        assert_eq!(hs.len(), 3);
        assert_eq!(hs[0].order(), 1);
        for h in &hs[1..] {
            assert_eq!(h.order(), 3);
            let o = overlattice_from(h).unwrap();
            assert!(o.lattice.is_unimodular() && o.lattice.is_even());
            assert_eq!(roots::enumerate_roots(&o.lattice, &lim).unwrap().count(), 240);
        }
    }

    #[test]
    fn a1x8_has_the_all_ones_subgroup() {
        let g = group(&[t("A1"); 8]);
        let hs = isotropic_subgroups(&g, &Limits::default()).unwrap();
        assert!(hs.iter().any(|h| h.order() == 2 && h.generators() == [vec![1u64; 8]]));
    }

    #[test]
    fn d4_from_four_a1() {
        let lim = Limits::default();
        let l = make_root_lattice(&[t("A1"); 4]);
        let half = LatticeVector::new(vec![rat(1, 2); 4]);
        let (h, o) = overlattice_by_glue(&l, &[half], &lim).unwrap();
        assert_eq!(o.index, 2);
        assert_eq!(o.lattice.discriminant(), Int::from(4));
        let rs = roots::enumerate_roots(&o.lattice, &lim).unwrap();
        assert_eq!(rs.count(), 24);
        assert_eq!(rs.components, vec![t("D4")]);
        assert!(overlattice_is_root_lattice(&h, &lim).unwrap());
    }

    #[test]
    fn a1x8_all_ones_is_not_root() {
        let lim = Limits::default();
        let l = make_root_lattice(&[t("A1"); 8]);
        let (h, o) = overlattice_by_glue(&l, &[LatticeVector::new(vec![rat(1, 2); 8])], &lim).unwrap();
        assert!(!overlattice_is_root_lattice(&h, &lim).unwrap());
        assert!(!roots::is_root_lattice(&o.lattice, &lim).unwrap());
        let span = roots::root_span(&o.lattice, &lim).unwrap();
        assert_eq!(span.rank(), 8);
        assert_eq!(span.sublattice().unwrap().discriminant(), Int::from(256));
    }

    #[test]
    fn ten_sequence_overlattice_is_unimodular() {
        let g = IntMatrix::from_fn(10, 10, |i, j| Int::from((i != j) as i64));
        let l = IntegerLattice::new(g).unwrap();
        let h = LatticeVector::new(vec![rat(1, 3); 10]);
        let (_, o) = overlattice_by_glue(&l, &[h], &Limits::default()).unwrap();
        assert_eq!(o.index, 3);
        assert!(o.lattice.is_unimodular());
        assert!(o.lattice.is_even());
        let s = o.lattice.signature();
        assert_eq!((s.n_plus, s.n_minus), (1, 9));
    }

    #[test]
    fn non_isotropic_glue_is_rejected() {
        let l = make_ade(t("A3"));
        let e = LatticeVector::new(vec![rat(1, 4), rat(2, 4), rat(3, 4)]);
        assert!(matches!(overlattice_by_glue(&l, &[e], &Limits::default()), Err(Error::Domain(_))));
    }

    #[test]
    fn saturation_of_a_summand_and_of_a_doubled_vector() {
        let l = make_root_lattice(&[t("A2"), t("A1")]);
        let e = Embedding::coordinate(l.clone(), &[0, 1]).unwrap();
        assert!(is_primitive(&e).unwrap());
        let e2 = Embedding::from_i64(l, &[&[2, 0, 0], &[0, 1, 0]]).unwrap();
        let s = saturation(&e2).unwrap();
        assert_eq!(s.index, Int::from(2));
        assert_eq!(s.quotient, vec![Int::from(2)]);
        assert!(is_primitive(&s.embedding).unwrap());
    }

    #[test]
    fn minimal_glue_in_a3() {
        let e = LatticeVector::new(vec![rat(1, 4), rat(2, 4), rat(3, 4)]);
        let v = minimal_glue_vector(&e.scale(&rat(2, 1)), 2).unwrap();
        assert_eq!(v, LatticeVector::new(vec![rat(1, 2), rat(0, 1), rat(1, 2)]));
        let l = make_ade(t("A3"));
        let s = concentration_support(&l, &v).unwrap();
        assert_eq!(concentration_rank(&s, 2), Some(2));
        assert!(minimal_glue_vector(&e, 2).is_err());
        assert!(minimal_glue_vector(&e, 4).is_err());
        assert!(minimal_glue_vector(&LatticeVector::from_i64(&[3, -1, 2]), 3).unwrap().is_zero());
    }

    #[test]
    fn multisets_are_counted() {
        let m = ade_multisets(4);
        // A1 | A2, A1A1 | A3, A2A1, A1^3 | A4, D4, A3A1, A2A2, A2A1A1, A1^4
        assert_eq!(m.len(), 1 + 2 + 3 + 6);
    }

    #[test]
    fn lemma45_small_p2() {
        let r = lemma45_scan(2, 5, &Limits::default()).unwrap();
        assert!(r.passed, "{r:?}");
        assert!(!r.rows[2].admits_overlattice && r.rows[3].admits_overlattice);
    }
}
