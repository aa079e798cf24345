//! End-to-end checks: the isotropic ten-sequence model and its candidate
//! curves, the `A2 + E6` gluing chain, instance checkers for the
//! over-exceptional lattice of Enriques surfaces and their K3 covers, and
//! the 19-curve configuration on `U + E8 + E8`.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::arith::{rat, Int, Rat};
use crate::catalog::ten_sequence_gram;
use crate::curvegraph::{self, KodairaType};
use crate::discform::DiscriminantGroup;
use crate::error::{Error, Result};
use crate::glue::{self, OverlatticeResult};
use crate::lattice::{direct_sum, fmt_ade_multiset, make_ade, make_hyperbolic, AdeType, Embedding, IntegerLattice, LatticeVector};
use crate::matrix::IntMatrix;
use crate::roots;
use crate::Limits;

/// One named comparison in a report.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub expected: String,
    pub computed: String,
    pub passed: bool,
}

impl Check {
    pub fn new(name: impl Into<String>, expected: impl fmt::Display, computed: impl fmt::Display) -> Self {
        let (expected, computed) = (expected.to_string(), computed.to_string());
        Check {
            name: name.into(),
            passed: expected == computed,
            expected,
            computed,
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed { "ok" } else { "MISMATCH" };
        write!(f, "{tag:>8}  {}: expected {}, got {}", self.name, self.expected, self.computed)
    }
}

fn all_passed(cs: &[Check]) -> bool {
    cs.iter().all(|c| c.passed)
}

fn first_failure(what: &str, cs: &[Check]) -> Result<()> {
    match cs.iter().find(|c| !c.passed) {
        None => Ok(()),
        Some(c) => Err(Error::verification(format!("{what}: {c}"))),
    }
}

fn types_string(ts: &[AdeType]) -> String {
    fmt_ade_multiset(ts)
}

fn labels_string(ls: &[String]) -> String {
    format!("{{{}}}", ls.join(","))
}

// ---------------------------------------------------------------------------
// ten-sequence model

#[derive(Clone, Debug)]
pub struct TenSequenceModel {
    /// Gram `1 - delta_ij` on `F1..F4, E1..E6`.
    pub lattice: IntegerLattice,
    /// `H = (F1 + ... + F4 + E1 + ... + E6) / 3`.
    pub h_vector: LatticeVector,
    /// The index-3 overlattice generated by `H`.
    pub overlattice: OverlatticeResult,
}

impl TenSequenceModel {
    pub fn f(&self, i: usize) -> LatticeVector {
        assert!((1..=4).contains(&i));
        LatticeVector::unit(10, i - 1)
    }

    pub fn e(&self, j: usize) -> LatticeVector {
        assert!((1..=6).contains(&j));
        LatticeVector::unit(10, 3 + j)
    }

    pub fn dot(&self, a: &LatticeVector, b: &LatticeVector) -> Rat {
        self.lattice.inner_product(a, b).expect("length 10")
    }

    /// `R_j = E_{j+1} - E_j`.
    pub fn r_j(&self, j: usize) -> LatticeVector {
        self.e(j + 1).sub(&self.e(j))
    }

    /// `R_{j1,j2,j3} = H - E_{j1} - E_{j2} - E_{j3}`.
    pub fn r_triple(&self, t: [usize; 3]) -> LatticeVector {
        t.iter().fold(self.h_vector.clone(), |acc, &j| acc.sub(&self.e(j)))
    }

    /// `R = 2H - E1 - ... - E6`.
    pub fn r(&self) -> LatticeVector {
        (1..=6).fold(self.h_vector.scale(&rat(2, 1)), |acc, j| acc.sub(&self.e(j)))
    }
}

pub fn build_ten_sequence_model(limits: &Limits) -> Result<TenSequenceModel> {
    let lattice = IntegerLattice::new(ten_sequence_gram())?;
    let h_vector = LatticeVector::new(vec![rat(1, 3); 10]);
    let (_, overlattice) = glue::overlattice_by_glue(&lattice, &[h_vector.clone()], limits)?;
    let o = &overlattice.lattice;
    let sig = o.signature();
    if lattice.discriminant() != Int::from(9)
        || overlattice.index != 3
        || !o.is_even()
        || !o.is_unimodular()
        || (sig.n_plus, sig.n_minus) != (1, 9)
    {
        return Err(Error::internal("ten-sequence overlattice is not even unimodular of signature (1, 9)"));
    }
    Ok(TenSequenceModel {
        lattice,
        h_vector,
        overlattice,
    })
}

/// All 3-element subsets of `{1, ..., 6}`, lexicographically.
pub fn triples() -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for a in 1..=6 {
        for b in a + 1..=6 {
            for c in b + 1..=6 {
                out.push([a, b, c]);
            }
        }
    }
    out
}

#[derive(Clone, Debug)]
pub struct IdentityRow {
    pub identity: &'static str,
    pub cases: usize,
    /// Failing cases, each naming the classes involved.
    pub failures: Vec<String>,
}

impl IdentityRow {
    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Clone, Debug)]
pub struct Lemma53Report {
    pub rows: Vec<IdentityRow>,
}

impl Lemma53Report {
    /// Every identity in the displayed form.
    pub fn passed(&self) -> bool {
        self.rows.iter().filter(|r| !r.identity.starts_with("corrected")).all(IdentityRow::holds)
    }

    /// With `R_T.R_j` replaced by `[j+1 in T] - [j in T]`.
    pub fn passed_with_correction(&self) -> bool {
        self.rows
            .iter()
            .filter(|r| r.identity != "R_T.R_j = #{j+1,T} - #{j,T}")
            .all(IdentityRow::holds)
    }

    pub fn check(&self) -> Result<()> {
        match self.rows.iter().find(|r| !r.holds() && !r.identity.starts_with("corrected")) {
            None => Ok(()),
            Some(r) => Err(Error::verification(format!("{}: {}", r.identity, r.failures[0]))),
        }
    }
}

fn tname(t: &[usize; 3]) -> String {
    format!("R_{}{}{}", t[0], t[1], t[2])
}

fn row(identity: &'static str, cases: impl IntoIterator<Item = (String, Rat, Rat)>) -> IdentityRow {
    let mut n = 0;
    let mut failures = Vec::new();
    for (name, want, got) in cases {
        n += 1;
        if want != got {
            failures.push(format!("{name}: expected {want}, got {got}"));
        }
    }
    IdentityRow {
        identity,
        cases: n,
        failures,
    }
}

pub fn lemma53_table(m: &TenSequenceModel) -> Lemma53Report {
    let ts = triples();
    let r = m.r();
    let int = |k: i64| Rat::from_integer(Int::from(k));
    let mut rows = Vec::new();

    let mut norms: Vec<(String, Rat, Rat)> = Vec::new();
    norms.push(("R".into(), int(-2), m.dot(&r, &r)));
    for j in 1..=5 {
        let v = m.r_j(j);
        norms.push((format!("R_{j}"), int(-2), m.dot(&v, &v)));
    }
    for t in &ts {
        let v = m.r_triple(*t);
        norms.push((tname(t), int(-2), m.dot(&v, &v)));
    }
    rows.push(row("C.C = -2", norms));

    rows.push(row(
        "R.E_j = 1",
        (1..=6).map(|j| (format!("R.E_{j}"), int(1), m.dot(&r, &m.e(j)))),
    ));
    rows.push(row(
        "R_T.E_j = [j in T]",
        ts.iter().flat_map(|t| {
            (1..=6).map(move |j| {
                (
                    format!("{}.E_{j}", tname(t)),
                    int(t.contains(&j) as i64),
                    m.dot(&m.r_triple(*t), &m.e(j)),
                )
            })
        }),
    ));
    rows.push(row(
        "R.R_j = 0",
        (1..=5).map(|j| (format!("R.R_{j}"), int(0), m.dot(&r, &m.r_j(j)))),
    ));
    rows.push(row(
        "R.R_T = -1",
        ts.iter().map(|t| (format!("R.{}", tname(t)), int(-1), m.dot(&r, &m.r_triple(*t)))),
    ));
    let mut rr = Vec::new();
    for j in 1..=5usize {
        for k in j + 1..=5 {
            rr.push((format!("R_{j}.R_{k}"), int((k - j == 1) as i64), m.dot(&m.r_j(j), &m.r_j(k))));
        }
    }
    rows.push(row("R_j.R_j' = [|j-j'| = 1]", rr));

    let count = |xs: &[usize]| xs.iter().collect::<BTreeSet<_>>().len() as i64;
    let mut printed = Vec::new();
    let mut corrected = Vec::new();
    for t in &ts {
        for j in 1..=5usize {
            let got = m.dot(&m.r_triple(*t), &m.r_j(j));
            let name = format!("{}.R_{j}", tname(t));
            let want = count(&[j + 1, t[0], t[1], t[2]]) - count(&[j, t[0], t[1], t[2]]);
            printed.push((name.clone(), int(want), got.clone()));
            let fixed = t.contains(&(j + 1)) as i64 - t.contains(&j) as i64;
            corrected.push((name, int(fixed), got));
        }
    }
    rows.push(row("R_T.R_j = #{j+1,T} - #{j,T}", printed));
    rows.push(row("corrected R_T.R_j = [j+1 in T] - [j in T]", corrected));

    let mut pairs = Vec::new();
    for (a, s) in ts.iter().enumerate() {
        for t in &ts[a + 1..] {
            let all = [s[0], s[1], s[2], t[0], t[1], t[2]];
            pairs.push((
                format!("{}.{}", tname(s), tname(t)),
                int(count(&all) - 5),
                m.dot(&m.r_triple(*s), &m.r_triple(*t)),
            ));
        }
    }
    rows.push(row("R_T.R_T' = #{T, T'} - 5", pairs));
    Lemma53Report { rows }
}

// ---------------------------------------------------------------------------
// A2 + E6 inside E8

#[derive(Clone, Debug)]
pub struct Lemma52Report {
    pub checks: Vec<Check>,
    /// Order-3 isotropic subgroups of the discriminant group of `A2 + E6`.
    pub subgroups: usize,
    /// Their orbits under the diagram automorphism of `A2`.
    pub orbits: usize,
}

impl Lemma52Report {
    pub fn passed(&self) -> bool {
        all_passed(&self.checks)
    }

    pub fn check(&self) -> Result<()> {
        first_failure("A2 + E6 chain", &self.checks)
    }
}

fn complement_checks(prefix: &str, e: &Embedding, limits: &Limits, checks: &mut Vec<Check>) -> Result<()> {
    let c = e.orthogonal_complement()?;
    let l = c.sublattice()?;
    checks.push(Check::new(format!("{prefix} complement rank"), 6, l.rank()));
    checks.push(Check::new(format!("{prefix} complement discriminant"), 3, l.discriminant()));
    let rs = roots::enumerate_roots(&l, limits)?;
    checks.push(Check::new(format!("{prefix} complement roots"), 72, rs.count()));
    checks.push(Check::new(format!("{prefix} complement type"), "E6", types_string(&rs.components)));
    let g = DiscriminantGroup::new(&l)?;
    let qs: BTreeSet<String> = g
        .elements(limits)?
        .iter()
        .filter(|x| x.iter().any(|&a| a != 0))
        .map(|x| g.q_value(x).to_string())
        .collect();
    checks.push(Check::new(
        format!("{prefix} complement q on non-zero classes"),
        "2/3",
        qs.into_iter().collect::<Vec<_>>().join(","),
    ));
    Ok(())
}

pub fn lemma52_verify(limits: &Limits) -> Result<Lemma52Report> {
    let mut checks = Vec::new();

    // (a) F1..F4 span U + A2
    let f4 = IntegerLattice::new(IntMatrix::from_fn(4, 4, |i, j| Int::from((i != j) as i64)))?;
    let b = IntMatrix::from_i64(&[&[1, 0, 0, 0], &[0, 1, 0, 0], &[1, 1, -1, 0], &[0, 0, 1, -1]]);
    checks.push(Check::new("(a) change of basis |determinant|", 1, crate::arith::abs_int(&b.determinant()?)));
    let gram = crate::matrix::congruence(f4.gram(), &b);
    let u_a2 = direct_sum(&[make_hyperbolic(), make_ade(AdeType::a(2)?)])?;
    checks.push(Check::new(
        "(a) Gram of F1, F2, F1+F2-F3, F3-F4",
        fmt_matrix(u_a2.gram()),
        fmt_matrix(&gram),
    ));

    // (b) index-3 overlattices of A2 + E6
    let a2e6 = direct_sum(&[make_ade(AdeType::a(2)?), make_ade(AdeType::e(6)?)])?;
    let g = Arc::new(DiscriminantGroup::new(&a2e6)?);
    let subs: Vec<_> = glue::isotropic_subgroups(&g, limits)?
        .into_iter()
        .filter(|h| h.order() == 3)
        .collect();
    let swap = |v: &LatticeVector| {
        let mut c = v.coords().to_vec();
        c.swap(0, 1);
        LatticeVector::new(c)
    };
    let mut reps = BTreeSet::new();
    for h in &subs {
        let mut own = h.elements().to_vec();
        own.sort();
        let mut img = h
            .elements()
            .iter()
            .map(|x| g.class_of(&swap(&g.lift(x))))
            .collect::<Result<Vec<_>>>()?;
        img.sort();
        reps.insert(own.min(img));
    }
    let mut first: Option<OverlatticeResult> = None;
    for (k, h) in subs.iter().enumerate() {
        let o = glue::overlattice_from(h)?;
        let l = &o.lattice;
        let rs = roots::enumerate_roots(l, limits)?;
        let tag = format!("(b) overlattice {}", k + 1);
        checks.push(Check::new(format!("{tag} index"), 3, o.index));
        checks.push(Check::new(format!("{tag} even"), true, l.is_even()));
        checks.push(Check::new(format!("{tag} discriminant"), 1, l.discriminant()));
        checks.push(Check::new(format!("{tag} roots"), 240, rs.count()));
        checks.push(Check::new(format!("{tag} type"), "E8", types_string(&rs.components)));
        first.get_or_insert(o);
    }
    checks.push(Check::new("(b) overlattices up to the A2 automorphism", 1, reps.len()));
    let o = first.ok_or_else(|| Error::verification("A2 + E6 has no index-3 overlattice"))?;

    // (c) the primitive A2 in E8 and its complement
    let a2_rows: Vec<Vec<Int>> = o.inclusion.basis_images().into_iter().take(2).collect();
    let a2 = Embedding::new(o.lattice.clone(), a2_rows.clone())?;
    checks.push(Check::new("(c) A2 primitive in E8", true, glue::is_primitive(&a2)?));
    complement_checks("(c)", &a2, limits, &mut checks)?;

    // (d) U + A2 inside U + E8, once through the glued E8 and once through
    // the ten-sequence overlattice
    let ambient = direct_sum(&[make_hyperbolic(), o.lattice.clone()])?;
    let mut rows: Vec<Vec<Int>> = (0..2)
        .map(|i| (0..10).map(|j| Int::from((i == j) as i64)).collect())
        .collect();
    for r in &a2_rows {
        let mut v = vec![Int::zero(); 2];
        v.extend(r.iter().cloned());
        rows.push(v);
    }
    complement_checks("(d) U+A2 in U+E8", &Embedding::new(ambient, rows)?, limits, &mut checks)?;
    let ten = build_ten_sequence_model(limits)?;
    let f_rows: Vec<Vec<Int>> = ten.overlattice.inclusion.basis_images().into_iter().take(4).collect();
    let f_span = Embedding::new(ten.overlattice.lattice.clone(), f_rows)?;
    complement_checks("(d) F1..F4 in the ten-sequence lattice", &f_span, limits, &mut checks)?;

    Ok(Lemma52Report {
        checks,
        subgroups: subs.len(),
        orbits: reps.len(),
    })
}

fn fmt_matrix(m: &IntMatrix) -> String {
    let rows: Vec<String> = (0..m.rows())
        .map(|i| {
            let r: Vec<String> = m.row(i).iter().map(|x| x.to_string()).collect();
            format!("[{}]", r.join(","))
        })
        .collect();
    format!("[{}]", rows.join(","))
}

// ---------------------------------------------------------------------------
// instance checkers

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ForbiddenConfiguration {
    /// Four pairwise orthogonal generators.
    FourDisjoint(Vec<usize>),
    /// Six generators spanning `A2^3`.
    A2Cubed(Vec<usize>),
    /// Six generators spanning `E6`.
    E6(Vec<usize>),
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    go(0, n, k, &mut cur, &mut out);
    out
}

fn check_root_generators(e: &Embedding) -> Result<IntMatrix> {
    let g = e.induced_gram();
    if (0..g.rows()).any(|i| g[(i, i)] != Int::from(-2)) {
        return Err(Error::domain("generators must have norm -2"));
    }
    if g.rows() > 0 && !e.sublattice()?.is_negative_definite() {
        return Err(Error::domain("generators do not span a negative definite lattice"));
    }
    Ok(g)
}

/// Configurations among the generators (taken as curve classes) that an
/// over-exceptional lattice of an Enriques surface cannot contain.
pub fn forbidden_configuration_scan(eprime: &Embedding) -> Result<Vec<ForbiddenConfiguration>> {
    let g = check_root_generators(eprime)?;
    let n = g.rows();
    let mut out = Vec::new();
    for s in subsets(n, 4) {
        if s.iter().enumerate().all(|(a, &i)| s[a + 1..].iter().all(|&j| g[(i, j)].is_zero())) {
            out.push(ForbiddenConfiguration::FourDisjoint(s));
        }
    }
    if n >= 6 {
        let a2 = AdeType::a(2)?;
        let e6 = AdeType::e(6)?;
        for s in subsets(n, 6) {
            let sub = g.submatrix(&s, &s);
            if roots::root_basis_has_type(&sub, &[a2, a2, a2]) {
                out.push(ForbiddenConfiguration::A2Cubed(s));
            } else if roots::root_basis_has_type(&sub, &[e6]) {
                out.push(ForbiddenConfiguration::E6(s));
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Debug)]
pub struct TheoremCReport {
    pub rank_ok: bool,
    pub primitive_in_num_s: bool,
    pub pullback_primitive: bool,
    pub forbidden: Vec<ForbiddenConfiguration>,
}

impl TheoremCReport {
    pub fn all_hold(&self) -> bool {
        self.rank_ok && self.primitive_in_num_s && self.pullback_primitive && self.forbidden.is_empty()
    }
}

/// Evaluates on one instance: rank at most 5, primitivity in `Num(S)`,
/// primitivity of the doubled pullback in `Pic(X)`, and the forbidden
/// configurations.
pub fn theorem_c_predicates(eprime: &Embedding, pullback: &Embedding) -> Result<TheoremCReport> {
    check_root_generators(eprime)?;
    check_root_generators(pullback)?;
    if pullback.rank() != 2 * eprime.rank() {
        return Err(Error::domain("pullback must have twice the rank"));
    }
    Ok(TheoremCReport {
        rank_ok: eprime.rank() <= 5,
        primitive_in_num_s: glue::is_primitive(eprime)?,
        pullback_primitive: glue::is_primitive(pullback)?,
        forbidden: forbidden_configuration_scan(eprime)?,
    })
}

/// Rank at most 10 and primitive.
pub fn cor56_check(eprime_x: &Embedding) -> Result<bool> {
    Ok(eprime_x.rank() <= 10 && glue::is_primitive(eprime_x)?)
}

/// `U + E8^k` in the basis `u1, u2, E8, ..., E8`.
pub fn u_plus_e8(k: usize) -> IntegerLattice {
    let mut parts = vec![make_hyperbolic()];
    parts.extend((0..k).map(|_| make_ade(AdeType::e(8).expect("E8"))));
    direct_sum(&parts).expect("non-empty")
}

/// Vectors of `U + E8^k` from coefficient lists over simple roots of one
/// `E8` summand (0-based `summand`).
pub fn e8_vectors(k: usize, summand: usize, coeffs: &[[i64; 8]]) -> Vec<Vec<Int>> {
    coeffs
        .iter()
        .map(|c| {
            let mut v = vec![Int::zero(); 2 + 8 * k];
            for (i, &x) in c.iter().enumerate() {
                v[2 + 8 * summand + i] = Int::from(x);
            }
            v
        })
        .collect()
}

/// Four orthogonal roots in the `D4` around the branch node of `E8`: three
/// of its neighbours and the highest root of that `D4`.
pub const E8_A1_4: [[i64; 8]; 4] = [
    [0, 1, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 1, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 1],
    [0, 1, 2, 1, 0, 0, 0, 1],
];

// ---------------------------------------------------------------------------
// the 19-curve configuration

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Remark57Outcome {
    pub configurations: Vec<(KodairaType, Vec<String>)>,
    pub orthogonal: Vec<String>,
    pub span_type: String,
    pub saturation_index: Int,
    pub quotient: Vec<Int>,
    pub concentration: Vec<String>,
    pub concentration_type: String,
    pub bold_sum_divisible: bool,
    pub saturation_roots: usize,
    pub saturation_is_root_lattice: bool,
    pub primitive_rank10_check: bool,
}

#[derive(Clone, Debug)]
pub struct Remark57Report {
    pub checks: Vec<Check>,
    pub outcome: Remark57Outcome,
    pub swapped: Remark57Outcome,
}

impl Remark57Report {
    pub fn passed(&self) -> bool {
        all_passed(&self.checks)
    }

    pub fn check(&self) -> Result<()> {
        first_failure("U + E8 + E8 configuration", &self.checks)
    }
}

fn remark57_run(swap: bool, limits: &Limits) -> Result<Remark57Outcome> {
    let g = curvegraph::k3_u_e8_e8_graph();
    let configs = curvegraph::find_elliptic_configurations(&g, limits)?;
    let fibre = configs
        .iter()
        .find(|c| c.kodaira == KodairaType::IIStar)
        .ok_or_else(|| Error::verification("no II* configuration"))?;
    let real = curvegraph::realize_in_unimodular(&g, fibre, swap, limits)?;
    let orth = curvegraph::orthogonal_vertex_set(&g, &configs)?;
    let span_type = curvegraph::vertex_set_type(&g, &orth.vertices)
        .map(|t| types_string(&t))
        .unwrap_or_else(|| "not a root basis".into());
    let emb = real.embedding_of(&orth.vertices)?;
    let sat = glue::saturation(&emb)?;
    let (concentration, concentration_type) = match sat.glue.as_slice() {
        [v] if sat.index == Int::from(2) => {
            let m = glue::minimal_glue_vector(v, 2)?;
            let sub = emb.sublattice()?;
            let support = glue::concentration_support(&sub, &m)?;
            let names: Vec<String> = m.support().iter().map(|&i| g.label(orth.vertices[i]).to_string()).collect();
            let t = match glue::concentration_rank(&support, 2) {
                Some(r) => types_string(&vec![AdeType::a(1)?; r]),
                None => "not A1^r".into(),
            };
            (names, t)
        }
        _ => (vec![], "n/a".into()),
    };
    let n = real.ambient.rank();
    let d: Vec<Int> = g.bold_vertices().iter().fold(vec![Int::zero(); n], |acc, &b| {
        acc.iter().zip(&real.classes[b]).map(|(x, y)| x + y).collect()
    });
    let sat_lattice = sat.embedding.sublattice()?;
    let rs = roots::enumerate_roots(&sat_lattice, limits)?;
    let span_index = roots::root_span_index(&sat_lattice, limits)?;
    Ok(Remark57Outcome {
        configurations: configs
            .iter()
            .map(|c| (c.kodaira, curvegraph::vertex_labels(&g, &c.support)))
            .collect(),
        orthogonal: curvegraph::vertex_labels(&g, &orth.vertices),
        span_type,
        saturation_index: sat.index.clone(),
        quotient: sat.quotient.clone(),
        concentration,
        concentration_type,
        bold_sum_divisible: glue::is_divisible(&d, 2),
        saturation_roots: rs.count(),
        saturation_is_root_lattice: span_index.map_or(false, |i| i.is_one()),
        primitive_rank10_check: cor56_check(&emb)?,
    })
}

pub fn remark57_pipeline(limits: &Limits) -> Result<Remark57Report> {
    let outcome = remark57_run(false, limits)?;
    let swapped = remark57_run(true, limits)?;
    let g = curvegraph::k3_u_e8_e8_graph();
    let bold = curvegraph::vertex_labels(&g, &g.bold_vertices());
    let count = |k: KodairaType| outcome.configurations.iter().filter(|(t, _)| *t == k).count();
    let kinds: Vec<String> = outcome.configurations.iter().map(|(t, _)| t.to_string()).collect();
    let checks = vec![
        Check::new("II* configurations", 2, count(KodairaType::IIStar)),
        Check::new("I12* configurations", 1, count(KodairaType::IStar(12))),
        Check::new("configurations in total", 3, kinds.len()),
        Check::new("orthogonal vertices", 16, outcome.orthogonal.len()),
        Check::new("span type", "D8+D8", &outcome.span_type),
        Check::new("saturation index", 2, &outcome.saturation_index),
        Check::new(
            "quotient",
            "Z/2",
            outcome.quotient.iter().map(|d| format!("Z/{d}")).collect::<Vec<_>>().join("+"),
        ),
        Check::new("concentration support", labels_string(&bold), labels_string(&outcome.concentration)),
        Check::new("concentration type", "A1+A1+A1+A1+A1+A1+A1+A1", &outcome.concentration_type),
        Check::new("bold sum divisible by 2", true, outcome.bold_sum_divisible),
        Check::new("roots of the saturation", 224, outcome.saturation_roots),
        Check::new("saturation is a root lattice", false, outcome.saturation_is_root_lattice),
        Check::new("rank and primitivity bound", false, outcome.primitive_rank10_check),
        Check::new("stable under swapping the E8 summands", true, outcome == swapped),
    ];
    Ok(Remark57Report {
        checks,
        outcome,
        swapped,
    })
}

// ---------------------------------------------------------------------------
// figure graphs

/// Orthogonal vertex sets against the printed bold sets, for the five
/// Enriques figures and the 19-curve graph.
pub fn figure_checks(limits: &Limits) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for ng in curvegraph::figure_catalog() {
        let g = &ng.graph;
        let configs = curvegraph::find_elliptic_configurations(g, limits)?;
        let orth = curvegraph::orthogonal_vertex_set(g, &configs)?;
        let expected = if g.len() == 19 {
            // every curve except the three labelled ones
            (0..g.len())
                .filter(|&v| !["R1", "S0", "R2"].contains(&g.label(v)))
                .collect()
        } else {
            g.bold_vertices()
        };
        out.push(Check::new(
            format!("{} orthogonal vertices", ng.name),
            labels_string(&curvegraph::vertex_labels(g, &expected)),
            labels_string(&curvegraph::vertex_labels(g, &orth.vertices)),
        ));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ten_sequence_basics() {
        let m = build_ten_sequence_model(&Limits::default()).unwrap();
        assert_eq!(m.lattice.discriminant(), Int::from(9));
        for j in 1..=6 {
            assert_eq!(m.dot(&m.h_vector, &m.e(j)), rat(3, 1));
        }
        assert_eq!(m.dot(&m.h_vector, &m.h_vector), rat(10, 1));
        let r = m.r();
        assert_eq!(m.dot(&r, &r), rat(-2, 1));
        assert_eq!(m.dot(&m.r_triple([1, 2, 3]), &m.r_triple([4, 5, 6])), rat(1, 1));
    }

    #[test]
    fn lemma53_rows() {
        let m = build_ten_sequence_model(&Limits::default()).unwrap();
        let rep = lemma53_table(&m);
        let pairs = rep.rows.iter().find(|r| r.identity.starts_with("R_T.R_T'")).unwrap();
        assert_eq!(pairs.cases, 190);
        assert!(pairs.holds());
        assert!(rep.passed_with_correction());
        let printed = rep.rows.iter().find(|r| r.identity.starts_with("R_T.R_j =")).unwrap();
        assert_eq!(printed.cases, 100);
        assert!(!printed.holds());
    }

    #[test]
    fn checkers_on_small_instances() {
        let l = u_plus_e8(1);
        let zero = Embedding::new(l.clone(), vec![]).unwrap();
        let r = theorem_c_predicates(&zero, &zero).unwrap();
        assert!(r.all_hold());
        assert!(cor56_check(&zero).unwrap());

        let a14 = Embedding::new(l, e8_vectors(1, 0, &E8_A1_4)).unwrap();
        let l2 = u_plus_e8(2);
        let mut doubled = e8_vectors(2, 0, &E8_A1_4);
        doubled.extend(e8_vectors(2, 1, &E8_A1_4));
        let pb = Embedding::new(l2, doubled).unwrap();
        let r = theorem_c_predicates(&a14, &pb).unwrap();
        assert!(r.rank_ok);
        assert!(!r.primitive_in_num_s);
        assert!(!r.pullback_primitive);
        assert_eq!(r.forbidden.len(), 1);
    }

    #[test]
    fn non_root_generators_rejected() {
        let l = u_plus_e8(1);
        let e = Embedding::new(l, vec![(0..10).map(|i| Int::from((i < 2) as i64)).collect()]).unwrap();
        assert!(theorem_c_predicates(&e, &e).is_err());
    }
}
