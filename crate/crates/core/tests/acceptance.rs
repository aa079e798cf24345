//! One line per acceptance criterion; exits non-zero if any criterion fails.

use std::collections::BTreeMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use latglue_core::arith::rat;
use latglue_core::catalog::{self, test_catalog};
use latglue_core::curvegraph::{self, CurveGraph};
use latglue_core::discform::{self, DiscriminantGroup};
use latglue_core::glue;
use latglue_core::lattice::{make_ade, AdeFamily};
use latglue_core::paperlab;
use latglue_core::roots;
use latglue_core::{AdeType, LatticeVector, Limits, Rat};

struct Verdict {
    passed: bool,
    detail: String,
}

fn verdict(passed: bool, detail: impl Into<String>) -> Verdict {
    Verdict { passed, detail: detail.into() }
}

fn within(t: Duration, secs: u64) -> bool {
    t <= Duration::from_secs(secs)
}

/// `x mod 2` in `[0, 2)`.
fn mod2(x: Rat) -> Rat {
    let two = rat(2, 1);
    let q = (&x / &two).floor();
    x - q * two
}

/// Multiset of q-values over the whole discriminant group, from the
/// standard descriptions of the ADE discriminant forms.
fn q_oracle(t: AdeType) -> Vec<Rat> {
    let n = t.index() as i64;
    let mut out: Vec<Rat> = match t.family() {
        AdeFamily::A => (0..=n).map(|k| mod2(rat(-k * k * n, n + 1))).collect(),
        AdeFamily::D if n % 2 == 1 => (0..4).map(|k| mod2(rat(-k * k * n, 4))).collect(),
        AdeFamily::D => vec![rat(0, 1), rat(1, 1), mod2(rat(-n, 4)), mod2(rat(-n, 4))],
        AdeFamily::E => match n {
            6 => (0..3).map(|k| mod2(rat(-4 * k * k, 3))).collect(),
            7 => vec![rat(0, 1), mod2(rat(-3, 2))],
            _ => vec![rat(0, 1)],
        },
    };
    out.sort();
    out
}

fn group_oracle(t: AdeType) -> Vec<u64> {
    let n = t.index() as u64;
    match t.family() {
        AdeFamily::A => vec![n + 1],
        AdeFamily::D if n % 2 == 1 => vec![4],
        AdeFamily::D => vec![2, 2],
        AdeFamily::E => match n {
            6 => vec![3],
            7 => vec![2],
            _ => vec![],
        },
    }
}

fn c1_table() -> Verdict {
    let t = Instant::now();
    let report = discform::verify_table1().unwrap();
    let mut bad = Vec::new();
    for row in &report.rows {
        let g = DiscriminantGroup::new(&make_ade(row.lattice)).unwrap();
        let mut qs: Vec<Rat> = g
            .elements(&Limits::default())
            .unwrap()
            .iter()
            .map(|x| g.q_value(x).value().clone())
            .collect();
        qs.sort();
        if !row.passed || g.invariant_factors() != group_oracle(row.lattice).as_slice() || qs != q_oracle(row.lattice) {
            bad.push(row.lattice.to_string());
        }
    }
    let el = t.elapsed();
    verdict(
        bad.is_empty() && report.rows.len() == 24 && within(el, 5),
        format!("{} lattices, mismatches [{}], {:.2?} (limit 5s)", report.rows.len(), bad.join(", "), el),
    )
}

fn c2_index_formula() -> Verdict {
    let t = Instant::now();
    let rep = catalog::index_formula_check(&test_catalog(), &Limits::default()).unwrap();
    let el = t.elapsed();
    verdict(
        rep.failures.is_empty() && rep.overlattices >= 50 && within(el, 10),
        format!("{} overlattices, {} failures, {:.2?} (limit 10s)", rep.overlattices, rep.failures.len(), el),
    )
}

fn c3_bijection() -> Verdict {
    let t = Instant::now();
    let rep = catalog::bijection_check(&test_catalog(), 3000, &Limits::default()).unwrap();
    let el = t.elapsed();
    verdict(
        rep.failures.is_empty() && within(el, 60),
        format!(
            "{} lattices, {} subgroups, {} failures, {:.2?} (limit 60s)",
            rep.lattices,
            rep.subgroups,
            rep.failures.len(),
            el
        ),
    )
}

fn c4_thresholds() -> Verdict {
    let t = Instant::now();
    let lim = Limits::default();
    let mut ok = true;
    let mut parts = Vec::new();
    for (p, rmax, t1, t2) in [(2u64, 10usize, 4usize, 8usize), (3, 7, 3, 6), (5, 4, 2, 4)] {
        let rep = glue::lemma45_scan(p, rmax, &lim).unwrap();
        let first = |f: fn(&glue::ThresholdRow) -> bool| rep.rows.iter().find(|r| f(r)).map(|r| r.r);
        let fo = first(|r| r.admits_overlattice);
        let fnr = first(|r| r.admits_non_root);
        let monotone = rep.rows.iter().all(|r| r.admits_overlattice == (r.r >= t1) && r.admits_non_root == (r.r >= t2));
        ok &= !rep.partial && monotone && fo == Some(t1) && fnr == Some(t2);
        parts.push(format!("A{}: {:?}/{:?}", p - 1, fo, fnr));
    }
    let no = glue::no_overlattice_check(&lim).unwrap();
    ok &= no.passed() && no.rows.len() == 4;
    let el = t.elapsed();
    verdict(
        ok && within(el, 300),
        format!("first r {}; A6, A6+A6, A10, A12 closed: {}; {:.2?} (limit 300s)", parts.join(", "), no.passed(), el),
    )
}

fn c5_sweep() -> Verdict {
    let t = Instant::now();
    let sweep = glue::prop47_catalog_check(7, &Limits::default()).unwrap();
    let total = glue::ade_multisets(7).len();
    let el = t.elapsed();
    verdict(
        sweep.passed() && sweep.lattices_checked == total && within(el, 600),
        format!(
            "{}/{} lattices, {} with overlattices, {} counterexamples, {:.2?} (limit 600s)",
            sweep.lattices_checked,
            total,
            sweep.with_overlattice,
            sweep.counterexamples.len(),
            el
        ),
    )
}

fn c6_concentration() -> Verdict {
    let rep = catalog::concentration_check(&test_catalog(), &Limits::default()).unwrap();
    let a_pr: BTreeMap<String, usize> = rep
        .rows
        .iter()
        .filter(|r| r.lattice == "A7" || r.lattice == "A8")
        .map(|r| (r.lattice.clone(), r.support.len()))
        .collect();
    // A3 with glue (e1 + e3) / 2
    let a3 = make_ade("A3".parse().unwrap());
    let v = glue::minimal_glue_vector(&LatticeVector::new(vec![rat(1, 2), rat(0, 1), rat(1, 2)]), 2).unwrap();
    let sup = glue::concentration_support(&a3, &v).unwrap();
    let a3_ok = v.support() == vec![0, 2] && glue::concentration_rank(&sup, 2) == Some(2);
    verdict(
        rep.passed() && a_pr.len() == 2 && a3_ok,
        format!(
            "{} prime-index overlattices, all supports A_(p-1)^r: {}, zero positions for A7/A8 checked: {:?}, position failures {}",
            rep.rows.len(),
            rep.rows.iter().all(|r| r.rank.is_some()),
            a_pr,
            rep.position_failures.len()
        ),
    )
}

fn c7_chain() -> Verdict {
    let t = Instant::now();
    let rep = paperlab::lemma52_verify(&Limits::default()).unwrap();
    let el = t.elapsed();
    let bad: Vec<String> = rep.checks.iter().filter(|c| !c.passed).map(|c| c.name.clone()).collect();
    verdict(
        rep.passed() && rep.orbits == 1 && within(el, 30),
        format!(
            "index-3 overlattices: {} as subsets, {} up to the A2 automorphism; each E8; complement E6 with q = 2/3; failing [{}]; {:.2?} (limit 30s)",
            rep.subgroups,
            rep.orbits,
            bad.join(", "),
            el
        ),
    )
}

fn c8_candidates() -> Verdict {
    let m = paperlab::build_ten_sequence_model(&Limits::default()).unwrap();
    let rep = paperlab::lemma53_table(&m);
    let cases: usize = rep.rows.iter().filter(|r| !r.identity.starts_with("corrected")).map(|r| r.cases).sum();
    let failing: Vec<String> = rep
        .rows
        .iter()
        .filter(|r| !r.holds())
        .map(|r| format!("{} ({} of {} cases, e.g. {})", r.identity, r.failures.len(), r.cases, r.failures[0]))
        .collect();
    verdict(
        rep.passed(),
        format!(
            "{} cases over 26 classes; failing: [{}]; with R_T.R_j = [j+1 in T] - [j in T] every identity holds: {}",
            cases,
            failing.join("; "),
            rep.passed_with_correction()
        ),
    )
}

fn c9_figures() -> Verdict {
    let checks = paperlab::figure_checks(&Limits::default()).unwrap();
    let summary: Vec<String> = checks.iter().map(|c| format!("{} = {}", c.name.trim_end_matches(" orthogonal vertices"), c.computed)).collect();
    verdict(checks.len() == 6 && checks.iter().all(|c| c.passed), summary.join("; "))
}

fn c10_pipeline() -> Verdict {
    let t = Instant::now();
    let rep = paperlab::remark57_pipeline(&Limits::default()).unwrap();
    let el = t.elapsed();
    let o = &rep.outcome;
    verdict(
        rep.passed() && within(el, 60),
        format!(
            "span {}, index {}, quotient {:?}, concentration {} on {:?}, bold sum 2-divisible {}, {:.2?} (limit 60s)",
            o.span_type, o.saturation_index, o.quotient.iter().map(|d| d.to_string()).collect::<Vec<_>>(),
            o.concentration_type, o.concentration, o.bold_sum_divisible, el
        ),
    )
}

fn c11_root_counts() -> Verdict {
    let mut bad = Vec::new();
    let types = AdeType::all_up_to_rank(12);
    for t in &types {
        let n = t.index();
        let expected = match t.family() {
            AdeFamily::A => n * (n + 1),
            AdeFamily::D => 2 * n * (n - 1),
            AdeFamily::E => [72, 126, 240][n - 6],
        };
        let rs = roots::enumerate_roots(&make_ade(*t), &Limits::default()).unwrap();
        if rs.count() != expected || rs.components != vec![*t] {
            bad.push(t.to_string());
        }
    }
    verdict(bad.is_empty(), format!("{} types up to rank 12, mismatches [{}]", types.len(), bad.join(", ")))
}

fn cycles(lengths: &[usize]) -> CurveGraph {
    let mut labels = Vec::new();
    let mut edges = Vec::new();
    for (c, &n) in lengths.iter().enumerate() {
        let base = labels.len();
        for i in 0..n {
            labels.push(format!("c{c}v{i}"));
            edges.push((base + i, base + (i + 1) % n, 1));
        }
    }
    let vs = labels
        .into_iter()
        .map(|label| curvegraph::Vertex { label, self_intersection: -2, bold: false })
        .collect();
    CurveGraph::new(vs, edges).unwrap()
}

fn c12_component_bound() -> Verdict {
    let lim = Limits::default();
    let two = curvegraph::find_elliptic_configurations(&cycles(&[5, 5]), &lim).unwrap();
    let ten = curvegraph::find_elliptic_configurations(&cycles(&[10]), &lim).unwrap();
    let got = [
        curvegraph::component_bound_check(&two).unwrap(),
        curvegraph::component_bound_check(&ten).unwrap(),
        curvegraph::component_bound_check(&[]).unwrap(),
    ];
    verdict(
        two.len() == 2 && ten.len() == 1 && got == [true, false, true],
        format!("two I5: {}, one I10: {}, no fibres: {}", got[0], got[1], got[2]),
    )
}

fn main() {
    let criteria: Vec<(&str, fn() -> Verdict)> = vec![
        ("discriminant forms of the ADE lattices", c1_table),
        ("disc(L) = [L':L]^2 disc(L') over the catalog", c2_index_formula),
        ("isotropic subgroups <-> overlattices", c3_bijection),
        ("overlattice thresholds for A_(p-1)^r", c4_thresholds),
        ("rank <= 7 root lattices: root overlattices only", c5_sweep),
        ("concentration of prime-index glue", c6_concentration),
        ("A2 + E6 -> E8, complement E6", c7_chain),
        ("ten-sequence candidate curve identities", c8_candidates),
        ("figure graphs: orthogonal vertices = bold sets", c9_figures),
        ("D8 + D8 configuration on U + E8 + E8", c10_pipeline),
        ("root counts against closed forms", c11_root_counts),
        ("component bound examples", c12_component_bound),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let v = match catch_unwind(AssertUnwindSafe(f)) {
            Ok(v) => v,
            Err(_) => verdict(false, "panicked"),
        };
        if !v.passed {
            failed += 1;
        }
        println!("criterion {:>2} {} {}: {}", i + 1, if v.passed { "PASS" } else { "FAIL" }, name, v.detail);
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
