use std::fmt::Write as _;
use std::sync::Arc;

use latglue_core::arith::fmt_rat;
use latglue_core::curvegraph;
use latglue_core::discform::{self, DiscriminantGroup};
use latglue_core::glue;
use latglue_core::lattice::fmt_ade_multiset;
use latglue_core::paperlab::{self, Check};
use latglue_core::roots;
use latglue_core::{Int, IntMatrix, IntegerLattice, LatticeVector, Limits};
use serde_json::{json, Value};

use crate::schema;
use crate::{Cli, CliError, Command, GlueOp, GraphOp, Outcome};

pub fn dispatch(cli: &Cli) -> Result<Outcome, CliError> {
    let limits = cli.caps.limits();
    match &cli.command {
        Command::Discform { gram } => discform(&schema::load_lattice(gram)?, &limits),
        Command::Roots { gram, all } => roots_cmd(&schema::load_lattice(gram)?, *all, &limits),
        Command::Glue { op } => match op {
            GlueOp::Overlattices { gram } => overlattices(&schema::load_lattice(gram)?, &limits),
            GlueOp::Saturate { ambient, sub } => {
                let e = schema::load_embedding(schema::load_lattice(ambient)?, sub)?;
                saturate(&e)
            }
            GlueOp::Scan { p, rmax } => scan(*p, *rmax, &limits),
        },
        Command::Graph { op: GraphOp::Analyze { graph } } => analyze(&schema::load_graph(graph)?, &limits),
        Command::Complement { ambient, sub } => {
            let e = schema::load_embedding(schema::load_lattice(ambient)?, sub)?;
            complement(&e, &limits)
        }
        Command::VerifyPaper => verify_paper(&limits),
    }
}

fn ok(json: Value, text: String) -> Result<Outcome, CliError> {
    Ok(Outcome { json, text, code: 0 })
}

fn ints(v: &[Int]) -> Vec<String> {
    v.iter().map(|x| x.to_string()).collect()
}

fn matrix(m: &IntMatrix) -> Vec<Vec<String>> {
    (0..m.rows()).map(|i| ints(m.row(i))).collect()
}

fn fracs(v: &LatticeVector) -> Vec<String> {
    v.coords().iter().map(fmt_rat).collect()
}

fn text_matrix(m: &IntMatrix) -> String {
    let mut s = String::new();
    for i in 0..m.rows() {
        let _ = writeln!(s, "  [{}]", ints(m.row(i)).join(", "));
    }
    s
}

fn lattice_summary(l: &IntegerLattice) -> Value {
    json!({
        "rank": l.rank(),
        "gram": matrix(l.gram()),
        "discriminant": l.discriminant().to_string(),
        "signature": [l.signature().n_plus, l.signature().n_minus],
        "even": l.is_even(),
    })
}

fn discform(l: &IntegerLattice, _limits: &Limits) -> Result<Outcome, CliError> {
    let g = DiscriminantGroup::new(l)?;
    let k = g.length();
    let gens: Vec<Vec<u64>> = (0..k)
        .map(|i| (0..k).map(|j| (i == j) as u64).collect())
        .collect();
    let q: Vec<String> = gens.iter().map(|x| g.q_value(x).to_string()).collect();
    let b: Vec<Vec<String>> = gens
        .iter()
        .map(|x| gens.iter().map(|y| g.b_value(x, y).to_string()).collect())
        .collect();
    let lifts: Vec<Vec<String>> = g.generator_lifts().iter().map(fracs).collect();
    let factors: Vec<String> = g.invariant_factors().iter().map(|d| d.to_string()).collect();
    let json = json!({
        "invariant_factors": factors,
        "order": g.order_int().to_string(),
        "generator_lifts": lifts,
        "q": q,
        "b": b,
    });
    let mut text = String::new();
    let _ = writeln!(text, "invariant factors: {}", if factors.is_empty() { "(trivial)".into() } else { factors.join(" ") });
    let _ = writeln!(text, "order: {}", g.order_int());
    for i in 0..k {
        let _ = writeln!(text, "g{}: lift [{}]  q = {}", i + 1, lifts[i].join(", "), q[i]);
    }
    for (i, row) in b.iter().enumerate() {
        let _ = writeln!(text, "b(g{}, -): {}", i + 1, row.join(" "));
    }
    ok(json, text)
}

fn roots_cmd(l: &IntegerLattice, all: bool, limits: &Limits) -> Result<Outcome, CliError> {
    let rs = roots::enumerate_roots(l, limits)?;
    let ty = fmt_ade_multiset(&rs.components);
    let simple: Vec<Vec<String>> = rs.simple_roots.iter().map(|r| ints(r)).collect();
    let mut json = json!({
        "count": rs.count(),
        "type": ty,
        "components": rs.components.iter().map(|t| t.to_string()).collect::<Vec<_>>(),
        "simple_roots": simple,
    });
    let mut text = format!("roots: {}\ntype: {}\n", rs.count(), ty);
    for r in &simple {
        let _ = writeln!(text, "  simple [{}]", r.join(", "));
    }
    if all {
        let list: Vec<Vec<String>> = rs.roots.iter().map(|r| ints(r)).collect();
        for r in &list {
            let _ = writeln!(text, "  [{}]", r.join(", "));
        }
        json["roots"] = json!(list);
    }
    ok(json, text)
}

fn overlattices(l: &IntegerLattice, limits: &Limits) -> Result<Outcome, CliError> {
    let g = Arc::new(DiscriminantGroup::new(l)?);
    let definite = l.is_negative_definite();
    let mut items = Vec::new();
    let mut text = String::new();
    for h in glue::isotropic_subgroups(&g, limits)? {
        let o = glue::overlattice_from(&h)?;
        let root = if definite {
            json!(roots::is_root_lattice(&o.lattice, limits)?)
        } else {
            Value::Null
        };
        let gens: Vec<String> = h.generators().iter().map(|x| discform::fmt_element(x)).collect();
        let _ = writeln!(
            text,
            "subgroup <{}> order {}: index {}, discriminant {}{}",
            gens.join(", "),
            h.order(),
            o.index,
            o.lattice.discriminant(),
            match root.as_bool() {
                Some(true) => ", root lattice",
                Some(false) => ", not a root lattice",
                None => "",
            }
        );
        text.push_str(&text_matrix(o.lattice.gram()));
        items.push(json!({
            "generators": gens,
            "order": h.order(),
            "index": o.index,
            "glue_vectors": o.glue_lifts.iter().map(fracs).collect::<Vec<_>>(),
            "change_of_basis": o.change_of_basis.iter().map(|r| r.iter().map(fmt_rat).collect::<Vec<_>>()).collect::<Vec<_>>(),
            "lattice": lattice_summary(&o.lattice),
            "root_lattice": root,
        }));
    }
    let json = json!({
        "invariant_factors": g.invariant_factors(),
        "overlattices": items,
    });
    ok(json, text)
}

fn saturate(e: &latglue_core::Embedding) -> Result<Outcome, CliError> {
    let s = glue::saturation(e)?;
    let json = json!({
        "index": s.index.to_string(),
        "primitive": s.index == Int::from(1),
        "quotient": ints(&s.quotient),
        "glue": s.glue.iter().map(fracs).collect::<Vec<_>>(),
        "saturation_basis": matrix(s.embedding.basis()),
    });
    let mut text = format!(
        "index: {}\nquotient: {}\n",
        s.index,
        if s.quotient.is_empty() { "0".into() } else { s.quotient.iter().map(|d| format!("Z/{d}")).collect::<Vec<_>>().join(" + ") }
    );
    for v in &s.glue {
        let _ = writeln!(text, "  glue [{}]", fracs(v).join(", "));
    }
    text.push_str("saturation basis:\n");
    text.push_str(&text_matrix(s.embedding.basis()));
    ok(json, text)
}

fn scan(p: u64, rmax: usize, limits: &Limits) -> Result<Outcome, CliError> {
    let rep = glue::lemma45_scan(p, rmax, limits)?;
    let first = |f: fn(&glue::ThresholdRow) -> bool| rep.rows.iter().find(|r| !r.skipped && f(r)).map(|r| r.r);
    let over = first(|r| r.admits_overlattice);
    let nonroot = first(|r| r.admits_non_root);
    let mut summary = match over {
        None => format!("no overlattice for r <= {rmax}"),
        Some(r) => format!("first overlattice at r = {r}"),
    };
    match nonroot {
        None => summary.push_str(&format!("; no non-root overlattice for r <= {rmax}")),
        Some(r) => summary.push_str(&format!("; first non-root overlattice at r = {r}")),
    }
    if rep.partial {
        summary.push_str(" (some ranks skipped by the group cap)");
    }
    let rows: Vec<Value> = rep
        .rows
        .iter()
        .map(|r| json!({"r": r.r, "overlattice": r.admits_overlattice, "non_root": r.admits_non_root, "skipped": r.skipped}))
        .collect();
    let mut text = String::new();
    for r in &rep.rows {
        let _ = writeln!(
            text,
            "r = {:>2}: {}",
            r.r,
            if r.skipped {
                "skipped"
            } else if r.admits_non_root {
                "non-root overlattice"
            } else if r.admits_overlattice {
                "root overlattices only"
            } else {
                "no overlattice"
            }
        );
    }
    let _ = writeln!(text, "{summary}");
    let json = json!({
        "p": p,
        "rows": rows,
        "first_overlattice": over,
        "first_non_root": nonroot,
        "summary": summary,
    });
    Ok(Outcome {
        json,
        text,
        code: if rep.partial { 3 } else { 0 },
    })
}

fn analyze(g: &curvegraph::CurveGraph, limits: &Limits) -> Result<Outcome, CliError> {
    let configs = curvegraph::find_elliptic_configurations(g, limits)?;
    let mut text = String::new();
    let cs: Vec<Value> = configs
        .iter()
        .map(|c| {
            let labels = curvegraph::vertex_labels(g, &c.support);
            let _ = writeln!(
                text,
                "{}: {}",
                c.kodaira,
                labels
                    .iter()
                    .zip(&c.multiplicities)
                    .map(|(l, m)| if *m == 1 { l.clone() } else { format!("{m}{l}") })
                    .collect::<Vec<_>>()
                    .join(" + ")
            );
            json!({"kodaira": c.kodaira.to_string(), "support": labels, "multiplicities": c.multiplicities})
        })
        .collect();
    let (orth, ty) = if configs.is_empty() {
        let _ = writeln!(text, "no elliptic configurations");
        (Value::Null, Value::Null)
    } else {
        let o = curvegraph::orthogonal_vertex_set(g, &configs)?;
        let labels = curvegraph::vertex_labels(g, &o.vertices);
        let ty = curvegraph::vertex_set_type(g, &o.vertices).map(|t| fmt_ade_multiset(&t));
        let _ = writeln!(text, "orthogonal vertices: {{{}}}", labels.join(", "));
        let _ = writeln!(text, "type: {}", ty.as_deref().unwrap_or("not a Dynkin diagram"));
        (json!(labels), json!(ty))
    };
    let json = json!({
        "configurations": cs,
        "orthogonal_vertices": orth,
        "orthogonal_type": ty,
    });
    ok(json, text)
}

fn complement(e: &latglue_core::Embedding, limits: &Limits) -> Result<Outcome, CliError> {
    let c = e.orthogonal_complement()?;
    let l = c.sublattice()?;
    let mut json = json!({
        "basis": matrix(c.basis()),
        "lattice": lattice_summary(&l),
    });
    let mut text = format!(
        "rank {}, discriminant {}, signature {}\nbasis:\n{}gram:\n{}",
        l.rank(),
        l.discriminant(),
        l.signature(),
        text_matrix(c.basis()),
        text_matrix(l.gram())
    );
    if l.rank() > 0 && l.is_negative_definite() {
        let rs = roots::enumerate_roots(&l, limits)?;
        let ty = fmt_ade_multiset(&rs.components);
        let _ = writeln!(text, "roots: {}, type {}", rs.count(), ty);
        json["roots"] = json!({"count": rs.count(), "type": ty});
    }
    ok(json, text)
}

struct Item {
    name: String,
    passed: bool,
    details: Vec<String>,
}

fn checks_item(name: &str, cs: &[Check]) -> Item {
    Item {
        name: name.into(),
        passed: cs.iter().all(|c| c.passed),
        details: cs.iter().map(|c| c.to_string()).collect(),
    }
}

fn verify_paper(limits: &Limits) -> Result<Outcome, CliError> {
    let mut items = Vec::new();

    let t1 = discform::verify_table1()?;
    items.push(Item {
        name: "discriminant forms of A1..A12, D4..D12, E6..E8".into(),
        passed: t1.passed(),
        details: t1
            .rows
            .iter()
            .map(|r| format!("{} {}", if r.passed { "ok" } else { "MISMATCH" }, r.describe()))
            .collect(),
    });

    let no = glue::no_overlattice_check(limits)?;
    items.push(Item {
        name: "no overlattice for A6, A6+A6, A10, A12".into(),
        passed: no.passed(),
        details: no.rows.iter().map(|r| format!("{}: {} non-zero isotropic classes", r.name, r.isotropic_nonzero)).collect(),
    });

    for (p, rmax) in [(2u64, 10usize), (3, 7), (5, 4)] {
        let rep = glue::lemma45_scan(p, rmax, limits)?;
        items.push(Item {
            name: format!("overlattice thresholds for A{}^r, r <= {rmax}", p - 1),
            passed: rep.passed && !rep.partial,
            details: rep
                .rows
                .iter()
                .map(|r| format!("r = {}: overlattice {}, non-root {}{}", r.r, r.admits_overlattice, r.admits_non_root, if r.skipped { " (skipped)" } else { "" }))
                .collect(),
        });
    }

    let sweep = glue::prop47_catalog_check(7, limits)?;
    items.push(Item {
        name: "root lattices of rank <= 7 have only root overlattices".into(),
        passed: sweep.passed(),
        details: vec![format!(
            "{} lattices, {} with an overlattice, counterexamples: [{}]",
            sweep.lattices_checked,
            sweep.with_overlattice,
            sweep.counterexamples.join(", ")
        )],
    });

    let l52 = paperlab::lemma52_verify(limits)?;
    items.push(checks_item("A2 + E6 glued to E8, complement of U + A2 is E6", &l52.checks));

    let model = paperlab::build_ten_sequence_model(limits)?;
    let l53 = paperlab::lemma53_table(&model);
    items.push(Item {
        name: "candidate curves of the ten-sequence model".into(),
        passed: l53.passed(),
        details: l53
            .rows
            .iter()
            .map(|r| {
                let mut s = format!("{} {} ({} cases)", if r.holds() { "ok" } else { "FAILS" }, r.identity, r.cases);
                if let Some(f) = r.failures.first() {
                    s.push_str(&format!("; first failure {f}"));
                }
                s
            })
            .collect(),
    });

    items.push(checks_item("orthogonal vertex sets of the figure graphs", &paperlab::figure_checks(limits)?));
    items.push(checks_item("D8 + D8 configuration on U + E8 + E8", &paperlab::remark57_pipeline(limits)?.checks));

    let passed = items.iter().all(|i| i.passed);
    let mut text = String::new();
    for i in &items {
        let _ = writeln!(text, "{} {}", if i.passed { "PASS" } else { "FAIL" }, i.name);
        for d in &i.details {
            let _ = writeln!(text, "       {d}");
        }
    }
    let _ = writeln!(
        text,
        "{} of {} checks passed",
        items.iter().filter(|i| i.passed).count(),
        items.len()
    );
    let json = json!({
        "passed": passed,
        "checks": items
            .iter()
            .map(|i| json!({"name": i.name, "passed": i.passed, "details": i.details}))
            .collect::<Vec<_>>(),
    });
    Ok(Outcome {
        json,
        text,
        code: if passed { 0 } else { 1 },
    })
}
