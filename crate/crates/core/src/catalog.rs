//! A fixed list of small even lattices used by the overlattice checks.

use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::arith::Int;
use crate::discform::DiscriminantGroup;
use crate::error::Result;
use crate::glue::{self, ade_multisets};
use crate::lattice::{direct_sum, fmt_ade_multiset, make_ade, make_hyperbolic, make_root_lattice, AdeType, IntegerLattice};
use crate::matrix::IntMatrix;
use crate::Limits;

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub lattice: IntegerLattice,
    /// Set when the basis is the standard simple-root basis of these types.
    pub root_types: Option<Vec<AdeType>>,
}

fn root_entry(types: Vec<AdeType>) -> CatalogEntry {
    CatalogEntry {
        name: fmt_ade_multiset(&types),
        lattice: make_root_lattice(&types),
        root_types: Some(types),
    }
}

fn repeat(t: &str, r: usize) -> Vec<AdeType> {
    vec![t.parse().expect("valid type"); r]
}

/// Gram `1 - delta_ij` of an isotropic ten-sequence.
pub fn ten_sequence_gram() -> IntMatrix {
    IntMatrix::from_fn(10, 10, |i, j| Int::from((i != j) as i64))
}

/// All ADE multisets of rank at most 7, then `A8`, `A1^8`, `A2+E6`,
/// `D8+D8`, `A3^4`, `A4^4`, `A2^6`, `U+A2` and the ten-sequence lattice.
pub fn test_catalog() -> Vec<CatalogEntry> {
    let mut out: Vec<CatalogEntry> = ade_multisets(7).into_iter().map(root_entry).collect();
    let p = |s: &str| -> AdeType { s.parse().expect("valid type") };
    out.push(root_entry(vec![p("A8")]));
    out.push(root_entry(repeat("A1", 8)));
    out.push(root_entry(vec![p("A2"), p("E6")]));
    out.push(root_entry(vec![p("D8"), p("D8")]));
    out.push(root_entry(repeat("A3", 4)));
    out.push(root_entry(repeat("A4", 4)));
    out.push(root_entry(repeat("A2", 6)));
    out.push(CatalogEntry {
        name: "U+A2".into(),
        lattice: direct_sum(&[make_hyperbolic(), make_ade(p("A2"))]).expect("non-empty"),
        root_types: None,
    });
    out.push(CatalogEntry {
        name: "ten-sequence".into(),
        lattice: IntegerLattice::new(ten_sequence_gram()).expect("non-degenerate"),
        root_types: None,
    });
    out
}

#[derive(Clone, Debug, Default)]
pub struct IndexFormulaReport {
    pub overlattices: usize,
    pub failures: Vec<String>,
}

/// `disc(L) = [L':L]^2 disc(L')` for every overlattice of every entry.
pub fn index_formula_check(entries: &[CatalogEntry], limits: &Limits) -> Result<IndexFormulaReport> {
    let mut rep = IndexFormulaReport::default();
    for e in entries {
        for (_, o) in glue::overlattices(&e.lattice, limits)? {
            rep.overlattices += 1;
            let lhs = e.lattice.discriminant();
            let k = Int::from(o.index);
            if lhs != &k * &k * o.lattice.discriminant() {
                rep.failures.push(format!("{} index {}", e.name, o.index));
            }
        }
    }
    Ok(rep)
}

#[derive(Clone, Debug, Default)]
pub struct BijectionReport {
    pub lattices: usize,
    pub subgroups: usize,
    pub failures: Vec<String>,
}

/// Subgroups and overlattices correspond one to one, and the subgroup
/// recovered from each overlattice is the one it was built from.
pub fn bijection_check(entries: &[CatalogEntry], max_order: u64, limits: &Limits) -> Result<BijectionReport> {
    let mut rep = BijectionReport::default();
    for e in entries {
        let g = Arc::new(DiscriminantGroup::new(&e.lattice)?);
        if g.order().map_or(true, |o| o > max_order) {
            continue;
        }
        rep.lattices += 1;
        let subs = glue::isotropic_subgroups(&g, limits)?;
        let mut built = 0;
        for h in &subs {
            let o = glue::overlattice_from(h)?;
            built += 1;
            let back = glue::subgroup_of_overlattice(&g, &o, limits)?;
            let (mut a, mut b) = (h.elements().to_vec(), back.elements().to_vec());
            a.sort();
            b.sort();
            if a != b {
                rep.failures.push(format!("{}: round trip of {:?}", e.name, h.generators()));
            }
        }
        rep.subgroups += subs.len();
        if built != subs.len() {
            rep.failures.push(format!("{}: {} subgroups, {} overlattices", e.name, subs.len(), built));
        }
    }
    Ok(rep)
}

#[derive(Clone, Debug)]
pub struct ConcentrationRow {
    pub lattice: String,
    pub p: u64,
    pub support: Vec<usize>,
    /// `r` with the support of type `A_{p-1}^r`, if it has that type.
    pub rank: Option<usize>,
}

#[derive(Clone, Debug, Default)]
pub struct ConcentrationReport {
    pub rows: Vec<ConcentrationRow>,
    /// Entries `A_{pr-1}` whose zero positions are not `p, 2p, ..., (r-1)p`.
    pub position_failures: Vec<String>,
}

impl ConcentrationReport {
    pub fn passed(&self) -> bool {
        self.position_failures.is_empty() && self.rows.iter().all(|r| r.rank.is_some())
    }
}

/// Concentration of every prime-index overlattice of the root-lattice entries.
pub fn concentration_check(entries: &[CatalogEntry], limits: &Limits) -> Result<ConcentrationReport> {
    let mut rep = ConcentrationReport::default();
    for e in entries {
        let Some(types) = &e.root_types else { continue };
        for (_, o) in glue::overlattices(&e.lattice, limits)? {
            if o.index < 2 || !crate::arith::is_prime(o.index) {
                continue;
            }
            let p = o.index;
            let v = glue::minimal_glue_vector(&o.glue_lifts[0], p)?;
            let support = v.support();
            let emb = glue::concentration_support(&e.lattice, &v)?;
            let rank = glue::concentration_rank(&emb, p);
            if let [t] = types.as_slice() {
                let n = t.rank() as u64;
                if t.family() == crate::lattice::AdeFamily::A && (n + 1) % p == 0 {
                    let zeros: Vec<u64> = (1..=n).filter(|i| !support.contains(&((i - 1) as usize))).collect();
                    let want: Vec<u64> = (1..(n + 1) / p).map(|k| k * p).collect();
                    if zeros != want {
                        rep.position_failures.push(format!("{}: zeros at {:?}", e.name, zeros));
                    }
                }
            }
            rep.rows.push(ConcentrationRow {
                lattice: e.name.clone(),
                p,
                support,
                rank,
            });
        }
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_contents() {
        let c = test_catalog();
        assert!(c.iter().any(|e| e.name == "A2+E6"));
        assert!(c.iter().all(|e| e.lattice.is_even()));
        let ten = c.iter().find(|e| e.name == "ten-sequence").unwrap();
        assert_eq!(ten.lattice.discriminant(), Int::from(9));
    }
}
