use std::sync::Arc;

use latglue_core::arith::rat;
use latglue_core::curvegraph::{self, CurveGraph, KodairaType, Vertex};
use latglue_core::discform::DiscriminantGroup;
use latglue_core::glue;
use latglue_core::lattice::{direct_sum, make_ade, make_root_lattice};
use latglue_core::matrix::congruence;
use latglue_core::roots;
use latglue_core::{AdeType, Embedding, Int, IntMatrix, IntegerLattice, LatticeVector, Limits, Rat};
use proptest::prelude::*;

fn ade() -> impl Strategy<Value = AdeType> {
    prop_oneof![
        (1usize..=6).prop_map(|n| AdeType::a(n).unwrap()),
        (4usize..=6).prop_map(|n| AdeType::d(n).unwrap()),
        (6usize..=8).prop_map(|n| AdeType::e(n).unwrap()),
    ]
}

fn ade_sum(max_parts: usize) -> impl Strategy<Value = Vec<AdeType>> {
    prop::collection::vec(ade(), 1..=max_parts)
}

/// Product of elementary row operations: a unimodular matrix.
fn unimodular(n: usize) -> impl Strategy<Value = IntMatrix> {
    prop::collection::vec((0..n, 0..n, -2i64..=2), 0..=2 * n).prop_map(move |ops| {
        let mut m = IntMatrix::identity(n);
        for (i, j, k) in ops {
            if i == j {
                continue;
            }
            for c in 0..n {
                let v = &m[(j, c)] * Int::from(k);
                m[(i, c)] += v;
            }
        }
        m
    })
}

fn small_matrix() -> impl Strategy<Value = IntMatrix> {
    (1usize..=4, 1usize..=4).prop_flat_map(|(r, c)| {
        prop::collection::vec(-6i64..=6, r * c)
            .prop_map(move |v| IntMatrix::from_fn(r, c, |i, j| Int::from(v[i * c + j])))
    })
}

fn ratvec(n: usize) -> impl Strategy<Value = Vec<Rat>> {
    prop::collection::vec((-5i64..=5, 1i64..=4), n).prop_map(|v| v.into_iter().map(|(a, b)| rat(a, b)).collect())
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, ..ProptestConfig::default() })]

    #[test]
    fn discriminant_and_signature_of_sums(a in ade_sum(2), b in ade_sum(2)) {
        let la = make_root_lattice(&a);
        let lb = make_root_lattice(&b);
        let s = direct_sum(&[la.clone(), lb.clone()]).unwrap();
        prop_assert_eq!(s.discriminant(), la.discriminant() * lb.discriminant());
        let (sa, sb, ss) = (la.signature(), lb.signature(), s.signature());
        prop_assert_eq!(ss.n_plus, sa.n_plus + sb.n_plus);
        prop_assert_eq!(ss.n_minus, sa.n_minus + sb.n_minus);
        prop_assert_eq!(ss.n_minus, s.rank());
    }

    #[test]
    fn inner_product_symmetric_and_bilinear(
        (t, x, y, z) in ade().prop_flat_map(|t| (Just(t), ratvec(t.rank()), ratvec(t.rank()), ratvec(t.rank())))
    ) {
        let l = make_ade(t);
        let (x, y, z) = (LatticeVector::new(x), LatticeVector::new(y), LatticeVector::new(z));
        let ip = |a: &LatticeVector, b: &LatticeVector| l.inner_product(a, b).unwrap();
        prop_assert_eq!(ip(&x, &y), ip(&y, &x));
        let three = rat(3, 1);
        prop_assert_eq!(ip(&x.scale(&three).add(&z), &y), three * ip(&x, &y) + ip(&z, &y));
    }

    #[test]
    fn smith_decomposition_reconstructs(m in small_matrix()) {
        let s = m.smith();
        let d = s.left.mul(&m).unwrap().mul(&s.right).unwrap();
        for i in 0..d.rows() {
            for j in 0..d.cols() {
                let want = if i == j && i < s.diag.len() { s.diag[i].clone() } else { Int::from(0) };
                prop_assert_eq!(&d[(i, j)], &want);
            }
        }
        for w in s.diag.windows(2) {
            if w[1] != Int::from(0) {
                prop_assert!((&w[1] % &w[0]) == Int::from(0));
            }
        }
        let id = IntMatrix::identity(s.right.rows());
        prop_assert_eq!(s.right.mul(&s.right_inverse).unwrap(), id);
    }

    #[test]
    fn discriminant_group_is_basis_independent(types in ade_sum(2), u in unimodular(8)) {
        let l = make_root_lattice(&types);
        let n = l.rank();
        prop_assume!(n <= 8);
        let sub: Vec<usize> = (0..n).collect();
        let b = u.submatrix(&sub, &sub);
        let det = b.determinant().unwrap();
        prop_assume!(det == Int::from(1) || det == Int::from(-1));
        let moved = IntegerLattice::new(congruence(l.gram(), &b)).unwrap();
        let g1 = DiscriminantGroup::new(&l).unwrap();
        let g2 = DiscriminantGroup::new(&moved).unwrap();
        prop_assert_eq!(g1.invariant_factors(), g2.invariant_factors());
        prop_assert_eq!(g1.order_int(), l.discriminant());
        let lim = Limits::default();
        let q = |g: &DiscriminantGroup| {
            let mut v: Vec<Rat> = g.elements(&lim).unwrap().iter().map(|x| g.q_value(x).value().clone()).collect();
            v.sort();
            v
        };
        prop_assert_eq!(q(&g1), q(&g2));
        let r1 = roots::enumerate_roots(&l, &lim).unwrap();
        let r2 = roots::enumerate_roots(&moved, &lim).unwrap();
        prop_assert_eq!(r1.count(), r2.count());
        prop_assert_eq!(r1.components, r2.components);
    }

    #[test]
    fn overlattices_satisfy_index_formula(types in ade_sum(4)) {
        let l = make_root_lattice(&types);
        let lim = Limits::default();
        let g = Arc::new(DiscriminantGroup::new(&l).unwrap());
        prop_assume!(g.order().map_or(false, |o| o <= 2000));
        for (h, o) in glue::overlattices(&l, &lim).unwrap() {
            let k = Int::from(o.index);
            prop_assert_eq!(l.discriminant(), &k * &k * o.lattice.discriminant());
            prop_assert_eq!(o.index as usize, h.order());
            prop_assert!(o.lattice.is_even());
            let back = glue::subgroup_of_overlattice(&g, &o, &lim).unwrap();
            prop_assert_eq!(back.order(), h.order());
        }
    }

    #[test]
    fn complement_twice_in_e8(mask in 1u16..255) {
        let e8 = make_ade(AdeType::e(8).unwrap());
        let idx: Vec<usize> = (0..8).filter(|i| mask >> i & 1 == 1).collect();
        let s = Embedding::coordinate(e8.clone(), &idx).unwrap();
        let c = s.orthogonal_complement().unwrap();
        prop_assert_eq!(s.rank() + c.rank(), 8);
        let cc = c.orthogonal_complement().unwrap();
        prop_assert_eq!(cc.basis().hermite_rows(), s.basis().hermite_rows());
        prop_assert!(glue::is_primitive(&c).unwrap());
    }

    #[test]
    fn saturation_index_of_scaled_basis(k in 1i64..=5, t in ade()) {
        let l = make_ade(t);
        let n = l.rank();
        let rows: Vec<Vec<Int>> = (0..n)
            .map(|i| (0..n).map(|j| Int::from(if i == j { if i == 0 { k } else { 1 } } else { 0 })).collect())
            .collect();
        let s = glue::saturation(&Embedding::new(l, rows).unwrap()).unwrap();
        prop_assert_eq!(s.index, Int::from(k));
    }

    #[test]
    fn cycles_are_single_in_fibres(n in 2usize..=12) {
        let vs: Vec<Vertex> = (0..n).map(|i| Vertex { label: format!("v{i}"), self_intersection: -2, bold: false }).collect();
        let edges: Vec<(usize, usize, i64)> = if n == 2 { vec![(0, 1, 2)] } else { (0..n).map(|i| (i, (i + 1) % n, 1)).collect() };
        let g = CurveGraph::new(vs, edges).unwrap();
        let cs = curvegraph::find_elliptic_configurations(&g, &Limits::default()).unwrap();
        prop_assert_eq!(cs.len(), 1);
        prop_assert_eq!(cs[0].kodaira, KodairaType::I(n));
        prop_assert!(cs[0].multiplicities.iter().all(|&m| m == 1));
    }

    #[test]
    fn affine_d_has_star_fibre(k in 0usize..=6) {
        // two forks joined by a path with k inner vertices
        let n = k + 6;
        let mut edges = vec![(0, 2, 1), (1, 2, 1)];
        let mut prev = 2;
        for i in 0..k {
            edges.push((prev, 3 + i, 1));
            prev = 3 + i;
        }
        let c2 = 3 + k;
        edges.push((prev, c2, 1));
        edges.push((c2, c2 + 1, 1));
        edges.push((c2, c2 + 2, 1));
        let vs = (0..n).map(|i| Vertex { label: format!("v{i}"), self_intersection: -2, bold: false }).collect();
        let g = CurveGraph::new(vs, edges).unwrap();
        let cs = curvegraph::find_elliptic_configurations(&g, &Limits::default()).unwrap();
        let star: Vec<_> = cs.iter().filter(|c| c.support.len() == n).collect();
        prop_assert_eq!(star.len(), 1);
        let want = if k == 0 { KodairaType::IStar(1) } else { KodairaType::IStar(k + 1) };
        prop_assert_eq!(star[0].kodaira, want);
        prop_assert_eq!(star[0].multiplicities.iter().sum::<i64>(), 2 * (n as i64) - 4);
    }
}
