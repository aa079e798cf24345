//! Exact Fincke–Pohst enumeration in definite lattices.
//!
//! Works with the positive definite form `A = -G` of a negative definite
//! Gram matrix `G`, over a coset `c + Z^n` (`c = 0` for the lattice itself).
//! All comparisons are exact; the pruning test `d_i (x_i + t_i)^2 <= R` is
//! evaluated without square roots.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use crate::arith::{Int, Rat};
use crate::error::{Error, Result};
use crate::matrix::IntMatrix;
use crate::Limits;

/// Pairwise size reduction of a positive definite form: returns `(T, T A T^t)`
/// with `T` unimodular. Enough to tame the skewed bases produced by Smith
/// and Hermite reductions at the ranks used here.
fn size_reduce(a: &IntMatrix) -> (IntMatrix, IntMatrix) {
    let n = a.rows();
    let mut t = IntMatrix::identity(n);
    let mut g = a.clone();
    let mut changed = true;
    let mut rounds = 0;
    while changed && rounds < 64 {
        changed = false;
        rounds += 1;
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                let gij = g[(i, j)].clone();
                let gjj = g[(j, j)].clone();
                if (&gij * Int::from(2)).abs() <= gjj {
                    continue;
                }
                // q = round(gij / gjj)
                let q = Rat::new(gij, gjj).round().to_integer();
                if q.is_zero() {
                    continue;
                }
                // b_i -= q b_j
                for k in 0..n {
                    let v = &t[(j, k)] * &q;
                    t[(i, k)] -= v;
                }
                let gj: Vec<Int> = (0..n).map(|k| g[(j, k)].clone()).collect();
                let old_ij = g[(i, j)].clone();
                let new_ii = &g[(i, i)] - Int::from(2) * &q * &old_ij + &q * &q * &g[(j, j)];
                for k in 0..n {
                    if k == i {
                        continue;
                    }
                    let v = &g[(i, k)] - &q * &gj[k];
                    g[(i, k)] = v.clone();
                    g[(k, i)] = v;
                }
                g[(i, i)] = new_ii;
                changed = true;
            }
        }
    }
    (t, g)
}

/// `Q(x) = sum_i d_i (x_i + sum_{j>i} mu_ij x_j)^2`.
fn decompose(a: &IntMatrix) -> Result<(Vec<Rat>, Vec<Vec<Rat>>)> {
    let n = a.rows();
    let mut q: Vec<Vec<Rat>> = (0..n)
        .map(|i| (0..n).map(|j| Rat::from_integer(a[(i, j)].clone())).collect())
        .collect();
    for i in 0..n {
        if !q[i][i].is_positive() {
            return Err(Error::domain("form is not definite"));
        }
        for j in i + 1..n {
            let v = &q[i][j] / &q[i][i];
            q[j][i] = q[i][j].clone();
            q[i][j] = v;
        }
        for k in i + 1..n {
            for l in k..n {
                let v = &q[k][i] * &q[i][l];
                q[k][l] -= v;
            }
        }
    }
    let d = (0..n).map(|i| q[i][i].clone()).collect();
    let mu = (0..n)
        .map(|i| (0..n).map(|j| if j > i { q[i][j].clone() } else { Rat::zero() }).collect())
        .collect();
    Ok((d, mu))
}

/// All `x` in `shift + Z^n` with `-x^t G x <= bound`, for negative definite
/// `G`. Returned in a deterministic (lexicographically sorted) order.
pub fn short_vectors(
    gram: &IntMatrix,
    shift: &[Rat],
    bound: &Rat,
    limits: &Limits,
) -> Result<Vec<Vec<Rat>>> {
    let n = gram.rows();
    if shift.len() != n {
        return Err(Error::domain("shift length does not match the rank"));
    }
    if n > limits.max_rank {
        return Err(Error::Resource {
            what: "rank for short-vector enumeration",
            required: n as u64,
            cap: limits.max_rank as u64,
        });
    }
    if n == 0 {
        return Ok(if bound.is_negative() { vec![] } else { vec![vec![]] });
    }
    if crate::matrix::inertia(gram)? != (0, n, 0) {
        return Err(Error::domain("form is not negative definite"));
    }
    let pos = IntMatrix::from_fn(n, n, |i, j| -&gram[(i, j)]);
    let (t, reduced) = size_reduce(&pos);
    let (d, mu) = decompose(&reduced)?;
    // shift in reduced coordinates: x = T^t y, so y = T^{-t} x
    let t_inv = t.unimodular_inverse()?;
    let c: Vec<Rat> = (0..n)
        .map(|i| {
            (0..n)
                .map(|k| Rat::from_integer(t_inv[(k, i)].clone()) * &shift[k])
                .fold(Rat::zero(), |a, b| a + b)
        })
        .collect();

    let mut found: Vec<Vec<Rat>> = Vec::new();
    let mut y = vec![Rat::zero(); n];
    search(n - 1, &d, &mu, &c, bound.clone(), &mut y, &mut found);

    let mut out: Vec<Vec<Rat>> = found
        .into_iter()
        .map(|y| {
            (0..n)
                .map(|k| {
                    (0..n)
                        .map(|i| Rat::from_integer(t[(i, k)].clone()) * &y[i])
                        .fold(Rat::zero(), |a, b| a + b)
                })
                .collect()
        })
        .collect();
    out.sort();
    Ok(out)
}

fn search(
    i: usize,
    d: &[Rat],
    mu: &[Vec<Rat>],
    c: &[Rat],
    remaining: Rat,
    y: &mut Vec<Rat>,
    out: &mut Vec<Vec<Rat>>,
) {
    let n = d.len();
    let mut t = c[i].clone();
    for j in i + 1..n {
        t += &mu[i][j] * &y[j];
    }
    // y_i + t ranges over t + Z; walk outward from the integer nearest -t
    let centre = (-&t).round();
    let step = |k: &Int, y: &mut Vec<Rat>, out: &mut Vec<Vec<Rat>>| -> bool {
        let val = &centre + Rat::from_integer(k.clone());
        let z = &val + &t;
        let cost = &d[i] * &z * &z;
        if cost > remaining {
            return false;
        }
        y[i] = &val + &c[i];
        if i == 0 {
            out.push(y.clone());
        } else {
            search(i - 1, d, mu, c, &remaining - &cost, y, out);
        }
        true
    };
    // up: 0, 1, 2, ...; down: -1, -2, ...
    let mut k = Int::zero();
    while step(&k, y, out) {
        k += Int::one();
    }
    let mut k = -Int::one();
    while step(&k, y, out) {
        k -= Int::one();
    }
}

/// Integer vectors of exactly the given norm (a negative number) in a
/// negative definite lattice.
pub fn vectors_of_norm(gram: &IntMatrix, norm: i64, limits: &Limits) -> Result<Vec<Vec<Int>>> {
    let n = gram.rows();
    let zero = vec![Rat::zero(); n];
    let b = Rat::from_integer(Int::from(-norm));
    let all = short_vectors(gram, &zero, &b, limits)?;
    Ok(all
        .into_iter()
        .map(|x| x.into_iter().map(|c| c.to_integer()).collect::<Vec<_>>())
        .filter(|x| crate::matrix::bilinear_int(gram, x, x) == Int::from(norm))
        .collect())
}

/// Maximum norm (closest to zero) over the coset `shift + Z^n`, found by
/// enumerating up to `bound`; `None` if the coset has no vector within it.
pub fn coset_minimum(gram: &IntMatrix, shift: &[Rat], bound: &Rat, limits: &Limits) -> Result<Option<Rat>> {
    let vs = short_vectors(gram, shift, bound, limits)?;
    Ok(vs
        .iter()
        .map(|x| crate::matrix::bilinear(gram, x, x))
        .max())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use crate::lattice::{make_ade, AdeType};

    fn brute_force_count(gram: &IntMatrix, norm: i64, box_size: i64) -> usize {
        let n = gram.rows();
        let mut count = 0;
        let mut x = vec![-box_size; n];
        loop {
            let v: Vec<Int> = x.iter().map(|&c| Int::from(c)).collect();
            if crate::matrix::bilinear_int(gram, &v, &v) == Int::from(norm) {
                count += 1;
            }
            let mut k = 0;
            while k < n {
                x[k] += 1;
                if x[k] <= box_size {
                    break;
                }
                x[k] = -box_size;
                k += 1;
            }
            if k == n {
                break;
            }
        }
        count
    }

    #[test]
    fn matches_brute_force_on_small_lattices() {
        for s in ["A1", "A2", "A3", "A4", "D4"] {
            let t: AdeType = s.parse().unwrap();
            let g = make_ade(t);
            let fp = vectors_of_norm(g.gram(), -2, &Limits::default()).unwrap();
            // roots of these lattices have coordinates in [-2, 2]
            assert_eq!(fp.len(), brute_force_count(g.gram(), -2, 2), "{s}");
            assert_eq!(fp.len(), t.root_count());
        }
    }

    #[test]
    fn coset_of_a1_half() {
        let g = IntMatrix::from_i64(&[&[-2]]);
        let vs = short_vectors(&g, &[rat(1, 2)], &rat(1, 2), &Limits::default()).unwrap();
        assert_eq!(vs, vec![vec![rat(-1, 2)], vec![rat(1, 2)]]);
    }

    #[test]
    fn rejects_indefinite() {
        let u = IntMatrix::from_i64(&[&[0, 1], &[1, 0]]);
        assert!(short_vectors(&u, &[rat(0, 1), rat(0, 1)], &rat(2, 1), &Limits::default()).is_err());
    }

    #[test]
    fn skewed_basis_gives_same_count() {
        // E8 in a basis sheared by a unimodular matrix
        let e8 = make_ade("E8".parse().unwrap());
        let mut b = IntMatrix::identity(8);
        for i in 1..8 {
            b[(i, 0)] = Int::from(7 * i as i64);
            b[(i, i - 1)] += Int::from(3);
        }
        let g = crate::matrix::congruence(e8.gram(), &b);
        let roots = vectors_of_norm(&g, -2, &Limits::default()).unwrap();
        assert_eq!(roots.len(), 240);
    }
}
