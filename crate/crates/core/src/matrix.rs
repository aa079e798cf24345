//! Dense integer matrices with exact elimination: Bareiss determinant,
//! Smith and Hermite normal forms, integer kernels and symmetric inertia.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Index, IndexMut};

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::{Int, Rat};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Int>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![Int::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Int::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Int>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::domain("ragged matrix rows"));
        }
        Ok(IntMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Convenience for literals in tests and tables.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let v = rows
            .iter()
            .map(|r| r.iter().map(|&x| Int::from(x)).collect())
            .collect();
        Self::from_rows(v).expect("ragged literal")
    }

    /// Builds a `rows x cols` matrix from a generating function.
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Int) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        IntMatrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[Int] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Int>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vec<Int> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.rows {
            return Err(Error::domain("matrix shapes do not compose"));
        }
        Ok(Self::from_fn(self.rows, other.cols, |i, j| {
            let mut acc = Int::zero();
            for k in 0..self.cols {
                if !self[(i, k)].is_zero() && !other[(k, j)].is_zero() {
                    acc += &self[(i, k)] * &other[(k, j)];
                }
            }
            acc
        }))
    }

    /// Principal submatrix on the given index set, in the given order.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        Self::from_fn(rows.len(), cols.len(), |i, j| self[(rows[i], cols[j])].clone())
    }

    pub fn block_diagonal(blocks: &[&IntMatrix]) -> Self {
        let n: usize = blocks.iter().map(|b| b.rows).sum();
        let m: usize = blocks.iter().map(|b| b.cols).sum();
        let mut out = Self::zeros(n, m);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    out[(r0 + i, c0 + j)] = b[(i, j)].clone();
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    /// row[dst] += k * row[src]
    fn add_row(&mut self, dst: usize, src: usize, k: &Int) {
        if k.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let v = &self.data[src * self.cols + j] * k;
            self.data[dst * self.cols + j] += v;
        }
    }

    /// col[dst] += k * col[src]
    fn add_col(&mut self, dst: usize, src: usize, k: &Int) {
        if k.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let v = &self.data[i * self.cols + src] * k;
            self.data[i * self.cols + dst] += v;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = -core::mem::take(&mut self.data[i * self.cols + j]);
            self.data[i * self.cols + j] = v;
        }
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> Result<Int> {
        if !self.is_square() {
            return Err(Error::domain("determinant of a non-square matrix"));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(Int::one());
        }
        let mut a = self.clone();
        let mut sign = Int::one();
        let mut prev = Int::one();
        for k in 0..n - 1 {
            if a[(k, k)].is_zero() {
                match (k + 1..n).find(|&i| !a[(i, k)].is_zero()) {
                    Some(i) => {
                        a.swap_rows(i, k);
                        sign = -sign;
                    }
                    None => return Ok(Int::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[(i, j)] * &a[(k, k)] - &a[(i, k)] * &a[(k, j)];
                    a[(i, j)] = v / &prev;
                }
            }
            prev = a[(k, k)].clone();
        }
        Ok(sign * &a[(n - 1, n - 1)])
    }

    /// Rank over `Q`.
    pub fn rank(&self) -> usize {
        let mut a = self.clone();
        let mut r = 0;
        for c in 0..a.cols {
            let Some(p) = (r..a.rows).find(|&i| !a[(i, c)].is_zero()) else {
                continue;
            };
            a.swap_rows(p, r);
            for i in r + 1..a.rows {
                if a[(i, c)].is_zero() {
                    continue;
                }
                let (f, g) = (a[(r, c)].clone(), a[(i, c)].clone());
                for j in 0..a.cols {
                    let v = &a[(i, j)] * &f - &a[(r, j)] * &g;
                    a[(i, j)] = v;
                }
            }
            r += 1;
            if r == a.rows {
                break;
            }
        }
        r
    }

    /// Smith normal form `U * M * V = D` with transformation matrices.
    ///
    /// Pivots are chosen as the smallest non-zero absolute value in the
    /// remaining block, ties broken by row-major position, so the
    /// transformation matrices are reproducible.
    pub fn smith(&self) -> SmithDecomposition {
        let (m, n) = (self.rows, self.cols);
        let mut a = self.clone();
        let mut u = IntMatrix::identity(m);
        let mut v = IntMatrix::identity(n);
        let mut v_inv = IntMatrix::identity(n);
        let mut t = 0;
        while t < m.min(n) {
            // smallest non-zero entry of the trailing block
            let mut best: Option<(usize, usize)> = None;
            for i in t..m {
                for j in t..n {
                    let x = &a[(i, j)];
                    if x.is_zero() {
                        continue;
                    }
                    if best.map_or(true, |(bi, bj)| x.abs() < a[(bi, bj)].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else { break };
            a.swap_rows(t, pi);
            u.swap_rows(t, pi);
            a.swap_cols(t, pj);
            v.swap_cols(t, pj);
            v_inv.swap_rows(t, pj);

            let mut clean = true;
            for i in t + 1..m {
                if a[(i, t)].is_zero() {
                    continue;
                }
                let q = -a[(i, t)].div_floor(&a[(t, t)]);
                a.add_row(i, t, &q);
                u.add_row(i, t, &q);
                if !a[(i, t)].is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..n {
                if a[(t, j)].is_zero() {
                    continue;
                }
                let q = -a[(t, j)].div_floor(&a[(t, t)]);
                a.add_col(j, t, &q);
                v.add_col(j, t, &q);
                // V^{-1} picks up the inverse operation on rows
                let nq = -q;
                v_inv.add_row(t, j, &nq);
                if !a[(t, j)].is_zero() {
                    clean = false;
                }
            }
            if !clean {
                continue;
            }
            let p = a[(t, t)].clone();
            let offender = (t + 1..m).find(|&i| (t + 1..n).any(|j| !a[(i, j)].is_multiple_of(&p)));
            if let Some(i) = offender {
                a.add_row(t, i, &Int::one());
                u.add_row(t, i, &Int::one());
                continue;
            }
            if p.is_negative() {
                a.negate_row(t);
                u.negate_row(t);
            }
            t += 1;
        }
        let diag = (0..m.min(n)).map(|i| a[(i, i)].clone()).collect();
        SmithDecomposition {
            left: u,
            diag,
            right: v,
            right_inverse: v_inv,
        }
    }

    /// Row-style Hermite normal form of the row span: returns the non-zero
    /// rows, echelon form with positive pivots and entries above each pivot
    /// reduced into `[0, pivot)`.
    pub fn hermite_rows(&self) -> IntMatrix {
        let mut a = self.clone();
        let mut r = 0;
        let mut pivots = Vec::new();
        for c in 0..a.cols {
            if r == a.rows {
                break;
            }
            loop {
                // smallest non-zero |entry| in column c at rows >= r
                let mut best: Option<usize> = None;
                for i in r..a.rows {
                    if !a[(i, c)].is_zero()
                        && best.map_or(true, |b| a[(i, c)].abs() < a[(b, c)].abs())
                    {
                        best = Some(i);
                    }
                }
                let Some(b) = best else { break };
                a.swap_rows(r, b);
                let mut done = true;
                for i in r + 1..a.rows {
                    if a[(i, c)].is_zero() {
                        continue;
                    }
                    let q = -a[(i, c)].div_floor(&a[(r, c)]);
                    a.add_row(i, r, &q);
                    if !a[(i, c)].is_zero() {
                        done = false;
                    }
                }
                if done {
                    break;
                }
            }
            if a[(r, c)].is_zero() {
                continue;
            }
            if a[(r, c)].is_negative() {
                a.negate_row(r);
            }
            for i in 0..r {
                let q = -a[(i, c)].div_floor(&a[(r, c)]);
                a.add_row(i, r, &q);
            }
            pivots.push(c);
            r += 1;
        }
        let rows = (0..r).map(|i| a.row(i).to_vec()).collect();
        IntMatrix::from_rows(rows).unwrap_or_else(|_| IntMatrix::zeros(0, self.cols))
            .with_cols(self.cols)
    }

    fn with_cols(mut self, cols: usize) -> Self {
        if self.rows == 0 {
            self.cols = cols;
        }
        self
    }

    /// Basis (as rows) of the integer kernel `{x in Z^n : M x = 0}`. The
    /// kernel is saturated by construction.
    pub fn integer_kernel(&self) -> IntMatrix {
        let snf = self.smith();
        let r = snf.rank();
        let cols: Vec<Vec<Int>> = (r..self.cols).map(|j| snf.right.column(j)).collect();
        IntMatrix::from_rows(cols)
            .unwrap_or_else(|_| IntMatrix::zeros(0, self.cols))
            .with_cols(self.cols)
    }

    /// Exact inverse over `Q`; `None` when singular.
    pub fn rational_inverse(&self) -> Option<Vec<Vec<Rat>>> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut a: Vec<Vec<Rat>> = (0..n)
            .map(|i| {
                let mut row: Vec<Rat> = self.row(i).iter().cloned().map(Rat::from_integer).collect();
                row.extend((0..n).map(|j| if i == j { Rat::one() } else { Rat::zero() }));
                row
            })
            .collect();
        for c in 0..n {
            let p = (c..n).find(|&i| !a[i][c].is_zero())?;
            a.swap(p, c);
            let inv = a[c][c].recip();
            for x in a[c].iter_mut() {
                *x *= &inv;
            }
            for i in 0..n {
                if i != c && !a[i][c].is_zero() {
                    let f = a[i][c].clone();
                    for j in 0..2 * n {
                        let v = &a[c][j] * &f;
                        a[i][j] -= v;
                    }
                }
            }
        }
        Some(a.into_iter().map(|row| row[n..].to_vec()).collect())
    }

    /// Exact inverse of a unimodular matrix.
    pub fn unimodular_inverse(&self) -> Result<IntMatrix> {
        let inv = self
            .rational_inverse()
            .ok_or_else(|| Error::domain("matrix is singular"))?;
        let rows = inv
            .into_iter()
            .map(|row| {
                row.into_iter()
                    .map(|x| {
                        if x.is_integer() {
                            Ok(x.to_integer())
                        } else {
                            Err(Error::domain("matrix is not unimodular"))
                        }
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        IntMatrix::from_rows(rows)
    }
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = Int;
    fn index(&self, (i, j): (usize, usize)) -> &Int {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Int {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries((0..self.rows).map(|i| self.row(i)))
            .finish()
    }
}

/// `left * M * right = diag(diag)` with unimodular `left`, `right`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithDecomposition {
    pub left: IntMatrix,
    /// Non-negative diagonal with `d_1 | d_2 | ...`; trailing zeros mark the
    /// kernel.
    pub diag: Vec<Int>,
    pub right: IntMatrix,
    /// Maintained alongside `right` so that callers never need to invert it.
    pub right_inverse: IntMatrix,
}

impl SmithDecomposition {
    pub fn rank(&self) -> usize {
        self.diag.iter().take_while(|d| !d.is_zero()).count()
    }

    /// Diagonal entries greater than one.
    pub fn invariant_factors(&self) -> Vec<Int> {
        self.diag
            .iter()
            .filter(|d| !d.is_zero() && !d.is_one())
            .cloned()
            .collect()
    }
}

/// Inertia `(n_plus, n_minus, n_zero)` of a symmetric integer matrix, by
/// rational congruence elimination with symmetric pivoting.
pub fn inertia(m: &IntMatrix) -> Result<(usize, usize, usize)> {
    if !m.is_symmetric() {
        return Err(Error::domain("inertia of a non-symmetric matrix"));
    }
    let n = m.rows();
    let mut a: Vec<Vec<Rat>> = (0..n)
        .map(|i| m.row(i).iter().cloned().map(Rat::from_integer).collect())
        .collect();
    let (mut pos, mut neg) = (0, 0);
    let mut t = 0;
    while t < n {
        if let Some(p) = (t..n).find(|&i| !a[i][i].is_zero()) {
            sym_swap(&mut a, t, p);
        } else if let Some((i, j)) =
            (t..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).find(|&(i, j)| !a[i][j].is_zero())
        {
            // e_i <- e_i + e_j makes the diagonal 2 a_ij
            sym_add(&mut a, i, j);
            sym_swap(&mut a, t, i);
        } else {
            break;
        }
        let d = a[t][t].clone();
        if d.is_positive() {
            pos += 1;
        } else {
            neg += 1;
        }
        for i in t + 1..n {
            if a[i][t].is_zero() {
                continue;
            }
            let f = &a[i][t] / &d;
            for j in t + 1..n {
                let v = &f * &a[t][j];
                a[i][j] -= v;
            }
        }
        for i in t + 1..n {
            a[i][t] = Rat::zero();
            a[t][i] = Rat::zero();
        }
        t += 1;
    }
    Ok((pos, neg, n - pos - neg))
}

fn sym_swap(a: &mut [Vec<Rat>], i: usize, j: usize) {
    if i == j {
        return;
    }
    a.swap(i, j);
    for row in a.iter_mut() {
        row.swap(i, j);
    }
}

/// Congruence by `e_dst <- e_dst + e_src`.
fn sym_add(a: &mut [Vec<Rat>], dst: usize, src: usize) {
    let n = a.len();
    for k in 0..n {
        let v = a[src][k].clone();
        a[dst][k] += v;
    }
    for k in 0..n {
        let v = a[k][src].clone();
        a[k][dst] += v;
    }
}

/// `v^T M w` for rational vectors.
pub fn bilinear(m: &IntMatrix, v: &[Rat], w: &[Rat]) -> Rat {
    let mut acc = Rat::zero();
    for i in 0..m.rows() {
        if v[i].is_zero() {
            continue;
        }
        let mut row = Rat::zero();
        for j in 0..m.cols() {
            if !w[j].is_zero() && !m[(i, j)].is_zero() {
                row += &w[j] * Rat::from_integer(m[(i, j)].clone());
            }
        }
        acc += &v[i] * row;
    }
    acc
}

/// `v^T M w` for integer vectors.
pub fn bilinear_int(m: &IntMatrix, v: &[Int], w: &[Int]) -> Int {
    let mut acc = Int::zero();
    for i in 0..m.rows() {
        if v[i].is_zero() {
            continue;
        }
        let mut row = Int::zero();
        for j in 0..m.cols() {
            if !w[j].is_zero() && !m[(i, j)].is_zero() {
                row += &w[j] * &m[(i, j)];
            }
        }
        acc += &v[i] * row;
    }
    acc
}

/// Gram matrix `B M B^T` of the rows of `b`.
pub fn congruence(m: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    let bm = b.mul(m).expect("shape checked by caller");
    bm.mul(&b.transpose()).expect("shape checked by caller")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a2() -> IntMatrix {
        IntMatrix::from_i64(&[&[-2, 1], &[1, -2]])
    }

    fn check_smith(m: &IntMatrix) {
        let s = m.smith();
        let d = s.left.mul(m).unwrap().mul(&s.right).unwrap();
        for i in 0..d.rows() {
            for j in 0..d.cols() {
                let want = if i == j { s.diag[i].clone() } else { Int::zero() };
                assert_eq!(d[(i, j)], want, "U M V not diagonal at ({i},{j})");
            }
        }
        for w in s.diag.windows(2) {
            if !w[1].is_zero() {
                assert!(w[1].is_multiple_of(&w[0]), "divisibility chain broken");
            }
        }
        assert!(s.left.determinant().unwrap().abs().is_one());
        assert!(s.right.determinant().unwrap().abs().is_one());
        let id = s.right.mul(&s.right_inverse).unwrap();
        assert_eq!(id, IntMatrix::identity(m.cols()));
    }

    #[test]
    fn smith_small_cases() {
        assert_eq!(IntMatrix::from_i64(&[&[-2]]).smith().diag, [Int::from(2)]);
        assert_eq!(a2().smith().diag, [Int::from(1), Int::from(3)]);
        let u = IntMatrix::from_i64(&[&[0, 1], &[1, 0]]);
        assert_eq!(u.smith().diag, [Int::from(1), Int::from(1)]);
        check_smith(&a2());
        check_smith(&IntMatrix::from_i64(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]));
        check_smith(&IntMatrix::from_i64(&[&[0, 0, 0], &[0, 6, 0]]));
        check_smith(&IntMatrix::from_i64(&[&[4, 6], &[6, 9], &[2, 3]]));
    }

    #[test]
    fn bareiss_matches_cofactor_expansion() {
        let m = IntMatrix::from_i64(&[&[2, -1, 0], &[-1, 2, -1], &[0, -1, 2]]);
        assert_eq!(m.determinant().unwrap(), Int::from(4));
        let z = IntMatrix::from_i64(&[&[0, 1], &[1, 0]]);
        assert_eq!(z.determinant().unwrap(), Int::from(-1));
        let sing = IntMatrix::from_i64(&[&[-2, 2], &[2, -2]]);
        assert_eq!(sing.determinant().unwrap(), Int::zero());
    }

    #[test]
    fn hermite_rows_of_generating_set() {
        let m = IntMatrix::from_i64(&[&[2, 0], &[0, 2], &[1, 1]]);
        let h = m.hermite_rows();
        assert_eq!(h, IntMatrix::from_i64(&[&[1, 1], &[0, 2]]));
    }

    #[test]
    fn kernel_is_saturated() {
        let m = IntMatrix::from_i64(&[&[2, 4]]);
        let k = m.integer_kernel();
        assert_eq!(k.rows(), 1);
        let v = k.row(0);
        assert_eq!(&Int::from(2) * &v[0] + &Int::from(4) * &v[1], Int::zero());
        assert!(num_integer::Integer::gcd(&v[0], &v[1]).is_one());
    }

    #[test]
    fn inertia_handles_zero_diagonal() {
        let u = IntMatrix::from_i64(&[&[0, 1], &[1, 0]]);
        assert_eq!(inertia(&u).unwrap(), (1, 1, 0));
        let i2 = IntMatrix::from_i64(&[&[-2, 2], &[2, -2]]);
        assert_eq!(inertia(&i2).unwrap(), (0, 1, 1));
        assert_eq!(inertia(&a2()).unwrap(), (0, 2, 0));
    }
}
