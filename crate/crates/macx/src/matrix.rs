//! Sparse integer matrices over arbitrary-precision integers, and Smith
//! normal form by exact elimination.
//!
//! Pivots are chosen with minimal nonzero absolute value; coefficient
//! explosion is the known failure mode of integer elimination and small
//! pivots keep intermediate entries tame on incidence-type matrices.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::collections::{BTreeMap, BTreeSet};

/// Sparse integer matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BTreeMap<usize, BigInt>>,
}

impl IntMatrix {
    pub fn zero(rows: usize, cols: usize) -> IntMatrix {
        IntMatrix { rows, cols, data: vec![BTreeMap::new(); rows] }
    }

    pub fn identity(n: usize) -> IntMatrix {
        let mut m = IntMatrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        assert!(r < self.rows && c < self.cols);
        if v.is_zero() {
            self.data[r].remove(&c);
        } else {
            self.data[r].insert(c, v);
        }
    }

    pub fn get(&self, r: usize, c: usize) -> BigInt {
        self.data[r].get(&c).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn row(&self, r: usize) -> &BTreeMap<usize, BigInt> {
        &self.data[r]
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(|r| r.len()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.nnz() == 0
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zero(self.cols, self.rows);
        for (r, row) in self.data.iter().enumerate() {
            for (&c, v) in row {
                t.data[c].insert(r, v.clone());
            }
        }
        t
    }

    pub fn multiply(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = IntMatrix::zero(self.rows, other.cols);
        for (r, row) in self.data.iter().enumerate() {
            let mut acc: BTreeMap<usize, BigInt> = BTreeMap::new();
            for (&k, v) in row {
                for (&c, w) in &other.data[k] {
                    let e = acc.entry(c).or_insert_with(BigInt::zero);
                    *e += v * w;
                }
            }
            acc.retain(|_, v| !v.is_zero());
            out.data[r] = acc;
        }
        out
    }

    /// Entries from (row, col, value) triplets; later triplets accumulate.
    pub fn from_triplets(rows: usize, cols: usize, triplets: &[(usize, usize, i64)]) -> IntMatrix {
        let mut m = IntMatrix::zero(rows, cols);
        for &(r, c, v) in triplets {
            let cur = m.get(r, c);
            m.set(r, c, cur + BigInt::from(v));
        }
        m
    }
}

/// Invariant factors and optional unimodular transforms with U·A·V diagonal.
#[derive(Debug, Clone)]
pub struct SnfResult {
    /// nonzero invariant factors d1 | d2 | ..., all positive
    pub diagonal: Vec<BigInt>,
    pub left: Option<IntMatrix>,
    pub right: Option<IntMatrix>,
}

impl SnfResult {
    pub fn rank(&self) -> usize {
        self.diagonal.len()
    }

    /// Invariant factors greater than one (the torsion coefficients).
    pub fn torsion(&self) -> Vec<BigInt> {
        self.diagonal.iter().filter(|d| !d.is_one()).cloned().collect()
    }
}

struct SnfCalc {
    rows: usize,
    cols: usize,
    data: Vec<BTreeMap<usize, BigInt>>,
    col_rows: Vec<BTreeSet<usize>>,
    left: Option<IntMatrix>,
    right: Option<IntMatrix>,
}

impl SnfCalc {
    fn new(a: &IntMatrix, with_transforms: bool) -> SnfCalc {
        let mut col_rows = vec![BTreeSet::new(); a.cols];
        for (r, row) in a.data.iter().enumerate() {
            for &c in row.keys() {
                col_rows[c].insert(r);
            }
        }
        SnfCalc {
            rows: a.rows,
            cols: a.cols,
            data: a.data.clone(),
            col_rows,
            left: with_transforms.then(|| IntMatrix::identity(a.rows)),
            right: with_transforms.then(|| IntMatrix::identity(a.cols)),
        }
    }

    fn entry(&self, r: usize, c: usize) -> Option<&BigInt> {
        self.data[r].get(&c)
    }

    fn set_entry(&mut self, r: usize, c: usize, v: BigInt) {
        if v.is_zero() {
            self.data[r].remove(&c);
            self.col_rows[c].remove(&r);
        } else {
            self.data[r].insert(c, v);
            self.col_rows[c].insert(r);
        }
    }

    /// row[dst] += q * row[src]
    fn row_axpy(&mut self, dst: usize, src: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        let src_row: Vec<(usize, BigInt)> =
            self.data[src].iter().map(|(&c, v)| (c, v.clone())).collect();
        for (c, v) in src_row {
            let cur = self.data[dst].get(&c).cloned().unwrap_or_else(BigInt::zero);
            self.set_entry(dst, c, cur + q * &v);
        }
        if let Some(u) = &mut self.left {
            let src_row: Vec<(usize, BigInt)> =
                u.data[src].iter().map(|(&c, v)| (c, v.clone())).collect();
            for (c, v) in src_row {
                let cur = u.get(dst, c);
                u.set(dst, c, cur + q * &v);
            }
        }
    }

    /// col[dst] += q * col[src]
    fn col_axpy(&mut self, dst: usize, src: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        let src_rows: Vec<usize> = self.col_rows[src].iter().copied().collect();
        for r in src_rows {
            let v = self.data[r].get(&src).cloned().unwrap_or_else(BigInt::zero);
            let cur = self.data[r].get(&dst).cloned().unwrap_or_else(BigInt::zero);
            self.set_entry(r, dst, cur + q * &v);
        }
        if let Some(vmat) = &mut self.right {
            for r in 0..vmat.rows {
                let v = vmat.get(r, src);
                if !v.is_zero() {
                    let cur = vmat.get(r, dst);
                    vmat.set(r, dst, cur + q * &v);
                }
            }
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        let cols: BTreeSet<usize> = self.data[a]
            .keys()
            .chain(self.data[b].keys())
            .copied()
            .collect();
        self.data.swap(a, b);
        for c in cols {
            let in_a = self.data[a].contains_key(&c);
            let in_b = self.data[b].contains_key(&c);
            if in_a {
                self.col_rows[c].insert(a);
            } else {
                self.col_rows[c].remove(&a);
            }
            if in_b {
                self.col_rows[c].insert(b);
            } else {
                self.col_rows[c].remove(&b);
            }
        }
        if let Some(u) = &mut self.left {
            u.data.swap(a, b);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        let rows: Vec<usize> = self.col_rows[a].union(&self.col_rows[b]).copied().collect();
        for r in rows {
            let va = self.data[r].remove(&a);
            let vb = self.data[r].remove(&b);
            if let Some(v) = va {
                self.data[r].insert(b, v);
            }
            if let Some(v) = vb {
                self.data[r].insert(a, v);
            }
        }
        self.col_rows.swap(a, b);
        if let Some(vmat) = &mut self.right {
            for r in 0..vmat.rows {
                let va = vmat.get(r, a);
                let vb = vmat.get(r, b);
                vmat.set(r, a, vb);
                vmat.set(r, b, va);
            }
        }
    }

    fn negate_row(&mut self, r: usize) {
        for v in self.data[r].values_mut() {
            *v = -(v.clone());
        }
        if let Some(u) = &mut self.left {
            for v in u.data[r].values_mut() {
                *v = -(v.clone());
            }
        }
    }

    /// Minimal-|value| nonzero entry with row ≥ k and col ≥ k.
    fn find_pivot(&self, k: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize, BigInt)> = None;
        for r in k..self.rows {
            for (&c, v) in &self.data[r] {
                if c < k {
                    continue;
                }
                let a = v.abs();
                match &best {
                    Some((_, _, b)) if *b <= a => {}
                    _ => {
                        if a.is_one() {
                            return Some((r, c));
                        }
                        best = Some((r, c, a));
                    }
                }
            }
        }
        best.map(|(r, c, _)| (r, c))
    }

    fn process(&mut self) -> Vec<BigInt> {
        let mut diagonal = Vec::new();
        let n = self.rows.min(self.cols);
        for k in 0..n {
            let Some((pr, pc)) = self.find_pivot(k) else {
                break;
            };
            self.swap_rows(k, pr);
            self.swap_cols(k, pc);
            loop {
                // clear column k below/above the pivot
                let mut dirty = false;
                loop {
                    let pivot = self.entry(k, k).cloned().expect("pivot vanished");
                    let others: Vec<usize> = self.col_rows[k]
                        .iter()
                        .copied()
                        .filter(|&r| r != k && r >= k)
                        .collect();
                    if others.is_empty() {
                        break;
                    }
                    for r in others {
                        let Some(v) = self.entry(r, k).cloned() else {
                            continue;
                        };
                        let (q, rem) = v.div_rem(&pivot);
                        self.row_axpy(r, k, &(-q));
                        if !rem.is_zero() {
                            // remainder is strictly smaller: promote it to pivot
                            self.swap_rows(k, r);
                            dirty = true;
                        }
                    }
                    if !dirty {
                        break;
                    }
                    dirty = false;
                }
                // clear row k
                let mut row_dirty = false;
                loop {
                    let pivot = self.entry(k, k).cloned().expect("pivot vanished");
                    let others: Vec<usize> = self.data[k]
                        .keys()
                        .copied()
                        .filter(|&c| c != k && c >= k)
                        .collect();
                    if others.is_empty() {
                        break;
                    }
                    for c in others {
                        let Some(v) = self.entry(k, c).cloned() else {
                            continue;
                        };
                        let (q, rem) = v.div_rem(&pivot);
                        self.col_axpy(c, k, &(-q));
                        if !rem.is_zero() {
                            self.swap_cols(k, c);
                            row_dirty = true;
                        }
                    }
                    if !row_dirty {
                        break;
                    }
                    row_dirty = false;
                }
                // clearing the row may have refilled the column
                let col_clear = self.col_rows[k].iter().all(|&r| r == k || r < k);
                let row_clear = self.data[k].keys().all(|&c| c == k || c < k);
                if col_clear && row_clear {
                    // enforce the divisibility chain into the rest of the matrix
                    let pivot = self.entry(k, k).cloned().expect("pivot vanished");
                    let offender = (k + 1..self.rows).find(|&r| {
                        self.data[r]
                            .iter()
                            .any(|(&c, v)| c > k && !(v % &pivot).is_zero())
                    });
                    match offender {
                        Some(r) => {
                            self.row_axpy(k, r, &BigInt::one());
                        }
                        None => break,
                    }
                }
            }
            let pivot = self.entry(k, k).cloned().expect("pivot vanished");
            if pivot.is_negative() {
                self.negate_row(k);
            }
            diagonal.push(self.entry(k, k).cloned().unwrap());
        }
        diagonal
    }
}

/// Smith normal form. The diagonal lists the nonzero invariant factors in
/// divisibility order; with `with_transforms` the returned U, V satisfy
/// U·A·V = diag.
pub fn smith_normal_form(a: &IntMatrix, with_transforms: bool) -> SnfResult {
    let mut calc = SnfCalc::new(a, with_transforms);
    let diagonal = calc.process();
    debug_assert!(diagonal
        .windows(2)
        .all(|w| (&w[1] % &w[0]).is_zero()));
    SnfResult { diagonal, left: calc.left, right: calc.right }
}

/// Rank of an integer matrix (over Q).
pub fn integer_rank(a: &IntMatrix) -> usize {
    smith_normal_form(a, false).rank()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diag_matrix(result: &SnfResult, rows: usize, cols: usize) -> IntMatrix {
        let mut d = IntMatrix::zero(rows, cols);
        for (i, v) in result.diagonal.iter().enumerate() {
            d.set(i, i, v.clone());
        }
        d
    }

    #[test]
    fn identity_snf() {
        let a = IntMatrix::identity(4);
        let snf = smith_normal_form(&a, false);
        assert_eq!(snf.diagonal, vec![BigInt::from(1); 4]);
        assert!(snf.torsion().is_empty());
    }

    #[test]
    fn invariant_factors_of_diag_2_3() {
        let a = IntMatrix::from_triplets(2, 2, &[(0, 0, 2), (1, 1, 3)]);
        let snf = smith_normal_form(&a, false);
        assert_eq!(snf.diagonal, vec![BigInt::from(1), BigInt::from(6)]);
    }

    #[test]
    fn transforms_reproduce_diagonal() {
        let a = IntMatrix::from_triplets(
            3,
            4,
            &[(0, 0, 2), (0, 1, 4), (0, 3, 4), (1, 0, -6), (1, 1, 6), (1, 2, 12), (2, 1, 10), (2, 3, -4)],
        );
        let snf = smith_normal_form(&a, true);
        let u = snf.left.clone().unwrap();
        let v = snf.right.clone().unwrap();
        let prod = u.multiply(&a).multiply(&v);
        assert_eq!(prod, diag_matrix(&snf, 3, 4));
    }

    #[test]
    fn random_matrices_preserve_det_and_rank() {
        // deterministic xorshift; entries in [-5, 5]
        let mut state = 0x243f6a8885a308d3u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            (state % 11) as i64 - 5
        };
        for _ in 0..20 {
            let n = 5;
            let mut a = IntMatrix::zero(n, n);
            let mut dense = vec![vec![0i64; n]; n];
            for (r, row) in dense.iter_mut().enumerate() {
                for (c, cell) in row.iter_mut().enumerate() {
                    let v = next();
                    *cell = v;
                    a.set(r, c, BigInt::from(v));
                }
            }
            let snf = smith_normal_form(&a, true);
            // determinant via naive expansion of the dense copy
            let det = naive_det(&dense);
            let prod: BigInt = snf.diagonal.iter().product();
            assert_eq!(prod.abs(), BigInt::from(det).abs(), "det preserved up to sign");
            let rank_expect = if det != 0 { n } else { rational_rank(&dense) };
            assert_eq!(snf.rank(), rank_expect);
            let u = snf.left.unwrap();
            let v = snf.right.unwrap();
            assert_eq!(u.multiply(&a).multiply(&v), diag_matrix_of(&snf.diagonal, n, n));
        }
    }

    fn diag_matrix_of(d: &[BigInt], rows: usize, cols: usize) -> IntMatrix {
        let mut m = IntMatrix::zero(rows, cols);
        for (i, v) in d.iter().enumerate() {
            m.set(i, i, v.clone());
        }
        m
    }

    fn naive_det(m: &[Vec<i64>]) -> i128 {
        let n = m.len();
        if n == 1 {
            return m[0][0] as i128;
        }
        let mut det: i128 = 0;
        for c in 0..n {
            if m[0][c] == 0 {
                continue;
            }
            let minor: Vec<Vec<i64>> = (1..n)
                .map(|r| (0..n).filter(|&x| x != c).map(|x| m[r][x]).collect())
                .collect();
            let s = if c % 2 == 0 { 1 } else { -1 };
            det += s * m[0][c] as i128 * naive_det(&minor);
        }
        det
    }

    fn rational_rank(m: &[Vec<i64>]) -> usize {
        let mut a: Vec<Vec<f64>> = m
            .iter()
            .map(|r| r.iter().map(|&v| v as f64).collect())
            .collect();
        let (rows, cols) = (a.len(), a[0].len());
        let mut rank = 0;
        for c in 0..cols {
            let piv = (rank..rows).max_by(|&i, &j| {
                a[i][c].abs().partial_cmp(&a[j][c].abs()).unwrap()
            });
            let Some(piv) = piv else { break };
            if a[piv][c].abs() < 1e-9 {
                continue;
            }
            a.swap(rank, piv);
            for r in 0..rows {
                if r != rank && a[r][c].abs() > 1e-12 {
                    let f = a[r][c] / a[rank][c];
                    for x in 0..cols {
                        a[r][x] -= f * a[rank][x];
                    }
                }
            }
            rank += 1;
            if rank == rows {
                break;
            }
        }
        rank
    }
}
