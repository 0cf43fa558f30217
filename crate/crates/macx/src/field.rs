//! Coefficient rings: Z, Q, and prime fields F_p, plus exact Gaussian
//! elimination over the field kinds.

use crate::error::{MacxError, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;

/// Coefficient ring selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RingSpec {
    Z,
    Q,
    Fp(u64),
}

impl RingSpec {
    pub const F2: RingSpec = RingSpec::Fp(2);

    pub fn parse(s: &str) -> Result<RingSpec> {
        let lower = s.to_ascii_lowercase();
        match lower.as_str() {
            "z" => Ok(RingSpec::Z),
            "q" => Ok(RingSpec::Q),
            _ => {
                let p: u64 = lower
                    .strip_prefix("fp:")
                    .or_else(|| lower.strip_prefix("f"))
                    .and_then(|t| t.parse().ok())
                    .ok_or_else(|| {
                        MacxError::InvalidArgument(format!("unknown ring `{s}` (use z, q, or fp:P)"))
                    })?;
                if !is_prime(p) || p >= (1 << 31) {
                    return Err(MacxError::NotPrime(p));
                }
                Ok(RingSpec::Fp(p))
            }
        }
    }

    pub fn is_field(&self) -> bool {
        !matches!(self, RingSpec::Z)
    }

    pub fn require_field(&self) -> Result<()> {
        if self.is_field() {
            Ok(())
        } else {
            Err(MacxError::FieldRequired(self.to_string()))
        }
    }

    pub fn require_f2(&self) -> Result<()> {
        if *self == RingSpec::F2 {
            Ok(())
        } else {
            Err(MacxError::F2Required(self.to_string()))
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            RingSpec::Z | RingSpec::Q => Scalar::Q(BigRational::zero()),
            RingSpec::Fp(p) => Scalar::Fp { p: *p, v: 0 },
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            RingSpec::Z | RingSpec::Q => Scalar::Q(BigRational::one()),
            RingSpec::Fp(p) => Scalar::Fp { p: *p, v: 1 },
        }
    }

    pub fn from_int(&self, n: i64) -> Scalar {
        match self {
            RingSpec::Z | RingSpec::Q => Scalar::Q(BigRational::from(BigInt::from(n))),
            RingSpec::Fp(p) => {
                let m = n.rem_euclid(*p as i64) as u64;
                Scalar::Fp { p: *p, v: m }
            }
        }
    }

    pub fn from_bigint(&self, n: &BigInt) -> Scalar {
        match self {
            RingSpec::Z | RingSpec::Q => Scalar::Q(BigRational::from(n.clone())),
            RingSpec::Fp(p) => {
                let m = n.mod_floor(&BigInt::from(*p));
                let digits = m.to_u64_digits().1;
                Scalar::Fp { p: *p, v: digits.first().copied().unwrap_or(0) }
            }
        }
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingSpec::Z => write!(f, "Z"),
            RingSpec::Q => write!(f, "Q"),
            RingSpec::Fp(p) => write!(f, "F{p}"),
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// An exact field element: a rational or an element of F_p carrying its
/// modulus. Mixing moduli is a programming error.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Scalar {
    Q(BigRational),
    Fp { p: u64, v: u64 },
}

impl Scalar {
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Q(r) => r.is_zero(),
            Scalar::Fp { v, .. } => *v == 0,
        }
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a + b),
            (Scalar::Fp { p, v }, Scalar::Fp { p: q, v: w }) => {
                assert_eq!(p, q, "mixed moduli");
                Scalar::Fp { p: *p, v: (v + w) % p }
            }
            _ => panic!("mixed scalar kinds"),
        }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Q(a) => Scalar::Q(-a),
            Scalar::Fp { p, v } => Scalar::Fp { p: *p, v: if *v == 0 { 0 } else { p - v } },
        }
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a * b),
            (Scalar::Fp { p, v }, Scalar::Fp { p: q, v: w }) => {
                assert_eq!(p, q, "mixed moduli");
                Scalar::Fp { p: *p, v: ((*v as u128 * *w as u128) % *p as u128) as u64 }
            }
            _ => panic!("mixed scalar kinds"),
        }
    }

    pub fn inv(&self) -> Scalar {
        match self {
            Scalar::Q(a) => {
                assert!(!a.is_zero(), "inverse of zero");
                Scalar::Q(a.recip())
            }
            Scalar::Fp { p, v } => {
                assert!(*v != 0, "inverse of zero");
                Scalar::Fp { p: *p, v: mod_inverse(*v, *p) }
            }
        }
    }

    pub fn div(&self, other: &Scalar) -> Scalar {
        self.mul(&other.inv())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Q(r) => write!(f, "{r}"),
            Scalar::Fp { v, .. } => write!(f, "{v}"),
        }
    }
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // extended Euclid
    let (mut t, mut new_t): (i128, i128) = (0, 1);
    let (mut r, mut new_r): (i128, i128) = (p as i128, (a % p) as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    assert_eq!(r, 1, "not invertible");
    t.rem_euclid(p as i128) as u64
}

/// Dense matrix over a field, for the small solves behind induced maps,
/// cup products, and Massey systems.
#[derive(Debug, Clone)]
pub struct FieldMatrix {
    pub ring: RingSpec,
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<Vec<Scalar>>,
}

impl FieldMatrix {
    pub fn zero(ring: RingSpec, rows: usize, cols: usize) -> FieldMatrix {
        FieldMatrix { ring, rows, cols, data: vec![vec![ring.zero(); cols]; rows] }
    }

    pub fn from_columns(ring: RingSpec, rows: usize, columns: &[Vec<Scalar>]) -> FieldMatrix {
        let mut m = FieldMatrix::zero(ring, rows, columns.len());
        for (c, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows);
            for (r, v) in col.iter().enumerate() {
                m.data[r][c] = v.clone();
            }
        }
        m
    }

    pub fn column(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.data[r][c].clone()).collect()
    }

    pub fn apply(&self, x: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(x.len(), self.cols);
        (0..self.rows)
            .map(|r| {
                let mut acc = self.ring.zero();
                for (c, xv) in x.iter().enumerate() {
                    if !xv.is_zero() && !self.data[r][c].is_zero() {
                        acc = acc.add(&self.data[r][c].mul(xv));
                    }
                }
                acc
            })
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.clone().row_reduce().1.len()
    }

    /// In-place Gauss-Jordan; returns (reduced matrix, pivot columns).
    pub fn row_reduce(mut self) -> (FieldMatrix, Vec<usize>) {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            let Some(pr) = (row..self.rows).find(|&r| !self.data[r][col].is_zero()) else {
                continue;
            };
            self.data.swap(row, pr);
            let inv = self.data[row][col].inv();
            for c in col..self.cols {
                self.data[row][c] = self.data[row][c].mul(&inv);
            }
            for r in 0..self.rows {
                if r != row && !self.data[r][col].is_zero() {
                    let f = self.data[r][col].clone();
                    for c in col..self.cols {
                        let delta = f.mul(&self.data[row][c]);
                        self.data[r][c] = self.data[r][c].sub(&delta);
                    }
                }
            }
            pivots.push(col);
            row += 1;
            if row == self.rows {
                break;
            }
        }
        (self, pivots)
    }

    /// A basis of the null space (as column vectors).
    pub fn null_space(&self) -> Vec<Vec<Scalar>> {
        let (red, pivots) = self.clone().row_reduce();
        let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivot_set.contains(c)).collect();
        let mut basis = Vec::with_capacity(free.len());
        for &fc in &free {
            let mut v = vec![self.ring.zero(); self.cols];
            v[fc] = self.ring.one();
            for (prow, &pcol) in pivots.iter().enumerate() {
                v[pcol] = red.data[prow][fc].neg();
            }
            basis.push(v);
        }
        basis
    }

    /// Solve A·x = b; None when inconsistent.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(b.len(), self.rows);
        let mut aug = FieldMatrix::zero(self.ring, self.rows, self.cols + 1);
        for r in 0..self.rows {
            for c in 0..self.cols {
                aug.data[r][c] = self.data[r][c].clone();
            }
            aug.data[r][self.cols] = b[r].clone();
        }
        let (red, pivots) = aug.row_reduce();
        if pivots.contains(&self.cols) {
            return None;
        }
        let mut x = vec![self.ring.zero(); self.cols];
        for (prow, &pcol) in pivots.iter().enumerate() {
            x[pcol] = red.data[prow][self.cols].clone();
        }
        Some(x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ring_parsing() {
        assert_eq!(RingSpec::parse("z").unwrap(), RingSpec::Z);
        assert_eq!(RingSpec::parse("Q").unwrap(), RingSpec::Q);
        assert_eq!(RingSpec::parse("fp:7").unwrap(), RingSpec::Fp(7));
        assert_eq!(RingSpec::parse("f2").unwrap(), RingSpec::F2);
        assert!(RingSpec::parse("fp:6").is_err());
        assert!(RingSpec::parse("gaussian").is_err());
    }

    #[test]
    fn fp_arithmetic() {
        let f7 = RingSpec::Fp(7);
        let a = f7.from_int(3);
        let b = f7.from_int(5);
        assert_eq!(a.mul(&b), f7.from_int(1));
        assert_eq!(a.inv(), f7.from_int(5));
        assert_eq!(f7.from_int(-1), f7.from_int(6));
    }

    #[test]
    fn solve_and_null_space() {
        let q = RingSpec::Q;
        // x + y = 3, x - y = 1  =>  x = 2, y = 1
        let m = FieldMatrix::from_columns(
            q,
            2,
            &[vec![q.from_int(1), q.from_int(1)], vec![q.from_int(1), q.from_int(-1)]],
        );
        let sol = m.solve(&[q.from_int(3), q.from_int(1)]).unwrap();
        assert_eq!(sol, vec![q.from_int(2), q.from_int(1)]);
        assert!(m.null_space().is_empty());

        // rank-1 matrix has a 1-dim null space
        let m = FieldMatrix::from_columns(q, 2, &[vec![q.from_int(1), q.from_int(2)], vec![q.from_int(2), q.from_int(4)]]);
        assert_eq!(m.rank(), 1);
        let ns = m.null_space();
        assert_eq!(ns.len(), 1);
        assert!(m.apply(&ns[0]).iter().all(|v| v.is_zero()));

        // inconsistent system
        let m = FieldMatrix::from_columns(q, 2, &[vec![q.from_int(1), q.from_int(1)]]);
        assert!(m.solve(&[q.from_int(1), q.from_int(2)]).is_none());
    }

    #[test]
    fn f2_nullspace() {
        let f2 = RingSpec::F2;
        let m = FieldMatrix::from_columns(
            f2,
            2,
            &[
                vec![f2.from_int(1), f2.from_int(1)],
                vec![f2.from_int(1), f2.from_int(1)],
                vec![f2.from_int(0), f2.from_int(1)],
            ],
        );
        let ns = m.null_space();
        assert_eq!(ns.len(), 1);
        assert!(m.apply(&ns[0]).iter().all(|v| v.is_zero()));
    }
}
