use std::fmt;

use rand::RngCore;

use super::RngStream;
use crate::error::{Error, Result};

/// Largest number of free upper-triangle bits [`enumerate_symmetric`] will walk.
pub const ENUMERATION_MAX_BITS: usize = 30;

/// Number of entries on and above the diagonal of an `n × n` matrix.
pub const fn tri_len(n: usize) -> usize {
    n * (n + 1) / 2
}

/// Row-major position of `(i, j)`, `i ≤ j`, within the upper triangle.
#[inline]
fn tri_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i <= j && j < n);
    // rows 0..i hold n + (n-1) + ... + (n-i+1) cells
    i * n - i * i.saturating_sub(1) / 2 + (j - i)
}

/// Symmetric matrix with entries in {+1, −1}, stored as its bit-packed upper
/// triangle (bit set ↔ entry +1).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SymMatrix {
    n: usize,
    bits: Vec<u64>,
}

impl SymMatrix {
    fn blank(n: usize) -> Self {
        Self { n, bits: vec![0; tri_len(n).div_ceil(64)] }
    }

    /// Builds the matrix whose upper-triangle bits, read row-major, are the
    /// binary digits of `code` (least significant bit = entry (0,0)).
    pub fn from_code(n: usize, code: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyDimension);
        }
        let len = tri_len(n);
        if len > 64 {
            return Err(Error::BudgetExceeded(format!("{n}x{n} matrix does not fit a 64-bit code")));
        }
        let mask = if len == 64 { u64::MAX } else { (1u64 << len) - 1 };
        Ok(Self { n, bits: vec![code & mask] })
    }

    /// Entry `(i, j)` is `+1` iff `plus(i, j)`; only `i ≤ j` is queried.
    pub fn from_fn(n: usize, plus: impl Fn(usize, usize) -> bool) -> Self {
        let mut m = Self::blank(n);
        for i in 0..n {
            for j in i..n {
                if plus(i, j) {
                    m.set_bit(tri_index(n, i, j));
                }
            }
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::EmptyDimension);
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::NotSquare { rows: n, cols: row.len() });
            }
            for (j, &v) in row.iter().enumerate() {
                if v != 1 && v != -1 {
                    return Err(Error::Precondition(format!("entry ({i},{j}) = {v} is not ±1")));
                }
                if rows[j][i] != v {
                    return Err(Error::Precondition(format!("entries ({i},{j}) and ({j},{i}) differ")));
                }
            }
        }
        Ok(Self::from_fn(n, |i, j| rows[i][j] == 1))
    }

    pub fn all_ones(n: usize) -> Self {
        Self::from_fn(n, |_, _| true)
    }

    #[inline]
    fn bit(&self, idx: usize) -> bool {
        self.bits[idx / 64] >> (idx % 64) & 1 == 1
    }

    #[inline]
    fn set_bit(&mut self, idx: usize) {
        self.bits[idx / 64] |= 1 << (idx % 64);
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn entry(&self, i: usize, j: usize) -> i64 {
        let (lo, hi) = if i <= j { (i, j) } else { (j, i) };
        if self.bit(tri_index(self.n, lo, hi)) {
            1
        } else {
            -1
        }
    }

    pub fn row(&self, i: usize) -> Vec<i64> {
        (0..self.n).map(|j| self.entry(i, j)).collect()
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        (0..self.n).map(|i| self.row(i)).collect()
    }

    /// The counter value this matrix has in [`enumerate_symmetric`], when it fits.
    pub fn code(&self) -> Option<u64> {
        (tri_len(self.n) <= 64).then(|| self.bits[0])
    }

    /// Top-left `m × m` block.
    pub fn leading(&self, m: usize) -> Result<Self> {
        if m == 0 || m > self.n {
            return Err(Error::IndexOutOfRange { index: m, len: self.n });
        }
        Ok(Self::from_fn(m, |i, j| self.entry(i, j) == 1))
    }

    /// The symmetric matrix left after deleting row and column `k`.
    pub fn without(&self, k: usize) -> Result<Self> {
        if k >= self.n {
            return Err(Error::IndexOutOfRange { index: k, len: self.n });
        }
        if self.n == 1 {
            return Err(Error::EmptyDimension);
        }
        let keep: Vec<usize> = (0..self.n).filter(|&i| i != k).collect();
        Ok(Self::from_fn(self.n - 1, |i, j| self.entry(keep[i], keep[j]) == 1))
    }
}

impl fmt::Debug for SymMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SymMatrix{:?}", self.rows())
    }
}

/// Every symmetric ±1 matrix of size `n`, in binary-counter order of the
/// row-major upper triangle.
pub fn enumerate_symmetric(n: usize) -> Result<impl Iterator<Item = SymMatrix>> {
    if n == 0 {
        return Err(Error::EmptyDimension);
    }
    let len = tri_len(n);
    if len > ENUMERATION_MAX_BITS {
        return Err(Error::BudgetExceeded(format!(
            "enumeration bound exceeded: n = {n} needs 2^{len} matrices (limit 2^{ENUMERATION_MAX_BITS})"
        )));
    }
    Ok((0..1u64 << len).map(move |code| SymMatrix { n, bits: vec![code] }))
}

/// Uniform symmetric ±1 matrix: each upper-triangle entry is an independent
/// fair sign, taken from consecutive bits of the stream's 64-bit words.
pub fn sample_symmetric(n: usize, rng: &mut RngStream) -> Result<SymMatrix> {
    if n == 0 {
        return Err(Error::EmptyDimension);
    }
    let mut m = SymMatrix::blank(n);
    for word in m.bits.iter_mut() {
        *word = rng.next_u64();
    }
    let rem = tri_len(n) % 64;
    if rem != 0 {
        *m.bits.last_mut().unwrap() &= (1u64 << rem) - 1;
    }
    Ok(m)
}

/// `Σ⁻¹ M Σ` for the permutation matrix of `sigma`: output `(i, j)` is input
/// `(σ(i), σ(j))`.
pub fn conjugate_by_permutation(m: &SymMatrix, sigma: &[usize]) -> Result<SymMatrix> {
    let n = m.dim();
    if sigma.len() != n {
        return Err(Error::InvalidPermutation(format!("length {} for dimension {n}", sigma.len())));
    }
    let mut seen = vec![false; n];
    for &s in sigma {
        if s >= n || std::mem::replace(&mut seen[s], true) {
            return Err(Error::InvalidPermutation(format!("{sigma:?} is not a permutation of 0..{n}")));
        }
    }
    Ok(SymMatrix::from_fn(n, |i, j| m.entry(sigma[i], sigma[j]) == 1))
}
