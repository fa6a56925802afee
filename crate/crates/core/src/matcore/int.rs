use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::SymMatrix;
use crate::error::{Error, Result};
use crate::fpcore::{normalize_gcd, IntVector, PrimeField};

/// Dense rectangular matrix of exact integers.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<BigInt>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Self { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    /// Panics on ragged input.
    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.as_ref().len(), cols, "ragged rows");
            data.extend(r.as_ref().iter().map(|&v| BigInt::from(v)));
        }
        Self { rows: rows.len(), cols, data }
    }

    pub fn from_big_rows(rows: Vec<Vec<BigInt>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        let n = rows.len();
        Ok(Self { rows: n, cols, data: rows.into_iter().flatten().collect() })
    }

    #[inline]
    pub fn n_rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn n_cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn rows_vec(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let s: BigInt = (0..self.cols).map(|l| self.get(i, l) * other.get(l, j)).sum();
                out.set(i, j, s);
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Result<Vec<BigInt>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch(format!("vector of length {} for {} columns", v.len(), self.cols)));
        }
        Ok((0..self.rows).map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum()).collect())
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x * c).collect() }
    }

    /// Matrix with row `i` and column `j` deleted.
    pub fn minor(&self, i: usize, j: usize) -> Self {
        let mut data = Vec::with_capacity((self.rows - 1) * (self.cols - 1));
        for r in (0..self.rows).filter(|&r| r != i) {
            for c in (0..self.cols).filter(|&c| c != j) {
                data.push(self.get(r, c).clone());
            }
        }
        Self { rows: self.rows - 1, cols: self.cols - 1, data }
    }

    /// `[[corner, borderᵀ], [border, inner]]`.
    pub fn bordered(corner: &BigInt, border: &[BigInt], inner: &IntMatrix) -> Result<Self> {
        if !inner.is_square() || border.len() != inner.rows {
            return Err(Error::DimensionMismatch("border length must match the square inner block".into()));
        }
        let n = inner.rows + 1;
        let mut m = Self::zeros(n, n);
        m.set(0, 0, corner.clone());
        for (i, b) in border.iter().enumerate() {
            m.set(0, i + 1, b.clone());
            m.set(i + 1, 0, b.clone());
            for j in 0..inner.cols {
                m.set(i + 1, j + 1, inner.get(i, j).clone());
            }
        }
        Ok(m)
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<Vec<String>> =
            (0..self.rows).map(|i| self.row(i).iter().map(ToString::to_string).collect()).collect();
        write!(f, "IntMatrix{rows:?}")
    }
}

impl From<&SymMatrix> for IntMatrix {
    fn from(m: &SymMatrix) -> Self {
        IntMatrix::from_rows(&m.rows())
    }
}

/// Anything the exact routines accept: integer matrices and ±1 symmetric matrices.
pub trait ExactMatrix {
    fn dims(&self) -> (usize, usize);
    fn big_rows(&self) -> Vec<Vec<BigInt>>;
    /// Small-integer copy when every entry fits comfortably in `i128`.
    fn small_rows(&self) -> Option<Vec<Vec<i128>>>;
}

impl ExactMatrix for IntMatrix {
    fn dims(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    fn big_rows(&self) -> Vec<Vec<BigInt>> {
        self.rows_vec()
    }

    fn small_rows(&self) -> Option<Vec<Vec<i128>>> {
        (0..self.rows).map(|i| self.row(i).iter().map(|v| v.to_i64().map(i128::from)).collect()).collect()
    }
}

impl ExactMatrix for SymMatrix {
    fn dims(&self) -> (usize, usize) {
        (self.dim(), self.dim())
    }

    fn big_rows(&self) -> Vec<Vec<BigInt>> {
        self.rows().into_iter().map(|r| r.into_iter().map(BigInt::from).collect()).collect()
    }

    fn small_rows(&self) -> Option<Vec<Vec<i128>>> {
        Some(self.rows().into_iter().map(|r| r.into_iter().map(i128::from).collect()).collect())
    }
}

/// Outcome of fraction-free elimination: rank and, for square input, the determinant.
struct Elimination {
    rank: usize,
    det: BigInt,
}

/// Bareiss elimination in checked `i128`; `None` on overflow.
fn bareiss_small(mut m: Vec<Vec<i128>>, cols: usize) -> Option<(usize, i128)> {
    let rows = m.len();
    let mut prev: i128 = 1;
    let mut rank = 0;
    let mut negate = false;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pr) = (rank..rows).find(|&r| m[r][c] != 0) else { continue };
        if pr != rank {
            m.swap(pr, rank);
            negate = !negate;
        }
        let pivot = m[rank][c];
        for r in rank + 1..rows {
            let lead = m[r][c];
            for j in c + 1..cols {
                let num = pivot.checked_mul(m[r][j])?.checked_sub(lead.checked_mul(m[rank][j])?)?;
                m[r][j] = num / prev;
            }
            m[r][c] = 0;
        }
        prev = pivot;
        rank += 1;
    }
    let det = if rows == cols && rank == rows { if negate { -prev } else { prev } } else { 0 };
    Some((rank, det))
}

fn bareiss_big(mut m: Vec<Vec<BigInt>>, cols: usize) -> (usize, BigInt) {
    let rows = m.len();
    let mut prev = BigInt::one();
    let mut rank = 0;
    let mut negate = false;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pr) = (rank..rows).find(|&r| !m[r][c].is_zero()) else { continue };
        if pr != rank {
            m.swap(pr, rank);
            negate = !negate;
        }
        let pivot = m[rank][c].clone();
        for r in rank + 1..rows {
            let lead = m[r][c].clone();
            for j in c + 1..cols {
                let num = &pivot * &m[r][j] - &lead * &m[rank][j];
                m[r][j] = num / &prev;
            }
            m[r][c] = BigInt::zero();
        }
        prev = pivot;
        rank += 1;
    }
    let det = if rows == cols && rank == rows {
        if negate {
            -prev
        } else {
            prev
        }
    } else {
        BigInt::zero()
    };
    (rank, det)
}

/// Exact elimination: the `i128` path is tried first and the arbitrary
/// precision path takes over on any overflow. Both are exact.
fn eliminate<M: ExactMatrix + ?Sized>(a: &M) -> Elimination {
    let (_, cols) = a.dims();
    if let Some(small) = a.small_rows() {
        if let Some((rank, det)) = bareiss_small(small, cols) {
            return Elimination { rank, det: BigInt::from(det) };
        }
    }
    let (rank, det) = bareiss_big(a.big_rows(), cols);
    Elimination { rank, det }
}

/// Rank over ℚ by fraction-free (Bareiss) elimination.
pub fn rank_q<M: ExactMatrix + ?Sized>(a: &M) -> usize {
    eliminate(a).rank
}

/// Exact determinant by Bareiss elimination.
pub fn det_int<M: ExactMatrix + ?Sized>(a: &M) -> Result<BigInt> {
    let (rows, cols) = a.dims();
    if rows != cols {
        return Err(Error::NotSquare { rows, cols });
    }
    if rows == 0 {
        return Ok(BigInt::one());
    }
    Ok(eliminate(a).det)
}

/// Rank of the matrix reduced mod p.
pub fn rank_fp<M: ExactMatrix + ?Sized>(a: &M, field: PrimeField) -> usize {
    let (_, cols) = a.dims();
    let mut m: Vec<Vec<u64>> =
        a.big_rows().iter().map(|r| r.iter().map(|v| field.reduce(v)).collect()).collect();
    let rows = m.len();
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pr) = (rank..rows).find(|&r| m[r][c] != 0) else { continue };
        m.swap(pr, rank);
        let inv = field.inv(m[rank][c]).expect("pivot is nonzero");
        for j in c..cols {
            m[rank][j] = field.mul(m[rank][j], inv);
        }
        for r in rank + 1..rows {
            let lead = m[r][c];
            if lead == 0 {
                continue;
            }
            for j in c..cols {
                let sub = field.mul(lead, m[rank][j]);
                m[r][j] = field.sub(m[r][j], sub);
            }
        }
        rank += 1;
    }
    rank
}

/// `(-1)^(i+j) · det(A with row i and column j removed)`; indices are 0-based.
pub fn cofactor(a: &IntMatrix, i: usize, j: usize) -> Result<BigInt> {
    if !a.is_square() {
        return Err(Error::NotSquare { rows: a.n_rows(), cols: a.n_cols() });
    }
    let n = a.n_rows();
    if i >= n {
        return Err(Error::IndexOutOfRange { index: i, len: n });
    }
    if j >= n {
        return Err(Error::IndexOutOfRange { index: j, len: n });
    }
    let minor = det_int(&a.minor(i, j))?;
    Ok(if (i + j).is_multiple_of(2) { minor } else { -minor })
}

/// Transpose of the cofactor matrix. The 1×1 case returns `[[1]]`.
pub fn adjugate(a: &IntMatrix) -> Result<IntMatrix> {
    if !a.is_square() {
        return Err(Error::NotSquare { rows: a.n_rows(), cols: a.n_cols() });
    }
    let n = a.n_rows();
    if n <= 1 {
        return Ok(IntMatrix::identity(n));
    }
    let mut adj = IntMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            adj.set(j, i, cofactor(a, i, j)?);
        }
    }
    Ok(adj)
}

/// Reduced row echelon form over ℚ together with its pivot columns.
pub(crate) fn rref(rows: Vec<Vec<BigRational>>, cols: usize) -> (Vec<Vec<BigRational>>, Vec<usize>) {
    let mut m = rows;
    let n_rows = m.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == n_rows {
            break;
        }
        let Some(pr) = (r..n_rows).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(pr, r);
        let inv = m[r][c].recip();
        for v in m[r].iter_mut() {
            *v *= &inv;
        }
        for i in 0..n_rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..cols {
                    let sub = &f * &m[r][j];
                    m[i][j] -= sub;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    m.truncate(r);
    (m, pivots)
}

/// Clears denominators and returns the primitive integer representative
/// (gcd 1, first nonzero coordinate positive).
pub(crate) fn primitive_from_rationals(v: &[BigRational]) -> IntVector {
    let lcm = v.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    normalize_gcd(&IntVector::new(ints)).expect("kernel basis vectors are nonzero")
}

/// Basis of the rational kernel, one primitive integer vector per free column.
pub fn kernel_q(a: &IntMatrix) -> Vec<IntVector> {
    let cols = a.n_cols();
    let rows: Vec<Vec<BigRational>> = (0..a.n_rows())
        .map(|i| a.row(i).iter().map(|v| BigRational::from_integer(v.clone())).collect())
        .collect();
    let (reduced, pivots) = rref(rows, cols);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![BigRational::zero(); cols];
            v[f] = BigRational::one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -reduced[r][f].clone();
            }
            primitive_from_rationals(&v)
        })
        .collect()
}

/// `true` when every entry is ±1.
pub fn is_sign_matrix(a: &IntMatrix) -> bool {
    (0..a.n_rows()).all(|i| a.row(i).iter().all(|v| v.abs().is_one()))
}
