use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rand::RngCore;

use crate::error::{Error, Result};
use crate::fpcore::IntVector;
use crate::matcore::{
    adjugate, cofactor, det_int, enumerate_symmetric, kernel_q, rank_q, rref, sample_symmetric, IntMatrix, RngStream, SymMatrix,
    ENUMERATION_MAX_BITS,
};
use crate::parallel;

/// Largest ambient dimension for the `{±1}^n` sweep.
pub const ODLYZKO_MAX_N: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OdlyzkoReport {
    /// `|V ∩ {±1}^n|`.
    pub count: u64,
    pub dim: usize,
    /// `2^dim`.
    pub bound: u64,
    pub ok: bool,
}

/// Counts sign vectors in the rational span of `basis` by testing all of `{±1}^n`.
pub fn odlyzko_check(basis: &[IntVector], n: usize) -> Result<OdlyzkoReport> {
    if n > ODLYZKO_MAX_N {
        return Err(Error::BudgetExceeded(format!("2^{n} sign vectors (n > {ODLYZKO_MAX_N})")));
    }
    if let Some(v) = basis.iter().find(|v| v.len() != n) {
        return Err(Error::DimensionMismatch(format!("basis vector of length {} in dimension {n}", v.len())));
    }
    let rows: Vec<Vec<BigRational>> =
        basis.iter().map(|v| v.coords().iter().map(|c| BigRational::from_integer(c.clone())).collect()).collect();
    let (reduced, pivots) = rref(rows, n);
    let dim = pivots.len();
    // v lies in the span iff v = Σ_r v[pivot_r] · row_r; scale rows to integers first
    let denom = reduced.iter().flatten().fold(BigInt::one(), |l, x| num_integer::Integer::lcm(&l, x.denom()));
    let scaled: Vec<Vec<BigInt>> =
        reduced.iter().map(|r| r.iter().map(|x| x.numer() * (&denom / x.denom())).collect()).collect();
    let small: Option<(i128, Vec<Vec<i128>>)> = denom.to_i64().map(i128::from).and_then(|d| {
        let rows: Option<Vec<Vec<i128>>> =
            scaled.iter().map(|r| r.iter().map(|x| x.to_i64().map(i128::from)).collect()).collect();
        rows.map(|r| (d, r))
    });
    let member = |mask: u64| -> bool {
        let sign = |j: usize| if mask >> j & 1 == 1 { -1i64 } else { 1 };
        match &small {
            Some((d, rows)) => (0..n).all(|j| {
                let combo: i128 = pivots.iter().zip(rows).map(|(&c, r)| sign(c) as i128 * r[j]).sum();
                combo == d * sign(j) as i128
            }),
            None => (0..n).all(|j| {
                let combo: BigInt = pivots.iter().zip(&scaled).map(|(&c, r)| &r[j] * sign(c)).sum();
                combo == &denom * sign(j)
            }),
        }
    };
    let count = parallel::map_range(1u64 << n, member).into_iter().filter(|&b| b).count() as u64;
    let bound = 1u64 << dim;
    Ok(OdlyzkoReport { count, dim, bound, ok: count <= bound })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RankStepMode {
    Exhaustive,
    MonteCarlo { trials: u64, seed: u64 },
}

#[derive(Debug, Clone, PartialEq)]
pub struct RankStepReport {
    pub n: usize,
    pub ell: usize,
    pub mode: RankStepMode,
    /// Samples whose leading n×n block has rank ℓ.
    pub conditioned: u64,
    /// Of those, samples whose full (n+1)×(n+1) matrix has rank ℓ+2.
    pub successes: u64,
    pub frequency: BigRational,
    /// `1 − 2^{−n+ℓ}`.
    pub bound: BigRational,
    /// Wilson interval at z = 3 (exact frequency twice in exhaustive mode).
    pub interval: (f64, f64),
    pub ok: bool,
}

/// Wilson score interval for `successes / total` at the given z.
pub fn wilson_interval(successes: u64, total: u64, z: f64) -> (f64, f64) {
    if total == 0 {
        return (0.0, 1.0);
    }
    let n = total as f64;
    let phat = successes as f64 / n;
    let z2 = z * z;
    let centre = (phat + z2 / (2.0 * n)) / (1.0 + z2 / n);
    let half = z * (phat * (1.0 - phat) / n + z2 / (4.0 * n * n)).sqrt() / (1.0 + z2 / n);
    ((centre - half).max(0.0), (centre + half).min(1.0))
}

/// `Pr[rank M_{n+1} = ℓ+2 | rank M_n = ℓ] ≥ 1 − 2^{−n+ℓ}`, with `M_n` the
/// leading block of `M_{n+1}`. Conditioning filters whole samples.
pub fn rank_step_check(n: usize, ell: usize, mode: RankStepMode) -> Result<RankStepReport> {
    if n < 2 || ell + 2 > n {
        return Err(Error::Precondition(format!("need ℓ ≤ n − 2, got n={n}, ℓ={ell}")));
    }
    let classify = |m: &SymMatrix| -> (bool, bool) {
        let lead = m.leading(n).expect("n < n + 1");
        let cond = rank_q(&lead) == ell;
        (cond, cond && rank_q(m) == ell + 2)
    };
    let outcomes: Vec<(bool, bool)> = match mode {
        RankStepMode::Exhaustive => {
            let bits = (n + 1) * (n + 2) / 2;
            if bits > ENUMERATION_MAX_BITS {
                return Err(Error::BudgetExceeded(format!("2^{bits} matrices of size {}", n + 1)));
            }
            let all: Vec<SymMatrix> = enumerate_symmetric(n + 1)?.collect();
            parallel::map(&all, classify)
        }
        RankStepMode::MonteCarlo { trials, seed } => parallel::map_range(trials, |i| {
            classify(&sample_symmetric(n + 1, &mut RngStream::new(seed, i)).expect("n + 1 ≥ 1"))
        }),
    };
    let conditioned = outcomes.iter().filter(|o| o.0).count() as u64;
    let successes = outcomes.iter().filter(|o| o.1).count() as u64;
    if conditioned == 0 {
        return Err(Error::EmptyConditioning);
    }
    let frequency = BigRational::new(successes.into(), conditioned.into());
    let bound = BigRational::one() - BigRational::new(1.into(), BigInt::from(2).pow((n - ell) as u32));
    let (interval, ok) = match mode {
        RankStepMode::Exhaustive => {
            let f = frequency.to_f64().unwrap_or(0.0);
            ((f, f), frequency >= bound)
        }
        RankStepMode::MonteCarlo { .. } => {
            let iv = wilson_interval(successes, conditioned, 3.0);
            (iv, iv.1 >= bound.to_f64().unwrap_or(1.0))
        }
    };
    Ok(RankStepReport { n, ell, mode, conditioned, successes, frequency, bound, interval, ok })
}

/// `adj(A) = λ·a·aᵀ` with `a` primitive and `A·a = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdjFactorization {
    pub lambda: BigRational,
    pub a: IntVector,
}

/// Factors the adjugate of a symmetric corank-1 matrix.
pub fn adjugate_factorization(m: &IntMatrix) -> Result<AdjFactorization> {
    if !m.is_square() {
        return Err(Error::NotSquare { rows: m.n_rows(), cols: m.n_cols() });
    }
    if !m.is_symmetric() {
        return Err(Error::Precondition("matrix must be symmetric".into()));
    }
    let corank = m.n_cols() - rank_q(m);
    if corank != 1 {
        return Err(Error::Corank { expected: 1, found: corank });
    }
    let a = kernel_q(m).pop().expect("corank 1 gives one kernel vector");
    let adj = adjugate(m)?;
    let i = a.support()[0];
    let ai = &a.coords()[i];
    let lambda = BigRational::new(adj.get(i, i).clone(), ai * ai);
    assert!(!lambda.is_zero(), "adjugate of a corank-1 matrix is nonzero");
    let n = m.n_rows();
    for r in 0..n {
        for c in 0..n {
            let expected = &lambda * BigRational::from_integer(&a.coords()[r] * &a.coords()[c]);
            if BigRational::from_integer(adj.get(r, c).clone()) != expected {
                return Err(Error::Precondition(format!("adjugate entry ({r},{c}) is not λ·a_r·a_c")));
            }
        }
    }
    Ok(AdjFactorization { lambda, a })
}

/// Outcome of testing the bordered determinant against `±λ(Σ a_i x_i)²`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BorderedSummary {
    pub factorization: AdjFactorization,
    /// `A·a = 0`.
    pub kernel_ok: bool,
    /// Number of `(x₁, x)` borders tested.
    pub cases: u64,
    /// Borders with `det = −λ(Σ a_i x_i)²`.
    pub negative_sign_matches: u64,
    /// Borders with `det = +λ(Σ a_i x_i)²`.
    pub positive_sign_matches: u64,
    /// First border where the `+λ` form fails: `(x₁, x, det, λ(Σ a_i x_i)²)`.
    pub positive_sign_counterexample: Option<(i64, Vec<i64>, BigInt, BigRational)>,
}

impl BorderedSummary {
    /// Every border satisfies `det = −λ(Σ a_i x_i)²`.
    pub fn identity_holds(&self) -> bool {
        self.kernel_ok && self.negative_sign_matches == self.cases
    }
}

/// Evaluates `det [[x₁, xᵀ], [x, A]]` for every `x₁ ∈ {±1}`, `x ∈ {±1}^m`.
///
/// Laplace expansion along the first row gives
/// `det = x₁·det(A) − Σ c_ij x_i x_j`, and with `det(A) = 0`,
/// `c_ij = λ a_i a_j` this is `−λ(Σ a_i x_i)²`. Both signs are tallied.
pub fn check_bordered_identity(m: &IntMatrix) -> Result<BorderedSummary> {
    let factorization = adjugate_factorization(m)?;
    let size = m.n_rows();
    if size + 1 > 24 {
        return Err(Error::BudgetExceeded(format!("2^{} borders", size + 1)));
    }
    let kernel_ok = m.mul_vec(factorization.a.coords())?.iter().all(Zero::is_zero);
    let mut summary = BorderedSummary {
        factorization,
        kernel_ok,
        cases: 0,
        negative_sign_matches: 0,
        positive_sign_matches: 0,
        positive_sign_counterexample: None,
    };
    for mask in 0u64..(1 << (size + 1)) {
        let sign = |j: usize| if mask >> j & 1 == 1 { -1i64 } else { 1 };
        let x1 = sign(0);
        let x: Vec<i64> = (1..=size).map(sign).collect();
        let border: Vec<BigInt> = x.iter().map(|&v| BigInt::from(v)).collect();
        let det = det_int(&IntMatrix::bordered(&BigInt::from(x1), &border, m)?)?;
        let s = summary.factorization.a.dot(&border);
        let form = &summary.factorization.lambda * BigRational::from_integer(&s * &s);
        let det_q = BigRational::from_integer(det.clone());
        summary.cases += 1;
        if det_q == -form.clone() {
            summary.negative_sign_matches += 1;
        }
        if det_q == form {
            summary.positive_sign_matches += 1;
        } else if summary.positive_sign_counterexample.is_none() {
            summary.positive_sign_counterexample = Some((x1, x, det, form));
        }
    }
    Ok(summary)
}

/// Outcome of the cofactor expansion check over all sign borders.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LaplaceSummary {
    pub cases: u64,
    pub matches: u64,
}

impl LaplaceSummary {
    pub fn ok(&self) -> bool {
        self.matches == self.cases
    }
}

/// Tests `det [[x₁, xᵀ], [x, A]] = x₁·det(A) − Σ_{i,j} c_ij x_i x_j` for every
/// `x₁ ∈ {±1}`, `x ∈ {±1}^m`, with `c_ij` the cofactors of `A`.
pub fn laplace_check(m: &IntMatrix) -> Result<LaplaceSummary> {
    if !m.is_square() {
        return Err(Error::NotSquare { rows: m.n_rows(), cols: m.n_cols() });
    }
    let size = m.n_rows();
    if size + 1 > 24 {
        return Err(Error::BudgetExceeded(format!("2^{} borders", size + 1)));
    }
    let det_a = det_int(m)?;
    let mut cof = vec![vec![BigInt::zero(); size]; size];
    for (i, row) in cof.iter_mut().enumerate() {
        for (j, c) in row.iter_mut().enumerate() {
            *c = cofactor(m, i, j)?;
        }
    }
    let mut summary = LaplaceSummary { cases: 0, matches: 0 };
    for mask in 0u64..(1 << (size + 1)) {
        let sign = |j: usize| if mask >> j & 1 == 1 { -1i64 } else { 1 };
        let x1 = BigInt::from(sign(0));
        let x: Vec<BigInt> = (1..=size).map(|j| BigInt::from(sign(j))).collect();
        let det = det_int(&IntMatrix::bordered(&x1, &x, m)?)?;
        let mut quad = BigInt::zero();
        for i in 0..size {
            for j in 0..size {
                quad += &cof[i][j] * &x[i] * &x[j];
            }
        }
        summary.cases += 1;
        summary.matches += (det == &x1 * &det_a - quad) as u64;
    }
    Ok(summary)
}

/// `R = Σ_{j∈U₂} w_j · col_j(adj A)` for invertible `A` (indices 0-based).
pub fn r_vector(m: &IntMatrix, u2: &[usize], w: &IntVector) -> Result<IntVector> {
    if !m.is_square() {
        return Err(Error::NotSquare { rows: m.n_rows(), cols: m.n_cols() });
    }
    if u2.is_empty() {
        return Err(Error::Precondition("U₂ must be nonempty".into()));
    }
    if u2.len() != w.len() {
        return Err(Error::DimensionMismatch(format!("{} weights for {} indices", w.len(), u2.len())));
    }
    let n = m.n_rows();
    if let Some(&bad) = u2.iter().find(|&&j| j >= n) {
        return Err(Error::IndexOutOfRange { index: bad, len: n });
    }
    if det_int(m)?.is_zero() {
        return Err(Error::Singular);
    }
    let adj = adjugate(m)?;
    let r = (0..n).map(|i| u2.iter().zip(w.coords()).map(|(&j, wj)| adj.get(i, j) * wj).sum()).collect();
    Ok(IntVector::new(r))
}

/// Draws `w = x − x′` for independent sign vectors: each coordinate is
/// 0 w.p. 1/2 and ±2 w.p. 1/4 each.
pub fn lazy_step_weights(len: usize, rng: &mut RngStream) -> IntVector {
    let coords = (0..len)
        .map(|_| match rng.next_u32() % 4 {
            0 => BigInt::from(2),
            1 => BigInt::from(-2),
            _ => BigInt::zero(),
        })
        .collect();
    IntVector::new(coords)
}
