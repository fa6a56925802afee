use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::anticon::{atom_probability_sup, MuParam};
use crate::error::{Error, Result};
use crate::fpcore::{FpVector, IntVector, PrimeField};
use crate::matcore::{kernel_q, rank_q, IntMatrix, SymMatrix};
use crate::parallel;

/// Largest `p^n` the F_p event checks enumerate.
pub const EVENT_SPACE_BUDGET: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    Int(IntVector),
    Fp(FpVector),
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Int(v) => write!(f, "{v}"),
            Witness::Fp(v) => write!(f, "{v}"),
        }
    }
}

/// Outcome of an event check, with a concrete failing vector when it fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EventVerdict {
    pub event: &'static str,
    pub verdict: bool,
    pub witness: Option<Witness>,
    /// Grid-sup atom probability of the witness, when relevant.
    pub witness_rho: Option<BigRational>,
    /// The verdict used a finite μ-grid in place of the supremum over [0, 1/2].
    pub grid_approximate: bool,
}

impl EventVerdict {
    fn pass(event: &'static str, grid_approximate: bool) -> Self {
        Self { event, verdict: true, witness: None, witness_rho: None, grid_approximate }
    }
}

/// Every nonzero integer null vector of `A` has grid-sup atom probability at most `ρ`.
///
/// Corank 0 passes vacuously. Corank 1 tests the primitive kernel vector
/// (sign does not change atom probabilities). Higher corank is refused.
pub fn null_event_check(a: &IntMatrix, rho: &BigRational, grid: &[MuParam]) -> Result<EventVerdict> {
    if grid.is_empty() {
        return Err(Error::EmptyGrid);
    }
    let corank = a.n_cols() - rank_q(a);
    match corank {
        0 => Ok(EventVerdict::pass("null", true)),
        1 => {
            let v = kernel_q(a).pop().expect("corank 1");
            let r = atom_probability_sup(&v, grid)?;
            if &r <= rho {
                Ok(EventVerdict::pass("null", true))
            } else {
                Ok(EventVerdict {
                    event: "null",
                    verdict: false,
                    witness: Some(Witness::Int(v)),
                    witness_rho: Some(r),
                    grid_approximate: true,
                })
            }
        }
        c => Err(Error::KernelLattice(c)),
    }
}

fn check_space(n: usize, p: u64) -> Result<u64> {
    match p.checked_pow(n as u32) {
        Some(s) if s <= EVENT_SPACE_BUDGET => Ok(s),
        _ => Err(Error::BudgetExceeded(format!("p^n = {p}^{n} > {EVENT_SPACE_BUDGET}"))),
    }
}

/// Vector with code `c`, coordinate 0 most significant.
fn decode(mut code: u64, p: u64, n: usize) -> Vec<u64> {
    let mut v = vec![0u64; n];
    for slot in v.iter_mut().rev() {
        *slot = code % p;
        code /= p;
    }
    v
}

/// Exhaustive F_p event checks for one `(n, p, μ-grid)`.
///
/// Atom probabilities do not depend on the matrix, so they are computed once
/// for every nonzero vector and reused across matrices.
pub struct OrthChecker {
    n: usize,
    field: PrimeField,
    vectors: Vec<Vec<u64>>,
    /// Grid-sup atom probabilities, absent for support-only checkers.
    rho: Option<Vec<BigRational>>,
}

impl OrthChecker {
    pub fn new(n: usize, field: PrimeField, grid: &[MuParam]) -> Result<Self> {
        if grid.is_empty() {
            return Err(Error::EmptyGrid);
        }
        let size = check_space(n, field.modulus())?;
        let vectors: Vec<Vec<u64>> = (1..size).map(|c| decode(c, field.modulus(), n)).collect();
        let rho = parallel::map(&vectors, |v| {
            atom_probability_sup(&FpVector::new(field, v.clone()).expect("reduced"), grid).expect("grid is nonempty")
        });
        Ok(Self { n, field, vectors, rho: Some(rho) })
    }

    /// Checker for support events only; skips the atom probabilities.
    pub fn support_only(n: usize, field: PrimeField) -> Result<Self> {
        let size = check_space(n, field.modulus())?;
        let vectors = (1..size).map(|c| decode(c, field.modulus(), n)).collect();
        Ok(Self { n, field, vectors, rho: None })
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    fn orthogonal_rows(&self, m: &SymMatrix, v: &[u64]) -> usize {
        let p = self.field.modulus() as i64;
        (0..self.n)
            .filter(|&i| {
                let s: i64 = (0..self.n).map(|j| m.entry(i, j) * v[j] as i64).sum();
                s.rem_euclid(p) == 0
            })
            .count()
    }

    fn qualifying<'a>(&'a self, m: &'a SymMatrix, beta_n: usize) -> impl Iterator<Item = usize> + 'a {
        let need = self.n.saturating_sub(beta_n);
        (0..self.vectors.len()).filter(move |&i| self.orthogonal_rows(m, &self.vectors[i]) >= need)
    }

    fn check_dim(&self, m: &SymMatrix) -> Result<()> {
        if m.dim() != self.n {
            return Err(Error::DimensionMismatch(format!("matrix of size {} for n = {}", m.dim(), self.n)));
        }
        Ok(())
    }

    /// No nonzero vector orthogonal to at least `n − βn` rows has grid-sup atom probability above `α`.
    pub fn orth(&self, m: &SymMatrix, alpha: &BigRational, beta_n: usize) -> Result<EventVerdict> {
        self.check_dim(m)?;
        let Some(rho) = &self.rho else {
            return Err(Error::Precondition("checker was built without atom probabilities".into()));
        };
        let fail = self.qualifying(m, beta_n).find(|&i| &rho[i] > alpha);
        Ok(match fail {
            None => EventVerdict::pass("orth", true),
            Some(i) => EventVerdict {
                event: "orth",
                verdict: false,
                witness: Some(Witness::Fp(FpVector::new(self.field, self.vectors[i].clone())?)),
                witness_rho: Some(rho[i].clone()),
                grid_approximate: true,
            },
        })
    }

    /// Every nonzero vector orthogonal to at least `n − βn` rows has support at least `d`.
    pub fn spt(&self, m: &SymMatrix, d: usize, beta_n: usize) -> Result<EventVerdict> {
        self.check_dim(m)?;
        let fail = self.qualifying(m, beta_n).find(|&i| self.vectors[i].iter().filter(|&&c| c != 0).count() < d);
        Ok(match fail {
            None => EventVerdict::pass("spt", false),
            Some(i) => EventVerdict {
                event: "spt",
                verdict: false,
                witness: Some(Witness::Fp(FpVector::new(self.field, self.vectors[i].clone())?)),
                witness_rho: None,
                grid_approximate: false,
            },
        })
    }
}

/// One-shot form of [`OrthChecker::orth`].
pub fn orth_event_check(
    m: &SymMatrix,
    alpha: &BigRational,
    beta_n: usize,
    field: PrimeField,
    grid: &[MuParam],
) -> Result<EventVerdict> {
    OrthChecker::new(m.dim(), field, grid)?.orth(m, alpha, beta_n)
}

/// One-shot form of [`OrthChecker::spt`]; no atom probabilities are needed.
pub fn spt_event_check(m: &SymMatrix, d: usize, beta_n: usize, field: PrimeField) -> Result<EventVerdict> {
    OrthChecker::support_only(m.dim(), field)?.spt(m, d, beta_n)
}

#[derive(Debug, Clone, PartialEq)]
pub struct EntropyReport {
    /// `Σ_{t=0}^{⌊βn⌋} C(n, t)`.
    pub partial_sum: BigUint,
    /// `2^{n H(β)}`.
    pub bound: f64,
    pub holds: bool,
}

/// Binary entropy in bits.
pub fn binary_entropy(x: f64) -> f64 {
    if x <= 0.0 || x >= 1.0 {
        return 0.0;
    }
    -x * x.log2() - (1.0 - x) * (1.0 - x).log2()
}

/// Partial binomial sum against `2^{nH(β)}`, compared in log₂ with 1e-12 slack.
pub fn entropy_bound(beta: &BigRational, n: usize) -> Result<EntropyReport> {
    if beta.is_negative() || beta > &BigRational::new(1.into(), 2.into()) {
        return Err(Error::Param { key: "beta".into(), reason: format!("{beta} is outside [0, 1/2]") });
    }
    let top = (beta * BigRational::from_integer(BigInt::from(n))).floor().to_integer().to_usize().unwrap_or(0);
    let mut term = BigUint::one();
    let mut partial_sum = BigUint::zero();
    for t in 0..=top {
        if t > 0 {
            term = term * (n - t + 1) / t;
        }
        partial_sum += &term;
    }
    let h = binary_entropy(beta.to_f64().unwrap_or(0.0));
    let log_sum = big_log2(&partial_sum);
    Ok(EntropyReport { bound: (n as f64 * h).exp2(), holds: log_sum <= n as f64 * h + 1e-12, partial_sum })
}

/// `log₂` of a positive big integer, accurate to double precision.
pub(crate) fn big_log2(x: &BigUint) -> f64 {
    let bits = x.bits();
    if bits <= 1000 {
        return x.to_f64().unwrap_or(f64::INFINITY).log2();
    }
    let shift = bits - 64;
    (x >> shift).to_f64().unwrap_or(0.0).log2() + shift as f64
}
