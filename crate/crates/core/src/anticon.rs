//! Exact μ-atom probabilities of signed sums `Σ a_i x_i` over ℤ and F_p.
//!
//! Each `x_i` is 0 with probability μ and ±1 with probability (1−μ)/2.
//! Writing μ = u/v, one step multiplies the total weight by `2v`
//! (0 ↦ `2u`, ±a ↦ `v−u`), so a walk of length n is carried as integer
//! numerators over the common denominator `(2v)^n`.

use std::collections::BTreeMap;
use std::f64::consts::TAU;
use std::fmt;
use std::ops::{Add, Mul};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::fpcore::{FpVector, IntVector, PrimeField};
use crate::parallel;

/// Dense integer walks are used while the support width stays below this.
const DENSE_WIDTH_MAX: u64 = 1 << 22;

/// Parameter μ ∈ [0, 1/2] of the lazy sign variable.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MuParam(BigRational);

impl MuParam {
    pub fn new(mu: BigRational) -> Result<Self> {
        let half = BigRational::new(1.into(), 2.into());
        if mu < BigRational::zero() || mu > half {
            return Err(Error::MuOutOfRange(mu.to_string()));
        }
        Ok(Self(mu))
    }

    pub fn ratio(num: i64, den: i64) -> Result<Self> {
        if den == 0 {
            return Err(Error::MuOutOfRange(format!("{num}/0")));
        }
        Self::new(BigRational::new(num.into(), den.into()))
    }

    pub fn zero() -> Self {
        Self(BigRational::zero())
    }

    pub fn half() -> Self {
        Self(BigRational::new(1.into(), 2.into()))
    }

    pub fn value(&self) -> &BigRational {
        &self.0
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(0.0)
    }

    /// `max{μ, (1−μ)/2}`, the largest single-step mass.
    pub fn max_step_mass(&self) -> BigRational {
        let lazy = (BigRational::one() - &self.0) / BigRational::from_integer(2.into());
        if self.0 > lazy {
            self.0.clone()
        } else {
            lazy
        }
    }

    /// Step weights `(w0, w±, 2v)` with `w0 + 2·w± = 2v`.
    fn weights(&self) -> (BigUint, BigUint, BigUint) {
        let u = self.0.numer().to_biguint().expect("mu is nonnegative");
        let v = self.0.denom().to_biguint().expect("denominator is positive");
        (&u * 2u32, &v - &u, v * 2u32)
    }
}

impl fmt::Display for MuParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Debug for MuParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MuParam({})", self.0)
    }
}

/// `{j/64 : 0 ≤ j ≤ 32}`.
pub fn default_mu_grid() -> Vec<MuParam> {
    (0..=32).map(|j| MuParam::ratio(j, 64).expect("grid point in range")).collect()
}

/// The ring a distribution lives on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Ring {
    Integers,
    Fp(PrimeField),
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ring::Integers => f.write_str("Z"),
            Ring::Fp(field) => write!(f, "F_{}", field.modulus()),
        }
    }
}

#[derive(Clone, PartialEq, Eq)]
enum Masses {
    /// Index r holds the numerator of residue r.
    Dense(Vec<BigUint>),
    Sparse(BTreeMap<BigInt, BigUint>),
}

/// Exact probability mass function: numerators over one common denominator.
#[derive(Clone, PartialEq, Eq)]
pub struct ExactDist {
    ring: Ring,
    denom: BigUint,
    masses: Masses,
}

impl ExactDist {
    pub fn ring(&self) -> Ring {
        self.ring
    }

    /// Common denominator of every mass.
    pub fn denominator(&self) -> &BigUint {
        &self.denom
    }

    fn ratio(&self, numer: &BigUint) -> BigRational {
        BigRational::new(BigInt::from(numer.clone()), BigInt::from(self.denom.clone()))
    }

    /// Probability of the value `c` (reduced mod p on F_p).
    pub fn mass(&self, c: &BigInt) -> BigRational {
        match (&self.masses, self.ring) {
            (Masses::Dense(v), Ring::Fp(field)) => self.ratio(&v[field.reduce(c) as usize]),
            (Masses::Sparse(m), _) => m.get(c).map_or_else(BigRational::zero, |n| self.ratio(n)),
            (Masses::Dense(_), Ring::Integers) => unreachable!("integer laws are stored sparsely"),
        }
    }

    /// Nonzero masses in increasing order of value.
    pub fn masses(&self) -> Vec<(BigInt, BigRational)> {
        match &self.masses {
            Masses::Dense(v) => v
                .iter()
                .enumerate()
                .filter(|(_, n)| !n.is_zero())
                .map(|(r, n)| (BigInt::from(r), self.ratio(n)))
                .collect(),
            Masses::Sparse(m) => m.iter().map(|(c, n)| (c.clone(), self.ratio(n))).collect(),
        }
    }

    fn numerators(&self) -> Box<dyn Iterator<Item = &BigUint> + '_> {
        match &self.masses {
            Masses::Dense(v) => Box::new(v.iter()),
            Masses::Sparse(m) => Box::new(m.values()),
        }
    }

    pub fn total(&self) -> BigRational {
        self.ratio(&self.numerators().sum())
    }

    pub fn max_mass(&self) -> BigRational {
        let best = self.numerators().max().cloned().unwrap_or_default();
        self.ratio(&best)
    }

    /// `mass(c) = mass(−c)` for every c.
    pub fn is_symmetric(&self) -> bool {
        match (&self.masses, self.ring) {
            (Masses::Dense(v), Ring::Fp(field)) => {
                (0..v.len()).all(|r| v[r] == v[field.neg(r as u64) as usize])
            }
            (Masses::Sparse(m), _) => m.iter().all(|(c, n)| m.get(&-c) == Some(n)),
            (Masses::Dense(_), Ring::Integers) => unreachable!(),
        }
    }
}

impl fmt::Debug for ExactDist {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let entries: Vec<String> = self.masses().iter().map(|(c, m)| format!("{c}: {m}")).collect();
        write!(f, "ExactDist[{}]{{{}}}", self.ring, entries.join(", "))
    }
}

/// Coefficient vectors whose signed sums can be walked.
pub trait Walk: Sized {
    fn dim(&self) -> usize;
    fn ring(&self) -> Ring;
    fn walk(&self, mu: &MuParam) -> ExactDist;
    /// Subvector on `indices`, kept in original order.
    fn restrict(&self, indices: &[usize]) -> Result<Self>;
}

fn check_indices(indices: &[usize], len: usize) -> Result<Vec<usize>> {
    let mut sorted = indices.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if let Some(&bad) = sorted.iter().find(|&&i| i >= len) {
        return Err(Error::IndexOutOfRange { index: bad, len });
    }
    Ok(sorted)
}

/// Numerator types used by the walks: `u128` while it cannot overflow, big integers otherwise.
trait Weight: Clone + Zero + Add<Output = Self> + for<'a> Mul<&'a Self, Output = Self> {
    fn from_big(b: &BigUint) -> Self;
    fn into_big(self) -> BigUint;
}

impl Weight for u128 {
    fn from_big(b: &BigUint) -> Self {
        b.to_u128().expect("weight fits in u128")
    }

    fn into_big(self) -> BigUint {
        BigUint::from(self)
    }
}

impl Weight for BigUint {
    fn from_big(b: &BigUint) -> Self {
        b.clone()
    }

    fn into_big(self) -> BigUint {
        self
    }
}

/// `(2v)^n < 2^127` guarantees no partial sum overflows `u128`.
fn fits_u128(two_v: &BigUint, n: usize) -> bool {
    two_v.bits() * n as u64 <= 126
}

fn cyclic_walk<W: Weight>(p: usize, steps: &[usize], w: (&BigUint, &BigUint)) -> Vec<BigUint> {
    let (w0, w1) = (W::from_big(w.0), W::from_big(w.1));
    let mut cur = vec![W::zero(); p];
    cur[0] = W::from_big(&BigUint::one());
    for &a in steps {
        let mut next = vec![W::zero(); p];
        for (r, m) in cur.iter().enumerate() {
            if m.is_zero() {
                continue;
            }
            next[r] = next[r].clone() + m.clone() * &w0;
            let lazy = m.clone() * &w1;
            let up = (r + a) % p;
            let down = (r + p - a) % p;
            next[up] = next[up].clone() + lazy.clone();
            next[down] = next[down].clone() + lazy;
        }
        cur = next;
    }
    cur.into_iter().map(W::into_big).collect()
}

/// Integer walk on an offset array of width `2·Σ|a_i| + 1`; returns (offset, numerators).
fn dense_int_walk<W: Weight>(steps: &[u64], w: (&BigUint, &BigUint)) -> (i64, Vec<BigUint>) {
    let (w0, w1) = (W::from_big(w.0), W::from_big(w.1));
    let half: u64 = steps.iter().sum();
    let width = (2 * half + 1) as usize;
    let mut cur = vec![W::zero(); width];
    cur[half as usize] = W::from_big(&BigUint::one());
    let mut reach = 0usize;
    for &a in steps {
        let a = a as usize;
        let mut next = vec![W::zero(); width];
        let lo = half as usize - reach;
        let hi = half as usize + reach;
        for x in lo..=hi {
            let m = &cur[x];
            if m.is_zero() {
                continue;
            }
            next[x] = next[x].clone() + m.clone() * &w0;
            let lazy = m.clone() * &w1;
            next[x + a] = next[x + a].clone() + lazy.clone();
            next[x - a] = next[x - a].clone() + lazy;
        }
        reach += a;
        cur = next;
    }
    (-(half as i64), cur.into_iter().map(W::into_big).collect())
}

fn sparse_int_walk(steps: &[BigInt], w: (&BigUint, &BigUint)) -> BTreeMap<BigInt, BigUint> {
    let mut cur = BTreeMap::from([(BigInt::zero(), BigUint::one())]);
    for a in steps {
        let mut next: BTreeMap<BigInt, BigUint> = BTreeMap::new();
        for (x, m) in &cur {
            *next.entry(x.clone()).or_default() += m * w.0;
            if !a.is_zero() {
                let lazy = m * w.1;
                *next.entry(x + a).or_default() += &lazy;
                *next.entry(x - a).or_default() += lazy;
            } else {
                *next.entry(x.clone()).or_default() += m * w.1 * 2u32;
            }
        }
        next.retain(|_, m| !m.is_zero());
        cur = next;
    }
    cur
}

impl Walk for FpVector {
    fn dim(&self) -> usize {
        self.len()
    }

    fn ring(&self) -> Ring {
        Ring::Fp(self.field())
    }

    fn walk(&self, mu: &MuParam) -> ExactDist {
        let (w0, w1, two_v) = mu.weights();
        let p = self.modulus() as usize;
        let steps: Vec<usize> = self.coords().iter().map(|&c| c as usize).collect();
        let numers = if fits_u128(&two_v, steps.len()) {
            cyclic_walk::<u128>(p, &steps, (&w0, &w1))
        } else {
            cyclic_walk::<BigUint>(p, &steps, (&w0, &w1))
        };
        ExactDist { ring: self.ring(), denom: two_v.pow(steps.len() as u32), masses: Masses::Dense(numers) }
    }

    fn restrict(&self, indices: &[usize]) -> Result<Self> {
        let idx = check_indices(indices, self.len())?;
        FpVector::new(self.field(), idx.iter().map(|&i| self.coords()[i]).collect())
    }
}

impl Walk for IntVector {
    fn dim(&self) -> usize {
        self.len()
    }

    fn ring(&self) -> Ring {
        Ring::Integers
    }

    fn walk(&self, mu: &MuParam) -> ExactDist {
        let (w0, w1, two_v) = mu.weights();
        let n = self.len();
        let denom = two_v.pow(n as u32);
        let small: Option<Vec<u64>> = self.coords().iter().map(|c| c.magnitude().to_u64()).collect();
        let dense = small.filter(|s| {
            s.iter().try_fold(0u64, |acc, &a| acc.checked_add(a)).is_some_and(|h| h <= DENSE_WIDTH_MAX)
        });
        let masses = match dense {
            Some(steps) => {
                let (offset, numers) = if fits_u128(&two_v, n) {
                    dense_int_walk::<u128>(&steps, (&w0, &w1))
                } else {
                    dense_int_walk::<BigUint>(&steps, (&w0, &w1))
                };
                numers
                    .into_iter()
                    .enumerate()
                    .filter(|(_, m)| !m.is_zero())
                    .map(|(i, m)| (BigInt::from(offset + i as i64), m))
                    .collect()
            }
            None => sparse_int_walk(self.coords(), (&w0, &w1)),
        };
        ExactDist { ring: Ring::Integers, denom, masses: Masses::Sparse(masses) }
    }

    fn restrict(&self, indices: &[usize]) -> Result<Self> {
        let idx = check_indices(indices, self.len())?;
        Ok(IntVector::new(idx.iter().map(|&i| self.coords()[i].clone()).collect()))
    }
}

/// Exact law of `Σ a_i x_i^μ` in the ring of `a`.
pub fn walk_distribution<A: Walk>(a: &A, mu: &MuParam) -> ExactDist {
    a.walk(mu)
}

/// `ρ_μ(a)`: the largest point mass of the walk. The empty vector gives 1.
pub fn atom_probability<A: Walk>(a: &A, mu: &MuParam) -> BigRational {
    a.walk(mu).max_mass()
}

/// Maximum of `ρ_μ(a)` over a finite μ-grid. This approximates the supremum
/// over [0, 1/2] from below; verdicts built on it are grid-approximate.
pub fn atom_probability_sup<A: Walk + Sync>(a: &A, grid: &[MuParam]) -> Result<BigRational> {
    if grid.is_empty() {
        return Err(Error::EmptyGrid);
    }
    Ok(parallel::map(grid, |mu| atom_probability(a, mu)).into_iter().max().expect("grid is nonempty"))
}

/// Subvector of `a` on `indices` (original order, duplicates ignored).
pub fn restrict<A: Walk>(a: &A, indices: &[usize]) -> Result<A> {
    a.restrict(indices)
}

/// Both Fourier upper bounds on the F_p atom probability.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CharSumBound {
    /// `(1/p) Σ_k Π_j |μ + (1−μ) cos(2π k a_j / p)|`
    pub cosine: f64,
    /// `(1/p) Σ_k exp(−½ Σ_j ‖k a_j / p‖²)`
    pub exponential: f64,
}

/// Slack used whenever these floats are compared with exact probabilities.
pub const FLOAT_SLACK: f64 = 1e-9;

pub fn char_sum_bound(a: &FpVector, mu: &MuParam) -> CharSumBound {
    let field = a.field();
    let p = field.modulus();
    let m = mu.to_f64();
    let (mut cosine, mut exponential) = (0.0f64, 0.0f64);
    for k in 0..p {
        let mut prod = 1.0f64;
        let mut dist2 = 0.0f64;
        for &aj in a.coords() {
            let r = field.mul(k, aj);
            prod *= (m + (1.0 - m) * (TAU * r as f64 / p as f64).cos()).abs();
            let d = field.circular_distance(r) as f64 / p as f64;
            dist2 += d * d;
        }
        cosine += prod;
        exponential += (-0.5 * dist2).exp();
    }
    CharSumBound { cosine: cosine / p as f64, exponential: exponential / p as f64 }
}

/// Tally of the two restriction lemmas over an exhaustive integer grid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AtomLemmaSweep {
    /// Integer vectors covered, `Σ_n (2r+1)^n`.
    pub vectors: u64,
    /// `(a, U, μ)` triples covered.
    pub checks: u64,
    /// `(a, U, μ)` with `ρ_μ(a) > ρ_μ(a|_U)`, by representative.
    pub monotonicity_failures: Vec<(Vec<i64>, Vec<usize>, MuParam)>,
    /// `(a, U₁, μ)` with `ρ_μ(a|_{U₁}) > max{μ, (1−μ)/2}^{−|U₂|} ρ_μ(a)`.
    pub restriction_failures: Vec<(Vec<i64>, Vec<usize>, MuParam)>,
}

impl AtomLemmaSweep {
    pub fn ok(&self) -> bool {
        self.monotonicity_failures.is_empty() && self.restriction_failures.is_empty()
    }
}

/// Checks monotonicity under restriction and the restriction bound for every
/// `a ∈ [−r, r]^n`, `1 ≤ n ≤ max_n`, every `U ⊆ [n]` and every `μ`.
///
/// Over ℤ, `ρ_μ(a)` only depends on the multiset of `|a_i|`, so each vector is
/// represented by its sorted absolute values and atom probabilities are cached
/// per multiset. Every `(a, U)` pair maps onto one `(representative, U')` pair.
pub fn atom_lemma_sweep(r: u64, max_n: usize, mus: &[MuParam]) -> AtomLemmaSweep {
    let mut cache: BTreeMap<(Vec<i64>, usize), BigRational> = BTreeMap::new();
    let mut rho = |v: Vec<i64>, mi: usize| -> BigRational {
        cache
            .entry((v, mi))
            .or_insert_with_key(|(v, _)| atom_probability(&IntVector::from_i64(v), &mus[mi]))
            .clone()
    };
    let mut out = AtomLemmaSweep { vectors: 0, checks: 0, monotonicity_failures: Vec::new(), restriction_failures: Vec::new() };
    for n in 1..=max_n {
        let side = 2 * r + 1;
        out.vectors += side.pow(n as u32);
        out.checks += side.pow(n as u32) * (1u64 << n) * mus.len() as u64;
        let mut reps: Vec<Vec<i64>> = vec![vec![]];
        for _ in 0..n {
            reps = reps
                .into_iter()
                .flat_map(|v| {
                    let lo = v.last().copied().unwrap_or(0);
                    (lo..=r as i64).map(move |x| [v.clone(), vec![x]].concat())
                })
                .collect();
        }
        for rep in &reps {
            for (mi, mu) in mus.iter().enumerate() {
                let full = rho(rep.clone(), mi);
                let step = mu.max_step_mass();
                for mask in 0u32..1 << n {
                    let u: Vec<usize> = (0..n).filter(|&j| mask >> j & 1 == 1).collect();
                    let sub: Vec<i64> = u.iter().map(|&j| rep[j]).collect();
                    let part = rho(sub, mi);
                    if full > part {
                        out.monotonicity_failures.push((rep.clone(), u.clone(), mu.clone()));
                    }
                    let u2 = (n - u.len()) as i32;
                    if part * step.pow(u2) > full {
                        out.restriction_failures.push((rep.clone(), u, mu.clone()));
                    }
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn f(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn small_lemma_sweep() {
        let mus = [MuParam::zero(), MuParam::ratio(1, 4).unwrap(), MuParam::half()];
        let s = atom_lemma_sweep(1, 3, &mus);
        assert!(s.ok(), "{s:?}");
        assert_eq!(s.vectors, 3 + 9 + 27);
        assert_eq!(s.checks, (3 * 2 + 9 * 4 + 27 * 8) * 3);
    }

    #[test]
    fn mu_validation() {
        assert!(MuParam::ratio(1, 2).is_ok());
        assert!(matches!(MuParam::ratio(3, 4), Err(Error::MuOutOfRange(_))));
        assert!(MuParam::ratio(-1, 4).is_err());
        assert_eq!(default_mu_grid().len(), 33);
    }

    #[test]
    fn walk_examples() {
        let d = walk_distribution(&IntVector::from_i64(&[1]), &MuParam::zero());
        assert_eq!(d.masses(), vec![(BigInt::from(-1), q(1, 2)), (BigInt::from(1), q(1, 2))]);

        let d = walk_distribution(&IntVector::from_i64(&[1, 1]), &MuParam::half());
        assert_eq!(d.mass(&0.into()), q(3, 8));
        assert_eq!(d.mass(&1.into()), q(1, 4));
        assert_eq!(d.mass(&(-1).into()), q(1, 4));
        assert_eq!(d.mass(&2.into()), q(1, 16));
        assert_eq!(d.mass(&(-2).into()), q(1, 16));

        let d = walk_distribution(&FpVector::from_i64(f(3), &[1, 1]), &MuParam::zero());
        assert_eq!(d.mass(&0.into()), q(1, 2));
        assert_eq!(d.mass(&1.into()), q(1, 4));
        assert_eq!(d.mass(&2.into()), q(1, 4));
    }

    #[test]
    fn atom_examples() {
        let z = MuParam::zero();
        assert_eq!(atom_probability(&IntVector::from_i64(&[1, 1]), &z), q(1, 2));
        assert_eq!(atom_probability(&IntVector::from_i64(&[1, 2]), &z), q(1, 4));
        assert_eq!(atom_probability(&IntVector::from_i64(&[0, 0, 0]), &z), q(1, 1));
        assert_eq!(atom_probability(&IntVector::from_i64(&[1, 1]), &MuParam::half()), q(3, 8));
        assert_eq!(atom_probability(&IntVector::from_i64(&[]), &MuParam::half()), q(1, 1));
    }

    #[test]
    fn sup_examples() {
        let a = FpVector::from_i64(f(3), &[1, 1, 1]);
        assert_eq!(atom_probability_sup(&a, &[MuParam::zero()]).unwrap(), q(3, 8));
        let grid = [MuParam::zero(), MuParam::half()];
        assert_eq!(atom_probability_sup(&IntVector::from_i64(&[1]), &grid).unwrap(), q(1, 2));
        assert!(matches!(atom_probability_sup(&a, &[]), Err(Error::EmptyGrid)));
    }

    #[test]
    fn restrict_examples() {
        let a = IntVector::from_i64(&[5, 6, 7]);
        assert_eq!(restrict(&a, &[0, 2]).unwrap(), IntVector::from_i64(&[5, 7]));
        assert_eq!(restrict(&a, &[0, 1, 2]).unwrap(), a);
        let empty = restrict(&a, &[]).unwrap();
        assert!(empty.is_empty());
        assert_eq!(atom_probability(&empty, &MuParam::zero()), q(1, 1));
        assert!(matches!(restrict(&a, &[3]), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn char_sum_examples() {
        let b = char_sum_bound(&FpVector::from_i64(f(3), &[1]), &MuParam::zero());
        assert!((b.cosine - 2.0 / 3.0).abs() < 1e-12);
        let b = char_sum_bound(&FpVector::zeros(f(7), 4), &MuParam::zero());
        assert!((b.cosine - 1.0).abs() < 1e-12);
        assert!((b.exponential - 1.0).abs() < 1e-12);
    }

    #[test]
    fn big_weights_agree_with_small_weights() {
        // 40 steps at μ = 1/64 overflow u128 and take the big-integer route
        let mu = MuParam::ratio(1, 64).unwrap();
        let steps: Vec<i64> = (0..40).map(|i| i % 5 - 2).collect();
        let long = IntVector::from_i64(&steps);
        let d = walk_distribution(&long, &mu);
        assert_eq!(d.total(), q(1, 1));
        assert!(d.is_symmetric());
        let sparse = sparse_int_walk(long.coords(), (&mu.weights().0, &mu.weights().1));
        let expected: Vec<(BigInt, BigRational)> = sparse
            .iter()
            .map(|(c, m)| (c.clone(), BigRational::new(m.clone().into(), d.denominator().clone().into())))
            .collect();
        assert_eq!(d.masses(), expected);
    }

    fn mu_strategy() -> impl Strategy<Value = MuParam> {
        (0i64..=32).prop_map(|j| MuParam::ratio(j, 64).unwrap())
    }

    proptest! {
        #[test]
        fn masses_sum_to_one_and_are_symmetric(a in prop::collection::vec(-6i64..=6, 0..7), mu in mu_strategy()) {
            let d = walk_distribution(&IntVector::from_i64(&a), &mu);
            prop_assert_eq!(d.total(), q(1, 1));
            prop_assert!(d.is_symmetric());
            let fd = walk_distribution(&FpVector::from_i64(f(7), &a), &mu);
            prop_assert_eq!(fd.total(), q(1, 1));
            prop_assert!(fd.is_symmetric());
        }

        #[test]
        fn units_permute_atoms(a in prop::collection::vec(0u64..11, 1..8), c in 1u64..11, mu in mu_strategy()) {
            let v = FpVector::new(f(11), a).unwrap();
            prop_assert_eq!(atom_probability(&v.scale(c), &mu), atom_probability(&v, &mu));
        }

        #[test]
        fn cosine_bound_dominates_atoms(a in prop::collection::vec(0u64..13, 1..10), j in 0i64..=2) {
            let v = FpVector::new(f(13), a).unwrap();
            let mu = MuParam::ratio(j, 4).unwrap();
            let b = char_sum_bound(&v, &mu);
            let rho = atom_probability(&v, &mu).to_f64().unwrap();
            prop_assert!(b.cosine + FLOAT_SLACK >= rho);
            prop_assert!(b.exponential + FLOAT_SLACK >= b.cosine);
        }
    }
}
