use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};
use rand::RngCore;

use super::events::big_log2;
use crate::addstruct::rk_convolution;
use crate::anticon::{atom_probability_sup, MuParam};
use crate::error::{Error, Result};
use crate::fpcore::{is_prime, FpVector, PrimeField};
use crate::matcore::RngStream;

/// One instance of the finite-field Halász inequality
/// `sup_μ max_q Pr[Σ a_i x_i^μ = q] ≤ 1/p + C·R_k(a)/(4^k n^{2k} √f) + e^{−f/2}`.
#[derive(Debug, Clone, PartialEq)]
pub struct HalaszReport {
    pub p: u64,
    pub n: usize,
    pub support: usize,
    pub k: u32,
    pub f: BigRational,
    /// Exact grid-sup atom probability.
    pub lhs: BigRational,
    pub rk: BigUint,
    /// `R_k / (4^k n^{2k} √f)`, the coefficient of C.
    pub c_coefficient: f64,
    /// `1/p + e^{−f/2}`.
    pub constant_part: f64,
    pub c_probe: f64,
    pub rhs_probe: f64,
    /// Smallest C with `lhs ≤ rhs(C)` on this instance.
    pub min_c: f64,
    /// `rhs(c_probe) ≥ 1`, so the inequality says nothing here.
    pub vacuous: bool,
}

impl HalaszReport {
    pub fn rhs(&self, c: f64) -> f64 {
        self.constant_part + c * self.c_coefficient
    }

    pub fn lhs_f64(&self) -> f64 {
        self.lhs.to_f64().unwrap_or(1.0)
    }

    /// `lhs ≤ rhs(c)` up to the float slack.
    pub fn holds_with(&self, c: f64) -> bool {
        self.lhs_f64() <= self.rhs(c) + 1e-9
    }
}

/// Evaluates both sides and the per-instance minimal constant.
pub fn halasz_check(a: &FpVector, k: u32, f: &BigRational, c_probe: f64, grid: &[MuParam]) -> Result<HalaszReport> {
    let n = a.len();
    let support = a.support().len();
    if a.is_zero() {
        return Err(Error::Precondition("a ≠ 0".into()));
    }
    if !f.is_positive() {
        return Err(Error::Precondition(format!("f > 0 (got f = {f})")));
    }
    if f * BigRational::from_integer(100.into()) > BigRational::from_integer(support.into()) {
        return Err(Error::Precondition(format!("f ≤ |supp(a)|/100 (got f = {f}, |supp(a)| = {support})")));
    }
    if k == 0 || BigRational::from_integer(k.into()) * f > BigRational::from_integer(n.into()) {
        return Err(Error::Precondition(format!("1 ≤ k ≤ n/f (got k = {k}, n = {n}, f = {f})")));
    }
    let lhs = atom_probability_sup(a, grid)?;
    let rk = rk_convolution(a, k);
    let ff = f.to_f64().unwrap_or(0.0);
    let log2_coeff = big_log2(&rk) - 2.0 * k as f64 - 2.0 * k as f64 * (n as f64).log2() - 0.5 * ff.log2();
    let c_coefficient = log2_coeff.exp2();
    let p = a.modulus();
    let constant_part = 1.0 / p as f64 + (-ff / 2.0).exp();
    let lhs_f = lhs.to_f64().unwrap_or(1.0);
    let min_c = ((lhs_f - constant_part) / c_coefficient).max(0.0);
    let rhs_probe = constant_part + c_probe * c_coefficient;
    Ok(HalaszReport {
        p,
        n,
        support,
        k,
        f: f.clone(),
        lhs,
        rk,
        c_coefficient,
        constant_part,
        c_probe,
        rhs_probe,
        min_c,
        vacuous: rhs_probe >= 1.0,
    })
}

/// One corpus entry: vector, k and f.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HalaszInstance {
    pub a: FpVector,
    pub k: u32,
    pub f: BigRational,
}

/// Deterministic corpus of admissible instances with `p ≤ 101`, `100 ≤ n ≤ 300`.
///
/// Coefficients are drawn either uniformly or from a short range `1..=w`
/// so that both spread-out and concentrated walks appear.
pub fn halasz_corpus(seed: u64, count: usize) -> Vec<HalaszInstance> {
    let primes: Vec<u64> = (3..=101).filter(|&p| is_prime(p)).collect();
    (0..count as u64)
        .map(|i| {
            let mut rng = RngStream::new(seed, i);
            let mut draw = |m: u64| rng.next_u64() % m;
            let p = primes[draw(primes.len() as u64) as usize];
            let field = PrimeField::new(p).expect("odd prime");
            let n = 100 + draw(201) as usize;
            let width = if draw(2) == 0 { p - 1 } else { (1 + draw(3)).min(p - 1) };
            let coords: Vec<u64> = (0..n).map(|_| 1 + draw(width)).collect();
            let a = FpVector::new(field, coords).expect("nonzero residues below p");
            // support is n, so f ranges over (0, n/100]
            let f = BigRational::new((1 + draw(n as u64 / 25)).into(), 4.into());
            let k_max = (BigRational::from_integer(n.into()) / &f).floor().to_integer().to_u32().unwrap_or(1).min(3);
            let k = 1 + draw(k_max as u64) as u32;
            HalaszInstance { a, k, f }
        })
        .collect()
}

/// Both readings of the `p` condition for the usable Halász corollary.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HalaszUsable {
    /// `p ≤ min{e^{−s₁/2k}, (4k/s₁)^k}` as printed.
    pub printed: bool,
    /// `p ≤ min{e^{s₁/2k}, (s₁/4k)^k}`, the reading the checks use.
    pub inverted: bool,
    /// `s₂ ≥ s₁ ≥ 1`, `n ≥ d ≥ s₁` and `t ≥ s₁ ≥ k ≥ 100`.
    pub others: bool,
}

/// Evaluates the corollary's preconditions; `p` is given by its natural log.
pub fn halasz_usable_conditions(ln_p: f64, k: u64, s1: u64, s2: u64, n: u64, d: u64, t: u64) -> HalaszUsable {
    let (kf, s1f) = (k as f64, s1 as f64);
    let printed = ln_p <= (-s1f / (2.0 * kf)).min(kf * (4.0 * kf / s1f).ln());
    let inverted = ln_p <= (s1f / (2.0 * kf)).min(kf * (s1f / (4.0 * kf)).ln());
    let others = s2 >= s1 && s1 >= 1 && n >= d && d >= s1 && t >= s1 && s1 >= k && k >= 100;
    HalaszUsable { printed, inverted, others }
}

/// Largest minimal constant across reports (0 for an empty list).
pub fn envelope_constant(reports: &[HalaszReport]) -> f64 {
    reports.iter().map(|r| r.min_c).fold(0.0, f64::max)
}
