use std::f64::consts::TAU;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::fpcore::FpVector;

/// Largest `n^{2k}·4^k` the brute-force counters will enumerate.
pub const RK_BRUTE_BUDGET: u64 = 100_000_000;

fn brute_cost(n: usize, k: u32) -> Option<u64> {
    (n as u64).checked_pow(2 * k)?.checked_mul(4u64.checked_pow(k)?)
}

fn check_budget(n: usize, k: u32) -> Result<()> {
    if k == 0 {
        return Err(Error::Precondition("k must be at least 1".into()));
    }
    match brute_cost(n, k) {
        Some(c) if c <= RK_BRUTE_BUDGET => Ok(()),
        _ => Err(Error::BudgetExceeded(format!(
            "n^(2k)·4^k > {RK_BRUTE_BUDGET} for n={n}, k={k}; use rk_convolution / rk_star_dp"
        ))),
    }
}

/// Sign patterns `ε ∈ {±1}^len` with `Σ ε_j v_j ≡ 0 (mod p)`.
fn zero_sign_patterns(vals: &[u64], p: u64) -> u64 {
    let len = vals.len();
    let total: u64 = vals.iter().sum();
    let mut count = 0;
    // the bit mask marks minus signs; the sum is total − 2·(sum of negated)
    for mask in 0u32..(1 << len) {
        let mut neg = 0u64;
        for (j, &v) in vals.iter().enumerate() {
            if mask >> j & 1 == 1 {
                neg += v;
            }
        }
        if (total + 2 * (len as u64 * p) - 2 * neg).is_multiple_of(p) {
            count += 1;
        }
    }
    count
}

/// Shared odometer over index tuples in `[n]^{2k}`; `star` keeps only tuples
/// with an index used exactly once.
fn brute(vals: &[u64], p: u64, k: u32, star: bool) -> u64 {
    let n = vals.len();
    let len = 2 * k as usize;
    if n == 0 {
        return 0;
    }
    let mut idx = vec![0usize; len];
    let mut mult = vec![0u8; n];
    let mut picked = vec![0u64; len];
    let mut count = 0;
    loop {
        let keep = !star || {
            mult.iter_mut().for_each(|m| *m = 0);
            idx.iter().for_each(|&i| mult[i] += 1);
            mult.contains(&1)
        };
        if keep {
            for (slot, &i) in picked.iter_mut().zip(&idx) {
                *slot = vals[i];
            }
            count += zero_sign_patterns(&picked, p);
        }
        let mut pos = 0;
        while pos < len {
            idx[pos] += 1;
            if idx[pos] < n {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
        if pos == len {
            return count;
        }
    }
}

/// `R_k(a)`: number of `(i_1..i_{2k}, ε)` with `Σ ε_j a_{i_j} ≡ 0`, by direct enumeration.
pub fn rk_bruteforce(a: &FpVector, k: u32) -> Result<u64> {
    check_budget(a.len(), k)?;
    Ok(brute(a.coords(), a.modulus(), k, false))
}

/// `R_k*(a)`: as `R_k` but only tuples in which some index occurs exactly once.
pub fn rk_star(a: &FpVector, k: u32) -> Result<u64> {
    check_budget(a.len(), k)?;
    Ok(brute(a.coords(), a.modulus(), k, true))
}

/// Small-vector `R_k*` used by the bad-set census; picks enumeration or the DP.
pub(crate) fn rk_star_u64(vals: &[u64], p: u64, k: u32) -> u64 {
    match brute_cost(vals.len(), k) {
        Some(c) if c <= 4096 => brute(vals, p, k, true),
        _ => {
            let star = multiplicity_dp(vals, p, k, 1) - multiplicity_dp(vals, p, k, 2);
            star.to_u64().expect("R_k* fits in u64 at census scale")
        }
    }
}

/// `R_k(a)` as `Σ_x (c^{*k}[x])²` where `c[x] = #{(j, ε) : ε a_j ≡ x}`.
///
/// The step function `c` is symmetric, so this equals the number of 2k-tuples
/// summing to zero. Integer arithmetic only.
pub fn rk_convolution(a: &FpVector, k: u32) -> BigUint {
    let p = a.modulus() as usize;
    let mut steps = vec![0u64; p];
    for &v in a.coords() {
        steps[v as usize] += 1;
        steps[(p - v as usize) % p] += 1;
    }
    let sparse: Vec<(usize, u64)> = steps.iter().enumerate().filter(|(_, c)| **c > 0).map(|(x, &c)| (x, c)).collect();
    let mut cur = vec![BigUint::zero(); p];
    cur[0] = BigUint::from(1u32);
    for _ in 0..k {
        let mut next = vec![BigUint::zero(); p];
        for (x, m) in cur.iter().enumerate() {
            if m.is_zero() {
                continue;
            }
            for &(y, c) in &sparse {
                next[(x + y) % p] += m * c;
            }
        }
        cur = next;
    }
    cur.iter().map(|m| m * m).sum()
}

fn binomials(n: usize) -> Vec<Vec<BigUint>> {
    let mut c = vec![vec![BigUint::zero(); n + 1]; n + 1];
    for i in 0..=n {
        c[i][0] = BigUint::from(1u32);
        for j in 1..=i {
            c[i][j] = &c[i - 1][j - 1] + &c[i - 1][j];
        }
    }
    c
}

/// Ordered 2k-tuples summing to zero whose index multiplicities are all
/// `0` or `≥ min_mult`. Interleaving m new copies into a tuple of length L
/// contributes `C(L+m, m)`; m copies of `a_j` realise the sum `σ a_j` in
/// `C(m, (m−σ)/2)` sign patterns.
fn multiplicity_dp(vals: &[u64], p: u64, k: u32, min_mult: usize) -> BigUint {
    let len = 2 * k as usize;
    let pu = p as usize;
    let binom = binomials(len);
    let mut dp = vec![vec![BigUint::zero(); pu]; len + 1];
    dp[0][0] = BigUint::from(1u32);
    for &a in vals {
        let mut next = dp.clone();
        for l in 0..len {
            for r in 0..pu {
                if dp[l][r].is_zero() {
                    continue;
                }
                for m in min_mult.max(1)..=len - l {
                    let weight = &dp[l][r] * &binom[l + m][m];
                    for neg in 0..=m {
                        let sigma = m as i64 - 2 * neg as i64;
                        let shift = (sigma.rem_euclid(p as i64) as u64 * a % p) as usize;
                        next[l + m][(r + shift) % pu] += &weight * &binom[m][neg];
                    }
                }
            }
        }
        dp = next;
    }
    std::mem::take(&mut dp[len][0])
}

/// `R_k*(a)` without enumeration: `R_k` minus the tuples where every used
/// index repeats.
pub fn rk_star_dp(a: &FpVector, k: u32) -> BigUint {
    let all = multiplicity_dp(a.coords(), a.modulus(), k, 1);
    let repeated = multiplicity_dp(a.coords(), a.modulus(), k, 2);
    all - repeated
}

/// `R_k(a)` from the same multiplicity DP (an independent route to `rk_convolution`).
pub fn rk_dp(a: &FpVector, k: u32) -> BigUint {
    multiplicity_dp(a.coords(), a.modulus(), k, 1)
}

/// Floating-point evaluation of `(1/p) Σ_κ (Σ_j 2cos(2π κ a_j / p))^{2k}`.
/// Diagnostic only; `rk_convolution` is the exact count.
pub fn rk_fourier(a: &FpVector, k: u32) -> f64 {
    let field = a.field();
    let p = field.modulus();
    let total: f64 = (0..p)
        .map(|kappa| {
            let s: f64 = a.coords().iter().map(|&aj| 2.0 * (TAU * field.mul(kappa, aj) as f64 / p as f64).cos()).sum();
            s.powi(2 * k as i32)
        })
        .sum();
    total / p as f64
}

/// Both counts and the additive slack `(16k)^k n^k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RkGap {
    pub rk: BigUint,
    pub rk_star: BigUint,
    pub slack: BigUint,
    pub holds: bool,
}

/// Checks `R_k(a) ≤ R_k*(a) + (16k)^k·n^k` with `n = |a|`.
pub fn check_rk_gap(a: &FpVector, k: u32) -> Result<RkGap> {
    if k == 0 || k as usize > a.len() {
        return Err(Error::Precondition(format!("need 1 ≤ k ≤ n, got k={k}, n={}", a.len())));
    }
    let rk = rk_convolution(a, k);
    let rk_star = rk_star_dp(a, k);
    let slack = BigUint::from(16 * k as u64).pow(k) * BigUint::from(a.len()).pow(k);
    let holds = rk <= &rk_star + &slack;
    Ok(RkGap { rk, rk_star, slack, holds })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fpcore::PrimeField;
    use proptest::prelude::*;

    fn v(p: u64, c: &[i64]) -> FpVector {
        FpVector::from_i64(PrimeField::new(p).unwrap(), c)
    }

    #[test]
    fn brute_examples() {
        assert_eq!(rk_bruteforce(&v(5, &[1, 1]), 1).unwrap(), 8);
        assert_eq!(rk_bruteforce(&v(5, &[1]), 1).unwrap(), 2);
        assert_eq!(rk_bruteforce(&v(3, &[1, 2]), 1).unwrap(), 8);
        assert!(matches!(rk_bruteforce(&v(3, &[1; 101]), 2), Err(Error::BudgetExceeded(_))));
    }

    #[test]
    fn star_examples() {
        assert_eq!(rk_star(&v(5, &[1, 1]), 1).unwrap(), 4);
        assert_eq!(rk_star(&v(5, &[1]), 1).unwrap(), 0);
        assert_eq!(rk_star(&v(3, &[0, 0]), 1).unwrap(), 8);
    }

    #[test]
    fn zero_vector_counts_every_tuple() {
        for n in 1..4 {
            for k in 1..3 {
                let expected = BigUint::from(4u64.pow(k) * (n as u64).pow(2 * k));
                assert_eq!(rk_convolution(&v(7, &vec![0; n]), k), expected);
            }
        }
    }

    #[test]
    fn gap_examples() {
        let g = check_rk_gap(&v(5, &[1, 1]), 1).unwrap();
        assert_eq!((g.rk, g.rk_star, g.slack), (8u32.into(), 4u32.into(), 32u32.into()));
        assert!(g.holds);
        let g = check_rk_gap(&v(5, &[1]), 1).unwrap();
        assert_eq!((g.rk, g.rk_star, g.slack), (2u32.into(), 0u32.into(), 16u32.into()));
        assert!(check_rk_gap(&v(5, &[1]), 2).is_err());
    }

    #[test]
    fn fourier_example() {
        assert!((rk_fourier(&v(3, &[1, 1]), 1) - 8.0).abs() < 1e-9);
    }

    proptest! {
        #[test]
        fn routes_agree(c in prop::collection::vec(0i64..11, 1..5), k in 1u32..3) {
            let a = v(11, &c);
            let brute = rk_bruteforce(&a, k).unwrap();
            prop_assert_eq!(rk_convolution(&a, k), BigUint::from(brute));
            prop_assert_eq!(rk_dp(&a, k), BigUint::from(brute));
            let star = rk_star(&a, k).unwrap();
            prop_assert_eq!(rk_star_dp(&a, k), BigUint::from(star));
            prop_assert_eq!(rk_star_u64(a.coords(), 11, k), star);
            prop_assert!(star <= brute);
        }
    }
}
