use num_integer::Roots;

use crate::error::{Error, Result};
use crate::fpcore::next_prime_in_doubling;

/// Parameters chosen as functions of `n`, with `e = n^{1/4} √(ln n)`.
#[derive(Debug, Clone, PartialEq)]
pub struct ParamSchedule {
    pub n: u64,
    /// `⌊n^{1/4}⌋`
    pub k: u64,
    /// `⌊√n ln n⌋`
    pub s1: u64,
    /// `⌊n^{3/4} √(ln n)⌋`
    pub s2: u64,
    /// `⌊e/128⌋`
    pub beta_n: u64,
    /// `⌊n^{2/3}⌋`
    pub d: u64,
    /// `log₂ α = −e/64`
    pub alpha_log2: f64,
    /// `max(2, ⌊2^{e/32}⌋)`, or `None` past `u64`.
    pub x: Option<u64>,
    /// Least prime in `[x, 2x]`.
    pub p: Option<u64>,
    /// `e/32`, the nominal `log₂ p`.
    pub p_log2: f64,
    /// `−e/1000`, the exponent of the target bound `2^{−e/1000}`.
    pub target_log2: f64,
}

impl ParamSchedule {
    pub fn alpha(&self) -> f64 {
        self.alpha_log2.exp2()
    }

    pub fn target(&self) -> f64 {
        self.target_log2.exp2()
    }

    pub fn e(&self) -> f64 {
        let n = self.n as f64;
        n.powf(0.25) * n.ln().sqrt()
    }
}

pub fn param_schedule(n: u64) -> Result<ParamSchedule> {
    if n < 2 {
        return Err(Error::Param { key: "n".into(), reason: format!("schedule needs n ≥ 2, got {n}") });
    }
    let nf = n as f64;
    let ln = nf.ln();
    let e = nf.powf(0.25) * ln.sqrt();
    let p_log2 = e / 32.0;
    let x = if p_log2 < 62.0 { Some((p_log2.exp2().floor() as u64).max(2)) } else { None };
    let p = x.map(next_prime_in_doubling).transpose()?;
    Ok(ParamSchedule {
        n,
        k: n.sqrt().sqrt(),
        s1: (nf.sqrt() * ln).floor() as u64,
        s2: (nf.powf(0.75) * ln.sqrt()).floor() as u64,
        beta_n: (e / 128.0).floor() as u64,
        d: ((n as u128) * (n as u128)).cbrt() as u64,
        alpha_log2: -e / 64.0,
        x,
        p,
        p_log2,
        target_log2: -e / 1000.0,
    })
}

/// Final union bound `α + P_null + (2^{βn} α + 2^{1−βn} + P_orth)^{1/4}`, clipped to `[0, 1]`.
/// `beta_n = ∞` drops both `βn` terms when `α = 0`.
pub fn assemble_bound(alpha: f64, beta_n: f64, p_orth_fail: f64, p_null_fail: f64) -> Result<f64> {
    for (key, v) in [("alpha", alpha), ("p_orth_fail", p_orth_fail), ("p_null_fail", p_null_fail)] {
        if !(0.0..=1.0).contains(&v) {
            return Err(Error::Param { key: key.into(), reason: format!("must lie in [0, 1], got {v}") });
        }
    }
    if beta_n.is_nan() || beta_n < 0.0 {
        return Err(Error::Param { key: "beta_n".into(), reason: format!("must be ≥ 0, got {beta_n}") });
    }
    let amplified = if alpha == 0.0 { 0.0 } else { beta_n.exp2() * alpha };
    let inner = amplified + (1.0 - beta_n).exp2() + p_orth_fail;
    Ok((alpha + p_null_fail + inner.powf(0.25)).clamp(0.0, 1.0))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64) -> bool {
        (a - b).abs() <= 1e-12 * b.abs().max(1.0)
    }

    #[test]
    fn frozen_values() {
        let rows: [(u64, [u64; 5], u64); 6] = [
            (2, [1, 0, 1, 0, 1], 2),
            (16, [2, 11, 13, 0, 6], 2),
            (100, [3, 46, 67, 0, 21], 2),
            (10_000, [10, 921, 3034, 0, 464], 2),
            (1_000_000, [31, 13815, 117539, 0, 10000], 13),
            (100_000_000, [100, 184206, 4291932, 3, 215443], 10903),
        ];
        for (n, [k, s1, s2, b, d], p) in rows {
            let s = param_schedule(n).unwrap();
            assert_eq!([s.k, s.s1, s.s2, s.beta_n, s.d], [k, s1, s2, b, d], "n = {n}");
            assert_eq!(s.p, Some(p), "n = {n}");
        }
        let s = param_schedule(16).unwrap();
        assert!(close(s.alpha_log2, -0.052_034_663_197_356_11));
        assert!(close(s.target_log2, -0.003_330_218_444_630_791));
        let s = param_schedule(1_000_000).unwrap();
        assert_eq!(s.x, Some(12));
        assert!(close(s.alpha_log2, -1.836_553_125_372_499_6));
        let s = param_schedule(100_000_000).unwrap();
        assert_eq!(s.x, Some(10901));
        assert!(close(s.alpha_log2, -6.706_143_832_154_21));
        assert!(close(s.target_log2, -0.429_193_205_257_869_47));
        assert!(param_schedule(1).is_err());
    }

    #[test]
    fn assembled_bound() {
        let b = assemble_bound(1.0 / 16.0, 2.0, 0.0, 0.0).unwrap();
        assert!((b - 0.993).abs() < 1e-3, "{b}");
        assert_eq!(assemble_bound(0.0, f64::INFINITY, 0.0, 0.0).unwrap(), 0.0);
        assert_eq!(assemble_bound(0.5, 0.0, 1.0, 0.5).unwrap(), 1.0);
        assert!(assemble_bound(1.5, 0.0, 0.0, 0.0).is_err());
    }
}
