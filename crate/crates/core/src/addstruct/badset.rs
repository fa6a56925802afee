//! Bad sets `B_{k,s,≥t}(n)`: vectors all of whose large subvectors are rich
//! in signed-sum solutions.
//!
//! Two routes compute `|B|`. [`enumerate_bad_set`] walks F_p^n vector by
//! vector and tests index subsets directly. The census functions group
//! vectors by the multiset of their ±-classes `min(r, p−r)`, which determines
//! `R_k*` of every subvector, and produce `|B|` for every `(s, t)` at once.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigUint;
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::ToPrimitive;

use super::rk::{rk_star_dp, rk_star_u64};
use crate::error::{Error, Result};
use crate::fpcore::{FpVector, PrimeField};
use crate::parallel;

/// Largest number of subsets `is_bad_vector` will test.
pub const SUBSET_BUDGET: u64 = 1_000_000;
/// Largest `p^n` the enumerations accept.
pub const SPACE_BUDGET: u64 = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BadSetMode {
    /// Every index subset of size at least `s₁`.
    Global,
    /// Subsets of the support with size in `[s₁, s₂]`; the support must have size `d`.
    Window,
}

/// `(k, s₁, s₂, d, t)`. Global mode reads `s₁` as `s` and ignores `s₂`, `d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BadSetParams {
    pub k: u32,
    pub s1: usize,
    pub s2: usize,
    pub d: usize,
    pub t: u64,
}

impl BadSetParams {
    pub fn global(k: u32, s: usize, t: u64) -> Self {
        Self { k, s1: s, s2: s, d: 0, t }
    }

    pub fn window(k: u32, s1: usize, s2: usize, d: usize, t: u64) -> Self {
        Self { k, s1, s2, d, t }
    }

    pub fn with_t(self, t: u64) -> Self {
        Self { t, ..self }
    }

    pub fn validate(&self, n: usize, mode: BadSetMode) -> Result<()> {
        let bad = |key: &str, reason: String| Err(Error::Param { key: key.into(), reason });
        if self.k == 0 {
            return bad("k", "must be at least 1".into());
        }
        if self.t == 0 {
            return bad("t", "must be at least 1".into());
        }
        if self.s1 == 0 || self.s1 > n {
            return bad("s1", format!("must lie in [1, {n}]"));
        }
        if mode == BadSetMode::Window {
            if self.s2 < self.s1 || self.s2 > n {
                return bad("s2", format!("must lie in [s1, {n}]"));
            }
            if self.d > n {
                return bad("d", format!("must be at most {n}"));
            }
        }
        Ok(())
    }
}

/// `R*·p ≥ t·4^k·size^{2k}`, all in integers.
fn is_rich(rstar: &BigUint, size: usize, p: u64, k: u32, t: u64) -> bool {
    rstar * p >= BigUint::from(t) * BigUint::from(4u32).pow(k) * BigUint::from(size).pow(2 * k)
}

/// Calls `f` on each j-subset of `pool` in lexicographic order until it returns false.
fn each_combination(pool: &[usize], j: usize, mut f: impl FnMut(&[usize]) -> bool) -> bool {
    let m = pool.len();
    if j > m {
        return true;
    }
    let mut pos: Vec<usize> = (0..j).collect();
    let mut chosen = vec![0usize; j];
    loop {
        for (c, &i) in chosen.iter_mut().zip(&pos) {
            *c = pool[i];
        }
        if !f(&chosen) {
            return false;
        }
        let Some(i) = (0..j).rev().find(|&i| pos[i] != i + m - j) else { return true };
        pos[i] += 1;
        for l in i + 1..j {
            pos[l] = pos[l - 1] + 1;
        }
    }
}

fn subset_count(m: usize, sizes: std::ops::RangeInclusive<usize>) -> u64 {
    sizes.map(|j| binomial(m as u64, j as u64)).fold(0u64, u64::saturating_add)
}

/// `R_k*` of a list of residues, choosing enumeration or the DP.
fn rk_star_values(vals: &[u64], field: PrimeField, k: u32) -> BigUint {
    let v = FpVector::new(field, vals.to_vec()).expect("residues are reduced");
    if (vals.len() as u64).saturating_pow(2 * k) <= 4096 {
        BigUint::from(rk_star_u64(vals, field.modulus(), k))
    } else {
        rk_star_dp(&v, k)
    }
}

/// Index pool and subset sizes to test, or `None` when the vector is excluded outright.
fn candidate_sizes(a: &FpVector, params: &BadSetParams, mode: BadSetMode) -> Option<(Vec<usize>, usize, usize)> {
    match mode {
        BadSetMode::Global => Some(((0..a.len()).collect(), params.s1, a.len())),
        BadSetMode::Window => {
            let supp = a.support();
            (supp.len() == params.d).then(|| {
                let hi = params.s2.min(supp.len());
                (supp, params.s1, hi)
            })
        }
    }
}

/// Membership in the bad set: every qualifying subvector `b` has
/// `R_k*(b) ≥ t·2^{2k}|b|^{2k}/p`. Subsets are visited by size, then
/// lexicographically, stopping at the first poor one.
pub fn is_bad_vector(a: &FpVector, params: &BadSetParams, mode: BadSetMode) -> Result<bool> {
    params.validate(a.len(), mode)?;
    let Some((pool, lo, hi)) = candidate_sizes(a, params, mode) else { return Ok(false) };
    if lo > hi {
        return Ok(true);
    }
    let count = subset_count(pool.len(), lo..=hi);
    if count > SUBSET_BUDGET {
        return Err(Error::BudgetExceeded(format!("{count} subsets > {SUBSET_BUDGET}")));
    }
    let field = a.field();
    let mut vals = Vec::new();
    for j in lo..=hi {
        let all_rich = each_combination(&pool, j, |idx| {
            vals.clear();
            vals.extend(idx.iter().map(|&i| a.coords()[i]));
            is_rich(&rk_star_values(&vals, field, params.k), j, field.modulus(), params.k, params.t)
        });
        if !all_rich {
            return Ok(false);
        }
    }
    Ok(true)
}

fn check_space(n: usize, p: u64) -> Result<u64> {
    match p.checked_pow(n as u32) {
        Some(size) if size <= SPACE_BUDGET => Ok(size),
        _ => Err(Error::BudgetExceeded(format!("p^n = {p}^{n} > {SPACE_BUDGET}"))),
    }
}

fn digits(mut code: u64, p: u64, n: usize) -> Vec<u64> {
    (0..n)
        .map(|_| {
            let r = code % p;
            code /= p;
            r
        })
        .collect()
}

/// Exact `|B|` from direct enumeration, with the matching bound.
#[derive(Debug, Clone, PartialEq)]
pub struct BadSetCount {
    pub count: u64,
    /// `|B|` at threshold `t + 1`.
    pub count_next: u64,
    /// Every member at `t + 1` is also a member at `t`.
    pub inclusion_ok: bool,
    /// The bound for the mode (approximate for display; the check is exact).
    pub bound: f64,
    pub within_bound: bool,
}

impl BadSetCount {
    pub fn ratio(&self) -> f64 {
        self.count as f64 / self.bound
    }
}

/// Counts `B` over all of F_p^n, re-testing each vector at `t` and `t + 1`.
pub fn enumerate_bad_set(n: usize, field: PrimeField, params: &BadSetParams, mode: BadSetMode) -> Result<BadSetCount> {
    params.validate(n, mode)?;
    let p = field.modulus();
    let size = check_space(n, p)?;
    let next = params.with_t(params.t + 1);
    let flags = parallel::map_range(size, |code| -> Result<(bool, bool)> {
        let a = FpVector::new(field, digits(code, p, n)).expect("digits are residues");
        Ok((is_bad_vector(&a, params, mode)?, is_bad_vector(&a, &next, mode)?))
    });
    let (mut count, mut count_next, mut inclusion_ok) = (0, 0, true);
    for flag in flags {
        let (now, later) = flag?;
        count += now as u64;
        count_next += later as u64;
        inclusion_ok &= now || !later;
    }
    let (bound, within_bound) = match mode {
        BadSetMode::Global => (
            counting_lemma_bound(n, p, params.k, params.s1, params.t).to_f64().unwrap_or(f64::INFINITY),
            counting_lemma_holds(count, n, p, params.k, params.s1, params.t),
        ),
        BadSetMode::Window => (
            corollary_bound(n, p, params.s1, params.s2, params.d, params.t),
            corollary_holds(count, n, p, params.s1, params.s2, params.d, params.t),
        ),
    };
    Ok(BadSetCount { count, count_next, inclusion_ok, bound, within_bound })
}

/// `(s/n)^{2k−1} · p^n · t^{s−n}`.
pub fn counting_lemma_bound(n: usize, p: u64, k: u32, s: usize, t: u64) -> BigRational {
    let e = 2 * k - 1;
    let num = BigUint::from(s).pow(e) * BigUint::from(p).pow(n as u32);
    let den = BigUint::from(n).pow(e) * BigUint::from(t).pow((n - s) as u32);
    BigRational::new(num.into(), den.into())
}

/// `count ≤ (s/n)^{2k−1} p^n t^{s−n}`, cross-multiplied.
pub fn counting_lemma_holds(count: u64, n: usize, p: u64, k: u32, s: usize, t: u64) -> bool {
    let e = 2 * k - 1;
    BigUint::from(count) * BigUint::from(n).pow(e) * BigUint::from(t).pow((n - s) as u32)
        <= BigUint::from(s).pow(e) * BigUint::from(p).pow(n as u32)
}

/// `C(n,d) · p^{d+s₂} · t^{−d + s₁d/s₂}` in floating point, for display.
pub fn corollary_bound(n: usize, p: u64, s1: usize, s2: usize, d: usize, t: u64) -> f64 {
    let c = binomial(n as u64, d as u64) as f64;
    let exp_t = -(d as f64) + (s1 * d) as f64 / s2 as f64;
    c * (p as f64).powi((d + s2) as i32) * (t as f64).powf(exp_t)
}

/// Exact form of the corollary bound: `count^{s₂} · t^{d(s₂−s₁)} ≤ (C(n,d)·p^{d+s₂})^{s₂}`.
pub fn corollary_holds(count: u64, n: usize, p: u64, s1: usize, s2: usize, d: usize, t: u64) -> bool {
    let lhs = BigUint::from(count).pow(s2 as u32) * BigUint::from(t).pow((d * (s2 - s1)) as u32);
    let base = BigUint::from(binomial(n as u64, d as u64)) * BigUint::from(p).pow((d + s2) as u32);
    lhs <= base.pow(s2 as u32)
}

/// Multisets of size `len` over `lo..=hi`, each as a nondecreasing list.
fn multisets(lo: u16, hi: u16, len: usize) -> Vec<Vec<u16>> {
    fn rec(start: u16, hi: u16, len: usize, cur: &mut Vec<u16>, out: &mut Vec<Vec<u16>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for c in start..=hi {
            cur.push(c);
            rec(c, hi, len, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if lo <= hi || len == 0 {
        rec(lo, hi, len, &mut Vec::with_capacity(len), &mut out);
    }
    out
}

/// Largest t at which a subvector stays rich: `⌊p·R*/(4^k j^{2k})⌋`, capped at p.
fn rich_threshold(classes: &[u16], field: PrimeField, k: u32) -> u64 {
    let j = classes.len();
    if j == 0 {
        return field.modulus();
    }
    let vals: Vec<u64> = classes.iter().map(|&c| c as u64).collect();
    let rstar = rk_star_u64(&vals, field.modulus(), k) as u128;
    let scale = 4u128.pow(k) * (j as u128).pow(2 * k);
    ((field.modulus() as u128 * rstar / scale) as u64).min(field.modulus())
}

/// Thresholds of every sub-multiset (keyed by its sorted class list) up to `max_len`.
fn threshold_table(lo: u16, hi: u16, max_len: usize, field: PrimeField, k: u32) -> HashMap<Vec<u16>, u64> {
    let all: Vec<Vec<u16>> = (1..=max_len).flat_map(|len| multisets(lo, hi, len)).collect();
    let thresholds = parallel::map(&all, |m| rich_threshold(m, field, k));
    all.into_iter().zip(thresholds).collect()
}

/// `T_j` for `j = 0..=|M|`: the minimum threshold over sub-multisets of size j.
fn size_thresholds(m: &[u16], table: &HashMap<Vec<u16>, u64>, p: u64) -> Vec<u64> {
    let mut distinct: Vec<(u16, usize)> = Vec::new();
    for &c in m {
        match distinct.last_mut() {
            Some((last, cnt)) if *last == c => *cnt += 1,
            _ => distinct.push((c, 1)),
        }
    }
    let mut best = vec![p; m.len() + 1];
    let mut take = vec![0usize; distinct.len()];
    let mut sub = Vec::with_capacity(m.len());
    loop {
        sub.clear();
        for (&(c, _), &n) in distinct.iter().zip(&take) {
            sub.extend(std::iter::repeat_n(c, n));
        }
        if !sub.is_empty() {
            let t = table[&sub];
            best[sub.len()] = best[sub.len()].min(t);
        }
        let mut i = 0;
        while i < take.len() {
            take[i] += 1;
            if take[i] <= distinct[i].1 {
                break;
            }
            take[i] = 0;
            i += 1;
        }
        if i == take.len() {
            return best;
        }
    }
}

/// Number of orderings of a multiset: `len! / Π m_c!`.
fn arrangements(m: &[u16]) -> u64 {
    let mut total = 1u64;
    let mut placed = 0u64;
    let mut run = 0u64;
    for (i, &c) in m.iter().enumerate() {
        run = if i > 0 && m[i - 1] == c { run + 1 } else { 1 };
        placed += 1;
        total = total * placed / run;
    }
    total
}

/// Turns a histogram of thresholds (index = largest bad t, capped at p) into
/// counts for `t = 1..=p`.
fn suffix_counts(hist: &[u64]) -> Vec<u64> {
    let mut out = vec![0u64; hist.len() - 1];
    let mut acc = 0;
    for t in (1..hist.len()).rev() {
        acc += hist[t];
        out[t - 1] = acc;
    }
    out
}

/// `|B_{k,s,≥t}(n)|` for every `s ∈ [1, n]` and `t ∈ [1, p]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GlobalCensus {
    pub n: usize,
    pub p: u64,
    pub k: u32,
    /// `counts[s−1][t−1]`.
    pub counts: Vec<Vec<u64>>,
}

impl GlobalCensus {
    pub fn count(&self, s: usize, t: u64) -> u64 {
        if t > self.p {
            return 0;
        }
        self.counts[s - 1][t as usize - 1]
    }
}

/// Global bad-set sizes for all `(s, t)` via the class-multiset census.
pub fn global_census(n: usize, field: PrimeField, k: u32) -> Result<GlobalCensus> {
    if n == 0 || k == 0 {
        return Err(Error::Precondition("need n ≥ 1 and k ≥ 1".into()));
    }
    let p = field.modulus();
    check_space(n, p)?;
    let h = (p / 2) as u16;
    let table = threshold_table(0, h, n, field, k);
    let tops = multisets(0, h, n);
    let rows = parallel::map(&tops, |m| {
        let nonzero = m.iter().filter(|&&c| c != 0).count() as u32;
        (arrangements(m) << nonzero, size_thresholds(m, &table, p))
    });
    let mut hist = vec![vec![0u64; p as usize + 1]; n];
    for (weight, t_j) in rows {
        let mut running = p;
        for s in (1..=n).rev() {
            running = running.min(t_j[s]);
            hist[s - 1][running as usize] += weight;
        }
    }
    Ok(GlobalCensus { n, p, k, counts: hist.iter().map(|h| suffix_counts(h)).collect() })
}

/// `|B^d|` in window mode for every `(s₁, s₂, d)` and `t ∈ [1, p]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WindowCensus {
    pub n: usize,
    pub p: u64,
    pub k: u32,
    pub counts: BTreeMap<(usize, usize, usize), Vec<u64>>,
}

impl WindowCensus {
    pub fn count(&self, s1: usize, s2: usize, d: usize, t: u64) -> u64 {
        if t > self.p {
            // only the vacuous windows survive beyond p
            return if s1 > d { self.counts[&(s1, s2, d)][0] } else { 0 };
        }
        self.counts[&(s1, s2, d)][t as usize - 1]
    }
}

/// Window-mode bad-set sizes via the census of nonzero-class multisets.
pub fn window_census(n: usize, field: PrimeField, k: u32) -> Result<WindowCensus> {
    if n == 0 || k == 0 {
        return Err(Error::Precondition("need n ≥ 1 and k ≥ 1".into()));
    }
    let p = field.modulus();
    check_space(n, p)?;
    let h = (p / 2) as u16;
    let table = threshold_table(1, h, n, field, k);
    let mut counts = BTreeMap::new();
    for d in 1..=n {
        let tops = multisets(1, h, d);
        let prefix = binomial(n as u64, d as u64) << d;
        let rows = parallel::map(&tops, |m| (prefix * arrangements(m), size_thresholds(m, &table, p)));
        for s1 in 1..=n {
            for s2 in s1..=n {
                let mut hist = vec![0u64; p as usize + 1];
                for (weight, t_j) in &rows {
                    let hi = s2.min(d);
                    let thr = (s1..=hi).map(|j| t_j[j]).min().unwrap_or(p);
                    hist[thr as usize] += weight;
                }
                counts.insert((s1, s2, d), suffix_counts(&hist));
            }
        }
    }
    Ok(WindowCensus { n, p, k, counts })
}

/// Summary of a bound check over a census grid.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepSummary {
    pub checked: u64,
    /// `(s₁, s₂, d, t, |B|)` for every violation (global rows use `s₂ = d = 0`).
    pub violations: Vec<(usize, usize, usize, u64, u64)>,
    /// Largest `|B| / bound` seen.
    pub max_ratio: f64,
}

impl SweepSummary {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks the counting lemma at every `(s, t)` of a census.
pub fn sweep_counting_lemma(c: &GlobalCensus) -> SweepSummary {
    let mut out = SweepSummary { checked: 0, violations: Vec::new(), max_ratio: 0.0 };
    for s in 1..=c.n {
        for t in 1..=c.p {
            let count = c.count(s, t);
            out.checked += 1;
            if !counting_lemma_holds(count, c.n, c.p, c.k, s, t) {
                out.violations.push((s, 0, 0, t, count));
            }
            if count > 0 {
                let bound = counting_lemma_bound(c.n, c.p, c.k, s, t);
                let ratio = (BigRational::from_integer(count.into()) / bound).to_f64().unwrap_or(f64::INFINITY);
                out.max_ratio = out.max_ratio.max(ratio);
            }
        }
    }
    out
}

/// Checks the corollary bound at every `(s₁, s₂, d, t)` of a census.
pub fn sweep_corollary(c: &WindowCensus) -> SweepSummary {
    let mut out = SweepSummary { checked: 0, violations: Vec::new(), max_ratio: 0.0 };
    for (&(s1, s2, d), counts) in &c.counts {
        for (i, &count) in counts.iter().enumerate() {
            let t = i as u64 + 1;
            out.checked += 1;
            if !corollary_holds(count, c.n, c.p, s1, s2, d, t) {
                out.violations.push((s1, s2, d, t, count));
            }
            if count > 0 {
                out.max_ratio = out.max_ratio.max(count as f64 / corollary_bound(c.n, c.p, s1, s2, d, t));
            }
        }
    }
    out
}

/// Primes and dimensions of the full counting grid: `p^n ≤ 10^6` with `n ≥ 2`,
/// plus `n = 1` for the same primes.
pub fn counting_grid() -> Vec<(u64, usize)> {
    let mut grid = Vec::new();
    for p in (3..1000u64).filter(|&p| crate::fpcore::is_prime(p)) {
        grid.push((p, 1));
        let mut n = 2;
        while p.checked_pow(n as u32).is_some_and(|s| s <= SPACE_BUDGET) {
            grid.push((p, n));
            n += 1;
        }
    }
    grid
}

/// `|B|` is 0 for every threshold when no subvector can be rich and the
/// full vector is among the tested ones.
pub fn singleton_is_poor(field: PrimeField, k: u32) -> bool {
    (0..field.modulus()).all(|r| rk_star_u64(&[r], field.modulus(), k) == 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn membership_examples() {
        let g = BadSetParams::global(1, 1, 1);
        assert!(!is_bad_vector(&FpVector::from_i64(f(3), &[1, 1]), &g, BadSetMode::Global).unwrap());
        let g = BadSetParams::global(1, 2, 1);
        assert!(is_bad_vector(&FpVector::from_i64(f(3), &[0, 0]), &g, BadSetMode::Global).unwrap());
        let w = BadSetParams::window(1, 1, 2, 2, 1);
        assert!(!is_bad_vector(&FpVector::from_i64(f(3), &[1, 0]), &w, BadSetMode::Window).unwrap());
    }

    #[test]
    fn enumeration_example() {
        let r = enumerate_bad_set(2, f(3), &BadSetParams::global(1, 2, 1), BadSetMode::Global).unwrap();
        assert_eq!(r.count, 1);
        assert_eq!(r.bound, 9.0);
        assert!(r.within_bound && r.inclusion_ok);
    }

    #[test]
    fn unreachable_threshold_empties_the_set() {
        let (n, p, k) = (2usize, 3u64, 1u32);
        let t = p * 4u64.pow(k) * (n as u64).pow(2 * k) + 1;
        let r = enumerate_bad_set(n, f(p), &BadSetParams::global(k, 1, t), BadSetMode::Global).unwrap();
        assert_eq!(r.count, 0);
    }

    #[test]
    fn corollary_exponent_cancels_on_the_diagonal() {
        for t in 1..6 {
            assert_eq!(corollary_bound(4, 5, 2, 2, 2, t), 6.0 * 5f64.powi(4));
        }
    }

    #[test]
    fn combinations_are_lexicographic() {
        let mut seen = Vec::new();
        each_combination(&[0, 1, 2, 3], 2, |c| {
            seen.push(c.to_vec());
            true
        });
        assert_eq!(seen, vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]);
    }

    #[test]
    fn arrangements_of_multisets() {
        assert_eq!(arrangements(&[0, 0, 1]), 3);
        assert_eq!(arrangements(&[1, 2, 3]), 6);
        assert_eq!(arrangements(&[2, 2, 2, 2]), 1);
        assert_eq!(arrangements(&[0, 0, 1, 1]), 6);
    }

    #[test]
    fn census_weights_cover_the_space() {
        for (p, n) in [(3u64, 4usize), (5, 3), (7, 2)] {
            let c = global_census(n, f(p), 1).unwrap();
            // at t = 1 with s = n, only vectors with R* = 0 overall drop out
            assert!(c.count(n, 1) <= p.pow(n as u32));
            let h = (p / 2) as u16;
            let total: u64 = multisets(0, h, n)
                .iter()
                .map(|m| arrangements(m) << m.iter().filter(|&&c| c != 0).count())
                .sum();
            assert_eq!(total, p.pow(n as u32));
        }
    }

    #[test]
    fn census_matches_enumeration() {
        for (p, n) in [(3u64, 2usize), (3, 3), (3, 4), (5, 2), (5, 3), (7, 2)] {
            for k in 1..=2 {
                let g = global_census(n, f(p), k).unwrap();
                let w = window_census(n, f(p), k).unwrap();
                for s in 1..=n {
                    for t in 1..=p + 1 {
                        let params = BadSetParams::global(k, s, t);
                        let slow = enumerate_bad_set(n, f(p), &params, BadSetMode::Global).unwrap();
                        assert_eq!(slow.count, g.count(s, t), "global p={p} n={n} k={k} s={s} t={t}");
                        assert!(slow.inclusion_ok);
                    }
                }
                for d in 1..=n {
                    for s1 in 1..=n {
                        for s2 in s1..=n {
                            for t in 1..=p + 1 {
                                let params = BadSetParams::window(k, s1, s2, d, t);
                                let slow = enumerate_bad_set(n, f(p), &params, BadSetMode::Window).unwrap();
                                assert_eq!(slow.count, w.count(s1, s2, d, t), "window {p} {n} {k} {s1} {s2} {d} {t}");
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn singletons_never_rich() {
        for p in [3, 5, 7, 11] {
            assert!(singleton_is_poor(f(p), 1));
            assert!(singleton_is_poor(f(p), 2));
        }
    }
}
