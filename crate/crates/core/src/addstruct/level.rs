use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::fpcore::FpVector;

/// Largest `m·p·|T_t|` the sumset check will enumerate.
pub const SUMSET_BUDGET: u64 = 10_000_000;

/// `p² · Σ_j ‖κ a_j / p‖²` as an exact integer.
fn scaled_energy(a: &FpVector, kappa: u64) -> u128 {
    let field = a.field();
    a.coords()
        .iter()
        .map(|&aj| {
            let d = field.circular_distance(field.mul(kappa, aj)) as u128;
            d * d
        })
        .sum()
}

fn in_level(a: &FpVector, kappa: u64, t: &BigRational) -> bool {
    let p = BigInt::from(a.modulus());
    // Σ (d/p)² ≤ t  ⇔  Σ d² · den ≤ num · p²
    BigInt::from(scaled_energy(a, kappa)) * t.denom() <= t.numer() * &p * &p
}

/// `T_t = {κ ∈ F_p : Σ_j ‖κ a_j / p‖² ≤ t}`, in increasing order.
pub fn level_set(a: &FpVector, t: &BigRational) -> Vec<u64> {
    (0..a.modulus()).filter(|&kappa| in_level(a, kappa, t)).collect()
}

pub fn level_set_size(a: &FpVector, t: &BigRational) -> u64 {
    level_set(a, t).len() as u64
}

/// Result of the sumset containment check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SumsetReport {
    pub level_size: u64,
    pub sumset_size: u64,
    /// `m T_t ⊆ T_{m² t}`.
    pub contained: bool,
    /// `Some(|T_t| < p)` when `t < |supp(a)|/100`, `None` otherwise.
    pub small_level: Option<bool>,
}

impl SumsetReport {
    pub fn ok(&self) -> bool {
        self.contained && self.small_level != Some(false)
    }
}

/// Enumerates the m-fold sumset of `T_t` and checks it lies inside `T_{m² t}`.
pub fn check_sumset_containment(a: &FpVector, t: &BigRational, m: u32) -> Result<SumsetReport> {
    if m == 0 {
        return Err(Error::Precondition("m must be at least 1".into()));
    }
    let p = a.modulus();
    let level = level_set(a, t);
    let cost = (m as u64).saturating_mul(p).saturating_mul(level.len() as u64);
    if cost > SUMSET_BUDGET {
        return Err(Error::BudgetExceeded(format!("sumset enumeration of {cost} > {SUMSET_BUDGET}")));
    }
    let mut member = vec![false; p as usize];
    for &x in &level {
        member[x as usize] = true;
    }
    let mut sumset = member.clone();
    for _ in 1..m {
        let mut next = vec![false; p as usize];
        for (x, _) in sumset.iter().enumerate().filter(|(_, &b)| b) {
            for &y in &level {
                next[(x + y as usize) % p as usize] = true;
            }
        }
        sumset = next;
    }
    let big_t = t * BigRational::from_integer(BigInt::from(m) * m);
    let contained = sumset.iter().enumerate().filter(|(_, &b)| b).all(|(x, _)| in_level(a, x as u64, &big_t));
    let support = a.support().len() as i64;
    let small_level = (t * BigRational::from_integer(100.into()) < BigRational::from_integer(support.into()))
        .then_some((level.len() as u64) < p);
    Ok(SumsetReport {
        level_size: level.len() as u64,
        sumset_size: sumset.iter().filter(|&&b| b).count() as u64,
        contained,
        small_level,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fpcore::PrimeField;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn v(p: u64, c: &[i64]) -> FpVector {
        FpVector::from_i64(PrimeField::new(p).unwrap(), c)
    }

    #[test]
    fn level_examples() {
        assert_eq!(level_set_size(&v(3, &[1]), &q(0, 1)), 1);
        assert_eq!(level_set_size(&v(3, &[1]), &q(1, 5)), 3);
        let a = v(11, &[1, 3, 7]);
        assert_eq!(level_set_size(&a, &q(3, 4)), 11);
    }

    #[test]
    fn sumset_examples() {
        let a = v(13, &[2, 5]);
        assert!(check_sumset_containment(&a, &q(1, 10), 1).unwrap().contained);
        let ones = v(101, &[1; 200]);
        let r = check_sumset_containment(&ones, &q(1, 1), 2).unwrap();
        assert!(r.contained);
        assert_eq!(r.small_level, Some(true));
        assert_eq!(r.level_size, 15);
        assert!(r.ok());
    }

    proptest! {
        #[test]
        fn sumset_contained(c in prop::collection::vec(0i64..101, 1..40), tn in 0i64..40, m in 1u32..4) {
            let a = v(101, &c);
            let r = check_sumset_containment(&a, &q(tn, 20), m).unwrap();
            prop_assert!(r.ok());
        }
    }
}
