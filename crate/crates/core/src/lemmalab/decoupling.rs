use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Both sides of `Pr[E(Y,Z)]⁴ ≤ Pr[E(Y,Z) ∩ E(Y′,Z) ∩ E(Y,Z′) ∩ E(Y′,Z′)]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecouplingReport {
    pub lhs: BigRational,
    pub rhs: BigRational,
    pub ok: bool,
}

/// Marginals of a joint law, after checking it is a probability law and
/// equal to the product of its marginals.
pub fn product_marginals(joint: &[Vec<BigRational>]) -> Result<(Vec<BigRational>, Vec<BigRational>)> {
    let cols = joint.first().map_or(0, Vec::len);
    if joint.is_empty() || cols == 0 || joint.iter().any(|r| r.len() != cols) {
        return Err(Error::InvalidLaw("joint law must be a nonempty rectangular table".into()));
    }
    if joint.iter().flatten().any(Signed::is_negative) {
        return Err(Error::InvalidLaw("negative mass".into()));
    }
    let py: Vec<BigRational> = joint.iter().map(|r| r.iter().sum()).collect();
    let pz: Vec<BigRational> = (0..cols).map(|z| joint.iter().map(|r| &r[z]).sum()).collect();
    if py.iter().sum::<BigRational>() != BigRational::one() {
        return Err(Error::InvalidLaw("masses do not sum to 1".into()));
    }
    for (y, row) in joint.iter().enumerate() {
        for (z, m) in row.iter().enumerate() {
            if *m != &py[y] * &pz[z] {
                return Err(Error::NotIndependent);
            }
        }
    }
    Ok((py, pz))
}

/// Exact decoupling inequality for independent `Y, Z` with finite supports.
/// `event[y][z]` is the indicator of `E`.
pub fn decoupling_check(joint: &[Vec<BigRational>], event: &[Vec<bool>]) -> Result<DecouplingReport> {
    let (py, pz) = product_marginals(joint)?;
    if event.len() != py.len() || event.iter().any(|r| r.len() != pz.len()) {
        return Err(Error::DimensionMismatch("event table must match the joint law".into()));
    }
    let mut pe = BigRational::zero();
    for (y, row) in event.iter().enumerate() {
        for (z, &e) in row.iter().enumerate() {
            if e {
                pe += &py[y] * &pz[z];
            }
        }
    }
    let lhs = pe.pow(4);
    // rhs = Σ_{y,y'} p(y) p(y') (Σ_z p(z) E(y,z) E(y',z))²
    let mut rhs = BigRational::zero();
    for y in 0..py.len() {
        for y2 in 0..py.len() {
            let inner: BigRational =
                (0..pz.len()).filter(|&z| event[y][z] && event[y2][z]).map(|z| pz[z].clone()).sum();
            rhs += &py[y] * &py[y2] * &inner * &inner;
        }
    }
    Ok(DecouplingReport { ok: lhs <= rhs, lhs, rhs })
}

/// Joint table of the product of two marginals.
pub fn product_law(py: &[BigRational], pz: &[BigRational]) -> Vec<Vec<BigRational>> {
    py.iter().map(|y| pz.iter().map(|z| y * z).collect()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn examples() {
        let half = vec![q(1, 2), q(1, 2)];
        let joint = product_law(&half, &half);
        let r = decoupling_check(&joint, &[vec![true, true], vec![true, true]]).unwrap();
        assert_eq!((r.lhs.clone(), r.rhs.clone()), (q(1, 1), q(1, 1)));
        let r = decoupling_check(&joint, &[vec![true, false], vec![false, true]]).unwrap();
        assert_eq!(r.lhs, q(1, 16));
        assert_eq!(r.rhs, q(1, 8));
        assert!(r.ok);
    }

    #[test]
    fn dependent_law_is_rejected() {
        let joint = vec![vec![q(1, 2), q(0, 1)], vec![q(0, 1), q(1, 2)]];
        assert!(matches!(decoupling_check(&joint, &[vec![true; 2], vec![true; 2]]), Err(Error::NotIndependent)));
        let bad = vec![vec![q(1, 2), q(1, 2)], vec![q(1, 2), q(0, 1)]];
        assert!(matches!(product_marginals(&bad), Err(Error::InvalidLaw(_))));
    }
}
