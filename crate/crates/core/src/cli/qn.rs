use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::lemmalab::wilson_interval;
use crate::matcore::{det_int, enumerate_symmetric, sample_symmetric, tri_len, RngStream, SymMatrix, ENUMERATION_MAX_BITS};
use crate::parallel;

/// z for a two-sided 95% interval.
pub const Z_95: f64 = 1.959963984540054;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QnMode {
    Exhaustive,
    MonteCarlo { trials: u64 },
}

#[derive(Debug, Clone, PartialEq)]
pub enum QnInterval {
    /// Exhaustive runs: the interval collapses to the exact value.
    Exact(BigRational),
    Wilson { lower: f64, upper: f64 },
}

/// Estimate of `q_n = Pr[M_n singular]`.
#[derive(Debug, Clone, PartialEq)]
pub struct QnEstimate {
    pub n: usize,
    pub mode: QnMode,
    pub singular: u64,
    pub total: u64,
    pub estimate: BigRational,
    pub interval: QnInterval,
    /// `log₂` of the conjectured scale `2^{−n}`.
    pub comparison_log2: f64,
    /// `log₂` of the target bound, `−n^{1/4} √(ln n) / 1000`.
    pub target_log2: f64,
}

fn singular(m: &SymMatrix) -> bool {
    det_int(m).expect("symmetric matrices are square").is_zero()
}

/// Exhaustive mode needs `n(n+1)/2 ≤ 30`; Monte Carlo trial `i` uses stream `i`.
pub fn estimate_qn(n: usize, mode: QnMode, seed: u64) -> Result<QnEstimate> {
    if n == 0 {
        return Err(Error::EmptyDimension);
    }
    let (singular_count, total) = match mode {
        QnMode::Exhaustive => {
            if tri_len(n) > ENUMERATION_MAX_BITS {
                return Err(Error::BudgetExceeded(format!(
                    "exhaustive q_n needs 2^{} matrices (limit 2^{ENUMERATION_MAX_BITS})",
                    tri_len(n)
                )));
            }
            let total = 1u64 << tri_len(n);
            let flags = parallel::map_range(total, |code| singular(&SymMatrix::from_code(n, code).expect("code < 2^len")));
            (flags.into_iter().filter(|&s| s).count() as u64, total)
        }
        QnMode::MonteCarlo { trials } => {
            if trials == 0 {
                return Err(Error::Param { key: "trials".into(), reason: "must be at least 1".into() });
            }
            let flags = parallel::map_range(trials, |i| {
                singular(&sample_symmetric(n, &mut RngStream::new(seed, i)).expect("n ≥ 1"))
            });
            (flags.into_iter().filter(|&s| s).count() as u64, trials)
        }
    };
    let estimate = BigRational::new(singular_count.into(), total.into());
    let interval = match mode {
        QnMode::Exhaustive => QnInterval::Exact(estimate.clone()),
        QnMode::MonteCarlo { .. } => {
            let (lower, upper) = wilson_interval(singular_count, total, Z_95);
            QnInterval::Wilson { lower, upper }
        }
    };
    let nf = n as f64;
    Ok(QnEstimate {
        n,
        mode,
        singular: singular_count,
        total,
        estimate,
        interval,
        comparison_log2: -nf,
        target_log2: -(nf.powf(0.25) * nf.ln().sqrt()) / 1000.0,
    })
}

/// Reference enumeration used to cross-check [`estimate_qn`].
pub fn qn_by_iterator(n: usize) -> Result<BigRational> {
    let mut count = 0u64;
    let mut total = 0u64;
    for m in enumerate_symmetric(n)? {
        total += 1;
        count += singular(&m) as u64;
    }
    Ok(BigRational::new(count.into(), total.into()))
}
