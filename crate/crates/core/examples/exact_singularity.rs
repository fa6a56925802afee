//! Exact q_n for n ≤ 6 next to a seeded Monte Carlo estimate.
//!
//! cargo run --release --example exact_singularity [seed]

use num_traits::ToPrimitive;
use symsing::cli::{estimate_qn, QnInterval, QnMode};

fn main() -> symsing::Result<()> {
    let seed = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(7);
    println!("{:>2} {:>12} {:>10} {:>22} {:>9}", "n", "q_n", "~", "monte carlo (95%)", "2^-n");
    for n in 1..=6 {
        let exact = estimate_qn(n, QnMode::Exhaustive, 0)?;
        let mc = estimate_qn(n, QnMode::MonteCarlo { trials: 20_000 }, seed)?;
        let (lo, hi) = match mc.interval {
            QnInterval::Wilson { lower, upper } => (lower, upper),
            QnInterval::Exact(_) => unreachable!(),
        };
        println!(
            "{n:>2} {:>12} {:>10.6} {:>10.4}..{:<10.4} {:>9.6}",
            exact.estimate.to_string(),
            exact.estimate.to_f64().unwrap(),
            lo,
            hi,
            (-(n as f64)).exp2()
        );
    }
    Ok(())
}
