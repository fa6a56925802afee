//! Rank growth when a random ±1 row and column are added.

use symsing::lemmalab::{rank_step_check, RankStepMode};

fn main() -> symsing::Result<()> {
    for (n, ell) in [(3, 1), (4, 2), (5, 3)] {
        let r = rank_step_check(n, ell, RankStepMode::Exhaustive)?;
        println!("exhaustive n={n} ℓ={ell}: {}/{} = {} ≥ {}", r.successes, r.conditioned, r.frequency, r.bound);
    }
    let r = rank_step_check(8, 6, RankStepMode::MonteCarlo { trials: 20_000, seed: 3 })?;
    println!(
        "sampled n=8 ℓ=6: {}/{} in [{:.4}, {:.4}], bound {}",
        r.successes, r.conditioned, r.interval.0, r.interval.1, r.bound
    );
    Ok(())
}
