//! Parameters as functions of n and the assembled bound they give.

use symsing::lemmalab::{assemble_bound, param_schedule};

fn main() -> symsing::Result<()> {
    for n in [100u64, 10_000, 1_000_000, 100_000_000, 10_000_000_000] {
        let s = param_schedule(n)?;
        let bound = assemble_bound(s.alpha(), s.beta_n as f64, 0.0, 0.0)?;
        println!(
            "n={n:>12} k={:>4} s1={:>7} s2={:>9} βn={} d={:>8} α=2^{:.3} p={:?} bound={bound:.4} target=2^{:.5}",
            s.k, s.s1, s.s2, s.beta_n, s.d, s.alpha_log2, s.p, s.target_log2
        );
    }
    Ok(())
}
