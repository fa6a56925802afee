//! Minimal Halász constants on a small corpus.
//!
//! At these sizes the admissible f is at most n/100, so 1/p + e^{−f/2}
//! already covers the exact atom probability and every minimal C is 0.

use symsing::anticon::default_mu_grid;
use symsing::lemmalab::{envelope_constant, halasz_check, halasz_corpus};

fn main() -> symsing::Result<()> {
    let grid = default_mu_grid();
    let mut reports = Vec::new();
    for inst in halasz_corpus(1, 12) {
        let r = halasz_check(&inst.a, inst.k, &inst.f, 1.0, &grid)?;
        println!(
            "p={:>3} n={:>3} k={} f={:>5} lhs={:.4} 1/p+e^(-f/2)={:.4} min C={}",
            r.p,
            r.n,
            r.k,
            r.f.to_string(),
            r.lhs_f64(),
            r.constant_part,
            r.min_c
        );
        reports.push(r);
    }
    println!("C* = {}", envelope_constant(&reports));
    Ok(())
}
