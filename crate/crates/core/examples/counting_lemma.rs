//! Bad-set sizes |B_{k,s,≥t}| in F_5^3 against the counting bound.

use symsing::addstruct::{counting_lemma_bound, global_census, sweep_counting_lemma};
use symsing::fpcore::PrimeField;
use num_traits::ToPrimitive;

fn main() -> symsing::Result<()> {
    let census = global_census(3, PrimeField::new(5)?, 1)?;
    for s in 1..=census.n {
        for t in 1..=census.p {
            let bound = counting_lemma_bound(census.n, census.p, census.k, s, t);
            println!("s={s} t={t} |B|={:>4} bound={:.1}", census.count(s, t), bound.to_f64().unwrap());
        }
    }
    let sweep = sweep_counting_lemma(&census);
    println!("{} checks, {} violations, max ratio {:.3}", sweep.checked, sweep.violations.len(), sweep.max_ratio);
    Ok(())
}
