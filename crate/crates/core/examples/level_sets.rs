//! Level sets T_t of the Fourier energy and the containment m·T_t ⊆ T_{m²t}.

use num_rational::BigRational;
use symsing::addstruct::{check_sumset_containment, level_set};
use symsing::fpcore::{FpVector, PrimeField};

fn main() -> symsing::Result<()> {
    let a = FpVector::from_i64(PrimeField::new(11)?, &[1, 2, 2, 3, 5, 5, 8]);
    for d in [8i64, 4, 2] {
        let t = BigRational::new(1.into(), d.into());
        println!("T_{t} = {:?}", level_set(&a, &t));
    }
    let r = check_sumset_containment(&a, &BigRational::new(1.into(), 2.into()), 2)?;
    println!("|T| = {}, |2T| = {}, contained: {}", r.level_size, r.sumset_size, r.contained);
    Ok(())
}
