//! Orth and Spt events over all symmetric ±1 matrices of size 3 at p = 3.

use num_rational::BigRational;
use symsing::anticon::default_mu_grid;
use symsing::fpcore::PrimeField;
use symsing::lemmalab::OrthChecker;
use symsing::matcore::enumerate_symmetric;

fn main() -> symsing::Result<()> {
    let f = PrimeField::new(3)?;
    let checker = OrthChecker::new(3, f, &default_mu_grid())?;
    let alpha = BigRational::new(3.into(), 8.into());
    let (mut orth_fail, mut spt_fail) = (0, 0);
    for m in enumerate_symmetric(3)? {
        let orth = checker.orth(&m, &alpha, 0)?;
        if !orth.verdict {
            if orth_fail == 0 {
                println!("Orth fails on {m:?}: witness {}", orth.witness.as_ref().unwrap());
            }
            orth_fail += 1;
        }
        spt_fail += !checker.spt(&m, 2, 0)?.verdict as u32;
    }
    println!("Orth(α=3/8, βn=0) fails on {orth_fail}/64, Spt(d=2, βn=0) on {spt_fail}/64");
    Ok(())
}
