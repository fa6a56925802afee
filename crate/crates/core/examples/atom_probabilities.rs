//! Exact distributions of lazy walks Σ a_i x_i^μ over ℤ and F_p.

use symsing::anticon::{atom_probability, atom_probability_sup, default_mu_grid, walk_distribution, MuParam};
use symsing::fpcore::{FpVector, IntVector, PrimeField};

fn main() -> symsing::Result<()> {
    let a = IntVector::from_i64(&[1, 1, 2, 3]);
    for mu in [MuParam::zero(), MuParam::ratio(1, 4)?, MuParam::half()] {
        let dist = walk_distribution(&a, &mu);
        println!("μ = {mu}: max atom {}", dist.max_mass());
        for (value, mass) in dist.masses() {
            print!(" {value}:{mass}");
        }
        println!();
    }
    let grid = default_mu_grid();
    println!("sup over {} grid points: {}", grid.len(), atom_probability_sup(&a, &grid)?);

    let f = PrimeField::new(5)?;
    let b = FpVector::from_i64(f, &[1, 1, 2, 3]);
    println!("mod 5 at μ = 0: {}", atom_probability(&b, &MuParam::zero()));
    Ok(())
}
