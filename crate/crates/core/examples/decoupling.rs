//! Pr[E(Y,Z)]² ≤ Pr[E(Y,Z) ∧ E(Y,Z')] on a product law.

use num_rational::BigRational;
use symsing::lemmalab::{decoupling_check, product_law};

fn main() -> symsing::Result<()> {
    let q = |n: i64, d: i64| BigRational::new(n.into(), d.into());
    let law = product_law(&[q(1, 2), q(1, 3), q(1, 6)], &[q(1, 4), q(3, 4)]);
    let event = vec![vec![true, false], vec![false, true], vec![true, true]];
    let r = decoupling_check(&law, &event)?;
    println!("Pr[E]² = {}, Pr[E ∧ E'] = {}, holds: {}", r.lhs, r.rhs, r.ok);
    Ok(())
}
