//! Every corank-1 symmetric ±1 matrix of size 3 has adj(A) = λ·a·aᵀ, and the
//! bordered determinant equals −λ(Σ a_i x_i)², not +λ(Σ a_i x_i)².

use symsing::lemmalab::check_bordered_identity;
use symsing::matcore::{enumerate_symmetric, rank_q, IntMatrix};

fn main() -> symsing::Result<()> {
    let (mut total, mut minus, mut plus) = (0, 0, 0);
    for s in enumerate_symmetric(3)? {
        let a = IntMatrix::from(&s);
        if rank_q(&a) != 2 {
            continue;
        }
        let summary = check_bordered_identity(&a)?;
        total += 1;
        minus += summary.identity_holds() as u32;
        plus += (summary.positive_sign_matches == summary.cases) as u32;
        if total == 1 {
            println!("first corank-1 matrix: {:?}", a.rows_vec());
            println!("  λ = {}, a = {}", summary.factorization.lambda, summary.factorization.a);
            if let Some((x1, x, det, form)) = &summary.positive_sign_counterexample {
                println!("  border x₁={x1}, x={x:?}: det = {det}, λ(Σ a_i x_i)² = {form}");
            }
        }
    }
    println!("{total} corank-1 matrices: −λ form holds on {minus}, +λ form on {plus}");
    Ok(())
}
