use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use proptest::prelude::*;

use symsing::anticon::default_mu_grid;
use symsing::fpcore::{IntVector, PrimeField};
use symsing::lemmalab::{
    assemble_bound, decoupling_check, null_event_check, product_law, r_vector, OrthChecker,
};
use symsing::matcore::{det_int, enumerate_symmetric, rank_q, IntMatrix, SymMatrix};

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn sym(m: usize, bits: u64) -> SymMatrix {
    SymMatrix::from_fn(m, |i, j| {
        let (a, b) = if i <= j { (i, j) } else { (j, i) };
        bits >> (a * m + b) & 1 == 1
    })
}

proptest! {
    #[test]
    fn r_vector_is_orthogonal_outside_u2(
        m in 1usize..=5,
        bits in any::<u64>(),
        mask in 1u32..32,
        signs in proptest::collection::vec(-1i64..=1, 5),
    ) {
        let a = IntMatrix::from(&sym(m, bits));
        prop_assume!(!det_int(&a).unwrap().is_zero());
        let u2: Vec<usize> = (0..m).filter(|&j| mask >> j & 1 == 1).collect();
        prop_assume!(!u2.is_empty());
        let w = IntVector::from_i64(&u2.iter().map(|&j| 2 * signs[j]).collect::<Vec<_>>());
        let r = r_vector(&a, &u2, &w).unwrap();
        for i in (0..m).filter(|i| !u2.contains(i)) {
            let dot: BigInt = a.row(i).iter().zip(r.coords()).map(|(x, y)| x * y).sum();
            prop_assert!(dot.is_zero());
        }
        prop_assert_eq!(r.is_zero(), w.is_zero());
    }

    #[test]
    fn decoupling_holds(py in proptest::collection::vec(1i64..20, 1..5), pz in proptest::collection::vec(1i64..20, 1..5), bits in any::<u64>()) {
        let norm = |w: &[i64]| -> Vec<BigRational> {
            let t: i64 = w.iter().sum();
            w.iter().map(|&x| q(x, t)).collect()
        };
        let (py, pz) = (norm(&py), norm(&pz));
        let event: Vec<Vec<bool>> =
            (0..py.len()).map(|y| (0..pz.len()).map(|z| bits >> (y * 5 + z) & 1 == 1).collect()).collect();
        let r = decoupling_check(&product_law(&py, &pz), &event).unwrap();
        prop_assert!(r.ok);
        prop_assert!(r.lhs <= r.rhs);
    }

    #[test]
    fn assembled_bound_is_monotone(a in 0u32..64, b in 0u32..=8, o in 0u32..16, z in 0u32..16) {
        let f = |a: u32, b: u32, o: u32, z: u32| {
            assemble_bound(a as f64 / 64.0, b as f64, o as f64 / 16.0, z as f64 / 16.0).unwrap()
        };
        let base = f(a, b, o, z);
        prop_assert!((0.0..=1.0).contains(&base));
        prop_assert!(f(a + 1, b, o, z) >= base);
        prop_assert!(f(a, b, o + 1, z) >= base);
        prop_assert!(f(a, b, o, z + 1) >= base);
    }
}

/// Integer null-event failure forces F_p-Orth failure: a primitive kernel
/// vector stays nonzero and orthogonal mod p, and reducing mod p can only
/// merge atoms.
#[test]
fn null_failure_implies_fp_orth_failure() {
    let f = PrimeField::new(3).unwrap();
    let grid = default_mu_grid();
    let checker = OrthChecker::new(3, f, &grid).unwrap();
    let mut null_failures = 0;
    for alpha in [q(1, 8), q(1, 4), q(3, 8), q(1, 2)] {
        for s in enumerate_symmetric(3).unwrap() {
            let a = IntMatrix::from(&s);
            if rank_q(&a) + 1 < 3 {
                continue;
            }
            let null = null_event_check(&a, &alpha, &grid).unwrap();
            if !null.verdict {
                null_failures += 1;
                for beta in 0..3 {
                    assert!(!checker.orth(&s, &alpha, beta).unwrap().verdict, "{s:?} α={alpha} βn={beta}");
                }
            }
        }
    }
    assert!(null_failures > 0);
}

/// Descriptive: Orth^p failure frequency over every matrix at p = 3, n ∈ {3, 4}.
#[test]
fn orth_failure_frequency_table() {
    let f = PrimeField::new(3).unwrap();
    let grid = default_mu_grid();
    for n in [3usize, 4] {
        let checker = OrthChecker::new(n, f, &grid).unwrap();
        let matrices: Vec<SymMatrix> = enumerate_symmetric(n).unwrap().collect();
        for alpha in [q(1, 4), q(3, 8), q(1, 2)] {
            for beta in 0..2 {
                let fails = matrices.iter().filter(|m| !checker.orth(m, &alpha, beta).unwrap().verdict).count();
                println!("n={n} α={alpha} βn={beta}: Orth^p fails on {fails}/{}", matrices.len());
                assert!(fails <= matrices.len());
            }
        }
    }
}
