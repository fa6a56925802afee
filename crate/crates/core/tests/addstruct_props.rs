use num_bigint::BigUint;
use num_traits::ToPrimitive;
use proptest::prelude::*;

use symsing::addstruct::{
    check_rk_gap, enumerate_bad_set, rk_bruteforce, rk_convolution, rk_fourier, rk_star, rk_star_dp, BadSetMode,
    BadSetParams,
};
use symsing::fpcore::{FpVector, PrimeField};

const PRIMES: [u64; 10] = [3, 5, 7, 11, 13, 17, 19, 23, 29, 31];

fn vector() -> impl Strategy<Value = FpVector> {
    (0..PRIMES.len(), 1usize..=6).prop_flat_map(|(pi, n)| {
        let p = PRIMES[pi];
        proptest::collection::vec(0..p, n).prop_map(move |c| FpVector::new(PrimeField::new(p).unwrap(), c).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn convolution_matches_brute_force(a in vector(), k in 1u32..=2) {
        prop_assert_eq!(rk_convolution(&a, k), BigUint::from(rk_bruteforce(&a, k).unwrap()));
    }

    #[test]
    fn star_routes_agree_and_sandwich(a in vector(), k in 1u32..=2) {
        prop_assume!(k as usize <= a.len());
        let star = rk_star_dp(&a, k);
        prop_assert_eq!(&star, &BigUint::from(rk_star(&a, k).unwrap()));
        let gap = check_rk_gap(&a, k).unwrap();
        prop_assert!(gap.rk_star <= gap.rk);
        prop_assert!(gap.holds);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn fourier_moment_matches(pi in 0..PRIMES.len(), n in 1usize..=12, k in 1u32..=3, seed in any::<u64>()) {
        let p = PRIMES[pi];
        let coords: Vec<u64> = (0..n as u64).map(|i| seed.wrapping_mul(2 * i + 1).rotate_left(i as u32 * 7) % p).collect();
        let a = FpVector::new(PrimeField::new(p).unwrap(), coords).unwrap();
        let exact = rk_convolution(&a, k).to_f64().unwrap();
        let approx = rk_fourier(&a, k);
        prop_assert!((approx - exact).abs() <= 1e-6 * exact.max(1.0), "{} vs {}", approx, exact);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn bad_sets_shrink_as_t_grows(pi in 0..3usize, n in 1usize..=3, k in 1u32..=2, s in 1usize..=3, t in 1u64..=6) {
        let p = [3u64, 5, 7][pi];
        prop_assume!(s <= n);
        let r = enumerate_bad_set(n, PrimeField::new(p).unwrap(), &BadSetParams::global(k, s, t), BadSetMode::Global).unwrap();
        prop_assert!(r.inclusion_ok);
        prop_assert!(r.count_next <= r.count);
        prop_assert!(r.within_bound);
    }
}
