//! Signed-sum solution counts `R_k`, `R_k*`, level sets of the Fourier
//! energy, and bad-set enumeration for the counting lemma.

mod badset;
mod level;
mod rk;

pub use badset::{
    corollary_bound, corollary_holds, counting_grid, counting_lemma_bound, counting_lemma_holds, enumerate_bad_set,
    global_census, is_bad_vector, singleton_is_poor, sweep_corollary, sweep_counting_lemma, window_census,
    BadSetCount, BadSetMode, BadSetParams, GlobalCensus, SweepSummary, WindowCensus, SPACE_BUDGET, SUBSET_BUDGET,
};
pub use level::{check_sumset_containment, level_set, level_set_size, SumsetReport, SUMSET_BUDGET};
pub use rk::{
    check_rk_gap, rk_bruteforce, rk_convolution, rk_dp, rk_fourier, rk_star, rk_star_dp, RkGap, RK_BRUTE_BUDGET,
};
