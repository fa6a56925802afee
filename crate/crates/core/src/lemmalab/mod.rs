//! Exact and Monte Carlo checks of the intermediate lemmas.

mod decoupling;
mod events;
mod halasz;
mod linear;
mod schedule;

pub use decoupling::{decoupling_check, product_law, product_marginals, DecouplingReport};
pub use events::{
    binary_entropy, entropy_bound, null_event_check, orth_event_check, spt_event_check, EntropyReport, EventVerdict,
    OrthChecker, Witness, EVENT_SPACE_BUDGET,
};
pub use halasz::{
    envelope_constant, halasz_check, halasz_corpus, halasz_usable_conditions, HalaszInstance, HalaszReport,
    HalaszUsable,
};
pub use linear::{
    adjugate_factorization, check_bordered_identity, laplace_check, lazy_step_weights, odlyzko_check, r_vector, rank_step_check,
    wilson_interval, AdjFactorization, BorderedSummary, LaplaceSummary, OdlyzkoReport, RankStepMode, RankStepReport, ODLYZKO_MAX_N,
};
pub use schedule::{assemble_bound, param_schedule, ParamSchedule};
