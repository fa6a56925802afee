//! Batch experiment runner: configs, q_n estimation, the verifier registry
//! and report emission. The `symsing` binary is a thin wrapper over [`run`].

mod config;
mod qn;
mod report;
mod verify;

pub use config::{ExperimentConfig, Format};
pub use qn::{estimate_qn, qn_by_iterator, QnEstimate, QnInterval, QnMode, Z_95};
pub use report::{emit_report, Cell, Meta, Report};
pub use verify::{char_sum_instances, level_set_instances, run_verifier, verifier_names, Table, VERIFIERS};

use crate::anticon::default_mu_grid;
use crate::error::{Error, Result};
use crate::lemmalab::{
    assemble_bound, envelope_constant, halasz_check, halasz_corpus, halasz_usable_conditions, param_schedule,
};
use crate::parallel;

pub const COMMANDS: &[&str] = &["qn", "verify", "badset", "halasz", "schedule"];

/// Runs the experiment named by the `command` key.
pub fn run(cfg: &ExperimentConfig) -> Result<Report> {
    let command = cfg.require("command")?;
    let table = match command {
        "qn" => qn_table(cfg)?,
        "verify" => run_verifier(cfg.require("name")?, cfg)?,
        "badset" => match cfg.get("mode").unwrap_or("global") {
            "global" => run_verifier("counting-lemma", cfg)?,
            "window" => run_verifier("corollary", cfg)?,
            other => {
                return Err(Error::Param { key: "mode".into(), reason: format!("expected global or window, got '{other}'") })
            }
        },
        "halasz" => halasz_table(cfg)?,
        "schedule" => schedule_table(cfg)?,
        other => {
            return Err(Error::Param { key: "command".into(), reason: format!("expected one of {}, got '{other}'", COMMANDS.join(", ")) })
        }
    };
    let mut report = Report::new(Meta::for_config(cfg)?, &table.columns);
    for (i, row) in table.rows.into_iter().enumerate() {
        report.push(i as u64, row)?;
    }
    Ok(report)
}

fn qn_table(cfg: &ExperimentConfig) -> Result<Table> {
    let n = cfg.usize_or("n", 3)?;
    let mode = match cfg.u64_or("trials", 0)? {
        0 => QnMode::Exhaustive,
        trials => QnMode::MonteCarlo { trials },
    };
    let e = estimate_qn(n, mode, cfg.seed()?)?;
    let (mode_name, lower, upper) = match &e.interval {
        QnInterval::Exact(r) => ("exhaustive", Cell::Rational(r.clone()), Cell::Rational(r.clone())),
        QnInterval::Wilson { lower, upper } => ("monte-carlo", Cell::Float(*lower), Cell::Float(*upper)),
    };
    Ok(Table {
        columns: vec!["n", "mode", "singular", "total", "estimate", "lower", "upper", "comparison_log2", "target_log2"],
        rows: vec![vec![
            Cell::int(n),
            Cell::text(mode_name),
            Cell::int(e.singular),
            Cell::int(e.total),
            Cell::Rational(e.estimate),
            lower,
            upper,
            Cell::Float(e.comparison_log2),
            Cell::Float(e.target_log2),
        ]],
    })
}

/// Corpus run: per-instance minimal constants, then every instance is
/// re-checked against the corpus envelope `C*`.
fn halasz_table(cfg: &ExperimentConfig) -> Result<Table> {
    let count = cfg.usize_or("trials", 100)?;
    let c_probe = cfg.f64_or("c", 1.0)?;
    let grid = default_mu_grid();
    let corpus = halasz_corpus(cfg.seed()?, count);
    let reports = parallel::map(&corpus, |inst| halasz_check(&inst.a, inst.k, &inst.f, c_probe, &grid))
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
    let c_star = envelope_constant(&reports);
    let rows = reports
        .iter()
        .map(|r| {
            vec![
                Cell::int(r.p),
                Cell::int(r.n),
                Cell::int(r.support),
                Cell::int(r.k),
                Cell::Rational(r.f.clone()),
                Cell::Rational(r.lhs.clone()),
                Cell::Int(r.rk.clone().into()),
                Cell::Float(r.c_coefficient),
                Cell::Float(r.min_c),
                Cell::Float(r.rhs_probe),
                Cell::Bool(r.vacuous),
                Cell::Float(c_star),
                Cell::Bool(r.holds_with(c_star)),
            ]
        })
        .collect();
    Ok(Table {
        columns: vec![
            "p", "n", "support", "k", "f", "lhs", "rk", "c_coefficient", "min_c", "rhs_probe", "vacuous", "c_star", "ok",
        ],
        rows,
    })
}

fn schedule_table(cfg: &ExperimentConfig) -> Result<Table> {
    let ns: Vec<u64> = match cfg.u64_opt("n")? {
        Some(n) => vec![n],
        None => vec![16, 100, 10_000, 1_000_000, 100_000_000],
    };
    let mut rows = Vec::new();
    for n in ns {
        let s = param_schedule(n)?;
        let bound = assemble_bound(s.alpha(), s.beta_n as f64, 0.0, 0.0)?;
        let ln_p = s.p.map_or(s.p_log2 * std::f64::consts::LN_2, |p| (p as f64).ln());
        let usable = halasz_usable_conditions(ln_p, s.k, s.s1, s.s2, n, s.d, s.s1);
        let opt = |v: Option<u64>| v.map_or(Cell::text("none"), Cell::int);
        rows.push(vec![
            Cell::int(n),
            Cell::int(s.k),
            Cell::int(s.s1),
            Cell::int(s.s2),
            Cell::int(s.beta_n),
            Cell::int(s.d),
            Cell::Float(s.alpha_log2),
            opt(s.x),
            opt(s.p),
            Cell::Float(s.target_log2),
            Cell::Float(bound),
            Cell::Bool(usable.printed),
            Cell::Bool(usable.inverted),
            Cell::Bool(usable.others),
        ]);
    }
    Ok(Table {
        columns: vec![
            "n",
            "k",
            "s1",
            "s2",
            "beta_n",
            "d",
            "alpha_log2",
            "x",
            "p",
            "target_log2",
            "assembled_bound",
            "usable_printed",
            "usable_inverted",
            "usable_others",
        ],
        rows,
    })
}
