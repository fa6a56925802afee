use num_rational::BigRational;
use num_traits::ToPrimitive;
use rand::Rng;

use super::config::ExperimentConfig;
use super::report::Cell;
use crate::addstruct::{
    check_rk_gap, check_sumset_containment, counting_lemma_bound, counting_lemma_holds, corollary_bound, corollary_holds,
    global_census, rk_bruteforce, rk_convolution, window_census,
};
use crate::anticon::{atom_lemma_sweep, atom_probability, char_sum_bound, default_mu_grid, MuParam, FLOAT_SLACK};
use crate::error::{Error, Result};
use crate::fpcore::{is_prime, FpVector, IntVector, PrimeField};
use crate::lemmalab::{
    check_bordered_identity, decoupling_check, laplace_check, odlyzko_check, product_law, rank_step_check, OrthChecker,
    RankStepMode,
};
use crate::matcore::{enumerate_symmetric, rank_q, IntMatrix, RngStream};
use crate::parallel;

/// Column names plus one row per instance, in instance order.
#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    fn new(columns: &[&'static str]) -> Self {
        Table { columns: columns.to_vec(), rows: Vec::new() }
    }
}

type Verifier = fn(&ExperimentConfig) -> Result<Table>;

/// Registered verifier names, in listing order.
pub const VERIFIERS: &[(&str, Verifier)] = &[
    ("adjugate", verify_adjugate),
    ("atom-lemmas", verify_atom_lemmas),
    ("char-sum", verify_char_sum),
    ("corollary", verify_corollary),
    ("counting-lemma", verify_counting_lemma),
    ("decoupling", verify_decoupling),
    ("events", verify_events),
    ("laplace", verify_laplace),
    ("level-set", verify_level_set),
    ("odlyzko", verify_odlyzko),
    ("rank-step", verify_rank_step),
    ("rk", verify_rk),
];

pub fn verifier_names() -> Vec<&'static str> {
    VERIFIERS.iter().map(|(n, _)| *n).collect()
}

/// Runs the named verifier with parameters and seed from `cfg`.
pub fn run_verifier(name: &str, cfg: &ExperimentConfig) -> Result<Table> {
    let (_, f) = VERIFIERS
        .iter()
        .find(|(n, _)| *n == name)
        .ok_or_else(|| Error::UnknownVerifier { name: name.to_string(), registered: verifier_names().join(", ") })?;
    f(cfg)
}

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn field(cfg: &ExperimentConfig, default: u64) -> Result<PrimeField> {
    PrimeField::new(cfg.u64_or("p", default)?)
}

fn small_primes(max: u64) -> Vec<u64> {
    (3..=max).filter(|&p| is_prime(p)).collect()
}

fn verify_decoupling(cfg: &ExperimentConfig) -> Result<Table> {
    let trials = cfg.u64_or("trials", 10_000)?;
    let seed = cfg.seed()?;
    let rows = parallel::map_range(trials, |i| -> Result<Vec<Cell>> {
        let mut rng = RngStream::new(seed, i);
        let marginal = |rng: &mut RngStream| {
            let w: Vec<i64> = (0..rng.random_range(1..=4)).map(|_| rng.random_range(1..=9)).collect();
            let total: i64 = w.iter().sum();
            w.into_iter().map(|x| q(x, total)).collect::<Vec<_>>()
        };
        let py = marginal(&mut rng);
        let pz = marginal(&mut rng);
        let event: Vec<Vec<bool>> = py.iter().map(|_| pz.iter().map(|_| rng.random_bool(0.5)).collect()).collect();
        let r = decoupling_check(&product_law(&py, &pz), &event)?;
        Ok(vec![Cell::int(py.len()), Cell::int(pz.len()), Cell::Rational(r.lhs), Cell::Rational(r.rhs), Cell::Bool(r.ok)])
    });
    let mut t = Table::new(&["y_size", "z_size", "lhs", "rhs", "ok"]);
    t.rows = rows.into_iter().collect::<Result<_>>()?;
    Ok(t)
}

fn verify_counting_lemma(cfg: &ExperimentConfig) -> Result<Table> {
    let f = field(cfg, 3)?;
    let p = f.modulus();
    let n_max = cfg.usize_or("n", 4)?;
    let k_max = cfg.u64_or("k", 2)? as u32;
    let mut t = Table::new(&["p", "n", "k", "s", "t", "count", "bound", "ok"]);
    for n in 1..=n_max {
        for k in 1..=k_max {
            let c = global_census(n, f, k)?;
            for s in 1..=n {
                for th in 1..=p {
                    let count = c.count(s, th);
                    t.rows.push(vec![
                        Cell::int(p),
                        Cell::int(n),
                        Cell::int(k),
                        Cell::int(s),
                        Cell::int(th),
                        Cell::int(count),
                        Cell::Rational(counting_lemma_bound(n, p, k, s, th)),
                        Cell::Bool(counting_lemma_holds(count, n, p, k, s, th)),
                    ]);
                }
            }
        }
    }
    Ok(t)
}

fn verify_corollary(cfg: &ExperimentConfig) -> Result<Table> {
    let f = field(cfg, 3)?;
    let p = f.modulus();
    let n_max = cfg.usize_or("n", 4)?;
    let k_max = cfg.u64_or("k", 2)? as u32;
    let mut t = Table::new(&["p", "n", "k", "s1", "s2", "d", "t", "count", "bound", "ok"]);
    for n in 1..=n_max {
        for k in 1..=k_max {
            let c = window_census(n, f, k)?;
            for (&(s1, s2, d), counts) in &c.counts {
                for (i, &count) in counts.iter().enumerate() {
                    let th = i as u64 + 1;
                    t.rows.push(vec![
                        Cell::int(p),
                        Cell::int(n),
                        Cell::int(k),
                        Cell::int(s1),
                        Cell::int(s2),
                        Cell::int(d),
                        Cell::int(th),
                        Cell::int(count),
                        Cell::Float(corollary_bound(n, p, s1, s2, d, th)),
                        Cell::Bool(corollary_holds(count, n, p, s1, s2, d, th)),
                    ]);
                }
            }
        }
    }
    Ok(t)
}

fn verify_odlyzko(cfg: &ExperimentConfig) -> Result<Table> {
    let n = cfg.usize_or("n", 10)?;
    let trials = cfg.u64_or("trials", 100)?;
    let seed = cfg.seed()?;
    if n == 0 {
        return Err(Error::EmptyDimension);
    }
    let mut t = Table::new(&["n", "vectors", "dim", "count", "bound", "ok"]);
    for i in 0..trials {
        let mut rng = RngStream::new(seed, i);
        let m = rng.random_range(1..=n);
        let basis: Vec<IntVector> = (0..m)
            .map(|_| IntVector::from_i64(&(0..n).map(|_| if rng.random_bool(0.5) { 1 } else { -1 }).collect::<Vec<_>>()))
            .collect();
        let r = odlyzko_check(&basis, n)?;
        t.rows.push(vec![
            Cell::int(n),
            Cell::int(m),
            Cell::int(r.dim),
            Cell::int(r.count),
            Cell::int(r.bound),
            Cell::Bool(r.ok),
        ]);
    }
    Ok(t)
}

fn verify_rank_step(cfg: &ExperimentConfig) -> Result<Table> {
    let n = cfg.usize_or("n", 3)?;
    let ell = cfg.usize_or("ell", 1)?;
    let mode = match cfg.u64_or("trials", 0)? {
        0 => RankStepMode::Exhaustive,
        trials => RankStepMode::MonteCarlo { trials, seed: cfg.seed()? },
    };
    let r = rank_step_check(n, ell, mode)?;
    let mut t = Table::new(&[
        "n", "ell", "mode", "conditioned", "successes", "frequency", "bound", "lower", "upper", "ok",
    ]);
    let name = match mode {
        RankStepMode::Exhaustive => "exhaustive",
        RankStepMode::MonteCarlo { .. } => "monte-carlo",
    };
    t.rows.push(vec![
        Cell::int(n),
        Cell::int(ell),
        Cell::text(name),
        Cell::int(r.conditioned),
        Cell::int(r.successes),
        Cell::Rational(r.frequency),
        Cell::Rational(r.bound),
        Cell::Float(r.interval.0),
        Cell::Float(r.interval.1),
        Cell::Bool(r.ok),
    ]);
    Ok(t)
}

fn verify_adjugate(cfg: &ExperimentConfig) -> Result<Table> {
    let n = cfg.usize_or("n", 3)?;
    let mut t = Table::new(&[
        "code",
        "lambda",
        "kernel",
        "cases",
        "negative_sign_matches",
        "positive_sign_matches",
        "ok",
    ]);
    for s in enumerate_symmetric(n)? {
        let m = IntMatrix::from(&s);
        if rank_q(&m) + 1 != n {
            continue;
        }
        let b = check_bordered_identity(&m)?;
        t.rows.push(vec![
            Cell::int(s.code().unwrap_or(0)),
            Cell::Rational(b.factorization.lambda.clone()),
            Cell::text(&b.factorization.a),
            Cell::int(b.cases),
            Cell::int(b.negative_sign_matches),
            Cell::int(b.positive_sign_matches),
            Cell::Bool(b.identity_holds()),
        ]);
    }
    Ok(t)
}

fn verify_laplace(cfg: &ExperimentConfig) -> Result<Table> {
    let n = cfg.usize_or("n", 3)?;
    let mut t = Table::new(&["code", "cases", "matches", "ok"]);
    for s in enumerate_symmetric(n)? {
        let r = laplace_check(&IntMatrix::from(&s))?;
        t.rows.push(vec![Cell::int(s.code().unwrap_or(0)), Cell::int(r.cases), Cell::int(r.matches), Cell::Bool(r.ok())]);
    }
    Ok(t)
}

fn digits(mut code: u64, p: u64, n: usize) -> Vec<u64> {
    let mut v = vec![0; n];
    for slot in v.iter_mut() {
        *slot = code % p;
        code /= p;
    }
    v
}

fn verify_rk(cfg: &ExperimentConfig) -> Result<Table> {
    let f = field(cfg, 3)?;
    let p = f.modulus();
    let n_max = cfg.usize_or("n", 3)?;
    let k_max = cfg.u64_or("k", 2)? as u32;
    let mut t = Table::new(&["p", "n", "k", "a", "rk_bruteforce", "rk_convolution", "rk_star", "slack", "ok"]);
    for n in 1..=n_max {
        let size = p.checked_pow(n as u32).ok_or_else(|| Error::BudgetExceeded(format!("{p}^{n} vectors")))?;
        for code in 0..size {
            let a = FpVector::new(f, digits(code, p, n))?;
            for k in 1..=k_max.min(n as u32) {
                let brute = rk_bruteforce(&a, k)?;
                let conv = rk_convolution(&a, k);
                let gap = check_rk_gap(&a, k)?;
                let agree = conv == brute.into();
                t.rows.push(vec![
                    Cell::int(p),
                    Cell::int(n),
                    Cell::int(k),
                    Cell::text(format!("({})", a.coords().iter().map(u64::to_string).collect::<Vec<_>>().join(","))),
                    Cell::int(brute),
                    Cell::Int(conv.into()),
                    Cell::Int(gap.rk_star.into()),
                    Cell::Int(gap.slack.into()),
                    Cell::Bool(agree && gap.holds),
                ]);
            }
        }
    }
    Ok(t)
}

/// Random instances with `p ≤ 101`, `n ≤ 300` and `t` both below and above `|supp(a)|/100`.
pub fn level_set_instances(seed: u64, count: u64) -> Vec<(FpVector, BigRational, u32)> {
    let primes = small_primes(101);
    (0..count)
        .map(|i| {
            let mut rng = RngStream::new(seed, i);
            let p = primes[rng.random_range(0..primes.len())];
            let f = PrimeField::new(p).expect("odd prime");
            let n = rng.random_range(1..=300);
            let a = FpVector::new(f, (0..n).map(|_| rng.random_range(0..p)).collect()).expect("residues");
            // t in (0, n/50], in steps of 1/8
            let t = q(rng.random_range(1..=(8 * n as i64 / 50).max(1)), 8);
            (a, t, rng.random_range(1..=3))
        })
        .collect()
}

fn verify_level_set(cfg: &ExperimentConfig) -> Result<Table> {
    let trials = cfg.u64_or("trials", 100)?;
    let mut t = Table::new(&["p", "n", "support", "t", "m", "level_size", "sumset_size", "contained", "small_level", "ok"]);
    for (a, th, m) in level_set_instances(cfg.seed()?, trials) {
        let r = check_sumset_containment(&a, &th, m)?;
        t.rows.push(vec![
            Cell::int(a.modulus()),
            Cell::int(a.len()),
            Cell::int(a.support().len()),
            Cell::Rational(th),
            Cell::int(m),
            Cell::int(r.level_size),
            Cell::int(r.sumset_size),
            Cell::Bool(r.contained),
            r.small_level.map_or(Cell::text("n/a"), Cell::Bool),
            Cell::Bool(r.ok()),
        ]);
    }
    Ok(t)
}

/// Random `(a, μ)` with `p ≤ 101`, `n ≤ 20`, `μ ∈ {0, 1/4, 1/2}`.
pub fn char_sum_instances(seed: u64, count: u64) -> Vec<(FpVector, MuParam)> {
    let primes = small_primes(101);
    let mus = [MuParam::zero(), MuParam::ratio(1, 4).expect("in range"), MuParam::half()];
    (0..count)
        .map(|i| {
            let mut rng = RngStream::new(seed, i);
            let p = primes[rng.random_range(0..primes.len())];
            let f = PrimeField::new(p).expect("odd prime");
            let n = rng.random_range(1..=20);
            let a = FpVector::new(f, (0..n).map(|_| rng.random_range(0..p)).collect()).expect("residues");
            (a, mus[rng.random_range(0..3)].clone())
        })
        .collect()
}

fn verify_char_sum(cfg: &ExperimentConfig) -> Result<Table> {
    let instances = char_sum_instances(cfg.seed()?, cfg.u64_or("trials", 1000)?);
    let rows = parallel::map(&instances, |(a, mu)| {
        let rho = atom_probability(a, mu);
        let b = char_sum_bound(a, mu);
        let r = rho.to_f64().unwrap_or(1.0);
        let ok = b.cosine + FLOAT_SLACK >= r && b.exponential + FLOAT_SLACK >= b.cosine;
        vec![
            Cell::int(a.modulus()),
            Cell::int(a.len()),
            Cell::Rational(mu.value().clone()),
            Cell::Rational(rho),
            Cell::Float(b.cosine),
            Cell::Float(b.exponential),
            Cell::Bool(ok),
        ]
    });
    Ok(Table { columns: vec!["p", "n", "mu", "rho", "cosine", "exponential", "ok"], rows })
}

fn verify_events(cfg: &ExperimentConfig) -> Result<Table> {
    let n = cfg.usize_or("n", 3)?;
    let f = field(cfg, 3)?;
    let alpha = cfg.rational_or("alpha", q(1, 4))?;
    let beta_n = cfg.usize_or("beta", 1)?;
    let d = cfg.usize_or("d", 3)?;
    let checker = OrthChecker::new(n, f, &default_mu_grid())?;
    let witness = |v: &crate::lemmalab::EventVerdict| v.witness.as_ref().map_or(Cell::text("none"), Cell::text);
    let mut t = Table::new(&["code", "orth", "orth_witness", "orth_witness_rho", "spt", "spt_witness"]);
    for s in enumerate_symmetric(n)? {
        let o = checker.orth(&s, &alpha, beta_n)?;
        let sp = checker.spt(&s, d, beta_n)?;
        t.rows.push(vec![
            Cell::int(s.code().unwrap_or(0)),
            Cell::Bool(o.verdict),
            witness(&o),
            o.witness_rho.clone().map_or(Cell::text("none"), Cell::Rational),
            Cell::Bool(sp.verdict),
            witness(&sp),
        ]);
    }
    Ok(t)
}

fn verify_atom_lemmas(cfg: &ExperimentConfig) -> Result<Table> {
    let r = cfg.u64_or("r", 3)?;
    let n = cfg.usize_or("n", 5)?;
    let mus = [MuParam::zero(), MuParam::ratio(1, 4)?, MuParam::half()];
    let mut t = Table::new(&["mu", "vectors", "checks", "monotonicity_failures", "restriction_failures", "ok"]);
    for mu in mus {
        let s = atom_lemma_sweep(r, n, std::slice::from_ref(&mu));
        t.rows.push(vec![
            Cell::Rational(mu.value().clone()),
            Cell::int(s.vectors),
            Cell::int(s.checks),
            Cell::int(s.monotonicity_failures.len()),
            Cell::int(s.restriction_failures.len()),
            Cell::Bool(s.ok()),
        ]);
    }
    Ok(t)
}
