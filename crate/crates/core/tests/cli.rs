use std::path::PathBuf;
use std::process::{Command, Output};

use num_rational::BigRational;
use num_traits::ToPrimitive;

use symsing::cli::{estimate_qn, run, Cell, ExperimentConfig, Format, QnMode, Report};

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_symsing")).args(args).env_remove("SYMSING_THREADS").output().unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    dir.join(format!("cli-{}-{name}", std::process::id()))
}

#[test]
fn monte_carlo_within_three_sigma() {
    for n in 2..=4 {
        let exact = estimate_qn(n, QnMode::Exhaustive, 0).unwrap().estimate.to_f64().unwrap();
        let mc = estimate_qn(n, QnMode::MonteCarlo { trials: 10_000 }, 11).unwrap();
        let est = mc.singular as f64 / mc.total as f64;
        let sigma = (exact * (1.0 - exact) / mc.total as f64).sqrt();
        assert!((est - exact).abs() <= 3.0 * sigma, "n={n}: {est} vs {exact}");
    }
}

/// Descriptive: q_n for small n next to 2^{-n}; exact up to 6, sampled at 7.
#[test]
fn qn_trend() {
    let mut last = 1.0;
    for n in 2..=7 {
        let mode = if n <= 6 { QnMode::Exhaustive } else { QnMode::MonteCarlo { trials: 20_000 } };
        let q = estimate_qn(n, mode, 3).unwrap().estimate.to_f64().unwrap();
        println!("n={n} q_n={q:.6} 2^-n={:.6}", (-(n as f64)).exp2());
        assert!(q > 0.0 && q < 1.0);
        if n <= 6 {
            assert!(q <= last, "q_{n} = {q} above q_{} = {last}", n - 1);
        }
        last = q;
    }
}

#[test]
fn q2_report_round_trips_through_file() {
    let cfg = ExperimentConfig::new().with("command", "qn").unwrap().with("n", 2).unwrap();
    let report = run(&cfg).unwrap();
    let est = report.column("estimate").unwrap();
    assert_eq!(report.rows[0][est], Cell::Rational(BigRational::new(1.into(), 2.into())));
    for format in [Format::Csv, Format::JsonLines] {
        let path = scratch(&format!("q2.{format}"));
        let out = bin(&["qn", "--n", "2", "--format", &format.to_string(), "--out", path.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0));
        let text = std::fs::read_to_string(&path).unwrap();
        assert!(text.contains("1/2"));
        assert_eq!(Report::parse(&text, format).unwrap().rows, report.rows);
    }
}

#[test]
fn exit_codes() {
    assert_eq!(bin(&["qn", "--n", "3"]).status.code(), Some(0));
    assert_eq!(bin(&["verify", "rk", "--trials", "20"]).status.code(), Some(0));
    let unknown = bin(&["verify", "no-such-check"]);
    assert_eq!(unknown.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&unknown.stderr).contains("laplace"));
    assert_eq!(bin(&["verify", "odlyzko", "--n", "21"]).status.code(), Some(2));
    assert_eq!(bin(&["qn", "--n", "9"]).status.code(), Some(2));
    assert_eq!(bin(&["qn", "--format", "xml"]).status.code(), Some(2));
    assert_eq!(bin(&["qn", "--config", "/nonexistent/cfg"]).status.code(), Some(2));

    let bad = scratch("bad.cfg");
    std::fs::write(&bad, "n 3\n").unwrap();
    assert_eq!(bin(&["qn", "--config", bad.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn flags_override_config_file() {
    let path = scratch("flags.cfg");
    std::fs::write(&path, "# small run\nn = 3\nseed = 5\ntrials = 200\n").unwrap();
    let out = bin(&["qn", "--config", path.to_str().unwrap(), "--n", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let report = Report::parse(&String::from_utf8(out.stdout).unwrap(), Format::Csv).unwrap();
    assert_eq!(report.meta.seed, 5);
    let n = report.column("n").unwrap();
    let trials = report.column("total").unwrap();
    assert_eq!(report.rows[0][n], Cell::int(2));
    assert_eq!(report.rows[0][trials], Cell::int(200));
}
