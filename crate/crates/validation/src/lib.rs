//! Acceptance criteria, each evaluated as stated and reported as a verdict.
//!
//! The `acceptance` test target runs [`run_all`] and prints one line per verdict.

use std::path::PathBuf;
use std::time::{Duration, Instant};

use charbound::cayley::{CayleySpec, ConventionKind};
use charbound::embedding::{min_support_oracle, symork_formula};
use charbound::interp::{default_set, interp_bound, paper_cap, line_offset, LINE_RATE};
use charbound::ratlp::{fmt_rational, rational};
use charbound::theta::{complement_report, kwise_max_zero_prob, pow2, theta_reduced, GraphParams, Method};
use charbound::Rational;
use charbound_cli::scan::theta_row;
use charbound_cli::verify::{bochner_suite, dlsz_suite, hyper_suite, interp_suite, theta_suite, witness_suite, SuiteResult};

pub const SEED: u64 = 20_240_601;
pub const FLOAT_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq)]
pub struct Verdict {
    pub id: usize,
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
    pub elapsed: Duration,
}

/// Certificate bookkeeping shared across criteria.
#[derive(Debug, Default)]
pub struct Certs {
    pub checked: usize,
    pub failed: Vec<String>,
}

impl Certs {
    fn note(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failed.push(what());
        }
    }
}

type Outcome = Result<(bool, String), String>;

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn suite_line(s: &SuiteResult) -> String {
    match &s.first_failure {
        None => format!("{} trials, 0 failures", s.trials),
        Some(f) => format!("{} trials, {} failures, first: {f}", s.trials, s.failures),
    }
}

fn timed(id: usize, name: &'static str, f: impl FnOnce() -> Outcome) -> Verdict {
    let start = Instant::now();
    let (pass, detail) = f().unwrap_or_else(|e| (false, format!("error: {e}")));
    Verdict {
        id,
        name,
        pass,
        detail,
        elapsed: start.elapsed(),
    }
}

fn within(limit: Duration, start: Instant, detail: &mut String) -> bool {
    let t = start.elapsed();
    detail.push_str(&format!("; runtime {:.1}s (limit {}s)", t.as_secs_f64(), limit.as_secs()));
    t < limit
}

pub fn c1_exact_small_scale() -> Outcome {
    let start = Instant::now();
    let mut cases: Vec<(usize, usize, usize)> = Vec::new();
    for n in [2usize, 3] {
        cases.extend((1..=n).map(|d| (2, n, d)));
    }
    cases.extend([(3, 2, 2), (3, 2, 4)]);
    let mut pass = true;
    let mut parts = Vec::new();
    for (m, n, d) in cases {
        let formula = symork_formula(m, n, d).map_err(err)?;
        let strict = CayleySpec::from_paper_params(m, n, d, ConventionKind::Strict).map_err(err)?;
        let oracle = min_support_oracle(&strict).map_err(err)?.size;
        let literal = CayleySpec::from_paper_params(m, n, d, ConventionKind::Literal).map_err(err)?;
        let lit = min_support_oracle(&literal).map_err(err)?.size;
        let ok = formula == oracle.into();
        pass &= ok;
        parts.push(format!("({m},{n},{d}) strict {oracle} formula {formula} literal {lit}"));
    }
    let mut detail = parts.join(", ");
    pass &= within(Duration::from_secs(60), start, &mut detail);
    Ok((pass, detail))
}

pub fn c2_witness() -> Outcome {
    let s = witness_suite().map_err(err)?;
    Ok((s.ok(), suite_line(&s)))
}

pub fn c3_bochner() -> Outcome {
    let s = bochner_suite(SEED, 200, FLOAT_TOL).map_err(err)?;
    Ok((s.ok() && s.trials == 200, suite_line(&s)))
}

pub fn c4_dlsz() -> Outcome {
    let s = dlsz_suite(SEED, 1000, FLOAT_TOL).map_err(err)?;
    Ok((s.ok() && s.trials >= 1000, suite_line(&s)))
}

pub fn c5_reduction(certs: &mut Certs) -> Outcome {
    let start = Instant::now();
    let s = theta_suite(8).map_err(err)?;
    // The suite folds certificate checks into each comparison.
    certs.note(s.ok(), || format!("dense/reduced sweep: {}", suite_line(&s)));
    let mut detail = format!("{} bands n<=8, {}", s.trials, suite_line(&s));
    let fast = within(Duration::from_secs(600), start, &mut detail);
    Ok((s.ok() && fast, detail))
}

fn reduced(n: usize, lo: usize, hi: usize, certs: &mut Certs) -> Result<Rational, String> {
    let r = theta_reduced(n, lo, hi).map_err(err)?;
    certs.note(r.certificate_ok, || format!("reduced n={n} [{lo},{hi}]"));
    r.theta.exact().cloned().ok_or_else(|| "inexact theta".to_string())
}

pub fn c6_anchors(certs: &mut Certs) -> Outcome {
    let mut pass = true;
    let mut notes = Vec::new();
    for n in 1..=8usize {
        let complete = reduced(n, 1, n, certs)?;
        let empty = reduced(n, n + 1, n, certs)?;
        if complete != rational(1, 1) || empty != pow2(n) {
            pass = false;
            notes.push(format!("n={n}: complete {} empty {}", fmt_rational(&complete), fmt_rational(&empty)));
        }
    }
    let two = reduced(2, 2, 2, certs)?;
    if two != rational(2, 1) {
        pass = false;
        notes.push(format!("n=2 t_lo=2: {}", fmt_rational(&two)));
    }
    let (mut graphs, mut equal) = (0, 0);
    for n in 1..=8usize {
        for t in 2..=n + 1 {
            let c = complement_report(&GraphParams::band(2, n, t, n).map_err(err)?, Method::Reduced)
                .map_err(err)?;
            certs.note(c.certificates_ok, || format!("complement n={n} t={t}"));
            graphs += 1;
            if &c.theta * &c.direct < pow2(n) {
                pass = false;
                notes.push(format!("product below 2^n at n={n} t={t}"));
            }
            equal += (&c.theta * &c.direct == pow2(n)) as usize;
        }
    }
    notes.push(format!("product bound on {graphs} graphs, equality on {equal}"));
    Ok((pass, notes.join("; ")))
}

pub fn c7_rate_track(certs: &mut Certs) -> Outcome {
    let start = Instant::now();
    let grid = [8usize, 16, 24, 32, 40, 48, 56, 64];
    let mut rows = Vec::new();
    for &n in &grid {
        let r = theta_row(n).map_err(|e| e.message)?;
        certs.note(r.certificate_ok, || format!("rate track n={n}"));
        rows.push(r);
    }
    let line_ok = rows
        .iter()
        .all(|r| r.log2_complement_lower >= LINE_RATE * r.n as f64 - line_offset());
    let cap_ok = rows.iter().all(|r| r.log2_complement_lower <= r.n as f64 / 2.0);
    let monotone = rows.windows(2).all(|w| w[1].rate >= w[0].rate);
    let below = rows.iter().all(|r| r.rate < 0.25);
    let rates: Vec<String> = rows.iter().map(|r| format!("{}:{:.4}", r.n, r.rate)).collect();
    let mut detail = format!(
        "lower line {}, symork cap {}, rate non-decreasing {}, rate < 0.25 {}; rates {}",
        ok_word(line_ok),
        ok_word(cap_ok),
        ok_word(monotone),
        ok_word(below),
        rates.join(" ")
    );
    let fast = within(Duration::from_secs(300), start, &mut detail);
    Ok((line_ok && cap_ok && monotone && below && fast, detail))
}

fn ok_word(b: bool) -> &'static str {
    if b {
        "ok"
    } else {
        "FAILS"
    }
}

pub fn c8_interp(certs: &mut Certs) -> Outcome {
    let mut notes = Vec::new();
    let mut cap_ok = true;
    for n in (8..=128).step_by(8) {
        let b = interp_bound(n, &default_set(n).map_err(err)?).map_err(err)?;
        if b > paper_cap(n / 8) {
            cap_ok = false;
            notes.push(format!("n={n}: B={} above cap", fmt_rational(&b)));
        }
    }
    let s = interp_suite(SEED, 500, &[8, 16]).map_err(err)?;
    notes.push(format!("cap n=8..128 {}", ok_word(cap_ok)));
    notes.push(format!("random polynomials: {}", suite_line(&s)));
    let mut theta_ok = true;
    for n in [8usize, 16, 24] {
        let b = interp_bound(n, &default_set(n).map_err(err)?).map_err(err)?;
        let t = reduced(n, n / 2, n, certs)?;
        if pow2(n) * &b < t {
            theta_ok = false;
        }
        notes.push(format!("n={n}: theta {} vs 2^n*B {}", fmt_rational(&t), fmt_rational(&(pow2(n) * b))));
    }
    Ok((cap_ok && s.ok() && s.trials == 1000 && theta_ok, notes.join("; ")))
}

pub fn c9_kwise(certs: &mut Certs) -> Outcome {
    let mut mismatches = Vec::new();
    let mut count = 0;
    for n in 1..=8usize {
        for k in 1..=n {
            let r = kwise_max_zero_prob(n, k).map_err(err)?;
            certs.note(r.certificate_ok, || format!("kwise n={n} k={k}"));
            let t = reduced(n, 1, k, certs)?;
            count += 1;
            if &r.value * pow2(n) != t {
                mismatches.push(format!("n={n} k={k}"));
            }
        }
    }
    let spot = kwise_max_zero_prob(2, 1).map_err(err)?.value;
    let spot_ok = spot == rational(1, 2);
    let detail = format!(
        "{count} (n,k) pairs, {} mismatches{}; n=2 k=1 -> {}",
        mismatches.len(),
        if mismatches.is_empty() { String::new() } else { format!(" ({})", mismatches.join(", ")) },
        fmt_rational(&spot)
    );
    Ok((mismatches.is_empty() && spot_ok, detail))
}

pub fn c10_hyper() -> Outcome {
    let s = hyper_suite(SEED, 200).map_err(err)?;
    Ok((s.ok() && s.trials == 200, suite_line(&s)))
}

fn golden_dir() -> PathBuf {
    [env!("CARGO_MANIFEST_DIR"), "..", "cli", "tests", "golden"].iter().collect()
}

/// `(file, argv)` for every golden file.
pub const GOLDEN: &[(&str, &[&str])] = &[
    ("theta_n2_t2_reduced.json", &["theta", "--n", "2", "--t-lo", "2", "--reduced", "--format", "json"]),
    ("symrank_m2_n4_d2_strict.json", &["symrank", "--m", "2", "--n", "4", "--d", "2", "--convention", "strict"]),
    ("interp_n8.json", &["interp", "--n", "8"]),
    ("scan_theta_8_16.json", &["scan", "--task", "theta", "--n-min", "8", "--n-max", "16"]),
    ("kwise_n2_k1.json", &["kwise", "--n", "2", "--k", "1"]),
];

fn cli(args: &[&str]) -> charbound_cli::Outcome {
    charbound_cli::run(std::iter::once("charbound").chain(args.iter().copied()))
}

pub fn c11_determinism(certs: &Certs) -> Outcome {
    let mut notes = Vec::new();
    let certs_ok = certs.failed.is_empty();
    notes.push(format!("{} certificates checked, {} failed", certs.checked, certs.failed.len()));
    if let Some(f) = certs.failed.first() {
        notes.push(format!("first failing certificate: {f}"));
    }
    let runs: [&[&str]; 3] = [
        &["verify", "--suite", "bochner", "--seed", "11", "--trials", "40"],
        &["verify", "--suite", "hyper", "--seed", "11", "--trials", "40", "--format", "csv"],
        &["interp", "--n", "16", "--trials", "64", "--seed", "5"],
    ];
    let mut repeat_ok = true;
    for args in runs {
        let (a, b) = (cli(args), cli(args));
        if a != b || a.code != 0 {
            repeat_ok = false;
            notes.push(format!("{args:?} not reproducible (codes {} {})", a.code, b.code));
        }
    }
    let mut golden_ok = true;
    for (name, args) in GOLDEN {
        let want = std::fs::read_to_string(golden_dir().join(name)).map_err(|e| format!("{name}: {e}"))?;
        let got = cli(args);
        if got.code != 0 || got.stdout != want {
            golden_ok = false;
            notes.push(format!("golden {name} differs"));
        }
    }
    notes.push(format!(
        "repeat runs {}, {} golden files {}",
        ok_word(repeat_ok),
        GOLDEN.len(),
        ok_word(golden_ok)
    ));
    Ok((certs_ok && repeat_ok && golden_ok, notes.join("; ")))
}

/// Runs every criterion in order, handing each verdict to `report` as soon as it is known.
pub fn run_all(mut report: impl FnMut(&Verdict)) -> Vec<Verdict> {
    let mut certs = Certs::default();
    let mut out = Vec::new();
    let mut push = |v: Verdict| {
        report(&v);
        out.push(v);
    };
    push(timed(1, "exact symmetric rank at small scale", c1_exact_small_scale));
    push(timed(2, "witness embeddings", c2_witness));
    push(timed(3, "Bochner equivalence", c3_bochner));
    push(timed(4, "DLSZ harness", c4_dlsz));
    push(timed(5, "theta reduction exactness", || c5_reduction(&mut certs)));
    push(timed(6, "theta anchors and product bound", || c6_anchors(&mut certs)));
    push(timed(7, "complement rate track", || c7_rate_track(&mut certs)));
    push(timed(8, "interpolation certificate", || c8_interp(&mut certs)));
    push(timed(9, "k-wise identity", || c9_kwise(&mut certs)));
    push(timed(10, "hypercontractivity harness", c10_hyper));
    push(timed(11, "determinism and certificates", || c11_determinism(&certs)));
    out
}
