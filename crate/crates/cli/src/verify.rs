//! Check suites behind `charbound verify`. Each suite is seeded and returns a
//! count of failures together with the first failing instance.

use charbound::bochner::{psd_direct, psd_via_fourier};
use charbound::cayley::{CayleySpec, ConventionKind};
use charbound::embedding::{build_witness, dlsz_check, embed_from_function, symork_formula, verify_embedding};
use charbound::group_core::{fourier_inverse, GroupFunction, GroupSpec, Spectrum};
use charbound::interp::{default_set, verify_interp_inequality};
use charbound::ratlp::rational;
use charbound::theta::{hypercontractivity_check, theta_dense, theta_reduced};
use charbound::Rational;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::config::{RunConfig, Suite};
use crate::error::CliError;
use crate::report::Report;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteResult {
    pub suite: &'static str,
    pub trials: usize,
    pub failures: usize,
    pub first_failure: Option<String>,
}

impl SuiteResult {
    fn new(suite: &'static str) -> Self {
        Self {
            suite,
            trials: 0,
            failures: 0,
            first_failure: None,
        }
    }

    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.trials += 1;
        if !ok {
            self.failures += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(what());
            }
        }
    }

    pub fn ok(&self) -> bool {
        self.failures == 0
    }
}

fn rng(seed: u64, tag: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ tag.wrapping_mul(0x9e37_79b9_7f4a_7c15))
}

fn hermitian(spec: &GroupSpec, mut v: Vec<Complex64>) -> Vec<Complex64> {
    for x in 0..v.len() {
        let y = spec.neg_index(x);
        if x < y {
            v[y] = v[x].conj();
        } else if x == y {
            v[x] = Complex64::new(v[x].re, 0.0);
        }
    }
    v
}

/// A random table on a group with `m ∈ {2,3}` and order at most 81: raw
/// values, a nonnegative spectrum, or a spectrum with one negative entry.
fn bochner_candidate(r: &mut ChaCha8Rng, tol: f64) -> Result<GroupFunction, CliError> {
    let m = if r.random_bool(0.5) { 2 } else { 3 };
    let n = r.random_range(1..=if m == 2 { 6 } else { 4 });
    let spec = GroupSpec::new(m, n)?;
    let order = spec.order();
    let mode = r.random_range(0..3u8);
    let flip = r.random_range(0..order);
    let mut raw: Vec<i64> = (0..order).map(|_| r.random_range(0..9)).collect();
    if mode == 2 {
        raw[flip] = -1 - r.random_range(0..4);
    }
    Ok(if m == 2 {
        let vals: Vec<Rational> = raw.iter().map(|&v| rational(v, 4)).collect();
        if mode == 0 {
            let vals = (0..order).map(|x| vals[x].clone() - rational(4, 4)).collect();
            GroupFunction::exact(spec, vals)?
        } else {
            fourier_inverse(&Spectrum::exact(spec, vals)?)
        }
    } else if mode == 0 {
        let vals = raw
            .iter()
            .map(|&v| Complex64::new(v as f64 / 4.0 - 1.0, r.random_range(-4..=4) as f64 / 4.0))
            .collect();
        GroupFunction::complex(spec, hermitian(&spec, vals), tol)?
    } else {
        let vals = raw.iter().map(|&v| Complex64::new(v as f64, 0.0)).collect();
        fourier_inverse(&Spectrum::complex(spec, vals, tol)?)
    })
}

pub fn bochner_suite(seed: u64, trials: usize, tol: f64) -> Result<SuiteResult, CliError> {
    let mut r = rng(seed, 1);
    let mut out = SuiteResult::new("bochner");
    for t in 0..trials {
        let f = bochner_candidate(&mut r, tol)?;
        let a = psd_via_fourier(&f);
        let b = psd_direct(&f)?;
        let ok = a.psd == b.psd && a.normalized == b.normalized;
        out.record(ok, || {
            format!("trial {t} on {}: fourier psd={} direct psd={}", f.spec(), a.psd, b.psd)
        });
    }
    Ok(out)
}

fn sparse_spectrum(r: &mut ChaCha8Rng, tol: f64) -> Result<Spectrum, CliError> {
    let m = if r.random_bool(0.5) { 2 } else { 3 };
    let n = r.random_range(1..=4);
    let spec = GroupSpec::new(m, n)?;
    let order = spec.order();
    let terms = r.random_range(1..=order.min(6));
    let mut s = if m == 2 {
        let mut v = vec![Rational::default(); order];
        for _ in 0..terms {
            v[r.random_range(0..order)] += rational(r.random_range(-5..=5), r.random_range(1..=3));
        }
        Spectrum::exact(spec, v)?
    } else {
        let mut v = vec![Complex64::new(0.0, 0.0); order];
        for _ in 0..terms {
            v[r.random_range(0..order)] +=
                Complex64::new(r.random_range(-5..=5) as f64, r.random_range(-5..=5) as f64);
        }
        Spectrum::complex(spec, v, tol)?
    };
    if s.support().is_empty() {
        s = if m == 2 {
            Spectrum::from_fn_exact(spec, |z| rational((z == 0) as i64, 1))?
        } else {
            Spectrum::from_fn_complex(spec, tol, |z| Complex64::new((z == 0) as u8 as f64, 0.0))?
        };
    }
    Ok(s)
}

/// Spectra with one or two characters, every position and a few coefficient ratios.
fn few_character_spectra(tol: f64) -> Result<Vec<Spectrum>, CliError> {
    let mut out = Vec::new();
    for (m, n_max) in [(2usize, 4usize), (3, 4)] {
        for n in 1..=n_max {
            let spec = GroupSpec::new(m, n)?;
            let order = spec.order();
            for a in 0..order {
                for b in a..order {
                    let coeffs: &[(i64, i64)] = if a == b { &[(1, 0)] } else { &[(1, 0), (-1, 0), (0, 1)] };
                    for &(re, im) in coeffs {
                        if m == 2 {
                            if im != 0 {
                                continue;
                            }
                            out.push(Spectrum::from_fn_exact(spec, |z| {
                                if z == a {
                                    rational(1, 1)
                                } else if z == b {
                                    rational(re, 1)
                                } else {
                                    rational(0, 1)
                                }
                            })?);
                        } else {
                            out.push(Spectrum::from_fn_complex(spec, tol, |z| {
                                if z == a {
                                    Complex64::new(1.0, 0.0)
                                } else if z == b {
                                    Complex64::new(re as f64, im as f64)
                                } else {
                                    Complex64::new(0.0, 0.0)
                                }
                            })?);
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

pub fn dlsz_suite(seed: u64, trials: usize, tol: f64) -> Result<SuiteResult, CliError> {
    let mut r = rng(seed, 2);
    let mut out = SuiteResult::new("dlsz");
    let mut run = |s: &Spectrum, label: &dyn Fn() -> String| -> Result<(), CliError> {
        let f = fourier_inverse(s);
        let ok = dlsz_check(&f)?;
        out.record(ok, label);
        Ok(())
    };
    for t in 0..trials {
        let s = sparse_spectrum(&mut r, tol)?;
        run(&s, &|| format!("random trial {t} on {} support {:?}", s.spec(), s.support()))?;
    }
    for s in few_character_spectra(tol)? {
        run(&s, &|| format!("spectrum on {} support {:?}", s.spec(), s.support()))?;
    }
    Ok(out)
}

/// A random function of degree at most 3 on `{0,1}^n`, `n ≤ 12`.
fn low_degree(r: &mut ChaCha8Rng) -> Result<GroupFunction, CliError> {
    let n = r.random_range(1..=12usize);
    let spec = GroupSpec::new(2, n)?;
    let terms: Vec<(usize, i64)> = (0..r.random_range(1..=8))
        .map(|_| {
            let deg = r.random_range(0..=3usize.min(n));
            let mut z = 0usize;
            while (z.count_ones() as usize) < deg {
                z |= 1 << r.random_range(0..n);
            }
            (z, r.random_range(-6..=6))
        })
        .collect();
    let mut f = GroupFunction::from_fn_exact(spec, |x| {
        terms
            .iter()
            .map(|&(z, c)| rational(if (x & z).count_ones() % 2 == 0 { c } else { -c }, 1))
            .sum()
    })?;
    if f.support().is_empty() {
        f = GroupFunction::from_fn_exact(spec, |_| rational(1, 1))?;
    }
    Ok(f)
}

pub fn hyper_suite(seed: u64, trials: usize) -> Result<SuiteResult, CliError> {
    let mut r = rng(seed, 3);
    let mut out = SuiteResult::new("hyper");
    for t in 0..trials {
        let f = low_degree(&mut r)?;
        let h = hypercontractivity_check(&f, 2.0, 4.0)?;
        out.record(h.holds && h.degree <= 3, || {
            format!("trial {t} on {}: degree {} ratio {}", f.spec(), h.degree, h.ratio)
        });
    }
    Ok(out)
}

pub fn interp_suite(seed: u64, trials: usize, ns: &[usize]) -> Result<SuiteResult, CliError> {
    let mut r = rng(seed, 4);
    let mut out = SuiteResult::new("interp");
    for &n in ns {
        let set = default_set(n)?;
        for t in 0..trials {
            let len = r.random_range(1..=set.len());
            let coeffs: Vec<Rational> = (0..len)
                .map(|_| rational(r.random_range(-99..=99), r.random_range(1..=12)))
                .collect();
            let ok = verify_interp_inequality(&coeffs, n, &set)?;
            out.record(ok, || format!("n={n} trial {t}: degree {}", len - 1));
        }
    }
    Ok(out)
}

/// Every `(m, n, d)` with `m ∈ {2,3}`, `m^n ≤ 4096`, `(m-1) | d`.
pub fn witness_suite() -> Result<SuiteResult, CliError> {
    let mut out = SuiteResult::new("witness");
    for m in [2usize, 3] {
        let mut n = 1;
        while m.pow(n as u32) <= 4096 {
            for d in (m - 1..=(m - 1) * n).step_by(m - 1) {
                let graph = CayleySpec::from_paper_params(m, n, d, ConventionKind::Strict)?;
                let emb = embed_from_function(&build_witness(m, n, d)?)?;
                let rep = verify_embedding(&emb, &graph);
                let dim_ok = symork_formula(m, n, d)? == emb.dim().into();
                out.record(rep.ok && dim_ok, || {
                    format!("m={m} n={n} d={d}: ok={} dim={} worst={}", rep.ok, emb.dim(), rep.worst_violation)
                });
            }
            n += 1;
        }
    }
    Ok(out)
}

/// Dense and reduced theta agree on every band for `n ≤ n_max`.
pub fn theta_suite(n_max: usize) -> Result<SuiteResult, CliError> {
    let mut out = SuiteResult::new("theta");
    for n in 1..=n_max {
        let group = GroupSpec::new(2, n)?;
        for lo in 1..=n + 1 {
            for hi in lo - 1..=n {
                let dense = theta_dense(&CayleySpec::band(group, lo, hi)?)?;
                let reduced = theta_reduced(n, lo, hi)?;
                let ok = dense.theta == reduced.theta && dense.certificate_ok && reduced.certificate_ok;
                out.record(ok, || {
                    format!("n={n} [{lo},{hi}]: dense {:?} reduced {:?}", dense.theta, reduced.theta)
                });
            }
        }
    }
    Ok(out)
}

pub fn verify(cfg: &RunConfig) -> Result<Report, CliError> {
    let suite = cfg.suite.expect("validated");
    let want = |s: Suite| suite == Suite::All || suite == s;
    let trials = |default: usize| cfg.trials.unwrap_or(default);
    let mut results = Vec::new();
    if want(Suite::Bochner) {
        results.push(bochner_suite(cfg.seed, trials(200), cfg.tolerance)?);
    }
    if want(Suite::Dlsz) {
        results.push(dlsz_suite(cfg.seed, trials(1000), cfg.tolerance)?);
    }
    if want(Suite::Hyper) {
        results.push(hyper_suite(cfg.seed, trials(200))?);
    }
    if want(Suite::Interp) {
        let ns = match cfg.n {
            Some(n) => vec![n],
            None => vec![8, 16],
        };
        results.push(interp_suite(cfg.seed, trials(500), &ns)?);
    }
    if want(Suite::Witness) {
        results.push(witness_suite()?);
    }
    if want(Suite::Theta) {
        results.push(theta_suite(cfg.n.unwrap_or(6))?);
    }
    let ok = results.iter().all(SuiteResult::ok);
    #[derive(Serialize)]
    struct Out {
        ok: bool,
        suites: Vec<SuiteResult>,
    }
    Ok(Report::new(cfg, Out { ok, suites: results }, ok))
}
