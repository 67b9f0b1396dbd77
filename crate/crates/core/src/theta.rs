//! Lovász theta of weight-band Cayley graphs through their Fourier LP.
//!
//! Averaging a feasible theta matrix over translations makes it a function of
//! `x - y`, and Bochner's theorem turns the PSD constraint into nonnegativity
//! of the spectrum. What remains is the LP
//!
//! ```text
//! max  m^n·g(0)   s.t.  g ≥ 0,  Σ_x g(x) = 1,  Σ_x g(x)·conj(χ_s(x)) = 0  for s ∈ S ∪ -S
//! ```
//!
//! solved densely by [`theta_dense`]. For `m = 2` the LP is also invariant
//! under coordinate permutations, so `g` may be taken constant on weight
//! shells; [`theta_reduced`] solves that `n + 1` variable version, whose rows
//! are Krawtchouk polynomials.

use std::f64::consts::PI;
use std::fmt;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::binomial;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::cayley::{CayleySpec, Convention};
use crate::group_core::{
    fourier_forward, lp_norm, poly_degree, GroupFunction, GroupSpec, Values,
};
use crate::ratlp::{
    log2_rational, lp_solve, lp_verify_certificate, LpProblem, LpSolution, LpStatus, Rational,
};
use crate::{guard, Error, Result};

/// `Σ_{|x| = j} (-1)^{x·z}` for any `z` of weight `w`, that is
/// `Σ_s (-1)^s·C(w, s)·C(n - w, j - s)`. The first index is the shell.
pub fn krawtchouk(n: usize, j: usize, w: usize) -> Result<BigInt> {
    if j > n || w > n {
        return Err(Error::InvalidParameter(format!(
            "krawtchouk indices j = {j}, w = {w} outside [0, {n}]"
        )));
    }
    Ok(krawtchouk_unchecked(n, j, w))
}

fn krawtchouk_unchecked(n: usize, shell: usize, char_weight: usize) -> BigInt {
    let mut acc = BigInt::zero();
    for s in 0..=char_weight.min(shell) {
        if shell - s > n - char_weight {
            continue;
        }
        let term = binomial(BigInt::from(char_weight), BigInt::from(s))
            * binomial(BigInt::from(n - char_weight), BigInt::from(shell - s));
        if s % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

/// `K[w][j]` for `0 ≤ w, j ≤ n`.
#[derive(Debug, Clone, PartialEq)]
pub struct KrawtchoukTable {
    n: usize,
    values: Vec<Vec<BigInt>>,
}

impl KrawtchoukTable {
    pub fn new(n: usize) -> Self {
        let values = (0..=n)
            .map(|w| (0..=n).map(|j| krawtchouk_unchecked(n, w, j)).collect())
            .collect();
        Self { n, values }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Shell `w`, character weight `j`.
    pub fn get(&self, w: usize, j: usize) -> &BigInt {
        &self.values[w][j]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Dense,
    Reduced,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Dense => "dense",
            Method::Reduced => "reduced",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum ThetaValue {
    Exact(Rational),
    Approx(f64),
}

impl ThetaValue {
    pub fn exact(&self) -> Option<&Rational> {
        match self {
            ThetaValue::Exact(r) => Some(r),
            ThetaValue::Approx(_) => None,
        }
    }

    pub fn log2(&self) -> f64 {
        match self {
            ThetaValue::Exact(r) => log2_rational(r),
            ThetaValue::Approx(v) => v.log2(),
        }
    }
}

/// The LP that produced a value, kept so the certificate can be re-checked.
#[derive(Debug, Clone, PartialEq)]
pub struct Certificate {
    pub problem: LpProblem,
    pub solution: LpSolution,
}

impl Certificate {
    pub fn verify(&self) -> bool {
        lp_verify_certificate(&self.problem, &self.solution)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ThetaReport {
    pub graph: GraphParams,
    pub theta: ThetaValue,
    pub log2_theta: f64,
    pub method: Method,
    pub exact: bool,
    /// `m^n / θ(G)`, a lower bound on `θ(Ḡ)`; exact runs only.
    pub complement_lower: Option<Rational>,
    /// `n·log₂ m - log₂ θ(G)`.
    pub complement_lower_log2: f64,
    /// `log₂ symork(G)` when the graph is an upper tail with a known value.
    pub symork_cap_log2: Option<f64>,
    pub certificate: Option<Certificate>,
    pub certificate_ok: bool,
}

impl ThetaReport {
    fn from_exact(graph: GraphParams, method: Method, cert: Certificate) -> Result<Self> {
        let theta = cert.solution.value.clone();
        let certificate_ok = cert.verify();
        let order = Rational::from_integer(graph.order());
        let log2_theta = log2_rational(&theta);
        Ok(Self {
            graph,
            log2_theta,
            method,
            exact: true,
            complement_lower: Some(order / &theta),
            complement_lower_log2: graph.order_log2() - log2_theta,
            symork_cap_log2: graph.symork_cap_log2(),
            theta: ThetaValue::Exact(theta),
            certificate: Some(cert),
            certificate_ok,
        })
    }
}

/// Band parameters without the group tables, so reports can describe graphs
/// far too large to enumerate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GraphParams {
    pub m: usize,
    pub n: usize,
    pub t_lo: usize,
    pub t_hi: usize,
    pub convention: Convention,
}

impl GraphParams {
    /// Band `[t_lo, t_hi]` on `C_m^n`, validated like [`CayleySpec::band`].
    pub fn band(m: usize, n: usize, t_lo: usize, t_hi: usize) -> Result<Self> {
        if m < 2 || n < 1 {
            return Err(Error::InvalidParameter(format!("invalid group C_{m}^{n}")));
        }
        let max = (m - 1) * n;
        if t_lo < 1 || t_hi > max || t_lo > t_hi + 1 {
            return Err(Error::InvalidParameter(format!(
                "band [{t_lo}, {t_hi}] invalid for max weight {max}"
            )));
        }
        Ok(Self {
            m,
            n,
            t_lo,
            t_hi,
            convention: Convention::Custom,
        })
    }

    pub fn max_weight(&self) -> usize {
        (self.m - 1) * self.n
    }

    pub fn is_upper_tail(&self) -> bool {
        self.t_hi == self.max_weight()
    }

    pub fn order(&self) -> BigInt {
        num_traits::pow(BigInt::from(self.m), self.n)
    }

    pub fn order_log2(&self) -> f64 {
        self.n as f64 * (self.m as f64).log2()
    }

    /// `[t, n]` becomes `[1, t - 1]`; `m = 2` upper tails only.
    pub fn complement(&self) -> Result<Self> {
        if self.m != 2 || !self.is_upper_tail() {
            return Err(Error::Unsupported(
                "complement needs an m = 2 upper-tail band".into(),
            ));
        }
        Self::band(2, self.n, 1, self.t_lo - 1)
    }

    pub fn to_spec(&self) -> Result<CayleySpec> {
        let band = CayleySpec::band(GroupSpec::new(self.m, self.n)?, self.t_lo, self.t_hi)?;
        match self.convention {
            Convention::Custom => Ok(band),
            Convention::Literal(d) => CayleySpec::from_paper_params(
                self.m,
                self.n,
                d,
                crate::cayley::ConventionKind::Literal,
            ),
            Convention::Strict(d) => CayleySpec::from_paper_params(
                self.m,
                self.n,
                d,
                crate::cayley::ConventionKind::Strict,
            ),
        }
    }

    /// For an upper tail `[t, (m-1)n]` the graph is `H_m^n(d)` read strictly
    /// with `d = t - 1`, whose symmetric orthogonal rank is `m^{n - d/(m-1)}`
    /// when `(m-1) | d`. The complete graph (`d = 0`) needs `m^n` dimensions.
    pub fn symork_cap_log2(&self) -> Option<f64> {
        if !self.is_upper_tail() {
            return None;
        }
        let d = self.t_lo - 1;
        let step = self.m - 1;
        if !d.is_multiple_of(step) {
            return None;
        }
        Some((self.n - d / step) as f64 * (self.m as f64).log2())
    }
}

impl From<&CayleySpec> for GraphParams {
    fn from(g: &CayleySpec) -> Self {
        Self {
            m: g.group().m(),
            n: g.group().n(),
            t_lo: g.t_lo(),
            t_hi: g.t_hi(),
            convention: g.convention(),
        }
    }
}

impl fmt::Display for GraphParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Cay(C_{}^{}, weights [{}, {}], {})",
            self.m, self.n, self.t_lo, self.t_hi, self.convention
        )
    }
}

fn solve_certified(problem: LpProblem) -> Result<Certificate> {
    let solution = lp_solve(&problem)?;
    match solution.status {
        LpStatus::Optimal => Ok(Certificate { problem, solution }),
        other => Err(Error::LpStatus(other.as_str())),
    }
}

/// The dense Fourier LP over exact rationals (`m = 2`).
pub fn dense_lp(graph: &CayleySpec) -> Result<LpProblem> {
    let spec = *graph.group();
    if spec.m() != 2 {
        return Err(Error::Unsupported(
            "exact dense theta needs real characters (m = 2)".into(),
        ));
    }
    let order = spec.order();
    guard::check("exact dense theta order", order as u128, guard::THETA_DENSE_EXACT)?;
    let one = Rational::one();
    let minus = -Rational::one();
    let mut rows = vec![vec![one.clone(); order]];
    for s in graph.edge_differences() {
        rows.push(
            (0..order)
                .map(|x| {
                    if spec.dot_index(s, x) == 0 {
                        one.clone()
                    } else {
                        minus.clone()
                    }
                })
                .collect(),
        );
    }
    let mut rhs = vec![Rational::zero(); rows.len()];
    rhs[0] = one;
    let mut objective = vec![Rational::zero(); order];
    objective[0] = Rational::from_integer(BigInt::from(order));
    LpProblem::new(objective, rows, rhs)
}

/// Same LP in floating point with complex rows split into real and
/// imaginary parts; one representative per pair `{s, -s}`.
pub fn dense_lp_float(graph: &CayleySpec) -> Result<LpProblem<f64>> {
    let spec = *graph.group();
    let order = spec.order();
    guard::check("float dense theta order", order as u128, guard::THETA_DENSE_FLOAT)?;
    let m = spec.m() as f64;
    let mut rows = vec![vec![1.0; order]];
    for s in graph.edge_differences() {
        let neg = spec.neg_index(s);
        if neg < s {
            continue;
        }
        let angle = |x: usize| 2.0 * PI * spec.dot_index(s, x) as f64 / m;
        rows.push((0..order).map(|x| angle(x).cos()).collect());
        if neg != s {
            rows.push((0..order).map(|x| angle(x).sin()).collect());
        }
    }
    let mut rhs = vec![0.0; rows.len()];
    rhs[0] = 1.0;
    let mut objective = vec![0.0; order];
    objective[0] = order as f64;
    LpProblem::new(objective, rows, rhs)
}

/// θ(G) from the dense Fourier LP. Exact for `m = 2`, floating point otherwise.
pub fn theta_dense(graph: &CayleySpec) -> Result<ThetaReport> {
    let spec = *graph.group();
    if spec.m() == 2 {
        let cert = solve_certified(dense_lp(graph)?)?;
        return ThetaReport::from_exact(graph.into(), Method::Dense, cert);
    }
    let problem = dense_lp_float(graph)?;
    let solution = lp_solve(&problem)?;
    if solution.status != LpStatus::Optimal {
        return Err(Error::LpStatus(solution.status.as_str()));
    }
    let certificate_ok = lp_verify_certificate(&problem, &solution);
    let theta = solution.value;
    let log2_theta = theta.log2();
    let params = GraphParams::from(graph);
    Ok(ThetaReport {
        graph: params,
        theta: ThetaValue::Approx(theta),
        log2_theta,
        method: Method::Dense,
        exact: false,
        complement_lower: None,
        complement_lower_log2: params.order_log2() - log2_theta,
        symork_cap_log2: params.symork_cap_log2(),
        certificate: None,
        certificate_ok,
    })
}

/// The shell-symmetrized LP: `y_w` is the common value of `g` on weight `w`.
pub fn reduced_lp(n: usize, t_lo: usize, t_hi: usize) -> Result<LpProblem> {
    guard::check("reduced theta n", n as u128, guard::THETA_REDUCED_N)?;
    let table = KrawtchoukTable::new(n);
    let bin = |w: usize| Rational::from_integer(binomial(BigInt::from(n), BigInt::from(w)));
    let mut rows = vec![(0..=n).map(bin).collect::<Vec<_>>()];
    for j in t_lo..=t_hi.min(n) {
        rows.push(
            (0..=n)
                .map(|w| Rational::from_integer(table.get(w, j).clone()))
                .collect(),
        );
    }
    let mut rhs = vec![Rational::zero(); rows.len()];
    rhs[0] = Rational::one();
    let mut objective = vec![Rational::zero(); n + 1];
    objective[0] = Rational::from_integer(BigInt::one() << n);
    LpProblem::new(objective, rows, rhs)
}

/// θ of the `m = 2` band graph `[t_lo, t_hi]` on `n` coordinates, via the
/// Krawtchouk-reduced LP.
pub fn theta_reduced(n: usize, t_lo: usize, t_hi: usize) -> Result<ThetaReport> {
    theta_reduced_params(&GraphParams::band(2, n, t_lo, t_hi)?)
}

fn theta_reduced_params(graph: &GraphParams) -> Result<ThetaReport> {
    if graph.m != 2 {
        return Err(Error::Unsupported("the reduced LP needs m = 2".into()));
    }
    let cert = solve_certified(reduced_lp(graph.n, graph.t_lo, graph.t_hi)?)?;
    ThetaReport::from_exact(*graph, Method::Reduced, cert)
}

/// θ by either method. The dense path needs the group tables, so it is
/// limited by the group-order guard as well as its own.
pub fn theta(graph: &GraphParams, method: Method) -> Result<ThetaReport> {
    match method {
        Method::Dense => theta_dense(&graph.to_spec()?),
        Method::Reduced => theta_reduced_params(graph),
    }
}

/// `2^n / θ(G)`: since `θ(G)·θ(Ḡ) ≥ 2^n`, a certified lower bound on `θ(Ḡ)`.
pub fn theta_complement_lower(report: &ThetaReport) -> Result<Rational> {
    if report.graph.m != 2 {
        return Err(Error::Unsupported("complement bound is exact only for m = 2".into()));
    }
    report
        .complement_lower
        .clone()
        .ok_or_else(|| Error::Unsupported("complement bound needs an exact theta".into()))
}

#[derive(Debug, Clone, PartialEq)]
pub struct ComplementReport {
    pub graph: GraphParams,
    pub complement: GraphParams,
    pub theta: Rational,
    pub product_lower: Rational,
    pub direct: Rational,
    /// `θ(G)·θ(Ḡ) = 2^n` observed (not asserted).
    pub equality: bool,
    pub certificates_ok: bool,
}

/// Product bound and direct complement LP side by side.
pub fn complement_report(graph: &GraphParams, method: Method) -> Result<ComplementReport> {
    let complement = graph.complement()?;
    let g = theta(graph, method)?;
    let c = theta(&complement, method)?;
    let product_lower = theta_complement_lower(&g)?;
    let theta_g = g.theta.exact().cloned().unwrap_or_default();
    let direct = c.theta.exact().cloned().unwrap_or_default();
    Ok(ComplementReport {
        graph: *graph,
        complement,
        equality: direct == product_lower,
        theta: theta_g,
        product_lower,
        direct,
        certificates_ok: g.certificate_ok && c.certificate_ok,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct KwiseReport {
    pub n: usize,
    pub k: usize,
    /// Maximal `P(0…0)` over k-wise independent distributions.
    pub value: Rational,
    pub distribution: GroupFunction,
    pub certificate_ok: bool,
    /// `2^n·value = θ(band [1, k])` from the reduced LP.
    pub matches_theta: bool,
}

/// Maximal probability of the all-zeros string under a k-wise independent
/// distribution on `{0,1}^n`, from the LP over `P` with `P̂(z) = 0` for
/// `1 ≤ |z| ≤ k`.
pub fn kwise_max_zero_prob(n: usize, k: usize) -> Result<KwiseReport> {
    guard::check("k-wise n", n as u128, guard::KWISE_N)?;
    if k > n {
        return Err(Error::InvalidParameter(format!("k = {k} exceeds n = {n}")));
    }
    let spec = GroupSpec::new(2, n)?;
    let order = spec.order();
    let one = Rational::one();
    let mut rows = vec![vec![one.clone(); order]];
    for z in (1..order).filter(|&z| spec.weight_of(z) <= k) {
        rows.push(
            (0..order)
                .map(|x| {
                    if spec.dot_index(z, x) == 0 {
                        one.clone()
                    } else {
                        -one.clone()
                    }
                })
                .collect(),
        );
    }
    let mut rhs = vec![Rational::zero(); rows.len()];
    rhs[0] = one;
    let mut objective = vec![Rational::zero(); order];
    objective[0] = Rational::one();
    let cert = solve_certified(LpProblem::new(objective, rows, rhs)?)?;
    let value = cert.solution.value.clone();
    let distribution = GroupFunction::exact(spec, cert.solution.primal.clone())?;
    let theta = theta_reduced(n, 1, k)?;
    let scaled = &value * Rational::from_integer(BigInt::from(order));
    Ok(KwiseReport {
        n,
        k,
        matches_theta: theta.theta.exact() == Some(&scaled),
        certificate_ok: cert.verify() && theta.certificate_ok,
        value,
        distribution,
    })
}

/// `P̂(z) = 0` for every `1 ≤ weight(z) ≤ k`. `P` must be a distribution.
pub fn is_kwise_independent(p: &GroupFunction, k: usize) -> Result<bool> {
    let spec = *p.spec();
    if spec.m() != 2 {
        return Err(Error::Unsupported("k-wise independence is defined on {0,1}^n".into()));
    }
    match p.values() {
        Values::Exact(v) => {
            if v.iter().any(|x| x.is_negative()) {
                return Err(Error::NotADistribution("negative probability".into()));
            }
            if !v.iter().sum::<Rational>().is_one() {
                return Err(Error::NotADistribution("probabilities do not sum to 1".into()));
            }
        }
        Values::Complex { values, tolerance } => {
            if values.iter().any(|x| x.im.abs() > *tolerance || x.re < -tolerance) {
                return Err(Error::NotADistribution("negative or non-real probability".into()));
            }
            let sum: Complex64 = values.iter().sum();
            if (sum - Complex64::new(1.0, 0.0)).norm() > *tolerance {
                return Err(Error::NotADistribution("probabilities do not sum to 1".into()));
            }
        }
    }
    let spectrum = fourier_forward(p);
    Ok((1..spec.order())
        .filter(|&z| spec.weight_of(z) <= k)
        .all(|z| !spectrum.is_nonzero_at(z)))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HypercontractivityCheck {
    pub holds: bool,
    pub degree: usize,
    /// `‖f‖_q`.
    pub lhs: f64,
    /// `((q-1)/(p-1))^{d/2}·‖f‖_p`.
    pub rhs: f64,
    /// `lhs / rhs`; at most 1 when the inequality holds.
    pub ratio: f64,
}

/// Evaluates `‖f‖_q ≤ ((q-1)/(p-1))^{deg(f)/2}·‖f‖_p` on a function of `{0,1}^n`.
pub fn hypercontractivity_check(f: &GroupFunction, p: f64, q: f64) -> Result<HypercontractivityCheck> {
    if f.spec().m() != 2 {
        return Err(Error::Unsupported("hypercontractivity check needs m = 2".into()));
    }
    if !(1.0 < p && p < q && q.is_finite()) {
        return Err(Error::InvalidParameter(format!(
            "need 1 < p < q < inf, got p = {p}, q = {q}"
        )));
    }
    let degree = poly_degree(f).unwrap_or(0);
    let lhs = lp_norm(f, q)?;
    let rhs = ((q - 1.0) / (p - 1.0)).powf(degree as f64 / 2.0) * lp_norm(f, p)?;
    let ratio = if rhs > 0.0 { lhs / rhs } else { 0.0 };
    // Relative slack for the float norms.
    let holds = lhs <= rhs * (1.0 + 1e-12) + 1e-300;
    Ok(HypercontractivityCheck {
        holds,
        degree,
        lhs,
        rhs,
        ratio,
    })
}

pub fn binomial_big(n: usize, k: usize) -> BigInt {
    binomial(BigInt::from(n), BigInt::from(k))
}

/// `2^n` as a rational.
pub fn pow2(n: usize) -> Rational {
    Rational::from_integer(BigInt::one() << n)
}

pub fn rational_to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}
