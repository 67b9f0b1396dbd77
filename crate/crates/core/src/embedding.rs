//! Symmetric orthogonal embeddings of weight-band Cayley graphs.
//!
//! A normalized PSD function `f` with `f = 0` on the edge differences gives
//! unit vectors `φ(g) = (√f̂(z)·χ_z(g))_{z ∈ supp f̂}` with
//! `⟨φ(g), φ(h)⟩ = f(g - h)`, so `symork(G) ≤ |supp f̂|`. Conversely DLSZ
//! applied to `f̂` bounds the support from below. This module builds the
//! extremal witness, checks embeddings against a graph, and provides a brute
//! force oracle for the minimal support at tiny sizes.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bochner::psd_via_fourier;
use crate::cayley::{CayleySpec, ConventionKind};
use crate::group_core::{
    fourier_forward, fourier_inverse, nonzero_count, poly_degree, pow_big, GroupFunction,
    GroupSpec, Spectrum, Values, DEFAULT_TOLERANCE,
};
use crate::ratlp::{lp_solve, LpProblem, LpStatus, Rational, FLOAT_TOL};
use crate::{guard, Error, Result};

/// Seed of the pair sampler used when an exhaustive check is over budget.
const SAMPLE_SEED: u64 = 0x5eed_cafe;
/// Pair-times-dimension work spent on sampled pairs.
const SAMPLE_BUDGET: u128 = 1 << 22;

#[derive(Debug, Clone, PartialEq)]
pub enum Weights {
    Exact(Vec<Rational>),
    Float(Vec<f64>),
}

/// Vectors `φ(g)_j = √c_j·χ_{z_j}(g)` over the support `z_1, …, z_dim`.
#[derive(Debug, Clone, PartialEq)]
pub struct Embedding {
    spec: GroupSpec,
    source: GroupFunction,
    support: Vec<usize>,
    weights: Weights,
}

impl Embedding {
    pub fn spec(&self) -> &GroupSpec {
        &self.spec
    }

    pub fn dim(&self) -> usize {
        self.support.len()
    }

    /// The witness function `f`.
    pub fn source(&self) -> &GroupFunction {
        &self.source
    }

    /// Ranks of the characters spanning the embedding.
    pub fn support(&self) -> &[usize] {
        &self.support
    }

    /// The squared coordinates `c_j = f̂(z_j)`.
    pub fn weights(&self) -> &Weights {
        &self.weights
    }

    pub fn vector(&self, g: usize) -> Vec<Complex64> {
        let roots = self.support.iter().map(|&z| self.spec.character_index(z, g).to_complex());
        match &self.weights {
            Weights::Exact(c) => roots
                .zip(c)
                .map(|(r, c)| r * crate::ratlp::to_f64(c).sqrt())
                .collect(),
            Weights::Float(c) => roots.zip(c).map(|(r, c)| r * c.sqrt()).collect(),
        }
    }

    /// One vector per group element, in rank order.
    pub fn vectors(&self) -> Result<Vec<Vec<Complex64>>> {
        let size = self.spec.order() as u128 * self.dim() as u128;
        guard::check("embedding vector table", size, guard::EMBED_EXHAUSTIVE)?;
        Ok((0..self.spec.order()).map(|g| self.vector(g)).collect())
    }

    /// `⟨φ(g), φ(h)⟩` from the coordinates: `Σ_j c_j·χ_{z_j}(g)·conj(χ_{z_j}(h))`.
    /// Exact for rational weights, since `√c_j·√c_j = c_j` and the characters are `±1`.
    pub fn inner(&self, g: usize, h: usize) -> InnerValue {
        match &self.weights {
            Weights::Exact(c) if c.iter().all(|v| *v == c[0]) => {
                // Equal weights: count signs in machine integers.
                let mut balance = 0i64;
                for &z in &self.support {
                    if (self.spec.dot_index(z, g) + self.spec.dot_index(z, h)).is_multiple_of(2) {
                        balance += 1;
                    } else {
                        balance -= 1;
                    }
                }
                InnerValue::Exact(&c[0] * Rational::from_integer(BigInt::from(balance)))
            }
            Weights::Exact(c) => {
                let mut acc = Rational::zero();
                for (&z, c) in self.support.iter().zip(c) {
                    let sign = (self.spec.dot_index(z, g) + self.spec.dot_index(z, h)) % 2;
                    if sign == 0 {
                        acc += c;
                    } else {
                        acc -= c;
                    }
                }
                InnerValue::Exact(acc)
            }
            Weights::Float(c) => {
                let mut acc = Complex64::zero();
                for (&z, c) in self.support.iter().zip(c) {
                    let a = self.spec.character_index(z, g).to_complex();
                    let b = self.spec.character_index(z, h).to_complex();
                    acc += a * b.conj() * c;
                }
                InnerValue::Float(acc)
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum InnerValue {
    Exact(Rational),
    Float(Complex64),
}

impl InnerValue {
    /// `|self - target|`.
    fn distance(&self, target: &InnerValue) -> f64 {
        match (self, target) {
            (InnerValue::Exact(a), InnerValue::Exact(b)) => crate::ratlp::to_f64(&(a - b).abs()),
            _ => (self.to_complex() - target.to_complex()).norm(),
        }
    }

    fn is_exact_zero_distance(&self, target: &InnerValue) -> Option<bool> {
        match (self, target) {
            (InnerValue::Exact(a), InnerValue::Exact(b)) => Some(a == b),
            _ => None,
        }
    }

    pub fn to_complex(&self) -> Complex64 {
        match self {
            InnerValue::Exact(r) => Complex64::new(crate::ratlp::to_f64(r), 0.0),
            InnerValue::Float(c) => *c,
        }
    }
}

/// `g(x) = [x_1 = … = x_k = 0]` with `k = n - d/(m-1)`.
pub fn build_witness(m: usize, n: usize, d: usize) -> Result<GroupFunction> {
    let spec = GroupSpec::new(m, n)?;
    if !d.is_multiple_of(m - 1) {
        return Err(Error::InvalidParameter(format!(
            "d = {d} is not divisible by m - 1 = {}",
            m - 1
        )));
    }
    if d > spec.max_weight() {
        return Err(Error::InvalidParameter(format!(
            "d = {d} exceeds the maximum weight {}",
            spec.max_weight()
        )));
    }
    let k = n - d / (m - 1);
    let block = num_traits::pow(m, k);
    // Little-endian ranks: the first k coordinates vanish iff rank ≡ 0 mod m^k.
    if m == 2 {
        GroupFunction::from_fn_exact(spec, |x| {
            if x % block == 0 {
                Rational::one()
            } else {
                Rational::zero()
            }
        })
    } else {
        GroupFunction::from_fn_complex(spec, DEFAULT_TOLERANCE, |x| {
            Complex64::new(if x % block == 0 { 1.0 } else { 0.0 }, 0.0)
        })
    }
}

/// The embedding of a normalized PSD function.
pub fn embed_from_function(f: &GroupFunction) -> Result<Embedding> {
    let verdict = psd_via_fourier(f);
    if let Some(w) = verdict.witness {
        return Err(Error::NotPsd(w));
    }
    if !verdict.normalized {
        return Err(Error::InvalidParameter(
            "function must satisfy f(0) = 1 for unit vectors".into(),
        ));
    }
    let spectrum = fourier_forward(f);
    let support = spectrum.support();
    let weights = match spectrum.values() {
        Values::Exact(v) => Weights::Exact(support.iter().map(|&z| v[z].clone()).collect()),
        Values::Complex { values, .. } => {
            Weights::Float(support.iter().map(|&z| values[z].re.max(0.0)).collect())
        }
    };
    Ok(Embedding {
        spec: *f.spec(),
        source: f.clone(),
        support,
        weights,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct EmbeddingReport {
    pub ok: bool,
    pub spec_matches: bool,
    pub unit_norms: bool,
    pub orthogonal_edges: bool,
    pub translation_invariant: bool,
    /// Largest deviation found across the three checks.
    pub worst_violation: f64,
    /// Edge differences `s` (ranks) where some pair at difference `s` is not orthogonal.
    pub violating_differences: Vec<usize>,
    /// Whether every pair was examined; otherwise pairs were sampled.
    pub exhaustive: bool,
    pub pairs_checked: u64,
}

/// Checks unit norms, orthogonality on every edge and dependence of the Gram
/// entries on `x - y` only. Exact when the weights are rational, otherwise
/// within the source function's tolerance.
pub fn verify_embedding(emb: &Embedding, graph: &CayleySpec) -> EmbeddingReport {
    let spec = emb.spec;
    if spec != *graph.group() {
        return EmbeddingReport {
            ok: false,
            spec_matches: false,
            unit_norms: false,
            orthogonal_edges: false,
            translation_invariant: false,
            worst_violation: f64::INFINITY,
            violating_differences: Vec::new(),
            exhaustive: false,
            pairs_checked: 0,
        };
    }
    let tol = emb.source.tolerance().max(0.0);
    let order = spec.order();
    let dim = emb.dim().max(1) as u128;
    let exhaustive = (order as u128) * (order as u128) * dim <= guard::limit(guard::EMBED_EXHAUSTIVE);

    let one = match emb.weights {
        Weights::Exact(_) => InnerValue::Exact(Rational::one()),
        Weights::Float(_) => InnerValue::Float(Complex64::new(1.0, 0.0)),
    };
    let zero = match emb.weights {
        Weights::Exact(_) => InnerValue::Exact(Rational::zero()),
        Weights::Float(_) => InnerValue::Float(Complex64::zero()),
    };
    let mut worst = 0.0f64;
    let fails = |value: &InnerValue, target: &InnerValue, worst: &mut f64| -> bool {
        let dist = value.distance(target);
        *worst = worst.max(dist);
        match value.is_exact_zero_distance(target) {
            Some(eq) => !eq,
            None => dist > tol,
        }
    };

    let mut unit_norms = true;
    for g in 0..order {
        if fails(&emb.inner(g, g), &one, &mut worst) {
            unit_norms = false;
        }
    }

    // Row of the Gram matrix through 0: covers every difference once.
    let base: Vec<InnerValue> = (0..order).map(|s| emb.inner(s, 0)).collect();
    let mut violating = Vec::new();
    for s in graph.edge_differences() {
        if fails(&base[s], &zero, &mut worst) {
            violating.push(s);
        }
    }

    let mut translation_invariant = true;
    let mut pairs = 0u64;
    let mut check_pair = |x: usize, y: usize, worst: &mut f64, violating: &mut Vec<usize>| {
        let s = spec.sub_index(x, y);
        let v = emb.inner(x, y);
        if fails(&v, &base[s], worst) {
            translation_invariant = false;
        }
        if graph.is_edge_difference(s) && fails(&v, &zero, worst) {
            violating.push(s);
        }
        pairs += 1;
    };
    if exhaustive {
        for x in 0..order {
            for y in 0..order {
                check_pair(x, y, &mut worst, &mut violating);
            }
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(SAMPLE_SEED);
        let samples = (SAMPLE_BUDGET / dim).max(64) as u64;
        for _ in 0..samples {
            let x = rng.random_range(0..order);
            let y = rng.random_range(0..order);
            check_pair(x, y, &mut worst, &mut violating);
        }
    }
    violating.sort_unstable();
    violating.dedup();
    let orthogonal_edges = violating.is_empty();
    EmbeddingReport {
        ok: unit_norms && orthogonal_edges && translation_invariant,
        spec_matches: true,
        unit_norms,
        orthogonal_edges,
        translation_invariant,
        worst_violation: worst,
        violating_differences: violating,
        exhaustive,
        pairs_checked: pairs,
    }
}

/// `m^{n - d/(m-1)}`.
pub fn symork_formula(m: usize, n: usize, d: usize) -> Result<BigInt> {
    if m < 2 || n < 1 {
        return Err(Error::InvalidParameter(format!("invalid group C_{m}^{n}")));
    }
    if d < 1 || d > (m - 1) * n {
        return Err(Error::InvalidParameter(format!(
            "d = {d} outside [1, {}]",
            (m - 1) * n
        )));
    }
    if !d.is_multiple_of(m - 1) {
        return Err(Error::InvalidParameter(format!(
            "d = {d} is not divisible by m - 1 = {}",
            m - 1
        )));
    }
    Ok(pow_big(m, n - d / (m - 1)))
}

/// `⌈m^{n - deg/(m-1)}⌉`, the least `c` with `c^{m-1} ≥ m^{(m-1)n - deg}`.
pub fn dlsz_floor(m: usize, n: usize, deg: usize) -> Result<BigInt> {
    let top = (m - 1) * n;
    if deg > top {
        return Err(Error::DegreeTooHigh { degree: deg, bound: top });
    }
    let target = pow_big(m, top - deg);
    let k = (m - 1) as u32;
    let mut root = target.nth_root(k);
    if num_traits::pow(root.clone(), k as usize) < target {
        root += 1;
    }
    Ok(root)
}

/// `|U(f)| ≥ ⌈m^{n - deg(f)/(m-1)}⌉`, compared as `|U(f)|^{m-1} ≥ m^{(m-1)n - deg}`.
pub fn dlsz_check(f: &GroupFunction) -> Result<bool> {
    let spec = f.spec();
    let deg = poly_degree(f).ok_or(Error::ZeroFunction)?;
    let count = BigInt::from(nonzero_count(f));
    let m = spec.m();
    let lhs = num_traits::pow(count, m - 1);
    Ok(lhs >= pow_big(m, (m - 1) * spec.n() - deg))
}

/// Smallest spectral support found by exhaustive search, with a realizing function.
#[derive(Debug, Clone, PartialEq)]
pub struct MinSupport {
    pub size: usize,
    pub support: Vec<usize>,
    /// `f̂`, supported on `support`.
    pub spectrum: Spectrum,
    /// `f = Σ_z f̂(z)·χ_z`.
    pub function: GroupFunction,
    /// Candidate supports tried before the first feasible one, inclusive.
    pub supports_tried: usize,
}

/// `min |supp f̂|` over `f` with `f(0) = 1`, `f̂ ≥ 0` and `f = 0` on the
/// connection set. Exact LPs for `m = 2`, float LPs (tolerance 1e-7) otherwise.
pub fn min_support_oracle(graph: &CayleySpec) -> Result<MinSupport> {
    let spec = *graph.group();
    let order = spec.order();
    let subsets = 1u128.checked_shl(order as u32).unwrap_or(u128::MAX);
    guard::check("oracle candidate supports", subsets, guard::ORACLE_SUBSETS)?;
    let constraints = oracle_rows(graph);
    let mut tried = 0;
    for size in 1..=order {
        let mut subset: Vec<usize> = (0..size).collect();
        loop {
            tried += 1;
            if let Some(coeffs) = support_feasible(&spec, &constraints, &subset)? {
                let spectrum = Spectrum::from_values(spec, coeffs)?;
                let function = fourier_inverse(&spectrum);
                return Ok(MinSupport {
                    size,
                    support: subset,
                    spectrum,
                    function,
                    supports_tried: tried,
                });
            }
            if !next_combination(&mut subset, order) {
                break;
            }
        }
    }
    Err(Error::LpStatus("no feasible support"))
}

/// Lexicographic successor of a sorted k-subset of `0..n`.
fn next_combination(c: &mut [usize], n: usize) -> bool {
    let k = c.len();
    let Some(i) = (0..k).rev().find(|&i| c[i] < n - k + i) else {
        return false;
    };
    c[i] += 1;
    for j in i + 1..k {
        c[j] = c[j - 1] + 1;
    }
    true
}

/// Connection-set elements the function must vanish at, one per `{s, -s}`.
fn oracle_rows(graph: &CayleySpec) -> Vec<usize> {
    let spec = graph.group();
    graph
        .connection_set()
        .into_iter()
        .filter(|&s| {
            let neg = spec.neg_index(s);
            s <= neg || !graph.in_band(spec.weight_of(neg))
        })
        .collect()
}

fn support_feasible(spec: &GroupSpec, conn: &[usize], subset: &[usize]) -> Result<Option<Values>> {
    let order = spec.order();
    if spec.m() == 2 {
        let mut rows = vec![vec![Rational::one(); subset.len()]];
        for &s in conn {
            rows.push(
                subset
                    .iter()
                    .map(|&z| {
                        if spec.dot_index(z, s) == 0 {
                            Rational::one()
                        } else {
                            -Rational::one()
                        }
                    })
                    .collect(),
            );
        }
        let mut rhs = vec![Rational::zero(); rows.len()];
        rhs[0] = Rational::one();
        let p = LpProblem::new(vec![Rational::zero(); subset.len()], rows, rhs)?;
        let sol = lp_solve(&p)?;
        if sol.status != LpStatus::Optimal {
            return Ok(None);
        }
        let mut coeffs = vec![Rational::zero(); order];
        for (&z, c) in subset.iter().zip(sol.primal) {
            coeffs[z] = c;
        }
        return Ok(Some(Values::Exact(coeffs)));
    }
    let mut rows = vec![vec![1.0; subset.len()]];
    for &s in conn {
        let roots: Vec<Complex64> = subset
            .iter()
            .map(|&z| spec.character_index(z, s).to_complex())
            .collect();
        rows.push(roots.iter().map(|r| r.re).collect());
        if spec.neg_index(s) != s {
            rows.push(roots.iter().map(|r| r.im).collect());
        }
    }
    let mut rhs = vec![0.0; rows.len()];
    rhs[0] = 1.0;
    let p = LpProblem::new(vec![0.0; subset.len()], rows, rhs)?;
    let sol = lp_solve(&p)?;
    if sol.status != LpStatus::Optimal {
        return Ok(None);
    }
    let mut coeffs = vec![Complex64::zero(); order];
    for (&z, c) in subset.iter().zip(sol.primal) {
        coeffs[z] = Complex64::new(c, 0.0);
    }
    Ok(Some(Values::Complex {
        values: coeffs,
        tolerance: FLOAT_TOL,
    }))
}

/// Whether the oracle runs at this size.
pub fn oracle_in_guard(spec: &GroupSpec) -> bool {
    (spec.order() as u128) < 128 && (1u128 << spec.order()) <= guard::limit(guard::ORACLE_SUBSETS)
}

#[derive(Debug, Clone, PartialEq)]
pub struct SymRankReport {
    pub m: usize,
    pub n: usize,
    pub d: usize,
    pub convention: ConventionKind,
    pub graph: CayleySpec,
    /// `m^{n - d/(m-1)}`.
    pub formula_value: BigInt,
    /// `d'` of the witness actually built: the largest multiple of `m - 1`
    /// with `H(d')` (strict) containing the graph.
    pub witness_d: usize,
    pub witness_dim: usize,
    /// DLSZ lower bound for any embedding of the graph.
    pub dlsz_floor: BigInt,
    pub oracle_value: Option<usize>,
    pub embedding: EmbeddingReport,
    /// `dlsz_floor = witness_dim`: the symmetric orthogonal rank is pinned down.
    pub determined: bool,
    /// The pinned value equals the formula.
    pub formula_matches: bool,
    /// Embedding valid and all bounds consistent.
    pub verified: bool,
}

/// Upper and lower bounds on `symork(H_m^n(d))` under either reading of `d`.
pub fn symrank_report(
    m: usize,
    n: usize,
    d: usize,
    convention: ConventionKind,
    with_oracle: bool,
) -> Result<SymRankReport> {
    let formula_value = symork_formula(m, n, d)?;
    let graph = CayleySpec::from_paper_params(m, n, d, convention)?;
    let step = m - 1;
    let reach = graph.t_lo() - 1;
    let witness_d = reach / step * step;
    let f = build_witness(m, n, witness_d)?;
    let emb = embed_from_function(&f)?;
    let embedding = verify_embedding(&emb, &graph);
    let floor = dlsz_floor(m, n, reach)?;
    let oracle_value = if with_oracle && oracle_in_guard(graph.group()) {
        Some(min_support_oracle(&graph)?.size)
    } else {
        None
    };
    let dim = BigInt::from(emb.dim());
    let determined = floor == dim;
    let oracle_ok = oracle_value.is_none_or(|v| {
        let v = BigInt::from(v);
        floor <= v && v <= dim
    });
    Ok(SymRankReport {
        m,
        n,
        d,
        convention,
        graph,
        witness_d,
        witness_dim: emb.dim(),
        formula_matches: determined && dim == formula_value,
        verified: embedding.ok && floor <= dim && oracle_ok,
        formula_value,
        dlsz_floor: floor,
        oracle_value,
        embedding,
        determined,
    })
}
