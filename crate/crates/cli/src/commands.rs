//! One function per analysis subcommand.

use charbound::cayley::{CayleySpec, Convention, ConventionKind};
use charbound::embedding::{
    build_witness, embed_from_function, symork_formula, symrank_report, verify_embedding,
    EmbeddingReport,
};
use charbound::interp::{rate_report, report_for_set, set_search, LINE_RATE};
use charbound::ratlp::{fmt_rational, log2_rational};
use charbound::theta::{
    is_kwise_independent, kwise_max_zero_prob, pow2, theta, GraphParams, Method, ThetaValue,
};
use charbound::Rational;
use serde::Serialize;

use crate::config::{ConventionArg, MethodArg, RunConfig};
use crate::error::CliError;
use crate::report::Report;

pub fn q(r: &Rational) -> String {
    fmt_rational(r)
}

#[derive(Serialize)]
pub struct GraphOut {
    pub m: usize,
    pub n: usize,
    pub t_lo: usize,
    pub t_hi: usize,
    pub convention: &'static str,
    pub d: Option<usize>,
}

impl From<&GraphParams> for GraphOut {
    fn from(g: &GraphParams) -> Self {
        Self {
            m: g.m,
            n: g.n,
            t_lo: g.t_lo,
            t_hi: g.t_hi,
            convention: g.convention.name(),
            d: g.convention.d(),
        }
    }
}

impl From<&CayleySpec> for GraphOut {
    fn from(g: &CayleySpec) -> Self {
        (&GraphParams::from(g)).into()
    }
}

#[derive(Serialize)]
struct EmbeddingOut {
    ok: bool,
    unit_norms: bool,
    orthogonal_edges: bool,
    translation_invariant: bool,
    worst_violation: f64,
    violating_differences: Vec<usize>,
    exhaustive: bool,
    pairs_checked: u64,
}

impl From<&EmbeddingReport> for EmbeddingOut {
    fn from(r: &EmbeddingReport) -> Self {
        Self {
            ok: r.ok,
            unit_norms: r.unit_norms,
            orthogonal_edges: r.orthogonal_edges,
            translation_invariant: r.translation_invariant,
            worst_violation: r.worst_violation,
            violating_differences: r.violating_differences.clone(),
            exhaustive: r.exhaustive,
            pairs_checked: r.pairs_checked,
        }
    }
}

/// The band a theta-style command refers to: `--d` under the convention, or
/// an explicit `--t-lo/--t-hi` (upper end defaulting to the maximum weight).
pub fn graph_params(cfg: &RunConfig) -> Result<GraphParams, CliError> {
    let (m, n) = (cfg.m, cfg.n());
    let top = (m - 1) * n;
    Ok(match cfg.d {
        Some(d) => {
            if d < 1 || d > top {
                return Err(CliError::usage(format!("--d = {d} outside [1, {top}]")));
            }
            let (t_lo, convention) = match cfg.convention {
                ConventionArg::Literal => (d, Convention::Literal(d)),
                ConventionArg::Strict => (d + 1, Convention::Strict(d)),
            };
            GraphParams {
                convention,
                ..GraphParams::band(m, n, t_lo, top)?
            }
        }
        None => {
            let t_lo = cfg.t_lo.expect("validated");
            GraphParams::band(m, n, t_lo, cfg.t_hi.unwrap_or(top))?
        }
    })
}

pub fn symrank(cfg: &RunConfig) -> Result<Report, CliError> {
    let d = cfg.d.expect("validated");
    let r = symrank_report(cfg.m, cfg.n(), d, cfg.convention.into(), true)?;
    #[derive(Serialize)]
    struct Out {
        graph: GraphOut,
        formula: String,
        witness_d: usize,
        witness_dim: usize,
        dlsz_floor: String,
        oracle: Option<usize>,
        determined: bool,
        formula_matches: bool,
        verified: bool,
        embedding: EmbeddingOut,
    }
    let out = Out {
        graph: (&r.graph).into(),
        formula: r.formula_value.to_string(),
        witness_d: r.witness_d,
        witness_dim: r.witness_dim,
        dlsz_floor: r.dlsz_floor.to_string(),
        oracle: r.oracle_value,
        determined: r.determined,
        formula_matches: r.formula_matches,
        verified: r.verified,
        embedding: (&r.embedding).into(),
    };
    Ok(Report::new(cfg, out, r.verified))
}

pub fn embed(cfg: &RunConfig) -> Result<Report, CliError> {
    let (m, n, d) = (cfg.m, cfg.n(), cfg.d.expect("validated"));
    let kind: ConventionKind = cfg.convention.into();
    let graph = CayleySpec::from_paper_params(m, n, d, kind)?;
    let emb = embed_from_function(&build_witness(m, n, d)?)?;
    let r = verify_embedding(&emb, &graph);
    #[derive(Serialize)]
    struct Out {
        graph: GraphOut,
        dim: usize,
        formula: String,
        embedding: EmbeddingOut,
    }
    let out = Out {
        graph: (&graph).into(),
        dim: emb.dim(),
        formula: symork_formula(m, n, d)?.to_string(),
        embedding: (&r).into(),
    };
    Ok(Report::new(cfg, out, r.ok))
}

pub fn theta_cmd(cfg: &RunConfig) -> Result<Report, CliError> {
    let graph = graph_params(cfg)?;
    let method = match cfg.method {
        Some(MethodArg::Dense) => Method::Dense,
        Some(MethodArg::Reduced) => Method::Reduced,
        None if cfg.m == 2 => Method::Reduced,
        None => Method::Dense,
    };
    let r = theta(&graph, method)?;
    #[derive(Serialize)]
    struct Out {
        graph: GraphOut,
        theta: String,
        log2_theta: f64,
        complement_lower: Option<String>,
        complement_lower_log2: f64,
        symork_cap_log2: Option<f64>,
        method: &'static str,
        exact: bool,
        certificate_ok: bool,
    }
    let theta_str = match &r.theta {
        ThetaValue::Exact(v) => q(v),
        ThetaValue::Approx(v) => format!("{v}"),
    };
    let out = Out {
        graph: (&graph).into(),
        theta: theta_str,
        log2_theta: r.log2_theta,
        complement_lower: r.complement_lower.as_ref().map(q),
        complement_lower_log2: r.complement_lower_log2,
        symork_cap_log2: r.symork_cap_log2,
        method: r.method.as_str(),
        exact: r.exact,
        certificate_ok: r.certificate_ok,
    };
    Ok(Report::new(cfg, out, r.certificate_ok))
}

pub fn kwise(cfg: &RunConfig) -> Result<Report, CliError> {
    if cfg.m != 2 {
        return Err(CliError::usage("kwise works on {0,1}^n; --m must be 2"));
    }
    let (n, k) = (cfg.n(), cfg.k.expect("validated"));
    let r = kwise_max_zero_prob(n, k)?;
    let independent = is_kwise_independent(&r.distribution, k)?;
    let scaled = &r.value * pow2(n);
    let values = r.distribution.exact().expect("exact distribution");
    let support: Vec<(usize, String)> = values
        .iter()
        .enumerate()
        .filter(|(_, v)| **v != Rational::default())
        .map(|(i, v)| (i, q(v)))
        .collect();
    #[derive(Serialize)]
    struct Out {
        n: usize,
        k: usize,
        value: String,
        scaled: String,
        matches_theta: bool,
        kwise_independent: bool,
        certificate_ok: bool,
        support: Vec<(usize, String)>,
    }
    let ok = r.matches_theta && independent && r.certificate_ok;
    let out = Out {
        n,
        k,
        value: q(&r.value),
        scaled: q(&scaled),
        matches_theta: r.matches_theta,
        kwise_independent: independent,
        certificate_ok: r.certificate_ok,
        support,
    };
    Ok(Report::new(cfg, out, ok))
}

#[derive(Serialize)]
pub struct InterpOut {
    pub n: usize,
    pub k: usize,
    pub set: Vec<usize>,
    pub factors: Vec<(usize, String)>,
    pub bound: String,
    pub log2_bound: f64,
    pub eps_emp: f64,
    pub paper_cap: String,
    pub log2_paper_cap: f64,
    pub cap_holds: bool,
    pub theta_upper: String,
    pub log2_theta_upper: f64,
    pub chain_rate: f64,
    pub chain_rate_holds: bool,
    pub line_rate: f64,
    pub line_holds: bool,
}

pub fn interp_out(r: &charbound::interp::InterpReport) -> InterpOut {
    InterpOut {
        n: r.n,
        k: r.k,
        set: r.set.elements().to_vec(),
        factors: r.factors.iter().map(|(i, f)| (*i, q(f))).collect(),
        bound: q(&r.bound),
        log2_bound: log2_rational(&r.bound),
        eps_emp: r.eps_emp,
        paper_cap: q(&r.paper_cap),
        log2_paper_cap: log2_rational(&r.paper_cap),
        cap_holds: r.cap_holds,
        theta_upper: q(&r.theta_upper),
        log2_theta_upper: r.log2_theta_upper,
        chain_rate: r.chain_rate,
        chain_rate_holds: r.chain_rate_holds,
        line_rate: LINE_RATE,
        line_holds: r.line_holds,
    }
}

pub fn interp(cfg: &RunConfig) -> Result<Report, CliError> {
    let n = cfg.n();
    let r = rate_report(n)?;
    #[derive(Serialize)]
    struct Search {
        budget: usize,
        seed: u64,
        set: Vec<usize>,
        bound: String,
        log2_bound: f64,
        improved: bool,
    }
    #[derive(Serialize)]
    struct Out {
        #[serde(flatten)]
        base: InterpOut,
        search: Option<Search>,
    }
    let search = match cfg.trials {
        Some(budget) if budget > 0 => {
            let set = set_search(n, budget, cfg.seed)?;
            let found = report_for_set(n, set)?;
            Some(Search {
                budget,
                seed: cfg.seed,
                set: found.set.elements().to_vec(),
                log2_bound: log2_rational(&found.bound),
                improved: found.bound < r.bound,
                bound: q(&found.bound),
            })
        }
        _ => None,
    };
    let ok = r.cap_holds;
    Ok(Report::new(cfg, Out { base: interp_out(&r), search }, ok))
}
