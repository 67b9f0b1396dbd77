use charbound::cayley::{CayleySpec, ConventionKind};
use charbound::embedding::{
    build_witness, dlsz_check, dlsz_floor, embed_from_function, min_support_oracle, oracle_in_guard,
    symork_formula, verify_embedding,
};
use charbound::group_core::{fourier_inverse, poly_degree, GroupSpec, Spectrum, DEFAULT_TOLERANCE};
use charbound::ratlp::rational;
use num_bigint::BigInt;
use num_complex::Complex64;
use proptest::prelude::*;

#[test]
fn witness_passes_against_strict_graph() {
    for m in 2..=16usize {
        for n in 1.. {
            if m.pow(n as u32) > 4096 {
                break;
            }
            for d in (m - 1..=(m - 1) * n).step_by(m - 1) {
                let graph = CayleySpec::from_paper_params(m, n, d, ConventionKind::Strict).unwrap();
                let emb = embed_from_function(&build_witness(m, n, d).unwrap()).unwrap();
                let report = verify_embedding(&emb, &graph);
                assert!(report.ok, "m={m} n={n} d={d}: {report:?}");
                assert_eq!(BigInt::from(emb.dim()), symork_formula(m, n, d).unwrap(), "m={m} n={n} d={d}");
                let floor = dlsz_floor(m, n, d).unwrap();
                assert!(floor <= BigInt::from(emb.dim()));
            }
        }
    }
}

fn guarded_groups() -> Vec<GroupSpec> {
    let mut out = Vec::new();
    for m in 2..=9usize {
        for n in 1..=3usize {
            let spec = GroupSpec::new(m, n).unwrap();
            if oracle_in_guard(&spec) {
                out.push(spec);
            }
        }
    }
    out
}

#[test]
fn oracle_solutions_respect_dlsz() {
    for spec in guarded_groups() {
        let top = spec.max_weight();
        for lo in 1..=top + 1 {
            for hi in lo - 1..=top {
                let graph = CayleySpec::band(spec, lo, hi).unwrap();
                let found = min_support_oracle(&graph).unwrap();
                assert!(dlsz_check(&found.function).unwrap(), "{graph}");
                assert_eq!(found.spectrum.support().len(), found.size);
                for s in graph.connection_set() {
                    assert!(found.function.abs_at(s) < 1e-7, "{graph} s={s}");
                }
            }
        }
    }
}

#[test]
fn oracle_is_monotone_in_threshold() {
    for spec in guarded_groups() {
        let top = spec.max_weight();
        let sizes: Vec<usize> = (1..=top + 1)
            .map(|lo| min_support_oracle(&CayleySpec::band(spec, lo, top).unwrap()).unwrap().size)
            .collect();
        assert!(sizes.windows(2).all(|w| w[0] >= w[1]), "{spec}: {sizes:?}");
    }
}

#[test]
fn oracle_bracketed_by_bounds() {
    for spec in guarded_groups() {
        let (m, n) = (spec.m(), spec.n());
        for d in (m - 1..=(m - 1) * n).step_by(m - 1) {
            let graph = CayleySpec::from_paper_params(m, n, d, ConventionKind::Strict).unwrap();
            let size = BigInt::from(min_support_oracle(&graph).unwrap().size);
            assert!(dlsz_floor(m, n, d).unwrap() <= size);
            assert!(size <= symork_formula(m, n, d).unwrap());
        }
    }
}

fn sparse_spectrum() -> impl Strategy<Value = Spectrum> {
    prop_oneof![
        (1usize..5, proptest::collection::vec((0usize..16, -5i64..6), 1..5)).prop_map(|(n, terms)| {
            let spec = GroupSpec::new(2, n).unwrap();
            let mut v = vec![rational(0, 1); spec.order()];
            for (z, c) in terms {
                v[z % spec.order()] += rational(c, 1);
            }
            if v.iter().all(|x| *x == rational(0, 1)) {
                v[0] = rational(1, 1);
            }
            Spectrum::exact(spec, v).unwrap()
        }),
        (1usize..5, proptest::collection::vec((0usize..81, -5i64..6, -5i64..6), 1..5)).prop_map(|(n, terms)| {
            let spec = GroupSpec::new(3, n).unwrap();
            let mut v = vec![Complex64::new(0.0, 0.0); spec.order()];
            for (z, a, b) in terms {
                v[z % spec.order()] += Complex64::new(a as f64, b as f64);
            }
            if v.iter().all(|x| x.norm() == 0.0) {
                v[0] = Complex64::new(1.0, 0.0);
            }
            Spectrum::complex(spec, v, DEFAULT_TOLERANCE).unwrap()
        }),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn dlsz_holds_on_sparse_spectra(s in sparse_spectrum()) {
        let f = fourier_inverse(&s);
        prop_assume!(poly_degree(&f).is_some());
        prop_assert!(dlsz_check(&f).unwrap());
    }
}
