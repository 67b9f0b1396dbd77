use charbound::group_core::{
    fourier_forward, fourier_inverse, inner_product, poly_degree, GroupFunction, GroupSpec,
    DEFAULT_TOLERANCE,
};
use charbound::ratlp::{rational, Rational};
use num_complex::Complex64;
use proptest::prelude::*;

fn exact_function(n: usize) -> impl Strategy<Value = GroupFunction> {
    proptest::collection::vec((-20i64..21, 1i64..7), 1 << n).prop_map(move |v| {
        let spec = GroupSpec::new(2, n).unwrap();
        GroupFunction::exact(spec, v.into_iter().map(|(a, b)| rational(a, b)).collect()).unwrap()
    })
}

fn complex_function(m: usize, n: usize) -> impl Strategy<Value = GroupFunction> {
    let order = m.pow(n as u32);
    proptest::collection::vec((-1.0f64..1.0, -1.0f64..1.0), order).prop_map(move |v| {
        let spec = GroupSpec::new(m, n).unwrap();
        let values = v.into_iter().map(|(re, im)| Complex64::new(re, im)).collect();
        GroupFunction::complex(spec, values, DEFAULT_TOLERANCE).unwrap()
    })
}

fn any_function() -> impl Strategy<Value = GroupFunction> {
    prop_oneof![
        (1usize..7).prop_flat_map(exact_function),
        (1usize..5).prop_flat_map(|n| complex_function(3, n)),
        (1usize..4).prop_flat_map(|n| complex_function(4, n)),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn roundtrip(f in any_function()) {
        let back = fourier_inverse(&fourier_forward(&f));
        match f.exact() {
            Some(v) => prop_assert_eq!(back.exact().unwrap(), v),
            None => {
                for i in 0..f.len() {
                    prop_assert!((back.complex_at(i) - f.complex_at(i)).norm() <= DEFAULT_TOLERANCE);
                }
            }
        }
    }

    #[test]
    fn plancherel(pair in (1usize..4).prop_flat_map(|n| (complex_function(3, n), complex_function(3, n)))) {
        let (f, g) = pair;
        let lhs = inner_product(&f, &g).unwrap();
        let (fh, gh) = (fourier_forward(&f), fourier_forward(&g));
        let rhs: Complex64 = (0..fh.len()).map(|z| fh.complex_at(z) * gh.complex_at(z).conj()).sum();
        prop_assert!((lhs - rhs).norm() < 1e-9);
    }

    #[test]
    fn exact_plancherel(pair in (1usize..6).prop_flat_map(|n| (exact_function(n), exact_function(n)))) {
        let (f, g) = pair;
        let order = Rational::from_integer(f.len().into());
        let lhs: Rational = f.exact().unwrap().iter().zip(g.exact().unwrap()).map(|(a, b)| a * b).sum::<Rational>() / order;
        let (fh, gh) = (fourier_forward(&f), fourier_forward(&g));
        let rhs: Rational = fh.exact().unwrap().iter().zip(gh.exact().unwrap()).map(|(a, b)| a * b).sum();
        prop_assert_eq!(lhs, rhs);
    }
}

fn groups_up_to_256() -> Vec<GroupSpec> {
    let mut out = Vec::new();
    for m in 2..=6usize {
        for n in 1..=8usize {
            if m.pow(n as u32) <= 256 {
                out.push(GroupSpec::new(m, n).unwrap());
            }
        }
    }
    out
}

#[test]
fn characters_are_orthonormal() {
    for spec in groups_up_to_256().into_iter().filter(|s| s.order() <= 64) {
        let chars: Vec<GroupFunction> = (0..spec.order())
            .map(|z| GroupFunction::character(spec, z).unwrap())
            .collect();
        for (z, a) in chars.iter().enumerate() {
            for (w, b) in chars.iter().enumerate() {
                let ip = inner_product(a, b).unwrap();
                let expect = if z == w { 1.0 } else { 0.0 };
                assert!((ip - Complex64::new(expect, 0.0)).norm() < 1e-9, "{spec} z={z} w={w}");
            }
        }
    }
}

#[test]
fn character_spectra_are_point_masses() {
    // Orthonormality in transform form, covering every group up to order 256.
    for spec in groups_up_to_256() {
        for z in 0..spec.order() {
            let s = fourier_forward(&GroupFunction::character(spec, z).unwrap());
            assert_eq!(s.support(), vec![z], "{spec} z={z}");
            assert!((s.complex_at(z) - Complex64::new(1.0, 0.0)).norm() < 1e-9);
        }
    }
}

#[test]
fn character_degree_is_its_weight() {
    for spec in groups_up_to_256() {
        for z in 0..spec.order() {
            let chi = GroupFunction::character(spec, z).unwrap();
            assert_eq!(poly_degree(&chi), Some(spec.weight_of(z)), "{spec} z={z}");
        }
    }
}
