use charbound::bochner::{psd_direct, psd_via_fourier};
use charbound::group_core::{
    fourier_forward, fourier_inverse, GroupFunction, GroupSpec, Spectrum, Values, DEFAULT_TOLERANCE,
};
use charbound::ratlp::{rational, Rational};
use num_complex::Complex64;
use num_traits::{One, Zero};
use proptest::prelude::*;

fn small_group() -> impl Strategy<Value = GroupSpec> {
    prop_oneof![
        (1usize..7).prop_map(|n| GroupSpec::new(2, n).unwrap()),
        (1usize..5).prop_map(|n| GroupSpec::new(3, n).unwrap()),
    ]
}

/// A table built the way the corpus mixes them: raw values, nonnegative
/// spectra, or spectra with a single sign flip.
fn candidate() -> impl Strategy<Value = GroupFunction> {
    (small_group(), 0u8..3, any::<u64>()).prop_map(|(spec, mode, seed)| {
        let order = spec.order();
        let mut state = seed | 1;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            (state % 9) as i64
        };
        let raw: Vec<i64> = (0..order).map(|_| next()).collect();
        let flip = (seed as usize) % order;
        if spec.m() == 2 {
            let vals: Vec<Rational> = raw.iter().map(|&v| rational(v, 4)).collect();
            match mode {
                0 => GroupFunction::exact(spec, vals).unwrap(),
                _ => {
                    let mut s: Vec<Rational> = vals;
                    if mode == 2 {
                        s[flip] = -s[flip].clone() - Rational::one();
                    }
                    let total: Rational = s.iter().cloned().sum();
                    if !total.is_zero() {
                        for v in &mut s {
                            *v = &*v / &total;
                        }
                    }
                    let spectrum = Spectrum::exact(spec, s).unwrap();
                    fourier_inverse(&spectrum)
                }
            }
        } else {
            match mode {
                0 => {
                    let mut vals: Vec<Complex64> =
                        raw.iter().map(|&v| Complex64::new(v as f64 / 4.0, 0.0)).collect();
                    // Hermitian-symmetrize so the direct test is not trivially false.
                    for x in 0..order {
                        let y = spec.neg_index(x);
                        if x < y {
                            vals[y] = vals[x].conj();
                        }
                    }
                    vals[0] = Complex64::new(vals[0].re, 0.0);
                    GroupFunction::complex(spec, vals, DEFAULT_TOLERANCE).unwrap()
                }
                _ => {
                    let mut s: Vec<Complex64> = raw.iter().map(|&v| Complex64::new(v as f64, 0.0)).collect();
                    if mode == 2 {
                        s[flip] = Complex64::new(-s[flip].re - 1.0, 0.0);
                    }
                    let spectrum = Spectrum::complex(spec, s, DEFAULT_TOLERANCE).unwrap();
                    fourier_inverse(&spectrum)
                }
            }
        }
    })
}

fn permute(f: &GroupFunction, perm: &[usize]) -> GroupFunction {
    let spec = *f.spec();
    let image = |i: usize| {
        let c = spec.unrank(i).unwrap();
        let coords: Vec<usize> = perm.iter().map(|&p| c.coords()[p]).collect();
        spec.rank(&spec.element(coords).unwrap()).unwrap()
    };
    match f.values() {
        Values::Exact(v) => GroupFunction::from_fn_exact(spec, |i| v[image(i)].clone()).unwrap(),
        Values::Complex { values, tolerance } => {
            GroupFunction::complex(spec, (0..spec.order()).map(|i| values[image(i)]).collect(), *tolerance)
                .unwrap()
        }
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn direct_and_fourier_agree(f in candidate()) {
        let a = psd_via_fourier(&f);
        let b = psd_direct(&f).unwrap();
        prop_assert_eq!(a.psd, b.psd);
        prop_assert_eq!(a.psd, a.witness.is_none());
        prop_assert_eq!(b.psd, b.witness.is_none());
    }

    #[test]
    fn normalization_is_spectral_mass(f in candidate()) {
        let s = fourier_forward(&f);
        match (f.exact(), s.exact()) {
            (Some(v), Some(sv)) => {
                let mass: Rational = sv.iter().cloned().sum();
                prop_assert_eq!(v[0].is_one(), mass.is_one());
            }
            _ => {
                let mass: Complex64 = (0..s.len()).map(|z| s.complex_at(z)).sum();
                let lhs = (f.complex_at(0) - 1.0).norm() <= 1e-9;
                let rhs = (mass - 1.0).norm() <= 1e-9;
                prop_assert_eq!(lhs, rhs);
            }
        }
        prop_assert_eq!(psd_via_fourier(&f).normalized, psd_direct(&f).unwrap().normalized);
    }
}

#[test]
fn verdicts_survive_coordinate_permutation() {
    let cases = [(2usize, 1usize), (2, 2), (2, 3), (3, 1), (3, 2), (3, 3)];
    let mut rng = 0x9e3779b97f4a7c15u64;
    for (m, n) in cases {
        let spec = GroupSpec::new(m, n).unwrap();
        for trial in 0..6 {
            let f = if m == 2 {
                GroupFunction::from_fn_exact(spec, |i| {
                    let h = (i as u64 + 1).wrapping_mul(rng.rotate_left(trial)) >> 60;
                    rational(h as i64 - 4, 3)
                })
                .unwrap()
            } else {
                let s = Spectrum::from_fn_complex(spec, DEFAULT_TOLERANCE, |z| {
                    let h = (z as u64 + 1).wrapping_mul(rng.rotate_left(trial)) >> 61;
                    Complex64::new(h as f64 - if trial % 2 == 0 { 0.0 } else { 2.0 }, 0.0)
                })
                .unwrap();
                fourier_inverse(&s)
            };
            rng = rng.wrapping_mul(6364136223846793005).wrapping_add(1);
            let base = psd_direct(&f).unwrap().psd;
            for perm in permutations(n) {
                let g = permute(&f, &perm);
                assert_eq!(psd_direct(&g).unwrap().psd, base, "m={m} n={n} perm={perm:?}");
                assert_eq!(psd_via_fourier(&g).psd, base);
            }
        }
    }
}
