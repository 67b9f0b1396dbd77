use charbound::interp::{
    default_set, eval_poly, interp_bound, lagrange_basis, lagrange_factor, paper_cap,
    verify_interp_inequality,
};
use charbound::ratlp::{rational, Rational};
use charbound::theta::{pow2, theta_reduced};
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_poly(rng: &mut ChaCha8Rng, len: usize) -> Vec<Rational> {
    (0..len)
        .map(|_| rational(rng.random_range(-50i64..=50), rng.random_range(1i64..=9)))
        .collect()
}

#[test]
fn certificate_sound_on_random_polynomials() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for n in [8usize, 16, 24] {
        let set = default_set(n).unwrap();
        for trial in 0..500 {
            let len = 1 + trial % set.len();
            let coeffs = random_poly(&mut rng, len);
            assert!(verify_interp_inequality(&coeffs, n, &set).unwrap(), "n={n} trial={trial}");
        }
    }
}

#[test]
fn theta_below_interp_bound() {
    for n in [8usize, 16, 24] {
        let b = interp_bound(n, &default_set(n).unwrap()).unwrap();
        let r = theta_reduced(n, n / 2, n).unwrap();
        assert!(r.certificate_ok);
        assert!(*r.theta.exact().unwrap() <= pow2(n) * b, "n={n}");
    }
}

#[test]
fn bound_below_cap() {
    for n in (8..=128).step_by(8) {
        let b = interp_bound(n, &default_set(n).unwrap()).unwrap();
        assert!(b <= paper_cap(n / 8), "n={n}");
    }
}

#[test]
fn basis_is_kronecker() {
    for n in [8usize, 16] {
        let set = default_set(n).unwrap();
        for &i in set.elements() {
            let basis = lagrange_basis(&set, i).unwrap();
            for &j in set.elements() {
                let v = eval_poly(&basis, &rational(j as i64, 1));
                assert_eq!(v, if i == j { Rational::one() } else { Rational::zero() });
            }
        }
    }
}

#[test]
fn factors_pair_up_across_the_middle() {
    // f(i) and f(n - i) differ; the weighted form i·f(i) = (n-i)·f(n-i) is what holds.
    for n in (8..=64).step_by(8) {
        let set = default_set(n).unwrap();
        for &i in set.elements() {
            let a = lagrange_factor(n, &set, i).unwrap() * rational(i as i64, 1);
            let b = lagrange_factor(n, &set, n - i).unwrap() * rational((n - i) as i64, 1);
            assert_eq!(a, b, "n={n} i={i}");
        }
    }
}
