use charbound::ratlp::{
    integer, lp_solve, lp_solve_with, lp_verify_certificate, rational, LpProblem, LpStatus,
    PivotRule, Rational,
};
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

fn beale() -> LpProblem {
    let q = rational;
    let z = || integer(0);
    // columns: s1 s2 s3 x4 x5 x6 x7
    LpProblem::new(
        vec![z(), z(), z(), q(3, 4), integer(-20), q(1, 2), integer(-6)],
        vec![
            vec![integer(1), z(), z(), q(1, 4), integer(-8), integer(-1), integer(9)],
            vec![z(), integer(1), z(), q(1, 2), integer(-12), q(-1, 2), integer(3)],
            vec![z(), z(), integer(1), z(), z(), integer(1), z()],
        ],
        vec![z(), z(), integer(1)],
    )
    .unwrap()
}

/// Solves the square system `M·x = b` by Gauss-Jordan; `None` when singular.
#[allow(clippy::needless_range_loop)]
fn solve_square(mut m: Vec<Vec<Rational>>, mut b: Vec<Rational>) -> Option<Vec<Rational>> {
    let k = b.len();
    for c in 0..k {
        let p = (c..k).find(|&r| !m[r][c].is_zero())?;
        m.swap(c, p);
        b.swap(c, p);
        let inv = m[c][c].recip();
        for j in 0..k {
            m[c][j] = &m[c][j] * &inv;
        }
        b[c] = &b[c] * &inv;
        for r in 0..k {
            if r != c && !m[r][c].is_zero() {
                let f = m[r][c].clone();
                for j in 0..k {
                    let t = &f * &m[c][j];
                    m[r][j] -= t;
                }
                let t = &f * &b[c];
                b[r] -= t;
            }
        }
    }
    Some(b)
}

/// Best objective over all basic feasible solutions (full row rank assumed).
fn vertex_enumeration(p: &LpProblem) -> Option<Rational> {
    let mut best: Option<Rational> = None;
    let mut pick = vec![0usize; p.num_rows()];
    fn rec(
        p: &LpProblem,
        start: usize,
        depth: usize,
        pick: &mut Vec<usize>,
        best: &mut Option<Rational>,
    ) {
        let (rows, vars) = (p.num_rows(), p.num_vars());
        if depth == rows {
            let m = (0..rows)
                .map(|r| pick.iter().map(|&c| p.constraints[r][c].clone()).collect())
                .collect();
            if let Some(x) = solve_square(m, p.rhs.clone()) {
                if x.iter().all(|v| !v.is_negative()) {
                    let val: Rational = pick.iter().zip(&x).map(|(&c, v)| &p.objective[c] * v).sum();
                    if best.as_ref().is_none_or(|b| val > *b) {
                        *best = Some(val);
                    }
                }
            }
            return;
        }
        for c in start..vars {
            pick[depth] = c;
            rec(p, c + 1, depth + 1, pick, best);
        }
    }
    rec(p, 0, 0, &mut pick, &mut best);
    best
}

#[test]
fn beale_cycling_instance_terminates_at_the_vertex_optimum() {
    let p = beale();
    let oracle = vertex_enumeration(&p).unwrap();
    assert_eq!(oracle, rational(5, 4));
    for rule in [PivotRule::DantzigLex, PivotRule::Bland] {
        let s = lp_solve_with(&p, rule).unwrap();
        assert_eq!(s.status, LpStatus::Optimal);
        assert_eq!(s.value, oracle);
        assert!(lp_verify_certificate(&p, &s));
    }
}

#[test]
fn both_rules_agree_on_a_degenerate_theta_lp() {
    use charbound::cayley::CayleySpec;
    use charbound::group_core::GroupSpec;
    use charbound::theta::dense_lp;
    let g = CayleySpec::band(GroupSpec::new(2, 4).unwrap(), 2, 3).unwrap();
    let p = dense_lp(&g).unwrap();
    let a = lp_solve_with(&p, PivotRule::DantzigLex).unwrap();
    let b = lp_solve_with(&p, PivotRule::Bland).unwrap();
    assert_eq!(a.value, b.value);
    assert!(lp_verify_certificate(&p, &a) && lp_verify_certificate(&p, &b));
}

/// Random bounded feasible LP: `A·x + s = b` with `b > 0` so `x = 0` is feasible,
/// nonnegative rows keep it bounded.
fn random_lp() -> impl Strategy<Value = LpProblem> {
    (1usize..4, 1usize..5).prop_flat_map(|(rows, vars)| {
        (
            proptest::collection::vec(-5i64..6, vars),
            proptest::collection::vec(proptest::collection::vec(0i64..6, vars), rows),
            proptest::collection::vec(1i64..10, rows),
        )
            .prop_map(move |(c, a, b)| {
                let mut cons = Vec::new();
                for (i, row) in a.iter().enumerate() {
                    let mut r: Vec<Rational> = row.iter().map(|&v| integer(v + 1)).collect();
                    r.extend((0..rows).map(|k| if k == i { Rational::one() } else { Rational::zero() }));
                    cons.push(r);
                }
                let mut obj: Vec<Rational> = c.iter().map(|&v| integer(v)).collect();
                obj.extend((0..rows).map(|_| Rational::zero()));
                LpProblem::new(obj, cons, b.iter().map(|&v| integer(v)).collect()).unwrap()
            })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn row_scaling_keeps_the_optimum(p in random_lp(), row in 0usize..4, num in 1i64..20, den in 1i64..20) {
        let base = lp_solve(&p).unwrap();
        prop_assert!(base.is_optimal());
        prop_assert!(lp_verify_certificate(&p, &base));
        let i = row % p.num_rows();
        let f = rational(num, den);
        let mut scaled = p.clone();
        for v in scaled.constraints[i].iter_mut() {
            *v = &*v * &f;
        }
        scaled.rhs[i] = &scaled.rhs[i] * &f;
        let s = lp_solve(&scaled).unwrap();
        prop_assert_eq!(s.value.clone(), base.value.clone());
        prop_assert!(lp_verify_certificate(&scaled, &s));
        prop_assert_eq!(vertex_enumeration(&p), Some(base.value));
    }

    #[test]
    fn solves_are_deterministic(p in random_lp()) {
        let a = lp_solve(&p).unwrap();
        let b = lp_solve(&p).unwrap();
        prop_assert_eq!(a, b);
    }
}
