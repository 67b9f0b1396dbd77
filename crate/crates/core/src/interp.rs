//! Lagrange-interpolation bound on the theta LP of `H_2^n(n/2)`.
//!
//! For a polynomial `p` of degree `< |S|` and `0 ∉ S`, interpolating at the
//! nodes of `S` gives `|p(0)| ≤ Σ_{i∈S} C(n,i)·f(i)·|p(i)|` with
//! `f(i) = C(n,i)^{-1}·∏_{ℓ∈S∖{i}} ℓ/|ℓ - i|`. Hence
//! `p(0) ≤ B·Σ_i C(n,i)·|p(i)|` with `B = max f(i)`, and the shell form of the
//! LP yields `θ(H_2^n(n/2)) ≤ 2^n·B`.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::ratlp::{log2_rational, Rational};
use crate::{Error, Result};

/// Sorted node set inside `{0, …, n}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct InterpSet {
    n: usize,
    elements: Vec<usize>,
}

impl InterpSet {
    pub fn new(n: usize, elements: impl IntoIterator<Item = usize>) -> Result<Self> {
        let set: BTreeSet<usize> = elements.into_iter().collect();
        if let Some(&bad) = set.iter().find(|&&i| i > n) {
            return Err(Error::InvalidParameter(format!("node {bad} outside [0, {n}]")));
        }
        if set.is_empty() {
            return Err(Error::InvalidParameter("node set is empty".into()));
        }
        Ok(Self {
            n,
            elements: set.into_iter().collect(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.elements.binary_search(&i).is_ok()
    }
}

fn require_multiple_of_8(n: usize) -> Result<()> {
    if n == 0 || !n.is_multiple_of(8) {
        return Err(Error::InvalidParameter(format!("n = {n} must be a positive multiple of 8")));
    }
    Ok(())
}

/// `((n/8, 3n/8] ∪ [5n/8, 7n/8)) ∩ ℕ`.
pub fn default_set(n: usize) -> Result<InterpSet> {
    require_multiple_of_8(n)?;
    let k = n / 8;
    InterpSet::new(n, (k + 1..=3 * k).chain(5 * k..7 * k))
}

fn binom(n: usize, k: usize) -> BigInt {
    binomial(BigInt::from(n), BigInt::from(k))
}

/// `f(i) = C(n,i)^{-1}·∏_{ℓ∈S∖{i}} ℓ/|ℓ - i|`.
pub fn lagrange_factor(n: usize, set: &InterpSet, i: usize) -> Result<Rational> {
    if set.n != n {
        return Err(Error::InvalidParameter(format!(
            "set is for n = {}, asked for n = {n}",
            set.n
        )));
    }
    if !set.contains(i) {
        return Err(Error::InvalidParameter(format!("{i} is not a node of the set")));
    }
    let mut num = BigInt::one();
    let mut den = binom(n, i);
    for &l in set.elements.iter().filter(|&&l| l != i) {
        num *= l;
        den *= l.abs_diff(i);
    }
    Ok(Rational::new(num, den))
}

/// `B = max_{i∈S} f(i)`.
pub fn interp_bound(n: usize, set: &InterpSet) -> Result<Rational> {
    let mut best: Option<Rational> = None;
    for &i in &set.elements {
        let f = lagrange_factor(n, set, i)?;
        if best.as_ref().is_none_or(|b| f > *b) {
            best = Some(f);
        }
    }
    best.ok_or_else(|| Error::InvalidParameter("node set is empty".into()))
}

/// Horner evaluation of `Σ_k coeffs[k]·x^k`.
pub fn eval_poly(coeffs: &[Rational], x: &Rational) -> Rational {
    coeffs
        .iter()
        .rev()
        .fold(Rational::zero(), |acc, c| acc * x + c)
}

/// Degree of a coefficient list; `None` for the zero polynomial.
pub fn poly_degree_of(coeffs: &[Rational]) -> Option<usize> {
    coeffs.iter().rposition(|c| !c.is_zero())
}

/// `p(0) ≤ B·Σ_{i=0}^n C(n,i)·|p(i)|`, evaluated exactly.
pub fn verify_interp_inequality(coeffs: &[Rational], n: usize, set: &InterpSet) -> Result<bool> {
    if let Some(deg) = poly_degree_of(coeffs) {
        if deg >= set.len() {
            return Err(Error::DegreeTooHigh {
                degree: deg,
                bound: set.len() - 1,
            });
        }
    }
    let bound = interp_bound(n, set)?;
    let p0 = eval_poly(coeffs, &Rational::zero());
    let mass: Rational = (0..=n)
        .map(|i| {
            let v = eval_poly(coeffs, &Rational::from_integer(BigInt::from(i)));
            v.abs() * Rational::from_integer(binom(n, i))
        })
        .sum();
    Ok(p0 <= bound * mass)
}

/// The Lagrange basis polynomial of node `i` as coefficients.
pub fn lagrange_basis(set: &InterpSet, i: usize) -> Result<Vec<Rational>> {
    if !set.contains(i) {
        return Err(Error::InvalidParameter(format!("{i} is not a node of the set")));
    }
    let mut coeffs = vec![Rational::one()];
    let xi = Rational::from_integer(BigInt::from(i));
    for &l in set.elements.iter().filter(|&&l| l != i) {
        let xl = Rational::from_integer(BigInt::from(l));
        let scale = (&xi - &xl).recip();
        // multiply by (x - l)/(i - l)
        let mut next = vec![Rational::zero(); coeffs.len() + 1];
        for (k, c) in coeffs.iter().enumerate() {
            next[k + 1] += c * &scale;
            next[k] -= c * &xl * &scale;
        }
        coeffs = next;
    }
    Ok(coeffs)
}

/// `log₂(8/7)/8`, the rate the cap `(5/2)(7/8)^{n/8}` certifies.
pub fn chain_rate() -> f64 {
    (8.0f64 / 7.0).log2() / 8.0
}

/// Slope of the comparison line `0.0435·n - log₂(5/2)`.
pub const LINE_RATE: f64 = 0.0435;

pub fn line_offset() -> f64 {
    2.5f64.log2()
}

#[derive(Debug, Clone, PartialEq)]
pub struct InterpReport {
    pub n: usize,
    pub k: usize,
    pub set: InterpSet,
    /// `(i, f(i))` for every node.
    pub factors: Vec<(usize, Rational)>,
    pub bound: Rational,
    /// `-log₂(B)/n`.
    pub eps_emp: f64,
    /// `(5/2)(7/8)^{n/8}`.
    pub paper_cap: Rational,
    /// `2^n·B`.
    pub theta_upper: Rational,
    pub log2_theta_upper: f64,
    pub cap_holds: bool,
    pub chain_rate: f64,
    pub chain_rate_holds: bool,
    /// `-log₂ B ≥ 0.0435·n - log₂(5/2)`.
    pub line_holds: bool,
}

/// `(5/2)(7/8)^k`.
pub fn paper_cap(k: usize) -> Rational {
    Rational::new(BigInt::from(5), BigInt::from(2))
        * Rational::new(num_traits::pow(BigInt::from(7), k), num_traits::pow(BigInt::from(8), k))
}

pub fn rate_report(n: usize) -> Result<InterpReport> {
    let set = default_set(n)?;
    report_for_set(n, set)
}

pub fn report_for_set(n: usize, set: InterpSet) -> Result<InterpReport> {
    require_multiple_of_8(n)?;
    let k = n / 8;
    let factors = set
        .elements
        .iter()
        .map(|&i| Ok((i, lagrange_factor(n, &set, i)?)))
        .collect::<Result<Vec<_>>>()?;
    let bound = interp_bound(n, &set)?;
    let log2_b = log2_rational(&bound);
    let eps_emp = -log2_b / n as f64;
    let cap = paper_cap(k);
    let theta_upper = &bound * Rational::from_integer(BigInt::one() << n);
    Ok(InterpReport {
        n,
        k,
        factors,
        eps_emp,
        cap_holds: bound <= cap,
        chain_rate: chain_rate(),
        chain_rate_holds: eps_emp >= chain_rate(),
        line_holds: -log2_b >= LINE_RATE * n as f64 - line_offset(),
        log2_theta_upper: log2_rational(&theta_upper),
        theta_upper,
        paper_cap: cap,
        bound,
        set,
    })
}

/// Local search over `n/2`-element node sets with swap moves, keeping a move
/// only when it lowers the bound. Starts from [`default_set`].
pub fn set_search(n: usize, budget: usize, seed: u64) -> Result<InterpSet> {
    let mut best = default_set(n)?;
    let mut best_bound = interp_bound(n, &best)?;
    if budget == 0 {
        return Ok(best);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    // 0 as a node zeroes every other factor but pins f(0) = 1.
    let pool: Vec<usize> = (1..=n).collect();
    for _ in 0..budget {
        let out = best.elements[rng.random_range(0..best.len())];
        let outside: Vec<usize> = pool.iter().copied().filter(|&v| !best.contains(v)).collect();
        if outside.is_empty() {
            break;
        }
        let inn = outside[rng.random_range(0..outside.len())];
        let cand = InterpSet::new(n, best.elements.iter().copied().filter(|&v| v != out).chain([inn]))?;
        let b = interp_bound(n, &cand)?;
        if b < best_bound {
            best = cand;
            best_bound = b;
        }
    }
    Ok(best)
}
