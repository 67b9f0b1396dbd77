//! Dense primal simplex in standard form, `max c·x  s.t.  A·x = b, x ≥ 0`.
//!
//! The solver is generic over [`LpScalar`]. Over [`Rational`] every pivot is
//! exact and an optimal answer comes with a dual vector `y` satisfying
//! `Aᵀ·y ≥ c` and `b·y = c·x`, which [`lp_verify_certificate`] re-checks from
//! the problem data alone. The `f64` instantiation uses the same pivoting rules
//! with an absolute tolerance of [`FLOAT_TOL`]; it is only used where exact
//! arithmetic is unavailable (complex characters) and never feeds a certified
//! report.
//!
//! The entering column follows Dantzig's rule (largest reduced cost, lowest
//! index on ties). Ratio-test ties are broken lexicographically on the rows
//! of `B⁻¹`, which rules out cycling, so runs always terminate; they are
//! also deterministic. Bland's rule is available through [`lp_solve_with`].

use std::fmt::{self, Debug};
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::{guard, Error, Result};

mod small;

use small::Q;

pub type Rational = BigRational;

/// Absolute tolerance of the floating-point simplex path.
pub const FLOAT_TOL: f64 = 1e-7;

/// Iteration cap for the floating-point path, where rounding can defeat anti-cycling.
const FLOAT_MAX_PIVOTS: usize = 200_000;

pub trait LpScalar: Clone + Debug + PartialOrd + Zero + One + Neg<Output = Self>
where
    for<'a> &'a Self: Add<&'a Self, Output = Self>
        + Sub<&'a Self, Output = Self>
        + Mul<&'a Self, Output = Self>
        + Div<&'a Self, Output = Self>,
{
    const EXACT: bool;

    /// Zero for pivoting and feasibility purposes.
    fn negligible(&self) -> bool;

    fn positive(&self) -> bool {
        !self.negligible() && *self > Self::zero()
    }

    fn negative(&self) -> bool {
        !self.negligible() && *self < Self::zero()
    }

    /// Runs the simplex in whatever representation suits the scalar.
    fn solve(p: &LpProblem<Self>, rule: PivotRule) -> Result<LpSolution<Self>> {
        simplex(p, rule)
    }
}

impl LpScalar for Rational {
    const EXACT: bool = true;

    fn negligible(&self) -> bool {
        self.is_zero()
    }

    /// Pivots in word-sized fractions where possible; the result is
    /// converted back and is exactly what a `BigRational` run would give.
    fn solve(p: &LpProblem<Self>, rule: PivotRule) -> Result<LpSolution<Self>> {
        let conv = |v: &[Rational]| v.iter().cloned().map(Q::from_big).collect::<Vec<_>>();
        let q = LpProblem {
            objective: conv(&p.objective),
            constraints: p.constraints.iter().map(|r| conv(r)).collect(),
            rhs: conv(&p.rhs),
        };
        let s = simplex(&q, rule)?;
        let back = |v: &[Q]| v.iter().map(Q::to_big).collect::<Vec<_>>();
        Ok(LpSolution {
            status: s.status,
            value: s.value.to_big(),
            primal: back(&s.primal),
            dual: back(&s.dual),
            pivots: s.pivots,
        })
    }
}

impl LpScalar for Q {
    const EXACT: bool = true;

    fn negligible(&self) -> bool {
        self.is_zero()
    }
}

impl LpScalar for f64 {
    const EXACT: bool = false;

    fn negligible(&self) -> bool {
        self.abs() <= FLOAT_TOL
    }
}

pub fn rational(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn integer(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

/// `max c·x` subject to `A·x = b`, `x ≥ 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct LpProblem<T = Rational> {
    pub objective: Vec<T>,
    pub constraints: Vec<Vec<T>>,
    pub rhs: Vec<T>,
}

impl<T: Clone> LpProblem<T> {
    pub fn new(objective: Vec<T>, constraints: Vec<Vec<T>>, rhs: Vec<T>) -> Result<Self> {
        let p = Self {
            objective,
            constraints,
            rhs,
        };
        p.check_dimensions()?;
        Ok(p)
    }

    pub fn num_vars(&self) -> usize {
        self.objective.len()
    }

    pub fn num_rows(&self) -> usize {
        self.constraints.len()
    }

    fn check_dimensions(&self) -> Result<()> {
        if self.rhs.len() != self.constraints.len() {
            return Err(Error::InvalidParameter(format!(
                "{} constraint rows but {} right-hand sides",
                self.constraints.len(),
                self.rhs.len()
            )));
        }
        if let Some((i, row)) = self
            .constraints
            .iter()
            .enumerate()
            .find(|(_, row)| row.len() != self.objective.len())
        {
            return Err(Error::InvalidParameter(format!(
                "constraint row {i} has {} entries, expected {}",
                row.len(),
                self.objective.len()
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LpStatus {
    Optimal,
    Infeasible,
    Unbounded,
}

impl LpStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            LpStatus::Optimal => "optimal",
            LpStatus::Infeasible => "infeasible",
            LpStatus::Unbounded => "unbounded",
        }
    }
}

impl fmt::Display for LpStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Solver output. `value`, `primal` and `dual` are only meaningful when
/// `status` is [`LpStatus::Optimal`]; otherwise they are zero / empty.
#[derive(Debug, Clone, PartialEq)]
pub struct LpSolution<T = Rational> {
    pub status: LpStatus,
    pub value: T,
    pub primal: Vec<T>,
    pub dual: Vec<T>,
    pub pivots: usize,
}

impl<T: LpScalar> LpSolution<T>
where
    for<'a> &'a T: Add<&'a T, Output = T>
        + Sub<&'a T, Output = T>
        + Mul<&'a T, Output = T>
        + Div<&'a T, Output = T>,
{
    fn without_optimum(status: LpStatus, pivots: usize) -> Self {
        Self {
            status,
            value: T::zero(),
            primal: Vec::new(),
            dual: Vec::new(),
            pivots,
        }
    }

    pub fn is_optimal(&self) -> bool {
        self.status == LpStatus::Optimal
    }
}

/// Entering/leaving rule of the simplex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PivotRule {
    /// Largest reduced cost enters; ratio ties broken lexicographically on `B⁻¹`.
    #[default]
    DantzigLex,
    /// Lowest-index improving column enters; ratio ties go to the lowest basic index.
    Bland,
}

struct Tableau<T> {
    rule: PivotRule,
    rows: Vec<Vec<T>>,
    rhs: Vec<T>,
    /// Reduced costs `c_j - c_B·B⁻¹·A_j` over all columns.
    reduced: Vec<T>,
    /// Current objective value `c_B·x_B`.
    value: T,
    basis: Vec<usize>,
    /// Columns `0..structural` are the problem's variables; the rest are artificials.
    structural: usize,
    pivots: usize,
}

impl<T: LpScalar> Tableau<T>
where
    for<'a> &'a T: Add<&'a T, Output = T>
        + Sub<&'a T, Output = T>
        + Mul<&'a T, Output = T>
        + Div<&'a T, Output = T>,
{
    fn pivot(&mut self, pr: usize, pc: usize) {
        let width = self.rows[pr].len();
        let inv = &T::one() / &self.rows[pr][pc];
        let mut support = Vec::with_capacity(width);
        for j in 0..width {
            if self.rows[pr][j].negligible() {
                if !T::EXACT {
                    self.rows[pr][j] = T::zero();
                }
            } else {
                self.rows[pr][j] = &self.rows[pr][j] * &inv;
                support.push(j);
            }
        }
        self.rhs[pr] = &self.rhs[pr] * &inv;
        if !T::EXACT {
            self.rows[pr][pc] = T::one();
        }

        let pivot_row = std::mem::take(&mut self.rows[pr]);
        let pivot_rhs = self.rhs[pr].clone();
        for r in 0..self.rows.len() {
            if r == pr {
                continue;
            }
            let factor = self.rows[r][pc].clone();
            if factor.negligible() {
                continue;
            }
            let row = &mut self.rows[r];
            for &j in &support {
                row[j] = &row[j] - &(&factor * &pivot_row[j]);
            }
            if !T::EXACT {
                row[pc] = T::zero();
            }
            self.rhs[r] = &self.rhs[r] - &(&factor * &pivot_rhs);
        }
        let factor = self.reduced[pc].clone();
        if !factor.negligible() {
            for &j in &support {
                self.reduced[j] = &self.reduced[j] - &(&factor * &pivot_row[j]);
            }
            self.value = &self.value + &(&factor * &pivot_rhs);
        }
        if !T::EXACT {
            self.reduced[pc] = T::zero();
        }
        self.rows[pr] = pivot_row;
        self.basis[pr] = pc;
        self.pivots += 1;
    }

    fn entering(&self) -> Option<usize> {
        if self.rule == PivotRule::Bland {
            return (0..self.structural).find(|&j| self.reduced[j].positive());
        }
        let mut best: Option<usize> = None;
        for j in 0..self.structural {
            if self.reduced[j].positive() && best.is_none_or(|b| self.reduced[j] > self.reduced[b]) {
                best = Some(j);
            }
        }
        best
    }

    /// Minimum-ratio row; ties are broken lexicographically on the rows of
    /// `B⁻¹`, read from the artificial block.
    fn leaving(&self, pc: usize) -> Option<usize> {
        let mut best: Vec<usize> = Vec::new();
        let mut best_ratio: Option<T> = None;
        for r in 0..self.rows.len() {
            let a = &self.rows[r][pc];
            if !a.positive() {
                continue;
            }
            let ratio = &self.rhs[r] / a;
            match &best_ratio {
                Some(b) => {
                    let diff = &ratio - b;
                    if diff.negative() {
                        best.clear();
                        best.push(r);
                        best_ratio = Some(ratio);
                    } else if diff.negligible() {
                        best.push(r);
                    }
                }
                None => {
                    best.push(r);
                    best_ratio = Some(ratio);
                }
            }
        }
        let mut col = self.structural;
        while self.rule == PivotRule::DantzigLex && best.len() > 1 && col < self.rows[0].len() {
            let keys: Vec<T> = best
                .iter()
                .map(|&r| &self.rows[r][col] / &self.rows[r][pc])
                .collect();
            let mut min = keys[0].clone();
            for k in &keys[1..] {
                if (k - &min).negative() {
                    min = k.clone();
                }
            }
            best = best
                .into_iter()
                .zip(&keys)
                .filter(|(_, k)| (*k - &min).negligible())
                .map(|(r, _)| r)
                .collect();
            col += 1;
        }
        best.into_iter().min_by_key(|&r| self.basis[r])
    }

    /// Pivots to optimality. Returns `false` when unbounded.
    fn optimize(&mut self) -> Result<bool> {
        while let Some(pc) = self.entering() {
            let Some(pr) = self.leaving(pc) else {
                return Ok(false);
            };
            self.pivot(pr, pc);
            if !T::EXACT && self.pivots > FLOAT_MAX_PIVOTS {
                return Err(Error::LpStatus("not converging in floating point"));
            }
        }
        Ok(true)
    }
}

/// Solves `p` with a two-phase primal simplex.
pub fn lp_solve<T: LpScalar>(p: &LpProblem<T>) -> Result<LpSolution<T>>
where
    for<'a> &'a T: Add<&'a T, Output = T>
        + Sub<&'a T, Output = T>
        + Mul<&'a T, Output = T>
        + Div<&'a T, Output = T>,
{
    p.check_dimensions()?;
    guard::check("lp rows+cols", (p.num_rows() + p.num_vars()) as u128, guard::LP_SIZE)?;
    T::solve(p, PivotRule::default())
}

/// [`lp_solve`] with an explicit pivot rule.
pub fn lp_solve_with<T: LpScalar>(p: &LpProblem<T>, rule: PivotRule) -> Result<LpSolution<T>>
where
    for<'a> &'a T: Add<&'a T, Output = T>
        + Sub<&'a T, Output = T>
        + Mul<&'a T, Output = T>
        + Div<&'a T, Output = T>,
{
    p.check_dimensions()?;
    guard::check("lp rows+cols", (p.num_rows() + p.num_vars()) as u128, guard::LP_SIZE)?;
    T::solve(p, rule)
}

fn simplex<T: LpScalar>(p: &LpProblem<T>, rule: PivotRule) -> Result<LpSolution<T>>
where
    for<'a> &'a T: Add<&'a T, Output = T>
        + Sub<&'a T, Output = T>
        + Mul<&'a T, Output = T>
        + Div<&'a T, Output = T>,
{
    let rows = p.num_rows();
    let vars = p.num_vars();

    // Normalize to b >= 0 and append an artificial identity block.
    let mut sign = vec![false; rows];
    let mut tab_rows = Vec::with_capacity(rows);
    let mut rhs = Vec::with_capacity(rows);
    for (i, (row, b)) in p.constraints.iter().zip(&p.rhs).enumerate() {
        let flip = b.negative();
        sign[i] = flip;
        let mut r: Vec<T> = Vec::with_capacity(vars + rows);
        for a in row {
            r.push(if flip { -a.clone() } else { a.clone() });
        }
        for k in 0..rows {
            r.push(if k == i { T::one() } else { T::zero() });
        }
        tab_rows.push(r);
        rhs.push(if flip { -b.clone() } else { b.clone() });
    }

    // Phase I: maximize -(sum of artificials).
    let mut reduced = vec![T::zero(); vars + rows];
    for row in &tab_rows {
        for j in 0..vars {
            if !row[j].negligible() {
                reduced[j] = &reduced[j] + &row[j];
            }
        }
    }
    let value = rhs.iter().fold(T::zero(), |acc, b| &acc - b);
    let mut tab = Tableau {
        rule,
        rows: tab_rows,
        rhs,
        reduced,
        value,
        basis: (vars..vars + rows).collect(),
        structural: vars,
        pivots: 0,
    };
    tab.optimize()?;
    if tab.value.negative() {
        return Ok(LpSolution::without_optimum(LpStatus::Infeasible, tab.pivots));
    }

    // Pivot basic artificials out wherever the row still has a structural entry;
    // rows without one are linear combinations of the others and stay inert.
    for r in 0..rows {
        if tab.basis[r] >= vars {
            if let Some(j) = (0..vars).find(|&j| !tab.rows[r][j].negligible()) {
                tab.pivot(r, j);
            }
        }
    }

    // Phase II.
    let cost = |col: usize| -> T {
        if col < vars {
            p.objective[col].clone()
        } else {
            T::zero()
        }
    };
    let mut reduced = vec![T::zero(); vars + rows];
    for (j, slot) in reduced.iter_mut().enumerate() {
        let mut d = cost(j);
        for r in 0..rows {
            let cb = cost(tab.basis[r]);
            if !cb.negligible() && !tab.rows[r][j].negligible() {
                d = &d - &(&cb * &tab.rows[r][j]);
            }
        }
        *slot = d;
    }
    tab.reduced = reduced;
    tab.value = (0..rows).fold(T::zero(), |acc, r| &acc + &(&cost(tab.basis[r]) * &tab.rhs[r]));
    if !tab.optimize()? {
        return Ok(LpSolution::without_optimum(LpStatus::Unbounded, tab.pivots));
    }

    let mut primal = vec![T::zero(); vars];
    for r in 0..rows {
        if tab.basis[r] < vars {
            primal[tab.basis[r]] = tab.rhs[r].clone();
        }
    }
    // y = c_B·B⁻¹, read off the artificial block, then undo the row sign flips.
    let mut dual = vec![T::zero(); rows];
    for (i, y) in dual.iter_mut().enumerate() {
        let mut acc = T::zero();
        for r in 0..rows {
            let cb = cost(tab.basis[r]);
            if !cb.negligible() {
                acc = &acc + &(&cb * &tab.rows[r][vars + i]);
            }
        }
        *y = if sign[i] { -acc } else { acc };
    }
    let value = primal
        .iter()
        .zip(&p.objective)
        .fold(T::zero(), |acc, (x, c)| &acc + &(x * c));

    Ok(LpSolution {
        status: LpStatus::Optimal,
        value,
        primal,
        dual,
        pivots: tab.pivots,
    })
}

/// Re-checks an optimal solution against the problem data: primal feasibility,
/// dual feasibility `Aᵀ·y ≥ c`, and `c·x = b·y = value`.
pub fn lp_verify_certificate<T: LpScalar>(p: &LpProblem<T>, s: &LpSolution<T>) -> bool
where
    for<'a> &'a T: Add<&'a T, Output = T>
        + Sub<&'a T, Output = T>
        + Mul<&'a T, Output = T>
        + Div<&'a T, Output = T>,
{
    if s.status != LpStatus::Optimal
        || p.check_dimensions().is_err()
        || s.primal.len() != p.num_vars()
        || s.dual.len() != p.num_rows()
    {
        return false;
    }
    if s.primal.iter().any(|x| x.negative()) {
        return false;
    }
    let dot = |a: &[T], b: &[T]| a.iter().zip(b).fold(T::zero(), |acc, (x, y)| &acc + &(x * y));
    for (row, b) in p.constraints.iter().zip(&p.rhs) {
        if !(&dot(row, &s.primal) - b).negligible() {
            return false;
        }
    }
    for j in 0..p.num_vars() {
        let col = p
            .constraints
            .iter()
            .zip(&s.dual)
            .fold(T::zero(), |acc, (row, y)| &acc + &(&row[j] * y));
        if (&col - &p.objective[j]).negative() {
            return false;
        }
    }
    let primal_value = dot(&p.objective, &s.primal);
    let dual_value = dot(&p.rhs, &s.dual);
    (&primal_value - &dual_value).negligible() && (&primal_value - &s.value).negligible()
}

/// `log₂` of a positive rational, accurate for numbers far outside `f64` range.
pub fn log2_rational(r: &Rational) -> f64 {
    if !r.is_positive() {
        return if r.is_zero() {
            f64::NEG_INFINITY
        } else {
            f64::NAN
        };
    }
    log2_bigint(r.numer()) - log2_bigint(r.denom())
}

fn log2_bigint(v: &BigInt) -> f64 {
    let bits = v.bits();
    if bits <= 1000 {
        let f: f64 = num_traits::ToPrimitive::to_f64(v).unwrap_or(f64::INFINITY);
        return f.log2();
    }
    let shift = bits - 64;
    let top: BigInt = v >> shift;
    let f: f64 = num_traits::ToPrimitive::to_f64(&top).unwrap_or(f64::INFINITY);
    f.log2() + shift as f64
}

/// `p/q` with the denominator always written, e.g. `2/1`.
pub fn fmt_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn to_f64(r: &Rational) -> f64 {
    num_traits::ToPrimitive::to_f64(r).unwrap_or_else(|| log2_rational(r).exp2())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(v: i64) -> Rational {
        integer(v)
    }

    fn q(n: i64, d: i64) -> Rational {
        rational(n, d)
    }

    #[test]
    fn box_lp_in_slack_form() {
        // max x1 + x2, x1 + s1 = 1, x2 + s2 = 1
        let p = LpProblem::new(
            vec![r(1), r(1), r(0), r(0)],
            vec![vec![r(1), r(0), r(1), r(0)], vec![r(0), r(1), r(0), r(1)]],
            vec![r(1), r(1)],
        )
        .unwrap();
        let s = lp_solve(&p).unwrap();
        assert_eq!(s.status, LpStatus::Optimal);
        assert_eq!(s.value, r(2));
        assert!(lp_verify_certificate(&p, &s));
    }

    #[test]
    fn negative_rhs_is_infeasible() {
        let p = LpProblem::new(vec![r(1)], vec![vec![r(1)]], vec![r(-1)]).unwrap();
        assert_eq!(lp_solve(&p).unwrap().status, LpStatus::Infeasible);
    }

    #[test]
    fn unbounded_ray() {
        // max x1, x1 - x2 = 0
        let p = LpProblem::new(vec![r(1), r(0)], vec![vec![r(1), r(-1)]], vec![r(0)]).unwrap();
        assert_eq!(lp_solve(&p).unwrap().status, LpStatus::Unbounded);
    }

    #[test]
    fn single_fixed_variable_certificate() {
        let p = LpProblem::new(vec![r(1)], vec![vec![r(1)]], vec![r(3)]).unwrap();
        let hand = LpSolution {
            status: LpStatus::Optimal,
            value: r(3),
            primal: vec![r(3)],
            dual: vec![r(1)],
            pivots: 0,
        };
        assert!(lp_verify_certificate(&p, &hand));
        let mut wrong_dual = hand.clone();
        wrong_dual.dual = vec![r(2)];
        assert!(!lp_verify_certificate(&p, &wrong_dual));
    }

    #[test]
    fn perturbed_primal_is_rejected() {
        let p = LpProblem::new(
            vec![r(1), r(1), r(0), r(0)],
            vec![vec![r(1), r(0), r(1), r(0)], vec![r(0), r(1), r(0), r(1)]],
            vec![r(1), r(1)],
        )
        .unwrap();
        let mut s = lp_solve(&p).unwrap();
        s.primal[0] = &s.primal[0] + &q(1, 1_000_000_000);
        assert!(!lp_verify_certificate(&p, &s));
    }

    #[test]
    fn redundant_rows_are_tolerated() {
        // x1 + x2 = 1 stated twice, plus its double.
        let p = LpProblem::new(
            vec![r(2), r(1)],
            vec![vec![r(1), r(1)], vec![r(1), r(1)], vec![r(2), r(2)]],
            vec![r(1), r(1), r(2)],
        )
        .unwrap();
        let s = lp_solve(&p).unwrap();
        assert_eq!(s.value, r(2));
        assert!(lp_verify_certificate(&p, &s));
    }

    #[test]
    fn mismatched_dimensions() {
        assert!(LpProblem::new(vec![r(1)], vec![vec![r(1), r(2)]], vec![r(1)]).is_err());
        assert!(LpProblem::new(vec![r(1)], vec![vec![r(1)]], vec![]).is_err());
    }

    #[test]
    fn float_path_matches_exact_on_small_lp() {
        let p = LpProblem::new(
            vec![3.0, 2.0, 0.0, 0.0],
            vec![vec![1.0, 1.0, 1.0, 0.0], vec![1.0, 3.0, 0.0, 1.0]],
            vec![4.0, 6.0],
        )
        .unwrap();
        let s = lp_solve(&p).unwrap();
        assert!((s.value - 12.0).abs() < 1e-9);
        assert!(lp_verify_certificate(&p, &s));
    }

    #[test]
    fn rational_formatting_and_logs() {
        assert_eq!(fmt_rational(&r(2)), "2/1");
        assert_eq!(fmt_rational(&q(6, 4)), "3/2");
        assert!((log2_rational(&q(1, 8)) + 3.0).abs() < 1e-12);
        let huge = Rational::from_integer(BigInt::from(1) << 3000usize);
        assert!((log2_rational(&huge) - 3000.0).abs() < 1e-9);
    }
}
