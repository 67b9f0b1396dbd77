//! The two sides of Bochner's theorem on `C_m^n`.
//!
//! [`psd_via_fourier`] reads positivity off the spectrum; [`psd_direct`] builds
//! the full matrix `M[g,h] = f(g - h)` and tests it. Since every finite Gram
//! submatrix is a principal submatrix of `M`, testing `M` itself covers the
//! "any k, any g₁…g_k" quantifier.

use std::fmt;

use nalgebra::{DMatrix, SymmetricEigen};
use num_complex::Complex64;
use num_traits::{One, Signed, Zero};

use crate::group_core::{fourier_forward, GroupFunction, Values};
use crate::ratlp::{fmt_rational, Rational};
use crate::{guard, Result};

#[derive(Debug, Clone, PartialEq)]
pub enum PsdWitness {
    /// A Fourier coefficient with negative real part.
    NegativeCoefficient { z: usize, value: Complex64 },
    /// Exact negative coefficient (`m = 2`).
    NegativeExactCoefficient { z: usize, value: Rational },
    NonRealCoefficient { z: usize, value: Complex64 },
    /// `v` with `v*·M·v` outside `ℝ≥0`.
    Vector { v: Vec<Complex64>, form: Complex64 },
    ExactVector { v: Vec<Rational>, form: Rational },
}

impl fmt::Display for PsdWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PsdWitness::NegativeCoefficient { z, value } => {
                write!(f, "Fourier coefficient at z={z} is {value}")
            }
            PsdWitness::NegativeExactCoefficient { z, value } => {
                write!(f, "Fourier coefficient at z={z} is {}", fmt_rational(value))
            }
            PsdWitness::NonRealCoefficient { z, value } => {
                write!(f, "Fourier coefficient at z={z} is not real: {value}")
            }
            PsdWitness::Vector { form, .. } => write!(f, "vector with v*Mv = {form}"),
            PsdWitness::ExactVector { form, .. } => {
                write!(f, "vector with v*Mv = {}", fmt_rational(form))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PsdVerdict {
    pub normalized: bool,
    pub psd: bool,
    /// Present whenever `psd` is false.
    pub witness: Option<PsdWitness>,
}

pub fn psd_via_fourier(f: &GroupFunction) -> PsdVerdict {
    let spectrum = fourier_forward(f);
    match spectrum.values() {
        Values::Exact(coeffs) => {
            let sum: Rational = coeffs.iter().sum();
            let normalized = sum.is_one();
            let worst = coeffs
                .iter()
                .enumerate()
                .filter(|(_, c)| c.is_negative())
                .min_by(|a, b| a.1.cmp(b.1));
            PsdVerdict {
                normalized,
                psd: worst.is_none(),
                witness: worst.map(|(z, c)| PsdWitness::NegativeExactCoefficient {
                    z,
                    value: c.clone(),
                }),
            }
        }
        Values::Complex { values, tolerance } => {
            let tol = *tolerance;
            let sum: Complex64 = values.iter().sum();
            let normalized = (sum - Complex64::new(1.0, 0.0)).norm() <= tol;
            let most_negative = values
                .iter()
                .enumerate()
                .filter(|(_, c)| c.re < -tol)
                .min_by(|a, b| a.1.re.total_cmp(&b.1.re));
            let witness = match most_negative {
                Some((z, c)) => Some(PsdWitness::NegativeCoefficient { z, value: *c }),
                None => values
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| c.im.abs() > tol)
                    .max_by(|a, b| a.1.im.abs().total_cmp(&b.1.im.abs()))
                    .map(|(z, c)| PsdWitness::NonRealCoefficient { z, value: *c }),
            };
            PsdVerdict {
                normalized,
                psd: witness.is_none(),
                witness,
            }
        }
    }
}

/// Tests `M = (f(g - h))_{g,h}` for positive semidefiniteness directly.
///
/// Exact tables use symmetric Gaussian elimination over ℚ; complex tables use
/// a Hermitian eigensolver with the relative margin `λ_min ≥ -tol·‖M‖₂`.
pub fn psd_direct(f: &GroupFunction) -> Result<PsdVerdict> {
    let spec = *f.spec();
    let order = spec.order();
    guard::check("dense Gram matrix order", order as u128, guard::DENSE_GRAM)?;
    let entry = |g: usize, h: usize| spec.sub_index(g, h);
    Ok(match f.values() {
        Values::Exact(v) => {
            let m: Vec<Vec<Rational>> = (0..order)
                .map(|g| (0..order).map(|h| v[entry(g, h)].clone()).collect())
                .collect();
            let normalized = v[0].is_one();
            let witness = exact_psd_witness(&m);
            PsdVerdict {
                normalized,
                psd: witness.is_none(),
                witness,
            }
        }
        Values::Complex { values, tolerance } => {
            let m = DMatrix::from_fn(order, order, |g, h| values[entry(g, h)]);
            let normalized = (values[0] - Complex64::new(1.0, 0.0)).norm() <= *tolerance;
            let witness = float_psd_witness(&m, *tolerance);
            PsdVerdict {
                normalized,
                psd: witness.is_none(),
                witness,
            }
        }
    })
}

/// `None` when the symmetric rational matrix is PSD, else a vector with
/// negative quadratic form.
///
/// Keeps `A = T·M·Tᵀ` throughout, so a bad diagonal entry or 2×2 minor of the
/// running Schur complement maps back to a witness through the rows of `T`.
#[allow(clippy::needless_range_loop)]
fn exact_psd_witness(m: &[Vec<Rational>]) -> Option<PsdWitness> {
    let size = m.len();
    let mut a: Vec<Vec<Rational>> = m.to_vec();
    let mut t: Vec<Vec<Rational>> = (0..size)
        .map(|i| {
            (0..size)
                .map(|j| if i == j { Rational::one() } else { Rational::zero() })
                .collect()
        })
        .collect();

    for k in 0..size {
        let pivot = a[k][k].clone();
        if pivot.is_negative() {
            return Some(exact_vector_witness(m, t[k].clone()));
        }
        if pivot.is_zero() {
            if let Some(j) = (k + 1..size).find(|&j| !a[k][j].is_zero()) {
                // u = α·e_k + e_j gives uᵀAu = 2α·A_kj + A_jj; pick α to make it ≤ -1.
                let two = Rational::from_integer(2.into());
                let alpha = -(a[j][j].abs() + Rational::one()) / (two * &a[k][j]);
                let v: Vec<Rational> = (0..size).map(|c| &alpha * &t[k][c] + &t[j][c]).collect();
                return Some(exact_vector_witness(m, v));
            }
            continue;
        }
        for i in k + 1..size {
            if a[i][k].is_zero() {
                continue;
            }
            let factor = &a[i][k] / &pivot;
            for j in k..size {
                let delta = &factor * &a[k][j];
                a[i][j] -= delta;
            }
            for c in 0..size {
                let delta = &factor * &t[k][c];
                t[i][c] -= delta;
            }
        }
        // The mirrored column operations only touch row k.
        for j in k + 1..size {
            a[k][j] = Rational::zero();
        }
    }
    None
}

fn exact_vector_witness(m: &[Vec<Rational>], v: Vec<Rational>) -> PsdWitness {
    let mut form = Rational::zero();
    for (i, row) in m.iter().enumerate() {
        if v[i].is_zero() {
            continue;
        }
        let mv: Rational = row.iter().zip(&v).map(|(a, b)| a * b).sum();
        form += &v[i] * mv;
    }
    PsdWitness::ExactVector { v, form }
}

fn float_psd_witness(m: &DMatrix<Complex64>, tol: f64) -> Option<PsdWitness> {
    let size = m.nrows();
    let scale = m.iter().map(|c| c.norm()).fold(0.0, f64::max).max(1.0);
    let unit = |i: usize| {
        let mut v = vec![Complex64::zero(); size];
        v[i] = Complex64::new(1.0, 0.0);
        v
    };
    for g in 0..size {
        if m[(g, g)].im.abs() > tol * scale {
            return Some(float_vector_witness(m, unit(g)));
        }
        for h in g + 1..size {
            let skew = (m[(g, h)] - m[(h, g)].conj()) / 2.0;
            if skew.norm() > tol * scale {
                // v = e_g + c·e_h with c·skew = i·|skew| makes Im(v*Mv) nonzero.
                let c = Complex64::new(0.0, 1.0) * skew.conj() / skew.norm();
                let mut v = unit(g);
                v[h] = c.conj();
                return Some(float_vector_witness(m, v));
            }
        }
    }
    let hermitian = (m + m.adjoint()) * Complex64::new(0.5, 0.0);
    let eig = SymmetricEigen::new(hermitian);
    let norm = eig.eigenvalues.iter().map(|l| l.abs()).fold(0.0, f64::max);
    let (idx, lmin) = eig
        .eigenvalues
        .iter()
        .enumerate()
        .min_by(|a, b| a.1.total_cmp(b.1))
        .map(|(i, l)| (i, *l))?;
    if lmin >= -tol * norm {
        return None;
    }
    let v: Vec<Complex64> = eig.eigenvectors.column(idx).iter().copied().collect();
    Some(float_vector_witness(m, v))
}

fn float_vector_witness(m: &DMatrix<Complex64>, v: Vec<Complex64>) -> PsdWitness {
    let size = v.len();
    let mut form = Complex64::zero();
    for g in 0..size {
        for h in 0..size {
            form += v[g].conj() * m[(g, h)] * v[h];
        }
    }
    PsdWitness::Vector { v, form }
}
