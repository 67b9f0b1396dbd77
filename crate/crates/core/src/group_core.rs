//! The group `C_m^n`, its characters, and dense functions on it.
//!
//! Elements are ranked little-endian: `rank(x) = Σ x_i·m^i`. All dense tables
//! ([`GroupFunction`], [`Spectrum`]) are indexed by that rank.
//!
//! Characters are `χ_z(x) = ζ^{z·x}` with `ζ = exp(2πi/m)`. The forward
//! transform conjugates the character,
//! `f̂(z) = m^{-n} Σ_x f(x)·conj(χ_z(x))`, so that `f = Σ_z f̂(z)·χ_z` holds
//! exactly. For `m = 2` every character is `±1` and tables may hold exact
//! rationals; otherwise they hold `Complex64` with a per-table tolerance.

use std::f64::consts::PI;
use std::fmt;
use std::ops::Deref;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Signed, Zero};

use crate::ratlp::{to_f64, Rational};
use crate::{guard, Error, Result};

pub const DEFAULT_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GroupSpec {
    m: usize,
    n: usize,
    order: usize,
}

impl GroupSpec {
    pub fn new(m: usize, n: usize) -> Result<Self> {
        if m < 2 {
            return Err(Error::InvalidParameter(format!("modulus m = {m} must be at least 2")));
        }
        if n < 1 {
            return Err(Error::InvalidParameter("n must be at least 1".into()));
        }
        let order = (m as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
        guard::check("group order m^n", order, guard::GROUP_ORDER)?;
        Ok(Self {
            m,
            n,
            order: order as usize,
        })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `m^n`.
    pub fn order(&self) -> usize {
        self.order
    }

    /// Largest possible weight, `(m-1)·n`.
    pub fn max_weight(&self) -> usize {
        (self.m - 1) * self.n
    }

    pub fn element(&self, coords: Vec<usize>) -> Result<GroupElement> {
        if coords.len() != self.n {
            return Err(Error::InvalidParameter(format!(
                "element has {} coordinates, group has {}",
                coords.len(),
                self.n
            )));
        }
        if let Some(&bad) = coords.iter().find(|&&c| c >= self.m) {
            return Err(Error::InvalidParameter(format!(
                "coordinate {bad} not below modulus {}",
                self.m
            )));
        }
        Ok(GroupElement { coords })
    }

    pub fn zero(&self) -> GroupElement {
        GroupElement {
            coords: vec![0; self.n],
        }
    }

    pub fn rank(&self, x: &GroupElement) -> Result<usize> {
        self.validate(x)?;
        Ok(x.coords.iter().rev().fold(0, |acc, &c| acc * self.m + c))
    }

    pub fn unrank(&self, index: usize) -> Result<GroupElement> {
        self.check_index(index)?;
        Ok(GroupElement {
            coords: self.digits(index),
        })
    }

    pub fn check_index(&self, index: usize) -> Result<()> {
        if index >= self.order {
            return Err(Error::IndexOutOfRange {
                index,
                order: self.order,
            });
        }
        Ok(())
    }

    fn validate(&self, x: &GroupElement) -> Result<()> {
        if x.coords.len() != self.n || x.coords.iter().any(|&c| c >= self.m) {
            return Err(Error::InvalidParameter(format!(
                "element {x} is not in C_{}^{}",
                self.m, self.n
            )));
        }
        Ok(())
    }

    pub(crate) fn digits(&self, mut index: usize) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.n);
        for _ in 0..self.n {
            out.push(index % self.m);
            index /= self.m;
        }
        out
    }

    pub(crate) fn ensure_same(&self, other: &GroupSpec) -> Result<()> {
        if self != other {
            return Err(Error::SpecMismatch {
                left_m: self.m,
                left_n: self.n,
                right_m: other.m,
                right_n: other.n,
            });
        }
        Ok(())
    }

    // Index-level arithmetic. Callers guarantee indices are in range.

    pub fn weight_of(&self, index: usize) -> usize {
        if self.m == 2 {
            return index.count_ones() as usize;
        }
        let mut w = 0;
        let mut i = index;
        while i > 0 {
            w += i % self.m;
            i /= self.m;
        }
        w
    }

    pub fn add_index(&self, a: usize, b: usize) -> usize {
        if self.m == 2 {
            return a ^ b;
        }
        self.combine(a, b, |x, y| (x + y) % self.m)
    }

    pub fn sub_index(&self, a: usize, b: usize) -> usize {
        if self.m == 2 {
            return a ^ b;
        }
        self.combine(a, b, |x, y| (x + self.m - y) % self.m)
    }

    pub fn neg_index(&self, a: usize) -> usize {
        self.sub_index(0, a)
    }

    fn combine(&self, mut a: usize, mut b: usize, op: impl Fn(usize, usize) -> usize) -> usize {
        let mut out = 0;
        let mut place = 1;
        for _ in 0..self.n {
            out += op(a % self.m, b % self.m) * place;
            a /= self.m;
            b /= self.m;
            place *= self.m;
        }
        out
    }

    /// `z·x mod m` on ranks.
    pub fn dot_index(&self, z: usize, x: usize) -> usize {
        if self.m == 2 {
            return ((z & x).count_ones() & 1) as usize;
        }
        let (mut z, mut x) = (z, x);
        let mut acc = 0;
        for _ in 0..self.n {
            acc += (z % self.m) * (x % self.m);
            z /= self.m;
            x /= self.m;
        }
        acc % self.m
    }

    pub fn character_index(&self, z: usize, x: usize) -> RootOfUnity {
        RootOfUnity {
            exponent: self.dot_index(z, x),
            order: self.m,
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "C_{}^{}", self.m, self.n)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupElement {
    coords: Vec<usize>,
}

impl GroupElement {
    pub fn coords(&self) -> &[usize] {
        &self.coords
    }

    /// Coordinate sum taken in ℕ.
    pub fn weight(&self) -> usize {
        self.coords.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

pub fn weight(x: &GroupElement) -> usize {
    x.weight()
}

/// `ζ_m^exponent`, kept symbolic so `m = 2` values stay exact.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RootOfUnity {
    pub exponent: usize,
    pub order: usize,
}

impl RootOfUnity {
    pub fn to_complex(self) -> Complex64 {
        root_of_unity(self.exponent, self.order)
    }

    /// `±1` when the value is real.
    pub fn sign(self) -> Option<i8> {
        if self.exponent == 0 {
            Some(1)
        } else if 2 * self.exponent == self.order {
            Some(-1)
        } else {
            None
        }
    }
}

/// Exact values at multiples of a quarter turn, so `ζ_4 = i` on the nose.
fn root_of_unity(exponent: usize, order: usize) -> Complex64 {
    let e = exponent % order;
    if (4 * e).is_multiple_of(order) {
        return match 4 * e / order {
            0 => Complex64::new(1.0, 0.0),
            1 => Complex64::new(0.0, 1.0),
            2 => Complex64::new(-1.0, 0.0),
            _ => Complex64::new(0.0, -1.0),
        };
    }
    Complex64::from_polar(1.0, 2.0 * PI * e as f64 / order as f64)
}

pub fn char_eval(spec: &GroupSpec, z: &GroupElement, x: &GroupElement) -> Result<RootOfUnity> {
    let zi = spec.rank(z)?;
    let xi = spec.rank(x)?;
    Ok(spec.character_index(zi, xi))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ScalarKind {
    /// Exact rationals; only possible when every character is real (`m = 2`).
    ExactRational,
    ComplexFloat { tolerance: f64 },
}

/// A single table entry.
#[derive(Debug, Clone, PartialEq)]
pub enum Scalar {
    Exact(Rational),
    Complex(Complex64),
}

impl Scalar {
    pub fn to_complex(&self) -> Complex64 {
        match self {
            Scalar::Exact(r) => Complex64::new(to_f64(r), 0.0),
            Scalar::Complex(c) => *c,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Values {
    Exact(Vec<Rational>),
    Complex {
        values: Vec<Complex64>,
        tolerance: f64,
    },
}

impl Values {
    pub fn len(&self) -> usize {
        match self {
            Values::Exact(v) => v.len(),
            Values::Complex { values, .. } => values.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Dense table over the group. [`GroupFunction`] and [`Spectrum`] wrap it.
#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    spec: GroupSpec,
    values: Values,
}

impl Table {
    fn new(spec: GroupSpec, values: Values) -> Result<Self> {
        if values.len() != spec.order() {
            return Err(Error::InvalidParameter(format!(
                "table has {} entries, group order is {}",
                values.len(),
                spec.order()
            )));
        }
        match &values {
            Values::Exact(_) if spec.m() > 2 => {
                return Err(Error::Unsupported(format!(
                    "exact rational tables need real characters (m <= 2), got m = {}",
                    spec.m()
                )))
            }
            Values::Complex { tolerance, .. } if tolerance.is_nan() || *tolerance < 0.0 => {
                return Err(Error::InvalidParameter("tolerance must be nonnegative".into()))
            }
            _ => {}
        }
        Ok(Self { spec, values })
    }

    pub fn spec(&self) -> &GroupSpec {
        &self.spec
    }

    pub fn values(&self) -> &Values {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn kind(&self) -> ScalarKind {
        match &self.values {
            Values::Exact(_) => ScalarKind::ExactRational,
            Values::Complex { tolerance, .. } => ScalarKind::ComplexFloat {
                tolerance: *tolerance,
            },
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self.values, Values::Exact(_))
    }

    /// Zero threshold: exact tables use 0, float tables their tolerance.
    pub fn tolerance(&self) -> f64 {
        match &self.values {
            Values::Exact(_) => 0.0,
            Values::Complex { tolerance, .. } => *tolerance,
        }
    }

    pub fn get(&self, index: usize) -> Scalar {
        match &self.values {
            Values::Exact(v) => Scalar::Exact(v[index].clone()),
            Values::Complex { values, .. } => Scalar::Complex(values[index]),
        }
    }

    pub fn exact(&self) -> Option<&[Rational]> {
        match &self.values {
            Values::Exact(v) => Some(v),
            Values::Complex { .. } => None,
        }
    }

    pub fn complex_at(&self, index: usize) -> Complex64 {
        match &self.values {
            Values::Exact(v) => Complex64::new(to_f64(&v[index]), 0.0),
            Values::Complex { values, .. } => values[index],
        }
    }

    pub fn to_complex_vec(&self) -> Vec<Complex64> {
        (0..self.len()).map(|i| self.complex_at(i)).collect()
    }

    pub fn abs_at(&self, index: usize) -> f64 {
        match &self.values {
            Values::Exact(v) => to_f64(&v[index].abs()),
            Values::Complex { values, .. } => values[index].norm(),
        }
    }

    pub fn is_nonzero_at(&self, index: usize) -> bool {
        match &self.values {
            Values::Exact(v) => !v[index].is_zero(),
            Values::Complex { values, tolerance } => values[index].norm() > *tolerance,
        }
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.is_nonzero_at(i)).collect()
    }

    /// Same entries as complex floats.
    pub fn as_complex(&self, tolerance: f64) -> Table {
        Table {
            spec: self.spec,
            values: Values::Complex {
                values: self.to_complex_vec(),
                tolerance,
            },
        }
    }
}

macro_rules! table_newtype {
    ($name:ident) => {
        impl Deref for $name {
            type Target = Table;

            fn deref(&self) -> &Table {
                &self.0
            }
        }

        impl $name {
            pub fn exact(spec: GroupSpec, values: Vec<Rational>) -> Result<Self> {
                Table::new(spec, Values::Exact(values)).map(Self)
            }

            pub fn complex(spec: GroupSpec, values: Vec<Complex64>, tolerance: f64) -> Result<Self> {
                Table::new(spec, Values::Complex { values, tolerance }).map(Self)
            }

            pub fn from_values(spec: GroupSpec, values: Values) -> Result<Self> {
                Table::new(spec, values).map(Self)
            }

            pub fn from_fn_exact(spec: GroupSpec, f: impl Fn(usize) -> Rational) -> Result<Self> {
                Self::exact(spec, (0..spec.order()).map(f).collect())
            }

            pub fn from_fn_complex(
                spec: GroupSpec,
                tolerance: f64,
                f: impl Fn(usize) -> Complex64,
            ) -> Result<Self> {
                Self::complex(spec, (0..spec.order()).map(f).collect(), tolerance)
            }

            pub fn table(&self) -> &Table {
                &self.0
            }

            pub fn into_values(self) -> Values {
                self.0.values
            }

            pub fn to_complex_kind(&self, tolerance: f64) -> Self {
                Self(self.0.as_complex(tolerance))
            }
        }
    };
}

/// A function `C_m^n → ℂ` (or `→ ℚ` when exact).
#[derive(Debug, Clone, PartialEq)]
pub struct GroupFunction(Table);

/// Fourier coefficients `f̂(z)`, indexed by the rank of `z`.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum(Table);

table_newtype!(GroupFunction);
table_newtype!(Spectrum);

impl GroupFunction {
    /// `χ_z` as a table; exact when `m = 2`.
    pub fn character(spec: GroupSpec, z: usize) -> Result<Self> {
        spec.check_index(z)?;
        if spec.m() == 2 {
            Self::from_fn_exact(spec, |x| {
                if spec.dot_index(z, x) == 0 {
                    Rational::one()
                } else {
                    -Rational::one()
                }
            })
        } else {
            Self::from_fn_complex(spec, DEFAULT_TOLERANCE, |x| {
                spec.character_index(z, x).to_complex()
            })
        }
    }

    /// `1` at `index`, `0` elsewhere.
    pub fn indicator(spec: GroupSpec, index: usize, kind: ScalarKind) -> Result<Self> {
        spec.check_index(index)?;
        match kind {
            ScalarKind::ExactRational => Self::from_fn_exact(spec, |x| {
                if x == index {
                    Rational::one()
                } else {
                    Rational::zero()
                }
            }),
            ScalarKind::ComplexFloat { tolerance } => Self::from_fn_complex(spec, tolerance, |x| {
                Complex64::new(if x == index { 1.0 } else { 0.0 }, 0.0)
            }),
        }
    }

    pub fn constant_one(spec: GroupSpec, kind: ScalarKind) -> Result<Self> {
        match kind {
            ScalarKind::ExactRational => Self::from_fn_exact(spec, |_| Rational::one()),
            ScalarKind::ComplexFloat { tolerance } => {
                Self::from_fn_complex(spec, tolerance, |_| Complex64::new(1.0, 0.0))
            }
        }
    }
}

/// Applies one length-`m` DFT along every coordinate axis in turn.
/// `sign = -1` conjugates the kernel (forward transform).
fn radix_passes_complex(spec: &GroupSpec, data: &mut [Complex64], sign: i64) {
    let m = spec.m();
    let roots: Vec<Complex64> = (0..m)
        .map(|t| {
            let e = if sign < 0 { (m - t) % m } else { t };
            root_of_unity(e, m)
        })
        .collect();
    let mut buf = vec![Complex64::zero(); m];
    let mut stride = 1;
    for _ in 0..spec.n() {
        let block = stride * m;
        for base in (0..data.len()).step_by(block) {
            for offset in 0..stride {
                let start = base + offset;
                for (j, slot) in buf.iter_mut().enumerate() {
                    let mut acc = Complex64::zero();
                    for k in 0..m {
                        acc += data[start + k * stride] * roots[(j * k) % m];
                    }
                    *slot = acc;
                }
                for (k, v) in buf.iter().enumerate() {
                    data[start + k * stride] = *v;
                }
            }
        }
        stride = block;
    }
}

/// Walsh–Hadamard butterflies over exact rationals.
fn hadamard_passes_exact(data: &mut [Rational]) {
    let mut h = 1;
    while h < data.len() {
        for base in (0..data.len()).step_by(2 * h) {
            for i in base..base + h {
                let b = std::mem::take(&mut data[i + h]);
                let a = std::mem::take(&mut data[i]);
                data[i + h] = &a - &b;
                data[i] = a + b;
            }
        }
        h *= 2;
    }
}

pub fn fourier_forward(f: &GroupFunction) -> Spectrum {
    let spec = *f.spec();
    let values = match f.values() {
        Values::Exact(v) => {
            let mut data = v.clone();
            hadamard_passes_exact(&mut data);
            let scale = Rational::from_integer(BigInt::from(spec.order()));
            Values::Exact(data.into_iter().map(|x| x / &scale).collect())
        }
        Values::Complex { values, tolerance } => {
            let mut data = values.clone();
            radix_passes_complex(&spec, &mut data, -1);
            let scale = 1.0 / spec.order() as f64;
            Values::Complex {
                values: data.into_iter().map(|x| x * scale).collect(),
                tolerance: *tolerance,
            }
        }
    };
    Spectrum(Table { spec, values })
}

pub fn fourier_inverse(s: &Spectrum) -> GroupFunction {
    let spec = *s.spec();
    let values = match s.values() {
        Values::Exact(v) => {
            let mut data = v.clone();
            hadamard_passes_exact(&mut data);
            Values::Exact(data)
        }
        Values::Complex { values, tolerance } => {
            let mut data = values.clone();
            radix_passes_complex(&spec, &mut data, 1);
            Values::Complex {
                values: data,
                tolerance: *tolerance,
            }
        }
    };
    GroupFunction(Table { spec, values })
}

/// Largest `weight(z)` over the Fourier support; `None` for the zero function.
///
/// Under `C_m ↪ ℂ` (generator to `ζ`) the character `χ_z` is the monomial
/// `∏ t_i^{z_i}`, so this is the degree of the reduced interpolating polynomial.
pub fn poly_degree(f: &GroupFunction) -> Option<usize> {
    let spectrum = fourier_forward(f);
    spectrum_degree(&spectrum)
}

pub fn spectrum_degree(s: &Spectrum) -> Option<usize> {
    let spec = s.spec();
    s.support().into_iter().map(|z| spec.weight_of(z)).max()
}

/// `|U(f)|`, the number of points where `f` is nonzero.
pub fn nonzero_count(f: &GroupFunction) -> usize {
    (0..f.len()).filter(|&i| f.is_nonzero_at(i)).count()
}

/// `(m^{-n} Σ |f(x)|^p)^{1/p}`, or `max |f(x)|` for `p = ∞`.
pub fn lp_norm(f: &GroupFunction, p: f64) -> Result<f64> {
    if p.is_nan() || p < 1.0 {
        return Err(Error::InvalidParameter(format!("norm exponent p = {p} must be >= 1")));
    }
    let abs = (0..f.len()).map(|i| f.abs_at(i));
    if p.is_infinite() {
        return Ok(abs.fold(0.0, f64::max));
    }
    let mean = abs.map(|a| a.powf(p)).sum::<f64>() / f.len() as f64;
    Ok(mean.powf(1.0 / p))
}

/// `m^{-n} Σ_x f(x)·conj(g(x))`.
pub fn inner_product(f: &GroupFunction, g: &GroupFunction) -> Result<Complex64> {
    f.spec().ensure_same(g.spec())?;
    let sum: Complex64 = (0..f.len())
        .map(|i| f.complex_at(i) * g.complex_at(i).conj())
        .sum();
    Ok(sum / f.len() as f64)
}

pub fn binary_entropy(p: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidParameter(format!("entropy argument {p} not in [0,1]")));
    }
    let term = |q: f64| if q <= 0.0 { 0.0 } else { -q * q.log2() };
    Ok(term(p) + term(1.0 - p))
}

/// `m^a` as an exact integer.
pub fn pow_big(m: usize, a: usize) -> BigInt {
    num_traits::pow(BigInt::from(m), a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratlp::{integer, rational};

    fn spec(m: usize, n: usize) -> GroupSpec {
        GroupSpec::new(m, n).unwrap()
    }

    #[test]
    fn rank_examples() {
        let s = spec(2, 3);
        assert_eq!(s.rank(&s.element(vec![1, 0, 0]).unwrap()).unwrap(), 1);
        let s = spec(3, 2);
        assert_eq!(s.rank(&s.element(vec![2, 1]).unwrap()).unwrap(), 5);
        assert!(s.unrank(0).unwrap().is_zero());
        assert!(matches!(s.unrank(9), Err(Error::IndexOutOfRange { .. })));
        for i in 0..9 {
            assert_eq!(s.rank(&s.unrank(i).unwrap()).unwrap(), i);
        }
    }

    #[test]
    fn spec_guards() {
        assert!(GroupSpec::new(1, 3).is_err());
        assert!(GroupSpec::new(2, 0).is_err());
        assert!(GroupSpec::new(2, 26).is_ok());
        assert!(matches!(GroupSpec::new(2, 27), Err(Error::GuardExceeded { .. })));
        assert!(spec(3, 2).element(vec![3, 0]).is_err());
        assert!(spec(3, 2).element(vec![0]).is_err());
    }

    #[test]
    fn weight_examples() {
        let s = spec(2, 4);
        assert_eq!(s.element(vec![0, 1, 1, 0]).unwrap().weight(), 2);
        let s3 = spec(3, 3);
        let x = s3.element(vec![2, 2, 0]).unwrap();
        assert_eq!(weight(&x), 4);
        assert_eq!(s3.weight_of(s3.rank(&x).unwrap()), 4);
        assert_eq!(s3.zero().weight(), 0);
    }

    #[test]
    fn character_examples() {
        let s = spec(2, 2);
        let z = s.element(vec![1, 1]).unwrap();
        let x = s.element(vec![1, 0]).unwrap();
        assert_eq!(char_eval(&s, &z, &x).unwrap().sign(), Some(-1));
        let s4 = spec(4, 1);
        let one = s4.element(vec![1]).unwrap();
        assert_eq!(char_eval(&s4, &one, &one).unwrap().to_complex(), Complex64::new(0.0, 1.0));
        let s3 = spec(3, 2);
        for x in 0..9 {
            assert_eq!(s3.character_index(0, x).to_complex(), Complex64::new(1.0, 0.0));
        }
        let foreign = spec(2, 3).element(vec![1, 0, 0]).unwrap();
        assert!(char_eval(&s3, &foreign, &x).is_err());
    }

    #[test]
    fn transform_of_point_mass() {
        let s = spec(2, 1);
        let f = GroupFunction::exact(s, vec![integer(1), integer(0)]).unwrap();
        let fh = fourier_forward(&f);
        assert_eq!(fh.exact().unwrap(), &[rational(1, 2), rational(1, 2)]);
    }

    #[test]
    fn character_transforms_to_indicator() {
        for (m, n) in [(2, 3), (3, 2), (4, 2)] {
            let s = spec(m, n);
            for z in 0..s.order() {
                let fh = fourier_forward(&GroupFunction::character(s, z).unwrap());
                for w in 0..s.order() {
                    let expect = if w == z { 1.0 } else { 0.0 };
                    assert!((fh.complex_at(w) - Complex64::new(expect, 0.0)).norm() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn inverse_of_delta_at_zero_is_constant() {
        let s = spec(3, 2);
        let delta = Spectrum::from_fn_complex(s, DEFAULT_TOLERANCE, |z| {
            Complex64::new(if z == 0 { 1.0 } else { 0.0 }, 0.0)
        })
        .unwrap();
        let f = fourier_inverse(&delta);
        for x in 0..9 {
            assert!((f.complex_at(x) - Complex64::new(1.0, 0.0)).norm() < 1e-12);
        }
    }

    #[test]
    fn degree_examples() {
        let s = spec(2, 3);
        let one = GroupFunction::constant_one(s, ScalarKind::ExactRational).unwrap();
        assert_eq!(poly_degree(&one), Some(0));
        // (-1)^{x_1} is the character of z = e_1
        assert_eq!(poly_degree(&GroupFunction::character(s, 1).unwrap()), Some(1));
        let s3 = spec(3, 2);
        let z = s3.rank(&s3.element(vec![2, 1]).unwrap()).unwrap();
        assert_eq!(poly_degree(&GroupFunction::character(s3, z).unwrap()), Some(3));
        let zero = GroupFunction::exact(s, vec![integer(0); 8]).unwrap();
        assert_eq!(poly_degree(&zero), None);
    }

    #[test]
    fn nonzero_examples() {
        let s = spec(2, 2);
        assert_eq!(nonzero_count(&GroupFunction::exact(s, vec![integer(0); 4]).unwrap()), 0);
        assert_eq!(nonzero_count(&GroupFunction::character(s, 3).unwrap()), 4);
        // (1 + χ_{10})/2 with 10 = first coordinate = rank 1
        let chi = GroupFunction::character(s, 1).unwrap();
        let half = GroupFunction::from_fn_exact(s, |x| {
            (integer(1) + chi.exact().unwrap()[x].clone()) / integer(2)
        })
        .unwrap();
        assert_eq!(nonzero_count(&half), 2);
    }

    #[test]
    fn norm_examples() {
        let s = spec(2, 1);
        let one = GroupFunction::constant_one(s, ScalarKind::ExactRational).unwrap();
        for p in [1.0, 2.0, 3.5, f64::INFINITY] {
            assert!((lp_norm(&one, p).unwrap() - 1.0).abs() < 1e-15);
        }
        let f = GroupFunction::exact(s, vec![integer(2), integer(0)]).unwrap();
        assert!((lp_norm(&f, 1.0).unwrap() - 1.0).abs() < 1e-15);
        assert!(lp_norm(&f, 0.5).is_err());
    }

    #[test]
    fn entropy_examples() {
        assert_eq!(binary_entropy(0.5).unwrap(), 1.0);
        assert_eq!(binary_entropy(0.0).unwrap(), 0.0);
        assert_eq!(binary_entropy(1.0).unwrap(), 0.0);
        assert!((binary_entropy(0.25).unwrap() - 0.8113).abs() < 1e-4);
        assert!(binary_entropy(1.5).is_err());
    }

    #[test]
    fn exact_tables_need_real_characters() {
        let s = spec(3, 1);
        assert!(matches!(
            GroupFunction::exact(s, vec![integer(0); 3]),
            Err(Error::Unsupported(_))
        ));
        assert!(GroupFunction::exact(spec(2, 2), vec![integer(0); 3]).is_err());
    }
}
