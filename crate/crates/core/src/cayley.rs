//! Weight-band Cayley graphs on `C_m^n`.
//!
//! A [`CayleySpec`] connects `x` and `y` when `weight(x - y)` or
//! `weight(y - x)` lies in `[t_lo, t_hi]`. The family `H_m^n(d)` is the upper
//! tail `[d, (m-1)n]` (literal reading) or `[d+1, (m-1)n]` (strict reading);
//! complements and the k-wise LP's constraint sets are lower bands.

use std::fmt;

use crate::group_core::{GroupElement, GroupSpec};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Convention {
    /// Edges at difference weight `≥ d`.
    Literal(usize),
    /// Edges at difference weight `≥ d + 1`.
    Strict(usize),
    Custom,
}

impl Convention {
    pub fn name(&self) -> &'static str {
        match self {
            Convention::Literal(_) => "literal",
            Convention::Strict(_) => "strict",
            Convention::Custom => "custom",
        }
    }

    pub fn d(&self) -> Option<usize> {
        match *self {
            Convention::Literal(d) | Convention::Strict(d) => Some(d),
            Convention::Custom => None,
        }
    }
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Convention::Literal(d) => write!(f, "literal(d={d})"),
            Convention::Strict(d) => write!(f, "strict(d={d})"),
            Convention::Custom => f.write_str("custom"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CayleySpec {
    group: GroupSpec,
    t_lo: usize,
    t_hi: usize,
    convention: Convention,
}

impl CayleySpec {
    /// Band `[t_lo, t_hi]`; `t_lo = t_hi + 1` is the empty graph.
    pub fn band(group: GroupSpec, t_lo: usize, t_hi: usize) -> Result<Self> {
        Self::with_convention(group, t_lo, t_hi, Convention::Custom)
    }

    fn with_convention(
        group: GroupSpec,
        t_lo: usize,
        t_hi: usize,
        convention: Convention,
    ) -> Result<Self> {
        if t_lo < 1 {
            return Err(Error::InvalidParameter(
                "t_lo must be at least 1 (the zero element is never connected)".into(),
            ));
        }
        if t_hi > group.max_weight() {
            return Err(Error::InvalidParameter(format!(
                "t_hi = {t_hi} exceeds the maximum weight {}",
                group.max_weight()
            )));
        }
        if t_lo > t_hi + 1 {
            return Err(Error::InvalidParameter(format!(
                "band [{t_lo}, {t_hi}] is inverted beyond the empty graph"
            )));
        }
        Ok(Self {
            group,
            t_lo,
            t_hi,
            convention,
        })
    }

    /// `H_m^n(d)` under the chosen reading of the threshold.
    pub fn from_paper_params(m: usize, n: usize, d: usize, convention: ConventionKind) -> Result<Self> {
        let group = GroupSpec::new(m, n)?;
        if d < 1 || d > group.max_weight() {
            return Err(Error::InvalidParameter(format!(
                "d = {d} outside [1, {}]",
                group.max_weight()
            )));
        }
        let (t_lo, tag) = match convention {
            ConventionKind::Literal => (d, Convention::Literal(d)),
            ConventionKind::Strict => (d + 1, Convention::Strict(d)),
        };
        Self::with_convention(group, t_lo, group.max_weight(), tag)
    }

    pub fn group(&self) -> &GroupSpec {
        &self.group
    }

    pub fn t_lo(&self) -> usize {
        self.t_lo
    }

    pub fn t_hi(&self) -> usize {
        self.t_hi
    }

    pub fn convention(&self) -> Convention {
        self.convention
    }

    pub fn is_empty_graph(&self) -> bool {
        self.t_lo > self.t_hi
    }

    /// Whether the band reaches the maximum weight.
    pub fn is_upper_tail(&self) -> bool {
        self.t_hi == self.group.max_weight()
    }

    pub fn in_band(&self, weight: usize) -> bool {
        self.t_lo <= weight && weight <= self.t_hi
    }

    /// The connection set `S` as ranks (weight in band).
    pub fn connection_set(&self) -> Vec<usize> {
        (0..self.group.order())
            .filter(|&s| self.in_band(self.group.weight_of(s)))
            .collect()
    }

    /// `S ∪ -S`: differences that produce an edge.
    pub fn edge_differences(&self) -> Vec<usize> {
        (0..self.group.order())
            .filter(|&s| self.is_edge_difference(s))
            .collect()
    }

    pub fn is_edge_difference(&self, s: usize) -> bool {
        s != 0
            && (self.in_band(self.group.weight_of(s))
                || self.in_band(self.group.weight_of(self.group.neg_index(s))))
    }

    pub fn is_edge_index(&self, x: usize, y: usize) -> bool {
        x != y && self.is_edge_difference(self.group.sub_index(x, y))
    }

    pub fn is_edge(&self, x: &GroupElement, y: &GroupElement) -> Result<bool> {
        let xi = self.group.rank(x)?;
        let yi = self.group.rank(y)?;
        Ok(self.is_edge_index(xi, yi))
    }

    /// Complement within the family: the upper tail `[t, n]` becomes `[1, t-1]`.
    pub fn complement_spec(&self) -> Result<Self> {
        if self.group.m() != 2 {
            return Err(Error::Unsupported(
                "complements stay in the weight-band family only for m = 2".into(),
            ));
        }
        if !self.is_upper_tail() {
            return Err(Error::Unsupported(format!(
                "complement needs an upper-tail band, got [{}, {}]",
                self.t_lo, self.t_hi
            )));
        }
        Self::with_convention(self.group, 1, self.t_lo - 1, Convention::Custom)
    }
}

impl fmt::Display for CayleySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Cay({}, weights [{}, {}], {})",
            self.group, self.t_lo, self.t_hi, self.convention
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ConventionKind {
    Literal,
    Strict,
}

impl std::str::FromStr for ConventionKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "literal" => Ok(ConventionKind::Literal),
            "strict" => Ok(ConventionKind::Strict),
            other => Err(Error::InvalidParameter(format!("unknown convention '{other}'"))),
        }
    }
}
