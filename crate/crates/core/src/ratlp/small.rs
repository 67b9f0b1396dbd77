//! Exact rationals that stay in machine words while they fit.
//!
//! The simplex tableau runs on [`Q`]; entries are `i64` fractions until an
//! operation overflows, then they move to [`BigRational`] and come back as
//! soon as a result fits again.

use std::cmp::Ordering;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

#[derive(Clone, Debug)]
pub(crate) enum Q {
    /// Lowest terms, positive denominator.
    Small(i64, i64),
    Big(Box<BigRational>),
}

impl Q {
    fn from_i128(n: i128, d: i128) -> Self {
        debug_assert!(d != 0);
        let g = n.gcd(&d);
        let (mut n, mut d) = (n / g, d / g);
        if d < 0 {
            n = -n;
            d = -d;
        }
        match (i64::try_from(n), i64::try_from(d)) {
            (Ok(n), Ok(d)) => Q::Small(n, d),
            _ => Q::Big(Box::new(BigRational::new(BigInt::from(n), BigInt::from(d)))),
        }
    }

    pub(crate) fn from_big(r: BigRational) -> Self {
        match (r.numer().to_i64(), r.denom().to_i64()) {
            (Some(n), Some(d)) => Q::Small(n, d),
            _ => Q::Big(Box::new(r)),
        }
    }

    pub(crate) fn to_big(&self) -> BigRational {
        match self {
            Q::Small(n, d) => BigRational::new_raw(BigInt::from(*n), BigInt::from(*d)),
            Q::Big(b) => (**b).clone(),
        }
    }
}

impl PartialEq for Q {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Q {}

impl PartialOrd for Q {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Q {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Q::Small(a, b), Q::Small(c, d)) => {
                (*a as i128 * *d as i128).cmp(&(*c as i128 * *b as i128))
            }
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

impl Zero for Q {
    fn zero() -> Self {
        Q::Small(0, 1)
    }

    fn is_zero(&self) -> bool {
        matches!(self, Q::Small(0, _))
    }
}

impl One for Q {
    fn one() -> Self {
        Q::Small(1, 1)
    }
}

impl Neg for Q {
    type Output = Q;

    fn neg(self) -> Q {
        match self {
            Q::Small(n, d) if n != i64::MIN => Q::Small(-n, d),
            other => Q::from_big(-other.to_big()),
        }
    }
}

impl Add for Q {
    type Output = Q;

    fn add(self, rhs: Q) -> Q {
        &self + &rhs
    }
}

impl Mul for Q {
    type Output = Q;

    fn mul(self, rhs: Q) -> Q {
        &self * &rhs
    }
}

impl<'a> Add<&'a Q> for &'a Q {
    type Output = Q;

    fn add(self, rhs: &'a Q) -> Q {
        match (self, rhs) {
            (Q::Small(0, _), x) | (x, Q::Small(0, _)) => x.clone(),
            (Q::Small(a, b), Q::Small(c, d)) => {
                let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
                if b == d {
                    Q::from_i128(a + c, b)
                } else {
                    Q::from_i128(a * d + c * b, b * d)
                }
            }
            _ => Q::from_big(self.to_big() + rhs.to_big()),
        }
    }
}

impl<'a> Sub<&'a Q> for &'a Q {
    type Output = Q;

    fn sub(self, rhs: &'a Q) -> Q {
        match (self, rhs) {
            (x, Q::Small(0, _)) => x.clone(),
            (Q::Small(a, b), Q::Small(c, d)) => {
                let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
                if b == d {
                    Q::from_i128(a - c, b)
                } else {
                    Q::from_i128(a * d - c * b, b * d)
                }
            }
            _ => Q::from_big(self.to_big() - rhs.to_big()),
        }
    }
}

impl<'a> Mul<&'a Q> for &'a Q {
    type Output = Q;

    fn mul(self, rhs: &'a Q) -> Q {
        match (self, rhs) {
            (Q::Small(0, _), _) | (_, Q::Small(0, _)) => Q::zero(),
            (Q::Small(a, b), Q::Small(c, d)) => {
                Q::from_i128(*a as i128 * *c as i128, *b as i128 * *d as i128)
            }
            _ => Q::from_big(self.to_big() * rhs.to_big()),
        }
    }
}

impl<'a> Div<&'a Q> for &'a Q {
    type Output = Q;

    fn div(self, rhs: &'a Q) -> Q {
        match (self, rhs) {
            (_, Q::Small(0, _)) => panic!("division by zero"),
            (Q::Small(0, _), _) => Q::zero(),
            (Q::Small(a, b), Q::Small(c, d)) => {
                Q::from_i128(*a as i128 * *d as i128, *b as i128 * *c as i128)
            }
            _ => Q::from_big(self.to_big() / rhs.to_big()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn promotes_and_demotes() {
        let a = Q::from_big(big(i64::MAX, 3));
        let b = &a * &a;
        assert!(matches!(b, Q::Big(_)));
        let back = &b / &a;
        assert!(matches!(back, Q::Small(_, _)));
        assert_eq!(back.to_big(), big(i64::MAX, 3));
        let m = Q::Small(i64::MIN, 1);
        assert_eq!((-m).to_big(), -BigRational::from_integer(BigInt::from(i64::MIN)));
    }

    #[test]
    fn agrees_with_big_rationals() {
        let vals = [(1, 2), (-3, 7), (5, 1), (0, 1), (i64::MAX, 2), (-9, 4)];
        for &(a, b) in &vals {
            for &(c, d) in &vals {
                let (x, y) = (Q::from_big(big(a, b)), Q::from_big(big(c, d)));
                let (bx, by) = (big(a, b), big(c, d));
                assert_eq!((&x + &y).to_big(), &bx + &by);
                assert_eq!((&x - &y).to_big(), &bx - &by);
                assert_eq!((&x * &y).to_big(), &bx * &by);
                if c != 0 {
                    assert_eq!((&x / &y).to_big(), &bx / &by);
                }
                assert_eq!(x.cmp(&y), bx.cmp(&by));
            }
        }
    }
}
