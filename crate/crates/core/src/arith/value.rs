use std::fmt;
use std::ops::{Div, Mul};

use num_bigint::{BigInt, BigUint, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// An exact value `q * sqrt(pi)^k` with `q` rational.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SqrtPiScaled {
    q: BigRational,
    k: i64,
}

impl SqrtPiScaled {
    pub fn new(q: BigRational, k: i64) -> Self {
        if q.is_zero() {
            SqrtPiScaled { q, k: 0 }
        } else {
            SqrtPiScaled { q, k }
        }
    }

    pub fn rational(q: BigRational) -> Self {
        SqrtPiScaled::new(q, 0)
    }

    pub fn integer(n: impl Into<BigInt>) -> Self {
        SqrtPiScaled::rational(BigRational::from_integer(n.into()))
    }

    pub fn one() -> Self {
        SqrtPiScaled::integer(1)
    }

    pub fn zero() -> Self {
        SqrtPiScaled::integer(0)
    }

    pub fn q(&self) -> &BigRational {
        &self.q
    }

    /// Exponent of `sqrt(pi)`.
    pub fn k(&self) -> i64 {
        self.k
    }

    pub fn is_zero(&self) -> bool {
        self.q.is_zero()
    }

    /// True when the value is a (possibly negative) integer with no `sqrt(pi)`.
    pub fn is_integer(&self) -> bool {
        self.k == 0 && self.q.is_integer()
    }

    /// The value as a non-negative integer, if it is one.
    pub fn to_biguint(&self) -> Option<BigUint> {
        if !self.is_integer() || self.q.is_negative() {
            return None;
        }
        self.q.to_integer().to_biguint()
    }

    /// Sum of two values with the same `sqrt(pi)` exponent.
    pub fn checked_add(&self, other: &SqrtPiScaled) -> Option<SqrtPiScaled> {
        if self.is_zero() {
            return Some(other.clone());
        }
        if other.is_zero() {
            return Some(self.clone());
        }
        (self.k == other.k).then(|| SqrtPiScaled::new(&self.q + &other.q, self.k))
    }

    pub fn recip(&self) -> Option<SqrtPiScaled> {
        (!self.is_zero()).then(|| SqrtPiScaled::new(self.q.recip(), -self.k))
    }

    pub fn to_f64(&self) -> f64 {
        let q = ratio_to_f64(&self.q);
        q * std::f64::consts::PI.sqrt().powi(self.k as i32)
    }
}

/// Float approximation of a big rational that survives huge numerators and
/// denominators.
pub(crate) fn ratio_to_f64(q: &BigRational) -> f64 {
    if q.is_zero() {
        return 0.0;
    }
    let sign = if q.numer().sign() == Sign::Minus { -1.0 } else { 1.0 };
    let n = q.numer().magnitude();
    let d = q.denom().magnitude();
    let (nb, db) = (n.bits() as i64, d.bits() as i64);
    let shift_n = (nb - 60).max(0);
    let shift_d = (db - 60).max(0);
    let nf = (n >> shift_n as usize).to_f64().unwrap_or(f64::NAN);
    let df = (d >> shift_d as usize).to_f64().unwrap_or(f64::NAN);
    sign * nf / df * 2f64.powi((shift_n - shift_d) as i32)
}

impl Mul for &SqrtPiScaled {
    type Output = SqrtPiScaled;
    fn mul(self, rhs: &SqrtPiScaled) -> SqrtPiScaled {
        SqrtPiScaled::new(&self.q * &rhs.q, self.k + rhs.k)
    }
}

impl Mul for SqrtPiScaled {
    type Output = SqrtPiScaled;
    fn mul(self, rhs: SqrtPiScaled) -> SqrtPiScaled {
        &self * &rhs
    }
}

impl Div for &SqrtPiScaled {
    type Output = SqrtPiScaled;
    /// Panics when dividing by zero.
    fn div(self, rhs: &SqrtPiScaled) -> SqrtPiScaled {
        assert!(!rhs.is_zero(), "division by zero");
        SqrtPiScaled::new(&self.q / &rhs.q, self.k - rhs.k)
    }
}

impl Div for SqrtPiScaled {
    type Output = SqrtPiScaled;
    fn div(self, rhs: SqrtPiScaled) -> SqrtPiScaled {
        &self / &rhs
    }
}

impl fmt::Display for SqrtPiScaled {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.k == 0 {
            write!(f, "{}", self.q)
        } else if self.q.is_one() {
            write!(f, "sqrt(pi)^{}", self.k)
        } else {
            write!(f, "{}*sqrt(pi)^{}", self.q, self.k)
        }
    }
}
