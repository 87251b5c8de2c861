use std::fmt;
use std::ops::{Add, Sub};

/// A multiple of one half, stored as twice its value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HalfInt {
    twice: i64,
}

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt { twice: 0 };
    pub const HALF: HalfInt = HalfInt { twice: 1 };

    pub const fn from_twice(twice: i64) -> Self {
        HalfInt { twice }
    }

    pub const fn int(n: i64) -> Self {
        HalfInt { twice: 2 * n }
    }

    /// `n / 2`.
    pub const fn half(n: i64) -> Self {
        HalfInt { twice: n }
    }

    pub const fn twice_value(self) -> i64 {
        self.twice
    }

    pub const fn is_integer(self) -> bool {
        self.twice % 2 == 0
    }

    pub fn floor(self) -> HalfInt {
        HalfInt::int(self.twice.div_euclid(2))
    }

    pub fn ceil(self) -> HalfInt {
        HalfInt::int(-(-self.twice).div_euclid(2))
    }

    pub fn to_f64(self) -> f64 {
        self.twice as f64 / 2.0
    }
}

impl From<i64> for HalfInt {
    fn from(n: i64) -> Self {
        HalfInt::int(n)
    }
}

impl From<u32> for HalfInt {
    fn from(n: u32) -> Self {
        HalfInt::int(n as i64)
    }
}

impl Add for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: HalfInt) -> HalfInt {
        HalfInt { twice: self.twice + rhs.twice }
    }
}

impl Add<i64> for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: i64) -> HalfInt {
        HalfInt { twice: self.twice + 2 * rhs }
    }
}

impl Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: HalfInt) -> HalfInt {
        HalfInt { twice: self.twice - rhs.twice }
    }
}

impl Sub<i64> for HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: i64) -> HalfInt {
        HalfInt { twice: self.twice - 2 * rhs }
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.twice / 2)
        } else {
            write!(f, "{}/2", self.twice)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rounding() {
        assert_eq!(HalfInt::half(5).ceil(), HalfInt::int(3));
        assert_eq!(HalfInt::half(5).floor(), HalfInt::int(2));
        assert_eq!(HalfInt::half(-1).floor(), HalfInt::int(-1));
        assert_eq!(HalfInt::half(-1).ceil(), HalfInt::int(0));
        assert_eq!(HalfInt::int(4).ceil(), HalfInt::int(4));
        assert_eq!((HalfInt::half(3) + 1).to_string(), "5/2");
        assert_eq!((HalfInt::half(3) + HalfInt::HALF).to_string(), "2");
    }
}
