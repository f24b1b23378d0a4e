use std::fmt;
use std::ops::{Add, Sub};

/// An exact multiple of ½, stored as its double.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct HalfInt {
    doubled: i64,
}

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt { doubled: 0 };

    pub const fn from_doubled(doubled: i64) -> Self {
        HalfInt { doubled }
    }

    pub const fn from_int(v: i64) -> Self {
        HalfInt { doubled: 2 * v }
    }

    pub const fn doubled(self) -> i64 {
        self.doubled
    }

    pub const fn is_integer(self) -> bool {
        self.doubled % 2 == 0
    }
}

impl Add for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: HalfInt) -> HalfInt {
        HalfInt::from_doubled(self.doubled + rhs.doubled)
    }
}

impl Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: HalfInt) -> HalfInt {
        HalfInt::from_doubled(self.doubled - rhs.doubled)
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.doubled < 0 { "-" } else { "" };
        let abs = self.doubled.unsigned_abs();
        if abs.is_multiple_of(2) {
            write!(f, "{sign}{}", abs / 2)
        } else {
            write!(f, "{sign}{}.5", abs / 2)
        }
    }
}
