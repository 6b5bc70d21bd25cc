//! Half-integers and affine arguments `c·s + h` in the complex variable s.

use std::fmt;
use std::ops::{Add, Neg, Sub};

/// The number `twice / 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HalfInt {
    twice: i64,
}

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt { twice: 0 };
    pub const HALF: HalfInt = HalfInt { twice: 1 };

    pub const fn from_twice(twice: i64) -> Self {
        HalfInt { twice }
    }

    pub const fn int(k: i64) -> Self {
        HalfInt { twice: 2 * k }
    }

    pub const fn twice(self) -> i64 {
        self.twice
    }

    pub fn is_integer(self) -> bool {
        self.twice % 2 == 0
    }

    pub fn scale(self, k: i64) -> Self {
        HalfInt { twice: self.twice * k }
    }
}

impl Add for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: HalfInt) -> HalfInt {
        HalfInt { twice: self.twice + rhs.twice }
    }
}

impl Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: HalfInt) -> HalfInt {
        HalfInt { twice: self.twice - rhs.twice }
    }
}

impl Neg for HalfInt {
    type Output = HalfInt;
    fn neg(self) -> HalfInt {
        HalfInt { twice: -self.twice }
    }
}

impl From<i64> for HalfInt {
    fn from(k: i64) -> Self {
        HalfInt::int(k)
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

/// The argument `coef·s + shift`; `q^(-arg) = X^coef · u^(-2·shift)` with `X = q^(-s)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SArg {
    pub coef: i64,
    pub shift: HalfInt,
}

impl SArg {
    /// The plain variable `s`.
    pub const S: SArg = SArg { coef: 1, shift: HalfInt::ZERO };

    pub fn new(coef: i64, shift: HalfInt) -> Self {
        SArg { coef, shift }
    }

    /// A fixed point, independent of s.
    pub fn point(shift: HalfInt) -> Self {
        SArg { coef: 0, shift }
    }

    pub fn plus(self, h: HalfInt) -> Self {
        SArg { coef: self.coef, shift: self.shift + h }
    }

    pub fn times(self, k: i64) -> Self {
        SArg { coef: self.coef * k, shift: self.shift.scale(k) }
    }

    /// `1 - arg`.
    pub fn reflect(self) -> Self {
        SArg { coef: -self.coef, shift: HalfInt::int(1) - self.shift }
    }

    /// Value at `s = s0`.
    pub fn at(self, s0: HalfInt) -> HalfInt {
        s0.scale(self.coef) + self.shift
    }
}

impl fmt::Display for SArg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.coef, self.shift == HalfInt::ZERO) {
            (0, _) => write!(f, "{}", self.shift),
            (c, true) => write!(f, "{c}s"),
            (c, false) => write!(f, "{c}s+{}", self.shift),
        }
    }
}
