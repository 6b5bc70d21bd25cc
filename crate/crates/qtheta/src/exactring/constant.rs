//! Scalars times reduced words in root-number symbols `ε_χ`, with `ε_χ² = χ(-1)`.

use super::halfint::HalfInt;
use super::qvalue::QValue;
use super::svalue::{SValue, Specialized};
use super::ExactError;
use num::{BigRational, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::Mul;

/// Field operations shared by [`QValue`] and [`SValue`].
pub trait Scalar: Clone + PartialEq + fmt::Display {
    fn from_int(c: i64) -> Self;
    fn mul_ref(&self, rhs: &Self) -> Self;
    fn try_inv(&self) -> Result<Self, ExactError>;
    fn is_zero(&self) -> bool;
}

impl Scalar for QValue {
    fn from_int(c: i64) -> Self {
        QValue::from_int(c)
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn try_inv(&self) -> Result<Self, ExactError> {
        QValue::try_inv(self)
    }
    fn is_zero(&self) -> bool {
        QValue::is_zero(self)
    }
}

impl Scalar for SValue {
    fn from_int(c: i64) -> Self {
        SValue::from_int(c)
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn try_inv(&self) -> Result<Self, ExactError> {
        SValue::try_inv(self)
    }
    fn is_zero(&self) -> bool {
        SValue::is_zero(self)
    }
}

/// `scalar · ∏ ε_id` over the ids in `units`, each recorded with its sign `χ(-1)`.
///
/// Every exponent is 0 or 1; squares are always reduced to the sign.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstantValue<S> {
    scalar: S,
    units: BTreeMap<String, i8>,
}

/// A value of `ε` at a numeric point: `i^k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FourthRoot(pub u8);

impl<S: Scalar> ConstantValue<S> {
    pub fn new(scalar: S) -> Self {
        ConstantValue { scalar, units: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::new(S::from_int(1))
    }

    /// The symbol `ε_id` of a character with `χ(-1) = sign`.
    pub fn eps(id: &str, sign: i8) -> Self {
        assert!(sign == 1 || sign == -1, "χ(-1) must be ±1");
        let mut units = BTreeMap::new();
        units.insert(id.to_string(), sign);
        ConstantValue { scalar: S::from_int(1), units }
    }

    pub fn scalar(&self) -> &S {
        &self.scalar
    }

    /// `(id, χ(-1))` for every symbol present.
    pub fn units(&self) -> impl Iterator<Item = (&str, i8)> {
        self.units.iter().map(|(k, v)| (k.as_str(), *v))
    }

    pub fn has_units(&self) -> bool {
        !self.units.is_empty()
    }

    pub fn scale(&self, c: &S) -> Self {
        ConstantValue { scalar: self.scalar.mul_ref(c), units: self.units.clone() }
    }

    pub fn try_inv(&self) -> Result<Self, ExactError> {
        // ε⁻¹ = χ(-1)·ε.
        let sign: i64 = self.units.values().map(|&s| s as i64).product();
        Ok(ConstantValue { scalar: self.scalar.try_inv()?.mul_ref(&S::from_int(sign)), units: self.units.clone() })
    }

    /// Panics on a zero scalar.
    pub fn inv(&self) -> Self {
        self.try_inv().expect("inverse of zero")
    }

    pub fn pow(&self, e: i64) -> Self {
        let base = if e < 0 { self.inv() } else { self.clone() };
        (0..e.abs()).fold(Self::one(), |acc, _| &acc * &base)
    }

    /// Re-canonicalizes a zero scalar so that `0·ε = 0`.
    fn normalized(self) -> Self {
        if self.scalar.is_zero() {
            return Self::new(self.scalar);
        }
        self
    }
}

impl<S: Scalar> Mul for &ConstantValue<S> {
    type Output = ConstantValue<S>;
    fn mul(self, rhs: &ConstantValue<S>) -> ConstantValue<S> {
        let mut scalar = self.scalar.mul_ref(&rhs.scalar);
        let mut units = self.units.clone();
        for (id, &sign) in &rhs.units {
            match units.remove(id) {
                Some(prev) => {
                    debug_assert_eq!(prev, sign, "one symbol, two signs: {id}");
                    scalar = scalar.mul_ref(&S::from_int(sign as i64));
                }
                None => {
                    units.insert(id.clone(), sign);
                }
            }
        }
        ConstantValue { scalar, units }.normalized()
    }
}

impl<S: Scalar> Mul for ConstantValue<S> {
    type Output = ConstantValue<S>;
    fn mul(self, rhs: ConstantValue<S>) -> ConstantValue<S> {
        &self * &rhs
    }
}

impl<S: Scalar> Mul<&ConstantValue<S>> for ConstantValue<S> {
    type Output = ConstantValue<S>;
    fn mul(self, rhs: &ConstantValue<S>) -> ConstantValue<S> {
        &self * rhs
    }
}

impl<S: Scalar> std::iter::Product for ConstantValue<S> {
    fn product<I: Iterator<Item = ConstantValue<S>>>(iter: I) -> Self {
        iter.fold(Self::one(), |a, b| a * b)
    }
}

impl<S: Scalar> From<S> for ConstantValue<S> {
    fn from(s: S) -> Self {
        ConstantValue::new(s)
    }
}

impl<S: Scalar> fmt::Display for ConstantValue<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.scalar)?;
        for id in self.units.keys() {
            write!(f, " * eps({id})")?;
        }
        Ok(())
    }
}

impl ConstantValue<SValue> {
    /// Specialize s; the unit word is untouched.
    pub fn substitute(&self, s0: HalfInt) -> Specialized<ConstantValue<QValue>> {
        self.scalar
            .substitute(s0)
            .map(|scalar| ConstantValue { scalar, units: self.units.clone() }.normalized())
    }
}

impl ConstantValue<QValue> {
    pub fn lift(&self) -> ConstantValue<SValue> {
        ConstantValue { scalar: SValue::from_q(self.scalar.clone()), units: self.units.clone() }
    }

    /// Exact value at `q = q0`, given `ε_id = i^k` for each symbol present.
    ///
    /// The product of the unit values must be real (±1); otherwise the value is not rational.
    pub fn evaluate(
        &self,
        q0: &BigRational,
        unit_values: &BTreeMap<String, FourthRoot>,
    ) -> Result<BigRational, ExactError> {
        let base = self.scalar.evaluate(q0)?;
        if base.is_zero() {
            return Ok(base);
        }
        let mut k = 0u32;
        for (id, &sign) in &self.units {
            let v = unit_values.get(id).ok_or_else(|| ExactError::MissingUnit(id.clone()))?;
            // The supplied value must square to χ(-1).
            let sq = (2 * v.0 as u32) % 4;
            if (sq == 0) != (sign == 1) {
                return Err(ExactError::InconsistentUnit(id.clone()));
            }
            k += v.0 as u32;
        }
        match k % 4 {
            0 => Ok(base),
            2 => Ok(-base),
            _ => Err(ExactError::NonRationalUnits),
        }
    }
}
