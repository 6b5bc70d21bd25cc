//! Elements of ℚ(u) with u² = q, kept in a canonical reduced form.

use super::upoly::UPoly;
use super::ExactError;
use num::{BigInt, BigRational, One, Signed, ToPrimitive, Zero};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// `u^shift · num / den`.
///
/// Canonical: `den` monic, `gcd(num, den) = 1`, neither divisible by `u`.
/// Zero is `num = 0, den = 1, shift = 0`. Structural equality is value equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QValue {
    shift: i64,
    num: UPoly,
    den: UPoly,
}

impl QValue {
    pub fn zero() -> Self {
        QValue { shift: 0, num: UPoly::zero(), den: UPoly::one() }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_rational(BigRational::from_integer(c.into()))
    }

    pub fn from_ratio(n: i64, d: i64) -> Self {
        Self::from_rational(BigRational::new(n.into(), d.into()))
    }

    pub fn from_rational(c: BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        QValue { shift: 0, num: UPoly::constant(c), den: UPoly::one() }
    }

    /// `u^k = q^(k/2)`.
    pub fn u_pow(k: i64) -> Self {
        QValue { shift: k, num: UPoly::one(), den: UPoly::one() }
    }

    /// `q^k`.
    pub fn q_pow(k: i64) -> Self {
        Self::u_pow(2 * k)
    }

    /// `q^(p/r)`; the u-exponent `2p/r` must be an integer.
    pub fn q_pow_ratio(p: i64, r: i64) -> Result<Self, ExactError> {
        if r == 0 || (2 * p) % r != 0 {
            return Err(ExactError::NonIntegralExponent(format!("q^({p}/{r})")));
        }
        Ok(Self::u_pow(2 * p / r))
    }

    /// `c · u^k`.
    pub fn monomial(c: BigRational, k: i64) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        QValue { shift: k, num: UPoly::constant(c), den: UPoly::one() }
    }

    /// The Laurent polynomial `u^shift · p`.
    pub fn from_laurent(shift: i64, p: UPoly) -> Self {
        Self::from_parts(shift, p, UPoly::one()).expect("unit denominator")
    }

    /// `Σ c_i u^(low + i)` from integer coefficients.
    pub fn laurent_ints(low: i64, coeffs: &[i64]) -> Self {
        Self::from_laurent(low, UPoly::from_ints(coeffs))
    }

    /// Canonicalize `u^shift · num / den`.
    pub fn from_parts(shift: i64, num: UPoly, den: UPoly) -> Result<Self, ExactError> {
        if den.is_zero() {
            return Err(ExactError::NotAValue);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let (nl, dl) = (num.low_order(), den.low_order());
        let shift = shift + nl as i64 - dl as i64;
        let mut num = num.shift_down(nl);
        let mut den = den.shift_down(dl);
        if den.degree() > 0 && num.degree() > 0 {
            let g = UPoly::gcd(&num, &den);
            if !g.is_one() {
                num = num.div_exact(&g);
                den = den.div_exact(&g);
            }
        }
        let lc = den.leading();
        if !lc.is_one() {
            let inv = lc.recip();
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        Ok(QValue { shift, num, den })
    }

    /// `∏ (1 - c·u^ue)^e` over `(c, ue, e)` with `c = ±1`, reduced via cyclotomic factors.
    pub fn binomial_product(factors: &[(i8, i64, i64)]) -> Result<Self, ExactError> {
        let mut acc = super::cycloprod::CycloProduct::new();
        for &(c, ue, e) in factors {
            assert!(c == 1 || c == -1, "binomial sign must be ±1");
            acc.mul_binomial(c, ue, e)?;
        }
        Ok(acc.into_qvalue())
    }

    /// As [`QValue::from_parts`] for `gcd(num, den) = 1` already known; skips the gcd.
    pub(crate) fn from_coprime_parts(shift: i64, num: UPoly, den: UPoly) -> Self {
        let (nl, dl) = (num.low_order(), den.low_order());
        let (mut num, mut den) = (num.shift_down(nl), den.shift_down(dl));
        let lc = den.leading();
        if !lc.is_one() {
            let inv = lc.recip();
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        QValue { shift: shift + nl as i64 - dl as i64, num, den }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.shift == 0 && self.num.is_one() && self.den.is_one()
    }

    /// True for Laurent polynomials in u.
    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    /// The rational number this value equals, if it is constant.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.is_zero() {
            return Some(BigRational::zero());
        }
        (self.shift == 0 && self.num.degree() == 0 && self.den.is_one()).then(|| self.num.leading())
    }

    /// `Some(k)` when the value is `c·u^k`; the coefficient is returned alongside.
    pub fn as_monomial(&self) -> Option<(BigRational, i64)> {
        (!self.is_zero() && self.num.degree() == 0 && self.den.is_one())
            .then(|| (self.num.leading(), self.shift))
    }

    pub fn shift(&self) -> i64 {
        self.shift
    }

    pub fn numerator(&self) -> &UPoly {
        &self.num
    }

    pub fn denominator(&self) -> &UPoly {
        &self.den
    }

    /// Panics on zero; use [`QValue::try_inv`] when zero is possible.
    pub fn inv(&self) -> Self {
        self.try_inv().expect("inverse of zero")
    }

    pub fn try_inv(&self) -> Result<Self, ExactError> {
        if self.is_zero() {
            return Err(ExactError::NotAValue);
        }
        let lc = self.num.leading().recip();
        Ok(QValue { shift: -self.shift, num: self.den.scale(&lc), den: self.num.scale(&lc) })
    }

    pub fn pow(&self, e: i64) -> Self {
        if e < 0 {
            return self.inv().pow(-e);
        }
        if self.is_zero() {
            return if e == 0 { Self::one() } else { Self::zero() };
        }
        // Powers of a reduced fraction stay reduced.
        let e32 = u32::try_from(e).expect("exponent too large");
        QValue { shift: self.shift * e, num: self.num.pow(e32), den: self.den.pow(e32) }
    }

    /// Applies `u ↦ -u`; used to test parity.
    fn u_negated(&self) -> Self {
        let flip = |p: &UPoly| {
            UPoly::from_coeffs(
                p.coeffs().iter().enumerate().map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() }).collect(),
            )
        };
        let sign = if self.shift.rem_euclid(2) == 1 { -BigRational::one() } else { BigRational::one() };
        QValue::from_parts(self.shift, flip(&self.num).scale(&sign), flip(&self.den)).expect("nonzero denominator")
    }

    /// True iff the value lies in ℚ(q), i.e. is invariant under `u ↦ -u`.
    pub fn is_even(&self) -> bool {
        *self == self.u_negated()
    }

    /// Exact sign at `q = q0 > 1`, decided in ℚ(√q0) without rounding.
    pub fn sign_at(&self, q0: &BigRational) -> Result<std::cmp::Ordering, ExactError> {
        if *q0 <= BigRational::one() {
            return Err(ExactError::BadBase(q0.to_string()));
        }
        let d = poly_sign_at_sqrt(&self.den, q0);
        if d == std::cmp::Ordering::Equal {
            return Err(ExactError::NotAValue);
        }
        // u0^shift > 0
        let n = poly_sign_at_sqrt(&self.num, q0);
        Ok(if d == std::cmp::Ordering::Less { n.reverse() } else { n })
    }

    /// Exact value at `q = q0 > 1`.
    ///
    /// Values in ℚ(q) evaluate at any rational `q0`; otherwise `q0` must be a perfect rational square.
    pub fn evaluate(&self, q0: &BigRational) -> Result<BigRational, ExactError> {
        if *q0 <= BigRational::one() {
            return Err(ExactError::BadBase(q0.to_string()));
        }
        if self.is_zero() {
            return Ok(BigRational::zero());
        }
        if self.shift % 2 == 0 && self.num.is_even() && self.den.is_even() {
            let n = self.num.eval_even_at_square(q0);
            let d = self.den.eval_even_at_square(q0);
            if d.is_zero() {
                return Err(ExactError::NotAValue);
            }
            return Ok(n / d * rational_pow(q0, self.shift / 2));
        }
        let u0 = rational_sqrt(q0).ok_or(ExactError::Irrational)?;
        let d = self.den.eval(&u0);
        if d.is_zero() {
            return Err(ExactError::NotAValue);
        }
        Ok(self.num.eval(&u0) / d * rational_pow(&u0, self.shift))
    }

    /// Floating-point value at `q = q0`, for display only; exact work goes through `evaluate`.
    pub fn approximate(&self, q0: f64) -> f64 {
        let u0 = q0.sqrt();
        let horner = |p: &UPoly| p.coeffs().iter().rev().fold(0.0, |acc, c| acc * u0 + c.to_f64().unwrap_or(f64::NAN));
        horner(&self.num) / horner(&self.den) * u0.powi(self.shift as i32)
    }

    /// Monomials `(coefficient, u-exponent)` of the numerator Laurent polynomial, highest exponent first.
    fn numerator_terms(&self) -> Vec<(BigRational, i64)> {
        laurent_terms(self.shift, &self.num)
    }
}

fn laurent_terms(shift: i64, p: &UPoly) -> Vec<(BigRational, i64)> {
    p.coeffs()
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (c.clone(), shift + i as i64))
        .collect()
}

/// Sign of `p(√q0)`: write `p(u) = a(q0) + u·b(q0)` and compare `a²` with `b²·q0`.
fn poly_sign_at_sqrt(p: &UPoly, q0: &BigRational) -> std::cmp::Ordering {
    let (mut a, mut b) = (BigRational::zero(), BigRational::zero());
    let mut q_pow = BigRational::one();
    for (i, c) in p.coeffs().iter().enumerate() {
        if i % 2 == 0 {
            a += c * &q_pow;
        } else {
            b += c * &q_pow;
            q_pow *= q0;
        }
    }
    let zero = BigRational::zero();
    let (sa, sb) = (a.cmp(&zero), b.cmp(&zero));
    if sa == sb || sb == std::cmp::Ordering::Equal {
        return sa;
    }
    if sa == std::cmp::Ordering::Equal {
        return sb;
    }
    match (&a * &a).cmp(&(&b * &b * q0)) {
        std::cmp::Ordering::Greater => sa,
        std::cmp::Ordering::Less => sb,
        std::cmp::Ordering::Equal => std::cmp::Ordering::Equal,
    }
}

pub(crate) fn rational_pow(x: &BigRational, k: i64) -> BigRational {
    let p = num::pow(x.clone(), k.unsigned_abs() as usize);
    if k < 0 {
        p.recip()
    } else {
        p
    }
}

pub(crate) fn rational_sqrt(x: &BigRational) -> Option<BigRational> {
    if x.is_negative() {
        return None;
    }
    let isqrt = |n: &BigInt| {
        let r = n.sqrt();
        (&r * &r == *n).then_some(r)
    };
    Some(BigRational::new(isqrt(x.numer())?, isqrt(x.denom())?))
}

/// Writes `Σ c*q^(k/2)` in the canonical grammar.
pub(crate) fn write_terms(f: &mut fmt::Formatter<'_>, terms: &[(BigRational, i64)]) -> fmt::Result {
    if terms.is_empty() {
        return write!(f, "0");
    }
    for (i, (c, k)) in terms.iter().enumerate() {
        if i == 0 {
            write!(f, "{c}*q^({k}/2)")?;
        } else if c.is_negative() {
            write!(f, " - {}*q^({k}/2)", -c)?;
        } else {
            write!(f, " + {c}*q^({k}/2)")?;
        }
    }
    Ok(())
}

impl fmt::Display for QValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num = self.numerator_terms();
        if self.den.is_one() {
            return write_terms(f, &num);
        }
        write!(f, "(")?;
        write_terms(f, &num)?;
        write!(f, ") / (")?;
        write_terms(f, &laurent_terms(0, &self.den))?;
        write!(f, ")")
    }
}

impl Add for &QValue {
    type Output = QValue;
    fn add(self, rhs: &QValue) -> QValue {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        // Bring both numerators to the common power u^lo.
        let lo = self.shift.min(rhs.shift);
        let a = self.num.shift_up((self.shift - lo) as usize);
        let b = rhs.num.shift_up((rhs.shift - lo) as usize);
        if self.den == rhs.den {
            return QValue::from_parts(lo, &a + &b, self.den.clone()).expect("nonzero denominator");
        }
        let g = UPoly::gcd(&self.den, &rhs.den);
        let da = self.den.div_exact(&g);
        let db = rhs.den.div_exact(&g);
        let num = &(&a * &db) + &(&b * &da);
        QValue::from_parts(lo, num, &da * &rhs.den).expect("nonzero denominator")
    }
}

impl Neg for &QValue {
    type Output = QValue;
    fn neg(self) -> QValue {
        QValue { shift: self.shift, num: -&self.num, den: self.den.clone() }
    }
}

impl Sub for &QValue {
    type Output = QValue;
    fn sub(self, rhs: &QValue) -> QValue {
        self + &(-rhs)
    }
}

impl Mul for &QValue {
    type Output = QValue;
    fn mul(self, rhs: &QValue) -> QValue {
        if self.is_zero() || rhs.is_zero() {
            return QValue::zero();
        }
        let shift = self.shift + rhs.shift;
        if self.den.is_one() && rhs.den.is_one() {
            return QValue { shift, num: &self.num * &rhs.num, den: UPoly::one() };
        }
        // Cross-cancel so the product of reduced fractions is reduced.
        let g1 = UPoly::gcd(&self.num, &rhs.den);
        let g2 = UPoly::gcd(&rhs.num, &self.den);
        let n1 = self.num.div_exact(&g1);
        let d2 = rhs.den.div_exact(&g1);
        let n2 = rhs.num.div_exact(&g2);
        let d1 = self.den.div_exact(&g2);
        QValue::from_coprime_parts(shift, &n1 * &n2, &d1 * &d2)
    }
}

impl Div for &QValue {
    type Output = QValue;
    fn div(self, rhs: &QValue) -> QValue {
        self * &rhs.inv()
    }
}

macro_rules! forward_owned {
    ($t:ty, $($tr:ident $m:ident),*) => {$(
        impl $tr for $t {
            type Output = $t;
            fn $m(self, rhs: $t) -> $t {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&$t> for $t {
            type Output = $t;
            fn $m(self, rhs: &$t) -> $t {
                (&self).$m(rhs)
            }
        }
    )*};
}
forward_owned!(QValue, Add add, Sub sub, Mul mul, Div div);

impl Neg for QValue {
    type Output = QValue;
    fn neg(self) -> QValue {
        -&self
    }
}

impl std::iter::Product for QValue {
    fn product<I: Iterator<Item = QValue>>(iter: I) -> QValue {
        iter.fold(QValue::one(), |a, b| a * b)
    }
}
