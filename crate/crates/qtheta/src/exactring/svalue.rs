//! Elements of ℚ(u, X) with `X = q^(-s)`.
//!
//! Every factor the local formulas produce is a binomial `1 ± u^A X^B`, so values are kept
//! factored into irreducible cyclotomic atoms `Φ_d(u^a X^b)`. That form is canonical in the
//! UFD ℚ[u^±, X^±], which makes removable `0·∞` pairs cancel before any substitution.
//! Sums leave the factored world and fall back to a reduced quotient in ℚ(u)[X].

use super::halfint::HalfInt;
use super::qvalue::QValue;
use super::cycloprod::CycloProduct;
use super::upoly::cyclotomic;
use super::ExactError;
use num::integer::gcd;
use num::BigRational;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::{Mutex, OnceLock};

/// Result of specializing s at a point: a value or a genuine pole.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Specialized<T> {
    Finite(T),
    Pole,
}

impl<T> Specialized<T> {
    pub fn finite(self) -> Option<T> {
        match self {
            Specialized::Finite(x) => Some(x),
            Specialized::Pole => None,
        }
    }

    pub fn is_pole(&self) -> bool {
        matches!(self, Specialized::Pole)
    }

    pub fn map<U>(self, f: impl FnOnce(T) -> U) -> Specialized<U> {
        match self {
            Specialized::Finite(x) => Specialized::Finite(f(x)),
            Specialized::Pole => Specialized::Pole,
        }
    }
}

impl<T: fmt::Display> fmt::Display for Specialized<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Specialized::Finite(x) => x.fmt(f),
            Specialized::Pole => write!(f, "pole"),
        }
    }
}

pub(crate) fn cyclotomic_cached(d: u32) -> Vec<i64> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Vec<i64>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(c) = cache.lock().expect("cache poisoned").get(&d) {
        return c.clone();
    }
    let c = cyclotomic(d);
    cache.lock().expect("cache poisoned").insert(d, c.clone());
    c
}

pub(crate) fn divisors(n: u32) -> impl Iterator<Item = u32> {
    (1..=n).filter(move |d| n % d == 0)
}

/// The irreducible `Φ_d(u^a X^b)` with `b ≥ 1` and `gcd(|a|, b) = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Atom {
    pub d: u32,
    pub a: i64,
    pub b: i64,
}

impl Atom {
    /// Coefficients in X (index = X-degree).
    fn x_poly(self) -> XPoly {
        let c = cyclotomic_cached(self.d);
        let mut coeffs = vec![QValue::zero(); (self.b as usize) * (c.len() - 1) + 1];
        for (j, &cj) in c.iter().enumerate() {
            coeffs[self.b as usize * j] = QValue::monomial(BigRational::from_integer(cj.into()), self.a * j as i64);
        }
        XPoly::new(coeffs)
    }

    /// u-exponent of the X-leading coefficient; Φ_d is monic of degree φ(d).
    fn leading_u_exponent(self) -> i64 {
        self.a * (cyclotomic_cached(self.d).len() as i64 - 1)
    }

    /// `x_poly` scaled to be monic in X.
    fn monic_poly(self) -> XPoly {
        self.x_poly().scale(&QValue::u_pow(-self.leading_u_exponent()))
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Phi_{}(q^({}/2)*X^{})", self.d, self.a, self.b)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct Factored {
    /// Zero iff the whole value is zero; then `xpow = 0` and `atoms` is empty.
    unit: QValue,
    xpow: i64,
    atoms: BTreeMap<Atom, i64>,
}

impl Factored {
    fn scalar(unit: QValue) -> Self {
        Factored { unit, xpow: 0, atoms: BTreeMap::new() }
    }

    fn is_zero(&self) -> bool {
        self.unit.is_zero()
    }

    fn mul(&self, rhs: &Factored) -> Factored {
        if self.is_zero() || rhs.is_zero() {
            return Factored::scalar(QValue::zero());
        }
        let mut atoms = self.atoms.clone();
        for (atom, e) in &rhs.atoms {
            let slot = atoms.entry(*atom).or_insert(0);
            *slot += e;
            if *slot == 0 {
                atoms.remove(atom);
            }
        }
        Factored { unit: &self.unit * &rhs.unit, xpow: self.xpow + rhs.xpow, atoms }
    }

    fn pow(&self, e: i64) -> Factored {
        if e == 0 {
            return Factored::scalar(QValue::one());
        }
        Factored {
            unit: self.unit.pow(e),
            xpow: self.xpow * e,
            atoms: self.atoms.iter().map(|(a, k)| (*a, k * e)).collect(),
        }
    }

    fn expand(&self) -> Expanded {
        if self.is_zero() {
            return Expanded::zero();
        }
        let mut num = XPoly::constant(self.unit.clone());
        let mut den_atoms = BTreeMap::new();
        let mut lead = 0i64;
        for (atom, &e) in &self.atoms {
            if e > 0 {
                let p = atom.x_poly();
                for _ in 0..e {
                    num = num.mul(&p);
                }
            } else {
                lead += atom.leading_u_exponent() * (-e);
                den_atoms.insert(*atom, (-e) as u32);
            }
        }
        // Distinct atoms are coprime and none divides X, so only monicity remains.
        Expanded { xshift: self.xpow, num: num.scale(&QValue::u_pow(-lead)), den_atoms, rest: XPoly::one() }
    }

    fn substitute(&self, s0: HalfInt) -> Specialized<QValue> {
        if self.is_zero() {
            return Specialized::Finite(QValue::zero());
        }
        // X = u^(-k) with k = 2·s0, so each atom is Φ_d(u^m) with m = a - k·b.
        let k = s0.twice();
        let mut acc = CycloProduct::new();
        acc.mul_u_pow(-k * self.xpow);
        for (atom, &e) in &self.atoms {
            if acc.mul_phi_at_power(atom.d, atom.a - k * atom.b, e).is_err() {
                return Specialized::Pole;
            }
        }
        Specialized::Finite(&self.unit * &acc.into_qvalue())
    }
}

/// Polynomial in X with coefficients in ℚ(u); no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
struct XPoly {
    coeffs: Vec<QValue>,
}

impl XPoly {
    fn new(mut coeffs: Vec<QValue>) -> Self {
        while coeffs.last().is_some_and(QValue::is_zero) {
            coeffs.pop();
        }
        XPoly { coeffs }
    }

    fn constant(c: QValue) -> Self {
        Self::new(vec![c])
    }

    fn one() -> Self {
        Self::constant(QValue::one())
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    fn leading(&self) -> QValue {
        self.coeffs.last().cloned().unwrap_or_else(QValue::zero)
    }

    fn low_order(&self) -> usize {
        self.coeffs.iter().position(|c| !c.is_zero()).unwrap_or(0)
    }

    fn shift_down(&self, k: usize) -> Self {
        XPoly { coeffs: self.coeffs[k.min(self.coeffs.len())..].to_vec() }
    }

    fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![QValue::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        XPoly { coeffs }
    }

    fn scale(&self, c: &QValue) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    fn add(&self, rhs: &XPoly) -> XPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let z = QValue::zero();
        XPoly::new(
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&z) + rhs.coeffs.get(i).unwrap_or(&z))
                .collect(),
        )
    }

    fn mul(&self, rhs: &XPoly) -> XPoly {
        if self.is_zero() || rhs.is_zero() {
            return XPoly { coeffs: Vec::new() };
        }
        let mut coeffs = vec![QValue::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] = &coeffs[i + j] + &(a * b);
                }
            }
        }
        XPoly::new(coeffs)
    }

    fn div_rem(&self, d: &XPoly) -> (XPoly, XPoly) {
        let dl = d.coeffs.len();
        if self.coeffs.len() < dl {
            return (XPoly { coeffs: Vec::new() }, self.clone());
        }
        let mut rem = self.coeffs.clone();
        let lc_inv = d.leading().inv();
        let mut quot = vec![QValue::zero(); rem.len() - dl + 1];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dl - 1] * &lc_inv;
            if c.is_zero() {
                continue;
            }
            for (j, dj) in d.coeffs.iter().enumerate() {
                rem[k + j] = &rem[k + j] - &(&c * dj);
            }
            quot[k] = c;
        }
        (XPoly::new(quot), XPoly::new(rem))
    }

    fn monic(&self) -> XPoly {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&self.leading().inv())
    }

    fn gcd(a: &XPoly, b: &XPoly) -> XPoly {
        let (mut x, mut y) = (a.monic(), b.monic());
        while !y.is_zero() {
            let r = x.div_rem(&y).1;
            x = y;
            y = r.monic();
        }
        x
    }

    fn eval(&self, x: &QValue) -> QValue {
        let mut acc = QValue::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }
}

/// `X^xshift · num / den` with `den = rest · ∏ monic(atom)^e`.
///
/// Canonical: `gcd(num, den) = 1`, `den` monic, neither divisible by X. Keeping the
/// denominator as atoms means sums and products only need exact division by known
/// irreducibles. `rest` is 1 unless an inverse moved an unfactored numerator there;
/// only then is a general gcd in ℚ(u)[X] needed, and its cost grows quickly with degree.
#[derive(Clone, Debug)]
struct Expanded {
    xshift: i64,
    num: XPoly,
    den_atoms: BTreeMap<Atom, u32>,
    rest: XPoly,
}

impl PartialEq for Expanded {
    fn eq(&self, other: &Self) -> bool {
        // The split of den between atoms and rest is not unique; den itself is.
        self.xshift == other.xshift && self.num == other.num && self.den() == other.den()
    }
}

impl Eq for Expanded {}

impl Expanded {
    fn zero() -> Self {
        Expanded { xshift: 0, num: XPoly { coeffs: Vec::new() }, den_atoms: BTreeMap::new(), rest: XPoly::one() }
    }

    fn den(&self) -> XPoly {
        let mut d = self.rest.clone();
        for (atom, &e) in &self.den_atoms {
            let p = atom.monic_poly();
            for _ in 0..e {
                d = d.mul(&p);
            }
        }
        d
    }

    /// Restores the invariants; `rest` must be monic and not divisible by X.
    fn normalized(xshift: i64, num: XPoly, mut den_atoms: BTreeMap<Atom, u32>, rest: XPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let nl = num.low_order();
        let mut num = num.shift_down(nl);
        for (atom, e) in den_atoms.iter_mut() {
            let p = atom.monic_poly();
            while *e > 0 && num.degree() >= p.degree() {
                let (q, r) = num.div_rem(&p);
                if !r.is_zero() {
                    break;
                }
                num = q;
                *e -= 1;
            }
        }
        den_atoms.retain(|_, e| *e > 0);
        let mut rest = rest;
        if rest.degree() > 0 && num.degree() > 0 {
            let g = XPoly::gcd(&num, &rest);
            if g.degree() > 0 {
                num = num.div_rem(&g).0;
                rest = rest.div_rem(&g).0;
            }
        }
        Expanded { xshift: xshift + nl as i64, num, den_atoms, rest }
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn add(&self, rhs: &Expanded) -> Expanded {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        // Common denominator: the atom-wise maximum times lcm(rest_a, rest_b).
        let mut den_atoms = self.den_atoms.clone();
        for (atom, &e) in &rhs.den_atoms {
            let slot = den_atoms.entry(*atom).or_insert(0);
            *slot = (*slot).max(e);
        }
        let cofactor = |own: &BTreeMap<Atom, u32>| {
            let mut m = XPoly::one();
            for (atom, &e) in &den_atoms {
                let p = atom.monic_poly();
                for _ in own.get(atom).copied().unwrap_or(0)..e {
                    m = m.mul(&p);
                }
            }
            m
        };
        let (mut ma, mut mb) = (cofactor(&self.den_atoms), cofactor(&rhs.den_atoms));
        let rest = if self.rest.degree() == 0 && rhs.rest.degree() == 0 {
            XPoly::one()
        } else {
            let g = XPoly::gcd(&self.rest, &rhs.rest);
            let (ra, rb) = (self.rest.div_rem(&g).0, rhs.rest.div_rem(&g).0);
            ma = ma.mul(&rb);
            mb = mb.mul(&ra);
            self.rest.mul(&rb)
        };
        let lo = self.xshift.min(rhs.xshift);
        let a = self.num.shift_up((self.xshift - lo) as usize).mul(&ma);
        let b = rhs.num.shift_up((rhs.xshift - lo) as usize).mul(&mb);
        Expanded::normalized(lo, a.add(&b), den_atoms, rest)
    }

    fn mul(&self, rhs: &Expanded) -> Expanded {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut den_atoms = self.den_atoms.clone();
        for (atom, &e) in &rhs.den_atoms {
            *den_atoms.entry(*atom).or_insert(0) += e;
        }
        Expanded::normalized(self.xshift + rhs.xshift, self.num.mul(&rhs.num), den_atoms, self.rest.mul(&rhs.rest))
    }

    fn try_inv(&self) -> Result<Expanded, ExactError> {
        if self.is_zero() {
            return Err(ExactError::NotAValue);
        }
        // Already coprime; only the normalization moves.
        let lc_inv = self.num.leading().inv();
        Ok(Expanded {
            xshift: -self.xshift,
            num: self.den().scale(&lc_inv),
            den_atoms: BTreeMap::new(),
            rest: self.num.scale(&lc_inv),
        })
    }

    fn substitute(&self, s0: HalfInt) -> Specialized<QValue> {
        let x = QValue::u_pow(-s0.twice());
        let d = self.den().eval(&x);
        if d.is_zero() {
            // Coprime over ℚ(u): the numerator cannot vanish too.
            return Specialized::Pole;
        }
        Specialized::Finite(&(&self.num.eval(&x) / &d) * &x.pow(self.xshift))
    }

    fn write_poly(f: &mut fmt::Formatter<'_>, p: &XPoly, shift: i64) -> fmt::Result {
        let mut first = true;
        for (j, c) in p.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})*X^({})", shift + j as i64)?;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Display for Expanded {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let den = self.den();
        if den.degree() == 0 {
            return Expanded::write_poly(f, &self.num, self.xshift);
        }
        write!(f, "(")?;
        Expanded::write_poly(f, &self.num, self.xshift)?;
        write!(f, ") / (")?;
        Expanded::write_poly(f, &den, 0)?;
        write!(f, ")")
    }
}

#[derive(Clone, Debug)]
enum Repr {
    Factored(Factored),
    Expanded(Expanded),
}

/// A canonical element of ℚ(u, X).
#[derive(Clone, Debug)]
pub struct SValue {
    repr: Repr,
}

impl SValue {
    pub fn zero() -> Self {
        Self::from_q(QValue::zero())
    }

    pub fn one() -> Self {
        Self::from_q(QValue::one())
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_q(QValue::from_int(c))
    }

    pub fn from_q(c: QValue) -> Self {
        SValue { repr: Repr::Factored(Factored::scalar(c)) }
    }

    /// `X^k = q^(-k·s)`.
    pub fn x_pow(k: i64) -> Self {
        SValue { repr: Repr::Factored(Factored { unit: QValue::one(), xpow: k, atoms: BTreeMap::new() }) }
    }

    /// `u^ue · X^xe`.
    pub fn monomial(ue: i64, xe: i64) -> Self {
        SValue {
            repr: Repr::Factored(Factored { unit: QValue::u_pow(ue), xpow: xe, atoms: BTreeMap::new() }),
        }
    }

    /// `1 - c·u^ue·X^xe` for `c = ±1`, split into cyclotomic atoms.
    pub fn binomial(c: i8, ue: i64, xe: i64) -> Self {
        assert!(c == 1 || c == -1, "binomial sign must be ±1");
        if xe == 0 {
            let t = QValue::u_pow(ue);
            let v = if c == 1 { &QValue::one() - &t } else { &QValue::one() + &t };
            return Self::from_q(v);
        }
        let mut unit = QValue::one();
        let mut xpow = 0;
        let (mut ue, mut xe) = (ue, xe);
        if xe < 0 {
            // 1 - c·m = (-c·m)(1 - c·m⁻¹) for c² = 1.
            unit = QValue::monomial(BigRational::from_integer((-c as i64).into()), ue);
            xpow = xe;
            ue = -ue;
            xe = -xe;
        }
        let g = gcd(ue.abs(), xe);
        let (a, b) = (ue / g, xe / g);
        let g = u32::try_from(g).expect("binomial exponent too large");
        let mut atoms = BTreeMap::new();
        if c == 1 {
            // 1 - x^g = -∏_{d | g} Φ_d(x)
            unit = -unit;
            for d in divisors(g) {
                atoms.insert(Atom { d, a, b }, 1);
            }
        } else {
            for d in divisors(2 * g).filter(|d| g % d != 0) {
                atoms.insert(Atom { d, a, b }, 1);
            }
        }
        SValue { repr: Repr::Factored(Factored { unit, xpow, atoms }) }
    }

    /// The Laurent polynomial `Σ c_j X^(xshift + j)` with ℚ(u) coefficients.
    pub fn from_x_laurent(xshift: i64, coeffs: Vec<QValue>) -> Self {
        let e = Expanded::normalized(xshift, XPoly::new(coeffs), BTreeMap::new(), XPoly::one());
        SValue { repr: Repr::Expanded(e) }.simplified()
    }

    /// Back to factored form when the numerator is a monomial over known atoms.
    fn simplified(self) -> Self {
        if let Repr::Expanded(e) = &self.repr {
            if e.is_zero() {
                return Self::zero();
            }
            if e.num.degree() == 0 && e.rest.degree() == 0 {
                // monic(atom) = u^(-lead)·atom
                let lead: i64 = e.den_atoms.iter().map(|(a, &k)| a.leading_u_exponent() * k as i64).sum();
                let unit = &e.num.leading() * &QValue::u_pow(lead);
                let atoms = e.den_atoms.iter().map(|(a, &k)| (*a, -(k as i64))).collect();
                return SValue { repr: Repr::Factored(Factored { unit, xpow: e.xshift, atoms }) };
            }
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        match &self.repr {
            Repr::Factored(f) => f.is_zero(),
            Repr::Expanded(e) => e.is_zero(),
        }
    }

    pub fn is_factored(&self) -> bool {
        matches!(self.repr, Repr::Factored(_))
    }

    /// The value when it does not depend on X.
    pub fn as_q(&self) -> Option<QValue> {
        match &self.repr {
            Repr::Factored(f) => (f.xpow == 0 && f.atoms.is_empty()).then(|| f.unit.clone()),
            Repr::Expanded(_) => None,
        }
    }

    fn expanded(&self) -> Expanded {
        match &self.repr {
            Repr::Factored(f) => f.expand(),
            Repr::Expanded(e) => e.clone(),
        }
    }

    pub fn try_inv(&self) -> Result<Self, ExactError> {
        match &self.repr {
            Repr::Factored(f) => {
                if f.is_zero() {
                    return Err(ExactError::NotAValue);
                }
                Ok(SValue { repr: Repr::Factored(f.pow(-1)) })
            }
            Repr::Expanded(e) => Ok(SValue { repr: Repr::Expanded(e.try_inv()?) }),
        }
    }

    /// Panics on zero; use [`SValue::try_inv`] when zero is possible.
    pub fn inv(&self) -> Self {
        self.try_inv().expect("inverse of zero")
    }

    pub fn pow(&self, e: i64) -> Self {
        match &self.repr {
            Repr::Factored(f) if !f.is_zero() => SValue { repr: Repr::Factored(f.pow(e)) },
            _ => {
                let base = if e < 0 { self.inv() } else { self.clone() };
                (0..e.abs()).fold(SValue::one(), |acc, _| &acc * &base)
            }
        }
    }

    /// Specialize `X = q^(-s0)`; a vanishing denominator is reported as a pole.
    pub fn substitute(&self, s0: HalfInt) -> Specialized<QValue> {
        match &self.repr {
            Repr::Factored(f) => f.substitute(s0),
            Repr::Expanded(e) => e.substitute(s0),
        }
    }

    /// Limit as `s → +∞` along the reals, i.e. `X → 0`.
    pub fn limit_at_infinity(&self) -> Specialized<QValue> {
        let e = self.expanded();
        if e.is_zero() || e.xshift > 0 {
            return Specialized::Finite(QValue::zero());
        }
        if e.xshift < 0 {
            return Specialized::Pole;
        }
        Specialized::Finite(&e.num.coeffs[0] / &e.den().coeffs[0])
    }

    /// The factored form, when available, as `(unit, X-power, atoms)`.
    pub fn factors(&self) -> Option<(QValue, i64, Vec<(Atom, i64)>)> {
        match &self.repr {
            Repr::Factored(f) => Some((f.unit.clone(), f.xpow, f.atoms.iter().map(|(a, e)| (*a, *e)).collect())),
            Repr::Expanded(_) => None,
        }
    }
}

impl PartialEq for SValue {
    fn eq(&self, other: &Self) -> bool {
        match (&self.repr, &other.repr) {
            (Repr::Factored(a), Repr::Factored(b)) => a == b,
            _ => self.expanded() == other.expanded(),
        }
    }
}

impl Eq for SValue {}

impl fmt::Display for SValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(c) = self.as_q() {
            return c.fmt(f);
        }
        self.expanded().fmt(f)
    }
}

impl Mul for &SValue {
    type Output = SValue;
    fn mul(self, rhs: &SValue) -> SValue {
        match (&self.repr, &rhs.repr) {
            (Repr::Factored(a), Repr::Factored(b)) => SValue { repr: Repr::Factored(a.mul(b)) },
            _ if self.is_zero() || rhs.is_zero() => SValue::zero(),
            _ => SValue { repr: Repr::Expanded(self.expanded().mul(&rhs.expanded())) }.simplified(),
        }
    }
}

impl Add for &SValue {
    type Output = SValue;
    fn add(self, rhs: &SValue) -> SValue {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if let (Some(a), Some(b)) = (self.as_q(), rhs.as_q()) {
            return SValue::from_q(&a + &b);
        }
        SValue { repr: Repr::Expanded(self.expanded().add(&rhs.expanded())) }.simplified()
    }
}

impl Neg for &SValue {
    type Output = SValue;
    fn neg(self) -> SValue {
        self * &SValue::from_int(-1)
    }
}

impl Sub for &SValue {
    type Output = SValue;
    fn sub(self, rhs: &SValue) -> SValue {
        self + &(-rhs)
    }
}

impl Div for &SValue {
    type Output = SValue;
    fn div(self, rhs: &SValue) -> SValue {
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
forward_owned!(SValue, Add add, Sub sub, Mul mul, Div div);

impl Neg for SValue {
    type Output = SValue;
    fn neg(self) -> SValue {
        -&self
    }
}

impl From<QValue> for SValue {
    fn from(c: QValue) -> Self {
        SValue::from_q(c)
    }
}

impl std::iter::Product for SValue {
    fn product<I: Iterator<Item = SValue>>(iter: I) -> SValue {
        iter.fold(SValue::one(), |a, b| a * b)
    }
}
