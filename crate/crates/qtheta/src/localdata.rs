//! Local field parameters, quadratic characters, ε-Hermitian spaces over the quaternion
//! division algebra, and almost-equal-rank dual pairs.

use crate::exactring::{HalfInt, QValue};
use crate::{Error, Result};
use std::fmt;

/// The residue field size `q` stays formal; only `|2|_F = q^(-e)` is recorded.
/// The additive character always has conductor 0.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct FieldParams {
    pub e: u32,
}

impl FieldParams {
    pub fn new(e: u32) -> Self {
        FieldParams { e }
    }

    /// `|2|_F^h = q^(-e·h)`; the u-exponent `-e·2h` is always an integer.
    pub fn two_pow(&self, h: HalfInt) -> QValue {
        QValue::u_pow(-(self.e as i64) * h.twice())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CharKind {
    Trivial,
    Unramified,
    Ramified,
}

impl CharKind {
    pub fn name(self) -> &'static str {
        match self {
            CharKind::Trivial => "trivial",
            CharKind::Unramified => "unramified",
            CharKind::Ramified => "ramified",
        }
    }

    pub fn parse(s: &str) -> Option<CharKind> {
        match s {
            "trivial" => Some(CharKind::Trivial),
            "unramified" | "unramified_nontrivial" => Some(CharKind::Unramified),
            "ramified" => Some(CharKind::Ramified),
            _ => None,
        }
    }
}

/// A quadratic character of F^×.
///
/// A ramified character may be twisted by the unramified quadratic character; the twist
/// keeps `χ(-1)` and the conductor, and multiplies the root number by `(-1)^a`. The root
/// number symbol of a twisted character is the one of its untwisted base.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadraticCharacter {
    kind: CharKind,
    sign: i8,
    a: u32,
    twisted: bool,
    label: Option<String>,
}

impl QuadraticCharacter {
    pub fn trivial() -> Self {
        QuadraticCharacter { kind: CharKind::Trivial, sign: 1, a: 0, twisted: false, label: None }
    }

    pub fn unramified() -> Self {
        QuadraticCharacter { kind: CharKind::Unramified, sign: 1, a: 0, twisted: false, label: None }
    }

    pub fn ramified(sign: i8, a: u32) -> Result<Self> {
        if sign != 1 && sign != -1 {
            return Err(Error::Invalid(format!("chi(-1) must be +1 or -1, got {sign}")));
        }
        if a == 0 {
            return Err(Error::Invalid("a ramified character has conductor exponent a >= 1".into()));
        }
        Ok(QuadraticCharacter { kind: CharKind::Ramified, sign, a, twisted: false, label: None })
    }

    /// Checked constructor from the flat descriptor fields.
    pub fn from_parts(kind: CharKind, sign: i8, a: u32) -> Result<Self> {
        match kind {
            CharKind::Ramified => Self::ramified(sign, a),
            _ if sign != 1 || a != 0 => Err(Error::Invalid(format!(
                "an unramified character has a = 0 and chi(-1) = +1, got a = {a}, chi(-1) = {sign}"
            ))),
            CharKind::Trivial => Ok(Self::trivial()),
            CharKind::Unramified => Ok(Self::unramified()),
        }
    }

    /// Names the root-number symbol; characters with equal data and label share it.
    pub fn with_label(mut self, label: &str) -> Self {
        self.label = Some(label.to_string());
        self
    }

    pub fn kind(&self) -> CharKind {
        self.kind
    }

    /// `χ(-1)`.
    pub fn sign(&self) -> i8 {
        self.sign
    }

    pub fn conductor(&self) -> u32 {
        self.a
    }

    pub fn is_trivial(&self) -> bool {
        self.kind == CharKind::Trivial
    }

    pub fn is_ramified(&self) -> bool {
        self.kind == CharKind::Ramified
    }

    pub fn is_twisted(&self) -> bool {
        self.twisted
    }

    /// `χ(ϖ)` for unramified characters.
    pub fn at_uniformizer(&self) -> Option<i8> {
        match self.kind {
            CharKind::Trivial => Some(1),
            CharKind::Unramified => Some(-1),
            CharKind::Ramified => None,
        }
    }

    /// Id of the root-number symbol `ε(1/2, χ, ψ)`; `None` when the root number is 1.
    pub fn eps_id(&self) -> Option<String> {
        if !self.is_ramified() {
            return None;
        }
        let sign = if self.sign == 1 { '+' } else { '-' };
        Some(match &self.label {
            Some(l) => format!("{l}[a={},{sign}]", self.a),
            None => format!("chi[a={},{sign}]", self.a),
        })
    }

    /// The product character; at most one factor may be ramified unless both share their base.
    pub fn mul(&self, other: &QuadraticCharacter) -> Result<QuadraticCharacter> {
        use CharKind::*;
        Ok(match (self.kind, other.kind) {
            (Trivial, _) => other.clone(),
            (_, Trivial) => self.clone(),
            (Unramified, Unramified) => Self::trivial(),
            (Unramified, Ramified) => QuadraticCharacter { twisted: !other.twisted, ..other.clone() },
            (Ramified, Unramified) => QuadraticCharacter { twisted: !self.twisted, ..self.clone() },
            (Ramified, Ramified) => {
                if self.eps_id() != other.eps_id() {
                    return Err(Error::Invalid(format!(
                        "product of two distinct ramified characters {self} and {other} is not modeled"
                    )));
                }
                if self.twisted == other.twisted {
                    Self::trivial()
                } else {
                    Self::unramified()
                }
            }
        })
    }

    /// Flat key-value descriptor.
    pub fn params(&self) -> Vec<(&'static str, String)> {
        let mut p = vec![
            ("chi_kind", self.kind.name().to_string()),
            ("chi_sign", self.sign.to_string()),
            ("a", self.a.to_string()),
        ];
        if self.twisted {
            p.push(("twisted", "1".to_string()));
        }
        p
    }
}

impl fmt::Display for QuadraticCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            CharKind::Trivial => write!(f, "1"),
            CharKind::Unramified => write!(f, "chi_ur"),
            CharKind::Ramified => {
                write!(f, "{}", self.eps_id().expect("ramified"))?;
                if self.twisted {
                    write!(f, "*chi_ur")?;
                }
                Ok(())
            }
        }
    }
}

/// An n-dimensional ε-Hermitian space over the quaternion division algebra.
///
/// `form_sign = +1` is the Hermitian side, whose discriminant character is trivial;
/// `form_sign = -1` is the skew-Hermitian side carrying its discriminant character.
/// `v` is the valuation of the reduced norm of a Gram matrix: `|N(R(e))| = q^(-v)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HermitianSpace {
    form_sign: i8,
    n: u32,
    r: u32,
    n0: u32,
    chi: QuadraticCharacter,
    v: i64,
    field: FieldParams,
}

/// The anisotropic kernel dimension forced by `(form_sign, n, χ)`.
pub fn kernel_dimension(form_sign: i8, n: u32, chi: &QuadraticCharacter) -> Result<u32> {
    match form_sign {
        1 => {
            if !chi.is_trivial() {
                return Err(Error::Invalid(format!(
                    "Hermitian side (form_sign = +1) carries the trivial character, got {chi}"
                )));
            }
            Ok(n % 2)
        }
        -1 => Ok(match (n % 2 == 0, chi.is_trivial()) {
            (true, true) => 0,
            (false, false) => 1,
            (true, false) => 2,
            (false, true) => 3,
        }),
        s => Err(Error::Invalid(format!("form_sign must be +1 or -1, got {s}"))),
    }
}

/// Validated space with `n0` and `r` derived from `(form_sign, n, χ)`.
pub fn make_space(form_sign: i8, n: u32, chi: QuadraticCharacter, v: i64, field: FieldParams) -> Result<HermitianSpace> {
    let n0 = kernel_dimension(form_sign, n, &chi)?;
    if n0 > n {
        return Err(Error::Invalid(format!(
            "skew-Hermitian side: n0 = 3 needs n odd with trivial character and n >= 3, got n = {n}"
        )));
    }
    Ok(HermitianSpace { form_sign, n, r: (n - n0) / 2, n0, chi, v, field })
}

/// Like [`make_space`], additionally checking a requested kernel dimension.
pub fn make_space_with_kernel(
    form_sign: i8,
    n: u32,
    chi: QuadraticCharacter,
    v: i64,
    field: FieldParams,
    n0: u32,
) -> Result<HermitianSpace> {
    let space = make_space(form_sign, n, chi, v, field)?;
    if space.n0 == n0 {
        return Ok(space);
    }
    let rule = match (form_sign, n0) {
        (1, _) => "Hermitian side: n0 = n mod 2 (n0 <= 1)",
        (_, 0) => "skew-Hermitian side: n0 = 0 iff n even and chi trivial",
        (_, 1) => "skew-Hermitian side: n0 = 1 iff n odd and chi nontrivial",
        (_, 2) => "skew-Hermitian side: n0 = 2 iff n even and chi nontrivial",
        (_, 3) => "skew-Hermitian side: n0 = 3 iff n odd and chi trivial",
        _ => "skew-Hermitian side: n0 <= 3",
    };
    Err(Error::Invalid(format!("requested n0 = {n0} for n = {n}, chi = {}: violates {rule}", space.chi)))
}

impl HermitianSpace {
    pub fn form_sign(&self) -> i8 {
        self.form_sign
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Witt index.
    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn n0(&self) -> u32 {
        self.n0
    }

    pub fn chi(&self) -> &QuadraticCharacter {
        &self.chi
    }

    pub fn v(&self) -> i64 {
        self.v
    }

    pub fn field(&self) -> FieldParams {
        self.field
    }

    pub fn is_anisotropic(&self) -> bool {
        self.r == 0
    }

    /// `ρ = n - ε/2` with `ε = -form_sign`.
    pub fn rho(&self) -> HalfInt {
        HalfInt::from_twice(2 * self.n as i64 + self.form_sign as i64)
    }

    /// `|N(R(e))|^h = q^(-v·h)`.
    pub fn gram_norm_pow(&self, h: HalfInt) -> QValue {
        QValue::u_pow(-self.v * h.twice())
    }

    pub fn with_gram(&self, v: i64) -> HermitianSpace {
        HermitianSpace { v, ..self.clone() }
    }

    pub fn with_field(&self, field: FieldParams) -> HermitianSpace {
        HermitianSpace { field, ..self.clone() }
    }

    /// Flat key-value descriptor `form_sign, n, chi_kind, chi_sign, a, v` (plus `e`).
    pub fn params(&self) -> Vec<(&'static str, String)> {
        let mut p = vec![("form_sign", self.form_sign.to_string()), ("n", self.n.to_string())];
        p.extend(self.chi.params());
        p.push(("v", self.v.to_string()));
        p.push(("e", self.field.e.to_string()));
        p
    }
}

/// A dual pair `(V, W)`: W is the `(-ε)`-Hermitian side, V the ε-Hermitian side.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualPair {
    pub w: HermitianSpace,
    pub v: HermitianSpace,
    pub epsilon: i8,
    pub l: i64,
}

impl DualPair {
    pub fn new(w: HermitianSpace, v: HermitianSpace) -> Result<Self> {
        if w.form_sign == v.form_sign {
            return Err(Error::Invalid("the two members of a dual pair have opposite form signs".into()));
        }
        let epsilon = v.form_sign;
        let l = 2 * w.n as i64 - 2 * v.n as i64 - epsilon as i64;
        Ok(DualPair { w, v, epsilon, l })
    }

    pub fn almost_equal_rank(&self) -> bool {
        self.l == 1
    }

    /// `m = dim V`.
    pub fn m(&self) -> u32 {
        self.v.n
    }

    /// `n = dim W`.
    pub fn n(&self) -> u32 {
        self.w.n
    }

    pub fn rho(&self) -> HalfInt {
        self.w.rho()
    }

    /// `V♭`: the ε-Hermitian space of dimension `m + 1` with the same character.
    pub fn dual_space(&self) -> Result<HermitianSpace> {
        make_space(self.v.form_sign, self.v.n + 1, self.v.chi.clone(), self.v.v, self.v.field)
    }

    pub fn params(&self) -> Vec<(String, String)> {
        let mut p: Vec<(String, String)> = vec![("eps".into(), self.epsilon.to_string())];
        p.extend(self.w.params().into_iter().map(|(k, v)| (format!("W.{k}"), v)));
        p.extend(self.v.params().into_iter().filter(|(k, _)| *k != "e").map(|(k, v)| (format!("V.{k}"), v)));
        p
    }
}

/// The l = 1 partner of `W`: `dim V = (2n - 1 - ε)/2` with `ε = -W.form_sign`.
pub fn companion_space(w: &HermitianSpace, chi_v: QuadraticCharacter, v_v: i64) -> Result<DualPair> {
    let epsilon = -(w.form_sign as i64);
    let twice_m = 2 * w.n as i64 - 1 - epsilon;
    if twice_m < 0 || twice_m % 2 != 0 {
        return Err(Error::Invalid(format!(
            "no l = 1 companion: dim V = (2*{} - 1 - ({epsilon}))/2 is not a nonnegative integer",
            w.n
        )));
    }
    let v = make_space(epsilon as i8, (twice_m / 2) as u32, chi_v, v_v, w.field)?;
    DualPair::new(w.clone(), v)
}

/// The member `dim = 2t + m0` of a Witt tower.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WittTowerPoint {
    pub m0: u32,
    pub t: u32,
}

impl WittTowerPoint {
    pub fn dim(&self) -> u32 {
        2 * self.t + self.m0
    }
}

/// `m(π) + m†(π) = 2n + 2 - ε`.
pub fn conservation_check(m_first: u32, m_dagger_first: u32, n: u32, epsilon: i8) -> bool {
    m_first as i64 + m_dagger_first as i64 == 2 * n as i64 + 2 - epsilon as i64
}

/// The explicit anisotropic-kernel Gram matrices used with odd residue characteristic.
///
/// Entries are `α` (a unit), `ϖ_D^(-1)` and `β^(-1)` with `β² = α²ϖ_D²`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum R0Fixture {
    HermitianOne,
    SkewAlpha,
    SkewPiInv,
    SkewTwoUnramified,
    SkewTwoRamified,
    SkewThree,
}

impl R0Fixture {
    pub const ALL: [R0Fixture; 6] = [
        R0Fixture::HermitianOne,
        R0Fixture::SkewAlpha,
        R0Fixture::SkewPiInv,
        R0Fixture::SkewTwoUnramified,
        R0Fixture::SkewTwoRamified,
        R0Fixture::SkewThree,
    ];

    pub fn name(self) -> &'static str {
        match self {
            R0Fixture::HermitianOne => "1",
            R0Fixture::SkewAlpha => "alpha",
            R0Fixture::SkewPiInv => "pi_D^-1",
            R0Fixture::SkewTwoUnramified => "diag(pi_D^-1, alpha*pi_D^-1)",
            R0Fixture::SkewTwoRamified => "diag(alpha, pi_D^-1)",
            R0Fixture::SkewThree => "diag(alpha, pi_D^-1, beta^-1)",
        }
    }

    pub fn form_sign(self) -> i8 {
        if self == R0Fixture::HermitianOne {
            1
        } else {
            -1
        }
    }

    pub fn n0(self) -> u32 {
        match self {
            R0Fixture::HermitianOne | R0Fixture::SkewAlpha | R0Fixture::SkewPiInv => 1,
            R0Fixture::SkewTwoUnramified | R0Fixture::SkewTwoRamified => 2,
            R0Fixture::SkewThree => 3,
        }
    }

    /// Kind of `χ_W`; a ramified kernel admits either sign.
    pub fn chi_kind(self) -> CharKind {
        match self {
            R0Fixture::HermitianOne | R0Fixture::SkewThree => CharKind::Trivial,
            R0Fixture::SkewAlpha | R0Fixture::SkewTwoUnramified => CharKind::Unramified,
            R0Fixture::SkewPiInv | R0Fixture::SkewTwoRamified => CharKind::Ramified,
        }
    }

    /// `ord_F N(R0)`.
    pub fn gram_val(self) -> i64 {
        match self {
            R0Fixture::HermitianOne | R0Fixture::SkewAlpha => 0,
            R0Fixture::SkewPiInv | R0Fixture::SkewTwoRamified => -1,
            R0Fixture::SkewTwoUnramified | R0Fixture::SkewThree => -2,
        }
    }

    /// Fixture for a kernel of the given shape, if one is shipped.
    pub fn for_kernel(form_sign: i8, n0: u32, kind: CharKind) -> Option<R0Fixture> {
        Self::ALL.into_iter().find(|f| f.form_sign() == form_sign && f.n0() == n0 && f.chi_kind() == kind)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f0() -> FieldParams {
        FieldParams::new(0)
    }

    #[test]
    fn classification_examples() {
        let w = make_space(-1, 2, QuadraticCharacter::trivial(), 0, f0()).unwrap();
        assert_eq!((w.n0(), w.r()), (0, 1));
        let w = make_space(-1, 3, QuadraticCharacter::trivial(), -2, f0()).unwrap();
        assert_eq!((w.n0(), w.r()), (3, 0));
        let w = make_space(1, 5, QuadraticCharacter::trivial(), 0, f0()).unwrap();
        assert_eq!((w.n0(), w.r()), (1, 2));
    }

    #[test]
    fn classification_violations_are_named() {
        let err = make_space_with_kernel(-1, 2, QuadraticCharacter::trivial(), 0, f0(), 2).unwrap_err();
        assert!(err.to_string().contains("n0 = 2 iff n even and chi nontrivial"), "{err}");
        assert!(make_space(1, 2, QuadraticCharacter::unramified(), 0, f0()).is_err());
        assert!(make_space(-1, 1, QuadraticCharacter::trivial(), 0, f0()).is_err());
        assert!(QuadraticCharacter::ramified(1, 0).is_err());
        assert!(QuadraticCharacter::from_parts(CharKind::Unramified, -1, 0).is_err());
    }

    #[test]
    fn kernel_map_agrees_with_constructor_on_grid() {
        let chis = [
            QuadraticCharacter::trivial(),
            QuadraticCharacter::unramified(),
            QuadraticCharacter::ramified(1, 1).unwrap(),
            QuadraticCharacter::ramified(-1, 1).unwrap(),
        ];
        for n in 0..=12u32 {
            for chi in &chis {
                let expected = match (n % 2, chi.is_trivial()) {
                    (0, true) => 0,
                    (1, false) => 1,
                    (0, false) => 2,
                    _ => 3,
                };
                match make_space(-1, n, chi.clone(), 0, f0()) {
                    Ok(w) => {
                        assert_eq!(w.n0(), expected);
                        assert_eq!(w.n0() + 2 * w.r(), n);
                    }
                    Err(_) => assert!(expected > n),
                }
            }
        }
    }

    #[test]
    fn companion_examples() {
        let w = make_space(1, 1, QuadraticCharacter::trivial(), 0, f0()).unwrap();
        let p = companion_space(&w, QuadraticCharacter::unramified(), 0).unwrap();
        assert_eq!((p.epsilon, p.m(), p.l), (-1, 1, 1));
        assert!(companion_space(&w, QuadraticCharacter::trivial(), 0).is_err());
        let w = make_space(-1, 2, QuadraticCharacter::trivial(), 0, f0()).unwrap();
        let p = companion_space(&w, QuadraticCharacter::trivial(), 0).unwrap();
        assert_eq!((p.epsilon, p.m(), p.l), (1, 1, 1));
        let vb = p.dual_space().unwrap();
        assert_eq!(vb.n(), 2);
        assert_eq!(vb.chi(), p.v.chi());
        let w0 = make_space(-1, 0, QuadraticCharacter::trivial(), 0, f0()).unwrap();
        assert!(companion_space(&w0, QuadraticCharacter::trivial(), 0).is_err());
    }

    #[test]
    fn conservation_examples() {
        assert!(conservation_check(2, 3, 2, 1));
        assert!(conservation_check(0, 7, 2, -1));
        assert!(!conservation_check(1, 1, 2, 1));
    }

    #[test]
    fn character_products() {
        let ur = QuadraticCharacter::unramified();
        let r = QuadraticCharacter::ramified(-1, 1).unwrap();
        assert!(ur.mul(&ur).unwrap().is_trivial());
        let t = r.mul(&ur).unwrap();
        assert!(t.is_twisted() && t.sign() == -1 && t.eps_id() == r.eps_id());
        assert_eq!(t.mul(&r).unwrap(), ur);
        assert!(r.mul(&r).unwrap().is_trivial());
        let other = QuadraticCharacter::ramified(1, 1).unwrap();
        assert!(r.mul(&other).is_err());
    }

    /// `ord_D` of each diagonal entry, read off from the defining relations.
    fn entry_valuations(f: R0Fixture) -> Vec<i64> {
        let alpha = 0; // a unit
        let pi_inv = -1;
        // β² = α²ϖ_D² forces ord_D(β) = ord_D(α) + ord_D(ϖ_D).
        let beta_inv = -(alpha + 1);
        match f {
            R0Fixture::HermitianOne => vec![0],
            R0Fixture::SkewAlpha => vec![alpha],
            R0Fixture::SkewPiInv => vec![pi_inv],
            R0Fixture::SkewTwoUnramified => vec![pi_inv, alpha + pi_inv],
            R0Fixture::SkewTwoRamified => vec![alpha, pi_inv],
            R0Fixture::SkewThree => vec![alpha, pi_inv, beta_inv],
        }
    }

    #[test]
    fn r0_fixtures_match_entrywise_norm_valuation() {
        for f in R0Fixture::ALL {
            let entries = entry_valuations(f);
            assert_eq!(entries.len() as u32, f.n0());
            assert_eq!(entries.iter().sum::<i64>(), f.gram_val(), "{}", f.name());
        }
    }
}
