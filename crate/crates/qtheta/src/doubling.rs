//! Doubling-method constants: `m°(s)`, the intertwining constant `c`, the normalizing
//! factor `R`, the doubling γ-factor of the trivial representation, the local zeta value
//! `α₁(W)` along every available route, and the unramified zeta integral.
//!
//! All s-dependent quantities are [`SValue`]s in `X = q^(-s)`; values at a point are taken
//! only after the whole expression has been simplified.

use crate::abelian::{eps_half, gamma, gamma_product, l_factor, zeta};
use crate::exactring::{HalfInt, QConst, QValue, SArg, SConst, SValue, Specialized};
use crate::localdata::{CharKind, FieldParams, HermitianSpace, QuadraticCharacter};
use crate::volumes::{c1_volume, group_volume_anisotropic, kottwitz_sign, one_plus, prod};
use crate::{Error, Result};

fn s_plus(h: HalfInt) -> SArg {
    SArg::S.plus(h)
}

/// `2s + h`.
fn two_s_plus(h: HalfInt) -> SArg {
    SArg::new(2, h)
}

fn int(k: i64) -> HalfInt {
    HalfInt::int(k)
}

/// `n(n - 1/2)`.
fn n_n_minus_half(n: i64) -> HalfInt {
    HalfInt::from_twice(n * (2 * n - 1))
}

pub(crate) fn substitute(v: &SConst, s0: HalfInt, what: &str) -> Result<QConst> {
    match v.substitute(s0) {
        Specialized::Finite(c) => Ok(c),
        Specialized::Pole => Err(Error::Pole(format!("{what} at s = {s0}"))),
    }
}

pub(crate) fn substitute_value(v: &SValue, s0: HalfInt, what: &str) -> Result<QValue> {
    v.substitute(s0).finite().ok_or_else(|| Error::Pole(format!("{what} at s = {s0}")))
}

/// The Gindikin-Karpelevich factor `m°(s)` for the doubled space of an n-dimensional W
/// with `W.form_sign = minus_eps`.
pub fn m_circ(minus_eps: i8, n: u32, field: FieldParams) -> SValue {
    let n = n as i64;
    let head = SValue::from_q(field.two_pow(n_n_minus_half(n)));
    let ratio = |i: i64, shift: i64| zeta(two_s_plus(int(-2 * i))) / zeta(two_s_plus(int(2 * n - 4 * i - shift)));
    if minus_eps == 1 {
        let q = SValue::from_q(QValue::q_pow(-n * (n + 1) / 2));
        let edge = zeta(s_plus(HalfInt::from_twice(1 - 2 * n))) / zeta(s_plus(HalfInt::from_twice(2 * n + 1)));
        head * q * edge * (0..n).map(|i| ratio(i, 3)).product::<SValue>()
    } else {
        let q = SValue::from_q(QValue::q_pow(-n * (n - 1) / 2));
        head * q * (0..n).map(|i| ratio(i, 1)).product::<SValue>()
    }
}

/// `m°(ρ)` for W.
pub fn m_circ_at_rho(w: &HermitianSpace) -> Result<QValue> {
    substitute_value(&m_circ(w.form_sign(), w.n(), w.field()), w.rho(), "m°")
}

fn require_odd_residue(w: &HermitianSpace) -> Result<()> {
    match w.field().e {
        0 => Ok(()),
        e => Err(Error::EvenResidue(e)),
    }
}

/// The denominator `d^W(s)` of the unramified zeta integral.
pub fn d_w(w: &HermitianSpace) -> Result<SValue> {
    require_odd_residue(w)?;
    let n = w.n() as i64;
    Ok(if w.form_sign() == 1 {
        zeta(s_plus(HalfInt::from_twice(2 * n + 1)))
            * (1..=n / 2).map(|i| zeta(two_s_plus(int(2 * n + 1 - 4 * i)))).product::<SValue>()
    } else {
        (1..=(n + 1) / 2).map(|i| zeta(two_s_plus(int(2 * n + 3 - 4 * i)))).product()
    })
}

/// A polynomial in T with coefficients in ℚ(u), lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SelfReciprocalPoly {
    coeffs: Vec<QValue>,
}

impl SelfReciprocalPoly {
    pub fn coeffs(&self) -> &[QValue] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(QValue::is_one)
    }

    /// `S(T) = T^deg · S(1/T)`.
    pub fn is_self_reciprocal(&self) -> bool {
        self.coeffs.iter().eq(self.coeffs.iter().rev())
    }

    /// `S(q^(-s))`.
    pub fn at_x(&self) -> SValue {
        SValue::from_x_laurent(0, self.coeffs.clone())
    }
}

/// `S(T)` of the unramified zeta integral.
pub fn s_poly(w: &HermitianSpace) -> Result<SelfReciprocalPoly> {
    require_odd_residue(w)?;
    let coeffs = if is_quadratic_s_case(w) {
        vec![QValue::one(), QValue::u_pow(1) + QValue::u_pow(-1), QValue::one()]
    } else {
        vec![QValue::one()]
    };
    Ok(SelfReciprocalPoly { coeffs })
}

fn is_quadratic_s_case(w: &HermitianSpace) -> bool {
    w.form_sign() == -1 && w.n0() == 2 && w.chi().kind() == CharKind::Unramified
}

/// The degree `f_W` as displayed alongside the zeta integral.
pub fn f_w(w: &HermitianSpace) -> u32 {
    if is_quadratic_s_case(w) {
        1
    } else {
        0
    }
}

/// The auxiliary datum `A`: only `ord N(A₀)` and `χ_{A₀}` enter the constants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ADatum {
    pub norm_val: i64,
    pub chi_a: QuadraticCharacter,
}

impl ADatum {
    pub fn trivial() -> Self {
        ADatum { norm_val: 0, chi_a: QuadraticCharacter::trivial() }
    }
}

/// `ω_s(x)^(-1) = ω(x)^(-1)|x|^(-s)` for `ord x = val`.
fn omega_s_inv(omega: &QuadraticCharacter, val: i64) -> Result<SValue> {
    let c = omega.at_uniformizer().ok_or_else(|| {
        Error::Hypothesis(format!("omega must be trivial or unramified to evaluate omega(N(A0)), got {omega}"))
    })?;
    let sign = if c == -1 && val % 2 != 0 { -1 } else { 1 };
    Ok(SValue::from_int(sign) * SValue::x_pow(-val))
}

/// The intertwining constant `c(s, ω, A, ψ)`; `omega_four` is `ω(4) = ±1`.
pub fn c_factor(omega: &QuadraticCharacter, a: &ADatum, w: &HermitianSpace, omega_four: i8) -> Result<SConst> {
    let n = w.n() as i64;
    let e = w.field().e as i64;
    let omega_sq = omega.mul(omega)?;
    // |2|^(-2ns) = X^(-2en)
    let two = SValue::monomial(-(e * n_n_minus_half(n).twice()), -2 * e * n);
    let scalar = SValue::from_int(kottwitz_sign(w) as i64 * omega_four as i64) * omega_s_inv(omega, a.norm_val)? * two;
    let mut c = SConst::new(scalar) * gamma_product(w.n(), SArg::new(2, HalfInt::ZERO), int(-2), &omega_sq).inv();
    if w.form_sign() == 1 {
        c = c
            * gamma(s_plus(HalfInt::from_twice(1 - 2 * n)), omega, false).inv()
            * gamma(s_plus(HalfInt::HALF), &omega.mul(&a.chi_a)?, false)
            * eps_half(&a.chi_a).inv().lift();
    }
    Ok(c)
}

/// The normalizing factor `R(s, ω, A, ψ)` of the doubling γ-factor.
pub fn r_factor(omega: &QuadraticCharacter, a: &ADatum, w: &HermitianSpace) -> Result<SConst> {
    let base = SConst::new(omega_s_inv(omega, w.v() + a.norm_val)?);
    Ok(if w.form_sign() == 1 {
        base * gamma(s_plus(HalfInt::HALF), &omega.mul(&a.chi_a)?, false) * eps_half(&a.chi_a).inv().lift()
    } else {
        base * eps_half(w.chi()).lift()
    })
}

/// `γ^W(s + 1/2, 1_{G(W)} × 1, ψ)` as a function of s.
pub fn gamma_doubling_trivial(w: &HermitianSpace) -> SConst {
    let n = w.n() as i64;
    let triv = QuadraticCharacter::trivial();
    let base = |i: i64| gamma(s_plus(HalfInt::HALF + int(i)), &triv, false);
    if w.form_sign() == 1 {
        (-n..=n).map(base).product()
    } else {
        gamma(s_plus(HalfInt::HALF), w.chi(), false) * (-n + 1..n).map(base).product::<SConst>()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Alpha1Method {
    ClosedUnimodular,
    ClosedAnisotropic,
    ClosedGeneral,
    FunctionalEquation,
}

impl Alpha1Method {
    pub const ALL: [Alpha1Method; 4] = [
        Alpha1Method::ClosedUnimodular,
        Alpha1Method::ClosedAnisotropic,
        Alpha1Method::ClosedGeneral,
        Alpha1Method::FunctionalEquation,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Alpha1Method::ClosedUnimodular => "closed_unimodular",
            Alpha1Method::ClosedAnisotropic => "closed_anisotropic",
            Alpha1Method::ClosedGeneral => "closed_general",
            Alpha1Method::FunctionalEquation => "functional_equation",
        }
    }
}

/// `∏_{i=1}^n (1 + q^(-(2i-1)))`.
fn odd_product(n: i64) -> QValue {
    prod(1, n, |i| one_plus(1, 2 * i - 1))
}

/// `α₁(W) = Z(f°_ρ, ξ°)`.
pub fn alpha1(w: &HermitianSpace, method: Alpha1Method) -> Result<QConst> {
    match method {
        Alpha1Method::ClosedUnimodular => alpha1_unimodular(w),
        Alpha1Method::ClosedAnisotropic => alpha1_anisotropic(w),
        Alpha1Method::ClosedGeneral => alpha1_general(w),
        Alpha1Method::FunctionalEquation => alpha1_functional_equation(w),
    }
}

fn require_skew(w: &HermitianSpace, what: &str) -> Result<()> {
    if w.form_sign() != -1 {
        return Err(Error::Hypothesis(format!("{what} needs a skew-Hermitian W (form_sign = -1)")));
    }
    Ok(())
}

fn require_small_anisotropic(w: &HermitianSpace, what: &str) -> Result<()> {
    require_skew(w, what)?;
    if !w.is_anisotropic() || !(1..=3).contains(&w.n()) {
        return Err(Error::Hypothesis(format!("{what} needs an anisotropic W with 1 <= n <= 3, got n = {}, r = {}", w.n(), w.r())));
    }
    Ok(())
}

fn alpha1_unimodular(w: &HermitianSpace) -> Result<QConst> {
    let unimodular_kernel = w.form_sign() == 1 || w.n0() == 0 || (w.n0() == 1 && w.chi().kind() == CharKind::Unramified);
    if w.v() != 0 || !unimodular_kernel {
        return Err(Error::Hypothesis(format!(
            "closed_unimodular needs v = 0 and a kernel admitting a unimodular Gram matrix, got v = {}, n0 = {}, chi = {}",
            w.v(),
            w.n0(),
            w.chi()
        )));
    }
    let (n, n0, r) = (w.n() as i64, w.n0() as i64, w.r() as i64);
    let value = if w.form_sign() == 1 {
        w.field().two_pow(HalfInt::int(n * (2 * n + 1))) * QValue::q_pow(-n0 * n0 - (2 * n0 + 1) * r - 2 * r * r)
    } else {
        w.field().two_pow(HalfInt::int(n * (2 * n - 1))) * QValue::q_pow(-2 * r * n0 - 2 * r * r + r)
    };
    Ok(QConst::new(value * odd_product(n)))
}

fn alpha1_anisotropic(w: &HermitianSpace) -> Result<QConst> {
    require_small_anisotropic(w, "closed_anisotropic")?;
    let two = |k: i64| w.field().two_pow(int(k));
    let row = match w.n() {
        1 => two(1) * one_plus(1, 1),
        2 => two(6) * QValue::q_pow(-1) * one_plus(1, 1) * one_plus(1, 3),
        _ => two(15) * QValue::q_pow(-3) * one_plus(1, 1) * one_plus(1, 3) * one_plus(1, 5),
    };
    Ok(QConst::new(w.gram_norm_pow(-w.rho()) * row))
}

fn alpha1_general(w: &HermitianSpace) -> Result<QConst> {
    require_skew(w, "closed_general")?;
    let n = w.n() as i64;
    let rho = w.rho();
    let (f, c) = (n / 2, (n + 1) / 2);
    let value = w.field().two_pow(rho.scale(2 * n))
        * w.gram_norm_pow(-rho)
        * QValue::q_pow(-(2 * f * c - f))
        * odd_product(n);
    Ok(QConst::new(value))
}

fn alpha1_functional_equation(w: &HermitianSpace) -> Result<QConst> {
    require_small_anisotropic(w, "functional_equation")?;
    let n = w.n() as i64;
    let rho = w.rho();
    let bracket = gamma_product(w.n(), SArg::new(2, HalfInt::ZERO), int(-2), &QuadraticCharacter::trivial())
        * gamma_doubling_trivial(w).inv();
    let bracket = substitute(&bracket, rho, "FE bracket")?;
    let scalar = m_circ_at_rho(w)?
        * QValue::from_int(kottwitz_sign(w) as i64)
        * group_volume_anisotropic(w)?
        * w.field().two_pow(rho.scale(2 * n) - n_n_minus_half(n))
        * w.gram_norm_pow(-rho);
    Ok(bracket.scale(&scalar) * eps_half(w.chi()))
}

/// `L^{W₀}(t, 1)` of the anisotropic kernel, as a function of t.
fn kernel_l_factor(w: &HermitianSpace, t: SArg) -> SValue {
    let n0 = w.n0() as i64;
    match (w.form_sign(), n0) {
        (1, 0) => zeta(t),
        (1, _) => zeta(t.plus(int(1))),
        (_, 0) => SValue::one(),
        _ => l_factor(t, w.chi()) * zeta(t.plus(int(n0 - 1))),
    }
}

/// `|C₁|·S(q^(-s))/d^W(s)·∏_{i=0}^r L^{W_i}(s + 1/2, σ_i)`, where `σ_i = |·|^(s_i)` on
/// `GL₁(D)` contributes `ζ(t + 1/2 + s_i)ζ(t + 1/2 - s_i)` at `t = s + 1/2`.
pub fn zeta_integral_unramified(w: &HermitianSpace, sigma_shifts: &[HalfInt]) -> Result<SValue> {
    require_odd_residue(w)?;
    if sigma_shifts.len() != w.r() as usize {
        return Err(Error::Invalid(format!(
            "expected r = {} GL1(D) shifts, got {}",
            w.r(),
            sigma_shifts.len()
        )));
    }
    let t = s_plus(HalfInt::HALF);
    let blocks: SValue = sigma_shifts
        .iter()
        .map(|&si| zeta(t.plus(HalfInt::HALF + si)) * zeta(t.plus(HalfInt::HALF - si)))
        .product();
    Ok(SValue::from_q(c1_volume(w)?) * s_poly(w)?.at_x() / d_w(w)? * kernel_l_factor(w, t) * blocks)
}

/// Every shift tuple from `grid` (nondecreasing, to skip permutations) for which the
/// unramified zeta integral at `s = ρ` equals the general closed `α₁(W)`.
///
/// Exploratory: nothing fixes these shifts for the trivial representation.
pub fn search_sigma_shifts(w: &HermitianSpace, grid: &[HalfInt]) -> Result<Vec<Vec<HalfInt>>> {
    let target = alpha1_general(w)?;
    let mut hits = Vec::new();
    let mut tuple = vec![0usize; w.r() as usize];
    loop {
        let shifts: Vec<HalfInt> = tuple.iter().map(|&i| grid[i]).collect();
        if let Specialized::Finite(z) = zeta_integral_unramified(w, &shifts)?.substitute(w.rho()) {
            if QConst::new(z) == target {
                hits.push(shifts);
            }
        }
        // Next nondecreasing index tuple.
        let Some(pos) = tuple.iter().rposition(|&i| i + 1 < grid.len()) else {
            break;
        };
        let next = tuple[pos] + 1;
        tuple[pos..].iter_mut().for_each(|i| *i = next);
    }
    Ok(hits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::localdata::{make_space, R0Fixture};

    fn f(e: u32) -> FieldParams {
        FieldParams::new(e)
    }

    fn skew(n: u32, chi: QuadraticCharacter, v: i64, e: u32) -> HermitianSpace {
        make_space(-1, n, chi, v, f(e)).unwrap()
    }

    fn herm(n: u32, v: i64, e: u32) -> HermitianSpace {
        make_space(1, n, QuadraticCharacter::trivial(), v, f(e)).unwrap()
    }

    fn ram() -> QuadraticCharacter {
        QuadraticCharacter::ramified(-1, 1).unwrap()
    }

    fn s_val(v: SValue, s0: HalfInt) -> QValue {
        v.substitute(s0).finite().unwrap()
    }

    #[test]
    fn m_circ_examples() {
        let m = m_circ(-1, 1, f(1));
        let expected = SValue::from_q(QValue::u_pow(-1)) * zeta(SArg::new(2, HalfInt::ZERO)) / zeta(SArg::new(2, int(1)));
        assert_eq!(m, expected);
        assert_eq!(s_val(m, HalfInt::HALF), QValue::u_pow(-1) * one_plus(1, 1));
        assert_eq!(m_circ(1, 0, f(2)), SValue::one());
        assert_eq!(m_circ(-1, 0, f(2)), SValue::one());
    }

    #[test]
    fn m_circ_regular_at_rho() {
        for n in 0..=6 {
            for sign in [1i8, -1] {
                let rho = HalfInt::from_twice(2 * n as i64 + sign as i64);
                let v = m_circ(sign, n, f(1)).substitute(rho).finite().expect("finite");
                assert!(!v.is_zero(), "n = {n}, sign = {sign}");
            }
        }
    }

    #[test]
    fn d_w_and_s_examples() {
        let w = herm(1, 0, 0);
        assert_eq!(d_w(&w).unwrap(), zeta(s_plus(HalfInt::from_twice(3))));
        let w = skew(4, QuadraticCharacter::unramified(), 0, 0);
        let s = s_poly(&w).unwrap();
        assert_eq!(s.coeffs()[1], QValue::u_pow(1) + QValue::u_pow(-1));
        assert!(s.is_monic() && s.is_self_reciprocal());
        assert_eq!(s_poly(&skew(2, QuadraticCharacter::trivial(), 0, 0)).unwrap().degree(), 0);
        assert_eq!(d_w(&skew(1, ram(), 0, 1)), Err(Error::EvenResidue(1)));
    }

    #[test]
    fn c_factor_examples() {
        let t = QuadraticCharacter::trivial();
        let a = ADatum::trivial();
        assert_eq!(c_factor(&t, &a, &skew(0, t.clone(), 0, 0), 1).unwrap(), SConst::one());
        let c = c_factor(&t, &a, &skew(1, QuadraticCharacter::unramified(), 0, 0), 1).unwrap();
        assert_eq!(c, gamma(SArg::new(2, HalfInt::ZERO), &t, false).inv());
        let c = c_factor(&t, &a, &herm(1, 0, 0), 1).unwrap();
        let block = gamma(s_plus(HalfInt::from_twice(-1)), &t, false).inv()
            * gamma(SArg::new(2, HalfInt::ZERO), &t, false).inv()
            * gamma(s_plus(HalfInt::HALF), &t, false);
        assert_eq!(c, block.scale(&SValue::from_int(-1)));
        let r = QuadraticCharacter::ramified(1, 1).unwrap();
        assert!(c_factor(&r, &a, &herm(1, 0, 0), 1).is_err());
    }

    #[test]
    fn r_factor_examples() {
        let t = QuadraticCharacter::trivial();
        let a = ADatum::trivial();
        let w = skew(1, ram(), 0, 0);
        assert_eq!(r_factor(&t, &a, &w).unwrap(), eps_half(&ram()).lift());
        assert_eq!(r_factor(&t, &a, &herm(1, 0, 0)).unwrap(), gamma(s_plus(HalfInt::HALF), &t, false));
        let w1 = skew(1, QuadraticCharacter::unramified(), 1, 0);
        let at = substitute(&r_factor(&t, &a, &w1).unwrap(), HalfInt::HALF, "R").unwrap();
        assert_eq!(at, QConst::new(QValue::u_pow(1)));
    }

    #[test]
    fn trivial_gamma_examples() {
        let g = gamma_doubling_trivial(&herm(1, 0, 0));
        let at = substitute(&g, HalfInt::from_twice(-1), "gamma^W").unwrap();
        assert_eq!(at, QConst::new(QValue::q_pow(1) / one_plus(1, 1)));
        let w = skew(0, QuadraticCharacter::trivial(), 0, 0);
        assert_eq!(gamma_doubling_trivial(&w), gamma(s_plus(HalfInt::HALF), &QuadraticCharacter::trivial(), false));
        assert_eq!(
            gamma_doubling_trivial(&herm(0, 0, 0)),
            gamma(s_plus(HalfInt::HALF), &QuadraticCharacter::trivial(), false)
        );
    }

    #[test]
    fn alpha1_examples() {
        let w = skew(1, QuadraticCharacter::unramified(), 0, 1);
        assert_eq!(
            alpha1(&w, Alpha1Method::ClosedUnimodular).unwrap(),
            QConst::new(QValue::q_pow(-1) * one_plus(1, 1))
        );
        let w = skew(2, ram(), 1, 1);
        let expected = QValue::u_pow(3) * QValue::q_pow(-6) * QValue::q_pow(-1) * one_plus(1, 1) * one_plus(1, 3);
        assert_eq!(alpha1(&w, Alpha1Method::ClosedAnisotropic).unwrap(), QConst::new(expected));
        let w = herm(1, 0, 1);
        assert_eq!(
            alpha1(&w, Alpha1Method::ClosedUnimodular).unwrap(),
            QConst::new(QValue::q_pow(-3) * QValue::q_pow(-1) * one_plus(1, 1))
        );
        assert!(alpha1(&skew(2, ram(), 0, 0), Alpha1Method::ClosedUnimodular).is_err());
        assert!(alpha1(&herm(1, 0, 0), Alpha1Method::ClosedGeneral).is_err());
    }

    #[test]
    fn alpha1_functional_equation_matches_table() {
        let chis = [QuadraticCharacter::trivial(), QuadraticCharacter::unramified(), ram(), QuadraticCharacter::ramified(1, 1).unwrap()];
        for n in 1..=3 {
            for chi in &chis {
                let Ok(w) = make_space(-1, n, chi.clone(), 0, f(0)) else { continue };
                if !w.is_anisotropic() {
                    continue;
                }
                for v in -3..=3 {
                    for e in 0..=2 {
                        let w = w.with_gram(v).with_field(f(e));
                        assert_eq!(
                            alpha1(&w, Alpha1Method::FunctionalEquation).unwrap(),
                            alpha1(&w, Alpha1Method::ClosedAnisotropic).unwrap(),
                            "{w:?}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn zeta_integral_reproduces_alpha1_on_anisotropic_kernels() {
        for fixture in R0Fixture::ALL.into_iter().filter(|f| f.form_sign() == -1) {
            let chi = match fixture.chi_kind() {
                CharKind::Trivial => QuadraticCharacter::trivial(),
                CharKind::Unramified => QuadraticCharacter::unramified(),
                CharKind::Ramified => ram(),
            };
            let w = make_space(-1, fixture.n0(), chi, fixture.gram_val(), f(0)).unwrap();
            let z = s_val(zeta_integral_unramified(&w, &[]).unwrap(), w.rho());
            assert_eq!(QConst::new(z), alpha1(&w, Alpha1Method::ClosedGeneral).unwrap(), "{}", fixture.name());
        }
    }

    #[test]
    fn zeta_integral_examples() {
        let w = herm(0, 0, 0);
        let z = zeta_integral_unramified(&w, &[]).unwrap();
        assert_eq!(z, zeta(s_plus(HalfInt::HALF)) / d_w(&w).unwrap());
        assert!(zeta_integral_unramified(&skew(2, QuadraticCharacter::trivial(), 0, 0), &[]).is_err());
        // The constant term as s → +∞ is |C₁|.
        for w in [skew(3, QuadraticCharacter::trivial(), -2, 0), skew(2, QuadraticCharacter::unramified(), 0, 0)] {
            let z = zeta_integral_unramified(&w, &vec![HalfInt::ZERO; w.r() as usize]).unwrap();
            assert_eq!(z.limit_at_infinity().finite().unwrap(), c1_volume(&w).unwrap());
        }
    }
}
