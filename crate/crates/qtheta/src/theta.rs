//! Constants of the local theta correspondence for `l = 1`: the Siegel-Weil constant `α₂`,
//! the formal-degree constant `α₃`, the γ-factor transfer ratio, and small sign and
//! multiplicity relations.

use crate::abelian::{eps_half, gamma, gamma_at, zeta};
use crate::doubling::{alpha1, m_circ, m_circ_at_rho, substitute, substitute_value, Alpha1Method};
use crate::exactring::{HalfInt, QConst, QValue, SArg, SConst, SValue};
use crate::localdata::{make_space, DualPair, FieldParams, QuadraticCharacter};
use crate::volumes::{group_volume_anisotropic, iwahori_volume, kottwitz_index, kottwitz_sign, one_plus, VolumeMethod};
use crate::{Error, Result};
use num::{BigRational, One, Zero};
use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Alpha2Method {
    Closed,
    AnisotropicTable,
    ViaAlpha1,
    IwahoriSum,
}

impl Alpha2Method {
    pub const ALL: [Alpha2Method; 4] =
        [Alpha2Method::Closed, Alpha2Method::AnisotropicTable, Alpha2Method::ViaAlpha1, Alpha2Method::IwahoriSum];

    pub fn name(self) -> &'static str {
        match self {
            Alpha2Method::Closed => "closed",
            Alpha2Method::AnisotropicTable => "anisotropic_table",
            Alpha2Method::ViaAlpha1 => "via_alpha1",
            Alpha2Method::IwahoriSum => "iwahori_sum",
        }
    }
}

fn sign_pow(sign: i8, k: i64) -> i64 {
    if sign == -1 && k % 2 != 0 {
        -1
    } else {
        1
    }
}

fn require_l1(pair: &DualPair) -> Result<()> {
    if pair.l != 1 {
        return Err(Error::Hypothesis(format!("needs l = 1, got l = {}", pair.l)));
    }
    if pair.n() == 0 {
        return Err(Error::Hypothesis("needs n >= 1".into()));
    }
    Ok(())
}

/// `|2|^(-2nρ + n(n-1/2))`.
fn two_prefactor(pair: &DualPair) -> QValue {
    let n = pair.n() as i64;
    pair.w.field().two_pow(HalfInt::from_twice(n * (2 * n - 1)) - pair.rho().scale(2 * n))
}

/// `∏_{i=1}^{n-1} ζ(1-2i)/ζ(2i)`.
///
/// Depends on n alone and is shared by every pair in a sweep, so it is memoized.
fn zeta_ratio_product(n: u32) -> Result<QValue> {
    static CACHE: OnceLock<Mutex<HashMap<u32, QValue>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(v) = cache.lock().expect("cache poisoned").get(&n) {
        return Ok(v.clone());
    }
    // ζ(t) = (1 - q^(-t))^(-1)
    let factors: Vec<(i8, i64, i64)> =
        (1..n as i64).flat_map(|i| [(1, -2 * (1 - 2 * i), -1), (1, -2 * (2 * i), 1)]).collect();
    let v = QValue::binomial_product(&factors)?;
    cache.lock().expect("cache poisoned").insert(n, v.clone());
    Ok(v)
}

/// `α₂(V, W)` along the requested route.
pub fn alpha2(pair: &DualPair, method: Alpha2Method) -> Result<QConst> {
    require_l1(pair)?;
    match method {
        Alpha2Method::Closed => alpha2_closed(pair),
        Alpha2Method::AnisotropicTable => {
            let (value, index) = alpha2_table(pair)?;
            Ok(value.scale(&QValue::from_int(index)))
        }
        Alpha2Method::ViaAlpha1 => alpha2_via_alpha1(pair),
        Alpha2Method::IwahoriSum => alpha2_iwahori_sum(pair),
    }
}

fn alpha2_closed(pair: &DualPair) -> Result<QConst> {
    let (w, v) = (&pair.w, &pair.v);
    let n = pair.n() as i64;
    let base = QValue::from_int(kottwitz_sign(w) as i64)
        * two_prefactor(pair)
        * w.gram_norm_pow(pair.rho())
        * zeta_ratio_product(pair.n())?;
    if w.form_sign() == -1 {
        return Ok(QConst::new(base));
    }
    let chi_v = v.chi();
    let g = gamma_at(HalfInt::int(1 - n), chi_v, false)?.try_inv().map_err(|_| Error::Pole(format!("gamma(1 - n, {chi_v})^-1")))?;
    let c = QValue::from_int(2 * sign_pow(chi_v.sign(), n));
    Ok((g * eps_half(chi_v)).scale(&(base * c)))
}

/// The closed form exactly as printed: no Kottwitz sign, and `ε(1/2, χ_W, ψ)` on the
/// skew-Hermitian side.
pub fn alpha2_closed_printed(pair: &DualPair) -> Result<QConst> {
    require_l1(pair)?;
    let e = QValue::from_int(kottwitz_sign(&pair.w) as i64);
    let c = alpha2_closed(pair)?.scale(&e);
    Ok(if pair.w.form_sign() == -1 { c * eps_half(pair.w.chi()) } else { c })
}

/// The anisotropic table as printed, with the index `[G(V) : B]` its Hermitian-W rows drop.
fn alpha2_table(pair: &DualPair) -> Result<(QConst, i64)> {
    let (w, v) = (&pair.w, &pair.v);
    let field = w.field();
    let two = |twice: i64| field.two_pow(HalfInt::from_twice(twice));
    if w.form_sign() == 1 {
        if !v.is_anisotropic() {
            return Err(Error::Hypothesis("anisotropic_table needs V anisotropic".into()));
        }
        let ramified = v.chi().is_ramified();
        if ramified && v.chi().conductor() != 1 {
            return Err(Error::Hypothesis("anisotropic_table assumes conductor a = 1".into()));
        }
        let row = match (v.n(), ramified) {
            (1, false) => -two(-5) * one_plus(1, 1),
            (1, true) => -two(-5) * QValue::u_pow(-1),
            (2, false) => two(-14) * QValue::q_pow(-2) * one_plus(1, 2),
            (2, true) => two(-14) * QValue::u_pow(-5) * one_plus(1, 1),
            (3, _) => -two(-27) * QValue::q_pow(-6) * one_plus(1, 1) * one_plus(1, 2),
            _ => unreachable!("anisotropic skew V has 1 <= m <= 3"),
        };
        let sign = QValue::from_int(sign_pow(v.chi().sign(), pair.n() as i64));
        let index = kottwitz_index(v)? as i64;
        return Ok((QConst::new(w.gram_norm_pow(pair.rho()) * sign * row), index));
    }
    if !(v.is_anisotropic() || w.is_anisotropic()) || pair.n() > 3 {
        return Err(Error::Hypothesis("anisotropic_table needs V or W anisotropic and n <= 3".into()));
    }
    let row = match pair.n() {
        1 => two(-1),
        2 => two(-6) * QValue::q_pow(-1) * one_plus(1, 1),
        _ => -two(-15) * QValue::q_pow(-4) * one_plus(1, 1) * one_plus(-1, 4) / one_plus(-1, 3),
    };
    Ok((QConst::new(w.gram_norm_pow(pair.rho()) * row), 1))
}

/// The anisotropic table exactly as printed.
pub fn alpha2_table_printed(pair: &DualPair) -> Result<QConst> {
    require_l1(pair)?;
    Ok(alpha2_table(pair)?.0)
}

fn alpha2_via_alpha1(pair: &DualPair) -> Result<QConst> {
    let (w, v) = (&pair.w, &pair.v);
    if !v.is_anisotropic() {
        return Err(Error::Hypothesis("via_alpha1 needs V anisotropic".into()));
    }
    let method = if w.form_sign() == 1 { Alpha1Method::ClosedUnimodular } else { Alpha1Method::ClosedGeneral };
    let a1 = alpha1(w, method)?;
    let (m, n) = (pair.m() as i64, pair.n() as i64);
    // β_V(τ) = (-1)^(mn) χ_V(-1)^n
    let beta = sign_pow(-1, m * n) * sign_pow(v.chi().sign(), n);
    let scalar = QValue::from_int(beta) * group_volume_anisotropic(v)? * m_circ_at_rho(w)?;
    Ok(a1.inv().scale(&scalar))
}

fn alpha2_iwahori_sum(pair: &DualPair) -> Result<QConst> {
    let (w, v) = (&pair.w, &pair.v);
    if w.form_sign() != -1 || pair.n() != 3 || v.n0() != 0 {
        return Err(Error::Hypothesis("iwahori_sum needs a split 2-dimensional Hermitian V and dim W = 3".into()));
    }
    let theta_integral = iwahori_theta_sum_closed()?;
    let m_half = substitute_value(&m_circ(w.form_sign(), w.n(), w.field()), HalfInt::HALF, "m°")?;
    let eisenstein = alpha1(w, Alpha1Method::ClosedGeneral)?.scale(&m_half.inv());
    Ok(eisenstein.inv().scale(&theta_integral))
}

/// q-exponents of the two summands of the Iwahori double-coset sum at `t`.
pub fn iwahori_summand_exponents(t: i64) -> (i64, i64) {
    let second = if t >= 0 { -3 * t + 2 } else { 3 * t - 2 };
    (-3 * t.abs(), second)
}

/// `Σ_{t ≥ 0} q^(exp(sign·t))` for an exponent affine on `t ≥ 0` resp. `t ≤ 0`.
fn geometric(exp: impl Fn(i64) -> i64, sign: i64, start: i64) -> Result<QValue> {
    let a = exp(sign * start);
    let d = exp(sign * (start + 1)) - a;
    if d >= 0 || exp(sign * (start + 2)) - exp(sign * (start + 1)) != d {
        return Err(Error::Invalid("summand is not a convergent geometric series".into()));
    }
    Ok(QValue::q_pow(a) / one_plus(-1, -d))
}

/// `|B|·Σ_{t∈ℤ}` of the double-coset summands, summed as geometric series.
pub fn iwahori_theta_sum_closed() -> Result<QValue> {
    let mut total = QValue::zero();
    for pick in [0usize, 1] {
        let exp = move |t: i64| {
            let (a, b) = iwahori_summand_exponents(t);
            if pick == 0 {
                a
            } else {
                b
            }
        };
        total = total + geometric(exp, 1, 0)? + geometric(exp, -1, 1)?;
    }
    Ok(split_iwahori_volume()? * total)
}

/// `|B|` of the split 2-dimensional Hermitian V.
fn split_iwahori_volume() -> Result<QValue> {
    let v = make_space(1, 2, QuadraticCharacter::trivial(), 0, FieldParams::new(0))?;
    iwahori_volume(&v, VolumeMethod::Closed)
}

/// The displayed value of the theta integral.
pub fn iwahori_theta_sum_expected() -> QValue {
    QValue::q_pow(-2) * one_plus(-1, 2) * one_plus(1, 2) * one_plus(1, 5) / one_plus(-1, 3)
}

/// `|B|·Σ_{|t| ≤ truncation}` at `q = q0`, summed term by term.
pub fn iwahori_theta_partial_sum(truncation: u32, q0: &BigRational) -> BigRational {
    let qp = |k: i64| -> BigRational {
        let p = num::pow(q0.clone(), k.unsigned_abs() as usize);
        if k >= 0 {
            p
        } else {
            p.recip()
        }
    };
    let t = truncation as i64;
    let sum = (-t..=t).fold(BigRational::zero(), |acc, t| {
        let (a, b) = iwahori_summand_exponents(t);
        acc + qp(a) + qp(b)
    });
    let one = BigRational::one();
    qp(-4) * (&one - qp(-2)) * sum
}

/// `2·q0^(-3T)/(1 - q0^(-3))`, an upper bound for the omitted terms.
pub fn iwahori_theta_tail_bound(truncation: u32, q0: &BigRational) -> BigRational {
    let q3 = num::pow(q0.clone(), 3);
    let two = BigRational::from_integer(2.into());
    two * num::pow(q3.recip(), truncation as usize) / (BigRational::one() - q3.recip())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Alpha3Method {
    Closed,
    ViaAlpha2,
}

/// `α₃(V, W)`.
pub fn alpha3(pair: &DualPair, method: Alpha3Method) -> Result<QConst> {
    alpha3_from(pair, method, Alpha2Method::Closed)
}

/// `α₃` with the `α₂` input taken along `source`.
pub fn alpha3_from(pair: &DualPair, method: Alpha3Method, source: Alpha2Method) -> Result<QConst> {
    require_l1(pair)?;
    let (w, v) = (&pair.w, &pair.v);
    let (n, m) = (pair.n() as i64, pair.m() as i64);
    if method == Alpha3Method::Closed {
        return Ok(if w.form_sign() == 1 {
            eps_half(v.chi()).inv()
        } else {
            eps_half(w.chi()).inv().scale(&(QValue::from_ratio(1, 2) * QValue::from_int(sign_pow(w.chi().sign(), m))))
        });
    }
    let a2 = alpha2(pair, source)?;
    let inverse_zeta = zeta_ratio_product(pair.n())?.inv();
    let scalar = QValue::from_ratio(1, 2)
        * QValue::from_int(kottwitz_sign(w) as i64)
        * two_prefactor(pair).inv()
        * w.gram_norm_pow(-pair.rho())
        * inverse_zeta;
    let chars = if w.form_sign() == 1 {
        gamma_at(HalfInt::int(1 - n), v.chi(), false)?.scale(&QValue::from_int(sign_pow(v.chi().sign(), n + 1)))
    } else {
        eps_half(w.chi()).scale(&QValue::from_int(sign_pow(w.chi().sign(), m + 1)))
    };
    Ok(a2.scale(&scalar) * chars)
}

/// The ratio of normalized γ-factors across the theta correspondence with `l = 2n - 2m - ε`,
/// for the product character `ωχ_Vχ_W`.
pub fn gamma_transfer_ratio(l: i64, chi: &QuadraticCharacter) -> Result<SConst> {
    let k = l.abs();
    let base = |i: i64| gamma(SArg::S.plus(HalfInt::from_twice(k + 1 - 2 * i)), chi, false);
    match l.signum() {
        1 => Ok((1..=k).map(base).product::<SConst>().inv()),
        -1 => Ok((1..=k).map(base).product()),
        _ => Err(Error::Invalid("transfer ratio needs l != 0".into())),
    }
}

/// `c_σ(-1)` from `c_π(-1)`.
pub fn central_sign_relation(pair: &DualPair, c_pi: i8) -> i8 {
    let s = sign_pow(pair.v.chi().sign(), pair.n() as i64) * sign_pow(pair.w.chi().sign(), pair.m() as i64);
    c_pi * s as i8
}

/// `dim η_π / dim η_σ`.
pub fn dim_eta_ratio(epsilon: i8, parameter_fixed: bool) -> u32 {
    if epsilon == -1 && parameter_fixed {
        2
    } else {
        1
    }
}

/// Formal degrees of the Steinberg and trivial representations of the anisotropic `G(V)`,
/// V Hermitian of dimension 1, against the doubling γ-factor of the trivial representation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SteinbergReport {
    pub deg_steinberg: QValue,
    pub deg_trivial: QValue,
    pub ratio: QValue,
    pub half_gamma: QValue,
    pub adjoint_gamma: QValue,
    pub equal: bool,
}

/// `γ(s, Ad ∘ φ, ψ) = q^(-4s)·ζ(-s + 3/2)²/ζ(s + 3/2)²` for the principal parameter.
pub fn adjoint_gamma() -> SValue {
    let a = zeta(SArg::new(-1, HalfInt::from_twice(3)));
    let b = zeta(SArg::new(1, HalfInt::from_twice(3)));
    SValue::x_pow(4) * a.pow(2) / b.pow(2)
}

pub fn steinberg_check() -> Result<SteinbergReport> {
    let half = QValue::from_ratio(1, 2);
    let at = HalfInt::from_twice(-1);
    let adjoint = substitute_value(&adjoint_gamma(), at, "adjoint gamma")?;
    let deg_steinberg = &half * &adjoint;
    let v = make_space(1, 1, QuadraticCharacter::trivial(), 0, FieldParams::new(0))?;
    let deg_trivial = group_volume_anisotropic(&v)?.inv();
    let ratio = &deg_steinberg / &deg_trivial;
    let g = substitute(&crate::doubling::gamma_doubling_trivial(&v), at, "gamma^W")?;
    if g.has_units() {
        return Err(Error::Invalid("trivial doubling gamma carries root numbers".into()));
    }
    let half_gamma = &half * g.scalar();
    Ok(SteinbergReport { equal: ratio == half_gamma, deg_steinberg, deg_trivial, ratio, half_gamma, adjoint_gamma: adjoint })
}
