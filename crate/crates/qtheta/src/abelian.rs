//! Tate local factors for quadratic characters of F^×, with ψ of conductor 0.
//!
//! Unramified: `ε = 1`, `L(s, χ) = (1 - χ(ϖ)q^(-s))^(-1)`.
//! Ramified of conductor `a`: `L = 1`, `ε(s, χ, ψ) = ε(1/2, χ, ψ)·q^(a(1/2 - s))`, with
//! `ε(1/2, χ, ψ)` kept as an opaque symbol.

use crate::exactring::{HalfInt, QConst, QValue, SArg, SConst, SValue, Specialized};
use crate::localdata::{CharKind, QuadraticCharacter};
use crate::{Error, Result};

/// `1 - c·q^(-arg)`.
fn one_minus(c: i8, arg: SArg) -> SValue {
    SValue::binomial(c, -arg.shift.twice(), arg.coef)
}

/// `q^(-arg)`.
pub fn q_pow_neg(arg: SArg) -> SValue {
    SValue::monomial(-arg.shift.twice(), arg.coef)
}

/// `ζ_F(arg) = (1 - q^(-arg))^(-1)`; panics on the constant argument 0.
pub fn zeta(arg: SArg) -> SValue {
    one_minus(1, arg).inv()
}

pub fn zeta_at(s0: HalfInt) -> Result<QValue> {
    (QValue::one() - QValue::u_pow(-s0.twice())).try_inv().map_err(|_| Error::Pole(format!("zeta({s0})")))
}

pub fn l_factor(arg: SArg, chi: &QuadraticCharacter) -> SValue {
    match chi.at_uniformizer() {
        Some(c) => one_minus(c, arg).inv(),
        None => SValue::one(),
    }
}

/// `ε(1/2, χ, ψ)`.
pub fn eps_half(chi: &QuadraticCharacter) -> QConst {
    match chi.eps_id() {
        None => QConst::one(),
        Some(id) => {
            let e = QConst::eps(&id, chi.sign());
            if chi.is_twisted() && chi.conductor() % 2 == 1 {
                e.scale(&QValue::from_int(-1))
            } else {
                e
            }
        }
    }
}

/// `γ(arg, χ, ψ)`, or with `conj` the value for `ψ̄`, which differs by `χ(-1)`.
pub fn gamma(arg: SArg, chi: &QuadraticCharacter, conj: bool) -> SConst {
    let mut g = match chi.kind() {
        CharKind::Trivial | CharKind::Unramified => {
            let c = chi.at_uniformizer().expect("unramified");
            SConst::new(one_minus(c, arg) / one_minus(c, arg.reflect()))
        }
        CharKind::Ramified => {
            let a = chi.conductor() as i64;
            // q^(a/2)·q^(-a·arg)
            let scalar = SValue::monomial(a - a * arg.shift.twice(), a * arg.coef);
            eps_half(chi).lift().scale(&scalar)
        }
    };
    if conj && chi.sign() == -1 {
        g = g.scale(&SValue::from_int(-1));
    }
    g
}

/// `γ(s0, χ, ψ)` at a point; a pole is an error.
pub fn gamma_at(s0: HalfInt, chi: &QuadraticCharacter, conj: bool) -> Result<QConst> {
    match gamma(SArg::point(s0), chi, conj).substitute(HalfInt::ZERO) {
        Specialized::Finite(v) => Ok(v),
        Specialized::Pole => Err(Error::Pole(format!("gamma({s0}, {chi})"))),
    }
}

/// `∏_{i=0}^{count-1} γ(base + i·step, χ, ψ)`.
pub fn gamma_product(count: u32, base: SArg, step: HalfInt, chi: &QuadraticCharacter) -> SConst {
    (0..count as i64).map(|i| gamma(base.plus(step.scale(i)), chi, false)).product()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::BigRational;
    use num::traits::Pow;
    use std::collections::BTreeMap;

    fn chars() -> Vec<QuadraticCharacter> {
        let r = QuadraticCharacter::ramified(-1, 1).unwrap();
        vec![
            QuadraticCharacter::trivial(),
            QuadraticCharacter::unramified(),
            QuadraticCharacter::ramified(1, 1).unwrap(),
            r.clone(),
            QuadraticCharacter::ramified(1, 2).unwrap(),
            r.mul(&QuadraticCharacter::unramified()).unwrap(),
        ]
    }

    #[test]
    fn zeta_values() {
        assert_eq!(zeta_at(HalfInt::int(1)).unwrap().to_string(), "(1*q^(2/2)) / (1*q^(2/2) - 1*q^(0/2))");
        assert!(zeta_at(HalfInt::ZERO).is_err());
        assert_eq!(zeta_at(HalfInt::int(-1)).unwrap(), QValue::from_int(1) / (QValue::one() - QValue::q_pow(1)));
    }

    #[test]
    fn functional_equation() {
        // γ(s, χ, ψ)·γ(1 - s, χ, ψ) = χ(-1)
        for chi in chars() {
            let g = gamma(SArg::S, &chi, false) * gamma(SArg::S.reflect(), &chi, false);
            assert_eq!(g, SConst::new(SValue::from_int(chi.sign() as i64)), "{chi}");
        }
    }

    #[test]
    fn conjugate_differs_by_sign() {
        for chi in chars() {
            let ratio = gamma(SArg::S, &chi, true) * gamma(SArg::S, &chi, false).inv();
            assert_eq!(ratio, SConst::new(SValue::from_int(chi.sign() as i64)));
        }
    }

    #[test]
    fn gamma_unramified_at_points_matches_direct_formula() {
        // Independent check at q = 9: (1 - q^-s0)/(1 - q^(s0 - 1)).
        let q0 = BigRational::from_integer(9.into());
        let none = BTreeMap::new();
        for twice in [-5i64, -3, -1, 3, 5, 7] {
            let s0 = HalfInt::from_twice(twice);
            let lhs = gamma_at(s0, &QuadraticCharacter::trivial(), false).unwrap().evaluate(&q0, &none).unwrap();
            // q^(s0) with q^(1/2) = 3
            let qs = BigRational::from_integer(3.into()).pow(twice as i32);
            let one = BigRational::from_integer(1.into());
            let rhs = (&one - qs.recip()) / (&one - qs / &q0);
            assert_eq!(lhs, rhs, "s0 = {s0}");
        }
    }

    #[test]
    fn ramified_gamma_shape() {
        let chi = QuadraticCharacter::ramified(-1, 1).unwrap();
        let g = gamma_at(HalfInt::int(0), &chi, false).unwrap();
        assert_eq!(g.scalar().to_string(), "1*q^(1/2)");
        assert!(g.has_units());
        let tw = chi.mul(&QuadraticCharacter::unramified()).unwrap();
        assert_eq!(eps_half(&tw), eps_half(&chi).scale(&QValue::from_int(-1)));
        assert_eq!(eps_half(&chi) * eps_half(&chi), QConst::new(QValue::from_int(-1)));
    }

    #[test]
    fn gamma_product_telescopes() {
        // γ(s)γ(s+1) for trivial χ: (1-q^-s)(1-q^-s-1)/((1-q^(s-1))(1-q^s))
        let p = gamma_product(2, SArg::S, HalfInt::int(1), &QuadraticCharacter::trivial());
        let direct = gamma(SArg::S, &QuadraticCharacter::trivial(), false)
            * gamma(SArg::S.plus(HalfInt::int(1)), &QuadraticCharacter::trivial(), false);
        assert_eq!(p, direct);
    }

    #[test]
    fn point_values() {
        let triv = QuadraticCharacter::trivial();
        let ratio = zeta_at(HalfInt::int(1)).unwrap() / zeta_at(HalfInt::int(2)).unwrap();
        assert_eq!(ratio, &QValue::one() + &QValue::q_pow(-1));
        assert_eq!(gamma_at(HalfInt::HALF, &triv, false).unwrap(), QConst::one());
        assert_eq!(gamma_at(HalfInt::ZERO, &triv, false).unwrap(), QConst::new(QValue::zero()));
        // (1 + 1)/(1 + q^-1)
        let ur = gamma_at(HalfInt::ZERO, &QuadraticCharacter::unramified(), false).unwrap();
        assert_eq!(ur, QConst::new(QValue::from_int(2) / (QValue::one() + QValue::q_pow(-1))));
    }

    #[test]
    fn gamma_product_examples() {
        let triv = QuadraticCharacter::trivial();
        assert_eq!(gamma_product(0, SArg::S, HalfInt::int(1), &triv), SConst::one());
        let p = gamma_product(2, SArg::S, HalfInt::int(1), &triv);
        assert_eq!(p.substitute(HalfInt::ZERO).finite(), Some(QConst::new(QValue::from_int(-1))));
        assert_eq!(gamma_product(1, SArg::S.times(2), HalfInt::int(1), &triv), gamma(SArg::S.times(2), &triv, false));
    }

    #[test]
    fn functional_equation_with_conjugate_character() {
        // γ(s, χ, ψ)·γ(1 - s, χ, ψ̄) = 1
        for chi in chars() {
            let g = gamma(SArg::S, &chi, false) * gamma(SArg::S.reflect(), &chi, true);
            assert_eq!(g, SConst::one(), "{chi}");
        }
    }
}
