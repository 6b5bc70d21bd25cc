//! Haar-measure constants: Iwahori volumes (closed tables and the motive formula),
//! anisotropic group volumes, lattice volumes, the Kottwitz sign and `|C₁|`.

use crate::exactring::QValue;
use crate::localdata::{FieldParams, HermitianSpace};
use crate::{Error, Result};

/// `1 + c·q^(-k)`.
pub(crate) fn one_plus(c: i64, k: i64) -> QValue {
    QValue::one() + QValue::from_int(c) * QValue::q_pow(-k)
}

/// `∏_{i=lo}^{hi} f(i)`, empty when `hi < lo`.
pub(crate) fn prod(lo: i64, hi: i64, f: impl Fn(i64) -> QValue) -> QValue {
    (lo..=hi).map(f).product()
}

fn floor_half(n: u32) -> i64 {
    n as i64 / 2
}

fn ceil_half(n: u32) -> i64 {
    (n as i64 + 1) / 2
}

/// The closed tables are only stated for tame ramification.
fn require_tame(w: &HermitianSpace) -> Result<()> {
    if w.chi().is_ramified() && w.chi().conductor() != 1 {
        return Err(Error::Hypothesis(format!(
            "closed volume tables assume conductor a = 1 for ramified chi_W, got a = {}",
            w.chi().conductor()
        )));
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MotiveInvariants {
    pub frak_n: i64,
    pub artin_a: i64,
    /// `det(1 - Fr∘w_G; E'(1)^I)`.
    pub det_factor: QValue,
}

/// Invariants of the motive of `G(W)`, read from its graded Galois module.
pub fn motive_invariants(w: &HermitianSpace) -> MotiveInvariants {
    let n = w.n() as i64;
    if w.form_sign() == 1 {
        let det = one_plus(-1, 2).pow(floor_half(w.n())) * one_plus(1, 1).pow(n % 2);
        return MotiveInvariants { frak_n: n * n, artin_a: 0, det_factor: det };
    }
    let ramified = w.chi().is_ramified();
    let frak_n = if ramified { n * n - 2 * n + 1 } else { n * n - n };
    let artin_a = if ramified { (2 * n - 1) * w.chi().conductor() as i64 } else { 0 };
    let tail = match (w.n0(), ramified) {
        (0, _) | (1, true) => QValue::one(),
        (1, false) | (2, true) => one_plus(1, 1),
        (2, false) => one_plus(1, 2),
        (3, _) => QValue::laurent_ints(-6, &[1, 0, 1, 0, 1, 0, 1]),
        _ => unreachable!("n0 <= 3"),
    };
    let det = one_plus(-1, 2).pow((n - w.n0() as i64) / 2) * tail;
    MotiveInvariants { frak_n, artin_a, det_factor: det }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VolumeMethod {
    Closed,
    Motive,
}

pub fn iwahori_volume(w: &HermitianSpace, method: VolumeMethod) -> Result<QValue> {
    match method {
        VolumeMethod::Closed => iwahori_closed(w),
        VolumeMethod::Motive => {
            let m = motive_invariants(w);
            // q^(-𝔑 - a/2) = u^(-2𝔑 - a)
            Ok(QValue::u_pow(-2 * m.frak_n - m.artin_a) * m.det_factor)
        }
    }
}

fn iwahori_closed(w: &HermitianSpace) -> Result<QValue> {
    require_tame(w)?;
    let n = w.n() as i64;
    if w.form_sign() == 1 {
        return Ok(one_plus(-1, 1).pow(floor_half(w.n())) * one_plus(1, 1).pow(ceil_half(w.n())) * QValue::q_pow(-n * n));
    }
    let base = QValue::q_pow(-n * n + n);
    let half = QValue::u_pow(-1);
    let sq = |k: i64| one_plus(-1, 2).pow(k);
    Ok(match (w.n0(), w.chi().is_ramified()) {
        (0, _) => sq(n / 2) * base,
        (1, true) => sq((n - 1) / 2) * base * half,
        (1, false) => sq((n - 1) / 2) * one_plus(1, 1) * base,
        (2, true) => sq((n - 2) / 2) * one_plus(1, 1) * base * half,
        (2, false) => sq((n - 2) / 2) * one_plus(1, 2) * base,
        (3, _) => sq((n - 3) / 2) * QValue::laurent_ints(-6, &[1, 0, 1, 0, 1, 0, 1]) * base,
        _ => unreachable!("n0 <= 3"),
    })
}

fn require_anisotropic(w: &HermitianSpace) -> Result<()> {
    if !w.is_anisotropic() {
        return Err(Error::Hypothesis(format!("W must be anisotropic, got Witt index r = {}", w.r())));
    }
    Ok(())
}

/// `[G(W) : B]` for anisotropic W, i.e. the size of the image of the Kottwitz map.
pub fn kottwitz_index(w: &HermitianSpace) -> Result<u32> {
    require_anisotropic(w)?;
    let trivial_index = w.n() == 0
        || (w.form_sign() == 1 && w.n() == 1)
        || (w.form_sign() == -1 && w.n() == 1 && !w.chi().is_ramified());
    Ok(if trivial_index { 1 } else { 2 })
}

/// `|G(W)|` for anisotropic W.
pub fn group_volume_anisotropic(w: &HermitianSpace) -> Result<QValue> {
    require_anisotropic(w)?;
    require_tame(w)?;
    let two = QValue::from_int(2);
    Ok(match (w.form_sign(), w.n(), w.chi().is_ramified()) {
        (_, 0, _) => QValue::one(),
        (1, 1, _) => QValue::q_pow(-1) * one_plus(1, 1),
        (-1, 1, false) => one_plus(1, 1),
        (-1, 1, true) => two * QValue::u_pow(-1),
        (-1, 2, false) => two * QValue::q_pow(-2) * one_plus(1, 2),
        (-1, 2, true) => two * QValue::u_pow(-5) * one_plus(1, 1),
        (-1, 3, _) => two * QValue::q_pow(-6) * one_plus(1, 1) * one_plus(1, 2),
        _ => unreachable!("anisotropic spaces have n <= 3"),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Lattice {
    /// `M_{r',r''}(O_D)`.
    M { r1: u32, r2: u32 },
    /// `u_r ∩ M_r(O)`.
    U { r: u32 },
}

pub fn lattice_volume(kind: Lattice, epsilon: i8, field: FieldParams) -> QValue {
    match kind {
        Lattice::M { r1, r2 } => QValue::q_pow(-(r1 as i64) * r2 as i64),
        Lattice::U { r } => {
            let r = r as i64;
            // |2|^(r(r+1)/4) = u^(-e·r(r+1)/2); r(r+1) is even.
            let two_part = QValue::u_pow(-(field.e as i64) * r * (r + 1) / 2);
            let k = if epsilon == 1 { r * (r + 1) / 2 } else { r * (r - 1) / 2 };
            two_part * QValue::q_pow(-k)
        }
    }
}

/// `e(G(W))`.
pub fn kottwitz_sign(w: &HermitianSpace) -> i8 {
    let n = w.n() as i64;
    let k = if w.form_sign() == 1 { n * (n + 1) / 2 } else { n * (n - 1) / 2 };
    if k % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `|C₁|`, the constant term of the unramified doubling zeta integral.
pub fn c1_volume(w: &HermitianSpace) -> Result<QValue> {
    if w.field().e != 0 {
        return Err(Error::EvenResidue(w.field().e));
    }
    let (f, c) = (floor_half(w.n()), ceil_half(w.n()));
    let odd = |hi: i64| prod(1, hi, |i| one_plus(1, 2 * i - 1));
    let even = |hi: i64| prod(1, hi, |i| one_plus(-1, 2 * i));
    if w.form_sign() == 1 {
        return Ok(QValue::q_pow(-2 * f * c - c) * odd(f) * even(f));
    }
    let rows = match (w.n0(), w.chi().is_ramified()) {
        (0, _) | (1, true) => odd(f) * even(f),
        (1, false) => odd(c) * even(f),
        (2, false) => odd(f - 1) * even(f - 1),
        (2, true) | (3, _) => odd(f) * even(f - 1),
        _ => unreachable!("n0 <= 3"),
    };
    Ok(w.gram_norm_pow(-w.rho()) * QValue::q_pow(-(2 * f * c - f)) * rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::localdata::{make_space, QuadraticCharacter};

    fn space(sign: i8, n: u32, chi: QuadraticCharacter) -> HermitianSpace {
        make_space(sign, n, chi, 0, FieldParams::new(0)).unwrap()
    }

    fn ram() -> QuadraticCharacter {
        QuadraticCharacter::ramified(-1, 1).unwrap()
    }

    fn q(k: i64) -> QValue {
        QValue::q_pow(k)
    }

    #[test]
    fn iwahori_examples() {
        let w = space(1, 1, QuadraticCharacter::trivial());
        assert_eq!(iwahori_volume(&w, VolumeMethod::Closed).unwrap(), one_plus(1, 1) * q(-1));
        let w = space(-1, 2, QuadraticCharacter::trivial());
        assert_eq!(iwahori_volume(&w, VolumeMethod::Closed).unwrap(), one_plus(-1, 2) * q(-2));
        let w = space(-1, 1, ram());
        assert_eq!(iwahori_volume(&w, VolumeMethod::Closed).unwrap(), QValue::u_pow(-1));
    }

    #[test]
    fn motive_examples() {
        let m = motive_invariants(&space(1, 2, QuadraticCharacter::trivial()));
        assert_eq!((m.frak_n, m.artin_a), (4, 0));
        let m = motive_invariants(&space(-1, 1, ram()));
        assert_eq!((m.frak_n, m.artin_a, m.det_factor), (0, 1, QValue::one()));
        let m = motive_invariants(&space(-1, 3, QuadraticCharacter::trivial()));
        assert_eq!(m.det_factor, one_plus(1, 1) * one_plus(1, 2));
    }

    #[test]
    fn anisotropic_examples() {
        assert_eq!(
            group_volume_anisotropic(&space(1, 1, QuadraticCharacter::trivial())).unwrap(),
            q(-1) * one_plus(1, 1)
        );
        assert_eq!(group_volume_anisotropic(&space(-1, 1, QuadraticCharacter::unramified())).unwrap(), one_plus(1, 1));
        assert!(group_volume_anisotropic(&space(-1, 2, QuadraticCharacter::trivial())).is_err());
        assert_eq!(kottwitz_index(&space(-1, 1, QuadraticCharacter::unramified())).unwrap(), 1);
        assert_eq!(kottwitz_index(&space(-1, 2, ram())).unwrap(), 2);
        assert_eq!(kottwitz_index(&space(1, 1, QuadraticCharacter::trivial())).unwrap(), 1);
    }

    #[test]
    fn kottwitz_index_is_volume_ratio() {
        // The index is pinned by dividing the anisotropic volume table by the Iwahori volume.
        for w in [
            space(1, 1, QuadraticCharacter::trivial()),
            space(-1, 1, QuadraticCharacter::unramified()),
            space(-1, 1, ram()),
            space(-1, 2, QuadraticCharacter::unramified()),
            space(-1, 2, ram()),
            space(-1, 3, QuadraticCharacter::trivial()),
        ] {
            let ratio = group_volume_anisotropic(&w).unwrap() / iwahori_volume(&w, VolumeMethod::Closed).unwrap();
            assert_eq!(ratio, QValue::from_int(kottwitz_index(&w).unwrap() as i64), "{w:?}");
        }
    }

    #[test]
    fn lattice_examples() {
        let f0 = FieldParams::new(0);
        assert_eq!(lattice_volume(Lattice::M { r1: 2, r2: 3 }, 1, f0), q(-6));
        assert_eq!(lattice_volume(Lattice::U { r: 1 }, -1, f0), QValue::one());
        assert_eq!(lattice_volume(Lattice::U { r: 1 }, 1, FieldParams::new(1)), QValue::u_pow(-3));
    }

    #[test]
    fn kottwitz_sign_examples() {
        assert_eq!(kottwitz_sign(&space(1, 1, QuadraticCharacter::trivial())), -1);
        assert_eq!(kottwitz_sign(&space(-1, 1, QuadraticCharacter::unramified())), 1);
        assert_eq!(kottwitz_sign(&space(-1, 0, QuadraticCharacter::trivial())), 1);
    }

    #[test]
    fn c1_examples() {
        assert_eq!(c1_volume(&space(1, 1, QuadraticCharacter::trivial())).unwrap(), q(-1));
        assert_eq!(c1_volume(&space(-1, 1, QuadraticCharacter::unramified())).unwrap(), one_plus(1, 1));
        assert_eq!(c1_volume(&space(-1, 0, QuadraticCharacter::trivial())).unwrap(), QValue::one());
        let w = make_space(-1, 1, QuadraticCharacter::unramified(), 0, FieldParams::new(1)).unwrap();
        assert_eq!(c1_volume(&w), Err(Error::EvenResidue(1)));
    }
}
