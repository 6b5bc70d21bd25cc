//! Products of cyclotomic values `Φ_d(u^m)`, kept as exponents of the irreducible `Φ_j(u)`.
//!
//! Distinct `Φ_j` are coprime, so the final fraction is reduced without any gcd.

use super::qvalue::QValue;
use super::svalue::{cyclotomic_cached, divisors};
use super::upoly::UPoly;
use super::ExactError;
use num::{BigRational, One};
use std::collections::BTreeMap;

pub(crate) struct CycloProduct {
    shift: i64,
    constant: BigRational,
    exps: BTreeMap<u32, i64>,
    zero: bool,
}

impl CycloProduct {
    pub(crate) fn new() -> Self {
        CycloProduct { shift: 0, constant: BigRational::one(), exps: BTreeMap::new(), zero: false }
    }

    pub(crate) fn mul_u_pow(&mut self, k: i64) {
        self.shift += k;
    }

    /// Multiplies by `Φ_d(u^m)^e`; a negative power of zero is an error.
    pub(crate) fn mul_phi_at_power(&mut self, d: u32, m: i64, e: i64) -> Result<(), ExactError> {
        if e == 0 {
            return Ok(());
        }
        if m == 0 {
            if d == 1 {
                if e < 0 {
                    return Err(ExactError::NotAValue);
                }
                self.zero = true;
                return Ok(());
            }
            // Φ_d(1) = p for d a power of the prime p, and 1 otherwise.
            if let Some(p) = prime_power_base(d) {
                let p = BigRational::from_integer(p.into());
                self.constant *= if e > 0 { p.pow(e as i32) } else { p.recip().pow((-e) as i32) };
            }
            return Ok(());
        }
        if m < 0 {
            // Φ_d(1/y) = y^(-φ(d))·Φ_d(y) for d > 1, and -y^(-1)·Φ_1(y) for d = 1.
            let phi = cyclotomic_cached(d).len() as i64 - 1;
            self.shift += m * phi * e;
            if d == 1 && e % 2 != 0 {
                self.constant = -self.constant.clone();
            }
        }
        // Φ_d(y^M) = ∏_{c | d} (y^(Mc) - 1)^μ(d/c) and y^N - 1 = ∏_{j | N} Φ_j(y).
        let big_m = u32::try_from(m.unsigned_abs()).expect("u-exponent too large");
        for c in divisors(d) {
            let mu = moebius(d / c);
            if mu == 0 {
                continue;
            }
            for j in divisors(big_m * c) {
                *self.exps.entry(j).or_insert(0) += mu * e;
            }
        }
        Ok(())
    }

    /// Multiplies by `(1 - c·u^ue)^e` for `c = ±1`.
    pub(crate) fn mul_binomial(&mut self, c: i8, ue: i64, e: i64) -> Result<(), ExactError> {
        if c == 1 {
            // 1 - x = -Φ_1(x)
            if e % 2 != 0 {
                self.constant = -self.constant.clone();
            }
            self.mul_phi_at_power(1, ue, e)
        } else {
            // 1 + x = Φ_2(x)
            self.mul_phi_at_power(2, ue, e)
        }
    }

    pub(crate) fn into_qvalue(self) -> QValue {
        if self.zero {
            return QValue::zero();
        }
        let (mut num, mut den) = (UPoly::constant(self.constant), UPoly::one());
        for (&j, &e) in &self.exps {
            let p = UPoly::from_ints(&cyclotomic_cached(j)).pow(e.unsigned_abs() as u32);
            if e > 0 {
                num = &num * &p;
            } else if e < 0 {
                den = &den * &p;
            }
        }
        QValue::from_coprime_parts(self.shift, num, den)
    }
}

fn moebius(n: u32) -> i64 {
    let (mut n, mut sign, mut p) = (n, 1i64, 2u32);
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        -sign
    } else {
        sign
    }
}

/// `p` when `n = p^j` with `j ≥ 1`.
fn prime_power_base(n: u32) -> Option<u32> {
    let p = (2..=n).find(|p| n % p == 0)?;
    let mut m = n;
    while m % p == 0 {
        m /= p;
    }
    (m == 1).then_some(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn moebius_and_prime_powers() {
        let mu: Vec<i64> = (1..=12).map(moebius).collect();
        assert_eq!(mu, vec![1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0]);
        assert_eq!(prime_power_base(8), Some(2));
        assert_eq!(prime_power_base(9), Some(3));
        assert_eq!(prime_power_base(12), None);
        assert_eq!(prime_power_base(1), None);
    }

    #[test]
    fn binomials_match_direct_arithmetic() {
        for ue in -9..=9i64 {
            for c in [1i8, -1] {
                let direct = &QValue::one() - &(&QValue::from_int(c as i64) * &QValue::u_pow(ue));
                let mut p = CycloProduct::new();
                p.mul_binomial(c, ue, 1).unwrap();
                assert_eq!(p.into_qvalue(), direct, "c={c} ue={ue}");
                if !direct.is_zero() {
                    let mut p = CycloProduct::new();
                    p.mul_binomial(c, ue, -2).unwrap();
                    assert_eq!(p.into_qvalue(), direct.pow(-2));
                }
            }
        }
        assert!(CycloProduct::new().mul_binomial(1, 0, -1).is_err());
    }
}
