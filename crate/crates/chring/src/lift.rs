//! Fixed-conductor integer cyclotomic kernel.
//!
//! Orthogonality validation and the structure-constant tensor are quartic in
//! the class number, so they run on plain machine integers: all character
//! values of a table are lifted once to a common conductor m, and products are
//! folded through precomputed power-basis reductions of zeta^e mod Phi_m.
//! Accumulation happens in i128; input bounds are checked when the domain is
//! built so overflow is impossible afterwards.

use num::BigInt;
use thiserror::Error;

use crate::exactnum::{cyclotomic_polynomial, euler_phi, Cyclotomic};

#[derive(Debug, Error)]
pub(crate) enum LiftError {
    #[error("value {0} does not have integer cyclotomic coefficients")]
    NonIntegral(String),
    #[error("coefficient magnitude too large for the integer kernel")]
    TooLarge,
}

/// Per-exponent input coefficient bound; keeps first-stage products far from
/// i64 range and stacked i128 accumulations far from i128 range.
const INPUT_BOUND: i64 = 1 << 24;

pub(crate) struct CycloDomain {
    pub m: u32,
    pub phi: usize,
    /// rows[e] = canonical power-basis vector of zeta_m^e, for e in 0..m
    rows: Vec<Vec<i64>>,
}

impl CycloDomain {
    pub fn new(m: u32) -> Result<Self, LiftError> {
        let phi = euler_phi(m);
        let poly = cyclotomic_polynomial(m);
        let as_i64 = |b: &BigInt| -> Result<i64, LiftError> {
            i64::try_from(b).map_err(|_| LiftError::TooLarge)
        };
        let mut rows: Vec<Vec<i64>> = Vec::with_capacity(m as usize);
        for e in 0..phi.min(m as usize) {
            let mut unit = vec![0i64; phi];
            unit[e] = 1;
            rows.push(unit);
        }
        // zeta^phi = -(low-degree part of Phi_m); shift and re-reduce upward.
        for e in phi..m as usize {
            let mut row = vec![0i64; phi];
            if e == phi {
                for i in 0..phi {
                    row[i] = -as_i64(&poly[i])?;
                }
            } else {
                let prev = &rows[e - 1];
                // multiply by zeta: shift, folding the overflowing top term
                let top = prev[phi - 1];
                for i in 1..phi {
                    row[i] = prev[i - 1];
                }
                if top != 0 {
                    for i in 0..phi {
                        row[i] = row[i]
                            .checked_add(
                                top.checked_mul(rows[phi][i]).ok_or(LiftError::TooLarge)?,
                            )
                            .ok_or(LiftError::TooLarge)?;
                    }
                }
            }
            rows.push(row);
        }
        Ok(CycloDomain { m, phi, rows })
    }

    pub fn row(&self, e: usize) -> &[i64] {
        &self.rows[e % self.m as usize]
    }

    /// Lift an exact value into this domain; it must have integer coefficients
    /// and a conductor dividing m.
    pub fn lift(&self, v: &Cyclotomic) -> Result<Vec<i64>, LiftError> {
        let lifted = v.lift_to(self.m);
        let mut out = vec![0i64; self.phi];
        for (e, c) in lifted.coeffs().iter().enumerate() {
            if !c.is_integer() {
                return Err(LiftError::NonIntegral(v.to_string()));
            }
            let ci = i64::try_from(c.numer()).map_err(|_| LiftError::TooLarge)?;
            if ci.abs() > INPUT_BOUND {
                return Err(LiftError::TooLarge);
            }
            out[e] = ci;
        }
        Ok(out)
    }

    /// Image of a lifted vector under the Galois map zeta -> zeta^u
    /// (u coprime to m). u = m-1 is complex conjugation.
    pub fn galois(&self, a: &[i64], u: u32) -> Vec<i64> {
        let mut out = vec![0i64; self.phi];
        for (e, c) in a.iter().enumerate() {
            if *c == 0 {
                continue;
            }
            let target = (e as u64 * u as u64 % self.m as u64) as usize;
            for (o, r) in out.iter_mut().zip(self.row(target)) {
                *o += c * r;
            }
        }
        out
    }

    /// acc += weight * a * b, with the product reduced mod Phi_m.
    pub fn mul_acc(&self, a: &[i64], b: &[i64], weight: i64, acc: &mut [i128]) {
        let phi = self.phi;
        let mut buf = vec![0i128; 2 * phi.max(1) - 1];
        for (i, ca) in a.iter().enumerate() {
            if *ca == 0 {
                continue;
            }
            for (j, cb) in b.iter().enumerate() {
                if *cb != 0 {
                    buf[i + j] += *ca as i128 * *cb as i128;
                }
            }
        }
        let w = weight as i128;
        for i in 0..phi {
            acc[i] += w * buf[i];
        }
        for e in phi..buf.len() {
            let c = buf[e];
            if c != 0 {
                let row = &self.rows[e];
                for i in 0..phi {
                    acc[i] += w * c * row[i] as i128;
                }
            }
        }
    }

    /// Exact product of two lifted vectors (used where the result feeds
    /// further i64-weighted accumulation).
    pub fn mul(&self, a: &[i64], b: &[i64]) -> Result<Vec<i64>, LiftError> {
        let mut acc = vec![0i128; self.phi];
        self.mul_acc(a, b, 1, &mut acc);
        acc.into_iter()
            .map(|c| i64::try_from(c).map_err(|_| LiftError::TooLarge))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::{One, Zero};

    use crate::exactnum::Rational;

    #[test]
    fn kernel_matches_exact_multiplication() {
        let dom = CycloDomain::new(12).unwrap();
        let a = Cyclotomic::normalize(12, [(1, Rational::one()), (5, Rational::from_integer(2.into()))])
            .unwrap();
        let b = Cyclotomic::normalize(12, [(7, -Rational::one()), (0, Rational::from_integer(3.into()))])
            .unwrap();
        let product = a.mul(&b);
        let la = dom.lift(&a).unwrap();
        let lb = dom.lift(&b).unwrap();
        let lp = dom.mul(&la, &lb).unwrap();
        assert_eq!(lp, dom.lift(&product).unwrap());
    }

    #[test]
    fn galois_conjugation_matches_exact() {
        let dom = CycloDomain::new(8).unwrap();
        let v = Cyclotomic::normalize(
            8,
            [(1, Rational::one()), (3, Rational::from_integer(5.into()))],
        )
        .unwrap();
        let lifted = dom.lift(&v).unwrap();
        assert_eq!(dom.galois(&lifted, 7), dom.lift(&v.conjugate()).unwrap());
    }

    #[test]
    fn rejects_fractional_coefficients() {
        let dom = CycloDomain::new(4).unwrap();
        let v = Cyclotomic::from_rational(Rational::new(1.into(), 2.into()), 4);
        assert!(dom.lift(&v).is_err());
        assert!(!Rational::zero().is_one());
    }
}
