//! Exact rational and cyclotomic arithmetic.
//!
//! Character values are cyclotomic integers and idempotent coefficients are
//! rationals, so every computation in this crate runs on exact numbers. A
//! [`Cyclotomic`] is an element of Q(zeta_n) stored in the power basis
//! 1, zeta, ..., zeta^(phi(n)-1), reduced modulo the n-th cyclotomic
//! polynomial. Values keep the conductor they were constructed with; binary
//! operations lift both operands to the least common multiple conductor.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num::{BigInt, BigRational, One, Signed, Zero};
use thiserror::Error;

/// Exact rational number, always normalized: gcd(num, den) = 1, den >= 1,
/// zero is 0/1.
pub type Rational = BigRational;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum NumError {
    #[error("conductor must be positive")]
    ZeroConductor,
    #[error("{value} is not {p}-integral (denominator divisible by {p})")]
    NotPIntegral { value: String, p: u64 },
}

/// Euler totient.
pub fn euler_phi(n: u32) -> usize {
    let mut n = n as u64;
    let mut phi = n.max(1);
    let mut q = 2;
    while q * q <= n {
        if n % q == 0 {
            phi = phi / q * (q - 1);
            while n % q == 0 {
                n /= q;
            }
        }
        q += 1;
    }
    if n > 1 {
        phi = phi / n * (n - 1);
    }
    phi as usize
}

/// Distinct prime divisors in ascending order.
pub fn prime_divisors(n: u64) -> Vec<u64> {
    let mut n = n;
    let mut out = Vec::new();
    let mut q = 2;
    while q * q <= n {
        if n % q == 0 {
            out.push(q);
            while n % q == 0 {
                n /= q;
            }
        }
        q += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn divisors(n: u32) -> Vec<u32> {
    let mut divs = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n % i == 0 {
            divs.push(i);
            if i != n / i {
                divs.push(n / i);
            }
        }
        i += 1;
    }
    divs.sort_unstable();
    divs
}

/// Exact division of integer polynomials; `den` must be monic and divide `num`.
fn poly_div_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let mut quot = vec![BigInt::zero(); rem.len() - dd];
    for i in (0..quot.len()).rev() {
        let c = rem[i + dd].clone();
        if !c.is_zero() {
            quot[i] = c.clone();
            for (j, d) in den.iter().enumerate() {
                rem[i + j] -= &c * d;
            }
        }
    }
    debug_assert!(rem.iter().all(BigInt::is_zero));
    quot
}

/// Coefficients of the n-th cyclotomic polynomial (monic, degree phi(n)),
/// computed by dividing x^n - 1 by Phi_d for the proper divisors d of n.
/// Results are cached per conductor.
pub fn cyclotomic_polynomial(n: u32) -> Arc<Vec<BigInt>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Vec<BigInt>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(hit) = cache.lock().unwrap().get(&n) {
        return hit.clone();
    }
    // Work on all divisors bottom-up so the recursion stays shallow.
    for d in divisors(n) {
        if cache.lock().unwrap().contains_key(&d) {
            continue;
        }
        let mut poly = vec![BigInt::zero(); d as usize + 1];
        poly[0] = BigInt::from(-1);
        poly[d as usize] = BigInt::one();
        for e in divisors(d) {
            if e == d {
                continue;
            }
            let phi_e = cache.lock().unwrap().get(&e).unwrap().clone();
            poly = poly_div_exact(&poly, &phi_e);
        }
        cache.lock().unwrap().insert(d, Arc::new(poly));
    }
    cache.lock().unwrap().get(&n).unwrap().clone()
}

/// An element of Q(zeta_n) in canonical power-basis form.
///
/// Two values are equal when they agree after lifting to the lcm of their
/// conductors; no automatic descent to the minimal conductor is performed.
#[derive(Debug, Clone)]
pub struct Cyclotomic {
    conductor: u32,
    coeffs: Vec<Rational>,
}

impl Cyclotomic {
    /// Canonicalize a sparse exponent -> coefficient map at the given
    /// conductor: exponents are reduced mod n, then the polynomial is reduced
    /// modulo Phi_n to degree < phi(n).
    pub fn normalize<I>(conductor: u32, raw: I) -> Result<Self, NumError>
    where
        I: IntoIterator<Item = (i64, Rational)>,
    {
        if conductor == 0 {
            return Err(NumError::ZeroConductor);
        }
        let n = conductor as usize;
        let mut dense = vec![Rational::zero(); n.max(1)];
        for (e, c) in raw {
            let idx = e.rem_euclid(n as i64) as usize;
            dense[idx] += c;
        }
        Ok(Self::reduce_dense(conductor, dense))
    }

    /// Reduce a dense coefficient vector (any length) mod Phi_n and truncate.
    fn reduce_dense(conductor: u32, mut dense: Vec<Rational>) -> Self {
        let phi = euler_phi(conductor);
        if dense.len() > phi {
            let poly = cyclotomic_polynomial(conductor);
            for deg in (phi..dense.len()).rev() {
                if dense[deg].is_zero() {
                    continue;
                }
                let c = std::mem::replace(&mut dense[deg], Rational::zero());
                // x^deg = -x^(deg-phi) * (Phi_n - x^phi)
                for (i, a) in poly.iter().take(phi).enumerate() {
                    if !a.is_zero() {
                        dense[deg - phi + i] -= &c * Rational::from(a.clone());
                    }
                }
            }
        }
        dense.resize(phi, Rational::zero());
        Cyclotomic {
            conductor,
            coeffs: dense,
        }
    }

    pub fn zero(conductor: u32) -> Self {
        Cyclotomic {
            conductor,
            coeffs: vec![Rational::zero(); euler_phi(conductor)],
        }
    }

    pub fn from_rational(r: Rational, conductor: u32) -> Self {
        let mut coeffs = vec![Rational::zero(); euler_phi(conductor)];
        coeffs[0] = r;
        Cyclotomic { conductor, coeffs }
    }

    pub fn from_integer(k: i64) -> Self {
        Self::from_rational(Rational::from(BigInt::from(k)), 1)
    }

    /// The primitive root zeta_n, at conductor n.
    pub fn zeta(n: u32) -> Self {
        Self::normalize(n, [(1, Rational::one())]).expect("positive conductor")
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Re-express at conductor m (the current conductor must divide m).
    pub fn lift_to(&self, m: u32) -> Self {
        assert!(
            m % self.conductor == 0,
            "cannot lift conductor {} to {}",
            self.conductor,
            m
        );
        if m == self.conductor {
            return self.clone();
        }
        let step = (m / self.conductor) as i64;
        Self::normalize(
            m,
            self.coeffs
                .iter()
                .enumerate()
                .map(|(e, c)| (e as i64 * step, c.clone())),
        )
        .expect("positive conductor")
    }

    fn common(&self, other: &Self) -> (Self, Self) {
        let l = num::integer::lcm(self.conductor, other.conductor);
        (self.lift_to(l), other.lift_to(l))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let (a, b) = self.common(other);
        let phi = a.coeffs.len();
        let mut prod = vec![Rational::zero(); 2 * phi.max(1) - 1];
        for (i, ca) in a.coeffs.iter().enumerate() {
            if ca.is_zero() {
                continue;
            }
            for (j, cb) in b.coeffs.iter().enumerate() {
                if !cb.is_zero() {
                    prod[i + j] += ca * cb;
                }
            }
        }
        Self::reduce_dense(a.conductor, prod)
    }

    pub fn add(&self, other: &Self) -> Self {
        let (mut a, b) = self.common(other);
        for (ca, cb) in a.coeffs.iter_mut().zip(&b.coeffs) {
            *ca += cb;
        }
        a
    }

    pub fn sub(&self, other: &Self) -> Self {
        let (mut a, b) = self.common(other);
        for (ca, cb) in a.coeffs.iter_mut().zip(&b.coeffs) {
            *ca -= cb;
        }
        a
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        for c in &mut out.coeffs {
            *c = -std::mem::take(c);
        }
        out
    }

    pub fn scale(&self, r: &Rational) -> Self {
        let mut out = self.clone();
        for c in &mut out.coeffs {
            *c *= r;
        }
        out
    }

    /// Complex conjugation, the Galois map zeta_n -> zeta_n^(n-1).
    pub fn conjugate(&self) -> Self {
        let n = self.conductor as i64;
        Self::normalize(
            self.conductor,
            self.coeffs
                .iter()
                .enumerate()
                .map(|(e, c)| (e as i64 * (n - 1), c.clone())),
        )
        .expect("positive conductor")
    }

    /// The Galois map zeta_n -> zeta_n^u; u must be coprime to the conductor.
    pub fn galois(&self, u: i64) -> Self {
        Self::normalize(
            self.conductor,
            self.coeffs
                .iter()
                .enumerate()
                .map(|(e, c)| (e as i64 * u, c.clone())),
        )
        .expect("positive conductor")
    }

    /// The rational value, if this element lies in Q (all power-basis
    /// coefficients of index >= 1 vanish).
    pub fn as_rational(&self) -> Option<Rational> {
        if self.coeffs[1..].iter().all(Rational::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }

    /// True when every power-basis coefficient is a rational integer, i.e.
    /// the value lies in Z[zeta_n].
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.conductor == other.conductor {
            return self.coeffs == other.coeffs;
        }
        let (a, b) = self.common(other);
        a.coeffs == b.coeffs
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {} ", sign)?;
            }
            if e == 0 {
                write!(f, "{}", mag)?;
            } else if mag.is_one() {
                write!(f, "z{}^{}", self.conductor, e)?;
            } else {
                write!(f, "{}*z{}^{}", mag, self.conductor, e)?;
            }
        }
        Ok(())
    }
}

/// Inverse of a mod n for gcd(a, n) = 1, by extended Euclid; n = 1 gives 0.
pub(crate) fn mod_inverse_general(a: u64, n: u64) -> u64 {
    if n == 1 {
        return 0;
    }
    let (mut r0, mut r1) = (n as i128, (a % n) as i128);
    let (mut s0, mut s1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    debug_assert_eq!(r0, 1, "arguments not coprime");
    s0.rem_euclid(n as i128) as u64
}

/// Modular inverse for a prime modulus.
pub(crate) fn mod_inverse(a: u64, p: u64) -> u64 {
    // Fermat: a^(p-2) mod p.
    let mut base = a % p;
    let mut exp = p - 2;
    let mut acc: u64 = 1;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = (acc as u128 * base as u128 % p as u128) as u64;
        }
        base = (base as u128 * base as u128 % p as u128) as u64;
        exp >>= 1;
    }
    acc
}

/// Reduce a rational modulo the prime p: numerator * denominator^(-1) mod p.
/// Fails when p divides the denominator (the value is outside the local ring
/// of p-integral rationals).
pub fn rational_mod_p(r: &Rational, p: u64) -> Result<u64, NumError> {
    let pb = BigInt::from(p);
    let den = num::Integer::mod_floor(r.denom(), &pb);
    let den: u64 = den.try_into().expect("residue fits u64");
    if den == 0 {
        return Err(NumError::NotPIntegral {
            value: r.to_string(),
            p,
        });
    }
    let num = num::Integer::mod_floor(r.numer(), &pb);
    let num: u64 = num.try_into().expect("residue fits u64");
    Ok(num as u64 * mod_inverse(den, p) % p)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    fn zeta_pow(n: u32, e: i64) -> Cyclotomic {
        Cyclotomic::normalize(n, [(e, Rational::one())]).unwrap()
    }

    #[test]
    fn normalize_phi5_relation() {
        // 1 + z + z^2 + z^3 + z^4 = 0 at conductor 5
        let v = Cyclotomic::normalize(5, (0..5).map(|e| (e, Rational::one()))).unwrap();
        assert!(v.is_zero());
    }

    #[test]
    fn normalize_zeta4_squared() {
        let v = zeta_pow(4, 2);
        assert_eq!(v, Cyclotomic::from_integer(-1));
        assert_eq!(v.as_rational(), Some(rat(-1, 1)));
    }

    #[test]
    fn normalize_zeta3_squared() {
        // z3^2 = -1 - z3
        let v = zeta_pow(3, 2);
        let expected = Cyclotomic::from_integer(-1).sub(&Cyclotomic::zeta(3));
        assert_eq!(v, expected);
    }

    #[test]
    fn normalize_zero_conductor_rejected() {
        assert_eq!(
            Cyclotomic::normalize(0, [(0, Rational::one())]),
            Err(NumError::ZeroConductor)
        );
    }

    #[test]
    fn mul_zeta3_squared() {
        let z = Cyclotomic::zeta(3);
        assert_eq!(z.mul(&z), zeta_pow(3, 2));
    }

    #[test]
    fn mul_zeta8_fourth_power() {
        let a = Cyclotomic::zeta(8);
        let b = zeta_pow(8, 3);
        assert_eq!(a.mul(&b), Cyclotomic::from_integer(-1));
    }

    #[test]
    fn mul_gauss_period_product() {
        // (z5 + z5^4)(z5^2 + z5^3) = z5 + z5^2 + z5^3 + z5^4 = -1
        let a = zeta_pow(5, 1).add(&zeta_pow(5, 4));
        let b = zeta_pow(5, 2).add(&zeta_pow(5, 3));
        assert_eq!(a.mul(&b), Cyclotomic::from_integer(-1));
    }

    #[test]
    fn mul_lifts_conductors() {
        // z3 * z4 = z12^7
        let prod = Cyclotomic::zeta(3).mul(&Cyclotomic::zeta(4));
        assert_eq!(prod, zeta_pow(12, 7));
        assert_eq!(prod.conductor(), 12);
    }

    #[test]
    fn conjugate_fixes_rationals() {
        let v = Cyclotomic::from_rational(rat(3, 1), 5);
        assert_eq!(v.conjugate(), v);
    }

    #[test]
    fn conjugate_i() {
        assert_eq!(Cyclotomic::zeta(4).conjugate(), Cyclotomic::zeta(4).neg());
    }

    #[test]
    fn conjugate_zeta5() {
        // conj(z5) = z5^4 = -1 - z5 - z5^2 - z5^3 in canonical form
        let c = Cyclotomic::zeta(5).conjugate();
        assert_eq!(c, zeta_pow(5, 4));
        let expect = Cyclotomic::normalize(
            5,
            [
                (0, rat(-1, 1)),
                (1, rat(-1, 1)),
                (2, rat(-1, 1)),
                (3, rat(-1, 1)),
            ],
        )
        .unwrap();
        assert_eq!(c, expect);
    }

    #[test]
    fn as_rational_cases() {
        assert_eq!(Cyclotomic::zero(7).as_rational(), Some(rat(0, 1)));
        let v = Cyclotomic::normalize(5, (1..5).map(|e| (e, Rational::one()))).unwrap();
        assert_eq!(v.as_rational(), Some(rat(-1, 1)));
        assert_eq!(Cyclotomic::zeta(5).as_rational(), None);
    }

    #[test]
    fn rational_mod_p_cases() {
        assert_eq!(rational_mod_p(&rat(1, 2), 3), Ok(2));
        assert_eq!(rational_mod_p(&rat(2, 3), 2), Ok(0));
        assert!(matches!(
            rational_mod_p(&rat(1, 3), 3),
            Err(NumError::NotPIntegral { p: 3, .. })
        ));
    }

    #[test]
    fn phi_table() {
        let expect = [1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4];
        for (i, e) in expect.iter().enumerate() {
            assert_eq!(euler_phi(i as u32 + 1), *e, "phi({})", i + 1);
        }
    }

    #[test]
    fn cyclotomic_poly_small() {
        let to_i64 = |v: &Arc<Vec<BigInt>>| -> Vec<i64> {
            v.iter().map(|c| i64::try_from(c).unwrap()).collect()
        };
        assert_eq!(to_i64(&cyclotomic_polynomial(1)), vec![-1, 1]);
        assert_eq!(to_i64(&cyclotomic_polynomial(2)), vec![1, 1]);
        assert_eq!(to_i64(&cyclotomic_polynomial(3)), vec![1, 1, 1]);
        assert_eq!(to_i64(&cyclotomic_polynomial(4)), vec![1, 0, 1]);
        assert_eq!(to_i64(&cyclotomic_polynomial(6)), vec![1, -1, 1]);
        assert_eq!(to_i64(&cyclotomic_polynomial(12)), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn normalize_is_idempotent() {
        let v = Cyclotomic::normalize(12, [(5, rat(2, 3)), (-1, rat(1, 2)), (17, rat(1, 1))])
            .unwrap();
        let again = Cyclotomic::normalize(
            12,
            v.coeffs()
                .iter()
                .enumerate()
                .map(|(e, c)| (e as i64, c.clone())),
        )
        .unwrap();
        assert_eq!(v, again);
    }
}
