//! Small finite fields F_{p^r}, just big enough to reduce p-integral
//! cyclotomic integers modulo a prime above p.
//!
//! Elements are polynomials of degree < r over F_p modulo a fixed monic
//! irreducible (the lexicographically first one, so the field — and with it
//! the choice of prime above p — is deterministic).

use crate::exactnum::mod_inverse;

pub(crate) struct Gfq {
    pub p: u64,
    pub r: usize,
    /// Low coefficients of the monic modulus x^r + m[r-1] x^(r-1) + ... + m[0].
    modulus: Vec<u64>,
}

pub(crate) type El = Vec<u64>;

impl Gfq {
    pub fn new(p: u64, r: usize) -> Gfq {
        assert!(r >= 1);
        let modulus = first_irreducible(p, r);
        Gfq { p, r, modulus }
    }

    pub fn q(&self) -> u64 {
        self.p.pow(self.r as u32)
    }

    pub fn zero(&self) -> El {
        vec![0; self.r]
    }

    pub fn one(&self) -> El {
        let mut e = self.zero();
        e[0] = 1;
        e
    }

    pub fn from_fp(&self, a: u64) -> El {
        let mut e = self.zero();
        e[0] = a % self.p;
        e
    }

    pub fn add(&self, a: &El, b: &El) -> El {
        a.iter().zip(b).map(|(x, y)| (x + y) % self.p).collect()
    }

    pub fn scale(&self, a: &El, c: u64) -> El {
        a.iter()
            .map(|x| (*x as u128 * c as u128 % self.p as u128) as u64)
            .collect()
    }

    pub fn mul(&self, a: &El, b: &El) -> El {
        let mut modulus_full = self.modulus.clone();
        modulus_full.resize(self.r, 0);
        let mut prod = poly_mulmod_full(a, b, &modulus_full, self.p);
        prod.resize(self.r, 0);
        prod
    }

    pub fn pow(&self, a: &El, mut e: u64) -> El {
        let mut acc = self.one();
        let mut base = a.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    pub fn is_one(&self, a: &El) -> bool {
        a[0] == 1 && a[1..].iter().all(|&x| x == 0)
    }

    /// The prime-field value, when the element has degree 0.
    pub fn as_scalar(&self, a: &El) -> Option<u64> {
        if a[1..].iter().all(|&x| x == 0) {
            Some(a[0])
        } else {
            None
        }
    }

    /// A multiplicative generator, found deterministically.
    fn generator(&self) -> El {
        let q1 = self.q() - 1;
        let factors = crate::exactnum::prime_divisors(q1);
        // enumerate nonzero elements in lexicographic coefficient order
        let mut counter = vec![0u64; self.r];
        loop {
            // increment
            let mut i = 0;
            loop {
                counter[i] += 1;
                if counter[i] < self.p {
                    break;
                }
                counter[i] = 0;
                i += 1;
                assert!(i < self.r, "no generator found");
            }
            let cand = counter.clone();
            if factors
                .iter()
                .all(|&f| !self.is_one(&self.pow(&cand, q1 / f)))
            {
                return cand;
            }
        }
    }

    /// An element of multiplicative order exactly n; n must divide q - 1.
    pub fn root_of_unity(&self, n: u64) -> El {
        assert!(n >= 1 && (self.q() - 1) % n == 0, "no n-th roots in F_q");
        if n == 1 {
            return self.one();
        }
        let g = self.generator();
        self.pow(&g, (self.q() - 1) / n)
    }
}

/// Product of two polynomials modulo (x^r + low-degree part, p), where
/// `modulus_low` holds the r low coefficients of the monic modulus.
fn poly_mulmod_full(a: &[u64], b: &[u64], modulus_low: &[u64], p: u64) -> Vec<u64> {
    let r = modulus_low.len();
    let pp = p as u128;
    let mut prod = vec![0u128; (a.len() + b.len()).max(2) - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x as u128 * y as u128) % pp;
        }
    }
    for d in (r..prod.len()).rev() {
        let c = prod[d];
        if c == 0 {
            continue;
        }
        prod[d] = 0;
        for i in 0..r {
            if modulus_low[i] != 0 {
                let sub = c * modulus_low[i] as u128 % pp;
                prod[d - r + i] = (prod[d - r + i] + pp - sub) % pp;
            }
        }
    }
    prod.truncate(r);
    prod.into_iter().map(|x| x as u64).collect()
}

fn poly_mulmod(a: &[u64], b: &[u64], modulus: &[u64], p: u64) -> Vec<u64> {
    poly_mulmod_full(a, b, modulus, p)
}

fn poly_gcd(mut a: Vec<u64>, mut b: Vec<u64>, p: u64) -> Vec<u64> {
    let deg = |v: &[u64]| v.iter().rposition(|&x| x != 0);
    loop {
        let Some(db) = deg(&b) else { return a };
        let Some(da) = deg(&a) else { return b };
        if da < db {
            std::mem::swap(&mut a, &mut b);
            continue;
        }
        // a -= lead(a)/lead(b) * x^(da-db) * b
        let f = (a[da] as u128 * mod_inverse(b[db], p) as u128 % p as u128) as u64;
        for i in 0..=db {
            let sub = f as u128 * b[i] as u128 % p as u128;
            let idx = da - db + i;
            a[idx] = ((a[idx] as u128 + p as u128 - sub) % p as u128) as u64;
        }
    }
}

fn is_irreducible(low: &[u64], p: u64) -> bool {
    let r = low.len();
    assert!(r >= 2);
    // x^(p^i) mod f via repeated p-th powers of x
    let x = {
        let mut v = vec![0u64; r];
        v[1] = 1;
        v
    };
    let pow_p = |v: &[u64]| -> Vec<u64> {
        let mut acc = vec![0u64; r];
        acc[0] = 1;
        let mut base = v.to_vec();
        let mut e = p;
        while e > 0 {
            if e & 1 == 1 {
                acc = poly_mulmod(&acc, &base, low, p);
            }
            base = poly_mulmod(&base, &base, low, p);
            e >>= 1;
        }
        acc
    };
    // frob[i] = x^(p^i)
    let mut frob = x.clone();
    let mut powers = vec![x.clone()];
    for _ in 0..r {
        frob = pow_p(&frob);
        powers.push(frob.clone());
    }
    // need x^(p^r) == x
    if powers[r] != x {
        return false;
    }
    for &d in crate::exactnum::prime_divisors(r as u64).iter() {
        let i = r / d as usize;
        // gcd(f, x^(p^i) - x) must be 1
        let mut diff = powers[i].clone();
        for (idx, c) in x.iter().enumerate() {
            diff[idx] = (diff[idx] + p - c % p) % p;
        }
        let mut f_full = low.to_vec();
        f_full.push(1);
        let g = poly_gcd(f_full, diff, p);
        let deg = g.iter().rposition(|&c| c != 0);
        if deg != Some(0) {
            return false;
        }
    }
    true
}

fn first_irreducible(p: u64, r: usize) -> Vec<u64> {
    if r == 1 {
        return vec![0]; // x itself
    }
    let mut low = vec![0u64; r];
    loop {
        // next candidate (skip constant term 0: reducible for r >= 2)
        let mut i = 0;
        loop {
            low[i] += 1;
            if low[i] < p {
                break;
            }
            low[i] = 0;
            i += 1;
            assert!(i < r, "exhausted candidates without finding an irreducible");
        }
        if low[0] != 0 && is_irreducible(&low, p) {
            return low;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f4_has_order_3_element() {
        let f = Gfq::new(2, 2);
        let w = f.root_of_unity(3);
        assert!(!f.is_one(&w));
        assert!(!f.is_one(&f.pow(&w, 2)));
        assert!(f.is_one(&f.pow(&w, 3)));
    }

    #[test]
    fn f8_seventh_roots() {
        let f = Gfq::new(2, 3);
        let w = f.root_of_unity(7);
        for e in 1..7 {
            assert!(!f.is_one(&f.pow(&w, e)), "order divides {}", e);
        }
        assert!(f.is_one(&f.pow(&w, 7)));
    }

    #[test]
    fn prime_field_roots() {
        let f = Gfq::new(3, 1);
        let w = f.root_of_unity(2);
        assert_eq!(f.as_scalar(&w), Some(2));
    }

    #[test]
    fn field_arithmetic_sanity() {
        let f = Gfq::new(3, 2);
        // every nonzero element has order dividing 8
        let w = f.root_of_unity(8);
        let mut acc = f.one();
        let mut seen = std::collections::HashSet::new();
        for _ in 0..8 {
            acc = f.mul(&acc, &w);
            seen.insert(acc.clone());
        }
        assert_eq!(seen.len(), 8);
        assert!(f.is_one(&acc));
    }
}
