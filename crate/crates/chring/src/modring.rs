//! The character ring as a structure-constant algebra, exactly and mod p.
//!
//! The product of two irreducible characters decomposes back into
//! irreducibles; the multiplicities are the scalar products
//! [chi_i chi_j, chi_l] = (1/|G|) sum_C |C| chi_i(c) chi_j(c) chi_l(c^{-1}),
//! nonnegative integers. Reducing the full tensor mod p yields the
//! finite-dimensional commutative F_p-algebra everything downstream works in.
//!
//! The exact tensor is computed once per table on the integer kernel
//! (parallelized over character pairs) and can be reduced at several primes
//! without recomputation.

use num::{BigInt, Signed, Zero};
use rayon::prelude::*;
use thiserror::Error;

use crate::chartab::{inverse_class_map, CharacterTable, TableError};
use crate::exactnum::Rational;
use crate::lift::CycloDomain;

#[derive(Debug, Error)]
pub enum AlgebraError {
    #[error("inconsistent table: {0}")]
    InconsistentTable(String),
    #[error("vector has {got} entries, algebra dimension is {dim}")]
    LengthMismatch { got: usize, dim: usize },
    #[error("internal invariant violated: {0}")]
    Internal(String),
    #[error(transparent)]
    Table(#[from] TableError),
}

/// Exact integer structure constants of Z Irr(G).
#[derive(Debug, Clone)]
pub struct ExactTensor {
    pub dim: usize,
    constants: Vec<i64>,
}

impl ExactTensor {
    pub fn get(&self, i: usize, j: usize, l: usize) -> i64 {
        self.constants[(i * self.dim + j) * self.dim + l]
    }

    /// Reduce every constant mod p.
    pub fn reduce_mod(&self, p: u64) -> ModAlgebra {
        let constants = self
            .constants
            .iter()
            .map(|&c| c.rem_euclid(p as i64) as u64)
            .collect();
        ModAlgebra {
            p,
            dim: self.dim,
            constants,
        }
    }
}

/// F_p Irr(G): the mod-p character ring with basis indexed by Irr(G).
/// Index 0 (the trivial character) is the identity.
#[derive(Debug, Clone)]
pub struct ModAlgebra {
    pub p: u64,
    dim: usize,
    constants: Vec<u64>,
}

/// A finite-dimensional commutative algebra over F_p presented by structure
/// constants, with a distinguished identity element.
pub trait FpAlgebra {
    fn p(&self) -> u64;
    fn dim(&self) -> usize;
    fn multiply(&self, x: &[u64], y: &[u64]) -> Result<Vec<u64>, AlgebraError>;
    fn identity_vector(&self) -> Vec<u64>;
}

impl ModAlgebra {
    pub fn constant(&self, i: usize, j: usize, l: usize) -> u64 {
        self.constants[(i * self.dim + j) * self.dim + l]
    }

    /// Run the algebra laws: commutativity and the identity law everywhere,
    /// associativity exhaustively up to dimension 12 and on a deterministic
    /// sample above.
    pub fn verify(&self) -> Result<(), AlgebraError> {
        let k = self.dim;
        for i in 0..k {
            for j in 0..k {
                for l in 0..k {
                    if self.constant(i, j, l) != self.constant(j, i, l) {
                        return Err(AlgebraError::Internal(format!(
                            "structure constants not commutative at ({}, {}, {})",
                            i, j, l
                        )));
                    }
                }
            }
        }
        for j in 0..k {
            for l in 0..k {
                let expect = u64::from(j == l);
                if self.constant(0, j, l) != expect {
                    return Err(AlgebraError::Internal(format!(
                        "identity law fails at ({}, {})",
                        j, l
                    )));
                }
            }
        }
        let check_assoc = |i: usize, j: usize, l: usize, r: usize| -> bool {
            let mut lhs: u128 = 0;
            let mut rhs: u128 = 0;
            for m in 0..k {
                lhs += self.constant(i, j, m) as u128 * self.constant(m, l, r) as u128;
                rhs += self.constant(j, l, m) as u128 * self.constant(i, m, r) as u128;
            }
            lhs % self.p as u128 == rhs % self.p as u128
        };
        if k <= 12 {
            for i in 0..k {
                for j in 0..k {
                    for l in 0..k {
                        for r in 0..k {
                            if !check_assoc(i, j, l, r) {
                                return Err(AlgebraError::Internal(format!(
                                    "associativity fails at ({}, {}, {}, {})",
                                    i, j, l, r
                                )));
                            }
                        }
                    }
                }
            }
        } else {
            // deterministic LCG sample
            let mut state: u64 = 0x5deece66d;
            let mut next = || {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                (state >> 33) as usize
            };
            for _ in 0..200 {
                let (i, j, l, r) = (next() % k, next() % k, next() % k, next() % k);
                if !check_assoc(i, j, l, r) {
                    return Err(AlgebraError::Internal(format!(
                        "associativity fails at ({}, {}, {}, {})",
                        i, j, l, r
                    )));
                }
            }
        }
        Ok(())
    }
}

impl FpAlgebra for ModAlgebra {
    fn p(&self) -> u64 {
        self.p
    }

    fn dim(&self) -> usize {
        self.dim
    }

    fn multiply(&self, x: &[u64], y: &[u64]) -> Result<Vec<u64>, AlgebraError> {
        if x.len() != self.dim {
            return Err(AlgebraError::LengthMismatch {
                got: x.len(),
                dim: self.dim,
            });
        }
        if y.len() != self.dim {
            return Err(AlgebraError::LengthMismatch {
                got: y.len(),
                dim: self.dim,
            });
        }
        let p = self.p as u128;
        let mut out = vec![0u64; self.dim];
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for (j, &yj) in y.iter().enumerate() {
                if yj == 0 {
                    continue;
                }
                let f = (xi as u128 * yj as u128 % p) as u64;
                let base = (i * self.dim + j) * self.dim;
                for l in 0..self.dim {
                    let c = self.constants[base + l];
                    if c != 0 {
                        out[l] = ((out[l] as u128 + f as u128 * c as u128) % p) as u64;
                    }
                }
            }
        }
        Ok(out)
    }

    fn identity_vector(&self) -> Vec<u64> {
        let mut e = vec![0u64; self.dim];
        e[0] = 1;
        e
    }
}

/// Exact scalar product [chi_i chi_j, chi_l], computed directly with generic
/// cyclotomic arithmetic. This is the slow reference route; `exact_tensor`
/// computes the same numbers on the integer kernel.
pub fn scalar_product_triple(
    t: &CharacterTable,
    i: usize,
    j: usize,
    l: usize,
) -> Result<u64, AlgebraError> {
    let inv = inverse_class_map(t)?;
    let mut acc = crate::exactnum::Cyclotomic::from_integer(0);
    for c in 0..t.class_count() {
        let term = t.irreducibles[i][c]
            .mul(&t.irreducibles[j][c])
            .mul(&t.irreducibles[l][inv[c]]);
        acc = acc.add(&term.scale(&Rational::from(BigInt::from(t.classes[c].size))));
    }
    let Some(total) = acc.as_rational() else {
        return Err(AlgebraError::InconsistentTable(format!(
            "scalar product [{} {}, {}] is irrational: {}",
            i, j, l, acc
        )));
    };
    let n = total / Rational::from(BigInt::from(t.order));
    if !n.is_integer() || n.is_negative() {
        return Err(AlgebraError::InconsistentTable(format!(
            "scalar product [{} {}, {}] = {} is not a nonnegative integer",
            i, j, l, n
        )));
    }
    u64::try_from(n.numer()).map_err(|_| {
        AlgebraError::InconsistentTable(format!("scalar product [{} {}, {}] overflows", i, j, l))
    })
}

/// Compute all k^3 exact structure constants of Z Irr(G).
pub fn exact_tensor(t: &CharacterTable) -> Result<ExactTensor, AlgebraError> {
    let k = t.class_count();
    let inv = inverse_class_map(t)?;
    let dom = CycloDomain::new(t.value_conductor_lcm())
        .map_err(|e| AlgebraError::InconsistentTable(e.to_string()))?;
    let mut values: Vec<Vec<Vec<i64>>> = Vec::with_capacity(k);
    for row in &t.irreducibles {
        let mut vr = Vec::with_capacity(k);
        for v in row {
            vr.push(
                dom.lift(v)
                    .map_err(|e| AlgebraError::InconsistentTable(e.to_string()))?,
            );
        }
        values.push(vr);
    }
    let sizes: Vec<i64> = t.classes.iter().map(|c| c.size as i64).collect();
    let order = t.order as i128;

    let pairs: Vec<(usize, usize)> = (0..k)
        .flat_map(|i| (i..k).map(move |j| (i, j)))
        .collect();
    let results: Result<Vec<((usize, usize), Vec<i64>)>, AlgebraError> = pairs
        .par_iter()
        .map(|&(i, j)| {
            // pointwise product chi_i * chi_j on every class
            let mut pointwise = Vec::with_capacity(k);
            for c in 0..k {
                pointwise.push(dom.mul(&values[i][c], &values[j][c]).map_err(|e| {
                    AlgebraError::InconsistentTable(e.to_string())
                })?);
            }
            let mut row = vec![0i64; k];
            for l_idx in 0..k {
                let mut acc = vec![0i128; dom.phi];
                for c in 0..k {
                    dom.mul_acc(&pointwise[c], &values[l_idx][inv[c]], sizes[c], &mut acc);
                }
                if acc[1..].iter().any(|&x| x != 0) {
                    return Err(AlgebraError::InconsistentTable(format!(
                        "scalar product [{} {}, {}] is irrational",
                        i, j, l_idx
                    )));
                }
                if acc[0] % order != 0 || acc[0] < 0 {
                    return Err(AlgebraError::InconsistentTable(format!(
                        "scalar product [{} {}, {}] = {}/{} is not a nonnegative integer",
                        i, j, l_idx, acc[0], order
                    )));
                }
                row[l_idx] = (acc[0] / order) as i64;
            }
            Ok(((i, j), row))
        })
        .collect();

    let mut constants = vec![0i64; k * k * k];
    for ((i, j), row) in results? {
        for (l_idx, &n) in row.iter().enumerate() {
            constants[(i * k + j) * k + l_idx] = n;
            constants[(j * k + i) * k + l_idx] = n;
        }
    }
    let tensor = ExactTensor { dim: k, constants };

    // Identity law and degree consistency are theorems for genuine character
    // tables; a violation means corrupted input.
    for j in 0..k {
        for l_idx in 0..k {
            let expect = i64::from(j == l_idx);
            if tensor.get(0, j, l_idx) != expect {
                return Err(AlgebraError::InconsistentTable(format!(
                    "trivial character does not act as identity at ({}, {})",
                    j, l_idx
                )));
            }
        }
    }
    let degrees: Vec<i64> = (0..k).map(|i| t.degree(i) as i64).collect();
    for i in 0..k {
        for j in 0..k {
            let total: i64 = (0..k).map(|l_idx| tensor.get(i, j, l_idx) * degrees[l_idx]).sum();
            if total != degrees[i] * degrees[j] {
                return Err(AlgebraError::InconsistentTable(format!(
                    "degree consistency fails for characters {} and {}",
                    i, j
                )));
            }
        }
    }
    Ok(tensor)
}

/// Build F_p Irr(G): the exact tensor reduced mod p.
pub fn build_algebra(t: &CharacterTable, p: u64) -> Result<ModAlgebra, AlgebraError> {
    let algebra = exact_tensor(t)?.reduce_mod(p);
    algebra.verify()?;
    Ok(algebra)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chartab::tests::{c1, c2, s3};

    #[test]
    fn s3_std_cubed_coefficient() {
        // [std*std, std] = (1*8 + 3*0 + 2*(-1)) / 6 = 1
        assert_eq!(scalar_product_triple(&s3(), 2, 2, 2).unwrap(), 1);
    }

    #[test]
    fn trivial_character_gives_delta() {
        let t = s3();
        for j in 0..3 {
            for l in 0..3 {
                assert_eq!(
                    scalar_product_triple(&t, 0, j, l).unwrap(),
                    u64::from(j == l)
                );
            }
        }
    }

    #[test]
    fn sign_squares_to_trivial() {
        assert_eq!(scalar_product_triple(&s3(), 1, 1, 0).unwrap(), 1);
        assert_eq!(scalar_product_triple(&s3(), 1, 1, 1).unwrap(), 0);
        assert_eq!(scalar_product_triple(&s3(), 1, 1, 2).unwrap(), 0);
    }

    #[test]
    fn tensor_matches_direct_route() {
        for t in [s3(), c2(), crate::sections::tests::c6()] {
            let tensor = exact_tensor(&t).unwrap();
            let k = t.class_count();
            for i in 0..k {
                for j in 0..k {
                    for l in 0..k {
                        assert_eq!(
                            tensor.get(i, j, l) as u64,
                            scalar_product_triple(&t, i, j, l).unwrap(),
                            "mismatch at ({}, {}, {})",
                            i,
                            j,
                            l
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn s3_std_squared_decomposition() {
        // std^2 = triv + sgn + std exactly, so mod 2 and mod 3 alike
        let tensor = exact_tensor(&s3()).unwrap();
        assert_eq!(
            (0..3).map(|l| tensor.get(2, 2, l)).collect::<Vec<_>>(),
            vec![1, 1, 1]
        );
        for p in [2, 3] {
            let a = tensor.reduce_mod(p);
            let std = vec![0, 0, 1];
            assert_eq!(a.multiply(&std, &std).unwrap(), vec![1, 1, 1]);
        }
    }

    #[test]
    fn c2_sign_squares_to_identity_mod_2() {
        let a = build_algebra(&c2(), 2).unwrap();
        assert_eq!(a.dim(), 2);
        assert_eq!(a.multiply(&[0, 1], &[0, 1]).unwrap(), vec![1, 0]);
    }

    #[test]
    fn c1_is_one_dimensional() {
        for p in [2, 3, 5] {
            let a = build_algebra(&c1(), p).unwrap();
            assert_eq!(a.dim(), 1);
            assert_eq!(a.multiply(&[1], &[1]).unwrap(), vec![1]);
        }
    }

    #[test]
    fn multiply_identity_and_zero() {
        let a = build_algebra(&s3(), 3).unwrap();
        let x = vec![1, 2, 1];
        assert_eq!(a.multiply(&x, &a.identity_vector()).unwrap(), x);
        assert_eq!(a.multiply(&x, &[0, 0, 0]).unwrap(), vec![0, 0, 0]);
        assert!(matches!(
            a.multiply(&x, &[1, 2]),
            Err(AlgebraError::LengthMismatch { got: 2, dim: 3 })
        ));
    }

    #[test]
    fn multiply_matches_exact_associativity() {
        let a = build_algebra(&s3(), 2).unwrap();
        a.verify().unwrap();
        // (x y) z = x (y z) for a few explicit vectors
        let vs = [vec![1, 0, 1], vec![0, 1, 1], vec![1, 1, 1]];
        for x in &vs {
            for y in &vs {
                for z in &vs {
                    let xy_z = a.multiply(&a.multiply(x, y).unwrap(), z).unwrap();
                    let x_yz = a.multiply(x, &a.multiply(y, z).unwrap()).unwrap();
                    assert_eq!(xy_z, x_yz);
                }
            }
        }
    }
}
