//! Jacobson radical and Loewy length of commutative F_p-algebras, with
//! exhaustive brute-force oracles for small dimensions.
//!
//! For a commutative algebra the radical equals the nilradical, and x ->
//! x^p is F_p-linear, so the nilradical is the kernel of the m-th power of
//! the Frobenius matrix once p^m >= dim (the nilpotency index of any element
//! is at most the dimension). Radical powers are then iterated product
//! spans. Radical dimensions are stable under scalar field extension, which
//! is why computing over F_p (rather than its algebraic closure) gives the
//! same Loewy lengths; the oracles below re-derive everything by exhaustive
//! enumeration, with no linear algebra shared with the Frobenius route.

use serde::Serialize;
use thiserror::Error;

use crate::linalg::{FpMat, Span};
use crate::modring::{AlgebraError, FpAlgebra};

#[derive(Debug, Error)]
pub enum LoewyError {
    #[error("algebra is not commutative: basis products {0} and {1} differ")]
    NotCommutative(usize, usize),
    #[error("identity coordinates are not idempotent (corrupt block)")]
    CorruptIdentity,
    #[error("dimension {dim} exceeds the enumeration cap {cap} for p = {p}")]
    CapExceeded { dim: usize, cap: usize, p: u64 },
    #[error("radical chain does not descend; the given basis is not nilpotent")]
    NotNilpotent,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Radical filtration of one block: dim B = d_0 > d_1 > ... > d_l = 0 with
/// d_j = dim J^j, and the Loewy length l (= 1 for semisimple blocks).
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct LoewyReport {
    pub block: String,
    pub radical_dims: Vec<usize>,
    pub loewy_length: usize,
}

/// Default exhaustive-enumeration cap: the largest dimension d with
/// p^d <= 16384 (14 for p = 2, 8 for p = 3, 6 for p = 5).
pub fn default_cap(p: u64) -> usize {
    let mut cap = 0;
    let mut acc: u64 = 1;
    while acc.saturating_mul(p) <= 16384 {
        acc *= p;
        cap += 1;
    }
    cap
}

fn unit_vector(dim: usize, i: usize) -> Vec<u64> {
    let mut v = vec![0u64; dim];
    v[i] = 1;
    v
}

fn check_commutative_with_identity<A: FpAlgebra>(a: &A) -> Result<(), LoewyError> {
    let d = a.dim();
    let id = a.identity_vector();
    if a.multiply(&id, &id)? != id {
        return Err(LoewyError::CorruptIdentity);
    }
    for i in 0..d {
        let ui = unit_vector(d, i);
        for j in (i + 1)..d {
            let uj = unit_vector(d, j);
            if a.multiply(&ui, &uj)? != a.multiply(&uj, &ui)? {
                return Err(LoewyError::NotCommutative(i, j));
            }
        }
    }
    Ok(())
}

fn pow_vector<A: FpAlgebra>(a: &A, x: &[u64], mut e: u64) -> Result<Vec<u64>, LoewyError> {
    let mut acc = a.identity_vector();
    let mut base = x.to_vec();
    while e > 0 {
        if e & 1 == 1 {
            acc = a.multiply(&acc, &base)?;
        }
        base = a.multiply(&base, &base)?;
        e >>= 1;
    }
    Ok(acc)
}

/// The matrix of the Frobenius map x -> x^p on the algebra's basis.
pub fn frobenius_matrix<A: FpAlgebra>(a: &A) -> Result<FpMat, LoewyError> {
    let d = a.dim();
    let mut m = FpMat::zeros(a.p(), d, d);
    for i in 0..d {
        let col = pow_vector(a, &unit_vector(d, i), a.p())?;
        for (r, &v) in col.iter().enumerate() {
            m.set(r, i, v);
        }
    }
    Ok(m)
}

/// Basis of the nilradical J(A): the kernel of the m-th Frobenius power,
/// for the least m with p^m >= dim.
pub fn nilradical<A: FpAlgebra>(a: &A) -> Result<Vec<Vec<u64>>, LoewyError> {
    check_commutative_with_identity(a)?;
    let d = a.dim();
    let frob = frobenius_matrix(a)?;
    let mut m = 0usize;
    let mut acc: u64 = 1;
    while (acc as u128) < d as u128 {
        acc = acc.saturating_mul(a.p());
        m += 1;
    }
    Ok(frob.pow(m).kernel_basis())
}

/// Radical power chain J^0 = A, J^(n+1) = span(J^n * J), reported until zero.
pub fn loewy_series<A: FpAlgebra>(
    a: &A,
    label: &str,
    j_basis: &[Vec<u64>],
) -> Result<LoewyReport, LoewyError> {
    let d = a.dim();
    let p = a.p();
    // right-multiplication matrices of the radical generators
    let mult_mats: Vec<FpMat> = j_basis
        .iter()
        .map(|v| {
            let mut m = FpMat::zeros(p, d, d);
            for i in 0..d {
                let col = a.multiply(&unit_vector(d, i), v)?;
                for (r, &x) in col.iter().enumerate() {
                    m.set(r, i, x);
                }
            }
            Ok(m)
        })
        .collect::<Result<_, LoewyError>>()?;

    let mut dims = vec![d];
    let mut current = Span::new(p, d);
    for v in j_basis {
        current.insert(v);
    }
    dims.push(current.dim());
    while *dims.last().unwrap() > 0 {
        let mut next = Span::new(p, d);
        for u in current.basis() {
            for m in &mult_mats {
                next.insert(&m.apply(u));
            }
        }
        if next.dim() >= current.dim() {
            return Err(LoewyError::NotNilpotent);
        }
        dims.push(next.dim());
        current = next;
    }
    let loewy_length = dims.len() - 1;
    Ok(LoewyReport {
        block: label.to_string(),
        radical_dims: dims,
        loewy_length,
    })
}

/// Convenience: nilradical followed by the radical chain.
pub fn loewy_report<A: FpAlgebra>(a: &A, label: &str) -> Result<LoewyReport, LoewyError> {
    let j = nilradical(a)?;
    loewy_series(a, label, &j)
}

fn enumeration_cap<A: FpAlgebra>(a: &A, cap: Option<usize>) -> Result<(), LoewyError> {
    let cap = cap.unwrap_or_else(|| default_cap(a.p()));
    if a.dim() > cap {
        return Err(LoewyError::CapExceeded {
            dim: a.dim(),
            cap,
            p: a.p(),
        });
    }
    Ok(())
}

fn enumerate_vectors(p: u64, dim: usize) -> impl Iterator<Item = Vec<u64>> {
    let total = (p as u128).pow(dim as u32);
    (0..total).map(move |mut n| {
        (0..dim)
            .map(|_| {
                let digit = (n % p as u128) as u64;
                n /= p as u128;
                digit
            })
            .collect()
    })
}

/// Every nilpotent element of the algebra, found by exhausting all p^dim
/// vectors and squaring each until the exponent passes the dimension. Uses
/// only `multiply`; nothing is shared with the Frobenius-kernel route.
pub fn oracle_nilpotent_set<A: FpAlgebra>(
    a: &A,
    cap: Option<usize>,
) -> Result<Vec<Vec<u64>>, LoewyError> {
    enumeration_cap(a, cap)?;
    let d = a.dim();
    let mut out = Vec::new();
    for x in enumerate_vectors(a.p(), d) {
        let mut s = x.clone();
        let mut exponent: u128 = 1;
        while exponent < d as u128 && s.iter().any(|&c| c != 0) {
            s = a.multiply(&s, &s)?;
            exponent *= 2;
        }
        if s.iter().all(|&c| c == 0) {
            out.push(x);
        }
    }
    Ok(out)
}

/// Loewy length computed from the enumerated nilpotent set alone: spans of
/// n-fold products of nilpotents, iterated until zero.
pub fn oracle_loewy_length<A: FpAlgebra>(
    a: &A,
    nilpotents: &[Vec<u64>],
) -> Result<usize, LoewyError> {
    let d = a.dim();
    let mut current = Span::new(a.p(), d);
    for x in nilpotents {
        current.insert(x);
    }
    let mut length = 1;
    while current.dim() > 0 {
        let mut next = Span::new(a.p(), d);
        for x in nilpotents {
            for u in current.basis() {
                next.insert(&a.multiply(x, u)?);
            }
        }
        if next.dim() >= current.dim() {
            return Err(LoewyError::NotNilpotent);
        }
        current = next;
        length += 1;
    }
    Ok(length)
}

/// Canonical (reduced row echelon) basis of the span of a vector family;
/// two families span the same subspace iff their canonical bases are equal.
pub fn canonical_span(p: u64, dim: usize, vectors: &[Vec<u64>]) -> Vec<Vec<u64>> {
    let mut span = Span::new(p, dim);
    for v in vectors {
        span.insert(v);
    }
    span.basis().to_vec()
}

/// Exhaustive idempotent count (0 and the identity are always present; a
/// local algebra has exactly those two).
pub fn count_idempotents<A: FpAlgebra>(a: &A, cap: Option<usize>) -> Result<u64, LoewyError> {
    enumeration_cap(a, cap)?;
    let mut count = 0;
    for x in enumerate_vectors(a.p(), a.dim()) {
        if a.multiply(&x, &x)? == x {
            count += 1;
        }
    }
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::blocks::{block_decomposition, tests::cyclic_table};
    use crate::chartab::tests::{c2, c3, s3};
    use crate::linalg::Span;
    use crate::modring::build_algebra;

    #[test]
    fn c2_radical_at_2() {
        let a = build_algebra(&c2(), 2).unwrap();
        let j = nilradical(&a).unwrap();
        // J is spanned by triv + sgn: (t+s)^2 = t^2 + 2ts + s^2 = 2(t+s) = 0
        assert_eq!(j, vec![vec![1, 1]]);
        let report = loewy_series(&a, "C2", &j).unwrap();
        assert_eq!(report.radical_dims, vec![2, 1, 0]);
        assert_eq!(report.loewy_length, 2);
    }

    #[test]
    fn s3_principal_block_at_3() {
        let blocks = block_decomposition(&s3(), 3).unwrap();
        let b = &blocks[0];
        let j = nilradical(b).unwrap();
        assert_eq!(j.len(), 1);
        let report = loewy_series(b, "B", &j).unwrap();
        assert_eq!(report.radical_dims, vec![2, 1, 0]);
        assert_eq!(report.loewy_length, 2);
    }

    #[test]
    fn c3_at_3_is_a_jordan_chain() {
        let a = build_algebra(&c3(), 3).unwrap();
        let report = loewy_report(&a, "C3").unwrap();
        assert_eq!(report.radical_dims, vec![3, 2, 1, 0]);
        assert_eq!(report.loewy_length, 3);
    }

    #[test]
    fn semisimple_when_p_does_not_divide_order() {
        let a = build_algebra(&s3(), 5).unwrap();
        let report = loewy_report(&a, "S3@5").unwrap();
        assert_eq!(report.radical_dims, vec![3, 0]);
        assert_eq!(report.loewy_length, 1);
        let nil = oracle_nilpotent_set(&a, None).unwrap();
        assert_eq!(nil.len(), 1); // only the zero vector
    }

    #[test]
    fn oracle_matches_frobenius_on_small_algebras() {
        for (t, ps) in [
            (c2(), vec![2u64]),
            (c3(), vec![3]),
            (s3(), vec![2, 3, 5]),
            (cyclic_table(5), vec![2, 5]),
        ] {
            for p in ps {
                let a = build_algebra(&t, p).unwrap();
                let j = nilradical(&a).unwrap();
                let nil = oracle_nilpotent_set(&a, None).unwrap();
                let mut span_frob = Span::new(p, a.dim());
                for v in &j {
                    span_frob.insert(v);
                }
                let mut span_oracle = Span::new(p, a.dim());
                for v in &nil {
                    span_oracle.insert(v);
                }
                assert!(span_frob.same_space(&span_oracle), "{} at {}", t.name, p);
                // every enumerated nilpotent is in the kernel span and vice
                // versa by cardinality
                assert_eq!(nil.len() as u128, (p as u128).pow(j.len() as u32));
                let ll = loewy_series(&a, "", &j).unwrap().loewy_length;
                assert_eq!(ll, oracle_loewy_length(&a, &nil).unwrap());
            }
        }
    }

    #[test]
    fn c2_oracle_nilpotents_exactly() {
        let a = build_algebra(&c2(), 2).unwrap();
        let nil = oracle_nilpotent_set(&a, None).unwrap();
        assert_eq!(nil, vec![vec![0, 0], vec![1, 1]]);
    }

    #[test]
    fn s3_principal_block_oracle_at_3() {
        let blocks = block_decomposition(&s3(), 3).unwrap();
        let nil = oracle_nilpotent_set(&blocks[0], None).unwrap();
        // {0, x, 2x} for the single radical generator x
        assert_eq!(nil.len(), 3);
    }

    #[test]
    fn frobenius_linearity_on_random_vectors() {
        let mut state: u64 = 42;
        let mut next = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1);
            state >> 33
        };
        for (t, p) in [(s3(), 2u64), (s3(), 3), (c3(), 3), (cyclic_table(5), 5)] {
            let a = build_algebra(&t, p).unwrap();
            let m = frobenius_matrix(&a).unwrap();
            for _ in 0..100 {
                let x: Vec<u64> = (0..a.dim()).map(|_| next() % p).collect();
                let via_matrix = m.apply(&x);
                let direct = pow_vector(&a, &x, p).unwrap();
                assert_eq!(via_matrix, direct);
            }
        }
    }

    #[test]
    fn radical_is_an_ideal() {
        for (t, p) in [(s3(), 2u64), (s3(), 3), (c3(), 3)] {
            let a = build_algebra(&t, p).unwrap();
            let j = nilradical(&a).unwrap();
            let mut span = Span::new(p, a.dim());
            for v in &j {
                span.insert(v);
            }
            for i in 0..a.dim() {
                let b = unit_vector(a.dim(), i);
                for v in &j {
                    let prod = a.multiply(&b, v).unwrap();
                    assert!(span.contains(&prod));
                }
            }
        }
    }

    #[test]
    fn quotient_frobenius_is_injective() {
        // Frobenius on B/J: lift basis of B, apply Frobenius, the image must
        // span a complement of J of full rank, i.e. rank(F mod J) = dim - dim J.
        for (t, p) in [(s3(), 2u64), (s3(), 3), (c2(), 2), (c3(), 3)] {
            let a = build_algebra(&t, p).unwrap();
            let j = nilradical(&a).unwrap();
            let frob = frobenius_matrix(&a).unwrap();
            // rank of Frobenius composed with projection mod J: J together
            // with the Frobenius images of a basis must fill the algebra.
            let mut total = Span::new(p, a.dim());
            for v in &j {
                total.insert(v);
            }
            for i in 0..a.dim() {
                total.insert(&frob.apply(&unit_vector(a.dim(), i)));
            }
            assert_eq!(total.dim(), a.dim(), "{} at {}", t.name, p);
        }
    }

    #[test]
    fn cap_is_enforced() {
        assert_eq!(default_cap(2), 14);
        assert_eq!(default_cap(3), 8);
        assert_eq!(default_cap(5), 6);
        let a = build_algebra(&cyclic_table(5), 5).unwrap();
        assert!(matches!(
            oracle_nilpotent_set(&a, Some(3)),
            Err(LoewyError::CapExceeded { dim: 5, cap: 3, .. })
        ));
    }

    #[test]
    fn idempotent_counts() {
        // F_2 Irr(C2) is local: exactly 0 and 1.
        let a = build_algebra(&c2(), 2).unwrap();
        assert_eq!(count_idempotents(&a, None).unwrap(), 2);
        // S3 at 3 splits into two blocks, each local: 2^2 = 4 idempotents.
        let a = build_algebra(&s3(), 3).unwrap();
        assert_eq!(count_idempotents(&a, None).unwrap(), 4);
        // and each block alone is local
        for b in block_decomposition(&s3(), 3).unwrap() {
            assert_eq!(count_idempotents(&b, None).unwrap(), 2);
        }
    }
}
