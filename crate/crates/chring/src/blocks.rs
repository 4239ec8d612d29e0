//! Section idempotents and the block decomposition of F_p Irr(G).
//!
//! The indicator function of a p'-section S is an idempotent e_S of the
//! character ring with p-integral coefficients; its coefficient on chi is
//! (1/|G|) sum over S of chi(g^{-1}). Over F_p the primitive idempotents are
//! the orbit sums of the e_S under the p-power map on p-regular classes
//! (the arithmetic Frobenius permutes the section idempotents exactly that
//! way). Orbit sums usually have rational coefficients and reduce via plain
//! p-integral arithmetic; when an orbit sum is irrational it is still fixed
//! by zeta -> zeta^p, and its image in F_p is computed through a fixed prime
//! above p (see `PadicReduction`).

use thiserror::Error;

use crate::chartab::{
    inverse_class_map, power_class_map, CharacterTable, TableError,
};
use crate::exactnum::{
    mod_inverse_general, rational_mod_p, Cyclotomic, NumError, Rational,
};
use crate::gfq::Gfq;
use crate::linalg::Span;
use crate::modring::{build_algebra, AlgebraError, FpAlgebra, ModAlgebra};
use crate::sections::{section_partition, SectionError, SectionPartition};

#[derive(Debug, Error)]
pub enum BlockError {
    #[error("inconsistent table: {0}")]
    InconsistentTable(String),
    #[error("orbit fusion incomplete: {0}")]
    OrbitFusion(String),
    #[error("zero idempotent")]
    ZeroIdempotent,
    #[error("internal invariant violated: {0}")]
    Internal(String),
    #[error(transparent)]
    Table(#[from] TableError),
    #[error(transparent)]
    Section(#[from] SectionError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// One block B = A e of the mod-p character ring.
#[derive(Debug, Clone)]
pub struct BlockAlgebra {
    pub p: u64,
    /// The block idempotent in the Irr basis.
    pub idempotent: Vec<u64>,
    /// The p-regular classes whose sections were fused into this block.
    pub sections: Vec<usize>,
    /// Canonical basis of A e, as vectors in the Irr basis.
    pub basis: Vec<Vec<u64>>,
    /// Structure constants in the block basis.
    constants: Vec<u64>,
    /// The idempotent expressed in the block basis.
    pub identity_coords: Vec<u64>,
}

impl BlockAlgebra {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    /// Map block coordinates back to the Irr basis of the parent algebra.
    pub fn to_parent(&self, x: &[u64]) -> Vec<u64> {
        let k = self.basis.first().map_or(0, Vec::len);
        let mut out = vec![0u64; k];
        for (c, row) in x.iter().zip(&self.basis) {
            for (o, r) in out.iter_mut().zip(row) {
                *o = (*o + c * r) % self.p;
            }
        }
        out
    }

    pub fn constant(&self, i: usize, j: usize, l: usize) -> u64 {
        let d = self.dimension();
        self.constants[(i * d + j) * d + l]
    }
}

impl FpAlgebra for BlockAlgebra {
    fn p(&self) -> u64 {
        self.p
    }

    fn dim(&self) -> usize {
        self.dimension()
    }

    fn multiply(&self, x: &[u64], y: &[u64]) -> Result<Vec<u64>, AlgebraError> {
        let d = self.dimension();
        if x.len() != d {
            return Err(AlgebraError::LengthMismatch { got: x.len(), dim: d });
        }
        if y.len() != d {
            return Err(AlgebraError::LengthMismatch { got: y.len(), dim: d });
        }
        let p = self.p as u128;
        let mut out = vec![0u64; d];
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for (j, &yj) in y.iter().enumerate() {
                if yj == 0 {
                    continue;
                }
                let f = (xi as u128 * yj as u128 % p) as u64;
                let base = (i * d + j) * d;
                for l in 0..d {
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
        self.identity_coords.clone()
    }
}

fn section_idempotent_raw(
    t: &CharacterTable,
    inv: &[usize],
    fiber: &[usize],
) -> Vec<Cyclotomic> {
    let order = Rational::from(num::BigInt::from(t.order));
    (0..t.class_count())
        .map(|i| {
            let mut acc = Cyclotomic::from_integer(0);
            for &c in fiber {
                let w = Rational::from(num::BigInt::from(t.classes[c].size));
                acc = acc.add(&t.irreducibles[i][inv[c]].scale(&w));
            }
            acc.scale(&(Rational::from(num::BigInt::from(1)) / &order))
        })
        .collect()
}

/// Evaluate a coefficient vector (in the Irr basis) as a class function and
/// check it is exactly the indicator of the given class set.
fn verify_indicator(
    t: &CharacterTable,
    coeffs: &[Cyclotomic],
    member_classes: &[usize],
) -> Result<(), BlockError> {
    for c in 0..t.class_count() {
        let mut acc = Cyclotomic::from_integer(0);
        for (i, coeff) in coeffs.iter().enumerate() {
            acc = acc.add(&coeff.mul(&t.irreducibles[i][c]));
        }
        let expect = i64::from(member_classes.contains(&c));
        if acc != Cyclotomic::from_integer(expect) {
            return Err(BlockError::Internal(format!(
                "idempotent evaluates to {} on class {}, expected {}",
                acc, c, expect
            )));
        }
    }
    Ok(())
}

/// Exact coefficients of the section idempotent e_S in the Irr basis, with
/// the pointwise indicator property verified.
pub fn section_idempotent_exact(
    t: &CharacterTable,
    fiber: &[usize],
) -> Result<Vec<Cyclotomic>, BlockError> {
    let inv = inverse_class_map(t)?;
    let coeffs = section_idempotent_raw(t, &inv, fiber);
    verify_indicator(t, &coeffs, fiber)?;
    Ok(coeffs)
}

/// Reduction of p-integral cyclotomic integers modulo a fixed prime above p.
///
/// All inputs are lifted to one common conductor m = p^a * m'; the ring map
/// sends zeta_m to eta = omega^((p^a)^{-1} mod m') where omega is a fixed
/// primitive m'-th root of unity in F_(p^r), r = ord_(m')(p). Roots of unity
/// of p-power order go to 1. One fixed map is used for a whole decomposition
/// so the reduced idempotents form a consistent system.
struct PadicReduction {
    p: u64,
    m: u32,
    fq: Gfq,
    eta_pows: Vec<crate::gfq::El>,
}

impl PadicReduction {
    fn new(p: u64, m: u32) -> PadicReduction {
        let mut m_prime = m as u64;
        let mut pa: u64 = 1;
        while m_prime % p == 0 {
            m_prime /= p;
            pa *= p;
        }
        let mut r = 1usize;
        if m_prime > 1 {
            let mut acc = p % m_prime;
            r = 1;
            while acc != 1 {
                acc = acc * p % m_prime;
                r += 1;
            }
        }
        let fq = Gfq::new(p, r);
        let eta = if m_prime == 1 {
            fq.one()
        } else {
            let omega = fq.root_of_unity(m_prime);
            fq.pow(&omega, mod_inverse_general(pa % m_prime, m_prime))
        };
        let phi = crate::exactnum::euler_phi(m);
        let mut eta_pows = Vec::with_capacity(phi);
        let mut acc = fq.one();
        for _ in 0..phi {
            eta_pows.push(acc.clone());
            acc = fq.mul(&acc, &eta);
        }
        PadicReduction { p, m, fq, eta_pows }
    }

    fn reduce(&self, v: &Cyclotomic) -> Result<u64, BlockError> {
        let lifted = v.lift_to(self.m);
        let mut acc = self.fq.zero();
        for (e, c) in lifted.coeffs().iter().enumerate() {
            if num::Zero::is_zero(c) {
                continue;
            }
            let cp = rational_mod_p(c, self.p).map_err(|err: NumError| {
                BlockError::OrbitFusion(err.to_string())
            })?;
            if cp != 0 {
                acc = self.fq.add(&acc, &self.fq.scale(&self.eta_pows[e], cp));
            }
        }
        self.fq.as_scalar(&acc).ok_or_else(|| {
            BlockError::OrbitFusion(format!(
                "orbit sum {} does not reduce into the prime field",
                v
            ))
        })
    }
}

/// The principal idempotent e_{G_p} reduced mod p; its exact coefficients are
/// rational and p-integral for every valid table, so any failure is reported
/// as an inconsistent table. The result is verified idempotent in
/// `build_algebra(t, p)`.
pub fn principal_idempotent_mod_p(
    t: &CharacterTable,
    p: u64,
) -> Result<Vec<u64>, BlockError> {
    let sp = section_partition(t, p)?;
    let exact = section_idempotent_exact(t, &sp.principal_fiber())?;
    let reduced = reduce_principal(&exact, p)?;
    let a = build_algebra(t, p)?;
    if a.multiply(&reduced, &reduced)? != reduced {
        return Err(BlockError::Internal(
            "principal idempotent is not idempotent mod p".into(),
        ));
    }
    Ok(reduced)
}

fn reduce_principal(exact: &[Cyclotomic], p: u64) -> Result<Vec<u64>, BlockError> {
    exact
        .iter()
        .map(|v| {
            let r = v.as_rational().ok_or_else(|| {
                BlockError::InconsistentTable(format!(
                    "principal idempotent coefficient {} is irrational",
                    v
                ))
            })?;
            rational_mod_p(&r, p)
                .map_err(|e| BlockError::InconsistentTable(e.to_string()))
        })
        .collect()
}

/// Cut the subalgebra A e out of A: basis of {b_i e} by rank-revealing
/// elimination in table order, induced structure constants, and the identity
/// coordinates of e.
pub fn block_subalgebra(
    a: &ModAlgebra,
    e: &[u64],
    sections: Vec<usize>,
) -> Result<BlockAlgebra, BlockError> {
    let k = a.dim();
    if e.iter().all(|&x| x == 0) {
        return Err(BlockError::ZeroIdempotent);
    }
    if a.multiply(e, e)? != e.to_vec() {
        return Err(BlockError::Internal(
            "block cut requested for a non-idempotent vector".into(),
        ));
    }
    let mut span = Span::new(a.p(), k);
    for i in 0..k {
        let mut unit = vec![0u64; k];
        unit[i] = 1;
        span.insert(&a.multiply(&unit, e)?);
    }
    let basis: Vec<Vec<u64>> = span.basis().to_vec();
    let d = basis.len();
    let mut constants = vec![0u64; d * d * d];
    for (i, u) in basis.iter().enumerate() {
        for (j, v) in basis.iter().enumerate().skip(i) {
            let w = a.multiply(u, v)?;
            let coords = span.coordinates(&w).ok_or_else(|| {
                BlockError::Internal("block is not multiplicatively closed".into())
            })?;
            for (l, &c) in coords.iter().enumerate() {
                constants[(i * d + j) * d + l] = c;
                constants[(j * d + i) * d + l] = c;
            }
        }
        if a.multiply(u, e)? != *u {
            return Err(BlockError::Internal(
                "basis vector not fixed by the block idempotent".into(),
            ));
        }
    }
    let identity_coords = span
        .coordinates(e)
        .ok_or_else(|| BlockError::Internal("idempotent outside its own block".into()))?;
    Ok(BlockAlgebra {
        p: a.p(),
        idempotent: e.to_vec(),
        sections,
        basis,
        constants,
        identity_coords,
    })
}

/// Decompose F_p Irr(G) into blocks: one block per orbit of the p-power map
/// on p-regular classes. The principal block (the orbit of the identity
/// class) always comes first.
pub fn block_decomposition(t: &CharacterTable, p: u64) -> Result<Vec<BlockAlgebra>, BlockError> {
    let a = build_algebra(t, p)?;
    let sp = section_partition(t, p)?;
    block_decomposition_with(t, &a, &sp)
}

/// Like [`block_decomposition`], reusing an already-built algebra and section
/// partition.
pub fn block_decomposition_with(
    t: &CharacterTable,
    a: &ModAlgebra,
    sp: &SectionPartition,
) -> Result<Vec<BlockAlgebra>, BlockError> {
    let p = sp.p;
    let k = t.class_count();
    let inv = inverse_class_map(t)?;
    let fibers = sp.fibers();
    let fiber_of = |r: usize| -> &[usize] {
        let pos = sp
            .regular_classes
            .iter()
            .position(|&x| x == r)
            .expect("regular class");
        &fibers[pos].1
    };

    // p-power map on regular classes: stored maps when p divides the order,
    // otherwise the Galois action on columns.
    let galois_map = if t.order % p == 0 {
        None
    } else {
        Some(power_class_map(t, p)?)
    };
    let step = |r: usize| -> Result<usize, BlockError> {
        let image = match &galois_map {
            Some(map) => map[r],
            None => *t.classes[r]
                .power_maps
                .get(&p)
                .ok_or(SectionError::MissingPowerMap { class: r, p })?,
        };
        if !sp.regular_classes.contains(&image) {
            return Err(BlockError::Internal(format!(
                "p-power image {} of regular class {} is not p-regular",
                image, r
            )));
        }
        Ok(image)
    };

    let mut orbits: Vec<Vec<usize>> = Vec::new();
    let mut seen = vec![false; k];
    for &r in &sp.regular_classes {
        if seen[r] {
            continue;
        }
        let mut orbit = Vec::new();
        let mut cur = r;
        while !seen[cur] {
            seen[cur] = true;
            orbit.push(cur);
            cur = step(cur)?;
        }
        if !orbit.contains(&cur) {
            return Err(BlockError::Internal(format!(
                "p-power map is not a permutation near class {}",
                cur
            )));
        }
        orbit.sort_unstable();
        orbits.push(orbit);
    }

    let mut padic: Option<PadicReduction> = None;
    let mut blocks = Vec::with_capacity(orbits.len());
    for orbit in &orbits {
        let mut exact = vec![Cyclotomic::from_integer(0); k];
        let mut members = Vec::new();
        for &r in orbit {
            let fiber = fiber_of(r);
            members.extend_from_slice(fiber);
            for (acc, c) in exact.iter_mut().zip(section_idempotent_raw(t, &inv, fiber)) {
                *acc = acc.add(&c);
            }
        }
        members.sort_unstable();
        verify_indicator(t, &exact, &members)?;

        let principal = orbit.contains(&0);
        let all_rational = exact.iter().all(|v| v.as_rational().is_some());
        let reduced: Vec<u64> = if all_rational {
            let res: Result<Vec<u64>, BlockError> = exact
                .iter()
                .map(|v| {
                    let r = v.as_rational().expect("checked rational");
                    rational_mod_p(&r, p).map_err(|e| {
                        if principal {
                            BlockError::InconsistentTable(e.to_string())
                        } else {
                            BlockError::OrbitFusion(e.to_string())
                        }
                    })
                })
                .collect();
            res?
        } else if principal {
            return Err(BlockError::InconsistentTable(
                "principal idempotent has irrational coefficients".into(),
            ));
        } else {
            let ctx = match &padic {
                Some(ctx) => ctx,
                None => {
                    padic = Some(PadicReduction::new(p, t.value_conductor_lcm()));
                    padic.as_ref().unwrap()
                }
            };
            let res: Result<Vec<u64>, BlockError> =
                exact.iter().map(|v| ctx.reduce(v)).collect();
            res?
        };
        if a.multiply(&reduced, &reduced)? != reduced {
            return Err(BlockError::Internal(format!(
                "fused idempotent for sections {:?} is not idempotent",
                orbit
            )));
        }
        if reduced.iter().all(|&x| x == 0) {
            return Err(BlockError::Internal(format!(
                "fused idempotent for sections {:?} reduces to zero",
                orbit
            )));
        }
        blocks.push(block_subalgebra(a, &reduced, orbit.clone())?);
    }

    // System invariants: orthogonal, complete, dimensions fill the algebra.
    let mut sum = vec![0u64; k];
    for b in &blocks {
        for (s, &x) in sum.iter_mut().zip(&b.idempotent) {
            *s = (*s + x) % p;
        }
    }
    if sum != a.identity_vector() {
        return Err(BlockError::Internal(
            "block idempotents do not sum to the identity".into(),
        ));
    }
    for (i, b1) in blocks.iter().enumerate() {
        for b2 in blocks.iter().skip(i + 1) {
            let prod = a.multiply(&b1.idempotent, &b2.idempotent)?;
            if prod.iter().any(|&x| x != 0) {
                return Err(BlockError::Internal(format!(
                    "idempotents of sections {:?} and {:?} are not orthogonal",
                    b1.sections, b2.sections
                )));
            }
        }
    }
    let total: usize = blocks.iter().map(BlockAlgebra::dimension).sum();
    if total != k {
        return Err(BlockError::Internal(format!(
            "block dimensions sum to {}, expected {}",
            total, k
        )));
    }
    Ok(blocks)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chartab::tests::{c2, c3, s3};
    use num::BigInt;

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    /// C5 and C7 built directly: classes 1, g, ..., g^(n-1) with
    /// chi_i(g^j) = zeta_n^(i j).
    pub(crate) fn cyclic_table(n: u32) -> CharacterTable {
        use crate::chartab::ConjClass;
        let k = n as usize;
        let primes = crate::exactnum::prime_divisors(n as u64);
        let classes: Vec<ConjClass> = (0..k)
            .map(|j| {
                let order = n as u64 / num::integer::gcd(n as u64, j as u64);
                let power_maps = primes
                    .iter()
                    .map(|&q| (q, (j * q as usize) % k))
                    .collect();
                ConjClass {
                    size: 1,
                    element_order: order,
                    power_maps,
                }
            })
            .collect();
        let irreducibles: Vec<Vec<Cyclotomic>> = (0..k)
            .map(|i| {
                (0..k)
                    .map(|j| {
                        Cyclotomic::normalize(n, [((i * j) as i64, Rational::from(BigInt::from(1)))])
                            .unwrap()
                    })
                    .collect()
            })
            .collect();
        let t = CharacterTable {
            name: format!("C{}", n),
            order: n as u64,
            classes,
            irreducibles,
        };
        assert!(crate::chartab::validate_table(&t).passed());
        t
    }

    #[test]
    fn s3_principal_idempotent_exact_p3() {
        let t = s3();
        let sp = section_partition(&t, 3).unwrap();
        let e = section_idempotent_exact(&t, &sp.principal_fiber()).unwrap();
        assert_eq!(e[0].as_rational(), Some(rat(1, 2)));
        assert_eq!(e[1].as_rational(), Some(rat(1, 2)));
        assert_eq!(e[2].as_rational(), Some(rat(0, 1)));
    }

    #[test]
    fn s3_principal_idempotent_exact_p2() {
        let t = s3();
        let sp = section_partition(&t, 2).unwrap();
        let e = section_idempotent_exact(&t, &sp.principal_fiber()).unwrap();
        assert_eq!(e[0].as_rational(), Some(rat(2, 3)));
        assert_eq!(e[1].as_rational(), Some(rat(-1, 3)));
        assert_eq!(e[2].as_rational(), Some(rat(1, 3)));
    }

    #[test]
    fn c2_whole_group_indicator_is_trivial_character() {
        let t = c2();
        let e = section_idempotent_exact(&t, &[0, 1]).unwrap();
        assert_eq!(e[0].as_rational(), Some(rat(1, 1)));
        assert_eq!(e[1].as_rational(), Some(rat(0, 1)));
    }

    #[test]
    fn s3_principal_mod_p() {
        let t = s3();
        assert_eq!(principal_idempotent_mod_p(&t, 2).unwrap(), vec![0, 1, 1]);
        assert_eq!(principal_idempotent_mod_p(&t, 3).unwrap(), vec![2, 2, 0]);
    }

    #[test]
    fn c2_principal_mod_2() {
        assert_eq!(principal_idempotent_mod_p(&c2(), 2).unwrap(), vec![1, 0]);
    }

    #[test]
    fn s3_blocks_at_3() {
        let blocks = block_decomposition(&s3(), 3).unwrap();
        assert_eq!(blocks.len(), 2);
        assert_eq!(blocks[0].idempotent, vec![2, 2, 0]);
        assert_eq!(blocks[0].dimension(), 2);
        assert_eq!(blocks[0].sections, vec![0]);
        assert_eq!(blocks[1].idempotent, vec![2, 1, 0]);
        assert_eq!(blocks[1].dimension(), 1);
        assert_eq!(blocks[1].sections, vec![1]);
    }

    #[test]
    fn s3_principal_block_at_2_has_dimension_2() {
        let blocks = block_decomposition(&s3(), 2).unwrap();
        assert_eq!(blocks.len(), 2);
        assert_eq!(blocks[0].idempotent, vec![0, 1, 1]);
        assert_eq!(blocks[0].dimension(), 2);
    }

    #[test]
    fn c5_blocks_at_2_fuse_the_four_generators() {
        let t = cyclic_table(5);
        let blocks = block_decomposition(&t, 2).unwrap();
        assert_eq!(blocks.len(), 2);
        assert_eq!(blocks[0].idempotent, vec![1, 1, 1, 1, 1]);
        assert_eq!(blocks[0].dimension(), 1);
        assert_eq!(blocks[0].sections, vec![0]);
        assert_eq!(blocks[1].idempotent, vec![0, 1, 1, 1, 1]);
        assert_eq!(blocks[1].dimension(), 4);
        assert_eq!(blocks[1].sections, vec![1, 2, 3, 4]);
    }

    #[test]
    fn c2_single_block_at_2() {
        let blocks = block_decomposition(&c2(), 2).unwrap();
        assert_eq!(blocks.len(), 1);
        assert_eq!(blocks[0].dimension(), 2);
        assert_eq!(blocks[0].idempotent, vec![1, 0]);
    }

    #[test]
    fn identity_cut_is_whole_algebra() {
        let t = s3();
        let a = build_algebra(&t, 3).unwrap();
        let b = block_subalgebra(&a, &a.identity_vector(), vec![]).unwrap();
        assert_eq!(b.dimension(), 3);
    }

    #[test]
    fn zero_idempotent_rejected() {
        let t = s3();
        let a = build_algebra(&t, 3).unwrap();
        assert!(matches!(
            block_subalgebra(&a, &[0, 0, 0], vec![]),
            Err(BlockError::ZeroIdempotent)
        ));
    }

    #[test]
    fn c7_at_2_needs_the_prime_above_2() {
        // The three orbits {0}, {1,2,4}, {3,5,6} of doubling mod 7; the
        // non-principal orbit sums are Gaussian periods, not rationals.
        let t = cyclic_table(7);
        let blocks = block_decomposition(&t, 2).unwrap();
        assert_eq!(blocks.len(), 3);
        let dims: Vec<usize> = blocks.iter().map(BlockAlgebra::dimension).collect();
        assert_eq!(dims, vec![1, 3, 3]);
        assert_eq!(blocks[1].sections, vec![1, 2, 4]);
        assert_eq!(blocks[2].sections, vec![3, 5, 6]);
    }

    #[test]
    fn block_system_invariants_on_small_tables() {
        for (t, primes) in [
            (s3(), vec![2u64, 3, 5]),
            (c2(), vec![2, 3]),
            (c3(), vec![2, 3]),
            (cyclic_table(5), vec![2, 5]),
            (crate::sections::tests::c6(), vec![2, 3, 5]),
        ] {
            for p in primes {
                let a = build_algebra(&t, p).unwrap();
                let sp = section_partition(&t, p).unwrap();
                let blocks = block_decomposition_with(&t, &a, &sp).unwrap();
                // decomposition_with already enforces the system invariants;
                // re-check the counting ones explicitly
                let orbit_count = blocks.len();
                assert!(orbit_count <= sp.regular_classes.len());
                let dim_total: usize = blocks.iter().map(BlockAlgebra::dimension).sum();
                assert_eq!(dim_total, t.class_count());
            }
        }
    }
}
