//! p'-section combinatorics on conjugacy classes.
//!
//! Every group element factors as g = g_p * g_{p'} with commuting factors of
//! p-power and p-coprime order. On the class level the p'-part is reached by
//! iterating the stored p-power map: K steps, where K is the least multiple
//! of ord_p(m') with p^K >= p^a (element order m = p^a * m'). Iterating "until
//! stable" would be wrong: the p-power map cycles on p-regular classes.

use thiserror::Error;

use crate::chartab::CharacterTable;

#[derive(Debug, Error)]
pub enum SectionError {
    #[error("class {class} has no power map for prime {p}")]
    MissingPowerMap { class: usize, p: u64 },
    #[error("inconsistent table: {0}")]
    Inconsistent(String),
}

/// The partition of classes into p'-sections, keyed by p-regular classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SectionPartition {
    pub p: u64,
    /// Class indices with element order coprime to p, in table order.
    pub regular_classes: Vec<usize>,
    /// For every class, the p-regular class of its p'-part.
    pub section_of: Vec<usize>,
}

impl SectionPartition {
    /// Fibers of `section_of`, one per regular class, in table order.
    pub fn fibers(&self) -> Vec<(usize, Vec<usize>)> {
        self.regular_classes
            .iter()
            .map(|&r| {
                let members: Vec<usize> = self
                    .section_of
                    .iter()
                    .enumerate()
                    .filter(|(_, s)| **s == r)
                    .map(|(c, _)| c)
                    .collect();
                (r, members)
            })
            .collect()
    }

    /// The fiber over the identity class: the classes of p-power order.
    pub fn principal_fiber(&self) -> Vec<usize> {
        self.section_of
            .iter()
            .enumerate()
            .filter(|(_, s)| **s == 0)
            .map(|(c, _)| c)
            .collect()
    }
}

fn split_order(m: u64, p: u64) -> (u32, u64) {
    let mut a = 0;
    let mut rest = m;
    while rest % p == 0 {
        rest /= p;
        a += 1;
    }
    (a, rest)
}

fn multiplicative_order(p: u64, modulus: u64) -> u64 {
    if modulus == 1 {
        return 1;
    }
    let mut acc = p % modulus;
    let mut ord = 1;
    while acc != 1 {
        acc = acc * p % modulus;
        ord += 1;
    }
    ord
}

/// Class of the p'-part of (elements of) class c.
pub fn p_prime_part_class(
    t: &CharacterTable,
    c: usize,
    p: u64,
) -> Result<usize, SectionError> {
    let m = t.classes[c].element_order;
    let (a, m_prime) = split_order(m, p);
    if a == 0 {
        return Ok(c);
    }
    let o = multiplicative_order(p, m_prime);
    // least multiple of o that is >= a, so p^K kills the p-part and fixes the
    // p'-part
    let k = o * a.div_ceil(o as u32) as u64;
    let mut idx = c;
    for _ in 0..k {
        idx = *t.classes[idx]
            .power_maps
            .get(&p)
            .ok_or(SectionError::MissingPowerMap { class: idx, p })?;
    }
    let got = t.classes[idx].element_order;
    if got != m_prime {
        return Err(SectionError::Inconsistent(format!(
            "p'-part of class {} (order {}) landed on class {} of order {}, expected {}",
            c, m, idx, got, m_prime
        )));
    }
    Ok(idx)
}

/// Group the classes into p'-sections.
pub fn section_partition(t: &CharacterTable, p: u64) -> Result<SectionPartition, SectionError> {
    let k = t.class_count();
    let mut section_of = Vec::with_capacity(k);
    for c in 0..k {
        section_of.push(p_prime_part_class(t, c, p)?);
    }
    let regular_classes: Vec<usize> = (0..k)
        .filter(|&c| t.classes[c].element_order % p != 0)
        .collect();
    for &r in &regular_classes {
        if section_of[r] != r {
            return Err(SectionError::Inconsistent(format!(
                "regular class {} is not a fixed point of the p'-part map",
                r
            )));
        }
    }
    Ok(SectionPartition {
        p,
        regular_classes,
        section_of,
    })
}
