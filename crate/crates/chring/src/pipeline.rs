//! End-to-end workflows: validate, decompose, measure, compare, scan.
//!
//! The comparison pipeline runs validate -> sections -> algebra -> principal
//! idempotent -> principal block -> Loewy length on two tables (a group and
//! the normalizer of one of its Sylow p-subgroups) and reports whether the
//! two principal Loewy lengths agree. Scans run the same per-table pipeline
//! over a directory, reusing the exact structure-constant tensor across
//! primes.

use std::path::Path;

use serde::Serialize;
use thiserror::Error;

use crate::blocks::{block_decomposition_with, BlockAlgebra, BlockError};
use crate::chartab::{load_table, validate_table, CharacterTable, TableError};
use crate::loewy::{loewy_report, LoewyError, LoewyReport};
use crate::modring::{exact_tensor, AlgebraError, ExactTensor, FpAlgebra, ModAlgebra};
use crate::sections::{section_partition, SectionError, SectionPartition};

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Table(#[from] TableError),
    #[error("table {name} failed validation:\n  {detail}", detail = .failures.join("\n  "))]
    Invalid {
        name: String,
        failures: Vec<String>,
    },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error(transparent)]
    Section(#[from] SectionError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Block(#[from] BlockError),
    #[error(transparent)]
    Loewy(#[from] LoewyError),
}

impl Error {
    /// Exit-code contract: 2 for invalid input, 3 for a violated internal
    /// invariant (a bug, not bad data).
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Algebra(a) => algebra_code(a),
            Error::Block(b) => block_code(b),
            Error::Loewy(l) => match l {
                LoewyError::NotCommutative(..)
                | LoewyError::CorruptIdentity
                | LoewyError::NotNilpotent => 3,
                LoewyError::CapExceeded { .. } => 2,
                LoewyError::Algebra(a) => algebra_code(a),
            },
            _ => 2,
        }
    }
}

fn algebra_code(a: &AlgebraError) -> i32 {
    match a {
        AlgebraError::Internal(_) | AlgebraError::LengthMismatch { .. } => 3,
        _ => 2,
    }
}

fn block_code(b: &BlockError) -> i32 {
    match b {
        BlockError::Internal(_) | BlockError::OrbitFusion(_) | BlockError::ZeroIdempotent => 3,
        BlockError::Algebra(a) => algebra_code(a),
        _ => 2,
    }
}

/// Deterministic trial-division primality test.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Load a table file and insist it passes validation.
pub fn load_validated(path: &Path) -> Result<CharacterTable, Error> {
    let t = load_table(path)?;
    let report = validate_table(&t);
    if !report.passed() {
        return Err(Error::Invalid {
            name: format!("{} ({})", t.name, path.display()),
            failures: report.failures,
        });
    }
    Ok(t)
}

/// Everything computed for one (table, prime) pair. The principal block is
/// always `blocks[0]`.
pub struct Analysis {
    pub p: u64,
    pub partition: SectionPartition,
    pub algebra: ModAlgebra,
    pub blocks: Vec<BlockAlgebra>,
}

impl Analysis {
    pub fn principal(&self) -> &BlockAlgebra {
        &self.blocks[0]
    }

    pub fn principal_loewy(&self) -> Result<LoewyReport, Error> {
        Ok(loewy_report(self.principal(), "principal")?)
    }

    pub fn loewy_reports(&self) -> Result<Vec<LoewyReport>, Error> {
        self.blocks
            .iter()
            .enumerate()
            .map(|(i, b)| {
                let label = format!(
                    "block {} (sections {})",
                    i,
                    b.sections
                        .iter()
                        .map(|s| s.to_string())
                        .collect::<Vec<_>>()
                        .join(",")
                );
                Ok(loewy_report(b, &label)?)
            })
            .collect()
    }
}

/// Full decomposition of F_p Irr(G) for a validated table.
pub fn analyze(t: &CharacterTable, p: u64) -> Result<Analysis, Error> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let tensor = exact_tensor(t)?;
    analyze_with_tensor(t, &tensor, p)
}

/// Like [`analyze`] but reusing a precomputed exact tensor.
pub fn analyze_with_tensor(
    t: &CharacterTable,
    tensor: &ExactTensor,
    p: u64,
) -> Result<Analysis, Error> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let algebra = tensor.reduce_mod(p);
    algebra.verify()?;
    let partition = section_partition(t, p)?;
    let blocks = block_decomposition_with(t, &algebra, &partition)?;
    debug_assert!(blocks[0].sections.contains(&0));
    Ok(Analysis {
        p,
        partition,
        algebra,
        blocks,
    })
}

/// Group-vs-normalizer verdict on principal Loewy lengths.
#[derive(Debug, Clone, Serialize)]
pub struct ComparisonReport {
    pub group_name: String,
    pub group_order: u64,
    pub normalizer_name: String,
    pub normalizer_order: u64,
    pub p: u64,
    pub ll_group: usize,
    pub ll_normalizer: usize,
    pub equal: bool,
    pub group_radical_dims: Vec<usize>,
    pub normalizer_radical_dims: Vec<usize>,
    pub warnings: Vec<String>,
}

/// Compare the principal Loewy lengths of two validated tables at p.
pub fn compare_tables(
    group: &CharacterTable,
    normalizer: &CharacterTable,
    p: u64,
) -> Result<ComparisonReport, Error> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let mut warnings = Vec::new();
    if group.order % p != 0 {
        warnings.push(format!(
            "{} does not divide the group order {}",
            p, group.order
        ));
    }
    if normalizer.order % p != 0 {
        warnings.push(format!(
            "{} does not divide the normalizer order {} (inconsistent inputs?)",
            p, normalizer.order
        ));
    }
    let lg = analyze(group, p)?.principal_loewy()?;
    let ln = analyze(normalizer, p)?.principal_loewy()?;
    Ok(ComparisonReport {
        group_name: group.name.clone(),
        group_order: group.order,
        normalizer_name: normalizer.name.clone(),
        normalizer_order: normalizer.order,
        p,
        equal: lg.loewy_length == ln.loewy_length,
        ll_group: lg.loewy_length,
        ll_normalizer: ln.loewy_length,
        group_radical_dims: lg.radical_dims,
        normalizer_radical_dims: ln.radical_dims,
        warnings,
    })
}

/// Load, validate and compare two table files.
pub fn compare_files(group: &Path, normalizer: &Path, p: u64) -> Result<ComparisonReport, Error> {
    let tg = load_validated(group)?;
    let tn = load_validated(normalizer)?;
    compare_tables(&tg, &tn, p)
}

/// One row of a scan: per-(table, prime) summary statistics.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct ScanRow {
    pub name: String,
    pub order: u64,
    pub p: u64,
    pub classes: usize,
    pub p_regular: usize,
    pub blocks: usize,
    pub principal_dim: usize,
    pub principal_ll: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct ScanFailure {
    pub file: String,
    pub message: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct ScanReport {
    pub rows: Vec<ScanRow>,
    pub failures: Vec<ScanFailure>,
}

/// Summary row for one validated table at one prime.
pub fn scan_row(t: &CharacterTable, tensor: &ExactTensor, p: u64) -> Result<ScanRow, Error> {
    let analysis = analyze_with_tensor(t, tensor, p)?;
    let principal = analysis.principal_loewy()?;
    Ok(ScanRow {
        name: t.name.clone(),
        order: t.order,
        p,
        classes: t.class_count(),
        p_regular: analysis.partition.regular_classes.len(),
        blocks: analysis.blocks.len(),
        principal_dim: analysis.principal().dimension(),
        principal_ll: principal.loewy_length,
    })
}

/// Scan every `.json` table in a directory. With `prime = None` each table
/// is scanned at every prime dividing its order. Invalid files and failed
/// rows are collected, not fatal; rows come out ordered by file name, then
/// prime.
pub fn scan_directory(dir: &Path, prime: Option<u64>) -> Result<ScanReport, Error> {
    if let Some(p) = prime {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
    }
    let mut files: Vec<std::path::PathBuf> = std::fs::read_dir(dir)
        .map_err(|source| TableError::Io {
            path: dir.display().to_string(),
            source,
        })?
        .filter_map(|entry| entry.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|e| e == "json"))
        .collect();
    files.sort();

    let mut rows = Vec::new();
    let mut failures = Vec::new();
    for file in &files {
        let display = file
            .file_name()
            .map(|n| n.to_string_lossy().into_owned())
            .unwrap_or_else(|| file.display().to_string());
        let t = match load_validated(file) {
            Ok(t) => t,
            Err(e) => {
                failures.push(ScanFailure {
                    file: display,
                    message: e.to_string(),
                });
                continue;
            }
        };
        let primes = match prime {
            Some(p) => vec![p],
            None => crate::exactnum::prime_divisors(t.order),
        };
        if primes.is_empty() {
            continue;
        }
        let tensor = match exact_tensor(&t) {
            Ok(tensor) => tensor,
            Err(e) => {
                failures.push(ScanFailure {
                    file: display,
                    message: e.to_string(),
                });
                continue;
            }
        };
        for p in primes {
            match scan_row(&t, &tensor, p) {
                Ok(row) => rows.push(row),
                Err(e) => failures.push(ScanFailure {
                    file: format!("{} (p = {})", display, p),
                    message: e.to_string(),
                }),
            }
        }
    }
    Ok(ScanReport { rows, failures })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chartab::tests::{c2, s3};

    #[test]
    fn self_comparison_is_equal() {
        let t = s3();
        for p in [2, 3, 5] {
            let r = compare_tables(&t, &t, p).unwrap();
            assert!(r.equal);
            assert_eq!(r.ll_group, r.ll_normalizer);
        }
    }

    #[test]
    fn s3_vs_c2_at_2() {
        let r = compare_tables(&s3(), &c2(), 2).unwrap();
        assert_eq!(r.ll_group, 2);
        assert_eq!(r.ll_normalizer, 2);
        assert!(r.equal);
        assert!(r.warnings.is_empty());
    }

    #[test]
    fn warning_when_p_misses_normalizer_order() {
        let r = compare_tables(&s3(), &c2(), 3).unwrap();
        assert_eq!(r.warnings.len(), 1);
        assert!(r.warnings[0].contains("normalizer"));
    }

    #[test]
    fn not_prime_rejected() {
        assert!(matches!(
            compare_tables(&s3(), &s3(), 4),
            Err(Error::NotPrime(4))
        ));
        assert!(!is_prime(1));
        assert!(is_prime(2));
        assert!(is_prime(97));
        assert!(!is_prime(91));
    }

    #[test]
    fn scan_row_values_for_s3_at_2() {
        let t = s3();
        let tensor = exact_tensor(&t).unwrap();
        let row = scan_row(&t, &tensor, 2).unwrap();
        assert_eq!(
            row,
            ScanRow {
                name: "S3".into(),
                order: 6,
                p: 2,
                classes: 3,
                p_regular: 2,
                blocks: 2,
                principal_dim: 2,
                principal_ll: 2,
            }
        );
    }
}
