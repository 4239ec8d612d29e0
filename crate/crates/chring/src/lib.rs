//! Block decomposition and Loewy lengths of mod-p character rings.
//!
//! Starting from nothing but a character table, this crate realizes the
//! character ring Z Irr(G) as an exact structure-constant algebra, reduces it
//! mod p, splits it into blocks along p'-section idempotents, and computes
//! Jacobson radicals and Loewy lengths — enough to compare a group against
//! the normalizer of a Sylow p-subgroup and decide whether their principal
//! blocks have the same Loewy length.
//!
//! The pipeline is exact end to end: character values are cyclotomic
//! integers, idempotent coefficients are p-integral rationals, and every
//! reduction mod p is checked. Brute-force oracles (exhaustive nilpotent
//! enumeration) double-check the linear-algebra routes at small dimensions.

pub mod blocks;
pub mod chartab;
pub mod exactnum;
pub mod loewy;
pub mod modring;
pub mod pipeline;
pub mod sections;

mod gfq;
mod lift;
mod linalg;

pub use blocks::{
    block_decomposition, block_subalgebra, principal_idempotent_mod_p,
    section_idempotent_exact, BlockAlgebra, BlockError,
};
pub use chartab::{
    inverse_class_map, load_table, parse_table, power_class_map, validate_table, CharacterTable,
    ConjClass, TableError, ValidationReport,
};
pub use exactnum::{rational_mod_p, Cyclotomic, NumError, Rational};
pub use loewy::{
    count_idempotents, loewy_report, loewy_series, nilradical, oracle_loewy_length,
    oracle_nilpotent_set, LoewyError, LoewyReport,
};
pub use modring::{
    build_algebra, exact_tensor, scalar_product_triple, AlgebraError, ExactTensor, FpAlgebra,
    ModAlgebra,
};
pub use pipeline::{
    analyze, compare_files, compare_tables, is_prime, load_validated, scan_directory, Analysis,
    ComparisonReport, Error, ScanReport, ScanRow,
};
pub use sections::{p_prime_part_class, section_partition, SectionError, SectionPartition};
