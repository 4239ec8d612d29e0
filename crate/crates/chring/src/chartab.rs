//! Character table data model, file format, parser and validator.
//!
//! A table file is UTF-8 JSON:
//!
//! ```json
//! {"name": "S3", "order": 6,
//!  "classes": [{"size": 1, "order": 1, "powermaps": {"2": 0, "3": 0}}, ...],
//!  "irreducibles": [[1, 1, 1], [1, -1, 1], [2, 0, -1]]}
//! ```
//!
//! where a value is either an integer or `{"conductor": n, "coeffs":
//! {"<exponent>": c, ...}}` meaning the sum of c * zeta_n^exponent. Class
//! indices are 0-based, the identity class comes first and the trivial
//! character is row 0. Power maps must be present for every prime dividing
//! the group order.
//!
//! `parse_table` only enforces structure; `validate_table` checks the actual
//! character-theoretic invariants (orthogonality, degrees, power-map
//! consistency) and reports every violated check rather than stopping at the
//! first.

use std::collections::BTreeMap;
use std::path::Path;

use num::{BigInt, One, Signed, Zero};
use serde::Deserialize;
use thiserror::Error;

use crate::exactnum::{euler_phi, prime_divisors, Cyclotomic, Rational};
use crate::lift::CycloDomain;

#[derive(Debug, Error)]
pub enum TableError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("parse error: {0}")]
    Parse(#[from] serde_json::Error),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("class {class}: missing power map for prime {prime}")]
    MissingPowerMap { class: usize, prime: u64 },
    #[error("value at character {row}, class {col}: {msg}")]
    Value { row: usize, col: usize, msg: String },
    #[error("inconsistent table: {0}")]
    Inconsistent(String),
}

/// One conjugacy class: its size, the order of its elements, and for each
/// relevant prime q the index of the class containing the q-th powers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjClass {
    pub size: u64,
    pub element_order: u64,
    pub power_maps: BTreeMap<u64, usize>,
}

/// A character table: the artifact's entire knowledge of a group.
#[derive(Debug, Clone, PartialEq)]
pub struct CharacterTable {
    pub name: String,
    pub order: u64,
    pub classes: Vec<ConjClass>,
    /// One row per irreducible character, one column per class.
    pub irreducibles: Vec<Vec<Cyclotomic>>,
}

#[derive(Deserialize)]
struct RawTable {
    name: String,
    order: u64,
    classes: Vec<RawClass>,
    irreducibles: Vec<Vec<RawValue>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawClass {
    size: u64,
    order: u64,
    powermaps: BTreeMap<String, usize>,
}

#[derive(Deserialize)]
#[serde(untagged, deny_unknown_fields)]
enum RawValue {
    Int(i64),
    Cyclo {
        conductor: u32,
        coeffs: BTreeMap<String, i64>,
    },
}

/// Parse and structurally check a table. No mathematical validation happens
/// here; see [`validate_table`].
pub fn parse_table(input: &str) -> Result<CharacterTable, TableError> {
    let raw: RawTable = serde_json::from_str(input)?;
    if raw.order == 0 {
        return Err(TableError::Shape("group order must be positive".into()));
    }
    let k = raw.classes.len();
    if k == 0 {
        return Err(TableError::Shape("class list is empty".into()));
    }
    if raw.irreducibles.len() != k {
        return Err(TableError::Shape(format!(
            "{} character rows for {} classes",
            raw.irreducibles.len(),
            k
        )));
    }
    for (i, row) in raw.irreducibles.iter().enumerate() {
        if row.len() != k {
            return Err(TableError::Shape(format!(
                "character row {} has {} entries, expected {}",
                i,
                row.len(),
                k
            )));
        }
    }

    let needed = prime_divisors(raw.order);
    let mut classes = Vec::with_capacity(k);
    for (ci, rc) in raw.classes.iter().enumerate() {
        if rc.size == 0 || rc.order == 0 {
            return Err(TableError::Shape(format!(
                "class {}: size and order must be positive",
                ci
            )));
        }
        let mut maps = BTreeMap::new();
        for (key, target) in &rc.powermaps {
            let q: u64 = key.parse().map_err(|_| {
                TableError::Shape(format!("class {}: bad power-map key {:?}", ci, key))
            })?;
            if *target >= k {
                return Err(TableError::Shape(format!(
                    "class {}: power map for {} points to class {}, but there are {} classes",
                    ci, q, target, k
                )));
            }
            maps.insert(q, *target);
        }
        for q in &needed {
            if !maps.contains_key(q) {
                return Err(TableError::MissingPowerMap {
                    class: ci,
                    prime: *q,
                });
            }
        }
        classes.push(ConjClass {
            size: rc.size,
            element_order: rc.order,
            power_maps: maps,
        });
    }

    let mut irreducibles = Vec::with_capacity(k);
    for (ri, row) in raw.irreducibles.iter().enumerate() {
        let mut out = Vec::with_capacity(k);
        for (ci, v) in row.iter().enumerate() {
            let value = match v {
                RawValue::Int(n) => Cyclotomic::from_integer(*n),
                RawValue::Cyclo { conductor, coeffs } => {
                    let mut pairs = Vec::with_capacity(coeffs.len());
                    for (e, c) in coeffs {
                        let exp: i64 = e.parse().map_err(|_| TableError::Value {
                            row: ri,
                            col: ci,
                            msg: format!("bad exponent key {:?}", e),
                        })?;
                        pairs.push((exp, Rational::from(BigInt::from(*c))));
                    }
                    Cyclotomic::normalize(*conductor, pairs).map_err(|e| TableError::Value {
                        row: ri,
                        col: ci,
                        msg: e.to_string(),
                    })?
                }
            };
            out.push(value);
        }
        irreducibles.push(out);
    }

    Ok(CharacterTable {
        name: raw.name,
        order: raw.order,
        classes,
        irreducibles,
    })
}

/// Read and parse a table file.
pub fn load_table(path: &Path) -> Result<CharacterTable, TableError> {
    let text = std::fs::read_to_string(path).map_err(|source| TableError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_table(&text)
}

impl CharacterTable {
    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn value(&self, chi: usize, class: usize) -> &Cyclotomic {
        &self.irreducibles[chi][class]
    }

    /// Degree of the chi-th irreducible (its value at the identity class).
    /// Only meaningful on validated tables.
    pub fn degree(&self, chi: usize) -> u64 {
        self.irreducibles[chi][0]
            .as_rational()
            .and_then(|r| u64::try_from(r.numer()).ok())
            .expect("validated table has positive integer degrees")
    }

    /// Least common multiple of the conductors of all character values.
    pub fn value_conductor_lcm(&self) -> u32 {
        let mut m = 1u32;
        for row in &self.irreducibles {
            for v in row {
                m = num::integer::lcm(m, v.conductor());
            }
        }
        m
    }

    /// Serialize back to the file format. Rational integer values are written
    /// as plain JSON integers, everything else as conductor/coeffs objects.
    pub fn emit(&self) -> String {
        use serde_json::{json, Map, Value};
        let classes: Vec<Value> = self
            .classes
            .iter()
            .map(|c| {
                let maps: Map<String, Value> = c
                    .power_maps
                    .iter()
                    .map(|(q, t)| (q.to_string(), json!(t)))
                    .collect();
                json!({"size": c.size, "order": c.element_order, "powermaps": maps})
            })
            .collect();
        let rows: Vec<Value> = self
            .irreducibles
            .iter()
            .map(|row| {
                Value::Array(
                    row.iter()
                        .map(|v| match v.as_rational() {
                            Some(r) if r.is_integer() => {
                                json!(i64::try_from(r.numer()).expect("table value fits i64"))
                            }
                            _ => {
                                let coeffs: Map<String, Value> = v
                                    .coeffs()
                                    .iter()
                                    .enumerate()
                                    .filter(|(_, c)| !c.is_zero())
                                    .map(|(e, c)| {
                                        (
                                            e.to_string(),
                                            json!(i64::try_from(c.numer())
                                                .expect("table value fits i64")),
                                        )
                                    })
                                    .collect();
                                json!({"conductor": v.conductor(), "coeffs": coeffs})
                            }
                        })
                        .collect(),
                )
            })
            .collect();
        let doc = json!({
            "name": self.name,
            "order": self.order,
            "classes": classes,
            "irreducibles": rows,
        });
        serde_json::to_string_pretty(&doc).expect("table serializes")
    }
}

/// Outcome of `validate_table`: every violated check, never only the first.
#[derive(Debug, Clone)]
pub struct ValidationReport {
    pub failures: Vec<String>,
    pub checks_run: usize,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Check all table invariants: identity class first, class sizes and element
/// orders divide the group order, power-map consistency, trivial character
/// first, positive integer degrees with sum of squares equal to the order,
/// integral character values, and both row and column orthogonality.
pub fn validate_table(t: &CharacterTable) -> ValidationReport {
    let mut failures = Vec::new();
    let mut checks = 0usize;
    let k = t.class_count();
    let mut check = |cond: bool, msg: String, failures: &mut Vec<String>| {
        if !cond {
            failures.push(msg);
        }
    };

    // Class-level invariants.
    checks += 1;
    check(
        t.classes[0].size == 1 && t.classes[0].element_order == 1,
        "class 0 is not the identity class (size 1, element order 1)".into(),
        &mut failures,
    );
    checks += 1;
    let size_sum: u64 = t.classes.iter().map(|c| c.size).sum();
    check(
        size_sum == t.order,
        format!("class sizes sum to {} != group order {}", size_sum, t.order),
        &mut failures,
    );
    for (i, c) in t.classes.iter().enumerate() {
        checks += 2;
        check(
            t.order % c.size == 0,
            format!("class {}: size {} does not divide {}", i, c.size, t.order),
            &mut failures,
        );
        check(
            t.order % c.element_order == 0,
            format!(
                "class {}: element order {} does not divide {}",
                i, c.element_order, t.order
            ),
            &mut failures,
        );
        if i > 0 {
            checks += 1;
            check(
                c.element_order > 1,
                format!("class {}: only the identity class may have element order 1", i),
                &mut failures,
            );
        }
        for (q, target) in &c.power_maps {
            checks += 1;
            let expect = c.element_order / num::integer::gcd(c.element_order, *q);
            let got = t.classes[*target].element_order;
            check(
                got == expect,
                format!(
                    "class {}: {}-th power lands in class {} of element order {}, expected order {}",
                    i, q, target, got, expect
                ),
                &mut failures,
            );
        }
    }

    // Matrix shape (already enforced by the parser, but cheap to re-state).
    checks += 1;
    let square = t.irreducibles.len() == k && t.irreducibles.iter().all(|r| r.len() == k);
    check(
        square,
        format!("character matrix is not {} x {}", k, k),
        &mut failures,
    );
    if !square {
        return ValidationReport {
            failures,
            checks_run: checks,
        };
    }

    // Trivial character first.
    checks += 1;
    let one = Cyclotomic::from_integer(1);
    check(
        t.irreducibles[0].iter().all(|v| *v == one),
        "row 0 is not the trivial character".into(),
        &mut failures,
    );

    // Integrality of all values.
    checks += 1;
    let mut integral = true;
    for (ri, row) in t.irreducibles.iter().enumerate() {
        for (ci, v) in row.iter().enumerate() {
            if !v.is_integral() {
                integral = false;
                failures.push(format!(
                    "value at character {}, class {} is not a cyclotomic integer: {}",
                    ri, ci, v
                ));
            }
        }
    }

    // Degrees.
    checks += 1;
    let mut degree_sum = BigInt::zero();
    let mut degrees_ok = true;
    for (ri, row) in t.irreducibles.iter().enumerate() {
        match row[0].as_rational() {
            Some(r) if r.is_integer() && r.is_positive() => {
                degree_sum += r.numer() * r.numer();
            }
            _ => {
                degrees_ok = false;
                failures.push(format!(
                    "character {} has degree {}, not a positive integer",
                    ri, row[0]
                ));
            }
        }
    }
    if degrees_ok {
        checks += 1;
        check(
            degree_sum == BigInt::from(t.order),
            format!(
                "sum of squared degrees {} != group order {}",
                degree_sum, t.order
            ),
            &mut failures,
        );
    }

    // Orthogonality. Prefer the integer kernel; fall back to generic exact
    // arithmetic when values are not integral (which is already a failure).
    checks += 2;
    let ortho_failures = if integral {
        orthogonality_failures_fast(t).unwrap_or_else(|| orthogonality_failures_slow(t))
    } else {
        orthogonality_failures_slow(t)
    };
    failures.extend(ortho_failures);

    // Inverse class map existence and involution.
    checks += 1;
    match inverse_class_map(t) {
        Ok(inv) => {
            checks += 1;
            let mut ok = true;
            for (c, d) in inv.iter().enumerate() {
                if inv[*d] != c
                    || t.classes[*d].size != t.classes[c].size
                    || t.classes[*d].element_order != t.classes[c].element_order
                {
                    ok = false;
                }
            }
            check(
                ok,
                "inverse class map is not a size/order-preserving involution".into(),
                &mut failures,
            );
        }
        Err(e) => failures.push(format!("inverse class map: {}", e)),
    }

    ValidationReport {
        failures,
        checks_run: checks,
    }
}

/// Row and column orthogonality over the integer kernel. Returns None when
/// the kernel cannot host the table (falls back to the slow path).
fn orthogonality_failures_fast(t: &CharacterTable) -> Option<Vec<String>> {
    let k = t.class_count();
    let dom = CycloDomain::new(t.value_conductor_lcm()).ok()?;
    let mut values = Vec::with_capacity(k);
    let mut conj = Vec::with_capacity(k);
    for row in &t.irreducibles {
        let mut vr = Vec::with_capacity(k);
        let mut cr = Vec::with_capacity(k);
        for v in row {
            let lifted = dom.lift(v).ok()?;
            cr.push(dom.galois(&lifted, dom.m - 1));
            vr.push(lifted);
        }
        values.push(vr);
        conj.push(cr);
    }
    let mut failures = Vec::new();
    // Row orthogonality: sum_c |C| chi_i(c) conj(chi_j(c)) = delta_ij |G|.
    for i in 0..k {
        for j in i..k {
            let mut acc = vec![0i128; dom.phi];
            for c in 0..k {
                dom.mul_acc(&values[i][c], &conj[j][c], t.classes[c].size as i64, &mut acc);
            }
            let expect = if i == j { t.order as i128 } else { 0 };
            if acc[0] != expect || acc[1..].iter().any(|&x| x != 0) {
                failures.push(format!("row orthogonality fails for characters {} and {}", i, j));
            }
        }
    }
    // Column orthogonality: sum_chi chi(c) conj(chi(d)) = delta_cd |G|/|C|.
    for c in 0..k {
        if t.order % t.classes[c].size != 0 {
            continue; // reported by the divisibility check
        }
        for d in c..k {
            let mut acc = vec![0i128; dom.phi];
            for i in 0..k {
                dom.mul_acc(&values[i][c], &conj[i][d], 1, &mut acc);
            }
            let expect = if c == d {
                (t.order / t.classes[c].size) as i128
            } else {
                0
            };
            if acc[0] != expect || acc[1..].iter().any(|&x| x != 0) {
                failures.push(format!("column orthogonality fails for classes {} and {}", c, d));
            }
        }
    }
    Some(failures)
}

fn orthogonality_failures_slow(t: &CharacterTable) -> Vec<String> {
    let k = t.class_count();
    let mut failures = Vec::new();
    let order = Rational::from(BigInt::from(t.order));
    for i in 0..k {
        for j in i..k {
            let mut acc = Cyclotomic::from_integer(0);
            for c in 0..k {
                let term = t.irreducibles[i][c].mul(&t.irreducibles[j][c].conjugate());
                acc = acc.add(&term.scale(&Rational::from(BigInt::from(t.classes[c].size))));
            }
            let expect = if i == j { order.clone() } else { Rational::zero() };
            if acc.as_rational() != Some(expect) {
                failures.push(format!("row orthogonality fails for characters {} and {}", i, j));
            }
        }
    }
    for c in 0..k {
        if t.order % t.classes[c].size != 0 {
            continue;
        }
        for d in c..k {
            let mut acc = Cyclotomic::from_integer(0);
            for i in 0..k {
                acc = acc.add(&t.irreducibles[i][c].mul(&t.irreducibles[i][d].conjugate()));
            }
            let expect = if c == d {
                Rational::from(BigInt::from(t.order / t.classes[c].size))
            } else {
                Rational::zero()
            };
            if acc.as_rational() != Some(expect) {
                failures.push(format!("column orthogonality fails for classes {} and {}", c, d));
            }
        }
    }
    failures
}

/// The permutation iota with chi(iota(c)) = conj(chi(c)) for every character,
/// found by matching conjugated columns. Column orthogonality makes the match
/// unique on valid tables.
pub fn inverse_class_map(t: &CharacterTable) -> Result<Vec<usize>, TableError> {
    match_galois_columns(t, |v| v.conjugate(), "conjugate")
}

/// The class-level u-power map g |-> g^u for u coprime to every element
/// order, recovered from the Galois action zeta -> zeta^u on columns. For
/// primes dividing the group order the table's stored power maps must be used
/// instead (the Galois substitution is not defined there).
pub fn power_class_map(t: &CharacterTable, u: u64) -> Result<Vec<usize>, TableError> {
    for (c, cl) in t.classes.iter().enumerate() {
        if num::integer::gcd(cl.element_order, u) != 1 {
            return Err(TableError::Inconsistent(format!(
                "{}-power map requested but class {} has element order {}",
                u, c, cl.element_order
            )));
        }
    }
    match_galois_columns(t, |v| v.galois(u as i64), &format!("{}-th power", u))
}

fn match_galois_columns(
    t: &CharacterTable,
    image: impl Fn(&Cyclotomic) -> Cyclotomic,
    what: &str,
) -> Result<Vec<usize>, TableError> {
    let k = t.class_count();
    let mut map = vec![usize::MAX; k];
    for c in 0..k {
        let target: Vec<Cyclotomic> = (0..k).map(|i| image(&t.irreducibles[i][c])).collect();
        let mut found = None;
        for d in 0..k {
            if (0..k).all(|i| t.irreducibles[i][d] == target[i]) {
                if found.is_some() {
                    return Err(TableError::Inconsistent(format!(
                        "classes {} and {} both match the {} of class {}",
                        found.unwrap(),
                        d,
                        what,
                        c
                    )));
                }
                found = Some(d);
            }
        }
        map[c] = found.ok_or_else(|| {
            TableError::Inconsistent(format!("no class matches the {} of class {}", what, c))
        })?;
    }
    Ok(map)
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) const S3: &str = r#"{
        "name": "S3", "order": 6,
        "classes": [
            {"size": 1, "order": 1, "powermaps": {"2": 0, "3": 0}},
            {"size": 3, "order": 2, "powermaps": {"2": 0, "3": 1}},
            {"size": 2, "order": 3, "powermaps": {"2": 2, "3": 0}}
        ],
        "irreducibles": [[1, 1, 1], [1, -1, 1], [2, 0, -1]]
    }"#;

    const C1: &str = r#"{"name": "C1", "order": 1,
        "classes": [{"size": 1, "order": 1, "powermaps": {}}],
        "irreducibles": [[1]]}"#;

    const C2: &str = r#"{"name": "C2", "order": 2,
        "classes": [
            {"size": 1, "order": 1, "powermaps": {"2": 0}},
            {"size": 1, "order": 2, "powermaps": {"2": 0}}
        ],
        "irreducibles": [[1, 1], [1, -1]]}"#;

    const C3: &str = r#"{"name": "C3", "order": 3,
        "classes": [
            {"size": 1, "order": 1, "powermaps": {"3": 0}},
            {"size": 1, "order": 3, "powermaps": {"3": 0}},
            {"size": 1, "order": 3, "powermaps": {"3": 0}}
        ],
        "irreducibles": [
            [1, 1, 1],
            [1, {"conductor": 3, "coeffs": {"1": 1}}, {"conductor": 3, "coeffs": {"2": 1}}],
            [1, {"conductor": 3, "coeffs": {"2": 1}}, {"conductor": 3, "coeffs": {"1": 1}}]
        ]}"#;

    pub(crate) fn s3() -> CharacterTable {
        parse_table(S3).unwrap()
    }

    pub(crate) fn c1() -> CharacterTable {
        parse_table(C1).unwrap()
    }

    pub(crate) fn c2() -> CharacterTable {
        parse_table(C2).unwrap()
    }

    pub(crate) fn c3() -> CharacterTable {
        parse_table(C3).unwrap()
    }

    #[test]
    fn parse_s3() {
        let t = s3();
        assert_eq!(t.order, 6);
        assert_eq!(t.class_count(), 3);
        let report = validate_table(&t);
        assert!(report.passed(), "{:?}", report.failures);
        assert_eq!(t.degree(0), 1);
        assert_eq!(t.degree(1), 1);
        assert_eq!(t.degree(2), 2);
    }

    #[test]
    fn parse_c1() {
        let t = c1();
        assert_eq!(t.order, 1);
        assert_eq!(t.class_count(), 1);
        assert!(validate_table(&t).passed());
    }

    #[test]
    fn missing_size_field_is_named() {
        let bad = r#"{"name": "X", "order": 2,
            "classes": [{"order": 1, "powermaps": {"2": 0}},
                        {"size": 1, "order": 2, "powermaps": {"2": 0}}],
            "irreducibles": [[1, 1], [1, -1]]}"#;
        let err = parse_table(bad).unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("size"), "error does not name the field: {}", msg);
    }

    #[test]
    fn missing_power_map_detected() {
        let bad = r#"{"name": "X", "order": 2,
            "classes": [{"size": 1, "order": 1, "powermaps": {}},
                        {"size": 1, "order": 2, "powermaps": {}}],
            "irreducibles": [[1, 1], [1, -1]]}"#;
        assert!(matches!(
            parse_table(bad).unwrap_err(),
            TableError::MissingPowerMap { prime: 2, .. }
        ));
    }

    #[test]
    fn shape_mismatch_detected() {
        let bad = r#"{"name": "X", "order": 2,
            "classes": [{"size": 1, "order": 1, "powermaps": {"2": 0}},
                        {"size": 1, "order": 2, "powermaps": {"2": 0}}],
            "irreducibles": [[1, 1]]}"#;
        assert!(matches!(parse_table(bad).unwrap_err(), TableError::Shape(_)));
    }

    #[test]
    fn validate_c2() {
        assert!(validate_table(&c2()).passed());
    }

    #[test]
    fn validate_catches_degree_corruption() {
        let mut t = s3();
        // Degree 2 -> 3 breaks the degree sum: 1 + 1 + 9 = 11 != 6.
        t.irreducibles[2][0] = Cyclotomic::from_integer(3);
        let report = validate_table(&t);
        assert!(!report.passed());
        assert!(
            report.failures.iter().any(|f| f.contains("11")),
            "{:?}",
            report.failures
        );
    }

    #[test]
    fn validate_rejects_every_single_entry_bump() {
        let base = s3();
        for i in 0..3 {
            for j in 0..3 {
                let mut t = base.clone();
                t.irreducibles[i][j] =
                    t.irreducibles[i][j].add(&Cyclotomic::from_integer(1));
                let report = validate_table(&t);
                assert!(!report.passed(), "bump at ({}, {}) passed validation", i, j);
            }
        }
    }

    #[test]
    fn validate_rejects_fractional_value() {
        let mut t = c2();
        t.irreducibles[1][1] =
            Cyclotomic::from_rational(Rational::new(BigInt::from(1), BigInt::from(2)), 1);
        let report = validate_table(&t);
        assert!(report
            .failures
            .iter()
            .any(|f| f.contains("cyclotomic integer")));
    }

    #[test]
    fn inverse_map_s3_is_identity() {
        assert_eq!(inverse_class_map(&s3()).unwrap(), vec![0, 1, 2]);
    }

    #[test]
    fn inverse_map_c3_swaps_generators() {
        assert_eq!(inverse_class_map(&c3()).unwrap(), vec![0, 2, 1]);
    }

    #[test]
    fn inverse_map_c2_is_identity() {
        assert_eq!(inverse_class_map(&c2()).unwrap(), vec![0, 1]);
    }

    #[test]
    fn emit_round_trips() {
        for t in [s3(), c1(), c2(), c3()] {
            let emitted = t.emit();
            let back = parse_table(&emitted).unwrap();
            assert_eq!(back, t);
        }
    }
}
