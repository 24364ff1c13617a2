use std::sync::Arc;

use num_traits::Signed;

use super::{ClassFunction, GroupTable};
use crate::error::{Error, Result};
use crate::scalars::{rat_int, Scalar};

/// Irreducible characters of a group, one row per `γ ∈ Γ^*`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterTable {
    rows: Vec<ClassFunction>,
    degrees: Vec<u64>,
}

impl CharacterTable {
    /// Wraps raw rows; degrees are read off at the identity class.
    /// Use [`validate_character_table`] (or [`BaseGroup::new`]) before trusting it.
    pub fn new(group: &GroupTable, rows: Vec<Vec<Scalar>>) -> Self {
        let e = group.identity_class();
        let degrees = rows
            .iter()
            .map(|r| {
                r.get(e)
                    .and_then(|v| v.as_rational().ok())
                    .filter(|q| q.is_integer() && q.is_positive())
                    .and_then(|q| u64::try_from(q.to_integer()).ok())
                    .unwrap_or(0)
            })
            .collect();
        let rows = rows.into_iter().map(|r| ClassFunction::new(group.id(), r)).collect();
        CharacterTable { rows, degrees }
    }

    pub fn rows(&self) -> &[ClassFunction] {
        &self.rows
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// `d_γ`.
    pub fn degrees(&self) -> &[u64] {
        &self.degrees
    }

    /// `γ(c)`.
    pub fn value(&self, gamma: usize, c: usize) -> &Scalar {
        self.rows[gamma].value(c)
    }
}

/// Outcome of [`validate_character_table`]: an empty violation list means valid.
#[derive(Clone, Debug, Default, PartialEq, Eq, serde::Serialize)]
pub struct ValidationReport {
    pub violations: Vec<String>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks shape, degrees, `Σ d_γ² = |Γ|`, row orthogonality `⟨γ, γ'⟩ = δ` and
/// column orthogonality `Σ_γ γ(c') γ(c^{-1}) = δ_{c,c'} ζ_c`. Never panics.
pub fn validate_character_table(group: &GroupTable, table: &CharacterTable) -> ValidationReport {
    let mut v = Vec::new();
    let k = group.num_classes();
    if table.rows.len() != k {
        v.push(format!("expected {k} irreducible characters, found {}", table.rows.len()));
    }
    for (i, row) in table.rows.iter().enumerate() {
        if row.values().len() != k || row.group() != group.id() {
            v.push(format!("row {i} has {} values, expected {k}", row.values().len()));
        }
    }
    if !v.is_empty() {
        return ValidationReport { violations: v };
    }
    for (i, &d) in table.degrees.iter().enumerate() {
        if d == 0 {
            v.push(format!(
                "row {i}: value at identity {} is not a positive integer",
                table.rows[i].value(group.identity_class())
            ));
        }
    }
    let sum_sq: u128 = table.degrees.iter().map(|&d| (d as u128) * (d as u128)).sum();
    if sum_sq != group.size() as u128 {
        v.push(format!("sum of squared degrees is {sum_sq}, group order is {}", group.size()));
    }
    for i in 0..k {
        for j in 0..k {
            let ip = super::inner_product(group, &table.rows[i], &table.rows[j]).expect("shape checked");
            let expected = if i == j { Scalar::one() } else { Scalar::zero() };
            if ip != expected {
                v.push(format!("row orthogonality: <row {i}, row {j}> = {ip}, expected {expected}"));
            }
        }
    }
    for c in 0..k {
        for c2 in 0..k {
            let s: Scalar = (0..k)
                .map(|g| table.value(g, c2) * table.value(g, group.class_inv(c)))
                .sum();
            let expected = if c == c2 {
                Scalar::from_rational(rat_int(group.zeta()[c]))
            } else {
                Scalar::zero()
            };
            if s != expected {
                v.push(format!("column orthogonality: classes ({c}, {c2}) sum to {s}, expected {expected}"));
            }
        }
    }
    ValidationReport { violations: v }
}

/// A base group `Γ` together with its validated character table.
#[derive(Clone, Debug)]
pub struct BaseGroup {
    pub name: String,
    pub table: Arc<GroupTable>,
    pub chars: CharacterTable,
}

impl BaseGroup {
    pub fn new(name: impl Into<String>, table: GroupTable, rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let chars = CharacterTable::new(&table, rows);
        let report = validate_character_table(&table, &chars);
        if !report.is_valid() {
            return Err(Error::InvalidCharacterTable(report.violations.join("; ")));
        }
        Ok(BaseGroup {
            name: name.into(),
            table: Arc::new(table),
            chars,
        })
    }

    pub fn order(&self) -> usize {
        self.table.size()
    }

    pub fn num_classes(&self) -> usize {
        self.table.num_classes()
    }

    pub fn num_irreducibles(&self) -> usize {
        self.chars.len()
    }
}
