//! JSON file formats.
//!
//! All three formats reject unknown fields. Output is rendered with a fixed
//! field order and one table row per line, so equal values always produce
//! identical bytes.

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::rees::{ReesDecomposition, ReesError, ReesMatrixSemigroup};
use crate::semigroup::{CayleyTable, FiniteSemigroup, SemigroupError};
use crate::structure::Group;

use super::CliError;

pub const CAYLEY_KIND: &str = "cayley";
pub const REES_KIND: &str = "rees";
pub const DECOMPOSITION_KIND: &str = "rees-decomposition";

/// A Cayley table; `table[i][j]` is the index of `sᵢ·sⱼ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SemigroupFile {
    pub kind: String,
    pub order: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub names: Option<Vec<String>>,
    pub table: Vec<Vec<usize>>,
}

/// A Rees matrix semigroup: group table, index set sizes, and
/// `sigma[y][x]` as group element indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReesSpecFile {
    pub kind: String,
    pub group: SemigroupFile,
    pub x_size: usize,
    pub y_size: usize,
    pub sigma: Vec<Vec<usize>>,
}

/// A decomposition of a source semigroup. `carrier[h]` is the source element
/// for group element `h`; `forward_map` lists the source element of each
/// triple in enumeration order (x-major, then group element, then y).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DecompositionFile {
    pub kind: String,
    pub e: usize,
    pub x_e: Vec<usize>,
    pub y_e: Vec<usize>,
    pub carrier: Vec<usize>,
    pub group: SemigroupFile,
    pub sigma: Vec<Vec<usize>>,
    pub forward_map: Vec<usize>,
}

fn invalid(message: String) -> CliError {
    CliError::Invalid(message)
}

fn check_kind(prefix: &str, found: &str, expected: &str) -> Result<(), CliError> {
    if found == expected {
        Ok(())
    } else {
        Err(invalid(format!("{prefix}kind: expected {expected:?}, found {found:?}")))
    }
}

fn describe_table_error(prefix: &str, err: SemigroupError) -> CliError {
    let message = match err {
        SemigroupError::EntryOutOfRange { row, col, value, order } => {
            format!("table[{row}][{col}]: value {value} is out of range for order {order}")
        }
        SemigroupError::RaggedRow { row, len, order } => {
            format!("table[{row}]: has {len} entries, expected {order}")
        }
        SemigroupError::NameCountMismatch { count, order } => {
            format!("names: {count} names for order {order}")
        }
        other => format!("table: {other}"),
    };
    invalid(format!("{prefix}{message}"))
}

fn describe_rees_error(err: ReesError) -> CliError {
    let message = match err {
        ReesError::SigmaEntryOutOfRange { y, x, value, order } => {
            format!("sigma[{y}][{x}]: value {value} is not an element of the group (order {order})")
        }
        ReesError::SigmaShape {
            row,
            len,
            expected_cols,
            ..
        } => {
            format!("sigma[{row}]: has {len} entries, expected x_size = {expected_cols}")
        }
        ReesError::SigmaRows { rows, expected } => format!("sigma: has {rows} rows, expected y_size = {expected}"),
        ReesError::EmptyIndexSet { .. } => format!("x_size/y_size: {err}"),
        other => other.to_string(),
    };
    invalid(message)
}

impl SemigroupFile {
    pub fn from_semigroup(s: &FiniteSemigroup) -> Self {
        SemigroupFile {
            kind: CAYLEY_KIND.to_string(),
            order: s.order(),
            names: s.names().map(|n| n.to_vec()),
            table: s.rows().map(|r| r.to_vec()).collect(),
        }
    }

    /// Checks the declared order and shape, then validates the table.
    /// Diagnostics name fields relative to `prefix` (e.g. `"group."`).
    pub fn to_semigroup(&self, prefix: &str) -> Result<FiniteSemigroup, CliError> {
        check_kind(prefix, &self.kind, CAYLEY_KIND)?;
        if self.order == 0 {
            return Err(invalid(format!("{prefix}order: must be at least 1")));
        }
        if self.table.len() != self.order {
            return Err(invalid(format!(
                "{prefix}table: has {} rows but order is {}",
                self.table.len(),
                self.order
            )));
        }
        let mut table = CayleyTable::from_rows(self.table.clone()).map_err(|e| describe_table_error(prefix, e))?;
        if let Some(names) = &self.names {
            table = table
                .with_names(names.clone())
                .map_err(|e| describe_table_error(prefix, e))?;
        }
        table.validate().map_err(|e| describe_table_error(prefix, e))
    }

    /// Validates the table and certifies it as a group.
    pub fn to_group(&self, prefix: &str) -> Result<Group, CliError> {
        let s = self.to_semigroup(prefix)?;
        Group::from_semigroup(s).map_err(|e| invalid(format!("{prefix}: {e}", prefix = prefix.trim_end_matches('.'))))
    }
}

impl ReesSpecFile {
    pub fn from_rees(r: &ReesMatrixSemigroup) -> Self {
        ReesSpecFile {
            kind: REES_KIND.to_string(),
            group: SemigroupFile::from_semigroup(r.group().table()),
            x_size: r.x_size(),
            y_size: r.y_size(),
            sigma: r.sigma().to_vec(),
        }
    }

    pub fn to_rees(&self) -> Result<ReesMatrixSemigroup, CliError> {
        check_kind("", &self.kind, REES_KIND)?;
        let group = self.group.to_group("group.")?;
        ReesMatrixSemigroup::new(group, self.x_size, self.y_size, self.sigma.clone()).map_err(describe_rees_error)
    }
}

impl DecompositionFile {
    pub fn from_decomposition(d: &ReesDecomposition) -> Self {
        DecompositionFile {
            kind: DECOMPOSITION_KIND.to_string(),
            e: d.e_index(),
            x_e: d.x_e().to_vec(),
            y_e: d.y_e().to_vec(),
            carrier: d.carrier().to_vec(),
            group: SemigroupFile::from_semigroup(d.group().table()),
            sigma: d.sigma().to_vec(),
            forward_map: d.forward().to_vec(),
        }
    }

    /// Rebuilds the decomposition against `source`. Only ranges and shapes
    /// are checked here.
    pub fn to_decomposition(&self, source: FiniteSemigroup) -> Result<ReesDecomposition, CliError> {
        check_kind("", &self.kind, DECOMPOSITION_KIND)?;
        let group = self.group.to_group("group.")?;
        ReesDecomposition::from_parts(
            source,
            self.e,
            self.x_e.clone(),
            self.y_e.clone(),
            self.carrier.clone(),
            group,
            self.sigma.clone(),
            self.forward_map.clone(),
        )
        .map_err(describe_rees_error)
    }
}

/// Parses JSON, reporting the path of the offending field on failure.
pub fn parse_json<T: DeserializeOwned>(text: &str) -> Result<T, CliError> {
    let mut de = serde_json::Deserializer::from_str(text);
    let value: T = serde_path_to_error::deserialize(&mut de).map_err(|err| {
        let path = err.path().to_string();
        if path == "." {
            invalid(err.into_inner().to_string())
        } else {
            invalid(format!("{path}: {}", err.into_inner()))
        }
    })?;
    de.end().map_err(|e| invalid(e.to_string()))?;
    Ok(value)
}

/// Renders a serializable value as indented JSON, keeping arrays of
/// scalars on one line. Ends with a newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let value = serde_json::to_value(value).expect("plain data serializes");
    let mut out = String::new();
    render(&value, 0, &mut out);
    out.push('\n');
    out
}

fn is_scalar(v: &Value) -> bool {
    !matches!(v, Value::Array(_) | Value::Object(_))
}

fn render(value: &Value, indent: usize, out: &mut String) {
    let pad = |n: usize| "  ".repeat(n);
    match value {
        Value::Array(items) if items.iter().all(is_scalar) => {
            out.push_str(&serde_json::to_string(value).expect("serializable"));
        }
        Value::Array(items) => {
            out.push_str("[\n");
            for (i, item) in items.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                render(item, indent + 1, out);
                out.push_str(if i + 1 < items.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(indent));
            out.push(']');
        }
        Value::Object(map) if map.is_empty() => out.push_str("{}"),
        Value::Object(map) => {
            out.push_str("{\n");
            for (i, (key, item)) in map.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                out.push_str(&serde_json::to_string(key).expect("serializable"));
                out.push_str(": ");
                render(item, indent + 1, out);
                out.push_str(if i + 1 < map.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(indent));
            out.push('}');
        }
        scalar => out.push_str(&serde_json::to_string(scalar).expect("serializable")),
    }
}
