//! Machine-readable output schemas.
//!
//! Every `--format json` payload starts with a `schema_version` field and
//! round-trips through these types byte-identically (parse, re-render,
//! compare). Exact integers are carried as decimal strings so values outside
//! the doubles-safe range survive any JSON tooling.

use serde::{Deserialize, Serialize};

use evsym_core::Partition;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Serialize, Deserialize, PartialEq, Debug)]
pub struct PartitionsPayload {
    pub schema_version: u32,
    pub degree: u32,
    pub family: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_length: Option<u32>,
    pub partitions: Vec<Partition>,
    pub count: usize,
}

#[derive(Serialize, Deserialize, PartialEq, Debug)]
pub struct EvEntryRecord {
    pub partition: Partition,
    pub multiplicity: u64,
    pub sign: i32,
}

#[derive(Serialize, Deserialize, PartialEq, Debug)]
pub struct EvPayload {
    pub schema_version: u32,
    pub lambda: Partition,
    pub entries: Vec<EvEntryRecord>,
    pub total_multiplicity: u64,
}

#[derive(Serialize, Deserialize, PartialEq, Debug)]
pub struct TermRecord {
    pub partition: Partition,
    pub coefficient: String,
}

#[derive(Serialize, Deserialize, PartialEq, Debug)]
pub struct TheoremPayload {
    pub schema_version: u32,
    pub lambda: Partition,
    pub lhs: Vec<TermRecord>,
    pub rhs: Vec<TermRecord>,
    pub equal: bool,
    pub max_part_in_support: u32,
}

#[derive(Serialize, Deserialize, PartialEq, Debug)]
pub struct CharacterPayload {
    pub schema_version: u32,
    pub mu: Partition,
    pub lambda: Partition,
    pub method: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub schur: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mn: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<String>,
    pub agree: bool,
}

#[derive(Serialize, Deserialize, PartialEq, Debug)]
pub struct ConjectureRow {
    pub mu: Partition,
    pub sum: String,
}

#[derive(Serialize, Deserialize, PartialEq, Debug)]
pub struct ConjectureBody {
    #[serde(rename = "N")]
    pub n: u32,
    pub lhs: String,
    pub rhs: String,
    pub equal: bool,
    pub lhs_rows: Vec<ConjectureRow>,
    pub rhs_rows: Vec<ConjectureRow>,
}

#[derive(Serialize, Deserialize, PartialEq, Debug)]
pub struct ConjecturePayload {
    pub schema_version: u32,
    pub lambda: Partition,
    #[serde(flatten)]
    pub body: ConjectureBody,
}

#[derive(Serialize, Deserialize, PartialEq, Debug)]
pub struct ConjectureSweepPayload {
    pub schema_version: u32,
    pub lambda: Partition,
    pub reports: Vec<ConjectureBody>,
}

#[derive(Serialize, Deserialize, PartialEq, Debug)]
pub struct ChartablePayload {
    pub schema_version: u32,
    pub degree: u32,
    pub rows: Vec<Partition>,
    pub cols: Vec<Partition>,
    pub values: Vec<Vec<String>>,
}

#[derive(Serialize, Deserialize, PartialEq, Debug)]
pub struct KostkaPayload {
    pub schema_version: u32,
    pub degree: u32,
    pub order: Vec<Partition>,
    /// Sparse columns: `k_columns[j]` lists `(row_index, value)` pairs.
    pub k_columns: Vec<Vec<(usize, String)>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k_inverse_columns: Option<Vec<Vec<(usize, String)>>>,
}
