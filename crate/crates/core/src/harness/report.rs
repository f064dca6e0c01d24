//! Serialized report types. Key names are part of the JSON schema.

use serde::Serialize;
use serde_json::{json, Value};

use crate::group::{Elem, FiniteGroup, Fingerprint};
use crate::tensor::Construction;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Vacuous,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ElementRef {
    pub name: String,
    /// `"G"` or `"T"` (the tensor square).
    pub group: &'static str,
    pub index: Elem,
    pub word: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Witness {
    pub elements: Vec<ElementRef>,
    /// Indices into the canonical automorphism list.
    pub automorphisms: Vec<usize>,
    pub equation: String,
    pub lhs: Value,
    pub rhs: Value,
}

impl Witness {
    pub fn new(equation: impl Into<String>) -> Self {
        Witness { elements: Vec::new(), automorphisms: Vec::new(), equation: equation.into(), lhs: Value::Null, rhs: Value::Null }
    }

    pub fn elem(mut self, name: &str, group: &'static str, g: &FiniteGroup, x: Elem) -> Self {
        self.elements.push(ElementRef { name: name.into(), group, index: x, word: g.word_string(x) });
        self
    }

    pub fn auts(mut self, a: &[usize]) -> Self {
        self.automorphisms.extend_from_slice(a);
        self
    }

    pub fn sides(mut self, lhs: Value, rhs: Value) -> Self {
        self.lhs = lhs;
        self.rhs = rhs;
        self
    }
}

/// An element as a JSON value: index plus minimal word.
pub fn element_value(g: &FiniteGroup, x: Elem) -> Value {
    json!({ "index": x, "word": g.word_string(x) })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckResult {
    pub check_id: String,
    pub status: Status,
    pub hypothesis_note: String,
    pub witness: Option<Witness>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TensorData {
    pub order: usize,
    pub diagonal_order: usize,
    pub hypothesis_diag_trivial: bool,
    /// Least `x` with `x⊗x ≠ 1`.
    pub diagonal_witness: Option<ElementRef>,
    pub kernel_kappa_order: usize,
    pub construction: Construction,
    /// Both routes built and matched pairing-for-pairing (small groups only).
    pub cross_validated: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubgroupOrders {
    pub center: usize,
    pub derived: usize,
    pub tensor_center: usize,
    pub tensor_center_2: usize,
    pub right_2_tensor_engel: usize,
    pub right_2_engel: usize,
    pub centralizer_of_tensor_square: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AutomorphismCounts {
    pub aut: usize,
    pub inn: usize,
    pub commuting: usize,
    pub tensor_commuting: usize,
    pub central: usize,
    pub tensor_central: usize,
    pub tensor_commuting_inner: usize,
    pub tensor_central_inner: usize,
}

/// Wall-clock seconds per phase; only filled when asked for, so reports
/// stay byte-reproducible by default.
#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct Timings {
    pub group: f64,
    pub tensor_square: f64,
    pub automorphisms: f64,
    pub checks: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GroupReport {
    pub schema_version: u32,
    pub spec: String,
    pub seed: u64,
    pub fingerprint: Option<Fingerprint>,
    pub complete: bool,
    pub error: Option<String>,
    pub tensor: Option<TensorData>,
    pub subgroups: Option<SubgroupOrders>,
    pub automorphisms: Option<AutomorphismCounts>,
    pub checks: Vec<CheckResult>,
    pub timings: Option<Timings>,
}

impl GroupReport {
    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    /// No failed check and no error.
    pub fn is_clean(&self) -> bool {
        self.error.is_none() && self.failures().next().is_none()
    }

    pub fn check(&self, id: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.check_id == id)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SummaryRow {
    pub check_id: String,
    pub pass: usize,
    pub fail: usize,
    pub vacuous: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AtlasDocument {
    pub schema_version: u32,
    pub seed: u64,
    pub max_order: usize,
    pub groups: Vec<GroupReport>,
    pub summary: Vec<SummaryRow>,
    pub errors: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ExploreEntry {
    pub check_id: String,
    pub hypothesis_holds: bool,
    pub conclusion_holds: bool,
    pub witness: Option<Witness>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ExploreRecord {
    pub spec: String,
    pub error: Option<String>,
    pub entries: Vec<ExploreEntry>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ExploreDocument {
    pub schema_version: u32,
    pub seed: u64,
    pub groups: Vec<ExploreRecord>,
}
