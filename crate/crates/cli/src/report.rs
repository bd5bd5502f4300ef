//! Machine-readable report structures.
//!
//! Reports are deterministic byte-for-byte for identical inputs: fields are
//! serialized in declaration order, collections are sorted, and no clocks
//! or randomness are involved. Every numeric claim carries the method that
//! verified it, and certificates embed the elements that attain them so a
//! report can be re-checked without rerunning the analysis.

use serde::Serialize;
use sha2::{Digest, Sha256};

use fc_core::fc::BoundCertificate;
use fc_core::group::Element;
use fc_core::{GroupRef, IndexValue};

use crate::schema::{element_to_file, ElementFile, REPORT_SCHEMA};

/// Method tags for numeric claims.
pub const METHOD_COSETS: &str = "coset-enumeration";
pub const METHOD_LATTICE: &str = "lattice-index";
pub const METHOD_STABILIZER_CHAIN: &str = "stabilizer-chain";
pub const METHOD_LATTICE_RANK: &str = "lattice-rank";
pub const METHOD_BALL: &str = "ball-enumeration";

/// The method used for subgroup indices in this group's backend.
pub fn index_method(group: &GroupRef) -> &'static str {
    if group.is_affine() {
        METHOD_LATTICE
    } else {
        METHOD_COSETS
    }
}

/// The method used for the group order claim.
pub fn order_method(group: &GroupRef) -> &'static str {
    if group.is_affine() {
        METHOD_LATTICE_RANK
    } else {
        METHOD_STABILIZER_CHAIN
    }
}

#[derive(Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub command: &'static str,
    pub inputs: Inputs,
    pub results: Results,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleSummary>,
}

impl Report {
    pub fn new(command: &'static str, inputs: Inputs, results: Results) -> Report {
        Report {
            schema: REPORT_SCHEMA,
            command,
            inputs,
            results,
            oracle: None,
        }
    }

    /// Canonical rendering: pretty JSON with a trailing newline.
    pub fn render(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("reports always serialize");
        text.push('\n');
        text
    }
}

#[derive(Serialize)]
pub struct Inputs {
    pub group: InputDigest,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub chain: Option<InputDigest>,
    pub max_ball_radius: u32,
}

/// Where an input came from and the digest of its raw bytes.
#[derive(Serialize)]
pub struct InputDigest {
    pub source: String,
    /// The name the file declares for itself, when it declares one.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub sha256: String,
}

impl InputDigest {
    pub fn new(source: String, bytes: &[u8]) -> InputDigest {
        let digest = Sha256::digest(bytes);
        let sha256 = digest.iter().map(|b| format!("{b:02x}")).collect();
        InputDigest {
            source,
            name: None,
            sha256,
        }
    }

    pub fn named(mut self, name: Option<String>) -> InputDigest {
        self.name = name;
        self
    }
}

/// A verified finite quantity.
#[derive(Serialize)]
pub struct Claim {
    pub value: u64,
    pub method: &'static str,
}

/// A verified quantity that may be infinite (serialized as the string
/// `"infinite"`).
#[derive(Serialize)]
pub struct IndexClaim {
    pub value: IndexJson,
    pub method: &'static str,
}

#[derive(Serialize)]
#[serde(untagged)]
pub enum IndexJson {
    Finite(u64),
    Infinite(&'static str),
}

impl From<IndexValue> for IndexJson {
    fn from(value: IndexValue) -> IndexJson {
        match value {
            IndexValue::Finite(n) => IndexJson::Finite(n),
            IndexValue::Infinite => IndexJson::Infinite("infinite"),
        }
    }
}

/// A conjugate-count bound with the element attaining it.
#[derive(Serialize)]
pub struct BoundClaim {
    pub value: u64,
    pub method: String,
    pub attained_by: ElementFile,
}

impl BoundClaim {
    pub fn from_certificate(cert: &BoundCertificate) -> BoundClaim {
        BoundClaim {
            value: cert.bound,
            method: cert.method.to_string(),
            attained_by: element_to_file(&cert.attained_by),
        }
    }
}

pub fn elements_to_file(els: &[Element]) -> Vec<ElementFile> {
    els.iter().map(element_to_file).collect()
}

#[derive(Serialize)]
#[serde(untagged)]
pub enum Results {
    Analyze(AnalyzeResults),
    CheckChain(CheckChainResults),
    Tower(TowerResults),
    Neumann(NeumannResults),
    Solvable(SolvableResults),
    Oracle(OracleSummary),
}

#[derive(Serialize)]
pub struct AnalyzeResults {
    pub group_order: IndexClaim,
    /// Generators of the subgroup of elements with finitely many
    /// conjugates under the whole group.
    pub fc_generators: Vec<ElementFile>,
    pub fc_is_whole_group: bool,
    /// Index of that subgroup in the whole group.
    pub fc_index: IndexClaim,
    /// The uniform conjugate-count bound over the subgroup.
    pub bound: BoundClaim,
    /// Structure of the group when it is FC throughout: finite derived
    /// subgroup and a finite-index centralizer of class at most two.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub decomposition: Option<NeumannResults>,
}

#[derive(Serialize)]
pub struct CheckChainResults {
    pub kind: &'static str,
    pub valid: bool,
    pub levels: usize,
    /// One certified bound per transition between consecutive levels.
    pub level_bounds: Vec<BoundClaim>,
    pub max_bound: u64,
}

#[derive(Serialize)]
pub struct TowerResults {
    /// `[G : F]` for the final finite-index subgroup `F`.
    pub stabilizer_index: Claim,
    /// Exact nilpotency class of `F`.
    pub nilpotency_class: usize,
    /// The guaranteed bound (twice the chain length).
    pub class_bound: usize,
    pub class_within_bound: bool,
    /// Every tower factor was re-verified central during construction.
    pub tower_verified: bool,
    pub stabilizer_generators: Vec<ElementFile>,
    pub steps: Vec<TowerStepReport>,
}

#[derive(Serialize)]
pub struct TowerStepReport {
    pub level: usize,
    /// `[F : A]` for the FC-subgroup `A` of this step.
    pub fc_index: Claim,
    /// `[X : M]` for the commutator preimage `X` over the modulus `M`.
    pub commutator_index: Claim,
    /// `[G : F]` after this step.
    pub stabilizer_index: Claim,
    pub tower_length: usize,
    /// The newly added odd tower level has finite index over the level
    /// beneath it.
    pub odd_factor_finite: bool,
}

#[derive(Serialize)]
pub struct NeumannResults {
    pub bound: BoundClaim,
    pub derived_order: Claim,
    pub derived_generators: Vec<ElementFile>,
    pub centralizer_index: Claim,
    /// Nilpotency class of the centralizer (at most two).
    pub centralizer_class: usize,
    pub centralizer_generators: Vec<ElementFile>,
}

#[derive(Serialize)]
pub struct SolvableResults {
    /// `[G : subgroup]` for the resolved solvable subgroup.
    pub index: Claim,
    pub derived_length: usize,
    pub subgroup_generators: Vec<ElementFile>,
    /// Number of levels in the verified derived series (length + 1).
    pub derived_series_levels: usize,
}

#[derive(Serialize)]
pub struct OracleSummary {
    pub radius: u32,
    /// Ball sizes at radii `0..=radius`.
    pub ball_sizes: Vec<u64>,
    pub method: &'static str,
    /// Conjugate-count stabilization for each standard generator.
    pub generators: Vec<GeneratorCheck>,
}

#[derive(Serialize)]
pub struct GeneratorCheck {
    pub element: ElementFile,
    /// Distinct conjugates using conjugators of length < radius.
    pub conjugates_at_prev: u64,
    /// Distinct conjugates using conjugators of length ≤ radius.
    pub conjugates_at_radius: u64,
    /// Equal counts: the conjugate set stopped growing.
    pub stabilized: bool,
}
