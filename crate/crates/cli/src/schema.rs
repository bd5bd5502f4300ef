//! On-disk JSON formats for groups, chains, and elements, and their
//! conversion into core objects.
//!
//! Permutations are written as 1-based image arrays and matrices as
//! row-major integer arrays, so the files are bit-exact and diffable.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use fc_core::affine::AffineDescriptor;
use fc_core::fc::ChainKind;
use fc_core::finite::FinitePermDescriptor;
use fc_core::group::Element;
use fc_core::perm::Perm;
use fc_core::{GroupRef, SubgroupHandle};

use crate::error::CliError;

pub const GROUP_SCHEMA: &str = "fc-group/v1";
pub const CHAIN_SCHEMA: &str = "fc-chain/v1";
pub const REPORT_SCHEMA: &str = "fc-report/v1";

/// A group definition file.
#[derive(Debug, Deserialize)]
pub struct GroupFile {
    pub schema: String,
    #[serde(default)]
    pub name: Option<String>,
    #[serde(flatten)]
    pub body: GroupBody,
}

#[derive(Debug, Deserialize)]
#[serde(tag = "kind")]
pub enum GroupBody {
    #[serde(rename = "finite-permutation")]
    Finite {
        degree: usize,
        /// Generator name to 1-based image array.
        generators: BTreeMap<String, Vec<usize>>,
    },
    #[serde(rename = "affine")]
    Affine {
        rank: usize,
        finite_part: FinitePartFile,
        /// Finite-part generator name to row-major integer matrix.
        action: BTreeMap<String, Vec<Vec<i64>>>,
    },
}

/// The nested finite-permutation group inside an affine group file.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FinitePartFile {
    pub kind: String,
    pub degree: usize,
    pub generators: BTreeMap<String, Vec<usize>>,
}

/// A chain definition file: ascending subgroup levels, each given by a
/// list of generating elements (the empty list is the trivial subgroup).
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ChainFile {
    pub schema: String,
    pub kind: ChainKindFile,
    pub levels: Vec<Vec<ElementFile>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ChainKindFile {
    Nilpotent,
    Solvable,
}

impl From<ChainKindFile> for ChainKind {
    fn from(kind: ChainKindFile) -> ChainKind {
        match kind {
            ChainKindFile::Nilpotent => ChainKind::Nilpotent,
            ChainKindFile::Solvable => ChainKind::Solvable,
        }
    }
}

/// One element: a 1-based image array for a permutation, or a translation
/// vector paired with a 1-based image array for an affine element.
#[derive(Debug, Clone, PartialEq, Eq, Deserialize, Serialize)]
#[serde(untagged)]
pub enum ElementFile {
    Perm(Vec<usize>),
    Affine { translation: Vec<i64>, point: Vec<usize> },
}

/// Converts a 1-based image array into a permutation.
fn perm_from_file(images: &[usize], what: &str) -> Result<Perm, CliError> {
    let shifted: Vec<usize> = images
        .iter()
        .map(|&x| {
            x.checked_sub(1)
                .ok_or_else(|| CliError::schema(format!("{what}: images are 1-based, found 0")))
        })
        .collect::<Result<_, _>>()?;
    Perm::from_images(shifted)
        .ok_or_else(|| CliError::schema(format!("{what}: {images:?} is not a permutation")))
}

/// Sorted generator names with their permutations; the same order is used
/// for the action matrices, so names line generators and matrices up.
fn named_perms(
    degree: usize,
    generators: &BTreeMap<String, Vec<usize>>,
) -> Result<Vec<(String, Perm)>, CliError> {
    generators
        .iter()
        .map(|(name, images)| {
            if images.len() != degree {
                return Err(CliError::schema(format!(
                    "generator {name}: expected {degree} images, found {}",
                    images.len()
                )));
            }
            Ok((name.clone(), perm_from_file(images, &format!("generator {name}"))?))
        })
        .collect()
}

impl GroupFile {
    pub fn parse(bytes: &[u8]) -> Result<GroupFile, CliError> {
        let file: GroupFile = serde_json::from_slice(bytes)
            .map_err(|e| CliError::schema(format!("group file: {e}")))?;
        if file.schema != GROUP_SCHEMA {
            return Err(CliError::schema(format!(
                "group file: unsupported schema {:?} (expected {GROUP_SCHEMA:?})",
                file.schema
            )));
        }
        Ok(file)
    }

    /// Builds the group, verifying descriptor invariants (bijective images,
    /// unimodular matrices, the action being a homomorphism).
    pub fn build(&self) -> Result<GroupRef, CliError> {
        match &self.body {
            GroupBody::Finite { degree, generators } => {
                let perms = named_perms(*degree, generators)?
                    .into_iter()
                    .map(|(_, p)| p)
                    .collect();
                let descriptor = FinitePermDescriptor::new(*degree, perms)
                    .map_err(CliError::schema_from_core)?;
                GroupRef::new_finite(descriptor).map_err(CliError::schema_from_core)
            }
            GroupBody::Affine {
                rank,
                finite_part,
                action,
            } => {
                if finite_part.kind != "finite-permutation" {
                    return Err(CliError::schema(format!(
                        "finite_part: unsupported kind {:?}",
                        finite_part.kind
                    )));
                }
                let named = named_perms(finite_part.degree, &finite_part.generators)?;
                let mut matrices = Vec::with_capacity(named.len());
                for (name, _) in &named {
                    let matrix = action.get(name).ok_or_else(|| {
                        CliError::schema(format!("action: no matrix for generator {name}"))
                    })?;
                    matrices.push(matrix.clone());
                }
                if let Some(extra) = action.keys().find(|k| !named.iter().any(|(n, _)| n == *k)) {
                    return Err(CliError::schema(format!(
                        "action: matrix for unknown generator {extra}"
                    )));
                }
                let descriptor = AffineDescriptor {
                    rank: *rank,
                    finite_part: FinitePermDescriptor::new(
                        finite_part.degree,
                        named.into_iter().map(|(_, p)| p).collect(),
                    )
                    .map_err(CliError::schema_from_core)?,
                    action: matrices,
                };
                GroupRef::new_affine(descriptor).map_err(CliError::schema_from_core)
            }
        }
    }
}

impl ChainFile {
    pub fn parse(bytes: &[u8]) -> Result<ChainFile, CliError> {
        let file: ChainFile = serde_json::from_slice(bytes)
            .map_err(|e| CliError::schema(format!("chain file: {e}")))?;
        if file.schema != CHAIN_SCHEMA {
            return Err(CliError::schema(format!(
                "chain file: unsupported schema {:?} (expected {CHAIN_SCHEMA:?})",
                file.schema
            )));
        }
        Ok(file)
    }

    /// Builds the chain levels as subgroups of `group`. Membership of every
    /// generator is checked by the subgroup constructor.
    pub fn build(&self, group: &GroupRef) -> Result<Vec<SubgroupHandle>, CliError> {
        self.levels
            .iter()
            .enumerate()
            .map(|(i, level)| {
                let gens = level
                    .iter()
                    .map(|el| element_from_file(el, &format!("level {} generator", i + 1)))
                    .collect::<Result<Vec<_>, _>>()?;
                SubgroupHandle::generate(group, &gens).map_err(CliError::from)
            })
            .collect()
    }
}

/// Converts a file element into a core element (degree and membership are
/// checked later, against the group).
pub fn element_from_file(el: &ElementFile, what: &str) -> Result<Element, CliError> {
    match el {
        ElementFile::Perm(images) => Ok(Element::Perm(perm_from_file(images, what)?)),
        ElementFile::Affine { translation, point } => Ok(Element::affine(
            translation.clone(),
            perm_from_file(point, what)?,
        )),
    }
}

/// Renders a core element in the file format (1-based image arrays).
pub fn element_to_file(el: &Element) -> ElementFile {
    fn one_based(p: &Perm) -> Vec<usize> {
        p.images().iter().map(|&x| x + 1).collect()
    }
    match el {
        Element::Perm(p) => ElementFile::Perm(one_based(p)),
        Element::Affine { v, f } => ElementFile::Affine {
            translation: v.clone(),
            point: one_based(f),
        },
    }
}
