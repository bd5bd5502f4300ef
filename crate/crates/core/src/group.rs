//! Ambient groups and their elements.
//!
//! A [`GroupRef`] is a cheaply clonable handle to a validated ambient group
//! in one of two backends:
//!
//! * **finite permutation**: a subgroup of `Sym(degree)` given by generators,
//!   closed under a deterministic stabilizer-chain construction;
//! * **affine**: `Z^rank ⋊ F` for a finite permutation group `F` acting by
//!   unimodular integer matrices.
//!
//! All element arithmetic is exact. Arithmetic is a method of the group (not
//! of the element) because the affine product needs the action; mixing
//! elements across groups is an error surfaced by the membership checks.

use std::fmt;
use std::sync::Arc;

use crate::affine::{AffineDescriptor, AffineGroup, AffinePair};
use crate::error::Error;
use crate::finite::{build_bsgs, naive_closure, Bsgs, FinitePermDescriptor, ENUMERATION_LIMIT};
use crate::index::IndexValue;
use crate::linalg::IVec;
use crate::perm::Perm;
use crate::Result;

/// An element of an ambient group.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Element {
    /// A permutation (finite backend).
    Perm(Perm),
    /// A translation–finite-part pair (affine backend).
    Affine { v: IVec, f: Perm },
}

impl Element {
    pub fn affine(v: IVec, f: Perm) -> Element {
        Element::Affine { v, f }
    }

    pub(crate) fn as_perm(&self) -> Result<&Perm> {
        match self {
            Element::Perm(p) => Ok(p),
            Element::Affine { .. } => Err(Error::GroupMismatch(
                "expected a permutation element, found an affine one".into(),
            )),
        }
    }

    pub(crate) fn as_pair(&self) -> Result<AffinePair> {
        match self {
            Element::Affine { v, f } => Ok((v.clone(), f.clone())),
            Element::Perm(_) => Err(Error::GroupMismatch(
                "expected an affine element, found a permutation".into(),
            )),
        }
    }
}

impl fmt::Display for Element {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Perm(p) => write!(out, "{p}"),
            Element::Affine { v, f } => {
                let coords: Vec<String> = v.iter().map(|x| x.to_string()).collect();
                write!(out, "([{}], {f})", coords.join(", "))
            }
        }
    }
}

pub(crate) enum GroupData {
    Finite(FiniteGroup),
    Affine(AffineGroup),
}

pub(crate) struct FiniteGroup {
    pub descriptor: FinitePermDescriptor,
    pub bsgs: Bsgs,
    /// Full sorted enumeration, present when the order is within the
    /// enumeration limit.
    pub elements: Option<Vec<Perm>>,
}

/// A validated ambient group. Clones share the same underlying data, so
/// handles into the same group can verify they agree by pointer, falling
/// back to structural comparison of descriptors.
#[derive(Clone)]
pub struct GroupRef(pub(crate) Arc<GroupData>);

impl fmt::Debug for GroupRef {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &*self.0 {
            GroupData::Finite(f) => write!(
                out,
                "GroupRef(finite, degree {}, order {})",
                f.descriptor.degree,
                f.bsgs.order()
            ),
            GroupData::Affine(a) => write!(
                out,
                "GroupRef(affine, rank {}, finite part of order {})",
                a.rank,
                a.finite_elements.len()
            ),
        }
    }
}

impl GroupRef {
    /// Builds a finite permutation group from generators.
    pub fn new_finite(descriptor: FinitePermDescriptor) -> Result<GroupRef> {
        let bsgs = build_bsgs(&descriptor);
        let elements = if bsgs.order() <= ENUMERATION_LIMIT {
            naive_closure(
                descriptor.degree,
                &descriptor.generators,
                ENUMERATION_LIMIT as usize,
            )
            .map(|set| set.into_iter().collect::<Vec<_>>())
        } else {
            None
        };
        if let Some(els) = &elements {
            if els.len() as u64 != bsgs.order() {
                return Err(Error::InternalVerification(format!(
                    "stabilizer chain order {} disagrees with direct closure size {}",
                    bsgs.order(),
                    els.len()
                )));
            }
        }
        Ok(GroupRef(Arc::new(GroupData::Finite(FiniteGroup {
            descriptor,
            bsgs,
            elements,
        }))))
    }

    /// Builds an affine group `Z^rank ⋊ F`, validating the action.
    pub fn new_affine(descriptor: AffineDescriptor) -> Result<GroupRef> {
        let data = AffineGroup::validate(descriptor)?;
        Ok(GroupRef(Arc::new(GroupData::Affine(data))))
    }

    pub fn is_affine(&self) -> bool {
        matches!(&*self.0, GroupData::Affine(_))
    }

    pub(crate) fn finite(&self) -> Result<&FiniteGroup> {
        match &*self.0 {
            GroupData::Finite(f) => Ok(f),
            GroupData::Affine(_) => Err(Error::GroupMismatch(
                "operation applied to an affine group where a finite one was expected".into(),
            )),
        }
    }

    pub(crate) fn affine(&self) -> Result<&AffineGroup> {
        match &*self.0 {
            GroupData::Affine(a) => Ok(a),
            GroupData::Finite(_) => Err(Error::GroupMismatch(
                "operation applied to a finite group where an affine one was expected".into(),
            )),
        }
    }

    /// Whether two references denote the same validated group.
    pub fn same_group(&self, other: &GroupRef) -> bool {
        if Arc::ptr_eq(&self.0, &other.0) {
            return true;
        }
        match (&*self.0, &*other.0) {
            (GroupData::Finite(a), GroupData::Finite(b)) => a.descriptor == b.descriptor,
            (GroupData::Affine(a), GroupData::Affine(b)) => {
                a.rank == b.rank
                    && a.finite_descriptor == b.finite_descriptor
                    && a.finite_elements
                        .iter()
                        .all(|f| a.rho(f) == b.rho(f))
            }
            _ => false,
        }
    }

    /// Order of the ambient group.
    pub fn order(&self) -> IndexValue {
        match &*self.0 {
            GroupData::Finite(f) => IndexValue::finite(f.bsgs.order()),
            GroupData::Affine(_) => IndexValue::Infinite,
        }
    }

    pub fn identity(&self) -> Element {
        match &*self.0 {
            GroupData::Finite(f) => Element::Perm(Perm::identity(f.descriptor.degree)),
            GroupData::Affine(a) => {
                let (v, f) = a.identity();
                Element::Affine { v, f }
            }
        }
    }

    /// The generators the group was defined with.
    pub fn standard_generators(&self) -> Vec<Element> {
        match &*self.0 {
            GroupData::Finite(f) => f
                .descriptor
                .generators
                .iter()
                .cloned()
                .map(Element::Perm)
                .collect(),
            GroupData::Affine(a) => {
                let e = Perm::identity(a.finite_descriptor.degree);
                let mut gens: Vec<Element> = (0..a.rank)
                    .map(|i| Element::Affine {
                        v: crate::linalg::unit_vec(a.rank, i),
                        f: e.clone(),
                    })
                    .collect();
                for f in &a.finite_descriptor.generators {
                    gens.push(Element::Affine {
                        v: vec![0; a.rank],
                        f: f.clone(),
                    });
                }
                gens
            }
        }
    }

    /// Whether `el` is a member of this group (and of the right backend).
    pub fn contains(&self, el: &Element) -> bool {
        match (&*self.0, el) {
            (GroupData::Finite(g), Element::Perm(p)) => {
                p.degree() == g.descriptor.degree && g.bsgs.contains(p)
            }
            (GroupData::Affine(g), Element::Affine { v, f }) => {
                v.len() == g.rank && g.finite_contains(f)
            }
            _ => false,
        }
    }

    /// Membership as a checked precondition.
    pub fn check_member(&self, el: &Element) -> Result<()> {
        if self.contains(el) {
            Ok(())
        } else {
            Err(Error::NotAMember {
                element: el.to_string(),
            })
        }
    }

    pub fn mul(&self, a: &Element, b: &Element) -> Element {
        match &*self.0 {
            GroupData::Finite(_) => {
                let (pa, pb) = (
                    a.as_perm().expect("finite group element"),
                    b.as_perm().expect("finite group element"),
                );
                Element::Perm(pa.compose(pb))
            }
            GroupData::Affine(g) => {
                let (va, vb) = (
                    a.as_pair().expect("affine group element"),
                    b.as_pair().expect("affine group element"),
                );
                let (v, f) = g.mul(&va, &vb);
                Element::Affine { v, f }
            }
        }
    }

    pub fn inv(&self, a: &Element) -> Element {
        match &*self.0 {
            GroupData::Finite(_) => Element::Perm(a.as_perm().expect("finite group element").inverse()),
            GroupData::Affine(g) => {
                let (v, f) = g.inv(&a.as_pair().expect("affine group element"));
                Element::Affine { v, f }
            }
        }
    }

    /// Conjugate `a^b = b⁻¹·a·b`.
    pub fn conj(&self, a: &Element, b: &Element) -> Element {
        self.mul(&self.mul(&self.inv(b), a), b)
    }

    /// Commutator `[a, b] = a⁻¹·b⁻¹·a·b`.
    pub fn comm(&self, a: &Element, b: &Element) -> Element {
        self.mul(&self.mul(&self.inv(a), &self.inv(b)), &self.mul(a, b))
    }

    pub fn pow(&self, a: &Element, n: i64) -> Element {
        let mut result = self.identity();
        let (mut base, mut m) = if n < 0 {
            (self.inv(a), n.unsigned_abs())
        } else {
            (a.clone(), n as u64)
        };
        while m > 0 {
            if m & 1 == 1 {
                result = self.mul(&result, &base);
            }
            base = self.mul(&base, &base);
            m >>= 1;
        }
        result
    }

    pub fn is_identity(&self, a: &Element) -> bool {
        *a == self.identity()
    }
}
