//! Subgroup handles: validated subgroups of an ambient group.
//!
//! A [`SubgroupHandle`] owns a generating set together with closure data that
//! answers membership exactly:
//!
//! * finite backend — a stabilizer chain, plus the full sorted element set
//!   when the order is within [`ENUMERATION_LIMIT`];
//! * affine backend — canonical coset data (finite image, translation
//!   lattice in Hermite form, reduced sections), so equal subgroups carry
//!   equal data.
//!
//! All operations are exact. Anything that would require enumerating an
//! infinite (or over-large) subgroup fails with [`Error::TooLarge`] instead
//! of approximating. Operations that work modulo a subgroup verify the
//! normalization preconditions they need and fail with
//! [`Error::NotNormalized`] when they do not hold.

use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::affine::{self, AffineSubgroup};
use crate::error::Error;
use crate::finite::{build_bsgs, Bsgs, FinitePermDescriptor, ENUMERATION_LIMIT};
use crate::group::{Element, GroupRef};
use crate::index::IndexValue;
use crate::lattice::{self, Congruence};
use crate::linalg::{mat_identity, vec_add};
use crate::perm::Perm;
use crate::Result;

/// Safety bound on normal-closure growth rounds. Each round strictly
/// enlarges the subgroup, and ascending subgroup chains in both backends are
/// finite, so hitting the bound indicates a bug rather than a hard input.
const NORMAL_CLOSURE_ROUNDS: usize = 1000;

/// Safety bound on central-series length.
const CENTRAL_SERIES_LIMIT: usize = 64;

/// Safety bound on derived-series length.
const DERIVED_SERIES_LIMIT: usize = 32;

/// Closure data backing a handle.
enum ClosureData {
    /// Finite backend: stabilizer chain, plus the sorted element set when
    /// the order is within the enumeration limit.
    Finite {
        bsgs: Bsgs,
        elements: Option<Vec<Perm>>,
    },
    /// Affine backend: canonical coset data.
    Affine(AffineSubgroup),
}

struct HandleInner {
    group: GroupRef,
    generators: Vec<Element>,
    closure: ClosureData,
    normal_in_group: OnceLock<bool>,
}

/// A subgroup of an ambient group, closed and ready for exact queries.
/// Clones share the underlying closure data.
#[derive(Clone)]
pub struct SubgroupHandle {
    inner: Arc<HandleInner>,
}

impl fmt::Debug for SubgroupHandle {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            out,
            "subgroup(order {}, {} generators)",
            self.order(),
            self.inner.generators.len()
        )
    }
}

impl SubgroupHandle {
    fn from_parts(group: GroupRef, generators: Vec<Element>, closure: ClosureData) -> SubgroupHandle {
        SubgroupHandle {
            inner: Arc::new(HandleInner {
                group,
                generators,
                closure,
                normal_in_group: OnceLock::new(),
            }),
        }
    }

    /// The subgroup generated by `gens`, all of which must belong to `group`.
    pub fn generate(group: &GroupRef, gens: &[Element]) -> Result<SubgroupHandle> {
        for g in gens {
            group.check_member(g)?;
        }
        let closure = if group.is_affine() {
            let ga = group.affine()?;
            let pairs = gens
                .iter()
                .map(|g| g.as_pair())
                .collect::<Result<Vec<_>>>()?;
            ClosureData::Affine(affine::schreier_closure(ga, &pairs)?)
        } else {
            let fin = group.finite()?;
            let perms = gens
                .iter()
                .map(|g| g.as_perm().cloned())
                .collect::<Result<Vec<_>>>()?;
            let desc = FinitePermDescriptor::new(fin.descriptor.degree, perms)?;
            let bsgs = build_bsgs(&desc);
            let elements = if bsgs.order() <= ENUMERATION_LIMIT {
                let mut els = bsgs.enumerate();
                els.sort();
                Some(els)
            } else {
                None
            };
            ClosureData::Finite { bsgs, elements }
        };
        Ok(SubgroupHandle::from_parts(
            group.clone(),
            gens.to_vec(),
            closure,
        ))
    }

    /// The trivial subgroup.
    pub fn trivial(group: &GroupRef) -> SubgroupHandle {
        SubgroupHandle::generate(group, &[]).expect("the trivial subgroup always closes")
    }

    /// The whole ambient group as a subgroup of itself.
    pub fn full(group: &GroupRef) -> SubgroupHandle {
        let closure = if group.is_affine() {
            let ga = group.affine().expect("affine data");
            ClosureData::Affine(AffineSubgroup::full(ga))
        } else {
            let fin = group.finite().expect("finite data");
            ClosureData::Finite {
                bsgs: fin.bsgs.clone(),
                elements: fin.elements.clone(),
            }
        };
        SubgroupHandle::from_parts(group.clone(), group.standard_generators(), closure)
    }

    /// Wraps an already-closed sorted element set of a finite group. The set
    /// is re-closed and must reproduce itself; a mismatch means the caller's
    /// membership condition was not actually a subgroup condition.
    pub(crate) fn from_finite_elements(
        group: &GroupRef,
        mut elements: Vec<Perm>,
    ) -> Result<SubgroupHandle> {
        let fin = group.finite()?;
        elements.sort();
        elements.dedup();
        if elements.first().map(|p| p.is_identity()) != Some(true) {
            return Err(Error::InternalVerification(
                "a filtered element set lacks the identity".into(),
            ));
        }
        let gens: Vec<Perm> = elements
            .iter()
            .filter(|p| !p.is_identity())
            .cloned()
            .collect();
        let desc = FinitePermDescriptor::new(fin.descriptor.degree, gens.clone())?;
        let bsgs = build_bsgs(&desc);
        if bsgs.order() != elements.len() as u64 {
            return Err(Error::InternalVerification(format!(
                "a filtered element set of size {} closes to order {}; the selecting \
                 condition was not subgroup-closed",
                elements.len(),
                bsgs.order()
            )));
        }
        Ok(SubgroupHandle::from_parts(
            group.clone(),
            gens.into_iter().map(Element::Perm).collect(),
            ClosureData::Finite {
                bsgs,
                elements: Some(elements),
            },
        ))
    }

    /// Wraps verified canonical affine subgroup data.
    pub(crate) fn from_affine_data(
        group: &GroupRef,
        data: AffineSubgroup,
    ) -> Result<SubgroupHandle> {
        let ga = group.affine()?;
        let gens: Vec<Element> = data
            .canonical_generators(ga)
            .into_iter()
            .map(|(v, f)| Element::Affine { v, f })
            .collect();
        Ok(SubgroupHandle::from_parts(
            group.clone(),
            gens,
            ClosureData::Affine(data),
        ))
    }

    /// The ambient group.
    pub fn group(&self) -> &GroupRef {
        &self.inner.group
    }

    /// The generating set this handle was built from. Internally constructed
    /// handles store a set that provably generates their closure, so these
    /// are always sufficient for one-sided conjugation checks.
    pub fn generators(&self) -> &[Element] {
        &self.inner.generators
    }

    pub(crate) fn affine_data(&self) -> Result<&AffineSubgroup> {
        match &self.inner.closure {
            ClosureData::Affine(data) => Ok(data),
            ClosureData::Finite { .. } => Err(Error::GroupMismatch(
                "affine subgroup data requested from a finite-backend handle".into(),
            )),
        }
    }

    pub(crate) fn finite_elements(&self) -> Result<&[Perm]> {
        match &self.inner.closure {
            ClosureData::Finite {
                elements: Some(els),
                ..
            } => Ok(els),
            ClosureData::Finite { bsgs, .. } => Err(Error::TooLarge(format!(
                "subgroup of order {} exceeds the enumeration limit {}",
                bsgs.order(),
                ENUMERATION_LIMIT
            ))),
            ClosureData::Affine(_) => Err(Error::GroupMismatch(
                "finite element set requested from an affine-backend handle".into(),
            )),
        }
    }

    /// Order of the subgroup.
    pub fn order(&self) -> IndexValue {
        match &self.inner.closure {
            ClosureData::Finite { bsgs, .. } => IndexValue::finite(bsgs.order()),
            ClosureData::Affine(data) => data.order(),
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == IndexValue::Finite(1)
    }

    /// Exact membership.
    pub fn contains(&self, el: &Element) -> bool {
        if !self.inner.group.contains(el) {
            return false;
        }
        match (&self.inner.closure, el) {
            (ClosureData::Finite { bsgs, .. }, Element::Perm(p)) => bsgs.contains(p),
            (ClosureData::Affine(data), Element::Affine { v, f }) => data.contains_parts(v, f),
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

    /// A generating set read off the closure data itself: the sorted
    /// non-identity elements (small finite), the strong generators (large
    /// finite), or the canonical section-plus-lattice generators (affine).
    pub fn closure_generators(&self) -> Vec<Element> {
        match &self.inner.closure {
            ClosureData::Finite {
                elements: Some(els),
                ..
            } => els
                .iter()
                .filter(|p| !p.is_identity())
                .cloned()
                .map(Element::Perm)
                .collect(),
            ClosureData::Finite { bsgs, .. } => bsgs
                .strong_generators
                .iter()
                .cloned()
                .map(Element::Perm)
                .collect(),
            ClosureData::Affine(data) => {
                let ga = self.inner.group.affine().expect("affine data");
                data.canonical_generators(ga)
                    .into_iter()
                    .map(|(v, f)| Element::Affine { v, f })
                    .collect()
            }
        }
    }

    fn check_same_group(&self, other: &SubgroupHandle) -> Result<()> {
        if self.inner.group.same_group(&other.inner.group) {
            Ok(())
        } else {
            Err(Error::GroupMismatch(
                "subgroups live in different ambient groups".into(),
            ))
        }
    }

    /// Whether every generator of `other` belongs to `self` (so `other ⊆
    /// self`). Subgroups of different ambient groups are never comparable.
    pub fn contains_subgroup(&self, other: &SubgroupHandle) -> bool {
        self.inner.group.same_group(&other.inner.group)
            && other.generators().iter().all(|g| self.contains(g))
    }

    /// Exact subgroup equality.
    pub fn same_as(&self, other: &SubgroupHandle) -> bool {
        if !self.inner.group.same_group(&other.inner.group) {
            return false;
        }
        if Arc::ptr_eq(&self.inner, &other.inner) {
            return true;
        }
        match (&self.inner.closure, &other.inner.closure) {
            // Canonical affine data makes equality structural.
            (ClosureData::Affine(a), ClosureData::Affine(b)) => a == b,
            _ => self.order() == other.order() && self.contains_subgroup(other),
        }
    }

    /// The relative index `[self : self ∩ other]`, infinite when the
    /// intersection is too thin.
    pub fn relative_index(&self, other: &SubgroupHandle) -> Result<IndexValue> {
        self.check_same_group(other)?;
        if other.contains_subgroup(self) {
            return Ok(IndexValue::finite(1));
        }
        match &self.inner.closure {
            ClosureData::Finite { .. } => {
                let els = self.finite_elements()?;
                let common = els
                    .iter()
                    .filter(|p| other.contains(&Element::Perm((*p).clone())))
                    .count() as u64;
                Ok(IndexValue::finite(els.len() as u64 / common))
            }
            ClosureData::Affine(a) => {
                let i = self.intersect(other)?;
                let id = i.affine_data()?;
                let image_index = IndexValue::finite(a.image.len() as u64 / id.image.len() as u64);
                let lattice_index = lattice::index_over(&a.lattice, &id.lattice);
                Ok(image_index.times(lattice_index))
            }
        }
    }

    /// Exact intersection.
    pub fn intersect(&self, other: &SubgroupHandle) -> Result<SubgroupHandle> {
        self.check_same_group(other)?;
        if self.contains_subgroup(other) {
            return Ok(other.clone());
        }
        if other.contains_subgroup(self) {
            return Ok(self.clone());
        }
        match (&self.inner.closure, &other.inner.closure) {
            (ClosureData::Affine(a), ClosureData::Affine(b)) => {
                let ga = self.inner.group.affine()?;
                // Membership in `other`, coset by coset: u ≡ section(f) mod
                // the other lattice.
                let data = affine::assemble_subgroup(ga, a, |f| {
                    if !b.image_contains(f) {
                        return None;
                    }
                    Some(Congruence::new(
                        mat_identity(a.lattice.ambient()),
                        b.section[f].clone(),
                        b.lattice.clone(),
                    ))
                })?;
                SubgroupHandle::from_affine_data(&self.inner.group, data)
            }
            _ => {
                // Filter whichever side is enumerated.
                let (small, test) = if matches!(
                    &self.inner.closure,
                    ClosureData::Finite { elements: Some(_), .. }
                ) {
                    (self, other)
                } else {
                    (other, self)
                };
                let els = small.finite_elements()?;
                let common: Vec<Perm> = els
                    .iter()
                    .filter(|p| test.contains(&Element::Perm((*p).clone())))
                    .cloned()
                    .collect();
                SubgroupHandle::from_finite_elements(&self.inner.group, common)
            }
        }
    }

    /// The subgroup generated by both operands together.
    pub fn join(&self, other: &SubgroupHandle) -> Result<SubgroupHandle> {
        self.check_same_group(other)?;
        if self.contains_subgroup(other) {
            return Ok(self.clone());
        }
        if other.contains_subgroup(self) {
            return Ok(other.clone());
        }
        let mut gens = self.generators().to_vec();
        gens.extend(other.generators().iter().cloned());
        SubgroupHandle::generate(&self.inner.group, &gens)
    }

    /// Whether `self` normalizes `n`.
    ///
    /// Conjugating generators suffices: if `n^h ⊆ n` for a single `h` then
    /// equality follows, because conjugation preserves order (finite
    /// backend) and, for affine subgroups, maps the canonical data to data
    /// of the same image size and lattice covolume. Products of generators
    /// then normalize as well, so no inverses need checking.
    pub fn normalizes(&self, n: &SubgroupHandle) -> Result<bool> {
        self.check_same_group(n)?;
        let group = &self.inner.group;
        for h in self.generators() {
            for x in n.generators() {
                if !n.contains(&group.conj(x, h)) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Whether conjugation by one element maps the subgroup into itself
    /// (hence onto itself; see [`SubgroupHandle::normalizes`] for why the
    /// one-sided generator check is enough).
    pub fn is_normalized_by(&self, k: &Element) -> bool {
        let group = &self.inner.group;
        self.generators()
            .iter()
            .all(|x| self.contains(&group.conj(x, k)))
    }

    /// Whether the subgroup is normal in its ambient group (memoized).
    pub fn is_normal_in_group(&self) -> bool {
        *self.inner.normal_in_group.get_or_init(|| {
            let group = &self.inner.group;
            group.standard_generators().iter().all(|u| {
                self.generators()
                    .iter()
                    .all(|x| self.contains(&group.conj(x, u)))
            })
        })
    }

    /// Smallest subgroup containing `self` that is normalized by `under`.
    /// Grows by conjugating the current generators with the generators of
    /// `under` until stable; every added element is a conjugate of a member,
    /// so the result never exceeds the true normal closure.
    pub fn normal_closure(&self, under: &SubgroupHandle) -> Result<SubgroupHandle> {
        self.check_same_group(under)?;
        let group = self.inner.group.clone();
        let mut current = self.clone();
        for _ in 0..NORMAL_CLOSURE_ROUNDS {
            let mut fresh: Vec<Element> = Vec::new();
            for u in under.generators() {
                for x in current.generators() {
                    let c = group.conj(x, u);
                    if !current.contains(&c) && !fresh.contains(&c) {
                        fresh.push(c);
                    }
                }
            }
            if fresh.is_empty() {
                return Ok(current);
            }
            let mut gens = current.generators().to_vec();
            gens.extend(fresh);
            current = SubgroupHandle::generate(&group, &gens)?;
        }
        Err(Error::SearchExhausted(
            "normal closure did not stabilize".into(),
        ))
    }

    /// The commutator subgroup `[self, other]`: the normal closure, inside
    /// `⟨self, other⟩`, of the commutators of generator pairs.
    pub fn commutator_with(&self, other: &SubgroupHandle) -> Result<SubgroupHandle> {
        self.check_same_group(other)?;
        let group = &self.inner.group;
        let mut comm_gens: Vec<Element> = Vec::new();
        for x in self.generators() {
            for y in other.generators() {
                let c = group.comm(x, y);
                if !group.is_identity(&c) && !comm_gens.contains(&c) {
                    comm_gens.push(c);
                }
            }
        }
        let seed = SubgroupHandle::generate(group, &comm_gens)?;
        let ambient = self.join(other)?;
        seed.normal_closure(&ambient)
    }

    /// The derived subgroup `[self, self]`.
    pub fn derived_subgroup(&self) -> Result<SubgroupHandle> {
        self.commutator_with(self)
    }

    /// Left coset representatives of `sub` in `self`, identity first,
    /// deterministic. Requires `sub ⊆ self` with finite index. The returned
    /// list is verified to hit every coset exactly once.
    pub fn transversal_over(&self, sub: &SubgroupHandle) -> Result<Vec<Element>> {
        self.check_same_group(sub)?;
        if !self.contains_subgroup(sub) {
            return Err(Error::Precondition(
                "coset transversal requires a subgroup of the enclosing handle".into(),
            ));
        }
        let index = self.relative_index(sub)?;
        let Some(count) = index.as_finite() else {
            return Err(Error::Precondition(
                "coset transversal requires finite index".into(),
            ));
        };
        let group = &self.inner.group;
        let reps: Vec<Element> = match (&self.inner.closure, &sub.inner.closure) {
            (ClosureData::Affine(a), ClosureData::Affine(b)) => {
                // Image cosets (greedy over the sorted image) crossed with
                // lattice cosets; the identity leads because its image and
                // lattice representatives are both first.
                let mut image_reps: Vec<&Perm> = Vec::new();
                'image: for p in &a.image {
                    for r in &image_reps {
                        if b.image_contains(&r.inverse().compose(p)) {
                            continue 'image;
                        }
                    }
                    image_reps.push(p);
                }
                let lattice_reps = a.lattice.transversal_over(&b.lattice);
                let mut out = Vec::with_capacity(image_reps.len() * lattice_reps.len());
                for p in image_reps {
                    for l in &lattice_reps {
                        out.push(Element::Affine {
                            v: vec_add(&a.section[p], l),
                            f: p.clone(),
                        });
                    }
                }
                out
            }
            _ => {
                let els = self.finite_elements()?;
                let mut reps: Vec<Perm> = Vec::new();
                'elements: for x in els {
                    for r in &reps {
                        if sub.contains(&Element::Perm(r.inverse().compose(x))) {
                            continue 'elements;
                        }
                    }
                    reps.push(x.clone());
                }
                reps.into_iter().map(Element::Perm).collect()
            }
        };
        if reps.len() as u64 != count {
            return Err(Error::InternalVerification(format!(
                "coset transversal found {} representatives for index {count}",
                reps.len()
            )));
        }
        for (i, a) in reps.iter().enumerate() {
            for b in reps.iter().skip(i + 1) {
                if sub.contains(&group.mul(&group.inv(a), b)) {
                    return Err(Error::InternalVerification(
                        "coset transversal contains a duplicate coset".into(),
                    ));
                }
            }
        }
        Ok(reps)
    }

    /// All elements, sorted; only for finite subgroups within the
    /// enumeration limit.
    pub fn enumerate_elements(&self) -> Result<Vec<Element>> {
        match &self.inner.closure {
            ClosureData::Finite { .. } => Ok(self
                .finite_elements()?
                .iter()
                .cloned()
                .map(Element::Perm)
                .collect()),
            ClosureData::Affine(data) => {
                let mut els: Vec<Element> = data
                    .enumerate()?
                    .into_iter()
                    .map(|(v, f)| Element::Affine { v, f })
                    .collect();
                els.sort();
                Ok(els)
            }
        }
    }

    fn check_normalized_by(&self, n: &SubgroupHandle, what: &str) -> Result<()> {
        if !self.normalizes(n)? {
            return Err(Error::NotNormalized {
                normalizer: format!("{what} {self:?}"),
                modulus: format!("{n:?}"),
            });
        }
        Ok(())
    }

    /// The centralizer of `k` in `self` modulo `n`: `{h ∈ self : [h, k] ∈
    /// n}`. Both `self` and `k` must normalize `n`; the first condition
    /// makes the result a subgroup, the second makes "commuting modulo `n`"
    /// well defined for `k`.
    pub fn centralizer_mod(&self, k: &Element, n: &SubgroupHandle) -> Result<SubgroupHandle> {
        self.check_same_group(n)?;
        let group = &self.inner.group;
        group.check_member(k)?;
        self.check_normalized_by(n, "the centralizing subgroup")?;
        if !n.is_normalized_by(k) {
            return Err(Error::NotNormalized {
                normalizer: format!("the element {k}"),
                modulus: format!("{n:?}"),
            });
        }
        match &self.inner.closure {
            ClosureData::Finite { .. } => {
                let els = self.finite_elements()?;
                let chosen: Vec<Perm> = els
                    .iter()
                    .filter(|h| n.contains(&group.comm(&Element::Perm((*h).clone()), k)))
                    .cloned()
                    .collect();
                SubgroupHandle::from_finite_elements(group, chosen)
            }
            ClosureData::Affine(a) => {
                let ga = group.affine()?;
                let data = affine::centralizer_mod(ga, a, &k.as_pair()?, n.affine_data()?)?;
                SubgroupHandle::from_affine_data(group, data)
            }
        }
    }

    /// The center of `self` modulo `n`: elements commuting with all of
    /// `self` modulo `n`. Centralizing the generators suffices because, for
    /// fixed `h`, the elements that `h` centralizes modulo `n` form a
    /// subgroup once `self` normalizes `n`.
    pub fn center_mod(&self, n: &SubgroupHandle) -> Result<SubgroupHandle> {
        let mut acc: Option<SubgroupHandle> = None;
        for g in self.generators() {
            let c = self.centralizer_mod(g, n)?;
            acc = Some(match acc {
                None => c,
                Some(prev) => prev.intersect(&c)?,
            });
        }
        Ok(acc.unwrap_or_else(|| self.clone()))
    }

    /// The upper central series `1 = Z_0 ⊆ Z_1 ⊆ …` of `self`, where
    /// `Z_{i+1}` is the center of `self` modulo `Z_i`. Returns the strictly
    /// increasing series and `Some(class)` when it reaches `self` (the
    /// nilpotency class), or `None` when it stabilizes below `self`.
    pub fn upper_central_series(&self) -> Result<(Vec<SubgroupHandle>, Option<usize>)> {
        let mut series = vec![SubgroupHandle::trivial(&self.inner.group)];
        for _ in 0..CENTRAL_SERIES_LIMIT {
            let last = series.last().expect("series is nonempty").clone();
            if last.same_as(self) {
                let class = series.len() - 1;
                return Ok((series, Some(class)));
            }
            let next = self.center_mod(&last)?;
            if next.same_as(&last) {
                return Ok((series, None));
            }
            series.push(next);
        }
        Err(Error::SearchExhausted(
            "upper central series did not stabilize".into(),
        ))
    }

    /// The derived series `self ⊇ [self, self] ⊇ …`, stopping at the
    /// trivial subgroup (solvable) or at the first repetition (a perfect
    /// stage). The subgroup is solvable exactly when the last entry is
    /// trivial, with derived length one less than the series length.
    pub fn derived_series(&self) -> Result<Vec<SubgroupHandle>> {
        let mut series = vec![self.clone()];
        for _ in 0..DERIVED_SERIES_LIMIT {
            let last = series.last().expect("series is nonempty").clone();
            if last.is_trivial() {
                return Ok(series);
            }
            let next = last.derived_subgroup()?;
            if next.same_as(&last) {
                return Ok(series);
            }
            series.push(next);
        }
        Err(Error::SearchExhausted(
            "derived series did not stabilize".into(),
        ))
    }
}

/// A modulus: a subgroup `N` packaged with evidence that the subgroups that
/// need to act modulo `N` actually normalize it. Construction fails with
/// [`Error::NotNormalized`] otherwise; the mod-`N` operations re-verify
/// cheaply as a defense in depth.
#[derive(Clone, Debug)]
pub struct Modulus {
    sub: SubgroupHandle,
}

impl Modulus {
    /// Wraps `sub`, verifying that each listed subgroup normalizes it.
    pub fn new(sub: SubgroupHandle, normalized_by: &[&SubgroupHandle]) -> Result<Modulus> {
        for h in normalized_by {
            if !h.normalizes(&sub)? {
                return Err(Error::NotNormalized {
                    normalizer: format!("{h:?}"),
                    modulus: format!("{sub:?}"),
                });
            }
        }
        Ok(Modulus { sub })
    }

    /// The trivial modulus, turning mod-`N` notions into their plain forms.
    pub fn trivial(group: &GroupRef) -> Modulus {
        Modulus {
            sub: SubgroupHandle::trivial(group),
        }
    }

    pub fn subgroup(&self) -> &SubgroupHandle {
        &self.sub
    }
}

/// Size of the conjugacy class of `g·n` in `group/n`: the index of the
/// centralizer of `g` modulo `n` in the whole group. Requires `n` normal.
pub fn class_size_mod(group: &GroupRef, g: &Element, n: &SubgroupHandle) -> Result<IndexValue> {
    let full = SubgroupHandle::full(group);
    let centralizer = full.centralizer_mod(g, n)?;
    full.relative_index(&centralizer)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::affine::AffineDescriptor;
    use crate::perm::perm_from_cycles;

    fn s3() -> GroupRef {
        GroupRef::new_finite(
            FinitePermDescriptor::new(
                3,
                vec![
                    perm_from_cycles(3, &[&[1, 2, 3]]),
                    perm_from_cycles(3, &[&[1, 2]]),
                ],
            )
            .unwrap(),
        )
        .unwrap()
    }

    fn d8() -> GroupRef {
        GroupRef::new_finite(
            FinitePermDescriptor::new(
                4,
                vec![
                    perm_from_cycles(4, &[&[1, 2, 3, 4]]),
                    perm_from_cycles(4, &[&[1, 3]]),
                ],
            )
            .unwrap(),
        )
        .unwrap()
    }

    fn dinf() -> GroupRef {
        GroupRef::new_affine(AffineDescriptor {
            rank: 1,
            finite_part: FinitePermDescriptor::new(2, vec![perm_from_cycles(2, &[&[1, 2]])])
                .unwrap(),
            action: vec![vec![vec![-1]]],
        })
        .unwrap()
    }

    fn translation(k: i64) -> Element {
        Element::affine(vec![k], Perm::identity(2))
    }

    fn reflection_at(k: i64) -> Element {
        Element::affine(vec![k], perm_from_cycles(2, &[&[1, 2]]))
    }

    #[test]
    fn generation_membership_and_order() {
        let g = s3();
        let a3 = SubgroupHandle::generate(&g, &[Element::Perm(perm_from_cycles(3, &[&[1, 2, 3]]))])
            .unwrap();
        assert_eq!(a3.order(), IndexValue::Finite(3));
        assert!(a3.contains(&Element::Perm(perm_from_cycles(3, &[&[1, 3, 2]]))));
        assert!(!a3.contains(&Element::Perm(perm_from_cycles(3, &[&[1, 2]]))));
        assert!(SubgroupHandle::trivial(&g).is_trivial());
        assert_eq!(SubgroupHandle::full(&g).order(), IndexValue::Finite(6));
    }

    #[test]
    fn relative_index_in_the_affine_backend() {
        let g = dinf();
        // Index 2: full image, doubled lattice.
        let h = SubgroupHandle::generate(&g, &[translation(2), reflection_at(0)]).unwrap();
        let full = SubgroupHandle::full(&g);
        assert_eq!(full.relative_index(&h).unwrap(), IndexValue::Finite(2));
        // A finite subgroup has infinite index.
        let flip = SubgroupHandle::generate(&g, &[reflection_at(1)]).unwrap();
        assert_eq!(flip.order(), IndexValue::Finite(2));
        assert_eq!(full.relative_index(&flip).unwrap(), IndexValue::Infinite);
        // The index is relative: [flip : flip ∩ h] = 2 since the subgroups
        // intersect trivially.
        assert_eq!(flip.relative_index(&h).unwrap(), IndexValue::Finite(2));
    }

    #[test]
    fn intersections_match_hand_computation() {
        let g = dinf();
        let translations = SubgroupHandle::generate(&g, &[translation(1)]).unwrap();
        let h = SubgroupHandle::generate(&g, &[translation(2), reflection_at(0)]).unwrap();
        let i = translations.intersect(&h).unwrap();
        assert!(i.contains(&translation(2)));
        assert!(!i.contains(&translation(1)));
        assert!(!i.contains(&reflection_at(0)));

        let s = s3();
        let a3 = SubgroupHandle::generate(&s, &[Element::Perm(perm_from_cycles(3, &[&[1, 2, 3]]))])
            .unwrap();
        let swap = SubgroupHandle::generate(&s, &[Element::Perm(perm_from_cycles(3, &[&[1, 2]]))])
            .unwrap();
        assert!(a3.intersect(&swap).unwrap().is_trivial());
    }

    #[test]
    fn normality_checks() {
        let g = dinf();
        let translations = SubgroupHandle::generate(&g, &[translation(1)]).unwrap();
        assert!(translations.is_normal_in_group());
        let flip = SubgroupHandle::generate(&g, &[reflection_at(0)]).unwrap();
        assert!(!flip.is_normal_in_group());

        let s = s3();
        let a3 = SubgroupHandle::generate(&s, &[Element::Perm(perm_from_cycles(3, &[&[1, 2, 3]]))])
            .unwrap();
        assert!(a3.is_normal_in_group());
        let swap = SubgroupHandle::generate(&s, &[Element::Perm(perm_from_cycles(3, &[&[1, 2]]))])
            .unwrap();
        assert!(!swap.is_normal_in_group());
        assert!(swap.normalizes(&a3).unwrap());
    }

    #[test]
    fn derived_subgroups_of_small_groups() {
        let s = s3();
        let full = SubgroupHandle::full(&s);
        let derived = full.derived_subgroup().unwrap();
        assert_eq!(derived.order(), IndexValue::Finite(3));
        assert!(derived.contains(&Element::Perm(perm_from_cycles(3, &[&[1, 2, 3]]))));

        let d = d8();
        let derived_d8 = SubgroupHandle::full(&d).derived_subgroup().unwrap();
        assert_eq!(derived_d8.order(), IndexValue::Finite(2));
        assert!(derived_d8.contains(&Element::Perm(perm_from_cycles(4, &[&[1, 3], &[2, 4]]))));
    }

    #[test]
    fn centers_and_upper_central_series() {
        let d = d8();
        let full = SubgroupHandle::full(&d);
        let center = full.center_mod(&SubgroupHandle::trivial(&d)).unwrap();
        assert_eq!(center.order(), IndexValue::Finite(2));
        assert!(center.contains(&Element::Perm(perm_from_cycles(4, &[&[1, 3], &[2, 4]]))));

        let (series, class) = full.upper_central_series().unwrap();
        assert_eq!(class, Some(2));
        assert_eq!(series.len(), 3);
        assert!(series[0].is_trivial());
        assert!(series[1].same_as(&center));
        assert!(series[2].same_as(&full));

        // S3 has trivial center: the series stalls immediately.
        let s = s3();
        let (series_s3, class_s3) = SubgroupHandle::full(&s).upper_central_series().unwrap();
        assert_eq!(class_s3, None);
        assert_eq!(series_s3.len(), 1);
    }

    #[test]
    fn center_modulo_a_subgroup() {
        let g = dinf();
        let full = SubgroupHandle::full(&g);
        let translations = SubgroupHandle::generate(&g, &[translation(1)]).unwrap();
        // The quotient by the translations has order 2, so everything is
        // central modulo them.
        let z = full.center_mod(&translations).unwrap();
        assert!(z.same_as(&full));
        // The plain center is trivial.
        let plain = full.center_mod(&SubgroupHandle::trivial(&g)).unwrap();
        assert!(plain.is_trivial());
    }

    #[test]
    fn transversals_enumerate_cosets_exactly_once() {
        let g = dinf();
        let full = SubgroupHandle::full(&g);
        let h = SubgroupHandle::generate(&g, &[translation(2), reflection_at(0)]).unwrap();
        let reps = full.transversal_over(&h).unwrap();
        assert_eq!(reps.len(), 2);
        assert_eq!(reps[0], full.group().identity());

        let s = s3();
        let a3 = SubgroupHandle::generate(&s, &[Element::Perm(perm_from_cycles(3, &[&[1, 2, 3]]))])
            .unwrap();
        let reps_s3 = SubgroupHandle::full(&s).transversal_over(&a3).unwrap();
        assert_eq!(reps_s3.len(), 2);

        // Infinite index is a precondition failure.
        let flip = SubgroupHandle::generate(&g, &[reflection_at(0)]).unwrap();
        assert!(matches!(
            full.transversal_over(&flip),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn centralizers_modulo_require_normalization() {
        let s = s3();
        let full = SubgroupHandle::full(&s);
        let swap = SubgroupHandle::generate(&s, &[Element::Perm(perm_from_cycles(3, &[&[1, 2]]))])
            .unwrap();
        let err = full
            .centralizer_mod(&Element::Perm(perm_from_cycles(3, &[&[1, 2, 3]])), &swap)
            .unwrap_err();
        assert!(matches!(err, Error::NotNormalized { .. }));
        assert!(Modulus::new(swap, &[&full]).is_err());
    }

    #[test]
    fn class_sizes_modulo_subgroups() {
        let s = s3();
        let trivial = SubgroupHandle::trivial(&s);
        let rot = Element::Perm(perm_from_cycles(3, &[&[1, 2, 3]]));
        assert_eq!(
            class_size_mod(&s, &rot, &trivial).unwrap(),
            IndexValue::Finite(2)
        );
        // Modulo A3 the quotient is abelian, so classes are singletons.
        let a3 = SubgroupHandle::generate(&s, std::slice::from_ref(&rot)).unwrap();
        assert_eq!(class_size_mod(&s, &rot, &a3).unwrap(), IndexValue::Finite(1));

        // Translations in the infinite dihedral group have class size 2
        // (conjugation at most negates them); reflections have infinite
        // classes.
        let g = dinf();
        let trivial_g = SubgroupHandle::trivial(&g);
        assert_eq!(
            class_size_mod(&g, &translation(1), &trivial_g).unwrap(),
            IndexValue::Finite(2)
        );
        assert_eq!(
            class_size_mod(&g, &reflection_at(0), &trivial_g).unwrap(),
            IndexValue::Infinite
        );
    }

    #[test]
    fn normal_closure_grows_until_invariant() {
        let g = dinf();
        // The closure of a single translation under the full group is the
        // whole translation subgroup (conjugation only negates), while the
        // closure of ⟨(1, r)⟩ picks up the translation by 2.
        let t2 = SubgroupHandle::generate(&g, &[translation(2)]).unwrap();
        let full = SubgroupHandle::full(&g);
        let nc = t2.normal_closure(&full).unwrap();
        assert!(nc.same_as(&t2));

        let refl = SubgroupHandle::generate(&g, &[reflection_at(1)]).unwrap();
        let nc_refl = refl.normal_closure(&full).unwrap();
        assert!(nc_refl.contains(&translation(2)));
        assert!(!nc_refl.contains(&translation(1)));
        assert_eq!(full.relative_index(&nc_refl).unwrap(), IndexValue::Finite(2));
    }

    #[test]
    fn join_and_equality() {
        let g = dinf();
        let t = SubgroupHandle::generate(&g, &[translation(1)]).unwrap();
        let r = SubgroupHandle::generate(&g, &[reflection_at(0)]).unwrap();
        let joined = t.join(&r).unwrap();
        assert!(joined.same_as(&SubgroupHandle::full(&g)));
        let again = SubgroupHandle::generate(&g, &[translation(1), reflection_at(0)]).unwrap();
        assert!(joined.same_as(&again));
    }

    #[test]
    fn derived_series_of_s3_is_solvable() {
        let s = s3();
        let series = SubgroupHandle::full(&s).derived_series().unwrap();
        assert_eq!(series.len(), 3);
        assert_eq!(series[1].order(), IndexValue::Finite(3));
        assert!(series[2].is_trivial());
    }
}
