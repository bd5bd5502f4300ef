//! Affine group backend: `G = Z^rank ⋊ F` for a finite permutation group `F`
//! acting by unimodular integer matrices.
//!
//! Elements are pairs `(v, f)` with `v ∈ Z^rank` and `f ∈ F`, multiplying by
//! `(w, g)·(v, f) = (w + ρ(g)v, g·f)`. Subgroups are carried exactly as
//!
//! * the image `P ≤ F` of the subgroup in the finite part,
//! * the translation lattice `L = S ∩ Z^rank` in canonical Hermite form, and
//! * a coset section `p ↦ v_p` with `(v_p, p) ∈ S`, reduced modulo `L`,
//!
//! which determines membership: `(v, f) ∈ S` iff `f ∈ P` and `v − v_f ∈ L`.
//! Because any two lifts of the same `p` differ by an element of `L`, the
//! reduced section is canonical, so equal subgroups carry identical data.
//!
//! Subgroups defined by congruence conditions (centralizers modulo a
//! subgroup, normalizers, FC-centralizers) are assembled coset by coset: the
//! translation conditions are affine integer congruences, solved exactly on
//! each coset of the ambient subgroup's lattice. The assembled data is then
//! verified to multiply consistently, so a wrong assembly can never escape as
//! a silent wrong answer.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, VecDeque};

use crate::error::Error;
use crate::finite::{build_bsgs, Bsgs, FinitePermDescriptor, ENUMERATION_LIMIT};
use crate::index::IndexValue;
use crate::lattice::{solve_congruence_on_coset, Congruence, Lattice};
use crate::linalg::{det, mat_vec, unit_vec, vec_add, vec_is_zero, vec_neg, vec_sub, IVec, Int, Mat};
use crate::perm::Perm;
use crate::Result;

/// A translation-plus-finite-part pair. The finite part is a permutation of
/// the finite part's degree (not of the affine rank).
pub type AffinePair = (IVec, Perm);

/// Defining data of an affine group: the rank, the finite part, and one
/// action matrix per finite-part generator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineDescriptor {
    pub rank: usize,
    pub finite_part: FinitePermDescriptor,
    pub action: Vec<Mat>,
}

/// A validated affine group: the finite part is fully enumerated and the
/// action is extended to a verified homomorphism `ρ: F → GL(rank, Z)`.
#[derive(Debug)]
pub struct AffineGroup {
    pub rank: usize,
    pub finite_descriptor: FinitePermDescriptor,
    pub finite_bsgs: Bsgs,
    /// Sorted full enumeration of `F`.
    pub finite_elements: Vec<Perm>,
    rho: BTreeMap<Perm, Mat>,
}

impl AffineGroup {
    /// Validates a descriptor: the action matrices must be square of the
    /// right size with determinant ±1, and extending them along products must
    /// give a well-defined homomorphism on all of `F` (checked on a full
    /// enumeration; any inconsistent product is reported).
    pub fn validate(desc: AffineDescriptor) -> Result<AffineGroup> {
        let rank = desc.rank;
        if rank == 0 {
            return Err(Error::InvalidDescriptor(
                "affine rank must be at least 1; use the finite backend for finite groups".into(),
            ));
        }
        if desc.action.len() != desc.finite_part.generators.len() {
            return Err(Error::InvalidDescriptor(format!(
                "{} finite-part generators but {} action matrices",
                desc.finite_part.generators.len(),
                desc.action.len()
            )));
        }
        for m in &desc.action {
            if m.len() != rank || m.iter().any(|row| row.len() != rank) {
                return Err(Error::InvalidDescriptor(format!(
                    "action matrices must be {rank}x{rank}"
                )));
            }
            if det(m).abs() != 1 {
                return Err(Error::InvalidDescriptor(format!(
                    "action matrix {m:?} is not invertible over the integers"
                )));
            }
        }
        let finite_bsgs = build_bsgs(&desc.finite_part);
        let order = finite_bsgs.order();
        if order > ENUMERATION_LIMIT {
            return Err(Error::TooLarge(format!(
                "affine finite part has order {order}, beyond the enumeration limit {ENUMERATION_LIMIT}"
            )));
        }
        let mut finite_elements = finite_bsgs.enumerate();
        finite_elements.sort();
        finite_elements.dedup();

        // Extend ρ multiplicatively from the generators over a breadth-first
        // closure of F, checking every product against any earlier
        // assignment. Consistency on all (element, generator) products pins
        // down multiplicativity on all pairs.
        let degree = desc.finite_part.degree;
        let mut rho: BTreeMap<Perm, Mat> = BTreeMap::new();
        rho.insert(Perm::identity(degree), crate::linalg::mat_identity(rank));
        let mut queue = VecDeque::from([Perm::identity(degree)]);
        while let Some(f) = queue.pop_front() {
            let mf = rho[&f].clone();
            for (s, ms) in desc.finite_part.generators.iter().zip(&desc.action) {
                let h = f.compose(s);
                let cand = crate::linalg::mat_mul(&mf, ms);
                match rho.get(&h) {
                    Some(existing) => {
                        if *existing != cand {
                            return Err(Error::InvalidDescriptor(format!(
                                "action is not a homomorphism: matrices for {h} disagree along different factorizations"
                            )));
                        }
                    }
                    None => {
                        rho.insert(h.clone(), cand);
                        queue.push_back(h);
                    }
                }
            }
        }
        if rho.len() != finite_elements.len() {
            return Err(Error::InvalidDescriptor(
                "action closure did not reach all of the finite part".into(),
            ));
        }
        Ok(AffineGroup {
            rank,
            finite_descriptor: desc.finite_part,
            finite_bsgs,
            finite_elements,
            rho,
        })
    }

    pub fn rho(&self, f: &Perm) -> &Mat {
        self.rho.get(f).expect("finite part member has an action matrix")
    }

    pub fn finite_contains(&self, f: &Perm) -> bool {
        f.degree() == self.finite_descriptor.degree && self.finite_elements.binary_search(f).is_ok()
    }

    pub fn identity(&self) -> AffinePair {
        (
            vec![0; self.rank],
            Perm::identity(self.finite_descriptor.degree),
        )
    }

    /// `(w, g)·(v, f) = (w + ρ(g)v, g·f)`.
    pub fn mul(&self, a: &AffinePair, b: &AffinePair) -> AffinePair {
        let v = vec_add(&a.0, &mat_vec(self.rho(&a.1), &b.0));
        (v, a.1.compose(&b.1))
    }

    /// `(v, f)⁻¹ = (−ρ(f⁻¹)v, f⁻¹)`.
    pub fn inv(&self, a: &AffinePair) -> AffinePair {
        let f_inv = a.1.inverse();
        (vec_neg(&mat_vec(self.rho(&f_inv), &a.0)), f_inv)
    }

    /// Conjugate `a^b = b⁻¹·a·b`.
    pub fn conj(&self, a: &AffinePair, b: &AffinePair) -> AffinePair {
        self.mul(&self.mul(&self.inv(b), a), b)
    }

    /// Commutator `[a, b] = a⁻¹·b⁻¹·a·b`.
    pub fn comm(&self, a: &AffinePair, b: &AffinePair) -> AffinePair {
        self.mul(&self.mul(&self.inv(a), &self.inv(b)), &self.mul(a, b))
    }
}

/// Canonical subgroup data: finite image (sorted), translation lattice in
/// Hermite form, and the reduced coset section.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineSubgroup {
    pub image: Vec<Perm>,
    pub lattice: Lattice,
    pub section: BTreeMap<Perm, IVec>,
}

impl AffineSubgroup {
    pub fn trivial(group: &AffineGroup) -> AffineSubgroup {
        let e = Perm::identity(group.finite_descriptor.degree);
        AffineSubgroup {
            image: vec![e.clone()],
            lattice: Lattice::zero(group.rank),
            section: BTreeMap::from([(e, vec![0; group.rank])]),
        }
    }

    pub fn full(group: &AffineGroup) -> AffineSubgroup {
        let image = group.finite_elements.clone();
        let section = image
            .iter()
            .map(|f| (f.clone(), vec![0; group.rank]))
            .collect();
        AffineSubgroup {
            image,
            lattice: Lattice::standard(group.rank),
            section,
        }
    }

    pub fn image_contains(&self, f: &Perm) -> bool {
        self.image.binary_search(f).is_ok()
    }

    pub fn contains(&self, pair: &AffinePair) -> bool {
        self.contains_parts(&pair.0, &pair.1)
    }

    pub fn contains_parts(&self, v: &[Int], f: &Perm) -> bool {
        match self.section.get(f) {
            Some(s) => self.lattice.contains(&vec_sub(v, s)),
            None => false,
        }
    }

    /// Order of the subgroup: finite exactly when the translation lattice is
    /// zero, in which case every image coset holds a single element.
    pub fn order(&self) -> IndexValue {
        if self.lattice.rank() == 0 {
            IndexValue::finite(self.image.len() as u64)
        } else {
            IndexValue::Infinite
        }
    }

    /// A canonical generating set: every section element plus the lattice
    /// basis as pure translations. Regenerating from these reproduces the
    /// same canonical data.
    pub fn canonical_generators(&self, group: &AffineGroup) -> Vec<AffinePair> {
        let mut gens: Vec<AffinePair> = Vec::new();
        let e = Perm::identity(group.finite_descriptor.degree);
        for (p, v) in &self.section {
            if *p != e || !vec_is_zero(v) {
                gens.push((v.clone(), p.clone()));
            }
        }
        for b in self.lattice.basis() {
            gens.push((b.clone(), e.clone()));
        }
        gens
    }

    /// All elements, for finite subgroups only.
    pub fn enumerate(&self) -> Result<Vec<AffinePair>> {
        if self.lattice.rank() != 0 {
            return Err(Error::TooLarge(
                "cannot enumerate an infinite affine subgroup".into(),
            ));
        }
        Ok(self
            .section
            .iter()
            .map(|(p, v)| (v.clone(), p.clone()))
            .collect())
    }

    /// Internal consistency: the section must multiply into the lattice and
    /// the image must be closed. Cheap (quadratic in the image size); used
    /// after every nontrivial assembly.
    pub fn verify(&self, group: &AffineGroup) -> Result<()> {
        let e = Perm::identity(group.finite_descriptor.degree);
        let Some(ve) = self.section.get(&e) else {
            return Err(Error::InternalVerification(
                "subgroup section lacks the identity coset".into(),
            ));
        };
        if !vec_is_zero(ve) {
            return Err(Error::InternalVerification(
                "identity coset section is not reduced to zero".into(),
            ));
        }
        for p in &self.image {
            // The lattice must be invariant under every image element.
            let mapped = self.lattice.map(group.rho(p));
            if mapped != self.lattice {
                return Err(Error::InternalVerification(format!(
                    "translation lattice is not invariant under image element {p}"
                )));
            }
            let vp = &self.section[p];
            let p_inv_elt = group.inv(&(vp.clone(), p.clone()));
            if !self.contains(&p_inv_elt) {
                return Err(Error::InternalVerification(format!(
                    "section is not closed under inversion at {p}"
                )));
            }
            for q in &self.image {
                let prod = group.mul(&(vp.clone(), p.clone()), &(self.section[q].clone(), q.clone()));
                if !self.contains(&prod) {
                    return Err(Error::InternalVerification(format!(
                        "section does not multiply into the subgroup at ({p})·({q})"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Closure of a generating set into canonical subgroup data.
///
/// The image and a transversal of lifts are found by a breadth-first walk;
/// the translation lattice is generated by the Schreier kernel elements
/// `t_p·s·t_{p·s̄}⁻¹`, which generate the kernel of the projection onto the
/// image; sections are the transversal lifts reduced modulo the lattice.
pub fn schreier_closure(group: &AffineGroup, gens: &[AffinePair]) -> Result<AffineSubgroup> {
    for (v, f) in gens {
        if v.len() != group.rank || !group.finite_contains(f) {
            return Err(Error::NotAMember {
                element: format!("({v:?}, {f})"),
            });
        }
    }
    let mut sym: Vec<AffinePair> = Vec::new();
    for g in gens {
        let gi = group.inv(g);
        if !sym.contains(g) {
            sym.push(g.clone());
        }
        if !sym.contains(&gi) {
            sym.push(gi);
        }
    }
    let e = Perm::identity(group.finite_descriptor.degree);
    let mut lifts: BTreeMap<Perm, IVec> = BTreeMap::from([(e.clone(), vec![0; group.rank])]);
    let mut queue = VecDeque::from([e]);
    while let Some(p) = queue.pop_front() {
        let rep = (lifts[&p].clone(), p);
        for s in &sym {
            let prod = group.mul(&rep, s);
            if let Entry::Vacant(slot) = lifts.entry(prod.1) {
                queue.push_back(slot.key().clone());
                slot.insert(prod.0);
            }
        }
    }
    let mut kernel_gens: Vec<IVec> = Vec::new();
    for (p, w) in &lifts {
        let rep = (w.clone(), p.clone());
        for s in &sym {
            let prod = group.mul(&rep, s);
            let lift2 = (lifts[&prod.1].clone(), prod.1.clone());
            let k = group.mul(&prod, &group.inv(&lift2));
            debug_assert!(k.1.is_identity(), "Schreier element must be a translation");
            if !vec_is_zero(&k.0) {
                kernel_gens.push(k.0);
            }
        }
    }
    let lattice = Lattice::from_generators(group.rank, &kernel_gens);
    let image: Vec<Perm> = lifts.keys().cloned().collect();
    let section: BTreeMap<Perm, IVec> = lifts
        .into_iter()
        .map(|(p, w)| {
            let reduced = lattice.reduce(&w);
            (p, reduced)
        })
        .collect();
    let subgroup = AffineSubgroup {
        image,
        lattice,
        section,
    };
    debug_assert!(subgroup.verify(group).is_ok());
    Ok(subgroup)
}

/// The translation part of `[(w, f), k]` as an affine function of `w`:
/// returns `(m, c)` with `translation = m·w + c`. Computed by probing the
/// exact arithmetic at `w = 0` and at the unit vectors, which is valid
/// because the commutator's translation part is affine in `w` for fixed
/// finite part.
pub fn commutator_translation_map(group: &AffineGroup, f: &Perm, k: &AffinePair) -> (Mat, IVec) {
    let n = group.rank;
    let at = |w: IVec| -> IVec { group.comm(&(w, f.clone()), k).0 };
    let c = at(vec![0; n]);
    let cols: Vec<IVec> = (0..n).map(|j| vec_sub(&at(unit_vec(n, j)), &c)).collect();
    // cols[j] is the j-th column; transpose into row-major form.
    let m: Mat = (0..n).map(|i| (0..n).map(|j| cols[j][i]).collect()).collect();
    debug_assert_eq!(
        at(vec![1; n]),
        vec_add(&mat_vec(&m, &vec![1; n]), &c),
        "commutator translation must be affine"
    );
    (m, c)
}

/// The translation part of `(u, g)⁻¹·n·(u, g)` as an affine function of `u`,
/// for a fixed element `n` and fixed finite part `g`.
pub fn conjugation_translation_map(group: &AffineGroup, g: &Perm, n: &AffinePair) -> (Mat, IVec) {
    let r = group.rank;
    let at = |u: IVec| -> IVec { group.conj(n, &(u, g.clone())).0 };
    let c = at(vec![0; r]);
    let cols: Vec<IVec> = (0..r).map(|j| vec_sub(&at(unit_vec(r, j)), &c)).collect();
    let m: Mat = (0..r).map(|i| (0..r).map(|j| cols[j][i]).collect()).collect();
    debug_assert_eq!(
        at(vec![1; r]),
        vec_add(&mat_vec(&m, &vec![1; r]), &c),
        "conjugation translation must be affine"
    );
    (m, c)
}

/// Assembles the subgroup `{(u, g) ∈ ambient : condition}` coset by coset.
///
/// `condition(g)` returns `None` when no element with finite part `g`
/// qualifies, or the affine congruence that `u` must satisfy. The qualifying
/// set must mathematically be a subgroup of `ambient`; the assembled data is
/// verified to be closed, and any inconsistency aborts with an internal
/// verification error.
pub fn assemble_subgroup(
    group: &AffineGroup,
    ambient: &AffineSubgroup,
    mut condition: impl FnMut(&Perm) -> Option<Congruence>,
) -> Result<AffineSubgroup> {
    let e = Perm::identity(group.finite_descriptor.degree);
    let e_cong = condition(&e).ok_or_else(|| {
        Error::InternalVerification("identity coset excluded from a subgroup assembly".into())
    })?;
    // Sanity: the identity itself must satisfy the identity-coset congruence.
    let zero = vec![0; group.rank];
    if !e_cong
        .target
        .contains(&vec_sub(&mat_vec(&e_cong.mat, &zero), &e_cong.rhs))
    {
        return Err(Error::InternalVerification(
            "identity fails its own coset condition in a subgroup assembly".into(),
        ));
    }
    // The translation lattice of the result: solutions within the ambient
    // lattice of the identity-coset congruence (homogeneous by the check
    // above, since the solution set is a group).
    let lattice = ambient.lattice.preimage_under(&e_cong.mat, &e_cong.target);

    let mut image: Vec<Perm> = Vec::new();
    let mut section: BTreeMap<Perm, IVec> = BTreeMap::new();
    for g in &ambient.image {
        let Some(cong) = condition(g) else { continue };
        let offset = &ambient.section[g];
        let Some(sol) = solve_congruence_on_coset(&ambient.lattice, offset, &cong) else {
            continue;
        };
        image.push(g.clone());
        section.insert(g.clone(), lattice.reduce(&sol.particular));
    }
    let result = AffineSubgroup {
        image,
        lattice,
        section,
    };
    result.verify(group).map_err(|_| {
        Error::InternalVerification(
            "assembled coset data is not a subgroup; the membership condition was not group-closed"
                .into(),
        )
    })?;
    Ok(result)
}

/// Exact centralizer of `k` in `sub` modulo `n`: the subgroup
/// `{h ∈ sub : [h, k] ∈ n}`. Preconditions (normality of `n`) are the
/// caller's responsibility; the translation conditions here are exact affine
/// congruences per finite-part coset.
pub fn centralizer_mod(
    group: &AffineGroup,
    sub: &AffineSubgroup,
    k: &AffinePair,
    n: &AffineSubgroup,
) -> Result<AffineSubgroup> {
    assemble_subgroup(group, sub, |f| {
        let comm_finite = f.inverse().compose(&k.1.inverse()).compose(f).compose(&k.1);
        if !n.image_contains(&comm_finite) {
            return None;
        }
        let (m, c) = commutator_translation_map(group, f, k);
        let rhs = vec_sub(&n.section[&comm_finite], &c);
        Some(Congruence::new(m, rhs, n.lattice.clone()))
    })
}

/// Lattice of translations centralizing `k` modulo `n` inside `sub`'s
/// lattice: `{w : [(w, e), k] ∈ n}`. This depends only on the finite part of
/// `k` and controls whether centralizer indices are finite.
pub fn centralizing_translation_lattice(
    group: &AffineGroup,
    sub: &AffineSubgroup,
    k_finite: &Perm,
    n: &AffineSubgroup,
) -> Lattice {
    let e = Perm::identity(group.finite_descriptor.degree);
    let (m, c) = commutator_translation_map(group, &e, &(vec![0; group.rank], k_finite.clone()));
    debug_assert!(vec_is_zero(&c));
    sub.lattice.preimage_under(&m, &n.lattice)
}
