//! Structure results derived from bounded FC data, each computed
//! constructively and re-verified step by step.
//!
//! The centerpiece is [`nilpotent_tower`]: from a validated bounded
//! FC-nilpotent chain of length `n` it produces a finite-index subgroup
//! that is nilpotent of class at most `2n`, together with the full trace of
//! intermediate subgroups and the verification of every claimed inclusion,
//! normality, and centrality along the way. [`witness_from_nilpotent`] goes
//! the other way, building a bounded chain from a nilpotent normal subgroup
//! of finite index. The remaining entry points package smaller structure
//! facts: [`neumann_decompose`] (bounded conjugate counts force a finite
//! derived subgroup and a finite-index subgroup of class at most two),
//! [`symmetry_check`] (the FC-centralizer relation between two subgroups is
//! symmetric up to commensurability), [`commutator_finiteness`],
//! [`solvable_resolve`], and [`coset_cover_witness`] (finitely many cosets
//! of infinite-index subgroups never cover the group).

use std::collections::BTreeSet;

use crate::error::Error;
use crate::fc::{
    check_bounded_fc_nilpotent_chain, commensurable, fc_bound, fc_centralizer_subgroup,
    BoundCertificate, Boundedness, ValidatedFcChain,
};
use crate::group::{Element, GroupRef};
use crate::handle::SubgroupHandle;
use crate::index::IndexValue;
use crate::Result;

/// Default ball radius for [`coset_cover_witness`] searches.
pub const COSET_COVER_RADIUS: usize = 20;

fn step_check(step: &str, check: &str, ok: bool) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::StepVerificationFailed {
            step: step.to_string(),
            check: check.to_string(),
        })
    }
}

fn expect_finite(value: IndexValue, step: &str, check: &str) -> Result<u64> {
    value.as_finite().ok_or_else(|| Error::StepVerificationFailed {
        step: step.to_string(),
        check: format!("{check} (the index is infinite)"),
    })
}

/// One step of the tower construction, retaining every intermediate
/// subgroup so the result can be audited.
#[derive(Debug, Clone)]
pub struct TowerStep {
    /// 1-based transition index into the chain.
    pub level: usize,
    /// The modulus `M` carried in from the previous step (the top of its
    /// tower).
    pub modulus: SubgroupHandle,
    /// `B`: the part of this chain level visible inside the current
    /// finite-index subgroup, enlarged by the modulus.
    pub base: SubgroupHandle,
    /// `A`: the elements of the current finite-index subgroup with finite
    /// centralizer index in `B` modulo `M`.
    pub fc_subgroup: SubgroupHandle,
    /// `[F : A]`, verified finite.
    pub fc_index: u64,
    /// `B* = B ∩ A`.
    pub refined_base: SubgroupHandle,
    /// `X = [A, B*]·M`, verified to contain `M` with finite index.
    pub commutator_preimage: SubgroupHandle,
    /// `[X : M]`, verified finite.
    pub commutator_index: u64,
    /// Coset representatives of `X` over `M`.
    pub x_coset_reps: Vec<Element>,
    /// The new finite-index subgroup `F`: everything in `A` centralizing
    /// all of `X` modulo `M`.
    pub stabilizer: SubgroupHandle,
    /// `[G : F]`, verified finite.
    pub stabilizer_index: u64,
    /// The central tower `H_0 ⊆ H_1 ⊆ … ⊆ H_{2·level}` inside `F`: each
    /// factor is verified central in `F` modulo the previous entry.
    pub tower: Vec<SubgroupHandle>,
}

/// The full trace of the tower construction.
#[derive(Debug, Clone)]
pub struct TowerTrace {
    pub group: GroupRef,
    pub steps: Vec<TowerStep>,
    /// The final finite-index subgroup.
    pub stabilizer: SubgroupHandle,
    /// `[G : stabilizer]`.
    pub stabilizer_index: u64,
    /// The guaranteed class bound: twice the chain length.
    pub class_bound: usize,
    /// The exact nilpotency class of the stabilizer, computed from its
    /// upper central series (at most `class_bound`).
    pub nilpotency_class: usize,
}

/// Verifies that `tower` is a central series inside `f`: ascending, every
/// entry normal in `f`, and each factor central in `f` modulo the previous
/// entry. Centrality is checked on generators, which suffices once
/// normality is established: the elements centralizing a fixed generator
/// modulo a normal subgroup form a subgroup, so containing every generator
/// of `f` means containing all of `f`.
fn verify_central_tower(step: &str, f: &SubgroupHandle, tower: &[SubgroupHandle]) -> Result<()> {
    let group = f.group().clone();
    for (j, h) in tower.iter().enumerate() {
        if j + 1 < tower.len() {
            step_check(step, &format!("tower entry {j} is contained in entry {}", j + 1), {
                tower[j + 1].contains_subgroup(h)
            })?;
        }
        step_check(step, &format!("tower entry {j} is normal in the stabilizer"), {
            f.normalizes(h)?
        })?;
    }
    for j in 0..tower.len() - 1 {
        for x in tower[j + 1].generators() {
            for y in f.generators() {
                step_check(
                    step,
                    &format!("tower factor {} is central modulo entry {j}", j + 1),
                    tower[j].contains(&group.comm(x, y)),
                )?;
            }
        }
    }
    Ok(())
}

/// Builds a finite-index subgroup of nilpotency class at most `2n` from a
/// validated bounded FC-nilpotent chain of length `n`, recording every
/// intermediate object.
///
/// The construction descends through the chain keeping a finite-index
/// subgroup `F` and a central tower inside it. At each chain level it forms
/// the visible part `B` of the level, the subgroup `A` of elements with
/// finite centralizer index in `B` (finite index in `F` because the chain
/// is bounded), and the commutator subgroup `X = [A, B∩A]·M` — finite over
/// the modulus `M`, so centralizing its finitely many cosets cuts `F` down
/// by only a finite index while extending the central tower by two levels.
/// Every finiteness, normality, and centrality claim is re-checked; a
/// failure aborts with the failing step and check named.
pub fn nilpotent_tower(chain: &ValidatedFcChain) -> Result<TowerTrace> {
    let group = chain.group.clone();
    let full = SubgroupHandle::full(&group);
    let mut f = full.clone();
    let mut tower = vec![SubgroupHandle::trivial(&group)];
    let mut steps = Vec::new();
    for i in 1..chain.levels.len() {
        let step_name = format!("tower step {i}");
        let modulus = tower.last().expect("tower is never empty").clone();
        let base = chain.levels[i].intersect(&f)?.join(&modulus)?;
        // The chain promises that this level is FC over the previous one;
        // check that it survives restriction to the current subgroups.
        let base_fc = fc_centralizer_subgroup(&base, &f, &modulus)?;
        step_check(
            &step_name,
            "every element of the level has finite centralizer index modulo the modulus",
            base_fc.same_as(&base),
        )?;
        let fc_subgroup = fc_centralizer_subgroup(&f, &base, &modulus)?;
        let commensurability = commensurable(&f, &fc_subgroup)?;
        step_check(
            &step_name,
            "elements with finite centralizer index form a finite-index subgroup",
            commensurability.commensurable,
        )?;
        let fc_index = expect_finite(
            commensurability.index_in_first,
            &step_name,
            "index of the FC part",
        )?;
        let refined_base = base.intersect(&fc_subgroup)?;
        let commutator_preimage = fc_subgroup
            .commutator_with(&refined_base)?
            .join(&modulus)?;
        let commutator_index = expect_finite(
            commutator_preimage.relative_index(&modulus)?,
            &step_name,
            "the commutator subgroup is finite over the modulus",
        )?;
        let x_coset_reps = commutator_preimage.transversal_over(&modulus)?;
        let mut stabilizer = fc_subgroup.clone();
        for x in &x_coset_reps {
            stabilizer = stabilizer.intersect(&fc_subgroup.centralizer_mod(x, &modulus)?)?;
        }
        let stabilizer_index = expect_finite(
            full.relative_index(&stabilizer)?,
            &step_name,
            "the stabilizer has finite index in the group",
        )?;
        // Extend the tower: two new levels on top, everything below cut
        // down to the new stabilizer.
        let mut new_tower: Vec<SubgroupHandle> = Vec::with_capacity(tower.len() + 2);
        for h in &tower {
            new_tower.push(h.intersect(&stabilizer)?);
        }
        new_tower.push(commutator_preimage.intersect(&stabilizer)?);
        new_tower.push(refined_base.intersect(&stabilizer)?);
        verify_central_tower(&step_name, &stabilizer, &new_tower)?;
        step_check(
            &step_name,
            "the stabilizer meets the chain level inside the tower top",
            new_tower
                .last()
                .expect("nonempty")
                .contains_subgroup(&stabilizer.intersect(&chain.levels[i])?),
        )?;
        let odd = &new_tower[new_tower.len() - 2];
        let even_below = &new_tower[new_tower.len() - 3];
        expect_finite(
            odd.relative_index(even_below)?,
            &step_name,
            "the odd tower factor is finite",
        )?;
        steps.push(TowerStep {
            level: i,
            modulus,
            base,
            fc_subgroup,
            fc_index,
            refined_base,
            commutator_preimage,
            commutator_index,
            x_coset_reps,
            stabilizer: stabilizer.clone(),
            stabilizer_index,
            tower: new_tower.clone(),
        });
        f = stabilizer;
        tower = new_tower;
    }
    let stabilizer_index = expect_finite(
        full.relative_index(&f)?,
        "tower result",
        "the final subgroup has finite index",
    )?;
    let class_bound = 2 * (chain.levels.len() - 1);
    let (_, class) = f.upper_central_series()?;
    let nilpotency_class = class.ok_or_else(|| Error::StepVerificationFailed {
        step: "tower result".into(),
        check: "the final subgroup is nilpotent".into(),
    })?;
    step_check(
        "tower result",
        "the nilpotency class is within the guaranteed bound",
        nilpotency_class <= class_bound,
    )?;
    Ok(TowerTrace {
        group,
        steps,
        stabilizer: f,
        stabilizer_index,
        class_bound,
        nilpotency_class,
    })
}

/// A bounded FC-nilpotent chain produced from a nilpotent normal subgroup
/// of finite index, with the uniform bound it satisfies.
#[derive(Debug, Clone)]
pub struct NilpotentWitness {
    pub chain: ValidatedFcChain,
    /// `[G : N]` for the nilpotent kernel `N`.
    pub kernel_index: u64,
    /// The nilpotency class of the kernel.
    pub kernel_class: usize,
}

/// Builds and validates a bounded FC-nilpotent chain from a nilpotent
/// normal subgroup `n` of finite index: the upper central series of `n`
/// followed by the whole group. Every per-transition bound is verified to
/// be at most `[G : n]` — each chain level centralizes `n` modulo the
/// previous one, so centralizer indices never exceed the kernel index.
pub fn witness_from_nilpotent(group: &GroupRef, n: &SubgroupHandle) -> Result<NilpotentWitness> {
    if !n.group().same_group(group) {
        return Err(Error::GroupMismatch(
            "the kernel must be a subgroup of the given group".into(),
        ));
    }
    let full = SubgroupHandle::full(group);
    if !full.normalizes(n)? {
        return Err(Error::HypothesisFailed {
            hypothesis: "the kernel is a normal subgroup".into(),
            witness: format!("{n:?} is not normal in the group"),
        });
    }
    let kernel_index = full.relative_index(n)?.as_finite().ok_or_else(|| {
        Error::HypothesisFailed {
            hypothesis: "the kernel has finite index".into(),
            witness: format!("{n:?} has infinite index"),
        }
    })?;
    let (series, class) = n.upper_central_series()?;
    let kernel_class = class.ok_or_else(|| Error::HypothesisFailed {
        hypothesis: "the kernel is nilpotent".into(),
        witness: "its upper central series stalls below the kernel".into(),
    })?;
    let mut levels = series;
    if !levels.last().expect("series is never empty").same_as(&full) {
        levels.push(full.clone());
    }
    let chain = check_bounded_fc_nilpotent_chain(group, &levels)?;
    for cert in &chain.certificates {
        if cert.bound > kernel_index {
            return Err(Error::InternalVerification(format!(
                "chain transition bound {} exceeds the kernel index {kernel_index}",
                cert.bound
            )));
        }
    }
    Ok(NilpotentWitness {
        chain,
        kernel_index,
        kernel_class,
    })
}

/// The decomposition of a group in which every element has boundedly many
/// conjugates: a finite derived subgroup, and the centralizer of that
/// derived subgroup — a finite-index subgroup of nilpotency class at most
/// two.
#[derive(Debug, Clone)]
pub struct NeumannDecomposition {
    /// The verified bound on conjugate counts.
    pub bound: BoundCertificate,
    /// The derived subgroup, verified finite.
    pub derived: SubgroupHandle,
    pub derived_order: u64,
    /// The centralizer of the derived subgroup.
    pub centralizer: SubgroupHandle,
    /// `[H : centralizer]`, verified finite.
    pub centralizer_index: u64,
    /// The exact nilpotency class of the centralizer (at most 2).
    pub centralizer_class: usize,
}

/// Decomposes a subgroup whose elements all have finitely many conjugates
/// within it: the derived subgroup is finite, and the centralizer of the
/// derived subgroup has finite index and nilpotency class at most two. The
/// hypothesis is checked first and failures name a witness generator with
/// infinitely many conjugates.
pub fn neumann_decompose(h: &SubgroupHandle) -> Result<NeumannDecomposition> {
    let group = h.group().clone();
    let trivial = SubgroupHandle::trivial(&group);
    let fc = fc_centralizer_subgroup(h, h, &trivial)?;
    if !h.same_as(&fc) {
        let witness = h
            .generators()
            .iter()
            .find(|g| !fc.contains(g))
            .map(|g| g.to_string())
            .expect("a proper subgroup misses some generator");
        return Err(Error::HypothesisFailed {
            hypothesis: "every element has finitely many conjugates in the subgroup".into(),
            witness,
        });
    }
    let bound = match fc_bound(h, h, &trivial)? {
        Boundedness::Bounded(cert) => cert,
        Boundedness::Unbounded => {
            return Err(Error::HypothesisFailed {
                hypothesis: "conjugate counts admit a finite bound".into(),
                witness: "no finite bound exists".into(),
            })
        }
    };
    let derived = h.derived_subgroup()?;
    let derived_order = derived.order().as_finite().ok_or_else(|| {
        Error::InternalVerification(
            "bounded conjugate counts must force a finite derived subgroup".into(),
        )
    })?;
    let mut centralizer = h.clone();
    for x in derived.closure_generators() {
        centralizer = centralizer.intersect(&h.centralizer_mod(&x, &trivial)?)?;
    }
    let centralizer_index = h.relative_index(&centralizer)?.as_finite().ok_or_else(|| {
        Error::InternalVerification(
            "the centralizer of a finite derived subgroup must have finite index".into(),
        )
    })?;
    let (_, class) = centralizer.upper_central_series()?;
    let centralizer_class = match class {
        Some(c) if c <= 2 => c,
        _ => {
            return Err(Error::InternalVerification(
                "the centralizer of the derived subgroup must be nilpotent of class at most 2"
                    .into(),
            ))
        }
    };
    Ok(NeumannDecomposition {
        bound,
        derived,
        derived_order,
        centralizer,
        centralizer_index,
        centralizer_class,
    })
}

/// Outcome of a symmetry check between two subgroups.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SymmetryVerdict {
    /// The hypothesis does not hold, so the statement claims nothing.
    HypothesisFalse,
    /// Hypothesis and conclusion both verified.
    Verified,
    /// Hypothesis verified but the conclusion failed — this would
    /// contradict the underlying theorem, so it indicates a bug.
    Violation,
}

/// Report of a symmetry check, with the measured indices and a plain
/// reading of the outcome.
#[derive(Debug, Clone)]
pub struct SymmetryReport {
    pub verdict: SymmetryVerdict,
    pub interpretation: String,
    /// The bound certificate for elements of the first subgroup measured
    /// against the second, when the hypothesis got that far.
    pub bound: Option<BoundCertificate>,
    /// `[H : H ∩ FC(K over N)]` within the whole group.
    pub hypothesis_index: Option<IndexValue>,
    /// `[K : K ∩ FC(H over N)]` within the whole group.
    pub conclusion_index: Option<IndexValue>,
}

fn hypothesis_false(reason: &str) -> SymmetryReport {
    SymmetryReport {
        verdict: SymmetryVerdict::HypothesisFalse,
        interpretation: format!("the hypothesis fails: {reason}; the statement claims nothing"),
        bound: None,
        hypothesis_index: None,
        conclusion_index: None,
    }
}

/// Checks the symmetry of the FC-centralizer relation for subgroups `h`,
/// `k` and modulus `n` of one group: if elements of `h` have uniformly
/// bounded centralizer index in `k` modulo `n`, and `h` lies (up to finite
/// index) in the elements of the whole group with finite centralizer index
/// in `k`, then `k` lies up to finite index in the elements with finite
/// centralizer index in `h`. Returns a verdict rather than an error when
/// the hypothesis fails — including when `n` is not normalized by one of
/// the subgroups, which makes the hypothesis unstatable as given.
pub fn symmetry_check(
    h: &SubgroupHandle,
    k: &SubgroupHandle,
    n: &SubgroupHandle,
) -> Result<SymmetryReport> {
    let group = h.group().clone();
    if !k.group().same_group(&group) || !n.group().same_group(&group) {
        return Err(Error::GroupMismatch(
            "symmetry checks need subgroups of one ambient group".into(),
        ));
    }
    if !h.normalizes(n)? {
        return Ok(hypothesis_false("the first subgroup does not normalize the modulus"));
    }
    if !k.normalizes(n)? {
        return Ok(hypothesis_false("the second subgroup does not normalize the modulus"));
    }
    let bound = match fc_bound(h, k, n)? {
        Boundedness::Bounded(cert) => cert,
        Boundedness::Unbounded => {
            return Ok(hypothesis_false(
                "centralizer indices in the second subgroup admit no finite bound",
            ))
        }
    };
    let full = SubgroupHandle::full(&group);
    let fc_of_k = fc_centralizer_subgroup(&full, k, n)?;
    let hypothesis_index = h.relative_index(&fc_of_k)?;
    if !hypothesis_index.is_finite() {
        return Ok(SymmetryReport {
            verdict: SymmetryVerdict::HypothesisFalse,
            interpretation: "the hypothesis fails: the first subgroup does not lie in the \
                             FC-centralizer of the second up to finite index; the statement \
                             claims nothing"
                .into(),
            bound: Some(bound),
            hypothesis_index: Some(hypothesis_index),
            conclusion_index: None,
        });
    }
    let fc_of_h = fc_centralizer_subgroup(&full, h, n)?;
    let conclusion_index = k.relative_index(&fc_of_h)?;
    let (verdict, interpretation) = if conclusion_index.is_finite() {
        (
            SymmetryVerdict::Verified,
            format!(
                "the relation transfers: the second subgroup lies in the FC-centralizer of \
                 the first with index {conclusion_index}"
            ),
        )
    } else {
        (
            SymmetryVerdict::Violation,
            "the hypothesis holds but the conclusion fails; this contradicts the underlying \
             theorem and indicates a computation bug"
                .into(),
        )
    };
    Ok(SymmetryReport {
        verdict,
        interpretation,
        bound: Some(bound),
        hypothesis_index: Some(hypothesis_index),
        conclusion_index: Some(conclusion_index),
    })
}

/// The verified conclusion of a mutual-FC check: the commutator subgroup is
/// finite.
#[derive(Debug, Clone)]
pub struct CommutatorReport {
    /// The bound certificate for elements of the second subgroup measured
    /// against the first.
    pub bound: BoundCertificate,
    pub commutator: SubgroupHandle,
    pub commutator_order: u64,
}

/// Verifies that two subgroups in mutual bounded FC position have a finite
/// commutator subgroup: every element of each must have finite centralizer
/// index in the other, and the indices must admit a finite bound. The
/// commutator subgroup (normal closure of the pairwise commutators in the
/// join) is then computed and its order verified finite.
pub fn commutator_finiteness(h: &SubgroupHandle, k: &SubgroupHandle) -> Result<CommutatorReport> {
    let group = h.group().clone();
    if !k.group().same_group(&group) {
        return Err(Error::GroupMismatch(
            "commutator checks need subgroups of one ambient group".into(),
        ));
    }
    let trivial = SubgroupHandle::trivial(&group);
    for (name, side, other) in [("first", h, k), ("second", k, h)] {
        let fc = fc_centralizer_subgroup(side, other, &trivial)?;
        if !side.same_as(&fc) {
            let witness = side
                .generators()
                .iter()
                .find(|g| !fc.contains(g))
                .map(|g| g.to_string())
                .expect("a proper subgroup misses some generator");
            return Err(Error::HypothesisFailed {
                hypothesis: format!(
                    "every element of the {name} subgroup has finite centralizer index in the \
                     other"
                ),
                witness,
            });
        }
    }
    let bound = match fc_bound(k, h, &trivial)? {
        Boundedness::Bounded(cert) => cert,
        Boundedness::Unbounded => {
            return Err(Error::HypothesisFailed {
                hypothesis: "centralizer indices admit a finite bound".into(),
                witness: "no finite bound exists".into(),
            })
        }
    };
    let commutator = h.commutator_with(k)?;
    let commutator_order = commutator.order().as_finite().ok_or_else(|| {
        Error::InternalVerification(
            "mutual bounded FC position must force a finite commutator subgroup".into(),
        )
    })?;
    Ok(CommutatorReport {
        bound,
        commutator,
        commutator_order,
    })
}

/// A solvable finite-index subgroup extracted from a bounded FC chain, with
/// its derived series.
#[derive(Debug, Clone)]
pub struct SolvableResolution {
    pub subgroup: SubgroupHandle,
    /// `[G : subgroup]`, verified finite.
    pub index: u64,
    /// The derived series of the subgroup, ending at the trivial subgroup.
    pub derived_series: Vec<SubgroupHandle>,
    pub derived_length: usize,
}

/// Resolves a truncated chain to a solvable subgroup of finite index in its
/// top level.
fn resolve_levels(levels: &[SubgroupHandle]) -> Result<SubgroupHandle> {
    if levels.len() == 1 {
        return Ok(levels[0].clone());
    }
    let top = levels.last().expect("nonempty");
    let prev = &levels[levels.len() - 2];
    // Bounded conjugate counts over the previous level force the derived
    // subgroup to be finite over it; centralizing its finitely many cosets
    // costs only finite index.
    let d = top.commutator_with(top)?.join(prev)?;
    let mut t = top.clone();
    for rep in d.transversal_over(prev)? {
        t = t.intersect(&top.centralizer_mod(&rep, prev)?)?;
    }
    let series = t.derived_series()?;
    if series.last().expect("series is never empty").is_trivial() {
        return Ok(t);
    }
    // The centralizer was not directly solvable; refine it by a solvable
    // finite-index subgroup of the truncated chain.
    let inner = resolve_levels(&levels[..levels.len() - 1])?;
    let candidate = t.intersect(&inner)?;
    let series = candidate.derived_series()?;
    if series.last().expect("series is never empty").is_trivial() {
        return Ok(candidate);
    }
    Err(Error::SearchExhausted(
        "no solvable finite-index subgroup was reached from the chain".into(),
    ))
}

/// Produces a solvable subgroup of finite index from a validated bounded
/// FC chain (either kind), together with its verified derived series. The
/// construction works down the chain: over each level the derived subgroup
/// of the next is finite, and centralizing it modulo the level keeps the
/// index finite while making the quotient structure abelian.
pub fn solvable_resolve(chain: &ValidatedFcChain) -> Result<SolvableResolution> {
    let subgroup = resolve_levels(&chain.levels)?;
    let top = chain.levels.last().expect("validated chains are nonempty");
    let index = top.relative_index(&subgroup)?.as_finite().ok_or_else(|| {
        Error::SearchExhausted("the resolved subgroup has infinite index".into())
    })?;
    let derived_series = subgroup.derived_series()?;
    if !derived_series
        .last()
        .expect("series is never empty")
        .is_trivial()
    {
        return Err(Error::InternalVerification(
            "the resolved subgroup's derived series must reach the trivial subgroup".into(),
        ));
    }
    let derived_length = derived_series.len() - 1;
    Ok(SolvableResolution {
        subgroup,
        index,
        derived_series,
        derived_length,
    })
}

/// An element witnessing that a union of cosets misses part of the group,
/// and the ball radius at which it was found.
#[derive(Debug, Clone)]
pub struct CosetWitness {
    pub element: Element,
    pub radius: usize,
}

/// Finds an element of the group outside every given coset `offset·sub`,
/// witnessing that finitely many cosets of infinite-index subgroups cannot
/// cover a group. Each subgroup must have infinite index (a coset of a
/// finite-index subgroup could legitimately be part of a cover, so such
/// input is rejected as a precondition failure). The search expands balls
/// over the standard generators up to `max_radius`.
pub fn coset_cover_witness(
    group: &GroupRef,
    cosets: &[(Element, SubgroupHandle)],
    max_radius: usize,
) -> Result<CosetWitness> {
    let full = SubgroupHandle::full(group);
    for (offset, sub) in cosets {
        group.check_member(offset)?;
        if !sub.group().same_group(group) {
            return Err(Error::GroupMismatch(
                "coset subgroups must live in the given group".into(),
            ));
        }
        if full.relative_index(sub)?.is_finite() {
            return Err(Error::Precondition(
                "every coset subgroup must have infinite index in the group".into(),
            ));
        }
    }
    let uncovered = |el: &Element| {
        !cosets
            .iter()
            .any(|(offset, sub)| sub.contains(&group.mul(&group.inv(offset), el)))
    };
    let mut gens: Vec<Element> = Vec::new();
    for g in group.standard_generators() {
        gens.push(g.clone());
        gens.push(group.inv(&g));
    }
    let mut seen: BTreeSet<Element> = BTreeSet::new();
    let mut frontier = vec![group.identity()];
    seen.insert(group.identity());
    for radius in 0..=max_radius {
        for el in &frontier {
            if uncovered(el) {
                return Ok(CosetWitness {
                    element: el.clone(),
                    radius,
                });
            }
        }
        let mut next = Vec::new();
        for el in &frontier {
            for g in &gens {
                let prod = group.mul(el, g);
                if seen.insert(prod.clone()) {
                    next.push(prod);
                }
            }
        }
        frontier = next;
        if frontier.is_empty() {
            break;
        }
    }
    Err(Error::SearchExhausted(format!(
        "every element within radius {max_radius} lies in one of the cosets"
    )))
}
