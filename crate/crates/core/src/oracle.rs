//! Brute-force counting engines used to cross-check the exact machinery.
//!
//! Everything here works by enumerating balls in the word metric and
//! counting cosets among finitely many elements. The engines share only the
//! element arithmetic with the rest of the crate — no stabilizer chains, no
//! lattice normal forms, no subgroup handles. Membership in a modulus or a
//! subgroup enters through a caller-supplied predicate, so the counting
//! path stays independent of whatever produced the value being checked.
//!
//! Ball counts are lower bounds for the true (possibly infinite) values,
//! and they are exact once the radius is large enough to exhaust a finite
//! set. [`brute_check`] exposes the standard stabilization heuristic:
//! compare the count at a radius with the count one step earlier.

use std::collections::BTreeMap;

use crate::group::{Element, GroupRef};
use crate::Result;

/// A ball in the word metric over a fixed generating set: each element is
/// stored with the length of a shortest word for it.
#[derive(Debug, Clone)]
pub struct Ball {
    elements: BTreeMap<Element, u32>,
    radius: u32,
}

impl Ball {
    /// The radius the ball was enumerated to.
    pub fn radius(&self) -> u32 {
        self.radius
    }

    /// Total number of elements in the ball.
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    /// A ball always contains at least the identity.
    pub fn is_empty(&self) -> bool {
        false
    }

    /// Whether the element appears within the enumerated radius.
    pub fn contains(&self, el: &Element) -> bool {
        self.elements.contains_key(el)
    }

    /// The word length of an element of the ball.
    pub fn word_length(&self, el: &Element) -> Option<u32> {
        self.elements.get(el).copied()
    }

    /// All elements of the ball, in the element order.
    pub fn elements(&self) -> impl Iterator<Item = &Element> {
        self.elements.keys()
    }

    /// The elements with word length at most `radius`.
    pub fn elements_within(&self, radius: u32) -> impl Iterator<Item = &Element> {
        self.elements
            .iter()
            .filter(move |(_, d)| **d <= radius)
            .map(|(el, _)| el)
    }
}

/// Enumerates the ball of the given radius over the generators and their
/// inverses, by breadth-first search.
pub fn ball_enumerate(group: &GroupRef, gens: &[Element], radius: u32) -> Result<Ball> {
    let mut symmetrized: Vec<Element> = Vec::with_capacity(2 * gens.len());
    for g in gens {
        group.check_member(g)?;
        symmetrized.push(g.clone());
        symmetrized.push(group.inv(g));
    }
    let mut elements: BTreeMap<Element, u32> = BTreeMap::new();
    elements.insert(group.identity(), 0);
    let mut frontier = vec![group.identity()];
    for dist in 1..=radius {
        let mut next = Vec::new();
        for el in &frontier {
            for g in &symmetrized {
                let prod = group.mul(el, g);
                if !elements.contains_key(&prod) {
                    elements.insert(prod.clone(), dist);
                    next.push(prod);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        frontier = next;
    }
    Ok(Ball { elements, radius })
}

/// Counts the distinct cosets `x·S` met by the given elements, where
/// membership in `S` is decided by the predicate: `x` and `y` share a coset
/// exactly when `x⁻¹y` satisfies it.
pub fn coset_count<'a>(
    group: &GroupRef,
    elements: impl Iterator<Item = &'a Element>,
    mut in_subgroup: impl FnMut(&Element) -> bool,
) -> u64 {
    let mut reps: Vec<Element> = Vec::new();
    for el in elements {
        if !reps
            .iter()
            .any(|r| in_subgroup(&group.mul(&group.inv(r), el)))
        {
            reps.push(el.clone());
        }
    }
    reps.len() as u64
}

/// Counts the distinct conjugates of `g` by the given elements, modulo the
/// subgroup decided by the predicate: two conjugates are identified when
/// they differ by a member of it.
pub fn conjugate_count<'a>(
    group: &GroupRef,
    conjugators: impl Iterator<Item = &'a Element>,
    g: &Element,
    mut in_modulus: impl FnMut(&Element) -> bool,
) -> u64 {
    let mut reps: Vec<Element> = Vec::new();
    for h in conjugators {
        let c = group.conj(g, h);
        if !reps
            .iter()
            .any(|r| in_modulus(&group.mul(&group.inv(r), &c)))
        {
            reps.push(c);
        }
    }
    reps.len() as u64
}

/// A count compared at two consecutive radii. Equality suggests the count
/// has exhausted a finite set; strict growth proves the set is larger than
/// the smaller ball shows (and, repeated over all radii, that it is
/// infinite).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Stabilization {
    pub at_prev: u64,
    pub at_radius: u64,
}

impl Stabilization {
    pub fn stabilized(&self) -> bool {
        self.at_prev == self.at_radius
    }
}

/// Counts the conjugates of `g` modulo the predicate over balls of radius
/// `radius - 1` and `radius` (both counts use conjugators from the same
/// enumeration). Radius zero compares the singleton ball with itself.
pub fn brute_check(
    group: &GroupRef,
    gens: &[Element],
    g: &Element,
    in_modulus: impl FnMut(&Element) -> bool + Copy,
    radius: u32,
) -> Result<Stabilization> {
    group.check_member(g)?;
    let ball = ball_enumerate(group, gens, radius)?;
    let prev_radius = radius.saturating_sub(1);
    let at_prev = conjugate_count(group, ball.elements_within(prev_radius), g, in_modulus);
    let at_radius = conjugate_count(group, ball.elements(), g, in_modulus);
    Ok(Stabilization { at_prev, at_radius })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::affine::AffineDescriptor;
    use crate::finite::FinitePermDescriptor;
    use crate::perm::{perm_from_cycles, Perm};

    fn dinf() -> GroupRef {
        GroupRef::new_affine(AffineDescriptor {
            rank: 1,
            finite_part: FinitePermDescriptor::new(2, vec![perm_from_cycles(2, &[&[1, 2]])])
                .unwrap(),
            action: vec![vec![vec![-1]]],
        })
        .unwrap()
    }

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

    fn translation(k: i64) -> Element {
        Element::affine(vec![k], Perm::identity(2))
    }

    fn reflection() -> Element {
        Element::affine(vec![0], perm_from_cycles(2, &[&[1, 2]]))
    }

    #[test]
    fn ball_sizes_in_the_infinite_dihedral_group() {
        let g = dinf();
        let gens = [translation(1), reflection()];
        assert_eq!(ball_enumerate(&g, &gens, 0).unwrap().len(), 1);
        // Radius one: identity, both translations, and the reflection.
        let ball = ball_enumerate(&g, &gens, 1).unwrap();
        assert_eq!(ball.len(), 4);
        assert_eq!(ball.word_length(&translation(-1)), Some(1));
        assert!(!ball.contains(&translation(2)));
    }

    #[test]
    fn ball_exhausts_a_finite_group() {
        let s = s3();
        let gens: Vec<Element> = s.standard_generators();
        let ball = ball_enumerate(&s, &gens, 6).unwrap();
        assert_eq!(ball.len(), 6);
    }

    #[test]
    fn conjugate_counts_match_class_sizes() {
        let s = s3();
        let ball = ball_enumerate(&s, &s.standard_generators(), 6).unwrap();
        let swap = Element::Perm(perm_from_cycles(3, &[&[1, 2]]));
        let rot = Element::Perm(perm_from_cycles(3, &[&[1, 2, 3]]));
        let is_id = |x: &Element| s.is_identity(x);
        assert_eq!(conjugate_count(&s, ball.elements(), &swap, is_id), 3);
        assert_eq!(conjugate_count(&s, ball.elements(), &rot, is_id), 2);
        assert_eq!(
            conjugate_count(&s, ball.elements(), &s.identity(), is_id),
            1
        );
    }

    #[test]
    fn stabilization_separates_finite_from_infinite_classes() {
        let g = dinf();
        let gens = [translation(1), reflection()];
        let is_id = |x: &Element| g.is_identity(x);
        // A translation has exactly two conjugates.
        let st = brute_check(&g, &gens, &translation(1), is_id, 4).unwrap();
        assert!(st.stabilized());
        assert_eq!(st.at_radius, 2);
        // The reflection's conjugates keep growing with the radius.
        let st = brute_check(&g, &gens, &reflection(), is_id, 4).unwrap();
        assert!(!st.stabilized());
        assert!(st.at_radius > st.at_prev);
    }

    #[test]
    fn coset_counts_recover_finite_indices() {
        let g = dinf();
        let gens = [translation(1), reflection()];
        let ball = ball_enumerate(&g, &gens, 4).unwrap();
        // The translations have index two.
        let in_translations = |x: &Element| match x {
            Element::Affine { f, .. } => f.is_identity(),
            Element::Perm(_) => false,
        };
        assert_eq!(coset_count(&g, ball.elements(), in_translations), 2);

        let s = s3();
        let ball = ball_enumerate(&s, &s.standard_generators(), 6).unwrap();
        let rot = perm_from_cycles(3, &[&[1, 2, 3]]);
        let rot2 = rot.compose(&rot);
        let in_a3 = |x: &Element| match x {
            Element::Perm(p) => p.is_identity() || *p == rot || *p == rot2,
            Element::Affine { .. } => false,
        };
        assert_eq!(coset_count(&s, ball.elements(), in_a3), 2);
    }

    #[test]
    fn counts_modulo_a_subgroup() {
        let g = dinf();
        let gens = [translation(1), reflection()];
        let ball = ball_enumerate(&g, &gens, 5).unwrap();
        // Modulo the translations, the reflection's class collapses to one
        // coset.
        let in_translations = |x: &Element| match x {
            Element::Affine { f, .. } => f.is_identity(),
            Element::Perm(_) => false,
        };
        assert_eq!(
            conjugate_count(&g, ball.elements(), &reflection(), in_translations),
            1
        );
    }
}
