//! Finite permutation group backend.
//!
//! Groups are described by a degree and a generator list, closed either by a
//! deterministic Schreier–Sims stabilizer chain (base points chosen as first
//! moved points) or, for small orders, by full enumeration. Orders up to
//! [`ENUMERATION_LIMIT`] keep their sorted element set around; everything
//! above answers membership by sifting only.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::error::Error;
use crate::perm::Perm;
use crate::Result;

/// Orders up to this bound may be represented by their full element set.
pub const ENUMERATION_LIMIT: u64 = 5000;

/// Defining data of a finite permutation group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinitePermDescriptor {
    pub degree: usize,
    pub generators: Vec<Perm>,
}

impl FinitePermDescriptor {
    pub fn new(degree: usize, generators: Vec<Perm>) -> Result<FinitePermDescriptor> {
        if degree == 0 {
            return Err(Error::InvalidDescriptor(
                "permutation degree must be at least 1".into(),
            ));
        }
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::InvalidDescriptor(format!(
                    "generator {g} has degree {} but the group has degree {degree}",
                    g.degree()
                )));
            }
        }
        Ok(FinitePermDescriptor { degree, generators })
    }
}

/// One level of a stabilizer chain: the orbit of the base point under the
/// generators fixing all earlier base points, with a transversal mapping the
/// base point onto each orbit point.
#[derive(Debug, Clone)]
pub struct BsgsLevel {
    pub base_point: usize,
    pub orbit: Vec<usize>,
    pub transversal: BTreeMap<usize, Perm>,
}

/// Base and strong generating set with orbit/transversal tables.
#[derive(Debug, Clone)]
pub struct Bsgs {
    pub degree: usize,
    pub base: Vec<usize>,
    pub strong_generators: Vec<Perm>,
    pub levels: Vec<BsgsLevel>,
}

impl Bsgs {
    /// Group order: the product of the orbit lengths.
    pub fn order(&self) -> u64 {
        self.levels
            .iter()
            .map(|l| l.orbit.len() as u64)
            .product()
    }

    /// Strips `p` through the stabilizer chain; the residue is the identity
    /// exactly when `p` belongs to the group.
    pub fn sift(&self, p: &Perm) -> Perm {
        let mut h = p.clone();
        for level in &self.levels {
            let x = h.image_of(level.base_point);
            match level.transversal.get(&x) {
                Some(t) => h = h.compose(&t.inverse()),
                None => return h,
            }
        }
        h
    }

    pub fn contains(&self, p: &Perm) -> bool {
        p.degree() == self.degree && self.sift(p).is_identity()
    }

    /// Full enumeration from the transversal tables (deterministic order is
    /// not guaranteed here; callers sort).
    pub fn enumerate(&self) -> Vec<Perm> {
        let mut elems = vec![Perm::identity(self.degree)];
        for level in self.levels.iter().rev() {
            let mut next = Vec::with_capacity(elems.len() * level.orbit.len());
            for e in &elems {
                for t in level.transversal.values() {
                    next.push(e.compose(t));
                }
            }
            elems = next;
        }
        elems
    }
}

fn orbit_transversal(degree: usize, base_point: usize, gens: &[Perm]) -> BsgsLevel {
    let mut transversal = BTreeMap::new();
    transversal.insert(base_point, Perm::identity(degree));
    let mut orbit = vec![base_point];
    let mut queue = VecDeque::from([base_point]);
    while let Some(y) = queue.pop_front() {
        let ty = transversal[&y].clone();
        for g in gens {
            let x = g.image_of(y);
            if let Entry::Vacant(slot) = transversal.entry(x) {
                slot.insert(ty.compose(g));
                orbit.push(x);
                queue.push_back(x);
            }
        }
    }
    BsgsLevel {
        base_point,
        orbit,
        transversal,
    }
}

/// Deterministic Schreier–Sims: builds a base and strong generating set for
/// the group generated by the descriptor's generators. Base points are the
/// first moved points of generators not yet fixed by the base.
pub fn build_bsgs(desc: &FinitePermDescriptor) -> Bsgs {
    let degree = desc.degree;
    let mut strong: Vec<Perm> = Vec::new();
    for g in &desc.generators {
        if !g.is_identity() && !strong.contains(g) {
            strong.push(g.clone());
        }
    }
    let mut base: Vec<usize> = Vec::new();
    loop {
        // Every strong generator must move some base point.
        for g in &strong {
            if base.iter().all(|&b| g.image_of(b) == b) {
                base.push(g.first_moved_point().expect("non-identity generator"));
            }
        }
        // Rebuild all levels from the current base and strong set.
        let levels: Vec<BsgsLevel> = (0..base.len())
            .map(|i| {
                let level_gens: Vec<Perm> = strong
                    .iter()
                    .filter(|g| base[..i].iter().all(|&b| g.image_of(b) == b))
                    .cloned()
                    .collect();
                orbit_transversal(degree, base[i], &level_gens)
            })
            .collect();
        let chain = Bsgs {
            degree,
            base: base.clone(),
            strong_generators: strong.clone(),
            levels,
        };
        // Verify closure with Schreier generators; collect the first failure.
        let mut new_gen: Option<Perm> = None;
        'search: for i in 0..chain.levels.len() {
            let level_gens: Vec<Perm> = strong
                .iter()
                .filter(|g| base[..i].iter().all(|&b| g.image_of(b) == b))
                .cloned()
                .collect();
            let level = &chain.levels[i];
            for &x in &level.orbit {
                let tx = &level.transversal[&x];
                for g in &level_gens {
                    let image = g.image_of(x);
                    let schreier = tx.compose(g).compose(&level.transversal[&image].inverse());
                    // The Schreier generator fixes base[..=i]; sift it through
                    // the deeper levels.
                    let mut residue = schreier;
                    for deeper in &chain.levels[i + 1..] {
                        let y = residue.image_of(deeper.base_point);
                        match deeper.transversal.get(&y) {
                            Some(t) => residue = residue.compose(&t.inverse()),
                            None => break,
                        }
                    }
                    if !residue.is_identity() {
                        new_gen = Some(residue);
                        break 'search;
                    }
                }
            }
        }
        match new_gen {
            Some(r) => {
                if base.iter().all(|&b| r.image_of(b) == b) {
                    base.push(r.first_moved_point().expect("nontrivial residue"));
                }
                strong.push(r);
            }
            None => return chain,
        }
    }
}

/// Products-until-closed enumeration. Returns `None` when the closure
/// exceeds `max_size` elements.
pub fn naive_closure(degree: usize, gens: &[Perm], max_size: usize) -> Option<BTreeSet<Perm>> {
    let mut set = BTreeSet::new();
    set.insert(Perm::identity(degree));
    let mut queue: VecDeque<Perm> = VecDeque::from([Perm::identity(degree)]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            for prod in [x.compose(g), x.compose(&g.inverse())] {
                if !set.contains(&prod) {
                    if set.len() >= max_size {
                        return None;
                    }
                    set.insert(prod.clone());
                    queue.push_back(prod);
                }
            }
        }
    }
    Some(set)
}

/// Conjugacy classes of the group with the given elements and generators:
/// sorted list of (minimal representative, class size). Class orbits are
/// computed by conjugating with the generators only.
pub fn conjugacy_classes(elements: &[Perm], gens: &[Perm]) -> Vec<(Perm, u64)> {
    let all: BTreeSet<&Perm> = elements.iter().collect();
    let mut seen: BTreeSet<Perm> = BTreeSet::new();
    let mut classes = Vec::new();
    for e in elements {
        if seen.contains(e) {
            continue;
        }
        let mut class = BTreeSet::new();
        class.insert(e.clone());
        let mut queue = VecDeque::from([e.clone()]);
        while let Some(x) = queue.pop_front() {
            for g in gens {
                let conj = g.inverse().compose(&x).compose(g);
                debug_assert!(all.contains(&conj), "class escaped the element set");
                if class.insert(conj.clone()) {
                    queue.push_back(conj);
                }
            }
        }
        let rep = class.iter().next().expect("nonempty class").clone();
        let size = class.len() as u64;
        seen.extend(class);
        classes.push((rep, size));
    }
    classes.sort();
    classes
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::perm_from_cycles;

    fn s3() -> FinitePermDescriptor {
        FinitePermDescriptor::new(
            3,
            vec![perm_from_cycles(3, &[&[1, 2, 3]]), perm_from_cycles(3, &[&[1, 2]])],
        )
        .unwrap()
    }

    fn d8() -> FinitePermDescriptor {
        FinitePermDescriptor::new(
            4,
            vec![perm_from_cycles(4, &[&[1, 2, 3, 4]]), perm_from_cycles(4, &[&[1, 3]])],
        )
        .unwrap()
    }

    #[test]
    fn bsgs_orders_match_known_groups() {
        assert_eq!(build_bsgs(&s3()).order(), 6);
        assert_eq!(build_bsgs(&d8()).order(), 8);
        let trivial = FinitePermDescriptor::new(1, vec![]).unwrap();
        assert_eq!(build_bsgs(&trivial).order(), 1);
    }

    #[test]
    fn sifting_generators_gives_identity() {
        for desc in [s3(), d8()] {
            let chain = build_bsgs(&desc);
            for g in &desc.generators {
                assert!(chain.sift(g).is_identity());
                assert!(chain.contains(g));
            }
            // Something outside: a transposition not in D8's copy.
            if desc.degree == 4 {
                assert!(!chain.contains(&perm_from_cycles(4, &[&[1, 2]])));
            }
        }
    }

    #[test]
    fn bsgs_order_equals_naive_closure() {
        for desc in [s3(), d8()] {
            let chain = build_bsgs(&desc);
            let closure = naive_closure(desc.degree, &desc.generators, 5000).unwrap();
            assert_eq!(chain.order(), closure.len() as u64);
            let mut enumerated = chain.enumerate();
            enumerated.sort();
            enumerated.dedup();
            assert_eq!(enumerated.len() as u64, chain.order());
            assert!(enumerated.iter().all(|e| closure.contains(e)));
        }
    }

    #[test]
    fn conjugacy_classes_of_small_groups() {
        let s3 = s3();
        let elems: Vec<Perm> = naive_closure(3, &s3.generators, 100)
            .unwrap()
            .into_iter()
            .collect();
        let classes = conjugacy_classes(&elems, &s3.generators);
        let mut sizes: Vec<u64> = classes.iter().map(|(_, s)| *s).collect();
        sizes.sort();
        assert_eq!(sizes, vec![1, 2, 3]);

        let d8 = d8();
        let elems: Vec<Perm> = naive_closure(4, &d8.generators, 100)
            .unwrap()
            .into_iter()
            .collect();
        let classes = conjugacy_classes(&elems, &d8.generators);
        let mut sizes: Vec<u64> = classes.iter().map(|(_, s)| *s).collect();
        sizes.sort();
        assert_eq!(sizes, vec![1, 1, 2, 2, 2]);

        // Abelian C4: four singleton classes.
        let c4 = FinitePermDescriptor::new(4, vec![perm_from_cycles(4, &[&[1, 2, 3, 4]])]).unwrap();
        let elems: Vec<Perm> = naive_closure(4, &c4.generators, 100)
            .unwrap()
            .into_iter()
            .collect();
        let classes = conjugacy_classes(&elems, &c4.generators);
        assert_eq!(classes.len(), 4);
        assert!(classes.iter().all(|(_, s)| *s == 1));
    }

    #[test]
    fn class_sizes_divide_the_order_and_sum_to_it() {
        for desc in [s3(), d8()] {
            let order = build_bsgs(&desc).order();
            let elems: Vec<Perm> = naive_closure(desc.degree, &desc.generators, 5000)
                .unwrap()
                .into_iter()
                .collect();
            let classes = conjugacy_classes(&elems, &desc.generators);
            assert_eq!(classes.iter().map(|(_, s)| *s).sum::<u64>(), order);
            assert!(classes.iter().all(|(_, s)| order.is_multiple_of(*s)));
        }
    }
}
