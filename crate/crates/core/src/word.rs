//! Words over group elements.
//!
//! A [`Word`] is a formal expression — products, inverses, conjugates and
//! commutators over element leaves — evaluated exactly in a given ambient
//! group. Evaluation checks every leaf for membership, so a word built from
//! foreign elements fails rather than producing nonsense.

use crate::group::{Element, GroupRef};
use crate::Result;

/// A formal expression over group elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Word {
    /// A single element.
    Elem(Element),
    /// The empty product.
    Identity,
    /// Product of factors, left to right.
    Product(Vec<Word>),
    /// Inverse of a word.
    Inverse(Box<Word>),
    /// `base^by = by⁻¹ · base · by`.
    Conjugate { base: Box<Word>, by: Box<Word> },
    /// `[a, b] = a⁻¹·b⁻¹·a·b`.
    Commutator(Box<Word>, Box<Word>),
}

impl Word {
    pub fn elem(el: Element) -> Word {
        Word::Elem(el)
    }

    pub fn product(factors: Vec<Word>) -> Word {
        Word::Product(factors)
    }

    pub fn inverse(inner: Word) -> Word {
        Word::Inverse(Box::new(inner))
    }

    pub fn conjugate(base: Word, by: Word) -> Word {
        Word::Conjugate {
            base: Box::new(base),
            by: Box::new(by),
        }
    }

    pub fn commutator(a: Word, b: Word) -> Word {
        Word::Commutator(Box::new(a), Box::new(b))
    }

    /// Evaluates the word in `group`, checking each leaf for membership.
    pub fn evaluate(&self, group: &GroupRef) -> Result<Element> {
        match self {
            Word::Elem(el) => {
                group.check_member(el)?;
                Ok(el.clone())
            }
            Word::Identity => Ok(group.identity()),
            Word::Product(factors) => {
                let mut acc = group.identity();
                for factor in factors {
                    let val = factor.evaluate(group)?;
                    acc = group.mul(&acc, &val);
                }
                Ok(acc)
            }
            Word::Inverse(inner) => Ok(group.inv(&inner.evaluate(group)?)),
            Word::Conjugate { base, by } => {
                Ok(group.conj(&base.evaluate(group)?, &by.evaluate(group)?))
            }
            Word::Commutator(a, b) => {
                Ok(group.comm(&a.evaluate(group)?, &b.evaluate(group)?))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::affine::AffineDescriptor;
    use crate::finite::FinitePermDescriptor;
    use crate::perm::{perm_from_cycles, Perm};

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

    #[test]
    fn commutator_of_a_three_cycle_and_a_transposition() {
        let g = s3();
        let w = Word::commutator(
            Word::elem(Element::Perm(perm_from_cycles(3, &[&[1, 2, 3]]))),
            Word::elem(Element::Perm(perm_from_cycles(3, &[&[1, 2]]))),
        );
        assert_eq!(
            w.evaluate(&g).unwrap(),
            Element::Perm(perm_from_cycles(3, &[&[1, 2, 3]]))
        );
    }

    #[test]
    fn commutator_of_translation_and_reflection() {
        let g = GroupRef::new_affine(AffineDescriptor {
            rank: 1,
            finite_part: FinitePermDescriptor::new(2, vec![perm_from_cycles(2, &[&[1, 2]])])
                .unwrap(),
            action: vec![vec![vec![-1]]],
        })
        .unwrap();
        let w = Word::commutator(
            Word::elem(Element::affine(vec![1], Perm::identity(2))),
            Word::elem(Element::affine(vec![0], perm_from_cycles(2, &[&[1, 2]]))),
        );
        assert_eq!(
            w.evaluate(&g).unwrap(),
            Element::affine(vec![-2], Perm::identity(2))
        );
    }

    #[test]
    fn nested_products_inverses_and_conjugates() {
        let g = s3();
        let a = Word::elem(Element::Perm(perm_from_cycles(3, &[&[1, 2, 3]])));
        let b = Word::elem(Element::Perm(perm_from_cycles(3, &[&[1, 2]])));
        let w = Word::product(vec![
            Word::conjugate(b.clone(), a.clone()),
            Word::inverse(Word::conjugate(b, a)),
            Word::Identity,
        ]);
        assert!(matches!(w.evaluate(&g).unwrap(), Element::Perm(p) if p.is_identity()));
    }

    #[test]
    fn foreign_leaves_are_rejected() {
        let g = s3();
        let w = Word::elem(Element::Perm(perm_from_cycles(4, &[&[1, 4]])));
        assert!(w.evaluate(&g).is_err());
    }
}
