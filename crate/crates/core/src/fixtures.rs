//! Built-in example groups with canonical chains, used by tests and the
//! command-line tool.
//!
//! Each fixture bundles a group with one chain for each chain condition
//! ([`crate::fc::check_bounded_fc_nilpotent_chain`] and
//! [`crate::fc::check_bounded_fc_solvable_chain`]). The fixtures cover both
//! backends: small finite permutation groups and affine groups over `Z` and
//! `Z²`, including one with an infinite conjugacy class (the infinite
//! dihedral group) and one where the whole group is FC (the product of the
//! integers with a finite group).

use crate::affine::AffineDescriptor;
use crate::finite::FinitePermDescriptor;
use crate::group::{Element, GroupRef};
use crate::handle::SubgroupHandle;
use crate::perm::{perm_from_cycles, Perm};
use crate::Result;

/// A named example group with one chain per chain condition.
#[derive(Debug, Clone)]
pub struct Fixture {
    pub name: &'static str,
    pub group: GroupRef,
    /// Levels for the nilpotent chain condition (every level normal in the
    /// group).
    pub nilpotent_chain: Vec<SubgroupHandle>,
    /// Levels for the solvable chain condition (each level normal in the
    /// next).
    pub solvable_chain: Vec<SubgroupHandle>,
}

fn finite_group(degree: usize, cycles: &[&[&[usize]]]) -> Result<GroupRef> {
    let gens = cycles
        .iter()
        .map(|c| perm_from_cycles(degree, c))
        .collect();
    GroupRef::new_finite(FinitePermDescriptor::new(degree, gens)?)
}

/// The symmetric group on three points.
pub fn s3() -> Result<Fixture> {
    let group = finite_group(3, &[&[&[1, 2, 3]], &[&[1, 2]]])?;
    let trivial = SubgroupHandle::trivial(&group);
    let full = SubgroupHandle::full(&group);
    let a3 = SubgroupHandle::generate(
        &group,
        &[Element::Perm(perm_from_cycles(3, &[&[1, 2, 3]]))],
    )?;
    Ok(Fixture {
        name: "s3",
        group,
        nilpotent_chain: vec![trivial.clone(), full.clone()],
        solvable_chain: vec![trivial, a3, full],
    })
}

/// The dihedral group of order eight, acting on four points.
pub fn d8() -> Result<Fixture> {
    let group = finite_group(4, &[&[&[1, 2, 3, 4]], &[&[1, 3]]])?;
    let trivial = SubgroupHandle::trivial(&group);
    let full = SubgroupHandle::full(&group);
    let center = SubgroupHandle::generate(
        &group,
        &[Element::Perm(perm_from_cycles(4, &[&[1, 3], &[2, 4]]))],
    )?;
    Ok(Fixture {
        name: "d8",
        group,
        nilpotent_chain: vec![trivial.clone(), center, full.clone()],
        solvable_chain: vec![trivial, full],
    })
}

/// The alternating group on four points.
pub fn a4() -> Result<Fixture> {
    let group = finite_group(4, &[&[&[1, 2, 3]], &[&[1, 2], &[3, 4]]])?;
    let trivial = SubgroupHandle::trivial(&group);
    let full = SubgroupHandle::full(&group);
    let v4 = SubgroupHandle::generate(
        &group,
        &[
            Element::Perm(perm_from_cycles(4, &[&[1, 2], &[3, 4]])),
            Element::Perm(perm_from_cycles(4, &[&[1, 3], &[2, 4]])),
        ],
    )?;
    Ok(Fixture {
        name: "a4",
        group,
        nilpotent_chain: vec![trivial.clone(), full.clone()],
        solvable_chain: vec![trivial, v4, full],
    })
}

/// The cyclic group of order twelve.
pub fn c12() -> Result<Fixture> {
    let group = finite_group(
        12,
        &[&[&[1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12]]],
    )?;
    let trivial = SubgroupHandle::trivial(&group);
    let full = SubgroupHandle::full(&group);
    Ok(Fixture {
        name: "c12",
        group,
        nilpotent_chain: vec![trivial.clone(), full.clone()],
        solvable_chain: vec![trivial, full],
    })
}

/// The trivial group, acting on one point.
pub fn trivial() -> Result<Fixture> {
    let group = GroupRef::new_finite(FinitePermDescriptor::new(1, vec![])?)?;
    let only = SubgroupHandle::trivial(&group);
    Ok(Fixture {
        name: "trivial",
        group,
        nilpotent_chain: vec![only.clone()],
        solvable_chain: vec![only],
    })
}

/// The infinite dihedral group: translations of `Z` and the flip.
pub fn dinf() -> Result<Fixture> {
    let group = GroupRef::new_affine(AffineDescriptor {
        rank: 1,
        finite_part: FinitePermDescriptor::new(2, vec![perm_from_cycles(2, &[&[1, 2]])])?,
        action: vec![vec![vec![-1]]],
    })?;
    let trivial = SubgroupHandle::trivial(&group);
    let full = SubgroupHandle::full(&group);
    let z = SubgroupHandle::generate(&group, &[Element::affine(vec![1], Perm::identity(2))])?;
    let chain = vec![trivial, z, full];
    Ok(Fixture {
        name: "dinf",
        group,
        nilpotent_chain: chain.clone(),
        solvable_chain: chain,
    })
}

/// The direct product of the integers with the symmetric group on three
/// points (translations act trivially).
pub fn zxs3() -> Result<Fixture> {
    let group = GroupRef::new_affine(AffineDescriptor {
        rank: 1,
        finite_part: FinitePermDescriptor::new(
            3,
            vec![
                perm_from_cycles(3, &[&[1, 2, 3]]),
                perm_from_cycles(3, &[&[1, 2]]),
            ],
        )?,
        action: vec![vec![vec![1]], vec![vec![1]]],
    })?;
    let trivial = SubgroupHandle::trivial(&group);
    let full = SubgroupHandle::full(&group);
    let z_a3 = SubgroupHandle::generate(
        &group,
        &[
            Element::affine(vec![1], Perm::identity(3)),
            Element::affine(vec![0], perm_from_cycles(3, &[&[1, 2, 3]])),
        ],
    )?;
    Ok(Fixture {
        name: "zxs3",
        group,
        nilpotent_chain: vec![trivial.clone(), full.clone()],
        solvable_chain: vec![trivial, z_a3, full],
    })
}

/// The plane lattice extended by a quarter turn.
pub fn z2c4() -> Result<Fixture> {
    let group = GroupRef::new_affine(AffineDescriptor {
        rank: 2,
        finite_part: FinitePermDescriptor::new(4, vec![perm_from_cycles(4, &[&[1, 2, 3, 4]])])?,
        action: vec![vec![vec![0, -1], vec![1, 0]]],
    })?;
    let trivial = SubgroupHandle::trivial(&group);
    let full = SubgroupHandle::full(&group);
    let z2 = SubgroupHandle::generate(
        &group,
        &[
            Element::affine(vec![1, 0], Perm::identity(4)),
            Element::affine(vec![0, 1], Perm::identity(4)),
        ],
    )?;
    let chain = vec![trivial, z2, full];
    Ok(Fixture {
        name: "z2c4",
        group,
        nilpotent_chain: chain.clone(),
        solvable_chain: chain,
    })
}

/// All fixtures, in a stable order.
pub fn all() -> Result<Vec<Fixture>> {
    Ok(vec![
        trivial()?,
        s3()?,
        d8()?,
        a4()?,
        c12()?,
        dinf()?,
        zxs3()?,
        z2c4()?,
    ])
}

/// Looks a fixture up by its name.
pub fn by_name(name: &str) -> Result<Option<Fixture>> {
    Ok(all()?.into_iter().find(|f| f.name == name))
}
