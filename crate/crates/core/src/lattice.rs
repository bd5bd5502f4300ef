//! Integer lattices in `Z^n` with canonical Hermite-normal-form bases.
//!
//! Equal lattices always carry byte-identical data, so handle equality and
//! report determinism reduce to structural comparison. All operations are
//! exact; indices of infinite-index sublattices are reported as
//! [`IndexValue::Infinite`] rather than approximated.

use crate::index::IndexValue;
use crate::linalg::{
    self, hnf, left_kernel, mat_vec, solve_left, vec_is_zero, vec_sub, IVec, Int, Mat,
};

/// A sublattice of `Z^ambient`, stored as a canonical row-HNF basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Lattice {
    ambient: usize,
    basis: Mat,
}

impl Lattice {
    /// Lattice generated by `gens` inside `Z^ambient`.
    pub fn from_generators(ambient: usize, gens: &[IVec]) -> Lattice {
        Lattice {
            ambient,
            basis: hnf(gens, ambient),
        }
    }

    /// The zero lattice.
    pub fn zero(ambient: usize) -> Lattice {
        Lattice {
            ambient,
            basis: Vec::new(),
        }
    }

    /// The full lattice `Z^ambient`.
    pub fn standard(ambient: usize) -> Lattice {
        Lattice {
            ambient,
            basis: linalg::mat_identity(ambient),
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn is_full_rank(&self) -> bool {
        self.rank() == self.ambient
    }

    /// Canonical basis rows.
    pub fn basis(&self) -> &[IVec] {
        &self.basis
    }

    pub fn contains(&self, v: &[Int]) -> bool {
        vec_is_zero(&self.reduce(v))
    }

    /// Whether every basis vector of `other` lies in `self`.
    pub fn contains_lattice(&self, other: &Lattice) -> bool {
        other.basis.iter().all(|b| self.contains(b))
    }

    /// Canonical representative of `v + self`: each pivot coordinate is
    /// brought into `[0, pivot)` by subtracting basis rows.
    pub fn reduce(&self, v: &[Int]) -> IVec {
        assert_eq!(v.len(), self.ambient, "vector/lattice ambient mismatch");
        let mut r = v.to_vec();
        for row in &self.basis {
            let c = row
                .iter()
                .position(|&x| x != 0)
                .expect("basis rows are nonzero");
            let q = r[c].div_euclid(row[c]);
            if q != 0 {
                for j in 0..self.ambient {
                    r[j] -= q * row[j];
                }
            }
        }
        r
    }

    /// Integer coordinates of `v` with respect to the basis, if `v` lies in
    /// the lattice.
    pub fn coordinates(&self, v: &[Int]) -> Option<IVec> {
        solve_left(&self.basis, self.ambient, v)
    }

    /// Smallest lattice containing both operands.
    pub fn sum(&self, other: &Lattice) -> Lattice {
        assert_eq!(self.ambient, other.ambient, "ambient rank mismatch");
        let mut rows = self.basis.clone();
        rows.extend(other.basis.iter().cloned());
        Lattice::from_generators(self.ambient, &rows)
    }

    /// Intersection, via the left kernel of the stacked bases: every common
    /// vector is an integer combination of `self`'s rows that is also one of
    /// `other`'s rows.
    pub fn intersect(&self, other: &Lattice) -> Lattice {
        assert_eq!(self.ambient, other.ambient, "ambient rank mismatch");
        if self.rank() == 0 || other.rank() == 0 {
            return Lattice::zero(self.ambient);
        }
        let mut stacked = self.basis.clone();
        stacked.extend(other.basis.iter().cloned());
        let kernel = left_kernel(&stacked, self.ambient);
        let gens: Mat = kernel
            .iter()
            .map(|row| {
                // The first `rank(self)` kernel coordinates combine our rows.
                let mut v = vec![0; self.ambient];
                for (coeff, basis_row) in row.iter().take(self.rank()).zip(&self.basis) {
                    for j in 0..self.ambient {
                        v[j] += coeff * basis_row[j];
                    }
                }
                v
            })
            .collect();
        Lattice::from_generators(self.ambient, &gens)
    }

    /// Image lattice `m · self` under an integer matrix.
    pub fn map(&self, m: &[IVec]) -> Lattice {
        let gens: Mat = self.basis.iter().map(|b| mat_vec(m, b)).collect();
        let rows = if m.is_empty() { 0 } else { m.len() };
        Lattice::from_generators(rows, &gens)
    }

    /// `{x ∈ domain : m·x ∈ target}` where `self` is the domain.
    pub fn preimage_under(&self, m: &[IVec], target: &Lattice) -> Lattice {
        let out_dim = m.len();
        assert_eq!(target.ambient(), out_dim, "matrix output/target mismatch");
        if self.rank() == 0 {
            return Lattice::zero(self.ambient);
        }
        // Images of our basis vectors, as rows: c_i = m·b_i.
        let image_rows: Mat = self.basis.iter().map(|b| mat_vec(m, b)).collect();
        // Solve y·C = z·B_target, i.e. (y, -z) in the left kernel of the
        // stacked matrix [C; B_target]; project onto the y coordinates.
        let mut stacked = image_rows;
        stacked.extend(target.basis.iter().cloned());
        let kernel = left_kernel(&stacked, out_dim);
        let gens: Mat = kernel
            .iter()
            .map(|row| {
                let mut v = vec![0; self.ambient];
                for (coeff, basis_row) in row.iter().take(self.rank()).zip(&self.basis) {
                    for j in 0..self.ambient {
                        v[j] += coeff * basis_row[j];
                    }
                }
                v
            })
            .collect();
        Lattice::from_generators(self.ambient, &gens)
    }

    /// Coset representatives of `sub` inside `self` (requires `sub ⊆ self`
    /// with finite index). Deterministic: mixed-radix enumeration over the
    /// diagonal of the coordinate HNF.
    pub fn transversal_over(&self, sub: &Lattice) -> Vec<IVec> {
        assert!(
            self.contains_lattice(sub),
            "transversal_over requires a sublattice"
        );
        assert_eq!(
            self.rank(),
            sub.rank(),
            "transversal_over requires finite index"
        );
        let k = self.rank();
        if k == 0 {
            return vec![vec![0; self.ambient]];
        }
        // Coordinates of sub's basis in terms of ours: rows of a k×k matrix.
        let coords: Mat = sub
            .basis
            .iter()
            .map(|b| self.coordinates(b).expect("sublattice coordinates"))
            .collect();
        let h = hnf(&coords, k);
        assert_eq!(h.len(), k, "full-rank coordinate matrix expected");
        let diag: Vec<Int> = (0..k).map(|i| h[i][i]).collect();
        let mut reps = Vec::new();
        let mut counter = vec![0; k];
        loop {
            let mut v = vec![0; self.ambient];
            for (y, basis_row) in counter.iter().zip(&self.basis) {
                for j in 0..self.ambient {
                    v[j] += y * basis_row[j];
                }
            }
            reps.push(v);
            // Increment the mixed-radix counter.
            let mut i = 0;
            loop {
                if i == k {
                    return reps;
                }
                counter[i] += 1;
                if counter[i] < diag[i] {
                    break;
                }
                counter[i] = 0;
                i += 1;
            }
        }
    }
}

/// Canonical Hermite-normal-form basis of the lattice generated by `gens`.
pub fn lattice_hnf(ambient: usize, gens: &[IVec]) -> Lattice {
    Lattice::from_generators(ambient, gens)
}

/// The index `[sup : sup ∩ sub]` together with a commensurability flag
/// (`true` when both `[sup : sup∩sub]` and `[sub : sup∩sub]` are finite,
/// i.e. the two lattices have equal rational spans).
pub fn lattice_index(sup: &Lattice, sub: &Lattice) -> (IndexValue, bool) {
    let inter = sup.intersect(sub);
    let forward = index_over(sup, &inter);
    let backward = index_over(sub, &inter);
    (forward, forward.is_finite() && backward.is_finite())
}

/// The index `[sup : sub]` for `sub ⊆ sup`: infinite when the rank drops,
/// otherwise the absolute determinant of the coordinate matrix.
pub fn index_over(sup: &Lattice, sub: &Lattice) -> IndexValue {
    assert!(
        sup.contains_lattice(sub),
        "index_over requires a sublattice"
    );
    if sub.rank() < sup.rank() {
        return IndexValue::Infinite;
    }
    let k = sup.rank();
    if k == 0 {
        return IndexValue::finite(1);
    }
    let coords: Mat = sub
        .basis()
        .iter()
        .map(|b| sup.coordinates(b).expect("sublattice coordinates"))
        .collect();
    let d = linalg::det(&coords).unsigned_abs();
    IndexValue::finite(u64::try_from(d).expect("index fits in u64"))
}

/// One simultaneous affine congruence `mat·u ≡ rhs (mod target)` on a vector
/// variable `u`.
#[derive(Debug, Clone)]
pub struct Congruence {
    pub mat: Mat,
    pub rhs: IVec,
    pub target: Lattice,
}

impl Congruence {
    pub fn new(mat: Mat, rhs: IVec, target: Lattice) -> Congruence {
        assert_eq!(mat.len(), rhs.len(), "congruence shape mismatch");
        assert_eq!(mat.len(), target.ambient(), "congruence target mismatch");
        Congruence { mat, rhs, target }
    }

    /// A congruence that holds for every `u` (zero rows).
    pub fn trivial() -> Congruence {
        Congruence {
            mat: vec![],
            rhs: vec![],
            target: Lattice::zero(0),
        }
    }

    /// Conjunction of several congruences on the same variable, by stacking
    /// the systems and taking a block-diagonal modulus.
    pub fn conjoin(parts: Vec<Congruence>) -> Congruence {
        let total_rows: usize = parts.iter().map(|p| p.mat.len()).sum();
        let mut mat = Vec::with_capacity(total_rows);
        let mut rhs = Vec::with_capacity(total_rows);
        let mut target_rows: Mat = Vec::new();
        let mut offset = 0;
        for part in &parts {
            mat.extend(part.mat.iter().cloned());
            rhs.extend(part.rhs.iter().cloned());
            for basis_row in part.target.basis() {
                let mut padded = vec![0; total_rows];
                padded[offset..offset + basis_row.len()].copy_from_slice(basis_row);
                target_rows.push(padded);
            }
            offset += part.mat.len();
        }
        Congruence {
            mat,
            rhs,
            target: Lattice::from_generators(total_rows, &target_rows),
        }
    }
}

/// Full solution of a congruence restricted to an affine coset of a lattice:
/// a particular solution plus the homogeneous sublattice of the domain.
#[derive(Debug, Clone)]
pub struct CongruenceSolution {
    pub particular: IVec,
    pub homogeneous: Lattice,
}

/// Solves `cong.mat · u ≡ cong.rhs (mod cong.target)` for `u ∈ offset +
/// domain`. Returns `None` when no solution exists in the coset.
pub fn solve_congruence_on_coset(
    domain: &Lattice,
    offset: &[Int],
    cong: &Congruence,
) -> Option<CongruenceSolution> {
    let homogeneous = domain.preimage_under(&cong.mat, &cong.target);
    // Residual the particular solution must absorb: rhs - mat·offset.
    let residual = vec_sub(&cong.rhs, &mat_vec(&cong.mat, offset));
    if cong.mat.is_empty() {
        return Some(CongruenceSolution {
            particular: offset.to_vec(),
            homogeneous,
        });
    }
    // Solve y·C + z·B_target = residual where C rows are images of the
    // domain basis.
    let image_rows: Mat = domain.basis().iter().map(|b| mat_vec(&cong.mat, b)).collect();
    let mut stacked = image_rows;
    stacked.extend(cong.target.basis().iter().cloned());
    let yz = solve_left(&stacked, cong.mat.len(), &residual)?;
    let mut particular = offset.to_vec();
    for (coeff, basis_row) in yz.iter().take(domain.rank()).zip(domain.basis()) {
        for j in 0..particular.len() {
            particular[j] += coeff * basis_row[j];
        }
    }
    Some(CongruenceSolution {
        particular,
        homogeneous,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_basis_of_sample_lattice() {
        // Generators (2,0),(1,3) → canonical basis {(1,3),(0,6)}, index 6.
        let l = lattice_hnf(2, &[vec![2, 0], vec![1, 3]]);
        assert_eq!(l.basis(), &[vec![1, 3], vec![0, 6]]);
        let (idx, comm) = lattice_index(&Lattice::standard(2), &l);
        assert_eq!(idx, IndexValue::Finite(6));
        assert!(comm);
    }

    #[test]
    fn index_and_commensurability_on_the_line() {
        // 2Z against 3Z inside Z: [2Z : 6Z] = 3, [3Z : 6Z] = 2, commensurable.
        let two = lattice_hnf(1, &[vec![2]]);
        let three = lattice_hnf(1, &[vec![3]]);
        let (fwd, comm) = lattice_index(&two, &three);
        assert_eq!(fwd, IndexValue::Finite(3));
        assert!(comm);
        let (bwd, comm2) = lattice_index(&three, &two);
        assert_eq!(bwd, IndexValue::Finite(2));
        assert!(comm2);
    }

    #[test]
    fn rank_deficient_index_is_infinite() {
        // The x-axis has infinite index in Z².
        let axis = lattice_hnf(2, &[vec![1, 0]]);
        let (idx, comm) = lattice_index(&Lattice::standard(2), &axis);
        assert_eq!(idx, IndexValue::Infinite);
        assert!(!comm);
    }

    #[test]
    fn intersection_of_scaled_lattices() {
        let two = lattice_hnf(1, &[vec![2]]);
        let three = lattice_hnf(1, &[vec![3]]);
        assert_eq!(two.intersect(&three), lattice_hnf(1, &[vec![6]]));

        let a = lattice_hnf(2, &[vec![2, 0], vec![0, 1]]);
        let b = lattice_hnf(2, &[vec![1, 1]]);
        // Vectors (t, t) with t even.
        assert_eq!(a.intersect(&b), lattice_hnf(2, &[vec![2, 2]]));
    }

    #[test]
    fn reduction_gives_canonical_representatives() {
        let l = lattice_hnf(2, &[vec![1, 3], vec![0, 6]]);
        let r = l.reduce(&[7, 2]);
        assert!(r[0] == 0 && (0..6).contains(&r[1]));
        // The difference must be in the lattice.
        assert!(l.contains(&vec_sub(&[7, 2], &r)));
        // Members reduce to zero.
        assert!(l.contains(&[1, 3]));
        assert!(l.contains(&[2, 0]));
        assert!(!l.contains(&[1, 0]));
    }

    #[test]
    fn transversal_enumerates_every_coset_once() {
        let sup = Lattice::standard(2);
        let sub = lattice_hnf(2, &[vec![2, 0], vec![1, 3]]);
        let reps = sup.transversal_over(&sub);
        assert_eq!(reps.len(), 6);
        for (i, a) in reps.iter().enumerate() {
            for b in reps.iter().skip(i + 1) {
                assert!(!sub.contains(&vec_sub(a, b)), "duplicate coset");
            }
        }
    }

    #[test]
    fn congruence_solving_on_cosets() {
        // Solve 2u ≡ 4 (mod 6) for u ∈ Z: particular solution u ≡ 2 or 5,
        // homogeneous sublattice 3Z.
        let cong = Congruence::new(vec![vec![2]], vec![4], lattice_hnf(1, &[vec![6]]));
        let sol = solve_congruence_on_coset(&Lattice::standard(1), &[0], &cong).expect("solvable");
        let u = sol.particular[0];
        assert_eq!((2 * u).rem_euclid(6), 4);
        assert_eq!(sol.homogeneous, lattice_hnf(1, &[vec![3]]));

        // 2u ≡ 1 (mod 6) has no solution.
        let bad = Congruence::new(vec![vec![2]], vec![1], lattice_hnf(1, &[vec![6]]));
        assert!(solve_congruence_on_coset(&Lattice::standard(1), &[0], &bad).is_none());
    }

    #[test]
    fn conjoined_congruences_constrain_jointly() {
        // u ≡ 1 (mod 2) and u ≡ 2 (mod 3) → u ≡ 5 (mod 6).
        let c1 = Congruence::new(vec![vec![1]], vec![1], lattice_hnf(1, &[vec![2]]));
        let c2 = Congruence::new(vec![vec![1]], vec![2], lattice_hnf(1, &[vec![3]]));
        let joint = Congruence::conjoin(vec![c1, c2]);
        let sol =
            solve_congruence_on_coset(&Lattice::standard(1), &[0], &joint).expect("solvable");
        assert_eq!(sol.particular[0].rem_euclid(6), 5);
        assert_eq!(sol.homogeneous, lattice_hnf(1, &[vec![6]]));
    }

    #[test]
    fn preimage_under_matrix() {
        // {w ∈ Z² : (I - R)w ∈ 0} for the quarter turn R: only w = 0.
        let rot = vec![vec![0, -1], vec![1, 0]];
        let eye = linalg::mat_identity(2);
        let m = linalg::mat_sub(&eye, &rot);
        let pre = Lattice::standard(2).preimage_under(&m, &Lattice::zero(2));
        assert_eq!(pre.rank(), 0);
        // {w ∈ Z² : (I - R)w ∈ Z²} is everything.
        let pre_full = Lattice::standard(2).preimage_under(&m, &Lattice::standard(2));
        assert!(pre_full.is_full_rank());
    }
}
