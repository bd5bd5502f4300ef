//! Exact integer vectors, matrices, and Hermite normal form.
//!
//! Conventions used throughout the crate:
//!
//! * translation vectors are column vectors stored as `Vec<i64>`;
//! * matrices are row-major and act on the left, `mat_vec(m, v) = m·v`;
//! * a *row system* is a list of row vectors, and reductions bring it to row
//!   Hermite normal form: echelon shape with strictly increasing pivot
//!   columns, positive pivots, and every entry above a pivot reduced into
//!   `[0, pivot)`. Reading the same data column-wise gives the column-style
//!   normal form with entries right of each pivot reduced, so the basis
//!   vectors themselves are identical either way.
//!
//! Overflow checks are enabled workspace-wide, so any arithmetic that would
//! exceed `i64` panics instead of wrapping.

pub type Int = i64;
pub type IVec = Vec<Int>;
pub type Mat = Vec<IVec>;

/// `m·v` for a row-major matrix acting on a column vector.
pub fn mat_vec(m: &[IVec], v: &[Int]) -> IVec {
    m.iter()
        .map(|row| {
            assert_eq!(row.len(), v.len(), "matrix/vector shape mismatch");
            row.iter().zip(v).map(|(a, b)| a * b).sum()
        })
        .collect()
}

/// Matrix product `a·b` (row-major).
pub fn mat_mul(a: &[IVec], b: &[IVec]) -> Mat {
    let cols = if b.is_empty() { 0 } else { b[0].len() };
    a.iter()
        .map(|row| {
            assert_eq!(row.len(), b.len(), "matrix shapes do not compose");
            (0..cols)
                .map(|j| row.iter().zip(b).map(|(x, brow)| x * brow[j]).sum())
                .collect()
        })
        .collect()
}

pub fn mat_identity(n: usize) -> Mat {
    (0..n)
        .map(|i| (0..n).map(|j| Int::from(i == j)).collect())
        .collect()
}

pub fn mat_transpose(m: &[IVec]) -> Mat {
    let cols = if m.is_empty() { 0 } else { m[0].len() };
    (0..cols)
        .map(|j| m.iter().map(|row| row[j]).collect())
        .collect()
}

pub fn mat_sub(a: &[IVec], b: &[IVec]) -> Mat {
    a.iter()
        .zip(b)
        .map(|(ra, rb)| ra.iter().zip(rb).map(|(x, y)| x - y).collect())
        .collect()
}

pub fn vec_add(a: &[Int], b: &[Int]) -> IVec {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn vec_sub(a: &[Int], b: &[Int]) -> IVec {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn vec_neg(a: &[Int]) -> IVec {
    a.iter().map(|x| -x).collect()
}

pub fn vec_is_zero(a: &[Int]) -> bool {
    a.iter().all(|&x| x == 0)
}

pub fn zero_vec(n: usize) -> IVec {
    vec![0; n]
}

/// `i`-th standard basis vector of length `n`.
pub fn unit_vec(n: usize, i: usize) -> IVec {
    let mut v = vec![0; n];
    v[i] = 1;
    v
}

/// Determinant of an integer square matrix over `GL`-scale inputs, by
/// fraction-free row reduction on an `i128` copy (exact).
pub fn det(m: &[IVec]) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    assert!(m.iter().all(|r| r.len() == n), "determinant needs a square matrix");
    let mut a: Vec<Vec<i128>> = m
        .iter()
        .map(|r| r.iter().map(|&x| i128::from(x)).collect())
        .collect();
    let mut sign = 1i128;
    let mut denom = 1i128;
    for c in 0..n {
        let pivot_row = (c..n).find(|&r| a[r][c] != 0);
        let Some(p) = pivot_row else { return 0 };
        if p != c {
            a.swap(p, c);
            sign = -sign;
        }
        for r in c + 1..n {
            for j in c + 1..n {
                a[r][j] = (a[c][c] * a[r][j] - a[r][c] * a[c][j]) / denom;
            }
            a[r][c] = 0;
        }
        denom = a[c][c];
    }
    sign * a[n - 1][n - 1]
}

/// Row Hermite normal form of `rows` (each of length `width`), together with
/// a unimodular transform `u` such that `u · rows = h`. Zero rows of `h` sink
/// to the bottom; the corresponding rows of `u` span the left kernel.
pub fn hnf_with_transform(rows: &[IVec], width: usize) -> (Mat, Mat) {
    for r in rows {
        assert_eq!(r.len(), width, "row width mismatch");
    }
    let mut h: Mat = rows.to_vec();
    let mut u = mat_identity(rows.len());
    let mut pivot_row = 0usize;
    for c in 0..width {
        // Gcd-eliminate column c among rows >= pivot_row.
        loop {
            let mut best: Option<usize> = None;
            for i in pivot_row..h.len() {
                if h[i][c] != 0 {
                    best = match best {
                        Some(b) if h[b][c].abs() <= h[i][c].abs() => Some(b),
                        _ => Some(i),
                    };
                }
            }
            let Some(b) = best else { break };
            h.swap(pivot_row, b);
            u.swap(pivot_row, b);
            let mut done = true;
            for i in pivot_row + 1..h.len() {
                if h[i][c] != 0 {
                    let q = h[i][c].div_euclid(h[pivot_row][c]);
                    row_sub_mul(&mut h, i, pivot_row, q);
                    row_sub_mul(&mut u, i, pivot_row, q);
                    if h[i][c] != 0 {
                        done = false;
                    }
                }
            }
            if done {
                break;
            }
        }
        if pivot_row < h.len() && h[pivot_row][c] != 0 {
            if h[pivot_row][c] < 0 {
                row_negate(&mut h, pivot_row);
                row_negate(&mut u, pivot_row);
            }
            // Reduce the entries above the pivot into [0, pivot).
            let p = h[pivot_row][c];
            for i in 0..pivot_row {
                let q = h[i][c].div_euclid(p);
                if q != 0 {
                    row_sub_mul(&mut h, i, pivot_row, q);
                    row_sub_mul(&mut u, i, pivot_row, q);
                }
            }
            pivot_row += 1;
        }
    }
    (h, u)
}

/// Canonical row Hermite normal form with zero rows removed.
pub fn hnf(rows: &[IVec], width: usize) -> Mat {
    let (h, _) = hnf_with_transform(rows, width);
    h.into_iter().filter(|r| !vec_is_zero(r)).collect()
}

/// Basis (in canonical HNF) of the left kernel `{x : x·rows = 0}`.
pub fn left_kernel(rows: &[IVec], width: usize) -> Mat {
    let (h, u) = hnf_with_transform(rows, width);
    let kernel_rows: Mat = h
        .iter()
        .zip(&u)
        .filter(|(hr, _)| vec_is_zero(hr))
        .map(|(_, ur)| ur.clone())
        .collect();
    hnf(&kernel_rows, rows.len())
}

/// Solves `y · rows = target` over the integers, if possible.
pub fn solve_left(rows: &[IVec], width: usize, target: &[Int]) -> Option<IVec> {
    assert_eq!(target.len(), width, "target width mismatch");
    let (h, u) = hnf_with_transform(rows, width);
    // Back-substitute against the echelon rows of h.
    let mut residual = target.to_vec();
    let mut z = vec![0; h.len()];
    for (i, row) in h.iter().enumerate() {
        let Some(c) = row.iter().position(|&x| x != 0) else { continue };
        let q = residual[c] / row[c];
        if q * row[c] != residual[c] {
            return None;
        }
        z[i] = q;
        for j in 0..width {
            residual[j] -= q * row[j];
        }
    }
    if !vec_is_zero(&residual) {
        return None;
    }
    // y = z·u.
    let mut y = vec![0; rows.len()];
    for (i, &zi) in z.iter().enumerate() {
        if zi != 0 {
            for j in 0..rows.len() {
                y[j] += zi * u[i][j];
            }
        }
    }
    Some(y)
}

fn row_sub_mul(m: &mut Mat, dst: usize, src: usize, q: Int) {
    if q == 0 {
        return;
    }
    for j in 0..m[dst].len() {
        m[dst][j] -= q * m[src][j];
    }
}

fn row_negate(m: &mut Mat, row: usize) {
    for x in &mut m[row] {
        *x = -*x;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hnf_of_sample_generators() {
        // Generators (2,0) and (1,3) reduce to the canonical basis
        // {(1,3),(0,6)} with determinant 6.
        let h = hnf(&[vec![2, 0], vec![1, 3]], 2);
        assert_eq!(h, vec![vec![1, 3], vec![0, 6]]);
        assert_eq!(det(&h), 6);
    }

    #[test]
    fn hnf_is_canonical_under_regeneration() {
        let h = hnf(&[vec![2, 0], vec![1, 3]], 2);
        // Different generating sets of the same lattice agree after reduction.
        let alt = hnf(&[vec![1, 3], vec![3, 3], vec![0, 6]], 2);
        assert_eq!(h, alt);
        // Reducing a reduced basis is the identity.
        assert_eq!(hnf(&h, 2), h);
    }

    #[test]
    fn transform_is_consistent() {
        let rows = vec![vec![4, 2, 0], vec![6, 0, 2], vec![2, 2, 2]];
        let (h, u) = hnf_with_transform(&rows, 3);
        assert_eq!(mat_mul(&u, &rows), h);
        // The transform must be unimodular.
        assert_eq!(det(&u).abs(), 1);
    }

    #[test]
    fn left_kernel_annihilates() {
        let rows = vec![vec![1, 2], vec![2, 4], vec![0, 1]];
        let k = left_kernel(&rows, 2);
        assert_eq!(k.len(), 1);
        for row in &k {
            let combo: IVec = (0..2)
                .map(|j| row.iter().zip(&rows).map(|(c, r)| c * r[j]).sum())
                .collect();
            assert!(vec_is_zero(&combo));
        }
    }

    #[test]
    fn solve_left_finds_integer_solutions() {
        let rows = vec![vec![2, 0], vec![1, 3]];
        let y = solve_left(&rows, 2, &[4, 6]).expect("solvable");
        let combo: IVec = (0..2)
            .map(|j| y.iter().zip(&rows).map(|(c, r)| c * r[j]).sum())
            .collect();
        assert_eq!(combo, vec![4, 6]);
        // (1,1) is not in the lattice spanned by (2,0),(1,3).
        assert!(solve_left(&rows, 2, &[1, 1]).is_none());
    }

    #[test]
    fn det_matches_cofactor_values() {
        assert_eq!(det(&[vec![0, -1], vec![1, 0]]), 1);
        assert_eq!(det(&[vec![2, 0], vec![0, 3]]), 6);
        assert_eq!(det(&[vec![1, 2], vec![2, 4]]), 0);
        assert_eq!(
            det(&[vec![1, 2, 3], vec![4, 5, 6], vec![7, 8, 10]]),
            -3
        );
    }
}
