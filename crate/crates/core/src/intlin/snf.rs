use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::abgroup::FinAbGroup;
use super::matrix::IntMatrix;

/// Smith normal form `U·A·V = D` of an integer matrix.
///
/// `U` and `V` are unimodular and `D` is diagonal with nonnegative entries
/// satisfying `d_1 | d_2 | …`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
}

impl SmithForm {
    /// Diagonal entries of `D`, including trailing zeros.
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.d.rows().min(self.d.cols()))
            .map(|i| self.d[(i, i)].clone())
            .collect()
    }

    /// Number of nonzero diagonal entries.
    pub fn rank(&self) -> usize {
        self.diagonal().iter().filter(|d| !d.is_zero()).count()
    }

    /// Checks `U·A·V = D` against the original matrix.
    pub fn verifies(&self, a: &IntMatrix) -> bool {
        &(&self.u * a) * &self.v == self.d
    }
}

/// Position and value of the smallest nonzero entry (by absolute value) of
/// the trailing submatrix starting at `(k, k)`; ties broken by row, then
/// column. The fixed tie-break keeps the whole reduction deterministic.
fn pivot(a: &IntMatrix, k: usize) -> Option<(usize, usize)> {
    let mut best: Option<(BigInt, usize, usize)> = None;
    for i in k..a.rows() {
        for j in k..a.cols() {
            let v = a[(i, j)].abs();
            if v.is_zero() {
                continue;
            }
            let better = match &best {
                None => true,
                Some((b, _, _)) => v < *b,
            };
            if better {
                best = Some((v, i, j));
            }
        }
    }
    best.map(|(_, i, j)| (i, j))
}

/// Smith normal form by pivoting on the smallest nonzero entry.
///
/// The divisibility chain is enforced before each block is split off: the
/// pivot must divide every entry of the trailing submatrix, otherwise an
/// offending row is folded into the pivot row and the reduction restarts.
/// Entry growth stays controlled because pivots strictly shrink.
pub fn smith_normal_form(a: &IntMatrix) -> SmithForm {
    let (m, n) = (a.rows(), a.cols());
    let mut d = a.clone();
    let mut u = IntMatrix::identity(m);
    let mut v = IntMatrix::identity(n);

    let steps = m.min(n);
    for k in 0..steps {
        'block: loop {
            let Some((pi, pj)) = pivot(&d, k) else {
                break 'block; // trailing submatrix is zero
            };
            d.swap_rows(k, pi);
            u.swap_rows(k, pi);
            d.swap_cols(k, pj);
            v.swap_cols(k, pj);

            // Euclidean reduction of the pivot row and column. Any nonzero
            // remainder becomes a strictly smaller pivot on the next pass.
            let mut dirty = false;
            for i in k + 1..m {
                if d[(i, k)].is_zero() {
                    continue;
                }
                let q = &d[(i, k)] / &d[(k, k)];
                if !q.is_zero() {
                    let c = -q;
                    d.add_multiple_of_row(i, k, &c);
                    u.add_multiple_of_row(i, k, &c);
                }
                if !d[(i, k)].is_zero() {
                    dirty = true;
                }
            }
            for j in k + 1..n {
                if d[(k, j)].is_zero() {
                    continue;
                }
                let q = &d[(k, j)] / &d[(k, k)];
                if !q.is_zero() {
                    let c = -q;
                    d.add_multiple_of_col(j, k, &c);
                    v.add_multiple_of_col(j, k, &c);
                }
                if !d[(k, j)].is_zero() {
                    dirty = true;
                }
            }
            if dirty {
                continue 'block;
            }

            // Row and column are clear; the pivot must now divide the rest
            // of the submatrix for the chain d_k | d_{k+1} to hold.
            let mut offender = None;
            'scan: for i in k + 1..m {
                for j in k + 1..n {
                    if !(&d[(i, j)] % &d[(k, k)]).is_zero() {
                        offender = Some(i);
                        break 'scan;
                    }
                }
            }
            match offender {
                Some(i) => {
                    let one = BigInt::from(1);
                    d.add_multiple_of_row(k, i, &one);
                    u.add_multiple_of_row(k, i, &one);
                }
                None => break 'block,
            }
        }
        if d[(k, k)].is_negative() {
            d.negate_row(k);
            u.negate_row(k);
        }
    }
    SmithForm { u, d, v }
}

/// Cokernel `Z^rows / image(A)` in canonical form, read off the Smith
/// diagonal: each nonzero entry contributes a cyclic factor, each zero row
/// a free `Z` summand.
pub fn cokernel(a: &IntMatrix) -> FinAbGroup {
    let snf = smith_normal_form(a);
    let diag = snf.diagonal();
    let free_from_missing_diag = a.rows().saturating_sub(diag.len());
    let mut orders: Vec<BigInt> = diag;
    orders.extend(std::iter::repeat(BigInt::zero()).take(free_from_missing_diag));
    FinAbGroup::from_orders(&orders)
}
