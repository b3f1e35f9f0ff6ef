//! Integral quadratic lattices with a Fujiki constant.
//!
//! A [`BBLattice`] packages the Gram matrix of a nondegenerate symmetric
//! bilinear form `q` on `Z^rank` together with a positive rational
//! constant `c` and a half-dimension `n`. The top intersection number of
//! `2n` degree-two classes expands as `c` times a sum over perfect
//! matchings of pairwise `q`-values; with all arguments equal this
//! collapses to the closed form `c · (2n)!/(2^n·n!) · q(x)^n`.
//!
//! The built-in catalog is deliberately small: the hyperbolic plane `U`,
//! rank-one lattices `⟨k⟩`, direct sums of those, and the one named
//! instance `U^⊕3 ⊕ ⟨−6⟩` of a Kummer fourfold. Anything else is caller
//! data.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::intlin::IntMatrix;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LatticeError {
    #[error("Gram matrix must be symmetric")]
    NotSymmetric,
    #[error("Gram matrix must be nondegenerate")]
    Degenerate,
    #[error("Fujiki constant must be positive")]
    NonPositiveConstant,
    #[error("divisibility of the zero vector is undefined")]
    ZeroVector,
    #[error("expected {expected} vectors of length {len}, got {got}")]
    WrongArity { expected: usize, len: usize, got: usize },
    #[error("matching enumeration capped at half-dimension 6, got {0}")]
    HalfDimTooLarge(usize),
}

/// A nondegenerate integral lattice `(Z^rank, q)` decorated with a Fujiki
/// constant `c > 0` and a half-dimension `n` (the ambient geometry has
/// dimension `2n`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BBLattice {
    gram: IntMatrix,
    fujiki_constant: BigRational,
    half_dim: usize,
}

impl BBLattice {
    pub fn new(
        gram: IntMatrix,
        fujiki_constant: BigRational,
        half_dim: usize,
    ) -> Result<Self, LatticeError> {
        if !gram.is_symmetric() {
            return Err(LatticeError::NotSymmetric);
        }
        if gram.determinant().map_err(|_| LatticeError::NotSymmetric)?.is_zero() {
            return Err(LatticeError::Degenerate);
        }
        if !fujiki_constant.is_positive() {
            return Err(LatticeError::NonPositiveConstant);
        }
        Ok(Self { gram, fujiki_constant, half_dim })
    }

    /// The hyperbolic plane `U` with Gram matrix `[[0,1],[1,0]]`.
    pub fn hyperbolic_gram() -> IntMatrix {
        IntMatrix::from_i64_rows(&[&[0, 1], &[1, 0]])
    }

    /// Rank-one lattice `⟨k⟩`.
    pub fn line_gram(k: i64) -> IntMatrix {
        IntMatrix::from_i64_rows(&[&[k]])
    }

    /// Orthogonal direct sum of Gram matrices.
    pub fn direct_sum_gram(blocks: &[IntMatrix]) -> IntMatrix {
        let n: usize = blocks.iter().map(IntMatrix::rows).sum();
        let mut g = IntMatrix::zero(n, n);
        let mut off = 0;
        for b in blocks {
            for i in 0..b.rows() {
                for j in 0..b.cols() {
                    g[(off + i, off + j)] = b[(i, j)].clone();
                }
            }
            off += b.rows();
        }
        g
    }

    /// The rank-7 lattice `U^⊕3 ⊕ ⟨−6⟩` with Fujiki constant 3 and
    /// half-dimension 2 — the second cohomology of a Kummer fourfold.
    pub fn kummer_fourfold() -> Self {
        let gram = Self::direct_sum_gram(&[
            Self::hyperbolic_gram(),
            Self::hyperbolic_gram(),
            Self::hyperbolic_gram(),
            Self::line_gram(-6),
        ]);
        Self::new(gram, BigRational::from_integer(3.into()), 2).expect("valid by construction")
    }

    pub fn rank(&self) -> usize {
        self.gram.rows()
    }

    pub fn gram(&self) -> &IntMatrix {
        &self.gram
    }

    pub fn fujiki_constant(&self) -> &BigRational {
        &self.fujiki_constant
    }

    pub fn half_dim(&self) -> usize {
        self.half_dim
    }

    /// The bilinear pairing `q(x, y) = xᵀ·G·y`.
    pub fn pairing(&self, x: &[BigInt], y: &[BigInt]) -> BigInt {
        assert_eq!(x.len(), self.rank());
        assert_eq!(y.len(), self.rank());
        self.gram
            .mul_vec(y)
            .iter()
            .zip(x)
            .map(|(gy, xi)| xi * gy)
            .sum()
    }

    pub fn square(&self, x: &[BigInt]) -> BigInt {
        self.pairing(x, x)
    }

    /// `div(x) = gcd { q(x, y) : y ∈ Z^rank }`, the gcd of the entries of
    /// `G·x`.
    pub fn divisibility(&self, x: &[BigInt]) -> Result<BigInt, LatticeError> {
        if x.iter().all(Zero::is_zero) {
            return Err(LatticeError::ZeroVector);
        }
        Ok(self
            .gram
            .mul_vec(x)
            .into_iter()
            .fold(BigInt::zero(), |acc, e| acc.gcd(&e)))
    }

    /// Matching-sum expansion of the top intersection number of `2n`
    /// degree-two classes:
    ///
    /// `c · Σ over perfect matchings σ of {1..2n} of Π q(x_σ(2i−1), x_σ(2i))`
    ///
    /// with every matching counted exactly once. The enumeration pairs the
    /// smallest unmatched index with each larger index, so it is canonical
    /// and deterministic; half-dimension is capped at 6 (10395 matchings).
    pub fn fujiki_product(&self, vectors: &[Vec<BigInt>]) -> Result<BigRational, LatticeError> {
        let n = self.half_dim;
        if n > 6 {
            return Err(LatticeError::HalfDimTooLarge(n));
        }
        if vectors.len() != 2 * n || vectors.iter().any(|v| v.len() != self.rank()) {
            return Err(LatticeError::WrongArity {
                expected: 2 * n,
                len: self.rank(),
                got: vectors.len(),
            });
        }
        // pairwise q-values up front
        let m = 2 * n;
        let mut q = vec![vec![BigInt::zero(); m]; m];
        for i in 0..m {
            for j in i..m {
                let val = self.pairing(&vectors[i], &vectors[j]);
                q[i][j] = val.clone();
                q[j][i] = val;
            }
        }
        let mut used = vec![false; m];
        let sum = matching_sum(&q, &mut used);
        Ok(&self.fujiki_constant * BigRational::from_integer(sum))
    }

    /// The same lattice with the Fujiki constant divided by the order of a
    /// group acting trivially on it. The bilinear form is reported as-is,
    /// even when the quotient form is imprimitive; no rescaling is applied.
    pub fn quotient(&self, group_order: u64) -> Self {
        assert!(group_order >= 1, "group order must be positive");
        Self {
            gram: self.gram.clone(),
            fujiki_constant: &self.fujiki_constant
                / BigRational::from_integer(BigInt::from(group_order)),
            half_dim: self.half_dim,
        }
    }
}

fn matching_sum(q: &[Vec<BigInt>], used: &mut [bool]) -> BigInt {
    let Some(first) = used.iter().position(|u| !u) else {
        return BigInt::one();
    };
    used[first] = true;
    let mut total = BigInt::zero();
    for partner in first + 1..used.len() {
        if used[partner] {
            continue;
        }
        used[partner] = true;
        total += &q[first][partner] * matching_sum(q, used);
        used[partner] = false;
    }
    used[first] = false;
    total
}

/// Whether a group order equals the square of a Fujiki constant. The
/// relative automorphism group of a Lagrangian fibration has order `c²`
/// for every known deformation type, so this is the basic sanity gate for
/// quotient data.
pub fn check_order_is_c_squared(c: &BigRational, group_order: u64) -> bool {
    c * c == BigRational::from_integer(BigInt::from(group_order))
}

/// Number of perfect matchings of `2n` points: `(2n)!/(2^n·n!) = (2n−1)!!`.
pub fn matching_count(n: usize) -> BigInt {
    let mut acc = BigInt::one();
    let mut k = BigInt::one();
    for _ in 0..n {
        acc *= &k;
        k += 2;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vec_i64(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn divisibility_in_hyperbolic_plane() {
        let u = BBLattice::new(BBLattice::hyperbolic_gram(), rat(1, 1), 1).unwrap();
        assert_eq!(u.divisibility(&vec_i64(&[1, 0])).unwrap(), BigInt::one());
    }

    #[test]
    fn divisibility_in_scaled_line() {
        let l = BBLattice::new(BBLattice::line_gram(-6), rat(1, 1), 1).unwrap();
        assert_eq!(l.divisibility(&vec_i64(&[1])).unwrap(), BigInt::from(6));
    }

    #[test]
    fn divisibility_mixed_vector() {
        // x = e_1 + 3·g in U^⊕3 ⊕ ⟨−6⟩: G·x = (0,1,0,0,0,0,−18), gcd = 1
        let k = BBLattice::kummer_fourfold();
        let x = vec_i64(&[1, 0, 0, 0, 0, 0, 3]);
        assert_eq!(k.divisibility(&x).unwrap(), BigInt::one());
        // 2x has divisibility 2
        let x2 = vec_i64(&[2, 0, 0, 0, 0, 0, 6]);
        assert_eq!(k.divisibility(&x2).unwrap(), BigInt::from(2));
    }

    #[test]
    fn zero_vector_rejected() {
        let u = BBLattice::new(BBLattice::hyperbolic_gram(), rat(1, 1), 1).unwrap();
        assert_eq!(
            u.divisibility(&vec_i64(&[0, 0])).unwrap_err(),
            LatticeError::ZeroVector
        );
    }

    #[test]
    fn degenerate_gram_rejected() {
        let g = IntMatrix::from_i64_rows(&[&[1, 1], &[1, 1]]);
        assert_eq!(
            BBLattice::new(g, rat(1, 1), 1).unwrap_err(),
            LatticeError::Degenerate
        );
    }

    #[test]
    fn single_matching_is_plain_pairing() {
        let u = BBLattice::new(BBLattice::hyperbolic_gram(), rat(3, 1), 1).unwrap();
        let e = vec_i64(&[1, 0]);
        let f = vec_i64(&[0, 1]);
        let got = u.fujiki_product(&[e, f]).unwrap();
        assert_eq!(got, rat(3, 1));
    }

    #[test]
    fn equal_arguments_closed_form() {
        // all arguments x: c · (2n−1)!! · q(x)^n
        let k = BBLattice::kummer_fourfold();
        let x = vec_i64(&[1, 1, 0, 0, 0, 0, 0]); // q(x) = 2
        let got = k.fujiki_product(&[x.clone(), x.clone(), x.clone(), x]).unwrap();
        // n = 2: 3 matchings, q(x)^2 = 4, c = 3 → 36
        assert_eq!(got, rat(36, 1));
        assert_eq!(matching_count(2), BigInt::from(3));
    }

    #[test]
    fn isotropic_split_closed_form() {
        // h isotropic, n copies of h and of x: only the n! mixed matchings
        // survive, giving c · n! · q(h,x)^n
        let k = BBLattice::kummer_fourfold();
        let h = vec_i64(&[1, 0, 0, 0, 0, 0, 0]); // q(h,h) = 0
        let x = vec_i64(&[0, 1, 0, 0, 0, 0, 0]); // q(h,x) = 1
        let got = k
            .fujiki_product(&[h.clone(), h, x.clone(), x])
            .unwrap();
        assert_eq!(got, rat(6, 1)); // 3 · 2! · 1
    }

    #[test]
    fn wrong_arity_rejected() {
        let k = BBLattice::kummer_fourfold();
        let x = vec_i64(&[1, 0, 0, 0, 0, 0, 0]);
        assert!(matches!(
            k.fujiki_product(&[x.clone(), x.clone(), x]),
            Err(LatticeError::WrongArity { expected: 4, got: 3, .. })
        ));
    }

    #[test]
    fn quotient_divides_constant() {
        let k = BBLattice::kummer_fourfold();
        let q = k.quotient(9);
        assert_eq!(*q.fujiki_constant(), rat(1, 3));
        assert_eq!(q.gram(), k.gram());
        // composition: /3 then /3 equals /9
        assert_eq!(k.quotient(3).quotient(3), q);
        // order 1 is the identity
        assert_eq!(k.quotient(1), k);
    }

    #[test]
    fn c_squared_gate() {
        assert!(check_order_is_c_squared(&rat(3, 1), 9));
        assert!(check_order_is_c_squared(&rat(1, 1), 1));
        assert!(!check_order_is_c_squared(&rat(2, 1), 2));
        assert!(!check_order_is_c_squared(&rat(3, 1), 16));
    }

    #[test]
    fn matching_counts() {
        let expected = [1i64, 1, 3, 15, 105, 945, 10395];
        for (n, e) in expected.iter().enumerate() {
            assert_eq!(matching_count(n), BigInt::from(*e));
        }
    }
}
