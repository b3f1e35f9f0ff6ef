//! Polarized complex tori through their integral shadow.
//!
//! A polarized torus of dimension `g` is represented by a nondegenerate
//! alternating form `E` on the lattice `Z^{2g}`. Everything analytic is
//! stripped away: the polarization isogeny is the matrix `E` itself, the
//! kernel of a torus isogeny `F` is the lattice cokernel `Z^{2g}/F(Z^{2g})`
//! (the two are isomorphic via `F⁻¹(Λ)/Λ ≅ Λ/F(Λ)`), and torsion points
//! are integer vectors with a cleared denominator.
//!
//! The symplectic normal form brings `E` to block shape `[[0, D], [−D, 0]]`
//! with `D = diag(d_1, …, d_g)` and `d_1 | … | d_g` by a unimodular change
//! of basis; `(d_1, …, d_g)` is the polarization type.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::intlin::{cokernel, smith_normal_form, FinAbGroup, IntMatrix};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TorusError {
    #[error("form must be square of even size, got {0}x{1}")]
    OddOrRectangular(usize, usize),
    #[error("form must be alternating (antisymmetric with zero diagonal)")]
    NotAlternating,
    #[error("form must be nondegenerate")]
    Degenerate,
    #[error("polarization type must be a positive divisibility chain")]
    BadType,
    #[error("map is not an isogeny (zero determinant or not square)")]
    NotIsogeny,
    #[error("dual polarization is only defined for abelian surfaces (4x4)")]
    NotSurface,
    #[error("scaled inverse is not integral; the degree product does not match the form")]
    NonIntegralDual,
    #[error("torsion point denominator must be positive")]
    BadDenominator,
}

/// A lattice map between tori of the same dimension, e.g. a polarization
/// isogeny or a multiplication endomorphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorusHom {
    matrix: IntMatrix,
}

impl TorusHom {
    pub fn new(matrix: IntMatrix) -> Self {
        Self { matrix }
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    /// An isogeny is a square map with nonzero determinant.
    pub fn is_isogeny(&self) -> bool {
        self.matrix.is_square()
            && !self.matrix.determinant().map(|d| d.is_zero()).unwrap_or(true)
    }

    /// Degree `|det F|`; the order of the kernel.
    pub fn degree(&self) -> Result<BigInt, TorusError> {
        if !self.is_isogeny() {
            return Err(TorusError::NotIsogeny);
        }
        Ok(self.matrix.determinant().expect("square").abs())
    }
}

/// Kernel of the torus map induced by an isogeny, computed as the lattice
/// cokernel `Z^{2g} / F(Z^{2g})`.
pub fn isogeny_kernel(f: &TorusHom) -> Result<FinAbGroup, TorusError> {
    if !f.is_isogeny() {
        return Err(TorusError::NotIsogeny);
    }
    Ok(cokernel(&f.matrix))
}

/// `(d_1·d_g)·φ⁻¹`, the isogeny in the opposite direction with
/// `φ̌·φ = φ·φ̌ = (d_1·d_g)·I`. Only defined for abelian surfaces; the
/// scaled inverse must be integral, otherwise the type data was invalid.
pub fn dual_polarization(phi: &TorusHom, degree_product: &BigInt) -> Result<TorusHom, TorusError> {
    let m = &phi.matrix;
    if !(m.is_square() && m.rows() == 4) {
        return Err(TorusError::NotSurface);
    }
    let det = m.determinant().expect("square matrix");
    if det.is_zero() {
        return Err(TorusError::NotIsogeny);
    }
    let adj = m.adjugate().expect("square matrix");
    let mut out = IntMatrix::zero(4, 4);
    for i in 0..4 {
        for j in 0..4 {
            let num = &adj[(i, j)] * degree_product;
            if !(&num % &det).is_zero() {
                return Err(TorusError::NonIntegralDual);
            }
            out[(i, j)] = num / &det;
        }
    }
    Ok(TorusHom::new(out))
}

/// A rank-`2g` lattice with a nondegenerate alternating integral form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolarizedTorus {
    g: usize,
    form: IntMatrix,
}

impl PolarizedTorus {
    pub fn new(form: IntMatrix) -> Result<Self, TorusError> {
        if !form.is_square() || form.rows() % 2 != 0 || form.rows() == 0 {
            return Err(TorusError::OddOrRectangular(form.rows(), form.cols()));
        }
        if !form.is_antisymmetric() {
            return Err(TorusError::NotAlternating);
        }
        if form.determinant().expect("square").is_zero() {
            return Err(TorusError::Degenerate);
        }
        Ok(Self { g: form.rows() / 2, form })
    }

    /// The torus with form `[[0, D], [−D, 0]]` for `D = diag(d_1, …, d_g)`.
    /// For `g = 2` this is exactly the matrix of the polarization isogeny
    /// of an abelian surface of type `(d_1, d_2)` in a polarization basis.
    pub fn of_type(ds: &[BigInt]) -> Result<Self, TorusError> {
        if ds.is_empty()
            || ds.iter().any(|d| !d.is_positive())
            || ds.windows(2).any(|w| !(&w[1] % &w[0]).is_zero())
        {
            return Err(TorusError::BadType);
        }
        let g = ds.len();
        let mut form = IntMatrix::zero(2 * g, 2 * g);
        for (i, d) in ds.iter().enumerate() {
            form[(i, g + i)] = d.clone();
            form[(g + i, i)] = -d;
        }
        Self::new(form)
    }

    /// Principal polarization: type `(1, …, 1)`.
    pub fn standard_symplectic(g: usize) -> Self {
        Self::of_type(&vec![BigInt::one(); g]).expect("valid type")
    }

    pub fn g(&self) -> usize {
        self.g
    }

    pub fn form(&self) -> &IntMatrix {
        &self.form
    }

    /// The polarization form read as a lattice map `H_1(S) → H_1(Š)`.
    pub fn polarization_isogeny(&self) -> TorusHom {
        TorusHom::new(self.form.clone())
    }

    /// The type `(d_1, …, d_g)` of the alternating form.
    pub fn polarization_type(&self) -> Vec<BigInt> {
        symplectic_normal_form(&self.form)
            .expect("validated on construction")
            .diag
    }
}

/// Result of the symplectic reduction: `transformᵀ · E · transform` is
/// block-diagonal with `g` blocks `[[0, d_k], [−d_k, 0]]` in interleaved
/// order, `d_1 | d_2 | … | d_g` all positive.
#[derive(Clone, Debug)]
pub struct SymplecticForm {
    pub diag: Vec<BigInt>,
    pub transform: IntMatrix,
}

impl SymplecticForm {
    /// The interleaved block matrix this reduction produces.
    pub fn interleaved(&self) -> IntMatrix {
        let g = self.diag.len();
        let mut m = IntMatrix::zero(2 * g, 2 * g);
        for (k, d) in self.diag.iter().enumerate() {
            m[(2 * k, 2 * k + 1)] = d.clone();
            m[(2 * k + 1, 2 * k)] = -d;
        }
        m
    }
}

/// Brings a nondegenerate alternating integer matrix to symplectic normal
/// form by a unimodular congruence `E ↦ BᵀEB`.
///
/// Mirrors the Smith reduction: the pivot is the smallest nonzero pairing
/// (ties broken lexicographically), pairings in the pivot rows are reduced
/// Euclideanly, and before a hyperbolic block is split off the pivot must
/// divide every remaining pairing — this is what forces the divisibility
/// chain.
pub fn symplectic_normal_form(e: &IntMatrix) -> Result<SymplecticForm, TorusError> {
    if !e.is_square() || e.rows() % 2 != 0 || e.rows() == 0 {
        return Err(TorusError::OddOrRectangular(e.rows(), e.cols()));
    }
    if !e.is_antisymmetric() {
        return Err(TorusError::NotAlternating);
    }
    let n = e.rows();
    let g = n / 2;
    let mut m = e.clone();
    let mut b = IntMatrix::identity(n);

    // v_target ← v_target + c·v_source, as a congruence on m
    let apply = |m: &mut IntMatrix, b: &mut IntMatrix, target: usize, source: usize, c: &BigInt| {
        m.add_multiple_of_col(target, source, c);
        m.add_multiple_of_row(target, source, c);
        b.add_multiple_of_col(target, source, c);
    };
    let swap = |m: &mut IntMatrix, b: &mut IntMatrix, x: usize, y: usize| {
        m.swap_cols(x, y);
        m.swap_rows(x, y);
        b.swap_cols(x, y);
    };

    let mut diag = Vec::with_capacity(g);
    for k in 0..g {
        let base = 2 * k;
        'block: loop {
            // smallest nonzero pairing in the remaining indices
            let mut best: Option<(BigInt, usize, usize)> = None;
            for i in base..n {
                for j in i + 1..n {
                    let v = m[(i, j)].abs();
                    if v.is_zero() {
                        continue;
                    }
                    if best.as_ref().map_or(true, |(bv, _, _)| v < *bv) {
                        best = Some((v, i, j));
                    }
                }
            }
            let Some((_, pi, pj)) = best else {
                // remaining form vanishes: degenerate input
                return Err(TorusError::Degenerate);
            };
            let pj = if pi != base {
                swap(&mut m, &mut b, base, pi);
                if pj == base { pi } else { pj }
            } else {
                pj
            };
            if pj != base + 1 {
                swap(&mut m, &mut b, base + 1, pj);
            }

            let mut dirty = false;
            for r in base + 2..n {
                // kill E(v_base, v_r) with v_{base+1}: change is c·E(v_base, v_{base+1})
                let a = m[(base, r)].clone();
                if !a.is_zero() {
                    let c = -(&a / &m[(base, base + 1)]);
                    if !c.is_zero() {
                        apply(&mut m, &mut b, r, base + 1, &c);
                    }
                    if !m[(base, r)].is_zero() {
                        dirty = true;
                    }
                }
                // kill E(v_{base+1}, v_r) with v_base: change is c·E(v_{base+1}, v_base)
                let a = m[(base + 1, r)].clone();
                if !a.is_zero() {
                    let c = &a / &m[(base, base + 1)];
                    if !c.is_zero() {
                        apply(&mut m, &mut b, r, base, &c);
                    }
                    if !m[(base + 1, r)].is_zero() {
                        dirty = true;
                    }
                }
            }
            if dirty {
                continue 'block;
            }

            // pivot must divide the rest of the form
            let d = m[(base, base + 1)].clone();
            let mut offender = None;
            'scan: for r in base + 2..n {
                for s in r + 1..n {
                    if !(&m[(r, s)] % &d).is_zero() {
                        offender = Some(r);
                        break 'scan;
                    }
                }
            }
            match offender {
                Some(r) => {
                    let one = BigInt::one();
                    apply(&mut m, &mut b, base, r, &one);
                }
                None => break 'block,
            }
        }
        if m[(base, base + 1)].is_negative() {
            // negate v_{base+1}
            m.negate_col(base + 1);
            m.negate_row(base + 1);
            b.negate_col(base + 1);
        }
        diag.push(m[(base, base + 1)].clone());
    }
    Ok(SymplecticForm { diag, transform: b })
}

/// Fixed points of the affine torus map `y ↦ M·y + x` on `R^{2g}/Z^{2g}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FixedPoints {
    Finite(BigInt),
    PositiveDimensional,
}

/// Counts solutions of `(M − I)·y ≡ −x` on the torus, where the torsion
/// point `x` is given as `numerators / denominator`.
///
/// When `det(M − I) ≠ 0` the map `y ↦ (M−I)y` is a surjective isogeny of
/// the torus, so there are exactly `|det(M − I)|` solutions for any `x`.
/// Otherwise the solution set is a torsor under a positive-dimensional
/// subgroup whenever it is nonempty.
pub fn affine_fixed_points(
    m: &IntMatrix,
    x_num: &[BigInt],
    x_den: &BigInt,
) -> Result<FixedPoints, TorusError> {
    if !m.is_square() || m.rows() != x_num.len() {
        return Err(TorusError::OddOrRectangular(m.rows(), m.cols()));
    }
    if !x_den.is_positive() {
        return Err(TorusError::BadDenominator);
    }
    let n = m.rows();
    let mut a = m.clone();
    for i in 0..n {
        a[(i, i)] -= BigInt::one();
    }
    let det = a.determinant().expect("square");
    if !det.is_zero() {
        return Ok(FixedPoints::Finite(det.abs()));
    }
    // Solvability over the reals mod Z^{2g}: in Smith coordinates the rows
    // with a nonzero diagonal are always solvable; zero rows require the
    // corresponding coordinate of U·x to be integral.
    let snf = smith_normal_form(&a);
    let c = snf.u.mul_vec(x_num);
    let diag = snf.diagonal();
    for i in 0..n {
        let zero_row = diag.get(i).map_or(true, Zero::is_zero);
        if zero_row && !(&c[i] % x_den).is_zero() {
            return Ok(FixedPoints::Finite(BigInt::zero()));
        }
    }
    Ok(FixedPoints::PositiveDimensional)
}
