//! Integral exterior-algebra cohomology of an abelian surface.
//!
//! For a `g`-dimensional torus the cohomology ring is the exterior algebra
//! `Λ*Z^{2g}` on degree-one generators `e_1*, …, e_{2g}*`. Classes are
//! stored sparsely as maps from strictly increasing index tuples to
//! integer coefficients; the wedge product carries exact Koszul signs.
//!
//! Basis conventions for a surface (`g = 2`):
//!
//! * `e_{1234}* = e_1*∧e_2*∧e_3*∧e_4*` generates `H^4`; the Poincaré
//!   pairing `H^1 × H^3 → H^4` is evaluated against it.
//! * the Poincaré-dual basis of `H^3` is
//!   `{e_{234}*, −e_{134}*, e_{124}*, −e_{123}*}`, which pairs with
//!   `e_1*, …, e_4*` as the identity matrix.
//! * the surface integral is `∫ = −(coefficient of e_{1234}*)`: the
//!   complex orientation of the surface corresponds to the opposite
//!   generator, and this is the sign that makes the square of an ample
//!   class positive, `∫ l∧l = 2·d_1·d_2`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::intlin::IntMatrix;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ExtError {
    #[error("classes live on tori of different dimension: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("index tuple must be strictly increasing within 1..=2g")]
    BadTuple,
    #[error("ample class requires positive d1 | d2")]
    BadType,
    #[error("cup matrix needs a degree-2 class on a surface")]
    NotDegreeTwoSurface,
}

/// Sparse element of `Λ*Z^{2g}`, indexed by strictly increasing tuples of
/// generators. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct ExtClass {
    g: usize,
    terms: BTreeMap<Vec<u8>, BigInt>,
}

impl ExtClass {
    pub fn zero(g: usize) -> Self {
        Self { g, terms: BTreeMap::new() }
    }

    /// The unit of the algebra (the empty wedge).
    pub fn one(g: usize) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Vec::new(), BigInt::one());
        Self { g, terms }
    }

    /// The degree-one generator `e_i*`, indexed from 1.
    pub fn generator(g: usize, i: u8) -> Self {
        assert!(1 <= i && i as usize <= 2 * g, "generator out of range");
        let mut terms = BTreeMap::new();
        terms.insert(vec![i], BigInt::one());
        Self { g, terms }
    }

    /// A single monomial `c · e_{i1}*∧…∧e_{ik}*`.
    pub fn monomial(g: usize, indices: &[u8], coeff: impl Into<BigInt>) -> Result<Self, ExtError> {
        if indices.windows(2).any(|w| w[0] >= w[1])
            || indices.iter().any(|&i| i == 0 || i as usize > 2 * g)
        {
            return Err(ExtError::BadTuple);
        }
        let mut out = Self::zero(g);
        out.add_term(indices.to_vec(), coeff.into());
        Ok(out)
    }

    pub fn g(&self) -> usize {
        self.g
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, indices: &[u8]) -> BigInt {
        self.terms.get(indices).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u8], &BigInt)> {
        self.terms.iter().map(|(k, v)| (k.as_slice(), v))
    }

    /// Degree when homogeneous, `None` for mixed classes. The zero class
    /// is homogeneous of every degree; it reports `Some(0)`.
    pub fn degree(&self) -> Option<usize> {
        let mut it = self.terms.keys().map(Vec::len);
        match it.next() {
            None => Some(0),
            Some(d) => it.all(|x| x == d).then_some(d),
        }
    }

    fn add_term(&mut self, key: Vec<u8>, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(key);
        use std::collections::btree_map::Entry;
        match entry {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, rhs: &Self) -> Result<Self, ExtError> {
        if self.g != rhs.g {
            return Err(ExtError::DimensionMismatch(self.g, rhs.g));
        }
        let mut out = self.clone();
        for (k, v) in &rhs.terms {
            out.add_term(k.clone(), v.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        let mut out = Self::zero(self.g);
        if c.is_zero() {
            return out;
        }
        for (k, v) in &self.terms {
            out.terms.insert(k.clone(), v * &c);
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.scale(-1)
    }

    /// Exterior product with exact Koszul signs.
    pub fn wedge(&self, rhs: &Self) -> Result<Self, ExtError> {
        if self.g != rhs.g {
            return Err(ExtError::DimensionMismatch(self.g, rhs.g));
        }
        let mut out = Self::zero(self.g);
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                if let Some((key, sign)) = merge_tuples(a, b) {
                    let coeff = ca * cb * BigInt::from(sign);
                    out.add_term(key, coeff);
                }
            }
        }
        Ok(out)
    }

    /// Coefficient of the top generator `e_{1…2g}*`.
    pub fn top_coefficient(&self) -> BigInt {
        let top: Vec<u8> = (1..=2 * self.g as u8).collect();
        self.coefficient(&top)
    }

    /// Integral over the surface: evaluation against the fundamental class
    /// in the complex orientation, which is `−e_{1234}*` in this basis.
    pub fn surface_integral(&self) -> BigInt {
        -self.top_coefficient()
    }
}

/// Merges two strictly increasing tuples, returning the sorted union and
/// the Koszul sign, or `None` when an index repeats.
fn merge_tuples(a: &[u8], b: &[u8]) -> Option<(Vec<u8>, i32)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut transpositions = 0usize;
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        if a[i] == b[j] {
            return None;
        }
        if a[i] < b[j] {
            out.push(a[i]);
            i += 1;
        } else {
            // b[j] hops over the remaining entries of a
            transpositions += a.len() - i;
            out.push(b[j]);
            j += 1;
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    Some((out, if transpositions % 2 == 0 { 1 } else { -1 }))
}

impl fmt::Debug for ExtClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ExtClass({})", self)
    }
}

impl fmt::Display for ExtClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, v) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if k.is_empty() {
                write!(f, "{v}")?;
            } else {
                let idx: String = k.iter().map(u8::to_string).collect();
                if v.is_one() {
                    write!(f, "e{idx}")?;
                } else if (-v).is_one() {
                    write!(f, "-e{idx}")?;
                } else {
                    write!(f, "{v}·e{idx}")?;
                }
            }
        }
        Ok(())
    }
}

/// The ample class of a type-`(d_1, d_2)` polarization on a surface in a
/// polarization basis: `d_1·e_{13}* + d_2·e_{24}*`.
pub fn ample_class(d1: &BigInt, d2: &BigInt) -> Result<ExtClass, ExtError> {
    if !d1.is_positive() || !d2.is_positive() || !(d2 % d1).is_zero() {
        return Err(ExtError::BadType);
    }
    let a = ExtClass::monomial(2, &[1, 3], d1.clone())?;
    let b = ExtClass::monomial(2, &[2, 4], d2.clone())?;
    a.add(&b)
}

/// The Poincaré-dual basis of `H^3` on a surface:
/// `{e_{234}*, −e_{134}*, e_{124}*, −e_{123}*}`. Pairing these with
/// `e_1*, …, e_4*` against `e_{1234}*` gives the identity matrix.
pub fn poincare_dual_h3_basis() -> [ExtClass; 4] {
    [
        ExtClass::monomial(2, &[2, 3, 4], 1).expect("valid tuple"),
        ExtClass::monomial(2, &[1, 3, 4], -1).expect("valid tuple"),
        ExtClass::monomial(2, &[1, 2, 4], 1).expect("valid tuple"),
        ExtClass::monomial(2, &[1, 2, 3], -1).expect("valid tuple"),
    ]
}

/// Matrix of `l ∪ − : H^1 → H^3` on a surface, with the target expressed
/// in the Poincaré-dual basis. For the ample class of type `(d_1, d_2)`
/// this reproduces the matrix of the dual polarization isogeny exactly.
pub fn cup_product_matrix(l: &ExtClass) -> Result<IntMatrix, ExtError> {
    if l.g() != 2 || !l.is_zero() && l.degree() != Some(2) {
        return Err(ExtError::NotDegreeTwoSurface);
    }
    let dual = poincare_dual_h3_basis();
    let mut m = IntMatrix::zero(4, 4);
    for col in 0..4 {
        let e = ExtClass::generator(2, col as u8 + 1);
        let image = l.wedge(&e).expect("same dimension");
        // expand image in the dual basis: basis vector j is ±e_T, so the
        // coordinate is the coefficient on e_T divided by that sign
        for (row, b) in dual.iter().enumerate() {
            let (tuple, sign) = b.terms().next().expect("dual basis is monomial");
            m[(row, col)] = image.coefficient(tuple) * sign;
        }
    }
    Ok(m)
}
