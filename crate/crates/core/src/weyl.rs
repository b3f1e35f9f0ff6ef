//! Representation dimensions for the orthogonal series and graded
//! bookkeeping of cohomology decompositions.
//!
//! Weights of `so(2r+1)` (series B) and `so(2r)` (series D) are stored
//! with doubled coordinates so half-integer spin weights stay exact. The
//! dimension of an irreducible module is the Weyl product over positive
//! roots, evaluated as an exact rational that must come out integral.
//!
//! [`verbitsky_profile`] spreads the weight-(2,0,…,0) module across
//! cohomological degrees as `(1, b₂, s, b₂, 1)`; [`betti_table`] assembles
//! Betti numbers from a list of module summands with explicit degree
//! placements.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum WeylError {
    #[error("weight is not dominant for the series")]
    NotDominant,
    #[error("weight coordinates must all be integers or all half-integers")]
    MixedParity,
    #[error("rank must be positive")]
    ZeroRank,
    #[error("graded profile needs half-dimension ≥ 2, got {0}")]
    HalfDimTooSmall(usize),
    #[error("profile rank mismatch: second Betti number {0} needs rank ≥ 1")]
    BadRank(usize),
    #[error("placement inconsistency: {0}")]
    Placement(String),
}

/// The two orthogonal series: `B_r = so(2r+1)` and `D_r = so(2r)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Series {
    B,
    D,
}

/// A dominant weight of `so(2r+1)` or `so(2r)`, with doubled coordinates:
/// `doubled[i] = 2·λ_i`. All coordinates share a parity class (integer or
/// half-integer weights). For series D the last coordinate may be
/// negative.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HighestWeight {
    series: Series,
    doubled: Vec<i64>,
}

impl HighestWeight {
    pub fn new(series: Series, doubled: Vec<i64>) -> Result<Self, WeylError> {
        if doubled.is_empty() {
            return Err(WeylError::ZeroRank);
        }
        let parity = doubled[0].rem_euclid(2);
        if doubled.iter().any(|x| x.rem_euclid(2) != parity) {
            return Err(WeylError::MixedParity);
        }
        let r = doubled.len();
        let dominant = match series {
            Series::B => {
                doubled.windows(2).all(|w| w[0] >= w[1]) && doubled[r - 1] >= 0
            }
            // λ₁ ≥ … ≥ λ_{r−1} ≥ |λ_r|; a lone so(2) weight is unconstrained
            Series::D => {
                r == 1
                    || (doubled[..r - 1].windows(2).all(|w| w[0] >= w[1])
                        && doubled[r - 2] >= doubled[r - 1].abs())
            }
        };
        if !dominant {
            return Err(WeylError::NotDominant);
        }
        Ok(Self { series, doubled })
    }

    /// Weight with integer coordinates.
    pub fn from_integers(series: Series, coords: &[i64]) -> Result<Self, WeylError> {
        Self::new(series, coords.iter().map(|&x| 2 * x).collect())
    }

    /// The spin weight `(½, …, ½)`.
    pub fn spin(series: Series, rank: usize) -> Result<Self, WeylError> {
        Self::new(series, vec![1; rank])
    }

    pub fn series(&self) -> Series {
        self.series
    }

    pub fn rank(&self) -> usize {
        self.doubled.len()
    }

    pub fn doubled(&self) -> &[i64] {
        &self.doubled
    }

    /// Whether this is the weight `(2, 0, …, 0)`.
    pub fn is_two_highest(&self) -> bool {
        self.doubled[0] == 4 && self.doubled[1..].iter().all(|&x| x == 0)
    }
}

impl fmt::Display for HighestWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let coords: Vec<String> = self
            .doubled
            .iter()
            .map(|&x| {
                if x % 2 == 0 {
                    format!("{}", x / 2)
                } else {
                    format!("{x}/2")
                }
            })
            .collect();
        let n = match self.series {
            Series::B => 2 * self.rank() + 1,
            Series::D => 2 * self.rank(),
        };
        write!(f, "so({n}) ({})", coords.join(","))
    }
}

/// Exact dimension by the Weyl product formula: with `l_i = 2(λ_i + ρ_i)`
/// the quotient `Π (l_i² − l_j²) / (ρ analog)` times, for series B, the
/// extra factor `Π l_i / (2ρ_i)`.
pub fn weyl_dim(w: &HighestWeight) -> BigInt {
    let r = w.rank();
    let l: Vec<BigInt> = (0..r)
        .map(|i| {
            let rho_doubled = match w.series() {
                Series::B => 2 * (r - 1 - i) as i64 + 1,
                Series::D => 2 * (r - 1 - i) as i64,
            };
            BigInt::from(w.doubled()[i] + rho_doubled)
        })
        .collect();
    let m: Vec<BigInt> = (0..r)
        .map(|i| {
            BigInt::from(match w.series() {
                Series::B => 2 * (r - 1 - i) as i64 + 1,
                Series::D => 2 * (r - 1 - i) as i64,
            })
        })
        .collect();
    let mut dim = BigRational::one();
    for i in 0..r {
        for j in i + 1..r {
            let num = &l[i] * &l[i] - &l[j] * &l[j];
            let den = &m[i] * &m[i] - &m[j] * &m[j];
            dim *= BigRational::new(num, den);
        }
    }
    if w.series() == Series::B {
        for i in 0..r {
            dim *= BigRational::new(l[i].clone(), m[i].clone());
        }
    }
    assert!(dim.is_integer(), "Weyl dimension must be integral");
    assert!(dim.is_positive(), "Weyl dimension must be positive");
    dim.to_integer()
}

/// Dimensions by cohomological degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedDims {
    by_degree: BTreeMap<usize, BigInt>,
}

impl GradedDims {
    pub fn dims(&self) -> &BTreeMap<usize, BigInt> {
        &self.by_degree
    }

    pub fn dim_in_degree(&self, d: usize) -> BigInt {
        self.by_degree.get(&d).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn total(&self) -> BigInt {
        self.by_degree.values().sum()
    }

    pub fn euler(&self) -> BigInt {
        self.by_degree
            .iter()
            .map(|(&d, v)| if d % 2 == 0 { v.clone() } else { -v })
            .sum()
    }

    /// Symmetric about `top/2`?
    pub fn is_symmetric(&self, top: usize) -> bool {
        (0..=top).all(|d| self.dim_in_degree(d) == self.dim_in_degree(top - d))
    }
}

/// Graded profile of the weight-(2,0,…,0) module of `so(b₂ + 2)` across
/// cohomological degrees, centered at degree `2n`:
/// `(1, b₂, s, b₂, 1)` in degrees `2n−4 … 2n+4` with
/// `s = dim − 2 − 2·b₂`. For fourfolds (`n = 2`) the profile spans
/// degrees 0 through 8 exactly.
pub fn verbitsky_profile(b2: usize, n: usize) -> Result<GradedDims, WeylError> {
    if n < 2 {
        return Err(WeylError::HalfDimTooSmall(n));
    }
    let dim = weyl_dim(&two_weight_for_rank_b2(b2)?);
    let s = dim - BigInt::from(2) - BigInt::from(2 * b2 as u64);
    let mid = 2 * n;
    let mut by_degree = BTreeMap::new();
    by_degree.insert(mid - 4, BigInt::one());
    by_degree.insert(mid - 2, BigInt::from(b2 as u64));
    by_degree.insert(mid, s);
    by_degree.insert(mid + 2, BigInt::from(b2 as u64));
    by_degree.insert(mid + 4, BigInt::one());
    Ok(GradedDims { by_degree })
}

/// The weight `(2, 0, …, 0)` of `so(b₂ + 2)`.
fn two_weight_for_rank_b2(b2: usize) -> Result<HighestWeight, WeylError> {
    let n = b2 + 2;
    let (series, rank) = if n % 2 == 1 {
        (Series::B, n / 2)
    } else {
        (Series::D, n / 2)
    };
    if rank == 0 {
        return Err(WeylError::BadRank(b2));
    }
    let mut coords = vec![0i64; rank];
    coords[0] = 2;
    HighestWeight::from_integers(series, &coords)
}

/// One summand of a cohomology decomposition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Summand {
    Module(HighestWeight),
    Trivial,
}

impl Summand {
    pub fn dimension(&self) -> BigInt {
        match self {
            Summand::Module(w) => weyl_dim(w),
            Summand::Trivial => BigInt::one(),
        }
    }
}

/// Where a summand sits in the cohomological grading.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Placement {
    /// Graded by [`verbitsky_profile`], centered at the middle degree.
    /// Only valid for a weight-(2,0,…,0) module.
    VerbitskyCentered,
    /// The whole summand in a single degree.
    Degree(usize),
    /// Split evenly across the listed degrees.
    EqualSplit(Vec<usize>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionEntry {
    pub summand: Summand,
    pub multiplicity: u64,
    pub placement: Placement,
}

/// Betti numbers assembled from a decomposition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    pub betti: Vec<BigInt>,
    pub total: BigInt,
    pub euler: BigInt,
}

/// Assembles Betti numbers of a space of dimension `top_degree` from
/// module summands with degree placements. The result must come out
/// symmetric about the middle degree, otherwise the placement data was
/// inconsistent.
pub fn betti_table(
    entries: &[DecompositionEntry],
    top_degree: usize,
) -> Result<BettiTable, WeylError> {
    let mut betti = vec![BigInt::zero(); top_degree + 1];
    for entry in entries {
        let dim = entry.summand.dimension() * BigInt::from(entry.multiplicity);
        if dim.is_zero() {
            continue;
        }
        match &entry.placement {
            Placement::Degree(d) => {
                if *d > top_degree {
                    return Err(WeylError::Placement(format!(
                        "degree {d} exceeds top degree {top_degree}"
                    )));
                }
                betti[*d] += dim;
            }
            Placement::EqualSplit(degrees) => {
                if degrees.is_empty() {
                    return Err(WeylError::Placement("empty split".into()));
                }
                if degrees.iter().any(|d| *d > top_degree) {
                    return Err(WeylError::Placement(format!(
                        "split degree exceeds top degree {top_degree}"
                    )));
                }
                let k = BigInt::from(degrees.len() as u64);
                if !(&dim % &k).is_zero() {
                    return Err(WeylError::Placement(format!(
                        "dimension {dim} does not split evenly over {} degrees",
                        degrees.len()
                    )));
                }
                let share = &dim / &k;
                for d in degrees {
                    betti[*d] += &share;
                }
            }
            Placement::VerbitskyCentered => {
                let Summand::Module(w) = &entry.summand else {
                    return Err(WeylError::Placement(
                        "graded placement needs a module summand".into(),
                    ));
                };
                if !w.is_two_highest() {
                    return Err(WeylError::Placement(
                        "graded placement is defined for the (2,0,…,0) module".into(),
                    ));
                }
                if top_degree % 4 != 0 {
                    return Err(WeylError::Placement(
                        "graded placement needs top degree divisible by 4".into(),
                    ));
                }
                let n = top_degree / 4;
                let b2 = match w.series() {
                    Series::B => 2 * w.rank() + 1 - 2,
                    Series::D => 2 * w.rank() - 2,
                };
                let profile = verbitsky_profile(b2, n)?;
                for (d, v) in profile.dims() {
                    if *d > top_degree {
                        return Err(WeylError::Placement(format!(
                            "profile degree {d} exceeds top degree {top_degree}"
                        )));
                    }
                    betti[*d] += v * BigInt::from(entry.multiplicity);
                }
            }
        }
    }
    for d in 0..=top_degree {
        if betti[d] != betti[top_degree - d] {
            return Err(WeylError::Placement(format!(
                "betti numbers are not symmetric: b_{d} ≠ b_{}",
                top_degree - d
            )));
        }
    }
    let total: BigInt = betti.iter().sum();
    let euler: BigInt = betti
        .iter()
        .enumerate()
        .map(|(d, v)| if d % 2 == 0 { v.clone() } else { -v })
        .sum();
    Ok(BettiTable { betti, total, euler })
}

/// The decomposition of the total cohomology of a Kummer fourfold:
/// the (2,0,0,0)-module of so(9), 80 trivial classes in degree 4, and the
/// 16-dimensional spin module split over degrees 3 and 5.
pub fn kummer_fourfold_decomposition() -> Vec<DecompositionEntry> {
    decomposition_with_trivial(80)
}

/// Same shape with only 8 trivial classes: the cohomology of the dual
/// Kummer fourfold.
pub fn dual_kummer_decomposition() -> Vec<DecompositionEntry> {
    decomposition_with_trivial(8)
}

fn decomposition_with_trivial(multiplicity: u64) -> Vec<DecompositionEntry> {
    let two = HighestWeight::from_integers(Series::B, &[2, 0, 0, 0]).expect("dominant");
    let spin = HighestWeight::spin(Series::B, 4).expect("dominant");
    vec![
        DecompositionEntry {
            summand: Summand::Module(two),
            multiplicity: 1,
            placement: Placement::VerbitskyCentered,
        },
        DecompositionEntry {
            summand: Summand::Trivial,
            multiplicity,
            placement: Placement::Degree(4),
        },
        DecompositionEntry {
            summand: Summand::Module(spin),
            multiplicity: 1,
            placement: Placement::EqualSplit(vec![3, 5]),
        },
    ]
}
