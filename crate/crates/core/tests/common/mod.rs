#![allow(dead_code)] // compiled once per test target; each uses a subset

//! Shared independent oracles for the integration and acceptance suites.
//! Everything here recomputes results by routes the library does not use:
//! minor gcds instead of reduction, exhaustive enumeration instead of
//! normal forms, branching-pattern counting instead of the Weyl product.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::Rng;

use dualkummer::intlin::IntMatrix;

/// Expected Smith diagonal from gcds of k×k minors: `d_1·…·d_k` equals the
/// gcd of all k×k minors, so `d_k` is the ratio of consecutive minor gcds.
pub fn divisors_from_minor_gcds(a: &IntMatrix) -> Vec<BigInt> {
    let n = a.rows().min(a.cols());
    let mut prev = BigInt::one();
    let mut out = Vec::with_capacity(n);
    for k in 1..=n {
        let g = minor_gcd(a, k);
        if g.is_zero() {
            // rank < k: all further divisors vanish
            out.extend(std::iter::repeat(BigInt::zero()).take(n - k + 1));
            return out;
        }
        out.push(&g / &prev);
        prev = g;
    }
    out
}

/// gcd of all k×k minors.
fn minor_gcd(a: &IntMatrix, k: usize) -> BigInt {
    let rows: Vec<usize> = (0..a.rows()).collect();
    let cols: Vec<usize> = (0..a.cols()).collect();
    let mut g = BigInt::zero();
    for ri in combinations(&rows, k) {
        for ci in combinations(&cols, k) {
            let sub = IntMatrix::from_fn(k, k, |i, j| a[(ri[i], ci[j])].clone());
            g = g.gcd(&sub.determinant().expect("square"));
        }
    }
    g.abs()
}

pub fn combinations(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if items.len() < k {
        return Vec::new();
    }
    let mut out = Vec::new();
    for (i, &first) in items.iter().enumerate() {
        for mut rest in combinations(&items[i + 1..], k - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Isomorphism type of a finite abelian group from the multiset of its
/// element orders: per prime `p`, the count `N_j` of elements killed by
/// `p^j` determines how many invariant factors carry exponent ≥ j.
pub fn group_type_from_orders(orders: &[u64]) -> dualkummer::intlin::FinAbGroup {
    let group_order = orders.len() as u64;
    let mut factors: Vec<BigInt> = Vec::new();
    let mut rem = group_order;
    let mut p = 2u64;
    while rem > 1 {
        if rem % p == 0 {
            while rem % p == 0 {
                rem /= p;
            }
            // N_j = #{x : p^j·x = 0} = #{orders that are p-powers ≤ p^j}
            let mut level_counts: Vec<u32> = Vec::new();
            let mut prev = 1u64;
            let mut pj = 1u64;
            loop {
                pj *= p;
                let n = orders
                    .iter()
                    .filter(|&&o| is_p_power(o, p) && pj % o == 0)
                    .count() as u64;
                let ratio = n / prev;
                level_counts.push(exact_log(ratio, p));
                if n == prev {
                    break;
                }
                prev = n;
            }
            for (level, &count_ge) in level_counts.iter().enumerate() {
                let next = level_counts.get(level + 1).copied().unwrap_or(0);
                for _ in 0..count_ge.saturating_sub(next) {
                    factors.push(BigInt::from(p).pow(level as u32 + 1));
                }
            }
        }
        p += 1;
    }
    dualkummer::intlin::FinAbGroup::from_orders(&factors)
}

fn is_p_power(mut o: u64, p: u64) -> bool {
    while o % p == 0 {
        o /= p;
    }
    o == 1
}

fn exact_log(ratio: u64, p: u64) -> u32 {
    let mut l = 0;
    let mut acc = 1u64;
    while acc < ratio {
        acc *= p;
        l += 1;
    }
    assert_eq!(acc, ratio, "subgroup sizes must be powers of {p}");
    l
}

/// Random matrix with entries uniform in `[-bound, bound]`.
pub fn random_matrix(rng: &mut impl Rng, rows: usize, cols: usize, bound: i64) -> IntMatrix {
    IntMatrix::from_fn(rows, cols, |_, _| BigInt::from(rng.gen_range(-bound..=bound)))
}

/// Random unimodular matrix: a product of elementary operations.
pub fn random_unimodular(rng: &mut impl Rng, n: usize, steps: usize) -> IntMatrix {
    let mut b = IntMatrix::identity(n);
    for _ in 0..steps {
        match rng.gen_range(0..3) {
            0 => {
                let i = rng.gen_range(0..n);
                let mut j = rng.gen_range(0..n);
                if i == j {
                    j = (j + 1) % n;
                }
                let c = BigInt::from(rng.gen_range(-3i64..=3));
                if !c.is_zero() {
                    b.add_multiple_of_col(i, j, &c);
                }
            }
            1 => {
                let i = rng.gen_range(0..n);
                let j = rng.gen_range(0..n);
                b.swap_cols(i, j);
            }
            _ => {
                let i = rng.gen_range(0..n);
                b.negate_col(i);
            }
        }
    }
    b
}

/// Dimension of the irreducible so-module by counting branching patterns
/// down the chain so(2r+1) ⊃ so(2r) ⊃ so(2r−1) ⊃ … — each restriction is
/// multiplicity-free with interlacing branching, so the dimension is the
/// number of patterns. Coordinates are doubled throughout.
pub struct BranchingOracle {
    memo: HashMap<(bool, Vec<i64>), BigInt>,
}

impl BranchingOracle {
    pub fn new() -> Self {
        Self { memo: HashMap::new() }
    }

    /// `odd = true` for so(2r+1) (series B), `false` for so(2r) (series D).
    pub fn dim(&mut self, odd: bool, doubled: &[i64]) -> BigInt {
        if let Some(hit) = self.memo.get(&(odd, doubled.to_vec())) {
            return hit.clone();
        }
        let result = if odd {
            self.dim_b(doubled)
        } else {
            self.dim_d(doubled)
        };
        self.memo.insert((odd, doubled.to_vec()), result.clone());
        result
    }

    /// so(2r+1) ↓ so(2r): λ1 ≥ μ1 ≥ λ2 ≥ … ≥ λr ≥ |μr|.
    fn dim_b(&mut self, l: &[i64]) -> BigInt {
        let r = l.len();
        if r == 0 {
            return BigInt::one();
        }
        let mut total = BigInt::zero();
        let mut mu = vec![0i64; r];
        self.sum_b_branch(l, 0, &mut mu, &mut total);
        total
    }

    fn sum_b_branch(&mut self, l: &[i64], pos: usize, mu: &mut Vec<i64>, total: &mut BigInt) {
        let r = l.len();
        if pos == r {
            *total += self.dim(false, mu);
            return;
        }
        let (lo, hi) = if pos + 1 < r {
            (l[pos + 1], l[pos])
        } else {
            (-l[r - 1], l[r - 1])
        };
        let mut v = lo;
        while v <= hi {
            mu[pos] = v;
            self.sum_b_branch(l, pos + 1, mu, total);
            v += 2;
        }
    }

    /// so(2r) ↓ so(2r−1): λ1 ≥ ν1 ≥ λ2 ≥ … ≥ ν_{r−1} ≥ |λr|.
    fn dim_d(&mut self, l: &[i64]) -> BigInt {
        let r = l.len();
        if r <= 1 {
            return BigInt::one();
        }
        let mut total = BigInt::zero();
        let mut nu = vec![0i64; r - 1];
        self.sum_d_branch(l, 0, &mut nu, &mut total);
        total
    }

    fn sum_d_branch(&mut self, l: &[i64], pos: usize, nu: &mut Vec<i64>, total: &mut BigInt) {
        let r = l.len();
        if pos == r - 1 {
            *total += self.dim(true, nu);
            return;
        }
        let (lo, hi) = if pos + 1 < r - 1 {
            (l[pos + 1], l[pos])
        } else {
            (l[r - 1].abs(), l[r - 2])
        };
        let mut v = lo;
        while v <= hi {
            nu[pos] = v;
            self.sum_d_branch(l, pos + 1, nu, total);
            v += 2;
        }
    }
}

/// All dominant doubled weights of the given rank with `Σ|λ_i| ≤ max_sum`
/// (doubled), in both parity classes. For series D the last coordinate
/// also runs negative.
pub fn dominant_weights(rank: usize, series_d: bool, max_sum: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    for parity in [0i64, 1] {
        let mut w = vec![0i64; rank];
        gen_weights(rank, parity, max_sum, 0, i64::MAX, &mut w, &mut out);
    }
    if series_d && rank >= 1 {
        let extra: Vec<Vec<i64>> = out
            .iter()
            .filter(|w| w[rank - 1] > 0)
            .map(|w| {
                let mut v = w.clone();
                v[rank - 1] = -v[rank - 1];
                v
            })
            .collect();
        out.extend(extra);
    }
    out
}

fn gen_weights(
    rank: usize,
    parity: i64,
    budget: i64,
    pos: usize,
    cap: i64,
    w: &mut Vec<i64>,
    out: &mut Vec<Vec<i64>>,
) {
    if pos == rank {
        out.push(w.clone());
        return;
    }
    let mut v = parity;
    while v <= budget.min(cap) {
        w[pos] = v;
        // remaining coordinates are all ≥ parity; prune when impossible
        let remaining = (rank - pos - 1) as i64 * parity;
        if budget - v >= remaining {
            gen_weights(rank, parity, budget - v, pos + 1, v, w, out);
        }
        v += 2;
    }
}
