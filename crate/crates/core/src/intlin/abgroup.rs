use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// A finitely generated abelian group in canonical form: a free rank plus
/// invariant factors `d_1 | d_2 | …` with every `d_i ≥ 2`.
///
/// The canonical form makes structural equality meaningful, so `Eq` is
/// isomorphism of groups.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FinAbGroup {
    free_rank: usize,
    invariant_factors: Vec<BigInt>,
}

impl FinAbGroup {
    pub fn trivial() -> Self {
        Self { free_rank: 0, invariant_factors: Vec::new() }
    }

    pub fn free(rank: usize) -> Self {
        Self { free_rank: rank, invariant_factors: Vec::new() }
    }

    pub fn cyclic(order: impl Into<BigInt>) -> Self {
        Self::from_orders(&[order.into()])
    }

    /// Canonicalizes an arbitrary list of cyclic orders into invariant
    /// factors. An order of `0` contributes a free `Z` summand, an order of
    /// `±1` is dropped, and coprime factors are recombined, e.g.
    /// `Z/2 ⊕ Z/3 = Z/6`.
    pub fn from_orders(orders: &[BigInt]) -> Self {
        let mut free_rank = 0;
        // exponent lists per prime, one entry per cyclic factor touching p
        let mut primes: BTreeMap<BigInt, Vec<u32>> = BTreeMap::new();
        for order in orders {
            if order.is_zero() {
                free_rank += 1;
                continue;
            }
            let o = order.abs();
            if o.is_one() {
                continue;
            }
            for (p, e) in factorize(&o) {
                primes.entry(p).or_default().push(e);
            }
        }
        let slots = primes.values().map(Vec::len).max().unwrap_or(0);
        // invariant factor #i (counting from the largest) collects the i-th
        // largest exponent of every prime
        let mut factors = vec![BigInt::one(); slots];
        for (p, mut exps) in primes {
            exps.sort_unstable_by(|a, b| b.cmp(a));
            for (i, e) in exps.into_iter().enumerate() {
                factors[i] *= p.pow(e);
            }
        }
        factors.reverse();
        Self { free_rank, invariant_factors: factors }
    }

    /// The `r`-fold direct sum `G^⊕r`.
    pub fn power(base: impl Into<BigInt>, copies: usize) -> Self {
        let b = base.into();
        Self::from_orders(&vec![b; copies])
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        let mut orders = self.invariant_factors.clone();
        orders.extend_from_slice(&other.invariant_factors);
        let mut g = Self::from_orders(&orders);
        g.free_rank = self.free_rank + other.free_rank;
        g
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn invariant_factors(&self) -> &[BigInt] {
        &self.invariant_factors
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.invariant_factors.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }

    /// Group order; `None` when the free rank is positive.
    pub fn order(&self) -> Option<BigInt> {
        self.is_finite()
            .then(|| self.invariant_factors.iter().product())
    }
}

fn factorize(n: &BigInt) -> Vec<(BigInt, u32)> {
    debug_assert!(n.is_positive());
    let mut n = n.clone();
    let mut out = Vec::new();
    let mut p = BigInt::from(2);
    while &p * &p <= n {
        if n.is_multiple_of(&p) {
            let mut e = 0;
            while n.is_multiple_of(&p) {
                n /= &p;
                e += 1;
            }
            out.push((p.clone(), e));
        }
        p += if p == BigInt::from(2) { 1 } else { 2 };
    }
    if !n.is_one() {
        out.push((n, 1));
    }
    out
}

impl fmt::Display for FinAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.invariant_factors.iter().map(|d| format!("Z/{d}")));
        write!(f, "{}", parts.join(" ⊕ "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn crt_recombination() {
        let g = FinAbGroup::from_orders(&[BigInt::from(2), BigInt::from(3)]);
        assert_eq!(g, FinAbGroup::cyclic(6));
        assert_eq!(g.to_string(), "Z/6");
    }

    #[test]
    fn invariant_factor_chain() {
        // Z/4 ⊕ Z/6 = Z/2 ⊕ Z/12
        let g = FinAbGroup::from_orders(&[BigInt::from(4), BigInt::from(6)]);
        assert_eq!(g.invariant_factors(), &[BigInt::from(2), BigInt::from(12)]);
        assert_eq!(g.order(), Some(BigInt::from(24)));
    }

    #[test]
    fn units_dropped_zeros_free() {
        let g = FinAbGroup::from_orders(&[
            BigInt::from(1),
            BigInt::from(0),
            BigInt::from(-5),
            BigInt::from(0),
        ]);
        assert_eq!(g.free_rank(), 2);
        assert_eq!(g.invariant_factors(), &[BigInt::from(5)]);
        assert_eq!(g.order(), None);
        assert_eq!(g.to_string(), "Z^2 ⊕ Z/5");
    }

    #[test]
    fn power_and_sum() {
        let g = FinAbGroup::power(3, 4);
        assert_eq!(g.to_string(), "Z/3 ⊕ Z/3 ⊕ Z/3 ⊕ Z/3");
        assert_eq!(g.order(), Some(BigInt::from(81)));
        let h = g.direct_sum(&FinAbGroup::cyclic(2));
        assert_eq!(
            h.invariant_factors(),
            &[
                BigInt::from(3),
                BigInt::from(3),
                BigInt::from(3),
                BigInt::from(6)
            ]
        );
    }

    #[test]
    fn trivial_display() {
        assert_eq!(FinAbGroup::trivial().to_string(), "0");
        assert!(FinAbGroup::from_orders(&[BigInt::one()]).is_trivial());
    }
}
