use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::abgroup::FinAbGroup;
use super::matrix::IntMatrix;
use super::snf::smith_normal_form;

/// Kernel of the map `(Z/m)^k → (Z/m)^k` induced by a square integer
/// matrix.
///
/// Lifted through the Smith normal form: with `U·A·V = diag(d_i)` and `U`,
/// `V` unimodular mod every `m`, the congruence `A·v ≡ 0 (mod m)`
/// decouples into `d_i·w_i ≡ 0 (mod m)`, whose solution group is
/// `Z/gcd(d_i, m)`. This scales to moduli far beyond enumeration reach;
/// exhaustive enumeration is kept as an independent test oracle.
pub fn kernel_mod(a: &IntMatrix, m: &BigInt) -> FinAbGroup {
    assert!(a.is_square(), "kernel_mod expects a square matrix");
    assert!(m >= &BigInt::from(2), "modulus must be at least 2");
    let orders: Vec<BigInt> = smith_normal_form(a)
        .diagonal()
        .iter()
        .map(|d| d.gcd(m))
        .collect();
    FinAbGroup::from_orders(&orders)
}

/// Number of solutions `v ∈ (Z/m)^cols` of `A·v ≡ b (mod m)`; zero when
/// the system is inconsistent.
pub fn solve_affine_mod(a: &IntMatrix, b: &[BigInt], m: &BigInt) -> BigInt {
    assert_eq!(a.rows(), b.len(), "right-hand side length must match rows");
    assert!(m >= &BigInt::from(1), "modulus must be positive");
    let snf = smith_normal_form(a);
    let c = snf.u.mul_vec(b);
    let diag = snf.diagonal();
    let mut count = BigInt::from(1);
    for i in 0..a.rows() {
        let d = diag.get(i).cloned().unwrap_or_else(BigInt::zero);
        let g = d.gcd(m);
        if g.is_zero() {
            // d ≡ 0 and m = 0 cannot happen (m ≥ 1); kept for clarity
            unreachable!();
        }
        if (&c[i] % &g).is_zero() {
            if i < diag.len() {
                count *= g;
            }
            // rows past the diagonal only impose the consistency check
        } else {
            return BigInt::zero();
        }
    }
    // columns beyond the diagonal are unconstrained
    for _ in diag.len()..a.cols() {
        count *= m;
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    /// Exhaustive-enumeration oracle: walks all m^k vectors, collects the
    /// kernel as a set, and reconstructs the isomorphism type by counting
    /// elements killed by each prime power. Independent of any normal form.
    pub(crate) fn kernel_mod_by_enumeration(a: &IntMatrix, m: u64) -> FinAbGroup {
        let k = a.rows();
        let total = (m as u128).pow(k as u32);
        assert!(total <= 1_000_000, "oracle restricted to m^k ≤ 10^6");
        let mb = BigInt::from(m);
        let mut kernel: Vec<Vec<u64>> = Vec::new();
        let mut v = vec![0u64; k];
        loop {
            let vb: Vec<BigInt> = v.iter().map(|&x| BigInt::from(x)).collect();
            let img = a.mul_vec(&vb);
            if img.iter().all(|x| x.mod_floor(&mb).is_zero()) {
                kernel.push(v.clone());
            }
            // odometer increment
            let mut i = 0;
            loop {
                if i == k {
                    return group_from_elements(&kernel, m);
                }
                v[i] += 1;
                if v[i] < m {
                    break;
                }
                v[i] = 0;
                i += 1;
            }
        }
    }

    /// Isomorphism type of a subgroup of (Z/m)^k given its element list,
    /// recovered from the counts N_j = #{x : p^j·x = 0} per prime p | m.
    fn group_from_elements(elements: &[Vec<u64>], m: u64) -> FinAbGroup {
        let mut orders: Vec<BigInt> = Vec::new();
        let mut rem = m;
        let mut p = 2u64;
        while p * p <= rem {
            if rem % p == 0 {
                while rem % p == 0 {
                    rem /= p;
                }
                orders.extend(p_part_orders(elements, m, p));
            }
            p += 1;
        }
        if rem > 1 {
            orders.extend(p_part_orders(elements, m, rem));
        }
        FinAbGroup::from_orders(&orders)
    }

    fn p_part_orders(elements: &[Vec<u64>], m: u64, p: u64) -> Vec<BigInt> {
        // counts[j] = #{x : p^j x = 0}; differences of log_p give the number
        // of cyclic factors of order ≥ p^j
        let mut counts = vec![1u128];
        let mut pj = 1u64;
        loop {
            pj = pj.checked_mul(p).unwrap();
            let n = elements
                .iter()
                .filter(|x| x.iter().all(|&c| (c as u128 * pj as u128) % m as u128 == 0))
                .count() as u128;
            counts.push(n);
            if pj as u128 * p as u128 > m as u128 || n == *counts.get(counts.len() - 2).unwrap() {
                break;
            }
        }
        let logs: Vec<u32> = counts
            .iter()
            .map(|&n| {
                let mut l = 0;
                let mut acc = 1u128;
                while acc < n {
                    acc *= p as u128;
                    l += 1;
                }
                assert_eq!(acc, n, "subgroup size must be a power of {p}");
                l
            })
            .collect();
        let mut factors = Vec::new();
        for j in 1..logs.len() {
            let at_least_j = logs[j] - logs[j - 1]; // # factors with exponent ≥ j
            let prev = if j + 1 < logs.len() { logs[j + 1] - logs[j] } else { 0 };
            for _ in 0..(at_least_j - prev) {
                factors.push(BigInt::from(p).pow(j as u32));
            }
        }
        factors
    }

    #[test]
    fn small_lemma_kernel() {
        // [[p, 0], [-s, q]] mod pq with gcd(p, s) = 1 gives Z/pq
        for (p, q, s) in [(2i64, 3, 1), (3, 4, 2), (5, 5, 2), (2, 5, 1)] {
            let a = IntMatrix::from_i64_rows(&[&[p, 0], &[-s, q]]);
            let m = BigInt::from(p * q);
            assert_eq!(
                kernel_mod(&a, &m),
                FinAbGroup::cyclic(p * q),
                "p={p} q={q} s={s}"
            );
        }
    }

    #[test]
    fn zero_matrix_full_kernel() {
        let a = IntMatrix::zero(3, 3);
        assert_eq!(kernel_mod(&a, &BigInt::from(4)), FinAbGroup::power(4, 3));
    }

    #[test]
    fn gcd_condition_violated_matches_enumeration() {
        let a = IntMatrix::from_i64_rows(&[&[2, 0], &[-2, 2]]);
        let m = BigInt::from(4);
        let fast = kernel_mod(&a, &m);
        let slow = kernel_mod_by_enumeration(&a, 4);
        assert_eq!(fast, slow);
        assert_eq!(fast, FinAbGroup::power(2, 2));
    }

    #[test]
    fn enumeration_agrees_on_mixed_moduli() {
        let a = IntMatrix::from_i64_rows(&[&[6, 2], &[0, 3]]);
        for m in [2u64, 3, 4, 6, 9, 12] {
            assert_eq!(
                kernel_mod(&a, &BigInt::from(m)),
                kernel_mod_by_enumeration(&a, m),
                "m={m}"
            );
        }
    }

    #[test]
    fn affine_count_identity() {
        let a = IntMatrix::identity(3);
        let b = vec![BigInt::zero(); 3];
        assert_eq!(solve_affine_mod(&a, &b, &BigInt::from(5)), BigInt::one());
    }

    #[test]
    fn affine_count_parity_obstruction() {
        let a = IntMatrix::scalar(2, 2);
        let b = vec![BigInt::one(), BigInt::zero()];
        assert_eq!(solve_affine_mod(&a, &b, &BigInt::from(4)), BigInt::zero());
    }

    #[test]
    fn affine_count_doubling_map() {
        // 2I on (Z/m)^4 with b = 0: every coordinate contributes gcd(2, m)
        let a = IntMatrix::scalar(4, 2);
        let b = vec![BigInt::zero(); 4];
        for m in [2u64, 4, 6, 10] {
            assert_eq!(
                solve_affine_mod(&a, &b, &BigInt::from(m)),
                BigInt::from(16u64),
                "m={m}"
            );
        }
        assert_eq!(solve_affine_mod(&a, &b, &BigInt::from(5)), BigInt::one());
    }

    #[test]
    fn affine_count_rectangular() {
        // wide: [[2, 0, 4]] mod 6, b = 0: d = diag(2), one constrained
        // coordinate (gcd 2), two free
        let a = IntMatrix::from_i64_rows(&[&[2, 0, 4]]);
        let b = vec![BigInt::zero()];
        assert_eq!(solve_affine_mod(&a, &b, &BigInt::from(6)), BigInt::from(72));
        // tall: [[1], [2]] with b = (1, 2): consistent, unique solution
        let a = IntMatrix::from_i64_rows(&[&[1], &[2]]);
        let b = vec![BigInt::one(), BigInt::from(2)];
        assert_eq!(solve_affine_mod(&a, &b, &BigInt::from(5)), BigInt::one());
        // tall inconsistent: b = (1, 1) forces 2·1 ≡ 1 (mod 5)? v=1 gives (1,2)≠(1,1) … count 0
        let b = vec![BigInt::one(), BigInt::one()];
        assert_eq!(solve_affine_mod(&a, &b, &BigInt::from(5)), BigInt::zero());
    }
}
