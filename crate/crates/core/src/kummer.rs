//! Automorphism bookkeeping for generalized Kummer moduli constructions.
//!
//! A construction is parametrized by `(n, d_1, d_2, s)`: the half-dimension
//! `n` with `d_1·d_2 = n + 1`, the polarization type `(d_1, d_2)` of the
//! surface, and a nonzero integer `s`. The canonical polarization bases
//! give the isogeny matrices
//!
//! ```text
//! φ = [[0,0,d1,0], [0,0,0,d2], [−d1,0,0,0], [0,−d2,0,0]]
//! φ̌ = [[0,0,−d2,0], [0,0,0,−d1], [d2,0,0,0], [0,d1,0,0]]
//! ```
//!
//! with `φ̌·φ = φ·φ̌ = (n+1)·I`. Torsion points are handled by clearing
//! denominators: a point of `S[n+1]` is an integer 4-vector mod `n+1`, and
//! the defining conditions of the translation subgroup
//! `K = {(x, ξ) : φx ≡ 0, φ̌ξ ≡ s·x mod n+1}` become congruences solved by
//! [`kernel_mod`] on an 8×8 block matrix.
//!
//! The group of all H²-trivial automorphisms is modeled as
//! `Z/2 ⋉ (Z/(n+1))^4` with the sign acting by inversion, so every element
//! `(−1, v)` is an involution. Conjugating by a translation `(1, u)` sends
//! `(−1, v)` to `(−1, v + 2u)`; orbits of involutions under a translation
//! subgroup `H` are therefore cosets of `2H`.

use num_bigint::BigInt;
use num_integer::Integer;
use thiserror::Error;

use crate::intlin::{cokernel, kernel_mod, FinAbGroup, IntMatrix};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ConfigError {
    #[error("require d1 | d2, got ({0}, {1})")]
    NotAChain(u64, u64),
    #[error("require d1·d2 = n+1, got d1·d2 = {0} and n+1 = {1}")]
    WrongDegree(u64, u64),
    #[error("s must be nonzero")]
    ZeroTwist,
    #[error("n must be positive")]
    ZeroDim,
}

/// Parameters `(n, d_1, d_2, s)` of a Kummer moduli construction.
///
/// `gcd(d_1, s) = 1` is the hypothesis under which the translation
/// subgroup is `(Z/(n+1))^4`; configs violating it are still accepted and
/// computed, with [`ModuliConfig::coprime`] reporting the violation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ModuliConfig {
    n: u64,
    d1: u64,
    d2: u64,
    s: i64,
}

impl ModuliConfig {
    pub fn new(n: u64, d1: u64, d2: u64, s: i64) -> Result<Self, ConfigError> {
        if n == 0 {
            return Err(ConfigError::ZeroDim);
        }
        if d1 == 0 || d2 % d1 != 0 {
            return Err(ConfigError::NotAChain(d1, d2));
        }
        if d1 * d2 != n + 1 {
            return Err(ConfigError::WrongDegree(d1 * d2, n + 1));
        }
        if s == 0 {
            return Err(ConfigError::ZeroTwist);
        }
        Ok(Self { n, d1, d2, s })
    }

    /// All valid configs with the given `n+1`, with `s` running over
    /// `1..=n+1`.
    pub fn all_for_degree(n_plus_1: u64) -> Vec<Self> {
        let mut out = Vec::new();
        for d1 in 1..=n_plus_1 {
            if n_plus_1 % d1 != 0 {
                continue;
            }
            let d2 = n_plus_1 / d1;
            if d2 % d1 != 0 {
                continue;
            }
            for s in 1..=n_plus_1 as i64 {
                out.push(Self::new(n_plus_1 - 1, d1, d2, s).expect("valid by construction"));
            }
        }
        out
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn d1(&self) -> u64 {
        self.d1
    }

    pub fn d2(&self) -> u64 {
        self.d2
    }

    pub fn s(&self) -> i64 {
        self.s
    }

    /// Whether the defining hypothesis `gcd(d_1, s) = 1` holds.
    pub fn coprime(&self) -> bool {
        (self.d1 as i64).gcd(&self.s) == 1
    }

    /// The polarization isogeny matrix `φ` in the polarization basis.
    pub fn phi(&self) -> IntMatrix {
        let (d1, d2) = (self.d1 as i64, self.d2 as i64);
        IntMatrix::from_i64_rows(&[
            &[0, 0, d1, 0],
            &[0, 0, 0, d2],
            &[-d1, 0, 0, 0],
            &[0, -d2, 0, 0],
        ])
    }

    /// The dual polarization isogeny matrix `φ̌`.
    pub fn phi_dual(&self) -> IntMatrix {
        let (d1, d2) = (self.d1 as i64, self.d2 as i64);
        IntMatrix::from_i64_rows(&[
            &[0, 0, -d2, 0],
            &[0, 0, 0, -d1],
            &[d2, 0, 0, 0],
            &[0, d1, 0, 0],
        ])
    }
}

/// The translation subgroup
/// `K = {(x, ξ) ∈ S[n+1] × Š[n+1] : φx ≡ 0, φ̌ξ ≡ s·x}`,
/// computed as the kernel mod `n+1` of the block matrix
/// `[[φ, 0], [−s·I, φ̌]]`. Isomorphic to `(Z/(n+1))^4` whenever
/// `gcd(d_1, s) = 1`.
pub fn translation_subgroup(cfg: &ModuliConfig) -> FinAbGroup {
    let m = BigInt::from(cfg.n + 1);
    kernel_mod(&translation_condition_matrix(cfg), &m)
}

/// The 8×8 matrix whose kernel mod `n+1` cuts out the translation
/// subgroup.
pub fn translation_condition_matrix(cfg: &ModuliConfig) -> IntMatrix {
    IntMatrix::from_blocks(
        &cfg.phi(),
        &IntMatrix::zero(4, 4),
        &IntMatrix::scalar(4, -cfg.s),
        &cfg.phi_dual(),
    )
}

/// The automorphisms respecting the fibration: the kernel of `φ̌`, of
/// isomorphism type `(Z/d_1 ⊕ Z/d_2)^2` in canonical form (so trivial
/// factors are dropped).
pub fn relative_automorphisms(cfg: &ModuliConfig) -> FinAbGroup {
    cokernel(&cfg.phi_dual())
}

/// The base-change isogeny `(y, λ) ↦ (s·y − φ̌λ, φy)` trivializing the
/// Albanese morphism, as the block matrix `[[s·I, −φ̌], [φ, 0]]`.
pub fn minimal_isogeny_matrix(cfg: &ModuliConfig) -> IntMatrix {
    IntMatrix::from_blocks(
        &IntMatrix::scalar(4, cfg.s),
        &cfg.phi_dual().neg(),
        &cfg.phi(),
        &IntMatrix::zero(4, 4),
    )
}

/// The complementary isogeny `(y, λ) ↦ (φ̌λ, s·λ − φy)`, as the block
/// matrix `[[0, φ̌], [−φ, s·I]]`.
pub fn splitting_isogeny_matrix(cfg: &ModuliConfig) -> IntMatrix {
    IntMatrix::from_blocks(
        &IntMatrix::zero(4, 4),
        &cfg.phi_dual(),
        &cfg.phi().neg(),
        &IntMatrix::scalar(4, cfg.s),
    )
}

/// Checks the factorization `M_φ · M_ψ = (n+1)·I_8` exactly.
pub fn verify_factorization(cfg: &ModuliConfig) -> bool {
    let product = &minimal_isogeny_matrix(cfg) * &splitting_isogeny_matrix(cfg);
    product == IntMatrix::scalar(8, cfg.n as i64 + 1)
}

/// Counts the involutions `(−1, v)` of `Z/2 ⋉ (Z/(n+1))^4` and their
/// orbits under conjugation by the relative automorphism group embedded in
/// the translations, for the canonical type `(1, n+1)`. Conjugation
/// translates `v` by `2H`, so orbits are the cosets of `2H` in
/// `(Z/(n+1))^4`.
pub fn involution_orbit_count(n: u64) -> (u64, u64) {
    let cfg = ModuliConfig::new(n, 1, n + 1, 1).expect("type (1, n+1) is always valid");
    involution_orbits_for(&cfg)
}

/// Same count with the relative group embedded for the config's actual
/// type: the kernel of `φ̌` mod `n+1` is
/// `d_1·Z × d_2·Z × d_1·Z × d_2·Z`, a subgroup of order `(n+1)²`.
pub fn involution_orbits_for(cfg: &ModuliConfig) -> (u64, u64) {
    let q = cfg.n + 1;
    let (d1, d2) = (cfg.d1, cfg.d2);
    let gens: Vec<[u64; 4]> = vec![
        [(2 * d1) % q, 0, 0, 0],
        [0, (2 * d2) % q, 0, 0],
        [0, 0, (2 * d1) % q, 0],
        [0, 0, 0, (2 * d2) % q],
    ];
    involution_orbits_under(q, &gens)
}

/// Orbit count of the `q^4` involutions under translation by the subgroup
/// generated by `gens` (already doubled); returns
/// `(involution_count, orbit_count)`.
pub fn involution_orbits_under(q: u64, gens: &[[u64; 4]]) -> (u64, u64) {
    let total = q.pow(4);
    // enumerate the subgroup 2H generated by the doubled generators
    let mut subgroup = std::collections::BTreeSet::new();
    subgroup.insert([0u64; 4]);
    let mut frontier = vec![[0u64; 4]];
    while let Some(v) = frontier.pop() {
        for gen in gens {
            let mut w = [0u64; 4];
            for i in 0..4 {
                w[i] = (v[i] + gen[i]) % q;
            }
            if subgroup.insert(w) {
                frontier.push(w);
            }
        }
    }
    (total, total / subgroup.len() as u64)
}

/// Multiplication in `Z/2 ⋉ (Z/(n+1))^4` with the sign acting by
/// inversion: `(ε1, v1)·(ε2, v2) = (ε1·ε2, v1 + ε1·v2)`.
pub fn semidirect_mul(
    q: u64,
    (e1, v1): (i8, [u64; 4]),
    (e2, v2): (i8, [u64; 4]),
) -> (i8, [u64; 4]) {
    debug_assert!(e1.abs() == 1 && e2.abs() == 1);
    let mut v = [0u64; 4];
    for i in 0..4 {
        let t = if e1 == 1 { v2[i] } else { (q - v2[i]) % q };
        v[i] = (v1[i] + t) % q;
    }
    (e1 * e2, v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::{Signed, Zero};

    #[test]
    fn config_validation() {
        assert!(ModuliConfig::new(2, 1, 3, 1).is_ok());
        assert!(ModuliConfig::new(3, 2, 2, 1).is_ok());
        assert_eq!(
            ModuliConfig::new(2, 3, 1, 1).unwrap_err(),
            ConfigError::NotAChain(3, 1)
        );
        assert_eq!(
            ModuliConfig::new(2, 1, 2, 1).unwrap_err(),
            ConfigError::WrongDegree(2, 3)
        );
        assert_eq!(
            ModuliConfig::new(2, 1, 3, 0).unwrap_err(),
            ConfigError::ZeroTwist
        );
        assert!(!ModuliConfig::new(3, 2, 2, 2).unwrap().coprime());
        assert!(ModuliConfig::new(3, 2, 2, 1).unwrap().coprime());
    }

    #[test]
    fn isogeny_composition_identity() {
        for cfg in ModuliConfig::all_for_degree(12) {
            let comp = &cfg.phi_dual() * &cfg.phi();
            assert_eq!(comp, IntMatrix::scalar(4, cfg.n() as i64 + 1));
        }
    }

    #[test]
    fn galois_group_for_kummer_fourfold() {
        let cfg = ModuliConfig::new(2, 1, 3, 1).unwrap();
        assert_eq!(translation_subgroup(&cfg), FinAbGroup::power(3, 4));
    }

    #[test]
    fn galois_group_square_type() {
        let cfg = ModuliConfig::new(3, 2, 2, 1).unwrap();
        assert_eq!(translation_subgroup(&cfg), FinAbGroup::power(4, 4));
    }

    #[test]
    fn galois_group_gcd_violated() {
        // gcd(d1, s) = 2: the group degenerates; compare with brute force
        let cfg = ModuliConfig::new(3, 2, 2, 2).unwrap();
        let fast = translation_subgroup(&cfg);
        let slow = brute_force_translation_subgroup(&cfg);
        assert_eq!(fast, slow);
        assert_ne!(fast, FinAbGroup::power(4, 4));
    }

    /// Exhaustive oracle over all (n+1)^8 pairs (x, ξ); keep n tiny.
    fn brute_force_translation_subgroup(cfg: &ModuliConfig) -> FinAbGroup {
        let q = cfg.n() + 1;
        let a = translation_condition_matrix(cfg);
        let qb = BigInt::from(q);
        let mut elements = Vec::new();
        let mut v = [0u64; 8];
        'outer: loop {
            let vb: Vec<BigInt> = v.iter().map(|&x| BigInt::from(x)).collect();
            if a.mul_vec(&vb).iter().all(|c| c.mod_floor(&qb).is_zero()) {
                elements.push(v);
            }
            for i in 0..8 {
                v[i] += 1;
                if v[i] < q {
                    continue 'outer;
                }
                v[i] = 0;
            }
            break;
        }
        // all elements killed by q, q = 4 here: count 2-torsion
        let count = |k: u64| {
            elements
                .iter()
                .filter(|e| e.iter().all(|&c| (c * k) % q == 0))
                .count()
        };
        // reconstruct (Z/2)^a ⊕ (Z/4)^b from N_2 = 2^(a+b), N_4 = 2^(a+2b)
        let n2 = count(2).trailing_zeros();
        let n4 = count(4).trailing_zeros();
        let b = n4 - n2;
        let a_exp = n2 - b;
        let mut orders = vec![BigInt::from(2); a_exp as usize];
        orders.extend(vec![BigInt::from(4); b as usize]);
        FinAbGroup::from_orders(&orders)
    }

    #[test]
    fn relative_group_types() {
        let cfg = ModuliConfig::new(2, 1, 3, 1).unwrap();
        assert_eq!(relative_automorphisms(&cfg), FinAbGroup::power(3, 2));
        let cfg = ModuliConfig::new(1, 1, 2, 1).unwrap();
        assert_eq!(relative_automorphisms(&cfg), FinAbGroup::power(2, 2));
        let cfg = ModuliConfig::new(3, 2, 2, 1).unwrap();
        assert_eq!(relative_automorphisms(&cfg), FinAbGroup::power(2, 4));
    }

    #[test]
    fn minimal_isogeny_degree_and_kernel() {
        let cfg = ModuliConfig::new(2, 1, 3, 1).unwrap();
        let m = minimal_isogeny_matrix(&cfg);
        assert_eq!(m.determinant().unwrap().abs(), BigInt::from(81));
        let ker = cokernel(&m);
        assert_eq!(ker.order().unwrap(), BigInt::from(81));
        assert_eq!(ker, translation_subgroup(&cfg));
    }

    #[test]
    fn factorization_holds_and_detects_corruption() {
        for cfg in ModuliConfig::all_for_degree(6) {
            assert!(verify_factorization(&cfg), "{cfg:?}");
        }
        // corrupt one sign of M_ψ: the product is no longer scalar
        let cfg = ModuliConfig::new(2, 1, 3, 1).unwrap();
        let mpsi_bad = IntMatrix::from_blocks(
            &IntMatrix::zero(4, 4),
            &cfg.phi_dual(),
            &cfg.phi(), // sign flipped
            &IntMatrix::scalar(4, cfg.s()),
        );
        let product = &minimal_isogeny_matrix(&cfg) * &mpsi_bad;
        assert_ne!(product, IntMatrix::scalar(8, 3));
    }

    #[test]
    fn involution_counts_for_fourfold() {
        assert_eq!(involution_orbit_count(2), (81, 9));
    }

    #[test]
    fn involutions_square_to_identity() {
        let q = 3;
        let inv = (-1i8, [1u64, 2, 0, 1]);
        let sq = semidirect_mul(q, inv, inv);
        assert_eq!(sq, (1, [0, 0, 0, 0]));
    }

    #[test]
    fn conjugation_translates_by_doubles() {
        let q = 3;
        let u = [1u64, 0, 2, 0];
        let v = [0u64, 1, 1, 2];
        let t = (1i8, u);
        let t_inv = (1i8, [(q - u[0]) % q, 0, (q - u[2]) % q, 0]);
        let conj = semidirect_mul(q, semidirect_mul(q, t, (-1, v)), t_inv);
        let expected = {
            let mut w = [0u64; 4];
            for i in 0..4 {
                w[i] = (v[i] + 2 * u[i]) % q;
            }
            (-1i8, w)
        };
        assert_eq!(conj, expected);
    }

    #[test]
    fn trivial_subgroup_gives_one_orbit_each() {
        let (count, orbits) = involution_orbits_under(3, &[]);
        assert_eq!((count, orbits), (81, 81));
    }
}
