//! Finite group actions, orbit counting and quotient bookkeeping.
//!
//! Groups here are explicit finite abelian groups (products of cyclic
//! factors); actions are full permutation tables validated on
//! construction. Orbit counting always cross-checks the Burnside identity
//! `|orbits|·|G| = Σ_g |Fix(g)|` internally.
//!
//! A [`FixedPointLedger`] records, for every nontrivial group element,
//! either an explicit fixed-point set inside a finite model with a
//! `G`-action, or declared totals (cardinality and Euler characteristic).
//! Ledgers drive two computations:
//!
//! * [`singularity_report`] — counts singular points of the quotient both
//!   by the stepwise two-quotient narrative (from declared inputs) and by
//!   a full orbit count on the explicit model, and flags disagreement
//!   rather than adjudicating it;
//! * [`orbifold_euler`] — the exact rational `(1/|G|)·Σ_g e(X^g)`.
//!
//! [`kummer_translation_model`] builds the one model pinned down exactly
//! by the fixed-point counts of a Kummer fourfold: a rank-2 group of
//! 3-torsion translations acting on the 3-element translation orbits of
//! `(Z/3)^4`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OrbitsError {
    #[error("invalid action: {0}")]
    InvalidAction(String),
    #[error("ledger is missing data: {0}")]
    MissingData(String),
    #[error("ledger parse error at line {0}: {1}")]
    Parse(usize, String),
    #[error("group element {0:?} is out of range")]
    BadElement(Vec<u64>),
}

/// A finite abelian group presented as `Z/m_1 × … × Z/m_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianGroup {
    moduli: Vec<u64>,
}

impl AbelianGroup {
    pub fn new(moduli: Vec<u64>) -> Self {
        assert!(
            !moduli.is_empty() && moduli.iter().all(|&m| m >= 1),
            "moduli must be positive"
        );
        Self { moduli }
    }

    pub fn moduli(&self) -> &[u64] {
        &self.moduli
    }

    pub fn order(&self) -> u64 {
        self.moduli.iter().product()
    }

    pub fn identity(&self) -> Vec<u64> {
        vec![0; self.moduli.len()]
    }

    pub fn contains(&self, el: &[u64]) -> bool {
        el.len() == self.moduli.len() && el.iter().zip(&self.moduli).all(|(&e, &m)| e < m)
    }

    pub fn add(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        a.iter()
            .zip(b)
            .zip(&self.moduli)
            .map(|((&x, &y), &m)| (x + y) % m)
            .collect()
    }

    pub fn neg(&self, a: &[u64]) -> Vec<u64> {
        a.iter()
            .zip(&self.moduli)
            .map(|(&x, &m)| (m - x) % m)
            .collect()
    }

    /// Mixed-radix index of an element; inverse of [`Self::element`].
    pub fn index_of(&self, el: &[u64]) -> usize {
        debug_assert!(self.contains(el));
        let mut idx = 0usize;
        for (&e, &m) in el.iter().zip(&self.moduli) {
            idx = idx * m as usize + e as usize;
        }
        idx
    }

    pub fn element(&self, mut idx: usize) -> Vec<u64> {
        let mut out = vec![0u64; self.moduli.len()];
        for i in (0..self.moduli.len()).rev() {
            let m = self.moduli[i] as usize;
            out[i] = (idx % m) as u64;
            idx /= m;
        }
        out
    }

    pub fn elements(&self) -> impl Iterator<Item = Vec<u64>> + '_ {
        (0..self.order() as usize).map(|i| self.element(i))
    }

    /// Elements of the cyclic subgroup generated by `gen`.
    pub fn cyclic_subgroup(&self, gen: &[u64]) -> Vec<Vec<u64>> {
        let mut out = vec![self.identity()];
        let mut cur = gen.to_vec();
        while cur != self.identity() {
            out.push(cur.clone());
            cur = self.add(&cur, gen);
        }
        out
    }
}

/// A validated action of an [`AbelianGroup`] on `{0, …, set_size−1}`:
/// the identity acts trivially, every element acts by a bijection, and
/// the table is compatible with the group law.
#[derive(Clone, Debug)]
pub struct GroupAction {
    group: AbelianGroup,
    set_size: usize,
    perms: Vec<Vec<usize>>,
}

impl GroupAction {
    pub fn new(
        group: AbelianGroup,
        set_size: usize,
        mut act: impl FnMut(&[u64], usize) -> usize,
    ) -> Result<Self, OrbitsError> {
        let perms: Vec<Vec<usize>> = group
            .elements()
            .map(|g| (0..set_size).map(|p| act(&g, p)).collect())
            .collect();
        Self::from_table(group, set_size, perms)
    }

    /// Builds the action from one permutation per cyclic factor generator.
    pub fn from_generator_perms(
        group: AbelianGroup,
        set_size: usize,
        gen_perms: &[Vec<usize>],
    ) -> Result<Self, OrbitsError> {
        if gen_perms.len() != group.moduli().len() {
            return Err(OrbitsError::InvalidAction(format!(
                "need {} generator permutations, got {}",
                group.moduli().len(),
                gen_perms.len()
            )));
        }
        for (i, p) in gen_perms.iter().enumerate() {
            if p.len() != set_size || p.iter().any(|&x| x >= set_size) {
                return Err(OrbitsError::InvalidAction(format!(
                    "generator {i} is not a permutation of 0..{set_size}"
                )));
            }
        }
        let act = |g: &[u64], p: usize| {
            let mut cur = p;
            for (i, &e) in g.iter().enumerate() {
                for _ in 0..e {
                    cur = gen_perms[i][cur];
                }
            }
            cur
        };
        Self::new(group, set_size, act)
    }

    fn from_table(
        group: AbelianGroup,
        set_size: usize,
        perms: Vec<Vec<usize>>,
    ) -> Result<Self, OrbitsError> {
        let id_idx = group.index_of(&group.identity());
        if perms[id_idx] != (0..set_size).collect::<Vec<_>>() {
            return Err(OrbitsError::InvalidAction(
                "identity element must act trivially".into(),
            ));
        }
        for (gi, p) in perms.iter().enumerate() {
            let mut seen = vec![false; set_size];
            for &img in p {
                if img >= set_size || seen[img] {
                    return Err(OrbitsError::InvalidAction(format!(
                        "element {:?} does not act bijectively",
                        group.element(gi)
                    )));
                }
                seen[img] = true;
            }
        }
        // compatibility with the group law
        for a in 0..perms.len() {
            for b in 0..perms.len() {
                let ab = group.index_of(&group.add(&group.element(a), &group.element(b)));
                for p in 0..set_size {
                    if perms[ab][p] != perms[a][perms[b][p]] {
                        return Err(OrbitsError::InvalidAction(format!(
                            "table violates compatibility at {:?}∘{:?}",
                            group.element(a),
                            group.element(b)
                        )));
                    }
                }
            }
        }
        Ok(Self { group, set_size, perms })
    }

    pub fn group(&self) -> &AbelianGroup {
        &self.group
    }

    pub fn set_size(&self) -> usize {
        self.set_size
    }

    pub fn apply(&self, g: &[u64], p: usize) -> usize {
        self.perms[self.group.index_of(g)][p]
    }

    pub fn fixed_points(&self, g: &[u64]) -> Vec<usize> {
        let perm = &self.perms[self.group.index_of(g)];
        (0..self.set_size).filter(|&p| perm[p] == p).collect()
    }

    pub fn stabilizer(&self, p: usize) -> Vec<Vec<u64>> {
        self.group
            .elements()
            .filter(|g| self.apply(g, p) == p)
            .collect()
    }

    /// Orbit decomposition of the whole set; see [`Self::orbits_of`].
    pub fn orbits(&self) -> OrbitDecomposition {
        self.orbits_of(&(0..self.set_size).collect::<Vec<_>>())
    }

    /// Orbit decomposition of an invariant subset. The Burnside identity
    /// is asserted internally on every call.
    pub fn orbits_of(&self, subset: &[usize]) -> OrbitDecomposition {
        let members: BTreeSet<usize> = subset.iter().copied().collect();
        assert!(
            members.iter().all(|&p| p < self.set_size),
            "subset out of range"
        );
        let mut orbit_of: BTreeMap<usize, usize> = BTreeMap::new();
        let mut histogram: BTreeMap<usize, usize> = BTreeMap::new();
        let mut count = 0usize;
        for &start in &members {
            if orbit_of.contains_key(&start) {
                continue;
            }
            let id = count;
            count += 1;
            let mut orbit = BTreeSet::new();
            for g in self.group.elements() {
                let img = self.apply(&g, start);
                assert!(
                    members.contains(&img),
                    "subset is not invariant under the action"
                );
                orbit.insert(img);
            }
            for &p in &orbit {
                orbit_of.insert(p, id);
            }
            *histogram.entry(orbit.len()).or_insert(0) += 1;
        }
        // Burnside: |G| · #orbits = Σ_g |Fix(g) ∩ subset|
        let fixed_sum: usize = self
            .group
            .elements()
            .map(|g| {
                let perm = &self.perms[self.group.index_of(&g)];
                members.iter().filter(|&&p| perm[p] == p).count()
            })
            .sum();
        assert_eq!(
            fixed_sum,
            count * self.group.order() as usize,
            "Burnside identity must hold on a validated action"
        );
        OrbitDecomposition { orbit_count: count, histogram, orbit_of }
    }
}

/// Result of an orbit computation: the number of orbits, a histogram of
/// orbit sizes, and the orbit id of every point touched.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitDecomposition {
    pub orbit_count: usize,
    pub histogram: BTreeMap<usize, usize>,
    pub orbit_of: BTreeMap<usize, usize>,
}

/// Fixed-set data for one group element: an explicit list of model points,
/// or declared totals for geometry that has no finite model.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FixedSetData {
    Explicit(Vec<usize>),
    Declared { count: u64, euler: i64 },
}

impl FixedSetData {
    pub fn cardinality(&self) -> u64 {
        match self {
            FixedSetData::Explicit(points) => points.len() as u64,
            FixedSetData::Declared { count, .. } => *count,
        }
    }

    /// Euler characteristic; explicit sets are isolated points.
    pub fn euler(&self) -> i64 {
        match self {
            FixedSetData::Explicit(points) => points.len() as i64,
            FixedSetData::Declared { euler, .. } => *euler,
        }
    }
}

/// Per-element fixed-set data for a finite group acting on a space,
/// optionally backed by an explicit finite model of the fixed loci.
#[derive(Clone, Debug)]
pub struct FixedPointLedger {
    group: AbelianGroup,
    model: Option<GroupAction>,
    fixed: BTreeMap<Vec<u64>, FixedSetData>,
    ambient_euler: Option<i64>,
}

impl FixedPointLedger {
    /// Validates that data is present for nontrivial elements only and
    /// that `X^g = X^{g⁻¹}` holds.
    pub fn new(
        group: AbelianGroup,
        model: Option<GroupAction>,
        fixed: BTreeMap<Vec<u64>, FixedSetData>,
        ambient_euler: Option<i64>,
    ) -> Result<Self, OrbitsError> {
        for g in fixed.keys() {
            if !group.contains(g) {
                return Err(OrbitsError::BadElement(g.clone()));
            }
            if *g == group.identity() {
                return Err(OrbitsError::InvalidAction(
                    "ledger stores nontrivial elements only; ambient data is separate".into(),
                ));
            }
        }
        for (g, data) in &fixed {
            let inv = group.neg(g);
            match fixed.get(&inv) {
                Some(other) if other == data => {}
                Some(_) => {
                    return Err(OrbitsError::InvalidAction(format!(
                        "fixed sets of {g:?} and its inverse differ"
                    )))
                }
                None => {
                    return Err(OrbitsError::MissingData(format!(
                        "inverse of {g:?} has no fixed-set data"
                    )))
                }
            }
        }
        if let Some(action) = &model {
            if action.group() != &group {
                return Err(OrbitsError::InvalidAction(
                    "model action group differs from ledger group".into(),
                ));
            }
        }
        Ok(Self { group, model, fixed, ambient_euler })
    }

    pub fn group(&self) -> &AbelianGroup {
        &self.group
    }

    pub fn model(&self) -> Option<&GroupAction> {
        self.model.as_ref()
    }

    pub fn fixed_data(&self) -> &BTreeMap<Vec<u64>, FixedSetData> {
        &self.fixed
    }

    pub fn ambient_euler(&self) -> Option<i64> {
        self.ambient_euler
    }

    /// Warnings for explicit entries that disagree with the model action.
    /// Disagreement is reported, not fatal.
    pub fn consistency_warnings(&self) -> Vec<String> {
        let mut warnings = Vec::new();
        if let Some(action) = &self.model {
            for (g, data) in &self.fixed {
                if let FixedSetData::Explicit(points) = data {
                    let actual: BTreeSet<usize> =
                        action.fixed_points(g).into_iter().collect();
                    let listed: BTreeSet<usize> = points.iter().copied().collect();
                    if actual != listed {
                        warnings.push(format!(
                            "element {g:?}: listed fixed set ({} points) differs from the \
                             model action ({} points)",
                            listed.len(),
                            actual.len()
                        ));
                    }
                }
            }
        }
        warnings
    }
}

/// The explicit fixed-point model of a Kummer fourfold's translation
/// automorphisms: `G = (Z/3)²` embeds as 3-torsion translations of
/// `T = (Z/3)^4`, and each order-3 subgroup `⟨τ⟩` contributes the set of
/// `τ`-translation orbits `{z, z+τ, z+2τ}` — 27 per subgroup, 108 model
/// points in all. Every nontrivial `τ` fixes exactly the 27 points of its
/// own subgroup's component.
pub fn kummer_translation_model() -> FixedPointLedger {
    let group = AbelianGroup::new(vec![3, 3]);
    // embed G into T = (Z/3)^4 on the first two coordinates
    let embed = |g: &[u64]| [g[0], g[1], 0, 0];
    let t_add = |a: [u64; 4], b: [u64; 4]| {
        [
            (a[0] + b[0]) % 3,
            (a[1] + b[1]) % 3,
            (a[2] + b[2]) % 3,
            (a[3] + b[3]) % 3,
        ]
    };

    // order-3 subgroups of (Z/3)², one canonical generator each
    let subgroup_gens: [[u64; 2]; 4] = [[0, 1], [1, 0], [1, 1], [1, 2]];

    // component of ⟨σ⟩: orbits of translation by σ̂ on T, keyed by the
    // lexicographically smallest element
    let orbit_rep = |z: [u64; 4], sigma: [u64; 4]| {
        let a = z;
        let b = t_add(z, sigma);
        let c = t_add(b, sigma);
        [a, b, c].into_iter().min().expect("nonempty")
    };

    let mut points: Vec<(usize, [u64; 4])> = Vec::new();
    let mut index: BTreeMap<(usize, [u64; 4]), usize> = BTreeMap::new();
    for (s_id, gen) in subgroup_gens.iter().enumerate() {
        let sigma = embed(gen);
        let mut reps = BTreeSet::new();
        for i in 0..81u64 {
            let z = [(i / 27) % 3, (i / 9) % 3, (i / 3) % 3, i % 3];
            reps.insert(orbit_rep(z, sigma));
        }
        debug_assert_eq!(reps.len(), 27);
        for rep in reps {
            index.insert((s_id, rep), points.len());
            points.push((s_id, rep));
        }
    }

    let action = GroupAction::new(group.clone(), points.len(), |g, p| {
        let (s_id, rep) = points[p];
        let sigma = embed(&subgroup_gens[s_id]);
        let moved = orbit_rep(t_add(rep, embed(g)), sigma);
        index[&(s_id, moved)]
    })
    .expect("translation action is valid");

    // fixed sets of distinct order-3 subgroups are disjoint: a 3-element
    // set invariant under two independent translations would carry a
    // 9-element orbit
    let mut seen: BTreeSet<usize> = BTreeSet::new();
    let mut fixed = BTreeMap::new();
    for g in group.elements() {
        if g == group.identity() {
            continue;
        }
        let pts = action.fixed_points(&g);
        assert_eq!(pts.len(), 27, "every nontrivial translation fixes 27 points");
        fixed.insert(g, FixedSetData::Explicit(pts));
    }
    for gen in &subgroup_gens {
        let pts = action.fixed_points(&[gen[0], gen[1]]);
        for p in pts {
            assert!(seen.insert(p), "fixed components must be disjoint");
            assert_eq!(
                action.stabilizer(p).len(),
                3,
                "stabilizers in the model have order exactly 3"
            );
        }
    }

    FixedPointLedger::new(group, Some(action), fixed, None).expect("model ledger is valid")
}

/// Declared inputs for the stepwise two-quotient count: the number of
/// singular points after the first quotient, how many classes they are
/// identified into by the second, and how many new fixed points the
/// second quotient contributes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TwoStepInputs {
    pub first_quotient_fixed: u64,
    pub identified_orbits: u64,
    pub new_fixed_second_step: u64,
}

impl TwoStepInputs {
    pub fn total(&self) -> u64 {
        self.identified_orbits + self.new_fixed_second_step
    }
}

/// Breakdown of the stepwise count derived from an explicit model, using
/// the first two cyclic factors as the two quotient steps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModelStepwise {
    pub first_quotient_fixed: u64,
    pub identified_orbits: u64,
    pub new_fixed_second_step: u64,
}

impl ModelStepwise {
    pub fn total(&self) -> u64 {
        self.identified_orbits + self.new_fixed_second_step
    }
}

/// Singularity accounting of a quotient: the stepwise narrative count (on
/// declared inputs), the full Burnside-backed orbit count (on the explicit
/// model), per-stabilizer-subgroup orbit counts, and a flag when the two
/// disagree. The report never adjudicates between them.
#[derive(Clone, Debug)]
pub struct SingularityReport {
    pub stepwise_declared: Option<u64>,
    pub declared_inputs: Option<TwoStepInputs>,
    pub model_total: Option<u64>,
    pub model_stepwise: Option<ModelStepwise>,
    pub per_stabilizer: Vec<(Vec<u64>, u64)>,
    pub flagged: bool,
    pub warnings: Vec<String>,
}

pub fn singularity_report(
    ledger: &FixedPointLedger,
    declared: Option<TwoStepInputs>,
) -> Result<SingularityReport, OrbitsError> {
    let mut warnings = ledger.consistency_warnings();
    let stepwise_declared = declared.as_ref().map(TwoStepInputs::total);

    let mut model_total = None;
    let mut model_stepwise = None;
    let mut per_stabilizer = Vec::new();

    if let Some(action) = ledger.model() {
        // union of all fixed sets: the points with nontrivial stabilizer
        let mut singular: BTreeSet<usize> = BTreeSet::new();
        for g in action.group().elements() {
            if g == action.group().identity() {
                continue;
            }
            singular.extend(action.fixed_points(&g));
        }
        let singular: Vec<usize> = singular.into_iter().collect();
        let decomposition = action.orbits_of(&singular);
        model_total = Some(decomposition.orbit_count as u64);

        // group orbits by the stabilizer subgroup of a representative
        let mut by_stab: BTreeMap<Vec<Vec<u64>>, u64> = BTreeMap::new();
        let mut seen_orbits = BTreeSet::new();
        for &p in &singular {
            let orbit_id = decomposition.orbit_of[&p];
            if !seen_orbits.insert(orbit_id) {
                continue;
            }
            let stab = action.stabilizer(p);
            *by_stab.entry(stab).or_insert(0) += 1;
        }
        per_stabilizer = by_stab
            .into_iter()
            .map(|(stab, count)| {
                // canonical generator: smallest nontrivial element
                let gen = stab
                    .iter()
                    .find(|g| **g != action.group().identity())
                    .cloned()
                    .unwrap_or_else(|| action.group().identity());
                (gen, count)
            })
            .collect();

        // stepwise derivation on the model: quotient by the first factor
        // generator f, then by the second f'
        let moduli = action.group().moduli();
        if moduli.len() >= 2 {
            let mut f = action.group().identity();
            f[0] = 1;
            let mut fp = action.group().identity();
            fp[1] = 1;
            let fix_f = action.fixed_points(&f);
            let sub_fp = action.group().cyclic_subgroup(&fp);
            // orbits of Fix(f) under ⟨f'⟩
            let identified = count_suborbit(action, &sub_fp, &fix_f);
            // points of X/f fixed by f': ⟨f⟩-orbits preserved by f'
            let sub_f = action.group().cyclic_subgroup(&f);
            let mut preserved = BTreeSet::new();
            for p in 0..action.set_size() {
                if fix_f.contains(&p) {
                    continue; // already counted among the old singularities
                }
                let orbit: BTreeSet<usize> =
                    sub_f.iter().map(|g| action.apply(g, p)).collect();
                let image: BTreeSet<usize> = orbit
                    .iter()
                    .map(|&x| action.apply(&fp, x))
                    .collect();
                if orbit == image {
                    preserved.insert(orbit.into_iter().min().expect("nonempty"));
                }
            }
            model_stepwise = Some(ModelStepwise {
                first_quotient_fixed: fix_f.len() as u64,
                identified_orbits: identified,
                new_fixed_second_step: preserved.len() as u64,
            });
        }
    } else if declared.is_none() {
        return Err(OrbitsError::MissingData(
            "ledger has no explicit model and no declared stepwise inputs".into(),
        ));
    }

    let flagged = match (stepwise_declared, model_total) {
        (Some(a), Some(b)) => a != b,
        _ => false,
    };
    if flagged {
        warnings.push(format!(
            "stepwise count {} and model orbit count {} disagree",
            stepwise_declared.expect("present"),
            model_total.expect("present")
        ));
    }

    Ok(SingularityReport {
        stepwise_declared,
        declared_inputs: declared,
        model_total,
        model_stepwise,
        per_stabilizer,
        flagged,
        warnings,
    })
}

/// Orbits of `subset` under the subgroup given by an explicit element
/// list.
fn count_suborbit(action: &GroupAction, subgroup: &[Vec<u64>], subset: &[usize]) -> u64 {
    let members: BTreeSet<usize> = subset.iter().copied().collect();
    let mut seen = BTreeSet::new();
    let mut count = 0;
    for &p in &members {
        if seen.contains(&p) {
            continue;
        }
        count += 1;
        for g in subgroup {
            let img = action.apply(g, p);
            debug_assert!(members.contains(&img));
            seen.insert(img);
        }
    }
    count
}

/// `(1/|G|) · Σ_{g∈G} e(X^g)` as an exact rational. The identity term is
/// the ambient Euler characteristic `e_ambient`; every nontrivial element
/// must have ledger data.
pub fn orbifold_euler(
    ledger: &FixedPointLedger,
    e_ambient: i64,
) -> Result<BigRational, OrbitsError> {
    let group = ledger.group();
    let mut total = BigInt::from(e_ambient);
    for g in group.elements() {
        if g == group.identity() {
            continue;
        }
        match ledger.fixed_data().get(&g) {
            Some(data) => total += BigInt::from(data.euler()),
            None => {
                return Err(OrbitsError::MissingData(format!(
                    "no fixed-set data for element {g:?}"
                )))
            }
        }
    }
    Ok(BigRational::new(total, BigInt::from(group.order())))
}

/// A cyclic quotient singularity `1/m(a_1, …, a_{2k})`: the germ of
/// `C^{2k}/(Z/m)` with the generator acting by `diag(ζ^{a_1}, …)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct CyclicLocalType {
    pub order: u64,
    pub weights: Vec<u64>,
}

impl fmt::Display for CyclicLocalType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ws: Vec<String> = self.weights.iter().map(u64::to_string).collect();
        write!(f, "1/{}({})", self.order, ws.join(","))
    }
}

/// All diagonal order-`m` actions on `C^{2k}` with no eigenvalue 1 that
/// preserve some nondegenerate alternating form, up to permutation:
/// the eigenvalue exponents must decompose into pairs `(a, m−a)`.
pub fn symplectic_cyclic_local_types(m: u64, dim: usize) -> Vec<CyclicLocalType> {
    assert!(is_prime(m), "order must be prime");
    assert!(dim % 2 == 0 && (2..=8).contains(&dim), "dimension must be even, ≤ 8");
    let mut out = Vec::new();
    let mut weights = vec![1u64; dim];
    enumerate_multisets(m, dim, 0, 1, &mut weights, &mut out);
    out
}

fn enumerate_multisets(
    m: u64,
    dim: usize,
    pos: usize,
    min: u64,
    weights: &mut Vec<u64>,
    out: &mut Vec<CyclicLocalType>,
) {
    if pos == dim {
        if pairs_up(m, weights) {
            out.push(CyclicLocalType { order: m, weights: weights.clone() });
        }
        return;
    }
    for a in min..m {
        weights[pos] = a;
        enumerate_multisets(m, dim, pos + 1, a, weights, out);
    }
}

/// Whether the multiset decomposes into pairs `(a, b)` with
/// `a + b ≡ 0 (mod m)`.
fn pairs_up(m: u64, weights: &[u64]) -> bool {
    let mut counts: BTreeMap<u64, i64> = BTreeMap::new();
    for &w in weights {
        *counts.entry(w).or_insert(0) += 1;
    }
    for (&a, &c) in &counts {
        let partner = (m - a) % m;
        if partner == a {
            if c % 2 != 0 {
                return false;
            }
        } else if counts.get(&partner).copied().unwrap_or(0) != c {
            return false;
        }
    }
    true
}

fn is_prime(m: u64) -> bool {
    if m < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= m {
        if m % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}
