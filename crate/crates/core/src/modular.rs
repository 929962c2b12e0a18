//! Modular S/T-matrix data: axiom validation, fusion-rule recovery by
//! the Verlinde sum, ring characters, invertible detection, centralizers,
//! and the checks tying the grading group and the central series to the
//! S-matrix.

use num_complex::Complex64;

use crate::error::Error;
use crate::grading::{adjoint_subring, universal_grading};
use crate::group::GroupTable;
use crate::ring::{FusionRing, SubringBasis};
use crate::series::{commutator_subring, lower_central_series, upper_central_series};
use crate::validation::ValidationReport;

/// Unnormalized S-matrix and T-vector of a modular category, in the
/// pseudounitary convention: the first S-row lists the (positive, real)
/// dimensions. Complex comparisons use an absolute tolerance scaled by
/// the global dimension.
#[derive(Debug, Clone)]
pub struct ModularData {
    rank: usize,
    s: Vec<Vec<Complex64>>,
    t: Vec<Complex64>,
    dual: Vec<usize>,
    tolerance: f64,
    dims: Vec<f64>,
    global_dim: f64,
}

pub const DEFAULT_MODULAR_TOLERANCE: f64 = 1e-8;

impl ModularData {
    pub fn new(
        s: Vec<Vec<Complex64>>,
        t: Vec<Complex64>,
        dual: Vec<usize>,
        tolerance: f64,
    ) -> Result<Self, Error> {
        let rank = s.len();
        if rank == 0 {
            return Err(Error::structural("rank must be positive"));
        }
        if let Some(row) = s.iter().find(|row| row.len() != rank) {
            return Err(Error::structural(format!(
                "S-matrix is not square: row of length {}",
                row.len()
            )));
        }
        if t.len() != rank {
            return Err(Error::structural(format!(
                "T-vector has length {} but rank is {}",
                t.len(),
                rank
            )));
        }
        if dual.len() != rank {
            return Err(Error::structural("dual permutation has the wrong length"));
        }
        if let Some(&d) = dual.iter().find(|&&d| d >= rank) {
            return Err(Error::structural(format!("dual index {d} out of range")));
        }
        if !(tolerance > 0.0) {
            return Err(Error::structural("tolerance must be positive"));
        }
        let dims: Vec<f64> = (0..rank).map(|i| s[0][i].re).collect();
        let global_dim = dims.iter().map(|d| d * d).sum();
        Ok(ModularData {
            rank,
            s,
            t,
            dual,
            tolerance,
            dims,
            global_dim,
        })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn s(&self, i: usize, j: usize) -> Complex64 {
        self.s[i][j]
    }

    pub fn theta(&self, i: usize) -> Complex64 {
        self.t[i]
    }

    pub fn dual_index(&self, i: usize) -> usize {
        self.dual[i]
    }

    pub fn dual_permutation(&self) -> &[usize] {
        &self.dual
    }

    /// Dimension of the i-th object, read from the first S-row.
    pub fn dim(&self, i: usize) -> f64 {
        self.dims[i]
    }

    pub fn dims(&self) -> &[f64] {
        &self.dims
    }

    pub fn global_dim(&self) -> f64 {
        self.global_dim
    }

    pub fn tolerance(&self) -> f64 {
        self.tolerance
    }

    /// Absolute comparison tolerance, scaled by the global dimension.
    pub fn cmp_tolerance(&self) -> f64 {
        self.tolerance * self.global_dim.max(1.0)
    }

    /// Two objects centralize each other when their S-entry equals the
    /// product of their dimensions exactly (as complex numbers).
    pub fn centralizes(&self, i: usize, j: usize) -> bool {
        (self.s[i][j] - Complex64::new(self.dims[i] * self.dims[j], 0.0)).norm()
            <= self.cmp_tolerance()
    }

    /// Check the S/T axioms within tolerance, reporting the worst
    /// violation magnitude per axiom.
    ///
    /// Axiom codes: `s-symmetry`, `s-dual-invariance`, `s-conjugation`,
    /// `s-orthogonality`, `s-row-norm`, `t-unimodular`, `t-unit`,
    /// `dimension-positivity`.
    pub fn validate(&self) -> ValidationReport {
        let r = self.rank;
        let tol = self.cmp_tolerance();
        let mut report = ValidationReport::default();

        for i in 0..r {
            for j in 0..r {
                let gap = (self.s[i][j] - self.s[j][i]).norm();
                if gap > tol {
                    report.record_magnitude(
                        "s-symmetry",
                        &[i, j],
                        gap,
                        format!("S[{i}][{j}] differs from S[{j}][{i}] by {gap:e}"),
                    );
                }
                let gap = (self.s[i][j] - self.s[self.dual[i]][self.dual[j]]).norm();
                if gap > tol {
                    report.record_magnitude(
                        "s-dual-invariance",
                        &[i, j],
                        gap,
                        format!("S[{i}][{j}] differs from the dual-pair entry by {gap:e}"),
                    );
                }
                let gap = (self.s[i][self.dual[j]] - self.s[i][j].conj()).norm();
                if gap > tol {
                    report.record_magnitude(
                        "s-conjugation",
                        &[i, j],
                        gap,
                        format!("S[{i}][{j}*] differs from the conjugate of S[{i}][{j}] by {gap:e}"),
                    );
                }
            }
        }

        for i in 0..r {
            for l in 0..r {
                let sum: Complex64 = (0..r).map(|j| self.s[i][j] * self.s[j][l]).sum();
                let expected = if self.dual[i] == l {
                    Complex64::new(self.global_dim, 0.0)
                } else {
                    Complex64::new(0.0, 0.0)
                };
                let gap = (sum - expected).norm();
                if gap > tol {
                    report.record_magnitude(
                        "s-orthogonality",
                        &[i, l],
                        gap,
                        format!("row {i} against row {l} misses by {gap:e}"),
                    );
                }
            }
        }

        for j in 0..r {
            let sum: f64 = (0..r).map(|i| self.s[i][j].norm_sqr()).sum();
            let gap = (sum - self.global_dim).abs();
            if gap > tol {
                report.record_magnitude(
                    "s-row-norm",
                    &[j],
                    gap,
                    format!("column {j} squared norm misses the global dimension by {gap:e}"),
                );
            }
        }

        for (i, theta) in self.t.iter().enumerate() {
            let gap = (theta.norm() - 1.0).abs();
            if gap > self.tolerance {
                report.record_magnitude(
                    "t-unimodular",
                    &[i],
                    gap,
                    format!("|T[{i}]| differs from 1 by {gap:e}"),
                );
            }
        }
        let gap = (self.t[0] - Complex64::new(1.0, 0.0)).norm();
        if gap > self.tolerance {
            report.record_magnitude("t-unit", &[0], gap, format!("T[0] differs from 1 by {gap:e}"));
        }

        let gap = (self.dims[0] - 1.0).abs();
        if gap > self.tolerance {
            report.record_magnitude(
                "dimension-positivity",
                &[0],
                gap,
                format!("the unit dimension differs from 1 by {gap:e}"),
            );
        }
        for i in 0..r {
            let imag = self.s[0][i].im.abs();
            if imag > tol || self.dims[i] <= 0.0 {
                report.record_magnitude(
                    "dimension-positivity",
                    &[i],
                    imag.max(-self.dims[i]),
                    format!("dimension {i} must be real and positive, got {}", self.s[0][i]),
                );
            }
        }

        report
    }

    /// Recover the fusion ring through the Verlinde sum
    /// `N[i][l][j] = (1/D) sum_k S[i][k] S[l][k] conj(S[j][k]) / d[k]`.
    /// Every value must sit within tolerance of a nonnegative integer and
    /// the rounded ring must satisfy the fusion-ring axioms.
    pub fn verlinde_fusion(&self) -> Result<VerlindeResult, Error> {
        let r = self.rank;
        let tol = self.cmp_tolerance();
        let mut entries = Vec::new();
        let mut max_residual = 0.0f64;
        for i in 0..r {
            for l in 0..r {
                for j in 0..r {
                    let mut sum = Complex64::new(0.0, 0.0);
                    for k in 0..r {
                        sum += self.s[i][k] * self.s[l][k] * self.s[j][k].conj() / self.dims[k];
                    }
                    sum /= self.global_dim;
                    let rounded = sum.re.round();
                    let residual = (sum - Complex64::new(rounded, 0.0)).norm();
                    max_residual = max_residual.max(residual);
                    if residual > tol || rounded < 0.0 {
                        return Err(Error::NotModular(format!(
                            "fusion coefficient ({i},{l},{j}) evaluates to {sum}, not a nonnegative integer"
                        )));
                    }
                    if rounded > 0.0 {
                        entries.push((i, l, j, rounded as u64));
                    }
                }
            }
        }
        let labels = (0..r).map(|i| format!("X{i}")).collect();
        let ring = FusionRing::new(labels, self.dual.clone(), entries)?;
        let report = ring.validate();
        if !report.pass() {
            return Err(Error::NotModular(format!(
                "recovered fusion rules violate the ring axioms: {:?}",
                report.violated_axioms()
            )));
        }
        Ok(VerlindeResult { ring, max_residual })
    }
}

/// Fusion ring recovered from an S-matrix, with the worst pre-rounding
/// deviation from an integer.
#[derive(Debug, Clone)]
pub struct VerlindeResult {
    pub ring: FusionRing,
    pub max_residual: f64,
}

/// The full character table of the recovered ring: column j sends basic i
/// to `S[i][j] / S[0][j]`. Column 0 is the dimension homomorphism.
#[derive(Debug, Clone)]
pub struct RingCharacters {
    pub values: Vec<Vec<Complex64>>,
    /// Worst deviation of any column from multiplicativity.
    pub max_hom_residual: f64,
}

pub fn ring_characters(md: &ModularData, ring: &FusionRing) -> RingCharacters {
    let r = md.rank();
    let values: Vec<Vec<Complex64>> = (0..r)
        .map(|i| (0..r).map(|j| md.s(i, j) / md.s(0, j)).collect())
        .collect();
    let mut max_hom_residual = 0.0f64;
    for j in 0..r {
        for i in 0..r {
            for l in 0..r {
                let lhs = values[i][j] * values[l][j];
                let rhs: Complex64 = (0..r)
                    .map(|k| ring.coeff(i, l, k) as f64 * values[k][j])
                    .sum();
                max_hom_residual = max_hom_residual.max((lhs - rhs).norm());
            }
        }
    }
    RingCharacters {
        values,
        max_hom_residual,
    }
}

/// Entrywise check of the twist identity
/// `S[i][j] = T[i]^-1 T[j]^-1 sum_k N[i*][j][k] T[k] d[k]`.
#[derive(Debug, Clone)]
pub struct BalancingReport {
    pub max_residual: f64,
    pub pass: bool,
}

pub fn balancing_check(md: &ModularData, ring: &FusionRing) -> BalancingReport {
    let r = md.rank();
    let mut max_residual = 0.0f64;
    for i in 0..r {
        for j in 0..r {
            let mut sum = Complex64::new(0.0, 0.0);
            for k in 0..r {
                let n = ring.coeff(md.dual_index(i), j, k);
                if n > 0 {
                    sum += n as f64 * md.theta(k) * md.dim(k);
                }
            }
            let predicted = sum / (md.theta(i) * md.theta(j));
            max_residual = max_residual.max((md.s(i, j) - predicted).norm());
        }
    }
    BalancingReport {
        max_residual,
        pass: max_residual <= md.cmp_tolerance(),
    }
}

/// Invertible objects detected from the S-matrix: those whose column has
/// every entry of maximal modulus. Cross-checked against the combinatorial
/// detection in the recovered ring; a mismatch is an invariant violation.
#[derive(Debug, Clone)]
pub struct InvertibleObjects {
    pub indices: Vec<usize>,
    pub group: GroupTable,
}

pub fn invertibles_from_smatrix(
    md: &ModularData,
    ring: &FusionRing,
) -> Result<InvertibleObjects, Error> {
    let r = md.rank();
    let tol = md.cmp_tolerance();
    let indices: Vec<usize> = (0..r)
        .filter(|&j| (0..r).all(|i| (md.s(i, j).norm() - md.dim(i) * md.dim(j)).abs() <= tol))
        .collect();
    let combinatorial = ring.invertible_basics();
    if indices != combinatorial {
        return Err(Error::invariant(format!(
            "S-matrix invertibles {indices:?} disagree with fusion invertibles {combinatorial:?}"
        )));
    }
    let position = |k: usize| indices.binary_search(&k);
    let mut table = vec![vec![0usize; indices.len()]; indices.len()];
    for (a, &i) in indices.iter().enumerate() {
        for (b, &j) in indices.iter().enumerate() {
            let support = ring.product_support(i, j);
            if support.len() != 1 {
                return Err(Error::invariant(format!(
                    "product of invertibles {i} and {j} is not a single basic"
                )));
            }
            table[a][b] = position(support[0]).map_err(|_| {
                Error::invariant(format!(
                    "product of invertibles {i} and {j} is not invertible"
                ))
            })?;
        }
    }
    let group = GroupTable::new(table, 0)
        .map_err(|e| Error::invariant(format!("invertibles do not form a group: {e}")))?;
    Ok(InvertibleObjects { indices, group })
}

/// Objects centralizing everything in `k`. The result is fusion-closed,
/// which the subring constructor asserts against the recovered ring.
pub fn centralizer(
    md: &ModularData,
    ring: &FusionRing,
    k: &SubringBasis,
) -> Result<SubringBasis, Error> {
    let members =
        (0..md.rank()).filter(|&i| k.indices().iter().all(|&j| md.centralizes(i, j)));
    SubringBasis::validated(ring, members)
}

/// Double-centralizer report for one fusion-closed subset.
#[derive(Debug, Clone)]
pub struct CentralizerReport {
    pub subcat: SubringBasis,
    pub centralizer: SubringBasis,
    pub double_centralizer: SubringBasis,
    pub double_equals_subcat: bool,
    /// |dim(K) dim(K') - D| / D.
    pub dim_product_residual: f64,
    /// K sits inside its own centralizer.
    pub symmetric: bool,
    /// K meets its centralizer only in the unit.
    pub modular: bool,
}

impl CentralizerReport {
    pub fn pass(&self) -> bool {
        self.double_equals_subcat && self.dim_product_residual <= RATIO_CHECK_TOLERANCE
    }
}

/// Relative tolerance on the dimension product identity.
pub const RATIO_CHECK_TOLERANCE: f64 = 1e-7;

pub fn double_centralizer_check(
    md: &ModularData,
    ring: &FusionRing,
    k: &SubringBasis,
) -> Result<CentralizerReport, Error> {
    let c = centralizer(md, ring, k)?;
    let cc = centralizer(md, ring, &c)?;
    let mass = |s: &SubringBasis| -> f64 {
        s.indices().iter().map(|&i| md.dim(i) * md.dim(i)).sum()
    };
    let product = mass(k) * mass(&c);
    let dim_product_residual = (product - md.global_dim()).abs() / md.global_dim();
    let symmetric = k.is_subset_of(&c);
    let modular = k
        .indices()
        .iter()
        .all(|&i| i == 0 || !c.contains(i));
    Ok(CentralizerReport {
        double_equals_subcat: cc == *k,
        subcat: k.clone(),
        centralizer: c,
        double_centralizer: cc,
        dim_product_residual,
        symmetric,
        modular,
    })
}

/// Check that the universal grading group matches the character group of
/// the invertibles: identical invariant factors, and for every invertible
/// j the normalized column `i -> S[i][j] / (d[i] d[j])` is constant on
/// grading blocks and defines a character of the grading group, distinct
/// for distinct j.
#[derive(Debug, Clone)]
pub struct CharacterIsoReport {
    pub universal_factors: Vec<u64>,
    pub invertible_factors: Vec<u64>,
    pub factors_match: bool,
    /// Worst deviation of a normalized column from block constancy.
    pub max_block_deviation: f64,
    pub characters_multiplicative: bool,
    pub characters_distinct: bool,
}

impl CharacterIsoReport {
    pub fn pass(&self) -> bool {
        self.factors_match
            && self.characters_multiplicative
            && self.characters_distinct
    }
}

pub fn universal_character_iso_check(
    md: &ModularData,
    ring: &FusionRing,
) -> Result<CharacterIsoReport, Error> {
    let grading = universal_grading(ring)?;
    let invertibles = invertibles_from_smatrix(md, ring)?;
    let universal_factors = grading.group.invariant_factors().map_err(|_| {
        Error::invariant("universal grading group of modular data must be abelian")
    })?;
    // Realize the character group explicitly; it shares the factors.
    let invertible_factors = invertibles
        .group
        .character_group()
        .map_err(|_| Error::invariant("invertibles of modular data must form an abelian group"))?
        .invariant_factors()?;
    let factors_match = universal_factors == invertible_factors;

    let tol = md.cmp_tolerance();
    let blocks = grading.components.len();
    let mut max_block_deviation = 0.0f64;
    let mut block_values: Vec<Vec<Complex64>> = Vec::new();
    for &j in &invertibles.indices {
        let mut values = Vec::with_capacity(blocks);
        for block in &grading.components {
            let rep = block[0];
            let value = md.s(rep, j) / (md.dim(rep) * md.dim(j));
            for &i in block {
                let gap = (md.s(i, j) / (md.dim(i) * md.dim(j)) - value).norm();
                max_block_deviation = max_block_deviation.max(gap);
            }
            values.push(value);
        }
        block_values.push(values);
    }
    let mut characters_multiplicative = max_block_deviation <= tol;
    for values in &block_values {
        for a in 0..blocks {
            for b in 0..blocks {
                let gap = (values[grading.group.op(a, b)] - values[a] * values[b]).norm();
                if gap > tol {
                    characters_multiplicative = false;
                }
            }
        }
    }
    let mut characters_distinct = true;
    for a in 0..block_values.len() {
        for b in (a + 1)..block_values.len() {
            let gap: f64 = block_values[a]
                .iter()
                .zip(&block_values[b])
                .map(|(x, y)| (x - y).norm())
                .fold(0.0, f64::max);
            if gap <= tol {
                characters_distinct = false;
            }
        }
    }

    Ok(CharacterIsoReport {
        universal_factors,
        invertible_factors,
        factors_match,
        max_block_deviation,
        characters_multiplicative,
        characters_distinct,
    })
}

/// Levelwise comparison of the two central series through centralizers:
/// the centralizer of step n of the descending series equals step n of
/// the ascending one. Also checks that the adjoint subring is the
/// centralizer of the pointed part, and that for nilpotency class c every
/// descending step from ceil(c/2) on is symmetric.
#[derive(Debug, Clone)]
pub struct CentralSeriesCentralizerReport {
    pub levels: Vec<LevelCheck>,
    pub adjoint_is_pointed_centralizer: bool,
    pub symmetric_tail_ok: bool,
    pub nilpotency_class: Option<usize>,
}

#[derive(Debug, Clone)]
pub struct LevelCheck {
    pub level: usize,
    pub upper: Vec<usize>,
    pub centralizer_of_upper: Vec<usize>,
    pub lower: Vec<usize>,
    pub equal: bool,
}

impl CentralSeriesCentralizerReport {
    pub fn pass(&self) -> bool {
        self.levels.iter().all(|l| l.equal)
            && self.adjoint_is_pointed_centralizer
            && self.symmetric_tail_ok
    }
}

pub fn central_series_centralizer_check(
    md: &ModularData,
    ring: &FusionRing,
) -> Result<CentralSeriesCentralizerReport, Error> {
    let upper = upper_central_series(ring);
    let lower = lower_central_series(ring)?;
    let top = upper.stabilized_at.max(lower.stabilized_at) + 1;
    let mut levels = Vec::new();
    for n in 0..=top {
        let c = centralizer(md, ring, upper.at(n))?;
        levels.push(LevelCheck {
            level: n,
            upper: upper.at(n).indices().to_vec(),
            centralizer_of_upper: c.indices().to_vec(),
            lower: lower.at(n).indices().to_vec(),
            equal: c == *lower.at(n),
        });
    }

    let adjoint = adjoint_subring(ring);
    let pointed = ring.pointed_subring();
    let adjoint_is_pointed_centralizer = centralizer(md, ring, &pointed)? == adjoint;

    let mut symmetric_tail_ok = true;
    if let Some(c) = upper.nilpotency_class {
        let from = c.div_ceil(2);
        for n in from..=c {
            let step = upper.at(n);
            if !step.is_subset_of(&centralizer(md, ring, step)?) {
                symmetric_tail_ok = false;
            }
        }
    }

    Ok(CentralSeriesCentralizerReport {
        levels,
        adjoint_is_pointed_centralizer,
        symmetric_tail_ok,
        nilpotency_class: upper.nilpotency_class,
    })
}

/// Identity tying the adjoint and the commutator through centralizers:
/// the centralizer of the adjoint of `k` equals the commutator of the
/// centralizer of `k`.
pub fn adjoint_commutator_identity(
    md: &ModularData,
    ring: &FusionRing,
    k: &SubringBasis,
) -> Result<bool, Error> {
    let (induced, to_ambient) = ring.induced_subring(k);
    let local = adjoint_subring(&induced);
    let k_ad = SubringBasis::validated(
        ring,
        local.indices().iter().map(|&l| to_ambient[l]),
    )?;
    let lhs = centralizer(md, ring, &k_ad)?;
    let rhs = commutator_subring(ring, &centralizer(md, ring, k)?)?;
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn modular(name: &str) -> (ModularData, FusionRing) {
        let entry = catalog::build(name).unwrap();
        let md = entry.modular.unwrap();
        let ring = md.verlinde_fusion().unwrap().ring;
        (md, ring)
    }

    #[test]
    fn catalog_modular_data_validates() {
        for name in ["ising", "fibonacci", "toric_code"] {
            let entry = catalog::build(name).unwrap();
            let report = entry.modular.unwrap().validate();
            assert!(report.pass(), "{name}: {:?}", report.violations);
        }
    }

    #[test]
    fn flipped_twist_fails_the_balancing_check() {
        let entry = catalog::build("ising").unwrap();
        let md = entry.modular.unwrap();
        let mut t: Vec<Complex64> = (0..3).map(|i| md.theta(i)).collect();
        t[1] = Complex64::new(1.0, 0.0);
        let s = (0..3)
            .map(|i| (0..3).map(|j| md.s(i, j)).collect())
            .collect();
        let flipped = ModularData::new(s, t, vec![0, 1, 2], md.tolerance()).unwrap();
        assert!(flipped.validate().pass());
        let ring = flipped.verlinde_fusion().unwrap().ring;
        let report = balancing_check(&flipped, &ring);
        assert!(!report.pass);
    }

    #[test]
    fn verlinde_recovers_toric_code_fusion() {
        let (_, ring) = modular("toric_code");
        let stored = catalog::build("toric_code").unwrap().ring;
        assert_eq!(ring.rank(), 4);
        for i in 0..4 {
            for j in 0..4 {
                for k in 0..4 {
                    assert_eq!(ring.coeff(i, j, k), stored.coeff(i, j, k));
                }
            }
        }
    }

    #[test]
    fn verlinde_recovers_ising_fusion() {
        let (_, ring) = modular("ising");
        assert_eq!(ring.coeff(2, 2, 1), 1);
        assert_eq!(ring.coeff(2, 2, 2), 0);
        assert_eq!(ring.coeff(1, 1, 0), 1);
    }

    #[test]
    fn verlinde_recovers_fibonacci_fusion() {
        let (_, ring) = modular("fibonacci");
        assert_eq!(ring.coeff(1, 1, 1), 1);
        assert_eq!(ring.coeff(1, 1, 0), 1);
    }

    #[test]
    fn characters_start_with_the_dimension_column() {
        let (md, ring) = modular("ising");
        let chars = ring_characters(&md, &ring);
        assert!(chars.max_hom_residual < 1e-8);
        assert!((chars.values[2][0].re - 2f64.sqrt()).abs() < 1e-9);
        for i in 0..3 {
            assert!((chars.values[0][i] - Complex64::new(1.0, 0.0)).norm() < 1e-9);
        }
    }

    #[test]
    fn toric_characters_are_signs() {
        let (md, ring) = modular("toric_code");
        let chars = ring_characters(&md, &ring);
        for row in &chars.values {
            for v in row {
                assert!((v.norm() - 1.0).abs() < 1e-9);
                assert!(v.im.abs() < 1e-9);
            }
        }
    }

    #[test]
    fn balancing_passes_on_catalog_data() {
        for name in ["ising", "fibonacci", "toric_code"] {
            let (md, ring) = modular(name);
            let report = balancing_check(&md, &ring);
            assert!(report.pass, "{name}: residual {}", report.max_residual);
        }
    }

    #[test]
    fn invertible_detection() {
        let (md, ring) = modular("toric_code");
        let inv = invertibles_from_smatrix(&md, &ring).unwrap();
        assert_eq!(inv.indices, vec![0, 1, 2, 3]);
        assert_eq!(inv.group.invariant_factors().unwrap(), vec![2, 2]);

        let (md, ring) = modular("ising");
        let inv = invertibles_from_smatrix(&md, &ring).unwrap();
        assert_eq!(inv.indices, vec![0, 1]);

        let (md, ring) = modular("fibonacci");
        let inv = invertibles_from_smatrix(&md, &ring).unwrap();
        assert_eq!(inv.indices, vec![0]);
    }

    #[test]
    fn ising_centralizers() {
        let (md, ring) = modular("ising");
        let whole = SubringBasis::whole(3);
        assert!(centralizer(&md, &ring, &whole).unwrap().is_trivial());
        let pointed = SubringBasis::validated(&ring, [0, 1]).unwrap();
        assert_eq!(centralizer(&md, &ring, &pointed).unwrap(), pointed);
        assert!(centralizer(&md, &ring, &SubringBasis::trivial())
            .unwrap()
            .is_whole(3));
    }

    #[test]
    fn ising_double_centralizer() {
        let (md, ring) = modular("ising");
        let k = SubringBasis::validated(&ring, [0, 1]).unwrap();
        let report = double_centralizer_check(&md, &ring, &k).unwrap();
        assert!(report.pass());
        assert!(report.symmetric);
        assert!(!report.modular);
        assert!(report.dim_product_residual < 1e-9);
    }

    #[test]
    fn toric_code_double_centralizer() {
        let (md, ring) = modular("toric_code");
        let k = SubringBasis::validated(&ring, [0, 1]).unwrap();
        let report = double_centralizer_check(&md, &ring, &k).unwrap();
        assert!(report.pass());
        assert_eq!(report.centralizer.indices(), &[0, 1]);
    }

    #[test]
    fn trivial_subcat_centralizer_is_everything() {
        let (md, ring) = modular("fibonacci");
        let report = double_centralizer_check(&md, &ring, &SubringBasis::trivial()).unwrap();
        assert!(report.pass());
        assert!(report.centralizer.is_whole(2));
    }

    #[test]
    fn character_iso_on_catalog_entries() {
        let (md, ring) = modular("ising");
        let report = universal_character_iso_check(&md, &ring).unwrap();
        assert!(report.pass());
        assert_eq!(report.universal_factors, vec![2]);

        let (md, ring) = modular("toric_code");
        let report = universal_character_iso_check(&md, &ring).unwrap();
        assert!(report.pass());
        assert_eq!(report.universal_factors, vec![2, 2]);

        let (md, ring) = modular("fibonacci");
        let report = universal_character_iso_check(&md, &ring).unwrap();
        assert!(report.pass());
        assert!(report.universal_factors.is_empty());
    }

    #[test]
    fn central_series_centralizers_on_ising() {
        let (md, ring) = modular("ising");
        let report = central_series_centralizer_check(&md, &ring).unwrap();
        assert!(report.pass());
        assert!(report.adjoint_is_pointed_centralizer);
        assert_eq!(report.nilpotency_class, Some(2));
        assert_eq!(report.levels[1].centralizer_of_upper, vec![0, 1]);
    }

    #[test]
    fn central_series_centralizers_on_toric_code() {
        let (md, ring) = modular("toric_code");
        let report = central_series_centralizer_check(&md, &ring).unwrap();
        assert!(report.pass());
        assert_eq!(report.levels[1].centralizer_of_upper, vec![0, 1, 2, 3]);
    }

    #[test]
    fn central_series_centralizers_on_su2_level_2() {
        let entry = catalog::build("su2_2").unwrap();
        let md = entry.modular.unwrap();
        let ring = md.verlinde_fusion().unwrap().ring;
        let report = central_series_centralizer_check(&md, &ring).unwrap();
        assert!(report.pass());
        assert_eq!(report.nilpotency_class, Some(2));
    }

    #[test]
    fn adjoint_commutator_identity_on_ising_subcats() {
        let (md, ring) = modular("ising");
        for k in ring.enumerate_subrings() {
            assert!(adjoint_commutator_identity(&md, &ring, &k).unwrap());
        }
    }
}
