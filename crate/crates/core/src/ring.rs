//! Fusion rings: basis, duality, sparse structure constants, axiom
//! validation, and the subring lattice.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::Error;
use crate::validation::ValidationReport;

/// A fusion ring `(R, B)`: rank-many basis elements, the unit fixed at
/// index 0, a duality involution on indices, and sparse nonnegative
/// integer structure constants `N[i][j][k]` (the coefficient of the k-th
/// basis element in the product of the i-th and j-th).
///
/// Construction checks structural well-formedness only (lengths and index
/// ranges); the ring axioms are checked by [`FusionRing::validate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FusionRing {
    rank: usize,
    labels: Vec<String>,
    dual: Vec<usize>,
    entries: BTreeMap<(usize, usize, usize), u64>,
}

impl FusionRing {
    pub fn new(
        labels: Vec<String>,
        dual: Vec<usize>,
        entries: impl IntoIterator<Item = (usize, usize, usize, u64)>,
    ) -> Result<Self, Error> {
        let rank = labels.len();
        if rank == 0 {
            return Err(Error::structural("rank must be positive"));
        }
        if dual.len() != rank {
            return Err(Error::structural(format!(
                "dual has length {} but rank is {}",
                dual.len(),
                rank
            )));
        }
        if let Some(&d) = dual.iter().find(|&&d| d >= rank) {
            return Err(Error::structural(format!(
                "dual index {d} out of range for rank {rank}"
            )));
        }
        let mut map = BTreeMap::new();
        for (i, j, k, v) in entries {
            if i >= rank || j >= rank || k >= rank {
                return Err(Error::structural(format!(
                    "structure constant index ({i},{j},{k}) out of range for rank {rank}"
                )));
            }
            if v > 0 {
                map.insert((i, j, k), v);
            }
        }
        Ok(FusionRing {
            rank,
            labels,
            dual,
            entries: map,
        })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn dual_index(&self, i: usize) -> usize {
        self.dual[i]
    }

    pub fn dual_permutation(&self) -> &[usize] {
        &self.dual
    }

    /// Structure constant `N[i][j][k]`; absent entries are 0.
    pub fn coeff(&self, i: usize, j: usize, k: usize) -> u64 {
        self.entries.get(&(i, j, k)).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize, usize), u64)> + '_ {
        self.entries.iter().map(|(&t, &v)| (t, v))
    }

    /// Indices with a nonzero coefficient in the product of basics i and j.
    pub fn product_support(&self, i: usize, j: usize) -> Vec<usize> {
        self.entries
            .range((i, j, 0)..=(i, j, self.rank - 1))
            .map(|(&(_, _, k), _)| k)
            .collect()
    }

    pub fn basis_product(&self, i: usize, j: usize) -> ElementVec {
        let mut out = vec![0i64; self.rank];
        for (&(_, _, k), &v) in self.entries.range((i, j, 0)..=(i, j, self.rank - 1)) {
            out[k] = v as i64;
        }
        ElementVec::new(out)
    }

    /// Matrix of left multiplication by the i-th basic element, laid out
    /// as `mat[k][j] = N[i][j][k]` so that `y = mat * x` in coefficients.
    pub fn left_matrix(&self, i: usize) -> Vec<Vec<u64>> {
        let mut mat = vec![vec![0u64; self.rank]; self.rank];
        for (&(_, j, k), &v) in self
            .entries
            .range((i, 0, 0)..=(i, self.rank - 1, self.rank - 1))
        {
            mat[k][j] = v;
        }
        mat
    }

    /// Check every based-ring axiom, reporting each violated axiom with
    /// its lexicographically smallest witness and a total count.
    ///
    /// Axiom codes: `dual-involution`, `unit-law`, `dual-unit`,
    /// `frobenius-reciprocity`, `associativity`.
    pub fn validate(&self) -> ValidationReport {
        let r = self.rank;
        let mut report = ValidationReport::default();

        if self.dual[0] != 0 {
            report.record(
                "dual-involution",
                &[0],
                format!("dual(0) = {} but the unit must be self-dual", self.dual[0]),
            );
        }
        for i in 0..r {
            if self.dual[self.dual[i]] != i {
                report.record(
                    "dual-involution",
                    &[i],
                    format!("dual(dual({i})) = {} != {i}", self.dual[self.dual[i]]),
                );
            }
        }

        // Dense copy: the axiom scans below touch every cell.
        let mut n = vec![0u64; r * r * r];
        for (&(i, j, k), &v) in &self.entries {
            n[(i * r + j) * r + k] = v;
        }
        let at = |i: usize, j: usize, k: usize| n[(i * r + j) * r + k];

        for j in 0..r {
            for k in 0..r {
                let expect = u64::from(j == k);
                if at(0, j, k) != expect {
                    report.record(
                        "unit-law",
                        &[0, j, k],
                        format!("N[0][{j}][{k}] = {} but the unit must act trivially", at(0, j, k)),
                    );
                }
                if at(j, 0, k) != expect {
                    report.record(
                        "unit-law",
                        &[j, 0, k],
                        format!("N[{j}][0][{k}] = {} but the unit must act trivially", at(j, 0, k)),
                    );
                }
            }
        }

        for i in 0..r {
            for j in 0..r {
                let expect = u64::from(j == self.dual[i]);
                if at(i, j, 0) != expect {
                    report.record(
                        "dual-unit",
                        &[i, j, 0],
                        format!(
                            "N[{i}][{j}][0] = {}, expected {expect} (unit multiplicity pairs a basic with its dual)",
                            at(i, j, 0)
                        ),
                    );
                }
            }
        }

        for i in 0..r {
            for j in 0..r {
                for k in 0..r {
                    let a = at(i, j, k);
                    let b = at(self.dual[i], k, j);
                    let c = at(k, self.dual[j], i);
                    if a != b || a != c {
                        report.record(
                            "frobenius-reciprocity",
                            &[i, j, k],
                            format!(
                                "N[{i}][{j}][{k}] = {a}, N[{}][{k}][{j}] = {b}, N[{k}][{}][{i}] = {c}",
                                self.dual[i], self.dual[j]
                            ),
                        );
                    }
                }
            }
        }

        for i in 0..r {
            for j in 0..r {
                for k in 0..r {
                    for l in 0..r {
                        let lhs: u64 = (0..r).map(|m| at(i, j, m) * at(m, k, l)).sum();
                        let rhs: u64 = (0..r).map(|m| at(j, k, m) * at(i, m, l)).sum();
                        if lhs != rhs {
                            report.record(
                                "associativity",
                                &[i, j, k, l],
                                format!("((X{i} X{j}) X{k}, X{l}) = {lhs} but (X{i} (X{j} X{k}), X{l}) = {rhs}"),
                            );
                        }
                    }
                }
            }
        }

        report
    }

    /// Bilinear product of two elements in basis coordinates.
    pub fn multiply(&self, x: &ElementVec, y: &ElementVec) -> Result<ElementVec, Error> {
        self.check_rank(x)?;
        self.check_rank(y)?;
        let mut out = vec![0i64; self.rank];
        for (&(i, j, k), &v) in &self.entries {
            let xi = x.coefficients[i];
            let yj = y.coefficients[j];
            if xi != 0 && yj != 0 {
                out[k] += xi * yj * v as i64;
            }
        }
        Ok(ElementVec::new(out))
    }

    /// Apply the duality involution: permutes coefficients by `dual`.
    pub fn dual_element(&self, x: &ElementVec) -> Result<ElementVec, Error> {
        self.check_rank(x)?;
        let mut out = vec![0i64; self.rank];
        for i in 0..self.rank {
            out[self.dual[i]] = x.coefficients[i];
        }
        Ok(ElementVec::new(out))
    }

    pub fn unit_element(&self) -> ElementVec {
        ElementVec::basis(self.rank, 0)
    }

    /// The element sum of all products of a basic with its dual. Its
    /// support powers generate the adjoint subring, and it is central.
    pub fn adjoint_element(&self) -> ElementVec {
        let mut out = vec![0i64; self.rank];
        for i in 0..self.rank {
            let j = self.dual[i];
            for (&(_, _, k), &v) in self.entries.range((i, j, 0)..=(i, j, self.rank - 1)) {
                out[k] += v as i64;
            }
        }
        ElementVec::new(out)
    }

    pub fn is_commutative(&self) -> bool {
        self.entries
            .iter()
            .all(|(&(i, j, k), &v)| self.coeff(j, i, k) == v)
    }

    /// Indices whose product with their dual is exactly the unit.
    pub fn invertible_basics(&self) -> Vec<usize> {
        (0..self.rank)
            .filter(|&i| {
                let support = self.product_support(i, self.dual[i]);
                support == [0]
            })
            .collect()
    }

    /// The maximal pointed based subring: the span of the invertibles.
    /// Invertibles are closed under product and dual, so no closure pass
    /// is needed; the checked constructor asserts that.
    pub fn pointed_subring(&self) -> SubringBasis {
        SubringBasis::validated(self, self.invertible_basics())
            .expect("invertible basics always form a based subring")
    }

    /// Smallest index set containing `seed` and the unit, closed under
    /// dual and product support. Reaches its fixpoint in at most rank
    /// passes.
    pub fn subring_closure(
        &self,
        seed: impl IntoIterator<Item = usize>,
    ) -> Result<SubringBasis, Error> {
        let mut set = BTreeSet::new();
        set.insert(0usize);
        for i in seed {
            if i >= self.rank {
                return Err(Error::structural(format!(
                    "seed index {i} out of range for rank {}",
                    self.rank
                )));
            }
            set.insert(i);
        }
        loop {
            let mut added = Vec::new();
            for &i in &set {
                let d = self.dual[i];
                if !set.contains(&d) {
                    added.push(d);
                }
                for &j in &set {
                    for k in self.product_support(i, j) {
                        if !set.contains(&k) {
                            added.push(k);
                        }
                    }
                }
            }
            if added.is_empty() {
                break;
            }
            set.extend(added);
        }
        Ok(SubringBasis::from_sorted(set.into_iter().collect()))
    }

    /// Restrict the ring to a based subring, reindexing to 0..len.
    /// Returns the restricted ring together with the local-to-ambient
    /// index map.
    pub fn induced_subring(&self, s: &SubringBasis) -> (FusionRing, Vec<usize>) {
        let ambient: Vec<usize> = s.indices().to_vec();
        let local: BTreeMap<usize, usize> = ambient
            .iter()
            .enumerate()
            .map(|(l, &a)| (a, l))
            .collect();
        let labels = ambient.iter().map(|&a| self.labels[a].clone()).collect();
        let dual = ambient.iter().map(|&a| local[&self.dual[a]]).collect();
        let mut entries = Vec::new();
        for (&(i, j, k), &v) in &self.entries {
            if let (Some(&li), Some(&lj), Some(&lk)) = (local.get(&i), local.get(&j), local.get(&k))
            {
                entries.push((li, lj, lk, v));
            }
        }
        let ring = FusionRing::new(labels, dual, entries)
            .expect("restriction of a well-formed ring is well-formed");
        (ring, ambient)
    }

    /// All based subrings, enumerated as index sets. Exponential in rank;
    /// intended for desk-scale rings.
    pub fn enumerate_subrings(&self) -> Vec<SubringBasis> {
        let r = self.rank;
        let free = r - 1;
        let mut out = BTreeSet::new();
        for mask in 0u32..(1u32 << free) {
            let mut set = vec![0usize];
            for b in 0..free {
                if mask & (1 << b) != 0 {
                    set.push(b + 1);
                }
            }
            if self.is_closed_set(&set) {
                out.insert(SubringBasis::from_sorted(set));
            }
        }
        out.into_iter().collect()
    }

    fn is_closed_set(&self, sorted: &[usize]) -> bool {
        let contains = |k: usize| sorted.binary_search(&k).is_ok();
        for &i in sorted {
            if !contains(self.dual[i]) {
                return false;
            }
            for &j in sorted {
                if self.product_support(i, j).iter().any(|&k| !contains(k)) {
                    return false;
                }
            }
        }
        true
    }

    fn check_rank(&self, x: &ElementVec) -> Result<(), Error> {
        if x.coefficients.len() != self.rank {
            return Err(Error::precondition(format!(
                "element has length {} but ring rank is {}",
                x.coefficients.len(),
                self.rank
            )));
        }
        Ok(())
    }
}

/// An element of the ring in basis coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElementVec {
    pub coefficients: Vec<i64>,
}

impl ElementVec {
    pub fn new(coefficients: Vec<i64>) -> Self {
        ElementVec { coefficients }
    }

    pub fn zero(rank: usize) -> Self {
        ElementVec::new(vec![0; rank])
    }

    pub fn basis(rank: usize, i: usize) -> Self {
        let mut c = vec![0; rank];
        c[i] = 1;
        ElementVec::new(c)
    }

    pub fn support(&self) -> Vec<usize> {
        self.coefficients
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, _)| i)
            .collect()
    }
}

/// A based subring presented as a sorted set of ambient basis indices:
/// contains the unit, closed under dual and under product support.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct SubringBasis {
    indices: Vec<usize>,
}

impl SubringBasis {
    /// Wrap an index set after checking the subring invariants.
    pub fn validated(
        ring: &FusionRing,
        indices: impl IntoIterator<Item = usize>,
    ) -> Result<Self, Error> {
        let set: BTreeSet<usize> = indices.into_iter().collect();
        if let Some(&i) = set.iter().find(|&&i| i >= ring.rank()) {
            return Err(Error::structural(format!(
                "subring index {i} out of range for rank {}",
                ring.rank()
            )));
        }
        if !set.contains(&0) {
            return Err(Error::invariant("subring must contain the unit index 0"));
        }
        let sorted: Vec<usize> = set.iter().copied().collect();
        if !ring.is_closed_set(&sorted) {
            return Err(Error::invariant(format!(
                "index set {sorted:?} is not closed under dual and product support"
            )));
        }
        Ok(SubringBasis { indices: sorted })
    }

    pub(crate) fn from_sorted(indices: Vec<usize>) -> Self {
        debug_assert!(indices.windows(2).all(|w| w[0] < w[1]));
        SubringBasis { indices }
    }

    pub fn whole(rank: usize) -> Self {
        SubringBasis {
            indices: (0..rank).collect(),
        }
    }

    pub fn trivial() -> Self {
        SubringBasis { indices: vec![0] }
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.indices.binary_search(&i).is_ok()
    }

    pub fn is_whole(&self, rank: usize) -> bool {
        self.indices.len() == rank
    }

    pub fn is_trivial(&self) -> bool {
        self.indices == [0]
    }

    pub fn is_subset_of(&self, other: &SubringBasis) -> bool {
        self.indices.iter().all(|&i| other.contains(i))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn ising() -> FusionRing {
        catalog::build("ising").unwrap().ring
    }

    fn fibonacci() -> FusionRing {
        catalog::build("fibonacci").unwrap().ring
    }

    #[test]
    fn z2_group_ring_satisfies_axioms() {
        let ring = catalog::build("z2").unwrap().ring;
        assert!(ring.validate().pass());
    }

    #[test]
    fn fibonacci_satisfies_axioms() {
        assert!(fibonacci().validate().pass());
    }

    #[test]
    fn zeroing_a_required_entry_breaks_frobenius_reciprocity() {
        let ring = ising();
        let entries: Vec<_> = ring
            .entries()
            .filter(|&((i, j, k), _)| (i, j, k) != (2, 2, 1))
            .map(|((i, j, k), v)| (i, j, k, v))
            .collect();
        let broken = FusionRing::new(ring.labels().to_vec(), vec![0, 1, 2], entries).unwrap();
        let report = broken.validate();
        assert!(!report.pass());
        let v = report.find("frobenius-reciprocity").unwrap();
        // first violating triple in lexicographic order
        assert_eq!(v.witness, vec![1, 2, 2]);
    }

    #[test]
    fn adding_sigma_to_sigma_squared_gives_a_valid_ring() {
        // sigma * sigma = 1 + eps + sigma is the rank-3 table with
        // dimensions (1, 1, 2): the S3 character ring in disguise. A
        // single-entry edit of a valid table can land on another valid one.
        let ring = ising();
        let mut entries: Vec<_> = ring.entries().map(|((i, j, k), v)| (i, j, k, v)).collect();
        entries.push((2, 2, 2, 1));
        let edited = FusionRing::new(ring.labels().to_vec(), vec![0, 1, 2], entries).unwrap();
        assert!(edited.validate().pass());
        let rep_s3 = catalog::build("rep_s3").unwrap().ring;
        for i in 0..3 {
            for j in 0..3 {
                for k in 0..3 {
                    assert_eq!(edited.coeff(i, j, k), rep_s3.coeff(i, j, k));
                }
            }
        }
    }

    #[test]
    fn unit_multiplication_is_identity() {
        let ring = ising();
        let x = ElementVec::new(vec![3, -1, 2]);
        assert_eq!(ring.multiply(&ring.unit_element(), &x).unwrap(), x);
        assert_eq!(ring.multiply(&x, &ring.unit_element()).unwrap(), x);
    }

    #[test]
    fn ising_sigma_squared() {
        let ring = ising();
        let sigma = ElementVec::basis(3, 2);
        let product = ring.multiply(&sigma, &sigma).unwrap();
        assert_eq!(product.coefficients, vec![1, 1, 0]);
    }

    #[test]
    fn fibonacci_tau_squared() {
        let ring = fibonacci();
        let tau = ElementVec::basis(2, 1);
        let product = ring.multiply(&tau, &tau).unwrap();
        assert_eq!(product.coefficients, vec![1, 1]);
    }

    #[test]
    fn rank_mismatch_is_an_error() {
        let ring = ising();
        let short = ElementVec::new(vec![1, 0]);
        assert!(ring.multiply(&short, &short).is_err());
        assert!(ring.dual_element(&short).is_err());
    }

    #[test]
    fn dual_of_z4_generator_is_its_inverse() {
        let ring = catalog::build("z4").unwrap().ring;
        let g = ElementVec::basis(4, 1);
        let dual = ring.dual_element(&g).unwrap();
        assert_eq!(dual, ElementVec::basis(4, 3));
    }

    #[test]
    fn ising_sigma_is_self_dual() {
        let ring = ising();
        let sigma = ElementVec::basis(3, 2);
        assert_eq!(ring.dual_element(&sigma).unwrap(), sigma);
    }

    #[test]
    fn invertibles_of_ising_are_the_z2_part() {
        assert_eq!(ising().invertible_basics(), vec![0, 1]);
    }

    #[test]
    fn invertibles_of_fibonacci_are_trivial() {
        assert_eq!(fibonacci().invertible_basics(), vec![0]);
    }

    #[test]
    fn every_group_ring_basic_is_invertible() {
        let ring = catalog::build("z2xz2").unwrap().ring;
        assert_eq!(ring.invertible_basics(), vec![0, 1, 2, 3]);
    }

    #[test]
    fn pointed_subring_of_s3_character_ring() {
        let ring = catalog::build("rep_s3").unwrap().ring;
        assert_eq!(ring.pointed_subring().indices(), &[0, 1]);
    }

    #[test]
    fn empty_seed_closes_to_unit() {
        let ring = ising();
        assert!(ring.subring_closure([]).unwrap().is_trivial());
    }

    #[test]
    fn sigma_generates_all_of_ising() {
        let ring = ising();
        assert!(ring.subring_closure([2]).unwrap().is_whole(3));
    }

    #[test]
    fn square_of_z4_generator_closes_to_the_two_element_subgroup() {
        let ring = catalog::build("z4").unwrap().ring;
        assert_eq!(ring.subring_closure([2]).unwrap().indices(), &[0, 2]);
    }

    #[test]
    fn commutativity_detection() {
        assert!(!catalog::build("s3").unwrap().ring.is_commutative());
        assert!(catalog::build("rep_s3").unwrap().ring.is_commutative());
        assert!(ising().is_commutative());
    }

    #[test]
    fn induced_subring_of_ising_pointed_part_is_z2() {
        let ring = ising();
        let pointed = ring.pointed_subring();
        let (sub, map) = ring.induced_subring(&pointed);
        assert_eq!(sub.rank(), 2);
        assert_eq!(map, vec![0, 1]);
        assert!(sub.validate().pass());
        assert_eq!(sub.product_support(1, 1), vec![0]);
    }

    #[test]
    fn subring_enumeration_finds_the_ising_lattice() {
        let subs = ising().enumerate_subrings();
        let sets: Vec<_> = subs.iter().map(|s| s.indices().to_vec()).collect();
        assert_eq!(sets, vec![vec![0], vec![0, 1], vec![0, 1, 2]]);
    }

    #[test]
    fn structural_errors_are_distinct_from_axiom_failures() {
        let bad = FusionRing::new(vec!["1".into()], vec![1], []);
        assert!(matches!(bad, Err(Error::Structural(_))));
        let bad = FusionRing::new(vec!["1".into(), "g".into()], vec![0, 1], [(0, 0, 5, 1)]);
        assert!(matches!(bad, Err(Error::Structural(_))));
    }
}
