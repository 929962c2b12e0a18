//! Upper and lower central series, nilpotency classes, and the duality
//! between the two series for commutative rings.

use crate::error::Error;
use crate::grading::adjoint_subring;
use crate::ring::{FusionRing, SubringBasis};

/// A central series, recorded in ambient basis indices.
///
/// The chain is strictly monotone up to `stabilized_at`, the first step
/// whose successor repeats it. `nilpotency_class` is the first step at
/// which the chain hits its terminal value (the trivial subring for the
/// descending chain, the whole basis for the ascending one); absent when
/// the chain stabilizes anywhere else.
#[derive(Debug, Clone)]
pub struct SeriesReport {
    pub chain: Vec<SubringBasis>,
    pub stabilized_at: usize,
    pub nilpotency_class: Option<usize>,
}

impl SeriesReport {
    /// Chain value at step n; constant at the stabilized value beyond the
    /// recorded prefix.
    pub fn at(&self, n: usize) -> &SubringBasis {
        &self.chain[n.min(self.chain.len() - 1)]
    }
}

/// Descending chain: the whole ring, then its adjoint subring, then the
/// adjoint of that restriction, and so on to a fixpoint. Each step is
/// computed on the ring induced by the previous step and mapped back to
/// ambient indices.
pub fn upper_central_series(ring: &FusionRing) -> SeriesReport {
    let mut chain = vec![SubringBasis::whole(ring.rank())];
    loop {
        let current = chain.last().unwrap();
        let (induced, to_ambient) = ring.induced_subring(current);
        let local = adjoint_subring(&induced);
        let next = SubringBasis::from_sorted(
            local.indices().iter().map(|&l| to_ambient[l]).collect(),
        );
        if &next == current {
            break;
        }
        assert!(
            chain.len() <= ring.rank(),
            "descending chain exceeded the rank bound"
        );
        chain.push(next);
    }
    let stabilized_at = chain.len() - 1;
    let nilpotency_class = chain.last().unwrap().is_trivial().then_some(stabilized_at);
    SeriesReport {
        chain,
        stabilized_at,
        nilpotency_class,
    }
}

/// First step at which the descending chain reaches the trivial subring,
/// if it ever does. Zero exactly for the rank-one ring.
pub fn nilpotency_class(ring: &FusionRing) -> Option<usize> {
    upper_central_series(ring).nilpotency_class
}

/// Basics whose self-pairing lands inside `s`. In a commutative ring this
/// index set is already a based subring; the constructor asserts closure
/// instead of re-closing.
pub fn commutator_subring(ring: &FusionRing, s: &SubringBasis) -> Result<SubringBasis, Error> {
    if !ring.is_commutative() {
        return Err(Error::precondition(
            "commutator subrings are defined for commutative rings only",
        ));
    }
    let members: Vec<usize> = (0..ring.rank())
        .filter(|&i| {
            ring.product_support(i, ring.dual_index(i))
                .iter()
                .all(|&k| s.contains(k))
        })
        .collect();
    SubringBasis::validated(ring, members)
}

/// Ascending chain: the trivial subring, the pointed subring, then
/// iterated commutators, all taken inside the ambient ring.
pub fn lower_central_series(ring: &FusionRing) -> Result<SeriesReport, Error> {
    if !ring.is_commutative() {
        return Err(Error::precondition(
            "the ascending central series is defined for commutative rings only",
        ));
    }
    let mut chain = vec![SubringBasis::trivial()];
    let pointed = ring.pointed_subring();
    if pointed != chain[0] {
        chain.push(pointed);
        loop {
            let next = commutator_subring(ring, chain.last().unwrap())?;
            if &next == chain.last().unwrap() {
                break;
            }
            assert!(
                chain.len() <= ring.rank(),
                "ascending chain exceeded the rank bound"
            );
            chain.push(next);
        }
    }
    let stabilized_at = chain.len() - 1;
    let nilpotency_class = chain
        .last()
        .unwrap()
        .is_whole(ring.rank())
        .then_some(stabilized_at);
    Ok(SeriesReport {
        chain,
        stabilized_at,
        nilpotency_class,
    })
}

/// Joint report on the two series: the descending chain reaches the
/// trivial subring at step n exactly when the ascending chain reaches the
/// whole ring at step n, and in that case step k of the descending chain
/// sits inside step n-k of the ascending one.
#[derive(Debug, Clone)]
pub struct DualityReport {
    pub upper: SeriesReport,
    pub lower: SeriesReport,
    pub equivalence_holds: bool,
    /// One certificate per k = 0..=n when both chains terminate at n.
    pub inclusions: Vec<InclusionCertificate>,
}

#[derive(Debug, Clone)]
pub struct InclusionCertificate {
    pub upper_step: usize,
    pub lower_step: usize,
    pub holds: bool,
}

impl DualityReport {
    pub fn pass(&self) -> bool {
        self.equivalence_holds && self.inclusions.iter().all(|c| c.holds)
    }
}

pub fn verify_series_duality(ring: &FusionRing) -> Result<DualityReport, Error> {
    let upper = upper_central_series(ring);
    let lower = lower_central_series(ring)?;
    let equivalence_holds = upper.nilpotency_class == lower.nilpotency_class;
    let mut inclusions = Vec::new();
    if let (Some(n), true) = (upper.nilpotency_class, equivalence_holds) {
        for k in 0..=n {
            inclusions.push(InclusionCertificate {
                upper_step: k,
                lower_step: n - k,
                holds: upper.at(k).is_subset_of(lower.at(n - k)),
            });
        }
    }
    Ok(DualityReport {
        upper,
        lower,
        equivalence_holds,
        inclusions,
    })
}
