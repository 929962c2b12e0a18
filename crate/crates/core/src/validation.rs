//! Axiom-violation reports shared by ring, module, and modular validation.

/// One violated axiom, with the witnessing index tuple.
///
/// For exact (integer) checks `witness` is the lexicographically smallest
/// violating tuple and `magnitude` is `None`. For tolerance checks the
/// witness is the worst violator and `magnitude` its deviation.
#[derive(Debug, Clone, PartialEq)]
pub struct Violation {
    pub axiom: &'static str,
    pub witness: Vec<usize>,
    pub detail: String,
    pub occurrences: usize,
    pub magnitude: Option<f64>,
}

/// Outcome of validating a structure against its defining axioms.
#[derive(Debug, Clone, Default)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn pass(&self) -> bool {
        self.violations.is_empty()
    }

    /// Record a violation for `axiom`, keeping the first witness seen and
    /// counting repeats. Exact checks scan in lexicographic order, so the
    /// kept witness is the smallest one.
    pub(crate) fn record(&mut self, axiom: &'static str, witness: &[usize], detail: String) {
        if let Some(v) = self.violations.iter_mut().find(|v| v.axiom == axiom) {
            v.occurrences += 1;
        } else {
            self.violations.push(Violation {
                axiom,
                witness: witness.to_vec(),
                detail,
                occurrences: 1,
                magnitude: None,
            });
        }
    }

    /// Record a tolerance violation, keeping the worst magnitude.
    pub(crate) fn record_magnitude(
        &mut self,
        axiom: &'static str,
        witness: &[usize],
        magnitude: f64,
        detail: String,
    ) {
        if let Some(v) = self.violations.iter_mut().find(|v| v.axiom == axiom) {
            v.occurrences += 1;
            if magnitude > v.magnitude.unwrap_or(0.0) {
                v.witness = witness.to_vec();
                v.magnitude = Some(magnitude);
                v.detail = detail;
            }
        } else {
            self.violations.push(Violation {
                axiom,
                witness: witness.to_vec(),
                detail,
                occurrences: 1,
                magnitude: Some(magnitude),
            });
        }
    }

    pub fn violated_axioms(&self) -> Vec<&'static str> {
        self.violations.iter().map(|v| v.axiom).collect()
    }

    pub fn find(&self, axiom: &str) -> Option<&Violation> {
        self.violations.iter().find(|v| v.axiom == axiom)
    }
}
