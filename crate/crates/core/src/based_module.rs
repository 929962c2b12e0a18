//! Based modules over fusion rings: validation, decomposition over a
//! subring, Frobenius-Perron data, the grading-group action on
//! components, and dimension divisibility reports.

use std::collections::BTreeMap;

use crate::error::Error;
use crate::fp::{perron_vector, FpData, FpOptions};
use crate::grading::{adjoint_subring, universal_grading, Grading};
use crate::ring::{FusionRing, SubringBasis};
use crate::series::nilpotency_class;
use crate::validation::ValidationReport;

/// Relative tolerance for integrality of dimension ratios; looser than
/// the eigenvector tolerance because ratios amplify eigenvector error.
pub const RATIO_TOLERANCE: f64 = 1e-7;

/// A based left module: `action[i][j][k]` is the coefficient of module
/// basic k in the action of ring basic i on module basic j.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasedModule {
    ring_rank: usize,
    module_rank: usize,
    entries: BTreeMap<(usize, usize, usize), u64>,
}

impl BasedModule {
    pub fn new(
        ring_rank: usize,
        module_rank: usize,
        entries: impl IntoIterator<Item = (usize, usize, usize, u64)>,
    ) -> Result<Self, Error> {
        if ring_rank == 0 || module_rank == 0 {
            return Err(Error::structural("ranks must be positive"));
        }
        let mut map = BTreeMap::new();
        for (i, j, k, v) in entries {
            if i >= ring_rank || j >= module_rank || k >= module_rank {
                return Err(Error::structural(format!(
                    "action index ({i},{j},{k}) out of range"
                )));
            }
            if v > 0 {
                map.insert((i, j, k), v);
            }
        }
        Ok(BasedModule {
            ring_rank,
            module_rank,
            entries: map,
        })
    }

    /// The ring acting on itself by left multiplication.
    pub fn regular(ring: &FusionRing) -> BasedModule {
        let entries = ring.entries().map(|((i, j, k), v)| (i, j, k, v));
        BasedModule::new(ring.rank(), ring.rank(), entries)
            .expect("ring structure constants are in range")
    }

    pub fn module_rank(&self) -> usize {
        self.module_rank
    }

    pub fn coeff(&self, i: usize, j: usize, k: usize) -> u64 {
        self.entries.get(&(i, j, k)).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize, usize), u64)> + '_ {
        self.entries.iter().map(|(&t, &v)| (t, v))
    }

    /// Check the module axioms: the unit acts as the identity, acting by
    /// a product agrees with acting twice, and the matrices of a basic
    /// and its dual are transposes.
    ///
    /// Axiom codes: `module-unit`, `module-associativity`,
    /// `module-adjointness`.
    pub fn validate(&self, ring: &FusionRing) -> Result<ValidationReport, Error> {
        if ring.rank() != self.ring_rank {
            return Err(Error::precondition(format!(
                "module was built over rank {} but the ring has rank {}",
                self.ring_rank,
                ring.rank()
            )));
        }
        let r = ring.rank();
        let m = self.module_rank;
        let mut report = ValidationReport::default();

        for j in 0..m {
            for k in 0..m {
                let expect = u64::from(j == k);
                if self.coeff(0, j, k) != expect {
                    report.record(
                        "module-unit",
                        &[0, j, k],
                        format!("unit action entry ({j},{k}) is {}", self.coeff(0, j, k)),
                    );
                }
            }
        }

        for i in 0..r {
            for j in 0..m {
                for k in 0..m {
                    let a = self.coeff(i, j, k);
                    let b = self.coeff(ring.dual_index(i), k, j);
                    if a != b {
                        report.record(
                            "module-adjointness",
                            &[i, j, k],
                            format!(
                                "action[{i}][{j}][{k}] = {a} but action[{}][{k}][{j}] = {b}",
                                ring.dual_index(i)
                            ),
                        );
                    }
                }
            }
        }

        for i in 0..r {
            for l in 0..r {
                for j in 0..m {
                    for k in 0..m {
                        let lhs: u64 = (0..r)
                            .map(|x| ring.coeff(i, l, x) * self.coeff(x, j, k))
                            .sum();
                        let rhs: u64 = (0..m)
                            .map(|x| self.coeff(l, j, x) * self.coeff(i, x, k))
                            .sum();
                        if lhs != rhs {
                            report.record(
                                "module-associativity",
                                &[i, l, j, k],
                                format!("acting by the product gives {lhs} but acting twice gives {rhs}"),
                            );
                        }
                    }
                }
            }
        }
        Ok(report)
    }

    /// Connected components of the module basis under the action of the
    /// basics in `s`. Blocks are sorted and ordered by minimal index.
    pub fn decompose_over(&self, ring: &FusionRing, s: &SubringBasis) -> Vec<Vec<usize>> {
        let m = self.module_rank;
        let mut component = vec![usize::MAX; m];
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        for start in 0..m {
            if component[start] != usize::MAX {
                continue;
            }
            let id = blocks.len();
            let mut members = vec![start];
            component[start] = id;
            let mut queue = vec![start];
            while let Some(j) = queue.pop() {
                for &i in s.indices() {
                    for k in 0..m {
                        // adjointness makes the relation symmetric, but
                        // scan both directions so corrupt input cannot
                        // split asymmetrically
                        if (self.coeff(i, j, k) > 0 || self.coeff(i, k, j) > 0)
                            && component[k] == usize::MAX
                        {
                            component[k] = id;
                            members.push(k);
                            queue.push(k);
                        }
                    }
                }
            }
            members.sort_unstable();
            blocks.push(members);
        }
        let _ = ring;
        blocks
    }

    fn is_indecomposable(&self, ring: &FusionRing) -> bool {
        self.decompose_over(ring, &SubringBasis::whole(ring.rank())).len() == 1
    }
}

/// Frobenius-Perron data of a based module: the positive common
/// eigenvector of the action matrices, normalized to minimum 1 on each
/// indecomposable component, and the squared mass per component.
#[derive(Debug, Clone)]
pub struct ModuleFpData {
    pub dims: Vec<f64>,
    /// Components over the full ring, each sorted.
    pub components: Vec<Vec<usize>>,
    /// Squared dimension mass per component.
    pub component_dims: Vec<f64>,
    pub tolerance: f64,
}

impl ModuleFpData {
    pub fn total_dim(&self) -> f64 {
        self.component_dims.iter().sum()
    }
}

/// Compute the module eigenvector per indecomposable component by power
/// iteration on the total action matrix restricted to the component,
/// where indecomposability makes it strictly positive.
pub fn module_fp_data(
    ring: &FusionRing,
    module: &BasedModule,
    fp: &FpData,
    opts: &FpOptions,
) -> Result<ModuleFpData, Error> {
    let m = module.module_rank();
    let components = module.decompose_over(ring, &SubringBasis::whole(ring.rank()));
    let mut dims = vec![0.0f64; m];
    for block in &components {
        let n = block.len();
        let mut total = vec![vec![0.0f64; n]; n];
        for (a, &j) in block.iter().enumerate() {
            for (b, &k) in block.iter().enumerate() {
                let mut acc = 0.0;
                for i in 0..ring.rank() {
                    acc += module.coeff(i, j, k) as f64;
                }
                total[b][a] = acc;
            }
        }
        let v = perron_vector(&total, opts)?;
        let min = v.iter().cloned().fold(f64::MAX, f64::min);
        for (a, &j) in block.iter().enumerate() {
            dims[j] = v[a] / min;
        }
    }

    // Eigenvector property against the ring dimensions.
    for i in 0..ring.rank() {
        for k in 0..m {
            let lhs: f64 = (0..m)
                .map(|j| module.coeff(i, j, k) as f64 * dims[j])
                .sum();
            let rhs = fp.dims[i] * dims[k];
            if (lhs - rhs).abs() > 100.0 * opts.tolerance * rhs.max(1.0) {
                return Err(Error::NoConvergence {
                    iterations: opts.max_iterations,
                    residual: (lhs - rhs).abs(),
                });
            }
        }
    }

    let component_dims = components
        .iter()
        .map(|block| block.iter().map(|&j| dims[j] * dims[j]).sum())
        .collect();
    Ok(ModuleFpData {
        dims,
        components,
        component_dims,
        tolerance: opts.tolerance,
    })
}

/// The action of the universal grading group on the components of an
/// indecomposable module over the adjoint subring. The action is read
/// from one witness pair per (block, component) and then verified over
/// every pair; it is transitive and mass-preserving.
#[derive(Debug, Clone)]
pub struct USetAction {
    /// Components over the adjoint subring.
    pub components: Vec<Vec<usize>>,
    /// `action[block][component]` is the image component.
    pub action: Vec<Vec<usize>>,
    pub grading: Grading,
    /// Squared-dimension mass per component.
    pub component_masses: Vec<f64>,
}

pub fn uset_action(
    ring: &FusionRing,
    module: &BasedModule,
    fp: &FpData,
    opts: &FpOptions,
) -> Result<USetAction, Error> {
    if !module.is_indecomposable(ring) {
        return Err(Error::precondition(
            "the grading-group action is defined for indecomposable modules",
        ));
    }
    let grading = universal_grading(ring)?;
    let adjoint = adjoint_subring(ring);
    let components = module.decompose_over(ring, &adjoint);
    let comp_of = {
        let mut v = vec![usize::MAX; module.module_rank()];
        for (id, block) in components.iter().enumerate() {
            for &j in block {
                v[j] = id;
            }
        }
        v
    };

    let blocks = grading.components.len();
    let mut action = vec![vec![usize::MAX; components.len()]; blocks];
    for (a, block) in grading.components.iter().enumerate() {
        for (x, comp) in components.iter().enumerate() {
            let mut target = usize::MAX;
            for &i in block {
                for &j in comp {
                    for k in 0..module.module_rank() {
                        if module.coeff(i, j, k) == 0 {
                            continue;
                        }
                        if target == usize::MAX {
                            target = comp_of[k];
                        } else if comp_of[k] != target {
                            return Err(Error::invariant(format!(
                                "basic {i} moves component {x} into two different components"
                            )));
                        }
                    }
                }
            }
            if target == usize::MAX {
                return Err(Error::invariant(format!(
                    "block {a} annihilates component {x}"
                )));
            }
            action[a][x] = target;
        }
    }

    // Group action laws.
    for (x, _) in components.iter().enumerate() {
        if action[grading.identity_block][x] != x {
            return Err(Error::invariant("identity block does not act trivially"));
        }
    }
    for a in 0..blocks {
        for b in 0..blocks {
            for x in 0..components.len() {
                if action[grading.group.op(a, b)][x] != action[a][action[b][x]] {
                    return Err(Error::invariant("component action is not a group action"));
                }
            }
        }
    }
    // Transitivity: the orbit of component 0 is everything.
    let mut reached = vec![false; components.len()];
    for a in 0..blocks {
        reached[action[a][0]] = true;
    }
    if !reached.iter().all(|&r| r) {
        return Err(Error::invariant("action is not transitive on components"));
    }

    // Equal masses across components.
    let mfp = module_fp_data(ring, module, fp, opts)?;
    let component_masses: Vec<f64> = components
        .iter()
        .map(|block| block.iter().map(|&j| mfp.dims[j] * mfp.dims[j]).sum())
        .collect();
    let first = component_masses[0];
    for (x, &mass) in component_masses.iter().enumerate() {
        if (mass - first).abs() > 100.0 * opts.tolerance * first.max(1.0) {
            return Err(Error::invariant(format!(
                "component {x} has mass {mass} but component 0 has mass {first}"
            )));
        }
    }

    Ok(USetAction {
        components,
        action,
        grading,
        component_masses,
    })
}

/// Ratio of a module (or component) dimension to the squared dimension of
/// each module basic, with integer flags. For nilpotent rings every ratio
/// must be a positive integer; for other rings the report is advisory.
#[derive(Debug, Clone)]
pub struct DivisibilityReport {
    pub rows: Vec<DivisibilityRow>,
    /// Set when the ring is not nilpotent, where integrality is not
    /// promised.
    pub advisory: bool,
}

#[derive(Debug, Clone)]
pub struct DivisibilityRow {
    pub index: usize,
    pub dim: f64,
    /// Total module mass over the squared dimension of this basic.
    pub module_ratio: f64,
    pub module_ratio_is_integer: bool,
    /// Mass of this basic's component over the adjoint subring, over its
    /// squared dimension.
    pub component_ratio: f64,
    pub component_ratio_is_integer: bool,
}

impl DivisibilityReport {
    pub fn all_integer(&self) -> bool {
        self.rows
            .iter()
            .all(|r| r.module_ratio_is_integer && r.component_ratio_is_integer)
    }
}

pub fn divisibility_report(
    ring: &FusionRing,
    module: &BasedModule,
    fp: &FpData,
    mfp: &ModuleFpData,
) -> Result<DivisibilityReport, Error> {
    if mfp.components.len() != 1 {
        return Err(Error::precondition(
            "divisibility ratios are defined for indecomposable modules",
        ));
    }
    let advisory = nilpotency_class(ring).is_none();
    let total = mfp.total_dim();

    let adjoint = adjoint_subring(ring);
    let adjoint_components = module.decompose_over(ring, &adjoint);
    let mass_of = |j: usize| -> f64 {
        let block = adjoint_components
            .iter()
            .find(|b| b.binary_search(&j).is_ok())
            .expect("components partition the module basis");
        block.iter().map(|&x| mfp.dims[x] * mfp.dims[x]).sum()
    };

    let near_int = |x: f64| (x - x.round()).abs() <= RATIO_TOLERANCE * x.abs().max(1.0);
    let rows = (0..module.module_rank())
        .map(|j| {
            let d2 = mfp.dims[j] * mfp.dims[j];
            let module_ratio = total / d2;
            let component_ratio = mass_of(j) / d2;
            DivisibilityRow {
                index: j,
                dim: mfp.dims[j],
                module_ratio,
                module_ratio_is_integer: near_int(module_ratio),
                component_ratio,
                component_ratio_is_integer: near_int(component_ratio),
            }
        })
        .collect();
    let _ = fp;
    Ok(DivisibilityReport { rows, advisory })
}
