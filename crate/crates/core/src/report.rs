//! Assembly of machine-readable analysis reports. Reports are plain JSON
//! values rendered through the deterministic writer in [`crate::io`];
//! identical inputs and flags give byte-identical output.

use serde_json::{json, Map, Value};

use crate::based_module::{divisibility_report, module_fp_data, BasedModule, DivisibilityReport};
use crate::error::Error;
use crate::fp::{fp_dimensions, FpData, FpOptions};
use crate::grading::{
    adjoint_subring, dimension_parity_grading, universal_grading, Grading, SquareFreeGrading,
};
use crate::group::GroupTable;
use crate::io::{self, RingFile};
use crate::modular::{
    adjoint_commutator_identity, balancing_check, central_series_centralizer_check,
    double_centralizer_check, invertibles_from_smatrix, ring_characters,
    universal_character_iso_check, BalancingReport, CentralSeriesCentralizerReport,
    CentralizerReport, CharacterIsoReport, InvertibleObjects, ModularData, RingCharacters,
};
use crate::ring::FusionRing;
use crate::series::{upper_central_series, verify_series_duality, DualityReport, SeriesReport};
use crate::validation::ValidationReport;

/// How a run ended, driving the process exit code.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    ValidationFailed,
    TheoremViolation,
}

fn validation_value(report: &ValidationReport) -> Value {
    json!({
        "pass": report.pass(),
        "violations": report
            .violations
            .iter()
            .map(|v| {
                json!({
                    "axiom": v.axiom,
                    "witness": v.witness,
                    "detail": v.detail,
                    "occurrences": v.occurrences,
                    "magnitude": v.magnitude,
                })
            })
            .collect::<Vec<_>>(),
    })
}

fn group_value(group: &GroupTable) -> Value {
    json!({
        "order": group.order(),
        "abelian": group.is_abelian(),
        "invariant_factors": group.invariant_factors().ok(),
    })
}

fn grading_value(grading: &Grading) -> Value {
    json!({
        "blocks": grading.components,
        "identity_block": grading.identity_block,
        "group": group_value(&grading.group),
    })
}

fn series_value(report: &SeriesReport) -> Value {
    json!({
        "chain": report
            .chain
            .iter()
            .map(|s| s.indices().to_vec())
            .collect::<Vec<_>>(),
        "stabilized_at": report.stabilized_at,
        "nilpotency_class": report.nilpotency_class,
    })
}

fn duality_value(report: &DualityReport) -> Value {
    json!({
        "equivalence_holds": report.equivalence_holds,
        "inclusions": report
            .inclusions
            .iter()
            .map(|c| {
                json!({
                    "upper_step": c.upper_step,
                    "lower_step": c.lower_step,
                    "holds": c.holds,
                })
            })
            .collect::<Vec<_>>(),
        "pass": report.pass(),
    })
}

fn fp_value(fp: &FpData) -> Value {
    json!({
        "dims": fp.dims,
        "ring_dim": fp.ring_dim,
        "ring_dim_is_integer": fp.ring_dim_is_integer(),
        "tolerance": fp.tolerance,
        "integer_flags": fp.integer_flags,
        "sq_integer_flags": fp.sq_integer_flags,
    })
}

fn parity_value(result: &Result<SquareFreeGrading, Error>) -> Value {
    match result {
        Ok(grading) => json!({
            "applicable": true,
            "keys": grading.keys,
            "components": grading.components,
            "group": group_value(&grading.group),
        }),
        Err(e) => json!({
            "applicable": false,
            "reason": e.to_string(),
        }),
    }
}

fn divisibility_value(report: &DivisibilityReport, labels: &[String]) -> Value {
    json!({
        "advisory": report.advisory,
        "all_integer": report.all_integer(),
        "rows": report
            .rows
            .iter()
            .map(|r| {
                json!({
                    "index": r.index,
                    "label": labels.get(r.index),
                    "dim": r.dim,
                    "module_ratio": r.module_ratio,
                    "module_ratio_is_integer": r.module_ratio_is_integer,
                    "component_ratio": r.component_ratio,
                    "component_ratio_is_integer": r.component_ratio_is_integer,
                })
            })
            .collect::<Vec<_>>(),
    })
}

/// Full analysis of one ring.
pub struct RingAnalysis {
    pub outcome: Outcome,
    value: Value,
    text: String,
}

impl RingAnalysis {
    pub fn json(&self) -> String {
        io::write_json(&self.value)
    }

    pub fn value(&self) -> &Value {
        &self.value
    }

    pub fn text(&self) -> String {
        self.text.clone()
    }
}

/// Run validation and, when it passes, the whole analysis pipeline.
/// `full` adds dimension, grading, and divisibility data on top of the
/// series sections.
pub fn analyze_ring(ring: &FusionRing, opts: &FpOptions, full: bool) -> Result<RingAnalysis, Error> {
    let validation = ring.validate();
    let mut map = Map::new();
    map.insert("schema_version".into(), json!(io::SCHEMA_VERSION));
    map.insert("rank".into(), json!(ring.rank()));
    map.insert("labels".into(), json!(ring.labels()));
    map.insert("tolerance".into(), json!(opts.tolerance));
    map.insert("max_iterations".into(), json!(opts.max_iterations));
    map.insert("commutative".into(), json!(ring.is_commutative()));
    map.insert("validation".into(), validation_value(&validation));

    let mut text = String::new();
    text.push_str(&format!(
        "ring: rank {} [{}]\n",
        ring.rank(),
        ring.labels().join(", ")
    ));
    if !validation.pass() {
        text.push_str("validation: FAIL\n");
        for v in &validation.violations {
            text.push_str(&format!(
                "  {} at {:?}: {} ({} occurrence(s))\n",
                v.axiom, v.witness, v.detail, v.occurrences
            ));
        }
        return Ok(RingAnalysis {
            outcome: Outcome::ValidationFailed,
            value: Value::Object(map),
            text,
        });
    }
    text.push_str("validation: PASS\n");

    let upper = upper_central_series(ring);
    map.insert("upper_series".into(), series_value(&upper));
    map.insert("nilpotency_class".into(), json!(upper.nilpotency_class));
    text.push_str(&format!(
        "upper series: {} step(s), nilpotency class {}\n",
        upper.stabilized_at,
        upper
            .nilpotency_class
            .map_or("none".to_string(), |c| c.to_string()),
    ));

    if ring.is_commutative() {
        let duality = verify_series_duality(ring)?;
        map.insert("lower_series".into(), series_value(&duality.lower));
        map.insert("duality".into(), duality_value(&duality));
        text.push_str(&format!(
            "lower series: {} step(s), reaches whole: {}\n",
            duality.lower.stabilized_at,
            duality.lower.nilpotency_class.is_some(),
        ));
        text.push_str(&format!(
            "series duality: {}\n",
            if duality.pass() { "PASS" } else { "FAIL" }
        ));
        if !duality.pass() {
            return Ok(RingAnalysis {
                outcome: Outcome::TheoremViolation,
                value: Value::Object(map),
                text,
            });
        }
    } else {
        map.insert("lower_series".into(), Value::Null);
        map.insert("duality".into(), Value::Null);
        text.push_str("lower series: skipped (ring is not commutative)\n");
    }

    if !full {
        return Ok(RingAnalysis {
            outcome: Outcome::Pass,
            value: Value::Object(map),
            text,
        });
    }

    let fp = fp_dimensions(ring, opts)?;
    map.insert("fp".into(), fp_value(&fp));
    text.push_str(&format!(
        "dims: [{}], ring dim {}\n",
        fp.dims
            .iter()
            .map(|d| format!("{d:.10}"))
            .collect::<Vec<_>>()
            .join(", "),
        fp.ring_dim,
    ));

    let adjoint = adjoint_subring(ring);
    let pointed = ring.pointed_subring();
    map.insert("adjoint".into(), json!(adjoint.indices()));
    map.insert("pointed".into(), json!(pointed.indices()));
    text.push_str(&format!(
        "adjoint: {:?}, pointed: {:?}\n",
        adjoint.indices(),
        pointed.indices()
    ));

    let grading = universal_grading(ring)?;
    map.insert("universal_grading".into(), grading_value(&grading));
    text.push_str(&format!(
        "universal grading: {} block(s), group order {}\n",
        grading.components.len(),
        grading.group.order()
    ));

    let parity = dimension_parity_grading(ring, &fp);
    map.insert("parity_grading".into(), parity_value(&parity));
    match &parity {
        Ok(g) => text.push_str(&format!("square-free grading keys: {:?}\n", g.keys)),
        Err(e) => text.push_str(&format!("square-free grading: not applicable ({e})\n")),
    }

    let module = BasedModule::regular(ring);
    let mfp = module_fp_data(ring, &module, &fp, opts)?;
    let divisibility = divisibility_report(ring, &module, &fp, &mfp)?;
    map.insert(
        "divisibility".into(),
        divisibility_value(&divisibility, ring.labels()),
    );
    text.push_str(&format!(
        "divisibility: {}{}\n",
        if divisibility.all_integer() {
            "all ratios integral"
        } else {
            "non-integral ratios present"
        },
        if divisibility.advisory {
            " (advisory: ring is not nilpotent)"
        } else {
            ""
        },
    ));

    Ok(RingAnalysis {
        outcome: Outcome::Pass,
        value: Value::Object(map),
        text,
    })
}

fn centralizer_report_value(report: &CentralizerReport) -> Value {
    json!({
        "subcat": report.subcat.indices(),
        "centralizer": report.centralizer.indices(),
        "double_centralizer": report.double_centralizer.indices(),
        "double_equals_subcat": report.double_equals_subcat,
        "dim_product_residual": report.dim_product_residual,
        "symmetric": report.symmetric,
        "modular": report.modular,
        "pass": report.pass(),
    })
}

fn balancing_value(report: &BalancingReport) -> Value {
    json!({"max_residual": report.max_residual, "pass": report.pass})
}

fn characters_value(chars: &RingCharacters) -> Value {
    json!({
        "values": chars
            .values
            .iter()
            .map(|row| row.iter().map(|z| (z.re, z.im)).collect::<Vec<_>>())
            .collect::<Vec<_>>(),
        "max_hom_residual": chars.max_hom_residual,
    })
}

fn invertibles_value(inv: &InvertibleObjects) -> Value {
    json!({"indices": inv.indices, "group": group_value(&inv.group)})
}

fn iso_value(report: &CharacterIsoReport) -> Value {
    json!({
        "universal_factors": report.universal_factors,
        "invertible_factors": report.invertible_factors,
        "factors_match": report.factors_match,
        "max_block_deviation": report.max_block_deviation,
        "characters_multiplicative": report.characters_multiplicative,
        "characters_distinct": report.characters_distinct,
        "pass": report.pass(),
    })
}

fn central_series_value(report: &CentralSeriesCentralizerReport) -> Value {
    json!({
        "levels": report
            .levels
            .iter()
            .map(|l| {
                json!({
                    "level": l.level,
                    "upper": l.upper,
                    "centralizer_of_upper": l.centralizer_of_upper,
                    "lower": l.lower,
                    "equal": l.equal,
                })
            })
            .collect::<Vec<_>>(),
        "adjoint_is_pointed_centralizer": report.adjoint_is_pointed_centralizer,
        "symmetric_tail_ok": report.symmetric_tail_ok,
        "nilpotency_class": report.nilpotency_class,
        "pass": report.pass(),
    })
}

/// Full analysis of one modular datum.
pub struct ModularAnalysis {
    pub outcome: Outcome,
    value: Value,
    text: String,
}

impl ModularAnalysis {
    pub fn json(&self) -> String {
        io::write_json(&self.value)
    }

    pub fn value(&self) -> &Value {
        &self.value
    }

    pub fn text(&self) -> String {
        self.text.clone()
    }
}

pub fn analyze_modular(md: &ModularData) -> Result<ModularAnalysis, Error> {
    let mut map = Map::new();
    map.insert("schema_version".into(), json!(io::SCHEMA_VERSION));
    map.insert("rank".into(), json!(md.rank()));
    map.insert("tolerance".into(), json!(md.tolerance()));
    map.insert("dims".into(), json!(md.dims()));
    map.insert("global_dim".into(), json!(md.global_dim()));

    let mut text = String::new();
    text.push_str(&format!(
        "modular data: rank {}, global dimension {}\n",
        md.rank(),
        md.global_dim()
    ));

    let validation = md.validate();
    map.insert("validation".into(), validation_value(&validation));
    if !validation.pass() {
        text.push_str("validation: FAIL\n");
        for v in &validation.violations {
            text.push_str(&format!(
                "  {} at {:?}: {}\n",
                v.axiom, v.witness, v.detail
            ));
        }
        return Ok(ModularAnalysis {
            outcome: Outcome::ValidationFailed,
            value: Value::Object(map),
            text,
        });
    }
    text.push_str("validation: PASS\n");

    let verlinde = md.verlinde_fusion()?;
    let ring = &verlinde.ring;
    map.insert(
        "verlinde".into(),
        json!({
            "max_residual": verlinde.max_residual,
            "ring": serde_json::to_value(RingFile::from_ring(ring)).expect("ring serializes"),
        }),
    );
    text.push_str(&format!(
        "fusion rules recovered (worst integer residual {:.3e})\n",
        verlinde.max_residual
    ));

    let chars = ring_characters(md, ring);
    map.insert("characters".into(), characters_value(&chars));

    let balancing = balancing_check(md, ring);
    map.insert("balancing".into(), balancing_value(&balancing));
    text.push_str(&format!(
        "twist balancing: {} (worst residual {:.3e})\n",
        if balancing.pass { "PASS" } else { "FAIL" },
        balancing.max_residual
    ));

    let invertibles = invertibles_from_smatrix(md, ring)?;
    map.insert("invertibles".into(), invertibles_value(&invertibles));
    text.push_str(&format!(
        "invertibles: {:?} (group order {})\n",
        invertibles.indices,
        invertibles.group.order()
    ));

    let iso = universal_character_iso_check(md, ring)?;
    map.insert("universal_character_iso".into(), iso_value(&iso));
    text.push_str(&format!(
        "grading group vs invertible characters: {} (factors {:?})\n",
        if iso.pass() { "PASS" } else { "FAIL" },
        iso.universal_factors
    ));

    let central = central_series_centralizer_check(md, ring)?;
    map.insert("central_series_centralizer".into(), central_series_value(&central));
    text.push_str(&format!(
        "central series vs centralizers: {}\n",
        if central.pass() { "PASS" } else { "FAIL" }
    ));

    let subcats = ring.enumerate_subrings();
    let mut rows = Vec::new();
    let mut lattice_pass = true;
    let mut identity_pass = true;
    for k in &subcats {
        let report = double_centralizer_check(md, ring, k)?;
        if !report.pass() {
            lattice_pass = false;
        }
        let identity = adjoint_commutator_identity(md, ring, k)?;
        if !identity {
            identity_pass = false;
        }
        let mut row = centralizer_report_value(&report);
        row.as_object_mut()
            .expect("report row is an object")
            .insert("adjoint_commutator_identity".into(), json!(identity));
        rows.push(row);
    }
    map.insert(
        "centralizer_lattice".into(),
        json!({
            "subcat_count": subcats.len(),
            "all_pass": lattice_pass,
            "adjoint_commutator_identity_ok": identity_pass,
            "subcats": rows,
        }),
    );
    text.push_str(&format!(
        "centralizer lattice over {} subcategories: {}\n",
        subcats.len(),
        if lattice_pass && identity_pass {
            "PASS"
        } else {
            "FAIL"
        }
    ));

    let all_pass = balancing.pass && iso.pass() && central.pass() && lattice_pass && identity_pass;
    let outcome = if all_pass {
        Outcome::Pass
    } else {
        Outcome::TheoremViolation
    };
    map.insert("pass".into(), json!(all_pass));
    text.push_str(&format!(
        "overall: {}\n",
        if all_pass { "PASS" } else { "FAIL" }
    ));

    Ok(ModularAnalysis {
        outcome,
        value: Value::Object(map),
        text,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn analyze_ising_is_deterministic_and_passes() {
        let ring = catalog::build("ising").unwrap().ring;
        let opts = FpOptions::default();
        let a = analyze_ring(&ring, &opts, true).unwrap();
        let b = analyze_ring(&ring, &opts, true).unwrap();
        assert_eq!(a.outcome, Outcome::Pass);
        assert_eq!(a.json(), b.json());
        assert_eq!(a.value()["nilpotency_class"], json!(2));
    }

    #[test]
    fn analyze_trivial_ring() {
        let ring = catalog::build("trivial").unwrap().ring;
        let a = analyze_ring(&ring, &FpOptions::default(), true).unwrap();
        assert_eq!(a.outcome, Outcome::Pass);
        assert_eq!(a.value()["nilpotency_class"], json!(0));
        assert_eq!(a.value()["universal_grading"]["group"]["order"], json!(1));
    }

    #[test]
    fn analyze_flags_invalid_rings() {
        let ring = FusionRing::new(
            vec!["1".into(), "g".into()],
            vec![0, 1],
            [(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1)],
        )
        .unwrap();
        let a = analyze_ring(&ring, &FpOptions::default(), true).unwrap();
        assert_eq!(a.outcome, Outcome::ValidationFailed);
        assert!(!a.value()["validation"]["pass"].as_bool().unwrap());
    }

    #[test]
    fn analyze_modular_toric_code_passes() {
        let md = catalog::build("toric_code").unwrap().modular.unwrap();
        let a = analyze_modular(&md).unwrap();
        assert_eq!(a.outcome, Outcome::Pass);
        assert!(a.value()["pass"].as_bool().unwrap());
        assert_eq!(a.value()["centralizer_lattice"]["all_pass"], json!(true));
    }

    #[test]
    fn text_reports_mention_the_verdict() {
        let ring = catalog::build("rep_q8").unwrap().ring;
        let a = analyze_ring(&ring, &FpOptions::default(), true).unwrap();
        assert!(a.text().contains("validation: PASS"));
        assert!(a.text().contains("nilpotency class 2"));
    }
}
