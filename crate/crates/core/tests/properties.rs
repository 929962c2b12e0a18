//! Structural identities checked across the whole catalog, plus
//! randomized properties for the closure and duality operators.

use proptest::prelude::*;

use fusionkit_core::based_module::{module_fp_data, uset_action, BasedModule};
use fusionkit_core::catalog;
use fusionkit_core::fp::{fp_dimensions, FpOptions};
use fusionkit_core::grading::{adjoint_subring, factor_grading, universal_grading};
use fusionkit_core::modular::{
    adjoint_commutator_identity, centralizer, double_centralizer_check,
};
use fusionkit_core::ring::{ElementVec, FusionRing, SubringBasis};
use fusionkit_core::series::{
    commutator_subring, lower_central_series, nilpotency_class, upper_central_series,
};

fn all_rings() -> Vec<(String, FusionRing)> {
    catalog::build_all()
        .unwrap()
        .into_iter()
        .map(|e| (e.name.to_string(), e.ring))
        .collect()
}

fn commutative_rings() -> Vec<(String, FusionRing)> {
    all_rings()
        .into_iter()
        .filter(|(_, r)| r.is_commutative())
        .collect()
}

fn induced_adjoint(ring: &FusionRing, s: &SubringBasis) -> SubringBasis {
    let (induced, to_ambient) = ring.induced_subring(s);
    let local = adjoint_subring(&induced);
    SubringBasis::validated(ring, local.indices().iter().map(|&l| to_ambient[l])).unwrap()
}

#[test]
fn fp_homomorphism_identity_on_all_catalog_rings() {
    let opts = FpOptions::default();
    for (name, ring) in all_rings() {
        let fp = fp_dimensions(&ring, &opts).unwrap();
        for i in 0..ring.rank() {
            for j in 0..ring.rank() {
                let lhs = fp.dims[i] * fp.dims[j];
                let rhs: f64 = (0..ring.rank())
                    .map(|k| ring.coeff(i, j, k) as f64 * fp.dims[k])
                    .sum();
                assert!(
                    (lhs - rhs).abs() < 10.0 * opts.tolerance,
                    "{name}: homomorphism residual at ({i},{j}) is {}",
                    (lhs - rhs).abs()
                );
            }
        }
    }
}

#[test]
fn fp_dimensions_are_at_least_one_and_one_exactly_on_invertibles() {
    let opts = FpOptions::default();
    for (name, ring) in all_rings() {
        let fp = fp_dimensions(&ring, &opts).unwrap();
        let invertibles = ring.invertible_basics();
        for i in 0..ring.rank() {
            assert!(fp.dims[i] >= 1.0 - opts.tolerance, "{name}: dim {i}");
            let near_one = (fp.dims[i] - 1.0).abs() < opts.tolerance;
            assert_eq!(
                near_one,
                invertibles.contains(&i),
                "{name}: dimension-one detection at {i}"
            );
        }
        assert!(fp.exactness_cross_check(), "{name}");
    }
}

#[test]
fn invertibles_form_a_group_with_single_support_products() {
    for (name, ring) in all_rings() {
        let invertibles = ring.invertible_basics();
        for &i in &invertibles {
            assert!(
                invertibles.contains(&ring.dual_index(i)),
                "{name}: dual of invertible"
            );
            for &j in &invertibles {
                let support = ring.product_support(i, j);
                assert_eq!(support.len(), 1, "{name}: support of {i}*{j}");
                assert!(invertibles.contains(&support[0]), "{name}");
                assert_eq!(ring.coeff(i, j, support[0]), 1, "{name}");
            }
        }
    }
}

#[test]
fn adjoint_element_is_central() {
    for (name, ring) in all_rings() {
        let adj = ring.adjoint_element();
        for i in 0..ring.rank() {
            let basis = ElementVec::basis(ring.rank(), i);
            let left = ring.multiply(&adj, &basis).unwrap();
            let right = ring.multiply(&basis, &adj).unwrap();
            assert_eq!(left, right, "{name}: centrality at basic {i}");
        }
    }
}

#[test]
fn within_block_self_pairings_land_in_the_adjoint() {
    for (name, ring) in all_rings() {
        let grading = universal_grading(&ring).unwrap();
        let adjoint = adjoint_subring(&ring);
        for block in &grading.components {
            for &i in block {
                for &j in block {
                    for k in ring.product_support(i, ring.dual_index(j)) {
                        assert!(
                            adjoint.contains(k),
                            "{name}: {i} * dual({j}) leaves the adjoint"
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn grading_blocks_carry_equal_mass() {
    let opts = FpOptions::default();
    for (name, ring) in all_rings() {
        let fp = fp_dimensions(&ring, &opts).unwrap();
        let grading = universal_grading(&ring).unwrap();
        let share = fp.ring_dim / grading.components.len() as f64;
        for (b, block) in grading.components.iter().enumerate() {
            let mass: f64 = block.iter().map(|&i| fp.dims[i] * fp.dims[i]).sum();
            assert!(
                (mass - share).abs() < 1e-8,
                "{name}: block {b} mass {mass} vs share {share}"
            );
        }
    }
}

#[test]
fn factor_through_the_universal_grading_is_the_identity_everywhere() {
    for (name, ring) in all_rings() {
        let universal = universal_grading(&ring).unwrap();
        let map = factor_grading(&ring, &universal).unwrap();
        let expected: Vec<usize> = (0..universal.components.len()).collect();
        assert_eq!(map, expected, "{name}");
    }
}

#[test]
fn series_chains_are_strictly_monotone_until_stabilization() {
    for (name, ring) in all_rings() {
        let upper = upper_central_series(&ring);
        for w in upper.chain.windows(2) {
            assert!(w[1].is_subset_of(&w[0]) && w[1] != w[0], "{name}: upper");
        }
        if ring.is_commutative() {
            let lower = lower_central_series(&ring).unwrap();
            for w in lower.chain.windows(2) {
                assert!(w[0].is_subset_of(&w[1]) && w[0] != w[1], "{name}: lower");
            }
        }
    }
}

#[test]
fn class_drops_by_one_on_the_adjoint() {
    for (name, ring) in all_rings() {
        let Some(class) = nilpotency_class(&ring) else {
            continue;
        };
        if class == 0 {
            continue;
        }
        let adjoint = adjoint_subring(&ring);
        let (induced, _) = ring.induced_subring(&adjoint);
        assert_eq!(
            nilpotency_class(&induced),
            Some(class - 1),
            "{name}: adjoint class"
        );
    }
}

#[test]
fn sandwich_identity_on_every_subring_of_every_commutative_ring() {
    for (name, ring) in commutative_rings() {
        for s in ring.enumerate_subrings() {
            // adjoint of the commutator sits inside s
            let sco = commutator_subring(&ring, &s).unwrap();
            let sco_ad = induced_adjoint(&ring, &sco);
            assert!(sco_ad.is_subset_of(&s), "{name}: left inclusion at {s:?}");
            // s sits inside the commutator of its adjoint
            let s_ad = induced_adjoint(&ring, &s);
            let s_ad_co = commutator_subring(&ring, &s_ad).unwrap();
            assert!(s.is_subset_of(&s_ad_co), "{name}: right inclusion at {s:?}");
        }
    }
}

#[test]
fn subrings_of_nilpotent_rings_are_nilpotent() {
    for (name, ring) in all_rings() {
        if nilpotency_class(&ring).is_none() {
            continue;
        }
        for s in ring.enumerate_subrings() {
            let (induced, _) = ring.induced_subring(&s);
            assert!(
                nilpotency_class(&induced).is_some(),
                "{name}: subring {s:?} is not nilpotent"
            );
        }
    }
}

#[test]
fn regular_module_components_realize_the_grading() {
    let opts = FpOptions::default();
    for (name, ring) in all_rings() {
        let fp = fp_dimensions(&ring, &opts).unwrap();
        let module = BasedModule::regular(&ring);
        let action = uset_action(&ring, &module, &fp, &opts).unwrap();
        let grading = universal_grading(&ring).unwrap();
        assert_eq!(action.components, grading.components, "{name}");
        // regular action: block a sends block x to block a*x
        for (a, row) in action.action.iter().enumerate() {
            for (x, &y) in row.iter().enumerate() {
                assert_eq!(y, grading.group.op(a, x), "{name}: action ({a},{x})");
            }
        }
    }
}

#[test]
fn component_partitions_refine_as_the_subring_shrinks() {
    for (name, ring) in all_rings() {
        let module = BasedModule::regular(&ring);
        let subrings = ring.enumerate_subrings();
        for s in &subrings {
            for t in &subrings {
                if !s.is_subset_of(t) {
                    continue;
                }
                let fine = module.decompose_over(&ring, s);
                let coarse = module.decompose_over(&ring, t);
                for block in &fine {
                    let holder = coarse
                        .iter()
                        .find(|c| c.binary_search(&block[0]).is_ok())
                        .unwrap();
                    for idx in block {
                        assert!(
                            holder.binary_search(idx).is_ok(),
                            "{name}: {s:?} does not refine {t:?}"
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn nilpotent_regular_modules_have_integral_ratios() {
    let opts = FpOptions::default();
    for (name, ring) in all_rings() {
        if nilpotency_class(&ring).is_none() {
            continue;
        }
        let fp = fp_dimensions(&ring, &opts).unwrap();
        let module = BasedModule::regular(&ring);
        let mfp = module_fp_data(&ring, &module, &fp, &opts).unwrap();
        let report =
            fusionkit_core::based_module::divisibility_report(&ring, &module, &fp, &mfp).unwrap();
        assert!(!report.advisory, "{name}");
        assert!(report.all_integer(), "{name}: {:?}", report.rows);
    }
}

fn modular_entries() -> Vec<(String, fusionkit_core::modular::ModularData, FusionRing)> {
    catalog::build_all()
        .unwrap()
        .into_iter()
        .filter_map(|e| {
            e.modular.map(|md| {
                let ring = md.verlinde_fusion().unwrap().ring;
                (e.name.to_string(), md, ring)
            })
        })
        .collect()
}

#[test]
fn s_entries_are_bounded_by_dimension_products() {
    for (name, md, _) in modular_entries() {
        let tol = md.cmp_tolerance();
        for i in 0..md.rank() {
            for j in 0..md.rank() {
                let bound = md.dim(i) * md.dim(j);
                assert!(
                    md.s(i, j).norm() <= bound + tol,
                    "{name}: |S[{i}][{j}]| exceeds {bound}"
                );
                let gap = bound - md.s(i, j).re;
                assert!(gap >= -tol, "{name}: real-part bound at ({i},{j})");
                // zero gap and full complex equality coincide
                let equal = (md.s(i, j) - num_complex::Complex64::new(bound, 0.0)).norm() <= tol;
                assert_eq!(gap.abs() <= tol && md.s(i, j).im.abs() <= tol, equal, "{name}");
            }
        }
    }
}

#[test]
fn maximal_column_modulus_matches_self_pairing_centralization() {
    for (name, md, ring) in modular_entries() {
        let tol = md.cmp_tolerance();
        for i in 0..md.rank() {
            for k in 0..md.rank() {
                let lhs = (md.s(i, k).norm() - md.dim(i) * md.dim(k)).abs() <= tol;
                let rhs = ring
                    .product_support(i, ring.dual_index(i))
                    .iter()
                    .all(|&j| md.centralizes(k, j));
                assert_eq!(lhs, rhs, "{name}: equivalence at ({i},{k})");
            }
        }
    }
}

#[test]
fn centralizer_is_antitone() {
    for (name, md, ring) in modular_entries() {
        let subcats = ring.enumerate_subrings();
        for a in &subcats {
            for b in &subcats {
                if a.is_subset_of(b) {
                    let ca = centralizer(&md, &ring, a).unwrap();
                    let cb = centralizer(&md, &ring, b).unwrap();
                    assert!(cb.is_subset_of(&ca), "{name}: antitone at {a:?} in {b:?}");
                }
            }
        }
    }
}

#[test]
fn double_centralizer_and_adjoint_commutator_identities_hold() {
    for (name, md, ring) in modular_entries() {
        for k in ring.enumerate_subrings() {
            let report = double_centralizer_check(&md, &ring, &k).unwrap();
            assert!(report.pass(), "{name}: double centralizer at {k:?}");
            assert!(
                adjoint_commutator_identity(&md, &ring, &k).unwrap(),
                "{name}: adjoint-commutator identity at {k:?}"
            );
        }
    }
}

#[test]
fn verlinde_rings_are_commutative_and_valid() {
    for (name, _, ring) in modular_entries() {
        assert!(ring.is_commutative(), "{name}");
        assert!(ring.validate().pass(), "{name}");
    }
}

proptest! {
    #[test]
    fn closure_is_idempotent_and_monotone(
        entry_index in 0usize..28,
        seed in proptest::collection::btree_set(0usize..9, 0..4),
        extra in proptest::collection::btree_set(0usize..9, 0..3),
    ) {
        let entries = catalog::build_all().unwrap();
        let ring = &entries[entry_index % entries.len()].ring;
        let clip = |s: &std::collections::BTreeSet<usize>| -> Vec<usize> {
            s.iter().map(|&i| i % ring.rank()).collect()
        };
        let small = clip(&seed);
        let closure = ring.subring_closure(small.clone()).unwrap();
        // idempotent
        let again = ring.subring_closure(closure.indices().iter().copied()).unwrap();
        prop_assert_eq!(&again, &closure);
        // monotone
        let mut bigger = small;
        bigger.extend(clip(&extra));
        let closure_bigger = ring.subring_closure(bigger).unwrap();
        prop_assert!(closure.is_subset_of(&closure_bigger));
    }

    #[test]
    fn dual_is_an_involution_and_antihomomorphism(
        entry_index in 0usize..28,
        raw_x in proptest::collection::vec(-3i64..4, 9),
        raw_y in proptest::collection::vec(-3i64..4, 9),
    ) {
        let entries = catalog::build_all().unwrap();
        let ring = &entries[entry_index % entries.len()].ring;
        let x = ElementVec::new(raw_x[..ring.rank()].to_vec());
        let y = ElementVec::new(raw_y[..ring.rank()].to_vec());
        let twice = ring.dual_element(&ring.dual_element(&x).unwrap()).unwrap();
        prop_assert_eq!(&twice, &x);
        // (xy)* = y* x*
        let lhs = ring.dual_element(&ring.multiply(&x, &y).unwrap()).unwrap();
        let rhs = ring
            .multiply(&ring.dual_element(&y).unwrap(), &ring.dual_element(&x).unwrap())
            .unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn multiplication_is_associative_on_random_elements(
        entry_index in 0usize..28,
        raw_x in proptest::collection::vec(-2i64..3, 9),
        raw_y in proptest::collection::vec(-2i64..3, 9),
        raw_z in proptest::collection::vec(-2i64..3, 9),
    ) {
        let entries = catalog::build_all().unwrap();
        let ring = &entries[entry_index % entries.len()].ring;
        let x = ElementVec::new(raw_x[..ring.rank()].to_vec());
        let y = ElementVec::new(raw_y[..ring.rank()].to_vec());
        let z = ElementVec::new(raw_z[..ring.rank()].to_vec());
        let lhs = ring.multiply(&ring.multiply(&x, &y).unwrap(), &z).unwrap();
        let rhs = ring.multiply(&x, &ring.multiply(&y, &z).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}
