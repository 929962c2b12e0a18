//! Built-in rings and modular data, registered by name. Every entry
//! carries the structural expectations the test suite asserts.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::Error;
use crate::group::GroupTable;
use crate::modular::{ModularData, DEFAULT_MODULAR_TOLERANCE};
use crate::ring::FusionRing;

/// A named ring, optionally with modular data, plus the values the test
/// suite pins down for it.
#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub ring: FusionRing,
    pub modular: Option<ModularData>,
    pub expected: Expected,
}

/// Structural expectations asserted by the test suite.
#[derive(Debug, Clone, PartialEq)]
pub struct Expected {
    /// First step at which the descending central series is trivial;
    /// `None` when the ring is not nilpotent.
    pub nilpotency_class: Option<usize>,
    pub universal_order: usize,
    /// Invariant factors when the grading group is abelian.
    pub universal_invariant_factors: Option<Vec<u64>>,
    pub pointed_size: usize,
    pub adjoint_size: usize,
}

type Builder = fn() -> Result<CatalogEntry, Error>;

/// Name-keyed registry; names are part of the command-line contract.
const REGISTRY: &[(&str, Builder)] = &[
    ("trivial", || group_ring_entry("trivial", GroupTable::cyclic(1), cyclic_labels(1))),
    ("z2", || group_ring_entry("z2", GroupTable::cyclic(2), cyclic_labels(2))),
    ("z3", || group_ring_entry("z3", GroupTable::cyclic(3), cyclic_labels(3))),
    ("z4", || group_ring_entry("z4", GroupTable::cyclic(4), cyclic_labels(4))),
    ("z2xz2", || {
        group_ring_entry(
            "z2xz2",
            GroupTable::klein_four(),
            vec!["1".into(), "a".into(), "b".into(), "ab".into()],
        )
    }),
    ("s3", || {
        group_ring_entry(
            "s3",
            GroupTable::symmetric_3(),
            vec![
                "e".into(),
                "(23)".into(),
                "(12)".into(),
                "(123)".into(),
                "(132)".into(),
                "(13)".into(),
            ],
        )
    }),
    ("d4", || {
        group_ring_entry(
            "d4",
            GroupTable::dihedral_8(),
            vec![
                "1".into(),
                "r".into(),
                "r2".into(),
                "r3".into(),
                "s".into(),
                "rs".into(),
                "r2s".into(),
                "r3s".into(),
            ],
        )
    }),
    ("q8", || {
        group_ring_entry(
            "q8",
            GroupTable::quaternion_8(),
            vec![
                "1".into(),
                "-1".into(),
                "i".into(),
                "-i".into(),
                "j".into(),
                "-j".into(),
                "k".into(),
                "-k".into(),
            ],
        )
    }),
    ("rep_s3", || character_ring_entry("rep_s3", "s3")),
    ("rep_d4", || character_ring_entry("rep_d4", "d4")),
    ("rep_q8", || character_ring_entry("rep_q8", "q8")),
    ("rep_a4", || character_ring_entry("rep_a4", "a4")),
    ("rep_s4", || character_ring_entry("rep_s4", "s4")),
    ("rep_z7:z3", || character_ring_entry("rep_z7:z3", "z7:z3")),
    ("ty_z2", || ty_entry("ty_z2", GroupTable::cyclic(2), cyclic_labels(2))),
    ("ty_z3", || ty_entry("ty_z3", GroupTable::cyclic(3), cyclic_labels(3))),
    ("ty_z2xz2", || {
        ty_entry(
            "ty_z2xz2",
            GroupTable::klein_four(),
            vec!["1".into(), "a".into(), "b".into(), "ab".into()],
        )
    }),
    ("ising", ising_entry),
    ("fibonacci", fibonacci_entry),
    ("toric_code", toric_code_entry),
    ("su2_1", || su2_level_k(1)),
    ("su2_2", || su2_level_k(2)),
    ("su2_3", || su2_level_k(3)),
    ("su2_4", || su2_level_k(4)),
    ("su2_5", || su2_level_k(5)),
    ("su2_6", || su2_level_k(6)),
    ("su2_7", || su2_level_k(7)),
    ("su2_8", || su2_level_k(8)),
];

pub fn names() -> Vec<&'static str> {
    REGISTRY.iter().map(|(name, _)| *name).collect()
}

pub fn build(name: &str) -> Result<CatalogEntry, Error> {
    REGISTRY
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, builder)| builder())
        .ok_or_else(|| Error::UnknownEntry(name.to_string()))?
}

pub fn build_all() -> Result<Vec<CatalogEntry>, Error> {
    REGISTRY.iter().map(|(_, builder)| builder()).collect()
}

fn cyclic_labels(n: usize) -> Vec<String> {
    (0..n)
        .map(|i| match i {
            0 => "1".to_string(),
            1 => "g".to_string(),
            _ => format!("g{i}"),
        })
        .collect()
}

/// The group ring of a finite group: each table cell contributes one
/// structure constant and duality is inversion.
pub fn group_ring(g: &GroupTable, labels: Vec<String>) -> Result<FusionRing, Error> {
    let n = g.order();
    if labels.len() != n {
        return Err(Error::structural("label count differs from the group order"));
    }
    // Reorder so the identity sits at index 0.
    let order: Vec<usize> = std::iter::once(g.identity())
        .chain((0..n).filter(|&x| x != g.identity()))
        .collect();
    let position = |x: usize| order.iter().position(|&y| y == x).unwrap();
    let relabeled: Vec<String> = order.iter().map(|&x| labels[x].clone()).collect();
    let dual = order.iter().map(|&x| position(g.inverse(x))).collect();
    let entries = order.iter().enumerate().flat_map(|(i, &x)| {
        order
            .iter()
            .enumerate()
            .map(move |(j, &y)| (i, j, position(g.op(x, y)), 1u64))
            .collect::<Vec<_>>()
    });
    FusionRing::new(relabeled, dual, entries)
}

fn group_ring_entry(
    name: &'static str,
    g: GroupTable,
    labels: Vec<String>,
) -> Result<CatalogEntry, Error> {
    let order = g.order();
    let factors = g.invariant_factors().ok();
    let ring = group_ring(&g, labels)?;
    Ok(CatalogEntry {
        name,
        ring,
        modular: None,
        expected: Expected {
            nilpotency_class: Some(usize::from(order > 1)),
            universal_order: order,
            universal_invariant_factors: factors,
            pointed_size: order,
            adjoint_size: 1,
        },
    })
}

/// Embedded character table: conjugacy class sizes and one row of complex
/// values per irreducible character, trivial character first.
struct CharacterTable {
    labels: Vec<String>,
    class_sizes: Vec<u64>,
    values: Vec<Vec<Complex64>>,
}

fn strings(items: &[&str]) -> Vec<String> {
    items.iter().map(|s| s.to_string()).collect()
}

fn omega3() -> Complex64 {
    Complex64::new(-0.5, 3f64.sqrt() / 2.0)
}

fn character_table(group_name: &str) -> Result<CharacterTable, Error> {
    let re = |x: f64| Complex64::new(x, 0.0);
    // cyclic groups z1..z12
    if let Some(n) = group_name
        .strip_prefix('z')
        .and_then(|s| s.parse::<usize>().ok())
    {
        if (1..=12).contains(&n) && group_name == format!("z{n}") {
            let root = |j: usize, k: usize| {
                let angle = 2.0 * PI * ((j * k) % n) as f64 / n as f64;
                Complex64::new(angle.cos(), angle.sin())
            };
            let labels = (0..n)
                .map(|j| match j {
                    0 => "1".to_string(),
                    1 => "w".to_string(),
                    _ => format!("w{j}"),
                })
                .collect();
            return Ok(CharacterTable {
                labels,
                class_sizes: vec![1; n],
                values: (0..n)
                    .map(|j| (0..n).map(|k| root(j, k)).collect())
                    .collect(),
            });
        }
    }
    match group_name {
        "z2xz2" => Ok(CharacterTable {
            labels: strings(&["1", "a", "b", "ab"]),
            class_sizes: vec![1, 1, 1, 1],
            values: vec![
                vec![re(1.0), re(1.0), re(1.0), re(1.0)],
                vec![re(1.0), re(1.0), re(-1.0), re(-1.0)],
                vec![re(1.0), re(-1.0), re(1.0), re(-1.0)],
                vec![re(1.0), re(-1.0), re(-1.0), re(1.0)],
            ],
        }),
        // classes: e, transpositions, 3-cycles
        "s3" => Ok(CharacterTable {
            labels: strings(&["1", "sgn", "std"]),
            class_sizes: vec![1, 3, 2],
            values: vec![
                vec![re(1.0), re(1.0), re(1.0)],
                vec![re(1.0), re(-1.0), re(1.0)],
                vec![re(2.0), re(0.0), re(-1.0)],
            ],
        }),
        // classes: e, r^2, {r, r^3}, {s, r^2 s}, {rs, r^3 s}
        "d4" => Ok(CharacterTable {
            labels: strings(&["1", "l1", "l2", "l3", "t"]),
            class_sizes: vec![1, 1, 2, 2, 2],
            values: vec![
                vec![re(1.0), re(1.0), re(1.0), re(1.0), re(1.0)],
                vec![re(1.0), re(1.0), re(1.0), re(-1.0), re(-1.0)],
                vec![re(1.0), re(1.0), re(-1.0), re(1.0), re(-1.0)],
                vec![re(1.0), re(1.0), re(-1.0), re(-1.0), re(1.0)],
                vec![re(2.0), re(-2.0), re(0.0), re(0.0), re(0.0)],
            ],
        }),
        // classes: 1, -1, {i}, {j}, {k}; same table as d4
        "q8" => {
            let mut table = character_table("d4")?;
            table.labels = strings(&["1", "l1", "l2", "l3", "t"]);
            Ok(table)
        }
        // classes: e, double transpositions, two classes of 3-cycles
        "a4" => {
            let w = omega3();
            Ok(CharacterTable {
                labels: strings(&["1", "w", "w2", "std"]),
                class_sizes: vec![1, 3, 4, 4],
                values: vec![
                    vec![re(1.0), re(1.0), re(1.0), re(1.0)],
                    vec![re(1.0), re(1.0), w, w * w],
                    vec![re(1.0), re(1.0), w * w, w],
                    vec![re(3.0), re(-1.0), re(0.0), re(0.0)],
                ],
            })
        }
        // classes: e, transpositions, double transpositions, 3-cycles, 4-cycles
        "s4" => Ok(CharacterTable {
            labels: strings(&["1", "sgn", "d", "std", "stds"]),
            class_sizes: vec![1, 6, 3, 8, 6],
            values: vec![
                vec![re(1.0), re(1.0), re(1.0), re(1.0), re(1.0)],
                vec![re(1.0), re(-1.0), re(1.0), re(1.0), re(-1.0)],
                vec![re(2.0), re(0.0), re(2.0), re(-1.0), re(0.0)],
                vec![re(3.0), re(1.0), re(-1.0), re(0.0), re(-1.0)],
                vec![re(3.0), re(-1.0), re(-1.0), re(0.0), re(1.0)],
            ],
        }),
        // Frobenius group of order 21; eta is a Gauss sum of 7th roots
        "z7:z3" => {
            let w = omega3();
            let eta = Complex64::new(-0.5, 7f64.sqrt() / 2.0);
            Ok(CharacterTable {
                labels: strings(&["1", "w", "w2", "t1", "t2"]),
                class_sizes: vec![1, 3, 3, 7, 7],
                values: vec![
                    vec![re(1.0), re(1.0), re(1.0), re(1.0), re(1.0)],
                    vec![re(1.0), re(1.0), re(1.0), w, w * w],
                    vec![re(1.0), re(1.0), re(1.0), w * w, w],
                    vec![re(3.0), eta, eta.conj(), re(0.0), re(0.0)],
                    vec![re(3.0), eta.conj(), eta, re(0.0), re(0.0)],
                ],
            })
        }
        other => Err(Error::UnknownEntry(format!("character table for {other}"))),
    }
}

/// Tensor-product multiplicities from an embedded character table, with
/// an exactness check on the rounded coefficients. Duality pairs each
/// character with its complex conjugate row.
pub fn character_ring(group_name: &str) -> Result<FusionRing, Error> {
    let table = character_table(group_name)?;
    let classes = table.class_sizes.len();
    let r = table.values.len();
    let order: u64 = table.class_sizes.iter().sum();

    let mut dual = Vec::with_capacity(r);
    for i in 0..r {
        let mut matches = (0..r).filter(|&i2| {
            (0..classes)
                .map(|c| (table.values[i2][c] - table.values[i][c].conj()).norm())
                .fold(0.0, f64::max)
                < 1e-9
        });
        let found = matches.next().ok_or_else(|| {
            Error::invariant(format!("character {i} has no conjugate row"))
        })?;
        if matches.next().is_some() {
            return Err(Error::invariant(format!(
                "character {i} has several conjugate rows"
            )));
        }
        dual.push(found);
    }

    let mut entries = Vec::new();
    for i in 0..r {
        for j in 0..r {
            for k in 0..r {
                let mut sum = Complex64::new(0.0, 0.0);
                for c in 0..classes {
                    sum += table.class_sizes[c] as f64
                        * table.values[i][c]
                        * table.values[j][c]
                        * table.values[k][c].conj();
                }
                sum /= order as f64;
                let rounded = sum.re.round();
                if (sum - Complex64::new(rounded, 0.0)).norm() > 1e-6 || rounded < 0.0 {
                    return Err(Error::invariant(format!(
                        "multiplicity ({i},{j},{k}) for {group_name} evaluates to {sum}"
                    )));
                }
                if rounded > 0.0 {
                    entries.push((i, j, k, rounded as u64));
                }
            }
        }
    }
    FusionRing::new(table.labels, dual, entries)
}

fn character_ring_entry(name: &'static str, group_name: &str) -> Result<CatalogEntry, Error> {
    let ring = character_ring(group_name)?;
    let expected = match group_name {
        "s3" => Expected {
            nilpotency_class: None,
            universal_order: 1,
            universal_invariant_factors: Some(vec![]),
            pointed_size: 2,
            adjoint_size: 3,
        },
        "d4" | "q8" => Expected {
            nilpotency_class: Some(2),
            universal_order: 2,
            universal_invariant_factors: Some(vec![2]),
            pointed_size: 4,
            adjoint_size: 4,
        },
        "a4" => Expected {
            nilpotency_class: None,
            universal_order: 1,
            universal_invariant_factors: Some(vec![]),
            pointed_size: 3,
            adjoint_size: 4,
        },
        "s4" => Expected {
            nilpotency_class: None,
            universal_order: 1,
            universal_invariant_factors: Some(vec![]),
            pointed_size: 2,
            adjoint_size: 5,
        },
        "z7:z3" => Expected {
            nilpotency_class: None,
            universal_order: 1,
            universal_invariant_factors: Some(vec![]),
            pointed_size: 3,
            adjoint_size: 5,
        },
        other => {
            return Err(Error::UnknownEntry(format!(
                "expectations for character ring {other}"
            )))
        }
    };
    Ok(CatalogEntry {
        name,
        ring,
        modular: None,
        expected,
    })
}

/// One extra self-dual basic on top of an abelian group: group elements
/// multiply through the table, each absorbs into the extra element, and
/// the extra element squares to the sum of the group.
pub fn tambara_yamagami(a: &GroupTable, labels: Vec<String>) -> Result<FusionRing, Error> {
    if !a.is_abelian() {
        return Err(Error::precondition(
            "the extension is defined for abelian groups only",
        ));
    }
    let n = a.order();
    if labels.len() != n {
        return Err(Error::structural("label count differs from the group order"));
    }
    if a.identity() != 0 {
        return Err(Error::structural("group identity must be element 0"));
    }
    let m = n;
    let mut full_labels = labels;
    full_labels.push("m".into());
    let mut dual: Vec<usize> = (0..n).map(|x| a.inverse(x)).collect();
    dual.push(m);
    let mut entries = Vec::new();
    for x in 0..n {
        for y in 0..n {
            entries.push((x, y, a.op(x, y), 1));
        }
        entries.push((x, m, m, 1));
        entries.push((m, x, m, 1));
        entries.push((m, m, x, 1));
    }
    FusionRing::new(full_labels, dual, entries)
}

fn ty_entry(
    name: &'static str,
    a: GroupTable,
    labels: Vec<String>,
) -> Result<CatalogEntry, Error> {
    let order = a.order();
    let ring = tambara_yamagami(&a, labels)?;
    Ok(CatalogEntry {
        name,
        ring,
        modular: None,
        expected: Expected {
            nilpotency_class: Some(2),
            universal_order: 2,
            universal_invariant_factors: Some(vec![2]),
            pointed_size: order,
            adjoint_size: order,
        },
    })
}

fn ising_ring() -> Result<FusionRing, Error> {
    FusionRing::new(
        vec!["1".into(), "eps".into(), "sigma".into()],
        vec![0, 1, 2],
        [
            (0, 0, 0, 1),
            (0, 1, 1, 1),
            (0, 2, 2, 1),
            (1, 0, 1, 1),
            (1, 1, 0, 1),
            (1, 2, 2, 1),
            (2, 0, 2, 1),
            (2, 1, 2, 1),
            (2, 2, 0, 1),
            (2, 2, 1, 1),
        ],
    )
}

fn ising_entry() -> Result<CatalogEntry, Error> {
    let ring = ising_ring()?;
    let rt2 = 2f64.sqrt();
    let s = vec![
        vec![
            Complex64::new(1.0, 0.0),
            Complex64::new(1.0, 0.0),
            Complex64::new(rt2, 0.0),
        ],
        vec![
            Complex64::new(1.0, 0.0),
            Complex64::new(1.0, 0.0),
            Complex64::new(-rt2, 0.0),
        ],
        vec![
            Complex64::new(rt2, 0.0),
            Complex64::new(-rt2, 0.0),
            Complex64::new(0.0, 0.0),
        ],
    ];
    let t = vec![
        Complex64::new(1.0, 0.0),
        Complex64::new(-1.0, 0.0),
        Complex64::from_polar(1.0, PI / 8.0),
    ];
    let modular = ModularData::new(s, t, vec![0, 1, 2], DEFAULT_MODULAR_TOLERANCE)?;
    Ok(CatalogEntry {
        name: "ising",
        ring,
        modular: Some(modular),
        expected: Expected {
            nilpotency_class: Some(2),
            universal_order: 2,
            universal_invariant_factors: Some(vec![2]),
            pointed_size: 2,
            adjoint_size: 2,
        },
    })
}

fn fibonacci_entry() -> Result<CatalogEntry, Error> {
    let ring = FusionRing::new(
        vec!["1".into(), "tau".into()],
        vec![0, 1],
        [
            (0, 0, 0, 1),
            (0, 1, 1, 1),
            (1, 0, 1, 1),
            (1, 1, 0, 1),
            (1, 1, 1, 1),
        ],
    )?;
    let phi = (1.0 + 5f64.sqrt()) / 2.0;
    let s = vec![
        vec![Complex64::new(1.0, 0.0), Complex64::new(phi, 0.0)],
        vec![Complex64::new(phi, 0.0), Complex64::new(-1.0, 0.0)],
    ];
    let t = vec![
        Complex64::new(1.0, 0.0),
        Complex64::from_polar(1.0, 4.0 * PI / 5.0),
    ];
    let modular = ModularData::new(s, t, vec![0, 1], DEFAULT_MODULAR_TOLERANCE)?;
    Ok(CatalogEntry {
        name: "fibonacci",
        ring,
        modular: Some(modular),
        expected: Expected {
            nilpotency_class: None,
            universal_order: 1,
            universal_invariant_factors: Some(vec![]),
            pointed_size: 1,
            adjoint_size: 2,
        },
    })
}

fn toric_code_entry() -> Result<CatalogEntry, Error> {
    let ring = group_ring(
        &GroupTable::klein_four(),
        vec!["1".into(), "e".into(), "m".into(), "em".into()],
    )?;
    let rows = [
        [1.0, 1.0, 1.0, 1.0],
        [1.0, 1.0, -1.0, -1.0],
        [1.0, -1.0, 1.0, -1.0],
        [1.0, -1.0, -1.0, 1.0],
    ];
    let s = rows
        .iter()
        .map(|row| row.iter().map(|&x| Complex64::new(x, 0.0)).collect())
        .collect();
    let t = vec![
        Complex64::new(1.0, 0.0),
        Complex64::new(1.0, 0.0),
        Complex64::new(1.0, 0.0),
        Complex64::new(-1.0, 0.0),
    ];
    let modular = ModularData::new(s, t, vec![0, 1, 2, 3], DEFAULT_MODULAR_TOLERANCE)?;
    Ok(CatalogEntry {
        name: "toric_code",
        ring,
        modular: Some(modular),
        expected: Expected {
            nilpotency_class: Some(1),
            universal_order: 4,
            universal_invariant_factors: Some(vec![2, 2]),
            pointed_size: 4,
            adjoint_size: 1,
        },
    })
}

/// Level-k data built from the closed-form fusion rule and sine-ratio
/// S-matrix; rank k+1, every object self-dual.
pub fn su2_level_k(k: usize) -> Result<CatalogEntry, Error> {
    if !(1..=8).contains(&k) {
        return Err(Error::precondition("level must lie between 1 and 8"));
    }
    let r = k + 1;
    let labels = (0..r).map(|i| i.to_string()).collect();
    let dual: Vec<usize> = (0..r).collect();
    let mut entries = Vec::new();
    for i in 0..r {
        for l in 0..r {
            for j in 0..r {
                let admissible = (i + l + j) % 2 == 0
                    && j >= i.abs_diff(l)
                    && j <= (i + l).min(2 * k - i - l);
                if admissible {
                    entries.push((i, l, j, 1));
                }
            }
        }
    }
    let ring = FusionRing::new(labels, dual.clone(), entries)?;

    let denom = (k + 2) as f64;
    let base = (PI / denom).sin();
    let s = (0..r)
        .map(|a| {
            (0..r)
                .map(|b| {
                    let num = (PI * ((a + 1) * (b + 1)) as f64 / denom).sin();
                    Complex64::new(num / base, 0.0)
                })
                .collect()
        })
        .collect();
    let t = (0..r)
        .map(|a| Complex64::from_polar(1.0, PI * (a * (a + 2)) as f64 / (2.0 * denom)))
        .collect();
    let modular = ModularData::new(s, t, dual, DEFAULT_MODULAR_TOLERANCE)?;

    let name: &'static str = match k {
        1 => "su2_1",
        2 => "su2_2",
        3 => "su2_3",
        4 => "su2_4",
        5 => "su2_5",
        6 => "su2_6",
        7 => "su2_7",
        _ => "su2_8",
    };
    let nilpotency_class = match k {
        1 => Some(1),
        2 => Some(2),
        _ => None,
    };
    Ok(CatalogEntry {
        name,
        ring,
        modular: Some(modular),
        expected: Expected {
            nilpotency_class,
            universal_order: 2,
            universal_invariant_factors: Some(vec![2]),
            pointed_size: 2,
            adjoint_size: k / 2 + 1,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_names_are_unique_and_buildable() {
        let names = names();
        let mut sorted = names.clone();
        sorted.sort_unstable();
        sorted.dedup();
        assert_eq!(sorted.len(), names.len());
        for name in names {
            let entry = build(name).unwrap();
            assert_eq!(entry.name, name);
        }
    }

    #[test]
    fn unknown_names_are_rejected() {
        assert!(matches!(build("nope"), Err(Error::UnknownEntry(_))));
        assert!(character_ring("z13").is_err());
        assert!(character_ring("e8").is_err());
    }

    #[test]
    fn every_catalog_ring_is_valid() {
        for entry in build_all().unwrap() {
            let report = entry.ring.validate();
            assert!(report.pass(), "{}: {:?}", entry.name, report.violations);
        }
    }

    #[test]
    fn character_tables_satisfy_the_orthogonality_relations() {
        for name in [
            "z2", "z3", "z5", "z12", "z2xz2", "s3", "d4", "q8", "a4", "s4", "z7:z3",
        ] {
            let table = character_table(name).unwrap();
            let order: u64 = table.class_sizes.iter().sum();
            let r = table.values.len();
            let classes = table.class_sizes.len();
            assert_eq!(r, classes, "{name}: table must be square");
            // row orthogonality
            for i in 0..r {
                for j in 0..r {
                    let sum: Complex64 = (0..classes)
                        .map(|c| {
                            table.class_sizes[c] as f64
                                * table.values[i][c]
                                * table.values[j][c].conj()
                        })
                        .sum();
                    let expected = if i == j { order as f64 } else { 0.0 };
                    assert!(
                        (sum - Complex64::new(expected, 0.0)).norm() < 1e-9,
                        "{name}: rows {i},{j}"
                    );
                }
            }
            // column orthogonality
            for c1 in 0..classes {
                for c2 in 0..classes {
                    let sum: Complex64 = (0..r)
                        .map(|i| table.values[i][c1] * table.values[i][c2].conj())
                        .sum();
                    let expected = if c1 == c2 {
                        order as f64 / table.class_sizes[c1] as f64
                    } else {
                        0.0
                    };
                    assert!(
                        (sum - Complex64::new(expected, 0.0)).norm() < 1e-9,
                        "{name}: columns {c1},{c2}"
                    );
                }
            }
        }
    }

    #[test]
    fn cyclic_character_rings_match_group_rings() {
        for n in [2usize, 3, 4, 7, 12] {
            let from_chars = character_ring(&format!("z{n}")).unwrap();
            let from_table = group_ring(&GroupTable::cyclic(n), cyclic_labels(n)).unwrap();
            assert_eq!(from_chars.rank(), n);
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        assert_eq!(from_chars.coeff(i, j, k), from_table.coeff(i, j, k));
                    }
                }
                assert_eq!(from_chars.dual_index(i), from_table.dual_index(i));
            }
        }
    }

    #[test]
    fn character_rings_are_commutative() {
        for name in ["rep_s3", "rep_d4", "rep_q8", "rep_a4", "rep_s4", "rep_z7:z3"] {
            assert!(build(name).unwrap().ring.is_commutative(), "{name}");
        }
    }

    #[test]
    fn group_ring_commutativity_matches_the_group() {
        assert!(build("z4").unwrap().ring.is_commutative());
        assert!(build("z2xz2").unwrap().ring.is_commutative());
        assert!(!build("s3").unwrap().ring.is_commutative());
        assert!(!build("q8").unwrap().ring.is_commutative());
    }

    #[test]
    fn ty_z2_is_the_ising_ring() {
        let ty = build("ty_z2").unwrap().ring;
        let ising = build("ising").unwrap().ring;
        for i in 0..3 {
            for j in 0..3 {
                for k in 0..3 {
                    assert_eq!(ty.coeff(i, j, k), ising.coeff(i, j, k));
                }
            }
        }
    }

    #[test]
    fn ty_requires_an_abelian_group() {
        let labels = (0..6).map(|i| i.to_string()).collect();
        assert!(tambara_yamagami(&GroupTable::symmetric_3(), labels).is_err());
    }

    #[test]
    fn s3_character_ring_dimensions() {
        let ring = build("rep_s3").unwrap().ring;
        let fp = crate::fp::fp_dimensions(&ring, &crate::fp::FpOptions::default()).unwrap();
        assert!((fp.dims[0] - 1.0).abs() < 1e-9);
        assert!((fp.dims[1] - 1.0).abs() < 1e-9);
        assert!((fp.dims[2] - 2.0).abs() < 1e-9);
    }

    #[test]
    fn z7_z3_character_ring_has_odd_integer_dimension() {
        let ring = build("rep_z7:z3").unwrap().ring;
        let fp = crate::fp::fp_dimensions(&ring, &crate::fp::FpOptions::default()).unwrap();
        let dims: Vec<f64> = fp.dims.iter().map(|d| d.round()).collect();
        assert_eq!(dims, vec![1.0, 1.0, 1.0, 3.0, 3.0]);
        assert!((fp.ring_dim - 21.0).abs() < 1e-8);
    }

    #[test]
    fn su2_level_bounds() {
        assert!(su2_level_k(0).is_err());
        assert!(su2_level_k(9).is_err());
    }

    #[test]
    fn su2_level_1_is_a_z2_ring() {
        let entry = build("su2_1").unwrap();
        assert_eq!(entry.ring.rank(), 2);
        assert_eq!(entry.ring.product_support(1, 1), vec![0]);
    }

    #[test]
    fn su2_level_3_contains_a_fibonacci_subring() {
        let entry = build("su2_3").unwrap();
        let even = entry.ring.subring_closure([2]).unwrap();
        assert_eq!(even.indices(), &[0, 2]);
        let (sub, _) = entry.ring.induced_subring(&even);
        assert_eq!(sub.coeff(1, 1, 1), 1);
        assert_eq!(sub.coeff(1, 1, 0), 1);
    }
}
