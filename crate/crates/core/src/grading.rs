//! Adjoint subring, universal grading, and the square-free dimension
//! grading of rings with integer global dimension.

use std::collections::BTreeMap;

use crate::error::Error;
use crate::fp::FpData;
use crate::group::GroupTable;
use crate::ring::{FusionRing, SubringBasis};

/// A faithful grading: a partition of the basis into nonempty blocks
/// carrying a group structure compatible with the multiplication.
#[derive(Debug, Clone)]
pub struct Grading {
    /// Blocks of basis indices, each sorted, ordered by minimal element.
    pub components: Vec<Vec<usize>>,
    pub group: GroupTable,
    pub identity_block: usize,
}

impl Grading {
    pub fn block_of(&self, basis_index: usize) -> usize {
        self.components
            .iter()
            .position(|b| b.binary_search(&basis_index).is_ok())
            .expect("grading blocks partition the basis")
    }

    pub fn trivial(rank: usize) -> Grading {
        Grading {
            components: vec![(0..rank).collect()],
            group: GroupTable::cyclic(1),
            identity_block: 0,
        }
    }
}

/// The smallest based subring containing the product of every basic with
/// its dual; equivalently the support closure of the powers of the
/// central element returned by [`FusionRing::adjoint_element`].
pub fn adjoint_subring(ring: &FusionRing) -> SubringBasis {
    let seed = ring.adjoint_element().support();
    ring.subring_closure(seed)
        .expect("adjoint seed indices are in range")
}

/// The universal grading: blocks are the connected components of the
/// basis under multiplication by the adjoint element, and the group law
/// on blocks is read off from any product and then verified over every
/// pair. Verification failure means the input was not a fusion ring,
/// whatever the validator said.
pub fn universal_grading(ring: &FusionRing) -> Result<Grading, Error> {
    let r = ring.rank();
    let adj = ring.adjoint_element();

    // i ~ k when the product of the adjoint element with basic i
    // contains basic k; symmetric because the adjoint element is
    // self-dual.
    let mut block_of = vec![usize::MAX; r];
    let mut components: Vec<Vec<usize>> = Vec::new();
    for start in 0..r {
        if block_of[start] != usize::MAX {
            continue;
        }
        let id = components.len();
        let mut queue = vec![start];
        block_of[start] = id;
        let mut members = vec![start];
        while let Some(i) = queue.pop() {
            for (j, &c) in adj.coefficients.iter().enumerate() {
                if c == 0 {
                    continue;
                }
                for k in ring.product_support(j, i) {
                    if block_of[k] == usize::MAX {
                        block_of[k] = id;
                        members.push(k);
                        queue.push(k);
                    } else if block_of[k] != id {
                        return Err(Error::invariant(format!(
                            "adjoint multiplication connects basics {i} and {k} across distinct blocks"
                        )));
                    }
                }
            }
        }
        members.sort_unstable();
        components.push(members);
    }

    let blocks = components.len();
    let mut table = vec![vec![0usize; blocks]; blocks];
    for a in 0..blocks {
        for b in 0..blocks {
            let i = components[a][0];
            let j = components[b][0];
            let support = ring.product_support(i, j);
            let k = *support.first().ok_or_else(|| {
                Error::invariant(format!("product of basics {i} and {j} is zero"))
            })?;
            table[a][b] = block_of[k];
        }
    }
    // Exhaustive well-definedness check over every basic pair.
    for (a, block_a) in components.iter().enumerate() {
        for (b, block_b) in components.iter().enumerate() {
            let expected = table[a][b];
            for &i in block_a {
                for &j in block_b {
                    for k in ring.product_support(i, j) {
                        if block_of[k] != expected {
                            return Err(Error::invariant(format!(
                                "product of basics {i} and {j} straddles blocks {} and {expected}",
                                block_of[k]
                            )));
                        }
                    }
                }
            }
        }
    }

    let identity_block = block_of[0];
    let group = GroupTable::new(table, identity_block)
        .map_err(|e| Error::invariant(format!("block products do not form a group: {e}")))?;

    // Duality must send a block to the inverse block.
    for i in 0..r {
        if block_of[ring.dual_index(i)] != group.inverse(block_of[i]) {
            return Err(Error::invariant(format!(
                "dual of basic {i} lands outside the inverse block"
            )));
        }
    }
    // The identity block is the adjoint subring, computed independently
    // through the closure route.
    let adjoint = adjoint_subring(ring);
    if components[identity_block] != adjoint.indices() {
        return Err(Error::invariant(
            "identity block differs from the adjoint subring",
        ));
    }

    Ok(Grading {
        components,
        group,
        identity_block,
    })
}

/// Check that `given` is a grading of `ring` and return the factor map
/// from universal blocks onto its blocks, which is a surjective group
/// homomorphism.
pub fn factor_grading(ring: &FusionRing, given: &Grading) -> Result<Vec<usize>, Error> {
    validate_grading(ring, given)?;
    let universal = universal_grading(ring)?;
    let mut map = Vec::with_capacity(universal.components.len());
    for block in &universal.components {
        let target = given.block_of(block[0]);
        for &i in block {
            if given.block_of(i) != target {
                return Err(Error::Precondition(format!(
                    "universal block containing basic {} is split by the given grading",
                    block[0]
                )));
            }
        }
        map.push(target);
    }
    // Homomorphism and surjectivity checks.
    for a in 0..map.len() {
        for b in 0..map.len() {
            let lhs = map[universal.group.op(a, b)];
            let rhs = given.group.op(map[a], map[b]);
            if lhs != rhs {
                return Err(Error::invariant(
                    "factor map is not a group homomorphism",
                ));
            }
        }
    }
    let mut hit = vec![false; given.group.order()];
    for &t in &map {
        hit[t] = true;
    }
    if !hit.iter().all(|&h| h) {
        return Err(Error::Precondition(
            "given grading has a block unreachable from the universal grading".into(),
        ));
    }
    Ok(map)
}

/// Verify the grading axioms for an arbitrary candidate grading.
pub fn validate_grading(ring: &FusionRing, grading: &Grading) -> Result<(), Error> {
    let r = ring.rank();
    if grading.group.order() != grading.components.len() {
        return Err(Error::Precondition(
            "group order differs from the number of blocks".into(),
        ));
    }
    let mut seen = vec![false; r];
    for block in &grading.components {
        if block.is_empty() {
            return Err(Error::Precondition("grading has an empty block".into()));
        }
        for &i in block {
            if i >= r || seen[i] {
                return Err(Error::Precondition(format!(
                    "index {i} is out of range or repeated across blocks"
                )));
            }
            seen[i] = true;
        }
    }
    if !seen.iter().all(|&s| s) {
        return Err(Error::Precondition(
            "blocks do not cover the whole basis".into(),
        ));
    }
    let block_of = |i: usize| grading.block_of(i);
    if block_of(0) != grading.identity_block {
        return Err(Error::Precondition(
            "unit does not lie in the identity block".into(),
        ));
    }
    for a in 0..grading.components.len() {
        for b in 0..grading.components.len() {
            let target = grading.group.op(a, b);
            for &i in &grading.components[a] {
                for &j in &grading.components[b] {
                    for k in ring.product_support(i, j) {
                        if block_of(k) != target {
                            return Err(Error::Precondition(format!(
                                "product support of basics {i} and {j} escapes block {target}"
                            )));
                        }
                    }
                }
            }
        }
    }
    for i in 0..r {
        if block_of(ring.dual_index(i)) != grading.group.inverse(block_of(i)) {
            return Err(Error::Precondition(format!(
                "dual of basic {i} is not in the inverse block"
            )));
        }
    }
    // The identity block must be a based subring.
    SubringBasis::validated(ring, grading.components[grading.identity_block].iter().copied())
        .map_err(|e| Error::Precondition(format!("identity block is not a subring: {e}")))?;
    Ok(())
}

/// Grading of the basis by the square-free parts of the squared
/// dimensions, for rings whose global dimension is an integer. The keys
/// form an elementary abelian 2-group under square-free multiplication.
#[derive(Debug, Clone)]
pub struct SquareFreeGrading {
    /// Distinct square-free keys, ascending; key 1 comes first and is the
    /// identity component.
    pub keys: Vec<u64>,
    /// Block of basis indices for each key.
    pub components: Vec<Vec<usize>>,
    pub group: GroupTable,
}

pub fn dimension_parity_grading(
    ring: &FusionRing,
    fp: &FpData,
) -> Result<SquareFreeGrading, Error> {
    if !fp.ring_dim_is_integer() {
        return Err(Error::Precondition(format!(
            "global dimension {} is not within tolerance of an integer",
            fp.ring_dim
        )));
    }
    for (i, &flag) in fp.sq_integer_flags.iter().enumerate() {
        if !flag {
            return Err(Error::Precondition(format!(
                "squared dimension of basic {i} ({}) is not within tolerance of an integer",
                fp.dims[i] * fp.dims[i]
            )));
        }
    }

    let mut key_of = Vec::with_capacity(ring.rank());
    for i in 0..ring.rank() {
        let sq = (fp.dims[i] * fp.dims[i]).round() as u64;
        if sq == 0 || sq > 1_000_000 {
            return Err(Error::Precondition(format!(
                "squared dimension {sq} of basic {i} is out of the supported range"
            )));
        }
        key_of.push(square_free_part(sq));
    }
    let mut buckets: BTreeMap<u64, Vec<usize>> = BTreeMap::new();
    for (i, &k) in key_of.iter().enumerate() {
        buckets.entry(k).or_default().push(i);
    }
    let keys: Vec<u64> = buckets.keys().copied().collect();
    let components: Vec<Vec<usize>> = buckets.values().cloned().collect();
    debug_assert_eq!(keys[0], 1, "the unit has dimension 1");

    let position = |key: u64| -> Result<usize, Error> {
        keys.binary_search(&key)
            .map_err(|_| Error::invariant(format!("square-free key {key} escapes the key set")))
    };
    let m = keys.len();
    let mut table = vec![vec![0usize; m]; m];
    for x in 0..m {
        for y in 0..m {
            table[x][y] = position(square_free_part(keys[x] * keys[y]))?;
        }
    }
    let group = GroupTable::new(table, 0)
        .map_err(|e| Error::invariant(format!("square-free keys do not form a group: {e}")))?;
    for x in 0..m {
        if group.op(x, x) != 0 {
            return Err(Error::invariant(format!(
                "key {} does not square to the identity",
                keys[x]
            )));
        }
    }
    // Compatibility: products must land in the block of the key product.
    for ((i, j, _), _) in ring.entries() {
        let expected = square_free_part(key_of[i] * key_of[j]);
        for k in ring.product_support(i, j) {
            if key_of[k] != expected {
                return Err(Error::invariant(format!(
                    "product of basics {i} and {j} contains basic {k} outside the key-{expected} block"
                )));
            }
        }
    }

    Ok(SquareFreeGrading {
        keys,
        components,
        group,
    })
}

/// Largest square-free divisor carrying the parity of each prime
/// exponent; by trial division, adequate for desk-scale dimensions.
pub fn square_free_part(mut n: u64) -> u64 {
    let mut out = 1u64;
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            let mut e = 0u32;
            while n % d == 0 {
                n /= d;
                e += 1;
            }
            if e % 2 == 1 {
                out *= d;
            }
        }
        d += 1;
    }
    out * n
}
