//! Finite groups as explicit multiplication tables, with the quotient
//! and duality constructions the grading machinery needs.

use std::collections::BTreeMap;

use crate::error::Error;

/// A finite group given by its full multiplication table.
/// `table[a][b]` is the product of elements `a` and `b`. Construction
/// checks every group axiom exhaustively.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupTable {
    order: usize,
    table: Vec<Vec<usize>>,
    identity: usize,
}

impl GroupTable {
    pub fn new(table: Vec<Vec<usize>>, identity: usize) -> Result<Self, Error> {
        let n = table.len();
        if n == 0 {
            return Err(Error::structural("group order must be positive"));
        }
        if identity >= n {
            return Err(Error::structural("identity index out of range"));
        }
        for (a, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::structural(format!("row {a} has length {}", row.len())));
            }
            if let Some(&x) = row.iter().find(|&&x| x >= n) {
                return Err(Error::structural(format!("table entry {x} out of range")));
            }
        }
        let g = GroupTable {
            order: n,
            table,
            identity,
        };
        for a in 0..n {
            if g.op(g.identity, a) != a || g.op(a, g.identity) != a {
                return Err(Error::invariant(format!("identity law fails at element {a}")));
            }
        }
        for a in 0..n {
            let mut inverses = (0..n).filter(|&b| g.op(a, b) == identity && g.op(b, a) == identity);
            let first = inverses.next();
            if first.is_none() || inverses.next().is_some() {
                return Err(Error::invariant(format!(
                    "element {a} lacks a unique two-sided inverse"
                )));
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if g.op(g.op(a, b), c) != g.op(a, g.op(b, c)) {
                        return Err(Error::invariant(format!(
                            "associativity fails at ({a},{b},{c})"
                        )));
                    }
                }
            }
        }
        Ok(g)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn op(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn inverse(&self, a: usize) -> usize {
        (0..self.order)
            .find(|&b| self.op(a, b) == self.identity)
            .expect("validated group has inverses")
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (a..self.order).all(|b| self.op(a, b) == self.op(b, a)))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut n = 1;
        while x != self.identity {
            x = self.op(x, a);
            n += 1;
        }
        n
    }

    /// Sorted multiset of element orders; a cheap isomorphism signature
    /// used by tests (distinguishes e.g. the two nonabelian groups of
    /// order 8).
    pub fn order_multiset(&self) -> Vec<usize> {
        let mut orders: Vec<usize> = (0..self.order).map(|a| self.element_order(a)).collect();
        orders.sort_unstable();
        orders
    }

    /// Invariant factors d1 | d2 | ... of an abelian group, ascending,
    /// with product equal to the order. Found by counting solutions of
    /// x^(p^j) = e for each prime p, which pins down the primary
    /// decomposition without any matrix normal forms.
    pub fn invariant_factors(&self) -> Result<Vec<u64>, Error> {
        if !self.is_abelian() {
            return Err(Error::precondition(
                "invariant factors require an abelian group",
            ));
        }
        let n = self.order as u64;
        if n == 1 {
            return Ok(vec![]);
        }
        let mut primary: BTreeMap<u64, Vec<u32>> = BTreeMap::new();
        let mut rest = n;
        let mut p = 2u64;
        while p * p <= rest {
            if rest % p == 0 {
                while rest % p == 0 {
                    rest /= p;
                }
                primary.insert(p, self.primary_partition(p));
            }
            p += 1;
        }
        if rest > 1 {
            primary.insert(rest, self.primary_partition(rest));
        }

        let columns = primary.values().map(|parts| parts.len()).max().unwrap_or(0);
        // Align largest prime powers together: column t of every prime
        // contributes to the t-th largest invariant factor.
        let mut factors = vec![1u64; columns];
        for (&q, parts) in &primary {
            for (t, &e) in parts.iter().enumerate() {
                factors[t] *= q.pow(e);
            }
        }
        factors.reverse();
        Ok(factors)
    }

    /// Exponent partition (descending) of the p-primary component.
    ///
    /// The count of solutions of x^(p^j) = e grows by p^(number of parts
    /// of size >= j) at each step, so the count ratios read off the
    /// conjugate partition.
    fn primary_partition(&self, p: u64) -> Vec<u32> {
        let mut parts: Vec<u32> = Vec::new();
        let mut prev = 1u64;
        let mut j = 1u32;
        loop {
            let pj = p.pow(j);
            let c = (0..self.order)
                .filter(|&a| pj % (self.element_order(a) as u64) == 0)
                .count() as u64;
            if c == prev {
                break;
            }
            let mut ratio = c / prev;
            let mut m = 0usize;
            while ratio > 1 {
                ratio /= p;
                m += 1;
            }
            for i in 0..m {
                if parts.len() <= i {
                    parts.push(j);
                } else {
                    parts[i] = j;
                }
            }
            prev = c;
            j += 1;
        }
        parts
    }

    /// Quotient by the commutator subgroup. Returns the abelian quotient
    /// and the element-to-coset map. Cosets are labeled by their minimal
    /// element, in ascending order.
    pub fn abelianization(&self) -> (GroupTable, Vec<usize>) {
        let mut gens = Vec::new();
        for a in 0..self.order {
            for b in 0..self.order {
                let c = self.op(
                    self.op(a, b),
                    self.op(self.inverse(a), self.inverse(b)),
                );
                gens.push(c);
            }
        }
        let commutator = self.subgroup_generated(&gens);
        self.quotient_by_normal(&commutator)
    }

    /// Subgroup generated by `gens`, as a sorted element list.
    pub fn subgroup_generated(&self, gens: &[usize]) -> Vec<usize> {
        let mut set = vec![false; self.order];
        set[self.identity] = true;
        let mut stack = vec![self.identity];
        for &g in gens {
            if !set[g] {
                set[g] = true;
                stack.push(g);
            }
        }
        while let Some(x) = stack.pop() {
            let members: Vec<usize> = (0..self.order).filter(|&y| set[y]).collect();
            for y in members {
                for z in [self.op(x, y), self.op(y, x)] {
                    if !set[z] {
                        set[z] = true;
                        stack.push(z);
                    }
                }
            }
        }
        (0..self.order).filter(|&x| set[x]).collect()
    }

    fn quotient_by_normal(&self, normal: &[usize]) -> (GroupTable, Vec<usize>) {
        debug_assert!(self.is_normal(normal));
        let mut coset_of = vec![usize::MAX; self.order];
        let mut reps = Vec::new();
        for x in 0..self.order {
            if coset_of[x] != usize::MAX {
                continue;
            }
            let id = reps.len();
            reps.push(x);
            for &n in normal {
                coset_of[self.op(x, n)] = id;
            }
        }
        let m = reps.len();
        let table: Vec<Vec<usize>> = (0..m)
            .map(|a| (0..m).map(|b| coset_of[self.op(reps[a], reps[b])]).collect())
            .collect();
        let identity = coset_of[self.identity];
        let quotient = GroupTable::new(table, identity)
            .expect("quotient by a normal subgroup is a group");
        (quotient, coset_of)
    }

    fn is_normal(&self, subgroup: &[usize]) -> bool {
        let contains = |x: usize| subgroup.binary_search(&x).is_ok();
        subgroup.iter().all(|&n| {
            (0..self.order).all(|g| contains(self.op(self.op(g, n), self.inverse(g))))
        })
    }

    /// A group isomorphic to the character group of an abelian group:
    /// the direct product of cyclic groups on the invariant factors.
    pub fn character_group(&self) -> Result<GroupTable, Error> {
        let factors = self.invariant_factors()?;
        let mut out = GroupTable::cyclic(1);
        for d in factors {
            out = GroupTable::direct_product(&out, &GroupTable::cyclic(d as usize));
        }
        Ok(out)
    }

    pub fn cyclic(n: usize) -> GroupTable {
        assert!(n > 0);
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        GroupTable::new(table, 0).expect("cyclic table is a group")
    }

    pub fn direct_product(a: &GroupTable, b: &GroupTable) -> GroupTable {
        let n = a.order * b.order;
        let idx = |x: usize, y: usize| x * b.order + y;
        let mut table = vec![vec![0usize; n]; n];
        for x1 in 0..a.order {
            for y1 in 0..b.order {
                for x2 in 0..a.order {
                    for y2 in 0..b.order {
                        table[idx(x1, y1)][idx(x2, y2)] = idx(a.op(x1, x2), b.op(y1, y2));
                    }
                }
            }
        }
        GroupTable::new(table, idx(a.identity, b.identity)).expect("product table is a group")
    }

    pub fn klein_four() -> GroupTable {
        GroupTable::direct_product(&GroupTable::cyclic(2), &GroupTable::cyclic(2))
    }

    /// Symmetric group on three points; elements are the six permutations
    /// in lexicographic one-line order, so the identity is element 0.
    pub fn symmetric_3() -> GroupTable {
        let perms: Vec<[usize; 3]> = vec![
            [0, 1, 2],
            [0, 2, 1],
            [1, 0, 2],
            [1, 2, 0],
            [2, 0, 1],
            [2, 1, 0],
        ];
        let index = |p: &[usize; 3]| perms.iter().position(|q| q == p).unwrap();
        let table = perms
            .iter()
            .map(|a| {
                perms
                    .iter()
                    .map(|b| {
                        // apply b first, then a
                        let composed = [a[b[0]], a[b[1]], a[b[2]]];
                        index(&composed)
                    })
                    .collect()
            })
            .collect();
        GroupTable::new(table, 0).expect("S3 table is a group")
    }

    /// Dihedral group of order 8: elements r^a s^b encoded as a + 4b.
    pub fn dihedral_8() -> GroupTable {
        let idx = |a: usize, b: usize| a + 4 * b;
        let mut table = vec![vec![0usize; 8]; 8];
        for a1 in 0..4 {
            for b1 in 0..2 {
                for a2 in 0..4 {
                    for b2 in 0..2 {
                        // s r = r^-1 s
                        let a = if b1 == 0 { (a1 + a2) % 4 } else { (a1 + 4 - a2 % 4) % 4 };
                        let b = (b1 + b2) % 2;
                        table[idx(a1, b1)][idx(a2, b2)] = idx(a, b);
                    }
                }
            }
        }
        GroupTable::new(table, 0).expect("D4 table is a group")
    }

    /// Quaternion group: elements 1,-1,i,-i,j,-j,k,-k in that order.
    pub fn quaternion_8() -> GroupTable {
        // (sign, axis) with axes 0=1, 1=i, 2=j, 3=k
        let mul = |s1: i32, a1: usize, s2: i32, a2: usize| -> (i32, usize) {
            match (a1, a2) {
                (0, a) => (s1 * s2, a),
                (a, 0) => (s1 * s2, a),
                (a, b) if a == b => (-s1 * s2, 0),
                (1, 2) => (s1 * s2, 3),
                (2, 3) => (s1 * s2, 1),
                (3, 1) => (s1 * s2, 2),
                (2, 1) => (-s1 * s2, 3),
                (3, 2) => (-s1 * s2, 1),
                (1, 3) => (-s1 * s2, 2),
                _ => unreachable!(),
            }
        };
        let encode = |s: i32, a: usize| 2 * a + usize::from(s < 0);
        let decode = |x: usize| (if x % 2 == 0 { 1 } else { -1 }, x / 2);
        let mut table = vec![vec![0usize; 8]; 8];
        for x in 0..8 {
            for y in 0..8 {
                let (s1, a1) = decode(x);
                let (s2, a2) = decode(y);
                let (s, a) = mul(s1, a1, s2, a2);
                table[x][y] = encode(s, a);
            }
        }
        GroupTable::new(table, 0).expect("Q8 table is a group")
    }
}
