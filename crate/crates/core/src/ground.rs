//! Ground monoids: cyclic groups, truncated naturals and Cayley tables.
//!
//! Elements are dense indices `0..size` and index `0` is always the identity.
//! For `Cyclic(n)` index `i` is the residue `i mod n`; for
//! `NaturalSegment(cap)` index `i` is the natural number `i`, and sums above
//! `cap` are undefined.

use alloc::vec::Vec;

use thiserror::Error;

use crate::subset::{Subset, MAX_ELEMENTS};

/// Element index into a ground monoid.
pub type Elem = usize;

/// Largest Cayley table accepted by [`GroundMonoid::from_table`].
pub const TABLE_LIMIT: usize = 24;

/// Largest truncation point for `NaturalSegment` (elements `0..=cap` must
/// fit in a [`Subset`]).
pub const NATURAL_CAP_LIMIT: usize = MAX_ELEMENTS - 1;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroundError {
    #[error("cyclic modulus must be positive")]
    ZeroModulus,
    #[error("cyclic modulus {0} exceeds the limit of {MAX_ELEMENTS}")]
    ModulusTooLarge(usize),
    #[error("natural segment cap must be positive")]
    ZeroCap,
    #[error("natural segment cap {0} exceeds the limit of {NATURAL_CAP_LIMIT}")]
    CapTooLarge(usize),
    #[error("table is empty")]
    EmptyTable,
    #[error("table of size {size} exceeds the limit of {limit}")]
    TableTooLarge { size: usize, limit: usize },
    #[error("table row {row} has {len} entries, expected {size}")]
    NotSquare { row: usize, len: usize, size: usize },
    #[error("table entry ({row},{col}) = {value} is out of range")]
    EntryOutOfRange { row: usize, col: usize, value: usize },
    #[error("index 0 is not a two-sided identity (fails at element {0})")]
    NoIdentity(Elem),
    #[error("table is not associative: ({0}*{1})*{2} != {0}*({1}*{2})")]
    NotAssociative(Elem, Elem, Elem),
    #[error("operation requires a finite ground (cyclic or table)")]
    InfiniteGround,
}

/// Description of a ground monoid prior to validation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroundSpec {
    Cyclic(usize),
    NaturalSegment(usize),
    /// Row `i`, column `j` holds the index of `i * j`.
    Table(Vec<Vec<usize>>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GroundKind {
    Cyclic(usize),
    NaturalSegment(usize),
    Table(usize),
}

/// A validated ground monoid. Immutable after construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroundMonoid {
    kind: GroundKind,
    size: usize,
    // row-major Cayley table; only populated for `Table`
    table: Vec<u8>,
    units: Subset,
    commutative: bool,
    group: bool,
}

/// Element-level data the atomicity and HmF results quantify over.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElementClassification {
    pub idempotents: Subset,
    /// Non-identity `x` with `x * x = 1`.
    pub square_roots_of_identity: Subset,
    /// `orders[x]` is the cardinality of `{x, x^2, x^3, ...}`.
    pub orders: Vec<usize>,
}

impl GroundMonoid {
    /// Validates a ground description.
    pub fn new(spec: GroundSpec) -> Result<Self, GroundError> {
        match spec {
            GroundSpec::Cyclic(n) => Self::cyclic(n),
            GroundSpec::NaturalSegment(cap) => Self::natural_segment(cap),
            GroundSpec::Table(rows) => Self::from_table(&rows),
        }
    }

    pub fn cyclic(n: usize) -> Result<Self, GroundError> {
        if n == 0 {
            return Err(GroundError::ZeroModulus);
        }
        if n > MAX_ELEMENTS {
            return Err(GroundError::ModulusTooLarge(n));
        }
        Ok(GroundMonoid {
            kind: GroundKind::Cyclic(n),
            size: n,
            table: Vec::new(),
            units: Subset::prefix(n),
            commutative: true,
            group: true,
        })
    }

    pub fn natural_segment(cap: usize) -> Result<Self, GroundError> {
        if cap == 0 {
            return Err(GroundError::ZeroCap);
        }
        if cap > NATURAL_CAP_LIMIT {
            return Err(GroundError::CapTooLarge(cap));
        }
        Ok(GroundMonoid {
            kind: GroundKind::NaturalSegment(cap),
            size: cap + 1,
            table: Vec::new(),
            units: Subset::singleton(0),
            commutative: true,
            group: false,
        })
    }

    /// Builds a ground from a Cayley table whose identity is index 0.
    ///
    /// Associativity and the identity laws are checked exhaustively.
    pub fn from_table<R: AsRef<[usize]>>(rows: &[R]) -> Result<Self, GroundError> {
        let n = rows.len();
        if n == 0 {
            return Err(GroundError::EmptyTable);
        }
        if n > TABLE_LIMIT {
            return Err(GroundError::TableTooLarge {
                size: n,
                limit: TABLE_LIMIT,
            });
        }
        let mut table = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != n {
                return Err(GroundError::NotSquare {
                    row: i,
                    len: row.len(),
                    size: n,
                });
            }
            for (j, &v) in row.iter().enumerate() {
                if v >= n {
                    return Err(GroundError::EntryOutOfRange {
                        row: i,
                        col: j,
                        value: v,
                    });
                }
                table.push(v as u8);
            }
        }
        let at = |a: usize, b: usize| table[a * n + b] as usize;
        for x in 0..n {
            if at(0, x) != x || at(x, 0) != x {
                return Err(GroundError::NoIdentity(x));
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = at(a, b);
                for c in 0..n {
                    if at(ab, c) != at(a, at(b, c)) {
                        return Err(GroundError::NotAssociative(a, b, c));
                    }
                }
            }
        }
        let mut units = Subset::EMPTY;
        for u in 0..n {
            if (0..n).any(|v| at(u, v) == 0 && at(v, u) == 0) {
                units.insert(u);
            }
        }
        let commutative = (0..n).all(|a| (0..n).all(|b| at(a, b) == at(b, a)));
        Ok(GroundMonoid {
            kind: GroundKind::Table(n),
            size: n,
            group: units.len() == n,
            table,
            units,
            commutative,
        })
    }

    #[inline]
    pub fn kind(&self) -> GroundKind {
        self.kind
    }

    /// Number of element indices (for `NaturalSegment(cap)` this is `cap + 1`).
    #[inline]
    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub const fn identity(&self) -> Elem {
        0
    }

    #[inline]
    pub fn units(&self) -> Subset {
        self.units
    }

    #[inline]
    pub fn is_unit(&self, x: Elem) -> bool {
        self.units.contains(x)
    }

    #[inline]
    pub fn is_group(&self) -> bool {
        self.group
    }

    #[inline]
    pub fn is_commutative(&self) -> bool {
        self.commutative
    }

    #[inline]
    pub fn is_finite(&self) -> bool {
        !matches!(self.kind, GroundKind::NaturalSegment(_))
    }

    /// Every element index as a subset.
    #[inline]
    pub fn elements(&self) -> Subset {
        Subset::prefix(self.size)
    }

    /// The cyclic modulus, if this is `Cyclic(n)`.
    #[inline]
    pub fn modulus(&self) -> Option<usize> {
        match self.kind {
            GroundKind::Cyclic(n) => Some(n),
            _ => None,
        }
    }

    /// `a * b`, or `None` when a `NaturalSegment` sum exceeds the cap.
    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Option<Elem> {
        match self.kind {
            GroundKind::Cyclic(n) => {
                let s = a + b;
                Some(if s >= n { s - n } else { s })
            }
            GroundKind::NaturalSegment(cap) => {
                let s = a + b;
                (s <= cap).then_some(s)
            }
            GroundKind::Table(n) => Some(self.table[a * n + b] as usize),
        }
    }

    /// Two-sided inverse of a unit.
    pub fn inverse(&self, u: Elem) -> Option<Elem> {
        if !self.is_unit(u) {
            return None;
        }
        (0..self.size).find(|&v| self.mul(u, v) == Some(0) && self.mul(v, u) == Some(0))
    }

    /// Idempotents, involutions and element orders of a finite ground.
    pub fn classify(&self) -> Result<ElementClassification, GroundError> {
        if !self.is_finite() {
            return Err(GroundError::InfiniteGround);
        }
        let mut idempotents = Subset::EMPTY;
        let mut roots = Subset::EMPTY;
        let mut orders = Vec::with_capacity(self.size);
        for x in 0..self.size {
            let sq = self.mul(x, x).expect("finite ground");
            if sq == x {
                idempotents.insert(x);
            }
            if x != 0 && sq == 0 {
                roots.insert(x);
            }
            orders.push(self.order(x));
        }
        Ok(ElementClassification {
            idempotents,
            square_roots_of_identity: roots,
            orders,
        })
    }

    // |{x, x^2, ...}|; the power sequence of a finite monoid is eventually
    // periodic, so stop at the first repeat.
    fn order(&self, x: Elem) -> usize {
        let mut seen = Subset::singleton(x);
        let mut p = x;
        loop {
            p = self.mul(p, x).expect("finite ground");
            if seen.contains(p) {
                return seen.len();
            }
            seen.insert(p);
        }
    }

    /// Whether `x * x` differs from both `1` and `x` for every non-identity
    /// `x`. Truncated naturals satisfy this by convention.
    pub fn atomicity_criterion(&self) -> bool {
        if !self.is_finite() {
            return true;
        }
        (1..self.size).all(|x| {
            let sq = self.mul(x, x).expect("finite ground");
            sq != 0 && sq != x
        })
    }

    /// Exhaustive check that `x * y = 1` forces `y * x = 1`.
    pub fn is_dedekind_finite(&self) -> bool {
        (0..self.size).all(|x| {
            (0..self.size).all(|y| self.mul(x, y) != Some(0) || self.mul(y, x) == Some(0))
        })
    }

    /// The Cayley table as rows, for export. Cyclic grounds are expanded.
    pub fn table_rows(&self) -> Option<Vec<Vec<usize>>> {
        if !self.is_finite() {
            return None;
        }
        Some(
            (0..self.size)
                .map(|a| (0..self.size).map(|b| self.mul(a, b).unwrap()).collect())
                .collect(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn klein() -> GroundMonoid {
        GroundMonoid::from_table(&[
            vec![0, 1, 2, 3],
            vec![1, 0, 3, 2],
            vec![2, 3, 0, 1],
            vec![3, 2, 1, 0],
        ])
        .unwrap()
    }

    #[test]
    fn make_ground_examples() {
        let c5 = GroundMonoid::new(GroundSpec::Cyclic(5)).unwrap();
        assert_eq!(c5.size(), 5);
        assert_eq!(c5.units().len(), 5);
        let k = klein();
        assert_eq!(k.units().len(), 4);
        assert!(k.is_group() && k.is_commutative());
        // every 2x2 table with identity 0 is associative
        let bad = GroundMonoid::from_table(&[vec![0, 1, 2], vec![1, 2, 0], vec![2, 1, 1]]);
        assert!(matches!(bad, Err(GroundError::NotAssociative(..))));
        assert_eq!(GroundMonoid::cyclic(0), Err(GroundError::ZeroModulus));
        assert_eq!(GroundMonoid::natural_segment(0), Err(GroundError::ZeroCap));
    }

    #[test]
    fn non_associative_two_by_two() {
        let t = GroundMonoid::from_table(&[vec![0, 0], vec![1, 1]]);
        assert!(matches!(t, Err(GroundError::NoIdentity(_))));
    }

    #[test]
    fn rejects_malformed_tables() {
        assert!(matches!(
            GroundMonoid::from_table(&[vec![0, 1], vec![1]]),
            Err(GroundError::NotSquare { .. })
        ));
        assert!(matches!(
            GroundMonoid::from_table(&[vec![0, 1], vec![1, 5]]),
            Err(GroundError::EntryOutOfRange { .. })
        ));
        let big: Vec<Vec<usize>> = (0..25).map(|i| (0..25).map(|j| (i + j) % 25).collect()).collect();
        assert!(matches!(
            GroundMonoid::from_table(&big),
            Err(GroundError::TableTooLarge { .. })
        ));
    }

    #[test]
    fn classify_cyclic() {
        let c3 = GroundMonoid::cyclic(3).unwrap().classify().unwrap();
        assert_eq!(c3.idempotents, Subset::from_elems([0]));
        assert!(c3.square_roots_of_identity.is_empty());
        assert_eq!(c3.orders, [1, 3, 3]);
        let c4 = GroundMonoid::cyclic(4).unwrap().classify().unwrap();
        assert_eq!(c4.square_roots_of_identity, Subset::from_elems([2]));
        let c6 = GroundMonoid::cyclic(6).unwrap().classify().unwrap();
        assert_eq!(c6.idempotents, Subset::from_elems([0]));
        assert_eq!(c6.square_roots_of_identity, Subset::from_elems([3]));
        assert_eq!(
            GroundMonoid::natural_segment(5).unwrap().classify(),
            Err(GroundError::InfiniteGround)
        );
    }

    fn gcd(a: usize, b: usize) -> usize {
        if b == 0 { a } else { gcd(b, a % b) }
    }

    #[test]
    fn cyclic_orders_match_gcd_formula() {
        for n in 1..=40 {
            let c = GroundMonoid::cyclic(n).unwrap().classify().unwrap();
            for x in 0..n {
                assert_eq!(c.orders[x], n / gcd(x, n), "n={n} x={x}");
            }
        }
    }

    #[test]
    fn atomicity_criterion_examples() {
        assert!(GroundMonoid::cyclic(5).unwrap().atomicity_criterion());
        assert!(!GroundMonoid::cyclic(4).unwrap().atomicity_criterion());
        assert!(!GroundMonoid::cyclic(2).unwrap().atomicity_criterion());
        assert!(GroundMonoid::natural_segment(9).unwrap().atomicity_criterion());
        for n in 1..=64 {
            let g = GroundMonoid::cyclic(n).unwrap();
            assert_eq!(g.atomicity_criterion(), n % 2 == 1, "n={n}");
            if g.atomicity_criterion() {
                let c = g.classify().unwrap();
                assert_eq!(c.idempotents, Subset::singleton(0));
                for x in 1..n {
                    assert!(c.orders[x] % 2 == 1 && c.orders[x] >= 3);
                }
            }
        }
    }

    #[test]
    fn dedekind_finite() {
        assert!(GroundMonoid::cyclic(7).unwrap().is_dedekind_finite());
        assert!(GroundMonoid::natural_segment(10).unwrap().is_dedekind_finite());
        assert!(klein().is_dedekind_finite());
        // {1, e} with e idempotent
        let t = GroundMonoid::from_table(&[vec![0, 1], vec![1, 1]]).unwrap();
        assert!(t.is_dedekind_finite());
        assert_eq!(t.units(), Subset::singleton(0));
        assert!(!t.is_group());
    }

    #[test]
    fn natural_segment_mul_is_partial() {
        let g = GroundMonoid::natural_segment(10).unwrap();
        assert_eq!(g.mul(4, 6), Some(10));
        assert_eq!(g.mul(5, 6), None);
        assert_eq!(g.size(), 11);
    }
}
