//! Setwise arithmetic on finite subsets of a ground monoid.
//!
//! The same [`Subset`] value can be read as an element of the reduced power
//! monoid (subsets containing the identity) or of the restricted power monoid
//! (subsets meeting the unit group); consumers pick the view.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write;

use thiserror::Error;

use crate::ground::{Elem, GroundKind, GroundMonoid};
use crate::subset::Subset;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PowsetError {
    #[error("setwise product exceeds the natural segment cap {cap} (needs {needed})")]
    CapExceeded { cap: usize, needed: usize },
    #[error("element {0} is not a unit of the ground")]
    NotUnit(Elem),
    #[error("operation requires a cyclic ground")]
    NotCyclic,
    #[error("modulus {0} is not prime")]
    NotPrime(usize),
    #[error("subset is empty")]
    Empty,
    #[error("element {0} is outside the ground")]
    OutOfRange(usize),
    #[error("malformed set literal: {0}")]
    Parse(String),
}

/// Minimal non-negative representatives of the residues of a cyclic subset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HatLift {
    pub values: Vec<usize>,
}

impl HatLift {
    pub fn max(&self) -> Option<usize> {
        self.values.last().copied()
    }
}

/// A parsed set literal; `reduced` records that some residue was taken mod n.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParsedSubset {
    pub set: Subset,
    pub reduced: bool,
}

#[inline]
fn rotate(bits: u64, by: usize, n: usize) -> u64 {
    if by == 0 {
        return bits;
    }
    let full = Subset::prefix(n).bits();
    ((bits << by) | (bits >> (n - by))) & full
}

impl GroundMonoid {
    /// Setwise product, or `None` if a `NaturalSegment` product would leave
    /// the segment.
    #[inline]
    pub fn try_product(&self, x: Subset, y: Subset) -> Option<Subset> {
        match self.kind() {
            GroundKind::Cyclic(n) => {
                let mut acc = 0u64;
                for a in x.iter() {
                    acc |= rotate(y.bits(), a, n);
                }
                Some(Subset::from_bits(acc))
            }
            GroundKind::NaturalSegment(cap) => {
                let (Some(mx), Some(my)) = (x.max(), y.max()) else {
                    return Some(Subset::EMPTY);
                };
                if mx + my > cap {
                    return None;
                }
                let mut acc = 0u64;
                for a in x.iter() {
                    acc |= y.bits() << a;
                }
                Some(Subset::from_bits(acc))
            }
            GroundKind::Table(_) => {
                let mut acc = Subset::EMPTY;
                for a in x.iter() {
                    for b in y.iter() {
                        acc.insert(self.mul(a, b).unwrap());
                    }
                }
                Some(acc)
            }
        }
    }

    /// `XY = {xy : x in X, y in Y}`.
    pub fn product(&self, x: Subset, y: Subset) -> Result<Subset, PowsetError> {
        self.try_product(x, y).ok_or_else(|| self.cap_error(x, y))
    }

    fn cap_error(&self, x: Subset, y: Subset) -> PowsetError {
        let cap = match self.kind() {
            GroundKind::NaturalSegment(cap) => cap,
            _ => unreachable!("only natural segments overflow"),
        };
        PowsetError::CapExceeded {
            cap,
            needed: x.max().unwrap_or(0) + y.max().unwrap_or(0),
        }
    }

    /// `k`-fold setwise product; `power(X, 0) = {1}`.
    pub fn power(&self, x: Subset, k: usize) -> Result<Subset, PowsetError> {
        let mut acc = Subset::singleton(self.identity());
        for _ in 0..k {
            let next = self.product(acc, x)?;
            if next == acc {
                // acc * X = acc, so every further power is acc too
                return Ok(acc);
            }
            acc = next;
        }
        Ok(acc)
    }

    /// `{u x v : x in X}` for units `u`, `v`.
    pub fn translate(&self, u: Elem, x: Subset, v: Elem) -> Result<Subset, PowsetError> {
        for w in [u, v] {
            if w >= self.size() || !self.is_unit(w) {
                return Err(PowsetError::NotUnit(w));
            }
        }
        Ok(self.translate_unchecked(u, x, v))
    }

    #[inline]
    pub(crate) fn translate_unchecked(&self, u: Elem, x: Subset, v: Elem) -> Subset {
        match self.kind() {
            GroundKind::Cyclic(n) => Subset::from_bits(rotate(x.bits(), (u + v) % n, n)),
            _ => x
                .iter()
                .map(|e| self.mul(self.mul(u, e).unwrap(), v).unwrap())
                .collect(),
        }
    }

    /// Left translate `{u x : x in X}` (no unit check).
    #[inline]
    pub(crate) fn left_translate(&self, u: Elem, x: Subset) -> Subset {
        self.translate_unchecked(u, x, 0)
    }

    /// Minimal non-negative representatives of a cyclic subset.
    pub fn hat_lift(&self, x: Subset) -> Result<HatLift, PowsetError> {
        if self.modulus().is_none() {
            return Err(PowsetError::NotCyclic);
        }
        Ok(HatLift {
            values: x.iter().collect(),
        })
    }

    /// `max Â` for a non-empty cyclic subset.
    pub fn hat_max(&self, x: Subset) -> Result<usize, PowsetError> {
        if self.modulus().is_none() {
            return Err(PowsetError::NotCyclic);
        }
        x.max().ok_or(PowsetError::Empty)
    }

    /// `|A B| >= min(p, |A| + |B| - 1)` over `Z/pZ`.
    pub fn cauchy_davenport_holds(&self, a: Subset, b: Subset) -> Result<bool, PowsetError> {
        let p = self.modulus().ok_or(PowsetError::NotCyclic)?;
        if !is_prime(p) {
            return Err(PowsetError::NotPrime(p));
        }
        if a.is_empty() || b.is_empty() {
            return Err(PowsetError::Empty);
        }
        let sum = self.try_product(a, b).unwrap();
        Ok(sum.len() >= p.min(a.len() + b.len() - 1))
    }

    #[inline]
    pub fn contains_identity(&self, x: Subset) -> bool {
        x.contains(self.identity())
    }

    #[inline]
    pub fn meets_units(&self, x: Subset) -> bool {
        x.meets(self.units())
    }

    /// Non-empty and inside the ground's index range.
    pub fn check_subset(&self, x: Subset) -> Result<(), PowsetError> {
        if x.is_empty() {
            return Err(PowsetError::Empty);
        }
        if let Some(m) = x.max() {
            if m >= self.size() {
                return Err(PowsetError::OutOfRange(m));
            }
        }
        Ok(())
    }

    /// Canonical text form, e.g. `{0,1,3}`.
    pub fn format_subset(&self, x: Subset) -> String {
        let mut s = String::from("{");
        for (i, e) in x.iter().enumerate() {
            if i > 0 {
                s.push(',');
            }
            let _ = write!(s, "{e}");
        }
        s.push('}');
        s
    }

    /// Parses `{r1,r2,...}`. Whitespace is ignored; over a cyclic ground
    /// residues are reduced mod n and `reduced` is set.
    pub fn parse_subset(&self, text: &str) -> Result<ParsedSubset, PowsetError> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let inner = compact
            .strip_prefix('{')
            .and_then(|t| t.strip_suffix('}'))
            .ok_or_else(|| PowsetError::Parse(String::from(text)))?;
        if inner.is_empty() {
            return Err(PowsetError::Empty);
        }
        let mut set = Subset::EMPTY;
        let mut reduced = false;
        for tok in inner.split(',') {
            let v: usize = tok
                .parse()
                .map_err(|_| PowsetError::Parse(String::from(text)))?;
            let e = match self.modulus() {
                Some(n) if v >= n => {
                    reduced = true;
                    v % n
                }
                _ => v,
            };
            if e >= self.size() {
                return Err(PowsetError::OutOfRange(e));
            }
            set.insert(e);
        }
        Ok(ParsedSubset { set, reduced })
    }
}

pub fn is_prime(p: usize) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(e: &[usize]) -> Subset {
        Subset::from_elems(e.iter().copied())
    }

    #[test]
    fn product_examples() {
        let c5 = GroundMonoid::cyclic(5).unwrap();
        assert_eq!(c5.product(s(&[0, 1]), s(&[0, 1])).unwrap(), s(&[0, 1, 2]));
        let c9 = GroundMonoid::cyclic(9).unwrap();
        assert_eq!(
            c9.product(s(&[0, 1, 3]), s(&[0, 2, 3, 4])).unwrap(),
            s(&[0, 1, 2, 3, 4, 5, 6, 7])
        );
        let c7 = GroundMonoid::cyclic(7).unwrap();
        assert_eq!(c7.product(s(&[0, 1, 3]), s(&[0, 2])).unwrap(), s(&[0, 1, 2, 3, 5]));
    }

    #[test]
    fn natural_overflow_is_an_error() {
        let g = GroundMonoid::natural_segment(5).unwrap();
        assert_eq!(g.product(s(&[0, 2]), s(&[0, 3])).unwrap(), s(&[0, 2, 3, 5]));
        assert_eq!(
            g.product(s(&[0, 3]), s(&[0, 3])),
            Err(PowsetError::CapExceeded { cap: 5, needed: 6 })
        );
    }

    #[test]
    fn power_examples() {
        let c5 = GroundMonoid::cyclic(5).unwrap();
        let full = c5.elements();
        assert_eq!(c5.power(s(&[0, 1]), 4).unwrap(), full);
        assert_eq!(c5.power(s(&[0, 1]), 7).unwrap(), full);
        assert_eq!(c5.power(s(&[1, 3]), 0).unwrap(), s(&[0]));
        // no identity: powers keep moving
        assert_eq!(c5.power(s(&[1]), 3).unwrap(), s(&[3]));
    }

    #[test]
    fn translate_examples() {
        let c5 = GroundMonoid::cyclic(5).unwrap();
        assert_eq!(c5.translate(2, s(&[0, 1]), 0).unwrap(), s(&[2, 3]));
        assert_eq!(c5.translate(0, s(&[1, 4]), 0).unwrap(), s(&[1, 4]));
        let n = GroundMonoid::natural_segment(6).unwrap();
        assert_eq!(n.translate(1, s(&[0]), 0), Err(PowsetError::NotUnit(1)));
    }

    #[test]
    fn hat_lift_examples() {
        let c5 = GroundMonoid::cyclic(5).unwrap();
        assert_eq!(c5.hat_lift(s(&[0, 2, 4])).unwrap().values, [0, 2, 4]);
        assert_eq!(c5.hat_lift(c5.elements()).unwrap().max(), Some(4));
        let c9 = GroundMonoid::cyclic(9).unwrap();
        let h = c9.hat_lift(s(&[0, 2, 3, 4])).unwrap();
        assert_eq!(h.values, [0, 2, 3, 4]);
        assert_eq!(h.max(), Some(4));
        let n = GroundMonoid::natural_segment(6).unwrap();
        assert_eq!(n.hat_lift(s(&[0])), Err(PowsetError::NotCyclic));
    }

    #[test]
    fn cauchy_davenport_examples() {
        let c7 = GroundMonoid::cyclic(7).unwrap();
        assert_eq!(c7.cauchy_davenport_holds(s(&[0, 1]), s(&[0, 2])), Ok(true));
        let c5 = GroundMonoid::cyclic(5).unwrap();
        assert_eq!(c5.cauchy_davenport_holds(c5.elements(), c5.elements()), Ok(true));
        let c11 = GroundMonoid::cyclic(11).unwrap();
        assert_eq!(c11.cauchy_davenport_holds(s(&[4]), s(&[1, 2, 9])), Ok(true));
        let c9 = GroundMonoid::cyclic(9).unwrap();
        assert_eq!(c9.cauchy_davenport_holds(s(&[0]), s(&[0])), Err(PowsetError::NotPrime(9)));
    }

    #[test]
    fn parse_and_format() {
        let c7 = GroundMonoid::cyclic(7).unwrap();
        let p = c7.parse_subset(" { 0, 1 ,3 } ").unwrap();
        assert_eq!(p, ParsedSubset { set: s(&[0, 1, 3]), reduced: false });
        assert_eq!(c7.format_subset(p.set), "{0,1,3}");
        let p = c7.parse_subset("{8,0}").unwrap();
        assert_eq!(p, ParsedSubset { set: s(&[0, 1]), reduced: true });
        assert!(matches!(c7.parse_subset("0,1"), Err(PowsetError::Parse(_))));
        assert!(matches!(c7.parse_subset("{0,x}"), Err(PowsetError::Parse(_))));
        assert_eq!(c7.parse_subset("{}"), Err(PowsetError::Empty));
        let n = GroundMonoid::natural_segment(4).unwrap();
        assert_eq!(n.parse_subset("{0,5}"), Err(PowsetError::OutOfRange(5)));
    }

    #[test]
    fn primes() {
        let ps: Vec<usize> = (0..30).filter(|&p| is_prime(p)).collect();
        assert_eq!(ps, [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
    }
}
