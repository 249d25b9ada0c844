//! Irreducibility in the reduced and restricted power monoids.
//!
//! In the reduced monoid a decomposition `X = Y Z` forces `Y, Z ⊆ X`, since
//! both factors contain the identity. For a candidate left factor `Y` every
//! admissible right factor lies inside `Z* = {z : Y z ⊆ X}`, and `Y Z*` is
//! sandwiched between `Y Z = X` and `X`; so it suffices to test `Y Z* = X`
//! once per `Y` instead of looping over pairs.

use alloc::string::String;
use alloc::vec::Vec;

use thiserror::Error;

use crate::ground::{GroundKind, GroundMonoid};
use crate::powset::PowsetError;
use crate::subset::Subset;

/// Default bound on the ground size for a census.
pub const DEFAULT_CENSUS_BOUND: usize = 18;

/// Largest non-group ground for which restricted-monoid atoms are decided by
/// exhaustive pair search.
pub const RESTRICTED_TABLE_LIMIT: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Variant {
    /// Finite subsets containing the identity.
    Reduced,
    /// Finite subsets meeting the unit group.
    Restricted,
}

impl Variant {
    pub fn name(self) -> &'static str {
        match self {
            Variant::Reduced => "reduced",
            Variant::Restricted => "restricted",
        }
    }

    /// Natural segments only carry the reduced monoid (their only unit is 0,
    /// so the two variants coincide).
    pub(crate) fn effective(self, g: &GroundMonoid) -> Variant {
        if g.is_finite() {
            self
        } else {
            Variant::Reduced
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AtomError {
    #[error("{set} is not an element of the {variant} power monoid")]
    NotMember { set: String, variant: &'static str },
    #[error(transparent)]
    Powset(#[from] PowsetError),
    #[error("ground of size {size} exceeds the census bound {bound}")]
    CensusBound { size: usize, bound: usize },
    #[error("restricted atoms over a non-group ground need size <= {RESTRICTED_TABLE_LIMIT}, got {0}")]
    RestrictedTooLarge(usize),
    #[error("invalid construction: {0}")]
    Construction(String),
}

/// Result of an irreducibility test.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AtomVerdict {
    pub is_atom: bool,
    /// The input was a unit of the chosen monoid (never an atom, no witness).
    pub is_unit: bool,
    /// `(Y, Z)` with `Y Z = X`, both non-units; present iff `X` is a non-unit
    /// non-atom.
    pub witness: Option<(Subset, Subset)>,
}

impl AtomVerdict {
    fn atom() -> Self {
        AtomVerdict {
            is_atom: true,
            is_unit: false,
            witness: None,
        }
    }

    fn unit() -> Self {
        AtomVerdict {
            is_atom: false,
            is_unit: true,
            witness: None,
        }
    }

    fn split(y: Subset, z: Subset) -> Self {
        AtomVerdict {
            is_atom: false,
            is_unit: false,
            witness: Some((y, z)),
        }
    }
}

/// Whether `x` is an element of the chosen power monoid.
pub fn is_member(g: &GroundMonoid, x: Subset, variant: Variant) -> bool {
    if g.check_subset(x).is_err() {
        return false;
    }
    match variant.effective(g) {
        Variant::Reduced => g.contains_identity(x),
        Variant::Restricted => g.meets_units(x),
    }
}

/// Whether `x` is a unit of the chosen power monoid: `{1}` in the reduced
/// monoid, a singleton unit in the restricted one.
pub fn is_unit_of(g: &GroundMonoid, x: Subset, variant: Variant) -> bool {
    match variant.effective(g) {
        Variant::Reduced => x == Subset::singleton(g.identity()),
        Variant::Restricted => x.len() == 1 && g.meets_units(x),
    }
}

fn check_member(g: &GroundMonoid, x: Subset, variant: Variant) -> Result<(), AtomError> {
    g.check_subset(x)?;
    if is_member(g, x, variant) {
        Ok(())
    } else {
        Err(AtomError::NotMember {
            set: g.format_subset(x),
            variant: variant.name(),
        })
    }
}

/// Decides whether `x` is an atom of the chosen power monoid.
///
/// Two-element sets `{1, y}` in the reduced monoid are settled directly:
/// they are atoms iff `y² ∉ {1, y}`. Larger sets go through
/// [`reduced_decomposition`]. Over groups the restricted case is reduced to
/// the reduced one by translating `x` to contain the identity; over other
/// finite grounds it uses [`restricted_decomposition`].
pub fn is_atom(g: &GroundMonoid, x: Subset, variant: Variant) -> Result<AtomVerdict, AtomError> {
    check_member(g, x, variant)?;
    if is_unit_of(g, x, variant) {
        return Ok(AtomVerdict::unit());
    }
    match variant.effective(g) {
        Variant::Reduced => Ok(reduced_verdict(g, x)),
        Variant::Restricted if g.is_group() => {
            // x = e (e⁻¹ x) with e ∈ x; e⁻¹ x contains the identity
            let e = x.min().unwrap();
            let inv = g.inverse(e).unwrap();
            let shifted = g.left_translate(inv, x);
            Ok(match reduced_verdict(g, shifted).witness {
                Some((y, z)) => AtomVerdict::split(g.left_translate(e, y), z),
                None => AtomVerdict::atom(),
            })
        }
        Variant::Restricted => {
            if g.size() > RESTRICTED_TABLE_LIMIT {
                return Err(AtomError::RestrictedTooLarge(g.size()));
            }
            Ok(match restricted_decomposition(g, x) {
                Some((y, z)) => AtomVerdict::split(y, z),
                None => AtomVerdict::atom(),
            })
        }
    }
}

fn reduced_verdict(g: &GroundMonoid, x: Subset) -> AtomVerdict {
    if x.len() == 2 {
        let y = x.without(g.identity()).min().unwrap();
        return match g.mul(y, y) {
            Some(sq) if sq == g.identity() || sq == y => AtomVerdict::split(x, x),
            _ => AtomVerdict::atom(),
        };
    }
    match reduced_decomposition(g, x) {
        Some((y, z)) => AtomVerdict::split(y, z),
        None => AtomVerdict::atom(),
    }
}

/// Searches for `x = Y Z` with `Y, Z` identity-containing and different from
/// `{1}`. Left factors are tried in increasing bit order; the returned right
/// factor is the maximal one, `Z*`.
pub fn reduced_decomposition(g: &GroundMonoid, x: Subset) -> Option<(Subset, Subset)> {
    let one = Subset::singleton(g.identity());
    let rest = x.without(g.identity());
    for sub in rest.submasks().skip(1) {
        let y = sub.union(one);
        let z_star = right_quotient(g, y, x, x);
        if z_star != one && g.try_product(y, z_star) == Some(x) {
            return Some((y, z_star));
        }
    }
    None
}

/// `{z ∈ candidates : Y z ⊆ X}`.
#[inline]
fn right_quotient(g: &GroundMonoid, y: Subset, x: Subset, candidates: Subset) -> Subset {
    match g.kind() {
        GroundKind::Cyclic(n) => {
            // z ∈ X - y for every y ∈ Y
            let mut acc = candidates;
            for e in y.iter() {
                acc = acc.intersection(g.translate_unchecked((n - e) % n, x, 0));
                if acc.is_empty() {
                    break;
                }
            }
            acc
        }
        _ => candidates
            .iter()
            .filter(|&z| {
                g.try_product(y, Subset::singleton(z))
                    .is_some_and(|p| p.is_subset(x))
            })
            .collect(),
    }
}

/// Exhaustive search for `x = Y Z` in the restricted monoid, where `Y` and
/// `Z` meet the unit group and have at least two elements. Independent of
/// the translation shortcut used by [`is_atom`] over groups.
pub fn restricted_decomposition(g: &GroundMonoid, x: Subset) -> Option<(Subset, Subset)> {
    let all = g.elements();
    for y in all.submasks() {
        if y.len() < 2 || !g.meets_units(y) || (g.is_group() && y.len() > x.len()) {
            continue;
        }
        let z_star = right_quotient_general(g, y, x, all);
        if z_star.len() >= 2 && g.meets_units(z_star) && g.try_product(y, z_star) == Some(x) {
            return Some((y, z_star));
        }
    }
    None
}

fn right_quotient_general(g: &GroundMonoid, y: Subset, x: Subset, candidates: Subset) -> Subset {
    candidates
        .iter()
        .filter(|&z| {
            g.try_product(y, Subset::singleton(z))
                .is_some_and(|p| p.is_subset(x))
        })
        .collect()
}

/// All atoms of one power monoid over one ground, in canonical order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AtomTable {
    pub ground: GroundKind,
    pub variant: Variant,
    pub atoms: Vec<Subset>,
}

impl AtomTable {
    pub fn contains(&self, x: Subset) -> bool {
        self.atoms
            .binary_search_by_key(&x.canonical_key(), |a| a.canonical_key())
            .is_ok()
    }

    /// Atoms contained in `x`, in canonical order.
    pub fn atoms_within(&self, x: Subset) -> Vec<Subset> {
        self.atoms.iter().copied().filter(|a| a.is_subset(x)).collect()
    }
}

/// Sorts by (cardinality, bit pattern) and removes duplicates.
pub fn sort_canonical(sets: &mut Vec<Subset>) {
    sets.sort_unstable_by_key(|s| s.canonical_key());
    sets.dedup();
}

/// Non-unit elements of the chosen monoid, in canonical order.
pub fn census_candidates(g: &GroundMonoid, variant: Variant) -> Vec<Subset> {
    let mut out: Vec<Subset> = match variant.effective(g) {
        Variant::Reduced => {
            let one = Subset::singleton(g.identity());
            g.elements()
                .without(g.identity())
                .submasks()
                .skip(1)
                .map(|s| s.union(one))
                .collect()
        }
        Variant::Restricted => g
            .elements()
            .submasks()
            .filter(|s| s.len() >= 2 && g.meets_units(*s))
            .collect(),
    };
    sort_canonical(&mut out);
    out
}

pub fn check_census_bound(g: &GroundMonoid, bound: usize) -> Result<(), AtomError> {
    if g.size() > bound {
        Err(AtomError::CensusBound {
            size: g.size(),
            bound,
        })
    } else {
        Ok(())
    }
}

/// Every atom of the chosen monoid, sequentially.
pub fn atom_census(g: &GroundMonoid, variant: Variant, bound: usize) -> Result<AtomTable, AtomError> {
    check_census_bound(g, bound)?;
    let mut atoms = Vec::new();
    for x in census_candidates(g, variant) {
        if is_atom(g, x, variant)?.is_atom {
            atoms.push(x);
        }
    }
    Ok(AtomTable {
        ground: g.kind(),
        variant: variant.effective(g),
        atoms,
    })
}

/// Named subsets of `Z/nZ`: the large atoms `B_h`, `C_l` and the intervals
/// `X_k = {0, ..., k}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Construction {
    B,
    C,
    X,
}

pub fn named_construction(kind: Construction, param: usize, n: usize) -> Result<Subset, AtomError> {
    let fail = |msg: &str| Err(AtomError::Construction(String::from(msg)));
    if n > crate::subset::MAX_ELEMENTS {
        return fail("modulus too large");
    }
    match kind {
        Construction::B | Construction::C => {
            if n < 5 || n.is_multiple_of(2) {
                return fail("modulus must be odd and at least 5");
            }
            if param.is_multiple_of(2) || param < 1 || param > (n - 1) / 2 {
                return fail("parameter must be odd and in [1, (n-1)/2]");
            }
            let b = (1..=param).step_by(2).fold(Subset::singleton(0), Subset::with);
            Ok(match (kind, param) {
                (Construction::B, _) => b,
                (_, 1) => Subset::from_elems([0, 2]),
                (_, 3) => Subset::from_elems([0, 2, 3, 4]),
                _ => b.with(param + 1),
            })
        }
        Construction::X => {
            if n < 3 || param < 2 || param > n - 1 {
                return fail("parameter must lie in [2, n-1]");
            }
            Ok(Subset::prefix(param + 1))
        }
    }
}
