//! Factorizations into atoms, the minimality preorder, and sets of lengths.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;

use thiserror::Error;

use crate::atoms::{self, AtomError, Variant};
use crate::ground::{GroundKind, GroundMonoid};
use crate::powset::PowsetError;
use crate::search::{self, Mode, Space, SpaceError};
use crate::subset::Subset;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FactorError {
    #[error(transparent)]
    Atom(#[from] AtomError),
    #[error(transparent)]
    Powset(#[from] PowsetError),
    #[error("{0} is not an atom of the power monoid")]
    NotAtom(String),
    #[error("words belong to different grounds or variants")]
    Mixed,
    #[error("restricted factorizations require a group ground")]
    NotGroup,
    #[error("non-abelian restricted search needs a group of order <= {limit}, got {size}")]
    GroupTooLarge { size: usize, limit: usize },
    #[error("order-sensitive minimality test limited to {limit} atoms, got {len}")]
    WordTooLong { len: usize, limit: usize },
    #[error("operation requires a non-empty word")]
    EmptyWord,
}

impl From<SpaceError> for FactorError {
    fn from(e: SpaceError) -> Self {
        match e {
            SpaceError::Atom(a) => FactorError::Atom(a),
            SpaceError::NotGroup => FactorError::NotGroup,
            SpaceError::GroupTooLarge(size) => FactorError::GroupTooLarge {
                size,
                limit: search::GENERAL_GROUP_LIMIT,
            },
            SpaceError::WordTooLong(len) => FactorError::WordTooLong {
                len,
                limit: search::ORDERED_MINIMALITY_LIMIT,
            },
        }
    }
}

/// A finite sequence of atoms of one power monoid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorWord {
    ground: GroundKind,
    variant: Variant,
    atoms: Vec<Subset>,
}

impl FactorWord {
    /// Validates that every entry is an atom of the chosen monoid.
    pub fn new(g: &GroundMonoid, atoms: Vec<Subset>, variant: Variant) -> Result<Self, FactorError> {
        for &a in &atoms {
            if !atoms::is_atom(g, a, variant)?.is_atom {
                return Err(FactorError::NotAtom(g.format_subset(a)));
            }
        }
        Ok(FactorWord {
            ground: g.kind(),
            variant: variant.effective(g),
            atoms,
        })
    }

    /// The empty word.
    pub fn empty(g: &GroundMonoid, variant: Variant) -> Self {
        FactorWord {
            ground: g.kind(),
            variant: variant.effective(g),
            atoms: Vec::new(),
        }
    }

    pub fn atoms(&self) -> &[Subset] {
        &self.atoms
    }

    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    fn check_ground(&self, g: &GroundMonoid) -> Result<(), FactorError> {
        if self.ground == g.kind() {
            Ok(())
        } else {
            Err(FactorError::Mixed)
        }
    }

    /// Product of the atoms in word order.
    pub fn product(&self, g: &GroundMonoid) -> Result<Subset, FactorError> {
        self.check_ground(g)?;
        let mut p = Subset::singleton(g.identity());
        for &a in &self.atoms {
            p = g.product(p, a)?;
        }
        Ok(p)
    }
}

/// A factorization up to reordering and associates: the sorted multiset of
/// least identity-containing associates of its atoms.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FactorClass {
    atoms: Vec<Subset>,
}

impl FactorClass {
    pub fn empty() -> Self {
        FactorClass { atoms: Vec::new() }
    }

    /// The class of a word (associates are normalized).
    pub fn of(g: &GroundMonoid, word: &FactorWord) -> Result<Self, FactorError> {
        word.check_ground(g)?;
        let mode = search::mode_for(g, word.variant)?;
        let mut reps: Vec<Subset> = word.atoms.iter().map(|&a| search::normalize(g, mode, a)).collect();
        reps.sort_unstable();
        Ok(FactorClass { atoms: reps })
    }

    pub(crate) fn from_sorted(atoms: Vec<Subset>) -> Self {
        debug_assert!(atoms.windows(2).all(|w| w[0] <= w[1]));
        FactorClass { atoms }
    }

    pub fn atoms(&self) -> &[Subset] {
        &self.atoms
    }

    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    /// A word in this class (atoms in canonical order).
    pub fn to_word(&self, g: &GroundMonoid, variant: Variant) -> FactorWord {
        FactorWord {
            ground: g.kind(),
            variant: variant.effective(g),
            atoms: self.atoms.clone(),
        }
    }
}

/// A finite set of lengths, possibly cut off at a search bound.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LengthSet {
    pub values: BTreeSet<usize>,
    /// `Some(b)` when only lengths up to `b` were explored and longer
    /// factorizations may exist.
    pub truncated_at: Option<usize>,
}

impl LengthSet {
    pub fn exact<I: IntoIterator<Item = usize>>(values: I) -> Self {
        LengthSet {
            values: values.into_iter().collect(),
            truncated_at: None,
        }
    }

    pub fn contains(&self, l: usize) -> bool {
        self.values.contains(&l)
    }

    pub fn min(&self) -> Option<usize> {
        self.values.first().copied()
    }

    pub fn max(&self) -> Option<usize> {
        self.values.last().copied()
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.values.iter().copied().collect()
    }
}

/// Result of a minimal-factorization enumeration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinimalFactorizations {
    pub target: Subset,
    /// The target is a unit; its only factorization is the empty word.
    pub unit: bool,
    /// Classes in lexicographic order of their canonical forms.
    pub classes: Vec<FactorClass>,
}

impl MinimalFactorizations {
    pub fn lengths(&self) -> LengthSet {
        LengthSet::exact(self.classes.iter().map(FactorClass::len))
    }
}

fn check_target(g: &GroundMonoid, x: Subset, variant: Variant) -> Result<(), FactorError> {
    g.check_subset(x)?;
    if !atoms::is_member(g, x, variant) {
        return Err(AtomError::NotMember {
            set: g.format_subset(x),
            variant: variant.name(),
        }
        .into());
    }
    Ok(())
}

fn normalized_reps(g: &GroundMonoid, mode: Mode, word: &FactorWord) -> Vec<Subset> {
    let mut reps: Vec<Subset> = word.atoms.iter().map(|&a| search::normalize(g, mode, a)).collect();
    reps.sort_unstable();
    reps
}

/// `a ≼ b`: both words have the same product and the atoms of `a` inject
/// into those of `b` up to associates. The empty word only precedes itself.
pub fn preceq(g: &GroundMonoid, a: &FactorWord, b: &FactorWord) -> Result<bool, FactorError> {
    a.check_ground(g)?;
    b.check_ground(g)?;
    if a.variant != b.variant {
        return Err(FactorError::Mixed);
    }
    if a.is_empty() || b.is_empty() {
        return Ok(a.is_empty() && b.is_empty());
    }
    if a.len() > b.len() || a.product(g)? != b.product(g)? {
        return Ok(false);
    }
    let mode = search::mode_for(g, a.variant)?;
    let ra = normalized_reps(g, mode, a);
    let rb = normalized_reps(g, mode, b);
    Ok(is_submultiset(&ra, &rb))
}

/// `a ≺ b`: `a ≼ b` but not `b ≼ a`.
pub fn strictly_precedes(g: &GroundMonoid, a: &FactorWord, b: &FactorWord) -> Result<bool, FactorError> {
    Ok(preceq(g, a, b)? && !preceq(g, b, a)?)
}

// both inputs sorted
fn is_submultiset(small: &[Subset], big: &[Subset]) -> bool {
    let mut j = 0;
    for &x in small {
        while j < big.len() && big[j] < x {
            j += 1;
        }
        if j == big.len() || big[j] != x {
            return false;
        }
        j += 1;
    }
    true
}

/// Whether no word strictly precedes `a`.
///
/// Over commutative grounds a predecessor is a proper sub-multiset with the
/// same product, and since every atom representative contains the identity
/// it suffices to test the sub-multisets obtained by dropping one atom.
/// Over non-commutative grounds every proper sub-multiset is tried in every
/// order.
pub fn is_minimal(g: &GroundMonoid, a: &FactorWord) -> Result<bool, FactorError> {
    let target = a.product(g)?;
    let space = Space::with_atoms(g, target, a.variant, Vec::new())?;
    let reps = normalized_reps(g, space.mode(), a);
    Ok(space.is_minimal_reps(&reps)?)
}

/// Whether the hat-lift maxima of the atoms add up to that of the product.
pub fn is_nr(g: &GroundMonoid, a: &FactorWord) -> Result<bool, FactorError> {
    if g.modulus().is_none() {
        return Err(PowsetError::NotCyclic.into());
    }
    if a.is_empty() {
        return Err(FactorError::EmptyWord);
    }
    let x = a.product(g)?;
    let mut total = 0;
    for &atom in a.atoms() {
        total += g.hat_max(atom)?;
    }
    Ok(total == g.hat_max(x)?)
}

/// Every minimal factorization class of `x`.
pub fn minimal_factorizations(
    g: &GroundMonoid,
    x: Subset,
    variant: Variant,
) -> Result<MinimalFactorizations, FactorError> {
    check_target(g, x, variant)?;
    if atoms::is_unit_of(g, x, variant) {
        return Ok(MinimalFactorizations {
            target: x,
            unit: true,
            classes: alloc::vec![FactorClass::empty()],
        });
    }
    let mut space = Space::new(g, x, variant)?;
    let mut found: BTreeSet<Vec<Subset>> = BTreeSet::new();
    space.search_minimal(None, &mut |word, sp| {
        let mut reps: Vec<Subset> = word.iter().map(|&i| sp.atoms[i]).collect();
        reps.sort_unstable();
        found.insert(reps);
        false
    })?;
    Ok(MinimalFactorizations {
        target: x,
        unit: false,
        classes: found.into_iter().map(FactorClass::from_sorted).collect(),
    })
}

/// Lengths of the minimal factorizations of `x` (`{0}` for a unit).
///
/// Minimal lengths lie in `[1, |x| - 1]`; each candidate length is settled
/// by a depth-first search that stops at the first minimal factorization.
pub fn minimal_length_set(g: &GroundMonoid, x: Subset, variant: Variant) -> Result<LengthSet, FactorError> {
    check_target(g, x, variant)?;
    if atoms::is_unit_of(g, x, variant) {
        return Ok(LengthSet::exact([0]));
    }
    let mut space = Space::new(g, x, variant)?;
    let start = space.start();
    let reachable = space.reach(start);
    let mut values = BTreeSet::new();
    for len in 1..64 {
        if reachable & (1u64 << len) == 0 {
            continue;
        }
        if space.search_minimal(Some(len), &mut |_, _| true)? {
            values.insert(len);
        }
    }
    Ok(LengthSet {
        values,
        truncated_at: None,
    })
}

/// Whether `x` has a minimal factorization of exactly `len` atoms.
pub fn has_minimal_of_length(
    g: &GroundMonoid,
    x: Subset,
    variant: Variant,
    len: usize,
) -> Result<bool, FactorError> {
    check_target(g, x, variant)?;
    if atoms::is_unit_of(g, x, variant) {
        return Ok(len == 0);
    }
    if len == 0 || len >= 64 {
        return Ok(false);
    }
    let mut space = Space::new(g, x, variant)?;
    Ok(space.search_minimal(Some(len), &mut |_, _| true)?)
}

/// `L(x) ∩ [0, lmax]` over all factorizations, minimal or not.
pub fn length_set_truncated(
    g: &GroundMonoid,
    x: Subset,
    variant: Variant,
    lmax: usize,
) -> Result<LengthSet, FactorError> {
    check_target(g, x, variant)?;
    let space = Space::new(g, x, variant)?;
    let (values, cut) = space.lengths_upto(lmax);
    Ok(LengthSet {
        values,
        truncated_at: cut.then_some(lmax),
    })
}

/// Every factorization class of `x` with at most `max_len` atoms.
/// Commutative grounds only.
pub fn factorization_classes(
    g: &GroundMonoid,
    x: Subset,
    variant: Variant,
    max_len: usize,
) -> Result<Vec<FactorClass>, FactorError> {
    check_target(g, x, variant)?;
    if !g.is_commutative() {
        return Err(FactorError::Mixed);
    }
    if atoms::is_unit_of(g, x, variant) {
        return Ok(alloc::vec![FactorClass::empty()]);
    }
    let space = Space::new(g, x, variant)?;
    Ok(space
        .all_factorizations(max_len)
        .into_iter()
        .map(FactorClass::from_sorted)
        .collect())
}
