//! Search space for factorizations of one target set.
//!
//! A factorization is explored as a sequence of partial products. Every atom
//! representative contains the identity, so partial products only grow, and
//! in a minimal factorization they grow strictly at every step (otherwise the
//! non-growing atom could be dropped without changing the product). That
//! caps minimal lengths at `|X| - 1` and lets the search memoize, per partial
//! product, the set of remaining lengths that can still reach the target.
//!
//! Three regimes share the machinery:
//! * reduced monoid: products must stay inside `X`;
//! * restricted monoid over an abelian group: atoms are taken up to
//!   translation, so products only need to fit inside a translate of `X`;
//! * restricted monoid over a non-abelian group: atoms up to two-sided unit
//!   multiplication, with a free unit ("twist") between consecutive atoms.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use hashbrown::HashMap;

use crate::atoms::{self, AtomError, Variant};
use crate::ground::{Elem, GroundMonoid};
use crate::subset::Subset;

/// Largest group for the non-abelian restricted search.
pub const GENERAL_GROUP_LIMIT: usize = 12;

/// Longest word for which the order-sensitive minimality test enumerates
/// all sub-multisets in all orders.
pub const ORDERED_MINIMALITY_LIMIT: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Mode {
    Reduced,
    RestrictedAbelian,
    RestrictedGroup,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum SpaceError {
    Atom(AtomError),
    /// Restricted factorizations need a group ground.
    NotGroup,
    GroupTooLarge(usize),
    WordTooLong(usize),
}

impl From<AtomError> for SpaceError {
    fn from(e: AtomError) -> Self {
        SpaceError::Atom(e)
    }
}

pub(crate) fn mode_for(g: &GroundMonoid, variant: Variant) -> Result<Mode, SpaceError> {
    match variant.effective(g) {
        Variant::Reduced => Ok(Mode::Reduced),
        Variant::Restricted if !g.is_group() => Err(SpaceError::NotGroup),
        Variant::Restricted if g.is_commutative() => Ok(Mode::RestrictedAbelian),
        Variant::Restricted if g.size() > GENERAL_GROUP_LIMIT => {
            Err(SpaceError::GroupTooLarge(g.size()))
        }
        Variant::Restricted => Ok(Mode::RestrictedGroup),
    }
}

/// Least identity-containing associate of an atom (by bit pattern).
pub(crate) fn normalize(g: &GroundMonoid, mode: Mode, a: Subset) -> Subset {
    match mode {
        Mode::Reduced => a,
        Mode::RestrictedAbelian => a
            .iter()
            .map(|e| g.left_translate(g.inverse(e).unwrap(), a))
            .min()
            .unwrap(),
        Mode::RestrictedGroup => {
            let mut best = None::<Subset>;
            for u in 0..g.size() {
                for v in 0..g.size() {
                    let t = g.translate_unchecked(u, a, v);
                    if g.contains_identity(t) && best.is_none_or(|b| t < b) {
                        best = Some(t);
                    }
                }
            }
            best.unwrap()
        }
    }
}

pub(crate) struct Space<'g> {
    g: &'g GroundMonoid,
    target: Subset,
    mode: Mode,
    ordered: bool,
    one: Subset,
    pub(crate) atoms: Vec<Subset>,
    // bit r set iff the target is reachable in exactly r strictly growing steps
    reach: HashMap<Subset, u64>,
}

impl<'g> Space<'g> {
    /// A space whose atom list is every representative that can occur in a
    /// factorization of `target`.
    pub(crate) fn new(g: &'g GroundMonoid, target: Subset, variant: Variant) -> Result<Self, SpaceError> {
        let mut space = Self::bare(g, target, variant)?;
        space.atoms = space.candidate_atoms()?;
        Ok(space)
    }

    /// A space with an explicit list of (already normalized) representatives.
    pub(crate) fn with_atoms(
        g: &'g GroundMonoid,
        target: Subset,
        variant: Variant,
        atoms: Vec<Subset>,
    ) -> Result<Self, SpaceError> {
        let mut space = Self::bare(g, target, variant)?;
        space.atoms = atoms;
        Ok(space)
    }

    fn bare(g: &'g GroundMonoid, target: Subset, variant: Variant) -> Result<Self, SpaceError> {
        let mode = mode_for(g, variant)?;
        Ok(Space {
            g,
            target,
            mode,
            ordered: !g.is_commutative(),
            one: Subset::singleton(g.identity()),
            atoms: Vec::new(),
            reach: HashMap::new(),
        })
    }

    pub(crate) fn mode(&self) -> Mode {
        self.mode
    }

    fn candidate_atoms(&self) -> Result<Vec<Subset>, SpaceError> {
        let g = self.g;
        let mut reps = Vec::new();
        match self.mode {
            Mode::Reduced => {
                for s in self.target.without(g.identity()).submasks().skip(1) {
                    let a = s.union(self.one);
                    if atoms::is_atom(g, a, Variant::Reduced)?.is_atom {
                        reps.push(a);
                    }
                }
            }
            Mode::RestrictedAbelian => {
                // an identity-containing associate of a fitting atom lies in
                // X - t for some t ∈ X
                let mut seen = BTreeSet::new();
                for t in self.target.iter() {
                    let shifted = g.left_translate(g.inverse(t).unwrap(), self.target);
                    for s in shifted.without(g.identity()).submasks().skip(1) {
                        let a = s.union(self.one);
                        if seen.insert(a) && atoms::is_atom(g, a, Variant::Reduced)?.is_atom {
                            reps.push(normalize(g, self.mode, a));
                        }
                    }
                }
            }
            Mode::RestrictedGroup => {
                for s in g.elements().without(g.identity()).submasks().skip(1) {
                    let a = s.union(self.one);
                    if a.len() > self.target.len() || !self.fits(a) {
                        continue;
                    }
                    if atoms::is_atom(g, a, Variant::Reduced)?.is_atom {
                        reps.push(normalize(g, self.mode, a));
                    }
                }
            }
        }
        atoms::sort_canonical(&mut reps);
        Ok(reps)
    }

    /// Whether `q` sits inside the target up to the units this mode allows.
    pub(crate) fn fits(&self, q: Subset) -> bool {
        if q.len() > self.target.len() {
            return false;
        }
        match self.mode {
            Mode::Reduced => q.is_subset(self.target),
            Mode::RestrictedAbelian => self.target.iter().any(|t| {
                // q contains the identity, so a fitting shift maps 1 into X
                self.g.left_translate(t, q).is_subset(self.target)
            }),
            Mode::RestrictedGroup => (0..self.g.size()).any(|u| {
                (0..self.g.size()).any(|v| self.g.translate_unchecked(u, q, v).is_subset(self.target))
            }),
        }
    }

    #[inline]
    pub(crate) fn hits(&self, q: Subset) -> bool {
        q.len() == self.target.len() && self.fits(q)
    }

    /// Products reachable from `q` by appending atom `i`.
    pub(crate) fn steps(&self, q: Subset, i: usize) -> StepIter<'_> {
        let twists = match self.mode {
            Mode::RestrictedGroup if q != self.one => self.g.size(),
            _ => 1,
        };
        StepIter {
            g: self.g,
            q,
            atom: self.atoms[i],
            twist: 0,
            twists,
        }
    }

    fn key(&self, q: Subset) -> Subset {
        match self.mode {
            Mode::RestrictedGroup => (0..self.g.size())
                .map(|u| self.g.left_translate(u, q))
                .min()
                .unwrap(),
            _ => q,
        }
    }

    /// Bitmask of step counts `r` such that some strictly growing chain of
    /// `r` atoms leads from `q` to the target (ignoring minimality).
    pub(crate) fn reach(&mut self, q: Subset) -> u64 {
        let key = self.key(q);
        if let Some(&r) = self.reach.get(&key) {
            return r;
        }
        let r = if self.hits(q) {
            1
        } else {
            let mut acc = 0u64;
            for i in 0..self.atoms.len() {
                let nexts: Vec<Subset> = self.steps(q, i).collect();
                for q2 in nexts {
                    if q2.len() > q.len() && self.fits(q2) {
                        acc |= self.reach(q2) << 1;
                    }
                }
            }
            acc
        };
        self.reach.insert(key, r);
        r
    }

    pub(crate) fn start(&self) -> Subset {
        self.one
    }

    /// Minimality of a factorization given as atom representatives.
    ///
    /// Over commutative grounds dropping atoms can only shrink the product,
    /// so it is enough that dropping any single atom shrinks it. Otherwise
    /// every proper sub-multiset is tried in every order.
    pub(crate) fn is_minimal_reps(&self, reps: &[Subset]) -> Result<bool, SpaceError> {
        if reps.is_empty() {
            return Ok(true);
        }
        if !self.ordered {
            let full = self.product_unordered(reps);
            let size = full.map_or(0, Subset::len);
            for skip in 0..reps.len() {
                if skip > 0 && reps[skip] == reps[skip - 1] {
                    continue;
                }
                let rest: Vec<Subset> = reps
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j != skip)
                    .map(|(_, &a)| a)
                    .collect();
                let p = self.product_unordered(&rest);
                if p.map_or(0, Subset::len) == size {
                    return Ok(false);
                }
            }
            return Ok(true);
        }
        if reps.len() > ORDERED_MINIMALITY_LIMIT {
            return Err(SpaceError::WordTooLong(reps.len()));
        }
        let mut sorted = reps.to_vec();
        sorted.sort_unstable();
        let mut seen = BTreeSet::new();
        let n = sorted.len();
        for mask in 0u32..(1 << n) - 1 {
            let sub: Vec<Subset> = (0..n).filter(|&j| mask & (1 << j) != 0).map(|j| sorted[j]).collect();
            if !seen.insert(sub.clone()) {
                continue;
            }
            if self.some_order_hits(&sub) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn product_unordered(&self, reps: &[Subset]) -> Option<Subset> {
        let mut p = self.one;
        for &a in reps {
            p = self.g.try_product(p, a)?;
        }
        Some(p)
    }

    // whether some arrangement (with twists, in the group mode) of `sub`
    // hits the target
    fn some_order_hits(&self, sub: &[Subset]) -> bool {
        if sub.is_empty() {
            return self.hits(self.one);
        }
        let mut remaining = sub.to_vec();
        self.arrange(self.one, &mut remaining)
    }

    fn arrange(&self, q: Subset, remaining: &mut Vec<Subset>) -> bool {
        if remaining.is_empty() {
            return self.hits(q);
        }
        let twists = if self.mode == Mode::RestrictedGroup && q != self.one {
            self.g.size()
        } else {
            1
        };
        for i in 0..remaining.len() {
            if i > 0 && remaining[..i].contains(&remaining[i]) {
                continue;
            }
            let a = remaining.remove(i);
            let mut found = false;
            let mut seen = BTreeSet::new();
            for w in 0..twists {
                let Some(q2) = self.g.try_product(q, self.g.left_translate(w, a)) else {
                    continue;
                };
                if seen.insert(q2) && self.fits(q2) && self.arrange(q2, remaining) {
                    found = true;
                    break;
                }
            }
            remaining.insert(i, a);
            if found {
                return true;
            }
        }
        false
    }

    /// Depth-first search over strictly growing chains. Calls `visit` with
    /// the atom indices of every minimal factorization found (in ordered
    /// modes the same multiset may be reported more than once). Stops early
    /// when `visit` returns `true`.
    pub(crate) fn search_minimal(
        &mut self,
        want_len: Option<usize>,
        visit: &mut dyn FnMut(&[usize], &Self) -> bool,
    ) -> Result<bool, SpaceError> {
        let mut word = Vec::new();
        let start = self.start();
        self.dfs(start, 0, &mut word, want_len, visit)
    }

    fn dfs(
        &mut self,
        q: Subset,
        first: usize,
        word: &mut Vec<usize>,
        want_len: Option<usize>,
        visit: &mut dyn FnMut(&[usize], &Self) -> bool,
    ) -> Result<bool, SpaceError> {
        if !word.is_empty() && self.hits(q) {
            if want_len.is_none_or(|l| l == word.len()) {
                let mut reps: Vec<Subset> = word.iter().map(|&i| self.atoms[i]).collect();
                reps.sort_unstable();
                if self.is_minimal_reps(&reps)? && visit(word, self) {
                    return Ok(true);
                }
            }
            return Ok(false);
        }
        let r = self.reach(q);
        let alive = match want_len {
            Some(l) => l > word.len() && r & (1u64 << (l - word.len())) != 0,
            None => r != 0,
        };
        if !alive {
            return Ok(false);
        }
        let lo = if self.ordered { 0 } else { first };
        for i in lo..self.atoms.len() {
            let nexts: Vec<Subset> = self.steps(q, i).collect();
            let mut seen = BTreeSet::new();
            for q2 in nexts {
                if q2.len() <= q.len() || !seen.insert(q2) || !self.fits(q2) {
                    continue;
                }
                word.push(i);
                let stop = self.dfs(q2, i, word, want_len, visit)?;
                word.pop();
                if stop {
                    return Ok(true);
                }
            }
        }
        Ok(false)
    }

    /// Lengths of all factorizations up to `lmax`, by breadth-first layers
    /// of partial products. The flag is set when partial products survive
    /// past `lmax`.
    pub(crate) fn lengths_upto(&self, lmax: usize) -> (BTreeSet<usize>, bool) {
        let mut lengths = BTreeSet::new();
        let mut layer: BTreeSet<Subset> = BTreeSet::new();
        layer.insert(self.start());
        for len in 0..=lmax + 1 {
            if layer.is_empty() {
                return (lengths, false);
            }
            if len == lmax + 1 {
                return (lengths, true);
            }
            if layer.iter().any(|&q| self.hits(q)) {
                lengths.insert(len);
            }
            let mut next = BTreeSet::new();
            for &q in &layer {
                for i in 0..self.atoms.len() {
                    for q2 in self.steps(q, i) {
                        if self.fits(q2) {
                            next.insert(self.key(q2));
                        }
                    }
                }
            }
            layer = next;
        }
        unreachable!()
    }

    /// Every factorization (minimal or not) of length at most `max_len`, as
    /// sorted representative multisets. Commutative grounds only.
    pub(crate) fn all_factorizations(&self, max_len: usize) -> BTreeSet<Vec<Subset>> {
        let mut out = BTreeSet::new();
        let mut word = Vec::new();
        self.all_dfs(self.start(), 0, max_len, &mut word, &mut out);
        out
    }

    fn all_dfs(
        &self,
        q: Subset,
        first: usize,
        max_len: usize,
        word: &mut Vec<Subset>,
        out: &mut BTreeSet<Vec<Subset>>,
    ) {
        if !word.is_empty() && self.hits(q) {
            let mut w = word.clone();
            w.sort_unstable();
            out.insert(w);
        }
        if word.len() == max_len {
            return;
        }
        for i in first..self.atoms.len() {
            let a = self.atoms[i];
            let Some(q2) = self.g.try_product(q, a) else {
                continue;
            };
            if self.fits(q2) {
                word.push(a);
                self.all_dfs(q2, i, max_len, word, out);
                word.pop();
            }
        }
    }
}

pub(crate) struct StepIter<'a> {
    g: &'a GroundMonoid,
    q: Subset,
    atom: Subset,
    twist: Elem,
    twists: usize,
}

impl Iterator for StepIter<'_> {
    type Item = Subset;

    fn next(&mut self) -> Option<Subset> {
        while self.twist < self.twists {
            let w = self.twist;
            self.twist += 1;
            let a = if w == 0 {
                self.atom
            } else {
                self.g.left_translate(w, self.atom)
            };
            if let Some(p) = self.g.try_product(self.q, a) {
                return Some(p);
            }
        }
        None
    }
}
