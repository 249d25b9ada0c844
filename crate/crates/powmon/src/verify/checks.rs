//! The individual checks. Each one recomputes its claim by brute force where
//! a cheap independent route exists, and compares against the library.

use std::collections::{BTreeSet, HashSet};

use powmon_core::atoms::{census_candidates, reduced_decomposition};
use powmon_core::powset::is_prime;
use powmon_core::{
    factorization_classes, is_atom, is_minimal, is_nr, length_set_truncated, minimal_factorizations,
    minimal_length_set, named_construction, AtomError, Construction, FactorError, FactorWord, GroundMonoid, Subset,
    Variant,
};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use thiserror::Error;

use super::report::{ReportBuilder, VerifyReport};
use crate::export::format_lengths;
use crate::parallel::parallel_census;

/// Largest modulus accepted by the interval check by default.
pub const INTERVAL_BOUND: usize = 13;
/// Largest abelian group accepted by the bridge check.
pub const BRIDGE_BOUND: usize = 9;
/// Largest non-abelian group scanned by the exploratory check.
pub const EXPLORATORY_BOUND: usize = 12;

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error(transparent)]
    Atom(#[from] AtomError),
    #[error(transparent)]
    Factor(#[from] FactorError),
    #[error("{0}")]
    Precondition(String),
}

fn pre(ok: bool, msg: impl FnOnce() -> String) -> Result<(), VerifyError> {
    if ok {
        Ok(())
    } else {
        Err(VerifyError::Precondition(msg()))
    }
}

fn ground_label(g: &GroundMonoid) -> String {
    match g.kind() {
        powmon_core::GroundKind::Cyclic(n) => format!("Z/{n}"),
        powmon_core::GroundKind::NaturalSegment(cap) => format!("N<={cap}"),
        powmon_core::GroundKind::Table(n) => format!("table({n})"),
    }
}

fn lengths_text(values: &BTreeSet<usize>) -> String {
    format_lengths(&values.iter().copied().collect::<Vec<_>>())
}

fn word_text(g: &GroundMonoid, atoms: &[Subset]) -> String {
    atoms.iter().map(|&a| g.format_subset(a)).collect::<Vec<_>>().join(" * ")
}

fn product_of(g: &GroundMonoid, atoms: &[Subset]) -> Result<Subset, VerifyError> {
    let mut p = Subset::singleton(g.identity());
    for &a in atoms {
        p = g.product(p, a).map_err(AtomError::from)?;
    }
    Ok(p)
}

// no proper sub-multiset of `word` multiplies (in word order) to `x`
fn no_proper_subword_reaches(g: &GroundMonoid, x: Subset, word: &[Subset]) -> Result<bool, VerifyError> {
    let k = word.len();
    for mask in 0..(1u32 << k) - 1 {
        let sub: Vec<Subset> = (0..k).filter(|i| mask & (1 << i) != 0).map(|i| word[i]).collect();
        if product_of(g, &sub)? == x {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Every non-unit of the reduced power monoid factors into atoms exactly
/// when no non-identity element squares to the identity or to itself.
pub fn check_atomicity_characterization(g: &GroundMonoid, bound: usize) -> Result<VerifyReport, VerifyError> {
    pre(g.is_finite(), || "atomicity check needs a finite ground".into())?;
    let mut r = ReportBuilder::new("atomicity").param("ground", ground_label(g));
    let atoms = parallel_census(g, Variant::Reduced, bound)?.atoms;

    // close the atom set under multiplication
    let mut factorable: HashSet<Subset> = atoms.iter().copied().collect();
    let mut frontier = atoms.clone();
    while let Some(f) = frontier.pop() {
        for &a in &atoms {
            let p = g.product(f, a).map_err(AtomError::from)?;
            if factorable.insert(p) {
                frontier.push(p);
            }
        }
    }
    let nonunits = census_candidates(g, Variant::Reduced);
    let stuck: Vec<Subset> = nonunits.iter().copied().filter(|x| !factorable.contains(x)).collect();
    let atomic = stuck.is_empty();
    let criterion = g.atomicity_criterion();
    r.note(format!(
        "{} of {} non-units factor into atoms; criterion says {}",
        nonunits.len() - stuck.len(),
        nonunits.len(),
        if criterion { "atomic" } else { "not atomic" }
    ));
    if atomic != criterion {
        r.fail(format!(
            "exhaustive search finds the monoid {}atomic, criterion disagrees",
            if atomic { "" } else { "non-" }
        ));
    }
    if !criterion {
        let one = g.identity();
        for x in g.elements().without(one).iter() {
            let sq = g.mul(x, x).expect("finite ground");
            if sq == one || sq == x {
                let two = Subset::from_elems([one, x]);
                if factorable.contains(&two) {
                    r.fail(format!("{} squares badly yet factors", g.format_subset(two)));
                } else {
                    r.note(format!("non-factorable {}", g.format_subset(two)));
                }
            }
        }
    }
    Ok(r.finish())
}

// minimal words of length exactly |x| with atoms inside x, by plain
// enumeration of atom multisets
fn long_minimal_word(g: &GroundMonoid, x: Subset, atoms: &[Subset]) -> Result<Option<Vec<Subset>>, VerifyError> {
    fn rec(
        g: &GroundMonoid,
        x: Subset,
        inside: &[Subset],
        start: usize,
        q: Subset,
        word: &mut Vec<Subset>,
    ) -> Result<Option<Vec<Subset>>, VerifyError> {
        if word.len() == x.len() {
            if q == x && no_proper_subword_reaches(g, x, word)? {
                return Ok(Some(word.clone()));
            }
            return Ok(None);
        }
        // a prefix already equal to x precedes every extension
        if q == x && !word.is_empty() {
            return Ok(None);
        }
        for i in start..inside.len() {
            let q2 = g.product(q, inside[i]).map_err(AtomError::from)?;
            if !q2.is_subset(x) {
                continue;
            }
            word.push(inside[i]);
            let found = rec(g, x, inside, i, q2, word)?;
            word.pop();
            if found.is_some() {
                return Ok(found);
            }
        }
        Ok(None)
    }
    let inside: Vec<Subset> = atoms.iter().copied().filter(|a| a.is_subset(x)).collect();
    rec(g, x, &inside, 0, Subset::singleton(g.identity()), &mut Vec::new())
}

/// Minimal factorizations of `X` have at most `|X| - 1` atoms.
///
/// Over commutative grounds a second, independent pass enumerates atom
/// multisets of length exactly `|X|` for every `X`. A minimal word longer
/// than allowed would have a prefix `P` of length `|π(P)|` that is itself
/// minimal, so this pass alone rules out every violation.
pub fn check_minimal_bound(g: &GroundMonoid, bound: usize) -> Result<VerifyReport, VerifyError> {
    pre(g.is_finite(), || "minimal-bound check needs a finite ground".into())?;
    let mut r = ReportBuilder::new("minimal-bound").param("ground", ground_label(g));
    let atoms = parallel_census(g, Variant::Reduced, bound)?.atoms;
    let mut best: Option<(usize, Subset)> = None;
    let nonunits = census_candidates(g, Variant::Reduced);
    for &x in &nonunits {
        let m = minimal_factorizations(g, x, Variant::Reduced)?;
        if let Some(top) = m.classes.iter().map(|c| c.len()).max() {
            if top + 1 > x.len() {
                r.fail(format!("{} has a minimal factorization of length {top}", g.format_subset(x)));
            }
            if best.is_none_or(|(b, _)| top > b) {
                best = Some((top, x));
            }
        }
        if g.is_commutative() {
            if let Some(w) = long_minimal_word(g, x, &atoms)? {
                r.fail(format!("minimal word of length |X|: {}", word_text(g, &w)));
            }
        }
    }
    r.note(format!("{} non-units enumerated", nonunits.len()));
    if let Some((top, x)) = best {
        r.note(format!("max minimal length {top} at {}", g.format_subset(x)));
    }
    Ok(r.finish())
}

fn is_c3(g: &GroundMonoid) -> bool {
    g.is_group() && g.size() == 3
}

/// Half-factoriality of the minimal factorizations holds exactly for the
/// trivial group and groups of order 3; minimal factoriality only for the
/// trivial one.
pub fn check_hmf_classification(g: &GroundMonoid, bound: usize) -> Result<VerifyReport, VerifyError> {
    pre(g.is_finite(), || "HmF check needs a finite ground".into())?;
    let mut r = ReportBuilder::new("hmf").param("ground", ground_label(g));
    powmon_core::atoms::check_census_bound(g, bound)?;
    let full = g.elements();
    let mut multi_length: Vec<(Subset, BTreeSet<usize>)> = Vec::new();
    let mut multi_class: Vec<(Subset, Vec<Vec<Subset>>)> = Vec::new();
    for x in census_candidates(g, Variant::Reduced) {
        let m = minimal_factorizations(g, x, Variant::Reduced)?;
        let lengths = m.lengths().values;
        if lengths.len() != 1 {
            multi_length.push((x, lengths));
        }
        if m.classes.len() != 1 {
            multi_class.push((x, m.classes.iter().map(|c| c.atoms().to_vec()).collect()));
        }
    }
    // report the whole ground first when it is a witness
    multi_length.sort_by_key(|(x, _)| (*x != full, x.canonical_key()));
    multi_class.sort_by_key(|(x, _)| (*x != full, x.canonical_key()));

    let hmf = multi_length.is_empty();
    let mf = multi_class.is_empty();
    let expect_hmf = g.size() == 1 || is_c3(g);
    let expect_mf = g.size() == 1;
    r.note(format!("HmF {hmf}, minimally factorial {mf}"));
    if let Some((x, l)) = multi_length.first() {
        r.note(format!("L^m({}) = {}", g.format_subset(*x), lengths_text(l)));
    }
    if let Some((x, classes)) = multi_class.first() {
        let shown: Vec<String> = classes.iter().take(6).map(|c| word_text(g, c)).collect();
        let more = if classes.len() > 6 { " | ..." } else { "" };
        r.note(format!(
            "{} minimal classes of {}: {}{more}",
            classes.len(),
            g.format_subset(*x),
            shown.join(" | ")
        ));
    }
    if hmf != expect_hmf {
        r.fail(match multi_length.first() {
            Some((x, l)) => format!("unexpected lengths {} for {}", lengths_text(l), g.format_subset(*x)),
            None => "every non-unit has a single minimal length".into(),
        });
    }
    if mf != expect_mf {
        r.fail(if mf {
            "every non-unit has a single minimal class".into()
        } else {
            format!("{} non-units with several minimal classes", multi_class.len())
        });
    }
    Ok(r.finish())
}

/// The atoms prescribed for a 2-atom factorization of `X_k`.
pub fn interval_split(k: usize) -> [(Construction, usize); 2] {
    use Construction::{B, C};
    if k % 2 == 1 {
        let m = (k - 1) / 2;
        if m % 2 == 1 {
            [(B, m), (C, m)]
        } else {
            [(B, m + 1), (C, m - 1)]
        }
    } else {
        let m = k / 2;
        match m {
            1 => [(B, 1), (B, 1)],
            2 => [(B, 1), (B, 3)],
            _ if m % 2 == 1 => [(C, m), (C, m - 2)],
            _ => [(C, m - 1), (C, m - 1)],
        }
    }
}

fn construction_name(c: Construction, p: usize) -> String {
    let tag = match c {
        Construction::B => "B",
        Construction::C => "C",
        Construction::X => "X",
    };
    format!("{tag}_{p}")
}

// the family's defining pattern, without range checks
fn raw_construction(c: Construction, p: usize) -> Subset {
    let b = |h: usize| Subset::from_elems(std::iter::once(0).chain((1..=h).step_by(2)));
    match (c, p) {
        (Construction::B, h) => b(h),
        (Construction::C, 1) => Subset::from_elems([0, 2]),
        (Construction::C, 3) => Subset::from_elems([0, 2, 3, 4]),
        (Construction::C, l) => b(l).with(l + 1),
        (Construction::X, k) => Subset::prefix(k + 1),
    }
}

/// `L^m(X_k) = [2, k]` for every `k`, with a 2-atom NR factorization from
/// the prescribed case split.
pub fn check_interval_realization(n: usize, bound: usize) -> Result<VerifyReport, VerifyError> {
    pre(n % 2 == 1 && n >= 5 && n <= bound, || {
        format!("interval check needs odd n in [5, {bound}], got {n}")
    })?;
    let g = GroundMonoid::cyclic(n).map_err(|e| VerifyError::Precondition(e.to_string()))?;
    let mut r = ReportBuilder::new("interval").param("n", n);
    for k in 2..n {
        let x = named_construction(Construction::X, k, n)?;
        let lm = minimal_length_set(&g, x, Variant::Reduced)?.values;
        let want: BTreeSet<usize> = (2..=k).collect();
        if lm != want {
            r.fail(format!("L^m(X_{k}) = {}, expected [2,{k}]", lengths_text(&lm)));
        }
        let split = interval_split(k);
        let names = format!("{} + {}", construction_name(split[0].0, split[0].1), construction_name(split[1].0, split[1].1));
        let mut problems = Vec::new();
        let mut sets = Vec::new();
        for (c, p) in split {
            let set = match named_construction(c, p, n) {
                Ok(s) => s,
                Err(_) => {
                    problems.push(format!("{} outside the construction range", construction_name(c, p)));
                    raw_construction(c, p)
                }
            };
            if let Some((y, z)) = reduced_decomposition(&g, set) {
                problems.push(format!(
                    "{} = {} is not an atom ({} * {})",
                    construction_name(c, p),
                    g.format_subset(set),
                    g.format_subset(y),
                    g.format_subset(z)
                ));
            }
            sets.push(set);
        }
        let prod = g.product(sets[0], sets[1]).map_err(AtomError::from)?;
        if prod != x {
            problems.push(format!("product is {}", g.format_subset(prod)));
        } else if g.hat_max(sets[0]).map_err(AtomError::from)? + g.hat_max(sets[1]).map_err(AtomError::from)? != k {
            problems.push("hat maxima do not add up to k".into());
        }
        if problems.is_empty() {
            r.note(format!("X_{k} = {names}"));
        } else {
            r.fail(format!("X_{k} = {names} fails: {}", problems.join("; ")));
            // the claimed conclusion on its own: some 2-atom NR factorization
            let m = minimal_factorizations(&g, x, Variant::Reduced)?;
            let nr = m
                .classes
                .iter()
                .filter(|c| c.len() == 2)
                .find(|c| is_nr(&g, &c.to_word(&g, Variant::Reduced)).unwrap_or(false));
            r.note(match nr {
                Some(c) => format!("X_{k} has the 2-atom NR factorization {}", word_text(&g, c.atoms())),
                None => format!("X_{k} has no 2-atom NR factorization"),
            });
        }
    }
    Ok(r.finish())
}

/// The full group `Z/n` has factorizations of every length from some point
/// on: `{0,1}^l` covers it for every `l >= n - 1`.
pub fn check_unbounded_lengths(n: usize, lmax: usize) -> Result<VerifyReport, VerifyError> {
    pre(n % 2 == 1 && n >= 3, || format!("unbounded-length check needs odd n >= 3, got {n}"))?;
    pre(lmax >= n, || format!("lmax {lmax} is below n = {n}"))?;
    let g = GroundMonoid::cyclic(n).map_err(|e| VerifyError::Precondition(e.to_string()))?;
    let mut r = ReportBuilder::new("unbounded").param("n", n).param("lmax", lmax);
    let x = g.elements();
    let l = length_set_truncated(&g, x, Variant::Reduced, lmax)?;
    let b1 = Subset::from_elems([0, 1]);
    for len in 1..=lmax {
        let direct = g.power(b1, len).map_err(AtomError::from)? == x;
        if direct && !l.contains(len) {
            r.fail(format!("{{0,1}}^{len} = Z/{n} but {len} is missing from L"));
        }
    }
    for len in n..=lmax {
        if !l.contains(len) {
            r.fail(format!("length {len} missing"));
        }
    }
    if let Some(lo) = l.min() {
        if let Some(gap) = (lo..=lmax).find(|&i| !l.contains(i)) {
            r.fail(format!("gap at {gap} above min L = {lo}"));
        }
    }
    if l.truncated_at.is_none() {
        r.fail("search ended below lmax: lengths are bounded".to_string());
    }
    r.note(format!("L(Z/{n}) up to {lmax} = {}", lengths_text(&l.values)));
    Ok(r.finish())
}

/// Over the naturals every factorization of `X` has at most `|X|^2 - |X|`
/// atoms, and every factorization is minimal.
pub fn check_bf_bound_naturals(cap: usize, max_elem: usize) -> Result<VerifyReport, VerifyError> {
    pre(max_elem >= 1, || "max element must be positive".into())?;
    pre(cap >= max_elem, || format!("cap {cap} too small for subsets of [0,{max_elem}]"))?;
    let g = GroundMonoid::natural_segment(cap).map_err(|e| VerifyError::Precondition(e.to_string()))?;
    let mut r = ReportBuilder::new("bf-naturals").param("cap", cap).param("max", max_elem);
    let mut checked = 0;
    let mut longest = (0, Subset::EMPTY);
    for bits in 1..(1u64 << max_elem) {
        let x = Subset::from_bits(bits << 1).with(0);
        // every atom adds at least 1 to the maximum
        let top = x.max().unwrap_or(0);
        let l = length_set_truncated(&g, x, Variant::Reduced, top)?;
        if l.truncated_at.is_some() {
            r.fail(format!("{}: search did not terminate by length {top}", g.format_subset(x)));
        }
        let limit = x.len() * x.len() - x.len();
        if let Some(m) = l.max() {
            if m > limit {
                r.fail(format!("{}: length {m} exceeds {limit}", g.format_subset(x)));
            }
            if m > longest.0 {
                longest = (m, x);
            }
        }
        let all = factorization_classes(&g, x, Variant::Reduced, top)?;
        let minimal = minimal_factorizations(&g, x, Variant::Reduced)?.classes;
        if all != minimal {
            let extra: Vec<String> = all
                .iter()
                .filter(|c| !minimal.contains(c))
                .map(|c| word_text(&g, c.atoms()))
                .collect();
            r.fail(format!("{}: non-minimal factorizations {}", g.format_subset(x), extra.join(" | ")));
        }
        checked += 1;
    }
    r.note(format!("{checked} sets; longest factorization {} at {}", longest.0, g.format_subset(longest.1)));
    Ok(r.finish())
}

/// Reduced and restricted power monoids of a finite abelian group have the
/// same sets of lengths and minimal lengths.
pub fn check_restricted_reduced_bridge(g: &GroundMonoid, lmax: usize) -> Result<VerifyReport, VerifyError> {
    pre(g.is_group() && g.is_commutative(), || "bridge check needs an abelian group".into())?;
    pre(g.size() <= BRIDGE_BOUND, || {
        format!("bridge check limited to groups of order <= {BRIDGE_BOUND}, got {}", g.size())
    })?;
    let mut r = ReportBuilder::new("bridge").param("ground", ground_label(g)).param("lmax", lmax);
    let mut sys_m: [BTreeSet<Vec<usize>>; 2] = Default::default();
    let mut sys_l: [BTreeSet<Vec<usize>>; 2] = Default::default();
    for (slot, variant) in [Variant::Reduced, Variant::Restricted].into_iter().enumerate() {
        for x in census_candidates(g, variant) {
            let lm = minimal_length_set(g, x, variant)?;
            let l = length_set_truncated(g, x, variant, lmax)?;
            sys_m[slot].insert(lm.to_vec());
            sys_l[slot].insert(l.to_vec());
            if slot == 0 {
                let lm2 = minimal_length_set(g, x, Variant::Restricted)?;
                let l2 = length_set_truncated(g, x, Variant::Restricted, lmax)?;
                if lm != lm2 {
                    r.fail(format!(
                        "L^m({}) = {} reduced vs {} restricted",
                        g.format_subset(x),
                        lengths_text(&lm.values),
                        lengths_text(&lm2.values)
                    ));
                }
                // truncation markers depend on the search space, not on L
                if l.values != l2.values {
                    r.fail(format!(
                        "L({}) = {} reduced vs {} restricted",
                        g.format_subset(x),
                        lengths_text(&l.values),
                        lengths_text(&l2.values)
                    ));
                }
            }
        }
    }
    let [red_m, res_m] = sys_m;
    let [red_l, res_l] = sys_l;
    if red_m != res_m {
        r.fail("systems of minimal lengths differ".to_string());
    }
    if red_l != res_l {
        r.fail("systems of lengths differ".to_string());
    }
    r.note(format!(
        "{} distinct minimal length sets, {} distinct length sets",
        red_m.len(),
        red_l.len()
    ));
    Ok(r.finish())
}

/// `{1, x}` is an atom exactly when `x^2` is neither `1` nor `x`.
pub fn check_two_element(g: &GroundMonoid) -> Result<VerifyReport, VerifyError> {
    pre(g.is_finite(), || "two-element check needs a finite ground".into())?;
    let mut r = ReportBuilder::new("two-element").param("ground", ground_label(g));
    let one = g.identity();
    let mut atoms = 0;
    for x in g.elements().without(one).iter() {
        let sq = g.mul(x, x).expect("finite ground");
        let expect = sq != one && sq != x;
        let two = Subset::from_elems([one, x]);
        let searched = reduced_decomposition(g, two).is_none();
        let library = is_atom(g, two, Variant::Reduced)?.is_atom;
        if searched != expect || library != expect {
            r.fail(format!(
                "{}: criterion {expect}, search {searched}, is_atom {library}",
                g.format_subset(two)
            ));
        }
        atoms += usize::from(expect);
    }
    r.note(format!("{atoms} of {} two-element sets are atoms", g.size().saturating_sub(1)));
    Ok(r.finish())
}

/// Every `B_h` and `C_l` in range is an atom of the reduced power monoid.
pub fn check_constructions(n: usize) -> Result<VerifyReport, VerifyError> {
    pre(n % 2 == 1 && n >= 5, || format!("constructions need odd n >= 5, got {n}"))?;
    let g = GroundMonoid::cyclic(n).map_err(|e| VerifyError::Precondition(e.to_string()))?;
    let mut r = ReportBuilder::new("constructions").param("n", n);
    let mut count = 0;
    for p in (1..=(n - 1) / 2).step_by(2) {
        for c in [Construction::B, Construction::C] {
            let set = named_construction(c, p, n)?;
            if let Some((y, z)) = reduced_decomposition(&g, set) {
                r.fail(format!(
                    "{} = {} = {} * {}",
                    construction_name(c, p),
                    g.format_subset(set),
                    g.format_subset(y),
                    g.format_subset(z)
                ));
            }
            count += 1;
        }
    }
    r.note(format!("{count} constructions checked"));
    Ok(r.finish())
}

/// NR factorizations are minimal: all atom multisets of length at most
/// `max_len` over `Z/n`.
pub fn check_nr_minimal(n: usize, max_len: usize, bound: usize) -> Result<VerifyReport, VerifyError> {
    pre(n >= 2, || "NR check needs n >= 2".into())?;
    let g = GroundMonoid::cyclic(n).map_err(|e| VerifyError::Precondition(e.to_string()))?;
    let mut r = ReportBuilder::new("nr-minimal").param("n", n).param("max_len", max_len);
    let atoms = parallel_census(&g, Variant::Reduced, bound)?.atoms;
    let (mut words, mut nr_words) = (0usize, 0usize);
    let mut idx: Vec<usize> = Vec::new();
    // nondecreasing index sequences = multisets
    loop {
        if !idx.is_empty() {
            let word: Vec<Subset> = idx.iter().map(|&i| atoms[i]).collect();
            let fw = FactorWord::new(&g, word.clone(), Variant::Reduced)?;
            words += 1;
            if is_nr(&g, &fw)? {
                nr_words += 1;
                let x = fw.product(&g)?;
                let lib = is_minimal(&g, &fw)?;
                let scan = no_proper_subword_reaches(&g, x, &word)?;
                if !lib || !scan {
                    r.fail(format!(
                        "NR word {} not minimal (is_minimal {lib}, subword scan {scan})",
                        word_text(&g, &word)
                    ));
                }
            }
        }
        // advance to the next multiset in graded lexicographic order
        if idx.len() < max_len && !atoms.is_empty() {
            let last = idx.last().copied().unwrap_or(0);
            idx.push(last);
            continue;
        }
        loop {
            match idx.last_mut() {
                None => break,
                Some(i) if *i + 1 < atoms.len() => {
                    *i += 1;
                    break;
                }
                Some(_) => {
                    idx.pop();
                }
            }
        }
        if idx.is_empty() {
            break;
        }
    }
    r.note(format!("{words} words, {nr_words} NR"));
    Ok(r.finish())
}

fn naive_sumset_len(p: usize, a: Subset, b: Subset) -> usize {
    let mut out = Subset::EMPTY;
    for x in a.iter() {
        for y in b.iter() {
            out.insert((x + y) % p);
        }
    }
    out.len()
}

/// `|A + B| >= min(p, |A| + |B| - 1)` in `Z/p`: every pair when `p <= 7`,
/// otherwise `random_pairs` seeded pairs.
pub fn check_cauchy_davenport(p: usize, random_pairs: usize, seed: u64) -> Result<VerifyReport, VerifyError> {
    pre(is_prime(p) && p < 64, || format!("Cauchy-Davenport check needs a prime modulus, got {p}"))?;
    let g = GroundMonoid::cyclic(p).map_err(|e| VerifyError::Precondition(e.to_string()))?;
    let mut r = ReportBuilder::new("cauchy-davenport").param("p", p);
    let full = (1u64 << p) - 1;
    let test = |a: Subset, b: Subset, r: &mut ReportBuilder| -> Result<(), VerifyError> {
        let lib = g.cauchy_davenport_holds(a, b).map_err(AtomError::from)?;
        let bound = p.min(a.len() + b.len() - 1);
        let direct = naive_sumset_len(p, a, b) >= bound;
        if !lib || !direct {
            r.fail(format!("A = {}, B = {}", g.format_subset(a), g.format_subset(b)));
        }
        Ok(())
    };
    let pairs = if p <= 7 {
        for a in 1..=full {
            for b in 1..=full {
                test(Subset::from_bits(a), Subset::from_bits(b), &mut r)?;
            }
        }
        (full * full) as usize
    } else {
        let mut rng = StdRng::seed_from_u64(seed);
        for _ in 0..random_pairs {
            let a = rng.gen_range(1..=full);
            let b = rng.gen_range(1..=full);
            test(Subset::from_bits(a), Subset::from_bits(b), &mut r)?;
        }
        r = r.param("seed", seed);
        random_pairs
    };
    r = r.param("pairs", pairs);
    r.note(format!("{pairs} pairs"));
    Ok(r.finish())
}

/// Looks for identity-containing sets over a non-abelian group whose
/// minimal lengths differ between the reduced and restricted monoids.
/// Reports what it finds and asserts nothing.
pub fn exploratory_strict_inclusion(g: &GroundMonoid, name: &str, max_card: usize) -> Result<VerifyReport, VerifyError> {
    pre(g.is_group() && !g.is_commutative(), || "exploratory scan needs a non-abelian group".into())?;
    pre(g.size() <= EXPLORATORY_BOUND, || {
        format!("exploratory scan limited to order <= {EXPLORATORY_BOUND}")
    })?;
    let mut r = ReportBuilder::new("exploratory")
        .param("ground", name.to_string())
        .param("max_card", max_card)
        .exploratory();
    let (mut scanned, mut skipped, mut differ) = (0, 0, 0);
    for x in census_candidates(g, Variant::Reduced) {
        if x.len() > max_card {
            continue;
        }
        let red = minimal_length_set(g, x, Variant::Reduced);
        let res = minimal_length_set(g, x, Variant::Restricted);
        match (red, res) {
            (Ok(a), Ok(b)) => {
                scanned += 1;
                if a != b {
                    differ += 1;
                    r.note(format!(
                        "{}: reduced {} restricted {}",
                        g.format_subset(x),
                        lengths_text(&a.values),
                        lengths_text(&b.values)
                    ));
                }
            }
            _ => skipped += 1,
        }
    }
    r.note(format!("{scanned} sets scanned, {skipped} skipped, {differ} differ"));
    Ok(r.finish())
}
