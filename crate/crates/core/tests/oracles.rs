//! Brute-force reference computations compared against the library.

use std::collections::BTreeSet;

use powmon_core::{atom_census, is_atom, minimal_length_set, GroundMonoid, Subset, Variant};

fn sum(n: usize, x: Subset, y: Subset) -> Subset {
    let mut out = Subset::EMPTY;
    for a in x.iter() {
        for b in y.iter() {
            out.insert((a + b) % n);
        }
    }
    out
}

fn zero_sets(n: usize) -> Vec<Subset> {
    (0..(1u64 << (n - 1))).map(|b| Subset::from_bits(b << 1).with(0)).collect()
}

// atoms of the reduced monoid by trying every pair of non-units
fn naive_atoms(n: usize) -> Vec<Subset> {
    let sets = zero_sets(n);
    let mut decomposable = BTreeSet::new();
    for &y in &sets[1..] {
        for &z in &sets[1..] {
            decomposable.insert(sum(n, y, z));
        }
    }
    sets[1..].iter().copied().filter(|x| !decomposable.contains(x)).collect()
}

// lengths of all factorizations of x by at most `lmax` atoms inside x,
// together with a flag per length saying whether some such word is minimal
fn naive_minimal_lengths(n: usize, x: Subset, atoms: &[Subset]) -> BTreeSet<usize> {
    let inside: Vec<Subset> = atoms.iter().copied().filter(|a| a.is_subset(x)).collect();
    let mut out = BTreeSet::new();
    let mut word = Vec::new();
    fn rec(
        n: usize,
        x: Subset,
        inside: &[Subset],
        start: usize,
        word: &mut Vec<Subset>,
        out: &mut BTreeSet<usize>,
    ) {
        let p = word.iter().fold(Subset::singleton(0), |acc, &a| sum(n, acc, a));
        if !word.is_empty() && p == x && minimal(n, x, word) {
            out.insert(word.len());
        }
        if word.len() + 1 >= x.len() {
            return;
        }
        for i in start..inside.len() {
            word.push(inside[i]);
            rec(n, x, inside, i, word, out);
            word.pop();
        }
    }
    rec(n, x, &inside, 0, &mut word, &mut out);
    out
}

// no proper sub-multiset has product x
fn minimal(n: usize, x: Subset, word: &[Subset]) -> bool {
    let k = word.len();
    (1..(1u32 << k) - 1).all(|mask| {
        let p = (0..k)
            .filter(|i| mask & (1 << i) != 0)
            .fold(Subset::singleton(0), |acc, i| sum(n, acc, word[i]));
        p != x
    })
}

#[test]
fn census_matches_pairwise_search() {
    for n in 1..=9 {
        let g = GroundMonoid::cyclic(n).unwrap();
        let table = atom_census(&g, Variant::Reduced, 18).unwrap();
        let mut got = table.atoms.clone();
        got.sort();
        assert_eq!(got, naive_atoms(n), "n = {n}");
    }
}

#[test]
fn restricted_atoms_match_pairwise_search() {
    for n in 2..=7 {
        let g = GroundMonoid::cyclic(n).unwrap();
        let all: Vec<Subset> = (1..(1u64 << n)).map(Subset::from_bits).collect();
        let mut decomposable = BTreeSet::new();
        for &y in all.iter().filter(|s| s.len() > 1) {
            for &z in all.iter().filter(|s| s.len() > 1) {
                decomposable.insert(sum(n, y, z));
            }
        }
        for &x in &all {
            let expect = x.len() > 1 && !decomposable.contains(&x);
            assert_eq!(is_atom(&g, x, Variant::Restricted).unwrap().is_atom, expect, "{x:?} mod {n}");
        }
    }
}

#[test]
fn minimal_lengths_match_exhaustive_words() {
    for n in [3usize, 5, 7] {
        let g = GroundMonoid::cyclic(n).unwrap();
        let atoms = naive_atoms(n);
        for x in zero_sets(n).into_iter().filter(|x| x.len() > 1 && x.len() <= 6) {
            let got: BTreeSet<usize> = minimal_length_set(&g, x, Variant::Reduced).unwrap().values;
            assert_eq!(got, naive_minimal_lengths(n, x, &atoms), "{x:?} mod {n}");
        }
    }
}

#[test]
fn frozen_atom_counts() {
    // computed by the pairwise search above
    let counts: Vec<usize> = (1..=9).map(|n| naive_atoms(n).len()).collect();
    for (i, &c) in counts.iter().enumerate() {
        let g = GroundMonoid::cyclic(i + 1).unwrap();
        assert_eq!(atom_census(&g, Variant::Reduced, 18).unwrap().atoms.len(), c);
    }
    assert_eq!(counts[4], 4);
    assert_eq!(counts[6], 20);
}
