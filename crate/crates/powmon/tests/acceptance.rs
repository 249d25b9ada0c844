//! Acceptance criteria. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use powmon::fixtures;
use powmon::verify::{
    check_atomicity_characterization, check_bf_bound_naturals, check_cauchy_davenport, check_hmf_classification,
    check_interval_realization, check_minimal_bound, check_nr_minimal, check_restricted_reduced_bridge, VerifyReport,
};
use powmon_core::atoms::DEFAULT_CENSUS_BOUND;
use powmon_core::{is_atom, minimal_factorizations, minimal_length_set, named_construction, Construction};
use powmon_core::{GroundMonoid, Subset, Variant};

struct Outcome {
    ok: bool,
    detail: String,
}

impl Outcome {
    fn new() -> Self {
        Outcome {
            ok: true,
            detail: String::new(),
        }
    }

    fn require(&mut self, cond: bool, why: impl FnOnce() -> String) {
        if !cond {
            self.ok = false;
            if !self.detail.is_empty() {
                self.detail.push_str("; ");
            }
            self.detail.push_str(&why());
        }
    }

    fn report(&mut self, r: &VerifyReport) {
        let ok = r.passed();
        self.require(ok, || format!("{} {}: {}", r.check, r.params_text(), r.witnesses.join(" / ")));
    }
}

fn cyclic(n: usize) -> GroundMonoid {
    GroundMonoid::cyclic(n).unwrap()
}

fn sum(n: usize, x: Subset, y: Subset) -> Subset {
    let mut out = Subset::EMPTY;
    for a in x.iter() {
        for b in y.iter() {
            out.insert((a + b) % n);
        }
    }
    out
}

// pairwise search over 0-containing Y, Z inside X
fn naive_reduced_atom(n: usize, x: Subset) -> bool {
    let parts: Vec<Subset> = x.without(0).submasks().skip(1).map(|s| s.with(0)).collect();
    x.len() > 1 && !parts.iter().any(|&y| parts.iter().any(|&z| sum(n, y, z) == x))
}

fn criterion_1() -> Outcome {
    let mut o = Outcome::new();
    for n in 2..=13 {
        let g = cyclic(n);
        let r = check_atomicity_characterization(&g, DEFAULT_CENSUS_BOUND).unwrap();
        o.report(&r);
        let atomic_by_criterion = g.atomicity_criterion();
        o.require(atomic_by_criterion == (n % 2 == 1), || format!("criterion wrong for n={n}"));
        if n % 2 == 0 {
            let want = format!("non-factorable {{0,{}}}", n / 2);
            o.require(r.evidence.contains(&want), || format!("n={n}: no witness {{0,{}}}", n / 2));
        }
    }
    o
}

fn criterion_2() -> Outcome {
    let mut o = Outcome::new();
    for n in 2..=20 {
        let g = cyclic(n);
        for x in 1..n {
            let set = Subset::from_elems([0, x]);
            // {0,x} only splits as {0,x} + {0,x}
            let expect = sum(n, set, set) != set;
            let by_rule = (2 * x) % n != 0;
            let got = is_atom(&g, set, Variant::Reduced).unwrap().is_atom;
            o.require(got == expect && expect == by_rule, || format!("{{0,{x}}} mod {n}"));
        }
    }
    o
}

fn criterion_3() -> Outcome {
    let mut o = Outcome::new();
    for n in (5..=17).step_by(2) {
        let g = cyclic(n);
        for p in (1..=(n - 1) / 2).step_by(2) {
            for c in [Construction::B, Construction::C] {
                let set = named_construction(c, p, n).unwrap();
                let lib = is_atom(&g, set, Variant::Reduced).unwrap().is_atom;
                let naive = naive_reduced_atom(n, set);
                o.require(lib && naive, || format!("{c:?}_{p} mod {n}"));
            }
        }
    }
    o
}

fn criterion_4() -> Outcome {
    let mut o = Outcome::new();
    for n in [5usize, 7, 9, 11] {
        let r = check_interval_realization(n, 13).unwrap();
        o.report(&r);
    }
    o
}

fn criterion_5() -> Outcome {
    let mut o = Outcome::new();
    for n in [3usize, 5, 7] {
        let r = check_minimal_bound(&cyclic(n), DEFAULT_CENSUS_BOUND).unwrap();
        o.report(&r);
    }
    let r = check_minimal_bound(&cyclic(3), DEFAULT_CENSUS_BOUND).unwrap();
    o.require(r.evidence.iter().any(|e| e == "max minimal length 2 at {0,1,2}"), || {
        "Z/3 maximum not attained at the full set".into()
    });
    o
}

fn criterion_6() -> Outcome {
    let mut o = Outcome::new();
    for n in [5usize, 7] {
        o.report(&check_nr_minimal(n, 4, DEFAULT_CENSUS_BOUND).unwrap());
    }
    o
}

fn criterion_7() -> Outcome {
    let mut o = Outcome::new();
    let g3 = cyclic(3);
    for bits in [0b011u64, 0b101, 0b111] {
        let x = Subset::from_bits(bits);
        let l = minimal_length_set(&g3, x, Variant::Reduced).unwrap();
        o.require(l.len() == 1, || format!("Z/3: L^m({x}) has {} lengths", l.len()));
    }
    o.report(&check_hmf_classification(&g3, DEFAULT_CENSUS_BOUND).unwrap());

    // not minimally factorial: {0,1}^2 and {0,2}^2 are distinct minimal classes
    let full = g3.elements();
    let m = minimal_factorizations(&g3, full, Variant::Reduced).unwrap();
    for a in [Subset::from_elems([0, 1]), Subset::from_elems([0, 2])] {
        let class: Vec<Subset> = vec![a, a];
        let minimal = sum(3, a, a) == full && a != full;
        let found = m.classes.iter().any(|c| c.atoms() == class.as_slice());
        o.require(minimal && found, || format!("Z/3: class {a}*{a} missing"));
    }

    let g5 = cyclic(5);
    let x4 = named_construction(Construction::X, 4, 5).unwrap();
    let l = minimal_length_set(&g5, x4, Variant::Reduced).unwrap();
    o.require(l.len() >= 2, || format!("Z/5: L^m(X_4) = {:?}", l.to_vec()));
    o.report(&check_hmf_classification(&g5, DEFAULT_CENSUS_BOUND).unwrap());

    let k = fixtures::ground("c3xc3").unwrap();
    let lk = minimal_length_set(&k, k.elements(), Variant::Reduced).unwrap();
    o.require(lk.contains(2) && lk.contains(4), || format!("C3xC3: L^m(K) = {:?}", lk.to_vec()));
    o.report(&check_hmf_classification(&k, DEFAULT_CENSUS_BOUND).unwrap());
    o
}

fn criterion_8() -> Outcome {
    let mut o = Outcome::new();
    o.report(&check_bf_bound_naturals(12, 6).unwrap());
    o
}

fn criterion_9() -> Outcome {
    let mut o = Outcome::new();
    for n in [3usize, 5, 7] {
        o.report(&check_restricted_reduced_bridge(&cyclic(n), 2 * n).unwrap());
    }
    o
}

fn criterion_10() -> Outcome {
    let mut o = Outcome::new();
    for p in [5usize, 7] {
        // exhaustive count of nonempty pairs
        let r = check_cauchy_davenport(p, 0, 0).unwrap();
        let pairs = ((1u64 << p) - 1).pow(2);
        o.require(r.params["pairs"] == pairs, || format!("p={p}: not exhaustive"));
        o.report(&r);
    }
    let r = check_cauchy_davenport(11, 1_000_000, 0x5eed).unwrap();
    o.report(&r);
    o.require(r.params["pairs"] == 1_000_000, || "p=11: wrong sample size".into());
    o
}

type Criterion = (usize, &'static str, u64, fn() -> Outcome);

const CRITERIA: [Criterion; 10] = [
    (1, "atomic exactly for odd n, Z/2..Z/13", 60, criterion_1),
    (2, "two-element atom criterion, n <= 20", 10, criterion_2),
    (3, "B_h and C_l are atoms, odd n in 5..17", 30, criterion_3),
    (4, "L^m(X_k) = [2,k] with case-split NR witness, n in 5..11", 600, criterion_4),
    (5, "max L^m(X) <= |X| - 1 over Z/3, Z/5, Z/7", 300, criterion_5),
    (6, "NR words of length <= 4 are minimal over Z/5, Z/7", 300, criterion_6),
    (7, "HmF classification: Z/3, Z/5, C3xC3", 1800, criterion_7),
    (8, "naturals: lengths <= |X|^2 - |X|, all factorizations minimal", 300, criterion_8),
    (9, "reduced/restricted length systems agree over Z/3, Z/5, Z/7", 600, criterion_9),
    (10, "Cauchy-Davenport over Z/5, Z/7, Z/11", 300, criterion_10),
];

fn main() -> ExitCode {
    let mut failed = 0;
    for (id, name, limit, run) in CRITERIA {
        let start = Instant::now();
        let mut outcome = run();
        let elapsed = start.elapsed();
        outcome.require(elapsed <= Duration::from_secs(limit), || {
            format!("took {:.1} s, limit {limit} s", elapsed.as_secs_f64())
        });
        let tag = if outcome.ok { "PASS" } else { "FAIL" };
        println!("{tag} criterion {id:>2}: {name} ({:.2} s)", elapsed.as_secs_f64());
        if !outcome.ok {
            println!("     {}", outcome.detail);
            failed += 1;
        }
    }
    println!("{} of {} criteria passed", CRITERIA.len() - failed, CRITERIA.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
