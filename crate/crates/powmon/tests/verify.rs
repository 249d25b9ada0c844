use powmon::parallel::with_workers;
use powmon::verify::*;
use powmon_core::atoms::DEFAULT_CENSUS_BOUND;
use powmon_core::{length_set_truncated, named_construction, Construction, GroundMonoid, Subset, Variant};

fn cyclic(n: usize) -> GroundMonoid {
    GroundMonoid::cyclic(n).unwrap()
}

#[test]
fn atomicity_examples() {
    for (n, witness) in [(4, Some("{0,2}")), (2, Some("{0,1}")), (5, None)] {
        let r = check_atomicity_characterization(&cyclic(n), DEFAULT_CENSUS_BOUND).unwrap();
        assert_eq!(r.verdict, Verdict::Pass, "{r:?}");
        if let Some(w) = witness {
            assert!(r.evidence.contains(&format!("non-factorable {w}")));
        }
    }
}

#[test]
fn unbounded_examples() {
    let r = check_unbounded_lengths(5, 8).unwrap();
    assert_eq!(r.verdict, Verdict::Pass);
    let l = length_set_truncated(&cyclic(5), cyclic(5).elements(), Variant::Reduced, 8).unwrap();
    assert!((4..=8).all(|i| l.contains(i)));
    assert_eq!(check_unbounded_lengths(3, 6).unwrap().verdict, Verdict::Pass);
    assert!(check_unbounded_lengths(4, 8).is_err());
}

#[test]
fn preconditions_are_enforced() {
    assert!(matches!(check_interval_realization(6, 13), Err(VerifyError::Precondition(_))));
    assert!(matches!(check_interval_realization(3, 13), Err(VerifyError::Precondition(_))));
    assert!(matches!(check_interval_realization(15, 13), Err(VerifyError::Precondition(_))));
    assert!(check_cauchy_davenport(9, 10, 1).is_err());
    assert!(check_bf_bound_naturals(4, 6).is_err());
    assert!(check_restricted_reduced_bridge(&cyclic(11), 22).is_err());
    let s3 = powmon::fixtures::ground("s3").unwrap();
    assert!(check_restricted_reduced_bridge(&s3, 12).is_err());
    assert!(check_minimal_bound(&cyclic(20), DEFAULT_CENSUS_BOUND).is_err());
}

#[test]
fn interval_witnesses_replay() {
    // the witnesses reported by the suite are reproducible from public ops
    let g = cyclic(7);
    let b3 = named_construction(Construction::B, 3, 7).unwrap();
    let c1 = named_construction(Construction::C, 1, 7).unwrap();
    assert_eq!(g.product(b3, c1).unwrap(), Subset::from_elems([0, 1, 2, 3, 5]));
    let r = check_interval_realization(7, 13).unwrap();
    assert_eq!(r.verdict, Verdict::Fail);
    assert!(r.witnesses.iter().any(|w| w.contains("X_5 = B_3 + C_1")));
    // the claimed conclusion itself holds
    assert!(r.evidence.iter().any(|e| e.starts_with("X_5 has the 2-atom NR factorization")));
}

#[test]
fn hmf_on_non_atomic_and_fixture_grounds() {
    let r = check_hmf_classification(&cyclic(4), DEFAULT_CENSUS_BOUND).unwrap();
    assert_eq!(r.verdict, Verdict::Pass);
    let k = powmon::fixtures::ground("c3xc3").unwrap();
    let r = check_hmf_classification(&k, DEFAULT_CENSUS_BOUND).unwrap();
    assert!(r.evidence.iter().any(|e| e == "L^m({0,1,2,3,4,5,6,7,8}) = {2,3,4}"));
}

#[test]
fn two_element_on_fixtures() {
    for name in powmon::fixtures::NAMES {
        let g = powmon::fixtures::ground(name).unwrap();
        assert_eq!(check_two_element(&g).unwrap().verdict, Verdict::Pass, "{name}");
    }
}

#[test]
fn reports_do_not_depend_on_worker_count() {
    let opts = SuiteOptions::default();
    let suites = [Suite::Atomicity, Suite::Hmf, Suite::Interval, Suite::Constructions];
    let strip = |rs: Vec<VerifyReport>| -> Vec<_> {
        rs.into_iter()
            .map(|r| (r.check, r.params, r.verdict, r.witnesses, r.evidence))
            .collect()
    };
    let one = strip(with_workers(Some(1), || run_suites(&suites, &opts)));
    let three = strip(with_workers(Some(3), || run_suites(&suites, &opts)));
    assert_eq!(one, three);
}

#[test]
fn suite_names_round_trip() {
    for s in Suite::ALL.into_iter().chain([Suite::Exploratory]) {
        assert_eq!(Suite::parse(s.name()), Some(s));
    }
    assert_eq!(Suite::parse("bogus"), None);
}

#[test]
fn range_override_filters_by_domain() {
    let opts = SuiteOptions {
        n_range: Some(4..=9),
        ..SuiteOptions::default()
    };
    assert_eq!(plan(Suite::Interval, &opts), vec![Job::Interval(5), Job::Interval(7), Job::Interval(9)]);
    assert_eq!(
        plan(Suite::CauchyDavenport, &opts),
        vec![Job::CauchyDavenport(5), Job::CauchyDavenport(7)]
    );
}

#[test]
fn exploratory_reports_without_asserting() {
    let s3 = powmon::fixtures::ground("s3").unwrap();
    let r = exploratory_strict_inclusion(&s3, "s3", 6).unwrap();
    assert_eq!(r.verdict, Verdict::Info);
    assert!(r.passed());
}
