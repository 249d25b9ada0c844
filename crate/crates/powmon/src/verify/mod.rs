//! Verification suites: each suite expands into a grid of independent
//! checks that run in parallel and report in plan order.

mod checks;
mod report;

use std::ops::RangeInclusive;

use powmon_core::atoms::DEFAULT_CENSUS_BOUND;
use powmon_core::powset::is_prime;
use powmon_core::GroundMonoid;
use rayon::prelude::*;

pub use checks::*;
pub use report::{summary_table, Verdict, VerifyReport};

use report::ReportBuilder;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Atomicity,
    MinimalBound,
    Hmf,
    Interval,
    Unbounded,
    BfNaturals,
    Bridge,
    TwoElement,
    Constructions,
    NrMinimal,
    CauchyDavenport,
    Exploratory,
}

impl Suite {
    /// Suites run by `--all`; the exploratory scan only runs on request.
    pub const ALL: [Suite; 11] = [
        Suite::Atomicity,
        Suite::TwoElement,
        Suite::Constructions,
        Suite::MinimalBound,
        Suite::Hmf,
        Suite::Interval,
        Suite::Unbounded,
        Suite::BfNaturals,
        Suite::Bridge,
        Suite::NrMinimal,
        Suite::CauchyDavenport,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Atomicity => "atomicity",
            Suite::MinimalBound => "minimal-bound",
            Suite::Hmf => "hmf",
            Suite::Interval => "interval",
            Suite::Unbounded => "unbounded",
            Suite::BfNaturals => "bf-naturals",
            Suite::Bridge => "bridge",
            Suite::TwoElement => "two-element",
            Suite::Constructions => "constructions",
            Suite::NrMinimal => "nr-minimal",
            Suite::CauchyDavenport => "cauchy-davenport",
            Suite::Exploratory => "exploratory",
        }
    }

    pub fn parse(name: &str) -> Option<Suite> {
        Suite::ALL
            .into_iter()
            .chain([Suite::Exploratory])
            .find(|s| s.name() == name)
    }
}

#[derive(Debug, Clone)]
pub struct SuiteOptions {
    /// Overrides the modulus grid of suites parameterized by `n`.
    pub n_range: Option<RangeInclusive<usize>>,
    /// Overrides the default `2n` length bound.
    pub lmax: Option<usize>,
    pub census_bound: usize,
    pub random_pairs: usize,
    pub seed: u64,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            n_range: None,
            lmax: None,
            census_bound: DEFAULT_CENSUS_BOUND,
            random_pairs: 1_000_000,
            seed: 0x5eed,
        }
    }
}

/// One planned check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Job {
    Atomicity(GroundRef),
    MinimalBound(GroundRef),
    Hmf(GroundRef),
    Interval(usize),
    Unbounded { n: usize, lmax: usize },
    BfNaturals { cap: usize, max_elem: usize },
    Bridge { ground: GroundRef, lmax: usize },
    TwoElement(GroundRef),
    Constructions(usize),
    NrMinimal(usize),
    CauchyDavenport(usize),
    Exploratory(GroundRef),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroundRef {
    Cyclic(usize),
    Fixture(&'static str),
}

impl GroundRef {
    pub fn build(&self) -> GroundMonoid {
        match self {
            GroundRef::Cyclic(n) => GroundMonoid::cyclic(*n).expect("planned moduli are valid"),
            GroundRef::Fixture(name) => crate::fixtures::ground(name).expect("known fixture"),
        }
    }

    fn label(&self) -> String {
        match self {
            GroundRef::Cyclic(n) => format!("Z/{n}"),
            GroundRef::Fixture(name) => (*name).to_string(),
        }
    }

    fn size(&self) -> usize {
        match self {
            GroundRef::Cyclic(n) => *n,
            GroundRef::Fixture(_) => self.build().size(),
        }
    }
}

fn grid(opts: &SuiteOptions, default: RangeInclusive<usize>, keep: impl Fn(usize) -> bool) -> Vec<usize> {
    opts.n_range.clone().unwrap_or(default).filter(|&n| keep(n)).collect()
}

fn cyclic_refs(ns: Vec<usize>) -> Vec<GroundRef> {
    ns.into_iter().map(GroundRef::Cyclic).collect()
}

/// Expands a suite into checks. With `--n` given, only cyclic grounds in
/// that range are used and moduli outside a check's domain are skipped.
pub fn plan(suite: Suite, opts: &SuiteOptions) -> Vec<Job> {
    let fixtures = |names: &[&'static str]| -> Vec<GroundRef> {
        if opts.n_range.is_some() {
            Vec::new()
        } else {
            names.iter().map(|&n| GroundRef::Fixture(n)).collect()
        }
    };
    let lmax = |n: usize| opts.lmax.unwrap_or(2 * n);
    let odd = |n: usize| n % 2 == 1;
    match suite {
        Suite::Atomicity => {
            let mut g = cyclic_refs(grid(opts, 1..=13, |_| true));
            g.extend(fixtures(&["klein", "c3xc3", "s3", "d4", "q8"]));
            g.into_iter().map(Job::Atomicity).collect()
        }
        Suite::TwoElement => {
            let mut g = cyclic_refs(grid(opts, 1..=20, |_| true));
            g.extend(fixtures(&crate::fixtures::NAMES));
            g.into_iter().map(Job::TwoElement).collect()
        }
        Suite::Constructions => grid(opts, 5..=17, |n| odd(n) && n >= 5)
            .into_iter()
            .map(Job::Constructions)
            .collect(),
        Suite::MinimalBound => cyclic_refs(grid(opts, 3..=7, |n| odd(n) && n >= 3))
            .into_iter()
            .map(Job::MinimalBound)
            .collect(),
        Suite::Hmf => {
            let mut g = cyclic_refs(grid(opts, 1..=7, odd));
            g.extend(fixtures(&["c3xc3"]));
            g.into_iter().map(Job::Hmf).collect()
        }
        Suite::Interval => grid(opts, 5..=INTERVAL_BOUND, |n| odd(n) && (5..=INTERVAL_BOUND).contains(&n))
            .into_iter()
            .map(Job::Interval)
            .collect(),
        Suite::Unbounded => grid(opts, 3..=11, |n| odd(n) && n >= 3)
            .into_iter()
            .filter(|&n| lmax(n) >= n)
            .map(|n| Job::Unbounded { n, lmax: lmax(n) })
            .collect(),
        Suite::BfNaturals => vec![Job::BfNaturals { cap: 12, max_elem: 6 }],
        Suite::Bridge => {
            let mut g = cyclic_refs(grid(opts, 3..=7, |n| odd(n) && n <= BRIDGE_BOUND));
            g.extend(fixtures(&["klein", "c3xc3"]));
            g.into_iter()
                .map(|ground| {
                    let lmax = lmax(ground.size());
                    Job::Bridge { ground, lmax }
                })
                .collect()
        }
        Suite::NrMinimal => grid(opts, 5..=7, |n| odd(n) && n >= 5)
            .into_iter()
            .map(Job::NrMinimal)
            .collect(),
        Suite::CauchyDavenport => grid(opts, 5..=11, |p| is_prime(p) && p >= 5)
            .into_iter()
            .map(Job::CauchyDavenport)
            .collect(),
        Suite::Exploratory => fixtures(&["s3", "d4", "q8", "d6", "a4"])
            .into_iter()
            .map(Job::Exploratory)
            .collect(),
    }
}

/// Largest subset size scanned by the exploratory check over groups of
/// order 12; smaller groups are scanned completely.
pub const EXPLORATORY_MAX_CARD: usize = 6;

pub fn run_job(job: &Job, opts: &SuiteOptions) -> VerifyReport {
    let bound = opts.census_bound;
    let (name, result) = match job {
        Job::Atomicity(g) => ("atomicity", check_atomicity_characterization(&g.build(), bound)),
        Job::MinimalBound(g) => ("minimal-bound", check_minimal_bound(&g.build(), bound)),
        Job::Hmf(g) => ("hmf", check_hmf_classification(&g.build(), bound)),
        Job::Interval(n) => ("interval", check_interval_realization(*n, INTERVAL_BOUND)),
        Job::Unbounded { n, lmax } => ("unbounded", check_unbounded_lengths(*n, *lmax)),
        Job::BfNaturals { cap, max_elem } => ("bf-naturals", check_bf_bound_naturals(*cap, *max_elem)),
        Job::Bridge { ground, lmax } => ("bridge", check_restricted_reduced_bridge(&ground.build(), *lmax)),
        Job::TwoElement(g) => ("two-element", check_two_element(&g.build())),
        Job::Constructions(n) => ("constructions", check_constructions(*n)),
        Job::NrMinimal(n) => ("nr-minimal", check_nr_minimal(*n, 4, bound)),
        Job::CauchyDavenport(p) => (
            "cauchy-davenport",
            check_cauchy_davenport(*p, opts.random_pairs, opts.seed),
        ),
        Job::Exploratory(g) => {
            let ground = g.build();
            let card = if ground.size() <= 8 { ground.size() } else { EXPLORATORY_MAX_CARD };
            ("exploratory", exploratory_strict_inclusion(&ground, &g.label(), card))
        }
    };
    let mut report = result.unwrap_or_else(|e| {
        let mut r = ReportBuilder::new(name);
        r.fail(format!("error: {e}"));
        r.finish()
    });
    // fixtures are reported by name
    if let Job::Atomicity(g) | Job::MinimalBound(g) | Job::Hmf(g) | Job::TwoElement(g) | Job::Bridge { ground: g, .. } =
        job
    {
        report.params.insert("ground".into(), g.label().into());
    }
    report
}

/// Runs the jobs in parallel; reports come back in job order.
pub fn run_jobs(jobs: &[Job], opts: &SuiteOptions) -> Vec<VerifyReport> {
    jobs.par_iter().map(|j| run_job(j, opts)).collect()
}

pub fn run_suites(suites: &[Suite], opts: &SuiteOptions) -> Vec<VerifyReport> {
    let jobs: Vec<Job> = suites.iter().flat_map(|&s| plan(s, opts)).collect();
    run_jobs(&jobs, opts)
}
