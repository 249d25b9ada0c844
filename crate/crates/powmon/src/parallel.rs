//! Parallel atom census. Candidates are split into contiguous chunks, each
//! worker filters its chunk, and the merged list is put in canonical order,
//! so the result does not depend on scheduling or the number of workers.

use powmon_core::atoms::{census_candidates, check_census_bound, sort_canonical};
use powmon_core::{is_atom, AtomError, AtomTable, GroundMonoid, Variant};
use rayon::prelude::*;

const CHUNK: usize = 64;

pub fn parallel_census(g: &GroundMonoid, variant: Variant, bound: usize) -> Result<AtomTable, AtomError> {
    check_census_bound(g, bound)?;
    let candidates = census_candidates(g, variant);
    let chunks: Vec<Vec<_>> = candidates
        .par_chunks(CHUNK)
        .map(|chunk| {
            let mut keep = Vec::new();
            for &x in chunk {
                if is_atom(g, x, variant)?.is_atom {
                    keep.push(x);
                }
            }
            Ok(keep)
        })
        .collect::<Result<_, AtomError>>()?;
    let mut atoms: Vec<_> = chunks.into_iter().flatten().collect();
    sort_canonical(&mut atoms);
    let variant = if g.is_finite() { variant } else { Variant::Reduced };
    Ok(AtomTable {
        ground: g.kind(),
        variant,
        atoms,
    })
}

/// Runs `f` on a pool of `workers` threads (all cores when `None`).
pub fn with_workers<T: Send>(workers: Option<usize>, f: impl FnOnce() -> T + Send) -> T {
    match workers {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build()
            .expect("thread pool")
            .install(f),
        None => f(),
    }
}
