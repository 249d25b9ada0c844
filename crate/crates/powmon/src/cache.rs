//! On-disk cache of atom tables, one JSON file per (ground kind, n, variant).
//!
//! Table grounds are not cached: two different tables of the same size would
//! share a key.

use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use powmon_core::{AtomError, AtomTable, GroundKind, GroundMonoid, Variant};

use crate::export::{atom_table_json, parse_atom_table};
use crate::parallel::parallel_census;

pub const CACHE_DIR_ENV: &str = "POWMON_CACHE_DIR";

#[derive(Debug, Clone)]
pub struct AtomCache {
    root: PathBuf,
}

impl AtomCache {
    pub fn new(root: impl Into<PathBuf>) -> Self {
        AtomCache { root: root.into() }
    }

    /// The explicit directory if given, else the environment override.
    pub fn resolve(explicit: Option<&Path>) -> Option<Self> {
        explicit
            .map(Path::to_path_buf)
            .or_else(|| std::env::var_os(CACHE_DIR_ENV).map(PathBuf::from))
            .map(AtomCache::new)
    }

    pub fn root(&self) -> &Path {
        &self.root
    }

    pub fn path_for(&self, kind: GroundKind, variant: Variant) -> Option<PathBuf> {
        let stem = match kind {
            GroundKind::Cyclic(n) => format!("cyclic-{n}"),
            GroundKind::NaturalSegment(cap) => format!("natural-{cap}"),
            GroundKind::Table(_) => return None,
        };
        Some(self.root.join(format!("{stem}-{}.json", variant.name())))
    }

    /// A cached table, if present and compatible. Unreadable or stale files
    /// are ignored.
    pub fn load(&self, g: &GroundMonoid, variant: Variant) -> Option<AtomTable> {
        let path = self.path_for(g.kind(), variant)?;
        let text = fs::read_to_string(path).ok()?;
        parse_atom_table(g, variant, &text).ok()
    }

    pub fn store(&self, g: &GroundMonoid, table: &AtomTable) -> io::Result<Option<PathBuf>> {
        let Some(path) = self.path_for(g.kind(), table.variant) else {
            return Ok(None);
        };
        fs::create_dir_all(&self.root)?;
        let tmp = path.with_extension("json.tmp");
        fs::write(&tmp, atom_table_json(g, table))?;
        fs::rename(&tmp, &path)?;
        Ok(Some(path))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CacheOutcome {
    Hit,
    Miss,
    Disabled,
}

/// Census through the cache: a hit is returned as stored, a miss is
/// computed and written back.
pub fn cached_census(
    cache: Option<&AtomCache>,
    g: &GroundMonoid,
    variant: Variant,
    bound: usize,
) -> Result<(AtomTable, CacheOutcome), AtomError> {
    powmon_core::atoms::check_census_bound(g, bound)?;
    let variant = if g.is_finite() { variant } else { Variant::Reduced };
    let Some(cache) = cache else {
        return Ok((parallel_census(g, variant, bound)?, CacheOutcome::Disabled));
    };
    if let Some(t) = cache.load(g, variant) {
        return Ok((t, CacheOutcome::Hit));
    }
    let table = parallel_census(g, variant, bound)?;
    // a failed write only costs a recomputation next time
    let _ = cache.store(g, &table);
    Ok((table, CacheOutcome::Miss))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn warm_cache_is_byte_identical() {
        let dir = tempfile::tempdir().unwrap();
        let cache = AtomCache::new(dir.path());
        let g = GroundMonoid::cyclic(9).unwrap();
        let (cold, o1) = cached_census(Some(&cache), &g, Variant::Reduced, 18).unwrap();
        assert_eq!(o1, CacheOutcome::Miss);
        let path = cache.path_for(g.kind(), Variant::Reduced).unwrap();
        let first = fs::read(&path).unwrap();
        let (warm, o2) = cached_census(Some(&cache), &g, Variant::Reduced, 18).unwrap();
        assert_eq!(o2, CacheOutcome::Hit);
        assert_eq!(cold, warm);
        assert_eq!(atom_table_json(&g, &warm).into_bytes(), first);
    }

    #[test]
    fn corrupt_files_are_recomputed() {
        let dir = tempfile::tempdir().unwrap();
        let cache = AtomCache::new(dir.path());
        let g = GroundMonoid::cyclic(5).unwrap();
        let path = cache.path_for(g.kind(), Variant::Reduced).unwrap();
        fs::write(&path, "{ not json").unwrap();
        let (t, o) = cached_census(Some(&cache), &g, Variant::Reduced, 18).unwrap();
        assert_eq!(o, CacheOutcome::Miss);
        assert_eq!(t.atoms.len(), 4);
        assert!(cache.load(&g, Variant::Reduced).is_some());
    }

    #[test]
    fn table_grounds_bypass_the_cache() {
        let cache = AtomCache::new("/nonexistent");
        assert!(cache.path_for(GroundKind::Table(4), Variant::Reduced).is_none());
    }
}
