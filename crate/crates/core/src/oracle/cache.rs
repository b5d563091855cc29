//! On-disk memo of Betti tables, content-addressed by the canonical ideal
//! encoding and the field.

use std::fs;
use std::path::{Path, PathBuf};

use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::ideal::SquareFreeIdeal;

use super::betti::BettiTable;
use super::homology::FieldSpec;

/// Environment variable naming the default cache directory.
pub const CACHE_ENV: &str = "PATH_IDEALS_CACHE";

#[derive(Clone, Debug)]
pub struct DiskCache {
    dir: PathBuf,
}

impl DiskCache {
    /// `None` when the directory does not exist: caching is then disabled.
    pub fn open(dir: impl Into<PathBuf>) -> Option<Self> {
        let dir = dir.into();
        if dir.is_dir() {
            Some(DiskCache { dir })
        } else {
            log::info!("cache directory {} does not exist; caching disabled", dir.display());
            None
        }
    }

    pub fn from_env() -> Option<Self> {
        std::env::var_os(CACHE_ENV).and_then(|d| Self::open(PathBuf::from(d)))
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn key(i: &SquareFreeIdeal, field: FieldSpec) -> String {
        let mut h = Sha256::new();
        h.update(i.canonical_key().as_bytes());
        h.update(b"|");
        h.update(field.to_string().as_bytes());
        hex::encode(h.finalize())
    }

    fn path(&self, i: &SquareFreeIdeal, field: FieldSpec) -> PathBuf {
        self.dir.join(format!("{}.json", Self::key(i, field)))
    }

    /// A stored table, or `None` on a miss. Unreadable entries are treated as
    /// misses.
    pub fn get(&self, i: &SquareFreeIdeal, field: FieldSpec) -> Option<BettiTable> {
        let path = self.path(i, field);
        let text = fs::read_to_string(&path).ok()?;
        match serde_json::from_str::<CacheEntry>(&text) {
            Ok(e) if e.ideal == i.canonical_key() && e.table.field() == field => Some(e.table),
            _ => {
                log::warn!("ignoring malformed cache entry {}", path.display());
                None
            }
        }
    }

    pub fn put(&self, i: &SquareFreeIdeal, table: &BettiTable) -> Result<()> {
        let path = self.path(i, table.field());
        let entry = CacheEntry {
            ideal: i.canonical_key(),
            table: table.clone(),
        };
        let tmp = path.with_extension("tmp");
        fs::write(&tmp, serde_json::to_vec(&entry)?).map_err(|e| Error::io(&tmp, e))?;
        fs::rename(&tmp, &path).map_err(|e| Error::io(&path, e))
    }
}

#[derive(serde::Serialize, serde::Deserialize)]
struct CacheEntry {
    ideal: String,
    table: BettiTable,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::betti::betti_table;

    #[test]
    fn roundtrip_and_disabled() {
        assert!(DiskCache::open("/nonexistent/path-ideals-cache").is_none());
        let dir = tempfile::tempdir().unwrap();
        let cache = DiskCache::open(dir.path()).unwrap();
        let i = SquareFreeIdeal::new(&["x", "y", "z"], &[vec!["x", "y"], vec!["y", "z"]]).unwrap();
        assert!(cache.get(&i, FieldSpec::GF2).is_none());
        let b = betti_table(&i, FieldSpec::GF2).unwrap();
        cache.put(&i, &b).unwrap();
        assert_eq!(cache.get(&i, FieldSpec::GF2), Some(b));
        assert!(cache.get(&i, FieldSpec::Rational).is_none());
        assert_ne!(
            DiskCache::key(&i, FieldSpec::GF2),
            DiskCache::key(&i, FieldSpec::Rational)
        );
    }
}
