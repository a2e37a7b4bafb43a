//! On-disk cache of enumerated groups, keyed by a hash of the Coxeter matrix.

use std::fs;
use std::path::{Path, PathBuf};

use coxdesc_core::coxeter::{CoxeterSpec, CoxeterSystem};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{CliError, CliResult};

pub const CACHE_ENV: &str = "COXDESC_CACHE";
pub const DEFAULT_CACHE_DIR: &str = ".coxdesc-cache";
const CACHE_VERSION: u32 = 1;

#[derive(Serialize, Deserialize)]
struct StoredGroup {
    version: u32,
    matrix: Vec<Vec<u32>>,
    root_positive: Vec<bool>,
    perms: Vec<u16>,
    right_mul: Vec<u32>,
}

pub fn spec_key(spec: &CoxeterSpec) -> String {
    let mut h = Sha256::new();
    h.update(format!("coxdesc-group-v{CACHE_VERSION}\n"));
    for row in spec.rows() {
        let line: Vec<String> = row.iter().map(u32::to_string).collect();
        h.update(line.join(","));
        h.update("\n");
    }
    hex::encode(h.finalize())
}

#[derive(Clone, Debug)]
pub struct GroupCache {
    dir: Option<PathBuf>,
}

impl GroupCache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        GroupCache { dir: Some(dir.into()) }
    }

    pub fn disabled() -> Self {
        GroupCache { dir: None }
    }

    /// `$COXDESC_CACHE`, or `.coxdesc-cache` in the working directory.
    pub fn from_env() -> Self {
        match std::env::var_os(CACHE_ENV) {
            Some(d) if d.is_empty() => Self::disabled(),
            Some(d) => Self::new(d),
            None => Self::new(DEFAULT_CACHE_DIR),
        }
    }

    pub fn dir(&self) -> Option<&Path> {
        self.dir.as_deref()
    }

    fn path_for(&self, spec: &CoxeterSpec) -> Option<PathBuf> {
        self.dir.as_ref().map(|d| d.join(format!("{}.json", spec_key(spec))))
    }

    /// Loads the group if a valid entry exists, otherwise enumerates it and
    /// writes the entry. Unreadable or stale entries are rebuilt.
    pub fn load_or_build(&self, spec: &CoxeterSpec) -> CliResult<CoxeterSystem> {
        if let Some(path) = self.path_for(spec) {
            if let Some(group) = Self::read(&path, spec) {
                return Ok(group);
            }
            let group = CoxeterSystem::build(spec)?;
            if let Err(e) = self.write(&path, spec, &group) {
                eprintln!("warning: could not write group cache: {e}");
            }
            Ok(group)
        } else {
            Ok(CoxeterSystem::build(spec)?)
        }
    }

    fn read(path: &Path, spec: &CoxeterSpec) -> Option<CoxeterSystem> {
        let text = fs::read_to_string(path).ok()?;
        let stored: StoredGroup = serde_json::from_str(&text).ok()?;
        if stored.version != CACHE_VERSION || stored.matrix != spec.rows() {
            return None;
        }
        CoxeterSystem::from_parts(spec.clone(), stored.root_positive, stored.perms, stored.right_mul).ok()
    }

    fn write(&self, path: &Path, spec: &CoxeterSpec, group: &CoxeterSystem) -> CliResult<()> {
        let dir = path.parent().expect("cache entries live in a directory");
        fs::create_dir_all(dir).map_err(|e| CliError::io(dir, e))?;
        let stored = StoredGroup {
            version: CACHE_VERSION,
            matrix: spec.rows(),
            root_positive: group.root_positive().to_vec(),
            perms: group.all_perms().to_vec(),
            right_mul: group.right_mul_table().to_vec(),
        };
        let text = serde_json::to_string(&stored).expect("plain data serializes");
        let tmp = path.with_extension("json.tmp");
        fs::write(&tmp, text).map_err(|e| CliError::io(&tmp, e))?;
        fs::rename(&tmp, path).map_err(|e| CliError::io(path, e))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let cache = GroupCache::new(dir.path());
        let spec = CoxeterSpec::named("B3").unwrap();
        let built = cache.load_or_build(&spec).unwrap();
        let path = cache.path_for(&spec).unwrap();
        assert!(path.exists());
        let loaded = GroupCache::read(&path, &spec).unwrap();
        assert_eq!(loaded.order(), built.order());
        assert_eq!(loaded.right_mul_table(), built.right_mul_table());
    }

    #[test]
    fn corrupt_entry_is_rebuilt() {
        let dir = tempfile::tempdir().unwrap();
        let cache = GroupCache::new(dir.path());
        let spec = CoxeterSpec::named("A3").unwrap();
        fs::write(cache.path_for(&spec).unwrap(), "{not json").unwrap();
        assert_eq!(cache.load_or_build(&spec).unwrap().order(), 24);
        assert!(GroupCache::read(&cache.path_for(&spec).unwrap(), &spec).is_some());
    }

    #[test]
    fn keys_differ_by_matrix() {
        let a = spec_key(&CoxeterSpec::named("B3").unwrap());
        let b = spec_key(&CoxeterSpec::named("A3").unwrap());
        assert_ne!(a, b);
        assert_eq!(a.len(), 64);
    }
}
