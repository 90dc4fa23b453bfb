//! On-disk cache of search results: one JSON file per key, named by the
//! SHA-256 of the key's JSON encoding.

use std::fs;
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicU64, AtomicUsize, Ordering};
use std::time::{SystemTime, UNIX_EPOCH};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::pattern::MultipartitePattern;
use crate::search::{search, Engine, SearchOptions, SearchResult};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheKey {
    pub n: usize,
    pub h: MultipartitePattern,
    pub f: MultipartitePattern,
    pub engine: Engine,
    pub tool_version: String,
    /// Heuristic results also depend on seed and budget.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub budget: Option<u64>,
}

impl CacheKey {
    pub fn new(n: usize, h: &MultipartitePattern, f: &MultipartitePattern, opts: &SearchOptions) -> Self {
        let heuristic = opts.engine == Engine::Heuristic;
        CacheKey {
            n,
            h: h.clone(),
            f: f.clone(),
            engine: opts.engine,
            tool_version: TOOL_VERSION.to_string(),
            seed: heuristic.then_some(opts.seed),
            budget: heuristic.then_some(opts.budget),
        }
    }

    pub fn digest(&self) -> String {
        let json = serde_json::to_vec(self).expect("cache keys serialize");
        hex::encode(Sha256::digest(&json))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheEntry {
    pub key: CacheKey,
    pub value: SearchResult,
    /// Seconds since the Unix epoch.
    pub created_at: u64,
    pub tool_version: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Lookup {
    Hit,
    Miss,
    /// An entry existed but failed revalidation and was replaced.
    Recomputed,
}

#[derive(Debug, Default)]
pub struct ResultCache {
    dir: Option<PathBuf>,
    hits: AtomicUsize,
    misses: AtomicUsize,
    recomputed: AtomicUsize,
    tmp_counter: AtomicU64,
}

impl ResultCache {
    /// A cache rooted at `dir` (created if missing); `None` disables caching.
    pub fn new(dir: Option<&Path>) -> Result<Self> {
        if let Some(dir) = dir {
            fs::create_dir_all(dir).map_err(|e| Error::Cache(format!("cannot create {}: {e}", dir.display())))?;
        }
        Ok(ResultCache { dir: dir.map(Path::to_path_buf), ..ResultCache::default() })
    }

    pub fn dir(&self) -> Option<&Path> {
        self.dir.as_deref()
    }

    pub fn path_for(&self, key: &CacheKey) -> Option<PathBuf> {
        self.dir.as_ref().map(|d| d.join(format!("{}.json", key.digest())))
    }

    /// `(hits, misses, recomputed)` so far.
    pub fn stats(&self) -> (usize, usize, usize) {
        (
            self.hits.load(Ordering::Relaxed),
            self.misses.load(Ordering::Relaxed),
            self.recomputed.load(Ordering::Relaxed),
        )
    }

    /// Returns the cached result after rechecking its certificates, or runs
    /// the search and stores the result.
    pub fn get_or_compute(
        &self,
        n: usize,
        h: &MultipartitePattern,
        f: &MultipartitePattern,
        opts: &SearchOptions,
    ) -> Result<(SearchResult, Lookup)> {
        let opts = SearchOptions { collect_certificates: true, ..opts.clone() };
        let key = CacheKey::new(n, h, f, &opts);
        let Some(path) = self.path_for(&key) else {
            self.misses.fetch_add(1, Ordering::Relaxed);
            return Ok((search(n, h, f, &opts)?, Lookup::Miss));
        };
        let lookup = match fs::read(&path) {
            Ok(bytes) => match validate(&bytes, &key) {
                Some(result) => {
                    self.hits.fetch_add(1, Ordering::Relaxed);
                    return Ok((result, Lookup::Hit));
                }
                None => Lookup::Recomputed,
            },
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => Lookup::Miss,
            Err(e) => return Err(Error::Cache(format!("cannot read {}: {e}", path.display()))),
        };
        match lookup {
            Lookup::Recomputed => self.recomputed.fetch_add(1, Ordering::Relaxed),
            _ => self.misses.fetch_add(1, Ordering::Relaxed),
        };
        let result = search(n, h, f, &opts)?;
        let entry = CacheEntry {
            key,
            value: result.clone(),
            created_at: SystemTime::now().duration_since(UNIX_EPOCH).map_or(0, |d| d.as_secs()),
            tool_version: TOOL_VERSION.to_string(),
        };
        self.write_atomic(&path, &serde_json::to_vec_pretty(&entry)?)?;
        Ok((result, lookup))
    }

    fn write_atomic(&self, path: &Path, bytes: &[u8]) -> Result<()> {
        let tmp = path.with_extension(format!(
            "tmp.{}.{}",
            std::process::id(),
            self.tmp_counter.fetch_add(1, Ordering::Relaxed)
        ));
        let fail = |e: std::io::Error| Error::Cache(format!("cannot write {}: {e}", path.display()));
        fs::write(&tmp, bytes).map_err(fail)?;
        fs::rename(&tmp, path).map_err(fail)
    }
}

/// The stored result if the entry parses, matches the key and its
/// certificates still reproduce the value.
fn validate(bytes: &[u8], key: &CacheKey) -> Option<SearchResult> {
    let entry: CacheEntry = serde_json::from_slice(bytes).ok()?;
    let r = entry.value;
    let consistent = entry.key == *key
        && r.n == key.n
        && r.h == key.h
        && r.f == key.f
        && r.engine == key.engine
        && !r.certificates.is_empty()
        && r.verify_certificates().is_ok();
    consistent.then_some(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pat(s: &str) -> MultipartitePattern {
        s.parse().unwrap()
    }

    #[test]
    fn hit_after_miss_and_recompute_after_corruption() {
        let dir = tempfile::tempdir().unwrap();
        let cache = ResultCache::new(Some(dir.path())).unwrap();
        let opts = SearchOptions::default().with_workers(1);
        let (h, f) = (pat("1,2"), pat("2,2"));
        let (first, l1) = cache.get_or_compute(6, &h, &f, &opts).unwrap();
        assert_eq!(l1, Lookup::Miss);
        let (second, l2) = cache.get_or_compute(6, &h, &f, &opts).unwrap();
        assert_eq!(l2, Lookup::Hit);
        assert_eq!(first.value, second.value);

        // Tamper with the stored value: the recount no longer matches.
        let path = cache.path_for(&CacheKey::new(6, &h, &f, &opts)).unwrap();
        let mut entry: CacheEntry = serde_json::from_slice(&fs::read(&path).unwrap()).unwrap();
        entry.value.value += 1;
        fs::write(&path, serde_json::to_vec(&entry).unwrap()).unwrap();
        let (third, l3) = cache.get_or_compute(6, &h, &f, &opts).unwrap();
        assert_eq!(l3, Lookup::Recomputed);
        assert_eq!(third.value, first.value);

        fs::write(&path, b"{not json").unwrap();
        assert_eq!(cache.get_or_compute(6, &h, &f, &opts).unwrap().1, Lookup::Recomputed);
        assert_eq!(cache.stats(), (1, 1, 2));
    }

    #[test]
    fn keys_separate_engines_and_seeds() {
        let (h, f) = (pat("1,2"), pat("2,2"));
        let exact = CacheKey::new(6, &h, &f, &SearchOptions::default());
        let heur = CacheKey::new(6, &h, &f, &SearchOptions::heuristic(100, 1));
        let heur2 = CacheKey::new(6, &h, &f, &SearchOptions::heuristic(100, 2));
        assert_ne!(exact.digest(), heur.digest());
        assert_ne!(heur.digest(), heur2.digest());
        // Worker count does not change the key.
        assert_eq!(exact, CacheKey::new(6, &h, &f, &SearchOptions::default().with_workers(3)));
    }

    #[test]
    fn unwritable_directory_is_an_error() {
        let dir = tempfile::tempdir().unwrap();
        let file = dir.path().join("plain-file");
        fs::write(&file, b"x").unwrap();
        assert!(matches!(ResultCache::new(Some(&file)), Err(Error::Cache(_))));
    }
}
