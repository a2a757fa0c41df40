//! Persistent rank cache: a JSON file of block results keyed by datum hash
//! and multidegree.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use hopfmin_core::scalar::Field;
use hopfmin_core::shapovalov::{CyclotomicFactors, RankCache};
use hopfmin_core::{MultiDegree, RankReport, Scalar};
use serde::{Deserialize, Serialize};

const CACHE_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
struct Entry {
    hash: String,
    deg: Vec<u32>,
    size: usize,
    rank: usize,
    det: Option<String>,
    factor_bound: Option<u32>,
    factors: Option<CyclotomicFactors>,
}

#[derive(Serialize, Deserialize)]
struct CacheFile {
    version: u32,
    entries: Vec<Entry>,
}

type Key = (String, Vec<u32>);

/// Cache for one datum (by hash) and one factor setting. Entries for other
/// data found in the file are kept untouched.
pub struct FileCache {
    path: PathBuf,
    hash: String,
    field: Field,
    factor_bound: Option<u32>,
    entries: Mutex<BTreeMap<Key, Entry>>,
    hits: AtomicUsize,
    stored: AtomicUsize,
    warning: Option<String>,
}

impl FileCache {
    /// Loads `path`. A missing file is an empty cache; an unreadable or
    /// malformed one is also treated as empty, with a warning.
    pub fn open(path: &Path, hash: &str, field: Field, factor_bound: Option<u32>) -> Self {
        let (entries, warning) = match std::fs::read_to_string(path) {
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => (BTreeMap::new(), None),
            Err(e) => (BTreeMap::new(), Some(format!("cache {} unreadable ({e}); recomputing", path.display()))),
            Ok(text) => match serde_json::from_str::<CacheFile>(&text) {
                Ok(f) if f.version == CACHE_VERSION => {
                    (f.entries.into_iter().map(|e| ((e.hash.clone(), e.deg.clone()), e)).collect(), None)
                }
                Ok(f) => (BTreeMap::new(), Some(format!("cache {} has version {}; recomputing", path.display(), f.version))),
                Err(e) => (BTreeMap::new(), Some(format!("cache {} is corrupt ({e}); recomputing", path.display()))),
            },
        };
        FileCache {
            path: path.to_path_buf(),
            hash: hash.to_string(),
            field,
            factor_bound,
            entries: Mutex::new(entries),
            hits: AtomicUsize::new(0),
            stored: AtomicUsize::new(0),
            warning,
        }
    }

    pub fn warning(&self) -> Option<&str> {
        self.warning.as_deref()
    }

    pub fn hits(&self) -> usize {
        self.hits.load(Ordering::Relaxed)
    }

    pub fn stored(&self) -> usize {
        self.stored.load(Ordering::Relaxed)
    }

    /// Writes the cache next to its target and renames it into place.
    pub fn save(&self) -> std::io::Result<()> {
        let entries = self.entries.lock().expect("cache lock").values().cloned().collect();
        let text = serde_json::to_string(&CacheFile { version: CACHE_VERSION, entries }).expect("cache serializes");
        let mut tmp = self.path.clone().into_os_string();
        tmp.push(".tmp");
        std::fs::write(&tmp, text)?;
        std::fs::rename(&tmp, &self.path)
    }

    fn decode(&self, e: &Entry) -> Option<RankReport> {
        if self.factor_bound.is_some() && e.factor_bound != self.factor_bound {
            return None;
        }
        let determinant = match &e.det {
            Some(text) => Some(Scalar::parse_in(self.field, text).ok()?),
            None => None,
        };
        Some(RankReport {
            degree: MultiDegree(e.deg.clone()),
            block_size: e.size,
            rank: e.rank,
            determinant,
            factors: if self.factor_bound.is_some() { e.factors.clone() } else { None },
        })
    }
}

impl RankCache for FileCache {
    fn lookup(&self, degree: &MultiDegree) -> Option<RankReport> {
        let key = (self.hash.clone(), degree.counts().to_vec());
        let found = self.entries.lock().expect("cache lock").get(&key).and_then(|e| self.decode(e));
        if found.is_some() {
            self.hits.fetch_add(1, Ordering::Relaxed);
        }
        found
    }

    fn store(&self, report: &RankReport) {
        let entry = Entry {
            hash: self.hash.clone(),
            deg: report.degree.counts().to_vec(),
            size: report.block_size,
            rank: report.rank,
            det: report.determinant.as_ref().map(Scalar::to_literal),
            factor_bound: self.factor_bound,
            factors: report.factors.clone(),
        };
        self.entries.lock().expect("cache lock").insert((entry.hash.clone(), entry.deg.clone()), entry);
        self.stored.fetch_add(1, Ordering::Relaxed);
    }
}
