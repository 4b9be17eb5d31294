//! On-disk cache of numeric multiple zeta values.
//!
//! One JSON record per line, `{"word": "10010000", "digits": 40, "value": "…"}`.
//! Readers share an in-memory map; writers are serialized and replace the file
//! atomically (write to a temporary file, then rename).

use std::collections::HashMap;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::{LazyLock, Mutex, RwLock};

use serde::{Deserialize, Serialize};

use crate::Result;

pub const CACHE_ENV: &str = "MZV_CACHE_DIR";
const FILE_NAME: &str = "mzv-values.jsonl";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheRecord {
    pub word: String,
    pub digits: u32,
    pub value: String,
}

#[derive(Debug)]
pub struct Cache {
    path: PathBuf,
    map: RwLock<HashMap<(String, u32), String>>,
    writer: Mutex<()>,
}

fn read_records(path: &Path) -> Vec<CacheRecord> {
    // unreadable or partially written lines are skipped; they only cost a
    // recomputation
    fs::read_to_string(path)
        .map(|s| {
            s.lines()
                .filter_map(|l| serde_json::from_str(l).ok())
                .collect()
        })
        .unwrap_or_default()
}

impl Cache {
    pub fn open(dir: impl AsRef<Path>) -> Self {
        let path = dir.as_ref().join(FILE_NAME);
        let map = read_records(&path)
            .into_iter()
            .map(|r| ((r.word, r.digits), r.value))
            .collect();
        Self {
            path,
            map: RwLock::new(map),
            writer: Mutex::new(()),
        }
    }

    /// The directory named by `MZV_CACHE_DIR`, or a subdirectory of the
    /// system temporary directory.
    pub fn default_dir() -> PathBuf {
        std::env::var_os(CACHE_ENV)
            .map(PathBuf::from)
            .unwrap_or_else(|| std::env::temp_dir().join("mzv-cache"))
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    pub fn get(&self, word: &str, digits: u32) -> Option<String> {
        self.map
            .read()
            .expect("cache lock poisoned")
            .get(&(word.to_string(), digits))
            .cloned()
    }

    pub fn len(&self) -> usize {
        self.map.read().expect("cache lock poisoned").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn insert(&self, word: &str, digits: u32, value: String) -> Result<()> {
        let _guard = self.writer.lock().expect("cache writer poisoned");
        self.map
            .write()
            .expect("cache lock poisoned")
            .insert((word.to_string(), digits), value);
        if let Some(dir) = self.path.parent() {
            fs::create_dir_all(dir)?;
        }
        // merge with whatever another process may have written meanwhile
        let mut merged: HashMap<(String, u32), String> = read_records(&self.path)
            .into_iter()
            .map(|r| ((r.word, r.digits), r.value))
            .collect();
        merged.extend(self.map.read().expect("cache lock poisoned").clone());
        let mut records: Vec<CacheRecord> = merged
            .into_iter()
            .map(|((word, digits), value)| CacheRecord {
                word,
                digits,
                value,
            })
            .collect();
        records.sort_by(|x, y| (&x.word, x.digits).cmp(&(&y.word, y.digits)));

        let tmp = self
            .path
            .with_extension(format!("tmp.{}", std::process::id()));
        {
            let mut f = fs::File::create(&tmp)?;
            for r in &records {
                writeln!(f, "{}", serde_json::to_string(r)?)?;
            }
            f.sync_all()?;
        }
        fs::rename(&tmp, &self.path)?;
        Ok(())
    }
}

static DEFAULT: LazyLock<Cache> = LazyLock::new(|| Cache::open(Cache::default_dir()));

/// The process-wide cache, opened on first use.
pub fn default_cache() -> &'static Cache {
    &DEFAULT
}
