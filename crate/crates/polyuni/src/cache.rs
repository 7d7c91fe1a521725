//! JSON-lines result cache so long sweeps can resume.
//!
//! One line per finished report, keyed by sequence text, method, limit and
//! crate version. Lines that fail to parse are skipped, which also covers a
//! line cut short by an interrupted run.

use std::collections::HashMap;
use std::fs::{self, File, OpenOptions};
use std::io::{self, BufRead, BufReader, Write};
use std::path::{Path, PathBuf};
use std::sync::Mutex;

use polyuni_core::enumerate::Method;
use polyuni_core::DegreeSequence;
use serde::{Deserialize, Serialize};

use crate::json::ReportJson;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");
pub const FILE_NAME: &str = "results.jsonl";

#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct CacheKey {
    pub sequence: String,
    pub method: String,
    pub limit: Option<usize>,
    pub version: String,
}

impl CacheKey {
    pub fn new(s: &DegreeSequence, method: Method, limit: Option<usize>) -> Self {
        CacheKey {
            sequence: s.to_string(),
            method: method.resolve(s).name().to_string(),
            limit,
            version: VERSION.to_string(),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct Line {
    key: CacheKey,
    report: ReportJson,
}

pub struct Cache {
    path: PathBuf,
    entries: Mutex<HashMap<CacheKey, ReportJson>>,
    file: Mutex<File>,
}

impl Cache {
    pub fn open(dir: &Path) -> io::Result<Self> {
        fs::create_dir_all(dir)?;
        let path = dir.join(FILE_NAME);
        let mut entries = HashMap::new();
        if path.exists() {
            for line in BufReader::new(File::open(&path)?).lines() {
                if let Ok(l) = serde_json::from_str::<Line>(&line?) {
                    entries.insert(l.key, l.report);
                }
            }
        }
        let mut file = OpenOptions::new().create(true).append(true).open(&path)?;
        // Start a fresh line after a torn one.
        let text = fs::read(&path)?;
        if text.last().is_some_and(|&b| b != b'\n') {
            file.write_all(b"\n")?;
        }
        Ok(Cache { path, entries: Mutex::new(entries), file: Mutex::new(file) })
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    pub fn get(&self, key: &CacheKey) -> Option<ReportJson> {
        self.entries.lock().unwrap().get(key).cloned()
    }

    pub fn put(&self, key: CacheKey, report: &ReportJson) -> io::Result<()> {
        let mut text = serde_json::to_string(&Line { key: key.clone(), report: report.clone() })?;
        text.push('\n');
        {
            let mut f = self.file.lock().unwrap();
            f.write_all(text.as_bytes())?;
            f.flush()?;
        }
        self.entries.lock().unwrap().insert(key, report.clone());
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.entries.lock().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}
