//! Append-only JSON-lines cache of evaluations, one file per descriptor.

use std::collections::BTreeMap;
use std::fs::{self, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::CliResult;
use crate::record::{Descriptor, Evaluation};

/// Bumped whenever stored values could change meaning.
pub const FORMAT_VERSION: u32 = 1;

pub const CACHE_DIR_ENV: &str = "VCJONES_CACHE_DIR";

#[derive(Serialize, Deserialize)]
struct Line {
    format: u32,
    code: String,
    #[serde(flatten)]
    eval: Evaluation,
}

pub struct Cache {
    path: PathBuf,
    entries: BTreeMap<u64, Evaluation>,
}

/// Flag beats environment beats `~/.cache/vcjones`.
pub fn default_dir(flag: Option<&Path>) -> Option<PathBuf> {
    if let Some(p) = flag {
        return Some(p.to_path_buf());
    }
    if let Some(p) = std::env::var_os(CACHE_DIR_ENV).filter(|v| !v.is_empty()) {
        return Some(PathBuf::from(p));
    }
    if let Some(p) = std::env::var_os("XDG_CACHE_HOME").filter(|v| !v.is_empty()) {
        return Some(PathBuf::from(p).join("vcjones"));
    }
    std::env::var_os("HOME").map(|h| PathBuf::from(h).join(".cache").join("vcjones"))
}

impl Cache {
    /// Loads the cache for `desc`, skipping lines from other format or code
    /// versions and lines that do not parse.
    pub fn open(dir: &Path, desc: Descriptor) -> CliResult<Self> {
        let path = dir.join(format!("{}.jsonl", desc.cache_key()));
        let mut entries = BTreeMap::new();
        if path.exists() {
            for line in BufReader::new(fs::File::open(&path)?).lines() {
                let line = line?;
                if let Ok(l) = serde_json::from_str::<Line>(&line) {
                    if l.format == FORMAT_VERSION && l.code == env!("CARGO_PKG_VERSION") {
                        entries.insert(l.eval.n, l.eval);
                    }
                }
            }
        }
        Ok(Self { path, entries })
    }

    pub fn get(&self, n: u64) -> Option<&Evaluation> {
        self.entries.get(&n)
    }

    pub fn append(&mut self, new: &[Evaluation]) -> CliResult<()> {
        if new.is_empty() {
            return Ok(());
        }
        if let Some(dir) = self.path.parent() {
            fs::create_dir_all(dir)?;
        }
        let mut f = OpenOptions::new().create(true).append(true).open(&self.path)?;
        let mut buf = Vec::new();
        for e in new {
            let line = Line { format: FORMAT_VERSION, code: env!("CARGO_PKG_VERSION").into(), eval: e.clone() };
            serde_json::to_writer(&mut buf, &line)?;
            buf.push(b'\n');
            self.entries.insert(e.n, e.clone());
        }
        f.write_all(&buf)?;
        Ok(())
    }
}
