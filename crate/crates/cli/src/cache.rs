//! On-disk result cache: one file per invocation key.

use std::fs;
use std::io;
use std::path::{Path, PathBuf};

const FORMAT_VERSION: u32 = 1;

pub struct Entry {
    pub status: i32,
    pub output: String,
}

fn stamp(status: i32) -> String {
    format!(
        "schurpos-cache v{} {} status={}",
        FORMAT_VERSION,
        env!("CARGO_PKG_VERSION"),
        status
    )
}

/// File name for a key made of canonical argument strings.
fn file_name(key: &[String]) -> String {
    let raw = key.join("_");
    let safe: String = raw
        .chars()
        .map(|c| if c.is_ascii_alphanumeric() || "[],=-_".contains(c) { c } else { '-' })
        .collect();
    format!("{}.out", safe)
}

pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn new(dir: &Path) -> Cache {
        Cache { dir: dir.to_path_buf() }
    }

    fn path(&self, key: &[String]) -> PathBuf {
        self.dir.join(file_name(key))
    }

    /// A stored entry, if present and written by this format version.
    pub fn load(&self, key: &[String]) -> Option<Entry> {
        let text = fs::read_to_string(self.path(key)).ok()?;
        let (first, output) = text.split_once('\n')?;
        let status = (0..=2).find(|&s| stamp(s) == first)?;
        Some(Entry {
            status,
            output: output.to_string(),
        })
    }

    pub fn store(&self, key: &[String], entry: &Entry) -> io::Result<()> {
        fs::create_dir_all(&self.dir)?;
        let tmp = self.path(key).with_extension("tmp");
        fs::write(&tmp, format!("{}\n{}", stamp(entry.status), entry.output))?;
        fs::rename(tmp, self.path(key))
    }
}
