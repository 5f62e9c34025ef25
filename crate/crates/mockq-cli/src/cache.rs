//! Content-addressed result cache: one JSON file per (command, inputs, version).

use crate::report::RunReport;
use serde_json::json;
use sha2::{Digest, Sha256};
use std::path::{Path, PathBuf};

pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn open(dir: &Path) -> std::io::Result<Self> {
        std::fs::create_dir_all(dir)?;
        Ok(Cache { dir: dir.to_path_buf() })
    }

    pub fn key(command: &str, inputs: &serde_json::Value) -> String {
        // serde_json maps are ordered, so this text is canonical
        let text = json!({ "command": command, "inputs": inputs, "version": crate::VERSION }).to_string();
        hex::encode(Sha256::digest(text.as_bytes()))
    }

    fn path(&self, key: &str) -> PathBuf {
        self.dir.join(format!("{key}.json"))
    }

    pub fn get(&self, key: &str) -> Option<Vec<RunReport>> {
        let text = std::fs::read_to_string(self.path(key)).ok()?;
        serde_json::from_str(&text).ok()
    }

    pub fn put(&self, key: &str, reports: &[RunReport]) -> std::io::Result<()> {
        let tmp = self.dir.join(format!("{key}.tmp"));
        std::fs::write(&tmp, serde_json::to_vec(reports)?)?;
        std::fs::rename(tmp, self.path(key))
    }
}
