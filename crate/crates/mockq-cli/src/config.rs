//! Settings from a `key = value` file, environment variables and flags.
//!
//! Precedence, highest first: command-line flag, `MOCKQ_*` environment
//! variable, config file, built-in default. The file is the one named by
//! `--config`, else `$MOCKQ_CONFIG`, else `./mockq.conf` when present.

use std::path::{Path, PathBuf};

#[derive(Clone, Debug, PartialEq)]
pub struct Config {
    /// default truncation for `expand` and `dsl` / `verify --file`
    pub truncation: Option<i64>,
    /// bits used for decimal renderings of exact values
    pub precision_bits: u32,
    pub cache_dir: Option<PathBuf>,
    pub jobs: Option<usize>,
}

impl Default for Config {
    fn default() -> Self {
        Config { truncation: None, precision_bits: 128, cache_dir: None, jobs: None }
    }
}

pub const KEYS: &[&str] = &["truncation", "precision_bits", "cache_dir", "jobs"];

impl Config {
    fn set(&mut self, key: &str, value: &str) -> Result<(), String> {
        let num = |v: &str| v.parse::<i64>().map_err(|_| format!("`{key}` expects an integer, got `{v}`"));
        match key {
            "truncation" => self.truncation = Some(num(value)?),
            "precision_bits" => {
                let b = num(value)?;
                if !(16..=4096).contains(&b) {
                    return Err(format!("precision_bits must be in 16..=4096, got {b}"));
                }
                self.precision_bits = b as u32;
            }
            "cache_dir" => self.cache_dir = (!value.is_empty()).then(|| PathBuf::from(value)),
            "jobs" => self.jobs = Some(num(value)?.max(1) as usize),
            _ => return Err(format!("unknown config key `{key}` (known: {})", KEYS.join(", "))),
        }
        Ok(())
    }

    pub fn parse_file_text(&mut self, text: &str, origin: &str) -> Result<(), String> {
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (k, v) = line.split_once('=').ok_or_else(|| format!("{origin}:{}: expected `key = value`", i + 1))?;
            self.set(k.trim(), v.trim()).map_err(|e| format!("{origin}:{}: {e}", i + 1))?;
        }
        Ok(())
    }

    /// Defaults, then the file, then the environment.
    pub fn load(explicit: Option<&Path>, env: &dyn Fn(&str) -> Option<String>) -> Result<Config, String> {
        let mut c = Config::default();
        let path = explicit
            .map(Path::to_path_buf)
            .or_else(|| env("MOCKQ_CONFIG").map(PathBuf::from))
            .or_else(|| Some(PathBuf::from("mockq.conf")).filter(|p| p.exists()));
        if let Some(p) = path {
            let text = std::fs::read_to_string(&p).map_err(|e| format!("{}: {e}", p.display()))?;
            c.parse_file_text(&text, &p.display().to_string())?;
        }
        for key in KEYS {
            let var = format!("MOCKQ_{}", key.to_uppercase());
            if let Some(v) = env(&var) {
                c.set(key, &v).map_err(|e| format!("{var}: {e}"))?;
            }
        }
        Ok(c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn precedence() {
        let dir = tempfile::tempdir().unwrap();
        let f = dir.path().join("m.conf");
        std::fs::write(&f, "truncation = 80\n# comment\njobs = 3\n").unwrap();
        let env = |k: &str| (k == "MOCKQ_TRUNCATION").then(|| "90".to_string());
        let c = Config::load(Some(&f), &env).unwrap();
        assert_eq!((c.truncation, c.jobs, c.precision_bits), (Some(90), Some(3), 128));
        let none = |_: &str| None;
        assert_eq!(Config::load(Some(&f), &none).unwrap().truncation, Some(80));
        std::fs::write(&f, "colour = red\n").unwrap();
        assert!(Config::load(Some(&f), &none).unwrap_err().contains(":1:"));
    }
}
