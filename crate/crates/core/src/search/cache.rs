//! On-disk result cache: one tab-separated record per line,
//!
//! ```text
//! n  p  q  mode  value  witness,witness,...  mop_count  version
//! ```
//!
//! Records written by another code version are dropped on load.

use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use crate::constructions::Mode;
use crate::doublestar::DoubleStarSpec;
use crate::error::{Error, Result};
use crate::graph6;
use crate::search::extremal::ExtremalResult;

/// Bumped whenever search output for a given key could change.
pub const CODE_VERSION: &str = concat!("opturan-", env!("CARGO_PKG_VERSION"), "+s1");

const FIELDS: usize = 8;

type Key = (usize, usize, usize, Mode);

fn field<T: std::str::FromStr>(s: &str, name: &str, line: usize) -> Result<T> {
    s.parse().map_err(|_| Error::CacheRecord { line, reason: format!("bad {name} field {s:?}") })
}

/// Parses one record. `line` is only used in error messages. Returns the
/// record and the version string it carries.
pub fn parse_record(text: &str, line: usize) -> Result<(ExtremalResult, String)> {
    let parts: Vec<&str> = text.split('\t').collect();
    if parts.len() != FIELDS {
        return Err(Error::CacheRecord { line, reason: format!("expected {FIELDS} fields, found {}", parts.len()) });
    }
    let n: usize = field(parts[0], "n", line)?;
    let p: usize = field(parts[1], "p", line)?;
    let q: usize = field(parts[2], "q", line)?;
    DoubleStarSpec::new(p, q).map_err(|e| Error::CacheRecord { line, reason: e.to_string() })?;
    let mode: Mode = parts[3].parse().map_err(|e: Error| Error::CacheRecord { line, reason: e.to_string() })?;
    let value: usize = field(parts[4], "value", line)?;
    let witnesses: Vec<String> =
        if parts[5].is_empty() { Vec::new() } else { parts[5].split(',').map(str::to_owned).collect() };
    for w in &witnesses {
        let g = graph6::decode(w).map_err(|e| Error::CacheRecord { line, reason: format!("witness: {e}") })?;
        if g.order() != n {
            return Err(Error::CacheRecord { line, reason: format!("witness {w} has {} vertices", g.order()) });
        }
    }
    let mop_count: usize = field(parts[6], "mop_count", line)?;
    let version = parts[7].to_owned();
    if version.is_empty() {
        return Err(Error::CacheRecord { line, reason: "empty version".into() });
    }
    Ok((ExtremalResult { n, p, q, mode, value, witnesses, mop_count, elapsed_ms: 0 }, version))
}

/// Renders one record under the current code version.
pub fn format_record(r: &ExtremalResult) -> String {
    format!(
        "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
        r.n,
        r.p,
        r.q,
        r.mode,
        r.value,
        r.witnesses.join(","),
        r.mop_count,
        CODE_VERSION
    )
}

/// Results keyed by `(n, p, q, mode)`, optionally persisted to a file.
#[derive(Debug, Default)]
pub struct ResultCache {
    path: Option<PathBuf>,
    records: BTreeMap<Key, ExtremalResult>,
    discarded: usize,
}

impl ResultCache {
    pub fn in_memory() -> Self {
        ResultCache::default()
    }

    /// Loads `path` if it exists. Malformed, invalid, or stale records are
    /// skipped and counted in [`ResultCache::discarded`].
    pub fn open(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref().to_path_buf();
        let mut cache = ResultCache { path: Some(path.clone()), ..Default::default() };
        let text = match fs::read_to_string(&path) {
            Ok(t) => t,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(cache),
            Err(e) => return Err(e.into()),
        };
        for (i, raw) in text.lines().enumerate() {
            let raw = raw.trim_end_matches('\r');
            if raw.is_empty() {
                continue;
            }
            match parse_record(raw, i + 1) {
                Ok((r, version)) if version == CODE_VERSION && r.validate().is_ok() => {
                    cache.records.insert((r.n, r.p, r.q, r.mode), r);
                }
                _ => cache.discarded += 1,
            }
        }
        Ok(cache)
    }

    pub fn path(&self) -> Option<&Path> {
        self.path.as_deref()
    }

    /// Lines dropped while loading.
    pub fn discarded(&self) -> usize {
        self.discarded
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    pub fn get(&self, n: usize, p: usize, q: usize, mode: Mode) -> Option<&ExtremalResult> {
        self.records.get(&(n, p, q, mode))
    }

    /// Stores `r` and rewrites the backing file, if any.
    pub fn insert(&mut self, r: ExtremalResult) -> Result<()> {
        let r = ExtremalResult { elapsed_ms: 0, ..r };
        self.records.insert((r.n, r.p, r.q, r.mode), r);
        self.flush()
    }

    fn flush(&self) -> Result<()> {
        let Some(path) = &self.path else {
            return Ok(());
        };
        if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
            fs::create_dir_all(dir)?;
        }
        let tmp = path.with_extension("tmp");
        {
            let mut f = fs::File::create(&tmp)?;
            for r in self.records.values() {
                writeln!(f, "{}", format_record(r))?;
            }
            f.sync_all()?;
        }
        fs::rename(&tmp, path)?;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> ExtremalResult {
        ExtremalResult {
            n: 5,
            p: 2,
            q: 2,
            mode: Mode::Connected,
            value: 7,
            witnesses: vec![graph6::encode(&crate::constructions::fan_mop(5).unwrap())],
            mop_count: 1,
            elapsed_ms: 12,
        }
    }

    #[test]
    fn record_round_trip() {
        let line = format_record(&sample());
        let (r, v) = parse_record(&line, 1).unwrap();
        assert_eq!(v, CODE_VERSION);
        assert!(r.same_outcome(&sample()));
        assert_eq!(r.elapsed_ms, 0);
    }

    #[test]
    fn malformed_records() {
        assert!(parse_record("", 1).is_err());
        assert!(parse_record("5\t2\t2\tconnected\t7\tD}k\t1", 1).is_err());
        assert!(parse_record("5\t2\t1\tconnected\t7\tD}k\t1\tv", 1).is_err());
        assert!(parse_record("5\t2\t2\tboth\t7\tD}k\t1\tv", 1).is_err());
        assert!(parse_record("6\t2\t2\tconnected\t7\tD}k\t1\tv", 1).is_err());
        assert!(parse_record("x\t2\t2\tconnected\t7\tD}k\t1\tv", 3).is_err());
    }

    #[test]
    fn stale_versions_are_dropped() {
        let dir = std::env::temp_dir().join(format!("opturan-cache-{}", std::process::id()));
        fs::create_dir_all(&dir).unwrap();
        let path = dir.join("results.tsv");
        let good = format_record(&sample());
        let stale = good.replace(CODE_VERSION, "opturan-0.0.0");
        fs::write(&path, format!("{stale}\ngarbage\n{good}\n")).unwrap();
        let cache = ResultCache::open(&path).unwrap();
        assert_eq!(cache.len(), 1);
        assert_eq!(cache.discarded(), 2);
        fs::remove_dir_all(&dir).unwrap();
    }
}
