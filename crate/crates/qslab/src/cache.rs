//! On-disk store for computed generating functions.
//!
//! Layout: `<root>/<family>[_k<pivots>]/n<value>.json`, one file per
//! `(variant, n)`. Entries carry a format version and are validated on load
//! (parseable coefficients, matching identity, unit coefficient sum); a
//! corrupt or version-mismatched entry is reported as such and must never be
//! trusted — callers either recompute it or fail, by policy.

use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use num_traits::One;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exact::{Rational, UniPoly};
use crate::pgf::VariantId;

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Error)]
pub enum CacheError {
    #[error("cache i/o error at {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("corrupt cache entry at {path}: {reason}")]
    Corrupt { path: PathBuf, reason: String },
}

#[derive(Serialize, Deserialize)]
struct Entry {
    format_version: u32,
    family: String,
    pivots: u32,
    n: usize,
    coeffs: Vec<String>,
}

/// A cache directory rooted at a path.
#[derive(Clone, Debug)]
pub struct DiskCache {
    root: PathBuf,
}

impl DiskCache {
    pub fn new(root: impl Into<PathBuf>) -> Self {
        DiskCache { root: root.into() }
    }

    pub fn root(&self) -> &Path {
        &self.root
    }

    pub fn entry_path(&self, variant: VariantId, n: usize) -> PathBuf {
        self.root.join(variant.dir_name()).join(format!("n{n}.json"))
    }

    /// Loads an entry. `Ok(None)` when absent; corrupt entries are errors.
    pub fn load(&self, variant: VariantId, n: usize) -> Result<Option<UniPoly>, CacheError> {
        let path = self.entry_path(variant, n);
        let bytes = match fs::read(&path) {
            Ok(b) => b,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
            Err(e) => return Err(CacheError::Io { path, source: e }),
        };
        let poly = validate_entry(&bytes, variant, n)
            .map_err(|reason| CacheError::Corrupt {
                path: path.clone(),
                reason,
            })?;
        Ok(Some(poly))
    }

    /// Writes an entry atomically (temp file + rename).
    pub fn store(&self, variant: VariantId, n: usize, poly: &UniPoly) -> Result<(), CacheError> {
        let path = self.entry_path(variant, n);
        let dir = path.parent().expect("entry paths have a parent");
        fs::create_dir_all(dir).map_err(|e| CacheError::Io {
            path: dir.to_path_buf(),
            source: e,
        })?;
        let entry = Entry {
            format_version: FORMAT_VERSION,
            family: variant.family().name().to_string(),
            pivots: variant.pivots(),
            n,
            coeffs: poly.to_coeff_strings(),
        };
        let json = serde_json::to_vec_pretty(&entry).expect("entry serializes");
        let tmp = path.with_extension("json.tmp");
        let mut f = fs::File::create(&tmp).map_err(|e| CacheError::Io {
            path: tmp.clone(),
            source: e,
        })?;
        f.write_all(&json).map_err(|e| CacheError::Io {
            path: tmp.clone(),
            source: e,
        })?;
        fs::rename(&tmp, &path).map_err(|e| CacheError::Io { path, source: e })
    }

    /// Validates every entry under the root. Returns the list of corrupt
    /// entries (empty means a clean cache). Missing root is clean.
    pub fn integrity_sweep(&self) -> Result<Vec<CacheError>, CacheError> {
        let mut problems = Vec::new();
        if !self.root.exists() {
            return Ok(problems);
        }
        let dirs = fs::read_dir(&self.root).map_err(|e| CacheError::Io {
            path: self.root.clone(),
            source: e,
        })?;
        for dir in dirs.flatten() {
            if !dir.path().is_dir() {
                continue;
            }
            let entries = fs::read_dir(dir.path()).map_err(|e| CacheError::Io {
                path: dir.path(),
                source: e,
            })?;
            for file in entries.flatten() {
                let path = file.path();
                if path.extension().map(|e| e != "json").unwrap_or(true) {
                    continue;
                }
                let bytes = match fs::read(&path) {
                    Ok(b) => b,
                    Err(e) => {
                        problems.push(CacheError::Io { path, source: e });
                        continue;
                    }
                };
                if let Err(reason) = validate_bytes(&bytes) {
                    problems.push(CacheError::Corrupt { path, reason });
                }
            }
        }
        Ok(problems)
    }
}

fn parse_entry(bytes: &[u8]) -> Result<(Entry, UniPoly), String> {
    let entry: Entry =
        serde_json::from_slice(bytes).map_err(|e| format!("invalid JSON: {e}"))?;
    if entry.format_version != FORMAT_VERSION {
        return Err(format!(
            "format version {} does not match expected {}",
            entry.format_version, FORMAT_VERSION
        ));
    }
    let poly = UniPoly::from_coeff_strings(&entry.coeffs)
        .map_err(|e| format!("unparseable coefficient: {e}"))?;
    if !poly.eval_one().is_one() {
        return Err("coefficients do not sum to 1".into());
    }
    if poly
        .coeffs()
        .iter()
        .any(|c| c < &Rational::from_integer(0.into()))
    {
        return Err("negative coefficient".into());
    }
    Ok((entry, poly))
}

fn validate_bytes(bytes: &[u8]) -> Result<(), String> {
    parse_entry(bytes).map(|_| ())
}

fn validate_entry(bytes: &[u8], variant: VariantId, n: usize) -> Result<UniPoly, String> {
    let (entry, poly) = parse_entry(bytes)?;
    if entry.family != variant.family().name() || entry.pivots != variant.pivots() {
        return Err(format!(
            "entry is for {}_k{}, expected {}_k{}",
            entry.family,
            entry.pivots,
            variant.family().name(),
            variant.pivots()
        ));
    }
    if entry.n != n {
        return Err(format!("entry is for n = {}, expected {}", entry.n, n));
    }
    Ok(poly)
}
