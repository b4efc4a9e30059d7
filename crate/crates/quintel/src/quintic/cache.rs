//! Append-only on-disk cache of Frobenius records, one file per polynomial.
//!
//! Format: a header line `quintel-frob-cache<TAB>v1<TAB><coeff list>`, then
//! one record per line, `p<TAB>partition<TAB>label`, partition comma-joined
//! ascending.  The parser is strict — a file that fails any check is
//! discarded and rebuilt rather than trusted — and must never panic, since
//! cache files are outside the program's control.

use std::collections::BTreeMap;
use std::fs;
use std::io::{self, BufWriter, ErrorKind, Write};
use std::path::{Path, PathBuf};

use thiserror::Error;

use crate::exactmath::{is_prime, IntPoly};
use crate::groups::{cycle_type_label, ClassLabel};

use super::frob::FrobeniusRecord;

pub const CACHE_FORMAT_VERSION: u32 = 1;
const CACHE_MAGIC: &str = "quintel-frob-cache";

#[derive(Debug, Error)]
pub enum CacheError {
    #[error("cache i/o: {0}")]
    Io(#[from] io::Error),
    #[error("cache line {line}: {msg}")]
    Format { line: usize, msg: String },
}

fn format_err(line: usize, msg: impl Into<String>) -> CacheError {
    CacheError::Format {
        line,
        msg: msg.into(),
    }
}

/// One parsed record line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CacheLine {
    pub p: u64,
    pub partition: Vec<usize>,
    pub label: ClassLabel,
}

/// A parsed cache file: the header key plus all record lines.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CacheContents {
    pub version: u32,
    pub coeffs: String,
    pub lines: Vec<CacheLine>,
}

/// Strict parser for the cache format.  Rejects anything it cannot fully
/// validate: non-prime p, duplicate p, partitions that do not sum to 5 or
/// are out of order, labels inconsistent with the partition.
pub fn parse_cache_text(text: &str) -> Result<CacheContents, CacheError> {
    let mut line_iter = text.lines().enumerate();
    let Some((_, header)) = line_iter.next() else {
        return Err(format_err(1, "missing header"));
    };
    let head: Vec<&str> = header.split('\t').collect();
    let [magic, version, coeffs] = head[..] else {
        return Err(format_err(1, "header needs 3 tab-separated fields"));
    };
    if magic != CACHE_MAGIC {
        return Err(format_err(1, format!("bad magic {magic:?}")));
    }
    let version: u32 = version
        .strip_prefix('v')
        .and_then(|v| v.parse().ok())
        .ok_or_else(|| format_err(1, format!("bad version {version:?}")))?;
    IntPoly::parse_coeff_list(coeffs)
        .map_err(|e| format_err(1, format!("bad coefficient key: {e}")))?;

    let mut lines: Vec<CacheLine> = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for (i, line) in line_iter {
        let lineno = i + 1;
        let cols: Vec<&str> = line.split('\t').collect();
        let [pcol, partcol, labcol] = cols[..] else {
            return Err(format_err(lineno, "expected p<TAB>partition<TAB>label"));
        };
        let p: u64 = pcol
            .parse()
            .map_err(|_| format_err(lineno, format!("bad prime {pcol:?}")))?;
        if !is_prime(p) {
            return Err(format_err(lineno, format!("{p} is not prime")));
        }
        if !seen.insert(p) {
            return Err(format_err(lineno, format!("duplicate prime {p}")));
        }
        let mut partition = Vec::new();
        for part in partcol.split(',') {
            let d: usize = part
                .parse()
                .map_err(|_| format_err(lineno, format!("bad partition part {part:?}")))?;
            if !(1..=5).contains(&d) {
                return Err(format_err(lineno, format!("partition part {d} out of range")));
            }
            partition.push(d);
        }
        if partition.iter().sum::<usize>() != 5 {
            return Err(format_err(lineno, format!("partition {partcol:?} does not sum to 5")));
        }
        if !partition.windows(2).all(|w| w[0] <= w[1]) {
            return Err(format_err(lineno, format!("partition {partcol:?} not ascending")));
        }
        let label = ClassLabel::from_name(labcol)
            .map_err(|e| format_err(lineno, e.to_string()))?;
        let expected = cycle_type_label(&partition)
            .map_err(|e| format_err(lineno, e.to_string()))?;
        if label != expected {
            return Err(format_err(
                lineno,
                format!("label {label} does not match partition {partcol:?}"),
            ));
        }
        lines.push(CacheLine { p, partition, label });
    }
    Ok(CacheContents {
        version,
        coeffs: coeffs.to_string(),
        lines,
    })
}

fn cache_file_name(coeffs: &str) -> String {
    // ',' and '-' are awkward in file names on some filesystems.
    let tag: String = coeffs
        .chars()
        .map(|c| match c {
            ',' => '_',
            '-' => 'm',
            other => other,
        })
        .collect();
    format!("frob-{tag}.tsv")
}

/// On-disk cache handle for one polynomial: a load-or-rebuild open, an
/// in-memory map for lookups, buffered appends for new records.
pub struct FrobCache {
    path: PathBuf,
    map: BTreeMap<u64, (Vec<usize>, ClassLabel)>,
    writer: Option<BufWriter<fs::File>>,
}

impl FrobCache {
    /// Opens (or creates) the cache for `f` under `dir`.  A file whose
    /// header does not match `f` and the current format version, or that
    /// fails any parse check, is discarded and rebuilt empty.
    pub fn open(dir: &Path, f: &IntPoly) -> Result<FrobCache, CacheError> {
        let coeffs = f.to_coeff_list();
        let path = dir.join(cache_file_name(&coeffs));
        let mut map = BTreeMap::new();
        match fs::read_to_string(&path) {
            Ok(text) => {
                if let Ok(contents) = parse_cache_text(&text) {
                    if contents.version == CACHE_FORMAT_VERSION && contents.coeffs == coeffs {
                        for l in contents.lines {
                            map.insert(l.p, (l.partition, l.label));
                        }
                    }
                }
            }
            Err(e) if e.kind() == ErrorKind::NotFound => {}
            Err(e) => return Err(e.into()),
        }
        if map.is_empty() {
            fs::create_dir_all(dir)?;
            fs::write(
                &path,
                format!("{CACHE_MAGIC}\tv{CACHE_FORMAT_VERSION}\t{coeffs}\n"),
            )?;
        }
        Ok(FrobCache {
            path,
            map,
            writer: None,
        })
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn lookup(&self, p: u64) -> Option<FrobeniusRecord> {
        self.map.get(&p).map(|(partition, label)| FrobeniusRecord {
            p,
            partition: Some(partition.clone()),
            class: Some(*label),
        })
    }

    /// Appends an unramified record; ramified or already-cached primes are
    /// no-ops.  Appends are buffered — call [`FrobCache::flush`] (or drop
    /// the handle) to persist.
    pub fn record(&mut self, rec: &FrobeniusRecord) -> Result<(), CacheError> {
        let (Some(partition), Some(label)) = (&rec.partition, rec.class) else {
            return Ok(());
        };
        if self.map.contains_key(&rec.p) {
            return Ok(());
        }
        let writer = match &mut self.writer {
            Some(w) => w,
            None => {
                let file = fs::OpenOptions::new().append(true).open(&self.path)?;
                self.writer.insert(BufWriter::new(file))
            }
        };
        writeln!(writer, "{}\t{}\t{}", rec.p, rec.partition_string(), label)?;
        self.map.insert(rec.p, (partition.clone(), label));
        Ok(())
    }

    pub fn flush(&mut self) -> Result<(), CacheError> {
        if let Some(w) = &mut self.writer {
            w.flush()?;
        }
        Ok(())
    }
}
