//! Sweep over the four-generated ideals `(x^d, x^a y^{d-a}, x^b y^{d-b}, y^d)`
//! looking for ideals with `reg R(I) ≠ reg F(I)`.
//!
//! Each canonical triple `(d, a, b)` (the lexicographically smaller of itself
//! and its mirror `(d, d-b, d-a)`) is one work unit. Units are processed in
//! sorted chunks; each finished chunk is appended to the checkpoint file as
//! `d,a,b,r_J,reg_F,status` lines, so the checkpoint is itself sorted and a
//! resumed run reproduces the uninterrupted output exactly.

use std::collections::{BTreeMap, BTreeSet};
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::error::Error as AlgebraError;
use crate::monomial::Monomial;
use crate::regularity::{Analyzer, Cap};
use crate::staircase::IdealSpec;

#[derive(Debug, Error)]
pub enum SearchError {
    #[error("empty range: min degree {min} exceeds max degree {max}")]
    EmptyRange { min: usize, max: usize },

    #[error("degree {0} is below the minimum of 2")]
    DegreeTooSmall(usize),

    #[error("corrupt checkpoint {path} at line {line}: {reason}; refusing to resume")]
    CorruptCheckpoint {
        path: PathBuf,
        line: usize,
        reason: String,
    },

    #[error("mirror of counter-example ({d}, {a}, {b}) is not a counter-example")]
    MirrorMismatch { d: usize, a: usize, b: usize },

    #[error("checkpoint i/o: {0}")]
    Io(#[from] std::io::Error),

    #[error("thread pool: {0}")]
    Pool(String),

    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    True,
    False,
    Unresolved,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::True => "TRUE",
            Status::False => "FALSE",
            Status::Unresolved => "UNRESOLVED",
        }
    }
}

impl std::str::FromStr for Status {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "TRUE" => Ok(Status::True),
            "FALSE" => Ok(Status::False),
            "UNRESOLVED" => Ok(Status::Unresolved),
            other => Err(format!("unknown status {other:?}")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchRecord {
    pub d: usize,
    pub a: usize,
    pub b: usize,
    pub r_j: Option<usize>,
    pub reg_f: Option<usize>,
    pub status: Status,
    pub witness: Option<Monomial>,
    pub elapsed: Duration,
}

impl SearchRecord {
    pub fn key(&self) -> (usize, usize, usize) {
        (self.d, self.a, self.b)
    }

    pub fn spec(&self) -> IdealSpec {
        IdealSpec::new(self.d, vec![self.a, self.b]).expect("records hold valid triples")
    }

    /// `d,a,b,r_J,reg_F,status`; unresolved invariants are left empty.
    pub fn to_line(&self) -> String {
        let opt = |x: Option<usize>| x.map(|v| v.to_string()).unwrap_or_default();
        format!(
            "{},{},{},{},{},{}",
            self.d,
            self.a,
            self.b,
            opt(self.r_j),
            opt(self.reg_f),
            self.status.as_str()
        )
    }

    pub fn parse_line(line: &str) -> Result<SearchRecord, String> {
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != 6 {
            return Err(format!("expected 6 fields, found {}", fields.len()));
        }
        let int = |s: &str, name: &str| {
            s.parse::<usize>()
                .map_err(|_| format!("bad {name} field {s:?}"))
        };
        let opt = |s: &str, name: &str| {
            if s.is_empty() {
                Ok(None)
            } else {
                int(s, name).map(Some)
            }
        };
        let record = SearchRecord {
            d: int(fields[0], "d")?,
            a: int(fields[1], "a")?,
            b: int(fields[2], "b")?,
            r_j: opt(fields[3], "r_J")?,
            reg_f: opt(fields[4], "reg_F")?,
            status: fields[5].parse()?,
            witness: None,
            elapsed: Duration::ZERO,
        };
        if !is_canonical(record.d, record.a, record.b) {
            return Err(format!(
                "({}, {}, {}) is not a canonical triple",
                record.d, record.a, record.b
            ));
        }
        if record.status != Status::Unresolved && (record.r_j.is_none() || record.reg_f.is_none()) {
            return Err("resolved record without r_J/reg_F".into());
        }
        Ok(record)
    }
}

/// JSON detail of a counter-example, using the analysis document's field names.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CounterExample {
    pub degree: usize,
    pub exponents: Vec<usize>,
    pub r_j: usize,
    pub reg_f: usize,
    pub conjecture_holds: bool,
    pub witness: Option<Monomial>,
}

impl CounterExample {
    pub fn from_record(record: &SearchRecord) -> Option<Self> {
        (record.status == Status::False).then(|| CounterExample {
            degree: record.d,
            exponents: vec![record.a, record.b],
            r_j: record.r_j.unwrap_or_default(),
            reg_f: record.reg_f.unwrap_or_default(),
            conjecture_holds: false,
            witness: record.witness,
        })
    }
}

/// `1 ≤ a < b ≤ d-1` and `(a, b) ≤ (d-b, d-a)`.
pub fn is_canonical(d: usize, a: usize, b: usize) -> bool {
    1 <= a && a < b && b < d && (a, b) <= (d - b, d - a)
}

/// Canonical `(a, b)` for one degree, sorted.
pub fn canonical_pairs(d: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for a in 1..d.saturating_sub(1) {
        for b in a + 1..d {
            if is_canonical(d, a, b) {
                out.push((a, b));
            }
        }
    }
    out
}

/// Runs the quick comparison on one triple.
pub fn evaluate(d: usize, a: usize, b: usize, cap: Cap) -> Result<SearchRecord, SearchError> {
    let spec = IdealSpec::new(d, vec![a, b])?;
    let start = Instant::now();
    let outcome = Analyzer::new(&spec).verdict(cap);
    let elapsed = start.elapsed();
    let mut record = SearchRecord {
        d,
        a,
        b,
        r_j: None,
        reg_f: None,
        status: Status::Unresolved,
        witness: None,
        elapsed,
    };
    match outcome {
        Ok(v) => {
            record.r_j = Some(v.r_j);
            record.reg_f = Some(v.reg_f);
            record.status = if v.conjecture_holds {
                Status::True
            } else {
                Status::False
            };
            record.witness = v.witness;
        }
        Err(AlgebraError::CapExceeded { .. } | AlgebraError::ResourceLimit { .. }) => {}
        Err(e) => return Err(e.into()),
    }
    Ok(record)
}

#[derive(Debug, Clone)]
pub struct ScanOptions {
    pub workers: usize,
    pub checkpoint: Option<PathBuf>,
    pub resume: bool,
    /// Triples per checkpoint flush.
    pub flush_every: usize,
    /// Stop after this many newly evaluated triples (rounded up to a chunk).
    pub stop_after: Option<usize>,
    pub cap: Cap,
}

impl Default for ScanOptions {
    fn default() -> Self {
        ScanOptions {
            workers: 1,
            checkpoint: None,
            resume: false,
            flush_every: 1000,
            stop_after: None,
            cap: Cap::Auto,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct DegreeSummary {
    pub degree: usize,
    /// All `(a, b)` with `1 ≤ a < b ≤ d-1`.
    pub pairs: usize,
    /// Canonical triples evaluated.
    pub cases: usize,
    pub counterexamples: usize,
    pub unresolved: usize,
}

#[derive(Debug, Clone)]
pub struct ScanOutcome {
    pub min_degree: usize,
    pub max_degree: usize,
    /// Every evaluated record, sorted by `(d, a, b)`.
    pub records: Vec<SearchRecord>,
    pub per_degree: Vec<DegreeSummary>,
    /// Whether every canonical triple in the range has a record.
    pub complete: bool,
}

impl ScanOutcome {
    pub fn counterexamples(&self) -> impl Iterator<Item = &SearchRecord> {
        self.records.iter().filter(|r| r.status == Status::False)
    }

    pub fn unresolved(&self) -> impl Iterator<Item = &SearchRecord> {
        self.records.iter().filter(|r| r.status == Status::Unresolved)
    }

    /// Deterministic text report: summary, per-degree counts, then the
    /// counter-example and unresolved lines and JSON details.
    pub fn render_report(&self) -> String {
        let mut out = String::new();
        let n_cx = self.counterexamples().count();
        let n_un = self.unresolved().count();
        out.push_str(&format!(
            "degrees {}..={}: {} cases, {} counter-examples, {} unresolved{}\n",
            self.min_degree,
            self.max_degree,
            self.records.len(),
            n_cx,
            n_un,
            if self.complete { "" } else { " (incomplete)" }
        ));
        for s in &self.per_degree {
            out.push_str(&format!(
                "d={} pairs={} cases={} counterexamples={} unresolved={}\n",
                s.degree, s.pairs, s.cases, s.counterexamples, s.unresolved
            ));
        }
        for r in self.counterexamples().chain(self.unresolved()) {
            out.push_str(&r.to_line());
            out.push('\n');
        }
        for r in self.counterexamples() {
            let cx = CounterExample::from_record(r).expect("filtered on FALSE");
            out.push_str(&serde_json::to_string(&cx).expect("plain data serializes"));
            out.push('\n');
        }
        out
    }
}

fn read_checkpoint(
    path: &Path,
    range: (usize, usize),
) -> Result<BTreeMap<(usize, usize, usize), SearchRecord>, SearchError> {
    let mut done = BTreeMap::new();
    let file = match File::open(path) {
        Ok(f) => f,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(done),
        Err(e) => return Err(e.into()),
    };
    let corrupt = |line: usize, reason: String| SearchError::CorruptCheckpoint {
        path: path.to_path_buf(),
        line,
        reason,
    };
    let mut reader = BufReader::new(file);
    let mut buf = String::new();
    let mut lineno = 0;
    loop {
        buf.clear();
        if reader.read_line(&mut buf)? == 0 {
            break;
        }
        lineno += 1;
        let Some(line) = buf.strip_suffix('\n') else {
            return Err(corrupt(lineno, "truncated final line".into()));
        };
        let record = SearchRecord::parse_line(line).map_err(|r| corrupt(lineno, r))?;
        if record.d < range.0 || record.d > range.1 {
            return Err(corrupt(
                lineno,
                format!("degree {} outside requested range", record.d),
            ));
        }
        if done.insert(record.key(), record).is_some() {
            return Err(corrupt(lineno, "duplicate triple".into()));
        }
    }
    Ok(done)
}

/// Evaluates every canonical triple with `min_degree ≤ d ≤ max_degree`.
pub fn scan(min_degree: usize, max_degree: usize, opts: &ScanOptions) -> Result<ScanOutcome, SearchError> {
    if min_degree > max_degree {
        return Err(SearchError::EmptyRange {
            min: min_degree,
            max: max_degree,
        });
    }
    if min_degree < 2 {
        return Err(SearchError::DegreeTooSmall(min_degree));
    }
    let mut done = match (&opts.checkpoint, opts.resume) {
        (Some(path), true) => read_checkpoint(path, (min_degree, max_degree))?,
        _ => BTreeMap::new(),
    };
    let mut writer = match &opts.checkpoint {
        Some(path) => Some(
            OpenOptions::new()
                .create(true)
                .write(true)
                .append(opts.resume)
                .truncate(!opts.resume)
                .open(path)?,
        ),
        None => None,
    };

    // Detail for FALSE records restored from a checkpoint.
    for record in done.values_mut() {
        if record.status == Status::False {
            let fresh = evaluate(record.d, record.a, record.b, opts.cap)?;
            record.witness = fresh.witness;
        }
    }

    let all: Vec<(usize, usize, usize)> = (min_degree..=max_degree)
        .flat_map(|d| canonical_pairs(d).into_iter().map(move |(a, b)| (d, a, b)))
        .collect();
    let pending: Vec<(usize, usize, usize)> =
        all.iter().copied().filter(|k| !done.contains_key(k)).collect();

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.workers.max(1))
        .build()
        .map_err(|e| SearchError::Pool(e.to_string()))?;

    let flush_every = opts.flush_every.max(1);
    let mut evaluated = 0usize;
    for chunk in pending.chunks(flush_every) {
        if opts.stop_after.is_some_and(|limit| evaluated >= limit) {
            break;
        }
        let results: Vec<Result<SearchRecord, SearchError>> = pool.install(|| {
            chunk
                .par_iter()
                .map(|&(d, a, b)| evaluate(d, a, b, opts.cap))
                .collect()
        });
        let mut lines = String::new();
        for result in results {
            let record = result?;
            lines.push_str(&record.to_line());
            lines.push('\n');
            done.insert(record.key(), record);
        }
        if let Some(w) = writer.as_mut() {
            w.write_all(lines.as_bytes())?;
            w.flush()?;
        }
        evaluated += chunk.len();
    }

    for record in done.values().filter(|r| r.status == Status::False) {
        let m = record.spec().mirror();
        let (a, b) = (m.interior()[0], m.interior()[1]);
        if evaluate(record.d, a, b, opts.cap)?.status != Status::False {
            return Err(SearchError::MirrorMismatch {
                d: record.d,
                a: record.a,
                b: record.b,
            });
        }
    }

    let mut per_degree: BTreeMap<usize, DegreeSummary> = (min_degree..=max_degree)
        .map(|d| {
            let p = d.saturating_sub(1) * d.saturating_sub(2) / 2;
            (
                d,
                DegreeSummary {
                    degree: d,
                    pairs: p,
                    ..Default::default()
                },
            )
        })
        .collect();
    for r in done.values() {
        let s = per_degree.get_mut(&r.d).expect("range checked on load");
        s.cases += 1;
        match r.status {
            Status::False => s.counterexamples += 1,
            Status::Unresolved => s.unresolved += 1,
            Status::True => {}
        }
    }
    let keys: BTreeSet<_> = done.keys().copied().collect();
    let complete = all.iter().all(|k| keys.contains(k));
    Ok(ScanOutcome {
        min_degree,
        max_degree,
        records: done.into_values().collect(),
        per_degree: per_degree.into_values().collect(),
        complete,
    })
}
