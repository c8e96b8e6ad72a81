//! Classification of one cell `(n, k1, k2)` and of whole lengths.
//!
//! A cell is classified by streaming the candidate generators, removing
//! exact duplicates, bucketing the distinct codes by equivalence invariants
//! and reducing each bucket with the monomial search. Only codes without an
//! identically-zero coordinate are kept, so the class count is `N'`.
//!
//! Lengths are assembled cell by cell. Every code of length `n` either has
//! no zero coordinate or is equivalent to the trivial extension of a code of
//! length `n - 1` of the same type, which gives
//! `N(n, k1, k2) = N'(n, k1, k2) + N(n - 1, k1, k2)`.
//! The zero code `(k1, k2) = (0, 0)` is left out of the tables.

use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};
use std::path::PathBuf;
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::code::{span, CodeType, StandardGenerator, Z4Code};
use crate::enumeration::{closed_form_count, closed_form_representatives, enumerate_unfiltered, CandidateSpace};
use crate::equivalence::{bucket_key, reduce_bucket};
use crate::error::{Error, Result};
use crate::store::CheckpointStore;
use crate::weights::{optimal_codes, weight_profile, Metric};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    ClosedForm,
    Exhaustive,
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Method::ClosedForm => "closed_form",
            Method::Exhaustive => "exhaustive",
        })
    }
}

#[derive(Clone, Debug, Default)]
pub struct ClassifyOptions {
    /// Use the closed-form constructions where one applies.
    pub fast: bool,
    /// Worker threads; `None` reads `Z4CLASS_THREADS`, then uses all cores.
    pub threads: Option<usize>,
    /// Wall-clock budget per cell.
    pub time_limit: Option<Duration>,
    /// Persist finished cells here and reuse them on the next run.
    pub checkpoint: Option<PathBuf>,
    /// Print one line per finished cell to stderr.
    pub verbose: bool,
}

impl ClassifyOptions {
    fn thread_count(&self) -> usize {
        self.threads
            .or_else(|| std::env::var("Z4CLASS_THREADS").ok()?.parse().ok())
            .filter(|&t| t > 0)
            .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
    }

    fn run<T: Send>(&self, f: impl FnOnce() -> T + Send) -> T {
        match rayon::ThreadPoolBuilder::new().num_threads(self.thread_count()).build() {
            Ok(pool) => pool.install(f),
            Err(_) => f(),
        }
    }
}

/// The classes of one cell, each given by the standard generator of its
/// smallest code. Classes are sorted by that code's codeword list.
#[derive(Clone, Debug)]
pub struct ClassificationCell {
    pub n: usize,
    pub k1: usize,
    pub k2: usize,
    pub representatives: Vec<StandardGenerator>,
    pub n_prime: u64,
    pub elapsed: Duration,
    pub method: Method,
    /// Candidate generators examined (0 for closed forms).
    pub candidates: u64,
    /// Distinct codes among the candidates.
    pub distinct_codes: u64,
}

impl ClassificationCell {
    pub fn code_type(&self) -> CodeType {
        CodeType { n: self.n, k1: self.k1, k2: self.k2 }
    }

    pub fn codes(&self) -> Vec<Z4Code> {
        self.representatives.iter().map(span).collect()
    }

    pub fn is_complete(&self) -> bool {
        self.representatives.len() as u64 == self.n_prime
    }
}

pub fn classify_cell(n: usize, k1: usize, k2: usize, opts: &ClassifyOptions) -> Result<ClassificationCell> {
    let ty = CodeType::new(n, k1, k2)?;
    if k1 + k2 == 0 {
        return Err(Error::InvalidParameters { n, k1, k2, reason: "k1 + k2 must be at least 1" });
    }
    let start = Instant::now();
    if opts.fast {
        if let Some(reps) = closed_form_representatives(n, k1, k2) {
            return Ok(ClassificationCell {
                n,
                k1,
                k2,
                n_prime: reps.len() as u64,
                representatives: reps,
                elapsed: start.elapsed(),
                method: Method::ClosedForm,
                candidates: 0,
                distinct_codes: 0,
            });
        }
    }
    let space = CandidateSpace::new(n, k1, k2)?;
    let deadline = opts.time_limit.map(|t| start + t);
    let reduced = opts.run(|| {
        let source = space.partitions().into_par_iter().flat_map_iter(|p| space.iter_partition(p));
        reduce_source(ty, source, deadline)
    })?;
    let cell = reduced.into_cell(ty, start.elapsed());
    if let Some(expected) = closed_form_count(n, k1, k2) {
        if expected != cell.n_prime {
            return Err(Error::ClosedFormMismatch { n, k1, k2, exhaustive: cell.n_prime, closed_form: expected });
        }
    }
    Ok(cell)
}

/// Classifies the cell from the unfiltered generator set `S` instead of the
/// filtered candidates. Only feasible for small cells; used to confirm that
/// the filters lose no class.
pub fn classify_cell_unfiltered(n: usize, k1: usize, k2: usize, opts: &ClassifyOptions) -> Result<ClassificationCell> {
    let ty = CodeType::new(n, k1, k2)?;
    let start = Instant::now();
    let deadline = opts.time_limit.map(|t| start + t);
    let source = enumerate_unfiltered(n, k1, k2)?;
    let reduced = opts.run(|| reduce_source(ty, source.par_bridge(), deadline))?;
    Ok(reduced.into_cell(ty, start.elapsed()))
}

/// Reduces an arbitrary list of standard generators of one type to class
/// representatives, dropping codes with a zero coordinate.
pub fn reduce_generators(generators: Vec<StandardGenerator>, opts: &ClassifyOptions) -> Result<ClassificationCell> {
    let ty = generators.first().map(|g| g.code_type()).ok_or(Error::EmptyFamily)?;
    if let Some(g) = generators.iter().find(|g| g.code_type() != ty) {
        let CodeType { n, k1, k2 } = g.code_type();
        return Err(Error::InvalidParameters { n, k1, k2, reason: "generators must share length and type" });
    }
    let start = Instant::now();
    let reduced = opts.run(|| reduce_source(ty, generators.into_par_iter(), None))?;
    Ok(reduced.into_cell(ty, start.elapsed()))
}

struct Reduced {
    classes: Vec<(Z4Code, StandardGenerator)>,
    candidates: u64,
    distinct: u64,
}

impl Reduced {
    fn into_cell(self, ty: CodeType, elapsed: Duration) -> ClassificationCell {
        let representatives: Vec<StandardGenerator> = self.classes.into_iter().map(|(_, g)| g).collect();
        ClassificationCell {
            n: ty.n,
            k1: ty.k1,
            k2: ty.k2,
            n_prime: representatives.len() as u64,
            representatives,
            elapsed,
            method: Method::Exhaustive,
            candidates: self.candidates,
            distinct_codes: self.distinct,
        }
    }
}

fn words_hash(c: &Z4Code) -> u64 {
    let mut h = DefaultHasher::new();
    c.words().hash(&mut h);
    h.finish()
}

/// Index ranges of runs of equal keys in a sorted slice.
fn runs<T>(items: &[(u64, T)]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    let mut start = 0;
    for i in 1..=items.len() {
        if i == items.len() || items[i].0 != items[start].0 {
            out.push((start, i));
            start = i;
        }
    }
    out
}

fn reduce_source(
    ty: CodeType,
    source: impl ParallelIterator<Item = StandardGenerator>,
    deadline: Option<Instant>,
) -> Result<Reduced> {
    let expired = AtomicBool::new(false);
    let out_of_time = || {
        if deadline.is_some_and(|d| Instant::now() > d) {
            expired.store(true, Ordering::Relaxed);
        }
        expired.load(Ordering::Relaxed)
    };
    let incomplete = || Error::Incomplete {
        n: ty.n,
        k1: ty.k1,
        k2: ty.k2,
        reason: "time limit exceeded".into(),
    };

    // Tag every candidate with a hash of its codeword set.
    let seen = AtomicU64::new(0);
    let mut tagged: Vec<(u64, StandardGenerator)> = source
        .filter_map(|g| {
            if out_of_time() {
                return None;
            }
            seen.fetch_add(1, Ordering::Relaxed);
            let code = span(&g);
            (!code.has_zero_coordinate()).then(|| (words_hash(&code), g))
        })
        .collect();
    if expired.load(Ordering::Relaxed) {
        return Err(incomplete());
    }
    tagged.par_sort_unstable();

    // Exact deduplication, keeping the smallest generator of each code.
    let mut keyed: Vec<(u64, StandardGenerator)> = runs(&tagged)
        .into_par_iter()
        .flat_map_iter(|(lo, hi)| {
            let mut kept: Vec<(Z4Code, &StandardGenerator)> = Vec::new();
            for (_, g) in &tagged[lo..hi] {
                let code = span(g);
                if !kept.iter().any(|(c, _)| *c == code) {
                    kept.push((code, g));
                }
            }
            kept.into_iter().map(|(c, g)| (bucket_key(&c), g.clone())).collect::<Vec<_>>()
        })
        .collect();
    drop(tagged);
    let distinct = keyed.len() as u64;
    keyed.par_sort_unstable();

    // Equivalence reduction inside each invariant bucket.
    let mut classes: Vec<(Z4Code, StandardGenerator)> = runs(&keyed)
        .into_par_iter()
        .flat_map_iter(|(lo, hi)| {
            if out_of_time() {
                return Vec::new();
            }
            let codes: Vec<Z4Code> = keyed[lo..hi].iter().map(|(_, g)| span(g)).collect();
            let refs: Vec<&Z4Code> = codes.iter().collect();
            reduce_bucket(&refs)
                .into_iter()
                .map(|group| (codes[group[0]].clone(), keyed[lo + group[0]].1.clone()))
                .collect()
        })
        .collect();
    if expired.load(Ordering::Relaxed) {
        return Err(incomplete());
    }
    classes.par_sort_unstable_by(|a, b| a.0.words().cmp(b.0.words()));
    Ok(Reduced { classes, candidates: seen.into_inner(), distinct })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellCount {
    pub k1: usize,
    pub k2: usize,
    pub n_prime: u64,
    /// `N(n, k1, k2)`, including trivial extensions.
    pub n: u64,
}

/// Counts-only summary of one length; enough to extend the recurrence.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LengthCounts {
    pub n: usize,
    pub cells: Vec<CellCount>,
}

impl LengthCounts {
    pub fn get(&self, k1: usize, k2: usize) -> Option<&CellCount> {
        self.cells.iter().find(|c| (c.k1, c.k2) == (k1, k2))
    }

    /// `N(n, k1, k2)`; the zero code counts once, missing cells count zero.
    pub fn count(&self, k1: usize, k2: usize) -> u64 {
        if (k1, k2) == (0, 0) {
            return 1;
        }
        self.get(k1, k2).map_or(0, |c| c.n)
    }

    pub fn n_prime_total(&self) -> u64 {
        self.cells.iter().map(|c| c.n_prime).sum()
    }

    pub fn n_total(&self) -> u64 {
        self.cells.iter().map(|c| c.n).sum()
    }

    /// Builds the counts of length `n` from its `N'` values and the prior
    /// length's counts.
    pub fn extend(n: usize, prior: Option<&LengthCounts>, n_prime: impl IntoIterator<Item = (usize, usize, u64)>) -> Result<LengthCounts> {
        let prior = match (n, prior) {
            (1, _) => None,
            (_, None) => return Err(Error::MissingPrior(n)),
            (_, Some(p)) if p.n + 1 != n => return Err(Error::PriorMismatch { expected: n - 1, found: p.n }),
            (_, Some(p)) => Some(p),
        };
        let mut cells: Vec<CellCount> = n_prime
            .into_iter()
            .map(|(k1, k2, np)| CellCount { k1, k2, n_prime: np, n: np + prior.map_or(0, |p| p.count(k1, k2)) })
            .collect();
        cells.sort_by_key(|c| cell_order(c.k1, c.k2));
        Ok(LengthCounts { n, cells })
    }
}

/// Table order: by `ell = 2 k1 + k2`, then by `k1`.
pub fn cell_order(k1: usize, k2: usize) -> (usize, usize) {
    (2 * k1 + k2, k1)
}

/// All `(k1, k2)` with `1 <= k1 + k2 <= n`, in table order.
pub fn cells_of_length(n: usize) -> Vec<(usize, usize)> {
    let mut cells: Vec<(usize, usize)> =
        (0..=n).flat_map(|k1| (0..=n - k1).map(move |k2| (k1, k2))).filter(|&(a, b)| a + b > 0).collect();
    cells.sort_by_key(|&(k1, k2)| cell_order(k1, k2));
    cells
}

#[derive(Clone, Debug)]
pub struct ClassificationTable {
    pub n: usize,
    pub cells: Vec<ClassificationCell>,
    pub counts: LengthCounts,
}

impl ClassificationTable {
    pub fn cell(&self, k1: usize, k2: usize) -> Option<&ClassificationCell> {
        self.cells.iter().find(|c| (c.k1, c.k2) == (k1, k2))
    }

    pub fn n_prime_total(&self) -> u64 {
        self.counts.n_prime_total()
    }

    pub fn n_total(&self) -> u64 {
        self.counts.n_total()
    }
}

/// Classifies every cell of length `n`. Finished cells are read from and
/// written to `opts.checkpoint` when set.
pub fn classify_length(n: usize, prior: Option<&LengthCounts>, opts: &ClassifyOptions) -> Result<ClassificationTable> {
    if n >= 2 {
        match prior {
            None => return Err(Error::MissingPrior(n)),
            Some(p) if p.n + 1 != n => return Err(Error::PriorMismatch { expected: n - 1, found: p.n }),
            _ => {}
        }
    }
    let store = opts.checkpoint.as_ref().map(CheckpointStore::new);
    let classify = |&(k1, k2): &(usize, usize)| -> Result<ClassificationCell> {
        if let Some(store) = &store {
            if let Some(cell) = store.load_cell(n, k1, k2)? {
                if opts.verbose {
                    eprintln!("({n},{k1},{k2}) N'={} resumed", cell.n_prime);
                }
                return Ok(cell);
            }
        }
        let cell = classify_cell(n, k1, k2, opts)?;
        if let Some(store) = &store {
            store.save_cell(&cell)?;
        }
        if opts.verbose {
            eprintln!("({n},{k1},{k2}) N'={} {} {:.2}s", cell.n_prime, cell.method, cell.elapsed.as_secs_f64());
        }
        Ok(cell)
    };
    // Largest cells first so the long ones start early.
    let mut order = cells_of_length(n);
    order.sort_by_cached_key(|&(k1, k2)| {
        std::cmp::Reverse(CandidateSpace::new(n, k1, k2).map_or(0, |s| s.filter_report().candidates))
    });
    let mut cells: Vec<ClassificationCell> =
        opts.run(|| order.par_iter().map(classify).collect::<Result<Vec<_>>>())?;
    cells.sort_by_key(|c| cell_order(c.k1, c.k2));
    let counts = LengthCounts::extend(n, prior, cells.iter().map(|c| (c.k1, c.k2, c.n_prime)))?;
    let table = ClassificationTable { n, cells, counts };
    if let Some(store) = &store {
        store.save_counts(&table.counts)?;
    }
    Ok(table)
}

/// Classifies lengths `1..=n` in turn, each one feeding the next.
pub fn classify_up_to(n: usize, opts: &ClassifyOptions) -> Result<Vec<ClassificationTable>> {
    let mut tables: Vec<ClassificationTable> = Vec::new();
    for len in 1..=n {
        let table = classify_length(len, tables.last().map(|t| &t.counts), opts)?;
        tables.push(table);
    }
    Ok(tables)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DualityPair {
    pub k1: usize,
    pub k2: usize,
    pub count: u64,
    pub dual_k1: usize,
    pub dual_k2: usize,
    pub dual_count: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DualityReport {
    pub n: usize,
    pub pairs: Vec<DualityPair>,
}

/// Checks `N(n, k1, k2) = N(n, n - k1 - k2, k2)` for every cell. The dual
/// of `(n, 0)` is the zero code, counted once.
pub fn duality_check(counts: &LengthCounts) -> Result<DualityReport> {
    let n = counts.n;
    let mut pairs = Vec::new();
    for (k1, k2) in cells_of_length(n) {
        let pair = DualityPair {
            k1,
            k2,
            count: counts.count(k1, k2),
            dual_k1: n - k1 - k2,
            dual_k2: k2,
            dual_count: counts.count(n - k1 - k2, k2),
        };
        if pair.count != pair.dual_count {
            return Err(Error::DualityViolation {
                n,
                k1,
                k2,
                count: pair.count,
                dual_k1: pair.dual_k1,
                dual_k2: pair.dual_k2,
                dual_count: pair.dual_count,
            });
        }
        pairs.push(pair);
    }
    Ok(DualityReport { n, pairs })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MetricOptimum {
    pub metric: Metric,
    /// Largest minimum weight in the cell; `None` never occurs for a
    /// nonzero type but is kept for symmetry with the weight profile.
    pub best: Option<u32>,
    /// Indices into the cell's representatives.
    pub representatives: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OptimalityReport {
    pub n: usize,
    pub k1: usize,
    pub k2: usize,
    pub metrics: Vec<MetricOptimum>,
}

/// Optimal minimum weights within a complete cell. Codes with a zero
/// coordinate never beat the cell: replacing that coordinate by a copy of a
/// nonzero one keeps the type and cannot lower any weight.
pub fn optimality_report(cell: &ClassificationCell) -> Result<OptimalityReport> {
    if !cell.is_complete() || cell.representatives.is_empty() {
        return Err(Error::Incomplete {
            n: cell.n,
            k1: cell.k1,
            k2: cell.k2,
            reason: format!("{} representatives for {} classes", cell.representatives.len(), cell.n_prime),
        });
    }
    let codes = cell.codes();
    let mut metrics = Vec::new();
    for metric in Metric::ALL {
        let optimal = optimal_codes(&codes, metric)?;
        let representatives: Vec<usize> = codes
            .iter()
            .enumerate()
            .filter(|(_, c)| optimal.iter().any(|o| std::ptr::eq(*o, *c)))
            .map(|(i, _)| i)
            .collect();
        let best = weight_profile(&codes[representatives[0]]).get(metric);
        metrics.push(MetricOptimum { metric, best, representatives });
    }
    Ok(OptimalityReport { n: cell.n, k1: cell.k1, k2: cell.k2, metrics })
}
