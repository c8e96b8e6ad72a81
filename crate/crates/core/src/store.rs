//! On-disk results: one directory per cell holding a JSON manifest and one
//! generator file per class, plus a counts file per length.
//!
//! ```text
//! DIR/n5/cell_2_1/manifest.json
//! DIR/n5/cell_2_1/rep_00000.txt
//! DIR/n5/counts.json
//! ```
//!
//! Manifests are written last, through a temporary file and a rename, so a
//! cell counts as finished only once its manifest exists.

use std::fs;
use std::path::{Path, PathBuf};
use std::time::Duration;

use serde::{Deserialize, Serialize};

use crate::classify::{cells_of_length, duality_check, ClassificationCell, LengthCounts, Method};
use crate::enumeration::closed_form_count;
use crate::equivalence::partition_classes;
use crate::reference;
use crate::format::{format_generator, read_generator_file, GeneratorFile};
use crate::error::{Error, Result};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CellManifest {
    pub n: usize,
    pub k1: usize,
    pub k2: usize,
    pub n_prime: u64,
    pub method: Method,
    /// Generator files relative to the manifest's directory.
    pub representatives: Vec<String>,
    pub elapsed_seconds: f64,
    pub tool_version: String,
    #[serde(default)]
    pub candidates: u64,
    #[serde(default)]
    pub distinct_codes: u64,
}

fn io_error(path: &Path) -> impl FnOnce(std::io::Error) -> Error + '_ {
    move |source| Error::Io { path: path.to_path_buf(), source }
}

fn write_atomic(path: &Path, contents: &str) -> Result<()> {
    let tmp = path.with_extension("tmp");
    fs::write(&tmp, contents).map_err(io_error(&tmp))?;
    fs::rename(&tmp, path).map_err(io_error(path))
}

fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    let mut text = serde_json::to_string_pretty(value).map_err(|source| Error::Json { path: path.to_path_buf(), source })?;
    text.push('\n');
    write_atomic(path, &text)
}

fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T> {
    let text = fs::read_to_string(path).map_err(io_error(path))?;
    serde_json::from_str(&text).map_err(|source| Error::Json { path: path.to_path_buf(), source })
}

pub fn write_counts(path: &Path, counts: &LengthCounts) -> Result<()> {
    write_json(path, counts)
}

pub fn read_counts(path: &Path) -> Result<LengthCounts> {
    read_json(path)
}

#[derive(Clone, Debug)]
pub struct CheckpointStore {
    root: PathBuf,
}

impl CheckpointStore {
    pub fn new(root: impl Into<PathBuf>) -> CheckpointStore {
        CheckpointStore { root: root.into() }
    }

    pub fn root(&self) -> &Path {
        &self.root
    }

    pub fn length_dir(&self, n: usize) -> PathBuf {
        self.root.join(format!("n{n}"))
    }

    pub fn cell_dir(&self, n: usize, k1: usize, k2: usize) -> PathBuf {
        self.length_dir(n).join(format!("cell_{k1}_{k2}"))
    }

    pub fn manifest_path(&self, n: usize, k1: usize, k2: usize) -> PathBuf {
        self.cell_dir(n, k1, k2).join("manifest.json")
    }

    pub fn counts_path(&self, n: usize) -> PathBuf {
        self.length_dir(n).join("counts.json")
    }

    pub fn save_cell(&self, cell: &ClassificationCell) -> Result<PathBuf> {
        let dir = self.cell_dir(cell.n, cell.k1, cell.k2);
        fs::create_dir_all(&dir).map_err(io_error(&dir))?;
        let mut files = Vec::with_capacity(cell.representatives.len());
        for (i, g) in cell.representatives.iter().enumerate() {
            let name = format!("rep_{i:05}.txt");
            write_atomic(&dir.join(&name), &format_generator(g))?;
            files.push(name);
        }
        let manifest = CellManifest {
            n: cell.n,
            k1: cell.k1,
            k2: cell.k2,
            n_prime: cell.n_prime,
            method: cell.method,
            representatives: files,
            elapsed_seconds: cell.elapsed.as_secs_f64(),
            tool_version: TOOL_VERSION.to_string(),
            candidates: cell.candidates,
            distinct_codes: cell.distinct_codes,
        };
        let path = dir.join("manifest.json");
        write_json(&path, &manifest)?;
        Ok(path)
    }

    /// The finished cell, or `None` when no manifest has been written yet.
    pub fn load_cell(&self, n: usize, k1: usize, k2: usize) -> Result<Option<ClassificationCell>> {
        let path = self.manifest_path(n, k1, k2);
        if !path.exists() {
            return Ok(None);
        }
        load_manifest(&path).map(Some)
    }

    pub fn save_counts(&self, counts: &LengthCounts) -> Result<PathBuf> {
        let dir = self.length_dir(counts.n);
        fs::create_dir_all(&dir).map_err(io_error(&dir))?;
        let path = self.counts_path(counts.n);
        write_counts(&path, counts)?;
        Ok(path)
    }

    pub fn load_counts(&self, n: usize) -> Result<Option<LengthCounts>> {
        let path = self.counts_path(n);
        if !path.exists() {
            return Ok(None);
        }
        read_counts(&path).map(Some)
    }

    /// Every finished cell of length `n`, in table order.
    pub fn load_length(&self, n: usize) -> Result<Vec<ClassificationCell>> {
        let mut cells = Vec::new();
        for (k1, k2) in cells_of_length(n) {
            if let Some(cell) = self.load_cell(n, k1, k2)? {
                cells.push(cell);
            }
        }
        Ok(cells)
    }
}

/// Reads a manifest and its generator files, checking that they agree.
pub fn load_manifest(path: &Path) -> Result<ClassificationCell> {
    let manifest: CellManifest = read_json(path)?;
    let invalid = |reason: String| Error::Manifest { path: path.to_path_buf(), reason };
    if manifest.representatives.len() as u64 != manifest.n_prime {
        return Err(invalid(format!(
            "{} generator files for n_prime = {}",
            manifest.representatives.len(),
            manifest.n_prime
        )));
    }
    let dir = path.parent().unwrap_or(Path::new("."));
    let mut representatives = Vec::with_capacity(manifest.representatives.len());
    for file in &manifest.representatives {
        let g = match read_generator_file(&dir.join(file))? {
            GeneratorFile::Standard(g) => g,
            GeneratorFile::Raw { .. } => return Err(invalid(format!("{file} is not in standard form"))),
        };
        let ty = g.code_type();
        if (ty.n, ty.k1, ty.k2) != (manifest.n, manifest.k1, manifest.k2) {
            return Err(invalid(format!("{file} has type ({},{},{})", ty.n, ty.k1, ty.k2)));
        }
        representatives.push(g);
    }
    Ok(ClassificationCell {
        n: manifest.n,
        k1: manifest.k1,
        k2: manifest.k2,
        representatives,
        n_prime: manifest.n_prime,
        elapsed: Duration::try_from_secs_f64(manifest.elapsed_seconds).unwrap_or_default(),
        method: manifest.method,
        candidates: manifest.candidates,
        distinct_codes: manifest.distinct_codes,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckItem {
    pub name: String,
    pub ok: bool,
    pub detail: String,
}

/// Re-verifies stored results for length `n`: every cell present, no
/// representative with a zero coordinate, representatives pairwise
/// inequivalent, counts equal to the closed forms and the published tables,
/// and the duality identity on the stored counts.
pub fn check_length(store: &CheckpointStore, n: usize) -> Result<Vec<CheckItem>> {
    let mut items = Vec::new();
    let mut push = |name: String, ok: bool, detail: String| items.push(CheckItem { name, ok, detail });
    let mut n_prime = Vec::new();
    for (k1, k2) in cells_of_length(n) {
        let label = format!("cell ({n},{k1},{k2})");
        let Some(cell) = store.load_cell(n, k1, k2)? else {
            push(label, false, "missing".into());
            continue;
        };
        n_prime.push((k1, k2, cell.n_prime));
        let zero = cell.representatives.iter().filter(|g| g.has_zero_column()).count();
        let codes = cell.codes();
        let classes = partition_classes(&codes)?.len();
        push(
            format!("{label} representatives"),
            zero == 0 && classes == codes.len(),
            format!("{} stored, {classes} inequivalent, {zero} with a zero coordinate", codes.len()),
        );
        if let Some(expected) = closed_form_count(n, k1, k2) {
            push(format!("{label} closed form"), expected == cell.n_prime, format!("N'={} expected {expected}", cell.n_prime));
        }
        if let Some(expected) = reference::n_prime(n, k1, k2) {
            push(format!("{label} published"), expected == cell.n_prime, format!("N'={} expected {expected}", cell.n_prime));
        }
    }
    let prior = if n > 1 { store.load_counts(n - 1)? } else { None };
    match LengthCounts::extend(n, prior.as_ref(), n_prime) {
        Ok(counts) => {
            if let Some(stored) = store.load_counts(n)? {
                push("stored counts".into(), stored == counts, format!("N'={} N={}", stored.n_prime_total(), stored.n_total()));
            }
            match duality_check(&counts) {
                Ok(report) => push("duality".into(), true, format!("{} cells", report.pairs.len())),
                Err(e) => push("duality".into(), false, e.to_string()),
            }
            if let Some(expected) = reference::n_prime_total(n) {
                let ok = expected == counts.n_prime_total() && reference::n_total(n) == Some(counts.n_total());
                push("published totals".into(), ok, format!("N'={} N={}", counts.n_prime_total(), counts.n_total()));
            }
        }
        Err(e) => push("duality".into(), false, e.to_string()),
    }
    Ok(items)
}
