//! Z4-codes and their standard-form generator matrices.
//!
//! Every code of length `n` is permutation-equivalent to one generated by
//!
//! ```text
//! [ I_k1  A      B  ]
//! [ 0     2I_k2  2D ]
//! ```
//!
//! with `A` and `D` binary. [`StandardGenerator`] holds the `(A, B, D)`
//! triple; [`Z4Code`] holds the explicit, sorted codeword set, which is the
//! ground truth for code identity.
//!
//! # Trivial extensions and zero coordinates
//!
//! A monomial map sends a coordinate that is zero in every codeword to
//! another such coordinate, and a trivial extension has one by construction.
//! Conversely, a code with an identically-zero coordinate is a coordinate
//! permutation away from a trivial extension. So a code is equivalent to a
//! trivial extension exactly when it has an identically-zero coordinate,
//! which is what [`Z4Code::has_zero_coordinate`] tests. For a standard
//! generator the first `k1 + k2` columns carry identity blocks, so the only
//! candidates are zero columns of the stacked `[B; 2D]` block.

use std::fmt;
use std::hash::{Hash, Hasher};

use crate::error::{Error, Result};
use crate::word::{self, Word};
use crate::z4::{Z4Matrix, Z4Vector, Z4};

/// Largest supported code length (two bits per coordinate in a `u32`).
pub const MAX_LENGTH: usize = 16;

/// Length and module type `4^k1 2^k2` of a code.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CodeType {
    pub n: usize,
    pub k1: usize,
    pub k2: usize,
}

impl CodeType {
    pub fn new(n: usize, k1: usize, k2: usize) -> Result<CodeType> {
        if n == 0 {
            return Err(Error::InvalidParameters { n, k1, k2, reason: "length must be at least 1" });
        }
        if n > MAX_LENGTH {
            return Err(Error::LengthTooLarge(n));
        }
        if k1 + k2 > n {
            return Err(Error::InvalidParameters { n, k1, k2, reason: "k1 + k2 exceeds n" });
        }
        Ok(CodeType { n, k1, k2 })
    }

    /// Number of free columns `n - k1 - k2`.
    pub fn ell(&self) -> usize {
        self.n - self.k1 - self.k2
    }

    /// `|C| = 4^k1 * 2^k2`.
    pub fn size(&self) -> u64 {
        1u64 << (2 * self.k1 + self.k2)
    }

    /// Type of the dual code.
    pub fn dual(&self) -> CodeType {
        CodeType { n: self.n, k1: self.ell(), k2: self.k2 }
    }
}

impl fmt::Display for CodeType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} type 4^{} 2^{}", self.n, self.k1, self.k2)
    }
}

/// The `(A, B, D)` blocks of a standard generator matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StandardGenerator {
    code_type: CodeType,
    a: Vec<Vec<u8>>,
    b: Vec<Vec<u8>>,
    d: Vec<Vec<u8>>,
}

impl StandardGenerator {
    /// Builds a generator from its blocks: `a` is `k1 x k2` binary, `b` is
    /// `k1 x ell` over Z4 and `d` is `k2 x ell` binary.
    pub fn new(code_type: CodeType, a: &Z4Matrix, b: &Z4Matrix, d: &Z4Matrix) -> Result<StandardGenerator> {
        let (k1, k2, ell) = (code_type.k1, code_type.k2, code_type.ell());
        let shape = |m: &Z4Matrix, r: usize, c: usize, name: &str| -> Result<()> {
            if (m.rows() == r && m.cols() == c) || (r == 0 || c == 0) && m.rows() * m.cols() == 0 {
                Ok(())
            } else {
                Err(Error::NotStandardForm(format!(
                    "block {name} is {}x{}, expected {r}x{c}",
                    m.rows(),
                    m.cols()
                )))
            }
        };
        shape(a, k1, k2, "A")?;
        shape(b, k1, ell, "B")?;
        shape(d, k2, ell, "D")?;
        if !a.entries_within(&[0, 1]) || !d.entries_within(&[0, 1]) {
            return Err(Error::NotStandardForm("A and D must be (0,1)-matrices".into()));
        }
        let grid = |m: &Z4Matrix, r: usize, c: usize| -> Vec<Vec<u8>> {
            (0..r)
                .map(|i| (0..c).map(|j| m.get(i, j).value()).collect())
                .collect()
        };
        Ok(StandardGenerator {
            code_type,
            a: grid(a, k1, k2),
            b: grid(b, k1, ell),
            d: grid(d, k2, ell),
        })
    }

    /// Builds a generator from raw block entries without re-validating
    /// shapes. Entries are reduced mod 4 (`b`) or mod 2 (`a`, `d`).
    pub(crate) fn from_blocks(code_type: CodeType, a: Vec<Vec<u8>>, b: Vec<Vec<u8>>, d: Vec<Vec<u8>>) -> StandardGenerator {
        debug_assert_eq!(a.len(), code_type.k1);
        debug_assert_eq!(b.len(), code_type.k1);
        debug_assert_eq!(d.len(), code_type.k2);
        StandardGenerator {
            code_type,
            a: a.into_iter().map(|r| r.into_iter().map(|x| x & 1).collect()).collect(),
            b: b.into_iter().map(|r| r.into_iter().map(|x| x & 3).collect()).collect(),
            d: d.into_iter().map(|r| r.into_iter().map(|x| x & 1).collect()).collect(),
        }
    }

    /// Reads the blocks out of a full `(k1 + k2) x n` matrix in standard form.
    pub fn from_matrix(m: &Z4Matrix, k1: usize, k2: usize) -> Result<StandardGenerator> {
        let n = m.cols();
        let code_type = CodeType::new(n, k1, k2)?;
        if m.rows() != k1 + k2 {
            return Err(Error::NotStandardForm(format!(
                "expected {} rows, found {}",
                k1 + k2,
                m.rows()
            )));
        }
        let ell = code_type.ell();
        let bad = |what: &str, r: usize, c: usize| {
            Err(Error::NotStandardForm(format!("{what} at row {}, column {}", r + 1, c + 1)))
        };
        let mut a = vec![vec![0u8; k2]; k1];
        let mut b = vec![vec![0u8; ell]; k1];
        let mut d = vec![vec![0u8; ell]; k2];
        for r in 0..k1 {
            for c in 0..n {
                let x = m.get(r, c).value();
                if c < k1 {
                    if x != u8::from(r == c) {
                        return bad("identity block I_k1 violated", r, c);
                    }
                } else if c < k1 + k2 {
                    if x > 1 {
                        return bad("A entry outside {0,1}", r, c);
                    }
                    a[r][c - k1] = x;
                } else {
                    b[r][c - k1 - k2] = x;
                }
            }
        }
        for (r, d_row) in d.iter_mut().enumerate() {
            let row = k1 + r;
            for c in 0..n {
                let x = m.get(row, c).value();
                if c < k1 {
                    if x != 0 {
                        return bad("zero block violated", row, c);
                    }
                } else if c < k1 + k2 {
                    if x != if c - k1 == r { 2 } else { 0 } {
                        return bad("block 2I_k2 violated", row, c);
                    }
                } else {
                    if x & 1 == 1 {
                        return bad("2D entry outside {0,2}", row, c);
                    }
                    d_row[c - k1 - k2] = x / 2;
                }
            }
        }
        Ok(StandardGenerator { code_type, a, b, d })
    }

    pub fn code_type(&self) -> CodeType {
        self.code_type
    }

    pub fn n(&self) -> usize {
        self.code_type.n
    }

    pub fn a(&self) -> Z4Matrix {
        block_matrix(&self.a, self.code_type.k2)
    }

    pub fn b(&self) -> Z4Matrix {
        block_matrix(&self.b, self.code_type.ell())
    }

    pub fn d(&self) -> Z4Matrix {
        block_matrix(&self.d, self.code_type.ell())
    }

    /// The assembled `(k1 + k2) x n` matrix.
    pub fn matrix(&self) -> Z4Matrix {
        let CodeType { n, k1, k2 } = self.code_type;
        let mut m = Z4Matrix::zeros(k1 + k2, n);
        for r in 0..k1 {
            m.set(r, r, Z4::ONE);
            for (c, &x) in self.a[r].iter().enumerate() {
                m.set(r, k1 + c, Z4::from(x));
            }
            for (c, &x) in self.b[r].iter().enumerate() {
                m.set(r, k1 + k2 + c, Z4::from(x));
            }
        }
        for r in 0..k2 {
            m.set(k1 + r, k1 + r, Z4::TWO);
            for (c, &x) in self.d[r].iter().enumerate() {
                m.set(k1 + r, k1 + k2 + c, Z4::from(2 * x));
            }
        }
        m
    }

    pub fn rows(&self) -> Vec<Z4Vector> {
        self.matrix().row_vectors()
    }

    pub(crate) fn packed_rows(&self) -> Vec<Word> {
        self.rows().iter().map(word::from_vector).collect()
    }

    /// Columns of the stacked `[B; 2D]` block, top to bottom.
    pub fn stacked_columns(&self) -> Vec<Vec<u8>> {
        let CodeType { k1, k2, .. } = self.code_type;
        (0..self.code_type.ell())
            .map(|c| {
                (0..k1)
                    .map(|r| self.b[r][c])
                    .chain((0..k2).map(|r| 2 * self.d[r][c]))
                    .collect()
            })
            .collect()
    }

    /// True when `[B; 2D]` has an all-zero column, i.e. the spanned code has
    /// an identically-zero coordinate.
    pub fn has_zero_column(&self) -> bool {
        self.stacked_columns().iter().any(|c| c.iter().all(|&x| x == 0))
    }
}

fn block_matrix(rows: &[Vec<u8>], cols: usize) -> Z4Matrix {
    let rows: Vec<Vec<i64>> = rows.iter().map(|r| r.iter().map(|&x| x as i64).collect()).collect();
    Z4Matrix::from_rows_with_cols(&rows, cols).expect("blocks are rectangular")
}

impl fmt::Display for StandardGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.matrix())
    }
}

/// A Z4-code held as its sorted codeword set together with an independent
/// generating set.
#[derive(Clone, Debug)]
pub struct Z4Code {
    n: usize,
    words: Vec<Word>,
    gens: Vec<Word>,
    code_type: CodeType,
}

impl PartialEq for Z4Code {
    fn eq(&self, other: &Z4Code) -> bool {
        self.n == other.n && self.words == other.words
    }
}

impl Eq for Z4Code {}

impl Hash for Z4Code {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.words.hash(state);
    }
}

impl Z4Code {
    /// Span of arbitrary rows of length `n`; the type is computed by row
    /// reduction.
    pub fn from_rows(n: usize, rows: &[Z4Vector]) -> Result<Z4Code> {
        CodeType::new(n, 0, 0)?;
        for r in rows {
            if r.len() != n {
                return Err(Error::LengthMismatch { left: n, right: r.len() });
            }
        }
        let ech = echelon(n, rows);
        let gens: Vec<Word> = ech
            .unit_rows
            .iter()
            .chain(&ech.two_rows)
            .map(|(_, r)| word::from_vector(&Z4Vector::from_entries(r.iter().map(|&x| Z4::from(x)).collect())))
            .collect();
        let code_type = CodeType { n, k1: ech.unit_rows.len(), k2: ech.two_rows.len() };
        Ok(Z4Code::from_independent(code_type, gens))
    }

    pub(crate) fn from_independent(code_type: CodeType, gens: Vec<Word>) -> Z4Code {
        let words = word::span_independent(&gens);
        debug_assert_eq!(words.len() as u64, code_type.size());
        Z4Code { n: code_type.n, words, gens, code_type }
    }

    /// The zero code of length `n`.
    pub fn zero(n: usize) -> Result<Z4Code> {
        Ok(Z4Code::from_independent(CodeType::new(n, 0, 0)?, Vec::new()))
    }

    pub fn len(&self) -> usize {
        self.n
    }

    /// Number of codewords.
    pub fn size(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn code_type(&self) -> CodeType {
        self.code_type
    }

    pub(crate) fn words(&self) -> &[Word] {
        &self.words
    }

    pub(crate) fn packed_generators(&self) -> &[Word] {
        &self.gens
    }

    /// Codewords in lexicographic order.
    pub fn codewords(&self) -> Vec<Z4Vector> {
        self.words.iter().map(|&w| word::to_vector(w, self.n)).collect()
    }

    pub fn generators(&self) -> Vec<Z4Vector> {
        self.gens.iter().map(|&w| word::to_vector(w, self.n)).collect()
    }

    pub fn contains(&self, v: &Z4Vector) -> bool {
        v.len() == self.n && self.contains_word(word::from_vector(v))
    }

    pub(crate) fn contains_word(&self, w: Word) -> bool {
        self.words.binary_search(&w).is_ok()
    }

    /// Closure under addition (and hence under scalar multiplication).
    pub fn is_submodule(&self) -> bool {
        self.words.contains(&0)
            && self
                .words
                .iter()
                .all(|&x| self.words.iter().all(|&y| self.contains_word(word::add(x, y))))
    }

    /// `{(c, 0) | c in C}`.
    pub fn trivial_extension(&self) -> Result<Z4Code> {
        let code_type = CodeType::new(self.n + 1, self.code_type.k1, self.code_type.k2)?;
        let gens = self.gens.iter().map(|&g| g << 2).collect();
        Ok(Z4Code::from_independent(code_type, gens))
    }

    /// True when some coordinate is zero in every codeword.
    pub fn has_zero_coordinate(&self) -> bool {
        let support = self.gens.iter().fold(0, |acc, &g| acc | g);
        (0..self.n).any(|i| support & word::coordinate_mask(self.n, i) == 0)
    }

    /// Moves old coordinate `i` to position `dest[i]`.
    pub fn map_coordinates(&self, dest: &[usize]) -> Result<Z4Code> {
        if dest.len() != self.n {
            return Err(Error::LengthMismatch { left: self.n, right: dest.len() });
        }
        let n = self.n;
        let map = |w: Word| {
            (0..n).fold(0, |acc, i| acc | ((word::get(w, n, i) as Word) << word::shift(n, dest[i])))
        };
        Ok(Z4Code::from_independent(self.code_type, self.gens.iter().map(|&g| map(g)).collect()))
    }

    /// The binary code of all codewords reduced mod 2.
    pub fn residue(&self) -> BinaryCode {
        let gens: Vec<u32> = self
            .gens
            .iter()
            .filter(|&&g| word::order(g) == 4)
            .map(|&g| word::residue(g, self.n))
            .collect();
        BinaryCode::from_rows(self.n, gens)
    }
}

/// The set of all `Z4`-linear combinations of the generator's rows.
pub fn span(g: &StandardGenerator) -> Z4Code {
    Z4Code::from_independent(g.code_type, g.packed_rows())
}

struct Echelon {
    unit_rows: Vec<(usize, Vec<u8>)>,
    two_rows: Vec<(usize, Vec<u8>)>,
}

/// Row reduction over Z4: unit pivots first, then pivots equal to 2 on the
/// remaining (all-even) rows. Unit rows end with 1 in their pivot column and
/// 0 in every other pivot column's unit position; two rows are reduced
/// against each other and unit rows carry only 0 or 1 in two-pivot columns.
fn echelon(n: usize, rows: &[Z4Vector]) -> Echelon {
    let mut work: Vec<Vec<u8>> = rows
        .iter()
        .map(|r| r.entries().iter().map(|x| x.value()).collect())
        .collect();
    let sub_multiple = |target: &mut Vec<u8>, src: &[u8], k: u8| {
        for (t, &s) in target.iter_mut().zip(src) {
            *t = (*t + 4 * 4 - k * s) & 3;
        }
    };

    let mut unit_rows: Vec<(usize, Vec<u8>)> = Vec::new();
    while let Some((ri, col)) = work
        .iter()
        .enumerate()
        .find_map(|(ri, r)| r.iter().position(|&x| x & 1 == 1).map(|c| (ri, c)))
    {
        let mut pivot = work.swap_remove(ri);
        if pivot[col] == 3 {
            for x in pivot.iter_mut() {
                *x = (*x * 3) & 3;
            }
        }
        for r in work.iter_mut() {
            let k = r[col];
            sub_multiple(r, &pivot, k);
        }
        for (_, r) in unit_rows.iter_mut() {
            let k = r[col];
            sub_multiple(r, &pivot, k);
        }
        unit_rows.push((col, pivot));
    }

    let mut two_rows: Vec<(usize, Vec<u8>)> = Vec::new();
    while let Some((ri, col)) = work
        .iter()
        .enumerate()
        .find_map(|(ri, r)| r.iter().position(|&x| x == 2).map(|c| (ri, c)))
    {
        let pivot = work.swap_remove(ri);
        for r in work.iter_mut().chain(two_rows.iter_mut().map(|(_, r)| r)) {
            if r[col] == 2 {
                sub_multiple(r, &pivot, 1);
            }
        }
        two_rows.push((col, pivot));
    }
    for (_, top) in unit_rows.iter_mut() {
        for (col, two) in &two_rows {
            if top[*col] >= 2 {
                sub_multiple(top, two, 1);
            }
        }
    }
    debug_assert!(work.iter().all(|r| r.iter().all(|&x| x == 0)));
    debug_assert!(unit_rows.iter().all(|(_, r)| r.len() == n));
    Echelon { unit_rows, two_rows }
}

/// Type `(k1, k2)` of the code spanned by arbitrary rows.
pub fn compute_type(n: usize, rows: &[Z4Vector]) -> Result<CodeType> {
    Ok(Z4Code::from_rows(n, rows)?.code_type())
}

/// A standard generator for a code given by arbitrary rows, after a column
/// reordering.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Normalized {
    pub generator: StandardGenerator,
    /// `coordinate_order[k]` is the original coordinate placed at position `k`.
    pub coordinate_order: Vec<usize>,
}

impl Normalized {
    /// Span of the generator with coordinates moved back to their original
    /// positions.
    pub fn code(&self) -> Z4Code {
        span(&self.generator)
            .map_coordinates(&self.coordinate_order)
            .expect("coordinate order has length n")
    }
}

/// Reduces arbitrary rows to standard form. Unit pivot columns come first,
/// then the pivot columns of the order-2 rows, then the remaining columns in
/// their original order.
pub fn to_standard_form(n: usize, rows: &[Z4Vector]) -> Result<Normalized> {
    CodeType::new(n, 0, 0)?;
    for r in rows {
        if r.len() != n {
            return Err(Error::LengthMismatch { left: n, right: r.len() });
        }
    }
    let ech = echelon(n, rows);
    let mut order: Vec<usize> = ech
        .unit_rows
        .iter()
        .chain(&ech.two_rows)
        .map(|(c, _)| *c)
        .collect();
    let pivots = order.clone();
    order.extend((0..n).filter(|c| !pivots.contains(c)));
    let (k1, k2) = (ech.unit_rows.len(), ech.two_rows.len());
    let permuted: Vec<Vec<i64>> = ech
        .unit_rows
        .iter()
        .chain(&ech.two_rows)
        .map(|(_, r)| order.iter().map(|&c| r[c] as i64).collect())
        .collect();
    let m = Z4Matrix::from_rows_with_cols(&permuted, n)?;
    let generator = StandardGenerator::from_matrix(&m, k1, k2)?;
    Ok(Normalized { generator, coordinate_order: order })
}

/// Generator of the dual code, re-permuted into standard form.
///
/// The dual of `[I A B; 0 2I 2D]` is generated by
/// `[-B^T - D^T A^T, D^T, I; 2A^T, 2I, 0]`; moving the last block of columns
/// to the front gives standard form with `A' = D^T`,
/// `B' = -B^T - D^T A^T` and `D' = A^T`.
pub fn dual(g: &StandardGenerator) -> Normalized {
    let CodeType { n, k1, k2 } = g.code_type;
    let ell = g.code_type.ell();
    let a_new: Vec<Vec<u8>> = (0..ell).map(|i| (0..k2).map(|j| g.d[j][i]).collect()).collect();
    let d_new: Vec<Vec<u8>> = (0..k2).map(|i| (0..k1).map(|j| g.a[j][i]).collect()).collect();
    let b_new: Vec<Vec<u8>> = (0..ell)
        .map(|i| {
            (0..k1)
                .map(|j| {
                    let dt_at: u32 = (0..k2).map(|t| (g.d[t][i] * g.a[j][t]) as u32).sum();
                    ((4 * 4 - g.b[j][i] as u32 - dt_at) & 3) as u8
                })
                .collect()
        })
        .collect();
    let generator = StandardGenerator::from_blocks(CodeType { n, k1: ell, k2 }, a_new, b_new, d_new);
    let coordinate_order = (k1 + k2..n).chain(k1..k1 + k2).chain(0..k1).collect();
    Normalized { generator, coordinate_order }
}

/// Generator `(I A B mod 2)` of the binary residue code.
pub fn residue(g: &StandardGenerator) -> BinaryCode {
    let n = g.n();
    let rows: Vec<u32> = g
        .rows()
        .iter()
        .take(g.code_type.k1)
        .map(|r| word::residue(word::from_vector(r), n))
        .collect();
    BinaryCode::from_rows(n, rows)
}

/// A binary linear code; bit `n - 1 - i` of a word is coordinate `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BinaryCode {
    n: usize,
    generator: Vec<u32>,
    words: Vec<u32>,
}

impl BinaryCode {
    fn from_rows(n: usize, rows: Vec<u32>) -> BinaryCode {
        let mut words = vec![0u32];
        let mut generator = Vec::new();
        for r in rows {
            if words.binary_search(&r).is_ok() {
                continue;
            }
            let extra: Vec<u32> = words.iter().map(|&w| w ^ r).collect();
            words.extend(extra);
            words.sort_unstable();
            generator.push(r);
        }
        BinaryCode { n, generator, words }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn dimension(&self) -> usize {
        self.generator.len()
    }

    /// Generator rows as bit vectors.
    pub fn generator(&self) -> Vec<Vec<u8>> {
        self.generator.iter().map(|&r| self.bits(r)).collect()
    }

    pub fn codewords(&self) -> Vec<Vec<u8>> {
        self.words.iter().map(|&r| self.bits(r)).collect()
    }

    fn bits(&self, w: u32) -> Vec<u8> {
        (0..self.n).map(|i| ((w >> (self.n - 1 - i)) & 1) as u8).collect()
    }

    /// Number of codewords of each Hamming weight `0..=n`.
    pub fn weight_distribution(&self) -> Vec<u64> {
        let mut dist = vec![0; self.n + 1];
        for w in &self.words {
            dist[w.count_ones() as usize] += 1;
        }
        dist
    }
}

impl fmt::Display for BinaryCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.generator() {
            let s: Vec<String> = row.iter().map(u8::to_string).collect();
            writeln!(f, "{}", s.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::z4::inner_product;
    use std::collections::BTreeSet;

    fn v(values: &[i64]) -> Z4Vector {
        Z4Vector::from_values(values)
    }

    fn mat(rows: &[&[i64]], cols: usize) -> Z4Matrix {
        Z4Matrix::from_rows_with_cols(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>(), cols).unwrap()
    }

    fn gen(n: usize, k1: usize, k2: usize, rows: &[&[i64]]) -> StandardGenerator {
        StandardGenerator::from_matrix(&mat(rows, n), k1, k2).unwrap()
    }

    /// All Z4-combinations of `rows`, deduplicated by brute force.
    fn brute_span(rows: &[Z4Vector], n: usize) -> BTreeSet<Vec<u8>> {
        let mut set = BTreeSet::new();
        let total = 4usize.pow(rows.len() as u32);
        for mut idx in 0..total {
            let mut acc = Z4Vector::zeros(n);
            for r in rows {
                acc = acc.add(&r.scale(Z4::from((idx % 4) as u8))).unwrap();
                idx /= 4;
            }
            set.insert(acc.entries().iter().map(|x| x.value()).collect());
        }
        set
    }

    fn as_set(c: &Z4Code) -> BTreeSet<Vec<u8>> {
        c.codewords().iter().map(|w| w.entries().iter().map(|x| x.value()).collect()).collect()
    }

    #[test]
    fn span_examples() {
        let c = span(&gen(2, 1, 0, &[&[1, 1]]));
        assert_eq!(c.codewords(), vec![v(&[0, 0]), v(&[1, 1]), v(&[2, 2]), v(&[3, 3])]);
        let c = span(&gen(1, 0, 1, &[&[2]]));
        assert_eq!(c.codewords(), vec![v(&[0]), v(&[2])]);
        let g = gen(2, 1, 1, &[&[1, 1], &[0, 2]]);
        let c = span(&g);
        assert_eq!(c.size(), 8);
        assert_eq!(as_set(&c), brute_span(&g.rows(), 2));
        assert_eq!(c.code_type(), CodeType { n: 2, k1: 1, k2: 1 });
        assert!(c.is_submodule());
    }

    #[test]
    fn compute_type_examples() {
        let rows = [v(&[2, 0]), v(&[0, 2]), v(&[1, 1])];
        let t = compute_type(2, &rows).unwrap();
        assert_eq!((t.k1, t.k2), (1, 1));
        assert_eq!(brute_span(&rows, 2).len(), 8);
        let t = compute_type(2, &[v(&[0, 0])]).unwrap();
        assert_eq!((t.k1, t.k2), (0, 0));
        let t = compute_type(4, &Z4Matrix::identity(4).row_vectors()).unwrap();
        assert_eq!((t.k1, t.k2), (4, 0));
    }

    #[test]
    fn compute_type_matches_brute_force_span() {
        // deterministic pseudo-random row sets
        let mut state = 0x2545_f491_4f6c_dd1du64;
        let mut next = || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for _ in 0..300 {
            let n = 1 + (next() % 5) as usize;
            let m = 1 + (next() % 4) as usize;
            let rows: Vec<Z4Vector> = (0..m)
                .map(|_| Z4Vector::from_values(&(0..n).map(|_| (next() % 4) as i64).collect::<Vec<_>>()))
                .collect();
            let code = Z4Code::from_rows(n, &rows).unwrap();
            let brute = brute_span(&rows, n);
            assert_eq!(as_set(&code), brute, "rows {rows:?}");
            assert_eq!(code.code_type().size() as usize, brute.len());
            let norm = to_standard_form(n, &rows).unwrap();
            assert_eq!(norm.generator.code_type(), code.code_type());
            assert_eq!(norm.code(), code);
        }
    }

    #[test]
    fn from_matrix_rejects_non_standard() {
        assert!(StandardGenerator::from_matrix(&mat(&[&[1, 2]], 2), 1, 1).is_err());
        assert!(StandardGenerator::from_matrix(&mat(&[&[1, 2], &[0, 1]], 2), 1, 1).is_err());
        assert!(StandardGenerator::from_matrix(&mat(&[&[2, 1]], 2), 0, 1).is_err());
        assert!(StandardGenerator::from_matrix(&mat(&[&[1, 3, 0]], 3), 1, 1).is_err());
        let g = gen(3, 1, 1, &[&[1, 1, 3], &[0, 2, 2]]);
        assert_eq!(g.matrix(), mat(&[&[1, 1, 3], &[0, 2, 2]], 3));
        assert_eq!(g.b(), mat(&[&[3]], 1));
        assert_eq!(g.d(), mat(&[&[1]], 1));
    }

    fn brute_dual(c: &Z4Code) -> BTreeSet<Vec<u8>> {
        let n = c.len();
        let words = c.codewords();
        (0..4usize.pow(n as u32))
            .map(|w| word::to_vector(w as Word, n))
            .filter(|x| words.iter().all(|y| inner_product(x, y).unwrap() == Z4::ZERO))
            .map(|x| x.entries().iter().map(|e| e.value()).collect())
            .collect()
    }

    #[test]
    fn dual_examples() {
        let g = gen(1, 0, 1, &[&[2]]);
        let d = dual(&g);
        assert_eq!(d.code().codewords(), vec![v(&[0]), v(&[2])]);
        assert_eq!(d.generator.code_type(), CodeType { n: 1, k1: 0, k2: 1 });

        let g = gen(5, 2, 1, &[&[1, 0, 1, 3, 2], &[0, 1, 0, 1, 1], &[0, 0, 2, 2, 0]]);
        let d = dual(&g);
        assert_eq!(d.generator.code_type(), CodeType { n: 5, k1: 2, k2: 1 });
        assert_eq!(as_set(&d.code()), brute_dual(&span(&g)));

        let id = StandardGenerator::from_matrix(&Z4Matrix::identity(3), 3, 0).unwrap();
        let d = dual(&id);
        assert_eq!(d.code(), Z4Code::zero(3).unwrap());
    }

    #[test]
    fn dual_rows_are_orthogonal_and_involutive() {
        let g = gen(6, 2, 2, &[&[1, 0, 1, 0, 3, 1], &[0, 1, 1, 1, 2, 0], &[0, 0, 2, 0, 2, 2], &[0, 0, 0, 2, 0, 2]]);
        let d = dual(&g);
        let dual_code = d.code();
        for x in dual_code.codewords() {
            for y in g.rows() {
                assert_eq!(inner_product(&x, &y).unwrap(), Z4::ZERO);
            }
        }
        assert_eq!(span(&g).size() * dual_code.size(), 4usize.pow(6));
        let dd = dual(&d.generator);
        assert_eq!(dd.generator, g);
        let order: Vec<usize> = dd.coordinate_order.iter().map(|&k| d.coordinate_order[k]).collect();
        assert_eq!(order, (0..6).collect::<Vec<_>>());
    }

    #[test]
    fn residue_examples() {
        let g = gen(3, 1, 0, &[&[1, 3, 2]]);
        assert_eq!(residue(&g).generator(), vec![vec![1, 1, 0]]);
        let g = gen(2, 0, 1, &[&[2, 2]]);
        let r = residue(&g);
        assert_eq!(r.dimension(), 0);
        assert_eq!(r.codewords(), vec![vec![0, 0]]);
        let g = gen(4, 2, 1, &[&[1, 0, 1, 3], &[0, 1, 0, 2], &[0, 0, 2, 2]]);
        assert_eq!(residue(&g), span(&g).residue());
    }

    #[test]
    fn trivial_extension_examples() {
        let c = span(&gen(2, 0, 1, &[&[2, 2]]));
        let e = c.trivial_extension().unwrap();
        assert_eq!(e.codewords(), vec![v(&[0, 0, 0]), v(&[2, 2, 0])]);
        assert_eq!(e.code_type().k2, 1);
        assert!(e.has_zero_coordinate());
        assert_eq!(Z4Code::zero(3).unwrap().trivial_extension().unwrap(), Z4Code::zero(4).unwrap());
        let id = span(&StandardGenerator::from_matrix(&Z4Matrix::identity(3), 3, 0).unwrap());
        assert!(!id.has_zero_coordinate());
        assert_eq!(id.trivial_extension().unwrap().size(), id.size());
    }

    #[test]
    fn zero_column_in_stacked_block_gives_zero_coordinate() {
        let g = gen(4, 1, 1, &[&[1, 1, 0, 3], &[0, 2, 0, 2]]);
        assert!(g.has_zero_column());
        let c = span(&g);
        assert!(c.codewords().iter().all(|w| w.get(2) == Z4::ZERO));
        assert!(c.has_zero_coordinate());
    }

    /// Exhaustive check at n <= 4: a code has an identically-zero coordinate
    /// iff it is a coordinate permutation of a trivial extension.
    #[test]
    fn zero_coordinate_iff_trivial_extension_small_n() {
        for n in 2..=4usize {
            let all_vectors: Vec<Z4Vector> = (0..4u32.pow(n as u32)).map(|w| word::to_vector(w, n)).collect();
            let mut seen = std::collections::HashSet::new();
            for a in &all_vectors {
                for b in &all_vectors {
                    let code = Z4Code::from_rows(n, &[a.clone(), b.clone()]).unwrap();
                    if !seen.insert(code.clone()) {
                        continue;
                    }
                    let is_extension = (0..n).any(|z| {
                        // move coordinate z to the end and check the last coordinate of a shortened extension
                        let dest: Vec<usize> = (0..n)
                            .map(|i| if i == z { n - 1 } else if i > z { i - 1 } else { i })
                            .collect();
                        let moved = code.map_coordinates(&dest).unwrap();
                        let shortened: Vec<Z4Vector> = moved
                            .generators()
                            .iter()
                            .map(|g| Z4Vector::from_entries(g.entries()[..n - 1].to_vec()))
                            .collect();
                        Z4Code::from_rows(n - 1, &shortened)
                            .and_then(|s| s.trivial_extension())
                            .map(|e| e == moved)
                            .unwrap()
                    });
                    assert_eq!(code.has_zero_coordinate(), is_extension, "{:?}", code.generators());
                }
            }
        }
    }
}
