//! Candidate standard generators for one `(n, k1, k2)` cell.
//!
//! Every code of the cell that is not equivalent to a trivial extension is
//! equivalent to the span of some `G(A, B, D)` with
//!
//! 1. the rows of `A` nondecreasing (row and column permutations),
//! 2. `B` in the B-family: either a (0,2)-matrix, or the first row of `B`
//!    holding an entry outside `{0, 2}` has all entries in `{0, 1, 2}`
//!    (column negations),
//! 3. the columns of the stacked `[B; 2D]` nondecreasing (column
//!    permutations),
//! 4. no zero column in `[B; 2D]`.
//!
//! [`Candidates`] generates exactly these matrices. Columns of `[B; 2D]` are
//! produced as nondecreasing index sequences over a sorted alphabet of
//! nonzero stacked columns, so the column order and the zero-column
//! exclusion hold by construction; the B-family condition is a row property
//! and is tracked per row while columns are added.
//!
//! The module also carries the closed-form class counts for the shapes that
//! can be classified by hand, with explicit representatives, and the
//! symmetrized weight enumerator of the one-generator family used for the
//! `(n, n-1, 0)` count.

use serde::{Deserialize, Serialize};

use crate::code::{CodeType, StandardGenerator};
use crate::error::{Error, Result};
use crate::weights::{EnumeratorKind, WeightEnumerator};
use crate::z4::{is_col_sorted, is_row_sorted, Z4Matrix, Z4Vector};

/// All `k1 x k2` (0,1)-matrices with lexicographically nondecreasing rows.
pub fn enumerate_a(k1: usize, k2: usize) -> Vec<Z4Matrix> {
    a_row_sets(k1, k2)
        .into_iter()
        .map(|rows| {
            let rows: Vec<Vec<i64>> = rows.iter().map(|r| r.iter().map(|&x| x as i64).collect()).collect();
            Z4Matrix::from_rows_with_cols(&rows, k2).expect("rectangular")
        })
        .collect()
}

fn a_row_sets(k1: usize, k2: usize) -> Vec<Vec<Vec<u8>>> {
    let values = 1usize << k2;
    let row = |v: usize| (0..k2).map(|c| ((v >> (k2 - 1 - c)) & 1) as u8).collect::<Vec<u8>>();
    multisets(values, k1)
        .into_iter()
        .map(|idx| idx.into_iter().map(row).collect())
        .collect()
}

/// Nondecreasing sequences of length `len` over `0..alphabet`.
fn multisets(alphabet: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for_each_multiset(alphabet, len, |idx| out.push(idx.to_vec()));
    out
}

fn for_each_multiset(alphabet: usize, len: usize, mut f: impl FnMut(&[usize])) {
    if len == 0 {
        f(&[]);
        return;
    }
    if alphabet == 0 {
        return;
    }
    let mut idx = vec![0usize; len];
    loop {
        f(&idx);
        let Some(p) = (0..len).rev().find(|&p| idx[p] + 1 < alphabet) else {
            return;
        };
        let v = idx[p] + 1;
        idx[p..].iter_mut().for_each(|x| *x = v);
    }
}

/// B-family membership.
pub fn in_b_family(b: &Z4Matrix) -> bool {
    (0..b.rows())
        .map(|r| b.row(r))
        .find(|row| row.entries().iter().any(|x| x.is_unit()))
        .is_none_or(|row| row.entries().iter().all(|x| x.value() != 3))
}

/// Stage predicates of the filter chain S ⊇ T ⊇ U ⊇ V.
pub fn in_t(g: &StandardGenerator) -> bool {
    is_row_sorted(&g.a())
}

pub fn in_u(g: &StandardGenerator) -> bool {
    in_t(g) && in_b_family(&g.b())
}

pub fn in_v(g: &StandardGenerator) -> bool {
    in_u(g) && is_col_sorted(&stacked(g))
}

fn stacked(g: &StandardGenerator) -> Z4Matrix {
    let cols = g.stacked_columns();
    let rows = g.code_type().k1 + g.code_type().k2;
    let grid: Vec<Vec<i64>> = (0..rows)
        .map(|r| cols.iter().map(|c| c[r] as i64).collect())
        .collect();
    Z4Matrix::from_rows_with_cols(&grid, cols.len()).expect("rectangular")
}

/// Row state for the B-family condition while columns are appended.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum RowState {
    /// Only 0 and 2 so far.
    Even,
    /// Some unit, no 3.
    Unit,
    /// Contains a 3.
    Three,
}

impl RowState {
    fn push(self, x: u8) -> RowState {
        match (self, x) {
            (_, 3) | (RowState::Three, _) => RowState::Three,
            (_, 1) | (RowState::Unit, _) => RowState::Unit,
            _ => RowState::Even,
        }
    }
}

fn b_family_ok(states: &[RowState]) -> bool {
    states.iter().find(|&&s| s != RowState::Even) != Some(&RowState::Three)
}

/// Candidate generator matrices for one cell.
#[derive(Clone, Debug)]
pub struct CandidateSpace {
    code_type: CodeType,
    a_sets: Vec<Vec<Vec<u8>>>,
    alphabet: Vec<Vec<u8>>,
}

/// A slice of the candidate stream: one `A` block and, when `ell > 0`, one
/// choice of first stacked column.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    pub a_index: usize,
    pub first_column: Option<usize>,
}

impl CandidateSpace {
    pub fn new(n: usize, k1: usize, k2: usize) -> Result<CandidateSpace> {
        let code_type = CodeType::new(n, k1, k2)?;
        if k1 + k2 == 0 {
            return Err(Error::InvalidParameters { n, k1, k2, reason: "the zero code has no candidates" });
        }
        Ok(CandidateSpace { code_type, a_sets: a_row_sets(k1, k2), alphabet: column_alphabet(k1, k2) })
    }

    pub fn code_type(&self) -> CodeType {
        self.code_type
    }

    /// Nonzero stacked columns in lexicographic order. A column whose top
    /// entry is 3 is left out: the first row would then contain a unit and a
    /// 3, which the B-family forbids.
    pub fn alphabet(&self) -> &[Vec<u8>] {
        &self.alphabet
    }

    pub fn partitions(&self) -> Vec<Partition> {
        let firsts: Vec<Option<usize>> = if self.code_type.ell() == 0 {
            vec![None]
        } else {
            (0..self.alphabet.len()).map(Some).collect()
        };
        (0..self.a_sets.len())
            .flat_map(|a_index| firsts.iter().map(move |&first_column| Partition { a_index, first_column }))
            .collect()
    }

    /// All candidates, in order.
    pub fn iter(&self) -> Candidates<'_> {
        Candidates::new(self, None)
    }

    /// The candidates of one partition.
    pub fn iter_partition(&self, part: Partition) -> Candidates<'_> {
        Candidates::new(self, Some(part))
    }

    fn build(&self, a_index: usize, columns: &[usize]) -> StandardGenerator {
        let CodeType { k1, k2, .. } = self.code_type;
        let b = (0..k1)
            .map(|r| columns.iter().map(|&c| self.alphabet[c][r]).collect())
            .collect();
        let d = (0..k2)
            .map(|r| columns.iter().map(|&c| self.alphabet[c][k1 + r] / 2).collect())
            .collect();
        StandardGenerator::from_blocks(self.code_type, self.a_sets[a_index].clone(), b, d)
    }

    /// Stage counts for this cell. `S`, `T` and `U` are counted in closed
    /// form; `V` and the final count are enumerated.
    pub fn filter_report(&self) -> CandidateFilterReport {
        let CodeType { k1, k2, .. } = self.code_type;
        let ell = self.code_type.ell() as u32;
        let pow = |base: u128, e: u32| base.saturating_pow(e);
        let a_all = pow(2, (k1 * k2) as u32);
        let a_sorted = self.a_sets.len() as u128;
        let b_all = pow(4, k1 as u32 * ell);
        let d_all = pow(2, k2 as u32 * ell);
        // (0,2)-matrices, plus: i leading (0,2)-rows, then a {0,1,2}-row with a 1, then anything
        let b_family = pow(2, k1 as u32 * ell).saturating_add(
            (0..k1 as u32)
                .map(|i| {
                    pow(2, ell * i)
                        .saturating_mul(pow(3, ell) - pow(2, ell))
                        .saturating_mul(pow(4, ell * (k1 as u32 - i - 1)))
                })
                .fold(0u128, u128::saturating_add),
        );
        let nonzero_by_len: Vec<u128> = (0..=ell as usize).map(|m| self.count_sequences(m)).collect();
        let after_col_sort = a_sorted * nonzero_by_len.iter().sum::<u128>();
        let after_zero_column = a_sorted * nonzero_by_len[ell as usize];
        CandidateFilterReport {
            n: self.code_type.n,
            k1,
            k2,
            s: a_all.saturating_mul(b_all).saturating_mul(d_all),
            t: a_sorted.saturating_mul(b_all).saturating_mul(d_all),
            u: a_sorted.saturating_mul(b_family).saturating_mul(d_all),
            v: after_col_sort,
            candidates: after_zero_column,
        }
    }

    /// B-family-valid nondecreasing sequences of `len` alphabet columns.
    fn count_sequences(&self, len: usize) -> u128 {
        let mut count = 0u128;
        for_each_multiset(self.alphabet.len(), len, |seq| {
            if b_family_ok(&self.row_states(seq)) {
                count += 1;
            }
        });
        count
    }

    fn row_states(&self, seq: &[usize]) -> Vec<RowState> {
        let k1 = self.code_type.k1;
        let mut states = vec![RowState::Even; k1];
        for &c in seq {
            for (s, &x) in states.iter_mut().zip(&self.alphabet[c][..k1]) {
                *s = s.push(x);
            }
        }
        states
    }
}

fn column_alphabet(k1: usize, k2: usize) -> Vec<Vec<u8>> {
    let rows = k1 + k2;
    let total = 4usize.pow(k1 as u32) << k2;
    let mut cols: Vec<Vec<u8>> = (1..total)
        .map(|mut v| {
            let mut col = vec![0u8; rows];
            for r in (k1..rows).rev() {
                col[r] = 2 * (v & 1) as u8;
                v >>= 1;
            }
            for r in (0..k1).rev() {
                col[r] = (v & 3) as u8;
                v >>= 2;
            }
            col
        })
        .filter(|col| k1 == 0 || col[0] != 3)
        .collect();
    cols.sort();
    cols
}

/// Lazy stream of candidates, optionally restricted to one partition.
pub struct Candidates<'s> {
    space: &'s CandidateSpace,
    a_index: usize,
    a_end: usize,
    columns: Vec<usize>,
    fixed_first: bool,
    started: bool,
    done: bool,
}

impl<'s> Candidates<'s> {
    fn new(space: &'s CandidateSpace, part: Option<Partition>) -> Candidates<'s> {
        let ell = space.code_type.ell();
        let (a_index, a_end, first, fixed_first) = match part {
            Some(p) => (p.a_index, p.a_index + 1, p.first_column.unwrap_or(0), true),
            None => (0, space.a_sets.len(), 0, false),
        };
        let done = a_index >= a_end || (ell > 0 && first >= space.alphabet.len());
        Candidates { space, a_index, a_end, columns: vec![first; ell], fixed_first, started: false, done }
    }

    /// Moves to the next nondecreasing column sequence (or next `A`).
    fn advance(&mut self) {
        let len = self.columns.len();
        let alpha = self.space.alphabet.len();
        let lowest = usize::from(self.fixed_first);
        if let Some(p) = (lowest..len).rev().find(|&p| self.columns[p] + 1 < alpha) {
            let v = self.columns[p] + 1;
            self.columns[p..].iter_mut().for_each(|x| *x = v);
            return;
        }
        self.a_index += 1;
        if self.a_index >= self.a_end {
            self.done = true;
        } else {
            let first = if self.fixed_first { self.columns.first().copied().unwrap_or(0) } else { 0 };
            self.columns.iter_mut().for_each(|x| *x = first);
        }
    }
}

impl Iterator for Candidates<'_> {
    type Item = StandardGenerator;

    fn next(&mut self) -> Option<StandardGenerator> {
        loop {
            if self.done {
                return None;
            }
            if self.started {
                self.advance();
                if self.done {
                    return None;
                }
            }
            self.started = true;
            if b_family_ok(&self.space.row_states(&self.columns)) {
                return Some(self.space.build(self.a_index, &self.columns));
            }
        }
    }
}

/// All candidates of a cell.
pub fn enumerate_candidates(n: usize, k1: usize, k2: usize) -> Result<Vec<StandardGenerator>> {
    Ok(CandidateSpace::new(n, k1, k2)?.iter().collect())
}

/// Every standard generator of the cell with no filtering (the set S).
pub fn enumerate_unfiltered(n: usize, k1: usize, k2: usize) -> Result<impl Iterator<Item = StandardGenerator>> {
    let code_type = CodeType::new(n, k1, k2)?;
    let ell = code_type.ell();
    let a_bits = k1 * k2;
    let b_digits = k1 * ell;
    let d_bits = k2 * ell;
    let total: u64 = 1u64
        .checked_shl((a_bits + 2 * b_digits + d_bits) as u32)
        .filter(|_| a_bits + 2 * b_digits + d_bits < 64)
        .ok_or(Error::InvalidParameters { n, k1, k2, reason: "unfiltered space too large to enumerate" })?;
    Ok((0..total).map(move |mut v| {
        let mut take = |bits: u32| {
            let x = (v & ((1 << bits) - 1)) as u8;
            v >>= bits;
            x
        };
        let a = (0..k1).map(|_| (0..k2).map(|_| take(1)).collect()).collect();
        let b = (0..k1).map(|_| (0..ell).map(|_| take(2)).collect()).collect();
        let d = (0..k2).map(|_| (0..ell).map(|_| take(1)).collect()).collect();
        StandardGenerator::from_blocks(code_type, a, b, d)
    }))
}

/// Sizes of the filter stages for one cell.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CandidateFilterReport {
    pub n: usize,
    pub k1: usize,
    pub k2: usize,
    /// All standard generators.
    pub s: u128,
    /// After sorting the rows of `A`.
    pub t: u128,
    /// After restricting `B` to the B-family.
    pub u: u128,
    /// After sorting the columns of `[B; 2D]`.
    pub v: u128,
    /// After removing zero columns of `[B; 2D]`.
    pub candidates: u128,
}

impl CandidateFilterReport {
    pub fn is_monotone(&self) -> bool {
        self.s >= self.t && self.t >= self.u && self.u >= self.v && self.v >= self.candidates
    }
}

/// Number of classes for the shapes with a closed form, or `None`.
pub fn closed_form_count(n: usize, k1: usize, k2: usize) -> Option<u64> {
    let matches = closed_form_matches(n, k1, k2);
    let first = *matches.first()?;
    debug_assert!(matches.iter().all(|&m| m == first), "closed forms disagree at ({n},{k1},{k2})");
    Some(first)
}

/// Values of every closed form matching the cell (several can match at
/// small `n`).
pub fn closed_form_matches(n: usize, k1: usize, k2: usize) -> Vec<u64> {
    if n == 0 || k1 + k2 == 0 || k1 + k2 > n {
        return Vec::new();
    }
    let n64 = n as u64;
    let mut out = Vec::new();
    if (k1, k2) == (n, 0) || (k1, k2) == (0, n) || (k1, k2) == (0, 1) {
        out.push(1);
    }
    if k2 == 1 && k1 + 1 == n {
        out.push(n64);
    }
    if k1 == 1 && k2 + 1 == n {
        out.push(n64);
    }
    if (k1, k2) == (1, 0) {
        out.push(n64);
    }
    if k1 == 0 && k2 + 1 == n {
        out.push(n64 - 1);
    }
    if k2 == 0 && k1 + 1 == n {
        out.push(n64 * (n64 + 1) / 2 - 1);
    }
    out
}

/// Explicit pairwise-inequivalent representatives for the closed-form
/// shapes, in the same order as the constructions they come from.
pub fn closed_form_representatives(n: usize, k1: usize, k2: usize) -> Option<Vec<StandardGenerator>> {
    closed_form_count(n, k1, k2)?;
    let ty = CodeType::new(n, k1, k2).ok()?;
    let ones = |len: usize, m: usize| -> Vec<u8> { (0..len).map(|i| u8::from(i >= len - m)).collect() };
    let column = |v: &[u8]| -> Vec<Vec<u8>> { v.iter().map(|&x| vec![x]).collect() };
    let build = |a: Vec<Vec<u8>>, b: Vec<Vec<u8>>, d: Vec<Vec<u8>>| StandardGenerator::from_blocks(ty, a, b, d);
    let reps = if (k1, k2) == (n, 0) || (k1, k2) == (0, n) {
        vec![build(vec![vec![]; k1], vec![vec![]; k1], vec![vec![]; k2])]
    } else if (k1, k2) == (0, 1) {
        vec![build(vec![], vec![], vec![vec![1; n - 1]])]
    } else if k2 == 1 && k1 + 1 == n {
        // [I a; 0 2] with a = (0..0 1..1)
        (0..n).map(|m| build(column(&ones(n - 1, m)), vec![vec![]; k1], vec![vec![]])).collect()
    } else if k1 == 1 && k2 + 1 == n {
        // [1 a; 0 2I]
        (0..n).map(|m| build(vec![ones(n - 1, m)], vec![vec![]], vec![vec![]; k2])).collect()
    } else if (k1, k2) == (1, 0) {
        // (1 a) with a in {1,2}^(n-1), m ones
        (0..n)
            .map(|m| build(vec![vec![]], vec![(0..n - 1).map(|i| if i < m { 1 } else { 2 }).collect()], vec![]))
            .collect()
    } else if k1 == 0 && k2 + 1 == n {
        // [2I 2a] with a nonzero
        (1..n).map(|m| build(vec![], vec![], column(&ones(n - 1, m)))).collect()
    } else {
        // [I a], a = 3 * (0^m0 1^t 2^r): the dual of span(0^m0 1^t 2^r 1)
        let mut reps = Vec::new();
        for m0 in 0..=n - 2 {
            for t in 0..=n - 1 - m0 {
                let a: Vec<u8> = (0..n - 1)
                    .map(|i| if i < m0 { 0 } else if i < m0 + t { 3 } else { 2 })
                    .collect();
                reps.push(build(vec![vec![]; k1], column(&a), vec![]));
            }
        }
        reps
    };
    Some(reps)
}

/// `(0^m0, 1^(m1-1), 2^(n-m0-m1), 1)`: the generator of the one-word code
/// whose symmetrized enumerator is [`special_swe`].
pub fn special_vector(n: usize, m0: usize, m1: usize) -> Result<Z4Vector> {
    check_special(n, m0, m1)?;
    let mut v = vec![0i64; n];
    for (i, x) in v.iter_mut().enumerate().take(n - 1) {
        *x = if i < m0 {
            0
        } else if i < m0 + m1 - 1 {
            1
        } else {
            2
        };
    }
    v[n - 1] = 1;
    Ok(Z4Vector::from_values(&v))
}

fn check_special(n: usize, m0: usize, m1: usize) -> Result<()> {
    if n < 2 || m0 > n - 2 || m1 == 0 || m0 + m1 > n {
        return Err(Error::InvalidParameters {
            n,
            k1: m0,
            k2: m1,
            reason: "need m0 <= n - 2 and 1 <= m1 <= n - m0",
        });
    }
    Ok(())
}

/// `x^n + 2 x^m0 y^m1 z^(n-m0-m1) + x^(n-m1) z^m1`, where `m0` counts zeros
/// and `m1` counts units (including the trailing 1) of [`special_vector`].
pub fn special_swe(n: usize, m0: usize, m1: usize) -> Result<WeightEnumerator> {
    check_special(n, m0, m1)?;
    let (n32, m0, m1) = (n as u32, m0 as u32, m1 as u32);
    Ok(WeightEnumerator::from_terms(
        EnumeratorKind::Symmetrized,
        [
            (vec![n32, 0, 0], 1),
            (vec![m0, m1, n32 - m0 - m1], 2),
            (vec![n32 - m1, 0, m1], 1),
        ],
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::span;
    use crate::weights::enumerator;
    use std::collections::BTreeSet;

    fn mat(rows: &[&[i64]]) -> Z4Matrix {
        Z4Matrix::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn enumerate_a_examples() {
        assert_eq!(enumerate_a(1, 1), vec![mat(&[&[0]]), mat(&[&[1]])]);
        let two_one = enumerate_a(2, 1);
        assert_eq!(two_one, vec![mat(&[&[0], &[0]]), mat(&[&[0], &[1]]), mat(&[&[1], &[1]])]);
        // oracle: filter all four 2x1 matrices
        let brute = (0..4)
            .map(|v| mat(&[&[(v >> 1) & 1], &[v & 1]]))
            .filter(is_row_sorted)
            .count();
        assert_eq!(brute, 3);
        let empty = enumerate_a(0, 3);
        assert_eq!(empty.len(), 1);
        assert_eq!(empty[0].rows(), 0);
        assert_eq!(enumerate_a(3, 0).len(), 1);
    }

    #[test]
    fn b_family_examples() {
        assert!(in_b_family(&mat(&[&[0]])));
        assert!(in_b_family(&mat(&[&[2]])));
        assert!(in_b_family(&mat(&[&[1]])));
        assert!(!in_b_family(&mat(&[&[3]])));
        assert!(in_b_family(&Z4Matrix::zeros(2, 3)));
        assert!(!in_b_family(&mat(&[&[3, 0], &[1, 0]])));
        assert!(in_b_family(&mat(&[&[2, 0], &[1, 2], &[3, 3]])));
        assert!(!in_b_family(&mat(&[&[2, 0], &[1, 3]])));
    }

    #[test]
    fn candidates_for_3_1_1() {
        let cands = enumerate_candidates(3, 1, 1).unwrap();
        assert_eq!(cands.len(), 10);
        let report = CandidateSpace::new(3, 1, 1).unwrap().filter_report();
        assert_eq!(report.candidates, 10);
        assert!(cands.iter().all(|g| in_v(g) && !g.has_zero_column()));
    }

    #[test]
    fn full_rank_cell_has_identity_only() {
        let cands = enumerate_candidates(4, 4, 0).unwrap();
        assert_eq!(cands.len(), 1);
        assert_eq!(cands[0].matrix(), Z4Matrix::identity(4));
    }

    #[test]
    fn zero_type_rejected() {
        assert!(CandidateSpace::new(3, 0, 0).is_err());
        assert!(CandidateSpace::new(3, 2, 2).is_err());
    }

    /// Brute force over S with the stage predicates agrees with the
    /// generator and with the report counts.
    #[test]
    fn generator_matches_filtered_unfiltered_space() {
        for n in 1..=4 {
            for k1 in 0..=n {
                for k2 in 0..=n - k1 {
                    if k1 + k2 == 0 {
                        continue;
                    }
                    let all: Vec<StandardGenerator> = enumerate_unfiltered(n, k1, k2).unwrap().collect();
                    let t = all.iter().filter(|g| in_t(g)).count() as u128;
                    let u = all.iter().filter(|g| in_u(g)).count() as u128;
                    let v: Vec<&StandardGenerator> = all.iter().filter(|g| in_v(g)).collect();
                    let final_set: BTreeSet<StandardGenerator> =
                        v.iter().filter(|g| !g.has_zero_column()).map(|g| (*g).clone()).collect();
                    let space = CandidateSpace::new(n, k1, k2).unwrap();
                    let generated: Vec<StandardGenerator> = space.iter().collect();
                    let generated_set: BTreeSet<StandardGenerator> = generated.iter().cloned().collect();
                    assert_eq!(generated.len(), generated_set.len(), "duplicates at ({n},{k1},{k2})");
                    assert_eq!(generated_set, final_set, "({n},{k1},{k2})");
                    let report = space.filter_report();
                    assert_eq!(report.s, all.len() as u128);
                    assert_eq!(report.t, t);
                    assert_eq!(report.u, u);
                    assert_eq!(report.v, v.len() as u128);
                    assert_eq!(report.candidates, final_set.len() as u128);
                    assert!(report.is_monotone());
                    let by_partition: usize = space.partitions().into_iter().map(|p| space.iter_partition(p).count()).sum();
                    assert_eq!(by_partition, generated.len());
                }
            }
        }
    }

    #[test]
    fn stage_filters_are_idempotent() {
        let all: Vec<StandardGenerator> = enumerate_unfiltered(4, 2, 1).unwrap().collect();
        for pred in [in_t, in_u, in_v] {
            let once: Vec<&StandardGenerator> = all.iter().filter(|g| pred(g)).collect();
            let twice: Vec<&&StandardGenerator> = once.iter().filter(|g| pred(g)).collect();
            assert_eq!(once.len(), twice.len());
        }
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(closed_form_count(6, 5, 0), Some(20));
        assert_eq!(closed_form_count(4, 0, 3), Some(3));
        assert_eq!(closed_form_count(5, 4, 1), Some(5));
        assert_eq!(closed_form_count(5, 2, 1), None);
        assert_eq!(closed_form_count(3, 0, 0), None);
        assert_eq!(closed_form_count(1, 1, 0), Some(1));
    }

    #[test]
    fn overlapping_closed_forms_agree() {
        for n in 1..=7 {
            for k1 in 0..=n {
                for k2 in 0..=n - k1 {
                    let m = closed_form_matches(n, k1, k2);
                    assert!(m.windows(2).all(|w| w[0] == w[1]), "({n},{k1},{k2}) {m:?}");
                }
            }
        }
    }

    #[test]
    fn closed_form_representatives_have_right_shape() {
        for n in 1..=6 {
            for k1 in 0..=n {
                for k2 in 0..=n - k1 {
                    let Some(reps) = closed_form_representatives(n, k1, k2) else { continue };
                    assert_eq!(reps.len() as u64, closed_form_count(n, k1, k2).unwrap(), "({n},{k1},{k2})");
                    for g in &reps {
                        assert_eq!(g.code_type(), CodeType { n, k1, k2 });
                        assert!(!span(g).has_zero_coordinate(), "({n},{k1},{k2}) {g}");
                    }
                }
            }
        }
    }

    #[test]
    fn special_swe_examples() {
        assert_eq!(special_swe(3, 1, 1).unwrap().to_string(), "x^3 + x^2*z + 2*x*y*z");
        assert_eq!(special_swe(2, 0, 1).unwrap().to_string(), "x^2 + x*z + 2*y*z");
        assert_eq!(special_vector(3, 1, 1).unwrap(), Z4Vector::from_values(&[0, 2, 1]));
        assert!(special_swe(3, 2, 1).is_err());
        assert!(special_swe(3, 0, 0).is_err());
        assert!(special_swe(3, 1, 3).is_err());
    }

    #[test]
    fn special_swe_matches_span_small() {
        for n in 2..=5 {
            for m0 in 0..=n - 2 {
                for m1 in 1..=n - m0 {
                    let v = special_vector(n, m0, m1).unwrap();
                    let code = crate::code::Z4Code::from_rows(n, &[v]).unwrap();
                    assert_eq!(enumerator(&code, EnumeratorKind::Symmetrized), special_swe(n, m0, m1).unwrap());
                }
            }
        }
    }
}
