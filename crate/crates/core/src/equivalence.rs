//! Monomial equivalence of Z4-codes.
//!
//! Two codes are equivalent when one is obtained from the other by negating
//! some coordinates and permuting them. [`are_equivalent`] decides this with
//! a backtracking search that fixes the image of one source coordinate at a
//! time and prunes with
//!
//! * per-coordinate signatures: for coordinate `j`, the number of codewords
//!   with each symbol class (`0`, unit, `2`) at `j` and each overall
//!   composition `(n0, n1 + n3, n2)`;
//! * pairwise signatures: joint symbol-class counts for ordered coordinate
//!   pairs;
//! * projection checks: the images of the source generators, restricted to
//!   the coordinates assigned so far, must lie in the target's projection
//!   onto the same coordinates, and both projections must have equal size.
//!
//! All three are monomial invariants, so pruning never discards a valid map.

use std::collections::hash_map::DefaultHasher;
use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;

use crate::code::Z4Code;
use crate::error::{Error, Result};
use crate::weights::{enumerator, EnumeratorKind, WeightEnumerator};
use crate::word::{self, Word};
use crate::z4::{Z4Vector, Z4};

/// A coordinate permutation combined with sign changes.
///
/// Acts on `x` by `y[perm[i]] = sign[i] * x[i]`: signs are applied first,
/// then coordinates move.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    perm: Vec<usize>,
    negate: Vec<bool>,
}

impl Monomial {
    pub fn identity(n: usize) -> Monomial {
        Monomial { perm: (0..n).collect(), negate: vec![false; n] }
    }

    /// `perm` is 0-based one-line notation; `negate[i]` flips the sign of
    /// source coordinate `i`.
    pub fn new(perm: Vec<usize>, negate: Vec<bool>) -> Result<Monomial> {
        let n = perm.len();
        if negate.len() != n {
            return Err(Error::LengthMismatch { left: n, right: negate.len() });
        }
        let mut seen = vec![false; n];
        for &p in &perm {
            if p >= n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::Parse { line: 1, message: format!("{perm:?} is not a permutation") });
            }
        }
        Ok(Monomial { perm, negate })
    }

    pub fn len(&self) -> usize {
        self.perm.len()
    }

    pub fn is_empty(&self) -> bool {
        self.perm.is_empty()
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn negations(&self) -> &[bool] {
        &self.negate
    }

    pub fn apply_vector(&self, x: &Z4Vector) -> Result<Z4Vector> {
        if x.len() != self.len() {
            return Err(Error::LengthMismatch { left: self.len(), right: x.len() });
        }
        let mut y = vec![Z4::ZERO; x.len()];
        for (i, &xi) in x.entries().iter().enumerate() {
            y[self.perm[i]] = if self.negate[i] { -xi } else { xi };
        }
        Ok(Z4Vector::from_entries(y))
    }

    pub(crate) fn apply_word(&self, w: Word) -> Word {
        let n = self.len();
        (0..n).fold(0, |acc, i| {
            let v = word::get(w, n, i);
            let v = if self.negate[i] { (4 - v) & 3 } else { v };
            acc | ((v as Word) << word::shift(n, self.perm[i]))
        })
    }

    /// `self.then(other)` applies `self` first, then `other`.
    pub fn then(&self, other: &Monomial) -> Monomial {
        let perm = self.perm.iter().map(|&p| other.perm[p]).collect();
        let negate = (0..self.len()).map(|i| self.negate[i] ^ other.negate[self.perm[i]]).collect();
        Monomial { perm, negate }
    }

    pub fn inverse(&self) -> Monomial {
        let n = self.len();
        let mut perm = vec![0; n];
        let mut negate = vec![false; n];
        for i in 0..n {
            perm[self.perm[i]] = i;
            negate[self.perm[i]] = self.negate[i];
        }
        Monomial { perm, negate }
    }
}

/// `perm=3 1 2; signs=+-+` with a 1-based permutation.
impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let perm: Vec<String> = self.perm.iter().map(|p| (p + 1).to_string()).collect();
        let signs: String = self.negate.iter().map(|&n| if n { '-' } else { '+' }).collect();
        write!(f, "perm={}; signs={}", perm.join(" "), signs)
    }
}

impl FromStr for Monomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Monomial> {
        let bad = |message: String| Error::Parse { line: 1, message };
        let (perm_part, sign_part) = s
            .split_once(';')
            .ok_or_else(|| bad("expected `perm=...; signs=...`".into()))?;
        let perm_text = perm_part
            .trim()
            .strip_prefix("perm=")
            .ok_or_else(|| bad("missing `perm=`".into()))?;
        let sign_text = sign_part
            .trim()
            .strip_prefix("signs=")
            .ok_or_else(|| bad("missing `signs=`".into()))?;
        let perm = perm_text
            .split_whitespace()
            .map(|t| match t.parse::<usize>() {
                Ok(p) if p >= 1 => Ok(p - 1),
                _ => Err(bad(format!("bad permutation entry `{t}`"))),
            })
            .collect::<Result<Vec<_>>>()?;
        let negate = sign_text
            .chars()
            .map(|c| match c {
                '+' => Ok(false),
                '-' => Ok(true),
                _ => Err(bad(format!("bad sign `{c}`"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Monomial::new(perm, negate)
    }
}

pub fn apply_monomial(c: &Z4Code, p: &Monomial) -> Result<Z4Code> {
    if p.len() != c.len() {
        return Err(Error::LengthMismatch { left: c.len(), right: p.len() });
    }
    let gens = c.packed_generators().iter().map(|&g| p.apply_word(g)).collect();
    Ok(Z4Code::from_independent(c.code_type(), gens))
}

/// Cheap equivalence invariants used to bucket codes before searching.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Fingerprint {
    pub hamming_enum: WeightEnumerator,
    pub lee_enum: WeightEnumerator,
    /// Sorted per-coordinate counts `(zeros, units, twos)`.
    pub column_profile: Vec<[u32; 3]>,
}

pub fn fingerprint(c: &Z4Code) -> Fingerprint {
    let n = c.len();
    let mut columns = vec![[0u32; 3]; n];
    for &w in c.words() {
        for (i, col) in columns.iter_mut().enumerate() {
            col[symbol_class(word::get(w, n, i))] += 1;
        }
    }
    columns.sort_unstable();
    Fingerprint {
        hamming_enum: enumerator(c, EnumeratorKind::Hamming),
        lee_enum: enumerator(c, EnumeratorKind::Lee),
        column_profile: columns,
    }
}

/// 0 for `0`, 1 for a unit, 2 for `2`; preserved by negation.
#[inline]
fn symbol_class(v: u8) -> usize {
    match v {
        0 => 0,
        2 => 2,
        _ => 1,
    }
}

/// Search data for one code: coordinate signatures and a cache of
/// projections onto coordinate subsets.
pub(crate) struct Prepared<'a> {
    code: &'a Z4Code,
    n: usize,
    col_sig: Vec<Vec<u32>>,
    pair_sig: Vec<[u32; 9]>,
    unit_col: Vec<bool>,
    projections: HashMap<u32, Vec<Word>>,
}

impl<'a> Prepared<'a> {
    pub(crate) fn new(code: &'a Z4Code) -> Prepared<'a> {
        let n = code.len();
        let stride = (n + 1) * (n + 1);
        let mut col_sig = vec![vec![0u32; 3 * stride]; n];
        let mut pair_sig = vec![[0u32; 9]; n * n];
        let mut classes = vec![0usize; n];
        for &w in code.words() {
            let [n0, n1, _, n3] = word::symbol_counts(w, n);
            let comp = n0 as usize * (n + 1) + (n1 + n3) as usize;
            for (i, class) in classes.iter_mut().enumerate() {
                *class = symbol_class(word::get(w, n, i));
                col_sig[i][*class * stride + comp] += 1;
            }
            for i in 0..n {
                for j in 0..n {
                    pair_sig[i * n + j][classes[i] * 3 + classes[j]] += 1;
                }
            }
        }
        let unit_col = col_sig.iter().map(|s| s[stride..2 * stride].iter().any(|&c| c > 0)).collect();
        Prepared { code, n, col_sig, pair_sig, unit_col, projections: HashMap::new() }
    }

    /// Hash of the sorted coordinate and pair signatures; equal for
    /// equivalent codes.
    pub(crate) fn invariant_key(&self) -> u64 {
        let mut cols = self.col_sig.clone();
        cols.sort_unstable();
        let mut pairs: Vec<[u32; 9]> = (0..self.n)
            .flat_map(|i| (0..self.n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| self.pair_sig[i * self.n + j])
            .collect();
        pairs.sort_unstable();
        let mut h = DefaultHasher::new();
        cols.hash(&mut h);
        pairs.hash(&mut h);
        h.finish()
    }

    fn projection(&mut self, coords: u32) -> &[Word] {
        let (n, words) = (self.n, self.code.words());
        self.projections.entry(coords).or_insert_with(|| {
            let mask = (0..n)
                .filter(|i| coords >> i & 1 == 1)
                .fold(0, |acc, i| acc | word::coordinate_mask(n, i));
            let mut proj: Vec<Word> = words.iter().map(|&w| w & mask).collect();
            proj.sort_unstable();
            proj.dedup();
            proj
        })
    }
}

struct Search<'s, 'a, 'b> {
    target: &'s mut Prepared<'a>,
    source: &'s mut Prepared<'b>,
    n: usize,
    order: Vec<usize>,
    compatible: Vec<Vec<usize>>,
    gens: Vec<Word>,
    images: Vec<Word>,
    perm: Vec<usize>,
    negate: Vec<bool>,
}

impl Search<'_, '_, '_> {
    fn dfs(&mut self, depth: usize, src_coords: u32, tgt_coords: u32) -> bool {
        if depth == self.n {
            return true;
        }
        let n = self.n;
        let i = self.order[depth];
        let src_next = src_coords | 1 << i;
        let src_size = self.source.projection(src_next).len();
        let signs: &[bool] = if self.source.unit_col[i] { &[false, true] } else { &[false] };
        for t in 0..self.compatible[i].len() {
            let j = self.compatible[i][t];
            if tgt_coords >> j & 1 == 1 {
                continue;
            }
            let pairs_ok = self.order[..depth].iter().all(|&prev| {
                self.source.pair_sig[i * n + prev] == self.target.pair_sig[j * n + self.perm[prev]]
            });
            if !pairs_ok {
                continue;
            }
            let tgt_next = tgt_coords | 1 << j;
            if self.target.projection(tgt_next).len() != src_size {
                continue;
            }
            let clear = !word::coordinate_mask(n, j);
            for &neg in signs {
                for (img, &g) in self.images.iter_mut().zip(&self.gens) {
                    let v = word::get(g, n, i);
                    let v = if neg { (4 - v) & 3 } else { v };
                    *img |= (v as Word) << word::shift(n, j);
                }
                let proj = self.target.projection(tgt_next);
                if self.images.iter().all(|img| proj.binary_search(img).is_ok()) {
                    self.perm[i] = j;
                    self.negate[i] = neg;
                    if self.dfs(depth + 1, src_next, tgt_next) {
                        return true;
                    }
                }
                for img in self.images.iter_mut() {
                    *img &= clear;
                }
            }
        }
        false
    }
}

/// Searches for `P` with `source P = target`.
pub(crate) fn find_monomial(target: &mut Prepared<'_>, source: &mut Prepared<'_>) -> Option<Monomial> {
    let n = target.n;
    if source.n != n || source.code.size() != target.code.size() || source.code.code_type() != target.code.code_type() {
        return None;
    }
    let compatible: Vec<Vec<usize>> = (0..n)
        .map(|i| (0..n).filter(|&j| source.col_sig[i] == target.col_sig[j]).collect())
        .collect();
    if compatible.iter().any(Vec::is_empty) {
        return None;
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| (compatible[i].len(), i));
    let gens = source.code.packed_generators().to_vec();
    let images = vec![0; gens.len()];
    let mut search = Search {
        target,
        source,
        n,
        order,
        compatible,
        gens,
        images,
        perm: vec![0; n],
        negate: vec![false; n],
    };
    if !search.dfs(0, 0, 0) {
        return None;
    }
    let witness = Monomial { perm: search.perm, negate: search.negate };
    let image = apply_monomial(search.source.code, &witness).expect("lengths agree");
    assert!(image == *search.target.code, "equivalence search produced an invalid witness");
    Some(witness)
}

/// Returns `P` with `apply_monomial(c2, P) == c` when the codes are
/// equivalent.
pub fn are_equivalent(c: &Z4Code, c2: &Z4Code) -> Result<Option<Monomial>> {
    if c.len() != c2.len() {
        return Err(Error::LengthMismatch { left: c.len(), right: c2.len() });
    }
    if c.code_type() != c2.code_type() {
        return Ok(None);
    }
    let mut target = Prepared::new(c);
    let mut source = Prepared::new(c2);
    Ok(find_monomial(&mut target, &mut source))
}

/// One equivalence class: indices into the input list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivalenceClass {
    /// Member whose sorted codeword list is lexicographically smallest.
    pub representative: usize,
    /// All members in increasing index order.
    pub members: Vec<usize>,
}

#[derive(Clone, Copy, Debug, Default)]
pub struct PartitionOptions {
    /// Also bucket by the weight distribution of the binary residue code.
    pub residue_filter: bool,
}

/// Splits `codes` into equivalence classes. Codes are bucketed by
/// [`Fingerprint`] and coordinate signatures, and only codes within a bucket
/// are compared. Classes come back ordered by representative codeword list.
pub fn partition_classes(codes: &[Z4Code]) -> Result<Vec<EquivalenceClass>> {
    partition_classes_with(codes, PartitionOptions::default())
}

pub fn partition_classes_with(codes: &[Z4Code], options: PartitionOptions) -> Result<Vec<EquivalenceClass>> {
    if let Some(first) = codes.first() {
        if let Some(other) = codes.iter().find(|c| c.code_type() != first.code_type()) {
            return Err(Error::InvalidParameters {
                n: other.len(),
                k1: other.code_type().k1,
                k2: other.code_type().k2,
                reason: "codes in a partition must share length and type",
            });
        }
    }
    let mut buckets: HashMap<(Fingerprint, u64, Vec<u64>), Vec<usize>> = HashMap::new();
    for (idx, c) in codes.iter().enumerate() {
        let residue = if options.residue_filter { c.residue().weight_distribution() } else { Vec::new() };
        let key = (fingerprint(c), Prepared::new(c).invariant_key(), residue);
        buckets.entry(key).or_default().push(idx);
    }
    let mut classes: Vec<EquivalenceClass> = Vec::new();
    for members in buckets.into_values() {
        let bucket: Vec<&Z4Code> = members.iter().map(|&i| &codes[i]).collect();
        for group in reduce_bucket(&bucket) {
            let mut class_members: Vec<usize> = group.iter().map(|&g| members[g]).collect();
            let representative = class_members[0];
            class_members.sort_unstable();
            classes.push(EquivalenceClass { representative, members: class_members });
        }
    }
    classes.sort_by(|a, b| codes[a.representative].words().cmp(codes[b.representative].words()));
    Ok(classes)
}

/// Hash of every invariant used for bucketing; equal for equivalent codes.
pub(crate) fn bucket_key(c: &Z4Code) -> u64 {
    let mut h = DefaultHasher::new();
    fingerprint(c).hash(&mut h);
    Prepared::new(c).invariant_key().hash(&mut h);
    h.finish()
}

/// Partitions one bucket. Each returned group lists indices into `codes`;
/// its first entry is the member with the smallest codeword list (ties broken
/// by index).
pub(crate) fn reduce_bucket(codes: &[&Z4Code]) -> Vec<Vec<usize>> {
    let mut order: Vec<usize> = (0..codes.len()).collect();
    order.sort_by(|&a, &b| codes[a].words().cmp(codes[b].words()).then(a.cmp(&b)));
    let mut reps: Vec<Prepared<'_>> = Vec::new();
    let mut groups: Vec<Vec<usize>> = Vec::new();
    let mut previous: Option<(usize, usize)> = None;
    for idx in order {
        if let Some((prev_idx, prev_group)) = previous {
            if codes[prev_idx] == codes[idx] {
                groups[prev_group].push(idx);
                continue;
            }
        }
        let mut candidate = Prepared::new(codes[idx]);
        let found = reps
            .iter_mut()
            .position(|rep| find_monomial(rep, &mut candidate).is_some());
        let group = match found {
            Some(g) => g,
            None => {
                reps.push(candidate);
                groups.push(Vec::new());
                groups.len() - 1
            }
        };
        groups[group].push(idx);
        previous = Some((idx, group));
    }
    groups
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::Z4Code;

    fn code(n: usize, rows: &[&[i64]]) -> Z4Code {
        Z4Code::from_rows(n, &rows.iter().map(|r| Z4Vector::from_values(r)).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn monomial_action_and_group_laws() {
        let p = Monomial::new(vec![2, 0, 1], vec![false, true, false]).unwrap();
        let x = Z4Vector::from_values(&[1, 1, 2]);
        // y[p(i)] = s_i x_i
        assert_eq!(p.apply_vector(&x).unwrap(), Z4Vector::from_values(&[3, 2, 1]));
        let q = Monomial::new(vec![1, 2, 0], vec![true, false, false]).unwrap();
        let pq = p.then(&q);
        assert_eq!(pq.apply_vector(&x).unwrap(), q.apply_vector(&p.apply_vector(&x).unwrap()).unwrap());
        assert_eq!(p.then(&p.inverse()), Monomial::identity(3));
        assert_eq!(p.inverse().then(&p), Monomial::identity(3));
        assert!(Monomial::new(vec![0, 0], vec![false, false]).is_err());
    }

    #[test]
    fn witness_text_round_trip() {
        let p = Monomial::new(vec![2, 0, 1], vec![false, true, false]).unwrap();
        assert_eq!(p.to_string(), "perm=3 1 2; signs=+-+");
        assert_eq!("perm=3 1 2; signs=+-+".parse::<Monomial>().unwrap(), p);
        assert!("perm=1 1; signs=++".parse::<Monomial>().is_err());
        assert!("perm=1 2".parse::<Monomial>().is_err());
    }

    #[test]
    fn apply_monomial_examples() {
        let c = code(2, &[&[1, 3]]);
        assert_eq!(apply_monomial(&c, &Monomial::identity(2)).unwrap(), c);
        let flip = Monomial::new(vec![0, 1], vec![false, true]).unwrap();
        assert_eq!(apply_monomial(&c, &flip).unwrap(), code(2, &[&[1, 1]]));
        let p = Monomial::new(vec![1, 0], vec![true, false]).unwrap();
        let back = apply_monomial(&apply_monomial(&c, &p).unwrap(), &p.inverse()).unwrap();
        assert_eq!(back, c);
        assert!(apply_monomial(&c, &Monomial::identity(3)).is_err());
    }

    #[test]
    fn equivalence_examples() {
        let a = code(2, &[&[1, 1]]);
        let w = are_equivalent(&a, &a).unwrap().unwrap();
        assert_eq!(apply_monomial(&a, &w).unwrap(), a);

        let b = code(2, &[&[1, 3]]);
        let w = are_equivalent(&a, &b).unwrap().unwrap();
        assert_eq!(apply_monomial(&b, &w).unwrap(), a);

        let c = code(2, &[&[1, 2]]);
        assert_eq!(are_equivalent(&a, &c).unwrap(), None);
        assert_ne!(fingerprint(&a), fingerprint(&c));
        assert_eq!(fingerprint(&a).hamming_enum.to_string(), "x^2 + 3*y^2");
        assert_eq!(fingerprint(&c).hamming_enum.to_string(), "x^2 + x*y + 2*y^2");
    }

    #[test]
    fn zero_code_fingerprint() {
        let f = fingerprint(&Z4Code::zero(3).unwrap());
        assert_eq!(f.hamming_enum.to_string(), "x^3");
        assert_eq!(f.lee_enum.to_string(), "x^6");
        assert_eq!(f.column_profile, vec![[1, 0, 0]; 3]);
    }

    #[test]
    fn partition_examples() {
        let a = code(2, &[&[1, 1]]);
        let b = code(2, &[&[1, 3]]);
        let c = code(2, &[&[1, 2]]);
        let d = code(2, &[&[2, 1]]);
        let classes = partition_classes(&[a.clone(), c.clone(), b.clone(), d.clone(), a.clone()]).unwrap();
        assert_eq!(classes.len(), 2);
        // span(2,1) = {00,02,21,23} is the smallest member of its class and
        // sorts before span(1,1) = {00,11,22,33}
        assert_eq!(classes[0].members, vec![1, 3]);
        assert_eq!(classes[0].representative, 3);
        assert_eq!(classes[1].members, vec![0, 2, 4]);
        assert_eq!(classes[1].representative, 0);
        assert_eq!(partition_classes(std::slice::from_ref(&a)).unwrap().len(), 1);
        let with_residue = partition_classes_with(&[a, b, c, d], PartitionOptions { residue_filter: true }).unwrap();
        assert_eq!(with_residue.len(), 2);
    }

    #[test]
    fn partition_rejects_mixed_types() {
        let a = code(2, &[&[1, 1]]);
        let b = code(2, &[&[2, 2]]);
        assert!(partition_classes(&[a, b]).is_err());
    }
}
