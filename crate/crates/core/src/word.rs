//! Packed codewords: two bits per coordinate in a `u32`.
//!
//! Coordinate `i` of a length-`n` word lives at bit offset `2 * (n - 1 - i)`,
//! so the first coordinate is the most significant. With that layout the
//! integer order of packed words is the lexicographic order of the vectors.

use crate::z4::{Z4Vector, Z4};

pub(crate) type Word = u32;

const LO: Word = 0x5555_5555;
const HI: Word = 0xAAAA_AAAA;

#[inline]
pub(crate) fn shift(n: usize, i: usize) -> u32 {
    (2 * (n - 1 - i)) as u32
}

/// Lane-wise addition mod 4.
#[inline]
pub(crate) fn add(a: Word, b: Word) -> Word {
    let (la, lb) = (a & LO, b & LO);
    let carry = (la & lb) << 1;
    ((a & HI) ^ (b & HI) ^ carry) | (la ^ lb)
}

/// Additive order of a word: 1, 2 or 4.
#[inline]
pub(crate) fn order(a: Word) -> u8 {
    if a & LO != 0 {
        4
    } else if a != 0 {
        2
    } else {
        1
    }
}

#[inline]
pub(crate) fn get(w: Word, n: usize, i: usize) -> u8 {
    ((w >> shift(n, i)) & 3) as u8
}

#[inline]
pub(crate) fn coordinate_mask(n: usize, i: usize) -> Word {
    3 << shift(n, i)
}

/// Per-symbol counts `[n0, n1, n2, n3]` over the first `n` lanes.
#[inline]
pub(crate) fn symbol_counts(w: Word, n: usize) -> [u32; 4] {
    let lanes: Word = if n == 16 { Word::MAX } else { (1 << (2 * n)) - 1 };
    let lo = w & LO;
    let hi = (w & HI) >> 1;
    let n1 = (lo & !hi).count_ones();
    let n2 = (hi & !lo).count_ones();
    let n3 = (lo & hi).count_ones();
    let n0 = (lanes & LO).count_ones() - n1 - n2 - n3;
    [n0, n1, n2, n3]
}

pub(crate) fn from_vector(v: &Z4Vector) -> Word {
    v.entries()
        .iter()
        .fold(0, |acc, x| (acc << 2) | x.value() as Word)
}

pub(crate) fn to_vector(w: Word, n: usize) -> Z4Vector {
    Z4Vector::from_entries((0..n).map(|i| Z4::from(get(w, n, i))).collect())
}

/// Binary residue of a packed word, one bit per coordinate, first coordinate
/// most significant.
pub(crate) fn residue(w: Word, n: usize) -> u32 {
    (0..n).fold(0, |acc, i| (acc << 1) | (get(w, n, i) & 1) as u32)
}

/// Every `Z4`-linear combination of `gens`. The generators must be
/// independent (orders multiply to the span size) for the result to be
/// duplicate free; callers pass echelon or standard-form rows.
pub(crate) fn span_independent(gens: &[Word]) -> Vec<Word> {
    let size: usize = gens.iter().map(|&g| order(g) as usize).product();
    let mut words = Vec::with_capacity(size);
    words.push(0);
    for &g in gens {
        let len = words.len();
        let mut step = g;
        for _ in 1..order(g) {
            for j in 0..len {
                words.push(add(words[j], step));
            }
            step = add(step, g);
        }
    }
    words.sort_unstable();
    words
}
