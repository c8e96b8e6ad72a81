#![allow(dead_code)]

use itertools::Itertools;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::Rng;
use z4class::{apply_monomial, CodeType, Monomial, StandardGenerator, Z4Code, Z4Matrix};

pub fn random_matrix(rng: &mut StdRng, rows: usize, cols: usize, modulus: i64) -> Z4Matrix {
    let data: Vec<Vec<i64>> = (0..rows).map(|_| (0..cols).map(|_| rng.random_range(0..modulus)).collect()).collect();
    Z4Matrix::from_rows_with_cols(&data, cols).unwrap()
}

pub fn random_generator(rng: &mut StdRng, n: usize, k1: usize, k2: usize) -> StandardGenerator {
    let ty = CodeType::new(n, k1, k2).unwrap();
    let ell = ty.ell();
    let a = random_matrix(rng, k1, k2, 2);
    let b = random_matrix(rng, k1, ell, 4);
    let d = random_matrix(rng, k2, ell, 2);
    StandardGenerator::new(ty, &a, &b, &d).unwrap()
}

pub fn random_type(rng: &mut StdRng, n: usize) -> (usize, usize) {
    loop {
        let k1 = rng.random_range(0..=n);
        let k2 = rng.random_range(0..=n - k1);
        if k1 + k2 > 0 {
            return (k1, k2);
        }
    }
}

pub fn random_monomial(rng: &mut StdRng, n: usize) -> Monomial {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let negate = (0..n).map(|_| rng.random_bool(0.5)).collect();
    Monomial::new(perm, negate).unwrap()
}

/// Tries all `n! 2^n` monomials.
pub fn brute_force_equivalent(c: &Z4Code, c2: &Z4Code) -> Option<Monomial> {
    let n = c.len();
    if c2.len() != n || c.size() != c2.size() {
        return None;
    }
    for perm in (0..n).permutations(n) {
        for mask in 0u32..1 << n {
            let negate = (0..n).map(|i| mask >> i & 1 == 1).collect();
            let p = Monomial::new(perm.clone(), negate).unwrap();
            if apply_monomial(c2, &p).unwrap() == *c {
                return Some(p);
            }
        }
    }
    None
}
