//! Hamming, Lee and Euclidean weights, minimum weights, weight enumerators
//! and optimality within a family of codes.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::code::Z4Code;
use crate::error::{Error, Result};
use crate::word;
use crate::z4::Z4Vector;

pub fn wt_h(x: &Z4Vector) -> u32 {
    let [_, n1, n2, n3] = x.symbol_counts();
    (n1 + n2 + n3) as u32
}

pub fn wt_l(x: &Z4Vector) -> u32 {
    let [_, n1, n2, n3] = x.symbol_counts();
    (n1 + 2 * n2 + n3) as u32
}

pub fn wt_e(x: &Z4Vector) -> u32 {
    let [_, n1, n2, n3] = x.symbol_counts();
    (n1 + 4 * n2 + n3) as u32
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EnumeratorKind {
    Hamming,
    Lee,
    Symmetrized,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Metric {
    Hamming,
    Lee,
    Euclidean,
}

impl Metric {
    pub const ALL: [Metric; 3] = [Metric::Hamming, Metric::Lee, Metric::Euclidean];
}

impl fmt::Display for Metric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Metric::Hamming => "hamming",
            Metric::Lee => "lee",
            Metric::Euclidean => "euclidean",
        })
    }
}

/// A weight enumerator as a sparse map from exponent tuple to coefficient.
///
/// Hamming terms are `x^(n - wt_H) y^wt_H`, Lee terms `x^(2n - wt_L) y^wt_L`
/// and symmetrized terms `x^n0 y^(n1 + n3) z^n2`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeightEnumerator {
    kind: EnumeratorKind,
    terms: BTreeMap<Vec<u32>, u64>,
}

impl WeightEnumerator {
    pub fn from_terms(kind: EnumeratorKind, terms: impl IntoIterator<Item = (Vec<u32>, u64)>) -> WeightEnumerator {
        let mut map = BTreeMap::new();
        for (e, c) in terms {
            if c > 0 {
                *map.entry(e).or_insert(0) += c;
            }
        }
        WeightEnumerator { kind, terms: map }
    }

    pub fn kind(&self) -> EnumeratorKind {
        self.kind
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, u64> {
        &self.terms
    }

    pub fn coefficient(&self, exponents: &[u32]) -> u64 {
        self.terms.get(exponents).copied().unwrap_or(0)
    }

    /// Sum of all coefficients, i.e. the number of codewords.
    pub fn total(&self) -> u64 {
        self.terms.values().sum()
    }

    /// Specializes a symmetrized enumerator to Hamming weights.
    pub fn to_hamming(&self) -> Option<WeightEnumerator> {
        (self.kind == EnumeratorKind::Symmetrized).then(|| {
            WeightEnumerator::from_terms(
                EnumeratorKind::Hamming,
                self.terms.iter().map(|(e, &c)| (vec![e[0], e[1] + e[2]], c)),
            )
        })
    }

    /// Specializes a symmetrized enumerator to Lee weights.
    pub fn to_lee(&self) -> Option<WeightEnumerator> {
        (self.kind == EnumeratorKind::Symmetrized).then(|| {
            WeightEnumerator::from_terms(
                EnumeratorKind::Lee,
                self.terms.iter().map(|(e, &c)| {
                    let n = e[0] + e[1] + e[2];
                    let lee = e[1] + 2 * e[2];
                    (vec![2 * n - lee, lee], c)
                }),
            )
        })
    }
}

/// Canonical text: terms in decreasing exponent order, e.g. `x^3 + 2*x*y*z + x^2*z`.
impl fmt::Display for WeightEnumerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        const VARS: [&str; 3] = ["x", "y", "z"];
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (exps, &coeff)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            let mut factors: Vec<String> = Vec::new();
            if coeff != 1 {
                factors.push(coeff.to_string());
            }
            for (v, &e) in VARS.iter().zip(exps) {
                match e {
                    0 => {}
                    1 => factors.push(v.to_string()),
                    _ => factors.push(format!("{v}^{e}")),
                }
            }
            if factors.is_empty() {
                factors.push("1".into());
            }
            f.write_str(&factors.join("*"))?;
        }
        Ok(())
    }
}

pub fn enumerator(c: &Z4Code, kind: EnumeratorKind) -> WeightEnumerator {
    let n = c.len() as u32;
    let mut terms: BTreeMap<Vec<u32>, u64> = BTreeMap::new();
    for &w in c.words() {
        let [n0, n1, n2, n3] = word::symbol_counts(w, c.len());
        let key = match kind {
            EnumeratorKind::Hamming => vec![n0, n - n0],
            EnumeratorKind::Lee => {
                let lee = n1 + 2 * n2 + n3;
                vec![2 * n - lee, lee]
            }
            EnumeratorKind::Symmetrized => vec![n0, n1 + n3, n2],
        };
        *terms.entry(key).or_insert(0) += 1;
    }
    WeightEnumerator { kind, terms }
}

/// Minimum nonzero Hamming, Lee and Euclidean weights; `None` for the zero
/// code, whose minima are undefined.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightProfile {
    pub d_h: Option<u32>,
    pub d_l: Option<u32>,
    pub d_e: Option<u32>,
}

impl WeightProfile {
    pub fn get(&self, metric: Metric) -> Option<u32> {
        match metric {
            Metric::Hamming => self.d_h,
            Metric::Lee => self.d_l,
            Metric::Euclidean => self.d_e,
        }
    }
}

impl fmt::Display for WeightProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |d: Option<u32>| d.map_or_else(|| "undefined".to_string(), |d| d.to_string());
        write!(f, "d_H={} d_L={} d_E={}", show(self.d_h), show(self.d_l), show(self.d_e))
    }
}

pub fn weight_profile(c: &Z4Code) -> WeightProfile {
    let mut profile = WeightProfile { d_h: None, d_l: None, d_e: None };
    for &w in c.words().iter().filter(|&&w| w != 0) {
        let [_, n1, n2, n3] = word::symbol_counts(w, c.len());
        let update = |slot: &mut Option<u32>, v: u32| *slot = Some(slot.map_or(v, |d| d.min(v)));
        update(&mut profile.d_h, n1 + n2 + n3);
        update(&mut profile.d_l, n1 + 2 * n2 + n3);
        update(&mut profile.d_e, n1 + 4 * n2 + n3);
    }
    profile
}

/// The members of `family` attaining the largest minimum weight for `metric`.
/// An undefined minimum (zero code) ranks below every defined one.
pub fn optimal_codes(family: &[Z4Code], metric: Metric) -> Result<Vec<&Z4Code>> {
    let weights: Vec<Option<u32>> = family.iter().map(|c| weight_profile(c).get(metric)).collect();
    let best = weights.iter().max().ok_or(Error::EmptyFamily)?;
    Ok(family
        .iter()
        .zip(&weights)
        .filter(|(_, w)| *w == best)
        .map(|(c, _)| c)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::Z4Code;

    fn v(values: &[i64]) -> Z4Vector {
        Z4Vector::from_values(values)
    }

    fn code(n: usize, rows: &[&[i64]]) -> Z4Code {
        Z4Code::from_rows(n, &rows.iter().map(|r| v(r)).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn weight_examples() {
        let x = v(&[1, 2, 3, 0]);
        assert_eq!((wt_h(&x), wt_l(&x), wt_e(&x)), (3, 4, 6));
        let z = v(&[0, 0, 0]);
        assert_eq!((wt_h(&z), wt_l(&z), wt_e(&z)), (0, 0, 0));
        let t = v(&[2, 2]);
        assert_eq!((wt_h(&t), wt_l(&t), wt_e(&t)), (2, 4, 8));
    }

    #[test]
    fn enumerator_examples() {
        let c = code(2, &[&[2, 2]]);
        assert_eq!(enumerator(&c, EnumeratorKind::Symmetrized).to_string(), "x^2 + z^2");
        let c = code(2, &[&[1, 1]]);
        let hwe = enumerator(&c, EnumeratorKind::Hamming);
        assert_eq!(hwe.to_string(), "x^2 + 3*y^2");
        assert_eq!(hwe.coefficient(&[2, 0]), 1);
        let lwe = enumerator(&c, EnumeratorKind::Lee);
        assert_eq!(lwe.to_string(), "x^4 + 2*x^2*y^2 + y^4");
    }

    #[test]
    fn symmetrized_specializes_to_hamming_and_lee() {
        let c = code(5, &[&[1, 0, 1, 3, 2], &[0, 1, 2, 1, 1], &[0, 0, 2, 2, 0]]);
        let swe = enumerator(&c, EnumeratorKind::Symmetrized);
        assert_eq!(swe.to_hamming().unwrap(), enumerator(&c, EnumeratorKind::Hamming));
        assert_eq!(swe.to_lee().unwrap(), enumerator(&c, EnumeratorKind::Lee));
        assert_eq!(swe.total(), c.size() as u64);
        assert!(enumerator(&c, EnumeratorKind::Lee).to_lee().is_none());
        for e in swe.terms().keys() {
            assert_eq!(e.iter().sum::<u32>(), 5);
        }
    }

    #[test]
    fn profile_examples() {
        let p = weight_profile(&code(2, &[&[1, 1]]));
        assert_eq!((p.d_h, p.d_l, p.d_e), (Some(2), Some(2), Some(2)));
        let c = code(1, &[&[2]]);
        let p = weight_profile(&c);
        assert_eq!((p.d_h, p.d_l, p.d_e), (Some(1), Some(2), Some(4)));
        assert_eq!(weight_profile(&c.trivial_extension().unwrap()), p);
        let zero = Z4Code::zero(3).unwrap();
        assert_eq!(weight_profile(&zero), WeightProfile { d_h: None, d_l: None, d_e: None });
        assert_eq!(weight_profile(&zero).to_string(), "d_H=undefined d_L=undefined d_E=undefined");
    }

    #[test]
    fn optimal_code_examples() {
        let a = code(2, &[&[1, 1]]);
        let b = code(2, &[&[1, 2]]);
        assert_eq!(optimal_codes(std::slice::from_ref(&a), Metric::Lee).unwrap(), vec![&a]);
        assert_eq!(optimal_codes(&[a.clone(), b.clone()], Metric::Hamming).unwrap(), vec![&a]);
        assert_eq!(optimal_codes(&[b.clone(), a.clone()], Metric::Hamming).unwrap(), vec![&a]);
        assert!(matches!(optimal_codes(&[], Metric::Hamming), Err(Error::EmptyFamily)));
    }
}
