//! Generator matrix text files.
//!
//! ```text
//! # optional comments
//! 3 1 1
//! 1 0 1
//! 0 2 2
//! ```
//!
//! The header `n k1 k2` announces a standard generator matrix. The header
//! `n raw` accepts any generating rows, which are normalized on use. Rows are
//! `n` digits in `0..=3`, space separated or written together.

use std::fs;
use std::path::Path;

use crate::code::{span, to_standard_form, Normalized, StandardGenerator, Z4Code};
use crate::error::{Error, Result};
use crate::z4::{Z4Matrix, Z4Vector};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GeneratorFile {
    Standard(StandardGenerator),
    Raw { n: usize, rows: Vec<Z4Vector> },
}

impl GeneratorFile {
    pub fn len(&self) -> usize {
        match self {
            GeneratorFile::Standard(g) => g.n(),
            GeneratorFile::Raw { n, .. } => *n,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn code(&self) -> Result<Z4Code> {
        match self {
            GeneratorFile::Standard(g) => Ok(span(g)),
            GeneratorFile::Raw { n, rows } => Z4Code::from_rows(*n, rows),
        }
    }

    /// Standard form; identity coordinate order for files already in it.
    pub fn normalized(&self) -> Result<Normalized> {
        match self {
            GeneratorFile::Standard(g) => {
                Ok(Normalized { generator: g.clone(), coordinate_order: (0..g.n()).collect() })
            }
            GeneratorFile::Raw { n, rows } => to_standard_form(*n, rows),
        }
    }
}

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

fn parse_row(line_no: usize, line: &str, n: usize) -> Result<Vec<i64>> {
    let tokens: Vec<&str> = line.split_whitespace().collect();
    let digits: Vec<char> = if tokens.len() == 1 { tokens[0].chars().collect() } else {
        tokens
            .iter()
            .map(|t| {
                let mut cs = t.chars();
                match (cs.next(), cs.next()) {
                    (Some(c), None) => Ok(c),
                    _ => Err(parse_error(line_no, format!("expected a single digit, found {t:?}"))),
                }
            })
            .collect::<Result<_>>()?
    };
    if digits.len() != n {
        return Err(parse_error(line_no, format!("expected {n} entries, found {}", digits.len())));
    }
    digits
        .into_iter()
        .map(|c| match c {
            '0'..='3' => Ok(c as i64 - '0' as i64),
            _ => Err(parse_error(line_no, format!("entry {c:?} is not in 0..=3"))),
        })
        .collect()
}

fn parse_usize(line: usize, token: &str) -> Result<usize> {
    token.parse().map_err(|_| parse_error(line, format!("expected a number, found {token:?}")))
}

pub fn parse_generator(text: &str) -> Result<GeneratorFile> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (header_line, header) = lines.next().ok_or_else(|| parse_error(1, "missing header"))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    let rows_of = |n: usize, lines: &mut dyn Iterator<Item = (usize, &str)>| -> Result<Vec<Vec<i64>>> {
        lines.map(|(no, l)| parse_row(no, l, n)).collect()
    };
    match fields.as_slice() {
        [n, "raw"] => {
            let n = parse_usize(header_line, n)?;
            let rows = rows_of(n, &mut lines)?.iter().map(|r| Z4Vector::from_values(r)).collect();
            Ok(GeneratorFile::Raw { n, rows })
        }
        [n, k1, k2] => {
            let (n, k1, k2) = (parse_usize(header_line, n)?, parse_usize(header_line, k1)?, parse_usize(header_line, k2)?);
            let rows = rows_of(n, &mut lines)?;
            if rows.len() != k1 + k2 {
                return Err(parse_error(header_line, format!("expected {} rows, found {}", k1 + k2, rows.len())));
            }
            let m = Z4Matrix::from_rows_with_cols(&rows, n)?;
            Ok(GeneratorFile::Standard(StandardGenerator::from_matrix(&m, k1, k2)?))
        }
        _ => Err(parse_error(header_line, "header must be \"n k1 k2\" or \"n raw\"")),
    }
}

pub fn read_generator_file(path: &Path) -> Result<GeneratorFile> {
    let text = fs::read_to_string(path).map_err(|source| Error::Io { path: path.to_path_buf(), source })?;
    parse_generator(&text)
}

pub fn format_generator(g: &StandardGenerator) -> String {
    let ty = g.code_type();
    format!("{} {} {}\n{}", ty.n, ty.k1, ty.k2, g.matrix())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let text = "# (3,1,1)\n3 1 1\n1 0 1\n0 2 2\n";
        let g = match parse_generator(text).unwrap() {
            GeneratorFile::Standard(g) => g,
            other => panic!("{other:?}"),
        };
        assert_eq!(format_generator(&g), "3 1 1\n1 0 1\n0 2 2\n");
        assert_eq!(parse_generator(&format_generator(&g)).unwrap(), GeneratorFile::Standard(g));
    }

    #[test]
    fn compact_rows_and_raw_files() {
        let f = parse_generator("4 raw\n2020\n1111\n0220 # trailing comment\n").unwrap();
        let code = f.code().unwrap();
        assert_eq!(code.code_type().k1, 1);
        assert_eq!(code.size(), 4 * 2 * 2);
        let norm = f.normalized().unwrap();
        assert_eq!(norm.code(), code);
    }

    #[test]
    fn rejects_malformed_input() {
        for bad in ["", "3 1\n101\n", "3 1 1\n1 0 1\n", "3 1 1\n1 0 4\n0 2 2\n", "2 1 0\n2 1\n", "x raw\n"] {
            assert!(matches!(parse_generator(bad), Err(Error::Parse { .. } | Error::NotStandardForm(_))), "{bad:?}");
        }
    }
}
