// Monomial equivalence with an explicit witness.

use z4class::{apply_monomial, are_equivalent, fingerprint, Monomial, Z4Code, Z4Vector};

pub fn run_example() -> z4class::Result<()> {
    let rows = [Z4Vector::from_values(&[1, 0, 1, 3, 2]), Z4Vector::from_values(&[0, 2, 2, 0, 2])];
    let c = Z4Code::from_rows(5, &rows)?;
    let p: Monomial = "perm=4 1 5 2 3; signs=+-+-+".parse()?;
    let moved = apply_monomial(&c, &p)?;
    println!("fingerprints agree: {}", fingerprint(&c) == fingerprint(&moved));

    match are_equivalent(&c, &moved)? {
        Some(w) => {
            println!("equivalent, witness {w}");
            assert_eq!(apply_monomial(&moved, &w)?, c);
        }
        None => println!("inequivalent"),
    }

    let other = Z4Code::from_rows(5, &[Z4Vector::from_values(&[1, 1, 1, 1, 2]), rows[1].clone()])?;
    println!("second pair: {}", if are_equivalent(&c, &other)?.is_some() { "equivalent" } else { "inequivalent" });
    Ok(())
}

#[allow(dead_code)]
fn main() -> z4class::Result<()> {
    run_example()
}
