// Bringing arbitrary generating rows to standard form.

use z4class::{compute_type, span, to_standard_form, Z4Vector};

pub fn run_example() -> z4class::Result<()> {
    let rows: Vec<Z4Vector> = [[2, 0, 2, 0, 2], [0, 3, 1, 1, 2], [0, 2, 2, 2, 0], [2, 1, 3, 3, 0]]
        .iter()
        .map(|r| Z4Vector::from_values(r))
        .collect();
    let ty = compute_type(5, &rows)?;
    println!("type 4^{} 2^{}, {} codewords", ty.k1, ty.k2, ty.size());

    let norm = to_standard_form(5, &rows)?;
    print!("standard form\n{}", norm.generator);
    println!("coordinate order {:?}", norm.coordinate_order);

    // The permuted span is the original code.
    let original = z4class::Z4Code::from_rows(5, &rows)?;
    assert_eq!(norm.code(), original);
    println!("span of the standard form has {} words", span(&norm.generator).size());
    Ok(())
}

#[allow(dead_code)]
fn main() -> z4class::Result<()> {
    run_example()
}
