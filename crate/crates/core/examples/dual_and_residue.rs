// Dual codes and binary residue codes from a standard generator matrix.

use z4class::{dual, residue, span, StandardGenerator, Z4Matrix};

pub fn run_example() -> z4class::Result<()> {
    let m = Z4Matrix::from_rows(&[vec![1, 0, 1, 1, 3], vec![0, 1, 0, 1, 2], vec![0, 0, 2, 0, 2]])?;
    let g = StandardGenerator::from_matrix(&m, 2, 1)?;
    let c = span(&g);

    let d = dual(&g);
    let ct = d.generator.code_type();
    print!("dual, type 4^{} 2^{}\n{}", ct.k1, ct.k2, d.generator);
    let dc = d.code();
    println!("|C| * |C_perp| = {} = 4^5", c.size() * dc.size());
    assert!(dc.codewords().iter().all(|y| c.codewords().iter().all(|x| z4class::inner_product(x, y).unwrap().value() == 0)));

    let twice = dual(&d.generator).code().map_coordinates(&d.coordinate_order)?;
    println!("dual of the dual is C: {}", twice == c);

    let r = residue(&g);
    print!("residue code, dimension {}\n{r}", r.dimension());
    println!("residue weight distribution {:?}", r.weight_distribution());
    Ok(())
}

#[allow(dead_code)]
fn main() -> z4class::Result<()> {
    run_example()
}
