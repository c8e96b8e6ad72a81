// Arithmetic in Z4, vectors, lexicographic order and inner products.

use z4class::{inner_product, lex_compare, mat_mul, Z4Matrix, Z4Vector, Z4};

pub fn run_example() -> z4class::Result<()> {
    let (a, b) = (Z4::new(3), Z4::new(2));
    println!("3 + 2 = {}, 3 * 2 = {}, -3 = {}", a + b, a * b, -a);
    println!("units: {:?}", (0..4).filter(|&v| Z4::new(v).is_unit()).collect::<Vec<_>>());

    let x = Z4Vector::from_values(&[1, 2, 3, 0]);
    let y = Z4Vector::from_values(&[1, 3, 0, 2]);
    println!("x = ({x}), y = ({y})");
    println!("x + y = ({})", x.add(&y)?);
    println!("<x, y> = {}", inner_product(&x, &y)?);
    println!("x vs y in lex order: {:?}", lex_compare(&x, &y)?);

    let m = Z4Matrix::from_rows(&[vec![1, 0, 3], vec![0, 2, 2]])?;
    let t = m.transpose();
    print!("M M^T =\n{}", mat_mul(&m, &t)?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> z4class::Result<()> {
    run_example()
}
