// Weight enumerators, minimum weights and the one-word special codes.

use z4class::enumeration::{special_swe, special_vector};
use z4class::{enumerator, weight_profile, EnumeratorKind, Z4Code, Z4Vector};

pub fn run_example() -> z4class::Result<()> {
    let rows = [Z4Vector::from_values(&[1, 1, 1, 1]), Z4Vector::from_values(&[0, 2, 0, 2])];
    let c = Z4Code::from_rows(4, &rows)?;
    for kind in [EnumeratorKind::Hamming, EnumeratorKind::Lee, EnumeratorKind::Symmetrized] {
        println!("{kind:?}: {}", enumerator(&c, kind));
    }
    println!("{}", weight_profile(&c));
    println!("zero code: {}", weight_profile(&Z4Code::zero(4)?));

    let (n, m0, m1) = (6, 1, 3);
    let v = special_vector(n, m0, m1)?;
    let code = Z4Code::from_rows(n, std::slice::from_ref(&v))?;
    println!("span({v}): swe = {}", special_swe(n, m0, m1)?);
    assert_eq!(special_swe(n, m0, m1)?, enumerator(&code, EnumeratorKind::Symmetrized));
    Ok(())
}

#[allow(dead_code)]
fn main() -> z4class::Result<()> {
    run_example()
}
