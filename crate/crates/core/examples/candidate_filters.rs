// How many generator matrices survive each ordering filter.

use z4class::CandidateSpace;

pub fn run_example() -> z4class::Result<()> {
    println!("cell        S          T          U          V   candidates");
    for (n, k1, k2) in [(3, 1, 1), (4, 2, 1), (5, 2, 1), (6, 3, 1)] {
        let r = CandidateSpace::new(n, k1, k2)?.filter_report();
        println!("({n},{k1},{k2})  {:>9}  {:>9}  {:>9}  {:>9}  {:>9}", r.s, r.t, r.u, r.v, r.candidates);
        assert!(r.is_monotone());
    }
    let space = CandidateSpace::new(3, 1, 1)?;
    for g in space.iter() {
        println!("{}", g.matrix().row_vectors().iter().map(|r| r.to_string()).collect::<Vec<_>>().join(" | "));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> z4class::Result<()> {
    run_example()
}
