// Classifying one cell and finding its optimal codes.

use z4class::classify::{classify_cell, optimality_report, ClassifyOptions};

pub fn run_example() -> z4class::Result<()> {
    let cell = classify_cell(4, 1, 1, &ClassifyOptions::default())?;
    println!(
        "N'(4,1,1) = {} from {} candidates ({} distinct codes)",
        cell.n_prime, cell.candidates, cell.distinct_codes
    );
    for (i, g) in cell.representatives.iter().enumerate() {
        let rows: Vec<String> = g.matrix().row_vectors().iter().map(|r| r.to_string()).collect();
        println!("  #{i}: {}", rows.join(" | "));
    }
    for m in optimality_report(&cell)?.metrics {
        println!("{}-optimal: d = {:?}, classes {:?}", m.metric, m.best, m.representatives);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> z4class::Result<()> {
    run_example()
}
