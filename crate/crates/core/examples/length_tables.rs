// Full tables for lengths 1 to 5 with checkpoints and the duality check.

use z4class::classify::{classify_up_to, duality_check, ClassifyOptions};
use z4class::store::{check_length, CheckpointStore};

pub fn run_example() -> z4class::Result<()> {
    let dir = std::env::temp_dir().join(format!("z4class-example-{}", std::process::id()));
    let opts = ClassifyOptions { checkpoint: Some(dir.clone()), ..ClassifyOptions::default() };
    for table in classify_up_to(5, &opts)? {
        let report = duality_check(&table.counts)?;
        println!(
            "n={}: N'={} N={} ({} cells, duality ok for {} pairs)",
            table.n,
            table.n_prime_total(),
            table.n_total(),
            table.cells.len(),
            report.pairs.len()
        );
    }
    // A second run reads every cell back from disk.
    let again = classify_up_to(5, &opts)?;
    println!("resumed N'(5) = {}", again[4].n_prime_total());

    let failures = check_length(&CheckpointStore::new(&dir), 5)?.into_iter().filter(|i| !i.ok).count();
    println!("stored length-5 results: {failures} failed checks");
    let _ = std::fs::remove_dir_all(&dir);
    Ok(())
}

#[allow(dead_code)]
fn main() -> z4class::Result<()> {
    run_example()
}
