//! Replaying the bundled worked-example suite programmatically (the same
//! machinery behind `mplcd verify-paper`), and summarizing the outcome of
//! every claim.
//!
//! Run with: cargo run --example worked_examples

use mplcd::report::Status;
use mplcd::verify::{default_data_dir, run_all};

fn main() -> mplcd::Result<()> {
    let items = run_all(&default_data_dir(), None)?;
    let mut totals = [0usize; 4];
    for item in &items {
        println!("{} — {}", item.id, item.title);
        for check in &item.checks {
            let slot = match check.status {
                Status::Pass => 0,
                Status::Fail => 1,
                Status::PaperDiscrepancy => 2,
                Status::NotDeskVerifiable => 3,
            };
            totals[slot] += 1;
            if check.status != Status::Pass {
                println!("  [{}] {} — {}", check.status, check.name, check.detail);
            }
        }
        for note in &item.notes {
            println!("  note: {note}");
        }
    }
    println!(
        "\n{} pass, {} fail, {} discrepancies, {} not desk-verifiable",
        totals[0], totals[1], totals[2], totals[3]
    );
    Ok(())
}
