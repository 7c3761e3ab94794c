//! The identity suite run in process: seeded checks over random root
//! data, weight actions, and fixed-point graphs. One check fails
//! honestly, and this example shows why.
//!
//! Run with `cargo run --example verification_suite`.

use ecs_cohomology::suite::{known_checks, run_suite};

fn main() {
    println!("available checks: {}", known_checks().join(", "));

    // A fast selection with reduced instance counts. The same calls back
    // the `ecscoh verify` subcommand; seeds make every run repeatable.
    let selection: Vec<String> = [
        "age_normal_split",
        "weight_sums",
        "excess_associativity",
        "fiber_parity",
        "gkm_oracle",
    ]
    .iter()
    .map(|s| s.to_string())
    .collect();
    let rows = run_suite(&selection, Some(50), 42).unwrap();
    println!("\nseed 42, 50 instances per randomized check:");
    for row in &rows {
        println!(
            "  {:<24} attempted {:>4}  passed {:>4}  failed {:>2}",
            row.name, row.attempted, row.passed, row.failed
        );
    }

    // The exhaustive functional check is the honest exception: some
    // torus elements in B2 and G2 have centralizers that are not of
    // Levi type, so no linear functional can vanish on exactly their
    // integral roots. The suite reports them instead of hiding them.
    let rows = run_suite(&["regular_alpha".to_string()], None, 0).unwrap();
    let row = &rows[0];
    println!(
        "\nregular_alpha: {} of {} classes fail, all with non-Levi centralizers:",
        row.failed, row.attempted
    );
    for counterexample in &row.counterexamples {
        println!("  {counterexample}");
    }
}
