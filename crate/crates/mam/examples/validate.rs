//! Validates configurations: weak hyperbolicity witnesses and the
//! integrality (saturation) certificate for the coefficient lattice.
//!
//! Run with: cargo run --example validate

use mam::config::{check_condition_k, check_weak_hyperbolicity, parse_configuration, WhReport};
use mam::fixtures::FIXTURES;

fn main() {
    for f in FIXTURES {
        let cfg = parse_configuration(f.text).expect(f.name);
        let wh = check_weak_hyperbolicity(&cfg);
        let ck = check_condition_k(&cfg);
        print!("{:24} ", f.name);
        match wh {
            WhReport::Ok => print!("weakly hyperbolic; "),
            WhReport::Violated { witness } => {
                let w: Vec<usize> = witness.iter().map(|i| i + 1).collect();
                print!("NOT weakly hyperbolic, witness {w:?}; ");
            }
        }
        println!(
            "condition K {} (solution dim {})",
            if ck.holds { "holds" } else { "fails" },
            ck.solution_dim
        );
    }
}
