//! Cyclic class partitions of plane configurations and the symbolic
//! diffeomorphism types they determine, in both the real and the complex
//! (moment-angle) model.
//!
//! Run with: cargo run --example cyclic_types

use mam::classify::{classify_z, Flavor};
use mam::config::parse_configuration;
use mam::cyclic::cyclic_partition;
use mam::fixtures::positive_fixtures;

fn main() {
    for f in positive_fixtures() {
        let cfg = parse_configuration(f.text).expect(f.name);
        let part = match cyclic_partition(&cfg) {
            Ok(p) => p,
            Err(e) => {
                println!("{:24} skipped ({e})", f.name);
                continue;
            }
        };
        println!("{:24} sizes {:?}  ell {}", f.name, part.sizes(), part.ell());
        for flavor in [Flavor::Real, Flavor::Complex] {
            let (expr, status) = classify_z(&part, flavor);
            let tag = match flavor {
                Flavor::Real => "real   ",
                Flavor::Complex => "complex",
            };
            println!("    {tag} {expr}  [{}]", status.verdict);
        }
    }
}
