//! Builds the face lattice of the simple polytope attached to a
//! configuration and prints its face vector.
//!
//! Run with: cargo run --example face_lattice

use mam::config::parse_configuration;
use mam::fixtures::positive_fixtures;
use mam::polytope::{build_face_lattice, verify_simple};

fn main() {
    for f in positive_fixtures() {
        let cfg = parse_configuration(f.text).expect(f.name);
        let lat = build_face_lattice(&cfg).expect(f.name);
        let Some(dim) = lat.dim_p else {
            println!("{:24} empty polytope", f.name);
            continue;
        };
        let mut counts = vec![0usize; dim + 1];
        for face in &lat.faces {
            counts[face.dim] += 1;
        }
        println!(
            "{:24} dim {}  f-vector {:?}  simple: {}",
            f.name,
            dim,
            counts,
            verify_simple(&lat)
        );
    }
}
