//! Computes the integer homology of Z (and of its bounded half Z+) and
//! cross-checks the structural formula against the brute-force reflected
//! cell complex.
//!
//! Run with: cargo run --example homology_oracle

use mam::config::parse_configuration;
use mam::fixtures::builtin;
use mam::homology::{homology_z, Half, DEFAULT_SIMPLEX_CAP};
use mam::oracle::brute_force_homology;
use mam::polytope::build_face_lattice;

fn main() {
    for name in ["triangle", "quad_pair", "quint_pairs", "pentagon", "heptagon"] {
        let cfg = parse_configuration(builtin(name).unwrap().text).unwrap();
        let lat = build_face_lattice(&cfg).unwrap();
        for (label, half) in [("Z ", Half::None), ("Z+", Half::Exclude(0))] {
            let formula = homology_z(&lat, half);
            let oracle = brute_force_homology(&lat, half, DEFAULT_SIMPLEX_CAP).unwrap();
            println!(
                "{name:12} {label} ranks {:?}  torsion-free: {}  oracle agrees: {}",
                formula.ranks(),
                formula.is_torsion_free(),
                formula == oracle
            );
        }
    }
}
