//! Numerical confoliation certificate for the extended variety: seeded
//! samples off the singular locus W should give strictly positive
//! orientation values, samples on W should be degenerate with the
//! predicted kernel dimensions, and Legendrian paths should escape W.
//!
//! Run with: cargo run --release --example contact_certificate

use mam::config::parse_configuration;
use mam::contact::{ContactAnalyzer, EscapeDirection, SampleRegion, DEFAULT_RANK_TOL};
use mam::fixtures::builtin;

fn main() {
    let cfg = parse_configuration(builtin("pentagon").unwrap().text).unwrap();
    for s in [1, 2] {
        let analyzer = ContactAnalyzer::new(&cfg, s).unwrap();
        println!("s = {s} (ambient dimension {}):", 2 * analyzer.n + 2 * s);
        for (label, region) in [("off W", SampleRegion::Generic), ("on W ", SampleRegion::OnW)] {
            let mut min_ratio = f64::INFINITY;
            let mut max_abs = 0.0f64;
            let mut dims = (0, 0);
            for seed in 0..10u64 {
                let w = analyzer.seeded_weights(seed);
                let sample = analyzer.analyze(seed, region, &w, DEFAULT_RANK_TOL).unwrap();
                let ratio = sample.confoliation_value / sample.scale;
                min_ratio = min_ratio.min(ratio);
                max_abs = max_abs.max(ratio.abs());
                dims = (sample.ker_dalpha_dim, sample.ker_both_dim);
            }
            println!("    {label}: min value/scale {min_ratio:+.3e}, max |value|/scale {max_abs:.3e}, kernel dims {dims:?}");
        }
        let w = analyzer.unit_weights();
        let pt = analyzer.sample(42, SampleRegion::OnW).unwrap();
        let esc = analyzer
            .escape_path(&pt, &w, 1e-3, 50, EscapeDirection::Transverse, 1e-6)
            .unwrap();
        println!(
            "    escape: left W after {} steps, Legendrian defect {:.3e}",
            esc.steps, esc.legendrian_defect
        );
    }
}
