//! Open book decompositions: for a coordinate whose quadric term is
//! dropped, prints the total space, the binding, the page, and the
//! monodromy.
//!
//! Run with: cargo run --example open_books

use mam::classify::{open_book_report, Flavor};
use mam::config::parse_configuration;
use mam::fixtures::builtin;

fn main() {
    let cases = [
        ("pentagon_first_tripled", 1),
        ("pentagon_second_tripled", 1),
        ("pentagon_third_tripled", 1),
        ("pentagon_first_doubled", 1),
        ("heptagon", 1),
    ];
    for (name, index) in cases {
        let cfg = parse_configuration(builtin(name).unwrap().text).unwrap();
        match open_book_report(&cfg, index - 1, Flavor::Complex) {
            Ok(ob) => {
                println!("{name} (opened at coordinate {index}):");
                println!("    total     {}", ob.total);
                println!("    binding   {}", ob.binding);
                println!("    page      {}", ob.page);
                println!("    monodromy {}", ob.monodromy);
            }
            Err(e) => println!("{name}: no open book at {index} ({e})"),
        }
    }
}
