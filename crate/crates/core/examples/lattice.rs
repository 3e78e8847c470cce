//! Covers, joins, meets and chain counts in the lattice of Schröder shapes.

use schroeder::lattice::{count_chains, covers, join, meet, verify_differential};
use schroeder::partitions::SchroderShape;

fn shape(s: &str) -> SchroderShape {
    s.parse().unwrap()
}

fn main() {
    let a = shape("4,3,2");
    let b = shape("5,2,2,1");
    println!("join = ({}), meet = ({})", join(&a, &b), meet(&a, &b));

    let c = covers(&a);
    let up: Vec<String> = c.up_covers.iter().map(|s| format!("({s})")).collect();
    let down: Vec<String> = c.down_covers.iter().map(|s| format!("({s})")).collect();
    println!("({a}) covers {} and is covered by {}", down.join(" "), up.join(" "));
    println!("saturated chains to ({a}): {}", count_chains(&a));

    let report = verify_differential(12).unwrap();
    println!(
        "orders 1..=12: {} partitions, {} violations",
        report.partitions_checked,
        report.violations.len()
    );
    for v in &report.violations {
        println!("  {}: {}", v.claim, v.witness);
    }
}
