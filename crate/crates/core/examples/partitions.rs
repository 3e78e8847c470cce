//! Schröder partitions, the cluster maps and the counting series.

use schroeder::partitions::{
    cluster_map, enumerate_schroeder_partitions, gf_coefficients, is_schroeder, IntegerPartition, SchroderShape,
};

fn main() {
    let p: IntegerPartition = "9,6,6,3,1".parse().unwrap();
    println!("({p}) is Schröder: {}", is_schroeder(&p));
    println!("c_2({p}) = ({})", cluster_map(&p, 2));
    println!("c_2^2({p}) = ({})", cluster_map(&cluster_map(&p, 2), 2));

    let q: IntegerPartition = "3,3,1".parse().unwrap();
    println!("c_2^2({q}) = ({}) so ({q}) is not fixed", cluster_map(&cluster_map(&q, 2), 2));

    println!("Schröder partitions of 7:");
    for s in enumerate_schroeder_partitions(7) {
        println!("  {s}");
    }

    let coeffs: Vec<String> = gf_coefficients(15).iter().map(|c| c.to_string()).collect();
    println!("series coefficients: {}", coeffs.join(" "));

    let shape = SchroderShape::new("4,3,2".parse().unwrap()).unwrap();
    println!("({shape}): {} twin pairs, lonely cells {:?}", shape.twin_pairs().len(), shape.lonely_cells());
}
