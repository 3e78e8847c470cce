//! Standard fillings of a Schröder shape and their chains.

use schroeder::partitions::SchroderShape;
use schroeder::tableaux::{count_tableaux, enumerate_tableaux, render, tableau_to_chain};

fn main() {
    let shape: SchroderShape = "4,1".parse().unwrap();
    println!("({shape}) has {} standard fillings", count_tableaux(&shape).unwrap());
    for t in enumerate_tableaux(&shape).unwrap() {
        print!("{}", render(&t));
        let chain: Vec<String> = tableau_to_chain(&t).iter().map(|s| format!("({s})")).collect();
        println!("chain {}\n", chain.join(" < "));
    }
}
