//! Schröder insertion, the classical correspondence, and shape classes.

use schroeder::insertion::{classify_shape, enumerate_av, rs_insert, sch_insert, single_column_patterns, Permutation};
use schroeder::tableaux::render;

fn main() {
    let p: Permutation = "465193287".parse().unwrap();
    let (tp, tq) = sch_insert(&p).unwrap();
    println!("insertion tableau of {p}:\n{}", render(&tp));
    println!("recording tableau:\n{}", render(&tq));

    let (yp, _) = rs_insert(&p);
    println!("classical insertion tableau rows: {:?}", yp.rows());

    for text in ["2143", "321", "1423", "4132"] {
        let q: Permutation = text.parse().unwrap();
        println!("{q}: {}", classify_shape(&q));
    }

    for n in 1..=7 {
        println!("|Av_{n}(123, 213)| = {}", enumerate_av(n, &single_column_patterns()).unwrap());
    }
}
