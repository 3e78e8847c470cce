//! From a tableau to intervals and back.

use schroeder::interval_orders::{
    has_schroder_preimage, interval_order, intervals_of_tableau, preimage_tableau, IntervalSet,
};
use schroeder::posets::FinitePoset;
use schroeder::tableaux::{render, SchroderTableau};

fn main() {
    let q = SchroderTableau::new(vec![vec![1, 2, 5, 8], vec![3, 4, 9], vec![6, 7]]).unwrap();
    let s = intervals_of_tableau(&q);
    println!("intervals {s}");
    let p = interval_order(&s);
    println!("order relations {:?}", p.relations());

    let (w, t) = preimage_tableau(&s).unwrap().unwrap();
    println!("down-set rows {:?}", w.downset.row_lengths());
    print!("{}", render(&t));

    let overlap = IntervalSet::new(vec![(1, 3), (2, 4)]).unwrap();
    println!("{overlap}: witness {:?}", has_schroder_preimage(&interval_order(&overlap)).unwrap());
    println!("2+2 rejected: {}", has_schroder_preimage(&FinitePoset::two_plus_two()).is_err());
}
