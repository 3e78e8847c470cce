//! Weak containment, strong avoidance and the weak-pattern poset.

use schroeder::posets::{build_weak_pattern_poset, sav_count, weakly_contains, FinitePoset, Mode};

fn main() {
    let vee = FinitePoset::vee();
    println!("chain(3) weakly contains vee: {}", weakly_contains(&FinitePoset::chain(3), &vee));
    println!("flat(3) weakly contains vee: {}", weakly_contains(&FinitePoset::flat(3), &vee));

    for n in 1..=5 {
        println!(
            "n={n}: {} labeled and {} unlabeled posets avoid vee",
            sav_count(n, &vee, Mode::Labeled).unwrap(),
            sav_count(n, &vee, Mode::Unlabeled).unwrap()
        );
    }

    let x4 = build_weak_pattern_poset(4).unwrap();
    println!("X_4: {} elements, {} Hasse edges", x4.elements.len(), x4.hasse_edges.len());
    print!("{}", build_weak_pattern_poset(3).unwrap().to_dot());
}
