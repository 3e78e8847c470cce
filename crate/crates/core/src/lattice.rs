//! The lattice of Schröder partitions under containment of shapes.
//!
//! Covers are computed from the up-free / down-free classification of parts:
//! an odd part is always free in both directions; an even part `λ_i` is
//! up-free when `λ_{i-1} ∉ {λ_i, λ_i + 1}` and down-free when
//! `λ_{i+1} ∉ {λ_i, λ_i - 1}`. The implicit zero part below the last row is
//! up-free exactly when the last part is not 1, and never down-free.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use serde::Serialize;

use crate::error::{invalid, Result};
use crate::partitions::{
    enumerate_schroeder_partitions, is_schroeder, IntegerPartition, SchroderShape,
};

/// Containment of Young shapes: `a` has at most as many parts as `b` and is
/// partwise no larger.
pub fn leq_partition(a: &IntegerPartition, b: &IntegerPartition) -> bool {
    a.len() <= b.len() && a.parts().iter().zip(b.parts()).all(|(x, y)| x <= y)
}

pub fn leq(a: &SchroderShape, b: &SchroderShape) -> bool {
    leq_partition(a.partition(), b.partition())
}

/// Partwise maximum in the Young lattice.
pub fn join_partition(a: &IntegerPartition, b: &IntegerPartition) -> IntegerPartition {
    let len = a.len().max(b.len());
    IntegerPartition::from_parts_unchecked((0..len).map(|i| a.part(i).max(b.part(i))).collect())
}

/// Partwise minimum in the Young lattice (truncated to the common length).
pub fn meet_partition(a: &IntegerPartition, b: &IntegerPartition) -> IntegerPartition {
    let len = a.len().min(b.len());
    IntegerPartition::from_parts_unchecked((0..len).map(|i| a.part(i).min(b.part(i))).collect())
}

pub fn join(a: &SchroderShape, b: &SchroderShape) -> SchroderShape {
    let j = join_partition(a.partition(), b.partition());
    assert!(is_schroeder(&j), "join of Schröder partitions left the lattice: {j}");
    SchroderShape::from_partition_unchecked(j)
}

pub fn meet(a: &SchroderShape, b: &SchroderShape) -> SchroderShape {
    let m = meet_partition(a.partition(), b.partition());
    assert!(is_schroeder(&m), "meet of Schröder partitions left the lattice: {m}");
    SchroderShape::from_partition_unchecked(m)
}

/// Join of two raw partitions, rejecting inputs outside the Schröder lattice.
pub fn checked_join(a: &IntegerPartition, b: &IntegerPartition) -> Result<SchroderShape> {
    Ok(join(&SchroderShape::new(a.clone())?, &SchroderShape::new(b.clone())?))
}

pub fn checked_meet(a: &IntegerPartition, b: &IntegerPartition) -> Result<SchroderShape> {
    Ok(meet(&SchroderShape::new(a.clone())?, &SchroderShape::new(b.clone())?))
}

/// Elements covering and covered by a shape.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoverSets {
    pub up_covers: Vec<SchroderShape>,
    pub down_covers: Vec<SchroderShape>,
}

/// Indices (0-based) of up-free parts; index `len` stands for the zero part.
pub fn up_free_parts(s: &SchroderShape) -> Vec<usize> {
    let parts = s.parts();
    let r = parts.len();
    let mut free: Vec<usize> = (0..r)
        .filter(|&i| {
            let v = parts[i];
            v % 2 == 1 || i == 0 || (parts[i - 1] != v && parts[i - 1] != v + 1)
        })
        .collect();
    if r == 0 || parts[r - 1] != 1 {
        free.push(r);
    }
    free
}

/// Indices (0-based) of down-free parts.
pub fn down_free_parts(s: &SchroderShape) -> Vec<usize> {
    let parts = s.parts();
    (0..parts.len())
        .filter(|&i| {
            let v = parts[i];
            let next = s.partition().part(i + 1);
            v % 2 == 1 || (next != v && next != v - 1)
        })
        .collect()
}

fn bump(s: &SchroderShape, index: usize, up: bool) -> SchroderShape {
    let mut parts = s.parts().to_vec();
    if index == parts.len() {
        parts.push(0);
    }
    if up {
        parts[index] += 1;
    } else {
        parts[index] -= 1;
    }
    let p = IntegerPartition::from_unsorted(parts);
    SchroderShape::new(p).expect("free part edit must stay in the Schröder lattice")
}

pub fn covers(s: &SchroderShape) -> CoverSets {
    let mut up_covers: Vec<_> = up_free_parts(s).into_iter().map(|i| bump(s, i, true)).collect();
    let mut down_covers: Vec<_> =
        down_free_parts(s).into_iter().map(|i| bump(s, i, false)).collect();
    up_covers.dedup();
    down_covers.dedup();
    CoverSets { up_covers, down_covers }
}

/// Number of saturated chains from the empty shape up to `s`.
pub fn count_chains(s: &SchroderShape) -> BigUint {
    fn go(s: &SchroderShape, memo: &mut HashMap<SchroderShape, BigUint>) -> BigUint {
        if s.order() == 0 {
            return BigUint::one();
        }
        if let Some(v) = memo.get(s) {
            return v.clone();
        }
        let total = covers(s)
            .down_covers
            .iter()
            .map(|d| go(d, memo))
            .sum::<BigUint>();
        memo.insert(s.clone(), total.clone());
        total
    }
    go(s, &mut HashMap::new())
}

/// A failed check together with the offending element(s).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DifferentialViolation {
    pub claim: &'static str,
    pub witness: String,
}

/// Outcome of sweeping the cover-count bounds over all small Schröder
/// partitions.
#[derive(Clone, Debug, Serialize)]
pub struct DifferentialReport {
    pub max_order: u32,
    pub partitions_checked: usize,
    pub pairs_checked: usize,
    pub violations: Vec<DifferentialViolation>,
    /// Smallest and largest observed `up / down` ratio.
    pub min_ratio: f64,
    pub max_ratio: f64,
    /// A partition with `up = ceil((down + 1) / 2)`, if one was seen.
    pub lower_bound_witness: Option<SchroderShape>,
    /// A partition with `up = 2 * down`, if one was seen.
    pub upper_bound_witness: Option<SchroderShape>,
    /// Per down-degree `k`: `(k, min up, max up)`.
    pub degree_ranges: Vec<(usize, usize, usize)>,
}

/// Checks, for every Schröder partition of order `1..=max_order`, that
/// `ceil((k+1)/2) <= up <= 2k` with `k` the number of lower covers, and that
/// distinct partitions of equal order have as many common lower covers as
/// common upper covers.
pub fn verify_differential(max_order: u32) -> Result<DifferentialReport> {
    if max_order == 0 {
        return Err(invalid("max order must be at least 1"));
    }
    let mut report = DifferentialReport {
        max_order,
        partitions_checked: 0,
        pairs_checked: 0,
        violations: Vec::new(),
        min_ratio: f64::INFINITY,
        max_ratio: 0.0,
        lower_bound_witness: None,
        upper_bound_witness: None,
        degree_ranges: Vec::new(),
    };
    let mut ranges: std::collections::BTreeMap<usize, (usize, usize)> = Default::default();
    for order in 1..=max_order {
        let level: Vec<SchroderShape> = enumerate_schroeder_partitions(order)
            .into_iter()
            .map(SchroderShape::from_partition_unchecked)
            .collect();
        let cover_sets: Vec<CoverSets> = level.iter().map(covers).collect();
        for (s, c) in level.iter().zip(&cover_sets) {
            report.partitions_checked += 1;
            let k = c.down_covers.len();
            let l = c.up_covers.len();
            if k == 0 || l < (k + 2) / 2 || l > 2 * k {
                report.violations.push(DifferentialViolation {
                    claim: "ceil((k+1)/2) <= up <= 2k",
                    witness: format!("({s}) down={k} up={l}"),
                });
            }
            if k == 0 {
                continue;
            }
            let ratio = l as f64 / k as f64;
            report.min_ratio = report.min_ratio.min(ratio);
            report.max_ratio = report.max_ratio.max(ratio);
            if l == (k + 2) / 2 && report.lower_bound_witness.is_none() {
                report.lower_bound_witness = Some(s.clone());
            }
            if l == 2 * k && report.upper_bound_witness.is_none() {
                report.upper_bound_witness = Some(s.clone());
            }
            let e = ranges.entry(k).or_insert((l, l));
            e.0 = e.0.min(l);
            e.1 = e.1.max(l);
        }
        for i in 0..level.len() {
            for j in i + 1..level.len() {
                report.pairs_checked += 1;
                let common_down = count_common(&cover_sets[i].down_covers, &cover_sets[j].down_covers);
                let common_up = count_common(&cover_sets[i].up_covers, &cover_sets[j].up_covers);
                if common_down != common_up {
                    report.violations.push(DifferentialViolation {
                        claim: "common lower covers = common upper covers",
                        witness: format!(
                            "({}) ({}) down={common_down} up={common_up}",
                            level[i], level[j]
                        ),
                    });
                }
            }
        }
    }
    report.degree_ranges = ranges.into_iter().map(|(k, (lo, hi))| (k, lo, hi)).collect();
    Ok(report)
}

fn count_common(a: &[SchroderShape], b: &[SchroderShape]) -> usize {
    a.iter().filter(|x| b.contains(x)).count()
}

/// Convenience for callers that want the chain count as a machine integer.
pub fn count_chains_u64(s: &SchroderShape) -> Option<u64> {
    count_chains(s).to_u64()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::enumerate_partitions;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn s(text: &str) -> SchroderShape {
        text.parse().unwrap()
    }

    fn shapes_up_to(order: u32) -> Vec<SchroderShape> {
        (0..=order)
            .flat_map(enumerate_schroeder_partitions)
            .map(SchroderShape::from_partition_unchecked)
            .collect()
    }

    /// All Schröder partitions reachable by adding or removing one cell,
    /// found by editing every part (and the empty slot) by one.
    fn brute_force_covers(x: &SchroderShape) -> (Vec<SchroderShape>, Vec<SchroderShape>) {
        let parts = x.parts();
        let mut up = Vec::new();
        let mut down = Vec::new();
        for i in 0..=parts.len() {
            let mut p = parts.to_vec();
            p.push(0);
            p[i] += 1;
            if let Ok(q) = IntegerPartition::new(p.into_iter().filter(|&v| v > 0).collect()) {
                if let Ok(sh) = SchroderShape::new(q) {
                    if !up.contains(&sh) {
                        up.push(sh);
                    }
                }
            }
            if i < parts.len() {
                let mut p = parts.to_vec();
                p[i] -= 1;
                if let Ok(q) = IntegerPartition::new(p.into_iter().filter(|&v| v > 0).collect()) {
                    if let Ok(sh) = SchroderShape::new(q) {
                        if !down.contains(&sh) {
                            down.push(sh);
                        }
                    }
                }
            }
        }
        up.sort();
        down.sort();
        (up, down)
    }

    #[test]
    fn leq_examples() {
        assert!(leq(&s(""), &s("3,1")));
        assert!(leq(&s("2,1"), &s("3,1")));
        assert!(!leq(&s("3"), &s("2,1")));
        assert!(!leq(&s("2,1"), &s("3")));
    }

    #[test]
    fn join_meet_examples() {
        assert_eq!(join(&s("3"), &s("2,1")), s("3,1"));
        assert_eq!(meet(&s("3"), &s("2,1")), s("2"));
        for x in shapes_up_to(8) {
            assert_eq!(join(&x, &x), x);
            assert_eq!(meet(&x, &x), x);
        }
        let a: IntegerPartition = "4,3".parse().unwrap();
        let b: IntegerPartition = "3,3".parse().unwrap();
        assert_eq!(join_partition(&a, &b), a);
        assert!(checked_join(&a, &b).is_err());
        assert!(checked_meet(&a, &b).is_err());
    }

    #[test]
    fn cover_examples() {
        assert_eq!(covers(&s("")).up_covers, vec![s("1")]);
        let mut up = covers(&s("2")).up_covers;
        up.sort();
        assert_eq!(up, vec![s("2,1"), s("3")]);
        assert_eq!(covers(&s("2,1")).down_covers, vec![s("2")]);
        let c = covers(&s("2"));
        assert_eq!(c.down_covers.len(), 1);
        assert_eq!(c.up_covers.len(), 2);
    }

    #[test]
    fn covers_agree_with_brute_force() {
        for x in shapes_up_to(14) {
            let c = covers(&x);
            let (mut up, mut down) = (c.up_covers.clone(), c.down_covers.clone());
            up.sort();
            down.sort();
            let (bu, bd) = brute_force_covers(&x);
            assert_eq!(up, bu, "up covers of ({x})");
            assert_eq!(down, bd, "down covers of ({x})");
            assert_eq!(c.up_covers.len(), up_free_parts(&x).len());
            assert_eq!(c.down_covers.len(), down_free_parts(&x).len());
        }
    }

    #[test]
    fn up_covers_agree_with_leq_search() {
        let all = shapes_up_to(14);
        for x in all.iter().filter(|x| x.order() < 14) {
            let mut up = covers(x).up_covers;
            up.sort();
            let mut found: Vec<SchroderShape> = all
                .iter()
                .filter(|t| t.order() == x.order() + 1 && leq(x, t))
                .cloned()
                .collect();
            found.sort();
            assert_eq!(up, found, "({x})");
        }
    }

    #[test]
    fn chain_examples() {
        assert_eq!(count_chains(&s("1")), BigUint::from(1u32));
        assert_eq!(count_chains(&s("2,1")), BigUint::from(1u32));
        assert_eq!(count_chains(&s("3,1")), BigUint::from(2u32));
        assert_eq!(count_chains(&s("")), BigUint::from(1u32));
    }

    #[test]
    fn closure_exhaustive_to_15() {
        let all = shapes_up_to(15);
        for a in &all {
            for b in &all {
                let j = join_partition(a.partition(), b.partition());
                let m = meet_partition(a.partition(), b.partition());
                assert!(is_schroeder(&j) && is_schroeder(&m), "({a}) ({b})");
            }
        }
    }

    #[test]
    fn lattice_laws_random_triples() {
        let all = shapes_up_to(15);
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..10_000 {
            let a = &all[rng.gen_range(0..all.len())];
            let b = &all[rng.gen_range(0..all.len())];
            let c = &all[rng.gen_range(0..all.len())];
            assert_eq!(join(a, &meet(a, b)), *a);
            assert_eq!(meet(a, &join(a, b)), *a);
            assert_eq!(join(a, &meet(b, c)), meet(&join(a, b), &join(a, c)));
            assert_eq!(meet(a, &join(b, c)), join(&meet(a, b), &meet(a, c)));
        }
    }

    #[test]
    fn multiplicity_classes_are_closed_under_join_and_meet() {
        use crate::partitions::is_in_multiplicity_class;
        let bounds: Vec<Box<dyn Fn(u32) -> Option<usize>>> = vec![
            Box::new(|v| if v % 3 == 0 { Some(1) } else { None }),
            Box::new(|v| Some(v as usize)),
            Box::new(|v| if v <= 2 { Some(2) } else { Some(1) }),
        ];
        let all: Vec<IntegerPartition> = (0..=10).flat_map(enumerate_partitions).collect();
        for f in &bounds {
            let class: Vec<_> = all.iter().filter(|p| is_in_multiplicity_class(p, f.as_ref())).collect();
            for a in &class {
                for b in &class {
                    assert!(is_in_multiplicity_class(&join_partition(a, b), f.as_ref()));
                    assert!(is_in_multiplicity_class(&meet_partition(a, b), f.as_ref()));
                }
            }
        }
    }

    #[test]
    fn differential_small() {
        let r = verify_differential(1).unwrap();
        assert_eq!(r.partitions_checked, 1);
        assert!(r.violations.is_empty());
        assert!(verify_differential(0).is_err());
    }

    #[test]
    fn differential_to_18() {
        let r = verify_differential(18).unwrap();
        assert_eq!(r.partitions_checked, 505);
        // The upper bound 2k fails for k = 1: (2m, 2m-1) covers only
        // (2m, 2m-2) but is covered by three shapes.
        let witnesses: Vec<&str> = r.violations.iter().map(|v| v.witness.as_str()).collect();
        assert_eq!(
            witnesses,
            vec![
                "(4,3) down=1 up=3",
                "(6,5) down=1 up=3",
                "(4,4,3) down=1 up=3",
                "(8,7) down=1 up=3",
                "(4,4,4,3) down=1 up=3",
                "(6,6,5) down=1 up=3",
            ]
        );
        assert!(r.violations.iter().all(|v| v.claim == "ceil((k+1)/2) <= up <= 2k"));
        assert!(r.lower_bound_witness.is_some());
        assert!(r.upper_bound_witness.is_some());
        assert!(r.degree_ranges.iter().any(|&(k, lo, _)| k >= 2 && lo == (k + 2) / 2));
        assert!(r.degree_ranges.iter().any(|&(k, _, hi)| k >= 2 && hi == 2 * k));
    }

    #[test]
    fn upper_bound_counterexample() {
        let c = covers(&s("4,3"));
        assert_eq!(c.down_covers, vec![s("4,2")]);
        let mut up = c.up_covers;
        up.sort();
        assert_eq!(up, vec![s("4,3,1"), s("4,4"), s("5,3")]);
    }

    #[test]
    fn bounds_attained_away_from_small_degrees() {
        let c = covers(&s("5,4,1"));
        assert_eq!((c.down_covers.len(), c.up_covers.len()), (3, 2));
        let c = covers(&s("6,5,2"));
        assert_eq!((c.down_covers.len(), c.up_covers.len()), (2, 4));
    }
}
