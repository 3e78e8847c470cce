//! Brute-force verification suites.
//!
//! Every check compares a library operation against an independent
//! computation (exhaustive enumeration, a closed formula, or a second
//! algorithm). Suites are deterministic for a fixed seed and independent of
//! the worker count.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{invalid, Error, Result};
use crate::insertion::{
    avoids, classify_partition, count_standard_young_tableaux, is_hook_permutation,
    is_single_column_permutation, is_single_row_permutation, rs_insert, sch_insert,
    single_column_patterns, Permutation, ShapeClass,
};
use crate::interval_orders::{
    has_schroder_preimage, interval_order, interval_representation, intervals_of_tableau,
    is_interval_order, recoordinatize, tableau_from_witness, IntervalSet,
};
use crate::lattice::{
    count_chains, join, join_partition, meet, meet_partition, verify_differential,
};
use crate::partitions::{
    cluster_map, enumerate_partitions, enumerate_schroeder_partitions, gf_coefficients,
    is_schroeder, satisfies_cn_condition, SchroderShape,
};
use crate::posets::{
    build_weak_pattern_poset, contains_induced, disjoint_union, enumerate_posets,
    is_below, is_weakly_below, linear_sum, sav_count, strongly_avoids, upset_in_xn,
    weak_pattern_edges_by_deletion, weakly_contains, FinitePoset, Mode,
};
use crate::tableaux::{count_tableaux, enumerate_tableaux, SchroderTableau};

pub const DEFAULT_SEED: u64 = 2024;

/// A failed claim and the smallest evidence found for it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub claim: String,
    pub witness: String,
}

/// Accumulated result of one or more checks.
#[derive(Clone, Debug, Default, Serialize)]
pub struct Outcome {
    pub checks: u64,
    pub violations: Vec<Violation>,
    /// Observations that are reported but never fail a run.
    pub findings: Vec<String>,
}

impl Outcome {
    fn check(&mut self, ok: bool, claim: &str, witness: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.violations.push(Violation { claim: claim.to_string(), witness: witness() });
        }
    }

    fn absorb(&mut self, other: Outcome) {
        self.checks += other.checks;
        self.violations.extend(other.violations);
        self.findings.extend(other.findings);
    }

    fn merged(parts: Vec<Outcome>) -> Outcome {
        let mut out = Outcome::default();
        for p in parts {
            out.absorb(p);
        }
        out
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn violated(&self, claim: &str) -> bool {
        self.violations.iter().any(|v| v.claim == claim)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Counts,
    Differential,
    Rsk,
    Lattice,
    Sav,
    IntervalTheorem,
    Hook,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Counts,
        Suite::Differential,
        Suite::Rsk,
        Suite::Lattice,
        Suite::Sav,
        Suite::IntervalTheorem,
        Suite::Hook,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Counts => "counts",
            Suite::Differential => "differential",
            Suite::Rsk => "rsk",
            Suite::Lattice => "lattice",
            Suite::Sav => "sav",
            Suite::IntervalTheorem => "interval-theorem",
            Suite::Hook => "hook",
        }
    }

    /// Size knob used when `--max` is not given.
    pub fn default_max(self) -> usize {
        match self {
            Suite::Counts => 9,
            Suite::Differential => 18,
            Suite::Rsk => 7,
            Suite::Lattice => 15,
            Suite::Sav => 6,
            Suite::IntervalTheorem => 5,
            Suite::Hook => 8,
        }
    }

    /// Largest accepted knob; beyond it the sweep is not desk scale.
    pub fn max_limit(self) -> usize {
        match self {
            Suite::Counts => 10,
            Suite::Differential => 30,
            Suite::Rsk => 9,
            Suite::Lattice => 22,
            Suite::Sav => 6,
            Suite::IntervalTheorem => 6,
            Suite::Hook => 9,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite '{s}'")))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub suite: Suite,
    pub max: usize,
    pub seed: u64,
    pub checks: u64,
    pub violations: Vec<Violation>,
    pub findings: Vec<String>,
    /// Kept out of the serialized report so that output is reproducible.
    #[serde(skip)]
    pub wall_time_ms: u128,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn render_ascii(&self) -> String {
        let mut out = format!(
            "suite {} (max {}): {} checks, {} violations, {} findings\n",
            self.suite,
            self.max,
            self.checks,
            self.violations.len(),
            self.findings.len()
        );
        for v in &self.violations {
            out.push_str(&format!("violation [{}] {}\n", v.claim, v.witness));
        }
        for f in &self.findings {
            out.push_str(&format!("finding {f}\n"));
        }
        out
    }
}

/// Runs one suite with `jobs` worker threads (`None` uses all cores).
pub fn run_suite(suite: Suite, max: Option<usize>, seed: u64, jobs: Option<usize>) -> Result<VerifyReport> {
    let max = max.unwrap_or(suite.default_max());
    crate::error::check_limit("verify --max", max, suite.max_limit())?;
    if max == 0 {
        return Err(invalid("--max must be at least 1"));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.unwrap_or(0))
        .build()
        .map_err(|e| invalid(e.to_string()))?;
    let start = Instant::now();
    let outcome = pool.install(|| match suite {
        Suite::Counts => Outcome::merged(vec![
            check_single_row(max),
            check_single_column(max),
            check_gf(40),
            check_cn_fixed_points(20, 4),
        ]),
        Suite::Differential => check_differential(max as u32),
        Suite::Rsk => Outcome::merged(vec![
            check_worked_example(),
            check_rs_identity(max),
            check_sch_outputs(max),
        ]),
        Suite::Lattice => Outcome::merged(vec![
            check_lattice(max as u32, 10_000, seed),
            check_chains_vs_tableaux(max.min(10) as u32),
        ]),
        Suite::Sav => Outcome::merged(vec![check_weak_pattern_poset(max.min(5)), check_sav(max)]),
        Suite::IntervalTheorem => check_interval_theorem(max, seed),
        Suite::Hook => check_hook(max),
    });
    Ok(VerifyReport {
        suite,
        max,
        seed,
        checks: outcome.checks,
        violations: outcome.violations,
        findings: outcome.findings,
        wall_time_ms: start.elapsed().as_millis(),
    })
}

fn perms(n: usize) -> Vec<Permutation> {
    Permutation::all(n).collect()
}

/// Bell numbers `B_0..=B_n` from the Bell triangle.
pub fn bell_numbers(n: usize) -> Vec<u64> {
    let mut bells = vec![1u64];
    let mut row = vec![1u64];
    for _ in 0..n {
        let mut next = vec![*row.last().unwrap()];
        for &x in &row {
            next.push(next.last().unwrap() + x);
        }
        bells.push(next[0]);
        row = next;
    }
    bells.truncate(n + 1);
    bells
}

/// The insertion example with P = 1278/349/56 and Q = 1258/349/67.
pub fn check_worked_example() -> Outcome {
    let mut out = Outcome::default();
    let p: Permutation = "465193287".parse().expect("literal");
    let expected_p = vec![vec![1, 2, 7, 8], vec![3, 4, 9], vec![5, 6]];
    let expected_q = vec![vec![1, 2, 5, 8], vec![3, 4, 9], vec![6, 7]];
    match sch_insert(&p) {
        Ok((tp, tq)) => {
            out.check(tp.rows() == expected_p, "worked-example-P", || format!("{:?}", tp.rows()));
            out.check(tq.rows() == expected_q, "worked-example-Q", || format!("{:?}", tq.rows()));
        }
        Err(e) => out.check(false, "worked-example", || e.to_string()),
    }
    out
}

/// Σ (f^λ)² = n! with f^λ by enumeration, and RS shape frequencies equal
/// (f^λ)².
pub fn check_rs_identity(max_n: usize) -> Outcome {
    let parts: Vec<Outcome> = (1..=max_n)
        .into_par_iter()
        .map(|n| {
            let mut out = Outcome::default();
            let lambdas = enumerate_partitions(n as u32);
            let f: Vec<u64> = lambdas.iter().map(count_standard_young_tableaux).collect();
            let factorial: u64 = (1..=n as u64).product();
            let sum: u64 = f.iter().map(|x| x * x).sum();
            out.check(sum == factorial, "rs-sum-of-squares", || format!("n={n}: {sum} != {factorial}"));
            let mut freq: BTreeMap<Vec<u32>, u64> = BTreeMap::new();
            let mut pairs = BTreeSet::new();
            for p in Permutation::all(n) {
                let (tp, tq) = rs_insert(&p);
                out.check(
                    tp.is_standard() && tq.is_standard() && tp.shape() == tq.shape(),
                    "rs-standard-equal-shapes",
                    || p.to_string(),
                );
                *freq.entry(tp.shape().into_parts()).or_default() += 1;
                pairs.insert((tp.rows().to_vec(), tq.rows().to_vec()));
            }
            out.check(pairs.len() as u64 == factorial, "rs-injective", || format!("n={n}"));
            for (lambda, fl) in lambdas.iter().zip(&f) {
                let got = freq.get(lambda.parts()).copied().unwrap_or(0);
                out.check(got == fl * fl, "rs-shape-frequency", || format!("({lambda}) {got} != {}", fl * fl));
            }
            out
        })
        .collect();
    Outcome::merged(parts)
}

/// Both Schröder insertion outputs are standard of equal shape.
pub fn check_sch_outputs(max_n: usize) -> Outcome {
    let parts: Vec<Outcome> = (1..=max_n)
        .map(|n| {
            let chunk: Vec<Outcome> = perms(n)
                .par_iter()
                .map(|p| {
                    let mut out = Outcome::default();
                    let r = sch_insert(p);
                    out.check(
                        matches!(&r, Ok((a, b)) if a.shape() == b.shape()),
                        "sch-standard-equal-shapes",
                        || p.to_string(),
                    );
                    out
                })
                .collect();
            Outcome::merged(chunk)
        })
        .collect();
    Outcome::merged(parts)
}

fn insertion_class(p: &Permutation) -> Option<ShapeClass> {
    sch_insert(p).ok().map(|(tp, _)| classify_partition(tp.shape().partition()))
}

/// Single-row insertion set equals the predicate set, of size 2^⌊n/2⌋.
pub fn check_single_row(max_n: usize) -> Outcome {
    let parts: Vec<Outcome> = (1..=max_n)
        .map(|n| {
            let all = perms(n);
            let rows: Vec<(bool, bool)> = all
                .par_iter()
                .map(|p| {
                    let one_row = sch_insert(p).map(|(t, _)| t.shape().num_rows() <= 1).unwrap_or(false);
                    (one_row, is_single_row_permutation(p))
                })
                .collect();
            let mut out = Outcome::default();
            for (p, &(shape, pred)) in all.iter().zip(&rows) {
                out.check(shape == pred, "single-row-set", || format!("{p}: shape {shape}, predicate {pred}"));
            }
            let count = rows.iter().filter(|r| r.0).count() as u64;
            out.check(count == 1 << (n / 2), "single-row-count", || format!("n={n}: {count}"));
            out
        })
        .collect();
    Outcome::merged(parts)
}

/// Single-column insertion set equals Av(123, 213), of size 2^(n-1).
pub fn check_single_column(max_n: usize) -> Outcome {
    let pats = single_column_patterns();
    let parts: Vec<Outcome> = (1..=max_n)
        .map(|n| {
            let all = perms(n);
            let rows: Vec<(bool, bool)> = all
                .par_iter()
                .map(|p| {
                    let one_col = sch_insert(p).map(|(t, _)| t.shape().num_square_columns() <= 1).unwrap_or(false);
                    (one_col, avoids(p, &pats))
                })
                .collect();
            let mut out = Outcome::default();
            for (p, &(shape, av)) in all.iter().zip(&rows) {
                out.check(shape == av, "single-column-set", || format!("{p}: shape {shape}, avoids {av}"));
                out.check(av == is_single_column_permutation(p), "single-column-predicate", || p.to_string());
            }
            let count = rows.iter().filter(|r| r.0).count() as u64;
            out.check(count == 1 << (n - 1), "single-column-count", || format!("n={n}: {count}"));
            out
        })
        .collect();
    Outcome::merged(parts)
}

/// Compares hook-shaped insertion tableaux with the 2-rooted-shuffle
/// predicate. Mismatches are findings, never violations.
pub fn check_hook(max_n: usize) -> Outcome {
    let mut out = Outcome::default();
    for n in 1..=max_n {
        let all = perms(n);
        let rows: Vec<(bool, bool)> = all
            .par_iter()
            .map(|p| (insertion_class(p).is_some_and(|c| c != ShapeClass::Other), is_hook_permutation(p)))
            .collect();
        out.checks += all.len() as u64;
        let hook = rows.iter().filter(|r| r.0).count();
        let pred = rows.iter().filter(|r| r.1).count();
        let hook_only: Vec<&Permutation> = all.iter().zip(&rows).filter(|(_, r)| r.0 && !r.1).map(|(p, _)| p).collect();
        let pred_only: Vec<&Permutation> = all.iter().zip(&rows).filter(|(_, r)| !r.0 && r.1).map(|(p, _)| p).collect();
        if !hook_only.is_empty() || !pred_only.is_empty() {
            let example = |v: &[&Permutation]| v.first().map_or("-".to_string(), |p| {
                let shape = sch_insert(p).map(|(t, _)| t.shape().to_string()).unwrap_or_default();
                format!("{p} -> ({shape})")
            });
            out.findings.push(format!(
                "hook n={n}: hook-shaped {hook}, predicate {pred}, hook-only {} (e.g. {}), predicate-only {} (e.g. {})",
                hook_only.len(),
                example(&hook_only),
                pred_only.len(),
                example(&pred_only)
            ));
        }
    }
    out
}

/// Product-formula coefficients against enumeration.
pub fn check_gf(max_order: usize) -> Outcome {
    let mut out = Outcome::default();
    let gf = gf_coefficients(max_order);
    for (k, c) in gf.iter().enumerate() {
        let brute = BigUint::from(enumerate_schroeder_partitions(k as u32).len());
        out.check(*c == brute, "gf-coefficients", || format!("order {k}: {c} != {brute}"));
    }
    out
}

/// Fixed points of the squared cluster map.
pub fn check_cn_fixed_points(max_order: u32, max_n: u32) -> Outcome {
    let parts: Vec<Outcome> = (0..=max_order)
        .into_par_iter()
        .map(|order| {
            let mut out = Outcome::default();
            for p in enumerate_partitions(order) {
                let fixed2 = cluster_map(&cluster_map(&p, 2), 2) == p;
                out.check(fixed2 == is_schroeder(&p), "c2-fixed-points", || format!("({p})"));
                for n in 1..=max_n {
                    let fixed = cluster_map(&cluster_map(&p, n), n) == p;
                    out.check(fixed == satisfies_cn_condition(&p, n), "cn-fixed-points", || format!("n={n} ({p})"));
                }
            }
            out
        })
        .collect();
    Outcome::merged(parts)
}

fn shapes_up_to(max_order: u32) -> Vec<SchroderShape> {
    (0..=max_order)
        .flat_map(enumerate_schroeder_partitions)
        .map(|p| SchroderShape::new(p).expect("enumerated"))
        .collect()
}

/// Exhaustive closure and seeded random lattice laws.
pub fn check_lattice(max_order: u32, trials: usize, seed: u64) -> Outcome {
    let all = shapes_up_to(max_order);
    let parts: Vec<Outcome> = all
        .par_iter()
        .map(|a| {
            let mut out = Outcome::default();
            for b in &all {
                let j = join_partition(a.partition(), b.partition());
                let m = meet_partition(a.partition(), b.partition());
                out.check(is_schroeder(&j), "join-closure", || format!("({a}) ({b})"));
                out.check(is_schroeder(&m), "meet-closure", || format!("({a}) ({b})"));
            }
            out
        })
        .collect();
    let mut out = Outcome::merged(parts);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..trials {
        let a = &all[rng.gen_range(0..all.len())];
        let b = &all[rng.gen_range(0..all.len())];
        let c = &all[rng.gen_range(0..all.len())];
        let w = || format!("({a}) ({b}) ({c})");
        out.check(join(a, b) == join(b, a) && meet(a, b) == meet(b, a), "commutativity", w);
        out.check(join(&join(a, b), c) == join(a, &join(b, c)), "join-associativity", w);
        out.check(meet(&meet(a, b), c) == meet(a, &meet(b, c)), "meet-associativity", w);
        out.check(join(a, &meet(a, b)) == *a && meet(a, &join(a, b)) == *a, "absorption", w);
        out.check(join(a, &meet(b, c)) == meet(&join(a, b), &join(a, c)), "join-distributivity", w);
        out.check(meet(a, &join(b, c)) == join(&meet(a, b), &meet(a, c)), "meet-distributivity", w);
    }
    out
}

/// Cover-degree bounds, common covers, and attainment of both bounds.
pub fn check_differential(max_order: u32) -> Outcome {
    let mut out = Outcome::default();
    match verify_differential(max_order) {
        Ok(r) => {
            out.checks += (r.partitions_checked + r.pairs_checked) as u64;
            for v in r.violations {
                out.violations.push(Violation { claim: v.claim.to_string(), witness: v.witness });
            }
            out.check(r.lower_bound_witness.is_some(), "lower-bound-attained", || "none".into());
            out.check(r.upper_bound_witness.is_some(), "upper-bound-attained", || "none".into());
            let ranges: Vec<String> = r.degree_ranges.iter().map(|(k, lo, hi)| format!("k={k}:{lo}..{hi}")).collect();
            out.findings.push(format!("up-degree ranges by down-degree: {}", ranges.join(" ")));
        }
        Err(e) => out.check(false, "differential", || e.to_string()),
    }
    out
}

/// Saturated chains from the empty shape versus standard fillings.
pub fn check_chains_vs_tableaux(max_order: u32) -> Outcome {
    let shapes = shapes_up_to(max_order);
    let parts: Vec<Outcome> = shapes
        .par_iter()
        .map(|s| {
            let mut out = Outcome::default();
            let chains = count_chains(s);
            let tableaux = count_tableaux(s).map(BigUint::from);
            out.check(tableaux.as_ref() == Ok(&chains), "chains-equal-tableaux", || {
                format!("({s}) chains {chains}, tableaux {tableaux:?}")
            });
            out
        })
        .collect();
    Outcome::merged(parts)
}

/// Structure of the weak-pattern posets of sizes `1..=max_n`.
pub fn check_weak_pattern_poset(max_n: usize) -> Outcome {
    let mut out = Outcome::default();
    for n in 1..=max_n {
        let x = match build_weak_pattern_poset(n) {
            Ok(x) => x,
            Err(e) => {
                out.check(false, "xn-build", || e.to_string());
                continue;
            }
        };
        match n {
            3 => out.check(x.elements.len() == 5, "xn-size", || format!("n=3: {}", x.elements.len())),
            4 => out.check(x.elements.len() == 16, "xn-size", || format!("n=4: {}", x.elements.len())),
            _ => {}
        }
        for failure in x.check_invariants() {
            out.check(false, "xn-structure", || format!("n={n}: {failure}"));
        }
        out.checks += 1;
        let mut edges = x.hasse_edges.clone();
        edges.sort_unstable();
        let by_deletion = weak_pattern_edges_by_deletion(&x.elements);
        out.check(edges == by_deletion, "xn-edges-by-deletion", || format!("n={n}"));
        if n == 3 {
            out.check(x.hasse_edges.len() == 5, "xn-edge-count", || format!("n=3: {}", x.hasse_edges.len()));
        }
    }
    out
}

fn posets_up_to(max_n: usize, mode: Mode) -> Vec<FinitePoset> {
    (0..=max_n).flat_map(|n| enumerate_posets(n, mode).expect("within limit")).collect()
}

fn subsets(n: usize) -> impl Iterator<Item = u64> {
    0..1u64 << n
}

/// Strong-avoidance characterizations, with hosts of size at most
/// `max_host`.
pub fn check_sav(max_host: usize) -> Outcome {
    let mut out = Outcome::default();
    let vee = FinitePoset::vee();

    // ∨: set equality and the Bell count (labeled)
    let bell = bell_numbers(5);
    for n in 0..=max_host.min(5) {
        let labeled = enumerate_posets(n, Mode::Labeled).expect("within limit");
        let mut count = 0u64;
        for q in &labeled {
            let avoids = strongly_avoids(q, &vee);
            count += avoids as u64;
            out.check(avoids == q.is_disjoint_union_of_flats(), "sav-vee-flats", || q.to_json());
        }
        out.check(count == bell[n], "sav-vee-bell", || format!("n={n}: {count} labeled posets, Bell {}", bell[n]));
        out.check(
            sav_count(n, &vee, Mode::Labeled) == Ok(count),
            "sav-count-consistency",
            || format!("n={n}"),
        );
    }

    let hosts = posets_up_to(max_host, Mode::Unlabeled);
    let parts: Vec<Outcome> = hosts
        .par_iter()
        .map(|q| {
            let mut out = Outcome::default();
            let n = q.size();
            for k in 1..=4 {
                out.check(
                    strongly_avoids(q, &FinitePoset::chain(k)) == (q.height() < k),
                    "sav-chain-height",
                    || format!("k={k} {}", q.to_json()),
                );
                out.check(
                    strongly_avoids(q, &FinitePoset::antichain(k)) == (n < k),
                    "sav-discrete",
                    || format!("k={k} {}", q.to_json()),
                );
                if k >= 2 && n >= k {
                    let discrete = q.num_relations() == 0;
                    out.check(
                        strongly_avoids(q, &FinitePoset::single_cover(k)) == discrete,
                        "sav-single-cover",
                        || format!("k={k} {}", q.to_json()),
                    );
                }
            }
            out
        })
        .collect();
    out.absorb(Outcome::merged(parts));

    // SAv(P) = Av(up-set of P)
    let patterns = posets_up_to(4, Mode::Unlabeled);
    let upsets: Vec<Vec<FinitePoset>> = patterns.iter().map(|p| upset_in_xn(p).expect("within limit")).collect();
    let parts: Vec<Outcome> = hosts
        .par_iter()
        .map(|q| {
            let mut out = Outcome::default();
            for (p, up) in patterns.iter().zip(&upsets) {
                let avoids_all = up.iter().all(|r| !contains_induced(q, r));
                out.check(strongly_avoids(q, p) == avoids_all, "sav-upset-reduction", || {
                    format!("pattern {} host {}", p.to_json(), q.to_json())
                });
            }
            out
        })
        .collect();
    out.absorb(Outcome::merged(parts));

    out.absorb(check_sum_propositions(3, max_host.min(5)));

    // connected patterns: components of an avoider avoid
    let connected: Vec<&FinitePoset> = patterns.iter().filter(|p| p.size() > 0 && p.is_connected()).collect();
    let parts: Vec<Outcome> = hosts
        .par_iter()
        .map(|q| {
            let mut out = Outcome::default();
            for p in &connected {
                if strongly_avoids(q, p) {
                    for comp in q.connected_components() {
                        out.check(strongly_avoids(&q.induced(&comp), p), "sav-connected-components", || {
                            format!("pattern {} host {}", p.to_json(), q.to_json())
                        });
                    }
                }
            }
            out
        })
        .collect();
    out.absorb(Outcome::merged(parts));
    out
}

/// Disjoint-union and linear-sum propositions for pattern pieces of size
/// `1..=max_piece` and hosts of size at most `max_host`.
pub fn check_sum_propositions(max_piece: usize, max_host: usize) -> Outcome {
    let pieces: Vec<FinitePoset> = (1..=max_piece)
        .flat_map(|n| enumerate_posets(n, Mode::Unlabeled).expect("within limit"))
        .collect();
    let hosts = posets_up_to(max_host, Mode::Unlabeled);
    let parts: Vec<Outcome> = hosts
        .par_iter()
        .map(|r| {
            let mut out = Outcome::default();
            let n = r.size();
            let all = (1u64 << n) - 1;
            // blocks are nonempty
            let splits: Vec<(FinitePoset, FinitePoset, u64)> = subsets(n)
                .filter(|&m| m != 0 && m != all)
                .map(|m| (r.induced_mask(m), r.induced_mask(all & !m), m))
                .collect();
            for p in &pieces {
                for q in &pieces {
                    let w = || format!("P {} Q {} R {}", p.to_json(), q.to_json(), r.to_json());
                    let du = disjoint_union(p, q);
                    let split_ok = splits.iter().all(|(r1, r2, _)| strongly_avoids(r1, p) || strongly_avoids(r2, q));
                    out.check(strongly_avoids(r, &du) == split_ok, "sav-disjoint-union", w);

                    let ls = linear_sum(p, q);
                    if strongly_avoids(r, &ls) {
                        let ok = splits
                            .iter()
                            .filter(|(_, _, m)| is_below(r, *m, all & !m))
                            .all(|(r1, r2, _)| strongly_avoids(r1, p) || strongly_avoids(r2, q));
                        out.check(ok, "sav-linear-sum-ordered", w);
                    } else {
                        let found = splits
                            .iter()
                            .filter(|(_, _, m)| is_weakly_below(r, *m, all & !m))
                            .any(|(r1, r2, _)| weakly_contains(r1, p) && weakly_contains(r2, q));
                        out.check(found, "sav-linear-sum-weakly-ordered", w);
                    }
                }
            }
            out
        })
        .collect();
    Outcome::merged(parts)
}

fn no_lonely_tableaux(order: u32) -> Vec<SchroderTableau> {
    enumerate_schroeder_partitions(order)
        .into_iter()
        .filter(|p| p.parts().iter().all(|x| x % 2 == 0))
        .flat_map(|p| enumerate_tableaux(&SchroderShape::new(p).expect("enumerated")).expect("within limit"))
        .collect()
}

/// Witness decision against exhaustive tableau search, witness
/// constructions, the worked intervals, the forward direction and
/// re-coordinatization invariance.
pub fn check_interval_theorem(max_size: usize, seed: u64) -> Outcome {
    let mut out = Outcome::default();

    let q = SchroderTableau::new(vec![vec![1, 2, 5, 8], vec![3, 4, 9], vec![6, 7]]).expect("literal");
    let s = intervals_of_tableau(&q);
    out.check(
        s.intervals() == [(1, 2), (5, 8), (3, 4), (9, 10), (6, 7)],
        "intervals-of-worked-tableau",
        || s.to_string(),
    );

    for size in 1..=max_size {
        let realized: BTreeSet<FinitePoset> = no_lonely_tableaux(2 * size as u32)
            .par_iter()
            .map(|t| interval_order(&intervals_of_tableau(t)).canonical_form())
            .collect();
        let orders: Vec<FinitePoset> = enumerate_posets(size, Mode::Unlabeled)
            .expect("within limit")
            .into_iter()
            .filter(is_interval_order)
            .collect();
        let parts: Vec<Outcome> = orders
            .par_iter()
            .map(|p| {
                let mut out = Outcome::default();
                let witness = has_schroder_preimage(p).expect("interval order");
                out.check(witness.is_some() == realized.contains(p), "theorem-equivalence", || {
                    format!("{} witness {}", p.to_json(), witness.is_some())
                });
                if let Some(w) = witness {
                    let rep = interval_representation(p).expect("interval order");
                    match tableau_from_witness(&rep, &w) {
                        Ok(t) => {
                            out.check(!t.has_lonely_cells(), "witness-no-lonely-cells", || format!("{:?}", t.rows()));
                            let back = interval_order(&intervals_of_tableau(&t));
                            out.check(back.is_isomorphic(p), "witness-round-trip", || p.to_json());
                        }
                        Err(e) => out.check(false, "witness-construction", || format!("{}: {e}", p.to_json())),
                    }
                }
                out
            })
            .collect();
        out.absorb(Outcome::merged(parts));
    }

    let forward_max = (2 * max_size).saturating_sub(1).min(9) as u32;
    for order in 1..=forward_max {
        let tableaux: Vec<SchroderTableau> = enumerate_schroeder_partitions(order)
            .into_iter()
            .flat_map(|p| enumerate_tableaux(&SchroderShape::new(p).expect("enumerated")).expect("within limit"))
            .collect();
        let parts: Vec<Outcome> = tableaux
            .par_iter()
            .map(|t| {
                let mut out = Outcome::default();
                let p = interval_order(&intervals_of_tableau(t));
                let ok = is_interval_order(&p) && matches!(has_schroder_preimage(&p), Ok(Some(_)));
                out.check(ok, "forward-direction", || format!("{:?}", t.rows()));
                out
            })
            .collect();
        out.absorb(Outcome::merged(parts));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..1000 {
        let n = rng.gen_range(1..=7);
        let raw: Vec<(u32, u32)> = (0..n)
            .map(|_| {
                let a = rng.gen_range(1..20);
                (a, a + rng.gen_range(1..8))
            })
            .collect();
        let s = IntervalSet::new(raw).expect("valid intervals");
        // strictly increasing map on endpoint values
        let mut values: Vec<u32> = s.intervals().iter().flat_map(|&(a, b)| [a, b]).collect();
        values.sort_unstable();
        values.dedup();
        let mut next = 0u32;
        let image: BTreeMap<u32, u32> = values
            .iter()
            .map(|&v| {
                next += rng.gen_range(1..5);
                (v, next)
            })
            .collect();
        let moved = IntervalSet::new(s.intervals().iter().map(|(a, b)| (image[a], image[b])).collect())
            .expect("order-preserving image");
        let base = interval_order(&s);
        out.check(interval_order(&moved).is_isomorphic(&base), "recoordinatization-invariance", || s.to_string());
        out.check(
            interval_order(&recoordinatize(s.intervals())) == base,
            "recoordinatize-preserves-order",
            || s.to_string(),
        );
    }
    out
}
