//! Interval orders and their relation to Schröder tableaux.
//!
//! A tableau yields one closed interval per twin pair and per lonely cell.
//! Conversely an interval order whose elements can be laid out on a Young
//! diagram by an order-preserving bijection is realized by a tableau
//! without lonely cells.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::partitions::{enumerate_partitions, IntegerPartition};
use crate::posets::{contains_induced, find_weak_embedding, FinitePoset};
use crate::tableaux::SchroderTableau;

/// Closed integer intervals `[a, b]` with `1 <= a < b`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "IntervalJson", into = "IntervalJson")]
pub struct IntervalSet {
    intervals: Vec<(u32, u32)>,
}

#[derive(Serialize, Deserialize)]
struct IntervalJson {
    intervals: Vec<[u32; 2]>,
}

impl TryFrom<IntervalJson> for IntervalSet {
    type Error = Error;
    fn try_from(raw: IntervalJson) -> Result<Self> {
        IntervalSet::new(raw.intervals.into_iter().map(|[a, b]| (a, b)).collect())
    }
}

impl From<IntervalSet> for IntervalJson {
    fn from(s: IntervalSet) -> Self {
        IntervalJson { intervals: s.intervals.into_iter().map(|(a, b)| [a, b]).collect() }
    }
}

impl IntervalSet {
    pub fn new(intervals: Vec<(u32, u32)>) -> Result<Self> {
        if let Some(&(a, b)) = intervals.iter().find(|&&(a, b)| a == 0 || a >= b) {
            return Err(invalid(format!("[{a},{b}] is not an interval with 1 <= a < b")));
        }
        Ok(IntervalSet { intervals })
    }

    pub fn intervals(&self) -> &[(u32, u32)] {
        &self.intervals
    }

    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    /// True when the `2n` endpoints are exactly `1..=2n`.
    pub fn has_distinct_initial_endpoints(&self) -> bool {
        let mut ends: Vec<u32> = self.intervals.iter().flat_map(|&(a, b)| [a, b]).collect();
        ends.sort_unstable();
        ends.iter().enumerate().all(|(i, &e)| e == i as u32 + 1)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("intervals serialize")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }
}

impl fmt::Display for IntervalSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.intervals.iter().map(|(a, b)| format!("[{a},{b}]")).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// Poset on interval indices with `I < J` iff `max I < min J`.
pub fn interval_order(s: &IntervalSet) -> FinitePoset {
    let iv = s.intervals();
    let pairs: Vec<(usize, usize)> = (0..iv.len())
        .flat_map(|i| (0..iv.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| iv[i].1 < iv[j].0)
        .collect();
    FinitePoset::new(iv.len(), &pairs).expect("interval precedence is a strict order")
}

/// No induced copy of two disjoint 2-chains.
pub fn is_interval_order(p: &FinitePoset) -> bool {
    !contains_induced(p, &FinitePoset::two_plus_two())
}

/// One interval per twin pair `[upper, lower]` and one `[a, n + 1]` per
/// lonely cell with entry `a`, listed row by row.
pub fn intervals_of_tableau(t: &SchroderTableau) -> IntervalSet {
    let n = t.order() as u32;
    let mut intervals = Vec::new();
    for row in t.rows() {
        for chunk in row.chunks(2) {
            match *chunk {
                [a, b] => intervals.push((a, b)),
                [a] => intervals.push((a, n + 1)),
                _ => unreachable!(),
            }
        }
    }
    IntervalSet { intervals }
}

/// Replaces endpoints by `1..=2n` preserving their order; at equal values
/// left endpoints come first, so touching intervals stay overlapping.
/// Accepts degenerate intervals `a == b`.
pub fn recoordinatize(intervals: &[(u32, u32)]) -> IntervalSet {
    // (value, is_right, index)
    let mut events: Vec<(u32, bool, usize)> = intervals
        .iter()
        .enumerate()
        .flat_map(|(i, &(a, b))| [(a, false, i), (b, true, i)])
        .collect();
    events.sort_unstable();
    let mut out = vec![(0u32, 0u32); intervals.len()];
    for (k, &(_, is_right, i)) in events.iter().enumerate() {
        if is_right {
            out[i].1 = k as u32 + 1;
        } else {
            out[i].0 = k as u32 + 1;
        }
    }
    IntervalSet { intervals: out }
}

/// An interval representation of an interval order (element `i` gets
/// interval `i`), with endpoints `1..=2n`.
pub fn interval_representation(p: &FinitePoset) -> Result<IntervalSet> {
    if !is_interval_order(p) {
        return Err(invalid("poset contains an induced 2+2 and is not an interval order"));
    }
    let n = p.size();
    let downs: Vec<u64> = (0..n).map(|a| p.down_mask(a)).collect();
    // strict down-sets of an interval order are nested
    let mut distinct = downs.clone();
    distinct.sort_by_key(|m| m.count_ones());
    distinct.dedup();
    let left = |a: usize| distinct.iter().position(|&d| d == downs[a]).unwrap() as u32;
    let right = |a: usize| {
        distinct
            .iter()
            .position(|&d| d >> a & 1 == 1)
            .map_or(distinct.len() as u32, |i| i as u32 - 1)
    };
    let raw: Vec<(u32, u32)> = (0..n).map(|a| (left(a), right(a))).collect();
    Ok(recoordinatize(&raw))
}

/// A finite down-set of the grid with its cells listed row by row.
/// Coordinates are 1-based `(row, column)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GridDownset {
    pub cells: Vec<(usize, usize)>,
}

impl GridDownset {
    pub fn from_partition(p: &IntegerPartition) -> Self {
        let cells = p
            .parts()
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (1..=len as usize).map(move |c| (r + 1, c)))
            .collect();
        GridDownset { cells }
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Row lengths.
    pub fn row_lengths(&self) -> Vec<usize> {
        let rows = self.cells.iter().map(|c| c.0).max().unwrap_or(0);
        (1..=rows).map(|r| self.cells.iter().filter(|c| c.0 == r).count()).collect()
    }

    pub fn is_down_set(&self) -> bool {
        self.cells.iter().all(|&(r, c)| {
            (r == 1 || self.cells.contains(&(r - 1, c))) && (c == 1 || self.cells.contains(&(r, c - 1)))
        })
    }

    /// Componentwise order on the cells, indexed as in `cells`.
    pub fn to_poset(&self) -> FinitePoset {
        let pairs: Vec<(usize, usize)> = (0..self.cells.len())
            .flat_map(|i| (0..self.cells.len()).map(move |j| (i, j)))
            .filter(|&(i, j)| {
                let (a, b) = (self.cells[i], self.cells[j]);
                i != j && a.0 <= b.0 && a.1 <= b.1
            })
            .collect();
        FinitePoset::new(self.cells.len(), &pairs).expect("componentwise order")
    }
}

/// All down-sets with `n` cells, by decreasing first-row length.
pub fn grid_downsets(n: u32) -> Vec<GridDownset> {
    enumerate_partitions(n).iter().map(GridDownset::from_partition).collect()
}

/// A down-set together with an order-preserving bijection onto the
/// elements of an interval order: cell `i` maps to `assignment[i]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub downset: GridDownset,
    pub assignment: Vec<usize>,
}

/// Searches the down-sets of size `|p|` for one admitting an
/// order-preserving bijection onto `p`; the first in search order wins.
pub fn has_schroder_preimage(p: &FinitePoset) -> Result<Option<Witness>> {
    if !is_interval_order(p) {
        return Err(invalid("poset contains an induced 2+2 and is not an interval order"));
    }
    let relations = p.num_relations();
    for downset in grid_downsets(p.size() as u32) {
        let d = downset.to_poset();
        if d.num_relations() > relations {
            continue;
        }
        if let Some(assignment) = find_weak_embedding(p, &d) {
            return Ok(Some(Witness { downset, assignment }));
        }
    }
    Ok(None)
}

/// Builds a tableau with one twin pair per cell of the witness down-set,
/// filled with the endpoints of the assigned interval.
pub fn tableau_from_witness(s: &IntervalSet, w: &Witness) -> Result<SchroderTableau> {
    let n = s.len();
    if !s.has_distinct_initial_endpoints() {
        return Err(invalid("interval endpoints must be distinct and exactly 1..=2n"));
    }
    if w.downset.len() != n || !w.downset.is_down_set() {
        return Err(invalid(format!("witness cells do not form a down-set of size {n}")));
    }
    let mut seen = vec![false; n];
    for &x in &w.assignment {
        if x >= n || seen[x] {
            return Err(invalid("witness assignment is not a bijection"));
        }
        seen[x] = true;
    }
    if w.assignment.len() != n {
        return Err(invalid("witness assignment is not a bijection"));
    }
    let d = w.downset.to_poset();
    let p = interval_order(s);
    for (i, j) in d.relations() {
        if !p.lt(w.assignment[i], w.assignment[j]) {
            return Err(invalid(format!(
                "witness is not order-preserving at cells {:?} < {:?}",
                w.downset.cells[i], w.downset.cells[j]
            )));
        }
    }
    let mut rows: Vec<Vec<u32>> = vec![Vec::new(); w.downset.row_lengths().len()];
    for (i, &(r, _)) in w.downset.cells.iter().enumerate() {
        let (a, b) = s.intervals()[w.assignment[i]];
        rows[r - 1].extend([a, b]);
    }
    let t = SchroderTableau::new(rows)?;
    debug_assert!(!t.has_lonely_cells());
    Ok(t)
}

/// Finds a witness for `s` and builds the corresponding tableau,
/// re-coordinatizing endpoints first.
pub fn preimage_tableau(s: &IntervalSet) -> Result<Option<(Witness, SchroderTableau)>> {
    let s = recoordinatize(s.intervals());
    let p = interval_order(&s);
    match has_schroder_preimage(&p)? {
        Some(w) => {
            let t = tableau_from_witness(&s, &w)?;
            Ok(Some((w, t)))
        }
        None => Ok(None),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::posets::{enumerate_posets, Mode};
    use crate::partitions::{enumerate_schroeder_partitions, SchroderShape};
    use crate::tableaux::enumerate_tableaux;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn set(v: &[(u32, u32)]) -> IntervalSet {
        IntervalSet::new(v.to_vec()).unwrap()
    }

    fn paper_q() -> SchroderTableau {
        SchroderTableau::new(vec![vec![1, 2, 5, 8], vec![3, 4, 9], vec![6, 7]]).unwrap()
    }

    #[test]
    fn interval_order_examples() {
        assert_eq!(interval_order(&set(&[(1, 2), (3, 4)])), FinitePoset::chain(2));
        assert_eq!(interval_order(&set(&[(1, 3), (2, 4)])), FinitePoset::antichain(2));
        let s = intervals_of_tableau(&paper_q());
        assert_eq!(s.intervals(), &[(1, 2), (5, 8), (3, 4), (9, 10), (6, 7)]);
        let p = interval_order(&s);
        let expected = FinitePoset::new(
            5,
            &[(0, 1), (0, 2), (0, 3), (0, 4), (2, 1), (2, 3), (2, 4), (1, 3), (4, 3)],
        )
        .unwrap();
        assert_eq!(p, expected);
        assert!(IntervalSet::new(vec![(2, 2)]).is_err());
        assert!(IntervalSet::from_json(r#"{"intervals":[[3,1]]}"#).is_err());
        assert_eq!(IntervalSet::from_json(&s.to_json()).unwrap(), s);
    }

    #[test]
    fn small_tableaux_intervals() {
        let t = SchroderTableau::new(vec![vec![1]]).unwrap();
        assert_eq!(intervals_of_tableau(&t).intervals(), &[(1, 2)]);
        let t = SchroderTableau::new(vec![vec![1, 2]]).unwrap();
        assert_eq!(intervals_of_tableau(&t).intervals(), &[(1, 2)]);
    }

    #[test]
    fn interval_order_recognition() {
        assert!(!is_interval_order(&FinitePoset::two_plus_two()));
        for n in 0..6 {
            assert!(is_interval_order(&FinitePoset::chain(n)));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..500 {
            let n = rng.gen_range(1..8);
            let v: Vec<(u32, u32)> = (0..n)
                .map(|_| {
                    let a = rng.gen_range(1..15);
                    (a, a + rng.gen_range(1..6))
                })
                .collect();
            assert!(is_interval_order(&interval_order(&set(&v))));
        }
    }

    #[test]
    fn representation_round_trip() {
        for n in 0..=5 {
            for p in enumerate_posets(n, Mode::Labeled).unwrap() {
                match interval_representation(&p) {
                    Ok(s) => {
                        assert!(s.has_distinct_initial_endpoints());
                        assert_eq!(interval_order(&s), p);
                    }
                    Err(_) => assert!(!is_interval_order(&p)),
                }
            }
        }
    }

    #[test]
    fn recoordinatize_preserves_order() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..500 {
            let n = rng.gen_range(1..7);
            let v: Vec<(u32, u32)> = (0..n)
                .map(|_| {
                    let a = rng.gen_range(1..10);
                    (a, a + rng.gen_range(1..4))
                })
                .collect();
            let s = set(&v);
            let r = recoordinatize(s.intervals());
            assert!(r.has_distinct_initial_endpoints());
            assert_eq!(interval_order(&r), interval_order(&s));
        }
    }

    #[test]
    fn downset_counts() {
        let counts: Vec<usize> = (1..=4).map(|n| grid_downsets(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 3, 5]);
        assert!(grid_downsets(6).iter().all(GridDownset::is_down_set));
        assert_eq!(grid_downsets(3)[0].row_lengths(), vec![3]);
    }

    #[test]
    fn preimage_examples() {
        let chain2 = interval_order(&set(&[(1, 2), (3, 4)]));
        let w = has_schroder_preimage(&chain2).unwrap().unwrap();
        assert_eq!(w.downset.row_lengths(), vec![2]);
        let t = tableau_from_witness(&set(&[(1, 2), (3, 4)]), &w).unwrap();
        assert_eq!(t.rows(), &[vec![1, 2, 3, 4]]);
        assert!(has_schroder_preimage(&FinitePoset::antichain(2)).unwrap().is_none());
        assert!(has_schroder_preimage(&FinitePoset::two_plus_two()).is_err());
        let (_, t) = preimage_tableau(&set(&[(1, 2)])).unwrap().unwrap();
        assert_eq!(t.rows(), &[vec![1, 2]]);

        let s = intervals_of_tableau(&paper_q());
        let (_, t) = preimage_tableau(&s).unwrap().unwrap();
        assert!(!t.has_lonely_cells());
        assert!(interval_order(&intervals_of_tableau(&t)).is_isomorphic(&interval_order(&s)));
    }

    #[test]
    fn witness_validation() {
        let s = set(&[(1, 2), (3, 4)]);
        let bad = Witness { downset: GridDownset::from_partition(&IntegerPartition::new(vec![2]).unwrap()), assignment: vec![1, 0] };
        assert!(tableau_from_witness(&s, &bad).is_err());
        let not_down = Witness { downset: GridDownset { cells: vec![(1, 1), (2, 2)] }, assignment: vec![0, 1] };
        assert!(tableau_from_witness(&s, &not_down).is_err());
        let sparse = set(&[(1, 2), (5, 6)]);
        let ok = Witness { downset: GridDownset::from_partition(&IntegerPartition::new(vec![2]).unwrap()), assignment: vec![0, 1] };
        assert!(tableau_from_witness(&sparse, &ok).is_err());
    }

    #[test]
    fn witness_round_trip_up_to_four() {
        for n in 1..=4 {
            for p in enumerate_posets(n, Mode::Unlabeled).unwrap() {
                if !is_interval_order(&p) {
                    continue;
                }
                let s = interval_representation(&p).unwrap();
                if let Some(w) = has_schroder_preimage(&p).unwrap() {
                    let t = tableau_from_witness(&s, &w).unwrap();
                    assert!(!t.has_lonely_cells());
                    assert!(interval_order(&intervals_of_tableau(&t)).is_isomorphic(&p));
                }
            }
        }
    }

    #[test]
    fn forward_direction_small_orders() {
        for order in 1..=7 {
            for shape in enumerate_schroeder_partitions(order) {
                let shape = SchroderShape::new(shape).unwrap();
                for t in enumerate_tableaux(&shape).unwrap() {
                    let p = interval_order(&intervals_of_tableau(&t));
                    assert!(is_interval_order(&p));
                    assert!(has_schroder_preimage(&p).unwrap().is_some(), "{:?}", t.rows());
                }
            }
        }
    }
}
