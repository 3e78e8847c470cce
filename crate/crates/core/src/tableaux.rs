//! Standard Schröder tableaux.
//!
//! Cells are read along rows (left to right) and along square-columns: for
//! square-column `j`, each row contributes its upper triangle (position
//! `2j-1`) and then its lower triangle (position `2j`), rows taken top to
//! bottom, absent cells skipped. A filling of `1..=n` is standard when both
//! readings are strictly increasing.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{check_limit, invalid, Error, Result};
use crate::lattice::leq;
use crate::partitions::{Cell, CellKind, IntegerPartition, SchroderShape};

/// Largest order accepted by [`enumerate_tableaux`] and [`count_tableaux`].
pub const DEFAULT_MAX_TABLEAU_ORDER: usize = 14;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SchroderTableau {
    shape: SchroderShape,
    rows: Vec<Vec<u32>>,
}

#[derive(Deserialize)]
struct TableauJson {
    shape: Vec<u32>,
    rows: Vec<Vec<u32>>,
}

impl<'de> Deserialize<'de> for SchroderTableau {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = TableauJson::deserialize(d)?;
        let lens: Vec<u32> = raw.rows.iter().map(|r| r.len() as u32).collect();
        if lens != raw.shape {
            return Err(serde::de::Error::custom(format!(
                "shape {:?} does not match row lengths {:?}",
                raw.shape, lens
            )));
        }
        SchroderTableau::new(raw.rows).map_err(serde::de::Error::custom)
    }
}

/// Shape implied by the row lengths of a candidate filling.
fn shape_of(rows: &[Vec<u32>]) -> Result<SchroderShape> {
    let lens: Vec<u32> = rows.iter().map(|r| r.len() as u32).collect();
    SchroderShape::new(IntegerPartition::new(lens)?)
}

fn check_bijection(rows: &[Vec<u32>]) -> Result<()> {
    let n: usize = rows.iter().map(Vec::len).sum();
    let mut seen = vec![false; n + 1];
    for &v in rows.iter().flatten() {
        let v = v as usize;
        if v == 0 || v > n || seen[v] {
            return Err(invalid(format!("filling is not a bijection with 1..={n}")));
        }
        seen[v] = true;
    }
    Ok(())
}

/// Cells of `shape` in square-column reading order, one vector per column.
pub fn square_columns(shape: &SchroderShape) -> Vec<Vec<Cell>> {
    (1..=shape.num_square_columns())
        .map(|j| {
            let mut col = Vec::new();
            for row in 1..=shape.num_rows() {
                let len = shape.row_len(row);
                for position in [2 * j - 1, 2 * j] {
                    if position <= len {
                        col.push(Cell { row, position });
                    }
                }
            }
            col
        })
        .collect()
}

/// Whether a filling is a standard Schröder tableau. Fillings whose row
/// lengths are not a Schröder partition, or that are not a bijection with
/// `1..=n`, are an error rather than `false`.
pub fn is_standard(rows: &[Vec<u32>]) -> Result<bool> {
    let shape = shape_of(rows)?;
    check_bijection(rows)?;
    let at = |c: &Cell| rows[c.row - 1][c.position - 1];
    let rows_ok = rows.iter().all(|r| r.windows(2).all(|w| w[0] < w[1]));
    let cols_ok = square_columns(&shape)
        .iter()
        .all(|col| col.windows(2).all(|w| at(&w[0]) < at(&w[1])));
    Ok(rows_ok && cols_ok)
}

impl SchroderTableau {
    /// Validates a filling given row by row.
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self> {
        if !is_standard(&rows)? {
            return Err(invalid(format!("filling {rows:?} is not standard")));
        }
        let shape = shape_of(&rows)?;
        Ok(SchroderTableau { shape, rows })
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<Vec<u32>>) -> Self {
        let shape = shape_of(&rows).expect("valid shape");
        SchroderTableau { shape, rows }
    }

    pub fn shape(&self) -> &SchroderShape {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn order(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn entry(&self, cell: Cell) -> Option<u32> {
        self.rows.get(cell.row.checked_sub(1)?)?.get(cell.position.checked_sub(1)?).copied()
    }

    pub fn has_lonely_cells(&self) -> bool {
        !self.shape.lonely_cells().is_empty()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&TableauJsonRef { shape: self.shape.parts(), rows: &self.rows })
            .expect("tableau serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }
}

#[derive(Serialize)]
struct TableauJsonRef<'a> {
    shape: &'a [u32],
    rows: &'a [Vec<u32>],
}

/// Per cell (row-major index): the row-major indices of the cells that must
/// hold a smaller entry, i.e. the immediate predecessor along the row and
/// along the square-column.
fn immediate_predecessors(shape: &SchroderShape) -> (Vec<Cell>, Vec<Vec<usize>>) {
    let cells: Vec<Cell> = shape.cells().collect();
    let index = |c: &Cell| cells.iter().position(|d| d == c).expect("cell of shape");
    let mut preds = vec![Vec::new(); cells.len()];
    for (i, c) in cells.iter().enumerate() {
        if c.position > 1 {
            preds[i].push(index(&Cell { row: c.row, position: c.position - 1 }));
        }
    }
    for col in square_columns(shape) {
        for w in col.windows(2) {
            let (a, b) = (index(&w[0]), index(&w[1]));
            if !preds[b].contains(&a) {
                preds[b].push(a);
            }
        }
    }
    (cells, preds)
}

/// Number of cells forced above / below each cell by transitivity.
fn forced_counts(preds: &[Vec<usize>]) -> (Vec<usize>, Vec<usize>) {
    let n = preds.len();
    // below[i]: bitset of cells that must be smaller than i; preds point to
    // earlier row-major indices so one forward pass closes transitively.
    let mut below = vec![0u128; n];
    for i in 0..n {
        for &p in &preds[i] {
            below[i] |= below[p] | (1u128 << p);
        }
    }
    let smaller: Vec<usize> = below.iter().map(|b| b.count_ones() as usize).collect();
    let larger: Vec<usize> = (0..n)
        .map(|i| below.iter().filter(|b| *b >> i & 1 == 1).count())
        .collect();
    (smaller, larger)
}

struct Filler<'a, F: FnMut(&[u32])> {
    preds: &'a [Vec<usize>],
    smaller: &'a [usize],
    larger: &'a [usize],
    values: Vec<u32>,
    used: Vec<bool>,
    visit: F,
}

impl<F: FnMut(&[u32])> Filler<'_, F> {
    fn fill(&mut self, i: usize) {
        let n = self.values.len();
        if i == n {
            (self.visit)(&self.values);
            return;
        }
        let lo = self.preds[i]
            .iter()
            .map(|&p| self.values[p] + 1)
            .max()
            .unwrap_or(1)
            .max(self.smaller[i] as u32 + 1);
        let hi = (n - self.larger[i]) as u32;
        for v in lo..=hi {
            if self.used[v as usize] {
                continue;
            }
            self.used[v as usize] = true;
            self.values[i] = v;
            self.fill(i + 1);
            self.used[v as usize] = false;
        }
    }
}

fn for_each_filling(shape: &SchroderShape, visit: impl FnMut(&[u32])) {
    let (cells, preds) = immediate_predecessors(shape);
    let (smaller, larger) = forced_counts(&preds);
    let mut filler = Filler {
        preds: &preds,
        smaller: &smaller,
        larger: &larger,
        values: vec![0; cells.len()],
        used: vec![false; cells.len() + 1],
        visit,
    };
    filler.fill(0);
}

fn split_rows(shape: &SchroderShape, flat: &[u32]) -> Vec<Vec<u32>> {
    let mut rows = Vec::with_capacity(shape.num_rows());
    let mut start = 0;
    for &len in shape.parts() {
        rows.push(flat[start..start + len as usize].to_vec());
        start += len as usize;
    }
    rows
}

/// All standard tableaux of `shape`, ordered lexicographically by their
/// row-concatenated entries.
pub fn enumerate_tableaux(shape: &SchroderShape) -> Result<Vec<SchroderTableau>> {
    enumerate_tableaux_with_limit(shape, DEFAULT_MAX_TABLEAU_ORDER)
}

pub fn enumerate_tableaux_with_limit(
    shape: &SchroderShape,
    limit: usize,
) -> Result<Vec<SchroderTableau>> {
    check_limit("tableau enumeration", shape.order() as usize, limit)?;
    let mut out = Vec::new();
    for_each_filling(shape, |flat| {
        out.push(SchroderTableau {
            shape: shape.clone(),
            rows: split_rows(shape, flat),
        })
    });
    Ok(out)
}

pub fn count_tableaux(shape: &SchroderShape) -> Result<u64> {
    count_tableaux_with_limit(shape, DEFAULT_MAX_TABLEAU_ORDER)
}

pub fn count_tableaux_with_limit(shape: &SchroderShape, limit: usize) -> Result<u64> {
    check_limit("tableau enumeration", shape.order() as usize, limit)?;
    let mut count = 0u64;
    for_each_filling(shape, |_| count += 1);
    Ok(count)
}

/// The tableau recording a saturated chain `() = s_0 < s_1 < ... < s_n`:
/// the cell added at step `k` receives `k`.
pub fn chain_to_tableau(chain: &[SchroderShape]) -> Result<SchroderTableau> {
    let first = chain.first().ok_or_else(|| invalid("empty chain"))?;
    if first.order() != 0 {
        return Err(invalid("chain must start at the empty shape"));
    }
    let mut rows: Vec<Vec<u32>> = Vec::new();
    for (k, w) in chain.windows(2).enumerate() {
        let (a, b) = (&w[0], &w[1]);
        if b.order() != a.order() + 1 || !leq(a, b) {
            return Err(invalid(format!("({a}) -> ({b}) is not a cover")));
        }
        let row = (0..b.num_rows())
            .find(|&i| b.partition().part(i) != a.partition().part(i))
            .expect("shapes differ");
        if row == rows.len() {
            rows.push(Vec::new());
        }
        rows[row].push(k as u32 + 1);
    }
    Ok(SchroderTableau::from_rows_unchecked(rows))
}

/// The chain of shapes occupied by entries `<= k`, for `k = 0..=n`.
pub fn tableau_to_chain(t: &SchroderTableau) -> Vec<SchroderShape> {
    (0..=t.order() as u32)
        .map(|k| {
            let parts = t
                .rows
                .iter()
                .map(|r| r.iter().filter(|&&v| v <= k).count() as u32)
                .collect();
            SchroderShape::from_partition_unchecked(IntegerPartition::from_unsorted(parts))
        })
        .collect()
}

/// ASCII drawing. Each square is boxed by `|` and split by `\`: the upper
/// triangle's entry sits left of the diagonal, the lower one right of it. A
/// lonely cell is drawn as a square with an empty lower half.
pub fn render(t: &SchroderTableau) -> String {
    let width = t.order().max(1).to_string().len();
    let mut out = String::new();
    for (i, row) in t.rows.iter().enumerate() {
        out.push('|');
        for (c, pair) in row.chunks(2).enumerate() {
            let cell = Cell { row: i + 1, position: 2 * c + 1 };
            debug_assert_eq!(cell.kind(), CellKind::Upper);
            let upper = pair[0];
            match pair.get(1) {
                Some(lower) => write!(out, "{upper:>width$}\\{lower:<width$}|").unwrap(),
                None => write!(out, "{upper:>width$}\\{:<width$}|", "").unwrap(),
            }
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::count_chains;
    use crate::partitions::enumerate_schroeder_partitions;
    use num_bigint::BigUint;

    fn shape(s: &str) -> SchroderShape {
        s.parse().unwrap()
    }

    fn shapes_up_to(order: u32) -> Vec<SchroderShape> {
        (0..=order)
            .flat_map(enumerate_schroeder_partitions)
            .map(|p| SchroderShape::new(p).unwrap())
            .collect()
    }

    #[test]
    fn standard_examples() {
        let p = vec![vec![1, 2, 7, 8], vec![3, 4, 9], vec![5, 6]];
        assert_eq!(is_standard(&p), Ok(true));
        assert_eq!(is_standard(&[vec![1, 3], vec![2]]), Ok(false));
        assert_eq!(is_standard(&[vec![1]]), Ok(true));
    }

    #[test]
    fn standard_rejects_bad_input() {
        assert!(is_standard(&[vec![1, 1]]).is_err());
        assert!(is_standard(&[vec![1, 3]]).is_err());
        assert!(is_standard(&[vec![1], vec![2]]).is_err());
        assert!(is_standard(&[vec![1], vec![2, 3]]).is_err());
    }

    #[test]
    fn enumeration_examples() {
        let ts = enumerate_tableaux(&shape("2,1")).unwrap();
        assert_eq!(ts.len(), 1);
        assert_eq!(ts[0].rows(), &[vec![1, 2], vec![3]]);
        assert_eq!(count_tableaux(&shape("1")).unwrap(), 1);
        let ts = enumerate_tableaux(&shape("3,1")).unwrap();
        let rows: Vec<_> = ts.iter().map(|t| t.rows().to_vec()).collect();
        assert_eq!(rows, vec![vec![vec![1, 2, 3], vec![4]], vec![vec![1, 2, 4], vec![3]]]);
        assert!(enumerate_tableaux_with_limit(&shape("3,1"), 3).is_err());
    }

    /// Filter over all `n!` fillings.
    fn brute_force_count(s: &SchroderShape) -> usize {
        use itertools::Itertools;
        let n = s.order();
        (1..=n)
            .permutations(n as usize)
            .filter(|flat| is_standard(&split_rows(s, flat)).unwrap())
            .count()
    }

    #[test]
    fn backtracking_matches_brute_force() {
        for s in shapes_up_to(7) {
            assert_eq!(count_tableaux(&s).unwrap() as usize, brute_force_count(&s), "({s})");
        }
    }

    #[test]
    fn enumeration_is_sorted_and_distinct() {
        for s in shapes_up_to(9) {
            let ts = enumerate_tableaux(&s).unwrap();
            assert!(ts.windows(2).all(|w| w[0].rows.concat() < w[1].rows.concat()));
            for t in &ts {
                assert_eq!(is_standard(t.rows()), Ok(true));
            }
        }
    }

    #[test]
    fn chains_match_tableaux() {
        for s in shapes_up_to(10) {
            assert_eq!(
                BigUint::from(count_tableaux(&s).unwrap()),
                count_chains(&s),
                "({s})"
            );
        }
    }

    #[test]
    fn chain_examples() {
        let chain: Vec<_> = ["", "1", "2", "2,1"].iter().map(|s| shape(s)).collect();
        let t = chain_to_tableau(&chain).unwrap();
        assert_eq!(t.rows(), &[vec![1, 2], vec![3]]);
        let t = chain_to_tableau(&[shape(""), shape("1")]).unwrap();
        assert_eq!(t.rows(), &[vec![1]]);
        assert!(chain_to_tableau(&[shape(""), shape("2")]).is_err());
        assert!(chain_to_tableau(&[shape("1"), shape("2")]).is_err());
        assert!(chain_to_tableau(&[]).is_err());
    }

    #[test]
    fn chain_round_trip_to_8() {
        for s in shapes_up_to(8) {
            for t in enumerate_tableaux(&s).unwrap() {
                let chain = tableau_to_chain(&t);
                let back = chain_to_tableau(&chain).unwrap();
                assert_eq!(is_standard(back.rows()), Ok(true));
                assert_eq!(back, t);
            }
        }
    }

    #[test]
    fn every_saturated_chain_gives_a_standard_filling() {
        use crate::lattice::covers;
        fn walk(chain: &mut Vec<SchroderShape>, depth: u32, seen: &mut usize) {
            let t = chain_to_tableau(chain).unwrap();
            assert_eq!(is_standard(t.rows()), Ok(true));
            *seen += 1;
            if depth == 0 {
                return;
            }
            for next in covers(chain.last().unwrap()).up_covers {
                chain.push(next);
                walk(chain, depth - 1, seen);
                chain.pop();
            }
        }
        let mut seen = 0;
        walk(&mut vec![SchroderShape::empty()], 8, &mut seen);
        let expected: u64 = (0..=8)
            .flat_map(enumerate_schroeder_partitions)
            .map(|p| count_tableaux(&SchroderShape::new(p).unwrap()).unwrap())
            .sum();
        assert_eq!(seen as u64, expected);
    }

    #[test]
    fn render_examples() {
        let t = SchroderTableau::new(vec![vec![1]]).unwrap();
        assert_eq!(render(&t), "|1\\ |\n");
        let t = SchroderTableau::new(vec![vec![1, 2], vec![3]]).unwrap();
        assert_eq!(render(&t), "|1\\2|\n|3\\ |\n");
        let p = SchroderTableau::new(vec![vec![1, 2, 7, 8], vec![3, 4, 9], vec![5, 6]]).unwrap();
        assert_eq!(render(&p), "|1\\2|7\\8|\n|3\\4|9\\ |\n|5\\6|\n");
    }

    #[test]
    fn json_round_trip() {
        let p = SchroderTableau::new(vec![vec![1, 2, 7, 8], vec![3, 4, 9], vec![5, 6]]).unwrap();
        let text = p.to_json();
        assert_eq!(text, r#"{"shape":[4,3,2],"rows":[[1,2,7,8],[3,4,9],[5,6]]}"#);
        assert_eq!(SchroderTableau::from_json(&text).unwrap(), p);
        assert!(SchroderTableau::from_json(r#"{"shape":[2],"rows":[[1,2],[3]]}"#).is_err());
        assert!(SchroderTableau::from_json(r#"{"shape":[2,1],"rows":[[1,3],[2]]}"#).is_err());
    }
}
