//! Integer partitions, the Schröder predicate, cluster maps and the
//! generating function of Schröder partitions.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};

/// A weakly decreasing sequence of positive parts. The empty sequence is the
/// unique partition of 0. Trailing zeros are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct IntegerPartition(Vec<u32>);

impl IntegerPartition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) {
            return Err(invalid("partition parts must be positive"));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(invalid(format!(
                "partition parts must be weakly decreasing: {parts:?}"
            )));
        }
        Ok(IntegerPartition(parts))
    }

    pub fn empty() -> Self {
        IntegerPartition(Vec::new())
    }

    /// Builds a partition from any sequence of nonnegative parts, dropping
    /// zeros and sorting.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        IntegerPartition(parts)
    }

    pub(crate) fn from_parts_unchecked(parts: Vec<u32>) -> Self {
        debug_assert!(IntegerPartition::new(parts.clone()).is_ok());
        IntegerPartition(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Part `i` (0-based), with the implicit zero parts past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// Sum of the parts.
    pub fn order(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn multiplicity(&self, value: u32) -> usize {
        self.0.iter().filter(|&&p| p == value).count()
    }

    /// Column lengths of the Young shape.
    pub fn conjugate(&self) -> IntegerPartition {
        let width = self.part(0);
        let cols = (1..=width)
            .map(|c| self.0.iter().take_while(|&&p| p >= c).count() as u32)
            .collect();
        IntegerPartition(cols)
    }

    pub fn into_parts(self) -> Vec<u32> {
        self.0
    }
}

impl From<IntegerPartition> for Vec<u32> {
    fn from(p: IntegerPartition) -> Self {
        p.0
    }
}

impl TryFrom<Vec<u32>> for IntegerPartition {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self> {
        IntegerPartition::new(parts)
    }
}

impl fmt::Display for IntegerPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.0 {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for IntegerPartition {
    type Err = Error;

    /// Parses `"9,6,6,3,1"`; the empty string is the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(IntegerPartition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|e| Error::Parse(format!("bad part {t:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        IntegerPartition::new(parts)
    }
}

/// True iff every odd part occurs exactly once.
pub fn is_schroeder(p: &IntegerPartition) -> bool {
    p.0.windows(2).all(|w| !(w[0] == w[1] && w[0] % 2 == 1))
}

/// The cluster map `c_n`: part `i` of the result is the total length of
/// columns `(i-1)n+1 ..= in` of the Young shape of `p`. `c_1` is conjugation.
pub fn cluster_map(p: &IntegerPartition, n: u32) -> IntegerPartition {
    assert!(n >= 1, "cluster size must be positive");
    let cols = p.conjugate();
    let parts = cols
        .0
        .chunks(n as usize)
        .map(|block| block.iter().sum())
        .collect();
    IntegerPartition(parts)
}

/// For every `k >= 0`, at most one part lies strictly between `kn` and
/// `(k+1)n`. This is exactly the fixed-point condition of `c_n` squared.
pub fn satisfies_cn_condition(p: &IntegerPartition, n: u32) -> bool {
    assert!(n >= 1, "cluster size must be positive");
    // parts are sorted, so parts sharing a block are adjacent
    let mut last_block = None;
    for &part in &p.0 {
        if part % n == 0 {
            continue;
        }
        let block = part / n;
        if last_block == Some(block) {
            return false;
        }
        last_block = Some(block);
    }
    true
}

/// All partitions of `order`, lexicographically decreasing.
pub fn enumerate_partitions(order: u32) -> Vec<IntegerPartition> {
    fn go(remaining: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<IntegerPartition>) {
        if remaining == 0 {
            out.push(IntegerPartition(prefix.clone()));
            return;
        }
        for first in (1..=remaining.min(max)).rev() {
            prefix.push(first);
            go(remaining - first, first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(order, order, &mut Vec::new(), &mut out);
    out
}

/// Schröder partitions of `order`, lexicographically decreasing.
pub fn enumerate_schroeder_partitions(order: u32) -> Vec<IntegerPartition> {
    enumerate_partitions(order)
        .into_iter()
        .filter(is_schroeder)
        .collect()
}

/// Coefficients of `x^0 ..= x^max_order` in
/// `prod_{k>0} (1 + x^(2k-1)) / (1 - x^(2k))`, in exact arithmetic.
pub fn gf_coefficients(max_order: usize) -> Vec<BigUint> {
    let mut c = vec![BigUint::zero(); max_order + 1];
    c[0] = BigUint::one();
    let mut k = 1;
    while 2 * k - 1 <= max_order {
        // times (1 + x^m): descending so each term is used once
        let m = 2 * k - 1;
        for i in (m..=max_order).rev() {
            let add = c[i - m].clone();
            c[i] += add;
        }
        // divided by (1 - x^m): geometric series, ascending
        let m = 2 * k;
        for i in m..=max_order {
            let add = c[i - m].clone();
            c[i] += add;
        }
        k += 1;
    }
    c
}

/// Maximum multiplicity allowed for a part value; `None` means unbounded.
pub type MultiplicityBound = dyn Fn(u32) -> Option<usize>;

/// The bound defining Schröder partitions: odd parts at most once, even
/// parts unrestricted.
pub fn schroeder_bound(part: u32) -> Option<usize> {
    if part % 2 == 1 {
        Some(1)
    } else {
        None
    }
}

/// True iff every part value `i` occurs at most `f(i)` times.
pub fn is_in_multiplicity_class(p: &IntegerPartition, f: &MultiplicityBound) -> bool {
    p.0.chunk_by(|a, b| a == b).all(|run| match f(run[0]) {
        Some(max) => run.len() <= max,
        None => true,
    })
}

/// Which half of a square a triangular cell occupies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CellKind {
    Upper,
    Lower,
}

/// A cell of a Schröder shape. `row` and `position` are 1-based; position
/// `p` lies in square-column `(p + 1) / 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub row: usize,
    pub position: usize,
}

impl Cell {
    pub fn kind(&self) -> CellKind {
        if self.position % 2 == 1 {
            CellKind::Upper
        } else {
            CellKind::Lower
        }
    }

    pub fn square_column(&self) -> usize {
        self.position.div_ceil(2)
    }
}

/// A Schröder partition together with its triangular-cell geometry.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "IntegerPartition", into = "IntegerPartition")]
pub struct SchroderShape(IntegerPartition);

impl SchroderShape {
    pub fn new(p: IntegerPartition) -> Result<Self> {
        if is_schroeder(&p) {
            Ok(SchroderShape(p))
        } else {
            Err(invalid(format!(
                "({p}) is not a Schröder partition: an odd part is repeated"
            )))
        }
    }

    pub fn empty() -> Self {
        SchroderShape(IntegerPartition::empty())
    }

    pub(crate) fn from_partition_unchecked(p: IntegerPartition) -> Self {
        debug_assert!(is_schroeder(&p));
        SchroderShape(p)
    }

    pub fn partition(&self) -> &IntegerPartition {
        &self.0
    }

    pub fn parts(&self) -> &[u32] {
        self.0.parts()
    }

    pub fn order(&self) -> u32 {
        self.0.order()
    }

    pub fn num_rows(&self) -> usize {
        self.0.len()
    }

    pub fn row_len(&self, row: usize) -> usize {
        self.0.part(row - 1) as usize
    }

    /// All cells, row by row, left to right.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.0.parts().iter().enumerate().flat_map(|(i, &len)| {
            (1..=len as usize).map(move |position| Cell { row: i + 1, position })
        })
    }

    /// `(upper, lower)` pairs forming full squares.
    pub fn twin_pairs(&self) -> Vec<(Cell, Cell)> {
        self.cells()
            .filter(|c| c.kind() == CellKind::Lower)
            .map(|lower| {
                let upper = Cell { row: lower.row, position: lower.position - 1 };
                (upper, lower)
            })
            .collect()
    }

    /// Terminal upper triangles of odd rows.
    pub fn lonely_cells(&self) -> Vec<Cell> {
        self.0
            .parts()
            .iter()
            .enumerate()
            .filter(|(_, &len)| len % 2 == 1)
            .map(|(i, &len)| Cell { row: i + 1, position: len as usize })
            .collect()
    }

    /// Number of square-columns (including a trailing half square).
    pub fn num_square_columns(&self) -> usize {
        (self.0.part(0) as usize).div_ceil(2)
    }
}

impl From<SchroderShape> for IntegerPartition {
    fn from(s: SchroderShape) -> Self {
        s.0
    }
}

impl TryFrom<IntegerPartition> for SchroderShape {
    type Error = Error;

    fn try_from(p: IntegerPartition) -> Result<Self> {
        SchroderShape::new(p)
    }
}

impl FromStr for SchroderShape {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SchroderShape::new(s.parse()?)
    }
}

impl fmt::Display for SchroderShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}
