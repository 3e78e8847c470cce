//! Permutations, classical Robinson–Schensted insertion, the Schröder
//! insertion algorithm, and the permutation-pattern machinery used to
//! characterise special insertion shapes.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{check_limit, invalid, Error, Result};
use crate::partitions::IntegerPartition;
use crate::tableaux::SchroderTableau;

/// Largest length accepted by [`enumerate_av`].
pub const DEFAULT_MAX_AV_LENGTH: usize = 9;

/// A permutation of `1..=n` in one-line notation. Length 0 is allowed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Permutation(Vec<u32>);

impl Permutation {
    pub fn new(values: Vec<u32>) -> Result<Self> {
        let n = values.len();
        let mut seen = vec![false; n + 1];
        for &v in &values {
            let v = v as usize;
            if v == 0 || v > n || seen[v] {
                return Err(invalid(format!("{values:?} is not a permutation of 1..={n}")));
            }
            seen[v] = true;
        }
        Ok(Permutation(values))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n as u32).collect())
    }

    /// All permutations of length `n` in lexicographic order.
    pub fn all(n: usize) -> impl Iterator<Item = Permutation> {
        (1..=n as u32).permutations(n).map(Permutation)
    }

    /// The permutation order-isomorphic to a sequence of distinct values.
    pub fn standardize(seq: &[u32]) -> Permutation {
        let mut ranks = vec![0u32; seq.len()];
        let order: Vec<usize> = (0..seq.len()).sorted_by_key(|&i| seq[i]).collect();
        for (rank, &i) in order.iter().enumerate() {
            ranks[i] = rank as u32 + 1;
        }
        Permutation(ranks)
    }

    pub fn values(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The pattern formed by the entries at `positions` (0-based, increasing).
    pub fn pattern_at(&self, positions: &[usize]) -> Permutation {
        let seq: Vec<u32> = positions.iter().map(|&i| self.0[i]).collect();
        Permutation::standardize(&seq)
    }
}

impl From<Permutation> for Vec<u32> {
    fn from(p: Permutation) -> Self {
        p.0
    }
}

impl TryFrom<Vec<u32>> for Permutation {
    type Error = Error;

    fn try_from(v: Vec<u32>) -> Result<Self> {
        Permutation::new(v)
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Digit strings (`"465193287"`) for length up to 9, comma-separated
    /// values otherwise. The empty string is the empty permutation.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let values = if s.contains(',') {
            s.split(',')
                .map(|t| t.trim().parse::<u32>().map_err(|e| Error::Parse(format!("{t:?}: {e}"))))
                .collect::<Result<Vec<_>>>()?
        } else {
            s.chars()
                .map(|c| c.to_digit(10).ok_or_else(|| Error::Parse(format!("bad digit {c:?}"))))
                .collect::<Result<Vec<_>>>()?
        };
        Permutation::new(values)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.len() <= 9 {
            self.0.iter().try_for_each(|v| write!(f, "{v}"))
        } else {
            write!(f, "{}", self.0.iter().join(","))
        }
    }
}

/// A standard Young tableau stored row by row.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct YoungTableau {
    rows: Vec<Vec<u32>>,
}

impl YoungTableau {
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self> {
        let t = YoungTableau { rows };
        IntegerPartition::new(t.rows.iter().map(|r| r.len() as u32).collect())?;
        if !t.is_standard() {
            return Err(invalid(format!("{:?} is not a standard Young tableau", t.rows)));
        }
        Ok(t)
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn shape(&self) -> IntegerPartition {
        IntegerPartition::from_unsorted(self.rows.iter().map(|r| r.len() as u32).collect())
    }

    pub fn is_standard(&self) -> bool {
        let n: usize = self.rows.iter().map(Vec::len).sum();
        let mut seen = vec![false; n + 1];
        for &v in self.rows.iter().flatten() {
            if v == 0 || v as usize > n || seen[v as usize] {
                return false;
            }
            seen[v as usize] = true;
        }
        let rows_ok = self.rows.iter().all(|r| r.windows(2).all(|w| w[0] < w[1]));
        let cols_ok = self
            .rows
            .windows(2)
            .all(|w| w[1].iter().zip(&w[0]).all(|(below, above)| above < below));
        rows_ok && cols_ok
    }
}

/// Classical row insertion. Returns the insertion and recording tableaux.
pub fn rs_insert(p: &Permutation) -> (YoungTableau, YoungTableau) {
    let mut ins: Vec<Vec<u32>> = Vec::new();
    let mut rec: Vec<Vec<u32>> = Vec::new();
    for (k, &value) in p.values().iter().enumerate() {
        let mut alpha = value;
        let mut row = 0;
        loop {
            if row == ins.len() {
                ins.push(Vec::new());
                rec.push(Vec::new());
            }
            let r = &mut ins[row];
            match r.iter().position(|&b| b > alpha) {
                None => {
                    r.push(alpha);
                    rec[row].push(k as u32 + 1);
                    break;
                }
                Some(i) => {
                    alpha = std::mem::replace(&mut r[i], alpha);
                    row += 1;
                }
            }
        }
    }
    (YoungTableau { rows: ins }, YoungTableau { rows: rec })
}

/// Raw output of the Schröder insertion, before shape validation.
pub type RawTableaux = (Vec<Vec<u32>>, Vec<Vec<u32>>);

/// Schröder insertion on row vectors. Positions alternate upper/lower
/// triangles (index 0 upper, 1 lower, ...). Inserting `alpha` into a row:
///
/// * larger than everything: append (the cell type follows from parity);
/// * the smallest larger entry sits in a lower triangle: replace it and bump
///   the old entry to the next row;
/// * it sits in an upper triangle with a lower twin: the upper entry slides
///   into the twin, `alpha` takes the upper cell, the twin's old entry is
///   bumped;
/// * it sits in a lonely upper triangle: `alpha` takes it, the old entry is
///   appended as the new lower twin, and insertion stops.
///
/// The recording rows receive `k` wherever the shape grew at step `k`.
pub fn sch_insert_rows(p: &Permutation) -> RawTableaux {
    let mut ins: Vec<Vec<u32>> = Vec::new();
    let mut rec: Vec<Vec<u32>> = Vec::new();
    for (k, &value) in p.values().iter().enumerate() {
        let step = k as u32 + 1;
        let mut alpha = value;
        let mut row = 0;
        loop {
            if row == ins.len() {
                ins.push(Vec::new());
                rec.push(Vec::new());
            }
            let r = &mut ins[row];
            let Some(a) = r.iter().enumerate().filter(|(_, &b)| b > alpha).min_by_key(|(_, &b)| b).map(|(i, _)| i)
            else {
                r.push(alpha);
                rec[row].push(step);
                break;
            };
            if a % 2 == 1 {
                alpha = std::mem::replace(&mut r[a], alpha);
                row += 1;
            } else if a + 1 < r.len() {
                let beta = r[a + 1];
                r[a + 1] = r[a];
                r[a] = alpha;
                alpha = beta;
                row += 1;
            } else {
                let old = std::mem::replace(&mut r[a], alpha);
                r.push(old);
                rec[row].push(step);
                break;
            }
        }
    }
    (ins, rec)
}

/// Schröder insertion with both outputs validated as standard Schröder
/// tableaux of one shape.
pub fn sch_insert(p: &Permutation) -> Result<(SchroderTableau, SchroderTableau)> {
    let (ins, rec) = sch_insert_rows(p);
    let ins = SchroderTableau::new(ins)?;
    let rec = SchroderTableau::new(rec)?;
    if ins.shape() != rec.shape() {
        return Err(invalid("insertion and recording shapes differ"));
    }
    Ok((ins, rec))
}

/// True iff some subsequence of `text` is order-isomorphic to `pattern`.
pub fn contains_pattern(text: &Permutation, pattern: &Permutation) -> bool {
    fn go(t: &[u32], s: &[u32], start: usize, chosen: &mut Vec<u32>) -> bool {
        let j = chosen.len();
        if j == s.len() {
            return true;
        }
        if t.len() - start < s.len() - j {
            return false;
        }
        for i in start..t.len() {
            let v = t[i];
            let consistent = (0..j).all(|m| (s[m] < s[j]) == (chosen[m] < v));
            if consistent {
                chosen.push(v);
                if go(t, s, i + 1, chosen) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    if pattern.len() > text.len() {
        return false;
    }
    go(text.values(), pattern.values(), 0, &mut Vec::new())
}

/// True iff `text` avoids every listed pattern.
pub fn avoids(text: &Permutation, patterns: &[Permutation]) -> bool {
    patterns.iter().all(|s| !contains_pattern(text, s))
}

/// `|Av_n(patterns)|`.
pub fn enumerate_av(n: usize, patterns: &[Permutation]) -> Result<u64> {
    enumerate_av_with_limit(n, patterns, DEFAULT_MAX_AV_LENGTH)
}

pub fn enumerate_av_with_limit(n: usize, patterns: &[Permutation], limit: usize) -> Result<u64> {
    check_limit("pattern avoidance enumeration", n, limit)?;
    Ok(Permutation::all(n).filter(|p| avoids(p, patterns)).count() as u64)
}

/// Shape class of a permutation's insertion tableau, as predicted by the
/// pattern characterisations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ShapeClass {
    SingleRow,
    SingleColumn,
    Hook,
    Other,
}

impl fmt::Display for ShapeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ShapeClass::SingleRow => "single_row",
            ShapeClass::SingleColumn => "single_column",
            ShapeClass::Hook => "hook",
            ShapeClass::Other => "other",
        })
    }
}

/// `{π_{2i+1}, π_{2i+2}} = {2i+1, 2i+2}` for every full pair, and a trailing
/// unpaired entry equal to `n`.
pub fn is_single_row_permutation(p: &Permutation) -> bool {
    let v = p.values();
    let pairs_ok = v.chunks(2).enumerate().all(|(i, c)| {
        let lo = 2 * i as u32 + 1;
        match *c {
            [a, b] => a.min(b) == lo && a.max(b) == lo + 1,
            [a] => a == lo,
            _ => unreachable!(),
        }
    });
    pairs_ok
}

pub fn single_column_patterns() -> [Permutation; 2] {
    [Permutation(vec![1, 2, 3]), Permutation(vec![2, 1, 3])]
}

/// Avoids 123 and 213.
pub fn is_single_column_permutation(p: &Permutation) -> bool {
    avoids(p, &single_column_patterns())
}

/// A 2-rooted shuffle of a single-row permutation and a single-column
/// permutation.
pub fn is_hook_permutation(p: &Permutation) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let tail: Vec<usize> = (2..n).collect();
    (0..1u32 << tail.len()).any(|mask| {
        let (mut left, mut right) = (vec![0, 1], vec![0, 1]);
        for (b, &pos) in tail.iter().enumerate() {
            if mask >> b & 1 == 1 {
                left.push(pos);
            } else {
                right.push(pos);
            }
        }
        is_single_row_permutation(&p.pattern_at(&left))
            && is_single_column_permutation(&p.pattern_at(&right))
    })
}

/// Classification from the pattern predicates; single row wins over single
/// column, and both win over hook.
pub fn classify_shape(p: &Permutation) -> ShapeClass {
    if is_single_row_permutation(p) {
        ShapeClass::SingleRow
    } else if is_single_column_permutation(p) {
        ShapeClass::SingleColumn
    } else if is_hook_permutation(p) {
        ShapeClass::Hook
    } else {
        ShapeClass::Other
    }
}

/// Classification read off an actual shape. A Schröder hook is a shape
/// whose rows below the first fit in the first square-column.
pub fn classify_partition(shape: &IntegerPartition) -> ShapeClass {
    if shape.len() <= 1 {
        ShapeClass::SingleRow
    } else if shape.part(0) <= 2 {
        ShapeClass::SingleColumn
    } else if shape.part(1) <= 2 {
        ShapeClass::Hook
    } else {
        ShapeClass::Other
    }
}

fn split_matches(p: &Permutation, fixed: &[usize], free: &[usize], s: &Permutation, t: &Permutation) -> bool {
    let need = s.len() - fixed.len();
    free.iter().copied().combinations(need).any(|chosen| {
        let mut left: Vec<usize> = fixed.to_vec();
        left.extend(&chosen);
        let mut right: Vec<usize> = fixed.to_vec();
        right.extend(free.iter().filter(|i| !chosen.contains(i)));
        left.sort_unstable();
        right.sort_unstable();
        p.pattern_at(&left) == *s && p.pattern_at(&right) == *t
    })
}

/// Whether `p` splits into two disjoint subsequences order-isomorphic to `s`
/// and `t`.
pub fn is_shuffle(p: &Permutation, s: &Permutation, t: &Permutation) -> Result<bool> {
    if p.len() != s.len() + t.len() {
        return Err(invalid(format!(
            "shuffle length mismatch: {} != {} + {}",
            p.len(),
            s.len(),
            t.len()
        )));
    }
    let all: Vec<usize> = (0..p.len()).collect();
    Ok(split_matches(p, &[], &all, s, t))
}

/// Whether `p` is a `k`-rooted shuffle of `s` and `t`: its first `k` entries
/// play the common root, and the remaining positions split so that root plus
/// one part is order-isomorphic to `s` and root plus the other to `t`.
pub fn is_k_rooted_shuffle(p: &Permutation, s: &Permutation, t: &Permutation, k: usize) -> Result<bool> {
    if k > s.len() || k > t.len() {
        return Err(invalid("root longer than a component"));
    }
    let root: Vec<usize> = (0..k).collect();
    if s.pattern_at(&root) != t.pattern_at(&root) {
        return Err(invalid("the first k entries of the two components are not order-isomorphic"));
    }
    if p.len() + k != s.len() + t.len() {
        return Err(invalid(format!(
            "rooted shuffle length mismatch: {} != {} + {} - {k}",
            p.len(),
            s.len(),
            t.len()
        )));
    }
    let free: Vec<usize> = (k..p.len()).collect();
    Ok(split_matches(p, &root, &free, s, t))
}

/// Number of standard Young tableaux of `shape`, by direct enumeration.
pub fn count_standard_young_tableaux(shape: &IntegerPartition) -> u64 {
    fn go(filled: &mut Vec<u32>, shape: &[u32], remaining: u32) -> u64 {
        if remaining == 0 {
            return 1;
        }
        let mut total = 0;
        for i in 0..shape.len() {
            let fits_row = filled[i] < shape[i];
            let fits_col = i == 0 || filled[i - 1] > filled[i];
            if fits_row && fits_col {
                filled[i] += 1;
                total += go(filled, shape, remaining - 1);
                filled[i] -= 1;
            }
        }
        total
    }
    go(&mut vec![0; shape.len()], shape.parts(), shape.order())
}
