//! Finite posets, induced and weak containment, strong avoidance and the
//! weak-pattern poset of all unlabeled posets of a given size.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{check_limit, invalid, Error, Result};

/// Largest size accepted by the enumerating operations.
pub const DEFAULT_MAX_POSET_SIZE: usize = 6;

/// Ground sets are limited to 64 elements (one bit per element).
pub const MAX_GROUND_SET: usize = 64;

/// A strict partial order on `0..n`, stored as one bitmask of strictly
/// greater elements per element. Always transitively closed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FinitePoset {
    n: usize,
    up: Vec<u64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Labeled,
    Unlabeled,
}

#[derive(Serialize, Deserialize)]
struct PosetJson {
    size: usize,
    relations: Vec<[usize; 2]>,
}

fn bits(mask: u64) -> impl Iterator<Item = usize> {
    let mut m = mask;
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let i = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(i)
        }
    })
}

fn full(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

impl FinitePoset {
    /// Builds the transitive closure of the given strict pairs (0-based).
    pub fn new(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        if n > MAX_GROUND_SET {
            return Err(invalid(format!("ground set of size {n} exceeds {MAX_GROUND_SET}")));
        }
        let mut up = vec![0u64; n];
        for &(a, b) in pairs {
            if a >= n || b >= n {
                return Err(invalid(format!("relation ({a},{b}) outside ground set of size {n}")));
            }
            up[a] |= 1 << b;
        }
        // Warshall
        for k in 0..n {
            for i in 0..n {
                if up[i] >> k & 1 == 1 {
                    up[i] |= up[k];
                }
            }
        }
        if (0..n).any(|i| up[i] >> i & 1 == 1) {
            return Err(invalid("relations contain a cycle (antisymmetry violated)"));
        }
        Ok(FinitePoset { n, up })
    }

    fn from_up_unchecked(up: Vec<u64>) -> Self {
        FinitePoset { n: up.len(), up }
    }

    pub fn antichain(n: usize) -> Self {
        FinitePoset { n, up: vec![0; n] }
    }

    pub fn chain(n: usize) -> Self {
        FinitePoset::from_up_unchecked((0..n).map(|i| full(n) & !full(i + 1)).collect())
    }

    /// One minimum below two maxima.
    pub fn vee() -> Self {
        FinitePoset::new(3, &[(0, 1), (0, 2)]).unwrap()
    }

    /// Two minima below one maximum.
    pub fn wedge() -> Self {
        FinitePoset::new(3, &[(0, 2), (1, 2)]).unwrap()
    }

    /// An antichain of `n - 1` elements with an added maximum.
    pub fn flat(n: usize) -> Self {
        assert!(n >= 1);
        let pairs: Vec<_> = (0..n - 1).map(|i| (i, n - 1)).collect();
        FinitePoset::new(n, &pairs).unwrap()
    }

    /// Size `n` with exactly one comparable pair.
    pub fn single_cover(n: usize) -> Self {
        assert!(n >= 2);
        FinitePoset::new(n, &[(0, 1)]).unwrap()
    }

    /// Two disjoint 2-chains.
    pub fn two_plus_two() -> Self {
        FinitePoset::new(4, &[(0, 1), (2, 3)]).unwrap()
    }

    pub fn size(&self) -> usize {
        self.n
    }

    /// `a < b`.
    pub fn lt(&self, a: usize, b: usize) -> bool {
        self.up[a] >> b & 1 == 1
    }

    pub fn comparable(&self, a: usize, b: usize) -> bool {
        self.lt(a, b) || self.lt(b, a)
    }

    pub fn up_mask(&self, a: usize) -> u64 {
        self.up[a]
    }

    pub fn down_mask(&self, a: usize) -> u64 {
        (0..self.n).filter(|&i| self.lt(i, a)).fold(0, |m, i| m | 1 << i)
    }

    /// Number of strict comparable pairs.
    pub fn num_relations(&self) -> usize {
        self.up.iter().map(|m| m.count_ones() as usize).sum()
    }

    /// Strict pairs `(a, b)` with `a < b`, sorted.
    pub fn relations(&self) -> Vec<(usize, usize)> {
        (0..self.n).flat_map(|a| bits(self.up[a]).map(move |b| (a, b))).collect()
    }

    /// Pairs `a < b` with nothing strictly between.
    pub fn cover_relations(&self) -> Vec<(usize, usize)> {
        self.relations()
            .into_iter()
            .filter(|&(a, b)| self.up[a] & self.down_mask(b) == 0)
            .collect()
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: PosetJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let mut pairs = Vec::with_capacity(raw.relations.len());
        for [a, b] in raw.relations {
            if a == 0 || b == 0 {
                return Err(invalid("poset elements are numbered from 1"));
            }
            pairs.push((a - 1, b - 1));
        }
        FinitePoset::new(raw.size, &pairs)
    }

    /// `{"size": n, "relations": [[i, j], ...]}` with 1-based elements.
    pub fn to_json(&self) -> String {
        let raw = PosetJson {
            size: self.n,
            relations: self.relations().into_iter().map(|(a, b)| [a + 1, b + 1]).collect(),
        };
        serde_json::to_string(&raw).expect("poset serializes")
    }

    /// The poset with element `i` renamed `perm[i]`.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        let mut up = vec![0u64; self.n];
        for (a, b) in self.relations() {
            up[perm[a]] |= 1 << perm[b];
        }
        FinitePoset::from_up_unchecked(up)
    }

    /// Induced subposet on `elements`, renumbered in the given order.
    pub fn induced(&self, elements: &[usize]) -> Self {
        let up = elements
            .iter()
            .map(|&a| {
                elements
                    .iter()
                    .enumerate()
                    .filter(|(_, &b)| self.lt(a, b))
                    .fold(0u64, |m, (j, _)| m | 1 << j)
            })
            .collect();
        FinitePoset::from_up_unchecked(up)
    }

    pub fn induced_mask(&self, mask: u64) -> Self {
        self.induced(&bits(mask).collect::<Vec<_>>())
    }

    pub fn height(&self) -> usize {
        // longest chain ending at each element, in a linear extension order
        let order = self.linear_extension();
        let mut longest = vec![0usize; self.n];
        for &b in &order {
            longest[b] = 1 + (0..self.n).filter(|&a| self.lt(a, b)).map(|a| longest[a]).max().unwrap_or(0);
        }
        longest.into_iter().max().unwrap_or(0)
    }

    /// Elements sorted so that smaller elements come first.
    pub fn linear_extension(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.n).collect();
        order.sort_by_key(|&a| (self.down_mask(a).count_ones(), a));
        order
    }

    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let mut seen = 0u64;
        let mut comps = Vec::new();
        for start in 0..self.n {
            if seen >> start & 1 == 1 {
                continue;
            }
            let mut comp = 1u64 << start;
            loop {
                let grown = bits(comp).fold(comp, |m, a| m | self.up[a] | self.down_mask(a));
                if grown == comp {
                    break;
                }
                comp = grown;
            }
            seen |= comp;
            comps.push(bits(comp).collect());
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// An antichain (possibly empty) with an added maximum.
    pub fn is_flat(&self) -> bool {
        if self.n == 0 {
            return false;
        }
        let others = self.n - 1;
        (0..self.n).any(|m| {
            self.down_mask(m).count_ones() as usize == others && self.num_relations() == others
        })
    }

    pub fn is_disjoint_union_of_flats(&self) -> bool {
        self.connected_components().iter().all(|c| self.induced(c).is_flat())
    }

    /// Canonical representative of the isomorphism class.
    ///
    /// Elements are first split into classes by an iterated refinement of
    /// their down/up degrees; the classes are ordered by signature, and every
    /// labelling compatible with that order is tried (skipping elements with
    /// identical neighbourhoods), keeping the lexicographically least
    /// relabelled poset.
    pub fn canonical_form(&self) -> FinitePoset {
        let n = self.n;
        if n <= 1 {
            return self.clone();
        }
        let down: Vec<u64> = (0..n).map(|a| self.down_mask(a)).collect();
        let mut color: Vec<usize> = vec![0; n];
        loop {
            let sigs: Vec<(usize, Vec<usize>, Vec<usize>)> = (0..n)
                .map(|a| {
                    let mut below: Vec<usize> = bits(down[a]).map(|b| color[b]).collect();
                    let mut above: Vec<usize> = bits(self.up[a]).map(|b| color[b]).collect();
                    below.sort_unstable();
                    above.sort_unstable();
                    (color[a], below, above)
                })
                .collect();
            let distinct: BTreeSet<_> = sigs.iter().cloned().collect();
            let ranked: Vec<_> = distinct.into_iter().collect();
            let next: Vec<usize> = sigs.iter().map(|s| ranked.binary_search(s).unwrap()).collect();
            let before = color.iter().collect::<BTreeSet<_>>().len();
            let after = ranked.len();
            color = next;
            if after == before {
                break;
            }
        }
        let mut classes: Vec<Vec<usize>> = Vec::new();
        let max_color = *color.iter().max().unwrap();
        for c in 0..=max_color {
            classes.push((0..n).filter(|&a| color[a] == c).collect());
        }
        let class_of_slot: Vec<usize> = classes
            .iter()
            .enumerate()
            .flat_map(|(ci, cl)| std::iter::repeat(ci).take(cl.len()))
            .collect();

        struct Search<'a> {
            poset: &'a FinitePoset,
            down: &'a [u64],
            classes: &'a [Vec<usize>],
            class_of_slot: &'a [usize],
            order: Vec<usize>,
            used: u64,
            best: Option<Vec<u64>>,
        }
        impl Search<'_> {
            fn run(&mut self) {
                let slot = self.order.len();
                if slot == self.poset.n {
                    let mut pos = vec![0usize; self.poset.n];
                    for (i, &a) in self.order.iter().enumerate() {
                        pos[a] = i;
                    }
                    let code = self.poset.relabel(&pos).up;
                    if self.best.as_ref().is_none_or(|b| code < *b) {
                        self.best = Some(code);
                    }
                    return;
                }
                let class = &self.classes[self.class_of_slot[slot]];
                let mut tried: Vec<usize> = Vec::new();
                for &a in class {
                    if self.used >> a & 1 == 1 {
                        continue;
                    }
                    let twin = tried.iter().any(|&b| {
                        let mask = !(1u64 << a | 1u64 << b);
                        self.poset.up[a] & mask == self.poset.up[b] & mask
                            && self.down[a] & mask == self.down[b] & mask
                    });
                    if twin {
                        continue;
                    }
                    tried.push(a);
                    self.used |= 1 << a;
                    self.order.push(a);
                    self.run();
                    self.order.pop();
                    self.used &= !(1 << a);
                }
            }
        }
        let mut search = Search {
            poset: self,
            down: &down,
            classes: &classes,
            class_of_slot: &class_of_slot,
            order: Vec::with_capacity(n),
            used: 0,
            best: None,
        };
        search.run();
        FinitePoset::from_up_unchecked(search.best.expect("at least one labelling"))
    }

    pub fn is_isomorphic(&self, other: &FinitePoset) -> bool {
        self.n == other.n
            && self.num_relations() == other.num_relations()
            && self.canonical_form() == other.canonical_form()
    }
}

/// Disjoint union; elements of `q` are shifted past those of `p`.
pub fn disjoint_union(p: &FinitePoset, q: &FinitePoset) -> FinitePoset {
    let shift = p.n;
    let mut up = p.up.clone();
    up.extend(q.up.iter().map(|m| m << shift));
    FinitePoset::from_up_unchecked(up)
}

/// Linear sum: every element of `p` below every element of `q`.
pub fn linear_sum(p: &FinitePoset, q: &FinitePoset) -> FinitePoset {
    let shift = p.n;
    let q_all = full(q.n) << shift;
    let mut up: Vec<u64> = p.up.iter().map(|m| m | q_all).collect();
    up.extend(q.up.iter().map(|m| m << shift));
    FinitePoset::from_up_unchecked(up)
}

/// Injective order-preserving and order-reflecting map `p -> q`, if any,
/// as `map[element of p] = element of q`.
pub fn find_induced_embedding(q: &FinitePoset, p: &FinitePoset) -> Option<Vec<usize>> {
    embed(q, p, true)
}

/// Injective order-preserving map `p -> q`, if any.
pub fn find_weak_embedding(q: &FinitePoset, p: &FinitePoset) -> Option<Vec<usize>> {
    embed(q, p, false)
}

pub fn contains_induced(q: &FinitePoset, p: &FinitePoset) -> bool {
    find_induced_embedding(q, p).is_some()
}

pub fn weakly_contains(q: &FinitePoset, p: &FinitePoset) -> bool {
    find_weak_embedding(q, p).is_some()
}

pub fn strongly_avoids(q: &FinitePoset, p: &FinitePoset) -> bool {
    !weakly_contains(q, p)
}

fn embed(q: &FinitePoset, p: &FinitePoset, reflect: bool) -> Option<Vec<usize>> {
    if p.n > q.n || (!reflect && p.num_relations() > q.num_relations()) {
        return None;
    }
    let order = p.linear_extension();
    let p_down: Vec<u32> = (0..p.n).map(|a| p.down_mask(a).count_ones()).collect();
    let q_down: Vec<u32> = (0..q.n).map(|a| q.down_mask(a).count_ones()).collect();
    let mut map = vec![usize::MAX; p.n];

    #[allow(clippy::too_many_arguments)]
    fn go(
        depth: usize,
        order: &[usize],
        q: &FinitePoset,
        p: &FinitePoset,
        reflect: bool,
        p_down: &[u32],
        q_down: &[u32],
        map: &mut [usize],
        used: u64,
    ) -> bool {
        if depth == order.len() {
            return true;
        }
        let a = order[depth];
        for y in 0..q.n {
            if used >> y & 1 == 1 {
                continue;
            }
            if p_down[a] > q_down[y] || p.up[a].count_ones() > q.up[y].count_ones() {
                continue;
            }
            let ok = order[..depth].iter().all(|&x| {
                let fx = map[x];
                let (px_lt, pa_lt) = (p.lt(x, a), p.lt(a, x));
                let (qx_lt, qy_lt) = (q.lt(fx, y), q.lt(y, fx));
                if reflect {
                    px_lt == qx_lt && pa_lt == qy_lt
                } else {
                    (!px_lt || qx_lt) && (!pa_lt || qy_lt)
                }
            });
            if ok {
                map[a] = y;
                if go(depth + 1, order, q, p, reflect, p_down, q_down, map, used | 1 << y) {
                    return true;
                }
            }
        }
        false
    }

    go(0, &order, q, p, reflect, &p_down, &q_down, &mut map, 0).then_some(map)
}

/// Every labelled poset on `n + 1` elements whose restriction to `0..n` is
/// `p`: the new element gets a down-set `d` and an up-set `u` with every
/// element of `d` below every element of `u`.
fn one_point_extensions(p: &FinitePoset) -> Vec<FinitePoset> {
    let n = p.n;
    let down: Vec<u64> = (0..n).map(|a| p.down_mask(a)).collect();
    let is_down_set = |m: u64| bits(m).all(|a| down[a] & !m == 0);
    let is_up_set = |m: u64| bits(m).all(|a| p.up[a] & !m == 0);
    let down_sets: Vec<u64> = (0..=full(n)).filter(|&m| is_down_set(m)).collect();
    let up_sets: Vec<u64> = (0..=full(n)).filter(|&m| is_up_set(m)).collect();
    let mut out = Vec::new();
    for &d in &down_sets {
        let above_all_of_d = bits(d).fold(full(n), |m, a| m & p.up[a]);
        for &u in &up_sets {
            if u & !above_all_of_d != 0 {
                continue;
            }
            let mut up = p.up.clone();
            for a in bits(d) {
                up[a] |= 1 << n;
            }
            up.push(u);
            out.push(FinitePoset::from_up_unchecked(up));
        }
    }
    out
}

/// All posets of size `n`: every strict order on `0..n` (labeled), or one
/// canonical representative per isomorphism class (unlabeled, sorted).
pub fn enumerate_posets(n: usize, mode: Mode) -> Result<Vec<FinitePoset>> {
    enumerate_posets_with_limit(n, mode, DEFAULT_MAX_POSET_SIZE)
}

pub fn enumerate_posets_with_limit(n: usize, mode: Mode, limit: usize) -> Result<Vec<FinitePoset>> {
    check_limit("poset enumeration", n, limit)?;
    let mut level = vec![FinitePoset::antichain(0)];
    for _ in 0..n {
        level = match mode {
            Mode::Labeled => level.iter().flat_map(one_point_extensions).collect(),
            Mode::Unlabeled => level
                .iter()
                .flat_map(one_point_extensions)
                .map(|p| p.canonical_form())
                .collect::<BTreeSet<_>>()
                .into_iter()
                .collect(),
        };
    }
    Ok(level)
}

/// Canonical forms of all size-`n` posets weakly containing `p`, where
/// `n = |p|`.
pub fn upset_in_xn(p: &FinitePoset) -> Result<Vec<FinitePoset>> {
    Ok(enumerate_posets(p.size(), Mode::Unlabeled)?
        .into_iter()
        .filter(|q| weakly_contains(q, p))
        .collect())
}

/// Number of size-`n` posets strongly avoiding `p`.
pub fn sav_count(n: usize, p: &FinitePoset, mode: Mode) -> Result<u64> {
    Ok(enumerate_posets(n, mode)?
        .iter()
        .filter(|q| strongly_avoids(q, p))
        .count() as u64)
}

/// The unlabeled posets of one size ordered by weak containment.
#[derive(Clone, Debug)]
pub struct WeakPatternPoset {
    pub n: usize,
    pub elements: Vec<FinitePoset>,
    /// Hasse diagram as index pairs `(lower, upper)`.
    pub hasse_edges: Vec<(usize, usize)>,
}

pub fn build_weak_pattern_poset(n: usize) -> Result<WeakPatternPoset> {
    let elements = enumerate_posets(n, Mode::Unlabeled)?;
    let m = elements.len();
    // leq[i][j]: element i weakly contained in element j (i <= j)
    let leq: Vec<Vec<bool>> = (0..m)
        .map(|i| (0..m).map(|j| weakly_contains(&elements[j], &elements[i])).collect())
        .collect();
    let mut hasse_edges = Vec::new();
    for i in 0..m {
        for j in 0..m {
            if i == j || !leq[i][j] {
                continue;
            }
            let between = (0..m).any(|k| k != i && k != j && leq[i][k] && leq[k][j]);
            if !between {
                hasse_edges.push((i, j));
            }
        }
    }
    Ok(WeakPatternPoset { n, elements, hasse_edges })
}

impl WeakPatternPoset {
    fn index_of(&self, p: &FinitePoset) -> Option<usize> {
        let c = p.canonical_form();
        self.elements.iter().position(|e| *e == c)
    }

    fn lower_covers(&self, j: usize) -> usize {
        self.hasse_edges.iter().filter(|e| e.1 == j).count()
    }

    fn upper_covers(&self, i: usize) -> usize {
        self.hasse_edges.iter().filter(|e| e.0 == i).count()
    }

    /// Index of the unique minimal element, if there is exactly one.
    pub fn minimum(&self) -> Option<usize> {
        let mins: Vec<usize> = (0..self.elements.len()).filter(|&j| self.lower_covers(j) == 0).collect();
        (mins.len() == 1).then(|| mins[0])
    }

    pub fn maximum(&self) -> Option<usize> {
        let maxs: Vec<usize> = (0..self.elements.len()).filter(|&i| self.upper_covers(i) == 0).collect();
        (maxs.len() == 1).then(|| maxs[0])
    }

    /// Elements covering the minimum.
    pub fn atoms(&self) -> Vec<usize> {
        match self.minimum() {
            Some(min) => self.hasse_edges.iter().filter(|e| e.0 == min).map(|e| e.1).collect(),
            None => Vec::new(),
        }
    }

    /// Checks the structural claims: discrete minimum, chain maximum, a
    /// single atom with one comparable pair, and every Hasse edge adding
    /// exactly one comparable pair. Returns the failed claims.
    pub fn check_invariants(&self) -> Vec<String> {
        let mut failures = Vec::new();
        let n = self.n;
        if self.minimum() != self.index_of(&FinitePoset::antichain(n)) {
            failures.push("minimum is not the discrete poset".to_string());
        }
        if self.maximum() != self.index_of(&FinitePoset::chain(n)) {
            failures.push("maximum is not the chain".to_string());
        }
        if n >= 2 {
            let atoms = self.atoms();
            if atoms.len() != 1 || Some(atoms[0]) != self.index_of(&FinitePoset::single_cover(n)) {
                failures.push(format!("atoms are {atoms:?}, expected the single-cover poset"));
            }
        }
        for &(i, j) in &self.hasse_edges {
            let (a, b) = (&self.elements[i], &self.elements[j]);
            if b.num_relations() != a.num_relations() + 1 {
                failures.push(format!("edge {} -> {} adds {} pairs", a.to_json(), b.to_json(), b.num_relations() as i64 - a.num_relations() as i64));
            }
        }
        failures
    }

    /// Graphviz description of the Hasse diagram.
    pub fn to_dot(&self) -> String {
        let mut out = format!("digraph X{} {{\n  rankdir=BT;\n", self.n);
        for (i, e) in self.elements.iter().enumerate() {
            let rel: Vec<String> = e.relations().iter().map(|(a, b)| format!("{}<{}", a + 1, b + 1)).collect();
            writeln!(out, "  p{i} [label=\"{}\"];", rel.join(" ")).unwrap();
        }
        for &(i, j) in &self.hasse_edges {
            writeln!(out, "  p{i} -> p{j};").unwrap();
        }
        out.push_str("}\n");
        out
    }
}

/// Hasse edges of the weak-pattern poset computed another way: `a` is
/// covered by `b` iff deleting a single cover relation from `b` yields a
/// poset isomorphic to `a`.
pub fn weak_pattern_edges_by_deletion(elements: &[FinitePoset]) -> Vec<(usize, usize)> {
    let mut edges = BTreeSet::new();
    for (j, b) in elements.iter().enumerate() {
        for (x, y) in b.cover_relations() {
            let mut up = b.up.clone();
            up[x] &= !(1u64 << y);
            let a = FinitePoset::from_up_unchecked(up).canonical_form();
            let i = elements.iter().position(|e| *e == a).expect("deletion stays in the list");
            edges.insert((i, j));
        }
    }
    edges.into_iter().collect()
}

/// No `x` in `a` is `>=` any `y` in `b` (`a` weakly below `b`).
pub fn is_weakly_below(p: &FinitePoset, a: u64, b: u64) -> bool {
    bits(a).all(|x| bits(b).all(|y| x != y && !p.lt(y, x)))
}

/// Every `x` in `a` is `<=` every `y` in `b`.
pub fn is_below(p: &FinitePoset, a: u64, b: u64) -> bool {
    bits(a).all(|x| bits(b).all(|y| x == y || p.lt(x, y)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_and_json() {
        let p = FinitePoset::new(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(p.lt(0, 2));
        assert_eq!(p, FinitePoset::chain(3));
        assert!(FinitePoset::new(2, &[(0, 1), (1, 0)]).is_err());
        assert!(FinitePoset::new(2, &[(0, 0)]).is_err());
        assert!(FinitePoset::new(2, &[(0, 2)]).is_err());
        let q = FinitePoset::from_json(r#"{"size":3,"relations":[[1,2],[2,3]]}"#).unwrap();
        assert_eq!(q, FinitePoset::chain(3));
        assert_eq!(q.to_json(), r#"{"size":3,"relations":[[1,2],[1,3],[2,3]]}"#);
        assert!(FinitePoset::from_json(r#"{"size":2,"relations":[[1,2],[2,1]]}"#).is_err());
        assert!(FinitePoset::from_json(r#"{"size":2,"relations":[[0,1]]}"#).is_err());
    }

    #[test]
    fn induced_containment_examples() {
        assert!(contains_induced(&FinitePoset::chain(3), &FinitePoset::chain(2)));
        assert!(!contains_induced(&FinitePoset::chain(3), &FinitePoset::antichain(2)));
        assert!(contains_induced(&FinitePoset::two_plus_two(), &FinitePoset::antichain(2)));
    }

    #[test]
    fn weak_containment_examples() {
        assert!(weakly_contains(&FinitePoset::chain(3), &FinitePoset::vee()));
        for p in enumerate_posets(4, Mode::Labeled).unwrap() {
            assert!(weakly_contains(&p, &p));
        }
        assert!(!weakly_contains(&FinitePoset::flat(3), &FinitePoset::vee()));
        assert!(strongly_avoids(&FinitePoset::flat(3), &FinitePoset::vee()));
    }

    #[test]
    fn enumeration_counts() {
        let unl: Vec<usize> = (0..=6).map(|n| enumerate_posets(n, Mode::Unlabeled).unwrap().len()).collect();
        assert_eq!(unl, vec![1, 1, 2, 5, 16, 63, 318]);
        let lab: Vec<usize> = (0..=5).map(|n| enumerate_posets(n, Mode::Labeled).unwrap().len()).collect();
        assert_eq!(lab, vec![1, 1, 3, 19, 219, 4231]);
        assert!(enumerate_posets(7, Mode::Unlabeled).is_err());
    }

    #[test]
    fn canonical_form_is_isomorphism_invariant() {
        use itertools::Itertools;
        for p in enumerate_posets(4, Mode::Labeled).unwrap() {
            let c = p.canonical_form();
            for perm in (0..4).permutations(4) {
                assert_eq!(p.relabel(&perm).canonical_form(), c);
            }
        }
        // distinct classes by brute-force isomorphism test
        let unl = enumerate_posets(4, Mode::Unlabeled).unwrap();
        for (i, a) in unl.iter().enumerate() {
            for b in &unl[i + 1..] {
                let iso = (0..4).permutations(4).any(|perm| a.relabel(&perm) == *b);
                assert!(!iso);
            }
        }
    }

    #[test]
    fn labeled_orbits_match_unlabeled_classes() {
        // sum over classes of n!/|Aut| = number of labeled posets
        use itertools::Itertools;
        let n = 5;
        let unl = enumerate_posets(n, Mode::Unlabeled).unwrap();
        let total: usize = unl
            .iter()
            .map(|p| {
                let aut = (0..n).permutations(n).filter(|perm| p.relabel(perm) == *p).count();
                120 / aut
            })
            .sum();
        assert_eq!(total, 4231);
    }

    #[test]
    fn upset_examples() {
        for n in 1..=5 {
            assert_eq!(upset_in_xn(&FinitePoset::chain(n)).unwrap(), vec![FinitePoset::chain(n).canonical_form()]);
            assert_eq!(upset_in_xn(&FinitePoset::antichain(n)).unwrap(), enumerate_posets(n, Mode::Unlabeled).unwrap());
        }
        let mut up = upset_in_xn(&FinitePoset::vee()).unwrap();
        up.sort();
        let mut expected = vec![FinitePoset::vee().canonical_form(), FinitePoset::chain(3).canonical_form()];
        expected.sort();
        assert_eq!(up, expected);
    }

    #[test]
    fn weak_pattern_poset_small() {
        let x2 = build_weak_pattern_poset(2).unwrap();
        assert_eq!(x2.elements.len(), 2);
        assert_eq!(x2.hasse_edges.len(), 1);
        let x3 = build_weak_pattern_poset(3).unwrap();
        assert_eq!(x3.elements.len(), 5);
        assert_eq!(x3.hasse_edges.len(), 5);
        assert!(x3.check_invariants().is_empty());
        let x4 = build_weak_pattern_poset(4).unwrap();
        assert_eq!(x4.elements.len(), 16);
        assert_eq!(x4.hasse_edges.len(), 27);
        assert_eq!(weak_pattern_edges_by_deletion(&x4.elements), {
            let mut e = x4.hasse_edges.clone();
            e.sort();
            e
        });
        assert!(x4.check_invariants().is_empty());
        assert!(x4.to_dot().starts_with("digraph X4"));
    }

    #[test]
    fn structural_ops() {
        assert_eq!(disjoint_union(&FinitePoset::chain(1), &FinitePoset::chain(1)), FinitePoset::antichain(2));
        let f = linear_sum(&FinitePoset::antichain(2), &FinitePoset::chain(1));
        assert_eq!(f, FinitePoset::flat(3));
        assert!(f.is_flat());
        assert_eq!(FinitePoset::two_plus_two().height(), 2);
        assert_eq!(FinitePoset::chain(4).height(), 4);
        assert_eq!(FinitePoset::antichain(0).height(), 0);
        assert_eq!(FinitePoset::two_plus_two().connected_components(), vec![vec![0, 1], vec![2, 3]]);
        assert!(disjoint_union(&FinitePoset::flat(3), &FinitePoset::flat(1)).is_disjoint_union_of_flats());
        assert!(!FinitePoset::vee().is_disjoint_union_of_flats());
        assert_eq!(linear_sum(&FinitePoset::chain(2), &FinitePoset::chain(2)), FinitePoset::chain(4));
    }

    #[test]
    fn sav_examples() {
        let labeled: Vec<u64> = (0..=5).map(|n| sav_count(n, &FinitePoset::vee(), Mode::Labeled).unwrap()).collect();
        assert_eq!(labeled, vec![1, 1, 3, 10, 41, 196]);
        let unlabeled: Vec<u64> = (0..=6).map(|n| sav_count(n, &FinitePoset::vee(), Mode::Unlabeled).unwrap()).collect();
        assert_eq!(unlabeled, vec![1, 1, 2, 3, 5, 7, 11]);
        for k in 1..=3 {
            for n in k..=5 {
                assert_eq!(sav_count(n, &FinitePoset::antichain(k), Mode::Unlabeled).unwrap(), 0);
            }
        }
        for k in 1..=4 {
            for n in 0..=5 {
                let by_height = enumerate_posets(n, Mode::Unlabeled)
                    .unwrap()
                    .iter()
                    .filter(|q| q.height() < k)
                    .count() as u64;
                assert_eq!(sav_count(n, &FinitePoset::chain(k), Mode::Unlabeled).unwrap(), by_height);
            }
        }
    }

    #[test]
    fn order_partitions() {
        let c = FinitePoset::chain(3);
        assert!(is_below(&c, 0b001, 0b110));
        assert!(!is_below(&c, 0b010, 0b001));
        let a = FinitePoset::antichain(2);
        assert!(is_weakly_below(&a, 0b01, 0b10));
        assert!(!is_below(&a, 0b01, 0b10));
    }
}
