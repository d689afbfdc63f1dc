//! The cubic coordinate lattice at a fixed size, materialized.
//!
//! Elements are found by walking minimal increases upward from the bottom
//! coordinate; the same walk yields the Hasse diagram. Meets and joins are
//! computed from the order itself, without assuming a componentwise formula.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use fixedbitset::FixedBitSet;
use num_bigint::BigUint;

use crate::cubic::CubicCoordinate;
use crate::diagrams::enumerate_tids;
use crate::error::{Error, Result};
use crate::trees::BinaryTree;

pub const DEFAULT_SIZE_CAP: usize = 8;

fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::from(1u32), |acc, k| acc * k)
}

/// Number of Tamari intervals of size `n`: `2 (4n+1)! / ((n+1)! (3n+2)!)`.
pub fn interval_count(n: u64) -> BigUint {
    BigUint::from(2u32) * factorial(4 * n + 1) / (factorial(n + 1) * factorial(3 * n + 2))
}

/// Catalan number `C_n = (2n)! / (n! (n+1)!)`.
pub fn catalan(n: u64) -> BigUint {
    factorial(2 * n) / (factorial(n) * factorial(n + 1))
}

/// `(CC_n, <=)` with its cover relations. Elements are sorted lexicographically.
#[derive(Clone, Debug)]
pub struct PosetInstance {
    n: usize,
    elements: Vec<CubicCoordinate>,
    index: HashMap<CubicCoordinate, usize>,
    upper: Vec<Vec<usize>>,
    lower: Vec<Vec<usize>>,
}

/// Materializes `CC_n` with the default size cap.
pub fn enumerate_cc(n: usize) -> Result<PosetInstance> {
    PosetInstance::build(n, DEFAULT_SIZE_CAP)
}

impl PosetInstance {
    pub fn build(n: usize, cap: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroSize);
        }
        if n > cap {
            return Err(Error::SizeCap { n, cap });
        }
        let bottom = CubicCoordinate::bottom(n);
        let mut seen: HashMap<CubicCoordinate, Vec<CubicCoordinate>> = HashMap::new();
        let mut queue = VecDeque::from([bottom.clone()]);
        seen.insert(bottom, vec![]);
        while let Some(c) = queue.pop_front() {
            let ups: Vec<CubicCoordinate> = c.covers().into_iter().map(|(_, up)| up).collect();
            for up in &ups {
                if !seen.contains_key(up) {
                    seen.insert(up.clone(), vec![]);
                    queue.push_back(up.clone());
                }
            }
            *seen.get_mut(&c).expect("visited") = ups;
        }

        let mut elements: Vec<CubicCoordinate> = seen.keys().cloned().collect();
        elements.sort();
        let index: HashMap<CubicCoordinate, usize> =
            elements.iter().enumerate().map(|(i, c)| (c.clone(), i)).collect();
        let mut upper = vec![vec![]; elements.len()];
        let mut lower = vec![vec![]; elements.len()];
        for (c, ups) in &seen {
            let lo = index[c];
            for up in ups {
                let hi = index[up];
                upper[lo].push(hi);
                lower[hi].push(lo);
            }
        }
        upper.iter_mut().chain(lower.iter_mut()).for_each(|v| v.sort_unstable());
        Ok(Self { n, elements, index, upper, lower })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[CubicCoordinate] {
        &self.elements
    }

    pub fn element(&self, id: usize) -> &CubicCoordinate {
        &self.elements[id]
    }

    pub fn index_of(&self, c: &CubicCoordinate) -> Option<usize> {
        self.index.get(c).copied()
    }

    pub fn upper_covers(&self, id: usize) -> &[usize] {
        &self.upper[id]
    }

    pub fn lower_covers(&self, id: usize) -> &[usize] {
        &self.lower[id]
    }

    /// Cover edges `(lower, upper)`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> =
            self.upper.iter().enumerate().flat_map(|(lo, ups)| ups.iter().map(move |&hi| (lo, hi))).collect();
        out.sort_unstable();
        out
    }

    pub fn edge_count(&self) -> usize {
        self.upper.iter().map(Vec::len).sum()
    }

    /// The unique element with no lower cover.
    pub fn minimum(&self) -> Result<usize> {
        let minimal: Vec<usize> = (0..self.len()).filter(|&i| self.lower[i].is_empty()).collect();
        match minimal[..] {
            [m] => Ok(m),
            _ => Err(Error::Invariant(format!("{} minimal elements", minimal.len()))),
        }
    }

    /// The unique element with no upper cover.
    pub fn maximum(&self) -> Result<usize> {
        let maximal: Vec<usize> = (0..self.len()).filter(|&i| self.upper[i].is_empty()).collect();
        match maximal[..] {
            [m] => Ok(m),
            _ => Err(Error::Invariant(format!("{} maximal elements", maximal.len()))),
        }
    }

    fn reach(&self, start: usize, up: bool) -> FixedBitSet {
        let adj = if up { &self.upper } else { &self.lower };
        let mut set = FixedBitSet::with_capacity(self.len());
        let mut stack = vec![start];
        set.insert(start);
        while let Some(x) = stack.pop() {
            for &y in &adj[x] {
                if !set.put(y) {
                    stack.push(y);
                }
            }
        }
        set
    }

    /// Elements below `id`, including itself, by descending the Hasse diagram.
    pub fn down_set(&self, id: usize) -> FixedBitSet {
        self.reach(id, false)
    }

    pub fn up_set(&self, id: usize) -> FixedBitSet {
        self.reach(id, true)
    }

    /// Order relation read off the Hasse diagram.
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.up_set(a).contains(b)
    }

    /// Greatest lower bound of `a` and `b`.
    pub fn meet(&self, a: usize, b: usize) -> Result<usize> {
        let mut common = self.down_set(a);
        common.intersect_with(&self.down_set(b));
        self.extremum(&common, true)
    }

    /// Least upper bound of `a` and `b`.
    pub fn join(&self, a: usize, b: usize) -> Result<usize> {
        let mut common = self.up_set(a);
        common.intersect_with(&self.up_set(b));
        self.extremum(&common, false)
    }

    // the unique maximal (or minimal) element of a finite set is its greatest (least)
    fn extremum(&self, set: &FixedBitSet, greatest: bool) -> Result<usize> {
        let adj = if greatest { &self.upper } else { &self.lower };
        let candidates: Vec<usize> = set.ones().filter(|&x| adj[x].iter().all(|&y| !set.contains(y))).collect();
        match candidates[..] {
            [x] => Ok(x),
            _ => Err(Error::Invariant(format!(
                "{} candidate {} among common bounds",
                candidates.len(),
                if greatest { "meets" } else { "joins" }
            ))),
        }
    }
}

/// Precomputed down-sets and up-sets for bulk meet/join queries on small posets.
pub struct BoundsTable {
    down: Vec<FixedBitSet>,
    up: Vec<FixedBitSet>,
}

impl BoundsTable {
    /// Refuses posets with more than `max_elements` elements (memory is quadratic).
    pub fn new(poset: &PosetInstance, max_elements: usize) -> Result<Self> {
        let len = poset.len();
        if len > max_elements {
            return Err(Error::SizeCap { n: len, cap: max_elements });
        }
        // elements sorted lexicographically are a linear extension of the componentwise order
        let mut down: Vec<FixedBitSet> = Vec::with_capacity(len);
        for id in 0..len {
            let mut set = FixedBitSet::with_capacity(len);
            set.insert(id);
            for &lo in poset.lower_covers(id) {
                set.union_with(&down[lo]);
            }
            down.push(set);
        }
        let mut up: Vec<FixedBitSet> = vec![FixedBitSet::with_capacity(len); len];
        for id in (0..len).rev() {
            let mut set = FixedBitSet::with_capacity(len);
            set.insert(id);
            for &hi in poset.upper_covers(id) {
                set.union_with(&up[hi]);
            }
            up[id] = set;
        }
        Ok(Self { down, up })
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.down[b].contains(a)
    }

    pub fn meet(&self, a: usize, b: usize) -> Result<usize> {
        let mut common = self.down[a].clone();
        common.intersect_with(&self.down[b]);
        let size = common.count_ones(..);
        common
            .ones()
            .find(|&m| self.down[m].count_ones(..) == size)
            .ok_or_else(|| Error::Invariant(format!("no meet for {a} and {b}")))
    }

    pub fn join(&self, a: usize, b: usize) -> Result<usize> {
        let mut common = self.up[a].clone();
        common.intersect_with(&self.up[b]);
        let size = common.count_ones(..);
        common
            .ones()
            .find(|&m| self.up[m].count_ones(..) == size)
            .ok_or_else(|| Error::Invariant(format!("no join for {a} and {b}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountRow {
    pub n: usize,
    pub formula: BigUint,
    pub cubic_coordinates: usize,
    pub interval_diagrams: usize,
    /// Only computed for `n <= 5`.
    pub tree_pairs: Option<usize>,
}

impl CountRow {
    pub fn is_consistent(&self) -> bool {
        let f = &self.formula;
        *f == BigUint::from(self.cubic_coordinates)
            && *f == BigUint::from(self.interval_diagrams)
            && self.tree_pairs.is_none_or(|t| *f == BigUint::from(t))
    }
}

impl fmt::Display for CountRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "n={} formula={} cc={} tid={} tree_pairs={} {}",
            self.n,
            self.formula,
            self.cubic_coordinates,
            self.interval_diagrams,
            self.tree_pairs.map_or_else(|| "-".to_string(), |t| t.to_string()),
            if self.is_consistent() { "ok" } else { "MISMATCH" }
        )
    }
}

#[derive(Clone, Debug)]
pub struct CountReport {
    pub rows: Vec<CountRow>,
}

impl CountReport {
    pub fn mismatches(&self) -> Vec<&CountRow> {
        self.rows.iter().filter(|r| !r.is_consistent()).collect()
    }

    pub fn is_consistent(&self) -> bool {
        self.mismatches().is_empty()
    }
}

/// Compares every independent count against the closed formula for `1..=n_max`.
pub fn check_counts(n_max: usize, cap: usize) -> Result<CountReport> {
    if n_max > cap {
        return Err(Error::SizeCap { n: n_max, cap });
    }
    let mut rows = vec![];
    for n in 1..=n_max {
        let tree_pairs = (n <= 5).then(|| {
            let trees = BinaryTree::all(n);
            trees.iter().map(|s| trees.iter().filter(|t| s.tamari_leq(t).unwrap_or(false)).count()).sum()
        });
        rows.push(CountRow {
            n,
            formula: interval_count(n as u64),
            cubic_coordinates: PosetInstance::build(n, cap)?.len(),
            interval_diagrams: enumerate_tids(n)?.count(),
            tree_pairs,
        });
    }
    Ok(CountReport { rows })
}
