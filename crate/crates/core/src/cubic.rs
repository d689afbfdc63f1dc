//! Cubic coordinates.
//!
//! A cubic coordinate of size `n` is a tuple `c` of `n - 1` integers such that
//! the words `u_i = max(c_i, 0)` (with `u_n = 0`) and `v_{i+1} = max(-c_i, 0)`
//! (with `v_1 = 0`) form a Tamari interval diagram. Conversely
//! `c_i = u_i - v_{i+1}`. Coordinates are compared componentwise; this order
//! is isomorphic to the Tamari interval lattice.
//!
//! Entry indices in this module are 1-based.

use std::fmt;

use crate::diagrams::{DualTamariDiagram, TamariDiagram, TamariIntervalDiagram};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CubicCoordinate(Vec<i64>);

/// Result of comparing two coordinates under the componentwise order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Comparison {
    /// Strictly below.
    Le,
    /// Strictly above.
    Ge,
    Eq,
    Incomparable,
}

impl fmt::Display for Comparison {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Comparison::Le => "LE",
            Comparison::Ge => "GE",
            Comparison::Eq => "EQ",
            Comparison::Incomparable => "INCOMPARABLE",
        })
    }
}

/// Fast validity test, equivalent to building and checking `phi(c)`.
pub fn is_valid_entries(c: &[i64]) -> bool {
    let n = c.len() + 1;
    let u = |i: usize| if i < n - 1 { c[i].max(0) } else { 0 };
    let v = |i: usize| if i == 0 { 0 } else { (-c[i - 1]).max(0) };
    for idx in 0..n - 1 {
        let ui = u(idx);
        let vi = v(idx + 1);
        if ui > (n - idx - 1) as i64 || vi > (idx + 1) as i64 {
            return false;
        }
        for j in 1..=ui as usize {
            // Tamari slope, then compatibility v_{i+j} < j
            if u(idx + j) > ui - j as i64 || v(idx + j) >= j as i64 {
                return false;
            }
        }
        for j in 1..=vi as usize {
            if v(idx + 1 - j) > vi - j as i64 {
                return false;
            }
        }
    }
    true
}

impl CubicCoordinate {
    /// Validates `entries`; on failure the error names the violated diagram condition.
    pub fn new(entries: Vec<i64>) -> Result<Self> {
        if !is_valid_entries(&entries) {
            let (u, v) = split_words(&entries);
            TamariIntervalDiagram::from_words(&u, &v)?;
            // the fast check and the diagram check agree; unreachable in practice
            return Err(Error::Invariant(format!("coordinate {entries:?} rejected without a diagram violation")));
        }
        Ok(Self(entries))
    }

    pub(crate) fn new_unchecked(entries: Vec<i64>) -> Self {
        debug_assert!(is_valid_entries(&entries), "{entries:?}");
        Self(entries)
    }

    /// The smallest coordinate of size `n`, `(-1, -2, ..., -(n-1))`.
    pub fn bottom(n: usize) -> Self {
        Self((1..n as i64).map(|i| -i).collect())
    }

    /// The largest coordinate of size `n`, `(n-1, n-2, ..., 1)`.
    pub fn top(n: usize) -> Self {
        Self((1..n as i64).rev().collect())
    }

    pub fn zero(n: usize) -> Self {
        Self(vec![0; n.saturating_sub(1)])
    }

    /// Size `n`, one more than the number of entries.
    pub fn size(&self) -> usize {
        self.0.len() + 1
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    /// Entry `c_i`, 1-based.
    pub fn entry(&self, i: usize) -> i64 {
        self.0[i - 1]
    }

    pub fn into_entries(self) -> Vec<i64> {
        self.0
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.0.len() {
            return Err(Error::IndexOutOfRange { index: i, max: self.0.len() });
        }
        Ok(())
    }

    /// Componentwise comparison.
    pub fn compare(&self, other: &Self) -> Result<Comparison> {
        if self.size() != other.size() {
            return Err(Error::SizeMismatch { left: self.size(), right: other.size() });
        }
        let le = self.0.iter().zip(&other.0).all(|(a, b)| a <= b);
        let ge = self.0.iter().zip(&other.0).all(|(a, b)| a >= b);
        Ok(match (le, ge) {
            (true, true) => Comparison::Eq,
            (true, false) => Comparison::Le,
            (false, true) => Comparison::Ge,
            (false, false) => Comparison::Incomparable,
        })
    }

    /// `self <= other` componentwise. Sizes must agree.
    pub fn leq(&self, other: &Self) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Sets entry `i` to zero; the result is always a cubic coordinate.
    pub fn zero_entry(&self, i: usize) -> Result<Self> {
        self.check_index(i)?;
        let mut entries = self.0.clone();
        entries[i - 1] = 0;
        Ok(Self::new_unchecked(entries))
    }

    /// Minimal increase in coordinate `i`: the smallest valid value above
    /// `c_i` with every other entry fixed. `Ok(None)` when there is none.
    pub fn min_increase(&self, i: usize) -> Result<Option<Self>> {
        self.check_index(i)?;
        Ok(self.min_increase_unchecked(i))
    }

    pub(crate) fn min_increase_unchecked(&self, i: usize) -> Option<Self> {
        let max = (self.size() - i) as i64;
        let mut entries = self.0.clone();
        for candidate in self.0[i - 1] + 1..=max {
            entries[i - 1] = candidate;
            if is_valid_entries(&entries) {
                return Some(Self(entries));
            }
        }
        None
    }

    /// Elements covering `self`, as `(i, ↑_i(self))` for every defined increase.
    pub fn covers(&self) -> Vec<(usize, Self)> {
        (1..self.size()).filter_map(|i| self.min_increase_unchecked(i).map(|c| (i, c))).collect()
    }

    /// No entry is zero.
    pub fn is_synchronized(&self) -> bool {
        self.0.iter().all(|&x| x != 0)
    }

    pub fn is_new(&self) -> bool {
        is_new(&phi(self))
    }
}

fn split_words(c: &[i64]) -> (Vec<i64>, Vec<i64>) {
    let mut u: Vec<i64> = c.iter().map(|&x| x.max(0)).collect();
    u.push(0);
    let mut v = vec![0];
    v.extend(c.iter().map(|&x| (-x).max(0)));
    (u, v)
}

/// Builds the Tamari interval diagram of a coordinate.
pub fn phi(c: &CubicCoordinate) -> TamariIntervalDiagram {
    let (u, v) = split_words(&c.0);
    TamariIntervalDiagram::new_unchecked(
        TamariDiagram::from_letters_unchecked(u.into_iter().map(|x| x as usize).collect()),
        DualTamariDiagram::from_letters_unchecked(v.into_iter().map(|x| x as usize).collect()),
    )
}

/// `c_i = u_i - v_{i+1}`.
pub fn phi_inverse(tid: &TamariIntervalDiagram) -> CubicCoordinate {
    let (u, v) = (tid.u().letters(), tid.v().letters());
    CubicCoordinate::new_unchecked((0..tid.size() - 1).map(|i| u[i] as i64 - v[i + 1] as i64).collect())
}

/// Whether a Tamari interval diagram is new:
/// `u_i <= n-i-1` for `i < n`, `v_j <= j-2` for `j >= 2`, and for all
/// `k + 1 < l`, `u_k < l-k-1` or `v_l < l-k-1`.
pub fn is_new(tid: &TamariIntervalDiagram) -> bool {
    let n = tid.size();
    let u = |i: usize| tid.u().letter(i) as i64;
    let v = |i: usize| tid.v().letter(i) as i64;
    (1..n).all(|i| u(i) < (n - i) as i64)
        && (2..=n).all(|j| v(j) <= j as i64 - 2)
        && (1..=n).all(|k| (k + 2..=n).all(|l| {
            let gap = (l - k) as i64 - 1;
            u(k) < gap || v(l) < gap
        }))
}

/// Synchronized in terms of the diagram: `u_i != 0` or `v_{i+1} != 0` for all `i < n`.
pub fn tid_is_synchronized(tid: &TamariIntervalDiagram) -> bool {
    (1..tid.size()).all(|i| tid.u().letter(i) != 0 || tid.v().letter(i + 1) != 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagrams::enumerate_tids;

    fn cc(entries: &[i64]) -> CubicCoordinate {
        CubicCoordinate::new(entries.to_vec()).unwrap()
    }

    const WORKED: [i64; 9] = [9, -1, 2, 1, -4, 4, 3, 1, -2];

    #[test]
    fn phi_examples() {
        let t = phi(&cc(&WORKED));
        assert_eq!(t.u().letters(), &[9, 0, 2, 1, 0, 4, 3, 1, 0, 0]);
        assert_eq!(t.v().letters(), &[0, 0, 1, 0, 0, 4, 0, 0, 0, 2]);
        let t = phi(&cc(&[0, 0]));
        assert_eq!((t.u().letters(), t.v().letters()), (&[0, 0, 0][..], &[0, 0, 0][..]));
        let t = phi(&cc(&[2, 1]));
        assert_eq!((t.u().letters(), t.v().letters()), (&[2, 1, 0][..], &[0, 0, 0][..]));
    }

    #[test]
    fn invalid_coordinates_name_the_condition() {
        assert!(matches!(CubicCoordinate::new(vec![1, 1]), Err(Error::InvalidTamari(_))));
        assert!(matches!(CubicCoordinate::new(vec![-1, -1]), Err(Error::InvalidDual(_))));
        assert!(matches!(CubicCoordinate::new(vec![2, -2]), Err(Error::Incompatible { i: 1, j: 3 })));
        assert!(matches!(CubicCoordinate::new(vec![3, 0]), Err(Error::InvalidTamari(_))));
    }

    #[test]
    fn phi_inverse_examples() {
        let t = TamariIntervalDiagram::from_words(&[9, 0, 2, 1, 0, 4, 3, 1, 0, 0], &[0, 0, 1, 0, 0, 4, 0, 0, 0, 2])
            .unwrap();
        assert_eq!(phi_inverse(&t).entries(), &WORKED);
        let t = TamariIntervalDiagram::from_words(&[0; 6], &[0; 6]).unwrap();
        assert_eq!(phi_inverse(&t), CubicCoordinate::zero(6));
    }

    #[test]
    fn size_one_is_the_empty_tuple() {
        let c = cc(&[]);
        assert_eq!(c.size(), 1);
        assert!(c.is_synchronized());
        assert!(c.covers().is_empty());
        assert_eq!(phi(&c).u().letters(), &[0]);
    }

    #[test]
    fn phi_roundtrips_and_bounds() {
        for n in 1..=5 {
            for t in enumerate_tids(n).unwrap() {
                let c = phi_inverse(&t);
                assert_eq!(phi(&c), t);
                for i in 1..n {
                    assert!((-(i as i64)..=(n - i) as i64).contains(&c.entry(i)));
                }
                assert_eq!(CubicCoordinate::new(c.entries().to_vec()).unwrap(), c);
                assert_eq!(tid_is_synchronized(&t), c.is_synchronized());
            }
        }
    }

    #[test]
    fn fast_validity_agrees_with_diagram_check() {
        for n in 1..=5usize {
            let mut tuples = vec![vec![]];
            for i in 1..n {
                tuples = tuples
                    .into_iter()
                    .flat_map(|t: Vec<i64>| {
                        (-(i as i64) - 1..=(n - i) as i64 + 1).map(move |x| {
                            let mut t = t.clone();
                            t.push(x);
                            t
                        })
                    })
                    .collect();
            }
            for t in tuples {
                let (u, v) = split_words(&t);
                assert_eq!(is_valid_entries(&t), TamariIntervalDiagram::from_words(&u, &v).is_ok(), "{t:?}");
            }
        }
    }

    #[test]
    fn zero_entry_examples() {
        assert_eq!(cc(&[2, 1]).zero_entry(1).unwrap(), cc(&[0, 1]));
        assert_eq!(cc(&[0, 0]).zero_entry(2).unwrap(), cc(&[0, 0]));
        assert_eq!(cc(&WORKED).zero_entry(5).unwrap(), cc(&[9, -1, 2, 1, 0, 4, 3, 1, -2]));
        assert!(matches!(cc(&[0, 0]).zero_entry(3), Err(Error::IndexOutOfRange { index: 3, max: 2 })));
        assert!(matches!(cc(&[0, 0]).zero_entry(0), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn zero_entry_stays_valid() {
        for n in 1..=5 {
            for t in enumerate_tids(n).unwrap() {
                let c = phi_inverse(&t);
                for i in 1..n {
                    assert!(is_valid_entries(c.zero_entry(i).unwrap().entries()));
                }
            }
        }
    }

    #[test]
    fn comparison_examples() {
        assert_eq!(cc(&[0, 0]).compare(&cc(&[1, 0])).unwrap(), Comparison::Le);
        assert_eq!(cc(&[1, 0]).compare(&cc(&[0, 0])).unwrap(), Comparison::Ge);
        assert_eq!(cc(&[1, -1]).compare(&cc(&[0, 1])).unwrap(), Comparison::Incomparable);
        assert_eq!(cc(&WORKED).compare(&cc(&WORKED)).unwrap(), Comparison::Eq);
        assert!(matches!(cc(&[0]).compare(&cc(&[0, 0])), Err(Error::SizeMismatch { .. })));
        assert_eq!(Comparison::Incomparable.to_string(), "INCOMPARABLE");
    }

    #[test]
    fn min_increase_examples() {
        assert_eq!(cc(&[0, 0]).min_increase(1).unwrap(), Some(cc(&[1, 0])));
        assert_eq!(cc(&[-1, -2]).min_increase(2).unwrap(), Some(cc(&[-1, 0])));
        assert_eq!(cc(&[0, 1]).min_increase(1).unwrap(), Some(cc(&[2, 1])));
        assert_eq!(cc(&[2, 1]).min_increase(1).unwrap(), None);
        assert_eq!(cc(&[2, 1]).min_increase(2).unwrap(), None);
        assert!(matches!(cc(&[2, 1]).min_increase(3), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn cover_examples() {
        assert!(cc(&[2, 1]).covers().is_empty());
        let up: Vec<_> = cc(&[0, 0]).covers().into_iter().map(|(_, c)| c).collect();
        assert_eq!(up, vec![cc(&[1, 0]), cc(&[0, 1])]);
    }

    #[test]
    fn synchronized_and_new_examples() {
        assert!(cc(&WORKED).is_synchronized());
        assert!(!cc(&[0, 0]).is_synchronized());
        let t = |u: &[i64], v: &[i64]| TamariIntervalDiagram::from_words(u, v).unwrap();
        assert!(is_new(&t(&[0, 0], &[0, 0])));
        assert!(!is_new(&t(&[1, 0], &[0, 0])));
        assert!(!cc(&WORKED).is_new());
    }

    #[test]
    fn synchronized_is_never_new() {
        // at n = 1 the single interval is vacuously both
        let single = TamariIntervalDiagram::from_words(&[0], &[0]).unwrap();
        assert!(tid_is_synchronized(&single) && is_new(&single));
        for n in 2..=6 {
            for t in enumerate_tids(n).unwrap() {
                if tid_is_synchronized(&t) {
                    assert!(!is_new(&t), "{t:?}");
                }
            }
        }
    }
}
