//! Binary trees, the Tamari order and Tamari intervals.
//!
//! Nodes are addressed by their 1-based infix (left, root, right) index. A
//! tree is encoded by the sizes of its right subtrees (a Tamari diagram) or
//! of its left subtrees (a dual Tamari diagram). Right rotations
//! `y(x(A, B), C) -> x(A, y(B, C))` go up in the Tamari order: the left comb
//! is the minimum and the right comb the maximum.

use std::fmt;

use crate::cubic::{phi, phi_inverse, CubicCoordinate};
use crate::diagrams::{check_compatible, DualTamariDiagram, TamariDiagram, TamariIntervalDiagram};
use crate::error::{Error, Result};
use crate::interval_posets::{chi, chi_inverse, IntervalPoset};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BinaryTree {
    Empty,
    Node(Box<BinaryTree>, Box<BinaryTree>),
}

impl BinaryTree {
    pub fn node(left: BinaryTree, right: BinaryTree) -> Self {
        BinaryTree::Node(Box::new(left), Box::new(right))
    }

    pub fn leaf() -> Self {
        Self::node(BinaryTree::Empty, BinaryTree::Empty)
    }

    /// Every node hangs on the left of its parent.
    pub fn left_comb(n: usize) -> Self {
        (0..n).fold(BinaryTree::Empty, |t, _| Self::node(t, BinaryTree::Empty))
    }

    /// Every node hangs on the right of its parent.
    pub fn right_comb(n: usize) -> Self {
        (0..n).fold(BinaryTree::Empty, |t, _| Self::node(BinaryTree::Empty, t))
    }

    /// Number of nodes.
    pub fn size(&self) -> usize {
        match self {
            BinaryTree::Empty => 0,
            BinaryTree::Node(l, r) => 1 + l.size() + r.size(),
        }
    }

    fn collect_sizes(&self, right: &mut Vec<usize>, left: &mut Vec<usize>) -> usize {
        match self {
            BinaryTree::Empty => 0,
            BinaryTree::Node(l, r) => {
                let ls = l.collect_sizes(right, left);
                let slot = right.len();
                right.push(0);
                left.push(ls);
                let rs = r.collect_sizes(right, left);
                right[slot] = rs;
                ls + rs + 1
            }
        }
    }

    fn subtree_sizes(&self) -> (Vec<usize>, Vec<usize>) {
        let (mut right, mut left) = (vec![], vec![]);
        self.collect_sizes(&mut right, &mut left);
        (right, left)
    }

    /// `u_i` is the size of the right subtree of node `i`.
    pub fn tamari_diagram(&self) -> TamariDiagram {
        TamariDiagram::from_letters_unchecked(self.subtree_sizes().0)
    }

    /// `v_i` is the size of the left subtree of node `i`.
    pub fn dual_diagram(&self) -> DualTamariDiagram {
        DualTamariDiagram::from_letters_unchecked(self.subtree_sizes().1)
    }

    pub fn from_tamari_diagram(u: &TamariDiagram) -> Self {
        fn build(u: &[usize], lo: usize, hi: usize) -> BinaryTree {
            if lo == hi {
                return BinaryTree::Empty;
            }
            // the root is the first node whose right subtree ends at hi
            let root = (lo..hi).find(|&r| r + u[r] + 1 == hi).expect("valid Tamari diagram");
            BinaryTree::node(build(u, lo, root), build(u, root + 1, hi))
        }
        build(u.letters(), 0, u.size())
    }

    pub fn from_dual_diagram(v: &DualTamariDiagram) -> Self {
        fn build(v: &[usize], lo: usize, hi: usize) -> BinaryTree {
            if lo == hi {
                return BinaryTree::Empty;
            }
            let root = (lo..hi).rev().find(|&r| r - v[r] == lo).expect("valid dual Tamari diagram");
            BinaryTree::node(build(v, lo, root), build(v, root + 1, hi))
        }
        build(v.letters(), 0, v.size())
    }

    /// All trees reached by one right rotation, keyed by the infix index of
    /// the node that moves up (the only node whose right subtree grows).
    pub fn rotations_up(&self) -> Vec<(usize, BinaryTree)> {
        let mut out = vec![];
        self.rotations_into(0, &mut out);
        out.sort_by_key(|(i, _)| *i);
        out
    }

    fn rotations_into(&self, offset: usize, out: &mut Vec<(usize, BinaryTree)>) {
        let BinaryTree::Node(l, r) = self else { return };
        if let BinaryTree::Node(a, b) = l.as_ref() {
            let rotated = Self::node((**a).clone(), Self::node((**b).clone(), (**r).clone()));
            out.push((offset + a.size() + 1, rotated));
        }
        let mut below = vec![];
        l.rotations_into(offset, &mut below);
        out.extend(below.drain(..).map(|(i, t)| (i, Self::node(t, (**r).clone()))));
        r.rotations_into(offset + l.size() + 1, &mut below);
        out.extend(below.into_iter().map(|(i, t)| (i, Self::node((**l).clone(), t))));
    }

    /// Tamari order, decided by comparing Tamari diagrams componentwise.
    pub fn tamari_leq(&self, other: &Self) -> Result<bool> {
        let (s, t) = (self.size(), other.size());
        if s != t {
            return Err(Error::SizeMismatch { left: s, right: t });
        }
        let (a, b) = (self.tamari_diagram(), other.tamari_diagram());
        Ok(a.letters().iter().zip(b.letters()).all(|(x, y)| x <= y))
    }

    /// Letter `i` (of `n - 1`) is `L` when node `i` has an empty right subtree.
    pub fn canopy(&self) -> Canopy {
        let u = self.tamari_diagram();
        let n = u.size();
        Canopy(
            u.letters()[..n.saturating_sub(1)]
                .iter()
                .map(|&x| if x == 0 { Side::L } else { Side::R })
                .collect(),
        )
    }

    /// Balanced-parenthesis word: `(` left `)` right, recursively.
    pub fn to_brackets(&self) -> String {
        let mut s = String::new();
        self.write_brackets(&mut s);
        s
    }

    fn write_brackets(&self, s: &mut String) {
        if let BinaryTree::Node(l, r) = self {
            s.push('(');
            l.write_brackets(s);
            s.push(')');
            r.write_brackets(s);
        }
    }

    pub fn from_brackets(text: &str) -> Result<Self> {
        fn parse(chars: &[u8], pos: &mut usize) -> Result<BinaryTree> {
            if *pos < chars.len() && chars[*pos] == b'(' {
                *pos += 1;
                let left = parse(chars, pos)?;
                if chars.get(*pos) != Some(&b')') {
                    return Err(Error::Parse(format!("expected ')' at offset {pos}")));
                }
                *pos += 1;
                let right = parse(chars, pos)?;
                Ok(BinaryTree::node(left, right))
            } else {
                Ok(BinaryTree::Empty)
            }
        }
        let bytes = text.trim().as_bytes();
        let mut pos = 0;
        let tree = parse(bytes, &mut pos)?;
        if pos != bytes.len() {
            return Err(Error::Parse(format!("unexpected character at offset {pos}")));
        }
        Ok(tree)
    }

    /// All trees with `n` nodes, built structurally.
    pub fn all(n: usize) -> Vec<BinaryTree> {
        let mut by_size: Vec<Vec<BinaryTree>> = vec![vec![BinaryTree::Empty]];
        for m in 1..=n {
            let mut trees = vec![];
            for k in 0..m {
                for l in &by_size[k] {
                    for r in &by_size[m - 1 - k] {
                        trees.push(Self::node(l.clone(), r.clone()));
                    }
                }
            }
            by_size.push(trees);
        }
        by_size.swap_remove(n)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    L,
    R,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Canopy(Vec<Side>);

impl Canopy {
    pub fn letters(&self) -> &[Side] {
        &self.0
    }
}

impl fmt::Display for Canopy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for side in &self.0 {
            f.write_str(match side {
                Side::L => "L",
                Side::R => "R",
            })?;
        }
        Ok(())
    }
}

/// A pair `[S, T]` of trees with `S <= T` in the Tamari order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TamariInterval {
    lower: BinaryTree,
    upper: BinaryTree,
}

impl TamariInterval {
    pub fn new(lower: BinaryTree, upper: BinaryTree) -> Result<Self> {
        if !lower.tamari_leq(&upper)? {
            return Err(Error::InvalidInterval);
        }
        Ok(Self { lower, upper })
    }

    pub fn size(&self) -> usize {
        self.lower.size()
    }

    pub fn lower(&self) -> &BinaryTree {
        &self.lower
    }

    pub fn upper(&self) -> &BinaryTree {
        &self.upper
    }

    /// `[S, T] <= [S', T']` iff `S <= S'` and `T <= T'`.
    pub fn leq(&self, other: &Self) -> Result<bool> {
        Ok(self.lower.tamari_leq(&other.lower)? && self.upper.tamari_leq(&other.upper)?)
    }

    /// Intervals covering `self`: rotate the lower tree (staying below the
    /// upper one) or rotate the upper tree.
    pub fn covers(&self) -> Vec<TamariInterval> {
        let mut out = vec![];
        for (_, s) in self.lower.rotations_up() {
            if s.tamari_leq(&self.upper).unwrap_or(false) {
                out.push(Self { lower: s, upper: self.upper.clone() });
            }
        }
        for (_, t) in self.upper.rotations_up() {
            out.push(Self { lower: self.lower.clone(), upper: t });
        }
        out
    }

    /// All intervals of size `n`, as pairs of trees filtered by the Tamari order.
    pub fn all(n: usize) -> Vec<TamariInterval> {
        let trees = BinaryTree::all(n);
        let mut out = vec![];
        for s in &trees {
            for t in &trees {
                if s.tamari_leq(t).unwrap_or(false) {
                    out.push(Self { lower: s.clone(), upper: t.clone() });
                }
            }
        }
        out
    }

    /// Same canopy on both trees.
    pub fn is_synchronized(&self) -> bool {
        self.lower.canopy() == self.upper.canopy()
    }
}

/// Interval-poset of an interval: `chi` of the lower tree's Tamari diagram
/// and the upper tree's dual diagram.
pub fn rho_inverse(interval: &TamariInterval) -> IntervalPoset {
    let u = interval.lower.tamari_diagram();
    let v = interval.upper.dual_diagram();
    debug_assert!(check_compatible(&u, &v).is_ok());
    chi(&TamariIntervalDiagram::new_unchecked(u, v))
}

pub fn rho(poset: &IntervalPoset) -> TamariInterval {
    let (u, v) = chi_inverse(poset).into_parts();
    TamariInterval { lower: BinaryTree::from_tamari_diagram(&u), upper: BinaryTree::from_dual_diagram(&v) }
}

/// `phi⁻¹ ∘ chi⁻¹ ∘ rho⁻¹`.
pub fn psi(interval: &TamariInterval) -> CubicCoordinate {
    phi_inverse(&chi_inverse(&rho_inverse(interval)))
}

pub fn psi_inverse(c: &CubicCoordinate) -> TamariInterval {
    rho(&chi(&phi(c)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cc(e: &[i64]) -> CubicCoordinate {
        CubicCoordinate::new(e.to_vec()).unwrap()
    }

    #[test]
    fn diagram_examples() {
        assert_eq!(BinaryTree::right_comb(3).tamari_diagram().letters(), &[2, 1, 0]);
        assert_eq!(BinaryTree::left_comb(3).tamari_diagram().letters(), &[0, 0, 0]);
        assert_eq!(BinaryTree::leaf().tamari_diagram().letters(), &[0]);
        assert_eq!(BinaryTree::left_comb(3).dual_diagram().letters(), &[0, 1, 2]);
        assert_eq!(BinaryTree::right_comb(3).dual_diagram().letters(), &[0, 0, 0]);
        assert_eq!(BinaryTree::leaf().dual_diagram().letters(), &[0]);
    }

    #[test]
    fn inverse_constructions() {
        let u = TamariDiagram::new(vec![2, 1, 0]).unwrap();
        assert_eq!(BinaryTree::from_tamari_diagram(&u), BinaryTree::right_comb(3));
        let zero = TamariDiagram::new(vec![0; 5]).unwrap();
        assert_eq!(BinaryTree::from_tamari_diagram(&zero), BinaryTree::left_comb(5));
        for n in 1..=7 {
            let trees = BinaryTree::all(n);
            for t in &trees {
                assert_eq!(&BinaryTree::from_tamari_diagram(&t.tamari_diagram()), t);
                assert_eq!(&BinaryTree::from_dual_diagram(&t.dual_diagram()), t);
            }
            let distinct: std::collections::HashSet<_> = trees.iter().map(|t| t.tamari_diagram()).collect();
            assert_eq!(distinct.len(), trees.len());
        }
    }

    #[test]
    fn rotation_examples() {
        let up = BinaryTree::left_comb(2).rotations_up();
        assert_eq!(up, vec![(1, BinaryTree::right_comb(2))]);
        assert!(BinaryTree::right_comb(5).rotations_up().is_empty());
        for n in 1..=6 {
            for t in BinaryTree::all(n) {
                let u = t.tamari_diagram();
                for (i, s) in t.rotations_up() {
                    let w = s.tamari_diagram();
                    // only letter i grows
                    for k in 1..=n {
                        if k == i {
                            assert!(w.letter(k) > u.letter(k));
                        } else {
                            assert_eq!(w.letter(k), u.letter(k));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn leq_examples() {
        for n in 1..=6 {
            assert!(BinaryTree::left_comb(n).tamari_leq(&BinaryTree::right_comb(n)).unwrap());
            if n >= 2 {
                assert!(!BinaryTree::right_comb(n).tamari_leq(&BinaryTree::left_comb(n)).unwrap());
            }
        }
        assert!(BinaryTree::leaf().tamari_leq(&BinaryTree::left_comb(2)).is_err());
    }

    #[test]
    fn canopy_examples() {
        assert_eq!(BinaryTree::right_comb(3).canopy().to_string(), "RR");
        assert_eq!(BinaryTree::left_comb(3).canopy().to_string(), "LL");
        assert_eq!(BinaryTree::leaf().canopy().to_string(), "");
        for n in 1..=6 {
            for t in BinaryTree::all(n) {
                let (u, v) = (t.tamari_diagram(), t.dual_diagram());
                for (i, side) in t.canopy().letters().iter().enumerate() {
                    let i = i + 1;
                    assert_eq!(*side == Side::L, u.letter(i) == 0);
                    assert_eq!(u.letter(i) == 0, v.letter(i + 1) != 0);
                }
            }
        }
    }

    #[test]
    fn brackets_roundtrip() {
        assert_eq!(BinaryTree::left_comb(2).to_brackets(), "(())");
        assert_eq!(BinaryTree::right_comb(2).to_brackets(), "()()");
        for t in BinaryTree::all(5) {
            assert_eq!(BinaryTree::from_brackets(&t.to_brackets()).unwrap(), t);
        }
        assert!(BinaryTree::from_brackets("(()").is_err());
        assert!(BinaryTree::from_brackets("())").is_err());
    }

    #[test]
    fn rho_and_psi_examples() {
        let (l, r) = (BinaryTree::left_comb(3), BinaryTree::right_comb(3));
        let bottom = TamariInterval::new(l.clone(), l.clone()).unwrap();
        assert_eq!(psi(&bottom), cc(&[-1, -2]));
        let full = TamariInterval::new(l.clone(), r.clone()).unwrap();
        let t = chi_inverse(&rho_inverse(&full));
        assert_eq!((t.u().letters(), t.v().letters()), (&[0, 0, 0][..], &[0, 0, 0][..]));
        assert_eq!(psi(&full), cc(&[0, 0]));
        let top = TamariInterval::new(r.clone(), r.clone()).unwrap();
        assert_eq!(psi(&top), cc(&[2, 1]));
        assert!(matches!(TamariInterval::new(r, l), Err(Error::InvalidInterval)));

        for t in BinaryTree::all(4) {
            let degenerate = TamariInterval::new(t.clone(), t.clone()).unwrap();
            let (u, v) = (t.tamari_diagram(), t.dual_diagram());
            let expect: Vec<i64> = (1..4).map(|i| u.letter(i) as i64 - v.letter(i + 1) as i64).collect();
            assert_eq!(psi(&degenerate).entries(), &expect[..]);
        }
    }

    #[test]
    fn rho_roundtrips() {
        for n in 1..=5 {
            for interval in TamariInterval::all(n) {
                assert_eq!(rho(&rho_inverse(&interval)), interval);
                assert_eq!(psi_inverse(&psi(&interval)), interval);
            }
        }
    }

    #[test]
    fn compatibility_matches_tamari_order() {
        for n in 1..=5 {
            let trees = BinaryTree::all(n);
            for s in &trees {
                for t in &trees {
                    let compatible = check_compatible(&s.tamari_diagram(), &t.dual_diagram()).is_ok();
                    assert_eq!(compatible, s.tamari_leq(t).unwrap());
                }
            }
        }
    }
}
