//! Tamari diagrams, dual Tamari diagrams and their compatible pairs.
//!
//! A Tamari diagram of size `n` is a word `u` with `0 <= u[i] <= n - i` in
//! which no letter reaches over a taller neighbour: `u[i+j] <= u[i] - j` for
//! every `j <= u[i]`. Dual diagrams satisfy the mirror-image conditions and are
//! exactly the reversals of Tamari diagrams. A compatible pair `(u, v)` is a
//! Tamari interval diagram.
//!
//! All positions in this module are 1-based.

use crate::error::{Error, Result, Violation};

/// Checks the two defining conditions of a Tamari diagram.
///
/// Reports the smallest index at which a condition fails. At a given index
/// the bound condition is checked before the slope condition.
pub fn validate_tamari(word: &[i64]) -> Result<()> {
    let n = word.len();
    if n == 0 {
        return Err(Error::EmptyWord);
    }
    for idx in 0..n {
        let value = word[idx];
        let max = (n - idx - 1) as i64;
        if value < 0 || value > max {
            return Err(Error::InvalidTamari(Violation::Bound { index: idx + 1, value, max }));
        }
        for j in 1..=value as usize {
            if word[idx + j] > value - j as i64 {
                return Err(Error::InvalidTamari(Violation::Slope { index: idx + 1, offset: j }));
            }
        }
    }
    Ok(())
}

/// Checks the two defining conditions of a dual Tamari diagram.
pub fn validate_dual_tamari(word: &[i64]) -> Result<()> {
    let n = word.len();
    if n == 0 {
        return Err(Error::EmptyWord);
    }
    for idx in 0..n {
        let value = word[idx];
        let max = idx as i64;
        if value < 0 || value > max {
            return Err(Error::InvalidDual(Violation::Bound { index: idx + 1, value, max }));
        }
        for j in 1..=value as usize {
            if word[idx - j] > value - j as i64 {
                return Err(Error::InvalidDual(Violation::Slope { index: idx + 1, offset: j }));
            }
        }
    }
    Ok(())
}

/// Reverses a word. A word is a dual Tamari diagram iff its reversal is a
/// Tamari diagram.
pub fn reverse_duality<T: Clone>(word: &[T]) -> Vec<T> {
    word.iter().rev().cloned().collect()
}

fn to_signed(letters: &[usize]) -> Vec<i64> {
    letters.iter().map(|&x| x as i64).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TamariDiagram(Vec<usize>);

impl TamariDiagram {
    pub fn new(letters: Vec<usize>) -> Result<Self> {
        validate_tamari(&to_signed(&letters))?;
        Ok(Self(letters))
    }

    /// Accepts signed letters, as read from text.
    pub fn from_signed(word: &[i64]) -> Result<Self> {
        validate_tamari(word)?;
        Ok(Self(word.iter().map(|&x| x as usize).collect()))
    }

    pub(crate) fn from_letters_unchecked(letters: Vec<usize>) -> Self {
        debug_assert!(validate_tamari(&to_signed(&letters)).is_ok());
        Self(letters)
    }

    pub fn size(&self) -> usize {
        self.0.len()
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    /// Letter `u_i`, 1-based.
    pub fn letter(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    pub fn into_letters(self) -> Vec<usize> {
        self.0
    }

    pub fn reversed(&self) -> DualTamariDiagram {
        DualTamariDiagram(reverse_duality(&self.0))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DualTamariDiagram(Vec<usize>);

impl DualTamariDiagram {
    pub fn new(letters: Vec<usize>) -> Result<Self> {
        validate_dual_tamari(&to_signed(&letters))?;
        Ok(Self(letters))
    }

    pub fn from_signed(word: &[i64]) -> Result<Self> {
        validate_dual_tamari(word)?;
        Ok(Self(word.iter().map(|&x| x as usize).collect()))
    }

    pub(crate) fn from_letters_unchecked(letters: Vec<usize>) -> Self {
        debug_assert!(validate_dual_tamari(&to_signed(&letters)).is_ok());
        Self(letters)
    }

    pub fn size(&self) -> usize {
        self.0.len()
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    /// Letter `v_i`, 1-based.
    pub fn letter(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    pub fn into_letters(self) -> Vec<usize> {
        self.0
    }

    pub fn reversed(&self) -> TamariDiagram {
        TamariDiagram(reverse_duality(&self.0))
    }
}

/// Checks compatibility: for all `i < j` with `j - i <= u_i`, `v_j < j - i`.
///
/// On failure reports the lexicographically first offending pair `(i, j)`.
pub fn check_compatible(u: &TamariDiagram, v: &DualTamariDiagram) -> Result<()> {
    if u.size() != v.size() {
        return Err(Error::SizeMismatch { left: u.size(), right: v.size() });
    }
    let (u, v) = (u.letters(), v.letters());
    for i in 0..u.len() {
        for d in 1..=u[i] {
            if v[i + d] >= d {
                return Err(Error::Incompatible { i: i + 1, j: i + d + 1 });
            }
        }
    }
    Ok(())
}

/// A compatible pair of a Tamari diagram and a dual Tamari diagram.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TamariIntervalDiagram {
    u: TamariDiagram,
    v: DualTamariDiagram,
}

impl TamariIntervalDiagram {
    pub fn new(u: TamariDiagram, v: DualTamariDiagram) -> Result<Self> {
        check_compatible(&u, &v)?;
        Ok(Self { u, v })
    }

    /// Validates both words and their compatibility.
    pub fn from_words(u: &[i64], v: &[i64]) -> Result<Self> {
        if u.len() != v.len() {
            return Err(Error::SizeMismatch { left: u.len(), right: v.len() });
        }
        Self::new(TamariDiagram::from_signed(u)?, DualTamariDiagram::from_signed(v)?)
    }

    pub(crate) fn new_unchecked(u: TamariDiagram, v: DualTamariDiagram) -> Self {
        debug_assert!(check_compatible(&u, &v).is_ok());
        Self { u, v }
    }

    pub fn size(&self) -> usize {
        self.u.size()
    }

    pub fn u(&self) -> &TamariDiagram {
        &self.u
    }

    pub fn v(&self) -> &DualTamariDiagram {
        &self.v
    }

    pub fn into_parts(self) -> (TamariDiagram, DualTamariDiagram) {
        (self.u, self.v)
    }
}

/// Lexicographic generator of words whose letters are admissible given the
/// prefix before them. Zero must always be admissible, which holds for every
/// family generated here.
struct LexWords<F> {
    limits: Vec<usize>,
    word: Vec<usize>,
    admissible: F,
    started: bool,
    done: bool,
}

impl<F: Fn(&[usize], usize) -> bool> LexWords<F> {
    fn new(limits: Vec<usize>, admissible: F) -> Self {
        let n = limits.len();
        Self { limits, word: vec![0; n], admissible, started: false, done: false }
    }
}

impl<F: Fn(&[usize], usize) -> bool> Iterator for LexWords<F> {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(self.word.clone());
        }
        for p in (0..self.word.len()).rev() {
            let next = (self.word[p] + 1..=self.limits[p]).find(|&x| (self.admissible)(&self.word[..p], x));
            if let Some(x) = next {
                self.word[p] = x;
                self.word[p + 1..].iter_mut().for_each(|y| *y = 0);
                return Some(self.word.clone());
            }
        }
        self.done = true;
        None
    }
}

fn tamari_admissible(prefix: &[usize], x: usize) -> bool {
    let i = prefix.len();
    prefix.iter().enumerate().all(|(k, &uk)| i - k > uk || x + (i - k) <= uk)
}

fn dual_admissible(prefix: &[usize], x: usize) -> bool {
    let i = prefix.len();
    (1..=x).all(|j| prefix[i - j] + j <= x)
}

/// All Tamari diagrams of size `n` in lexicographic order (Catalan many).
pub fn enumerate_tamari_diagrams(n: usize) -> Result<impl Iterator<Item = TamariDiagram>> {
    if n == 0 {
        return Err(Error::ZeroSize);
    }
    let limits = (0..n).map(|idx| n - idx - 1).collect();
    Ok(LexWords::new(limits, tamari_admissible).map(TamariDiagram))
}

/// All dual Tamari diagrams of size `n` in lexicographic order.
pub fn enumerate_dual_diagrams(n: usize) -> Result<impl Iterator<Item = DualTamariDiagram>> {
    if n == 0 {
        return Err(Error::ZeroSize);
    }
    let limits = (0..n).collect();
    Ok(LexWords::new(limits, dual_admissible).map(DualTamariDiagram))
}

/// Dual diagrams compatible with `u`, lexicographically.
pub fn compatible_duals(u: &TamariDiagram) -> impl Iterator<Item = DualTamariDiagram> {
    let n = u.size();
    // v_j < j - i for the closest i < j whose reach covers j
    let mut limits: Vec<usize> = (0..n).collect();
    for (i, &ui) in u.letters().iter().enumerate() {
        for d in 1..=ui {
            limits[i + d] = limits[i + d].min(d - 1);
        }
    }
    LexWords::new(limits, dual_admissible).map(DualTamariDiagram)
}

/// All Tamari interval diagrams of size `n`, ordered lexicographically by `(u, v)`.
pub fn enumerate_tids(n: usize) -> Result<impl Iterator<Item = TamariIntervalDiagram>> {
    Ok(enumerate_tamari_diagrams(n)?.flat_map(|u| {
        compatible_duals(&u)
            .map(move |v| TamariIntervalDiagram::new_unchecked(u.clone(), v))
            .collect::<Vec<_>>()
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    /// All words with `0 <= w[i] <= limit(i)`, without any other filtering.
    fn box_words(n: usize, limit: impl Fn(usize) -> usize) -> Vec<Vec<i64>> {
        let mut out = vec![vec![]];
        for idx in 0..n {
            out = out
                .into_iter()
                .flat_map(|w: Vec<i64>| {
                    (0..=limit(idx) as i64).map(move |x| {
                        let mut w = w.clone();
                        w.push(x);
                        w
                    })
                })
                .collect();
        }
        out
    }

    fn catalan(n: u64) -> u64 {
        (0..n).fold(1, |c, k| c * 2 * (2 * k + 1) / (k + 2))
    }

    #[test]
    fn tamari_validation_examples() {
        assert!(validate_tamari(&[3, 2, 1, 0]).is_ok());
        assert!(validate_tamari(&[0, 0, 0, 0]).is_ok());
        assert!(matches!(
            validate_tamari(&[2, 0, 1, 0]),
            Err(Error::InvalidTamari(Violation::Slope { index: 1, offset: 2 }))
        ));
        assert!(matches!(
            validate_tamari(&[0, 3, 0, 0]),
            Err(Error::InvalidTamari(Violation::Bound { index: 2, value: 3, max: 2 }))
        ));
        assert!(matches!(validate_tamari(&[]), Err(Error::EmptyWord)));
        assert!(matches!(
            validate_tamari(&[0, -1]),
            Err(Error::InvalidTamari(Violation::Bound { index: 2, .. }))
        ));
    }

    #[test]
    fn dual_validation_examples() {
        assert!(validate_dual_tamari(&[0, 0, 1, 0, 0, 4, 0, 0, 0, 2]).is_ok());
        assert!(validate_dual_tamari(&[0, 0, 0]).is_ok());
        assert!(matches!(
            validate_dual_tamari(&[0, 1, 1]),
            Err(Error::InvalidDual(Violation::Slope { index: 3, offset: 1 }))
        ));
        assert!(matches!(validate_dual_tamari(&[]), Err(Error::EmptyWord)));
    }

    #[test]
    fn reversal_examples() {
        assert_eq!(reverse_duality(&[0, 0, 1]), vec![1, 0, 0]);
        assert!(validate_dual_tamari(&[0, 0, 1]).is_ok());
        assert!(validate_tamari(&[1, 0, 0]).is_ok());
        assert_eq!(reverse_duality(&[0]), vec![0]);
        let rev = reverse_duality(&[0, 0, 1, 0, 0, 4, 0, 0, 0, 2]);
        assert_eq!(rev, vec![2, 0, 0, 0, 4, 0, 0, 1, 0, 0]);
        assert!(validate_tamari(&rev).is_ok());
    }

    #[test]
    fn reversal_matches_validity_exhaustively() {
        for n in 1..=6 {
            for w in box_words(n, |_| n) {
                assert_eq!(
                    validate_dual_tamari(&w).is_ok(),
                    validate_tamari(&reverse_duality(&w)).is_ok(),
                    "{w:?}"
                );
            }
        }
    }

    #[test]
    fn compatibility_examples() {
        let u = TamariDiagram::new(vec![9, 0, 2, 1, 0, 4, 3, 1, 0, 0]).unwrap();
        let v = DualTamariDiagram::new(vec![0, 0, 1, 0, 0, 4, 0, 0, 0, 2]).unwrap();
        assert!(check_compatible(&u, &v).is_ok());

        let u = TamariDiagram::new(vec![1, 0]).unwrap();
        assert!(check_compatible(&u, &DualTamariDiagram::new(vec![0, 0]).unwrap()).is_ok());
        assert!(matches!(
            check_compatible(&u, &DualTamariDiagram::new(vec![0, 1]).unwrap()),
            Err(Error::Incompatible { i: 1, j: 2 })
        ));
        assert!(matches!(
            check_compatible(&u, &DualTamariDiagram::new(vec![0, 0, 0]).unwrap()),
            Err(Error::SizeMismatch { .. })
        ));
    }

    #[test]
    fn size_four_listing() {
        let listed = [
            "0000", "0010", "0100", "0200", "0210", "1000", "1010", "2000", "2100", "3000", "3010",
            "3100", "3200", "3210",
        ];
        let got: Vec<String> = enumerate_tamari_diagrams(4)
            .unwrap()
            .map(|u| u.letters().iter().map(|d| d.to_string()).collect())
            .collect();
        assert_eq!(got, listed);
    }

    #[test]
    fn small_enumerations() {
        let one: Vec<_> = enumerate_tamari_diagrams(1).unwrap().map(|u| u.into_letters()).collect();
        assert_eq!(one, vec![vec![0]]);
        let three: Vec<_> = enumerate_tamari_diagrams(3).unwrap().map(|u| u.into_letters()).collect();
        let brute: Vec<Vec<usize>> = box_words(3, |idx| 2 - idx)
            .into_iter()
            .filter(|w| validate_tamari(w).is_ok())
            .map(|w| w.into_iter().map(|x| x as usize).collect())
            .collect();
        assert_eq!(three, brute);
        assert_eq!(three, vec![vec![0, 0, 0], vec![0, 1, 0], vec![1, 0, 0], vec![2, 0, 0], vec![2, 1, 0]]);
        assert!(matches!(enumerate_tamari_diagrams(0), Err(Error::ZeroSize)));
        assert!(matches!(enumerate_tids(0), Err(Error::ZeroSize)));
    }

    #[test]
    fn enumerations_match_brute_force_filters() {
        for n in 1..=6 {
            let words = box_words(n, |_| n - 1);
            let tamari: Vec<Vec<i64>> = words.iter().filter(|w| validate_tamari(w).is_ok()).cloned().collect();
            let dual: Vec<Vec<i64>> = words.iter().filter(|w| validate_dual_tamari(w).is_ok()).cloned().collect();
            let got_t: Vec<Vec<i64>> =
                enumerate_tamari_diagrams(n).unwrap().map(|u| to_signed(u.letters())).collect();
            let got_d: Vec<Vec<i64>> =
                enumerate_dual_diagrams(n).unwrap().map(|v| to_signed(v.letters())).collect();
            assert_eq!(got_t, tamari);
            assert_eq!(got_d, dual);
            if n <= 5 {
                let mut pairs = vec![];
                for u in &tamari {
                    for v in &dual {
                        if let Ok(t) = TamariIntervalDiagram::from_words(u, v) {
                            pairs.push(t);
                        }
                    }
                }
                assert_eq!(enumerate_tids(n).unwrap().collect::<Vec<_>>(), pairs);
            }
        }
    }

    #[test]
    fn catalan_counts() {
        for n in 1..=10 {
            assert_eq!(enumerate_tamari_diagrams(n).unwrap().count() as u64, catalan(n as u64));
            assert_eq!(enumerate_dual_diagrams(n).unwrap().count() as u64, catalan(n as u64));
        }
    }

    #[test]
    fn tid_counts() {
        let expected = [1usize, 3, 13, 68, 399, 2530, 16965, 118668];
        for (n, &want) in (1..=8).zip(&expected) {
            assert_eq!(enumerate_tids(n).unwrap().count(), want, "n = {n}");
        }
        let two: Vec<_> = enumerate_tids(2)
            .unwrap()
            .map(|t| (t.u().letters().to_vec(), t.v().letters().to_vec()))
            .collect();
        assert_eq!(two, vec![(vec![0, 0], vec![0, 0]), (vec![0, 0], vec![0, 1]), (vec![1, 0], vec![0, 0])]);
    }

    #[test]
    fn compatible_pairs_never_both_nonzero() {
        for n in 1..=6 {
            for t in enumerate_tids(n).unwrap() {
                for i in 1..n {
                    assert!(t.u().letter(i) == 0 || t.v().letter(i + 1) == 0);
                }
            }
        }
    }
}
