//! Interval-posets and the bijection with Tamari interval diagrams.
//!
//! An interval-poset of size `n` is a partial order `⊲` on `x_1, ..., x_n`
//! such that, for `i < j < k`, `x_k ⊲ x_i` forces `x_j ⊲ x_i` and
//! `x_i ⊲ x_k` forces `x_j ⊲ x_k`. Relations are kept transitively closed and
//! irreflexive; vertices are 1-based.

use crate::diagrams::{DualTamariDiagram, TamariDiagram, TamariIntervalDiagram};
use crate::error::{Error, PosetViolation, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntervalPoset {
    n: usize,
    // rel[a * n + b] is x_{a+1} ⊲ x_{b+1}, strict
    rel: Vec<bool>,
}

fn transitive_closure(n: usize, rel: &mut [bool]) {
    for k in 0..n {
        for a in 0..n {
            if rel[a * n + k] {
                for b in 0..n {
                    if rel[k * n + b] {
                        rel[a * n + b] = true;
                    }
                }
            }
        }
    }
}

/// Checks antisymmetry and both interval axioms on a closed relation.
fn check_axioms(n: usize, rel: &[bool]) -> Result<(), PosetViolation> {
    for a in 0..n {
        if rel[a * n + a] {
            // a cycle through a; report a partner on the cycle
            let b = (0..n).find(|&b| b != a && rel[a * n + b] && rel[b * n + a]).unwrap_or(a);
            return Err(PosetViolation::Antisymmetry { a: a.min(b) + 1, b: a.max(b) + 1 });
        }
    }
    for i in 0..n {
        for k in i + 1..n {
            if rel[k * n + i] {
                if let Some(j) = (i + 1..k).find(|&j| !rel[j * n + i]) {
                    return Err(PosetViolation::Decreasing { i: i + 1, j: j + 1, k: k + 1 });
                }
            }
            if rel[i * n + k] {
                if let Some(j) = (i + 1..k).find(|&j| !rel[j * n + k]) {
                    return Err(PosetViolation::Increasing { i: i + 1, j: j + 1, k: k + 1 });
                }
            }
        }
    }
    Ok(())
}

impl IntervalPoset {
    /// Builds the interval-poset generated by `pairs`, where `(j, i)` means
    /// `x_j ⊲ x_i`. Reflexive pairs are accepted and ignored.
    pub fn from_relations(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroSize);
        }
        let mut rel = vec![false; n * n];
        for &(a, b) in pairs {
            for vertex in [a, b] {
                if vertex == 0 || vertex > n {
                    return Err(Error::VertexOutOfRange { vertex, n });
                }
            }
            if a != b {
                rel[(a - 1) * n + (b - 1)] = true;
            }
        }
        transitive_closure(n, &mut rel);
        check_axioms(n, &rel).map_err(Error::InvalidPoset)?;
        Ok(Self { n, rel })
    }

    /// The antichain of size `n`.
    pub fn antichain(n: usize) -> Self {
        Self { n, rel: vec![false; n * n] }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    /// Whether `x_a ⊲ x_b` (strictly).
    pub fn precedes(&self, a: usize, b: usize) -> bool {
        self.rel[(a - 1) * self.n + (b - 1)]
    }

    /// Strict relations `(j, i)` meaning `x_j ⊲ x_i`, sorted.
    pub fn relations(&self) -> Vec<(usize, usize)> {
        let n = self.n;
        let mut out: Vec<(usize, usize)> = (0..n * n)
            .filter(|&idx| self.rel[idx])
            .map(|idx| (idx / n + 1, idx % n + 1))
            .collect();
        out.sort_by_key(|&(a, b)| (b, a));
        out
    }

    /// Decreasing relations `x_j ⊲ x_i` with `j > i`.
    pub fn decreasing_relations(&self) -> Vec<(usize, usize)> {
        self.relations().into_iter().filter(|&(j, i)| j > i).collect()
    }

    /// Increasing relations `x_i ⊲ x_j` with `i < j`.
    pub fn increasing_relations(&self) -> Vec<(usize, usize)> {
        self.relations().into_iter().filter(|&(i, j)| i < j).collect()
    }
}

/// Validates a relation given as generating pairs; see [`IntervalPoset::from_relations`].
pub fn validate_interval_poset(n: usize, pairs: &[(usize, usize)]) -> Result<()> {
    IntervalPoset::from_relations(n, pairs).map(|_| ())
}

/// Sends `(u, v)` to the poset generated by `x_{i+l} ⊲ x_i` for `l <= u_i`
/// and `x_{i-k} ⊲ x_i` for `k <= v_i`.
pub fn chi(tid: &TamariIntervalDiagram) -> IntervalPoset {
    let n = tid.size();
    let mut rel = vec![false; n * n];
    for i in 0..n {
        for l in 1..=tid.u().letters()[i] {
            rel[(i + l) * n + i] = true;
        }
        for k in 1..=tid.v().letters()[i] {
            rel[(i - k) * n + i] = true;
        }
    }
    transitive_closure(n, &mut rel);
    debug_assert!(check_axioms(n, &rel).is_ok());
    IntervalPoset { n, rel }
}

/// Recovers `(u, v)` by counting relations: `u_i = #{j > i : x_j ⊲ x_i}`
/// and `v_j = #{i < j : x_i ⊲ x_j}`.
pub fn chi_inverse(poset: &IntervalPoset) -> TamariIntervalDiagram {
    let n = poset.n;
    let u = (0..n).map(|i| (i + 1..n).filter(|&j| poset.rel[j * n + i]).count()).collect();
    let v = (0..n).map(|j| (0..j).filter(|&i| poset.rel[i * n + j]).count()).collect();
    TamariIntervalDiagram::new_unchecked(
        TamariDiagram::from_letters_unchecked(u),
        DualTamariDiagram::from_letters_unchecked(v),
    )
}
