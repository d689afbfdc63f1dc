use std::fmt;

use thiserror::Error;

/// Which defining condition of a (dual) Tamari diagram failed.
///
/// Indices are 1-based, matching the usual mathematical indexing of words.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Violation {
    /// The letter at `index` lies outside `0..=max`.
    Bound { index: usize, value: i64, max: i64 },
    /// The letter at `index` reaches over a neighbour `offset` positions away
    /// that is too tall (`u[i+j] > u[i] - j`, or the mirrored dual condition).
    Slope { index: usize, offset: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Violation::Bound { index, value, max } => {
                write!(f, "bound: letter {index} is {value}, allowed range 0..={max}")
            }
            Violation::Slope { index, offset } => {
                write!(f, "slope: letter {index} crosses the line at offset {offset}")
            }
        }
    }
}

/// Failed interval-poset axiom. Vertices are 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PosetViolation {
    /// Both `a ⊲ b` and `b ⊲ a` after closure.
    Antisymmetry { a: usize, b: usize },
    /// `x_k ⊲ x_i` with `i < j < k` but not `x_j ⊲ x_i`.
    Decreasing { i: usize, j: usize, k: usize },
    /// `x_i ⊲ x_k` with `i < j < k` but not `x_j ⊲ x_k`.
    Increasing { i: usize, j: usize, k: usize },
}

impl fmt::Display for PosetViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            PosetViolation::Antisymmetry { a, b } => {
                write!(f, "antisymmetry: x{a} and x{b} precede each other")
            }
            PosetViolation::Decreasing { i, j, k } => {
                write!(f, "decreasing axiom: x{k} ⊲ x{i} requires x{j} ⊲ x{i}")
            }
            PosetViolation::Increasing { i, j, k } => {
                write!(f, "increasing axiom: x{i} ⊲ x{k} requires x{j} ⊲ x{k}")
            }
        }
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("empty word: sizes start at 1")]
    EmptyWord,
    #[error("size must be at least 1")]
    ZeroSize,
    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },
    #[error("not a Tamari diagram ({0})")]
    InvalidTamari(Violation),
    #[error("not a dual Tamari diagram ({0})")]
    InvalidDual(Violation),
    #[error("diagrams are not compatible at (i, j) = ({i}, {j})")]
    Incompatible { i: usize, j: usize },
    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("not an interval-poset ({0})")]
    InvalidPoset(PosetViolation),
    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("lower tree is not below upper tree in the Tamari order")]
    InvalidInterval,
    #[error("coordinate is not minimal-cellular")]
    NotMinimalCellular,
    #[error("size {n} exceeds the cap {cap}")]
    SizeCap { n: usize, cap: usize },
    #[error("invariant violated: {0}")]
    Invariant(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
