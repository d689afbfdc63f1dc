//! Cubic coordinates for intervals of the Tamari lattice.
//!
//! A Tamari interval `[S, T]` of size `n` is encoded five equivalent ways:
//!
//! - a pair of binary trees with `S <= T` ([`trees`]),
//! - an interval-poset on `x_1, ..., x_n` ([`interval_posets`]),
//! - a compatible pair of a Tamari diagram and a dual Tamari diagram ([`diagrams`]),
//! - a cubic coordinate, a tuple of `n - 1` signed integers ([`cubic`]).
//!
//! Cubic coordinates are compared componentwise, and that order is
//! isomorphic to the interval lattice. [`lattice`] materializes the lattice
//! at one size, [`cells`] studies the boxes of its geometric realization, and
//! [`io`] exports everything as JSON, DOT or CSV. [`oracle`] holds the naive
//! reference implementations the test suites compare against.
//!
//! Positions, vertices and coordinate indices are 1-based throughout, as
//! in the usual combinatorial notation.
//!
//! ```
//! use tamari_cubic::{cubic::phi, io::parse_cc_text};
//!
//! let c = parse_cc_text("9,-1,2,1,-4,4,3,1,-2").unwrap();
//! let tid = phi(&c);
//! assert_eq!(tid.u().letters(), &[9, 0, 2, 1, 0, 4, 3, 1, 0, 0]);
//! assert_eq!(tid.v().letters(), &[0, 0, 1, 0, 0, 4, 0, 0, 0, 2]);
//! ```

pub mod cells;
pub mod cli;
pub mod cubic;
pub mod diagrams;
mod error;
pub mod interval_posets;
pub mod io;
pub mod lattice;
pub mod oracle;
pub mod trees;

pub use cells::Cell;
pub use cubic::{Comparison, CubicCoordinate};
pub use diagrams::{DualTamariDiagram, TamariDiagram, TamariIntervalDiagram};
pub use error::{Error, PosetViolation, Result, Violation};
pub use interval_posets::IntervalPoset;
pub use lattice::PosetInstance;
pub use trees::{BinaryTree, TamariInterval};
