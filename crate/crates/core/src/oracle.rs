//! Naive reference implementations and the cross-validation suite.
//!
//! Nothing here is fast. Each oracle reaches its answer by a route that does
//! not share the main code path it is compared against: the Tamari order by
//! closing rotations, cubic coordinates by filtering a box of tuples, and
//! interval-posets by filtering every relation on `[n]`.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt;

use crate::cells::{enumerate_cells, is_minimal_cellular, Cell};
use crate::cubic::{is_new, phi, phi_inverse, CubicCoordinate};
use crate::diagrams::{check_compatible, enumerate_tids};
use crate::interval_posets::{chi, chi_inverse, IntervalPoset};
use crate::lattice::{check_counts, BoundsTable, PosetInstance};
use crate::trees::{psi, psi_inverse, rho, rho_inverse, BinaryTree, TamariInterval};

/// The Tamari order on all trees of one size, by closing single rotations.
pub struct TamariClosure {
    pub trees: Vec<BinaryTree>,
    /// `leq[a][b]` is `trees[a] <= trees[b]`.
    pub leq: Vec<Vec<bool>>,
}

impl TamariClosure {
    pub fn comparable_pairs(&self) -> usize {
        self.leq.iter().map(|row| row.iter().filter(|&&x| x).count()).sum()
    }
}

pub fn tamari_order_by_closure(n: usize) -> TamariClosure {
    let trees = BinaryTree::all(n);
    let index: HashMap<&BinaryTree, usize> = trees.iter().enumerate().map(|(i, t)| (t, i)).collect();
    let step: Vec<Vec<usize>> =
        trees.iter().map(|t| t.rotations_up().into_iter().map(|(_, s)| index[&s]).collect()).collect();
    let mut leq = vec![vec![false; trees.len()]; trees.len()];
    for (start, row) in leq.iter_mut().enumerate() {
        let mut queue = VecDeque::from([start]);
        row[start] = true;
        while let Some(x) = queue.pop_front() {
            for &y in &step[x] {
                if !row[y] {
                    row[y] = true;
                    queue.push_back(y);
                }
            }
        }
    }
    TamariClosure { trees, leq }
}

/// Every tuple in `[-1, n-1] x [-2, n-2] x ...` that passes the diagram checks.
pub fn cc_by_box_filter(n: usize) -> BTreeSet<CubicCoordinate> {
    let mut tuples: Vec<Vec<i64>> = vec![vec![]];
    for i in 1..n {
        tuples = tuples
            .into_iter()
            .flat_map(|t| {
                (-(i as i64)..=(n - i) as i64).map(move |x| {
                    let mut t = t.clone();
                    t.push(x);
                    t
                })
            })
            .collect();
    }
    tuples.into_iter().filter_map(|t| CubicCoordinate::new(t).ok()).collect()
}

/// All interval-posets of size `n`, by filtering every closed relation on `[n]`.
pub fn interval_posets_by_filter(n: usize) -> Vec<IntervalPoset> {
    let slots: Vec<(usize, usize)> =
        (1..=n).flat_map(|a| (1..=n).filter(move |&b| b != a).map(move |b| (a, b))).collect();
    let mut out = vec![];
    for mask in 0u64..1 << slots.len() {
        let pairs: Vec<(usize, usize)> =
            slots.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &p)| p).collect();
        if let Ok(p) = IntervalPoset::from_relations(n, &pairs) {
            // keep only already-closed relations so each poset appears once
            if p.relations().len() == pairs.len() {
                out.push(p);
            }
        }
    }
    out
}

/// Outcome of one cross-validated property.
#[derive(Clone, Debug)]
pub struct PropertyResult {
    pub name: &'static str,
    pub outcome: Outcome,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass(String),
    Fail(String),
    Skipped(String),
}

impl fmt::Display for PropertyResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.outcome {
            Outcome::Pass(d) => write!(f, "[ok]   {}: {d}", self.name),
            Outcome::Fail(d) => write!(f, "[FAIL] {}: {d}", self.name),
            Outcome::Skipped(d) => write!(f, "[skip] {}: {d}", self.name),
        }
    }
}

#[derive(Clone, Debug)]
pub struct CheckReport {
    pub size: usize,
    pub results: Vec<PropertyResult>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.results.iter().all(|r| !matches!(r.outcome, Outcome::Fail(_)))
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.results {
            writeln!(f, "{r}")?;
        }
        write!(f, "{}", if self.passed() { "OK" } else { "FAILED" })
    }
}

fn verdict(ok: bool, pass: impl Into<String>, fail: impl Into<String>) -> Outcome {
    if ok {
        Outcome::Pass(pass.into())
    } else {
        Outcome::Fail(fail.into())
    }
}

fn gated(n: usize, max: usize, run: impl FnOnce() -> Outcome) -> Outcome {
    if n > max {
        Outcome::Skipped(format!("only run for n <= {max}"))
    } else {
        run()
    }
}

/// Runs every oracle comparison at size `n` (each property has its own size limit).
pub fn cross_validate(n: usize, cap: usize) -> crate::Result<CheckReport> {
    let poset = PosetInstance::build(n, cap)?;
    let mut results = vec![];
    let mut push = |name: &'static str, outcome: Outcome| results.push(PropertyResult { name, outcome });

    let counts = check_counts(n, cap)?;
    push(
        "counts",
        verdict(
            counts.is_consistent(),
            format!("{} elements, formula agrees for n <= {n}", poset.len()),
            counts.mismatches().iter().map(|r| r.to_string()).collect::<Vec<_>>().join("; "),
        ),
    );

    push(
        "box filter",
        gated(n, 5, || {
            let boxed = cc_by_box_filter(n);
            let walked: BTreeSet<_> = poset.elements().iter().cloned().collect();
            verdict(boxed == walked, format!("{} coordinates", boxed.len()), "box filter and walk disagree")
        }),
    );

    push(
        "tamari order",
        gated(n, 6, || {
            let closure = tamari_order_by_closure(n);
            let mut bad = 0;
            for (a, s) in closure.trees.iter().enumerate() {
                for (b, t) in closure.trees.iter().enumerate() {
                    if s.tamari_leq(t).unwrap_or(false) != closure.leq[a][b] {
                        bad += 1;
                    }
                    let compatible = check_compatible(&s.tamari_diagram(), &t.dual_diagram()).is_ok();
                    if compatible != closure.leq[a][b] {
                        bad += 1;
                    }
                }
            }
            verdict(bad == 0, format!("{} comparable pairs", closure.comparable_pairs()), format!("{bad} disagreements"))
        }),
    );

    push(
        "interval-posets",
        gated(n, 4, || {
            let filtered: HashSet<IntervalPoset> = interval_posets_by_filter(n).into_iter().collect();
            let image: HashSet<IntervalPoset> = enumerate_tids(n).into_iter().flatten().map(|t| chi(&t)).collect();
            verdict(filtered == image, format!("{} posets", filtered.len()), "chi image differs from axiom filter")
        }),
    );

    push(
        "bijections",
        gated(n, 5, || {
            let mut bad = 0;
            for t in enumerate_tids(n).into_iter().flatten() {
                let p = chi(&t);
                let c = phi_inverse(&t);
                if chi_inverse(&p) != t || phi(&c) != t || rho_inverse(&rho(&p)) != p {
                    bad += 1;
                }
                let interval = psi_inverse(&c);
                if psi(&interval) != c {
                    bad += 1;
                }
            }
            verdict(bad == 0, "chi, phi, rho, psi round-trip", format!("{bad} failed round trips"))
        }),
    );

    push(
        "isomorphism",
        gated(n, 5, || {
            let intervals = TamariInterval::all(n);
            let mut tree_edges = BTreeSet::new();
            for s in &intervals {
                let lo = poset.index_of(&psi(s));
                for t in s.covers() {
                    tree_edges.insert((lo, poset.index_of(&psi(&t))));
                }
            }
            let cc_edges: BTreeSet<_> = poset.edges().into_iter().map(|(a, b)| (Some(a), Some(b))).collect();
            verdict(
                intervals.len() == poset.len() && tree_edges == cc_edges,
                format!("{} cover edges match", cc_edges.len()),
                "cover graphs differ under psi",
            )
        }),
    );

    push(
        "covers",
        gated(n, 4, || {
            let els = poset.elements();
            let mut bad = 0;
            for (a, c) in els.iter().enumerate() {
                let strict_up: Vec<&CubicCoordinate> = els.iter().filter(|x| *x != c && c.leq(x)).collect();
                let true_covers: BTreeSet<usize> = strict_up
                    .iter()
                    .filter(|x| !strict_up.iter().any(|y| y != *x && y.leq(x)))
                    .map(|x| poset.index_of(x).unwrap_or(usize::MAX))
                    .collect();
                let hasse: BTreeSet<usize> = poset.upper_covers(a).iter().copied().collect();
                if true_covers != hasse {
                    bad += 1;
                }
                for i in 1..n {
                    if c.zero_entry(i).is_err() {
                        bad += 1;
                    }
                }
            }
            verdict(bad == 0, "minimal increases are exactly the covers; zeroing stays valid", format!("{bad} failures"))
        }),
    );

    push(
        "synchronized",
        gated(n, 6, || {
            let mut bad = 0;
            for c in poset.elements() {
                let interval = psi_inverse(c);
                if c.is_synchronized() != interval.is_synchronized() {
                    bad += 1;
                }
                if n >= 2 && c.is_synchronized() && is_new(&phi(c)) {
                    bad += 1;
                }
            }
            verdict(bad == 0, "same canopy iff no zero entry; synchronized never new", format!("{bad} counterexamples"))
        }),
    );

    push(
        "cells",
        gated(n, 6, || match enumerate_cells(&poset) {
            Err(e) => Outcome::Fail(e.to_string()),
            Ok(cells) => {
                let sync: BTreeSet<_> = poset.elements().iter().filter(|c| c.is_synchronized()).cloned().collect();
                let images: BTreeSet<_> = cells.iter().map(Cell::gamma).collect();
                let by_degree =
                    poset.elements().iter().filter(|c| c.covers().len() == n - 1).count();
                let mut bad = 0;
                for cell in &cells {
                    if !cell.is_sign_coherent() {
                        bad += 1;
                    }
                    match cell.vertices() {
                        Ok(vs) if vs.len() == 1 << (n - 1) => {
                            if !vs.iter().all(|v| cell.minimal().leq(v) && v.leq(cell.maximal())) {
                                bad += 1;
                            }
                        }
                        _ => bad += 1,
                    }
                }
                let minimal = poset.elements().iter().filter(|c| is_minimal_cellular(c)).count();
                verdict(
                    bad == 0 && images == sync && images.len() == cells.len() && minimal == by_degree,
                    format!("{} cells, gamma onto {} synchronized", cells.len(), sync.len()),
                    format!("{bad} bad cells, {} images vs {} synchronized", images.len(), sync.len()),
                )
            }
        }),
    );

    push(
        "lattice",
        gated(n, 5, || {
            let table = match BoundsTable::new(&poset, 1000) {
                Ok(t) => t,
                Err(e) => return Outcome::Fail(e.to_string()),
            };
            let extremes = poset.minimum().is_ok() && poset.maximum().is_ok();
            let total = (0..poset.len())
                .all(|a| (0..poset.len()).all(|b| table.meet(a, b).is_ok() && table.join(a, b).is_ok()));
            verdict(extremes && total, "unique bounds, meet and join total", "lattice property fails")
        }),
    );

    Ok(CheckReport { size: n, results })
}
