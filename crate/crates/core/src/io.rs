//! Text, JSON, DOT and CSV forms of every object in the crate.
//!
//! Words and coordinates are comma-separated integers (`"9,-1,2"`); the
//! empty string is the size-1 coordinate. JSON layouts:
//!
//! ```text
//! diagram pair   {"n": 10, "u": [...], "v": [...]}
//! interval-poset {"n": 3, "relations": [[2, 1], [3, 1]]}   // [j, i] means x_j ⊲ x_i
//! coordinate     {"n": 10, "c": [9, -1, 2, 1, -4, 4, 3, 1, -2]}
//! tree           {"l": <tree or null>, "r": <tree or null>}, null for no nodes
//! interval       {"n": 3, "lower": <tree>, "upper": <tree>}
//! cell           {"n": 3, "cmin": [...], "cmax": [...], "gamma": [...]}
//! hasse          {"n": 3, "nodes": [{"id": 0, "c": [...]}], "edges": [[lo, hi]]}
//! ```

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::cells::{is_minimal_cellular, Cell};
use crate::cubic::CubicCoordinate;
use crate::diagrams::TamariIntervalDiagram;
use crate::error::{Error, Result};
use crate::interval_posets::IntervalPoset;
use crate::lattice::PosetInstance;
use crate::trees::{BinaryTree, TamariInterval};

pub fn parse_word(text: &str) -> Result<Vec<i64>> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(vec![]);
    }
    text.split(',')
        .map(|s| s.trim().parse::<i64>().map_err(|e| Error::Parse(format!("{s:?}: {e}"))))
        .collect()
}

pub fn format_word<T: ToString>(word: &[T]) -> String {
    word.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

pub fn parse_cc_text(text: &str) -> Result<CubicCoordinate> {
    CubicCoordinate::new(parse_word(text)?)
}

pub fn cc_text(c: &CubicCoordinate) -> String {
    format_word(c.entries())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TidJson {
    pub n: usize,
    pub u: Vec<i64>,
    pub v: Vec<i64>,
}

impl From<&TamariIntervalDiagram> for TidJson {
    fn from(t: &TamariIntervalDiagram) -> Self {
        Self {
            n: t.size(),
            u: t.u().letters().iter().map(|&x| x as i64).collect(),
            v: t.v().letters().iter().map(|&x| x as i64).collect(),
        }
    }
}

impl TidJson {
    pub fn parse(&self) -> Result<TamariIntervalDiagram> {
        check_size(self.n, self.u.len())?;
        TamariIntervalDiagram::from_words(&self.u, &self.v)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetJson {
    pub n: usize,
    pub relations: Vec<[usize; 2]>,
}

impl From<&IntervalPoset> for PosetJson {
    fn from(p: &IntervalPoset) -> Self {
        Self { n: p.size(), relations: p.relations().into_iter().map(|(a, b)| [a, b]).collect() }
    }
}

impl PosetJson {
    pub fn parse(&self) -> Result<IntervalPoset> {
        let pairs: Vec<(usize, usize)> = self.relations.iter().map(|&[a, b]| (a, b)).collect();
        IntervalPoset::from_relations(self.n, &pairs)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CcJson {
    pub n: usize,
    pub c: Vec<i64>,
}

impl From<&CubicCoordinate> for CcJson {
    fn from(c: &CubicCoordinate) -> Self {
        Self { n: c.size(), c: c.entries().to_vec() }
    }
}

impl CcJson {
    pub fn parse(&self) -> Result<CubicCoordinate> {
        check_size(self.n, self.c.len() + 1)?;
        CubicCoordinate::new(self.c.clone())
    }
}

fn check_size(declared: usize, actual: usize) -> Result<()> {
    if declared != actual {
        return Err(Error::SizeMismatch { left: declared, right: actual });
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeJson {
    pub l: Option<Box<TreeJson>>,
    pub r: Option<Box<TreeJson>>,
}

pub fn tree_to_json(t: &BinaryTree) -> Option<TreeJson> {
    match t {
        BinaryTree::Empty => None,
        BinaryTree::Node(l, r) => {
            Some(TreeJson { l: tree_to_json(l).map(Box::new), r: tree_to_json(r).map(Box::new) })
        }
    }
}

pub fn tree_from_json(t: Option<&TreeJson>) -> BinaryTree {
    match t {
        None => BinaryTree::Empty,
        Some(node) => BinaryTree::node(tree_from_json(node.l.as_deref()), tree_from_json(node.r.as_deref())),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntervalJson {
    pub n: usize,
    pub lower: Option<TreeJson>,
    pub upper: Option<TreeJson>,
}

impl From<&TamariInterval> for IntervalJson {
    fn from(i: &TamariInterval) -> Self {
        Self { n: i.size(), lower: tree_to_json(i.lower()), upper: tree_to_json(i.upper()) }
    }
}

impl IntervalJson {
    pub fn parse(&self) -> Result<TamariInterval> {
        let lower = tree_from_json(self.lower.as_ref());
        let upper = tree_from_json(self.upper.as_ref());
        check_size(self.n, lower.size())?;
        TamariInterval::new(lower, upper)
    }
}

/// An interval with both trees as balanced-parenthesis words.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreePairJson {
    pub n: usize,
    pub lower: String,
    pub upper: String,
}

impl From<&TamariInterval> for TreePairJson {
    fn from(i: &TamariInterval) -> Self {
        Self { n: i.size(), lower: i.lower().to_brackets(), upper: i.upper().to_brackets() }
    }
}

impl TreePairJson {
    pub fn parse(&self) -> Result<TamariInterval> {
        let lower = BinaryTree::from_brackets(&self.lower)?;
        check_size(self.n, lower.size())?;
        TamariInterval::new(lower, BinaryTree::from_brackets(&self.upper)?)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellJson {
    pub n: usize,
    pub cmin: Vec<i64>,
    pub cmax: Vec<i64>,
    pub gamma: Vec<i64>,
    /// Number of coordinates in the cell's box, when requested.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub interior: Option<usize>,
}

impl From<&Cell> for CellJson {
    fn from(cell: &Cell) -> Self {
        Self {
            n: cell.size(),
            cmin: cell.minimal().entries().to_vec(),
            cmax: cell.maximal().entries().to_vec(),
            gamma: cell.gamma().into_entries(),
            interior: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HasseNode {
    pub id: usize,
    pub c: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HasseJson {
    pub n: usize,
    pub nodes: Vec<HasseNode>,
    pub edges: Vec<[usize; 2]>,
}

impl From<&PosetInstance> for HasseJson {
    fn from(p: &PosetInstance) -> Self {
        Self {
            n: p.size(),
            nodes: p.elements().iter().enumerate().map(|(id, c)| HasseNode { id, c: c.entries().to_vec() }).collect(),
            edges: p.edges().into_iter().map(|(a, b)| [a, b]).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RealizationVertex {
    pub id: usize,
    pub c: Vec<i64>,
    pub synchronized: bool,
    pub new: bool,
    pub minimal_cellular: bool,
}

/// Every coordinate placed in `R^(n-1)` with the cover arrows between them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RealizationDocument {
    pub n: usize,
    pub vertices: Vec<RealizationVertex>,
    pub edges: Vec<[usize; 2]>,
}

impl From<&PosetInstance> for RealizationDocument {
    fn from(p: &PosetInstance) -> Self {
        let vertices = p
            .elements()
            .iter()
            .enumerate()
            .map(|(id, c)| RealizationVertex {
                id,
                c: c.entries().to_vec(),
                synchronized: c.is_synchronized(),
                new: c.is_new(),
                minimal_cellular: is_minimal_cellular(c),
            })
            .collect();
        Self { n: p.size(), vertices, edges: p.edges().into_iter().map(|(a, b)| [a, b]).collect() }
    }
}

impl RealizationDocument {
    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    /// Vertex table: `id,c1,...,c{n-1},synchronized,new,minimal_cellular`.
    pub fn vertices_csv(&self) -> String {
        let mut out = String::from("id");
        for i in 1..self.n {
            let _ = write!(out, ",c{i}");
        }
        out.push_str(",synchronized,new,minimal_cellular\n");
        for v in &self.vertices {
            let _ = write!(out, "{}", v.id);
            for x in &v.c {
                let _ = write!(out, ",{x}");
            }
            let _ = writeln!(out, ",{},{},{}", v.synchronized, v.new, v.minimal_cellular);
        }
        out
    }

    /// Edge table: `lower,upper`.
    pub fn edges_csv(&self) -> String {
        let mut out = String::from("lower,upper\n");
        for [a, b] in &self.edges {
            let _ = writeln!(out, "{a},{b}");
        }
        out
    }

    /// Graphviz digraph, ranked by the sum of entries, arrows pointing up.
    pub fn to_dot(&self) -> String {
        let mut out = format!("digraph CC{} {{\n  rankdir=BT;\n  node [shape=plaintext];\n", self.n);
        let mut ranks: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
        for v in &self.vertices {
            ranks.entry(v.c.iter().sum()).or_default().push(v.id);
            let _ = writeln!(out, "  {} [label=\"({})\"];", v.id, format_word(&v.c));
        }
        for ids in ranks.values() {
            let list: Vec<String> = ids.iter().map(ToString::to_string).collect();
            let _ = writeln!(out, "  {{ rank=same; {}; }}", list.join("; "));
        }
        for [a, b] in &self.edges {
            let _ = writeln!(out, "  {a} -> {b};");
        }
        out.push_str("}\n");
        out
    }
}
