//! Finite simple graphs with printable vertex labels.
//!
//! The adjacency relation is stored as a bit matrix, which keeps edge
//! queries cheap for the exhaustive scans performed elsewhere.

use std::collections::HashMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum GraphError {
    #[error("duplicate vertex label {0:?}")]
    DuplicateLabel(String),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex index {0} out of range")]
    BadIndex(usize),
    #[error("malformed DIMACS input: {0}")]
    Dimacs(String),
}

/// Finite simple graph: unique printable labels, symmetric irreflexive adjacency.
#[derive(Debug, Clone)]
pub struct Graph {
    labels: Vec<String>,
    /// Row-major bit matrix, `words_per_row` u64 words per vertex.
    bits: Vec<u64>,
    words_per_row: usize,
    edge_count: usize,
}

impl Graph {
    pub fn new(labels: Vec<String>) -> Result<Self, GraphError> {
        let mut seen = HashMap::new();
        for (i, l) in labels.iter().enumerate() {
            if seen.insert(l.clone(), i).is_some() {
                return Err(GraphError::DuplicateLabel(l.clone()));
            }
        }
        let n = labels.len();
        let words_per_row = n.div_ceil(64).max(1);
        Ok(Graph {
            labels,
            bits: vec![0u64; n * words_per_row],
            words_per_row,
            edge_count: 0,
        })
    }

    pub fn with_indexed_labels(prefix: &str, n: usize) -> Self {
        Graph::new((0..n).map(|i| format!("{prefix}{i}")).collect()).unwrap()
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        let n = self.n();
        if u >= n || v >= n {
            return Err(GraphError::BadIndex(u.max(v)));
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if !self.has_edge(u, v) {
            self.edge_count += 1;
            self.bits[u * self.words_per_row + v / 64] |= 1 << (v % 64);
            self.bits[v * self.words_per_row + u / 64] |= 1 << (u % 64);
        }
        Ok(())
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.bits[u * self.words_per_row + v / 64] >> (v % 64) & 1 == 1
    }

    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        let row = &self.bits[u * self.words_per_row..(u + 1) * self.words_per_row];
        row.iter().enumerate().flat_map(|(w, &word)| {
            (0..64).filter_map(move |b| {
                if word >> b & 1 == 1 {
                    Some(w * 64 + b)
                } else {
                    None
                }
            })
        })
    }

    pub fn degree(&self, u: usize) -> usize {
        let row = &self.bits[u * self.words_per_row..(u + 1) * self.words_per_row];
        row.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n()).flat_map(move |u| self.neighbors(u).filter(move |&v| u < v).map(move |v| (u, v)))
    }

    /// Complement on the same vertex set.
    pub fn complement(&self) -> Graph {
        let mut g = Graph::new(self.labels.clone()).unwrap();
        for u in 0..self.n() {
            for v in (u + 1)..self.n() {
                if !self.has_edge(u, v) {
                    g.add_edge(u, v).unwrap();
                }
            }
        }
        g
    }

    /// DIMACS ".col" text; comment lines carry the label map.
    pub fn to_dimacs(&self) -> String {
        let mut out = String::new();
        for (i, l) in self.labels.iter().enumerate() {
            let _ = writeln!(out, "c label {} {}", i + 1, l);
        }
        let _ = writeln!(out, "p edge {} {}", self.n(), self.edge_count);
        for (u, v) in self.edges() {
            let _ = writeln!(out, "e {} {}", u + 1, v + 1);
        }
        out
    }

    pub fn from_dimacs(text: &str) -> Result<Self, GraphError> {
        let mut n = None;
        let mut label_map: HashMap<usize, String> = HashMap::new();
        let mut edges = Vec::new();
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let mut parts = line.split_whitespace();
            match parts.next() {
                Some("c") => {
                    let rest: Vec<&str> = parts.collect();
                    if rest.len() >= 3 && rest[0] == "label" {
                        let id: usize = rest[1]
                            .parse()
                            .map_err(|_| GraphError::Dimacs(format!("bad label id in {line:?}")))?;
                        label_map.insert(id, rest[2..].join(" "));
                    }
                }
                Some("p") => {
                    let kind = parts.next();
                    if kind != Some("edge") && kind != Some("col") {
                        return Err(GraphError::Dimacs(format!("unexpected problem line {line:?}")));
                    }
                    let nv: usize = parts
                        .next()
                        .and_then(|s| s.parse().ok())
                        .ok_or_else(|| GraphError::Dimacs("missing vertex count".into()))?;
                    n = Some(nv);
                }
                Some("e") => {
                    let u: usize = parts
                        .next()
                        .and_then(|s| s.parse().ok())
                        .ok_or_else(|| GraphError::Dimacs(format!("bad edge line {line:?}")))?;
                    let v: usize = parts
                        .next()
                        .and_then(|s| s.parse().ok())
                        .ok_or_else(|| GraphError::Dimacs(format!("bad edge line {line:?}")))?;
                    edges.push((u, v));
                }
                _ => return Err(GraphError::Dimacs(format!("unexpected line {line:?}"))),
            }
        }
        let n = n.ok_or_else(|| GraphError::Dimacs("missing p line".into()))?;
        let labels: Vec<String> = (1..=n)
            .map(|i| label_map.get(&i).cloned().unwrap_or_else(|| format!("v{i}")))
            .collect();
        let mut g = Graph::new(labels)?;
        for (u, v) in edges {
            if u == 0 || v == 0 || u > n || v > n {
                return Err(GraphError::Dimacs(format!("edge ({u},{v}) out of range")));
            }
            g.add_edge(u - 1, v - 1)?;
        }
        Ok(g)
    }
}

/// A total assignment of colors (small naturals) to vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    pub colors: Vec<usize>,
    pub palette_size: usize,
}

impl Coloring {
    pub fn new(colors: Vec<usize>) -> Self {
        let palette_size = colors.iter().copied().collect::<std::collections::HashSet<_>>().len();
        Coloring { colors, palette_size }
    }

    /// True iff no edge of `g` is monochromatic. Errors if not total on `g`.
    pub fn is_proper(&self, g: &Graph) -> Result<bool, GraphError> {
        if self.colors.len() != g.n() {
            return Err(GraphError::BadIndex(self.colors.len()));
        }
        Ok(g.edges().all(|(u, v)| self.colors[u] != self.colors[v]))
    }

    /// Color classes as a canonical partition: sorted list of sorted classes.
    /// Two colorings are equal up to color bijection iff these agree.
    pub fn canonical_partition(&self) -> Vec<Vec<usize>> {
        let mut classes: HashMap<usize, Vec<usize>> = HashMap::new();
        for (v, &c) in self.colors.iter().enumerate() {
            classes.entry(c).or_default().push(v);
        }
        let mut out: Vec<Vec<usize>> = classes.into_values().collect();
        for c in &mut out {
            c.sort_unstable();
        }
        out.sort();
        out
    }

    pub fn to_json(&self, g: &Graph) -> serde_json::Value {
        let colors: serde_json::Map<String, serde_json::Value> = g
            .labels()
            .iter()
            .zip(&self.colors)
            .map(|(l, &c)| (l.clone(), serde_json::Value::from(c)))
            .collect();
        serde_json::json!({ "palette_size": self.palette_size, "colors": colors })
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ColoringJson {
    pub palette_size: usize,
    pub colors: HashMap<String, usize>,
}
