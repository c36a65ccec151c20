//! Kneser and cyclic interval graphs, their total variants, and the
//! explicit colorings achieving the known chromatic values.
//!
//! Subsets of {1..n} are carried as bit masks (bit i-1 for element i).
//! Vertex labels use canonical set notation, e.g. "{1,3,4}".

use num_rational::Rational64;
use thiserror::Error;

use crate::graph::{Coloring, Graph};

#[derive(Debug, Error)]
pub enum KneserError {
    #[error("require n >= 2k >= 2, got n={n}, k={k}")]
    BadParameters { n: u32, k: u32 },
    #[error("require n >= 2, got n={n}")]
    BadOrder { n: u32 },
}

pub fn subset_label(n: u32, mask: u32) -> String {
    let elems: Vec<String> =
        (1..=n).filter(|&i| mask >> (i - 1) & 1 == 1).map(|i| i.to_string()).collect();
    format!("{{{}}}", elems.join(","))
}

fn k_subsets(n: u32, k: u32) -> Vec<u32> {
    let mut out = Vec::new();
    for mask in 0u32..(1 << n) {
        if mask.count_ones() == k {
            out.push(mask);
        }
    }
    out
}

/// The two-part partition of {1..n} determined by its canonical small part:
/// |A| <= n/2, with ties at |A| = n/2 broken by requiring 1 ∈ A.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PartitionVertex {
    pub n: u32,
    pub part: u32,
}

impl PartitionVertex {
    pub fn new(n: u32, subset: u32) -> Self {
        let full = (1u32 << n) - 1;
        let subset = subset & full;
        debug_assert!(subset != 0 && subset != full);
        let comp = full & !subset;
        let a = subset.count_ones();
        let part = if 2 * a < n {
            subset
        } else if 2 * a > n {
            comp
        } else if subset & 1 == 1 {
            subset
        } else {
            comp
        };
        PartitionVertex { n, part }
    }

    pub fn complement(&self) -> u32 {
        ((1u32 << self.n) - 1) & !self.part
    }

    pub fn label(&self) -> String {
        subset_label(self.n, self.part)
    }
}

/// Whether partitions (A, A^c) and (C, C^c) are nested: one of the four
/// intersections A∩C, A∩D, B∩C, B∩D is empty.
pub fn nested(n: u32, a: u32, c: u32) -> bool {
    let full = (1u32 << n) - 1;
    let b = full & !a;
    let d = full & !c;
    a & c == 0 || a & d == 0 || b & c == 0 || b & d == 0
}

/// All partition vertices of KG(n), in deterministic order.
pub fn total_partitions(n: u32) -> Vec<PartitionVertex> {
    let full = (1u32 << n) - 1;
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    for mask in 1..full {
        let v = PartitionVertex::new(n, mask);
        if seen.insert(v.part) {
            out.push(v);
        }
    }
    out.sort_by_key(|v| (v.part.count_ones(), v.part));
    out
}

/// Kneser graph KG(n,k): k-subsets of {1..n}, edges between disjoint pairs.
pub fn build_kg(n: u32, k: u32) -> Result<Graph, KneserError> {
    if k == 0 || n < 2 * k {
        return Err(KneserError::BadParameters { n, k });
    }
    let subsets = k_subsets(n, k);
    let mut g = Graph::new(subsets.iter().map(|&m| subset_label(n, m)).collect()).unwrap();
    for i in 0..subsets.len() {
        for j in (i + 1)..subsets.len() {
            if subsets[i] & subsets[j] == 0 {
                g.add_edge(i, j).unwrap();
            }
        }
    }
    Ok(g)
}

/// Cyclic interval {l+1, ..., l+k} mod n, as a mask.
fn cyclic_interval(n: u32, l: u32, k: u32) -> u32 {
    let mut mask = 0u32;
    for t in 1..=k {
        let e = (l + t - 1) % n + 1;
        mask |= 1 << (e - 1);
    }
    mask
}

/// Cyclic interval graph CG(n,k): the subgraph of KG(n,k) induced on the
/// n cyclic intervals.
pub fn build_cg(n: u32, k: u32) -> Result<Graph, KneserError> {
    if k == 0 || n < 2 * k {
        return Err(KneserError::BadParameters { n, k });
    }
    let intervals: Vec<u32> = (0..n).map(|l| cyclic_interval(n, l, k)).collect();
    let mut g = Graph::new(intervals.iter().map(|&m| subset_label(n, m)).collect()).unwrap();
    for i in 0..intervals.len() {
        for j in (i + 1)..intervals.len() {
            if intervals[i] & intervals[j] == 0 {
                g.add_edge(i, j).unwrap();
            }
        }
    }
    Ok(g)
}

/// Total Kneser graph KG(n): two-part partitions, edges between distinct
/// nested partitions. 2^{n-1} - 1 vertices.
pub fn build_total_kg(n: u32) -> Result<Graph, KneserError> {
    if n < 2 {
        return Err(KneserError::BadOrder { n });
    }
    let parts = total_partitions(n);
    let mut g = Graph::new(parts.iter().map(|p| p.label()).collect()).unwrap();
    for i in 0..parts.len() {
        for j in (i + 1)..parts.len() {
            if nested(n, parts[i].part, parts[j].part) {
                g.add_edge(i, j).unwrap();
            }
        }
    }
    Ok(g)
}

/// The (i,j) label of a cyclic-interval partition: 1 <= i < j <= n.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CyclicLabel {
    pub i: u32,
    pub j: u32,
}

impl CyclicLabel {
    pub fn label(&self) -> String {
        format!("({},{})", self.i, self.j)
    }

    /// The cyclic-interval part {i+1, ..., j} as a mask in {1..n}.
    pub fn interval_mask(&self, n: u32) -> u32 {
        cyclic_interval(n, self.i, self.j - self.i)
    }

    /// Size of the smaller part of the corresponding partition.
    pub fn min_part_size(&self, n: u32) -> u32 {
        (self.j - self.i).min(n - (self.j - self.i))
    }
}

/// (i,j) and (i',j') are linked when they interleave around the cycle.
pub fn linked(a: CyclicLabel, b: CyclicLabel) -> bool {
    (a.i < b.i && b.i < a.j && a.j < b.j) || (b.i < a.i && a.i < b.j && b.j < a.j)
}

pub fn total_cg_labels(n: u32) -> Vec<CyclicLabel> {
    let mut out = Vec::new();
    for i in 1..=n {
        for j in (i + 1)..=n {
            out.push(CyclicLabel { i, j });
        }
    }
    out
}

/// Total cyclic interval graph CG(n) on the C(n,2) labels (i,j);
/// edges correspond precisely to unlinked pairs.
pub fn build_total_cg(n: u32) -> Result<Graph, KneserError> {
    if n < 2 {
        return Err(KneserError::BadOrder { n });
    }
    let labels = total_cg_labels(n);
    let mut g = Graph::new(labels.iter().map(|l| l.label()).collect()).unwrap();
    for a in 0..labels.len() {
        for b in (a + 1)..labels.len() {
            if !linked(labels[a], labels[b]) {
                g.add_edge(a, b).unwrap();
            }
        }
    }
    Ok(g)
}

/// Color of a partition vertex under the (k,a) total coloring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TotalColor {
    /// |A| = 2^{k+1} - l with 1 <= l <= 2^k; a is the l-th largest element of A.
    Pair { k: u32, a: u32 },
    /// Shared color of the middle layer when n is a power of two.
    Middle,
}

/// The (k,a) coloring: uses n·⌈log2(n/2)⌉ colors, plus one iff n is a
/// power of 2.
pub fn total_coloring(v: &PartitionVertex) -> TotalColor {
    let n = v.n;
    let size = v.part.count_ones();
    if n.is_power_of_two() && 2 * size == n {
        return TotalColor::Middle;
    }
    // Unique decomposition |A| = 2^{k+1} - l, 1 <= l <= 2^k.
    let k = size.ilog2();
    let l = (1 << (k + 1)) - size;
    // l-th largest element of A.
    let mut remaining = l;
    let mut a = 0;
    for e in (1..=n).rev() {
        if v.part >> (e - 1) & 1 == 1 {
            remaining -= 1;
            if remaining == 0 {
                a = e;
                break;
            }
        }
    }
    TotalColor::Pair { k, a }
}

/// Palette size of the (k,a) coloring scheme on KG(n): pairs (k,a) with
/// k < ⌈log2(n/2)⌉ and a in {1..n}, plus the middle color iff n is a power
/// of 2. The number of distinct colors actually realized can be smaller
/// (e.g. 9 of 10 at n = 5); see `total_coloring_colors_used`.
pub fn total_coloring_palette_size(n: u32) -> u32 {
    // ceil(log2(n/2)) computed exactly: smallest t with 2^t >= n/2.
    let mut t = 0;
    while (1u64 << t) * 2 < n as u64 {
        t += 1;
    }
    n * t + if n.is_power_of_two() { 1 } else { 0 }
}

/// Whether a color is a member of the declared palette for KG(n).
pub fn color_in_palette(n: u32, color: &TotalColor) -> bool {
    let t = {
        let mut t = 0;
        while (1u64 << t) * 2 < n as u64 {
            t += 1;
        }
        t
    };
    match *color {
        TotalColor::Middle => n.is_power_of_two(),
        TotalColor::Pair { k, a } => (k as u64) < t && 1 <= a && a <= n,
    }
}

/// Number of distinct colors the (k,a) coloring realizes on KG(n).
pub fn total_coloring_colors_used(n: u32) -> u32 {
    let distinct: std::collections::HashSet<TotalColor> =
        total_partitions(n).iter().map(total_coloring).collect();
    distinct.len() as u32
}

/// Kneser's proper (n-2k+2)-coloring of KG(n,k): color min(A) when
/// min(A) <= n-2k+1, else the shared top color n-2k+2. Colors in {1..n-2k+2}.
pub fn classical_kneser_coloring(n: u32, k: u32, subset: u32) -> u32 {
    debug_assert_eq!(subset.count_ones(), k);
    let min = subset.trailing_zeros() + 1;
    if min <= n - 2 * k + 1 {
        min
    } else {
        n - 2 * k + 2
    }
}

/// The classical coloring over the `build_kg(n,k)` vertex order, 0-based.
pub fn classical_kneser_full_coloring(n: u32, k: u32) -> Coloring {
    let colors = k_subsets(n, k)
        .iter()
        .map(|&m| classical_kneser_coloring(n, k, m) as usize - 1)
        .collect();
    Coloring { colors, palette_size: (n - 2 * k + 2) as usize }
}

/// The (k,a) coloring over the `build_total_kg(n)` vertex order, with the
/// color (k,a) mapped to k·n + a - 1 and the middle color last.
pub fn total_full_coloring(n: u32) -> Coloring {
    let middle_id = {
        let mut t = 0u32;
        while (1u64 << t) * 2 < n as u64 {
            t += 1;
        }
        n * t
    };
    let colors = total_partitions(n)
        .iter()
        .map(|p| match total_coloring(p) {
            TotalColor::Pair { k, a } => (k * n + a - 1) as usize,
            TotalColor::Middle => middle_id as usize,
        })
        .collect();
    Coloring { colors, palette_size: total_coloring_palette_size(n) as usize }
}

/// m-th harmonic number as an exact rational; H_0 = 0.
pub fn harmonic(m: u64) -> Rational64 {
    (1..=m as i64).map(|k| Rational64::new(1, k)).sum()
}
