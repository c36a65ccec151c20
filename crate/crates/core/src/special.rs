//! Bespoke finite graphs: the symplectic graph Sp(2g) over F₂, the
//! octahedron pair (N, C), Farey truncations F and F′ with mod-2/mod-3
//! colorings and the PSL(2,Z) color action, and the φ identification of
//! KG(6,2) with Sp(4).

use num_integer::Integer;
use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Error)]
pub enum SpecialError {
    #[error("Sp dimension must be a positive even number, got {0}")]
    OddDimension(usize),
    #[error("matrix determinant must be 1, got {0}")]
    BadDeterminant(i64),
    #[error("(0,0) is not a line")]
    ZeroLine,
}

// ---------------------------------------------------------------------------
// Symplectic graph over F₂.

fn bit(v: u32, i: usize) -> u32 {
    v >> i & 1
}

/// Standard symplectic form Σ (x_{2i-1} y_{2i} - x_{2i} y_{2i-1}) mod 2 on
/// F₂^{2g}; coordinates paired as (0,1), (2,3), ...
pub fn symplectic_form(two_g: usize, x: u32, y: u32) -> u32 {
    let mut s = 0;
    for i in (0..two_g).step_by(2) {
        s ^= bit(x, i) & bit(y, i + 1);
        s ^= bit(x, i + 1) & bit(y, i);
    }
    s
}

fn bitstring(two_g: usize, v: u32) -> String {
    (0..two_g).map(|i| if bit(v, i) == 1 { '1' } else { '0' }).collect()
}

/// Graph on the 2^{2g}-1 nonzero vectors of F₂^{2g}; distinct vectors span
/// an edge iff they are symplectically orthogonal.
pub fn build_sp(two_g: usize) -> Result<Graph, SpecialError> {
    if two_g == 0 || two_g % 2 != 0 {
        return Err(SpecialError::OddDimension(two_g));
    }
    let n = (1u32 << two_g) - 1;
    let labels: Vec<String> = (1..=n).map(|v| bitstring(two_g, v)).collect();
    let mut g = Graph::new(labels).unwrap();
    for x in 1..=n {
        for y in x + 1..=n {
            if symplectic_form(two_g, x, y) == 0 {
                g.add_edge((x - 1) as usize, (y - 1) as usize).unwrap();
            }
        }
    }
    Ok(g)
}

/// Exhaustive strong-regularity check: Some((v,k,λ,μ)) or None.
pub fn srg_parameters(g: &Graph) -> Option<(usize, usize, usize, usize)> {
    let v = g.n();
    if v < 3 {
        return None;
    }
    let k = g.degree(0);
    if (1..v).any(|u| g.degree(u) != k) {
        return None;
    }
    let mut lambda = None;
    let mut mu = None;
    for a in 0..v {
        for b in a + 1..v {
            let common = (0..v).filter(|&c| g.has_edge(a, c) && g.has_edge(b, c)).count();
            let slot = if g.has_edge(a, b) { &mut lambda } else { &mut mu };
            match slot {
                None => *slot = Some(common),
                Some(x) if *x == common => {}
                Some(_) => return None,
            }
        }
    }
    Some((v, k, lambda?, mu?))
}

// ---------------------------------------------------------------------------
// φ: KG(6,2) → Sp(4) via even-weight F₂⁶ mod the all-ones vector.

/// Class of e_i + e_j in even-weight F₂⁶ / ⟨111111⟩, canonicalized to the
/// weight-2 representative (i, j are 1-based).
pub fn phi_map(i: usize, j: usize) -> u32 {
    assert!(i != j && (1..=6).contains(&i) && (1..=6).contains(&j));
    1 << (i - 1) | 1 << (j - 1)
}

/// Induced pairing b̄(u, v) = u·v mod 2; well-defined on classes because
/// every representative has even weight.
pub fn phi_pairing(u: u32, v: u32) -> u32 {
    (u & v).count_ones() % 2
}

/// The graph on the 15 classes φ({i,j}) with edges at pairing 0. By
/// construction its adjacency coincides with disjointness of the pairs, so
/// it is KG(6,2) relabeled; it is also isomorphic to Sp(4).
pub fn phi_graph() -> Graph {
    let mut pairs = Vec::new();
    for i in 1..=6 {
        for j in i + 1..=6 {
            pairs.push((i, j));
        }
    }
    let labels: Vec<String> = pairs.iter().map(|&(i, j)| format!("{{{i},{j}}}")).collect();
    let mut g = Graph::new(labels).unwrap();
    for a in 0..pairs.len() {
        for b in a + 1..pairs.len() {
            let u = phi_map(pairs[a].0, pairs[a].1);
            let v = phi_map(pairs[b].0, pairs[b].1);
            if phi_pairing(u, v) == 0 {
                g.add_edge(a, b).unwrap();
            }
        }
    }
    g
}

// ---------------------------------------------------------------------------
// Octahedron pair (N, C).

const ANTIPODE: [usize; 7] = [0, 4, 5, 6, 1, 2, 3]; // 1-based lookup

/// Octahedron on {1..6} with antipodal pairs (1,4), (2,5), (3,6); its 12
/// edges are the non-antipodal pairs.
fn octahedron_edges() -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    for a in 1..=6 {
        for b in a + 1..=6 {
            if ANTIPODE[a] != b {
                edges.push((a, b));
            }
        }
    }
    edges
}

/// The 8 triangular faces, grouped into 4 antipodal pairs {F, -F}.
fn octahedron_face_pairs() -> Vec<([usize; 3], [usize; 3])> {
    let mut faces = Vec::new();
    for a in 1..=6 {
        for b in a + 1..=6 {
            for c in b + 1..=6 {
                if ANTIPODE[a] != b && ANTIPODE[a] != c && ANTIPODE[b] != c {
                    faces.push([a, b, c]);
                }
            }
        }
    }
    assert_eq!(faces.len(), 8);
    let mut pairs = Vec::new();
    for f in &faces {
        let mut anti = [ANTIPODE[f[0]], ANTIPODE[f[1]], ANTIPODE[f[2]]];
        anti.sort_unstable();
        if *f < anti {
            pairs.push((*f, anti));
        }
    }
    assert_eq!(pairs.len(), 4);
    pairs
}

/// (N, C): N is the graph on the 12 octahedron edges with adjacency =
/// vertex-disjointness; C extends N by 4 circle vertices, one per antipodal
/// face pair {F, -F}, each adjacent exactly to the 6 edges inside F ∪ -F.
pub fn build_octahedron_graphs() -> (Graph, Graph) {
    let edges = octahedron_edges();
    let edge_label = |&(a, b): &(usize, usize)| format!("{{{a},{b}}}");
    let mut n = Graph::new(edges.iter().map(edge_label).collect()).unwrap();
    for i in 0..edges.len() {
        for j in i + 1..edges.len() {
            let (a, b) = edges[i];
            let (c, d) = edges[j];
            if a != c && a != d && b != c && b != d {
                n.add_edge(i, j).unwrap();
            }
        }
    }

    let face_pairs = octahedron_face_pairs();
    let mut labels: Vec<String> = edges.iter().map(edge_label).collect();
    for (f, _) in &face_pairs {
        labels.push(format!("O{{{},{},{}}}", f[0], f[1], f[2]));
    }
    let mut c = Graph::new(labels).unwrap();
    for i in 0..edges.len() {
        for j in i + 1..edges.len() {
            if n.has_edge(i, j) {
                c.add_edge(i, j).unwrap();
            }
        }
    }
    for (fi, (f, anti)) in face_pairs.iter().enumerate() {
        let in_union = |v: usize| f.contains(&v) || anti.contains(&v);
        for (ei, &(a, b)) in edges.iter().enumerate() {
            // An edge lies in F ∪ -F iff both endpoints are in one face.
            let in_f = f.contains(&a) && f.contains(&b);
            let in_anti = anti.contains(&a) && anti.contains(&b);
            debug_assert!(in_union(a) || !in_f);
            if in_f || in_anti {
                c.add_edge(ei, edges.len() + fi).unwrap();
            }
        }
    }
    (n, c)
}

// ---------------------------------------------------------------------------
// Farey truncations.

/// A line in Z²: coprime (p, q) canonicalized with q > 0, or (1, 0).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FareyLine {
    pub p: i64,
    pub q: i64,
}

impl FareyLine {
    pub fn new(p: i64, q: i64) -> Result<Self, SpecialError> {
        if p == 0 && q == 0 {
            return Err(SpecialError::ZeroLine);
        }
        let g = p.gcd(&q);
        let (mut p, mut q) = (p / g, q / g);
        if q < 0 || (q == 0 && p < 0) {
            p = -p;
            q = -q;
        }
        Ok(FareyLine { p, q })
    }

    pub fn label(&self) -> String {
        format!("({}:{})", self.p, self.q)
    }
}

pub fn det(a: FareyLine, b: FareyLine) -> i64 {
    a.p * b.q - a.q * b.p
}

/// All canonical Farey lines with max(|p|, q) ≤ bound, sorted.
pub fn farey_lines(bound: i64) -> Vec<FareyLine> {
    let mut lines = Vec::new();
    for p in -bound..=bound {
        for q in 0..=bound {
            if let Ok(l) = FareyLine::new(p, q) {
                if l.p == p && l.q == q {
                    lines.push(l);
                }
            }
        }
    }
    lines.sort_unstable();
    lines
}

/// Truncation of the Farey graph F (|det| = 1) or, when `extended`, of F′
/// (|det| ∈ {1, 2}).
pub fn build_farey(bound: i64, extended: bool) -> Graph {
    let lines = farey_lines(bound);
    let mut g = Graph::new(lines.iter().map(|l| l.label()).collect()).unwrap();
    for i in 0..lines.len() {
        for j in i + 1..lines.len() {
            let d = det(lines[i], lines[j]).abs();
            if d == 1 || (extended && d == 2) {
                g.add_edge(i, j).unwrap();
            }
        }
    }
    g
}

/// Reduction of a line to the canonical representative of its image in
/// P¹(F_m), m ∈ {2, 3}: scaled so q = 1, or (1, 0). Yields m+1 colors.
pub fn farey_mod_coloring(l: FareyLine, m: i64) -> (i64, i64) {
    assert!(m == 2 || m == 3);
    let p = l.p.rem_euclid(m);
    let q = l.q.rem_euclid(m);
    assert!(p != 0 || q != 0, "primitive vector cannot vanish mod {m}");
    if q == 0 {
        (1, 0)
    } else {
        // q is invertible mod m (m prime): scale to q = 1.
        let inv = if q == 1 { 1 } else { (1..m).find(|x| x * q % m == 1).unwrap() };
        (p * inv % m, 1)
    }
}

/// Index of a mod-m color among the canonical m+1 representatives.
pub fn farey_color_index(color: (i64, i64), m: i64) -> usize {
    if color == (1, 0) {
        m as usize
    } else {
        color.0 as usize
    }
}

/// Action of an integer matrix [[a,b],[c,d]] with det 1 on a line.
pub fn psl2_act(mat: [i64; 4], l: FareyLine) -> Result<FareyLine, SpecialError> {
    let [a, b, c, d] = mat;
    let dt = a * d - b * c;
    if dt != 1 {
        return Err(SpecialError::BadDeterminant(dt));
    }
    FareyLine::new(a * l.p + b * l.q, c * l.p + d * l.q)
}

/// Action of the mod-m reduction of the matrix on a mod-m color.
pub fn psl2_act_color(mat: [i64; 4], color: (i64, i64), m: i64) -> (i64, i64) {
    let [a, b, c, d] = mat;
    let p = (a * color.0 + b * color.1).rem_euclid(m);
    let q = (c * color.0 + d * color.1).rem_euclid(m);
    assert!(p != 0 || q != 0);
    if q == 0 {
        (1, 0)
    } else {
        let inv = if q == 1 { 1 } else { (1..m).find(|x| x * q % m == 1).unwrap() };
        (p * inv % m, 1)
    }
}

// ---------------------------------------------------------------------------
// Chromatic bounds for the full curve graph.

/// The bracketing values around χ(C(S_g)): g·log g below, the separating
/// count (g-1)(2^{2g}-1) and g·4^g above.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CurveGraphBounds {
    pub lower_g_log_g: f64,
    pub separating_upper: u128,
    pub homologous_upper: u128,
}

pub fn bounds_table(g: u32) -> CurveGraphBounds {
    assert!(g >= 2);
    let gu = g as u128;
    CurveGraphBounds {
        lower_g_log_g: g as f64 * (g as f64).ln(),
        separating_upper: (gu - 1) * ((1u128 << (2 * g)) - 1),
        homologous_upper: gu * (1u128 << (2 * g)),
    }
}
