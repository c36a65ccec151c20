//! Fractional chromatic certificates: verified fractional colorings (upper
//! bounds) and fractional cliques (lower bounds), in exact rational
//! arithmetic throughout. No LP solver; equality of the two verified values
//! pins the fractional chromatic number.

use std::collections::HashMap;

use num_rational::Rational64;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;
use crate::kneser::{total_cg_labels, total_partitions, PartitionVertex};
use crate::solve::{maximal_independent_sets, Budget, SearchError};

#[derive(Debug, Error)]
pub enum CertificateError {
    #[error("set #{set_index} is not independent: vertices {u} and {v} are adjacent")]
    NotIndependent { set_index: usize, u: String, v: String },
    #[error("vertex {vertex} has covering weight {weight} < 1")]
    Uncovered { vertex: String, weight: Rational64 },
    #[error("set #{set_index} contains out-of-range vertex {vertex}")]
    BadVertex { set_index: usize, vertex: usize },
    #[error("non-positive weight {weight} on set #{set_index}")]
    BadWeight { set_index: usize, weight: Rational64 },
    #[error("independent set {set:?} has weight {weight} > 1")]
    OverweightSet { set: Vec<String>, weight: Rational64 },
    #[error("weight vector has {got} entries for a graph on {expected} vertices")]
    WrongArity { got: usize, expected: usize },
    #[error("negative weight {weight} on vertex {vertex}")]
    NegativeWeight { vertex: String, weight: Rational64 },
    #[error("search: {0}")]
    Search(#[from] SearchError),
    #[error("unknown vertex label {0:?}")]
    UnknownLabel(String),
    #[error("bad rational literal {0:?}")]
    BadRational(String),
}

/// Weighted cover by independent sets.
#[derive(Debug, Clone)]
pub struct FractionalColoring {
    pub sets: Vec<(Vec<usize>, Rational64)>,
}

/// Nonnegative vertex weights bounded by 1 on every independent set.
#[derive(Debug, Clone)]
pub struct FractionalClique {
    pub weights: Vec<Rational64>,
}

/// Checks both certificate invariants by direct scan and returns the total
/// weight of the cover.
pub fn verify_fractional_coloring(
    g: &Graph,
    fc: &FractionalColoring,
) -> Result<Rational64, CertificateError> {
    let mut cover = vec![Rational64::zero(); g.n()];
    let mut total = Rational64::zero();
    for (idx, (set, weight)) in fc.sets.iter().enumerate() {
        if *weight <= Rational64::zero() {
            return Err(CertificateError::BadWeight { set_index: idx, weight: *weight });
        }
        for (i, &u) in set.iter().enumerate() {
            if u >= g.n() {
                return Err(CertificateError::BadVertex { set_index: idx, vertex: u });
            }
            for &v in &set[i + 1..] {
                if g.has_edge(u, v) {
                    return Err(CertificateError::NotIndependent {
                        set_index: idx,
                        u: g.label(u).to_string(),
                        v: g.label(v).to_string(),
                    });
                }
            }
            cover[u] += *weight;
        }
        total += *weight;
    }
    for (v, w) in cover.iter().enumerate() {
        if *w < Rational64::one() {
            return Err(CertificateError::Uncovered {
                vertex: g.label(v).to_string(),
                weight: *w,
            });
        }
    }
    Ok(total)
}

/// Checks the fractional-clique invariant on every maximal independent set
/// (sufficient for all independent sets since weights are nonnegative) and
/// returns the total weight.
pub fn verify_fractional_clique(
    g: &Graph,
    fq: &FractionalClique,
    budget: &mut Budget,
) -> Result<Rational64, CertificateError> {
    if fq.weights.len() != g.n() {
        return Err(CertificateError::WrongArity { got: fq.weights.len(), expected: g.n() });
    }
    for (v, w) in fq.weights.iter().enumerate() {
        if *w < Rational64::zero() {
            return Err(CertificateError::NegativeWeight {
                vertex: g.label(v).to_string(),
                weight: *w,
            });
        }
    }
    for set in maximal_independent_sets(g, budget)? {
        let weight: Rational64 = set.iter().map(|&v| fq.weights[v]).sum();
        if weight > Rational64::one() {
            return Err(CertificateError::OverweightSet {
                set: set.iter().map(|&v| g.label(v).to_string()).collect(),
                weight,
            });
        }
    }
    Ok(fq.weights.iter().sum())
}

/// The fractional coloring of KG(n) assembled layer by layer: for each
/// k < n/2 and i in {1..n}, the partitions whose small part has size k and
/// contains i get weight 1/k; for even n the whole middle layer is one set
/// of weight 1. Indices follow `build_total_kg(n)` vertex order.
pub fn kg_total_fractional_coloring(n: u32) -> FractionalColoring {
    let parts: Vec<PartitionVertex> = total_partitions(n);
    let mut sets = Vec::new();
    for k in 1..=(n - 1) / 2 {
        for i in 1..=n {
            let set: Vec<usize> = parts
                .iter()
                .enumerate()
                .filter(|(_, p)| p.part.count_ones() == k && p.part >> (i - 1) & 1 == 1)
                .map(|(idx, _)| idx)
                .collect();
            sets.push((set, Rational64::new(1, k as i64)));
        }
    }
    if n % 2 == 0 {
        let middle: Vec<usize> = parts
            .iter()
            .enumerate()
            .filter(|(_, p)| 2 * p.part.count_ones() == n)
            .map(|(idx, _)| idx)
            .collect();
        sets.push((middle, Rational64::one()));
    }
    FractionalColoring { sets }
}

/// The fractional clique w((A,B)) = 1/|A| on CG(n), indices following
/// `build_total_cg(n)` vertex order.
pub fn cg_total_fractional_clique(n: u32) -> FractionalClique {
    let weights = total_cg_labels(n)
        .iter()
        .map(|l| Rational64::new(1, l.min_part_size(n) as i64))
        .collect();
    FractionalClique { weights }
}

/// The published value n·H_{⌊(n-1)/2⌋} + (1 - p(n)).
pub fn total_fractional_value(n: u32) -> Rational64 {
    let parity = Rational64::from_integer(if n % 2 == 0 { 1 } else { 0 });
    Rational64::from_integer(n as i64) * crate::kneser::harmonic(((n - 1) / 2) as u64) + parity
}

/// Outcome of the four-holed-sphere fractional-clique arithmetic.
#[derive(Debug, Clone)]
pub struct Sigma4Check {
    /// (c1, c2, c3) weight per class.
    pub class_weights: [Rational64; 3],
    /// Weight of each maximal-independent-set profile; all must be <= 1.
    pub profile_values: Vec<([u32; 3], Rational64)>,
    /// Total value sum c_i |V_i|.
    pub total: Rational64,
}

/// Verifies the class-weight fractional clique against the published
/// maximal-independent-set profiles and class sizes (6, 6, 12).
pub fn sigma4_fractional_check() -> Sigma4Check {
    let c = [Rational64::new(7, 9), Rational64::new(2, 9), Rational64::new(1, 9)];
    let profiles: [[u32; 3]; 5] = [[1, 1, 0], [1, 0, 2], [0, 1, 4], [0, 2, 2], [0, 3, 3]];
    let class_sizes = [6, 6, 12];
    let profile_values: Vec<([u32; 3], Rational64)> = profiles
        .iter()
        .map(|p| {
            let v: Rational64 =
                (0..3).map(|i| Rational64::from_integer(p[i] as i64) * c[i]).sum();
            (*p, v)
        })
        .collect();
    for (p, v) in &profile_values {
        assert!(*v <= Rational64::one(), "profile {p:?} violates the clique constraint");
    }
    let total = (0..3).map(|i| Rational64::from_integer(class_sizes[i]) * c[i]).sum();
    Sigma4Check { class_weights: c, profile_values, total }
}

// ---------------------------------------------------------------------------
// JSON certificate formats.

#[derive(Debug, Serialize, Deserialize)]
pub struct FractionalColoringJson {
    pub sets: Vec<WeightedSetJson>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct WeightedSetJson {
    pub vertices: Vec<String>,
    pub weight: String,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct FractionalCliqueJson {
    pub weights: HashMap<String, String>,
}

pub fn parse_rational(s: &str) -> Result<Rational64, CertificateError> {
    let bad = || CertificateError::BadRational(s.to_string());
    match s.split_once('/') {
        Some((p, q)) => {
            let p: i64 = p.trim().parse().map_err(|_| bad())?;
            let q: i64 = q.trim().parse().map_err(|_| bad())?;
            if q == 0 {
                return Err(bad());
            }
            Ok(Rational64::new(p, q))
        }
        None => Ok(Rational64::from_integer(s.trim().parse().map_err(|_| bad())?)),
    }
}

pub fn format_rational(r: &Rational64) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl FractionalColoring {
    pub fn from_json(g: &Graph, json: &FractionalColoringJson) -> Result<Self, CertificateError> {
        let mut sets = Vec::new();
        for set in &json.sets {
            let vertices = set
                .vertices
                .iter()
                .map(|l| g.index_of(l).ok_or_else(|| CertificateError::UnknownLabel(l.clone())))
                .collect::<Result<Vec<_>, _>>()?;
            sets.push((vertices, parse_rational(&set.weight)?));
        }
        Ok(FractionalColoring { sets })
    }

    pub fn to_json(&self, g: &Graph) -> FractionalColoringJson {
        FractionalColoringJson {
            sets: self
                .sets
                .iter()
                .map(|(set, w)| WeightedSetJson {
                    vertices: set.iter().map(|&v| g.label(v).to_string()).collect(),
                    weight: format_rational(w),
                })
                .collect(),
        }
    }
}

impl FractionalClique {
    pub fn from_json(g: &Graph, json: &FractionalCliqueJson) -> Result<Self, CertificateError> {
        let mut weights = vec![Rational64::zero(); g.n()];
        for (label, w) in &json.weights {
            let v = g.index_of(label).ok_or_else(|| CertificateError::UnknownLabel(label.clone()))?;
            weights[v] = parse_rational(w)?;
        }
        Ok(FractionalClique { weights })
    }

    pub fn to_json(&self, g: &Graph) -> FractionalCliqueJson {
        FractionalCliqueJson {
            weights: self
                .weights
                .iter()
                .enumerate()
                .map(|(v, w)| (g.label(v).to_string(), format_rational(w)))
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::kneser::{build_cg, build_kg, build_total_cg, build_total_kg};

    #[test]
    fn k2_singletons_value_two() {
        let mut g = Graph::with_indexed_labels("v", 2);
        g.add_edge(0, 1).unwrap();
        let fc = FractionalColoring {
            sets: vec![(vec![0], Rational64::one()), (vec![1], Rational64::one())],
        };
        assert_eq!(verify_fractional_coloring(&g, &fc).unwrap(), Rational64::from_integer(2));
    }

    #[test]
    fn petersen_half_weight_cover() {
        // The 5 sets S_i (pairs containing i), weight 1/2 each: value 5/2.
        let g = build_kg(5, 2).unwrap();
        let sets = (1..=5u32)
            .map(|i| {
                let set: Vec<usize> = (0..g.n())
                    .filter(|&v| g.label(v).contains(&i.to_string()))
                    .collect();
                (set, Rational64::new(1, 2))
            })
            .collect();
        let fc = FractionalColoring { sets };
        assert_eq!(verify_fractional_coloring(&g, &fc).unwrap(), Rational64::new(5, 2));
    }

    #[test]
    fn rejects_dependent_set_and_uncovered_vertex() {
        let mut g = Graph::with_indexed_labels("v", 2);
        g.add_edge(0, 1).unwrap();
        let bad = FractionalColoring { sets: vec![(vec![0, 1], Rational64::one())] };
        assert!(matches!(
            verify_fractional_coloring(&g, &bad),
            Err(CertificateError::NotIndependent { .. })
        ));
        let partial = FractionalColoring { sets: vec![(vec![0], Rational64::one())] };
        assert!(matches!(
            verify_fractional_coloring(&g, &partial),
            Err(CertificateError::Uncovered { .. })
        ));
    }

    #[test]
    fn k3_all_ones_clique() {
        let mut g = Graph::with_indexed_labels("v", 3);
        g.add_edge(0, 1).unwrap();
        g.add_edge(1, 2).unwrap();
        g.add_edge(0, 2).unwrap();
        let fq = FractionalClique { weights: vec![Rational64::one(); 3] };
        let v = verify_fractional_clique(&g, &fq, &mut Budget::default()).unwrap();
        assert_eq!(v, Rational64::from_integer(3));
    }

    #[test]
    fn cg72_constant_half() {
        let g = build_cg(7, 2).unwrap();
        let fq = FractionalClique { weights: vec![Rational64::new(1, 2); g.n()] };
        let v = verify_fractional_clique(&g, &fq, &mut Budget::default()).unwrap();
        assert_eq!(v, Rational64::new(7, 2));
    }

    #[test]
    fn sandwich_small_values() {
        // n = 5: 5·H_2 = 15/2; n = 6: 6·H_2 + 1 = 10.
        assert_eq!(total_fractional_value(5), Rational64::new(15, 2));
        assert_eq!(total_fractional_value(6), Rational64::from_integer(10));
        for n in [5u32, 6] {
            let kg = build_total_kg(n).unwrap();
            let fc = kg_total_fractional_coloring(n);
            assert_eq!(verify_fractional_coloring(&kg, &fc).unwrap(), total_fractional_value(n));
            let cg = build_total_cg(n).unwrap();
            let fq = cg_total_fractional_clique(n);
            assert_eq!(
                verify_fractional_clique(&cg, &fq, &mut Budget::default()).unwrap(),
                total_fractional_value(n)
            );
        }
    }

    #[test]
    fn trivial_n2_certificates() {
        let fc = kg_total_fractional_coloring(2);
        let kg = build_total_kg(2).unwrap();
        assert_eq!(verify_fractional_coloring(&kg, &fc).unwrap(), Rational64::one());
        let cg = build_total_cg(2).unwrap();
        let fq = cg_total_fractional_clique(2);
        assert_eq!(
            verify_fractional_clique(&cg, &fq, &mut Budget::default()).unwrap(),
            Rational64::one()
        );
    }

    #[test]
    fn sigma4_arithmetic() {
        let check = sigma4_fractional_check();
        assert_eq!(check.total, Rational64::new(22, 3));
        let tight: Vec<_> = check
            .profile_values
            .iter()
            .filter(|(_, v)| *v == Rational64::one())
            .map(|(p, _)| *p)
            .collect();
        assert!(tight.contains(&[0, 3, 3]));
        assert!(tight.contains(&[1, 1, 0]));
    }

    #[test]
    fn certificate_json_round_trip() {
        let g = build_cg(5, 2).unwrap();
        let fq = FractionalClique { weights: vec![Rational64::new(1, 2); g.n()] };
        let json = fq.to_json(&g);
        let back = FractionalClique::from_json(&g, &json).unwrap();
        assert_eq!(back.weights, fq.weights);
        assert_eq!(parse_rational("22/3").unwrap(), Rational64::new(22, 3));
        assert_eq!(parse_rational("5").unwrap(), Rational64::from_integer(5));
        assert!(parse_rational("1/0").is_err());
    }
}
