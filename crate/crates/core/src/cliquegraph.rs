//! Maximal-clique-graph machinery and unique-coloring propagation.
//!
//! The clique graph has the maximal cliques of the parent as vertices, with
//! adjacency between cliques meeting in a codimension-1 face. When the flag
//! complex is pure of dimension k-1 and the clique graph is connected, a
//! proper k-coloring is forced from any seeded maximal clique: the vertex
//! entering a clique inherits the color of the vertex leaving it.

use std::collections::VecDeque;

use thiserror::Error;

use crate::graph::{Coloring, Graph};
use crate::solve::{maximal_cliques, Budget, SearchError};

/// Maximal cliques of a parent graph, adjacent when |A ∩ B| = |A|-1 = |B|-1.
#[derive(Debug, Clone)]
pub struct MaxCliqueGraph {
    pub cliques: Vec<Vec<usize>>,
    pub adjacency: Vec<(usize, usize)>,
}

#[derive(Debug, Error)]
pub enum PropagationError {
    #[error("search: {0}")]
    Search(#[from] SearchError),
    #[error("seed is not a maximal clique of size {expected}: {seed:?}")]
    BadSeed { expected: usize, seed: Vec<usize> },
}

/// Structured obstruction reported by `propagate_unique_coloring`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PropagationFailure {
    /// A maximal clique of the wrong size; purity of dimension k-1 fails.
    Impure { clique: Vec<usize>, expected: usize },
    /// The clique graph is disconnected; propagation cannot reach everything.
    Disconnected,
    /// Two cliques force different colors on a shared vertex.
    Contradiction { clique_a: Vec<usize>, clique_b: Vec<usize> },
}

impl std::fmt::Display for PropagationFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            PropagationFailure::Impure { clique, expected } => {
                write!(f, "purity fails: maximal clique {clique:?} does not have {expected} vertices")
            }
            PropagationFailure::Disconnected => write!(f, "clique graph is disconnected"),
            PropagationFailure::Contradiction { clique_a, clique_b } => {
                write!(f, "propagation contradiction between cliques {clique_a:?} and {clique_b:?}")
            }
        }
    }
}

fn codim1_adjacent(a: &[usize], b: &[usize]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let inter = a.iter().filter(|v| b.contains(v)).count();
    inter + 1 == a.len()
}

pub fn max_clique_graph(g: &Graph, budget: &mut Budget) -> Result<MaxCliqueGraph, SearchError> {
    let cliques = maximal_cliques(g, budget)?;
    let mut adjacency = Vec::new();
    for i in 0..cliques.len() {
        for j in (i + 1)..cliques.len() {
            if codim1_adjacent(&cliques[i], &cliques[j]) {
                adjacency.push((i, j));
            }
        }
    }
    Ok(MaxCliqueGraph { cliques, adjacency })
}

/// BFS color propagation from a seeded maximal k-clique.
///
/// Success requires purity (every maximal clique has exactly k vertices),
/// a connected clique graph, and contradiction-free propagation; any other
/// outcome is a structured failure naming the obstruction.
pub fn propagate_unique_coloring(
    g: &Graph,
    k: usize,
    seed: &[usize],
    budget: &mut Budget,
) -> Result<Result<Coloring, PropagationFailure>, PropagationError> {
    let kc = max_clique_graph(g, budget)?;
    let mut seed_sorted = seed.to_vec();
    seed_sorted.sort_unstable();
    let seed_idx = kc
        .cliques
        .iter()
        .position(|c| *c == seed_sorted)
        .filter(|_| seed_sorted.len() == k)
        .ok_or(PropagationError::BadSeed { expected: k, seed: seed.to_vec() })?;

    // Certify the Lemma hypothesis before propagating.
    for c in &kc.cliques {
        if c.len() != k {
            return Ok(Err(PropagationFailure::Impure { clique: c.clone(), expected: k }));
        }
    }

    let m = kc.cliques.len();
    let mut neighbors: Vec<Vec<usize>> = vec![Vec::new(); m];
    for &(i, j) in &kc.adjacency {
        neighbors[i].push(j);
        neighbors[j].push(i);
    }

    let mut colors: Vec<Option<usize>> = vec![None; g.n()];
    for (c, &v) in kc.cliques[seed_idx].iter().enumerate() {
        colors[v] = Some(c);
    }
    let mut visited = vec![false; m];
    visited[seed_idx] = true;
    let mut queue = VecDeque::from([seed_idx]);
    while let Some(i) = queue.pop_front() {
        for &j in &neighbors[i] {
            // The entering vertex inherits the color of the leaving vertex.
            let entering = kc.cliques[j].iter().copied().find(|v| !kc.cliques[i].contains(v)).unwrap();
            let leaving = kc.cliques[i].iter().copied().find(|v| !kc.cliques[j].contains(v)).unwrap();
            let c = colors[leaving].expect("visited cliques are fully colored");
            match colors[entering] {
                None => colors[entering] = Some(c),
                Some(existing) if existing != c => {
                    return Ok(Err(PropagationFailure::Contradiction {
                        clique_a: kc.cliques[i].clone(),
                        clique_b: kc.cliques[j].clone(),
                    }));
                }
                Some(_) => {}
            }
            if !visited[j] {
                visited[j] = true;
                queue.push_back(j);
            }
        }
    }
    if !visited.iter().all(|&v| v) || colors.iter().any(|c| c.is_none()) {
        return Ok(Err(PropagationFailure::Disconnected));
    }
    let coloring = Coloring::new(colors.into_iter().map(Option::unwrap).collect());
    // A completed propagation can still violate properness when g is not
    // k-colorable; report the offending clique pair.
    for (u, v) in g.edges() {
        if coloring.colors[u] == coloring.colors[v] {
            let a = kc.cliques.iter().find(|c| c.contains(&u)).unwrap().clone();
            let b = kc.cliques.iter().find(|c| c.contains(&v)).unwrap().clone();
            return Ok(Err(PropagationFailure::Contradiction { clique_a: a, clique_b: b }));
        }
    }
    Ok(Ok(coloring))
}

/// Strip of t triangles glued edge-to-edge: vertices 0..t+2,
/// triangle i = {i, i+1, i+2}. Pure of dimension 2 with a path-shaped
/// clique graph; the canonical propagation fixture.
pub fn triangle_strip(t: usize) -> Graph {
    let n = t + 2;
    let mut g = Graph::with_indexed_labels("v", n);
    for i in 0..n - 1 {
        g.add_edge(i, i + 1).unwrap();
    }
    for i in 0..n - 2 {
        g.add_edge(i, i + 2).unwrap();
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kneser::build_kg;
    use crate::solve::chromatic_number;

    fn complete(n: usize) -> Graph {
        let mut g = Graph::with_indexed_labels("v", n);
        for u in 0..n {
            for v in (u + 1)..n {
                g.add_edge(u, v).unwrap();
            }
        }
        g
    }

    #[test]
    fn k4_clique_graph_is_one_vertex() {
        let kc = max_clique_graph(&complete(4), &mut Budget::default()).unwrap();
        assert_eq!(kc.cliques.len(), 1);
        assert!(kc.adjacency.is_empty());
    }

    #[test]
    fn shared_edge_triangles_are_adjacent() {
        let g = triangle_strip(2);
        let kc = max_clique_graph(&g, &mut Budget::default()).unwrap();
        assert_eq!(kc.cliques.len(), 2);
        assert_eq!(kc.adjacency, vec![(0, 1)]);
    }

    #[test]
    fn petersen_clique_graph_is_line_graph() {
        let g = build_kg(5, 2).unwrap();
        let kc = max_clique_graph(&g, &mut Budget::default()).unwrap();
        assert_eq!(kc.cliques.len(), 15);
        for &(i, j) in &kc.adjacency {
            let inter: Vec<_> =
                kc.cliques[i].iter().filter(|v| kc.cliques[j].contains(v)).collect();
            assert_eq!(inter.len(), 1);
        }
    }

    #[test]
    fn strip_propagation_matches_solver() {
        for t in 2..=10 {
            let g = triangle_strip(t);
            let mut b = Budget::default();
            let seed = vec![0, 1, 2];
            let prop = propagate_unique_coloring(&g, 3, &seed, &mut b).unwrap().unwrap();
            assert!(prop.is_proper(&g).unwrap());
            let (k, solved) = chromatic_number(&g, &mut b).unwrap();
            assert_eq!(k, 3);
            assert_eq!(prop.canonical_partition(), solved.canonical_partition());
        }
    }

    #[test]
    fn different_seeds_agree_up_to_bijection() {
        let g = triangle_strip(6);
        let mut b = Budget::default();
        let p1 = propagate_unique_coloring(&g, 3, &[0, 1, 2], &mut b).unwrap().unwrap();
        let p2 = propagate_unique_coloring(&g, 3, &[4, 5, 6], &mut b).unwrap().unwrap();
        assert_eq!(p1.canonical_partition(), p2.canonical_partition());
    }

    #[test]
    fn k4_trivially_succeeds() {
        let g = complete(4);
        let c = propagate_unique_coloring(&g, 4, &[0, 1, 2, 3], &mut Budget::default())
            .unwrap()
            .unwrap();
        assert_eq!(c.palette_size, 4);
    }

    #[test]
    fn petersen_k2_reports_contradiction() {
        let g = build_kg(5, 2).unwrap();
        let seed: Vec<usize> = {
            let (u, v) = g.edges().next().unwrap();
            vec![u, v]
        };
        let result = propagate_unique_coloring(&g, 2, &seed, &mut Budget::default()).unwrap();
        assert!(matches!(result, Err(PropagationFailure::Contradiction { .. })));
    }

    #[test]
    fn bad_seed_is_an_error() {
        let g = triangle_strip(3);
        assert!(propagate_unique_coloring(&g, 3, &[0, 1], &mut Budget::default()).is_err());
    }

    #[test]
    fn impure_complex_is_reported() {
        // Triangle with a pendant edge: maximal cliques of sizes 3 and 2.
        let mut g = Graph::with_indexed_labels("v", 4);
        g.add_edge(0, 1).unwrap();
        g.add_edge(1, 2).unwrap();
        g.add_edge(0, 2).unwrap();
        g.add_edge(2, 3).unwrap();
        let result = propagate_unique_coloring(&g, 3, &[0, 1, 2], &mut Budget::default()).unwrap();
        assert!(matches!(result, Err(PropagationFailure::Impure { .. })));
    }
}
