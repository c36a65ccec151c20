//! Exact search kernels: chromatic number, clique number, and maximal
//! independent set enumeration. All searches are deterministic and take an
//! explicit node budget; exhausting it is a loud failure, never a wrong
//! answer.

use thiserror::Error;

use crate::graph::{Coloring, Graph};

pub const DEFAULT_BUDGET: u64 = 100_000_000;

#[derive(Debug, Error)]
pub enum SearchError {
    #[error("search budget exhausted after {0} nodes")]
    BudgetExhausted(u64),
}

/// Branch-node counter shared by the exact solvers.
#[derive(Debug, Clone)]
pub struct Budget {
    limit: u64,
    used: u64,
}

impl Budget {
    pub fn new(limit: u64) -> Self {
        Budget { limit, used: 0 }
    }

    pub fn tick(&mut self) -> Result<(), SearchError> {
        self.used += 1;
        if self.used > self.limit {
            Err(SearchError::BudgetExhausted(self.used))
        } else {
            Ok(())
        }
    }

    pub fn used(&self) -> u64 {
        self.used
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::new(DEFAULT_BUDGET)
    }
}

/// Greedy clique grown by vertex index; deterministic lower bound seed.
fn greedy_clique(g: &Graph) -> Vec<usize> {
    let mut best = Vec::new();
    for start in 0..g.n() {
        let mut clique = vec![start];
        for v in 0..g.n() {
            if v != start && clique.iter().all(|&u| g.has_edge(u, v)) {
                clique.push(v);
            }
        }
        if clique.len() > best.len() {
            best = clique;
        }
    }
    best
}

struct DsaturState<'a> {
    g: &'a Graph,
    colors: Vec<Option<usize>>,
    best: Option<Vec<usize>>,
    best_k: usize,
    lower: usize,
    budget: &'a mut Budget,
}

impl DsaturState<'_> {
    fn saturation(&self, v: usize) -> usize {
        let mut seen = std::collections::HashSet::new();
        for u in self.g.neighbors(v) {
            if let Some(c) = self.colors[u] {
                seen.insert(c);
            }
        }
        seen.len()
    }

    /// Uncolored vertex of max saturation, ties by degree then index.
    fn pick(&self) -> Option<usize> {
        let mut best: Option<(usize, usize, usize)> = None;
        for v in 0..self.g.n() {
            if self.colors[v].is_some() {
                continue;
            }
            let key = (self.saturation(v), self.g.degree(v), usize::MAX - v);
            if best.map_or(true, |(s, d, i)| key > (s, d, i)) {
                best = Some(key);
            }
        }
        best.map(|(_, _, i)| usize::MAX - i)
    }

    fn solve(&mut self, used: usize) -> Result<(), SearchError> {
        self.budget.tick()?;
        if used >= self.best_k {
            return Ok(());
        }
        let Some(v) = self.pick() else {
            // Complete coloring with `used` colors.
            self.best_k = used;
            self.best = Some(self.colors.iter().map(|c| c.unwrap()).collect());
            return Ok(());
        };
        let mut forbidden = vec![false; used + 1];
        for u in self.g.neighbors(v) {
            if let Some(c) = self.colors[u] {
                if c <= used {
                    forbidden[c] = true;
                }
            }
        }
        let cap = (used + 1).min(self.best_k - 1);
        for c in 1..=cap {
            if c <= used && forbidden[c] {
                continue;
            }
            if c > used && c > cap {
                break;
            }
            self.colors[v] = Some(c);
            self.solve(used.max(c))?;
            self.colors[v] = None;
            if self.best_k == self.lower {
                return Ok(());
            }
        }
        Ok(())
    }
}

/// Exact chromatic number with a proper witness using exactly that many
/// colors. Branch and bound with DSATUR vertex ordering, seeded by a greedy
/// clique; deterministic for a fixed graph presentation.
pub fn chromatic_number(g: &Graph, budget: &mut Budget) -> Result<(usize, Coloring), SearchError> {
    if g.n() == 0 {
        return Ok((0, Coloring::new(vec![])));
    }
    if g.edge_count() == 0 {
        return Ok((1, Coloring::new(vec![0; g.n()])));
    }
    let clique = greedy_clique(g);
    let lower = clique.len();
    let mut state = DsaturState {
        g,
        colors: vec![None; g.n()],
        best: None,
        best_k: g.n() + 1,
        lower,
        budget,
    };
    // Seed: fix colors 1..=|clique| on the greedy clique to break symmetry.
    for (i, &v) in clique.iter().enumerate() {
        state.colors[v] = Some(i + 1);
    }
    state.solve(lower)?;
    let witness = state.best.expect("n+1 colors always suffice");
    let coloring = Coloring::new(witness.iter().map(|c| c - 1).collect());
    debug_assert!(coloring.is_proper(g).unwrap());
    debug_assert_eq!(coloring.palette_size, state.best_k);
    Ok((state.best_k, coloring))
}

fn max_clique_rec(
    g: &Graph,
    current: &mut Vec<usize>,
    candidates: &[usize],
    best: &mut Vec<usize>,
    budget: &mut Budget,
) -> Result<(), SearchError> {
    budget.tick()?;
    if current.len() > best.len() {
        *best = current.clone();
    }
    // Greedy-coloring upper bound on the candidate set.
    let mut color_of = vec![0usize; candidates.len()];
    let mut ncolors = 0;
    for (i, &v) in candidates.iter().enumerate() {
        let mut c = 1;
        loop {
            if candidates[..i]
                .iter()
                .enumerate()
                .all(|(j, &u)| color_of[j] != c || !g.has_edge(u, v))
            {
                break;
            }
            c += 1;
        }
        color_of[i] = c;
        ncolors = ncolors.max(c);
    }
    if current.len() + ncolors <= best.len() {
        return Ok(());
    }
    // Branch from high color to low.
    let mut order: Vec<usize> = (0..candidates.len()).collect();
    order.sort_by_key(|&i| (color_of[i], candidates[i]));
    for &i in order.iter().rev() {
        if current.len() + color_of[i] <= best.len() {
            break;
        }
        let v = candidates[i];
        current.push(v);
        let next: Vec<usize> = candidates[..i]
            .iter()
            .copied()
            .filter(|&u| g.has_edge(u, v))
            .collect();
        max_clique_rec(g, current, &next, best, budget)?;
        current.pop();
    }
    Ok(())
}

/// Exact maximum clique size with a witness vertex set.
pub fn clique_number(g: &Graph, budget: &mut Budget) -> Result<(usize, Vec<usize>), SearchError> {
    if g.n() == 0 {
        return Ok((0, vec![]));
    }
    let mut best = greedy_clique(g);
    let candidates: Vec<usize> = (0..g.n()).collect();
    max_clique_rec(g, &mut Vec::new(), &candidates, &mut best, budget)?;
    best.sort_unstable();
    debug_assert!(best.iter().all(|&u| best.iter().all(|&v| u == v || g.has_edge(u, v))));
    Ok((best.len(), best))
}

fn bron_kerbosch(
    g: &Graph,
    r: &mut Vec<usize>,
    p: Vec<usize>,
    x: Vec<usize>,
    out: &mut Vec<Vec<usize>>,
    budget: &mut Budget,
) -> Result<(), SearchError> {
    budget.tick()?;
    if p.is_empty() && x.is_empty() {
        let mut clique = r.clone();
        clique.sort_unstable();
        out.push(clique);
        return Ok(());
    }
    // Pivot: vertex of P ∪ X with most neighbors in P.
    let pivot = p
        .iter()
        .chain(x.iter())
        .copied()
        .max_by_key(|&u| (p.iter().filter(|&&v| g.has_edge(u, v)).count(), usize::MAX - u))
        .unwrap();
    let branch: Vec<usize> = p.iter().copied().filter(|&v| !g.has_edge(pivot, v)).collect();
    let mut p = p;
    let mut x = x;
    for v in branch {
        r.push(v);
        let p2: Vec<usize> = p.iter().copied().filter(|&u| g.has_edge(u, v)).collect();
        let x2: Vec<usize> = x.iter().copied().filter(|&u| g.has_edge(u, v)).collect();
        bron_kerbosch(g, r, p2, x2, out, budget)?;
        r.pop();
        p.retain(|&u| u != v);
        x.push(v);
    }
    Ok(())
}

/// All maximal cliques, each sorted, in deterministic order.
pub fn maximal_cliques(g: &Graph, budget: &mut Budget) -> Result<Vec<Vec<usize>>, SearchError> {
    let mut out = Vec::new();
    bron_kerbosch(g, &mut Vec::new(), (0..g.n()).collect(), Vec::new(), &mut out, budget)?;
    out.sort();
    Ok(out)
}

/// Complete, duplicate-free enumeration of maximal independent sets
/// (Bron-Kerbosch on the complement).
pub fn maximal_independent_sets(g: &Graph, budget: &mut Budget) -> Result<Vec<Vec<usize>>, SearchError> {
    maximal_cliques(&g.complement(), budget)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    pub(crate) fn petersen() -> Graph {
        // Vertices = 2-subsets of {1..5}, edges = disjointness.
        crate::kneser::build_kg(5, 2).unwrap()
    }

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
    fn chromatic_small_cases() {
        let mut b = Budget::default();
        let edgeless = Graph::with_indexed_labels("v", 5);
        assert_eq!(chromatic_number(&edgeless, &mut b).unwrap().0, 1);
        let (k, w) = chromatic_number(&petersen(), &mut b).unwrap();
        assert_eq!(k, 3);
        assert!(w.is_proper(&petersen()).unwrap());
        assert_eq!(w.palette_size, 3);
        assert_eq!(chromatic_number(&complete(6), &mut b).unwrap().0, 6);
        let empty = Graph::new(vec![]).unwrap();
        assert_eq!(chromatic_number(&empty, &mut b).unwrap().0, 0);
    }

    #[test]
    fn chromatic_is_deterministic() {
        let g = petersen();
        let w1 = chromatic_number(&g, &mut Budget::default()).unwrap().1;
        let w2 = chromatic_number(&g, &mut Budget::default()).unwrap().1;
        assert_eq!(w1, w2);
    }

    #[test]
    fn clique_small_cases() {
        let mut b = Budget::default();
        assert_eq!(clique_number(&petersen(), &mut b).unwrap().0, 2);
        let (k, witness) = clique_number(&complete(6), &mut b).unwrap();
        assert_eq!((k, witness.len()), (6, 6));
    }

    #[test]
    fn budget_exhaustion_is_loud() {
        let mut b = Budget::new(3);
        assert!(matches!(
            chromatic_number(&petersen(), &mut b),
            Err(SearchError::BudgetExhausted(_))
        ));
    }

    #[test]
    fn mis_triangle_is_singletons() {
        let sets = maximal_independent_sets(&complete(3), &mut Budget::default()).unwrap();
        assert_eq!(sets, vec![vec![0], vec![1], vec![2]]);
    }

    #[test]
    fn mis_petersen_maximum_is_four() {
        // Oracle: brute force over all subsets.
        let g = petersen();
        let mut brute_max = 0;
        let mut brute_count = 0;
        for mask in 0u32..(1 << g.n()) {
            let verts: Vec<usize> = (0..g.n()).filter(|&v| mask >> v & 1 == 1).collect();
            let independent = verts
                .iter()
                .all(|&u| verts.iter().all(|&v| u == v || !g.has_edge(u, v)));
            if independent && verts.len() >= brute_max {
                if verts.len() > brute_max {
                    brute_max = verts.len();
                    brute_count = 0;
                }
                brute_count += 1;
            }
        }
        assert_eq!((brute_max, brute_count), (4, 5));
        let sets = maximal_independent_sets(&g, &mut Budget::default()).unwrap();
        assert_eq!(sets.iter().map(|s| s.len()).max().unwrap(), 4);
        assert_eq!(sets.iter().filter(|s| s.len() == 4).count(), 5);
        // Every returned set is independent and maximal; union covers all vertices.
        let mut covered = vec![false; g.n()];
        for s in &sets {
            for &u in s {
                covered[u] = true;
                for &v in s {
                    assert!(u == v || !g.has_edge(u, v));
                }
            }
            for v in 0..g.n() {
                if !s.contains(&v) {
                    assert!(s.iter().any(|&u| g.has_edge(u, v)), "set {s:?} not maximal");
                }
            }
        }
        assert!(covered.iter().all(|&c| c));
    }
}
