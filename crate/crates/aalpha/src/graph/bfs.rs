//! BFS-orderings: verification of the three defining conditions and a
//! backtracking search for one.
//!
//! A BFS-ordering is a total vertex order, rooted at its first vertex, that
//! is monotone in height, antitone in degree, and consistent on cross edges
//! between consecutive layers: whenever `uv` and `xy` are edges from layer t
//! to layer t+1 with `uy` and `xv` non-edges, `u` before `x` forces `v`
//! before `y`.

use super::{bfs_heights, SimpleGraph};
use crate::error::{Error, Result};

/// Bound on the backtracking search for an ordering.
pub const BFS_SEARCH_MAX_VERTICES: usize = 12;

/// A rooted vertex ordering together with the heights it was checked against.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BfsOrdering {
    pub order: Vec<usize>,
    pub root: usize,
    pub heights: Vec<usize>,
}

/// Checks the three BFS-ordering conditions for `ord` on a connected graph.
/// Returns false on any violation, including inconsistent heights or a
/// non-permutation order.
pub fn check_bfs_ordering(g: &SimpleGraph, ord: &BfsOrdering) -> bool {
    let n = g.vertex_count();
    if ord.order.len() != n || n == 0 {
        return false;
    }
    let mut seen = vec![false; n];
    for &v in &ord.order {
        if v >= n || seen[v] {
            return false;
        }
        seen[v] = true;
    }
    if ord.order[0] != ord.root {
        return false;
    }
    let heights = match bfs_heights(g, ord.root) {
        Ok(h) => h,
        Err(_) => return false,
    };
    if heights != ord.heights {
        return false;
    }
    let mut pos = vec![0usize; n];
    for (i, &v) in ord.order.iter().enumerate() {
        pos[v] = i;
    }
    // (1) heights nondecreasing and (2) degrees nonincreasing along the order
    for w in ord.order.windows(2) {
        if heights[w[0]] > heights[w[1]] || g.degree(w[0]) < g.degree(w[1]) {
            return false;
        }
    }
    // (3) cross-edge condition between consecutive layers
    cross_edge_condition_holds(g, &heights, &pos)
}

fn cross_edge_condition_holds(g: &SimpleGraph, heights: &[usize], pos: &[usize]) -> bool {
    let n = g.vertex_count();
    let mut down_edges: Vec<(usize, usize)> = Vec::new();
    for u in 0..n {
        for v in g.neighbors(u) {
            if heights[v] == heights[u] + 1 {
                down_edges.push((u, v));
            }
        }
    }
    for &(u, v) in &down_edges {
        for &(x, y) in &down_edges {
            if heights[u] != heights[x] || v == y || u == x {
                continue;
            }
            if g.has_edge(u, y) || g.has_edge(x, v) {
                continue;
            }
            if pos[u] < pos[x] && pos[v] >= pos[y] {
                return false;
            }
        }
    }
    true
}

/// Searches for a BFS-ordering of a connected graph, rooting at each
/// maximum-degree vertex and backtracking over within-layer orders.
/// Returns `Ok(None)` when the search space is exhausted.
pub fn find_bfs_ordering(g: &SimpleGraph) -> Result<Option<BfsOrdering>> {
    find_bfs_ordering_constrained(g, None)
}

/// Like [`find_bfs_ordering`] but requires the order to be nonincreasing in
/// `weights` (up to `tie_tol`), so the result is consistent with a Perron
/// vector when one is supplied.
pub fn find_bfs_ordering_consistent_with(
    g: &SimpleGraph,
    weights: &[f64],
    tie_tol: f64,
) -> Result<Option<BfsOrdering>> {
    find_bfs_ordering_constrained(g, Some((weights, tie_tol)))
}

fn find_bfs_ordering_constrained(
    g: &SimpleGraph,
    weights: Option<(&[f64], f64)>,
) -> Result<Option<BfsOrdering>> {
    let n = g.vertex_count();
    if n == 0 {
        return Ok(None);
    }
    if n > BFS_SEARCH_MAX_VERTICES {
        return Err(Error::TooLarge(n, BFS_SEARCH_MAX_VERTICES));
    }
    if !g.is_connected() {
        return Ok(None);
    }
    let max_deg = g.max_degree();
    for root in 0..n {
        if g.degree(root) != max_deg {
            continue;
        }
        let heights = bfs_heights(g, root)?;
        let depth = heights.iter().copied().max().unwrap_or(0);
        let mut layers: Vec<Vec<usize>> = vec![Vec::new(); depth + 1];
        for v in 0..n {
            layers[heights[v]].push(v);
        }
        let mut search = Search {
            g,
            heights: &heights,
            layers: &layers,
            weights,
            order: vec![root],
        };
        if search.solve_layer(1) {
            return Ok(Some(BfsOrdering {
                order: search.order,
                root,
                heights,
            }));
        }
    }
    Ok(None)
}

struct Search<'a> {
    g: &'a SimpleGraph,
    heights: &'a [usize],
    layers: &'a [Vec<usize>],
    weights: Option<(&'a [f64], f64)>,
    order: Vec<usize>,
}

impl Search<'_> {
    /// Enumerates valid orders of layer `layer_idx` and recurses; the orders
    /// of all earlier layers are fixed in `self.order`.
    fn solve_layer(&mut self, layer_idx: usize) -> bool {
        if layer_idx == self.layers.len() {
            return true;
        }
        let layer = self.layers[layer_idx].clone();
        let must_precede = self.precedence_constraints(layer_idx, &layer);
        let mut used = vec![false; layer.len()];
        let layer_start = self.order.len();
        self.place(layer_idx, &layer, &must_precede, &mut used, layer_start)
    }

    /// Precedence pairs `(a, b)` on the current layer forced by the
    /// cross-edge condition and the fixed order of the previous layer.
    fn precedence_constraints(&self, layer_idx: usize, layer: &[usize]) -> Vec<(usize, usize)> {
        let mut pos = vec![usize::MAX; self.g.vertex_count()];
        for (i, &v) in self.order.iter().enumerate() {
            pos[v] = i;
        }
        let mut pairs = Vec::new();
        for &v in layer {
            for &y in layer {
                if v == y {
                    continue;
                }
                'found: for u in self.g.neighbors(v) {
                    if self.heights[u] + 1 != layer_idx || self.g.has_edge(u, y) {
                        continue;
                    }
                    for x in self.g.neighbors(y) {
                        if self.heights[x] + 1 != layer_idx || self.g.has_edge(x, v) {
                            continue;
                        }
                        if pos[u] < pos[x] {
                            pairs.push((v, y));
                            break 'found;
                        }
                    }
                }
            }
        }
        pairs
    }

    fn place(
        &mut self,
        layer_idx: usize,
        layer: &[usize],
        must_precede: &[(usize, usize)],
        used: &mut Vec<bool>,
        layer_start: usize,
    ) -> bool {
        if self.order.len() - layer_start == layer.len() {
            return self.solve_layer(layer_idx + 1);
        }
        // to keep degrees nonincreasing the next pick must have maximal
        // degree among the unplaced vertices of the layer
        let best_deg = layer
            .iter()
            .enumerate()
            .filter(|(i, _)| !used[*i])
            .map(|(_, &v)| self.g.degree(v))
            .max()
            .expect("unplaced vertex exists");
        let prev = *self.order.last().expect("order nonempty");
        if best_deg > self.g.degree(prev) {
            return false;
        }
        let best_weight = self.weights.map(|(w, _)| {
            layer
                .iter()
                .enumerate()
                .filter(|(i, _)| !used[*i])
                .map(|(_, &v)| w[v])
                .fold(f64::NEG_INFINITY, f64::max)
        });
        for i in 0..layer.len() {
            if used[i] {
                continue;
            }
            let v = layer[i];
            if self.g.degree(v) != best_deg {
                continue;
            }
            if let (Some((w, tol)), Some(bw)) = (self.weights, best_weight) {
                if w[v] < bw - tol || w[v] > w[prev] + tol {
                    continue;
                }
            }
            if must_precede
                .iter()
                .any(|&(a, b)| b == v && !self.order[layer_start..].contains(&a))
            {
                continue;
            }
            used[i] = true;
            self.order.push(v);
            if self.place(layer_idx, layer, must_precede, used, layer_start) {
                return true;
            }
            self.order.pop();
            used[i] = false;
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{path_graph, star_graph, SimpleGraph};

    #[test]
    fn p3_center_first_is_valid() {
        let g = path_graph(3);
        let ord = BfsOrdering {
            order: vec![1, 0, 2],
            root: 1,
            heights: vec![1, 0, 1],
        };
        assert!(check_bfs_ordering(&g, &ord));
    }

    #[test]
    fn p3_end_first_fails_degree_condition() {
        let g = path_graph(3);
        let ord = BfsOrdering {
            order: vec![0, 1, 2],
            root: 0,
            heights: vec![0, 1, 2],
        };
        assert!(!check_bfs_ordering(&g, &ord));
    }

    #[test]
    fn paths_have_bfs_orderings() {
        for n in 2..=9 {
            let g = path_graph(n);
            let found = find_bfs_ordering(&g).unwrap();
            let ord = found.expect("path admits a BFS-ordering");
            assert!(check_bfs_ordering(&g, &ord));
            // the root must be an inner vertex for n >= 3
            if n >= 3 {
                assert_eq!(g.degree(ord.root), 2);
            }
        }
    }

    #[test]
    fn star_has_bfs_ordering() {
        let g = star_graph(5);
        let ord = find_bfs_ordering(&g).unwrap().unwrap();
        assert_eq!(ord.root, 0);
        assert!(check_bfs_ordering(&g, &ord));
    }

    /// Two cherries whose hubs are joined by a 2-edge path: the far hub sits
    /// two layers down with degree 3 behind degree-1 leaves, so no ordering
    /// can keep degrees nonincreasing. Regression value for the search.
    #[test]
    fn double_cherry_with_middle_vertex_has_no_ordering() {
        let g = SimpleGraph::from_edge_list(7, &[(0, 1), (0, 2), (0, 3), (3, 4), (4, 5), (4, 6)])
            .unwrap();
        assert!(find_bfs_ordering(&g).unwrap().is_none());
    }

    /// Adjacent hubs (double star) do admit one.
    #[test]
    fn double_star_has_ordering() {
        let g = SimpleGraph::from_edge_list(6, &[(0, 1), (0, 2), (0, 3), (3, 4), (3, 5)]).unwrap();
        let ord = find_bfs_ordering(&g)
            .unwrap()
            .expect("double star is BFS-orderable");
        assert!(check_bfs_ordering(&g, &ord));
    }

    #[test]
    fn search_bound_is_enforced() {
        let g = path_graph(13);
        assert!(find_bfs_ordering(&g).is_err());
    }

    #[test]
    fn disconnected_graph_has_none() {
        let g = SimpleGraph::from_edge_list(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(find_bfs_ordering(&g).unwrap().is_none());
    }
}
