//! Labeled simple undirected graphs, degree sequences, BFS machinery,
//! canonical forms and internal-path detection.

mod bfs;
mod canon;

pub use bfs::{
    check_bfs_ordering, find_bfs_ordering, find_bfs_ordering_consistent_with, BfsOrdering,
};
pub use canon::{automorphism_count, canonical_form, CanonicalForm, CANONICAL_MAX_VERTICES};

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// Labeled simple undirected graph on vertices `0..n`.
///
/// Adjacency is kept as per-vertex sorted neighbor sets; no self-loops or
/// parallel edges can be represented. Values are immutable through the
/// public API: every operation that changes a graph returns a new one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    n: usize,
    adj: Vec<BTreeSet<usize>>,
}

impl SimpleGraph {
    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Self {
        SimpleGraph {
            n,
            adj: vec![BTreeSet::new(); n],
        }
    }

    /// Builds a graph from an edge list. Duplicate edges collapse; self-loops
    /// and out-of-range endpoints are rejected with the offending pair.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = SimpleGraph::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        if u >= self.n || v >= self.n {
            return Err(Error::EdgeOutOfRange(u, v, self.n));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    pub(crate) fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u].remove(&v);
        self.adj[v].remove(&u);
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Degrees indexed by vertex label.
    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(|s| s.len()).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(|s| s.len()).max().unwrap_or(0)
    }

    pub fn is_regular(&self) -> bool {
        self.n == 0 || self.adj.iter().all(|s| s.len() == self.adj[0].len())
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(&v)
    }

    /// Sorted neighbors of `v`.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().copied()
    }

    pub fn neighbor_set(&self, v: usize) -> &BTreeSet<usize> {
        &self.adj[v]
    }

    /// Edge view, each edge once as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Breadth-first distances from `root`; `usize::MAX` marks unreachable.
    fn bfs_distances(&self, root: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n];
        let mut queue = std::collections::VecDeque::new();
        dist[root] = 0;
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            for &v in &self.adj[u] {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return false;
        }
        self.bfs_distances(0).iter().all(|&d| d != usize::MAX)
    }

    /// Copy of the graph with vertex `v` renamed to `perm[v]`.
    pub fn relabeled(&self, perm: &[usize]) -> Self {
        let mut g = SimpleGraph::empty(self.n);
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v])
                .expect("permutation preserves simplicity");
        }
        g
    }

    /// Same graph plus one edge; errors on self-loops or bad labels.
    pub fn adding_edge(&self, u: usize, v: usize) -> Result<Self> {
        let mut g = self.clone();
        g.add_edge(u, v)?;
        Ok(g)
    }
}

/// Connectivity classification of a graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Classification {
    pub connected: bool,
    pub is_tree: bool,
    pub is_unicyclic: bool,
}

/// Reports connectivity and whether the graph is a tree (`|E| = n-1`) or
/// unicyclic (`|E| = n`).
pub fn classify(g: &SimpleGraph) -> Classification {
    let connected = g.is_connected();
    let m = g.edge_count();
    let n = g.vertex_count();
    Classification {
        connected,
        is_tree: connected && n >= 1 && m == n - 1,
        is_unicyclic: connected && m == n,
    }
}

/// Distance of every vertex to `root`. Errors on a disconnected input,
/// naming an unreachable vertex.
pub fn bfs_heights(g: &SimpleGraph, root: usize) -> Result<Vec<usize>> {
    if root >= g.vertex_count() {
        return Err(Error::VertexOutOfRange(root, g.vertex_count()));
    }
    let dist = g.bfs_distances(root);
    if let Some(v) = dist.iter().position(|&d| d == usize::MAX) {
        return Err(Error::Disconnected(v, root));
    }
    Ok(dist)
}

/// Class tag carried by a degree sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum SequenceClass {
    Tree,
    Unicyclic,
    General,
}

impl fmt::Display for SequenceClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SequenceClass::Tree => write!(f, "tree"),
            SequenceClass::Unicyclic => write!(f, "unicyclic"),
            SequenceClass::General => write!(f, "general"),
        }
    }
}

/// Nonincreasing degree sequence with a class tag.
///
/// Construction normalizes the order; arithmetic feasibility for the class
/// is checked separately by [`DegreeSequence::validate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeSequence {
    degrees: Vec<usize>,
    class: SequenceClass,
}

/// Structured verdict of a degree-sequence validity check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Validity {
    pub valid: bool,
    pub reason: Option<String>,
}

impl Validity {
    fn ok() -> Self {
        Validity {
            valid: true,
            reason: None,
        }
    }
    fn bad(reason: impl Into<String>) -> Self {
        Validity {
            valid: false,
            reason: Some(reason.into()),
        }
    }
}

impl DegreeSequence {
    /// Sorts `degrees` nonincreasing and tags them. Empty input is rejected.
    pub fn new(mut degrees: Vec<usize>, class: SequenceClass) -> Result<Self> {
        if degrees.is_empty() {
            return Err(Error::InvalidSequence("sequence is empty".into()));
        }
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        Ok(DegreeSequence { degrees, class })
    }

    /// Parses a comma-separated literal such as `"3,2,2,1,1,1"`.
    pub fn parse(text: &str, class: SequenceClass) -> Result<Self> {
        let degrees = text
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidSequence(format!("bad entry {tok:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        DegreeSequence::new(degrees, class)
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn class(&self) -> SequenceClass {
        self.class
    }

    pub fn n(&self) -> usize {
        self.degrees.len()
    }

    pub fn sum(&self) -> usize {
        self.degrees.iter().sum()
    }

    /// Same degrees under a different class tag.
    pub fn with_class(&self, class: SequenceClass) -> Self {
        DegreeSequence {
            degrees: self.degrees.clone(),
            class,
        }
    }

    /// Checks realizability for the tagged class.
    ///
    /// Tree: sum 2(n-1), n >= 2. Unicyclic: sum 2n, n >= 3, d_0 <= n-1, and
    /// at least three entries >= 2 (a cycle needs three vertices of degree
    /// two or more). General: even sum plus the Erdos-Gallai inequalities.
    pub fn validate(&self) -> Validity {
        let n = self.n();
        let d = &self.degrees;
        if d.contains(&0) {
            return Validity::bad("entry of degree 0 (isolated vertex)");
        }
        let sum = self.sum();
        match self.class {
            SequenceClass::Tree => {
                if n < 2 {
                    Validity::bad("tree sequence needs n >= 2")
                } else if sum != 2 * (n - 1) {
                    Validity::bad(format!("degree sum {sum} != 2(n-1) = {}", 2 * (n - 1)))
                } else {
                    Validity::ok()
                }
            }
            SequenceClass::Unicyclic => {
                if n < 3 {
                    Validity::bad("unicyclic sequence needs n >= 3")
                } else if sum != 2 * n {
                    Validity::bad(format!("degree sum {sum} != 2n = {}", 2 * n))
                } else if d[0] > n - 1 {
                    Validity::bad(format!("d_0 = {} exceeds n-1 = {}", d[0], n - 1))
                } else if d[2] < 2 {
                    Validity::bad("fewer than three entries >= 2; no cycle can be realized")
                } else {
                    Validity::ok()
                }
            }
            SequenceClass::General => {
                if !sum.is_multiple_of(2) {
                    Validity::bad(format!("degree sum {sum} is odd"))
                } else if !erdos_gallai(d) {
                    Validity::bad("Erdos-Gallai inequality violated; not graphic")
                } else {
                    Validity::ok()
                }
            }
        }
    }
}

impl fmt::Display for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.degrees.iter().map(|d| d.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// Erdos-Gallai test for a nonincreasing positive sequence with even sum.
fn erdos_gallai(d: &[usize]) -> bool {
    let n = d.len();
    for k in 1..=n {
        let lhs: usize = d[..k].iter().sum();
        let rhs: usize = k * (k - 1) + d[k..].iter().map(|&x| x.min(k)).sum::<usize>();
        if lhs > rhs {
            return false;
        }
    }
    true
}

/// Degree sequence of a graph, nonincreasing, with the class inferred from
/// connectivity and edge count. Isolated vertices surface as zero entries
/// and force class `General` (the graph is disconnected).
pub fn degree_sequence(g: &SimpleGraph) -> DegreeSequence {
    let mut degrees = g.degrees();
    degrees.sort_unstable_by(|a, b| b.cmp(a));
    let c = classify(g);
    let class = if c.is_tree {
        SequenceClass::Tree
    } else if c.is_unicyclic {
        SequenceClass::Unicyclic
    } else {
        SequenceClass::General
    };
    DegreeSequence { degrees, class }
}

/// All maximal internal paths of a connected graph: vertex paths
/// `v_1..v_k` whose endpoints have degree >= 3 and whose interior vertices
/// have degree exactly 2. A closed walk around the cycle through a single
/// branch vertex is reported with `v_1 = v_k`.
pub fn list_internal_paths(g: &SimpleGraph) -> Vec<Vec<usize>> {
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    for b in 0..g.vertex_count() {
        if g.degree(b) < 3 {
            continue;
        }
        for start in g.neighbors(b) {
            let mut path = vec![b, start];
            let (mut prev, mut cur) = (b, start);
            while g.degree(cur) == 2 {
                let next = g
                    .neighbors(cur)
                    .find(|&w| w != prev)
                    .expect("degree-2 vertex has a second neighbor");
                path.push(next);
                prev = cur;
                cur = next;
            }
            if g.degree(cur) >= 3 {
                seen.insert(normalize_path(path));
            }
        }
    }
    seen.into_iter().collect()
}

/// Orientation-normalized copy of a path so each internal path is listed once.
fn normalize_path(mut path: Vec<usize>) -> Vec<usize> {
    let k = path.len();
    let forward = match path[0].cmp(&path[k - 1]) {
        std::cmp::Ordering::Less => true,
        std::cmp::Ordering::Greater => false,
        // closed walk: orient by the second vertex from each end
        std::cmp::Ordering::Equal => path[1] <= path[k - 2],
    };
    if !forward {
        path.reverse();
    }
    path
}

/// Parses the edge-list text format: first line `n m`, then `m` lines `u v`.
pub fn parse_edge_list(text: &str) -> Result<SimpleGraph> {
    let mut tokens = text.split_whitespace();
    let mut next_num = |what: &str| -> Result<usize> {
        tokens
            .next()
            .ok_or_else(|| Error::ParseEdgeList(format!("missing {what}")))?
            .parse::<usize>()
            .map_err(|_| Error::ParseEdgeList(format!("bad {what}")))
    };
    let n = next_num("vertex count")?;
    let m = next_num("edge count")?;
    let mut edges = Vec::with_capacity(m);
    for i in 0..m {
        let u = next_num(&format!("edge {i} endpoint"))?;
        let v = next_num(&format!("edge {i} endpoint"))?;
        edges.push((u, v));
    }
    if tokens.next().is_some() {
        return Err(Error::ParseEdgeList(
            "trailing tokens after edge list".into(),
        ));
    }
    SimpleGraph::from_edge_list(n, &edges)
}

/// Renders the edge-list text format emitted by the builders and the CLI.
pub fn format_edge_list(g: &SimpleGraph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.vertex_count(), edges.len());
    for (u, v) in edges {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Path graph on `n` vertices, labeled along the path.
pub fn path_graph(n: usize) -> SimpleGraph {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    SimpleGraph::from_edge_list(n, &edges).expect("path edges are valid")
}

/// Cycle graph on `n >= 3` vertices, labeled around the cycle.
pub fn cycle_graph(n: usize) -> SimpleGraph {
    assert!(n >= 3, "cycle needs at least 3 vertices");
    let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    edges.push((n - 1, 0));
    SimpleGraph::from_edge_list(n, &edges).expect("cycle edges are valid")
}

/// Star `K_{1,k}` with center 0.
pub fn star_graph(k: usize) -> SimpleGraph {
    let edges: Vec<_> = (1..=k).map(|i| (0, i)).collect();
    SimpleGraph::from_edge_list(k + 1, &edges).expect("star edges are valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn from_edge_list_builds_triangle() {
        let g = SimpleGraph::from_edge_list(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.degrees(), vec![2, 2, 2]);
    }

    #[test]
    fn from_edge_list_builds_k2() {
        let g = SimpleGraph::from_edge_list(2, &[(0, 1)]).unwrap();
        assert_eq!(g.edges(), vec![(0, 1)]);
    }

    #[test]
    fn from_edge_list_rejects_self_loop() {
        let err = SimpleGraph::from_edge_list(4, &[(0, 0)]).unwrap_err();
        assert!(matches!(err, Error::SelfLoop(0)));
    }

    #[test]
    fn from_edge_list_rejects_out_of_range() {
        let err = SimpleGraph::from_edge_list(2, &[(0, 5)]).unwrap_err();
        assert!(matches!(err, Error::EdgeOutOfRange(0, 5, 2)));
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = SimpleGraph::from_edge_list(2, &[(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn degree_sequence_of_c4_is_unicyclic() {
        let pi = degree_sequence(&cycle_graph(4));
        assert_eq!(pi.degrees(), &[2, 2, 2, 2]);
        assert_eq!(pi.class(), SequenceClass::Unicyclic);
    }

    #[test]
    fn degree_sequence_of_star_is_tree() {
        let pi = degree_sequence(&star_graph(3));
        assert_eq!(pi.degrees(), &[3, 1, 1, 1]);
        assert_eq!(pi.class(), SequenceClass::Tree);
    }

    #[test]
    fn degree_sequence_of_p5_is_tree() {
        let pi = degree_sequence(&path_graph(5));
        assert_eq!(pi.degrees(), &[2, 2, 2, 1, 1]);
        assert_eq!(pi.class(), SequenceClass::Tree);
    }

    #[test]
    fn isolated_vertex_forces_general_class() {
        let g = SimpleGraph::from_edge_list(3, &[(0, 1)]).unwrap();
        let pi = degree_sequence(&g);
        assert_eq!(pi.class(), SequenceClass::General);
        assert_eq!(pi.degrees(), &[1, 1, 0]);
        assert!(!pi.validate().valid);
    }

    #[test]
    fn classify_path_cycle_disjoint() {
        assert_eq!(
            classify(&path_graph(4)),
            Classification {
                connected: true,
                is_tree: true,
                is_unicyclic: false
            }
        );
        assert_eq!(
            classify(&cycle_graph(5)),
            Classification {
                connected: true,
                is_tree: false,
                is_unicyclic: true
            }
        );
        let two_edges = SimpleGraph::from_edge_list(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(
            classify(&two_edges),
            Classification {
                connected: false,
                is_tree: false,
                is_unicyclic: false
            }
        );
    }

    #[test]
    fn validate_tree_sequence() {
        let pi = DegreeSequence::new(vec![3, 2, 2, 1, 1, 1], SequenceClass::Tree).unwrap();
        assert!(pi.validate().valid);
    }

    #[test]
    fn validate_unicyclic_sequence() {
        let pi = DegreeSequence::new(vec![3, 3, 2, 2, 1, 1], SequenceClass::Unicyclic).unwrap();
        assert!(pi.validate().valid);
    }

    #[test]
    fn validate_rejects_nonsimple_unicyclic() {
        let pi = DegreeSequence::new(vec![4, 1, 1], SequenceClass::Unicyclic).unwrap();
        let v = pi.validate();
        assert!(!v.valid);
        assert!(v.reason.unwrap().contains("d_0"));
    }

    #[test]
    fn validate_rejects_two_hub_unicyclic() {
        // Sum is 2n and d_0 <= n-1, yet only two vertices can sit on a cycle.
        let pi = DegreeSequence::new(vec![4, 4, 1, 1, 1, 1], SequenceClass::Unicyclic).unwrap();
        let v = pi.validate();
        assert!(!v.valid);
        assert!(v.reason.unwrap().contains("three entries"));
    }

    #[test]
    fn heights_on_path_star_cycle() {
        assert_eq!(bfs_heights(&path_graph(3), 0).unwrap(), vec![0, 1, 2]);
        assert_eq!(bfs_heights(&star_graph(3), 0).unwrap(), vec![0, 1, 1, 1]);
        let mut h = bfs_heights(&cycle_graph(4), 0).unwrap();
        h.sort_unstable();
        assert_eq!(h, vec![0, 1, 1, 2]);
    }

    #[test]
    fn heights_error_names_unreachable_vertex() {
        let g = SimpleGraph::from_edge_list(3, &[(0, 1)]).unwrap();
        assert!(matches!(bfs_heights(&g, 0), Err(Error::Disconnected(2, 0))));
    }

    #[test]
    fn internal_path_between_two_triangles() {
        // two triangles joined by a 3-vertex path at degree-3 vertices
        let g = SimpleGraph::from_edge_list(
            9,
            &[
                (0, 1),
                (1, 2),
                (2, 0),
                (2, 3),
                (3, 4),
                (4, 5),
                (5, 6),
                (6, 7),
                (7, 8),
                (8, 6),
            ],
        )
        .unwrap();
        let paths = list_internal_paths(&g);
        // the connecting path plus the closed walk around each triangle
        assert!(paths.contains(&vec![2, 3, 4, 5, 6]));
        assert_eq!(paths.len(), 3);
    }

    #[test]
    fn paths_have_no_internal_path() {
        assert!(list_internal_paths(&path_graph(6)).is_empty());
        assert!(list_internal_paths(&star_graph(4)).is_empty());
    }

    #[test]
    fn closed_walk_on_single_branch_cycle() {
        // triangle with a pendant path of 2: branch vertex 0 on the cycle
        let g = SimpleGraph::from_edge_list(5, &[(0, 1), (1, 2), (2, 0), (0, 3), (3, 4)]).unwrap();
        let paths = list_internal_paths(&g);
        assert_eq!(paths, vec![vec![0, 1, 2, 0]]);
    }

    #[test]
    fn edge_list_round_trip() {
        let g = cycle_graph(5);
        let text = format_edge_list(&g);
        assert!(text.starts_with("5 5\n"));
        let back = parse_edge_list(&text).unwrap();
        assert_eq!(back, g);
    }

    #[test]
    fn parse_edge_list_rejects_garbage() {
        assert!(parse_edge_list("2").is_err());
        assert!(parse_edge_list("2 1\n0 x").is_err());
        assert!(parse_edge_list("2 1\n0 1\n7").is_err());
    }
}
