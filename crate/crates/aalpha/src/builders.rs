//! Greedy layered constructions of the extremal tree and extremal unicyclic
//! graph for a degree sequence, plus the two-pendant-path gadget.
//!
//! Vertices are created layer by layer and labeled in creation order, so
//! label order is simultaneously the BFS order of the result and the order
//! in which the sorted degree sequence is consumed.

use std::collections::VecDeque;

use serde_json::json;

use crate::error::{Error, Result};
use crate::graph::{DegreeSequence, SequenceClass, SimpleGraph};

/// A constructed graph together with its layer structure and the degree
/// each vertex was assigned from the sequence.
#[derive(Debug, Clone)]
pub struct LayeredConstruction {
    graph: SimpleGraph,
    layers: Vec<Vec<usize>>,
    assigned_degrees: Vec<usize>,
}

impl LayeredConstruction {
    fn new(graph: SimpleGraph, heights: &[usize], assigned: Vec<usize>) -> Result<Self> {
        for (v, &want) in assigned.iter().enumerate() {
            if graph.degree(v) != want {
                return Err(Error::ConstructionExhausted(v));
            }
        }
        let depth = heights.iter().copied().max().unwrap_or(0);
        let mut layers = vec![Vec::new(); depth + 1];
        for (v, &h) in heights.iter().enumerate() {
            layers[h].push(v);
        }
        Ok(LayeredConstruction {
            graph,
            layers,
            assigned_degrees: assigned,
        })
    }

    pub fn graph(&self) -> &SimpleGraph {
        &self.graph
    }

    pub fn into_graph(self) -> SimpleGraph {
        self.graph
    }

    /// Vertices grouped by height; concatenated they give the BFS order,
    /// which by construction is the identity labeling.
    pub fn layers(&self) -> &[Vec<usize>] {
        &self.layers
    }

    pub fn assigned_degrees(&self) -> &[usize] {
        &self.assigned_degrees
    }

    pub fn heights(&self) -> Vec<usize> {
        let mut h = vec![0; self.graph.vertex_count()];
        for (t, layer) in self.layers.iter().enumerate() {
            for &v in layer {
                h[v] = t;
            }
        }
        h
    }

    /// The creation order as a rooted ordering; for every construction it
    /// satisfies the BFS-ordering conditions on the built graph.
    pub fn construction_ordering(&self) -> crate::graph::BfsOrdering {
        crate::graph::BfsOrdering {
            order: (0..self.graph.vertex_count()).collect(),
            root: 0,
            heights: self.heights(),
        }
    }

    /// Per-vertex JSON annotation emitted next to the edge list.
    pub fn layer_annotations(&self) -> serde_json::Value {
        let heights = self.heights();
        let entries: Vec<_> = (0..self.graph.vertex_count())
            .map(|v| {
                json!({
                    "vertex": v,
                    "height": heights[v],
                    "assigned_degree": self.assigned_degrees[v],
                })
            })
            .collect();
        json!(entries)
    }
}

fn checked(pi: &DegreeSequence, want: SequenceClass) -> Result<()> {
    if pi.class() != want {
        return Err(Error::WrongSequenceClass(
            pi.class().to_string(),
            want.to_string(),
        ));
    }
    let v = pi.validate();
    if !v.valid {
        return Err(Error::InvalidSequence(v.reason.unwrap_or_default()));
    }
    Ok(())
}

/// Builds the unique BFS-ordered tree with degree sequence `pi`: vertices
/// are taken through a FIFO queue and each one receives the next unassigned
/// degrees as children until its own degree is met.
pub fn build_extremal_tree(pi: &DegreeSequence) -> Result<LayeredConstruction> {
    checked(pi, SequenceClass::Tree)?;
    let d = pi.degrees();
    let n = d.len();
    let mut g = SimpleGraph::empty(n);
    let mut heights = vec![0usize; n];
    let mut queue = VecDeque::from([0usize]);
    let mut next = 1usize;
    while let Some(v) = queue.pop_front() {
        let need = d[v] - usize::from(v != 0);
        for _ in 0..need {
            if next >= n {
                return Err(Error::ConstructionExhausted(v));
            }
            g.add_edge(v, next)?;
            heights[next] = heights[v] + 1;
            queue.push_back(next);
            next += 1;
        }
    }
    if next != n {
        return Err(Error::ConstructionExhausted(next));
    }
    LayeredConstruction::new(g, &heights, d.to_vec())
}

/// Builds the extremal unicyclic graph for `pi`. Three shapes: the cycle
/// when every degree is 2; a triangle carrying near-equal pendant paths at
/// one vertex when only one degree exceeds 2; otherwise the BFS layering
/// with the extra edge between the first two children of the root.
pub fn build_extremal_unicyclic(pi: &DegreeSequence) -> Result<LayeredConstruction> {
    checked(pi, SequenceClass::Unicyclic)?;
    let d = pi.degrees();
    if d[0] == 2 {
        build_cycle_layered(pi)
    } else if d[1] == 2 {
        build_triangle_with_paths(pi)
    } else {
        build_unicyclic_bfs(pi)
    }
}

/// The cycle on `n` vertices with BFS labeling: two chains grow from the
/// root and close at the far end.
fn build_cycle_layered(pi: &DegreeSequence) -> Result<LayeredConstruction> {
    let n = pi.n();
    let mut edges: Vec<(usize, usize)> = vec![(0, 1), (0, 2)];
    for i in 1..=n.saturating_sub(3) {
        edges.push((i, i + 2));
    }
    edges.push((n - 2, n - 1));
    let g = SimpleGraph::from_edge_list(n, &edges)?;
    let heights: Vec<usize> = (0..n).map(|v| v.div_ceil(2)).collect();
    LayeredConstruction::new(g, &heights, pi.degrees().to_vec())
}

/// Triangle at the root vertex plus `d_0 - 2` pendant paths whose lengths
/// partition `n - 3` into parts differing by at most one, longest first.
fn build_triangle_with_paths(pi: &DegreeSequence) -> Result<LayeredConstruction> {
    let d = pi.degrees();
    let n = d.len();
    let hubs = d[0] - 2;
    let rest = n - 3;
    let base = rest / hubs;
    let extra = rest % hubs;
    let lengths: Vec<usize> = (0..hubs).map(|i| base + usize::from(i < extra)).collect();

    let mut g = SimpleGraph::empty(n);
    let mut heights = vec![0usize; n];
    g.add_edge(0, 1)?;
    g.add_edge(0, 2)?;
    g.add_edge(1, 2)?;
    heights[1] = 1;
    heights[2] = 1;
    // path vertices in layer-major order: depth t sweeps the paths in order,
    // so longer paths always precede the ones that already ended
    let mut next = 3usize;
    let mut tip: Vec<usize> = vec![0; hubs];
    let max_len = lengths.iter().copied().max().unwrap_or(0);
    for t in 1..=max_len {
        for (i, &len) in lengths.iter().enumerate() {
            if t <= len {
                g.add_edge(tip[i], next)?;
                heights[next] = t;
                tip[i] = next;
                next += 1;
            }
        }
    }
    if next != n {
        return Err(Error::ConstructionExhausted(next));
    }
    LayeredConstruction::new(g, &heights, d.to_vec())
}

/// BFS construction for `d_1 >= 3`: the root's first two children are
/// joined by the extra edge and therefore receive two fewer children each.
fn build_unicyclic_bfs(pi: &DegreeSequence) -> Result<LayeredConstruction> {
    let d = pi.degrees();
    let n = d.len();
    let mut g = SimpleGraph::empty(n);
    let mut heights = vec![0usize; n];
    let mut queue = VecDeque::new();
    let mut next = 1usize;
    for _ in 0..d[0] {
        if next >= n {
            return Err(Error::ConstructionExhausted(0));
        }
        g.add_edge(0, next)?;
        heights[next] = 1;
        queue.push_back(next);
        next += 1;
    }
    g.add_edge(1, 2)?;
    while let Some(v) = queue.pop_front() {
        let have = g.degree(v);
        if d[v] < have {
            return Err(Error::ConstructionExhausted(v));
        }
        for _ in 0..(d[v] - have) {
            if next >= n {
                return Err(Error::ConstructionExhausted(v));
            }
            g.add_edge(v, next)?;
            heights[next] = heights[v] + 1;
            queue.push_back(next);
            next += 1;
        }
    }
    if next != n {
        return Err(Error::ConstructionExhausted(next));
    }
    LayeredConstruction::new(g, &heights, d.to_vec())
}

/// The gadget `G(k, s)`: pendant paths of `k` and `s` vertices joined to
/// vertex `w` by one new edge each (`s = 0` attaches a single path).
pub fn attach_two_paths(g: &SimpleGraph, w: usize, k: usize, s: usize) -> Result<SimpleGraph> {
    let n = g.vertex_count();
    if w >= n {
        return Err(Error::VertexOutOfRange(w, n));
    }
    if k == 0 {
        return Err(Error::Precondition(
            "first path must have at least one vertex".into(),
        ));
    }
    let mut out = SimpleGraph::empty(n + k + s);
    for (u, v) in g.edges() {
        out.add_edge(u, v)?;
    }
    out.add_edge(w, n)?;
    for i in 1..k {
        out.add_edge(n + i - 1, n + i)?;
    }
    if s > 0 {
        out.add_edge(w, n + k)?;
        for i in 1..s {
            out.add_edge(n + k + i - 1, n + k + i)?;
        }
    }
    Ok(out)
}
