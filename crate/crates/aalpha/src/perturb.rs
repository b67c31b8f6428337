//! Graph surgery moves and a degree-preserving steepest-ascent climber.
//!
//! The moves themselves are raw mechanisms; their spectral contracts
//! (strict increase for a well-ordered neighbor shift, monotone two-swap,
//! strict decrease for an internal-path subdivision) are verified by the
//! fuzz harness and the test suites rather than enforced here.

use itertools::Itertools;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::spectrum::{spectral_radius, AlphaValue};

/// Tolerance below which two Perron entries count as tied.
pub const PERRON_TIE_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum MoveKind {
    NeighborShift,
    TwoSwap,
    Subdivide,
    EdgeContract,
}

/// One applied surgery step, as the edges it removed and added.
#[derive(Debug, Clone, Serialize)]
pub struct Move {
    pub kind: MoveKind,
    pub removed: Vec<(usize, usize)>,
    pub added: Vec<(usize, usize)>,
}

/// Trace entry of the climber: a move plus the spectral radius on both sides.
#[derive(Debug, Clone, Serialize)]
pub struct MoveRecord {
    #[serde(flatten)]
    pub mv: Move,
    pub rho_before: f64,
    pub rho_after: f64,
}

/// JSON-lines rendering of a climb trace, one record per move.
pub fn trace_to_jsonl(trace: &[MoveRecord]) -> String {
    trace
        .iter()
        .map(|r| serde_json::to_string(r).expect("trace serializes"))
        .map(|s| s + "\n")
        .collect()
}

/// Moves every edge `vw` with `w` in `shift_set` over to `uw`. The set must
/// be a nonempty subset of `N(v)` avoiding `u` and `N(u)`.
pub fn shift_neighbors(
    g: &SimpleGraph,
    u: usize,
    v: usize,
    shift_set: &[usize],
) -> Result<SimpleGraph> {
    let n = g.vertex_count();
    if u >= n || v >= n || u == v {
        return Err(Error::Precondition(format!("bad vertex pair ({u}, {v})")));
    }
    if shift_set.is_empty() {
        return Err(Error::Precondition("shift set is empty".into()));
    }
    for &w in shift_set {
        if w == u {
            return Err(Error::Precondition(format!("vertex {w} equals the target")));
        }
        if !g.has_edge(v, w) {
            return Err(Error::Precondition(format!(
                "vertex {w} is not a neighbor of {v}"
            )));
        }
        if g.has_edge(u, w) {
            return Err(Error::Precondition(format!(
                "vertex {w} is already a neighbor of {u}"
            )));
        }
    }
    let mut out = g.clone();
    for &w in shift_set {
        out.remove_edge(v, w);
        out.add_edge(u, w)?;
    }
    Ok(out)
}

/// Replaces edges `v1u1, v2u2` by `v1v2, u1u2`; degrees are unchanged.
pub fn two_swap(
    g: &SimpleGraph,
    v1: usize,
    u1: usize,
    v2: usize,
    u2: usize,
) -> Result<SimpleGraph> {
    let verts = [v1, u1, v2, u2];
    if verts.iter().any(|&x| x >= g.vertex_count()) {
        return Err(Error::Precondition("vertex out of range".into()));
    }
    if (1..4).any(|i| verts[..i].contains(&verts[i])) {
        return Err(Error::Precondition("swap vertices must be distinct".into()));
    }
    if !g.has_edge(v1, u1) || !g.has_edge(v2, u2) {
        return Err(Error::Precondition(
            "swap requires edges v1u1 and v2u2".into(),
        ));
    }
    if g.has_edge(v1, v2) || g.has_edge(u1, u2) {
        return Err(Error::Precondition(
            "swap requires non-edges v1v2 and u1u2".into(),
        ));
    }
    let mut out = g.clone();
    out.remove_edge(v1, u1);
    out.remove_edge(v2, u2);
    out.add_edge(v1, v2)?;
    out.add_edge(u1, u2)?;
    Ok(out)
}

/// Splits edge `uv` with a fresh degree-2 vertex labeled `n`.
pub fn subdivide_edge(g: &SimpleGraph, u: usize, v: usize) -> Result<SimpleGraph> {
    if !g.has_edge(u, v) {
        return Err(Error::Precondition(format!("({u}, {v}) is not an edge")));
    }
    let n = g.vertex_count();
    let mut out = SimpleGraph::empty(n + 1);
    for (a, b) in g.edges() {
        if (a, b) != (u.min(v), u.max(v)) {
            out.add_edge(a, b)?;
        }
    }
    out.add_edge(u, n)?;
    out.add_edge(n, v)?;
    Ok(out)
}

/// Identifies the endpoints of edge `uv`; the merged vertex keeps the
/// smaller label and labels above the larger one shift down by one.
/// Parallel edges arising from common neighbors collapse.
pub fn contract_edge(g: &SimpleGraph, u: usize, v: usize) -> Result<SimpleGraph> {
    if !g.has_edge(u, v) {
        return Err(Error::Precondition(format!("({u}, {v}) is not an edge")));
    }
    let keep = u.min(v);
    let drop = u.max(v);
    let map = |x: usize| {
        if x == drop {
            keep
        } else if x > drop {
            x - 1
        } else {
            x
        }
    };
    let mut out = SimpleGraph::empty(g.vertex_count() - 1);
    for (a, b) in g.edges() {
        if (a, b) == (keep, drop) {
            continue;
        }
        out.add_edge(map(a), map(b))?;
    }
    Ok(out)
}

/// Result of [`hill_climb`]: the local optimum and the strictly increasing
/// trace that led there.
#[derive(Debug, Clone)]
pub struct HillClimbOutcome {
    pub graph: SimpleGraph,
    pub trace: Vec<MoveRecord>,
}

/// Steepest-ascent search over degree-preserving neighbor shifts and
/// two-swaps whose Perron preconditions hold. Each step applies the move
/// with the largest gain (first found wins ties) among those that keep the
/// graph connected; stops at a local optimum or after `budget` moves.
pub fn hill_climb(g: &SimpleGraph, alpha: AlphaValue, budget: usize) -> Result<HillClimbOutcome> {
    let mut current = g.clone();
    let mut trace = Vec::new();
    for _ in 0..budget {
        let base = spectral_radius(&current, alpha)?;
        match best_improving_move(&current, alpha, &base.perron, base.rho)? {
            Some((next, mv, rho_after)) => {
                trace.push(MoveRecord {
                    mv,
                    rho_before: base.rho,
                    rho_after,
                });
                current = next;
            }
            None => break,
        }
    }
    Ok(HillClimbOutcome {
        graph: current,
        trace,
    })
}

type Candidate = (SimpleGraph, Move, f64);

fn best_improving_move(
    g: &SimpleGraph,
    alpha: AlphaValue,
    perron: &[f64],
    rho: f64,
) -> Result<Option<Candidate>> {
    let mut best: Option<Candidate> = None;
    let mut consider = |graph: SimpleGraph, mv: Move, rho_after: f64| {
        if rho_after <= rho + PERRON_TIE_TOL {
            return;
        }
        if best.as_ref().is_none_or(|b| rho_after > b.2) {
            best = Some((graph, mv, rho_after));
        }
    };

    let n = g.vertex_count();
    // degree-preserving neighbor shifts: the receiver ends with the donor's
    // old degree and vice versa, so the sorted sequence is unchanged
    for recv in 0..n {
        for donor in 0..n {
            if recv == donor || g.degree(donor) <= g.degree(recv) {
                continue;
            }
            if perron[recv] < perron[donor] - PERRON_TIE_TOL {
                continue;
            }
            let k = g.degree(donor) - g.degree(recv);
            let pool: Vec<usize> = g
                .neighbors(donor)
                .filter(|&w| w != recv && !g.has_edge(recv, w))
                .collect();
            if pool.len() < k {
                continue;
            }
            for subset in pool.iter().copied().combinations(k) {
                let shifted = shift_neighbors(g, recv, donor, &subset)?;
                if !shifted.is_connected() {
                    continue;
                }
                let rho_after = spectral_radius(&shifted, alpha)?.rho;
                let mv = Move {
                    kind: MoveKind::NeighborShift,
                    removed: subset.iter().map(|&w| sorted_pair(donor, w)).collect(),
                    added: subset.iter().map(|&w| sorted_pair(recv, w)).collect(),
                };
                consider(shifted, mv, rho_after);
            }
        }
    }

    let edges = g.edges();
    for (i, &(a, b)) in edges.iter().enumerate() {
        for &(c, d) in edges.iter().skip(i + 1) {
            if a == c || a == d || b == c || b == d {
                continue;
            }
            for (v1, u1, v2, u2) in [(a, b, c, d), (a, b, d, c), (b, a, c, d), (b, a, d, c)] {
                if g.has_edge(v1, v2) || g.has_edge(u1, u2) {
                    continue;
                }
                if perron[v1] < perron[u2] - PERRON_TIE_TOL
                    || perron[v2] < perron[u1] - PERRON_TIE_TOL
                {
                    continue;
                }
                let swapped = two_swap(g, v1, u1, v2, u2)?;
                if !swapped.is_connected() {
                    continue;
                }
                let rho_after = spectral_radius(&swapped, alpha)?.rho;
                let mv = Move {
                    kind: MoveKind::TwoSwap,
                    removed: vec![sorted_pair(v1, u1), sorted_pair(v2, u2)],
                    added: vec![sorted_pair(v1, v2), sorted_pair(u1, u2)],
                };
                consider(swapped, mv, rho_after);
            }
        }
    }
    Ok(best)
}

fn sorted_pair(a: usize, b: usize) -> (usize, usize) {
    (a.min(b), a.max(b))
}
