//! Seeded random verification of the perturbation contracts: strict
//! spectral increase for well-ordered neighbor shifts, monotone two-swaps,
//! and strict decrease under internal-path subdivision.
//!
//! Instances are generated per index from a master seed, so results are
//! byte-identical across runs and independent of the worker count.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::Result;
use crate::graph::{format_edge_list, list_internal_paths, SimpleGraph};
use crate::perturb::{shift_neighbors, subdivide_edge, two_swap, PERRON_TIE_TOL};
use crate::spectrum::{spectral_radius, AlphaValue};

/// Relative margin demanded of strict spectral inequalities.
pub const STRICT_MARGIN: f64 = 1e-10;
/// Slack allowed on non-strict spectral inequalities.
pub const NONSTRICT_SLACK: f64 = 1e-10;

/// Which perturbation contract to fuzz.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FuzzTarget {
    /// Shifting neighbors onto the vertex with the larger Perron entry
    /// strictly increases the spectral radius.
    NeighborShift,
    /// A two-swap aligned with the Perron order never decreases the
    /// spectral radius, strictly when an alignment is strict.
    TwoSwap,
    /// Subdividing an edge on an internal path strictly decreases the
    /// spectral radius (above the radius-2 floor).
    Subdivision,
}

impl FuzzTarget {
    pub fn claim(self) -> &'static str {
        match self {
            FuzzTarget::NeighborShift => "shift-strict-increase",
            FuzzTarget::TwoSwap => "swap-nondecrease",
            FuzzTarget::Subdivision => "subdivision-strict-decrease",
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct FuzzConfig {
    pub seed: u64,
    pub cases: usize,
}

impl Default for FuzzConfig {
    fn default() -> Self {
        FuzzConfig {
            seed: 42,
            cases: 500,
        }
    }
}

/// A contract violation, recorded verbatim for offline inspection.
#[derive(Debug, Clone, Serialize)]
pub struct Counterexample {
    pub claim: String,
    pub case_index: usize,
    pub alpha: f64,
    pub edge_list: String,
    pub detail: String,
    pub rho_before: f64,
    pub rho_after: f64,
}

/// Aggregate outcome of a fuzz run.
#[derive(Debug, Clone, Serialize)]
pub struct FuzzReport {
    pub claim: String,
    pub seed: u64,
    pub cases: usize,
    pub downgraded_ties: usize,
    pub violations: Vec<Counterexample>,
}

impl FuzzReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

fn case_rng(seed: u64, index: usize) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed.wrapping_add((index as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15)))
}

/// Uniform random labeled tree on `n >= 2` vertices.
pub fn random_tree(rng: &mut impl Rng, n: usize) -> SimpleGraph {
    assert!(n >= 2);
    if n == 2 {
        return SimpleGraph::from_edge_list(2, &[(0, 1)]).expect("valid edge");
    }
    let prufer: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &a in &prufer {
        degree[a] += 1;
    }
    let mut leaves: std::collections::BinaryHeap<std::cmp::Reverse<usize>> = (0..n)
        .filter(|&i| degree[i] == 1)
        .map(std::cmp::Reverse)
        .collect();
    let mut g = SimpleGraph::empty(n);
    for &a in &prufer {
        let u = leaves.pop().expect("leaf exists").0;
        degree[u] -= 1;
        degree[a] -= 1;
        g.add_edge(u, a).expect("simple edge");
        if degree[a] == 1 {
            leaves.push(std::cmp::Reverse(a));
        }
    }
    let u = leaves.pop().expect("leaf").0;
    let v = leaves.pop().expect("leaf").0;
    g.add_edge(u, v).expect("simple edge");
    g
}

/// Random spanning tree plus up to `extra` additional random edges.
pub fn random_connected_graph(rng: &mut impl Rng, n: usize, extra: usize) -> SimpleGraph {
    let mut g = random_tree(rng, n);
    for _ in 0..extra {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u != v && !g.has_edge(u, v) {
            g = g.adding_edge(u, v).expect("checked non-edge");
        }
    }
    g
}

/// Deterministic corpus of `count` random connected graphs on at most
/// `max_n` vertices, used by the bounds sweeps.
pub fn bounds_corpus(seed: u64, count: usize, max_n: usize) -> Vec<SimpleGraph> {
    (0..count)
        .map(|i| {
            let mut rng = case_rng(seed, i);
            let n = rng.gen_range(2..=max_n);
            let extra = if n >= 4 { rng.gen_range(0..=3) } else { 0 };
            random_connected_graph(&mut rng, n, extra)
        })
        .collect()
}

const ALPHA_PALETTE: [f64; 4] = [0.0, 0.3, 0.5, 0.9];
const SUBDIVISION_ALPHAS: [f64; 3] = [0.0, 0.5, 0.9];

/// Runs `cfg.cases` seeded instances of the chosen contract. Instances are
/// distributed across workers; each owns its stream derived from the seed.
pub fn run_fuzz(target: FuzzTarget, cfg: FuzzConfig) -> Result<FuzzReport> {
    let outcomes: Vec<(usize, Option<Counterexample>)> = (0..cfg.cases)
        .into_par_iter()
        .map(|i| -> Result<(usize, Option<Counterexample>)> {
            let mut rng = case_rng(cfg.seed, i);
            match target {
                FuzzTarget::NeighborShift => shift_case(&mut rng, i),
                FuzzTarget::TwoSwap => swap_case(&mut rng, i),
                FuzzTarget::Subdivision => subdivision_case(&mut rng, i),
            }
        })
        .collect::<Result<Vec<_>>>()?;
    let downgraded_ties = outcomes.iter().map(|(d, _)| d).sum();
    let violations = outcomes.into_iter().filter_map(|(_, v)| v).collect();
    Ok(FuzzReport {
        claim: target.claim().into(),
        seed: cfg.seed,
        cases: cfg.cases,
        downgraded_ties,
        violations,
    })
}

fn random_alpha(rng: &mut impl Rng) -> AlphaValue {
    let a = *ALPHA_PALETTE.choose(rng).expect("palette nonempty");
    AlphaValue::new(a).expect("palette values are valid")
}

/// One neighbor-shift instance: preconditions plus a strict Perron gap on
/// the receiving side must force a strict radius increase.
fn shift_case(rng: &mut impl Rng, index: usize) -> Result<(usize, Option<Counterexample>)> {
    loop {
        let n = rng.gen_range(4..=10);
        let extra = rng.gen_range(0..=3);
        let g = random_connected_graph(rng, n, extra);
        let alpha = random_alpha(rng);
        let base = spectral_radius(&g, alpha)?;
        for _ in 0..24 {
            let u = rng.gen_range(0..n);
            let v = rng.gen_range(0..n);
            if u == v || base.perron[u] < base.perron[v] + PERRON_TIE_TOL {
                continue;
            }
            let pool: Vec<usize> = g
                .neighbors(v)
                .filter(|&w| w != u && !g.has_edge(u, w))
                .collect();
            if pool.is_empty() {
                continue;
            }
            let mut subset: Vec<usize> =
                pool.iter().copied().filter(|_| rng.gen_bool(0.5)).collect();
            if subset.is_empty() {
                subset.push(*pool.choose(rng).expect("pool nonempty"));
            }
            let shifted = shift_neighbors(&g, u, v, &subset)?;
            if !shifted.is_connected() {
                continue;
            }
            let after = spectral_radius(&shifted, alpha)?;
            let want = base.rho + STRICT_MARGIN * base.rho.max(1.0);
            let violation = (after.rho <= want).then(|| Counterexample {
                claim: FuzzTarget::NeighborShift.claim().into(),
                case_index: index,
                alpha: alpha.value(),
                edge_list: format_edge_list(&g),
                detail: format!("shift {subset:?} from {v} to {u}"),
                rho_before: base.rho,
                rho_after: after.rho,
            });
            return Ok((0, violation));
        }
    }
}

/// One two-swap instance: Perron-aligned swaps may not lose spectral
/// radius; a strict alignment must gain. Tied alignments only assert the
/// non-strict half and are counted as downgraded.
fn swap_case(rng: &mut impl Rng, index: usize) -> Result<(usize, Option<Counterexample>)> {
    loop {
        let n = rng.gen_range(4..=10);
        let extra = rng.gen_range(0..=3);
        let g = random_connected_graph(rng, n, extra);
        let alpha = random_alpha(rng);
        let base = spectral_radius(&g, alpha)?;
        let edges = g.edges();
        for _ in 0..32 {
            let &(a, b) = edges.choose(rng).expect("connected graph has edges");
            let &(c, d) = edges.choose(rng).expect("connected graph has edges");
            if a == c || a == d || b == c || b == d {
                continue;
            }
            let (v1, u1) = if rng.gen_bool(0.5) { (a, b) } else { (b, a) };
            let (v2, u2) = if rng.gen_bool(0.5) { (c, d) } else { (d, c) };
            if g.has_edge(v1, v2) || g.has_edge(u1, u2) {
                continue;
            }
            let x = &base.perron;
            if x[v1] < x[u2] - PERRON_TIE_TOL || x[v2] < x[u1] - PERRON_TIE_TOL {
                continue;
            }
            let swapped = two_swap(&g, v1, u1, v2, u2)?;
            if !swapped.is_connected() {
                continue;
            }
            let after = spectral_radius(&swapped, alpha)?;
            let strict = x[v1] > x[u2] + PERRON_TIE_TOL || x[v2] > x[u1] + PERRON_TIE_TOL;
            let detail = format!("swap ({v1},{u1}) and ({v2},{u2}) -> ({v1},{v2}), ({u1},{u2})");
            if after.rho < base.rho - NONSTRICT_SLACK {
                return Ok((
                    0,
                    Some(Counterexample {
                        claim: FuzzTarget::TwoSwap.claim().into(),
                        case_index: index,
                        alpha: alpha.value(),
                        edge_list: format_edge_list(&g),
                        detail: format!("{detail}: non-strict half failed"),
                        rho_before: base.rho,
                        rho_after: after.rho,
                    }),
                ));
            }
            if strict {
                let want = base.rho + STRICT_MARGIN * base.rho.max(1.0);
                let violation = (after.rho <= want).then(|| Counterexample {
                    claim: FuzzTarget::TwoSwap.claim().into(),
                    case_index: index,
                    alpha: alpha.value(),
                    edge_list: format_edge_list(&g),
                    detail: format!("{detail}: strict half failed"),
                    rho_before: base.rho,
                    rho_after: after.rho,
                });
                return Ok((0, violation));
            }
            return Ok((1, None));
        }
    }
}

/// One subdivision instance, checked at every alpha in the grid. The
/// radius floor of 2 is required up front: the contract's proof runs
/// through a certificate that needs it, and the family of graphs sitting
/// exactly at 2 (cycles and the double-cherry paths) genuinely keeps its
/// radius under subdivision.
fn subdivision_case(rng: &mut impl Rng, index: usize) -> Result<(usize, Option<Counterexample>)> {
    loop {
        let n = rng.gen_range(5..=10);
        let extra = rng.gen_range(0..=2);
        let g = random_connected_graph(rng, n, extra);
        if g.is_regular() {
            continue;
        }
        let paths = list_internal_paths(&g);
        if paths.is_empty() {
            continue;
        }
        let adjacency_rho = spectral_radius(&g, AlphaValue::new(0.0).expect("valid"))?.rho;
        if adjacency_rho <= 2.0 + 1e-9 {
            continue;
        }
        let path = paths.choose(rng).expect("nonempty");
        let i = rng.gen_range(0..path.len() - 1);
        let (u, v) = (path[i], path[i + 1]);
        let subdivided = subdivide_edge(&g, u, v)?;
        for a in SUBDIVISION_ALPHAS {
            let alpha = AlphaValue::new(a).expect("grid values are valid");
            let before = spectral_radius(&g, alpha)?;
            let after = spectral_radius(&subdivided, alpha)?;
            let want = before.rho - STRICT_MARGIN * before.rho.max(1.0);
            if after.rho >= want {
                return Ok((
                    0,
                    Some(Counterexample {
                        claim: FuzzTarget::Subdivision.claim().into(),
                        case_index: index,
                        alpha: a,
                        edge_list: format_edge_list(&g),
                        detail: format!("subdivide internal edge ({u},{v})"),
                        rho_before: before.rho,
                        rho_after: after.rho,
                    }),
                ));
            }
        }
        return Ok((0, None));
    }
}

/// Caps the global worker pool from the `AALPHA_THREADS` environment
/// variable; silently keeps the default when unset or already configured.
pub fn configure_threads() {
    if let Ok(value) = std::env::var("AALPHA_THREADS") {
        if let Ok(k) = value.trim().parse::<usize>() {
            if k >= 1 {
                let _ = rayon::ThreadPoolBuilder::new()
                    .num_threads(k)
                    .build_global();
            }
        }
    }
}
