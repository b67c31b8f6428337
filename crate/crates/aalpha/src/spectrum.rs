//! The convex combination `alpha*D + (1-alpha)*A` of the degree and
//! adjacency matrices, its spectral radius and Perron vector, strict
//! upper-bound certificates and the degree sandwich bounds.

use nalgebra::{DMatrix, DVector};
use serde_json::json;

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;

/// Convergence tolerance on the infinity-norm eigen residual.
pub const RESIDUAL_TOL: f64 = 1e-12;

/// Required agreement between the iterative and the dense route.
pub const CROSS_SOLVER_TOL: f64 = 1e-8;

/// Real matrix parameter restricted to `[0, 1)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AlphaValue(f64);

impl AlphaValue {
    pub fn new(value: f64) -> Result<Self> {
        if value.is_finite() && (0.0..1.0).contains(&value) {
            Ok(AlphaValue(value))
        } else {
            Err(Error::InvalidAlpha(value))
        }
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

impl std::fmt::Display for AlphaValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Which route produced a [`SpectralResult`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolveMethod {
    PowerIteration,
    DenseFallback,
}

/// Spectral radius with its unit Perron vector and solver diagnostics.
#[derive(Debug, Clone)]
pub struct SpectralResult {
    pub rho: f64,
    pub perron: Vec<f64>,
    pub iterations: usize,
    pub residual: f64,
    pub method: SolveMethod,
}

impl SpectralResult {
    /// Report record with `rho` rounded to 15 significant digits.
    pub fn report_json(&self) -> serde_json::Value {
        json!({
            "rho": sig15(self.rho),
            "residual": sig15(self.residual),
            "iterations": self.iterations,
        })
    }
}

/// Rounds to 15 significant digits for reproducible report diffs.
pub fn sig15(x: f64) -> f64 {
    format!("{x:.14e}").parse().expect("formatted float parses")
}

/// Assembles the dense symmetric matrix `alpha*D + (1-alpha)*A`.
pub fn build_a_alpha(g: &SimpleGraph, alpha: AlphaValue) -> DMatrix<f64> {
    let n = g.vertex_count();
    let a = alpha.value();
    let mut m = DMatrix::zeros(n, n);
    for v in 0..n {
        m[(v, v)] = a * g.degree(v) as f64;
        for w in g.neighbors(v) {
            m[(v, w)] = 1.0 - a;
        }
    }
    m
}

fn iteration_cap(n: usize) -> usize {
    // 100 * n * ln(1/tol)
    (100.0 * n as f64 * (1.0 / RESIDUAL_TOL).ln()).ceil() as usize
}

fn residual_inf(m: &DMatrix<f64>, rho: f64, x: &DVector<f64>) -> f64 {
    let r = m * x - x * rho;
    r.iter().fold(0.0f64, |acc, v| acc.max(v.abs()))
}

/// Power iteration on `A_alpha + I`; the unit shift makes the matrix
/// primitive for every connected graph, so the iteration cannot oscillate
/// even on bipartite graphs at alpha = 0. Deterministic all-ones start.
pub fn power_iteration(g: &SimpleGraph, alpha: AlphaValue) -> Result<SpectralResult> {
    let n = g.vertex_count();
    require_connected(g)?;
    let m = build_a_alpha(g, alpha);
    let shifted = &m + DMatrix::<f64>::identity(n, n);
    let mut x = DVector::from_element(n, 1.0 / (n as f64).sqrt());
    let cap = iteration_cap(n);
    let mut rho = 0.0;
    for it in 1..=cap {
        let y = &shifted * &x;
        let norm = y.norm();
        if !norm.is_finite() || norm == 0.0 {
            return Err(Error::NoConvergence(it, f64::INFINITY));
        }
        x = y / norm;
        rho = (x.transpose() * &m * &x)[(0, 0)];
        let res = residual_inf(&m, rho, &x);
        if res <= RESIDUAL_TOL {
            return Ok(SpectralResult {
                rho,
                perron: x.iter().copied().collect(),
                iterations: it,
                residual: res,
                method: SolveMethod::PowerIteration,
            });
        }
    }
    Err(Error::NoConvergence(cap, residual_inf(&m, rho, &x)))
}

/// Largest eigenvalue and eigenvector from the dense symmetric eigensolver.
/// Serves both as the fallback after the iteration cap and as the
/// independent cross-check route in the test suites.
pub fn dense_spectral_radius(g: &SimpleGraph, alpha: AlphaValue) -> Result<SpectralResult> {
    require_connected(g)?;
    let m = build_a_alpha(g, alpha);
    let eig = m.clone().symmetric_eigen();
    let (idx, rho) =
        eig.eigenvalues
            .iter()
            .enumerate()
            .fold(
                (0, f64::NEG_INFINITY),
                |acc, (i, &v)| if v > acc.1 { (i, v) } else { acc },
            );
    let mut x: DVector<f64> = eig.eigenvectors.column(idx).into();
    // orient the Perron vector positively
    let sum: f64 = x.iter().sum();
    if sum < 0.0 {
        x = -x;
    }
    x /= x.norm();
    let residual = residual_inf(&m, rho, &x);
    Ok(SpectralResult {
        rho,
        perron: x.iter().copied().collect(),
        iterations: 0,
        residual,
        method: SolveMethod::DenseFallback,
    })
}

/// Spectral radius of `A_alpha(G)` for a connected graph: power iteration
/// first, dense eigensolver after the iteration cap.
pub fn spectral_radius(g: &SimpleGraph, alpha: AlphaValue) -> Result<SpectralResult> {
    match power_iteration(g, alpha) {
        Ok(r) => Ok(r),
        Err(Error::NoConvergence(it, _)) => {
            let mut r = dense_spectral_radius(g, alpha)?;
            r.iterations = it;
            if r.residual > 1e-9 {
                return Err(Error::NoConvergence(it, r.residual));
            }
            Ok(r)
        }
        Err(e) => Err(e),
    }
}

fn require_connected(g: &SimpleGraph) -> Result<()> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(Error::Precondition("graph has no vertices".into()));
    }
    if !g.is_connected() {
        let dist_from_0: Vec<bool> = {
            let mut seen = vec![false; n];
            let mut stack = vec![0usize];
            seen[0] = true;
            while let Some(u) = stack.pop() {
                for v in g.neighbors(u) {
                    if !seen[v] {
                        seen[v] = true;
                        stack.push(v);
                    }
                }
            }
            seen
        };
        let v = dist_from_0.iter().position(|&s| !s).unwrap_or(0);
        return Err(Error::Disconnected(v, 0));
    }
    Ok(())
}

/// Strict upper-bound certificate: for a nonnegative irreducible symmetric
/// `M`, a positive vector `Y` with `MY < beta*Y` componentwise proves
/// `rho(M) < beta`. Returns whether the componentwise test holds.
pub fn verify_certificate(m: &DMatrix<f64>, y: &DVector<f64>, beta: f64) -> Result<bool> {
    if m.nrows() != m.ncols() {
        return Err(Error::Precondition("matrix is not square".into()));
    }
    if m.nrows() != y.len() {
        return Err(Error::Precondition(
            "vector length does not match matrix".into(),
        ));
    }
    for i in 0..m.nrows() {
        for j in 0..m.ncols() {
            if (m[(i, j)] - m[(j, i)]).abs() > 1e-12 {
                return Err(Error::Precondition(format!(
                    "matrix asymmetric at ({i}, {j})"
                )));
            }
            if m[(i, j)] < 0.0 {
                return Err(Error::Precondition(format!("negative entry at ({i}, {j})")));
            }
        }
    }
    if let Some(i) = y.iter().position(|&v| v <= 0.0) {
        return Err(Error::Precondition(format!(
            "nonpositive certificate entry at {i}"
        )));
    }
    if !beta.is_finite() || beta <= 0.0 {
        return Err(Error::Precondition("beta must be positive".into()));
    }
    let my = m * y;
    Ok((0..y.len()).all(|i| my[i] < beta * y[i]))
}

/// The sandwich data around `rho(A_alpha)`: the adjacency spectral radius
/// below, the degree-based lower bound, and the maximum degree above.
#[derive(Debug, Clone, Copy)]
pub struct SpectralBounds {
    /// `rho(A_0(G))`, a lower bound for every alpha in `[0, 1)`.
    pub lower_adjacency: f64,
    /// Degree-based lower bound: `alpha*(max_degree+1)` for alpha <= 1/2,
    /// else `alpha*max_degree + (1-alpha)^2/alpha`. Both branches are
    /// dominated by the star value `rho(A_alpha(K_{1,max_degree}))`, which
    /// bounds every graph of that maximum degree from below, and they agree
    /// at alpha = 1/2. The linear form `alpha*max_degree + 1 - alpha`
    /// sometimes quoted for the second branch overshoots: it exceeds the
    /// radius of the star itself for alpha > 1/2.
    pub lower_alpha_degree: f64,
    /// Maximum degree; equality of `rho` with it forces a regular graph.
    pub upper_max_degree: f64,
}

/// Computes [`SpectralBounds`] for a connected graph.
pub fn spectral_bounds(g: &SimpleGraph, alpha: AlphaValue) -> Result<SpectralBounds> {
    let a = alpha.value();
    let delta = g.max_degree() as f64;
    let adj = spectral_radius(g, AlphaValue::new(0.0).expect("0 is valid"))?.rho;
    let lower_alpha_degree = if a <= 0.5 {
        a * (delta + 1.0)
    } else {
        a * delta + (1.0 - a) * (1.0 - a) / a
    };
    Ok(SpectralBounds {
        lower_adjacency: adj,
        lower_alpha_degree,
        upper_max_degree: delta,
    })
}
