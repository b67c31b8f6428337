//! Exact canonical forms for small graphs by color-refined backtracking
//! over labelings, choosing the lexicographically minimal adjacency
//! encoding. Two graphs get equal forms iff they are isomorphic.

use super::SimpleGraph;
use crate::error::{Error, Result};
use std::fmt;

/// Hard bound for the canonical labeling search.
pub const CANONICAL_MAX_VERTICES: usize = 12;

/// Canonical byte string of a graph: vertex count followed by the packed
/// upper-triangle bits of the minimal adjacency encoding.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    /// Lowercase hex rendering used by reports.
    pub fn to_hex(&self) -> String {
        self.0.iter().map(|b| format!("{b:02x}")).collect()
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_hex())
    }
}

/// Computes the canonical form of `g`; errors above [`CANONICAL_MAX_VERTICES`].
pub fn canonical_form(g: &SimpleGraph) -> Result<CanonicalForm> {
    let n = g.vertex_count();
    if n > CANONICAL_MAX_VERTICES {
        return Err(Error::TooLarge(n, CANONICAL_MAX_VERTICES));
    }
    let total_bits = if n < 2 { 0 } else { n * (n - 1) / 2 };
    let colors = refine_colors(g);
    let mut search = CodeSearch {
        g,
        colors: &colors,
        best: None,
        total_bits,
    };
    let mut order = Vec::with_capacity(n);
    let mut used = vec![false; n];
    search.extend(0, 0, &mut order, &mut used);
    let code = search.best.unwrap_or(0);

    let mut bytes = Vec::with_capacity(1 + total_bits.div_ceil(8));
    bytes.push(n as u8);
    bytes.resize(1 + total_bits.div_ceil(8), 0u8);
    for i in 0..total_bits {
        if (code >> (total_bits - 1 - i)) & 1 == 1 {
            bytes[1 + i / 8] |= 1 << (7 - i % 8);
        }
    }
    Ok(CanonicalForm(bytes))
}

/// Iterated neighborhood color refinement (1-WL). Returns a stable coloring
/// with isomorphism-invariant color ranks; the search below only permutes
/// vertices within a color class and lists classes in rank order.
fn refine_colors(g: &SimpleGraph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut colors: Vec<usize> = rank_by(&(0..n).map(|v| vec![g.degree(v)]).collect::<Vec<_>>());
    loop {
        let sigs: Vec<Vec<usize>> = (0..n)
            .map(|v| {
                let mut s = vec![colors[v]];
                let mut nb: Vec<usize> = g.neighbors(v).map(|w| colors[w]).collect();
                nb.sort_unstable();
                s.extend(nb);
                s
            })
            .collect();
        let next = rank_by(&sigs);
        let old_classes = colors
            .iter()
            .collect::<std::collections::BTreeSet<_>>()
            .len();
        let new_classes = next.iter().collect::<std::collections::BTreeSet<_>>().len();
        let stable = new_classes == old_classes;
        colors = next;
        if stable {
            return colors;
        }
    }
}

fn rank_by(sigs: &[Vec<usize>]) -> Vec<usize> {
    let mut uniq: Vec<&Vec<usize>> = sigs.iter().collect();
    uniq.sort();
    uniq.dedup();
    sigs.iter()
        .map(|s| uniq.binary_search(&s).expect("signature present"))
        .collect()
}

struct CodeSearch<'a> {
    g: &'a SimpleGraph,
    colors: &'a [usize],
    best: Option<u128>,
    total_bits: usize,
}

impl CodeSearch<'_> {
    fn extend(&mut self, code: u128, bits: usize, order: &mut Vec<usize>, used: &mut Vec<bool>) {
        let n = self.g.vertex_count();
        if order.len() == n {
            if self.best.is_none_or(|b| code < b) {
                self.best = Some(code);
            }
            return;
        }
        // next position is reserved for the smallest color rank present
        // among the unplaced vertices
        let next_color = (0..n)
            .filter(|&v| !used[v])
            .map(|v| self.colors[v])
            .min()
            .expect("unplaced vertex exists");
        for v in 0..n {
            if used[v] || self.colors[v] != next_color {
                continue;
            }
            let mut new_code = code;
            for &u in order.iter() {
                new_code = (new_code << 1) | u128::from(self.g.has_edge(v, u));
            }
            let new_bits = bits + order.len();
            if let Some(best) = self.best {
                if new_code > best >> (self.total_bits - new_bits) {
                    continue;
                }
            }
            used[v] = true;
            order.push(v);
            self.extend(new_code, new_bits, order, used);
            order.pop();
            used[v] = false;
        }
    }
}

/// Number of automorphisms of `g`, counted by class-respecting backtracking.
/// Intended for small graphs (the enumeration self-tests).
pub fn automorphism_count(g: &SimpleGraph) -> Result<u64> {
    let n = g.vertex_count();
    if n > CANONICAL_MAX_VERTICES {
        return Err(Error::TooLarge(n, CANONICAL_MAX_VERTICES));
    }
    if n == 0 {
        return Ok(1);
    }
    let colors = refine_colors(g);
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    Ok(count_maps(g, &colors, 0, &mut image, &mut used))
}

fn count_maps(
    g: &SimpleGraph,
    colors: &[usize],
    v: usize,
    image: &mut Vec<usize>,
    used: &mut Vec<bool>,
) -> u64 {
    let n = g.vertex_count();
    if v == n {
        return 1;
    }
    let mut total = 0;
    'cand: for w in 0..n {
        if used[w] || colors[w] != colors[v] || g.degree(w) != g.degree(v) {
            continue;
        }
        for (u, &mapped) in image.iter().enumerate().take(v) {
            if g.has_edge(u, v) != g.has_edge(mapped, w) {
                continue 'cand;
            }
        }
        image[v] = w;
        used[w] = true;
        total += count_maps(g, colors, v + 1, image, used);
        used[w] = false;
        image[v] = usize::MAX;
    }
    total
}
