//! Exhaustive enumeration of trees and unicyclic graphs with a prescribed
//! degree sequence, brute-force maximization of the spectral radius over
//! them, and structure checks on the maximizers.
//!
//! Trees come from distinct multiset permutations of the sequence in which
//! vertex `i` appears `d_i - 1` times; unicyclic graphs come from a
//! backtracking edge-set search with degree and connectivity pruning. Both
//! streams are deduplicated by canonical form.

use std::collections::BTreeMap;

use itertools::Itertools;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use crate::builders::{build_extremal_tree, build_extremal_unicyclic};
use crate::error::{Error, Result};
use crate::graph::{
    canonical_form, find_bfs_ordering, find_bfs_ordering_consistent_with, CanonicalForm,
    DegreeSequence, SequenceClass, SimpleGraph,
};
use crate::spectrum::{sig15, spectral_radius, AlphaValue};

/// Enumeration bound for trees.
pub const TREE_ENUM_MAX_VERTICES: usize = 10;
/// Enumeration bound for unicyclic graphs.
pub const UNICYCLIC_ENUM_MAX_VERTICES: usize = 8;
/// Two spectral radii within this distance count as tied at the top.
pub const ARGMAX_TOL: f64 = 1e-9;
/// Perron entries within this distance count as tied in structure checks.
pub const STRUCTURE_TIE_TOL: f64 = 1e-10;

/// Outcome of comparing the builder graph against the enumerated maximum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Pass,
    Fail,
    TieWithNonIsomorphic,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Verdict::Pass => write!(f, "Pass"),
            Verdict::Fail => write!(f, "Fail"),
            Verdict::TieWithNonIsomorphic => write!(f, "TieWithNonIsomorphic"),
        }
    }
}

/// Report of one oracle run for a sequence and one alpha.
#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub claim: String,
    pub pi: Vec<usize>,
    pub class: SequenceClass,
    pub alpha: f64,
    pub class_size: usize,
    pub max_rho: f64,
    pub argmax_canonical: Vec<String>,
    pub builder_rho: f64,
    pub verdict: Verdict,
    /// Distance from the maximum down to the best class below the tie
    /// tolerance; absent when every class ties at the top.
    pub gap: Option<f64>,
}

impl VerificationReport {
    pub fn report_json(&self) -> serde_json::Value {
        json!({
            "claim": self.claim,
            "pi": self.pi,
            "class": self.class,
            "alpha": self.alpha,
            "class_size": self.class_size,
            "max_rho": sig15(self.max_rho),
            "argmax_canonical": self.argmax_canonical,
            "builder_rho": sig15(self.builder_rho),
            "verdict": self.verdict,
            "gap": self.gap.map(sig15),
        })
    }

    pub fn csv_header() -> &'static str {
        "n,pi,alpha,class_size,max_rho,builder_rho,verdict,gap"
    }

    pub fn csv_row(&self) -> String {
        let pi: Vec<String> = self.pi.iter().map(|d| d.to_string()).collect();
        format!(
            "{},{},{},{},{:.14e},{:.14e},{},{}",
            self.pi.len(),
            pi.join(" "),
            self.alpha,
            self.class_size,
            self.max_rho,
            self.builder_rho,
            self.verdict,
            self.gap.map_or(String::new(), |g| format!("{g:.14e}")),
        )
    }
}

fn arithmetic_gate(pi: &DegreeSequence, want_sum: usize, min_n: usize) -> Result<()> {
    if pi.n() < min_n {
        return Err(Error::InvalidSequence(format!(
            "need at least {min_n} vertices"
        )));
    }
    if pi.degrees().contains(&0) {
        return Err(Error::InvalidSequence("entry of degree 0".into()));
    }
    if pi.sum() != want_sum {
        return Err(Error::InvalidSequence(format!(
            "degree sum {} != {want_sum}",
            pi.sum()
        )));
    }
    Ok(())
}

/// Every isomorphism class of trees with degree sequence `pi`, exactly once,
/// sorted by canonical form.
pub fn enumerate_trees(pi: &DegreeSequence) -> Result<Vec<SimpleGraph>> {
    Ok(enumerate_trees_counting(pi)?.0)
}

/// Tree enumeration that also reports how many labeled trees were decoded
/// (the number of distinct multiset permutations).
pub fn enumerate_trees_counting(pi: &DegreeSequence) -> Result<(Vec<SimpleGraph>, u64)> {
    let n = pi.n();
    if n > TREE_ENUM_MAX_VERTICES {
        return Err(Error::TooLarge(n, TREE_ENUM_MAX_VERTICES));
    }
    arithmetic_gate(pi, 2 * (n - 1), 2)?;
    let d = pi.degrees();
    let mut counts: Vec<usize> = d.iter().map(|&x| x - 1).collect();
    let len = 2 * (n - 1) - n; // n - 2 symbols
    let mut classes: BTreeMap<CanonicalForm, SimpleGraph> = BTreeMap::new();
    let mut seq = Vec::with_capacity(len);
    let mut labeled = 0u64;
    permute_multiset(&mut counts, len, &mut seq, &mut |prufer| {
        let tree = decode_prufer(n, prufer);
        labeled += 1;
        let key = canonical_form(&tree).expect("enumeration stays under the size bound");
        classes.entry(key).or_insert(tree);
    });
    Ok((classes.into_values().collect(), labeled))
}

fn permute_multiset(
    counts: &mut Vec<usize>,
    remaining: usize,
    seq: &mut Vec<usize>,
    visit: &mut impl FnMut(&[usize]),
) {
    if remaining == 0 {
        visit(seq);
        return;
    }
    for i in 0..counts.len() {
        if counts[i] == 0 {
            continue;
        }
        counts[i] -= 1;
        seq.push(i);
        permute_multiset(counts, remaining - 1, seq, visit);
        seq.pop();
        counts[i] += 1;
    }
}

/// Standard decode: vertex degrees are symbol multiplicities plus one.
fn decode_prufer(n: usize, prufer: &[usize]) -> SimpleGraph {
    let mut degree = vec![1usize; n];
    for &a in prufer {
        degree[a] += 1;
    }
    let mut leaves: std::collections::BinaryHeap<std::cmp::Reverse<usize>> = (0..n)
        .filter(|&i| degree[i] == 1)
        .map(std::cmp::Reverse)
        .collect();
    let mut g = SimpleGraph::empty(n);
    for &a in prufer {
        let u = leaves.pop().expect("decode always has a leaf").0;
        degree[u] -= 1;
        degree[a] -= 1;
        g.add_edge(u, a).expect("decode produces simple edges");
        if degree[a] == 1 {
            leaves.push(std::cmp::Reverse(a));
        }
    }
    let u = leaves.pop().expect("two leaves remain").0;
    let v = leaves.pop().expect("two leaves remain").0;
    g.add_edge(u, v).expect("decode produces simple edges");
    g
}

/// Number of labeled trees in which vertex `i` has degree `d_i` exactly:
/// the multinomial `(n-2)! / prod (d_i - 1)!`.
pub fn prufer_labeled_count(pi: &DegreeSequence) -> u64 {
    let n = pi.n() as u64;
    let mut count = factorial(n.saturating_sub(2));
    for &d in pi.degrees() {
        count /= factorial(d as u64 - 1);
    }
    count
}

pub fn factorial(k: u64) -> u64 {
    (1..=k).product::<u64>().max(1)
}

/// Number of distinct ways to assign a nonincreasing degree multiset to
/// labels: `n! / prod(multiplicity!)` over repeated values.
pub fn degree_multiset_assignments(pi: &DegreeSequence) -> u64 {
    let mut out = factorial(pi.n() as u64);
    let mut run = 1u64;
    let d = pi.degrees();
    for i in 1..=d.len() {
        if i < d.len() && d[i] == d[i - 1] {
            run += 1;
        } else {
            out /= factorial(run);
            run = 1;
        }
    }
    out
}

/// Every isomorphism class of connected unicyclic graphs with degree
/// sequence `pi`, exactly once, sorted by canonical form. An unrealizable
/// sequence yields an empty list.
pub fn enumerate_unicyclic(pi: &DegreeSequence) -> Result<Vec<SimpleGraph>> {
    let n = pi.n();
    if n > UNICYCLIC_ENUM_MAX_VERTICES {
        return Err(Error::TooLarge(n, UNICYCLIC_ENUM_MAX_VERTICES));
    }
    arithmetic_gate(pi, 2 * n, 3)?;
    let mut residual: Vec<usize> = pi.degrees().to_vec();
    let mut g = SimpleGraph::empty(n);
    let mut classes: BTreeMap<CanonicalForm, SimpleGraph> = BTreeMap::new();
    edge_set_search(&mut g, &mut residual, 0, &mut |graph| {
        if graph.is_connected() {
            let key = canonical_form(graph).expect("enumeration stays under the size bound");
            classes.entry(key).or_insert_with(|| graph.clone());
        }
    });
    Ok(classes.into_values().collect())
}

/// Chooses the higher-labeled neighbors of each vertex in turn; residual
/// degrees prune infeasible branches early.
fn edge_set_search(
    g: &mut SimpleGraph,
    residual: &mut Vec<usize>,
    v: usize,
    visit: &mut impl FnMut(&SimpleGraph),
) {
    let n = residual.len();
    if v == n {
        visit(g);
        return;
    }
    let need = residual[v];
    if need == 0 {
        edge_set_search(g, residual, v + 1, visit);
        return;
    }
    let candidates: Vec<usize> = ((v + 1)..n).filter(|&w| residual[w] > 0).collect();
    if need > candidates.len() {
        return;
    }
    for subset in candidates.into_iter().combinations(need) {
        for &w in &subset {
            g.add_edge(v, w).expect("search edges are simple");
            residual[w] -= 1;
        }
        residual[v] = 0;
        edge_set_search(g, residual, v + 1, visit);
        residual[v] = need;
        for &w in &subset {
            g.remove_edge(v, w);
            residual[w] += 1;
        }
    }
}

/// Brute-force maximization of the spectral radius over all enumerated
/// classes, compared against the corresponding extremal builder.
pub fn extremal_search(pi: &DegreeSequence, alpha: AlphaValue) -> Result<VerificationReport> {
    let mut reports = extremal_search_over(pi, &[alpha])?;
    Ok(reports.pop().expect("one alpha in, one report out"))
}

/// [`extremal_search`] over several alphas, enumerating the class only once.
pub fn extremal_search_over(
    pi: &DegreeSequence,
    alphas: &[AlphaValue],
) -> Result<Vec<VerificationReport>> {
    let validity = pi.validate();
    if !validity.valid {
        return Err(Error::InvalidSequence(validity.reason.unwrap_or_default()));
    }
    let (claim, classes, builder) = match pi.class() {
        SequenceClass::Tree => (
            "tree-degree-sequence-max",
            enumerate_trees(pi)?,
            build_extremal_tree(pi)?.into_graph(),
        ),
        SequenceClass::Unicyclic => (
            "unicyclic-degree-sequence-max",
            enumerate_unicyclic(pi)?,
            build_extremal_unicyclic(pi)?.into_graph(),
        ),
        SequenceClass::General => {
            return Err(Error::Precondition(
                "extremal search covers tree and unicyclic sequences only".into(),
            ))
        }
    };
    let canonicals: Vec<String> = classes
        .iter()
        .map(|g| canonical_form(g).map(|c| c.to_hex()))
        .collect::<Result<_>>()?;
    let builder_hex = canonical_form(&builder)?.to_hex();
    alphas
        .iter()
        .map(|&alpha| {
            let rhos: Vec<f64> = classes
                .par_iter()
                .map(|g| spectral_radius(g, alpha).map(|r| r.rho))
                .collect::<Result<Vec<_>>>()?;
            let max_rho = rhos.iter().copied().fold(f64::NEG_INFINITY, f64::max);
            let argmax_canonical: Vec<String> = canonicals
                .iter()
                .zip(&rhos)
                .filter(|(_, &r)| r >= max_rho - ARGMAX_TOL)
                .map(|(hex, _)| hex.clone())
                .collect();
            let gap = rhos
                .iter()
                .copied()
                .filter(|&r| r < max_rho - ARGMAX_TOL)
                .fold(f64::NEG_INFINITY, f64::max);
            let builder_rho = spectral_radius(&builder, alpha)?.rho;
            let verdict = if !argmax_canonical.contains(&builder_hex)
                || (builder_rho - max_rho).abs() > ARGMAX_TOL
            {
                Verdict::Fail
            } else if argmax_canonical.len() > 1 {
                Verdict::TieWithNonIsomorphic
            } else {
                Verdict::Pass
            };
            Ok(VerificationReport {
                claim: claim.into(),
                pi: pi.degrees().to_vec(),
                class: pi.class(),
                alpha: alpha.value(),
                class_size: classes.len(),
                max_rho,
                argmax_canonical,
                builder_rho,
                verdict,
                gap: if gap.is_finite() {
                    Some(max_rho - gap)
                } else {
                    None
                },
            })
        })
        .collect()
}

/// Structural facts that hold for any graph maximizing the spectral radius
/// within its degree class, checked numerically on one graph.
#[derive(Debug, Clone, Serialize)]
pub struct StructureReport {
    pub violations: Vec<String>,
    pub bfs_ordering_found: bool,
    pub perron_consistent_ordering_found: bool,
}

impl StructureReport {
    pub fn pass(&self) -> bool {
        self.violations.is_empty()
            && self.bfs_ordering_found
            && self.perron_consistent_ordering_found
    }
}

/// Checks, for the Perron vector of `g`: entry order implies degree order
/// and height order from the max-entry root; tied entries have equal
/// degrees; and a BFS-ordering exists that can be made consistent with the
/// entry order.
pub fn check_maximizer_structure(g: &SimpleGraph, alpha: AlphaValue) -> Result<StructureReport> {
    let r = spectral_radius(g, alpha)?;
    let x = &r.perron;
    let n = g.vertex_count();
    let root = (0..n)
        .max_by(|&a, &b| x[a].partial_cmp(&x[b]).expect("finite entries"))
        .expect("nonempty graph");
    let heights = crate::graph::bfs_heights(g, root)?;
    let mut violations = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if u == v {
                continue;
            }
            if x[u] > x[v] + STRUCTURE_TIE_TOL {
                if g.degree(u) < g.degree(v) {
                    violations.push(format!(
                        "entry order violated by degrees: x[{u}] > x[{v}] but d({u}) < d({v})"
                    ));
                }
                if heights[u] > heights[v] {
                    violations.push(format!(
                        "entry order violated by heights: x[{u}] > x[{v}] but h({u}) > h({v})"
                    ));
                }
            } else if u < v
                && (x[u] - x[v]).abs() <= STRUCTURE_TIE_TOL
                && g.degree(u) != g.degree(v)
            {
                violations.push(format!("tied entries with unequal degrees: {u} vs {v}"));
            }
        }
    }
    let bfs_ordering_found = find_bfs_ordering(g)?.is_some();
    let perron_consistent_ordering_found =
        find_bfs_ordering_consistent_with(g, x, STRUCTURE_TIE_TOL)?.is_some();
    Ok(StructureReport {
        violations,
        bfs_ordering_found,
        perron_consistent_ordering_found,
    })
}

/// All valid tree degree sequences on `n` vertices, nonincreasing.
pub fn tree_degree_sequences(n: usize) -> Vec<DegreeSequence> {
    if n < 2 {
        return Vec::new();
    }
    partitions(2 * (n - 1), n, n - 1)
        .into_iter()
        .map(|d| DegreeSequence::new(d, SequenceClass::Tree).expect("nonempty partition"))
        .collect()
}

/// All positive nonincreasing sequences on `n` vertices with sum `2n`,
/// tagged unicyclic. Realizability is intentionally not filtered here so
/// the validator and the enumeration can be cross-checked against each
/// other; use [`DegreeSequence::validate`] to keep the graphic ones.
pub fn unicyclic_degree_sequences(n: usize) -> Vec<DegreeSequence> {
    if n < 3 {
        return Vec::new();
    }
    partitions(2 * n, n, n)
        .into_iter()
        .map(|d| DegreeSequence::new(d, SequenceClass::Unicyclic).expect("nonempty partition"))
        .collect()
}

/// Partitions of `sum` into exactly `parts` nonincreasing entries in
/// `1..=max_part`.
fn partitions(sum: usize, parts: usize, max_part: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(parts);
    fn recurse(
        sum: usize,
        parts: usize,
        max_part: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if parts == 0 {
            if sum == 0 {
                out.push(cur.clone());
            }
            return;
        }
        // remaining entries are at least 1 and at most max_part each
        let hi = max_part.min(sum.saturating_sub(parts - 1));
        for d in (1..=hi).rev() {
            // nonincreasing continuation caps the reachable sum at d * parts
            if d * parts < sum {
                break;
            }
            cur.push(d);
            recurse(sum - d, parts - 1, d, cur, out);
            cur.pop();
        }
    }
    recurse(sum, parts, max_part, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cycle_graph, SimpleGraph};

    fn alpha(v: f64) -> AlphaValue {
        AlphaValue::new(v).unwrap()
    }

    fn tree_seq(d: &[usize]) -> DegreeSequence {
        DegreeSequence::new(d.to_vec(), SequenceClass::Tree).unwrap()
    }

    fn uni_seq(d: &[usize]) -> DegreeSequence {
        DegreeSequence::new(d.to_vec(), SequenceClass::Unicyclic).unwrap()
    }

    #[test]
    fn unique_tree_classes() {
        assert_eq!(enumerate_trees(&tree_seq(&[2, 2, 1, 1])).unwrap().len(), 1);
        assert_eq!(enumerate_trees(&tree_seq(&[3, 1, 1, 1])).unwrap().len(), 1);
    }

    #[test]
    fn two_spider_classes() {
        let classes = enumerate_trees(&tree_seq(&[3, 2, 2, 1, 1, 1])).unwrap();
        assert_eq!(classes.len(), 2);
    }

    #[test]
    fn labeled_count_matches_formula() {
        for d in [
            vec![2, 2, 1, 1],
            vec![3, 2, 2, 1, 1, 1],
            vec![3, 3, 2, 1, 1, 1, 1],
        ] {
            let pi = tree_seq(&d);
            let (_, labeled) = enumerate_trees_counting(&pi).unwrap();
            assert_eq!(labeled, prufer_labeled_count(&pi));
        }
    }

    #[test]
    fn tree_bound_is_enforced() {
        let pi = tree_seq(&[2, 2, 2, 2, 2, 2, 2, 2, 2, 1, 1]);
        assert!(enumerate_trees(&pi).is_err());
    }

    #[test]
    fn cycle_is_only_all_twos_unicyclic() {
        let classes = enumerate_unicyclic(&uni_seq(&[2, 2, 2])).unwrap();
        assert_eq!(classes.len(), 1);
        assert_eq!(
            canonical_form(&classes[0]).unwrap(),
            canonical_form(&cycle_graph(3)).unwrap()
        );
    }

    #[test]
    fn triangle_with_pendant_is_unique() {
        let classes = enumerate_unicyclic(&uni_seq(&[3, 2, 2, 1])).unwrap();
        assert_eq!(classes.len(), 1);
    }

    /// Regression value: enumeration by cycle length gives four classes,
    /// two on a triangle (split pendants, cherry) and two on a square
    /// (adjacent or opposite hubs).
    #[test]
    fn class_count_for_two_hubs_two_leaves() {
        let classes = enumerate_unicyclic(&uni_seq(&[3, 3, 2, 2, 1, 1])).unwrap();
        assert_eq!(classes.len(), 4);
    }

    #[test]
    fn unrealizable_sequence_enumerates_empty() {
        let classes = enumerate_unicyclic(&uni_seq(&[4, 4, 1, 1, 1, 1])).unwrap();
        assert!(classes.is_empty());
    }

    #[test]
    fn extremal_search_passes_on_spiders() {
        let report = extremal_search(&tree_seq(&[3, 2, 2, 1, 1, 1]), alpha(0.5)).unwrap();
        assert_eq!(report.verdict, Verdict::Pass);
        assert_eq!(report.class_size, 2);
        assert!(report.gap.unwrap() > 0.0);
    }

    #[test]
    fn extremal_search_trivial_class() {
        let report = extremal_search(&uni_seq(&[2, 2, 2, 2, 2]), alpha(0.3)).unwrap();
        assert_eq!(report.verdict, Verdict::Pass);
        assert_eq!(report.class_size, 1);
        assert!(report.gap.is_none());
    }

    #[test]
    fn extremal_search_passes_on_unicyclic() {
        let report = extremal_search(&uni_seq(&[3, 3, 2, 2, 1, 1]), alpha(0.0)).unwrap();
        assert_eq!(report.verdict, Verdict::Pass);
        assert_eq!(report.class_size, 4);
    }

    #[test]
    fn maximizer_structure_on_extremal_tree() {
        let g = build_extremal_tree(&tree_seq(&[3, 2, 2, 1, 1, 1]))
            .unwrap()
            .into_graph();
        let report = check_maximizer_structure(&g, alpha(0.5)).unwrap();
        assert!(report.pass(), "{report:?}");
    }

    #[test]
    fn maximizer_structure_on_cycle_is_vacuous() {
        let report = check_maximizer_structure(&cycle_graph(6), alpha(0.2)).unwrap();
        assert!(report.pass());
    }

    #[test]
    fn non_extremal_tree_may_fail_structure() {
        // spider with legs (3,1,1): not the maximizer; the report records
        // whatever fails without erroring
        let g = SimpleGraph::from_edge_list(6, &[(0, 1), (0, 2), (0, 3), (3, 4), (4, 5)]).unwrap();
        let report = check_maximizer_structure(&g, alpha(0.5)).unwrap();
        let _ = report.pass();
    }

    #[test]
    fn sequence_generators_cover_small_cases() {
        assert_eq!(tree_degree_sequences(4).len(), 2); // (2,2,1,1) and (3,1,1,1)
        let u4 = unicyclic_degree_sequences(4);
        // partitions of 8 into 4 positive parts with parts <= 4
        assert!(u4.iter().any(|p| p.degrees() == [2, 2, 2, 2]));
        assert!(u4.iter().any(|p| p.degrees() == [3, 2, 2, 1]));
        for p in &u4 {
            assert_eq!(p.sum(), 8);
        }
    }

    #[test]
    fn paths_have_expected_heights_in_reports() {
        // smoke: a path is its own class and passes
        let report = extremal_search(&tree_seq(&[2, 2, 2, 1, 1]), alpha(0.2)).unwrap();
        assert_eq!(report.class_size, 1);
        assert_eq!(report.verdict, Verdict::Pass);
        let j = report.report_json();
        assert_eq!(j["claim"], "tree-degree-sequence-max");
        assert_eq!(j["verdict"], "Pass");
        let row = report.csv_row();
        assert!(row.starts_with("5,2 2 2 1 1,0.2,1,"));
    }
}
