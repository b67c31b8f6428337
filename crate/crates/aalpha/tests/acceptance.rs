//! Acceptance suite: one test per release criterion, each printing a
//! PASS line with its coverage once every assertion inside has held.
//!
//! Run with `cargo test --release --test acceptance -- --nocapture`.

use aalpha::builders::{attach_two_paths, build_extremal_tree, build_extremal_unicyclic};
use aalpha::fuzz::{bounds_corpus, run_fuzz, FuzzConfig, FuzzTarget};
use aalpha::graph::{
    automorphism_count, canonical_form, cycle_graph, find_bfs_ordering, star_graph, DegreeSequence,
    SequenceClass,
};
use aalpha::oracle::{
    check_maximizer_structure, degree_multiset_assignments, enumerate_trees,
    enumerate_trees_counting, enumerate_unicyclic, extremal_search_over, factorial,
    prufer_labeled_count, tree_degree_sequences, unicyclic_degree_sequences, Verdict, ARGMAX_TOL,
};
use aalpha::spectrum::{
    dense_spectral_radius, power_iteration, spectral_bounds, spectral_radius, AlphaValue,
    CROSS_SOLVER_TOL,
};

const SWEEP_ALPHAS: [f64; 4] = [0.0, 0.2, 0.5, 0.8];
const CORPUS_ALPHAS: [f64; 4] = [0.0, 0.3, 0.5, 0.9];
const GRID_ALPHAS: [f64; 4] = [0.0, 0.3, 0.5, 0.8];

fn alphas(values: &[f64]) -> Vec<AlphaValue> {
    values
        .iter()
        .map(|&a| AlphaValue::new(a).unwrap())
        .collect()
}

/// Criterion 1: for every tree degree sequence with 4 <= n <= 9 and four
/// alphas, the greedy tree attains the enumerated maximum, uniquely.
#[test]
fn acceptance_01_tree_extremal_sweep() {
    let grid = alphas(&SWEEP_ALPHAS);
    let mut sequences = 0usize;
    let mut runs = 0usize;
    for n in 4..=9 {
        for pi in tree_degree_sequences(n) {
            sequences += 1;
            let reports = extremal_search_over(&pi, &grid).unwrap();
            for r in reports {
                runs += 1;
                assert_eq!(
                    r.verdict,
                    Verdict::Pass,
                    "pi={pi} alpha={} verdict={:?} max={} builder={}",
                    r.alpha,
                    r.verdict,
                    r.max_rho,
                    r.builder_rho
                );
            }
        }
    }
    println!("ACCEPTANCE 01 tree extremal sweep: PASS ({sequences} sequences, {runs} runs)");
}

/// Criterion 2: same sweep over every realizable unicyclic sequence with
/// 3 <= n <= 8; arithmetic-only sequences must enumerate empty and fail
/// validation, realizable ones must Pass.
#[test]
fn acceptance_02_unicyclic_extremal_sweep() {
    let grid = alphas(&SWEEP_ALPHAS);
    let mut sequences = 0usize;
    let mut runs = 0usize;
    let mut rejected = 0usize;
    for n in 3..=8 {
        for pi in unicyclic_degree_sequences(n) {
            if !pi.validate().valid {
                rejected += 1;
                assert!(
                    enumerate_unicyclic(&pi).unwrap().is_empty(),
                    "invalid {pi} still enumerated a graph"
                );
                assert!(build_extremal_unicyclic(&pi).is_err());
                continue;
            }
            sequences += 1;
            let reports = extremal_search_over(&pi, &grid).unwrap();
            for r in reports {
                runs += 1;
                assert_eq!(
                    r.verdict,
                    Verdict::Pass,
                    "pi={pi} alpha={} verdict={:?} max={} builder={}",
                    r.alpha,
                    r.verdict,
                    r.max_rho,
                    r.builder_rho
                );
            }
        }
    }
    println!(
        "ACCEPTANCE 02 unicyclic extremal sweep: PASS ({sequences} sequences, {runs} runs, {rejected} unrealizable rejected consistently)"
    );
}

/// Criterion 3: among all trees with a given sequence (n <= 9), exactly the
/// class of the greedy tree admits a BFS-ordering.
#[test]
fn acceptance_03_bfs_ordering_uniqueness() {
    let mut trees_checked = 0usize;
    for n in 2..=9 {
        for pi in tree_degree_sequences(n) {
            let target = canonical_form(build_extremal_tree(&pi).unwrap().graph()).unwrap();
            for t in enumerate_trees(&pi).unwrap() {
                trees_checked += 1;
                let has_ordering = find_bfs_ordering(&t).unwrap().is_some();
                let is_target = canonical_form(&t).unwrap() == target;
                assert_eq!(
                    has_ordering,
                    is_target,
                    "pi={pi}: ordering={has_ordering} but extremal={is_target} for {:?}",
                    t.edges()
                );
            }
        }
    }
    println!("ACCEPTANCE 03 BFS-ordering uniqueness: PASS ({trees_checked} trees checked)");
}

/// Criterion 4: every enumerated argmax graph passes the maximizer
/// structure checks with zero violated clauses.
#[test]
fn acceptance_04_maximizer_structure() {
    let grid = alphas(&SWEEP_ALPHAS);
    let mut argmaxes = 0usize;
    let mut run = |classes: Vec<aalpha::SimpleGraph>| {
        for &alpha in &grid {
            let rhos: Vec<f64> = classes
                .iter()
                .map(|g| spectral_radius(g, alpha).unwrap().rho)
                .collect();
            let max = rhos.iter().copied().fold(f64::NEG_INFINITY, f64::max);
            for (g, &rho) in classes.iter().zip(&rhos) {
                if rho < max - ARGMAX_TOL {
                    continue;
                }
                argmaxes += 1;
                let report = check_maximizer_structure(g, alpha).unwrap();
                assert!(
                    report.pass(),
                    "alpha={alpha} edges={:?} report={report:?}",
                    g.edges()
                );
            }
        }
    };
    for n in 2..=9 {
        for pi in tree_degree_sequences(n) {
            run(enumerate_trees(&pi).unwrap());
        }
    }
    for n in 3..=8 {
        for pi in unicyclic_degree_sequences(n) {
            if pi.validate().valid {
                run(enumerate_unicyclic(&pi).unwrap());
            }
        }
    }
    println!("ACCEPTANCE 04 maximizer structure: PASS ({argmaxes} argmax checks)");
}

/// Criterion 5: 500 seeded neighbor-shift instances, zero strictness
/// violations at relative margin 1e-10.
#[test]
fn acceptance_05_shift_fuzz() {
    let report = run_fuzz(
        FuzzTarget::NeighborShift,
        FuzzConfig {
            seed: 42,
            cases: 500,
        },
    )
    .unwrap();
    assert!(report.passed(), "counterexamples: {:#?}", report.violations);
    println!("ACCEPTANCE 05 neighbor-shift fuzz: PASS (500 cases, 0 violations)");
}

/// Criterion 6: 500 seeded two-swap instances, zero violations of the
/// non-strict half and zero of the strict half beyond Perron ties.
#[test]
fn acceptance_06_swap_fuzz() {
    let report = run_fuzz(
        FuzzTarget::TwoSwap,
        FuzzConfig {
            seed: 42,
            cases: 500,
        },
    )
    .unwrap();
    assert!(report.passed(), "counterexamples: {:#?}", report.violations);
    println!(
        "ACCEPTANCE 06 two-swap fuzz: PASS (500 cases, 0 violations, {} ties downgraded)",
        report.downgraded_ties
    );
}

/// Criterion 7: 500 seeded subdivision instances on internal-path edges of
/// non-regular connected graphs above the radius-2 floor; the radius drops
/// strictly at alpha in {0, 0.5, 0.9} every time.
#[test]
fn acceptance_07_subdivision_fuzz() {
    let report = run_fuzz(
        FuzzTarget::Subdivision,
        FuzzConfig {
            seed: 42,
            cases: 500,
        },
    )
    .unwrap();
    assert!(report.passed(), "counterexamples: {:#?}", report.violations);
    println!("ACCEPTANCE 07 subdivision fuzz: PASS (500 cases x 3 alphas, 0 violations)");
}

/// Criterion 8: balancing the two pendant paths strictly increases the
/// radius on the whole (k, s) grid at four alphas.
#[test]
fn acceptance_08_path_balance_grid() {
    let bases: Vec<(&str, aalpha::SimpleGraph, usize)> = vec![
        ("triangle", cycle_graph(3), 0),
        (
            "triangle+pendant",
            attach_two_paths(&cycle_graph(3), 0, 1, 0).unwrap(),
            0,
        ),
        ("star3", star_graph(3), 0),
        ("star4", star_graph(4), 0),
    ];
    let grid = alphas(&GRID_ALPHAS);
    let mut comparisons = 0usize;
    for (name, base, w) in &bases {
        for s in 1..=6usize {
            for k in (s + 2)..=8usize {
                let unbalanced = attach_two_paths(base, *w, k, s).unwrap();
                let balanced = attach_two_paths(base, *w, k - 1, s + 1).unwrap();
                for &alpha in &grid {
                    let lo = spectral_radius(&unbalanced, alpha).unwrap().rho;
                    let hi = spectral_radius(&balanced, alpha).unwrap().rho;
                    assert!(
                        lo >= 2.0 - 1e-12,
                        "{name} k={k} s={s}: radius fell under the floor"
                    );
                    assert!(lo < hi, "{name} k={k} s={s} alpha={alpha}: {lo} !< {hi}");
                    comparisons += 1;
                }
            }
        }
    }
    println!("ACCEPTANCE 08 path-balance grid: PASS ({comparisons} comparisons)");
}

/// Criterion 9: on 200 random connected graphs and four alphas the radius
/// sits in the sandwich, respects the degree lower bound, and touches the
/// max degree exactly on regular graphs.
///
/// Pinned witness for the bound's second branch: the linear form
/// `alpha*max_degree + 1 - alpha` is NOT a lower bound past alpha = 1/2
/// (the star K_{1,3} at alpha = 0.75 sits at (3+sqrt(3))/2 < 2.5), which is
/// why the star-tight form is used there.
#[test]
fn acceptance_09_bounds_corpus() {
    let a075 = AlphaValue::new(0.75).unwrap();
    let star_rho = spectral_radius(&star_graph(3), a075).unwrap().rho;
    assert!((star_rho - (3.0 + 3f64.sqrt()) / 2.0).abs() < 1e-10);
    assert!(
        star_rho < 0.75 * 3.0 + 0.25,
        "linear form would have to fail here"
    );
    assert!(
        star_rho
            >= spectral_bounds(&star_graph(3), a075)
                .unwrap()
                .lower_alpha_degree
    );

    let corpus = bounds_corpus(2024, 200, 12);
    assert_eq!(corpus.len(), 200);
    let grid = alphas(&CORPUS_ALPHAS);
    let mut checks = 0usize;
    for g in &corpus {
        for &alpha in &grid {
            let r = spectral_radius(g, alpha).unwrap();
            let b = spectral_bounds(g, alpha).unwrap();
            assert!(
                r.rho >= b.lower_adjacency - 1e-10,
                "adjacency lower bound failed on {:?}",
                g.edges()
            );
            assert!(
                r.rho <= b.upper_max_degree + 1e-12,
                "max-degree upper bound failed on {:?}",
                g.edges()
            );
            assert!(
                r.rho >= b.lower_alpha_degree - 1e-10,
                "degree lower bound failed on {:?}",
                g.edges()
            );
            let touches = (r.rho - b.upper_max_degree).abs() <= 1e-9;
            assert_eq!(
                touches,
                g.is_regular(),
                "equality case mismatch on {:?} at alpha={alpha}: rho={} delta={}",
                g.edges(),
                r.rho,
                b.upper_max_degree
            );
            checks += 1;
        }
    }
    println!("ACCEPTANCE 09 bounds corpus: PASS ({checks} graph/alpha checks)");
}

/// Criterion 10: the iterative and dense routes agree to 1e-8 on the
/// corpus, on every sweep builder, and on the grid gadgets.
#[test]
fn acceptance_10_solver_cross_check() {
    let mut graphs: Vec<aalpha::SimpleGraph> = bounds_corpus(2024, 200, 12);
    for n in 4..=9 {
        for pi in tree_degree_sequences(n) {
            graphs.push(build_extremal_tree(&pi).unwrap().into_graph());
        }
    }
    for n in 3..=8 {
        for pi in unicyclic_degree_sequences(n) {
            if pi.validate().valid {
                graphs.push(build_extremal_unicyclic(&pi).unwrap().into_graph());
            }
        }
    }
    for s in 1..=6usize {
        for k in (s + 2)..=8usize {
            graphs.push(attach_two_paths(&cycle_graph(3), 0, k, s).unwrap());
        }
    }
    let grid = alphas(&CORPUS_ALPHAS);
    let mut compared = 0usize;
    let mut fallbacks = 0usize;
    for g in &graphs {
        for &alpha in &grid {
            let dense = dense_spectral_radius(g, alpha).unwrap();
            match power_iteration(g, alpha) {
                Ok(p) => {
                    assert!(
                        (p.rho - dense.rho).abs() <= CROSS_SOLVER_TOL,
                        "solver disagreement {} vs {} on {:?}",
                        p.rho,
                        dense.rho,
                        g.edges()
                    );
                    compared += 1;
                }
                Err(_) => fallbacks += 1,
            }
            // the shipped route agrees with the dense oracle regardless
            let shipped = spectral_radius(g, alpha).unwrap();
            assert!((shipped.rho - dense.rho).abs() <= CROSS_SOLVER_TOL);
        }
    }
    assert_eq!(fallbacks, 0, "power iteration unexpectedly hit its cap");
    println!(
        "ACCEPTANCE 10 solver cross-check: PASS ({compared} agreements, {fallbacks} fallbacks)"
    );
}

/// Criterion 11: enumeration completeness. The decoded stream matches the
/// fixed-assignment count, and summing n!/|Aut| over classes matches the
/// labeled count over all assignments of the degree multiset.
#[test]
fn acceptance_11_enumeration_self_test() {
    let mut sequences = 0usize;
    for n in 2..=8usize {
        for pi in tree_degree_sequences(n) {
            let (classes, decoded) = enumerate_trees_counting(&pi).unwrap();
            let fixed = prufer_labeled_count(&pi);
            assert_eq!(decoded, fixed, "decoded stream mismatch for {pi}");

            let n_fact = factorial(n as u64);
            let sum_over_classes: u64 = classes
                .iter()
                .map(|t| n_fact / automorphism_count(t).unwrap())
                .sum();
            let assignments = degree_multiset_assignments(&pi);
            assert_eq!(
                sum_over_classes,
                fixed * assignments,
                "orbit count mismatch for {pi}"
            );
            sequences += 1;
        }
    }
    println!("ACCEPTANCE 11 enumeration self-test: PASS ({sequences} sequences)");
}

/// Cross-cutting sanity shared by the criteria above: the degree sequence
/// generators only produce valid input.
#[test]
fn acceptance_generators_are_sound() {
    for n in 2..=9 {
        for pi in tree_degree_sequences(n) {
            assert!(pi.validate().valid);
            assert_eq!(pi.class(), SequenceClass::Tree);
            assert_eq!(pi.sum(), 2 * (n - 1));
        }
    }
    for n in 3..=8 {
        for pi in unicyclic_degree_sequences(n) {
            assert_eq!(pi.sum(), 2 * n);
            let _ = DegreeSequence::new(pi.degrees().to_vec(), SequenceClass::Unicyclic).unwrap();
        }
    }
    println!("ACCEPTANCE generators: PASS");
}
