//! Climb from a deliberately unbalanced tree to the spectral-radius
//! maximizer of its degree class, printing the move trace as JSON lines.

use aalpha::graph::{degree_sequence, format_edge_list, SimpleGraph};
use aalpha::perturb::{hill_climb, trace_to_jsonl};
use aalpha::spectrum::AlphaValue;

fn main() {
    // spider with legs (4, 2, 1): same degree sequence as the balanced one
    let start =
        SimpleGraph::from_edge_list(8, &[(0, 1), (0, 2), (0, 3), (1, 4), (4, 5), (5, 6), (2, 7)])
            .unwrap();
    let alpha = AlphaValue::new(0.5).unwrap();
    println!("start ({}):", degree_sequence(&start));
    print!("{}", format_edge_list(&start));

    let outcome = hill_climb(&start, alpha, 64).unwrap();
    println!("\ntrace ({} moves):", outcome.trace.len());
    print!("{}", trace_to_jsonl(&outcome.trace));

    println!("\nlocal optimum:");
    print!("{}", format_edge_list(&outcome.graph));
}
