//! Verify that the greedy constructions attain the enumerated maximum of
//! the spectral radius, over a small sweep of sequences and alphas, and
//! print the reports as JSON.

use aalpha::graph::{DegreeSequence, SequenceClass};
use aalpha::oracle::{extremal_search_over, VerificationReport};
use aalpha::spectrum::AlphaValue;

fn main() {
    let alphas: Vec<AlphaValue> = [0.0, 0.2, 0.5, 0.8]
        .iter()
        .map(|&a| AlphaValue::new(a).unwrap())
        .collect();
    let cases = [
        ("3,2,2,1,1,1", SequenceClass::Tree),
        ("4,2,2,2,1,1,1,1", SequenceClass::Tree),
        ("3,3,2,2,1,1", SequenceClass::Unicyclic),
        ("4,3,3,2,1,1,1,1", SequenceClass::Unicyclic),
    ];
    println!("{}", VerificationReport::csv_header());
    for (text, class) in cases {
        let pi = DegreeSequence::parse(text, class).unwrap();
        for report in extremal_search_over(&pi, &alphas).unwrap() {
            println!("{}", report.csv_row());
        }
    }

    // one full JSON report for inspection
    let pi = DegreeSequence::parse("3,3,2,2,1,1", SequenceClass::Unicyclic).unwrap();
    let report = &extremal_search_over(&pi, &alphas[..1]).unwrap()[0];
    println!(
        "\n{}",
        serde_json::to_string_pretty(&report.report_json()).unwrap()
    );
}
