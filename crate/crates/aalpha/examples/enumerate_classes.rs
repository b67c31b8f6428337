//! Enumerate every isomorphism class of trees and of unicyclic graphs with
//! a prescribed degree sequence and rank the classes by spectral radius.

use aalpha::graph::{canonical_form, DegreeSequence, SequenceClass};
use aalpha::oracle::{enumerate_trees, enumerate_unicyclic};
use aalpha::spectrum::{spectral_radius, AlphaValue};

fn main() {
    let alpha = AlphaValue::new(0.5).unwrap();

    let pi = DegreeSequence::parse("3,3,2,1,1,1,1", SequenceClass::Tree).unwrap();
    println!("trees with degree sequence ({pi}):");
    let mut rows: Vec<(f64, String, String)> = enumerate_trees(&pi)
        .unwrap()
        .iter()
        .map(|t| {
            (
                spectral_radius(t, alpha).unwrap().rho,
                format!("{:?}", t.edges()),
                canonical_form(t).unwrap().to_hex(),
            )
        })
        .collect();
    rows.sort_by(|a, b| b.0.partial_cmp(&a.0).unwrap());
    for (rho, edges, hex) in &rows {
        println!("  rho = {rho:.10}  {edges}  canon {hex}");
    }

    let pi = DegreeSequence::parse("3,3,2,2,1,1", SequenceClass::Unicyclic).unwrap();
    println!("\nunicyclic graphs with degree sequence ({pi}):");
    for g in enumerate_unicyclic(&pi).unwrap() {
        let rho = spectral_radius(&g, alpha).unwrap().rho;
        println!("  rho = {rho:.10}  {:?}", g.edges());
    }
}
