//! Sweep the spectral radius over an alpha grid for the extremal tree of
//! one degree sequence, emitting the same CSV the `sweep` subcommand
//! writes.

use aalpha::builders::build_extremal_tree;
use aalpha::graph::{DegreeSequence, SequenceClass};
use aalpha::spectrum::{spectral_radius, AlphaValue};

fn main() {
    let pi = DegreeSequence::parse("4,3,2,2,1,1,1,1,1", SequenceClass::Tree).unwrap();
    let g = build_extremal_tree(&pi).unwrap().into_graph();
    println!("alpha,rho");
    for i in 0..20 {
        let alpha = AlphaValue::new(i as f64 / 20.0).unwrap();
        let r = spectral_radius(&g, alpha).unwrap();
        println!("{},{:.14e}", alpha.value(), r.rho);
    }
}
