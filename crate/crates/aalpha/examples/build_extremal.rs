//! Build the extremal tree and extremal unicyclic graph for a few degree
//! sequences and show their edge lists and layer structure.

use aalpha::builders::{build_extremal_tree, build_extremal_unicyclic};
use aalpha::graph::{check_bfs_ordering, format_edge_list, DegreeSequence, SequenceClass};

fn main() {
    let tree_sequences = ["3,1,1,1", "3,2,2,1,1,1", "4,3,2,1,1,1,1,1"];
    for text in tree_sequences {
        let pi = DegreeSequence::parse(text, SequenceClass::Tree).unwrap();
        let built = build_extremal_tree(&pi).unwrap();
        println!("extremal tree for ({text}):");
        print!("{}", format_edge_list(built.graph()));
        println!("layers: {:?}", built.layers());
        println!(
            "construction order is a BFS-ordering: {}\n",
            check_bfs_ordering(built.graph(), &built.construction_ordering())
        );
    }

    let unicyclic_sequences = ["2,2,2,2", "3,2,2,1", "3,3,2,2,1,1", "5,2,2,2,2,2,2,1,1,1"];
    for text in unicyclic_sequences {
        let pi = DegreeSequence::parse(text, SequenceClass::Unicyclic).unwrap();
        let built = build_extremal_unicyclic(&pi).unwrap();
        println!("extremal unicyclic graph for ({text}):");
        print!("{}", format_edge_list(built.graph()));
        println!("layer annotations: {}\n", built.layer_annotations());
    }
}
