//! Curves in a pencil: the spline module is free, so its Hilbert function is
//! known in every degree. The four conic pencils of the corpus all give the
//! same table.

use splinedim::cli::ComplexDocument;
use splinedim::closed_forms::pencil_structure;
use splinedim::spline_complex::{classify_configuration, Configuration, FormulaOracle};

fn main() {
    let dir = concat!(env!("CARGO_MANIFEST_DIR"), "/examples/complexes");
    for name in ["pencil_four_real", "pencil_two_complex", "pencil_one_double", "pencil_two_double"] {
        let doc = ComplexDocument::load(format!("{dir}/{name}.json").as_ref()).unwrap();
        let c = doc.default_complex().unwrap();
        let Configuration::Pencil { edges, s, n, .. } = classify_configuration(&c) else {
            panic!("{name} is not a pencil");
        };
        for r in 0..=4 {
            let p = pencil_structure(edges, s, n, r).unwrap();
            let oracle = FormulaOracle::new(&doc.complex(r).unwrap(), r).unwrap();
            assert!((0..=13).all(|d| p.hilbert_function(d) == oracle.dim(d)));
        }
        println!("{name}: closed form matches the oracle for r <= 4, d <= 13");
    }
    for r in 0..=4 {
        let p = pencil_structure(3, 3, 2, r).unwrap();
        let row: Vec<String> = (0..=13).map(|d| p.hilbert_function(d).to_string()).collect();
        println!("r = {r}: {}  free summands in degrees {:?}, HP {}", row.join(" "), p.summand_degrees, p.hilbert_polynomial());
    }
}
