//! Saturated initial ideals of J for the two-conics-and-a-cubic complex,
//! with weight (0, 0, 1).

use splinedim::cli::ComplexDocument;
use splinedim::groebner::{initial_ideal, saturate_irrelevant};
use splinedim::hilbert::multiplicity;
use splinedim::polyring::WeightVector;

fn main() {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/examples/complexes/repeated_tangent.json");
    let doc = ComplexDocument::load(path.as_ref()).unwrap();
    let w = WeightVector::new(vec![0, 0, 1]);
    for r in 0..=4 {
        let j = doc.complex(r).unwrap().j_ideal();
        let sat = saturate_irrelevant(&initial_ideal(&j, &w).unwrap()).unwrap();
        println!("r = {r}: {}  multiplicity {}", sat, multiplicity(&j).unwrap());
    }
}
