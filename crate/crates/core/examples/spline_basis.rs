//! An explicit basis of C^0_3 on the line-and-two-circles complex.

use splinedim::cli::ComplexDocument;
use splinedim::spline_complex::{is_spline, spline_basis};

fn main() {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/examples/complexes/line_two_circles.json");
    let c = ComplexDocument::load(path.as_ref()).unwrap().complex(0).unwrap();
    let basis = spline_basis(&c, 3);
    println!("{} splines", basis.len());
    for s in &basis {
        assert!(is_spline(&c, &s.parts).unwrap());
        println!("{s}");
    }
}
