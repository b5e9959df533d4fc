//! dim C^r_d for the line-and-two-circles complex, by the Hilbert-function
//! formula and by the kernel of the smoothness conditions.

use splinedim::cli::ComplexDocument;
use splinedim::spline_complex::{dim_kernel, FormulaOracle};

fn main() {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/examples/complexes/line_two_circles.json");
    let doc = ComplexDocument::load(path.as_ref()).unwrap();
    for r in 0..=3 {
        let c = doc.complex(r).unwrap();
        let oracle = FormulaOracle::new(&c, r).unwrap();
        let dims: Vec<u64> = (0..=13).map(|d| oracle.dim(d)).collect();
        for (d, &dim) in dims.iter().enumerate() {
            assert_eq!(dim, dim_kernel(&c, d as u32));
        }
        let row: Vec<String> = dims.iter().map(u64::to_string).collect();
        println!("r = {r}: {}", row.join(" "));
        println!("       HP {}, postulation {}", oracle.hilbert_polynomial(), oracle.postulation());
    }
}
