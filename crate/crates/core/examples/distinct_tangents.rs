//! Distinct tangents: the Hilbert polynomial from the tangent powers and the
//! degree from which it is guaranteed to give dim C^r_d.

use splinedim::cli::ComplexDocument;
use splinedim::closed_forms::{distinct_tangent_hp, validity_thresholds};
use splinedim::spline_complex::FormulaOracle;

fn main() {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/examples/complexes/line_two_circles.json");
    let doc = ComplexDocument::load(path.as_ref()).unwrap();
    for r in 0..=5 {
        let c = doc.complex(r).unwrap();
        let closed = distinct_tangent_hp(&c.degrees(), r).unwrap();
        let th = validity_thresholds(&c.degrees(), r);
        let oracle = FormulaOracle::new(&c, r).unwrap();
        assert_eq!(closed.hp, oracle.hilbert_polynomial());
        println!(
            "r = {r}: HP {}  postulation {}  bounds {} / {}",
            closed.hp,
            oracle.postulation(),
            th.three_curve.map_or(-1, |t| t as i64 - 1),
            th.general
        );
    }
}
