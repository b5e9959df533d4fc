//! Three conics with distinct tangents at smoothness 4: the saturation of J
//! is not contained in the ideal of tangent powers.

use splinedim::cli::ComplexDocument;
use splinedim::closed_forms::tangent_power_ideal;
use splinedim::groebner::saturate_irrelevant;
use splinedim::hilbert::minimal_generators;

fn main() {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/examples/complexes/conics_saturation.json");
    let c = ComplexDocument::load(path.as_ref()).unwrap().default_complex().unwrap();
    let r = c.default_smoothness();
    let j = c.j_ideal();
    let i = tangent_power_ideal(&c, r);
    println!("tangent powers I = {i}");
    for (k, g) in j.generators().iter().enumerate() {
        println!("G{}^{} in I: {}", k + 1, r + 1, i.contains(g));
    }
    let sat = minimal_generators(&saturate_irrelevant(&j).unwrap()).unwrap();
    println!("(J : m^inf) =");
    for g in sat.generators() {
        println!("  {g}   in I: {}", i.contains(g));
    }
}
