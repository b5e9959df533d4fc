//! Linkage by a complete intersection of two cubics: the Hilbert function of
//! nine points, and the cubics through eight of them.

use splinedim::closed_forms::{cayley_bacharach_dim, linked_hilbert_function};
use splinedim::groebner::Ideal;
use splinedim::hilbert::hilbert_function_upto;
use splinedim::polyring::{parse_polynomial, VarSet};

fn main() {
    let linked: Vec<u64> = (0..=8).map(|d| linked_hilbert_function(3, 3, 3, d).unwrap()).collect();
    println!("linked HF, cubics through 8 of 9 points: {linked:?}");

    // nine points {0, 1, -1} x {0, 1, -1}
    let v = VarSet::xyz();
    let k = Ideal::parse(&v, &["x^3 - x*z^2", "y^3 - y*z^2"]).unwrap();
    println!("HF(S/K): {:?}", hilbert_function_upto(&k, 8).unwrap());
    let gamma = parse_polynomial("x^2*z + 3*y^2*z + 2*y^3", &v).unwrap();
    for d in 0..=6 {
        println!("d = {d}: {}", cayley_bacharach_dim(&k, &gamma, d).unwrap());
    }
}
