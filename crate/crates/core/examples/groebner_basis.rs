//! Reduced Gröbner bases, ideal membership and saturation.

use splinedim::groebner::{saturate_irrelevant, Ideal, MonomialOrder};
use splinedim::polyring::{parse_polynomial, VarSet};

fn main() {
    let v = VarSet::xyz();
    let i = Ideal::parse(&v, &["y*z - x^2", "x*z + y^2"]).unwrap();
    let gb = i.groebner(&MonomialOrder::Grevlex).unwrap();
    println!("grevlex basis of {i}:");
    for g in gb.basis() {
        println!("  {g}");
    }

    let f = parse_polynomial("x^3 + x*y^2", &v).unwrap();
    println!("{f} in I: {}", i.contains(&f));

    // <xz, yz> = <z> ∩ <x, y> has no component at the irrelevant ideal
    let j = Ideal::parse(&v, &["x*z", "y*z"]).unwrap();
    println!("(<xz, yz> : m^inf) = {}", saturate_irrelevant(&j).unwrap());

    let k = Ideal::parse(&v, &["x^2", "x*y", "x*z"]).unwrap();
    println!("(<x^2, xy, xz> : m^inf) = {}", saturate_irrelevant(&k).unwrap());
}
