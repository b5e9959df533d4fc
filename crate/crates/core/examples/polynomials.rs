//! Parsing, arithmetic and homogenization of polynomials.

use splinedim::polyring::{parse_polynomial, VarSet, WeightVector};

fn main() {
    let xy = VarSet::xy();
    let circle = parse_polynomial("x^2 + y^2 - 2*x + 2*y", &xy).unwrap();
    let form = circle.homogenize().unwrap();
    println!("affine curve   {circle}");
    println!("homogenized    {form}");
    println!("back           {}", form.dehomogenize().unwrap());
    println!("tangent line   {}", form.linear_part_at_vertex().unwrap());

    let xyz = VarSet::xyz();
    let g = parse_polynomial("3/2*(x + y)*z + x^2 + x*y + 3*y^2", &xyz).unwrap();
    println!("g^2            {}", g.pow(2));
    let w = WeightVector::new(vec![0, 0, 1]);
    println!("in_(0,0,1) g   {}", g.initial_form(&w).unwrap());
}
