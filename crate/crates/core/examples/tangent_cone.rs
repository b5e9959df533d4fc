//! Comparing J with its tangent-cone ideal. When the relation degrees of
//! the tangent cone spread by more than two, the multiplicities can differ.

use splinedim::closed_forms::tangent_cone_comparison;
use splinedim::cli::ComplexDocument;

fn main() {
    let dir = concat!(env!("CARGO_MANIFEST_DIR"), "/examples/complexes");
    for (name, r) in [("line_two_circles", 1), ("repeated_tangent", 2), ("syzygy_negative", 0)] {
        let doc = ComplexDocument::load(format!("{dir}/{name}.json").as_ref()).unwrap();
        let j = doc.complex(r).unwrap().j_ideal();
        let cmp = tangent_cone_comparison(&j).unwrap();
        println!("{name}, r = {r}");
        println!("  tangent cone {}", cmp.tangent_cone);
        println!(
            "  relation degrees {:?}, spread {}, condition {}",
            cmp.resolution.relations,
            cmp.resolution.relation_spread(),
            cmp.syzygy_condition
        );
        println!("  multiplicity J {}, tangent cone {}", cmp.multiplicity_j, cmp.multiplicity_tangent_cone);
    }
}
