//! Hilbert function, polynomial, postulation number and multiplicity of S/J.
//!
//! `cargo run --example hilbert_ideal -- 3` prints the data at smoothness 3.

use splinedim::cli::ComplexDocument;
use splinedim::hilbert::hilbert_data;

fn main() {
    let r: u32 = std::env::args().nth(1).map_or(2, |a| a.parse().expect("smoothness"));
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/examples/complexes/repeated_tangent.json");
    let doc = ComplexDocument::load(path.as_ref()).unwrap();
    let j = doc.complex(r).unwrap().j_ideal();
    let h = hilbert_data(&j).unwrap();
    let top = (h.postulation + 3).max(4) as u32;
    let hf: Vec<String> = (0..=top).map(|d| h.value(d).to_string()).collect();
    println!("J = {j}");
    println!("HF(S/J): {}", hf.join(", "));
    println!("HP(S/J): {}", h.hp);
    println!("postulation {}, multiplicity {}", h.postulation, h.multiplicity);
}
