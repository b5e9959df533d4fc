//! Classifies every complex of the bundled corpus.

use splinedim::cli::ComplexDocument;
use splinedim::spline_complex::classify_configuration;

fn main() {
    let dir = concat!(env!("CARGO_MANIFEST_DIR"), "/examples/complexes");
    let mut paths: Vec<_> = std::fs::read_dir(dir)
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|e| e == "json"))
        .collect();
    paths.sort();
    for p in paths {
        let doc = ComplexDocument::load(&p).unwrap();
        let c = doc.default_complex().unwrap();
        println!("{:20} {}", doc.label(), classify_configuration(&c));
    }
}
