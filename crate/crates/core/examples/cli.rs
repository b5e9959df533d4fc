//! Drives the command line in-process: `cargo run --example cli -- table
//! examples/complexes/line_two_circles.json --r 0..3 --oracle`.

fn main() {
    let outcome = splinedim::cli::run(std::env::args_os());
    print!("{}", outcome.stdout);
    eprint!("{}", outcome.stderr);
    std::process::exit(outcome.code);
}
