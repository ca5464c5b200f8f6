use berele::verify::{run_checks, VerifyBounds};
use std::time::Instant;

fn main() {
    let bounds = VerifyBounds::default();
    let t0 = Instant::now();
    for rep in run_checks("all", &bounds).unwrap() {
        println!("{rep}  [{:.2?} elapsed]", t0.elapsed());
    }
}
