//! Translate a model between the implicational signature (->, *, 0, 1) and
//! the product signature ((*), *, 0, 1), and verify the round trip.

use qwalg::algebra::{phi_to_mbe, psi_to_be};
use qwalg::io;

fn main() {
    let path = format!("{}/fixtures/qw6.alg", env!("CARGO_MANIFEST_DIR"));
    let a = io::load(&path).expect("model file loads");

    let m = phi_to_mbe(&a).expect("involutive model");
    println!("product table (x (*) y = (x -> y*)*):");
    print!("{}", io::render_mbe(&m));

    let back = psi_to_be(&m).expect("star is an involution");
    assert_eq!(back, a);
    println!("\nround trip back through x -> y = (x (*) y*)* recovers the model exactly");
}
