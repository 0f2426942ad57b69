//! Check individual axioms on a model, with least counterexamples.

use qwalg::axioms::{check_axiom, var_names, AxiomId};
use qwalg::io;

fn main() {
    let path = std::env::args().nth(1).unwrap_or_else(|| {
        format!("{}/fixtures/metaw6.alg", env!("CARGO_MANIFEST_DIR"))
    });
    let a = io::load(&path).expect("model file loads");
    println!("model: {path}");
    for &id in AxiomId::ALL {
        let out = check_axiom(&a, id);
        match (&out.witness, out.prereq) {
            (None, None) => println!("  {:<10} pass", id.as_str()),
            (Some(w), _) => {
                let assignment: Vec<String> = var_names(id)
                    .iter()
                    .zip(w)
                    .map(|(v, &e)| format!("{v}={}", a.name(e)))
                    .collect();
                println!("  {:<10} fail at {}", id.as_str(), assignment.join(", "));
            }
            (None, Some(p)) => {
                println!("  {:<10} skipped (needs {})", id.as_str(), p.as_str())
            }
        }
    }
}
