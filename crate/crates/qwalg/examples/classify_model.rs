//! Load a model from a table file and print its full class report.
//!
//! ```sh
//! cargo run --example classify_model [path/to/model.alg]
//! ```

use qwalg::classify::classify;
use qwalg::io;

fn main() {
    let path = std::env::args().nth(1).unwrap_or_else(|| {
        format!("{}/fixtures/qw6.alg", env!("CARGO_MANIFEST_DIR"))
    });
    let a = io::load(&path).expect("model file loads");
    println!("model: {path} (size {})", a.size());
    let report = classify(&a);
    for out in &report.outcomes {
        match &out.failed {
            None => println!("  {:<16} yes", out.class.as_str()),
            Some(f) => {
                let witness: Vec<&str> = f
                    .witness
                    .as_deref()
                    .unwrap_or(&[])
                    .iter()
                    .map(|&x| a.name(x))
                    .collect();
                println!(
                    "  {:<16} no ({} fails at ({}))",
                    out.class.as_str(),
                    f.axiom,
                    witness.join(", ")
                );
            }
        }
    }
    println!(
        "order <= antisymmetric: {}, implicative: {}, commutative: {}",
        report.leq_antisymmetric, report.implicative, report.commutative
    );
}
