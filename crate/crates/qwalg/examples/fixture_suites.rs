//! Run the built-in identity suites on a model, selecting the suites whose
//! hypothesis class the model belongs to.

use qwalg::axioms::check_class;
use qwalg::fixtures::suites;
use qwalg::io;
use qwalg::terms::check_statement;

fn main() {
    let path = std::env::args().nth(1).unwrap_or_else(|| {
        format!("{}/fixtures/qw6.alg", env!("CARGO_MANIFEST_DIR"))
    });
    let a = io::load(&path).expect("model file loads");
    println!("model: {path}");

    for (class, suite) in suites() {
        if !check_class(&a, class).passed() {
            println!("suite for {class}: skipped (model is outside the class)");
            continue;
        }
        let mut failures = 0;
        for f in suite {
            let out = check_statement(&a, &f.statement()).unwrap();
            if let Some(w) = out.witness {
                failures += 1;
                let assignment: Vec<String> =
                    w.iter().map(|(v, e)| format!("{v}={}", a.name(*e))).collect();
                println!("  {} fails at {}", f.id, assignment.join(", "));
            }
        }
        println!(
            "suite for {class}: {}/{} statements hold",
            suite.len() - failures,
            suite.len()
        );
    }
}
