//! Parse statements in the term language and check them on a model.
//!
//! Shows the ASCII syntax (`->`, `*`, `/\`, `\/`, `(*)`, `(+)`, `<=`, `<=Q`,
//! `|-`) and the equivalent Unicode glyphs.

use qwalg::io;
use qwalg::terms::{check_statement, parse, render};

fn main() {
    let a = io::load(format!("{}/fixtures/qw6.alg", env!("CARGO_MANIFEST_DIR")))
        .expect("model file loads");

    let cases = [
        // an identity that holds on every model of this class
        "x -> (y -> x) = 1",
        // commutativity of the derived join fails here
        "x \\/ y = y \\/ x",
        // a quasi-identity: premises before |-, conclusion after
        "x <= y, y <= x |- x \\/ y = y \\/ x",
        // the same statement in Unicode syntax
        "x ⊎ y = y ⊎ x",
        // product-signature operators are ordinary term operators
        "x (*) y* = (x -> y)*",
    ];
    for text in cases {
        let s = parse(text).expect("statement parses");
        let outcome = check_statement(&a, &s).expect("all variables bound by quantification");
        match outcome.witness {
            None => println!("holds:  {}", render(&s)),
            Some(w) => {
                let assignment: Vec<String> =
                    w.iter().map(|(v, e)| format!("{v} = {}", a.name(*e))).collect();
                println!("fails:  {}   at {}", render(&s), assignment.join(", "));
            }
        }
    }
}
