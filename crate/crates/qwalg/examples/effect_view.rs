//! Build the partial-addition view of a model and check its axioms.

use qwalg::effect::{build_effect, check_effect_axioms};
use qwalg::io;

fn main() {
    for file in ["iom6.alg", "prew6.alg"] {
        let path = format!("{}/fixtures/{file}", env!("CARGO_MANIFEST_DIR"));
        let a = io::load(&path).expect("model file loads");
        let p = build_effect(&a).expect("involutive model");

        println!("model {file}: partial sums (. = undefined)");
        print!("    ");
        for y in 0..a.size() {
            print!(" {}", a.name(y));
        }
        println!();
        for x in 0..a.size() {
            print!("  {} :", a.name(x));
            for y in 0..a.size() {
                match p.get(x, y) {
                    Some(v) => print!(" {}", a.name(v)),
                    None => print!(" ."),
                }
            }
            println!();
        }

        let report = check_effect_axioms(&p);
        for out in &report.outcomes {
            match &out.witness {
                None => println!("  {}: pass", out.axiom.id()),
                Some(w) => {
                    let names: Vec<&str> = w.iter().map(|&x| a.name(x)).collect();
                    println!(
                        "  {}: fail at ({}) [{:?}]",
                        out.axiom.id(),
                        names.join(", "),
                        out.kind.unwrap()
                    );
                }
            }
        }
        println!();
    }
}
