//! Search for the smallest model in a class falsifying a statement.
//!
//! ```sh
//! cargo run --example hunt_counterexample ['statement' [class [max-size]]]
//! ```

use qwalg::axioms::ClassId;
use qwalg::io::{render_algebra_file, AlgebraFile};
use qwalg::search::find_counterexample;
use qwalg::terms::parse;

fn main() {
    let mut args = std::env::args().skip(1);
    let text = args.next().unwrap_or_else(|| "x /\\ y = y /\\ x".to_string());
    let class: ClassId = args
        .next()
        .unwrap_or_else(|| "qw".to_string())
        .parse()
        .expect("known class id");
    let max_size: usize = args
        .next()
        .map(|s| s.parse().expect("numeric size"))
        .unwrap_or(6);

    let statement = parse(&text).expect("statement parses");
    println!("statement: {text}");
    println!("class:     {class}, sizes up to {max_size}");
    match find_counterexample(&statement, class, max_size).unwrap() {
        None => println!("no counterexample found"),
        Some(cx) => {
            let assignment: Vec<String> = cx
                .assignment
                .iter()
                .map(|(v, e)| format!("{v} = {}", cx.algebra.name(*e)))
                .collect();
            println!("counterexample at {}:", assignment.join(", "));
            print!(
                "{}",
                render_algebra_file(&AlgebraFile {
                    algebra: cx.algebra,
                    declared: vec![]
                })
            );
        }
    }
}
