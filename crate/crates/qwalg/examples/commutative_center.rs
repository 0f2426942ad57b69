//! Compute the commutative center of a model and its subalgebra report.

use qwalg::center::{center, check_commutation_criteria};
use qwalg::io;

fn main() {
    let path = std::env::args().nth(1).unwrap_or_else(|| {
        format!("{}/fixtures/iom6.alg", env!("CARGO_MANIFEST_DIR"))
    });
    let a = io::load(&path).expect("model file loads");
    let r = center(&a);

    println!("model: {path}");
    println!("commutation table (x row, y column, + = commutes):");
    print!("    ");
    for y in 0..a.size() {
        print!(" {}", a.name(y));
    }
    println!();
    for x in 0..a.size() {
        print!("  {} :", a.name(x));
        for y in 0..a.size() {
            print!(" {}", if r.commute_table[x][y] { "+" } else { "." });
        }
        println!();
    }
    let members: Vec<&str> = r.center.iter().map(|&x| a.name(x)).collect();
    println!("center: {{{}}}", members.join(", "));

    for check in r.closure_report.iter().chain(&r.wajsberg_report) {
        println!("  {:<14} {:?}", check.id, check.status);
    }

    let disagreements = check_commutation_criteria(&a);
    println!(
        "three-way commutation criteria: {} disagreeing pairs",
        disagreements.len()
    );
}
