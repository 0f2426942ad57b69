//! Enumerate all models up to isomorphism, with and without a class filter.

use qwalg::axioms::ClassId;
use qwalg::io::{render_algebra_file, AlgebraFile};
use qwalg::search::{enumerate, EnumerationConfig};

fn main() {
    println!("involutive BE algebras up to isomorphism:");
    for n in 1..=6 {
        let all = enumerate(&EnumerationConfig::new(n)).unwrap();
        let qw = enumerate(&EnumerationConfig::new(n).with_class(ClassId::Qw)).unwrap();
        let wajsberg =
            enumerate(&EnumerationConfig::new(n).with_class(ClassId::Wajsberg)).unwrap();
        println!(
            "  size {n}: {:>4} total, {:>4} quantum-Wajsberg, {:>3} Wajsberg",
            all.len(),
            qw.len(),
            wajsberg.len()
        );
    }

    println!("\nthe first non-Wajsberg quantum-Wajsberg model:");
    for n in 1..=6 {
        let qw = enumerate(&EnumerationConfig::new(n).with_class(ClassId::Qw)).unwrap();
        if let Some(a) = qw
            .into_iter()
            .find(|a| !qwalg::axioms::check_class(a, ClassId::Wajsberg).passed())
        {
            print!(
                "{}",
                render_algebra_file(&AlgebraFile { algebra: a, declared: vec![] })
            );
            break;
        }
    }
}
