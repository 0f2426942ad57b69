//! Built-in identity and quasi-identity suites, grouped by the hypothesis
//! class they assume. Each suite is expected to pass on every model of its
//! class; running a suite on models outside the class is meaningful only for
//! counterexample hunting.

use crate::axioms::ClassId;
use crate::terms::{parse, Statement};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Fixture {
    pub id: &'static str,
    pub text: &'static str,
}

impl Fixture {
    pub fn statement(&self) -> Statement {
        parse(self.text).unwrap_or_else(|e| panic!("fixture {} does not parse: {e}", self.id))
    }
}

/// Properties of every involutive BE algebra.
pub const INVOLUTIVE_BE: &[Fixture] = &[
    Fixture { id: "ibe-01", text: "x -> (y -> x) = 1" },
    Fixture { id: "ibe-02", text: "x <= (x -> y) -> y" },
    Fixture { id: "ibe-03", text: "x -> y* = y -> x*" },
    Fixture { id: "ibe-04", text: "x <= x**" },
    Fixture { id: "ibe-05", text: "x* -> y = y* -> x" },
    Fixture { id: "ibe-06", text: "x* -> y* = y -> x" },
    Fixture { id: "ibe-07", text: "(x -> y)* -> z = x -> (y* -> z)" },
    Fixture { id: "ibe-08", text: "x -> (y -> z) = (x -> y*)* -> z" },
    Fixture { id: "ibe-09", text: "(x* -> y)* -> (x* -> y) = (x* -> x)* -> (y* -> y)" },
    Fixture { id: "ibe-10", text: "x <=Q y |- x = y /\\ x" },
    Fixture { id: "ibe-11", text: "x <=Q y |- y = x \\/ y" },
    Fixture { id: "ibe-12", text: "x <=Q x" },
    Fixture { id: "ibe-13", text: "x <=Q y, y <=Q x |- x = y" },
    Fixture { id: "ibe-14", text: "x /\\ y = (x* \\/ y*)*" },
    Fixture { id: "ibe-15", text: "x \\/ y = (x* /\\ y*)*" },
    Fixture { id: "ibe-16", text: "x <=Q y |- x <= y" },
    Fixture { id: "ibe-17", text: "0 <=Q x" },
    Fixture { id: "ibe-18", text: "x <=Q 1" },
    Fixture { id: "ibe-19", text: "0 /\\ x = 0" },
    Fixture { id: "ibe-20", text: "x /\\ 0 = 0" },
    Fixture { id: "ibe-21", text: "1 /\\ x = x" },
    Fixture { id: "ibe-22", text: "x /\\ 1 = x" },
    Fixture { id: "ibe-23", text: "(x /\\ y) -> z = (y -> x) -> (y -> z)" },
    Fixture { id: "ibe-24", text: "z -> (x \\/ y) = (x -> y) -> (z -> y)" },
    Fixture { id: "ibe-25", text: "x /\\ y <= x" },
    Fixture { id: "ibe-26", text: "y <= x \\/ y" },
    Fixture { id: "ibe-27", text: "x /\\ (y /\\ x) = y /\\ x" },
    Fixture { id: "ibe-28", text: "x /\\ (x /\\ y) = x /\\ y" },
    Fixture { id: "ibe-29", text: "x <=Q z, y <=Q z, z -> x = z -> y |- x = y" },
    Fixture { id: "ibe-30", text: "(x -> (y -> z)) -> x* = ((y -> z) /\\ x)*" },
    Fixture { id: "ibe-31", text: "x -> ((y -> x*)* \\/ z) = y \\/ (x -> z)" },
    Fixture { id: "ibe-32", text: "((y -> x) /\\ z) -> x = y \\/ (z -> x)" },
    Fixture { id: "ibe-33", text: "x <=Q y |- (y -> x) (*) y = x" },
    Fixture { id: "ibe-34", text: "x -> (z (*) y*) = ((z -> y) (*) x)*" },
    Fixture { id: "ibe-35", text: "(x \\/ y) /\\ y = y" },
    Fixture { id: "ibe-36", text: "(x /\\ y) \\/ y = y" },
    Fixture { id: "ibe-37", text: "z /\\ x = (x -> (x -> z)*)*" },
    Fixture { id: "ibe-38", text: "(x /\\ (y /\\ z))* = ((z -> x) /\\ (z -> y)) -> z*" },
    Fixture { id: "ibe-39", text: "(x /\\ y)* -> (y -> x)* = y \\/ (y -> x)*" },
];

/// Properties of every implicative-orthomodular algebra, including the
/// commutation laws with pairwise-commutation premises.
pub const IOM: &[Fixture] = &[
    Fixture { id: "iom-01", text: "x /\\ (y \\/ x) = x" },
    Fixture { id: "iom-02", text: "x \\/ (y /\\ x) = x" },
    Fixture { id: "iom-03", text: "x <=Q y |- y \\/ x = y" },
    Fixture { id: "iom-04", text: "x <=Q y |- y* <=Q x*" },
    Fixture { id: "iom-05", text: "x <=Q y |- y -> z <=Q x -> z" },
    Fixture { id: "iom-06", text: "x <=Q y |- z -> x <=Q z -> y" },
    Fixture { id: "iom-07", text: "x <=Q y |- x /\\ z <=Q y /\\ z" },
    Fixture { id: "iom-08", text: "x <=Q y |- x \\/ z <=Q y \\/ z" },
    Fixture { id: "iom-09", text: "x /\\ ((y -> x) /\\ (z -> x)) = x" },
    Fixture { id: "iom-10", text: "x \\/ ((y* -> x*)* \\/ (z* -> x*)*) = x" },
    Fixture { id: "iom-11", text: "(x \\/ y) -> (x -> y)* = y*" },
    Fixture { id: "iom-12", text: "(x -> y) \\/ y = x -> y" },
    Fixture { id: "iom-13", text: "(x -> y) -> (y /\\ x) = x" },
    Fixture { id: "iom-14", text: "x -> (y /\\ x) = x -> y" },
    Fixture { id: "iom-15", text: "(z -> y) \\/ (z -> (x /\\ y)) = z -> y" },
    Fixture { id: "iom-16", text: "(x -> y)* /\\ x = (x -> y)*" },
    Fixture { id: "iom-17", text: "x <= y |- y /\\ x = x" },
    Fixture { id: "iom-18", text: "y /\\ x = x |- x <= y" },
    Fixture { id: "iom-19", text: "x <=Q y, y <= x |- x = y" },
    Fixture { id: "iom-20", text: "x /\\ y <=Q y" },
    Fixture { id: "iom-21", text: "y <=Q x \\/ y" },
    Fixture { id: "iom-22", text: "(x \\/ y) -> y = x -> y" },
    Fixture { id: "iom-23", text: "x /\\ y <=Q x -> y" },
    Fixture { id: "iom-24", text: "y /\\ x <=Q x -> y" },
    Fixture { id: "iom-25", text: "(x /\\ y) /\\ y = x /\\ y" },
    Fixture { id: "iom-26", text: "(x /\\ y) /\\ (y /\\ z) = (x /\\ y) /\\ z" },
    Fixture { id: "iom-27", text: "(x \\/ y) \\/ (y \\/ z) = (x \\/ y) \\/ z" },
    Fixture { id: "iom-28", text: "x <=Q y, y <=Q z |- x <=Q z" },
    Fixture { id: "iom-29", text: "(x -> y) \\/ (x -> (z /\\ y)) = x -> y" },
    Fixture { id: "iom-30", text: "(x -> y) \\/ ((z -> x) -> y) = x -> y" },
    Fixture { id: "iom-31", text: "(z /\\ x) -> (y /\\ x) = (z /\\ x) -> y" },
    Fixture { id: "iom-32", text: "z /\\ ((y* -> z) /\\ (x* -> y)) = z /\\ (x* -> y)" },
    Fixture { id: "iom-33", text: "x \\/ (x -> y)* = x" },
    Fixture { id: "iom-34", text: "(z \\/ x) -> (y \\/ x) = z -> (y \\/ x)" },
    // commutation criteria: the three equivalent forms, as a cycle
    Fixture { id: "iom-35", text: "x \\/ y = y \\/ x |- x /\\ y = y /\\ x" },
    Fixture { id: "iom-36", text: "x /\\ y = y /\\ x |- (x -> y) -> (x /\\ y) = x" },
    Fixture { id: "iom-37", text: "(x -> y) -> (x /\\ y) = x |- x \\/ y = y \\/ x" },
    Fixture { id: "iom-38", text: "x \\/ y = y \\/ x |- x* \\/ y* = y* \\/ x*" },
    Fixture { id: "iom-39", text: "x <=Q y |- x \\/ y = y \\/ x" },
    Fixture { id: "iom-40", text: "y <=Q x |- x \\/ y = y \\/ x" },
    Fixture { id: "iom-41", text: "(x /\\ y)* \\/ (x -> y)* = (x -> y)* \\/ (x /\\ y)*" },
    Fixture {
        id: "iom-42",
        text: "x \\/ y = y \\/ x, x \\/ z = z \\/ x |- (x \\/ y) \\/ z = y \\/ (x \\/ z)",
    },
    Fixture {
        id: "iom-43",
        text: "x \\/ y = y \\/ x, y \\/ z = z \\/ y, x \\/ z = z \\/ x |- (x \\/ y) \\/ z = z \\/ (x \\/ y)",
    },
    Fixture {
        id: "iom-44",
        text: "x \\/ y = y \\/ x, y \\/ z = z \\/ y, x \\/ z = z \\/ x |- y \\/ z <=Q y \\/ (z \\/ x)",
    },
    Fixture {
        id: "iom-45",
        text: "y \\/ z = z \\/ y |- (y \\/ z) -> x <=Q (y -> x) /\\ (z -> x)",
    },
    Fixture {
        id: "iom-46",
        text: "x \\/ y = y \\/ x, y \\/ z = z \\/ y, x \\/ z = z \\/ x |- (y -> x) /\\ (z -> x) <= (y \\/ z) -> x",
    },
    Fixture {
        id: "iom-47",
        text: "x \\/ y = y \\/ x, y \\/ z = z \\/ y, x \\/ z = z \\/ x |- (y \\/ z) -> x = (y -> x) /\\ (z -> x)",
    },
    Fixture {
        id: "iom-48",
        text: "x \\/ y = y \\/ x, y \\/ z = z \\/ y, x \\/ z = z \\/ x |- x -> (y /\\ z) = (x -> y) /\\ (x -> z)",
    },
];

/// Properties of every involutive implicative BE algebra.
pub const IMPLICATIVE: &[Fixture] = &[
    Fixture { id: "impl-01", text: "x* -> x = x" },
    Fixture { id: "impl-02", text: "x -> x* = x*" },
    Fixture { id: "impl-03", text: "x -> (x -> y) = x -> y" },
    Fixture { id: "impl-04", text: "x -> (y -> x)* = x*" },
    Fixture { id: "impl-05", text: "x -> (y -> x*) = y -> x*" },
    Fixture { id: "impl-06", text: "(y -> x*) -> x = x" },
];

/// Properties of every Wajsberg algebra.
pub const WAJSBERG: &[Fixture] = &[
    Fixture { id: "w-01", text: "x -> (x /\\ y) = x -> y" },
    Fixture { id: "w-02", text: "x -> ((x /\\ y) /\\ x) = x -> y" },
    Fixture { id: "w-03", text: "x /\\ (x* -> y) = x" },
    Fixture { id: "w-04", text: "(x -> y) -> (x /\\ y) = x" },
    Fixture { id: "w-05", text: "(z /\\ x) -> (y /\\ x) = (z /\\ x) -> y" },
    Fixture { id: "w-06", text: "(x -> y)* /\\ x = (x -> y)*" },
    Fixture { id: "w-07", text: "(x /\\ y) /\\ y = x /\\ y" },
    Fixture { id: "w-08", text: "x /\\ y <=Q y" },
    Fixture { id: "w-09", text: "y <=Q x \\/ y" },
    Fixture { id: "w-10", text: "(x /\\ y) /\\ (y /\\ z) = (x /\\ y) /\\ z" },
    Fixture { id: "w-11", text: "(x /\\ y) /\\ z = y /\\ (x /\\ z)" },
    Fixture { id: "w-12", text: "x -> (y /\\ z) = (x -> y) /\\ (x -> z)" },
];

/// The suites together with the hypothesis class each one assumes.
pub fn suites() -> Vec<(ClassId, &'static [Fixture])> {
    vec![
        (ClassId::InvolutiveBe, INVOLUTIVE_BE),
        (ClassId::Iom, IOM),
        (ClassId::Implicative, IMPLICATIVE),
        (ClassId::Wajsberg, WAJSBERG),
    ]
}

/// The fixture suite assuming the given hypothesis class, if there is one.
pub fn fixture_suite(class: ClassId) -> Option<&'static [Fixture]> {
    match class {
        ClassId::InvolutiveBe => Some(INVOLUTIVE_BE),
        ClassId::Iom => Some(IOM),
        ClassId::Implicative => Some(IMPLICATIVE),
        ClassId::Wajsberg => Some(WAJSBERG),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::terms::{check_statement, parse, render};
    use crate::testdata;

    #[test]
    fn all_fixtures_parse_and_round_trip() {
        let mut ids = std::collections::HashSet::new();
        for (_, suite) in suites() {
            for f in suite {
                assert!(ids.insert(f.id), "duplicate fixture id {}", f.id);
                let s = f.statement();
                assert_eq!(parse(&render(&s)).unwrap(), s, "round trip for {}", f.id);
            }
        }
    }

    #[test]
    fn meet_join_bound_fixtures_on_qw6() {
        let a = testdata::qw6();
        for id in ["ibe-25", "ibe-26"] {
            let f = INVOLUTIVE_BE.iter().find(|f| f.id == id).unwrap();
            assert!(
                check_statement(&a, &f.statement()).unwrap().passed(),
                "{id} should pass"
            );
        }
    }

    #[test]
    fn order_meet_fixtures_on_iom6() {
        let a = testdata::iom6();
        for id in ["iom-17", "iom-18"] {
            let f = IOM.iter().find(|f| f.id == id).unwrap();
            assert!(check_statement(&a, &f.statement()).unwrap().passed());
        }
    }

    #[test]
    fn involutive_suite_passes_on_all_six_element_models() {
        for a in [testdata::qw6(), testdata::prew6(), testdata::iom6(), testdata::metaw6()] {
            for f in INVOLUTIVE_BE {
                assert!(
                    check_statement(&a, &f.statement()).unwrap().passed(),
                    "{} should pass on {:?}",
                    f.id,
                    a.names()
                );
            }
        }
    }

    #[test]
    fn iom_suite_passes_on_iom_models() {
        for a in [testdata::qw6(), testdata::iom6()] {
            for f in IOM {
                assert!(
                    check_statement(&a, &f.statement()).unwrap().passed(),
                    "{} should pass",
                    f.id
                );
            }
        }
    }
}
