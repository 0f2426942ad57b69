//! The axiom catalogue: every named identity and class decided by exhaustive
//! quantification over the carrier, reporting the lexicographically first
//! counterexample on failure.
//!
//! Product-signature axioms (`Pu`, `Pqmv`, ...) quantify over the `Φ`-image
//! and therefore require the star involution; on a non-involutive algebra they
//! report `PrereqFailed` rather than a vacuous failure.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::algebra::FiniteAlgebra;

macro_rules! axiom_ids {
    ($($variant:ident => $text:literal),+ $(,)?) => {
        /// Identifier of one closed formula over the signature.
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
        pub enum AxiomId {
            $($variant),+
        }

        impl AxiomId {
            pub const ALL: &'static [AxiomId] = &[$(AxiomId::$variant),+];

            pub fn as_str(self) -> &'static str {
                match self {
                    $(AxiomId::$variant => $text),+
                }
            }
        }

        impl FromStr for AxiomId {
            type Err = UnknownId;
            fn from_str(s: &str) -> Result<AxiomId, UnknownId> {
                let lower = s.to_ascii_lowercase();
                match lower.as_str() {
                    $($text => Ok(AxiomId::$variant),)+
                    _ => Err(UnknownId(s.to_string())),
                }
            }
        }
    };
}

axiom_ids! {
    Be1 => "be1",
    Be2 => "be2",
    Be3 => "be3",
    Be4 => "be4",
    Bounded => "bounded",
    Involutive => "involutive",
    Bck1 => "bck1",
    Bck4 => "bck4",
    W1 => "w1",
    W2 => "w2",
    W3 => "w3",
    W4 => "w4",
    Commutative => "commutative",
    Pimpl => "pimpl",
    Qw => "qw",
    Qw1 => "qw1",
    Qw2 => "qw2",
    Qw2P => "qw2p",
    Qw3 => "qw3",
    Qw3P => "qw3p",
    Iom => "iom",
    IomP => "iomp",
    IomPP => "iompp",
    Pu => "pu",
    Pcomm => "pcomm",
    Pass_ => "pass",
    ML => "m-l",
    MRe => "m-re",
    Pqmv => "pqmv",
    Pmv => "pmv",
    Pom => "pom",
    DeltaM => "delta-m",
    MPimpl => "m-pimpl",
    G => "g",
    MPabsI => "m-pabs-i",
    S1 => "s1",
    S2 => "s2",
    S3 => "s3",
    S4 => "s4",
    S5 => "s5",
    S6 => "s6",
    S7 => "s7",
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
#[error("unknown id `{0}`")]
pub struct UnknownId(pub String);

impl fmt::Display for AxiomId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum CheckStatus {
    Pass,
    Fail,
    PrereqFailed,
}

/// Result of deciding one axiom on one algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckOutcome {
    pub axiom: AxiomId,
    pub status: CheckStatus,
    /// Lexicographically least falsifying tuple, in formula variable order.
    pub witness: Option<Vec<usize>>,
    pub prereq: Option<AxiomId>,
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        self.status == CheckStatus::Pass
    }
}

/// Axioms that quantify over the `Φ`-image.
const PRODUCT_SIDE: &[AxiomId] = &[
    AxiomId::Pu,
    AxiomId::Pcomm,
    AxiomId::Pass_,
    AxiomId::ML,
    AxiomId::MRe,
    AxiomId::Pqmv,
    AxiomId::Pmv,
    AxiomId::Pom,
    AxiomId::DeltaM,
    AxiomId::MPimpl,
    AxiomId::G,
    AxiomId::MPabsI,
];

/// Number of quantified variables in the axiom's formula.
pub fn arity(id: AxiomId) -> usize {
    var_names(id).len()
}

/// Variable names in the order they are quantified (and reported).
pub fn var_names(id: AxiomId) -> &'static [&'static str] {
    use AxiomId::*;
    match id {
        Be1 | Be2 | Be3 | Bounded | Involutive | W1 | Pu | ML | MRe | G | S3 | S4 | S5 | S7 => {
            &["x"]
        }
        S6 => &[],
        Bck4 | W3 | W4 | Commutative | Pimpl | Qw1 | Qw3 | Qw3P | Iom | IomP | IomPP | Pcomm
        | Pmv | Pom | DeltaM | MPimpl | MPabsI | S1 => &["x", "y"],
        W2 => &["y", "z", "x"],
        Be4 | Bck1 | Qw | Qw2 | Qw2P | Pass_ | Pqmv | S2 => &["x", "y", "z"],
    }
}

/// Evaluate the axiom's formula at one assignment (variables in the order of
/// [`var_names`]). Used both by the exhaustive check and to re-falsify
/// reported witnesses.
pub fn holds_at(a: &FiniteAlgebra, id: AxiomId, v: &[usize]) -> bool {
    use AxiomId::*;
    let one = a.unit();
    let nul = a.zero();
    let imp = |x, y| a.imp(x, y);
    let star = |x| a.star(x);
    let join = |x, y| a.join(x, y);
    let meet = |x, y| a.meet(x, y);
    let odot = |x, y| a.odot(x, y);
    let oplus = |x, y| a.oplus(x, y);
    match id {
        Be1 => imp(v[0], v[0]) == one,
        Be2 => imp(v[0], one) == one,
        Be3 | W1 => imp(one, v[0]) == v[0],
        Be4 => imp(v[0], imp(v[1], v[2])) == imp(v[1], imp(v[0], v[2])),
        Bounded => imp(nul, v[0]) == one,
        Involutive => star(star(v[0])) == v[0],
        Bck1 => imp(imp(v[0], v[1]), imp(imp(v[1], v[2]), imp(v[0], v[2]))) == one,
        Bck4 => !(imp(v[0], v[1]) == one && imp(v[1], v[0]) == one && v[0] != v[1]),
        W2 => {
            let (y, z, x) = (v[0], v[1], v[2]);
            imp(imp(y, z), imp(imp(z, x), imp(y, x))) == one
        }
        W3 | Commutative => join(v[0], v[1]) == join(v[1], v[0]),
        W4 => imp(imp(star(v[0]), star(v[1])), imp(v[1], v[0])) == one,
        Pimpl => imp(imp(v[0], v[1]), v[0]) == v[0],
        Qw => {
            let (x, y, z) = (v[0], v[1], v[2]);
            imp(x, meet(meet(x, y), meet(z, x))) == meet(imp(x, y), imp(x, z))
        }
        Qw1 => imp(v[0], meet(v[0], v[1])) == imp(v[0], v[1]),
        Qw2 => {
            let (x, y, z) = (v[0], v[1], v[2]);
            imp(x, meet(y, meet(z, x))) == meet(imp(x, y), imp(x, z))
        }
        Qw2P => {
            let (x, y, z) = (v[0], v[1], v[2]);
            imp(x, meet(y, star(imp(x, z)))) == meet(imp(x, y), imp(x, star(imp(x, z))))
        }
        Qw3 => imp(meet(v[0], v[1]), meet(v[1], v[0])) == one,
        Qw3P => imp(join(v[0], v[1]), join(v[1], v[0])) == one,
        Iom => meet(v[0], imp(star(v[0]), v[1])) == v[0],
        IomP => meet(v[0], imp(v[1], v[0])) == v[0],
        IomPP => join(v[0], star(imp(v[0], v[1]))) == v[0],
        Pu => odot(one, v[0]) == v[0] && odot(v[0], one) == v[0],
        Pcomm => odot(v[0], v[1]) == odot(v[1], v[0]),
        Pass_ => odot(v[0], odot(v[1], v[2])) == odot(odot(v[0], v[1]), v[2]),
        ML => odot(v[0], nul) == nul,
        MRe => odot(v[0], star(v[0])) == nul,
        Pqmv => {
            let (x, y, z) = (v[0], v[1], v[2]);
            odot(x, join(join(star(x), y), join(z, star(x)))) == join(odot(x, y), odot(x, z))
        }
        Pmv => odot(v[0], join(star(v[0]), v[1])) == odot(v[0], v[1]),
        Pom => join(v[0], odot(v[0], v[1])) == v[0],
        DeltaM => odot(meet(v[0], v[1]), star(meet(v[1], v[0]))) == nul,
        MPimpl => star(odot(star(odot(v[0], star(v[1]))), star(v[0]))) == v[0],
        G => odot(v[0], v[0]) == v[0],
        MPabsI => {
            let (x, y) = (v[0], v[1]);
            odot(x, oplus(oplus(oplus(x, x), x), y)) == x
        }
        S1 => oplus(v[0], v[1]) == oplus(v[1], v[0]),
        S2 => oplus(v[0], oplus(v[1], v[2])) == oplus(oplus(v[0], v[1]), v[2]),
        S3 => oplus(v[0], star(v[0])) == one,
        S4 => oplus(v[0], nul) == v[0],
        S5 => star(star(v[0])) == v[0],
        S6 => star(nul) == one,
        S7 => oplus(v[0], one) == one,
    }
}

/// Least tuple (lexicographic, elements in input order) where `pred` is false.
fn first_failure(n: usize, k: usize, pred: impl Fn(&[usize]) -> bool) -> Option<Vec<usize>> {
    let mut v = vec![0usize; k];
    loop {
        if !pred(&v) {
            return Some(v);
        }
        // odometer increment
        let mut i = k;
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            v[i] += 1;
            if v[i] < n {
                break;
            }
            v[i] = 0;
        }
    }
}

/// Decide one axiom by exhaustive quantification.
pub fn check_axiom(a: &FiniteAlgebra, id: AxiomId) -> CheckOutcome {
    if PRODUCT_SIDE.contains(&id) {
        let inv = check_axiom(a, AxiomId::Involutive);
        if !inv.passed() {
            return CheckOutcome {
                axiom: id,
                status: CheckStatus::PrereqFailed,
                witness: None,
                prereq: Some(AxiomId::Involutive),
            };
        }
    }
    match first_failure(a.size(), arity(id), |v| holds_at(a, id, v)) {
        None => CheckOutcome {
            axiom: id,
            status: CheckStatus::Pass,
            witness: None,
            prereq: None,
        },
        Some(w) => CheckOutcome {
            axiom: id,
            status: CheckStatus::Fail,
            witness: Some(w),
            prereq: None,
        },
    }
}

macro_rules! class_ids {
    ($($variant:ident => $text:literal),+ $(,)?) => {
        /// Identifier of an algebra class (a conjunction of axioms).
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
        pub enum ClassId {
            $($variant),+
        }

        impl ClassId {
            pub const ALL: &'static [ClassId] = &[$(ClassId::$variant),+];

            pub fn as_str(self) -> &'static str {
                match self {
                    $(ClassId::$variant => $text),+
                }
            }
        }

        impl FromStr for ClassId {
            type Err = UnknownId;
            fn from_str(s: &str) -> Result<ClassId, UnknownId> {
                let lower = s.to_ascii_lowercase();
                match lower.as_str() {
                    $($text => Ok(ClassId::$variant),)+
                    _ => Err(UnknownId(s.to_string())),
                }
            }
        }
    };
}

class_ids! {
    Be => "be",
    BoundedBe => "bounded-be",
    InvolutiveBe => "involutive-be",
    Bck => "bck",
    Qw => "qw",
    PreW => "pre-w",
    MetaW => "meta-w",
    Iom => "iom",
    Wajsberg => "wajsberg",
    Implicative => "implicative",
    IomLattice => "iom-lattice",
    Qmv => "qmv",
    PreMv => "pre-mv",
    MetaMv => "meta-mv",
    OmAlg => "om-alg",
    OmSoftlattice => "om-softlattice",
    OmWidelattice => "om-widelattice",
}

impl fmt::Display for ClassId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// The defining conjunction, in check order.
pub fn class_axioms(c: ClassId) -> Vec<AxiomId> {
    use AxiomId::*;
    let base = |extra: &[AxiomId]| {
        let mut v = vec![Be1, Be2, Be3, Be4, Bounded, Involutive];
        v.extend_from_slice(extra);
        v
    };
    match c {
        ClassId::Be => vec![Be1, Be2, Be3, Be4],
        ClassId::BoundedBe => vec![Be1, Be2, Be3, Be4, Bounded],
        ClassId::InvolutiveBe => base(&[]),
        ClassId::Bck => vec![Be1, Be2, Be3, Be4, Bck1, Bck4],
        ClassId::Qw => base(&[Qw1, Qw2]),
        ClassId::PreW => base(&[Qw1]),
        ClassId::MetaW => base(&[Qw3]),
        ClassId::Iom => base(&[Qw2]),
        ClassId::Wajsberg => base(&[Commutative]),
        ClassId::Implicative => base(&[Pimpl]),
        ClassId::IomLattice => base(&[Qw2, Pimpl]),
        ClassId::Qmv => base(&[Pqmv]),
        ClassId::PreMv => base(&[Pmv]),
        ClassId::MetaMv => base(&[DeltaM]),
        ClassId::OmAlg => base(&[Pom]),
        ClassId::OmSoftlattice => base(&[Pom, G]),
        ClassId::OmWidelattice => base(&[Pom, MPabsI]),
    }
}

/// Result of deciding class membership: the first failed conjunct, if any.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassOutcome {
    pub class: ClassId,
    pub status: CheckStatus,
    pub failed: Option<CheckOutcome>,
}

impl ClassOutcome {
    pub fn passed(&self) -> bool {
        self.status == CheckStatus::Pass
    }
}

pub fn check_class(a: &FiniteAlgebra, c: ClassId) -> ClassOutcome {
    for id in class_axioms(c) {
        let outcome = check_axiom(a, id);
        if !outcome.passed() {
            return ClassOutcome {
                class: c,
                status: outcome.status,
                failed: Some(outcome),
            };
        }
    }
    ClassOutcome {
        class: c,
        status: CheckStatus::Pass,
        failed: None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testdata;

    fn named(a: &FiniteAlgebra, names: &[&str]) -> Vec<usize> {
        names.iter().map(|n| a.element_index(n).unwrap()).collect()
    }

    #[test]
    fn qw2_witness_on_prew6() {
        let a = testdata::prew6();
        let out = check_axiom(&a, AxiomId::Qw2);
        assert_eq!(out.status, CheckStatus::Fail);
        assert_eq!(out.witness, Some(named(&a, &["a", "0", "b"])));
        // witness re-falsifies the formula
        assert!(!holds_at(&a, AxiomId::Qw2, out.witness.as_ref().unwrap()));
    }

    #[test]
    fn qw1_and_qw3_witnesses_on_iom6() {
        let a = testdata::iom6();
        let out = check_axiom(&a, AxiomId::Qw1);
        assert_eq!(out.witness, Some(named(&a, &["d", "a"])));
        let out = check_axiom(&a, AxiomId::Qw3);
        assert_eq!(out.witness, Some(named(&a, &["a", "d"])));
    }

    #[test]
    fn be2_passes_everywhere() {
        for a in [testdata::qw6(), testdata::prew6(), testdata::iom6(), testdata::metaw6()] {
            assert!(check_axiom(&a, AxiomId::Be2).passed());
        }
    }

    #[test]
    fn bck4_witness_on_qw6() {
        let a = testdata::qw6();
        let out = check_axiom(&a, AxiomId::Bck4);
        assert_eq!(out.witness, Some(named(&a, &["a", "c"])));
    }

    #[test]
    fn commutativity_witness_on_qw6() {
        let a = testdata::qw6();
        let out = check_axiom(&a, AxiomId::Commutative);
        assert_eq!(out.witness, Some(named(&a, &["a", "c"])));
    }

    #[test]
    fn class_examples() {
        assert!(check_class(&testdata::qw6(), ClassId::Qw).passed());
        assert!(check_class(&testdata::prew6(), ClassId::PreW).passed());
        assert!(check_class(&testdata::metaw6(), ClassId::MetaW).passed());
        assert!(!check_class(&testdata::metaw6(), ClassId::Iom).passed());
        assert!(check_class(&testdata::iom6(), ClassId::Iom).passed());
    }

    #[test]
    fn product_side_prereq() {
        // non-involutive 3-element algebra
        let a = FiniteAlgebra::from_table(vec![
            vec![2, 2, 2],
            vec![2, 2, 2],
            vec![0, 1, 2],
        ])
        .unwrap();
        let out = check_axiom(&a, AxiomId::Pom);
        assert_eq!(out.status, CheckStatus::PrereqFailed);
        assert_eq!(out.prereq, Some(AxiomId::Involutive));
    }

    #[test]
    fn unknown_id_round_trips() {
        assert_eq!("qw2p".parse::<AxiomId>().unwrap(), AxiomId::Qw2P);
        assert_eq!("m-pabs-i".parse::<AxiomId>().unwrap(), AxiomId::MPabsI);
        assert!("nope".parse::<AxiomId>().is_err());
        assert_eq!("om-softlattice".parse::<ClassId>().unwrap(), ClassId::OmSoftlattice);
    }
}
