//! Whole-model classification and the cross-class structure theorems.
//!
//! `classify` decides every class in the catalogue on one model and sanity
//! checks the result against the known inclusion arrows. `verify_meta_theorems`
//! re-checks the structure theorems relating the classes on an arbitrary
//! collection of models, reporting any model that violates one.

use crate::algebra::FiniteAlgebra;
use crate::axioms::{check_axiom, check_class, AxiomId, CheckStatus, ClassId, ClassOutcome};
use crate::center;

/// Full class membership report for one algebra, plus derived order facts.
#[derive(Debug, Clone)]
pub struct ClassificationReport {
    pub outcomes: Vec<ClassOutcome>,
    /// `x -> y = 1` and `y -> x = 1` imply `x = y`.
    pub leq_antisymmetric: bool,
    pub implicative: bool,
    pub commutative: bool,
}

impl ClassificationReport {
    pub fn outcome(&self, c: ClassId) -> &ClassOutcome {
        self.outcomes
            .iter()
            .find(|o| o.class == c)
            .expect("report covers every class")
    }

    pub fn is(&self, c: ClassId) -> bool {
        self.outcome(c).passed()
    }
}

/// Inclusion arrows between classes: membership in the first implies
/// membership in the second on any model. Checked on every classification.
const IMPLICATION_ARROWS: &[(ClassId, ClassId)] = &[
    (ClassId::Qw, ClassId::PreW),
    (ClassId::Qw, ClassId::Iom),
    (ClassId::Qw, ClassId::MetaW),
    (ClassId::PreW, ClassId::MetaW),
    (ClassId::Wajsberg, ClassId::Qw),
    (ClassId::IomLattice, ClassId::Iom),
];

/// Decide every class on `a` and verify the report against the inclusion
/// arrows. A violated arrow is a bug in the checker, so it panics rather than
/// reporting.
pub fn classify(a: &FiniteAlgebra) -> ClassificationReport {
    let outcomes: Vec<ClassOutcome> = ClassId::ALL.iter().map(|&c| check_class(a, c)).collect();
    let report = ClassificationReport {
        leq_antisymmetric: check_axiom(a, AxiomId::Bck4).passed(),
        implicative: check_axiom(a, AxiomId::Pimpl).passed(),
        commutative: check_axiom(a, AxiomId::Commutative).passed(),
        outcomes,
    };
    for &(from, to) in IMPLICATION_ARROWS {
        assert!(
            !report.is(from) || report.is(to),
            "class checker inconsistency: {from} holds but {to} does not"
        );
    }
    if report.implicative && report.is(ClassId::InvolutiveBe) {
        let iom = report.is(ClassId::Iom);
        assert_eq!(iom, report.is(ClassId::Qw), "implicative: IOM and QW must agree");
        assert_eq!(iom, report.is(ClassId::PreW), "implicative: IOM and pre-W must agree");
    }
    report
}

/// One structure-theorem assertion, checked model by model.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MetaTheorem {
    /// pre-W implies meta-W.
    PreWImpliesMetaW,
    /// QW implies meta-W.
    QwImpliesMetaW,
    /// Within IOM models, QW and meta-W coincide.
    IomQwIffMetaW,
    /// On implicative models, IOM, QW and pre-W coincide, and IOM implies meta-W.
    ImplicativeCollapse,
    /// Wajsberg implies QW, pre-W, IOM and meta-W.
    WajsbergImpliesAll,
    /// pre-W together with antisymmetry of `<=` is exactly Wajsberg.
    PreWAntisymIffWajsberg,
    /// meta-W together with antisymmetry of `<=` is exactly Wajsberg.
    MetaWAntisymIffWajsberg,
    /// On IOM models, Wajsberg holds iff both absorption/exchange conditions
    /// `x <=Q (x -> y) -> y` and `((x -> y) -> y) -> x = y -> x` hold.
    IomWajsbergCriterion,
    /// On Wajsberg models the two order relations coincide.
    WajsbergOrdersCoincide,
    /// On QW models, Wajsberg holds iff the commutative center is everything.
    QwWajsbergIffFullCenter,
}

impl MetaTheorem {
    pub const ALL: &'static [MetaTheorem] = &[
        MetaTheorem::PreWImpliesMetaW,
        MetaTheorem::QwImpliesMetaW,
        MetaTheorem::IomQwIffMetaW,
        MetaTheorem::ImplicativeCollapse,
        MetaTheorem::WajsbergImpliesAll,
        MetaTheorem::PreWAntisymIffWajsberg,
        MetaTheorem::MetaWAntisymIffWajsberg,
        MetaTheorem::IomWajsbergCriterion,
        MetaTheorem::WajsbergOrdersCoincide,
        MetaTheorem::QwWajsbergIffFullCenter,
    ];

    pub fn id(self) -> &'static str {
        match self {
            MetaTheorem::PreWImpliesMetaW => "pre-w-implies-meta-w",
            MetaTheorem::QwImpliesMetaW => "qw-implies-meta-w",
            MetaTheorem::IomQwIffMetaW => "iom-qw-iff-meta-w",
            MetaTheorem::ImplicativeCollapse => "implicative-collapse",
            MetaTheorem::WajsbergImpliesAll => "wajsberg-implies-all",
            MetaTheorem::PreWAntisymIffWajsberg => "pre-w-antisym-iff-wajsberg",
            MetaTheorem::MetaWAntisymIffWajsberg => "meta-w-antisym-iff-wajsberg",
            MetaTheorem::IomWajsbergCriterion => "iom-wajsberg-criterion",
            MetaTheorem::WajsbergOrdersCoincide => "wajsberg-orders-coincide",
            MetaTheorem::QwWajsbergIffFullCenter => "qw-wajsberg-iff-full-center",
        }
    }
}

/// A model on which one of the assertions fails.
#[derive(Debug, Clone)]
pub struct MetaViolation {
    pub model_index: usize,
    pub theorem: MetaTheorem,
    pub algebra: FiniteAlgebra,
}

#[derive(Debug, Clone, Default)]
pub struct MetaTheoremReport {
    pub models_checked: usize,
    pub violations: Vec<MetaViolation>,
}

impl MetaTheoremReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

#[derive(Debug, thiserror::Error)]
pub enum MetaError {
    #[error("model {index} is not an involutive BE algebra (fails {axiom})")]
    NotInvolutiveBe { index: usize, axiom: AxiomId },
}

fn both_criterion_conditions(a: &FiniteAlgebra) -> bool {
    let n = a.size();
    for x in 0..n {
        for y in 0..n {
            let jxy = a.imp(a.imp(x, y), y);
            if !a.leq_q(x, jxy) {
                return false;
            }
            if a.imp(jxy, x) != a.imp(y, x) {
                return false;
            }
        }
    }
    true
}

fn orders_coincide(a: &FiniteAlgebra) -> bool {
    let n = a.size();
    (0..n).all(|x| (0..n).all(|y| a.leq(x, y) == a.leq_q(x, y)))
}

fn theorem_holds(a: &FiniteAlgebra, r: &ClassificationReport, t: MetaTheorem) -> bool {
    use ClassId::*;
    let is = |c| r.is(c);
    match t {
        MetaTheorem::PreWImpliesMetaW => !is(PreW) || is(MetaW),
        MetaTheorem::QwImpliesMetaW => !is(Qw) || is(MetaW),
        MetaTheorem::IomQwIffMetaW => !is(Iom) || (is(Qw) == is(MetaW)),
        MetaTheorem::ImplicativeCollapse => {
            !is(Implicative)
                || (is(Iom) == is(Qw) && is(Qw) == is(PreW) && (!is(Iom) || is(MetaW)))
        }
        MetaTheorem::WajsbergImpliesAll => {
            !is(Wajsberg) || (is(Qw) && is(PreW) && is(Iom) && is(MetaW))
        }
        MetaTheorem::PreWAntisymIffWajsberg => {
            !is(PreW) || ((r.leq_antisymmetric) == is(Wajsberg))
        }
        MetaTheorem::MetaWAntisymIffWajsberg => {
            !is(MetaW) || ((r.leq_antisymmetric) == is(Wajsberg))
        }
        MetaTheorem::IomWajsbergCriterion => {
            !is(Iom) || (is(Wajsberg) == both_criterion_conditions(a))
        }
        MetaTheorem::WajsbergOrdersCoincide => !is(Wajsberg) || orders_coincide(a),
        MetaTheorem::QwWajsbergIffFullCenter => {
            !is(Qw) || (is(Wajsberg) == (center::center_set(a).len() == a.size()))
        }
    }
}

/// Check every structure theorem on every supplied model. Every model must be
/// an involutive BE algebra; the report lists each violating (model, theorem)
/// pair verbatim.
pub fn verify_meta_theorems<'a>(
    models: impl IntoIterator<Item = &'a FiniteAlgebra>,
) -> Result<MetaTheoremReport, MetaError> {
    let mut report = MetaTheoremReport::default();
    for (index, a) in models.into_iter().enumerate() {
        let base = check_class(a, ClassId::InvolutiveBe);
        if base.status != CheckStatus::Pass {
            let axiom = base.failed.map(|f| f.axiom).unwrap_or(AxiomId::Be1);
            return Err(MetaError::NotInvolutiveBe { index, axiom });
        }
        let r = classify(a);
        for &t in MetaTheorem::ALL {
            if !theorem_holds(a, &r, t) {
                report.violations.push(MetaViolation {
                    model_index: index,
                    theorem: t,
                    algebra: a.clone(),
                });
            }
        }
        report.models_checked += 1;
    }
    Ok(report)
}
