//! The commutative center: elements commuting with everything under the
//! derived join, its closure properties, and the Wajsberg axioms on the
//! restricted implication table.

use crate::algebra::FiniteAlgebra;
use crate::axioms::{check_class, AxiomId, CheckStatus, ClassId};

/// `x` and `y` commute when the derived join agrees both ways.
pub fn commutes(a: &FiniteAlgebra, x: usize, y: usize) -> bool {
    a.join(x, y) == a.join(y, x)
}

/// The set of elements commuting with every element, in input order.
pub fn center_set(a: &FiniteAlgebra) -> Vec<usize> {
    (0..a.size())
        .filter(|&x| (0..a.size()).all(|y| commutes(a, x, y)))
        .collect()
}

/// Outcome of one closure or subalgebra check on the center.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CenterCheck {
    pub id: &'static str,
    pub status: CheckStatus,
    /// Falsifying elements (center members, as carrier indices).
    pub witness: Option<Vec<usize>>,
}

impl CenterCheck {
    pub fn passed(&self) -> bool {
        self.status == CheckStatus::Pass
    }
}

/// Full center analysis of one algebra.
#[derive(Debug, Clone)]
pub struct CenterResult {
    /// `commute_table[x][y]` iff `x` and `y` commute.
    pub commute_table: Vec<Vec<bool>>,
    /// Center elements as carrier indices, in input order.
    pub center: Vec<usize>,
    /// Closure under ->, *, join, meet and membership of 0 and 1.
    pub closure_report: Vec<CenterCheck>,
    /// W1-W4 on the implication table restricted to the center.
    pub wajsberg_report: Vec<CenterCheck>,
}

impl CenterResult {
    pub fn all_passed(&self) -> bool {
        self.closure_report.iter().all(CenterCheck::passed)
            && self.wajsberg_report.iter().all(CenterCheck::passed)
    }
}

fn prereq_failed(ids: &[&'static str]) -> Vec<CenterCheck> {
    ids.iter()
        .map(|&id| CenterCheck {
            id,
            status: CheckStatus::PrereqFailed,
            witness: None,
        })
        .collect()
}

const CLOSURE_IDS: &[&str] = &[
    "contains-zero",
    "contains-unit",
    "closed-imp",
    "closed-star",
    "closed-join",
    "closed-meet",
];

/// Compute the center and, when the input is an implicative-orthomodular
/// algebra, verify that it is a Wajsberg subalgebra: closed under the four
/// operations, containing both constants, and satisfying W1-W4 on the
/// restriction. On other inputs the commute table and center are still
/// computed but the subalgebra checks report `PrereqFailed`.
pub fn center(a: &FiniteAlgebra) -> CenterResult {
    let n = a.size();
    let commute_table: Vec<Vec<bool>> = (0..n)
        .map(|x| (0..n).map(|y| commutes(a, x, y)).collect())
        .collect();
    let center: Vec<usize> = (0..n)
        .filter(|&x| commute_table[x].iter().all(|&c| c))
        .collect();

    if check_class(a, ClassId::Iom).status != CheckStatus::Pass {
        return CenterResult {
            commute_table,
            center,
            closure_report: prereq_failed(CLOSURE_IDS),
            wajsberg_report: prereq_failed(&["w1", "w2", "w3", "w4"]),
        };
    }

    let in_center = |x: usize| center.binary_search(&x).is_ok();
    let mut closure_report = Vec::new();
    let membership = |id: &'static str, e: usize| CenterCheck {
        id,
        status: if in_center(e) { CheckStatus::Pass } else { CheckStatus::Fail },
        witness: if in_center(e) { None } else { Some(vec![e]) },
    };
    closure_report.push(membership("contains-zero", a.zero()));
    closure_report.push(membership("contains-unit", a.unit()));
    type ClosureOp<'a> = (&'static str, Box<dyn Fn(usize, usize) -> usize + 'a>);
    let ops: [ClosureOp<'_>; 4] = [
        ("closed-imp", Box::new(|x, y| a.imp(x, y))),
        ("closed-star", Box::new(|x, _| a.star(x))),
        ("closed-join", Box::new(|x, y| a.join(x, y))),
        ("closed-meet", Box::new(|x, y| a.meet(x, y))),
    ];
    for (id, op) in ops {
        let unary = id == "closed-star";
        let mut witness = None;
        'scan: for &x in &center {
            for &y in &center {
                if !in_center(op(x, y)) {
                    witness = Some(if unary { vec![x] } else { vec![x, y] });
                    break 'scan;
                }
                if unary {
                    break;
                }
            }
        }
        closure_report.push(CenterCheck {
            id,
            status: if witness.is_none() { CheckStatus::Pass } else { CheckStatus::Fail },
            witness,
        });
    }

    let restricted = restrict(a, &center);
    let wajsberg_report = [
        ("w1", AxiomId::W1),
        ("w2", AxiomId::W2),
        ("w3", AxiomId::W3),
        ("w4", AxiomId::W4),
    ]
    .into_iter()
    .map(|(id, ax)| match &restricted {
        Some(r) => {
            let out = crate::axioms::check_axiom(r, ax);
            CenterCheck {
                id,
                status: out.status,
                // report witnesses as indices into the original carrier
                witness: out.witness.map(|w| w.iter().map(|&i| center[i]).collect()),
            }
        }
        None => CenterCheck {
            id,
            status: CheckStatus::Fail,
            witness: None,
        },
    })
    .collect();

    CenterResult {
        commute_table,
        center,
        closure_report,
        wajsberg_report,
    }
}

/// The algebra on the center elements (re-indexed in input order), when the
/// center is closed under implication and contains both constants.
fn restrict(a: &FiniteAlgebra, center: &[usize]) -> Option<FiniteAlgebra> {
    let pos = |e: usize| center.iter().position(|&c| c == e);
    let unit = pos(a.unit())?;
    let zero = pos(a.zero())?;
    let mut table = Vec::with_capacity(center.len());
    for &x in center {
        let mut row = Vec::with_capacity(center.len());
        for &y in center {
            row.push(pos(a.imp(x, y))?);
        }
        table.push(row);
    }
    let names = center.iter().map(|&e| a.name(e).to_string()).collect();
    FiniteAlgebra::new(names, unit, zero, table).ok()
}

/// Violation of the three-way commutation equivalence at one pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommutationViolation {
    pub x: usize,
    pub y: usize,
    pub join_commutes: bool,
    pub meet_commutes: bool,
    pub projection_holds: bool,
}

/// On implicative-orthomodular algebras, join-commutation, meet-commutation
/// and the projection identity `(x -> y) -> (x /\ y) = x` agree at every pair.
/// Returns the pairs where the three conditions disagree.
pub fn check_commutation_criteria(a: &FiniteAlgebra) -> Vec<CommutationViolation> {
    let n = a.size();
    let mut violations = Vec::new();
    for x in 0..n {
        for y in 0..n {
            let join_commutes = a.join(x, y) == a.join(y, x);
            let meet_commutes = a.meet(x, y) == a.meet(y, x);
            let projection_holds = a.imp(a.imp(x, y), a.meet(x, y)) == x;
            if join_commutes != meet_commutes || meet_commutes != projection_holds {
                violations.push(CommutationViolation {
                    x,
                    y,
                    join_commutes,
                    meet_commutes,
                    projection_holds,
                });
            }
        }
    }
    violations
}
