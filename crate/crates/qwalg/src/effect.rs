//! Partial-addition view of an involutive BE algebra: `x (+) y` is defined
//! exactly when `x <=Q y*`, with value `x* -> y`, and the four effect-algebra
//! axioms are checked on the resulting partial table.

use crate::algebra::FiniteAlgebra;

/// The partial addition on one carrier.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialOpTable {
    pub size: usize,
    /// `defined[x][y]` iff `x <=Q star(y)`.
    pub defined: Vec<Vec<bool>>,
    /// `value[x][y] = imp(star(x), y)`, present exactly where defined.
    pub value: Vec<Vec<Option<usize>>>,
    pub zero: usize,
    pub unit: usize,
}

impl PartialOpTable {
    pub fn get(&self, x: usize, y: usize) -> Option<usize> {
        self.value[x][y]
    }
}

#[derive(Debug, thiserror::Error)]
pub enum EffectError {
    #[error("star is not an involution at element {element}, partial addition undefined")]
    NotInvolutive { element: usize },
}

/// Build the partial addition. Refuses non-involutive input, since the
/// construction reads `star` as an involution.
pub fn build_effect(a: &FiniteAlgebra) -> Result<PartialOpTable, EffectError> {
    if let Some(e) = (0..a.size()).find(|&x| a.star(a.star(x)) != x) {
        return Err(EffectError::NotInvolutive { element: e });
    }
    let n = a.size();
    let mut defined = vec![vec![false; n]; n];
    let mut value = vec![vec![None; n]; n];
    for x in 0..n {
        for y in 0..n {
            if a.leq_q(x, a.star(y)) {
                defined[x][y] = true;
                value[x][y] = Some(a.imp(a.star(x), y));
            }
        }
    }
    Ok(PartialOpTable {
        size: n,
        defined,
        value,
        zero: a.zero(),
        unit: a.unit(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EffectAxiom {
    /// Commutativity: definedness and value symmetric in the arguments.
    E1,
    /// Associativity in the conditional direction of the definition.
    E2,
    /// Existence and uniqueness of the orthosupplement.
    E3,
    /// If `x (+) 1` is defined then `x = 0`.
    E4,
}

impl EffectAxiom {
    pub const ALL: &'static [EffectAxiom] =
        &[EffectAxiom::E1, EffectAxiom::E2, EffectAxiom::E3, EffectAxiom::E4];

    pub fn id(self) -> &'static str {
        match self {
            EffectAxiom::E1 => "e1",
            EffectAxiom::E2 => "e2",
            EffectAxiom::E3 => "e3",
            EffectAxiom::E4 => "e4",
        }
    }
}

/// Why an effect axiom failed at the witness tuple.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FailureKind {
    /// A sum the axiom requires to exist is undefined.
    UndefinedWhereRequired,
    /// Both sides are defined but the values differ.
    DefinedButUnequal,
    /// E3 only: no orthosupplement, or more than one.
    SupplementNotUnique,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EffectOutcome {
    pub axiom: EffectAxiom,
    pub witness: Option<Vec<usize>>,
    pub kind: Option<FailureKind>,
}

impl EffectOutcome {
    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }
    fn pass(axiom: EffectAxiom) -> Self {
        EffectOutcome { axiom, witness: None, kind: None }
    }
    fn fail(axiom: EffectAxiom, witness: Vec<usize>, kind: FailureKind) -> Self {
        EffectOutcome { axiom, witness: Some(witness), kind: Some(kind) }
    }
}

#[derive(Debug, Clone)]
pub struct EffectReport {
    pub outcomes: Vec<EffectOutcome>,
}

impl EffectReport {
    pub fn passed(&self) -> bool {
        self.outcomes.iter().all(EffectOutcome::passed)
    }
    pub fn outcome(&self, axiom: EffectAxiom) -> &EffectOutcome {
        self.outcomes.iter().find(|o| o.axiom == axiom).unwrap()
    }
}

fn check_e1(p: &PartialOpTable) -> EffectOutcome {
    for x in 0..p.size {
        for y in 0..p.size {
            if p.defined[x][y] != p.defined[y][x] {
                return EffectOutcome::fail(
                    EffectAxiom::E1,
                    vec![x, y],
                    FailureKind::UndefinedWhereRequired,
                );
            }
            if p.defined[x][y] && p.value[x][y] != p.value[y][x] {
                return EffectOutcome::fail(
                    EffectAxiom::E1,
                    vec![x, y],
                    FailureKind::DefinedButUnequal,
                );
            }
        }
    }
    EffectOutcome::pass(EffectAxiom::E1)
}

// Whenever y (+) z and x (+) (y (+) z) are defined, then x (+) y and
// (x (+) y) (+) z must be defined and equal to x (+) (y (+) z).
fn check_e2(p: &PartialOpTable) -> EffectOutcome {
    for x in 0..p.size {
        for y in 0..p.size {
            for z in 0..p.size {
                let Some(yz) = p.get(y, z) else { continue };
                let Some(total) = p.get(x, yz) else { continue };
                let Some(xy) = p.get(x, y) else {
                    return EffectOutcome::fail(
                        EffectAxiom::E2,
                        vec![x, y, z],
                        FailureKind::UndefinedWhereRequired,
                    );
                };
                match p.get(xy, z) {
                    None => {
                        return EffectOutcome::fail(
                            EffectAxiom::E2,
                            vec![x, y, z],
                            FailureKind::UndefinedWhereRequired,
                        )
                    }
                    Some(v) if v != total => {
                        return EffectOutcome::fail(
                            EffectAxiom::E2,
                            vec![x, y, z],
                            FailureKind::DefinedButUnequal,
                        )
                    }
                    Some(_) => {}
                }
            }
        }
    }
    EffectOutcome::pass(EffectAxiom::E2)
}

// Every x has exactly one y with x (+) y defined and equal to 1.
fn check_e3(p: &PartialOpTable) -> EffectOutcome {
    for x in 0..p.size {
        let supplements: Vec<usize> = (0..p.size)
            .filter(|&y| p.get(x, y) == Some(p.unit))
            .collect();
        if supplements.len() != 1 {
            return EffectOutcome::fail(
                EffectAxiom::E3,
                vec![x],
                FailureKind::SupplementNotUnique,
            );
        }
    }
    EffectOutcome::pass(EffectAxiom::E3)
}

fn check_e4(p: &PartialOpTable) -> EffectOutcome {
    for x in 0..p.size {
        if p.defined[x][p.unit] && x != p.zero {
            return EffectOutcome::fail(
                EffectAxiom::E4,
                vec![x],
                FailureKind::DefinedButUnequal,
            );
        }
    }
    EffectOutcome::pass(EffectAxiom::E4)
}

pub fn check_effect_axioms(p: &PartialOpTable) -> EffectReport {
    EffectReport {
        outcomes: vec![check_e1(p), check_e2(p), check_e3(p), check_e4(p)],
    }
}

/// When all four axioms pass, the unique orthosupplement of each element.
pub fn orthosupplements(p: &PartialOpTable) -> Option<Vec<usize>> {
    (0..p.size)
        .map(|x| {
            let mut found = (0..p.size).filter(|&y| p.get(x, y) == Some(p.unit));
            match (found.next(), found.next()) {
                (Some(y), None) => Some(y),
                _ => None,
            }
        })
        .collect()
}

/// Build the table and check the axioms in one step.
pub fn effect_report(a: &FiniteAlgebra) -> Result<(PartialOpTable, EffectReport), EffectError> {
    let p = build_effect(a)?;
    let r = check_effect_axioms(&p);
    Ok((p, r))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testdata;

    #[test]
    fn prew6_has_asymmetric_definedness_at_b_d() {
        let a = testdata::prew6();
        let p = build_effect(&a).unwrap();
        let b = a.element_index("b").unwrap();
        let c = a.element_index("c").unwrap();
        let d = a.element_index("d").unwrap();
        assert!(p.defined[b][d]);
        assert_eq!(p.get(b, d), Some(c));
        assert!(!p.defined[d][b]);
        let r = check_effect_axioms(&p);
        let e1 = r.outcome(EffectAxiom::E1);
        assert_eq!(e1.witness, Some(vec![b, d]));
        assert_eq!(e1.kind, Some(FailureKind::UndefinedWhereRequired));
    }

    #[test]
    fn iom6_is_an_effect_algebra() {
        let a = testdata::iom6();
        let p = build_effect(&a).unwrap();
        let r = check_effect_axioms(&p);
        assert!(r.passed(), "{:?}", r);
        // the orthosupplement is star
        let supp = orthosupplements(&p).unwrap();
        for x in 0..a.size() {
            assert_eq!(supp[x], a.star(x));
        }
    }

    #[test]
    fn star_partner_always_defined_with_value_one() {
        for a in [testdata::qw6(), testdata::prew6(), testdata::iom6(), testdata::metaw6()] {
            let p = build_effect(&a).unwrap();
            for x in 0..a.size() {
                assert_eq!(p.get(x, a.star(x)), Some(a.unit()));
                assert_eq!(p.get(a.zero(), x), Some(x));
            }
        }
    }

    #[test]
    fn one_element_algebra_is_degenerate_effect_algebra() {
        let a = crate::algebra::FiniteAlgebra::from_table(vec![vec![0]]).unwrap();
        let p = build_effect(&a).unwrap();
        assert!(check_effect_axioms(&p).passed());
    }

    #[test]
    fn non_involutive_input_refused() {
        let a = crate::algebra::FiniteAlgebra::from_table(vec![
            vec![2, 2, 2],
            vec![2, 2, 2],
            vec![0, 1, 2],
        ])
        .unwrap();
        assert!(matches!(build_effect(&a), Err(EffectError::NotInvolutive { .. })));
    }
}
