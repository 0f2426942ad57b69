//! Finite algebras given by an implication Cayley table, together with all
//! derived operations and the signature transforms between the implicational
//! and product presentations.
//!
//! The carrier is always `0..n`; element names are presentation-only. The
//! implication table is the single source of truth, everything else (`*`,
//! `⊔`, `⋒`, `⊙`, total `⊕`, `≤`, `≤_Q`) is computed eagerly on construction.

use thiserror::Error;

use crate::axioms::{self, AxiomId, CheckStatus, ClassId};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("carrier must have at least one element")]
    EmptyCarrier,
    #[error("expected {expected} element names, got {got}")]
    NameCount { expected: usize, got: usize },
    #[error("duplicate element name `{0}`")]
    DuplicateName(String),
    #[error("constant index {index} out of range for size {size}")]
    BadConstant { index: usize, size: usize },
    #[error("unit and zero coincide in an algebra of size > 1")]
    UnitEqualsZero,
    #[error("table must be {size}x{size}, row {row} has {got} entries")]
    BadTableShape { size: usize, row: usize, got: usize },
    #[error("table entry at row {row}, column {col} is {value}, out of range for size {size}")]
    EntryOutOfRange {
        row: usize,
        col: usize,
        value: usize,
        size: usize,
    },
    #[error("element index {index} out of range for size {size}")]
    IndexOutOfRange { index: usize, size: usize },
}

/// Binary connectives of the derived signature.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Conn {
    Imp,
    Join,
    Meet,
    Odot,
    Oplus,
}

/// Tables computed from the implication table.
///
/// `star[x] = x → 0`, `join = (x → y) → y`, `meet = ((x* → y*) → y*)*`,
/// `odot = (x → y*)*`, `oplus = x* → y`, `leq[x][y] ⇔ x → y = 1`,
/// `leq_q[x][y] ⇔ x ⋒ y = x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivedOps {
    pub star: Vec<usize>,
    pub join: Vec<Vec<usize>>,
    pub meet: Vec<Vec<usize>>,
    pub odot: Vec<Vec<usize>>,
    pub oplus: Vec<Vec<usize>>,
    pub leq: Vec<Vec<bool>>,
    pub leq_q: Vec<Vec<bool>>,
}

impl DerivedOps {
    fn compute(imp: &[Vec<usize>], unit: usize, zero: usize) -> DerivedOps {
        let n = imp.len();
        let star: Vec<usize> = (0..n).map(|x| imp[x][zero]).collect();
        let join: Vec<Vec<usize>> = (0..n)
            .map(|x| (0..n).map(|y| imp[imp[x][y]][y]).collect())
            .collect();
        let meet: Vec<Vec<usize>> = (0..n)
            .map(|x| (0..n).map(|y| star[join[star[x]][star[y]]]).collect())
            .collect();
        let odot: Vec<Vec<usize>> = (0..n)
            .map(|x| (0..n).map(|y| star[imp[x][star[y]]]).collect())
            .collect();
        let oplus: Vec<Vec<usize>> = (0..n)
            .map(|x| (0..n).map(|y| imp[star[x]][y]).collect())
            .collect();
        let leq: Vec<Vec<bool>> = (0..n)
            .map(|x| (0..n).map(|y| imp[x][y] == unit).collect())
            .collect();
        let leq_q: Vec<Vec<bool>> = (0..n)
            .map(|x| (0..n).map(|y| meet[x][y] == x).collect())
            .collect();
        DerivedOps {
            star,
            join,
            meet,
            odot,
            oplus,
            leq,
            leq_q,
        }
    }
}

/// A finite algebra `(X, →, 0, 1)` presented by its implication table.
///
/// No algebraic axiom is an invariant of this type; axioms are decided by the
/// predicates in [`crate::axioms`]. Immutable after construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteAlgebra {
    names: Vec<String>,
    unit: usize,
    zero: usize,
    imp: Vec<Vec<usize>>,
    ops: DerivedOps,
}

impl FiniteAlgebra {
    pub fn new(
        names: Vec<String>,
        unit: usize,
        zero: usize,
        imp: Vec<Vec<usize>>,
    ) -> Result<FiniteAlgebra, AlgebraError> {
        let n = names.len();
        if n == 0 {
            return Err(AlgebraError::EmptyCarrier);
        }
        for (i, a) in names.iter().enumerate() {
            if names[..i].contains(a) {
                return Err(AlgebraError::DuplicateName(a.clone()));
            }
        }
        for &c in &[unit, zero] {
            if c >= n {
                return Err(AlgebraError::BadConstant { index: c, size: n });
            }
        }
        if unit == zero && n > 1 {
            return Err(AlgebraError::UnitEqualsZero);
        }
        if imp.len() != n {
            return Err(AlgebraError::BadTableShape {
                size: n,
                row: imp.len(),
                got: 0,
            });
        }
        for (row, r) in imp.iter().enumerate() {
            if r.len() != n {
                return Err(AlgebraError::BadTableShape {
                    size: n,
                    row,
                    got: r.len(),
                });
            }
            for (col, &value) in r.iter().enumerate() {
                if value >= n {
                    return Err(AlgebraError::EntryOutOfRange {
                        row,
                        col,
                        value,
                        size: n,
                    });
                }
            }
        }
        let ops = DerivedOps::compute(&imp, unit, zero);
        Ok(FiniteAlgebra {
            names,
            unit,
            zero,
            imp,
            ops,
        })
    }

    /// Anonymous algebra with the conventional names `0, a, b, ..., 1`.
    pub fn from_table(imp: Vec<Vec<usize>>) -> Result<FiniteAlgebra, AlgebraError> {
        let n = imp.len();
        FiniteAlgebra::new(default_names(n), if n == 1 { 0 } else { n - 1 }, 0, imp)
    }

    pub fn size(&self) -> usize {
        self.names.len()
    }

    pub fn unit(&self) -> usize {
        self.unit
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, x: usize) -> &str {
        &self.names[x]
    }

    pub fn element_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn ops(&self) -> &DerivedOps {
        &self.ops
    }

    pub fn imp_table(&self) -> &[Vec<usize>] {
        &self.imp
    }

    pub fn imp(&self, x: usize, y: usize) -> usize {
        self.imp[x][y]
    }

    pub fn star(&self, x: usize) -> usize {
        self.ops.star[x]
    }

    pub fn join(&self, x: usize, y: usize) -> usize {
        self.ops.join[x][y]
    }

    pub fn meet(&self, x: usize, y: usize) -> usize {
        self.ops.meet[x][y]
    }

    pub fn odot(&self, x: usize, y: usize) -> usize {
        self.ops.odot[x][y]
    }

    pub fn oplus(&self, x: usize, y: usize) -> usize {
        self.ops.oplus[x][y]
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.ops.leq[x][y]
    }

    pub fn leq_q(&self, x: usize, y: usize) -> bool {
        self.ops.leq_q[x][y]
    }

    pub fn apply(&self, op: Conn, x: usize, y: usize) -> usize {
        match op {
            Conn::Imp => self.imp[x][y],
            Conn::Join => self.ops.join[x][y],
            Conn::Meet => self.ops.meet[x][y],
            Conn::Odot => self.ops.odot[x][y],
            Conn::Oplus => self.ops.oplus[x][y],
        }
    }

    /// Bounds-checked table lookup.
    pub fn apply_checked(&self, op: Conn, x: usize, y: usize) -> Result<usize, AlgebraError> {
        let n = self.size();
        for &i in &[x, y] {
            if i >= n {
                return Err(AlgebraError::IndexOutOfRange { index: i, size: n });
            }
        }
        Ok(self.apply(op, x, y))
    }

    /// The same table with elements relabeled by `perm` (`perm[old] = new`).
    pub fn relabel(&self, perm: &[usize]) -> FiniteAlgebra {
        let n = self.size();
        debug_assert_eq!(perm.len(), n);
        let mut imp = vec![vec![0; n]; n];
        let mut names = vec![String::new(); n];
        for x in 0..n {
            names[perm[x]] = self.names[x].clone();
            for y in 0..n {
                imp[perm[x]][perm[y]] = perm[self.imp[x][y]];
            }
        }
        FiniteAlgebra::new(names, perm[self.unit], perm[self.zero], imp)
            .expect("relabeling preserves well-formedness")
    }
}

pub(crate) fn default_names(n: usize) -> Vec<String> {
    if n == 1 {
        return vec!["1".into()];
    }
    let mut names = vec!["0".to_string()];
    for i in 1..n - 1 {
        // a, b, ..., then e2, e3, ... past the alphabet
        let c = b'a' + (i - 1) as u8;
        if c <= b'z' {
            names.push((c as char).to_string());
        } else {
            names.push(format!("e{i}"));
        }
    }
    names.push("1".into());
    names
}

/// A finite algebra `(X, ⊙, *, 1)` in the product signature.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MbeAlgebra {
    names: Vec<String>,
    unit: usize,
    zero: usize,
    prod: Vec<Vec<usize>>,
    star: Vec<usize>,
}

impl MbeAlgebra {
    pub fn new(
        names: Vec<String>,
        unit: usize,
        zero: usize,
        prod: Vec<Vec<usize>>,
        star: Vec<usize>,
    ) -> Result<MbeAlgebra, AlgebraError> {
        let n = names.len();
        // reuse the implication-table validation for shape and ranges
        FiniteAlgebra::new(names.clone(), unit, zero, prod.clone())?;
        if star.len() != n {
            return Err(AlgebraError::BadTableShape {
                size: n,
                row: 0,
                got: star.len(),
            });
        }
        for (i, &v) in star.iter().enumerate() {
            if v >= n {
                return Err(AlgebraError::EntryOutOfRange {
                    row: i,
                    col: 0,
                    value: v,
                    size: n,
                });
            }
        }
        Ok(MbeAlgebra {
            names,
            unit,
            zero,
            prod,
            star,
        })
    }

    pub fn size(&self) -> usize {
        self.names.len()
    }

    pub fn unit(&self) -> usize {
        self.unit
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, x: usize) -> &str {
        &self.names[x]
    }

    pub fn prod(&self, x: usize, y: usize) -> usize {
        self.prod[x][y]
    }

    pub fn prod_table(&self) -> &[Vec<usize>] {
        &self.prod
    }

    pub fn star(&self, x: usize) -> usize {
        self.star[x]
    }

    pub fn star_table(&self) -> &[usize] {
        &self.star
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TransformError {
    #[error("not an involutive BE algebra: axiom {axiom} fails at ({witness})")]
    NotInvolutiveBe { axiom: AxiomId, witness: String },
    #[error("star table is not an involution at element `{0}`")]
    StarNotInvolutive(String),
}

/// Translate an involutive BE algebra into the product signature:
/// `x ⊙ y := (x → y*)*`.
pub fn phi_to_mbe(a: &FiniteAlgebra) -> Result<MbeAlgebra, TransformError> {
    let outcome = axioms::check_class(a, ClassId::InvolutiveBe);
    if outcome.status != CheckStatus::Pass {
        let failed = outcome.failed.expect("non-pass class outcome has a failure");
        let witness = failed
            .witness
            .as_deref()
            .unwrap_or(&[])
            .iter()
            .map(|&x| a.name(x).to_string())
            .collect::<Vec<_>>()
            .join(", ");
        return Err(TransformError::NotInvolutiveBe {
            axiom: failed.axiom,
            witness,
        });
    }
    let n = a.size();
    let prod = (0..n)
        .map(|x| (0..n).map(|y| a.odot(x, y)).collect())
        .collect();
    let star = (0..n).map(|x| a.star(x)).collect();
    Ok(MbeAlgebra::new(a.names().to_vec(), a.unit(), a.zero(), prod, star)
        .expect("image of a well-formed algebra is well-formed"))
}

/// Translate back into the implicational signature: `x → y := (x ⊙ y*)*`.
pub fn psi_to_be(m: &MbeAlgebra) -> Result<FiniteAlgebra, TransformError> {
    let n = m.size();
    for x in 0..n {
        if m.star(m.star(x)) != x {
            return Err(TransformError::StarNotInvolutive(m.name(x).to_string()));
        }
    }
    let imp = (0..n)
        .map(|x| (0..n).map(|y| m.star(m.prod(x, m.star(y)))).collect())
        .collect();
    FiniteAlgebra::new(m.names().to_vec(), m.unit(), m.zero(), imp).map_err(|_| {
        TransformError::StarNotInvolutive("table".into()) // unreachable: shapes validated above
    })
}
