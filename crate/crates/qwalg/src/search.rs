//! Exhaustive enumeration of involutive BE algebras by pruned backtracking
//! over the implication table, isomorphism rejection via canonical forms, and
//! counterexample search for statements.

use std::collections::HashSet;

use crate::algebra::FiniteAlgebra;
use crate::axioms::{check_class, ClassId};
use crate::terms::{check_statement, Statement};

#[derive(Debug, Clone)]
pub struct EnumerationConfig {
    /// Carrier size, at least 1.
    pub size: usize,
    /// Optional class membership post-filter.
    pub class_filter: Option<ClassId>,
    /// Emit one representative per isomorphism class.
    pub iso_reject: bool,
    /// Abort after this many search nodes.
    pub node_limit: Option<u64>,
}

impl EnumerationConfig {
    pub fn new(size: usize) -> Self {
        EnumerationConfig {
            size,
            class_filter: None,
            iso_reject: true,
            node_limit: None,
        }
    }

    pub fn with_class(mut self, class: ClassId) -> Self {
        self.class_filter = Some(class);
        self
    }

    pub fn without_iso_reject(mut self) -> Self {
        self.iso_reject = false;
        self
    }

    pub fn with_node_limit(mut self, limit: u64) -> Self {
        self.node_limit = Some(limit);
        self
    }
}

#[derive(Debug, thiserror::Error)]
pub enum SearchError {
    #[error("size must be at least 1")]
    EmptySize,
    #[error("node budget of {limit} exhausted after {explored} nodes; {found} models found so far")]
    BudgetExhausted {
        limit: u64,
        explored: u64,
        found: usize,
    },
}

/// Lexicographically least flattened implication table over all relabelings
/// that send zero to index 0 and unit to the last index. Two algebras have
/// equal canonical forms exactly when some constant-fixing bijection maps one
/// table to the other.
pub fn canonical_form(a: &FiniteAlgebra) -> Vec<usize> {
    let n = a.size();
    if n == 1 {
        return vec![a.imp(0, 0)];
    }
    // middle elements, in input order
    let middles: Vec<usize> = (0..n).filter(|&e| e != a.unit() && e != a.zero()).collect();
    let mut best: Option<Vec<usize>> = None;
    let mut perm_targets: Vec<usize> = (1..n - 1).collect();
    permute(&mut perm_targets, 0, &mut |targets| {
        let mut map = vec![0usize; n];
        map[a.zero()] = 0;
        map[a.unit()] = n - 1;
        for (i, &m) in middles.iter().enumerate() {
            map[m] = targets[i];
        }
        let mut flat = vec![0usize; n * n];
        for x in 0..n {
            for y in 0..n {
                flat[map[x] * n + map[y]] = map[a.imp(x, y)];
            }
        }
        if best.as_ref().is_none_or(|b| flat < *b) {
            best = Some(flat);
        }
    });
    best.unwrap()
}

fn permute(items: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == items.len() {
        f(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute(items, k + 1, f);
        items.swap(k, i);
    }
}

const UNSET: usize = usize::MAX;

struct Searcher {
    n: usize,
    zero: usize,
    table: Vec<Vec<usize>>,
    /// Row-major list of cells not fixed by the axioms.
    free_cells: Vec<(usize, usize)>,
    nodes: u64,
    node_limit: Option<u64>,
    budget_hit: bool,
    out: Vec<FiniteAlgebra>,
    class_filter: Option<ClassId>,
}

impl Searcher {
    fn new(cfg: &EnumerationConfig) -> Searcher {
        let n = cfg.size;
        let unit = n - 1;
        let zero = 0;
        let mut table = vec![vec![UNSET; n]; n];
        for x in 0..n {
            table[x][x] = unit; // x -> x = 1
            table[x][unit] = unit; // x -> 1 = 1
            table[unit][x] = x; // 1 -> x = x
            table[zero][x] = unit; // 0 -> x = 1 (boundedness)
        }
        let mut free_cells = Vec::new();
        for x in 0..n {
            for y in 0..n {
                if table[x][y] == UNSET {
                    free_cells.push((x, y));
                }
            }
        }
        Searcher {
            n,
            zero,
            table,
            free_cells,
            nodes: 0,
            node_limit: cfg.node_limit,
            budget_hit: false,
            out: Vec::new(),
            class_filter: cfg.class_filter,
        }
    }

    fn get(&self, x: usize, y: usize) -> usize {
        self.table[x][y]
    }

    /// Check every instance of the exchange, boundedness and involution
    /// constraints whose referenced cells are all assigned.
    fn consistent(&self) -> bool {
        let n = self.n;
        // involution: (x -> 0) -> 0 = x
        for x in 0..n {
            let sx = self.get(x, self.zero);
            if sx != UNSET {
                let ssx = self.get(sx, self.zero);
                if ssx != UNSET && ssx != x {
                    return false;
                }
            }
        }
        // exchange: x -> (y -> z) = y -> (x -> z)
        for x in 0..n {
            for y in x + 1..n {
                for z in 0..n {
                    let yz = self.get(y, z);
                    let xz = self.get(x, z);
                    if yz == UNSET || xz == UNSET {
                        continue;
                    }
                    let lhs = self.get(x, yz);
                    let rhs = self.get(y, xz);
                    if lhs != UNSET && rhs != UNSET && lhs != rhs {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn emit(&mut self) {
        let a = FiniteAlgebra::from_table(self.table.clone())
            .expect("search invariants guarantee a well-formed table");
        debug_assert!(check_class(&a, ClassId::InvolutiveBe).passed());
        if let Some(c) = self.class_filter {
            if !check_class(&a, c).passed() {
                return;
            }
        }
        self.out.push(a);
    }

    fn run(&mut self, cell: usize) {
        if self.budget_hit {
            return;
        }
        if cell == self.free_cells.len() {
            self.emit();
            return;
        }
        let (x, y) = self.free_cells[cell];
        for v in 0..self.n {
            if let Some(limit) = self.node_limit {
                if self.nodes >= limit {
                    self.budget_hit = true;
                    return;
                }
            }
            self.nodes += 1;
            self.table[x][y] = v;
            if self.consistent() {
                self.run(cell + 1);
            }
            if self.budget_hit {
                break;
            }
        }
        self.table[x][y] = UNSET;
    }
}

/// All involutive BE algebras of the configured size, in deterministic order.
/// With isomorphism rejection the result holds one representative per
/// isomorphism class, sorted by canonical form; without, it holds every table
/// in search order.
pub fn enumerate(cfg: &EnumerationConfig) -> Result<Vec<FiniteAlgebra>, SearchError> {
    if cfg.size == 0 {
        return Err(SearchError::EmptySize);
    }
    if cfg.size == 1 {
        let a = FiniteAlgebra::from_table(vec![vec![0]]).unwrap();
        let keep = cfg
            .class_filter
            .is_none_or(|c| check_class(&a, c).passed());
        return Ok(if keep { vec![a] } else { vec![] });
    }
    let mut s = Searcher::new(cfg);
    s.run(0);
    if s.budget_hit {
        return Err(SearchError::BudgetExhausted {
            limit: s.node_limit.unwrap(),
            explored: s.nodes,
            found: s.out.len(),
        });
    }
    let mut models = s.out;
    if cfg.iso_reject {
        let mut seen = HashSet::new();
        let mut keyed: Vec<(Vec<usize>, FiniteAlgebra)> = Vec::new();
        for a in models {
            let cf = canonical_form(&a);
            if seen.insert(cf.clone()) {
                keyed.push((cf, a));
            }
        }
        keyed.sort_by(|l, r| l.0.cmp(&r.0));
        models = keyed.into_iter().map(|(_, a)| a).collect();
    }
    Ok(models)
}

/// Number of models `enumerate` would yield.
pub fn count(cfg: &EnumerationConfig) -> Result<usize, SearchError> {
    Ok(enumerate(cfg)?.len())
}

/// A falsifying model together with the least falsifying assignment.
#[derive(Debug, Clone)]
pub struct Counterexample {
    pub algebra: FiniteAlgebra,
    /// Variable name, element index pairs in variable-name order.
    pub assignment: Vec<(String, usize)>,
}

/// Smallest-size, canonically least model in the class falsifying the
/// statement, or `None` when every model up to `max_size` satisfies it.
pub fn find_counterexample(
    s: &Statement,
    class: ClassId,
    max_size: usize,
) -> Result<Option<Counterexample>, SearchError> {
    for size in 1..=max_size {
        let cfg = EnumerationConfig::new(size).with_class(class);
        for a in enumerate(&cfg)? {
            let outcome = check_statement(&a, s).expect("closed statement over model variables");
            if let Some(assignment) = outcome.witness {
                return Ok(Some(Counterexample { algebra: a, assignment }));
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::terms::parse;
    use crate::testdata;

    #[test]
    fn size_one_is_unique() {
        let cfg = EnumerationConfig::new(1);
        assert_eq!(count(&cfg).unwrap(), 1);
    }

    #[test]
    fn size_two_is_the_two_element_chain() {
        let models = enumerate(&EnumerationConfig::new(2)).unwrap();
        assert_eq!(models.len(), 1);
        let a = &models[0];
        assert_eq!(a.imp_table(), &[vec![1, 1], vec![0, 1]]);
    }

    #[test]
    fn canonical_form_is_relabeling_invariant() {
        let a = testdata::iom6();
        // swap the two middle elements a and d (indices 1 and 4)
        let perm = vec![0, 4, 2, 3, 1, 5];
        let b = a.relabel(&perm);
        assert_ne!(a.imp_table(), b.imp_table());
        assert_eq!(canonical_form(&a), canonical_form(&b));
    }

    #[test]
    fn canonical_forms_distinguish_the_reference_models() {
        let forms: HashSet<Vec<usize>> = [
            testdata::qw6(),
            testdata::prew6(),
            testdata::iom6(),
            testdata::metaw6(),
        ]
        .iter()
        .map(canonical_form)
        .collect();
        assert_eq!(forms.len(), 4);
    }

    #[test]
    fn class_filter_is_monotone_at_size_three() {
        let qw = count(&EnumerationConfig::new(3).with_class(ClassId::Qw)).unwrap();
        let prew = count(&EnumerationConfig::new(3).with_class(ClassId::PreW)).unwrap();
        let all = count(&EnumerationConfig::new(3)).unwrap();
        assert!(qw <= prew);
        assert!(prew <= all);
        assert!(all >= 1, "the three-element chain must be found");
    }

    #[test]
    fn node_budget_reports_partial_progress() {
        let cfg = EnumerationConfig::new(4).with_node_limit(3);
        match enumerate(&cfg) {
            Err(SearchError::BudgetExhausted { limit: 3, explored, .. }) => {
                assert!(explored <= 3);
            }
            other => panic!("expected budget exhaustion, got {other:?}"),
        }
    }

    #[test]
    fn be2_has_no_counterexample() {
        let s = parse("x -> 1 = 1").unwrap();
        let found = find_counterexample(&s, ClassId::InvolutiveBe, 4).unwrap();
        assert!(found.is_none());
    }

    #[test]
    fn every_emitted_model_passes_its_filter() {
        let cfg = EnumerationConfig::new(4).with_class(ClassId::Iom);
        for a in enumerate(&cfg).unwrap() {
            assert!(check_class(&a, ClassId::Iom).passed());
        }
    }
}
