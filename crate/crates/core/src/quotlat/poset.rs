use super::quotient::{join_q, meet_q, GeneralisedQuotient};
use crate::error::{Error, Result};
use crate::hopf::HopfAlgebraData;

/// A finite poset stored as an explicit relation table.
///
/// `exhaustive` records whether the elements are the complete set produced by
/// enumeration; order-theoretic formulas such as `ψ` refuse partial posets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinitePoset<T> {
    elements: Vec<T>,
    leq: Vec<Vec<bool>>,
    exhaustive: bool,
}

impl<T> FinitePoset<T> {
    pub fn new(elements: Vec<T>, leq: impl Fn(&T, &T) -> bool, exhaustive: bool) -> Self {
        let table = elements
            .iter()
            .map(|a| elements.iter().map(|b| leq(a, b)).collect())
            .collect();
        FinitePoset { elements, leq: table, exhaustive }
    }

    pub fn from_relation(elements: Vec<T>, leq: Vec<Vec<bool>>, exhaustive: bool) -> Result<Self> {
        let n = elements.len();
        if leq.len() != n || leq.iter().any(|r| r.len() != n) {
            return Err(Error::Dimension(format!("relation table must be {n}×{n}")));
        }
        Ok(FinitePoset { elements, leq, exhaustive })
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[T] {
        &self.elements
    }

    pub fn get(&self, i: usize) -> &T {
        &self.elements[i]
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.leq[i][j]
    }

    pub fn is_exhaustive(&self) -> bool {
        self.exhaustive
    }

    pub fn position(&self, pred: impl Fn(&T) -> bool) -> Option<usize> {
        self.elements.iter().position(pred)
    }

    pub fn into_elements(self) -> Vec<T> {
        self.elements
    }
}

/// Order-theoretic summary of a finite poset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PosetReport {
    pub is_lattice: bool,
    /// Covering pairs `(lower, upper)`.
    pub hasse_edges: Vec<(usize, usize)>,
    pub top: Option<usize>,
    pub bottom: Option<usize>,
    /// Greatest lower bounds, where they exist.
    pub meets: Vec<Vec<Option<usize>>>,
    /// Least upper bounds, where they exist.
    pub joins: Vec<Vec<Option<usize>>>,
}

/// Verifies the order axioms, then computes covers, bounds and pairwise
/// meets and joins.
pub fn poset_report<T>(p: &FinitePoset<T>) -> Result<PosetReport> {
    let n = p.len();
    for i in 0..n {
        if !p.leq(i, i) {
            return Err(Error::NotAPartialOrder(format!("reflexivity fails at ({i}, {i}, {i})")));
        }
        for j in 0..n {
            if i != j && p.leq(i, j) && p.leq(j, i) {
                return Err(Error::NotAPartialOrder(format!("antisymmetry fails at ({i}, {j}, {i})")));
            }
            for k in 0..n {
                if p.leq(i, j) && p.leq(j, k) && !p.leq(i, k) {
                    return Err(Error::NotAPartialOrder(format!("transitivity fails at ({i}, {j}, {k})")));
                }
            }
        }
    }
    let lt = |i: usize, j: usize| i != j && p.leq(i, j);
    let mut hasse_edges = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if lt(i, j) && !(0..n).any(|k| lt(i, k) && lt(k, j)) {
                hasse_edges.push((i, j));
            }
        }
    }
    let top = (0..n).find(|&t| (0..n).all(|i| p.leq(i, t)));
    let bottom = (0..n).find(|&b| (0..n).all(|i| p.leq(b, i)));
    let mut meets = vec![vec![None; n]; n];
    let mut joins = vec![vec![None; n]; n];
    for i in 0..n {
        for j in 0..n {
            let lower: Vec<usize> = (0..n).filter(|&k| p.leq(k, i) && p.leq(k, j)).collect();
            meets[i][j] = lower.iter().copied().find(|&m| lower.iter().all(|&k| p.leq(k, m)));
            let upper: Vec<usize> = (0..n).filter(|&k| p.leq(i, k) && p.leq(j, k)).collect();
            joins[i][j] = upper.iter().copied().find(|&s| upper.iter().all(|&k| p.leq(s, k)));
        }
    }
    let is_lattice = n > 0 && meets.iter().chain(&joins).all(|r| r.iter().all(Option::is_some));
    Ok(PosetReport { is_lattice, hasse_edges, top, bottom, meets, joins })
}

/// Compares `join_q` and `meet_q` with the lattice table of an enumerated
/// `Quot_gen(H)`.
///
/// In the order `Q ⪯ Q′ ⟺ I_{Q′} ⊆ I_Q`, the sum of ideals is the greatest
/// lower bound and the cogenerated intersection is the least upper bound.
pub fn crosscheck_quotient_lattice(
    h: &HopfAlgebraData,
    p: &FinitePoset<GeneralisedQuotient>,
    report: &PosetReport,
) -> Result<()> {
    let index = |q: &GeneralisedQuotient| p.position(|e| e.ideal() == q.ideal());
    for i in 0..p.len() {
        for j in 0..p.len() {
            let sum = index(&join_q(h, p.get(i), p.get(j))?);
            let cog = index(&meet_q(h, p.get(i), p.get(j))?);
            if sum != report.meets[i][j] {
                return Err(Error::Falsified(format!(
                    "sum of ideals {i}, {j} is {sum:?}, lattice meet is {:?}",
                    report.meets[i][j]
                )));
            }
            if cog != report.joins[i][j] {
                return Err(Error::Falsified(format!(
                    "cogenerated intersection of {i}, {j} is {cog:?}, lattice join is {:?}",
                    report.joins[i][j]
                )));
            }
        }
    }
    Ok(())
}
