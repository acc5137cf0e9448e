//! Regularity of a grading: condition (i) (no degree tuple has a vanishing product space),
//! condition (ii) (homogeneous elements commute up to a bicharacter), the decomposition
//! matrix, and the numerical consequences of the structure theorem for minimal gradings.

use std::collections::{HashMap, VecDeque};

use num_traits::{One, Zero};
use rayon::prelude::*;
use thiserror::Error;

use crate::algebra::{AlgebraError, GradedAlgebra};
use crate::group::GroupElement;
use crate::linalg::{Subspace, SubspaceKey, Vector};
use crate::pairing::{self, Bicharacter, PairingError};
use crate::scalar::Cyclotomic;

pub const DEFAULT_STATE_CAP: usize = 4096;

/// A pair of basis elements, by label and index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisPair {
    pub left: String,
    pub right: String,
    pub left_index: usize,
    pub right_index: usize,
}

impl std::fmt::Display for BasisPair {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {})", self.left, self.right)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RegularityError {
    #[error("degree {0} is not in the support, so beta is undetermined there (not regular over the grading group)")]
    UnsupportedDegree(GroupElement),
    #[error("all products between degrees {0} and {1} vanish in both orders")]
    IndeterminatePair(GroupElement, GroupElement),
    #[error("{0}: the two products are not proportional")]
    NonProportional(BasisPair),
    #[error("{pair}: x*y != beta({g},{h}) y*x with beta({g},{h}) = {value}")]
    Inconsistent { pair: Box<BasisPair>, g: GroupElement, h: GroupElement, value: Cyclotomic },
    #[error("extracted table is not a bicharacter: {0}")]
    NotBicharacter(PairingError),
    #[error("grading is not regular: {0}")]
    NotRegular(String),
    #[error("decomposition is not minimal (det M = 0); the structure theorem needs a minimal regular grading")]
    NotMinimal,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Pairing(#[from] PairingError),
}

impl RegularityError {
    /// The offending basis pair, when the error has one.
    pub fn witness(&self) -> Option<&BasisPair> {
        match self {
            RegularityError::NonProportional(p) => Some(p),
            RegularityError::Inconsistent { pair, .. } => Some(pair.as_ref()),
            _ => None,
        }
    }
}

fn basis_pair(a: &GradedAlgebra, i: usize, j: usize) -> BasisPair {
    BasisPair { left: a.labels()[i].clone(), right: a.labels()[j].clone(), left_index: i, right_index: j }
}

fn basis_product(a: &GradedAlgebra, i: usize, j: usize) -> Vector {
    let mut v = vec![Cyclotomic::zero(); a.dim()];
    for (k, c) in a.product(i, j) {
        v[*k] = c.clone();
    }
    v
}

/// `lambda` with `p = lambda q`, if it exists and `q != 0`.
fn proportionality(p: &[Cyclotomic], q: &[Cyclotomic]) -> Option<Cyclotomic> {
    let k = q.iter().position(|x| !x.is_zero())?;
    let lambda = &p[k] / &q[k];
    p.iter().zip(q).all(|(x, y)| *x == &lambda * y).then_some(lambda)
}

/// Reads off `beta(g,h)` from the first basis pair of degrees `(g,h)` with a nonzero product,
/// then checks `x y = beta(g,h) y x` on every basis pair.
pub fn extract_bicharacter(a: &GradedAlgebra) -> Result<Bicharacter, RegularityError> {
    let group = a.group().clone();
    let n = group.order();
    let components: Vec<Vec<usize>> = (0..n).map(|g| a.basis_of_degree(g)).collect();
    if let Some(g) = components.iter().position(Vec::is_empty) {
        return Err(RegularityError::UnsupportedDegree(group.element_at(g)));
    }
    let mut table = vec![vec![Cyclotomic::one(); n]; n];
    for g in 0..n {
        for h in 0..n {
            let pairs = || components[g].iter().flat_map(|&i| components[h].iter().map(move |&j| (i, j)));
            let lambda = if let Some((i, j)) = pairs().find(|&(i, j)| !a.product(i, j).is_empty()) {
                proportionality(&basis_product(a, i, j), &basis_product(a, j, i))
                    .ok_or_else(|| RegularityError::NonProportional(basis_pair(a, i, j)))?
            } else if let Some((i, j)) = pairs().find(|&(i, j)| !a.product(j, i).is_empty()) {
                return Err(RegularityError::NonProportional(basis_pair(a, j, i)));
            } else {
                return Err(RegularityError::IndeterminatePair(group.element_at(g), group.element_at(h)));
            };
            table[g][h] = lambda;
        }
    }
    for i in 0..a.dim() {
        for j in 0..a.dim() {
            let (g, h) = (a.degree_index(i), a.degree_index(j));
            let value = &table[g][h];
            let rhs: Vector = basis_product(a, j, i).iter().map(|x| x * value).collect();
            if basis_product(a, i, j) != rhs {
                return Err(RegularityError::Inconsistent {
                    pair: Box::new(basis_pair(a, i, j)),
                    g: group.element_at(g),
                    h: group.element_at(h),
                    value: value.clone(),
                });
            }
        }
    }
    Bicharacter::from_table(group, table).map_err(RegularityError::NotBicharacter)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConditionIStatus {
    Verified,
    FailsAtTuple(Vec<GroupElement>),
    UndecidedBeyondCap,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConditionI {
    pub status: ConditionIStatus,
    pub states_explored: usize,
}

struct State {
    space: Subspace,
    parent: Option<usize>,
    degree: usize,
}

fn tuple_of(states: &[State], mut at: usize) -> Vec<usize> {
    let mut out = vec![states[at].degree];
    while let Some(p) = states[at].parent {
        out.push(states[p].degree);
        at = p;
    }
    out.reverse();
    out
}

/// `span(S A_g)`.
fn extend(a: &GradedAlgebra, s: &Subspace, component: &[usize]) -> Subspace {
    let mut vectors = Vec::with_capacity(s.dim() * component.len());
    for v in s.basis() {
        for &j in component {
            vectors.push(a.mul_basis_right(v, j));
        }
    }
    Subspace::span(a.dim(), vectors)
}

/// Breadth-first closure over the product spaces `A_{g_1} ... A_{g_k}`, deduplicated by their
/// canonical bases. Condition (i) fails iff the zero space is reachable; the first failing
/// tuple found is a shortest one. Each level is expanded in parallel and merged in order.
pub fn check_condition_i(a: &GradedAlgebra, state_cap: usize) -> ConditionI {
    let group = a.group();
    let n = group.order();
    let conductor = a.conductor();
    let components: Vec<Vec<usize>> = (0..n).map(|g| a.basis_of_degree(g)).collect();
    let fail = |states: &[State], tuple: Vec<usize>| ConditionI {
        status: ConditionIStatus::FailsAtTuple(tuple.into_iter().map(|g| group.element_at(g)).collect()),
        states_explored: states.len(),
    };
    let mut states: Vec<State> = Vec::new();
    let mut seen: HashMap<SubspaceKey, usize> = HashMap::new();
    let mut frontier = Vec::new();
    for g in 0..n {
        let space = Subspace::coordinate(a.dim(), &components[g]);
        if space.is_zero() {
            return fail(&states, vec![g]);
        }
        if seen.len() >= state_cap {
            return ConditionI { status: ConditionIStatus::UndecidedBeyondCap, states_explored: states.len() };
        }
        seen.insert(space.key(conductor), states.len());
        frontier.push(states.len());
        states.push(State { space, parent: None, degree: g });
    }
    let mut queue: VecDeque<usize> = frontier.into();
    while !queue.is_empty() {
        let level: Vec<usize> = queue.drain(..).collect();
        let children: Vec<Vec<Subspace>> =
            level.par_iter().map(|&s| (0..n).map(|g| extend(a, &states[s].space, &components[g])).collect()).collect();
        for (&s, kids) in level.iter().zip(children) {
            for (g, space) in kids.into_iter().enumerate() {
                if space.is_zero() {
                    let mut tuple = tuple_of(&states, s);
                    tuple.push(g);
                    return fail(&states, tuple);
                }
                let key = space.key(conductor);
                if seen.contains_key(&key) {
                    continue;
                }
                if seen.len() >= state_cap {
                    return ConditionI { status: ConditionIStatus::UndecidedBeyondCap, states_explored: states.len() };
                }
                seen.insert(key, states.len());
                queue.push_back(states.len());
                states.push(State { space, parent: Some(s), degree: g });
            }
        }
    }
    ConditionI { status: ConditionIStatus::Verified, states_explored: states.len() }
}

/// Enumerates every degree tuple of length `1..=max_len` in (length, lexicographic) order and
/// returns the first whose product space vanishes. Uses no state deduplication.
pub fn brute_force_condition_i(a: &GradedAlgebra, max_len: usize) -> Option<Vec<GroupElement>> {
    let n = a.group().order();
    let components: Vec<Vec<usize>> = (0..n).map(|g| a.basis_of_degree(g)).collect();
    // Zero product spaces stay zero under extension, so a depth-first search that records the
    // shortest failure per prefix suffices; the global minimum is picked afterwards.
    fn dfs(
        a: &GradedAlgebra,
        components: &[Vec<usize>],
        prefix: &mut Vec<usize>,
        space: &Subspace,
        max_len: usize,
        best: &mut Option<Vec<usize>>,
    ) {
        for (g, comp) in components.iter().enumerate() {
            let next = extend(a, space, comp);
            prefix.push(g);
            let better = |best: &Option<Vec<usize>>| match best {
                None => true,
                Some(b) => (prefix.len(), &prefix[..]) < (b.len(), &b[..]),
            };
            if next.is_zero() {
                if better(best) {
                    *best = Some(prefix.clone());
                }
            } else if prefix.len() < max_len && best.as_ref().is_none_or(|b| prefix.len() < b.len()) {
                dfs(a, components, prefix, &next, max_len, best);
            }
            prefix.pop();
        }
    }
    let results: Vec<Option<Vec<usize>>> = (0..n)
        .into_par_iter()
        .map(|g| {
            let start = Subspace::coordinate(a.dim(), &components[g]);
            if start.is_zero() {
                return Some(vec![g]);
            }
            let mut best = None;
            if max_len > 1 {
                dfs(a, &components, &mut vec![g], &start, max_len, &mut best);
            }
            best
        })
        .collect();
    results
        .into_iter()
        .flatten()
        .min_by(|x, y| (x.len(), x).cmp(&(y.len(), y)))
        .map(|t| t.into_iter().map(|g| a.group().element_at(g)).collect())
}

/// Whether every product `b_1 ... b_n` of basis elements with `deg b_i = tuple[i]` is zero,
/// evaluated directly without any span reduction.
pub fn tuple_products_vanish(a: &GradedAlgebra, tuple: &[GroupElement]) -> bool {
    let mut products: Vec<Vector> = vec![a.unit().0];
    for g in tuple {
        let comp = a.basis_of_degree(a.group().index_of(g));
        let mut next = Vec::with_capacity(products.len() * comp.len());
        for p in &products {
            for &j in &comp {
                let v = a.mul_basis_right(p, j);
                if v.iter().any(|x| !x.is_zero()) {
                    next.push(v);
                }
            }
        }
        products = next;
    }
    products.is_empty()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConditionII {
    pub holds: bool,
    pub beta: Option<Bicharacter>,
    pub witness: Option<BasisPair>,
    pub reason: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegularityVerdict {
    pub full_support: bool,
    pub condition_i: ConditionI,
    pub condition_ii: ConditionII,
}

impl RegularityVerdict {
    pub fn is_regular(&self) -> bool {
        self.condition_ii.holds && self.condition_i.status == ConditionIStatus::Verified
    }

    pub fn is_undecided(&self) -> bool {
        self.condition_ii.holds && self.condition_i.status == ConditionIStatus::UndecidedBeyondCap
    }
}

/// Runs both conditions. Regular verdicts imply `Supp(A) = G`; this is asserted.
pub fn is_regular(a: &GradedAlgebra, state_cap: usize) -> RegularityVerdict {
    let condition_ii = match extract_bicharacter(a) {
        Ok(beta) => ConditionII { holds: true, beta: Some(beta), witness: None, reason: None },
        Err(e) => ConditionII { holds: false, beta: None, witness: e.witness().cloned(), reason: Some(e.to_string()) },
    };
    let verdict = RegularityVerdict {
        full_support: a.has_full_support(),
        condition_i: check_condition_i(a, state_cap),
        condition_ii,
    };
    assert!(!verdict.is_regular() || verdict.full_support, "regular grading without full support");
    verdict
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompositionReport {
    pub beta: Bicharacter,
    pub det: Cyclotomic,
    pub minimal: bool,
    pub radical: Vec<GroupElement>,
    /// `|G|`, reported only for minimal decompositions.
    pub exp_prediction: Option<usize>,
}

impl DecompositionReport {
    pub fn matrix(&self) -> &[Vec<Cyclotomic>] {
        self.beta.table()
    }
}

pub fn decomposition_report(a: &GradedAlgebra) -> Result<DecompositionReport, RegularityError> {
    let beta = extract_bicharacter(a)?;
    let m = pairing::is_minimal(&beta)?;
    let minimal = m.minimal();
    Ok(DecompositionReport {
        radical: pairing::radical(&beta),
        det: m.det,
        minimal,
        exp_prediction: minimal.then(|| a.group().order()),
        beta,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Clause {
    pub applicable: bool,
    pub holds: bool,
    pub detail: String,
}

impl Clause {
    fn new(holds: bool, detail: String) -> Self {
        Clause { applicable: true, holds, detail }
    }

    fn conditional(applicable: bool, holds: bool, detail: String) -> Self {
        Clause { applicable, holds: !applicable || holds, detail }
    }
}

/// Observable consequences of `A ≅ K^alpha G ⊗ V` for a minimal regular grading.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureReport {
    pub group_order: usize,
    pub dim_a: usize,
    pub dim_a0: usize,
    pub dim_j: usize,
    pub dim_j0: usize,
    /// Number of simple summands of `A_0 / J(A_0)`.
    pub k: usize,
    /// `A_0` commutative with `A_0 / J(A_0) ≅ K`.
    pub a0_local: bool,
    /// Clauses (a) to (f), in order.
    pub clauses: Vec<(char, Clause)>,
}

impl StructureReport {
    pub fn all_hold(&self) -> bool {
        self.clauses.iter().all(|(_, c)| c.holds)
    }
}

/// Checks that `A` is regular and minimal, then measures:
/// (a) `A_0` commutative; (b) `k = dim A_0 - dim J(A_0)` with `A_0/J(A_0)` semisimple;
/// (c) `dim A = |G| dim A_0`; (d) `dim J(A) = |G| dim J(A_0)`;
/// (e) `J(A_0) = 0` implies `J(A) = 0` and `dim A = k |G|`;
/// (f) `k = 1` and `J(A_0) = 0` imply every homogeneous basis element is invertible.
pub fn verify_structure_theorem(a: &GradedAlgebra, state_cap: usize) -> Result<StructureReport, RegularityError> {
    let verdict = is_regular(a, state_cap);
    if !verdict.is_regular() {
        let reason = verdict.condition_ii.reason.clone().unwrap_or_else(|| match &verdict.condition_i.status {
            ConditionIStatus::FailsAtTuple(t) => format!("condition (i) fails at {}", fmt_tuple(t)),
            _ => "condition (i) undecided within the state cap".to_string(),
        });
        return Err(RegularityError::NotRegular(reason));
    }
    if !decomposition_report(a)?.minimal {
        return Err(RegularityError::NotMinimal);
    }
    let order = a.group().order();
    let (a0, _) = a.degree_zero_subalgebra()?;
    let j = a.jacobson_radical()?;
    let j0 = a0.jacobson_radical()?;
    let (dim_a, dim_a0, dim_j, dim_j0) = (a.dim(), a0.dim(), j.dim(), j0.dim());
    let k = dim_a0 - dim_j0;
    let commutative = a0.is_commutative();
    let quotient_semisimple = a0.quotient(&j0)?.jacobson_radical()?.is_zero();
    let invertible = (0..dim_a).all(|i| matches!(a.invert_homogeneous(&a.basis_element(i)), Ok(Some(_))));
    let clauses = vec![
        ('a', Clause::new(commutative, format!("A_0 commutative: {commutative}"))),
        ('b', Clause::new(quotient_semisimple, format!("k = {dim_a0} - {dim_j0} = {k}"))),
        ('c', Clause::new(dim_a == order * dim_a0, format!("dim A = {dim_a}, |G| dim A_0 = {}", order * dim_a0))),
        ('d', Clause::new(dim_j == order * dim_j0, format!("dim J(A) = {dim_j}, |G| dim J(A_0) = {}", order * dim_j0))),
        (
            'e',
            Clause::conditional(
                dim_j0 == 0,
                dim_j == 0 && dim_a == k * order,
                format!("J(A_0) = 0: {}; dim J(A) = {dim_j}; k |G| = {}", dim_j0 == 0, k * order),
            ),
        ),
        (
            'f',
            Clause::conditional(
                k == 1 && dim_j0 == 0,
                invertible,
                format!("homogeneous basis invertible: {invertible}"),
            ),
        ),
    ];
    Ok(StructureReport {
        group_order: order,
        dim_a,
        dim_a0,
        dim_j,
        dim_j0,
        k,
        a0_local: commutative && k == 1,
        clauses,
    })
}

pub fn fmt_tuple(t: &[GroupElement]) -> String {
    format!("[{}]", t.iter().map(|g| g.to_string()).collect::<Vec<_>>().join(", "))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{
        direct_power, from_presentation_example, pauli_matrix_algebra, tensor_product, truncated_grassmann,
        truncated_polynomial_local, twisted_group_algebra, PresentationExample,
    };
    use crate::group::GroupSpec;
    use crate::pairing::{induced_bicharacter, Cocycle};

    fn c(n: i64) -> Cyclotomic {
        Cyclotomic::from_integer(n)
    }

    fn twisted_examples() -> Vec<Cocycle> {
        vec![
            Cocycle::trivial(GroupSpec::cyclic(2)),
            Cocycle::trivial(GroupSpec::cyclic(3)),
            Cocycle::standard(2, c(-1)).unwrap(),
            Cocycle::standard(2, c(1)).unwrap(),
            Cocycle::standard(3, Cyclotomic::zeta(3, 1)).unwrap(),
            Cocycle::standard(4, Cyclotomic::zeta(4, 2)).unwrap(),
            Cocycle::trivial(GroupSpec::new(vec![2, 4]).unwrap()),
        ]
    }

    #[test]
    fn extract_examples() {
        let beta = extract_bicharacter(&pauli_matrix_algebra(2).unwrap()).unwrap();
        let g = beta.group().clone();
        assert_eq!(beta.value(&g.element(&[0, 1]).unwrap(), &g.element(&[1, 0]).unwrap()), &c(-1));
        let b = extract_bicharacter(&from_presentation_example(PresentationExample::B)).unwrap();
        assert!(b.is_trivial());
        assert_eq!(extract_bicharacter(&truncated_grassmann(2).unwrap()).unwrap(), Bicharacter::grassmann());
    }

    #[test]
    fn pauli_extraction_matches_convention() {
        for n in [2u32, 3, 4] {
            let beta = extract_bicharacter(&pauli_matrix_algebra(n).unwrap()).unwrap();
            assert_eq!(beta, Bicharacter::pauli(n));
            let g = beta.group();
            for (i, x) in g.enumerate().iter().enumerate() {
                for (j, y) in g.enumerate().iter().enumerate() {
                    let (a, b, cc, d) = (x.residues()[0], x.residues()[1], y.residues()[0], y.residues()[1]);
                    let e = (a * d) as i64 - (b * cc) as i64;
                    assert_eq!(beta.at(i, j), &Cyclotomic::zeta(n, e));
                }
            }
        }
    }

    #[test]
    fn example_a2_fails_condition_ii_at_t_t() {
        let a2 = from_presentation_example(PresentationExample::A2);
        let err = extract_bicharacter(&a2).unwrap_err();
        let w = err.witness().unwrap();
        assert_eq!((w.left.as_str(), w.right.as_str()), ("t", "t"));
        assert!(matches!(err, RegularityError::Inconsistent { .. }));
        let verdict = is_regular(&a2, DEFAULT_STATE_CAP);
        assert_eq!(verdict.condition_i.status, ConditionIStatus::Verified);
        assert!(!verdict.condition_ii.holds);
        assert!(!verdict.is_regular());
        assert!(decomposition_report(&a2).is_err());
    }

    #[test]
    fn extraction_errors() {
        let e1 = truncated_grassmann(1).unwrap();
        assert!(matches!(extract_bicharacter(&e1), Err(RegularityError::IndeterminatePair(..))));
        let v = truncated_polynomial_local(1, 1).unwrap().regraded_trivially(GroupSpec::cyclic(2)).unwrap();
        assert!(matches!(extract_bicharacter(&v), Err(RegularityError::UnsupportedDegree(_))));
        let verdict = is_regular(&v, DEFAULT_STATE_CAP);
        assert!(!verdict.full_support);
        assert_eq!(
            verdict.condition_i.status,
            ConditionIStatus::FailsAtTuple(vec![GroupSpec::cyclic(2).element(&[1]).unwrap()])
        );
    }

    #[test]
    fn non_proportional_witness() {
        // Upper triangular 2x2 matrices, Z_2-graded with e12 odd: e11 e12 = e12 but e12 e11 = 0.
        let g = GroupSpec::cyclic(2);
        let one = |k: usize| vec![(k, c(1))];
        let none = Vec::new;
        // Basis: e11, e22, e12 (unit e11 + e22).
        let products = vec![vec![one(0), none(), one(2)], vec![none(), one(1), none()], vec![none(), one(2), none()]];
        let a = GradedAlgebra::new(
            g.clone(),
            vec!["e11".into(), "e22".into(), "e12".into()],
            vec![g.zero(), g.zero(), g.element(&[1]).unwrap()],
            products,
            vec![c(1), c(1), c(0)],
        )
        .unwrap();
        let err = extract_bicharacter(&a).unwrap_err();
        assert!(matches!(err, RegularityError::NonProportional(_)), "{err}");
    }

    #[test]
    fn condition_i_examples() {
        for tau in twisted_examples() {
            let a = twisted_group_algebra(&tau);
            let r = check_condition_i(&a, DEFAULT_STATE_CAP);
            assert_eq!(r.status, ConditionIStatus::Verified);
            assert_eq!(r.states_explored, tau.group().order());
        }
        let e3 = truncated_grassmann(3).unwrap();
        let odd = GroupSpec::cyclic(2).element(&[1]).unwrap();
        let r = check_condition_i(&e3, DEFAULT_STATE_CAP);
        assert_eq!(r.status, ConditionIStatus::FailsAtTuple(vec![odd; 4]));
        let b = from_presentation_example(PresentationExample::B);
        assert_eq!(check_condition_i(&b, DEFAULT_STATE_CAP).status, ConditionIStatus::Verified);
    }

    #[test]
    fn condition_i_respects_cap() {
        let e3 = truncated_grassmann(3).unwrap();
        let r = check_condition_i(&e3, 2);
        assert_eq!(r.status, ConditionIStatus::UndecidedBeyondCap);
    }

    #[test]
    fn brute_force_agrees() {
        let mut algebras: Vec<GradedAlgebra> = twisted_examples().iter().map(twisted_group_algebra).collect();
        algebras.push(from_presentation_example(PresentationExample::B));
        algebras.push(from_presentation_example(PresentationExample::A2));
        for r in 1..=4 {
            algebras.push(truncated_grassmann(r).unwrap());
        }
        algebras.push(truncated_polynomial_local(1, 2).unwrap());
        for a in &algebras {
            let bfs = check_condition_i(a, DEFAULT_STATE_CAP).status;
            let len = if a.group().order() <= 4 { 6 } else { 4 };
            let brute = brute_force_condition_i(a, len);
            match (&bfs, &brute) {
                (ConditionIStatus::Verified, None) => {}
                (ConditionIStatus::FailsAtTuple(t), Some(u)) => {
                    assert_eq!(t.len(), u.len(), "{a}");
                    assert!(tuple_products_vanish(a, t));
                    assert!(tuple_products_vanish(a, u));
                }
                _ => panic!("disagreement on {a}: {bfs:?} vs {brute:?}"),
            }
        }
    }

    #[test]
    fn is_regular_examples() {
        let kz2 = twisted_group_algebra(&Cocycle::trivial(GroupSpec::cyclic(2)));
        let a = tensor_product(&kz2, &truncated_polynomial_local(1, 1).unwrap());
        let v = is_regular(&a, DEFAULT_STATE_CAP);
        assert!(v.is_regular());
        assert_eq!(v.condition_ii.beta.unwrap(), induced_bicharacter(&Cocycle::trivial(GroupSpec::cyclic(2))));
        assert!(!is_regular(&truncated_grassmann(3).unwrap(), DEFAULT_STATE_CAP).is_regular());
        let tau = Cocycle::standard(2, c(-1)).unwrap();
        let s = direct_power(&twisted_group_algebra(&tau), 2).unwrap();
        let v = is_regular(&s, DEFAULT_STATE_CAP);
        assert!(v.is_regular());
        assert_eq!(v.condition_ii.beta.unwrap(), induced_bicharacter(&tau));
    }

    #[test]
    fn decomposition_examples() {
        let b = decomposition_report(&from_presentation_example(PresentationExample::B)).unwrap();
        assert!(b.det.is_zero() && !b.minimal && b.exp_prediction.is_none());
        let p = decomposition_report(&pauli_matrix_algebra(3).unwrap()).unwrap();
        assert_eq!(p.det.norm_squared(), Cyclotomic::from_integer(3i64.pow(18)));
        assert!(p.minimal);
        assert_eq!(p.exp_prediction, Some(9));
        assert_eq!(p.radical.len(), 1);
        let e2 = decomposition_report(&truncated_grassmann(2).unwrap()).unwrap();
        assert_eq!(e2.det, c(-2));
        assert!(e2.minimal);
    }

    #[test]
    fn matrix_matches_induced_bicharacter() {
        for tau in [Cocycle::standard(2, c(-1)).unwrap(), Cocycle::standard(3, Cyclotomic::zeta(3, 2)).unwrap()] {
            let a = tensor_product(&twisted_group_algebra(&tau), &truncated_polynomial_local(2, 1).unwrap());
            let report = decomposition_report(&a).unwrap();
            assert_eq!(report.beta, induced_bicharacter(&tau));
            assert_eq!(report.minimal, pairing::regular_elements(&tau).len() == 1);
        }
    }

    #[test]
    fn structure_theorem_examples() {
        let tau = Cocycle::standard(2, c(-1)).unwrap();
        let kg = twisted_group_algebra(&tau);
        let r = verify_structure_theorem(&kg, DEFAULT_STATE_CAP).unwrap();
        assert!(r.all_hold());
        assert_eq!((r.k, r.dim_j), (1, 0));
        assert!(r.clauses[5].1.applicable);
        let r = verify_structure_theorem(
            &tensor_product(&kg, &truncated_polynomial_local(1, 2).unwrap()),
            DEFAULT_STATE_CAP,
        )
        .unwrap();
        assert!(r.all_hold());
        assert_eq!((r.k, r.dim_a, r.dim_j), (1, 12, 8));
        assert!(!r.clauses[5].1.applicable);
        assert!(r.a0_local);
        let r = verify_structure_theorem(&direct_power(&kg, 2).unwrap(), DEFAULT_STATE_CAP).unwrap();
        assert!(r.all_hold());
        assert_eq!((r.k, r.dim_j, r.dim_a), (2, 0, 8));
        assert!(!r.a0_local);
    }

    #[test]
    fn structure_theorem_preconditions() {
        // Over Z_2 every induced bicharacter is trivial, so K^alpha Z_2 is never minimal.
        let kz2 = twisted_group_algebra(&Cocycle::trivial(GroupSpec::cyclic(2)));
        assert_eq!(verify_structure_theorem(&kz2, DEFAULT_STATE_CAP), Err(RegularityError::NotMinimal));
        let e3 = truncated_grassmann(3).unwrap();
        assert!(matches!(verify_structure_theorem(&e3, DEFAULT_STATE_CAP), Err(RegularityError::NotRegular(_))));
    }
}
