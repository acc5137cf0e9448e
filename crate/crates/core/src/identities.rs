//! Multilinear graded and ordinary codimensions, the sorting scalar `mu(h, tau)`, the tensor
//! codimension identity and codimension-based exponent estimates.
//!
//! Every codimension is the rank of an evaluation matrix: rows are the `n!` monomials
//! `x_{s(1)} ... x_{s(n)}`, columns are indexed by a substitution of basis elements together with
//! an output coordinate. By multilinearity, basis substitutions suffice.

use itertools::Itertools;
use num_bigint::BigUint;
use num_traits::One;
use rayon::prelude::*;
use thiserror::Error;

use crate::algebra::{tensor_product, GradedAlgebra};
use crate::group::{GroupElement, GroupSpec};
use crate::linalg::{EchelonBasis, Vector};
use crate::pairing::Bicharacter;
use crate::regularity;
use crate::scalar::{Cyclotomic, Rational};

pub const DEFAULT_MAX_N: usize = 6;

/// Degrees `(q_1, ..., q_n)` assigned to the variables `x_1, ..., x_n`.
pub type DegreeTuple = Vec<GroupElement>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdentityError {
    #[error("degree n = {n} exceeds the configured maximum {max}")]
    DegreeTooLarge { n: usize, max: usize },
    #[error("degree {0} does not belong to the grading group {1}")]
    ForeignDegree(GroupElement, GroupSpec),
    #[error("permutation {0:?} is not a permutation of 0..{1}")]
    BadPermutation(Vec<usize>, usize),
    #[error("B must be regular: {0}")]
    NotRegular(String),
    #[error("B and S are graded by different groups ({0} vs {1})")]
    GroupMismatch(GroupSpec, GroupSpec),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodimReport {
    pub n: usize,
    /// Every tuple of `G^n` in lexicographic order with its rank.
    pub per_tuple_ranks: Vec<(DegreeTuple, usize)>,
    pub graded_codim: usize,
    pub ordinary_codim: Option<usize>,
    pub group_order: usize,
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

impl CodimReport {
    /// Each rank is at most `n!`, the total at most `|G|^n n!`, and when the ordinary
    /// codimension is present `c_n <= c_n^G <= |G|^n c_n`.
    pub fn bounds_hold(&self) -> bool {
        let f = factorial(self.n);
        let scale = self.group_order.pow(self.n as u32);
        self.per_tuple_ranks.iter().all(|(_, r)| *r <= f)
            && self.graded_codim <= scale * f
            && self.ordinary_codim.is_none_or(|c| c <= self.graded_codim && self.graded_codim <= scale * c)
    }
}

/// Codimension computations on one algebra with a cap on `n`.
#[derive(Debug, Clone, Copy)]
pub struct Codimensions<'a> {
    algebra: &'a GradedAlgebra,
    max_n: usize,
}

impl<'a> Codimensions<'a> {
    pub fn new(algebra: &'a GradedAlgebra) -> Self {
        Self::with_max_n(algebra, DEFAULT_MAX_N)
    }

    pub fn with_max_n(algebra: &'a GradedAlgebra, max_n: usize) -> Self {
        Codimensions { algebra, max_n }
    }

    fn check_n(&self, n: usize) -> Result<(), IdentityError> {
        if n > self.max_n {
            return Err(IdentityError::DegreeTooLarge { n, max: self.max_n });
        }
        Ok(())
    }

    /// `dim P_q / (P_q ∩ T_G(A))`. Zero when some `A_{q_i}` vanishes.
    pub fn for_tuple(&self, q: &[GroupElement]) -> Result<usize, IdentityError> {
        self.check_n(q.len())?;
        let group = self.algebra.group();
        let mut idx = Vec::with_capacity(q.len());
        for g in q {
            if !group.contains(g) {
                return Err(IdentityError::ForeignDegree(g.clone(), group.clone()));
            }
            idx.push(group.index_of(g));
        }
        Ok(self.rank_for_indices(&idx))
    }

    fn rank_for_indices(&self, q: &[usize]) -> usize {
        let slots: Vec<Vec<usize>> = q.iter().map(|&g| self.algebra.basis_of_degree(g)).collect();
        evaluation_rank(self.algebra, &slots)
    }

    /// `c_n^G(A)` as the sum of the per-tuple ranks over `G^n`.
    pub fn graded(&self, n: usize) -> Result<CodimReport, IdentityError> {
        self.check_n(n)?;
        let group = self.algebra.group();
        let order = group.order();
        let total = order.pow(n as u32);
        let per_tuple_ranks: Vec<(DegreeTuple, usize)> = (0..total)
            .into_par_iter()
            .map(|code| {
                let idx = decode(code, order, n);
                let rank = self.rank_for_indices(&idx);
                (idx.into_iter().map(|g| group.element_at(g)).collect(), rank)
            })
            .collect();
        let graded_codim = per_tuple_ranks.iter().map(|(_, r)| r).sum();
        Ok(CodimReport { n, per_tuple_ranks, graded_codim, ordinary_codim: None, group_order: order })
    }

    /// `c_n(A)`: one evaluation matrix over all basis substitutions, ignoring the grading.
    pub fn ordinary(&self, n: usize) -> Result<usize, IdentityError> {
        self.check_n(n)?;
        let all: Vec<usize> = (0..self.algebra.dim()).collect();
        Ok(evaluation_rank(self.algebra, &vec![all; n]))
    }

    /// Graded report with the ordinary codimension filled in.
    pub fn full(&self, n: usize) -> Result<CodimReport, IdentityError> {
        let mut report = self.graded(n)?;
        report.ordinary_codim = Some(self.ordinary(n)?);
        Ok(report)
    }
}

/// Mixed-radix decoding of `code` into `n` digits base `base`, most significant first.
fn decode(mut code: usize, base: usize, n: usize) -> Vec<usize> {
    let mut out = vec![0; n];
    for slot in out.iter_mut().rev() {
        *slot = code % base;
        code /= base;
    }
    out
}

/// Values of every monomial `x_{s(1)} ... x_{s(n)}` (permutations in lexicographic order) at
/// the substitution `x_i -> b_{choice[i]}`, as `n! x dim` rows.
fn evaluate_monomials(a: &GradedAlgebra, choice: &[usize], perms: &[Vec<usize>]) -> Vec<Vector> {
    perms
        .iter()
        .map(|sigma| {
            let mut v = a.basis_element(choice[sigma[0]]).0;
            for &i in &sigma[1..] {
                v = a.mul_basis_right(&v, choice[i]);
            }
            v
        })
        .collect()
}

/// Columns of the evaluation matrix for one substitution: one vector of length `n!` per
/// output coordinate, skipping zero columns.
fn evaluation_columns(a: &GradedAlgebra, choice: &[usize], perms: &[Vec<usize>]) -> Vec<Vector> {
    let values = evaluate_monomials(a, choice, perms);
    (0..a.dim())
        .map(|k| values.iter().map(|v| v[k].clone()).collect::<Vector>())
        .filter(|col| col.iter().any(|x| !x.is_zero()))
        .collect()
}

/// Rank of the evaluation matrix whose substitutions range over the product of `slots`.
/// Columns are streamed into an echelon basis and the scan stops at rank `n!`.
fn evaluation_rank(a: &GradedAlgebra, slots: &[Vec<usize>]) -> usize {
    let n = slots.len();
    if n == 0 || slots.iter().any(Vec::is_empty) {
        return 0;
    }
    let perms: Vec<Vec<usize>> = (0..n).permutations(n).collect();
    let full = perms.len();
    let mut basis = EchelonBasis::new();
    for choice in slots.iter().map(|s| s.iter().copied()).multi_cartesian_product() {
        for col in evaluation_columns(a, &choice, &perms) {
            basis.insert(col);
            if basis.rank() == full {
                return full;
            }
        }
    }
    basis.rank()
}

/// `c_n^G(A)` with the default cap on `n`.
pub fn graded_codimension(a: &GradedAlgebra, n: usize) -> Result<CodimReport, IdentityError> {
    Codimensions::new(a).graded(n)
}

/// `c_n(A)` with the default cap on `n`.
pub fn ordinary_codimension(a: &GradedAlgebra, n: usize) -> Result<usize, IdentityError> {
    Codimensions::new(a).ordinary(n)
}

pub fn codim_for_tuple(a: &GradedAlgebra, q: &[GroupElement]) -> Result<usize, IdentityError> {
    Codimensions::new(a).for_tuple(q)
}

/// `mu(h, tau)` with `y_{tau(1)} ... y_{tau(n)} = mu(h, tau) y_1 ... y_n` in the relatively free
/// algebra where `y^(g) y'^(h) = beta(g,h) y'^(h) y^(g)`: the product of `beta(h_{tau(a)}, h_{tau(b)})`
/// over the inversions `a < b`, `tau(a) > tau(b)`. `tau` is 0-based.
pub fn mu_scalar(beta: &Bicharacter, h: &[GroupElement], tau: &[usize]) -> Result<Cyclotomic, IdentityError> {
    let n = h.len();
    let mut sorted = tau.to_vec();
    sorted.sort_unstable();
    if tau.len() != n || sorted != (0..n).collect::<Vec<_>>() {
        return Err(IdentityError::BadPermutation(tau.to_vec(), n));
    }
    let group = beta.group();
    if let Some(g) = h.iter().find(|g| !group.contains(g)) {
        return Err(IdentityError::ForeignDegree(g.clone(), group.clone()));
    }
    let idx: Vec<usize> = h.iter().map(|g| group.index_of(g)).collect();
    let mut mu = Cyclotomic::one();
    for a in 0..n {
        for b in a + 1..n {
            if tau[a] > tau[b] {
                mu *= beta.at(idx[tau[a]], idx[tau[b]]);
            }
        }
    }
    Ok(mu)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TensorCodimReport {
    pub n: usize,
    /// `c_n^{G x G}(L)` for `L = S ⊗ B`, so that `deg(b ⊗ s) = (deg s, deg b)`.
    pub lhs: usize,
    /// The same with the factors swapped, `deg = (deg b, deg s)`.
    pub lhs_transposed: usize,
    /// `|G|^n c_n^G(S)`.
    pub rhs: usize,
    pub equal: bool,
    pub note: String,
}

/// Compares `c_n(L)` with `|G|^n c_n^G(S)` for `L = B ⊗ S` graded by `G x G`, `B` regular.
pub fn verify_tensor_codimension(
    b: &GradedAlgebra,
    s: &GradedAlgebra,
    n: usize,
    state_cap: usize,
) -> Result<TensorCodimReport, IdentityError> {
    if b.group() != s.group() {
        return Err(IdentityError::GroupMismatch(b.group().clone(), s.group().clone()));
    }
    let verdict = regularity::is_regular(b, state_cap);
    if !verdict.is_regular() {
        let reason =
            verdict.condition_ii.reason.unwrap_or_else(|| format!("condition (i): {:?}", verdict.condition_i.status));
        return Err(IdentityError::NotRegular(reason));
    }
    let l = tensor_product(s, b);
    let l_t = tensor_product(b, s);
    let lhs = graded_codimension(&l, n)?.graded_codim;
    let lhs_transposed = graded_codimension(&l_t, n)?.graded_codim;
    let rhs = b.group().order().pow(n as u32) * graded_codimension(s, n)?.graded_codim;
    Ok(TensorCodimReport {
        n,
        lhs,
        lhs_transposed,
        rhs,
        equal: lhs == rhs,
        note: "left side computed as the G x G graded codimension of L".into(),
    })
}

/// `c^(1/n)`: the exact integer root when `c` is a perfect `n`-th power, otherwise the floor
/// of the root to six decimal places.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NthRoot {
    pub value: Rational,
    pub exact: bool,
}

fn nth_root(c: usize, n: usize) -> NthRoot {
    let c = BigUint::from(c);
    let r = c.nth_root(n as u32);
    if r.pow(n as u32) == c {
        return NthRoot { value: Rational::from_integer(r.into()), exact: true };
    }
    let scale = BigUint::from(10u32).pow(6);
    let approx = (&c * scale.pow(n as u32)).nth_root(n as u32);
    NthRoot { value: Rational::new(approx.into(), scale.into()), exact: false }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExponentEstimate {
    /// `c_1^G, ..., c_{n_max}^G`.
    pub sequence: Vec<usize>,
    pub nth_roots: Vec<NthRoot>,
    /// `c_1, ..., c_{n_max}` for comparison with the ungraded exponent.
    pub ordinary_sequence: Vec<usize>,
    /// `|G|`, only when `A` is regular with a minimal decomposition.
    pub predicted: Option<usize>,
}

pub fn exponent_estimate(a: &GradedAlgebra, n_max: usize, state_cap: usize) -> Result<ExponentEstimate, IdentityError> {
    let engine = Codimensions::new(a);
    engine.check_n(n_max)?;
    let mut sequence = Vec::with_capacity(n_max);
    let mut ordinary_sequence = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        sequence.push(engine.graded(n)?.graded_codim);
        ordinary_sequence.push(engine.ordinary(n)?);
    }
    let nth_roots = sequence.iter().enumerate().map(|(i, &c)| nth_root(c, i + 1)).collect();
    let minimal_regular = regularity::is_regular(a, state_cap).is_regular()
        && regularity::decomposition_report(a).map(|r| r.minimal).unwrap_or(false);
    Ok(ExponentEstimate {
        sequence,
        nth_roots,
        ordinary_sequence,
        predicted: minimal_regular.then(|| a.group().order()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{
        from_presentation_example, pauli_matrix_algebra, truncated_grassmann, truncated_polynomial_local,
        twisted_group_algebra, PresentationExample,
    };
    use crate::linalg;
    use crate::pairing::{induced_bicharacter, Cocycle};
    use crate::regularity::DEFAULT_STATE_CAP;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;

    fn c(n: i64) -> Cyclotomic {
        Cyclotomic::from_integer(n)
    }

    fn kz2() -> GradedAlgebra {
        twisted_group_algebra(&Cocycle::trivial(GroupSpec::cyclic(2)))
    }

    fn klein() -> GradedAlgebra {
        twisted_group_algebra(&Cocycle::standard(2, c(-1)).unwrap())
    }

    #[test]
    fn tuple_examples() {
        let z2 = GroupSpec::cyclic(2);
        let odd = z2.element(&[1]).unwrap();
        for a in [kz2(), from_presentation_example(PresentationExample::B)] {
            assert_eq!(codim_for_tuple(&a, std::slice::from_ref(&odd)).unwrap(), 1);
        }
        assert_eq!(codim_for_tuple(&kz2(), &[odd.clone(), odd.clone()]).unwrap(), 1);
        let v = truncated_polynomial_local(1, 1).unwrap();
        let zero = GroupSpec::trivial().zero();
        assert_eq!(codim_for_tuple(&v, &vec![zero; 3]).unwrap(), 1);
        let regraded = v.regraded_trivially(z2.clone()).unwrap();
        assert_eq!(codim_for_tuple(&regraded, &[odd.clone(), z2.zero()]).unwrap(), 0);
        assert!(matches!(codim_for_tuple(&kz2(), &vec![odd; 7]), Err(IdentityError::DegreeTooLarge { n: 7, max: 6 })));
    }

    #[test]
    fn graded_examples() {
        let a = tensor_product(&kz2(), &truncated_polynomial_local(1, 1).unwrap());
        let seq: Vec<usize> = (1..=4).map(|n| graded_codimension(&a, n).unwrap().graded_codim).collect();
        assert_eq!(seq, vec![2, 4, 8, 16]);
        let k = klein();
        for n in 1..=3 {
            let r = graded_codimension(&k, n).unwrap();
            assert_eq!(r.graded_codim, 4usize.pow(n as u32));
            assert!(r.per_tuple_ranks.iter().all(|(_, rank)| *rank == 1));
        }
        let b = from_presentation_example(PresentationExample::B);
        let r = Codimensions::new(&b).full(2).unwrap();
        assert!(r.bounds_hold());
        assert!(r.graded_codim <= 4 * r.ordinary_codim.unwrap());
    }

    #[test]
    fn ordinary_examples() {
        let v = truncated_polynomial_local(1, 2).unwrap();
        for n in 1..=4 {
            assert_eq!(ordinary_codimension(&v, n).unwrap(), 1);
        }
        assert_eq!(ordinary_codimension(&pauli_matrix_algebra(2).unwrap(), 2).unwrap(), 2);
        assert_eq!(ordinary_codimension(&pauli_matrix_algebra(2).unwrap(), 1).unwrap(), 1);
        let e3 = truncated_grassmann(3).unwrap();
        assert_eq!(ordinary_codimension(&e3, 2).unwrap(), 2);
        assert_eq!(ordinary_codimension(&e3, 3).unwrap(), 4);
    }

    #[test]
    fn sandwich_on_several_algebras() {
        let algebras = vec![
            kz2(),
            klein(),
            from_presentation_example(PresentationExample::B),
            from_presentation_example(PresentationExample::A2),
            truncated_grassmann(2).unwrap(),
            pauli_matrix_algebra(2).unwrap(),
        ];
        for a in &algebras {
            for n in 1..=3 {
                assert!(Codimensions::new(a).full(n).unwrap().bounds_hold(), "{a} n={n}");
            }
        }
    }

    #[test]
    fn mu_examples() {
        let z2 = GroupSpec::cyclic(2);
        let odd = z2.element(&[1]).unwrap();
        let h = vec![odd.clone(), odd];
        assert_eq!(mu_scalar(&Bicharacter::grassmann(), &h, &[0, 1]).unwrap(), c(1));
        assert_eq!(mu_scalar(&Bicharacter::grassmann(), &h, &[1, 0]).unwrap(), c(-1));
        assert!(mu_scalar(&Bicharacter::grassmann(), &h, &[1, 1]).is_err());
    }

    fn product_of(a: &GradedAlgebra, idx: &[usize]) -> Vector {
        idx[1..].iter().fold(a.basis_element(idx[0]).0, |v, &j| a.mul_basis_right(&v, j))
    }

    #[test]
    fn mu_matches_twisted_algebra_ratio() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let tau = Cocycle::standard(3, Cyclotomic::zeta(3, 1)).unwrap();
        let a = twisted_group_algebra(&tau);
        let beta = induced_bicharacter(&tau);
        let g = tau.group().clone();
        for n in 1..=5 {
            for _ in 0..5 {
                let idx: Vec<usize> = (0..n).map(|_| rand::Rng::gen_range(&mut rng, 0..g.order())).collect();
                let mut perm: Vec<usize> = (0..n).collect();
                perm.shuffle(&mut rng);
                let sorted = product_of(&a, &idx);
                let permuted = product_of(&a, &perm.iter().map(|&i| idx[i]).collect::<Vec<_>>());
                let h: Vec<GroupElement> = idx.iter().map(|&i| g.element_at(i)).collect();
                let mu = mu_scalar(&beta, &h, &perm).unwrap();
                let scaled: Vector = sorted.iter().map(|x| x * &mu).collect();
                assert_eq!(permuted, scaled);
            }
        }
    }

    #[test]
    fn rank_is_invariant_under_column_order() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        let a = pauli_matrix_algebra(2).unwrap();
        let perms: Vec<Vec<usize>> = (0..3).permutations(3).collect();
        let mut cols: Vec<Vector> = (0..a.dim())
            .map(|_| 0..a.dim())
            .take(3)
            .multi_cartesian_product()
            .flat_map(|choice| evaluation_columns(&a, &choice, &perms))
            .collect();
        let by_rows = {
            let rows: Vec<Vector> = (0..perms.len()).map(|r| cols.iter().map(|col| col[r].clone()).collect()).collect();
            linalg::rank(rows, cols.len())
        };
        for _ in 0..3 {
            cols.shuffle(&mut rng);
            let mut basis = EchelonBasis::new();
            for col in cols.clone() {
                basis.insert(col);
            }
            assert_eq!(basis.rank(), by_rows);
        }
        assert!(by_rows <= perms.len());
        assert_eq!(ordinary_codimension(&a, 3).unwrap(), by_rows);
    }

    #[test]
    fn tensor_identity_examples() {
        let b = kz2();
        let r = verify_tensor_codimension(&b, &kz2(), 2, DEFAULT_STATE_CAP).unwrap();
        assert_eq!((r.lhs, r.rhs, r.lhs_transposed), (16, 16, 16));
        assert!(r.equal);
        let r = verify_tensor_codimension(&b, &from_presentation_example(PresentationExample::B), 2, DEFAULT_STATE_CAP)
            .unwrap();
        assert!(r.equal && r.lhs == r.lhs_transposed);
        let s = truncated_polynomial_local(1, 1).unwrap().regraded_trivially(GroupSpec::cyclic(2)).unwrap();
        let r = verify_tensor_codimension(&b, &s, 2, DEFAULT_STATE_CAP).unwrap();
        assert_eq!((r.lhs, r.rhs), (4, 4));
        let err = verify_tensor_codimension(&truncated_grassmann(3).unwrap(), &kz2(), 2, DEFAULT_STATE_CAP);
        assert!(matches!(err, Err(IdentityError::NotRegular(_))));
    }

    #[test]
    fn exponent_examples() {
        let e = exponent_estimate(&klein(), 3, DEFAULT_STATE_CAP).unwrap();
        assert_eq!(e.sequence, vec![4, 16, 64]);
        assert_eq!(e.predicted, Some(4));
        assert!(e.nth_roots.iter().all(|r| r.exact && r.value == Rational::from_integer(4.into())));
        let b = exponent_estimate(&from_presentation_example(PresentationExample::B), 3, DEFAULT_STATE_CAP).unwrap();
        assert_eq!(b.predicted, None);
        let nonminimal = tensor_product(&kz2(), &truncated_polynomial_local(1, 1).unwrap());
        let e = exponent_estimate(&nonminimal, 4, DEFAULT_STATE_CAP).unwrap();
        assert_eq!(e.sequence, vec![2, 4, 8, 16]);
        assert_eq!(e.ordinary_sequence, vec![1, 1, 1, 1]);
        assert_eq!(e.predicted, None);
    }

    #[test]
    fn nth_root_approximants() {
        assert_eq!(nth_root(16, 4), NthRoot { value: Rational::from_integer(2.into()), exact: true });
        let r = nth_root(2, 2);
        assert!(!r.exact);
        assert_eq!(r.value, Rational::new(1_414_213.into(), 1_000_000.into()));
    }
}
