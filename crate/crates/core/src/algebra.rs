//! Finite-dimensional unital `G`-graded algebras given by a homogeneous basis and sparse
//! structure constants `b_i b_j = sum_k c_ij^k b_k`.
//!
//! Construction validates grading consistency, associativity and the unit law over every
//! basis tuple, so a [`GradedAlgebra`] value is always a valid graded algebra.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use rayon::prelude::*;
use thiserror::Error;

use crate::group::{GroupElement, GroupError, GroupSpec};
use crate::linalg::{self, Subspace, Vector};
use crate::pairing::Cocycle;
use crate::scalar::Cyclotomic;

/// Sparse coordinate vector: `(basis index, nonzero coefficient)` sorted by index.
pub type SparseVec = Vec<(usize, Cyclotomic)>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("shape error: {0}")]
    Shape(String),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("grading violated: {left} * {right} has a component along {target}")]
    Grading { left: String, right: String, target: String },
    #[error("associativity fails on ({a} {b}) {c}")]
    NotAssociative { a: String, b: String, c: String },
    #[error("unit law fails for basis element {0}")]
    UnitLaw(String),
    #[error("the unit must lie in the degree-zero component")]
    UnitNotInDegreeZero,
    #[error("algebras are graded by different groups ({0} vs {1})")]
    GroupMismatch(GroupSpec, GroupSpec),
    #[error("element is not homogeneous")]
    NotHomogeneous,
    #[error("domain error: {0}")]
    Domain(String),
    #[error("internal consistency check failed: {0}")]
    InternalConsistency(String),
}

/// Coordinates of an algebra element over the homogeneous basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraElement(pub Vector);

impl AlgebraElement {
    pub fn coords(&self) -> &[Cyclotomic] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Cyclotomic::is_zero)
    }

    pub fn scale(&self, c: &Cyclotomic) -> AlgebraElement {
        AlgebraElement(self.0.iter().map(|x| x * c).collect())
    }
}

#[derive(Debug, Clone)]
pub struct GradedAlgebra {
    group: GroupSpec,
    conductor: u32,
    labels: Vec<String>,
    degrees: Vec<usize>,
    products: Vec<Vec<SparseVec>>,
    unit: Vector,
}

fn accumulate(acc: &mut BTreeMap<usize, Cyclotomic>, k: usize, v: Cyclotomic) {
    match acc.get_mut(&k) {
        Some(x) => *x += &v,
        None => {
            acc.insert(k, v);
        }
    }
}

fn finish(acc: BTreeMap<usize, Cyclotomic>) -> SparseVec {
    acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
}

fn sparse_from_dense(v: &[Cyclotomic]) -> SparseVec {
    v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (i, x.clone())).collect()
}

impl GradedAlgebra {
    /// Builds and validates an algebra. `products[i][j]` lists the nonzero structure
    /// constants of `b_i b_j`; repeated indices are summed and zeros dropped.
    pub fn new(
        group: GroupSpec,
        labels: Vec<String>,
        degrees: Vec<GroupElement>,
        products: Vec<Vec<SparseVec>>,
        unit: Vector,
    ) -> Result<Self, AlgebraError> {
        let dim = labels.len();
        if degrees.len() != dim || unit.len() != dim {
            return Err(AlgebraError::Shape(format!(
                "{dim} labels, {} degrees, {} unit coordinates",
                degrees.len(),
                unit.len()
            )));
        }
        if products.len() != dim || products.iter().any(|row| row.len() != dim) {
            return Err(AlgebraError::Shape(format!("product table must be {dim} x {dim}")));
        }
        if dim == 0 {
            return Err(AlgebraError::Shape("algebra must have positive dimension".into()));
        }
        let mut degree_idx = Vec::with_capacity(dim);
        for d in &degrees {
            let d = group.canonical(d.residues().to_vec())?;
            degree_idx.push(group.index_of(&d));
        }
        let mut conductor = 1u32;
        let mut bump = |c: &Cyclotomic| conductor = num_integer::lcm(conductor, c.conductor());
        let mut clean = Vec::with_capacity(dim);
        for row in products {
            let mut clean_row = Vec::with_capacity(dim);
            for entry in row {
                let mut acc = BTreeMap::new();
                for (k, v) in entry {
                    if k >= dim {
                        return Err(AlgebraError::Shape(format!("basis index {k} out of range")));
                    }
                    accumulate(&mut acc, k, v);
                }
                let entry = finish(acc);
                entry.iter().for_each(|(_, v)| bump(v));
                clean_row.push(entry);
            }
            clean.push(clean_row);
        }
        unit.iter().for_each(&mut bump);
        let algebra = GradedAlgebra { group, conductor, labels, degrees: degree_idx, products: clean, unit };
        algebra.validate()?;
        Ok(algebra)
    }

    fn validate(&self) -> Result<(), AlgebraError> {
        let dim = self.dim();
        for i in 0..dim {
            for j in 0..dim {
                let expected = self.group.add_index(self.degrees[i], self.degrees[j]);
                if let Some((k, _)) = self.products[i][j].iter().find(|(k, _)| self.degrees[*k] != expected) {
                    return Err(AlgebraError::Grading {
                        left: self.labels[i].clone(),
                        right: self.labels[j].clone(),
                        target: self.labels[*k].clone(),
                    });
                }
            }
        }
        if self.unit.iter().enumerate().any(|(i, u)| !u.is_zero() && self.degrees[i] != 0) {
            return Err(AlgebraError::UnitNotInDegreeZero);
        }
        let unit = sparse_from_dense(&self.unit);
        for i in 0..dim {
            let basis = vec![(i, Cyclotomic::one())];
            if self.mul_sparse(&unit, &basis) != basis || self.mul_sparse(&basis, &unit) != basis {
                return Err(AlgebraError::UnitLaw(self.labels[i].clone()));
            }
        }
        let failure = (0..dim).into_par_iter().find_map_first(|i| {
            for j in 0..dim {
                for k in 0..dim {
                    let left = self.mul_sparse_basis(&self.products[i][j], k);
                    let right = self.basis_mul_sparse(i, &self.products[j][k]);
                    if left != right {
                        return Some((i, j, k));
                    }
                }
            }
            None
        });
        if let Some((a, b, c)) = failure {
            return Err(AlgebraError::NotAssociative {
                a: self.labels[a].clone(),
                b: self.labels[b].clone(),
                c: self.labels[c].clone(),
            });
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn group(&self) -> &GroupSpec {
        &self.group
    }

    /// Least conductor containing every structure constant.
    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn degree(&self, i: usize) -> GroupElement {
        self.group.element_at(self.degrees[i])
    }

    /// Degree of basis element `i` as an index into the group enumeration.
    pub fn degree_index(&self, i: usize) -> usize {
        self.degrees[i]
    }

    pub fn degree_indices(&self) -> &[usize] {
        &self.degrees
    }

    pub fn product(&self, i: usize, j: usize) -> &SparseVec {
        &self.products[i][j]
    }

    /// Basis indices spanning the homogeneous component of the given degree index.
    pub fn basis_of_degree(&self, g: usize) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.degrees[i] == g).collect()
    }

    /// `Supp(A) = {g : A_g != 0}` in enumeration order.
    pub fn support(&self) -> Vec<GroupElement> {
        (0..self.group.order()).filter(|&g| self.degrees.contains(&g)).map(|g| self.group.element_at(g)).collect()
    }

    pub fn has_full_support(&self) -> bool {
        self.support().len() == self.group.order()
    }

    pub fn unit(&self) -> AlgebraElement {
        AlgebraElement(self.unit.clone())
    }

    pub fn basis_element(&self, i: usize) -> AlgebraElement {
        AlgebraElement(linalg::unit_vector(self.dim(), i))
    }

    pub fn zero_element(&self) -> AlgebraElement {
        AlgebraElement(vec![Cyclotomic::zero(); self.dim()])
    }

    fn mul_sparse_basis(&self, x: &SparseVec, j: usize) -> SparseVec {
        let mut acc = BTreeMap::new();
        for (p, a) in x {
            for (k, c) in &self.products[*p][j] {
                accumulate(&mut acc, *k, a * c);
            }
        }
        finish(acc)
    }

    fn basis_mul_sparse(&self, i: usize, y: &SparseVec) -> SparseVec {
        let mut acc = BTreeMap::new();
        for (q, b) in y {
            for (k, c) in &self.products[i][*q] {
                accumulate(&mut acc, *k, b * c);
            }
        }
        finish(acc)
    }

    pub(crate) fn mul_sparse(&self, x: &SparseVec, y: &SparseVec) -> SparseVec {
        let mut acc = BTreeMap::new();
        for (p, a) in x {
            for (q, b) in y {
                let ab = a * b;
                for (k, c) in &self.products[*p][*q] {
                    accumulate(&mut acc, *k, &ab * c);
                }
            }
        }
        finish(acc)
    }

    /// `x b_j` for a dense `x`.
    pub(crate) fn mul_basis_right(&self, x: &[Cyclotomic], j: usize) -> Vector {
        let mut out = vec![Cyclotomic::zero(); self.dim()];
        for (p, a) in x.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (k, c) in &self.products[p][j] {
                out[*k] += &(a * c);
            }
        }
        out
    }

    /// Product of dense coordinate vectors; lengths are the caller's responsibility.
    pub(crate) fn mul_dense(&self, x: &[Cyclotomic], y: &[Cyclotomic]) -> Vector {
        let prod = self.mul_sparse(&sparse_from_dense(x), &sparse_from_dense(y));
        let mut out = vec![Cyclotomic::zero(); self.dim()];
        for (k, v) in prod {
            out[k] = v;
        }
        out
    }

    /// Bilinear extension of the structure constants.
    pub fn multiply(&self, x: &AlgebraElement, y: &AlgebraElement) -> Result<AlgebraElement, AlgebraError> {
        let dim = self.dim();
        if x.0.len() != dim || y.0.len() != dim {
            return Err(AlgebraError::Shape(format!(
                "elements of length {} and {} in an algebra of dimension {dim}",
                x.0.len(),
                y.0.len()
            )));
        }
        Ok(AlgebraElement(self.mul_dense(&x.0, &y.0)))
    }

    /// Matrix of left multiplication by `x`: entry `[k][j]` is the `b_k`-coordinate of `x b_j`.
    pub fn left_multiplication(&self, x: &[Cyclotomic]) -> Vec<Vector> {
        let dim = self.dim();
        let mut m = vec![vec![Cyclotomic::zero(); dim]; dim];
        for j in 0..dim {
            for (k, v) in self.mul_sparse(&sparse_from_dense(x), &vec![(j, Cyclotomic::one())]) {
                m[k][j] = v;
            }
        }
        m
    }

    /// The degree index of `x` if it is nonzero with a single homogeneous component.
    pub fn homogeneous_degree(&self, x: &AlgebraElement) -> Option<usize> {
        let mut degs = x.0.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, _)| self.degrees[i]);
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    /// Solves `x y = 1`. If a solution exists, `y x = 1` is checked as well: a one-sided
    /// inverse of a homogeneous element is two-sided.
    pub fn invert_homogeneous(&self, x: &AlgebraElement) -> Result<Option<AlgebraElement>, AlgebraError> {
        if x.0.len() != self.dim() {
            return Err(AlgebraError::Shape(format!("element of length {}", x.0.len())));
        }
        if x.is_zero() {
            return Ok(None);
        }
        if self.homogeneous_degree(x).is_none() {
            return Err(AlgebraError::NotHomogeneous);
        }
        let lx = self.left_multiplication(&x.0);
        let Some(y) = linalg::solve(&lx, &self.unit, self.dim()) else {
            return Ok(None);
        };
        if self.mul_dense(&y, &x.0) != self.unit {
            return Err(AlgebraError::InternalConsistency(
                "right inverse of a homogeneous element is not a left inverse".into(),
            ));
        }
        Ok(Some(AlgebraElement(y)))
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim()).all(|i| (0..i).all(|j| self.products[i][j] == self.products[j][i]))
    }

    /// Span of all products `u v` with `u` in `left` and `v` in `right`.
    pub fn subspace_product(&self, left: &Subspace, right: &Subspace) -> Subspace {
        let mut vectors = Vec::with_capacity(left.dim() * right.dim());
        for u in left.basis() {
            for v in right.basis() {
                vectors.push(self.mul_dense(u, v));
            }
        }
        Subspace::span(self.dim(), vectors)
    }

    /// Whether `s` is a two-sided ideal.
    pub fn is_two_sided_ideal(&self, s: &Subspace) -> bool {
        (0..self.dim()).all(|i| {
            let b = linalg::unit_vector(self.dim(), i);
            s.basis().iter().all(|v| s.contains(&self.mul_dense(&b, v)) && s.contains(&self.mul_dense(v, &b)))
        })
    }

    /// Nilpotency index of `s` (least `k` with `s^k = 0`), searching up to `dim + 1`.
    pub fn nilpotency_index(&self, s: &Subspace) -> Option<usize> {
        let mut power = s.clone();
        for k in 1..=self.dim() + 1 {
            if power.is_zero() {
                return Some(k);
            }
            power = self.subspace_product(&power, s);
        }
        None
    }

    /// Jacobson radical via the trace form: `J(A) = {x : tr(L_{xy}) = 0 for all y}`, valid in
    /// characteristic zero. The result is checked to be a nilpotent two-sided ideal.
    pub fn jacobson_radical(&self) -> Result<Subspace, AlgebraError> {
        let dim = self.dim();
        let traces: Vec<Cyclotomic> = (0..dim)
            .map(|k| {
                (0..dim)
                    .flat_map(|m| self.products[k][m].iter().filter(move |(p, _)| *p == m).map(|(_, c)| c.clone()))
                    .sum()
            })
            .collect();
        let gram: Vec<Vector> = (0..dim)
            .map(|i| (0..dim).map(|j| self.products[i][j].iter().map(|(k, c)| c * &traces[*k]).sum()).collect())
            .collect();
        // x lies in the radical iff sum_i x_i gram[i][j] = 0 for every j.
        let transposed: Vec<Vector> = (0..dim).map(|j| (0..dim).map(|i| gram[i][j].clone()).collect()).collect();
        let radical = Subspace::span(dim, linalg::nullspace(transposed, dim));
        if !self.is_two_sided_ideal(&radical) {
            return Err(AlgebraError::InternalConsistency("trace-form radical is not an ideal".into()));
        }
        if self.nilpotency_index(&radical).is_none() {
            return Err(AlgebraError::InternalConsistency("trace-form radical is not nilpotent".into()));
        }
        Ok(radical)
    }

    /// The neutral component `A_0` as a standalone algebra (all degrees zero), together with
    /// the indices of its basis elements in `A`.
    pub fn degree_zero_subalgebra(&self) -> Result<(GradedAlgebra, Vec<usize>), AlgebraError> {
        let idx = self.basis_of_degree(0);
        let local: BTreeMap<usize, usize> = idx.iter().enumerate().map(|(l, &g)| (g, l)).collect();
        let products = idx
            .iter()
            .map(|&i| {
                idx.iter().map(|&j| self.products[i][j].iter().map(|(k, c)| (local[k], c.clone())).collect()).collect()
            })
            .collect();
        let unit = idx.iter().map(|&i| self.unit[i].clone()).collect();
        let sub = GradedAlgebra::new(
            self.group.clone(),
            idx.iter().map(|&i| self.labels[i].clone()).collect(),
            vec![self.group.zero(); idx.len()],
            products,
            unit,
        )?;
        Ok((sub, idx))
    }

    /// Checks that `J(A)` is graded and that `J(A_0) = A_0 ∩ J(A)`.
    pub fn radical_grading_report(&self) -> Result<RadicalGradingReport, AlgebraError> {
        let dim = self.dim();
        let radical = self.jacobson_radical()?;
        let is_graded = radical.basis().iter().all(|v| {
            (0..self.group.order()).all(|g| {
                let proj: Vector = v
                    .iter()
                    .enumerate()
                    .map(|(i, x)| if self.degrees[i] == g { x.clone() } else { Cyclotomic::zero() })
                    .collect();
                radical.contains(&proj)
            })
        });
        let (a0, idx) = self.degree_zero_subalgebra()?;
        let j0 = a0.jacobson_radical()?;
        let j0_embedded = Subspace::span(
            dim,
            j0.basis().iter().map(|v| {
                let mut w = vec![Cyclotomic::zero(); dim];
                for (x, &i) in v.iter().zip(&idx) {
                    w[i] = x.clone();
                }
                w
            }),
        );
        let a0_cap_j = Subspace::coordinate(dim, &idx).intersect(&radical);
        Ok(RadicalGradingReport {
            is_graded,
            j_dim: radical.dim(),
            j0_dim: j0.dim(),
            identity_holds: j0_embedded == a0_cap_j,
        })
    }

    /// `A / I` for a graded two-sided ideal `I`, on the basis elements that are not pivots of
    /// the canonical basis of `I`.
    pub fn quotient(&self, ideal: &Subspace) -> Result<GradedAlgebra, AlgebraError> {
        if !self.is_two_sided_ideal(ideal) {
            return Err(AlgebraError::Domain("quotient requires a two-sided ideal".into()));
        }
        let keep: Vec<usize> = (0..self.dim()).filter(|i| !ideal.pivots().contains(i)).collect();
        let project = |v: &[Cyclotomic]| -> SparseVec {
            let r = ideal.reduce(v);
            keep.iter().enumerate().filter(|(_, &i)| !r[i].is_zero()).map(|(l, &i)| (l, r[i].clone())).collect()
        };
        let products = keep
            .iter()
            .map(|&i| {
                keep.iter()
                    .map(|&j| {
                        let mut dense = vec![Cyclotomic::zero(); self.dim()];
                        for (k, c) in &self.products[i][j] {
                            dense[*k] = c.clone();
                        }
                        project(&dense)
                    })
                    .collect()
            })
            .collect();
        let mut unit = vec![Cyclotomic::zero(); keep.len()];
        for (l, c) in project(&self.unit) {
            unit[l] = c;
        }
        GradedAlgebra::new(
            self.group.clone(),
            keep.iter().map(|&i| self.labels[i].clone()).collect(),
            keep.iter().map(|&i| self.degree(i)).collect(),
            products,
            unit,
        )
    }

    /// Re-grades a trivially graded algebra over `group`, putting everything in degree zero.
    pub fn regraded_trivially(&self, group: GroupSpec) -> Result<GradedAlgebra, AlgebraError> {
        if self.degrees.iter().any(|&d| d != 0) {
            return Err(AlgebraError::Domain("only trivially graded algebras can be regraded".into()));
        }
        GradedAlgebra::new(
            group.clone(),
            self.labels.clone(),
            vec![group.zero(); self.dim()],
            self.products.clone(),
            self.unit.clone(),
        )
    }

    /// Whether both algebras have the same group, degrees, structure constants and unit.
    pub fn same_structure(&self, other: &GradedAlgebra) -> bool {
        self.group == other.group
            && self.degrees == other.degrees
            && self.products == other.products
            && self.unit == other.unit
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RadicalGradingReport {
    pub is_graded: bool,
    pub j_dim: usize,
    pub j0_dim: usize,
    pub identity_holds: bool,
}

impl fmt::Display for GradedAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-dimensional algebra graded by {}", self.dim(), self.group)
    }
}

fn element_label(prefix: &str, g: &GroupElement) -> String {
    let r = g.residues();
    if r.iter().all(|&x| x < 10) {
        format!("{prefix}{}", r.iter().map(|x| x.to_string()).collect::<String>())
    } else {
        format!("{prefix}{g}")
    }
}

/// The twisted group algebra `K^tau G` with basis `X_g` and `X_g X_h = tau(g,h) X_{g+h}`.
/// Its unit is `tau(0,0)^-1 X_0`.
pub fn twisted_group_algebra(tau: &Cocycle) -> GradedAlgebra {
    let group = tau.group().clone();
    let n = group.order();
    let elems = group.enumerate();
    let products =
        (0..n).map(|g| (0..n).map(|h| vec![(group.add_index(g, h), tau.at(g, h).clone())]).collect()).collect();
    let mut unit = vec![Cyclotomic::zero(); n];
    unit[0] = tau.at(0, 0).invert().expect("cocycle values are nonzero");
    GradedAlgebra::new(group.clone(), elems.iter().map(|g| element_label("X", g)).collect(), elems, products, unit)
        .expect("a valid cocycle defines a valid twisted group algebra")
}

type Matrix = Vec<Vector>;

fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    (0..n).filter(|&k| !a[i][k].is_zero() && !b[k][j].is_zero()).map(|k| &a[i][k] * &b[k][j]).sum()
                })
                .collect()
        })
        .collect()
}

fn mat_identity(n: usize) -> Matrix {
    (0..n).map(|i| linalg::unit_vector(n, i)).collect()
}

fn mat_pow(a: &Matrix, e: u32) -> Matrix {
    (0..e).fold(mat_identity(a.len()), |acc, _| mat_mul(&acc, a))
}

/// The Pauli generators `X = diag(xi^(n-1), ..., xi, 1)` and
/// `Y = e_{n,1} + sum_i e_{i,i+1}` with `xi = zeta_n`.
pub fn pauli_generators(n: u32) -> (Matrix, Matrix) {
    let size = n as usize;
    let mut x = vec![vec![Cyclotomic::zero(); size]; size];
    let mut y = vec![vec![Cyclotomic::zero(); size]; size];
    for i in 0..size {
        x[i][i] = Cyclotomic::zeta(n, (size - 1 - i) as i64);
        y[i][(i + 1) % size] = Cyclotomic::one();
    }
    (x, y)
}

/// `M_n(K)` with the basis `X^i Y^j` graded by `(i, j)` in `Z_n x Z_n`. Products are computed
/// as explicit matrix products and re-expressed in the `X^i Y^j` basis by solving a linear
/// system.
pub fn pauli_matrix_algebra(n: u32) -> Result<GradedAlgebra, AlgebraError> {
    if n < 2 {
        return Err(AlgebraError::Domain(format!("Pauli grading needs n >= 2, got {n}")));
    }
    let group = GroupSpec::square(n);
    let elems = group.enumerate();
    let (x, y) = pauli_generators(n);
    let basis: Vec<Matrix> =
        elems.iter().map(|g| mat_mul(&mat_pow(&x, g.residues()[0]), &mat_pow(&y, g.residues()[1]))).collect();
    let flat = |m: &Matrix| -> Vector { m.iter().flatten().cloned().collect() };
    let dim = basis.len();
    // Columns of the coefficient matrix are the flattened basis matrices.
    let columns: Vec<Vector> = basis.iter().map(flat).collect();
    let coeff_rows: Vec<Vector> = (0..dim).map(|r| columns.iter().map(|c| c[r].clone()).collect()).collect();
    let mut products = Vec::with_capacity(dim);
    for a in &basis {
        let mut row = Vec::with_capacity(dim);
        for b in &basis {
            let target = flat(&mat_mul(a, b));
            let coords = linalg::solve(&coeff_rows, &target, dim)
                .ok_or_else(|| AlgebraError::InternalConsistency("X^i Y^j do not span M_n".into()))?;
            row.push(sparse_from_dense(&coords));
        }
        products.push(row);
    }
    let labels = elems
        .iter()
        .map(|g| {
            let (i, j) = (g.residues()[0], g.residues()[1]);
            let part = |s: &str, e: u32| match e {
                0 => String::new(),
                1 => s.to_string(),
                _ => format!("{s}^{e}"),
            };
            let l = format!("{}{}", part("X", i), part("Y", j));
            if l.is_empty() {
                "1".to_string()
            } else {
                l
            }
        })
        .collect();
    let unit = linalg::unit_vector(dim, 0);
    GradedAlgebra::new(group, labels, elems, products, unit)
}

/// The Grassmann algebra on `r` generators, `Z_2`-graded by the parity of monomial length.
pub fn truncated_grassmann(r: u32) -> Result<GradedAlgebra, AlgebraError> {
    if r == 0 || r > 6 {
        return Err(AlgebraError::Domain(format!("truncated Grassmann algebra needs 1 <= r <= 6, got {r}")));
    }
    let mut masks: Vec<u32> = (0..1u32 << r).collect();
    masks.sort_by_key(|&m| (m.count_ones(), m.reverse_bits()));
    let position: BTreeMap<u32, usize> = masks.iter().enumerate().map(|(i, &m)| (m, i)).collect();
    let group = GroupSpec::cyclic(2);
    let labels = masks
        .iter()
        .map(|&m| {
            if m == 0 {
                "1".to_string()
            } else {
                format!("e{}", (0..r).filter(|b| m >> b & 1 == 1).map(|b| (b + 1).to_string()).collect::<String>())
            }
        })
        .collect();
    let degrees = masks.iter().map(|m| group.element(&[m.count_ones() as i64])).collect::<Result<_, _>>()?;
    let products = masks
        .iter()
        .map(|&s| {
            masks
                .iter()
                .map(|&t| {
                    if s & t != 0 {
                        return Vec::new();
                    }
                    // Sign of moving each generator of t past the larger generators of s.
                    let swaps: u32 = (0..r).filter(|b| t >> b & 1 == 1).map(|b| (s >> (b + 1)).count_ones()).sum();
                    let sign = if swaps.is_multiple_of(2) { 1 } else { -1 };
                    vec![(position[&(s | t)], Cyclotomic::from_integer(sign))]
                })
                .collect()
        })
        .collect();
    GradedAlgebra::new(group, labels, degrees, products, linalg::unit_vector(masks.len(), 0))
}

/// `K[z_1..z_v] / (monomials of degree > cap)`, trivially graded. A commutative local
/// algebra whose radical is spanned by the monomials of positive degree.
pub fn truncated_polynomial_local(vars: u32, cap: u32) -> Result<GradedAlgebra, AlgebraError> {
    if vars == 0 || cap == 0 {
        return Err(AlgebraError::Domain("truncated polynomial algebra needs vars >= 1 and cap >= 1".into()));
    }
    fn exponents(vars: usize, cap: u32) -> Vec<Vec<u32>> {
        if vars == 0 {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for e in 0..=cap {
            for mut rest in exponents(vars - 1, cap - e) {
                rest.insert(0, e);
                out.push(rest);
            }
        }
        out
    }
    let mut monomials = exponents(vars as usize, cap);
    monomials.sort_by(|a, b| {
        let (da, db): (u32, u32) = (a.iter().sum(), b.iter().sum());
        da.cmp(&db).then_with(|| b.cmp(a))
    });
    let position: BTreeMap<Vec<u32>, usize> = monomials.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
    let labels = monomials
        .iter()
        .map(|m| {
            let parts: Vec<String> = m
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(v, &e)| {
                    let name = if vars == 1 { "z".to_string() } else { format!("z{}", v + 1) };
                    if e == 1 {
                        name
                    } else {
                        format!("{name}^{e}")
                    }
                })
                .collect();
            if parts.is_empty() {
                "1".to_string()
            } else {
                parts.join("*")
            }
        })
        .collect();
    let products = monomials
        .iter()
        .map(|a| {
            monomials
                .iter()
                .map(|b| {
                    let sum: Vec<u32> = a.iter().zip(b).map(|(x, y)| x + y).collect();
                    match position.get(&sum) {
                        Some(&k) => vec![(k, Cyclotomic::one())],
                        None => Vec::new(),
                    }
                })
                .collect()
        })
        .collect();
    let group = GroupSpec::trivial();
    let dim = monomials.len();
    GradedAlgebra::new(group.clone(), labels, vec![group.zero(); dim], products, linalg::unit_vector(dim, 0))
}

/// The one-dimensional algebra `K` over the trivial group.
pub fn ground_field() -> GradedAlgebra {
    let group = GroupSpec::trivial();
    GradedAlgebra::new(
        group.clone(),
        vec!["1".into()],
        vec![group.zero()],
        vec![vec![vec![(0, Cyclotomic::one())]]],
        vec![Cyclotomic::one()],
    )
    .expect("K is a valid algebra")
}

/// `A ⊗ B` graded by `G x H` with `deg(a ⊗ b) = (deg a, deg b)`. When either group is trivial
/// the product group is just the other one, so no re-grading is needed.
pub fn tensor_product(a: &GradedAlgebra, b: &GradedAlgebra) -> GradedAlgebra {
    let group = a.group.product(&b.group);
    let (da, db) = (a.dim(), b.dim());
    let idx = |i: usize, j: usize| i * db + j;
    let mut labels = Vec::with_capacity(da * db);
    let mut degrees = Vec::with_capacity(da * db);
    for i in 0..da {
        for j in 0..db {
            labels.push(format!("{}⊗{}", a.labels[i], b.labels[j]));
            let mut r: Vec<u32> = a.degree(i).residues().to_vec();
            r.extend_from_slice(b.degree(j).residues());
            degrees.push(group.canonical(r).expect("concatenated residues are canonical"));
        }
    }
    let mut products = vec![vec![Vec::new(); da * db]; da * db];
    for i in 0..da {
        for j in 0..db {
            for k in 0..da {
                for l in 0..db {
                    let mut entry = Vec::new();
                    for (p, c) in &a.products[i][k] {
                        for (q, d) in &b.products[j][l] {
                            entry.push((idx(*p, *q), c * d));
                        }
                    }
                    products[idx(i, j)][idx(k, l)] = entry;
                }
            }
        }
    }
    let mut unit = vec![Cyclotomic::zero(); da * db];
    for (i, u) in a.unit.iter().enumerate() {
        for (j, v) in b.unit.iter().enumerate() {
            if !u.is_zero() && !v.is_zero() {
                unit[idx(i, j)] = u * v;
            }
        }
    }
    GradedAlgebra::new(group, labels, degrees, products, unit).expect("tensor product of valid algebras is valid")
}

/// `A ⊕ B` with `(A ⊕ B)_g = A_g ⊕ B_g`; cross products vanish and the unit is `(1_A, 1_B)`.
pub fn direct_sum(a: &GradedAlgebra, b: &GradedAlgebra) -> Result<GradedAlgebra, AlgebraError> {
    if a.group != b.group {
        return Err(AlgebraError::GroupMismatch(a.group.clone(), b.group.clone()));
    }
    let (da, db) = (a.dim(), b.dim());
    let n = da + db;
    let labels = a.labels.iter().map(|l| format!("{l}@1")).chain(b.labels.iter().map(|l| format!("{l}@2"))).collect();
    let degrees = (0..da).map(|i| a.degree(i)).chain((0..db).map(|j| b.degree(j))).collect();
    let mut products = vec![vec![Vec::new(); n]; n];
    for i in 0..da {
        for j in 0..da {
            products[i][j] = a.products[i][j].clone();
        }
    }
    for i in 0..db {
        for j in 0..db {
            products[da + i][da + j] = b.products[i][j].iter().map(|(k, c)| (da + k, c.clone())).collect();
        }
    }
    let unit = a.unit.iter().chain(&b.unit).cloned().collect();
    GradedAlgebra::new(a.group.clone(), labels, degrees, products, unit)
}

/// `k` copies of `A`.
pub fn direct_power(a: &GradedAlgebra, k: usize) -> Result<GradedAlgebra, AlgebraError> {
    if k == 0 {
        return Err(AlgebraError::Domain("direct power needs k >= 1".into()));
    }
    (1..k).try_fold(a.clone(), |acc, _| direct_sum(&acc, a))
}

/// The two hard-coded 4-dimensional `Z_2`-graded algebras on generators `z`, `t`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PresentationExample {
    /// `K[z,t]/(z^2, t^2 - 1)`, basis `1, z, t, zt`, even part `span{1, z}`.
    B,
    /// `K<z,t>` modulo `t^2 = 1`, `zt = -tz` and every word with two or more `z`;
    /// basis `1, z, t, zt`, even part `span{1, zt}`.
    A2,
}

pub fn from_presentation_example(which: PresentationExample) -> GradedAlgebra {
    let group = GroupSpec::cyclic(2);
    let even = group.zero();
    let odd = group.element(&[1]).expect("Z_2 element");
    let one = || Cyclotomic::one();
    let neg = || Cyclotomic::from_integer(-1);
    // Basis order: 0 = 1, 1 = z, 2 = t, 3 = zt.
    type Table4 = [[Option<(usize, Cyclotomic)>; 4]; 4];
    let (degrees, table): (Vec<GroupElement>, Table4) = match which {
        PresentationExample::B => (
            vec![even.clone(), even, odd.clone(), odd],
            [
                [Some((0, one())), Some((1, one())), Some((2, one())), Some((3, one()))],
                [Some((1, one())), None, Some((3, one())), None],
                [Some((2, one())), Some((3, one())), Some((0, one())), Some((1, one()))],
                [Some((3, one())), None, Some((1, one())), None],
            ],
        ),
        PresentationExample::A2 => (
            vec![even.clone(), odd.clone(), odd, even],
            [
                [Some((0, one())), Some((1, one())), Some((2, one())), Some((3, one()))],
                [Some((1, one())), None, Some((3, one())), None],
                [Some((2, one())), Some((3, neg())), Some((0, one())), Some((1, neg()))],
                [Some((3, one())), None, Some((1, one())), None],
            ],
        ),
    };
    let products = table.into_iter().map(|row| row.into_iter().map(|e| e.into_iter().collect()).collect()).collect();
    GradedAlgebra::new(
        group,
        ["1", "z", "t", "zt"].iter().map(|s| s.to_string()).collect(),
        degrees,
        products,
        linalg::unit_vector(4, 0),
    )
    .expect("hard-coded example is a valid graded algebra")
}
