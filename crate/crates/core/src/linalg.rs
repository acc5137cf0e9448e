//! Exact dense linear algebra over cyclotomic fields.
//!
//! Subspaces are kept in reduced row echelon form with the leftmost-nonzero pivot rule, so two
//! subspaces are equal exactly when their bases are equal entry for entry.

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::scalar::Cyclotomic;

pub type Vector = Vec<Cyclotomic>;

/// Reduced row echelon form. Returns the nonzero rows and their pivot columns.
pub fn rref(mut rows: Vec<Vector>, ncols: usize) -> (Vec<Vector>, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][col].invert().expect("pivot is nonzero");
        if !inv.is_one() {
            for x in rows[r][col..].iter_mut() {
                *x = &*x * &inv;
            }
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (x, p) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                if !p.is_zero() {
                    *x -= &(&factor * p);
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    rows.truncate(r);
    (rows, pivots)
}

pub fn rank(rows: Vec<Vector>, ncols: usize) -> usize {
    rref(rows, ncols).1.len()
}

/// Basis of `{x : A x = 0}` for `A` given by rows, one vector per free column.
pub fn nullspace(rows: Vec<Vector>, ncols: usize) -> Vec<Vector> {
    let (reduced, pivots) = rref(rows, ncols);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Cyclotomic::zero(); ncols];
            v[f] = Cyclotomic::one();
            for (row, &p) in reduced.iter().zip(&pivots) {
                v[p] = -&row[f];
            }
            v
        })
        .collect()
}

/// One solution of `A x = b`, if any.
pub fn solve(a: &[Vector], b: &[Cyclotomic], ncols: usize) -> Option<Vector> {
    let augmented: Vec<Vector> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let (reduced, pivots) = rref(augmented, ncols + 1);
    if pivots.last() == Some(&ncols) {
        return None;
    }
    let mut x = vec![Cyclotomic::zero(); ncols];
    for (row, &p) in reduced.iter().zip(&pivots) {
        x[p] = row[ncols].clone();
    }
    Some(x)
}

/// Exact determinant by Gaussian elimination with row swaps.
pub fn determinant(matrix: &[Vector]) -> Cyclotomic {
    let n = matrix.len();
    let mut m: Vec<Vector> = matrix.to_vec();
    let mut det = Cyclotomic::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&i| !m[i][col].is_zero()) else {
            return Cyclotomic::zero();
        };
        if p != col {
            m.swap(p, col);
            det = -det;
        }
        let pivot = m[col][col].clone();
        det = &det * &pivot;
        let inv = pivot.invert().expect("pivot is nonzero");
        for i in col + 1..n {
            if m[i][col].is_zero() {
                continue;
            }
            let factor = &m[i][col] * &inv;
            for j in col..n {
                let t = &factor * &m[col][j];
                m[i][j] -= &t;
            }
        }
    }
    det
}

/// A linear subspace of `K^ambient` in canonical reduced row echelon form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vector>,
    pivots: Vec<usize>,
}

/// Hashable identity of a subspace over a fixed conductor.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SubspaceKey(Vec<Vec<BigRational>>);

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn span<I: IntoIterator<Item = Vector>>(ambient: usize, vectors: I) -> Self {
        let rows: Vec<Vector> = vectors.into_iter().filter(|v| v.iter().any(|x| !x.is_zero())).collect();
        debug_assert!(rows.iter().all(|v| v.len() == ambient));
        let (basis, pivots) = rref(rows, ambient);
        Subspace { ambient, basis, pivots }
    }

    /// Span of the given standard basis vectors.
    pub fn coordinate(ambient: usize, indices: &[usize]) -> Self {
        Self::span(ambient, indices.iter().map(|&i| unit_vector(ambient, i)))
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// `v` minus its component along the pivot coordinates.
    pub fn reduce(&self, v: &[Cyclotomic]) -> Vector {
        let mut out = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if out[p].is_zero() {
                continue;
            }
            let c = out[p].clone();
            for (x, r) in out.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x -= &(&c * r);
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &[Cyclotomic]) -> bool {
        self.reduce(v).iter().all(Cyclotomic::is_zero)
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.basis.iter().all(|v| other.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        Subspace::span(self.ambient, self.basis.iter().chain(&other.basis).cloned())
    }

    pub fn intersect(&self, other: &Subspace) -> Subspace {
        if self.is_zero() || other.is_zero() {
            return Subspace::zero(self.ambient);
        }
        let (p, q) = (self.dim(), other.dim());
        // Columns are the basis vectors of self followed by the negated basis of other.
        let rows: Vec<Vector> = (0..self.ambient)
            .map(|c| self.basis.iter().map(|u| u[c].clone()).chain(other.basis.iter().map(|w| -&w[c])).collect())
            .collect();
        let combos = nullspace(rows, p + q);
        Subspace::span(
            self.ambient,
            combos.into_iter().map(|coef| {
                let mut v = vec![Cyclotomic::zero(); self.ambient];
                for (a, u) in coef[..p].iter().zip(&self.basis) {
                    if a.is_zero() {
                        continue;
                    }
                    for (x, y) in v.iter_mut().zip(u) {
                        *x += &(a * y);
                    }
                }
                v
            }),
        )
    }

    /// Key for exact hashing; every entry's conductor must divide `conductor`.
    pub fn key(&self, conductor: u32) -> SubspaceKey {
        SubspaceKey(self.basis.iter().map(|row| row.iter().flat_map(|x| x.coords_at(conductor)).collect()).collect())
    }
}

pub fn unit_vector(n: usize, i: usize) -> Vector {
    let mut v = vec![Cyclotomic::zero(); n];
    v[i] = Cyclotomic::one();
    v
}

/// Incrementally maintained echelon basis; used to stream columns into a rank computation.
#[derive(Debug, Clone, Default)]
pub struct EchelonBasis {
    rows: Vec<(usize, Vector)>,
}

impl EchelonBasis {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, mut v: Vector) -> bool {
        for (p, row) in &self.rows {
            if v[*p].is_zero() {
                continue;
            }
            let c = v[*p].clone();
            for (x, r) in v.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x -= &(&c * r);
                }
            }
        }
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[p].invert().expect("pivot is nonzero");
        for x in v.iter_mut() {
            if !x.is_zero() {
                *x = &*x * &inv;
            }
        }
        self.rows.push((p, v));
        true
    }
}
