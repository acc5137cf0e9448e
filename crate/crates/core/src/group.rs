//! Finite abelian groups presented as products of cyclic factors `Z_{n_1} x ... x Z_{n_k}`.
//!
//! Elements are residue vectors in canonical form. Every matrix or table indexed by a
//! group uses the lexicographic order produced by [`GroupSpec::enumerate`]; the first
//! factor is the most significant digit.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("element has {found} residues but the group has {expected} cyclic factors")]
    Shape { expected: usize, found: usize },
    #[error("cyclic factor modulus must be at least 1, got {0}")]
    InvalidModulus(u32),
    #[error("residue {residue} out of range for factor {factor} of order {modulus}")]
    ResidueOutOfRange { factor: usize, residue: u32, modulus: u32 },
}

/// A finite abelian group `Z_{n_1} x ... x Z_{n_k}`. The empty product is the trivial group.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawGroupSpec")]
pub struct GroupSpec {
    moduli: Vec<u32>,
}

#[derive(Deserialize)]
struct RawGroupSpec {
    moduli: Vec<u32>,
}

impl TryFrom<RawGroupSpec> for GroupSpec {
    type Error = GroupError;

    fn try_from(raw: RawGroupSpec) -> Result<Self, GroupError> {
        GroupSpec::new(raw.moduli)
    }
}

/// A group element as its residue vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GroupElement(Vec<u32>);

impl GroupElement {
    pub fn residues(&self) -> &[u32] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&r| r == 0)
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, r) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{r}")?;
        }
        write!(f, ")")
    }
}

impl GroupSpec {
    pub fn new(moduli: Vec<u32>) -> Result<Self, GroupError> {
        if let Some(&bad) = moduli.iter().find(|&&n| n == 0) {
            return Err(GroupError::InvalidModulus(bad));
        }
        Ok(GroupSpec { moduli })
    }

    pub fn trivial() -> Self {
        GroupSpec { moduli: Vec::new() }
    }

    pub fn cyclic(n: u32) -> Self {
        assert!(n >= 1, "cyclic group order must be positive");
        GroupSpec { moduli: vec![n] }
    }

    /// `Z_n x Z_n`, the grading group of the Pauli-type gradings.
    pub fn square(n: u32) -> Self {
        assert!(n >= 1, "cyclic group order must be positive");
        GroupSpec { moduli: vec![n, n] }
    }

    /// Direct product, factors of `self` first.
    pub fn product(&self, other: &GroupSpec) -> GroupSpec {
        let mut moduli = self.moduli.clone();
        moduli.extend_from_slice(&other.moduli);
        GroupSpec { moduli }
    }

    pub fn moduli(&self) -> &[u32] {
        &self.moduli
    }

    pub fn rank(&self) -> usize {
        self.moduli.len()
    }

    pub fn order(&self) -> usize {
        self.moduli.iter().map(|&n| n as usize).product()
    }

    /// Least common multiple of the moduli. Every bicharacter value on the group is a root of
    /// unity of order dividing this number.
    pub fn exponent(&self) -> u32 {
        self.moduli.iter().fold(1, |acc, &n| acc.lcm(&n))
    }

    pub fn zero(&self) -> GroupElement {
        GroupElement(vec![0; self.moduli.len()])
    }

    /// Builds an element, reducing each residue into `0..n_i`.
    pub fn element(&self, residues: &[i64]) -> Result<GroupElement, GroupError> {
        self.check_len(residues.len())?;
        Ok(GroupElement(residues.iter().zip(&self.moduli).map(|(&r, &n)| r.rem_euclid(n as i64) as u32).collect()))
    }

    /// Accepts an element only if it is already canonical.
    pub fn canonical(&self, residues: Vec<u32>) -> Result<GroupElement, GroupError> {
        self.check_len(residues.len())?;
        for (factor, (&residue, &modulus)) in residues.iter().zip(&self.moduli).enumerate() {
            if residue >= modulus {
                return Err(GroupError::ResidueOutOfRange { factor, residue, modulus });
            }
        }
        Ok(GroupElement(residues))
    }

    /// The generator `e_i` of the `i`-th cyclic factor.
    pub fn generator(&self, i: usize) -> GroupElement {
        let mut r = vec![0; self.moduli.len()];
        if self.moduli[i] > 1 {
            r[i] = 1;
        }
        GroupElement(r)
    }

    fn check_len(&self, found: usize) -> Result<(), GroupError> {
        if found != self.moduli.len() {
            return Err(GroupError::Shape { expected: self.moduli.len(), found });
        }
        Ok(())
    }

    pub fn contains(&self, g: &GroupElement) -> bool {
        g.0.len() == self.moduli.len() && g.0.iter().zip(&self.moduli).all(|(&r, &n)| r < n)
    }

    pub fn add(&self, a: &GroupElement, b: &GroupElement) -> Result<GroupElement, GroupError> {
        self.check_len(a.0.len())?;
        self.check_len(b.0.len())?;
        Ok(GroupElement(
            a.0.iter()
                .zip(&b.0)
                .zip(&self.moduli)
                .map(|((&x, &y), &n)| ((x as u64 + y as u64) % n as u64) as u32)
                .collect(),
        ))
    }

    pub fn neg(&self, a: &GroupElement) -> Result<GroupElement, GroupError> {
        self.check_len(a.0.len())?;
        Ok(GroupElement(a.0.iter().zip(&self.moduli).map(|(&x, &n)| (n - x % n) % n).collect()))
    }

    pub fn sub(&self, a: &GroupElement, b: &GroupElement) -> Result<GroupElement, GroupError> {
        self.add(a, &self.neg(b)?)
    }

    /// `k * a` in additive notation.
    pub fn scale(&self, a: &GroupElement, k: i64) -> Result<GroupElement, GroupError> {
        self.check_len(a.0.len())?;
        Ok(GroupElement(
            a.0.iter().zip(&self.moduli).map(|(&x, &n)| (x as i64 * k).rem_euclid(n as i64) as u32).collect(),
        ))
    }

    /// All elements in lexicographic order; the zero element comes first.
    pub fn enumerate(&self) -> Vec<GroupElement> {
        (0..self.order()).map(|i| self.element_at(i)).collect()
    }

    /// Position of `g` in [`GroupSpec::enumerate`].
    pub fn index_of(&self, g: &GroupElement) -> usize {
        debug_assert!(self.contains(g));
        g.0.iter().zip(&self.moduli).fold(0usize, |acc, (&r, &n)| acc * n as usize + r as usize)
    }

    /// Inverse of [`GroupSpec::index_of`].
    pub fn element_at(&self, mut index: usize) -> GroupElement {
        let mut r = vec![0u32; self.moduli.len()];
        for (slot, &n) in r.iter_mut().zip(&self.moduli).rev() {
            *slot = (index % n as usize) as u32;
            index /= n as usize;
        }
        GroupElement(r)
    }

    /// Index arithmetic used by the table-driven code paths.
    pub fn add_index(&self, a: usize, b: usize) -> usize {
        let mut stride = 1usize;
        let mut out = 0usize;
        let (mut a, mut b) = (a, b);
        for &n in self.moduli.iter().rev() {
            let n = n as usize;
            out += ((a % n + b % n) % n) * stride;
            a /= n;
            b /= n;
            stride *= n;
        }
        out
    }

    pub fn neg_index(&self, a: usize) -> usize {
        let g = self.element_at(a);
        self.index_of(&self.neg(&g).expect("index decodes to a canonical element"))
    }

    pub fn element_order(&self, g: &GroupElement) -> u32 {
        g.0.iter().zip(&self.moduli).map(|(&r, &n)| n / r.gcd(&n)).fold(1, |acc, o| acc.lcm(&o))
    }

    /// Sum of all group elements together with the number of elements of order exactly 2.
    ///
    /// Computed per factor: in `Z_n` every residue occurs `|G|/n` times, and the involutions
    /// are the nonzero elements with every coordinate in `{0, n_i/2}`.
    pub fn miller_sum(&self) -> (GroupElement, usize) {
        let order = self.order() as u64;
        let sum = self
            .moduli
            .iter()
            .map(|&n| {
                let n = n as u64;
                let copies = order / n;
                let per_copy = (n * (n - 1) / 2) % n;
                ((copies % n) * per_copy % n) as u32
            })
            .collect();
        let solutions_of_2x_eq_0: usize = self.moduli.iter().map(|&n| if n % 2 == 0 { 2 } else { 1 }).product();
        (GroupElement(sum), solutions_of_2x_eq_0 - 1)
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.moduli.is_empty() {
            return write!(f, "1");
        }
        for (i, n) in self.moduli.iter().enumerate() {
            if i > 0 {
                write!(f, " x ")?;
            }
            write!(f, "Z{n}")?;
        }
        Ok(())
    }
}
