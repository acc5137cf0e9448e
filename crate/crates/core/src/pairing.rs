//! Bicharacters and 2-cocycles on a finite abelian group, stored as full value tables in
//! the canonical enumeration order of the group.
//!
//! Every constructor re-checks the defining identities exhaustively, so a value of type
//! [`Bicharacter`] or [`Cocycle`] is always valid.

use num_traits::One;
use thiserror::Error;

use crate::group::{GroupElement, GroupSpec};
use crate::linalg;
use crate::scalar::Cyclotomic;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PairingError {
    #[error("table must be {expected} x {expected}")]
    Shape { expected: usize },
    #[error("value at ({g}, {h}) is zero")]
    ZeroValue { g: GroupElement, h: GroupElement },
    #[error("skew law beta(g,h) = beta(h,g)^-1 fails at g = {g}, h = {h}")]
    NotSkew { g: GroupElement, h: GroupElement },
    #[error("left multiplicativity fails at g = {g}, k = {k}, h = {h}")]
    NotLeftMultiplicative { g: GroupElement, k: GroupElement, h: GroupElement },
    #[error("right multiplicativity fails at g = {g}, h = {h}, k = {k}")]
    NotRightMultiplicative { g: GroupElement, h: GroupElement, k: GroupElement },
    #[error("value at ({g}, {h}) is not a root of unity of order dividing {exponent}")]
    NotRootOfUnity { g: GroupElement, h: GroupElement, exponent: u32 },
    #[error("generator matrix must be {expected} x {expected}")]
    GeneratorShape { expected: usize },
    #[error("generator pair ({i}, {j}) is incompatible: {reason}")]
    Incompatible { i: usize, j: usize, reason: &'static str },
    #[error("cocycle identity fails at g = {g}, h = {h}, k = {k}")]
    CocycleIdentity { g: GroupElement, h: GroupElement, k: GroupElement },
    #[error("xi must satisfy xi^{n} = 1")]
    NotAnNthRoot { n: u32 },
    #[error("coboundary function must have one nonzero value per group element")]
    Coboundary,
    #[error(
        "minimality predicates disagree: radical trivial = {radical_trivial}, \
         equal columns = {has_equal_columns}, det nonzero = {det_nonzero}"
    )]
    MinimalityDisagreement { radical_trivial: bool, has_equal_columns: bool, det_nonzero: bool },
}

type Table = Vec<Vec<Cyclotomic>>;

fn check_shape(group: &GroupSpec, table: &Table) -> Result<(), PairingError> {
    let n = group.order();
    if table.len() != n || table.iter().any(|row| row.len() != n) {
        return Err(PairingError::Shape { expected: n });
    }
    Ok(())
}

fn check_nonzero(group: &GroupSpec, table: &Table) -> Result<(), PairingError> {
    for (i, row) in table.iter().enumerate() {
        if let Some(j) = row.iter().position(Cyclotomic::is_zero) {
            return Err(PairingError::ZeroValue { g: group.element_at(i), h: group.element_at(j) });
        }
    }
    Ok(())
}

/// A bicharacter `beta: G x G -> K*`. Its table is the decomposition matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bicharacter {
    group: GroupSpec,
    table: Table,
}

impl Bicharacter {
    /// Validates skewness, both multiplicativity laws, and the root-of-unity condition.
    pub fn from_table(group: GroupSpec, table: Table) -> Result<Self, PairingError> {
        check_shape(&group, &table)?;
        check_nonzero(&group, &table)?;
        let n = group.order();
        let exponent = group.exponent();
        let el = |i| group.element_at(i);
        for g in 0..n {
            for h in 0..n {
                if !(&table[g][h] * &table[h][g]).is_one() {
                    return Err(PairingError::NotSkew { g: el(g), h: el(h) });
                }
                if !table[g][h].pow(exponent as i64).expect("nonzero").is_one() {
                    return Err(PairingError::NotRootOfUnity { g: el(g), h: el(h), exponent });
                }
            }
        }
        for g in 0..n {
            for k in 0..n {
                let gk = group.add_index(g, k);
                for h in 0..n {
                    if table[gk][h] != &table[g][h] * &table[k][h] {
                        return Err(PairingError::NotLeftMultiplicative { g: el(g), k: el(k), h: el(h) });
                    }
                    let hk = group.add_index(h, k);
                    if table[g][hk] != &table[g][h] * &table[g][k] {
                        return Err(PairingError::NotRightMultiplicative { g: el(g), h: el(h), k: el(k) });
                    }
                }
            }
        }
        Ok(Bicharacter { group, table })
    }

    /// The unique bimultiplicative extension of the values `B[i][j] = beta(e_i, e_j)` on the
    /// generators of the cyclic factors.
    pub fn from_generators(group: GroupSpec, gens: &[Vec<Cyclotomic>]) -> Result<Self, PairingError> {
        let k = group.rank();
        if gens.len() != k || gens.iter().any(|row| row.len() != k) {
            return Err(PairingError::GeneratorShape { expected: k });
        }
        let moduli = group.moduli();
        for i in 0..k {
            for j in 0..k {
                let b = &gens[i][j];
                if b.is_zero() {
                    return Err(PairingError::Incompatible { i, j, reason: "value is zero" });
                }
                let pow_is_one = |n: u32| b.pow(n as i64).expect("nonzero").is_one();
                if !pow_is_one(moduli[i]) {
                    return Err(PairingError::Incompatible { i, j, reason: "B[i][j]^(n_i) != 1" });
                }
                if !pow_is_one(moduli[j]) {
                    return Err(PairingError::Incompatible { i, j, reason: "B[i][j]^(n_j) != 1" });
                }
                if !(b * &gens[j][i]).is_one() {
                    return Err(PairingError::Incompatible { i, j, reason: "B[j][i] != B[i][j]^-1" });
                }
            }
        }
        let elems = group.enumerate();
        let table = elems
            .iter()
            .map(|a| {
                elems
                    .iter()
                    .map(|b| {
                        let mut v = Cyclotomic::one();
                        for (i, &ai) in a.residues().iter().enumerate() {
                            for (j, &bj) in b.residues().iter().enumerate() {
                                let e = ai as i64 * bj as i64;
                                if e != 0 {
                                    v = &v * &gens[i][j].pow(e).expect("nonzero");
                                }
                            }
                        }
                        v
                    })
                    .collect()
            })
            .collect();
        Self::from_table(group, table)
    }

    pub fn trivial(group: GroupSpec) -> Self {
        let n = group.order();
        Bicharacter { group, table: vec![vec![Cyclotomic::one(); n]; n] }
    }

    /// The bicharacter of the natural `Z_2`-grading of the Grassmann algebra.
    pub fn grassmann() -> Self {
        Self::from_generators(GroupSpec::cyclic(2), &[vec![Cyclotomic::from_integer(-1)]])
            .expect("the Grassmann bicharacter is valid")
    }

    /// The bicharacter of the Pauli grading of `M_n`:
    /// `beta((a,b),(c,d)) = zeta_n^(ad - bc)`, so that `beta(deg X, deg Y) = zeta_n`.
    pub fn pauli(n: u32) -> Self {
        induced_bicharacter(&Cocycle::pauli(n))
    }

    pub fn group(&self) -> &GroupSpec {
        &self.group
    }

    pub fn table(&self) -> &Table {
        &self.table
    }

    pub fn at(&self, g: usize, h: usize) -> &Cyclotomic {
        &self.table[g][h]
    }

    pub fn value(&self, g: &GroupElement, h: &GroupElement) -> &Cyclotomic {
        &self.table[self.group.index_of(g)][self.group.index_of(h)]
    }

    pub fn is_trivial(&self) -> bool {
        self.table.iter().flatten().all(Cyclotomic::is_one)
    }

    /// Whether `beta(g,g) = 1` for every `g`; every bicharacter induced by a cocycle is.
    pub fn is_alternating(&self) -> bool {
        (0..self.group.order()).all(|g| self.table[g][g].is_one())
    }
}

/// A normalized-or-not 2-cocycle `tau: G x G -> K*`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cocycle {
    group: GroupSpec,
    table: Table,
}

impl Cocycle {
    /// Validates `tau(g,h+k) tau(h,k) = tau(g+h,k) tau(g,h)` for all triples.
    pub fn from_table(group: GroupSpec, table: Table) -> Result<Self, PairingError> {
        check_shape(&group, &table)?;
        check_nonzero(&group, &table)?;
        let n = group.order();
        for g in 0..n {
            for h in 0..n {
                let gh = group.add_index(g, h);
                for k in 0..n {
                    let hk = group.add_index(h, k);
                    let lhs = &table[g][hk] * &table[h][k];
                    let rhs = &table[gh][k] * &table[g][h];
                    if lhs != rhs {
                        return Err(PairingError::CocycleIdentity {
                            g: group.element_at(g),
                            h: group.element_at(h),
                            k: group.element_at(k),
                        });
                    }
                }
            }
        }
        Ok(Cocycle { group, table })
    }

    pub fn trivial(group: GroupSpec) -> Self {
        let n = group.order();
        Cocycle { group, table: vec![vec![Cyclotomic::one(); n]; n] }
    }

    /// The bilinear cocycle `tau(a,b) = prod_{i,j} F[i][j]^(a_i b_j)`. Each `F[i][j]` must be
    /// both an `n_i`-th and an `n_j`-th root of unity so the exponent is well defined.
    pub fn bilinear(group: GroupSpec, form: &[Vec<Cyclotomic>]) -> Result<Self, PairingError> {
        let k = group.rank();
        if form.len() != k || form.iter().any(|row| row.len() != k) {
            return Err(PairingError::GeneratorShape { expected: k });
        }
        let moduli = group.moduli();
        for i in 0..k {
            for j in 0..k {
                let f = &form[i][j];
                if f.is_zero() {
                    return Err(PairingError::Incompatible { i, j, reason: "value is zero" });
                }
                if !f.pow(moduli[i] as i64).expect("nonzero").is_one()
                    || !f.pow(moduli[j] as i64).expect("nonzero").is_one()
                {
                    return Err(PairingError::Incompatible {
                        i,
                        j,
                        reason: "F[i][j] must be an n_i-th and n_j-th root of unity",
                    });
                }
            }
        }
        let elems = group.enumerate();
        let table = elems
            .iter()
            .map(|a| {
                elems
                    .iter()
                    .map(|b| {
                        let mut v = Cyclotomic::one();
                        for (i, &ai) in a.residues().iter().enumerate() {
                            for (j, &bj) in b.residues().iter().enumerate() {
                                let e = ai as i64 * bj as i64;
                                if e != 0 && !form[i][j].is_one() {
                                    v = &v * &form[i][j].pow(e).expect("nonzero");
                                }
                            }
                        }
                        v
                    })
                    .collect()
            })
            .collect();
        Self::from_table(group, table)
    }

    /// The standard cocycle on `Z_n x Z_n`: `tau((a,b),(c,d)) = xi^(bc)` for any `xi` with
    /// `xi^n = 1`. It is primitive-minimal exactly when `xi` is a primitive `n`-th root.
    pub fn standard(n: u32, xi: Cyclotomic) -> Result<Self, PairingError> {
        if xi.is_zero() || !xi.pow(n as i64).expect("nonzero").is_one() {
            return Err(PairingError::NotAnNthRoot { n });
        }
        let one = Cyclotomic::one();
        Self::bilinear(GroupSpec::square(n), &[vec![one.clone(), one.clone()], vec![xi, one]])
    }

    /// The cocycle of the Pauli matrix basis `X^i Y^j`: the standard cocycle with
    /// `xi = zeta_n^(-1)`, because `Y^j X^k = zeta_n^(-jk) X^k Y^j`.
    pub fn pauli(n: u32) -> Self {
        Self::standard(n, Cyclotomic::zeta(n, -1)).expect("zeta_n^-1 is an n-th root of unity")
    }

    /// Multiplies by the coboundary of `f`: `tau'(g,h) = tau(g,h) f(g) f(h) / f(g+h)`.
    pub fn twisted_by_coboundary(&self, f: &[Cyclotomic]) -> Result<Self, PairingError> {
        let n = self.group.order();
        if f.len() != n || f.iter().any(Cyclotomic::is_zero) {
            return Err(PairingError::Coboundary);
        }
        let table = (0..n)
            .map(|g| {
                (0..n)
                    .map(|h| {
                        let gh = self.group.add_index(g, h);
                        &(&(&self.table[g][h] * &f[g]) * &f[h]) / &f[gh]
                    })
                    .collect()
            })
            .collect();
        Self::from_table(self.group.clone(), table)
    }

    pub fn group(&self) -> &GroupSpec {
        &self.group
    }

    pub fn table(&self) -> &Table {
        &self.table
    }

    pub fn at(&self, g: usize, h: usize) -> &Cyclotomic {
        &self.table[g][h]
    }

    pub fn value(&self, g: &GroupElement, h: &GroupElement) -> &Cyclotomic {
        &self.table[self.group.index_of(g)][self.group.index_of(h)]
    }
}

/// `beta(g,h) = tau(g,h) tau(h,g)^-1`.
pub fn induced_bicharacter(tau: &Cocycle) -> Bicharacter {
    let n = tau.group.order();
    let table = (0..n).map(|g| (0..n).map(|h| &tau.table[g][h] / &tau.table[h][g]).collect()).collect();
    Bicharacter::from_table(tau.group.clone(), table).expect("a valid cocycle induces a valid bicharacter")
}

/// `{k : beta(x,k) = 1 for all x}` in enumeration order.
pub fn radical(beta: &Bicharacter) -> Vec<GroupElement> {
    let n = beta.group.order();
    (0..n).filter(|&k| (0..n).all(|x| beta.table[x][k].is_one())).map(|k| beta.group.element_at(k)).collect()
}

/// The regular elements `Q_0(tau) = {x : tau(x,s) = tau(s,x) for all s}`.
pub fn regular_elements(tau: &Cocycle) -> Vec<GroupElement> {
    let n = tau.group.order();
    (0..n).filter(|&x| (0..n).all(|s| tau.table[x][s] == tau.table[s][x])).map(|x| tau.group.element_at(x)).collect()
}

/// Exact determinant of the decomposition matrix `(beta(g,h))_{g,h}`.
pub fn det_decomposition_matrix(beta: &Bicharacter) -> Cyclotomic {
    linalg::determinant(&beta.table)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinimalityReport {
    pub radical_trivial: bool,
    pub has_equal_columns: bool,
    /// First pair `g < h` (enumeration order) with identical columns.
    pub equal_columns_witness: Option<(GroupElement, GroupElement)>,
    pub det: Cyclotomic,
}

impl MinimalityReport {
    pub fn minimal(&self) -> bool {
        self.radical_trivial
    }
}

/// Evaluates the three minimality predicates and errors if they disagree.
pub fn is_minimal(beta: &Bicharacter) -> Result<MinimalityReport, PairingError> {
    let n = beta.group.order();
    let radical_trivial = radical(beta).len() == 1;
    let column = |h: usize| beta.table.iter().map(move |row| &row[h]);
    let equal_columns_witness = (0..n)
        .flat_map(|g| (g + 1..n).map(move |h| (g, h)))
        .find(|&(g, h)| column(g).eq(column(h)))
        .map(|(g, h)| (beta.group.element_at(g), beta.group.element_at(h)));
    let has_equal_columns = equal_columns_witness.is_some();
    let det = det_decomposition_matrix(beta);
    let det_nonzero = !det.is_zero();
    if radical_trivial == has_equal_columns || radical_trivial != det_nonzero {
        return Err(PairingError::MinimalityDisagreement { radical_trivial, has_equal_columns, det_nonzero });
    }
    Ok(MinimalityReport { radical_trivial, has_equal_columns, equal_columns_witness, det })
}

/// Every bicharacter obtained from a generator matrix whose entries are
/// `exponent(G)`-th roots of unity, in a fixed enumeration order.
pub fn generated_family(group: &GroupSpec) -> Vec<Bicharacter> {
    let k = group.rank();
    let e = group.exponent();
    let slots: Vec<(usize, usize)> = (0..k).flat_map(|i| (i..k).map(move |j| (i, j))).collect();
    let total = (e as usize).pow(slots.len() as u32);
    let mut out = Vec::new();
    for code in 0..total {
        let mut gens = vec![vec![Cyclotomic::one(); k]; k];
        let mut c = code;
        for &(i, j) in &slots {
            let exp = (c % e as usize) as i64;
            c /= e as usize;
            gens[i][j] = Cyclotomic::zeta(e, exp);
            if i != j {
                gens[j][i] = Cyclotomic::zeta(e, -exp);
            }
        }
        if let Ok(beta) = Bicharacter::from_generators(group.clone(), &gens) {
            out.push(beta);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(n: i64) -> Cyclotomic {
        Cyclotomic::from_integer(n)
    }

    fn group(m: &[u32]) -> GroupSpec {
        GroupSpec::new(m.to_vec()).unwrap()
    }

    fn elems(g: &GroupSpec, rs: &[&[i64]]) -> Vec<GroupElement> {
        rs.iter().map(|r| g.element(r).unwrap()).collect()
    }

    #[test]
    fn grassmann_bicharacter() {
        let b = Bicharacter::grassmann();
        let z2 = GroupSpec::cyclic(2);
        let (zero, one) = (z2.element(&[0]).unwrap(), z2.element(&[1]).unwrap());
        assert_eq!(b.value(&one, &one), &c(-1));
        assert!(b.value(&zero, &one).is_one() && b.value(&one, &zero).is_one());
        assert!(b.value(&zero, &zero).is_one());
        assert_eq!(radical(&b), vec![zero]);
        let report = is_minimal(&b).unwrap();
        assert!(report.minimal());
        assert_eq!(report.det, c(-2));
        assert!(!b.is_alternating());
    }

    #[test]
    fn trivial_generators_give_trivial_bicharacter() {
        let g = group(&[4, 2]);
        let b = Bicharacter::from_generators(g.clone(), &vec![vec![c(1); 2]; 2]).unwrap();
        assert_eq!(b, Bicharacter::trivial(g.clone()));
        assert_eq!(radical(&b), g.enumerate());
        let z2 = GroupSpec::cyclic(2);
        let report = is_minimal(&Bicharacter::trivial(z2.clone())).unwrap();
        assert!(!report.minimal());
        assert!(report.det.is_zero());
        assert_eq!(report.equal_columns_witness, Some((z2.element(&[0]).unwrap(), z2.element(&[1]).unwrap())));
    }

    #[test]
    fn z3xz3_generators_validated_by_brute_force() {
        let g = GroupSpec::square(3);
        let w = Cyclotomic::zeta(3, 1);
        let gens = vec![vec![c(1), w.clone()], vec![Cyclotomic::zeta(3, 2), c(1)]];
        let b = Bicharacter::from_generators(g.clone(), &gens).unwrap();
        let x = g.element(&[0, 1]).unwrap();
        let y = g.element(&[1, 0]).unwrap();
        assert_eq!(b.value(&x, &y), &Cyclotomic::zeta(3, 2));
        assert_eq!(b.value(&y, &x), &w);
        assert_eq!(b.value(&x, &y).is_root_of_unity(), Some(3));
        // Independent re-check of all three laws on the full 9x9 table.
        let e = g.enumerate();
        for p in &e {
            for q in &e {
                assert!((b.value(p, q) * b.value(q, p)).is_one());
                for r in &e {
                    let pr = g.add(p, r).unwrap();
                    assert_eq!(b.value(&pr, q), &(b.value(p, q) * b.value(r, q)));
                    let qr = g.add(q, r).unwrap();
                    assert_eq!(b.value(p, &qr), &(b.value(p, q) * b.value(p, r)));
                }
            }
        }
    }

    #[test]
    fn incompatible_generators_are_named() {
        let g = GroupSpec::cyclic(2);
        let err = Bicharacter::from_generators(g, &[vec![Cyclotomic::zeta(4, 1)]]).unwrap_err();
        assert!(matches!(err, PairingError::Incompatible { i: 0, j: 0, .. }));
        let g = GroupSpec::square(3);
        let w = Cyclotomic::zeta(3, 1);
        let err = Bicharacter::from_generators(g, &[vec![c(1), w.clone()], vec![w, c(1)]]).unwrap_err();
        assert!(matches!(err, PairingError::Incompatible { i: 0, j: 1, .. }));
    }

    #[test]
    fn invalid_tables_are_rejected() {
        let g = GroupSpec::cyclic(2);
        let err = Bicharacter::from_table(g.clone(), vec![vec![c(1), c(1)], vec![c(1), c(2)]]);
        assert!(matches!(err, Err(PairingError::NotSkew { .. })));
        let err = Bicharacter::from_table(g.clone(), vec![vec![c(1), c(-1)], vec![c(-1), c(1)]]);
        assert!(matches!(err, Err(PairingError::NotLeftMultiplicative { .. })));
        let err = Bicharacter::from_table(g.clone(), vec![vec![c(1)]]);
        assert_eq!(err, Err(PairingError::Shape { expected: 2 }));
        let err = Cocycle::from_table(g.clone(), vec![vec![c(1), c(1)], vec![c(1), c(0)]]);
        assert!(matches!(err, Err(PairingError::ZeroValue { .. })));
        let err = Cocycle::from_table(g, vec![vec![c(2), c(1)], vec![c(1), c(1)]]);
        assert!(matches!(err, Err(PairingError::CocycleIdentity { .. })));
    }

    #[test]
    fn standard_cocycle_induces_expected_bicharacter() {
        for n in [2u32, 3] {
            let xi = Cyclotomic::zeta(n, 1);
            let tau = Cocycle::standard(n, xi.clone()).unwrap();
            let beta = induced_bicharacter(&tau);
            let g = GroupSpec::square(n);
            for p in g.enumerate() {
                for q in g.enumerate() {
                    let (a, b) = (p.residues()[0] as i64, p.residues()[1] as i64);
                    let (cc, d) = (q.residues()[0] as i64, q.residues()[1] as i64);
                    assert_eq!(tau.value(&p, &q), &xi.pow(b * cc).unwrap());
                    assert_eq!(beta.value(&p, &q), &xi.pow(b * cc - a * d).unwrap());
                }
            }
        }
        assert!(induced_bicharacter(&Cocycle::trivial(GroupSpec::square(2))).is_trivial());
        assert!(matches!(Cocycle::standard(2, Cyclotomic::zeta(3, 1)), Err(PairingError::NotAnNthRoot { n: 2 })));
    }

    #[test]
    fn symmetric_cocycles_induce_trivial_bicharacters() {
        // A coboundary of an arbitrary function is symmetric.
        let g = group(&[2, 3]);
        let f: Vec<Cyclotomic> = (0..g.order()).map(|i| Cyclotomic::zeta(6, i as i64) * c(i as i64 + 1)).collect();
        let tau = Cocycle::trivial(g.clone()).twisted_by_coboundary(&f).unwrap();
        assert!(tau.table().iter().enumerate().all(|(i, row)| row.iter().enumerate().all(|(j, v)| v == tau.at(j, i))));
        assert!(induced_bicharacter(&tau).is_trivial());
    }

    #[test]
    fn pauli_bicharacter_radical_is_trivial() {
        let beta = Bicharacter::pauli(2);
        let g = GroupSpec::square(2);
        // Brute force over all (x, k).
        let rad: Vec<_> =
            g.enumerate().into_iter().filter(|k| g.enumerate().iter().all(|x| beta.value(x, k).is_one())).collect();
        assert_eq!(rad, vec![g.zero()]);
        assert_eq!(radical(&beta), rad);
        let x = g.element(&[1, 0]).unwrap();
        let y = g.element(&[0, 1]).unwrap();
        assert_eq!(
            Bicharacter::pauli(3).value(
                &GroupSpec::square(3).element(&[1, 0]).unwrap(),
                &GroupSpec::square(3).element(&[0, 1]).unwrap()
            ),
            &Cyclotomic::zeta(3, 1)
        );
        assert_eq!(beta.value(&x, &y), &c(-1));
    }

    #[test]
    fn regular_elements_examples() {
        let k4 = GroupSpec::square(2);
        assert_eq!(regular_elements(&Cocycle::trivial(k4.clone())), k4.enumerate());
        let tau = Cocycle::standard(2, c(-1)).unwrap();
        assert_eq!(regular_elements(&tau), vec![k4.zero()]);
        // Non-primitive xi = zeta_4^2 on Z4 x Z4: brute force gives {(a,b) : 2a = 2b = 0}.
        let z44 = GroupSpec::square(4);
        let tau = Cocycle::standard(4, Cyclotomic::zeta(4, 2)).unwrap();
        let expected = elems(&z44, &[&[0, 0], &[0, 2], &[2, 0], &[2, 2]]);
        let brute: Vec<_> = z44
            .enumerate()
            .into_iter()
            .filter(|x| z44.enumerate().iter().all(|s| tau.value(x, s) == tau.value(s, x)))
            .collect();
        assert_eq!(brute, expected);
        assert_eq!(regular_elements(&tau), expected);
        assert_eq!(radical(&induced_bicharacter(&tau)), expected);
    }

    #[test]
    fn determinant_magnitudes() {
        assert_eq!(det_decomposition_matrix(&Bicharacter::trivial(GroupSpec::trivial())), c(1));
        assert_eq!(det_decomposition_matrix(&Bicharacter::grassmann()), c(-2));
        let d2 = det_decomposition_matrix(&Bicharacter::pauli(2));
        assert_eq!(d2.norm_squared(), c(256));
        let d3 = det_decomposition_matrix(&Bicharacter::pauli(3));
        assert_eq!(d3.norm_squared(), c(3i64.pow(18)));
    }

    #[test]
    fn minimality_triple_on_generated_family() {
        let groups = [group(&[2]), group(&[3]), group(&[2, 2]), group(&[4])];
        let expected_sizes = [2usize, 1, 8, 2];
        for (g, size) in groups.iter().zip(expected_sizes) {
            let family = generated_family(g);
            assert_eq!(family.len(), size, "{g}");
            for beta in family {
                let report = is_minimal(&beta).unwrap();
                let rad = radical(&beta);
                for a in &rad {
                    for b in &rad {
                        assert!(rad.contains(&g.add(a, b).unwrap()), "radical is a subgroup");
                    }
                }
                if report.minimal() {
                    assert_eq!(report.det.norm_squared(), c((g.order() as i64).pow(g.order() as u32)));
                }
            }
        }
    }

    #[test]
    fn regular_elements_match_radical_for_random_cocycles() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for moduli in [vec![2u32, 2], vec![2, 4], vec![3, 3], vec![2, 2, 2], vec![4, 4]] {
            let g = group(&moduli);
            let e = g.exponent();
            for _ in 0..3 {
                let k = g.rank();
                let form: Vec<Vec<Cyclotomic>> = (0..k)
                    .map(|i| {
                        (0..k)
                            .map(|j| {
                                let d = num_integer::gcd(moduli[i], moduli[j]);
                                Cyclotomic::zeta(d, rng.gen_range(0..d as i64))
                            })
                            .collect()
                    })
                    .collect();
                let f: Vec<Cyclotomic> =
                    (0..g.order()).map(|_| Cyclotomic::zeta(e, rng.gen_range(0..e as i64))).collect();
                let tau = Cocycle::bilinear(g.clone(), &form).unwrap().twisted_by_coboundary(&f).unwrap();
                assert_eq!(regular_elements(&tau), radical(&induced_bicharacter(&tau)));
            }
        }
    }
}
