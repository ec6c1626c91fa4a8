//! Finite groups of real orthogonal 3x3 matrices.
//!
//! Groups are built by closing a generator list under multiplication. The
//! element order is breadth-first discovery order (identity first, right
//! multiplication by the generators in the listed order), which makes every
//! downstream orbit ordering reproducible.

use crate::error::{Error, Result};
use crate::linalg::Matrix3;
use crate::scalar::Real;

/// A finite matrix group together with its multiplication and inverse tables.
#[derive(Debug, Clone, PartialEq)]
pub struct FiniteGroupRep<T> {
    name: String,
    elements: Vec<Matrix3<T>>,
    mult_table: Vec<Vec<usize>>,
    inverse_table: Vec<usize>,
}

impl<T: Real> FiniteGroupRep<T> {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Matrix3<T>] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Matrix3<T> {
        &self.elements[i]
    }

    /// Index of `a * b`.
    pub fn mult(&self, a: usize, b: usize) -> usize {
        self.mult_table[a][b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverse_table[a]
    }

    pub fn mult_table(&self) -> &[Vec<usize>] {
        &self.mult_table
    }

    pub fn inverse_table(&self) -> &[usize] {
        &self.inverse_table
    }

    /// Index of the element matching `m` within `T::match_eps()`.
    pub fn find(&self, m: &Matrix3<T>) -> Option<usize> {
        find_matrix(&self.elements, m, T::match_eps())
    }

    pub fn contains(&self, m: &Matrix3<T>) -> bool {
        self.find(m).is_some()
    }

    /// True when every element of `other` is an element of `self`.
    pub fn contains_all(&self, other: &Self) -> bool {
        other.elements.iter().all(|m| self.contains(m))
    }

    /// Same element set, ignoring order.
    pub fn same_elements(&self, other: &Self) -> bool {
        self.order() == other.order() && self.contains_all(other)
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).all(|b| self.mult(a, b) == self.mult(b, a)))
    }

    /// Exhaustive check of the group axioms on the stored tables.
    pub fn verify_axioms(&self) -> Result<()> {
        let n = self.order();
        let eps = T::match_eps();
        if n == 0 || !self.elements[0].approx_eq(&Matrix3::identity(), eps) {
            return Err(Error::GroupAxiom("element 0 is not the identity".into()));
        }
        for a in 0..n {
            if self.mult(0, a) != a || self.mult(a, 0) != a {
                return Err(Error::GroupAxiom(format!("identity does not act trivially on {a}")));
            }
            let inv = self.inverse(a);
            if self.mult(a, inv) != 0 || self.mult(inv, a) != 0 {
                return Err(Error::GroupAxiom(format!("bad inverse for {a}")));
            }
            for b in 0..n {
                let ab = self.mult(a, b);
                if !(self.elements[a] * self.elements[b]).approx_eq(&self.elements[ab], eps) {
                    return Err(Error::GroupAxiom(format!("table entry ({a},{b}) is wrong")));
                }
                for c in 0..n {
                    if self.mult(ab, c) != self.mult(a, self.mult(b, c)) {
                        return Err(Error::GroupAxiom(format!("associativity fails at ({a},{b},{c})")));
                    }
                }
                if a < b && self.elements[a].approx_eq(&self.elements[b], eps) {
                    return Err(Error::GroupAxiom(format!("elements {a} and {b} coincide")));
                }
            }
            // each row of a Cayley table is a permutation
            let mut seen = vec![false; n];
            for &p in &self.mult_table[a] {
                if std::mem::replace(&mut seen[p], true) {
                    return Err(Error::GroupAxiom(format!("row {a} repeats element {p}")));
                }
            }
        }
        Ok(())
    }
}

fn find_matrix<T: Real>(set: &[Matrix3<T>], m: &Matrix3<T>, eps: T) -> Option<usize> {
    set.iter().position(|e| e.approx_eq(m, eps))
}

/// Smallest multiplicatively closed set containing `generators` and the identity.
pub fn close_under_multiplication<T: Real>(
    name: impl Into<String>,
    generators: &[Matrix3<T>],
    max_order: usize,
) -> Result<FiniteGroupRep<T>> {
    let eps = T::match_eps();
    for (index, g) in generators.iter().enumerate() {
        let residual = g.orthogonality_residual();
        if residual > eps || !residual.is_finite() {
            return Err(Error::NonOrthogonalGenerator { index, residual: residual.as_f64() });
        }
    }

    let mut elements = vec![Matrix3::identity()];
    let mut next = 0;
    while next < elements.len() {
        let current = elements[next];
        for g in generators {
            let product = current * *g;
            if find_matrix(&elements, &product, eps).is_none() {
                elements.push(product);
                if elements.len() > max_order {
                    return Err(Error::OrderExceeded { max_order });
                }
            }
        }
        next += 1;
    }

    let n = elements.len();
    let mut mult_table = vec![vec![0; n]; n];
    for a in 0..n {
        for b in 0..n {
            let product = elements[a] * elements[b];
            mult_table[a][b] = find_matrix(&elements, &product, eps).ok_or_else(|| {
                Error::GroupAxiom(format!("product ({a},{b}) left the set; tolerance too tight"))
            })?;
        }
    }
    let inverse_table = (0..n)
        .map(|a| {
            (0..n)
                .find(|&b| mult_table[a][b] == 0)
                .ok_or_else(|| Error::GroupAxiom(format!("element {a} has no inverse")))
        })
        .collect::<Result<Vec<_>>>()?;

    Ok(FiniteGroupRep { name: name.into(), elements, mult_table, inverse_table })
}

/// The six transposition matrices `D(12), D(13), D(14), D(23), D(24), D(34)`
/// of the 3D irreducible representation of S4, labelled by the swapped pair.
pub fn s4_transpositions<T: Real>() -> [((u8, u8), Matrix3<T>); 6] {
    let s2 = 2f64.sqrt();
    let s3 = 3f64.sqrt();
    let s6 = 6f64.sqrt();
    let s8 = 8f64.sqrt();
    [
        ((1, 2), Matrix3::from_f64([[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, -1.0]])),
        ((1, 3), Matrix3::from_f64([[1.0, 0.0, 0.0], [0.0, -0.5, -s3 / 2.0], [0.0, -s3 / 2.0, 0.5]])),
        (
            (1, 4),
            Matrix3::from_f64([
                [-1.0 / 3.0, -s2 / 3.0, -s6 / 3.0],
                [-s2 / 3.0, 5.0 / 6.0, -s3 / 6.0],
                [-s6 / 3.0, -s3 / 6.0, 0.5],
            ]),
        ),
        ((2, 3), Matrix3::from_f64([[1.0, 0.0, 0.0], [0.0, -0.5, s3 / 2.0], [0.0, s3 / 2.0, 0.5]])),
        (
            (2, 4),
            Matrix3::from_f64([
                [-1.0 / 3.0, -s2 / 3.0, s6 / 3.0],
                [-s2 / 3.0, 5.0 / 6.0, s3 / 6.0],
                [s6 / 3.0, s3 / 6.0, 0.5],
            ]),
        ),
        ((3, 4), Matrix3::from_f64([[-1.0 / 3.0, s8 / 3.0, 0.0], [s8 / 3.0, 1.0 / 3.0, 0.0], [0.0, 0.0, 1.0]])),
    ]
}

/// The 24-element 3D irreducible representation of S4.
pub fn s4_irrep<T: Real>() -> FiniteGroupRep<T> {
    let gens: Vec<_> = s4_transpositions::<T>().into_iter().map(|(_, m)| m).collect();
    close_under_multiplication("S4", &gens, 24).expect("S4 transpositions generate 24 elements")
}

/// O_h = S4 x S2: the S4 matrices together with their negatives (48 elements).
pub fn oh_rep<T: Real>() -> FiniteGroupRep<T> {
    let mut gens: Vec<_> = s4_transpositions::<T>().into_iter().map(|(_, m)| m).collect();
    gens.push(-Matrix3::identity());
    close_under_multiplication("O_h", &gens, 48).expect("O_h has 48 elements")
}

/// The cyclic group `{e, g, g^2, g^3}` in the block form subduced from S4.
pub fn z4_rep<T: Real>() -> FiniteGroupRep<T> {
    close_under_multiplication("Z4", &[z4_generator()], 4).expect("Z4 has 4 elements")
}

pub(crate) fn z4_generator<T: Real>() -> Matrix3<T> {
    Matrix3::from_f64([[-1.0, 0.0, 0.0], [0.0, 0.0, 1.0], [0.0, -1.0, 0.0]])
}

/// Residual of the Schur orthogonality relation for a 3D real irrep:
/// `max |Σ_g D_ab(g) D_cd(g) - (|G|/3) δ_ac δ_bd|`.
///
/// Close to zero for irreducible representations; large for reducible ones.
pub fn verify_orthogonality<T: Real>(rep: &FiniteGroupRep<T>) -> T {
    let expected = T::from_count(rep.order()) / T::lit(3.0);
    let mut worst = T::zero();
    for a in 0..3 {
        for b in 0..3 {
            for c in 0..3 {
                for d in 0..3 {
                    let sum = rep.elements().iter().fold(T::zero(), |acc, m| acc + m[(a, b)] * m[(c, d)]);
                    let target = if a == c && b == d { expected } else { T::zero() };
                    worst = worst.max((sum - target).abs());
                }
            }
        }
    }
    worst
}
