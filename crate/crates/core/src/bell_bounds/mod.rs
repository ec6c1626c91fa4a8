//! Quantum values and classical (local deterministic) bounds of the Bell
//! functional `Σ_ij c_ij <A_i B_j>` with `c_ij = -v_i . w_j`.
//!
//! For the singlet state `<A_i B_j> = -v_i . w_j`, so the quantum value is the
//! squared Frobenius norm of the Gram matrix. The classical bound is the
//! maximum of `Σ_j |Σ_i A_i (v_i . w_j)|` over Alice's sign assignments.

mod classify;
mod search;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::orbits::{gram, reflect_y, GramMatrix, Orbit};
use crate::scalar::Real;
use crate::strategy::Strategy;

pub use classify::{classify_classical_vectors, signed_sum, ClassicalOrbit, ClassicalOrbitDecomposition, PlusCountClass};
pub use search::{classical_bound, classical_bound_with, SearchOptions, SEARCH_BUDGET};

/// Largest `N_A + N_B` accepted by [`classical_bound_oracle`].
pub const ORACLE_BUDGET: usize = 26;

/// Largest orbit accepted by [`classify_classical_vectors`].
pub const CLASSIFY_BUDGET: usize = 24;

/// Classical bound, quantum value and one pair of maximizing strategies.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundResult<T> {
    pub alice_label: String,
    pub bob_label: String,
    pub classical_bound: T,
    pub quantum_value: T,
    pub alice_strategy: Strategy,
    pub bob_strategy: Strategy,
    /// `quantum_value / classical_bound`; NaN when both vanish.
    pub ratio: T,
}

impl<T: Real> BoundResult<T> {
    pub fn n_a(&self) -> usize {
        self.alice_strategy.len()
    }

    pub fn n_b(&self) -> usize {
        self.bob_strategy.len()
    }

    /// True when the quantum value exceeds the classical bound beyond rounding.
    pub fn is_violated(&self) -> bool {
        self.quantum_value > self.classical_bound + T::match_eps() * T::one().max(self.classical_bound)
    }

    pub fn to_record(&self) -> BoundRecord {
        BoundRecord {
            alice: self.alice_label.clone(),
            bob: self.bob_label.clone(),
            n_a: self.n_a(),
            n_b: self.n_b(),
            classical_bound: round_significant(self.classical_bound.as_f64(), 10),
            quantum_value: round_significant(self.quantum_value.as_f64(), 10),
            ratio: Some(self.ratio.as_f64()).filter(|r| r.is_finite()).map(|r| round_significant(r, 10)),
            alice_strategy: self.alice_strategy.to_string(),
            bob_strategy: self.bob_strategy.to_string(),
        }
    }
}

/// Serialization form of a [`BoundResult`]; reals carry 10 significant digits.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundRecord {
    pub alice: String,
    pub bob: String,
    pub n_a: usize,
    pub n_b: usize,
    pub classical_bound: f64,
    pub quantum_value: f64,
    pub ratio: Option<f64>,
    pub alice_strategy: String,
    pub bob_strategy: String,
}

/// Rounds `x` to `digits` significant decimal digits.
pub fn round_significant(x: f64, digits: usize) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    format!("{:.*e}", digits.saturating_sub(1), x).parse().unwrap_or(x)
}

/// `Σ_ij (v_i . w_j)^2`.
pub fn quantum_value<T: Real>(gram: &GramMatrix<T>) -> T {
    gram.entries().iter().fold(T::zero(), |acc, &x| acc + x * x)
}

/// `N_A N_B / 3`, the quantum value for two orbits of one 3D real irrep.
pub fn quantum_value_closed_form<T: Real>(n_a: usize, n_b: usize) -> T {
    T::from_count(n_a) * T::from_count(n_b) / T::lit(3.0)
}

/// Quantum value for the `|φ+>` state: `Σ_ij (v_i . I_y w_j)^2`.
pub fn phi_plus_quantum_value<T: Real>(alice: &Orbit<T>, bob: &Orbit<T>) -> T {
    quantum_value(&gram(alice, &reflect_y(bob)))
}

/// The bilinear form `Σ_ij A_i B_j (v_i . w_j)`.
pub fn evaluate_strategies<T: Real>(gram: &GramMatrix<T>, a: &Strategy, b: &Strategy) -> Result<T> {
    if a.len() != gram.rows() {
        return Err(Error::DimensionMismatch { expected: gram.rows(), found: a.len() });
    }
    if b.len() != gram.cols() {
        return Err(Error::DimensionMismatch { expected: gram.cols(), found: b.len() });
    }
    let mut total = T::zero();
    for (i, &ai) in a.signs().iter().enumerate() {
        let row = gram.row(i);
        let inner = row
            .iter()
            .zip(b.signs())
            .fold(T::zero(), |acc, (&g, &bj)| if bj > 0 { acc + g } else { acc - g });
        total = if ai > 0 { total + inner } else { total - inner };
    }
    Ok(total)
}

/// Independent check of the classical bound: maximizes the bilinear form
/// over every pair of Alice and Bob strategies, with no sign fixing and no
/// absolute-value shortcut. Bob's strategies are walked depth-first.
pub fn classical_bound_oracle<T: Real>(gram: &GramMatrix<T>) -> Result<T> {
    let (rows, cols) = (gram.rows(), gram.cols());
    if rows + cols > ORACLE_BUDGET {
        return Err(Error::BudgetExceeded { settings: rows + cols, limit: ORACLE_BUDGET });
    }

    fn best_bob<T: Real>(weights: &[T], partial: T) -> T {
        match weights.split_first() {
            None => partial,
            Some((&w, rest)) => best_bob(rest, partial + w).max(best_bob(rest, partial - w)),
        }
    }

    let mut best = T::neg_infinity();
    let mut weights = vec![T::zero(); cols];
    for mask in 0u64..(1u64 << rows) {
        weights.iter_mut().for_each(|w| *w = T::zero());
        for i in 0..rows {
            let negative = (mask >> i) & 1 == 1;
            for (w, &g) in weights.iter_mut().zip(gram.row(i)) {
                if negative {
                    *w -= g;
                } else {
                    *w += g;
                }
            }
        }
        best = best.max(best_bob(&weights, T::zero()));
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orbits::{canonical_solid, Solid};

    fn solid(s: Solid) -> Orbit<f64> {
        canonical_solid(s)
    }

    #[test]
    fn quantum_values() {
        let t = solid(Solid::Tetrahedron);
        let o = solid(Solid::Octahedron);
        let to = solid(Solid::TruncatedOctahedron);
        assert!((quantum_value(&gram(&t, &o)) - 8.0).abs() < 1e-12);
        assert!((quantum_value(&gram(&to, &to)) - 192.0).abs() < 1e-9);
        let zero = GramMatrix::from_rows("a", "b", vec![vec![0.0f64]]).unwrap();
        assert_eq!(quantum_value(&zero), 0.0);
    }

    #[test]
    fn closed_form_values() {
        assert_eq!(quantum_value_closed_form::<f64>(12, 4), 16.0);
        assert!((quantum_value_closed_form::<f64>(4, 4) - 16.0 / 3.0).abs() < 1e-15);
        assert!((quantum_value_closed_form::<f64>(1, 1) - 1.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn all_plus_on_tetrahedra_vanishes() {
        let t = solid(Solid::Tetrahedron);
        let g = gram(&t, &t);
        let v = evaluate_strategies(&g, &Strategy::all_plus(4), &Strategy::all_plus(4)).unwrap();
        assert!(v.abs() < 1e-12);
    }

    #[test]
    fn global_sign_flip_is_invisible() {
        let t = solid(Solid::Tetrahedron);
        let o = solid(Solid::Octahedron);
        let g = gram(&t, &o);
        let a: Strategy = "+-+-".parse().unwrap();
        let b: Strategy = "++-+--".parse().unwrap();
        let v = evaluate_strategies(&g, &a, &b).unwrap();
        let w = evaluate_strategies(&g, &a.negated(), &b.negated()).unwrap();
        assert!((v - w).abs() < 1e-12);
    }

    #[test]
    fn dimension_mismatch() {
        let t = solid(Solid::Tetrahedron);
        let g = gram(&t, &t);
        let err = evaluate_strategies(&g, &Strategy::all_plus(3), &Strategy::all_plus(4)).unwrap_err();
        assert_eq!(err, Error::DimensionMismatch { expected: 4, found: 3 });
    }

    #[test]
    fn oracle_small_cases() {
        let t = solid(Solid::Tetrahedron);
        let o = solid(Solid::Octahedron);
        assert!((classical_bound_oracle(&gram(&t, &t)).unwrap() - 16.0 / 3.0).abs() < 1e-9);
        assert!((classical_bound_oracle(&gram(&t, &o)).unwrap() - 4.0 * 3f64.sqrt()).abs() < 1e-9);
        let zero = GramMatrix::from_rows("a", "b", vec![vec![0.0f64; 3]; 2]).unwrap();
        assert_eq!(classical_bound_oracle(&zero).unwrap(), 0.0);
        let to = solid(Solid::TruncatedOctahedron);
        assert!(matches!(classical_bound_oracle(&gram(&to, &t)), Err(Error::BudgetExceeded { .. })));
    }

    #[test]
    fn phi_plus_single_vectors() {
        let mut y = solid(Solid::Tetrahedron);
        y.vertices = vec![crate::linalg::Vec3::new(0.0, 1.0, 0.0)];
        assert!((phi_plus_quantum_value(&y, &y) - 1.0).abs() < 1e-15);
        let t = solid(Solid::Tetrahedron);
        let o = solid(Solid::Octahedron);
        assert!((phi_plus_quantum_value(&t, &o) - 8.0).abs() < 1e-12);
    }

    #[test]
    fn significant_digit_rounding() {
        assert_eq!(round_significant(6.928203230275509, 10), 6.928203230);
        assert_eq!(round_significant(160.00000000000003, 10), 160.0);
        assert_eq!(round_significant(0.0, 10), 0.0);
    }
}
