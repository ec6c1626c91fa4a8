//! Bell inequalities built from orbits of finite groups acting on `R^3`.
//!
//! Measurement settings for Alice and Bob are orbits `{D(g) v}` of a 3D
//! orthogonal representation. The crate computes the singlet-state quantum
//! value of the Bell functional with coefficients `c_ij = -v_i . w_j`, the
//! exact classical bound by exhaustive search over deterministic strategies,
//! and the decomposition of classical signed vertex sums into group orbits.
//!
//! All geometry is generic over [`Real`] (`f32` or `f64`); the `*64`
//! aliases below fix the scalar to `f64`, which is what the reference
//! values are checked against.

pub mod bell_bounds;
pub mod error;
pub mod linalg;
pub mod orbits;
pub mod representations;
pub mod scalar;
pub mod strategy;
pub mod table1;
pub mod z4_model;

pub use bell_bounds::{
    classical_bound, classical_bound_oracle, classical_bound_with, classify_classical_vectors, evaluate_strategies,
    phi_plus_quantum_value, quantum_value, quantum_value_closed_form, signed_sum, BoundRecord, BoundResult,
    ClassicalOrbit, ClassicalOrbitDecomposition, SearchOptions,
};
pub use error::{Error, Result};
pub use linalg::{Matrix3, Vec3};
pub use orbits::{
    canonical_solid, generate_orbit, gram, reflect_y, stabilizer_order, GramMatrix, Orbit, OrbitRecord, Solid,
};
pub use representations::{close_under_multiplication, oh_rep, s4_irrep, verify_orthogonality, z4_rep, FiniteGroupRep};
pub use scalar::Real;
pub use strategy::Strategy;
pub use z4_model::{Z4InitialVector, Z4OrbitGeometry};

pub type Vec3d = Vec3<f64>;
pub type Matrix3d = Matrix3<f64>;
pub type Rep64 = FiniteGroupRep<f64>;
pub type Orbit64 = Orbit<f64>;
pub type Gram64 = GramMatrix<f64>;
pub type BoundResult64 = BoundResult<f64>;
pub type Decomposition64 = ClassicalOrbitDecomposition<f64>;

pub type Vec3f = Vec3<f32>;
pub type Matrix3f = Matrix3<f32>;
pub type Rep32 = FiniteGroupRep<f32>;
pub type Orbit32 = Orbit<f32>;
pub type Gram32 = GramMatrix<f32>;
pub type BoundResult32 = BoundResult<f32>;
