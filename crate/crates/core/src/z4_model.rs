//! Bell functionals on orbits of the cyclic group Z4 acting through its
//! reducible 3D representation `1 ⊕ 2`.
//!
//! Alice's settings are the regular tetrahedron produced from
//! `(1, 1, 1)/√3`; Bob's settings are the generic four-vertex orbit of an
//! arbitrary unit vector `(a, b, c)`.

use num_complex::Complex;
use rayon::prelude::*;

use crate::bell_bounds::{classical_bound_with, SearchOptions};
use crate::error::{Error, Result};
use crate::linalg::Vec3;
use crate::orbits::{generate_orbit, gram, Orbit};
use crate::representations::z4_rep;
use crate::scalar::Real;

/// Unit initial vector `(a, b, c)` of a Z4 orbit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Z4InitialVector<T> {
    pub a: T,
    pub b: T,
    pub c: T,
}

impl<T: Real> Z4InitialVector<T> {
    pub fn new(a: T, b: T, c: T) -> Result<Self> {
        let norm = (a * a + b * b + c * c).sqrt();
        if !norm.is_finite() || (norm - T::one()).abs() > T::match_eps() {
            return Err(Error::NonUnitInitialVector { norm: norm.as_f64() });
        }
        Ok(Self { a, b, c })
    }

    /// `(1, 1, 1)/√3`, whose orbit is the regular tetrahedron.
    pub fn tetrahedral() -> Self {
        let s = T::one() / T::lit(3.0).sqrt();
        Self { a: s, b: s, c: s }
    }

    pub fn from_vec3(v: Vec3<T>) -> Result<Self> {
        Self::new(v.x, v.y, v.z)
    }

    pub fn to_vec3(self) -> Vec3<T> {
        Vec3::new(self.a, self.b, self.c)
    }
}

/// The two independent vertex-angle cosines of a generic Z4 orbit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Z4OrbitGeometry<T> {
    /// `v1.v2 = v1.v4 = v2.v3 = v3.v4`
    pub cos_psi: T,
    /// `v1.v3 = v2.v4`
    pub cos_phi: T,
    /// `(v2 - v4).(v1 - v3)`, zero for every input.
    pub diagonal_product: T,
}

/// The four images `g^k v`, `k = 0..4`, with multiplicity.
pub fn z4_settings<T: Real>(v: Z4InitialVector<T>) -> [Vec3<T>; 4] {
    let rep = z4_rep::<T>();
    let v = v.to_vec3();
    [0, 1, 2, 3].map(|k| rep.element(k).apply(v))
}

/// Deduplicated Z4 orbit; degenerate inputs (e.g. `b = c = 0`) give fewer
/// than four vertices.
pub fn z4_orbit<T: Real>(v: Z4InitialVector<T>) -> Result<Orbit<T>> {
    generate_orbit(&z4_rep::<T>(), v.to_vec3(), "z4")
}

/// Measures the orbit angles directly from the generated vertices.
pub fn z4_geometry<T: Real>(v: Z4InitialVector<T>) -> Z4OrbitGeometry<T> {
    let [v1, v2, v3, v4] = z4_settings(v);
    Z4OrbitGeometry { cos_psi: v1.dot(v2), cos_phi: v1.dot(v3), diagonal_product: (v2 - v4).dot(v1 - v3) }
}

pub type ComplexMatrix3<T> = [[Complex<T>; 3]; 3];

/// The unitary `U` whose columns are eigenvectors of the generator; `U† g U = diag(-1, i, -i)`.
pub fn diagonalizing_unitary<T: Real>() -> ComplexMatrix3<T> {
    let z = Complex::new(T::zero(), T::zero());
    let one = Complex::new(T::one(), T::zero());
    let h = T::one() / T::lit(2.0).sqrt();
    [
        [one, z, z],
        [z, Complex::new(h, T::zero()), Complex::new(h, T::zero())],
        [z, Complex::new(T::zero(), h), Complex::new(T::zero(), -h)],
    ]
}

fn adjoint<T: Real>(m: &ComplexMatrix3<T>) -> ComplexMatrix3<T> {
    let mut out = *m;
    for (r, row) in out.iter_mut().enumerate() {
        for (c, cell) in row.iter_mut().enumerate() {
            *cell = m[c][r].conj();
        }
    }
    out
}

fn complex_mul<T: Real>(a: &ComplexMatrix3<T>, b: &ComplexMatrix3<T>) -> ComplexMatrix3<T> {
    let zero = Complex::new(T::zero(), T::zero());
    let mut out = [[zero; 3]; 3];
    for (r, row) in out.iter_mut().enumerate() {
        for (c, cell) in row.iter_mut().enumerate() {
            *cell = (0..3).fold(zero, |acc, k| acc + a[r][k] * b[k][c]);
        }
    }
    out
}

fn complexify<T: Real>(m: &crate::linalg::Matrix3<T>) -> ComplexMatrix3<T> {
    m.entries.map(|row| row.map(|x| Complex::new(x, T::zero())))
}

/// `U† D(g_k) U` for every element of Z4, in element order.
pub fn diagonalized_elements<T: Real>() -> Vec<ComplexMatrix3<T>> {
    let u = diagonalizing_unitary::<T>();
    let ud = adjoint(&u);
    z4_rep::<T>().elements().iter().map(|g| complex_mul(&complex_mul(&ud, &complexify(g)), &u)).collect()
}

/// `max |(U†U - I)_ij|`.
pub fn unitarity_residual<T: Real>() -> T {
    let u = diagonalizing_unitary::<T>();
    let p = complex_mul(&adjoint(&u), &u);
    let mut worst = T::zero();
    for (r, row) in p.iter().enumerate() {
        for (c, cell) in row.iter().enumerate() {
            let target = if r == c { T::one() } else { T::zero() };
            worst = worst.max((cell - Complex::new(target, T::zero())).norm());
        }
    }
    worst
}

/// Largest off-diagonal modulus among the diagonalized elements.
pub fn diagonalization_residual<T: Real>() -> T {
    diagonalized_elements::<T>()
        .iter()
        .flat_map(|m| (0..3).flat_map(move |r| (0..3).filter(move |&c| c != r).map(move |c| m[r][c].norm())))
        .fold(T::zero(), T::max)
}

/// The three one-dimensional characters `e_μ(g̃_k)` read off the diagonals;
/// `characters()[μ][k]`.
pub fn characters<T: Real>() -> [[Complex<T>; 4]; 3] {
    let d = diagonalized_elements::<T>();
    [0, 1, 2].map(|mu| [0, 1, 2, 3].map(|k| d[k][mu][mu]))
}

/// `max |Σ_k conj(e_μ(g_k)) e_ν(g_k) - 4 δ_μν|`.
pub fn character_orthogonality_residual<T: Real>() -> T {
    let chi = characters::<T>();
    let mut worst = T::zero();
    for mu in 0..3 {
        for nu in 0..3 {
            let sum = (0..4).fold(Complex::new(T::zero(), T::zero()), |acc, k| acc + chi[mu][k].conj() * chi[nu][k]);
            let target = if mu == nu { T::lit(4.0) } else { T::zero() };
            worst = worst.max((sum - Complex::new(target, T::zero())).norm());
        }
    }
    worst
}

/// Quantum value through the diagonal basis: `16 Σ_i |ṽ_i|^2 |w̃_i|^2` with
/// `ṽ = U† v`. Equals the Gram-matrix sum over the two four-setting orbits
/// (counted with multiplicity).
pub fn z4_quantum_value<T: Real>(v: Z4InitialVector<T>, w: Z4InitialVector<T>) -> T {
    let ud = adjoint(&diagonalizing_unitary::<T>());
    let transform = |x: Z4InitialVector<T>| {
        let x = [x.a, x.b, x.c];
        [0, 1, 2].map(|r| (0..3).fold(Complex::new(T::zero(), T::zero()), |acc, k| acc + ud[r][k].scale(x[k])))
    };
    let vt = transform(v);
    let wt = transform(w);
    T::lit(16.0) * (0..3).fold(T::zero(), |acc, i| acc + vt[i].norm_sqr() * wt[i].norm_sqr())
}

/// `(1/√3) max(16|a|, 8(|b| + |c|))`: the classical bound against the
/// tetrahedral Alice orbit.
pub fn z4_classical_closed_form<T: Real>(w: Z4InitialVector<T>) -> T {
    let first = T::lit(16.0) * w.a.abs();
    let second = T::lit(8.0) * (w.b.abs() + w.c.abs());
    first.max(second) / T::lit(3.0).sqrt()
}

/// One evaluated Bob vector against the tetrahedral Alice orbit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Z4Evaluation<T> {
    pub w: Z4InitialVector<T>,
    pub closed_form: T,
    pub search: T,
    pub quantum: T,
    pub ratio: T,
    pub violated: bool,
}

/// Runs the generic exhaustive search and the closed form for Bob vector `w`.
///
/// Fails with `DegenerateOrbit` when `w` has fewer than four distinct images.
pub fn z4_evaluate<T: Real>(w: Z4InitialVector<T>, options: &SearchOptions) -> Result<Z4Evaluation<T>> {
    let alice = z4_orbit(Z4InitialVector::tetrahedral())?;
    let bob = z4_orbit(w)?;
    if bob.len() != 4 {
        return Err(Error::DegenerateOrbit { distinct: bob.len(), expected: 4 });
    }
    let result = classical_bound_with(&gram(&alice, &bob), options)?;
    let quantum = z4_quantum_value(Z4InitialVector::tetrahedral(), w);
    let search = result.classical_bound;
    Ok(Z4Evaluation {
        w,
        closed_form: z4_classical_closed_form(w),
        search,
        quantum,
        ratio: quantum / search,
        violated: quantum > search + T::match_eps(),
    })
}

/// Outcome of the classical-bound minimization over Bob's initial vector.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Z4Minimum<T> {
    pub minimizer: Z4InitialVector<T>,
    pub value: T,
    pub quantum: T,
    pub violated: bool,
    pub samples: usize,
    /// Smallest closed-form value over the sphere samples.
    pub sampled_min: T,
    pub sampled_argmin: Z4InitialVector<T>,
}

pub const Z4_MINIMIZATION_SAMPLES: usize = 1_000_000;

/// Minimizes the closed-form classical bound over the unit sphere.
pub fn z4_minimize_classical<T: Real>() -> Z4Minimum<T> {
    z4_minimize_classical_with(Z4_MINIMIZATION_SAMPLES)
}

/// For fixed `|a|` the smallest `|b| + |c|` on the circle `b^2 + c^2 = 1 - a^2`
/// is `√(1 - a^2)`, reached on an axis; the bound is smallest where
/// `16|a| = 8√(1 - a^2)`, i.e. `a = 1/√5`. `(1/√5, 2/√5, 0)` is returned as
/// the representative of the minimizing set. The minimum is cross-checked
/// against `samples` quasi-random sphere points.
pub fn z4_minimize_classical_with<T: Real>(samples: usize) -> Z4Minimum<T> {
    let five = T::lit(5.0).sqrt();
    let minimizer = Z4InitialVector { a: T::one() / five, b: T::lit(2.0) / five, c: T::zero() };
    let value = z4_classical_closed_form(minimizer);
    let quantum = z4_quantum_value(Z4InitialVector::tetrahedral(), minimizer);

    let (sampled_min, index) = (0..samples.max(1))
        .into_par_iter()
        .map(|k| (z4_classical_closed_form(fibonacci_sphere_point::<T>(k, samples.max(1))), k))
        .reduce(
            || (T::infinity(), usize::MAX),
            |x, y| match x.0.partial_cmp(&y.0) {
                Some(std::cmp::Ordering::Less) => x,
                Some(std::cmp::Ordering::Greater) => y,
                _ => if x.1 <= y.1 { x } else { y },
            },
        );

    Z4Minimum {
        minimizer,
        value,
        quantum,
        violated: quantum > value + T::match_eps(),
        samples,
        sampled_min,
        sampled_argmin: fibonacci_sphere_point(index, samples.max(1)),
    }
}

/// The `k`-th of `n` points of the golden-angle spiral on the unit sphere.
pub fn fibonacci_sphere_point<T: Real>(k: usize, n: usize) -> Z4InitialVector<T> {
    let golden = std::f64::consts::PI * (3.0 - 5f64.sqrt());
    let z = 1.0 - (2.0 * k as f64 + 1.0) / n as f64;
    let r = (1.0 - z * z).max(0.0).sqrt();
    let phi = golden * k as f64;
    Z4InitialVector { a: T::lit(z), b: T::lit(r * phi.cos()), c: T::lit(r * phi.sin()) }
}

/// Regular `(polar, azimuth)` grid: `a = cos θ`, `b = sin θ cos φ`,
/// `c = sin θ sin φ`, with `steps + 1` polar and `steps` azimuthal samples.
pub fn z4_scan_grid<T: Real>(steps: usize) -> Vec<Z4InitialVector<T>> {
    let steps = steps.max(1);
    let mut out = Vec::with_capacity((steps + 1) * steps);
    for i in 0..=steps {
        let theta = std::f64::consts::PI * i as f64 / steps as f64;
        for j in 0..steps {
            let phi = 2.0 * std::f64::consts::PI * j as f64 / steps as f64;
            out.push(Z4InitialVector {
                a: T::lit(theta.cos()),
                b: T::lit(theta.sin() * phi.cos()),
                c: T::lit(theta.sin() * phi.sin()),
            });
        }
    }
    out
}
