//! Measurement-setting orbits, the canonical solids and Gram matrices.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::Vec3;
use crate::representations::{oh_rep, s4_irrep, FiniteGroupRep};
use crate::scalar::Real;

/// An ordered, deduplicated set of unit vectors `{D(g) v0 : g in G}`.
#[derive(Debug, Clone, PartialEq)]
pub struct Orbit<T> {
    pub label: String,
    pub rep_name: String,
    pub initial_vector: Vec3<T>,
    pub vertices: Vec<Vec3<T>>,
    pub stabilizer_order: usize,
}

impl<T: Real> Orbit<T> {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Builds an orbit from an explicit vertex list, checking that the list
    /// is a single orbit of `rep` containing `vertices[0]`.
    pub fn from_vertices(label: impl Into<String>, rep: &FiniteGroupRep<T>, vertices: Vec<Vec3<T>>) -> Result<Self> {
        let first = *vertices.first().ok_or(Error::Empty)?;
        let generated = generate_orbit(rep, first, "")?;
        if generated.len() != vertices.len() || !same_vertex_set(&generated.vertices, &vertices) {
            return Err(Error::DimensionMismatch { expected: generated.len(), found: vertices.len() });
        }
        Ok(Self {
            label: label.into(),
            rep_name: rep.name().to_string(),
            initial_vector: first,
            vertices,
            stabilizer_order: generated.stabilizer_order,
        })
    }

    /// Index of the vertex matching `v` within `T::match_eps()`.
    pub fn position(&self, v: Vec3<T>) -> Option<usize> {
        let eps = T::match_eps();
        self.vertices.iter().position(|u| u.approx_eq(v, eps))
    }

    /// Largest distance from any `D(g) u` to its nearest vertex.
    pub fn closure_residual(&self, rep: &FiniteGroupRep<T>) -> T {
        let mut worst = T::zero();
        for g in rep.elements() {
            for &u in &self.vertices {
                let image = g.apply(u);
                let nearest = self
                    .vertices
                    .iter()
                    .map(|w| w.max_abs_diff(image))
                    .fold(T::infinity(), T::min);
                worst = worst.max(nearest);
            }
        }
        worst
    }

    /// True when the vertex set is mapped onto itself by the x-z reflection.
    pub fn is_reflect_y_invariant(&self) -> bool {
        let reflected: Vec<_> = self.vertices.iter().map(|v| v.reflect_y()).collect();
        same_vertex_set(&self.vertices, &reflected)
    }

    pub fn to_record(&self) -> OrbitRecord {
        OrbitRecord {
            label: self.label.clone(),
            rep_name: self.rep_name.clone(),
            initial_vector: self.initial_vector.to_f64(),
            stabilizer_order: self.stabilizer_order,
            vertices: self.vertices.iter().map(|v| v.to_f64()).collect(),
        }
    }

    pub fn from_record(record: &OrbitRecord) -> Result<Self> {
        if record.vertices.is_empty() {
            return Err(Error::Empty);
        }
        let vertices: Vec<Vec3<T>> = record.vertices.iter().map(|&v| Vec3::from_f64(v)).collect();
        let eps = T::match_eps();
        for v in &vertices {
            let norm = v.norm();
            if (norm - T::one()).abs() > eps {
                return Err(Error::NonUnitInitialVector { norm: norm.as_f64() });
            }
        }
        Ok(Self {
            label: record.label.clone(),
            rep_name: record.rep_name.clone(),
            initial_vector: Vec3::from_f64(record.initial_vector),
            vertices,
            stabilizer_order: record.stabilizer_order,
        })
    }
}

/// Flat serialization form of an [`Orbit`]. Numbers are written in their
/// shortest round-trip decimal form, so a write/read cycle is lossless.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OrbitRecord {
    pub label: String,
    pub rep_name: String,
    pub initial_vector: [f64; 3],
    pub stabilizer_order: usize,
    pub vertices: Vec<[f64; 3]>,
}

/// Set equality of two vertex lists under `T::match_eps()`.
pub fn same_vertex_set<T: Real>(a: &[Vec3<T>], b: &[Vec3<T>]) -> bool {
    let eps = T::match_eps();
    a.len() == b.len()
        && a.iter().all(|u| b.iter().any(|w| u.approx_eq(*w, eps)))
        && b.iter().all(|u| a.iter().any(|w| u.approx_eq(*w, eps)))
}

fn check_unit<T: Real>(v: Vec3<T>) -> Result<()> {
    let norm = v.norm();
    if !norm.is_finite() || (norm - T::one()).abs() > T::match_eps() {
        return Err(Error::NonUnitInitialVector { norm: norm.as_f64() });
    }
    Ok(())
}

/// Number of group elements fixing `v`.
pub fn stabilizer_order<T: Real>(rep: &FiniteGroupRep<T>, v: Vec3<T>) -> usize {
    let eps = T::match_eps();
    rep.elements().iter().filter(|g| g.apply(v).approx_eq(v, eps)).count()
}

/// The orbit of `v0` in first-discovery order over the element order of `rep`.
pub fn generate_orbit<T: Real>(rep: &FiniteGroupRep<T>, v0: Vec3<T>, label: impl Into<String>) -> Result<Orbit<T>> {
    check_unit(v0)?;
    let eps = T::match_eps();
    let mut vertices: Vec<Vec3<T>> = Vec::new();
    for g in rep.elements() {
        let image = g.apply(v0);
        if !vertices.iter().any(|u| u.approx_eq(image, eps)) {
            vertices.push(image);
        }
    }
    let fixed_count = stabilizer_order(rep, v0);
    let coset_count = rep.order() / vertices.len();
    if coset_count * vertices.len() != rep.order() || coset_count != fixed_count {
        return Err(Error::StabilizerMismatch { coset_count, fixed_count });
    }
    Ok(Orbit {
        label: label.into(),
        rep_name: rep.name().to_string(),
        initial_vector: v0,
        vertices,
        stabilizer_order: fixed_count,
    })
}

/// The x-z reflected copy of an orbit.
pub fn reflect_y<T: Real>(orbit: &Orbit<T>) -> Orbit<T> {
    Orbit {
        label: format!("{}_reflected_y", orbit.label),
        rep_name: orbit.rep_name.clone(),
        initial_vector: orbit.initial_vector.reflect_y(),
        vertices: orbit.vertices.iter().map(|v| v.reflect_y()).collect(),
        stabilizer_order: orbit.stabilizer_order,
    }
}

/// Which group generates a canonical solid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GeneratingGroup {
    S4,
    Oh,
}

impl GeneratingGroup {
    pub fn rep<T: Real>(self) -> FiniteGroupRep<T> {
        match self {
            Self::S4 => s4_irrep(),
            Self::Oh => oh_rep(),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Self::S4 => "S4",
            Self::Oh => "O_h",
        }
    }
}

/// The five solids realised as orbits of S4 or O_h.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Solid {
    Tetrahedron,
    Octahedron,
    Cube,
    Cuboctahedron,
    TruncatedOctahedron,
}

impl Solid {
    pub const ALL: [Solid; 5] = [
        Solid::Tetrahedron,
        Solid::Octahedron,
        Solid::Cube,
        Solid::Cuboctahedron,
        Solid::TruncatedOctahedron,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Self::Tetrahedron => "tetrahedron",
            Self::Octahedron => "octahedron",
            Self::Cube => "cube",
            Self::Cuboctahedron => "cuboctahedron",
            Self::TruncatedOctahedron => "truncated_octahedron",
        }
    }

    /// S4 wherever it suffices; the cube needs the inversion in O_h.
    pub fn generating_group(self) -> GeneratingGroup {
        match self {
            Self::Cube => GeneratingGroup::Oh,
            _ => GeneratingGroup::S4,
        }
    }

    pub fn vertex_count(self) -> usize {
        match self {
            Self::Tetrahedron => 4,
            Self::Octahedron => 6,
            Self::Cube => 8,
            Self::Cuboctahedron => 12,
            Self::TruncatedOctahedron => 24,
        }
    }

    pub fn initial_vector(self) -> [f64; 3] {
        let r = f64::sqrt;
        match self {
            Self::Tetrahedron | Self::Cube => [1.0, 0.0, 0.0],
            Self::Octahedron => [1.0 / r(3.0), r(2.0 / 3.0), 0.0],
            Self::Cuboctahedron => [-r(2.0 / 3.0), 1.0 / r(3.0), 0.0],
            Self::TruncatedOctahedron => [r(3.0 / 5.0), 0.0, r(2.0 / 5.0)],
        }
    }

    /// Reference vertex coordinates in closed form, in the conventional
    /// listing order (not the generation order).
    pub fn listed_vertices(self) -> Vec<[f64; 3]> {
        let r = f64::sqrt;
        match self {
            Self::Tetrahedron => tetrahedron_listing().to_vec(),
            Self::Octahedron => vec![
                [-1.0 / r(3.0), 1.0 / r(6.0), 1.0 / r(2.0)],
                [1.0 / r(3.0), -1.0 / r(6.0), -1.0 / r(2.0)],
                [1.0 / r(3.0), r(2.0 / 3.0), 0.0],
                [-1.0 / r(3.0), -r(2.0 / 3.0), 0.0],
                [-1.0 / r(3.0), 1.0 / r(6.0), -1.0 / r(2.0)],
                [1.0 / r(3.0), -1.0 / r(6.0), 1.0 / r(2.0)],
            ],
            Self::Cube => {
                let t = tetrahedron_listing();
                let mut v = t.to_vec();
                v.extend(t.iter().map(|p| p.map(|x| -x)));
                v
            }
            Self::Cuboctahedron => {
                let a = r(2.0 / 3.0);
                let b = 1.0 / r(3.0);
                let c = r(3.0) / 2.0;
                let d = 1.0 / (2.0 * r(3.0));
                vec![
                    [-a, b, 0.0],
                    [0.0, c, 0.5],
                    [0.0, 0.0, 1.0],
                    [-a, -d, 0.5],
                    [a, -b, 0.0],
                    [0.0, -c, -0.5],
                    [0.0, 0.0, -1.0],
                    [a, d, -0.5],
                    [0.0, -c, 0.5],
                    [0.0, c, -0.5],
                    [a, d, 0.5],
                    [-a, -d, -0.5],
                ]
            }
            Self::TruncatedOctahedron => {
                let a = r(3.0 / 5.0);
                let b = r(2.0 / 5.0);
                let c = r(3.0 / 10.0);
                let d = 1.0 / r(10.0);
                let e = 1.0 / r(15.0);
                let f = 2.0 * r(2.0 / 15.0);
                let g = r(5.0 / 6.0);
                let h = 1.0 / r(30.0);
                let k = 3.0 / r(10.0);
                vec![
                    [a, 0.0, b],
                    [a, c, d],
                    [a, 0.0, -b],
                    [a, c, -d],
                    [a, -c, d],
                    [a, -c, -d],
                    [-a, 0.0, b],
                    [-a, c, d],
                    [-a, 0.0, -b],
                    [-a, c, -d],
                    [-a, -c, d],
                    [-a, -c, -d],
                    [-e, f, -b],
                    [e, g, -d],
                    [-e, f, b],
                    [e, g, d],
                    [e, -f, b],
                    [-e, -g, d],
                    [e, -f, -b],
                    [-e, -g, -d],
                    [-e, h, k],
                    [e, -h, k],
                    [e, -h, -k],
                    [-e, h, -k],
                ]
            }
        }
    }
}

fn tetrahedron_listing() -> [[f64; 3]; 4] {
    let s2 = 2f64.sqrt();
    let s23 = (2.0f64 / 3.0).sqrt();
    [
        [1.0, 0.0, 0.0],
        [-1.0 / 3.0, -s2 / 3.0, s23],
        [-1.0 / 3.0, 2.0 * s2 / 3.0, 0.0],
        [-1.0 / 3.0, -s2 / 3.0, -s23],
    ]
}

impl fmt::Display for Solid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Solid {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_lowercase().replace(['-', ' '], "_");
        Solid::ALL
            .into_iter()
            .find(|solid| solid.name() == key)
            .ok_or_else(|| Error::UnknownSolid(s.to_string()))
    }
}

/// Generates a canonical solid from its initial vector and generating group.
pub fn canonical_solid<T: Real>(solid: Solid) -> Orbit<T> {
    let rep = solid.generating_group().rep::<T>();
    canonical_solid_with(solid, &rep)
}

/// As [`canonical_solid`], reusing an already built representation.
pub fn canonical_solid_with<T: Real>(solid: Solid, rep: &FiniteGroupRep<T>) -> Orbit<T> {
    generate_orbit(rep, Vec3::from_f64(solid.initial_vector()), solid.name()).expect("canonical initial vector is unit")
}

/// `N_A x N_B` matrix of inner products `v_i . w_j`, stored unnegated.
#[derive(Debug, Clone, PartialEq)]
pub struct GramMatrix<T> {
    rows: usize,
    cols: usize,
    entries: Vec<T>,
    pub alice_label: String,
    pub bob_label: String,
}

impl<T: Real> GramMatrix<T> {
    pub fn from_rows(alice_label: impl Into<String>, bob_label: impl Into<String>, rows: Vec<Vec<T>>) -> Result<Self> {
        let n_rows = rows.len();
        let n_cols = rows.first().map_or(0, Vec::len);
        if n_rows == 0 || n_cols == 0 {
            return Err(Error::Empty);
        }
        let mut entries = Vec::with_capacity(n_rows * n_cols);
        for row in rows {
            if row.len() != n_cols {
                return Err(Error::DimensionMismatch { expected: n_cols, found: row.len() });
            }
            entries.extend(row);
        }
        Ok(Self { rows: n_rows, cols: n_cols, entries, alice_label: alice_label.into(), bob_label: bob_label.into() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> T {
        self.entries[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn entries(&self) -> &[T] {
        &self.entries
    }

    /// Swaps the roles of Alice and Bob.
    pub fn transposed(&self) -> Self {
        let mut entries = Vec::with_capacity(self.entries.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                entries.push(self.get(i, j));
            }
        }
        Self {
            rows: self.cols,
            cols: self.rows,
            entries,
            alice_label: self.bob_label.clone(),
            bob_label: self.alice_label.clone(),
        }
    }

    pub fn negated(&self) -> Self {
        let mut out = self.clone();
        out.entries.iter_mut().for_each(|x| *x = -*x);
        out
    }
}

/// Gram matrix of two orbits.
pub fn gram<T: Real>(alice: &Orbit<T>, bob: &Orbit<T>) -> GramMatrix<T> {
    let mut entries = Vec::with_capacity(alice.len() * bob.len());
    for v in &alice.vertices {
        entries.extend(bob.vertices.iter().map(|w| v.dot(*w)));
    }
    GramMatrix {
        rows: alice.len(),
        cols: bob.len(),
        entries,
        alice_label: alice.label.clone(),
        bob_label: bob.label.clone(),
    }
}
