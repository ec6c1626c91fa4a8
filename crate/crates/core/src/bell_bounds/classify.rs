//! Decomposition of the `2^N` signed vertex sums `Σ A_i v_i` into group orbits.
//!
//! The group permutes the vertices, so it preserves the number of `+1`
//! coefficients; each plus-count class splits into whole orbits.

use std::collections::HashMap;

use super::CLASSIFY_BUDGET;
use crate::error::{Error, Result};
use crate::linalg::Vec3;
use crate::orbits::Orbit;
use crate::representations::FiniteGroupRep;
use crate::scalar::Real;
use crate::strategy::Strategy;

const LOW_TABLE_BITS: usize = 12;

/// One group orbit of signed vertex sums.
#[derive(Debug, Clone, PartialEq)]
pub struct ClassicalOrbit<T> {
    pub plus_count: usize,
    /// First member reached in sign-code order.
    pub representative: Vec3<T>,
    /// Distinct vectors in the orbit.
    pub size: usize,
    /// Sign assignments landing in the orbit (exceeds `size` when distinct
    /// assignments give the same vector, e.g. cancelling antipodal pairs).
    pub multiplicity: usize,
    pub length: T,
    pub members: Vec<Vec3<T>>,
}

impl<T: Real> ClassicalOrbit<T> {
    pub fn contains(&self, v: Vec3<T>) -> bool {
        let eps = T::match_eps() * T::one().max(v.norm());
        self.members.iter().any(|m| m.approx_eq(v, eps))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PlusCountClass<T> {
    pub plus_count: usize,
    pub orbits: Vec<ClassicalOrbit<T>>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ClassicalOrbitDecomposition<T> {
    pub orbit_label: String,
    pub rep_name: String,
    pub settings: usize,
    /// Indexed by plus-count `0..=settings`.
    pub classes: Vec<PlusCountClass<T>>,
}

impl<T: Real> ClassicalOrbitDecomposition<T> {
    pub fn orbits(&self) -> impl Iterator<Item = &ClassicalOrbit<T>> {
        self.classes.iter().flat_map(|c| c.orbits.iter())
    }

    /// Always `2^settings`.
    pub fn total_multiplicity(&self) -> usize {
        self.orbits().map(|o| o.multiplicity).sum()
    }

    /// The orbit of the given plus-count containing `v`.
    pub fn locate(&self, plus_count: usize, v: Vec3<T>) -> Option<&ClassicalOrbit<T>> {
        self.classes.get(plus_count)?.orbits.iter().find(|o| o.contains(v))
    }

    pub fn max_length(&self) -> T {
        self.orbits().map(|o| o.length).fold(T::zero(), T::max)
    }
}

/// `Σ_i A_i v_i`.
pub fn signed_sum<T: Real>(orbit: &Orbit<T>, strategy: &Strategy) -> Result<Vec3<T>> {
    if strategy.len() != orbit.len() {
        return Err(Error::DimensionMismatch { expected: orbit.len(), found: strategy.len() });
    }
    Ok(orbit
        .vertices
        .iter()
        .zip(strategy.signs())
        .fold(Vec3::zero(), |acc, (&v, &s)| if s > 0 { acc + v } else { acc - v }))
}

/// Hash index over vectors with tolerance-aware lookup.
struct VectorIndex<T> {
    grid: f64,
    cells: HashMap<[i64; 3], Vec<usize>>,
    items: Vec<(Vec3<T>, usize)>,
}

impl<T: Real> VectorIndex<T> {
    fn new() -> Self {
        Self { grid: T::match_eps().as_f64() * 100.0, cells: HashMap::new(), items: Vec::new() }
    }

    fn scaled(&self, v: Vec3<T>) -> [f64; 3] {
        v.to_f64().map(|x| x / self.grid)
    }

    fn find(&self, v: Vec3<T>) -> Option<usize> {
        let eps = T::match_eps();
        let scaled = self.scaled(v);
        let home = scaled.map(|x| x.floor() as i64);
        let hit = |cell: &[i64; 3]| {
            self.cells
                .get(cell)
                .and_then(|ids| ids.iter().copied().find(|&id| self.items[id].0.approx_eq(v, eps)))
        };
        if let Some(id) = hit(&home) {
            return Some(id);
        }
        // a match in a neighbouring cell can only sit next to the shared face
        let offsets = scaled.map(|x| {
            let frac = x - x.floor();
            if frac < 0.01 {
                -1
            } else if frac > 0.99 {
                1
            } else {
                0
            }
        });
        if offsets == [0, 0, 0] {
            return None;
        }
        for dx in [0, offsets[0]] {
            for dy in [0, offsets[1]] {
                for dz in [0, offsets[2]] {
                    if (dx, dy, dz) == (0, 0, 0) {
                        continue;
                    }
                    if let Some(id) = hit(&[home[0] + dx, home[1] + dy, home[2] + dz]) {
                        return Some(id);
                    }
                }
            }
        }
        None
    }

    fn insert(&mut self, v: Vec3<T>) {
        match self.find(v) {
            Some(id) => self.items[id].1 += 1,
            None => {
                let cell = self.scaled(v).map(|x| x.floor() as i64);
                self.cells.entry(cell).or_default().push(self.items.len());
                self.items.push((v, 1));
            }
        }
    }
}

fn subset_sums<T: Real>(vectors: &[Vec3<T>]) -> Vec<Vec3<T>> {
    // bit p of the mask negates vectors[len - 1 - p]
    let k = vectors.len();
    (0..1usize << k)
        .map(|mask| {
            (0..k).fold(Vec3::zero(), |acc, p| {
                let v = vectors[k - 1 - p];
                if (mask >> p) & 1 == 1 {
                    acc - v
                } else {
                    acc + v
                }
            })
        })
        .collect()
}

/// Groups all `2^N` vectors `Σ A_i v_i` into orbits of `rep`, per plus-count.
pub fn classify_classical_vectors<T: Real>(
    orbit: &Orbit<T>,
    rep: &FiniteGroupRep<T>,
) -> Result<ClassicalOrbitDecomposition<T>> {
    let n = orbit.len();
    if n == 0 {
        return Err(Error::Empty);
    }
    if n > CLASSIFY_BUDGET {
        return Err(Error::BudgetExceeded { settings: n, limit: CLASSIFY_BUDGET });
    }

    // code bit n-1-i set <=> A_i = -1; split into high and low lookup tables
    let low_bits = n.min(LOW_TABLE_BITS);
    let high_bits = n - low_bits;
    let low_table = subset_sums(&orbit.vertices[high_bits..]);
    let high_table = subset_sums(&orbit.vertices[..high_bits]);
    let low_mask = (1usize << low_bits) - 1;

    let mut indices: Vec<VectorIndex<T>> = (0..=n).map(|_| VectorIndex::new()).collect();
    for code in 0usize..(1usize << n) {
        let sum = high_table[code >> low_bits] + low_table[code & low_mask];
        let plus_count = n - code.count_ones() as usize;
        indices[plus_count].insert(sum);
    }

    let mut classes = Vec::with_capacity(n + 1);
    for (plus_count, index) in indices.iter().enumerate() {
        let mut assigned = vec![false; index.items.len()];
        let mut orbits = Vec::new();
        for start in 0..index.items.len() {
            if assigned[start] {
                continue;
            }
            let representative = index.items[start].0;
            let mut member_ids: Vec<usize> = Vec::new();
            for g in rep.elements() {
                let image = g.apply(representative);
                let id = index.find(image).ok_or_else(|| {
                    Error::GroupAxiom(format!(
                        "signed sums of `{}` are not closed under {}",
                        orbit.label,
                        rep.name()
                    ))
                })?;
                if !member_ids.contains(&id) {
                    member_ids.push(id);
                }
            }
            for &id in &member_ids {
                assigned[id] = true;
            }
            orbits.push(ClassicalOrbit {
                plus_count,
                representative,
                size: member_ids.len(),
                multiplicity: member_ids.iter().map(|&id| index.items[id].1).sum(),
                length: representative.norm(),
                members: member_ids.iter().map(|&id| index.items[id].0).collect(),
            });
        }
        classes.push(PlusCountClass { plus_count, orbits });
    }

    Ok(ClassicalOrbitDecomposition {
        orbit_label: orbit.label.clone(),
        rep_name: rep.name().to_string(),
        settings: n,
        classes,
    })
}
