#![allow(dead_code)]

use orbit_bell::representations::s4_transpositions;
use orbit_bell::{canonical_solid, generate_orbit, s4_irrep, Orbit64, Solid, Vec3d};
use rand::Rng;

pub fn solid(s: Solid) -> Orbit64 {
    canonical_solid(s)
}

pub fn listed(s: Solid) -> Vec<Vec3d> {
    s.listed_vertices().into_iter().map(Vec3d::from_f64).collect()
}

pub fn random_unit<R: Rng>(rng: &mut R) -> Vec3d {
    loop {
        let v = Vec3d::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
        let n = v.norm();
        if n > 0.1 && n <= 1.0 {
            return v.scale(1.0 / n);
        }
    }
}

/// Random unit vector on the mirror plane of a random S4 transposition.
/// Its orbit has 12 vertices (stabilizer {e, transposition}).
pub fn random_mirror_vector<R: Rng>(rng: &mut R) -> Vec3d {
    let (_, t) = s4_transpositions::<f64>()[rng.gen_range(0..6)];
    loop {
        let v = random_unit(rng);
        // project onto the +1 eigenspace: (v + Tv)/2
        let p = (v + t.apply(v)).scale(0.5);
        if p.norm() > 0.1 {
            return p.scale(1.0 / p.norm());
        }
    }
}

pub fn random_mirror_orbit<R: Rng>(rng: &mut R, label: &str) -> Orbit64 {
    let s4 = s4_irrep::<f64>();
    loop {
        let o = generate_orbit(&s4, random_mirror_vector(rng), label).expect("unit vector");
        if o.len() == 12 {
            return o;
        }
    }
}
