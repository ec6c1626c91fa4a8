//! Fixed-size 3D vectors and matrices.

use std::ops::{Add, AddAssign, Index, IndexMut, Mul, Neg, Sub};

use crate::scalar::Real;

/// A direction (or signed vertex sum) in three dimensions.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Vec3<T> {
    pub x: T,
    pub y: T,
    pub z: T,
}

impl<T: Real> Vec3<T> {
    pub const fn new(x: T, y: T, z: T) -> Self {
        Self { x, y, z }
    }

    pub fn zero() -> Self {
        Self::new(T::zero(), T::zero(), T::zero())
    }

    pub fn from_array(a: [T; 3]) -> Self {
        Self::new(a[0], a[1], a[2])
    }

    pub fn to_array(self) -> [T; 3] {
        [self.x, self.y, self.z]
    }

    pub fn from_f64(a: [f64; 3]) -> Self {
        Self::new(T::lit(a[0]), T::lit(a[1]), T::lit(a[2]))
    }

    pub fn to_f64(self) -> [f64; 3] {
        [self.x.as_f64(), self.y.as_f64(), self.z.as_f64()]
    }

    pub fn dot(self, other: Self) -> T {
        self.x * other.x + self.y * other.y + self.z * other.z
    }

    pub fn norm_squared(self) -> T {
        self.dot(self)
    }

    pub fn norm(self) -> T {
        self.norm_squared().sqrt()
    }

    pub fn scale(self, s: T) -> Self {
        Self::new(self.x * s, self.y * s, self.z * s)
    }

    /// Largest absolute coordinate difference.
    pub fn max_abs_diff(self, other: Self) -> T {
        (self.x - other.x)
            .abs()
            .max((self.y - other.y).abs())
            .max((self.z - other.z).abs())
    }

    pub fn approx_eq(self, other: Self, eps: T) -> bool {
        self.max_abs_diff(other) <= eps
    }

    /// The reflection in the x-z plane, `(x, y, z) -> (x, -y, z)`.
    pub fn reflect_y(self) -> Self {
        Self::new(self.x, -self.y, self.z)
    }

    pub fn cast<U: Real>(self) -> Vec3<U> {
        Vec3::new(U::lit(self.x.as_f64()), U::lit(self.y.as_f64()), U::lit(self.z.as_f64()))
    }
}

impl<T: Real> Add for Vec3<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(self.x + rhs.x, self.y + rhs.y, self.z + rhs.z)
    }
}

impl<T: Real> AddAssign for Vec3<T> {
    fn add_assign(&mut self, rhs: Self) {
        *self = *self + rhs;
    }
}

impl<T: Real> Sub for Vec3<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::new(self.x - rhs.x, self.y - rhs.y, self.z - rhs.z)
    }
}

impl<T: Real> Neg for Vec3<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.x, -self.y, -self.z)
    }
}

/// Real 3x3 matrix, row-major.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Matrix3<T> {
    pub entries: [[T; 3]; 3],
}

impl<T: Real> Matrix3<T> {
    pub const fn new(entries: [[T; 3]; 3]) -> Self {
        Self { entries }
    }

    pub fn from_f64(e: [[f64; 3]; 3]) -> Self {
        Self::new(e.map(|row| row.map(T::lit)))
    }

    pub fn identity() -> Self {
        Self::diagonal(T::one(), T::one(), T::one())
    }

    pub fn diagonal(a: T, b: T, c: T) -> Self {
        let z = T::zero();
        Self::new([[a, z, z], [z, b, z], [z, z, c]])
    }

    pub fn transpose(&self) -> Self {
        let e = &self.entries;
        Self::new([
            [e[0][0], e[1][0], e[2][0]],
            [e[0][1], e[1][1], e[2][1]],
            [e[0][2], e[1][2], e[2][2]],
        ])
    }

    pub fn determinant(&self) -> T {
        let e = &self.entries;
        e[0][0] * (e[1][1] * e[2][2] - e[1][2] * e[2][1])
            - e[0][1] * (e[1][0] * e[2][2] - e[1][2] * e[2][0])
            + e[0][2] * (e[1][0] * e[2][1] - e[1][1] * e[2][0])
    }

    pub fn trace(&self) -> T {
        self.entries[0][0] + self.entries[1][1] + self.entries[2][2]
    }

    pub fn scale(&self, s: T) -> Self {
        Self::new(self.entries.map(|row| row.map(|x| x * s)))
    }

    pub fn apply(&self, v: Vec3<T>) -> Vec3<T> {
        let e = &self.entries;
        Vec3::new(
            e[0][0] * v.x + e[0][1] * v.y + e[0][2] * v.z,
            e[1][0] * v.x + e[1][1] * v.y + e[1][2] * v.z,
            e[2][0] * v.x + e[2][1] * v.y + e[2][2] * v.z,
        )
    }

    pub fn max_abs_diff(&self, other: &Self) -> T {
        let mut m = T::zero();
        for r in 0..3 {
            for c in 0..3 {
                m = m.max((self.entries[r][c] - other.entries[r][c]).abs());
            }
        }
        m
    }

    pub fn approx_eq(&self, other: &Self, eps: T) -> bool {
        self.max_abs_diff(other) <= eps
    }

    /// `max |(MᵀM - I)_ij|`.
    pub fn orthogonality_residual(&self) -> T {
        (self.transpose() * *self).max_abs_diff(&Self::identity())
    }
}

impl<T: Real> Mul for Matrix3<T> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let mut out = [[T::zero(); 3]; 3];
        for (r, row) in out.iter_mut().enumerate() {
            for (c, cell) in row.iter_mut().enumerate() {
                *cell = self.entries[r][0] * rhs.entries[0][c]
                    + self.entries[r][1] * rhs.entries[1][c]
                    + self.entries[r][2] * rhs.entries[2][c];
            }
        }
        Self::new(out)
    }
}

impl<T: Real> Mul<Vec3<T>> for Matrix3<T> {
    type Output = Vec3<T>;
    fn mul(self, rhs: Vec3<T>) -> Vec3<T> {
        self.apply(rhs)
    }
}

impl<T: Real> Neg for Matrix3<T> {
    type Output = Self;
    fn neg(self) -> Self {
        self.scale(-T::one())
    }
}

impl<T> Index<(usize, usize)> for Matrix3<T> {
    type Output = T;
    fn index(&self, (r, c): (usize, usize)) -> &T {
        &self.entries[r][c]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix3<T> {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut T {
        &mut self.entries[r][c]
    }
}
