//! Points and vectors in spherical coordinates.
//!
//! A [`SphericalVector`] holds components in the right-handed local orthonormal
//! basis `(u_r, u_theta, u_phi)` of the point it was evaluated at; the point is
//! not stored, so conversions to Cartesian take it explicitly.

use std::f64::consts::{PI, TAU};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use nalgebra::Vector3;

use crate::error::{Error, Result};

/// Polar angles closer than this to 0 or pi are treated as lying on the axis.
pub const AXIS_EPS: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SphericalPoint {
    pub r: f64,
    pub theta: f64,
    pub phi: f64,
}

impl SphericalPoint {
    /// Validates `r >= 0` and `theta` in `[0, pi]`; `phi` is wrapped into `[0, 2 pi)`.
    pub fn new(r: f64, theta: f64, phi: f64) -> Result<Self> {
        if !(r.is_finite() && theta.is_finite() && phi.is_finite()) {
            return Err(Error::domain("spherical point has non-finite coordinates"));
        }
        if r < 0.0 {
            return Err(Error::domain(format!("negative radius {r}")));
        }
        if !(0.0..=PI).contains(&theta) {
            return Err(Error::domain(format!("theta {theta} outside [0, pi]")));
        }
        Ok(Self {
            r,
            theta,
            phi: wrap_phi(phi),
        })
    }

    pub fn from_cartesian(x: &Vector3<f64>) -> Self {
        let r = x.norm();
        let rho = x.x.hypot(x.y);
        let theta = if r == 0.0 { 0.0 } else { rho.atan2(x.z) };
        let phi = if rho == 0.0 { 0.0 } else { wrap_phi(x.y.atan2(x.x)) };
        Self { r, theta, phi }
    }

    pub fn to_cartesian(&self) -> Vector3<f64> {
        let (st, ct) = self.sin_cos_theta();
        let (sp, cp) = self.phi.sin_cos();
        Vector3::new(self.r * st * cp, self.r * st * sp, self.r * ct)
    }

    /// `(sin theta, cos theta)`, snapped to `(0, +-1)` on the axis.
    pub fn sin_cos_theta(&self) -> (f64, f64) {
        if self.theta < AXIS_EPS {
            (0.0, 1.0)
        } else if PI - self.theta < AXIS_EPS {
            (0.0, -1.0)
        } else {
            self.theta.sin_cos()
        }
    }

    pub fn on_axis(&self) -> bool {
        self.sin_cos_theta().0 == 0.0
    }

    pub fn at_origin(&self) -> bool {
        self.r == 0.0
    }

    /// Local basis `(u_r, u_theta, u_phi)` in Cartesian components.
    pub fn basis(&self) -> [Vector3<f64>; 3] {
        let (st, ct) = self.sin_cos_theta();
        let (sp, cp) = self.phi.sin_cos();
        [
            Vector3::new(st * cp, st * sp, ct),
            Vector3::new(ct * cp, ct * sp, -st),
            Vector3::new(-sp, cp, 0.0),
        ]
    }
}

impl fmt::Display for SphericalPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "(r={}, theta={}, phi={})",
            self.r, self.theta, self.phi
        )
    }
}

fn wrap_phi(phi: f64) -> f64 {
    let w = phi.rem_euclid(TAU);
    // rem_euclid can round up to exactly TAU for tiny negative inputs
    if w >= TAU {
        0.0
    } else {
        w
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct SphericalVector {
    pub r: f64,
    pub theta: f64,
    pub phi: f64,
}

impl SphericalVector {
    pub const ZERO: SphericalVector = SphericalVector {
        r: 0.0,
        theta: 0.0,
        phi: 0.0,
    };

    pub const fn new(r: f64, theta: f64, phi: f64) -> Self {
        Self { r, theta, phi }
    }

    /// Purely azimuthal vector `v u_phi`.
    pub const fn azimuthal(v: f64) -> Self {
        Self::new(0.0, 0.0, v)
    }

    /// Expresses a Cartesian vector in the local basis at `at`.
    pub fn from_cartesian(v: &Vector3<f64>, at: &SphericalPoint) -> Self {
        let [ur, ut, up] = at.basis();
        Self::new(v.dot(&ur), v.dot(&ut), v.dot(&up))
    }

    pub fn to_cartesian(&self, at: &SphericalPoint) -> Vector3<f64> {
        let [ur, ut, up] = at.basis();
        ur * self.r + ut * self.theta + up * self.phi
    }

    pub fn dot(&self, other: &Self) -> f64 {
        self.r * other.r + self.theta * other.theta + self.phi * other.phi
    }

    /// Cross product in the right-handed basis, `u_r x u_theta = u_phi`.
    pub fn cross(&self, other: &Self) -> Self {
        Self::new(
            self.theta * other.phi - self.phi * other.theta,
            self.phi * other.r - self.r * other.phi,
            self.r * other.theta - self.theta * other.r,
        )
    }

    pub fn norm(&self) -> f64 {
        self.dot(self).sqrt()
    }

    pub fn is_zero(&self) -> bool {
        self.r == 0.0 && self.theta == 0.0 && self.phi == 0.0
    }

    pub fn is_finite(&self) -> bool {
        self.r.is_finite() && self.theta.is_finite() && self.phi.is_finite()
    }

    /// True when the radial and polar components vanish exactly.
    pub fn is_circular(&self) -> bool {
        self.r == 0.0 && self.theta == 0.0
    }
}

impl Add for SphericalVector {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(self.r + o.r, self.theta + o.theta, self.phi + o.phi)
    }
}

impl Sub for SphericalVector {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::new(self.r - o.r, self.theta - o.theta, self.phi - o.phi)
    }
}

impl Neg for SphericalVector {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.r, -self.theta, -self.phi)
    }
}

impl Mul<f64> for SphericalVector {
    type Output = Self;
    fn mul(self, k: f64) -> Self {
        Self::new(self.r * k, self.theta * k, self.phi * k)
    }
}

impl Div<f64> for SphericalVector {
    type Output = Self;
    fn div(self, k: f64) -> Self {
        Self::new(self.r / k, self.theta / k, self.phi / k)
    }
}
