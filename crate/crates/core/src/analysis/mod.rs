//! Numerical checks on top of the eigenstates and currents: density
//! quadrature, the mean Gordon angular momentum, divergence, streamlines
//! and the Dirac / Schrödinger comparison.

use std::f64::consts::{PI, TAU};

use nalgebra::Vector3;

use crate::coords::SphericalPoint;
use crate::currents::SpinVector;
use crate::eigenstates::SchrodingerState;
use crate::error::{Error, Result};
use crate::quadrature::GaussRule;

mod compare;
mod divergence;
mod streamline;

pub use compare::{compare_dirac_schrodinger, compare_with, ComparisonRecord, ComparisonReport, ComparisonValues};
pub use divergence::divergence;
pub use streamline::{streamline, StreamlineError, Trajectory, TrajectorySample};

/// Environment variable overriding the default number of radial nodes.
pub const QUAD_POINTS_ENV: &str = "QFLOW_QUAD_POINTS";

pub const DEFAULT_RADIAL_POINTS: usize = 160;
pub const DEFAULT_THETA_POINTS: usize = 24;
pub const DEFAULT_PHI_POINTS: usize = 24;

/// Tail mass left beyond the automatic `r_max`.
pub const TAIL_MASS_TARGET: f64 = 1e-14;

/// Radial part of a tensor-product rule.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum RadialRule {
    /// Gauss–Legendre mapped onto `[r_min, r_max]`.
    MappedLegendre { r_max: f64 },
    /// Gauss–Laguerre in `x = r / scale`; the `e^{-x}` weight is divided out.
    Laguerre { scale: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureSpec {
    pub radial: RadialRule,
    pub n_radial: usize,
    /// Gauss–Legendre nodes in `cos(theta)`.
    pub n_theta: usize,
    /// Trapezoid nodes in `phi`.
    pub n_phi: usize,
    pub r_min: f64,
}

impl QuadratureSpec {
    pub fn new(radial: RadialRule, n_radial: usize, n_theta: usize, n_phi: usize, r_min: f64) -> Result<Self> {
        let spec = Self {
            radial,
            n_radial,
            n_theta,
            n_phi,
            r_min,
        };
        spec.validate()?;
        Ok(spec)
    }

    fn validate(&self) -> Result<()> {
        if self.n_radial < 8 {
            return Err(Error::domain(format!("need at least 8 radial nodes, got {}", self.n_radial)));
        }
        if self.n_theta == 0 || self.n_phi == 0 {
            return Err(Error::domain("angular rules need at least one node"));
        }
        if !(self.r_min >= 0.0 && self.r_min.is_finite()) {
            return Err(Error::domain(format!("r_min must be finite and >= 0, got {}", self.r_min)));
        }
        match self.radial {
            RadialRule::MappedLegendre { r_max } if !(r_max > self.r_min && r_max.is_finite()) => {
                Err(Error::domain(format!("r_max {r_max} must exceed r_min {}", self.r_min)))
            }
            RadialRule::Laguerre { scale } if !(scale > 0.0 && scale.is_finite()) => {
                Err(Error::domain(format!("Laguerre scale must be positive, got {scale}")))
            }
            _ => Ok(()),
        }
    }

    /// Mapped Gauss–Legendre rule whose `r_max` leaves a density tail below
    /// [`TAIL_MASS_TARGET`]. Radial node count honours `QFLOW_QUAD_POINTS`.
    pub fn for_state(state: &SchrodingerState) -> Result<Self> {
        let r_max = tail_cutoff(|r| shell_density(state, r), state.length_scale(), state.tail_decay_length());
        Self::new(
            RadialRule::MappedLegendre { r_max },
            default_radial_points()?,
            DEFAULT_THETA_POINTS,
            DEFAULT_PHI_POINTS,
            0.0,
        )
    }

    /// Same spec with `factor` times as many nodes in every direction.
    pub fn refined(&self, factor: usize) -> Self {
        Self {
            n_radial: self.n_radial * factor,
            n_theta: self.n_theta * factor,
            n_phi: self.n_phi * factor,
            ..*self
        }
    }

    /// Tensor-product nodes as `(point, weight)` including the `r^2 dr dOmega` measure.
    pub fn nodes(&self) -> Result<Vec<(SphericalPoint, f64)>> {
        self.validate()?;
        let radial: Vec<(f64, f64)> = match self.radial {
            RadialRule::MappedLegendre { r_max } => {
                let rule = GaussRule::legendre(self.n_radial)?.mapped(self.r_min, r_max);
                rule.nodes.into_iter().zip(rule.weights).map(|(r, w)| (r, w * r * r)).collect()
            }
            RadialRule::Laguerre { scale } => {
                let rule = GaussRule::laguerre(self.n_radial)?;
                rule.nodes
                    .into_iter()
                    .zip(rule.weights)
                    .map(|(x, w)| {
                        let r = self.r_min + scale * x;
                        // w e^{x} evaluated in log space so large nodes do not overflow
                        (r, scale * (x + w.ln()).exp() * r * r)
                    })
                    .collect()
            }
        };
        let theta = GaussRule::legendre(self.n_theta)?;
        let dphi = TAU / self.n_phi as f64;
        let mut out = Vec::with_capacity(radial.len() * theta.len() * self.n_phi);
        for &(r, wr) in &radial {
            if wr == 0.0 {
                continue;
            }
            for (&x, &wt) in theta.nodes.iter().zip(&theta.weights) {
                for k in 0..self.n_phi {
                    let p = SphericalPoint::new(r, x.acos(), k as f64 * dphi)?;
                    out.push((p, wr * wt * dphi));
                }
            }
        }
        Ok(out)
    }
}

fn default_radial_points() -> Result<usize> {
    match std::env::var(QUAD_POINTS_ENV) {
        Err(_) => Ok(DEFAULT_RADIAL_POINTS),
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(n) if n >= 8 => Ok(n),
            _ => Err(Error::domain(format!("{QUAD_POINTS_ENV} must be an integer >= 8, got {v:?}"))),
        },
    }
}

/// `r^2` times the largest density over a few directions at radius `r`.
fn shell_density(state: &SchrodingerState, r: f64) -> f64 {
    let mut best: f64 = 0.0;
    for i in 0..7 {
        for j in 0..4 {
            let theta = (i as f64 + 0.5) * PI / 7.0;
            let phi = j as f64 * TAU / 8.0 + 0.3;
            if let Ok(p) = SphericalPoint::new(r, theta, phi) {
                best = best.max(state.density(&p));
            }
        }
    }
    4.0 * PI * r * r * best
}

/// Smallest `r` (on a 5% geometric ladder) where the estimated tail mass
/// `shell(r) * decay` drops below the target and stays decreasing.
fn tail_cutoff(shell: impl Fn(f64) -> f64, scale: f64, decay: f64) -> f64 {
    let mut r = 4.0 * scale;
    let mut prev = f64::INFINITY;
    for _ in 0..2000 {
        let s = shell(r);
        if s * decay < TAIL_MASS_TARGET && s <= prev {
            break;
        }
        prev = s;
        r *= 1.05;
    }
    r
}

/// `int f d^3r` over the spec's grid. A non-finite sample is a numeric error.
pub fn integrate_density(density: impl Fn(&SphericalPoint) -> Result<f64>, spec: &QuadratureSpec) -> Result<f64> {
    let mut total = 0.0;
    for (p, w) in spec.nodes()? {
        let v = density(&p)?;
        if !v.is_finite() {
            return Err(Error::Numeric(format!("non-finite density {v} at {p}")));
        }
        total += w * v;
    }
    Ok(total)
}

/// `int rho d^3r` of a Schrödinger state on its automatic grid.
pub fn normalization(state: &SchrodingerState) -> Result<f64> {
    integrate_density(|p| Ok(state.density(p)), &QuadratureSpec::for_state(state)?)
}

/// Norm deviation tolerated before an angular-momentum integral is rejected.
pub const NORM_CHECK_TOLERANCE: f64 = 1e-8;

/// Mean orbital angular momentum of the Gordon current,
/// `<L2> = int r x (grad rho x s) d^3r`, in Cartesian components.
///
/// For a normalized density this is `2 s`.
pub fn mean_gordon_angular_momentum(
    state: &SchrodingerState,
    spin: &SpinVector,
    spec: &QuadratureSpec,
) -> Result<Vector3<f64>> {
    let s = spin.cartesian();
    let mut norm = 0.0;
    let mut total = Vector3::zeros();
    for (p, w) in spec.nodes()? {
        norm += w * state.density(&p);
        if spin.is_zero() {
            continue;
        }
        let x = p.to_cartesian();
        let grad = state.grad_density(&p)?.to_cartesian(&p);
        let term = x.cross(&grad.cross(&s));
        if !term.iter().all(|v| v.is_finite()) {
            return Err(Error::Numeric(format!("non-finite angular momentum density at {p}")));
        }
        total += term * w;
    }
    if (norm - 1.0).abs() > NORM_CHECK_TOLERANCE {
        return Err(Error::Numeric(format!(
            "quadrature did not converge: norm of {state} is {norm}"
        )));
    }
    Ok(total)
}
