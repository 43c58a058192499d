//! Closed-form eigenstates: nonrelativistic hydrogen `psi_nlm`, isotropic
//! oscillator states, and Dirac hydrogen states.
//!
//! Everything is evaluated in atomic units on the `t = 0` slice; the stationary
//! factor `exp(-i E t / hbar)` does not enter the density or any spatial gradient.

mod dirac;
mod hydrogen;
mod oscillator;

use std::f64::consts::PI;
use std::fmt;

use num_complex::Complex64;

use crate::coords::{SphericalPoint, SphericalVector};
use crate::error::{Error, Result};
use crate::specialfns::{harmonic_theta_deriv_sc, harmonic_theta_sc};
use crate::units::ATOMIC;

pub use dirac::{
    dirac_1s_radial, dirac_angular_components, dirac_ground_exponent, dirac_small_ratio,
    AngularComponents, DiracHydrogenState, RadialPair, SpinProjection, DIRAC_R_MIN,
};
pub use hydrogen::hydrogen_radial;
pub use oscillator::{oscillator_radial, OscillatorNumbers};

/// Hydrogen quantum numbers, `n >= 1`, `0 <= l <= n - 1`, `|m| <= l`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct QuantumNumbers {
    pub n: u32,
    pub l: u32,
    pub m: i32,
}

impl QuantumNumbers {
    pub fn new(n: u32, l: u32, m: i32) -> Result<Self> {
        if n == 0 {
            return Err(Error::domain("principal quantum number must be >= 1"));
        }
        if l >= n {
            return Err(Error::domain(format!("l = {l} must be below n = {n}")));
        }
        if m.unsigned_abs() > l {
            return Err(Error::domain(format!("|m| = {} exceeds l = {l}", m.abs())));
        }
        Ok(Self { n, l, m })
    }
}

/// Which Hamiltonian a state belongs to.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum System {
    Hydrogen,
    Oscillator { omega: f64 },
}

#[derive(Debug, Clone, PartialEq)]
enum Kind {
    Hydrogen(QuantumNumbers),
    SphericalOscillator { qn: OscillatorNumbers, omega: f64 },
    CartesianOscillator { quanta: [u32; 3], omega: f64 },
}

/// A stationary Schrödinger eigenstate written as `sqrt(rho) exp(i S / hbar)`.
#[derive(Debug, Clone, PartialEq)]
pub struct SchrodingerState {
    kind: Kind,
}

/// Builds the hydrogen state `R_nl(r) Y_lm(theta, phi)`.
pub fn hydrogen_state(qn: QuantumNumbers) -> SchrodingerState {
    SchrodingerState {
        kind: Kind::Hydrogen(qn),
    }
}

/// Builds a spherical-basis oscillator state `R_{n_r l}(r) Y_lm(theta, phi)`.
pub fn oscillator_state(qn: OscillatorNumbers, omega: f64) -> Result<SchrodingerState> {
    check_omega(omega)?;
    Ok(SchrodingerState {
        kind: Kind::SphericalOscillator { qn, omega },
    })
}

/// Builds a Cartesian-basis oscillator state `phi_nx(x) phi_ny(y) phi_nz(z)`.
/// These are real, so their classical current vanishes, but their densities
/// depend on `phi` whenever `nx + ny > 0`.
pub fn cartesian_oscillator_state(quanta: [u32; 3], omega: f64) -> Result<SchrodingerState> {
    check_omega(omega)?;
    Ok(SchrodingerState {
        kind: Kind::CartesianOscillator { quanta, omega },
    })
}

fn check_omega(omega: f64) -> Result<()> {
    if !(omega.is_finite() && omega > 0.0) {
        return Err(Error::domain(format!("oscillator frequency must be positive, got {omega}")));
    }
    Ok(())
}

impl SchrodingerState {
    pub fn hydrogen(n: u32, l: u32, m: i32) -> Result<Self> {
        Ok(hydrogen_state(QuantumNumbers::new(n, l, m)?))
    }

    pub fn oscillator(n_r: u32, l: u32, m: i32, omega: f64) -> Result<Self> {
        oscillator_state(OscillatorNumbers::new(n_r, l, m)?, omega)
    }

    pub fn system(&self) -> System {
        match &self.kind {
            Kind::Hydrogen(_) => System::Hydrogen,
            Kind::SphericalOscillator { omega, .. } | Kind::CartesianOscillator { omega, .. } => {
                System::Oscillator { omega: *omega }
            }
        }
    }

    /// Magnetic quantum number; 0 for Cartesian oscillator states, which are real.
    pub fn magnetic_number(&self) -> i32 {
        match &self.kind {
            Kind::Hydrogen(qn) => qn.m,
            Kind::SphericalOscillator { qn, .. } => qn.m,
            Kind::CartesianOscillator { .. } => 0,
        }
    }

    /// Energy in hartree.
    pub fn energy(&self) -> f64 {
        match &self.kind {
            Kind::Hydrogen(qn) => -0.5 / (qn.n as f64).powi(2),
            Kind::SphericalOscillator { qn, omega } => {
                ATOMIC.hbar * omega * (2.0 * qn.n_r as f64 + qn.l as f64 + 1.5)
            }
            Kind::CartesianOscillator { quanta, omega } => {
                ATOMIC.hbar * omega * (quanta.iter().sum::<u32>() as f64 + 1.5)
            }
        }
    }

    /// Characteristic length of the radial decay, used to size quadrature grids.
    pub fn length_scale(&self) -> f64 {
        match &self.kind {
            Kind::Hydrogen(qn) => (qn.n as f64).powi(2),
            Kind::SphericalOscillator { omega, .. } | Kind::CartesianOscillator { omega, .. } => {
                (ATOMIC.hbar / (ATOMIC.m_e * omega)).sqrt()
            }
        }
    }

    /// Decay length of the density's exponential tail.
    pub(crate) fn tail_decay_length(&self) -> f64 {
        match &self.kind {
            Kind::Hydrogen(qn) => qn.n as f64 / 2.0,
            _ => 0.5 * self.length_scale(),
        }
    }

    pub fn label(&self) -> String {
        self.to_string()
    }

    /// `psi(p)` at `t = 0`.
    pub fn wavefunction(&self, p: &SphericalPoint) -> Complex64 {
        match &self.kind {
            Kind::CartesianOscillator { quanta, omega } => {
                Complex64::new(oscillator::cartesian_value_and_gradient(*quanta, *omega, p).0, 0.0)
            }
            _ => {
                let (radial, _) = self.radial(p.r);
                let (st, ct) = p.sin_cos_theta();
                let (l, m) = self.lm();
                let angular = harmonic_theta_sc(l, m, st, ct);
                Complex64::from_polar(radial * angular, m as f64 * p.phi)
            }
        }
    }

    /// Probability density `rho = |psi|^2`.
    pub fn density(&self, p: &SphericalPoint) -> f64 {
        match &self.kind {
            Kind::CartesianOscillator { quanta, omega } => {
                oscillator::cartesian_value_and_gradient(*quanta, *omega, p).0.powi(2)
            }
            _ => {
                let (radial, _) = self.radial(p.r);
                let (st, ct) = p.sin_cos_theta();
                let (l, m) = self.lm();
                (radial * harmonic_theta_sc(l, m, st, ct)).powi(2)
            }
        }
    }

    /// Phase `S` (units of action) on the `t = 0` slice.
    pub fn phase(&self, p: &SphericalPoint) -> f64 {
        self.magnetic_number() as f64 * ATOMIC.hbar * p.phi
    }

    /// Analytic `grad rho` in the local spherical basis. Undefined at the origin.
    pub fn grad_density(&self, p: &SphericalPoint) -> Result<SphericalVector> {
        if p.at_origin() {
            return Err(Error::domain("density gradient requested at the origin"));
        }
        match &self.kind {
            Kind::CartesianOscillator { quanta, omega } => {
                let (psi, grad) = oscillator::cartesian_value_and_gradient(*quanta, *omega, p);
                Ok(SphericalVector::from_cartesian(&(grad * (2.0 * psi)), p))
            }
            _ => {
                let (radial, dradial) = self.radial(p.r);
                let (st, ct) = p.sin_cos_theta();
                let (l, m) = self.lm();
                let ang = harmonic_theta_sc(l, m, st, ct);
                let dang = harmonic_theta_deriv_sc(l, m, st, ct);
                Ok(SphericalVector::new(
                    2.0 * radial * dradial * ang * ang,
                    2.0 * radial * (radial / p.r) * ang * dang,
                    0.0,
                ))
            }
        }
    }

    /// Analytic `grad S` in the local spherical basis; `m hbar / (r sin theta) u_phi`
    /// off the axis. On the axis the result is zero for `m = 0` and a pole error otherwise.
    pub fn grad_phase(&self, p: &SphericalPoint) -> Result<SphericalVector> {
        if p.at_origin() {
            return Err(Error::domain("phase gradient requested at the origin"));
        }
        let m = self.magnetic_number();
        if m == 0 {
            return Ok(SphericalVector::ZERO);
        }
        if p.on_axis() {
            return Err(Error::Pole(*p));
        }
        let (st, _) = p.sin_cos_theta();
        Ok(SphericalVector::azimuthal(m as f64 * ATOMIC.hbar / (p.r * st)))
    }

    fn lm(&self) -> (u32, i32) {
        match &self.kind {
            Kind::Hydrogen(qn) => (qn.l, qn.m),
            Kind::SphericalOscillator { qn, .. } => (qn.l, qn.m),
            Kind::CartesianOscillator { .. } => unreachable!("Cartesian states have no (l, m)"),
        }
    }

    /// Radial function and its derivative for the spherical-basis states.
    fn radial(&self, r: f64) -> (f64, f64) {
        match &self.kind {
            Kind::Hydrogen(qn) => hydrogen::radial_with_deriv(qn.n, qn.l, r),
            Kind::SphericalOscillator { qn, omega } => {
                oscillator::radial_with_deriv(qn.n_r, qn.l, *omega, r)
            }
            Kind::CartesianOscillator { .. } => unreachable!("Cartesian states are not separable in r"),
        }
    }
}

impl fmt::Display for SchrodingerState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            Kind::Hydrogen(qn) => write!(f, "hydrogen({},{},{})", qn.n, qn.l, qn.m),
            Kind::SphericalOscillator { qn, omega } => {
                write!(f, "oscillator({},{},{}; omega={omega})", qn.n_r, qn.l, qn.m)
            }
            Kind::CartesianOscillator { quanta, omega } => write!(
                f,
                "oscillator-xyz({},{},{}; omega={omega})",
                quanta[0], quanta[1], quanta[2]
            ),
        }
    }
}

/// The states exercised by the verification suite: hydrogen up to `n = 3`,
/// spherical oscillator states with `n_r <= 1, l <= 1` at `omega = 1` plus the
/// ground state at `omega = 0.5, 2`, and Cartesian oscillator states with at most
/// two quanta.
pub fn builtin_states() -> Vec<SchrodingerState> {
    let mut out = Vec::new();
    for n in 1..=3u32 {
        for l in 0..n {
            for m in -(l as i32)..=(l as i32) {
                out.push(hydrogen_state(QuantumNumbers { n, l, m }));
            }
        }
    }
    for n_r in 0..=1u32 {
        for l in 0..=1u32 {
            for m in -(l as i32)..=(l as i32) {
                out.push(SchrodingerState {
                    kind: Kind::SphericalOscillator {
                        qn: OscillatorNumbers { n_r, l, m },
                        omega: 1.0,
                    },
                });
            }
        }
    }
    for omega in [0.5, 2.0] {
        out.push(SchrodingerState {
            kind: Kind::SphericalOscillator {
                qn: OscillatorNumbers { n_r: 0, l: 0, m: 0 },
                omega,
            },
        });
    }
    for total in 1..=2u32 {
        for nx in (0..=total).rev() {
            for ny in (0..=(total - nx)).rev() {
                out.push(SchrodingerState {
                    kind: Kind::CartesianOscillator {
                        quanta: [nx, ny, total - nx - ny],
                        omega: 1.0,
                    },
                });
            }
        }
    }
    out
}

/// `1 / sqrt(4 pi)`.
pub(crate) fn y00() -> f64 {
    0.5 / PI.sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(r: f64, t: f64, p: f64) -> SphericalPoint {
        SphericalPoint::new(r, t, p).unwrap()
    }

    #[test]
    fn quantum_number_validation() {
        assert!(QuantumNumbers::new(0, 0, 0).is_err());
        assert!(QuantumNumbers::new(2, 2, 0).is_err());
        assert!(QuantumNumbers::new(3, 1, -2).is_err());
        assert!(QuantumNumbers::new(3, 2, -2).is_ok());
        assert!(SchrodingerState::oscillator(0, 0, 0, -1.0).is_err());
    }

    #[test]
    fn hydrogen_ground_density() {
        let s = SchrodingerState::hydrogen(1, 0, 0).unwrap();
        let rho = s.density(&pt(1.0, PI / 2.0, 0.0));
        assert!((rho - (-2.0f64).exp() / PI).abs() < 1e-16);
        assert!((rho - 0.043_078_56).abs() < 1e-8);
    }

    #[test]
    fn phase_gradients() {
        let s = SchrodingerState::hydrogen(2, 1, 1).unwrap();
        let p = pt(1.7, 0.9, 2.0);
        let g = s.grad_phase(&p).unwrap();
        assert_eq!(g.r, 0.0);
        assert_eq!(g.theta, 0.0);
        assert!((g.phi - 1.0 / (1.7 * 0.9f64.sin())).abs() < 1e-15);
        assert!(matches!(s.grad_phase(&pt(1.0, 0.0, 0.0)), Err(Error::Pole(_))));

        let s0 = SchrodingerState::hydrogen(2, 1, 0).unwrap();
        assert_eq!(s0.phase(&p), 0.0);
        assert!(s0.grad_phase(&p).unwrap().is_zero());
    }

    #[test]
    fn oscillator_ground_matches_closed_form() {
        let s = SchrodingerState::oscillator(0, 0, 0, 1.0).unwrap();
        let rho0 = s.density(&pt(0.0, 0.0, 0.0));
        assert!((rho0 - PI.powf(-1.5)).abs() < 1e-15);
        assert!((rho0 - 0.179_587).abs() < 1e-6);
        assert!(s.grad_phase(&pt(1.0, 1.0, 1.0)).unwrap().is_zero());
        let omega: f64 = 2.0;
        let s = SchrodingerState::oscillator(0, 0, 0, omega).unwrap();
        let p = pt(0.8, 0.4, 1.0);
        let psi = (omega / PI).powf(0.75) * (-0.5 * omega * 0.64).exp();
        assert!((s.density(&p) - psi * psi).abs() < 1e-15);
    }

    #[test]
    fn cartesian_ground_equals_spherical_ground() {
        let a = cartesian_oscillator_state([0, 0, 0], 1.3).unwrap();
        let b = SchrodingerState::oscillator(0, 0, 0, 1.3).unwrap();
        for p in [pt(0.4, 0.3, 0.2), pt(1.5, 2.0, 4.0)] {
            assert!((a.density(&p) - b.density(&p)).abs() < 1e-15);
            let ga = a.grad_density(&p).unwrap();
            let gb = b.grad_density(&p).unwrap();
            assert!((ga - gb).norm() < 1e-14);
        }
    }

    #[test]
    fn energies() {
        assert_eq!(SchrodingerState::hydrogen(2, 1, 0).unwrap().energy(), -0.125);
        assert_eq!(SchrodingerState::oscillator(1, 1, 0, 2.0).unwrap().energy(), 9.0);
        assert_eq!(cartesian_oscillator_state([1, 0, 1], 1.0).unwrap().energy(), 3.5);
    }

    #[test]
    fn catalog_labels_are_unique() {
        let states = builtin_states();
        let mut labels: Vec<_> = states.iter().map(|s| s.label()).collect();
        labels.sort();
        labels.dedup();
        assert_eq!(labels.len(), states.len());
        assert_eq!(states.len(), 14 + 8 + 2 + 9);
    }
}
