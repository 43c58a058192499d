//! Probability currents and flow velocities.
//!
//! The nonrelativistic current of a spin eigenstate `phi(r) chi` is
//!
//! ```text
//! J = (rho / m) grad S  +  (1 / m) grad rho x s,      s = (hbar/2) chi* sigma chi
//! ```
//!
//! The first term is the classical current `J1`; the second is the Gordon term
//! `J2`. The Dirac current of a bispinor `(f Omega, i g Omega')` reduces to a
//! purely azimuthal flow with speed `2 c f g (ad - bc) / rho`.

use std::fmt;

use nalgebra::Vector3;

use crate::coords::{SphericalPoint, SphericalVector};
use crate::eigenstates::{DiracHydrogenState, SchrodingerState, SpinProjection};
use crate::error::{Error, Result};
use crate::units::ATOMIC;

/// Densities below this are treated as nodes when dividing by `rho`.
pub const DEFAULT_NODE_TOLERANCE: f64 = 1e-30;

/// Constant spin vector `s` in Cartesian components (units of action), `|s|` is 0 or `hbar/2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpinVector(Vector3<f64>);

impl SpinVector {
    pub fn new(s: Vector3<f64>) -> Result<Self> {
        let half = 0.5 * ATOMIC.hbar;
        let norm = s.norm();
        if !s.iter().all(|v| v.is_finite()) || (norm != 0.0 && (norm - half).abs() > 1e-12 * half) {
            return Err(Error::domain(format!(
                "spin vector magnitude must be 0 or hbar/2, got {norm}"
            )));
        }
        Ok(Self(s))
    }

    /// Spin of magnitude `hbar/2` along `direction`.
    pub fn along(direction: Vector3<f64>) -> Result<Self> {
        let n = direction.norm();
        if !(n > 0.0 && n.is_finite()) {
            return Err(Error::domain("spin direction must be a nonzero finite vector"));
        }
        Ok(Self(direction * (0.5 * ATOMIC.hbar / n)))
    }

    pub fn up() -> Self {
        Self(Vector3::new(0.0, 0.0, 0.5 * ATOMIC.hbar))
    }

    pub fn down() -> Self {
        Self(Vector3::new(0.0, 0.0, -0.5 * ATOMIC.hbar))
    }

    pub fn zero() -> Self {
        Self(Vector3::zeros())
    }

    /// `+hbar/2 z` for `m >= 0`, `-hbar/2 z` for `m < 0`.
    pub fn for_magnetic_number(m: i32) -> Self {
        if m >= 0 {
            Self::up()
        } else {
            Self::down()
        }
    }

    pub fn from_projection(p: SpinProjection) -> Self {
        match p {
            SpinProjection::Up => Self::up(),
            SpinProjection::Down => Self::down(),
        }
    }

    pub fn cartesian(&self) -> Vector3<f64> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0 == Vector3::zeros()
    }

    /// Components in the local basis at `p`. A spin along z becomes
    /// `s_z (cos theta u_r - sin theta u_theta)`.
    pub fn local(&self, p: &SphericalPoint) -> SphericalVector {
        SphericalVector::from_cartesian(&self.0, p)
    }
}

impl std::ops::Neg for SpinVector {
    type Output = Self;
    fn neg(self) -> Self {
        Self(-self.0)
    }
}

fn require_off_origin(p: &SphericalPoint) -> Result<()> {
    if p.at_origin() {
        Err(Error::domain("currents are undefined at the origin"))
    } else {
        Ok(())
    }
}

/// On the axis `u_phi` is undefined: a vanishing limit is returned as zero,
/// anything else is a pole error.
fn on_axis_limit(cartesian: Vector3<f64>, p: &SphericalPoint) -> Result<SphericalVector> {
    if cartesian.iter().all(|&v| v == 0.0) {
        Ok(SphericalVector::ZERO)
    } else {
        Err(Error::Pole(*p))
    }
}

/// Classical current `J1 = (rho / m) grad S`.
pub fn schrodinger_current_j1(state: &SchrodingerState, p: &SphericalPoint) -> Result<SphericalVector> {
    require_off_origin(p)?;
    if state.magnetic_number() == 0 {
        return Ok(SphericalVector::ZERO);
    }
    let rho = state.density(p);
    if p.on_axis() {
        // rho carries sin^{2|m|} theta, so the limit vanishes whenever rho does
        return if rho == 0.0 {
            Ok(SphericalVector::ZERO)
        } else {
            Err(Error::Pole(*p))
        };
    }
    Ok(state.grad_phase(p)? * (rho / ATOMIC.m_e))
}

/// Gordon current `J2 = (1 / m) grad rho x s`.
pub fn gordon_current_j2(
    state: &SchrodingerState,
    spin: &SpinVector,
    p: &SphericalPoint,
) -> Result<SphericalVector> {
    require_off_origin(p)?;
    if spin.is_zero() {
        return Ok(SphericalVector::ZERO);
    }
    let grad = state.grad_density(p)?;
    if p.on_axis() {
        let j = grad.to_cartesian(p).cross(&spin.cartesian()) / ATOMIC.m_e;
        return on_axis_limit(j, p);
    }
    Ok(grad.cross(&spin.local(p)) / ATOMIC.m_e)
}

/// Total current `J1 + J2`.
pub fn total_current(
    state: &SchrodingerState,
    spin: &SpinVector,
    p: &SphericalPoint,
) -> Result<SphericalVector> {
    Ok(schrodinger_current_j1(state, p)? + gordon_current_j2(state, spin, p)?)
}

/// Flow velocity `v = J / rho` with the default node tolerance.
pub fn velocity(state: &SchrodingerState, spin: &SpinVector, p: &SphericalPoint) -> Result<SphericalVector> {
    velocity_with_tolerance(state, spin, p, DEFAULT_NODE_TOLERANCE)
}

pub fn velocity_with_tolerance(
    state: &SchrodingerState,
    spin: &SpinVector,
    p: &SphericalPoint,
    node_tolerance: f64,
) -> Result<SphericalVector> {
    let rho = state.density(p);
    if !(rho > node_tolerance.max(1e-300)) {
        return Err(Error::Node { point: *p, rho });
    }
    Ok(total_current(state, spin, p)? / rho)
}

/// Velocity from the classical current alone, `J1 / rho`.
pub fn classical_velocity(state: &SchrodingerState, p: &SphericalPoint) -> Result<SphericalVector> {
    let rho = state.density(p);
    if !(rho > DEFAULT_NODE_TOLERANCE) {
        return Err(Error::Node { point: *p, rho });
    }
    Ok(schrodinger_current_j1(state, p)? / rho)
}

/// Dirac flow velocity `2 c f g (ad - bc) / (f^2 (a^2 + b^2) + g^2 (c^2 + d^2)) u_phi`.
pub fn dirac_velocity(state: &DiracHydrogenState, p: &SphericalPoint) -> Result<SphericalVector> {
    let (f, g) = state.radial(p.r)?;
    let ang = state.angular(p);
    let rho = f * f * (ang.a * ang.a + ang.b * ang.b) + g * g * (ang.c * ang.c + ang.d * ang.d);
    if !(rho > DEFAULT_NODE_TOLERANCE) {
        return Err(Error::Node { point: *p, rho });
    }
    let speed = 2.0 * ATOMIC.c * f * g * ang.current_factor() / rho;
    if p.on_axis() {
        return if speed == 0.0 {
            Ok(SphericalVector::ZERO)
        } else {
            Err(Error::Pole(*p))
        };
    }
    Ok(SphericalVector::azimuthal(speed))
}

/// Spin orientation of a closed-form reference flow.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SpinSign {
    Plus,
    Minus,
}

impl SpinSign {
    pub fn sign(self) -> f64 {
        match self {
            SpinSign::Plus => 1.0,
            SpinSign::Minus => -1.0,
        }
    }

    pub fn spin(self) -> SpinVector {
        match self {
            SpinSign::Plus => SpinVector::up(),
            SpinSign::Minus => SpinVector::down(),
        }
    }
}

/// Closed-form velocity fields.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ReferenceFlow {
    /// `+- alpha c sin(theta)`
    H1s(SpinSign),
    /// `+- (alpha c / 2) (1 + 1 / (1 - r / 2 r0)) sin(theta)`
    H2s(SpinSign),
    /// `+- (alpha c / 2) sin(theta)`
    H2p0(SpinSign),
    /// `(alpha c / 2) sin(theta)` with spin up
    H2p1,
    /// `-(alpha c / 2) sin(theta)` with spin down
    H2pMinus1,
    /// Oscillator ground state as printed: `-omega r sin(theta)` for spin up
    /// (`SpinSign::Minus` flips it).
    OscGround { spin: SpinSign, omega: f64 },
}

impl ReferenceFlow {
    /// The state and spin this flow describes.
    pub fn state_and_spin(&self) -> Result<(SchrodingerState, SpinVector)> {
        Ok(match *self {
            ReferenceFlow::H1s(s) => (SchrodingerState::hydrogen(1, 0, 0)?, s.spin()),
            ReferenceFlow::H2s(s) => (SchrodingerState::hydrogen(2, 0, 0)?, s.spin()),
            ReferenceFlow::H2p0(s) => (SchrodingerState::hydrogen(2, 1, 0)?, s.spin()),
            ReferenceFlow::H2p1 => (SchrodingerState::hydrogen(2, 1, 1)?, SpinVector::up()),
            ReferenceFlow::H2pMinus1 => (SchrodingerState::hydrogen(2, 1, -1)?, SpinVector::down()),
            ReferenceFlow::OscGround { spin, omega } => {
                (SchrodingerState::oscillator(0, 0, 0, omega)?, spin.spin())
            }
        })
    }

    /// All hydrogen labels.
    pub fn hydrogen_labels() -> Vec<ReferenceFlow> {
        use SpinSign::*;
        vec![
            ReferenceFlow::H1s(Plus),
            ReferenceFlow::H1s(Minus),
            ReferenceFlow::H2s(Plus),
            ReferenceFlow::H2s(Minus),
            ReferenceFlow::H2p0(Plus),
            ReferenceFlow::H2p0(Minus),
            ReferenceFlow::H2p1,
            ReferenceFlow::H2pMinus1,
        ]
    }
}

impl fmt::Display for ReferenceFlow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pm = |s: &SpinSign| if *s == SpinSign::Plus { "+" } else { "-" };
        match self {
            ReferenceFlow::H1s(s) => write!(f, "H1s{}", pm(s)),
            ReferenceFlow::H2s(s) => write!(f, "H2s{}", pm(s)),
            ReferenceFlow::H2p0(s) => write!(f, "H2p0{}", pm(s)),
            ReferenceFlow::H2p1 => f.write_str("H2p1"),
            ReferenceFlow::H2pMinus1 => f.write_str("H2p-1"),
            ReferenceFlow::OscGround { spin, omega } => write!(f, "OscGround{}(omega={omega})", pm(spin)),
        }
    }
}

/// Evaluates a closed-form reference velocity.
pub fn reference_velocity(label: ReferenceFlow, p: &SphericalPoint) -> Result<SphericalVector> {
    let (st, _) = p.sin_cos_theta();
    let ac = ATOMIC.alpha * ATOMIC.c;
    let speed = match label {
        ReferenceFlow::H1s(s) => s.sign() * ac * st,
        ReferenceFlow::H2s(s) => {
            let denom = 1.0 - p.r / (2.0 * ATOMIC.r0);
            if denom == 0.0 {
                return Err(Error::Node { point: *p, rho: 0.0 });
            }
            s.sign() * 0.5 * ac * (1.0 + 1.0 / denom) * st
        }
        ReferenceFlow::H2p0(s) => s.sign() * 0.5 * ac * st,
        ReferenceFlow::H2p1 => 0.5 * ac * st,
        ReferenceFlow::H2pMinus1 => -0.5 * ac * st,
        ReferenceFlow::OscGround { spin, omega } => -spin.sign() * omega * p.r * st,
    };
    Ok(SphericalVector::azimuthal(speed))
}
