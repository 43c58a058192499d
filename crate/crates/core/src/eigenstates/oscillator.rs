use nalgebra::Vector3;

use crate::coords::SphericalPoint;
use crate::error::{Error, Result};
use crate::specialfns::{
    factorial, gamma_half_integer, generalized_laguerre, generalized_laguerre_deriv,
    hermite_function_with_deriv,
};
use crate::units::ATOMIC;

/// Spherical-basis oscillator indices: radial quanta `n_r >= 0`, `l >= 0`, `|m| <= l`.
/// The energy is `hbar omega (2 n_r + l + 3/2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct OscillatorNumbers {
    pub n_r: u32,
    pub l: u32,
    pub m: i32,
}

impl OscillatorNumbers {
    pub fn new(n_r: u32, l: u32, m: i32) -> Result<Self> {
        if m.unsigned_abs() > l {
            return Err(Error::domain(format!("|m| = {} exceeds l = {l}", m.abs())));
        }
        Ok(Self { n_r, l, m })
    }
}

fn stiffness(omega: f64) -> f64 {
    ATOMIC.m_e * omega / ATOMIC.hbar
}

/// Normalized radial function `N r^l L_{n_r}^{l+1/2}(xi r^2) exp(-xi r^2 / 2)`,
/// `xi = m omega / hbar`.
pub fn oscillator_radial(qn: OscillatorNumbers, omega: f64, r: f64) -> Result<f64> {
    if !(omega > 0.0 && omega.is_finite()) {
        return Err(Error::domain(format!("oscillator frequency must be positive, got {omega}")));
    }
    if !(r >= 0.0 && r.is_finite()) {
        return Err(Error::domain(format!("radius must be finite and nonnegative, got {r}")));
    }
    Ok(radial_with_deriv(qn.n_r, qn.l, omega, r).0)
}

pub(crate) fn radial_with_deriv(n_r: u32, l: u32, omega: f64, r: f64) -> (f64, f64) {
    let xi = stiffness(omega);
    let a = l as f64 + 0.5;
    let norm = (2.0 * xi.powf(l as f64 + 1.5) * factorial(n_r) / gamma_half_integer(n_r + l + 1))
        .sqrt();
    let u = xi * r * r;
    let lag = generalized_laguerre(n_r, a, u);
    let dlag = generalized_laguerre_deriv(n_r, a, u);
    let envelope = norm * (-0.5 * u).exp();
    let rl = r.powi(l as i32);
    let value = envelope * rl * lag;
    let mut d = rl * (2.0 * xi * r * dlag - xi * r * lag);
    if l > 0 {
        d += l as f64 * r.powi(l as i32 - 1) * lag;
    }
    (value, envelope * d)
}

/// `psi` and its Cartesian gradient for the product state `phi_nx(x) phi_ny(y) phi_nz(z)`.
pub(crate) fn cartesian_value_and_gradient(
    quanta: [u32; 3],
    omega: f64,
    p: &SphericalPoint,
) -> (f64, Vector3<f64>) {
    let xi = stiffness(omega);
    let scale = xi.sqrt();
    let amp = xi.powf(0.25);
    let x = p.to_cartesian();
    let mut vals = [0.0; 3];
    let mut ders = [0.0; 3];
    for k in 0..3 {
        let (v, d) = hermite_function_with_deriv(quanta[k], scale * x[k]);
        vals[k] = amp * v;
        ders[k] = amp * scale * d;
    }
    let psi = vals[0] * vals[1] * vals[2];
    let grad = Vector3::new(
        ders[0] * vals[1] * vals[2],
        vals[0] * ders[1] * vals[2],
        vals[0] * vals[1] * ders[2],
    );
    (psi, grad)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn radial_derivative_matches_finite_difference() {
        let h = 1e-6;
        for n_r in 0..3u32 {
            for l in 0..3u32 {
                for &r in &[0.2, 1.1, 2.5] {
                    let f = |r: f64| radial_with_deriv(n_r, l, 1.7, r).0;
                    let fd = (f(r + h) - f(r - h)) / (2.0 * h);
                    let an = radial_with_deriv(n_r, l, 1.7, r).1;
                    assert!((fd - an).abs() < 1e-8, "n_r={n_r} l={l} r={r}");
                }
            }
        }
    }

    #[test]
    fn first_excited_closed_form() {
        // n_r = 0, l = 1: R = sqrt(8/3) pi^{-1/4} r e^{-r^2/2} at omega = 1
        let c = (8.0f64 / 3.0).sqrt() * std::f64::consts::PI.powf(-0.25);
        for &r in &[0.3, 1.0, 2.0] {
            let expected = c * r * (-0.5 * r * r as f64).exp();
            let got = oscillator_radial(OscillatorNumbers::new(0, 1, 0).unwrap(), 1.0, r).unwrap();
            assert!((got - expected).abs() < 1e-15);
        }
    }

    #[test]
    fn invalid_inputs() {
        assert!(OscillatorNumbers::new(0, 1, 2).is_err());
        let qn = OscillatorNumbers::new(0, 0, 0).unwrap();
        assert!(oscillator_radial(qn, 0.0, 1.0).is_err());
        assert!(oscillator_radial(qn, 1.0, -1.0).is_err());
    }
}
