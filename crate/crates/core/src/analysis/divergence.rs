use crate::coords::{SphericalPoint, SphericalVector};
use crate::error::{Error, Result};

/// Central-difference divergence of a field given in the local spherical basis:
///
/// ```text
/// div F = (1/r^2) d_r(r^2 F_r) + (1/(r sin t)) d_t(sin t F_t) + (1/(r sin t)) d_p F_p
/// ```
///
/// The angular steps are `h / r` and `h / (r sin theta)` so every stencil
/// spans a physical distance of about `2h`.
pub fn divergence(
    field: impl Fn(&SphericalPoint) -> Result<SphericalVector>,
    p: &SphericalPoint,
    h: f64,
) -> Result<f64> {
    if !(h > 0.0 && h.is_finite()) {
        return Err(Error::domain(format!("step must be positive, got {h}")));
    }
    if !(p.r > h) {
        return Err(Error::domain(format!("divergence needs r > h, got r = {} at h = {h}", p.r)));
    }
    let dt = h / p.r;
    if p.theta - dt <= 0.0 || p.theta + dt >= std::f64::consts::PI {
        return Err(Error::domain(format!("{p} is too close to the polar axis for h = {h}")));
    }
    let st = p.theta.sin();
    let dp = h / (p.r * st);
    let at = |r: f64, theta: f64, phi: f64| SphericalPoint::new(r, theta, phi);

    let r_plus = p.r + h;
    let r_minus = p.r - h;
    let radial = (r_plus * r_plus * field(&at(r_plus, p.theta, p.phi)?)?.r
        - r_minus * r_minus * field(&at(r_minus, p.theta, p.phi)?)?.r)
        / (2.0 * h * p.r * p.r);

    let t_plus = p.theta + dt;
    let t_minus = p.theta - dt;
    let polar = (t_plus.sin() * field(&at(p.r, t_plus, p.phi)?)?.theta
        - t_minus.sin() * field(&at(p.r, t_minus, p.phi)?)?.theta)
        / (2.0 * dt * p.r * st);

    let azimuthal = (field(&at(p.r, p.theta, p.phi + dp)?)?.phi - field(&at(p.r, p.theta, p.phi - dp)?)?.phi)
        / (2.0 * dp * p.r * st);

    Ok(radial + polar + azimuthal)
}
