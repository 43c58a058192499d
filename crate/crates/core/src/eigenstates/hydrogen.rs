use crate::error::{Error, Result};
use crate::specialfns::{factorial, generalized_laguerre, generalized_laguerre_deriv};

/// Normalized nonrelativistic radial function `R_nl(r)`, atomic units.
pub fn hydrogen_radial(n: u32, l: u32, r: f64) -> Result<f64> {
    if n == 0 || l >= n {
        return Err(Error::domain(format!("invalid hydrogen radial indices n={n}, l={l}")));
    }
    if !(r >= 0.0 && r.is_finite()) {
        return Err(Error::domain(format!("radius must be finite and nonnegative, got {r}")));
    }
    Ok(radial_with_deriv(n, l, r).0)
}

fn norm(n: u32, l: u32) -> f64 {
    let nf = n as f64;
    ((2.0 / nf).powi(3) * factorial(n - l - 1) / (2.0 * nf * factorial(n + l))).sqrt()
}

/// `(R_nl(r), dR_nl/dr)`.
pub(crate) fn radial_with_deriv(n: u32, l: u32, r: f64) -> (f64, f64) {
    let nf = n as f64;
    let x = 2.0 * r / nf;
    let k = n - l - 1;
    let a = (2 * l + 1) as f64;
    let lag = generalized_laguerre(k, a, x);
    let dlag = generalized_laguerre_deriv(k, a, x);
    let envelope = norm(n, l) * (-0.5 * x).exp();
    let xl = x.powi(l as i32);
    let value = envelope * xl * lag;
    let mut dx = xl * (dlag - 0.5 * lag);
    if l > 0 {
        dx += l as f64 * x.powi(l as i32 - 1) * lag;
    }
    (value, envelope * dx * 2.0 / nf)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn radial_examples() {
        assert!((hydrogen_radial(1, 0, 1.0).unwrap() - 0.735_758_882_342_885).abs() < 1e-15);
        assert_eq!(hydrogen_radial(2, 0, 2.0).unwrap(), 0.0);
        assert_eq!(hydrogen_radial(1, 0, 0.0).unwrap(), 2.0);
        assert!(hydrogen_radial(2, 2, 1.0).is_err());
        assert!(hydrogen_radial(1, 0, -1.0).is_err());
    }

    #[test]
    fn known_closed_forms() {
        for &r in &[0.1, 1.0, 3.7] {
            let r21 = r * (-r / 2.0f64).exp() / 24f64.sqrt();
            assert!((hydrogen_radial(2, 1, r).unwrap() - r21).abs() < 1e-15);
            let r32 = 4.0 / (81.0 * 30f64.sqrt()) * r * r * (-r / 3.0f64).exp();
            assert!((hydrogen_radial(3, 2, r).unwrap() - r32).abs() < 1e-15);
        }
    }

    #[test]
    fn derivative_matches_finite_difference() {
        let h = 1e-6;
        for n in 1..=4u32 {
            for l in 0..n {
                for &r in &[0.3, 1.9, 6.0] {
                    let fd = (radial_with_deriv(n, l, r + h).0 - radial_with_deriv(n, l, r - h).0)
                        / (2.0 * h);
                    let an = radial_with_deriv(n, l, r).1;
                    assert!((fd - an).abs() < 1e-8, "n={n} l={l} r={r}");
                }
            }
        }
    }
}
