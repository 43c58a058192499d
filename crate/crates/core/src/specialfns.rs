//! Associated Legendre functions, spherical harmonics, generalized Laguerre
//! polynomials and Hermite functions.
//!
//! Legendre functions carry the Condon–Shortley phase `(-1)^m`, so
//! `P_1^1(x) = -sqrt(1 - x^2)` and `Y_{l,-m} = (-1)^m conj(Y_{lm})`.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Index pair `(l, m)` of a spherical harmonic, `|m| <= l`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct HarmonicIndex {
    l: u32,
    m: i32,
}

impl HarmonicIndex {
    pub fn new(l: u32, m: i32) -> Result<Self> {
        if m.unsigned_abs() > l {
            return Err(Error::domain(format!("harmonic index |m| = {} > l = {l}", m.abs())));
        }
        Ok(Self { l, m })
    }

    pub fn l(&self) -> u32 {
        self.l
    }

    pub fn m(&self) -> i32 {
        self.m
    }
}

/// `P_l^m(x)` with the Condon–Shortley phase, for `0 <= m <= l` and `|x| <= 1`.
pub fn assoc_legendre(l: u32, m: u32, x: f64) -> Result<f64> {
    if m > l {
        return Err(Error::domain(format!("assoc_legendre requires m <= l, got l={l}, m={m}")));
    }
    if !(-1.0..=1.0).contains(&x) {
        return Err(Error::domain(format!("assoc_legendre requires |x| <= 1, got {x}")));
    }
    let s = ((1.0 - x) * (1.0 + x)).sqrt();
    Ok(legendre_sc(l, m, x, s))
}

/// Legendre recurrence with `x = cos(theta)` and `s = sin(theta) >= 0` supplied
/// separately so that angles near the poles keep full relative precision.
/// Returns 0 for `m > l`.
pub(crate) fn legendre_sc(l: u32, m: u32, x: f64, s: f64) -> f64 {
    if m > l {
        return 0.0;
    }
    // P_m^m = (-1)^m (2m-1)!! s^m
    let mut pmm = 1.0;
    for k in 1..=m {
        pmm *= -((2 * k - 1) as f64) * s;
    }
    if l == m {
        return pmm;
    }
    let mut pm1 = x * (2 * m + 1) as f64 * pmm;
    if l == m + 1 {
        return pm1;
    }
    let mut pm2 = pmm;
    for k in (m + 2)..=l {
        let pk = (x * (2 * k - 1) as f64 * pm1 - (k + m - 1) as f64 * pm2) / (k - m) as f64;
        pm2 = pm1;
        pm1 = pk;
    }
    pm1
}

/// `d/dtheta P_l^m(cos theta)` for `m >= 0`.
pub(crate) fn legendre_dtheta_sc(l: u32, m: u32, x: f64, s: f64) -> f64 {
    if m > l {
        return 0.0;
    }
    if m == 0 {
        return legendre_sc(l, 1, x, s);
    }
    let lower = ((l + m) * (l - m + 1)) as f64 * legendre_sc(l, m - 1, x, s);
    -0.5 * (lower - legendre_sc(l, m + 1, x, s))
}

/// `sqrt((2l+1)/(4 pi) (l-m)!/(l+m)!)` for `m >= 0`.
fn harmonic_norm(l: u32, m: u32) -> f64 {
    let mut ratio = 1.0;
    for k in (l - m + 1)..=(l + m) {
        ratio /= k as f64;
    }
    ((2 * l + 1) as f64 / (4.0 * PI) * ratio).sqrt()
}

fn cs_sign(m: i32) -> f64 {
    if m < 0 && m % 2 != 0 {
        -1.0
    } else {
        1.0
    }
}

/// Real polar factor `Y_lm(theta, 0)`, so that `Y_lm(theta, phi) = Y_lm(theta, 0) e^{i m phi}`.
/// Takes `(sin theta, cos theta)`; returns 0 when `|m| > l`.
pub fn harmonic_theta_sc(l: u32, m: i32, sin_t: f64, cos_t: f64) -> f64 {
    let am = m.unsigned_abs();
    if am > l {
        return 0.0;
    }
    cs_sign(m) * harmonic_norm(l, am) * legendre_sc(l, am, cos_t, sin_t)
}

/// `d/dtheta Y_lm(theta, 0)`.
pub fn harmonic_theta_deriv_sc(l: u32, m: i32, sin_t: f64, cos_t: f64) -> f64 {
    let am = m.unsigned_abs();
    if am > l {
        return 0.0;
    }
    cs_sign(m) * harmonic_norm(l, am) * legendre_dtheta_sc(l, am, cos_t, sin_t)
}

/// Orthonormal `Y_lm(theta, phi)` with the Condon–Shortley phase.
pub fn spherical_harmonic(l: u32, m: i32, theta: f64, phi: f64) -> Result<Complex64> {
    let idx = HarmonicIndex::new(l, m)?;
    let (s, c) = theta.sin_cos();
    let magnitude = harmonic_theta_sc(idx.l, idx.m, s.abs(), c);
    Ok(Complex64::from_polar(1.0, m as f64 * phi) * magnitude)
}

/// Generalized Laguerre polynomial `L_n^a(x)` by the three-term recurrence.
pub fn generalized_laguerre(n: u32, a: f64, x: f64) -> f64 {
    if n == 0 {
        return 1.0;
    }
    let mut prev = 1.0;
    let mut cur = 1.0 + a - x;
    for k in 1..n {
        let kf = k as f64;
        let next = ((2.0 * kf + 1.0 + a - x) * cur - (kf + a) * prev) / (kf + 1.0);
        prev = cur;
        cur = next;
    }
    cur
}

/// `d/dx L_n^a(x) = -L_{n-1}^{a+1}(x)`.
pub fn generalized_laguerre_deriv(n: u32, a: f64, x: f64) -> f64 {
    if n == 0 {
        0.0
    } else {
        -generalized_laguerre(n - 1, a + 1.0, x)
    }
}

/// Normalized Hermite functions `phi_0 .. phi_{n_max}` at `y`,
/// `phi_n(y) = H_n(y) e^{-y^2/2} / sqrt(2^n n! sqrt(pi))`.
pub fn hermite_functions(n_max: u32, y: f64) -> Vec<f64> {
    let mut out = Vec::with_capacity(n_max as usize + 1);
    let phi0 = PI.powf(-0.25) * (-0.5 * y * y).exp();
    out.push(phi0);
    if n_max == 0 {
        return out;
    }
    out.push(2f64.sqrt() * y * phi0);
    for k in 1..n_max as usize {
        let kf = k as f64;
        let next = (2.0 / (kf + 1.0)).sqrt() * y * out[k] - (kf / (kf + 1.0)).sqrt() * out[k - 1];
        out.push(next);
    }
    out
}

/// Value and derivative of the normalized Hermite function `phi_n(y)`.
pub fn hermite_function_with_deriv(n: u32, y: f64) -> (f64, f64) {
    let phis = hermite_functions(n + 1, y);
    let k = n as usize;
    let nf = n as f64;
    let lower = if n == 0 { 0.0 } else { (nf / 2.0).sqrt() * phis[k - 1] };
    let deriv = lower - ((nf + 1.0) / 2.0).sqrt() * phis[k + 1];
    (phis[k], deriv)
}

/// `Gamma(n + 1/2)` for nonnegative integer `n`.
pub fn gamma_half_integer(n: u32) -> f64 {
    let mut g = PI.sqrt();
    for k in 0..n {
        g *= k as f64 + 0.5;
    }
    g
}

/// `n!` as a float.
pub fn factorial(n: u32) -> f64 {
    (1..=n).fold(1.0, |acc, k| acc * k as f64)
}
