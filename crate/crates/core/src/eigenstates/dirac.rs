//! Dirac hydrogen states `psi = (f(r) Omega_{jlm}, i g(r) Omega_{jl'm})` with
//! `m = +-1/2`, reduced to four real angular amplitudes `a, b, c, d`:
//!
//! ```text
//! m = +1/2:  ( f a,  f b e^{i phi},   i g c,           i g d e^{i phi} )
//! m = -1/2:  ( f a e^{-i phi},  f b,  i g c e^{-i phi},  i g d )
//! ```
//!
//! For `l > 0` the total angular momentum is `j = l + m`; for `l = 0`, `j = 1/2`.

use std::fmt;
use std::sync::{Arc, OnceLock};

use num_complex::Complex64;

use super::y00;
use crate::coords::SphericalPoint;
use crate::error::{Error, Result};
use crate::quadrature::GaussRule;
use crate::specialfns::harmonic_theta_sc;
use crate::units::ATOMIC;

/// Inner cutoff of the Dirac 1s normalization integral.
pub const DIRAC_R_MIN: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SpinProjection {
    Up,
    Down,
}

impl SpinProjection {
    pub fn sign(self) -> f64 {
        match self {
            SpinProjection::Up => 1.0,
            SpinProjection::Down => -1.0,
        }
    }

    pub fn flipped(self) -> Self {
        match self {
            SpinProjection::Up => SpinProjection::Down,
            SpinProjection::Down => SpinProjection::Up,
        }
    }
}

impl fmt::Display for SpinProjection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpinProjection::Up => f.write_str("+1/2"),
            SpinProjection::Down => f.write_str("-1/2"),
        }
    }
}

/// Real angular amplitudes of a Dirac hydrogen state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AngularComponents {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
}

impl AngularComponents {
    /// `ad - bc`, the combination that sets the azimuthal current.
    pub fn current_factor(&self) -> f64 {
        self.a * self.d - self.b * self.c
    }
}

/// Angular amplitudes for the class `(l, m)`.
///
/// These are the spinor harmonics `Omega_{l +- 1/2, l, m}` with the `e^{+-i phi}`
/// carried by `Y_{l, +-1}` factored out. For `l = 0` this gives
/// `a = Y00, b = 0, c = -Y00 cos(theta), d = -Y00 sin(theta)` (`m = +1/2`) and
/// `a = 0, b = Y00, c = -Y00 sin(theta), d = Y00 cos(theta)` (`m = -1/2`).
pub fn dirac_angular_components(l: u32, m: SpinProjection, theta: f64) -> AngularComponents {
    let (s, c) = theta.sin_cos();
    angular_sc(l, m, s.abs(), c)
}

pub(crate) fn angular_sc(l: u32, m: SpinProjection, st: f64, ct: f64) -> AngularComponents {
    let lf = l as f64;
    let y = |l: u32, m: i32| harmonic_theta_sc(l, m, st, ct);
    match (l, m) {
        (0, SpinProjection::Up) => AngularComponents {
            a: y00(),
            b: 0.0,
            c: -y00() * ct,
            d: -y00() * st,
        },
        (0, SpinProjection::Down) => AngularComponents {
            a: 0.0,
            b: y00(),
            c: -y00() * st,
            d: y00() * ct,
        },
        // j = l + 1/2, lower component has l' = l + 1
        (_, SpinProjection::Up) => AngularComponents {
            a: ((lf + 1.0) / (2.0 * lf + 1.0)).sqrt() * y(l, 0),
            b: (lf / (2.0 * lf + 1.0)).sqrt() * y(l, 1),
            c: -((lf + 1.0) / (2.0 * lf + 3.0)).sqrt() * y(l + 1, 0),
            d: ((lf + 2.0) / (2.0 * lf + 3.0)).sqrt() * y(l + 1, 1),
        },
        // j = l - 1/2, lower component has l' = l - 1
        (_, SpinProjection::Down) => AngularComponents {
            a: -((lf + 1.0) / (2.0 * lf + 1.0)).sqrt() * y(l, -1),
            b: (lf / (2.0 * lf + 1.0)).sqrt() * y(l, 0),
            c: ((lf - 1.0) / (2.0 * lf - 1.0)).sqrt() * y(l - 1, -1),
            d: (lf / (2.0 * lf - 1.0)).sqrt() * y(l - 1, 0),
        },
    }
}

/// `sqrt(1 - alpha^2) - 1`, the power of `r / r0` in the 1s radial pair.
pub fn dirac_ground_exponent() -> f64 {
    let alpha = ATOMIC.alpha;
    let beta = (1.0 - alpha * alpha).sqrt();
    -alpha * alpha / (1.0 + beta)
}

/// `g / f = -(1 - sqrt(1 - alpha^2)) / alpha` for the 1s state, in cancellation-free form.
pub fn dirac_small_ratio() -> f64 {
    let alpha = ATOMIC.alpha;
    let beta = (1.0 - alpha * alpha).sqrt();
    -alpha / (1.0 + beta)
}

fn ground_pair(a0: f64, r: f64) -> (f64, f64) {
    let x = r / ATOMIC.r0;
    let f = a0 * x.powf(dirac_ground_exponent()) * (-x).exp();
    (f, dirac_small_ratio() * f)
}

/// Raw norm `int rho d^3r` of the 1s state with `a0 = 1`, and the analytic estimate
/// of the mass below [`DIRAC_R_MIN`].
fn ground_raw_norm() -> (f64, f64) {
    let t = dirac_small_ratio();
    let power = 2.0 * (1.0 + dirac_ground_exponent());
    // angular parts integrate to 1 each; radial integrand r^{2 beta} e^{-2r}
    let breaks = [DIRAC_R_MIN, 1.0, 3.0, 8.0, 20.0, 45.0];
    let base = GaussRule::legendre(48).expect("static rule");
    let mut total = 0.0;
    for w in breaks.windows(2) {
        total += base
            .mapped(w[0], w[1])
            .integrate(|r| r.powf(power) * (-2.0 * r).exp());
    }
    let truncated = (1.0 + t * t) * DIRAC_R_MIN.powf(power + 1.0) / (power + 1.0);
    ((1.0 + t * t) * total, truncated)
}

fn ground_a0() -> f64 {
    static A0: OnceLock<f64> = OnceLock::new();
    *A0.get_or_init(|| {
        let (raw, truncated) = ground_raw_norm();
        assert!(truncated < 1e-12, "Dirac 1s mass below r_min is {truncated}");
        1.0 / raw.sqrt()
    })
}

/// Normalized 1s radial pair `(f, g)` at `r > 0`.
pub fn dirac_1s_radial(r: f64) -> Result<(f64, f64)> {
    if !(r > 0.0 && r.is_finite()) {
        return Err(Error::domain(format!(
            "Dirac 1s radial functions diverge at r = 0; need finite r > 0, got {r}"
        )));
    }
    Ok(ground_pair(ground_a0(), r))
}

/// Radial pair `(f(r), g(r))` of a Dirac state.
#[derive(Clone)]
pub enum RadialPair {
    /// The 1s pair with amplitude `a0`.
    Ground { a0: f64 },
    /// A caller-supplied pair.
    Custom(Arc<dyn Fn(f64) -> (f64, f64) + Send + Sync>),
}

impl fmt::Debug for RadialPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RadialPair::Ground { a0 } => f.debug_struct("Ground").field("a0", a0).finish(),
            RadialPair::Custom(_) => f.write_str("Custom(..)"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct DiracHydrogenState {
    n: u32,
    l: u32,
    m: SpinProjection,
    radial: RadialPair,
}

impl DiracHydrogenState {
    /// The normalized `1s_{1/2}` state; `a0` is fixed by quadrature.
    pub fn ground(m: SpinProjection) -> Self {
        Self::ground_with_a0(m, ground_a0())
    }

    /// The 1s state with an explicit amplitude, e.g. `a0 = 1` for the raw norm.
    pub fn ground_with_a0(m: SpinProjection, a0: f64) -> Self {
        Self {
            n: 1,
            l: 0,
            m,
            radial: RadialPair::Ground { a0 },
        }
    }

    /// A state whose radial pair is supplied by the caller.
    pub fn with_radial(
        n: u32,
        l: u32,
        m: SpinProjection,
        radial: impl Fn(f64) -> (f64, f64) + Send + Sync + 'static,
    ) -> Result<Self> {
        if n == 0 || l >= n {
            return Err(Error::domain(format!("invalid Dirac indices n={n}, l={l}")));
        }
        Ok(Self {
            n,
            l,
            m,
            radial: RadialPair::Custom(Arc::new(radial)),
        })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn l(&self) -> u32 {
        self.l
    }

    pub fn m(&self) -> SpinProjection {
        self.m
    }

    /// `2 j`: 1 for `l = 0`, otherwise `2 l + 1` (`m = +1/2`) or `2 l - 1` (`m = -1/2`).
    pub fn twice_j(&self) -> u32 {
        match (self.l, self.m) {
            (0, _) => 1,
            (l, SpinProjection::Up) => 2 * l + 1,
            (l, SpinProjection::Down) => 2 * l - 1,
        }
    }

    /// Orbital angular momentum of the lower component.
    pub fn lower_l(&self) -> u32 {
        if 2 * self.l + 1 == self.twice_j() {
            self.l + 1
        } else {
            self.l - 1
        }
    }

    pub fn a0(&self) -> Option<f64> {
        match self.radial {
            RadialPair::Ground { a0 } => Some(a0),
            RadialPair::Custom(_) => None,
        }
    }

    /// Energy `m_e c^2 sqrt(1 - alpha^2)` of the 1s state; `None` for custom pairs.
    pub fn energy(&self) -> Option<f64> {
        match self.radial {
            RadialPair::Ground { .. } => {
                Some(ATOMIC.rest_energy() * (1.0 + dirac_ground_exponent()))
            }
            RadialPair::Custom(_) => None,
        }
    }

    pub fn radial(&self, r: f64) -> Result<(f64, f64)> {
        if !(r > 0.0 && r.is_finite()) {
            return Err(Error::domain(format!("Dirac radial pair requires r > 0, got {r}")));
        }
        Ok(match &self.radial {
            RadialPair::Ground { a0 } => ground_pair(*a0, r),
            RadialPair::Custom(f) => f(r),
        })
    }

    pub fn angular(&self, p: &SphericalPoint) -> AngularComponents {
        let (st, ct) = p.sin_cos_theta();
        angular_sc(self.l, self.m, st, ct)
    }

    /// `rho = f^2 (a^2 + b^2) + g^2 (c^2 + d^2)`.
    pub fn density(&self, p: &SphericalPoint) -> Result<f64> {
        let (f, g) = self.radial(p.r)?;
        let ang = self.angular(p);
        Ok(f * f * (ang.a * ang.a + ang.b * ang.b) + g * g * (ang.c * ang.c + ang.d * ang.d))
    }

    /// The four bispinor components at `p` (`t = 0`).
    pub fn bispinor(&self, p: &SphericalPoint) -> Result<[Complex64; 4]> {
        let (f, g) = self.radial(p.r)?;
        let ang = self.angular(p);
        let i = Complex64::i();
        Ok(match self.m {
            SpinProjection::Up => {
                let e = Complex64::from_polar(1.0, p.phi);
                [
                    Complex64::new(f * ang.a, 0.0),
                    e * (f * ang.b),
                    i * (g * ang.c),
                    i * e * (g * ang.d),
                ]
            }
            SpinProjection::Down => {
                let e = Complex64::from_polar(1.0, -p.phi);
                [
                    e * (f * ang.a),
                    Complex64::new(f * ang.b, 0.0),
                    i * e * (g * ang.c),
                    i * (g * ang.d),
                ]
            }
        })
    }
}

impl fmt::Display for DiracHydrogenState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "dirac(n={}, l={}, j={}/2, m={})",
            self.n,
            self.l,
            self.twice_j(),
            self.m
        )
    }
}
