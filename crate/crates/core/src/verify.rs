//! Named self-checks behind `qflow verify`.
//!
//! Each check samples points from a fixed low-discrepancy sequence, so runs
//! are reproducible without a random number generator.

use std::f64::consts::{FRAC_PI_2, PI, TAU};
use std::fmt;
use std::str::FromStr;

use nalgebra::Vector3;

use crate::analysis::{
    compare_dirac_schrodinger, divergence, integrate_density, mean_gordon_angular_momentum, normalization,
    streamline, QuadratureSpec,
};
use crate::coords::{SphericalPoint, SphericalVector};
use crate::currents::{
    dirac_velocity, reference_velocity, schrodinger_current_j1, total_current, velocity, ReferenceFlow, SpinSign,
    SpinVector,
};
use crate::eigenstates::{
    builtin_states, cartesian_oscillator_state, dirac_angular_components, y00, DiracHydrogenState,
    SchrodingerState, SpinProjection, DIRAC_R_MIN,
};
use crate::error::{Error, Result};
use crate::specialfns::{assoc_legendre, spherical_harmonic};
use crate::units::{constants, convert_velocity, UnitSystem, ATOMIC};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Units,
    Specialfns,
    Eigenstates,
    Currents,
    Analysis,
    All,
}

impl Suite {
    const EACH: [Suite; 5] = [
        Suite::Units,
        Suite::Specialfns,
        Suite::Eigenstates,
        Suite::Currents,
        Suite::Analysis,
    ];
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.to_ascii_lowercase().as_str() {
            "units" => Suite::Units,
            "specialfns" => Suite::Specialfns,
            "eigenstates" => Suite::Eigenstates,
            "currents" => Suite::Currents,
            "analysis" => Suite::Analysis,
            "all" => Suite::All,
            _ => return Err(Error::domain(format!("unknown suite {s:?}"))),
        })
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(match self {
            Suite::Units => "units",
            Suite::Specialfns => "specialfns",
            Suite::Eigenstates => "eigenstates",
            Suite::Currents => "currents",
            Suite::Analysis => "analysis",
            Suite::All => "all",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CheckResult {
    pub suite: Suite,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{status}  {:<12} {:<58} {}", self.suite, self.name, self.detail)
    }
}

/// Runs every check of `suite` (or of all suites).
pub fn run_suite(suite: Suite) -> Vec<CheckResult> {
    if suite == Suite::All {
        return Suite::EACH.iter().flat_map(|&s| run_suite(s)).collect();
    }
    let checks: &[(&'static str, fn() -> Result<(bool, String)>)] = match suite {
        Suite::Units => &UNIT_CHECKS,
        Suite::Specialfns => &SPECIALFN_CHECKS,
        Suite::Eigenstates => &EIGENSTATE_CHECKS,
        Suite::Currents => &CURRENT_CHECKS,
        Suite::Analysis => &ANALYSIS_CHECKS,
        Suite::All => unreachable!(),
    };
    checks
        .iter()
        .map(|&(name, check)| {
            let (passed, detail) = check().unwrap_or_else(|e| (false, format!("error: {e}")));
            CheckResult {
                suite,
                name,
                passed,
                detail,
            }
        })
        .collect()
}

/// Quasi-random points in `[r_lo, r_hi] x [0.15, pi - 0.15] x [0, 2 pi)`.
pub fn sample_points(n: usize, r_lo: f64, r_hi: f64) -> Vec<SphericalPoint> {
    // additive recurrence on the plastic-number lattice
    const G: f64 = 1.220_744_084_605_759_5;
    let a = [1.0 / G, 1.0 / (G * G), 1.0 / (G * G * G)];
    (1..=n)
        .map(|i| {
            let u: Vec<f64> = a.iter().map(|ak| (0.5 + ak * i as f64).fract()).collect();
            SphericalPoint::new(
                r_lo + (r_hi - r_lo) * u[0],
                0.15 + (PI - 0.3) * u[1],
                TAU * u[2],
            )
            .expect("sample point in range")
        })
        .collect()
}

fn rel(a: f64, b: f64) -> f64 {
    if a == b {
        0.0
    } else {
        (a - b).abs() / a.abs().max(b.abs())
    }
}

fn vec_rel(a: &SphericalVector, b: &SphericalVector) -> f64 {
    let d = (*a - *b).norm();
    if d == 0.0 {
        0.0
    } else {
        d / a.norm().max(b.norm())
    }
}

fn report(worst: f64, tol: f64) -> (bool, String) {
    (worst < tol, format!("max error {worst:.3e} (tol {tol:.0e})"))
}

type Check = (&'static str, fn() -> Result<(bool, String)>);

const UNIT_CHECKS: [Check; 3] = [
    ("alpha c m_e r0 = hbar in both systems", || {
        let worst = [UnitSystem::Atomic, UnitSystem::SI]
            .iter()
            .map(|&s| {
                let k = constants(s);
                rel(k.alpha * k.c * k.m_e * k.r0, k.hbar)
            })
            .fold(0.0, f64::max);
        Ok(report(worst, 1e-12))
    }),
    ("velocity round trip atomic <-> SI", || {
        let worst = [-3.5, 1e-3, 1.0, 137.0]
            .iter()
            .map(|&x| {
                let y = convert_velocity(convert_velocity(x, UnitSystem::Atomic, UnitSystem::SI), UnitSystem::SI, UnitSystem::Atomic);
                rel(x, y)
            })
            .fold(0.0, f64::max);
        Ok(report(worst, 1e-14))
    }),
    ("Bohr radius and fine-structure constant", || {
        let si = constants(UnitSystem::SI);
        let ok = (si.r0 - 5.3e-11).abs() < 1e-12 && rel(si.alpha, 7.29735e-3) < 1e-6 && ATOMIC.alpha * ATOMIC.c == 1.0;
        Ok((ok, format!("r0 = {:.6e} m, alpha = {:.9e}", si.r0, si.alpha)))
    }),
];

const SPECIALFN_CHECKS: [Check; 3] = [
    ("spherical harmonics orthonormal for l <= 5", || {
        let gl = crate::quadrature::GaussRule::legendre(24)?;
        let n_phi = 24;
        let mut idx = Vec::new();
        for l in 0..=5u32 {
            for m in -(l as i32)..=l as i32 {
                idx.push((l, m));
            }
        }
        let mut worst: f64 = 0.0;
        for (i, &(l1, m1)) in idx.iter().enumerate() {
            for &(l2, m2) in &idx[i..] {
                let mut acc = num_complex::Complex64::new(0.0, 0.0);
                for (&x, &w) in gl.nodes.iter().zip(&gl.weights) {
                    for k in 0..n_phi {
                        let phi = TAU * k as f64 / n_phi as f64;
                        let y1 = spherical_harmonic(l1, m1, x.acos(), phi)?;
                        let y2 = spherical_harmonic(l2, m2, x.acos(), phi)?;
                        acc += y1 * y2.conj() * (w * TAU / n_phi as f64);
                    }
                }
                let target = if (l1, m1) == (l2, m2) { 1.0 } else { 0.0 };
                worst = worst.max((acc - target).norm());
            }
        }
        Ok(report(worst, 1e-10))
    }),
    ("conjugation symmetry Y_{l,-m} = (-1)^m Y_lm*", || {
        let mut worst: f64 = 0.0;
        for p in sample_points(100, 1.0, 1.0) {
            for l in 0..=5u32 {
                for m in 1..=l as i32 {
                    let a = spherical_harmonic(l, -m, p.theta, p.phi)?;
                    let b = spherical_harmonic(l, m, p.theta, p.phi)?.conj() * if m % 2 == 0 { 1.0 } else { -1.0 };
                    if b.norm() > 1e-8 {
                        worst = worst.max((a - b).norm() / b.norm());
                    }
                }
            }
        }
        Ok(report(worst, 1e-12))
    }),
    ("Legendre closed forms", || {
        let checks = [
            (assoc_legendre(0, 0, 0.3)?, 1.0),
            (assoc_legendre(1, 0, 0.5)?, 0.5),
            (assoc_legendre(1, 1, 0.0)?, -1.0),
            (assoc_legendre(2, 1, 0.6)?, -3.0 * 0.6 * 0.8),
            (assoc_legendre(3, 3, 0.6)?, -15.0 * 0.8f64.powi(3)),
        ];
        let worst = checks.iter().map(|&(a, b)| (a - b).abs()).fold(0.0, f64::max);
        Ok(report(worst, 1e-14))
    }),
];

const EIGENSTATE_CHECKS: [Check; 4] = [
    ("built-in states normalized", || {
        let mut worst: f64 = 0.0;
        for s in builtin_states() {
            worst = worst.max((normalization(&s)? - 1.0).abs());
        }
        Ok(report(worst, 1e-8))
    }),
    ("density gradients match finite differences", || {
        let h = 1e-5;
        let mut worst: f64 = 0.0;
        for s in builtin_states() {
            let scale = s.length_scale();
            for p in sample_points(12, 0.3 * scale, 3.0 * scale) {
                let g = s.grad_density(&p)?.to_cartesian(&p);
                let x = p.to_cartesian();
                let rho_at = |d: Vector3<f64>| s.density(&SphericalPoint::from_cartesian(&(x + d)));
                let fd = Vector3::from_fn(|i, _| {
                    let e = Vector3::ith(i, h);
                    (rho_at(e) - rho_at(-e)) / (2.0 * h)
                });
                let size = g.norm().max(fd.norm());
                if size > 1e-6 * s.density(&p).max(1e-12) {
                    worst = worst.max((g - fd).norm() / size);
                }
            }
        }
        Ok(report(worst, 1e-6))
    }),
    ("Dirac 1s: normalized and spherically symmetric", || {
        let mut worst: f64 = 0.0;
        for m in [SpinProjection::Up, SpinProjection::Down] {
            let d = DiracHydrogenState::ground(m);
            let spec = QuadratureSpec::new(
                crate::analysis::RadialRule::MappedLegendre { r_max: 45.0 },
                240,
                8,
                8,
                DIRAC_R_MIN,
            )?;
            worst = worst.max((integrate_density(|p| d.density(p), &spec)? - 1.0).abs());
            for p in sample_points(20, 0.1, 4.0) {
                let axis = SphericalPoint::new(p.r, FRAC_PI_2, 0.0)?;
                worst = worst.max(rel(d.density(&p)?, d.density(&axis)?));
            }
        }
        Ok(report(worst, 1e-8))
    }),
    ("l = 0 angular parts: a^2 + b^2 = c^2 + d^2 = Y00^2", || {
        let y2 = y00() * y00();
        let mut worst: f64 = 0.0;
        for m in [SpinProjection::Up, SpinProjection::Down] {
            for k in 0..=32 {
                let c = dirac_angular_components(0, m, PI * k as f64 / 32.0);
                worst = worst.max((c.a * c.a + c.b * c.b - y2).abs()).max((c.c * c.c + c.d * c.d - y2).abs());
            }
        }
        Ok(report(worst, 1e-15))
    }),
];

const CURRENT_CHECKS: [Check; 8] = [
    ("1s velocity = alpha c sin(theta) u_phi", || {
        let s = SchrodingerState::hydrogen(1, 0, 0)?;
        let mut worst: f64 = 0.0;
        for p in sample_points(200, 0.05, 8.0) {
            let exact = SphericalVector::azimuthal(ATOMIC.alpha * ATOMIC.c * p.theta.sin());
            worst = worst.max(vec_rel(&velocity(&s, &SpinVector::up(), &p)?, &exact));
        }
        Ok(report(worst, 1e-10))
    }),
    ("hydrogen velocities match closed forms", || {
        let mut worst: f64 = 0.0;
        for label in ReferenceFlow::hydrogen_labels() {
            let (s, spin) = label.state_and_spin()?;
            for p in sample_points(100, 0.05, 12.0) {
                if (p.r - 2.0).abs() < 1e-3 {
                    continue;
                }
                worst = worst.max(vec_rel(&velocity(&s, &spin, &p)?, &reference_velocity(label, &p)?));
            }
        }
        Ok(report(worst, 1e-10))
    }),
    ("Dirac 1s velocity = Schrodinger + Gordon velocity", || {
        let s = SchrodingerState::hydrogen(1, 0, 0)?;
        let mut worst: f64 = 0.0;
        for m in [SpinProjection::Up, SpinProjection::Down] {
            let d = DiracHydrogenState::ground(m);
            let spin = SpinVector::from_projection(m);
            for p in sample_points(200, 0.05, 8.0) {
                worst = worst.max(vec_rel(&dirac_velocity(&d, &p)?, &velocity(&s, &spin, &p)?));
            }
        }
        Ok(report(worst, 1e-12))
    }),
    ("classical current vanishes for m = 0", || {
        let mut nonzero = 0;
        let states = builtin_states();
        let zero_m: Vec<_> = states.iter().filter(|s| s.magnetic_number() == 0).collect();
        for s in &zero_m {
            for p in sample_points(50, 0.1, 4.0 * s.length_scale()) {
                if !schrodinger_current_j1(s, &p)?.is_zero() {
                    nonzero += 1;
                }
            }
        }
        Ok((nonzero == 0, format!("{} states, {nonzero} nonzero samples", zero_m.len())))
    }),
    ("spin flip with m -> -m negates the flow", || {
        let mut worst: f64 = 0.0;
        let pairs = [
            (SchrodingerState::hydrogen(2, 1, 1)?, SchrodingerState::hydrogen(2, 1, -1)?),
            (SchrodingerState::hydrogen(3, 2, 2)?, SchrodingerState::hydrogen(3, 2, -2)?),
        ];
        for p in sample_points(50, 0.2, 10.0) {
            for (a, b) in &pairs {
                let va = velocity(a, &SpinVector::up(), &p)?;
                let vb = velocity(b, &SpinVector::down(), &p)?;
                worst = worst.max(vec_rel(&va, &-vb));
            }
            let du = dirac_velocity(&DiracHydrogenState::ground(SpinProjection::Up), &p)?;
            let dd = dirac_velocity(&DiracHydrogenState::ground(SpinProjection::Down), &p)?;
            worst = worst.max(vec_rel(&du, &-dd));
        }
        Ok(report(worst, 1e-12))
    }),
    ("oscillator ground: circular flow of speed omega r sin(theta)", || {
        let mut worst: f64 = 0.0;
        for omega in [0.5, 1.0, 2.0] {
            let s = SchrodingerState::oscillator(0, 0, 0, omega)?;
            for p in sample_points(100, 0.05, 4.0) {
                let v = velocity(&s, &SpinVector::up(), &p)?;
                if !v.is_circular() {
                    return Ok((false, format!("non-circular at {p}")));
                }
                worst = worst.max(rel(v.phi.abs(), omega * p.r * p.theta.sin()));
            }
        }
        Ok(report(worst, 1e-10))
    }),
    ("oscillator ground: spin-up flow along -u_phi", || {
        let mut worst: f64 = 0.0;
        let mut sign = 0.0;
        for omega in [0.5, 1.0, 2.0] {
            let s = SchrodingerState::oscillator(0, 0, 0, omega)?;
            let label = ReferenceFlow::OscGround {
                spin: SpinSign::Plus,
                omega,
            };
            for p in sample_points(100, 0.05, 4.0) {
                let v = velocity(&s, &SpinVector::up(), &p)?;
                sign = v.phi.signum();
                worst = worst.max(vec_rel(&v, &reference_velocity(label, &p)?));
            }
        }
        let (ok, detail) = report(worst, 1e-10);
        Ok((ok, format!("{detail}; computed flow is along {}u_phi", if sign > 0.0 { "+" } else { "-" })))
    }),
    ("excited oscillator state has non-circular flow", || {
        let s = cartesian_oscillator_state([1, 0, 0], 1.0)?;
        let mut worst: f64 = 0.0;
        for p in sample_points(100, 0.2, 3.0) {
            let j = total_current(&s, &SpinVector::up(), &p)?;
            worst = worst.max(j.r.abs().max(j.theta.abs()) / j.norm().max(f64::MIN_POSITIVE));
        }
        Ok((worst > 1e-3, format!("largest non-azimuthal fraction {worst:.3e}")))
    }),
];

const ANALYSIS_CHECKS: [Check; 6] = [
    ("quadrature converged under refinement", || {
        let mut worst: f64 = 0.0;
        for s in builtin_states() {
            let spec = QuadratureSpec::for_state(&s)?;
            let a = integrate_density(|p| Ok(s.density(p)), &spec)?;
            let b = integrate_density(|p| Ok(s.density(p)), &spec.refined(2))?;
            worst = worst.max((a - b).abs());
        }
        Ok(report(worst, 1e-9))
    }),
    ("divergence stencil is second order", || {
        let f = |q: &SphericalPoint| {
            let x = q.to_cartesian();
            Ok(SphericalVector::from_cartesian(&Vector3::new(x.x.powi(3), x.y * x.z * x.z, 0.0), q))
        };
        let p = SphericalPoint::new(1.2, 0.8, 0.4)?;
        let x = p.to_cartesian();
        let exact = 3.0 * x.x * x.x + x.z * x.z;
        let e1 = (divergence(f, &p, 1e-2)? - exact).abs();
        let e2 = (divergence(f, &p, 5e-3)? - exact).abs();
        let ratio = e1 / e2;
        Ok(((3.5..=4.5).contains(&ratio), format!("error ratio {ratio:.3}")))
    }),
    ("continuity: div J = 0 for built-in states", || {
        let mut worst: f64 = 0.0;
        for s in builtin_states() {
            let scale = s.length_scale();
            for spin in [SpinVector::up(), SpinVector::down()] {
                for p in sample_points(10, 0.3 * scale, 3.0 * scale) {
                    worst = worst.max(divergence(|q| total_current(&s, &spin, q), &p, 1e-4)?.abs());
                }
            }
        }
        Ok(report(worst, 1e-6))
    }),
    ("mean Gordon angular momentum = 2 s", || {
        let mut worst: f64 = 0.0;
        let tilted = SpinVector::along(Vector3::new(1.0, -2.0, 0.5))?;
        for s in builtin_states() {
            let spec = QuadratureSpec::for_state(&s)?;
            for spin in [SpinVector::up(), tilted] {
                let l = mean_gordon_angular_momentum(&s, &spin, &spec)?;
                worst = worst.max((l - 2.0 * spin.cartesian()).norm());
            }
        }
        Ok(report(worst, 1e-8))
    }),
    ("1s streamline closes after one period", || {
        let s = SchrodingerState::hydrogen(1, 0, 0)?;
        let start = SphericalPoint::new(ATOMIC.r0, FRAC_PI_2, 0.0)?;
        let n = 6000;
        let period = TAU * ATOMIC.r0 / (ATOMIC.alpha * ATOMIC.c);
        let traj = streamline(|p| velocity(&s, &SpinVector::up(), p), start, period / n as f64, n)?;
        let d = traj.return_distance();
        let drift = traj.radial_drift().max(traj.polar_drift());
        Ok((d < 1e-6 && drift < 1e-6, format!("return distance {d:.3e}, drift {drift:.3e}")))
    }),
    ("Dirac / Schrodinger comparison report", || {
        let rep = compare_dirac_schrodinger(&sample_points(100, 0.05, 8.0))?;
        let ok = rep.n_failed == 0 && rep.max_rel_deviation < 1e-12 && rep.max_classical_deviation > 0.0;
        Ok((ok, format!("max relative deviation {:.3e}, {} failed", rep.max_rel_deviation, rep.n_failed)))
    }),
];
