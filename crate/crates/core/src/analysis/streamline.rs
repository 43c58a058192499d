use std::f64::consts::TAU;
use std::fmt;

use nalgebra::Vector3;

use crate::coords::{SphericalPoint, SphericalVector};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrajectorySample {
    pub t: f64,
    pub point: SphericalPoint,
}

impl TrajectorySample {
    pub fn cartesian(&self) -> Vector3<f64> {
        self.point.to_cartesian()
    }
}

/// Sampled flow line of a velocity field.
#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory {
    pub samples: Vec<TrajectorySample>,
    pub dt: f64,
    pub label: String,
}

impl Trajectory {
    pub fn start(&self) -> &TrajectorySample {
        &self.samples[0]
    }

    pub fn end(&self) -> &TrajectorySample {
        self.samples.last().expect("a trajectory has at least its start")
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    /// Azimuth swept since the start, unwrapped, one entry per sample.
    pub fn unwrapped_azimuth(&self) -> Vec<f64> {
        let mut out = Vec::with_capacity(self.samples.len());
        let mut acc = 0.0;
        let mut prev = self.samples[0].point.phi;
        for s in &self.samples {
            let mut d = s.point.phi - prev;
            if d > TAU / 2.0 {
                d -= TAU;
            } else if d < -TAU / 2.0 {
                d += TAU;
            }
            acc += d;
            prev = s.point.phi;
            out.push(acc);
        }
        out
    }

    /// Time at which the path first completes a full turn about the z axis,
    /// linearly interpolated between samples.
    pub fn estimate_period(&self) -> Option<f64> {
        let swept = self.unwrapped_azimuth();
        for i in 1..swept.len() {
            let (a, b) = (swept[i - 1].abs(), swept[i].abs());
            if a < TAU && b >= TAU {
                let (t0, t1) = (self.samples[i - 1].t, self.samples[i].t);
                return Some(t0 + (TAU - a) / (b - a) * (t1 - t0));
            }
        }
        None
    }

    /// Largest `|r(t) - r(0)| / r(0)`.
    pub fn radial_drift(&self) -> f64 {
        let r0 = self.start().point.r;
        self.samples.iter().map(|s| (s.point.r - r0).abs() / r0).fold(0.0, f64::max)
    }

    /// Largest `|theta(t) - theta(0)| / theta(0)`.
    pub fn polar_drift(&self) -> f64 {
        let t0 = self.start().point.theta;
        if t0 == 0.0 {
            return self.samples.iter().map(|s| s.point.theta).fold(0.0, f64::max);
        }
        self.samples.iter().map(|s| (s.point.theta - t0).abs() / t0).fold(0.0, f64::max)
    }

    /// Euclidean distance between the final sample and the start.
    pub fn return_distance(&self) -> f64 {
        (self.end().cartesian() - self.start().cartesian()).norm()
    }
}

/// A streamline that stopped early; `partial` holds every sample computed before `cause`.
#[derive(Debug)]
pub struct StreamlineError {
    pub partial: Trajectory,
    pub cause: Error,
}

impl fmt::Display for StreamlineError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "streamline stopped after {} samples (t = {}): {}",
            self.partial.samples.len(),
            self.partial.end().t,
            self.cause
        )
    }
}

impl std::error::Error for StreamlineError {
    fn source(&self) -> Option<&(dyn std::error::Error + 'static)> {
        Some(&self.cause)
    }
}

impl From<StreamlineError> for Error {
    fn from(e: StreamlineError) -> Self {
        e.cause
    }
}

/// Fixed-step RK4 integration of `dx/dt = v(x)` in Cartesian coordinates.
/// The returned trajectory has `n_steps + 1` samples.
pub fn streamline(
    vel: impl Fn(&SphericalPoint) -> Result<SphericalVector>,
    start: SphericalPoint,
    dt: f64,
    n_steps: usize,
) -> std::result::Result<Trajectory, StreamlineError> {
    let mut traj = Trajectory {
        samples: vec![TrajectorySample { t: 0.0, point: start }],
        dt,
        label: String::new(),
    };
    if !(dt > 0.0 && dt.is_finite()) {
        return Err(StreamlineError {
            partial: traj,
            cause: Error::domain(format!("time step must be positive, got {dt}")),
        });
    }
    let eval = |x: &Vector3<f64>| -> Result<Vector3<f64>> {
        let p = SphericalPoint::from_cartesian(x);
        let v = vel(&p)?;
        if !v.is_finite() {
            return Err(Error::Numeric(format!("non-finite velocity at {p}")));
        }
        Ok(v.to_cartesian(&p))
    };
    let mut x = start.to_cartesian();
    for step in 1..=n_steps {
        let k = (|| -> Result<Vector3<f64>> {
            let k1 = eval(&x)?;
            let k2 = eval(&(x + k1 * (0.5 * dt)))?;
            let k3 = eval(&(x + k2 * (0.5 * dt)))?;
            let k4 = eval(&(x + k3 * dt))?;
            Ok((k1 + k2 * 2.0 + k3 * 2.0 + k4) / 6.0)
        })();
        match k {
            Ok(k) => x += k * dt,
            Err(cause) => return Err(StreamlineError { partial: traj, cause }),
        }
        traj.samples.push(TrajectorySample {
            t: step as f64 * dt,
            point: SphericalPoint::from_cartesian(&x),
        });
    }
    Ok(traj)
}
