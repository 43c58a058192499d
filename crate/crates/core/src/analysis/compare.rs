use crate::coords::{SphericalPoint, SphericalVector};
use crate::currents::{classical_velocity, dirac_velocity, velocity, SpinVector};
use crate::eigenstates::{DiracHydrogenState, SchrodingerState, SpinProjection};
use crate::error::Result;

/// Velocities at one point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComparisonValues {
    pub v_dirac: SphericalVector,
    pub v_schrodinger_plus_gordon: SphericalVector,
    pub v_classical: SphericalVector,
    /// `|v_dirac - v_schrodinger_plus_gordon|`
    pub abs_deviation: f64,
    /// `abs_deviation / |v_dirac|`, zero when both vanish.
    pub rel_deviation: f64,
    /// `|v_dirac - v_classical|`
    pub classical_deviation: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ComparisonRecord {
    pub point: SphericalPoint,
    /// Evaluation failures are kept per point instead of aborting the report.
    pub outcome: std::result::Result<ComparisonValues, String>,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct ComparisonReport {
    pub records: Vec<ComparisonRecord>,
    pub max_abs_deviation: f64,
    pub max_rel_deviation: f64,
    pub max_classical_deviation: f64,
    pub n_failed: usize,
}

/// Dirac 1s (m = +1/2) against psi_100 with spin up.
pub fn compare_dirac_schrodinger(points: &[SphericalPoint]) -> Result<ComparisonReport> {
    let dirac = DiracHydrogenState::ground(SpinProjection::Up);
    let schrodinger = SchrodingerState::hydrogen(1, 0, 0)?;
    Ok(compare_with(&dirac, &schrodinger, &SpinVector::up(), points))
}

pub fn compare_with(
    dirac: &DiracHydrogenState,
    schrodinger: &SchrodingerState,
    spin: &SpinVector,
    points: &[SphericalPoint],
) -> ComparisonReport {
    let mut report = ComparisonReport::default();
    for p in points {
        let outcome = evaluate(dirac, schrodinger, spin, p).map_err(|e| e.to_string());
        match &outcome {
            Ok(v) => {
                report.max_abs_deviation = report.max_abs_deviation.max(v.abs_deviation);
                report.max_rel_deviation = report.max_rel_deviation.max(v.rel_deviation);
                report.max_classical_deviation = report.max_classical_deviation.max(v.classical_deviation);
            }
            Err(_) => report.n_failed += 1,
        }
        report.records.push(ComparisonRecord { point: *p, outcome });
    }
    report
}

fn evaluate(
    dirac: &DiracHydrogenState,
    schrodinger: &SchrodingerState,
    spin: &SpinVector,
    p: &SphericalPoint,
) -> Result<ComparisonValues> {
    let v_dirac = dirac_velocity(dirac, p)?;
    let v_schrodinger_plus_gordon = velocity(schrodinger, spin, p)?;
    let v_classical = classical_velocity(schrodinger, p)?;
    let abs_deviation = (v_dirac - v_schrodinger_plus_gordon).norm();
    let scale = v_dirac.norm();
    let rel_deviation = if abs_deviation == 0.0 { 0.0 } else { abs_deviation / scale };
    Ok(ComparisonValues {
        v_dirac,
        v_schrodinger_plus_gordon,
        v_classical,
        abs_deviation,
        rel_deviation,
        classical_deviation: (v_dirac - v_classical).norm(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::units::ATOMIC;
    use std::f64::consts::PI;

    #[test]
    fn equator_and_diagonal() {
        let pts = [
            SphericalPoint::new(1.0, PI / 2.0, 0.0).unwrap(),
            SphericalPoint::new(0.7, PI / 4.0, 1.0).unwrap(),
        ];
        let rep = compare_dirac_schrodinger(&pts).unwrap();
        let ac = ATOMIC.alpha * ATOMIC.c;
        let v = rep.records[0].outcome.as_ref().unwrap();
        assert!((v.v_dirac.phi - ac).abs() < 1e-14);
        assert_eq!(v.v_classical, SphericalVector::ZERO);
        let d = rep.records[1].outcome.as_ref().unwrap();
        assert!((d.v_schrodinger_plus_gordon.phi - ac * 0.5f64.sqrt()).abs() < 1e-14);
        assert!(rep.max_rel_deviation < 1e-12);
        assert_eq!(rep.n_failed, 0);
    }

    #[test]
    fn empty_report() {
        let rep = compare_dirac_schrodinger(&[]).unwrap();
        assert!(rep.records.is_empty());
        assert_eq!(rep.max_abs_deviation, 0.0);
        assert_eq!(rep.max_rel_deviation, 0.0);
    }

    #[test]
    fn failures_are_marked() {
        let pts = [SphericalPoint::new(0.0, 1.0, 0.0).unwrap()];
        let rep = compare_dirac_schrodinger(&pts).unwrap();
        assert_eq!(rep.n_failed, 1);
        assert!(rep.records[0].outcome.is_err());
    }
}
