//! Flow lines of hydrogen states: closed circles about the z axis whose
//! period is 2 pi r sin(theta) / |v_phi|.

use std::f64::consts::TAU;

use qflow::analysis::streamline;
use qflow::coords::SphericalPoint;
use qflow::currents::{velocity, SpinVector};
use qflow::eigenstates::SchrodingerState;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let start = SphericalPoint::new(2.0, 1.1, 0.0)?;
    for (n, l, m) in [(1, 0, 0), (2, 1, 1), (3, 2, -1)] {
        let state = SchrodingerState::hydrogen(n, l, m)?;
        let spin = SpinVector::for_magnetic_number(m);
        let v0 = velocity(&state, &spin, &start)?.phi;
        let expected = TAU * start.r * start.theta.sin() / v0.abs();
        let dt = expected / 2000.0;
        let traj = streamline(|p| velocity(&state, &spin, p), start, dt, 2200)?;
        println!(
            "{:<8} period = {:.8} (expected {:.8})  radial drift = {:.1e}  polar drift = {:.1e}",
            state.label(),
            traj.estimate_period().unwrap_or(f64::NAN),
            expected,
            traj.radial_drift(),
            traj.polar_drift()
        );
    }
    Ok(())
}
