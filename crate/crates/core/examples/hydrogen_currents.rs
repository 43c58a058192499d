//! Classical current, Gordon current and velocity for a few hydrogen states
//! along a ray at theta = pi/3.

use std::f64::consts::PI;

use qflow::coords::SphericalPoint;
use qflow::currents::{gordon_current_j2, schrodinger_current_j1, velocity, SpinVector};
use qflow::eigenstates::SchrodingerState;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for (n, l, m) in [(1, 0, 0), (2, 1, 0), (2, 1, 1), (3, 2, -1)] {
        let state = SchrodingerState::hydrogen(n, l, m)?;
        let spin = SpinVector::for_magnetic_number(m);
        println!("{}  (spin {:?})", state.label(), spin.cartesian().as_slice());
        for r in [0.5, 1.0, 2.0, 4.0] {
            let p = SphericalPoint::new(r, PI / 3.0, 0.0)?;
            let j1 = schrodinger_current_j1(&state, &p)?;
            let j2 = gordon_current_j2(&state, &spin, &p)?;
            let v = velocity(&state, &spin, &p)?;
            println!(
                "  r = {r:<4} rho = {:.4e}  J1_phi = {:+.4e}  J2_phi = {:+.4e}  v_phi = {:+.6}",
                state.density(&p),
                j1.phi,
                j2.phi,
                v.phi
            );
        }
    }
    Ok(())
}
