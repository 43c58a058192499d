//! Numerical divergence of the total current. Hydrogen flow is azimuthal and
//! trivially divergence-free; the Cartesian oscillator state is not azimuthal
//! and shows the second-order convergence of the stencil.

use nalgebra::Vector3;
use qflow::analysis::divergence;
use qflow::coords::SphericalPoint;
use qflow::currents::{total_current, SpinVector};
use qflow::eigenstates::{cartesian_oscillator_state, SchrodingerState};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let p = SphericalPoint::new(1.7, 0.9, 0.4)?;
    let states = [
        (SchrodingerState::hydrogen(2, 1, 1)?, SpinVector::up()),
        (SchrodingerState::hydrogen(3, 2, -1)?, SpinVector::down()),
        (cartesian_oscillator_state([1, 0, 0], 1.0)?, SpinVector::along(Vector3::y())?),
        (cartesian_oscillator_state([1, 1, 0], 0.7)?, SpinVector::along(Vector3::new(1.0, 0.0, 1.0))?),
    ];
    for (state, spin) in &states {
        let field = |q: &SphericalPoint| total_current(state, spin, q);
        print!("{:<34}", state.label());
        for h in [1e-2, 1e-3, 1e-4] {
            print!("  h = {h:.0e}: div J = {:+.3e}", divergence(field, &p, h)?);
        }
        println!();
    }
    Ok(())
}
