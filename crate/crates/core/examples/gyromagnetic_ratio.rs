//! Mean orbital and Gordon angular momenta. The Gordon term contributes the
//! full spin, which is the factor of two in the electron g-factor.

use qflow::analysis::{mean_gordon_angular_momentum, normalization, QuadratureSpec};
use qflow::currents::SpinVector;
use qflow::eigenstates::SchrodingerState;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for (n, l, m) in [(1, 0, 0), (2, 1, 0), (2, 1, 1), (3, 2, -2)] {
        let state = SchrodingerState::hydrogen(n, l, m)?;
        let spec = QuadratureSpec::for_state(&state)?;
        for spin in [SpinVector::up(), SpinVector::down()] {
            let lg = mean_gordon_angular_momentum(&state, &spin, &spec)?;
            println!(
                "{:<8} s_z = {:+.1}  norm = {:.12}  <L_gordon> = ({:+.2e}, {:+.2e}, {:+.10})",
                state.label(),
                spin.cartesian().z,
                normalization(&state)?,
                lg.x,
                lg.y,
                lg.z
            );
        }
    }
    Ok(())
}
