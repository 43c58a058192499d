//! Isotropic oscillator: rigid circular flow of the ground state with spin,
//! and the non-circular flow of a Cartesian excited state.

use nalgebra::Vector3;
use qflow::coords::SphericalPoint;
use qflow::currents::{velocity, SpinVector};
use qflow::eigenstates::{cartesian_oscillator_state, SchrodingerState};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let p = SphericalPoint::new(1.2, 1.0, 0.3)?;
    for omega in [0.5, 1.0, 2.0] {
        let ground = SchrodingerState::oscillator(0, 0, 0, omega)?;
        let v = velocity(&ground, &SpinVector::up(), &p)?;
        println!(
            "omega = {omega}: v = ({:+.3e}, {:+.3e}, {:+.6})  omega r sin(theta) = {:.6}",
            v.r,
            v.theta,
            v.phi,
            omega * p.r * p.theta.sin()
        );
    }

    // one quantum along x with spin along y: the flow leaves the azimuthal direction
    let excited = cartesian_oscillator_state([1, 0, 0], 1.0)?;
    let spin = SpinVector::along(Vector3::y())?;
    for phi in [0.3, 1.0, 2.0] {
        let q = SphericalPoint::new(1.0, 1.2, phi)?;
        let v = velocity(&excited, &spin, &q)?;
        println!("phi = {phi}: v = ({:+.4}, {:+.4}, {:+.4})", v.r, v.theta, v.phi);
    }
    Ok(())
}
