//! Dirac hydrogen 1s: radial pair, normalization amplitude and the exact
//! velocity alpha c sin(theta), compared with Schrodinger + Gordon.

use std::f64::consts::PI;

use qflow::analysis::compare_dirac_schrodinger;
use qflow::coords::SphericalPoint;
use qflow::currents::dirac_velocity;
use qflow::eigenstates::{dirac_ground_exponent, dirac_small_ratio, DiracHydrogenState, SpinProjection};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let up = DiracHydrogenState::ground(SpinProjection::Up);
    println!("gamma - 1 = {:.6e}", dirac_ground_exponent());
    println!("g / f     = {:.6e}", dirac_small_ratio());
    println!("a0        = {:.10}", up.a0().unwrap());
    println!("energy    = {:.10e}", up.energy().unwrap());

    let mut points = Vec::new();
    for r in [0.1, 1.0, 3.0] {
        for theta in [0.3, PI / 2.0, 2.5] {
            let p = SphericalPoint::new(r, theta, 0.0)?;
            let (f, g) = up.radial(r)?;
            println!(
                "r = {r:<3} theta = {theta:.3}  f = {f:.6e}  g = {g:+.6e}  v_phi = {:.12}",
                dirac_velocity(&up, &p)?.phi
            );
            points.push(p);
        }
    }
    let report = compare_dirac_schrodinger(&points)?;
    println!("max |v_dirac - v_schrodinger+gordon| = {:.2e}", report.max_abs_deviation);
    Ok(())
}
