//! Associated Legendre functions and spherical harmonics, with the m -> -m symmetry.

use std::f64::consts::PI;

use qflow::specialfns::{assoc_legendre, spherical_harmonic};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let (theta, phi) = (PI / 3.0, 0.4);
    for l in 0..=3u32 {
        for m in -(l as i32)..=(l as i32) {
            let y = spherical_harmonic(l, m, theta, phi)?;
            let p = assoc_legendre(l, m.unsigned_abs(), theta.cos())?;
            println!("l={l} m={m:>2}  P = {p:>10.6}  Y = {:>10.6} {:+.6}i", y.re, y.im);
        }
    }
    let y = spherical_harmonic(2, 1, theta, phi)?;
    let ym = spherical_harmonic(2, -1, theta, phi)?;
    println!("|Y_2,-1 + conj(Y_21)| = {:.1e}", (ym + y.conj()).norm());
    Ok(())
}
