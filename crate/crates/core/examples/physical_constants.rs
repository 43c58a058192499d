//! Constant table in atomic and SI units, plus a few conversions.

use qflow::units::{constants, convert_length, convert_velocity, UnitSystem};

fn main() {
    for system in [UnitSystem::Atomic, UnitSystem::SI] {
        println!("{system}:");
        for (name, value) in constants(system).entries() {
            println!("  {name:<14} {value:.10e}");
        }
    }
    let (a, si) = (UnitSystem::Atomic, UnitSystem::SI);
    println!("1 a.u. of velocity = {:.6e} m/s", convert_velocity(1.0, a, si));
    println!("1 a.u. of length   = {:.6e} m", convert_length(1.0, a, si));
    println!("alpha c (a.u.)     = {}", constants(a).alpha * constants(a).c);
}
