//! Unit systems and physical constants.
//!
//! All internal evaluation happens in Hartree atomic units with the Gaussian
//! electrostatic convention (`r0 = hbar^2 / (m_e e^2)`), so `hbar = m_e = e = r0 = 1`
//! and `c = 1 / alpha`. SI values are derived from a single CODATA 2018 table; the
//! Coulomb factor `4 pi eps0` is carried only inside the SI Bohr radius.

use std::fmt;
use std::str::FromStr;

use crate::error::Error;

/// CODATA 2018 recommended values (SI).
pub mod codata {
    /// Reduced Planck constant, J s (exact).
    pub const HBAR: f64 = 1.054_571_817e-34;
    /// Electron mass, kg.
    pub const ELECTRON_MASS: f64 = 9.109_383_701_5e-31;
    /// Elementary charge, C (exact).
    pub const ELEMENTARY_CHARGE: f64 = 1.602_176_634e-19;
    /// Speed of light in vacuum, m/s (exact).
    pub const SPEED_OF_LIGHT: f64 = 299_792_458.0;
    /// Fine-structure constant.
    pub const FINE_STRUCTURE: f64 = 7.297_352_569_3e-3;
    /// Published Bohr radius, m. Relative standard uncertainty 1.5e-10.
    pub const BOHR_RADIUS: f64 = 5.291_772_109_03e-11;
    pub const BOHR_RADIUS_REL_UNCERTAINTY: f64 = 1.5e-10;
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum UnitSystem {
    Atomic,
    SI,
}

impl fmt::Display for UnitSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            UnitSystem::Atomic => f.write_str("atomic"),
            UnitSystem::SI => f.write_str("si"),
        }
    }
}

impl FromStr for UnitSystem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "atomic" | "au" | "a.u." => Ok(UnitSystem::Atomic),
            "si" => Ok(UnitSystem::SI),
            other => Err(Error::domain(format!("unknown unit system `{other}`"))),
        }
    }
}

/// Constant table for one unit system.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalConstants {
    pub system: UnitSystem,
    pub hbar: f64,
    pub m_e: f64,
    pub e_charge: f64,
    pub c: f64,
    pub alpha: f64,
    /// Bohr radius.
    pub r0: f64,
}

/// The atomic-unit table. Exact by construction.
pub const ATOMIC: PhysicalConstants = PhysicalConstants {
    system: UnitSystem::Atomic,
    hbar: 1.0,
    m_e: 1.0,
    e_charge: 1.0,
    c: 1.0 / codata::FINE_STRUCTURE,
    alpha: codata::FINE_STRUCTURE,
    r0: 1.0,
};

/// Returns the constant table for `system`.
///
/// In SI the Bohr radius is derived as `hbar / (m_e c alpha)` so that the
/// consistency relation `alpha c m_e r0 = hbar` holds to rounding; it agrees with
/// the published CODATA value within that value's stated uncertainty.
pub fn constants(system: UnitSystem) -> PhysicalConstants {
    match system {
        UnitSystem::Atomic => ATOMIC,
        UnitSystem::SI => {
            let r0 = codata::HBAR
                / (codata::ELECTRON_MASS * codata::SPEED_OF_LIGHT * codata::FINE_STRUCTURE);
            PhysicalConstants {
                system,
                hbar: codata::HBAR,
                m_e: codata::ELECTRON_MASS,
                e_charge: codata::ELEMENTARY_CHARGE,
                c: codata::SPEED_OF_LIGHT,
                alpha: codata::FINE_STRUCTURE,
                r0,
            }
        }
    }
}

impl PhysicalConstants {
    /// Atomic unit of velocity, `alpha c`.
    pub fn velocity_unit(&self) -> f64 {
        self.alpha * self.c
    }

    /// Atomic unit of length, `r0`.
    pub fn length_unit(&self) -> f64 {
        self.r0
    }

    /// Hartree energy, `m_e (alpha c)^2`.
    pub fn energy_unit(&self) -> f64 {
        self.m_e * self.velocity_unit() * self.velocity_unit()
    }

    /// Atomic unit of time, `r0 / (alpha c)`.
    pub fn time_unit(&self) -> f64 {
        self.r0 / self.velocity_unit()
    }

    /// Rest energy `m_e c^2`.
    pub fn rest_energy(&self) -> f64 {
        self.m_e * self.c * self.c
    }

    /// Key/value pairs in a fixed order, used by the `constants` subcommand.
    pub fn entries(&self) -> Vec<(&'static str, f64)> {
        vec![
            ("hbar", self.hbar),
            ("m_e", self.m_e),
            ("e_charge", self.e_charge),
            ("c", self.c),
            ("alpha", self.alpha),
            ("r0", self.r0),
            ("velocity_unit", self.velocity_unit()),
            ("length_unit", self.length_unit()),
            ("energy_unit", self.energy_unit()),
            ("time_unit", self.time_unit()),
            ("rest_energy", self.rest_energy()),
        ]
    }
}

fn scale_to_si(system: UnitSystem) -> f64 {
    match system {
        UnitSystem::Atomic => constants(UnitSystem::SI).velocity_unit(),
        UnitSystem::SI => 1.0,
    }
}

/// Converts a velocity between unit systems.
pub fn convert_velocity(value: f64, from: UnitSystem, to: UnitSystem) -> f64 {
    if from == to {
        return value;
    }
    value * scale_to_si(from) / scale_to_si(to)
}

/// Converts a length between unit systems.
pub fn convert_length(value: f64, from: UnitSystem, to: UnitSystem) -> f64 {
    if from == to {
        return value;
    }
    let si_r0 = constants(UnitSystem::SI).r0;
    match (from, to) {
        (UnitSystem::Atomic, UnitSystem::SI) => value * si_r0,
        _ => value / si_r0,
    }
}

/// Converts a time between unit systems.
pub fn convert_time(value: f64, from: UnitSystem, to: UnitSystem) -> f64 {
    if from == to {
        return value;
    }
    let si_t = constants(UnitSystem::SI).time_unit();
    match (from, to) {
        (UnitSystem::Atomic, UnitSystem::SI) => value * si_t,
        _ => value / si_t,
    }
}
