pub mod analysis;
pub mod cli;
pub mod coords;
pub mod currents;
pub mod eigenstates;
pub mod error;
pub mod quadrature;
pub mod specialfns;
pub mod units;
pub mod verify;
