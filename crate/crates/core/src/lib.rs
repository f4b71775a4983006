//! Exact symbolic verification for the Jordanian deformation of the
//! two-photon algebra `h6` and of the isomorphic (1+1) Schrodinger algebra.
//!
//! Everything is computed over truncated power series in the deformation
//! parameter `z` with exact rational coefficients; every identity check is
//! an exact equality modulo `z^(M+1)`.

pub mod fb;
pub mod fock;
pub mod hopf;
pub mod liebialg;
pub mod ncalg;
pub mod report;
pub mod scalars;
pub mod schrod;
pub mod verify;
