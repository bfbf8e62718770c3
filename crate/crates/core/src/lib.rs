//! Numerical verification of Mellin-transform identities derived from
//! Ramanujan's master theorem.

pub mod cli;
pub mod phi_ns;
pub mod quadrature;
pub mod registry;
pub mod series;
pub mod specfun;
pub mod verifier;
