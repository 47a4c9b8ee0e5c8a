//! Matrix-level oracle: everything the symbolic calculus claims, recomputed
//! from raw GF(2) matrices on tabloid spaces.  No code is shared with the
//! symbolic side beyond the basic partition/tableau types.

pub mod rep;
pub mod specht;
pub mod spin;
pub mod tabloid;
pub mod verify;
