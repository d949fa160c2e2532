//! Test-side companions for `hilo`: a deliberately simple arbitrary-precision
//! reference ([`BigNat`]), a 4-bit synthetic base word for exhaustive checks
//! ([`U4`]), and a multiplication-counting base word ([`CountingWord`]).
//!
//! Nothing here is needed at runtime by the main library; it exists so tests
//! can compare every operation against an independent implementation.

pub mod bignat;
pub mod counting;
pub mod smallbase;

pub use bignat::{BigNat, ParseError};
pub use counting::{mul_count, reset_mul_count, CountingWord};
pub use smallbase::{Toy16, Toy8, U4};
