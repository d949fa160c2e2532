//! Fixed-precision unsigned integer arithmetic on power-of-two widths.
//!
//! A `2^k`-bit value is a pair of `2^(k-1)`-bit halves down to a single
//! machine word, and every algorithm is written once against that shape:
//!
//! * [`uint`] — the representation: construction, comparison, word access,
//!   randomization, hex serialization.
//! * [`ring`] — carry-aware add/sub, full double-width products, and
//!   arithmetic truncated to the width (mod `2^(2^k)`).
//! * [`division`] — Euclidean division by recursive halving.
//! * [`numtheory`] — gcd and extended gcd with signed Bézout coefficients.
//! * [`montgomery`] — Montgomery form with radix `2^(2^k)`.
//! * [`modular`] — explicit-modulus operations and the reduced-element ring.
//!
//! ```
//! use hilo::{EuclidDiv, FixedUint, RingArith, U256};
//!
//! let a = U256::from_hex("1fffffffffffffffffffffffffffffffffffffffffffffff").unwrap();
//! let b = U256::from_limb(4097);
//! let (q, r) = a.divrem(b);
//! assert_eq!(q.wrapping_mul(b).wrapping_add(r), a);
//! ```

pub mod division;
pub mod modular;
pub mod montgomery;
pub mod numtheory;
pub mod ring;
pub mod uint;

pub use division::{div3n2n, rem_wide, EuclidDiv};
pub use modular::{
    add_mod, div_mod, exp_mod, exp_mod_limb, inv_mod, is_quadratic_residue, mul_mod,
    mul_mod_limb, neg_mod, reduce, square_mod, square_root_mod, sub_mod, ModElement, ModError,
    ModRing,
};
pub use montgomery::{MontgomeryContext, MontgomeryError};
pub use numtheory::{ext_gcd, gcd, SignedCoeff};
pub use ring::{RingArith, WideProduct};
pub use uint::{Double, FixedUint, Limb, ParseHexError, Word, LIMB_LOG2};
pub use uint::{U1024, U128, U2048, U256, U4096, U512, U64};

#[cfg(not(feature = "limb32"))]
pub use uint::U8192;
#[cfg(feature = "limb32")]
pub use uint::U32;
