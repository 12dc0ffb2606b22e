//! Exact arithmetic for q-deformed rational numbers and everything attached
//! to them: continued-fraction matrix constructions, type-A quiver closure
//! polynomials (three independent algorithms), complete integer polynomial
//! factorization, special values in the cyclotomic rings `ℤ[ω]` and `ℤ[i]`,
//! normalized Jones polynomials of rational links, and batch scanners that
//! verify the arithmetic and irreducibility conjectures over ranges of
//! denominators.
//!
//! Every computation is exact; coefficients are arbitrary-precision integers
//! and all tolerances are exact equality.

pub mod contfrac;
pub mod cyclo;
pub mod error;
pub mod frac;
pub mod jones;
pub mod poly;
pub mod qdeform;
pub mod quiver;
pub mod scan;
pub mod zxfactor;

pub use error::{Error, Result};

/// Caps applied by the text/JSON parsers so untrusted input cannot request
/// absurd allocations.
pub const MAX_PARSE_TERMS: usize = 1 << 16;
pub const MAX_PARSE_DIGITS: usize = 1 << 16;
