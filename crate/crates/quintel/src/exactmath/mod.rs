//! Exact arithmetic: rationals, Q(zeta_120), integer polynomials, Sturm
//! sequences, distinct-degree factorisation mod p and prime sieves.

mod cyc;
mod fpoly;
mod intpoly;
mod primes;
mod rat;
mod ratpoly;
mod sturm;

pub use cyc::{cyc_root, Cyc, CycError, CYC_LEVEL};
pub use fpoly::{factor_degrees_mod_p, FactorError};
pub use intpoly::{IntPoly, PolyError};
pub use primes::{is_prime, primes_up_to};
pub use rat::{rat, rat_int, Rat};
pub use ratpoly::RatPoly;
pub use sturm::{is_squarefree, real_root_count};
