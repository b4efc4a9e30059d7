//! Euler-product analytics: exact local factors from characters, partial
//! L-values over unramified primes for real s > 1, φ-averages under a
//! similitude hypothesis, μ_Ω correction products, and the degree-12
//! zeta-factorization check.
//!
//! Everything here is either exact (polynomial and character identities in
//! Q(ζ120)) or high-precision numerical with an explicit, reported tail
//! bound.  There is no analytic continuation, no Γ-factors, and no zero
//! hunting: critical-strip data enters only as documented constants.

mod euler;
mod local;
mod zeta;

pub use euler::{mu_omega_partial, partial_l, phi_average, PartialLValue, WORKING_PRECISION_BITS};
pub use local::{
    local_factor, omega_factor_identity_check, taylor_positivity_check, LocalFactor,
};
pub use zeta::verify_zeta_h_factorization;

use thiserror::Error;

use crate::chars::CharError;
use crate::groups::{GroupError, LabelError};
use crate::lemmas::LemmaError;
use crate::quintic::QuinticError;

/// Imaginary part of the lowest zero of the completed degree-4 L-function
/// on the critical line, as established by external computation.  Recorded
/// for reference only; nothing in this crate recomputes or depends on it.
pub const REFERENCE_LOWEST_ZERO_IM: f64 = 1.624;

#[derive(Debug, Error)]
pub enum LfunError {
    #[error("s = {0} is outside the Euler-product domain s > 1; no analytic continuation here")]
    SOutOfDomain(f64),
    #[error("character group has no class labeled {0}")]
    MissingClass(&'static str),
    #[error("local factor has a non-rational coefficient (character is not rational-valued)")]
    NonRationalCoefficient,
    #[error(transparent)]
    Char(#[from] CharError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Label(#[from] LabelError),
    #[error(transparent)]
    Lemma(#[from] LemmaError),
    #[error(transparent)]
    Quintic(#[from] QuinticError),
}
