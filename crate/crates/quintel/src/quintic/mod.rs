//! Number-field side: Frobenius classes of a monic irreducible quintic,
//! field profiles (discriminant, signature, complex conjugation), the
//! main-theorem hypothesis checks, and Chebotarev statistics over all
//! primes up to a bound, with an append-only on-disk cache.
//!
//! The model is deliberately polynomial-level: "ramified" means p divides
//! disc(f), and ramified primes are excluded from every statistic rather
//! than corrected for.  Degree != 5 never enters.

mod cache;
mod field;
mod frob;

pub use cache::{
    parse_cache_text, CacheContents, CacheError, CacheLine, FrobCache, CACHE_FORMAT_VERSION,
};
pub use field::{
    chebotarev_stats, check_theorem_hypotheses, field_profile, frobenius_scan, ChebotarevStats,
    FieldProfile, GaloisEvidence, HypothesisReport,
};
pub use frob::{certify_irreducible, frobenius_class, FrobeniusRecord, IrreducibilityCertificate};

use thiserror::Error;

use crate::exactmath::{FactorError, PolyError};
use crate::groups::LabelError;

#[derive(Debug, Error)]
pub enum QuinticError {
    #[error("expected a monic quintic, got coefficients {0}")]
    NotMonicQuintic(String),
    #[error("polynomial has a repeated root")]
    NotSquarefree,
    #[error(
        "irreducibility not certified: proper factor degrees {remaining:?} \
         survive every prime up to {bound}"
    )]
    IrreducibilityNotCertified { remaining: Vec<usize>, bound: u64 },
    #[error(transparent)]
    Factor(#[from] FactorError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Label(#[from] LabelError),
    #[error(transparent)]
    Cache(#[from] CacheError),
}
