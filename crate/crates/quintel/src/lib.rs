//! Exact finite-group character theory around GL2(F5) and S5, together with
//! Euler-product numerics for degree-5 number fields.
//!
//! The crate is organised bottom-up:
//!
//! * [`exactmath`] - exact rationals, the cyclotomic field Q(zeta_120),
//!   integer polynomials, Sturm sequences, factorisation mod p, prime sieves.
//! * [`groups`] - concrete finite groups (matrix and permutation elements),
//!   conjugacy classes, power maps and the S5 class-label dictionary.
//! * [`chars`] - character tables by Dixon's modular method, plethysms,
//!   restriction/extension, Frobenius-Schur indicators, eigenvalue multisets.
//! * [`lemmas`] - verification of the character-theoretic lemmas for the
//!   degree-4 symplectic character of GL2(F5) and its Satake scenario tables.
//! * [`quintic`] - Frobenius partitions and Chebotarev statistics for a
//!   concrete quintic field, with an on-disk cache.
//! * [`lfun`] - exact local Euler factors and high-precision partial
//!   L-products.
//!
//! All group-theoretic computation is exact; floating point enters only in
//! the analytic layer of [`lfun`] and in diagnostics.

pub mod chars;
pub mod exactmath;
pub mod groups;
pub mod lemmas;
pub mod lfun;
pub mod quintic;
