//! Partial Euler products over unramified primes, accumulated in log space
//! at fixed high precision, plus the φ-average and μ_Ω products.

use astro_float::{BigFloat, Consts, RoundingMode};

use crate::chars::Character;
use crate::exactmath::{IntPoly, Rat};
use crate::groups::ClassLabel;
use crate::lemmas::{phi_forced, Context, Hypothesis};
use crate::quintic::{frobenius_scan, FrobCache};

use super::local::local_factor;
use super::LfunError;

/// Accumulator width: 256 bits ≈ 77 decimal digits, comfortably past the
/// 50 digits the results promise.
pub const WORKING_PRECISION_BITS: usize = 256;

const RM: RoundingMode = RoundingMode::ToEven;

fn working_digits() -> usize {
    (WORKING_PRECISION_BITS as f64 * std::f64::consts::LOG10_2) as usize
}

/// Exact integer → float conversion by accumulating base-2^32 limbs.  The
/// intermediate precision covers the full bit length, so only the final
/// division in `rat_to_big` rounds.
fn int_to_big(n: &num::BigInt, cc_prec: usize) -> BigFloat {
    let (sign, digits) = n.to_u32_digits();
    let prec = cc_prec.max(32 * digits.len().max(1));
    let shift = BigFloat::from_u64(1u64 << 32, prec);
    let mut acc = BigFloat::from_u64(0, prec);
    for &limb in digits.iter().rev() {
        acc = acc
            .mul(&shift, prec, RM)
            .add(&BigFloat::from_u64(u64::from(limb), prec), prec, RM);
    }
    if sign == num::bigint::Sign::Minus {
        acc = acc.neg();
    }
    acc
}

fn rat_to_big(r: &Rat, cc_prec: usize) -> BigFloat {
    int_to_big(r.numer(), cc_prec).div(&int_to_big(r.denom(), cc_prec), cc_prec, RM)
}

/// A truncated Euler product: value of Π over unramified p ≤ P of
/// 1/L_p(p^{−s}), with an explicit estimate of the neglected tail.
#[derive(Clone, Debug)]
pub struct PartialLValue {
    pub s: f64,
    pub p_bound: u64,
    /// Full-precision accumulator result.
    pub value: BigFloat,
    /// The same value as a decimal string at working precision.
    pub decimal: String,
    /// Estimate of the dropped tail: max(deg, 5)·P^(1−s)/((s−1)·ln P),
    /// from the majorization Σ_{p>P} deg·p^{−s}.
    pub tail_bound: f64,
    /// Decimal digits carried by the accumulator.
    pub digits: usize,
}

impl PartialLValue {
    pub fn value_f64(&self) -> f64 {
        self.decimal.parse().unwrap_or(f64::NAN)
    }

    pub fn json(&self) -> serde_json::Value {
        serde_json::json!({
            "s": self.s,
            "P": self.p_bound,
            "value": self.decimal,
            "tail_bound": self.tail_bound,
            "digits": self.digits,
        })
    }
}

fn tail_bound(degree: usize, s: f64, p_bound: u64) -> f64 {
    let d = degree.max(5) as f64;
    let pf = p_bound as f64;
    d * pf.powf(1.0 - s) / ((s - 1.0) * pf.ln())
}

/// Partial L-value of the character `a` over the field cut out by `f`:
/// the product over unramified p ≤ p_bound of 1/L_p(a, p^{−s}), evaluated
/// by summing −ln L_p in a [`WORKING_PRECISION_BITS`]-bit accumulator.
///
/// Refuses s ≤ 1: the full product need not converge there and this tool
/// does not analytically continue.
pub fn partial_l(
    a: &Character,
    f: &IntPoly,
    s: f64,
    p_bound: u64,
    cache: Option<&mut FrobCache>,
) -> Result<PartialLValue, LfunError> {
    if !(s > 1.0) || !s.is_finite() {
        return Err(LfunError::SOutOfDomain(s));
    }
    let prec = WORKING_PRECISION_BITS;
    let mut cc = Consts::new().expect("constants cache");

    // Per-class factor coefficients, hoisted out of the prime loop.
    let mut factors: Vec<Vec<BigFloat>> = Vec::with_capacity(7);
    let mut degree = 0;
    for label in ClassLabel::ALL {
        let factor = local_factor(a, label)?;
        degree = factor.degree();
        let coeffs = factor.rational_coeffs()?;
        factors.push(coeffs.iter().map(|c| rat_to_big(c, prec)).collect());
    }

    let records = frobenius_scan(f, p_bound, cache)?;
    let s_big = BigFloat::from_f64(s, prec);
    let mut log_sum = BigFloat::from_f64(0.0, prec);
    for rec in &records {
        let Some(class) = rec.class else { continue };
        // x = p^{-s} = exp(-s ln p); p as f64 is exact below 2^53.
        let p_big = BigFloat::from_f64(rec.p as f64, prec);
        let x = p_big
            .ln(prec, RM, &mut cc)
            .mul(&s_big, prec, RM)
            .neg()
            .exp(prec, RM, &mut cc);
        let poly = &factors[class as usize];
        let mut v = poly.last().expect("nonempty factor").clone();
        for c in poly.iter().rev().skip(1) {
            v = v.mul(&x, prec, RM).add(c, prec, RM);
        }
        // L_p = 1/poly(x), so the product gains -ln poly(x).
        log_sum = log_sum.sub(&v.ln(prec, RM, &mut cc), prec, RM);
    }
    let value = log_sum.exp(prec, RM, &mut cc);
    let decimal = value
        .format(astro_float::Radix::Dec, RM, &mut cc)
        .expect("decimal rendering");
    Ok(PartialLValue {
        s,
        p_bound,
        value,
        decimal,
        tail_bound: tail_bound(degree, s, p_bound),
        digits: working_digits(),
    })
}

/// Average of the forced φ over the classes of the unramified primes up to
/// `p_bound`, under the given similitude hypothesis.  Exactly 0 for ψ⁻¹,
/// whose scenario rows all carry φ = 0.
pub fn phi_average(
    f: &IntPoly,
    p_bound: u64,
    hyp: Hypothesis,
    cache: Option<&mut FrobCache>,
) -> Result<f64, LfunError> {
    let ctx = Context::shared();
    let mut phi = [0i64; 7];
    for label in ClassLabel::ALL {
        phi[label as usize] = phi_forced(ctx, label, hyp)?;
    }
    let records = frobenius_scan(f, p_bound, cache)?;
    let mut sum = 0i64;
    let mut processed = 0u64;
    for rec in &records {
        if let Some(class) = rec.class {
            sum += phi[class as usize];
            processed += 1;
        }
    }
    if processed == 0 {
        return Ok(0.0);
    }
    Ok(sum as f64 / processed as f64)
}

/// Finite correction product Π over Ω of ((1+p^{−s})/(1−p^{−s}))².
/// Ω is always caller-supplied: which primes are exceptional is
/// automorphic-side data this tool cannot determine.
pub fn mu_omega_partial(omega: &[u64], s: f64) -> f64 {
    assert!(s > 0.0, "mu_Omega requires s > 0");
    omega
        .iter()
        .map(|&p| {
            let x = (p as f64).powf(-s);
            ((1.0 + x) / (1.0 - x)).powi(2)
        })
        .product()
}
