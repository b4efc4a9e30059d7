//! Field-level invariants of a quintic: discriminant, signature, the class
//! of complex conjugation, the two main-theorem hypotheses, and Chebotarev
//! statistics over all primes up to a bound.

use num::{BigInt, One, Signed, ToPrimitive, Zero};

use crate::exactmath::{is_prime, primes_up_to, rat, real_root_count, IntPoly, Rat};
use crate::groups::{cycle_type_label, ClassLabel};

use super::cache::FrobCache;
use super::frob::{certify_irreducible, frobenius_class, FrobeniusRecord};
use super::QuinticError;

/// Trial-division bound for discriminant factorization.
const TRIAL_DIVISION_BOUND: u64 = 1_000_000;

/// Prime bound for the Galois-group evidence scan.
const EVIDENCE_BOUND: u64 = 10_000;

/// Signature and ramification data of the field cut out by `f`.
#[derive(Clone, Debug)]
pub struct FieldProfile {
    pub f: IntPoly,
    pub disc: BigInt,
    /// Real embeddings.
    pub r1: usize,
    /// Conjugate pairs of complex embeddings.
    pub r2: usize,
    /// Class of complex conjugation: cycle type 2^r2 1^r1.
    pub conjugation: ClassLabel,
    /// Prime factors of |disc| found by trial division, ascending.
    pub ramified_primes: Vec<u64>,
    /// Part of |disc| left unfactored by trial division, if any.
    pub unfactored_cofactor: Option<BigInt>,
}

pub fn field_profile(f: &IntPoly) -> Result<FieldProfile, QuinticError> {
    certify_irreducible(f)?;
    let disc = f.disc_quintic()?;
    let r1 = real_root_count(f);
    // Complex roots of a real polynomial pair up, and an odd degree forces
    // at least one real root.
    assert!(r1 % 2 == 1 && r1 <= 5, "quintic with r1 = {r1}");
    let r2 = (5 - r1) / 2;
    let mut cycle_type = vec![1usize; r1];
    cycle_type.extend(std::iter::repeat(2).take(r2));
    let conjugation = cycle_type_label(&cycle_type)?;
    let (ramified_primes, unfactored_cofactor) = trial_factor(&disc, TRIAL_DIVISION_BOUND);
    Ok(FieldProfile {
        f: f.clone(),
        disc,
        r1,
        r2,
        conjugation,
        ramified_primes,
        unfactored_cofactor,
    })
}

/// Prime factors of |n| up to `bound`, plus any leftover cofactor.  A
/// leftover that is itself a u64-sized prime still counts as found.
fn trial_factor(n: &BigInt, bound: u64) -> (Vec<u64>, Option<BigInt>) {
    let mut m = n.abs();
    let mut found = Vec::new();
    for p in primes_up_to(bound) {
        if m <= BigInt::one() {
            break;
        }
        if (&m % p).is_zero() {
            found.push(p);
            while (&m % p).is_zero() {
                m = &m / p;
            }
        }
    }
    if m > BigInt::one() {
        if let Some(v) = m.to_u64() {
            if is_prime(v) {
                found.push(v);
                return (found, None);
            }
        }
        (found, Some(m))
    } else {
        (found, None)
    }
}

/// Observed splitting types pinning down the Galois group: a transitive
/// subgroup of S5 containing a 5-cycle and an element of class 2A or 6A
/// must be all of S5 (no proper transitive subgroup has elements of order
/// 6 or transpositions).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaloisEvidence {
    /// A prime with partition [5], if one was found.
    pub five_cycle: Option<u64>,
    /// A prime whose class is 2A or 6A, if one was found.
    pub odd_witness: Option<(u64, ClassLabel)>,
    pub search_bound: u64,
}

impl GaloisEvidence {
    pub fn certifies_s5(&self) -> bool {
        self.five_cycle.is_some() && self.odd_witness.is_some()
    }
}

fn galois_evidence(f: &IntPoly) -> Result<GaloisEvidence, QuinticError> {
    let mut ev = GaloisEvidence {
        five_cycle: None,
        odd_witness: None,
        search_bound: EVIDENCE_BOUND,
    };
    for p in primes_up_to(EVIDENCE_BOUND) {
        let rec = frobenius_class(f, p)?;
        let Some(class) = rec.class else { continue };
        if ev.five_cycle.is_none() && class == ClassLabel::C5A {
            ev.five_cycle = Some(p);
        }
        if ev.odd_witness.is_none() && matches!(class, ClassLabel::C2A | ClassLabel::C6A) {
            ev.odd_witness = Some((p, class));
        }
        if ev.certifies_s5() {
            break;
        }
    }
    Ok(ev)
}

/// The two hypotheses of the main theorem for one field, plus the Galois
/// evidence.
#[derive(Clone, Debug)]
pub struct HypothesisReport {
    pub profile: FieldProfile,
    /// (1): complex conjugation lies in class 2B, i.e. signature (1, 2).
    pub conjugation_is_2b: bool,
    pub frob5: FrobeniusRecord,
    /// (2): 5 is unramified with Frobenius in class 2B.
    pub frob5_is_2b: bool,
    pub evidence: GaloisEvidence,
}

pub fn check_theorem_hypotheses(f: &IntPoly) -> Result<HypothesisReport, QuinticError> {
    let profile = field_profile(f)?;
    let conjugation_is_2b = profile.conjugation == ClassLabel::C2B;
    let frob5 = frobenius_class(f, 5)?;
    let frob5_is_2b = frob5.class == Some(ClassLabel::C2B);
    let evidence = galois_evidence(f)?;
    Ok(HypothesisReport {
        profile,
        conjugation_is_2b,
        frob5,
        frob5_is_2b,
        evidence,
    })
}

/// Frobenius records for every prime p <= pmax, ascending.  With a cache,
/// unramified records are read from and appended to it.
pub fn frobenius_scan(
    f: &IntPoly,
    pmax: u64,
    mut cache: Option<&mut FrobCache>,
) -> Result<Vec<FrobeniusRecord>, QuinticError> {
    certify_irreducible(f)?;
    let mut out = Vec::new();
    for p in primes_up_to(pmax) {
        let rec = match cache.as_deref().and_then(|c| c.lookup(p)) {
            Some(rec) => rec,
            None => {
                let rec = frobenius_class(f, p)?;
                if let Some(c) = cache.as_deref_mut() {
                    c.record(&rec)?;
                }
                rec
            }
        };
        out.push(rec);
    }
    if let Some(c) = cache {
        c.flush()?;
    }
    Ok(out)
}

/// Per-class counts over the unramified primes up to `pmax`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChebotarevStats {
    pub pmax: u64,
    /// Unramified primes counted.
    pub processed: u64,
    pub ramified_skipped: Vec<u64>,
    /// Counts indexed in `ClassLabel::ALL` order.
    pub counts: [u64; 7],
}

impl ChebotarevStats {
    pub fn from_records(pmax: u64, records: &[FrobeniusRecord]) -> ChebotarevStats {
        let mut stats = ChebotarevStats {
            pmax,
            processed: 0,
            ramified_skipped: Vec::new(),
            counts: [0; 7],
        };
        for rec in records {
            match rec.class {
                Some(class) => {
                    stats.counts[class as usize] += 1;
                    stats.processed += 1;
                }
                None => stats.ramified_skipped.push(rec.p),
            }
        }
        stats
    }

    pub fn count(&self, label: ClassLabel) -> u64 {
        self.counts[label as usize]
    }

    pub fn frequency(&self, label: ClassLabel) -> f64 {
        self.count(label) as f64 / self.processed as f64
    }

    /// Exact Chebotarev density, class size over 120.
    pub fn density(label: ClassLabel) -> Rat {
        rat(label.s5_size() as i64, 120)
    }

    pub fn density_f64(label: ClassLabel) -> f64 {
        label.s5_size() as f64 / 120.0
    }

    pub fn deviation(&self, label: ClassLabel) -> f64 {
        (self.frequency(label) - Self::density_f64(label)).abs()
    }

    /// Statistical slack: three binomial standard deviations (with the
    /// variance bounded by the density itself) plus a small floor.
    pub fn tolerance(&self, label: ClassLabel) -> f64 {
        3.0 * (Self::density_f64(label) / self.processed as f64).sqrt() + 0.005
    }

    pub fn all_within_tolerance(&self) -> bool {
        ClassLabel::ALL
            .into_iter()
            .all(|l| self.deviation(l) < self.tolerance(l))
    }
}

pub fn chebotarev_stats(
    f: &IntPoly,
    pmax: u64,
    cache: Option<&mut FrobCache>,
) -> Result<ChebotarevStats, QuinticError> {
    let records = frobenius_scan(f, pmax, cache)?;
    Ok(ChebotarevStats::from_records(pmax, &records))
}

#[cfg(test)]
mod tests {
    use num::One;

    use super::*;
    use crate::exactmath::is_squarefree;

    fn example_field() -> IntPoly {
        IntPoly::from_i64(&[1, 1, -1, -1, 0, 1])
    }

    /// First monic quintic accepted by `keep`, scanning (c4, c3, c2, c1, c0)
    /// lexicographically over -bound..=bound.  Deterministic, so the found
    /// polynomials can be frozen in the tests below.
    fn first_quintic(bound: i64, keep: impl Fn(&IntPoly) -> bool) -> IntPoly {
        for c4 in -bound..=bound {
            for c3 in -bound..=bound {
                for c2 in -bound..=bound {
                    for c1 in -bound..=bound {
                        for c0 in -bound..=bound {
                            let f = IntPoly::from_i64(&[c0, c1, c2, c3, c4, 1]);
                            if keep(&f) {
                                return f;
                            }
                        }
                    }
                }
            }
        }
        panic!("no quintic with coefficients up to {bound} accepted");
    }

    fn certified(f: &IntPoly) -> bool {
        certify_irreducible(f).is_ok()
    }

    #[test]
    fn example_field_profile() {
        let prof = field_profile(&example_field()).unwrap();
        assert_eq!(prof.disc, BigInt::from(1609));
        assert_eq!((prof.r1, prof.r2), (1, 2));
        assert_eq!(prof.conjugation, ClassLabel::C2B);
        assert_eq!(prof.ramified_primes, vec![1609]);
        assert!(prof.unfactored_cofactor.is_none());
    }

    #[test]
    fn conjugation_class_tracks_signature() {
        // Totally real: disc > 0 and five real roots; conjugation trivial.
        let real5 = first_quintic(4, |f| {
            is_squarefree(f) && real_root_count(f) == 5 && certified(f)
        });
        assert_eq!(real5.to_coeff_list(), "-1,2,4,-4,-3,1");
        let prof = field_profile(&real5).unwrap();
        assert_eq!((prof.r1, prof.r2), (5, 0));
        assert_eq!(prof.conjugation, ClassLabel::C1);

        // r1 = 3: conjugation is a single 2-cycle.
        let real3 = first_quintic(2, |f| {
            is_squarefree(f) && real_root_count(f) == 3 && certified(f)
        });
        assert_eq!(real3.to_coeff_list(), "2,-2,-2,-2,-2,1");
        let prof = field_profile(&real3).unwrap();
        assert_eq!((prof.r1, prof.r2), (3, 1));
        assert_eq!(prof.conjugation, ClassLabel::C2A);

        // r1 = 1 iff class 2B, on both examples and the main field.
        for (f, want_2b) in [(real5, false), (real3, false), (example_field(), true)] {
            let prof = field_profile(&f).unwrap();
            assert_eq!(prof.r1 == 1, prof.conjugation == ClassLabel::C2B);
            assert_eq!(prof.conjugation == ClassLabel::C2B, want_2b);
        }
    }

    #[test]
    fn field_profile_rejects_reducible() {
        let red = IntPoly::from_i64(&[0, -1, 0, 0, 0, 1]);
        assert!(matches!(
            field_profile(&red),
            Err(QuinticError::IrreducibilityNotCertified { .. })
        ));
    }

    #[test]
    fn trial_factor_handles_large_cofactors() {
        let (found, cofactor) = trial_factor(&BigInt::from(-1609), TRIAL_DIVISION_BOUND);
        assert_eq!(found, vec![1609]);
        assert!(cofactor.is_none());

        // 2^4 * 3 * (10^9 + 7): the large prime is beyond the trial bound
        // but still recognized as prime.
        let n = BigInt::from(48u64) * BigInt::from(1_000_000_007u64);
        let (found, cofactor) = trial_factor(&n, 1000);
        assert_eq!(found, vec![2, 3, 1_000_000_007]);
        assert!(cofactor.is_none());

        // Product of two primes beyond the bound stays unfactored.
        let big = BigInt::from(1_000_000_007u64) * BigInt::from(1_000_000_009u64);
        let (found, cofactor) = trial_factor(&(BigInt::from(12u64) * &big), 1000);
        assert_eq!(found, vec![2, 3]);
        assert_eq!(cofactor, Some(big));

        let (found, cofactor) = trial_factor(&BigInt::one(), 1000);
        assert!(found.is_empty() && cofactor.is_none());
    }

    #[test]
    fn example_field_hypotheses() {
        let rep = check_theorem_hypotheses(&example_field()).unwrap();
        assert!(rep.conjugation_is_2b);
        assert!(!rep.frob5_is_2b);
        assert_eq!(rep.frob5.class, Some(ClassLabel::C5A));
        assert_eq!(rep.evidence.five_cycle, Some(2));
        assert!(rep.evidence.certifies_s5());
    }

    #[test]
    fn totally_real_field_fails_conjugation_hypothesis() {
        let real5 = IntPoly::from_i64(&[1, 3, -3, -4, 1, 1]);
        let rep = check_theorem_hypotheses(&real5).unwrap();
        assert!(!rep.conjugation_is_2b);
    }

    #[test]
    fn synthetic_split_at_5_passes_frobenius_hypothesis() {
        let f = first_quintic(2, |f| {
            certified(f)
                && frobenius_class(f, 5)
                    .is_ok_and(|r| r.partition.as_deref() == Some(&[1, 2, 2][..]))
        });
        assert_eq!(f.to_coeff_list(), "-1,-1,-2,-2,-2,1");
        let rep = check_theorem_hypotheses(&f).unwrap();
        assert!(rep.frob5_is_2b);
        assert_eq!(rep.frob5.class, Some(ClassLabel::C2B));
    }

    #[test]
    fn chebotarev_single_prime() {
        let s = chebotarev_stats(&example_field(), 2, None).unwrap();
        assert_eq!(s.processed, 1);
        assert!(s.ramified_skipped.is_empty());
        assert_eq!(s.count(ClassLabel::C5A), 1);
        assert_eq!(s.frequency(ClassLabel::C5A), 1.0);
    }

    #[test]
    fn chebotarev_to_ten_thousand() {
        let s = chebotarev_stats(&example_field(), 10_000, None).unwrap();
        // pi(10^4) = 1229, and 1609 is the lone ramified prime.
        assert_eq!(s.ramified_skipped, vec![1609]);
        assert_eq!(s.processed, 1228);
        assert_eq!(s.counts.iter().sum::<u64>(), s.processed);
        let freq_sum: f64 = ClassLabel::ALL.iter().map(|&l| s.frequency(l)).sum();
        assert!((freq_sum - 1.0).abs() < 1e-12);
        let density_sum: Rat = ClassLabel::ALL
            .iter()
            .map(|&l| ChebotarevStats::density(l))
            .sum();
        assert!(density_sum.is_one());
        for l in ClassLabel::ALL {
            assert!(
                s.deviation(l) < s.tolerance(l),
                "class {l}: freq {} vs density {}",
                s.frequency(l),
                ChebotarevStats::density_f64(l)
            );
        }
        assert!(s.all_within_tolerance());
    }
}
