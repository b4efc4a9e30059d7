//! Frobenius data at a single prime, and the finite mod-p irreducibility
//! certificate that justifies reading factor degrees as cycle types.

use std::fmt;

use crate::exactmath::{factor_degrees_mod_p, is_squarefree, primes_up_to, FactorError, IntPoly};
use crate::groups::{cycle_type_label, ClassLabel};

use super::QuinticError;

/// Splitting data of one prime: the factor-degree partition of f mod p
/// (ascending) and its class label, or a ramified flag when p divides the
/// discriminant.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FrobeniusRecord {
    pub p: u64,
    /// Ascending factor degrees; absent exactly when `p` is ramified.
    pub partition: Option<Vec<usize>>,
    /// Class of Frobenius at `p`; absent exactly when `p` is ramified.
    pub class: Option<ClassLabel>,
}

impl FrobeniusRecord {
    pub fn is_ramified(&self) -> bool {
        self.partition.is_none()
    }

    /// Partition in cache syntax: `"1,2,2"`, or `"-"` when ramified.
    pub fn partition_string(&self) -> String {
        match &self.partition {
            Some(parts) => parts
                .iter()
                .map(usize::to_string)
                .collect::<Vec<_>>()
                .join(","),
            None => "-".to_string(),
        }
    }
}

impl fmt::Display for FrobeniusRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.class {
            Some(class) => write!(f, "{}\t{}\t{}", self.p, self.partition_string(), class),
            None => write!(f, "{}\tramified\t-", self.p),
        }
    }
}

pub(super) fn check_monic_quintic(f: &IntPoly) -> Result<(), QuinticError> {
    if f.degree() == Some(5) && f.is_monic() {
        Ok(())
    } else {
        Err(QuinticError::NotMonicQuintic(f.to_coeff_list()))
    }
}

/// Frobenius class of `p` in the field cut out by `f`.
///
/// Ramified primes come back as flagged records rather than errors;
/// composite `p` is an error.  Interpreting the record as a Frobenius
/// class is only sound when `f` is irreducible (see
/// [`certify_irreducible`]); the higher-level entry points enforce that.
pub fn frobenius_class(f: &IntPoly, p: u64) -> Result<FrobeniusRecord, QuinticError> {
    check_monic_quintic(f)?;
    match factor_degrees_mod_p(f, p) {
        Ok(partition) => {
            let class = cycle_type_label(&partition)?;
            Ok(FrobeniusRecord {
                p,
                partition: Some(partition),
                class: Some(class),
            })
        }
        Err(FactorError::RamifiedPrime(_)) => Ok(FrobeniusRecord {
            p,
            partition: None,
            class: None,
        }),
        Err(e) => Err(e.into()),
    }
}

/// Mod-p witnesses that jointly rule out every proper rational factor
/// degree.
///
/// A rational factor of degree d forces d to be a subset sum of the factor
/// degrees mod every unramified prime, so once the intersection of those
/// subset-sum sets misses {1, 2, 3, 4} entirely, f is irreducible.  A
/// single prime with partition [5] settles it outright.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IrreducibilityCertificate {
    /// (prime, partition) pairs, each of which shrank the surviving set.
    pub witnesses: Vec<(u64, Vec<usize>)>,
}

/// Largest prime tried by [`certify_irreducible`].
const CERTIFICATE_BOUND: u64 = 500;

pub fn certify_irreducible(f: &IntPoly) -> Result<IrreducibilityCertificate, QuinticError> {
    check_monic_quintic(f)?;
    if !is_squarefree(f) {
        return Err(QuinticError::NotSquarefree);
    }
    // Bitmask of surviving proper factor degrees (bits 1..=4).
    let mut possible: u8 = 0b1_1110;
    let mut witnesses = Vec::new();
    for p in primes_up_to(CERTIFICATE_BOUND) {
        let partition = match factor_degrees_mod_p(f, p) {
            Ok(parts) => parts,
            Err(FactorError::RamifiedPrime(_)) => continue,
            Err(e) => return Err(e.into()),
        };
        // Subset sums of the partition as a bitmask; parts are <= 5 so the
        // shift never reaches the u8 width.
        let mut sums: u8 = 1;
        for &d in &partition {
            sums |= sums << d;
        }
        let next = possible & sums;
        if next != possible {
            witnesses.push((p, partition));
            possible = next;
        }
        if possible == 0 {
            return Ok(IrreducibilityCertificate { witnesses });
        }
    }
    let remaining = (1..=4).filter(|d| possible >> d & 1 == 1).collect();
    Err(QuinticError::IrreducibilityNotCertified {
        remaining,
        bound: CERTIFICATE_BOUND,
    })
}

#[cfg(test)]
mod tests {
    use num::{BigInt, Zero};
    use proptest::prelude::*;

    use super::*;

    fn example_field() -> IntPoly {
        // x^5 - x^3 - x^2 + x + 1, discriminant 1609
        IntPoly::from_i64(&[1, 1, -1, -1, 0, 1])
    }

    #[test]
    fn example_field_small_frobenius() {
        let f = example_field();
        let r2 = frobenius_class(&f, 2).unwrap();
        assert_eq!(r2.partition.as_deref(), Some(&[5][..]));
        assert_eq!(r2.class, Some(ClassLabel::C5A));
        // 5 is inert
        let r5 = frobenius_class(&f, 5).unwrap();
        assert_eq!(r5.partition.as_deref(), Some(&[5][..]));
        assert_eq!(r5.class, Some(ClassLabel::C5A));
        let r1609 = frobenius_class(&f, 1609).unwrap();
        assert!(r1609.is_ramified());
        assert_eq!(r1609.class, None);
        assert_eq!(r1609.partition_string(), "-");
    }

    #[test]
    fn rejects_bad_inputs() {
        let quartic = IntPoly::from_i64(&[1, 0, 0, 0, 1]);
        assert!(matches!(
            frobenius_class(&quartic, 2),
            Err(QuinticError::NotMonicQuintic(_))
        ));
        let nonmonic = IntPoly::from_i64(&[1, 1, -1, -1, 0, 2]);
        assert!(matches!(
            frobenius_class(&nonmonic, 2),
            Err(QuinticError::NotMonicQuintic(_))
        ));
        assert!(matches!(
            frobenius_class(&example_field(), 6),
            Err(QuinticError::Factor(FactorError::NotPrime(6)))
        ));
    }

    #[test]
    fn certificate_for_example_field_is_one_inert_prime() {
        let cert = certify_irreducible(&example_field()).unwrap();
        assert_eq!(cert.witnesses, vec![(2, vec![5])]);
    }

    #[test]
    fn reducible_and_degenerate_inputs_are_rejected() {
        // x^5 - x = x(x-1)(x+1)(x^2+1): squarefree but reducible, with a
        // rational root, so degree 1 survives every mod-p test.
        let red = IntPoly::from_i64(&[0, -1, 0, 0, 0, 1]);
        match certify_irreducible(&red) {
            Err(QuinticError::IrreducibilityNotCertified { remaining, .. }) => {
                assert!(remaining.contains(&1));
            }
            other => panic!("expected uncertified, got {other:?}"),
        }
        // (x^2+1)(x^3-2): exactly the degrees 2 and 3 survive.
        let prod = IntPoly::from_i64(&[-2, 0, -2, 1, 0, 1]);
        match certify_irreducible(&prod) {
            Err(QuinticError::IrreducibilityNotCertified { remaining, .. }) => {
                assert_eq!(remaining, vec![2, 3]);
            }
            other => panic!("expected uncertified, got {other:?}"),
        }
        // x^5: not squarefree.
        let x5 = IntPoly::from_i64(&[0, 0, 0, 0, 0, 1]);
        assert!(matches!(
            certify_irreducible(&x5),
            Err(QuinticError::NotSquarefree)
        ));
    }

    proptest! {
        // The partition/label dictionary, on random monic quintics: ramified
        // iff p | disc, partition sums to 5, label matches the cycle type,
        // class order is the lcm of the parts.
        #[test]
        fn frobenius_dictionary(
            c in proptest::array::uniform5(-6i64..=6),
            pidx in 0usize..8,
        ) {
            let f = IntPoly::from_i64(&[c[0], c[1], c[2], c[3], c[4], 1]);
            let p = [2u64, 3, 5, 7, 11, 13, 17, 19][pidx];
            let rec = frobenius_class(&f, p).unwrap();
            let disc = f.disc_quintic().unwrap();
            prop_assert_eq!(rec.is_ramified(), (disc % BigInt::from(p)).is_zero());
            if let (Some(parts), Some(class)) = (&rec.partition, rec.class) {
                prop_assert_eq!(parts.iter().sum::<usize>(), 5);
                prop_assert!(parts.windows(2).all(|w| w[0] <= w[1]));
                prop_assert_eq!(cycle_type_label(parts).unwrap(), class);
                let lcm = parts.iter().fold(1, |a, &b| num::integer::lcm(a, b));
                prop_assert_eq!(class.order(), lcm);
            }
        }
    }
}
