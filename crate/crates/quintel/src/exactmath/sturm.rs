//! Real root counting for squarefree integer polynomials via Sturm chains.

use num::{BigInt, Signed, Zero};

use super::intpoly::IntPoly;
use super::ratpoly::RatPoly;

/// Number of distinct real roots of `f`, which must be squarefree.
///
/// Uses the classical Sturm sequence p0 = f, p1 = f', p_{k+1} = -rem(p_{k-1}, p_k)
/// and counts the drop in sign variations between -inf and +inf, where the
/// sign at ±inf is the sign of the leading coefficient (adjusted by parity
/// of the degree at -inf).
pub fn real_root_count(f: &IntPoly) -> usize {
    let d = match f.degree() {
        None | Some(0) => return 0,
        Some(d) => d,
    };
    let mut chain: Vec<RatPoly> = Vec::with_capacity(d + 1);
    chain.push(f.to_rat_poly());
    chain.push(f.derivative().to_rat_poly());
    loop {
        let n = chain.len();
        let r = chain[n - 2].rem(&chain[n - 1]);
        if r.is_zero() {
            break;
        }
        chain.push(r.neg());
    }

    let sign_at = |neg_inf: bool| -> Vec<i8> {
        chain
            .iter()
            .filter_map(|p| {
                let deg = p.degree()?;
                let lead = p.leading().unwrap();
                let mut s: i8 = if lead.numer().is_positive() { 1 } else { -1 };
                if neg_inf && deg % 2 == 1 {
                    s = -s;
                }
                Some(s)
            })
            .collect()
    };

    let variations = |signs: &[i8]| signs.windows(2).filter(|w| w[0] != w[1]).count();
    variations(&sign_at(true)) - variations(&sign_at(false))
}

/// True when `gcd(f, f') = 1`, i.e. `f` has no repeated complex roots.
pub fn is_squarefree(f: &IntPoly) -> bool {
    match f.degree() {
        None => false,
        Some(0) => true,
        Some(_) => {
            let disc_like: BigInt = f.resultant(&f.derivative());
            !disc_like.is_zero()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn x5_minus_x_has_three_real_roots() {
        // Roots 0, ±1 real and ±i complex.
        let f = IntPoly::from_i64(&[0, -1, 0, 0, 0, 1]);
        assert!(is_squarefree(&f));
        assert_eq!(real_root_count(&f), 3);
    }

    #[test]
    fn totally_real_quintic() {
        // x^5 + x^4 - 4x^3 - 3x^2 + 3x + 1 generates the real quintic subfield
        // of the 11th cyclotomic field: all five roots are real.
        let f = IntPoly::from_i64(&[1, 3, -3, -4, 1, 1]);
        assert_eq!(real_root_count(&f), 5);
    }

    #[test]
    fn no_real_roots() {
        let f = IntPoly::from_i64(&[1, 0, 1]); // x^2 + 1
        assert_eq!(real_root_count(&f), 0);
        let g = IntPoly::from_i64(&[2, 0, 1, 0, 1]); // x^4 + x^2 + 2 > 0
        assert_eq!(real_root_count(&g), 0);
    }

    #[test]
    fn linear_and_constant() {
        assert_eq!(real_root_count(&IntPoly::from_i64(&[-3, 2])), 1);
        assert_eq!(real_root_count(&IntPoly::from_i64(&[7])), 0);
        assert_eq!(real_root_count(&IntPoly::new(vec![])), 0);
    }
}
