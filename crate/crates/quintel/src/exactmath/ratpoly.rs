//! Dense univariate polynomials over the rationals. Internal plumbing for
//! Sturm sequences, resultants and inversion in Q(zeta_120).

use super::rat::{rat_int, Rat};
use num::{One, Zero};

/// Polynomial with rational coefficients, lowest degree first. The zero
/// polynomial is the empty vector; otherwise the leading coefficient is
/// nonzero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatPoly {
    c: Vec<Rat>,
}

impl RatPoly {
    pub fn new(mut c: Vec<Rat>) -> Self {
        while c.last().is_some_and(Zero::is_zero) {
            c.pop();
        }
        RatPoly { c }
    }

    pub fn zero() -> Self {
        RatPoly { c: Vec::new() }
    }

    pub fn one() -> Self {
        RatPoly { c: vec![Rat::one()] }
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.c.is_empty() {
            None
        } else {
            Some(self.c.len() - 1)
        }
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.c
    }

    pub fn leading(&self) -> Option<&Rat> {
        self.c.last()
    }

    pub fn derivative(&self) -> RatPoly {
        if self.c.len() <= 1 {
            return RatPoly::zero();
        }
        let c = self
            .c
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, a)| a * rat_int(i as i64))
            .collect();
        RatPoly::new(c)
    }

    pub fn scale(&self, s: &Rat) -> RatPoly {
        RatPoly::new(self.c.iter().map(|a| a * s).collect())
    }

    pub fn neg(&self) -> RatPoly {
        RatPoly::new(self.c.iter().map(|a| -a).collect())
    }

    pub fn add(&self, other: &RatPoly) -> RatPoly {
        let n = self.c.len().max(other.c.len());
        let mut c = vec![Rat::zero(); n];
        for (i, a) in self.c.iter().enumerate() {
            c[i] += a;
        }
        for (i, b) in other.c.iter().enumerate() {
            c[i] += b;
        }
        RatPoly::new(c)
    }

    pub fn sub(&self, other: &RatPoly) -> RatPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &RatPoly) -> RatPoly {
        if self.is_zero() || other.is_zero() {
            return RatPoly::zero();
        }
        let mut c = vec![Rat::zero(); self.c.len() + other.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.c.iter().enumerate() {
                if !b.is_zero() {
                    c[i + j] += a * b;
                }
            }
        }
        RatPoly::new(c)
    }

    /// Euclidean division: returns `(q, r)` with `self = q*d + r` and
    /// `deg r < deg d`. Panics if `d` is zero.
    pub fn div_rem(&self, d: &RatPoly) -> (RatPoly, RatPoly) {
        assert!(!d.is_zero(), "division by the zero polynomial");
        let dd = d.degree().unwrap();
        let lead = d.leading().unwrap().clone();
        let mut r = self.c.clone();
        if r.len() < d.c.len() {
            return (RatPoly::zero(), RatPoly::new(r));
        }
        let mut q = vec![Rat::zero(); r.len() - dd];
        for k in (dd..r.len()).rev() {
            if r[k].is_zero() {
                continue;
            }
            let f = &r[k] / &lead;
            q[k - dd] = f.clone();
            for (j, dc) in d.c.iter().enumerate() {
                let t = dc * &f;
                r[k - dd + j] -= t;
            }
        }
        (RatPoly::new(q), RatPoly::new(r))
    }

    pub fn rem(&self, d: &RatPoly) -> RatPoly {
        self.div_rem(d).1
    }

    /// Extended gcd: returns `(g, s, t)` with `s*self + t*other = g` and `g`
    /// monic unless zero.
    pub fn ext_gcd(&self, other: &RatPoly) -> (RatPoly, RatPoly, RatPoly) {
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (RatPoly::one(), RatPoly::zero());
        let (mut t0, mut t1) = (RatPoly::zero(), RatPoly::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let s = s0.sub(&q.mul(&s1));
            let t = t0.sub(&q.mul(&t1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
            t0 = t1;
            t1 = t;
        }
        if let Some(l) = r0.leading().cloned() {
            let inv = Rat::one() / l;
            (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
        } else {
            (r0, s0, t0)
        }
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for a in self.c.iter().rev() {
            acc = acc * x + a;
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::super::rat::rat;
    use super::*;

    fn p(v: &[i64]) -> RatPoly {
        RatPoly::new(v.iter().map(|&x| rat_int(x)).collect())
    }

    #[test]
    fn div_rem_recombines() {
        let a = p(&[1, 0, -3, 0, 1, 2]);
        let b = p(&[2, 1, 1]);
        let (q, r) = a.div_rem(&b);
        assert_eq!(q.mul(&b).add(&r), a);
        assert!(r.degree() < b.degree());
    }

    #[test]
    fn ext_gcd_bezout() {
        let a = p(&[-1, 0, 1]); // x^2 - 1
        let b = p(&[1, 1]); // x + 1
        let (g, s, t) = a.ext_gcd(&b);
        assert_eq!(g, p(&[1, 1])); // monic gcd x + 1
        assert_eq!(s.mul(&a).add(&t.mul(&b)), g);
    }

    #[test]
    fn eval_horner() {
        let a = p(&[1, 2, 3]);
        assert_eq!(a.eval(&rat(1, 2)), rat(11, 4));
    }
}
