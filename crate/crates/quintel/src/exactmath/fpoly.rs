//! Polynomial arithmetic over prime fields F_p and distinct-degree
//! factorization, used to read off the factorization type of a quintic
//! modulo an unramified prime.

use num::BigInt;
use thiserror::Error;

use super::intpoly::IntPoly;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FactorError {
    #[error("prime {0} is ramified (f mod p is not squarefree)")]
    RamifiedPrime(u64),
    #[error("leading coefficient of f vanishes mod {0}")]
    LeadingVanishes(u64),
    #[error("modulus {0} is not prime")]
    NotPrime(u64),
}

/// Dense polynomial over F_p, lowest degree first, coefficients in [0, p).
/// Invariant: no trailing zeros; the zero polynomial is the empty vec.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FPoly {
    p: u64,
    c: Vec<u64>,
}

impl FPoly {
    pub fn new(p: u64, mut c: Vec<u64>) -> Self {
        for a in &mut c {
            *a %= p;
        }
        while c.last() == Some(&0) {
            c.pop();
        }
        FPoly { p, c }
    }

    pub fn from_int_poly(f: &IntPoly, p: u64) -> Self {
        let pb = BigInt::from(p);
        let c = f
            .coeffs()
            .iter()
            .map(|a| {
                let r = ((a % &pb) + &pb) % &pb;
                u64::try_from(r).expect("residue fits in u64")
            })
            .collect();
        FPoly::new(p, c)
    }

    pub fn x(p: u64) -> Self {
        FPoly::new(p, vec![0, 1])
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.c.is_empty() {
            None
        } else {
            Some(self.c.len() - 1)
        }
    }

    fn mulmod(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.p as u128) as u64
    }

    fn inv_scalar(&self, a: u64) -> u64 {
        // Fermat: a^(p-2) mod p.
        let mut base = a % self.p;
        let mut e = self.p - 2;
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mulmod(acc, base);
            }
            base = self.mulmod(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn monic(&self) -> FPoly {
        match self.c.last() {
            None | Some(1) => self.clone(),
            Some(&lead) => {
                let inv = self.inv_scalar(lead);
                FPoly::new(self.p, self.c.iter().map(|&a| self.mulmod(a, inv)).collect())
            }
        }
    }

    pub fn mul(&self, other: &FPoly) -> FPoly {
        if self.is_zero() || other.is_zero() {
            return FPoly::new(self.p, vec![]);
        }
        let mut out = vec![0u64; self.c.len() + other.c.len() - 1];
        for (i, &a) in self.c.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.c.iter().enumerate() {
                let t = out[i + j] + self.mulmod(a, b);
                out[i + j] = t % self.p;
            }
        }
        FPoly::new(self.p, out)
    }

    pub fn rem(&self, m: &FPoly) -> FPoly {
        let dm = m.degree().expect("nonzero modulus");
        let mut r = self.c.clone();
        let lead_inv = self.inv_scalar(*m.c.last().unwrap());
        while r.len() > dm {
            let k = r.len() - 1 - dm;
            let q = self.mulmod(*r.last().unwrap(), lead_inv);
            if q != 0 {
                for (j, &mc) in m.c.iter().enumerate() {
                    let sub = self.mulmod(q, mc);
                    r[k + j] = (r[k + j] + self.p - sub) % self.p;
                }
            }
            r.pop();
            while r.last() == Some(&0) && r.len() > dm.min(r.len()) {
                // trailing zeros below the modulus degree are fine to keep
                break;
            }
        }
        FPoly::new(self.p, r)
    }

    pub fn gcd(&self, other: &FPoly) -> FPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> FPoly {
        if self.c.len() <= 1 {
            return FPoly::new(self.p, vec![]);
        }
        let c = self
            .c
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &a)| self.mulmod(a, (i as u64) % self.p))
            .collect();
        FPoly::new(self.p, c)
    }

    /// x^(p^d) mod self, by repeated p-th powering via square-and-multiply.
    fn x_pow_p_tower(&self, d: usize) -> FPoly {
        let mut acc = FPoly::x(self.p).rem(self);
        for _ in 0..d {
            acc = self.pow_mod(&acc, self.p);
        }
        acc
    }

    fn pow_mod(&self, base: &FPoly, mut e: u64) -> FPoly {
        let mut acc = FPoly::new(self.p, vec![1]);
        let mut b = base.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&b).rem(self);
            }
            b = b.mul(&b).rem(self);
            e >>= 1;
        }
        acc
    }
}

fn sub(p: u64, a: &FPoly, b: &FPoly) -> FPoly {
    let n = a.c.len().max(b.c.len());
    let mut out = vec![0u64; n];
    for i in 0..n {
        let x = a.c.get(i).copied().unwrap_or(0);
        let y = b.c.get(i).copied().unwrap_or(0);
        out[i] = (x + p - y) % p;
    }
    FPoly::new(p, out)
}

/// Degrees (with multiplicity, sorted ascending) of the irreducible factors
/// of `f` modulo `p`, computed by distinct-degree factorization.
///
/// For monic `f`, `p` divides `disc(f)` exactly when `f mod p` has a repeated
/// factor; such primes are rejected as [`FactorError::RamifiedPrime`] since
/// the factorization type then no longer reads off a Frobenius cycle type.
pub fn factor_degrees_mod_p(f: &IntPoly, p: u64) -> Result<Vec<usize>, FactorError> {
    if !super::primes::is_prime(p) {
        return Err(FactorError::NotPrime(p));
    }
    let fp = FPoly::from_int_poly(f, p);
    let n = match f.degree() {
        Some(n) => n,
        None => return Ok(vec![]),
    };
    if fp.degree() != Some(n) {
        return Err(FactorError::LeadingVanishes(p));
    }
    let fp = fp.monic();
    let g = fp.gcd(&fp.derivative());
    if g.degree() != Some(0) {
        return Err(FactorError::RamifiedPrime(p));
    }

    // Stage d removes Prod of irreducible factors of degree exactly d:
    // they are precisely the common factors with x^(p^d) - x.
    let mut degrees = Vec::new();
    let mut rem = fp;
    let mut d = 0usize;
    while rem.degree().map_or(false, |dr| dr >= 2 * (d + 1)) {
        d += 1;
        let xq = rem.x_pow_p_tower(d);
        let diff = sub(p, &xq, &FPoly::x(p).rem(&rem));
        let g = rem.gcd(&diff);
        if let Some(dg) = g.degree() {
            if dg > 0 {
                debug_assert_eq!(dg % d, 0, "degree-{d} stage yields multiple of {d}");
                for _ in 0..dg / d {
                    degrees.push(d);
                }
                // divide rem by g
                rem = divide_exact(&rem, &g);
            }
        }
    }
    if let Some(dr) = rem.degree() {
        if dr > 0 {
            // whatever remains is a single irreducible factor
            degrees.push(dr);
        }
    }
    degrees.sort_unstable();
    debug_assert_eq!(degrees.iter().sum::<usize>(), n);
    Ok(degrees)
}

fn divide_exact(a: &FPoly, b: &FPoly) -> FPoly {
    // long division; remainder asserted zero
    let p = a.p;
    let db = b.degree().expect("nonzero divisor");
    let mut r = a.c.clone();
    let lead_inv = a.inv_scalar(*b.c.last().unwrap());
    let mut q = vec![0u64; r.len().saturating_sub(db)];
    while r.len() > db {
        let k = r.len() - 1 - db;
        let qc = a.mulmod(*r.last().unwrap(), lead_inv);
        q[k] = qc;
        if qc != 0 {
            for (j, &bc) in b.c.iter().enumerate() {
                let sub = a.mulmod(qc, bc);
                r[k + j] = (r[k + j] + p - sub) % p;
            }
        }
        r.pop();
    }
    debug_assert!(r.iter().all(|&x| x == 0), "exact division");
    FPoly::new(p, q)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Trial-division oracle: factor f mod p by dividing out monic
    /// irreducibles in degree order. Only practical for small p.
    fn oracle_degrees(f: &IntPoly, p: u64) -> Vec<usize> {
        let fp = FPoly::from_int_poly(f, p).monic();
        let mut rem = fp;
        let mut out = Vec::new();
        'outer: loop {
            let dr = match rem.degree() {
                None | Some(0) => break,
                Some(d) => d,
            };
            for d in 1..=dr {
                for cand in monic_polys(p, d) {
                    if !is_irreducible_small(&cand) {
                        continue;
                    }
                    let r = rem.rem(&cand);
                    if r.is_zero() {
                        out.push(d);
                        rem = divide_exact(&rem, &cand);
                        continue 'outer;
                    }
                }
            }
            unreachable!("no factor found");
        }
        out.sort_unstable();
        out
    }

    fn monic_polys(p: u64, d: usize) -> Vec<FPoly> {
        let mut out = Vec::new();
        let total = (p as usize).pow(d as u32);
        for mut k in 0..total {
            let mut c = Vec::with_capacity(d + 1);
            for _ in 0..d {
                c.push((k % p as usize) as u64);
                k /= p as usize;
            }
            c.push(1);
            out.push(FPoly::new(p, c));
        }
        out
    }

    fn is_irreducible_small(f: &FPoly) -> bool {
        let d = f.degree().unwrap();
        if d == 1 {
            return true;
        }
        for e in 1..=d / 2 {
            for cand in monic_polys(f.p, e) {
                if f.rem(&cand).is_zero() {
                    return false;
                }
            }
        }
        true
    }

    #[test]
    fn matches_trial_division_oracle() {
        let polys = [
            IntPoly::from_i64(&[1, 1, -1, -1, 0, 1]),
            IntPoly::from_i64(&[1, 3, -3, -4, 1, 1]),
            IntPoly::from_i64(&[-2, 0, 0, 0, 0, 1]),
            IntPoly::from_i64(&[3, -1, 2, 0, 1]),
        ];
        for f in &polys {
            for p in [2u64, 3, 5, 7, 11, 13] {
                match factor_degrees_mod_p(f, p) {
                    Ok(degs) => assert_eq!(degs, oracle_degrees(f, p), "f={f} p={p}"),
                    Err(FactorError::RamifiedPrime(_)) => {
                        // oracle agrees f mod p is not squarefree
                        let fp = FPoly::from_int_poly(f, p).monic();
                        let g = fp.gcd(&fp.derivative());
                        assert!(g.degree() != Some(0), "f={f} p={p}");
                    }
                    Err(e) => panic!("unexpected error {e} for f={f} p={p}"),
                }
            }
        }
    }

    #[test]
    fn ramified_detection() {
        // (x-1)^2 = x^2 - 2x + 1 is ramified everywhere it reduces badly;
        // disc(x^2-2x+1) = 0 so every p is "ramified".
        let f = IntPoly::from_i64(&[1, -2, 1]);
        assert_eq!(factor_degrees_mod_p(&f, 7), Err(FactorError::RamifiedPrime(7)));
        // x^5 - x has disc -256 = -2^8: ramified exactly at 2.
        let g = IntPoly::from_i64(&[0, -1, 0, 0, 0, 1]);
        assert_eq!(factor_degrees_mod_p(&g, 2), Err(FactorError::RamifiedPrime(2)));
        assert_eq!(factor_degrees_mod_p(&g, 3).unwrap(), vec![1, 1, 1, 2]);
        // x^5 - x mod 5: x^5 - x = prod over F_5 of (x - a)
        assert_eq!(factor_degrees_mod_p(&g, 5).unwrap(), vec![1, 1, 1, 1, 1]);
    }

    #[test]
    fn rejects_composite_modulus() {
        let f = IntPoly::from_i64(&[1, 1, 1]);
        assert_eq!(factor_degrees_mod_p(&f, 10), Err(FactorError::NotPrime(10)));
    }

    #[test]
    fn large_prime_inert() {
        // x^2 + 1 mod p is irreducible iff p = 3 mod 4.
        let f = IntPoly::from_i64(&[1, 0, 1]);
        assert_eq!(factor_degrees_mod_p(&f, 999983).unwrap(), vec![2]); // 999983 % 4 == 3
        assert_eq!(factor_degrees_mod_p(&f, 999961).unwrap(), vec![1, 1]); // 999961 % 4 == 1
    }
}
