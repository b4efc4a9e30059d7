//! Exact arithmetic in the cyclotomic field Q(zeta_120).
//!
//! 120 is the exponent of GL2(F5), so every character value that appears in
//! this crate lives here. Elements are stored on the power basis
//! `1, z, ..., z^31` (phi(120) = 32) with rational coefficients, always fully
//! reduced modulo the 120th cyclotomic polynomial.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::OnceLock;

use num::{BigInt, One, Signed, Zero};
use serde_json::{json, Value};
use thiserror::Error;

use super::rat::{rat_int, Rat};
use super::ratpoly::RatPoly;

/// The cyclotomic level: all roots of unity of order dividing this are
/// representable exactly.
pub const CYC_LEVEL: u32 = 120;

const DIM: usize = 32; // phi(120)

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CycError {
    #[error("unsupported root of unity order {0} (must divide {CYC_LEVEL})")]
    UnsupportedRoot(u32),
    #[error("division by zero in Q(zeta_120)")]
    DivisionByZero,
    #[error("galois exponent {0} not coprime to {CYC_LEVEL}")]
    BadGaloisExponent(u32),
}

struct Tables {
    /// `pow[k]` is the reduction of z^k onto the power basis, 0 <= k < 120.
    pow: Vec<[i64; DIM]>,
    /// Coefficients of the 120th cyclotomic polynomial (degree 32, monic).
    phi: Vec<i64>,
}

fn divisors(n: u32) -> Vec<u32> {
    let mut d: Vec<u32> = (1..=n).filter(|k| n % k == 0).collect();
    d.sort_unstable();
    d
}

/// Exact division of integer polynomials; panics unless it divides exactly.
fn poly_div_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut r = num.to_vec();
    let dd = den.len() - 1;
    assert_eq!(*den.last().unwrap(), 1, "divisor must be monic");
    let mut q = vec![0i64; r.len() - dd];
    for k in (dd..r.len()).rev() {
        let f = r[k];
        if f != 0 {
            q[k - dd] = f;
            for (j, &dc) in den.iter().enumerate() {
                r[k - dd + j] -= f * dc;
            }
        }
    }
    assert!(r.iter().all(|&x| x == 0), "non-exact polynomial division");
    q
}

/// nth cyclotomic polynomial as integer coefficients, lowest degree first.
fn cyclotomic(n: u32, cache: &mut Vec<Option<Vec<i64>>>) -> Vec<i64> {
    if let Some(p) = &cache[n as usize] {
        return p.clone();
    }
    // (x^n - 1) / prod_{d | n, d < n} Phi_d
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    let mut acc = num;
    for d in divisors(n) {
        if d == n {
            continue;
        }
        let phi_d = cyclotomic(d, cache);
        acc = poly_div_exact(&acc, &phi_d);
    }
    cache[n as usize] = Some(acc.clone());
    acc
}

fn build_tables() -> Tables {
    let mut cache = vec![None; CYC_LEVEL as usize + 1];
    let phi = cyclotomic(CYC_LEVEL, &mut cache);
    assert_eq!(phi.len(), DIM + 1);
    assert_eq!(phi[DIM], 1);

    // z^32 = -(phi[0] + phi[1] x + ... + phi[31] x^31)
    let mut pow: Vec<[i64; DIM]> = Vec::with_capacity(CYC_LEVEL as usize);
    let mut cur = [0i64; DIM];
    cur[0] = 1;
    pow.push(cur);
    for _ in 1..CYC_LEVEL {
        let prev = *pow.last().unwrap();
        let mut next = [0i64; DIM];
        let carry = prev[DIM - 1];
        next[1..DIM].copy_from_slice(&prev[..DIM - 1]);
        if carry != 0 {
            for (m, slot) in next.iter_mut().enumerate() {
                *slot -= carry * phi[m];
            }
        }
        pow.push(next);
    }
    // Sanity: z^120 would close the cycle back to 1.
    {
        let last = pow[119];
        let mut wrap = [0i64; DIM];
        let carry = last[DIM - 1];
        wrap[1..DIM].copy_from_slice(&last[..DIM - 1]);
        if carry != 0 {
            for (m, slot) in wrap.iter_mut().enumerate() {
                *slot -= carry * phi[m];
            }
        }
        let mut one = [0i64; DIM];
        one[0] = 1;
        assert_eq!(wrap, one, "zeta^120 != 1 in reduction tables");
    }
    Tables { pow, phi }
}

fn tables() -> &'static Tables {
    static T: OnceLock<Tables> = OnceLock::new();
    T.get_or_init(build_tables)
}

/// An element of Q(zeta_120) on the power basis.
///
/// Equality is exact field equality (the basis representation is canonical).
/// The derived `Ord` is the lexicographic order on coefficient vectors; it is
/// used only as a deterministic tie-breaker, not as a numeric order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cyc {
    c: Vec<Rat>,
}

/// zeta_m^j for m dividing 120.
pub fn cyc_root(m: u32, j: i64) -> Result<Cyc, CycError> {
    if m == 0 || CYC_LEVEL % m != 0 {
        return Err(CycError::UnsupportedRoot(m));
    }
    let step = (CYC_LEVEL / m) as i64;
    let idx = (step * j).rem_euclid(CYC_LEVEL as i64) as usize;
    Ok(Cyc::from_pow_row(idx))
}

impl Cyc {
    fn from_pow_row(idx: usize) -> Cyc {
        let row = &tables().pow[idx];
        Cyc {
            c: row.iter().map(|&x| rat_int(x)).collect(),
        }
    }

    pub fn zero() -> Cyc {
        Cyc {
            c: vec![Rat::zero(); DIM],
        }
    }

    pub fn one() -> Cyc {
        Cyc::from_int(1)
    }

    pub fn from_int(n: i64) -> Cyc {
        let mut c = vec![Rat::zero(); DIM];
        c[0] = rat_int(n);
        Cyc { c }
    }

    pub fn from_rat(r: Rat) -> Cyc {
        let mut c = vec![Rat::zero(); DIM];
        c[0] = r;
        Cyc { c }
    }

    /// The imaginary unit i = zeta_4.
    pub fn i_unit() -> Cyc {
        cyc_root(4, 1).unwrap()
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Zero::is_zero)
    }

    /// Some(r) iff the element is rational.
    pub fn as_rat(&self) -> Option<Rat> {
        if self.c[1..].iter().all(Zero::is_zero) {
            Some(self.c[0].clone())
        } else {
            None
        }
    }

    /// Some(n) iff the element is a rational integer.
    pub fn as_int(&self) -> Option<BigInt> {
        let r = self.as_rat()?;
        if r.is_integer() {
            Some(r.to_integer())
        } else {
            None
        }
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.c
    }

    /// Applies the Galois automorphism zeta -> zeta^t (t coprime to 120).
    pub fn galois(&self, t: u32) -> Result<Cyc, CycError> {
        if num::integer::gcd(t, CYC_LEVEL) != 1 {
            return Err(CycError::BadGaloisExponent(t));
        }
        let tab = tables();
        let mut out = vec![Rat::zero(); DIM];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let row = &tab.pow[(i * t as usize) % CYC_LEVEL as usize];
            for (m, &x) in row.iter().enumerate() {
                if x != 0 {
                    out[m] += a * rat_int(x);
                }
            }
        }
        Ok(Cyc { c: out })
    }

    /// Complex conjugation, zeta -> zeta^{-1}.
    pub fn conj(&self) -> Cyc {
        self.galois(CYC_LEVEL - 1).expect("119 is coprime to 120")
    }

    /// True iff fixed by complex conjugation.
    pub fn is_totally_real(&self) -> bool {
        self.conj() == *self
    }

    /// a * conj(a); totally real and non-negative in every embedding.
    pub fn norm_sq(&self) -> Cyc {
        self * &self.conj()
    }

    /// Multiplicative inverse via the extended Euclidean algorithm modulo
    /// the 120th cyclotomic polynomial.
    pub fn inv(&self) -> Result<Cyc, CycError> {
        if self.is_zero() {
            return Err(CycError::DivisionByZero);
        }
        let phi = RatPoly::new(tables().phi.iter().map(|&x| rat_int(x)).collect());
        let me = RatPoly::new(self.c.clone());
        let (g, s, _) = me.ext_gcd(&phi);
        debug_assert_eq!(g, RatPoly::one(), "cyclotomic polynomial is irreducible");
        let mut c = s.coeffs().to_vec();
        c.resize(DIM, Rat::zero());
        Ok(Cyc { c })
    }

    pub fn div(&self, other: &Cyc) -> Result<Cyc, CycError> {
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, k: i64) -> Result<Cyc, CycError> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = Cyc::one();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            sq = &sq * &sq;
            e >>= 1;
        }
        Ok(acc)
    }

    /// Multiplicative order if the element is a root of unity (the only
    /// orders possible in Q(zeta_120) divide 120), otherwise `None`.
    pub fn mult_order(&self) -> Option<u32> {
        if self.is_zero() {
            return None;
        }
        for d in divisors(CYC_LEVEL) {
            if self.pow(d as i64).unwrap() == Cyc::one() {
                return Some(d);
            }
        }
        None
    }

    /// Numeric value under the embedding zeta -> exp(2 pi i / 120).
    pub fn eval_complex(&self) -> (f64, f64) {
        let mut re = 0.0;
        let mut im = 0.0;
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let x = rat_to_f64(a);
            let th = 2.0 * std::f64::consts::PI * (i as f64) / (CYC_LEVEL as f64);
            re += x * th.cos();
            im += x * th.sin();
        }
        (re, im)
    }

    /// 12-digit decimal approximation, e.g. `-0.866025403784+0.500000000000i`.
    pub fn approx_string(&self) -> String {
        let (re, im) = self.eval_complex();
        let re = if re == 0.0 { 0.0 } else { re }; // normalise -0.0
        let im = if im == 0.0 { 0.0 } else { im };
        if im >= 0.0 {
            format!("{re:.12}+{im:.12}i")
        } else {
            format!("{re:.12}{im:.12}i")
        }
    }

    /// Stable JSON form: exact coefficients plus a 12-digit approximation.
    pub fn json(&self) -> Value {
        json!({
            "coeffs": self.c.iter().map(|r| r.to_string()).collect::<Vec<_>>(),
            "approx": self.approx_string(),
        })
    }
}

fn rat_to_f64(r: &Rat) -> f64 {
    // Good enough for diagnostics: coefficients in this crate are tiny.
    let n = r.numer();
    let d = r.denom();
    let nf = n.to_string().parse::<f64>().unwrap_or(f64::NAN);
    let df = d.to_string().parse::<f64>().unwrap_or(f64::NAN);
    nf / df
}

impl Add for &Cyc {
    type Output = Cyc;
    fn add(self, rhs: &Cyc) -> Cyc {
        let c = self
            .c
            .iter()
            .zip(&rhs.c)
            .map(|(a, b)| a + b)
            .collect();
        Cyc { c }
    }
}

impl Sub for &Cyc {
    type Output = Cyc;
    fn sub(self, rhs: &Cyc) -> Cyc {
        let c = self
            .c
            .iter()
            .zip(&rhs.c)
            .map(|(a, b)| a - b)
            .collect();
        Cyc { c }
    }
}

impl Neg for &Cyc {
    type Output = Cyc;
    fn neg(self) -> Cyc {
        Cyc {
            c: self.c.iter().map(|a| -a).collect(),
        }
    }
}

impl Mul for &Cyc {
    type Output = Cyc;
    fn mul(self, rhs: &Cyc) -> Cyc {
        let tab = tables();
        let mut acc = vec![Rat::zero(); 2 * DIM - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.c.iter().enumerate() {
                if !b.is_zero() {
                    acc[i + j] += a * b;
                }
            }
        }
        let mut out: Vec<Rat> = acc[..DIM].to_vec();
        for (k, a) in acc.iter().enumerate().skip(DIM) {
            if a.is_zero() {
                continue;
            }
            let row = &tab.pow[k];
            for (m, &x) in row.iter().enumerate() {
                if x != 0 {
                    out[m] += a * rat_int(x);
                }
            }
        }
        Cyc { c: out }
    }
}

macro_rules! owned_ops {
    ($($tr:ident :: $m:ident),*) => {$(
        impl $tr for Cyc {
            type Output = Cyc;
            fn $m(self, rhs: Cyc) -> Cyc { $tr::$m(&self, &rhs) }
        }
    )*};
}
owned_ops!(Add::add, Sub::sub, Mul::mul);

impl Neg for Cyc {
    type Output = Cyc;
    fn neg(self) -> Cyc {
        -&self
    }
}

impl<'a> std::iter::Sum<&'a Cyc> for Cyc {
    fn sum<I: Iterator<Item = &'a Cyc>>(iter: I) -> Cyc {
        iter.fold(Cyc::zero(), |acc, x| &acc + x)
    }
}

impl std::iter::Sum for Cyc {
    fn sum<I: Iterator<Item = Cyc>>(iter: I) -> Cyc {
        iter.fold(Cyc::zero(), |acc, x| &acc + &x)
    }
}

impl fmt::Display for Cyc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let mag = a.abs();
            let sign = a.is_negative();
            if first {
                if sign {
                    write!(f, "-")?;
                }
                first = false;
            } else if sign {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if i == 0 {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                if i == 1 {
                    write!(f, "z")?;
                } else {
                    write!(f, "z^{i}")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Cyc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyc({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::super::rat::rat;
    use super::*;

    #[test]
    fn phi_120_explicit() {
        // Phi_120 = x^32 + x^28 - x^20 - x^16 - x^12 + x^4 + 1
        let phi = &tables().phi;
        let mut want = vec![0i64; 33];
        for (d, c) in [(32, 1), (28, 1), (20, -1), (16, -1), (12, -1), (4, 1), (0, 1)] {
            want[d] = c;
        }
        assert_eq!(phi, &want);
    }

    #[test]
    fn root_orders_exact() {
        // ord(zeta_m^j) = m / gcd(m, j)
        for m in [1u32, 2, 3, 4, 5, 6, 8, 10, 12, 15, 20, 24, 30, 40, 60, 120] {
            for j in 0..m {
                let r = cyc_root(m, j as i64).unwrap();
                let g = if j == 0 { m } else { num::integer::gcd(m, j) };
                assert_eq!(r.mult_order(), Some(m / g), "m={m} j={j}");
            }
        }
        assert_eq!(cyc_root(7, 1), Err(CycError::UnsupportedRoot(7)));
        assert_eq!(cyc_root(11, 1), Err(CycError::UnsupportedRoot(11)));
    }

    #[test]
    fn twelfth_root_sum_is_two() {
        // zeta_12^2 + zeta_12^-2 + zeta_12^4 + zeta_12^-4 + 1 + 1 = 2
        let w = |j| cyc_root(12, j).unwrap();
        let s = &(&(&w(2) + &w(-2)) + &(&w(4) + &w(-4))) + &Cyc::from_int(2);
        assert_eq!(s, Cyc::from_int(2));
    }

    #[test]
    fn norm_sq_of_hexagonal_sum_is_three() {
        // |omega^3 + omega + omega^-1 + omega^-3|^2 = 3 for omega = zeta_12
        let w = |j| cyc_root(12, j).unwrap();
        let s = &(&w(3) + &w(1)) + &(&w(-1) + &w(-3));
        assert_eq!(s.norm_sq(), Cyc::from_int(3));
    }

    #[test]
    fn conj_is_involution_and_matches_inverse_on_roots() {
        for j in 0..120 {
            let r = cyc_root(120, j).unwrap();
            assert_eq!(r.conj().conj(), r);
            assert_eq!(r.conj(), r.inv().unwrap());
        }
    }

    #[test]
    fn inversion_field_axiom() {
        let a = &(&cyc_root(120, 7).unwrap() + &Cyc::from_rat(rat(3, 2))) - &cyc_root(8, 3).unwrap();
        let inv = a.inv().unwrap();
        assert_eq!(&a * &inv, Cyc::one());
        assert_eq!(Cyc::zero().inv(), Err(CycError::DivisionByZero));
    }

    #[test]
    fn eval_complex_agrees_with_unit_circle() {
        let r = cyc_root(12, 1).unwrap();
        let (re, im) = r.eval_complex();
        assert!((re - (std::f64::consts::PI / 6.0).cos()).abs() < 1e-12);
        assert!((im - (std::f64::consts::PI / 6.0).sin()).abs() < 1e-12);
    }

    #[test]
    fn galois_checks() {
        let a = cyc_root(120, 1).unwrap();
        assert_eq!(a.galois(7).unwrap(), cyc_root(120, 7).unwrap());
        assert!(a.galois(2).is_err());
    }

    #[test]
    fn display_readable() {
        let a = &Cyc::from_int(2) - &cyc_root(120, 5).unwrap();
        assert_eq!(a.to_string(), "2 - z^5");
    }
}
