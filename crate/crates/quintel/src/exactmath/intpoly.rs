//! Integer polynomials: resultants, quintic discriminants, and the
//! coefficient-list parser used by the command-line front end.

use std::fmt;

use num::{BigInt, One, Signed, Zero};
use thiserror::Error;

use super::rat::Rat;
use super::ratpoly::RatPoly;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PolyError {
    #[error("polynomial must be monic")]
    NotMonic,
    #[error("expected degree {expected}, got {got}")]
    WrongDegree { expected: usize, got: usize },
    #[error("the zero polynomial is not allowed here")]
    ZeroPolynomial,
    #[error("bad coefficient list: {0}")]
    Parse(String),
}

/// Polynomial with integer coefficients, lowest degree first. Trailing zero
/// coefficients are stripped; the zero polynomial is the empty vector.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntPoly {
    c: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut c: Vec<BigInt>) -> Self {
        while c.last().is_some_and(Zero::is_zero) {
            c.pop();
        }
        IntPoly { c }
    }

    pub fn from_i64(v: &[i64]) -> Self {
        IntPoly::new(v.iter().map(|&x| BigInt::from(x)).collect())
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

    pub fn coeffs(&self) -> &[BigInt] {
        &self.c
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.c.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.c.last().is_some_and(One::is_one)
    }

    pub fn derivative(&self) -> IntPoly {
        if self.c.len() <= 1 {
            return IntPoly::new(vec![]);
        }
        IntPoly::new(
            self.c
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, a)| a * BigInt::from(i))
                .collect(),
        )
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for a in self.c.iter().rev() {
            acc = acc * x + a;
        }
        acc
    }

    pub fn to_rat_poly(&self) -> RatPoly {
        RatPoly::new(self.c.iter().map(|a| Rat::from(a.clone())).collect())
    }

    /// Resultant of two integer polynomials (an integer).
    pub fn resultant(&self, other: &IntPoly) -> BigInt {
        let r = resultant_rat(&self.to_rat_poly(), &other.to_rat_poly());
        debug_assert!(r.is_integer(), "resultant of integer polynomials");
        r.to_integer()
    }

    /// Discriminant of a monic quintic: disc f = (-1)^{5*4/2} Res(f, f') = Res(f, f').
    pub fn disc_quintic(&self) -> Result<BigInt, PolyError> {
        match self.degree() {
            None => Err(PolyError::ZeroPolynomial),
            Some(5) => {
                if !self.is_monic() {
                    return Err(PolyError::NotMonic);
                }
                Ok(self.resultant(&self.derivative()))
            }
            Some(d) => Err(PolyError::WrongDegree { expected: 5, got: d }),
        }
    }

    /// Parses a comma-separated coefficient list, lowest degree first,
    /// e.g. `1,1,-1,-1,0,1` for x^5 - x^3 - x^2 + x + 1.
    ///
    /// This is the untrusted-input entry point for user-supplied
    /// polynomials; it must reject garbage without panicking.
    pub fn parse_coeff_list(s: &str) -> Result<IntPoly, PolyError> {
        let s = s.trim();
        if s.is_empty() {
            return Err(PolyError::Parse("empty coefficient list".into()));
        }
        if s.len() > 4096 {
            return Err(PolyError::Parse("coefficient list too long".into()));
        }
        let mut c = Vec::new();
        for (i, tok) in s.split(',').enumerate() {
            if i >= 64 {
                return Err(PolyError::Parse("too many coefficients".into()));
            }
            let tok = tok.trim();
            let a = tok
                .parse::<BigInt>()
                .map_err(|_| PolyError::Parse(format!("bad integer {tok:?} at position {i}")))?;
            c.push(a);
        }
        Ok(IntPoly::new(c))
    }

    /// Inverse of `parse_coeff_list` (on canonical representatives).
    pub fn to_coeff_list(&self) -> String {
        self.c
            .iter()
            .map(|a| a.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// Resultant over Q by the Euclidean polynomial remainder sequence:
/// res(a, b) = (-1)^{deg a * deg b} lc(b)^{deg a - deg r} res(b, r).
fn resultant_rat(a: &RatPoly, b: &RatPoly) -> Rat {
    let (mut a, mut b) = (a.clone(), b.clone());
    let mut acc = Rat::one();
    loop {
        let da = match a.degree() {
            None => return Rat::zero(),
            Some(d) => d,
        };
        let db = match b.degree() {
            None => return Rat::zero(),
            Some(d) => d,
        };
        if db == 0 {
            return acc * pow_rat(b.leading().unwrap(), da as u32);
        }
        let r = a.rem(&b);
        let dr = r.degree().map_or(0, |d| d);
        if r.is_zero() {
            return Rat::zero();
        }
        let mut factor = pow_rat(b.leading().unwrap(), (da - dr) as u32);
        if (da * db) % 2 == 1 {
            factor = -factor;
        }
        acc *= factor;
        a = b;
        b = r;
    }
}

fn pow_rat(r: &Rat, e: u32) -> Rat {
    let mut acc = Rat::one();
    for _ in 0..e {
        acc *= r;
    }
    acc
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, a) in self.c.iter().enumerate().rev() {
            if a.is_zero() {
                continue;
            }
            let mag = a.abs();
            if first {
                if a.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if a.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match i {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if i == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}
