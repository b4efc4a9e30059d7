//! Concrete group elements: invertible 2x2 matrices over F5 and
//! permutations on at most 12 points.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ElemError {
    #[error("matrix {0:?} is singular over F5")]
    Singular([u8; 4]),
    #[error("permutation image list {0:?} is not a bijection")]
    NotBijection(Vec<u8>),
    #[error("permutation degree {0} exceeds 12")]
    TooManyPoints(usize),
}

/// Multiplicative inverses in F5 (index 0 unused).
const INV5: [u8; 5] = [0, 1, 3, 2, 4];

/// A group element: either a 2x2 matrix over F5, row-major `[a, b, c, d]`
/// with entries in `0..5`, or a permutation given by its image list
/// (`p[i]` is the image of point `i`).
///
/// The derived ordering (matrices before permutations, then lexicographic
/// on entries) fixes canonical class representatives; a group never mixes
/// the two kinds.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GroupElem {
    Mat2([u8; 4]),
    Perm(Vec<u8>),
}

impl GroupElem {
    pub fn mat(a: i64, b: i64, c: i64, d: i64) -> GroupElem {
        let r = |x: i64| -> u8 { x.rem_euclid(5) as u8 };
        GroupElem::Mat2([r(a), r(b), r(c), r(d)])
    }

    pub fn perm(images: &[u8]) -> GroupElem {
        GroupElem::Perm(images.to_vec())
    }

    pub fn validate(&self) -> Result<(), ElemError> {
        match self {
            GroupElem::Mat2(m) => {
                if m.iter().any(|&x| x >= 5) || self.det() == Some(0) {
                    return Err(ElemError::Singular(*m));
                }
                Ok(())
            }
            GroupElem::Perm(p) => {
                if p.len() > 12 {
                    return Err(ElemError::TooManyPoints(p.len()));
                }
                let mut seen = vec![false; p.len()];
                for &i in p {
                    if (i as usize) >= p.len() || seen[i as usize] {
                        return Err(ElemError::NotBijection(p.clone()));
                    }
                    seen[i as usize] = true;
                }
                Ok(())
            }
        }
    }

    /// Product; for permutations, `(p * q)(i) = p(q(i))` (apply `q` first).
    pub fn mul(&self, other: &GroupElem) -> GroupElem {
        match (self, other) {
            (GroupElem::Mat2(x), GroupElem::Mat2(y)) => GroupElem::Mat2([
                (x[0] * y[0] + x[1] * y[2]) % 5,
                (x[0] * y[1] + x[1] * y[3]) % 5,
                (x[2] * y[0] + x[3] * y[2]) % 5,
                (x[2] * y[1] + x[3] * y[3]) % 5,
            ]),
            (GroupElem::Perm(p), GroupElem::Perm(q)) => {
                assert_eq!(p.len(), q.len(), "permutation degrees differ");
                GroupElem::Perm(q.iter().map(|&i| p[i as usize]).collect())
            }
            _ => panic!("cannot multiply a matrix by a permutation"),
        }
    }

    pub fn inv(&self) -> GroupElem {
        match self {
            GroupElem::Mat2(m) => {
                let det = self.det().expect("matrix element");
                assert!(det != 0, "singular matrix in group");
                let di = INV5[det as usize];
                // adjugate [d, -b; -c, a] scaled by det^{-1}
                GroupElem::Mat2([
                    (m[3] * di) % 5,
                    ((5 - m[1]) % 5 * di) % 5,
                    ((5 - m[2]) % 5 * di) % 5,
                    (m[0] * di) % 5,
                ])
            }
            GroupElem::Perm(p) => {
                let mut q = vec![0u8; p.len()];
                for (i, &j) in p.iter().enumerate() {
                    q[j as usize] = i as u8;
                }
                GroupElem::Perm(q)
            }
        }
    }

    pub fn identity_like(&self) -> GroupElem {
        match self {
            GroupElem::Mat2(_) => GroupElem::Mat2([1, 0, 0, 1]),
            GroupElem::Perm(p) => GroupElem::Perm((0..p.len() as u8).collect()),
        }
    }

    pub fn is_identity(&self) -> bool {
        *self == self.identity_like()
    }

    pub fn det(&self) -> Option<u8> {
        match self {
            GroupElem::Mat2(m) => {
                Some(((m[0] * m[3] + 25 - m[1] * m[2]) % 5) as u8)
            }
            GroupElem::Perm(_) => None,
        }
    }

    /// True when det is a nonzero square in F5 (squares: 1, 4).
    pub fn det_is_square(&self) -> Option<bool> {
        self.det().map(|d| d == 1 || d == 4)
    }

    pub fn is_scalar(&self) -> Option<bool> {
        match self {
            GroupElem::Mat2(m) => Some(m[1] == 0 && m[2] == 0 && m[0] == m[3]),
            GroupElem::Perm(_) => None,
        }
    }

    /// Sign of a permutation ((-1)^(points - cycles)); None for matrices.
    pub fn perm_sign(&self) -> Option<i8> {
        match self {
            GroupElem::Mat2(_) => None,
            GroupElem::Perm(p) => {
                let mut seen = vec![false; p.len()];
                let mut cycles = 0usize;
                for i in 0..p.len() {
                    if !seen[i] {
                        cycles += 1;
                        let mut j = i;
                        while !seen[j] {
                            seen[j] = true;
                            j = p[j] as usize;
                        }
                    }
                }
                Some(if (p.len() - cycles) % 2 == 0 { 1 } else { -1 })
            }
        }
    }

    /// Cycle type of a permutation, sorted ascending; None for matrices.
    pub fn cycle_type(&self) -> Option<Vec<usize>> {
        match self {
            GroupElem::Mat2(_) => None,
            GroupElem::Perm(p) => {
                let mut seen = vec![false; p.len()];
                let mut out = Vec::new();
                for i in 0..p.len() {
                    if !seen[i] {
                        let mut len = 0usize;
                        let mut j = i;
                        while !seen[j] {
                            seen[j] = true;
                            j = p[j] as usize;
                            len += 1;
                        }
                        out.push(len);
                    }
                }
                out.sort_unstable();
                Some(out)
            }
        }
    }

    pub fn pow(&self, k: usize) -> GroupElem {
        let mut acc = self.identity_like();
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative order by repeated multiplication.
    pub fn order(&self) -> usize {
        let id = self.identity_like();
        let mut x = self.clone();
        let mut n = 1usize;
        while x != id {
            x = x.mul(self);
            n += 1;
            assert!(n <= 480, "order computation runaway");
        }
        n
    }
}

impl fmt::Debug for GroupElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for GroupElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupElem::Mat2(m) => write!(f, "[{} {}; {} {}]", m[0], m[1], m[2], m[3]),
            GroupElem::Perm(p) => {
                if self.is_identity() {
                    return write!(f, "()");
                }
                let mut seen = vec![false; p.len()];
                for i in 0..p.len() {
                    if !seen[i] && p[i] as usize != i {
                        write!(f, "({i}")?;
                        seen[i] = true;
                        let mut j = p[i] as usize;
                        while j != i {
                            write!(f, " {j}")?;
                            seen[j] = true;
                            j = p[j] as usize;
                        }
                        write!(f, ")")?;
                    }
                }
                Ok(())
            }
        }
    }
}
