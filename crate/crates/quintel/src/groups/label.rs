//! Conjugacy-class labels for S5 and groups mapping onto it.
//!
//! S5 has seven classes, named here by element order plus a letter when
//! the order alone is ambiguous.  The pair (order, parity) determines the
//! class: parity of a permutation is its sign, parity of a matrix acting
//! through PGL2(F5) is the Legendre symbol of its determinant.

use std::fmt;

use thiserror::Error;

use super::elem::GroupElem;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LabelError {
    #[error("{0:?} is not the cycle type of a 5-point permutation")]
    BadCycleType(Vec<usize>),
    #[error("no class of S5 has order {order} and parity {parity}")]
    NoSuchClass { order: usize, parity: i8 },
    #[error("unknown class label {0:?}")]
    UnknownName(String),
    #[error("expected a {0}")]
    WrongKind(&'static str),
}

/// The seven conjugacy classes of S5, in canonical order.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum ClassLabel {
    C1,
    C2A,
    C2B,
    C3A,
    C4A,
    C5A,
    C6A,
}

impl ClassLabel {
    pub const ALL: [ClassLabel; 7] = [
        ClassLabel::C1,
        ClassLabel::C2A,
        ClassLabel::C2B,
        ClassLabel::C3A,
        ClassLabel::C4A,
        ClassLabel::C5A,
        ClassLabel::C6A,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ClassLabel::C1 => "1",
            ClassLabel::C2A => "2A",
            ClassLabel::C2B => "2B",
            ClassLabel::C3A => "3A",
            ClassLabel::C4A => "4A",
            ClassLabel::C5A => "5A",
            ClassLabel::C6A => "6A",
        }
    }

    pub fn from_name(s: &str) -> Result<ClassLabel, LabelError> {
        Self::ALL
            .into_iter()
            .find(|l| l.name() == s)
            .ok_or_else(|| LabelError::UnknownName(s.to_string()))
    }

    /// Order of any element in the class.
    pub fn order(self) -> usize {
        match self {
            ClassLabel::C1 => 1,
            ClassLabel::C2A | ClassLabel::C2B => 2,
            ClassLabel::C3A => 3,
            ClassLabel::C4A => 4,
            ClassLabel::C5A => 5,
            ClassLabel::C6A => 6,
        }
    }

    /// Sign of the class under S5 -> {+1, -1}.
    pub fn parity(self) -> i8 {
        match self {
            ClassLabel::C1 | ClassLabel::C2B | ClassLabel::C3A | ClassLabel::C5A => 1,
            ClassLabel::C2A | ClassLabel::C4A | ClassLabel::C6A => -1,
        }
    }

    /// Size of the class inside S5 (order 120).
    pub fn s5_size(self) -> usize {
        match self {
            ClassLabel::C1 => 1,
            ClassLabel::C2A => 10,
            ClassLabel::C2B => 15,
            ClassLabel::C3A => 20,
            ClassLabel::C4A => 30,
            ClassLabel::C5A => 24,
            ClassLabel::C6A => 20,
        }
    }

    /// Cycle type on 5 points, ascending.
    pub fn cycle_type(self) -> &'static [usize] {
        match self {
            ClassLabel::C1 => &[1, 1, 1, 1, 1],
            ClassLabel::C2A => &[1, 1, 1, 2],
            ClassLabel::C2B => &[1, 2, 2],
            ClassLabel::C3A => &[1, 1, 3],
            ClassLabel::C4A => &[1, 4],
            ClassLabel::C5A => &[5],
            ClassLabel::C6A => &[2, 3],
        }
    }

    pub fn from_order_parity(order: usize, parity: i8) -> Result<ClassLabel, LabelError> {
        Self::ALL
            .into_iter()
            .find(|l| l.order() == order && l.parity() == parity)
            .ok_or(LabelError::NoSuchClass { order, parity })
    }
}

impl fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Label of an S5 class given a cycle type on 5 points (any order).
pub fn cycle_type_label(partition: &[usize]) -> Result<ClassLabel, LabelError> {
    let mut p = partition.to_vec();
    p.sort_unstable();
    ClassLabel::ALL
        .into_iter()
        .find(|l| l.cycle_type() == p.as_slice())
        .ok_or(LabelError::BadCycleType(p))
}

/// Label of the image of a GL2(F5) matrix in PGL2(F5) = S5: order modulo
/// scalars plus the square-ness of the determinant.
pub fn pgl_class_label(m: &GroupElem) -> Result<ClassLabel, LabelError> {
    let is_square = m.det_is_square().ok_or(LabelError::WrongKind("matrix"))?;
    let mut order = 1usize;
    let mut x = m.clone();
    while x.is_scalar() != Some(true) {
        x = x.mul(m);
        order += 1;
        assert!(order <= 24, "projective order runaway");
    }
    ClassLabel::from_order_parity(order, if is_square { 1 } else { -1 })
}

/// Label of a permutation in a group isomorphic to S5, from its order and
/// sign.  Works for any faithful permutation realization, not only the
/// 5-point one.
pub fn perm_class_label(p: &GroupElem) -> Result<ClassLabel, LabelError> {
    let sign = p.perm_sign().ok_or(LabelError::WrongKind("permutation"))?;
    ClassLabel::from_order_parity(p.order(), sign)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn label_dictionary() {
        let total: usize = ClassLabel::ALL.iter().map(|l| l.s5_size()).sum();
        assert_eq!(total, 120);
        for l in ClassLabel::ALL {
            assert_eq!(ClassLabel::from_order_parity(l.order(), l.parity()), Ok(l));
            assert_eq!(ClassLabel::from_name(l.name()), Ok(l));
            assert_eq!(cycle_type_label(l.cycle_type()), Ok(l));
            // parity from the cycle type: sign = (-1)^(5 - #cycles)
            let cycles = l.cycle_type().len();
            let sign = if (5 - cycles) % 2 == 0 { 1 } else { -1 };
            assert_eq!(l.parity(), sign);
        }
        assert!(ClassLabel::from_order_parity(4, 1).is_err());
        assert!(ClassLabel::from_name("7A").is_err());
        assert!(cycle_type_label(&[2, 2]).is_err());
    }

    #[test]
    fn cycle_type_label_ignores_input_order() {
        assert_eq!(cycle_type_label(&[3, 2]), Ok(ClassLabel::C6A));
        assert_eq!(cycle_type_label(&[4, 1]), Ok(ClassLabel::C4A));
    }

    #[test]
    fn pgl_labels_of_known_matrices() {
        // Scalars are projectively trivial.
        assert_eq!(pgl_class_label(&GroupElem::mat(2, 0, 0, 2)), Ok(ClassLabel::C1));
        // Unipotent: projective order 5, det 1.
        assert_eq!(pgl_class_label(&GroupElem::mat(1, 1, 0, 1)), Ok(ClassLabel::C5A));
        // diag(2, 1): order 4 mod scalars? 2^4 = 1 so diag(2,1)^4 = diag(1,1);
        // smallest scalar power is 4; det 2 non-square -> 4A.
        assert_eq!(pgl_class_label(&GroupElem::mat(2, 0, 0, 1)), Ok(ClassLabel::C4A));
        // diag(4, 1) = diag(-1, 1): squares to identity, det -1 = 4 square -> 2B.
        assert_eq!(pgl_class_label(&GroupElem::mat(4, 0, 0, 1)), Ok(ClassLabel::C2B));
        assert!(pgl_class_label(&GroupElem::perm(&[0, 1])).is_err());
    }

    #[test]
    fn perm_labels_of_known_permutations() {
        assert_eq!(perm_class_label(&GroupElem::perm(&[1, 2, 3, 4, 0])), Ok(ClassLabel::C5A));
        assert_eq!(perm_class_label(&GroupElem::perm(&[1, 0, 2, 3, 4])), Ok(ClassLabel::C2A));
        assert_eq!(perm_class_label(&GroupElem::perm(&[1, 0, 3, 2, 4])), Ok(ClassLabel::C2B));
        assert_eq!(perm_class_label(&GroupElem::perm(&[1, 0, 3, 4, 2])), Ok(ClassLabel::C6A));
        assert!(perm_class_label(&GroupElem::mat(1, 0, 0, 1)).is_err());
    }
}
