//! Class functions with exact values in Q(zeta_120), and the standard
//! character operations: inner products, tensor/sym/ext powers,
//! restriction along class maps, Frobenius-Schur indicators, and exact
//! eigenvalue multisets.

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::exactmath::{cyc_root, rat_int, Cyc, CycError, Rat};
use crate::groups::{ClassMap, Group};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CharError {
    #[error("characters live on different groups")]
    GroupMismatch,
    #[error("expected {expected} class values, got {got}")]
    WrongLength { expected: usize, got: usize },
    #[error("operation requires an irreducible character")]
    NotIrreducible,
    #[error("inner product is not rational")]
    NonRationalInner,
    #[error("value at class {class} is not an algebraic integer pattern: multiplicity of root {root} is negative")]
    NegativeMultiplicity { class: usize, root: usize },
    #[error("value at class {class} does not lie in Z[zeta_{order}]")]
    NonIntegralMultiplicity { class: usize, order: usize },
    #[error("symmetric powers are implemented for k <= 4, got {0}")]
    UnsupportedSymPower(usize),
    #[error("exterior powers are implemented for k <= 2, got {0}")]
    UnsupportedExtPower(usize),
    #[error("group exponent {0} does not divide 120")]
    ExponentUnsupported(usize),
    #[error("character table internals are inconsistent: {0}")]
    Inconsistent(String),
    #[error("common eigenspace of dimension {dim} failed to split")]
    SplitFailed { dim: usize },
    #[error(transparent)]
    Cyc(#[from] CycError),
}

/// A class function on a finite group, one exact value per conjugacy
/// class in the group's canonical class order.  Irreducible characters,
/// permutation characters, and virtual characters all share this type;
/// operations that require irreducibility check it.
#[derive(Clone)]
pub struct Character {
    group: Arc<Group>,
    values: Vec<Cyc>,
}

fn same_group(a: &Arc<Group>, b: &Arc<Group>) -> bool {
    Arc::ptr_eq(a, b)
        || (a.name() == b.name()
            && a.order() == b.order()
            && a.num_classes() == b.num_classes())
}

impl Character {
    pub fn new(group: &Arc<Group>, values: Vec<Cyc>) -> Result<Character, CharError> {
        if values.len() != group.num_classes() {
            return Err(CharError::WrongLength {
                expected: group.num_classes(),
                got: values.len(),
            });
        }
        Ok(Character {
            group: Arc::clone(group),
            values,
        })
    }

    pub fn trivial(group: &Arc<Group>) -> Character {
        Character {
            group: Arc::clone(group),
            values: vec![Cyc::one(); group.num_classes()],
        }
    }

    pub fn group(&self) -> &Arc<Group> {
        &self.group
    }

    pub fn values(&self) -> &[Cyc] {
        &self.values
    }

    pub fn value(&self, class: usize) -> &Cyc {
        &self.values[class]
    }

    /// Value at the identity class (index 0 in the canonical order).
    pub fn degree(&self) -> &Cyc {
        &self.values[0]
    }

    /// Value at the class of `rep_c^k`.
    pub fn power_value(&self, class: usize, k: i64) -> &Cyc {
        &self.values[self.group.power_class(class, k)]
    }

    /// Complex conjugate character.
    pub fn conj(&self) -> Character {
        Character {
            group: Arc::clone(&self.group),
            values: self.values.iter().map(Cyc::conj).collect(),
        }
    }

    /// `(1/|G|) sum_C |C| a(C) conj(b(C))`; characters always pair to a
    /// rational (in fact a rational integer for genuine characters).
    pub fn inner(&self, other: &Character) -> Result<Rat, CharError> {
        if !same_group(&self.group, &other.group) {
            return Err(CharError::GroupMismatch);
        }
        let mut acc = Cyc::zero();
        for (c, class) in self.group.classes().iter().enumerate() {
            let term = &self.values[c] * &other.values[c].conj();
            acc = acc + term * Cyc::from_int(class.size() as i64);
        }
        let total = acc * Cyc::from_rat(rat_int(1) / rat_int(self.group.order() as i64));
        total.as_rat().ok_or(CharError::NonRationalInner)
    }

    pub fn norm_sq(&self) -> Result<Rat, CharError> {
        self.inner(self)
    }

    pub fn is_irreducible(&self) -> Result<bool, CharError> {
        let one = rat_int(1);
        Ok(self.norm_sq()? == one && self.degree().as_int().map_or(false, |d| d > 0.into()))
    }

    pub fn tensor(&self, other: &Character) -> Result<Character, CharError> {
        if !same_group(&self.group, &other.group) {
            return Err(CharError::GroupMismatch);
        }
        Ok(Character {
            group: Arc::clone(&self.group),
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a * b)
                .collect(),
        })
    }

    pub fn plus(&self, other: &Character) -> Result<Character, CharError> {
        if !same_group(&self.group, &other.group) {
            return Err(CharError::GroupMismatch);
        }
        Ok(Character {
            group: Arc::clone(&self.group),
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    /// Virtual-character difference.
    pub fn minus(&self, other: &Character) -> Result<Character, CharError> {
        if !same_group(&self.group, &other.group) {
            return Err(CharError::GroupMismatch);
        }
        Ok(Character {
            group: Arc::clone(&self.group),
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Cyc::is_zero)
    }

    /// Character of the k-th symmetric power, via the Newton-style
    /// expressions in the power-map values a(g^j).
    pub fn sym_power(&self, k: usize) -> Result<Character, CharError> {
        let n = self.group.num_classes();
        let mut values = Vec::with_capacity(n);
        for c in 0..n {
            let a1 = self.power_value(c, 1).clone();
            let a2 = self.power_value(c, 2).clone();
            let a3 = self.power_value(c, 3).clone();
            let a4 = self.power_value(c, 4).clone();
            let v = match k {
                0 => Cyc::one(),
                1 => a1,
                2 => scale(&(&a1 * &a1 + a2), 1, 2),
                3 => {
                    let cube = &(&a1 * &a1) * &a1;
                    scale(
                        &(cube + Cyc::from_int(3) * (&a1 * &a2) + Cyc::from_int(2) * a3),
                        1,
                        6,
                    )
                }
                4 => {
                    let sq = &a1 * &a1;
                    let quad = &sq * &sq;
                    let term = quad
                        + Cyc::from_int(6) * (&sq * &a2)
                        + Cyc::from_int(3) * (&a2 * &a2)
                        + Cyc::from_int(8) * (&a1 * &a3)
                        + Cyc::from_int(6) * a4;
                    scale(&term, 1, 24)
                }
                _ => return Err(CharError::UnsupportedSymPower(k)),
            };
            values.push(v);
        }
        Ok(Character {
            group: Arc::clone(&self.group),
            values,
        })
    }

    /// Character of the k-th exterior power.
    pub fn ext_power(&self, k: usize) -> Result<Character, CharError> {
        let n = self.group.num_classes();
        let mut values = Vec::with_capacity(n);
        for c in 0..n {
            let a1 = self.power_value(c, 1).clone();
            let a2 = self.power_value(c, 2).clone();
            let v = match k {
                0 => Cyc::one(),
                1 => a1,
                2 => scale(&(&a1 * &a1 - a2), 1, 2),
                _ => return Err(CharError::UnsupportedExtPower(k)),
            };
            values.push(v);
        }
        Ok(Character {
            group: Arc::clone(&self.group),
            values,
        })
    }

    /// Pulls the character back along a class map: for an inclusion this
    /// is restriction to the subgroup, for a quotient map it is inflation.
    pub fn restrict_along(&self, map: &ClassMap) -> Result<Character, CharError> {
        if !same_group(&self.group, map.to()) {
            return Err(CharError::GroupMismatch);
        }
        let values = (0..map.from().num_classes())
            .map(|c| self.values[map.class_image(c)].clone())
            .collect();
        Ok(Character {
            group: Arc::clone(map.from()),
            values,
        })
    }

    /// Transports values along a permutation of the classes (e.g. the one
    /// induced by conjugation with an outer element): result(c) =
    /// self(perm[c]).
    pub fn transport(&self, perm: &[usize]) -> Result<Character, CharError> {
        if perm.len() != self.values.len() {
            return Err(CharError::WrongLength {
                expected: self.values.len(),
                got: perm.len(),
            });
        }
        let values = perm.iter().map(|&p| self.values[p].clone()).collect();
        Ok(Character {
            group: Arc::clone(&self.group),
            values,
        })
    }

    /// Frobenius-Schur indicator `(1/|G|) sum_g chi(g^2)`; +1 real
    /// orthogonal, -1 real symplectic, 0 not real-valued.  Only defined
    /// for irreducible characters.
    pub fn fs_indicator(&self) -> Result<i8, CharError> {
        if !self.is_irreducible()? {
            return Err(CharError::NotIrreducible);
        }
        let mut acc = Cyc::zero();
        for (c, class) in self.group.classes().iter().enumerate() {
            acc = acc + self.power_value(c, 2) * &Cyc::from_int(class.size() as i64);
        }
        let total = acc * Cyc::from_rat(rat_int(1) / rat_int(self.group.order() as i64));
        let r = total.as_rat().ok_or(CharError::NonRationalInner)?;
        for cand in [-1i8, 0, 1] {
            if r == rat_int(cand as i64) {
                return Ok(cand);
            }
        }
        Err(CharError::Inconsistent(format!(
            "Frobenius-Schur indicator {r} is not -1, 0, or 1"
        )))
    }

    /// Exact multiset of eigenvalues of a representing matrix on class
    /// `c`: for each n-th root of unity (n the class order) the
    /// multiplicity is `(1/n) sum_l chi(c^l) zeta_n^{-jl}`, which must be
    /// a nonnegative integer summing to the degree.  Sorted for
    /// determinism.
    pub fn eigenvalues(&self, class: usize) -> Result<Vec<Cyc>, CharError> {
        let n = self.group.class(class).order;
        let inv_n = Cyc::from_rat(rat_int(1) / rat_int(n as i64));
        let mut out = Vec::new();
        for j in 0..n {
            let mut acc = Cyc::zero();
            for l in 0..n {
                let root = cyc_root(n as u32, -((j * l) as i64))?;
                acc = acc + self.power_value(class, l as i64) * &root;
            }
            let mu = acc * inv_n.clone();
            let Some(r) = mu.as_rat() else {
                return Err(CharError::NonIntegralMultiplicity { class, order: n });
            };
            if !r.is_integer() {
                return Err(CharError::NonIntegralMultiplicity { class, order: n });
            }
            let m = r.to_integer();
            if m < 0.into() {
                return Err(CharError::NegativeMultiplicity { class, root: j });
            }
            let count = usize::try_from(m.magnitude().clone())
                .map_err(|_| CharError::Inconsistent("oversized multiplicity".into()))?;
            let root = cyc_root(n as u32, j as i64)?;
            out.extend(std::iter::repeat_n(root, count));
        }
        out.sort();
        Ok(out)
    }

    /// Classes on which the character equals its degree.
    pub fn kernel_classes(&self) -> Vec<usize> {
        let d = self.degree();
        (0..self.values.len())
            .filter(|&c| &self.values[c] == d)
            .collect()
    }

    pub fn is_faithful(&self) -> bool {
        self.kernel_classes() == [0]
    }
}

fn scale(v: &Cyc, num: i64, den: i64) -> Cyc {
    v.clone() * Cyc::from_rat(rat_int(num) / rat_int(den))
}

impl PartialEq for Character {
    fn eq(&self, other: &Character) -> bool {
        same_group(&self.group, &other.group) && self.values == other.values
    }
}

impl Eq for Character {}

impl fmt::Debug for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Character[")?;
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "] on {}", self.group.name())
    }
}

/// All rows of `table` (a character table of the target of `map`) whose
/// pullback along `map` equals `chi`.
pub fn extensions_of(
    chi: &Character,
    table: &[Character],
    map: &ClassMap,
) -> Result<Vec<Character>, CharError> {
    if !same_group(chi.group(), map.from()) {
        return Err(CharError::GroupMismatch);
    }
    let mut out = Vec::new();
    for row in table {
        if row.restrict_along(map)?.values == chi.values {
            out.push(row.clone());
        }
    }
    Ok(out)
}

/// The permutation character of `g` acting on the left cosets of its
/// subgroup `h`: value at a class is the number of fixed cosets.
pub fn induced_perm_char(g: &Arc<Group>, h: &Arc<Group>) -> Result<Character, CharError> {
    if !h.is_subgroup_of(g) {
        return Err(CharError::Inconsistent(format!(
            "{} is not a subgroup of {}",
            h.name(),
            g.name()
        )));
    }
    let h_idx: Vec<usize> = h
        .elems()
        .iter()
        .map(|e| g.index_of(e).expect("subgroup element"))
        .collect();
    // canonical coset id: least element index in xH
    let mut coset_id = vec![usize::MAX; g.order()];
    for x in 0..g.order() {
        coset_id[x] = h_idx.iter().map(|&hh| g.mul_idx(x, hh)).min().unwrap();
    }
    let mut reps: Vec<usize> = coset_id.clone();
    reps.sort_unstable();
    reps.dedup();
    debug_assert_eq!(reps.len(), g.order() / h.order());
    let values = g
        .classes()
        .iter()
        .map(|class| {
            let fixed = reps
                .iter()
                .filter(|&&x| coset_id[g.mul_idx(class.rep, x)] == x)
                .count();
            Cyc::from_int(fixed as i64)
        })
        .collect();
    Character::new(g, values)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{s5, GroupElem};

    fn sign_char(g: &Arc<Group>) -> Character {
        let values = g
            .classes()
            .iter()
            .map(|c| Cyc::from_int(g.elem(c.rep).perm_sign().unwrap() as i64))
            .collect();
        Character::new(g, values).unwrap()
    }

    fn natural_perm_char(g: &Arc<Group>) -> Character {
        let values = g
            .classes()
            .iter()
            .map(|c| match g.elem(c.rep) {
                GroupElem::Perm(p) => {
                    let fixed = p.iter().enumerate().filter(|(i, &x)| *i == x as usize).count();
                    Cyc::from_int(fixed as i64)
                }
                _ => unreachable!(),
            })
            .collect();
        Character::new(g, values).unwrap()
    }

    #[test]
    fn trivial_and_sign_are_orthonormal() {
        let g = s5();
        let one = Character::trivial(&g);
        let eta = sign_char(&g);
        assert_eq!(one.norm_sq().unwrap(), rat_int(1));
        assert_eq!(eta.norm_sq().unwrap(), rat_int(1));
        assert_eq!(one.inner(&eta).unwrap(), rat_int(0));
        assert!(eta.is_irreducible().unwrap());
        assert_eq!(eta.fs_indicator().unwrap(), 1);
        assert!(!eta.is_faithful());
        assert!(one.tensor(&eta).unwrap() == eta);
    }

    #[test]
    fn standard_character_of_s5() {
        let g = s5();
        let std4 = natural_perm_char(&g).minus(&Character::trivial(&g)).unwrap();
        assert_eq!(std4.degree(), &Cyc::from_int(4));
        assert!(std4.is_irreducible().unwrap());
        assert_eq!(std4.fs_indicator().unwrap(), 1);
        assert!(std4.is_faithful());
        // natural perm char has norm 2 (two orbits of S5 on pairs... i.e.
        // 1 + std), and <perm, 1> = 1 (transitivity)
        let nat = natural_perm_char(&g);
        assert_eq!(nat.norm_sq().unwrap(), rat_int(2));
        assert_eq!(nat.inner(&Character::trivial(&g)).unwrap(), rat_int(1));
    }

    #[test]
    fn sym_ext_decompose_tensor_square() {
        let g = s5();
        let std4 = natural_perm_char(&g).minus(&Character::trivial(&g)).unwrap();
        let sym2 = std4.sym_power(2).unwrap();
        let ext2 = std4.ext_power(2).unwrap();
        let square = std4.tensor(&std4).unwrap();
        assert!(sym2.plus(&ext2).unwrap() == square);
        assert_eq!(ext2.degree(), &Cyc::from_int(6));
        assert!(ext2.is_irreducible().unwrap(), "wedge^2 of std is irreducible for S5");
        assert_eq!(sym2.degree(), &Cyc::from_int(10));
        // sym^2 = 1 + std + (a degree-5 irreducible)
        assert_eq!(sym2.inner(&Character::trivial(&g)).unwrap(), rat_int(1));
        assert_eq!(sym2.inner(&std4).unwrap(), rat_int(1));
    }

    #[test]
    fn eigenvalues_of_the_sign_character() {
        let g = s5();
        let eta = sign_char(&g);
        for c in 0..g.num_classes() {
            let ev = eta.eigenvalues(c).unwrap();
            assert_eq!(ev.len(), 1);
            assert_eq!(&ev[0], eta.value(c));
        }
    }

    #[test]
    fn eigenvalues_of_the_standard_character() {
        let g = s5();
        let std4 = natural_perm_char(&g).minus(&Character::trivial(&g)).unwrap();
        // 5-cycle class: eigenvalues are the four primitive-summing 5th roots
        let c5 = (0..g.num_classes())
            .find(|&c| g.class(c).order == 5)
            .unwrap();
        let ev = std4.eigenvalues(c5).unwrap();
        let mut expect: Vec<Cyc> = (1..5).map(|j| cyc_root(5, j).unwrap()).collect();
        expect.sort();
        assert_eq!(ev, expect);
        // eigenvalues at every class recombine to the trace
        for c in 0..g.num_classes() {
            let ev = std4.eigenvalues(c).unwrap();
            let sum = ev.iter().fold(Cyc::zero(), |a, b| a + b.clone());
            assert_eq!(&sum, std4.value(c));
        }
    }

    #[test]
    fn eigenvalue_errors_on_non_characters() {
        let g = s5();
        // -1 * trivial is a virtual character with negative multiplicities
        let neg = Character::trivial(&g)
            .minus(&Character::trivial(&g))
            .unwrap()
            .minus(&Character::trivial(&g))
            .unwrap();
        assert!(matches!(
            neg.eigenvalues(0),
            Err(CharError::NegativeMultiplicity { .. })
        ));
    }

    #[test]
    fn fs_indicator_requires_irreducible() {
        let g = s5();
        let nat = natural_perm_char(&g);
        assert!(matches!(nat.fs_indicator(), Err(CharError::NotIrreducible)));
    }

    #[test]
    fn induced_perm_char_extremes() {
        let g = s5();
        let whole = induced_perm_char(&g, &g).unwrap();
        assert!(whole == Character::trivial(&g));
        let triv = Arc::new(
            crate::groups::Group::from_generators("1", &[GroupElem::perm(&[0, 1, 2, 3, 4])])
                .unwrap(),
        );
        let reg = induced_perm_char(&g, &triv).unwrap();
        assert_eq!(reg.degree(), &Cyc::from_int(120));
        for c in 1..g.num_classes() {
            assert!(reg.value(c).is_zero());
        }
    }

    #[test]
    fn natural_perm_char_is_induced_from_point_stabilizer() {
        let g = s5();
        // stabilizer of point 4: S4 on the first four points
        let s4 = Arc::new(
            crate::groups::Group::from_generators(
                "S4",
                &[GroupElem::perm(&[1, 2, 3, 0, 4]), GroupElem::perm(&[1, 0, 2, 3, 4])],
            )
            .unwrap(),
        );
        assert_eq!(s4.order(), 24);
        let ind = induced_perm_char(&g, &s4).unwrap();
        assert!(ind == natural_perm_char(&g));
    }

    #[test]
    fn group_mismatch_is_detected() {
        let g = s5();
        let a = crate::groups::a5();
        let one_g = Character::trivial(&g);
        let one_a = Character::trivial(&a);
        assert!(matches!(one_g.inner(&one_a), Err(CharError::GroupMismatch)));
        assert!(matches!(one_g.tensor(&one_a), Err(CharError::GroupMismatch)));
    }
}
