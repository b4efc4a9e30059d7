//! Finite groups with precomputed conjugacy-class data.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use thiserror::Error;

use super::elem::GroupElem;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GroupError {
    #[error("element set is not closed under multiplication")]
    NotClosed,
    #[error("element set mixes matrices and permutations")]
    MixedKinds,
    #[error("empty element set")]
    Empty,
    #[error("expected {expected}, got a group of order {got}")]
    WrongGroup { expected: &'static str, got: usize },
    #[error("element {0} does not belong to group {1}")]
    NoSuchElement(String, String),
    #[error("{0} is not a subgroup of {1}")]
    NotSubgroup(String, String),
    #[error("conjugation by {0} does not normalize {1}")]
    NotNormalizing(String, String),
    #[error("map on elements is not a homomorphism into {0}")]
    NotHomomorphism(String),
    #[error("no element of {0} has a non-square determinant")]
    NoOuterElement(String),
}

/// One conjugacy class: indices into the owning group's element list.
#[derive(Debug, Clone)]
pub struct Class {
    /// Index of the lexicographically least member (the representative).
    pub rep: usize,
    /// All member indices, ascending.
    pub members: Vec<usize>,
    /// Multiplicative order shared by every member.
    pub order: usize,
}

impl Class {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

/// A finite group stored by exhaustive element list, with conjugacy
/// classes in a canonical order: sorted by (element order, class size,
/// representative).  The identity class is always index 0.
pub struct Group {
    name: String,
    elems: Vec<GroupElem>,
    index: HashMap<GroupElem, usize>,
    identity: usize,
    classes: Vec<Class>,
    class_of: Vec<usize>,
    /// `power_table[c][k]` is the class of `rep_c^k` for `k < exponent`.
    power_table: Vec<Vec<usize>>,
    exponent: usize,
}

impl Group {
    /// Closure of `gens` under multiplication (inverses come for free in a
    /// finite group).  Panics if the closure exceeds 480 elements; the
    /// groups in this crate all live inside GL2(F5) or Sym(12).
    pub fn from_generators(name: &str, gens: &[GroupElem]) -> Result<Group, GroupError> {
        let first = gens.first().ok_or(GroupError::Empty)?;
        if gens
            .iter()
            .any(|g| std::mem::discriminant(g) != std::mem::discriminant(first))
        {
            return Err(GroupError::MixedKinds);
        }
        for g in gens {
            g.validate().expect("generator must be a valid element");
        }
        let id = first.identity_like();
        let mut seen: HashMap<GroupElem, ()> = HashMap::new();
        seen.insert(id.clone(), ());
        let mut queue: VecDeque<GroupElem> = VecDeque::new();
        queue.push_back(id);
        while let Some(x) = queue.pop_front() {
            for g in gens {
                let y = x.mul(g);
                if !seen.contains_key(&y) {
                    assert!(seen.len() < 40_320, "group closure runaway");
                    seen.insert(y.clone(), ());
                    queue.push_back(y);
                }
            }
        }
        let mut elems: Vec<GroupElem> = seen.into_keys().collect();
        elems.sort();
        Ok(Self::finish(name, elems))
    }

    /// Builds from an explicit element list, verifying closure.
    pub fn from_elements(name: &str, elems: Vec<GroupElem>) -> Result<Group, GroupError> {
        let first = elems.first().ok_or(GroupError::Empty)?;
        if elems
            .iter()
            .any(|g| std::mem::discriminant(g) != std::mem::discriminant(first))
        {
            return Err(GroupError::MixedKinds);
        }
        let mut sorted = elems;
        sorted.sort();
        sorted.dedup();
        let index: HashMap<GroupElem, usize> = sorted
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, e)| (e, i))
            .collect();
        for x in &sorted {
            for y in &sorted {
                if !index.contains_key(&x.mul(y)) {
                    return Err(GroupError::NotClosed);
                }
            }
        }
        Ok(Self::finish(name, sorted))
    }

    fn finish(name: &str, elems: Vec<GroupElem>) -> Group {
        let index: HashMap<GroupElem, usize> = elems
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, e)| (e, i))
            .collect();
        let identity = index[&elems[0].identity_like()];

        // Conjugacy classes: orbit of each unseen element under
        // conjugation by the whole group.
        let n = elems.len();
        let mut class_of = vec![usize::MAX; n];
        let mut raw_classes: Vec<Vec<usize>> = Vec::new();
        for start in 0..n {
            if class_of[start] != usize::MAX {
                continue;
            }
            let cid = raw_classes.len();
            let mut members = vec![start];
            class_of[start] = cid;
            let mut frontier = vec![start];
            while let Some(x) = frontier.pop() {
                for t in &elems {
                    let y = t.mul(&elems[x]).mul(&t.inv());
                    let yi = index[&y];
                    if class_of[yi] == usize::MAX {
                        class_of[yi] = cid;
                        members.push(yi);
                        frontier.push(yi);
                    }
                }
            }
            members.sort_unstable();
            raw_classes.push(members);
        }

        // Canonical order: (element order, size, representative).
        let mut classes: Vec<Class> = raw_classes
            .into_iter()
            .map(|members| {
                let rep = members[0];
                let order = elems[rep].order();
                Class { rep, members, order }
            })
            .collect();
        classes.sort_by(|a, b| {
            (a.order, a.size(), &elems[a.rep]).cmp(&(b.order, b.size(), &elems[b.rep]))
        });
        for (cid, class) in classes.iter().enumerate() {
            for &m in &class.members {
                class_of[m] = cid;
            }
        }

        let exponent = classes.iter().fold(1usize, |acc, c| lcm(acc, c.order));
        let power_table = classes
            .iter()
            .map(|c| {
                let rep = &elems[c.rep];
                let mut row = Vec::with_capacity(exponent);
                let mut x = rep.identity_like();
                for _ in 0..exponent {
                    row.push(class_of[index[&x]]);
                    x = x.mul(rep);
                }
                row
            })
            .collect();

        Group {
            name: name.to_string(),
            elems,
            index,
            identity,
            classes,
            class_of,
            power_table,
            exponent,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.elems.len()
    }

    pub fn exponent(&self) -> usize {
        self.exponent
    }

    pub fn elems(&self) -> &[GroupElem] {
        &self.elems
    }

    pub fn elem(&self, i: usize) -> &GroupElem {
        &self.elems[i]
    }

    pub fn index_of(&self, e: &GroupElem) -> Option<usize> {
        self.index.get(e).copied()
    }

    pub fn contains(&self, e: &GroupElem) -> bool {
        self.index.contains_key(e)
    }

    pub fn identity_idx(&self) -> usize {
        self.identity
    }

    pub fn mul_idx(&self, i: usize, j: usize) -> usize {
        self.index[&self.elems[i].mul(&self.elems[j])]
    }

    pub fn inv_idx(&self, i: usize) -> usize {
        self.index[&self.elems[i].inv()]
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn classes(&self) -> &[Class] {
        &self.classes
    }

    pub fn class(&self, c: usize) -> &Class {
        &self.classes[c]
    }

    pub fn class_rep(&self, c: usize) -> &GroupElem {
        &self.elems[self.classes[c].rep]
    }

    pub fn class_of_idx(&self, i: usize) -> usize {
        self.class_of[i]
    }

    pub fn class_of(&self, e: &GroupElem) -> Option<usize> {
        self.index_of(e).map(|i| self.class_of[i])
    }

    /// Class of `rep_c^k`; `k` may be negative.
    pub fn power_class(&self, c: usize, k: i64) -> usize {
        let e = self.exponent as i64;
        self.power_table[c][k.rem_euclid(e) as usize]
    }

    /// Class containing the inverses of class `c`.
    pub fn inverse_class(&self, c: usize) -> usize {
        self.power_class(c, -1)
    }

    /// Indices of elements commuting with everything.
    pub fn center(&self) -> Vec<usize> {
        (0..self.order())
            .filter(|&i| {
                (0..self.order()).all(|j| self.mul_idx(i, j) == self.mul_idx(j, i))
            })
            .collect()
    }

    pub fn is_subgroup_of(&self, g: &Group) -> bool {
        self.elems.iter().all(|e| g.contains(e))
    }

    /// A group is simple iff the normal closure of every nonidentity
    /// class is the whole group.
    pub fn is_simple(&self) -> bool {
        if self.order() == 1 {
            return false;
        }
        self.classes.iter().enumerate().all(|(c, class)| {
            if c == self.class_of[self.identity] {
                return true;
            }
            let gens: Vec<GroupElem> =
                class.members.iter().map(|&m| self.elems[m].clone()).collect();
            Group::from_generators("closure", &gens)
                .map(|h| h.order() == self.order())
                .unwrap_or(false)
        })
    }

    /// Class permutation `c -> class of t c t^{-1}` induced by conjugation.
    /// `t` need not lie in the group but must normalize it.
    pub fn conjugation_class_perm(&self, t: &GroupElem) -> Result<Vec<usize>, GroupError> {
        let ti = t.inv();
        let mut out = Vec::with_capacity(self.num_classes());
        for class in &self.classes {
            let conj = t.mul(&self.elems[class.rep]).mul(&ti);
            let ci = self.class_of(&conj).ok_or_else(|| {
                GroupError::NotNormalizing(t.to_string(), self.name.clone())
            })?;
            out.push(ci);
        }
        Ok(out)
    }
}

impl fmt::Debug for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Group({}, order {}, {} classes)",
            self.name,
            self.order(),
            self.num_classes()
        )
    }
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 { a } else { gcd(b, a % b) }
}
