//! Class-level maps between groups, used to restrict and push forward
//! characters.

use std::sync::Arc;

use super::elem::GroupElem;
use super::group::{Group, GroupError};

/// A map on conjugacy classes induced by a group homomorphism
/// `from -> to`: `image[c]` is the class of `to` containing the image of
/// class `c`.
pub struct ClassMap {
    from: Arc<Group>,
    to: Arc<Group>,
    image: Vec<usize>,
}

impl ClassMap {
    /// Inclusion of a subgroup: every element of `h` must lie in `g`.
    pub fn subgroup(h: &Arc<Group>, g: &Arc<Group>) -> Result<ClassMap, GroupError> {
        if !h.is_subgroup_of(g) {
            return Err(GroupError::NotSubgroup(
                h.name().to_string(),
                g.name().to_string(),
            ));
        }
        let image = h
            .classes()
            .iter()
            .map(|c| g.class_of(h.elem(c.rep)).expect("subgroup element"))
            .collect();
        Ok(ClassMap {
            from: Arc::clone(h),
            to: Arc::clone(g),
            image,
        })
    }

    /// Surjection defined by an explicit map on elements (e.g. reduction
    /// modulo scalars).  Verifies that `f` is multiplicative and lands in
    /// `q` before trusting it.
    pub fn quotient<F>(g: &Arc<Group>, q: &Arc<Group>, f: F) -> Result<ClassMap, GroupError>
    where
        F: Fn(&GroupElem) -> GroupElem,
    {
        let fail = || GroupError::NotHomomorphism(q.name().to_string());
        let images: Vec<usize> = g
            .elems()
            .iter()
            .map(|x| q.index_of(&f(x)).ok_or_else(fail))
            .collect::<Result<_, _>>()?;
        for i in 0..g.order() {
            for j in 0..g.order() {
                if images[g.mul_idx(i, j)] != q.mul_idx(images[i], images[j]) {
                    return Err(fail());
                }
            }
        }
        let image = g
            .classes()
            .iter()
            .map(|c| q.class_of_idx(images[c.rep]))
            .collect();
        Ok(ClassMap {
            from: Arc::clone(g),
            to: Arc::clone(q),
            image,
        })
    }

    pub fn from(&self) -> &Arc<Group> {
        &self.from
    }

    pub fn to(&self) -> &Arc<Group> {
        &self.to
    }

    pub fn class_image(&self, c: usize) -> usize {
        self.image[c]
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s3() -> Arc<Group> {
        Arc::new(
            Group::from_generators(
                "S3",
                &[GroupElem::perm(&[1, 2, 0]), GroupElem::perm(&[1, 0, 2])],
            )
            .unwrap(),
        )
    }

    #[test]
    fn subgroup_map_c3_in_s3() {
        let g = s3();
        let h = Arc::new(Group::from_generators("C3", &[GroupElem::perm(&[1, 2, 0])]).unwrap());
        let map = ClassMap::subgroup(&h, &g).unwrap();
        assert_eq!(map.class_image(0), 0);
        // both nontrivial C3 classes fuse into the 3-cycle class of S3
        assert_eq!(map.class_image(1), map.class_image(2));
        // order of the image class matches
        assert_eq!(g.class(map.class_image(1)).order, 3);
    }

    #[test]
    fn subgroup_map_rejects_non_subgroup() {
        let g = s3();
        let h = Arc::new(Group::from_generators("C2", &[GroupElem::perm(&[0, 2, 1])]).unwrap());
        // C2 generated by (1 2) IS a subgroup of S3 on points {0,1,2}; build
        // one that is not: a 2-cycle moving a 4th point.
        assert!(ClassMap::subgroup(&h, &g).is_ok());
        let bad = Arc::new(
            Group::from_generators("C2x", &[GroupElem::perm(&[1, 0, 2, 3])]).unwrap(),
        );
        assert!(ClassMap::subgroup(&bad, &g).is_err());
    }

    #[test]
    fn quotient_map_sign_of_s3() {
        let g = s3();
        let c2 = Arc::new(Group::from_generators("C2", &[GroupElem::perm(&[1, 0])]).unwrap());
        let map = ClassMap::quotient(&g, &c2, |x| {
            if x.perm_sign() == Some(1) {
                GroupElem::perm(&[0, 1])
            } else {
                GroupElem::perm(&[1, 0])
            }
        })
        .unwrap();
        let id = c2.class_of_idx(c2.identity_idx());
        assert_eq!(map.class_image(0), id);
        assert_ne!(map.class_image(1), id); // transpositions
        assert_eq!(map.class_image(2), id); // 3-cycles
    }

    #[test]
    fn quotient_map_rejects_non_homomorphism() {
        let g = s3();
        let c2 = Arc::new(Group::from_generators("C2", &[GroupElem::perm(&[1, 0])]).unwrap());
        // constant non-identity map is not a homomorphism
        let res = ClassMap::quotient(&g, &c2, |_| GroupElem::perm(&[1, 0]));
        assert!(res.is_err());
    }
}
