//! Builders for the specific groups this crate works with: GL2(F5), its
//! index-two subgroup with square determinant, the scalar subgroup, the
//! projective quotient acting on the six points of P^1(F5), and the
//! standard permutation groups on five points.

use std::sync::Arc;

use super::classmap::ClassMap;
use super::elem::GroupElem;
use super::group::{Group, GroupError};

/// GL2(F5): 480 elements, 24 conjugacy classes, center of order 4.
pub fn gl2f5() -> Arc<Group> {
    let gens = [
        GroupElem::mat(1, 1, 0, 1),
        GroupElem::mat(1, 0, 1, 1),
        GroupElem::mat(2, 0, 0, 1),
    ];
    let g = Group::from_generators("GL2(F5)", &gens).expect("fixed generators");
    assert_eq!(g.order(), 480);
    assert_eq!(g.num_classes(), 24);
    Arc::new(g)
}

fn expect_gl2(g: &Group) -> Result<(), GroupError> {
    let ok = g.order() == 480 && matches!(g.elem(0), GroupElem::Mat2(_));
    if ok {
        Ok(())
    } else {
        Err(GroupError::WrongGroup {
            expected: "GL2(F5)",
            got: g.order(),
        })
    }
}

/// The index-two subgroup of GL2(F5) whose determinants are squares
/// (1 or 4).  This is the central extension of A5 the crate studies:
/// order 240, containing all four scalars.
pub fn square_det_subgroup(g: &Arc<Group>) -> Result<Arc<Group>, GroupError> {
    expect_gl2(g)?;
    let elems: Vec<GroupElem> = g
        .elems()
        .iter()
        .filter(|e| e.det_is_square() == Some(true))
        .cloned()
        .collect();
    let h = Group::from_elements("GL2(F5)+", elems)?;
    assert_eq!(h.order(), 240);
    Ok(Arc::new(h))
}

/// The scalar matrices: cyclic of order 4.
pub fn scalar_subgroup(g: &Arc<Group>) -> Result<Arc<Group>, GroupError> {
    expect_gl2(g)?;
    let elems: Vec<GroupElem> = g
        .elems()
        .iter()
        .filter(|e| e.is_scalar() == Some(true))
        .cloned()
        .collect();
    let z = Group::from_elements("Z(GL2(F5))", elems)?;
    assert_eq!(z.order(), 4);
    Ok(Arc::new(z))
}

/// Index of the point (x : y) of P^1(F5) in our fixed numbering:
/// k = (k : 1) for k in 0..5, and 5 = (1 : 0), the point at infinity.
fn proj_point(x: u8, y: u8) -> u8 {
    if y != 0 {
        // x / y
        const INV5: [u8; 5] = [0, 1, 3, 2, 4];
        (x * INV5[y as usize]) % 5
    } else {
        5
    }
}

/// The permutation of P^1(F5) induced by a matrix.
pub fn projective_action(m: &GroupElem) -> Result<GroupElem, GroupError> {
    let GroupElem::Mat2(a) = m else {
        return Err(GroupError::WrongGroup {
            expected: "a matrix group",
            got: 0,
        });
    };
    let mut images = Vec::with_capacity(6);
    for k in 0..6u8 {
        let (x, y) = if k < 5 { (k, 1) } else { (1, 0) };
        let nx = (a[0] * x + a[1] * y) % 5;
        let ny = (a[2] * x + a[3] * y) % 5;
        images.push(proj_point(nx, ny));
    }
    Ok(GroupElem::Perm(images))
}

/// Quotient of a matrix group by scalars, realized as permutations of the
/// six points of P^1(F5), together with the class-level quotient map.
pub fn projective_image(g: &Arc<Group>) -> Result<(Arc<Group>, ClassMap), GroupError> {
    let mut elems: Vec<GroupElem> = g
        .elems()
        .iter()
        .map(projective_action)
        .collect::<Result<_, _>>()?;
    elems.sort();
    elems.dedup();
    let name = format!("P{}", g.name());
    let q = Arc::new(Group::from_elements(&name, elems)?);
    let map = ClassMap::quotient(g, &q, |m| {
        projective_action(m).expect("matrix group element")
    })?;
    Ok((q, map))
}

/// Symmetric group on 5 points.
pub fn s5() -> Arc<Group> {
    let gens = [GroupElem::perm(&[1, 2, 3, 4, 0]), GroupElem::perm(&[1, 0, 2, 3, 4])];
    let g = Group::from_generators("S5", &gens).expect("fixed generators");
    assert_eq!(g.order(), 120);
    Arc::new(g)
}

/// Alternating group on 5 points.
pub fn a5() -> Arc<Group> {
    let gens = [GroupElem::perm(&[1, 2, 3, 4, 0]), GroupElem::perm(&[1, 2, 0, 3, 4])];
    let g = Group::from_generators("A5", &gens).expect("fixed generators");
    assert_eq!(g.order(), 60);
    Arc::new(g)
}

/// Frobenius group of order 20 on 5 points: x -> ax + b.
pub fn f20() -> Arc<Group> {
    let gens = [GroupElem::perm(&[1, 2, 3, 4, 0]), GroupElem::perm(&[0, 2, 4, 1, 3])];
    let g = Group::from_generators("F20", &gens).expect("fixed generators");
    assert_eq!(g.order(), 20);
    Arc::new(g)
}

/// Dihedral group of order 10 on 5 points: x -> ±x + b.
pub fn h10() -> Arc<Group> {
    let gens = [GroupElem::perm(&[1, 2, 3, 4, 0]), GroupElem::perm(&[0, 4, 3, 2, 1])];
    let g = Group::from_generators("D10", &gens).expect("fixed generators");
    assert_eq!(g.order(), 10);
    Arc::new(g)
}

/// Stabilizer of the point at infinity inside the projective image of
/// GL2(F5): the image of the upper-triangular Borel, order 20.
pub fn borel_in(pgl: &Arc<Group>) -> Result<Arc<Group>, GroupError> {
    if pgl.order() != 120 || !matches!(pgl.elem(0), GroupElem::Perm(_)) {
        return Err(GroupError::WrongGroup {
            expected: "PGL2(F5) on the six points of P^1",
            got: pgl.order(),
        });
    }
    let elems: Vec<GroupElem> = pgl
        .elems()
        .iter()
        .filter(|e| match e {
            GroupElem::Perm(p) => p.len() == 6 && p[5] == 5,
            _ => false,
        })
        .cloned()
        .collect();
    let b = Group::from_elements("B", elems)?;
    assert_eq!(b.order(), 20);
    Ok(Arc::new(b))
}

/// The even-sign part of a permutation group (kernel of the sign
/// character); equals the whole group when no element is odd.
pub fn even_part(g: &Arc<Group>) -> Result<Arc<Group>, GroupError> {
    let elems: Vec<GroupElem> = g
        .elems()
        .iter()
        .filter(|e| e.perm_sign() == Some(1))
        .cloned()
        .collect();
    if elems.is_empty() {
        return Err(GroupError::WrongGroup {
            expected: "a permutation group",
            got: g.order(),
        });
    }
    let name = format!("{}+", g.name());
    Ok(Arc::new(Group::from_elements(&name, elems)?))
}

/// The canonical coset representative for GL2(F5) over its square-det
/// subgroup: the lexicographically least matrix with non-square
/// determinant, [0 1; 2 0].
pub fn outer_transversal(g: &Arc<Group>) -> Result<GroupElem, GroupError> {
    expect_gl2(g)?;
    g.elems()
        .iter()
        .find(|e| e.det_is_square() == Some(false))
        .cloned()
        .ok_or_else(|| GroupError::NoOuterElement(g.name().to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::label::{cycle_type_label, perm_class_label, pgl_class_label, ClassLabel};
    use std::collections::BTreeMap;

    #[test]
    fn gl2f5_structure() {
        let g = gl2f5();
        assert_eq!(g.order(), 480);
        assert_eq!(g.num_classes(), 24);
        assert_eq!(g.exponent(), 120);
        assert_eq!(g.center().len(), 4);
        let total: usize = g.classes().iter().map(|c| c.size()).sum();
        assert_eq!(total, 480);
    }

    #[test]
    fn square_det_subgroup_structure() {
        let g = gl2f5();
        let n = square_det_subgroup(&g).unwrap();
        assert_eq!(n.order(), 240);
        assert!(n.is_subgroup_of(&g));
        // contains all four scalars
        for s in 1..5 {
            assert!(n.contains(&GroupElem::mat(s, 0, 0, s)));
        }
        assert_eq!(n.num_classes(), 18);
        assert_eq!(n.exponent(), 60);
        // rejects a wrong input group
        let s5g = s5();
        assert!(square_det_subgroup(&s5g).is_err());
    }

    #[test]
    fn projective_image_of_gl2_is_s5_shaped() {
        let g = gl2f5();
        let (pgl, map) = projective_image(&g).unwrap();
        assert_eq!(pgl.order(), 120);
        assert_eq!(pgl.num_classes(), 7);
        assert_eq!(map.from().order(), 480);
        assert_eq!(map.to().order(), 120);

        // label census of the seven classes
        let mut sizes: BTreeMap<ClassLabel, usize> = BTreeMap::new();
        for c in 0..pgl.num_classes() {
            let label = perm_class_label(pgl.class_rep(c)).unwrap();
            *sizes.entry(label).or_insert(0) += pgl.class(c).size();
        }
        for l in ClassLabel::ALL {
            assert_eq!(sizes.get(&l), Some(&l.s5_size()), "class {l}");
        }
    }

    #[test]
    fn matrix_and_permutation_labels_agree() {
        let g = gl2f5();
        let (_, map) = projective_image(&g).unwrap();
        for c in 0..g.num_classes() {
            let m = g.class_rep(c);
            let from_matrix = pgl_class_label(m).unwrap();
            let image_rep = map.to().class_rep(map.class_image(c));
            let from_perm = perm_class_label(image_rep).unwrap();
            assert_eq!(from_matrix, from_perm, "class of {m}");
            // parity = Legendre symbol of det = sign of the 6-point image
            let sign = projective_action(m).unwrap().perm_sign().unwrap();
            let legendre = if m.det_is_square().unwrap() { 1 } else { -1 };
            assert_eq!(sign, legendre);
        }
    }

    #[test]
    fn projective_image_of_square_det_part_is_a5_shaped() {
        let g = gl2f5();
        let n = square_det_subgroup(&g).unwrap();
        let (pa, _) = projective_image(&n).unwrap();
        assert_eq!(pa.order(), 60);
        assert_eq!(pa.num_classes(), 5);
        assert!(pa.is_simple());
    }

    #[test]
    fn scalars_form_central_cyclic_four() {
        let g = gl2f5();
        let z = scalar_subgroup(&g).unwrap();
        assert_eq!(z.order(), 4);
        assert_eq!(z.num_classes(), 4);
        assert_eq!(z.exponent(), 4);
        let center = g.center();
        assert_eq!(center.len(), 4);
        for &i in &center {
            assert!(z.contains(g.elem(i)));
        }
    }

    #[test]
    fn five_point_groups() {
        let s = s5();
        assert_eq!(s.num_classes(), 7);
        let a = a5();
        assert_eq!(a.num_classes(), 5);
        assert!(a.is_simple());
        assert!(a.is_subgroup_of(&s));
        let f = f20();
        assert_eq!(f.order(), 20);
        assert!(f.is_subgroup_of(&s));
        let h = h10();
        assert_eq!(h.order(), 10);
        assert!(h.is_subgroup_of(&f));
        assert!(h.is_subgroup_of(&a), "D10 consists of even permutations");
        // S5 class census by cycle type
        for c in 0..s.num_classes() {
            let ct = s.class_rep(c).cycle_type().unwrap();
            let label = cycle_type_label(&ct).unwrap();
            assert_eq!(s.class(c).size(), label.s5_size());
            assert_eq!(s.class(c).order, label.order());
        }
    }

    #[test]
    fn borel_and_its_even_part() {
        let g = gl2f5();
        let (pgl, _) = projective_image(&g).unwrap();
        let b = borel_in(&pgl).unwrap();
        assert_eq!(b.order(), 20);
        assert!(b.is_subgroup_of(&pgl));
        let h = even_part(&b).unwrap();
        assert_eq!(h.order(), 10);
        // the even part of the Borel is dihedral of order 10: four classes,
        // sizes 1 + 5 + 2 + 2, element orders 1, 2, 5, 5
        let mut orders: Vec<usize> = h.classes().iter().map(|c| c.order).collect();
        orders.sort_unstable();
        assert_eq!(orders, vec![1, 2, 5, 5]);
        assert!(borel_in(&s5()).is_err());
    }

    #[test]
    fn outer_transversal_properties() {
        let g = gl2f5();
        let t = outer_transversal(&g).unwrap();
        assert_eq!(t, GroupElem::mat(0, 1, 2, 0));
        assert_eq!(t.det_is_square(), Some(false));
        // t^2 = [2 0; 0 2] lies in the square-det subgroup
        let n = square_det_subgroup(&g).unwrap();
        assert!(n.contains(&t.mul(&t)));
        assert_eq!(t.mul(&t), GroupElem::mat(2, 0, 0, 2));
        // conjugation by t normalizes the subgroup and fixes scalar classes
        let perm = n.conjugation_class_perm(&t).unwrap();
        assert_eq!(perm.len(), n.num_classes());
        let z = scalar_subgroup(&g).unwrap();
        for i in 0..z.order() {
            let s = z.elem(i);
            let c = n.class_of(s).unwrap();
            assert_eq!(perm[c], c, "scalar class moved");
        }
        // it genuinely permutes: applying twice gives a bijection
        let mut seen = vec![false; perm.len()];
        for &p in &perm {
            assert!(!seen[p]);
            seen[p] = true;
        }
    }

    #[test]
    fn power_map_on_gl2_classes() {
        let g = gl2f5();
        for c in 0..g.num_classes() {
            let rep = g.class_rep(c).clone();
            for k in [2i64, 3, 5, -1, 7] {
                let kk = k.rem_euclid(g.exponent() as i64) as usize;
                let direct = g.class_of(&rep.pow(kk)).unwrap();
                assert_eq!(g.power_class(c, k), direct);
            }
        }
    }
}
