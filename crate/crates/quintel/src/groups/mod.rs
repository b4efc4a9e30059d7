//! Finite group machinery: concrete elements (2x2 matrices over F5,
//! permutations on up to 12 points), groups built by closure with
//! canonically ordered conjugacy classes and power maps, class-level
//! maps between groups, and the S5 class-label dictionary.

mod build;
mod classmap;
mod elem;
mod group;
mod label;

pub use build::{
    a5, borel_in, even_part, f20, gl2f5, h10, outer_transversal, projective_action,
    projective_image, s5, scalar_subgroup, square_det_subgroup,
};
pub use classmap::ClassMap;
pub use elem::{ElemError, GroupElem};
pub use group::{Class, Group, GroupError};
pub use label::{cycle_type_label, perm_class_label, pgl_class_label, ClassLabel, LabelError};
