//! Verification of the character-theoretic lemmas for GL2(F5), its
//! square-determinant subgroup, and the seven-class projective quotient:
//! the central-extension structure, the tensor identities, the two
//! extensions of the cubic plethysm with their similitude character, the
//! symplectic wedge decomposition, and the enumeration of admissible
//! symplectic parameter scenarios with their defect sums.

mod context;
mod report;
mod satake;
mod verify;

pub use context::{Context, LemmaError, S5_GOLDEN, S5_ROW_NAMES};
pub use report::{rat_string, report_json, row_json, rows_json};
pub use satake::{
    density_sum, phi_forced, satake_scenarios, verify_density_sums, verify_scenarios, Hypothesis,
    ScenarioRow,
};
pub use verify::{
    find_xi, verify_central_extension, verify_extensions, verify_lemma_char, verify_lemma_group,
    verify_projective_table, verify_symplectic_lemma, LemmaReport,
};
