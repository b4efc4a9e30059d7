//! The shared computational context: every group, class map, character
//! table, and distinguished character the verification lemmas refer to,
//! built once and reused.

use std::sync::{Arc, OnceLock};

use thiserror::Error;

use crate::chars::{character_table, extensions_of, CharError, Character};
use crate::exactmath::Cyc;
use crate::groups::{
    gl2f5, outer_transversal, pgl_class_label, projective_image, scalar_subgroup,
    square_det_subgroup, ClassLabel, ClassMap, Group, GroupElem, GroupError, LabelError,
};

#[derive(Debug, Error)]
pub enum LemmaError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Char(#[from] CharError),
    #[error(transparent)]
    Label(#[from] LabelError),
    #[error("expected exactly two extensions of the cubic plethysm, found {0}")]
    ExtensionCount(usize),
    #[error("the two extensions do not differ by the parity twist")]
    ExtensionTwist,
    #[error("no unique linear character pairs the extension with its conjugate (found {0})")]
    SimilitudeCount(usize),
    #[error("canonical extension tie-break failed: value on the least 6A class is real")]
    TieBreak,
    #[error("computed table does not match the expected table at row {row}, class {class}")]
    GoldenMismatch { row: usize, class: usize },
    #[error("no class of label {0} admits an allowed parameter multiset")]
    NoAdmissibleRows(ClassLabel),
    #[error("classes of label {label} disagree on their scenario presentations")]
    ScenarioMismatch { label: ClassLabel },
    #[error("defect value is not forced on label {label}: rows give distinct values")]
    PhiNotForced { label: ClassLabel },
    #[error("scenario internals: {0}")]
    Scenario(String),
}

/// Row names of the seven-class table, in canonical row order.
pub const S5_ROW_NAMES: [&str; 7] = ["1", "eta", "rho4", "rho4eta", "rho5", "rho5eta", "rho6"];

/// The reference character table of S5 (= PGL2(F5)), rows in canonical
/// order (degree, then lexicographically descending values), columns in
/// canonical class order 1, 2A, 2B, 3A, 4A, 5A, 6A.
pub const S5_GOLDEN: [[i64; 7]; 7] = [
    [1, 1, 1, 1, 1, 1, 1],
    [1, -1, 1, 1, -1, 1, -1],
    [4, 2, 0, 1, 0, -1, -1],
    [4, -2, 0, 1, 0, -1, 1],
    [5, 1, 1, -1, -1, 0, 1],
    [5, -1, 1, -1, 1, 0, -1],
    [6, 0, -2, 0, 0, 1, 0],
];

/// Everything the lemma verifiers need, precomputed.
pub struct Context {
    pub gl2: Arc<Group>,
    /// The square-determinant subgroup of GL2(F5): the central extension
    /// of A5 carrying the faithful degree-2 characters.
    pub n: Arc<Group>,
    /// The four scalar matrices.
    pub delta: Arc<Group>,
    /// PGL2(F5) acting on the six points of P^1(F5).
    pub pgl: Arc<Group>,
    /// Projective image of the square-determinant subgroup.
    pub pa5: Arc<Group>,
    pub n_in_gl2: ClassMap,
    pub delta_in_n: ClassMap,
    pub pgl_map: ClassMap,
    /// Quotient map from the square-determinant subgroup onto its
    /// projective image.
    pub pa5_map: ClassMap,
    pub table_gl2: Vec<Character>,
    pub table_n: Vec<Character>,
    pub table_pgl: Vec<Character>,
    /// S5 class label of each GL2(F5) class.
    pub gl2_labels: Vec<ClassLabel>,
    /// S5 class label of each PGL2(F5) class (a bijection).
    pub pgl_labels: Vec<ClassLabel>,
    /// Canonical coset representative for the non-square-determinant coset.
    pub iota: GroupElem,
    /// Class permutation of the subgroup induced by conjugation with iota.
    pub iota_classes: Vec<usize>,
    /// First faithful degree-2 row of the subgroup table.
    pub rho: Character,
    /// rho composed with conjugation by iota.
    pub iota_rho: Character,
    pub det_rho: Character,
    pub sym3_rho: Character,
    /// Canonical extension of Sym^3(rho) to GL2(F5).
    pub xi: Character,
    /// The other extension: xi tensored with the parity character.
    pub xi_eta: Character,
    /// Linear character of GL2(F5) cutting out the square-det subgroup.
    pub eta: Character,
    /// The similitude character: conj(xi) = xi * psi.
    pub psi: Character,
    /// The degree-5 row of the PGL table pulled back to GL2(F5).
    pub rho5_pullback: Character,
}

impl Context {
    pub fn new() -> Result<Context, LemmaError> {
        let gl2 = gl2f5();
        let n = square_det_subgroup(&gl2)?;
        let delta = scalar_subgroup(&gl2)?;
        let (pgl, pgl_map) = projective_image(&gl2)?;
        let (pa5, pa5_map) = projective_image(&n)?;
        let n_in_gl2 = ClassMap::subgroup(&n, &gl2)?;
        let delta_in_n = ClassMap::subgroup(&delta, &n)?;

        let table_gl2 = character_table(&gl2)?;
        let table_n = character_table(&n)?;
        let table_pgl = character_table(&pgl)?;

        let gl2_labels = (0..gl2.num_classes())
            .map(|c| pgl_class_label(gl2.class_rep(c)))
            .collect::<Result<Vec<_>, _>>()?;
        let pgl_labels = (0..pgl.num_classes())
            .map(|c| crate::groups::perm_class_label(pgl.class_rep(c)))
            .collect::<Result<Vec<_>, _>>()?;

        let iota = outer_transversal(&gl2)?;
        let iota_classes = n.conjugation_class_perm(&iota)?;

        // eta: +1 on square-det classes, -1 elsewhere; must be a table row.
        let eta_values: Vec<Cyc> = (0..gl2.num_classes())
            .map(|c| {
                let sq = gl2.class_rep(c).det_is_square().expect("matrix");
                Cyc::from_int(if sq { 1 } else { -1 })
            })
            .collect();
        let eta = Character::new(&gl2, eta_values)?;
        if !table_gl2.contains(&eta) {
            return Err(LemmaError::Scenario(
                "parity character is not a row of the table".into(),
            ));
        }

        let rho = table_n
            .iter()
            .find(|r| r.degree() == &Cyc::from_int(2))
            .expect("degree-2 rows exist")
            .clone();
        let iota_rho = rho.transport(&iota_classes)?;
        let det_rho = rho.ext_power(2)?;
        let sym3_rho = rho.sym_power(3)?;

        // the two extensions of Sym^3(rho), disambiguated by the sign of
        // the imaginary part on the least 6A class
        let exts = extensions_of(&sym3_rho, &table_gl2, &n_in_gl2)?;
        if exts.len() != 2 {
            return Err(LemmaError::ExtensionCount(exts.len()));
        }
        if exts[0] != exts[1].tensor(&eta)? {
            return Err(LemmaError::ExtensionTwist);
        }
        let least_6a = (0..gl2.num_classes())
            .filter(|&c| gl2_labels[c] == ClassLabel::C6A)
            .min_by_key(|&c| gl2.class_rep(c).clone())
            .expect("6A classes exist");
        let (mut xi, mut xi_eta) = (exts[0].clone(), exts[1].clone());
        let im = xi.value(least_6a).eval_complex().1;
        if im.abs() < 1e-9 {
            return Err(LemmaError::TieBreak);
        }
        if im < 0.0 {
            std::mem::swap(&mut xi, &mut xi_eta);
        }

        // psi: the unique linear row with conj(xi) = xi * psi
        let conj_xi = xi.conj();
        let mut psis: Vec<Character> = table_gl2
            .iter()
            .filter(|r| r.degree() == &Cyc::one())
            .filter(|r| xi.tensor(r).map(|t| t == conj_xi).unwrap_or(false))
            .cloned()
            .collect();
        if psis.len() != 1 {
            return Err(LemmaError::SimilitudeCount(psis.len()));
        }
        let psi = psis.pop().expect("checked length");

        let rho5_pullback = table_pgl[4].restrict_along(&pgl_map)?;

        Ok(Context {
            gl2,
            n,
            delta,
            pgl,
            pa5,
            n_in_gl2,
            delta_in_n,
            pgl_map,
            pa5_map,
            table_gl2,
            table_n,
            table_pgl,
            gl2_labels,
            pgl_labels,
            iota,
            iota_classes,
            rho,
            iota_rho,
            det_rho,
            sym3_rho,
            xi,
            xi_eta,
            eta,
            psi,
            rho5_pullback,
        })
    }

    /// Process-wide shared instance (the context is immutable and costs a
    /// couple of seconds to build).
    pub fn shared() -> &'static Context {
        static CTX: OnceLock<Context> = OnceLock::new();
        CTX.get_or_init(|| Context::new().expect("context construction is deterministic"))
    }

    /// Index of the PGL class carrying a given label.
    pub fn pgl_class_of(&self, label: ClassLabel) -> usize {
        self.pgl_labels
            .iter()
            .position(|&l| l == label)
            .expect("all seven labels occur")
    }

    /// GL2(F5) classes lying over a given label, ascending.
    pub fn gl2_classes_of(&self, label: ClassLabel) -> Vec<usize> {
        (0..self.gl2.num_classes())
            .filter(|&c| self.gl2_labels[c] == label)
            .collect()
    }

    /// Named row of the PGL table ("1", "eta", "rho4", ..., "rho6").
    pub fn pgl_row(&self, name: &str) -> Option<&Character> {
        let i = S5_ROW_NAMES.iter().position(|&n| n == name)?;
        self.table_pgl.get(i)
    }
}
