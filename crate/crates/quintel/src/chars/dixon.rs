//! Character tables by Dixon's method: diagonalize the class
//! multiplication matrices over F_241, recover degrees and mod-241
//! character values, then lift to exact values in Q(zeta_120) through
//! eigenvalue multiplicities.

use std::sync::Arc;

use crate::exactmath::{cyc_root, Cyc, CYC_LEVEL};
use crate::groups::Group;

use super::character::{CharError, Character};
use super::modl::{
    self, identity, mat_mul, nullspace, primitive_root, solve_in_basis, Mat, ELL,
};

/// The exact character table of `g`, rows in canonical order: degree
/// ascending, then values lexicographically descending (so the trivial
/// character is always row 0).  Fails if the group exponent does not
/// divide 120 or if any internal consistency check trips.
pub fn character_table(g: &Arc<Group>) -> Result<Vec<Character>, CharError> {
    let r = g.num_classes();
    let m = g.exponent();
    if CYC_LEVEL as usize % m != 0 {
        return Err(CharError::ExponentUnsupported(m));
    }

    let mats = class_matrices(g);
    let omegas = common_eigenvectors(&mats, r)?;
    let mod_table = mod_ell_table(g, &omegas)?;
    let mut rows = lift_table(g, &mod_table)?;
    verify_table(g, &rows)?;

    rows.sort_by(|a, b| {
        let da = a.degree().as_int().expect("verified integral degree");
        let db = b.degree().as_int().expect("verified integral degree");
        da.cmp(&db).then_with(|| b.values().cmp(a.values()))
    });
    if rows[0] != Character::trivial(g) {
        return Err(CharError::Inconsistent(
            "trivial character is not the first row".into(),
        ));
    }
    Ok(rows)
}

/// Class multiplication coefficients: `mats[i][j][k]` counts, for the
/// fixed representative z_k of class k, the elements x of class i with
/// x^{-1} z_k in class j.  Then K_i K_j = sum_k a_{ijk} K_k in the center
/// of the group algebra, and each column vector of central-character
/// values is a common eigenvector of all these matrices.
fn class_matrices(g: &Group) -> Vec<Mat> {
    let r = g.num_classes();
    let mut mats = vec![vec![vec![0u64; r]; r]; r];
    let reps: Vec<usize> = g.classes().iter().map(|c| c.rep).collect();
    for i in 0..r {
        for &x in &g.class(i).members {
            let xi = g.inv_idx(x);
            for (k, &zk) in reps.iter().enumerate() {
                let j = g.class_of_idx(g.mul_idx(xi, zk));
                mats[i][j][k] += 1;
            }
        }
    }
    mats
}

/// Splits F_241^r into the common one-dimensional eigenspaces of the
/// class matrices and returns each eigenvector normalized so its entry
/// at the identity class is 1 — these entries are the central character
/// values omega_k mod 241.
fn common_eigenvectors(mats: &[Mat], r: usize) -> Result<Vec<Vec<u64>>, CharError> {
    let mut spaces: Vec<Mat> = vec![identity(r)];
    for mat in mats {
        if spaces.iter().all(|s| s[0].len() == 1) {
            break;
        }
        let mut next = Vec::with_capacity(r);
        for s in spaces {
            if s[0].len() == 1 {
                next.push(s);
            } else {
                next.extend(split_space(&s, mat)?);
            }
        }
        spaces = next;
    }
    if let Some(s) = spaces.iter().find(|s| s[0].len() > 1) {
        return Err(CharError::SplitFailed { dim: s[0].len() });
    }
    if spaces.len() != r {
        return Err(CharError::Inconsistent(format!(
            "expected {r} common eigenspaces, found {}",
            spaces.len()
        )));
    }
    spaces
        .into_iter()
        .map(|s| {
            let w: Vec<u64> = s.iter().map(|row| row[0]).collect();
            let w0 = w[0];
            if w0 == 0 {
                return Err(CharError::Inconsistent(
                    "eigenvector vanishes at the identity class".into(),
                ));
            }
            let scale = modl::inv(w0);
            Ok(w.into_iter().map(|x| modl::mul(x, scale)).collect())
        })
        .collect()
}

/// Refines the subspace spanned by the columns of `basis` into
/// eigenspaces of `mat` (which must preserve it).
fn split_space(basis: &Mat, mat: &Mat) -> Result<Vec<Mat>, CharError> {
    let d = basis[0].len();
    let mb = mat_mul(mat, basis);
    let restricted = solve_in_basis(basis, &mb).ok_or_else(|| {
        CharError::Inconsistent("class matrix does not preserve a common eigenspace".into())
    })?;
    let mut found = Vec::new();
    let mut dim = 0usize;
    for lambda in 0..ELL {
        let shifted: Mat = (0..d)
            .map(|i| {
                (0..d)
                    .map(|j| {
                        if i == j {
                            modl::sub(restricted[i][j], lambda)
                        } else {
                            restricted[i][j]
                        }
                    })
                    .collect()
            })
            .collect();
        let kernel = nullspace(&shifted);
        if kernel.is_empty() {
            continue;
        }
        // columns of the new space: basis * kernel vectors
        let coords: Mat = (0..d)
            .map(|i| kernel.iter().map(|v| v[i]).collect())
            .collect();
        found.push(mat_mul(basis, &coords));
        dim += kernel.len();
        if dim == d {
            break;
        }
    }
    if dim != d {
        return Err(CharError::Inconsistent(
            "class matrix is not diagonalizable over F_241".into(),
        ));
    }
    Ok(found)
}

/// From central characters to mod-241 character values: recover the
/// degree d from d^2 = |G| / sum_k omega_k omega_{k*} / |C_k|, then
/// chi_k = d omega_k / |C_k|.
fn mod_ell_table(g: &Group, omegas: &[Vec<u64>]) -> Result<Vec<(u64, Vec<u64>)>, CharError> {
    let r = g.num_classes();
    let order = (g.order() as u64) % ELL;
    let bound = (g.order() as f64).sqrt().floor() as u64;
    assert!(2 * bound < ELL, "degree recovery requires |G| < (241/2)^2");
    let inv_size: Vec<u64> = (0..r)
        .map(|k| modl::inv(g.class(k).size() as u64 % ELL))
        .collect();
    let mut out = Vec::with_capacity(omegas.len());
    for w in omegas {
        let mut s = 0u64;
        for k in 0..r {
            let kstar = g.inverse_class(k);
            s = modl::add(s, modl::mul(modl::mul(w[k], w[kstar]), inv_size[k]));
        }
        if s == 0 {
            return Err(CharError::Inconsistent("degree equation degenerated".into()));
        }
        let d2 = modl::mul(order, modl::inv(s));
        let d = (1..=bound)
            .find(|&d| modl::mul(d, d) == d2)
            .ok_or_else(|| {
                CharError::Inconsistent(format!("no degree d <= {bound} with d^2 = {d2}"))
            })?;
        let values: Vec<u64> = (0..r)
            .map(|k| modl::mul(modl::mul(d, w[k]), inv_size[k]))
            .collect();
        out.push((d, values));
    }
    Ok(out)
}

/// Lifts a mod-241 character to exact values: on a class of element
/// order n, the multiplicity of zeta_n^j among the eigenvalues is
/// (1/n) sum_l chi(c^l) z_n^{-jl} mod 241, a small nonnegative integer
/// bounded by the degree, so it can be read off from its residue.
fn lift_table(g: &Arc<Group>, mod_table: &[(u64, Vec<u64>)]) -> Result<Vec<Character>, CharError> {
    let m = g.exponent() as u64;
    let z = modl::pow(primitive_root(), (ELL - 1) / m);
    let r = g.num_classes();
    let mut rows = Vec::with_capacity(mod_table.len());
    for (d, chi) in mod_table {
        let mut values = Vec::with_capacity(r);
        for c in 0..r {
            let n = g.class(c).order as u64;
            let zn = modl::pow(z, m / n); // order-n root of unity mod 241
            let inv_n = modl::inv(n);
            let mut value = Cyc::zero();
            for j in 0..n {
                let mut acc = 0u64;
                for l in 0..n {
                    let e = (n - (j * l) % n) % n;
                    let term = modl::mul(chi[g.power_class(c, l as i64)], modl::pow(zn, e));
                    acc = modl::add(acc, term);
                }
                let mu = modl::mul(acc, inv_n);
                if mu == 0 {
                    continue;
                }
                if mu > *d {
                    return Err(CharError::Inconsistent(format!(
                        "eigenvalue multiplicity {mu} exceeds degree {d}"
                    )));
                }
                value = value
                    + Cyc::from_int(mu as i64) * cyc_root(n as u32, j as i64)?;
            }
            values.push(value);
        }
        rows.push(Character::new(g, values)?);
    }
    Ok(rows)
}

/// Exact post-checks: degrees positive integers with sum of squares
/// |G|, and full first orthogonality.
fn verify_table(g: &Arc<Group>, rows: &[Character]) -> Result<(), CharError> {
    use crate::exactmath::rat_int;
    if rows.len() != g.num_classes() {
        return Err(CharError::Inconsistent(format!(
            "{} rows for {} classes",
            rows.len(),
            g.num_classes()
        )));
    }
    let mut sum_sq = num::BigInt::from(0);
    for row in rows {
        let d = row
            .degree()
            .as_int()
            .ok_or_else(|| CharError::Inconsistent("non-integral degree".into()))?;
        if d <= 0.into() {
            return Err(CharError::Inconsistent("non-positive degree".into()));
        }
        sum_sq += &d * &d;
    }
    if sum_sq != g.order().into() {
        return Err(CharError::Inconsistent(format!(
            "degree squares sum to {sum_sq}, group order is {}",
            g.order()
        )));
    }
    for (i, a) in rows.iter().enumerate() {
        for (j, b) in rows.iter().enumerate().skip(i) {
            let expect = rat_int(i64::from(i == j));
            if a.inner(b)? != expect {
                return Err(CharError::Inconsistent(format!(
                    "rows {i} and {j} are not orthonormal"
                )));
            }
        }
    }
    Ok(())
}
