//! The degree-12 factorization: the permutation character of the coset
//! action on the order-10 subgroup equals the degree-6 coset character
//! plus eta plus rho5, checked classwise and as local-factor polynomials.

use num::Zero;

use crate::chars::induced_perm_char;
use crate::exactmath::{rat_int, Cyc, RatPoly};
use crate::groups::{borel_in, even_part, ClassLabel};
use crate::lemmas::{Context, LemmaReport, S5_ROW_NAMES};

use super::local::local_factor;
use super::LfunError;

pub fn verify_zeta_h_factorization() -> Result<LemmaReport, LfunError> {
    let ctx = Context::shared();
    let mut rep = LemmaReport::new("zeta-h-factorization");

    // Only the conjugacy class of each subgroup matters at the character
    // level, so fix the point stabilizer (order 20) and its even part.
    let borel = borel_in(&ctx.pgl)?;
    rep.check(
        borel.order() == 20,
        "index-6 subgroup: a point stabilizer of order 20",
    );
    let h = even_part(&borel)?;
    rep.check(h.order() == 10, "index-12 subgroup: its even part, order 10");

    let perm_f = induced_perm_char(&ctx.pgl, &borel)?;
    let perm_h = induced_perm_char(&ctx.pgl, &h)?;
    rep.check(
        perm_f.degree() == &Cyc::from_int(6) && perm_h.degree() == &Cyc::from_int(12),
        "degree bookkeeping: 12 = 6 + 1 + 5",
    );

    let eta = ctx.pgl_row("eta").expect("eta row");
    let rho5 = ctx.pgl_row("rho5").expect("rho5 row");
    let rhs = perm_f.plus(eta)?.plus(rho5)?;
    rep.check(
        perm_h.values() == rhs.values(),
        "perm_H = perm_F + eta + rho5 classwise",
    );

    // Decompose perm_F against the table; the identity above pins down
    // which of the two degree-5 twists appears, so report it.
    let mut parts: Vec<&str> = Vec::new();
    for name in S5_ROW_NAMES {
        let row = ctx.pgl_row(name).expect("table row");
        let m = perm_f.inner(row)?;
        if m.is_zero() {
            continue;
        }
        if !m.is_integer() {
            return Err(LfunError::Char(crate::chars::CharError::Inconsistent(
                format!("non-integral multiplicity {m} in perm_F"),
            )));
        }
        for _ in num::range(num::BigInt::from(0), m.to_integer()) {
            parts.push(name);
        }
    }
    let reconstructed = parts
        .iter()
        .map(|name| ctx.pgl_row(name).expect("table row").clone())
        .reduce(|a, b| a.plus(&b).expect("same group"));
    rep.check(
        reconstructed.map(|r| r.values() == perm_f.values()) == Some(true),
        "perm_F decomposes exactly over the table",
    );
    rep.check(
        parts.len() == 2 && parts[0] == "1" && (parts[1] == "rho5" || parts[1] == "rho5eta"),
        "perm_F = 1 + (a degree-5 twist)",
    );
    if let Some(twist) = parts.get(1) {
        rep.note(format!("perm_F = 1 + {twist}"));
    }

    // The same identity at the level of exact local factors, class by class.
    for label in ClassLabel::ALL {
        let lhs = local_factor(&perm_h, label)?;
        let rhs = local_factor(&perm_f, label)?
            .mul(&local_factor(eta, label)?)
            .mul(&local_factor(rho5, label)?);
        rep.check(lhs == rhs, format!("local factor identity at {label}"));
    }

    // Spot shape at 5A: two fixed cosets and two 5-cycles on each side.
    let at_5a = local_factor(&perm_h, ClassLabel::C5A)?;
    let one_minus_x = RatPoly::new(vec![rat_int(1), rat_int(-1)]);
    let one_minus_x5 = RatPoly::new(vec![
        rat_int(1),
        rat_int(0),
        rat_int(0),
        rat_int(0),
        rat_int(0),
        rat_int(-1),
    ]);
    let want = one_minus_x
        .mul(&one_minus_x)
        .mul(&one_minus_x5)
        .mul(&one_minus_x5);
    rep.check(
        at_5a.to_rat_poly()? == want,
        "5A factor is (1-X)^2 (1-X^5)^2 on both sides",
    );
    rep.note(format!("5A factor: {at_5a}"));
    Ok(rep)
}
