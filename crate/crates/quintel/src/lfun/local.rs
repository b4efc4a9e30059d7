//! Exact local Euler factors and the two closed-form factor identities:
//! the Ω-exceptional ratio and the positive Taylor expansion.

use std::fmt;

use num::One;

use crate::exactmath::{rat_int, Cyc, Rat, RatPoly};
use crate::groups::{perm_class_label, ClassLabel};
use crate::chars::Character;
use crate::lemmas::{satake_scenarios, Context, Hypothesis, LemmaReport};

use super::LfunError;

/// Exact local factor Π over eigenvalues λ of (1 − λX), coefficients in
/// Q(ζ120).  Constant term 1; degree = character degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalFactor {
    pub label: ClassLabel,
    /// Coefficients, constant term first.
    pub coeffs: Vec<Cyc>,
}

impl LocalFactor {
    /// Expands Π (1 − λX) over an eigenvalue multiset.
    pub fn from_eigenvalues(label: ClassLabel, eigenvalues: &[Cyc]) -> LocalFactor {
        let mut coeffs = vec![Cyc::one()];
        for lam in eigenvalues {
            let mut next = vec![Cyc::zero(); coeffs.len() + 1];
            for (k, c) in coeffs.iter().enumerate() {
                next[k] = &next[k] + c;
                next[k + 1] = &next[k + 1] - &(lam * c);
            }
            coeffs = next;
        }
        LocalFactor { label, coeffs }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Product of two factors at the same class (eigenvalue multiset union).
    pub fn mul(&self, other: &LocalFactor) -> LocalFactor {
        assert_eq!(self.label, other.label, "local factors at different classes");
        let mut coeffs = vec![Cyc::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        LocalFactor {
            label: self.label,
            coeffs,
        }
    }

    /// Coefficients as rationals.  Every character of S5 is rational-valued,
    /// so factors built from them never fail here.
    pub fn rational_coeffs(&self) -> Result<Vec<Rat>, LfunError> {
        self.coeffs
            .iter()
            .map(|c| c.as_rat().ok_or(LfunError::NonRationalCoefficient))
            .collect()
    }

    pub fn to_rat_poly(&self) -> Result<RatPoly, LfunError> {
        Ok(RatPoly::new(self.rational_coeffs()?))
    }
}

impl fmt::Display for LocalFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let body = match c.as_rat() {
                Some(r) => r.to_string(),
                None => format!("({})", c.approx_string()),
            };
            let (sign, mag) = match body.strip_prefix('-') {
                Some(rest) => ('-', rest.to_string()),
                None => ('+', body),
            };
            if wrote {
                write!(f, " {sign} ")?;
            } else if sign == '-' {
                write!(f, "-")?;
            }
            wrote = true;
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if mag != "1" {
                        write!(f, "{mag}")?;
                    }
                    write!(f, "X")?;
                    if k > 1 {
                        write!(f, "^{k}")?;
                    }
                }
            }
        }
        if !wrote {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Index of the class labeled `label` in the group of `a`, which must be a
/// faithful permutation realization of S5.
fn class_index(a: &Character, label: ClassLabel) -> Result<usize, LfunError> {
    let g = a.group();
    for (i, class) in g.classes().iter().enumerate() {
        if perm_class_label(g.elem(class.rep))? == label {
            return Ok(i);
        }
    }
    Err(LfunError::MissingClass(label.name()))
}

/// Exact local factor of `a` at the class labeled `label`.
pub fn local_factor(a: &Character, label: ClassLabel) -> Result<LocalFactor, LfunError> {
    let class = class_index(a, label)?;
    let eigenvalues = a.eigenvalues(class)?;
    let factor = LocalFactor::from_eigenvalues(label, &eigenvalues);
    debug_assert!(factor.coeffs[0] == Cyc::one());
    Ok(factor)
}

/// Builds (1 − X)^a (1 + X)^b (1 + X²)^c as an exact rational polynomial.
fn pm_poly(a: usize, b: usize, c: usize) -> RatPoly {
    let one_minus = RatPoly::new(vec![rat_int(1), rat_int(-1)]);
    let one_plus = RatPoly::new(vec![rat_int(1), rat_int(1)]);
    let one_plus_sq = RatPoly::new(vec![rat_int(1), rat_int(0), rat_int(1)]);
    let mut out = RatPoly::one();
    for _ in 0..a {
        out = out.mul(&one_minus);
    }
    for _ in 0..b {
        out = out.mul(&one_plus);
    }
    for _ in 0..c {
        out = out.mul(&one_plus_sq);
    }
    out
}

/// The Ω-exceptional factor identity, checked exactly:
///
///   [(1+X²)(1−X)(1+X)²] / [(1+X²)(1−X)³]  =  ((1+X)/(1−X))²
///
/// where the numerator is the ρ5 local factor at 4A and the denominator is
/// the reciprocal polynomial of the exceptional reality scenario
/// T = {1, i, −i, 1, 1} produced by the scenario engine.
pub fn omega_factor_identity_check() -> Result<LemmaReport, LfunError> {
    let ctx = Context::shared();
    let mut rep = LemmaReport::new("omega-factor-identity");

    let rho5 = ctx.pgl_row("rho5").expect("rho5 row");
    let num = local_factor(rho5, ClassLabel::C4A)?;
    rep.check(
        num.to_rat_poly()? == pm_poly(1, 2, 1),
        "rho5 local factor at 4A is (1+X^2)(1-X)(1+X)^2",
    );

    // The exceptional T multiset from the 4A scenario rows.
    let i = Cyc::i_unit();
    let mut expected_t = vec![Cyc::one(), Cyc::one(), Cyc::one(), i.clone(), -&i];
    expected_t.sort();
    let mut rows = satake_scenarios(ctx, ClassLabel::C4A, Hypothesis::Psi)?;
    rows.extend(satake_scenarios(ctx, ClassLabel::C4A, Hypothesis::PsiEta)?);
    let omega_row = rows.iter().find(|r| r.t == expected_t);
    rep.check(
        omega_row.is_some(),
        "a 4A scenario row carries T = {1, i, -i, 1, 1}",
    );
    let den = match omega_row {
        Some(row) => LocalFactor::from_eigenvalues(ClassLabel::C4A, &row.t),
        None => LocalFactor::from_eigenvalues(ClassLabel::C4A, &expected_t),
    };
    rep.check(
        den.to_rat_poly()? == pm_poly(3, 0, 1),
        "its reciprocal polynomial is (1+X^2)(1-X)^3",
    );

    // Cross-multiplied rational-function identity.
    let lhs = num.to_rat_poly()?.mul(&pm_poly(2, 0, 0));
    let rhs = den.to_rat_poly()?.mul(&pm_poly(0, 2, 0));
    rep.check(
        lhs.sub(&rhs).is_zero(),
        "num * (1-X)^2 = den * (1+X)^2 exactly",
    );
    rep.note(format!("numerator   {num}"));
    rep.note(format!("denominator {den}"));
    Ok(rep)
}

/// Checks the exact expansion (1+x)²/(1−x)² = 1 + Σ 4n xⁿ, coefficient by
/// coefficient in exact rational arithmetic, for 1 ≤ n ≤ n_max.
pub fn taylor_positivity_check(n_max: usize) -> LemmaReport {
    let mut rep = LemmaReport::new("taylor-positivity");
    // Power-series division c = (1+2x+x^2) / (1-2x+x^2):
    // c_n = a_n + 2 c_{n-1} - c_{n-2}.
    let a = |n: usize| match n {
        0 => rat_int(1),
        1 => rat_int(2),
        2 => rat_int(1),
        _ => rat_int(0),
    };
    let mut c: Vec<Rat> = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let mut v = a(n);
        if n >= 1 {
            v += rat_int(2) * &c[n - 1];
        }
        if n >= 2 {
            v -= c[n - 2].clone();
        }
        c.push(v);
    }
    rep.check(c[0].is_one(), "constant term is 1");
    let mut bad = None;
    for (n, v) in c.iter().enumerate().skip(1) {
        if *v != rat_int(4 * n as i64) {
            bad = Some(n);
            break;
        }
    }
    match bad {
        None => rep.check(
            true,
            format!("coefficient n equals 4n (all positive) for 1 <= n <= {n_max}"),
        ),
        Some(n) => rep.check(false, format!("coefficient {n} equals {}: got {}", 4 * n, c[n])),
    }
    rep
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rat;

    #[test]
    fn local_factor_examples() {
        let ctx = Context::shared();
        let rho5 = ctx.pgl_row("rho5").expect("rho5 row");
        // (rho5, 4A) = (1+X^2)(1-X)(1+X)^2 = 1 + X - X^4 - X^5
        let f = local_factor(rho5, ClassLabel::C4A).unwrap();
        let want: Vec<Cyc> = [1, 1, 0, 0, -1, -1].iter().map(|&n| Cyc::from_int(n)).collect();
        assert_eq!(f.coeffs, want);
        assert_eq!(f.degree(), 5);
        assert_eq!(f.to_string(), "1 + X - X^4 - X^5");

        // Trivial character: 1 - X at every class.
        let triv = Character::trivial(&ctx.pgl);
        for label in ClassLabel::ALL {
            let f = local_factor(&triv, label).unwrap();
            assert_eq!(f.coeffs, vec![Cyc::one(), -&Cyc::one()]);
        }

        // Identity class: all eigenvalues 1.
        let f = local_factor(rho5, ClassLabel::C1).unwrap();
        assert_eq!(f.to_rat_poly().unwrap(), pm_poly(5, 0, 0));
        assert_eq!(f.to_string(), "1 - 5X + 10X^2 - 10X^3 + 5X^4 - X^5");
    }

    #[test]
    fn local_factor_coefficients_are_real_for_every_row() {
        // S5 characters are rational-valued, so every factor must have
        // conjugation-fixed (here: rational) coefficients.
        let ctx = Context::shared();
        for name in crate::lemmas::S5_ROW_NAMES {
            let row = ctx.pgl_row(name).expect("table row");
            for label in ClassLabel::ALL {
                let f = local_factor(row, label).unwrap();
                assert_eq!(f.degree(), {
                    let d = row.degree().as_rat().unwrap();
                    usize::try_from(d.to_integer()).unwrap()
                });
                assert!(f.coeffs[0] == Cyc::one());
                for c in &f.coeffs {
                    assert_eq!(c.conj(), *c, "{name} at {label}");
                    assert!(c.as_rat().is_some());
                }
            }
        }
    }

    #[test]
    fn sum_characters_multiply_factors() {
        let ctx = Context::shared();
        let rho4 = ctx.pgl_row("rho4").expect("row");
        let rho5 = ctx.pgl_row("rho5").expect("row");
        let sum = rho4.plus(rho5).unwrap();
        for label in ClassLabel::ALL {
            let lhs = local_factor(&sum, label).unwrap();
            let rhs = local_factor(rho4, label)
                .unwrap()
                .mul(&local_factor(rho5, label).unwrap());
            assert_eq!(lhs, rhs, "at {label}");
        }
    }

    #[test]
    fn omega_identity_passes() {
        let rep = omega_factor_identity_check().unwrap();
        assert!(rep.pass, "{rep}");
    }

    #[test]
    fn mu_factor_matches_exact_ratio_at_sample_points() {
        // ((1+X)/(1-X))^2 equals the factor ratio at rational sample points.
        let num = pm_poly(1, 2, 1);
        let den = pm_poly(3, 0, 1);
        for (p, k) in [(2i64, 1i64), (3, 1), (5, 2), (7, 3)] {
            let x = rat(1, p.pow(k as u32));
            // L-factors invert the polynomials, so the L-ratio is num/den.
            let lhs = num.eval(&x) / den.eval(&x);
            let mu = {
                let r = (rat_int(1) + &x) / (rat_int(1) - &x);
                &r * &r
            };
            assert_eq!(lhs, mu);
        }
    }

    #[test]
    fn taylor_coefficients_are_4n() {
        let rep = taylor_positivity_check(50);
        assert!(rep.pass, "{rep}");
        // n = 1 -> 4, n = 10 -> 40 are covered by the coefficient sweep;
        // a deliberately wrong target must fail.
        let bad = taylor_positivity_check(0);
        assert!(bad.pass); // n_max = 0 checks only the constant term
    }
}
