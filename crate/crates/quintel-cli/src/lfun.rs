//! Partial L-values, defect averages, and the mu_Omega product.

use clap::ValueEnum;
use quintel::exactmath::is_prime;
use quintel::lemmas::{Context, Hypothesis};
use quintel::lfun::{mu_omega_partial, partial_l, phi_average, LfunError};
use serde_json::json;

use crate::field::{classify, open_cache, parse_poly};
use crate::output::{emit_json, emit_kv, Format};
use crate::{CliError, LfunCmd, PolyArg, RunConfig};

/// Rows of the seven-class table exposed on the command line.
#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum Rep {
    Trivial,
    Eta,
    Rho4,
    Rho5,
    Rho5eta,
    Rho6,
}

impl Rep {
    fn row_name(self) -> &'static str {
        match self {
            Rep::Trivial => "1",
            Rep::Eta => "eta",
            Rep::Rho4 => "rho4",
            Rep::Rho5 => "rho5",
            Rep::Rho5eta => "rho5eta",
            Rep::Rho6 => "rho6",
        }
    }

    fn flag_name(self) -> &'static str {
        match self {
            Rep::Trivial => "trivial",
            Rep::Eta => "eta",
            Rep::Rho4 => "rho4",
            Rep::Rho5 => "rho5",
            Rep::Rho5eta => "rho5eta",
            Rep::Rho6 => "rho6",
        }
    }
}

fn classify_lfun(e: LfunError) -> CliError {
    match e {
        LfunError::SOutOfDomain(_) => CliError::usage(e),
        LfunError::Quintic(q) => classify(q),
        other => CliError::failed(other),
    }
}

fn cmd_value(cfg: &RunConfig, poly: &PolyArg, rep: Rep, s: f64, pmax: u64) -> Result<(), CliError> {
    let f = parse_poly(poly)?;
    let ctx = Context::shared();
    let row = ctx.pgl_row(rep.row_name()).expect("known row name");
    let mut cache = open_cache(cfg, &f)?;
    let val = partial_l(row, &f, s, pmax, Some(&mut cache)).map_err(classify_lfun)?;
    match cfg.format {
        Format::Json => {
            let mut doc = val.json();
            let obj = doc.as_object_mut().expect("object document");
            obj.insert("rep".into(), json!(rep.flag_name()));
            obj.insert("poly".into(), json!(f.to_coeff_list()));
            emit_json(&doc);
        }
        format => {
            emit_kv(
                format,
                &[
                    ("rep", rep.flag_name().to_string()),
                    ("poly", f.to_coeff_list()),
                    ("s", val.s.to_string()),
                    ("P", val.p_bound.to_string()),
                    ("value", val.decimal.clone()),
                    ("tail_bound", val.tail_bound.to_string()),
                    ("digits", val.digits.to_string()),
                ],
            );
        }
    }
    Ok(())
}

fn cmd_phi_average(cfg: &RunConfig, poly: &PolyArg, nu: &str, pmax: u64) -> Result<(), CliError> {
    let f = parse_poly(poly)?;
    let hyp = Hypothesis::from_name(nu)
        .ok_or_else(|| CliError::Usage(format!("unknown hypothesis {nu:?}; use psi or psi-eta")))?;
    let mut cache = open_cache(cfg, &f)?;
    let avg = phi_average(&f, pmax, hyp, Some(&mut cache)).map_err(classify_lfun)?;
    match cfg.format {
        Format::Json => emit_json(&json!({
            "nu": hyp.name(),
            "poly": f.to_coeff_list(),
            "P": pmax,
            "phi_average": avg,
        })),
        format => emit_kv(
            format,
            &[
                ("nu", hyp.name().to_string()),
                ("poly", f.to_coeff_list()),
                ("P", pmax.to_string()),
                ("phi_average", avg.to_string()),
            ],
        ),
    }
    Ok(())
}

fn cmd_mu_omega(format: Format, primes: &str, s: f64) -> Result<(), CliError> {
    if !(s > 0.0) || !s.is_finite() {
        return Err(CliError::Usage(format!(
            "mu_Omega requires s > 0, got s = {s}"
        )));
    }
    let mut omega: Vec<u64> = Vec::new();
    for tok in primes.split(',') {
        let p: u64 = tok
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("bad prime {tok:?} in Omega")))?;
        if !is_prime(p) {
            return Err(CliError::Usage(format!("{p} is not prime")));
        }
        if omega.contains(&p) {
            return Err(CliError::Usage(format!("{p} repeats in Omega")));
        }
        omega.push(p);
    }
    if omega.is_empty() {
        return Err(CliError::Usage("Omega must be nonempty".to_string()));
    }
    let value = mu_omega_partial(&omega, s);
    match format {
        Format::Json => emit_json(&json!({
            "omega": omega,
            "s": s,
            "mu_omega": value,
        })),
        format => emit_kv(
            format,
            &[
                (
                    "omega",
                    omega
                        .iter()
                        .map(u64::to_string)
                        .collect::<Vec<_>>()
                        .join(","),
                ),
                ("s", s.to_string()),
                ("mu_omega", value.to_string()),
            ],
        ),
    }
    Ok(())
}

pub fn cmd_lfun(cfg: &RunConfig, poly: &PolyArg, what: &LfunCmd) -> Result<(), CliError> {
    match what {
        LfunCmd::Value { rep, s, pmax } => cmd_value(cfg, poly, *rep, *s, *pmax),
        LfunCmd::PhiAverage { nu, pmax } => cmd_phi_average(cfg, poly, nu, *pmax),
        LfunCmd::MuOmega { primes, s } => cmd_mu_omega(cfg.format, primes, *s),
    }
}
