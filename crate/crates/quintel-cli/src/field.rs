//! Field reports: profile, single-prime Frobenius, Chebotarev
//! statistics, and the two theorem hypotheses.

use quintel::exactmath::IntPoly;
use quintel::groups::ClassLabel;
use quintel::quintic::{
    chebotarev_stats, check_theorem_hypotheses, field_profile, frobenius_class, ChebotarevStats,
    FrobCache, FrobeniusRecord, QuinticError,
};
use serde_json::json;

use crate::output::{emit_json, emit_kv, Format};
use crate::{CliError, FieldCmd, PolyArg, RunConfig};

pub(crate) fn parse_poly(arg: &PolyArg) -> Result<IntPoly, CliError> {
    IntPoly::parse_coeff_list(&arg.poly).map_err(CliError::usage)
}

/// Input-shaped failures are usage errors; everything else is a
/// computation failure.
pub(crate) fn classify(e: QuinticError) -> CliError {
    match e {
        QuinticError::NotMonicQuintic(_)
        | QuinticError::NotSquarefree
        | QuinticError::IrreducibilityNotCertified { .. }
        | QuinticError::Poly(_)
        | QuinticError::Factor(_) => CliError::usage(e),
        QuinticError::Label(_) | QuinticError::Cache(_) => CliError::failed(e),
    }
}

pub(crate) fn open_cache(cfg: &RunConfig, f: &IntPoly) -> Result<FrobCache, CliError> {
    std::fs::create_dir_all(&cfg.cache_dir).map_err(CliError::failed)?;
    FrobCache::open(&cfg.cache_dir, f).map_err(CliError::failed)
}

fn record_json(rec: &FrobeniusRecord) -> serde_json::Value {
    json!({
        "p": rec.p,
        "ramified": rec.is_ramified(),
        "partition": rec.partition.clone(),
        "class": rec.class.map(|c| c.name()),
    })
}

fn cmd_profile(format: Format, f: &IntPoly) -> Result<(), CliError> {
    let profile = field_profile(f).map_err(classify)?;
    let primes: Vec<String> = profile.ramified_primes.iter().map(u64::to_string).collect();
    match format {
        Format::Json => {
            emit_json(&json!({
                "poly": f.to_coeff_list(),
                "disc": profile.disc.to_string(),
                "signature": [profile.r1, profile.r2],
                "conjugation": profile.conjugation.name(),
                "ramified_primes": profile.ramified_primes,
                "unfactored_cofactor": profile.unfactored_cofactor.as_ref().map(|c| c.to_string()),
            }));
        }
        _ => {
            let mut pairs = vec![
                ("polynomial", profile.f.to_string()),
                ("coefficients", f.to_coeff_list()),
                ("disc", profile.disc.to_string()),
                ("signature", format!("({}, {})", profile.r1, profile.r2)),
                ("conjugation", profile.conjugation.name().to_string()),
                ("ramified primes", primes.join(", ")),
            ];
            if let Some(c) = &profile.unfactored_cofactor {
                pairs.push(("unfactored cofactor", c.to_string()));
            }
            emit_kv(format, &pairs);
        }
    }
    Ok(())
}

fn cmd_frobenius(format: Format, f: &IntPoly, p: u64) -> Result<(), CliError> {
    let rec = frobenius_class(f, p).map_err(classify)?;
    match format {
        Format::Json => emit_json(&record_json(&rec)),
        Format::Tsv => println!("{rec}"),
        Format::Text => {
            let desc = match rec.class {
                Some(class) => format!("partition [{}], class {}", rec.partition_string(), class),
                None => "ramified".to_string(),
            };
            println!("p = {}: {desc}", rec.p);
        }
    }
    Ok(())
}

fn stats_rows(stats: &ChebotarevStats) -> Vec<(ClassLabel, u64, f64, f64, f64, f64, bool)> {
    ClassLabel::ALL
        .into_iter()
        .map(|l| {
            (
                l,
                stats.count(l),
                stats.frequency(l),
                ChebotarevStats::density_f64(l),
                stats.deviation(l),
                stats.tolerance(l),
                stats.deviation(l) < stats.tolerance(l),
            )
        })
        .collect()
}

fn cmd_chebotarev(cfg: &RunConfig, f: &IntPoly, pmax: u64) -> Result<(), CliError> {
    let mut cache = open_cache(cfg, f)?;
    let stats = chebotarev_stats(f, pmax, Some(&mut cache)).map_err(classify)?;
    let rows = stats_rows(&stats);
    match cfg.format {
        Format::Json => {
            emit_json(&json!({
                "poly": f.to_coeff_list(),
                "pmax": stats.pmax,
                "processed": stats.processed,
                "ramified_skipped": stats.ramified_skipped,
                "classes": rows
                    .iter()
                    .map(|(l, n, freq, dens, dev, tol, ok)| json!({
                        "class": l.name(),
                        "count": n,
                        "frequency": freq,
                        "density": ChebotarevStats::density(*l).to_string(),
                        "density_f64": dens,
                        "deviation": dev,
                        "tolerance": tol,
                        "within_tolerance": ok,
                    }))
                    .collect::<Vec<_>>(),
                "all_within_tolerance": stats.all_within_tolerance(),
            }));
        }
        Format::Tsv => {
            println!("class\tcount\tfrequency\tdensity\tdeviation\ttolerance\twithin");
            for (l, n, freq, dens, dev, tol, ok) in &rows {
                println!(
                    "{}\t{}\t{:.6}\t{:.6}\t{:.6}\t{:.6}\t{}",
                    l.name(),
                    n,
                    freq,
                    dens,
                    dev,
                    tol,
                    ok
                );
            }
        }
        Format::Text => {
            println!(
                "p <= {}: {} unramified primes, {} ramified skipped",
                stats.pmax,
                stats.processed,
                stats.ramified_skipped.len()
            );
            println!(
                "{:<5} {:>9} {:>10} {:>10} {:>10} {:>10}  within",
                "class", "count", "frequency", "density", "deviation", "tolerance"
            );
            for (l, n, freq, dens, dev, tol, ok) in &rows {
                println!(
                    "{:<5} {:>9} {:>10.6} {:>10.6} {:>10.6} {:>10.6}  {}",
                    l.name(),
                    n,
                    freq,
                    dens,
                    dev,
                    tol,
                    if *ok { "yes" } else { "NO" }
                );
            }
            println!(
                "all classes within tolerance: {}",
                if stats.all_within_tolerance() {
                    "yes"
                } else {
                    "NO"
                }
            );
        }
    }
    Ok(())
}

fn cmd_hypotheses(format: Format, f: &IntPoly) -> Result<(), CliError> {
    let rep = check_theorem_hypotheses(f).map_err(classify)?;
    let frob5 = match rep.frob5.class {
        Some(c) => format!("Frob_5 = {c}"),
        None => "5 is ramified".to_string(),
    };
    let odd = rep
        .evidence
        .odd_witness
        .map(|(p, c)| format!("p = {p} gives {c}"));
    match format {
        Format::Json => {
            emit_json(&json!({
                "poly": f.to_coeff_list(),
                "disc": rep.profile.disc.to_string(),
                "signature": [rep.profile.r1, rep.profile.r2],
                "conjugation": rep.profile.conjugation.name(),
                "hypothesis_1_conjugation_2b": rep.conjugation_is_2b,
                "frob5": record_json(&rep.frob5),
                "hypothesis_2_frob5_2b": rep.frob5_is_2b,
                "evidence": {
                    "five_cycle_at": rep.evidence.five_cycle,
                    "odd_witness": rep.evidence.odd_witness.map(|(p, c)| json!([p, c.name()])),
                    "search_bound": rep.evidence.search_bound,
                    "certifies_s5": rep.evidence.certifies_s5(),
                },
            }));
        }
        _ => {
            let pairs = vec![
                ("disc", rep.profile.disc.to_string()),
                (
                    "signature",
                    format!("({}, {})", rep.profile.r1, rep.profile.r2),
                ),
                (
                    "(1) conjugation in 2B",
                    format!(
                        "{} (conjugation = {})",
                        if rep.conjugation_is_2b { "pass" } else { "fail" },
                        rep.profile.conjugation
                    ),
                ),
                (
                    "(2) Frob_5 in 2B",
                    format!(
                        "{} ({frob5})",
                        if rep.frob5_is_2b { "pass" } else { "fail" }
                    ),
                ),
                (
                    "5-cycle witness",
                    rep.evidence
                        .five_cycle
                        .map(|p| format!("p = {p}"))
                        .unwrap_or_else(|| "none found".to_string()),
                ),
                (
                    "odd-class witness",
                    odd.unwrap_or_else(|| "none found".to_string()),
                ),
                (
                    "Galois group certified S5",
                    if rep.evidence.certifies_s5() {
                        "yes".to_string()
                    } else {
                        format!("not within p <= {}", rep.evidence.search_bound)
                    },
                ),
            ];
            emit_kv(format, &pairs);
        }
    }
    Ok(())
}

pub fn cmd_field(cfg: &RunConfig, poly: &PolyArg, what: &FieldCmd) -> Result<(), CliError> {
    let f = parse_poly(poly)?;
    match what {
        FieldCmd::Profile => cmd_profile(cfg.format, &f),
        FieldCmd::Frobenius { p } => cmd_frobenius(cfg.format, &f, *p),
        FieldCmd::Chebotarev { pmax } => cmd_chebotarev(cfg, &f, *pmax),
        FieldCmd::Hypotheses => cmd_hypotheses(cfg.format, &f),
    }
}
