//! Character-table printing. The seven-class table is printed twice —
//! computed and frozen expected — with a cell-level diff, so drift in
//! either copy is visible. The subgroup and full matrix-group tables
//! are computed only; their shape summaries (class count, degree
//! multiset, sum of squared degrees) are printed alongside.

use quintel::chars::Character;
use quintel::groups::Group;
use quintel::lemmas::{Context, S5_GOLDEN, S5_ROW_NAMES};
use serde_json::{json, Value};
use std::collections::BTreeMap;
use std::sync::Arc;

use crate::output::{emit_json, Format};
use crate::CliError;

struct Table {
    title: &'static str,
    /// Column headers: class label or rep order, plus class size.
    columns: Vec<(String, usize)>,
    /// (row name, rendered values).
    rows: Vec<(String, Vec<String>)>,
}

fn degree_summary(rows: &[Character]) -> (BTreeMap<u64, usize>, u64) {
    let mut multiset: BTreeMap<u64, usize> = BTreeMap::new();
    let mut sum_sq = 0u64;
    for r in rows {
        let d: u64 = r
            .degree()
            .as_rat()
            .and_then(|q| u64::try_from(q.to_integer()).ok())
            .expect("character degrees are small positive integers");
        *multiset.entry(d).or_default() += 1;
        sum_sq += d * d;
    }
    (multiset, sum_sq)
}

fn multiset_string(m: &BTreeMap<u64, usize>) -> String {
    let parts: Vec<String> = m.iter().map(|(d, n)| format!("{d}^{n}")).collect();
    format!("{{{}}}", parts.join(" "))
}

fn render_table(g: &Arc<Group>, rows: &[Character], names: &[String], title: &'static str, labels: Option<&[String]>) -> Table {
    let columns = g
        .classes()
        .iter()
        .enumerate()
        .map(|(j, c)| {
            let head = match labels {
                Some(ls) => ls[j].clone(),
                None => format!("o{}", c.order),
            };
            (head, c.members.len())
        })
        .collect();
    let rows = rows
        .iter()
        .zip(names)
        .map(|(chi, name)| {
            let vals = (0..g.num_classes())
                .map(|j| chi.value(j).to_string())
                .collect();
            (name.clone(), vals)
        })
        .collect();
    Table {
        title,
        columns,
        rows,
    }
}

fn print_text(t: &Table) {
    println!("== {} ==", t.title);
    let name_w = t.rows.iter().map(|(n, _)| n.len()).max().unwrap_or(4).max(5);
    let mut col_w: Vec<usize> = t.columns.iter().map(|(h, _)| h.len()).collect();
    for (_, vals) in &t.rows {
        for (j, v) in vals.iter().enumerate() {
            col_w[j] = col_w[j].max(v.len());
        }
    }
    let pad = |s: &str, w: usize| format!("{s:>w$}");
    let header: Vec<String> = t
        .columns
        .iter()
        .zip(&col_w)
        .map(|((h, _), w)| pad(h, *w))
        .collect();
    println!("{:name_w$}  {}", "class", header.join("  "));
    let sizes: Vec<String> = t
        .columns
        .iter()
        .zip(&col_w)
        .map(|((_, s), w)| pad(&s.to_string(), *w))
        .collect();
    println!("{:name_w$}  {}", "size", sizes.join("  "));
    for (name, vals) in &t.rows {
        let cells: Vec<String> = vals.iter().zip(&col_w).map(|(v, w)| pad(v, *w)).collect();
        println!("{name:name_w$}  {}", cells.join("  "));
    }
}

fn print_tsv(t: &Table) {
    let header: Vec<String> = t.columns.iter().map(|(h, _)| h.clone()).collect();
    println!("{}\t{}", t.title.replace(' ', "-"), header.join("\t"));
    for (name, vals) in &t.rows {
        println!("{name}\t{}", vals.join("\t"));
    }
}

fn table_json(t: &Table) -> Value {
    json!({
        "title": t.title,
        "classes": t.columns.iter().map(|(h, _)| h.clone()).collect::<Vec<_>>(),
        "sizes": t.columns.iter().map(|(_, s)| *s).collect::<Vec<_>>(),
        "rows": t
            .rows
            .iter()
            .map(|(name, vals)| json!({"name": name, "values": vals}))
            .collect::<Vec<_>>(),
    })
}

pub fn cmd_tables(format: Format) -> Result<(), CliError> {
    let ctx = Context::shared();

    let pgl_labels: Vec<String> = ctx.pgl_labels.iter().map(|l| l.name().to_string()).collect();
    let gl2_labels: Vec<String> = ctx
        .gl2_labels
        .iter()
        .zip(ctx.gl2.classes())
        .map(|(l, c)| format!("{}.o{}", l.name(), c.order))
        .collect();

    let row_names: Vec<String> = S5_ROW_NAMES.iter().map(|s| s.to_string()).collect();
    let computed = render_table(
        &ctx.pgl,
        &ctx.table_pgl,
        &row_names,
        "seven-class table (computed)",
        Some(&pgl_labels),
    );
    let expected = Table {
        title: "seven-class table (expected)",
        columns: computed.columns.clone(),
        rows: S5_GOLDEN
            .iter()
            .zip(&row_names)
            .map(|(row, name)| (name.clone(), row.iter().map(|v| v.to_string()).collect()))
            .collect(),
    };
    let mut diffs: Vec<String> = Vec::new();
    for (i, (name, vals)) in computed.rows.iter().enumerate() {
        for (j, v) in vals.iter().enumerate() {
            let want = S5_GOLDEN[i][j].to_string();
            if *v != want {
                diffs.push(format!(
                    "{name} at {}: computed {v}, expected {want}",
                    pgl_labels[j]
                ));
            }
        }
    }

    let n_names: Vec<String> = (0..ctx.table_n.len()).map(|i| format!("chi{i}")).collect();
    let n_table = render_table(&ctx.n, &ctx.table_n, &n_names, "central extension table", None);
    let gl2_names: Vec<String> = (0..ctx.table_gl2.len()).map(|i| format!("chi{i}")).collect();
    let gl2_table = render_table(
        &ctx.gl2,
        &ctx.table_gl2,
        &gl2_names,
        "full matrix group table",
        Some(&gl2_labels),
    );

    let (n_deg, n_sq) = degree_summary(&ctx.table_n);
    let (gl2_deg, gl2_sq) = degree_summary(&ctx.table_gl2);

    match format {
        Format::Text | Format::Tsv => {
            let print = |t: &Table| match format {
                Format::Text => print_text(t),
                _ => print_tsv(t),
            };
            print(&computed);
            print(&expected);
            if diffs.is_empty() {
                println!("diff: computed and expected tables are identical");
            } else {
                for d in &diffs {
                    println!("diff: {d}");
                }
            }
            print(&n_table);
            println!(
                "classes: {}, degrees {}, sum of squares {}",
                ctx.n.num_classes(),
                multiset_string(&n_deg),
                n_sq
            );
            print(&gl2_table);
            println!(
                "classes: {}, degrees {}, sum of squares {}",
                ctx.gl2.num_classes(),
                multiset_string(&gl2_deg),
                gl2_sq
            );
        }
        Format::Json => {
            let doc = json!({
                "seven_class": {
                    "computed": table_json(&computed),
                    "expected": table_json(&expected),
                    "diff": diffs,
                },
                "central_extension": {
                    "table": table_json(&n_table),
                    "degree_multiset": multiset_string(&n_deg),
                    "sum_of_squares": n_sq,
                },
                "full_group": {
                    "table": table_json(&gl2_table),
                    "degree_multiset": multiset_string(&gl2_deg),
                    "sum_of_squares": gl2_sq,
                },
            });
            emit_json(&doc);
        }
    }

    if !diffs.is_empty() {
        return Err(CliError::Failed(format!(
            "{} cell(s) differ between the computed and expected seven-class tables",
            diffs.len()
        )));
    }
    Ok(())
}
