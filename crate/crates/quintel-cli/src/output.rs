//! Output plumbing shared by the commands. Results go to stdout;
//! diagnostics go to stderr. JSON uses sorted keys throughout, so
//! re-parsing and re-serializing a document is byte-identical.

use clap::ValueEnum;
use serde_json::Value;

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Tsv,
}

/// One stdout document per invocation.
pub fn emit_json(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("serializable"));
}

/// Key-value lines: aligned in text mode, raw two-column rows in TSV.
pub fn emit_kv(format: Format, pairs: &[(&str, String)]) {
    match format {
        Format::Text => {
            let width = pairs.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
            for (k, v) in pairs {
                println!("{k:width$}  {v}");
            }
        }
        Format::Tsv => {
            for (k, v) in pairs {
                println!("{k}\t{v}");
            }
        }
        Format::Json => unreachable!("JSON paths emit structured documents"),
    }
}
