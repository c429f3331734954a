//! The `rif-family/1` JSON file format.
//!
//! ```text
//! {
//!   "format": "rif-family/1",
//!   "n": 7,
//!   "k": 3,
//!   "sets": [
//!     [1, 2, 4],
//!     ...
//!   ]
//! }
//! ```
//!
//! Readers accept any whitespace; inner arrays must be strictly increasing
//! and the outer array sorted lexicographically. The writer always emits the
//! layout above.

use std::fmt::Write as _;
use std::path::Path;

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::family::KSetFamily;

pub const FORMAT_TAG: &str = "rif-family/1";

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFamily {
    format: String,
    n: usize,
    k: usize,
    sets: Vec<Vec<usize>>,
}

pub fn parse_family(text: &str) -> Result<KSetFamily> {
    let raw: RawFamily =
        serde_json::from_str(text).map_err(|e| Error::ParseError(e.to_string()))?;
    if raw.format != FORMAT_TAG {
        return Err(Error::ParseError(format!(
            "format is {:?}, expected {FORMAT_TAG:?}",
            raw.format
        )));
    }
    for s in &raw.sets {
        if s.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvariantViolation(format!(
                "set {s:?} is not strictly increasing"
            )));
        }
    }
    if raw.sets.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::InvariantViolation(
            "sets are not in lexicographic order".into(),
        ));
    }
    KSetFamily::new(raw.n, raw.k, &raw.sets).map_err(|e| Error::InvariantViolation(e.to_string()))
}

pub fn format_family(fam: &KSetFamily) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{{");
    let _ = writeln!(out, "  \"format\": \"{FORMAT_TAG}\",");
    let _ = writeln!(out, "  \"n\": {},", fam.n());
    let _ = writeln!(out, "  \"k\": {},", fam.k());
    if fam.is_empty() {
        let _ = writeln!(out, "  \"sets\": []");
    } else {
        let _ = writeln!(out, "  \"sets\": [");
        let last = fam.len() - 1;
        for (i, s) in fam.iter().enumerate() {
            let items: Vec<String> = s.elements().map(|x| x.to_string()).collect();
            let sep = if i == last { "" } else { "," };
            let _ = writeln!(out, "    [{}]{sep}", items.join(", "));
        }
        let _ = writeln!(out, "  ]");
    }
    out.push_str("}\n");
    out
}

pub fn read_family(path: &Path) -> Result<KSetFamily> {
    let text =
        std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse_family(&text)
}

pub fn write_family(path: &Path, fam: &KSetFamily) -> Result<()> {
    std::fs::write(path, format_family(fam))
        .map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}
