use std::collections::BTreeMap;
use std::fmt::Write as _;

use nefkit::diagonal::{DelPezzoRow, ScanReport};
use nefkit::exactnum::{decimal, decimal_vec, ExactInt};
use nefkit::verdict::{Reason, Verdict};
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
}

/// A cone generator with its coordinates and a label combination.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Generator {
    #[serde(with = "decimal_vec")]
    pub coordinates: Vec<ExactInt>,
    pub class: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Payload {
    Integer {
        #[serde(with = "decimal")]
        value: ExactInt,
    },
    ChernDegrees {
        /// `deg(c_k h^(n-k))` for `k = 0..=n`.
        #[serde(with = "decimal_vec")]
        degrees: Vec<ExactInt>,
    },
    Betti {
        #[serde(with = "decimal_vec")]
        betti: Vec<ExactInt>,
        poincare: String,
    },
    Verdict {
        verdict: Verdict,
    },
    Cones {
        variety: String,
        codim: u32,
        basis: Vec<String>,
        effective: Vec<Generator>,
        nef: Vec<Generator>,
    },
    Scan {
        report: ScanReport,
    },
    Table {
        rows: Vec<DelPezzoRow>,
    },
}

/// Everything a command prints. JSON output is key-sorted and carries no
/// timestamps, so equal inputs give byte-identical output.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub inputs: BTreeMap<String, String>,
    pub result: Payload,
    pub provenance: Vec<String>,
}

impl Report {
    pub fn new(command: &str, result: Payload) -> Self {
        Self {
            command: command.to_string(),
            inputs: BTreeMap::new(),
            result,
            provenance: Vec::new(),
        }
    }

    pub fn input(mut self, key: &str, value: impl ToString) -> Self {
        self.inputs.insert(key.to_string(), value.to_string());
        self
    }

    pub fn note(mut self, note: impl Into<String>) -> Self {
        self.provenance.push(note.into());
        self
    }
}

pub fn emit(report: &Report, format: Format) -> String {
    match format {
        Format::Json => {
            // going through Value sorts every object's keys
            let value = serde_json::to_value(report).expect("reports serialize");
            let mut out = serde_json::to_string_pretty(&value).expect("values serialize");
            out.push('\n');
            out
        }
        Format::Text => text(report),
    }
}

fn witness(reason: &Reason) -> Option<String> {
    match reason {
        Reason::NegativeSelfIntersection { euler } => Some(format!("deg c_n = {euler} < 0")),
        Reason::ProjectionBound { euler, bound } => Some(format!("deg c_n = {euler} > {bound}")),
        Reason::NegativeEffectivePair { a, b, value } => Some(format!("{a} . {b} = {value}")),
        Reason::KnownException { entry } => Some(entry.clone()),
        Reason::OpenQuestion { reference } => Some(reference.clone()),
        _ => None,
    }
}

fn generators(out: &mut String, name: &str, gens: &[Generator]) {
    let _ = writeln!(out, "{name}:");
    for g in gens {
        let coords: Vec<String> = g.coordinates.iter().map(ToString::to_string).collect();
        let _ = writeln!(out, "  {}  ({})", g.class, coords.join(", "));
    }
}

fn text(report: &Report) -> String {
    let mut out = String::new();
    match &report.result {
        Payload::Integer { value } => {
            let _ = writeln!(out, "{value}");
        }
        Payload::ChernDegrees { degrees } => {
            let n = degrees.len().saturating_sub(1);
            for (k, d) in degrees.iter().enumerate() {
                let _ = writeln!(out, "deg c_{k} h^{} = {d}", n - k);
            }
        }
        Payload::Betti { betti, poincare } => {
            for (i, b) in betti.iter().enumerate() {
                let _ = writeln!(out, "b_{i} = {b}");
            }
            let _ = writeln!(out, "p(t) = {poincare}");
        }
        Payload::Verdict { verdict } => {
            let _ = writeln!(out, "{}", verdict.status);
            let _ = writeln!(out, "criterion: {}", verdict.reason.criterion());
            if let Some(w) = witness(&verdict.reason) {
                let _ = writeln!(out, "witness: {w}");
            }
            let _ = writeln!(out, "detail: {}", verdict.detail);
        }
        Payload::Cones { variety, codim, basis, effective, nef } => {
            let _ = writeln!(out, "{variety}, codimension {codim}");
            let _ = writeln!(out, "basis: {}", basis.join(", "));
            generators(&mut out, "pseudoeffective", effective);
            generators(&mut out, "nef", nef);
        }
        Payload::Scan { report } => {
            let _ = writeln!(out, "{report}");
        }
        Payload::Table { rows } => {
            for row in rows {
                let _ = writeln!(out, "degree {}  [{}]  {}", row.degree, row.dimensions, row.model);
            }
        }
    }
    for note in &report.provenance {
        let _ = writeln!(out, "note: {note}");
    }
    out
}
