//! Deterministic result reports: JSON and CSV renderings that are
//! byte-identical for identical (config, seed, version).
//!
//! Nothing time-dependent or platform-dependent enters a report; wall
//! time is the caller's business and goes to stderr. All rationals are
//! rendered as exact `p/q` strings and all collections have a fixed
//! order.

use crate::config::JobConfig;
use serde::{Deserialize, Serialize};

/// A complete result document for one command invocation.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Report {
    pub version: String,
    pub command: String,
    pub config: JobConfig,
    pub payload: Payload,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Payload {
    Sectors { rows: Vec<SectorRow> },
    Product(ProductPayload),
    Verify(VerifyPayload),
    Combined { parts: Vec<Payload> },
}

/// One sector line: either graph-side (components, shifts, fixed
/// dimensions) or group-side (centralizer dimension, discrepancies).
/// Unused columns stay empty so every report of a given shape has the
/// same schema.
#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct SectorRow {
    pub sector: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub components: Option<u64>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub shifts: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub fixed_dims: Vec<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub centralizer_dim: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub shift_discrepancy: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub contrast_discrepancy: Option<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ProductPayload {
    pub left_sector: String,
    pub right_sector: String,
    pub product_sector: String,
    pub values: Vec<VertexValue>,
    pub degrees: Vec<String>,
    pub oracle_confirmed: bool,
    pub degree_identity: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct VertexValue {
    pub vertex: String,
    pub value: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct VerifyPayload {
    pub checks: Vec<CheckRow>,
    pub attempted: u64,
    pub passed: u64,
    pub failed: u64,
    pub all_passed: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CheckRow {
    pub name: String,
    pub attempted: u64,
    pub passed: u64,
    pub failed: u64,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub counterexamples: Vec<String>,
}

impl Report {
    pub fn new(command: &str, config: &JobConfig, payload: Payload) -> Self {
        Report {
            version: env!("CARGO_PKG_VERSION").to_string(),
            command: command.to_string(),
            config: config.clone(),
            payload,
        }
    }

    /// True unless some verify payload inside reports a failure.
    pub fn all_passed(&self) -> bool {
        fn walk(p: &Payload) -> bool {
            match p {
                Payload::Verify(v) => v.all_passed,
                Payload::Product(p) => p.oracle_confirmed && p.degree_identity,
                Payload::Sectors { .. } => true,
                Payload::Combined { parts } => parts.iter().all(walk),
            }
        }
        walk(&self.payload)
    }

    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("report serializes");
        out.push('\n');
        out
    }

    /// Flat CSV rendering: a `section` column distinguishes meta rows,
    /// sector rows, product rows, and check rows.
    pub fn to_csv(&self) -> String {
        let mut w = csv::WriterBuilder::new()
            .flexible(true)
            .from_writer(Vec::new());
        w.write_record(["section", "field", "values"]).unwrap();
        w.write_record(["meta", "version", &self.version]).unwrap();
        w.write_record(["meta", "command", &self.command]).unwrap();
        write_payload_csv(&mut w, &self.payload);
        let bytes = w.into_inner().expect("csv buffer");
        String::from_utf8(bytes).expect("csv is utf-8")
    }
}

fn write_payload_csv(w: &mut csv::Writer<Vec<u8>>, payload: &Payload) {
    match payload {
        Payload::Sectors { rows } => {
            w.write_record([
                "sectors",
                "header",
                "sector|components|shifts|fixed_dims|centralizer_dim|discrepancy|contrast",
            ])
            .unwrap();
            for r in rows {
                let fields = [
                    r.sector.clone(),
                    r.components.map(|c| c.to_string()).unwrap_or_default(),
                    r.shifts.join(";"),
                    r.fixed_dims
                        .iter()
                        .map(u64::to_string)
                        .collect::<Vec<_>>()
                        .join(";"),
                    r.centralizer_dim.map(|c| c.to_string()).unwrap_or_default(),
                    r.shift_discrepancy.clone().unwrap_or_default(),
                    r.contrast_discrepancy.clone().unwrap_or_default(),
                ];
                w.write_record(["sectors", "row", &fields.join("|")]).unwrap();
            }
        }
        Payload::Product(p) => {
            w.write_record(["product", "left_sector", &p.left_sector])
                .unwrap();
            w.write_record(["product", "right_sector", &p.right_sector])
                .unwrap();
            w.write_record(["product", "product_sector", &p.product_sector])
                .unwrap();
            for v in &p.values {
                w.write_record(["product", &format!("value@{}", v.vertex), &v.value])
                    .unwrap();
            }
            w.write_record(["product", "degrees", &p.degrees.join(";")])
                .unwrap();
            w.write_record([
                "product",
                "oracle_confirmed",
                &p.oracle_confirmed.to_string(),
            ])
            .unwrap();
            w.write_record([
                "product",
                "degree_identity",
                &p.degree_identity.to_string(),
            ])
            .unwrap();
        }
        Payload::Verify(v) => {
            for c in &v.checks {
                let line = format!(
                    "attempted={} passed={} failed={}{}",
                    c.attempted,
                    c.passed,
                    c.failed,
                    if c.counterexamples.is_empty() {
                        String::new()
                    } else {
                        format!(" counterexamples: {}", c.counterexamples.join(" | "))
                    }
                );
                w.write_record(["verify", &c.name, &line]).unwrap();
            }
            w.write_record([
                "verify",
                "totals",
                &format!(
                    "attempted={} passed={} failed={} all_passed={}",
                    v.attempted, v.passed, v.failed, v.all_passed
                ),
            ])
            .unwrap();
        }
        Payload::Combined { parts } => {
            for p in parts {
                write_payload_csv(w, p);
            }
        }
    }
}

impl VerifyPayload {
    pub fn from_checks(checks: Vec<CheckRow>) -> Self {
        let attempted = checks.iter().map(|c| c.attempted).sum();
        let passed = checks.iter().map(|c| c.passed).sum();
        let failed = checks.iter().map(|c| c.failed).sum();
        VerifyPayload {
            checks,
            attempted,
            passed,
            failed,
            all_passed: failed == 0,
        }
    }
}
