//! JSON, CSV and plain-text renderings of claim records.

use std::io::Write;

use serde::Serialize;

use super::{ClaimRecord, ClaimStatus};
use crate::error::Result;

/// One CSV line per evidence row.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CsvRow {
    pub claim_id: String,
    pub params: String,
    pub n: usize,
    pub value: Option<u128>,
    pub reference_value: Option<u128>,
    pub status: String,
}

impl CsvRow {
    pub fn from_records(records: &[ClaimRecord]) -> Vec<CsvRow> {
        let mut out = Vec::new();
        for r in records {
            for e in &r.evidence {
                let status = if e.holds {
                    r.status.label()
                } else {
                    match r.status {
                        ClaimStatus::VerifiedFromThreshold { .. } => "small_n_exception",
                        ClaimStatus::ThresholdNotReached => "not_holding",
                        ClaimStatus::Skipped { .. } => "skipped",
                        _ => "mismatch",
                    }
                };
                out.push(CsvRow {
                    claim_id: r.claim_id.clone(),
                    params: r.params.to_string(),
                    n: e.n,
                    value: e.value,
                    reference_value: e.reference_value,
                    status: status.to_string(),
                });
            }
        }
        out
    }
}

pub fn write_csv(records: &[ClaimRecord], out: impl Write) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    // Written explicitly so an empty report still has a header.
    w.write_record(["claim_id", "params", "n", "value", "reference_value", "status"])?;
    let opt = |v: Option<u128>| v.map(|x| x.to_string()).unwrap_or_default();
    for row in CsvRow::from_records(records) {
        w.write_record([
            row.claim_id,
            row.params,
            row.n.to_string(),
            opt(row.value),
            opt(row.reference_value),
            row.status,
        ])?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_json(records: &[ClaimRecord], mut out: impl Write) -> Result<()> {
    serde_json::to_writer_pretty(&mut out, records)?;
    writeln!(out)?;
    Ok(())
}

/// One line per record: id, params, status and the row tally.
pub fn summary_table(records: &[ClaimRecord]) -> String {
    let id_w = records.iter().map(|r| r.claim_id.len()).max().unwrap_or(0).max(8);
    let p_w = records.iter().map(|r| r.params.to_string().len()).max().unwrap_or(0).max(6);
    let mut s = format!("{:id_w$}  {:p_w$}  {:>7}  status\n", "claim", "params", "rows");
    for r in records {
        let holding = r.evidence.iter().filter(|e| e.holds).count();
        let tally = format!("{holding}/{}", r.evidence.len());
        s.push_str(&format!("{:id_w$}  {:p_w$}  {tally:>7}  {}\n", r.claim_id, r.params.to_string(), r.status));
    }
    s
}
