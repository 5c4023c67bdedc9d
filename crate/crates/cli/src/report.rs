use std::fmt::Write as _;
use std::time::Duration;

use serde::Serialize;
use tableau_lab::BigCount;

/// How a mismatch on a row is treated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    /// A proven identity; a mismatch is a bug.
    Theorem,
    /// A conjectured identity.
    Conjecture,
    /// An exploratory comparison whose outcome is reported either way.
    Finding,
}

/// One parameter tuple of a verification run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub claim: String,
    /// `key=value` pairs joined by `;`.
    pub params: String,
    pub lhs: Option<BigCount>,
    pub rhs: Option<BigCount>,
    #[serde(rename = "match")]
    pub matched: Option<bool>,
    #[serde(skip)]
    pub elapsed: Duration,
    pub kind: Kind,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub skipped: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl VerifyReport {
    pub fn compared(claim: &str, params: String, kind: Kind, lhs: BigCount, rhs: BigCount) -> Self {
        VerifyReport {
            claim: claim.to_owned(),
            params,
            matched: Some(lhs == rhs),
            lhs: Some(lhs),
            rhs: Some(rhs),
            elapsed: Duration::ZERO,
            kind,
            skipped: None,
            note: None,
        }
    }

    pub fn skipped(claim: &str, params: String, kind: Kind, reason: String) -> Self {
        VerifyReport {
            claim: claim.to_owned(),
            params,
            lhs: None,
            rhs: None,
            matched: None,
            elapsed: Duration::ZERO,
            kind,
            skipped: Some(reason),
            note: None,
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn is_mismatch(&self) -> bool {
        self.matched == Some(false)
    }
}

pub const CSV_HEADER: &str = "claim,params,lhs,rhs,match,elapsed_ms";

fn fmt_count(c: &Option<BigCount>) -> String {
    c.as_ref().map(ToString::to_string).unwrap_or_default()
}

/// One CSV line per report, after the header. `timing = false` leaves the
/// elapsed column empty so that output is reproducible byte for byte.
pub fn to_csv(reports: &[VerifyReport], timing: bool) -> String {
    let mut out = format!("{CSV_HEADER}\n");
    for r in reports {
        let matched = match r.matched {
            Some(m) => m.to_string(),
            None => "skipped".to_owned(),
        };
        let elapsed = if timing {
            format!("{:.3}", r.elapsed.as_secs_f64() * 1000.0)
        } else {
            String::new()
        };
        writeln!(
            out,
            "{},{},{},{},{},{}",
            r.claim,
            r.params,
            fmt_count(&r.lhs),
            fmt_count(&r.rhs),
            matched,
            elapsed
        )
        .unwrap();
    }
    out
}

#[derive(Serialize)]
struct JsonRow<'a> {
    #[serde(flatten)]
    report: &'a VerifyReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    elapsed_ms: Option<f64>,
}

pub fn to_json(reports: &[VerifyReport], timing: bool) -> String {
    let rows: Vec<JsonRow> = reports
        .iter()
        .map(|report| JsonRow {
            report,
            elapsed_ms: timing.then_some(report.elapsed.as_secs_f64() * 1000.0),
        })
        .collect();
    serde_json::to_string_pretty(&rows).expect("reports serialize") + "\n"
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Vec<VerifyReport> {
        vec![
            VerifyReport::compared("eq1", "n=3;form=catalan".into(), Kind::Theorem, 5u64.into(), 5u64.into()),
            VerifyReport::skipped("thm2.1", "w=2;n=12".into(), Kind::Theorem, "m=12 over cap 9".into()),
            VerifyReport::compared("conj2.6", "w=4;m=7".into(), Kind::Conjecture, 104u64.into(), 106u64.into()),
        ]
    }

    #[test]
    fn csv_layout() {
        let csv = to_csv(&sample(), false);
        assert_eq!(
            csv,
            "claim,params,lhs,rhs,match,elapsed_ms\n\
             eq1,n=3;form=catalan,5,5,true,\n\
             thm2.1,w=2;n=12,,,skipped,\n\
             conj2.6,w=4;m=7,104,106,false,\n"
        );
        let timed = to_csv(&sample(), true);
        assert!(timed.lines().nth(1).unwrap().ends_with(",0.000"));
    }

    #[test]
    fn json_mirror() {
        let json: serde_json::Value = serde_json::from_str(&to_json(&sample(), false)).unwrap();
        assert_eq!(json[0]["lhs"], "5");
        assert_eq!(json[0]["match"], true);
        assert_eq!(json[0]["kind"], "theorem");
        assert!(json[0].get("elapsed_ms").is_none());
        assert_eq!(json[1]["match"], serde_json::Value::Null);
        assert_eq!(json[1]["skipped"], "m=12 over cap 9");
        assert_eq!(json[2]["kind"], "conjecture");
        assert!(sample()[2].is_mismatch());
    }
}
